"""Regenerate the bundled design catalog (run from the repository root).

Writes the three qubit design files under src/designent/data/ as Bloch-triple
documents and prints the frame-potential deviations plus the frozen
orientation axis used by the sweep command for the snub cube (the normalized
midpoint of one edge of the square face around +z).

The octahedron and icosahedron coordinates are closed-form.  The deformed
snub cube is the orbit of a seed vertex under the 24 proper cube rotations;
the seed's squared coordinates are the roots of 105 u^3 - 105 u^2 + 21 u - 1,
taken in decreasing order, which makes the orbit an exact 7-design up to
float rounding.
"""

import itertools
import json
from math import comb, cos, pi, sin, sqrt
from pathlib import Path

import numpy as np

OUT_DIR = Path(__file__).resolve().parent.parent / "src" / "designent" / "data"


def octahedron_bloch():
    return [
        [0.0, 0.0, 1.0],
        [0.0, 0.0, -1.0],
        [1.0, 0.0, 0.0],
        [-1.0, 0.0, 0.0],
        [0.0, 1.0, 0.0],
        [0.0, -1.0, 0.0],
    ]


def icosahedron_bloch():
    z = 1.0 / sqrt(5.0)
    r = 2.0 / sqrt(5.0)
    rows = [[0.0, 0.0, 1.0]]
    for k in range(5):
        a = 2.0 * pi * k / 5.0
        rows.append([r * cos(a), r * sin(a), z])
    for k in range(5):
        a = 2.0 * pi * k / 5.0 + pi / 5.0
        rows.append([r * cos(a), r * sin(a), -z])
    rows.append([0.0, 0.0, -1.0])
    return rows


def proper_cube_rotations():
    mats = []
    for perm in itertools.permutations(range(3)):
        P = np.zeros((3, 3))
        for i, j in enumerate(perm):
            P[i, j] = 1.0
        for signs in itertools.product((1.0, -1.0), repeat=3):
            R = np.diag(signs) @ P
            if np.linalg.det(R) > 0:
                mats.append(R)
    assert len(mats) == 24
    return mats


def snub_cube_bloch():
    roots = np.roots([105.0, -105.0, 21.0, -1.0])
    assert np.max(np.abs(roots.imag)) < 1e-12
    a, b, c = np.sort(roots.real)[::-1]
    seed = np.array([sqrt(a), sqrt(b), sqrt(c)])
    verts = np.array([R @ seed for R in proper_cube_rotations()])
    verts = np.array(sorted(map(tuple, verts), reverse=True))
    assert len({tuple(np.round(v, 12)) for v in verts}) == 24
    return verts


def frame_deviations(bloch, t):
    B = np.asarray(bloch, dtype=float)
    overlap = 0.5 * (1.0 + B @ B.T)  # |<a|b>|^2 for qubit Bloch vectors
    K = len(B)
    out = []
    for s in range(1, t + 1):
        phi = np.sum(overlap**s) / K**2
        target = 1.0 / comb(s + 1, s)
        out.append((s, phi, target, abs(phi - target)))
    return out


def square_edge_axis(verts):
    verts = np.asarray(verts, dtype=float)
    top = verts[np.abs(verts[:, 2] - verts[:, 2].max()) < 1e-12]
    assert len(top) == 4, "square face around +z should hold four vertices"
    top = np.array(sorted(map(tuple, top), reverse=True))
    dots = top[1:] @ top[0]
    mate = top[1:][np.argmax(dots)]
    axis = top[0] + mate
    return axis / np.linalg.norm(axis)


def write(name, degree, bloch):
    OUT_DIR.mkdir(parents=True, exist_ok=True)
    doc = {
        "label": name,
        "dimension": 2,
        "degree": degree,
        "bloch": [[float(x) for x in row] for row in np.asarray(bloch)],
    }
    path = OUT_DIR / f"{name}.json"
    path.write_text(json.dumps(doc, indent=1) + "\n")
    worst = max(dev for _, _, _, dev in frame_deviations(bloch, degree))
    print(f"{name}: K={len(bloch)} t={degree} max frame deviation {worst:.3g} -> {path}")


def main():
    write("octahedron", 3, octahedron_bloch())
    write("icosahedron", 5, icosahedron_bloch())
    snub = snub_cube_bloch()
    write("snub_cube_deformed", 7, snub)
    axis = square_edge_axis(snub)
    print("snub cube sweep orientation 2 (square edge midpoint):")
    print("  (" + ", ".join(format(x, ".17g") for x in axis) + ")")


if __name__ == "__main__":
    main()
