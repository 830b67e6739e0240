#!/usr/bin/env python3
"""Brute-force face lattices for small point configurations.

Independent of the LP machinery in core/: facets are found by testing every
affinely independent r-subset of the (projected) points for a supporting
hyperplane, cross-checked against qhull, and the lattice is obtained by
intersecting faces with facets level by level.

Usage: hull_oracle.py OUTDIR
"""

import itertools
import json
import math
import sys
from pathlib import Path

import numpy as np
from scipy.spatial import ConvexHull

TOL = 1e-9


def symmetric_moment(k, n):
    ts = [2.0 * math.pi * j / n for j in range(n)]
    pts = []
    for t in ts:
        row = []
        for m in range(1, 2 * k, 2):
            row += [math.cos(m * t), math.sin(m * t)]
        pts.append(row)
    return np.array(pts)


def moment(d, n):
    ts = np.linspace(-1.0, 1.0, n)
    return np.array([[t ** p for p in range(1, d + 1)] for t in ts])


def affine_rank(pts):
    if len(pts) <= 1:
        return 0
    diff = pts[1:] - pts[0]
    s = np.linalg.svd(diff, compute_uv=False)
    return int(np.sum(s > TOL * max(1.0, s[0])))


def project_to_affine_hull(pts):
    center = pts.mean(axis=0)
    u, s, vt = np.linalg.svd(pts - center)
    r = int(np.sum(s > TOL * max(1.0, s[0])))
    return (pts - center) @ vt[:r].T, r


def brute_force_facets(pts, r):
    n = len(pts)
    facets = set()
    for sub in itertools.combinations(range(n), r):
        p0 = pts[sub[0]]
        diff = pts[list(sub[1:])] - p0
        _, s, vt = np.linalg.svd(diff)
        if len(s) < r - 1 or (r > 1 and s[-1] < 1e-7):
            continue
        normal = vt[-1]
        vals = (pts - p0) @ normal
        if np.all(vals >= -TOL) or np.all(vals <= TOL):
            mask = 0
            on = []
            for i, v in enumerate(vals):
                if abs(v) <= TOL:
                    mask |= 1 << i
                    on.append(i)
            if affine_rank(pts[on]) == r - 1:
                facets.add(mask)
    return facets


def qhull_facets(pts):
    hull = ConvexHull(pts)
    groups = {}
    for simplex, eq in zip(hull.simplices, hull.equations):
        key = tuple(np.round(eq, 7))
        groups.setdefault(key, 0)
        for i in simplex:
            groups[key] |= 1 << int(i)
    # qhull may drop coplanar points from a facet's simplices; restore them
    out = set()
    for key in groups:
        normal = np.array(key[:-1])
        offset = key[-1]
        vals = pts @ normal + offset
        mask = 0
        for i, v in enumerate(vals):
            if abs(v) <= 1e-6:
                mask |= 1 << i
        out.add(mask)
    return out


def bits(mask):
    return [i for i in range(mask.bit_length()) if mask >> i & 1]


def face_lattice(pts):
    proj, r = project_to_affine_hull(pts)
    facets = brute_force_facets(proj, r)
    if r >= 2:
        q = qhull_facets(proj)
        if q != facets:
            raise RuntimeError("qhull and brute force disagree on facets")
    levels = {r - 1: set(facets)}
    for dim in range(r - 1, 0, -1):
        nxt = set()
        for f in levels[dim]:
            for g in facets:
                h = f & g
                if h == 0 or h == f:
                    continue
                if h in nxt:
                    continue
                if affine_rank(proj[bits(h)]) == dim - 1:
                    nxt.add(h)
        levels[dim - 1] = nxt
    faces = []
    for dim, masks in levels.items():
        for m in masks:
            faces.append((dim, bits(m)))
    faces.sort(key=lambda f: (f[0], len(f[1]), f[1]))
    return faces, r


def write_fixture(path, n, k, curve, pts):
    faces, r = face_lattice(pts)
    fvec = [0] * r
    for dim, _ in faces:
        fvec[dim] += 1
    doc = {
        "n": n,
        "k": k,
        "curve": curve,
        "affine_dim": r,
        "f_vector": fvec,
        "faces": [f[1] for f in faces],
        "dims": [f[0] for f in faces],
    }
    path.write_text(json.dumps(doc, separators=(",", ":")) + "\n")
    print(f"{path.name}: dim {r}, f = {fvec}")


def main():
    out = Path(sys.argv[1] if len(sys.argv) > 1 else Path(__file__).parent)
    out.mkdir(parents=True, exist_ok=True)
    for n in (6, 12, 18, 24, 30, 36):
        write_fixture(out / f"b4_n{n}.json", n, 2, "symmetric_moment", symmetric_moment(2, n))
    for n in (12, 24):
        write_fixture(out / f"b6_n{n}.json", n, 3, "symmetric_moment", symmetric_moment(3, n))
    write_fixture(out / "cyclic4_n8.json", 8, 2, "moment", moment(4, 8))


if __name__ == "__main__":
    main()
