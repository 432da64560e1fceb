#!/usr/bin/env python3
"""Independent numpy/brute-force oracle for the frozen values in the C++ tests.

Nothing here shares code with the library: the dodecahedron table, the states
and the contractions are rebuilt from scratch (einsum / enumeration).  Run it
to regenerate the constants quoted in tests/*.cpp.
"""
import itertools
from collections import Counter

import numpy as np

TABLE1 = [1, 1, 1, 1, 1, -1, -1, 1, 1, -1, -1, 1, 1, 1, 1, 1,
          1, 1, -1, -1, 1, -1, 1, -1, -1, 1, -1, 1, -1, -1, 1, 1]
AME62 = [-1, -1, -1, 1, -1, 1, 1, 1, -1, -1, -1, 1, 1, -1, -1, -1,
         -1, -1, 1, -1, -1, 1, -1, -1, 1, 1, -1, 1, -1, 1, -1, -1,
         -1, 1, -1, -1, -1, -1, 1, -1, 1, -1, 1, 1, -1, -1, 1, -1,
         1, -1, -1, -1, 1, 1, 1, -1, 1, -1, -1, -1, -1, -1, -1, 1]


def dodecahedron():
    u = lambda k: 5 + k % 5
    l = lambda k: 10 + k % 5
    b = lambda k: 15 + k % 5
    faces = [[0, 1, 2, 3, 4]]
    faces += [[i, u(i), l(i), u(i + 1), (i + 1) % 5] for i in range(5)]
    faces += [[u(i + 1), l(i), b(i), b(i + 1), l(i + 1)] for i in range(5)]
    faces.append([15, 19, 18, 17, 16])
    return faces


def rank_mod(rows, p):
    m = [list(r) for r in rows]
    rank, cols = 0, len(m[0]) if m else 0
    for c in range(cols):
        piv = next((r for r in range(rank, len(m)) if m[r][c] % p), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][c], p - 2, p)
        m[rank] = [x * inv % p for x in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][c] % p:
                f = m[r][c]
                m[r] = [(x - f * y) % p for x, y in zip(m[r], m[rank])]
        rank += 1
    return rank


def entropy(psi, n, d, a):
    t = psi.reshape([d] * n)
    b = [i for i in range(n) if i not in a]
    mat = np.transpose(t, list(a) + b).reshape(d ** len(a), -1)
    ev = np.linalg.eigvalsh(mat @ mat.T)
    ev = ev[ev > 1e-12]
    return float(-(ev * np.log2(ev)).sum())


def rs_generator(p):
    k = (p + 1) // 2
    cols = [[pow(x, r, p) if (x or r) else 1 for r in range(k)] for x in range(p)]
    cols.append([0] * (k - 1) + [1])
    return [[cols[c][r] for c in range(p + 1)] for r in range(k)]


def main():
    g = rs_generator(11)
    print("RS(11) rows:", g)
    print("RS(11) rank:", rank_mod(g, 11))
    print("RS(11) 6-column subsets of rank 6:",
          sum(rank_mod([[row[c] for c in s] for row in g], 11) == 6
              for s in itertools.combinations(range(12), 6)))

    faces = dodecahedron()
    checks = [sum(1 << v for v in f) for f in faces]
    code = [w for w in range(1 << 20)
            if all(bin(w & h).count("1") % 2 == 0 for h in checks)]
    print("D2 codewords:", len(code))
    print("D2 weight distribution:",
          sorted(Counter(bin(w).count("1") for w in code).items()))

    code_np = np.array(code, dtype=np.int64)
    full = (1 << 20) - 1
    for m in range(1, 11):
        masks = np.array([sum(1 << v for v in a)
                          for a in itertools.combinations(range(20), m)], dtype=np.int64)
        za = np.zeros(len(masks), dtype=np.int64)
        zb = np.zeros(len(masks), dtype=np.int64)
        for c in code_np:
            za += (c & masks) == 0
            zb += (c & (full ^ masks)) == 0
        s = 8 - np.log2(za).round().astype(int) - np.log2(zb).round().astype(int)
        print("D2 exhaustive m=%d:" % m, sorted(Counter(s.tolist()).items()))

    # D1 by explicit product over faces, vertex 0 is the most significant bit
    n = 20
    idx = np.arange(1 << n)
    bits = [(idx >> (n - 1 - v)) & 1 for v in range(n)]
    amp = np.ones(1 << n)
    for f in faces:
        key = np.zeros(1 << n, dtype=np.int64)
        for v in f:
            key = key * 2 + bits[v]
        amp *= np.array(TABLE1)[key]
    d1 = amp / np.linalg.norm(amp)
    for name, a in [("P1", [0, 1, 2, 3, 4]),
                    ("P1+opposite", [0, 1, 2, 3, 4, 15, 16, 17, 18, 19]),
                    ("first10", list(range(10))),
                    ("first7", list(range(7))),
                    ("evens", list(range(0, 20, 2)))]:
        print("D1 entropy %s:" % name, round(entropy(d1, 20, 2, a), 9))

    # hovering state through einsum, hover qubit is the last site of each cell
    t62 = np.array(AME62, dtype=float).reshape([2] * 6)
    letters = "abcdefghijklmnopqrst"
    hover = "ABCDEFGHIJKL"
    expr = ",".join("".join(letters[v] for v in f) + hover[a]
                    for a, f in enumerate(faces)) + "->" + hover
    out = np.einsum(expr, *([t62] * 12), optimize="greedy").reshape(-1)
    out = out / np.linalg.norm(out)
    print("hovering amp[0], amp[1], amp[4095]:", out[0], out[1], out[4095])
    print("hovering nonzero:", int(np.count_nonzero(np.abs(out) > 1e-12)))
    ents = Counter(round(entropy(out, 12, 2, list(a)), 6)
                   for a in itertools.combinations(range(12), 6))
    print("hovering 6|6 entropies:", sorted(ents.items()))


if __name__ == "__main__":
    main()
