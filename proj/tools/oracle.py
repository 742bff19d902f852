#!/usr/bin/env python3
"""Independent reference values for the C++ test-suite.

Each check uses a method unrelated to the library's own: sympy for Groebner
bases, brute-force Borel moves, Betti numbers from the homology of upper
Koszul simplicial complexes, and the exponent count done by direct
enumeration. Run it and compare against the frozen constants in tests/.
"""

import itertools
import json

import numpy as np
import sympy as sp


def monomials(nvars, degree):
    for c in itertools.combinations_with_replacement(range(nvars), degree):
        e = [0] * nvars
        for i in c:
            e[i] += 1
        yield tuple(e)


def divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def in_ideal(gens, t):
    return any(divides(g, t) for g in gens)


def is_borel(gens, nvars, top):
    for d in range(top + 1):
        for t in monomials(nvars, d):
            if not in_ideal(gens, t):
                continue
            for j in range(nvars):
                for i in range(j):
                    if t[j] == 0:
                        continue
                    u = list(t)
                    u[j] -= 1
                    u[i] += 1
                    if not in_ideal(gens, tuple(u)):
                        return False
    return True


def reduced_homology_ranks(faces, top_dim):
    """Ranks of reduced homology over Q of the complex given by `faces`."""
    by_dim = {k: sorted(f for f in faces if len(f) == k + 1) for k in range(-1, top_dim + 1)}
    index = {k: {f: i for i, f in enumerate(v)} for k, v in by_dim.items()}

    def boundary_rank(k):
        if k < 0 or not by_dim.get(k) or not by_dim.get(k - 1):
            return 0
        m = np.zeros((len(by_dim[k - 1]), len(by_dim[k])))
        for j, f in enumerate(by_dim[k]):
            for s in range(len(f)):
                g = f[:s] + f[s + 1:]
                m[index[k - 1][g], j] = (-1) ** s
        return np.linalg.matrix_rank(m)

    ranks = {}
    for k in range(-1, top_dim + 1):
        n_k = len(by_dim.get(k, []))
        ranks[k] = n_k - boundary_rank(k) - boundary_rank(k + 1)
    return ranks


def betti_upper_koszul(gens, nvars):
    """beta_{i,j}(I) = sum over multidegrees a of degree j of
    dim H~_{i-1}(K^a), K^a = {squarefree F : x^(a-F) in I}."""
    top = [max(g[k] for g in gens) + 1 for k in range(nvars)]
    betti = {}
    for a in itertools.product(*(range(t + 1) for t in top)):
        faces = set()
        for size in range(nvars + 1):
            for f in itertools.combinations(range(nvars), size):
                b = list(a)
                ok = True
                for k in f:
                    b[k] -= 1
                    ok = ok and b[k] >= 0
                if ok and in_ideal(gens, tuple(b)):
                    faces.add(f)
        if not faces:
            continue
        for k, r in reduced_homology_ranks(faces, nvars - 1).items():
            if r:
                key = (k + 1, sum(a))
                betti[key] = betti.get(key, 0) + int(r)
    return betti


def exponents_by_count(gens, l):
    """Exponents from degree counts of a lex-segment ideal in x, y."""
    n = len(gens)
    lam_top = max(g[1] for g in gens if g[0] == 0)
    top = lam_top - n + 2
    beta0 = {}
    for g in gens:
        beta0[sum(g)] = beta0.get(sum(g), 0) + 1
    e = []
    for alpha in range(1, top):
        e += [alpha] * (beta0.get(alpha + n - 2, 0) - beta0.get(alpha + n - 1, 0))
    return e + [top] * (l - len(e))


def mt19937_64(seed):
    mask = (1 << 64) - 1
    n, m = 312, 156
    state = [seed & mask]
    for i in range(1, n):
        state.append((6364136223846793005 * (state[-1] ^ (state[-1] >> 62)) + i) & mask)
    index = n
    while True:
        if index >= n:
            for i in range(n):
                x = (state[i] & 0xFFFFFFFF80000000) | (state[(i + 1) % n] & 0x7FFFFFFF)
                xa = x >> 1
                if x & 1:
                    xa ^= 0xB5026F5AA96619E9
                state[i] = state[(i + m) % n] ^ xa
            index = 0
        y = state[index]
        index += 1
        y ^= (y >> 29) & 0x5555555555555555
        y ^= (y << 17) & 0x71D67FFFEDA60000
        y ^= (y << 37) & 0xFFF7EEE000000000
        y ^= y >> 43
        yield y & mask


def uniform_entries(seed, bound, count):
    mask = (1 << 64) - 1
    span = 2 * bound + 1
    limit = mask - mask % span
    out = []
    for x in mt19937_64(seed):
        if len(out) == count:
            return out
        if x < limit:
            out.append(x % span - bound)


def main():
    x, y, z, w = sp.symbols("x y z w")
    out = {}

    g = sp.groebner([x**2, x * y + y**2], x, y, order="grevlex")
    out["groebner_x2_xy_y2"] = [str(p) for p in g.exprs]

    I = sp.groebner([x**4 - y**2 * z**2, x * y**2 - y * z**2 - z**3], x, y, z, order="grevlex")
    out["groebner_quartic_curve"] = [str(p) for p in I.exprs]

    b = [(4, 0, 0), (3, 1, 0), (2, 2, 0), (1, 4, 0), (0, 6, 0)]
    out["borel_five_lines_rgin"] = is_borel(b, 3, 8)
    out["borel_x2_xy_y3_z"] = is_borel([(2, 0, 0), (1, 1, 0), (0, 0, 1)], 3, 4)

    betti = betti_upper_koszul(b, 3)
    out["betti_five_lines_rgin"] = {f"{i},{j}": v for (i, j), v in sorted(betti.items())}
    b2 = [(4, 0, 0), (3, 1, 0), (2, 2, 0), (1, 4, 0), (0, 5, 0), (1, 3, 2)]
    out["betti_nonfree_rgin"] = {f"{i},{j}": v for (i, j), v in sorted(betti_upper_koszul(b2, 3).items())}

    out["exponents_five_lines_rgin"] = exponents_by_count([(4, 0), (3, 1), (2, 2), (1, 4), (0, 6)], 3)

    out["uniform_entries_2024"] = uniform_entries(2024, 10, 8)

    print(json.dumps(out, indent=2))


if __name__ == "__main__":
    main()
