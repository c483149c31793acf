#!/usr/bin/env python3
"""Regenerate the algebra-description fixtures under fixtures/.

Requires sympy. The C++ loader re-validates every file, so this script only
has to produce the raw data (minimal polynomial, generator images, cocycle).
"""
import json
import os
import sys

from sympy import (Poly, QQ, Rational, I, cbrt, minimal_polynomial, rem,
                   root, sqrt, symbols, to_number_field)

X = symbols("X")
OUT = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "fixtures")


def rat(q):
    q = Rational(q)
    return str(q.p) if q.q == 1 else f"{q.p}/{q.q}"


def lit(p, n):
    """NFElem literal: coefficients constant term first, padded to n."""
    p = Poly(p, X, domain=QQ)
    cs = list(reversed(p.all_coeffs())) if not p.is_zero else []
    cs = cs + [0] * (n - len(cs))
    return [rat(c) for c in cs[:n]]


def reduce(p, m):
    return Poly(rem(Poly(p, X, domain=QQ), m), X, domain=QQ)


def write(name, m, sqrt_md, d, autos, G, alpha, cocycle, hint, note):
    n = m.degree()
    desc = {
        "name": name,
        "note": note,
        "min_poly": lit(m.as_expr(), n + 1),
        "sqrt_minus_d": lit(sqrt_md.as_expr(), n),
        "d": rat(d),
        "automorphisms": {k: lit(v.as_expr(), n) for k, v in autos.items()},
        "group_G": G,
        "alpha": alpha,
        "cocycle": {f"{s},{r}": lit(v.as_expr(), n) for (s, r), v in cocycle.items()},
        "embedding_hint": [f"{hint[0]:.12f}", f"{hint[1]:.12f}"],
        "precision": {"default_bits": 128, "max_bits": 4096},
    }
    path = os.path.join(OUT, f"{name}.json")
    with open(path, "w") as fh:
        json.dump(desc, fh, indent=2)
        fh.write("\n")
    print("wrote", path)


def cyclic_cocycle(G, gamma, one):
    """xi(s^a, s^b) = gamma if a + b >= |G| else 1, G listed as powers of s."""
    order = len(G)
    return {(G[a], G[b]): (gamma if a + b >= order else one)
            for a in range(order) for b in range(order)}


def cyclotomic_autos(m, exps):
    return {("id" if a == 1 else f"s{a}"): reduce(X**a, m) for a in exps}


def main():
    os.makedirs(OUT, exist_ok=True)
    one = Poly(1, X, domain=QQ)

    # Q(i): G trivial.
    m = Poly(X**2 + 1, X, domain=QQ)
    write("FIX-TRIV", m, Poly(X, X, domain=QQ), 1,
          {"id": Poly(X, X, domain=QQ), "a": Poly(-X, X, domain=QQ)},
          ["id"], "a", {("id", "id"): one}, (0.0, 1.0),
          "B = k = Q(i), tau = complex conjugation")

    # Q(zeta_8) over Q(i), cyclic of degree 2.
    m = Poly(X**4 + 1, X, domain=QQ)
    autos = cyclotomic_autos(m, [1, 3, 5, 7])
    i8 = Poly(X**2, X, domain=QQ)
    write("FIX-E8", m, i8, 1, autos, ["id", "s5"], "s7",
          cyclic_cocycle(["id", "s5"], i8, one), (0.7071067811865, 0.7071067811865),
          "Q(zeta_8)/Q(i), xi(s5,s5) = i")
    gamma = Poly((3 + 4 * X**2) / 5, X, domain=QQ)
    write("FIX-E8-DIV", m, i8, 1, autos, ["id", "s5"], "s7",
          cyclic_cocycle(["id", "s5"], gamma, one), (0.7071067811865, 0.7071067811865),
          "Q(zeta_8)/Q(i), xi(s5,s5) = (3+4i)/5 (quaternion division algebra)")

    # Real quadratic k = Q(sqrt 2): d = -2.
    m = Poly(X**2 - 2, X, domain=QQ)
    write("FIX-REAL", m, Poly(X, X, domain=QQ), -2,
          {"id": Poly(X, X, domain=QQ), "a": Poly(-X, X, domain=QQ)},
          ["id"], "a", {("id", "id"): one}, (1.41421356237, 0.0),
          "B = k = Q(sqrt 2), d = -2")

    # Splitting field of x^3 - 2 over Q(sqrt -3); G = C3, alpha does not commute.
    cb, s3 = cbrt(2), sqrt(-3)
    th = cb + s3
    m = minimal_polynomial(th, X, polys=True)
    pc = Poly(to_number_field(cb, th).coeffs(), X, domain=QQ)
    ps = Poly(to_number_field(s3, th).coeffs(), X, domain=QQ)
    zeta = (Poly(-1, X, domain=QQ) + ps) * Rational(1, 2)
    autos = {}
    for k in range(3):
        for sgn, suffix in ((1, ""), (-1, "a")):
            img = reduce(zeta**k * pc + ps * sgn, m)
            name = ("id" if k == 0 else ("s" if k == 1 else "s2")) + suffix
            if name == "ida":
                name = "a"
            autos[name] = img
    write("FIX-S3", m, ps, 3, autos, ["id", "s", "s2"], "a",
          {(s, r): one for s in ["id", "s", "s2"] for r in ["id", "s", "s2"]},
          (1.259921049895, 1.732050807569),
          "Q(2^(1/3), sqrt -3)/Q(sqrt -3), trivial cocycle; condition fails")

    # Q(2^(1/4), i) over Q(i); G = C4, alpha does not commute.
    q4 = root(2, 4)
    th = q4 + I
    m = minimal_polynomial(th, X, polys=True)
    pq = Poly(to_number_field(q4, th).coeffs(), X, domain=QQ)
    pi = Poly(to_number_field(I, th).coeffs(), X, domain=QQ)
    autos = {}
    for k in range(4):
        for sgn, suffix in ((1, ""), (-1, "a")):
            img = reduce(pi**k * pq + pi * sgn, m)
            name = ["id", "s", "s2", "s3"][k] + suffix
            if name == "ida":
                name = "a"
            autos[name] = img
    G = ["id", "s", "s2", "s3"]
    write("FIX-D4", m, pi, 1, autos, G, "a", cyclic_cocycle(G, pi, one),
          (1.189207115003, 1.0),
          "Q(2^(1/4), i)/Q(i), cyclic cocycle gamma = i; condition fails")

    # Q(zeta_16) over Q(i); G = <x -> x^5> cyclic of order 4.
    m = Poly(X**8 + 1, X, domain=QQ)
    autos = cyclotomic_autos(m, [1, 3, 5, 7, 9, 11, 13, 15])
    i16 = Poly(X**4, X, domain=QQ)
    G = ["id", "s5", "s9", "s13"]
    write("FIX-C16", m, i16, 1, autos, G, "s15", cyclic_cocycle(G, i16, one),
          (0.923879532511, 0.382683432365),
          "Q(zeta_16)/Q(i), cyclic cocycle gamma = i")
    gamma = Poly((3 + 4 * X**4) / 5, X, domain=QQ)
    write("FIX-C16-DIV", m, i16, 1, autos, G, "s15", cyclic_cocycle(G, gamma, one),
          (0.923879532511, 0.382683432365),
          "Q(zeta_16)/Q(i), cyclic cocycle gamma = (3+4i)/5")

    # Q(zeta_24) over Q(i); G = {1,5,13,17} Klein four, bicyclic cocycle.
    m = Poly(X**8 - X**4 + 1, X, domain=QQ)
    autos = cyclotomic_autos(m, [1, 5, 7, 11, 13, 17, 19, 23])
    i24 = reduce(X**6, m)
    exps = {"id": (0, 0), "s5": (1, 0), "s13": (0, 1), "s17": (1, 1)}
    g1, g2, w = Poly(-1, X, domain=QQ), i24, Poly(-1, X, domain=QQ)
    coc = {}
    for s, (a1, b1) in exps.items():
        for r, (a2, b2) in exps.items():
            v = one
            if a1 and a2:
                v = v * g1
            if b1 and b2:
                v = v * g2
            if b1 and a2:
                v = v * w
            coc[(s, r)] = reduce(v.as_expr(), m)
    write("FIX-C24", m, i24, 1, autos, list(exps), "s23", coc,
          (0.965925826289, 0.258819045103),
          "Q(zeta_24)/Q(i), G Klein four, bicyclic cocycle with twist")


if __name__ == "__main__":
    sys.exit(main())
