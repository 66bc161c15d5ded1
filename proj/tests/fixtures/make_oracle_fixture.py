#!/usr/bin/env python3
"""Generate padic_oracle.json, the independent cross-check fixture.

Every case is built from polynomials whose p-adic invariants are known on
independent grounds (no Montes machinery anywhere):

  * linear x - a:                 1 factor, e = 1, f = 1, ind = 0
  * Eisenstein at p:              1 factor, e = deg, f = 1, ind = 0
    (Z[x]/(f) is maximal at p for an Eisenstein polynomial)
  * irreducible modulo p:         1 factor, e = 1, f = deg, ind = 0
    (Dedekind: p does not divide the index when f mod p is squarefree;
    irreducibility mod p is certified by sympy's finite-field factorization)

For a product of pairwise distinct such blocks,
    ind(f) = sum_{i<j} v_p(Res(b_i, b_j)),
with the resultants computed exactly by sympy. The golden quartic family
cases carry the published worked-example values instead.
"""
import json
import random
import sympy as sp

x = sp.symbols("x")
random.seed(20260808)


def vp(n, p):
    n = int(n)
    assert n != 0
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def coeffs_low_to_high(poly):
    P = sp.Poly(sp.expand(poly), x)
    return [str(int(c)) for c in reversed(P.all_coeffs())]


def random_linear(p):
    return x - random.randint(-12, 12)


def random_eisenstein(p, d):
    # x^d + p*a_{d-1} x^{d-1} + ... + p*a_1 x + c0 with v_p(c0) = 1
    cs = [p * random.randint(-3, 3) for _ in range(d - 1)]
    c0 = p * random.choice([u for u in range(-5, 6) if u % p != 0 and u != 0])
    return x**d + sum(cs[i - 1] * x**i for i in range(1, d)) + c0


def random_unramified(p, d):
    while True:
        poly = x**d + sum(random.randint(0, p - 1) * x**i for i in range(d))
        fl = sp.factor_list(sp.Poly(poly, x, modulus=p))
        if len(fl[1]) == 1 and fl[1][0][1] == 1 and sp.Poly(fl[1][0][0], x).degree() == d:
            return poly


cases = []

# the published worked-example family (p = 2): values from the source text
golden = [
    ((4, 8, 4), [(4, 4, 1)], 3),
    ((8, 8, 4), [(4, 4, 1)], 3),
    ((4, 8, 28), [(4, 2, 2)], 4),
    ((4, 8, 12), [(2, 2, 1), (2, 2, 1)], 4),
]
for (a, b, c), facs, ind in golden:
    poly = x**4 + a * x**2 + b * x + c
    cases.append({
        "p": 2,
        "coefficients": coeffs_low_to_high(poly),
        "polynomial": str(sp.expand(poly)),
        "factors": [{"degree": d, "e": e, "f": f} for (d, e, f) in sorted(facs)],
        "ind": ind,
        "source": "published worked example, quartic family over Q_2",
    })

# 20 random composites of independently-understood blocks, degree <= 6
kinds = ["lin", "eis", "unr"]
made = 0
while made < 20:
    p = random.choice([2, 3, 5])
    nblocks = random.randint(1, 3)
    blocks = []
    total = 0
    for _ in range(nblocks):
        kind = random.choice(kinds)
        if kind == "lin":
            b, inv = random_linear(p), (1, 1, 1)
        elif kind == "eis":
            d = random.randint(2, 4)
            b, inv = random_eisenstein(p, d), (d, d, 1)
        else:
            d = random.randint(2, 3)
            b, inv = random_unramified(p, d), (d, 1, d)
        if total + inv[0] > 6:
            continue
        blocks.append((sp.expand(b), inv))
        total += inv[0]
    if not blocks:
        continue
    polys = [b for b, _ in blocks]
    if len(set(map(str, polys))) != len(polys):
        continue
    ind = 0
    ok = True
    for i in range(len(polys)):
        for j in range(i + 1, len(polys)):
            r = sp.resultant(polys[i], polys[j], x)
            if r == 0:
                ok = False
                break
            ind += vp(r, p)
        if not ok:
            break
    if not ok:
        continue
    f = sp.expand(sp.prod(polys))
    cases.append({
        "p": p,
        "coefficients": coeffs_low_to_high(f),
        "polynomial": str(f),
        "factors": [{"degree": d, "e": e, "f": fd} for b, (d, e, fd) in
                    sorted(blocks, key=lambda t: (t[1][0], t[1][1], t[1][2]))],
        "ind": ind,
        "source": "product of %d independently-derived blocks" % len(blocks),
    })
    made += 1

with open("padic_oracle.json", "w") as fh:
    json.dump({"cases": cases}, fh, indent=1)
print("wrote", len(cases), "cases")
