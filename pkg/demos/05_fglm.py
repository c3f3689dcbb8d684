"""
Changing monomial order with FGLM
=================================

The closed-form bases are lex.  Decoding wants degrevlex, and FGLM walks the
standard monomials of the lex basis to build the degrevlex one without a
fresh Buchberger run.  The two routes give the same reduced basis.
"""

import time

import numpy as np

from codeideal import (
    GF,
    LinearCode,
    MonomialOrder,
    RankDeficient,
    buchberger,
    code_ideal_generators,
    code_ideal_lex_gb,
    fglm,
    standard_monomials,
)

rng = np.random.default_rng(3)
F = GF(5)

rows = []
while len(rows) < 6:
    G = rng.integers(0, 5, size=(2, 6))
    try:
        code = LinearCode(F, G)
    except RankDeficient:
        continue
    lex = code_ideal_lex_gb(code)
    target = MonomialOrder.degrevlex(code.n)

    t0 = time.perf_counter()
    via_fglm = fglm(lex, target)
    t1 = time.perf_counter()
    direct = buchberger(code_ideal_generators(code).generators, target)
    t2 = time.perf_counter()

    rows.append((code.d, len(lex), len(via_fglm), via_fglm == direct,
                 len(standard_monomials(via_fglm)), t1 - t0, t2 - t1))

print(" d  |lex|  |drl|  same  #std   fglm(s)  buchberger(s)")
for d, nl, nd, same, ns, tf, tb in rows:
    print(f"{d:2d}  {nl:5d}  {nd:5d}  {str(same):5s} {ns:5d}  {tf:8.4f}  {tb:8.4f}")
