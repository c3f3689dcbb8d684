"""
Finite fields and linear codes
==============================

Build GF(9) from a primitive polynomial, look at its log/exp tables, then
load a few small codes from ``codes/`` and compute their parameters.
"""

from pathlib import Path

import numpy as np

from codeideal import GF
from codeideal.cli import parse_code_spec

HERE = Path(__file__).parent

# GF(9) = F_3[x] / (x^2 + x + 2); alpha is the class of x, value 3 = (0, 1)
F9 = GF(3, 2, poly=(2, 1, 1))
print(F9)
print("exp table (idx -> value):", list(F9.exp))
print("coefficients of alpha^j:")
for j in range(1, F9.q):
    print(f"  alpha^{j} = {F9.coeffs(F9.exp[j])}")

# scalar arithmetic works on idx form: 0 is zero, j is alpha^j, q-1 is one
a, b = 3, 5
print(f"alpha^{a} * alpha^{b} = alpha^{F9.mul(a, b)}")
print(f"alpha^{a} + alpha^{b} = alpha^{F9.add(a, b)}")
print(f"1 / alpha^{a} = alpha^{F9.inv(a)}")

# codes from text files: generator rows plus the field header
for name in ["f7_3_2", "ternary_6_3", "f9_3_2", "ternary_7_2_5"]:
    code = parse_code_spec(HERE / "codes" / f"{name}.code")
    words = code.enumerate_codewords()
    weights = np.count_nonzero(words, axis=1)
    print(f"{name}: [n,k,d] = [{code.n},{code.k},{code.d}], t = {code.t}, "
          f"{len(words)} codewords, weight histogram {np.bincount(weights).tolist()}")

# the parity-check matrix annihilates every codeword
code = parse_code_spec(HERE / "codes" / "ternary_7_2_5.code")
syndromes = [code.syndrome(tuple(int(x) for x in w)) for w in code.enumerate_codewords()]
print("all syndromes zero:", all(not any(s) for s in syndromes))
