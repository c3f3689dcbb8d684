"""Finite fields F_q, q = p^r, with a designated primitive element.

Two encodings of an element are used throughout:

* **value form**: an integer ``0 <= v < q`` whose base-``p`` digits are the
  coefficients (ascending degree) of the element as a polynomial in the
  residue class of ``x`` modulo the defining polynomial.  For prime fields the
  value is just the residue.  Words and matrices are stored in value form.
* **idx form** (``FieldElem``): ``0`` is the zero element and ``j`` in
  ``1..q-1`` is ``alpha**j``; in particular ``q-1`` is the identity.  The
  scalar operations ``add``/``mul``/``neg``/``inv`` act on idx form.

``field.log[v]`` converts value to idx form and ``field.exp[j]`` converts back.
"""

from dataclasses import dataclass
from itertools import product

import numpy as np

from .errors import DivisionByZero, FieldError, NotIrreducible, NotPrime, NotPrimitive

MAX_ORDER = 2**16


def is_prime(n):
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def smallest_primitive_root(p):
    if p == 2:
        return 1
    factors = [f for f in range(2, p) if (p - 1) % f == 0 and is_prime(f)]
    for g in range(2, p):
        if all(pow(g, (p - 1) // f, p) != 1 for f in factors):
            return g
    raise NotPrimitive(f"no primitive root modulo {p}")


def _poly_mod(a, m, p):
    """Remainder of coefficient list ``a`` modulo the monic list ``m`` over F_p."""
    a = [int(c) % p for c in a]
    dm = len(m) - 1
    for top in range(len(a) - 1, dm - 1, -1):
        c = a[top]
        if c:
            for i, mi in enumerate(m):
                a[top - dm + i] = (a[top - dm + i] - c * mi) % p
    rem = a[:dm]
    return rem + [0] * (dm - len(rem))


def _is_irreducible(poly, p):
    r = len(poly) - 1
    for d in range(1, r // 2 + 1):
        for low in product(range(p), repeat=d):
            f = list(low) + [1]
            rem = _poly_mod(poly, f, p)
            if not any(rem):
                return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Parameters of F_{p^r}.

    ``primitive_poly`` holds the ``r+1`` ascending coefficients of a monic
    primitive polynomial (empty for ``r == 1``).  ``alpha`` is given in value
    form; ``None`` selects the smallest primitive root (prime fields) or the
    class of ``x`` (extension fields).
    """

    p: int
    r: int = 1
    primitive_poly: tuple = ()
    alpha: int = None


class GaloisField:
    """Log/antilog and addition tables for F_q built from a ``FieldSpec``."""

    def __init__(self, spec):
        p, r = spec.p, spec.r
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        if r < 1:
            raise FieldError("extension degree must be positive")
        q = p**r
        if q > MAX_ORDER:
            raise FieldError(f"field order {q} exceeds {MAX_ORDER}")
        self.p, self.r, self.q = p, r, q

        if r == 1:
            poly = ()
            alpha = smallest_primitive_root(p) if spec.alpha is None else spec.alpha
            if not 1 <= alpha < p:
                raise NotPrimitive(f"alpha={alpha} is not a nonzero element of F_{p}")
        else:
            poly = tuple(int(c) % p for c in spec.primitive_poly)
            if len(poly) != r + 1 or poly[-1] != 1:
                raise FieldError(f"primitive_poly must be monic with {r + 1} coefficients")
            if not _is_irreducible(poly, p):
                raise NotIrreducible(f"polynomial {poly} is reducible over F_{p}")
            alpha = p if spec.alpha is None else spec.alpha
            if not 0 < alpha < q:
                raise NotPrimitive(f"alpha={alpha} is not a nonzero element of F_{q}")
        self.poly = poly
        self.alpha = alpha
        self.spec = FieldSpec(p, r, poly, alpha)

        # exp[j] = value of alpha^j for j = 1..q-1; exp[0] = 0 encodes the zero element
        exp = [0] * q
        cur = 1
        for j in range(1, q):
            cur = self._value_mul_poly(cur, alpha)
            exp[j] = cur
            if cur == 1 and j < q - 1:
                raise NotPrimitive(f"alpha={alpha} has order {j}, not {q - 1}")
        if exp[q - 1] != 1:
            raise NotPrimitive(f"alpha={alpha} does not generate the multiplicative group")
        log = [0] * q
        for j in range(1, q):
            log[exp[j]] = j
        self.exp = tuple(exp)
        self.log = tuple(log)

        vadd = np.zeros((q, q), dtype=np.int64)
        for a in range(q):
            for b in range(q):
                vadd[a, b] = self.from_coeffs(
                    [(x + y) % p for x, y in zip(self.coeffs(a), self.coeffs(b))]
                )
        self.vadd = vadd
        vmul = np.zeros((q, q), dtype=np.int64)
        for a in range(1, q):
            for b in range(1, q):
                vmul[a, b] = exp[(log[a] + log[b] - 1) % (q - 1) + 1]
        self.vmul = vmul
        self.vneg = np.array([self.from_coeffs([(-c) % p for c in self.coeffs(a)]) for a in range(q)])
        log_arr = np.array(log)
        exp_arr = np.array(exp)
        self.add_table = log_arr[vadd[exp_arr[:, None], exp_arr[None, :]]]

    # -- encodings -------------------------------------------------------

    def coeffs(self, v):
        """Coefficient vector (length r, ascending) of a value-form element."""
        out = []
        for _ in range(self.r):
            v, c = divmod(v, self.p)
            out.append(c)
        return tuple(out)

    def from_coeffs(self, cs):
        v = 0
        for c in reversed(list(cs)):
            v = v * self.p + int(c) % self.p
        return v

    def _value_mul_poly(self, a, b):
        if self.r == 1:
            return a * b % self.p
        prod = [0] * (2 * self.r - 1)
        for i, x in enumerate(self.coeffs(a)):
            if x:
                for j, y in enumerate(self.coeffs(b)):
                    prod[i + j] = (prod[i + j] + x * y) % self.p
        return self.from_coeffs(_poly_mod(prod, self.poly, self.p))

    def to_idx(self, v):
        return self.log[v]

    def to_value(self, j):
        return self.exp[j]

    # -- idx-form arithmetic ---------------------------------------------

    def _check(self, a):
        if not 0 <= a < self.q:
            raise FieldError(f"{a} is not an element index of F_{self.q}")

    def add(self, a, b):
        self._check(a)
        self._check(b)
        return int(self.add_table[a, b])

    def mul(self, a, b):
        self._check(a)
        self._check(b)
        if a == 0 or b == 0:
            return 0
        return (a + b - 1) % (self.q - 1) + 1

    def neg(self, a):
        self._check(a)
        return self.log[int(self.vneg[self.exp[a]])]

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def inv(self, a):
        self._check(a)
        if a == 0:
            raise DivisionByZero("zero has no inverse")
        return (-a - 1) % (self.q - 1) + 1

    def power(self, a, e):
        self._check(a)
        if a == 0:
            return 0 if e > 0 else self.q - 1
        return (a * e - 1) % (self.q - 1) + 1

    # -- value-form helpers used by the code and ideal modules -----------

    def value_add(self, x, y):
        return int(self.vadd[x, y])

    def value_mul(self, x, y):
        return int(self.vmul[x, y])

    def value_neg(self, x):
        return int(self.vneg[x])

    def value_inv(self, x):
        if x == 0:
            raise DivisionByZero("zero has no inverse")
        return self.exp[self.inv(self.log[x])]

    def add_words(self, u, v):
        return tuple(int(self.vadd[a, b]) for a, b in zip(u, v))

    def sub_words(self, u, v):
        return tuple(int(self.vadd[a, self.vneg[b]]) for a, b in zip(u, v))

    def scale_word(self, c, u):
        return tuple(int(self.vmul[c, a]) for a in u)

    def matmul(self, A, B):
        """Matrix product over F_q of value-form integer arrays."""
        A = np.asarray(A, dtype=np.int64)
        B = np.asarray(B, dtype=np.int64)
        if A.ndim != 2 or B.ndim != 2 or A.shape[1] != B.shape[0]:
            raise ValueError(f"cannot multiply shapes {A.shape} and {B.shape}")
        if self.r == 1:
            return (A @ B) % self.p
        out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
        for l in range(A.shape[1]):
            out = self.vadd[out, self.vmul[A[:, l][:, None], B[l][None, :]]]
        return out

    def __eq__(self, other):
        return isinstance(other, GaloisField) and self.spec == other.spec

    def __hash__(self):
        return hash(self.spec)

    def __repr__(self):
        if self.r == 1:
            return f"GF({self.p}, alpha={self.alpha})"
        return f"GF({self.p}^{self.r}, poly={self.poly}, alpha={self.alpha})"


def build_field(spec):
    return GaloisField(spec)


def GF(p, r=1, poly=(), alpha=None):
    """Shorthand: ``GF(7)``, ``GF(3, 2, poly=(2, 1, 1))``."""
    return GaloisField(FieldSpec(p, r, tuple(poly), alpha))
