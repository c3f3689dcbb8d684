"""Binomial ideals attached to a linear code.

* the code ideal ``I(C)`` in ``x_1..x_n`` (prime fields only),
* the generalized code ideal ``I+(C)`` in ``x_{i,j}``, ``1 <= j <= q-1``, with
  ``x_{i,j}`` stored at flat index ``(i-1)(q-1) + (j-1)``,
* toric ideals ``I_A`` and the bridge ``I(C) = I_{H'(p)}|_{y=1}``.
"""

from dataclasses import dataclass
from itertools import product

import numpy as np

from .errors import DegenerateCode, NotPrimeField, NotStandardForm
from .groebner import GroebnerBasis, buchberger, eliminate, reduce_basis
from .monomial import Binomial, MonomialOrder, code_names, generalized_names


def _require_prime(code):
    if code.field.r != 1:
        raise NotPrimeField(f"the code ideal needs a prime field, got q = {code.q}")


def _values(word):
    return tuple(int(a) for a in word)


# -- crossing maps and phi -------------------------------------------------

class Crossing:
    """The crossing map ``F_q^n -> {0,1}^{n(q-1)}`` and its left inverse."""

    def __init__(self, field, n):
        self.field = field
        self.n = n
        self.width = field.q - 1

    @property
    def nvars(self):
        return self.n * self.width

    def var(self, i, j):
        """Flat index of ``x_{i,j}`` (0-based coordinate ``i``, exponent ``1 <= j <= q-1``)."""
        return i * self.width + (j - 1)

    def up(self, word):
        out = [0] * self.nvars
        for i, a in enumerate(_values(word)):
            if a:
                out[self.var(i, self.field.log[a])] = 1
        return tuple(out)

    def down(self, v):
        f = self.field
        if len(v) != self.nvars:
            raise ValueError(f"expected {self.nvars} exponents, got {len(v)}")
        word = []
        for i in range(self.n):
            acc = 0
            for j in range(1, self.width + 1):
                c = v[self.var(i, j)] % f.p
                for _ in range(c):
                    acc = f.value_add(acc, f.exp[j])
            word.append(acc)
        return tuple(word)

    def names(self):
        return generalized_names(self.n, self.field.q)


def cross_up(field, word):
    return Crossing(field, len(word)).up(word)


def cross_down(field, v):
    return Crossing(field, len(v) // (field.q - 1)).down(v)


def _phi_table(field):
    """Value -> (b_1..b_r) with ``beta = sum b_s alpha^(q-r-1+s)``."""
    q, r, p = field.q, field.r, field.p
    basis = [field.exp[q - r - 1 + s] for s in range(1, r + 1)]
    table = {}
    for bs in product(range(p), repeat=r):
        acc = 0
        for b, e in zip(bs, basis):
            term = field.value_mul(b, e)
            acc = field.value_add(acc, term)
        table[acc] = bs
    return table


def phi(field, beta):
    """Coordinates of ``beta`` in the basis ``alpha^(q-r), ..., alpha^(q-1)``, left-padded to length q-1."""
    bs = _phi_table(field)[int(beta)]
    return (0,) * (field.q - 1 - field.r) + bs


def phi_s(field, word):
    table = _phi_table(field)
    pad = (0,) * (field.q - 1 - field.r)
    out = ()
    for a in word:
        out += pad + table[int(a)]
    return out


# -- code ideal ------------------------------------------------------------

@dataclass(frozen=True)
class CodeIdealGens:
    variables: int
    rows: tuple
    relations: tuple

    @property
    def generators(self):
        return self.rows + self.relations


def code_ideal_generators(code):
    """``x^{g} - 1`` for each generator row plus ``x_i^p - 1``."""
    _require_prime(code)
    n, p = code.n, code.field.p
    order = MonomialOrder.lex(n)
    zero = (0,) * n
    rows = []
    for g in code.G:
        b = Binomial.make(_values(g), zero, order)
        if b is not None:
            rows.append(b)
    rel = tuple(Binomial.make(tuple(p if j == i else 0 for j in range(n)), zero, order) for i in range(n))
    return CodeIdealGens(n, tuple(rows), rel)


def _unpermute_code_basis(code, elements, names):
    """Relabel a basis computed on standard-form columns back to the original columns."""
    perm = code.col_perm
    n = code.n

    def back(u):
        out = [0] * n
        for j, c in enumerate(perm):
            out[c] = u[j]
        return tuple(out)

    order = MonomialOrder.lex(n, ranking=perm)
    els = tuple(Binomial(back(b.lead), back(b.tail)) for b in elements)
    return GroebnerBasis(order, els, reduced=True, names=names)


def code_ideal_lex_gb(code, allow_permutation=True):
    """Reduced lex basis ``{x_i - x^{m_i}} ∪ {x_i^p - 1 : i > k}`` read off the standard form.

    For a non-systematic code the basis is computed on the permuted columns
    and relabelled, so its lex ranking follows ``code.col_perm``.
    """
    _require_prime(code)
    if not code.systematic and not allow_permutation:
        raise NotStandardForm("generator matrix needs a column permutation")
    n, k, p = code.n, code.k, code.field.p
    f = code.field
    els = []
    for i in range(k):
        lead = tuple(1 if j == i else 0 for j in range(n))
        tail = (0,) * k + tuple(f.value_neg(int(a)) for a in code.M[i])
        els.append(Binomial(lead, tail))
    for i in range(k, n):
        els.append(Binomial(tuple(p if j == i else 0 for j in range(n)), (0,) * n))
    return _unpermute_code_basis(code, els, code_names(n))


# -- generalized code ideal ------------------------------------------------

@dataclass(frozen=True)
class GenCodeIdealGens:
    variables: int
    I_G: tuple
    I_q: tuple

    @property
    def generators(self):
        return self.I_G + self.I_q


def generalized_ideal_generators(code):
    """Generators ``x^{up(alpha^j g_i)} - 1`` and the additive relations of F_q per coordinate."""
    f = code.field
    cx = Crossing(f, code.n)
    N = cx.nvars
    order = MonomialOrder.lex(N)
    zero = (0,) * N
    I_G = []
    for g in code.G:
        for j in range(1, f.q):
            b = Binomial.make(cx.up(f.scale_word(f.exp[j], _values(g))), zero, order)
            if b is not None:
                I_G.append(b)
    I_q = []
    for i in range(code.n):
        for u in range(1, f.q):
            for v in range(u, f.q):
                s = f.value_add(f.exp[u], f.exp[v])
                left = [0] * N
                left[cx.var(i, u)] += 1
                left[cx.var(i, v)] += 1
                right = [0] * N
                if s:
                    right[cx.var(i, f.log[s])] = 1
                I_q.append(Binomial.make(tuple(left), tuple(right), order))
    return GenCodeIdealGens(N, tuple(I_G), tuple(I_q))


def _unpermute_generalized(code, elements):
    perm = code.col_perm
    cx = Crossing(code.field, code.n)
    w = cx.width

    def back(u):
        out = [0] * cx.nvars
        for j, c in enumerate(perm):
            out[c * w:(c + 1) * w] = u[j * w:(j + 1) * w]
        return tuple(out)

    ranking = tuple(c * w + l for c in perm for l in range(w))
    order = MonomialOrder.lex(cx.nvars, ranking=ranking)
    els = tuple(Binomial(back(b.lead), back(b.tail)) for b in elements)
    return GroebnerBasis(order, els, reduced=True, names=cx.names())


def generalized_lex_gb_prime(code, allow_permutation=True):
    """Closed-form reduced lex basis of ``I+(C)`` over a prime field.

    Families: ``x_{ij} - x_{.,p-1}^{m_i^(j)}`` with ``m_i^(j) = (e_i - g_i) alpha^j``
    for ``i <= k``; ``x_{ij} - x_{i,p-1}^{alpha^j}`` and ``x_{i,p-1}^p - 1``
    for ``i > k``.
    """
    _require_prime(code)
    if not code.systematic and not allow_permutation:
        raise NotStandardForm("generator matrix needs a column permutation")
    f = code.field
    n, k, p = code.n, code.k, f.p
    cx = Crossing(f, n)
    N = cx.nvars
    els = []
    for i in range(k):
        e_minus_g = [0] * n
        for j in range(k, n):
            e_minus_g[j] = f.value_neg(int(code.G_std[i, j]))
        for j in range(1, p):
            m = f.scale_word(f.exp[j], e_minus_g)
            lead = [0] * N
            lead[cx.var(i, j)] = 1
            tail = [0] * N
            for s in range(k, n):
                tail[cx.var(s, p - 1)] = m[s]
            els.append(Binomial(tuple(lead), tuple(tail)))
    for i in range(k, n):
        for j in range(1, p - 1):
            lead = [0] * N
            lead[cx.var(i, j)] = 1
            tail = [0] * N
            tail[cx.var(i, p - 1)] = f.exp[j]
            els.append(Binomial(tuple(lead), tuple(tail)))
        lead = [0] * N
        lead[cx.var(i, p - 1)] = p
        els.append(Binomial(tuple(lead), (0,) * N))
    return _unpermute_generalized(code, els)


def m_vectors(code):
    """``m_i^(j)``: projection of ``(e_i - g_i) alpha^j`` on the last ``n-k`` coordinates."""
    f = code.field
    out = {}
    for i in range(code.k):
        base = tuple(f.value_neg(int(a)) for a in code.M[i])
        for j in range(1, f.q):
            out[(i + 1, j)] = f.scale_word(f.exp[j], base)
    return out


def generalized_lex_gb(code, allow_permutation=True):
    """Closed-form reduced lex basis of ``I+(C)`` over any F_{p^r}; ``n(q-1)`` elements."""
    if not code.systematic and not allow_permutation:
        raise NotStandardForm("generator matrix needs a column permutation")
    f = code.field
    n, k, q, r, p = code.n, code.k, f.q, f.r, f.p
    cx = Crossing(f, n)
    N = cx.nvars
    w = cx.width
    table = _phi_table(f)
    pad = (0,) * (q - 1 - r)

    def phi_val(beta):
        return pad + table[beta]

    ms = m_vectors(code)
    els = []
    for i in range(k):
        for j in range(1, q):
            lead = [0] * N
            lead[cx.var(i, j)] = 1
            tail = [0] * N
            for s, beta in enumerate(ms[(i + 1, j)]):
                tail[(k + s) * w:(k + s + 1) * w] = phi_val(beta)
            els.append(Binomial(tuple(lead), tuple(tail)))
    for i in range(k, n):
        for j in range(1, q - r):
            lead = [0] * N
            lead[cx.var(i, j)] = 1
            tail = [0] * N
            tail[i * w:(i + 1) * w] = phi_val(f.exp[j])
            els.append(Binomial(tuple(lead), tuple(tail)))
        for j in range(q - r, q):
            lead = [0] * N
            lead[cx.var(i, j)] = p
            els.append(Binomial(tuple(lead), (0,) * N))
    return _unpermute_generalized(code, els)


def restrict_generalized(code, i, method="buchberger"):
    """``I+(C) ∩ K[x_{1,i}, ..., x_{n,i}]`` as a reduced lex basis in ``x_1..x_n``.

    ``method="buchberger"`` starts from the generators of ``I_G + I_q``;
    ``method="fglm"`` converts the closed-form lex basis instead.
    """
    _require_prime(code)
    f = code.field
    if not 1 <= i < f.q:
        raise ValueError(f"column index must lie in 1..{f.q - 1}")
    cx = Crossing(f, code.n)
    keep = [cx.var(s, i) for s in range(code.n)]
    others = [v for v in range(cx.nvars) if v not in set(keep)]
    order = MonomialOrder.block(("degrevlex", others), ("lex", keep))
    if method == "buchberger":
        gb = buchberger(generalized_ideal_generators(code).generators, order, names=cx.names())
    elif method == "fglm":
        from .groebner import fglm

        gb = fglm(generalized_lex_gb(code), order)
    else:
        raise ValueError(f"unknown method {method!r}")
    sub = eliminate(gb, keep)
    return GroebnerBasis(sub.order, sub.elements, reduced=True, names=code_names(code.n))


# -- toric bridge ----------------------------------------------------------

def toric_mod_matrix(Hp, p):
    """``A(p) = (A | p I_m)`` for a non-negative integer matrix ``A``."""
    A = np.array(Hp, dtype=np.int64)
    if A.ndim != 2:
        raise ValueError("matrix must be 2-dimensional")
    if (A < 0).any():
        raise ValueError("toric matrices must be non-negative")
    return np.hstack([A, p * np.eye(A.shape[0], dtype=np.int64)])


def toric_ideal_gb(A, order, names=None):
    """Reduced Gröbner basis of the toric ideal of a non-negative integer matrix.

    Eliminates ``t`` from ``<x_j - t^{a_j}>`` under the block order
    ``t >> x`` (with ``order`` on the ``x`` block).
    """
    A = np.array(A, dtype=np.int64)
    if (A < 0).any():
        raise ValueError("toric matrices must be non-negative")
    m, n = A.shape
    if order.nvars != n:
        raise ValueError(f"order has {order.nvars} variables, matrix has {n} columns")
    ts = tuple(range(n, n + m))
    blocks = [("degrevlex", ts)] + [(kind, idx) for kind, idx in order.blocks]
    big = MonomialOrder.block(*blocks)
    gens = []
    for j in range(n):
        x = [0] * (n + m)
        x[j] = 1
        t = [0] * (n + m)
        for i in range(m):
            t[n + i] = int(A[i, j])
        gens.append((tuple(x), tuple(t)))
    all_names = (tuple(names) if names else code_names(n)) + tuple(f"t{i + 1}" for i in range(m))
    gb = buchberger(gens, big, names=all_names)
    return eliminate(gb, range(n))


def lift_parity(code):
    """Non-negative integer lift of the parity-check matrix (entries 0..p-1)."""
    _require_prime(code)
    return np.array(code.H, dtype=np.int64)


def toric_names(n, m):
    return code_names(n) + tuple(f"y{i + 1}" for i in range(m))


def code_toric_gb(code, parity=None, order=None):
    """Reduced basis of ``I_{H'(p)}`` in ``x_1..x_n, y_1..y_m`` (default lex, x before y)."""
    _require_prime(code)
    Hp = lift_parity(code) if parity is None else np.array(parity, dtype=np.int64)
    if Hp.shape[0] == 0:
        raise DegenerateCode("k = n: the parity-check matrix is empty")
    A = toric_mod_matrix(Hp, code.field.p)
    n_all = A.shape[1]
    order = MonomialOrder.lex(n_all) if order is None else order
    return toric_ideal_gb(A, order, names=toric_names(code.n, Hp.shape[0]))


def substitute_ones(basis, indices):
    """Set the variables ``indices`` to 1 in every binomial (drop their exponents).

    Returns canonical binomials over the remaining variables, oriented by
    the order induced on them; binomials that become zero are dropped.
    """
    drop = set(indices)
    kept = [i for i in range(basis.nvars) if i not in drop]
    split = basis.order.elimination_split(sorted(drop))
    order = split[0] if split else MonomialOrder.lex(len(kept))
    out = []
    for b in basis.elements:
        u = tuple(b.lead[i] for i in kept)
        v = tuple(b.tail[i] for i in kept)
        c = Binomial.make(u, v, order)
        if c is not None:
            out.append(c)
    return out, order


def code_ideal_via_elimination(code, parity=None):
    """``I(C)`` from ``I_{H'(p)}`` by substituting ``y = 1``, then reducing (lex)."""
    toric = code_toric_gb(code, parity)
    ys = range(code.n, toric.nvars)
    subs, _ = substitute_ones(toric, ys)
    order = MonomialOrder.lex(code.n)
    return buchberger(subs, order, names=code_names(code.n))


def code_ideal_via_toric_elimination(code, parity=None):
    """``(I_{H'(p)} + <y_j - 1>) ∩ K[x]`` computed with a ``y >> x`` block order."""
    _require_prime(code)
    Hp = lift_parity(code) if parity is None else np.array(parity, dtype=np.int64)
    n, m = code.n, Hp.shape[0]
    if m == 0:
        raise DegenerateCode("k = n: the parity-check matrix is empty")
    ys = tuple(range(n, n + m))
    order = MonomialOrder.block(("degrevlex", ys), ("lex", tuple(range(n))))
    toric = toric_ideal_gb(toric_mod_matrix(Hp, code.field.p), order, names=toric_names(n, m))
    gens = list(toric.elements)
    for y in ys:
        gens.append((tuple(1 if i == y else 0 for i in range(n + m)), (0,) * (n + m)))
    gb = buchberger(gens, order, names=toric_names(n, m))
    return eliminate(gb, range(n))
