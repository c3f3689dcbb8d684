"""Linear codes over F_q given by a generator matrix (value form)."""

from functools import cached_property
from itertools import combinations, product

import numpy as np

from .errors import LengthMismatch, RankDeficient, TooLarge

DEFAULT_CAP = 2**20


def rref(field, A):
    """Reduced row echelon form over F_q; returns ``(R, pivot_columns)``."""
    R = np.array(A, dtype=np.int64) % field.q
    if R.ndim != 2:
        raise ValueError("matrix must be 2-dimensional")
    rows, cols = R.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = [i for i in range(r, rows) if R[i, c]]
        if not nz:
            continue
        i = nz[0]
        if i != r:
            R[[r, i]] = R[[i, r]]
        inv = field.value_inv(int(R[r, c]))
        R[r] = field.vmul[inv, R[r]]
        for i in range(rows):
            if i != r and R[i, c]:
                factor = field.vneg[R[i, c]]
                R[i] = field.vadd[R[i], field.vmul[factor, R[r]]]
        pivots.append(c)
        r += 1
    return R, pivots


def standard_form(field, G):
    """``(G_std, col_perm)`` with ``G_std = (I_k | M)`` on the permuted columns.

    Column ``j`` of ``G_std`` is column ``col_perm[j]`` of the row-reduced ``G``.
    """
    G = np.array(G, dtype=np.int64)
    k, n = G.shape
    R, pivots = rref(field, G)
    if len(pivots) < k:
        raise RankDeficient(f"generator matrix has rank {len(pivots)} < {k}")
    rest = [c for c in range(n) if c not in pivots]
    perm = tuple(pivots + rest)
    return R[:, list(perm)], perm


def weight(word):
    return sum(1 for a in word if a)


def distance(u, v):
    return sum(1 for a, b in zip(u, v) if a != b)


class LinearCode:
    """An ``[n, k]`` code over ``field`` spanned by the rows of ``G``.

    Words are tuples (or arrays) of value-form field elements.
    """

    def __init__(self, field, G, cap=DEFAULT_CAP):
        G = np.array(G, dtype=np.int64)
        if G.ndim != 2 or G.shape[0] < 1:
            raise RankDeficient("a code needs at least one generator row")
        if G.min() < 0 or G.max() >= field.q:
            raise ValueError(f"generator entries must lie in 0..{field.q - 1}")
        self.field = field
        self.G = G
        self.k, self.n = G.shape
        self.cap = cap
        self.G_std, self.col_perm = standard_form(field, G)

    @property
    def q(self):
        return self.field.q

    @property
    def systematic(self):
        return self.col_perm == tuple(range(self.n))

    @property
    def M(self):
        """The ``k x (n-k)`` block of the standard form."""
        return self.G_std[:, self.k:]

    @cached_property
    def H(self):
        return parity_check(self)

    def syndrome(self, word):
        word = self._check_word(word)
        if self.n == self.k:
            return ()
        return tuple(int(s) for s in self.field.matmul(np.array([word]), self.H.T)[0])

    def contains(self, word):
        return not any(self.syndrome(word))

    def encode(self, message):
        if len(message) != self.k:
            raise LengthMismatch(f"message must have length {self.k}")
        return tuple(int(a) for a in self.field.matmul(np.array([message]), self.G)[0])

    def _check_word(self, word):
        word = tuple(int(a) for a in word)
        if len(word) != self.n:
            raise LengthMismatch(f"word must have length {self.n}, got {len(word)}")
        if any(not 0 <= a < self.q for a in word):
            raise ValueError(f"word entries must lie in 0..{self.q - 1}")
        return word

    def enumerate_codewords(self, cap=None):
        """All ``q^k`` codewords as a ``(q^k, n)`` array, messages in lexicographic order."""
        cap = self.cap if cap is None else cap
        if self.q**self.k > cap:
            raise TooLarge(f"q^k = {self.q ** self.k} exceeds cap {cap}")
        msgs = np.array(list(product(range(self.q), repeat=self.k)), dtype=np.int64)
        return self.field.matmul(msgs, self.G)

    @cached_property
    def _distance(self):
        words = self.enumerate_codewords()
        weights = (words != 0).sum(axis=1)
        nonzero = weights[weights > 0]
        d = int(nonzero.min()) if len(nonzero) else self.n + 1
        return d, (d - 1) // 2

    def min_distance(self):
        """``(d, t)`` by exhaustive enumeration of the codewords."""
        return self._distance

    @property
    def d(self):
        return self._distance[0]

    @property
    def t(self):
        return self._distance[1]

    def min_distance_via_parity(self, cap=None):
        """Minimum distance as the smallest weight of a nonzero word with zero syndrome."""
        cap = self.cap if cap is None else cap
        if self.n == self.k:
            return 1
        Ht = self.H.T
        checked = 0
        for w in range(1, self.n + 1):
            for supp in combinations(range(self.n), w):
                for vals in product(range(1, self.q), repeat=w):
                    checked += 1
                    if checked > cap:
                        raise TooLarge(f"more than {cap} words examined")
                    x = np.zeros((1, self.n), dtype=np.int64)
                    x[0, list(supp)] = vals
                    if not self.field.matmul(x, Ht).any():
                        return w
        return self.n + 1

    def __repr__(self):
        return f"LinearCode([{self.n},{self.k}] over {self.field})"


def parity_check(code):
    """``(n-k) x n`` parity-check matrix ``(-M^T | I)`` mapped back to the original columns."""
    f, n, k = code.field, code.n, code.k
    H_std = np.zeros((n - k, n), dtype=np.int64)
    if n > k:
        H_std[:, :k] = f.vneg[code.M.T]
        H_std[:, k:] = np.eye(n - k, dtype=np.int64)
    H = np.zeros_like(H_std)
    for j, c in enumerate(code.col_perm):
        H[:, c] = H_std[:, j]
    return H
