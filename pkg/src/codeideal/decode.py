"""Decoding received words by monomial division.

``complete_decode`` uses a degree-compatible basis of the generalized code
ideal and always returns a nearest codeword.  ``heuristic_decode`` works with
the much smaller code ideal over a prime field: it tries the scalar multiples
``i*w`` in turn and accepts the first remainder of weight at most ``t``.
"""

from dataclasses import dataclass, field as dc_field

import numpy as np

from .code import distance, weight
from .errors import CapExceeded, NotPrimeField, WrongOrder
from .groebner import fglm, standard_monomials
from .ideal import Crossing, code_ideal_lex_gb, generalized_lex_gb
from .monomial import MonomialOrder


@dataclass(frozen=True)
class DecodeOutcome:
    status: str  # "decoded" | "fail"
    codeword: tuple = None
    error: tuple = None
    unique: bool = False
    scalar_used: int = None
    reductions_performed: int = 0

    @property
    def ok(self):
        return self.status == "decoded"


def code_degrevlex_gb(code):
    """Degrevlex basis of ``I(C)``, converted from the closed-form lex basis."""
    return fglm(code_ideal_lex_gb(code), MonomialOrder.degrevlex(code.n))


def generalized_degrevlex_gb(code):
    """Degrevlex basis of ``I+(C)``, converted from the closed-form lex basis."""
    lex = generalized_lex_gb(code)
    return fglm(lex, MonomialOrder.degrevlex(lex.nvars))


def _require_degree_order(basis):
    if not basis.order.degree_compatible:
        raise WrongOrder(f"decoding needs a degrevlex basis, got {basis.order.describe()}")


def complete_decode(code, word, basis):
    """Nearest-codeword decoding with the degrevlex basis of ``I+(C)``."""
    _require_degree_order(basis)
    word = code._check_word(word)
    cx = Crossing(code.field, code.n)
    if basis.nvars != cx.nvars:
        raise ValueError("basis is not over the generalized variables of this code")
    rem, steps = basis.reduce_monomial(cx.up(word))
    e = cx.down(rem)
    c = code.field.sub_words(word, e)
    return DecodeOutcome("decoded", c, e, weight(e) <= code.t, None, steps)


def heuristic_decode(code, word, basis):
    """Scalar-sweep decoding with the degrevlex basis of ``I(C)`` (prime fields).

    For ``i = 1..p-1`` reduce ``x^{i w mod p}``; the first remainder ``x^e``
    with ``|supp(e)| <= t`` yields ``c = i^{-1}(i w - e)``.  If none does the
    outcome is ``fail``.
    """
    if code.field.r != 1:
        raise NotPrimeField("heuristic decoding needs a prime field")
    _require_degree_order(basis)
    if basis.nvars != code.n:
        raise ValueError("basis is not over the code-ideal variables of this code")
    word = code._check_word(word)
    p, t = code.field.p, code.t
    steps = 0
    for i in range(1, p):
        wi = tuple(i * a % p for a in word)
        e, s = basis.reduce_monomial(wi)
        steps += s
        if weight(e) <= t:
            inv = pow(i, -1, p)
            c = tuple(inv * ((a - b) % p) % p for a, b in zip(wi, e))
            err = tuple((a - b) % p for a, b in zip(word, c))
            return DecodeOutcome("decoded", c, err, True, i, steps)
    return DecodeOutcome("fail", None, None, False, None, steps)


def nearest_codewords_bruteforce(code, word, cap=None):
    """``(distance, set of closest codewords)`` by scanning all codewords."""
    word = code._check_word(word)
    words = code.enumerate_codewords(cap)
    dist = (words != np.array(word)).sum(axis=1)
    best = int(dist.min())
    closest = {tuple(int(a) for a in words[i]) for i in np.flatnonzero(dist == best)}
    return best, closest


def oracle_decode(code, word, cap=None):
    d, closest = nearest_codewords_bruteforce(code, word, cap)
    c = min(closest)
    e = code.field.sub_words(code._check_word(word), c)
    return DecodeOutcome("decoded", c, e, len(closest) == 1 and d <= code.t, None, 0)


def coset_transversal(code, basis, cap=10**6):
    """Standard monomial -> coset representative (its exponent vector as a word)."""
    if code.field.r != 1:
        raise NotPrimeField("the code-ideal transversal needs a prime field")
    if basis.nvars != code.n:
        raise ValueError("basis is not over the code-ideal variables of this code")
    expected = code.field.p ** (code.n - code.k)
    if expected > cap:
        raise CapExceeded(f"{expected} cosets exceed cap {cap}")
    p = code.field.p
    return {u: tuple(a % p for a in u) for u in standard_monomials(basis, cap)}


def predict_heuristic_failure(code, basis, error):
    """True iff ``x^{a e mod p}`` is a leading-ideal monomial for every nonzero scalar ``a``."""
    p = code.field.p
    error = code._check_word(error)
    return all(not basis.is_standard(tuple(a * x % p for x in error)) for a in range(1, p))


# -- Monte-Carlo comparison harness ----------------------------------------

@dataclass
class MethodStats:
    method: str
    successes: int = 0
    failures: int = 0
    wrong: int = 0
    reductions: list = dc_field(default_factory=list)

    @property
    def mean_reductions(self):
        return float(np.mean(self.reductions)) if self.reductions else 0.0


def trial_rng(seed, index):
    """Independent generator for trial ``index`` under master ``seed``."""
    return np.random.default_rng([seed, index])


def random_trial(code, err_weight, rng):
    """A random codeword and a random error of exactly ``err_weight`` nonzero entries."""
    msg = [int(x) for x in rng.integers(0, code.q, size=code.k)]
    c = code.encode(msg)
    e = [0] * code.n
    for pos in rng.choice(code.n, size=err_weight, replace=False):
        e[int(pos)] = int(rng.integers(1, code.q))
    return c, tuple(e)


def compare(code, trials, err_weight, seed=0, code_basis=None, generalized_basis=None,
            methods=("heuristic", "complete", "oracle")):
    """Run seeded trials and tabulate successes, failures and wrong codewords per method.

    A success is decoding to the transmitted codeword; a failure is an
    explicit ``fail`` outcome; a wrong codeword is any other decoded result.
    """
    stats = {m: MethodStats(m) for m in methods}
    for idx in range(trials):
        rng = trial_rng(seed, idx)
        c, e = random_trial(code, err_weight, rng)
        w = code.field.add_words(c, e)
        for m in methods:
            if m == "heuristic":
                out = heuristic_decode(code, w, code_basis)
            elif m == "complete":
                out = complete_decode(code, w, generalized_basis)
            else:
                out = oracle_decode(code, w)
            st = stats[m]
            st.reductions.append(out.reductions_performed)
            if not out.ok:
                st.failures += 1
            elif out.codeword == c:
                st.successes += 1
            else:
                st.wrong += 1
    return [stats[m] for m in methods]


def sweep_errors(code, max_weight):
    """Every error pattern of weight ``1..max_weight`` (and the zero pattern)."""
    from itertools import combinations, product

    yield (0,) * code.n
    for w in range(1, max_weight + 1):
        for supp in combinations(range(code.n), w):
            for vals in product(range(1, code.q), repeat=w):
                e = [0] * code.n
                for pos, v in zip(supp, vals):
                    e[pos] = v
                yield tuple(e)


__all__ = [
    "DecodeOutcome",
    "code_degrevlex_gb",
    "generalized_degrevlex_gb",
    "complete_decode",
    "heuristic_decode",
    "nearest_codewords_bruteforce",
    "oracle_decode",
    "coset_transversal",
    "predict_heuristic_failure",
    "compare",
    "sweep_errors",
    "distance",
]
