"""Exponent vectors, monomial orders and canonical binomials.

Exponent vectors are plain tuples of non-negative ints.  A ``MonomialOrder``
is a sequence of blocks, each block being a kind (``lex`` or ``degrevlex``)
plus the variable indices it ranks from highest to lowest.  Single-block
orders are the usual lex / degrevlex; several blocks give an elimination
(product) order in which earlier blocks dominate later ones.
"""

from dataclasses import dataclass
import re

from .errors import LengthMismatch, NotDivisible, ParseError

KINDS = ("lex", "degrevlex")


def _check_len(u, v):
    if len(u) != len(v):
        raise LengthMismatch(f"exponent vectors of length {len(u)} and {len(v)}")


def lcm(u, v):
    _check_len(u, v)
    return tuple(a if a > b else b for a, b in zip(u, v))


def divides(u, v):
    """True when ``x^u`` divides ``x^v``."""
    _check_len(u, v)
    return all(a <= b for a, b in zip(u, v))


def add(u, v):
    _check_len(u, v)
    return tuple(a + b for a, b in zip(u, v))


def sub(u, v):
    """``u - v``; requires ``v`` to divide ``u``."""
    _check_len(u, v)
    out = tuple(a - b for a, b in zip(u, v))
    if any(c < 0 for c in out):
        raise NotDivisible(f"{v} does not divide {u}")
    return out


def degree(u):
    return sum(u)


def support(u):
    return [i for i, a in enumerate(u) if a]


def coprime(u, v):
    return all(not (a and b) for a, b in zip(u, v))


def unit(n, i, power=1):
    out = [0] * n
    out[i] = power
    return tuple(out)


def _block_key(kind, idx, u):
    if kind == "lex":
        return tuple(u[i] for i in idx)
    # degrevlex: higher degree wins, then the smaller exponent on the lowest
    # ranked variable where the vectors differ
    return (sum(u[i] for i in idx),) + tuple(-u[i] for i in reversed(idx))


@dataclass(frozen=True)
class MonomialOrder:
    nvars: int
    blocks: tuple  # ((kind, (i0, i1, ...)), ...)

    def __post_init__(self):
        seen = [i for _, idx in self.blocks for i in idx]
        if sorted(seen) != list(range(self.nvars)):
            raise ValueError("order blocks must partition the variables")
        for kind, _ in self.blocks:
            if kind not in KINDS:
                raise ValueError(f"unknown order kind {kind!r}")

    @classmethod
    def lex(cls, nvars, ranking=None):
        ranking = tuple(range(nvars)) if ranking is None else tuple(ranking)
        return cls(nvars, (("lex", ranking),))

    @classmethod
    def degrevlex(cls, nvars, ranking=None):
        ranking = tuple(range(nvars)) if ranking is None else tuple(ranking)
        return cls(nvars, (("degrevlex", ranking),))

    @classmethod
    def make(cls, kind, nvars, ranking=None):
        if kind not in KINDS:
            raise ValueError(f"unknown order kind {kind!r}")
        return getattr(cls, kind)(nvars, ranking)

    @classmethod
    def block(cls, *blocks):
        """``MonomialOrder.block(("degrevlex", ys), ("lex", xs))`` puts ys >> xs."""
        blocks = tuple((kind, tuple(idx)) for kind, idx in blocks if len(idx))
        nvars = sum(len(idx) for _, idx in blocks)
        return cls(nvars, blocks)

    @property
    def kind(self):
        if len(self.blocks) == 1:
            return self.blocks[0][0]
        return "block"

    @property
    def ranking(self):
        return tuple(i for _, idx in self.blocks for i in idx)

    @property
    def degree_compatible(self):
        return len(self.blocks) == 1 and self.blocks[0][0] == "degrevlex"

    def key(self, u):
        """Sort key: ``key(u) > key(v)`` iff ``x^u`` is greater than ``x^v``."""
        if len(self.blocks) == 1:
            kind, idx = self.blocks[0]
            return _block_key(kind, idx, u)
        return tuple(_block_key(kind, idx, u) for kind, idx in self.blocks)

    def compare(self, u, v):
        """-1, 0 or 1 as ``x^u`` is less than, equal to or greater than ``x^v``."""
        _check_len(u, v)
        if len(u) != self.nvars:
            raise LengthMismatch(f"order is on {self.nvars} variables, got {len(u)}")
        ku, kv = self.key(u), self.key(v)
        return (ku > kv) - (ku < kv)

    def elimination_split(self, eliminate):
        """Return the order induced on the kept variables, or ``None``.

        ``None`` means the order does not eliminate the variable set
        ``eliminate``, i.e. some monomial free of those variables is not
        below every monomial involving them.
        """
        elim = set(eliminate)
        kept_blocks = []
        done = not elim
        remaining = set(elim)
        for kind, idx in self.blocks:
            inside = [i for i in idx if i in elim]
            if done:
                if inside:
                    return None
                kept_blocks.append((kind, idx))
                continue
            if len(inside) == len(idx):
                remaining -= set(idx)
                done = not remaining
                continue
            # partial block: only a lex prefix can be split off
            if kind == "lex" and tuple(idx[: len(inside)]) == tuple(inside):
                remaining -= set(inside)
                if remaining:
                    return None
                kept_blocks.append((kind, idx[len(inside):]))
                done = True
                continue
            return None
        if remaining:
            return None
        kept = [i for i in range(self.nvars) if i not in elim]
        relabel = {old: new for new, old in enumerate(kept)}
        blocks = tuple((kind, tuple(relabel[i] for i in idx)) for kind, idx in kept_blocks)
        return MonomialOrder(len(kept), blocks), kept

    def describe(self):
        """Compact text form used in basis headers, e.g. ``lex`` or ``degrevlex[2,0,1]``."""
        parts = []
        for kind, idx in self.blocks:
            if len(self.blocks) == 1 and tuple(idx) == tuple(range(self.nvars)):
                return kind
            parts.append(f"{kind}[{','.join(map(str, idx))}]")
        return ";".join(parts)

    @classmethod
    def from_description(cls, text, nvars):
        text = text.strip()
        if text in KINDS:
            return cls.make(text, nvars)
        blocks = []
        for part in text.split(";"):
            m = re.fullmatch(r"(lex|degrevlex)\[([0-9,]*)\]", part.strip())
            if not m:
                raise ParseError(f"bad order description {part!r}")
            idx = tuple(int(s) for s in m.group(2).split(",") if s)
            blocks.append((m.group(1), idx))
        order = cls(sum(len(i) for _, i in blocks), tuple(blocks))
        if order.nvars != nvars:
            raise ParseError(f"order covers {order.nvars} variables, header says {nvars}")
        return order


@dataclass(frozen=True)
class Binomial:
    """``x^lead - x^tail`` with ``lead`` greater than ``tail`` in the ambient order.

    Build through ``Binomial.make`` so orientation is always canonical.
    """

    lead: tuple
    tail: tuple

    @classmethod
    def make(cls, u, v, order):
        """Canonical binomial for ``x^u - x^v`` (up to sign); ``None`` if ``u == v``."""
        u, v = tuple(u), tuple(v)
        c = order.compare(u, v)
        if c == 0:
            return None
        if any(a < 0 for a in u) or any(a < 0 for a in v):
            raise ValueError("negative exponent in binomial")
        return cls(u, v) if c > 0 else cls(v, u)

    @property
    def nvars(self):
        return len(self.lead)

    def variables(self):
        return {i for i in range(len(self.lead)) if self.lead[i] or self.tail[i]}

    def format(self, names):
        return f"{format_monomial(self.lead, names)} - {format_monomial(self.tail, names)}"


# -- text syntax ---------------------------------------------------------

def code_names(n):
    return tuple(f"x{i + 1}" for i in range(n))


def generalized_names(n, q):
    return tuple(f"x{i + 1}_{j + 1}" for i in range(n) for j in range(q - 1))


def format_monomial(u, names):
    parts = []
    for e, name in zip(u, names):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


def parse_monomial(text, names):
    text = text.strip()
    index = {name: i for i, name in enumerate(names)}
    u = [0] * len(names)
    if text == "1":
        return tuple(u)
    for factor in text.split("*"):
        factor = factor.strip()
        m = re.fullmatch(r"([A-Za-z_][A-Za-z0-9_]*)(?:\^(\d+))?", factor)
        if not m or m.group(1) not in index:
            raise ParseError(f"bad monomial factor {factor!r}")
        u[index[m.group(1)]] += int(m.group(2) or 1)
    return tuple(u)


def parse_binomial(text, names, order):
    if " - " not in text:
        raise ParseError(f"binomial must read 'lead - tail': {text!r}")
    left, right = text.split(" - ", 1)
    b = Binomial.make(parse_monomial(left, names), parse_monomial(right, names), order)
    if b is None:
        raise ParseError(f"zero binomial {text!r}")
    return b
