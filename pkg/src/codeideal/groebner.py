"""Gröbner bases of ideals generated by differences of monic monomials.

Every ideal handled here is generated by binomials ``x^a - x^b``.  S-polynomials
and reductions of such binomials are again of that shape (or zero), so the
engine never touches coefficients: a binomial is a pair of exponent tuples and
the normal form of a monomial is a single monomial.
"""

from dataclasses import dataclass
import heapq

from .errors import CapExceeded, NotZeroDimensional, ParseError, WrongOrder
from .monomial import (
    Binomial,
    MonomialOrder,
    code_names,
    format_monomial,
    lcm,
    parse_binomial,
)


def _rules(elements):
    """(lead, tail, support-of-lead) triples used by the reducer."""
    return [(b.lead, b.tail, [(i, a) for i, a in enumerate(b.lead) if a]) for b in elements]


def _reduce(u, rules):
    """Fully reduce monomial ``u``; returns ``(remainder, steps)``.

    When a lead divides ``u`` it is applied as many times as it divides at
    once; each application is counted as a step.
    """
    steps = 0
    u = list(u)
    while True:
        for lead, tail, supp in rules:
            k = None
            for i, a in supp:
                m = u[i] // a
                if m == 0:
                    break
                if k is None or m < k:
                    k = m
            else:
                if k is None:
                    # lead is the constant monomial: the ideal is the whole ring
                    k = 1
                for i in range(len(u)):
                    u[i] += k * (tail[i] - lead[i])
                steps += k
                if not supp:
                    return tuple(u), steps
                break
        else:
            return tuple(u), steps


@dataclass(frozen=True, eq=False)
class GroebnerBasis:
    order: MonomialOrder
    elements: tuple
    reduced: bool = False
    names: tuple = None

    def __post_init__(self):
        key = self.order.key
        uniq = {}
        for b in self.elements:
            if len(b.lead) != self.order.nvars:
                raise ValueError("binomial length does not match the order")
            if not key(b.lead) > key(b.tail):
                raise ValueError(f"binomial {b} is not oriented by the order")
            uniq[(b.lead, b.tail)] = b
        ordered = sorted(uniq.values(), key=lambda b: (key(b.lead), key(b.tail)), reverse=True)
        object.__setattr__(self, "elements", tuple(ordered))
        if self.names is None:
            object.__setattr__(self, "names", code_names(self.order.nvars))
        object.__setattr__(self, "_rules", _rules(self.elements))

    @property
    def nvars(self):
        return self.order.nvars

    @property
    def leads(self):
        return [b.lead for b in self.elements]

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __eq__(self, other):
        if not isinstance(other, GroebnerBasis):
            return NotImplemented
        return self.order == other.order and set(self.elements) == set(other.elements)

    def __hash__(self):
        return hash((self.order, frozenset(self.elements)))

    def reduce_monomial(self, u):
        return _reduce(tuple(u), self._rules)

    def normal_form(self, x):
        return normal_form(x, self)

    def contains(self, b):
        """Ideal membership of ``x^u - x^v`` given as a Binomial or a pair."""
        if isinstance(b, Binomial):
            u, v = b.lead, b.tail
        else:
            u, v = b
        return self.reduce_monomial(u)[0] == self.reduce_monomial(v)[0]

    def is_standard(self, u):
        return not any(all(u[i] >= a for i, a in supp) for _, _, supp in self._rules)

    def strings(self):
        return [b.format(self.names) for b in self.elements]

    def dumps(self):
        return dumps(self)

    def __repr__(self):
        body = ", ".join(self.strings())
        return f"GroebnerBasis({self.order.describe()}: {{{body}}})"


# -- core operations -------------------------------------------------------

def spoly(f, g, order):
    """S-polynomial of two canonical binomials; ``None`` when it vanishes."""
    L = lcm(f.lead, g.lead)
    s1 = tuple(l - a + b for l, a, b in zip(L, f.lead, f.tail))
    s2 = tuple(l - a + b for l, a, b in zip(L, g.lead, g.tail))
    return Binomial.make(s1, s2, order)


def normal_form(x, basis):
    """Remainder of a monomial (tuple) or a Binomial on division by ``basis``.

    A monomial reduces to a monomial; a binomial reduces to a canonical
    binomial or ``None`` (zero).
    """
    if isinstance(x, Binomial):
        a = basis.reduce_monomial(x.lead)[0]
        b = basis.reduce_monomial(x.tail)[0]
        return Binomial.make(a, b, basis.order)
    return basis.reduce_monomial(tuple(x))[0]


def _canonical(gens, order):
    out = []
    for g in gens:
        if isinstance(g, Binomial):
            b = Binomial.make(g.lead, g.tail, order)
        else:
            b = Binomial.make(g[0], g[1], order)
        if b is not None:
            out.append(b)
    return out


def buchberger(gens, order, names=None, reduce=True):
    """Gröbner basis of the ideal generated by ``gens`` under ``order``.

    ``gens`` are Binomials (re-oriented for ``order``) or ``(u, v)`` pairs.
    Pairs are selected by the normal strategy; coprime leading terms and the
    chain criterion skip pairs.  Returns the reduced basis unless
    ``reduce=False``.
    """
    key = order.key
    gens = _canonical(gens, order)
    gens.sort(key=lambda b: key(b.lead))

    G = []        # list of Binomial
    rules = []    # reducer triples, parallel to G
    pending = set()
    heap = []

    def nf(b):
        a, _ = _reduce(b.lead, rules)
        c, _ = _reduce(b.tail, rules)
        return Binomial.make(a, c, order)

    def insert(h):
        assert key(h.lead) > key(h.tail) and min(h.lead + h.tail) >= 0
        j = len(G)
        G.append(h)
        rules.append((h.lead, h.tail, [(i, a) for i, a in enumerate(h.lead) if a]))
        for i in range(j):
            L = lcm(G[i].lead, h.lead)
            pending.add((i, j))
            heapq.heappush(heap, (sum(L), key(L), i, j))

    for g in gens:
        h = nf(g)
        if h is not None:
            insert(h)

    while heap:
        _, _, i, j = heapq.heappop(heap)
        pending.discard((i, j))
        fi, fj = G[i], G[j]
        if all(not (a and b) for a, b in zip(fi.lead, fj.lead)):
            continue
        L = lcm(fi.lead, fj.lead)
        if _chain_skip(i, j, L, G, pending):
            continue
        s = spoly(fi, fj, order)
        if s is None:
            continue
        h = nf(s)
        if h is not None:
            insert(h)

    basis = GroebnerBasis(order, tuple(G), reduced=False, names=names)
    return reduce_basis(basis) if reduce else basis


def _chain_skip(i, j, L, G, pending):
    for k, g in enumerate(G):
        if k == i or k == j:
            continue
        if (min(i, k), max(i, k)) in pending or (min(j, k), max(j, k)) in pending:
            continue
        if all(a <= b for a, b in zip(g.lead, L)):
            return True
    return False


def reduce_basis(basis):
    """The unique reduced Gröbner basis for the ideal and order of ``basis``."""
    key = basis.order.key
    els = sorted(basis.elements, key=lambda b: key(b.lead))
    minimal = []
    for b in els:
        if not any(all(x <= y for x, y in zip(m.lead, b.lead)) for m in minimal):
            minimal.append(b)
    rules = _rules(minimal)
    out = []
    for b in minimal:
        t, _ = _reduce(b.tail, rules)
        out.append(Binomial(b.lead, t))
    return GroebnerBasis(basis.order, tuple(out), reduced=True, names=basis.names)


def eliminate(basis, keep):
    """Elements of ``basis`` involving only the variables ``keep``.

    ``basis`` must be a Gröbner basis for an order that eliminates the other
    variables.  The result is expressed over ``keep`` (in increasing index
    order), under the induced order, and is a Gröbner basis of the
    elimination ideal.
    """
    keep = sorted(set(keep))
    drop = [i for i in range(basis.nvars) if i not in set(keep)]
    split = basis.order.elimination_split(drop)
    if split is None:
        raise WrongOrder(f"order {basis.order.describe()} does not eliminate variables {drop}")
    order, kept = split
    out = []
    dropset = set(drop)
    for b in basis.elements:
        if any(b.lead[i] or b.tail[i] for i in dropset):
            continue
        out.append(Binomial(tuple(b.lead[i] for i in kept), tuple(b.tail[i] for i in kept)))
    names = tuple(basis.names[i] for i in kept)
    return GroebnerBasis(order, tuple(out), reduced=basis.reduced, names=names)


def is_zero_dimensional(basis):
    found = set()
    for b in basis.elements:
        supp = [i for i, a in enumerate(b.lead) if a]
        if len(supp) == 1:
            found.add(supp[0])
        elif not supp:
            return True
    return len(found) == basis.nvars


def standard_monomials(basis, cap=10**6):
    """All standard monomials, ascending in the basis order."""
    if not is_zero_dimensional(basis):
        raise NotZeroDimensional("some variable has no pure-power leading term")
    n = basis.nvars
    zero = (0,) * n
    if not basis.is_standard(zero):
        return []
    seen = {zero}
    stack = [zero]
    while stack:
        u = stack.pop()
        for i in range(n):
            v = u[:i] + (u[i] + 1,) + u[i + 1:]
            if v not in seen and basis.is_standard(v):
                seen.add(v)
                if len(seen) > cap:
                    raise CapExceeded(f"more than {cap} standard monomials")
                stack.append(v)
    return sorted(seen, key=basis.order.key)


def fglm(source, target_order):
    """Convert a zero-dimensional Gröbner basis to ``target_order``.

    Monomials are visited in increasing target order.  Normal forms modulo the
    source basis are single standard monomials, so a visited monomial is a
    new leading term exactly when its normal form repeats that of an earlier
    target-standard monomial.
    """
    if not is_zero_dimensional(source):
        raise NotZeroDimensional("FGLM needs a zero-dimensional ideal")
    if target_order.nvars != source.nvars:
        raise WrongOrder("target order has the wrong number of variables")
    n = source.nvars
    key = target_order.key
    zero = (0,) * n
    staircase = {}
    new = []
    new_rules = []
    heap = [(key(zero), zero)]
    visited = set()
    while heap:
        _, m = heapq.heappop(heap)
        if m in visited:
            continue
        visited.add(m)
        if any(all(m[i] >= a for i, a in supp) for _, _, supp in new_rules):
            continue
        r = source.reduce_monomial(m)[0]
        if r in staircase:
            b = Binomial(m, staircase[r])
            new.append(b)
            new_rules.extend(_rules([b]))
            continue
        staircase[r] = m
        for i in range(n):
            v = m[:i] + (m[i] + 1,) + m[i + 1:]
            if v not in visited:
                heapq.heappush(heap, (key(v), v))
    return GroebnerBasis(target_order, tuple(new), reduced=True, names=source.names)


def is_groebner(basis):
    """Buchberger criterion: every S-polynomial reduces to zero."""
    els = basis.elements
    for i in range(len(els)):
        for j in range(i + 1, len(els)):
            s = spoly(els[i], els[j], basis.order)
            if s is not None and normal_form(s, basis) is not None:
                return False
    return True


def is_reduced(basis):
    rules = basis._rules
    for b in basis.elements:
        for lead, _, supp in rules:
            if lead == b.lead:
                continue
            for m in (b.lead, b.tail):
                if all(m[i] >= a for i, a in supp):
                    return False
    return True


# -- serialization ---------------------------------------------------------

def dumps(basis):
    head = (
        f"#basis order={basis.order.describe()} nvars={basis.nvars} "
        f"vars={','.join(basis.names)}"
    )
    lines = [head]
    for b in basis.elements:
        lines.append(f"{format_monomial(b.lead, basis.names)} - {format_monomial(b.tail, basis.names)}")
    return "\n".join(lines) + "\n"


def loads(text):
    # blank lines and '#' comments other than the header are skipped
    lines = [
        (i, ln.strip()) for i, ln in enumerate(text.splitlines(), start=1)
        if ln.strip() and (ln.startswith("#basis") or not ln.startswith("#"))
    ]
    if not lines or not lines[0][1].startswith("#basis"):
        raise ParseError("missing '#basis' header", line=lines[0][0] if lines else 1)
    head = lines[0][0]
    fields = {}
    for tok in lines[0][1].split()[1:]:
        if "=" not in tok:
            raise ParseError(f"bad header field {tok!r}", line=head)
        k, v = tok.split("=", 1)
        fields[k] = v
    try:
        nvars = int(fields["nvars"])
        names = tuple(fields["vars"].split(",")) if fields.get("vars") else code_names(nvars)
        order = MonomialOrder.from_description(fields["order"], nvars)
    except KeyError as exc:
        raise ParseError(f"header lacks {exc}", line=head) from None
    except (ValueError, ParseError) as exc:
        raise ParseError(f"bad header: {exc}", line=head) from None
    if len(names) != nvars:
        raise ParseError("vars list does not match nvars", line=head)
    els = []
    for lineno, ln in lines[1:]:
        try:
            els.append(parse_binomial(ln, names, order))
        except ParseError as exc:
            raise ParseError(str(exc), line=lineno) from None
    return GroebnerBasis(order, tuple(els), reduced=False, names=names)
