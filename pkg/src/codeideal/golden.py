"""Pinned worked examples and a runner that recomputes and compares them.

Each item recomputes one reference result from scratch and compares it with
the literal expected data stored in ``EXPECTED``.  Items are grouped so the
runner can be restricted (``toric``, ``generalized``, ``extension``,
``decode``).
"""

from dataclasses import dataclass
import time

from .code import LinearCode
from .decode import code_degrevlex_gb, complete_decode, generalized_degrevlex_gb, heuristic_decode
from .field import GF
from .groebner import buchberger, standard_monomials
from .ideal import (
    code_ideal_lex_gb,
    code_ideal_via_elimination,
    generalized_ideal_generators,
    generalized_lex_gb,
    m_vectors,
    phi,
    restrict_generalized,
    substitute_ones,
    toric_ideal_gb,
    toric_mod_matrix,
)
from .monomial import MonomialOrder, code_names, format_monomial, parse_monomial


# -- the example codes -----------------------------------------------------

def f7_code():
    """The [3,2] code over F_7 with rows (1,0,4), (0,1,1)."""
    return LinearCode(GF(7), [[1, 0, 4], [0, 1, 1]])


def ternary_6_3():
    return LinearCode(GF(3), [[1, 0, 0, 2, 2, 0], [0, 1, 0, 1, 1, 0], [0, 0, 1, 1, 2, 1]])


def f9_field():
    return GF(3, 2, poly=(2, 1, 1))


def f9_code():
    """The [3,2] code over F_9 = F_3[x]/(x^2+x+2) with rows (1,0,a^2), (0,1,a^5)."""
    F = f9_field()
    one = F.exp[8]
    return LinearCode(F, [[one, 0, F.exp[2]], [0, one, F.exp[5]]])


def ternary_7_2_5():
    return LinearCode(GF(3), [[1, 0, 1, 2, 1, 1, 1], [0, 1, 2, 2, 1, 0, 2]])


# -- expected data ---------------------------------------------------------

EXPECTED = {
    "toric-basis": [
        "x3^7 - y^5", "x2^5 - x3^2", "x2*y^4 - x3^6", "x2^2*y^3 - x3^5",
        "x2^3*y^2 - x3^4", "x2^4*y - x3^3", "x2*x3 - y", "x1^2 - x2",
        "x1*y - x2^4", "x1*x3 - x2^3", "x1*x2^2 - x3",
    ],
    "toric-substituted": [
        "x3^7 - 1", "x2^5 - x3^2", "x2 - x3^6", "x2^2 - x3^5", "x2^3 - x3^4",
        "x2^4 - x3^3", "x2*x3 - 1", "x1^2 - x2", "x1 - x2^4", "x1*x3 - x2^3",
        "x1*x2^2 - x3",
    ],
    "toric-code-ideal": ["x1 - x3^3", "x2 - x3^6", "x3^7 - 1"],
    "generalized-generators": [
        "x1_2*x4_1*x5_1 - 1", "x1_1*x4_2*x5_2 - 1", "x2_2*x4_2*x5_2 - 1",
        "x2_1*x4_1*x5_1 - 1", "x3_2*x4_2*x5_1*x6_2 - 1", "x3_1*x4_1*x5_2*x6_1 - 1",
    ],
    # x1_2 - x4_2*x5_2 is in the ideal, the look-alike x1_2 - x4_2^2*x5_2^2
    # is not (see "generalized-excluded")
    "generalized-lex": [
        "x1_1 - x4_2^2*x5_2^2", "x1_2 - x4_2*x5_2", "x2_1 - x4_2*x5_2",
        "x2_2 - x4_2^2*x5_2^2", "x3_1 - x4_2*x5_2^2*x6_2", "x3_2 - x4_2^2*x5_2*x6_2^2",
        "x4_1 - x4_2^2", "x5_1 - x5_2^2", "x6_1 - x6_2^2",
        "x4_2^3 - 1", "x5_2^3 - 1", "x6_2^3 - 1",
    ],
    "generalized-excluded": ["x1_2 - x4_2^2*x5_2^2"],
    "restriction-1": [
        "x6_1^3 - 1", "x5_1^3 - 1", "x4_1^3 - 1", "x3_1 - x4_1^2*x5_1*x6_1^2",
        "x2_1 - x4_1^2*x5_1^2", "x1_1 - x4_1*x5_1",
    ],
    "restriction-2": [
        "x6_2^3 - 1", "x5_2^3 - 1", "x4_2^3 - 1", "x3_2 - x4_2^2*x5_2*x6_2^2",
        "x2_2 - x4_2^2*x5_2^2", "x1_2 - x4_2*x5_2",
    ],
    # phi(alpha^j) restricted to its last two coordinates, j = 1..8
    "f9-phi": [[1, 2], [2, 2], [2, 0], [0, 2], [2, 1], [1, 1], [1, 0], [0, 1]],
    # m_i^(j) as powers of alpha, j = 1..8
    "f9-m1": [7, 8, 1, 2, 3, 4, 5, 6],
    "f9-m2": [2, 3, 4, 5, 6, 7, 8, 1],
    "f9-basis": [
        "x1_1 - x3_7", "x1_2 - x3_8", "x1_3 - x3_7*x3_8^2", "x1_4 - x3_7^2*x3_8^2",
        "x1_5 - x3_7^2", "x1_6 - x3_8^2", "x1_7 - x3_7^2*x3_8", "x1_8 - x3_7*x3_8",
        "x2_1 - x3_7^2*x3_8^2", "x2_2 - x3_7^2", "x2_3 - x3_8^2", "x2_4 - x3_7^2*x3_8",
        "x2_5 - x3_7*x3_8", "x2_6 - x3_7", "x2_7 - x3_8", "x2_8 - x3_7*x3_8^2",
        "x3_1 - x3_7*x3_8^2", "x3_2 - x3_7^2*x3_8^2", "x3_3 - x3_7^2", "x3_4 - x3_8^2",
        "x3_5 - x3_7^2*x3_8", "x3_6 - x3_7*x3_8",
        "x3_7^3 - 1", "x3_8^3 - 1",
    ],
    "f9-standard-count": 9,
    "decode-complete": {
        "word": [0, 2, 2, 0, 0, 0, 2],
        "monomial": "x2^2*x3^2*x7^2",
        "remainder": "x1^2*x6^2",
        "error": [2, 0, 0, 0, 0, 2, 0],
        "codeword": [1, 2, 2, 0, 0, 1, 2],
    },
    "decode-heuristic": {
        "word": [0, 1, 2, 0, 0, 1, 2],
        "monomials": ["x2*x3^2*x6*x7^2", "x2^2*x3*x6^2*x7"],
        "remainders": ["x4*x5^2*x6", "x1*x2"],
        "plain_codeword": [0, 1, 2, 2, 1, 0, 2],
        "scalar": 2,
        "codeword": [1, 2, 2, 0, 0, 1, 2],
    },
}


# -- comparison helpers ----------------------------------------------------

def pairs(lines, names):
    """Parse ``lead - tail`` strings literally (no reorientation)."""
    out = set()
    for text in lines:
        left, right = text.split(" - ", 1)
        out.add((parse_monomial(left, names), parse_monomial(right, names)))
    return out


def basis_pairs(basis):
    return {(b.lead, b.tail) for b in basis.elements}


def _set_check(got, want, names):
    missing = want - got
    extra = got - want
    if not missing and not extra:
        return True, f"{len(got)} binomials"

    def fmt(s):
        return ", ".join(sorted(f"{format_monomial(u, names)} - {format_monomial(v, names)}" for u, v in s))

    return False, f"missing {{{fmt(missing)}}} extra {{{fmt(extra)}}}"


F7_TORIC_NAMES = ("x1", "x2", "x3", "y")


def _toric_basis():
    return toric_ideal_gb(toric_mod_matrix([[1, 2, 5]], 7), MonomialOrder.lex(4), names=F7_TORIC_NAMES)


def check_toric_basis(exp):
    return _set_check(basis_pairs(_toric_basis()), pairs(exp["toric-basis"], F7_TORIC_NAMES), F7_TORIC_NAMES)


def check_toric_substituted(exp):
    subs, _ = substitute_ones(_toric_basis(), [3])
    names = code_names(3)
    return _set_check({(b.lead, b.tail) for b in subs}, pairs(exp["toric-substituted"], names), names)


def check_toric_code_ideal(exp):
    code = f7_code()
    names = code_names(3)
    got = code_ideal_via_elimination(code, parity=[[1, 2, 5]])
    ok, detail = _set_check(basis_pairs(got), pairs(exp["toric-code-ideal"], names), names)
    if ok and got != code_ideal_lex_gb(code):
        return False, "differs from the closed-form code-ideal basis"
    return ok, detail


def _gnames(code):
    from .monomial import generalized_names

    return generalized_names(code.n, code.q)


def check_generalized_generators(exp):
    code = ternary_6_3()
    names = _gnames(code)
    got = {(b.lead, b.tail) for b in generalized_ideal_generators(code).I_G}
    return _set_check(got, pairs(exp["generalized-generators"], names), names)


def check_generalized_lex(exp):
    code = ternary_6_3()
    names = _gnames(code)
    closed = generalized_lex_gb(code)
    ok, detail = _set_check(basis_pairs(closed), pairs(exp["generalized-lex"], names), names)
    if not ok:
        return ok, detail
    direct = buchberger(generalized_ideal_generators(code).generators, closed.order, names=names)
    if direct != closed:
        return False, "Buchberger from the generators gives a different reduced basis"
    return True, detail + "; Buchberger agrees"


def check_generalized_excluded(exp):
    code = ternary_6_3()
    names = _gnames(code)
    closed = generalized_lex_gb(code)
    bad = [p for p in pairs(exp["generalized-excluded"], names) if closed.contains(p)]
    if bad:
        return False, "the excluded binomial lies in the ideal"
    return True, "excluded binomial is not in the ideal"


def _check_restriction(exp, i):
    code = ternary_6_3()
    got = restrict_generalized(code, i)
    gnames = _gnames(code)
    # the expected generators use x{s}_{i}; compare after renaming onto x1..x6
    want = set()
    for u, v in pairs(exp[f"restriction-{i}"], gnames):
        want.add((u[i - 1::2], v[i - 1::2]))
    ok, detail = _set_check(basis_pairs(got), want, code_names(code.n))
    if ok and got != code_ideal_lex_gb(code):
        return False, "restriction differs from the code-ideal lex basis"
    return ok, detail + ("; equals the code-ideal lex basis" if ok else "")


def check_restriction_1(exp):
    return _check_restriction(exp, 1)


def check_restriction_2(exp):
    return _check_restriction(exp, 2)


def check_f9_phi(exp):
    F = f9_field()
    got = [list(phi(F, F.exp[j])) for j in range(1, 9)]
    want = [[0] * 6 + row for row in exp["f9-phi"]]
    return (got == want), f"phi values {['%d%d' % tuple(g[-2:]) for g in got]}"


def check_f9_m_vectors(exp):
    code = f9_code()
    F = code.field
    ms = m_vectors(code)
    bad = []
    for i, key in ((1, "f9-m1"), (2, "f9-m2")):
        for j, power in enumerate(exp[key], start=1):
            (beta,) = ms[(i, j)]
            if beta != F.exp[power]:
                bad.append(f"m{i}^({j}): got a^{F.log[beta]}, want a^{power}")
            elif list(phi(F, beta)[-2:]) != exp["f9-phi"][power - 1]:
                bad.append(f"phi(m{i}^({j})) mismatch")
    return (not bad), "; ".join(bad) or "16 m-vectors"


def check_f9_basis(exp):
    code = f9_code()
    names = _gnames(code)
    closed = generalized_lex_gb(code)
    ok, detail = _set_check(basis_pairs(closed), pairs(exp["f9-basis"], names), names)
    if not ok:
        return ok, detail
    direct = buchberger(generalized_ideal_generators(code).generators, closed.order, names=names)
    if direct != closed:
        return False, "Buchberger from the generators gives a different reduced basis"
    count = len(standard_monomials(closed))
    if count != exp["f9-standard-count"]:
        return False, f"{count} standard monomials"
    return True, f"{detail}; Buchberger agrees; {count} standard monomials"


def check_decode_complete(exp):
    data = exp["decode-complete"]
    code = ternary_7_2_5()
    names = code_names(code.n)
    basis = code_degrevlex_gb(code)
    mono = tuple(data["word"])
    if mono != parse_monomial(data["monomial"], names):
        return False, "word does not match the monomial"
    rem = basis.normal_form(mono)
    if rem != parse_monomial(data["remainder"], names):
        return False, f"remainder {format_monomial(rem, names)}"
    if list(rem) != data["error"]:
        return False, "error vector mismatch"
    c = tuple((a - b) % 3 for a, b in zip(mono, rem))
    if list(c) != data["codeword"] or not code.contains(c):
        return False, f"codeword {c}"
    out = complete_decode(code, data["word"], generalized_degrevlex_gb(code))
    if list(out.codeword) != data["codeword"]:
        return False, f"generalized-ideal decoding gave {out.codeword}"
    return True, f"remainder {data['remainder']}, codeword {c}"


def check_decode_heuristic(exp):
    data = exp["decode-heuristic"]
    code = ternary_7_2_5()
    names = code_names(code.n)
    basis = code_degrevlex_gb(code)
    w = data["word"]
    for i, (m, r) in enumerate(zip(data["monomials"], data["remainders"]), start=1):
        mono = tuple(i * a % 3 for a in w)
        if mono != parse_monomial(m, names):
            return False, f"scalar {i}: monomial mismatch"
        rem = basis.normal_form(mono)
        if rem != parse_monomial(r, names):
            return False, f"scalar {i}: remainder {format_monomial(rem, names)}"
    plain = tuple((a - b) % 3 for a, b in zip(w, basis.normal_form(tuple(w))))
    if list(plain) != data["plain_codeword"]:
        return False, f"plain division gives {plain}"
    out = heuristic_decode(code, w, basis)
    if out.scalar_used != data["scalar"] or list(out.codeword or ()) != data["codeword"]:
        return False, f"heuristic gave {out}"
    return True, f"scalar {out.scalar_used}, codeword {out.codeword}"


@dataclass(frozen=True)
class GoldenItem:
    name: str
    group: str
    check: object


ITEMS = (
    GoldenItem("toric-basis", "toric", check_toric_basis),
    GoldenItem("toric-substituted", "toric", check_toric_substituted),
    GoldenItem("toric-code-ideal", "toric", check_toric_code_ideal),
    GoldenItem("generalized-generators", "generalized", check_generalized_generators),
    GoldenItem("generalized-lex", "generalized", check_generalized_lex),
    GoldenItem("generalized-excluded", "generalized", check_generalized_excluded),
    GoldenItem("restriction-1", "generalized", check_restriction_1),
    GoldenItem("restriction-2", "generalized", check_restriction_2),
    GoldenItem("f9-phi", "extension", check_f9_phi),
    GoldenItem("f9-m-vectors", "extension", check_f9_m_vectors),
    GoldenItem("f9-basis", "extension", check_f9_basis),
    GoldenItem("decode-complete", "decode", check_decode_complete),
    GoldenItem("decode-heuristic", "decode", check_decode_heuristic),
)

GROUPS = tuple(dict.fromkeys(item.group for item in ITEMS))


@dataclass(frozen=True)
class ItemResult:
    name: str
    group: str
    passed: bool
    detail: str
    seconds: float


def run_suite(only=None, expected=None):
    """Run the pinned items (optionally only some groups or item names)."""
    exp = dict(EXPECTED)
    if expected:
        exp.update(expected)
    selected = set(only or ())
    unknown = selected - set(GROUPS) - {item.name for item in ITEMS}
    if unknown:
        raise ValueError(f"unknown golden group or item: {', '.join(sorted(unknown))}")
    results = []
    for item in ITEMS:
        if selected and item.group not in selected and item.name not in selected:
            continue
        start = time.perf_counter()
        try:
            ok, detail = item.check(exp)
        except Exception as exc:  # a crash is a failed item, not a crashed suite
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        results.append(ItemResult(item.name, item.group, bool(ok), detail, time.perf_counter() - start))
    return results
