"""Command-line front end.

Code-spec files look like::

    # comments start with '#'
    field p=3 r=2 poly=2,1,1
    generator
    1 0 a^2
    0 1 a^5

Prime-field entries are integers ``0..p-1``; extension-field entries are
``0``, ``1``, ``a`` or ``a^j`` (powers of the primitive element).
"""

import argparse
import json
import re
import sys

from . import golden
from .code import LinearCode
from .decode import (
    code_degrevlex_gb,
    compare,
    complete_decode,
    coset_transversal,
    generalized_degrevlex_gb,
    heuristic_decode,
    oracle_decode,
)
from .errors import CodeIdealError, ParseError, WrongOrder
from .field import FieldSpec, GaloisField
from .groebner import buchberger, dumps, fglm, loads
from .ideal import (
    code_ideal_generators,
    code_ideal_lex_gb,
    code_toric_gb,
    generalized_ideal_generators,
    generalized_lex_gb,
    lift_parity,
)
from .monomial import MonomialOrder, code_names, format_monomial, generalized_names

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_MATH = 3
EXIT_GOLDEN = 4
EXIT_IO = 5

EPILOG = """exit codes:
  0  success
  2  malformed input (bad flags, code-spec or basis file)
  3  math-domain error (not a field, rank-deficient code, wrong order, ...)
  4  verify-paper found a mismatch
  5  file could not be read or written
"""


# -- code-spec parsing -----------------------------------------------------

_FIELD_KEYS = {"p", "r", "poly", "alpha"}


def _parse_field_line(text, lineno):
    values = {}
    for m in list(re.finditer(r"\S+", text))[1:]:
        tok, col = m.group(), m.start() + 1
        key, sep, val = tok.partition("=")
        if not sep or key not in _FIELD_KEYS:
            raise ParseError(f"bad field option {tok!r}", line=lineno, column=col)
        try:
            if key == "poly":
                values[key] = tuple(int(c) for c in val.split(","))
            else:
                values[key] = int(val)
        except ValueError:
            raise ParseError(f"bad value in {tok!r}", line=lineno, column=col) from None
    if "p" not in values:
        raise ParseError("field line needs p=<prime>", line=lineno, column=1)
    return FieldSpec(values["p"], values.get("r", 1), values.get("poly", ()), values.get("alpha"))


_POWER = re.compile(r"a(?:\^(\d+))?")


def _parse_entry(tok, field, lineno, col):
    if field.r == 1:
        if not tok.isdigit() or int(tok) >= field.p:
            raise ParseError(f"entry {tok!r} is not in 0..{field.p - 1}", line=lineno, column=col)
        return int(tok)
    if tok == "0":
        return 0
    if tok == "1":
        return 1
    m = _POWER.fullmatch(tok)
    if not m:
        raise ParseError(f"entry {tok!r} must be 0, 1, a or a^j", line=lineno, column=col)
    return field.exp[(int(m.group(1) or 1) - 1) % (field.q - 1) + 1]


def parse_code_text(text):
    """Parse code-spec text into a ``LinearCode``."""
    lines = [(i, ln.split("#", 1)[0].rstrip()) for i, ln in enumerate(text.splitlines(), start=1)]
    lines = [(i, ln) for i, ln in lines if ln.strip()]
    if not lines or lines[0][1].split()[0] != "field":
        raise ParseError("expected a 'field' line first", line=lines[0][0] if lines else 1, column=1)
    lineno, first = lines[0]
    field = GaloisField(_parse_field_line(first, lineno))
    if len(lines) < 2 or lines[1][1].strip() != "generator":
        raise ParseError("expected 'generator' after the field line",
                         line=lines[1][0] if len(lines) > 1 else lineno + 1, column=1)
    rows = []
    for lineno, ln in lines[2:]:
        row = []
        for m in re.finditer(r"\S+", ln):
            row.append(_parse_entry(m.group(), field, lineno, m.start() + 1))
        if rows and len(row) != len(rows[0]):
            raise ParseError(f"row has {len(row)} entries, expected {len(rows[0])}", line=lineno, column=1)
        rows.append(row)
    if not rows:
        raise ParseError("empty generator block", line=lines[1][0] + 1, column=1)
    return LinearCode(field, rows)


def parse_code_spec(path):
    with open(path, encoding="utf-8") as fh:
        return parse_code_text(fh.read())


def parse_word(text):
    try:
        return tuple(int(s) for s in text.split(","))
    except ValueError:
        raise ParseError(f"word must be comma-separated integers, got {text!r}") from None


# -- output helpers --------------------------------------------------------

def _word(w):
    return ",".join(str(a) for a in w)


def _emit_records(out, fmt, records):
    """``records`` is a list of tuples; text mode aligns, tsv mode tab-joins."""
    for rec in records:
        rec = [str(x) for x in rec]
        out.write(("\t".join(rec) if fmt == "tsv" else " ".join(rec)) + "\n")


def _emit_basis(out, fmt, basis):
    if fmt == "tsv":
        out.write(f"#order\t{basis.order.describe()}\tnvars\t{basis.nvars}\n")
        for b in basis.elements:
            out.write(f"{format_monomial(b.lead, basis.names)}\t{format_monomial(b.tail, basis.names)}\n")
    else:
        out.write(dumps(basis))


def _field_banner(code):
    f = code.field
    poly = f"poly={','.join(map(str, f.poly))} " if f.r > 1 else ""
    return f"# field p={f.p} r={f.r} {poly}alpha={f.alpha}  code [{code.n},{code.k}] d={code.d}\n"


# -- basis construction ----------------------------------------------------

def build_basis(code, ideal, order_kind, closed_form):
    if ideal == "code":
        n = code.n
        order = MonomialOrder.make(order_kind, n)
        if closed_form:
            lex = code_ideal_lex_gb(code)
            return lex if order_kind == "lex" else fglm(lex, order)
        return buchberger(code_ideal_generators(code).generators, order, names=code_names(n))
    if ideal == "generalized":
        N = code.n * (code.q - 1)
        order = MonomialOrder.make(order_kind, N)
        if closed_form:
            lex = generalized_lex_gb(code)
            return lex if order_kind == "lex" else fglm(lex, order)
        return buchberger(generalized_ideal_generators(code).generators, order,
                          names=generalized_names(code.n, code.q))
    if ideal == "toric":
        if closed_form:
            raise ParseError("--closed-form does not apply to the toric ideal")
        m = code.n - code.k
        return code_toric_gb(code, order=MonomialOrder.make(order_kind, code.n + m))
    raise ParseError(f"unknown ideal {ideal!r}")


def _load_basis(path):
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())


# -- subcommands -----------------------------------------------------------

def cmd_gb(args, out):
    code = parse_code_spec(args.spec)
    basis = build_basis(code, args.ideal, args.order, args.closed_form)
    if args.emit:
        with open(args.emit, "w", encoding="utf-8") as fh:
            fh.write(dumps(basis))
    if args.format == "text":
        out.write(_field_banner(code))
        if args.ideal == "toric":
            out.write(f"# lifted parity check {lift_parity(code).tolist()}\n")
    _emit_basis(out, args.format, basis)
    return EXIT_OK


def _decode_basis(code, args, kind):
    if args.basis:
        basis = _load_basis(args.basis)
    elif kind == "heuristic":
        basis = code_degrevlex_gb(code)
    else:
        basis = generalized_degrevlex_gb(code)
    if not basis.order.degree_compatible:
        raise WrongOrder("decoding needs a degrevlex basis")
    return basis


def cmd_decode(args, out):
    code = parse_code_spec(args.spec)
    word = parse_word(args.word)
    if args.method == "oracle":
        outcome = oracle_decode(code, word)
    elif args.method == "heuristic":
        outcome = heuristic_decode(code, word, _decode_basis(code, args, "heuristic"))
    else:
        outcome = complete_decode(code, word, _decode_basis(code, args, "complete"))
    if args.format == "text":
        out.write(_field_banner(code))
    recs = [("status", outcome.status)]
    if outcome.ok:
        recs += [("codeword", _word(outcome.codeword)), ("error", _word(outcome.error)),
                 ("unique", str(outcome.unique).lower())]
    if outcome.scalar_used is not None:
        recs.append(("scalar", outcome.scalar_used))
    recs.append(("reductions", outcome.reductions_performed))
    _emit_records(out, args.format, recs)
    return EXIT_OK


def cmd_compare(args, out):
    code = parse_code_spec(args.spec)
    methods = ["complete", "oracle"]
    code_basis = None
    if code.field.r == 1:
        methods.insert(0, "heuristic")
        code_basis = code_degrevlex_gb(code)
    stats = compare(code, args.trials, args.weight, seed=args.seed, code_basis=code_basis,
                    generalized_basis=generalized_degrevlex_gb(code), methods=methods)
    if args.format == "text":
        out.write(_field_banner(code))
        out.write(f"# trials={args.trials} weight={args.weight} seed={args.seed}\n")
        out.write(f"{'method':<10} {'successes':>9} {'failures':>9} {'wrong':>6} {'mean_reductions':>15}\n")
        for s in stats:
            out.write(f"{s.method:<10} {s.successes:>9} {s.failures:>9} {s.wrong:>6} {s.mean_reductions:>15.3f}\n")
    else:
        out.write("method\tsuccesses\tfailures\twrong\tmean_reductions\n")
        for s in stats:
            out.write(f"{s.method}\t{s.successes}\t{s.failures}\t{s.wrong}\t{s.mean_reductions:.3f}\n")
    return EXIT_OK


def cmd_transversal(args, out):
    code = parse_code_spec(args.spec)
    if args.basis:
        basis = _load_basis(args.basis)
    else:
        basis = build_basis(code, "code", args.order, closed_form=True)
    table = coset_transversal(code, basis)
    if args.format == "text":
        out.write(_field_banner(code))
        out.write(f"# {len(table)} cosets, order {basis.order.describe()}\n")
    recs = [(format_monomial(u, basis.names), _word(rep), _word(code.syndrome(rep)))
            for u, rep in table.items()]
    _emit_records(out, args.format, recs)
    return EXIT_OK


def cmd_verify(args, out):
    expected = None
    if args.golden:
        with open(args.golden, encoding="utf-8") as fh:
            try:
                expected = json.load(fh)
            except json.JSONDecodeError as exc:
                raise ParseError(f"golden file: {exc.msg}", line=exc.lineno, column=exc.colno) from None
    try:
        results = golden.run_suite(args.only, expected)
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        if args.format == "tsv":
            out.write(f"{r.group}\t{r.name}\t{status}\t{r.detail}\n")
        else:
            out.write(f"{status} {r.group}/{r.name}: {r.detail}\n")
    failed = [r for r in results if not r.passed]
    if args.format == "text":
        out.write(f"# {len(results) - len(failed)}/{len(results)} items passed\n")
    return EXIT_GOLDEN if failed else EXIT_OK


# -- argument parsing ------------------------------------------------------

def _global_options(p, suppress):
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--format", choices=("text", "tsv"), default=d("text"), help="output format")
    p.add_argument("--seed", type=int, default=d(0), help="master seed for random trials")
    p.add_argument("--order", choices=("lex", "degrevlex"), default=d("lex"), help="monomial order")
    p.add_argument("--ideal", choices=("code", "generalized", "toric"), default=d("code"),
                   help="which ideal to build")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="codeideal",
        description="Binomial ideals of linear codes: Gröbner bases and decoding.",
        epilog=EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    _global_options(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text):
        p = sub.add_parser(name, help=help_text, description=help_text, epilog=EPILOG,
                           formatter_class=argparse.RawDescriptionHelpFormatter)
        _global_options(p, suppress=True)
        return p

    p = add("gb", "compute a reduced Gröbner basis of a code's ideal")
    p.add_argument("spec", help="code-spec file")
    p.add_argument("--closed-form", action="store_true",
                   help="build the lex basis from the standard form instead of running Buchberger")
    p.add_argument("--emit", metavar="PATH", help="also write the basis to PATH")
    p.set_defaults(func=cmd_gb)

    p = add("decode", "decode one received word")
    p.add_argument("spec", help="code-spec file")
    p.add_argument("--method", choices=("complete", "heuristic", "oracle"), default="complete")
    p.add_argument("--word", required=True, help="comma-separated value-form digits")
    p.add_argument("--basis", metavar="PATH", help="precomputed degrevlex basis file")
    p.set_defaults(func=cmd_decode)

    p = add("compare", "Monte-Carlo comparison of the decoders")
    p.add_argument("spec", help="code-spec file")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--weight", type=int, default=1, help="number of corrupted positions")
    p.set_defaults(func=cmd_compare)

    p = add("transversal", "list standard monomials with their coset representatives and syndromes")
    p.add_argument("spec", help="code-spec file")
    p.add_argument("--basis", metavar="PATH", help="precomputed code-ideal basis file")
    p.set_defaults(func=cmd_transversal)

    p = add("verify-paper", "recompute the pinned worked examples and compare")
    p.add_argument("--only", nargs="+", metavar="GROUP",
                   help=f"restrict to groups ({', '.join(golden.GROUPS)}) or item names")
    p.add_argument("--golden", metavar="PATH", help="JSON file overriding expected values")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None, out=None):
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except ParseError as exc:
        print(f"codeideal: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"codeideal: {exc}", file=sys.stderr)
        return EXIT_IO
    except (CodeIdealError, ValueError) as exc:
        print(f"codeideal: {exc}", file=sys.stderr)
        return EXIT_MATH


if __name__ == "__main__":
    sys.exit(main())
