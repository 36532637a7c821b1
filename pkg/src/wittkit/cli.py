"""Batch command-line front end.

Exit codes: 0 ok, 2 rejected (witness or claim does not verify, or
the answer is negative), 1 error (unreadable or malformed input).
"""

import argparse
import os
import sys
import time
from dataclasses import dataclass, field

from .fields import QQ
from .formats import (ParseError, format_matrix, format_row_file, format_word,
                      parse_hom, parse_matrix, parse_polys, parse_row_file, parse_witness, read_ring)
from .groebner import groebner_basis
from .matrices import AlternatingMatrix, MatrixError, det, factor_integer_sl, pfaffian, verify_congruence
from .poly import format_poly
from .rings import RingPresentation, ZeroRingError, parse_field
from .symbols import ConstructionError, factorial_completion_3, pushforward, suslin_matrix, vaserstein_symbol
from .umrows import (NotUnimodularError, RowWithSection, check_unimodular,
                     find_elementary_reduction, power_last, section)
from .witt import (InvariantError, SLWitness, WittRepresentative, orbit_bruteforce,
                   verify_transitivity_certificate, verify_witt_equiv, verify_wsl_equiv)

EXIT = {"ok": 0, "rejected": 2, "error": 1}
DEFAULT_MAX_DEGREE = 64


class CommandError(Exception):
    pass


@dataclass
class RunReport:
    status: str
    elapsed_ms: float = 0.0
    lines: list = field(default_factory=list)
    diagnostic: str = ""

    @property
    def exit_code(self):
        return EXIT[self.status]


class _Out:
    def __init__(self, tsv):
        self.tsv = tsv
        self.lines = []

    def kv(self, key, value):
        self.lines.append(f"{key}\t{value}" if self.tsv else f"{key}={value}")

    def items(self, key, values):
        values = [str(v) for v in values]
        self.lines.append("\t".join([key] + values) if self.tsv else f"{key}: " + ", ".join(values))

    def matrix(self, key, M):
        if self.tsv:
            for i, r in enumerate(M.rows):
                self.lines.append("\t".join([key, str(i + 1)] + [str(a) for a in r]))
        else:
            self.lines.append(f"{key}:")
            self.lines.extend(format_matrix(M, pretty=True).splitlines())

    def text(self, block):
        self.lines.extend(block.splitlines())


def _max_degree():
    raw = os.environ.get("WITTKIT_MAX_DEGREE", str(DEFAULT_MAX_DEGREE))
    try:
        return int(raw)
    except ValueError:
        raise CommandError(f"WITTKIT_MAX_DEGREE must be an integer, got {raw!r}") from None


def _cap(elements, what):
    cap = _max_degree()
    for a in elements:
        if a.degree() > cap:
            raise CommandError(f"{what}: degree {a.degree()} exceeds WITTKIT_MAX_DEGREE={cap}")


def _read(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise CommandError(f"{path}: {exc.strerror}") from None


def _ring(args):
    fld = parse_field(args.field) if args.field else None
    return read_ring(_read(args.ring), field=fld, source=args.ring)


def _matrix(path, ring):
    M = parse_matrix(_read(path), ring, source=path)
    _cap([a for r in M.rows for a in r], path)
    return M


def _alt(path, ring):
    M = _matrix(path, ring)
    try:
        return AlternatingMatrix.of(M)
    except MatrixError as exc:
        raise CommandError(f"{path}: {exc}") from None


def _rep(path, ring):
    A = _alt(path, ring)
    try:
        return WittRepresentative(A)
    except MatrixError as exc:
        raise CommandError(f"{path}: {exc}") from None


def _row(path, ring, need_section=False):
    v, w = parse_row_file(_read(path), ring, source=path)
    _cap(v + (w or []), path)
    if need_section and w is None:
        raise CommandError(f"{path}: a 'w:' section line is required")
    return v, w


def _rowsec(path, ring):
    v, w = _row(path, ring, need_section=True)
    try:
        return RowWithSection.from_lists(ring, v, w)
    except NotUnimodularError:
        return None


def _write(path, text):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text + "\n")


# -- subcommands --------------------------------------------------------------

def cmd_gb(args, out):
    ring = _ring(args)
    if args.polys:
        polys = parse_polys(_read(args.polys), ring.__class__(ring.ambient), source=args.polys)
        basis = groebner_basis([p.poly for p in polys], ring.ambient)
    else:
        basis = list(ring.basis)
    for g in basis:
        out.kv("gb", format_poly(g)) if out.tsv else out.lines.append(format_poly(g))
    return "ok"


def cmd_nf(args, out):
    ring = _ring(args)
    for p in parse_polys(_read(args.polys), ring, source=args.polys):
        out.kv("nf", p) if out.tsv else out.lines.append(str(p))
    return "ok"


def cmd_member(args, out):
    ring = _ring(args)
    gens = parse_polys(_read(args.gens), ring, source=args.gens)
    try:
        target = ring(args.target)
    except ValueError as exc:
        raise CommandError(f"--target: {exc}") from None
    cof = ring.ideal_membership(target, gens)
    if cof is None:
        return "rejected"
    out.items("cofactors", cof)
    return "ok"


def cmd_unimodular(args, out):
    ring = _ring(args)
    v, _ = _row(args.row, ring)
    row = check_unimodular(v, ring)
    if row is None:
        return "rejected"
    out.items("cofactors", row.cofactors)
    if args.reduce_exponent:
        found = find_elementary_reduction(row, args.reduce_exponent, best_effort=True)
        if found is None:
            out.kv("reduction", "not-found")
        else:
            word, target = found
            out.items("target", target.entries)
            for g in word.word:
                out.kv("generator", g) if out.tsv else out.lines.append(str(g))
    return "ok"


def cmd_section(args, out):
    ring = _ring(args)
    v, _ = _row(args.row, ring)
    rs = section(v, ring)
    if rs is None:
        return "rejected"
    if args.power and args.power > 1:
        if max(a.degree() for a in rs.v) * args.power > _max_degree():
            raise CommandError(f"--power {args.power} exceeds WITTKIT_MAX_DEGREE")
        rs = power_last(rs, args.power)
    text = format_row_file(rs.v, rs.w)
    if args.out:
        _write(args.out, text)
    if out.tsv:
        out.items("v", rs.v)
        out.items("w", rs.w)
    else:
        out.text(text)
    return "ok"


def cmd_pfaffian(args, out):
    ring = _ring(args)
    out.kv("pfaffian", pfaffian(_alt(args.matrix, ring)))
    return "ok"


def cmd_det(args, out):
    ring = _ring(args)
    M = _matrix(args.matrix, ring)
    try:
        out.kv("det", det(M))
    except MatrixError as exc:
        raise CommandError(f"{args.matrix}: {exc}") from None
    return "ok"


def _emit_matrix(args, out, key, M):
    if args.out:
        _write(args.out, format_matrix(M))
    out.matrix(key, M)


def cmd_suslin(args, out):
    ring = _ring(args)
    v, w = _row(args.rowsec, ring, need_section=True)
    S = suslin_matrix(v, w, ring)
    _emit_matrix(args, out, "matrix", S.matrix)
    out.kv("order", S.order)
    out.kv("det", det(S.matrix))
    return "ok"


def cmd_complete3(args, out):
    ring = _ring(args)
    rs = _rowsec(args.rowsec, ring)
    if rs is None or len(rs) != 3:
        return "rejected"
    M = factorial_completion_3(rs)
    _emit_matrix(args, out, "matrix", M)
    out.kv("det", det(M))
    return "ok"


def cmd_vaserstein(args, out):
    ring = _ring(args)
    rs = _rowsec(args.rowsec, ring)
    if rs is None or len(rs) != 3:
        return "rejected"
    V = vaserstein_symbol(rs).matrix
    _emit_matrix(args, out, "matrix", V)
    out.kv("pfaffian", pfaffian(V))
    return "ok"


def cmd_verify_congruence(args, out):
    ring = _ring(args)
    M, N, phi = (_matrix(p, ring) for p in (args.m, args.n, args.phi))
    return "ok" if verify_congruence(M, N, phi) else "rejected"


def cmd_verify_witt(args, out):
    ring = _ring(args)
    M, N = _rep(args.m, ring), _rep(args.n, ring)
    wit = parse_witness(_read(args.witness), ring, source=args.witness)
    ok = verify_witt_equiv(M, N, wit)
    if ok:
        out.kv("pfaffian", M.pf)
    return "ok" if ok else "rejected"


def cmd_verify_wsl(args, out):
    ring = _ring(args)
    M, N = _rep(args.m, ring), _rep(args.n, ring)
    wit = parse_witness(_read(args.witness), ring, source=args.witness)
    sigma = _matrix(args.sigma, ring)
    try:
        sigma = SLWitness(sigma)
    except MatrixError as exc:
        raise CommandError(f"{args.sigma}: {exc}") from None
    return "ok" if verify_wsl_equiv(M, N, wit, sigma) else "rejected"


def cmd_verify_transitivity(args, out):
    ring = _ring(args)
    v, _ = _row(args.row, ring)
    chi = _alt(args.chi, ring)
    P = _matrix(args.psi, ring)
    return "ok" if verify_transitivity_certificate(v, chi, P) else "rejected"


def cmd_apply_hom(args, out):
    fld = parse_field(args.field) if args.field else None
    src = read_ring(_read(args.source), field=fld, source=args.source)
    tgt = read_ring(_read(args.target), field=fld, source=args.target)
    h = parse_hom(_read(args.hom), src, tgt, src_name=args.hom)
    if args.matrix:
        M = pushforward(h, _matrix(args.matrix, src))
        _emit_matrix(args, out, "matrix", M)
    if args.polys:
        for p in parse_polys(_read(args.polys), src, source=args.polys):
            out.kv("image", h(p)) if out.tsv else out.lines.append(str(h(p)))
    return "ok"


def cmd_orbit(args, out):
    part = orbit_bruteforce(args.p, args.n, args.generators)
    if out.tsv:
        out.kv("orbits", len(part.orbits))
        out.items("sizes", part.sizes)
    else:
        out.lines.append(part.summary())
    if args.csv:
        with open(args.csv, "w", encoding="utf-8") as fh:
            fh.write("orbit,size,representative\n")
            for k, o in enumerate(part.orbits):
                fh.write(f"{k},{len(o)},{' '.join(map(str, o[0]))}\n")
    return "ok"


def cmd_factor_slz(args, out):
    Z = RingPresentation((), field=QQ)
    M = parse_matrix(_read(args.matrix), Z, source=args.matrix)
    ints = []
    for r in M.rows:
        row = []
        for a in r:
            c = a.constant_value()
            if c != int(c):
                raise CommandError(f"{args.matrix}: entries must be integers")
            row.append(int(c))
        ints.append(row)
    try:
        word = factor_integer_sl(ints, Z)
    except MatrixError as exc:
        raise CommandError(f"{args.matrix}: {exc}") from None
    text = format_word(word)
    if args.out:
        _write(args.out, text)
    if out.tsv:
        out.kv("rank", word.n)
        for g in word.word:
            out.lines.append("\t".join(["generator", g.kind, str(g.i), str(g.j), str(g.lam)]))
    else:
        out.text(text)
    return "ok"


COMMANDS = {
    "gb": cmd_gb, "nf": cmd_nf, "member": cmd_member, "unimodular": cmd_unimodular,
    "section": cmd_section, "pfaffian": cmd_pfaffian, "det": cmd_det, "suslin": cmd_suslin,
    "complete3": cmd_complete3, "vaserstein": cmd_vaserstein,
    "verify-congruence": cmd_verify_congruence, "verify-witt": cmd_verify_witt,
    "verify-wsl": cmd_verify_wsl, "verify-transitivity": cmd_verify_transitivity,
    "apply-hom": cmd_apply_hom, "orbit": cmd_orbit, "factor-slz": cmd_factor_slz,
}


def build_parser():
    parser = argparse.ArgumentParser(prog="wittkit", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tsv", action="store_true", help="tab-separated machine output")
    common.add_argument("--field", help="override the ring's field: Q or Fp:<p>")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, *positional, help=None):
        p = sub.add_parser(name, parents=[common], help=help)
        for arg in positional:
            p.add_argument(arg)
        return p

    p = add("gb", "ring", help="reduced Groebner basis of the relations (or of a polynomial file)")
    p.add_argument("polys", nargs="?")
    add("nf", "ring", "polys", help="normal forms, one per input line")
    p = add("member", "ring", "gens", help="ideal membership with cofactors")
    p.add_argument("--target", default="1")
    p = add("unimodular", "ring", "row", help="decide unimodularity, print cofactors")
    p.add_argument("--reduce-exponent", type=int, default=0,
                   help="best-effort search for an elementary reduction to (w1,..,wn^e)")
    p = add("section", "ring", "row", help="compute a section; optionally raise the last entry")
    p.add_argument("--power", type=int, default=1)
    p.add_argument("--out")
    add("pfaffian", "ring", "matrix", help="Pfaffian of an alternating matrix")
    add("det", "ring", "matrix", help="determinant of a square matrix")
    for name, text in (("suslin", "Suslin matrix of a row and its section"),
                       ("complete3", "determinant-one completion of (a, b, c^2)"),
                       ("vaserstein", "alternating 4 x 4 matrix with Pfaffian 1")):
        p = add(name, "ring", "rowsec", help=text)
        p.add_argument("--out")
    add("verify-congruence", "ring", "m", "n", "phi", help="phi^t M phi == N")
    add("verify-witt", "ring", "m", "n", "witness", help="check a stabilized equivalence witness")
    add("verify-wsl", "ring", "m", "n", "witness", "sigma", help="same, after twisting N by sigma")
    add("verify-transitivity", "ring", "row", "chi", "psi", help="psi preserves chi and has first row v")
    p = add("apply-hom", "source", "target", "hom", help="push polynomials or a matrix along a ring map")
    p.add_argument("--polys")
    p.add_argument("--matrix")
    p.add_argument("--out")
    p = sub.add_parser("orbit", parents=[common], help="orbit brute force on Um_n(GF(p))")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--n", type=int, default=4)
    p.add_argument("--generators", choices=("E", "SE", "both"), default="SE")
    p.add_argument("--csv")
    p = add("factor-slz", "matrix", help="elementary word for an integer matrix of determinant 1")
    p.add_argument("--out")
    return parser


def run(argv):
    """Parse ``argv`` and execute one subcommand; never raises for bad input."""
    parser = build_parser()
    start = time.perf_counter()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return RunReport("error", diagnostic="usage error" if exc.code else "")
    out = _Out(args.tsv)
    try:
        status = COMMANDS[args.command](args, out)
        diagnostic = ""
    except (CommandError, ParseError, ZeroRingError, MatrixError, NotUnimodularError) as exc:
        status, diagnostic = "error", str(exc)
    except ConstructionError as exc:
        status, diagnostic = "error", f"internal construction failure: {exc}"
    except InvariantError as exc:
        status, diagnostic = "error", f"internal invariant failure: {exc}"
    except ValueError as exc:
        status, diagnostic = "error", str(exc)
    elapsed = (time.perf_counter() - start) * 1000
    lines = out.lines if status != "error" else []
    head = f"status\t{status}" if args.tsv else status
    return RunReport(status, elapsed, [head] + lines, diagnostic)


def main(argv=None):
    report = run(sys.argv[1:] if argv is None else argv)
    for line in report.lines:
        print(line)
    if report.diagnostic:
        print(f"error: {report.diagnostic}", file=sys.stderr)
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
