"""Command line front end.

One verb per operation: gen writes colorings and patterns, lift turns a
pair coloring into a triple coloring, detect looks for structures in a
host coloring, table prints the pair tables, certify checks certificates,
search runs the avoidance engine, verify bundles consistency checks.

Data flows through stdin/stdout in the formats of module core; --output
redirects the primary artifact to a file.  Exit codes: 0 found/true/sat,
1 not-found/false/unsat, 2 usage or format error, 3 inconclusive search.
"""

from __future__ import annotations

import argparse
import contextlib
import os
import random
import sys

from .certify import (
    BetaChain,
    CertificationError,
    beta_table,
    count_downsets,
    extract_blue_jump_witness,
    gh_triangle_finder,
    profile_table,
    verify_profile_property,
)
from .construct import (
    gf16_coloring,
    has_mono_clique,
    lift,
    paley_coloring,
    pentagon_coloring,
    product_coloring,
    schur_coloring,
)
from .core import (
    FormatError,
    PairColoring,
    Witness,
    pair_rank,
    parse_pair_coloring,
    parse_pattern,
    parse_triple_coloring,
    parse_witness,
    serialize_pair_coloring,
    serialize_pattern,
    serialize_triple_coloring,
    serialize_witness,
)
from .detect import alpha_table, find_blue_embedding, find_blue_jump_member, longest_red_path
from .family import associated_graph, jump_min, monotone_path, power_path, validate_jump_member
from .search import (
    DEFAULT_BUDGET,
    SPLIT_DEPTH,
    AvoidanceProblem,
    JumpsFamily,
    bracket,
    decide,
)

WORKERS_ENV = "JUMPRAMSEY_WORKERS"

_SCHUR_DEFAULT = "1,4,10,13/2,3,11,12/5,6,7,8,9"


class _UsageError(Exception):
    pass


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="jumpramsey")
    sub = p.add_subparsers(dest="cmd", required=True)

    gen = sub.add_parser("gen", help="write a coloring or pattern")
    gsub = gen.add_subparsers(dest="what", required=True)
    g = gsub.add_parser("path")
    g.add_argument("--m", type=int, required=True)
    g.add_argument("--output")
    g = gsub.add_parser("power")
    g.add_argument("--m", type=int, required=True)
    g.add_argument("--t", type=int, required=True)
    g.add_argument("--output")
    g = gsub.add_parser("imin")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--output")
    for name in ("pentagon", "gf16"):
        g = gsub.add_parser(name)
        g.add_argument("--output")
    g = gsub.add_parser("schur")
    g.add_argument("--classes", default=_SCHUR_DEFAULT,
                   help="difference classes, e.g. 1,4/2,3 (default: 14-vertex)")
    g.add_argument("--output")
    g = gsub.add_parser("paley")
    g.add_argument("--q", type=int, required=True)
    g.add_argument("--output")
    g = gsub.add_parser("product")
    g.add_argument("--left", required=True)
    g.add_argument("--right", required=True)
    g.add_argument("--output")

    li = sub.add_parser("lift", help="triple coloring from a pair coloring")
    li.add_argument("--output")

    det = sub.add_parser("detect", help="find a structure in a host coloring")
    dsub = det.add_subparsers(dest="what", required=True)
    d = dsub.add_parser("redpath")
    d.add_argument("--m", type=int, required=True)
    d.add_argument("--output")
    d = dsub.add_parser("pattern")
    d.add_argument("--pattern", required=True, help="pattern file")
    d.add_argument("--output")
    d = dsub.add_parser("jumps")
    d.add_argument("--n", type=int, required=True)
    d.add_argument("--output")
    d = dsub.add_parser("clique")
    d.add_argument("--m", type=int, required=True)
    d.add_argument("--output")

    tab = sub.add_parser("table", help="print pair tables of a host coloring")
    tsub = tab.add_subparsers(dest="what", required=True)
    for name in ("alpha", "beta", "profiles"):
        t = tsub.add_parser(name)
        t.add_argument("--output")

    cert = sub.add_parser("certify", help="check or emit certificates")
    csub = cert.add_subparsers(dest="what", required=True)
    c = csub.add_parser("ghtriangle")
    c.add_argument("--m", type=int, required=True)
    c.add_argument("--jumps", required=True, help="comma-separated positions")
    c.add_argument("--chi", required=True, help="file of 'u v c' lines")
    c.add_argument("--output")
    c = csub.add_parser("witness")
    c.add_argument("--chain", required=True,
                   help="witness file with vertices and blocks")
    c.add_argument("--output")
    c = csub.add_parser("profileprop")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--output")
    c = csub.add_parser("downsets")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--output")

    se = sub.add_parser("search", help="avoidance search / bracketing")
    se.add_argument("--n", type=int, help="host size for a single decision")
    se.add_argument("--nmax", type=int, help="bracket up to this host size")
    se.add_argument("--red", required=True, help="path:<m>")
    se.add_argument("--blue", required=True,
                    help="path:<m> | power:<m>,<t> | jumps:<n>")
    se.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    se.add_argument("--workers", type=int, default=None)
    se.add_argument("--output")

    ver = sub.add_parser("verify", help="consistency checks")
    vsub = ver.add_subparsers(dest="what", required=True)
    v = vsub.add_parser("member")
    v.add_argument("--pattern", required=True, help="pattern file")
    v.add_argument("--jumps", help="comma-separated; default: file's jumps line")
    v = vsub.add_parser("roundtrip")
    v.add_argument("--n", type=int, default=2)
    v.add_argument("--seed", type=int, required=True)
    v.add_argument("--count", type=int, default=200)
    v.add_argument("--hosts", type=int, default=9)

    return p


def _emit(text: str, output: str | None, stdout) -> None:
    if output:
        with open(output, "w") as fh:
            fh.write(text)
    else:
        stdout.write(text)


def _read_file(path: str) -> str:
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise _UsageError(f"cannot read {path}: {exc.strerror}")


def _positions(text: str) -> frozenset[int]:
    try:
        return frozenset(int(tok) for tok in text.split(",") if tok)
    except ValueError:
        raise _UsageError(f"bad position list {text!r}")


def _cmd_gen(args, stdin, stdout) -> int:
    what = args.what
    if what == "path":
        out = serialize_pattern(monotone_path(args.m))
    elif what == "power":
        out = serialize_pattern(power_path(args.m, args.t))
    elif what == "imin":
        pattern, spec = jump_min(args.n)
        out = serialize_pattern(pattern, spec.sorted_jumps)
    elif what == "pentagon":
        out = serialize_pair_coloring(pentagon_coloring())
    elif what == "gf16":
        out = serialize_pair_coloring(gf16_coloring())
    elif what == "schur":
        classes = [
            [int(x) for x in part.split(",") if x]
            for part in args.classes.split("/")
        ]
        out = serialize_pair_coloring(schur_coloring(classes))
    elif what == "paley":
        out = serialize_pair_coloring(paley_coloring(args.q))
    else:
        left = parse_pair_coloring(_read_file(args.left))
        right = parse_pair_coloring(_read_file(args.right))
        out = serialize_pair_coloring(product_coloring(left, right))
    _emit(out, args.output, stdout)
    return 0


def _cmd_lift(args, stdin, stdout) -> int:
    chi = parse_pair_coloring(stdin.read())
    _emit(serialize_triple_coloring(lift(chi)), args.output, stdout)
    return 0


def _cmd_detect(args, stdin, stdout) -> int:
    what = args.what
    if what == "clique":
        chi = parse_pair_coloring(stdin.read())
        found = has_mono_clique(chi, args.m)
        if found is None:
            return 1
        _emit(serialize_witness(Witness(found)), args.output, stdout)
        return 0
    host = parse_triple_coloring(stdin.read())
    if what == "redpath":
        depth, path = longest_red_path(host)
        if depth < args.m - 1:
            return 1
        _emit(serialize_witness(Witness(path.vertices[: args.m])), args.output,
              stdout)
        return 0
    if what == "pattern":
        pattern, _ = parse_pattern(_read_file(args.pattern))
        emb = find_blue_embedding(host, pattern)
        if emb is None:
            return 1
        _emit(serialize_witness(Witness(emb.vertices)), args.output, stdout)
        return 0
    found = find_blue_jump_member(host, args.n)
    if found is None:
        return 1
    verts, spec = found
    _emit(serialize_witness(Witness(verts, jumps=spec.sorted_jumps)),
          args.output, stdout)
    return 0


def _cmd_table(args, stdin, stdout) -> int:
    host = parse_triple_coloring(stdin.read())
    what = args.what
    if what == "alpha":
        table = alpha_table(host)
        lines = [f"alpha {host.N}"]
        for u in range(1, host.N + 1):
            for v in range(u + 1, host.N + 1):
                lines.append(f"{u} {v} {table.value(u, v)}")
    elif what == "beta":
        table = beta_table(host)
        lines = [f"beta {host.N}"]
        for u in range(1, host.N + 1):
            for v in range(u + 1, host.N + 1):
                lines.append(f"{u} {v} {table.beta(u, v)}")
    else:
        profiles = profile_table(host)
        lines = [f"profiles {host.N}"]
        for v in range(1, host.N + 1):
            stair = " ".join(str(b) for b in profiles[v].maxB)
            lines.append(f"{v} {stair}".rstrip())
    _emit("\n".join(lines) + "\n", args.output, stdout)
    return 0


def _cmd_certify(args, stdin, stdout) -> int:
    what = args.what
    if what == "downsets":
        _emit(f"{count_downsets(args.n)}\n", args.output, stdout)
        return 0
    if what == "ghtriangle":
        chi = _parse_gh_coloring(_read_file(args.chi))
        tri = gh_triangle_finder(args.m, _positions(args.jumps), chi)
        _emit(" ".join(str(v) for v in tri) + "\n", args.output, stdout)
        return 0
    if what == "witness":
        w = parse_witness(_read_file(args.chain))
        if w.blocks is None:
            raise _UsageError("chain witness needs a 'blocks' field")
        host = parse_triple_coloring(stdin.read())
        chain = BetaChain(w.vertices, w.blocks, len(w.blocks) + 1)
        emb = extract_blue_jump_witness(host, chain)
        n = chain.ell - 1
        _emit(
            serialize_witness(
                Witness(emb.vertices, jumps=tuple(2 * i for i in range(1, n + 1)))
            ),
            args.output,
            stdout,
        )
        return 0
    host = parse_triple_coloring(stdin.read())
    report = verify_profile_property(host, args.n)
    lines = [f"profileprop N={report.N} n={report.n}"]
    for vs in report.groups:
        lines.append("group " + " ".join(str(v) for v in vs))
    lines.append(f"red-path {'yes' if report.has_red_path else 'no'}")
    if report.blue_member is None:
        lines.append("blue-member no")
    else:
        verts, spec = report.blue_member
        lines.append(
            "blue-member " + " ".join(str(v) for v in verts)
            + " jumps " + " ".join(str(j) for j in spec.sorted_jumps)
        )
    if report.triangle is None:
        lines.append("triangle none")
    else:
        lines.append("triangle " + " ".join(str(v) for v in report.triangle))
    if report.extended_chain is not None:
        ch = report.extended_chain
        lines.append(
            "chain " + " ".join(str(v) for v in ch.vertices)
            + " blocks " + " ".join(str(b) for b in ch.block_values)
        )
    lines.append("status " + ("clean" if report.clean else "triangle"))
    _emit("\n".join(lines) + "\n", args.output, stdout)
    return 0 if report.clean else 1


def _parse_gh_coloring(text: str) -> dict[tuple[int, int], int]:
    chi: dict[tuple[int, int], int] = {}
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 3:
            raise FormatError(f"expected 'u v c', got {line!r}", no)
        try:
            u, v, c = (int(x) for x in parts)
        except ValueError:
            raise FormatError(f"bad integer in {line!r}", no)
        if (u, v) in chi:
            raise FormatError(f"duplicate pair ({u}, {v})", no)
        chi[(u, v)] = c
    return chi


def _parse_red(text: str):
    kind, _, rest = text.partition(":")
    if kind != "path":
        raise _UsageError(f"red spec must be path:<m>, got {text!r}")
    try:
        m = int(rest)
    except ValueError:
        raise _UsageError(f"bad red spec {text!r}")
    if m < 3:
        raise _UsageError("red path needs at least 3 vertices")
    return monotone_path(m)


def _parse_blue(text: str):
    kind, _, rest = text.partition(":")
    try:
        if kind == "path":
            m = int(rest)
            if m < 3:
                raise _UsageError("blue path needs at least 3 vertices")
            return monotone_path(m)
        if kind == "power":
            m, t = (int(x) for x in rest.split(","))
            return power_path(m, t)
        if kind == "jumps":
            return JumpsFamily(int(rest))
    except (ValueError, TypeError) as exc:
        raise _UsageError(f"bad blue spec {text!r}: {exc}")
    raise _UsageError(f"blue spec must be path:, power: or jumps:, got {text!r}")


def _resolve_workers(args) -> int:
    if args.workers is not None:
        return args.workers
    raw = os.environ.get(WORKERS_ENV)
    if raw is None:
        return 1
    try:
        return int(raw)
    except ValueError:
        raise _UsageError(f"{WORKERS_ENV} must be an integer, got {raw!r}")


def _spec_text(spec) -> str:
    if isinstance(spec, JumpsFamily):
        return f"jumps:{spec.n}"
    if spec.edges and spec == monotone_path(spec.m):
        return f"path:{spec.m}"
    return f"pattern:{spec.m}"


def _certificate(N: int, red, blue, budget: int, outcome) -> str:
    return (
        f"{outcome.status} N={N}\n"
        f"red {_spec_text(red)}\n"
        f"blue {_spec_text(blue)}\n"
        f"budget {budget}\n"
        f"split-depth {SPLIT_DEPTH}\n"
        f"nodes {outcome.stats.nodes}\n"
        f"max-depth {outcome.stats.max_depth}\n"
    )


def _cmd_search(args, stdin, stdout, stderr) -> int:
    red = _parse_red(args.red)
    blue = _parse_blue(args.blue)
    workers = _resolve_workers(args)
    if (args.n is None) == (args.nmax is None):
        raise _UsageError("give exactly one of --n and --nmax")
    if args.nmax is not None:
        out = bracket(red, blue, args.nmax, budget=args.budget, workers=workers)
        for level in out.levels:
            stdout.write(f"N={level.N} {level.outcome.status}\n")
            if args.output and level.outcome.status == "sat":
                with open(f"{args.output}-N{level.N}.triples", "w") as fh:
                    fh.write(serialize_triple_coloring(level.outcome.witness))
            if args.output and level.outcome.status == "unsat":
                with open(f"{args.output}-N{level.N}.cert", "w") as fh:
                    fh.write(_certificate(level.N, red, blue, args.budget,
                                          level.outcome))
        stdout.write(f"largest-sat {out.largest_sat}\n")
        stdout.write(f"status {out.status}\n")
        return 3 if out.status == "inconclusive" else 0

    outcome = decide(AvoidanceProblem(args.n, red, blue), budget=args.budget,
                     workers=workers)
    if outcome.status == "sat":
        _emit(serialize_triple_coloring(outcome.witness), args.output, stdout)
        stderr.write(
            f"sat nodes={outcome.stats.nodes} "
            f"max-depth={outcome.stats.max_depth}\n"
        )
        return 0
    if outcome.status == "unsat":
        _emit(_certificate(args.n, red, blue, args.budget, outcome),
              args.output, stdout)
        return 1
    stderr.write(f"inconclusive budget={args.budget}\n")
    return 3


def _cmd_verify(args, stdin, stdout) -> int:
    if args.what == "member":
        pattern, file_jumps = parse_pattern(_read_file(args.pattern))
        if args.jumps is not None:
            jumps = _positions(args.jumps)
        elif file_jumps is not None:
            jumps = frozenset(file_jumps)
        else:
            raise _UsageError("no jump set: pass --jumps or a file jumps line")
        report = validate_jump_member(pattern, jumps)
        if report.valid:
            stdout.write("valid\n")
            return 0
        stdout.write(f"invalid: {report.reason}\n")
        return 1

    rng = random.Random(args.seed)
    applicable = verified = 0
    for _ in range(args.count):
        chi = _planted_coloring(args.hosts, args.n, rng)
        found = find_blue_jump_member(lift(chi), args.n)
        if found is None:
            continue
        applicable += 1
        verts, spec = found
        m = len(verts)
        chi_h = {
            (a, b): chi.color(verts[a - 1], verts[b - 1])
            for (a, b) in associated_graph(m, spec).sorted_pairs
        }
        x, y, z = gh_triangle_finder(m, spec, chi_h)
        hx, hy, hz = verts[x - 1], verts[y - 1], verts[z - 1]
        if chi.color(hx, hy) == chi.color(hy, hz) == chi.color(hx, hz):
            verified += 1
    stdout.write(f"count {args.count} applicable {applicable} "
                 f"verified {verified}\n")
    return 0 if verified == applicable else 1


def _planted_coloring(N: int, k: int, rng: random.Random) -> PairColoring:
    chi = PairColoring.from_function(N, k, lambda u, v: rng.randint(1, k))
    a, b, c = sorted(rng.sample(range(1, N + 1), 3))
    colors = list(chi.colors)
    shade = rng.randint(1, k)
    for pair in ((a, b), (b, c), (a, c)):
        colors[pair_rank(*pair, N)] = shade
    return PairColoring(N, k, tuple(colors))


def dispatch(argv, stdin=None, stdout=None, stderr=None) -> int:
    stdin = stdin if stdin is not None else sys.stdin
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    parser = _build_parser()
    with contextlib.redirect_stdout(stdout), contextlib.redirect_stderr(stderr):
        try:
            args = parser.parse_args(argv)
        except SystemExit as exc:
            return exc.code if isinstance(exc.code, int) else 2
    try:
        if args.cmd == "gen":
            return _cmd_gen(args, stdin, stdout)
        if args.cmd == "lift":
            return _cmd_lift(args, stdin, stdout)
        if args.cmd == "detect":
            return _cmd_detect(args, stdin, stdout)
        if args.cmd == "table":
            return _cmd_table(args, stdin, stdout)
        if args.cmd == "certify":
            return _cmd_certify(args, stdin, stdout)
        if args.cmd == "search":
            return _cmd_search(args, stdin, stdout, stderr)
        return _cmd_verify(args, stdin, stdout)
    except (FormatError, _UsageError, CertificationError, ValueError) as exc:
        stderr.write(f"error: {exc}\n")
        return 2


def main() -> None:
    sys.exit(dispatch(sys.argv[1:]))
