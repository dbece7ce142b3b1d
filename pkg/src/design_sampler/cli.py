"""Command-line front end.

Exit status: 0 on success, 1 when the requested object provably does not
exist (or a verification fails), 2 on bad input, 3 when a search budget runs
out before a decision.
"""
from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import io, nesting, tables
from .constructions import LiftError, subset_lift, subsets, triple_sampling, triple_starter
from .designs import (DesignError, NotSubgraphError, PatternFamily, complete_design,
                      required_redundancy, verify_design)
from .graphs import complete_graph, enumerate_copies
from .groups import make_group, orbits
from .report import report
from .sampler import (NoSamplingError, SamplingError, compose, floor_sampling,
                      regular_embedding, regular_sampling, semiregular_sampling,
                      verify_embedding, verify_sampling)

EXIT_OK, EXIT_NONE, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3

GROUPS = {"cyclic": "cyclic", "affine": "affine-square", "sym": "symmetric"}

BUILTIN_TABLES = {
    "c4-cyclic": None, "c4-affine": None,
    "n23": tables.N23_ROWS, "n11-4": tables.N11_U4_ROWS,
    "n11-3": tables.N11_U3_ROWS, "n11-direct": tables.N11_U4_DIRECT_ROWS,
}


class InputError(Exception):
    pass


def max_n() -> int:
    try:
        return int(os.environ.get("DESIGN_SAMPLER_MAX_N", "25"))
    except ValueError as exc:
        raise InputError("DESIGN_SAMPLER_MAX_N must be an integer") from exc


def check_n(n: int | None) -> int:
    if n is None:
        raise InputError("--n is required")
    if n < 1 or n > max_n():
        raise InputError(f"--n {n} outside 1..{max_n()} (DESIGN_SAMPLER_MAX_N)")
    return n


def pattern(text: str | None):
    if text is None:
        raise InputError("a pattern is required")
    if Path(text).suffix == ".json" or Path(text).is_file():
        try:
            return io.graph_from(io.read(text))
        except OSError as exc:
            raise InputError(str(exc)) from exc
    try:
        return PatternFamily.parse(text).graph()
    except DesignError as exc:
        raise InputError(str(exc)) from exc


def emit(obj, out: str | None) -> None:
    if out:
        io.write(obj, out)
    else:
        sys.stdout.write(io.dumps(obj))


def cmd_enumerate(a) -> int:
    n = check_n(a.n)
    bs = complete_design(n, pattern(a.big or a.pattern))
    if not verify_design(bs):
        print("enumerated blocks do not form a design", file=sys.stderr)
        return EXIT_NONE
    print(f"{len(bs.blocks)} blocks, each edge covered {bs.multiplicity} times", file=sys.stderr)
    emit(bs, a.output)
    return EXIT_OK


def _finish_sampling(sm, a) -> int:
    prof = verify_sampling(sm)
    print(prof.describe())
    if a.output:
        io.write(sm, a.output)
    if a.report:
        sys.stdout.write(report(sm))
    return EXIT_OK


def cmd_sample(a) -> int:
    n = check_n(a.n)
    big, small = pattern(a.big), pattern(a.small)
    if a.floor:
        return _finish_sampling(floor_sampling(n, big, small), a)
    red = required_redundancy(n, big, small)
    if a.lam is not None and red.exact and red.quotient != a.lam:
        print(f"any regular sampling has redundancy {red.quotient}, not {a.lam}", file=sys.stderr)
        return EXIT_NONE
    return _finish_sampling(regular_sampling(n, big, small), a)


def cmd_embed(a) -> int:
    n = check_n(a.n)
    em = regular_embedding(n, pattern(a.small), pattern(a.big))
    prof = verify_embedding(em)
    print(f"{prof.describe()} strict={em.strict}")
    if a.output:
        io.write(em, a.output)
    return EXIT_OK


def cmd_semiregular(a) -> int:
    n = check_n(a.n)
    return _finish_sampling(semiregular_sampling(n, pattern(a.big), pattern(a.small)), a)


def _lift_rows(a):
    if a.table:
        if a.table not in BUILTIN_TABLES:
            raise InputError(f"unknown table {a.table!r}; choose from {sorted(BUILTIN_TABLES)}")
        return a.table, None
    if not a.input:
        raise InputError("lift needs --table or --in")
    data = io.read(a.input[0])
    if not isinstance(data, dict) or "rows" not in data:
        raise InputError("lift input needs 'rows': [[block, sample], ...]")
    return None, data


def cmd_lift(a) -> int:
    name, data = _lift_rows(a)
    if name in ("c4-cyclic", "c4-affine"):
        sm = tables.c4_p3_sampling(name.split("-")[1])
    elif name is not None:
        rows = BUILTIN_TABLES[name]
        n = 23 if name == "n23" else 11
        sm = subset_lift(n, "affine-square", rows)
    else:
        n = check_n(data.get("n", a.n))
        kind = GROUPS.get(data.get("group", a.group or "cyclic"))
        if kind is None:
            raise InputError("group must be cyclic, affine or sym")
        rows = [(tuple(t), tuple(s)) for t, s in data["rows"]]
        sm = subset_lift(n, kind, rows)
    return _finish_sampling(sm, a)


def cmd_orbits(a) -> int:
    n = check_n(a.n)
    group = make_group(GROUPS[a.group or "cyclic"], n)
    if a.k is not None:
        objs = subsets(n, a.k)
    else:
        objs = enumerate_copies(complete_graph(n), pattern(a.big or a.pattern))
    dec = orbits(group, objs)
    semi = all(o.stabilizer_order == 1 for o in dec.orbits)
    print(f"group order {group.order}, {len(dec.orbits)} orbits, semiregular={semi}",
          file=sys.stderr)
    emit(dec, a.output)
    return EXIT_OK


def cmd_starter(a) -> int:
    n = check_n(a.n)
    st = triple_starter(n)
    sizes = ", ".join(f"{k}={v}" for k, v in st.sizes().items())
    print(f"lambda={st.lam} v={st.v} {sizes}", file=sys.stderr)
    if a.report:
        sm = triple_sampling(n)
        verify_sampling(sm)
        sys.stdout.write(report(sm))
    else:
        emit(st, a.output)
    return EXIT_OK


def cmd_nest(a) -> int:
    if a.sts7:
        cs = nesting.sts7()
    elif a.input:
        cs, _ = nesting.from_json(io.read(a.input[0]))
    else:
        raise InputError("nest needs --in or --sts7")
    res = nesting.search_nesting(cs, budget=a.budget)
    if res.status == "budget":
        print(f"budget of {a.budget} nodes exhausted without a decision", file=sys.stderr)
        return EXIT_BUDGET
    if not res.found:
        print("no nesting exists", file=sys.stderr)
        return EXIT_NONE
    wd, xi1, xi2 = nesting.wheels_from_nesting(cs, res.assignment)
    back = nesting.nesting_from_sampling(wd, xi2)
    if back != (cs, res.assignment):
        raise AssertionError("round trip through the wheel design failed")
    print(f"nesting found after {res.nodes} nodes; hubs {list(res.assignment.hubs)}",
          file=sys.stderr)
    emit(nesting.to_json(cs, res.assignment), a.output)
    return EXIT_OK


def cmd_verify(a) -> int:
    if a.sampling:
        sm = io.sampling_from(io.read(a.sampling))
        print(verify_sampling(sm).describe())
        if a.report:
            sys.stdout.write(report(sm))
        return EXIT_OK
    if a.embedding:
        em = io.embedding_from(io.read(a.embedding))
        print(f"{verify_embedding(em).describe()} strict={em.strict}")
        return EXIT_OK
    if a.design:
        rep = verify_design(io.block_set_from(io.read(a.design)))
        print("design ok" if rep else f"not a design: under={len(rep.under)} over={len(rep.over)}")
        return EXIT_OK if rep else EXIT_NONE
    if a.nesting:
        cs, f = nesting.from_json(io.read(a.nesting))
        if f is None:
            raise InputError("nesting file has no hubs")
        ok = cs.verify().ok and nesting.verify_nesting(cs, f).ok
        print("nesting ok" if ok else "not a nesting")
        return EXIT_OK if ok else EXIT_NONE
    raise InputError("verify needs --sampling, --embedding, --design or --nesting")


def cmd_compose(a) -> int:
    if not a.input or len(a.input) != 2:
        raise InputError("compose needs exactly two --in files (first, then second)")
    first, second = (io.sampling_from(io.read(p)) for p in a.input)
    return _finish_sampling(compose(first, second), a)


COMMANDS = {
    "enumerate": cmd_enumerate, "sample": cmd_sample, "embed": cmd_embed,
    "semiregular": cmd_semiregular, "lift": cmd_lift, "orbits": cmd_orbits,
    "starter": cmd_starter, "nest": cmd_nest, "verify": cmd_verify, "compose": cmd_compose,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="design-sampler",
                                description="Samplings and embeddings of complete graph designs.")
    sub = p.add_subparsers(dest="verb", required=True)

    def common(sp):
        sp.add_argument("--n", type=int)
        sp.add_argument("--big")
        sp.add_argument("--small")
        sp.add_argument("--pattern")
        sp.add_argument("--group", choices=sorted(GROUPS))
        sp.add_argument("--lambda", dest="lam", type=int)
        sp.add_argument("--in", dest="input", action="append")
        sp.add_argument("-o", "--output")
        sp.add_argument("--report", action="store_true", help="print the text table")
        return sp

    common(sub.add_parser("enumerate", help="all copies of a pattern in K_n"))
    sp = common(sub.add_parser("sample", help="regular sampling K_n(big) -> K_n(small)"))
    sp.add_argument("--floor", action="store_true", help="floor-redundancy sampling")
    common(sub.add_parser("embed", help="regular embedding K_n(small) -> K_n(big)"))
    common(sub.add_parser("semiregular", help="(1,2)-semiregular sampling"))
    sp = common(sub.add_parser("lift", help="lift a representative table through a group"))
    sp.add_argument("--table", help=f"built-in table: {', '.join(sorted(BUILTIN_TABLES))}")
    sp = common(sub.add_parser("orbits", help="orbits of a group on k-subsets or pattern copies"))
    sp.add_argument("--k", type=int)
    common(sub.add_parser("starter", help="triple starter for n = 2 mod 3"))
    sp = common(sub.add_parser("nest", help="search a nesting of a cycle system"))
    sp.add_argument("--budget", type=int, default=1_000_000)
    sp.add_argument("--sts7", action="store_true", help="use the cyclic STS(7)")
    sp = common(sub.add_parser("verify", help="verify a serialized artifact"))
    sp.add_argument("--sampling")
    sp.add_argument("--embedding")
    sp.add_argument("--design")
    sp.add_argument("--nesting")
    common(sub.add_parser("compose", help="compose two samplings"))
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        a = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return COMMANDS[a.verb](a)
    except NoSamplingError as exc:
        print(f"no such map: {exc.redundancy}", file=sys.stderr)
        return EXIT_NONE
    except (LiftError, SamplingError, nesting.NestingError) as exc:
        print(f"failed: {exc}", file=sys.stderr)
        return EXIT_NONE
    except (InputError, io.SchemaError, NotSubgraphError, DesignError, ValueError,
            OSError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
