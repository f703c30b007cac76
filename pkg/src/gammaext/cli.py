"""Command-line front end.

Exit status: 0 on success, 1 when a law sweep reports a failure, 2 for usage
or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import catalog, sweeps
from .connectivity import MODES, connectivity_witness
from .errors import MatroidError
from .extensions import compose_check, gamma_extension, splitting
from .matrixfile import read_matrix, render_matrix
from .matroid import BinaryMatroid, direct_sum, sort_labels
from .reports import FAIL, summarize

LAW_CHOICES = ("2.1", "2.2", "2.3", "2.4", "2.6", "2.7")


class UsageError(Exception):
    pass


def _labels_arg(text: str) -> list[str]:
    items = [t.strip() for t in text.split(",") if t.strip()]
    if not items:
        raise argparse.ArgumentTypeError("expected a comma-separated label list")
    return items


def _pair_arg(text: str) -> tuple[int, int]:
    try:
        r, n = (int(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected 'r,n', got {text!r}") from None
    return r, n


def _load(path: str, raw: bool) -> BinaryMatroid:
    matrix, labels = read_matrix(path)
    return BinaryMatroid(matrix, labels, strict=not raw)


def _emit(args, payload, text_lines):
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _family_lines(family):
    return [" ".join(sort_labels(s)) for s in family]


def cmd_rank(args):
    m = _load(args.matrix, args.raw)
    s = m.ground_set if args.set is None else args.set
    r = m.rank_of(s)
    _emit(args, {"rank": r, "set": sort_labels(s)}, [str(r)])


def _family_cmd(getter):
    def cmd(args):
        m = _load(args.matrix, args.raw)
        fam = getter(m)
        _emit(args, {"sets": [sort_labels(s) for s in fam]}, _family_lines(fam))
    return cmd


def cmd_girth(args):
    m = _load(args.matrix, args.raw)
    g, c = m.girth(), m.cogirth()
    fmt = lambda v: None if v == float("inf") else int(v)
    _emit(args, {"girth": fmt(g), "cogirth": fmt(c)},
          [f"girth: {fmt(g) if fmt(g) is not None else 'inf'}",
           f"cogirth: {fmt(c) if fmt(c) is not None else 'inf'}"])


def cmd_connectivity(args):
    m = _load(args.matrix, args.raw)
    sep = connectivity_witness(m, args.k, args.mode)
    ok = sep is None
    payload = {"k": args.k, "mode": args.mode, "connected": ok, "separation": None}
    lines = [f"{args.k}-connected: {str(ok).lower()}"]
    if sep is not None:
        a, b = sep.as_lists()
        payload["separation"] = {"side_a": a, "side_b": b, "order": sep.order}
        lines.append(f"separation: {' '.join(a)} | {' '.join(b)} (order {sep.order})")
    _emit(args, payload, lines)


def cmd_gamma_ext(args):
    m = _load(args.matrix, args.raw)
    ext = gamma_extension(m, args.x, args.gamma_names)
    text = render_matrix(ext.matrix, ext.labels)
    _emit(args, {"labels": list(ext.labels), "matrix": ext.matrix.to_lists()}, [text.rstrip("\n")])


def cmd_split(args):
    m = _load(args.matrix, args.raw)
    out = splitting(m, args.y)
    matrix = m.rep.append_row(m.mask(args.y))
    text = render_matrix(matrix, out.labels)
    _emit(args, {"labels": list(out.labels), "matrix": matrix.to_lists()}, [text.rstrip("\n")])


def cmd_direct_sum(args):
    parts = [_load(p, args.raw) for p in args.matrices]
    m = direct_sum(*parts)
    text = render_matrix(m.rep, m.labels)
    _emit(args, {"labels": list(m.labels), "matrix": m.rep.to_lists()}, [text.rstrip("\n")])


def cmd_compose_check(args):
    m = _load(args.matrix, args.raw)
    ok = compose_check(m, args.x)
    _emit(args, {"compose_check": ok}, [f"compose-check: {str(ok).lower()}"])


def _verify_reports(args):
    ks = (args.k,) if args.k is not None else (2, 3, 4)
    if args.catalog is not None:
        r, n = args.catalog
        entries = list(catalog.entries(r, n))
    else:
        entries = None
    law = args.law
    if law == "2.1":
        return sweeps.rank_lemma(entries or sweeps.extension_pool(), max_x=args.max_x or 4, jobs=args.jobs)
    if law == "2.2":
        pool = [e for e in (entries or sweeps.extension_pool()) if e.matroid.is_connected()]
        return sweeps.circuit_characterization(pool, max_x=args.max_x or 3, jobs=args.jobs)
    if law == "2.3":
        return sweeps.girth_bound(entries or sweeps.extension_pool(), ks, jobs=args.jobs)
    if law == "2.4":
        return sweeps.cocircuit_lemma(entries or sweeps.extension_pool(), jobs=args.jobs)
    if law == "2.6":
        return sweeps.k_connectivity(entries or sweeps.theorem_pool(), ks, jobs=args.jobs)
    if law == "2.7":
        if entries is not None:
            pool = [e for e in entries if not e.matroid.is_connected()]
        else:
            pool = sweeps.sum_pool()
        return sweeps.component_merge(pool, max_x=args.max_x or 4, jobs=args.jobs)
    raise UsageError(f"unknown law {law!r}")


def cmd_verify(args):
    reports = _verify_reports(args)
    counts = summarize(reports)
    shown = [r for r in reports if r.verdict == FAIL] if args.only_failures else reports
    if args.json:
        print(json.dumps({"law": args.law, "records": [r.to_dict() for r in shown],
                          "summary": counts}, sort_keys=True))
    else:
        for r in shown:
            print(r.to_line())
        print("# summary\t" + "\t".join(f"{k}={v}" for k, v in counts.items()))
    return 1 if counts[FAIL] else 0


def cmd_catalog(args):
    if args.enumerate is not None:
        r, n = args.enumerate
        entries = list(catalog.entries(r, n, args.filter))
    else:
        entries = catalog.named_entries()
    rows = []
    for e in entries:
        tags = sorted(e.tags)
        rows.append({"name": e.name, "rank": e.matroid.rank, "size": len(e.matroid), "tags": tags})
    _emit(args, {"entries": rows},
          [f"{r['name']}\t{r['rank']}\t{r['size']}\t{','.join(r['tags'])}" for r in rows])


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="gammaext", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, matrix=True, **kw):
        sp = sub.add_parser(name, **kw)
        if matrix:
            sp.add_argument("matrix", help="matrix file, or - for stdin")
            sp.add_argument("--raw", action="store_true", help="allow loops and coloops")
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        sp.set_defaults(func=func)
        return sp

    add("rank", cmd_rank, help="rank of the matroid or of --set").add_argument("--set", type=_labels_arg)
    add("circuits", _family_cmd(lambda m: m.circuits()), help="list circuits")
    add("cocircuits", _family_cmd(lambda m: m.cocircuits()), help="list cocircuits")
    add("girth", cmd_girth, help="girth and cogirth")
    add("components", _family_cmd(lambda m: m.components()), help="connected components")
    sp = add("connectivity", cmd_connectivity, help="decide k-connectivity")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--mode", choices=MODES, default="paper")
    sp = add("gamma-ext", cmd_gamma_ext, help="write the gamma-extension matrix")
    sp.add_argument("--x", type=_labels_arg, required=True)
    sp.add_argument("--gamma-names", type=_labels_arg)
    sp = add("split", cmd_split, help="write the splitting matrix")
    sp.add_argument("--y", type=_labels_arg, required=True)
    sp = add("direct-sum", cmd_direct_sum, matrix=False, help="block-diagonal sum of matrix files")
    sp.add_argument("matrices", nargs="+")
    sp.add_argument("--raw", action="store_true")
    sp = add("compose-check", cmd_compose_check, help="splitting the parallel copies gives the extension")
    sp.add_argument("--x", type=_labels_arg, required=True)
    sp = add("verify", cmd_verify, matrix=False, help="run a law sweep over catalog instances")
    sp.add_argument("--law", choices=LAW_CHOICES, required=True)
    sp.add_argument("--catalog", type=_pair_arg, help="r,n enumeration to sweep (default: built-in pool)")
    sp.add_argument("--k", type=int)
    sp.add_argument("--max-x", type=int)
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--only-failures", action="store_true")
    sp = add("catalog", cmd_catalog, matrix=False, help="list named fixtures or an enumeration")
    sp.add_argument("--enumerate", type=_pair_arg)
    sp.add_argument("--filter")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        status = args.func(args)
    except (MatroidError, UsageError, KeyError, ValueError, OSError) as exc:
        print(f"gammaext: error: {exc}", file=sys.stderr)
        return 2
    return status or 0


if __name__ == "__main__":
    sys.exit(main())
