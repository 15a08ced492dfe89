"""Command-line front end: ``python3 -m hcorbits <verb> ...``."""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .ab_diagrams import closure_covers, enumerate_ab_diagrams, levi_blocks
from .partitions import Partition, codim2_parts
from .pin_group import component_group
from .root_systems import DATA, CoweightVector, exceptional_catalog, exceptional_verdict, lookup
from .slices import KINDS, a2_outer_verdict, catalog, unobstructive
from .typea import FILTERS, PAIRS, OrbitDatumA, QuantizationParameterA, classify, sweep


class UsageError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _ints(text: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(" ", "").split(",") if t]
    except ValueError as exc:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from exc


def _jsonable(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def _emit(obj, fmt: str, text_fn) -> str:
    if fmt == "json":
        return json.dumps(_jsonable(obj), indent=2)
    return text_fn(obj)


def _report_text(d: dict) -> str:
    inp, cg = d["input"], d["component_group"]
    lines = [f"tau={inp['tau']}  pair={inp['pair']}  lambda={inp['lambda']}"]
    if d.get("verdict"):
        lines.append(f"verdict: {d['verdict']}")
    else:
        lines.append(f"component group: {cg['label']} (order {cg['order']}, {cg['model']} model)")
        lines.append(f"{'id':>3}  {'deg':>3}  {'scalars':<24}  {'admitted':<8}  rule")
        for r in d["irreducibles"]:
            sc = " ".join(f"{l}:{v}" for l, v in r["scalars"].items()) or "-"
            lines.append(f"{r['id']:>3}  {r['degree']:>3}  {sc:<24}  {str(r['admitted']):<8}  {r['rule']}")
        c = d["counts"]
        lines.append(f"local systems: {c['local_systems']}  HC modules: {c['hc_modules']}")
    lines.extend(f"note: {n}" for n in d["notes"])
    return "\n".join(lines)


def cmd_classify(a) -> str:
    taus = [Partition.parse(t) for t in a.tau]
    nonint = _ints(a.nonintegral) if a.nonintegral else []
    if a.pair != "spin":
        if len(taus) != 1:
            raise UsageError("only the spin pair accepts several --tau")
        d = classify(OrbitDatumA(taus[0], a.pair, a.k), None).to_dict()
        return _emit(d, a.format, _report_text)
    jobs = []
    for tau in taus:
        lam = QuantizationParameterA.parse(a.lam, tau[1], nonint)
        if len(lam) != tau[1]:
            raise UsageError(f"--lambda has {len(lam)} entries, tau={tau} has {tau[1]} columns")
        bad = [l for l in nonint if l not in codim2_parts(tau)]
        if bad:
            raise UsageError(f"--nonintegral parts {bad} are not codimension-2 parts of {tau}")
        jobs.append((tau, lam, a.filter))
    reports = sweep(jobs, a.jobs)
    if len(reports) == 1:
        return _emit(reports[0], a.format, _report_text)
    return _emit(reports, a.format, lambda rs: "\n\n".join(map(_report_text, rs)))


def cmd_component_group(a) -> str:
    cg = component_group(Partition.parse(a.tau))
    d = {"tau": str(cg.tau), "label": cg.label, "order": cg.order, "model": cg.model,
         "distinguished": {str(l): cg.element_name(g) for l, g in cg.distinguished.items()},
         "description": cg.describe()}

    def text(d):
        lines = [d["description"]]
        lines += [f"l={l}: {g}" for l, g in d["distinguished"].items()]
        return "\n".join(lines)
    return _emit(d, a.format, text)


def cmd_ab_diagrams(a) -> str:
    tau = Partition.parse(a.tau)
    ds = enumerate_ab_diagrams(tau, a.k)
    d = {"tau": str(tau), "k": a.k, "count": len(ds),
         "diagrams": [{"diagram": str(x), "levi_blocks": {str(j): list(v) for j, v in levi_blocks(x).items()},
                       "covers": [str(c) for c in closure_covers(x)]} for x in ds]}

    def text(d):
        lines = [f"{d['count']} ab-diagrams of shape {d['tau']} with k={d['k']}"]
        lines += [f"  {x['diagram']:<20} covers: {', '.join(x['covers']) or '-'}" for x in d["diagrams"]]
        return "\n".join(lines)
    return _emit(d, a.format, text)


def cmd_slices(a) -> str:
    if a.action == "list":
        d = [{"number": s.number, "kind": s.kind, "name": s.name, "description": s.description,
              "exceptional_only": s.exceptional_only, "unobstructive": s.unobstructive} for s in catalog()]
        return _emit(d, a.format, lambda d: "\n".join(
            f"{s['number']}  {s['kind']:<10} {s['description']}" for s in d))
    if a.kind is None:
        raise UsageError("slices verdict needs --kind")
    if (a.kind == "a2" and a.involution == "outer") or a.scalar is not None:
        if a.kind != "a2":
            raise UsageError("--scalar only applies to the a2 slice")
        if a.scalar is None:
            raise UsageError("a2 outer verdict needs --scalar")
        if a.period is None:
            raise UsageError("a2 outer verdict needs --period (a rational or 'nonintegral')")
        period = None if a.period == "nonintegral" else Fraction(a.period)
        v = a2_outer_verdict(period, a.scalar)
        d = {"kind": "a2", "involution": "outer", "period": a.period, "scalar": a.scalar,
             "level": v.level, "reason": v.citation}
        return _emit(d, a.format, lambda d: f"{d['level']}: {d['reason']}")
    d = {"kind": a.kind, "involution": a.involution, "unobstructive": unobstructive(a.kind, a.involution)}
    return _emit(d, a.format, lambda d: f"{d['kind']} ({d['involution']}): unobstructive = {d['unobstructive']}")


def cmd_exceptional(a) -> str:
    if a.action == "list":
        d = [{"entry": e.key, "g_orbit": e.g_orbit, "case": e.case, "Z_K": e.Z_K,
              "Ztilde_K": list(e.Ztilde_K) if e.Ztilde_K else None} for e in exceptional_catalog()]
        return _emit(d, a.format, lambda d: "\n".join(
            f"{e['entry']:<12} {e['g_orbit']:<8} case {e['case']}  Z_K={e['Z_K']}  "
            f"Ztilde_K={' or '.join(e['Ztilde_K']) if e['Ztilde_K'] else '-'}" for e in d))
    if a.form is None or a.orbit is None:
        raise UsageError("exceptional verdict needs --form and --orbit")
    try:
        entry = lookup(a.form, a.orbit)
    except KeyError as exc:
        raise UsageError(str(exc)) from exc
    d = exceptional_verdict(entry, a.level)

    def text(d):
        lines = [f"{d['entry']} in {d['g_orbit']}, case {d['case']}: {d['verdict']}",
                 f"Z_K={d['Z_K']}  Ztilde_K={' or '.join(d['Ztilde_K']) if d['Ztilde_K'] else '-'}"]
        if d.get("Zbar_K"):
            lines.append(f"Zbar_K={d['Zbar_K']}")
        if "counts" in d:
            lines.append("counts: " + ", ".join(f"{k}={v}" for k, v in d["counts"].items()))
        if d.get("result"):
            lines.append(d["result"])
        return "\n".join(lines)
    return _emit(d, a.format, text)


def cmd_roots(a) -> str:
    th = CoweightVector.parse(a.type, a.theta, a.basis)
    if a.datum is None:
        raise UsageError("roots eval needs --datum")
    datum = DATA[a.datum]()
    if datum.type_label != a.type:
        raise UsageError(f"datum {a.datum} lives in {datum.type_label}")
    d = {"type": a.type, "theta_coweight": list(th.coords), "values": list(datum.evaluate_all(th)),
         "cover_order": datum.cover_order(th)}
    return _emit(d, a.format, lambda d: "values: ({})  cover order: {}".format(
        ", ".join(map(str, d["values"])), d["cover_order"]))


def cmd_selftest(a) -> tuple[str, int]:
    from .golden import run_checks
    results = run_checks()
    ok = all(r[1] for r in results)
    if a.format == "json":
        out = json.dumps([{"check": n, "pass": p, "got": g} for n, p, g in results], indent=2)
    else:
        out = "\n".join(f"{'PASS' if p else 'FAIL'}  {n}" + ("" if p else f"  (got {g})") for n, p, g in results)
    return out, 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="hcorbits", description="HC modules over quantized nilpotent orbits")
    fmt = _Parser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json"), default="text")
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    c = sub.add_parser("classify", parents=[fmt])
    c.add_argument("--tau", action="append", required=True, help="partition, e.g. 3,2,1 (repeatable)")
    c.add_argument("--pair", choices=PAIRS, default="spin")
    c.add_argument("--k", type=int, help="block size for the inner pair")
    c.add_argument("--lambda", dest="lam", help="column parameters as p/q tokens, e.g. 1/2,0")
    c.add_argument("--nonintegral", help="codimension-2 parts whose slice parameter is non-integral")
    c.add_argument("--filter", choices=FILTERS, default="all")
    c.add_argument("--jobs", type=int, default=1)
    c.set_defaults(fn=cmd_classify)

    g = sub.add_parser("component-group", parents=[fmt])
    g.add_argument("--tau", required=True)
    g.set_defaults(fn=cmd_component_group)

    d = sub.add_parser("ab-diagrams", parents=[fmt])
    d.add_argument("--tau", required=True)
    d.add_argument("--k", type=int, required=True)
    d.set_defaults(fn=cmd_ab_diagrams)

    s = sub.add_parser("slices", parents=[fmt])
    s.add_argument("action", choices=("list", "verdict"))
    s.add_argument("--kind", choices=KINDS)
    s.add_argument("--involution", choices=("inner", "outer", "any"), default="any")
    s.add_argument("--period", help="rational period, or 'nonintegral'")
    s.add_argument("--scalar", choices=("1", "i", "-1", "-i"))
    s.set_defaults(fn=cmd_slices)

    e = sub.add_parser("exceptional", parents=[fmt])
    e.add_argument("action", choices=("list", "verdict"))
    e.add_argument("--form")
    e.add_argument("--orbit", type=int)
    e.add_argument("--level", default="all", help="select one count, e.g. Ktilde_genuine")
    e.set_defaults(fn=cmd_exceptional)

    r = sub.add_parser("roots", parents=[fmt])
    r.add_argument("action", choices=("eval",))
    r.add_argument("--type", choices=("E6", "E7", "E8"), required=True)
    r.add_argument("--theta", required=True, help="comma-separated rationals")
    r.add_argument("--basis", choices=("coweight", "coroot"), default="coweight")
    r.add_argument("--datum", choices=sorted(DATA))
    r.set_defaults(fn=cmd_roots)

    t = sub.add_parser("selftest", parents=[fmt])
    t.set_defaults(fn=cmd_selftest)
    return p


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        if getattr(args, "jobs", 1) < 1:
            raise UsageError("--jobs must be positive")
        result = args.fn(args)
        code = 0
        if isinstance(result, tuple):
            result, code = result
        print(result, file=out)
        return code
    except (UsageError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    except Exception as exc:
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())
