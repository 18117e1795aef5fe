"""Command-line front end.

    kimcs compute --p 5 --t 2 [--format human|json]
    kimcs scan --p-max 100 --t-max 50 [--format csv|json|human] [--out FILE]
    kimcs witness --p 5 --t 7
    kimcs cohomology --n 2,3 [--format human|json]

Exit codes: 0 success, 2 invalid input, 3 parity violation, 4 I/O failure,
5 failed cohomology check.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from dataclasses import dataclass

from .cyccoh.checks import MAX_SUITE_N, suite
from .idealcls import ParityViolation
from .kim import certificate_to_dict, compute_invariant, oracle_invariant, remark_witness, scan, scan_summary
from .quadtower import InvalidDatum, validate

EXIT_OK, EXIT_INVALID, EXIT_PARITY, EXIT_IO, EXIT_COHOMOLOGY = 0, 2, 3, 4, 5

CSV_COLUMNS = ("p", "t", "D", "h", "S", "oracle", "agree")

log = logging.getLogger("kimcs")


@dataclass
class RunConfig:
    command: str
    p: int | None = None
    t: int | None = None
    p_max: int | None = None
    t_max: int | None = None
    n_list: tuple = ()
    format: str = "human"
    out: str | None = None
    verbosity: int = 0
    workers: int = 1

    def validate(self) -> None:
        for name in ("p_max", "t_max", "workers"):
            v = getattr(self, name)
            if v is not None and v < 1:
                raise InvalidDatum(f"{name.replace('_', '-')} must be positive")
        if self.format not in ("human", "json", "csv"):
            raise InvalidDatum("format must be human, json or csv")
        for n in self.n_list:
            if n < 2:
                raise InvalidDatum("n must be at least 2")
            if n > MAX_SUITE_N:
                raise InvalidDatum(f"n = {n} exceeds the table-size guard n <= {MAX_SUITE_N}")


def _n_list(text: str) -> tuple:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError("expected a comma separated list of integers")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="kimcs", description="Artin-map invariants of quadratic towers")
    ap.add_argument("-v", "--verbose", action="count", default=0)
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="invariant S for one datum (p, t)")
    c.add_argument("--p", type=int, required=True)
    c.add_argument("--t", type=int, required=True)
    c.add_argument("--format", choices=("human", "json"), default="human")
    c.add_argument("--out")

    s = sub.add_parser("scan", help="all data with p <= p-max, t <= t-max")
    s.add_argument("--p-max", type=int, required=True)
    s.add_argument("--t-max", type=int, required=True)
    s.add_argument("--format", choices=("human", "json", "csv"), default="human")
    s.add_argument("--out")
    s.add_argument("--workers", type=int, default=1)

    w = sub.add_parser("witness", help="dyadic witness conditions for (p, t)")
    w.add_argument("--p", type=int, required=True)
    w.add_argument("--t", type=int, required=True)
    w.add_argument("--format", choices=("human", "json"), default="human")
    w.add_argument("--out")

    h = sub.add_parser("cohomology", help="structural checks on H^*(Z/n, -)")
    h.add_argument("--n", type=_n_list, required=True, dest="n_list")
    h.add_argument("--format", choices=("human", "json"), default="human")
    h.add_argument("--out")
    h.add_argument("--seed", type=int, default=0)
    return ap


def _config(ns: argparse.Namespace) -> RunConfig:
    return RunConfig(
        command=ns.command,
        p=getattr(ns, "p", None),
        t=getattr(ns, "t", None),
        p_max=getattr(ns, "p_max", None),
        t_max=getattr(ns, "t_max", None),
        n_list=getattr(ns, "n_list", ()),
        format=ns.format,
        out=ns.out,
        verbosity=ns.verbose,
        workers=getattr(ns, "workers", 1),
    )


def _label(S: int) -> str:
    return "trivial" if S == 0 else "nontrivial"


def render_compute(cfg: RunConfig) -> str:
    d = validate(cfg.p, cfg.t)
    cert = compute_invariant(d)
    if cfg.format == "json":
        return json.dumps(certificate_to_dict(cert), indent=2)
    o = oracle_invariant(d)
    verdict = "oracle agrees" if o == cert.S else f"ORACLE DISAGREES (oracle = {o})"
    lines = [
        f"F = Q(sqrt({-d.m})), K = F(sqrt({d.p})), D = {d.D} = {d.D1} * {d.D2}",
        f"eps = {cert.epsilon}  (norm {cert.epsilon.norm()})",
        f"y   = {cert.y}",
        f"w   = {cert.w}",
        f"w O_F = {cert.wFactored}",
        f"I   = {cert.I}  class {cert.IClass}",
        "characters: " + ", ".join(f"{P} -> {v}" for P, v in cert.characterTrace) if cert.characterTrace else "characters: (none)",
        f"S = {cert.S} ({_label(cert.S)}), {verdict}",
    ]
    return "\n".join(lines)


def render_scan(cfg: RunConfig) -> str:
    rows = scan(cfg.p_max, cfg.t_max, workers=cfg.workers)
    summ = scan_summary(rows)
    if cfg.format == "json":
        return json.dumps({"columns": list(CSV_COLUMNS), "rows": [_row_dict(r) for r in rows], "summary": summ}, indent=2)
    if cfg.format == "csv":
        buf = io.StringIO()
        wr = csv.writer(buf, lineterminator="\n")
        wr.writerow(CSV_COLUMNS)
        for r in rows:
            vals = _row_dict(r)
            wr.writerow(["" if vals[k] is None else vals[k] for k in CSV_COLUMNS])
        return buf.getvalue().rstrip("\n")
    out = [f"{'p':>4} {'t':>4} {'D':>7} {'h':>4} {'S':>2} {'oracle':>6} agree"]
    for r in rows:
        out.append(f"{r.p:>4} {r.t:>4} {str(r.D):>7} {str(r.h):>4} {str(r.S):>2} {str(r.oracle):>6} {r.agree}")
    out.append(_summary_line(summ))
    return "\n".join(out)


def _row_dict(r) -> dict:
    return {"p": r.p, "t": r.t, "D": r.D, "h": r.h, "S": r.S, "oracle": r.oracle, "agree": r.agree, "error": r.error}


def _summary_line(s: dict) -> str:
    return (
        f"rows={s['rows']} trivial={s['trivial']} nontrivial={s['nontrivial']} "
        f"failed={s['failed']} all_agree={s['all_agree']}"
    )


def render_witness(cfg: RunConfig) -> tuple[str, bool]:
    rep = remark_witness(validate(cfg.p, cfg.t))
    if cfg.format == "json":
        body = {
            "p": cfg.p,
            "t": cfg.t,
            "S": rep.S,
            "checks": [{"name": n, "passed": ok} for n, ok in rep.checks],
            "passed": rep.passed,
            "not_evaluated": list(rep.out_of_scope),
        }
        return json.dumps(body, indent=2), rep.passed
    lines = [f"witness conditions for (p, t) = ({cfg.p}, {cfg.t})"]
    lines += [f"  [{'PASS' if ok else 'FAIL'}] {n}" for n, ok in rep.checks]
    verdict = "all conditions hold" if rep.passed else "not all conditions hold"
    lines.append(f"S = {rep.S} ({_label(rep.S)}); {verdict}")
    return "\n".join(lines), rep.passed


def render_cohomology(cfg: RunConfig, seed: int = 0) -> tuple[str, bool]:
    rep = suite(cfg.n_list, seed=seed)
    if cfg.format == "json":
        return json.dumps(rep.to_dict(), indent=2), rep.passed
    lines = [f"conventions: {rep.conventions}", "all items are finite cyclic group analogues"]
    for it in rep.items:
        tag = "PASS" if it.passed else "FAIL"
        lines.append(f"  [{tag}] n={it.n} analogue: {it.name} -- {it.detail}")
        if it.witness:
            lines.append(f"         witness: {it.witness}")
    lines.append(f"{sum(i.passed for i in rep.items)}/{len(rep.items)} checks passed in {rep.seconds:.2f}s")
    return "\n".join(lines), rep.passed


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def run(cfg: RunConfig, seed: int = 0) -> int:
    cfg.validate()
    status = EXIT_OK
    if cfg.command == "compute":
        text = render_compute(cfg)
    elif cfg.command == "scan":
        text = render_scan(cfg)
    elif cfg.command == "witness":
        text, _ = render_witness(cfg)
    elif cfg.command == "cohomology":
        text, ok = render_cohomology(cfg, seed)
        if not ok:
            status = EXIT_COHOMOLOGY
    else:  # pragma: no cover - argparse restricts the choices
        raise InvalidDatum(f"unknown command {cfg.command}")
    _emit(text, cfg.out)
    return status


def main(argv=None) -> int:
    ap = build_parser()
    ns = ap.parse_args(argv)
    logging.basicConfig(level=logging.WARNING - 10 * min(ns.verbose, 2), format="%(levelname)s %(name)s: %(message)s")
    cfg = _config(ns)
    try:
        return run(cfg, getattr(ns, "seed", 0))
    except InvalidDatum as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except ParityViolation as exc:
        print(f"parity violation: {exc}", file=sys.stderr)
        return EXIT_PARITY
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
