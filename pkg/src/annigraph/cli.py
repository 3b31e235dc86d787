"""annigraph command line: build graphs, spectra and the verification runs."""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from collections import Counter
from dataclasses import dataclass

import numpy as np
from sympy import isprime

from . import formats
from .errors import AnnigraphError, NonPrimeBase, NotApplicable, ParseError
from .graph import GRAPH_CAP, build_graph, degree_sequence, metrics
from .groups import FiniteAbelianGroup, ORACLE_CAP, annihilator, annihilator_bruteforce, make_group
from .linalg import EIGEN_CAP
from .orbits import AUT_CAP, bruteforce_aut_orbits, miller_orbit_count, miller_orbit_count_group, \
    p_components, ss_orbit_count_experimental
from .spectra import adjacency_spectrum, conjecture_scan, energy, laplacian_eigenvalues, rows_to_csv, \
    rows_to_json, verify_thm6
from .threshold import find_alternating_4cycle, laplacian_spectrum_threshold

GROUP_GRAMMAR = """group spec grammar:
  moduli:n1,n2,...        direct sum Z/n1 + Z/n2 + ...   (each n >= 2)
  p^a:P^A                 cyclic group Z/P^A, P prime      e.g. p^a:2^3
  plist:P^a1,P^a2,...     Z/P^a1 + Z/P^a2 + ..., one prime, exponents ascending"""

COMMANDS = ("build", "spectrum", "laplacian", "threshold-check", "annihilators", "verify-thm6",
            "conjecture-scan", "orbits")


@dataclass
class RunConfig:
    command: str
    group: FiniteAbelianGroup | None
    output_format: str
    max_vertices: int
    tol: float
    max_sweeps: int
    out_path: str | None
    extra: dict


_POWER = re.compile(r"(\d+)\^(\d+)")


def _parse_power(s: str, offset: int) -> tuple[int, int]:
    m = _POWER.fullmatch(s)
    if not m:
        raise ParseError(f"expected P^A, got {s!r}", offset)
    p, a = int(m.group(1)), int(m.group(2))
    if not isprime(p):
        raise NonPrimeBase(f"base {p} is not prime", offset)
    if a < 1:
        raise ParseError(f"exponent must be >= 1 in {s!r}", offset + len(m.group(1)) + 1)
    return p, a


def parse_group_spec(s: str) -> FiniteAbelianGroup:
    kind, sep, body = s.partition(":")
    if not sep:
        raise ParseError(f"missing ':' in {s!r}", len(s))
    start = len(kind) + 1
    if kind == "moduli":
        mods = []
        pos = start
        for tok in body.split(","):
            if not tok.isdigit():
                raise ParseError(f"modulus {tok!r} is not a positive integer", pos)
            if int(tok) < 2:
                raise ParseError(f"modulus {tok} < 2", pos)
            mods.append(int(tok))
            pos += len(tok) + 1
        return make_group(mods)
    if kind == "p^a":
        p, a = _parse_power(body, start)
        return make_group([p**a])
    if kind == "plist":
        pos = start
        powers = []
        for tok in body.split(","):
            p, a = _parse_power(tok, pos)
            if powers and p != powers[0][0]:
                raise ParseError(f"plist mixes primes {powers[0][0]} and {p}", pos)
            if powers and a < powers[-1][1]:
                raise ParseError("plist exponents must be ascending", pos)
            powers.append((p, a))
            pos += len(tok) + 1
        return make_group([p**a for p, a in powers])
    raise ParseError(f"unknown group spec kind {kind!r}", 0)


def _f(x: float) -> float:
    return float(f"{x:.12g}")


def _emit(cfg: RunConfig, data: bytes | str) -> None:
    if isinstance(data, str):
        data = data.encode()
    if cfg.out_path:
        with open(cfg.out_path, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()


def _dumps(obj) -> str:
    return json.dumps(obj, indent=1) + "\n"


def _need_group(cfg: RunConfig) -> FiniteAbelianGroup:
    if cfg.group is None:
        raise ParseError("--group is required for this command")
    return cfg.group


def _graph(cfg: RunConfig):
    return build_graph(_need_group(cfg), cap=cfg.max_vertices)


def cmd_build(cfg: RunConfig) -> int:
    g = _graph(cfg)
    fmt = cfg.output_format
    if fmt == "json":
        fmt = "edge-list-json"
    if fmt == "text":
        lines = ["".join(map(str, row)) for row in g.dense().tolist()]
        m = metrics(g)
        lines.append(f"n={g.n} edges={g.num_edges} diameter={m.diameter} girth={m.girth or 'none'} "
                     f"ecc0={m.eccentricity_of_zero}")
        _emit(cfg, "\n".join(lines) + "\n")
    else:
        data = formats.export(g, fmt)
        _emit(cfg, data if data.endswith(b"\n") else data + b"\n")
    return 0


def cmd_spectrum(cfg: RunConfig) -> int:
    g = _graph(cfg)
    spec = adjacency_spectrum(g, tol=cfg.tol, max_sweeps=cfg.max_sweeps)
    vals = [_f(v) for v in spec.eigenvalues]
    if cfg.output_format == "csv":
        _emit(cfg, "index,eigenvalue\n" + "".join(f"{i},{v:.12g}\n" for i, v in enumerate(spec.eigenvalues)))
    elif cfg.output_format == "text":
        _emit(cfg, "\n".join(f"{v:.12g}" for v in spec.eigenvalues) + "\n")
    else:
        _emit(cfg, _dumps({"n": g.n, "eigenvalues": vals, "sum": _f(float(np.sum(spec.eigenvalues))),
                           "energy": _f(energy(spec)), "method": spec.method}))
    return 0


def _multiset_text(vals: list[int]) -> str:
    counts = Counter(vals)
    parts = [str(v) if c == 1 else f"{v}x{c}" for v, c in sorted(counts.items(), reverse=True)]
    return "{" + ", ".join(parts) + "}"


def cmd_laplacian(cfg: RunConfig) -> int:
    g = _graph(cfg)
    exact = laplacian_spectrum_threshold(g)
    status = 0
    numeric = None
    if g.n <= EIGEN_CAP:
        numeric = laplacian_eigenvalues(g, tol=cfg.tol, max_sweeps=cfg.max_sweeps).eigenvalues
        err = float(np.max(np.abs(np.sort(numeric) - np.sort(exact)))) if g.n else 0.0
        if err > 1e-8:
            status = 1
    if cfg.output_format == "json":
        out = {"n": g.n, "eigenvalues": exact,
               "multiplicities": {str(v): c for v, c in sorted(Counter(exact).items(), reverse=True)}}
        if numeric is not None:
            out["max_abs_error_vs_numeric"] = _f(err)
        _emit(cfg, _dumps(out))
    elif cfg.output_format == "csv":
        _emit(cfg, "eigenvalue,multiplicity\n" + "".join(
            f"{v},{c}\n" for v, c in sorted(Counter(exact).items(), reverse=True)))
    else:
        _emit(cfg, _multiset_text(exact) + "\n")
    return status


def cmd_threshold(cfg: RunConfig) -> int:
    G = _need_group(cfg)
    g = build_graph(G, cap=cfg.max_vertices)
    w = find_alternating_4cycle(g)
    if cfg.output_format == "json":
        _emit(cfg, _dumps({"threshold": w is None, "witness": None if w is None else list(w),
                           "degree_sequence": degree_sequence(g)}))
    else:
        _emit(cfg, f"threshold: {'true' if w is None else 'false'}, witness: {'none' if w is None else w}\n")
    # Gamma(Z/p^a) is always threshold; a witness there is a failed claim
    return 1 if (w is not None and G.is_cyclic_p_group()) else 0


def cmd_annihilators(cfg: RunConfig) -> int:
    G = _need_group(cfg)
    if G.order > cfg.max_vertices:
        raise AnnigraphError(f"|G| = {G.order} exceeds the vertex cap {cfg.max_vertices}")
    rows = []
    mismatches = 0
    for v in range(G.order):
        c = G.coords(v)
        d = annihilator(G, c).generator
        oracle = annihilator_bruteforce(G, c).generator if G.order <= ORACLE_CAP else None
        if oracle is not None and oracle != d:
            mismatches += 1
        rows.append((c, d, oracle))
    if cfg.output_format == "csv":
        text = "element,generator,oracle\n" + "".join(
            f"\"{list(c)}\",{d},{'' if o is None else o}\n" for c, d, o in rows)
    elif cfg.output_format == "json":
        text = _dumps({"group": list(G.moduli), "exponent": G.exponent,
                       "annihilators": [{"element": list(c), "generator": d, "oracle": o} for c, d, o in rows],
                       "mismatches": mismatches})
    else:
        text = "".join(f"{c}: {d}Z" + ("" if o in (None, d) else f"  MISMATCH oracle {o}Z") + "\n"
                       for c, d, o in rows)
    _emit(cfg, text)
    return 1 if mismatches else 0


def cmd_thm6(cfg: RunConfig) -> int:
    p = cfg.extra["p"]
    r = verify_thm6(p)
    d = r.to_json()
    for k in ("E_gamma", "E_threshold_G", "E_complete"):
        d[k] = _f(d[k])
    if cfg.output_format == "text":
        _emit(cfg, "".join(f"{k}: {v}\n" for k, v in d.items()))
    else:
        _emit(cfg, _dumps(d))
    return 0 if (r.inequalities_hold and r.bound_7p_minus_2) else 1


def cmd_scan(cfg: RunConfig) -> int:
    primes = cfg.extra["primes"]
    rows = conjecture_scan(primes, cfg.extra["alpha_max"], cfg.extra["alpha_min"],
                           max_vertices=min(cfg.max_vertices, EIGEN_CAP))
    if cfg.output_format == "json":
        _emit(cfg, rows_to_json(rows) + "\n")
    else:
        _emit(cfg, rows_to_csv(rows))
    refuted = [r for r in rows if r.verdict == "REFUTES"]
    for r in refuted:
        print(f"REFUTES at p={r.p} alpha={r.alpha}: spectrum {[_f(v) for v in r.spectrum]}", file=sys.stderr)
    return 1 if refuted else 0


def cmd_orbits(cfg: RunConfig) -> int:
    G = _need_group(cfg)
    comps = p_components(G)
    report = {"group": list(G.moduli), "components": []}
    for p, lam in comps.items():
        report["components"].append({"p": p, "lambda": list(lam), "miller": miller_orbit_count(lam),
                                     "ss_experimental": ss_orbit_count_experimental(lam),
                                     "agree": ss_orbit_count_experimental(lam) == miller_orbit_count(lam)})
    report["miller"] = miller_orbit_count_group(G)
    report["oracle"] = len(bruteforce_aut_orbits(G).orbits) if G.order <= AUT_CAP else None
    if len(comps) == 1:
        (p, lam), = comps.items()
        report.update({"lambda": list(lam), "p": p, "ss_experimental": ss_orbit_count_experimental(lam),
                       "agree": ss_orbit_count_experimental(lam) == report["miller"]})
    if cfg.output_format == "text":
        _emit(cfg, f"miller: {report['miller']}, oracle: {report['oracle']}\n")
    else:
        _emit(cfg, _dumps(report))
    return 1 if report["oracle"] is not None and report["oracle"] != report["miller"] else 0


HANDLERS = {"build": cmd_build, "spectrum": cmd_spectrum, "laplacian": cmd_laplacian,
            "threshold-check": cmd_threshold, "annihilators": cmd_annihilators, "verify-thm6": cmd_thm6,
            "conjecture-scan": cmd_scan, "orbits": cmd_orbits}


def run(cfg: RunConfig) -> int:
    return HANDLERS[cfg.command](cfg)


def _int_list(s: str) -> list[int]:
    try:
        return [int(x) for x in s.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {s!r}") from None


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="annigraph", description="Group-annihilator graphs of finite abelian groups.",
                                 epilog=GROUP_GRAMMAR, formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = ap.add_subparsers(dest="command", required=True)
    default_fmt = {"build": "text", "spectrum": "json", "laplacian": "text", "threshold-check": "text",
                   "annihilators": "text", "verify-thm6": "json", "conjecture-scan": "csv", "orbits": "json"}
    for name in COMMANDS:
        sp = sub.add_parser(name, epilog=GROUP_GRAMMAR, formatter_class=argparse.RawDescriptionHelpFormatter)
        if name not in ("verify-thm6", "conjecture-scan"):
            sp.add_argument("--group", required=True, help="group spec, see grammar below")
        sp.add_argument("--format", default=default_fmt[name], choices=["json", "csv", "dot", "graph6", "text"])
        sp.add_argument("--out", help="write output to this file instead of stdout")
        sp.add_argument("--max-vertices", type=int, help=f"vertex cap (env ANNIGRAPH_MAX_VERTICES, default {GRAPH_CAP})")
        sp.add_argument("--tol", type=float, default=1e-10, help="eigensolver off-diagonal tolerance")
        sp.add_argument("--max-sweeps", type=int, default=100)
        if name == "verify-thm6":
            sp.add_argument("--p", type=int, required=True)
        if name == "conjecture-scan":
            sp.add_argument("--primes", type=_int_list, required=True)
            sp.add_argument("--alpha-max", type=int, required=True)
            sp.add_argument("--alpha-min", type=int, default=1)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        cap = args.max_vertices if args.max_vertices is not None else int(os.environ.get("ANNIGRAPH_MAX_VERTICES", GRAPH_CAP))
        if cap <= 0 or args.tol <= 0 or args.max_sweeps <= 0:
            raise ParseError("caps must be positive")
        group = parse_group_spec(args.group) if getattr(args, "group", None) else None
        allowed = {"build": {"text", "json", "dot", "graph6"}}.get(args.command, {"json", "csv", "text"})
        if args.format not in allowed:
            raise ParseError(f"format {args.format!r} is not available for {args.command}")
        extra = {k: getattr(args, k) for k in ("p", "primes", "alpha_max", "alpha_min") if hasattr(args, k)}
        cfg = RunConfig(args.command, group, args.format, cap, args.tol, args.max_sweeps, args.out, extra)
        return run(cfg)
    except (ParseError, NotApplicable) as e:
        print(f"annigraph: error: {e}\n{GROUP_GRAMMAR}", file=sys.stderr)
        return 2
    except AnnigraphError as e:
        print(f"annigraph: error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
