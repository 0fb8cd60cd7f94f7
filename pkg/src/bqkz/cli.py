"""Command line front end: ``qkz <subcommand> --k K --n N ...``.

Exit codes: 0 all checks pass (or are recorded), 1 some check failed,
2 usage error, 3 parameters outside the supported min(k, n) <= 2 range.
"""
from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from pathlib import Path

from . import __version__
from . import heckerep as hr
from . import pathspace as ps
from . import qkzsolver as qs
from . import rationallimit as rl
from . import sumrules as sr
from .exactring import MultiPoly
from .report import Report

FORMAT_VERSION = 1
REPORT_SCHEMA = 1
ALL_CHECKS = ("exchange", "boundary", "wheel", "recursion", "hecke", "quotient", "duality",
              "p-properties")
DEFAULT_CHECKS = ALL_CHECKS


class UsageError(Exception):
    pass


class CacheError(Exception):
    pass


class FormatVersionMismatch(CacheError):
    pass


class CorruptCache(CacheError):
    pass


@dataclass
class RunConfig:
    command: str
    k: int = 2
    n: int = 2
    r_mode: str = "symbolic"
    checks: tuple = DEFAULT_CHECKS
    cache_dir: str | None = None
    use_cache: bool = True
    output: str = "text"
    seed: int = 0
    size_cap: int = ps.DEFAULT_SIZE_CAP
    jobs: int = 1
    extra: dict = field(default_factory=dict)

    def echo(self) -> dict:
        d = asdict(self)
        d.pop("cache_dir")  # machine-specific; keeps reports byte-identical across hosts
        d["checks"] = list(self.checks)
        return d


# -- canonical serialization ------------------------------------------------------------

def canonical_dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), default=str)


def _components_payload(sol: qs.QkzSolution) -> dict:
    return {ps.word_str(p): sol[p].to_json() for p in sol.basis.paths}


def serialize_solution(sol: qs.QkzSolution) -> str:
    payload = _components_payload(sol)
    body = canonical_dumps(payload)
    doc = {"format_version": FORMAT_VERSION, "k": sol.k, "n": sol.n,
           "basis": [ps.word_str(p) for p in sol.basis.paths],
           "hash": hashlib.sha256(body.encode()).hexdigest(), "components": payload}
    return canonical_dumps(doc)


def deserialize_solution(text: str) -> qs.QkzSolution:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CorruptCache(f"unreadable cache: {exc}") from None
    if not isinstance(doc, dict) or doc.get("format_version") != FORMAT_VERSION:
        raise FormatVersionMismatch(f"expected format {FORMAT_VERSION}")
    try:
        payload = doc["components"]
        if hashlib.sha256(canonical_dumps(payload).encode()).hexdigest() != doc["hash"]:
            raise CorruptCache("hash mismatch")
        k, n = int(doc["k"]), int(doc["n"])
        basis = ps.enumerate_paths(k, n, size_cap=max(k * n, ps.DEFAULT_SIZE_CAP))
        if [ps.word_str(p) for p in basis.paths] != doc["basis"]:
            raise CorruptCache("basis mismatch")
        comps = {p: MultiPoly.from_json(payload[ps.word_str(p)]) for p in basis.paths}
    except (KeyError, TypeError, ValueError) as exc:
        raise CorruptCache(f"malformed cache: {exc}") from None
    return qs.QkzSolution(k, n, basis, comps)


def cache_roundtrip(sol: qs.QkzSolution) -> qs.QkzSolution:
    return deserialize_solution(serialize_solution(sol))


def default_cache_dir() -> Path:
    env = os.environ.get("QKZ_CACHE_DIR")
    if env:
        return Path(env)
    return Path(os.environ.get("XDG_CACHE_HOME", Path.home() / ".cache")) / "qkz"


def cache_path(cache_dir, k: int, n: int) -> Path:
    return Path(cache_dir) / f"solution-k{k}-n{n}-v{FORMAT_VERSION}.json"


def load_or_solve(cfg: RunConfig, notes: list | None = None) -> qs.QkzSolution:
    """Cached solution when the file is valid, otherwise a fresh solve."""
    notes = notes if notes is not None else []
    path = cache_path(cfg.cache_dir or default_cache_dir(), cfg.k, cfg.n)
    if cfg.use_cache and path.exists():
        try:
            sol = deserialize_solution(path.read_text())
            if (sol.k, sol.n) == (cfg.k, cfg.n):
                notes.append("cache hit")
                return sol
        except CacheError as exc:
            notes.append(f"cache rejected ({type(exc).__name__}); re-solved")
    sol = qs.solve(cfg.k, cfg.n)
    if cfg.use_cache:
        store(sol, path)
    return sol


def store(sol: qs.QkzSolution, path: Path) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(".tmp")
    tmp.write_text(serialize_solution(sol))
    tmp.replace(path)


# -- report rendering ----------------------------------------------------------------------

def envelope(cfg: RunConfig, rep: Report | None = None, data=None) -> dict:
    out = {"tool": "qkz", "version": __version__, "schema": REPORT_SCHEMA, "config": cfg.echo()}
    if rep is not None:
        out["report"] = rep.to_json()
    if data is not None:
        out["data"] = data
    return out


def render(cfg: RunConfig, doc: dict, text: str | None = None, rows=None) -> str:
    if cfg.output == "json":
        return json.dumps(doc, sort_keys=True, indent=2, default=str)
    if cfg.output == "csv" and rows is not None:
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(rows)
        return buf.getvalue().rstrip("\n")
    if text is not None:
        return text
    if "report" in doc:
        lines = [doc["report"]["title"]]
        for c in doc["report"]["checks"]:
            lines.append(f"  [{c['status']:>11}] {c['name']} ({c['mode']})")
        return "\n".join(lines)
    return json.dumps(doc, sort_keys=True, indent=2, default=str)


def exit_code(rep: Report | None) -> int:
    return 0 if rep is None or rep.ok else 1


def _cyclo_json(x):
    if x.is_rational():
        return str(x.to_rational())
    return {"order": x.order, "coords": [str(c) for c in x.coords],
            "approx": round(sr.decimal(x), 12) if x.is_real() else None}


# -- subcommands --------------------------------------------------------------------------

def cmd_paths(cfg: RunConfig):
    basis = ps.enumerate_paths(cfg.k, cfg.n, cfg.size_cap)
    words = [ps.word_str(p) for p in basis.paths]
    data = {"count": len(basis), "formula": ps.count(cfg.k, cfg.n), "paths": words,
            "ranks": basis.ranks()}
    rep = Report(f"paths ({cfg.k},{cfg.n})")
    rep.add("enumeration size equals the product formula", len(basis) == data["formula"])
    text = "\n".join(f"{w} rank {r}" for w, r in zip(words, data["ranks"]))
    rows = [["path", "rank"]] + [[w, r] for w, r in zip(words, data["ranks"])]
    return envelope(cfg, rep, data), rep, text, rows


def cmd_repr(cfg: RunConfig):
    R = hr.build(cfg.k, cfg.n, cfg.size_cap)
    data = R.to_json()
    rep = Report(f"representation ({cfg.k},{cfg.n})")
    for name, fn in (("hecke", hr.verify_hecke), ("quotient", hr.verify_quotient),
                     ("p-properties", hr.verify_p_properties)):
        if name in cfg.checks:
            rep.extend(fn(R), f"{name}: ")
    if "duality" in cfg.checks:
        rep.extend(hr.verify_duality(R, hr.build(cfg.n, cfg.k, cfg.size_cap)), "duality: ")
    blocks = []
    for i in range(1, R.N):
        blocks.append(f"e_{i}:")
        blocks.extend("  " + " ".join(f"{x:>3}" for x in row) for row in R.symbolic_matrix(i))
    return envelope(cfg, rep, data), rep, "\n".join(blocks) + "\n" + render(
        cfg, envelope(cfg, rep)), None


def cmd_solve(cfg: RunConfig):
    notes: list = []
    sol = load_or_solve(cfg, notes)
    rep = Report(f"solve ({cfg.k},{cfg.n})")
    rep.add("pi_0 component equals the closed form",
            sol[sol.basis.pi_0] == qs.base_component(cfg.k, cfg.n), witness=notes or None)
    data = {"basis": [ps.word_str(p) for p in sol.basis.paths],
            "terms": [len(sol[p]) for p in sol.basis.paths]}
    if cfg.extra.get("full"):
        data["components"] = _components_payload(sol)
    text = "\n".join(f"{w}: {t} terms" for w, t in zip(data["basis"], data["terms"]))
    return envelope(cfg, rep, data), rep, text, None


def _verify_group(args):
    k, n, name, cache_dir, use_cache = args
    cfg = RunConfig("verify", k, n, cache_dir=cache_dir, use_cache=use_cache)
    if name in ("hecke", "quotient", "duality", "p-properties"):
        R = hr.build(k, n)
        if name == "hecke":
            return hr.verify_hecke(R)
        if name == "quotient":
            return hr.verify_quotient(R)
        if name == "p-properties":
            return hr.verify_p_properties(R)
        return hr.verify_duality(R, hr.build(n, k))
    sol = load_or_solve(cfg)
    if name == "exchange":
        return qs.verify_exchange(sol)
    if name == "boundary":
        return qs.verify_boundary(sol)
    if name == "wheel":
        return qs.verify_wheel(sol)
    if name == "recursion":
        if n < 2:
            rep = Report("recursion")
            rep.add("recursion needs n >= 2", None, status="unsupported")
            return rep
        return qs.verify_recursion(sol, qs.solve(k, n - 1))
    raise UsageError(f"unknown check {name}")


def cmd_verify(cfg: RunConfig):
    rep = Report(f"verify ({cfg.k},{cfg.n})")
    if cfg.use_cache:
        load_or_solve(cfg)  # populate once before any parallel readers
    jobs = [(cfg.k, cfg.n, name, cfg.cache_dir, cfg.use_cache) for name in cfg.checks]
    if cfg.jobs > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            parts = list(pool.map(_verify_group, jobs))
    else:
        parts = [_verify_group(j) for j in jobs]
    for name, part in zip(cfg.checks, parts):
        rep.extend(part, f"{name}: ")
    if {"exchange", "boundary"} & set(cfg.checks):
        sol = load_or_solve(cfg)
        rep.extend(qs.verify_structure(sol), "structure: ")
    return envelope(cfg, rep), rep, None, None


def cmd_sumrule(cfg: RunConfig):
    sol = load_or_solve(cfg)
    rule = sr.sum_rule(sol)
    hom = rule.homogeneous()
    rep = Report(f"sum rule ({cfg.k},{cfg.n})")
    if cfg.extra.get("check"):
        rep.extend(sr.verify_sum_rule(rule))
        if cfg.n >= 2:
            rep.extend(sr.multipoint_check(rule, seed=cfg.seed))
    data = {"homogeneous": hom}
    if cfg.r_mode != "symbolic":
        rv = Fraction(cfg.r_mode)
        data["value"] = str(sum(c * rv ** m for m, c in enumerate(hom)))
    if not cfg.extra.get("homogeneous"):
        data["polynomial"] = rule.poly.to_json()
    text = f"I(1,...,1|r) = {sr.format_rpoly(hom)}"
    if "value" in data:
        text += f"\nI(1,...,1|{cfg.r_mode}) = {data['value']}"
    if rep.checks:
        text += "\n" + render(RunConfig("x"), envelope(cfg, rep))
    return envelope(cfg, rep, data), rep, text, None


def cmd_numbers(cfg: RunConfig):
    which = cfg.extra.get("which", "vsasm")
    kmax, nmax = cfg.extra.get("k_max", 5), cfg.extra.get("n_max", 5)
    fn = {"vsasm": sr.vsasm_number, "asm": sr.asm_number}.get(which)
    if fn is None:
        raise UsageError(f"--which must be asm or vsasm, not {which!r}")
    table = [[fn(k, n) for k in range(1, kmax + 1)] for n in range(1, nmax + 1)]
    rows = [["n\\k"] + list(range(1, kmax + 1))] + [[n] + row for n, row in
                                                   enumerate(table, start=1)]
    text = "\n".join(" ".join(str(x) for x in row) for row in rows)
    data = {"which": which, "rows": table}
    return envelope(cfg, None, data), None, text, rows


def cmd_rational_limit(cfg: RunConfig):
    rv = int(cfg.extra.get("r_value", 1))
    rep = Report(f"rational limit ({cfg.k},{cfg.n}) r={rv}")
    if cfg.extra.get("modular"):
        lv = rl.homogeneous_limit_modular(cfg.k, cfg.n, rv)
    else:
        sol = load_or_solve(cfg)
        lv = rl.homogeneous_limit(sol, rv)
        rep.extend(rl.limit_sum_check(cfg.k, cfg.n, sol, rv))
    data = lv.to_json()
    if cfg.k == 2 and rv == 1:
        b = rl.brauer_degree(cfg.n)
        data["brauer"] = b
        data["brauer_check"] = lv.total == b
        if cfg.extra.get("modular"):
            rep.add(f"sum equals the Brauer degree {b}", lv.total == b, mode="multipoint",
                    witness={"sum": lv.total})
    text = (f"psi = {{{', '.join(str(x) for x in lv.vector())}}} (sum {lv.total},"
            f" raw sign {lv.raw_sign:+d})")
    return envelope(cfg, rep, data), rep, text, None


def cmd_stationary(cfg: RunConfig):
    sol = load_or_solve(cfg)
    P = sr.stationary_probabilities(sol)
    w = sr.w_vector(sol)
    data = {"basis": [ps.word_str(p) for p in sol.basis.paths],
            "probabilities": [_cyclo_json(P[p]) for p in sol.basis.paths],
            "decimals": [round(sr.decimal(P[p]), 12) for p in sol.basis.paths],
            "w": [[_cyclo_json(c) for c in w[p]] for p in sol.basis.paths]}
    rep = Report(f"stationary ({cfg.k},{cfg.n})")
    total = sum(P.values(), P[sol.basis.pi_f] * 0)
    rep.add("probabilities sum to 1", total == 1)
    text = "\n".join(f"{b}: {p if isinstance(p, str) else d}" for b, p, d in
                     zip(data["basis"], data["probabilities"], data["decimals"]))
    return envelope(cfg, rep, data), rep, text, None


def cmd_conjecture(cfg: RunConfig):
    ks = cfg.extra.get("k_list") or [cfg.k]
    rep = Report("convex transitions")
    data = []
    for k in ks:
        ct = sr.convex_transition_probability(k)
        data.append(ct.to_json())
        rep.add(f"k={k}: exact observable vs (k-1)(13k+4)/(2(2k-1)(4k+1))", None,
                status="recorded", witness=ct.to_json())
    text = "\n".join(f"k={d['k']}: observable {d['observable']} conjecture {d['conjecture']}"
                     f" {'agree' if d['agrees'] else 'DIFFER'}" for d in data)
    return envelope(cfg, rep, data), rep, text, None


COMMANDS = {"paths": cmd_paths, "repr": cmd_repr, "solve": cmd_solve, "verify": cmd_verify,
            "sumrule": cmd_sumrule, "numbers": cmd_numbers,
            "rational-limit": cmd_rational_limit, "stationary": cmd_stationary,
            "conjecture": cmd_conjecture}


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qkz", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"qkz {__version__}")
    sub = p.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        s = sub.add_parser(name)
        s.add_argument("--k", type=int, default=2)
        s.add_argument("--n", type=int, default=2)
        s.add_argument("--r", dest="r_mode", default="symbolic",
                       help="'symbolic' or a rational value")
        s.add_argument("--checks", default=",".join(DEFAULT_CHECKS))
        s.add_argument("--cache-dir", default=None)
        s.add_argument("--no-cache", action="store_true")
        s.add_argument("--output", choices=("json", "csv", "text"), default="text")
        s.add_argument("--seed", type=int, default=0)
        s.add_argument("--size-cap", type=int, default=ps.DEFAULT_SIZE_CAP)
        s.add_argument("--jobs", type=int, default=1)
        if name == "sumrule":
            s.add_argument("--homogeneous", action="store_true")
            s.add_argument("--check", action="store_true")
        if name == "numbers":
            s.add_argument("--which", default="vsasm")
            s.add_argument("--k-max", type=int, default=5)
            s.add_argument("--n-max", type=int, default=5)
        if name == "rational-limit":
            s.add_argument("--r-value", type=int, choices=(0, 1), default=1)
            s.add_argument("--modular", action="store_true")
        if name == "solve":
            s.add_argument("--full", action="store_true", help="include all components")
        if name == "conjecture":
            s.add_argument("--k-list", default=None, help="comma separated, e.g. 2,3,4,5")
    return p


def parse_config(argv) -> RunConfig:
    ns = _parser().parse_args(argv)
    checks = tuple(c for c in ns.checks.split(",") if c)
    unknown = [c for c in checks if c not in ALL_CHECKS]
    if unknown:
        raise UsageError(f"unknown checks {unknown}")
    if ns.k < 1 or ns.n < 1:
        raise UsageError("k and n must be positive")
    if ns.r_mode != "symbolic":
        try:
            Fraction(ns.r_mode)
        except ValueError:
            raise UsageError(f"--r must be 'symbolic' or a rational, not {ns.r_mode!r}") from None
    extra = {}
    for key in ("homogeneous", "check", "which", "k_max", "n_max", "r_value", "modular",
                "full"):
        if hasattr(ns, key):
            extra[key] = getattr(ns, key)
    if getattr(ns, "k_list", None):
        extra["k_list"] = [int(x) for x in ns.k_list.split(",")]
    return RunConfig(ns.command, ns.k, ns.n, ns.r_mode, checks, ns.cache_dir,
                     not ns.no_cache, ns.output, ns.seed, ns.size_cap, ns.jobs, extra)


def run(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    try:
        cfg = parse_config(argv)
    except UsageError as exc:
        print(f"qkz: error: {exc}", file=sys.stderr)
        return 2
    except SystemExit as exc:
        return int(exc.code or 0) if exc.code not in (None, 0) else 0
    try:
        doc, rep, text, rows = COMMANDS[cfg.command](cfg)
    except hr.UnsupportedParameters as exc:
        msg = str(exc)
        if "min(k, n) <= 2" not in msg:
            msg += " (supported scope: min(k, n) <= 2)"
        print(f"qkz: unsupported parameters: {msg}", file=sys.stderr)
        return 3
    except (ps.SizeCapExceeded, UsageError) as exc:
        print(f"qkz: error: {exc}", file=sys.stderr)
        return 2
    print(render(cfg, doc, text, rows), file=stdout)
    return exit_code(rep)


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
