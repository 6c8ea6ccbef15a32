"""Command-line entry point.

Exit status: 0 when every identity holds, 1 when an identity fails (which
can only mean an implementation defect), 2 on bad input or usage.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from . import incidence as inc
from . import linalg
from . import poset as ps
from .errors import OrderComplementError
from .oracle import DEFAULT_SIZE_GUARD

EXIT_OK = 0
EXIT_IDENTITY_FAILED = 1
EXIT_USAGE = 2

GENERATORS = {
    "chain": ps.chain,
    "antichain": ps.antichain,
    "boolean": ps.boolean_lattice,
    "divisor": ps.divisor_poset,
}

DEFAULT_DENSITY = 0.3
DEFAULT_SEED = 0
DEFAULT_EXHAUSTIVE_N = 4


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    gen: Optional[str] = None
    input: Optional[str] = None
    format: str = "plain"
    seed: int = DEFAULT_SEED
    density: float = DEFAULT_DENSITY
    size_guard: int = DEFAULT_SIZE_GUARD
    relabel: bool = False
    count: int = 100
    n: Optional[int] = None
    kind: Optional[str] = None
    workers: int = 1

    @classmethod
    def from_args(cls, args) -> "RunConfig":
        cfg = cls(
            command=args.command,
            gen=getattr(args, "gen", None),
            input=getattr(args, "input", None),
            format=args.format,
            seed=args.seed,
            density=args.density,
            size_guard=args.size_guard,
            relabel=getattr(args, "relabel", False),
            count=getattr(args, "count", 100),
            n=getattr(args, "n", None),
            kind=getattr(args, "kind", None),
            workers=getattr(args, "workers", 1),
        )
        if cfg.command != "sweep" and (cfg.gen is None) == (cfg.input is None):
            raise UsageError("exactly one of --gen or --in is required")
        return cfg


def parse_gen(spec: str, seed: int = DEFAULT_SEED, density: float = DEFAULT_DENSITY) -> ps.Poset:
    """``chain:5``, ``antichain:3``, ``boolean:2``, ``divisor:12`` or ``random:10``."""
    kind, sep, arg = spec.partition(":")
    if not sep:
        raise UsageError(f"generator spec must look like name:param, got {spec!r}")
    try:
        value = int(arg)
    except ValueError:
        raise UsageError(f"generator parameter must be an integer, got {arg!r}") from None
    try:
        if kind == "random":
            return ps.random_poset(value, density, seed)
        if kind not in GENERATORS:
            raise UsageError(f"unknown generator {kind!r}; choose from {sorted(GENERATORS) + ['random']}")
        return GENERATORS[kind](value)
    except ValueError as exc:
        if isinstance(exc, OrderComplementError):
            raise
        raise UsageError(str(exc)) from None


def load_input(cfg: RunConfig):
    """Return ``(poset, display name)``."""
    if cfg.gen is not None:
        name = cfg.gen
        if cfg.gen.startswith("random:"):
            name = f"{cfg.gen} density={cfg.density} seed={cfg.seed} rng={ps.RNG_ALGORITHM}"
        return parse_gen(cfg.gen, cfg.seed, cfg.density), name
    path = Path(cfg.input)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"{path}: {exc.strerror}") from None
    try:
        return ps.loads(text), path.stem
    except OrderComplementError as exc:
        exc.args = (f"{path}: {exc}",)
        raise


def emit(obj: dict) -> None:
    print(json.dumps(obj, sort_keys=False))


def _poly_dict(p: linalg.IntPolynomial) -> dict:
    return {"coefficients": list(p.coeffs), "text": linalg.render_poly(p)}


def _block(title: str, m: linalg.IntMatrix) -> str:
    body = linalg.render_matrix(m)
    return f"{title}:\n{body}" if body else f"{title}: (empty)"


# commands ------------------------------------------------------------------

def cmd_info(cfg: RunConfig) -> int:
    p, name = load_input(cfg)
    census = inc.chain_counts(p)
    chi = census.euler_characteristic
    mx, mn = ps.find_maximum(p), ps.find_minimum(p)
    det_bar = inc.det_complement_direct(p)
    if cfg.format == "machine":
        emit({
            "poset": {"n": p.n, "name": name},
            "names": list(p.names),
            "maximum": None if mx is None else p.names[mx],
            "minimum": None if mn is None else p.names[mn],
            "chain_counts": list(census.counts),
            "chi": chi,
            "reduced_chi": chi - 1,
            "det_complement": det_bar,
        })
        return EXIT_OK
    print(f"poset: {name}")
    print(f"n = {p.n}")
    print(f"names: {' '.join(p.names)}")
    print(f"maximum: {'none' if mx is None else p.names[mx]}")
    print(f"minimum: {'none' if mn is None else p.names[mn]}")
    print("c_k: " + (" ".join(f"c_{k}={c}" for k, c in enumerate(census.counts)) or "(none)"))
    print(f"χ = {chi}")
    print(f"χ̃ = {chi - 1}")
    print(f"det Z̄ = {det_bar}")
    return EXIT_OK


def cmd_matrices(cfg: RunConfig) -> int:
    p, name = load_input(cfg)
    if cfg.relabel:
        p = ps.relabel(p, ps.linear_extension(p))
    Z = inc.zeta_matrix(p)
    Zbar = inc.complement_matrix(p)
    M = inc.mobius_matrix(p)
    N = inc.strict_matrix(p)
    chi = inc.euler_char_chains(p)
    if cfg.format == "machine":
        emit({
            "poset": {"n": p.n, "name": name},
            "order": list(p.names),
            "Z": Z.to_rows(),
            "Zbar": Zbar.to_rows(),
            "mobius": M.to_rows(),
            "N": N.to_rows(),
            "mobius_sum": M.total(),
            "chi": chi,
        })
        return EXIT_OK
    print(f"poset: {name}")
    print(f"order: {' '.join(p.names)}")
    for title, m in (("Z", Z), ("Z̄", Zbar), ("Möbius (Z⁻¹)", M), ("N = Z - I", N)):
        print(_block(title, m))
    print(f"sum of Möbius entries = {M.total()}")
    print(f"χ = {chi}")
    return EXIT_OK


def cmd_charpoly(cfg: RunConfig) -> int:
    p, name = load_input(cfg)
    formula = inc.charpoly_formula(p)
    direct = linalg.charpoly(inc.complement_matrix(p))
    equal = formula == direct
    if cfg.format == "machine":
        emit({
            "poset": {"n": p.n, "name": name},
            "formula": _poly_dict(formula),
            "division_free": _poly_dict(direct),
            "equal": equal,
        })
    else:
        print(f"poset: {name}")
        print(f"p(λ) from chain counts:   {linalg.render_poly(formula)}   {list(formula.coeffs)}")
        print(f"det(Z̄ - λI), Berkowitz:   {linalg.render_poly(direct)}   {list(direct.coeffs)}")
        print(f"equal: {'yes' if equal else 'NO'}")
        if not equal:
            print("identity failed: this indicates an implementation defect", file=sys.stderr)
    return EXIT_OK if equal else EXIT_IDENTITY_FAILED


def _print_report(rep: inc.VerificationReport) -> None:
    print(f"poset: {rep.name}")
    print(f"n = {rep.n}   χ = {rep.chi}   χ̃ = {rep.reduced_chi}   det Z̄ = {rep.det_complement}")
    for c in rep.checks:
        tag = "PASS" if c.passed else "FAIL"
        extra = f"  ({c.detail})" if c.detail else ""
        print(f"  [{tag}] {c.name}{extra}")
        if not c.passed:
            print(f"         lhs = {inc._jsonable(c.lhs)}")
            print(f"         rhs = {inc._jsonable(c.rhs)}")
    print(f"passed {rep.passed}, failed {rep.failed}")


def cmd_verify(cfg: RunConfig) -> int:
    p, name = load_input(cfg)
    rep = inc.verify_theorem(p, name, cfg.size_guard)
    if cfg.format == "machine":
        emit(rep.to_dict())
    else:
        _print_report(rep)
        if not rep.ok:
            print("identity failed: this indicates an implementation defect", file=sys.stderr)
    return EXIT_OK if rep.ok else EXIT_IDENTITY_FAILED


def sweep_corpus(cfg: RunConfig) -> list:
    """``[(name, poset), ...]`` in a fixed order."""
    if cfg.kind == "exhaustive":
        n = DEFAULT_EXHAUSTIVE_N if cfg.n is None else cfg.n
        return [(f"labeled:{n}#{i}", p) for i, p in enumerate(ps.all_labeled_posets(n))]
    n = 10 if cfg.n is None else cfg.n
    if cfg.count < 0:
        raise UsageError("--count must be >= 0")
    seeds = random_sweep_seeds(cfg.seed, cfg.count)
    return [(f"random:{n}#{i} seed={s}", ps.random_poset(n, cfg.density, s)) for i, s in enumerate(seeds)]


def random_sweep_seeds(seed: int, count: int) -> list:
    rng = random.Random(seed)
    return [rng.getrandbits(63) for _ in range(count)]


def _verify_one(args):
    name, p, guard = args
    return inc.verify_theorem(p, name, guard)


def cmd_sweep(cfg: RunConfig) -> int:
    corpus = sweep_corpus(cfg)
    jobs = [(name, p, cfg.size_guard) for name, p in corpus]
    if cfg.workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            reports = list(pool.map(_verify_one, jobs, chunksize=max(1, len(jobs) // (4 * cfg.workers))))
    else:
        reports = [_verify_one(j) for j in jobs]

    n_checks = sum(len(r.checks) for r in reports)
    n_failed = sum(r.failed for r in reports)
    bad = [r for r in reports if not r.ok]
    if cfg.format == "machine":
        for r in reports:
            emit(r.to_dict())
        emit({"sweep": {
            "kind": cfg.kind,
            "n": cfg.n if cfg.n is not None else (DEFAULT_EXHAUSTIVE_N if cfg.kind == "exhaustive" else 10),
            "count": len(reports),
            "density": cfg.density if cfg.kind == "random" else None,
            "seed": cfg.seed if cfg.kind == "random" else None,
            "rng": ps.RNG_ALGORITHM if cfg.kind == "random" else None,
        }, "summary": {"posets": len(reports), "identities": n_checks,
                       "passed": n_checks - n_failed, "failed": n_failed}})
    else:
        for r in bad:
            _print_report(r)
        print(f"posets checked: {len(reports)}")
        print(f"identities verified: {n_checks - n_failed} of {n_checks}")
        print(f"posets with failures: {len(bad)}")
    if bad:
        print("identity failed: this indicates an implementation defect", file=sys.stderr)
        return EXIT_IDENTITY_FAILED
    return EXIT_OK


COMMANDS = {
    "info": cmd_info,
    "matrices": cmd_matrices,
    "charpoly": cmd_charpoly,
    "verify": cmd_verify,
    "sweep": cmd_sweep,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("plain", "machine"), default="plain")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED, help="seed for random posets")
    common.add_argument("--density", type=float, default=DEFAULT_DENSITY, help="pair probability for random posets")
    common.add_argument("--size-guard", type=int, default=DEFAULT_SIZE_GUARD,
                        help="largest n for brute-force chain enumeration")

    single = argparse.ArgumentParser(add_help=False, parents=[common])
    src = single.add_mutually_exclusive_group()
    src.add_argument("--gen", metavar="NAME:PARAM",
                     help="chain:N, antichain:N, boolean:K, divisor:M or random:N")
    src.add_argument("--in", dest="input", metavar="PATH", help="poset JSON file")

    parser = argparse.ArgumentParser(
        prog="ordercomplement",
        description="Exact zeta / Möbius / order-complement matrix computations on finite posets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("info", parents=[single], help="size, extrema, chain counts, χ, χ̃")
    m = sub.add_parser("matrices", parents=[single], help="print Z, Z̄, Möbius matrix and N")
    m.add_argument("--relabel", action="store_true", help="reorder elements by a linear extension first")
    sub.add_parser("charpoly", parents=[single], help="closed-form vs division-free characteristic polynomial")
    sub.add_parser("verify", parents=[single], help="check every identity on one poset")
    sw = sub.add_parser("sweep", parents=[common], help="verify a batch of posets")
    sw.add_argument("kind", choices=("exhaustive", "random"))
    sw.add_argument("--n", type=int, default=None, help="poset size (exhaustive: default 4, max 5; random: default 10)")
    sw.add_argument("--count", type=int, default=100, help="number of random posets")
    sw.add_argument("--workers", type=int, default=1, help="worker processes")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = RunConfig.from_args(args)
        return COMMANDS[cfg.command](cfg)
    except (UsageError, OrderComplementError) as exc:
        kind = type(exc).__name__
        print(f"error ({kind}): {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
