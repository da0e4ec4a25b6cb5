"""Command-line front end.

Exit status: 0 on success, 1 when a checked assertion fails, 2 on usage or
domain errors.  Every run echoes its resolved :class:`JobConfig` to stderr.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from . import codes
from .curve import check_curve, curve_from_params, invariants, places_json
from .field import is_prime
from .floor import floor_divisor
from .linalg import rank
from .reproduce import reproduce_ex61, reproduce_ex62, reproduce_family
from .rrspace import SupportedDivisor, basis_lines, ell
from .semigroup import (
    WProfile,
    enumerate_pure_gaps,
    gaps_at_P0,
    gaps_by_ell_jumps,
    in_weierstrass,
    is_pure_gap,
)

# Enumerate places for `info` only when the field is at most this large.
INFO_ENUM_LIMIT = 1 << 16


class UsageError(ValueError):
    pass


@dataclass(frozen=True)
class JobConfig:
    command: str
    action: str | None = None
    p: int = 2
    e: int = 1
    n: int = 3
    divisor: str | None = None
    floor_of: str | None = None
    kind: str = "Omega"
    places: str | None = None
    point: str | None = None
    box: str | None = None
    trials: int = 100_000
    seed: int = 1
    threads: int = 1
    heavy: bool = False
    out: str | None = None

    def validate(self) -> None:
        if not is_prime(self.p):
            raise UsageError(f"p = {self.p} is not prime")
        if self.e < 1:
            raise UsageError("e must be at least 1")
        if self.n < 3 or self.n % 2 == 0:
            raise UsageError("n must be odd and at least 3")
        if self.trials < 0 or self.threads < 1:
            raise UsageError("trials must be >= 0 and threads >= 1")
        if self.kind not in ("CL", "Omega"):
            raise UsageError("kind must be CL or Omega")

    @property
    def q(self) -> int:
        return self.p**self.e


def _divisor(text: str | None, q: int, flag: str = "--divisor") -> SupportedDivisor:
    if text is None:
        raise UsageError(f"{flag} is required")
    try:
        doc = json.loads(text)
        G = SupportedDivisor.from_json(doc)
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise UsageError(f"malformed divisor JSON: {exc}") from exc
    if G.q != q:
        raise UsageError(f"divisor has {len(G.r)} P- and {len(G.s)} Q-coefficients, expected {q} and {q * q - 1}")
    return G


def _ints(text: str | None, flag: str) -> list[int]:
    if text is None:
        raise UsageError(f"{flag} is required")
    try:
        return [int(v) for v in text.split(",")]
    except ValueError as exc:
        raise UsageError(f"{flag} needs comma-separated integers") from exc


def _places(text: str | None) -> tuple[int, bool]:
    """``P0,P1,...,Pl[,Pinf]`` -> (l, include_infinity)."""
    if text is None:
        raise UsageError("--places is required")
    names = [v.strip() for v in text.split(",")]
    inf = names[-1] == "Pinf"
    finite = names[:-1] if inf else names
    if finite != [f"P{i}" for i in range(len(finite))] or not finite:
        raise UsageError("--places must be P0,P1,...,Pl optionally followed by Pinf")
    return len(finite) - 1, inf


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text + "\n")
    else:
        print(text)


def cmd_info(cfg: JobConfig) -> int:
    inv = invariants(cfg.q, cfg.n)
    doc = {"p": cfg.p, "e": cfg.e, "n": cfg.n, "q": cfg.q}
    doc.update({k: inv[k] for k in ("m", "g", "N", "total_places", "A", "B")})
    doc["A_short"] = inv["A_short"]
    ok = True
    if cfg.p ** (2 * cfg.n * cfg.e) <= INFO_ENUM_LIMIT:
        curve = curve_from_params(cfg.p, cfg.e, cfg.n)
        problems = check_curve(curve)
        doc["enumerated_places"] = curve.affine_count + 1
        doc["problems"] = problems
        ok = not problems
    else:
        doc["enumerated_places"] = None
    print(json.dumps(doc))
    return 0 if ok else 1


def cmd_places(cfg: JobConfig) -> int:
    _emit(places_json(curve_from_params(cfg.p, cfg.e, cfg.n)), cfg.out)
    return 0


def cmd_ell(cfg: JobConfig) -> int:
    curve = curve_from_params(cfg.p, cfg.e, cfg.n)
    print(ell(curve, _divisor(cfg.divisor, cfg.q)))
    return 0


def cmd_basis(cfg: JobConfig) -> int:
    curve = curve_from_params(cfg.p, cfg.e, cfg.n)
    _emit("\n".join(basis_lines(curve, _divisor(cfg.divisor, cfg.q))), cfg.out)
    return 0


def cmd_floor(cfg: JobConfig) -> int:
    curve = curve_from_params(cfg.p, cfg.e, cfg.n)
    _emit(floor_divisor(curve, _divisor(cfg.divisor, cfg.q)).to_json(), cfg.out)
    return 0


def cmd_semigroup(cfg: JobConfig) -> int:
    curve = curve_from_params(cfg.p, cfg.e, cfg.n)
    if cfg.point is None:
        if cfg.places == "P0":
            gaps = gaps_at_P0(curve)
        elif cfg.places == "Pinf":
            gaps = gaps_by_ell_jumps(curve, "Pinf")
        else:
            raise UsageError("without --point, --places must be P0 or Pinf")
        print(json.dumps({"place": cfg.places, "gaps": gaps, "count": len(gaps)}))
        return 0
    l, inf = _places(cfg.places)
    pt = _ints(cfg.point, "--point")
    if len(pt) != l + 1 + int(inf):
        raise UsageError("--point length does not match --places")
    prof = WProfile.from_tuple(pt, inf)
    doc = {
        "point": pt,
        "in_semigroup": in_weierstrass(curve, prof) if min(pt) >= 0 else None,
        "pure_gap": is_pure_gap(curve, prof) if min(pt) > 0 else None,
    }
    print(json.dumps(doc))
    return 0


def cmd_puregaps(cfg: JobConfig) -> int:
    curve = curve_from_params(cfg.p, cfg.e, cfg.n)
    l, inf = _places(cfg.places)
    gaps = enumerate_pure_gaps(curve, l, inf, _ints(cfg.box, "--box"))
    _emit("\n".join(",".join(map(str, g)) for g in gaps), cfg.out)
    return 0


def _code_divisor(cfg: JobConfig, curve):
    """Resolve G from --divisor and/or --floor-of; returns (G, H or None)."""
    if cfg.floor_of is not None:
        H = _divisor(cfg.floor_of, cfg.q, "--floor-of")
        G = H + floor_divisor(curve, H)
        if cfg.divisor is not None and _divisor(cfg.divisor, cfg.q) != G:
            raise UsageError(f"--divisor differs from H + floor(H) = {G}")
        return G, H
    return _divisor(cfg.divisor, cfg.q), None


def _write_code(code: codes.LinearCode, out: str | None) -> None:
    if out:
        codes.write_matrix(out + ".mat", code)
        Path(out + ".json").write_text(json.dumps(code.metadata()) + "\n")


def cmd_code(cfg: JobConfig) -> int:
    curve = curve_from_params(cfg.p, cfg.e, cfg.n)
    G, H = _code_divisor(cfg, curve)
    if cfg.action == "dual":
        dd = codes.dual_data(curve, G)
        doc = {
            "G": json.loads(G.to_json()),
            "A": dd.A,
            "B": dd.B,
            "G_perp": json.loads(dd.dual_divisor.to_json()),
            "rho_z_exponents": [0] + codes.rho_exponents(curve),
            "dim_C_L": codes.dimension_formula(curve, G),
            "dim_C_Omega": curve.N - codes.dimension_formula(curve, G),
        }
        if cfg.out:
            _write_code(codes.build_C_Omega(curve, G, H=H), cfg.out)
        print(json.dumps(doc))
        return 0
    if cfg.action == "verify":
        cl = codes.build_CL(curve, G)
        co = codes.build_C_Omega(curve, G, H=H)
        doc = {
            "C_L": list(cl.params()),
            "C_Omega": list(co.params()),
            "rank_C_L": rank(curve.field, cl.gen),
            "rank_C_Omega": rank(curve.field, co.gen),
            "dual": codes.verify_duality(cl, co),
        }
        ok = doc["dual"] and doc["rank_C_L"] == cl.k and doc["rank_C_Omega"] == co.k
        print(json.dumps(doc))
        return 0 if ok else 1
    code = codes.build_CL(curve, G) if cfg.kind == "CL" else codes.build_C_Omega(curve, G, H=H)
    if cfg.action == "sample":
        w = codes.sample_weights(code, cfg.trials, cfg.seed)
        print(json.dumps({"params": list(code.params()), "trials": cfg.trials, "seed": cfg.seed, "min_weight": w}))
        return 0
    _write_code(code, cfg.out)
    print(json.dumps(code.metadata()))
    return 0


def cmd_reproduce(cfg: JobConfig) -> int:
    if cfg.action == "ex61":
        rep = reproduce_ex61(trials=cfg.trials, seed=cfg.seed)
    elif cfg.action == "ex61-family":
        rep = reproduce_family(trials=cfg.trials, seed=cfg.seed, threads=cfg.threads)
    else:
        rep = reproduce_ex62(heavy=cfg.heavy)
    print("\n".join(rep.lines()))
    return 0 if rep.ok else 1


COMMANDS = {
    "info": cmd_info,
    "places": cmd_places,
    "ell": cmd_ell,
    "basis": cmd_basis,
    "floor": cmd_floor,
    "semigroup": cmd_semigroup,
    "puregaps": cmd_puregaps,
    "code": cmd_code,
    "reproduce": cmd_reproduce,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--p", type=int, default=2)
    common.add_argument("--e", type=int, default=1)
    common.add_argument("--n", type=int, default=3)
    common.add_argument("--divisor", help='divisor JSON {"r":[...],"s":[...],"t":int}')
    common.add_argument("--places", help="P0,P1,...,Pl[,Pinf]")
    common.add_argument("--box", help="comma-separated upper bounds")
    common.add_argument("--trials", type=int, default=100_000)
    common.add_argument("--seed", type=int, default=1)
    common.add_argument("--threads", type=int, default=1)
    common.add_argument("--heavy", action="store_true")
    common.add_argument("--out")

    ap = argparse.ArgumentParser(prog="ggscodes", description="Multi-point AG codes on GGS(q,n) curves.")
    sub = ap.add_subparsers(dest="command", required=True)
    for name in ("info", "places", "ell", "basis", "floor", "puregaps"):
        sub.add_parser(name, parents=[common])
    sg = sub.add_parser("semigroup", parents=[common])
    sg.add_argument("--point", help="comma-separated coordinates")
    code = sub.add_parser("code", parents=[common])
    code.add_argument("action", choices=["build", "dual", "verify", "sample"])
    code.add_argument("--kind", choices=["CL", "Omega"], default="Omega")
    code.add_argument("--floor-of", dest="floor_of", help="H; the code divisor becomes H + floor(H)")
    rep = sub.add_parser("reproduce", parents=[common])
    rep.add_argument("action", choices=["ex61", "ex61-family", "ex62"])
    return ap


# The worked examples fix their curve; flags --p/--e/--n are overridden.
EXAMPLE_CURVES = {"ex61": (2, 1, 3), "ex61-family": (2, 1, 3), "ex62": (2, 1, 5)}


def parse_config(argv: list[str] | None = None) -> JobConfig:
    ns = vars(build_parser().parse_args(argv))
    names = {f.name for f in dataclasses.fields(JobConfig)}
    cfg = JobConfig(**{k: v for k, v in ns.items() if k in names})
    if cfg.command == "reproduce":
        p, e, n = EXAMPLE_CURVES[cfg.action]
        cfg = dataclasses.replace(cfg, p=p, e=e, n=n)
    return cfg


def main(argv: list[str] | None = None) -> int:
    cfg = parse_config(argv)
    print(json.dumps(dataclasses.asdict(cfg)), file=sys.stderr)
    try:
        cfg.validate()
        return COMMANDS[cfg.command](cfg)
    except AssertionError as exc:
        print(f"assertion failed: {exc}", file=sys.stderr)
        return 1
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
