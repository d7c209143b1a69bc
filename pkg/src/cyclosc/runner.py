"""In-process command layer shared by the CLI and the HTTP service.

Every user-facing operation is a RunConfig fed to run(), which returns the
payload dict, its serialized bytes and the process exit code.  Exit codes:
0 success, 1 usage error (raised as UsageError for the caller to present),
2 infeasible parameters or failed verification (structured payload, no raise).
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np

from . import reports
from .algebra import (
    AlgebraParams,
    FockConditionViolated,
    NotRealResult,
    alpha_to_kappa,
    kappa_params,
    kappa_to_alpha,
    new_params,
    structure_function,
)
from .fock import DegreeTooLarge, build, check_defining_relations
from .ossqm import (
    ConstraintViolated,
    Mu2Infeasible,
    NotSupported,
    OssqmParams,
    build_ossqm,
    verify_ossqm,
)
from .pseudossqm import (
    InadmissibleParams,
    PseudoParams,
    build_pseudo_type1,
    build_pseudo_type2,
    verify_pseudo,
)
from .pssqm import build_pssqm, verify_bd_cubic, verify_pssqm
from .spectra import scan_grid, spectrum
from .ssqm import build_ssqm, verify_sqm2
from .susy import WrongLambda, ground_state_analysis

COMMANDS = ("inspect", "spectrum", "scan", "verify")
VARIANTS = ("ssqm", "pssqm", "bd", "pseudo1", "pseudo2", "ossqm")
FORMATS = {
    "inspect": ("json",),
    "spectrum": ("json", "csv"),
    "scan": ("json", "jsonl"),
    "verify": ("json",),
}
DEFAULT_TOL = {"ssqm": 1e-10}        # all other variants verify at 1e-9
FALLBACK_TOL = 1e-9
INSPECT_TOL = 1e-10

INFEASIBLE_EXC = (
    FockConditionViolated,
    NotRealResult,
    InadmissibleParams,
    ConstraintViolated,
    Mu2Infeasible,
)


class UsageError(ValueError):
    """Malformed request; maps to exit code 1 / HTTP 400."""


@dataclass
class RunConfig:
    command: str
    lam: int = 3
    alpha_head: tuple | None = None
    kappa: tuple | None = None
    blocks: int = 5
    levels: int = 12
    variant: str | None = None
    variant_params: dict = field(default_factory=dict)
    grid: tuple | None = None          # one (start, stop, step) triple per alpha component
    workers: int = 1
    fmt: str = "json"
    rel_tol: float | None = None
    degen_tol: float = 1e-9
    include_timing: bool = False


@dataclass(frozen=True)
class RunResult:
    payload: dict
    body: bytes
    exit_code: int


def _resolve_params(cfg: RunConfig) -> AlgebraParams:
    if cfg.alpha_head is not None and cfg.kappa is not None:
        raise UsageError("give alpha or kappa, not both")
    if cfg.kappa is not None:
        return kappa_to_alpha(kappa_params(cfg.lam, cfg.kappa))
    head = cfg.alpha_head if cfg.alpha_head is not None else (0.0,) * (cfg.lam - 1)
    return new_params(cfg.lam, head)


def _pick(vp: dict, allowed: dict) -> dict:
    unknown = sorted(set(vp) - set(allowed))
    if unknown:
        raise UsageError(f"unknown variant parameters: {', '.join(unknown)}")
    out = dict(allowed)
    out.update(vp)
    return out


def _verify(cfg: RunConfig, params: AlgebraParams):
    if cfg.variant not in VARIANTS:
        raise UsageError(f"variant must be one of {', '.join(VARIANTS)}, got {cfg.variant!r}")
    if cfg.blocks < 3:
        raise UsageError("verification needs at least 3 residue blocks")
    rep = build(params, cfg.blocks)
    vp = cfg.variant_params
    if cfg.variant == "ssqm":
        got = _pick(vp, {"broken": False})
        model = build_ssqm(rep, broken=bool(got["broken"]))
        report = verify_sqm2(model)
    elif cfg.variant == "pssqm":
        got = _pick(vp, {"mu": 0})
        model = build_pssqm(rep, int(got["mu"]))
        report = verify_pssqm(model)
    elif cfg.variant == "bd":
        got = _pick(vp, {"mu": 0})
        model = build_pssqm(rep, int(got["mu"]))
        report = verify_bd_cubic(model)
    elif cfg.variant in ("pseudo1", "pseudo2"):
        got = _pick(vp, {"mu": 0, "c": 1.0, "eta": None, "phi": 0.0, "r": None})
        pp = PseudoParams(
            mu=int(got["mu"]),
            c=float(got["c"]),
            eta=None if got["eta"] is None else float(got["eta"]),
            phi=float(got["phi"]),
            r=None if got["r"] is None else float(got["r"]),
        )
        builder = build_pseudo_type1 if cfg.variant == "pseudo1" else build_pseudo_type2
        model = builder(rep, pp)
        report = verify_pseudo(model)
    else:
        got = _pick(vp, {"mu": 0, "xi": 1.0, "phi": 0.0, "order": 2, "check_constraint": True})
        op = OssqmParams(mu=int(got["mu"]), xi=float(got["xi"]), phi=float(got["phi"]))
        model = build_ossqm(
            rep, op, order=int(got["order"]), check_constraint=bool(got["check_constraint"])
        )
        report = verify_ossqm(model)

    tol = cfg.rel_tol if cfg.rel_tol is not None else DEFAULT_TOL.get(cfg.variant, FALLBACK_TOL)
    ground = ground_state_analysis(model, cfg.degen_tol)
    passed = report.all_below(tol) and report.witnesses_ok()
    results = {
        "variant": cfg.variant,
        "model": reports.to_native(model.meta),
        "tolerance": float(tol),
        "passed": bool(passed),
        "witnesses": reports.witness_entries(report),
        "ground_state": {
            "degeneracy": int(ground.degeneracy),
            "energy": float(ground.energy),
            "sign": ground.sign,
        },
    }
    return results, reports.relation_entries(report), passed


def _dispatch(cfg: RunConfig):
    if cfg.command == "inspect":
        params = _resolve_params(cfg)
        rep = build(params, cfg.blocks)
        rr = check_defining_relations(rep)
        tol = cfg.rel_tol if cfg.rel_tol is not None else INSPECT_TOL
        results = {
            "ok": bool(rr.all_below(tol)),
            "dim": int(rep.dim),
            "blocks": int(cfg.blocks),
            "beta": reports.to_native(params.beta),
            "gamma": reports.to_native(params.gamma),
            "kappa": reports.to_native(alpha_to_kappa(params).kappa),
            "fock_margins": reports.to_native(params.fock_margins()),
            "structure_function": [
                structure_function(params, n) for n in range(2 * params.lam + 1)
            ],
        }
        return params, results, reports.relation_entries(rr), rr.all_below(tol)
    if cfg.command == "spectrum":
        params = _resolve_params(cfg)
        sr = spectrum(params, cfg.levels, cfg.degen_tol)
        return params, reports.spectrum_results(sr), [], True
    if cfg.command == "scan":
        if cfg.kappa is not None or cfg.alpha_head is not None:
            raise UsageError("scan takes its alpha values from the grid")
        if not cfg.grid:
            raise UsageError("scan needs one --grid axis per free alpha component")
        axes = [_axis_values(ax) for ax in cfg.grid]
        if cfg.workers < 1:
            raise UsageError(f"workers must be >= 1, got {cfg.workers}")
        points = scan_grid(
            cfg.lam, axes, n_levels=cfg.levels, tol=cfg.degen_tol, workers=cfg.workers
        )
        results = {"points": [reports.scan_point_dict(pt) for pt in points]}
        return None, results, [], True
    if cfg.command == "verify":
        params = _resolve_params(cfg)
        results, residuals, passed = _verify(cfg, params)
        return params, results, residuals, passed
    raise UsageError(f"command must be one of {', '.join(COMMANDS)}, got {cfg.command!r}")


def _axis_values(ax) -> list[float]:
    start, stop, step = (float(v) for v in ax)
    if step <= 0:
        raise UsageError(f"grid step must be positive, got {step}")
    if stop < start:
        raise UsageError(f"grid stop {stop} below start {start}")
    # half-step slack keeps the intended endpoint inside despite roundoff
    return [float(v) for v in np.arange(start, stop + 0.5 * step, step)]


def run(cfg: RunConfig) -> RunResult:
    if cfg.command not in FORMATS:
        raise UsageError(f"command must be one of {', '.join(COMMANDS)}, got {cfg.command!r}")
    if cfg.fmt not in FORMATS[cfg.command]:
        allowed = ", ".join(FORMATS[cfg.command])
        raise UsageError(f"format {cfg.fmt!r} not available for {cfg.command} (use {allowed})")
    t0 = time.perf_counter()
    error = None
    try:
        params, results, residuals, ok = _dispatch(cfg)
    except INFEASIBLE_EXC as exc:
        params, results, residuals, ok = None, None, [], False
        error = {"type": type(exc).__name__, "message": str(exc)}
    except UsageError:
        raise
    except (WrongLambda, NotSupported, DegreeTooLarge, ValueError) as exc:
        raise UsageError(str(exc)) from exc

    payload = {
        "schema_version": reports.SCHEMA_VERSION,
        "command": cfg.command,
        "algebra": reports.algebra_dict(params, cfg.lam),
        "results": results,
        "residuals": residuals,
        "timing_ms": int((time.perf_counter() - t0) * 1000.0) if cfg.include_timing else 0,
    }
    if error is not None:
        payload["error"] = error
        fmt = "json"               # structured errors always serialize as JSON
    else:
        fmt = cfg.fmt
    body = reports.emit_report(payload, fmt)
    return RunResult(payload, body, 0 if ok else 2)
