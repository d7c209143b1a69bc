"""Command line front end; a thin client over the shared runner layer.

Exit codes: 0 success, 1 usage error, 2 infeasible parameters or failed
verification.  Output is byte-deterministic for identical invocations unless
--timing is requested.
"""

from __future__ import annotations

import argparse
import re
import sys
from pathlib import Path

from .runner import FORMATS, VARIANTS, RunConfig, UsageError, run


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage; the contract reserves 2 for
    # infeasible/failed runs, so route usage problems to exit code 1
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # accept option values like -0.5,1 or -1.5:1.5:0.5 without = syntax
        self._negative_number_matcher = re.compile(r"^-(\d|\.\d)")


def _floats(text: str) -> tuple[float, ...]:
    return tuple(float(part) for part in text.split(","))


def _complexes(text: str) -> tuple[complex, ...]:
    return tuple(complex(part.strip().replace("i", "j")) for part in text.split(","))


def _axis(text: str) -> tuple[float, float, float]:
    parts = text.split(":")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected start:stop:step, got {text!r}")
    return tuple(float(p) for p in parts)


def _add_algebra_options(sp) -> None:
    sp.add_argument("--lambda", dest="lam", type=int, default=3, metavar="LAM",
                    help="algebra order, i.e. number of residue classes (default 3)")
    group = sp.add_mutually_exclusive_group()
    group.add_argument("--alpha", type=_floats, metavar="A0,A1,...",
                       help="first lambda-1 deformation components; last is -sum (default all 0)")
    group.add_argument("--kappa", type=_complexes, metavar="K1,K2,...",
                       help="lambda-1 complex Fourier components, j notation, "
                            "conjugation-symmetric")


def _add_output_options(sp, formats) -> None:
    sp.add_argument("--format", choices=formats, default="json", help="output format")
    sp.add_argument("--output", metavar="PATH", help="write output here instead of stdout")
    sp.add_argument("--timing", action="store_true",
                    help="fill timing_ms (breaks byte determinism)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cyclosc",
                     description="Cyclic-group-extended oscillator algebras: "
                                 "representations, spectra, supersymmetry variants.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sp = sub.add_parser("inspect", help="build a representation and check the defining relations")
    _add_algebra_options(sp)
    sp.add_argument("--blocks", type=int, default=5, help="residue blocks to keep (default 5)")
    sp.add_argument("--rel-tol", type=float, default=None,
                    help="relation tolerance (default 1e-10)")
    _add_output_options(sp, FORMATS["inspect"])

    sp = sub.add_parser("spectrum", help="lowest oscillator levels and their degeneracy pattern")
    _add_algebra_options(sp)
    sp.add_argument("--levels", type=int, default=12, help="number of levels (default 12)")
    sp.add_argument("--degen-tol", type=float, default=1e-9,
                    help="energy clustering tolerance (default 1e-9)")
    _add_output_options(sp, FORMATS["spectrum"])

    sp = sub.add_parser("scan", help="classify degeneracy patterns over an alpha grid")
    sp.add_argument("--lambda", dest="lam", type=int, default=3, metavar="LAM",
                    help="algebra order (default 3)")
    sp.add_argument("--workers", type=int, default=1,
                    help="process pool size for grid evaluation (default 1)")
    sp.add_argument("--grid", type=_axis, action="append", metavar="START:STOP:STEP",
                    help="one axis per free alpha component, repeatable, in order")
    sp.add_argument("--levels", type=int, default=12,
                    help="levels per classification (default 12)")
    sp.add_argument("--degen-tol", type=float, default=1e-9,
                    help="energy clustering tolerance (default 1e-9)")
    _add_output_options(sp, FORMATS["scan"])

    sp = sub.add_parser("verify", help="build a supersymmetry variant and verify its relations")
    _add_algebra_options(sp)
    sp.add_argument("--variant", choices=VARIANTS, required=True)
    sp.add_argument("--blocks", type=int, default=5, help="residue blocks to keep (default 5)")
    sp.add_argument("--mu", type=int, default=0, help="charge family index (default 0)")
    sp.add_argument("--broken", action="store_true",
                    help="ssqm: use the broken-phase charge")
    sp.add_argument("--c", type=float, default=1.0, help="pseudo variants: closure scale")
    sp.add_argument("--eta", type=float, default=None,
                    help="pseudo1: charge mixing, 0 < eta < 2|c| (default sqrt(2)|c|)")
    sp.add_argument("--phi", type=float, default=0.0, help="charge phase where applicable")
    sp.add_argument("--r", type=float, default=None,
                    help="pseudo2: free Hamiltonian shift (default: equal spacing)")
    sp.add_argument("--xi", type=float, default=1.0,
                    help="ossqm: charge mixing, 0 < xi <= sqrt(2)")
    sp.add_argument("--order", type=int, default=2, help="ossqm: order (only 2 supported)")
    sp.add_argument("--no-constraint-check", action="store_true",
                    help="ossqm: build even if alpha_{mu+1} != -1")
    sp.add_argument("--rel-tol", type=float, default=None,
                    help="residual tolerance (default 1e-10 for ssqm, else 1e-9)")
    sp.add_argument("--p", type=int, default=None,
                    help="order consistency check: must equal lambda - 1 when given")
    sp.add_argument("--degen-tol", type=float, default=1e-9,
                    help="ground-state clustering tolerance (default 1e-9)")
    _add_output_options(sp, FORMATS["verify"])

    sp = sub.add_parser("serve", help="run the HTTP service")
    sp.add_argument("--host", default="127.0.0.1")
    sp.add_argument("--port", type=int, default=8000)
    return parser


def _variant_params(args) -> dict:
    if args.variant == "ssqm":
        return {"broken": args.broken}
    if args.variant in ("pssqm", "bd"):
        return {"mu": args.mu}
    if args.variant == "pseudo1":
        return {"mu": args.mu, "c": args.c, "eta": args.eta, "phi": args.phi}
    if args.variant == "pseudo2":
        return {"mu": args.mu, "c": args.c, "r": args.r}
    return {
        "mu": args.mu,
        "xi": args.xi,
        "phi": args.phi,
        "order": args.order,
        "check_constraint": not args.no_constraint_check,
    }


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "serve":
        import uvicorn

        from .service import app

        uvicorn.run(app, host=args.host, port=args.port)
        return 0

    cfg = RunConfig(
        command=args.command,
        lam=args.lam,
        alpha_head=getattr(args, "alpha", None),
        kappa=getattr(args, "kappa", None),
        blocks=getattr(args, "blocks", 5),
        levels=getattr(args, "levels", 12),
        variant=getattr(args, "variant", None),
        variant_params=_variant_params(args) if args.command == "verify" else {},
        grid=tuple(args.grid) if getattr(args, "grid", None) else None,
        workers=getattr(args, "workers", 1),
        fmt=args.format,
        rel_tol=getattr(args, "rel_tol", None),
        degen_tol=getattr(args, "degen_tol", 1e-9),
        include_timing=args.timing,
    )
    try:
        p = getattr(args, "p", None)
        if p is not None and p != args.lam - 1:
            raise UsageError(f"--p {p} inconsistent with --lambda {args.lam} (order is lambda - 1)")
        result = run(cfg)
    except UsageError as exc:
        print(f"cyclosc: error: {exc}", file=sys.stderr)
        return 1
    if args.output:
        Path(args.output).write_bytes(result.body)
    else:
        sys.stdout.buffer.write(result.body)
        sys.stdout.buffer.flush()
    return result.exit_code


if __name__ == "__main__":
    raise SystemExit(main())
