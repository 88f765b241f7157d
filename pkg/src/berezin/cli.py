"""Command-line front end: descriptor inspection, closed-form evaluation
and the verification suites.

Configuration precedence: command-line flags > environment variables
(prefix BEREZIN_) > config file (--config, JSON) > built-in defaults.
Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 domain error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from . import algebra, kernels, spectra, verify
from .errors import BerezinError, UnsupportedFamily

_CONFIG_KEYS = ("seed", "budget", "tol_scale", "format")
_DEFAULTS = {"seed": verify.DEFAULT_SEED, "budget": "default",
             "tol_scale": 1.0, "format": "json"}


def _load_config(path: str | None) -> dict:
    cfg = dict(_DEFAULTS)
    if path:
        with open(path, "r", encoding="utf-8") as fh:
            file_cfg = json.load(fh)
        for key in _CONFIG_KEYS:
            if key in file_cfg:
                cfg[key] = file_cfg[key]
    for key in _CONFIG_KEYS:
        env = os.environ.get("BEREZIN_" + key.upper())
        if env is not None:
            cfg[key] = env
    return cfg


def _setting(args, cfg, key, cast):
    flag = getattr(args, key, None)
    if flag is not None:
        return cast(flag)
    return cast(cfg[key])


def _jsonable(value):
    """Fixed-order, JSON-safe rendering; complex numbers as [re, im]."""
    if isinstance(value, complex):
        return [value.real, value.imag]
    if isinstance(value, (np.floating, np.integer)):
        return value.item()
    if isinstance(value, float) and value != value:  # NaN
        return "nan"
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    return value


def _emit(payload: dict, fmt: str, out: str | None):
    if fmt == "json":
        text = json.dumps(_jsonable(payload), ensure_ascii=False, indent=2) + "\n"
    else:  # csv: header row, '.' decimal, '\n' line ends
        rows = payload.get("cases")
        if rows is None:
            keys = list(payload.keys())
            flat = []
            for k in keys:
                v = _jsonable(payload[k])
                flat.append(";".join(str(x) for x in v) if isinstance(v, list)
                            else str(v))
            text = ",".join(keys) + "\n" + ",".join(flat) + "\n"
        else:
            header = ["name", "paper_anchor", "status", "max_rel_err", "samples"]
            lines = [",".join(header)]
            for row in rows:
                lines.append(",".join(
                    '"' + str(row[k]) + '"' if k == "paper_anchor" else str(row[k])
                    for k in header))
            text = "\n".join(lines) + "\n"
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# --------------------------------------------------------------------------
# subcommands
# --------------------------------------------------------------------------

def cmd_describe(args, cfg) -> int:
    try:
        desc = algebra.make_descriptor(args.algebra)
    except (UnsupportedFamily, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    payload = {
        "name": desc.name,
        "family": desc.family,
        "param": desc.param,
        "rank": desc.rank,
        "dim": desc.dim,
        "rank0": desc.rank0,
        "dim0": desc.dim0,
        "dim1": desc.dim1,
        "d": float(desc.d),
        "d0": float(desc.d0),
        "root_system": desc.root_system,
        "type_class": desc.type_class,
        "groups": list(desc.groups),
        "delta": float(desc.delta),
        "rho": [float(r) for r in desc.rho],
        "beta": [float(b) for b in desc.beta],
        "concrete": desc.is_concrete,
    }
    _emit(payload, _setting(args, cfg, "format", str), args.out)
    return 0


def _parse_vector(text: str) -> np.ndarray:
    return np.array([complex(part) for part in text.split(",")])


def cmd_eval(args, cfg) -> int:
    try:
        desc = algebra.make_descriptor(args.algebra)
        kind = args.kind
        if kind == "psi":
            x = algebra.Element(desc, np.real(_parse_vector(args.x)).astype(float))
            value = kernels.psi(x, complex(args.nu))
        elif kind == "transform":
            value = spectra.spherical_transform(
                desc, complex(args.nu), _parse_vector(args.lam),
                allow_outside_domain=args.allow_outside_domain)
        elif kind == "hua":
            value = spectra.hua_J(desc, complex(args.kappa),
                                  allow_outside_domain=args.allow_outside_domain)
        elif kind == "coeff":
            m = spectra.Weight(desc, tuple(int(p) for p in args.weight.split(",")))
            value = spectra.fourier_coeff(
                desc, complex(args.kappa), m,
                allow_outside_domain=args.allow_outside_domain)
        elif kind == "I":
            value = spectra.I_normalized(desc, complex(args.nu))
        elif kind == "b":
            value = spectra.bernstein_b(desc, complex(args.nu))
        elif kind == "C":
            value = spectra.C_of_s(desc, complex(args.s),
                                   allow_outside_domain=args.allow_outside_domain)
        else:  # pragma: no cover - argparse restricts choices
            return 2
    except BerezinError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 3
    if isinstance(value, complex) and abs(value.imag) < 1e-14 * max(1.0, abs(value.real)):
        value = value.real
    payload = {"kind": args.kind, "algebra": desc.name, "value": value}
    _emit(payload, _setting(args, cfg, "format", str), args.out)
    return 0


def cmd_verify(args, cfg) -> int:
    report = verify.run_suite(
        args.suite,
        seed=_setting(args, cfg, "seed", int),
        budget=_setting(args, cfg, "budget", str),
        tol_scale=_setting(args, cfg, "tol_scale", float),
    )
    _emit(report, _setting(args, cfg, "format", str), args.out)
    return 0 if verify.all_passed(report) else 1


# --------------------------------------------------------------------------
# entry point
# --------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="berezin",
        description="Jordan-algebraic kernels, Gamma-product spectra and "
                    "their quadrature oracles.")
    parser.add_argument("--config", help="JSON config file")
    sub = parser.add_subparsers(dest="command", required=True)

    p_desc = sub.add_parser("describe", help="dump an algebra descriptor")
    p_desc.add_argument("algebra")
    p_desc.add_argument("--format", choices=("json", "csv"))
    p_desc.add_argument("--out")

    p_eval = sub.add_parser("eval", help="evaluate a closed-form quantity")
    p_eval.add_argument("kind",
                        choices=("psi", "transform", "hua", "coeff", "I", "b", "C"))
    p_eval.add_argument("--algebra", required=True)
    p_eval.add_argument("--nu")
    p_eval.add_argument("--lambda", dest="lam")
    p_eval.add_argument("--kappa")
    p_eval.add_argument("--weight")
    p_eval.add_argument("--s")
    p_eval.add_argument("--x")
    p_eval.add_argument("--allow-outside-domain", action="store_true")
    p_eval.add_argument("--format", choices=("json", "csv"))
    p_eval.add_argument("--out")

    p_ver = sub.add_parser("verify", help="run a verification suite")
    p_ver.add_argument("suite", choices=("algebraic", "conformal", "oracles", "all"))
    p_ver.add_argument("--seed", type=int)
    p_ver.add_argument("--budget", choices=("small", "default", "full"))
    p_ver.add_argument("--tol-scale", dest="tol_scale", type=float)
    p_ver.add_argument("--format", choices=("json", "csv"))
    p_ver.add_argument("--out")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _load_config(args.config)
    except (OSError, json.JSONDecodeError) as exc:
        sys.stderr.write(f"error: bad config: {exc}\n")
        return 2
    handler = {"describe": cmd_describe, "eval": cmd_eval,
               "verify": cmd_verify}[args.command]
    return handler(args, cfg)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
