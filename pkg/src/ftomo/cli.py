"""Command-line front end.

Subcommands: tomogram, figure, entropy, entanglement, uncertainty, verify.
All output is CSV (plot-ready) or JSON; identical configuration yields
byte-identical files.  Options may come from flags or from a single JSON
config file (--config); explicit flags win.  Exit codes: 0 success,
1 failed verification, 2 configuration error, 3 numerical failure.
"""

import argparse
import json
import math
import sys
from concurrent.futures import ThreadPoolExecutor

from .csvio import write_rows
from .deformation import DeformationSpec
from .entanglement import cat_linear_entropy, kerr_zero_entropy, linear_entropy_series
from .entropy import verify_laguerre_inequality
from .errors import FtomoError
from .figures import FIGURE_IDS, figure_csv_text, grid
from .kernels import BACKEND
from .states import FockAmplitudes, f_coherent
from .tomography import husimi_grid, optical_grid, photon_grid, symplectic_grid
from .uncertainty import deformed_quadrature_stats, qosc_small_lambda_rhs
from .verify import run_checks

TWO_PI = 2.0 * math.pi


class _ConfigError(Exception):
    pass


def _parse_complex(text):
    s = str(text).strip()
    if "," in s:
        re_s, im_s = s.split(",", 1)
        return complex(float(re_s), float(im_s))
    try:
        return complex(s.replace(" ", ""))
    except ValueError as exc:
        raise _ConfigError(f"cannot parse complex amplitude {text!r}") from exc


def _parse_deformation(text):
    if isinstance(text, dict):
        return DeformationSpec.from_json(text)
    s = str(text).strip()
    if s.startswith("{"):
        try:
            return DeformationSpec.from_json(json.loads(s))
        except (ValueError, KeyError) as exc:
            raise _ConfigError(f"bad deformation spec {text!r}: {exc}") from exc
    if ":" in s:
        family, lam = s.split(":", 1)
        try:
            return DeformationSpec.from_json({"family": family, "lambda": float(lam)})
        except ValueError as exc:
            raise _ConfigError(f"bad deformation spec {text!r}: {exc}") from exc
    if s == "identity":
        return DeformationSpec.identity()
    raise _ConfigError(f"bad deformation spec {text!r}")


def _parse_values(text):
    """Grid 'start:stop:step' or comma list 'v1,v2,...' of floats."""
    s = str(text).strip()
    if ":" in s:
        parts = s.split(":")
        if len(parts) != 3:
            raise _ConfigError(f"grid spec must be start:stop:step, got {text!r}")
        start, stop, step = (float(p) for p in parts)
        return grid(start, stop, step)
    return [float(p) for p in s.split(",") if p.strip()]


def _half_open_grid(start, stop, step):
    out = []
    k = 0
    while True:
        v = start + k * step
        if v >= stop - 1e-12:
            return out
        out.append(v)
        k += 1


def _pmap_for(threads):
    if threads <= 1:
        return map

    def pmap(fn, xs):
        with ThreadPoolExecutor(max_workers=threads) as ex:
            return list(ex.map(fn, xs))

    return pmap


# per-command defaults used when neither flag nor config file sets a value
_DEFAULTS = {
    "tomogram": {
        "kind": None,
        "alpha": None,
        "fock": None,
        "deformation": "identity",
        "x_min": -6.0,
        "x_max": 6.0,
        "x_step": 0.05,
        "theta_min": 0.0,
        "theta_max": TWO_PI,
        "theta_step": TWO_PI / 360.0,
        "mu": 1.0,
        "nu": 0.0,
        "n_max": 32,
        "re_min": None,
        "re_max": None,
        "re_step": None,
        "im_min": None,
        "im_max": None,
        "im_step": None,
        "out": None,
        "eps": 1e-12,
        "audit": False,
        "threads": 1,
    },
    "figure": {"id": None, "out": None, "eps": 1e-12, "audit": False, "threads": 1},
    "entropy": {
        "n_values": "0,1,2,3,4,5",
        "x_values": "0.1,0.25,0.5,1,2,4,8",
        "s_values": "2,3,4",
        "out": "entropy.csv",
        "eps": 1e-12,
        "audit": False,
        "threads": 1,
    },
    "entanglement": {
        "lambdas": "0:5:0.02",
        "pairs": "2,1;1,1;0.5,1",
        "cat": None,
        "alphas": "0.5,1,2",
        "out": "entanglement.csv",
        "eps": 1e-12,
        "audit": False,
        "threads": 1,
    },
    "uncertainty": {
        "family": "qosc",
        "lambdas": "0:0.3:0.02",
        "alpha": None,
        "fock": None,
        "out": "uncertainty.csv",
        "eps": 1e-12,
        "audit": False,
        "threads": 1,
    },
    "verify": {
        "only": None,
        "force_alt_moment_constant": False,
        "out": None,
        "eps": 1e-12,
        "audit": False,
        "threads": 1,
    },
}


def _merge_config(args, command):
    defaults = _DEFAULTS[command]
    cfg = dict(defaults)
    if getattr(args, "config", None):
        try:
            with open(args.config, encoding="utf-8") as fh:
                file_cfg = json.load(fh)
        except (OSError, ValueError) as exc:
            raise _ConfigError(f"cannot read config file: {exc}") from exc
        unknown = sorted(set(file_cfg) - set(defaults))
        if unknown:
            raise _ConfigError(f"unknown config keys: {', '.join(unknown)}")
        cfg.update(file_cfg)
    for key in defaults:
        val = getattr(args, key, None)
        if val is not None:
            cfg[key] = val
    return cfg


def _build_state(cfg):
    if cfg.get("alpha") is not None and cfg.get("fock") is not None:
        raise _ConfigError("--alpha and --fock are mutually exclusive")
    if cfg.get("fock") is not None:
        return FockAmplitudes.fock(int(cfg["fock"]))
    if cfg.get("alpha") is not None:
        spec = _parse_deformation(cfg.get("deformation", "identity"))
        return f_coherent(_parse_complex(cfg["alpha"]), spec, cfg["eps"])
    return FockAmplitudes.vacuum()


def _write_sidecar(path, payload):
    with open(path + ".meta.json", "w", encoding="utf-8", newline="\n") as fh:
        json.dump(payload, fh, indent=2)
        fh.write("\n")


def cmd_tomogram(cfg):
    kind = cfg["kind"]
    if kind not in ("optical", "symplectic", "photon", "husimi"):
        raise _ConfigError(f"unknown tomogram kind {cfg['kind']!r}")
    state = _build_state(cfg)
    out = cfg["out"] or f"{kind}.csv"

    if kind in ("photon", "husimi"):
        default_span = (0.0, 0.0, 1.0) if kind == "photon" else (-3.0, 3.0, 0.1)
        re_axis = grid(
            *(cfg[k] if cfg[k] is not None else d
              for k, d in zip(("re_min", "re_max", "re_step"), default_span))
        )
        im_axis = grid(
            *(cfg[k] if cfg[k] is not None else d
              for k, d in zip(("im_min", "im_max", "im_step"), default_span))
        )

    if kind == "optical":
        xs = grid(cfg["x_min"], cfg["x_max"], cfg["x_step"])
        thetas = _half_open_grid(cfg["theta_min"], cfg["theta_max"], cfg["theta_step"])
        g = optical_grid(state, xs, thetas)
    elif kind == "symplectic":
        xs = grid(cfg["x_min"], cfg["x_max"], cfg["x_step"])
        g = symplectic_grid(state, xs, cfg["mu"], cfg["nu"])
    elif kind == "photon":
        g = photon_grid(state, list(range(int(cfg["n_max"]) + 1)), re_axis, im_axis)
    else:
        g = husimi_grid(state, re_axis, im_axis)

    g.write_csv(out, audit=cfg["audit"])
    _write_sidecar(
        out,
        {
            "command": "tomogram",
            "kind": kind,
            "state_digest": g.state_digest,
            "trunc_tail": state.trunc_tail,
            "grid": {name: len(vals) for name, vals in g.axes.items()},
            "eps": cfg["eps"],
            "backend": BACKEND,
        },
    )
    return 0


def cmd_figure(cfg):
    fig_id = int(cfg["id"])
    if fig_id not in FIGURE_IDS:
        raise _ConfigError(f"figure id must be one of {FIGURE_IDS}")
    out = cfg["out"] or f"figure{fig_id}.csv"
    text = figure_csv_text(
        fig_id, eps=cfg["eps"], audit=cfg["audit"], pmap=_pmap_for(cfg["threads"])
    )
    with open(out, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)
    return 0


def cmd_entropy(cfg):
    ns = [int(v) for v in _parse_values(cfg["n_values"])]
    xs = _parse_values(cfg["x_values"])
    ss = [int(v) for v in _parse_values(cfg["s_values"])]
    rows = []
    for n in ns:
        for x in xs:
            for s in ss:
                res = verify_laguerre_inequality(n, x, s)
                rows.append([n, x, s, res.lhs, res.holds])
    comments = []
    if cfg["audit"]:
        ok = all(row[4] for row in rows)
        comments.append(f"audit,all_hold,{'pass' if ok else 'fail'}")
    write_rows(cfg["out"], ["n", "x", "s", "lhs", "holds"], rows, comments)
    return 0


def cmd_entanglement(cfg):
    lams = _parse_values(cfg["lambdas"])
    rows = []
    if cfg["cat"]:
        if cfg["cat"] not in ("even", "odd"):
            raise _ConfigError("--cat must be even or odd")
        sign = +1 if cfg["cat"] == "even" else -1
        header = ["lambda", "abs_alpha", "sign", "entropy"]
        for a in _parse_values(cfg["alphas"]):
            for lam in lams:
                if lam == 0.0:
                    s = 0.0 if sign == +1 else 0.5
                else:
                    s = cat_linear_entropy(
                        a, DeformationSpec.kerr(lam), sign, cfg["eps"]
                    )
                rows.append([lam, a, sign, s])
    else:
        header = ["lambda", "abs_alpha1", "abs_alpha2", "entropy"]
        pairs = []
        for chunk in str(cfg["pairs"]).split(";"):
            a1_s, a2_s = chunk.split(",")
            pairs.append((float(a1_s), float(a2_s)))
        for a1, a2 in pairs:
            for lam in lams:
                if lam == 0.0:
                    s = kerr_zero_entropy(a1, a2)
                else:
                    s = linear_entropy_series(
                        a1, a2, DeformationSpec.kerr(lam), cfg["eps"]
                    )
                rows.append([lam, a1, a2, s])
    comments = []
    if cfg["audit"]:
        vals = [row[-1] for row in rows]
        ok = min(vals) >= -1e-12 and max(vals) <= 1.0 + 1e-12
        comments.append(f"audit,entropy_range,{'pass' if ok else 'fail'}")
    write_rows(cfg["out"], header, rows, comments)
    return 0


def cmd_uncertainty(cfg):
    family = cfg["family"]
    if family not in ("identity", "qosc", "kerr"):
        raise _ConfigError(f"unknown deformation family {family!r}")
    state = _build_state(cfg)
    digest = state.digest()
    lams = [0.0] if family == "identity" else _parse_values(cfg["lambdas"])
    rows = []
    for lam in lams:
        if family == "identity":
            spec = DeformationSpec.identity()
        elif family == "qosc":
            spec = DeformationSpec.qosc(lam)
        else:
            if lam <= 0:
                continue  # kerr is singular at lam = 0
            spec = DeformationSpec.kerr(lam)
        st = deformed_quadrature_stats(state, spec)
        rows.append(
            [
                lam,
                family,
                digest,
                st.sigma_qq,
                st.sigma_pp,
                st.sigma_qp,
                st.sr_lhs,
                st.sr_rhs,
                qosc_small_lambda_rhs(state, lam),
            ]
        )
    comments = []
    if cfg["audit"]:
        ok = all(row[6] >= row[7] - 1e-10 for row in rows)
        comments.append(f"audit,sr_holds,{'pass' if ok else 'fail'}")
    write_rows(
        cfg["out"],
        [
            "lambda",
            "family",
            "state_digest",
            "sigma_qq",
            "sigma_pp",
            "sigma_qp",
            "sr_lhs",
            "sr_rhs_exact",
            "sr_rhs_small_lambda",
        ],
        rows,
        comments,
    )
    return 0


def cmd_verify(cfg):
    try:
        report = run_checks(
            only=cfg["only"], force_alt_moment=cfg["force_alt_moment_constant"]
        )
    except ValueError as exc:
        raise _ConfigError(str(exc)) from exc
    text = json.dumps(report, indent=2) + "\n"
    if cfg["out"]:
        with open(cfg["out"], "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if report["passed"] else 1


_DISPATCH = {
    "tomogram": cmd_tomogram,
    "figure": cmd_figure,
    "entropy": cmd_entropy,
    "entanglement": cmd_entanglement,
    "uncertainty": cmd_uncertainty,
    "verify": cmd_verify,
}


def _add_common(sp):
    sp.add_argument("--out", help="output CSV/JSON path")
    sp.add_argument("--eps", type=float, help="truncation tolerance (default 1e-12)")
    sp.add_argument("--audit", action="store_const", const=True, default=None,
                    help="append normalization/positivity audit rows")
    sp.add_argument("--threads", type=int, help="worker threads for grid sweeps")
    sp.add_argument("--config", help="JSON config file; flags override it")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="ftomo",
        description="Deformed-oscillator states: tomograms, entropies, "
        "entanglement and uncertainty bounds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("tomogram", help="sample a tomogram on a grid")
    sp.add_argument("--kind", choices=("optical", "symplectic", "photon", "husimi"))
    sp.add_argument("--alpha", help="coherent amplitude 're[,im]' or '1+2j'")
    sp.add_argument("--fock", type=int, help="Fock state |n> instead of --alpha")
    sp.add_argument("--deformation",
                    help="deformation JSON or shorthand like kerr:1")
    for name in ("x-min", "x-max", "x-step", "theta-min", "theta-max",
                 "theta-step", "mu", "nu", "re-min", "re-max", "re-step",
                 "im-min", "im-max", "im-step"):
        sp.add_argument(f"--{name}", type=float)
    sp.add_argument("--n-max", type=int, help="photon-number axis limit")
    _add_common(sp)

    sp = sub.add_parser("figure", help="reproduce one of the standard figures")
    sp.add_argument("id", type=int, choices=FIGURE_IDS)
    _add_common(sp)

    sp = sub.add_parser("entropy", help="entropic-inequality sweep")
    sp.add_argument("--n-values")
    sp.add_argument("--x-values")
    sp.add_argument("--s-values")
    _add_common(sp)

    sp = sub.add_parser("entanglement", help="linear-entropy sweeps")
    sp.add_argument("--lambdas")
    sp.add_argument("--pairs", help="semicolon list of |a1|,|a2| pairs")
    sp.add_argument("--cat", choices=("even", "odd"))
    sp.add_argument("--alphas", help="|alpha| list for cat sweeps")
    _add_common(sp)

    sp = sub.add_parser("uncertainty", help="deformed uncertainty-relation sweep")
    sp.add_argument("--family", choices=("identity", "qosc", "kerr"))
    sp.add_argument("--lambdas")
    sp.add_argument("--alpha")
    sp.add_argument("--fock", type=int)
    _add_common(sp)

    sp = sub.add_parser("verify", help="run the self-verification suite")
    sp.add_argument("--only", action="append", help="run only the named check")
    sp.add_argument("--force-alt-moment-constant", action="store_const", const=True,
                    default=None,
                    help="use the +1/12 moment constant (fails by design)")
    _add_common(sp)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _merge_config(args, args.command)
        return _DISPATCH[args.command](cfg)
    except _ConfigError as exc:
        print(f"ftomo: {exc}", file=sys.stderr)
        return 2
    except FtomoError as exc:
        print(f"ftomo: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
