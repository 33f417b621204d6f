"""Command-line front end.

Every command prints CSV (``#`` metadata lines, a header row, then data) or,
with ``--json``, one JSON document with the same content.  Options can also
come from a ``key = value`` config file (``--config``); flags win over the
file.

Exit codes: 0 success, 1 failed self-check, 2 domain error, 3 convergence
failure, 4 empty stability plateau.
"""
import argparse
import json
import sys
from dataclasses import dataclass, field

import numpy as np

from . import __version__
from .checks import run_selfcheck
from .dipole import DEFAULT_SIZE, DipoleSpec, gamma_spectrum
from .exceptions import ConvergenceError, DomainError
from .hmd import HmdConfig, PhysicalParams, coulomb_baseline, plateau_scan, solve_spectrum
from .tables import dipole_channel_table, quadrupole_shift_table
from .tra import (
    count_nodes,
    default_r_grid,
    hmd_wavefunction,
    overlay_compare,
    tra_parameters,
    tra_wavefunction,
)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_DOMAIN = 2
EXIT_CONVERGENCE = 3
EXIT_EMPTY_PLATEAU = 4

# option name -> type; names match the long flags with '-' replaced by '_'
OPTION_TYPES = {
    "Q": float, "d": float, "q": float, "eta": float, "p": float, "m": int,
    "gamma": float, "l": int, "basis": int, "rho": float, "quad_points": int,
    "kmax": int, "count": int, "size": int, "channel": int, "k": int,
    "r_min": float, "r_max": float, "points": int,
    "rho_min": float, "rho_max": float, "rho_step": float, "track": int, "tol": float,
    "workers": int, "out": str,
}
CONFIG_ALIASES = {"basis_size": "basis", "n_basis": "basis", "ell": "l"}


def load_config(path):
    """Parse a flat ``key = value`` file; ``#`` starts a comment."""
    values = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise DomainError(f"{path}:{lineno}: expected 'key = value'")
            key, value = (s.strip() for s in line.split("=", 1))
            key = CONFIG_ALIASES.get(key.replace("-", "_"), key.replace("-", "_"))
            if key not in OPTION_TYPES:
                raise DomainError(f"{path}:{lineno}: unknown option {key!r}")
            try:
                values[key] = OPTION_TYPES[key](value)
            except ValueError as exc:
                raise DomainError(f"{path}:{lineno}: bad value for {key}: {value!r}") from exc
    return values


def resolve_options(args):
    """Flags override the config file, which overrides built-in defaults."""
    opts = load_config(args.config) if args.config else {}
    for key in OPTION_TYPES:
        value = getattr(args, key, None)
        if value is not None:
            opts[key] = value
    return opts


@dataclass
class Output:
    columns: list
    rows: list
    formats: list
    meta: dict = field(default_factory=dict)
    exit_code: int = EXIT_OK

    def to_csv(self):
        lines = [f"# {k}: {_meta_text(v)}" for k, v in self.meta.items()]
        lines.append(",".join(self.columns))
        for row in self.rows:
            lines.append(",".join(_cell(v, f) for v, f in zip(row, self.formats)))
        return "\n".join(lines) + "\n"

    def to_json(self):
        doc = {
            "meta": self.meta,
            "columns": self.columns,
            "rows": [[_json_value(v) for v in row] for row in self.rows],
        }
        return json.dumps(doc, indent=2, default=_json_value) + "\n"


def _meta_text(v):
    if isinstance(v, float):
        return repr(v)
    if isinstance(v, (list, tuple)):
        return " ".join(_meta_text(x) for x in v)
    return str(v)


def _cell(v, fmt):
    if v is None or (isinstance(v, float) and np.isnan(v)):
        return ""
    return format(v, fmt)


def _json_value(v):
    if isinstance(v, np.generic):
        v = v.item()
    if isinstance(v, float) and np.isnan(v):
        return None
    if isinstance(v, np.ndarray):
        return [_json_value(x) for x in v]
    return v


E_FMT = ".9f"


def _physical(opts, Q=None, p=None):
    Q = opts.get("Q", Q)
    if Q is None:
        raise DomainError("net charge --Q is required")
    p = opts.get("p", p)
    q, eta = opts.get("q"), opts.get("eta")
    if p is None and (q is None or eta is None):
        raise DomainError("give --p, or both --q and --eta")
    d = opts.get("d", 0.0)
    m = opts.get("m", 0)
    if "gamma" in opts:
        gamma = opts["gamma"]
    elif "l" in opts:
        gamma = float(opts["l"])
    elif d > 0:
        channel = opts.get("channel", 0)
        gs = gamma_spectrum(DipoleSpec(d, m, opts.get("size", DEFAULT_SIZE)), channel + 1)
        gamma = float(gs.gammas[channel])
    else:
        raise DomainError("give --l or --gamma (or --d > 0 to derive gamma)")
    return PhysicalParams(Q=Q, gamma=gamma, p=p, d=d, q=q, eta=eta, m=m)


def _config(opts):
    return HmdConfig(opts.get("basis", 150), opts.get("rho", 2.0), opts.get("quad_points"))


def _params_meta(params, config):
    return {
        "Q": params.Q, "p": params.p, "d": params.d, "m": params.m,
        "gamma": params.gamma, "basis": config.basis_size, "rho": config.rho,
        "quad_points": config.quad_points,
    }


def cmd_gamma(opts):
    if "d" not in opts:
        raise DomainError("--d is required")
    spec = DipoleSpec(opts["d"], opts.get("m", 0), opts.get("size", DEFAULT_SIZE))
    gs = gamma_spectrum(spec, opts.get("count", 4))
    rows = [[i, t, g] for i, (t, g) in enumerate(zip(gs.t_values, gs.gammas))]
    meta = {"d": spec.d, "m": spec.m, "size": spec.size,
            "excluded_count": gs.excluded_count}
    if gs.excluded_count:
        meta["excluded_t"] = [float(t) for t in gs.excluded]
    return Output(["index", "t", "gamma"], rows, ["d", E_FMT, E_FMT], meta)


def cmd_spectrum(opts):
    params = _physical(opts)
    config = _config(opts)
    spec = solve_spectrum(params, config)
    kmax = opts.get("kmax", len(spec))
    rows = []
    for k, e in enumerate(spec.energies[:kmax]):
        ec = coulomb_baseline(params.Q, params.gamma, k)
        rows.append([k, e, ec, e - ec])
    meta = _params_meta(params, config)
    meta["bound_states"] = len(spec)
    meta["regularized"] = spec.regularized
    return Output(["k", "E", "E_coulomb", "E_minus_E_coulomb"], rows, ["d"] + [E_FMT] * 3, meta)


def cmd_table1(opts):
    Q, p = opts.get("Q", 2.0), opts.get("p", 5.0)
    config = _config(opts)
    kmax = opts.get("kmax", 8)
    ls = (0, 1, 2, 3)
    table = quadrupole_shift_table(Q, p, ls, kmax, config)
    rows = [[k] + list(table[k]) for k in range(kmax)]
    meta = {"Q": Q, "p": p, "basis": config.basis_size, "rho": config.rho,
            "quad_points": config.quad_points,
            "quantity": "E_k - E_k^C",
            "regularized_columns": "l=0"}
    return Output(["k"] + [f"l={l}" for l in ls], rows, ["d"] + [E_FMT] * len(ls), meta)


def cmd_table2(opts):
    Q, d, p = opts.get("Q", 1.0), opts.get("d", 5.0), opts.get("p", 3.0)
    config = _config(opts)
    kmax = opts.get("kmax", 4)
    rows = []
    for row in dipole_channel_table(Q, d, p, (0, 1, 2), opts.get("count", 4), kmax, config,
                                    opts.get("size", DEFAULT_SIZE)):
        if row.skipped:
            rows.append([row.m, row.t, None, "skipped"] + [None] * kmax)
        else:
            energies = list(-row.energies) + [None] * (kmax - row.energies.size)
            rows.append([row.m, row.t, row.gamma, "ok"] + energies)
    cols = ["m", "t", "gamma", "status"] + [f"-E_{k}" for k in range(kmax)]
    meta = {"Q": Q, "d": d, "p": p, "basis": config.basis_size, "rho": config.rho,
            "quad_points": config.quad_points,
            "skipped": "channels with t <= 0 (complex gamma)"}
    return Output(cols, rows, ["d", E_FMT, E_FMT, "s"] + [E_FMT] * kmax, meta)


def cmd_wavefunction(opts):
    params = _physical(opts)
    config = _config(opts)
    k = opts.get("k", 0)
    spec = solve_spectrum(params, config)
    if k < 0 or k >= len(spec):
        raise DomainError(f"state k={k} not in the bound spectrum (size {len(spec)})")
    r = default_r_grid(opts.get("r_min", 0.01), opts.get("r_max", 80.0), opts.get("points", 600))
    state = tra_parameters(spec.energies[k], params)
    psi_tra = tra_wavefunction(state, r, k)
    psi_hmd = hmd_wavefunction(spec.coefficients[:, k], params.gamma, config.rho, r, k)
    scale, residual = overlay_compare(psi_hmd, psi_tra)
    rows = [[ri, a, scale * b] for ri, a, b in zip(r, psi_tra.values, psi_hmd.values)]
    meta = _params_meta(params, config)
    meta.update({
        "k": k, "E": float(spec.energies[k]), "mu": state.mu, "lambda": state.lam,
        "N": state.N, "tra_basis_size": state.basis_size,
        "overlay_scale": scale, "overlay_residual": residual,
        "nodes_tra": count_nodes(psi_tra.values), "nodes_hmd": count_nodes(psi_hmd.values),
    })
    return Output(["r", "psi_tra", "psi_hmd"], rows, [".9e", ".9e", ".9e"], meta)


def cmd_plateau(opts):
    params = _physical(opts)
    config = _config(opts)
    lo, hi = opts.get("rho_min", 0.5), opts.get("rho_max", 8.0)
    step = opts.get("rho_step", 0.25)
    if step > 0:
        # floor with slack for binary steps such as 0.1; never overshoot rho_max
        grid = lo + step * np.arange(int(np.floor((hi - lo) / step + 1e-9)) + 1)
    else:
        grid = np.array([lo])
    n_track = opts.get("track", 4)
    report = plateau_scan(params, config, grid, n_track, opts.get("tol", 1e-8),
                          opts.get("workers"))
    rows = [[rho] + list(tr) for rho, tr in zip(report.rho_grid, report.traces)]
    meta = _params_meta(params, config)
    meta["tol"] = opts.get("tol", 1e-8)
    meta["plateau"] = list(report.plateau) if report.plateau else "none"
    meta["chosen_rho"] = report.chosen_rho if report.chosen_rho is not None else "none"
    out = Output(["rho"] + [f"E_{i}" for i in range(n_track)], rows,
                 [".6f"] + [E_FMT] * n_track, meta)
    out.exit_code = EXIT_EMPTY_PLATEAU if report.empty else EXIT_OK
    return out


def cmd_selfcheck(opts):
    results = run_selfcheck()
    rows = [[r.name, "PASS" if r.passed else "FAIL", r.detail] for r in results]
    out = Output(["check", "status", "detail"], rows, ["s", "s", "s"],
                 {"passed": sum(r.passed for r in results), "total": len(results)})
    out.exit_code = EXIT_OK if all(r.passed for r in results) else EXIT_CHECK_FAILED
    return out


COMMANDS = {
    "gamma": (cmd_gamma, "gamma values of the dipole coupling matrix"),
    "spectrum": (cmd_spectrum, "bound energies for one channel"),
    "table1": (cmd_table1, "quadrupole energy shifts E_k - E_k^C for l = 0..3"),
    "table2": (cmd_table2, "valence-electron energies per dipole channel"),
    "wavefunction": (cmd_wavefunction, "TRA and HMD wavefunctions of one state"),
    "plateau": (cmd_plateau, "rho scan and plateau of stability"),
    "selfcheck": (cmd_selfcheck, "run quick invariant checks"),
}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    g = common.add_argument_group("physical and numerical parameters")
    g.add_argument("--Q", type=float, help="net positive charge")
    g.add_argument("--d", type=float, help="electric dipole moment")
    g.add_argument("--q", type=float, help="quadrupole moment (with --eta)")
    g.add_argument("--eta", type=float, help="angular parameter in [-1/2, 1]")
    g.add_argument("--p", type=float, help="effective quadrupole p = eta*q")
    g.add_argument("--m", type=int, help="azimuthal quantum number")
    g.add_argument("--gamma", type=float, help="effective angular quantum number")
    g.add_argument("--l", type=int, help="orbital angular momentum (d = 0)")
    g.add_argument("--basis", type=int, help="Laguerre basis size")
    g.add_argument("--rho", type=float, help="basis scale parameter")
    g.add_argument("--quad-points", dest="quad_points", type=int,
                   help="quadrature order for <n|y^-2|m>")
    g.add_argument("--kmax", type=int, help="number of states to report")
    g.add_argument("--config", help="key = value config file")
    g.add_argument("--out", help="write output here instead of stdout")
    g.add_argument("--json", action="store_true", help="emit JSON instead of CSV")

    parser = argparse.ArgumentParser(
        prog="multipole-tra",
        description="Bound states of an electron in a Coulomb + dipole + quadrupole field.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)
    parsers = {name: sub.add_parser(name, parents=[common], help=text)
               for name, (_, text) in COMMANDS.items()}
    parsers["gamma"].add_argument("--count", type=int, help="number of gamma values")
    parsers["gamma"].add_argument("--size", type=int, help="dipole matrix truncation")
    parsers["table2"].add_argument("--count", type=int, help="gamma channels per m")
    parsers["table2"].add_argument("--size", type=int, help="dipole matrix truncation")
    for name in ("spectrum", "wavefunction", "plateau"):
        parsers[name].add_argument("--channel", type=int,
                                   help="gamma channel index when derived from --d")
        parsers[name].add_argument("--size", type=int, help="dipole matrix truncation")
    w = parsers["wavefunction"]
    w.add_argument("--k", type=int, help="state index")
    w.add_argument("--r-min", dest="r_min", type=float)
    w.add_argument("--r-max", dest="r_max", type=float)
    w.add_argument("--points", type=int)
    pl = parsers["plateau"]
    pl.add_argument("--rho-min", dest="rho_min", type=float)
    pl.add_argument("--rho-max", dest="rho_max", type=float)
    pl.add_argument("--rho-step", dest="rho_step", type=float)
    pl.add_argument("--track", type=int, help="number of lowest energies tracked")
    pl.add_argument("--tol", type=float, help="plateau tolerance")
    pl.add_argument("--workers", type=int, help="threads for the rho scan")
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    func = COMMANDS[args.command][0]
    try:
        opts = resolve_options(args)
        out = func(opts)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ConvergenceError as exc:
        print(f"convergence error: {exc}", file=sys.stderr)
        return EXIT_CONVERGENCE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    text = out.to_json() if args.json else out.to_csv()
    target = opts.get("out")
    if target:
        with open(target, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return out.exit_code


if __name__ == "__main__":
    sys.exit(main())
