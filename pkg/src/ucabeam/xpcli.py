"""Command-line experiment runner for the wideband-UCA study.

Scenarios are declarative JSON files (shipped built-ins or user paths).  Each
run sweeps one variable and emits one row per sweep point per method with
columns ``x,method,mean,std``; deterministic methods report std = 0, trial
methods report mean and standard deviation over seeded channel realizations.
Floats are written with round-trip-exact ``repr`` formatting, so the same
config and base seed always produce a byte-identical CSV.

Subcommands: ``run <scenario|path> [--out PATH] [--seed U64] [--points N]
[--format csv|json]``, ``validate <path>``, ``list``.  Exit codes: 0 success,
2 configuration or I/O error, 3 numeric failure.
"""

from __future__ import annotations

import argparse
import dataclasses
import importlib.resources
import json
import math
import sys
from dataclasses import dataclass, field

import numpy as np

from . import analysis, specfun
from .arraymodel import (
    SPEED_OF_LIGHT,
    FrequencyGrid,
    UcaGeometry,
    UlaGeometry,
    channel_matrix,
    generate_channel,
    half_wavelength_uca,
    steering_ula,
    steering_uca,
)
from .precoding import DppConfig, build_classic_hybrid, build_dpp

__all__ = [
    "ScenarioError",
    "SystemConfig",
    "PrecodingConfig",
    "SweepConfig",
    "TrialsConfig",
    "Scenario",
    "ResultRow",
    "ResultTable",
    "builtin_names",
    "load_builtin",
    "load_scenario",
    "validate_scenario",
    "run",
    "main",
]

SWEEP_VARIABLES = ("frequency", "angle", "argument", "snr_db", "k_ttd", "bandwidth")

# Method labels accepted per sweep variable.  Angle methods may carry an
# evaluation frequency suffix, e.g. "uca_exact@2.85e10" (Hz).
_METHODS_BY_VARIABLE = {
    "frequency": ("ps_exact", "ps_closed_form", "dpp_exact", "dpp_subarray_sum",
                  "dpp_closed_form"),
    "angle": ("ula_exact", "uca_exact", "uca_closed_form"),
    "argument": ("hyp_1f2", "hyp_2f3"),
    "snr_db": ("classic", "dpp", "optimal"),
    "k_ttd": ("classic", "dpp", "optimal"),
    "bandwidth": ("avg_ps_numeric", "avg_ps_upper", "avg_ps_lower", "avg_ttd",
                  "classic", "dpp", "optimal"),
}

_TRIAL_METHODS = ("classic", "dpp", "optimal")


class ScenarioError(ValueError):
    """Invalid scenario configuration; carries every diagnostic found."""

    def __init__(self, diagnostics):
        self.diagnostics = list(diagnostics)
        super().__init__("; ".join(self.diagnostics))


@dataclass(frozen=True)
class SystemConfig:
    n_elements_tx: int = 256
    n_elements_rx: int = 4
    fc_hz: float = 30e9
    bandwidth_hz: float = 3e9
    n_subcarriers: int = 129
    radius_m: float | None = None  # None: half-wavelength arc spacing
    target_angle_rad: float = math.pi / 6


@dataclass(frozen=True)
class PrecodingConfig:
    n_rf: int = 1
    k_ttd: int = 8
    n_streams: int = 1
    total_power: float = 1.0


@dataclass(frozen=True)
class SweepConfig:
    variable: str
    start: float = 0.0
    stop: float = 0.0
    points: int = 2
    values: tuple | None = None


@dataclass(frozen=True)
class TrialsConfig:
    n_seeds: int = 1
    base_seed: int = 2024
    n_paths: int = 1
    snr_db: float = 10.0
    max_delay_s: float = 20e-9


@dataclass(frozen=True)
class Scenario:
    name: str
    description: str
    system: SystemConfig
    precoding: PrecodingConfig
    sweep: SweepConfig
    trials: TrialsConfig
    methods: tuple
    output: str


# ---------------------------------------------------------------------------
# Loading and validation
# ---------------------------------------------------------------------------


def _build_section(cls, data, section, diags):
    if not isinstance(data, dict):
        diags.append(f"{section}: expected an object, got {type(data).__name__}")
        return None
    known = {f.name for f in dataclasses.fields(cls)}
    clean = {}
    for key, value in data.items():
        if key not in known:
            diags.append(f"{section}.{key}: unknown field")
            continue
        clean[key] = tuple(value) if isinstance(value, list) else value
    try:
        return cls(**clean)
    except TypeError as exc:
        diags.append(f"{section}: {exc}")
        return None


def scenario_from_dict(data: dict) -> Scenario:
    """Build a Scenario from parsed JSON, collecting every structural
    problem into a single ScenarioError."""
    diags = []
    if not isinstance(data, dict):
        raise ScenarioError([f"scenario: expected a JSON object, got {type(data).__name__}"])
    known = {"name", "description", "system", "precoding", "sweep", "trials",
             "methods", "output"}
    for key in data:
        if key not in known:
            diags.append(f"{key}: unknown top-level field")
    name = data.get("name", "")
    description = data.get("description", "")
    system = _build_section(SystemConfig, data.get("system", {}), "system", diags)
    precoding = _build_section(PrecodingConfig, data.get("precoding", {}), "precoding", diags)
    sweep_data = data.get("sweep")
    if sweep_data is None:
        diags.append("sweep: missing section")
        sweep = None
    else:
        sweep = _build_section(SweepConfig, sweep_data, "sweep", diags)
    trials = _build_section(TrialsConfig, data.get("trials", {}), "trials", diags)
    methods = data.get("methods", ())
    if not isinstance(methods, (list, tuple)):
        diags.append("methods: expected a list of method names")
        methods = ()
    output = data.get("output", f"{name or 'scenario'}.csv")
    if None in (system, precoding, sweep, trials):
        # a section failed to build at all; invariants cannot be checked
        raise ScenarioError(diags)
    scenario = Scenario(
        name=str(name), description=str(description), system=system,
        precoding=precoding, sweep=sweep, trials=trials,
        methods=tuple(str(m) for m in methods), output=str(output),
    )
    diags.extend(validate_scenario(scenario))
    if diags:
        raise ScenarioError(diags)
    return scenario


def _split_method(label: str):
    base, _, suffix = label.partition("@")
    freq = None
    if suffix:
        try:
            freq = float(suffix)
        except ValueError:
            freq = math.nan
    return base, freq


def validate_scenario(scenario: Scenario) -> list:
    """All invariant violations as human-readable diagnostics (empty = valid)."""
    diags = []
    sy, pc, sw, tr = scenario.system, scenario.precoding, scenario.sweep, scenario.trials

    if not scenario.name:
        diags.append("name: must be non-empty")
    if not scenario.output:
        diags.append("output: must be non-empty")

    def check_int(section, fname, value, minimum):
        if not (isinstance(value, int) and not isinstance(value, bool) and value >= minimum):
            diags.append(f"{section}.{fname}: must be an integer >= {minimum}, got {value!r}")
            return False
        return True

    def check_pos(section, fname, value):
        if not (isinstance(value, (int, float)) and math.isfinite(value) and value > 0):
            diags.append(f"{section}.{fname}: must be a positive number, got {value!r}")
            return False
        return True

    ok_n = check_int("system", "n_elements_tx", sy.n_elements_tx, 1)
    check_int("system", "n_elements_rx", sy.n_elements_rx, 1)
    check_pos("system", "fc_hz", sy.fc_hz)
    check_pos("system", "bandwidth_hz", sy.bandwidth_hz)
    check_int("system", "n_subcarriers", sy.n_subcarriers, 1)
    if sy.radius_m is not None:
        check_pos("system", "radius_m", sy.radius_m)
    if not (isinstance(sy.target_angle_rad, (int, float)) and math.isfinite(sy.target_angle_rad)):
        diags.append(f"system.target_angle_rad: must be finite, got {sy.target_angle_rad!r}")

    ok_rf = check_int("precoding", "n_rf", pc.n_rf, 1)
    ok_k = check_int("precoding", "k_ttd", pc.k_ttd, 1)
    if check_int("precoding", "n_streams", pc.n_streams, 1) and ok_rf:
        if pc.n_streams > pc.n_rf:
            diags.append(
                f"precoding.n_streams: must not exceed n_rf, got "
                f"{pc.n_streams} > {pc.n_rf}"
            )
    check_pos("precoding", "total_power", pc.total_power)
    if ok_n and ok_k and sy.n_elements_tx % pc.k_ttd != 0:
        diags.append(
            f"precoding.k_ttd: {pc.k_ttd} does not divide n_elements_tx="
            f"{sy.n_elements_tx}; each delay unit must drive an integer "
            f"number of antennas (P = N/K)"
        )

    if sw is None:
        diags.append("sweep: missing section")
        return diags
    if sw.variable not in SWEEP_VARIABLES:
        diags.append(
            f"sweep.variable: {sw.variable!r} is not one of {SWEEP_VARIABLES}"
        )
        return diags

    if sw.values is not None:
        vals = sw.values
        if len(vals) < 2:
            diags.append("sweep.values: need at least 2 sweep points")
        if any(not (isinstance(v, (int, float)) and math.isfinite(v)) for v in vals):
            diags.append("sweep.values: entries must be finite numbers")
        elif any(b <= a for a, b in zip(vals, vals[1:])):
            diags.append("sweep.values: must be strictly increasing")
        elif sw.variable == "bandwidth" and vals and vals[0] <= 0:
            diags.append("sweep.values: bandwidth values must be positive")
        if sw.variable == "k_ttd" and ok_n:
            for v in vals:
                if not (isinstance(v, int) and v >= 1 and sy.n_elements_tx % v == 0):
                    diags.append(
                        f"sweep.values: k_ttd value {v!r} does not divide "
                        f"n_elements_tx={sy.n_elements_tx}; each delay unit "
                        f"must drive an integer number of antennas (P = N/K)"
                    )
    else:
        if not check_int("sweep", "points", sw.points, 2):
            pass
        if not (math.isfinite(sw.start) and math.isfinite(sw.stop) and sw.start < sw.stop):
            diags.append(
                f"sweep: range [{sw.start!r}, {sw.stop!r}] must be finite and "
                f"non-degenerate (start < stop)"
            )
        if sw.variable == "k_ttd":
            diags.append("sweep: k_ttd sweeps must use an explicit 'values' list "
                         "of divisors of n_elements_tx")
        if sw.variable == "bandwidth" and not (sw.start > 0):
            diags.append(f"sweep: bandwidth range must start above 0, got {sw.start!r}")

    check_int("trials", "n_seeds", tr.n_seeds, 1)
    if not (isinstance(tr.base_seed, int) and not isinstance(tr.base_seed, bool) and tr.base_seed >= 0):
        diags.append(f"trials.base_seed: must be a non-negative integer, got {tr.base_seed!r}")
    check_int("trials", "n_paths", tr.n_paths, 1)
    if not (isinstance(tr.snr_db, (int, float)) and math.isfinite(tr.snr_db)):
        diags.append(f"trials.snr_db: must be finite, got {tr.snr_db!r}")
    if not (isinstance(tr.max_delay_s, (int, float)) and math.isfinite(tr.max_delay_s)
            and tr.max_delay_s >= 0):
        diags.append(f"trials.max_delay_s: must be >= 0, got {tr.max_delay_s!r}")

    if not scenario.methods:
        diags.append("methods: must list at least one method")
    allowed = _METHODS_BY_VARIABLE.get(sw.variable, ())
    for label in scenario.methods:
        base, freq = _split_method(label)
        if base not in allowed:
            diags.append(
                f"methods: {label!r} is not valid for a {sw.variable!r} sweep; "
                f"allowed: {', '.join(allowed)}"
            )
            continue
        if freq is not None and sw.variable != "angle":
            diags.append(f"methods: {label!r}: '@frequency' suffixes apply only to angle sweeps")
        elif freq is not None and not (math.isfinite(freq) and freq > 0):
            diags.append(f"methods: {label!r}: suffix must be a positive frequency in Hz")
        if base in _TRIAL_METHODS and ok_rf and tr.n_paths < pc.n_rf:
            diags.append(
                f"trials.n_paths: {tr.n_paths} is fewer than precoding.n_rf="
                f"{pc.n_rf}; every RF chain needs a path to serve"
            )
            break
    return diags


def builtin_names() -> tuple:
    """Built-in scenario names in presentation order."""
    return tuple(name for name, _ in _BUILTINS)


def load_builtin(name: str) -> Scenario:
    for fname, _ in _BUILTINS:
        if fname == name:
            text = (
                importlib.resources.files("ucabeam")
                .joinpath(f"scenarios/{name}.json")
                .read_text(encoding="utf-8")
            )
            return scenario_from_dict(json.loads(text))
    raise ScenarioError(
        [f"unknown scenario {name!r}; built-ins: {', '.join(builtin_names())}"]
    )


def load_scenario(source: str) -> Scenario:
    """Resolve a built-in name or a JSON config path."""
    if source in builtin_names():
        return load_builtin(source)
    try:
        with open(source, "r", encoding="utf-8") as fh:
            text = fh.read()
    except FileNotFoundError:
        raise ScenarioError(
            [f"{source!r} is neither a built-in scenario nor a readable file; "
             f"built-ins: {', '.join(builtin_names())}"]
        ) from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ScenarioError([f"{source}: invalid JSON: {exc}"]) from None
    return scenario_from_dict(data)


# ---------------------------------------------------------------------------
# Result table
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ResultRow:
    x: float
    method: str
    mean: float
    std: float


@dataclass(frozen=True)
class ResultTable:
    rows: tuple

    def sorted(self) -> "ResultTable":
        return ResultTable(rows=tuple(sorted(self.rows, key=lambda r: (r.x, r.method))))

    def to_csv(self) -> str:
        lines = ["x,method,mean,std"]
        for r in self.rows:
            lines.append(f"{float(r.x)!r},{r.method},{float(r.mean)!r},{float(r.std)!r}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_csv(cls, text: str) -> "ResultTable":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines or lines[0] != "x,method,mean,std":
            raise ValueError("missing result header 'x,method,mean,std'")
        rows = []
        for ln in lines[1:]:
            parts = ln.split(",")
            if len(parts) != 4:
                raise ValueError(f"malformed result row: {ln!r}")
            rows.append(ResultRow(x=float(parts[0]), method=parts[1],
                                  mean=float(parts[2]), std=float(parts[3])))
        return cls(rows=tuple(rows))

    def to_json(self) -> str:
        payload = {
            "columns": ["x", "method", "mean", "std"],
            "rows": [[r.x, r.method, r.mean, r.std] for r in self.rows],
        }
        return json.dumps(payload, indent=2) + "\n"


# ---------------------------------------------------------------------------
# Running
# ---------------------------------------------------------------------------


def _tx_uca(sy: SystemConfig) -> UcaGeometry:
    if sy.radius_m is None:
        return half_wavelength_uca(sy.n_elements_tx, sy.fc_hz)
    return UcaGeometry(sy.n_elements_tx, sy.radius_m)


def _sweep_points(scenario: Scenario, points_override: int | None):
    sw = scenario.sweep
    if sw.values is not None:
        if points_override is not None:
            raise ScenarioError(
                ["--points cannot override a sweep with an explicit 'values' list"]
            )
        return [float(v) for v in sw.values]
    points = points_override if points_override is not None else sw.points
    if points < 2:
        raise ScenarioError([f"sweep needs at least 2 points, got {points}"])
    if sw.variable == "frequency":
        # Evaluate at the subcarrier positions of a grid with M = points.
        grid = FrequencyGrid(scenario.system.fc_hz, scenario.system.bandwidth_hz, points)
        return [float(f) for f in grid.freqs_hz]
    return [float(x) for x in np.linspace(sw.start, sw.stop, points)]


def run(scenario: Scenario, points_override: int | None = None) -> ResultTable:
    """Execute a scenario: one row per sweep point per method, sorted by
    (x, method).  Deterministic given the scenario and base seed."""
    problems = validate_scenario(scenario)
    if problems:
        raise ScenarioError(problems)
    xs = _sweep_points(scenario, points_override)
    variable = scenario.sweep.variable
    rows = []
    caches = {"channels": {}, "matrices": {}}
    for label in scenario.methods:
        base, freq = _split_method(label)
        if base in _TRIAL_METHODS:
            rows.extend(_run_trial_method(scenario, label, base, xs, variable, caches))
        else:
            rows.extend(_run_deterministic_method(scenario, label, base, freq, xs, variable))
    return ResultTable(rows=tuple(rows)).sorted()


def _run_deterministic_method(scenario, label, base, freq, xs, variable):
    sy, pc = scenario.system, scenario.precoding
    phi0 = sy.target_angle_rad
    out = []
    if variable == "frequency":
        geom = _tx_uca(sy)
        for f in xs:
            if base == "ps_exact":
                w = steering_uca(geom, sy.fc_hz, phi0)
                val = analysis.exact_gain(w, geom, f, phi0)
            elif base == "ps_closed_form":
                val = analysis.ps_gain_closed_form(f, sy.fc_hz, geom.radius_m)
            elif base == "dpp_exact":
                val = analysis.dpp_exact_gain(geom, sy.fc_hz, f, phi0, pc.k_ttd)
            elif base == "dpp_subarray_sum":
                val = analysis.dpp_gain_subarray_sum(
                    f, sy.fc_hz, geom.radius_m, geom.n_elements, pc.k_ttd)
            else:
                val = analysis.dpp_gain_closed_form(f, sy.fc_hz, geom.radius_m, pc.k_ttd)
            out.append(ResultRow(f, label, float(val), 0.0))
    elif variable == "angle":
        f_eval = freq if freq is not None else sy.fc_hz
        if base == "ula_exact":
            lam_c = SPEED_OF_LIGHT / sy.fc_hz
            ula = UlaGeometry(sy.n_elements_tx, lam_c / 2.0)
            w = steering_ula(ula, sy.fc_hz, phi0)
            for phi in xs:
                a = steering_ula(ula, f_eval, phi)
                out.append(ResultRow(phi, label, float(abs(np.vdot(a, w))), 0.0))
        else:
            geom = _tx_uca(sy)
            w = steering_uca(geom, sy.fc_hz, phi0)
            for phi in xs:
                if base == "uca_exact":
                    val = analysis.exact_gain(w, geom, f_eval, phi)
                else:
                    val = analysis.ps_gain_angular_closed_form(
                        f_eval, sy.fc_hz, geom.radius_m, phi, phi0)
                out.append(ResultRow(phi, label, float(val), 0.0))
    elif variable == "argument":
        for x in xs:
            if base == "hyp_1f2":
                val = specfun.hypergeom_1f2(0.5, 1.0, 1.5, -0.25 * x * x)
            else:
                val = specfun.hypergeom_2f3(0.5, 0.5, 1.0, 1.5, 1.5, -0.25 * x * x)
            out.append(ResultRow(x, label, float(val), 0.0))
    else:  # bandwidth sweep over averaged gains
        geom = _tx_uca(sy)
        for b in xs:
            if base == "avg_ps_numeric":
                val = analysis.avg_gain_ps_numeric(geom.radius_m, b)
            elif base == "avg_ps_upper":
                val = analysis.avg_gain_ps_upper(geom.radius_m, b)
            elif base == "avg_ps_lower":
                val = analysis.avg_gain_ps_lower(geom.radius_m, b)
            else:
                val = analysis.avg_gain_ttd(geom.radius_m, b, pc.k_ttd)
            out.append(ResultRow(b, label, float(val), 0.0))
    return out


def _channel_and_matrices(scenario, bandwidth, seed, caches):
    sy, tr = scenario.system, scenario.trials
    key = (bandwidth, seed)
    if key not in caches["channels"]:
        grid = FrequencyGrid(sy.fc_hz, bandwidth, sy.n_subcarriers)
        tx = _tx_uca(sy)
        lam_c = SPEED_OF_LIGHT / sy.fc_hz
        rx = UlaGeometry(sy.n_elements_rx, lam_c / 2.0)
        ch = generate_channel(tx, rx, grid, tr.n_paths, seed, tr.max_delay_s)
        caches["channels"][key] = ch
        caches["matrices"][key] = [channel_matrix(ch, m) for m in range(sy.n_subcarriers)]
    return caches["channels"][key], caches["matrices"][key]


def _run_trial_method(scenario, label, base, xs, variable, caches):
    sy, pc, tr = scenario.system, scenario.precoding, scenario.trials
    out = []
    for x in xs:
        k_ttd = int(x) if variable == "k_ttd" else pc.k_ttd
        bandwidth = x if variable == "bandwidth" else sy.bandwidth_hz
        snr_db = x if variable == "snr_db" else tr.snr_db
        rho = 10.0 ** (snr_db / 10.0)
        sigma2 = 1.0
        cfg = DppConfig(pc.n_rf, k_ttd, pc.n_streams, pc.total_power)
        per_seed = []
        for i in range(tr.n_seeds):
            ch, hs = _channel_and_matrices(scenario, bandwidth, tr.base_seed + i, caches)
            if base == "optimal":
                ses = [
                    analysis.spectrum_efficiency_optimal(
                        h, rho, sigma2, pc.n_streams, pc.total_power)
                    for h in hs
                ]
            else:
                if base == "classic":
                    pset = build_classic_hybrid(ch, cfg, rho, sigma2)
                else:
                    pset, _ = build_dpp(ch, cfg, rho, sigma2)
                ses = [
                    analysis.spectrum_efficiency(hs[m], pset, m, rho, sigma2)
                    for m in range(sy.n_subcarriers)
                ]
            per_seed.append(float(np.mean(ses)))
        out.append(ResultRow(float(x), label, float(np.mean(per_seed)),
                             float(np.std(per_seed))))
    return out


# ---------------------------------------------------------------------------
# Built-in scenarios (names + one-line descriptions, presentation order)
# ---------------------------------------------------------------------------

_BUILTINS = (
    ("fig2", "Phase-shifter gain across a 4 GHz band: exact array sum vs Bessel closed form (fig2 overlay)"),
    ("fig3a", "Beam-split reference pattern of a 256-element linear array at three frequencies (fig3a)"),
    ("fig3b", "Beam-defocus pattern of the circular array: exact vs angular closed form (fig3b)"),
    ("fig5", "Arc-gain kernel curves: the 1F2 gain curve and its 2F3 band average (fig5)"),
    ("fig6", "Band-edge gain with 8 delay units: exact, arc sum, and continuum closed form vs phase-shifter baseline (fig6)"),
    ("fig7", "Band-averaged gain vs bandwidth: numeric average, bounds, and delay-phase average (fig7)"),
    ("fig8", "Spectrum efficiency vs SNR for classic hybrid, delay-phase, and fully digital precoding (fig8)"),
    ("fig9", "Spectrum efficiency vs delay units per RF chain at 10 dB SNR (fig9)"),
    ("fig10", "Spectrum efficiency vs bandwidth with 16 delay units per chain (fig10)"),
)


# ---------------------------------------------------------------------------
# CLI
# ---------------------------------------------------------------------------


def _cmd_run(args) -> int:
    scenario = load_scenario(args.scenario)
    if args.seed is not None:
        scenario = dataclasses.replace(
            scenario, trials=dataclasses.replace(scenario.trials, base_seed=args.seed)
        )
    table = run(scenario, points_override=args.points)
    text = table.to_csv() if args.format == "csv" else table.to_json()
    out_path = args.out if args.out is not None else scenario.output
    if out_path == "-":
        sys.stdout.write(text)
    else:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(f"wrote {out_path} ({len(table.rows)} rows)")
    return 0


def _cmd_validate(args) -> int:
    try:
        load_scenario(args.path)
    except ScenarioError as exc:
        for diag in exc.diagnostics:
            print(diag, file=sys.stderr)
        return 2
    print(f"ok: {args.path}")
    return 0


def _cmd_list(args) -> int:
    width = max(len(name) for name, _ in _BUILTINS)
    for name, description in _BUILTINS:
        print(f"{name:<{width}}  {description}")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ucabeam",
        description="Experiment runner for wideband uniform-circular-array "
                    "beamforming studies.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    p_run = sub.add_parser("run", help="run a built-in scenario or a JSON config")
    p_run.add_argument("scenario", help="built-in name (see 'list') or config path")
    p_run.add_argument("--out", help="output path ('-' for stdout); defaults to "
                                     "the scenario's own output field")
    p_run.add_argument("--seed", type=int, help="override trials.base_seed")
    p_run.add_argument("--points", type=int, help="override sweep.points")
    p_run.add_argument("--format", choices=("csv", "json"), default="csv")
    p_val = sub.add_parser("validate", help="check a config file, print diagnostics")
    p_val.add_argument("path")
    sub.add_parser("list", help="list built-in scenarios")
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "run":
            return _cmd_run(args)
        if args.command == "validate":
            return _cmd_validate(args)
        return _cmd_list(args)
    except ScenarioError as exc:
        for diag in exc.diagnostics:
            print(f"config error: {diag}", file=sys.stderr)
        return 2
    except OSError as exc:
        target = getattr(exc, "filename", None)
        where = f" ({target})" if target else ""
        print(f"i/o error{where}: {exc}", file=sys.stderr)
        return 2
    except (ValueError, LookupError) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except ArithmeticError as exc:
        print(f"numeric failure: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
