"""Command-line front end: spectra, crossings, dynamics and plots as files.

Subcommands: spectrum, crossings, dynamics, epsilon-c, scan, plot.  Inputs
come from `key = value` config files (later duplicates win), overridden by
command-line flags.  Outputs are CSV tables (comma separated, LF line
endings, header first, floats at 12 significant digits) and self-contained
SVG line plots.  Exit codes: 0 success, 1 bad input, 2 numerical-quality
failure (a truncation-convergence check did not pass).
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, fields, replace

import numpy as np

from .hilbert import BasisSpec
from .models import ModelConfig, ModelId, epsilon_condition
from .dynamics import population_trace
from .spectra import (
    ConvergenceError,
    convergence_check,
    find_crossings,
    min_gap,
    sweep,
)

__all__ = ["RunConfig", "load_config", "write_csv", "read_csv", "render_svg", "run", "main"]

_MODEL_FIELDS = (
    "delta", "omega", "g", "epsilon", "stark_u", "lam",
    "omega1", "omega2", "g1", "g2",
    "delta1", "delta2", "epsilon1", "epsilon2",
)


@dataclass
class RunConfig:
    """Merged file + flag settings for one command invocation."""

    model: str | None = None
    delta: float | None = None
    omega: float | None = None
    g: float | None = None
    epsilon: float | None = None
    stark_u: float | None = None
    lam: float | None = None
    omega1: float | None = None
    omega2: float | None = None
    g1: float | None = None
    g2: float | None = None
    delta1: float | None = None
    delta2: float | None = None
    epsilon1: float | None = None
    epsilon2: float | None = None
    n_max: int | None = None
    n1_max: int | None = None
    n2_max: int | None = None
    g_min: float | None = None
    g_max: float | None = None
    g_steps: int | None = None
    levels: int | None = None
    pair: int | None = None
    tol: float | None = None
    t_max_T: float | None = None
    steps: int | None = None
    n: int | None = None
    eps_min: float | None = None
    eps_max: float | None = None
    eps_steps: int | None = None
    out: str | None = None
    in_path: str | None = None
    x_col: str | None = None
    y_cols: str | None = None


_FIELD_TYPES = {f.name: f.type for f in fields(RunConfig)}
# config keys and flag names that differ from the field name
_KEY_ALIASES = {"lambda": "lam", "in": "in_path"}


def _field_for_key(key: str) -> str:
    name = _KEY_ALIASES.get(key, key)
    if name not in _FIELD_TYPES:
        raise ValueError(f"unknown key {key!r}")
    return name


def _parse_value(name: str, value: str):
    kind = _FIELD_TYPES[name]
    if kind.startswith("int"):
        try:
            return int(value)
        except ValueError:
            raise ValueError(f"{name} expects an integer, got {value!r}") from None
    if kind.startswith("float"):
        try:
            return float(value)
        except ValueError:
            raise ValueError(f"{name} expects a number, got {value!r}") from None
    return value


def _validate(rc: RunConfig) -> RunConfig:
    omega = 1.0 if rc.omega is None else rc.omega
    if omega <= 0.0:
        raise ValueError(f"omega must be positive, got {omega}")
    if rc.stark_u is not None and abs(rc.stark_u) >= omega:
        raise ValueError(
            f"stark_u must satisfy |U| < omega, got U = {rc.stark_u} with omega = {omega}"
        )
    if rc.lam is not None and rc.lam == 0.0:
        raise ValueError("lambda (= g2/g1) must be nonzero")
    for name in ("g_steps", "steps", "eps_steps", "levels", "n", "n_max", "n1_max", "n2_max"):
        value = getattr(rc, name)
        if value is not None and value < 1:
            raise ValueError(f"{name} must be positive, got {value}")
    return rc


def load_config(path: str) -> RunConfig:
    """Parse a `key = value` config file.

    `#` starts a comment, blank lines are skipped, a repeated key overrides
    the earlier value, unknown keys and unparseable values are rejected
    with the offending line number.
    """
    data: dict[str, object] = {}
    with open(path, encoding="utf-8") as handle:
        for lineno, raw in enumerate(handle, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected 'key = value', got {line!r}")
            key, _, value = line.partition("=")
            key = key.strip().replace("-", "_")
            try:
                name = _field_for_key(key)
                data[name] = _parse_value(name, value.strip())
            except ValueError as err:
                raise ValueError(f"{path}:{lineno}: {err}") from None
    return _validate(RunConfig(**data))


def write_csv(path: str, header: list[str], rows) -> None:
    """Comma-separated table, LF endings, header first, floats at %.12g."""
    def cell(value) -> str:
        if isinstance(value, str):
            return value
        if isinstance(value, (int, np.integer)):
            return str(int(value))
        return "%.12g" % float(value)

    lines = [",".join(header)]
    lines.extend(",".join(cell(v) for v in row) for row in rows)
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        handle.write("\n".join(lines) + "\n")


def read_csv(path: str) -> tuple[list[str], np.ndarray]:
    """Header names and a float matrix of the data rows."""
    with open(path, encoding="utf-8") as handle:
        lines = [line.rstrip("\n") for line in handle if line.strip()]
    if not lines:
        raise ValueError(f"{path}: empty CSV")
    header = lines[0].split(",")
    try:
        data = np.array([[float(v) for v in line.split(",")] for line in lines[1:]])
    except ValueError:
        raise ValueError(f"{path}: non-numeric data row") from None
    if data.size and data.shape[1] != len(header):
        raise ValueError(f"{path}: row width does not match header")
    return header, data


_PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#17becf", "#7f7f7f")


def render_svg(path: str, x: np.ndarray, series: list[tuple[str, np.ndarray]], x_label: str = "") -> None:
    """Minimal deterministic SVG line plot: polylines, ticks, legend.

    No external assets, no randomness, fixed float formatting: the same
    input always yields the same bytes.
    """
    if not series:
        raise ValueError("nothing to plot")
    x = np.asarray(x, dtype=float)
    width, height = 880.0, 560.0
    left, right, top, bottom = 70.0, width - 190.0, 20.0, height - 55.0

    def span(lo: float, hi: float) -> tuple[float, float]:
        if hi > lo:
            return lo, hi
        return lo - 1.0, hi + 1.0

    x_lo, x_hi = span(float(x.min()), float(x.max()))
    y_all = np.concatenate([np.asarray(y, dtype=float) for _, y in series])
    y_lo, y_hi = span(float(y_all.min()), float(y_all.max()))

    def sx(value: float) -> float:
        return left + (value - x_lo) / (x_hi - x_lo) * (right - left)

    def sy(value: float) -> float:
        return bottom - (value - y_lo) / (y_hi - y_lo) * (bottom - top)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:g}" height="{height:g}" '
        f'viewBox="0 0 {width:g} {height:g}">',
        f'<rect x="0" y="0" width="{width:g}" height="{height:g}" fill="white"/>',
        f'<rect x="{left:.2f}" y="{top:.2f}" width="{right - left:.2f}" '
        f'height="{bottom - top:.2f}" fill="none" stroke="black" stroke-width="1"/>',
    ]
    for tick in np.linspace(x_lo, x_hi, 6):
        px = sx(tick)
        parts.append(f'<line x1="{px:.2f}" y1="{bottom:.2f}" x2="{px:.2f}" y2="{bottom + 5:.2f}" stroke="black"/>')
        parts.append(
            f'<text x="{px:.2f}" y="{bottom + 20:.2f}" text-anchor="middle" '
            f'font-family="sans-serif" font-size="12">{tick:.6g}</text>'
        )
    for tick in np.linspace(y_lo, y_hi, 6):
        py = sy(tick)
        parts.append(f'<line x1="{left - 5:.2f}" y1="{py:.2f}" x2="{left:.2f}" y2="{py:.2f}" stroke="black"/>')
        parts.append(
            f'<text x="{left - 9:.2f}" y="{py + 4:.2f}" text-anchor="end" '
            f'font-family="sans-serif" font-size="12">{tick:.6g}</text>'
        )
    if x_label:
        parts.append(
            f'<text x="{(left + right) / 2:.2f}" y="{height - 12:.2f}" text-anchor="middle" '
            f'font-family="sans-serif" font-size="13">{x_label}</text>'
        )
    for idx, (name, y) in enumerate(series):
        y = np.asarray(y, dtype=float)
        if y.shape != x.shape:
            raise ValueError(f"series {name!r} length does not match x")
        color = _PALETTE[idx % len(_PALETTE)]
        points = " ".join(f"{sx(xv):.2f},{sy(yv):.2f}" for xv, yv in zip(x, y))
        parts.append(f'<polyline fill="none" stroke="{color}" stroke-width="1.5" points="{points}"/>')
        ly = top + 18.0 + 18.0 * idx
        parts.append(
            f'<line x1="{right + 12:.2f}" y1="{ly - 4:.2f}" x2="{right + 34:.2f}" y2="{ly - 4:.2f}" '
            f'stroke="{color}" stroke-width="2"/>'
        )
        parts.append(
            f'<text x="{right + 40:.2f}" y="{ly:.2f}" font-family="sans-serif" font-size="12">{name}</text>'
        )
    parts.append("</svg>")
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        handle.write("\n".join(parts) + "\n")


def _require(rc: RunConfig, *names: str) -> None:
    for name in names:
        if getattr(rc, name) is None:
            key = "in" if name == "in_path" else name
            raise ValueError(f"missing required key {key!r}")


def _model_id(rc: RunConfig) -> ModelId:
    _require(rc, "model")
    token = rc.model.strip().lower().replace("_", "-")
    try:
        return ModelId(token)
    except ValueError:
        names = ", ".join(m.value for m in ModelId)
        raise ValueError(f"unknown model {rc.model!r}; choose one of: {names}") from None


def _model_config(rc: RunConfig) -> ModelConfig:
    kwargs = {name: getattr(rc, name) for name in _MODEL_FIELDS if getattr(rc, name) is not None}
    return ModelConfig(**kwargs)


def _basis(rc: RunConfig, model: ModelId) -> BasisSpec:
    if model is ModelId.TWO_MODE:
        n1 = rc.n1_max if rc.n1_max is not None else (rc.n_max if rc.n_max is not None else 24)
        n2 = rc.n2_max if rc.n2_max is not None else 24
        return BasisSpec.two_mode(n1, n2)
    if model is ModelId.TWO_QUBIT:
        return BasisSpec(n_max=rc.n_max if rc.n_max is not None else 80, qubit_count=2)
    return BasisSpec(n_max=rc.n_max if rc.n_max is not None else 120)


def _value(setting, default):
    return default if setting is None else setting


def _bias_at(model: ModelId, cfg: ModelConfig, eps: float) -> ModelConfig:
    if model is ModelId.TWO_QUBIT:
        return replace(cfg, epsilon1=eps, epsilon2=eps)
    return replace(cfg, epsilon=eps)


def cmd_spectrum(rc: RunConfig) -> int:
    model = _model_id(rc)
    cfg = _model_config(rc)
    spec = _basis(rc, model)
    _require(rc, "out")
    g_min = _value(rc.g_min, 0.0)
    g_max = _value(rc.g_max, 1.2)
    points = _value(rc.g_steps, 240) + 1
    levels = _value(rc.levels, 6)
    table = sweep(model, cfg, g_min, g_max, points, levels, spec)
    header = ["g"] + [f"E{i}" for i in range(levels)]
    write_csv(rc.out, header, np.column_stack([table.g_grid, table.energies]))
    print(f"wrote {rc.out}: {points} rows, lowest {levels} rescaled levels")
    if model is not ModelId.TWO_MODE:
        check = convergence_check(
            model, cfg, g_max, levels, (spec.n_max, spec.n_max + 40), spec=spec
        )
        if not check.converged:
            raise ConvergenceError(
                f"levels not converged at n_max = {spec.n_max}: drift "
                f"{check.drifts[-1]:.3e} exceeds {check.tol:.3e} (output written anyway)"
            )
    return 0


def cmd_crossings(rc: RunConfig) -> int:
    model = _model_id(rc)
    cfg = _model_config(rc)
    spec = _basis(rc, model)
    g_min = _value(rc.g_min, 0.0)
    g_max = _value(rc.g_max, 1.2)
    points = _value(rc.g_steps, 240) + 1
    levels = _value(rc.levels, 6)
    pairs = None if rc.pair is None else [rc.pair]
    records = find_crossings(
        model, cfg, g_min, g_max, points, levels, spec,
        crossing_tol=rc.tol, pairs=pairs,
    )
    for rec in records:
        print(
            f"pair ({rec.pair[0]},{rec.pair[1]})  g* = {rec.g_star:.10g}  "
            f"E* = {rec.e_star:.10g}  gap = {rec.min_gap:.3e}  {rec.verdict}"
        )
    if not records:
        print("no gap minima found")
    if rc.out is not None:
        header = ["pair_lo", "pair_hi", "g_star", "e_star", "min_gap", "verdict"]
        rows = [
            [rec.pair[0], rec.pair[1], rec.g_star, rec.e_star, rec.min_gap, rec.verdict]
            for rec in records
        ]
        write_csv(rc.out, header, rows)
        print(f"wrote {rc.out}: {len(rows)} records")
    return 0


def cmd_dynamics(rc: RunConfig) -> int:
    model = _model_id(rc)
    cfg = _model_config(rc)
    _require(rc, "out")
    trace = population_trace(
        model,
        cfg,
        n_max=_value(rc.n_max, 120),
        t_max_in_T=_value(rc.t_max_T, 2.0),
        steps=_value(rc.steps, 2000),
    )
    header = ["t_over_T", "p_0p", "p_0m", "p_1p", "p_1m"]
    order = [trace.labels.index(lbl) for lbl in ("0+", "0-", "1+", "1-")]
    write_csv(rc.out, header, np.column_stack([trace.times, trace.populations[:, order]]))
    print(
        f"wrote {rc.out}: {len(trace.times)} samples over {trace.times[-1]:g} cycles, "
        f"T = {trace.frequencies.period_T:.6g}"
    )
    return 0


def cmd_epsilon_c(rc: RunConfig) -> int:
    model = _model_id(rc)
    cfg = _model_config(rc)
    print("%.12g" % epsilon_condition(model, cfg, _value(rc.n, 1)))
    return 0


def cmd_scan(rc: RunConfig) -> int:
    model = _model_id(rc)
    cfg = _model_config(rc)
    spec = _basis(rc, model)
    _require(rc, "eps_min", "eps_max", "out")
    eps_grid = np.linspace(rc.eps_min, rc.eps_max, _value(rc.eps_steps, 24) + 1)
    g_min = _value(rc.g_min, 0.0)
    g_max = _value(rc.g_max, 1.2)
    points = _value(rc.g_steps, 240) + 1
    levels = _value(rc.levels, 6)
    rows = []
    for eps in eps_grid:
        cfg_eps = _bias_at(model, cfg, float(eps))
        table = sweep(model, cfg_eps, g_min, g_max, points, levels, spec)
        gaps = np.diff(table.energies, axis=1)
        flat = int(np.argmin(gaps))
        row, pair = divmod(flat, levels - 1)
        best = float(gaps[row, pair])
        if 0 < row < points - 1:
            refined = min_gap(
                model, cfg_eps, pair,
                float(table.g_grid[row - 1]), float(table.g_grid[row + 1]), spec,
            )
            best = min(best, refined.gap)
        rows.append([float(eps), best, pair])
    write_csv(rc.out, ["epsilon", "min_gap", "pair"], rows)
    print(f"wrote {rc.out}: {len(rows)} bias values")
    return 0


def cmd_plot(rc: RunConfig) -> int:
    _require(rc, "in_path", "out")
    header, data = read_csv(rc.in_path)
    x_col = _value(rc.x_col, header[0])
    if x_col not in header:
        raise ValueError(f"column {x_col!r} not in {rc.in_path} (has: {', '.join(header)})")
    y_names = (
        [name for name in header if name != x_col]
        if rc.y_cols is None
        else [name.strip() for name in rc.y_cols.split(",") if name.strip()]
    )
    if not y_names:
        raise ValueError("no y columns selected")
    for name in y_names:
        if name not in header:
            raise ValueError(f"column {name!r} not in {rc.in_path} (has: {', '.join(header)})")
    x = data[:, header.index(x_col)]
    series = [(name, data[:, header.index(name)]) for name in y_names]
    render_svg(rc.out, x, series, x_label=x_col)
    print(f"wrote {rc.out}: {len(series)} series, {len(x)} points")
    return 0


_COMMANDS = {
    "spectrum": cmd_spectrum,
    "crossings": cmd_crossings,
    "dynamics": cmd_dynamics,
    "epsilon-c": cmd_epsilon_c,
    "scan": cmd_scan,
    "plot": cmd_plot,
}


class _UsageError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # route argparse failures to exit code 1
        raise _UsageError(message)


def _build_parser() -> _Parser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--config", help="key = value settings file")
    shared.add_argument("--model")
    for flag, name in (
        ("--delta", None), ("--omega", None), ("--g", None), ("--epsilon", None),
        ("--stark-u", None), ("--lambda", "lam"),
        ("--g-min", None), ("--g-max", None), ("--tol", None),
        ("--t-max-T", None), ("--eps-min", None), ("--eps-max", None),
    ):
        shared.add_argument(flag, type=float, dest=name)
    for flag in ("--n-max", "--g-steps", "--levels", "--pair", "--steps", "--n", "--eps-steps"):
        shared.add_argument(flag, type=int)
    shared.add_argument("--out")
    shared.add_argument("--in", dest="in_path")
    shared.add_argument("--x-col")
    shared.add_argument("--y-cols")

    parser = _Parser(prog="asymrabi", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command")
    sub.add_parser("spectrum", parents=[shared], help="coupling sweep of the lowest rescaled levels")
    sub.add_parser("crossings", parents=[shared], help="locate and classify level-crossing candidates")
    sub.add_parser("dynamics", parents=[shared], help="displaced-basis population trace from |0_+,+>")
    sub.add_parser("epsilon-c", parents=[shared], help="print the n-th special bias value")
    sub.add_parser("scan", parents=[shared], help="minimum adjacent gap as a function of the bias")
    sub.add_parser("plot", parents=[shared], help="render a CSV produced by the other commands as SVG")
    return parser


def run(argv: list[str] | None = None) -> int:
    """Parse arguments, dispatch, map failures to exit codes; returns the code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as err:
        print(parser.format_usage(), file=sys.stderr, end="")
        print(f"error: {err}", file=sys.stderr)
        return 1
    except SystemExit as exc:  # --help
        code = exc.code
        return 0 if code in (0, None) else 1
    if args.command is None:
        print(parser.format_usage(), file=sys.stderr, end="")
        print("error: missing subcommand", file=sys.stderr)
        return 1
    try:
        rc = load_config(args.config) if args.config else RunConfig()
        for field in fields(RunConfig):
            value = getattr(args, field.name, None)
            if value is not None:
                setattr(rc, field.name, value)
        _validate(rc)
        return _COMMANDS[args.command](rc)
    except ConvergenceError as err:
        print(f"numerical-quality failure: {err}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())
