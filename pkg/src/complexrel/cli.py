"""Command line client for the complexrel toolkit.

By default every subcommand computes in process; pass ``--server URL`` to
send the same request to a running HTTP service instead.  Results go to
stdout (JSON by default, ``--format csv`` for tabular output); diagnostics
and errors go to stderr.  Exit codes: 0 success, 1 a check suite failed,
2 malformed input, 3 branch-point input.

Examples:

    complexrel boost --v 0.6 --event 1,0
    complexrel --mode general --gauge-s 1.1+0.2i boost --v 0.3+0.4i --event 1,2
    complexrel boost --v 0.6 --event 1,0 | complexrel boost --inverse -
    complexrel momentum --m0 1-0.1i --v 0.5i
    complexrel dispersion --k 2+1i --m0 1
    complexrel wave-check --omega 3 --k 2+1i --at 1-1i,0.5
    complexrel --format csv table worldline-time --range 0:0.99 -n 100
    complexrel check roundtrip --samples 2000
    complexrel constants
"""

from __future__ import annotations

import json
import sys

import click
from pydantic import ValidationError

from .checks import SUITES
from .errors import BranchPointError, DomainError
from .serialization import (
    DEFAULT_PRECISION,
    json_dumps,
    parse_complex_literal,
    rows_to_csv,
)
from .service import handlers
from .service import schemas as S

EXIT_CHECK_FAILED = 1
EXIT_SCHEMA = 2
EXIT_BRANCH_POINT = 3


class ComplexLiteral(click.ParamType):
    """a+bi style literal (also bare reals, bi, i)."""

    name = "complex"

    def convert(self, value, param, ctx):
        if isinstance(value, complex):
            return value
        try:
            return parse_complex_literal(value)
        except ValueError as exc:
            self.fail(str(exc), param, ctx)


class PairLiteral(click.ParamType):
    """Two comma-separated complex literals, e.g. '1+2i,0.5'."""

    name = "pair"

    def convert(self, value, param, ctx):
        if isinstance(value, tuple):
            return value
        parts = str(value).split(",")
        if len(parts) != 2:
            self.fail(f"expected two comma-separated values, got {value!r}", param, ctx)
        try:
            return tuple(parse_complex_literal(p) for p in parts)
        except ValueError as exc:
            self.fail(str(exc), param, ctx)


COMPLEX = ComplexLiteral()
PAIR = PairLiteral()


def _emit_error(code: str, message: str, exit_code: int):
    click.echo(json.dumps({"error": {"code": code, "message": message}}), err=True)
    sys.exit(exit_code)


def _schema_error(message: str):
    _emit_error("invalid-input", message, EXIT_SCHEMA)


class RunConfig:
    def __init__(self, units, mode, gauge_s, fmt, precision, seed, server):
        self.units = units
        self.mode = mode
        self.gauge_s = gauge_s
        self.format = fmt or "json"
        self.precision = precision if precision is not None else DEFAULT_PRECISION
        self.seed = seed if seed is not None else 42
        self.server = server


def _read_stdin_json(source: str | None) -> dict | None:
    if source is None:
        return None
    if source != "-":
        _schema_error("the only supported input argument is '-' (read stdin)")
    text = sys.stdin.read()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        _schema_error(f"stdin is not valid JSON: {exc}")
    if not isinstance(data, dict):
        _schema_error("stdin JSON must be an object")
    return data


def _http_client(base_url: str):
    import httpx

    return httpx.Client(base_url=base_url, timeout=120.0)


def _remote(cfg: RunConfig, method: str, path: str, payload=None, params=None) -> dict:
    try:
        with _http_client(cfg.server) as client:
            if method == "GET":
                r = client.get(path, params=params)
            else:
                r = client.post(path, json=payload)
    except Exception as exc:  # connection problems are usage-level failures
        _emit_error("server-unreachable", str(exc), EXIT_SCHEMA)
    if r.status_code == 200:
        return r.json()
    try:
        body = r.json()
    except ValueError:
        body = {}
    err = body.get("error") if isinstance(body, dict) else None
    code = (err or {}).get("code", "invalid-input")
    message = (err or {}).get("message", f"server returned {r.status_code}")
    if isinstance(body, dict) and "detail" in body and err is None:
        message = json.dumps(body["detail"])
        code = "invalid-input"
    exit_code = EXIT_BRANCH_POINT if code == "branch-point" else EXIT_SCHEMA
    _emit_error(code, message, exit_code)


def _run(cfg: RunConfig, path: str, model_cls, handler_fn, payload: dict) -> dict:
    """Validate, dispatch in process or remotely, return the response dict."""
    try:
        req = model_cls.model_validate(payload)
    except ValidationError as exc:
        _schema_error(str(exc))
    if cfg.server:
        return _remote(cfg, "POST", path, payload=req.model_dump(mode="json"))
    try:
        resp = handler_fn(req)
    except BranchPointError as exc:
        _emit_error("branch-point", str(exc), EXIT_BRANCH_POINT)
    except DomainError as exc:
        from .service.app import error_code

        _emit_error(error_code(exc), str(exc), EXIT_SCHEMA)
    except ValueError as exc:
        _schema_error(str(exc))
    return resp.model_dump(mode="json")


def _cx(obj) -> complex:
    if obj is None:
        return complex(float("nan"), float("nan"))
    return complex(obj.get("re", 0.0), obj.get("im", 0.0))


def _flag_notes(resp: dict):
    meta = resp.get("metadata") or {}
    if meta.get("near_branch_cut") or resp.get("near_branch_cut"):
        click.echo("note: radicand near the branch cut; result is branch sensitive", err=True)
    if meta.get("superluminal"):
        click.echo("note: |v| exceeds the invariant speed; option-2 worldline time is imaginary", err=True)


def _output(cfg: RunConfig, resp: dict, csv_rows=None):
    _flag_notes(resp)
    if cfg.format == "csv" and csv_rows is not None:
        click.echo(rows_to_csv(csv_rows(resp), cfg.precision), nl=False)
    else:
        click.echo(json_dumps(resp, cfg.precision))


def _boost_payload(cfg: RunConfig, base: dict | None, v, c) -> dict:
    params = dict(base or {})
    if v is not None:
        params["v"] = v
    if cfg.mode is not None:
        params["mode"] = cfg.mode
    if cfg.gauge_s is not None:
        params["gauge_s"] = cfg.gauge_s
    if c is not None:
        params["c"] = c
    if cfg.units is not None:
        params["units"] = cfg.units
    params.setdefault("units", "natural")
    return params


@click.group()
@click.option("--units", type=click.Choice(["natural", "si"]), default=None,
              help="Unit system (default natural).")
@click.option("--mode", type=click.Choice(["option1", "option2", "general"]), default=None,
              help="Boost mode (default option1).")
@click.option("--gauge-s", type=COMPLEX, default=None, metavar="A+BI",
              help="Gauge factor for general mode (default 1).")
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default=None,
              help="Output format (default json).")
@click.option("--precision", type=click.IntRange(6, 17), default=None,
              help="Significant digits in output (default 12).")
@click.option("--seed", type=int, default=None, help="Seed for check suites (default 42).")
@click.option("--server", default=None, metavar="URL",
              help="Send requests to a running service instead of computing locally.")
@click.pass_context
def main(ctx, units, mode, gauge_s, fmt, precision, seed, server):
    """Boosts, dispersion relations and wave equations on complex space-time."""
    ctx.obj = RunConfig(units, mode, gauge_s, fmt, precision, seed, server)


@main.command()
@click.argument("source", required=False)
@click.option("--v", type=COMPLEX, default=None, help="Boost velocity.")
@click.option("--c", type=COMPLEX, default=None, help="Invariant speed (general mode).")
@click.option("--event", type=PAIR, default=None, metavar="Z,T", help="Event to transform.")
@click.option("--fourmomentum", type=PAIR, default=None, metavar="E,P",
              help="Momentum-energy pair to transform.")
@click.option("--wavefourvector", type=PAIR, default=None, metavar="OMEGA,K",
              help="Frequency and wave number to transform.")
@click.option("--inverse", is_flag=True, help="Apply the inverse transform.")
@click.pass_obj
def boost(cfg: RunConfig, source, v, c, event, fourmomentum, wavefourvector, inverse):
    """Transform an event, four-momentum or wave four-vector.

    SOURCE may be '-' to read a request (or a previous boost result, whose
    output and boost parameters are picked up) from stdin.
    """
    data = _read_stdin_json(source)
    payload: dict = {}
    if data is not None:
        if "output" in data and "boost" in data:
            # Re-feeding a previous response: continue from its output.
            payload["boost"] = data["boost"]
            for key in ("event", "fourmomentum", "wavefourvector"):
                val = (data.get("output") or {}).get(key)
                if val is not None:
                    payload[key] = val
        else:
            payload = dict(data)
    payload["boost"] = _boost_payload(cfg, payload.get("boost"), v, c)
    if event is not None:
        payload["event"] = {"z": event[0], "t": event[1]}
        payload.pop("fourmomentum", None)
        payload.pop("wavefourvector", None)
    if fourmomentum is not None:
        payload["fourmomentum"] = {"E": fourmomentum[0], "p": fourmomentum[1]}
        payload.pop("event", None)
        payload.pop("wavefourvector", None)
    if wavefourvector is not None:
        payload["wavefourvector"] = {
            "omega": wavefourvector[0],
            "k": wavefourvector[1],
        }
        payload.pop("event", None)
        payload.pop("fourmomentum", None)
    if inverse:
        payload["inverse"] = True
    resp = _run(cfg, "/boost", S.BoostRequest, handlers.handle_boost, payload)

    def csv_rows(r):
        subject = r["subject"]
        body = r["output"][subject]
        return [{key: _cx(val) for key, val in body.items()}]

    _output(cfg, resp, csv_rows)


@main.command("add-vel")
@click.argument("source", required=False)
@click.option("--u", type=COMPLEX, default=None, help="Velocity to transform.")
@click.option("--v", type=COMPLEX, default=None, help="Boost velocity.")
@click.option("--c", type=COMPLEX, default=None, help="Invariant speed (general mode).")
@click.option("--inverse", is_flag=True, help="Apply the inverse addition.")
@click.pass_obj
def add_vel(cfg: RunConfig, source, u, v, c, inverse):
    """Map a velocity through a boost (relativistic velocity addition)."""
    data = _read_stdin_json(source)
    payload: dict = {}
    if data is not None:
        if "result" in data and "boost" in data:
            payload["boost"] = data["boost"]
            payload["u"] = data["result"]
        else:
            payload = dict(data)
    payload["boost"] = _boost_payload(cfg, payload.get("boost"), v, c)
    if u is not None:
        payload["u"] = u
    if inverse:
        payload["inverse"] = True
    resp = _run(cfg, "/add-vel", S.AddVelocitiesRequest, handlers.handle_add_velocities, payload)
    _output(cfg, resp, lambda r: [{"result": _cx(r["result"])}])


@main.command()
@click.argument("source", required=False)
@click.option("--m0", type=COMPLEX, default=None, help="Rest mass.")
@click.option("--v", type=COMPLEX, default=None, help="Boost velocity.")
@click.option("--c", type=COMPLEX, default=None, help="Invariant speed (general mode).")
@click.pass_obj
def momentum(cfg: RunConfig, source, m0, v, c):
    """Momentum and energy of a rest mass seen from a moving frame."""
    data = _read_stdin_json(source)
    payload: dict = dict(data or {})
    payload["boost"] = _boost_payload(cfg, payload.get("boost"), v, c)
    if m0 is not None:
        payload["m0"] = m0
    resp = _run(cfg, "/momentum", S.MomentumRequest, handlers.handle_momentum, payload)

    def csv_rows(r):
        return [
            {
                "E": _cx(r["fourmomentum"]["E"]),
                "p": _cx(r["fourmomentum"]["p"]),
                "invariant_mass_sq": _cx(r["invariant_mass_sq"]),
            }
        ]

    _output(cfg, resp, csv_rows)


@main.command()
@click.argument("source", required=False)
@click.option("--k", type=COMPLEX, default=None, help="Wave number.")
@click.option("--m0", type=COMPLEX, default=None, help="Rest mass.")
@click.option("--fourmomentum", type=PAIR, default=None, metavar="E,P",
              help="Extract the invariant mass of this pair instead.")
@click.option("--c", type=COMPLEX, default=None, help="Invariant speed for mass extraction.")
@click.pass_obj
def dispersion(cfg: RunConfig, source, k, m0, fourmomentum, c):
    """Frequency branches omega(k), or the invariant mass of an (E, p) pair."""
    data = _read_stdin_json(source)
    payload: dict = dict(data or {})
    if k is not None:
        payload["k"] = k
    if m0 is not None:
        payload["m0"] = m0
    if fourmomentum is not None:
        payload["fourmomentum"] = {"E": fourmomentum[0], "p": fourmomentum[1]}
    if c is not None:
        payload["c"] = c
    if cfg.gauge_s is not None:
        payload["gauge_s"] = cfg.gauge_s
    if cfg.units is not None:
        payload["units"] = cfg.units
    resp = _run(cfg, "/dispersion", S.DispersionRequest, handlers.handle_dispersion, payload)

    def csv_rows(r):
        if r["form"] == "roots":
            return [
                {
                    "k": _cx(r["k"]),
                    "omega_plus": _cx(r["omega_plus"]),
                    "omega_minus": _cx(r["omega_minus"]),
                    "energy_retarded": _cx(r["energy_retarded"]),
                }
            ]
        return [
            {
                "E": _cx(r["fourmomentum"]["E"]),
                "p": _cx(r["fourmomentum"]["p"]),
                "invariant_mass_sq": _cx(r["invariant_mass_sq"]),
                "rest_mass": _cx(r["rest_mass"]),
            }
        ]

    _output(cfg, resp, csv_rows)


@main.command("wave-check")
@click.argument("source", required=False)
@click.option("--omega", type=COMPLEX, default=None, help="Angular frequency.")
@click.option("--k", type=COMPLEX, default=None, help="Wave number.")
@click.option("--amp", type=COMPLEX, default=None, help="Amplitude (default 1).")
@click.option("--at", "at_point", type=PAIR, default=None, metavar="Z,T",
              help="Probe point (default 0,0).")
@click.option("--h", type=float, default=None, help="Derivative step (default 1e-5).")
@click.option("--m0", type=COMPLEX, default=None, help="Rest mass for the residual.")
@click.option("--grid", "grid_spec", default=None, metavar="Z0,THETA,N,DS",
              help="Evaluate stencil residuals on a rotated line grid.")
@click.option("--dt", type=float, default=None, help="Time step for grid residuals.")
@click.option("--equation", type=click.Choice(["kgf", "dirac"]), default=None,
              help="Which residual the grid form evaluates (default kgf).")
@click.option("--branch", type=click.Choice(["retarded", "advanced"]), default=None,
              help="Frequency branch for the spinor form.")
@click.pass_obj
def wave_check(cfg: RunConfig, source, omega, k, amp, at_point, h, m0, grid_spec, dt, equation, branch):
    """Evaluate a plane wave, re-extract (omega, k), and check residuals.

    The point form probes one space-time point; with --grid the wave is
    sampled along a line through the complex plane and the finite-difference
    residual of the chosen equation is reported per interior point.
    """
    data = _read_stdin_json(source)
    payload: dict = dict(data or {})
    if omega is not None:
        payload["omega"] = omega
    if k is not None:
        payload["k"] = k
    if amp is not None:
        payload["amp"] = amp
    if at_point is not None:
        payload["z"], payload["t"] = at_point
    if h is not None:
        payload["h"] = h
    if m0 is not None:
        payload["m0"] = m0
    if grid_spec is not None:
        parts = str(grid_spec).split(",")
        if len(parts) != 4:
            _schema_error("--grid expects Z0,THETA,N,DS")
        try:
            payload["grid"] = {
                "z0": parse_complex_literal(parts[0]),
                "theta": float(parts[1]),
                "n": int(parts[2]),
                "ds": float(parts[3]),
            }
        except ValueError as exc:
            _schema_error(f"malformed --grid: {exc}")
    if dt is not None:
        payload["dt"] = dt
    if equation is not None:
        payload["equation"] = equation
    if branch is not None:
        payload["branch"] = branch
    if cfg.gauge_s is not None:
        payload["gauge_s"] = cfg.gauge_s
    if cfg.units is not None:
        payload["units"] = cfg.units
    resp = _run(cfg, "/wave-check", S.WaveCheckRequest, handlers.handle_wave_check, payload)

    def csv_rows(r):
        if r["form"] == "grid":
            return [
                {key: (_cx(val) if isinstance(val, dict) else val) for key, val in row.items()}
                for row in r["rows"]
            ]
        return [
            {
                "value": _cx(r["value"]),
                "omega": _cx(r["extracted"]["omega"]),
                "k": _cx(r["extracted"]["k"]),
                "E": _cx(r["qhjt"]["E"]),
                "p": _cx(r["qhjt"]["p"]),
                "extraction_deviation": r["extraction_deviation"],
            }
        ]

    _output(cfg, resp, csv_rows)


@main.command()
@click.argument("suite", required=False, default="all",
                type=click.Choice(sorted(SUITES) + ["all"]))
@click.option("--samples", type=click.IntRange(min=1), default=None,
              help="Sample count override for the suite.")
@click.pass_obj
def check(cfg: RunConfig, suite, samples):
    """Run seeded identity suites; exit 1 if any identity fails."""
    payload = {"suite": suite, "seed": cfg.seed}
    if samples is not None:
        payload["samples"] = samples
    if cfg.units is not None:
        payload["units"] = cfg.units
    resp = _run(cfg, "/check", S.CheckRequest, handlers.handle_check, payload)

    def csv_rows(r):
        rows = []
        for report in r["reports"]:
            for result in report["results"]:
                rows.append({"suite": report["suite"], **result})
        return rows

    _output(cfg, resp, csv_rows)
    if not resp["passed"]:
        sys.exit(EXIT_CHECK_FAILED)


@main.command()
@click.argument("curve", type=click.Choice(["worldline-time", "dispersion", "nonrel-error"]))
@click.option("--range", "krange", default=None, metavar="START:STOP",
              help="Curve parameter range.")
@click.option("-n", type=click.IntRange(min=1), default=None, help="Number of rows.")
@click.option("--m0", type=COMPLEX, default=None, help="Rest mass (dispersion curves).")
@click.option("--phase", type=float, default=None,
              help="Velocity direction in radians (worldline curve).")
@click.pass_obj
def table(cfg: RunConfig, curve, krange, n, m0, phase):
    """Tabulate a named curve (worldline-time, dispersion, nonrel-error)."""
    payload: dict = {"curve": curve}
    if krange is not None:
        parts = str(krange).split(":")
        if len(parts) != 2:
            _schema_error("--range expects START:STOP")
        try:
            payload["start"], payload["stop"] = float(parts[0]), float(parts[1])
        except ValueError:
            _schema_error(f"malformed --range {krange!r}")
    if n is not None:
        payload["n"] = n
    if m0 is not None:
        payload["m0"] = m0
    if phase is not None:
        payload["phase"] = phase
    if cfg.mode is not None:
        payload["mode"] = cfg.mode
    if cfg.gauge_s is not None:
        payload["gauge_s"] = cfg.gauge_s
    if cfg.units is not None:
        payload["units"] = cfg.units
    resp = _run(cfg, "/table", S.TableRequest, handlers.handle_table, payload)

    def csv_rows(r):
        # None marks a complex cell with no value (branch point); keep the
        # paired-column shape by turning it into complex nan
        return [
            {
                key: (_cx(val) if isinstance(val, dict) or val is None else val)
                for key, val in row.items()
            }
            for row in r["rows"]
        ]

    _output(cfg, resp, csv_rows)


@main.command()
@click.pass_obj
def constants(cfg: RunConfig):
    """Print the constants of the selected unit system."""
    units = cfg.units or "natural"
    if cfg.server:
        resp = _remote(cfg, "GET", "/constants", params={"units": units})
    else:
        resp = handlers.handle_constants(units).model_dump(mode="json")
    _output(cfg, resp, lambda r: [dict(r)])


if __name__ == "__main__":
    main()
