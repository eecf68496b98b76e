"""Pure request -> response functions shared by the HTTP app and the CLI.

Each handler takes a validated request model, runs the corresponding library
call, and builds the response model.  Domain errors propagate to the caller,
which decides between HTTP status codes and process exit codes.
"""

from __future__ import annotations

import warnings

import numpy as np

from .. import tables
from ..checks import run_all, run_suite
from ..core import branch_proximity, constants_for, principal_sqrt
from ..dynamics import FourMomentum, invariant_mass_sq, lp_forward, lp_inverse, momentum_energy_from_rest
from ..kinematics import (
    Boost,
    BoostMode,
    add_velocities,
    add_velocities_inverse,
    boost_forward,
    boost_inverse,
)
from ..rqm import (
    ComplexLineGrid,
    bilinear_square,
    dirac_plane_spinors,
    dirac_residual_grid,
    kgf_dispersion_roots,
    kgf_residual_grid,
    kgf_scalar,
    nonrel_expansion,
    schrodinger_sqrt_energy,
)
from ..waves import (
    PlaneWave,
    WaveFourVector,
    evaluate_planewave,
    extract_omega_k,
    qhjt_momentum_energy,
    transform_wave,
    transform_wave_inverse,
)
from . import schemas as S


def _metadata(b: Boost, units: str) -> S.BoostMetadata:
    superluminal = (
        b.mode is BoostMode.OPTION2 and abs(b.v) > b.constants.c_mag
    )
    # near-cut roots warn on access; here the flag is a response field
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return _metadata_fields(b, units, superluminal)


def _metadata_fields(b: Boost, units: str, superluminal: bool) -> S.BoostMetadata:
    return S.BoostMetadata(
        mode=b.mode.value,
        units=units,
        c_squared=S.ComplexNumber.from_complex(b.c_squared),
        radicand=S.ComplexNumber.from_complex(b.radicand),
        root=S.ComplexNumber.from_complex(b.root),
        gamma_gamma_bar=S.ComplexNumber.from_complex(b.gamma_gamma_bar),
        near_branch_cut=b.near_branch_cut,
        superluminal=superluminal,
    )


def _build_boost(params: S.BoostParams) -> Boost:
    # Construction warnings (superluminal option 2) surface via metadata
    # instead of the warning machinery so that handlers stay quiet.
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return params.to_boost()


def handle_boost(req: S.BoostRequest) -> S.BoostResponse:
    b = _build_boost(req.boost)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        if req.event is not None:
            subject = "event"
            e = req.event.to_event()
            moved = boost_inverse(b, e) if req.inverse else boost_forward(b, e)
            output = S.SubjectPayload(event=S.EventModel.from_event(moved))
        elif req.fourmomentum is not None:
            subject = "fourmomentum"
            fm = FourMomentum(
                E=req.fourmomentum.E.to_complex(), p=req.fourmomentum.p.to_complex()
            )
            moved = lp_inverse(b, fm) if req.inverse else lp_forward(b, fm)
            output = S.SubjectPayload(
                fourmomentum=S.FourMomentumModel(
                    E=S.ComplexNumber.from_complex(moved.E),
                    p=S.ComplexNumber.from_complex(moved.p),
                )
            )
        else:
            subject = "wavefourvector"
            wfv = WaveFourVector(
                omega=req.wavefourvector.omega.to_complex(),
                k=req.wavefourvector.k.to_complex(),
            )
            moved = (
                transform_wave_inverse(b, wfv)
                if req.inverse
                else transform_wave(b, wfv)
            )
            output = S.SubjectPayload(
                wavefourvector=S.WaveFourVectorModel(
                    omega=S.ComplexNumber.from_complex(moved.omega),
                    k=S.ComplexNumber.from_complex(moved.k),
                )
            )
    return S.BoostResponse(
        boost=req.boost,
        inverse=req.inverse,
        subject=subject,
        input=S.SubjectPayload(
            event=req.event,
            fourmomentum=req.fourmomentum,
            wavefourvector=req.wavefourvector,
        ),
        output=output,
        metadata=_metadata(b, req.boost.units),
    )


def handle_add_velocities(req: S.AddVelocitiesRequest) -> S.AddVelocitiesResponse:
    b = _build_boost(req.boost)
    u = req.u.to_complex()
    result = add_velocities_inverse(u, b) if req.inverse else add_velocities(u, b)
    return S.AddVelocitiesResponse(
        boost=req.boost,
        inverse=req.inverse,
        u=S.ComplexNumber.from_complex(u),
        result=S.ComplexNumber.from_complex(result),
        metadata=_metadata(b, req.boost.units),
    )


def handle_momentum(req: S.MomentumRequest) -> S.MomentumResponse:
    b = _build_boost(req.boost)
    m0 = req.m0.to_complex()
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        fm = momentum_energy_from_rest(m0, b)
        mass_sq = invariant_mass_sq(
            fm, gauge_s=b.gauge_s, c=principal_sqrt(b.c_squared)
        )
    return S.MomentumResponse(
        boost=req.boost,
        m0=S.ComplexNumber.from_complex(m0),
        fourmomentum=S.FourMomentumModel(
            E=S.ComplexNumber.from_complex(fm.E),
            p=S.ComplexNumber.from_complex(fm.p),
        ),
        invariant_mass_sq=S.ComplexNumber.from_complex(mass_sq),
        metadata=_metadata(b, req.boost.units),
    )


def handle_dispersion(req: S.DispersionRequest):
    constants = constants_for(req.units)
    gauge = req.gauge_s.to_complex()
    if req.fourmomentum is not None:
        fm = FourMomentum(
            E=req.fourmomentum.E.to_complex(), p=req.fourmomentum.p.to_complex()
        )
        c = complex(constants.c_mag) if req.c is None else req.c.to_complex()
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            mass_sq = invariant_mass_sq(fm, gauge_s=gauge, c=c)
            rest_mass = principal_sqrt(mass_sq)
        return S.DispersionInvariantResponse(
            fourmomentum=req.fourmomentum,
            gauge_s=S.ComplexNumber.from_complex(gauge),
            units=req.units,
            invariant_mass_sq=S.ComplexNumber.from_complex(mass_sq),
            rest_mass=S.ComplexNumber.from_complex(rest_mass),
        )
    k = req.k.to_complex()
    m0 = req.m0.to_complex()
    c, hbar = constants.c_mag, constants.hbar
    radicand = c * c * bilinear_square(k) + (gauge * m0 * c * c / hbar) ** 2
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        plus, minus = kgf_dispersion_roots(k, m0, gauge, constants)
        energy = schrodinger_sqrt_energy(k, m0, gauge, constants)
        expansion = None
        if m0 != 0 and gauge != 0:
            expansion = S.ComplexNumber.from_complex(
                nonrel_expansion(k, m0, gauge, constants)
            )
    return S.DispersionRootsResponse(
        k=S.ComplexNumber.from_complex(k),
        m0=S.ComplexNumber.from_complex(m0),
        gauge_s=S.ComplexNumber.from_complex(gauge),
        units=req.units,
        omega_plus=S.ComplexNumber.from_complex(plus),
        omega_minus=S.ComplexNumber.from_complex(minus),
        energy_retarded=S.ComplexNumber.from_complex(energy),
        nonrel_expansion=expansion,
        near_branch_cut=branch_proximity(radicand),
    )


def _wave_point(req: S.WaveCheckRequest) -> S.WaveCheckPointResponse:
    constants = constants_for(req.units)
    pw = PlaneWave(k=req.k.to_complex(), omega=req.omega.to_complex(), amp=req.amp.to_complex())
    z = req.z.to_complex()
    t = req.t.to_complex()
    value = evaluate_planewave(pw, z, t)
    extraction = extract_omega_k(pw, z, t, h=req.h)
    qhjt = qhjt_momentum_energy(pw, z, t, constants, h=req.h)
    err = max(
        abs(extraction.wave.k - pw.k) / max(1.0, abs(pw.k)),
        abs(extraction.wave.omega - pw.omega) / max(1.0, abs(pw.omega)),
    )
    residual = None
    if req.m0 is not None:
        residual = S.ComplexNumber.from_complex(
            kgf_scalar(
                pw.omega, pw.k, req.m0.to_complex(), req.gauge_s.to_complex(), constants
            )
        )
    return S.WaveCheckPointResponse(
        value=S.ComplexNumber.from_complex(value),
        extracted=S.WaveFourVectorModel(
            omega=S.ComplexNumber.from_complex(extraction.wave.omega),
            k=S.ComplexNumber.from_complex(extraction.wave.k),
        ),
        extraction_deviation=extraction.deviation,
        extraction_error=err,
        qhjt=S.FourMomentumModel(
            E=S.ComplexNumber.from_complex(qhjt.momentum.E),
            p=S.ComplexNumber.from_complex(qhjt.momentum.p),
        ),
        kgf_residual=residual,
    )


def _wave_grid(req: S.WaveCheckRequest) -> S.WaveCheckGridResponse:
    constants = constants_for(req.units)
    m0 = req.m0.to_complex()
    gauge = req.gauge_s.to_complex()
    grid = ComplexLineGrid(
        z0=req.grid.z0.to_complex(),
        theta=req.grid.theta,
        n=req.grid.n,
        ds=req.grid.ds,
    )
    t = req.t.to_complex()
    k = req.k.to_complex()
    omega = req.omega.to_complex()
    pts = grid.points
    rows = []

    def cell(value: complex) -> dict:
        return {"re": value.real, "im": value.imag}

    if req.equation == "kgf":
        amp = req.amp.to_complex()
        pw = PlaneWave(k=k, omega=omega, amp=amp)
        residuals = kgf_residual_grid(pw, grid, t, req.dt, m0, gauge, constants)
        for j in range(1, grid.n - 1):
            rows.append(
                {
                    "j": j,
                    "z": cell(complex(pts[j])),
                    "psi": cell(pw(pts[j], t)),
                    "residual": cell(complex(residuals[j - 1])),
                }
            )
        max_residual = float(np.max(np.abs(residuals)))
    else:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            pairs = dirac_plane_spinors(k, m0, gauge, constants, branch=req.branch)
        omega_d, u = pairs[0]
        omega = omega_d
        # the lower-sign equation is solved by conjugate-phase waves
        phase = 1.0 if req.branch == "retarded" else -1.0

        def spinor_wave(zz, tt):
            return u * np.exp(phase * 1j * (k * zz - omega_d * tt))

        residuals = dirac_residual_grid(
            spinor_wave, grid, t, req.dt, m0, gauge, constants, branch=req.branch
        )
        for j in range(1, grid.n - 1):
            value = spinor_wave(pts[j], t)
            row = {"j": j, "z": cell(complex(pts[j]))}
            for comp in range(4):
                row[f"psi{comp}"] = cell(complex(value[comp]))
            for comp in range(4):
                row[f"residual{comp}"] = cell(complex(residuals[j - 1, comp]))
            rows.append(row)
        max_residual = float(np.max(np.abs(residuals)))
    return S.WaveCheckGridResponse(
        equation=req.equation,
        omega=S.ComplexNumber.from_complex(omega),
        k=S.ComplexNumber.from_complex(k),
        max_residual=max_residual,
        rows=rows,
    )


def handle_wave_check(req: S.WaveCheckRequest):
    if req.grid is None:
        return _wave_point(req)
    return _wave_grid(req)


def handle_check(req: S.CheckRequest) -> S.CheckResponse:
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        if req.suite == "all":
            reports = run_all(seed=req.seed, units=req.units)
        else:
            reports = [
                run_suite(req.suite, seed=req.seed, samples=req.samples, units=req.units)
            ]
    models = [S.CheckReportModel(**r.as_dict()) for r in reports]
    return S.CheckResponse(passed=all(m.passed for m in models), reports=models)


def handle_table(req: S.TableRequest) -> S.TableResponse:
    constants = constants_for(req.units)
    kwargs: dict = {"constants": constants}
    if req.start is not None:
        kwargs["start"] = req.start
    if req.stop is not None:
        kwargs["stop"] = req.stop
    if req.n is not None:
        kwargs["n"] = req.n
    if req.curve == "worldline-time":
        kwargs["mode"] = BoostMode(req.mode)
        kwargs["phase"] = req.phase
    else:
        kwargs["m0"] = req.m0.to_complex()
        kwargs["gauge_s"] = req.gauge_s.to_complex()
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        rows = tables.make_table(req.curve, **kwargs)
    safe_rows = [
        {
            key: ({"re": val.real, "im": val.imag} if isinstance(val, complex) else val)
            for key, val in row.items()
        }
        for row in rows
    ]
    return S.TableResponse(curve=req.curve, rows=safe_rows)


def handle_constants(units: str) -> S.ConstantsResponse:
    constants = constants_for(units)
    return S.ConstantsResponse(
        units=units, c_mag=constants.c_mag, hbar=constants.hbar
    )
