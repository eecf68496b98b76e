"""HTTP surface: routing, validation failures, domain-error mapping."""

import pytest
from fastapi.testclient import TestClient

from complexrel.service import create_app


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


class TestBoostEndpoint:
    def test_event_forward(self, client):
        r = client.post(
            "/boost",
            json={"boost": {"v": 0.6}, "event": {"z": 1, "t": 0}},
        )
        assert r.status_code == 200
        body = r.json()
        assert body["subject"] == "event"
        assert body["output"]["event"]["z"] == {"re": 1.25, "im": 0.0}
        assert body["output"]["event"]["t"]["re"] == pytest.approx(-0.75)
        assert body["output"]["event"]["t"]["im"] == 0.0
        assert body["metadata"]["near_branch_cut"] is False

    def test_inverse_roundtrip(self, client):
        fwd = client.post(
            "/boost",
            json={
                "boost": {"v": {"re": 0.2, "im": 0.3}, "mode": "general"},
                "event": {"z": {"re": 1, "im": -1}, "t": 2},
            },
        ).json()
        back = client.post(
            "/boost",
            json={
                "boost": fwd["boost"],
                "event": fwd["output"]["event"],
                "inverse": True,
            },
        ).json()
        z = back["output"]["event"]["z"]
        assert z["re"] == pytest.approx(1.0, abs=1e-12)
        assert z["im"] == pytest.approx(-1.0, abs=1e-12)

    def test_wavevector_subject(self, client):
        r = client.post(
            "/boost",
            json={"boost": {"v": 0.5}, "wavefourvector": {"omega": 1, "k": 1}},
        )
        assert r.status_code == 200
        assert r.json()["subject"] == "wavefourvector"

    def test_requires_exactly_one_subject(self, client):
        r = client.post("/boost", json={"boost": {"v": 0.5}})
        assert r.status_code == 422
        r = client.post(
            "/boost",
            json={
                "boost": {"v": 0.5},
                "event": {"z": 0, "t": 0},
                "fourmomentum": {"E": 1, "p": 0},
            },
        )
        assert r.status_code == 422

    def test_unknown_field_rejected(self, client):
        r = client.post(
            "/boost",
            json={"boost": {"v": 0.5, "warp": 9}, "event": {"z": 0, "t": 0}},
        )
        assert r.status_code == 422
        assert r.json()["error"]["code"] == "invalid-input"

    def test_branch_point_maps_to_400(self, client):
        r = client.post(
            "/boost", json={"boost": {"v": 1.0}, "event": {"z": 0, "t": 0}}
        )
        assert r.status_code == 400
        assert r.json()["error"]["code"] == "branch-point"

    def test_nonfinite_rejected(self, client):
        # raw body: 1e400 parses to inf on the server side
        r = client.post(
            "/boost",
            content=b'{"boost": {"v": {"re": 1e400, "im": 0}}, "event": {"z": 0, "t": 0}}',
            headers={"content-type": "application/json"},
        )
        assert r.status_code == 422
        assert r.json()["error"]["code"] == "invalid-input"

    def test_superluminal_flagged_not_fatal(self, client):
        r = client.post(
            "/boost",
            json={
                "boost": {"v": {"re": 0.9, "im": 0.9}, "mode": "option2"},
                "event": {"z": 1, "t": 1},
            },
        )
        assert r.status_code == 200
        assert r.json()["metadata"]["superluminal"] is True


class TestAddVelocities:
    def test_textbook_value(self, client):
        r = client.post("/add-vel", json={"boost": {"v": 0.5}, "u": 0.8})
        assert r.status_code == 200
        assert r.json()["result"]["re"] == pytest.approx(0.5)

    def test_pole_maps_to_400(self, client):
        r = client.post("/add-vel", json={"boost": {"v": 0.5}, "u": 2.0})
        assert r.status_code == 400
        assert r.json()["error"]["code"] == "velocity-pole"


class TestMomentum:
    def test_rest_mass_recovered(self, client):
        r = client.post(
            "/momentum",
            json={"boost": {"v": {"re": 0, "im": 0.5}, "mode": "general"}, "m0": {"re": 1, "im": -0.1}},
        )
        assert r.status_code == 200
        body = r.json()
        assert body["invariant_mass_sq"]["re"] == pytest.approx(0.99, abs=1e-12)
        assert body["invariant_mass_sq"]["im"] == pytest.approx(-0.2, abs=1e-12)
        assert body["fourmomentum"]["E"]["re"] == pytest.approx(
            0.8944271909999159, abs=1e-14
        )


class TestDispersion:
    def test_roots_form(self, client):
        r = client.post("/dispersion", json={"k": 3, "m0": 4})
        assert r.status_code == 200
        body = r.json()
        assert body["form"] == "roots"
        assert body["omega_plus"]["re"] == pytest.approx(5.0)
        assert body["omega_minus"]["re"] == pytest.approx(-5.0)

    def test_invariant_form(self, client):
        r = client.post(
            "/dispersion", json={"fourmomentum": {"E": 1.25, "p": 0.75}}
        )
        assert r.status_code == 200
        body = r.json()
        assert body["form"] == "invariant"
        assert body["invariant_mass_sq"]["re"] == pytest.approx(1.0)
        assert body["rest_mass"]["re"] == pytest.approx(1.0)

    def test_k_and_fourmomentum_exclusive(self, client):
        r = client.post(
            "/dispersion",
            json={"k": 1, "m0": 1, "fourmomentum": {"E": 1, "p": 0}},
        )
        assert r.status_code == 422

    def test_massless_omits_expansion(self, client):
        r = client.post("/dispersion", json={"k": 2, "m0": 0})
        assert r.status_code == 200
        assert r.json()["nonrel_expansion"] is None


class TestWaveCheck:
    def test_point_form(self, client):
        r = client.post(
            "/wave-check",
            json={
                "omega": 3,
                "k": {"re": 2, "im": 1},
                "z": {"re": 1, "im": -1},
                "t": 0.5,
            },
        )
        assert r.status_code == 200
        body = r.json()
        assert body["form"] == "point"
        assert body["value"]["re"] == pytest.approx(0.19228364988935967, abs=1e-12)
        assert body["value"]["im"] == pytest.approx(2.7114724960648, abs=1e-12)
        assert body["extraction_error"] < 1e-8
        assert body["kgf_residual"] is None

    def test_point_with_residual(self, client):
        r = client.post(
            "/wave-check", json={"omega": 5, "k": 3, "m0": 4}
        )
        assert r.status_code == 200
        res = r.json()["kgf_residual"]
        assert res["re"] == pytest.approx(0.0, abs=1e-10)

    def test_grid_kgf(self, client):
        r = client.post(
            "/wave-check",
            json={
                "omega": 5,
                "k": 3,
                "m0": 4,
                "grid": {"n": 16, "ds": 0.01},
                "dt": 0.005,
            },
        )
        assert r.status_code == 200
        body = r.json()
        assert body["form"] == "grid"
        assert len(body["rows"]) == 14
        assert body["max_residual"] < 1e-1

    def test_grid_dirac_both_branches(self, client):
        for branch in ("retarded", "advanced"):
            r = client.post(
                "/wave-check",
                json={
                    "omega": 0,
                    "k": 1,
                    "m0": 1.5,
                    "equation": "dirac",
                    "branch": branch,
                    "grid": {"n": 12, "ds": 0.01},
                    "dt": 0.005,
                },
            )
            assert r.status_code == 200
            body = r.json()
            assert body["max_residual"] < 1e-2
            assert set(body["rows"][0]) == {
                "j", "z",
                "psi0", "psi1", "psi2", "psi3",
                "residual0", "residual1", "residual2", "residual3",
            }

    def test_grid_requires_mass(self, client):
        r = client.post(
            "/wave-check",
            json={"omega": 1, "k": 1, "grid": {"n": 8, "ds": 0.1}},
        )
        assert r.status_code == 422

    def test_node_maps_to_400(self, client):
        r = client.post(
            "/wave-check", json={"omega": 1, "k": 1, "amp": {"re": 1e-320}}
        )
        assert r.status_code in (400, 422)


class TestCheckEndpoint:
    def test_single_suite(self, client):
        r = client.post(
            "/check", json={"suite": "fixedpoints", "samples": 100, "seed": 5}
        )
        assert r.status_code == 200
        body = r.json()
        assert body["passed"] is True
        assert body["reports"][0]["suite"] == "fixedpoints"

    def test_unknown_suite(self, client):
        r = client.post("/check", json={"suite": "nonsense"})
        assert r.status_code == 422


class TestTableEndpoint:
    def test_worldline(self, client):
        r = client.post(
            "/table",
            json={"curve": "worldline-time", "start": 0.99, "stop": 0.99, "n": 1},
        )
        assert r.status_code == 200
        rows = r.json()["rows"]
        assert rows[0]["factor"]["re"] == pytest.approx(0.14106735979665883)

    def test_branch_point_row_serializes_as_null(self, client):
        r = client.post(
            "/table",
            json={"curve": "worldline-time", "start": 1.0, "stop": 1.0, "n": 1, "mode": "option1"},
        )
        assert r.status_code == 200
        assert r.json()["rows"][0]["factor"] is None

    def test_dispersion_curve(self, client):
        r = client.post(
            "/table", json={"curve": "dispersion", "start": 0, "stop": 0, "n": 1}
        )
        assert r.json()["rows"][0]["omega_plus"] == {"re": 1.0, "im": 0.0}


class TestConstants:
    def test_natural(self, client):
        r = client.get("/constants")
        assert r.json() == {"units": "natural", "c_mag": 1.0, "hbar": 1.0}

    def test_si(self, client):
        r = client.get("/constants", params={"units": "si"})
        body = r.json()
        assert body["c_mag"] == 299792458.0
        assert body["hbar"] == 1.054571726e-34

    def test_unknown_units(self, client):
        r = client.get("/constants", params={"units": "cgs"})
        assert r.status_code == 422
