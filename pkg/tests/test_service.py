"""HTTP service tests over the in-process ASGI app."""

import json

import pytest
from fastapi.testclient import TestClient

from fuzzywinwin import NegotiationFrame, increasing_win, price_for_increasing
from fuzzywinwin.service import create_app
from support import OIL_TABLE, ORE_TABLE, TOY_TABLE


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app(), raise_server_exceptions=False)


def oil_body(oil_ledger):
    rule, records = oil_ledger
    return {
        "rule": {
            "constant_cost": rule.constant_cost,
            "settled_offset": rule.settled_offset,
            "increasing_party": rule.increasing_party,
            "decreasing_party": rule.decreasing_party,
        },
        "records": [
            {"label": r.label, "reference_price": r.reference_price} for r in records
        ],
    }


class TestHealth:
    def test_ok(self, client):
        response = client.get("/v1/health")
        assert response.status_code == 200
        assert response.json() == {"status": "ok"}


class TestEvaluate:
    def test_toy_interval(self, client):
        response = client.post(
            "/v1/evaluate", json={"lower": 33, "upper": 66, "value": 49}
        )
        assert response.status_code == 200
        payload = response.json()
        assert payload["swp_percent"] == 48
        assert payload["bwp_percent"] == 52
        assert payload["zone"] == "fuzzy_win_win"
        assert payload["schema_version"] == 1

    def test_lower_boundary(self, client):
        payload = client.post(
            "/v1/evaluate", json={"lower": 10, "upper": 60, "value": 10}
        ).json()
        assert payload["swp_percent"] == 0
        assert payload["zone"] == "fuzzy_win_win"

    def test_ore_2009_southern_on_signed_axis(self, client):
        payload = client.post(
            "/v1/evaluate", json={"lower": -45, "upper": 0, "value": -33}
        ).json()
        assert (payload["swp_percent"], payload["bwp_percent"]) == (27, 73)

    def test_raw_share_is_bit_for_bit_library_result(self, client):
        payload = client.post(
            "/v1/evaluate", json={"lower": 10.57, "upper": 68.44, "value": 52.44}
        ).json()
        assert payload["swp_raw"] == increasing_win(
            NegotiationFrame(10.57, 68.44), 52.44
        )

    def test_degenerate_frame(self, client):
        response = client.post(
            "/v1/evaluate", json={"lower": 60, "upper": 10, "value": 30}
        )
        assert response.status_code == 400
        problem = response.json()
        assert problem["error_code"] == "degenerate_frame"
        assert set(problem) == {"error_code", "message", "field"}

    def test_malformed_json(self, client):
        response = client.post(
            "/v1/evaluate",
            content=b'{"lower": 33,',
            headers={"content-type": "application/json"},
        )
        assert response.status_code == 400
        assert response.json()["error_code"] == "invalid_request"

    def test_missing_field_names_it(self, client):
        response = client.post("/v1/evaluate", json={"lower": 33, "upper": 66})
        assert response.status_code == 400
        assert response.json()["field"] == "value"

    def test_non_finite_value_rejected(self, client):
        response = client.post(
            "/v1/evaluate", json={"lower": 33, "upper": 66, "value": "NaN"}
        )
        assert response.status_code == 400

    def test_unsupported_schema_version(self, client):
        response = client.post(
            "/v1/evaluate",
            json={"schema_version": 2, "lower": 33, "upper": 66, "value": 49},
        )
        assert response.status_code == 400


class TestInverse:
    def test_increasing_party_target(self, client):
        payload = client.post(
            "/v1/inverse",
            json={"lower": 33, "upper": 66, "party": "increasing", "target": 0.40},
        ).json()
        assert payload["price"] == pytest.approx(46.2, abs=1e-9)
        assert payload["price"] == price_for_increasing(NegotiationFrame(33, 66), 0.40)

    def test_decreasing_party_target(self, client):
        payload = client.post(
            "/v1/inverse",
            json={"lower": 38, "upper": 76, "party": "decreasing", "target": 0.60},
        ).json()
        assert payload["price"] == pytest.approx(53.2, abs=1e-9)

    def test_full_share_hits_upper_bound(self, client):
        payload = client.post(
            "/v1/inverse",
            json={"lower": 10, "upper": 60, "party": "increasing", "target": 1.0},
        ).json()
        assert payload["price"] == 60.0

    def test_target_out_of_range(self, client):
        response = client.post(
            "/v1/inverse",
            json={"lower": 10, "upper": 60, "party": "increasing", "target": 1.5},
        )
        assert response.status_code == 400
        assert response.json()["error_code"] == "target_out_of_range"

    def test_unknown_party(self, client):
        response = client.post(
            "/v1/inverse",
            json={"lower": 10, "upper": 60, "party": "winner", "target": 0.5},
        )
        assert response.status_code == 400
        assert response.json()["field"] == "party"


class TestLedger:
    def test_oil_ledger_summary(self, client, oil_ledger):
        response = client.post("/v1/ledger", json=oil_body(oil_ledger))
        assert response.status_code == 200
        payload = response.json()
        summary = payload["summary"]
        assert summary["increasing_win_count"] == 27
        assert summary["decreasing_win_count"] == 28
        assert summary["tie_count"] == 5
        assert payload["errors"] == []
        pairs = [(r["swp_percent"], r["bwp_percent"]) for r in payload["attributed"]]
        assert pairs == [(swp, bwp) for _, swp, bwp in OIL_TABLE]

    def test_ore_ledger_averages(self, client, ore_ledger):
        rule, records = ore_ledger
        body = {
            "records": [
                {
                    "label": r.label,
                    "cost_price": r.cost_price,
                    "reference_price": r.reference_price,
                    "settled_price": r.settled_price,
                }
                for r in records
            ]
        }
        payload = client.post("/v1/ledger", json=body).json()
        assert payload["summary"]["avg_increasing_percent"] == 61
        assert payload["summary"]["avg_decreasing_percent"] == 39
        pairs = [(r["swp_percent"], r["bwp_percent"]) for r in payload["attributed"]]
        assert pairs == [(swp, bwp) for _, swp, bwp in ORE_TABLE]

    def test_single_midpoint_record(self, client):
        payload = client.post(
            "/v1/ledger",
            json={
                "records": [
                    {"label": "solo", "cost_price": 10, "reference_price": 60,
                     "settled_price": 35}
                ]
            },
        ).json()
        assert payload["attributed"][0]["swp_percent"] == 50
        assert payload["attributed"][0]["attribution"] == "tie"

    def test_partial_failure_reports_inline_and_processes_the_rest(self, client):
        payload = client.post(
            "/v1/ledger",
            json={
                "records": [
                    {"label": "good", "cost_price": 10, "reference_price": 60,
                     "settled_price": 35},
                    {"label": "broken", "cost_price": 10},
                ]
            },
        ).json()
        assert len(payload["attributed"]) == 1
        assert payload["errors"] == [
            {
                "label": "broken",
                "error_code": "unresolvable_record",
                "message": payload["errors"][0]["message"],
            }
        ]
        assert "reference_price" in payload["errors"][0]["message"]

    def test_all_records_invalid(self, client):
        response = client.post(
            "/v1/ledger", json={"records": [{"label": "only"}, {"label": "two"}]}
        )
        assert response.status_code == 422
        assert response.json()["error_code"] == "all_records_invalid"

    def test_empty_records(self, client):
        response = client.post("/v1/ledger", json={"records": []})
        assert response.status_code == 400
        assert response.json()["error_code"] == "empty_ledger"


class TestCurve:
    def test_two_point_grid(self, client):
        payload = client.get(
            "/v1/curve",
            params={"lower": 10, "upper": 60, "start": 10, "end": 60, "samples": 2},
        ).json()
        assert payload["points"] == [[10.0, 0.0, 1.0], [60.0, 1.0, 0.0]]

    def test_midpoint_of_71_samples(self, client):
        payload = client.get(
            "/v1/curve",
            params={"lower": 10, "upper": 60, "start": 0, "end": 70, "samples": 71},
        ).json()
        assert len(payload["points"]) == 71
        midpoint = payload["points"][35]
        assert midpoint[0] == 35.0
        assert midpoint[1] == 0.5

    def test_defaults_to_frame_bounds(self, client):
        payload = client.get(
            "/v1/curve", params={"lower": 10, "upper": 60, "samples": 3}
        ).json()
        assert [p[0] for p in payload["points"]] == [10.0, 35.0, 60.0]

    def test_toy_table_swp_column(self, client):
        payload = client.get(
            "/v1/curve",
            params={"lower": 33, "upper": 66, "start": 33, "end": 65, "samples": 17},
        ).json()
        from fuzzywinwin import round_percent

        rounded = [round_percent(p[1]) for p in payload["points"]]
        assert rounded == [swp for _, swp, _ in TOY_TABLE]

    def test_invalid_sample_count(self, client):
        response = client.get(
            "/v1/curve", params={"lower": 10, "upper": 60, "samples": 1}
        )
        assert response.status_code == 400
        assert response.json()["error_code"] == "invalid_range"

    def test_reversed_range(self, client):
        response = client.get(
            "/v1/curve",
            params={"lower": 10, "upper": 60, "start": 50, "end": 20, "samples": 5},
        )
        assert response.status_code == 400


class TestStatelessness:
    def test_identical_requests_yield_identical_bytes(self, client, ore_ledger):
        rule, records = ore_ledger
        body = {
            "records": [
                {"label": r.label, "cost_price": r.cost_price,
                 "reference_price": r.reference_price,
                 "settled_price": r.settled_price}
                for r in records
            ]
        }
        first = client.post("/v1/ledger", json=body).content
        client.post("/v1/evaluate", json={"lower": 1, "upper": 2, "value": 1.5})
        second = client.post("/v1/ledger", json=body).content
        assert first == second
