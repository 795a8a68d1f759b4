import json
import random
from concurrent.futures import ThreadPoolExecutor

import pytest
from fastapi.testclient import TestClient

from triaxis import reports
from triaxis.canonical import canonical_dumps
from triaxis.scenario import scenario_from_dict
from triaxis.service import create_app


@pytest.fixture(scope="module")
def client(reference_document):
    return TestClient(create_app(default_document=reference_document))


@pytest.fixture(scope="module")
def bare_client():
    return TestClient(create_app(default_document=None))


class TestBasics:
    def test_health(self, client):
        response = client.get("/health")
        assert response.status_code == 200
        assert response.text == '{"ok":true}'

    def test_archetypes(self, client):
        response = client.get("/v1/archetypes")
        assert response.status_code == 200
        body = response.json()
        assert body["ok"] is True
        assert body["result"] == json.loads(canonical_dumps(reports.archetypes_report()))

    def test_unknown_route_404_envelope(self, client):
        response = client.get("/v1/nonsense")
        assert response.status_code == 404
        body = response.json()
        assert body["ok"] is False
        assert body["error"]["category"] == "not_found"

    def test_content_type_enforced(self, client):
        response = client.post("/v1/score", content=b"{}", headers={"Content-Type": "text/plain"})
        assert response.status_code == 400
        assert response.json()["error"]["category"] == "validation"

    def test_malformed_json_400(self, client):
        response = client.post(
            "/v1/score", content=b"{nope", headers={"Content-Type": "application/json"}
        )
        assert response.status_code == 400

    def test_cors_allows_local_origins(self, client):
        response = client.get("/health", headers={"Origin": "http://localhost:5173"})
        assert response.headers.get("access-control-allow-origin") == "http://localhost:5173"

    def test_cors_allowlist_configurable(self, reference_document):
        app = create_app(
            default_document=reference_document, cors_origins=["https://tools.example"]
        )
        with TestClient(app) as strict_client:
            response = strict_client.get("/health", headers={"Origin": "https://tools.example"})
            assert (
                response.headers.get("access-control-allow-origin") == "https://tools.example"
            )
            response = strict_client.get("/health", headers={"Origin": "http://evil.example"})
            assert "access-control-allow-origin" not in response.headers


class TestScenarioHandling:
    def test_empty_partial_uses_default(self, client, reference_scenario):
        response = client.post("/v1/score", json={})
        assert response.status_code == 200
        expected = json.loads(canonical_dumps(reports.score_report(reference_scenario)))
        assert response.json()["result"] == expected

    def test_partial_merge_overrides_top_level_key(self, client, reference_document):
        override = {"preferences": {"lambda_w": 1, "lambda_a": 0, "lambda_m": 0}}
        response = client.post("/v1/score", json=override)
        merged = scenario_from_dict({**reference_document, **override})
        expected = json.loads(canonical_dumps(reports.score_report(merged)))
        assert response.json()["result"] == expected

    def test_partial_rejected_without_default(self, bare_client):
        response = bare_client.post("/v1/score", json={})
        assert response.status_code == 400
        error = response.json()["error"]
        assert error["category"] == "validation"
        assert "preferences" in error["message"]

    def test_full_document_accepted_without_default(self, bare_client, reference_document):
        response = bare_client.post("/v1/score", json=reference_document)
        assert response.status_code == 200

    def test_validation_error_carries_field_path(self, client):
        response = client.post(
            "/v1/score", json={"preferences": {"lambda_w": 2, "lambda_a": 0, "lambda_m": 0}}
        )
        assert response.status_code == 400
        error = response.json()["error"]
        assert error["field_path"].startswith("preferences")


class TestEndpoints:
    def test_simulate_requires_plan_when_ambiguous(self, client):
        response = client.post("/v1/simulate", json={})
        assert response.status_code == 400
        assert "plan" in response.json()["error"]["message"]

    def test_simulate_with_plan(self, client, reference_scenario):
        response = client.post("/v1/simulate?plan=steady_build", json={})
        assert response.status_code == 200
        expected = json.loads(
            canonical_dumps(reports.simulate_report(reference_scenario, "steady_build"))
        )
        assert response.json()["result"] == expected

    def test_simulate_single_plan_defaults(self, bare_client, reference_document):
        doc = dict(reference_document)
        doc["plans"] = {"only": reference_document["plans"]["steady_build"]}
        doc.pop("strategy")  # references plans only inline, keep it simple
        response = bare_client.post("/v1/simulate", json=doc)
        assert response.status_code == 200
        assert response.json()["result"]["plan"] == "only"

    def test_satisfice_feasible(self, client, reference_scenario):
        response = client.post("/v1/satisfice", json={})
        assert response.status_code == 200
        expected = json.loads(canonical_dumps(reports.satisfice_report(reference_scenario)))
        assert response.json()["result"] == expected

    def test_satisfice_empty_is_422_with_advice(self, client):
        response = client.post(
            "/v1/satisfice", json={"thresholds": {"w_min": 95, "a_min": 80, "m_min": 5}}
        )
        assert response.status_code == 422
        error = response.json()["error"]
        assert error["category"] == "infeasible"
        advice = error["detail"]["relaxation"]["advice"]
        assert advice["axis"] == "w"
        assert advice["required_threshold"] == 60

    def test_strategy(self, client, reference_scenario):
        response = client.post("/v1/strategy", json={})
        assert response.status_code == 200
        expected = json.loads(canonical_dumps(reports.strategy_report(reference_scenario)))
        assert response.json()["result"] == expected

    def test_options_requires_params(self, client):
        response = client.post("/v1/options", json={})
        assert response.status_code == 400

    def test_options(self, client, reference_scenario):
        response = client.post(
            "/v1/options?specialized=specialist_track&generalized=explorer_track", json={}
        )
        assert response.status_code == 200
        expected = json.loads(
            canonical_dumps(
                reports.options_report(reference_scenario, "specialist_track", "explorer_track")
            )
        )
        assert response.json()["result"] == expected

    def test_household(self, client, reference_scenario):
        response = client.post("/v1/household", json={})
        assert response.status_code == 200
        expected = json.loads(canonical_dumps(reports.household_report(reference_scenario)))
        assert response.json()["result"] == expected

    def test_household_missing_section(self, bare_client):
        response = bare_client.post(
            "/v1/household",
            json={
                "preferences": {"lambda_w": 1, "lambda_a": 0, "lambda_m": 0},
                "initial_state": {"w": 1, "a": 1, "m": 1},
            },
        )
        assert response.status_code == 400
        assert "household" in response.json()["error"]["message"]


class TestStatelessness:
    REQUESTS = [
        ("POST", "/v1/score", {}),
        ("POST", "/v1/frontier", {}),
        ("POST", "/v1/simulate?plan=steady_build", {}),
        ("POST", "/v1/simulate?plan=premature_freelance", {}),
        ("POST", "/v1/satisfice", {}),
        ("POST", "/v1/strategy", {}),
        ("POST", "/v1/options?specialized=specialist_track&generalized=explorer_track", {}),
        ("POST", "/v1/household", {}),
        ("GET", "/v1/archetypes", None),
        ("POST", "/v1/score", {"preferences": {"lambda_w": 1, "lambda_a": 0, "lambda_m": 0}}),
        ("POST", "/v1/satisfice", {"thresholds": {"w_min": 95, "a_min": 80, "m_min": 5}}),
    ]

    def _issue(self, client, request):
        method, path, body = request
        if method == "GET":
            return client.get(path)
        return client.post(path, json=body)

    def test_responses_byte_identical_for_identical_requests(self, client):
        for request in self.REQUESTS:
            first = self._issue(client, request)
            second = self._issue(client, request)
            assert first.content == second.content
            assert first.status_code == second.status_code

    def test_shuffled_replay_order_independent(self, client):
        baseline = [self._issue(client, request).content for request in self.REQUESTS]
        rng = random.Random(5)
        for _ in range(4):
            order = list(range(len(self.REQUESTS)))
            rng.shuffle(order)
            for i in order:
                assert self._issue(client, self.REQUESTS[i]).content == baseline[i]

    def test_concurrent_replays_stable(self, client):
        baseline = [self._issue(client, request).content for request in self.REQUESTS]

        def replay(seed):
            order = list(range(len(self.REQUESTS)))
            random.Random(seed).shuffle(order)
            return [(i, self._issue(client, self.REQUESTS[i]).content) for i in order]

        with ThreadPoolExecutor(max_workers=8) as pool:
            for results in pool.map(replay, range(16)):
                for i, content in results:
                    assert content == baseline[i]
