import pytest
from fastapi.testclient import TestClient

from lamina.lamgen import rational
from lamina.main import app
from lamina.schemas import LanguageFile


@pytest.fixture
def client():
    return TestClient(app)


def language_json(w, horizon):
    return LanguageFile.from_language(rational(w, horizon)).model_dump()


RIGHT_MULTIPLICATION = {"images": {"a": "ab", "b": "b"}, "inverse": {"a": "aB", "b": "b"}}


def test_root(client):
    response = client.get("/")
    assert response.status_code == 200
    assert response.json() == {"message": "Laminations on free groups api"}


class TestLanguages:
    def test_make(self, client):
        response = client.post(
            "/languages/make",
            json={"recipe": {"kind": "rational", "word": "ab"}, "horizon": 2},
        )
        assert response.status_code == 200
        data = response.json()
        assert data["exact"]
        assert data["alphabet"] == ["a", "b"]
        assert data["words"] == ["a", "A", "b", "B", "ab", "AB", "ba", "BA"]

    def test_make_rejects_a_bad_recipe(self, client):
        response = client.post(
            "/languages/make",
            json={"recipe": {"kind": "subst", "rules": "a:ab,b:b", "seed": "a"}, "horizon": 3},
        )
        assert response.status_code == 400
        assert "primitive" in response.json()["detail"]

    def test_missing_recipe_field(self, client):
        response = client.post(
            "/languages/make", json={"recipe": {"kind": "rational"}, "horizon": 2}
        )
        assert response.status_code == 422

    def test_chop(self, client):
        response = client.post(
            "/languages/chop", json={"language": language_json("ab", 5), "k": 1}
        )
        assert response.status_code == 200
        assert response.json()["horizon"] == 3

    def test_chop_past_the_horizon(self, client):
        response = client.post(
            "/languages/chop", json={"language": language_json("ab", 3), "k": 2}
        )
        assert response.status_code == 400

    def test_distance(self, client):
        response = client.post(
            "/languages/distance",
            json={"left": language_json("a", 5), "right": language_json("b", 5)},
        )
        assert response.status_code == 200
        assert response.json() == {"value": 1.0, "agreement": 0, "capped": False}

    def test_check(self, client):
        response = client.post(
            "/languages/check", json={"language": language_json("ab", 6), "m": 1}
        )
        assert response.json() == {"laminary": True, "positive": True, "gap": 2}

    def test_approximant(self, client):
        response = client.post(
            "/languages/approximant", json={"language": language_json("a", 6), "m": 1}
        )
        assert response.status_code == 200
        assert set(response.json()["approximant"]) == {"a"}

    def test_approximant_needs_m(self, client):
        response = client.post(
            "/languages/approximant", json={"language": language_json("a", 6)}
        )
        assert response.status_code == 400

    def test_rauzy(self, client):
        response = client.post(
            "/languages/rauzy", json={"language": language_json("ab", 3), "k": 1}
        )
        data = response.json()
        assert (data["nodes"], data["edges"]) == (4, 4)
        assert data["dot"].startswith("digraph")


class TestAutomorphisms:
    def test_describe(self, client):
        response = client.post("/automorphisms/describe", json=RIGHT_MULTIPLICATION)
        assert response.json() == {
            "description": "a:ab,b:b",
            "norm": 2,
            "conorm": 2,
            "generators": ["a", "b"],
        }

    def test_describe_rejects_a_wrong_inverse(self, client):
        response = client.post(
            "/automorphisms/describe",
            json={"images": {"a": "ab", "b": "b"}, "inverse": {"a": "ab", "b": "b"}},
        )
        assert response.status_code == 400

    def test_act(self, client):
        response = client.post(
            "/automorphisms/act",
            json={
                "automorphism": RIGHT_MULTIPLICATION,
                "language": language_json("a", 28),
                "n": 3,
            },
        )
        assert response.status_code == 200
        assert response.json()["words"] == LanguageFile.from_language(rational("ab", 3)).words

    def test_act_needs_a_deep_enough_language(self, client):
        response = client.post(
            "/automorphisms/act",
            json={
                "automorphism": RIGHT_MULTIPLICATION,
                "language": language_json("a", 10),
                "n": 3,
            },
        )
        assert response.status_code == 400
        assert "horizon" in response.json()["detail"]

    def test_act_needs_an_inverse(self, client):
        response = client.post(
            "/automorphisms/act",
            json={
                "automorphism": {"images": {"a": "ab", "b": "b"}},
                "language": language_json("a", 28),
                "n": 3,
            },
        )
        assert response.status_code == 400

    def test_source_horizon(self, client):
        response = client.post(
            "/automorphisms/source-horizon",
            json={
                "automorphism": RIGHT_MULTIPLICATION,
                "language": language_json("a", 2),
                "n": 3,
            },
        )
        assert response.json() == {"n": 3, "horizon": 28}

    def test_bbt(self, client):
        response = client.post(
            "/automorphisms/bbt",
            json={"automorphism": RIGHT_MULTIPLICATION, "k_max": 5, "window": 2},
        )
        data = response.json()
        assert data["lower"] == 1
        assert data["stabilized"]
        assert data["history"] == [1] * 5


class TestRepro:
    def test_notdense(self, client):
        response = client.post("/repro/notdense", json={"n": 2, "max_len": 3})
        assert response.status_code == 200
        assert response.json()["all_fail"]

    def test_limitset(self, client):
        response = client.post(
            "/repro/limitset",
            json={"recipe": {"kind": "subst", "rules": "a:ab,b:a", "seed": "a"}, "m_max": 2},
        )
        assert response.json()["passed"]

    def test_fixedpoint(self, client):
        response = client.post(
            "/repro/fixedpoint", json={"trials": 2, "nielsen_len": 2, "seed": 3}
        )
        data = response.json()
        assert data["passed"]
        assert data["seed"] == 3
        assert len(data["rows"]) == 2
