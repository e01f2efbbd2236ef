import pytest
from fastapi.testclient import TestClient

from p3game import FIRST, SECOND, grundy, serialize_graph
from p3game.families import enumerate_connected_graphs
from p3game.service import create_app


@pytest.fixture()
def client():
    return TestClient(create_app())


def create_p3(client, human="first", engine="oracle"):
    r = client.post("/api/games", json={"graph": "0 1\n1 2",
                                        "humanSide": human, "engine": engine})
    assert r.status_code == 201
    return r.json()


class TestLifecycle:
    def test_create_returns_empty_playground(self, client):
        state = create_p3(client)
        assert state["playground"] == [] and state["toMove"] == "first"
        assert state["finished"] is False
        assert state["graph"]["n"] == 3

    def test_family_creation(self, client):
        r = client.post("/api/games", json={
            "family": {"name": "ladder", "params": [3]},
            "humanSide": "second", "engine": "fast"})
        assert r.status_code == 201
        assert r.json()["graph"]["n"] == 6

    def test_get_state_roundtrip(self, client):
        sid = create_p3(client)["id"]
        r = client.get(f"/api/games/{sid}")
        assert r.status_code == 200 and r.json()["id"] == sid

    def test_unknown_session_404(self, client):
        assert client.get("/api/games/zzz").status_code == 404

    def test_disconnected_graph_422(self, client):
        r = client.post("/api/games", json={"graph": "0 1\n2 3"})
        assert r.status_code == 422

    def test_bad_family_400(self, client):
        r = client.post("/api/games", json={"family": {"name": "nope"}})
        assert r.status_code == 400

    def test_non_cb_warning_when_flagged(self, client):
        r = client.post("/api/games", json={
            "family": {"name": "cycle", "params": [6]},
            "chordalBipartiteOnly": True})
        assert r.status_code == 201
        assert r.json()["warnings"]

    def test_families_catalog(self, client):
        rows = client.get("/api/families").json()
        names = {row["name"] for row in rows}
        assert {"path", "cycle", "ladder", "star"} <= names
        assert all("params" in row and "description" in row for row in rows)


class TestMoves:
    def test_fresh_p3_lists_three_moves_midpoint_winning(self, client):
        sid = create_p3(client)["id"]
        moves = client.get(f"/api/games/{sid}/moves").json()
        assert len(moves) == 3
        by_vertex = {m["vertex"]: m for m in moves}
        assert by_vertex[1]["winning"] is True
        assert by_vertex[0]["winning"] is False and by_vertex[2]["winning"] is False

    def test_fresh_edge_both_moves_lose(self, client):
        r = client.post("/api/games", json={"graph": "0 1", "engine": "oracle"})
        moves = client.get(f"/api/games/{r.json()['id']}/moves").json()
        assert len(moves) == 2 and all(m["winning"] is False for m in moves)

    def test_apply_move_closure_and_turn_flip(self, client):
        sid = create_p3(client)["id"]
        r = client.post(f"/api/games/{sid}/moves", json={"vertex": 1})
        state = r.json()
        assert state["playground"] == [1] and state["toMove"] == "second"
        assert state["history"] == [{"side": "first", "vertex": 1, "playground": [1]}]

    def test_finishing_move_sets_loser(self, client):
        r = client.post("/api/games", json={"graph": "0 1\n1 2\n2 3\n0 3",
                                            "engine": "oracle"})
        sid = r.json()["id"]
        client.post(f"/api/games/{sid}/moves", json={"vertex": 0})
        # engine is second; it must reply before the human can fill the square
        client.post(f"/api/games/{sid}/engine-move")
        state = client.get(f"/api/games/{sid}").json()
        if not state["finished"]:
            remaining = [v for v in range(4) if v not in state["playground"]]
            state = client.post(f"/api/games/{sid}/moves",
                                json={"vertex": remaining[0]}).json()
        assert state["finished"] and state["loser"] in (FIRST, SECOND)

    def test_vertex_already_inside_rejected(self, client):
        sid = create_p3(client)["id"]
        client.post(f"/api/games/{sid}/moves", json={"vertex": 1})
        client.post(f"/api/games/{sid}/engine-move")
        r = client.post(f"/api/games/{sid}/moves", json={"vertex": 1})
        assert r.status_code == 400
        assert "already" in r.json()["error"]

    def test_far_vertex_rejected(self, client):
        # human moves second on a 7-path: wherever the engine starts, some
        # path end is more than two steps from the playground
        path7 = "\n".join(f"{i} {i + 1}" for i in range(6))
        r = client.post("/api/games", json={"graph": path7,
                                            "humanSide": "second",
                                            "engine": "oracle"})
        sid = r.json()["id"]
        state = client.post(f"/api/games/{sid}/engine-move").json()["state"]
        far = [v for v in range(7)
               if min(abs(v - p) for p in state["playground"]) > 2]
        assert far
        r = client.post(f"/api/games/{sid}/moves", json={"vertex": far[0]})
        assert r.status_code == 400
        assert "distance" in r.json()["error"]

    def test_out_of_range_vertex_rejected(self, client):
        sid = create_p3(client)["id"]
        r = client.post(f"/api/games/{sid}/moves", json={"vertex": 99})
        assert r.status_code == 400
        assert "out of range" in r.json()["error"]

    def test_wrong_turn_409(self, client):
        sid = create_p3(client, human="second")["id"]
        r = client.post(f"/api/games/{sid}/moves", json={"vertex": 0})
        assert r.status_code == 409

    def test_engine_move_out_of_turn_409(self, client):
        sid = create_p3(client, human="first")["id"]
        r = client.post(f"/api/games/{sid}/engine-move")
        assert r.status_code == 409


class TestEnginePlay:
    def test_edge_game_engine_wins_as_second(self, client):
        r = client.post("/api/games", json={"graph": "0 1", "engine": "oracle"})
        sid = r.json()["id"]
        client.post(f"/api/games/{sid}/moves", json={"vertex": 0})
        r = client.post(f"/api/games/{sid}/engine-move")
        state = r.json()["state"]
        assert state["finished"] and state["loser"] == "first"

    def test_p3_engine_punishes_endpoint(self, client):
        sid = create_p3(client)["id"]
        client.post(f"/api/games/{sid}/moves", json={"vertex": 0})
        r = client.post(f"/api/games/{sid}/engine-move")
        # from {0} the winning reply closes to the full set
        state = r.json()["state"]
        assert state["finished"] and state["loser"] == "first"

    def test_scripted_p3_flow_human_wins_with_midpoint(self, client):
        sid = create_p3(client)["id"]
        moves = client.get(f"/api/games/{sid}/moves").json()
        assert {m["vertex"] for m in moves if m["winning"]} == {1}
        client.post(f"/api/games/{sid}/moves", json={"vertex": 1})
        r = client.post(f"/api/games/{sid}/engine-move")
        state = r.json()["state"]
        assert not state["finished"]
        remaining = [v for v in range(3) if v not in state["playground"]]
        state = client.post(f"/api/games/{sid}/moves",
                            json={"vertex": remaining[0]}).json()
        assert state["finished"] and state["loser"] == "second"

    def test_sessions_are_isolated(self, client):
        sid_a = create_p3(client)["id"]
        sid_b = create_p3(client)["id"]
        client.post(f"/api/games/{sid_a}/moves", json={"vertex": 1})
        assert client.get(f"/api/games/{sid_b}").json()["playground"] == []

    def test_history_replays_to_the_current_state(self, client):
        from p3game import ladder, mask_of, move_closure, vertices_of
        r = client.post("/api/games", json={
            "family": {"name": "ladder", "params": [4]},
            "humanSide": "first", "engine": "fast"})
        sid = r.json()["id"]
        state = client.post(f"/api/games/{sid}/moves", json={"vertex": 0}).json()
        state = client.post(f"/api/games/{sid}/engine-move").json()["state"]
        if not state["finished"]:
            moves = client.get(f"/api/games/{sid}/moves").json()
            state = client.post(f"/api/games/{sid}/moves",
                                json={"vertex": moves[0]["vertex"]}).json()
        g = ladder(4)
        replayed = 0
        for entry in state["history"]:
            replayed = move_closure(g, replayed, entry["vertex"])
            assert list(vertices_of(replayed)) == entry["playground"]
        assert replayed == mask_of(state["playground"])


def _optimal_vertex(moves):
    winning = [m["vertex"] for m in moves if m["winning"]]
    return winning[0] if winning else moves[0]["vertex"]


class TestSelfPlay:
    def test_winning_side_always_wins_small_corpus(self, client):
        # engine-quality play on both sides: the theoretical winner must win
        for n in range(1, 7):
            for g in enumerate_connected_graphs(n):
                theoretical = "first" if grundy(g) != 0 else "second"
                r = client.post("/api/games", json={
                    "graph": serialize_graph(g), "humanSide": "first",
                    "engine": "oracle"})
                sid = r.json()["id"]
                state = r.json()
                while not state["finished"]:
                    if state["toMove"] == "first":
                        moves = client.get(f"/api/games/{sid}/moves").json()
                        state = client.post(
                            f"/api/games/{sid}/moves",
                            json={"vertex": _optimal_vertex(moves)}).json()
                    else:
                        state = client.post(f"/api/games/{sid}/engine-move").json()["state"]
                winner = "first" if state["loser"] == "second" else "second"
                assert winner == theoretical, serialize_graph(g)

    def test_winning_side_always_wins_at_seven_vertices(self):
        # same property one size up, through the session layer directly
        from p3game.service import Session
        for g in enumerate_connected_graphs(7):
            theoretical = "first" if grundy(g) != 0 else "second"
            session = Session(id="x", graph=g, engine_kind="oracle",
                              human_side="first")
            while not session.finished:
                if session.to_move == "first":
                    session.apply(_optimal_vertex(session.move_evals()), "first")
                else:
                    session.engine_move()
            winner = "first" if session.loser == "second" else "second"
            assert winner == theoretical, serialize_graph(g)
