"""Drive the play service end to end, in process.

The HTTP API is the boundary the browser client uses: create a game,
read evaluated moves, submit clicks, ask for engine replies.  Here we
play the 3-path perfectly and watch the engine lose.
"""

from fastapi.testclient import TestClient

from p3game.service import create_app

client = TestClient(create_app())

print("available families:")
for fam in client.get("/api/families").json():
    print(f"  {fam['name']:20s} params {fam['params']}  {fam['description']}")

print()
state = client.post("/api/games", json={
    "graph": "0 1\n1 2", "humanSide": "first", "engine": "oracle"}).json()
sid = state["id"]
print("new 3-path game, playground", state["playground"], "to move:", state["toMove"])

moves = client.get(f"/api/games/{sid}/moves").json()
for m in moves:
    tag = "winning" if m["winning"] else "losing"
    print(f"  move {m['vertex']} -> playground {m['playground']} ({tag})")

print()
print("human plays the midpoint (the unique winning move)")
state = client.post(f"/api/games/{sid}/moves", json={"vertex": 1}).json()
print("  playground:", state["playground"], "to move:", state["toMove"])

reply = client.post(f"/api/games/{sid}/engine-move").json()
print("engine replies with vertex", reply["vertex"],
      "-> playground", reply["state"]["playground"])

state = reply["state"]
last = [v for v in range(3) if v not in state["playground"]][0]
state = client.post(f"/api/games/{sid}/moves", json={"vertex": last}).json()
print("human fills the last vertex ->", state["playground"])
print("finished:", state["finished"], " loser:", state["loser"],
      " (the engine, as theory demands)")
