"""Drive the session HTTP API end to end, in process.

Create a project, answer the guided questions level by level, pull a
ranking, then evaluate a hypothetical data fix without touching the
stored baseline.
"""
from common import india_problem
from fastapi.testclient import TestClient

from somit.io import problem_to_dict
from somit.service import create_app

client = TestClient(create_app())

created = client.post("/v1/projects", json=problem_to_dict(india_problem()))
pid = created.json()["id"]
print(f"project {pid} with levels {sorted(created.json()['levels'])}")

answers = {
    "groups": ("Environmental",
               [("Financial", "4"), ("Technical", "3"), ("Social", "1/2")], "2"),
    "Financial": ("C2", [("C1", "1.5"), ("C3", "0.8")], "1.3"),
    "Technical": ("C4", [("C5", "1"), ("C6", "1")], "1"),
    "Environmental": ("C7", [("C8", "1")], None),
    "Social": ("C9", [("C10", "1")], None),
}
for level, (median, comparisons, extreme) in answers.items():
    url = f"/v1/projects/{pid}/sessions/{level}/comparisons"
    client.post(url, json={"kind": "median", "item": median})
    for item, value in comparisons:
        last = client.post(url, json={"kind": "comparison", "item": item,
                                      "value": value})
    if extreme is not None:
        last = client.post(url, json={"kind": "extreme", "value": extreme})
    state = last.json()
    if "level_weights" in state:
        weights = state["level_weights"]["weights"]
        print(f"level {level}: {[round(w, 4) for w in weights]}")

ranking = client.get(f"/v1/projects/{pid}/ranking?round4=true").json()
print("\nbaseline order:", ranking["order"])

delta = client.post(f"/v1/projects/{pid}/whatif", json={
    "scenario": {"edits": [{"kind": "cell", "alternative": "Solar",
                            "criterion": "C7", "value": 480}]},
}).json()
print(f"what-if (Solar emissions cell -> 480): "
      f"aafd {delta['aafd_w'] * 100:.2f}%, "
      f"order changed: {delta['order_changed']}")
print("candidate order:", delta["candidate"]["order"])
print("stored project is untouched; revision:", delta["revision"])
