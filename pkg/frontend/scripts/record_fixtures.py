"""Record real service responses as test fixtures for the frontend.

Run from the repository root:  python3 frontend/scripts/record_fixtures.py

Session ids are normalized to stable names so re-recording only changes
fixtures when payloads actually change. Frontend tests replay these
fixtures through a fake client, which keeps the byte-for-byte contract
between displayed strings and service output honest.
"""

import json
import pathlib
import sys

from fastapi.testclient import TestClient

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[2] / "src"))

from clusterglue.service import create_app  # noqa: E402

ROOT = pathlib.Path(__file__).resolve().parents[2]
OUT = ROOT / "frontend" / "tests" / "fixtures"


def main() -> None:
    OUT.mkdir(parents=True, exist_ok=True)
    client = TestClient(create_app())
    left = json.loads((ROOT / "seeds" / "path_left.json").read_text())
    right = json.loads((ROOT / "seeds" / "path_right.json").read_text())
    right_deg2 = json.loads(json.dumps(right))
    for v in right_deg2["variables"]:
        v["degree"] = 2

    ids: dict[str, str] = {}

    def stable(payload):
        if isinstance(payload, dict):
            return {k: stable(v) for k, v in payload.items()}
        if isinstance(payload, list):
            return [stable(v) for v in payload]
        if isinstance(payload, str) and payload in ids:
            return ids[payload]
        return payload

    def save(name: str, payload) -> None:
        (OUT / name).write_text(
            json.dumps(stable(payload), sort_keys=True, indent=2) + "\n"
        )

    save("doc_left.json", left)
    save("doc_right.json", right)
    save("doc_right_deg2.json", right_deg2)

    r = client.post("/sessions", json={"seeds": [left]})
    assert r.status_code == 201, r.text
    ids[r.json()["session"]] = "session-left"
    save("create_left.json", r.json())
    left_sid = r.json()["session"]

    r = client.post("/sessions", json={"seeds": [right]})
    assert r.status_code == 201
    ids[r.json()["session"]] = "session-right"
    save("create_right.json", r.json())
    right_sid = r.json()["session"]

    r = client.post("/sessions", json={"seeds": [right_deg2]})
    assert r.status_code == 201
    ids[r.json()["session"]] = "session-right-deg2"
    deg2_sid = r.json()["session"]

    r = client.post(
        "/glue-preview",
        json={
            "left_session": left_sid,
            "right_session": right_sid,
            "left_vertex": "x3",
            "right_vertex": "y3",
        },
    )
    assert r.status_code == 200
    save("glue_preview_ok.json", r.json())

    r = client.post(
        "/glue-preview",
        json={
            "left_session": left_sid,
            "right_session": deg2_sid,
            "left_vertex": "x3",
            "right_vertex": "y3",
        },
    )
    assert r.status_code == 422, r.text
    save("glue_preview_mismatch.json", r.json())

    r = client.post(
        "/sessions",
        json={"seeds": [left, right], "glue": {"left": "x3", "right": "y3"}},
    )
    assert r.status_code == 201
    ids[r.json()["session"]] = "session-glued"
    glued_sid = r.json()["session"]
    save("create_glued.json", r.json())

    r = client.post(f"/sessions/{glued_sid}/mutate", json={"vertex": "x1"})
    assert r.status_code == 200
    save("glued_mutate_x1.json", r.json())

    r = client.post(f"/sessions/{glued_sid}/mutate", json={"vertex": "x1"})
    assert r.status_code == 200
    save("glued_mutate_x1_x1.json", r.json())

    r = client.post(f"/sessions/{glued_sid}/undo")
    assert r.status_code == 200
    save("glued_undo.json", r.json())

    r = client.post(f"/sessions/{glued_sid}/mutate", json={"vertex": "z"})
    assert r.status_code == 409
    save("mutate_frozen_conflict.json", r.json())

    # reset to the initial glued state before verifying
    client.post(f"/sessions/{glued_sid}/undo")
    r = client.post(f"/sessions/{glued_sid}/verify", json={"kind": "theorem", "depth": 4})
    assert r.status_code == 200
    save("verify_theorem.json", r.json())

    r = client.post(f"/sessions/{glued_sid}/verify", json={"kind": "corollary"})
    assert r.status_code == 200
    save("verify_corollary.json", r.json())

    print(f"wrote fixtures to {OUT}")


if __name__ == "__main__":
    main()
