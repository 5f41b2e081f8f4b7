"""Smoke test for the quadfano Python bindings.

Build first:  pip install --no-build-isolation -e crates/quadfano-py
"""

import json
import sys

import quadfano_py as q


def main() -> int:
    c = q.classify(0, 8, "cubic_section", has_4secant_line=False, has_7secant_conic=False)
    assert c.verdict == "weak_fano" and c.exit_code == 0, c
    assert q.classify(10, 11).verdict == "not_weak_fano"
    c = q.classify(0, 6, "quadric_section")
    assert c.verdict == "insufficient_data" and c.missing == ["has_4secant_line"]
    assert json.loads(c.to_json())["n_max"] == 1

    assert [q.genus_bound_b(d) for d in (7, 12, 14, 16)] == [4, 11, 16, 21]
    assert q.nmax(0, 8) == (3, 2)
    assert q.nmax(1, 6) == (1, 0)

    s = q.Lattice.k3_rank3(4, 9, 2, 7)
    h, cc, gamma = (s.class_(v) for v in ([1, 0, 0], [0, 1, 0], [0, 0, 1]))
    d = s.class_([2, -1, -1])
    assert [h.intersect(d), d.intersect(d), cc.intersect(d), gamma.intersect(d)] == [1, -2, 5, -1]
    assert str(d) == "2H-C-Γ"

    records = q.catalog()
    assert len(records) == 38
    assert all(r.minus_k_cubed == 52 - 6 * r.d + 2 * r.g for r in records)

    table = json.loads(q.table("dp4"))
    assert len(table["rows"]) == 16
    assert q.audit()
    print("python smoke: ok")
    return 0


if __name__ == "__main__":
    sys.exit(main())
