import json

import pytest

import clawcycle as cc


def test_vertex_set_round_trip():
    s = cc.VertexSet(4, [0, 1, 2, 4, 6, 8, 10, 12, 14])
    assert len(s) == 9
    assert 6 in s and 3 not in s
    assert cc.VertexSet.from_hex(4, s.hex()) == s
    assert cc.parse_set(s.binary(), 4, "binary") == s
    assert cc.neighbors(0, 3) == [1, 2, 4]
    assert cc.adjacent(0, 4, 3)


def test_split_embed():
    s = cc.VertexSet(3, [0, 3, 5, 6])
    lo, hi = cc.split(s, 1)
    assert lo.n == 2
    assert sorted(cc.embed(lo, 1, 0).labels() + cc.embed(hi, 1, 1).labels()) == s.labels()


def test_witnesses():
    s = cc.VertexSet.from_hex(4, "5557")
    w = cc.find_theorem_witness(s)
    assert w is not None and cc.check_witness(w, s)
    w2, trace = cc.find_witness_inductive(s)
    assert cc.check_witness(w2, s)
    assert trace.base == "brute force"
    w3, case_id = cc.base_case_solve_structured(s)
    assert case_id == 1 and w3.kind == "claw"

    big = cc.VertexSet(6, list(range(0, 64, 2)) + [1])
    w4, trace4 = cc.find_witness_inductive(big)
    assert cc.check_witness(w4, big)
    assert [st.dim for st in trace4.steps] == [6, 5]


def test_induced_cycle():
    # Complement of an antipodal pair in Q_3 is an induced 6-cycle.
    s = cc.VertexSet(3, [1, 2, 3, 4, 5, 6])
    assert cc.find_claw(s) is None
    cyc = cc.find_induced_cycle(s, 6)
    assert cyc.kind == "cycle" and sorted(cyc.cycle) == s.labels()


def test_errors():
    with pytest.raises(cc.InsufficientCardinality):
        cc.find_witness_inductive(cc.VertexSet.from_hex(4, "00FF"))
    with pytest.raises(cc.ClawcycleError):
        cc.VertexSet(3, [8])
    with pytest.raises(ValueError):
        cc.parse_set("0102", 3, "binary")


def test_verification():
    r = cc.verify_proposition_exhaustive()
    assert r.ok() and r.universe_size == 28
    assert json.loads(r.to_json())["check_name"] == r.check_name
    t = cc.verify_theorem_exhaustive(4, 9, workers=2)
    assert t.passed == 11440 and t.failed == 0
    e = cc.extremal_search(3, 6)
    assert e.max_size == 5
    assert cc.find_claw(e.certificate) is None
