import lrcone


def test_catalog():
    assert lrcone.catalog() == ["diag:<spec>", "sym2:<n>", "wedge2:<n>", "tensor:<p>x<q>"]
    assert "diag:A1" in lrcone.desk_catalog()
    assert len(lrcone.desk_catalog()) == 6


def test_enumerate_clebsch_gordan():
    sample = lrcone.enumerate_sample("diag:A1", 2)
    assert len(sample["points"]) == 14
    points = {(tuple(p["mu"]), tuple(p["nuhat"])) for p in sample["points"]}
    assert ((0,), (1, 1)) in points
    assert ((2,), (1, 1)) in points
    pts, saturated = lrcone.enumerate_points("diag:A1", 0)
    assert pts == [((0,), (0, 0), 1)]
    assert not saturated


def test_delta_pipelines_agree():
    d = lrcone.delta_direct("diag:A1", "", 4)
    assert d["delta"] == 1 and d["saturated"]
    assert lrcone.delta_theoretical("diag:A1", "") == 1
    assert lrcone.delta_direct("diag:A1", "full", 4)["delta"] == 0
    assert lrcone.delta_theoretical("diag:A1", "full") == 0


def test_representation_helpers():
    assert lrcone.weyl_dim("A2", [1, 1]) == 8
    dec = lrcone.tensor_decompose("A1", [1], [1])
    assert dec == {(0,): 1, (2,): 1}
    ch = lrcone.freudenthal_character("A1", [2])
    assert ch == {(-2,): 1, (0,): 1, (2,): 1}
    fiber = lrcone.branch("sym2:2", [1, 0])
    assert fiber == {(2,): 1}


def test_geometry_helpers():
    assert lrcone.dim_c_dual("sym2:2") == 0
    assert lrcone.paper_flag_stabilizer_dim("sym2:2") == 0
    full, has_witness = lrcone.all_faces_full("sym2:2")
    assert full and has_witness
    slice_pts = lrcone.moment_polytope_slice("diag:A1", [1, 1], 2)
    assert [p[0] for p in slice_pts] == ["0", "1", "2"]


def test_enumeration_is_deterministic():
    a = lrcone.enumerate_json("diag:A1", 2)
    b = lrcone.enumerate_json("diag:A1", 2)
    assert a == b
