import json

import pytest

from k10.autos import ToralParam
from k10.catalog import (TRIVIAL, AutGenerator, HomGenerator, UnknownEntry, build_catalog,
                         classify_cyclic, classify_cyclic_detail, cyclic_scan, export_catalog,
                         fingerprint, generate, get_entry, kaplansky_weight_grading,
                         nontoral_eigenvalue_check, toral_eigen_grading, verify_entry,
                         verify_kaplansky_catalog)
from k10.gradelib import (AbGroup, Grading, grading_type, is_refinement, same_components,
                          tensor_algebra, verify_grading)
from k10.linalg import Subspace

TYPES = [(8, 1), (2, 2, 0, 1), (0, 0, 0, 1, 0, 1), (0, 0, 2, 1), (0, 3, 0, 1), (0, 0, 2, 1),
         (0, 0, 0, 1, 0, 1), (2, 4), (0, 2, 2), (6, 2), (2, 4), (4, 3), (0, 5), (0, 3, 0, 1), (4, 3),
         (7, 0, 1), (5, 1, 1), (0, 2, 2), (0, 0, 0, 0, 2), (1, 2, 0, 0, 1), (3, 2, 1)]

GROUPS = ["Z x Z", "Z", "Z2", "Z3", "Z4", "Z", "Z2", "Z2 x Z", "Z4", "Z2 x Z", "Z6", "Z", "Z5",
          "Z2 x Z2", "Z4 x Z2", "Z x Z2", "Z4 x Z2", "Z2 x Z2", "Z2", "Z4", "Z6"]


def span(*names):
    alg = tensor_algebra()
    return Subspace([alg.vector(n) for n in names], alg.dim)


def test_catalog_shape():
    entries = build_catalog()
    assert [e.id for e in entries] == list(range(1, 22))
    assert [str(e.group) for e in entries] == GROUPS
    assert [e.expected_type for e in entries] == TYPES
    assert [e.id for e in entries if e.toral] == list(range(1, 16))
    assert [e.id for e in entries if e.fine] == [1, 16]
    assert all(isinstance(e.generator, HomGenerator) for e in entries[:15])
    assert all(isinstance(e.generator, AutGenerator) for e in entries[15:])
    for e in entries:
        assert sum(s.dim for s in e.expected_subspaces().values()) == 10


def test_generator_examples():
    assert get_entry(11).generator.hom((1, 0)) == (2,)
    assert get_entry(9).generator.hom((-1, -1)) == (1,)
    h1 = get_entry(1).generator.hom
    assert h1.images == ((1, 0), (0, 1))


def test_unknown_entry():
    with pytest.raises(UnknownEntry):
        get_entry(22)
    with pytest.raises(UnknownEntry):
        get_entry(0)


@pytest.mark.parametrize("eid", range(1, 22))
def test_every_entry_verifies(eid):
    rep = verify_entry(eid)
    assert rep.passed, [(d.item, d.expected, d.actual) for d in rep.failures()]
    g = generate(eid)
    assert grading_type(g) == TYPES[eid - 1]
    assert verify_grading(g).passed


def test_entry_examples():
    g16 = generate(16)
    assert g16.component((0, 0)) == span("1", "e⊗e", "x⊗y-y⊗x")
    assert g16.component((2, 1)) == span("x⊗x")
    g20 = generate(20)
    assert g20.component((2,)) == span("x⊗y+y⊗x")
    g3 = generate(3)
    assert g3.component((0,)) == span("1", "e⊗e", "x⊗x", "x⊗y", "y⊗x", "y⊗y")
    assert g3.component((1,)) == span("e⊗x", "x⊗e", "e⊗y", "y⊗e")


def test_entry_17_printed_label_is_inconsistent():
    entry = get_entry(17)
    assert entry.errata == {(2, 0): (2, 1)}
    printed = Grading(tensor_algebra(), entry.group, entry.expected_subspaces(entry.verbatim_components))
    g = generate(17)
    assert printed.component((2, 0)) == span("x⊗x", "y⊗y")
    assert g.component((2, 0)).dim == 0
    assert g.component((2, 1)) == span("x⊗x", "y⊗y")
    assert printed.components != g.components
    # the printed labelling is not even a grading: x⊗x * y⊗x lands in label (3,1)
    assert not verify_grading(printed).passed


def test_oracle_equivalence_for_toral_entries():
    for eid in range(1, 16):
        eig = toral_eigen_grading(eid)
        assert eig.component_set() == generate(eid).component_set(), eid


def test_nontoral_entries_are_not_coarsenings_of_the_torus():
    fine = generate(1)
    for eid in range(16, 22):
        assert not is_refinement(fine, generate(eid))


@pytest.mark.parametrize("beta, entry", [("1/1", 19), ("1/2", 19), ("1/4", 20), ("3/4", 20),
                                         ("1/3", 21), ("1/6", 21), ("1/5", 16), ("1/8", 16)])
def test_nontoral_eigenvalues(beta, entry):
    rep = nontoral_eigenvalue_check(beta)
    assert rep.passed, [(d.item, d.expected, d.actual) for d in rep.failures()]
    assert [d.actual for d in rep.details if d.item == "equivalent catalog entry"] == [entry]


def test_refinement_poset():
    for eid in (16, 17, 18):
        assert is_refinement(generate(eid), generate(19))
        assert not is_refinement(generate(19), generate(eid))
    assert is_refinement(generate(14), generate(3))
    assert is_refinement(generate(15), generate(5))
    for eid in range(1, 16):
        assert is_refinement(generate(1), generate(eid))
    for top in (1, 16):
        for eid in range(1, 22):
            if eid != top:
                g = generate(eid)
                assert not (is_refinement(g, generate(top)) and not same_components(g, generate(top)))


def test_fingerprints_are_distinct():
    prints = [fingerprint(generate(eid)) for eid in range(1, 22)]
    assert len(set(prints)) == 21


def test_classify_examples():
    assert classify_cyclic(ToralParam.parse("1/3", "1/3")) == 4
    assert classify_cyclic(ToralParam.parse("1/5", "2/5")) == 13
    assert classify_cyclic(ToralParam.parse("1/1", "1/1")) == TRIVIAL
    assert classify_cyclic(ToralParam.parse("1/4", "1/4")) == 5
    assert classify_cyclic(ToralParam.parse("1/2", "1/1")) == 7
    assert classify_cyclic(ToralParam.parse("1/2", "1/2")) == 3


def test_classify_is_constant_on_weyl_orbits():
    a = classify_cyclic_detail(ToralParam.parse("1/5", "2/5"))
    b = classify_cyclic_detail(ToralParam.parse("2/5", "4/5"))
    assert a.entry == b.entry == 13
    assert a.eigen_group.invariants() == (0, (5,))


def test_classify_rejects_orders_outside_60():
    with pytest.raises(ValueError):
        classify_cyclic(ToralParam.parse("1/8", "1/1"))


def test_small_cyclic_scan():
    hist = cyclic_scan(12)
    assert sum(hist.values()) == 144
    assert set(hist) <= set(range(0, 14))
    assert hist[TRIVIAL] == 1


def test_kaplansky_catalog():
    reports = verify_kaplansky_catalog(12)
    assert [r.passed for r in reports] == [True, True]
    g = kaplansky_weight_grading()
    k = g.algebra
    assert g.component((-1,)) == Subspace([k.vector("x")], 3)
    assert g.component((1,)) == Subspace([k.vector("y")], 3)


def test_export_is_deterministic_json():
    text = export_catalog()
    assert text == export_catalog()
    data = json.loads(text)
    assert len(data["entries"]) == 21
    e16 = data["entries"][15]
    assert e16["expected_type"] == [7, 0, 1]
    zero = [c for c in e16["components"] if c["label"] == [0, 0]]
    assert zero[0]["named"] == ["1", "e⊗e", "x⊗y-y⊗x"]
    assert zero[0]["vectors"][2] == ["0", "0", "0", "1", "-1", "0", "0", "0", "0", "0"]
    assert data["entries"][16]["errata"] == [{"printed": [2, 0], "corrected": [2, 1]}]
    assert len(data["kaplansky"]) == 2


def test_group_labels_match_eigenvalue_groups_for_cyclic_entries():
    for eid, n in ((3, 2), (4, 3), (5, 4), (9, 4), (11, 6), (13, 5)):
        g = toral_eigen_grading(eid)
        assert g.group.subgroup(g.support).invariants() == AbGroup((n,)).invariants()
