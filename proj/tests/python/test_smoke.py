import pytest

import pbci


def test_example_profile():
    a = pbci.Algebra.example()
    assert a.size == 6
    assert pbci.is_pseudo_bci(a)
    assert not pbci.is_pseudo_bck(a)
    assert pbci.integral_part(a) == ["a", "b", "1"]
    assert pbci.group_part(a) == ["g", "1"]
    assert a.arrow("g", "a") == "y" and a.squig("g", "a") == "x"
    r = pbci.decompose(a)
    assert not r["g_filter"]
    assert not r["decomposable"]
    assert r["condition_12"]["witness"] == ["g", "a"]
    assert r["triad_agrees"]


def test_round_trip():
    a = pbci.Algebra.example()
    assert pbci.Algebra.parse(a.format()) == a
    d = pbci.dagger(a)
    assert pbci.dagger(d) == a


def test_dihedral_lattices():
    d4 = pbci.Algebra.example("d4")
    assert len(pbci.prefilters(d4)) == 10
    assert len(pbci.filters(d4)) == 6
    assert not pbci.lattice_identities(d4, "prefilters")["modular"]
    assert pbci.lattice_identities(d4, "filters")["modular"]


def test_search_counts():
    assert [len(pbci.enumerate(n)) for n in range(1, 5)] == [1, 2, 5, 25]
    assert len(pbci.enumerate(4, "pbck")) == 17
    assert "g-not-filter" in pbci.predicates()
    hit = pbci.find_counterexample(3, predicate="g-not-filter")
    assert hit is not None and not pbci.decompose(hit)["g_filter"]


def test_embedding_and_congruences():
    a = pbci.Algebra.example()
    e = pbci.embed(a)
    assert e["injective"] and e["homomorphism"] and e["report"] == []
    assert len(pbci.relative_congruences(a)) == len(pbci.filters(a))


def test_errors():
    with pytest.raises(ValueError):
        pbci.Algebra.parse("elements: 1 a\n")
    with pytest.raises(ValueError):
        pbci.enumerate(0)
    with pytest.raises(pbci.CapExceeded):
        pbci.enumerate(50)
    with pytest.raises(ValueError):
        pbci.Algebra.example("nope")
