import json

import pytest

from synorres.algebra import DomainError, Monomial, RationalField
from synorres.corpus import ideal_powers, random_ideal
from synorres.poset import build_lcm_lattice, enumerate_lattices
from synorres.resolution import betti_from_intervals
from synorres.verify import (DecompositionWitness, TheoremContradiction,
                             TopAnalysis, check_class_sums,
                             check_shift_count_bound, check_subadditivity,
                             decompose_top_bruteforce,
                             decompose_top_constructive, sweep_lattices,
                             verify_interval_decomposition, verify_intervals,
                             verify_lattice_instances, verify_step_lemma)

QQ = RationalField()


def boolean_ideal(n):
    """Square-free power ideal: its lattice is the boolean cube."""
    return build_lcm_lattice(
        [Monomial(tuple(1 if i == j else 0 for j in range(n)))
         for i in range(n)],
        tuple(f"x{i+1}" for i in range(n)))


def test_valid_triples_example62(example62_lattice):
    ana = TopAnalysis(example62_lattice, QQ)
    assert ana.middle_ranks() == {-1: 0, 0: 1, 1: 0, 2: 0, 3: 1}
    triples = ana.valid_triples()
    assert len(triples) == 23
    assert (1, 1, 0) in triples and (5, 5, 5) in triples
    assert all(i1 + i2 - k in (2, 5) for i1, i2, k in triples)


def test_bruteforce_on_boolean_cube():
    L = boolean_ideal(3)
    ana = TopAnalysis(L, QQ)
    # the cube's top is a 3-synor only
    assert [m for m, r in ana.middle_ranks().items() if r] == [1]
    w = ana.bruteforce(1, 2, 0)
    assert w is not None
    assert w.verify(QQ)
    assert L.join_of(w.n1, w.n2) == L.top


def test_constructive_matches_hypotheses(example62_lattice):
    ana = TopAnalysis(example62_lattice, QQ)
    for triple in [(1, 1, 0), (2, 3, 0), (4, 1, 0), (5, 5, 5)]:
        w = ana.constructive(*triple)
        assert w is not None
        assert w.verify(QQ)
        assert w.certification["relative_nontrivial"]
        assert w.certification["top_component_nonzero"]


def test_decomposition_wrappers(cycle_lattice):
    w1 = decompose_top_bruteforce(cycle_lattice, 1, 1, 0, QQ)
    w2 = decompose_top_constructive(cycle_lattice, 1, 1, 0, QQ)
    for w in (w1, w2):
        assert w is not None
        assert cycle_lattice.join_of(w.n1, w.n2) == cycle_lattice.top
        assert w.verify(QQ)


def test_invalid_params_rejected(cycle_lattice):
    ana = TopAnalysis(cycle_lattice, QQ)
    with pytest.raises(DomainError):
        ana.bruteforce(0, 1, 0)  # i1 must be >= 1
    with pytest.raises(DomainError):
        ana.bruteforce(1, 1, 2)  # k > min(i1, i2)


def test_hypothesis_miss_returns_none(cycle_lattice):
    # top of the cycle lattice is a 2-synor; (3,3,1) needs a 5-synor
    ana = TopAnalysis(cycle_lattice, QQ)
    assert ana.bruteforce(3, 3, 1) is None
    assert ana.constructive(3, 3, 1) is None


def test_witness_verify_rejects_tampering(cycle_lattice):
    ana = TopAnalysis(cycle_lattice, QQ)
    w = ana.bruteforce(1, 1, 0)
    assert w.verify(QQ)
    bad = DecompositionWitness(cycle_lattice, w.i1, w.i2, w.k,
                               cycle_lattice.bottom, w.n2, w.target,
                               dict(w.certification))
    assert not bad.verify(QQ)


def test_step_lemma_small_and_example(cycle_lattice, example62_lattice):
    ana = TopAnalysis(cycle_lattice, QQ)
    g = [g for g in ana.S.generators(1) if g.element == ana.top][0]
    assert ana.verify_step_lemma(g, 1)
    ana2 = TopAnalysis(example62_lattice, QQ)
    g4 = [g for g in ana2.S.generators(4) if g.element == ana2.top][0]
    for ell in (1, 2, 3, 4):
        assert ana2.verify_step_lemma(g4, ell)
    with pytest.raises(DomainError):
        ana2.verify_step_lemma(g4, 5)


def test_step_lemma_wrapper(cycle_lattice):
    ana = TopAnalysis(cycle_lattice, QQ)
    g = [g for g in ana.S.generators(1) if g.element == ana.top][0]
    assert verify_step_lemma(cycle_lattice, g, 1, QQ)


def test_class_sums_negative_control(example62_lattice):
    ana = TopAnalysis(example62_lattice, QQ)
    g = [g for g in ana.S.generators(4) if g.element == ana.top][0]
    rep = check_class_sums(ana.S, g, 3, QQ)
    assert rep.ok
    assert rep.data["j0_nonzero"]  # slot 0 must not vanish


def test_interval_decomposition(example62_lattice):
    L = example62_lattice
    T = betti_from_intervals(L, QQ)
    hits = 0
    for (i, m), r in T.entries.items():
        if i < 2:
            continue
        for i1 in range(1, i):
            i2 = i - i1
            w = verify_interval_decomposition(L, m, i1, i2, QQ)
            assert w is not None
            assert w.verify(QQ)
            hits += 1
    assert hits > 0


def test_interval_decomposition_hypothesis_check(cycle_lattice):
    with pytest.raises(DomainError):
        # xy is an atom: no (1,1) split of beta_2 there
        m = cycle_lattice.atoms[0]
        verify_interval_decomposition(cycle_lattice, m, 1, 1, QQ)


def test_subadditivity_reports(example62_lattice):
    T = betti_from_intervals(example62_lattice, QQ)
    rep = check_subadditivity(example62_lattice, 2, 2, 0, QQ, T)
    assert rep.ok
    # t_4 = 5 <= t_2 + t_2 = 12, witnesses at every degree-5 multidegree
    assert any("n1=" in line for line in rep.lines())
    rep2 = check_subadditivity(example62_lattice, 1, 1, 1, QQ, T)
    assert rep2.ok


def test_shift_count_bound(example62_lattice):
    T = betti_from_intervals(example62_lattice, QQ)
    for (i1, i2) in ((1, 1), (1, 2), (2, 3), (0, 4)):
        rep = check_shift_count_bound(example62_lattice, i1, i2, QQ, T)
        assert rep.ok


def test_verify_lattice_instances_lines(cycle_lattice):
    ok, lines = verify_lattice_instances(cycle_lattice, QQ)
    assert ok
    assert lines
    for line in lines:
        assert line.startswith("LATTICE ")
        assert "RESULT=pass" in line
        assert "witness=" in line


def test_verify_intervals_lines(cycle_lattice):
    ok, lines = verify_intervals(cycle_lattice, QQ)
    assert ok
    # single interval instance: beta_2 at xyz split as (1,1)
    assert len(lines) == 1
    assert lines[0].startswith("INTERVAL x*y*z i1=1 i2=1 RESULT=pass")


def test_sweep_small_lattices():
    counts = {}
    ok, lines = sweep_lattices(5, QQ, counts)
    assert ok
    assert counts == {2: 1, 3: 1, 4: 2, 5: 5}
    assert all("RESULT=pass" in line for line in lines)


def test_theorem_contradiction_payload_is_json_ready(cycle_lattice):
    ana = TopAnalysis(cycle_lattice, QQ)
    seen = None
    try:
        raise TheoremContradiction(
            "synthetic", payload=ana._payload(1, 1, 0, "unit-test"))
    except TheoremContradiction as e:
        seen = e
    assert seen.payload["stage"] == "unit-test"
    json.dumps(seen.payload, default=str)
