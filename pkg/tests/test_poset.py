import pytest

from synorres.algebra import DimensionError, Monomial, ValidationError
from synorres.poset import (Lattice, Poset, build_lcm_lattice,
                            enumerate_lattices, is_isomorphic, is_lattice,
                            lattice_hash, open_interval, poset_from_json,
                            poset_to_json, proper_parts)


def boolean_lattice(n):
    """Subsets of {0..n-1} ordered by inclusion."""
    size = 1 << n
    leq = [[(a & b) == a for b in range(size)] for a in range(size)]
    return Lattice(leq)


def test_validation_rejects_non_poset():
    with pytest.raises(ValidationError):
        Poset([[True, True], [True, True]])  # antisymmetry fails
    with pytest.raises(ValidationError):
        Poset([[True, False], [False, False]])  # reflexivity fails


def test_covers_of_boolean_cube():
    B3 = boolean_lattice(3)
    cov = B3.covers()
    # n * 2^(n-1) cover relations in the n-cube
    assert len(cov) == 12
    for a, b in cov:
        assert B3.lt(a, b)
        assert not any(B3.lt(a, c) and B3.lt(c, b) for c in range(B3.n))


def test_linear_extension_is_monotone():
    B3 = boolean_lattice(3)
    order = B3.linear_extension()
    pos = {x: i for i, x in enumerate(order)}
    for a in range(B3.n):
        for b in range(B3.n):
            if B3.lt(a, b):
                assert pos[a] < pos[b]


def test_chains_of_boolean_cube():
    B2 = boolean_lattice(2)
    assert B2.chains(-1) == [()]
    assert sorted(B2.chains(0)) == [(0,), (1,), (2,), (3,)]
    # maximal chains of B2 have dimension 2
    assert B2.max_chain_dim() == 2
    for key in B2.chains(1):
        assert B2.lt(key[1], key[0])


def test_sub_origin_roundtrip():
    B3 = boolean_lattice(3)
    ids = [0, 1, 2, 3]
    Q = B3.sub(ids)
    assert Q.n == 4
    assert [Q.origin[i] for i in range(Q.n)] == ids
    for a in range(Q.n):
        for b in range(Q.n):
            assert Q.le(a, b) == B3.le(Q.origin[a], Q.origin[b])


def test_join_meet_tables():
    B3 = boolean_lattice(3)
    assert B3.bottom == 0
    assert B3.top == 7
    assert B3.join_of(1, 2) == 3
    assert B3.meet_of(3, 5) == 1
    assert B3.join_all([]) == B3.bottom
    assert B3.join_all([1, 2, 4]) == 7


def test_is_lattice_rejects_diamondless():
    # two incomparable elements with no common upper bound
    leq = [[True, False], [False, True]]
    assert not is_lattice(Poset(leq))


def test_lcm_lattice_of_cycle_ideal(cycle_lattice):
    L = cycle_lattice
    assert L.n == 5
    labels = [L.format_label(i) for i in range(L.n)]
    assert labels == ["1", "y*z", "x*z", "x*y", "x*y*z"]
    assert L.bottom == 0 and L.top == 4
    assert sorted(L.atoms) == [1, 2, 3]
    # join = lcm through the monomial labels
    j = L.join_of(1, 2)
    assert L.monomials[j] == Monomial((1, 1, 1))


def test_lcm_lattice_requires_minimal_generators():
    with pytest.raises(ValidationError):
        # duplicate generator is redundant
        build_lcm_lattice(
            [Monomial((1, 0)), Monomial((1, 0))], ("x", "y"))
    with pytest.raises(ValidationError):
        # x divides xy
        build_lcm_lattice([Monomial((1, 0)), Monomial((1, 1))], ("x", "y"))
    with pytest.raises(DimensionError):
        build_lcm_lattice([Monomial((1, 0))], ("x",))
    with pytest.raises(ValidationError):
        build_lcm_lattice([Monomial.one(2)], ("x", "y"))


def test_example62_lattice_size(example62_lattice):
    assert example62_lattice.n == 33


def test_ids_in_lex_order(example62_lattice):
    L = example62_lattice
    exps = [m.exps for m in L.monomials]
    assert exps == sorted(exps)
    assert L.bottom == 0
    assert L.top == L.n - 1


def test_open_interval_and_proper_parts(cycle_lattice):
    L = cycle_lattice
    inside = open_interval(L, L.bottom, L.top)
    assert inside.n == 3  # the three atoms
    upper, middle = proper_parts(L)
    assert upper.n == L.n - 1
    assert middle.n == L.n - 2
    assert 0 not in upper.origin


def test_enumeration_counts():
    counts = [len(list(enumerate_lattices(n))) for n in range(2, 8)]
    assert counts == [1, 1, 2, 5, 15, 53]


def test_enumerated_are_lattices_pairwise_nonisomorphic():
    found = list(enumerate_lattices(6))
    for L in found:
        assert is_lattice(L)
        assert L.n == 6
    for i in range(len(found)):
        for j in range(i + 1, len(found)):
            assert not is_isomorphic(found[i], found[j])


def test_isomorphism_detects_relabeling():
    B2 = boolean_lattice(2)
    perm = [3, 1, 2, 0]
    leq = [[B2.le(perm[a], perm[b]) for b in range(4)] for a in range(4)]
    assert is_isomorphic(B2, Lattice(leq))
    assert not is_isomorphic(B2, boolean_lattice(3))


def test_json_roundtrip(cycle_lattice):
    data = poset_to_json(cycle_lattice)
    back = poset_from_json(data)
    assert back.n == cycle_lattice.n
    for a in range(back.n):
        for b in range(back.n):
            assert back.le(a, b) == cycle_lattice.le(a, b)


def test_lattice_hash_is_isomorphism_invariant():
    B2 = boolean_lattice(2)
    perm = [0, 2, 1, 3]
    leq = [[B2.le(perm[a], perm[b]) for b in range(4)] for a in range(4)]
    assert lattice_hash(B2) == lattice_hash(Lattice(leq))
    assert lattice_hash(B2) != lattice_hash(boolean_lattice(3))
