import itertools
import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from quandlering.automorphisms import (
    BasisPermutation,
    compare_with_quandle_automorphisms,
    enumerate_ring_automorphisms,
    extends_to_ring_automorphism,
    is_group,
)
from quandlering.quandle import make_dihedral, quandle_automorphisms, trivial_quandle
from quandlering.ring import RingElement, multiply


def test_extension_examples(q5):
    assert extends_to_ring_automorphism(q5, BasisPermutation.identity(5))
    assert extends_to_ring_automorphism(q5, BasisPermutation.of([1, 2, 3, 4, 0]))
    # swap 0 and 1: p(0*1) = p(2) = 2 but p(0)*p(1) = 1*0 = 4
    assert not extends_to_ring_automorphism(q5, BasisPermutation.of([1, 0, 2, 3, 4]))


def test_basis_permutation_validates():
    with pytest.raises(ValueError):
        BasisPermutation.of([0, 0, 1])


def test_enumeration_examples(q5):
    autos = enumerate_ring_automorphisms(q5)
    brute = [
        p
        for p in itertools.permutations(range(5))
        if all(p[q5.table[i][j]] == q5.table[p[i]][p[j]] for i in range(5) for j in range(5))
    ]
    assert [p.images for p in autos] == sorted(brute)
    assert len(autos) == 20
    assert enumerate_ring_automorphisms(make_dihedral(1)) == [BasisPermutation.identity(1)]
    assert len(enumerate_ring_automorphisms(make_dihedral(3))) == 6


def test_enumeration_guard():
    with pytest.raises(ValueError):
        enumerate_ring_automorphisms(make_dihedral(9))


@pytest.mark.parametrize("q", [make_dihedral(n) for n in range(1, 8)] + [trivial_quandle(4)])
def test_ring_and_quandle_automorphisms_coincide(q):
    cmp = compare_with_quandle_automorphisms(q)
    assert cmp.equal
    assert cmp.closed_under_composition
    assert set(cmp.ring_automorphisms) == quandle_automorphisms(q)


def test_trivial_quandle_every_permutation_extends():
    assert len(enumerate_ring_automorphisms(trivial_quandle(4))) == 24


def test_is_group_detects_non_closure():
    perms = [BasisPermutation.identity(3), BasisPermutation.of([1, 2, 0])]
    assert not is_group(perms)
    assert is_group(perms + [BasisPermutation.of([2, 0, 1])])


def test_comparison_json_shape(q5):
    data = json.loads(json.dumps(compare_with_quandle_automorphisms(q5).to_dict()))
    assert data["unconstrained_permutations"] == 120
    assert data["ring_automorphisms"]["count"] == 20
    assert data["ring_automorphisms"]["closed_under_composition"] is True
    assert data["equal"] is True
    assert data["symmetric_difference"] == {"only_ring": [], "only_quandle": []}
    assert all(len(p) == 5 for p in data["ring_automorphisms"]["images"])


Q5_AUTOS = [p for p in enumerate_ring_automorphisms(make_dihedral(5))]
coeffs5 = st.lists(st.integers(-3, 3), min_size=5, max_size=5).map(RingElement.of)


@given(st.sampled_from(Q5_AUTOS), coeffs5, coeffs5)
def test_basis_reduction_is_sound(p, a, b):
    q = make_dihedral(5)
    assert p.apply(multiply(q, a, b)) == multiply(q, p.apply(a), p.apply(b))
