from __future__ import annotations

import pytest

from arcshift_kit.codec import serialize
from arcshift_kit.errors import GenerationError
from arcshift_kit.families import (
    FAMILY_NAMES,
    FamilySpec,
    all_canonical,
    gen_canonical,
    gen_l2n1,
    gen_lpq,
    gen_random,
    gen_torus,
    gen_twin_trefoil,
    gen_virtual_hopf,
)
from arcshift_kit.gauss import validate
from arcshift_kit.invariants import ParityMatrix, is_homogeneous_proper, parity_matrix, vlk


def test_canonical_realises_its_bits():
    bits = ParityMatrix.from_pairs(3, [(1, 2), (3, 1)])
    d = gen_canonical(bits)
    assert serialize(d) == "O1+ U2+ ; U1+ ; O2+"
    assert parity_matrix(d) == bits


def test_canonical_zero_matrix_is_the_unlink():
    assert gen_canonical(ParityMatrix.zero(3)).is_unlink


@pytest.mark.parametrize(("n", "count"), [(1, 1), (2, 4), (3, 64)])
def test_all_canonical(n, count):
    diagrams = all_canonical(n)
    assert len(diagrams) == count
    assert [parity_matrix(d) for d in diagrams] == ParityMatrix.every(n)


@pytest.mark.parametrize(("p", "q"), [(0, 0), (1, 0), (2, 3), (-3, 1), (-2, -2)])
def test_lpq(p, q):
    d = gen_lpq(p, q)
    assert vlk(d, 2, 1) == p
    assert vlk(d, 1, 2) == q
    assert d.chord_count == abs(p) + abs(q)
    assert is_homogeneous_proper(d) == (p % 2 == 0 and q % 2 == 0)


def test_lpq_layout():
    assert serialize(gen_lpq(1, -1)) == "U1+ O2- ; O1+ U2-"


def test_torus_and_l2n1():
    assert serialize(gen_torus(2)) == "O1- O2- O3- O4- ; U1- U2- U3- U4-"
    assert vlk(gen_l2n1(2), 1, 2) == 3
    assert not is_homogeneous_proper(gen_l2n1(1))
    with pytest.raises(GenerationError):
        gen_torus(0)


def test_fixed_examples():
    assert serialize(gen_virtual_hopf()) == "U1+ ; O1+"
    twin_trefoil = gen_twin_trefoil()
    assert vlk(twin_trefoil, 2, 1) == 2 and vlk(twin_trefoil, 1, 2) == 0


def test_random_is_seeded():
    assert gen_random(3, 6, 42) == gen_random(3, 6, 42)
    assert any(gen_random(3, 6, 42) != gen_random(3, 6, seed) for seed in range(5))


def test_random_is_valid(random_diagrams):
    for d in random_diagrams(200, seed=1):
        assert validate(d) == []


def test_random_homogeneous_proper_rejection():
    for seed in range(50):
        d = gen_random(3, 5, seed, homogeneous_proper=True)
        assert is_homogeneous_proper(d)
        assert d.chord_count == 5


def test_random_rejection_budget_exhausted():
    with pytest.raises(GenerationError) as info:
        gen_random(2, 1, 7, homogeneous_proper=True, max_attempts=0)
    assert info.value.seed == 7


def test_random_arguments_checked():
    with pytest.raises(GenerationError):
        gen_random(0, 3, 1)
    with pytest.raises(GenerationError):
        gen_random(2, -1, 1)


def test_family_specs_cover_every_name():
    specs = {
        "canonical": FamilySpec("canonical", (2,), odd=((2, 1),)),
        "lpq": FamilySpec("lpq", (2, 1)),
        "l2n1": FamilySpec("l2n1", (2,)),
        "torus": FamilySpec("torus", (1,)),
        "random": FamilySpec("random", (2, 4), seed=3, homogeneous_proper=True),
        "virtual-hopf": FamilySpec("virtual-hopf"),
        "trefoil": FamilySpec("trefoil"),
        "twin-trefoil": FamilySpec("twin-trefoil"),
    }
    assert set(specs) == set(FAMILY_NAMES)
    for spec in specs.values():
        assert validate(spec.generate()) == []
    assert serialize(specs["canonical"].generate()) == "U1+ ; O1+"


@pytest.mark.parametrize(
    "spec",
    [
        FamilySpec("torus"),
        FamilySpec("lpq", (1,)),
        FamilySpec("canonical", (2,), odd=((1, 1),)),
        FamilySpec("canonical", (2,), odd=((1, 3),)),
        FamilySpec("twin-trefoil", (1,)),
    ],
)
def test_family_spec_errors(spec):
    with pytest.raises(GenerationError):
        spec.generate()
