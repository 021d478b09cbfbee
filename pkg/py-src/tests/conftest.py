from __future__ import annotations

import random
from typing import Callable

import pytest

from arcshift_kit.codec import parse
from arcshift_kit.families import (
    gen_random,
    gen_torus,
    gen_twin_trefoil,
    gen_virtual_hopf,
    gen_virtual_trefoil,
)
from arcshift_kit.gauss import GaussDiagram


@pytest.fixture
def hopf() -> GaussDiagram:
    return gen_virtual_hopf()


@pytest.fixture
def torus1() -> GaussDiagram:
    return gen_torus(1)


@pytest.fixture
def trefoil() -> GaussDiagram:
    return gen_virtual_trefoil(components=2)


@pytest.fixture
def twin_trefoil() -> GaussDiagram:
    return gen_twin_trefoil()


@pytest.fixture
def l11() -> GaussDiagram:
    return parse("O1+ U2+ ; U1+ O2+")


@pytest.fixture
def random_diagrams() -> Callable[..., list[GaussDiagram]]:
    """Seeded stream of random diagrams: ``random_diagrams(count, seed=...)``."""

    def make(
        count: int,
        *,
        seed: int = 0,
        max_components: int = 3,
        max_chords: int = 8,
        homogeneous_proper: bool = False,
    ) -> list[GaussDiagram]:
        rng = random.Random(seed)
        return [
            gen_random(
                rng.randint(1, max_components),
                rng.randint(0, max_chords),
                rng.randrange(2**32),
                homogeneous_proper=homogeneous_proper,
            )
            for _ in range(count)
        ]

    return make
