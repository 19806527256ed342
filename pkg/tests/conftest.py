from __future__ import annotations

import functools

import pytest

from discarr.exactgeom import ArrangementSpec
from discarr.lattice import Lattice, build_lattice


@functools.lru_cache(maxsize=None)
def cached_spec(n: int, k: int, seed: int) -> ArrangementSpec:
    return ArrangementSpec.generate(n, k, seed=seed)


@functools.lru_cache(maxsize=None)
def cached_lattice(n: int, k: int, seed: int) -> Lattice:
    return build_lattice(cached_spec(n, k, seed))


@pytest.fixture(scope="session")
def lat31() -> Lattice:
    return cached_lattice(3, 1, 11)


@pytest.fixture(scope="session")
def lat41() -> Lattice:
    return cached_lattice(4, 1, 11)


@pytest.fixture(scope="session")
def lat51() -> Lattice:
    return cached_lattice(5, 1, 11)


@pytest.fixture(scope="session")
def lat42() -> Lattice:
    return cached_lattice(4, 2, 11)
