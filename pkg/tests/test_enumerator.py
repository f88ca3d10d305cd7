from __future__ import annotations

import random

import pytest
from hypothesis import given, settings, strategies as st

from polargrass.enumerator import Enumerator, rank, unrank
from polargrass.errors import IndexOutOfRange, NotRREF, NotSingularLine
from polargrass.geometry import unit
from polargrass.oracle import oracle

from conftest import geometry

GRID = [("orth", 2, 2), ("orth", 3, 2), ("orth", 5, 2), ("orth", 2, 3),
        ("symp", 2, 2), ("symp", 3, 2), ("symp", 2, 3)]


@pytest.mark.parametrize("variant,q,n", GRID)
def test_rank_is_position_in_sorted_enumeration(variant, q, n):
    spec = geometry(variant, q, n)
    E = Enumerator(spec)
    lines = oracle(spec).lines
    assert E.N == len(lines)
    assert [E.rank(g) for g in lines] == list(range(E.N))
    assert [E.unrank(i) for i in range(E.N)] == lines


def test_extremes(orth32):
    E = Enumerator(orth32)
    lines = oracle(orth32).lines
    assert E.rank(lines[0]) == 0 and E.rank(lines[-1]) == E.N - 1
    assert E.unrank(0) == lines[0]


def test_index_out_of_range(orth32):
    E = Enumerator(orth32)
    with pytest.raises(IndexOutOfRange):
        E.unrank(E.N)
    with pytest.raises(IndexOutOfRange):
        E.unrank(-1)


def test_rank_errors(orth32):
    E = Enumerator(orth32)
    with pytest.raises(NotSingularLine):
        E.rank((unit(5, (1, 1)), unit(5, (2, 1))))
    with pytest.raises(NotRREF):
        E.rank(((0, 1, 0, 1, 0), (0, 0, 0, 1, 0)))


def test_allowable(orth32):
    E = Enumerator(orth32)
    assert E.allowable((), (0, 0))
    assert not E.allowable((), (0, 1))
    g = oracle(orth32).lines[11]
    cols = tuple(zip(*g))
    assert E.allowable(cols[:-1], cols[-1])
    assert not E.allowable(cols, (0, 0))


def test_module_level_helpers(orth32):
    g = unrank(orth32, 7)
    assert rank(orth32, g) == 7


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 3639))
def test_round_trip_large(i):
    E = _big()
    assert E.rank(E.unrank(i)) == i


_cache = {}


def _big():
    if "E" not in _cache:
        _cache["E"] = Enumerator(geometry("orth", 3, 3))
    return _cache["E"]


def test_monotone_on_random_pairs():
    spec = geometry("symp", 3, 3)
    E = Enumerator(spec)
    rng = random.Random(5)
    for _ in range(200):
        i, j = sorted(rng.sample(range(E.N), 2))
        assert tuple(zip(*E.unrank(i))) < tuple(zip(*E.unrank(j)))


@pytest.mark.parametrize("variant", ["orth", "symp"])
def test_count_calls_per_rank_bounded(variant):
    q = 3
    for n in (2, 3, 4, 5):
        spec = geometry(variant, q, n)
        E = Enumerator(spec, memo=False)
        calls = []
        original = E.count

        def counted(S, _orig=original):
            calls.append(1)
            return _orig(S)

        E.count = counted
        rng = random.Random(n)
        for _ in range(5):
            i = rng.randrange(E.N)
            calls.clear()
            g = E.unrank(i)
            assert len(calls) <= q * q * spec.D
            calls.clear()
            E.rank(g)
            assert len(calls) <= q * q * spec.D


def test_rank_work_grows_polynomially():
    """Worst dispatch work of a rank call over sampled lines stays below C q^2 n^3."""
    q = 3
    work = []
    for n in range(2, 9):
        spec = geometry("orth", q, n)
        sampler, E = Enumerator(spec), Enumerator(spec, memo=False)
        rng = random.Random(n)
        worst = 0
        for _ in range(10):
            g = sampler.unrank(rng.randrange(sampler.N))
            E.ctx.reset_ops()
            E.rank(g)
            worst = max(worst, E.ctx.ops)
        work.append(worst)
    assert work[-1] > work[0]
    assert all(w <= 10 * q * q * n ** 3 for w, n in zip(work, range(2, 9)))
