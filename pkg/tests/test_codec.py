from __future__ import annotations

import itertools
import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from polargrass.codec import (
    CorrectionPolicy,
    PairType,
    PolarCode,
    all_pairs,
    auxiliary_lines,
    capacity_bound,
    classify_pair,
    code_params,
    format_symbols,
    kernel_pairs,
    measure_capacity,
    message_pairs,
    message_position,
    read_symbols,
    voting_support,
)
from polargrass.enumerator import Enumerator
from polargrass.errors import (
    BadLength,
    BadPair,
    BadParameter,
    EvenCharacteristic,
    IndexOutOfRange,
    LengthMismatch,
    NoPlanes,
    Undecided,
    WrongVariant,
)
from polargrass.geometry import unit
from polargrass.oracle import oracle

from conftest import geometry

_codes: dict = {}


def code(variant, q, n) -> PolarCode:
    key = (variant, q, n)
    if key not in _codes:
        _codes[key] = PolarCode(geometry(variant, q, n))
    return _codes[key]


def test_params_examples():
    p = code_params("orth", 3, 2)
    assert (p.N, p.K, p.d) == (40, 10, 18)
    p = code_params("orth", 2, 2)
    assert (p.N, p.K, p.d) == (15, 9, 4)
    p = code_params("symp", 2, 2)
    assert (p.N, p.K, p.d) == (15, 5, 6)
    assert str(code_params("orth", 3, 2)) == "N=40 K=10 d=18"
    assert code_params("orth", 2, 3).d is None
    with pytest.raises(BadParameter):
        code_params("orth", 3, 1)
    with pytest.raises(BadParameter):
        PolarCode(geometry("orth", 3, 1))


def test_message_positions():
    assert message_position(1, 2, 2) == 0
    assert message_position(2, 3, 2) == 4  # 1-based position 5
    pairs = message_pairs("orth", 3, 3)
    assert all(message_position(i + 1, j + 1, 3) == k for k, (i, j) in enumerate(pairs))
    with pytest.raises(BadPair):
        message_position(3, 3, 2)


def test_dropped_pairs():
    assert (1, 2) not in message_pairs("orth", 2, 2)
    assert (0, 1) not in message_pairs("symp", 2, 3)
    assert len(message_pairs("orth", 2, 3)) == 10


@pytest.mark.parametrize("variant,q", [("orth", 2), ("orth", 4), ("symp", 2), ("symp", 3)])
def test_kernel_functional_vanishes_on_lines(variant, q):
    C = code(variant, q, 2)
    ker = kernel_pairs(C.spec.variant, 2)
    F = C.field
    for g in oracle(C.spec).lines:
        P = C.plucker(g)
        s = 0
        for p in ker:
            s = F.add(s, P.get(p, 0))
        assert s == 0


def test_unit_message_form():
    C = code("orth", 3, 2)
    m = [1] + [0] * 9
    M = C.message_to_form(m)
    assert M[0][1] == 1 and M[1][0] == 2
    assert sum(1 for i, j in all_pairs(5) if M[i][j]) == 1
    with pytest.raises(LengthMismatch):
        C.message_to_form([0] * 9)
    with pytest.raises(LengthMismatch):
        C.form_to_message([[0] * 4] * 4)


@pytest.mark.parametrize("variant,q,n", [("orth", 3, 2), ("orth", 2, 2), ("orth", 4, 2), ("symp", 2, 2), ("symp", 3, 3)])
def test_form_round_trip(variant, q, n):
    C = code(variant, q, n)
    rng = random.Random(1)
    for _ in range(30):
        m = C.random_message(rng)
        assert C.form_to_message(C.message_to_form(m)) == m


def test_form_to_message_normalises_mod_kernel():
    C = code("orth", 2, 2)
    rng = random.Random(3)
    m = C.random_message(rng)
    M = C.message_to_form(m)
    for i, j in kernel_pairs(C.spec.variant, 2):
        M[i][j] ^= 1
        M[j][i] ^= 1
    assert C.form_to_message(M) == m
    # the shifted form gives the same codeword
    lines = C.lines
    assert [C.zeta(M, g) for g in lines] == C.encode(m)


def test_component_examples():
    C = code("orth", 3, 2)
    assert all(C.encode_component([0] * 10, i) == 0 for i in range(40))
    g = (unit(5, (2, 1)), unit(5, (4, 1)))
    i = C.enumerator.rank(g)
    m = [random.Random(i).randrange(3) for _ in range(10)]
    assert C.encode_component(m, i) == m[message_position(2, 4, 2)]
    with pytest.raises(IndexOutOfRange):
        C.encode_component(m, 40)


def explicit_generator(C: PolarCode) -> list[list[int]]:
    """N x K generator from the oracle's line list and unit messages."""
    F = C.field
    rows = []
    for g in oracle(C.spec).lines:
        row = []
        for i, j in C.pairs:
            row.append(F.sub(F.mul(g[0][i], g[1][j]), F.mul(g[0][j], g[1][i])))
        rows.append(row)
    return rows


@pytest.mark.parametrize("variant,q,n", [("orth", 3, 2), ("orth", 2, 2), ("orth", 5, 2), ("symp", 2, 2), ("symp", 3, 2)])
def test_components_match_explicit_generator(variant, q, n):
    C = code(variant, q, n)
    G = explicit_generator(C)
    F = C.field
    for k in range(C.params.K):
        m = [0] * C.params.K
        m[k] = 1
        assert [C.encode_component(m, i) for i in range(C.params.N)] == [G[i][k] for i in range(C.params.N)]
    rng = random.Random(4)
    m = C.random_message(rng)
    expect = []
    for row in G:
        s = 0
        for a, b in zip(row, m):
            s = F.add(s, F.mul(a, b))
        expect.append(s)
    assert C.encode(m) == expect


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([("orth", 3, 2), ("orth", 4, 2), ("symp", 3, 2), ("orth", 2, 3)]), st.randoms())
def test_encode_is_linear(params, rnd):
    C = code(*params)
    F = C.field
    a, b = C.random_message(rnd), C.random_message(rnd)
    lam = rnd.randrange(F.q)
    s = [F.add(x, F.mul(lam, y)) for x, y in zip(a, b)]
    ca, cb = C.encode(a), C.encode(b)
    assert C.encode(s) == [F.add(x, F.mul(lam, y)) for x, y in zip(ca, cb)]


def test_encode_batch_agrees_with_encode():
    for params in [("orth", 3, 2), ("orth", 4, 2)]:
        C = code(*params)
        rng = random.Random(9)
        msgs = [C.random_message(rng) for _ in range(10)]
        out = C.encode_batch(np.array(msgs))
        assert out.tolist() == [C.encode(m) for m in msgs]
    with pytest.raises(LengthMismatch):
        code("orth", 3, 2).encode_batch(np.zeros((2, 3), dtype=int))


def test_classify_pair():
    assert classify_pair(2, 4) is PairType.TYPE_I
    assert classify_pair(2, 3) is PairType.TYPE_II
    assert classify_pair(1, 5) is PairType.TYPE_III
    assert classify_pair(3, 4) is PairType.TYPE_I
    with pytest.raises(BadPair):
        classify_pair(4, 2)
    with pytest.raises(BadPair):
        classify_pair(1, 8, n=3)


def test_type_ii_chain_covers_all_consecutive_pairs():
    for n in range(2, 7):
        covered = set()
        for i in range(2, 2 * n - 1, 2):
            covered |= {(i, i + 1), (i + 2, i + 3)}
        assert covered == {(2 * k, 2 * k + 1) for k in range(1, n + 1)}


@pytest.mark.parametrize("q", [3, 5])
@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_auxiliary_lines_are_singular(q, n):
    spec = geometry("orth", q, n)
    for _, group in auxiliary_lines(spec):
        for g in group:
            assert spec.is_ts_line(g)


def test_decode_reads_exactly_k_positions():
    for params in [("orth", 3, 2), ("orth", 3, 3), ("orth", 5, 2)]:
        C = code(*params)
        assert len(C.decode_positions) == C.params.K == len(set(C.decode_positions))


def test_decode_examples():
    C = code("orth", 3, 2)
    rng = random.Random(0)
    for _ in range(100):
        m = C.random_message(rng)
        assert C.decode(C.encode(m)) == m
    assert C.decode([0] * 40) == [0] * 10


@pytest.mark.parametrize("q", [3, 5])
def test_decode_unit_messages(q):
    C = code("orth", q, 2)
    for k in range(C.params.K):
        m = [0] * C.params.K
        m[k] = 1
        assert C.decode(C.encode(m)) == m


def test_decode_errors():
    with pytest.raises(WrongVariant):
        code("symp", 3, 2).decode([0] * 40)
    with pytest.raises(EvenCharacteristic):
        code("orth", 2, 2).decode([0] * 15)
    with pytest.raises(BadLength):
        code("orth", 3, 2).decode([0] * 39)


def test_correct_error_free():
    C = code("orth", 2, 3)
    c = C.encode(C.random_message(random.Random(2)))
    for i in range(0, C.params.N, 7):
        assert C.locally_correct(c, i) == c[i]


def test_correct_error_at_queried_position():
    C = code("orth", 3, 3)
    rng = random.Random(11)
    for _ in range(100):
        c = C.encode(C.random_message(rng))
        i = rng.randrange(C.params.N)
        r = list(c)
        r[i] = (r[i] + rng.randrange(1, 3)) % 3
        assert C.locally_correct(r, i) == c[i]


def test_correction_report_and_policy():
    C = code("orth", 3, 3)
    c = C.encode(C.random_message(random.Random(5)))
    rep = C.correct_component(c, 10, CorrectionPolicy(max_planes=2))
    assert rep.value == c[10] and len(rep.planes) == 2
    assert all(p.total == 4 * 3 for p in rep.planes)  # (q + 1) points, C(q, 2) pairs each
    assert rep.tally[c[10]] == 2
    assert "plane 1" in rep.summary()


def test_voting_pairs_never_read_queried_position():
    C = code("orth", 3, 3)
    for i in (0, 100, 3639):
        assert i not in voting_support(C, i)


def test_corrupted_plane_is_outvoted():
    C = code("orth", 3, 3)
    c = C.encode(C.random_message(random.Random(8)))
    i = 77
    plan = C._voting_plan(i)
    r = list(c)
    # break every vote line of the first plane
    for rp, _, rq, _ in plan[0][1]:
        r[rp] = (c[rp] + 1) % 3
        r[rq] = (c[rq] + 1) % 3
    assert C.locally_correct(r, i) == c[i]


def test_undecided_without_plane_verdicts():
    C = code("orth", 3, 3)
    c = C.encode(C.random_message(random.Random(8)))
    with pytest.raises(Undecided):
        C.correct_component(c, 5, CorrectionPolicy(vote_threshold=1.0))


def test_correction_errors():
    with pytest.raises(NoPlanes):
        code("orth", 3, 2).correct_component([0] * 40, 0)
    with pytest.raises(WrongVariant):
        code("symp", 2, 3).correct_component([0] * 315, 0)
    with pytest.raises(BadLength):
        code("orth", 2, 3).correct_component([0] * 3, 0)
    with pytest.raises(IndexOutOfRange):
        code("orth", 2, 3).correct_component([0] * 315, 315)


def test_capacity_measurement_runs():
    C = code("orth", 2, 3)
    rates = measure_capacity(C, 2, 5, random.Random(1))
    assert set(rates) == {1, 2} and all(0 <= v <= 1 for v in rates.values())
    assert capacity_bound(3) == 2 and capacity_bound(2) == 1


def test_symbol_io():
    assert read_symbols("1 2\n0\t1", 4, 3) == [1, 2, 0, 1]
    assert format_symbols([1, 0, 2]) == "1 0 2"
    with pytest.raises(BadLength):
        read_symbols("1 2", 3, 3)
    with pytest.raises(ValueError):
        read_symbols("1 5", 2, 3)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_second_type_ii_line_choice(n):
    """<e_i - e_{i+3}, e_{i+1} + e_{i+2}> repeats the first line's equation on the two
    unknowns, so the decoder pairs the first line with a different auxiliary line."""
    spec = geometry("orth", 3, n)
    C = code("orth", 3, 2) if n == 2 else PolarCode(spec)
    D = spec.D
    for i in range(2, 2 * n - 1, 2):
        x, y = (i - 1, i), (i + 1, i + 2)  # 0-based (i, i+1) and (i+2, i+3)
        e = lambda *c: unit(D, *c)
        l1 = C.plucker(((e((i, 1), (i + 3, 1))), e((i + 1, 1), (i + 2, 2))))
        l2 = C.plucker((e((i, 1), (i + 3, 2)), e((i + 1, 1), (i + 2, 1))))
        assert spec.is_singular_pair(e((i, 1), (i + 3, 2)), e((i + 1, 1), (i + 2, 1)))
        det = (l1.get(x, 0) * l2.get(y, 0) - l1.get(y, 0) * l2.get(x, 0)) % 3
        assert det == 0
        aux = dict(auxiliary_lines(spec))[f"II({i},{i + 1})+({i + 2},{i + 3})"]
        a, b = (C.plucker(g) for g in aux)
        assert (a.get(x, 0) * b.get(y, 0) - a.get(y, 0) * b.get(x, 0)) % 3 != 0
