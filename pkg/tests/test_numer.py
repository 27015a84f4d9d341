import threading

import pytest
from hypothesis import given, settings, strategies as st

from ostro.exactq import QuadraticValue
from ostro.numer import (
    DigitError,
    DualWord,
    OstrowskiWord,
    classify_word,
    companion,
    context,
    count_out,
    decode,
    denominator,
    dual_decode,
    dual_encode,
    dual_problem,
    encode,
    enumerate_trimmed,
    format_digits,
    nut,
    nut_word,
    ostrowski_problem,
    out,
    out_word,
    parse_digits,
    trimmed_rank,
    trimmed_value,
)


def lsd(text):
    return tuple(int(c) for c in text)


def test_denominators_and_companions():
    assert denominator(2, 6) == 70
    assert denominator(2, 0) == 0
    assert denominator(2, -2) == -2
    assert companion(2, -1) == -2
    assert companion(2, 0) == 2
    assert companion(2, 2) == 6
    # bilateral companions ..., d^2+2, -d, 2, d, d^2+2, ...
    for d in range(1, 6):
        assert [companion(d, n) for n in (-2, -1, 0, 1, 2)] == [d * d + 2, -d, 2, d, d * d + 2]
    # d = 1 gives Fibonacci and Lucas numbers
    assert [denominator(1, n) for n in range(8)] == [0, 1, 1, 2, 3, 5, 8, 13]
    assert [companion(1, n) for n in range(6)] == [2, 1, 3, 4, 7, 11]


@pytest.mark.parametrize("d", range(1, 11))
def test_companion_is_alpha_power_trace(d):
    ctx = context(d)
    for n in range(-8, 9):
        # alpha^n + beta^n
        assert ctx.alpha ** n + ctx.beta ** n == companion(d, n)


def test_encode_examples():
    assert encode(2, 9).digits == lsd("021")
    assert encode(2, 0).digits == ()
    assert encode(2, 41).digits == lsd("00011")
    with pytest.raises(ValueError):
        encode(2, -1)


def test_decode_examples():
    assert decode(2, lsd("102")) == 11
    assert decode(2, lsd("1")) == 1
    assert decode(2, lsd("111")) == 8
    with pytest.raises(DigitError):
        decode(2, lsd("22"))
    with pytest.raises(DigitError):
        decode(2, lsd("2"))  # first digit must be below d


def test_classify_examples():
    assert classify_word(2, lsd("02")) == "trimmed"
    assert classify_word(2, lsd("001")) == "untrimmed"
    assert classify_word(2, lsd("22")) == "invalid"
    assert classify_word(2, ()) == "invalid"
    assert classify_word(2, lsd("10")) == "invalid"  # msd zero


def test_trimmed_matches_definition():
    # trimmed iff not 0v for a valid word v
    for d in (2, 3, 4):
        for N in range(1, 3000):
            w = encode(d, N).digits
            untrimmed = w[0] == 0 and ostrowski_problem(context(d), w[1:]) is None
            assert classify_word(d, w) == ("untrimmed" if untrimmed else "trimmed")


def test_out_examples():
    assert out(2, 1) == 2
    assert out(2, 3) == 7
    assert out(2, 0) == 0


def test_nut_examples():
    assert nut(2, 1) == -2
    assert nut(2, -2) == 5
    assert nut(2, 0) == 0


def test_dual_encode_examples():
    assert dual_encode(2, -1).digits == lsd("11")
    assert dual_encode(2, 2).digits == lsd("2")
    assert dual_encode(2, 4).digits == lsd("111")
    assert dual_encode(2, 0).digits == ()


def test_dual_decode_examples():
    assert dual_decode(2, lsd("11")) == -1
    assert dual_decode(2, ()) == 0
    w = parse_digits("110101110101", 2)
    assert dual_decode(2, w) == -7000
    assert format_digits(dual_encode(2, -7000).digits, 2) == "110101110101"
    with pytest.raises(DigitError):
        dual_decode(2, lsd("21"))  # d must be followed by 0


def test_enumerate_trimmed_examples():
    assert [w.msd(2)[::-1] for w in enumerate_trimmed(2, 7)] == ["1", "11", "02", "101", "111", "021", "102"]
    assert ["".join(map(str, w.digits)) for w in enumerate_trimmed(1, 5)] == ["1", "101", "1001", "10001", "10101"]
    assert enumerate_trimmed(2, 0) == []


@pytest.mark.parametrize("d", range(1, 11))
def test_round_trips(d):
    ctx = context(d)
    for N in range(0, 20_001):
        w = encode(ctx, N).digits
        assert ostrowski_problem(ctx, w) is None
        assert decode(ctx, w) == N
    for N in range(-20_000, 20_001):
        w = dual_encode(ctx, N).digits
        assert dual_problem(ctx, w) is None
        assert dual_decode(ctx, w) == N
        if N:
            # sign law (-1)^(|w|+1)
            assert (N > 0) == (len(w) % 2 == 1)


def test_zeckendorf_rules_for_d1():
    for N in range(1, 5000):
        w = encode(1, N).digits
        assert all(x in (0, 1) for x in w)
        assert all(not (a and b) for a, b in zip(w, w[1:]))


@pytest.mark.parametrize("d", [1, 2, 3, 7])
def test_operator_agreement_sample(d):
    for n in range(0, 5000):
        assert out_word(d, n) == out(d, n)
    for n in range(-5000, 5000):
        assert nut_word(d, n) == nut(d, n)


@pytest.mark.parametrize("d", range(2, 6))
def test_interval_law(d):
    # out(n) - alpha n lies strictly inside (1/alpha - 1, 1/alpha)
    ctx = context(d)
    a, inv = ctx.alpha, ctx.inv_alpha
    for n in range(1, 3000):
        x = out(d, n) - a * n
        assert (x - (inv - 1)).sign() > 0
        assert (inv - x).sign() > 0


def test_printed_interval_is_empty_for_d2():
    # (1 - 1/alpha, 1/alpha) has its endpoints in the wrong order
    inv = context(2).inv_alpha
    assert (1 - inv - inv).sign() > 0


@pytest.mark.parametrize("d", [2, 3])
def test_additivity_and_linearity_defect(d):
    vals = {i: out(d, i) for i in range(0, 2001)}
    inverse = {v: i for i, v in vals.items()}
    for i in range(1, 2001):
        for j in range(i, min(2001, i + 60)):
            k = vals[j] - vals[i]
            if k >= 0 and vals[i] + k == vals[j]:
                assert out(d, vals[i]) + out(d, k) == out(d, vals[j])
    for i in range(0, 400):
        for j in range(0, 400):
            assert out(d, i + j) - vals[i] - vals[j] in (-1, 0, 1)
    assert inverse[vals[5]] == 5


@pytest.mark.parametrize("d", range(2, 7))
def test_beatty_complementarity(d):
    # out(N) and the trimmed values partition the positive integers
    limit = 100_000
    outs = set()
    n = 1
    while (v := out(d, n)) <= limit:
        outs.add(v)
        n += 1
    ctx = context(d)
    for V in range(1, limit + 1, 37):
        trimmed = classify_word(ctx, encode(ctx, V)) == "trimmed"
        assert trimmed != (V in outs)
    assert count_out(d, limit) == len(outs)


def test_trimmed_rank_inverts_value():
    for d in (2, 3):
        for m in range(1, 2000):
            assert trimmed_rank(d, trimmed_value(d, m)) == m


def test_text_form():
    assert format_digits(lsd("021"), 2) == "120"
    assert parse_digits("120", 2) == lsd("021")
    assert format_digits((10, 0, 1), 10) == "1,0,10"
    assert parse_digits("1,0,10", 10) == (10, 0, 1)
    assert OstrowskiWord(lsd("021")).msd(2) == "120"
    assert DualWord(lsd("11")).msd(2) == "11"


def test_context_growth_is_thread_safe():
    ctx = context(5)
    errors = []

    def work(k):
        try:
            for n in range(k, 3000, 7):
                assert dual_decode(ctx, dual_encode(ctx, -n)) == -n
                trimmed_value(ctx, n // 3 + 1)
        except Exception as e:  # pragma: no cover
            errors.append(e)

    threads = [threading.Thread(target=work, args=(k,)) for k in range(7)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert not errors
    D = ctx.denoms(50)
    assert all(D[i + 1] == 5 * D[i] + D[i - 1] for i in range(1, 50))


@settings(max_examples=300, deadline=None)
@given(st.integers(1, 10), st.integers(-10**40, 10**40))
def test_big_round_trips(d, N):
    assert dual_decode(d, dual_encode(d, N)) == N
    if N >= 0:
        assert decode(d, encode(d, N)) == N
        assert out_word(d, N) == out(d, N)
    assert nut_word(d, N) == nut(d, N)


def test_nut_closed_form_is_ceil():
    ctx = context(3)
    for n in (-50, -1, 1, 50):
        assert nut(ctx, n) == (-(ctx.alpha * n)).ceil()
        assert out(ctx, n if n > 0 else -n) == (ctx.alpha * abs(n) + ctx.inv_alpha).floor()
    assert isinstance(ctx.alpha, QuadraticValue)
