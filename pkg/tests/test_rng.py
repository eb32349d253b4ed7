from hypothesis import given, strategies as st

from gapforge.rng import CounterRng, mix64


def test_known_stream():
    # reference values of the SplitMix64 stream seeded with 0
    r = CounterRng(0)
    assert [r.next64() for _ in range(3)] == [
        0xE220A8397B1DCDAF, 0x6E789E6AA1B965F4, 0x06C45D188009454F]


def test_raw_matches_scalar():
    a = CounterRng(12345)
    b = CounterRng(12345)
    assert [int(x) for x in a.raw(10)] == [b.next64() for _ in range(10)]
    assert a.counter == b.counter == 10


def test_mix64_range():
    assert 0 <= mix64(2**64 - 1) < 2**64


@given(st.integers(0, 2**64 - 1), st.integers(1, 10**6), st.integers(0, 50))
def test_integers_matches_randbelow(seed, n, size):
    a = CounterRng(seed)
    b = CounterRng(seed)
    vals = [int(x) for x in a.integers(n, size)]
    assert vals == [b.randbelow(n) for _ in range(size)]
    assert a.counter == b.counter
    assert all(0 <= v < n for v in vals)
