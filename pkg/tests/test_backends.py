"""The compiled and pure kernels must agree bit-for-bit."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qfish.backend import available_backends

BACKENDS = available_backends()

needs_compiled = pytest.mark.skipif(
    "compiled" not in BACKENDS, reason="compiled extension not built"
)

small_ints = st.lists(st.integers(-(10**3), 10**3), max_size=12)
big_ints = st.lists(st.integers(-(10**25), 10**25), max_size=8)
mixed = st.one_of(small_ints, big_ints)


@needs_compiled
class TestKernelAgreement:
    @given(mixed, mixed)
    @settings(max_examples=300, deadline=None)
    def test_mul(self, a, b):
        assert BACKENDS["compiled"].mul(a, b) == BACKENDS["pure"].mul(a, b)

    @given(mixed, mixed, st.integers(0, 20))
    @settings(max_examples=300, deadline=None)
    def test_mul_trunc(self, a, b, n):
        assert BACKENDS["compiled"].mul_trunc(a, b, n) == BACKENDS["pure"].mul_trunc(a, b, n)

    def test_int64_boundary(self):
        # values straddling the fast-path overflow bound
        near = 2**31
        a = [near, -near, near - 1]
        b = [near, near, -near]
        assert BACKENDS["compiled"].mul(a, b) == BACKENDS["pure"].mul(a, b)
        huge = [2**63 - 1, -(2**63), 2**64]
        assert BACKENDS["compiled"].mul(huge, huge) == BACKENDS["pure"].mul(huge, huge)

    def test_empty_and_zero(self):
        for impl in BACKENDS.values():
            assert impl.mul([], [1, 2]) == []
            assert impl.mul_trunc([1], [1], 0) == []
            assert impl.mul([0, 0], [0]) == [0, 0]
