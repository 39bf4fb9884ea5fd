"""Both kernel backends against each other and against itertools."""

from itertools import product

import numpy as np
import pytest

from oracles import ssyt_brute
from zasym import _kernels as K

needs_numba = pytest.mark.skipif(not K.HAVE_NUMBA, reason="numba not installed")


@pytest.mark.parametrize("lo,hi", [([1, 0, -1], [3, 3, 3]), ([0], [4]), ([2, -2, 0, 1], [2, 1, 1, 3])])
def test_odometer_matches_product(backend, lo, hi):
    total = int(np.prod(np.array(hi) - np.array(lo) + 1))
    block = K.odometer_block(lo, hi, 0, total)
    assert [tuple(r) for r in block.tolist()] == list(product(*[range(a, b + 1) for a, b in zip(lo, hi)]))
    assert K.odometer_rank(block, lo, hi).tolist() == list(range(total))
    tail = K.odometer_block(lo, hi, total - 2, 2)
    assert (tail == block[-2:]).all()


def test_rank_flags_out_of_range(backend):
    assert K.odometer_rank([[0, 5], [1, 1]], [0, 0], [2, 2]).tolist() == [-1, 4]


def test_norm_histogram(backend):
    lo, hi = [1, 0, -1], [2, 2, 2]
    sums = [sum(v) for v in product(range(1, 3), range(0, 3), range(-1, 3))]
    expected = np.bincount(np.array(sums) - sum(lo))
    assert K.norm_histogram(lo, hi).tolist() == expected.tolist()
    assert K.norm_histogram([], []).tolist() == [1]


@pytest.mark.parametrize("parts,n", [((2, 1), 3), ((1,), 3), ((1, 1, 1), 2), ((3, 2), 3), ((2, 2, 1), 4), ((), 2)])
def test_ssyt_fillings_match_brute_force(backend, parts, n):
    got = [tuple(r) for r in K.ssyt_fillings(parts, n).tolist()]
    assert got == ssyt_brute(parts, n)
    hist = K.ssyt_norm_histogram(parts, n)
    assert int(hist.sum()) == len(got)
    if got:
        brute = np.bincount([sum(v) - len(v) for v in got])
        assert hist[: brute.size].tolist() == brute.tolist()


@needs_numba
def test_backends_agree_on_larger_inputs():
    lo = np.array([1, 0, -1, -2, 2, 1, 3])
    hi = np.full(7, 4)
    assert (K.norm_histogram(lo, hi, "numba") == K.norm_histogram(lo, hi, "numpy")).all()
    a = K.ssyt_fillings((4, 3, 1), 5, "numba")
    b = K.ssyt_fillings((4, 3, 1), 5, "numpy")
    assert a.shape == b.shape and (a == b).all()
    assert (K.ssyt_norm_histogram((3, 3, 2), 5, "numba") == K.ssyt_norm_histogram((3, 3, 2), 5, "numpy")).all()


def test_backend_flag_values():
    assert K.BACKEND in ("numba", "numpy")
