import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from bchdim import _pykernels, kernels

ck = pytest.importorskip("bchdim._ckernels")

MODULI = [(3, 80), (3, 40), (2, 255), (4, 85), (4, 255), (5, 124), (7, 48), (9, 80), (8, 511), (2, 1023)]


@pytest.mark.parametrize("q,n", MODULI)
def test_leader_tables_agree(q, n):
    assert np.array_equal(ck.leader_table(n, q), _pykernels.leader_table(n, q))


@given(st.sampled_from(MODULI), st.data())
def test_scalar_kernels_agree(qn, data):
    q, n = qn
    a = data.draw(st.integers(0, n - 1))
    count = data.draw(st.integers(1, n))
    assert ck.orbit_min_size(a, n, q) == _pykernels.orbit_min_size(a, n, q)
    assert ck.is_leader(a, n, q) == _pykernels.is_leader(a, n, q)
    assert ck.next_leader(a, n, q) == _pykernels.next_leader(a, n, q)
    assert ck.union_count(a, count, n, q) == _pykernels.union_count(a, count, n, q)


def test_backend_is_compiled_by_default():
    assert kernels.BACKEND == "cython"


def test_pure_python_switch():
    env = dict(os.environ, BCH_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "from bchdim import kernels; print(kernels.BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "python"


def test_huge_modulus_falls_back_to_python():
    n = 3**41 - 1  # n * q exceeds int64
    assert kernels._impl(n, 3) is _pykernels
    assert kernels.is_leader(1, n, 3)
