"""Backend agreement and kernel-level contracts."""

from __future__ import annotations

import itertools
import os
import subprocess
import sys

import pytest

from fusionkit import kernels


def test_backend_is_reported():
    assert kernels.BACKEND in ("python", "compiled")
    assert "python" in kernels.backends()


def test_backends_agree_exhaustively():
    table = kernels.backends()
    if len(table) < 2:
        pytest.skip("compiled kernel not built; nothing to compare")
    python_fn = table["python"]
    compiled_fn = table["compiled"]
    for r in range(1, 4):
        for sizes in itertools.product(range(0, 4), repeat=r):
            assert python_fn(sizes) == compiled_fn(sizes), sizes
    for sizes in [(1, 1, 4), (2, 2, 2, 2), (4, 4, 4), (3, 1, 3, 1)]:
        assert python_fn(sizes) == compiled_fn(sizes), sizes


def test_kernel_output_is_canonical():
    for fn in kernels.backends().values():
        out = fn((2, 1, 2))
        assert out == sorted(out)
        assert out[0] == ()
        assert len(set(out)) == len(out)


def test_kernel_edge_cases():
    for fn in kernels.backends().values():
        assert fn((0,)) == [()]
        assert fn((0, 0, 0)) == [()]
        with pytest.raises(ValueError):
            fn((-1, 2))
        with pytest.raises(ValueError):
            fn((kernels.MAX_VERTICES + 1,))


def test_cached_wrapper_returns_tuples():
    out = kernels.enumerate_arc_sets((1, 1))
    assert isinstance(out, tuple)
    assert out == ((), ((1, 2),))
    assert kernels.enumerate_arc_sets((1, 1)) is out


def test_backend_env_override_selects_python():
    code = "from fusionkit import kernels; print(kernels.BACKEND)"
    proc = subprocess.run(
        [sys.executable, "-c", code],
        capture_output=True,
        text=True,
        env={**os.environ, "FUSIONKIT_BACKEND": "python"},
    )
    assert proc.returncode == 0, proc.stderr
    assert proc.stdout.strip() == "python"
