import random

import pytest

from abaplus import _kernel_py, kernel

from conftest import random_frameworks

BACKENDS = kernel.available_backends()
needs_compiled = pytest.mark.skipif("cython" not in BACKENDS, reason="compiled kernel not built")


def kernels(fw):
    idx = fw.index
    args = (idx.n, idx.entry_targets, idx.entry_masks, idx.entry_lower)
    return [kernel.make_kernel(*args, backend=b) for b in BACKENDS]


def test_fallback_always_available():
    assert "python" in BACKENDS
    assert kernel.backend_module("python") is _kernel_py


def test_env_selects_backend(monkeypatch):
    monkeypatch.setenv("ABAP_KERNEL", "python")
    assert kernel.backend_module() is _kernel_py


@needs_compiled
def test_compiled_selected_by_default(monkeypatch):
    monkeypatch.delenv("ABAP_KERNEL", raising=False)
    assert kernel.backend_module().BACKEND == "cython"


def test_wide_frameworks_fall_back():
    k = kernel.make_kernel(70, [], [], [], backend="auto")
    assert type(k) is _kernel_py.Kernel
    assert sorted(kernel.maximal([1 << 70, 1])) == [1, 1 << 70]


@needs_compiled
def test_parity():
    for fw in random_frameworks(51, 80):
        py, cy = kernels(fw)
        n = fw.index.n
        for pref in (False, True):
            assert py.classify(pref) == cy.classify(pref)
            assert sorted(py.conflict_free_sets(pref)) == sorted(cy.conflict_free_sets(pref))
            for e in range(1 << n):
                assert py.defended(e, pref) == cy.defended(e, pref)
        for a in range(1 << n):
            for b in range(1 << n):
                assert py.plain(a, b) == cy.plain(a, b)
                assert py.kind(a, b) == cy.kind(a, b)


@needs_compiled
def test_antichain_parity():
    rng = random.Random(52)
    from abaplus import _kernel

    for _ in range(200):
        masks = [rng.getrandbits(8) for _ in range(rng.randint(0, 30))]
        assert sorted(_kernel.maximal(masks)) == sorted(_kernel_py.maximal(masks))
        assert sorted(_kernel.minimal(masks)) == sorted(_kernel_py.minimal(masks))
