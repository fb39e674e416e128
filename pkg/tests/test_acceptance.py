"""Exit criteria, one test each.  Every test records a [PASS]/[FAIL] line.

Run ``pytest -m acceptance -v`` for the table in the terminal summary, or
``python3 tests/test_acceptance.py`` for a standalone report.
"""

import math
import time

import numpy as np
import pytest

from schurpress import _kernels, cg
from schurpress import combinatorics as comb
from schurpress.compressor import compress, compress_dense, decompress
from schurpress.oracle import (
    expected_compressed,
    random_qudit,
    spin_cg_closed_form,
    tensor_power_state,
)
from schurpress.states import DenseState

try:
    from conftest import ACCEPTANCE_LINES
except ImportError:  # standalone run outside the tests directory
    ACCEPTANCE_LINES = []

pytestmark = pytest.mark.acceptance
SEED = 7


def record(tag: str, ok: bool, detail: str) -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] {tag} {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def test_ac1_dimension_formula():
    comb._count_patterns.cache_clear()
    start = time.perf_counter()
    bad = []
    for d in range(1, 6):
        for n in range(0, 11):
            lam = comb.Partition.symmetric(n, d)
            expected = math.comb(n + d - 1, d - 1)
            if comb.dim_irrep(lam) != expected or len(comb.enumerate_patterns(lam)) != expected:
                bad.append((d, n))
    elapsed = time.perf_counter() - start
    record("AC1", not bad and elapsed < 1.0,
           f"dim_irrep([n,0..0]) == C(n+d-1,d-1) for d<=5, n<=10; mismatches={bad}; {elapsed:.3f}s (< 1s)")


def test_ac2_compression_size():
    rng = np.random.default_rng([SEED, 2])
    bad = [(d, n) for d in range(1, 5) for n in range(1, 11)
           if len(compress(random_qudit(d, rng), n).amplitudes) != math.comb(n + d - 1, d - 1)]
    record("AC2", not bad, f"output length == C(n+d-1,d-1) for d<=4, n<=10; mismatches={bad}")


def test_ac3_oracle_fidelity():
    rng = np.random.default_rng([SEED, 3])
    start = time.perf_counter()
    worst = 0.0
    for d in (2, 3, 4):
        for n in range(2, 7):
            for _ in range(50):
                phi = random_qudit(d, rng)
                err = np.abs(compress(phi, n).amplitudes - expected_compressed(phi, n).amplitudes).max()
                worst = max(worst, float(err))
    elapsed = time.perf_counter() - start
    record("AC3", worst <= 1e-9 and elapsed < 30,
           f"max |compress - oracle| = {worst:.2e} (<= 1e-9) over 750 states; {elapsed:.2f}s (< 30s)")


def test_ac4_isometry_unitarity():
    iso = uni = 0.0
    for d in range(1, 5):
        for k in range(0, 9):
            w = cg.build_cg_symmetric(d, k).matrix
            iso = max(iso, float(np.abs(w @ w.conj().T - np.eye(len(w))).max()))
            u = cg.completed_symmetric(d, k).matrix
            uni = max(uni, float(np.abs(u.conj().T @ u - np.eye(len(u))).max()))
    record("AC4", iso <= 1e-10 and uni <= 1e-10,
           f"max |WW^+ - I| = {iso:.2e}, max |U^+U - I| = {uni:.2e} for d<=4, k<=8 (<= 1e-10)")


def test_ac5_dense_path_and_leakage():
    rng = np.random.default_rng([SEED, 5])
    err = leak = 0.0
    for d in range(1, 4):
        for n in range(1, 7):
            for _ in range(5):
                phi = random_qudit(d, rng)
                block, lk = compress_dense(tensor_power_state(phi, n))
                err = max(err, float(np.abs(block.amplitudes - compress(phi, n).amplitudes).max()))
                leak = max(leak, lk)
    _, singlet = compress_dense(DenseState(2, 2, np.array([0, 1, -1, 0]) / math.sqrt(2)))
    ok = err <= 1e-9 and leak <= 1e-10 and abs(singlet - 1) <= 1e-12
    record("AC5", ok, f"dense vs fast {err:.2e} (<= 1e-9), product leakage {leak:.2e} (<= 1e-10), "
                      f"singlet leakage {singlet:.15f} (1 within 1e-12)")


def test_ac6_spin_closed_form():
    worst = 0.0
    count = 0
    for k in range(0, 9):
        w = cg.build_cg_symmetric(2, k)
        m = w.matrix
        for r, col in zip(*np.nonzero(np.abs(m) > 0)):
            c_in, letter = w.col_index[col]
            ref = spin_cg_closed_form(k, c_in[0], letter)
            law = math.sqrt((c_in[letter - 1] + 1) / (k + 1))
            worst = max(worst, abs(abs(m[r, col]) - ref), abs(ref - law))
            count += 1
    record("AC6", worst <= 1e-10, f"{count} nonzero d=2 entries vs closed form, max error {worst:.2e} (<= 1e-10)")


def test_ac7_roundtrip():
    rng = np.random.default_rng([SEED, 7])
    worst = 1.0
    for d in range(1, 4):
        for n in range(1, 7):
            for _ in range(20):
                phi = random_qudit(d, rng)
                restored = decompress(compress(phi, n))
                worst = min(worst, abs(np.vdot(restored.amplitudes, tensor_power_state(phi, n).amplitudes)))
    record("AC7", worst >= 1 - 1e-9, f"min roundtrip fidelity {worst:.15f} (>= 1 - 1e-9)")


def test_ac8_inner_product_law():
    rng = np.random.default_rng([SEED, 8])
    worst = 0.0
    for d in range(1, 5):
        for n in range(1, 9):
            for _ in range(50):
                phi, psi = random_qudit(d, rng), random_qudit(d, rng)
                lhs = np.vdot(compress(phi, n).amplitudes, compress(psi, n).amplitudes)
                worst = max(worst, abs(lhs - np.vdot(phi.amplitudes, psi.amplitudes) ** n))
    record("AC8", worst <= 1e-9, f"max |<c(phi),c(psi)> - <phi,psi>^n| = {worst:.2e} (<= 1e-9)")


@pytest.mark.parametrize("backend", sorted(_kernels.BACKENDS))
def test_ac9_scaling(backend):
    _kernels.warm_up()  # JIT compilation is a one-time cost, excluded
    phi = random_qudit(3, np.random.default_rng([SEED, 9]))
    cg.clear_caches()  # table construction is included
    start = time.perf_counter()
    out = compress(phi, 50, backend=backend)
    elapsed = time.perf_counter() - start
    ok = elapsed < 1.0 and len(out.amplitudes) == 1326 and abs(out.norm() - 1) <= 1e-10
    record(f"AC9[{backend}]", ok,
           f"d=3, n=50 -> 1326 amplitudes (dense would be 3^50 = {3**50:.1e}) in {elapsed:.3f}s (< 1s)")


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
