"""Acceptance suite: every criterion as an executable check.

Each test prints one ``ACCEPTANCE <n> PASS|FAIL`` line with the measured
quantities (run pytest with -s to see them inline), then asserts.  Stated
runtime budgets are asserted alongside the numerical thresholds.
"""

import cmath
import math
import time

import numpy as np

from eulerprod import (
    BranchSide,
    ProductVariant,
    ScanMode,
    ScanSpec,
    corrected_product,
    e1,
    error_decay,
    log_raw_product,
    mertens_ratio,
    prime_zeta_truncated,
    scan,
    sieve,
    zeta_ref,
)
from eulerprod.cli import main as cli_main

from test_product import prime_zeta_mobius
from test_specfun import e1_quadrature

ZETA = ProductVariant.ZETA
INVERSE = ProductVariant.INVERSE_ZETA
RATIO = ProductVariant.RATIO_ZETA2S_OVER_ZETA


def report(num: int, ok: bool, detail: str) -> str:
    line = f"ACCEPTANCE {num:02d} {'PASS' if ok else 'FAIL'}: {detail}"
    print(line)
    return line


def test_criterion_01_e1_oracle_suite():
    start = time.perf_counter()
    rng = np.random.default_rng(20250809)
    worst = 0.0
    for _ in range(100):
        radius = math.exp(rng.uniform(math.log(0.01), math.log(50.0)))
        angle = rng.uniform(-3.0, 3.0)
        z = radius * cmath.exp(1j * angle)
        rel = abs(e1(z).value - e1_quadrature(z)) / abs(e1_quadrature(z))
        worst = max(worst, rel)
    above = e1(-1.0, BranchSide.FROM_ABOVE).value.imag
    below = e1(-1.0, BranchSide.FROM_BELOW).value.imag
    branch_dev = max(abs(above + math.pi), abs(below - math.pi))
    elapsed = time.perf_counter() - start
    ok = worst < 1e-10 and branch_dev < 1e-12 and elapsed < 5.0
    detail = (
        f"E1 vs quadrature worst rel {worst:.2e} (<1e-10), branch imag dev "
        f"{branch_dev:.2e} (<1e-12), {elapsed:.2f}s (<5s)"
    )
    line = report(1, ok, detail)
    assert ok, line


def test_criterion_02_zeta_reference_sanity():
    dev2 = abs(zeta_ref(2.0 + 0.0j) - math.pi**2 / 6) / (math.pi**2 / 6)
    ratio = zeta_ref(4.0 + 0.0j) / zeta_ref(2.0 + 0.0j)
    dev42 = abs(ratio - math.pi**2 / 15) / (math.pi**2 / 15)
    ok = dev2 < 1e-12 and dev42 < 1e-12
    line = report(2, ok, f"zeta(2) rel dev {dev2:.2e}, zeta(4)/zeta(2) rel dev {dev42:.2e} (<1e-12)")
    assert ok, line


def test_criterion_03_real_axis_scan(table_1e6):
    start = time.perf_counter()
    spec = ScanSpec(
        mode=ScanMode.REAL_AXIS, x=10**6, step=0.01, s_min=0.6, s_max=2.0
    )
    rows = scan(spec, table_1e6)
    elapsed = time.perf_counter() - start
    assert all(r.rel_err is not None for r in rows)
    worst = max(rows, key=lambda r: r.rel_err)
    at_two = min(rows, key=lambda r: abs(r.sigma - 2.0))
    assert abs(at_two.sigma - 2.0) < 1e-9
    ok = worst.rel_err < 1e-2 and at_two.abs_err < 1e-3 and elapsed < 120.0
    detail = (
        f"max |Re(v)-zeta|/|zeta| = {worst.rel_err:.3e} at s={worst.sigma:.2f} "
        f"(<1e-2), err at s=2 {at_two.abs_err:.2e} (<1e-3), {elapsed:.1f}s (<120s)"
    )
    line = report(3, ok, detail)
    assert ok, line


def test_criterion_04_vertical_line_median_error(table_1e3):
    spec = ScanSpec(
        mode=ScanMode.VERTICAL_LINE, x=10**3, step=0.1, sigma=0.8, t_min=0.0, t_max=50.0
    )
    rows = scan(spec, table_1e3)
    median = float(np.median([r.rel_err for r in rows]))
    ok = median < 0.05
    line = report(4, ok, f"median relative modulus error {median:.4f} (<0.05) over {len(rows)} points")
    assert ok, line


def test_criterion_05_smoothing_contrast(table_1e3, table_1e5):
    def rms(x, table):
        spec = ScanSpec(
            mode=ScanMode.VERTICAL_LINE, x=x, step=0.1, sigma=0.55, t_min=0.0, t_max=50.0
        )
        rows = scan(spec, table)
        return math.sqrt(float(np.mean([r.abs_err**2 for r in rows])))

    coarse = rms(10**3, table_1e3)
    fine = rms(10**5, table_1e5)
    ok = fine < coarse
    line = report(5, ok, f"RMS modulus error {fine:.4f} at x=1e5 < {coarse:.4f} at x=1e3")
    assert ok, line


def test_criterion_06_mertens_suite(table_1e2, table_1e3, table_1e4, table_1e5):
    r10 = mertens_ratio(sieve(10))
    ratios = [mertens_ratio(t) for t in (table_1e2, table_1e3, table_1e4, table_1e5)]
    hand_ok = abs(r10 - 1.06686) <= 1e-4
    near_one = abs(ratios[1] - 1.0) < 0.1
    decreasing = all(a > b for a, b in zip(ratios, ratios[1:])) and ratios[-1] > 1.0
    ok = hand_ok and near_one and decreasing
    detail = (
        f"ratio(10)={r10:.6f} (1.06686 +- 1e-4), ratio(1e3)={ratios[1]:.6f}, "
        f"chain {' > '.join(f'{r:.5f}' for r in ratios)} > 1"
    )
    line = report(6, ok, detail)
    assert ok, line


def test_criterion_07_decay_exponents(table_1e6):
    start = time.perf_counter()
    grid = [10**3, 10**4, 10**5, 10**6]
    results = {}
    for sigma in (0.75, 1.5):
        fit = error_decay(complex(sigma, 5.0), grid, table=table_1e6)
        results[sigma] = fit.slope
    elapsed = time.perf_counter() - start
    devs = {s: abs(results[s] - (0.5 - s)) for s in results}
    ok = all(d <= 0.15 for d in devs.values()) and elapsed < 180.0
    detail = (
        f"slope(0.75)={results[0.75]:.3f} (target -0.25), "
        f"slope(1.5)={results[1.5]:.3f} (target -1.0), tol 0.15, {elapsed:.1f}s (<180s)"
    )
    line = report(7, ok, detail)
    assert ok, line


def test_criterion_08_algebraic_identities(table_1e2, table_1e3, table_1e4):
    tables = {10**2: table_1e2, 10**3: table_1e3, 10**4: table_1e4}
    rng = np.random.default_rng(777)
    worst_inv = worst_ratio = worst_conj = 0.0
    for _ in range(200):
        s = complex(rng.uniform(0.5 + 1e-6, 3.0), rng.uniform(-50.0, 50.0))
        table = tables[int(rng.choice((10**2, 10**3, 10**4)))]
        v_zeta = corrected_product(s, table, ZETA).value
        v_inv = corrected_product(s, table, INVERSE).value
        v_ratio = corrected_product(s, table, RATIO).value
        worst_inv = max(worst_inv, abs(v_zeta * v_inv - 1.0))
        raw_2s = cmath.exp(log_raw_product(2 * s, table, ZETA))
        worst_ratio = max(worst_ratio, abs(v_ratio * v_zeta - raw_2s) / abs(raw_2s))
        v_conj = corrected_product(s.conjugate(), table, ZETA).value
        worst_conj = max(worst_conj, abs(v_conj - v_zeta.conjugate()) / abs(v_zeta))
    ok = worst_inv < 1e-12 and worst_ratio < 1e-12 and worst_conj < 1e-12
    detail = (
        f"zeta*inverse dev {worst_inv:.2e}, ratio*zeta dev {worst_ratio:.2e}, "
        f"conjugate dev {worst_conj:.2e} (all <1e-12, 200 samples)"
    )
    line = report(8, ok, detail)
    assert ok, line


def test_criterion_09_prime_zeta_cross_checks(table_1e6):
    value = prime_zeta_truncated(2.0 + 0.0j, table_1e6)
    dev_direct = abs(value - 0.45224742)
    oracle = prime_zeta_mobius(0.7)
    dev_mobius = abs(prime_zeta_truncated(0.7 + 0.0j, table_1e6) - oracle)
    ok = dev_direct < 1e-6 and dev_mobius < 1e-2
    detail = (
        f"P(2) truncation dev {dev_direct:.2e} (<1e-6 vs direct sum), "
        f"P(0.7) vs Moebius oracle dev {dev_mobius:.3e} (<1e-2)"
    )
    line = report(9, ok, detail)
    assert ok, line


def test_criterion_10_scan_determinism(tmp_path, capsys):
    args = ["scan-line", "--sigma", "0.8", "--t-max", "50", "--step", "0.1",
            "--x", "1000"]
    path_a = tmp_path / "run_a.csv"
    path_b = tmp_path / "run_b.csv"
    assert cli_main(args + ["--out", str(path_a)]) == 0
    assert cli_main(args + ["--out", str(path_b)]) == 0
    capsys.readouterr()
    identical = path_a.read_bytes() == path_b.read_bytes()
    spec = ScanSpec(
        mode=ScanMode.REAL_AXIS, x=10**3, step=0.05, s_min=0.6, s_max=2.0
    )
    table = sieve(10**3)
    rows_equal = scan(spec, table) == scan(spec, table)
    ok = identical and rows_equal
    line = report(
        10, ok, f"CSV bytes identical: {identical}, scan rows identical: {rows_equal}"
    )
    assert ok, line
