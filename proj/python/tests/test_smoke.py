import math

import pytest

zp = pytest.importorskip("_zetapair")


def test_kernels():
    assert zp.fejer(0.0) == 1.0
    assert zp.fejer(0.5) == 0.5
    assert zp.fejer_hat(0.5) == pytest.approx(4.0 / math.pi**2, abs=1e-14)
    assert zp.mt(1.5) == 0.0
    assert zp.mt_hat(0.1) >= 0.0
    k = zp.tsang_K(zp.TsangParams(b=1.0, kernel=zp.KernelId.Fejer), 0.5 + 0.2j)
    assert isinstance(k, complex)
    assert zp.tsang_K_re(zp.TsangParams(b=1.0, kernel=zp.KernelId.Fejer), 3.0, 0.5) > 0.0


def test_bounds():
    assert zp.c_b(zp.KernelId.Fejer, 0.0) == pytest.approx(4.0 / 3.0, abs=1e-11)
    row = zp.proportions(zp.KernelId.MontgomeryTaylor, 1.0)
    assert row.simple_coeff == pytest.approx(0.61748, abs=2e-5)
    rows = zp.bound_table(zp.KernelId.Fejer, [0.0, 1.0])
    assert [r.b for r in rows] == [0.0, 1.0]


def test_zeros_and_pair_sums(tmp_path):
    ds = zp.compute_zeros(10.0, 50.0)
    assert len(ds) == 10
    assert ds.zeros[0].gamma == pytest.approx(14.134725, abs=1e-5)
    assert abs(zp.hardy_Z(ds.zeros[0].gamma)) < 1e-6
    assert zp.n_of_T(100.0) == pytest.approx(29.0, abs=0.1)

    path = tmp_path / "zeros.txt"
    zp.write_zero_file(path, ds)
    back = zp.parse_zero_file(path)
    assert len(back) == len(ds)

    spec = zp.PairSumSpec()
    spec.x = 3.0
    spec.t_lo = 10.0
    spec.t_hi = 50.0
    res = zp.F_pair_sum(ds, spec)
    assert res.n_zeros == 10
    assert abs(res.value.imag) < 1e-9
    assert res.value.real == pytest.approx(zp.F_integral_oracle(ds, 3.0), abs=1e-6)


def test_synthetic_and_kernel_sum():
    ds = zp.synthetic_online_set(1, 20, 51.0, 99.0)
    assert len(ds) == 20 and ds.on_line
    params = zp.TsangParams(b=0.5, kernel=zp.KernelId.Fejer)
    v = zp.kernel_weighted_sum(ds, params, 50.0)
    assert v.real > 0.0
