"""Smoke tests for the python extension module."""

import math
import os
import sys

import pytest

_mod_dir = os.environ.get("QDILOG_MODULE_DIR")
if _mod_dir:
    sys.path.insert(0, _mod_dir)

qd = pytest.importorskip("_qdilog")


def test_zeta_unit_modulus():
    z = qd.zeta_b(0.7)
    assert abs(abs(z) - 1.0) < 1e-14


def test_gb_on_critical_line():
    b = 0.7
    Q = b + 1.0 / b
    v = qd.gb(b, complex(Q / 2, 0.3))
    assert abs(math.hypot(v["re"], v["im"]) - 1.0) < 1e-9
    assert not v["at_pole"]
    assert v["abs_err"] < 1e-8


def test_gb_pole_flag():
    v = qd.gb(0.7, 0j)
    assert v["at_pole"]


def test_little_gb_unitary():
    v = qd.little_gb(0.7, 1.7)
    assert abs(math.hypot(v["re"], v["im"]) - 1.0) < 1e-9


def test_qbeta_integer_continuation():
    b = 0.7
    q2 = complex(math.cos(2 * math.pi * b * b), math.sin(2 * math.pi * b * b))
    v = qd.qbeta(b, 2 * b, b)
    expect = 1 + q2
    assert abs(complex(v["re"], v["im"]) - expect) < 1e-10


def test_ft_identity():
    lhs, rhs, residual = qd.ft_gb_check(0.7, 2.0)
    assert residual < 1e-6


def test_wavepacket_unit_modulus():
    value, err = qd.wavepacket_coeff(0.7, 0.5, 1.25)
    assert abs(abs(value) - 1.0) < 1e-9


def test_qbinom_check():
    assert max(qd.qbinom_check(0.7, 3)) < 1e-5


def test_verify_suites():
    rep = qd.verify("sl2")
    assert rep["all_pass"]
    rep = qd.verify("qweyl", seed=11)
    assert rep["all_pass"]
    bad = qd.verify("sl3", mutate="serre")
    assert not bad["all_pass"]


def test_parameter_validation():
    with pytest.raises(qd.InvalidParameter):
        qd.gb(0.5, complex(1.0, 0.0))  # b^2 = 1/4 resonant
    v = qd.gb(0.8, complex(1.0, 0.0), allow_resonant=True)
    assert not v["at_pole"]
