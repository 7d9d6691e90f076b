"""
Testes da quadratura adaptativa de Gauss-Legendre.
"""

import sys

import numpy as np
import pytest

from quadrature import integrate, integrate_half_line, radial_integral


def test_smooth_integrand():
    resultado = integrate(np.sin, 0.0, np.pi)
    assert resultado.converged
    assert resultado.value == pytest.approx(2.0, abs=1e-12)
    assert resultado.nodes > 0


def test_endpoint_singularity():
    resultado = integrate(lambda x: x**-0.5, 0.0, 1.0)
    assert resultado.value == pytest.approx(2.0, abs=1e-9)


def test_half_line():
    resultado = integrate_half_line(lambda x: np.exp(-x))
    assert resultado.value == pytest.approx(1.0, abs=1e-9)
    deslocado = integrate_half_line(lambda x: np.exp(-x), lo=2.0)
    assert deslocado.value == pytest.approx(np.exp(-2.0), abs=1e-9)


def test_radial_gaussian():
    resultado = radial_integral(lambda r: np.exp(-r * r), 3)
    assert resultado.value == pytest.approx(np.pi**1.5, rel=1e-9)
    disco = radial_integral(lambda r: np.ones_like(r), 2, 0.0, 1.0)
    assert disco.value == pytest.approx(np.pi, rel=1e-12)


def test_depth_limit_reports_non_convergence():
    resultado = integrate(lambda x: np.abs(x - 1.0 / 3.0), 0.0, 1.0, tol=1e-15, max_depth=0)
    assert not resultado.converged


def test_halving_tolerance_within_error_bound():
    def f(x):
        return np.exp(-x) * x**1.5

    grosso = integrate_half_line(f, tol=1e-8)
    fino = integrate_half_line(f, tol=5e-9)
    assert abs(grosso.value - fino.value) <= grosso.error + fino.error + 1e-12


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
