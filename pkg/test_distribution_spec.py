"""
Testes de leitura e validação de DistributionSpec.
"""

import sys

import numpy as np
import pytest

from distribution_spec import build_spec, parse_spec
from exceptions import DimensionError, DomainError, SpecError
from matvar import HermMatrix, MatVar
from samplers import make_rng


def _documento(**extra):
    documento = {
        "family": "pearson2_riesz",
        "variant": "I",
        "beta": 1,
        "params": {"nu": 3, "n": 2, "kappa": [1], "tau": [0]},
    }
    documento.update(extra)
    return documento


def test_parse_and_evaluate():
    spec = parse_spec(_documento())
    assert spec.point_shape == (2, 1)
    assert not spec.hermitian
    valor = spec.evaluate(MatVar.from_real([[0.0], [0.0]]))
    assert valor.in_support and np.isfinite(valor.logpdf)
    fora = spec.logpdf(MatVar.from_real([[1.0], [0.5]]))
    assert not fora.in_support and fora.logpdf == -np.inf


def test_unknown_top_level_field():
    with pytest.raises(SpecError, match="<raiz>"):
        parse_spec(_documento(extra=1))


def test_unknown_param():
    documento = _documento()
    documento["params"]["lambda"] = 2
    with pytest.raises(SpecError, match="params"):
        parse_spec(documento)


def test_param_not_used_by_family():
    documento = _documento()
    documento["params"]["theta"] = MatVar.from_real([[1.0]]).to_json()
    with pytest.raises(SpecError, match="params"):
        parse_spec(documento)


def test_missing_required_field():
    documento = _documento()
    del documento["params"]["tau"]
    with pytest.raises(SpecError):
        parse_spec(documento)
    with pytest.raises(SpecError):
        parse_spec({"family": "riesz", "variant": "I", "params": {"a": 1, "kappa": [0]}})


def test_variant_must_match_family():
    with pytest.raises(SpecError, match="variant"):
        parse_spec(_documento(variant="c"))
    with pytest.raises(SpecError):
        parse_spec(_documento(variant="III"))


def test_matrix_beta_mismatch():
    documento = _documento()
    documento["params"]["xi"] = MatVar.from_real([[2.0]], 2).to_json()
    with pytest.raises(SpecError, match="xi"):
        parse_spec(documento)


def test_m_must_match_kappa():
    with pytest.raises(SpecError):
        build_spec("riesz", "I", 1, {"a": 3.0, "kappa": [0.0, 0.0]}, m=3)
    with pytest.raises(SpecError, match="tau"):
        build_spec("pearson2_riesz", "I", 1, {"nu": 3.0, "n": 2, "kappa": [1.0], "tau": [0.0, 0.0]})


def test_domain_errors_pass_through():
    with pytest.raises(DomainError):
        build_spec("riesz", "I", 1, {"a": 0.2, "kappa": [0.0, 0.0]})


def test_point_shape_checked():
    spec = parse_spec(_documento())
    with pytest.raises(DimensionError):
        spec.evaluate(MatVar.from_real([[0.0, 0.0]]))
    with pytest.raises(DimensionError):
        spec.evaluate(MatVar.from_real([[0.0], [0.0]], 2))


def test_sample_types():
    riesz = build_spec("riesz", "I", 2, {"a": 3.0, "kappa": [1.0, 0.0]})
    amostras = riesz.sample(make_rng(1), 3)
    assert len(amostras) == 3
    assert all(isinstance(a, HermMatrix) and a.shape == (2, 2) for a in amostras)
    kotz = build_spec("kotz_riesz", "I", 1, {"n": 3, "kappa": [0.0, 0.0]})
    assert kotz.sample(make_rng(1), 1)[0].shape == (3, 2)


def test_transposed_shape():
    spec = build_spec("pearson2_riesz_transposed", "I", 1, {"a": 2.0, "m": 3, "kappa": [0.5], "tau": [0.0]})
    assert spec.point_shape == (1, 3)
    with pytest.raises(SpecError):
        build_spec("pearson2_riesz_transposed", "I", 1, {"a": 2.0, "m": 3, "kappa": [0.5], "tau": [0.0]}, n=2)


def test_document_round_trip():
    xi = MatVar.from_real([[1.5]]).to_json()
    spec = build_spec("pearson2_riesz", "II", 1, {"nu": 3.0, "n": 2, "kappa": [0.5], "tau": [0.5], "xi": xi})
    copia = parse_spec(spec.to_document())
    ponto = MatVar.from_real([[0.2], [-0.3]])
    assert copia.evaluate(ponto).logpdf == spec.evaluate(ponto).logpdf


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
