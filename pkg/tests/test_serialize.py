import json

import pytest

from darmonsel.errors import InputError
from darmonsel.feasibility import feasibility_report
from darmonsel.fields import IdealFactorization, primes_above
from darmonsel.serialize import (
    InputConfig,
    Options,
    config_from_doc,
    emit_config,
    emit_report,
    parse_config,
    parse_report,
    realize_config,
)

GOLDEN_22 = {
    "schema_version": 1,
    "id": "g22",
    "field_poly": [0, 1],
    "delta": [5],
    "conductor": {"generator": [22]},
}


def test_parse_config_golden():
    config = config_from_doc(GOLDEN_22)
    assert config.field_poly == (0, 1)
    assert config.delta == (5,)
    assert config.options == Options()
    assert config.config_id == "g22"
    K, N, order = realize_config(config)
    assert N.norm() == 22 and order is None
    assert K.base.degree == 1


def test_parse_config_rejections():
    with pytest.raises(InputError):
        parse_config("not json")
    with pytest.raises(InputError):
        config_from_doc({**GOLDEN_22, "schema_version": 2})
    with pytest.raises(InputError):
        config_from_doc({**GOLDEN_22, "conductor": {}})
    with pytest.raises(InputError):
        config_from_doc({**GOLDEN_22, "conductor": {
            "generator": [22], "factors": []}})
    with pytest.raises(InputError):
        config_from_doc({**GOLDEN_22, "unknown_key": 1})
    with pytest.raises(InputError):
        config_from_doc({**GOLDEN_22, "options": {"precision_bits": 0}})
    with pytest.raises(InputError):
        config_from_doc({**GOLDEN_22, "options": {"allow_drop_b4": "yes"}})
    with pytest.raises(InputError):
        config_from_doc({**GOLDEN_22, "delta": [1.5]})
    missing = dict(GOLDEN_22)
    del missing["conductor"]
    with pytest.raises(InputError):
        config_from_doc(missing)


def test_config_roundtrip():
    config = config_from_doc({**GOLDEN_22,
                              "order_conductor": {"generator": [3]},
                              "options": {"oracle_check": True,
                                          "precision_bits": 64}})
    again = parse_config(emit_config(config))
    assert again == config


def test_factored_conductor_form(F_sqrt2):
    P1, P2 = primes_above(F_sqrt2, 7)
    doc = {
        "schema_version": 1,
        "field_poly": [-2, 0, 1],
        "delta": [0, 1],
        "conductor": {"factors": [
            {"p": 7, "local_factor": list(P1.local_factor),
             "e": P1.e, "f": P1.f, "exponent": 2},
        ]},
    }
    K, N, order = realize_config(config_from_doc(doc))
    assert N.exponent_of(P1) == 2 and N.norm() == 49


def test_report_roundtrip_feasible(K_sqrt5, rational_ideal):
    rep = feasibility_report(K_sqrt5, rational_ideal(22))
    text = emit_report(rep)
    assert parse_report(text) == rep
    doc = json.loads(text)
    assert doc["sign"] == -1
    assert len(doc["greenberg_options"]) == 1
    assert doc["greenberg_options"][0]["distinguished"]["prime"]["p"] == 2
    assert doc["schema_version"] == 1


def test_report_roundtrip_infeasible(K_sqrt5, rational_ideal):
    rep = feasibility_report(K_sqrt5, rational_ideal(6))
    assert parse_report(emit_report(rep)) == rep


def test_report_roundtrip_atr(K_atr):
    rep = feasibility_report(K_atr, IdealFactorization.unit())
    text = emit_report(rep)
    assert parse_report(text) == rep
    doc = json.loads(text)
    (g,) = doc["gartner_options"]
    assert g["distinguished"] == {"real_place": 1}
    # interval endpoints serialize as exact rational strings
    lo = doc["real_classes"][0]["lo"]
    assert isinstance(lo, str) and "/" in lo


def test_report_roundtrip_with_order_and_explicit_primes(F_sqrt2_full):
    from darmonsel.quadratic import make_extension
    K = make_extension(F_sqrt2_full, [0, 1])
    # (7) splits over Q(sqrt2), so a rational generator is ambiguous; build
    # the ideal from explicit prime pairs
    P1, P2 = primes_above(F_sqrt2_full, 7)
    N = IdealFactorization.from_pairs([(P1, 1), (P2, 1)])
    order = IdealFactorization.from_pairs([(P2, 1)])
    rep = feasibility_report(K, N, order_conductor=order)
    assert parse_report(emit_report(rep)) == rep


def test_report_roundtrip_ramified_input(K_sqrt5, rational_ideal):
    rep = feasibility_report(K_sqrt5, rational_ideal(15))
    assert parse_report(emit_report(rep)) == rep
