import pytest

import extbound as eb
from extbound import PdFinite


@pytest.fixture(scope="module")
def a2_tilting(corpora):
    alg = corpora["A2"].algebra
    return eb.direct_sum([eb.projective_module(alg, 0), eb.simple_module(alg, 0)])


def test_approximation_of_self_is_iso(a2_tilting):
    phi = eb.left_add_approximation(a2_tilting, a2_tilting)
    assert phi.target.dims == a2_tilting.dims
    assert phi.is_invertible


def test_approximation_regular_a2(a2, a2_tilting):
    phi = eb.left_add_approximation(eb.regular_module(a2), a2_tilting)
    assert phi.target.dims == (2, 2)  # two copies of P(1)
    assert phi.is_injective
    coker, _ = eb.cokernel(phi)
    assert eb.is_isomorphic(coker, eb.simple_module(a2, 0)).is_iso


def test_approximation_no_homs(a2):
    s1 = eb.simple_module(a2, 0)
    s2 = eb.simple_module(a2, 1)
    phi = eb.left_add_approximation(s2, s1)
    assert phi.target.is_zero and phi.is_zero


def test_coresolution_length_zero(corpora):
    for corpus in corpora.values():
        reg = eb.regular_module(corpus.algebra)
        result = eb.coresolution_in_add(reg, reg, 8, 10)
        assert result.success and result.length == 0 and result.verify()


def test_coresolution_a2(a2, a2_tilting):
    result = eb.coresolution_in_add(eb.regular_module(a2), a2_tilting, 8, 10)
    assert result.success and result.length == 1
    assert [list(t.dims) for t, _ in result.terms] == [[2, 2], [1, 0]]
    assert result.verify()


def test_coresolution_failure(a2):
    result = eb.coresolution_in_add(eb.regular_module(a2),
                                    eb.simple_module(a2, 0), 8, 10)
    assert not result.success
    assert result.failure_stage == 0
    assert result.reason == "approximation not injective"


def test_selforthogonality(a2_tilting, corpora):
    assert eb.is_selforthogonal(a2_tilting, 10).status == "certified_true"
    loop = corpora["LOOP2"]
    res = eb.is_selforthogonal(loop.get("S1"), 10)
    assert res.status == "certified_false" and res.degree == 1
    for corpus in corpora.values():
        reg = eb.regular_module(corpus.algebra)
        assert eb.is_selforthogonal(reg, 10).status == "certified_true"


def test_is_tilting_canonical(a2_tilting):
    report = eb.is_tilting(a2_tilting, 10, 8)
    assert report.verdict == "tilting"
    assert report.pd == PdFinite(1)
    assert report.coresolution.length == 1


def test_is_tilting_rejects_simple(a2):
    report = eb.is_tilting(eb.simple_module(a2, 0), 10, 8)
    assert report.verdict == "not_tilting"
    assert "not injective" in report.reason


def test_regular_is_tilting_everywhere(corpora):
    for corpus in corpora.values():
        report = eb.is_tilting(eb.regular_module(corpus.algebra), 10, 8)
        assert report.verdict == "tilting"


def test_non_selforthogonal_not_tilting(corpora):
    loop = corpora["LOOP2"]
    report = eb.is_tilting(loop.get("S1"), 10, 8)
    assert report.verdict == "not_tilting"


def test_tilting_implies_wakamatsu(a2_tilting, corpora):
    report = eb.is_wakamatsu(a2_tilting, 10, 8)
    assert report.verdict == "wakamatsu" and report.complete
    assert all(s.status == "certified" for s in report.stages)
    for corpus in corpora.values():
        reg = eb.regular_module(corpus.algebra)
        assert eb.is_wakamatsu(reg, 10, 8).verdict == "wakamatsu"


def test_wakamatsu_rejects_non_orthogonal(corpora):
    loop = corpora["LOOP2"]
    report = eb.is_wakamatsu(loop.get("S1"), 10, 8)
    assert report.verdict == "not_wakamatsu"


def test_wakamatsu_rejects_failed_stage(nak3):
    # P(1)+P(2) misses the third projective: the chain of approximations of
    # the regular module dies at a non-injective stage
    t_mod = eb.direct_sum([eb.projective_module(nak3, 0),
                           eb.projective_module(nak3, 1)])
    report = eb.is_wakamatsu(t_mod, 10, 8)
    assert report.verdict == "not_wakamatsu"
    assert "not injective" in report.reason


def test_truncation_gives_undetermined(corpora):
    a2 = corpora["A2"].algebra
    t_mod = eb.direct_sum([eb.projective_module(a2, 0), eb.simple_module(a2, 0)])
    tilt = eb.is_tilting(t_mod, 10, 0)   # maxlen 0 cannot reach the chain end
    assert tilt.verdict == "undetermined"
    assert tilt.coresolution.reason == "maxlen exceeded"
    wak = eb.is_wakamatsu(t_mod, 10, 0)
    assert wak.verdict == "undetermined" and not wak.complete


def test_ewtc_confirmed(a2_tilting):
    report = eb.ewtc_check(a2_tilting, 10, 8)
    assert report.status == "confirmed"
    assert report.pd == PdFinite(1)


def test_ewtc_not_applicable(corpora):
    loop = corpora["LOOP2"]
    report = eb.ewtc_check(loop.get("S1"), 10, 8)
    assert report.status == "not_applicable"


def test_ewtc_regular_trivial(corpora):
    for corpus in corpora.values():
        report = eb.ewtc_check(eb.regular_module(corpus.algebra), 10, 8)
        assert report.status == "confirmed"


def test_arc_scan_empty_on_fixtures(corpora):
    for name, corpus in corpora.items():
        report = eb.arc_scan(corpus, 12)
        assert report.violations == (), f"{name}: {report.to_json()}"


def test_arc_scan_marks_projectives(corpora):
    report = eb.arc_scan(corpora["NAK3"], 12)
    flags = {e.name: e.projective for e in report.entries}
    assert flags == {"S1": False, "S2": False, "S3": True, "P1": True, "P2": True}


def test_gsc_values(corpora):
    expected = {"A2": 1, "LOOP2": 0, "NAK3": 2, "CNAK2": 0}
    for name, corpus in corpora.items():
        report = eb.gsc_report(corpus.algebra, 12)
        assert report.equal is True
        assert report.id_left == PdFinite(expected[name])
        assert report.id_right == PdFinite(expected[name])
