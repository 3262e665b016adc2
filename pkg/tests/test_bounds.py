import pytest

import extbound as eb
from extbound import Corpus, PdBound, PdFinite


def test_left_bound_loop2(corpora):
    corpus = corpora["LOOP2"]
    lab = eb.left_bound(corpus.get("S1"), corpus, 10)
    assert lab.exact and lab.value == 0
    assert lab.excluded_pairs == ("S1",)  # (S, S) never vanishes


def test_left_bound_nak3(corpora):
    corpus = corpora["NAK3"]
    lab = eb.left_bound(corpus.get("S1"), corpus, 10)
    assert lab.exact and lab.value == 2


def test_left_bound_projective(corpora):
    for corpus in corpora.values():
        lab = eb.left_bound(eb.regular_module(corpus.algebra), corpus, 10)
        assert lab.exact and lab.value == 0


def test_left_bound_mismatch(corpora, a2):
    with pytest.raises(eb.AlgebraMismatchError):
        eb.left_bound(eb.simple_module(a2, 0), corpora["LOOP2"], 5)


def test_right_bound_routes_agree(corpora):
    for corpus in corpora.values():
        for _, rep in corpus:
            via_dual = eb.right_bound(rep, corpus, 10)
            direct = eb.right_bound_direct(rep, corpus, 10)
            assert via_dual.exact and direct.exact
            assert via_dual.value == direct.value


def test_corpus_bounds_loop2(corpora):
    report = eb.corpus_bounds(corpora["LOOP2"], 10)
    assert report.gab == eb.BoundValue(True, 0)
    assert report.fpd == eb.BoundValue(True, 0)
    assert report.flab == eb.BoundValue(True, 0)
    assert report.contains_regular


def test_corpus_bounds_nak3(corpora):
    report = eb.corpus_bounds(corpora["NAK3"], 10)
    assert report.gab == eb.BoundValue(True, 2)
    assert report.fpd == eb.BoundValue(True, 2)


def test_corpus_bounds_empty(nak3):
    report = eb.corpus_bounds(Corpus(nak3, ()), 10)
    for value in (report.glab, report.grab, report.gab, report.fpd,
                  report.fid, report.flab, report.frab):
        assert value == eb.BoundValue(True, 0)
    assert not report.contains_regular


def test_undetermined_pairs_poison_exactness(corpora):
    corpus = corpora["CNAK2"]
    lab = eb.left_bound(corpus.get("S1"), corpus, 1)
    assert not lab.exact and lab.undetermined_pairs


def test_onset_against_regular(corpora):
    nak = corpora["NAK3"]
    onset = eb.onset_against_regular(nak.get("S1"), 10)
    assert onset.status == "vanishes" and onset.onset == 2
    loop = corpora["LOOP2"]
    onset = eb.onset_against_regular(loop.get("S1"), 10)
    assert onset.status == "vanishes" and onset.onset == 0


def test_regular_onset_formula(corpora):
    nak = corpora["NAK3"]
    assert eb.check_regular_onset_formula(nak.get("S1"), nak, 10).status == "pass"
    loop = corpora["LOOP2"]
    assert eb.check_regular_onset_formula(loop.get("S1"), loop, 10).status == "pass"


def test_regular_onset_formula_not_applicable(corpora, loop2):
    # a corpus without the regular module does not satisfy the hypotheses
    partial = Corpus(loop2, (("S1", corpora["LOOP2"].get("S1")),))
    outcome = eb.check_regular_onset_formula(corpora["LOOP2"].get("S1"), partial, 10)
    assert outcome.status == "not_applicable"
    # and an uncertifiable cutoff is also not applicable
    cn = corpora["CNAK2"]
    outcome = eb.check_regular_onset_formula(cn.get("S1"), cn, 1)
    assert outcome.status == "not_applicable"


def test_finite_pd_certificate(corpora):
    nak = corpora["NAK3"]
    cert = eb.finite_pd_certificate(nak.get("S1"), 10)
    assert cert == PdBound(2)
    loop = corpora["LOOP2"]
    cert = eb.finite_pd_certificate(loop.get("S1"), 10)
    assert cert.kind == "not_applicable"
    cert = eb.finite_pd_certificate(eb.regular_module(loop.algebra), 10)
    assert cert == PdBound(0)


def test_finite_pd_certificate_matches_pd_everywhere(corpora):
    for corpus in corpora.values():
        for _, rep in corpus:
            cert = eb.finite_pd_certificate(rep, 10)
            if isinstance(cert, PdBound):
                pd_res = eb.projective_dimension(rep, 10)
                assert isinstance(pd_res, PdFinite) and pd_res.value == cert.value


def test_ultimately_closed(corpora):
    loop = corpora["LOOP2"]
    uc = eb.ultimately_closed_at(loop.get("S1"), 10)
    assert uc.at == 1 and not uc.via_zero_syzygy
    cn = corpora["CNAK2"]
    uc = eb.ultimately_closed_at(cn.get("S1"), 10)
    assert uc.at == 2 and not uc.via_zero_syzygy
    nak = corpora["NAK3"]
    uc = eb.ultimately_closed_at(nak.get("S1"), 10)
    assert uc.at == 3 and uc.via_zero_syzygy


def test_strongly_redundant(corpora):
    loop = corpora["LOOP2"]
    assert eb.strongly_redundant_from(loop.get("S1"), 10) == 0
    nak = corpora["NAK3"]
    assert eb.strongly_redundant_from(nak.get("S1"), 10) is None
    cn = corpora["CNAK2"]
    assert eb.strongly_redundant_from(cn.get("S1"), 10) == 0


def test_strong_redundancy_caps_bound(corpora):
    for corpus in corpora.values():
        for name, rep in corpus:
            m = eb.strongly_redundant_from(rep, 10)
            if m is None:
                continue
            lab = eb.left_bound(rep, corpus, 10)
            assert lab.exact and lab.value <= m


def test_verify_bound_properties_all_pass(corpora):
    for name, corpus in corpora.items():
        report = eb.verify_bound_properties(corpus, 12)
        assert not report.failed, f"{name}: {[s.to_json() for s in report.failed]}"


def test_property_report_serializes(corpora):
    report = eb.verify_bound_properties(corpora["A2"], 8)
    data = report.to_json()
    assert data["cutoff"] == 8
    assert all(s["status"] in ("pass", "fail", "skipped")
               for s in data["statements"])
