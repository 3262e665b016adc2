import extbound as eb
from extbound import PdAtLeast, PdFinite, PdPeriodic


def test_resolution_nak3_simple(nak3):
    res = eb.minimal_resolution(eb.simple_module(nak3, 0), 3)
    assert [res.multiplicities(k) for k in range(4)] == \
        [(1, 0, 0), (0, 1, 0), (0, 0, 1), (0, 0, 0)]
    assert res.terminated_at == 3


def test_resolution_loop2_never_terminates(loop2):
    res = eb.minimal_resolution(eb.simple_module(loop2, 0), 6)
    assert not res.terminated
    assert all(res.multiplicities(k) == (1,) for k in range(7))


def test_resolution_of_projective(corpora):
    for corpus in corpora.values():
        alg = corpus.algebra
        p = eb.projective_module(alg, 0)
        res = eb.minimal_resolution(p, 4)
        assert res.terminated_at == 1
        assert res.multiplicities(0) == tuple(
            1 if v == 0 else 0 for v in range(alg.vertex_count))
        assert res.multiplicities(1) == (0,) * alg.vertex_count


def test_resolution_extends_incrementally(loop2):
    # a fresh structural module, so the session-wide memo starts cold here
    s = eb.simple_module(loop2, 0)
    fresh = eb.direct_sum([s, s, s])
    res1 = eb.minimal_resolution(fresh, 2)
    depth1 = len(res1.covers)
    res2 = eb.minimal_resolution(fresh, 5)
    assert res2 is res1
    assert len(res2.covers) > depth1 >= 3


def test_resolution_exactness(nak3):
    # im d_{k+1} = ker d_k, by rank arithmetic at every vertex
    from extbound.exactla import rank
    res = eb.minimal_resolution(eb.simple_module(nak3, 0), 2)
    for k in range(1, 3):
        d_k = res.differential(k)
        if k + 1 < len(res.covers):
            comp = d_k @ res.differential(k + 1)
            assert comp.is_zero
        for v in range(nak3.vertex_count):
            ker_dim = d_k.source.dims[v] - rank(d_k.vertex_maps[v])
            assert ker_dim == res.syzygy(k + 1).dims[v]


def test_ext_loop2_all_ones(loop2):
    s = eb.simple_module(loop2, 0)
    assert eb.ext_table(s, s, 5).dims == (1, 1, 1, 1, 1, 1)


def test_ext_cnak2_alternating(cnak2):
    s1 = eb.simple_module(cnak2, 0)
    assert eb.ext_table(s1, s1, 4).dims == (1, 0, 1, 0, 1)


def test_ext_from_projective_vanishes(corpora):
    for corpus in corpora.values():
        alg = corpus.algebra
        p = eb.regular_module(alg)
        for _, n_mod in corpus:
            dims = eb.ext_table(p, n_mod, 3).dims
            assert dims[1:] == (0, 0, 0)


def test_ext_oracles_run_independently(nak3):
    s1 = eb.simple_module(nak3, 0)
    s3 = eb.simple_module(nak3, 2)
    assert eb.ext_dims_via_complex(s1, s3, 4) == eb.ext_dims_via_stable(s1, s3, 4) \
        == [0, 0, 1, 0, 0]


def test_ext_additivity(a2, nak3):
    for alg in (a2, nak3):
        m1 = eb.simple_module(alg, 0)
        m2 = eb.projective_module(alg, 0)
        n = eb.simple_module(alg, alg.vertex_count - 1)
        summed = eb.ext_table(eb.direct_sum([m1, m2]), n, 6).dims
        parts = [eb.ext_table(m1, n, 6).dims, eb.ext_table(m2, n, 6).dims]
        assert summed == tuple(a + b for a, b in zip(*parts))


def test_pd_examples(nak3, loop2):
    assert eb.projective_dimension(eb.simple_module(nak3, 0), 10) == PdFinite(2)
    res = eb.projective_dimension(eb.simple_module(loop2, 0), 10)
    assert isinstance(res, PdPeriodic) and (res.preperiod, res.period) == (0, 1)
    idr = eb.injective_dimension(eb.regular_module(loop2), 10)
    assert idr == PdFinite(0)


def test_pd_undetermined_at_tiny_cutoff(cnak2):
    res = eb.projective_dimension(eb.simple_module(cnak2, 0), 1)
    assert isinstance(res, PdAtLeast)


def test_pd_zero_module(a2):
    assert eb.projective_dimension(eb.zero_representation(a2), 5) == PdFinite(-1)


def test_periodicity_certificates(loop2, cnak2, nak3):
    c1 = eb.periodicity_certificate(eb.simple_module(loop2, 0), 10)
    assert (c1.preperiod, c1.period) == (0, 1) and c1.verify()
    c2 = eb.periodicity_certificate(eb.simple_module(cnak2, 0), 10)
    assert (c2.preperiod, c2.period) == (0, 2) and c2.verify()
    assert eb.periodicity_certificate(eb.simple_module(nak3, 0), 10) is None


def test_periodicity_implies_periodic_ext(cnak2, corpora):
    s1 = eb.simple_module(cnak2, 0)
    cert = eb.periodicity_certificate(s1, 10)
    q, a = cert.period, cert.preperiod
    for _, n_mod in corpora["CNAK2"]:
        dims = eb.ext_table(s1, n_mod, 10).dims
        for i in range(a + 1, 10 - q + 1):
            assert dims[i + q] == dims[i]


def test_vanishing_onset_examples(loop2):
    s = eb.simple_module(loop2, 0)
    reg = eb.regular_module(loop2)
    good = eb.vanishing_onset(s, reg, 10)
    assert good.status == "vanishes" and good.onset == 0
    bad = eb.vanishing_onset(s, s, 10)
    assert bad.status == "never_vanishes"


def test_vanishing_onset_finite_pd(nak3, corpora):
    for _, m_mod in corpora["NAK3"]:
        pd_res = eb.projective_dimension(m_mod, 10)
        for _, n_mod in corpora["NAK3"]:
            onset = eb.vanishing_onset(m_mod, n_mod, 10)
            assert onset.status == "vanishes"
            assert onset.onset <= pd_res.value


def test_vanishing_onset_undetermined(cnak2):
    s1 = eb.simple_module(cnak2, 0)
    onset = eb.vanishing_onset(s1, s1, 1)
    assert onset.status == "undetermined" and not onset.certified


def test_dimension_shifting_spot(nak3):
    s1 = eb.simple_module(nak3, 0)
    s3 = eb.simple_module(nak3, 2)
    base = eb.ext_table(s1, s3, 6).dims
    for m in range(3):
        shifted = eb.ext_table(eb.syzygy(s1, m), s3, 6 - m).dims
        for i in range(1, 7 - m):
            assert base[i + m] == shifted[i]


def test_multiplicity_law_spot(cnak2):
    s1 = eb.simple_module(cnak2, 0)
    res = eb.minimal_resolution(s1, 6)
    for j in range(cnak2.vertex_count):
        sj = eb.simple_module(cnak2, j)
        dims = eb.ext_table(s1, sj, 6).dims
        for i in range(7):
            assert dims[i] == res.multiplicities(i)[j]


def test_ext_memo_consistency(nak3):
    s1 = eb.simple_module(nak3, 0)
    s2 = eb.simple_module(nak3, 1)
    first = eb.ext_table(s1, s2, 8).dims
    again = eb.ext_table(s1, s2, 4).dims
    assert again == first[:5]


def test_disk_cache_roundtrip(tmp_path, monkeypatch, nak3):
    monkeypatch.setenv("EXTBOUND_CACHE_DIR", str(tmp_path))
    s1 = eb.simple_module(nak3, 0)
    nak3._resolution_memo.clear()
    res = eb.minimal_resolution(s1, 3)
    files = list(tmp_path.iterdir())
    assert files, "resolution was not persisted"
    nak3._resolution_memo.clear()
    reloaded = eb.minimal_resolution(s1, 3)
    assert reloaded is not res
    assert [reloaded.multiplicities(k) for k in range(4)] == \
        [res.multiplicities(k) for k in range(4)]
    nak3._resolution_memo.clear()
