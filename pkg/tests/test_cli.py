import json

import extbound as eb
from extbound.cli import main
from extbound.fileio import save_algebra, save_module


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_ext_example(capsys):
    code, out, _ = run(capsys, "ext", "--module", "builtin:CNAK2:S1",
                       "--against", "builtin:CNAK2:S1", "--max", "4",
                       "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["table"]["dims"] == [1, 0, 1, 0, 1]


def test_pd_periodic(capsys):
    code, out, _ = run(capsys, "pd", "--module", "builtin:LOOP2:S1",
                       "--cutoff", "10", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["result"] == {"kind": "periodic_infinite", "preperiod": 0, "period": 1}


def test_id_command(capsys):
    code, out, _ = run(capsys, "id", "--module", "builtin:LOOP2:P1",
                       "--format", "json")
    assert code == 0
    assert json.loads(out)["result"] == {"kind": "finite", "value": 0}


def test_onset_undetermined_exit_2(capsys):
    code, _, _ = run(capsys, "onset", "--module", "builtin:CNAK2:S1",
                     "--against", "builtin:CNAK2:S1", "--cutoff", "1")
    assert code == 2


def test_onset_against_regular(capsys):
    code, out, _ = run(capsys, "onset", "--module", "builtin:NAK3:S1",
                       "--against", "regular", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["result"]["status"] == "certified_vanishes"
    assert data["result"]["onset"] == 2


def test_ab_command(capsys):
    code, out, _ = run(capsys, "ab", "--module", "builtin:NAK3:S1",
                       "--corpus", "builtin:NAK3", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["result"]["exact"] and data["result"]["value"] == 2


def test_ab_right_side(capsys):
    code, out, _ = run(capsys, "ab", "--module", "builtin:NAK3:S3",
                       "--corpus", "builtin:NAK3", "--side", "right",
                       "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["result"]["exact"] and data["result"]["value"] == 2


def test_bounds_csv(capsys):
    code, out, _ = run(capsys, "bounds", "--corpus", "builtin:LOOP2",
                       "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "module,lab,rab,pd,id"
    assert len(lines) == 3


def test_resolve_command(capsys):
    code, out, _ = run(capsys, "resolve", "--module", "builtin:NAK3:S1",
                       "--cutoff", "4", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["terminated_at"] == 3
    assert data["multiplicities"][:3] == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]


def test_algebra_info(capsys, tmp_path, nak3):
    path = tmp_path / "alg.json"
    save_algebra(nak3, str(path))
    code, out, _ = run(capsys, "algebra", "info", "--algebra", str(path),
                       "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["dim"] == 5 and data["basis"] == ["e_1", "e_2", "e_3", "a", "b"]


def test_module_check(capsys, tmp_path, nak3):
    path = tmp_path / "m.json"
    save_module(eb.projective_module(nak3, 0), str(path), name="P1")
    code, out, _ = run(capsys, "module", "check", "--module", str(path))
    assert code == 0 and "valid" in out


def test_tilting_command(capsys):
    code, out, _ = run(capsys, "tilting", "--module", "builtin:LOOP2:P1",
                       "--format", "json")
    assert code == 0
    assert json.loads(out)["report"]["verdict"] == "tilting"


def test_tilting_chain_export(capsys, tmp_path, a2):
    t_path = tmp_path / "t.json"
    save_module(eb.direct_sum([eb.projective_module(a2, 0),
                               eb.simple_module(a2, 0)]), str(t_path), name="T")
    chain_path = tmp_path / "chain.json"
    code, out, _ = run(capsys, "tilting", "--module", str(t_path),
                       "--export-chain", str(chain_path), "--format", "json")
    assert code == 0
    from extbound.fileio import load_corpus
    chain = load_corpus(str(chain_path))
    assert chain.names() == ["X", "T0", "T1"]
    assert chain.get("X") == eb.regular_module(a2)


def test_wakamatsu_command(capsys):
    code, out, _ = run(capsys, "wakamatsu", "--module", "builtin:LOOP2:P1",
                       "--format", "json")
    assert code == 0
    assert json.loads(out)["report"]["verdict"] == "wakamatsu"


def test_ewtc_command(capsys):
    code, out, _ = run(capsys, "ewtc", "--module", "builtin:A2:P1",
                       "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["report"]["status"] in ("confirmed", "not_applicable")


def test_arc_command(capsys):
    code, out, _ = run(capsys, "arc", "--corpus", "builtin:CNAK2",
                       "--format", "json")
    assert code == 0
    assert json.loads(out)["report"]["violations"] == []


def test_gsc_command(capsys):
    code, out, _ = run(capsys, "gsc", "--algebra", "builtin:NAK3",
                       "--format", "json")
    assert code == 0
    data = json.loads(out)["report"]
    assert data["id_left"]["value"] == 2 and data["equal"] is True


def test_uc_command(capsys):
    code, out, _ = run(capsys, "uc", "--module", "builtin:LOOP2:S1",
                       "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["ultimately_closed"]["at"] == 1
    assert data["strongly_redundant_from"] == 0


def test_corpus_generation(capsys, tmp_path):
    out_path = tmp_path / "simples.json"
    code, out, _ = run(capsys, "corpus", "--algebra", "builtin:NAK3",
                       "--spec", "simples", "--out", str(out_path),
                       "--format", "json")
    assert code == 0
    from extbound.fileio import load_corpus
    corpus = load_corpus(str(out_path))
    assert corpus.names() == ["S1", "S2", "S3"]


def test_corpus_fixture_indecomposables(capsys, tmp_path):
    out_path = tmp_path / "a2_all.json"
    code, _, _ = run(capsys, "corpus", "--algebra", "builtin:A2",
                     "--spec", "fixture-indecomposables", "--fixture", "A2",
                     "--out", str(out_path), "--format", "json")
    assert code == 0
    from extbound.fileio import load_corpus
    assert load_corpus(str(out_path)).names() == ["S1", "S2", "P1"]


def test_corpus_syzygy_closure(capsys, tmp_path, nak3):
    seed_path = tmp_path / "s1.json"
    save_module(eb.simple_module(nak3, 0), str(seed_path), name="S1")
    out_path = tmp_path / "closure.json"
    code, out, _ = run(capsys, "corpus", "--algebra", "builtin:NAK3",
                       "--spec", "syzygy-closure", "--seed-module", str(seed_path),
                       "--depth", "3", "--out", str(out_path), "--format", "json")
    assert code == 0
    from extbound.fileio import load_corpus
    corpus = load_corpus(str(out_path))
    assert [rep.dims for _, rep in corpus] == [(1, 0, 0), (0, 1, 0), (0, 0, 1)]


def test_verify_all_fixtures(capsys):
    code, out, _ = run(capsys, "verify", "--fixtures", "all", "--cutoff", "12",
                       "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["summary"]["fail"] == 0
    assert data["summary"]["pass"] > 0


def test_verify_deterministic_bytes(capsys):
    _, first, _ = run(capsys, "verify", "--fixtures", "A2", "--cutoff", "8",
                      "--format", "json")
    _, second, _ = run(capsys, "verify", "--fixtures", "A2", "--cutoff", "8",
                       "--format", "json")
    assert first == second


def test_malformed_file_exit_3(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{broken")
    code, _, err = run(capsys, "pd", "--module", str(path))
    assert code == 3 and "error:" in err


def test_unknown_fixture_exit_3(capsys):
    code, _, err = run(capsys, "gsc", "--algebra", "builtin:NOPE")
    assert code == 3 and "error:" in err
