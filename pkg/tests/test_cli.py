import json

import pytest

from plink.cli import (EXIT_INCONCLUSIVE, EXIT_NEGATIVE, EXIT_OK, EXIT_USAGE,
                       main)
from plink.fixtures import mobius_ohcp_chain
from plink.scxio import parse_scx, serialize_chn


@pytest.fixture
def annulus_path(tmp_path):
    p = tmp_path / "annulus.scx"
    assert main(["generate", "annulus", "-o", str(p)]) == EXIT_OK
    return str(p)


@pytest.fixture
def mobius_path(tmp_path):
    p = tmp_path / "mobius.scx"
    assert main(["generate", "mobius", "-o", str(p)]) == EXIT_OK
    return str(p)


def test_generate_writes_parseable_complex(annulus_path):
    cx = parse_scx(open(annulus_path).read())
    assert cx.dim == 2


def test_generate_with_params(tmp_path):
    p = tmp_path / "m7.scx"
    assert main(["generate", "mobius", "--k", "7", "-o", str(p)]) == EXIT_OK
    assert len(parse_scx(open(p).read()).vertices) == 7


def test_link_check_single_edge(annulus_path, capsys):
    assert main(["link-check", annulus_path, "--edge", "0,4",
                 "--json"]) == EXIT_OK
    out = json.loads(capsys.readouterr().out)
    assert out["edge"] == [0, 4]
    assert out["link_condition"] is True


def test_link_check_scan(annulus_path, capsys):
    assert main(["link-check", annulus_path, "--max-p", "1"]) == EXIT_OK
    assert "0 4" in capsys.readouterr().out


def test_contract_roundtrip(annulus_path, tmp_path, capsys):
    out = tmp_path / "small.scx"
    assert main(["contract", annulus_path, "--edge", "0,4",
                 "-o", str(out)]) == EXIT_OK
    cx = parse_scx(open(out).read())
    assert 7 in cx.vertices and len(cx.vertices) == 7


def test_homology_json(mobius_path, capsys):
    assert main(["homology", mobius_path, "--p", "1", "--json"]) == EXIT_OK
    out = json.loads(capsys.readouterr().out)
    assert out == {"p": 1, "betti": 1, "torsion": []}


def test_rel_homology(tmp_path, capsys):
    L = tmp_path / "L.scx"
    L0 = tmp_path / "L0.scx"
    main(["generate", "mobius", "-o", str(L)])
    main(["generate", "mobius-boundary", "-o", str(L0)])
    assert main(["rel-homology", str(L), str(L0), "--p", "1",
                 "--json"]) == EXIT_OK
    out = json.loads(capsys.readouterr().out)
    assert out["torsion"] == [2]


def test_tu_check_exit_codes(mobius_path, annulus_path, capsys):
    assert main(["tu-check", mobius_path, "--p", "2"]) == EXIT_NEGATIVE
    assert main(["tu-check", annulus_path, "--p", "2"]) == EXIT_OK
    assert main(["tu-check", mobius_path, "--p", "2",
                 "--budget", "2"]) == EXIT_INCONCLUSIVE


def test_tu_check_strategies_agree(mobius_path, capsys):
    for strategy in ("circuit", "determinant"):
        assert main(["tu-check", mobius_path, "--p", "2", "--strategy",
                     strategy, "--json"]) == EXIT_NEGATIVE
        out = json.loads(capsys.readouterr().out)
        assert out["status"] is False
        assert out["witness"]


def test_rel_torsion_modes(mobius_path, annulus_path):
    assert main(["rel-torsion", mobius_path, "--p", "1"]) == EXIT_NEGATIVE
    assert main(["rel-torsion", annulus_path, "--p", "1"]) == EXIT_OK
    assert main(["rel-torsion", mobius_path, "--p", "1",
                 "--mode", "oracle"]) == EXIT_NEGATIVE


def test_ohcp_lp_and_ilp(tmp_path, capsys):
    cxp = tmp_path / "k.scx"
    chp = tmp_path / "c.chn"
    main(["generate", "mobius-ohcp", "-o", str(cxp)])
    chp.write_text(serialize_chn(mobius_ohcp_chain()))
    assert main(["ohcp", str(cxp), str(chp), "--json"]) == EXIT_OK
    lp = json.loads(capsys.readouterr().out)
    assert lp["objective"] == "7/20"
    assert main(["ohcp", str(cxp), str(chp), "--integer",
                 "--json"]) == EXIT_OK
    ilp = json.loads(capsys.readouterr().out)
    assert ilp["objective"] == "13/10"


def test_reduce_with_log(annulus_path, tmp_path):
    out = tmp_path / "reduced.scx"
    log = tmp_path / "log.json"
    assert main(["reduce", annulus_path, "--gate", "full", "--max-steps", "2",
                 "-o", str(out), "--log", str(log),
                 "--snapshots"]) == EXIT_OK
    records = json.loads(log.read_text())
    contracted = [r for r in records if r["action"] == "contracted"]
    assert len(contracted) <= 2
    assert all(r["snapshot"] for r in contracted)


def test_reduce_gate_parsing(annulus_path, tmp_path):
    assert main(["reduce", annulus_path, "--gate", "p=1,2",
                 "-o", str(tmp_path / "o.scx")]) == EXIT_OK
    assert main(["reduce", annulus_path, "--gate", "sideways",
                 "-o", str(tmp_path / "o2.scx")]) == EXIT_USAGE


def test_usage_errors(tmp_path, annulus_path, capsys):
    assert main(["homology", str(tmp_path / "missing.scx"),
                 "--p", "0"]) == EXIT_USAGE
    assert main(["link-check", annulus_path, "--edge", "zebra"]) == EXIT_USAGE
    bad = tmp_path / "bad.scx"
    bad.write_text("0 1 w oops\n")
    assert main(["homology", str(bad), "--p", "0"]) == EXIT_USAGE
