"""End-to-end CLI checks: every command is a thin wrapper over tested
library calls, so these focus on wiring, flags and exit codes."""

import pytest

import tqnets as T
from tqnets import algebra, netsjson, pajek
from tqnets.cli import main

WA_NET = """\
*vertices 5 3
1 "w1"
2 "w2"
3 "w3"
4 "alice"
5 "bob"
*arcs
1 4
1 5
2 4
2 5
3 4
"""
YEAR_CLU = "*vertices 3\n2005\n2006\n2006\n"


@pytest.fixture
def fixtures(tmp_path):
    (tmp_path / "WA.net").write_text(WA_NET)
    (tmp_path / "Year.clu").write_text(YEAR_CLU)
    return tmp_path


def convert(fixtures, out="WAi.json", mode="instant", extra=()):
    rc = main(["convert", str(fixtures / "WA.net"), str(fixtures / "Year.clu"),
               str(fixtures / out), "--mode", mode, *extra])
    assert rc == 0
    return fixtures / out


class TestConvert:
    def test_instant(self, fixtures, capsys):
        path = convert(fixtures)
        net = netsjson.read_netsjson(path)
        assert net.kind == "instant"
        assert len(net.links) == 5
        out = capsys.readouterr().out
        assert "nodes: 3+2" in out and "skipped: 0" in out

    def test_cumulative_passes_kind_checker(self, fixtures):
        path = convert(fixtures, "WAc.json", "cumulative")
        net = netsjson.read_netsjson(path)  # read re-verifies the kind
        assert net.kind == "cumulative"

    def test_matches_in_memory_temporalization(self, fixtures):
        path = convert(fixtures)
        want, _ = pajek.temporalize_two_mode(
            pajek.parse_net(fixtures / "WA.net"),
            pajek.parse_clu(fixtures / "Year.clu"), "instant")
        assert netsjson.read_netsjson(path) == want

    def test_skipped_links_exit_code(self, fixtures):
        (fixtures / "Year.clu").write_text("*vertices 3\n0\n2006\n2006\n")
        args = ["convert", str(fixtures / "WA.net"), str(fixtures / "Year.clu"),
                str(fixtures / "out.json")]
        assert main(args) == 3
        assert main(args + ["--quiet"]) == 0

    def test_parse_error_exit_code(self, fixtures, capsys):
        (fixtures / "bad.net").write_text("*vertices x\n")
        rc = main(["convert", str(fixtures / "bad.net"),
                   str(fixtures / "Year.clu"), str(fixtures / "o.json")])
        assert rc == 1
        assert "error:" in capsys.readouterr().err

    def test_last_override(self, fixtures):
        path = convert(fixtures, "WAc.json", "cumulative", ["--last", "2016"])
        net = netsjson.read_netsjson(path)
        assert net.horizon.last == 2016
        assert net.links[(1, 4)] == ((2005, 2017, 1.0),)

    def test_last_from_environment(self, fixtures, monkeypatch):
        monkeypatch.setenv("TQNETS_LAST", "2010")
        from tqnets import cli
        parser_args = ["convert", str(fixtures / "WA.net"),
                       str(fixtures / "Year.clu"), str(fixtures / "env.json")]
        assert cli.main(parser_args) == 0
        assert netsjson.read_netsjson(fixtures / "env.json").horizon.last == 2010


class TestInsum:
    def test_known_node(self, fixtures, capsys):
        path = convert(fixtures)
        assert main(["insum", str(path), "--node", "alice"]) == 0
        out = capsys.readouterr().out
        assert "[(2005, 2006, 1), (2006, 2007, 2)]" in out
        assert "total: 3" in out

    def test_node_without_in_links(self, fixtures, capsys):
        path = convert(fixtures)
        assert main(["insum", str(path), "--node", "w1"]) == 0
        out = capsys.readouterr().out
        assert "[]" in out and "total: 0" in out

    def test_unknown_label_fails(self, fixtures, capsys):
        path = convert(fixtures)
        assert main(["insum", str(path), "--node", "nobody"]) == 1
        assert "nobody" in capsys.readouterr().err

    def test_csv_export(self, fixtures):
        path = convert(fixtures)
        out = fixtures / "alice.csv"
        assert main(["insum", str(path), "--node", "alice",
                     "--csv", str(out)]) == 0
        assert out.read_text() == "start,finish,value\n2005,2006,1\n2006,2007,2\n"

    def test_cut_gt(self, fixtures, capsys):
        path = convert(fixtures)
        assert main(["insum", str(path), "--node", "alice", "--cut-gt", "1"]) == 0
        assert "[(2006, 2007, 2)]" in capsys.readouterr().out


class TestMultiply:
    def test_two2one_cols_equals_library(self, fixtures, capsys):
        path = convert(fixtures)
        out = fixtures / "Co.json"
        assert main(["multiply", str(path), "--two2one-cols",
                     "-o", str(out)]) == 0
        want = algebra.two_to_one_cols(netsjson.read_netsjson(path))
        assert netsjson.read_netsjson(out) == want

    def test_product_equals_library(self, fixtures):
        path = convert(fixtures)
        out = fixtures / "P.json"
        assert main(["multiply", str(path), str(path), "--transpose-a",
                     "-o", str(out)]) == 0
        net = netsjson.read_netsjson(path)
        want = algebra.multiply(T.transpose(net), net)
        assert netsjson.read_netsjson(out) == want

    def test_triple_product_journal_citation(self, tmp_path):
        # one citation from a 2010 paper in J1 to a 2005 paper in J2
        (tmp_path / "WJ.net").write_text(
            '*vertices 4 2\n1 "w1"\n2 "w2"\n3 "J1"\n4 "J2"\n*arcs\n1 3\n2 4\n')
        (tmp_path / "Year.clu").write_text("*vertices 2\n2010\n2005\n")
        (tmp_path / "Cite.net").write_text(
            '*vertices 2\n1 "w1"\n2 "w2"\n*arcs\n1 2\n')
        assert main(["convert", str(tmp_path / "WJ.net"),
                     str(tmp_path / "Year.clu"), str(tmp_path / "WJi.json")]) == 0
        assert main(["convert", str(tmp_path / "WJ.net"),
                     str(tmp_path / "Year.clu"), str(tmp_path / "WJc.json"),
                     "--mode", "cumulative"]) == 0
        assert main(["convert", str(tmp_path / "Cite.net"),
                     str(tmp_path / "Year.clu"), str(tmp_path / "Citei.json"),
                     "--one-mode"]) == 0
        assert main(["multiply", str(tmp_path / "WJi.json"),
                     str(tmp_path / "Citei.json"), str(tmp_path / "WJc.json"),
                     "--transpose-a", "-o", str(tmp_path / "JCJ.json")]) == 0
        jcj = netsjson.read_netsjson(tmp_path / "JCJ.json")
        idx = T.index_by_label(jcj)
        assert jcj.links == {(idx["J1"], idx["J2"]): ((2010, 2011, 1.0),)}


class TestTop:
    def test_ranked_table(self, fixtures, capsys):
        path = convert(fixtures)
        out = fixtures / "Co.json"
        main(["multiply", str(path), "--two2one-cols", "-o", str(out)])
        capsys.readouterr()
        assert main(["top", str(out), "--links", "--thresh", "2"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert lines[0].startswith("1\talice\tbob\t2\t")

    def test_loops(self, fixtures, capsys):
        path = convert(fixtures)
        out = fixtures / "Co.json"
        main(["multiply", str(path), "--two2one-cols", "-o", str(out)])
        capsys.readouterr()
        assert main(["top", str(out), "--loops", "--thresh", "3"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert lines == ["1\talice\talice\t3\t[(2005, 2006, 1), (2006, 2007, 2)]"]


class TestRecode:
    def test_band_table(self, tmp_path, capsys):
        csv = tmp_path / "q.csv"
        netsjson.export_tq_csv(T.make([(1972, 1975, 2)]), csv)
        assert main(["recode", str(csv), "--breaks", "0,1971,1981,1991"]) == 0
        out = capsys.readouterr().out
        assert "2\t1971-1980\t6" in out


class TestChart:
    def test_svg_and_csv(self, fixtures, capsys):
        path = convert(fixtures)
        svg = fixtures / "alice.svg"
        csv = fixtures / "alice.csv"
        assert main(["chart", str(path), "--node", "alice", "--svg", str(svg),
                     "--csv", str(csv), "--tmin", "2000", "--tmax", "2010",
                     "--title", "alice", "--fill", "red"]) == 0
        assert svg.read_text().startswith("<?xml")
        assert csv.read_text() == "t,value\n2005,1\n2006,2\n"

    def test_csv_matches_export(self, tmp_path):
        src = tmp_path / "q.csv"
        netsjson.export_tq_csv(T.make([(2000, 2002, 3)]), src)
        out = tmp_path / "inst.csv"
        assert main(["chart", str(src), "--csv", str(out)]) == 0
        want = tmp_path / "want.csv"
        netsjson.export_tq_csv(T.make([(2000, 2002, 3)]), want, per_instant=True)
        assert out.read_text() == want.read_text()

    def test_bad_window_rejected(self, tmp_path, capsys):
        src = tmp_path / "q.csv"
        netsjson.export_tq_csv(T.make([(2000, 2002, 3)]), src)
        assert main(["chart", str(src), "--svg", str(tmp_path / "x.svg"),
                     "--tmin", "2005", "--tmax", "2005"]) == 1
