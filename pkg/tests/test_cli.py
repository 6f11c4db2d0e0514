import json

import pytest

from srposet.cli import main


@pytest.fixture
def chain_file(tmp_path):
    path = tmp_path / "chain.json"
    path.write_text(json.dumps({
        "elements": ["a", "b", "c"],
        "covers": [["a", "b"], ["b", "c"]],
    }))
    return str(path)


@pytest.fixture
def two_chains_file(tmp_path):
    path = tmp_path / "twochains.json"
    path.write_text(json.dumps({
        "elements": ["a", "b", "c", "d"],
        "covers": [["a", "b"], ["c", "d"]],
    }))
    return str(path)


@pytest.fixture
def antichain_file(tmp_path):
    path = tmp_path / "antichain.json"
    path.write_text(json.dumps({"elements": ["a", "b"], "covers": []}))
    return str(path)


def ideal_file(tmp_path, labels, name="ideal.json"):
    path = tmp_path / name
    path.write_text(json.dumps({"ideal": labels}))
    return str(path)


def run_json(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, json.loads(out)


class TestCheckPoset:
    def test_chain(self, capsys, chain_file):
        code, rep = run_json(capsys, ["check-poset", chain_file, "--json"])
        assert code == 0
        assert rep["pure"] and rep["dim"] == 3
        for f in rep["fields"]:
            assert f["cm"] and f["depth"] == 3
        assert {f["char"] for f in rep["fields"]} == {0, 2}

    def test_two_disjoint_chains(self, capsys, two_chains_file):
        code, rep = run_json(capsys, ["check-poset", two_chains_file, "--json"])
        assert code == 0
        for f in rep["fields"]:
            assert not f["cm"] and f["buchsbaum"]

    def test_malformed_json_exits_2(self, tmp_path, capsys):
        bad = tmp_path / "bad.json"
        bad.write_text("{not json")
        with pytest.raises(SystemExit) as err:
            main(["check-poset", str(bad)])
        assert err.value.code == 2
        assert "line" in capsys.readouterr().err

    def test_char_flag(self, capsys, chain_file):
        code, rep = run_json(capsys, ["check-poset", chain_file, "--json", "--char", "3"])
        assert code == 0
        assert [f["char"] for f in rep["fields"]] == [3]

    def test_text_output_deterministic(self, capsys, chain_file):
        main(["check-poset", chain_file])
        first = capsys.readouterr().out
        main(["check-poset", chain_file])
        assert capsys.readouterr().out == first


class TestCheckComplexAndHomology:
    @pytest.fixture
    def circle_file(self, tmp_path):
        path = tmp_path / "circle.json"
        path.write_text(json.dumps({
            "vertices": ["a", "b", "c"],
            "facets": [["a", "b"], ["b", "c"], ["c", "a"]],
        }))
        return str(path)

    def test_check_complex(self, capsys, circle_file):
        code, rep = run_json(capsys, ["check-complex", circle_file, "--json"])
        assert code == 0
        assert rep["equidimensional"] and rep["dim"] == 2
        assert rep["euler_char"] == -1

    def test_homology(self, capsys, circle_file):
        code, rep = run_json(capsys, ["homology", circle_file, "--json"])
        assert code == 0
        for f in rep["fields"]:
            assert f["betti"]["1"] == 1

    def test_unknown_vertex_exits_2(self, tmp_path, capsys):
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({"vertices": ["a"], "facets": [["z"]]}))
        with pytest.raises(SystemExit) as err:
            main(["check-complex", str(path)])
        assert err.value.code == 2


class TestUplus:
    def test_chain_with_minimum(self, capsys, tmp_path, chain_file):
        code, rep = run_json(
            capsys,
            ["uplus", chain_file, ideal_file(tmp_path, ["a"]), "--json"],
        )
        assert code == 0
        for f in rep["fields"]:
            assert f["consistent"] and f["a_negative"]
        assert sorted(rep["uplus"]["elements"]) == ["a", "a*", "b", "c"]

    def test_antichain_a_negative_false(self, capsys, tmp_path, antichain_file):
        code, rep = run_json(
            capsys,
            ["uplus", antichain_file, ideal_file(tmp_path, ["a"]), "--json"],
        )
        assert code == 0  # consistent: biconditional holds (both false)
        for f in rep["fields"]:
            assert f["a_negative"] is False and f["cm_uplus"] is False

    def test_empty_ideal_degenerate_warning(self, capsys, tmp_path, chain_file):
        code, rep = run_json(
            capsys,
            ["uplus", chain_file, ideal_file(tmp_path, []), "--json"],
        )
        assert code == 0
        assert rep["fields"][0]["degenerate"]
        assert rep["fields"][0]["consistent"] is None
        assert "warnings" in rep

    def test_not_an_ideal_exits_2(self, capsys, tmp_path, chain_file):
        code = main(["uplus", chain_file, ideal_file(tmp_path, ["b"]), "--json"])
        assert code == 2

    def test_unknown_label_exits_2(self, capsys, tmp_path, chain_file):
        code = main(["uplus", chain_file, ideal_file(tmp_path, ["zz"]), "--json"])
        assert code == 2


class TestDetsym:
    def test_n3(self, capsys):
        code, rep = run_json(capsys, ["detsym", "--n", "3", "--json", "--char", "0"])
        assert code == 0
        assert rep["dim"] == 3 and rep["core_dim"] == 1
        assert rep["fields"][0]["depth"] == 2
        assert rep["fields"][0]["core_depth"] == 0
        assert rep["facets_verified"]

    def test_n4_values(self, capsys):
        code, rep = run_json(capsys, ["detsym", "--n", "4", "--json", "--char", "2"])
        assert code == 0
        assert rep["dim"] == 4 and rep["core_dim"] == 2
        assert rep["facet_cards"] == [8, 10]

    def test_cap_exceeded(self, capsys):
        assert main(["detsym", "--n", "99"]) == 2

    def test_n_too_small(self, capsys):
        assert main(["detsym", "--n", "2"]) == 2

    def test_t_other_than_2_rejected(self, capsys):
        assert main(["detsym", "--n", "3", "--t", "3"]) == 2


class TestSweep:
    def test_small_sweep_passes(self, capsys):
        code = main(["sweep", "--max-elements", "3", "--char", "2"])
        out = capsys.readouterr().out
        assert code == 0
        assert "sweep ok" in out

    def test_zero_elements_vacuous(self, capsys):
        code = main(["sweep", "--max-elements", "0"])
        assert code == 0

    def test_cap(self, capsys):
        assert main(["sweep", "--max-elements", "7"]) == 2
