import json
import subprocess
import sys

import jsonschema
import pytest
from hypothesis import given, strategies as st

from commuting_classes import catalog as cat
from commuting_classes.cli import main
from commuting_classes.errors import ParseError
from commuting_classes.reports import load_schema


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, schema, *argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    assert code == 0
    data = json.loads(out)
    jsonschema.validate(data, load_schema(schema))
    return data


# -- specs ----------------------------------------------------------------

@given(st.sampled_from(["sym", "alt", "alt-in-sym", "dihedral", "cyclic", "gl2", "sl2-in-gl2", "agl1"]),
       st.integers(1, 40),
       st.sampled_from([None, "alt", "sl", "rot", "v4", "center", "derived", "trivial", "whole", "sub:3", "gen:0"]))
def test_spec_round_trip(family, param, selector):
    spec = cat.GroupSpec.parse(f"{family}:{param}" + (f"/{selector}" if selector else ""))
    assert cat.GroupSpec.parse(str(spec)) == spec


def test_spec_errors():
    for bad in ["foo:3", "sym", "sym:x", "q8:2", "sym:4/bogus"]:
        with pytest.raises(ParseError):
            cat.GroupSpec.parse(bad)


def test_default_selectors():
    assert cat.GroupSpec.parse("alt-in-sym:4").effective_selector == "alt"
    assert cat.GroupSpec.parse("dihedral:5").effective_selector == "rot"
    assert cat.GroupSpec.parse("sl2-in-gl2:3").effective_selector == "sl"
    assert cat.GroupSpec.parse("sym:4").effective_selector == "whole"


def test_catalog_covers_quotient_shapes():
    orders = {cat.load(s).quotient_order for s in cat.CATALOG}
    assert {2, 3, 4}.issubset(orders)
    assert any(not cat.prime_index(cat.load(s)) for s in cat.CATALOG)


def test_perm_file(tmp_path):
    f = tmp_path / "s3.txt"
    f.write_text("# Sym(3)\n(0 1)\n(0 1 2)\n")
    Q = cat.load(f"perm-file:{f}", "alt")
    assert Q.group.order == 6 and Q.quotient_order == 2
    (tmp_path / "empty.txt").write_text("# nothing\n")
    with pytest.raises(ParseError):
        cat.load(f"perm-file:{tmp_path / 'empty.txt'}")


# -- CLI examples ----------------------------------------------------------

def test_cli_classes_sym4(capsys):
    code, out, _ = run(capsys, "classes", "sym:4", "--mod", "alt")
    rows = [line.split("\t") for line in out.strip().splitlines()[1:]]
    assert code == 0 and len(rows) == 5
    assert [r[1] for r in rows if r[4] == "true"] == ["(1 2 3)"]


def test_cli_classes_examples(capsys):
    data = run_json(capsys, "classes", "classes", "cyclic:6", "--mod", "sub:2")
    assert len(data["classes"]) == 6 and all(c["size"] == 1 for c in data["classes"])
    data = run_json(capsys, "classes", "classes", "gl2:3", "--mod", "sl")
    assert len(data["classes"]) == 8


@pytest.mark.parametrize("spec,coset,n", [("sym:4", 0, 2), ("sym:3", 0, 1), ("gl2:5", 1, 5)])
def test_cli_match_examples(capsys, spec, coset, n):
    data = run_json(capsys, "matching", "match", spec, "--mod", "alt" if spec.startswith("sym") else "sl",
                    "--coset", str(coset))
    assert data["verified"] and len(data["pairs"]) == n


def test_cli_relation(capsys):
    code, dot, _ = run(capsys, "relation", "sym:4", "--mod", "alt")
    assert dot.startswith("graph") and "c1 -- c3;" in dot
    data = run_json(capsys, "relation", "relation", "sym:4", "--mod", "alt")
    assert [1, 4] not in data["edges"] and [3, 4] in data["edges"]


def test_cli_partition_and_frobenius(capsys):
    data = run_json(capsys, "partition", "partition", "alt:4/v4")
    assert data["p"] == 3 and all(len(t["classes"]) == 3 for t in data["tuples"])
    data = run_json(capsys, "frobenius", "frobenius", "sym:3", "--mod", "alt")
    assert data["is_frobenius"] and data["kernel_nilpotent"]


def test_cli_coarsen(capsys):
    data = run_json(capsys, "coarsen", "coarsen", "4,3^4,1^2")
    assert "12+4+2" in data["coarsenings"] and "6+4+3+3+1+1" in data["coarsenings"]
    data = run_json(capsys, "coarsen", "coarsen", "2+2", "4")
    assert data["common_coarsening"] == "4"
    data = run_json(capsys, "coarsen", "coarsen", "2+1+1", "4")
    assert data["common_coarsening"] is None


def test_cli_tables(capsys):
    rows = run_json(capsys, "sym_table", "sym-table", "--n-max", "10")
    assert all(r["p_even"] == r["p_odd"] + r["d_o"] for r in rows)
    code, out, _ = run(capsys, "sym-table", "--pairing", "4", "--format", "json")
    data = json.loads(out)
    jsonschema.validate(data, load_schema("pairing"))
    assert set(data["pairs"]) == {"1+1+1+1", "2+2"}
    rows = run_json(capsys, "gl2_table", "gl2-table", "--q", "3,5,7")
    assert all(r["verified"] for r in rows)
    assert {"q": 5, "coset": "SL", "A": 2, "B": 2, "C": 1, "D": 2, "verified": True} in rows


def test_cli_explore(capsys):
    data = run_json(capsys, "explore", "explore", "sym:4", "--mod", "alt", "--coset", "0", "--coset-y", "0")
    assert data["found"] and data["matching"]["verified"] and data["matching"]["experimental"]
    jsonschema.validate(data["matching"], load_schema("matching"))


def test_cli_error_exit(capsys):
    code, out, err = run(capsys, "classes", "sym:4", "--mod", "v4")
    assert code == 2 and "QuotientNotCyclic" in err and out == ""


def test_cli_verify_only_sym(capsys):
    code, out, _ = run(capsys, "verify", "--only", "sym")
    assert code == 0
    assert "Counting identity" in out and "Coset-to-generator" not in out


def test_cli_verify_gl2_q(capsys):
    code, out, _ = run(capsys, "verify", "--only", "gl2", "--q", "3,5,7")
    assert code == 0 and "q in [3, 5, 7]" in out


@pytest.mark.parametrize("argv", [
    ["classes", "gl2:5", "--mod", "sl", "--format", "json"],
    ["relation", "dihedral:6"],
    ["match", "sl2-in-gl2:5", "--coset", "3"],
    ["partition", "sym:4", "--mod", "alt"],
])
def test_deterministic_output(argv):
    cmd = [sys.executable, "-m", "commuting_classes.cli", *argv]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and a


def test_global_flags_after_subcommand(capsys):
    code, _, _ = run(capsys, "classes", "sym:3", "--mod", "alt", "--seed", "3", "--cap", "1000")
    assert code == 0


def test_cli_verify_all(capsys):
    code, out, _ = run(capsys, "verify", "--all")
    assert code == 0 and "[FAIL]" not in out
