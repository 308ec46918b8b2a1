"""End-to-end command tests through dispatch with in-memory streams."""

import io

import pytest

from jumpramsey.cli import WORKERS_ENV, dispatch
from jumpramsey.core import (
    parse_pair_coloring,
    parse_pattern,
    parse_triple_coloring,
    parse_witness,
    serialize_pair_coloring,
    serialize_triple_coloring,
)
from jumpramsey.construct import lift, pentagon_coloring


def run(argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    code = dispatch(argv, stdin=io.StringIO(stdin), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_gen_path_roundtrips():
    code, out, _ = run(["gen", "path", "--m", "5"])
    assert code == 0
    pattern, jumps = parse_pattern(out)
    assert pattern.m == 5 and jumps is None
    assert (2, 3, 4) in pattern.edges


def test_gen_imin_carries_jumps():
    code, out, _ = run(["gen", "imin", "--n", "2"])
    assert code == 0
    pattern, jumps = parse_pattern(out)
    assert jumps == (2, 4)
    assert len(pattern.edges) == 6


def test_gen_pentagon_parses_back():
    code, out, _ = run(["gen", "pentagon"])
    assert code == 0
    assert parse_pair_coloring(out) == pentagon_coloring()


def test_gen_schur_default_and_custom():
    code, out, _ = run(["gen", "schur"])
    assert code == 0
    assert parse_pair_coloring(out).N == 14
    code, out, _ = run(["gen", "schur", "--classes", "1/2"])
    assert code == 0
    assert parse_pair_coloring(out).N == 3
    code, _, err = run(["gen", "schur", "--classes", "1/1"])
    assert code == 2 and "error:" in err


def test_gen_paley_argument_check():
    code, _, err = run(["gen", "paley", "--q", "15"])
    assert code == 2 and "error:" in err


def test_gen_product_reads_files(tmp_path):
    path = tmp_path / "pent.pairs"
    path.write_text(serialize_pair_coloring(pentagon_coloring()))
    code, out, _ = run(
        ["gen", "product", "--left", str(path), "--right", str(path)]
    )
    assert code == 0
    assert parse_pair_coloring(out).N == 25
    code, _, err = run(
        ["gen", "product", "--left", str(tmp_path / "no"), "--right", str(path)]
    )
    assert code == 2 and "cannot read" in err


def test_lift_pipeline():
    _, pairs, _ = run(["gen", "pentagon"])
    code, triples, _ = run(["lift"], stdin=pairs)
    assert code == 0
    assert parse_triple_coloring(triples) == lift(pentagon_coloring())


def test_detect_jumps_on_pentagon_lift_finds_nothing():
    _, pairs, _ = run(["gen", "pentagon"])
    _, triples, _ = run(["lift"], stdin=pairs)
    code, out, _ = run(["detect", "jumps", "--n", "2"], stdin=triples)
    assert code == 1 and out == ""


def test_detect_jumps_on_all_blue_host():
    host = "triples 5\n" + "0" * 10 + "\n"
    code, out, _ = run(["detect", "jumps", "--n", "2"], stdin=host)
    assert code == 0
    w = parse_witness(out)
    assert w.vertices == (1, 2, 3, 4, 5)
    assert w.jumps == (2, 4)


def test_detect_redpath_truncates_to_requested_length():
    host = "triples 5\n" + "1" * 10 + "\n"
    code, out, _ = run(["detect", "redpath", "--m", "4"], stdin=host)
    assert code == 0
    assert parse_witness(out).vertices == (1, 2, 3, 4)
    code, _, _ = run(["detect", "redpath", "--m", "6"], stdin=host)
    assert code == 1


def test_detect_pattern_subcommand(tmp_path):
    _, pat, _ = run(["gen", "imin", "--n", "2"])
    patfile = tmp_path / "i2.pattern"
    patfile.write_text(pat)
    host = "triples 5\n" + "0" * 10 + "\n"
    code, out, _ = run(
        ["detect", "pattern", "--pattern", str(patfile)], stdin=host
    )
    assert code == 0
    assert parse_witness(out).vertices == (1, 2, 3, 4, 5)


def test_detect_clique_reads_pair_host():
    _, pairs, _ = run(["gen", "pentagon"])
    code, _, _ = run(["detect", "clique", "--m", "3"], stdin=pairs)
    assert code == 1
    code, out, _ = run(["detect", "clique", "--m", "2"], stdin=pairs)
    assert code == 0
    assert len(parse_witness(out).vertices) == 2


def test_table_outputs_parse():
    host = "triples 5\n" + "0" * 10 + "\n"
    code, out, _ = run(["table", "alpha"], stdin=host)
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "alpha 5"
    assert lines[1] == "1 2 1"
    code, out, _ = run(["table", "beta"], stdin=host)
    assert code == 0
    assert out.splitlines()[-1] == "4 5 3"
    code, out, _ = run(["table", "profiles"], stdin=host)
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "profiles 5"
    assert lines[1] == "1"
    assert lines[-1] == "5 3"


def test_certify_downsets():
    code, out, _ = run(["certify", "downsets", "--n", "4"])
    assert code == 0 and out.strip() == "70"


def test_certify_ghtriangle(tmp_path):
    chi = tmp_path / "chi.txt"
    chi.write_text("1 2 1\n2 3 1\n1 3 1\n")
    code, out, _ = run(
        ["certify", "ghtriangle", "--m", "3", "--jumps", "2", "--chi", str(chi)]
    )
    assert code == 0 and out.strip() == "1 2 3"
    chi.write_text("1 2 1\n2 3 1\n1 3 1\n1 3 2\n")
    code, _, err = run(
        ["certify", "ghtriangle", "--m", "3", "--jumps", "2", "--chi", str(chi)]
    )
    assert code == 2 and "duplicate" in err


def test_certify_witness_roundtrip(tmp_path):
    chain = tmp_path / "chain.witness"
    chain.write_text("witness\nvertices 1 2 3 4 5\nblocks 1 1\n")
    host = "triples 5\n" + "0" * 10 + "\n"
    code, out, _ = run(
        ["certify", "witness", "--chain", str(chain)], stdin=host
    )
    assert code == 0
    w = parse_witness(out)
    assert w.vertices == (1, 2, 3, 4, 5) and w.jumps == (2, 4)
    chain.write_text("witness\nvertices 1 2 3 4 5\n")
    code, _, err = run(
        ["certify", "witness", "--chain", str(chain)], stdin=host
    )
    assert code == 2 and "blocks" in err


def test_certify_profileprop_reports():
    host = "triples 5\n" + "0" * 10 + "\n"
    code, out, _ = run(["certify", "profileprop", "--n", "1"], stdin=host)
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "profileprop N=5 n=1"
    assert "group 3 4" in lines
    assert "blue-member 1 2 3 jumps 2" in lines
    assert lines[-1] == "status clean"


def test_search_single_level_sat(tmp_path):
    out_file = tmp_path / "w.triples"
    code, _, err = run(
        [
            "search",
            "--n",
            "6",
            "--red",
            "path:4",
            "--blue",
            "path:4",
            "--output",
            str(out_file),
        ]
    )
    assert code == 0
    assert "sat nodes=2805" in err
    c = parse_triple_coloring(out_file.read_text())
    assert c.bitstring() == "10110011110001101110"


def test_search_single_level_unsat_certificate():
    code, out, _ = run(
        ["search", "--n", "7", "--red", "path:4", "--blue", "path:4"]
    )
    assert code == 1
    assert out == (
        "unsat N=7\n"
        "red path:4\n"
        "blue path:4\n"
        "budget 1000000000\n"
        "split-depth 4\n"
        "nodes 232703\n"
        "max-depth 34\n"
    )


def test_search_inconclusive_exit_code():
    code, _, err = run(
        [
            "search",
            "--n",
            "7",
            "--red",
            "path:4",
            "--blue",
            "path:4",
            "--budget",
            "1000",
        ]
    )
    assert code == 3 and "inconclusive" in err


def test_search_bracket_writes_level_files(tmp_path):
    base = tmp_path / "lv"
    code, out, _ = run(
        [
            "search",
            "--nmax",
            "4",
            "--red",
            "path:3",
            "--blue",
            "jumps:1",
            "--output",
            str(base),
        ]
    )
    assert code == 0
    assert out.splitlines() == [
        "N=2 sat",
        "N=3 unsat",
        "largest-sat 2",
        "status closed",
    ]
    assert (tmp_path / "lv-N2.triples").exists()
    cert = (tmp_path / "lv-N3.cert").read_text()
    assert cert.startswith("unsat N=3\n")
    assert "blue jumps:1" in cert


def test_search_usage_errors():
    code, _, err = run(["search", "--red", "path:4", "--blue", "path:4"])
    assert code == 2 and "exactly one" in err
    code, _, err = run(
        ["search", "--n", "5", "--red", "power:5,4", "--blue", "path:4"]
    )
    assert code == 2 and "path:<m>" in err
    code, _, err = run(
        ["search", "--n", "5", "--red", "path:4", "--blue", "tree:4"]
    )
    assert code == 2
    code, _, err = run(
        ["search", "--n", "5", "--red", "path:4", "--blue", "path:2"]
    )
    assert code == 2


def test_search_workers_env_and_flag(monkeypatch):
    monkeypatch.setenv(WORKERS_ENV, "not-a-number")
    code, _, err = run(
        ["search", "--n", "5", "--red", "path:4", "--blue", "jumps:2"]
    )
    assert code == 2 and WORKERS_ENV in err
    # the flag wins over the broken environment value
    code, _, err = run(
        [
            "search",
            "--n",
            "5",
            "--red",
            "path:4",
            "--blue",
            "jumps:2",
            "--workers",
            "1",
        ]
    )
    assert code == 0 or "sat" in err
    monkeypatch.setenv(WORKERS_ENV, "2")
    code, out, _ = run(
        ["search", "--n", "7", "--red", "path:4", "--blue", "path:4"]
    )
    assert code == 1 and "nodes 232703" in out


def test_verify_member_paths(tmp_path):
    _, pat, _ = run(["gen", "imin", "--n", "2"])
    patfile = tmp_path / "i2.pattern"
    patfile.write_text(pat)
    code, out, _ = run(["verify", "member", "--pattern", str(patfile)])
    assert code == 0 and out == "valid\n"
    code, out, _ = run(
        ["verify", "member", "--pattern", str(patfile), "--jumps", "2,3"]
    )
    assert code == 1 and out.startswith("invalid:")
    _, bare, _ = run(["gen", "path", "--m", "5"])
    barefile = tmp_path / "p5.pattern"
    barefile.write_text(bare)
    code, _, err = run(["verify", "member", "--pattern", str(barefile)])
    assert code == 2 and "no jump set" in err


def test_verify_roundtrip_all_applicable():
    code, out, _ = run(
        [
            "verify",
            "roundtrip",
            "--n",
            "2",
            "--seed",
            "7",
            "--count",
            "50",
            "--hosts",
            "9",
        ]
    )
    assert code == 0
    assert out == "count 50 applicable 50 verified 50\n"


def test_usage_without_subcommand():
    code, _, _ = run([])
    assert code == 2
