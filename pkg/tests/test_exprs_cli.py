import json
import os

import pytest

from polyqsym import polytopes as pb
from polyqsym.cli import main
from polyqsym.exprs import ExprError, format_sum, parse_expression
from polyqsym.ring import FormalSum, JOIN_RING, PRODUCT_RING
from conftest import fs


def test_parse_atoms_and_words():
    assert parse_expression("pt").terms == {pb.point(): 1}
    assert parse_expression("B C C empty").terms == {pb.cube(2): 1}
    assert parse_expression("word(BCC)").terms == {pb.cube(2): 1}
    s = parse_expression("2*join(pt,pt) - cube(1)")
    assert s.terms == {pb.segment(): 1}
    assert parse_expression("prod(simplex(2), cube(1))").terms == \
        {pb.product(pb.simplex(2), pb.segment()): 1}
    assert parse_expression("dual(cube(3))").terms == {pb.cross(3): 1}
    assert parse_expression("3*simplex(2) - 4*cube(2)").terms == \
        {pb.simplex(2): 3, pb.cube(2): -4}


def test_parse_precedence():
    # unary operators bind tighter than scalar multiplication
    s = parse_expression("2*C pt")
    assert s.terms == {pb.segment(): 2}
    s = parse_expression("2*B C C empty - cube(2)")
    assert s.terms == {pb.cube(2): 1}


def test_parse_ambient_inference():
    assert parse_expression("pt").ambient == PRODUCT_RING
    assert parse_expression("empty").ambient == JOIN_RING
    assert parse_expression("pt", ambient=JOIN_RING).ambient == JOIN_RING
    with pytest.raises(ValueError):
        parse_expression("empty", ambient=PRODUCT_RING)


def test_parse_errors_carry_position():
    with pytest.raises(ExprError) as err:
        parse_expression("prod(simplex(2)")
    assert err.value.position == 15
    with pytest.raises(ExprError):
        parse_expression("frobnicate(3)")
    with pytest.raises(ExprError):
        parse_expression("simplex(x)")
    with pytest.raises(ExprError):
        parse_expression("pt pt")
    with pytest.raises(ExprError):
        parse_expression("polygon(2)")
    with pytest.raises(ExprError):
        parse_expression("prod(empty, pt)")


def test_format_round_trip():
    cases = ["pt", "3*simplex(2) - 4*cube(2)",
             "2*cell24 + polygon(5) - cross(3)",
             "-simplex(3) + 2*word(CBCC)"]
    for text in cases:
        s = parse_expression(text)
        again = parse_expression(format_sum(s))
        assert again.terms == s.terms, text


def test_format_round_trip_catalogue(catalogue):
    for p in catalogue.values():
        s = FormalSum.of(p, JOIN_RING)
        again = parse_expression(format_sum(s), ambient=JOIN_RING)
        assert again.terms == s.terms, p.name


def test_cli_build_and_flag(capsys):
    assert main(["build", "B C C empty"]) == 0
    out = capsys.readouterr().out
    assert "4 vertices" in out
    assert main(["--json", "flag", "simplex(2)"]) == 0
    rows = json.loads(capsys.readouterr().out)
    table = {tuple(r["S"]): r["value"] for r in rows}
    assert table[(0, 1)] == 6


def test_cli_fpoly_routes(capsys):
    assert main(["--json", "fpoly", "simplex(2)"]) == 0
    got = json.loads(capsys.readouterr().out)
    assert {"comp": [1, 1], "coeff": 6} in got
    assert main(["fpoly", "simplex(2)", "--route", "operator", "--r",
                 "2"]) == 0
    text = capsys.readouterr().out
    assert "t1" in text
    assert main(["fpoly", "simplex(2)", "--r", "2"]) == 0


def test_cli_ehrenborg_frp(capsys):
    assert main(["ehrenborg", "polygon(3)"]) == 0
    assert "M[3]" in capsys.readouterr().out
    assert main(["frp", "pt"]) == 0
    assert "M[1] + a" in capsys.readouterr().out


def test_cli_lyndon(capsys):
    assert main(["lyndon", "--alphabet", "odd", "--weight", "7"]) == 0
    words = json.loads(capsys.readouterr().out)
    assert [7] in words and len(words) == 4
    assert main(["lyndon", "--k-table", "12"]) == 0
    ks = json.loads(capsys.readouterr().out)
    assert ks == [1, 1, 1, 1, 2, 2, 4, 5, 8, 11, 18, 25]


def test_cli_bb_and_project(capsys):
    assert main(["bb-matrix", "2"]) == 0
    assert "1      4" in capsys.readouterr().out
    assert main(["--json", "bb-matrix", "3", "--det"]) == 0
    assert json.loads(capsys.readouterr().out) == {"n": 3, "det": 1}
    assert main(["project", "polygon(5)", "--dim", "2"]) == 0
    out = capsys.readouterr().out.strip()
    reparsed = parse_expression(out)
    assert reparsed.terms == {pb.cube(2): 2, pb.simplex(2): -1}


def test_cli_verify(capsys):
    assert main(["verify", "appendix-c"]) == 0
    out = capsys.readouterr().out
    assert "0 failed" in out
    assert main(["verify", "nope"]) == 2
    capsys.readouterr()
    assert main(["--json", "--jobs", "2", "verify", "lyndon-counts"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["failed"] == 0
    assert all(c["status"] == "pass" for c in report["checks"])


def test_cli_usage_and_syntax_errors(capsys):
    assert main(["build", "prod(simplex(2)"]) == 2
    err = capsys.readouterr().err
    assert "offset 15" in err
    assert main(["nope"]) == 2


def test_cli_cache_round_trip(tmp_path, capsys):
    path = str(tmp_path / "cache.json")
    assert main(["cache", "save", path]) == 0
    capsys.readouterr()
    assert main(["cache", "load", path]) == 0
    capsys.readouterr()
    # registry reload reproduces identical canonical keys
    data = json.loads(open(path).read())
    assert data["schema"] == 1
    for entry in data["registry"][:20]:
        from polyqsym.posets import GradedPoset
        lat = GradedPoset.from_json_obj(entry)
        hit = pb.registry_polytope(lat.canonical_key())
        assert hit is not None
    # wrong schema rejected
    bad = str(tmp_path / "bad.json")
    with open(bad, "w") as fh:
        json.dump({"schema": 99}, fh)
    assert main(["cache", "load", bad]) == 3
    # bb tables round-trip through the cache
    assert main(["--cache", path, "bb-matrix", "4", "--det"]) == 0
    capsys.readouterr()
    assert main(["--cache", path, "bb-matrix", "4", "--det"]) == 0
    out = capsys.readouterr().out
    assert "det K^4 = 1" in out


def test_cli_io_error(capsys):
    assert main(["cache", "load", "/nonexistent/nope.json"]) == 3
