"""DSL parser and command-line behavior."""

import json
import random

import pytest

from finring import ParseError
from finring.cli import (
    CExpr,
    DExpr,
    FmExpr,
    GProdExpr,
    GrExpr,
    KsExpr,
    MatExpr,
    ProdExpr,
    Q8Expr,
    SExpr,
    TriExpr,
    TrivExpr,
    ZExpr,
    elaborate,
    main,
    parse,
    unparse,
)


class TestParse:
    def test_group_ring(self):
        assert parse("GR(Z(2), C(3))") == GrExpr(ZExpr(2), CExpr(3))

    def test_ks(self):
        assert parse("Ks(Z(4), 2)") == KsExpr(ZExpr(4), 2)

    def test_whitespace_insensitive(self):
        assert parse(" M( 2 ,Z(2) ) ") == MatExpr(2, ZExpr(2))

    def test_product(self):
        assert parse("Z(2) x Z(3) x Z(5)") == ProdExpr(
            ProdExpr(ZExpr(2), ZExpr(3)), ZExpr(5)
        )

    def test_nested(self):
        assert parse("FM(3, Triv(Z(2)), 0)") == FmExpr(3, TrivExpr(ZExpr(2)), 0)

    def test_group_atoms(self):
        expr = parse("GR(Z(2), C(2) x Q8)")
        assert expr.group == GProdExpr(CExpr(2), Q8Expr())
        assert parse("GR(Z(2), D(4))").group == DExpr(4)
        assert parse("GR(Z(2), S(3))").group == SExpr(3)

    def test_unbalanced_paren(self):
        with pytest.raises(ParseError) as err:
            parse("M(2, Z(2)")
        assert ")" in err.value.expected

    def test_z_zero(self):
        with pytest.raises(ParseError):
            parse("Z(0)")

    def test_symmetric_bound(self):
        with pytest.raises(ParseError):
            parse("GR(Z(2), S(5))")

    def test_trailing_garbage(self):
        with pytest.raises(ParseError):
            parse("Z(2) Z(3)")

    def test_unknown_name(self):
        with pytest.raises(ParseError):
            parse("W(3)")

    def test_position_reported(self):
        with pytest.raises(ParseError) as err:
            parse("M(2, ?)")
        assert err.value.position == 5


def _random_group(rng, depth):
    if depth > 0 and rng.random() < 0.3:
        return GProdExpr(_random_group(rng, depth - 1), _random_group(rng, depth - 1))
    return rng.choice(
        [CExpr(rng.randint(1, 8)), DExpr(rng.randint(1, 4)), SExpr(rng.randint(1, 4)), Q8Expr()]
    )


def _random_ring(rng, depth):
    if depth == 0:
        return ZExpr(rng.randint(1, 12))
    choice = rng.randrange(8)
    if choice == 0:
        return ZExpr(rng.randint(1, 12))
    if choice == 1:
        return MatExpr(rng.randint(1, 3), _random_ring(rng, depth - 1))
    if choice == 2:
        return TriExpr(rng.randint(1, 3), _random_ring(rng, depth - 1))
    if choice == 3:
        return GrExpr(_random_ring(rng, depth - 1), _random_group(rng, 1))
    if choice == 4:
        return TrivExpr(_random_ring(rng, depth - 1))
    if choice == 5:
        return KsExpr(_random_ring(rng, depth - 1), rng.randint(0, 6))
    if choice == 6:
        return FmExpr(rng.randint(2, 3), _random_ring(rng, depth - 1), rng.randint(0, 6))
    return ProdExpr(_random_ring(rng, depth - 1), _random_ring(rng, depth - 1))


def test_unparse_roundtrip_on_random_trees():
    rng = random.Random(0)
    for _ in range(1000):
        expr = _random_ring(rng, rng.randint(0, 3))
        assert parse(unparse(expr)) == expr


class TestElaborate:
    def test_group_ring(self):
        R = elaborate(parse("GR(Z(2), C(3))"))
        assert R.order == 8 and R.kind == "group_ring"

    def test_s_reduced_into_base(self):
        R = elaborate(parse("Ks(Z(4), 6)"))
        assert R.meta["s"] == 2

    def test_product(self):
        assert elaborate(parse("Z(2) x Z(3)")).order == 6


class TestCommands:
    def test_classify_ok(self, capsys):
        assert main(["classify", "Z(6)"]) == 0
        out = capsys.readouterr().out
        assert "unit_regular: True" in out

    def test_classify_json_schema(self, capsys):
        assert main(["classify", "GR(Z(2), C(2))", "--json", "--fast"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert set(payload) >= {"label", "order", "flags", "witnesses", "radicals", "timing"}
        assert payload["flags"]["regular"] is False
        assert payload["flags"]["strongly_unit_nil_clean"] is True
        assert all(entry["agrees"] for entry in payload["fast"])

    def test_classify_parse_error(self):
        assert main(["classify", "Z(0)"]) == 2
        assert main(["classify", "M(2, Z(2)"]) == 2

    def test_classify_cap(self):
        assert main(["classify", "M(2, Z(10))"]) == 3

    def test_usage_error(self):
        assert main(["no-such-command"]) == 2

    def test_verify_lemma(self, capsys):
        assert main(["verify", "lemma-4-4", "--n-max", "20"]) == 0
        assert "20/20" in capsys.readouterr().out

    def test_verify_unknown_suite(self):
        assert main(["verify", "nope"]) == 2

    def test_verify_json(self, capsys):
        assert main(["verify", "lemma-4-4", "--n-max", "10", "--json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["suite"] == "lemma-4-4" and payload["failures"] == []

    def test_search_clean(self, capsys):
        assert main(["search", "--seed", "0", "--count", "5", "--json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["passed"] == payload["attempted"]
        assert "wall_time" not in payload

    def test_radicals(self, capsys):
        assert main(["radicals", "Z(4)"]) == 0
        out = capsys.readouterr().out
        assert "J(R)   = {0, 2}" in out

    def test_info(self, capsys):
        assert main(["info", "M(2, Z(2))", "--json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["units"] == 6 and payload["order"] == 16
