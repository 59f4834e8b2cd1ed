import json
import random

import pytest

from tldiag.cli import parse, evaluate_ast, EvalContext, main, SyntaxErrorWithColumn
from tldiag import algebra as alg
from tldiag.render import render_element
from tldiag.scalars import IntLaurent

Q = IntLaurent.q_power


class TestParser:
    def test_kernel_expression(self):
        ast = parse("q^3 - q^2*T[1] - q^2*T[2] + q*T[1]*T[2] + q*T[2]*T[1] - T[1]*T[2]*T[1]")
        elem = evaluate_ast(ast, EvalContext(3, "finite"))
        assert elem.is_zero()

    def test_atom_m(self):
        ast = parse("M[4]")
        elem = evaluate_ast(ast, EvalContext(4, "affine"))
        assert elem == alg.jm_definition(4, 4, "pole")

    def test_juxtaposition(self):
        a = evaluate_ast(parse("tau^2 e[3]"), EvalContext(4, "affine"))
        b = evaluate_ast(parse("tau^2 * e[3]"), EvalContext(4, "affine"))
        assert a == b

    def test_extra_rel_expression(self):
        lhs = evaluate_ast(parse("tau^2 * e[3]"), EvalContext(4, "affine"))
        rhs = evaluate_ast(parse("e[1]e[2]e[3]"), EvalContext(4, "affine"))
        assert lhs == rhs

    def test_negative_power(self):
        elem = evaluate_ast(parse("T[1]T[1]^-1"), EvalContext(3, "finite"))
        assert elem == alg.AlgebraElement.unit("finite", 3)

    def test_syntax_error_column(self):
        with pytest.raises(SyntaxErrorWithColumn) as err:
            parse("q + ?")
        assert err.value.column == 5

    def test_unknown_symbol(self):
        with pytest.raises(SyntaxErrorWithColumn):
            parse("frobenius[2]")

    def test_dstar_comma_list(self):
        elem = evaluate_ast(parse("dstar[1,2]"), EvalContext(4, "affine"))
        assert elem == alg.d_gamma_star_element((1, 2), 4)

    def test_parse_render_round_trip(self):
        rng = random.Random(5)
        k = 4
        pool = ["m[2]", "m[3]", "m[4]", "d[2,2]", "d[1,3]", "qint[3]", "q", "2"]
        for _ in range(200):
            expr = " + ".join(rng.choice(pool) for _ in range(rng.randint(1, 3)))
            ctx = EvalContext(k, "finite")
            elem = evaluate_ast(parse(expr), ctx)
            text = render_element(elem)
            if text == "0":
                continue
            again = evaluate_ast(parse(_renderable(text)), ctx)
            assert again == elem

    def test_x_in_finite_is_n(self):
        elem = evaluate_ast(parse("x"), EvalContext(3, "finite"))
        assert elem == alg.AlgebraElement.unit("finite", 3).scale(
            IntLaurent({1: 1, -1: 1}))


def _renderable(text: str) -> str:
    # canonical rendering uses d(...)/dstar(...) names and bracket ints;
    # translate back to the input grammar
    out = text.replace("d(", "d[").replace("dstar(", "dstar[")
    result = []
    depth = 0
    for ch in out:
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        if ch == ")" and depth > 0:
            result.append("]")
            depth -= 1
        elif ch == "[" and result and result[-1].isdigit():
            # [m] quantum integer
            result.append("qint[")
            continue
        else:
            result.append(ch)
    return "".join(result)


class TestMain:
    def test_expand_matches_reference(self, capsys):
        rc = main(["expand", "--k", "4", "--ring", "finite", "--expr", "m[4]"])
        out = capsys.readouterr().out.strip()
        assert rc == 0
        assert out == "[3]*d(1,1,2) - [2]*d(2,2) - [2]*d(1,3) + d(4)"

    def test_expand_json(self, capsys):
        rc = main(["expand", "--k", "3", "--ring", "finite", "--expr", "m[3]",
                   "--format", "json"])
        assert rc == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["schema"] == 1
        assert len(payload["element"]) == 4  # two d(1,2) + two d(3) diagrams

    def test_expand_via_choices_agree(self, capsys):
        outputs = set()
        for via in ("def", "rec", "closed"):
            rc = main(["expand", "--k", "5", "--ring", "affine",
                       "--expr", "M[3]", "--via", via])
            assert rc == 0
            outputs.add(capsys.readouterr().out)
        assert len(outputs) == 1

    def test_expand_syntax_error_exit_2(self, capsys):
        rc = main(["expand", "--k", "3", "--expr", "q +"])
        assert rc == 2

    def test_coeff(self, capsys):
        rc = main(["coeff", "--i", "5", "--gamma", "2,1,2", "--format", "json"])
        assert rc == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["gamma"] == [2, 1, 2]

    def test_verify_exit_zero(self, capsys):
        rc = main(["verify", "--suite", "combinatorics", "--kmax", "4"])
        assert rc == 0

    def test_verify_json_deterministic(self, capsys):
        main(["verify", "--suite", "relations", "--kmax", "3", "--format", "json"])
        first = capsys.readouterr().out
        main(["verify", "--suite", "relations", "--kmax", "3", "--format", "json"])
        second = capsys.readouterr().out
        assert first == second

    def test_spectrum(self, capsys):
        rc = main(["spectrum", "--p", "0,1,0", "--m", "0", "--i", "2",
                   "--format", "json"])
        assert rc == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["reports"][0]["derived"] == {"1": 1, "-1": 1}

    def test_spectrum_strict(self, capsys):
        rc = main(["spectrum", "--p", "0,1,0", "--m", "0", "--i", "2", "--strict"])
        capsys.readouterr()
        assert rc == 1

    def test_graph_tl(self, capsys):
        rc = main(["graph", "--mu", "3", "--levels", "3", "--type", "tl",
                   "--format", "json"])
        assert rc == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["levels"][3]["vertices"] == [6, 4, 2, 0]

    def test_graph_hecke_labels(self, capsys):
        rc = main(["graph", "--mu", "4,2", "--levels", "1", "--type", "hecke",
                   "--format", "json"])
        assert rc == 0
        payload = json.loads(capsys.readouterr().out)
        contents = sorted(e["content"] for e in payload["levels"][1]["edges"])
        assert contents == [1, 4]  # boxes (2,3) and (1,5)

    def test_repcheck(self, capsys):
        rc = main(["repcheck", "--k", "3", "--q", "5/3"])
        assert rc == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["matrix_dim"] == 5
        assert payload["annihilated"] and payload["commuting"]
