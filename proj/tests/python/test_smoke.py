import quatlogic as ql
import pytest


def min_function():
    return ql.QFunction(2, [min(a, b) for a in range(4) for b in range(4)])


def test_operators():
    assert ql.apply("BITSWAP", 1) == 2
    assert ql.apply("AND", 1, 2) == 0
    assert ql.apply("MIN", 1, 2) == 1
    with pytest.raises(ValueError):
        ql.apply("AND", 1)


def test_min_round_trip():
    f = min_function()
    expr = ql.synthesize(f, form=2)
    assert expr.product_count == 4
    assert expr.tabulate() == f
    net = ql.lower(expr, v1=2, v2=2)
    assert net.tabulate("F") == f
    assert net.gate_count <= ql.bounds(2, 2)[0]


def test_text_formats():
    f = ql.QFunction.random(2, 3)
    assert ql.QFunction.from_qtt(f.to_qtt()) == f
    expr = ql.synthesize(f, form=1).peephole()
    assert ql.SopExpr.from_qsop(expr.to_qsop()).to_qsop() == expr.to_qsop()
    net = ql.lower(expr, expand_equality=True)
    assert ql.Netlist.from_qnet(net.to_qnet()).to_qnet() == net.to_qnet()
    with pytest.raises(ql.ParseError):
        ql.QFunction.from_qtt("vars 1\n0 0\n")


def test_decoder():
    dec = ql.circuit("decoder", n=1)
    assert dec.simulate({"S": 2}) == {"L0": 0, "L1": 0, "L2": 3, "L3": 0}
    assert ql.bounds(2, 2) == (71, 9)
