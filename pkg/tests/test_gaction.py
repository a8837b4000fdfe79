import pytest

from charp_autos.coeffs import Coeff
from charp_autos.errors import (AdditivityViolation, AxiomViolation,
                                NotInvariantGenerator, NotInvariantParameter)
from charp_autos.endo import PolyMap, compose
from charp_autos.gaction import (GaAction, SliceData, additivity_check,
                                 check_axioms, rank_certificate, slice_action)
from charp_autos.poly import VarTable


def t2(p=2):
    return VarTable(p, ("x1", "x2"))


def test_check_axioms_examples():
    t = t2(2)
    good = check_axioms(t, [t.parse("x1+T"), t.var("x2")])
    assert good == {"A1": True, "A2": True, "witness": None}
    mixed = check_axioms(t, [t.parse("x1+x2*T"), t.var("x2")])
    assert mixed["A1"] and mixed["A2"]
    bad = check_axioms(t, [t.parse("x1+x1*T"), t.var("x2")])
    assert bad["A1"] and not bad["A2"] and bad["witness"] == "x1"


def test_construction_enforces_axioms():
    t = t2(3)
    with pytest.raises(AxiomViolation):
        GaAction(t, [t.parse("x1+x1*T"), t.var("x2")])
    with pytest.raises(AxiomViolation):
        GaAction(t, [t.parse("x1+T+1"), t.var("x2")])
    GaAction(t, [t.parse("x1+T"), t.var("x2")])  # fine


def test_evaluate():
    p = 3
    t = VarTable(p, ("x",))
    a = Coeff.u(p)
    E = GaAction(t, [t.var("x") + t.var("T").scale(a)])
    assert E.evaluate(0).is_identity()
    b = Coeff.u(p) + 2
    assert E.evaluate(b) == PolyMap(t, [t.var("x") + t.const(a * b)])
    with pytest.raises(NotInvariantParameter):
        E.evaluate(t.var("x"))


def test_evaluation_is_additive_and_order_p():
    t = t2(2)
    E = slice_action(SliceData(
        PolyMap(t, [t.var("x1"), t.parse("x2+x1^3")]),
        t.var("T").scale(Coeff.u(2))))
    inv = t.parse("x2 + x1^3")
    alpha, beta = inv ** 2, inv + t.one()
    assert E.evaluate(alpha + beta) == compose(E.evaluate(alpha),
                                               E.evaluate(beta))
    from charp_autos.endo import order_up_to
    assert order_up_to(E.evaluate(alpha), 2) == 2


def test_rescale():
    p = 2
    t = t2(p)
    u = Coeff.u(p)
    E = GaAction(t, [t.parse("x1+T"), t.var("x2")])
    assert E.rescale(t.const(u)).images[0] == t.parse("x1+u*T")
    assert E.rescale(1) == E
    alpha = t.parse("x2^2 + x2")
    assert E.rescale(alpha).evaluate(1) == E.evaluate(alpha)
    with pytest.raises(NotInvariantParameter):
        E.rescale(t.zero())
    with pytest.raises(NotInvariantParameter):
        E.rescale(t.var("x1"))


def test_invariance_action_vs_induced_automorphism():
    # x^2+x is fixed by the order-2 automorphism E_1 but not by the action:
    # the invariant ring of (x -> x+T) is R alone
    t = VarTable(2, ("x",))
    E = GaAction(t, [t.parse("x+T")])
    h = t.parse("x^2 + x")
    assert not E.is_invariant(h)
    assert E.apply(h) == h + t.parse("T^2 + T")
    assert E.evaluate(1).apply(h) == h
    assert E.is_invariant(t.const(Coeff.u(2)))


def test_invariance_closure_and_E1_fixedness():
    t = t2(3)
    E = GaAction(t, [t.parse("x1 + x2*T"), t.var("x2")])
    h = t.parse("x2^2 + 1")
    hp = t.var("x2")
    assert E.is_invariant(h) and E.is_invariant(hp)
    assert E.is_invariant(h * hp)
    assert not E.is_invariant(t.var("x1"))
    sigma = E.evaluate(1)
    assert sigma.apply(h) == h


def test_restricts_to():
    p = 3
    t = t2(p)
    u = Coeff.u(p)
    E = GaAction(t, [t.parse("x1 + u*T"), t.var("x2")], base="R")
    assert E.restricts_to("R") == (True, None)
    E2 = GaAction(t, [t.var("x1") + t.var("T").scale(u.inv()), t.var("x2")])
    ok, witness = E2.restricts_to("R")
    assert not ok and witness[0] == "x1" and witness[1][1] == u.inv()
    assert E2.restricts_to("field")[0]
    assert E2.restricts_to("Ra", localizer=u)[0]


def test_slice_action_examples():
    p = 2
    t = t2(p)
    a = Coeff.u(p)
    # identity coordinates: plain translation
    E = slice_action(SliceData(PolyMap.identity(t), t.var("T").scale(a)))
    assert E.images[0] == t.parse("x1 + u*T") and E.images[1] == t.var("x2")
    # shifted second coordinate: E(x2) = x2 + f(x1) - f(x1 + aT)
    f = t.parse("x1^3")
    E = slice_action(SliceData(
        PolyMap(t, [t.var("x1"), t.var("x2") + f]), t.var("T").scale(a)))
    shifted = f.substitute({"x1": t.parse("x1 + u*T")})
    assert E.images[1] == t.var("x2") + f - shifted


def test_slice_rejects_non_additive():
    t = t2(3)
    with pytest.raises(AdditivityViolation):
        slice_action(SliceData(PolyMap.identity(t), t.parse("T^2")))
    # T + T^p is additive
    slice_action(SliceData(PolyMap.identity(t), t.parse("T + T^3")))


def test_additivity_check():
    t = t2(3)
    u = Coeff.u(3)
    assert additivity_check(t.var("T").scale(u))
    assert additivity_check(t.parse("T") + t.monomial(u, T=3))
    assert not additivity_check(t.parse("T^2"))
    assert not additivity_check(t.parse("T + 1"))


def test_lambda_of_slice_is_additive():
    t = t2(2)
    coords = PolyMap(t, [t.var("x1"), t.parse("x2 + x1^2")])
    lam = t.parse("T + u*T^2")
    E = slice_action(SliceData(coords, lam))
    extracted = E.apply(coords.images[0]) - coords.images[0]
    assert extracted == lam
    assert additivity_check(extracted)


def test_rank_certificate():
    p = 2
    t = VarTable(p, ("x1", "x2", "x3"))
    E = GaAction(t, [t.parse("x1+T"), t.var("x2"), t.var("x3")])
    cert = rank_certificate(E, [t.var("x2"), t.var("x3")],
                            [t.var("x2"), t.var("x3")])
    assert cert == {"rank_lower": 1, "rank_upper": 1}
    with pytest.raises(NotInvariantGenerator):
        rank_certificate(E, [t.var("x1")], [])
    # interval when bounds disagree
    cert = rank_certificate(E, [t.var("x2"), t.var("x3")], [t.var("x3")])
    assert cert == {"rank_lower": 1, "rank_upper": 2}


def test_rank_certificate_rank3_lower_bound():
    # claimed generators with no linear part give lower bound n
    p = 2
    t = VarTable(p, ("x1", "x2", "x3"))
    p2 = p * p
    f = t.var("x1", p2) - t.var("x1", p) + t.var("x2") * t.var("x3")
    g = f ** p2 * t.var("x3") - t.var("x2", p2 - 1) \
        + f ** (p2 - p) * t.var("x2", p - 1)
    cert = rank_certificate(None, [f, g], [], skip_invariance=True)
    assert cert["rank_lower"] == 3
