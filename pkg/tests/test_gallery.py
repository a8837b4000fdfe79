import pytest

from charp_autos.coeffs import Coeff
from charp_autos.errors import BadH, BadParameters, UnsupportedP
from charp_autos.criteria import non_exponentiality_certificate
from charp_autos.endo import PolyMap, compose, order_up_to
from charp_autos.gallery import (C0Template, build_example_triangular,
                                 build_F_and_Fh, build_nonexp_family,
                                 build_rank3_family, build_rank_r_action,
                                 epsilon_invariants)
from charp_autos.poly import VarTable, is_polynomial_over
from charp_autos.seeds import Lcg


@pytest.mark.parametrize("p", [2, 3, 5])
def test_triangular_example_reports(p):
    ex = build_example_triangular(p)
    assert ex.report.all_ok(), ex.report.to_text()
    t = ex.action.table
    u = Coeff.u(p)
    # frozen shape of E(x2): x2 - x1^p T - u^(p-1) x1 T^p - u^p T^(p+1)
    expected = (t.var("x2") - t.monomial(1, x1=p, T=1)
                - t.monomial(u ** (p - 1), x1=1, T=p)
                - t.monomial(u ** p, T=p + 1))
    assert ex.action.images[1] == expected
    assert order_up_to(ex.action.evaluate(1), p) == p


def test_triangular_example_rejects_bad_p():
    with pytest.raises(UnsupportedP):
        build_example_triangular(7)


def test_nonexp_constants():
    fam, _ = build_nonexp_family(2, 3, 1)
    assert (fam.a, fam.b, fam.c) == (2, 7, 8)
    fam, _ = build_nonexp_family(3, 2, 1)
    assert (fam.a, fam.b, fam.c) == (5, 5, 21)
    fam, _ = build_nonexp_family(3, 4, 2)
    assert (fam.a, fam.b, fam.c) == (13, 13, 57)
    with pytest.raises(BadParameters):
        build_nonexp_family(2, 4, 1)    # p | d
    with pytest.raises(BadParameters):
        build_nonexp_family(3, 1, 0)    # d < 2


@pytest.mark.parametrize("p,d,l", [(2, 3, 1), (3, 2, 1), (3, 4, 2)])
def test_nonexp_star_reports(p, d, l):
    fam, report = build_nonexp_family(p, d, l)
    assert report.all_ok(), report.to_text()
    assert fam.slice_axioms() == {"A1": True, "A2": True, "witness": None}


def test_nonexp_dual_route_small_parameters():
    # at (2,3,1) the action is materializable: the truncated-arithmetic
    # verdicts must agree with the explicit images
    fam, report = build_nonexp_family(2, 3, 1)
    action = fam.materialize_action()
    names = list(action.table.names)
    assert action.images[names.index("y")] == fam.e_y()
    assert action.images[names.index("z1")] == action.table.var("z1")
    e_x = action.images[names.index("x")]
    nonintegral = action.table.zero()
    for exps, coeff in e_x.terms.items():
        if not coeff.is_integral():
            from charp_autos.poly import MultiPoly
            nonintegral = nonintegral + MultiPoly(action.table, {exps: coeff})
    shift = fam.nonintegral_shift()
    assert nonintegral == shift
    ok, witness = action.restricts_to("R")
    assert not ok and witness[0] == "x"
    # sigma restricts: evaluate at 1 and check every image
    sigma = action.evaluate(1)
    assert all(is_polynomial_over(g, "R")[0] for g in sigma.images)


def test_nonexp_certificate_round_trip():
    for (p, d, l) in [(2, 3, 1), (3, 2, 1)]:
        fam, report = build_nonexp_family(p, d, l)
        cert = non_exponentiality_certificate(
            fam.data(), restriction=(False, fam.restriction_witness()))
        assert cert.verdict == "NotExponentialOverR"
        assert cert.stability.pattern == "every-variable-monomial"
    # direct route at the small parameters agrees
    fam, _ = build_nonexp_family(2, 3, 1)
    cert = non_exponentiality_certificate(fam.data())
    assert cert.verdict == "NotExponentialOverR"


def test_nonexp_sigma_is_order_p_structurally():
    fam, _ = build_nonexp_family(2, 3, 1)
    action = fam.materialize_action()
    sigma = action.evaluate(1)
    # sigma moves xt by the nonzero translation, so sigma != id; order
    # divides p because sigma = E_1 of an action
    assert sigma.apply(fam.xt) == fam.xt + fam.translation
    assert not fam.translation.is_zero()


def test_refuses_materializing_large_family():
    fam, _ = build_nonexp_family(3, 4, 2)
    with pytest.raises(BadParameters):
        fam.materialize_action()


@pytest.mark.parametrize("p", [2, 3])
@pytest.mark.parametrize("n,r", [(3, 2), (4, 2), (4, 3)])
def test_rank_r_reports(n, r, p):
    built = build_rank_r_action(n, r, p)
    assert built.report.all_ok(), built.report.to_text()
    # generator at xn = 0: sum of x_j^p plus x_r^(p^2)
    t = built.table
    img = (t.var(t.names[-1]) * built.fs[1]).substitute(
        {t.names[-1]: t.const(0)})
    expected = t.var(t.names[r - 1], p * p)
    assert img == expected


def test_rank_r_bad_parameters():
    with pytest.raises(BadParameters):
        build_rank_r_action(3, 3, 2)
    with pytest.raises(BadParameters):
        build_rank_r_action(4, 2, 5)


@pytest.mark.parametrize("p", [2, 3])
def test_rank3_classification_table(p):
    expected = {
        (1, 1): "ActionRestricts", (1, 2): "ActionRestricts",
        (2, 1): "ActionRestricts", (2, 2): "ActionRestricts",
        (1, 0): "OnlyE1Restricts",
        (0, 0): "Neither", (0, 1): "Neither", (0, 2): "Neither",
        (2, 0): "Neither",
    }
    for (l, m), want in sorted(expected.items()):
        fam = build_rank3_family(p, l, m)
        assert fam.classification == want, (p, l, m)
        assert fam.report.all_ok(), fam.report.to_text()


def test_rank3_certified_identities_char2():
    p = 2
    fam = build_rank3_family(p, 1, 1)
    t = fam.table
    # xi = g x2 exactly
    assert fam.xi == fam.g * t.var("x2")
    # slice relation on the computable images
    lam = fam.f * fam.g * t.var("T")
    assert fam.f * fam.e1 + fam.e2 == fam.r_elt + lam
    # rescale consistency: (l,m) images are the (1,1) images at scaled T
    fam22 = build_rank3_family(p, 2, 2)
    scale = fam.f * fam.g
    scaled_T = {"T": scale * t.var("T")}
    assert fam22.e2 == fam.e2.substitute(scaled_T)
    assert fam22.e1 == fam.e1.substitute(scaled_T)


def test_F_family_and_commutator():
    for p in (2, 3):
        t = VarTable(p, ("x1", "x2", "x3", "x4"))
        hs = [t.zero(), t.var("x4"), t.var("x1"),
              t.var("x3") * t.var("x1") + t.one()]
        fam = build_F_and_Fh(4, p, hs)
        assert fam.report.all_ok(), fam.report.to_text()
        # F_0 is the identity and F_1 has order p
        assert fam.action.evaluate(fam.table.zero()).is_identity()
        assert order_up_to(fam.action.evaluate(1), p) == p
        # F_{x4} matches the displayed formula
        f_x4 = fam.action.evaluate(fam.table.var("x4"))
        t2 = fam.table
        formula = PolyMap(t2, [
            t2.var("x1") + t2.var("x3") * t2.var("x4"),
            t2.var("x2") - t2.var("x4")
            + t2.monomial(1, x3=p - 1) * t2.var("x4") ** p,
            t2.var("x3"), t2.var("x4")])
        assert f_x4 == formula


def test_F_family_rejects_bad_h():
    t = VarTable(2, ("x1", "x2", "x3"))
    with pytest.raises(BadH):
        build_F_and_Fh(3, 2, [t.var("x2")])
    with pytest.raises(BadParameters):
        build_F_and_Fh(2, 2)


def test_epsilon_invariants_and_c0():
    table, gens = epsilon_invariants(2, 2)
    assert gens[0] == table.parse("x1^2 + x1")
    assert gens[1] == table.var("x2")
    shift = {"x1": table.parse("x1 + 1")}
    assert table.var("x1").substitute(shift) != table.var("x1")
    lcg = Lcg(8)
    tpl = C0Template(3, 3)
    for _ in range(12):
        t, gmap = tpl.sample(lcg.draw)
        eps = PolyMap(t, [t.parse("x1+1"), t.var("x2"), t.var("x3")])
        assert compose(gmap, eps) == compose(eps, gmap)
