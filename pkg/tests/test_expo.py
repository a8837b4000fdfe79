import pytest

from charp_autos.coeffs import Coeff
from charp_autos.errors import (BadThetaSupport, NonUnitTranslation, NotOrderP,
                                NotTriangular, UnsupportedField)
from charp_autos.endo import PolyMap, conjugate, order_up_to
from charp_autos.expo import (exponentialize_field_n3,
                              exponentialize_triangular_n2,
                              maubach_conjugator, sigma_from_theta, theta_of)
from charp_autos.poly import VarTable, is_polynomial_over
from charp_autos.seeds import Lcg


def t2(p):
    return VarTable(p, ("x1", "x2"))


def test_maubach_already_elementary():
    t = t2(3)
    sigma = PolyMap(t, [t.parse("x1+1"), t.var("x2")])
    assert maubach_conjugator(sigma).is_identity()


def test_maubach_worked_example():
    t = t2(2)
    sigma = PolyMap(t, [t.parse("x1+1"), t.parse("x2+x1^2+x1+1")])
    phi = maubach_conjugator(sigma)
    assert phi == PolyMap(t, [t.var("x1"), t.parse("x2+x1^3+1")])
    # f2 is fixed by sigma
    assert sigma.apply(phi.images[1]) == phi.images[1]


@pytest.mark.parametrize("p", [2, 3, 5])
def test_maubach_randomized(p):
    t = VarTable(p, ("x1", "x2", "x3"))
    lcg = Lcg(100 + p)
    for _ in range(6):
        imgs = [t.var("x1")]
        for i in range(1, 3):
            extra = t.zero()
            for _ in range(1 + lcg.draw(2)):
                mono = {t.names[j]: lcg.draw(3) for j in range(i)}
                extra = extra + t.monomial(lcg.draw_nonzero(p), **mono)
            imgs.append(t.var(t.names[i]) + extra)
        psi = PolyMap(t, imgs)
        a = Coeff.from_int(p, 1 + lcg.draw(p - 1))
        translation = PolyMap(t, [t.var("x1") + t.const(a),
                                  t.var("x2"), t.var("x3")])
        sigma = conjugate(translation, psi)
        phi = maubach_conjugator(sigma)
        assert conjugate(translation, phi) == sigma
        # averaging invariance: the images are sigma-fixed and x_i + lower
        for i in (1, 2):
            f_i = phi.images[i]
            assert sigma.apply(f_i) == f_i
            diff = f_i - t.var(t.names[i])
            for name in t.names[i:]:
                assert not diff.uses_var(name)


def test_maubach_unit_discipline():
    t = t2(2)
    u = Coeff.u(2)
    sigma = sigma_from_theta(u, t.parse("x1^3"))
    with pytest.raises(NonUnitTranslation):
        maubach_conjugator(sigma)          # u is not a unit of F_2[u]
    phi = maubach_conjugator(sigma, units="field")
    translation = PolyMap(t, [t.var("x1") + t.const(u), t.var("x2")])
    assert conjugate(translation, phi) == sigma


def test_exponentialize_worked_example():
    p = 2
    t = t2(p)
    u = Coeff.u(p)
    sigma = sigma_from_theta(u, t.parse("x1^3"))
    assert sigma == PolyMap(t, [t.parse("x1+u"),
                                t.parse("x2+x1^2+u*x1+u^2")])
    res = exponentialize_triangular_n2(sigma)
    assert res.action.images[0] == t.parse("x1 + u*T")
    assert res.action.images[1] == t.parse("x2 + x1^2*T + u*x1*T^2 + u^2*T^3")
    assert res.action.evaluate(1) == sigma
    assert res.action.restricts_to("R")[0]
    assert res.a == u


def test_exponentialize_one_variable_delegation():
    t = t2(3)
    sigma = PolyMap(t, [t.var("x1"), t.parse("x2 + x1^2 + 1")])
    res = exponentialize_triangular_n2(sigma)
    assert res.action.images[1] == t.parse("x2 + (x1^2 + 1)*T")
    assert res.action.evaluate(1) == sigma


def test_exponentialize_errors():
    t = t2(2)
    with pytest.raises(NotOrderP):
        exponentialize_triangular_n2(PolyMap.identity(t))
    with pytest.raises(NotTriangular):
        exponentialize_triangular_n2(PolyMap(t, [t.var("x2"), t.var("x1")]))


def test_sigma_from_theta_validation():
    p = 3
    t = t2(p)
    u = Coeff.u(p)
    assert sigma_from_theta(u, t.zero()) == PolyMap(
        t, [t.parse("x1+u"), t.var("x2")])
    with pytest.raises(BadThetaSupport):
        sigma_from_theta(u, t.var("x1", p))
    with pytest.raises(BadThetaSupport):
        sigma_from_theta(u, t.var("x1").scale(u.inv()))
    sig = sigma_from_theta(u, t.var("x1"))
    assert sig.images[1] == t.parse("x2 - 1")
    assert order_up_to(sig, p) == p


def test_theta_round_trip():
    for p in (2, 3):
        t = t2(p)
        u = Coeff.u(p)
        lcg = Lcg(600 + p)
        for _ in range(25):
            theta = t.zero()
            for i in range(1, 9):
                if i % p and lcg.draw(2):
                    theta = theta + t.monomial(
                        Coeff.from_u_coeffs(p, [lcg.draw(p) for _ in range(3)]),
                        x1=i)
            if theta.is_zero():
                theta = t.var("x1")
            a = (u, u * u, u + 1)[lcg.draw(3)]
            sigma = sigma_from_theta(a, theta)
            a2, theta2 = theta_of(sigma)
            assert a2 == a and theta2 == theta


def test_proof_step_coefficient_integrality():
    # in the reduced f every coefficient times a lands in R
    p = 3
    t = t2(p)
    u = Coeff.u(p)
    sigma = sigma_from_theta(u * u, t.parse("x1^4 + u*x1^2 + x1"))
    res = exponentialize_triangular_n2(sigma)
    for coeff in res.reduced_f.terms.values():
        assert (coeff * res.a).is_integral()
    # the invariant coordinate is genuinely invariant
    inv = t.var("x2") + res.reduced_f
    assert res.action.is_invariant(inv)


def test_field_n3_direct_case():
    t = VarTable(2, ("x1", "x2", "x3"))
    sigma = PolyMap(t, [t.parse("x1+1"), t.var("x2"), t.parse("x3+x2^2")])
    res = exponentialize_field_n3(sigma)
    assert res.action.evaluate(1) == sigma
    assert res.action.restricts_to("R")[0]


def test_field_n3_delegated_case():
    # sigma fixing x1 delegates through F_p[x1] with x1 renamed to u
    t = VarTable(5, ("x1", "x2", "x3"))
    sigma = PolyMap(t, [t.var("x1"), t.parse("x2+1"),
                        t.parse("x3+x2^2*(x1^2+1)")])
    assert order_up_to(sigma, 5) == 5
    res = exponentialize_field_n3(sigma)
    assert res.action.evaluate(1) == sigma
    assert res.action.restricts_to("R")[0]
    for img in res.action.images:
        assert is_polynomial_over(img, "R")[0]


def test_field_n3_both_fixed_case():
    t = VarTable(2, ("x1", "x2", "x3"))
    sigma = PolyMap(t, [t.var("x1"), t.var("x2"),
                        t.parse("x3 + x1*x2 + 1")])
    res = exponentialize_field_n3(sigma)
    assert res.action.evaluate(1) == sigma


def test_field_n3_rejects_parameters():
    t = VarTable(2, ("x1", "x2", "x3"))
    sigma = PolyMap(t, [t.var("x1"), t.var("x2"),
                        t.var("x3") + t.const(Coeff.u(2))])
    with pytest.raises(UnsupportedField):
        exponentialize_field_n3(sigma)
    with pytest.raises(NotTriangular):
        exponentialize_field_n3(PolyMap(
            t, [t.var("x2"), t.var("x1"), t.var("x3")]))
