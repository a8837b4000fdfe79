"""Constructive exponentialization of triangular order-p automorphisms.

The conjugator of Maubach's lemma is built by Artin-Schreier averaging: with
w := a^-1 x1, the images f_i := -sum_{j=0}^{p-1} (w+j)^{p-1} sigma^j(x_i)
are sigma-invariant (reindex the residue sum) and congruent to x_i modulo
lower variables (sum_{c in F_p} (w+c)^{p-1} = -1), so (x1, f2,..,fn) is a
strict triangular coordinate change conjugating the translation to sigma.
Correctness is verified by composition afterwards, so the construction is
safe even if it differs from the original one.
"""

from dataclasses import dataclass

from .coeffs import Coeff
from .errors import (BadThetaSupport, InternalIntegralityFailure, NotOrderP,
                     NotTriangular, NonUnitTranslation, UnsupportedField)
from .poly import MultiPoly, VarTable, express_in_invariant
from .endo import PolyMap, classify, compose, conjugate, order_up_to
from .gaction import GaAction, SliceData, slice_action


@dataclass
class ExponentializationResult:
    action: GaAction
    conjugator: PolyMap
    reduced_f: MultiPoly
    a: Coeff


def _translation_constant(sigma):
    """sigma(x1) - x1, which strict triangularity puts in the coefficient ring."""
    table = sigma.table
    diff = sigma.images[0] - table.var(table.names[0])
    if not diff.is_constant():
        raise NotTriangular("sigma(x1) - x1 = %s is not a constant" % diff)
    return diff.constant_term()


def maubach_conjugator(sigma, units="base"):
    """phi = (x1, f2,..,fn) with conjugate((x1+a, x2,..), phi) = sigma.

    units selects what counts as a unit for a = sigma(x1)-x1: "base" demands
    a in F_p* (a unit of F_p[u]); "field" accepts any nonzero constant, for
    callers that have already extended scalars to R_a.
    """
    table = sigma.table
    p = table.p
    if order_up_to(sigma, p) != p:
        raise NotOrderP("automorphism does not have order %d" % p)
    if "strict_triangular" not in classify(sigma):
        raise NotTriangular("conjugator needs a strict triangular input")
    a = _translation_constant(sigma)
    if a.is_zero():
        raise NonUnitTranslation("sigma fixes x1")
    if units == "base" and not (a.is_integral() and a.is_constant()):
        raise NonUnitTranslation("translation %s is not a unit of F_p[u]" % a)

    w = table.var(table.names[0]).scale(a.inv())
    powers = []
    sigma_j = PolyMap.identity(table)
    for j in range(p):
        powers.append(((w + table.const(j)) ** (p - 1), sigma_j))
        sigma_j = compose(sigma, sigma_j)
    images = [table.var(table.names[0])]
    for i in range(1, table.nvars):
        acc = table.zero()
        for weight, sj in powers:
            acc = acc + weight * sj.images[i]
        images.append(-acc)
    phi = PolyMap(table, images)

    translation = PolyMap(
        table, [table.var(table.names[0]) + table.const(a)]
        + [table.var(n) for n in table.names[1:]])
    if conjugate(translation, phi) != sigma:
        raise InternalIntegralityFailure("averaging produced a bad conjugator")
    return phi


def exponentialize_triangular_n2(sigma):
    """Theorem: a triangular order-p automorphism of R[x1,x2], R = F_p[u],
    is E_1 of a G_a-action over R.  Returns the action together with the
    conjugator data."""
    table = sigma.table
    p = table.p
    if table.nvars != 2:
        raise ValueError("this construction is for n = 2")
    if order_up_to(sigma, p) != p:
        raise NotOrderP("automorphism does not have order %d" % p)
    flags = classify(sigma)
    if "triangular" not in flags:
        raise NotTriangular("input is not triangular")
    x1, x2 = table.names

    a = _translation_constant(sigma)
    if a.is_zero():
        # one-variable case: sigma = (x1, x2 + b(x1)) is elementary
        b = sigma.images[1] - table.var(x2)
        if b.uses_var(x2):
            raise NotTriangular("unexpected x2 dependence for a fixed x1")
        action = GaAction(table, [table.var(x1),
                                  table.var(x2) + b * table.var("T")], base="R")
        return ExponentializationResult(action, PolyMap.identity(table), b,
                                        Coeff.from_int(p, 0))

    phi = maubach_conjugator(sigma, units="field")
    f = phi.images[1] - table.var(x2)
    _, f_red = express_in_invariant(f, x1, a, mode="split")
    for _, c in f_red.terms.items():
        if not (c * a).is_integral():
            raise InternalIntegralityFailure(
                "coefficient %s * a escapes F_p[u]" % c)
    coords = PolyMap(table, [table.var(x1), table.var(x2) + f_red])
    action = slice_action(SliceData(coords, table.var("T").scale(a)), base="R")
    if action.evaluate(1) != sigma:
        raise InternalIntegralityFailure("E_1 differs from sigma")
    ok, witness = action.restricts_to("R")
    if not ok:
        raise InternalIntegralityFailure("action escapes R: %s" % (witness,))
    return ExponentializationResult(action, coords, f_red, a)


def theta_of(sigma):
    """(a, theta) with sigma = (x1+a, x2 + a^-1(theta(x1) - theta(x1+a))),
    theta supported on exponents prime to p."""
    table = sigma.table
    result = exponentialize_triangular_n2(sigma)
    if result.a.is_zero():
        raise NonUnitTranslation("theta needs sigma(x1) != x1")
    theta = result.reduced_f.scale(result.a)
    for c in theta.terms.values():
        if not c.is_integral():
            raise InternalIntegralityFailure("theta coefficient %s not in R" % c)
    check = sigma_from_theta(result.a, theta)
    if check != sigma:
        raise InternalIntegralityFailure("theta does not reproduce sigma")
    return result.a, theta


def sigma_from_theta(a, theta):
    """(x1+a, x2 + a^-1(theta(x1) - theta(x1+a))) for theta in sum_{p∤i} R x1^i."""
    table = theta.table
    p = table.p
    if a.is_zero():
        raise ValueError("a must be nonzero")
    if not a.is_integral():
        raise ValueError("a must lie in R = F_p[u]")
    x1 = table.names[0]
    x2 = table.names[1]
    for e, c in theta.terms.items():
        i = e[table.index[x1]]
        if sum(e) != i or i % p == 0:
            raise BadThetaSupport("theta term %s outside sum_{p∤i} R x1^i"
                                  % MultiPoly(table, {e: c}))
        if not c.is_integral():
            raise BadThetaSupport("theta coefficient %s not in R" % c)
    shifted = theta.substitute({x1: table.var(x1) + table.const(a)})
    second = table.var(x2) + (theta - shifted).scale(a.inv())
    sigma = PolyMap(table, [table.var(x1) + table.const(a), second])
    for g in sigma.images:
        for c in g.terms.values():
            if not c.is_integral():
                raise InternalIntegralityFailure("sigma image escapes R")
    return sigma


def exponentialize_field_n3(sigma):
    """Triangular order-p automorphisms of F_p[x1,x2,x3] are exponential.

    sigma(x1) != x1 goes through the conjugator; sigma(x1) = x1 renames x1 to
    the parameter u and delegates to the n = 2 construction over F_p[u].
    Only k = F_p is supported, because the delegation consumes the single
    parameter slot.
    """
    table = sigma.table
    p = table.p
    if table.nvars != 3:
        raise ValueError("this construction is for n = 3")
    for g in sigma.images:
        for c in g.terms.values():
            if not c.is_constant():
                raise UnsupportedField("coefficients must lie in F_p")
    if order_up_to(sigma, p) != p:
        raise NotOrderP("automorphism does not have order %d" % p)
    if "triangular" not in classify(sigma):
        raise NotTriangular("input is not triangular")
    x1, x2, x3 = table.names

    a = _translation_constant(sigma)
    if not a.is_zero():
        phi = maubach_conjugator(sigma, units="field")
        action = slice_action(SliceData(phi, table.var("T").scale(a)), base="R")
        if action.evaluate(1) != sigma:
            raise InternalIntegralityFailure("E_1 differs from sigma")
        return ExponentializationResult(action, phi, phi.images[1], a)

    if sigma.images[1] == table.var(x2):
        # both x1 and x2 fixed: sigma is elementary in x3 directly
        b = sigma.images[2] - table.var(x3)
        action = GaAction(table, [table.var(x1), table.var(x2),
                                  table.var(x3) + b * table.var("T")], base="R")
        return ExponentializationResult(action, PolyMap.identity(table), b,
                                        Coeff.from_int(p, 0))

    # rename x1 -> u, run the n = 2 construction over F_p[u], rename back
    small = VarTable(p, (x2, x3))
    idx1 = table.index[x1]

    def promote(f):
        out = small.zero()
        for e, c in f.terms.items():
            coeff = c * Coeff.u(p) ** e[idx1]
            mono = small.monomial(coeff, **{x2: e[table.index[x2]],
                                            x3: e[table.index[x3]],
                                            "T": e[table.index["T"]]})
            out = out + mono
        return out

    def demote(f):
        out = table.zero()
        for e, c in f.terms.items():
            if not c.is_integral():
                raise InternalIntegralityFailure("delegated image escapes R")
            for k, n in enumerate(c.num):
                if n:
                    out = out + table.monomial(
                        Coeff.from_int(p, n),
                        **{x1: k, x2: e[small.index[x2]],
                           x3: e[small.index[x3]], "T": e[small.index["T"]]})
        return out

    sub_sigma = PolyMap(small, [promote(sigma.images[1]), promote(sigma.images[2])])
    sub = exponentialize_triangular_n2(sub_sigma)
    images = [table.var(x1)] + [demote(e) for e in sub.action.images]
    action = GaAction(table, images, base="R")
    if action.evaluate(1) != sigma:
        raise InternalIntegralityFailure("E_1 differs from sigma")
    conj = PolyMap(table, [table.var(x1)] + [demote(g) for g in sub.conjugator.images])
    return ExponentializationResult(action, conj, demote(sub.reduced_f), sub.a)
