"""Non-exponentiality machinery: f-stability patterns, the canonical
generic-elementary action, the certificate, action modification and the
Gauss-lemma harness.

f_stability is a pattern recognizer, not a decision procedure: it certifies
stability only through the two patterns with a known proof (a monomial plus
constant touching every variable of A, and a nonconstant univariate), and
instability only for nonzero constants, where the explicit counter-action
with invariant y + x^p - f^(p-1) x exists.  Everything else is Unknown.
"""

from dataclasses import dataclass

from .coeffs import Coeff, coeff_gcd_integral
from .errors import (InconsistentSlice, NotInvariantParameter,
                     PreconditionViolated)
from .poly import MultiPoly, content_primitive
from .endo import PolyMap
from .gaction import SliceData, slice_action


@dataclass
class StabilityVerdict:
    kind: str          # "Stable" | "NotStable" | "Unknown"
    pattern: str = ""
    detail: str = ""

    def is_stable(self):
        return self.kind == "Stable"


@dataclass
class GenericElementaryData:
    """Coordinates (y1,..,yn) of k[x], their inverse, and the translation
    f expressed in the variables standing for y2,..,yn.

    f_expr lives on the ambient table with slot i standing for y_{i+1}; the
    slot of y1 must be unused.  avar_names lists the y-variables of A in
    slot order (used by the stability patterns).
    """
    coords: PolyMap
    coords_inverse: PolyMap
    f_expr: MultiPoly
    avar_names: tuple

    def __post_init__(self):
        table = self.coords.table
        first = table.names[0]
        if self.f_expr.is_zero():
            raise ValueError("the translation f must be nonzero")
        if self.f_expr.uses_var(first):
            raise ValueError("f may not involve the moved coordinate")

    @property
    def table(self):
        return self.coords.table

    def ambient_f(self):
        images = dict(zip(self.table.names, self.coords.images))
        return self.f_expr.substitute(images)

    def sigma_restricts(self):
        """Whether the induced automorphism (the slice evaluated at 1) maps
        R[x] into R[x].  Materializes the action: only for data whose images
        stay small; the translation families verify this by congruences."""
        from .poly import is_polynomial_over
        sigma = canonical_action(self).evaluate(1)
        return all(is_polynomial_over(g, "R")[0] for g in sigma.images)


def f_stability(avar_names, f):
    """Stability of A = k[avar_names] for the translation by f.

    Unit factors from k* are immaterial (A[ux] = A[x]), so patterns are
    matched on the terms of f directly.
    """
    avar_names = tuple(avar_names)
    if f.is_zero():
        raise ValueError("f must be nonzero")
    table = f.table
    for name in table.names:
        if name not in avar_names and f.uses_var(name):
            raise ValueError("f involves %s outside A" % name)

    if f.is_constant():
        if avar_names:
            return StabilityVerdict(
                "NotStable", pattern="constant-translation",
                detail="counter-action translates x by f with invariant "
                       "y + x^p - f^(p-1) x in place of y")
        return StabilityVerdict("Unknown", detail="A has no variables")

    if len(avar_names) == 1:
        return StabilityVerdict("Stable", pattern="univariate",
                                detail="A = k[y] and f is not constant")

    terms = list(f.terms.items())
    nonconst = [(e, c) for e, c in terms if sum(abs(x) for x in e)]
    if len(terms) - len(nonconst) <= 1 and len(nonconst) == 1:
        exp, _ = nonconst[0]
        touches_all = all(exp[table.index[name]] >= 1 for name in avar_names)
        others_zero = all(
            exp[i] == 0 for i, name in enumerate(table.all_names)
            if name not in avar_names)
        if touches_all and others_zero:
            return StabilityVerdict(
                "Stable", pattern="every-variable-monomial",
                detail="f = alpha + beta*m with m touching every variable of A")
    return StabilityVerdict("Unknown")


def a_rigid_counter_action(table, f):
    """The explicit action showing k[y] is not f-stable for constant f:
    E(x) = x + fT with invariant generator y + x^p - f^(p-1) x.

    Uses the first two variables of the table as (x, y).  Returns the action
    and the invariant generator.
    """
    f = table.coeff(f)
    if f.is_zero():
        raise ValueError("f must be a nonzero constant")
    p = table.p
    x, y = table.names[0], table.names[1]
    gen = table.var(y) + table.var(x, p) - table.var(x).scale(f ** (p - 1))
    coords = PolyMap(table, [table.var(x), gen]
                     + [table.var(n) for n in table.names[2:]])
    action = slice_action(SliceData(coords, table.var("T").scale(f)))
    return action, gen


def canonical_action(data, base="field"):
    """The slice action h(y1) -> h(y1 + fT) fixing y2,..,yn.

    The coaction axioms are verified on the slice generator system, where
    they reduce to lam(0) = 0, additivity and coefficient invariance; the
    x-generator form of the check needs powers of the image of y1 that do
    not fit in memory for the translation families.
    """
    from .gaction import slice_axioms_report
    lam = data.ambient_f() * data.table.var("T")
    sd = SliceData(data.coords, lam, data.coords_inverse)
    report = slice_axioms_report(sd, {1: data.f_expr})
    if not (report["A1"] and report["A2"]):
        raise InconsistentSlice("slice axioms fail: %s" % report)
    return slice_action(sd, base=base, check=False)


@dataclass
class CertificateResult:
    verdict: str                 # "NotExponentialOverR" | "Inconclusive"
    stability: StabilityVerdict = None
    reason: str = ""
    witness: tuple = None        # (generator name, (exponents, coeff))


def non_exponentiality_certificate(data, restriction=None):
    """Corollary-style certificate: NotExponentialOverR iff A is f-stable
    (by a recognized pattern) and the canonical action does not restrict to
    R[x].  restriction may carry a precomputed (ok, witness) pair for
    families whose restriction test was done by an exact structure-specific
    argument; otherwise the canonical action is materialized and tested.
    """
    verdict = f_stability(data.avar_names, data.f_expr)
    if verdict.kind == "Unknown":
        return CertificateResult("Inconclusive", stability=verdict,
                                 reason="stability unknown")
    if verdict.kind == "NotStable":
        return CertificateResult("Inconclusive", stability=verdict,
                                 reason="A is not f-stable")
    if restriction is None:
        action = canonical_action(data)
        restriction = action.restricts_to("R")
    ok, witness = restriction
    if ok:
        return CertificateResult("Inconclusive", stability=verdict,
                                 reason="restricts")
    # soundness guard: the offending coefficient must genuinely escape F_p[u]
    if witness is None or witness[1][1].is_integral():
        raise PreconditionViolated("restriction witness %s is integral"
                                   % (witness,))
    return CertificateResult("NotExponentialOverR", stability=verdict,
                             witness=witness)


def _fractional_primitive(lam):
    """Primitive part of lam over F_p[u], allowing fractional coefficients:
    denominators are cleared before taking the content."""
    dens = []
    p = lam.table.p
    for c in lam.terms.values():
        dens.append(Coeff(p, c.den))
    d = dens[0]
    for extra in dens[1:]:
        g = coeff_gcd_integral([d, extra])
        d = d * extra / g
    cleared = lam.scale(d)
    content, primitive = content_primitive(cleared)
    return content / d, primitive


def modify_action(action, slice_data, alpha, primitive=False):
    """Replace the slice translation lam(T) by the constant translation
    lam(alpha)*T (primitive=False) or lam0(alpha)*T where lam0 is the
    primitive part of lam (primitive=True)."""
    table = action.table
    lam = slice_data.lam
    r = slice_data.coords.images[0]
    if action.apply(r) - r != lam:
        raise InconsistentSlice("E(r) - r differs from lam")
    if isinstance(alpha, (int, Coeff)):
        alpha = table.const(alpha)
    if not action.is_invariant(alpha):
        raise NotInvariantParameter("alpha is not invariant")
    if primitive:
        _, lam0 = _fractional_primitive(lam)
        translation = lam0.subs_T(alpha)
    else:
        translation = lam.subs_T(alpha)
    new_lam = translation * table.var("T")
    return slice_action(
        SliceData(slice_data.coords, new_lam, slice_data.coords_inverse),
        base=action.base)


def gauss_check(f, g):
    """Primitivity of f(g(T)) for primitive f, g with g(0) = 0; the lemma
    says this must hold, and the harness asserts it."""
    table = f.table
    for h in (f, g):
        if h.is_zero():
            raise PreconditionViolated("operands must be nonzero")
        for name in table.names:
            if h.uses_var(name):
                raise PreconditionViolated("operands must be univariate in T")
        content, _ = content_primitive(h)
        if not content.is_one():
            raise PreconditionViolated("operand with content %s" % content)
    if not g.subs_T(table.const(0)).is_zero():
        raise PreconditionViolated("g(0) must vanish")
    composed = f.substitute({"T": g})
    content, _ = content_primitive(composed)
    return content.is_one()
