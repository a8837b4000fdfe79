"""G_a-actions as coactions B -> B[T].

A GaAction stores the generator images e_i in B[T].  Construction verifies
(A1): substituting T = 0 gives back the generators, and (A2): for every i,
e_i under T -> T1+T2 equals e_i(T2) with the generators replaced by their
T1-images.  Checking (A2) on generators suffices because both sides are ring
homomorphisms.
"""

from dataclasses import dataclass

from .coeffs import Coeff
from .errors import (AdditivityViolation, AxiomViolation,
                     NotInvariantGenerator, NotInvariantParameter)
from .poly import MultiPoly, is_polynomial_over, linear_span_dim
from .endo import PolyMap, compose, invert_structured


def check_axioms(table, images):
    """Report {"A1": bool, "A2": bool, "witness": name-or-None}."""
    images = list(images)
    zero = table.const(0)
    for name, e in zip(table.names, images):
        if e.subs_T(zero) != table.var(name):
            return {"A1": False, "A2": False, "witness": name}
    t1 = table.var("T1")
    t2 = table.var("T2")
    at_t1 = {n: e.substitute({"T": t1}) for n, e in zip(table.names, images)}
    for name, e in zip(table.names, images):
        lhs = e.substitute({"T": t1 + t2})
        rhs = e.substitute({"T": t2}).substitute(at_t1)
        if lhs != rhs:
            return {"A1": True, "A2": False, "witness": name}
    return {"A1": True, "A2": True, "witness": None}


class GaAction:
    __slots__ = ("table", "images", "base")

    def __init__(self, table, images, base="field", _checked=False):
        images = tuple(images)
        if len(images) != table.nvars:
            raise ValueError("expected %d images" % table.nvars)
        for g in images:
            if isinstance(g, (int, Coeff)):
                raise ValueError("action images must be polynomials")
            if g.uses_var("T1") or g.uses_var("T2"):
                raise ValueError("scratch parameters may not appear in images")
        self.table = table
        self.images = images
        self.base = base
        if not _checked:
            report = check_axioms(table, images)
            if not (report["A1"] and report["A2"]):
                raise AxiomViolation("axiom %s fails at generator %s" % (
                    "A1" if not report["A1"] else "A2", report["witness"]))

    def assignment(self):
        return dict(zip(self.table.names, self.images))

    def apply(self, f):
        """E(f) in B[T]."""
        return f.substitute(self.assignment())

    def is_invariant(self, h):
        if h.uses_var("T"):
            raise ValueError("invariants live in B, not B[T]")
        return self.apply(h) == h

    def evaluate(self, alpha):
        """The automorphism E_alpha for an invariant alpha; inverse is E_{-alpha}."""
        if isinstance(alpha, (int, Coeff)):
            alpha = self.table.const(alpha)
        if not self.is_invariant(alpha):
            raise NotInvariantParameter("parameter %s is not invariant" % alpha)
        return PolyMap(self.table, [e.subs_T(alpha) for e in self.images])

    def rescale(self, alpha):
        """Replace T by alpha*T; the result E' satisfies E'_1 = E_alpha."""
        if isinstance(alpha, (int, Coeff)):
            alpha = self.table.const(alpha)
        if alpha.is_zero():
            raise NotInvariantParameter("rescaling parameter must be nonzero")
        if not self.is_invariant(alpha):
            raise NotInvariantParameter("parameter %s is not invariant" % alpha)
        t = self.table.var("T")
        return GaAction(self.table,
                        [e.substitute({"T": alpha * t}) for e in self.images],
                        base=self.base)

    def restricts_to(self, ring="R", laurent=False, localizer=None):
        """(bool, witness): do all images lie in the requested subring of B[T]?"""
        for name, e in zip(self.table.names, self.images):
            ok, bad = is_polynomial_over(e, ring=ring, laurent=laurent,
                                         localizer=localizer)
            if not ok:
                return False, (name, bad)
        return True, None

    def __eq__(self, other):
        if not isinstance(other, GaAction):
            return NotImplemented
        return self.table == other.table and self.images == other.images

    def __str__(self):
        from .textio import action_to_str
        return action_to_str(self)

    __repr__ = __str__


def additivity_check(lam):
    """lam(T1+T2) = lam(T1) + lam(T2); in char p this means p-power
    T-exponents only and no T-free part.  Coefficients from B are allowed
    (slice translations) and are treated as scalars."""
    table = lam.table
    t1 = table.var("T1")
    t2 = table.var("T2")
    return (lam.substitute({"T": t1 + t2})
            == lam.substitute({"T": t1}) + lam.substitute({"T": t2}))


@dataclass
class SliceData:
    """A coordinate system (p1,..,pn) and an additive lam(T); the action fixes
    p2,..,pn and sends p1 to p1 + lam(T)."""
    coords: PolyMap
    lam: MultiPoly
    coords_inverse: PolyMap = None


def slice_action(data, base="field", check=True):
    """The action fixing p2,..,pn and translating p1 by lam, written on the
    x-generators through the inverse coordinates.

    check=False skips re-verifying (A1)/(A2) on the x-generators; callers may
    do so only when the axioms were established on the slice generator system
    (see slice_axioms_report), which generates the same ring.
    """
    lam = data.lam
    table = data.coords.table
    if not additivity_check(lam):
        raise AdditivityViolation("%s is not additive" % lam)
    inverse = data.coords_inverse
    if inverse is None:
        inverse = invert_structured(data.coords)
    else:
        if (not compose(data.coords, inverse).is_identity()
                or not compose(inverse, data.coords).is_identity()):
            raise ValueError("supplied inverse does not invert the coordinates")
    first = table.names[0]
    target = {name: img for name, img in zip(table.names, data.coords.images)}
    target[first] = target[first] + lam
    images = [q.substitute(target) for q in inverse.images]
    return GaAction(table, images, base=base, _checked=not check)


def slice_axioms_report(data, invariant_exprs):
    """(A1)/(A2) verified on the slice generator system (p1,..,pn).

    The axioms are properties of the coaction homomorphism, so any generating
    set works.  On the p-generators they reduce to lam(0) = 0, additivity of
    lam, and invariance of its coefficients; the latter holds whenever each
    coefficient is rebuilt from p2,..,pn, which the caller exhibits by
    passing expressions (slot i stands for p_{i+1}) whose substitution gives
    back the coefficients of lam.
    """
    table = data.coords.table
    lam = data.lam
    a1 = lam.subs_T(table.const(0)).is_zero()
    a2 = additivity_check(lam)
    rebuilt = table.zero()
    images = dict(zip(table.names, data.coords.images))
    for k, expr in invariant_exprs.items():
        if expr.uses_var(table.names[0]):
            return {"A1": a1, "A2": False, "witness": "coefficient uses p1"}
        rebuilt = rebuilt + expr.substitute(images) * table.var("T") ** k
    if rebuilt != lam:
        return {"A1": a1, "A2": False,
                "witness": "coefficients not generated by p2,..,pn"}
    return {"A1": a1, "A2": a2,
            "witness": None if (a1 and a2) else "lam"}


def rank_certificate(action, claimed_invariant_gens, coordinate_witness,
                     skip_invariance=False):
    """Bounds {rank_lower, rank_upper} for the rank of the action.

    rank_upper comes from coordinates inside the invariant ring (gamma >=
    witness size); rank_lower from gamma <= dim of the linear span of the
    claimed invariant generators.  skip_invariance is for constructions whose
    invariance was established structurally rather than via images.
    """
    gens = list(claimed_invariant_gens)
    witness = list(coordinate_witness)
    if action is not None and not skip_invariance:
        for g in gens:
            if not action.is_invariant(g):
                raise NotInvariantGenerator("generator %s is not invariant" % g)
        for w in witness:
            if not action.is_invariant(w):
                raise NotInvariantGenerator("witness %s is not invariant" % w)
    table = gens[0].table if gens else (witness[0].table if witness else None)
    for w in witness:
        if len(w.terms) != 1 or w.total_degree() != 1:
            raise NotInvariantGenerator("witness %s is not a coordinate" % w)
    n = table.nvars
    dim, _ = linear_span_dim(gens)
    return {"rank_lower": n - dim, "rank_upper": n - len(witness)}
