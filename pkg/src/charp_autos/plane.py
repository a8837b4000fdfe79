"""The plane n = 2 over a field: tame factorization and centralizers.

jvdk_factor peels a plane automorphism from the right: while some component
has degree >= the other's, the higher leading form must cancel against a
scalar multiple of a power of the lower one; the accumulated elementary
factors and the terminal affine map recompose to the input exactly.

centralizer_decompose follows the constructive proof of C(eps) = H(t)H0:
it repeatedly strips a leading H(t) generator determined by the first factor
of the amalgam normal form (three cases: affine with a != 0, affine with
a = 0, triangular) and terminates on an affine remainder, which splits into
one E1 generator and the trailing H0 element.
"""

from .errors import (NotAutomorphism, NotInCentralizer, NotInWst,
                     WitnessNotCentralizing)
from .poly import express_in_invariant
from .endo import PolyMap, compose, invert_structured
from .gaction import SliceData, slice_action


# ---------------------------------------------------------------------------
# word factors
# ---------------------------------------------------------------------------

class AffineFactor:
    """(a*x + b*y + u, c*x + d*y + v)."""

    __slots__ = ("table", "mat", "shift")

    def __init__(self, table, mat, shift):
        self.table = table
        self.mat = tuple(table.coeff(c) for c in mat)      # (a, b, c, d)
        self.shift = tuple(table.coeff(c) for c in shift)  # (u, v)

    @classmethod
    def from_map(cls, pmap):
        table = pmap.table
        x, y = table.names
        gx, gy = pmap.images
        mat = (gx.coeff_of(**{x: 1}), gx.coeff_of(**{y: 1}),
               gy.coeff_of(**{x: 1}), gy.coeff_of(**{y: 1}))
        shift = (gx.constant_term(), gy.constant_term())
        factor = cls(table, mat, shift)
        if factor.to_map() != pmap:
            raise NotAutomorphism("map %s is not affine" % pmap)
        return factor

    def to_map(self):
        table = self.table
        x, y = table.names
        a, b, c, d = self.mat
        u, v = self.shift
        return PolyMap(table, [
            table.var(x).scale(a) + table.var(y).scale(b) + table.const(u),
            table.var(x).scale(c) + table.var(y).scale(d) + table.const(v)])

    def det(self):
        a, b, c, d = self.mat
        return a * d - b * c

    def is_identity(self):
        return self.to_map().is_identity()

    def to_text(self):
        return "[aff: %s]" % ",".join(str(c) for c in self.mat + self.shift)


class TriangularFactor:
    """(a*x + c, b*y + q(x)) with a, b units; q is univariate in x."""

    __slots__ = ("table", "a", "b", "c", "q")

    def __init__(self, table, a, b, c, q):
        self.table = table
        self.a = table.coeff(a)
        self.b = table.coeff(b)
        self.c = table.coeff(c)
        self.q = q

    def to_map(self):
        table = self.table
        x, y = table.names
        return PolyMap(table, [
            table.var(x).scale(self.a) + table.const(self.c),
            table.var(y).scale(self.b) + self.q])

    def to_text(self):
        return "[tri: a=%s,b=%s,c=%s,q=%s]" % (self.a, self.b, self.c, self.q)


class TameWord:
    def __init__(self, table, factors):
        self.table = table
        self.factors = list(factors)

    def to_text(self):
        if not self.factors:
            return "[id]"
        return "".join(f.to_text() for f in self.factors)

    def __iter__(self):
        return iter(self.factors)

    def __len__(self):
        return len(self.factors)


def recompose(word):
    """Left-to-right product of the word's factors."""
    table = word.table
    out = PolyMap.identity(table)
    for f in word.factors:
        out = compose(out, f.to_map())
    if isinstance(word, CentralizerWord):
        out = compose(out, word.h0_map())
    return out


# ---------------------------------------------------------------------------
# Jung-van der Kulk factorization
# ---------------------------------------------------------------------------

def _is_affine(pmap):
    return all(g.total_degree() == 1 for g in pmap.images)


def jvdk_factor(phi):
    """TameWord of alternating affine/triangular factors with
    recompose(word) = phi exactly; raises NotAutomorphism otherwise."""
    table = phi.table
    if table.nvars != 2:
        raise ValueError("plane factorization needs two variables")
    x, y = table.names
    cur = list(phi.images)
    runs = []          # (component_index, accumulated q as dict degree->Coeff)
    guard = 0
    while not (cur[0].total_degree() == 1 and cur[1].total_degree() == 1):
        guard += 1
        if guard > 10000:
            raise NotAutomorphism("factorization does not terminate")
        d = [cur[0].total_degree(), cur[1].total_degree()]
        if d[0] is None or d[1] is None or min(d) < 1:
            raise NotAutomorphism("a component is constant")
        hi, lo = (0, 1) if d[0] >= d[1] else (1, 0)
        if d[hi] % d[lo]:
            raise NotAutomorphism("component degrees %s do not divide" % d)
        m = d[hi] // d[lo]
        lt_hi_exp, lt_hi_coeff = cur[hi].leading_term()
        flo_m = cur[lo] ** m
        lt_lo_exp, lt_lo_coeff = flo_m.leading_term()
        if lt_hi_exp != lt_lo_exp:
            raise NotAutomorphism("leading terms cannot cancel")
        c = lt_hi_coeff / lt_lo_coeff
        new_hi = cur[hi] - flo_m.scale(c)
        if not new_hi.is_zero():
            new_exp = new_hi.leading_term()[0]
            if (sum(new_exp), new_exp) >= (sum(lt_hi_exp), lt_hi_exp):
                raise NotAutomorphism("no progress cancelling leading terms")
        cur[hi] = new_hi
        if runs and runs[-1][0] == hi:
            runs[-1][1][m] = runs[-1][1].get(m, table.coeff(0)) + c
        else:
            runs.append((hi, {m: c}))

    terminal = AffineFactor.from_map(PolyMap(table, cur))
    if terminal.det().is_zero():
        raise NotAutomorphism("terminal affine part is singular")

    factors = [terminal]
    swap = AffineFactor(table, (0, 1, 1, 0), (0, 0))
    for comp, qdict in reversed(runs):
        # inverse of the peeled factor adds q back
        q_hi = table.zero()
        lin = table.coeff(0)
        const = table.coeff(0)
        for m, c in qdict.items():
            if c.is_zero():
                continue
            if m >= 2:
                q_hi = q_hi + table.monomial(c, **{x: m})
            elif m == 1:
                lin = lin + c
            else:
                const = const + c
        lin_aff = AffineFactor(table, (1, 0, lin, 1), (0, const)) if comp == 1 \
            else AffineFactor(table, (1, lin, 0, 1), (const, 0))
        if comp == 1:
            # (x, y + q(x)) = (x, y + q_hi(x)) * linear/const affine
            if not q_hi.is_zero():
                factors.append(TriangularFactor(table, 1, 1, 0, q_hi))
            if not lin_aff.is_identity():
                factors.append(lin_aff)
        else:
            # (x + q(y), y) = swap * (x, y + q_hi(x)) * affine * swap
            if q_hi.is_zero():
                merged = AffineFactor(table, (1, lin, 0, 1), (const, 0))
                if not merged.is_identity():
                    factors.append(merged)
            else:
                factors.append(swap)
                factors.append(TriangularFactor(table, 1, 1, 0, q_hi))
                factors.append(AffineFactor.from_map(
                    compose(swap.to_map(), lin_aff.to_map())))

    factors = _merge_affines(table, factors)
    word = TameWord(table, factors)
    if recompose(word) != phi:
        raise NotAutomorphism("recomposition check failed")
    return word


def _merge_affines(table, factors):
    out = []
    for f in factors:
        if isinstance(f, AffineFactor) and out and isinstance(out[-1], AffineFactor):
            out[-1] = AffineFactor.from_map(compose(out[-1].to_map(), f.to_map()))
        else:
            out.append(f)
    return [f for f in out
            if not (isinstance(f, AffineFactor) and f.is_identity())]


def normal_form(word):
    """Alternating factors from G\\J and J\\G, with G-cap-J parts folded into
    their right neighbour (or the tail).  Returns [(tag, PolyMap)]."""
    table = word.table

    def affine_class(factor):
        return "GintJ" if factor.mat[1].is_zero() else "GJ"

    out = []
    pending = None
    for factor in word.factors:
        pmap = factor.to_map()
        if isinstance(factor, AffineFactor):
            tag = affine_class(factor)
        else:
            tag = "JG"
        if pending is not None:
            pmap = compose(pending, pmap)
            pending = None
            if tag != "JG":
                tag = "GintJ" if AffineFactor.from_map(pmap).mat[1].is_zero() else "GJ"
        if tag == "GintJ":
            pending = pmap
            continue
        out.append((tag, pmap))
    if pending is not None and out:
        tag, last = out[-1]
        out[-1] = (tag, compose(last, pending))
    for (t1, _), (t2, _) in zip(out, out[1:]):
        if t1 == t2:
            raise NotAutomorphism("normal form does not alternate")
    return out


# ---------------------------------------------------------------------------
# the centralizer C(eps) = H(t) H0
# ---------------------------------------------------------------------------

def eps_map(table, t):
    t = table.coeff(t)
    return PolyMap(table, [table.var(table.names[0]) + table.const(t),
                           table.var(table.names[1])])


class CentralizerWord:
    """H(t) generators followed by one H0 element (x1+u1, a*x2+u2).

    Each generator is ("E1", g) for (x1 + g(x2), x2) or ("E2", g) for
    (x1, x2 + g(x1^p - t^(p-1) x1)); g is stored as a univariate polynomial
    in the first variable with g(0) = 0.
    """

    def __init__(self, table, t, gens, h0=(1, 0, 0)):
        self.table = table
        self.t = table.coeff(t)
        self.gens = list(gens)
        a, u1, u2 = h0
        self.h0 = (table.coeff(a), table.coeff(u1), table.coeff(u2))

    def gen_map(self, kind, g):
        table = self.table
        x1, x2 = table.names
        if kind == "E1":
            return PolyMap(table, [table.var(x1) + g.substitute({x1: table.var(x2)}),
                                   table.var(x2)])
        if kind == "E2":
            p = table.p
            w = table.var(x1, p) - table.var(x1).scale(self.t ** (p - 1))
            return PolyMap(table, [table.var(x1),
                                   table.var(x2) + g.substitute({x1: w})])
        raise ValueError("unknown generator kind %r" % kind)

    def gen_inverse_map(self, kind, g):
        return self.gen_map(kind, -g)

    def h0_map(self):
        table = self.table
        a, u1, u2 = self.h0
        return PolyMap(table, [table.var(table.names[0]) + table.const(u1),
                               table.var(table.names[1]).scale(a) + table.const(u2)])

    @property
    def factors(self):
        return [_GenFactor(self, kind, g) for kind, g in self.gens]

    def to_map(self):
        return recompose(self)

    def inverse_map(self):
        table = self.table
        a, u1, u2 = self.h0
        out = PolyMap(table, [table.var(table.names[0]) - table.const(u1),
                              (table.var(table.names[1]) - table.const(u2)).scale(a.inv())])
        for kind, g in reversed(self.gens):
            out = compose(out, self.gen_inverse_map(kind, g))
        return out

    def to_text(self):
        parts = ["[%s: %s]" % (kind,
                               g.substitute({self.table.names[0]:
                                             self.table.var(self.table.names[1])})
                               if kind == "E1" else g)
                 for kind, g in self.gens]
        a, u1, u2 = self.h0
        parts.append("[H0: a=%s,u1=%s,u2=%s]" % (a, u1, u2))
        return "".join(parts)


class _GenFactor:
    def __init__(self, word, kind, g):
        self.word = word
        self.kind = kind
        self.g = g

    def to_map(self):
        return self.word.gen_map(self.kind, self.g)


def centralizer_membership(phi, t):
    """The two displayed conditions with eps = (x1+t, x2)."""
    table = phi.table
    x1 = table.names[0]
    t = table.coeff(t)
    shift = {x1: table.var(x1) + table.const(t)}
    f1, f2 = phi.images
    return (f1.substitute(shift) == f1 + table.const(t)
            and f2.substitute(shift) == f2)


def w_st_split(q, s, t, var=None):
    """q = q1(x^p - t^(p-1)x) + t^-1 s x, given q(x+t) - q(x) = s."""
    table = q.table
    var = var or table.names[0]
    s = table.coeff(s)
    t = table.coeff(t)
    if t.is_zero():
        raise NotInWst("t must be a unit")
    diff = q.substitute({var: table.var(var) + table.const(t)}) - q
    if diff != table.const(s):
        raise NotInWst("q(x+t) - q(x) = %s differs from s" % diff)
    core = q - table.var(var).scale(s / t)
    q1, rem = express_in_invariant(core, var, t, mode="split")
    if not rem.is_zero():
        raise NotInWst("residual part %s survives" % rem)
    return q1


def centralizer_decompose(phi, t):
    """Write phi in C(eps) as an H(t) word followed by an H0 element."""
    table = phi.table
    x1, x2 = table.names
    t = table.coeff(t)
    p = table.p
    if not centralizer_membership(phi, t):
        raise NotInCentralizer("%s does not centralize eps" % phi)

    gens = []
    cur = phi
    prev_len = None
    while not _is_affine(cur):
        nf = normal_form(jvdk_factor(cur))
        if prev_len is not None and len(nf) >= prev_len:
            raise NotInCentralizer("no progress stripping H(t) generators")
        prev_len = len(nf)
        tag, first = nf[0]
        if tag == "JG":
            g = _strip_triangular(table, first, t)
            kind = "E2"
        else:
            aff = AffineFactor.from_map(first)
            a = aff.mat[0]
            if not a.is_zero():
                g = table.var(x1).scale(aff.mat[1] / a)
                kind = "E1"
            else:
                g = _strip_swap_case(table, aff, nf, t)
                kind = "E1"
        word_so_far = CentralizerWord(table, t, [(kind, g)])
        cur = compose(word_so_far.gen_inverse_map(kind, g), cur)
        gens.append((kind, g))

    # affine remainder (x1 + s x2 + u1, a x2 + u2)
    f1, f2 = cur.images
    s = f1.coeff_of(**{x2: 1})
    u1 = f1.constant_term()
    a = f2.coeff_of(**{x2: 1})
    u2 = f2.constant_term()
    good_shape = (f1 == table.var(x1) + table.var(x2).scale(s) + table.const(u1)
                  and f2 == table.var(x2).scale(a) + table.const(u2)
                  and not a.is_zero())
    if not good_shape:
        raise NotInCentralizer("affine remainder %s has the wrong shape" % cur)
    if not s.is_zero():
        gens.append(("E1", table.var(x1).scale(s)))
    word = CentralizerWord(table, t, gens, h0=(a, u1, u2))
    if recompose(word) != phi:
        raise NotInCentralizer("recomposition check failed")
    return word


def _strip_triangular(table, first, t):
    """Case (c): leading factor (a1 x + c1, b1 y + q(x)); the H(t) generator
    is E2(b1^-1 (q1 - q1(0))) via the W_{s,t} split."""
    x1, x2 = table.names
    f1, f2 = first.images
    b1 = f2.coeff_of(**{x2: 1})
    q = f2 - table.var(x2).scale(b1)
    if q.uses_var(x2):
        raise NotInCentralizer("leading triangular factor has a bad shape")
    diff = q.substitute({x1: table.var(x1) + table.const(t)}) - q
    if not diff.is_constant():
        raise NotInCentralizer(
            "leading factor violates the constant-difference property")
    s = diff.constant_term()
    q1 = w_st_split(q, s, t)
    q1_reduced = q1 - table.const(q1.constant_term())
    return q1_reduced.scale(b1.inv())


def _strip_swap_case(table, aff, nf, t):
    """Case (b): affine leading factor with a = 0 needs the next two factors;
    the generator is E1(p(y) + u_hat y)."""
    x1, x2 = table.names
    if len(nf) < 3:
        raise NotInCentralizer("swap-led word is too short to centralize")
    a, b, c, d = aff.mat
    u, v = aff.shift
    # gamma1 with aff * gamma1 = (y, x)
    ap = b.inv()
    cp = -(ap * u)
    bp = c.inv()
    ep = -(d / (c * b))
    vp = -(bp * v + ep * u)
    gamma1 = AffineFactor(table, (ap, 0, ep, bp), (cp, vp))
    phi2p = compose(invert_structured(gamma1.to_map()), nf[1][1])
    f1, f2 = phi2p.images
    a2 = f1.coeff_of(**{x1: 1})
    c2 = f1.constant_term()
    b2 = f2.coeff_of(**{x2: 1})
    q2 = f2 - table.var(x2).scale(b2)
    if q2.uses_var(x2) or f1 != table.var(x1).scale(a2) + table.const(c2):
        raise NotInCentralizer("second factor is not triangular")
    ulin = q2.coeff_of(**{x1: 1})
    vconst = q2.constant_term()
    pq = (q2 - table.var(x1).scale(ulin) - table.const(vconst)).scale(b2.inv())
    gamma2 = AffineFactor(
        table,
        (a2.inv(), 0, -(ulin / (b2 * a2)), b2.inv()),
        (-(c2 / a2), -((vconst - ulin * c2 / a2) / b2)))
    if compose(phi2p, gamma2.to_map()) != PolyMap(
            table, [table.var(x1), table.var(x2) + pq]):
        raise NotInCentralizer("normalization (II) failed")
    phi3p = compose(invert_structured(gamma2.to_map()), nf[2][1])
    g1 = phi3p.images[0]
    a3 = g1.coeff_of(**{x1: 1})
    b3 = g1.coeff_of(**{x2: 1})
    if b3.is_zero():
        raise NotInCentralizer("third factor lies in G-cap-J")
    u_hat = a3 / b3
    return pq + table.var(x1).scale(u_hat)


# ---------------------------------------------------------------------------
# fixed points
# ---------------------------------------------------------------------------

def fixed_point_elem_centralizer(phi, f):
    """Membership in C((x + f(y), y)): phi = (a x + g(y), b y + c) with
    a f(y) = f(b y + c).  Returns (a, b, c, g) or None."""
    table = phi.table
    x1, x2 = table.names
    if f.uses_var(x1) or f.is_constant():
        raise ValueError("f must be a nonconstant univariate in %s" % x2)
    g1, g2 = phi.images
    a = g1.coeff_of(**{x1: 1})
    g = g1 - table.var(x1).scale(a)
    b = g2.coeff_of(**{x2: 1})
    c = g2.constant_term()
    if (a.is_zero() or not a.is_constant() or g.uses_var(x1)
            or b.is_zero() or not b.is_constant() or not c.is_constant()
            or g2 != table.var(x2).scale(b) + table.const(c)):
        return None
    lhs = f.scale(a)
    rhs = f.substitute({x2: table.var(x2).scale(b) + table.const(c)})
    if lhs != rhs:
        return None
    return a, b, c, g


def fpf_witness_check(f, psi_word):
    """Theorem criterion for a fixed point free tau = (x1 + f, x2), f in k*:
    the slice action through psi in H(f) evaluates to tau at 1; the verdict
    is whether it restricts to R = F_p[u]."""
    table = psi_word.table
    f = table.coeff(f)
    if f.is_zero():
        raise ValueError("f must be a nonzero field constant")
    psi_map = psi_word.to_map()
    psi_inv = psi_word.inverse_map()
    lam = table.var("T").scale(f)
    action = slice_action(SliceData(psi_map, lam, psi_inv))
    tau = PolyMap(table, [table.var(table.names[0]) + table.const(f),
                          table.var(table.names[1])])
    if action.evaluate(1) != tau:
        raise WitnessNotCentralizing("E_1 differs from the translation")
    ok, witness = action.restricts_to("R")
    return {"restricts": ok, "witness": witness, "action": action}
