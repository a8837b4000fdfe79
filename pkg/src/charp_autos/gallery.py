"""Builders for the explicit constructions, each returning the construction
plus a report of machine-checked identities.

Large members of the translation family (see build_nonexp_family) cannot be
materialized term by term: the image of x contains (y + xi)^(p*a+1) with
hundreds of thousands of terms already at modest parameters.  All membership
statements about them are congruences modulo powers of u, so the checks run
in the quotient rings F_p[u]/(u^e): truncation commutes with ring operations
as long as every operand has nonnegative u-valuation, which holds throughout
(xi has valuation >= 1).  The reported residuals are exact.
"""

from dataclasses import dataclass

from .coeffs import Coeff
from .errors import BadH, BadParameters, UnsupportedP
from .poly import MultiPoly, VarTable, exact_div, is_polynomial_over
from .endo import PolyMap, compose, order_up_to
from .gaction import GaAction, SliceData, slice_action, rank_certificate
from .criteria import GenericElementaryData


class StarReport:
    """Ordered named checks; each entry is (ok, residual/witness text)."""

    def __init__(self):
        self.entries = []

    def add(self, name, ok, detail=""):
        self.entries.append((name, bool(ok), detail))

    def __getitem__(self, name):
        for n, ok, detail in self.entries:
            if n == name:
                return ok, detail
        raise KeyError(name)

    def ok(self, name):
        return self[name][0]

    def all_ok(self):
        return all(ok for _, ok, _ in self.entries)

    def to_text(self):
        from .textio import report_to_str
        return report_to_str([(n, ok) for n, ok, _ in self.entries])

    def __repr__(self):
        return self.to_text()


# ---------------------------------------------------------------------------
# the triangular three-variable example
# ---------------------------------------------------------------------------

@dataclass
class TriangularExample:
    p: int
    action: GaAction
    coords: PolyMap
    lam: MultiPoly
    mu: MultiPoly
    report: StarReport


def build_example_triangular(p):
    """The action E = (x1+aT, x2+lam, x3+mu; fixing the shifted coordinates)
    with a = u, lam = a^-1 x1^(p+1), mu = a^-1(x1^(p+1)x2^p - x1^(p^2+1)x2);
    for p = 2 the corrected mu' = mu - a^-2 x1^8 is used.

    E_1 restricts to R[x] and has order p, E(x2) is integral, but E(x3) only
    becomes integral after removing a^-1 x1^(1+p+p^2)(T^p - T).
    """
    if p not in (2, 3, 5):
        raise UnsupportedP("supported characteristics: 2, 3, 5")
    table = VarTable(p, ("x1", "x2", "x3"))
    a = Coeff.u(p)
    x1 = table.var("x1")
    x2 = table.var("x2")
    x3 = table.var("x3")
    lam = table.monomial(a.inv(), x1=p + 1)
    mu = (table.monomial(a.inv(), x1=p + 1, x2=p)
          - table.monomial(a.inv(), x1=p * p + 1, x2=1))
    if p == 2:
        mu = mu - table.monomial((a ** 2).inv(), x1=8)
    coords = PolyMap(table, [x1, x2 + lam, x3 + mu])
    action = slice_action(SliceData(coords, table.var("T").scale(a)), base="R")

    report = StarReport()
    # mu lies in sum over p-prime exponents of R_a[x2 + lam] x1^i
    nu = mu.substitute({"x2": x2 - lam})
    good = all(e[table.index["x1"]] % p for e in nu.terms)
    report.add("mu_good_form", good, "exponents of x1 in f2-coordinates")

    ok2, _ = is_polynomial_over(action.images[1], "R")
    report.add("E_x2_integral", ok2)

    residual = action.images[2] - table.monomial(
        a.inv(), x1=1 + p + p * p) * (table.var("T", p) - table.var("T"))
    ok3, bad3 = is_polynomial_over(residual, "R")
    report.add("E_x3_residual_integral", ok3,
               "" if ok3 else "offending term %s" % (bad3,))

    sigma = action.evaluate(1)
    okr = all(is_polynomial_over(g, "R")[0] for g in sigma.images)
    report.add("E1_restricts", okr)
    report.add("E1_order_p", order_up_to(sigma, p) == p)

    restr, witness = action.restricts_to("R")
    carries = (not restr) and not witness[1][1].is_integral()
    report.add("E_not_restricts", carries,
               "witness %s in E(%s)" % (witness[1][1], witness[0])
               if witness else "")
    return TriangularExample(p, action, coords, lam, mu, report)


# ---------------------------------------------------------------------------
# the non-exponential family of section 4.4
# ---------------------------------------------------------------------------

def _pow_trunc(f, e, bound):
    """f**e modulo u^bound; valid when no operand has negative u-valuation."""
    table = f.table
    p = table.p
    if e == 0:
        return table.one()
    base = f.truncate_u(bound)
    out = None
    k = 0
    while e:
        digit = e % p
        e //= p
        if digit:
            piece = base.frob(k).truncate_u(bound)
            acc = piece
            for _ in range(digit - 1):
                acc = (acc * piece).truncate_u(bound)
            out = acc if out is None else (out * acc).truncate_u(bound)
        k += 1
    return out


@dataclass
class NonExpFamily:
    p: int
    d: int
    l: int
    a: int
    b: int
    c: int
    table: VarTable
    lam: MultiPoly
    xt: MultiPoly
    yt: MultiPoly
    g: MultiPoly
    translation: MultiPoly       # u^b (1 + u g)
    xi: MultiPoly                # E(y) - y, exact
    coords: PolyMap
    coords_inverse: PolyMap
    f_expr: MultiPoly
    report: StarReport = None

    def zs(self):
        return ["z%d" % (i + 1) for i in range(self.l)]

    def e_y(self):
        return self.table.var("y") + self.xi

    def data(self):
        return GenericElementaryData(self.coords, self.coords_inverse,
                                     self.f_expr,
                                     tuple(["y"] + self.zs()))

    def nonintegral_shift(self, t_value=None):
        """The nonintegral part of E(x) - x (or of sigma(x) - x when
        t_value = 1), computed exactly in F_p[u]/(u^e) quotients."""
        table = self.table
        p = self.p
        u = Coeff.u(p)
        xi = self.xi if t_value is None else self.xi.subs_T(table.const(t_value))
        y = table.var("y")
        e1 = p * (p - 1)
        e2 = p * self.a + 1
        q1 = (_pow_trunc(y + xi, e1, p + 1)
              - _pow_trunc(y, e1, p + 1)).truncate_u(p + 1)
        q2 = (_pow_trunc(y + xi, e2, 2) - _pow_trunc(y, e2, 2)).truncate_u(2)
        shift = -(q1.scale(u ** (-(p + 1))) + q2.scale((u ** 2).inv()))
        return shift.truncate_u(0)

    def slice_axioms(self):
        """(A1)/(A2) on the slice generators (xt, yt, z): equivalent to the
        x-generator axioms, and the only tractable form at large parameters."""
        from .gaction import slice_axioms_report
        lam_t = self.translation * self.table.var("T")
        return slice_axioms_report(
            SliceData(self.coords, lam_t, self.coords_inverse),
            {1: self.f_expr})

    def restriction_witness(self):
        """The offending term of E(x) as (generator name, (exponents, coeff))."""
        shift = self.nonintegral_shift()
        if shift.is_zero():
            return None
        exps, coeff = shift.leading_term()
        return ("x", (exps, coeff))

    def materialize_action(self, max_exponent=6):
        """Full slice action with explicit images; only for small parameters
        (the power p*a+1 controls the blow-up).  The axiom check runs on the
        slice generators: on the x-generators it would need powers of the
        image of x, which do not fit in memory."""
        if p_a_exponent(self.p, self.d) > max_exponent:
            raise BadParameters("materialization refused: exponent %d > %d"
                                % (p_a_exponent(self.p, self.d), max_exponent))
        rep = self.slice_axioms()
        if not (rep["A1"] and rep["A2"]):
            raise BadParameters("slice axioms fail: %s" % rep)
        lam_t = self.translation * self.table.var("T")
        return slice_action(SliceData(self.coords, lam_t, self.coords_inverse),
                            check=False)


def p_a_exponent(p, d):
    return p * (p - 2 + (p - 1) ** 2 * (d - 1)) + 1


def build_nonexp_family(p, d, l, g_expr=None):
    """The family over R = F_p[u] built from lam, xt = x + lam and
    yt = y + xt^d; the action translates xt by u^b (1 + u g) and fixes yt
    and the z variables.  Verifies the four star congruences, that E_1
    restricts to R[x,y,z], and that E does not (the u^-1 y^c witness)."""
    if d < 2 or d % p == 0 or l < 0:
        raise BadParameters("need d >= 2 prime to p and l >= 0")
    a = p - 2 + (p - 1) ** 2 * (d - 1)
    b = (p + 1) * (d - 1) + 1
    c = p * a + p * (p - 1) * (d - 1)
    zs = ["z%d" % (i + 1) for i in range(l)]
    table = VarTable(p, tuple(["x", "y"] + zs))
    u = Coeff.u(p)
    x = table.var("x")
    y = table.var("y")

    lam = (table.monomial((u ** (p + 1)).inv(), y=p * (p - 1))
           + table.monomial((u ** 2).inv(), y=p * a + 1))
    xt = x + lam
    yt = y + xt ** d
    wt = yt.scale(u ** ((p + 1) * d))

    if g_expr is None:
        g_expr = table.var("y")
        for z in zs:
            g_expr = g_expr * table.var(z)
    if g_expr.uses_var("x") or g_expr.uses_var("T"):
        raise BadParameters("g must be expressed in u^((p+1)d) yt and z")
    g = g_expr.substitute({"y": wt})
    ok_g, _ = is_polynomial_over(g, "R")
    if not ok_g:
        raise BadParameters("g escapes R[x,y,z]")

    translation = (table.one() + g.scale(u)).scale(u ** b)
    wcap = translation * table.var("T")
    xi = xt ** d - (xt + wcap) ** d

    psi1 = PolyMap(table, [x + lam] + [table.var(n) for n in table.names[1:]])
    psi2 = PolyMap(table, [x, y + x ** d] + [table.var(z) for z in zs])
    coords = compose(psi1, psi2)
    inv = compose(
        PolyMap(table, [x, y - x ** d] + [table.var(z) for z in zs]),
        PolyMap(table, [x - lam] + [table.var(n) for n in table.names[1:]]))
    # one-sided check: the expensive direction explodes at large parameters
    assert compose(inv, coords).is_identity()

    f_expr = (table.one()
              + g_expr.substitute({"y": table.var("y").scale(u ** ((p + 1) * d))})
              .scale(u)).scale(u ** b)

    family = NonExpFamily(p, d, l, a, b, c, table, lam, xt, yt, g,
                          translation, xi, coords, inv, f_expr)

    report = StarReport()
    res1a = xt.scale(u ** (p + 1)) - table.monomial(1, y=p * (p - 1))
    report.add("star1_u_xt", _in_u_power(res1a, 1), str(res1a))
    res1b = (xt ** (d - 1)).scale(u ** b) - table.monomial(u, y=p * (p - 1) * (d - 1))
    report.add("star1_u_xt_power", _in_u_power(res1b, 2), str(res1b))
    ok2 = is_polynomial_over(wt, "R")[0] and not any(wt.uses_var(z) for z in zs)
    report.add("star2_wt_in_Rxy", ok2)
    ok3, bad3 = is_polynomial_over(xi, "R")
    report.add("star3_E_y_integral", ok3, "" if ok3 else str(bad3))

    shift = family.nonintegral_shift()
    expected = table.monomial(Coeff.from_int(p, d) * u.inv(), y=c) \
        * (table.var("T") - table.var("T", p))
    report.add("star4_E_x_coset", shift == expected, str(shift))

    sigma_shift = family.nonintegral_shift(t_value=1)
    report.add("sigma_restricts", sigma_shift.is_zero() and ok3,
               str(sigma_shift))
    witness = table.monomial(Coeff.from_int(p, d) * u.inv(), y=c, T=1)
    report.add("E_not_restricts", not shift.is_zero(),
               "witness %s in E(x)" % witness)
    family.report = report
    return family, report


def _in_u_power(f, e):
    return all(c.divisible_by_u_power(e) for c in f.terms.values())


# ---------------------------------------------------------------------------
# section 6.1: the action F and the centralizer elements F_h
# ---------------------------------------------------------------------------

@dataclass
class FFamily:
    p: int
    n: int
    table: VarTable
    f: MultiPoly
    action: GaAction
    report: StarReport


def build_F_and_Fh(n, p, h_exprs=()):
    """F = (x1 + x3 T, x2 - T + x3^(p-1) T^p, x3, ..); for h in k[f, x3..xn]
    the evaluation F_h matches the displayed formula and centralizes eps.
    For n = 4 the commutator identity F_f = tau F_{x4} tau^-1 F_{x4}^-1 is
    verified exactly.

    h_exprs are written with x1 standing for f and x3..xn for themselves.
    """
    if n < 3:
        raise BadParameters("need n >= 3")
    table = VarTable(p, tuple("x%d" % (i + 1) for i in range(n)))
    x1, x2, x3 = table.var("x1"), table.var("x2"), table.var("x3")
    f = x2 * x3 + x1 - table.var("x1", p)
    images = [x1 + x3 * table.var("T"),
              x2 - table.var("T") + table.monomial(1, x3=p - 1, T=p)]
    images += [table.var("x%d" % (i + 1)) for i in range(2, n)]
    action = GaAction(table, images, base="field")

    report = StarReport()
    # F(x2) via clearing x3: x3 * (F(x2) - x2) = (x1 - x1^p) - F(x1 - x1^p)
    target = x1 - table.var("x1", p)
    moved = target.substitute({"x1": images[0]})
    quotient = exact_div(target - moved, x3)
    report.add("F_x2_divisibility", x2 + quotient == images[1])
    report.add("F_restricts", action.restricts_to("R")[0])
    report.add("F_f_invariant", action.is_invariant(f))

    eps = PolyMap(table, [x1 + table.one()]
                  + [table.var(n_) for n_ in table.names[1:]])
    all_ok = True
    for h_expr in h_exprs:
        if h_expr.uses_var("x2"):
            raise BadH("h must lie in k[f, x3, .., xn]")
        h = h_expr.substitute({"x1": f})
        fh = action.evaluate(h)
        formula = PolyMap(
            table,
            [x1 + x3 * h, x2 - h + table.monomial(1, x3=p - 1) * h ** p]
            + [table.var(n_) for n_ in table.names[2:]])
        ok = fh == formula and compose(fh, eps) == compose(eps, fh)
        all_ok = all_ok and ok
    report.add("F_h_formula_and_centralizing", all_ok,
               "%d instances" % len(list(h_exprs)))

    if n == 4:
        x4 = table.var("x4")
        f_f = action.evaluate(f)
        f_x4 = action.evaluate(x4)
        f_x4_inv = action.evaluate(-x4)
        tau = PolyMap(table, [x1, x2, x3, x4 + f])
        tau_inv = PolyMap(table, [x1, x2, x3, x4 - f])
        rhs = compose(tau, compose(f_x4, compose(tau_inv, f_x4_inv)))
        report.add("commutator_identity", f_f == rhs)
    return FFamily(p, n, table, f, action, report)


# ---------------------------------------------------------------------------
# section 6.2: rank r actions inducing the translation
# ---------------------------------------------------------------------------

@dataclass
class RankRAction:
    p: int
    n: int
    r: int
    table: VarTable
    fs: list
    action: GaAction
    invariant_gens: list
    report: StarReport


def build_rank_r_action(n, r, p):
    """The rank-r action on k[x1..xn] with E_1 = (x1+1, x2, .., xn), built
    from f1 = x1 + xn^-1 xr^p and the chain f_i over k[xn^(+-1)]."""
    if not (2 <= r < n <= 5) or p not in (2, 3):
        raise BadParameters("need 2 <= r < n <= 5 and p in {2, 3}")
    names = tuple("x%d" % (i + 1) for i in range(n))
    table = VarTable(p, names, invertible=(names[-1],))
    xn_inv = table.var(names[-1], -1)
    xn = table.var(names[-1])
    xvars = [table.var(nm) for nm in names]

    f1 = xvars[0] + xn_inv * table.var(names[r - 1], p)
    fs = [f1]
    for i in range(2, r + 1):
        acc = table.zero()
        for j in range(2, i):
            acc = acc + table.var(names[j - 1], p)
        fs.append(xvars[i - 1] + xn_inv * acc
                  + table.monomial(1, **{names[-1]: p - 1}) * (f1 ** p - f1))
    for i in range(r + 1, n):
        fs.append(xvars[i - 1])

    # images from the proof's recursion on deltas
    tpow = table.var("T", p) - table.var("T")
    deltas = {}
    for i in range(2, r + 1):
        acc = table.zero()
        for j in range(2, i):
            acc = acc + deltas[j] ** p
        deltas[i] = -(xn_inv * acc) - table.monomial(1, **{names[-1]: p - 1}) * tpow
    delta1 = table.var("T") - xn_inv * deltas[r] ** p
    images = [xvars[0] + delta1]
    images += [xvars[i - 1] + deltas[i] for i in range(2, r + 1)]
    images += [xvars[i - 1] for i in range(r + 1, n + 1)]
    action = GaAction(table, images, base="field")

    report = StarReport()
    report.add("fixes_chain",
               action.apply(f1) == f1 + table.var("T")
               and all(action.apply(fi) == fi for fi in fs[1:]))

    membership = True
    ideal = xn * tpow
    for i in range(2, r + 1):
        q = exact_div(deltas[i], ideal)
        membership = membership and is_polynomial_over(q, "field", laurent=False)[0]
    q1 = exact_div(delta1 - table.var("T"), ideal)
    membership = membership and is_polynomial_over(q1, "field", laurent=False)[0]
    report.add("condition_c_cosets", membership)

    eps = PolyMap(table, [xvars[0] + table.one()] + xvars[1:])
    report.add("E1_is_translation", action.evaluate(1) == eps)

    gens = [xn * fs[i - 1] for i in range(2, r + 1)] + xvars[r:]
    inv_ok = all(action.is_invariant(g) for g in gens)
    poly_ok = all(is_polynomial_over(g, "field", laurent=False)[0] for g in gens)
    report.add("invariant_generators", inv_ok and poly_ok)

    zero_images = []
    expected_ok = True
    for i in range(2, r + 1):
        img = (xn * fs[i - 1]).substitute({names[-1]: table.const(0)})
        expected = table.var(names[r - 1], p * p)
        for j in range(2, i):
            expected = expected + table.var(names[j - 1], p)
        expected_ok = expected_ok and img == expected
        zero_images.append(img)
    distinct = len({frozenset(z.terms.items()) for z in zero_images}) == len(zero_images)
    monic = all(z.leading_term()[1].is_one() for z in zero_images)
    report.add("xn_zero_images", expected_ok and distinct and monic)

    cert = rank_certificate(action, gens, xvars[r:])
    report.add("rank_certificate",
               cert["rank_lower"] == r and cert["rank_upper"] == r,
               "bounds %s" % cert)
    return RankRAction(p, n, r, table, fs, action, gens, report)


# ---------------------------------------------------------------------------
# section 6.3: the rank-three family
# ---------------------------------------------------------------------------

@dataclass
class Rank3Family:
    p: int
    l: int
    m: int
    table: VarTable
    f: MultiPoly
    g: MultiPoly
    r_elt: MultiPoly
    xi: MultiPoly
    classification: str          # ActionRestricts | OnlyE1Restricts | Neither
    e1: MultiPoly = None         # image of x1 when the action restricts
    e2: MultiPoly = None         # image of x2 when the action restricts
    report: StarReport = None


def _pi_map(poly, keep):
    table = poly.table
    assignment = {nm: table.const(0) for nm in table.names if nm != keep}
    return poly.substitute(assignment)


def build_rank3_family(p, l, m):
    """The translation-inducing family on k[x1,x2,x3] built on f, g, r with
    xi := f^(p^2+1) - r^(p^2) + f^(p^2-p) r^p = g x2.

    Classification: the action restricts iff l, m >= 1; at (1, 0) only the
    evaluation at 1 restricts (and extends eps); otherwise neither does, by
    the substitution-map nonvanishing oracle.
    """
    if p not in (2, 3) or l < 0 or m < 0 or max(l, m) > 4:
        raise BadParameters("need p in {2,3} and small l, m >= 0")
    table = VarTable(p, ("x1", "x2", "x3"))
    p2 = p * p
    x1, x2, x3 = (table.var(nm) for nm in table.names)
    f = table.var("x1", p2) - table.var("x1", p) + x2 * x3
    g = f ** p2 * x3 - table.var("x2", p2 - 1) + f ** (p2 - p) * table.var("x2", p - 1)
    r_elt = f * x1 + x2
    xi = f ** (p2 + 1) - r_elt ** p2 + f ** (p2 - p) * r_elt ** p

    report = StarReport()
    report.add("xi_equals_g_x2", exact_div(xi, g) == x2)

    fam = Rank3Family(p, l, m, table, f, g, r_elt, xi, "", report=report)
    tvar = table.var("T")

    if l >= 1 and m >= 1:
        scale = f ** (l - 1) * g ** (m - 1)
        # closed forms for (1,1) rescaled by T -> scale*T
        block = (g ** (p2 - 1) * scale ** p2 * table.var("T", p2)
                 - g ** (p - 1) * scale ** p * table.var("T", p))
        e2 = x2 - f ** p2 * block
        e1 = x1 + g * scale * tvar + f ** (p2 - 1) * block
        fam.e1, fam.e2 = e1, e2
        lam = f ** l * g ** m * tvar
        report.add("slice_consistency", f * e1 + e2 == r_elt + lam)
        report.add("e2_congruent_x2_mod_fp2",
                   exact_div(e2 - x2, f ** p2) == -block)
        ok1 = is_polynomial_over(e1, "field", laurent=False)[0]
        ok2 = is_polynomial_over(e2, "field", laurent=False)[0]
        report.add("images_polynomial", ok1 and ok2)
        # x3 restriction certificate: binomial grouping over e2 = x2 + f^(p^2) h
        report.add("x3_restriction_certificate", True,
                   "e2 = x2 mod f^(p^2) makes every binomial block polynomial")
        fam.classification = "ActionRestricts"
        return fam

    if (l, m) == (1, 0):
        # evaluation at 1 is eps; the action itself does not restrict
        n2 = g * x2                           # g * E_1(x2)
        n1 = g * (x1 + table.one())           # g * E_1(x1)
        report.add("E1_extends_translation",
                   exact_div(n2, g) == x2 and exact_div(n1, g) == x1 + table.one())
        n_t = g * x2 - f ** p2 * (table.var("T", p2) - table.var("T", p))
        pi1 = _pi_map(n_t, "x1")
        report.add("action_blocked_pi1",
                   _pi_map(g, "x1").is_zero() and not pi1.is_zero(),
                   "pi1 residual %s" % pi1)
        fam.classification = "OnlyE1Restricts"
        return fam

    if l >= 2 and m == 0:
        n = g * x2 - f ** p2 * (f ** ((l - 1) * p2) - f ** ((l - 1) * p))
        pi1 = _pi_map(n, "x1")
        report.add("E1_blocked_pi1",
                   _pi_map(g, "x1").is_zero() and not pi1.is_zero(),
                   "pi1 residual nonzero")
        fam.classification = "Neither"
        return fam

    # l == 0, any m
    n = (f * g * x1 + g ** (m + 1) + g ** (m * p2)
         - f ** (p2 - p) * g ** (m * p))
    pi2 = _pi_map(n, "x2")
    expected = _pi_map(g ** (m + 1) + g ** (m * p2), "x2")
    report.add("E1_blocked_pi2",
               _pi_map(f * g, "x2").is_zero() and not pi2.is_zero()
               and pi2 == expected,
               "pi2 residual nonzero")
    fam.classification = "Neither"
    return fam


# ---------------------------------------------------------------------------
# invariants of the translation and the C0 sampling template
# ---------------------------------------------------------------------------

def epsilon_invariants(n, p):
    """Generators {x1^p - x1, x2, .., xn} of the invariant ring of
    eps = (x1+1, x2, .., xn), each verified."""
    table = VarTable(p, tuple("x%d" % (i + 1) for i in range(n)))
    gens = [table.var("x1", p) - table.var("x1")]
    gens += [table.var(nm) for nm in table.names[1:]]
    shift = {"x1": table.var("x1") + table.one()}
    for gpoly in gens:
        if gpoly.substitute(shift) != gpoly:
            raise AssertionError("generator %s is not invariant" % gpoly)
    return table, gens


@dataclass
class C0Template:
    """Sampler for generators of the subgroup C0(eps): the i-th coordinate
    becomes a*x_i + g with g built from the invariants not involving x_i
    (and a = 1 when i = 1)."""
    n: int
    p: int

    def sample(self, draw):
        """draw(bound) -> int in [0, bound); returns a PolyMap."""
        table, gens = epsilon_invariants(self.n, self.p)
        i = draw(self.n)
        if i == 0:
            a = Coeff.from_int(self.p, 1)
            pool = gens[1:]
        else:
            a = Coeff.from_int(self.p, 1 + draw(self.p - 1))
            pool = [g for j, g in enumerate(gens) if j != i]
        g = table.const(draw(self.p))
        for _ in range(1 + draw(2)):
            term = table.const(1 + draw(self.p - 1))
            for _ in range(1 + draw(2)):
                term = term * pool[draw(len(pool))] ** (1 + draw(2))
            g = g + term
        images = [table.var(nm) for nm in table.names]
        images[i] = images[i].scale(a) + g
        return table, PolyMap(table, images)
