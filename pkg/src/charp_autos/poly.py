"""Sparse multivariate (optionally Laurent) polynomials over F_p(u).

MultiPoly maps exponent tuples to nonzero Coeffs.  Every table reserves the
action parameter T plus two scratch parameters T1, T2 (used for two-parameter
axiom expansions); they are ordinary slots at the end of the exponent tuple
and are never invertible.

Negative exponents are permitted only on variables flagged invertible in the
VarTable.  Powers use the base-p expansion of the exponent so that Frobenius
powers f^(p^k) cost one pass over the terms.
"""

from .coeffs import Coeff, check_prime, coeff_gcd_integral
from .errors import (NegativeExponent, NonIntegralCoefficient, NotDivisible,
                     NotInInvariantRing, ZeroPolynomial)

RESERVED = ("T", "T1", "T2")


class VarTable:
    """Ordered ring variables plus the reserved action parameters."""

    __slots__ = ("p", "names", "invertible", "all_names", "index", "_vcount")

    def __init__(self, p, names, invertible=()):
        self.p = check_prime(p)
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError("duplicate variable names")
        for r in RESERVED:
            if r in names:
                raise ValueError("%r is reserved for the action parameter" % r)
        bad = set(invertible) - set(names)
        if bad:
            raise ValueError("unknown invertible variables %s" % sorted(bad))
        self.names = names
        self.invertible = frozenset(invertible)
        self.all_names = names + RESERVED
        self.index = {n: i for i, n in enumerate(self.all_names)}
        self._vcount = len(self.all_names)

    @property
    def nvars(self):
        return len(self.names)

    def zero_exp(self):
        return (0,) * self._vcount

    def const(self, c):
        if isinstance(c, int):
            c = Coeff.from_int(self.p, c)
        if c.is_zero():
            return MultiPoly(self, {})
        return MultiPoly(self, {self.zero_exp(): c})

    def zero(self):
        return MultiPoly(self, {})

    def one(self):
        return self.const(1)

    def var(self, name, exponent=1):
        i = self.index[name]
        if exponent < 0 and name not in self.invertible:
            raise NegativeExponent("variable %s is not invertible" % name)
        exp = [0] * self._vcount
        exp[i] = exponent
        return MultiPoly(self, {tuple(exp): Coeff.from_int(self.p, 1)})

    def monomial(self, coeff, **powers):
        if isinstance(coeff, int):
            coeff = Coeff.from_int(self.p, coeff)
        exp = [0] * self._vcount
        for name, e in powers.items():
            if e < 0 and name not in self.invertible:
                raise NegativeExponent("variable %s is not invertible" % name)
            exp[self.index[name]] = e
        if coeff.is_zero():
            return self.zero()
        return MultiPoly(self, {tuple(exp): coeff})

    def coeff(self, c):
        if isinstance(c, int):
            return Coeff.from_int(self.p, c)
        return c

    def parse(self, text):
        from .textio import parse_poly
        return parse_poly(self, text)

    def __eq__(self, other):
        return (isinstance(other, VarTable) and self.p == other.p
                and self.names == other.names
                and self.invertible == other.invertible)

    def __hash__(self):
        return hash((self.p, self.names, self.invertible))

    def __repr__(self):
        return "VarTable(p=%d, %s)" % (self.p, ",".join(self.names))


def _grlex_key(exp):
    return (sum(exp), exp)


class MultiPoly:
    __slots__ = ("table", "terms")

    def __init__(self, table, terms):
        self.table = table
        self.terms = terms

    # -- basic structure -----------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.table.const(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.table == other.table and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: _grlex_key(kv[0]),
                      reverse=True)

    def leading_term(self):
        if not self.terms:
            raise ZeroPolynomial("leading term of zero")
        exp = max(self.terms, key=_grlex_key)
        return exp, self.terms[exp]

    def total_degree(self):
        if not self.terms:
            return None
        return max(sum(e) for e in self.terms)

    def degree_in(self, name):
        i = self.table.index[name]
        if not self.terms:
            return None
        return max(e[i] for e in self.terms)

    def uses_var(self, name):
        i = self.table.index[name]
        return any(e[i] for e in self.terms)

    def constant_term(self):
        return self.terms.get(self.table.zero_exp(),
                              Coeff.from_int(self.table.p, 0))

    def is_constant(self):
        return not self.terms or (len(self.terms) == 1
                                  and self.table.zero_exp() in self.terms)

    def coeff_of(self, **powers):
        exp = [0] * len(self.table.all_names)
        for name, e in powers.items():
            exp[self.table.index[name]] = e
        return self.terms.get(tuple(exp), Coeff.from_int(self.table.p, 0))

    def monomials_of_degree(self, d):
        terms = {e: c for e, c in self.terms.items() if sum(e) == d}
        return MultiPoly(self.table, terms)

    def linear_part(self):
        """Terms of total degree exactly one."""
        return self.monomials_of_degree(1)

    # -- ring operations -----------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            if other.table != self.table:
                raise ValueError("mixed variable tables")
            return other
        if isinstance(other, (int, Coeff)):
            return self.table.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if len(self.terms) < len(other.terms):
            self, other = other, self
        out = dict(self.terms)
        for e, c in other.terms.items():
            cur = out.get(e)
            if cur is None:
                out[e] = c
            else:
                s = cur + c
                if s.is_zero():
                    del out[e]
                else:
                    out[e] = s
        return MultiPoly(self.table, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.table, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.terms or not other.terms:
            return self.table.zero()
        if len(self.terms) > len(other.terms):
            self, other = other, self
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = c1 * c2
                cur = out.get(e)
                if cur is None:
                    if not c.is_zero():
                        out[e] = c
                else:
                    s = cur + c
                    if s.is_zero():
                        del out[e]
                    else:
                        out[e] = s
        return MultiPoly(self.table, out)

    __rmul__ = __mul__

    def scale(self, c):
        c = self.table.coeff(c)
        if c.is_zero():
            return self.table.zero()
        return MultiPoly(self.table, {e: k * c for e, k in self.terms.items()})

    def frob(self, k=1):
        """Frobenius power f^(p^k): exact in characteristic p."""
        if k == 0:
            return self
        q = self.table.p ** k
        return MultiPoly(self.table,
                         {tuple(x * q for x in e): c.frob_power(k)
                          for e, c in self.terms.items()})

    def __pow__(self, e):
        if e < 0:
            if len(self.terms) == 1:
                return self.monomial_inverse() ** (-e)
            raise NegativeExponent("negative power of a non-monomial")
        if e == 0:
            return self.table.one()
        p = self.table.p
        out = None
        base = self
        k = 0
        while e:
            digit = e % p
            e //= p
            if digit:
                piece = base.frob(k)
                acc = piece
                for _ in range(digit - 1):
                    acc = acc * piece
                out = acc if out is None else out * acc
            k += 1
        return out

    def monomial_inverse(self):
        if len(self.terms) != 1:
            raise NegativeExponent("only monomials are invertible")
        (e, c), = self.terms.items()
        for i, x in enumerate(e):
            name = self.table.all_names[i]
            if x and name not in self.table.invertible:
                raise NegativeExponent("variable %s is not invertible" % name)
        return MultiPoly(self.table, {tuple(-x for x in e): c.inv()})

    # -- substitution --------------------------------------------------------

    def substitute(self, assignment):
        """Image under the ring homomorphism sending each named variable to
        its assigned polynomial (simultaneously); unassigned variables map to
        themselves.  Values may be MultiPoly, Coeff or int.
        """
        table = self.table
        images = {}
        for name, val in assignment.items():
            idx = table.index[name]
            if isinstance(val, (int, Coeff)):
                val = table.const(val)
            if val.table != table:
                raise ValueError("substitution image in a different table")
            if val.terms != table.var(name).terms:
                images[idx] = val
        if not images or not self.terms:
            return self
        power_cache = {idx: {} for idx in images}

        def image_power(idx, e):
            cache = power_cache[idx]
            got = cache.get(e)
            if got is None:
                got = images[idx] ** e
                cache[e] = got
            return got

        out = table.zero()
        for exp, c in self.terms.items():
            base = list(exp)
            factors = []
            for idx in images:
                e = base[idx]
                if e:
                    base[idx] = 0
                    factors.append(image_power(idx, e))
            term = MultiPoly(table, {tuple(base): c})
            for f in factors:
                term = term * f
            out = out + term
        return out

    def subs_T(self, value):
        return self.substitute({"T": value})

    # -- coefficient-wise queries ---------------------------------------------

    def map_coeffs(self, fn):
        out = {}
        for e, c in self.terms.items():
            v = fn(c)
            if not v.is_zero():
                out[e] = v
        return MultiPoly(self.table, out)

    def truncate_u(self, bound):
        """Drop terms whose coefficient lies in u^bound * F_p[u].

        Exact modulo u^bound as long as every operand in the surrounding
        computation has u-valuation >= 0.
        """
        out = {e: c for e, c in self.terms.items()
               if (c.u_valuation() is not None and c.u_valuation() < bound)}
        return MultiPoly(self.table, out)

    def min_u_valuation(self):
        if not self.terms:
            return None
        return min(c.u_valuation() for c in self.terms.values())

    def __str__(self):
        from .textio import poly_to_str
        return poly_to_str(self)

    def __repr__(self):
        return "MultiPoly(%s)" % self


# ---------------------------------------------------------------------------
# module operations
# ---------------------------------------------------------------------------

def exact_div(f, g):
    """Exact quotient f/g, or NotDivisible.

    Monomial units of invertible variables are cleared first, then ordinary
    leading-term division runs over the polynomial parts.
    """
    if g.is_zero():
        raise ZeroPolynomial("division by the zero polynomial")
    if f.is_zero():
        return f.table.zero()
    table = f.table
    if table != g.table:
        raise ValueError("mixed variable tables")

    def clear_units(h):
        shift = [0] * len(table.all_names)
        for name in table.invertible:
            i = table.index[name]
            m = min(e[i] for e in h.terms)
            if m:
                shift[i] = m
        if not any(shift):
            return h, tuple(shift)
        terms = {tuple(a - s for a, s in zip(e, shift)): c
                 for e, c in h.terms.items()}
        return MultiPoly(table, terms), tuple(shift)

    fc, fshift = clear_units(f)
    gc, gshift = clear_units(g)
    lg_exp, lg_coeff = gc.leading_term()
    rem = fc
    qterms = {}
    while rem.terms:
        lr_exp, lr_coeff = rem.leading_term()
        qe = tuple(a - b for a, b in zip(lr_exp, lg_exp))
        if any(x < 0 for x in qe):
            raise NotDivisible("no exact quotient")
        qc = lr_coeff / lg_coeff
        qterms[qe] = qc
        rem = rem - MultiPoly(table, {qe: qc}) * gc
    shift = tuple(a - b for a, b in zip(fshift, gshift))
    for i, s in enumerate(shift):
        if s < 0 and table.all_names[i] not in table.invertible:
            raise NotDivisible("quotient needs a negative exponent")
    q = MultiPoly(table, qterms)
    if any(shift):
        q = q * MultiPoly(table, {shift: Coeff.from_int(table.p, 1)})
    return q


def content_primitive(f):
    """(content, primitive part) over F_p[u]; content is the monic gcd of the
    coefficients and the primitive part has content 1."""
    if f.is_zero():
        raise ZeroPolynomial("content of the zero polynomial")
    for c in f.terms.values():
        if not c.is_integral():
            raise NonIntegralCoefficient("coefficient %s is not in F_p[u]" % c)
    content = coeff_gcd_integral(f.terms.values())
    if content.is_one():
        return content, f
    primitive = f.map_coeffs(lambda c: c / content)
    return content, primitive


def is_polynomial_over(f, ring="R", laurent=False, localizer=None):
    """Coefficient-and-exponent membership test.

    ring: "R" for F_p[u], "Ra" for F_p[u][1/localizer], "field" for F_p(u).
    Returns (ok, witness) where witness is an offending (exponents, coeff)
    pair, or None.
    """
    if ring == "Ra" and localizer is None:
        raise ValueError("ring 'Ra' needs a localizer")
    for e, c in sorted(f.terms.items(), key=lambda kv: _grlex_key(kv[0])):
        if not laurent and any(x < 0 for x in e):
            return False, (e, c)
        if ring == "R" and not c.is_integral():
            return False, (e, c)
        if ring == "Ra" and not c.is_in_localization(localizer):
            return False, (e, c)
    return True, None


def express_in_invariant(q, var, a, mode="split"):
    """Write a univariate q as q1(w) + rem with w = var^p - a^(p-1)*var.

    rem collects the monomials var^i with p not dividing i.  q1 is returned
    as a polynomial in var whose variable stands for w.  In mode "member" a
    nonzero rem raises NotInInvariantRing.

    The top term c*var^m is removed greedily: subtract c*w^(m/p) when p | m,
    otherwise move the term to rem.
    """
    table = q.table
    p = table.p
    idx = table.index[var]
    for e in q.terms:
        if any(x and i != idx for i, x in enumerate(e)) or e[idx] < 0:
            raise ValueError("polynomial is not univariate in %s" % var)
    w = table.var(var, p) - table.var(var).scale(a ** (p - 1))
    q1 = table.zero()
    rem = table.zero()
    work = q
    while work.terms:
        exp, c = work.leading_term()
        m = exp[idx]
        term = MultiPoly(table, {exp: c})
        if m % p == 0:
            q1 = q1 + table.monomial(c, **{var: m // p})
            work = work - (w ** (m // p)).scale(c)
        else:
            rem = rem + term
            work = work - term
    if mode == "member" and not rem.is_zero():
        raise NotInInvariantRing("residual part %s outside R[w]" % rem)
    return q1, rem


def linear_span_dim(gens):
    """Dimension of the k-span of linear parts of the algebra k[gens].

    Translating each generator by its value at 0 leaves the algebra and the
    linear parts unchanged, and products of constant-free elements have no
    linear part, so the span is that of the generators' own linear parts.
    """
    gens = list(gens)
    if not gens:
        return 0, []
    table = gens[0].table
    n = table.nvars
    rows = []
    for g in gens:
        if g.table != table:
            raise ValueError("mixed variable tables")
        for e in g.terms:
            if any(x < 0 for x in e):
                raise ValueError("Laurent generators are not supported here")
        lin = g.linear_part()
        row = [lin.coeff_of(**{name: 1}) for name in table.names]
        rows.append(row)
    basis = []
    pivots = []
    for row in rows:
        row = list(row)
        for prow, pcol in zip(basis, pivots):
            if not row[pcol].is_zero():
                factor = row[pcol] / prow[pcol]
                row = [a - factor * b for a, b in zip(row, prow)]
        col = next((j for j in range(n) if not row[j].is_zero()), None)
        if col is not None:
            basis.append(row)
            pivots.append(col)
    basis_polys = []
    for row in basis:
        poly = table.zero()
        for name, c in zip(table.names, row):
            if not c.is_zero():
                poly = poly + table.var(name).scale(c)
        basis_polys.append(poly)
    return len(basis), basis_polys
