"""Exact coefficient domains F_p, F_p[u] and F_p(u).

A Coeff is a reduced fraction num/den of dense univariate polynomials over
F_p in the single parameter u.  Elements of F_p are the constant fractions;
elements of F_p[u] are those with denominator 1 (see is_integral).  The
denominator is kept monic and coprime to the numerator, so equality is plain
structural equality.

Dense polynomials are tuples of ints in [0, p), index = degree, with no
trailing zeros; the zero polynomial is the empty tuple.
"""

from .errors import DivisionByZero, InvalidLocalizer

SUPPORTED_PRIMES = (2, 3, 5, 7)


def check_prime(p):
    if p not in SUPPORTED_PRIMES:
        raise ValueError("characteristic must be one of %s, got %r"
                         % (SUPPORTED_PRIMES, p))
    return p


# ---------------------------------------------------------------------------
# dense univariate arithmetic over F_p
# ---------------------------------------------------------------------------

def _trim(cs):
    n = len(cs)
    while n and cs[n - 1] == 0:
        n -= 1
    return tuple(cs[:n])


def _uadd(a, b, p):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % p
    return _trim(out)


def _uneg(a, p):
    return tuple((-c) % p for c in a)


def _usub(a, b, p):
    return _uadd(a, _uneg(b, p), p)


def _umul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                if cb:
                    out[i + j] = (out[i + j] + ca * cb) % p
    return _trim(out)


def _uscale(a, c, p):
    c %= p
    if c == 0:
        return ()
    return _trim([(x * c) % p for x in a])


def _udivmod(a, b, p):
    if not b:
        raise DivisionByZero("univariate division by zero")
    a = list(a)
    q = [0] * max(0, len(a) - len(b) + 1)
    inv_lead = pow(b[-1], p - 2, p)
    for i in range(len(a) - len(b), -1, -1):
        c = (a[i + len(b) - 1] * inv_lead) % p
        if c:
            q[i] = c
            for j, cb in enumerate(b):
                a[i + j] = (a[i + j] - c * cb) % p
    return _trim(q), _trim(a)


def _umonic(a, p):
    if not a:
        return a
    return _uscale(a, pow(a[-1], p - 2, p), p)


def _ugcd(a, b, p):
    while b:
        a, b = b, _udivmod(a, b, p)[1]
    return _umonic(a, p)


def _uval(a):
    """Order of vanishing at u = 0 (multiplicity of the factor u)."""
    for i, c in enumerate(a):
        if c:
            return i
    raise ValueError("valuation of zero polynomial")


def _ustr(a):
    if not a:
        return "0"
    parts = []
    for i in range(len(a) - 1, -1, -1):
        c = a[i]
        if not c:
            continue
        if i == 0:
            parts.append(str(c))
        elif i == 1:
            parts.append("u" if c == 1 else "%d*u" % c)
        else:
            parts.append("u^%d" % i if c == 1 else "%d*u^%d" % (c, i))
    return "+".join(parts)


# ---------------------------------------------------------------------------
# the field F_p(u)
# ---------------------------------------------------------------------------

class Coeff:
    """An element of F_p(u), canonically reduced."""

    __slots__ = ("p", "num", "den")

    def __init__(self, p, num, den=(1,)):
        self.p = p
        num = _trim(num)
        den = _trim(den)
        if not den:
            raise DivisionByZero("zero denominator")
        if not num:
            self.num, self.den = (), (1,)
            return
        g = _ugcd(num, den, p)
        if len(g) > 1:
            num = _udivmod(num, g, p)[0]
            den = _udivmod(den, g, p)[0]
        if den[-1] != 1:
            inv = pow(den[-1], p - 2, p)
            num = _uscale(num, inv, p)
            den = _uscale(den, inv, p)
        self.num, self.den = num, den

    # -- constructors --------------------------------------------------------

    @classmethod
    def from_int(cls, p, n):
        n %= p
        return cls(p, (n,) if n else ())

    @classmethod
    def u(cls, p, power=1):
        if power >= 0:
            return cls(p, (0,) * power + (1,))
        return cls(p, (1,), (0,) * (-power) + (1,))

    @classmethod
    def from_u_coeffs(cls, p, coeffs):
        """coeffs[i] is the coefficient of u^i in the numerator."""
        return cls(p, tuple(c % p for c in coeffs))

    # -- predicates ----------------------------------------------------------

    def is_zero(self):
        return not self.num

    def __bool__(self):
        return bool(self.num)

    def is_integral(self):
        """Membership in R = F_p[u]."""
        return self.den == (1,)

    def is_constant(self):
        """Membership in the prime field F_p."""
        return len(self.num) <= 1 and self.den == (1,)

    def is_one(self):
        return self.num == (1,) and self.den == (1,)

    def const_value(self):
        if not self.is_constant():
            raise ValueError("%s is not a prime-field constant" % self)
        return self.num[0] if self.num else 0

    def u_valuation(self):
        """Order at u = 0; None for the zero element."""
        if not self.num:
            return None
        return _uval(self.num) - _uval(self.den)

    def divisible_by_u_power(self, e):
        """Membership in u^e * F_p[u]."""
        if not self.num:
            return True
        return self.is_integral() and _uval(self.num) >= e

    def is_in_localization(self, s):
        """Membership in R[1/s]: the reduced denominator divides a power of s.

        Decided by stripping gcd(den, s) factors until the gcd is a unit.
        """
        if not isinstance(s, Coeff) or not s.is_integral() or s.is_zero():
            raise InvalidLocalizer("localizer must be a nonzero element of F_p[u]")
        d = self.den
        while len(d) > 1:
            g = _ugcd(d, s.num, self.p)
            if len(g) <= 1:
                return False
            d = _udivmod(d, g, self.p)[0]
        return True

    # -- arithmetic ----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Coeff):
            if other.p != self.p:
                raise ValueError("mixed characteristics %d and %d" % (self.p, other.p))
            return other
        if isinstance(other, int):
            return Coeff.from_int(self.p, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        p = self.p
        num = _uadd(_umul(self.num, other.den, p), _umul(other.num, self.den, p), p)
        return Coeff(p, num, _umul(self.den, other.den, p))

    __radd__ = __add__

    def __neg__(self):
        return Coeff(self.p, _uneg(self.num, self.p), self.den)

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
        p = self.p
        return Coeff(p, _umul(self.num, other.num, p), _umul(self.den, other.den, p))

    __rmul__ = __mul__

    def inv(self):
        if not self.num:
            raise DivisionByZero("inverse of zero")
        return Coeff(self.p, self.den, self.num)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        return self.inv() * other

    def __pow__(self, e):
        if e < 0:
            return self.inv() ** (-e)
        out = Coeff.from_int(self.p, 1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def frob_power(self, k):
        """self**(p**k), using a^p = a on F_p scalars: only u-degrees dilate."""
        if k == 0 or not self.num:
            return self
        q = self.p ** k

        def dilate(cs):
            out = [0] * ((len(cs) - 1) * q + 1)
            for i, c in enumerate(cs):
                out[i * q] = c
            return tuple(out)

        return Coeff(self.p, dilate(self.num), dilate(self.den))

    # -- structure -----------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            other = Coeff.from_int(self.p, other)
        if not isinstance(other, Coeff):
            return NotImplemented
        return self.p == other.p and self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __str__(self):
        if self.den == (1,):
            return _ustr(self.num)
        num = _ustr(self.num)
        den = _ustr(self.den)
        if sum(1 for c in self.num if c) > 1:
            num = "(%s)" % num
        if sum(1 for c in self.den if c) > 1:
            den = "(%s)" % den
        return "%s/%s" % (num, den)

    def __repr__(self):
        return "Coeff(p=%d, %s)" % (self.p, self)


def coeff_gcd_integral(values):
    """Monic gcd in F_p[u] of a nonempty iterable of integral Coeffs."""
    values = list(values)
    p = values[0].p
    g = ()
    for v in values:
        if not v.is_integral():
            raise ValueError("gcd over F_p[u] needs integral operands")
        g = _ugcd(g, v.num, p)
        if g == (1,):
            break
    return Coeff(p, g)
