"""Endomorphisms of R[x1..xn] given by generator images.

Two-line convention throughout: a PolyMap (g1,..,gn) sends xi to gi, and
compose(phi, psi) has images (phi(g1),..,phi(gn)), i.e. it realizes the
product phi*psi of the paper-style word.
"""

from .coeffs import Coeff
from .errors import (NotDivisible, NotStructured, NotUnitMultiple,
                     SingularAffine)
from .poly import exact_div


class PolyMap:
    __slots__ = ("table", "images")

    def __init__(self, table, images):
        images = tuple(images)
        if len(images) != table.nvars:
            raise ValueError("expected %d images, got %d"
                             % (table.nvars, len(images)))
        fixed = []
        for g in images:
            if isinstance(g, (int, Coeff)):
                g = table.const(g)
            if g.table != table:
                raise ValueError("image from a different table")
            for name in ("T", "T1", "T2"):
                if g.uses_var(name):
                    raise ValueError("map images may not involve %s" % name)
            fixed.append(g)
        self.table = table
        self.images = tuple(fixed)

    @classmethod
    def identity(cls, table):
        return cls(table, [table.var(n) for n in table.names])

    def image_of(self, name):
        return self.images[list(self.table.names).index(name)]

    def assignment(self):
        return dict(zip(self.table.names, self.images))

    def apply(self, f):
        """The ring homomorphism applied to an arbitrary polynomial."""
        return f.substitute(self.assignment())

    def is_identity(self):
        return all(g == self.table.var(n)
                   for n, g in zip(self.table.names, self.images))

    def __eq__(self, other):
        if not isinstance(other, PolyMap):
            return NotImplemented
        return self.table == other.table and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __str__(self):
        from .textio import map_to_str
        return map_to_str(self)

    __repr__ = __str__


def compose(phi, psi):
    """(phi psi)(xi) = phi(psi(xi))."""
    if phi.table != psi.table:
        raise ValueError("mixed variable tables")
    return PolyMap(phi.table, [phi.apply(g) for g in psi.images])


def power(phi, m):
    out = PolyMap.identity(phi.table)
    for _ in range(m):
        out = compose(phi, out)
    return out


def order_up_to(sigma, bound=None):
    """Least m <= bound with sigma^m = id, else None (ExceedsBound)."""
    if bound is None:
        bound = sigma.table.p ** 2
    acc = sigma
    for m in range(1, bound + 1):
        if acc.is_identity():
            return m
        acc = compose(sigma, acc)
    return None


def classify(sigma):
    """Shape flags {affine, triangular, strict_triangular, elementary}.

    Units are read in the ambient coefficient field: the triangular test
    accepts any nonzero constant as the leading unit.  All order-p uses force
    that unit to be 1 anyway (strict triangularity).
    """
    table = sigma.table
    flags = set()
    if all(g.total_degree() == 1 for g in sigma.images):
        flags.add("affine")

    triangular = True
    strict = True
    for i, name in enumerate(table.names):
        g = sigma.images[i]
        c = g.coeff_of(**{name: 1})
        rest = g - table.var(name).scale(c)
        if c.is_zero() or any(
                e[table.index[n]] for n in table.names[i:] for e in rest.terms):
            triangular = False
            strict = False
            break
        if not c.is_one():
            strict = False
    if triangular:
        flags.add("triangular")
    if strict:
        flags.add("strict_triangular")

    g1 = sigma.images[0]
    x1 = table.names[0]
    c = g1.coeff_of(**{x1: 1})
    rest = g1 - table.var(x1).scale(c)
    if (not c.is_zero() and not rest.uses_var(x1)
            and all(sigma.images[i] == table.var(table.names[i])
                    for i in range(1, table.nvars))):
        flags.add("elementary")
    return flags


def invert_structured(sigma):
    """Inverse of an affine or triangular map; both compositions verified."""
    flags = classify(sigma)
    if "triangular" in flags and "affine" not in flags:
        inv = _invert_triangular(sigma)
    elif "affine" in flags:
        inv = _invert_affine(sigma)
    elif "triangular" in flags:
        inv = _invert_triangular(sigma)
    else:
        raise NotStructured("map is neither affine nor triangular: %s" % sigma)
    if not compose(sigma, inv).is_identity() or not compose(inv, sigma).is_identity():
        raise NotStructured("structured inversion failed for %s" % sigma)
    return inv


def _invert_triangular(sigma):
    table = sigma.table
    inv_images = []
    for i, name in enumerate(table.names):
        g = sigma.images[i]
        c = g.coeff_of(**{name: 1})
        rest = g - table.var(name).scale(c)
        # h_i = c^-1 (x_i - rest(h_1,..,h_{i-1}))
        moved = rest.substitute(dict(zip(table.names[:i], inv_images)))
        inv_images.append((table.var(name) - moved).scale(c.inv()))
    return PolyMap(table, inv_images)


def _invert_affine(sigma):
    table = sigma.table
    n = table.nvars
    p = table.p
    rows = []
    shift = []
    for g in sigma.images:
        rows.append([g.coeff_of(**{m: 1}) for m in table.names])
        shift.append(g.constant_term())
    # solve M * Y = X - b by Gauss-Jordan on [M | I]
    aug = [row[:] + [Coeff.from_int(p, 1 if i == j else 0) for j in range(n)]
           for i, row in enumerate(rows)]
    for col in range(n):
        piv = next((r for r in range(col, n) if not aug[r][col].is_zero()), None)
        if piv is None:
            raise SingularAffine("linear part is singular: %s" % sigma)
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = aug[col][col].inv()
        aug[col] = [v * inv for v in aug[col]]
        for r in range(n):
            if r != col and not aug[r][col].is_zero():
                f = aug[r][col]
                aug[r] = [v - f * w for v, w in zip(aug[r], aug[col])]
    inv_images = []
    for i in range(n):
        img = table.zero()
        for j, name in enumerate(table.names):
            minv = aug[i][n + j]
            if not minv.is_zero():
                img = img + (table.var(name) - table.const(shift[j])).scale(minv)
        inv_images.append(img)
    return PolyMap(table, inv_images)


def conjugate(sigma, psi, psi_inverse=None):
    """psi sigma psi^-1."""
    if psi_inverse is None:
        psi_inverse = invert_structured(psi)
    return compose(psi, compose(sigma, psi_inverse))


def ideal_gens(sigma):
    """Generators (sigma(x1)-x1, .., sigma(xn)-xn) of I(sigma)."""
    table = sigma.table
    return [g - table.var(n) for n, g in zip(table.names, sigma.images)]


def unit_multiple_of(h, f):
    """The field unit c with h = c*f, else NotUnitMultiple."""
    if f.is_zero():
        raise ValueError("f must be nonzero")
    if h.is_zero():
        raise NotUnitMultiple("zero is not a unit multiple")
    try:
        q = exact_div(h, f)
    except NotDivisible:
        raise NotUnitMultiple("%s does not divide %s" % (f, h))
    if not q.is_constant():
        raise NotUnitMultiple("quotient %s is not a constant" % q)
    return q.constant_term()
