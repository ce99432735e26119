"""Glued rational curves: the projective line with multiplied points.

A curve is the line together with a list of special base points, each carrying
a multiplicity m (the point appears in m copies glued together away from each
other).  Divisors live on point copies; sections of a divisor are rational
functions in z whose pole order at every copy is bounded by the coefficient
there.  The Picard group is presented on divisors supported on special
copies, modulo principal divisors.
"""

import math
from fractions import Fraction

import sympy

from .exactmath import RationalFunction, UniPoly
from .grading import FGAbelianGroup


class ZeroFunction(Exception):
    """The zero function has no divisor and no order at a point."""


class NotPrincipal(Exception):
    """Divisor is not principal; carries the nonzero Picard class."""

    def __init__(self, class_vector):
        self.class_vector = tuple(class_vector)
        super().__init__("divisor has nonzero class %r" % (self.class_vector,))


class InternalInconsistency(Exception):
    """A certified recomputation failed; indicates a bug, not bad input."""


class P1Point:
    """A point of the projective line: a rational value or infinity."""

    __slots__ = ("value",)

    def __init__(self, value):
        # value None encodes infinity
        if value is not None:
            value = Fraction(value)
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, value):
        raise AttributeError("P1Point is immutable")

    @staticmethod
    def finite(v):
        return P1Point(Fraction(v))

    @staticmethod
    def infinity():
        return P1Point(None)

    def is_infinity(self):
        return self.value is None

    def __eq__(self, other):
        return isinstance(other, P1Point) and self.value == other.value

    def __hash__(self):
        return hash(("P1Point", self.value))

    def sort_key(self):
        if self.value is None:
            return (1, Fraction(0))
        return (0, self.value)

    def __str__(self):
        return "inf" if self.value is None else str(self.value)

    def __repr__(self):
        return "P1Point(%s)" % self


def parse_point(text):
    text = str(text).strip()
    if text in ("inf", "oo", "infinity"):
        return P1Point.infinity()
    return P1Point.finite(Fraction(text))


class CurvePoint:
    """A copy of a base point: ordinary points have the single copy 0."""

    __slots__ = ("base", "copy_index")

    def __init__(self, base, copy_index=0):
        copy_index = int(copy_index)
        if copy_index < 0:
            raise ValueError("copy index must be nonnegative")
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "copy_index", copy_index)

    def __setattr__(self, name, value):
        raise AttributeError("CurvePoint is immutable")

    def __eq__(self, other):
        return (isinstance(other, CurvePoint) and self.base == other.base
                and self.copy_index == other.copy_index)

    def __hash__(self):
        return hash(("CurvePoint", self.base, self.copy_index))

    def sort_key(self):
        return self.base.sort_key() + (self.copy_index,)

    def __str__(self):
        return "%s%s" % (self.base, "'" * self.copy_index)

    def __repr__(self):
        return "CurvePoint(%r, %d)" % (self.base, self.copy_index)


class GluedCurve:
    """The projective line with pairwise distinct special points, each taken
    with multiplicity at least 1."""

    __slots__ = ("special", "_mult", "_copy_index")

    def __init__(self, special):
        special = tuple((p, int(m)) for p, m in special)
        seen = set()
        for p, m in special:
            if not isinstance(p, P1Point):
                raise ValueError("special points must be P1Point values")
            if m < 1:
                raise ValueError("multiplicity must be at least 1")
            if p in seen:
                raise ValueError("special points must be pairwise distinct")
            seen.add(p)
        object.__setattr__(self, "special", special)
        object.__setattr__(self, "_mult", {p: m for p, m in special})
        idx = {}
        k = 0
        for p, m in special:
            for i in range(m):
                idx[CurvePoint(p, i)] = k
                k += 1
        object.__setattr__(self, "_copy_index", idx)

    def __setattr__(self, name, value):
        raise AttributeError("GluedCurve is immutable")

    def multiplicity(self, base):
        return self._mult.get(base, 1)

    def is_special(self, base):
        return base in self._mult

    def copies(self, base):
        return [CurvePoint(base, i) for i in range(self.multiplicity(base))]

    def special_copies(self):
        """All copies of special points, in input order."""
        out = []
        for p, m in self.special:
            out.extend(CurvePoint(p, i) for i in range(m))
        return out

    def copy_position(self, point):
        """Position of a special copy in the ambient coordinate order."""
        return self._copy_index[point]

    def validate_point(self, point):
        if point.copy_index >= self.multiplicity(point.base):
            raise ValueError("copy index %d out of range for %s"
                             % (point.copy_index, point.base))

    def __eq__(self, other):
        return isinstance(other, GluedCurve) and self.special == other.special

    def __hash__(self):
        return hash(("GluedCurve", self.special))

    def __repr__(self):
        return "GluedCurve(%r)" % (list(self.special),)


def curve_from_json(data):
    """Build a curve from {"special": [{"point": ..., "multiplicity": ...}]}."""
    if not isinstance(data, dict) or "special" not in data:
        raise ValueError("curve JSON must be an object with a 'special' list")
    entries = data["special"]
    if not isinstance(entries, list):
        raise ValueError("'special' must be a list")
    special = []
    for i, entry in enumerate(entries):
        if not isinstance(entry, dict):
            raise ValueError("special entry %d must be an object" % i)
        try:
            point = parse_point(entry["point"])
        except KeyError:
            raise ValueError("special entry %d is missing 'point'" % i)
        except (ValueError, ZeroDivisionError):
            raise ValueError("special entry %d has unparseable point %r"
                             % (i, entry.get("point")))
        mult = entry.get("multiplicity", 1)
        if not isinstance(mult, int) or mult < 1:
            raise ValueError("special entry %d needs integer multiplicity >= 1"
                             % i)
        special.append((point, mult))
    try:
        return GluedCurve(special)
    except ValueError as exc:
        raise ValueError("invalid curve: %s" % exc)


def curve_to_json(X):
    return {"special": [{"point": str(p), "multiplicity": m}
                        for p, m in X.special]}


class Divisor:
    """Finite integer combination of curve points; zero coefficients are
    never stored."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients):
        clean = {}
        items = coefficients.items() if isinstance(coefficients, dict) \
            else coefficients
        for point, c in items:
            c = int(c)
            if c != 0:
                if point in clean:
                    raise ValueError("duplicate point in divisor")
                clean[point] = c
        object.__setattr__(self, "coefficients", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Divisor is immutable")

    @staticmethod
    def zero():
        return Divisor({})

    @staticmethod
    def of_point(point, coeff=1):
        return Divisor({point: coeff})

    def coefficient(self, point):
        return self.coefficients.get(point, 0)

    def support(self):
        return sorted(self.coefficients, key=lambda p: p.sort_key())

    def sorted_items(self):
        return [(p, self.coefficients[p]) for p in self.support()]

    def is_zero(self):
        return not self.coefficients

    def __add__(self, other):
        out = dict(self.coefficients)
        for p, c in other.coefficients.items():
            out[p] = out.get(p, 0) + c
        return Divisor(out)

    def __neg__(self):
        return Divisor({p: -c for p, c in self.coefficients.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, k):
        return Divisor({p: int(k) * c for p, c in self.coefficients.items()})

    def __eq__(self, other):
        return (isinstance(other, Divisor)
                and self.coefficients == other.coefficients)

    def __hash__(self):
        return hash(("Divisor", tuple((p, c) for p, c in self.sorted_items())))

    def is_effective(self):
        return all(c >= 0 for c in self.coefficients.values())

    def __str__(self):
        if not self.coefficients:
            return "0"
        parts = []
        for p, c in self.sorted_items():
            body = "[%s]" % p if abs(c) == 1 else "%d[%s]" % (abs(c), p)
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self):
        return "Divisor(%r)" % (dict(self.coefficients),)


def divisor_from_json(data, X=None):
    """Build a divisor from a list of {"point", "copy", "coeff"} objects."""
    if not isinstance(data, list):
        raise ValueError("divisor JSON must be a list")
    coeffs = {}
    for i, entry in enumerate(data):
        if not isinstance(entry, dict):
            raise ValueError("divisor entry %d must be an object" % i)
        try:
            base = parse_point(entry["point"])
        except KeyError:
            raise ValueError("divisor entry %d is missing 'point'" % i)
        except (ValueError, ZeroDivisionError):
            raise ValueError("divisor entry %d has unparseable point %r"
                             % (i, entry.get("point")))
        copy = entry.get("copy", 0)
        coeff = entry.get("coeff")
        if not isinstance(copy, int) or copy < 0:
            raise ValueError("divisor entry %d needs integer copy >= 0" % i)
        if not isinstance(coeff, int):
            raise ValueError("divisor entry %d needs integer coeff" % i)
        point = CurvePoint(base, copy)
        if X is not None:
            try:
                X.validate_point(point)
            except ValueError as exc:
                raise ValueError("divisor entry %d: %s" % (i, exc))
        if point in coeffs:
            raise ValueError("divisor entry %d repeats point %s" % (i, point))
        coeffs[point] = coeff
    return Divisor(coeffs)


def divisor_to_json(D):
    return [{"point": str(p.base), "copy": p.copy_index, "coeff": c}
            for p, c in D.sorted_items()]


# ---------------------------------------------------------------------------
# orders and divisors of rational functions


def order_at(f, p):
    """Vanishing order of f at a point of the line (negative at poles)."""
    if f.is_zero():
        raise ZeroFunction("the zero function has no order")
    if p.is_infinity():
        return f.den.degree - f.num.degree
    a = p.value
    return f.num.root_multiplicity(a) - f.den.root_multiplicity(a)


def _divisors_of(n):
    n = abs(int(n))
    if n == 0:
        raise ValueError("no divisors of zero")
    out = [1]
    for prime, e in sympy.factorint(n).items():
        prime = int(prime)
        out = [d * prime ** k for d in out for k in range(e + 1)]
    return sorted(out)


def rational_roots(poly):
    """All rational roots with multiplicities, plus the rootless remainder.

    Returns (roots, residual_degree) where roots maps Fraction -> int and
    residual_degree counts the part of the polynomial without rational zeros.
    """
    if poly.is_zero():
        raise ZeroFunction("zero polynomial")
    roots = {}
    coeffs = list(poly.coeffs)
    # roots at zero first
    k = 0
    while coeffs[k] == 0:
        k += 1
    if k:
        roots[Fraction(0)] = k
        coeffs = coeffs[k:]
    if len(coeffs) == 1:
        return roots, 0
    # clear denominators for the rational root bound
    denlcm = 1
    for c in coeffs:
        denlcm = denlcm * c.denominator // math.gcd(denlcm, c.denominator)
    ints = [int(c * denlcm) for c in coeffs]
    p = UniPoly(coeffs)
    candidates = set()
    for num in _divisors_of(ints[0]):
        for den in _divisors_of(ints[-1]):
            candidates.add(Fraction(num, den))
            candidates.add(Fraction(-num, den))
    for cand in sorted(candidates):
        if p.degree == 0:
            break
        if p.eval(cand) == 0:
            m = 0
            linear = UniPoly([-cand, Fraction(1)])
            while True:
                q, r = divmod(p, linear)
                if not r.is_zero():
                    break
                p = q
                m += 1
            roots[cand] = m
    return roots, p.degree


def principal_divisor(f, X):
    """Divisor of zeros and poles of f on the curve.

    The order at a special base point is repeated at every copy.  Rational
    functions whose zeros or poles are not defined over the rationals are
    rejected: such points cannot be addressed on this curve.
    """
    if f.is_zero():
        raise ZeroFunction("the zero function has no divisor")
    orders = {}
    num_roots, num_res = rational_roots(f.num)
    den_roots, den_res = rational_roots(f.den)
    if num_res or den_res:
        raise ValueError("function has zeros or poles at irrational points")
    for a, m in num_roots.items():
        orders[P1Point.finite(a)] = m
    for a, m in den_roots.items():
        orders[P1Point.finite(a)] = orders.get(P1Point.finite(a), 0) - m
    inf_ord = f.den.degree - f.num.degree
    if inf_ord:
        orders[P1Point.infinity()] = inf_ord
    coeffs = {}
    for base, order in orders.items():
        if order:
            for point in X.copies(base):
                coeffs[point] = order
    return Divisor(coeffs)


def min_divisor(X, D):
    """Pointwise minimum over all copies, including implicit zero copies.

    Returns a map base point -> coefficient on the underlying line, with zero
    entries dropped.
    """
    bases = {}
    for point, c in D.coefficients.items():
        X.validate_point(point)
        bases.setdefault(point.base, {})[point.copy_index] = c
    out = {}
    for base, per_copy in bases.items():
        m = X.multiplicity(base)
        value = min(per_copy.get(i, 0) for i in range(m))
        if value:
            out[base] = value
    return out


def min_degree(X, D):
    return sum(min_divisor(X, D).values())


class SectionSpace:
    """Exact basis of the sections of a divisor.

    Basis elements are V * z^j / W for j = 0 .. deg_min, where W collects the
    allowed finite poles and V the forced finite vanishing; the number of
    sections is deg_min + 1 (empty when negative).
    """

    __slots__ = ("divisor", "basis", "_vpoly", "_wpoly", "_dim")

    def __init__(self, divisor, basis, vpoly=None, wpoly=None):
        object.__setattr__(self, "divisor", divisor)
        object.__setattr__(self, "basis", tuple(basis))
        object.__setattr__(self, "_vpoly", vpoly)
        object.__setattr__(self, "_wpoly", wpoly)
        object.__setattr__(self, "_dim", len(self.basis))

    def __setattr__(self, name, value):
        raise AttributeError("SectionSpace is immutable")

    @property
    def dim(self):
        return self._dim

    def coordinates_of(self, f):
        """Coordinates of f in the stored basis, or None when f is outside.

        The structured basis makes this a polynomial division: f belongs to
        the space iff f * W is a polynomial multiple of V of degree at most
        deg V + dim - 1.
        """
        if f.is_zero():
            return (Fraction(0),) * self._dim
        if self._dim == 0:
            return None
        g = f * RationalFunction(self._wpoly)
        if g.den.degree != 0:
            return None
        scaled = g.num * (Fraction(1) / g.den.coeffs[0])
        q, r = divmod(scaled, self._vpoly)
        if not r.is_zero():
            return None
        if q.degree >= self._dim:
            return None
        coords = list(q.coeffs) + [Fraction(0)] * (self._dim - len(q.coeffs))
        return tuple(coords)

    def contains(self, f):
        return self.coordinates_of(f) is not None

    def __repr__(self):
        return "SectionSpace(dim=%d, divisor=%s)" % (self._dim, self.divisor)


def section_space(X, D):
    """Basis of {f : div(f) + D >= 0 on X}, of dimension deg_min + 1.

    Every returned element is re-verified against its principal divisor.
    """
    mind = min_divisor(X, D)
    degmin = sum(mind.values())
    wpoly = UniPoly.one()
    vpoly = UniPoly.one()
    for base in sorted(mind, key=lambda b: b.sort_key()):
        c = mind[base]
        if base.is_infinity():
            continue
        linear = UniPoly([-base.value, Fraction(1)])
        if c > 0:
            wpoly = wpoly * linear ** c
        else:
            vpoly = vpoly * linear ** (-c)
    if degmin < 0:
        return SectionSpace(D, [], vpoly, wpoly)
    basis = []
    for j in range(degmin + 1):
        f = RationalFunction(vpoly * UniPoly.z() ** j, wpoly)
        div = principal_divisor(f, X)
        if not (div + D).is_effective():
            raise InternalInconsistency(
                "constructed section fails its order conditions")
        basis.append(f)
    return SectionSpace(D, basis, vpoly, wpoly)


# ---------------------------------------------------------------------------
# Picard group


def _linear_at(base):
    """z - a for finite base, the constant 1 for infinity."""
    if base.is_infinity():
        return RationalFunction.one()
    return RationalFunction(UniPoly([-base.value, Fraction(1)]))


class PicardData:
    """Picard group of a glued curve, presented on divisors supported on
    special copies modulo the lattice of principal special divisors."""

    __slots__ = ("curve", "group", "_n")

    def __init__(self, X):
        if not X.special:
            raise ValueError(
                "presenting Pic needs at least one special point; mark one "
                "ordinary point with multiplicity 1")
        n = len(X.special_copies())
        relations = []
        first, m0 = X.special[0]
        for p, m in X.special[1:]:
            vec = [0] * n
            for point in X.copies(p):
                vec[X.copy_position(point)] += 1
            for point in X.copies(first):
                vec[X.copy_position(point)] -= 1
            relations.append(tuple(vec))
        object.__setattr__(self, "curve", X)
        object.__setattr__(self, "group", FGAbelianGroup(n, relations))
        object.__setattr__(self, "_n", n)

    def __setattr__(self, name, value):
        raise AttributeError("PicardData is immutable")

    def class_of(self, D):
        """Ambient class vector of a divisor, moving ordinary support onto
        copies of the first special point."""
        X = self.curve
        vec = [0] * self._n
        anchor = X.special[0][0]
        for point, c in D.coefficients.items():
            X.validate_point(point)
            if X.is_special(point.base):
                vec[X.copy_position(point)] += c
            else:
                # an ordinary point is linearly equivalent to the full set of
                # copies of the anchor special point
                for cp in X.copies(anchor):
                    vec[X.copy_position(cp)] += c
        return tuple(vec)

    def divisor_of_vector(self, vec):
        coeffs = {}
        for point in self.curve.special_copies():
            c = int(vec[self.curve.copy_position(point)])
            if c:
                coeffs[point] = c
        return Divisor(coeffs)

    def moving_witness(self, D):
        """g with div(g) = D - M where M is the special-supported divisor
        given by class_of's moving step (identity on special support)."""
        X = self.curve
        anchor = X.special[0][0]
        g = RationalFunction.one()
        for point, c in D.coefficients.items():
            if not X.is_special(point.base):
                move = _linear_at(point.base) / _linear_at(anchor)
                g = g * move ** c
        return g


def picard_group(X):
    """The Picard group with its class map.

    Returns (Pic, class_of) where class_of sends a divisor to its ambient
    class vector; class_of of any principal divisor is zero.
    """
    data = PicardData(X)
    return data.group, data.class_of


def is_principal(X, D, _data=None):
    """Witness g with div(g) = D exactly, or a NotPrincipal error certified
    by the nonzero Picard class."""
    data = _data if _data is not None else PicardData(X)
    vec = data.class_of(D)
    if not data.group.contains_zero(vec):
        raise NotPrincipal(vec)
    # peel off ordinary support
    g = data.moving_witness(D)
    if g.is_zero():
        raise InternalInconsistency("moving witness vanished")
    rem = D - principal_divisor(g, X)
    # rem is supported on special copies with equal coefficients per base
    base_coeff = {}
    for point, c in rem.coefficients.items():
        b = base_coeff.setdefault(point.base, c)
        if b != c:
            raise InternalInconsistency(
                "class-zero divisor with unequal copy coefficients")
    for base, c in base_coeff.items():
        if not X.is_special(base):
            raise InternalInconsistency("residual support off special points")
        for point in X.copies(base):
            if rem.coefficient(point) != c:
                raise InternalInconsistency(
                    "class-zero divisor missing a copy")
    anchor = X.special[0][0]
    for base, c in sorted(base_coeff.items(), key=lambda kv: kv[0].sort_key()):
        if base == anchor:
            continue
        ratio = _linear_at(base) / _linear_at(anchor)
        g = g * ratio ** c
    witness = g
    if principal_divisor(witness, X) != D:
        raise InternalInconsistency("principal witness fails verification")
    return witness
