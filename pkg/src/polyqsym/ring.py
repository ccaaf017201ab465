"""The rings of polytopes under direct product and join.

FormalSum is an integer combination of canonical polytopes.  The ambient
tag distinguishes the product ring (unit: the point, empty polytope
forbidden) from the join ring (unit: the empty polytope).  Face operators,
characters, cone/bipyramid operators, the join-ring antipode and the
comodule coactions all live here as functions on FormalSums.
"""

from __future__ import annotations

import threading

from . import polytopes as pb
from .polys import AlphaPoly

PRODUCT_RING = "P"
JOIN_RING = "RP"


class FormalSum:
    __slots__ = ("ambient", "terms")

    def __init__(self, ambient, terms=None):
        if ambient not in (PRODUCT_RING, JOIN_RING):
            raise ValueError("ambient must be %r or %r"
                             % (PRODUCT_RING, JOIN_RING))
        self.ambient = ambient
        t = {}
        if terms:
            for poly, coeff in (terms.items() if isinstance(terms, dict)
                                else terms):
                coeff = int(coeff)
                if not coeff:
                    continue
                if ambient == PRODUCT_RING and poly.is_empty():
                    raise ValueError("the empty polytope is not an element "
                                     "of the product ring")
                w = t.get(poly, 0) + coeff
                if w:
                    t[poly] = w
                else:
                    del t[poly]
        self.terms = t

    @classmethod
    def of(cls, poly, ambient=PRODUCT_RING, coeff=1):
        return cls(ambient, {poly: coeff})

    @classmethod
    def zero(cls, ambient=PRODUCT_RING):
        return cls(ambient)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return (isinstance(other, FormalSum) and self.ambient == other.ambient
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.ambient, frozenset(
            (p.key, c) for p, c in self.terms.items())))

    def _check(self, other):
        if not isinstance(other, FormalSum):
            raise TypeError("expected a FormalSum")
        if self.ambient != other.ambient:
            raise ValueError("ambient mismatch: %s vs %s"
                             % (self.ambient, other.ambient))

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for p, c in other.terms.items():
            w = out.get(p, 0) + c
            if w:
                out[p] = w
            else:
                del out[p]
        return FormalSum(self.ambient, out)

    def __neg__(self):
        return FormalSum(self.ambient,
                         {p: -c for p, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, k):
        if not isinstance(k, int):
            raise TypeError("scalars are integers")
        return FormalSum(self.ambient,
                         {p: c * k for p, c in self.terms.items()})

    __rmul__ = __mul__

    def dims(self):
        return sorted({p.dim for p in self.terms})

    def max_dim(self):
        return max((p.dim for p in self.terms), default=-1)

    def is_homogeneous(self):
        return len(self.dims()) <= 1

    def graded_piece(self, dim):
        return FormalSum(self.ambient, {p: c for p, c in self.terms.items()
                                        if p.dim == dim})

    def bigraded_piece(self, dim, facets):
        """Piece of the product-ring bigrading (dimension, facet count)."""
        return FormalSum(self.ambient,
                         {p: c for p, c in self.terms.items()
                          if p.dim == dim and p.facet_count == facets})

    def map_terms(self, fn):
        out = FormalSum(self.ambient)
        for p, c in self.terms.items():
            out = out + c * fn(p)
        return out

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        order = sorted(self.terms.items(),
                       key=lambda pc: (pc[0].dim, pc[0].name or "", pc[0].key))
        for p, c in order:
            label = p.name or ("<dim %d, %d faces>" % (p.dim, p.lattice.n))
            if c == 1:
                frag = label
            elif c == -1:
                frag = "-%s" % label
            else:
                frag = "%d*%s" % (c, label)
            bits.append(frag)
        text = " + ".join(bits)
        return text.replace("+ -", "- ")


def to_ambient(s, ambient):
    return FormalSum(ambient, s.terms)


# -- ring multiplications -------------------------------------------------


def mul_product(a, b):
    a._check(b)
    out = FormalSum(a.ambient)
    for p, cp in a.terms.items():
        for q, cq in b.terms.items():
            out = out + FormalSum.of(pb.product(p, q), a.ambient, cp * cq)
    return out


def mul_join(a, b):
    a._check(b)
    out = FormalSum(a.ambient)
    for p, cp in a.terms.items():
        for q, cq in b.terms.items():
            out = out + FormalSum.of(pb.join(p, q), a.ambient, cp * cq)
    return out


# -- face operators -------------------------------------------------------

_dk_lock = threading.Lock()
_dk_cache = {}


def _face_classes(poly, k):
    """Codimension-k faces of a single polytope, collected by class."""
    key = (poly.key, k)
    with _dk_lock:
        hit = _dk_cache.get(key)
    if hit is not None:
        return hit
    counts = {}
    for _, f in pb.faces(poly, poly.dim - k):
        counts[f] = counts.get(f, 0) + 1
    result = tuple(counts.items())
    with _dk_lock:
        _dk_cache.setdefault(key, result)
    return result


def d_k(s, k):
    """Sum of codimension-k faces; k = dim+1 yields the empty polytope in
    the join ring and nothing in the product ring."""
    if k <= 0:
        raise ValueError("face operators need k >= 1")
    out = FormalSum(s.ambient)
    for poly, coeff in s.terms.items():
        n = poly.dim
        if n == -1 or k > n + 1:
            continue
        if k == n + 1:
            if s.ambient == JOIN_RING:
                out = out + FormalSum.of(pb.empty(), s.ambient, coeff)
            continue
        for f, mult in _face_classes(poly, k):
            out = out + FormalSum.of(f, s.ambient, coeff * mult)
    return out


def phi_poly(s):
    """Coefficient list of the face-operator series: [s, d_1 s, d_2 s, ...]
    up to degree max dim + 1."""
    out = [s]
    for k in range(1, s.max_dim() + 2):
        out.append(d_k(s, k))
    return out


def apply_operator(word, s):
    """Compose face operators right-to-left: word (j_1, .., j_l) acts as
    d_{j_1} after ... after d_{j_l}."""
    if any(j < 1 for j in word):
        raise ValueError("operator word parts must be >= 1")
    for j in reversed(word):
        if s.is_zero():
            break
        s = d_k(s, j)
    return s


# -- characters -----------------------------------------------------------


def xi_alpha(s):
    """Dimension character of the product ring."""
    out = AlphaPoly()
    for p, c in s.terms.items():
        if p.is_empty():
            raise ValueError("dimension character undefined on the empty "
                             "polytope")
        out = out + AlphaPoly.term(p.dim, c)
    return out


def epsilon_alpha(s):
    """Rank character of the join ring; at 0 it is the counit."""
    out = AlphaPoly()
    for p, c in s.terms.items():
        out = out + AlphaPoly.term(p.dim + 1, c)
    return out


def counit(s):
    return epsilon_alpha(s).coeff(0)


# -- cone / bipyramid / duality -------------------------------------------


def cone_op(s):
    return s.map_terms(lambda p: FormalSum.of(pb.cone(p), s.ambient))


def bipyramid_op(s):
    return s.map_terms(lambda p: FormalSum.of(pb.bipyramid(p), s.ambient))


def a_op(s):
    return 2 * cone_op(s) - bipyramid_op(s)


def dual_sum(s):
    return s.map_terms(lambda p: FormalSum.of(pb.dual(p), s.ambient))


def delta_derivation(s):
    """The conjugate derivation: dualize, take facets, dualize back."""
    if s.ambient != JOIN_RING:
        raise ValueError("the conjugate derivation lives in the join ring")
    return dual_sum(d_k(dual_sum(s), 1))


# -- join-ring Hopf structure ----------------------------------------------


def _interval_polytope(poly, x, y):
    return pb.canonical(pb.Polytope(poly.lattice.interval(x, y)))


def hopf_coproduct_pairs(poly):
    """All (face, quotient) pairs of the join-ring comultiplication,
    including the empty face and the polytope itself."""
    lat = poly.lattice
    return [(_interval_polytope(poly, lat.bottom, z),
             _interval_polytope(poly, z, lat.top)) for z in range(lat.n)]


def antipode_rp(s):
    """Chain-sum antipode of the join ring: alternating sum over strictly
    increasing flags from the empty face to the top, each contributing the
    join of its interval quotients."""
    if s.ambient != JOIN_RING:
        raise ValueError("the antipode lives in the join ring")

    def chi(poly):
        lat = poly.lattice
        if lat.n == 1:
            return FormalSum.of(pb.empty(), JOIN_RING)
        out = FormalSum(JOIN_RING)

        def walk(x, acc, length):
            nonlocal out
            if x == lat.top:
                sign = -1 if length % 2 else 1
                term = FormalSum.of(pb.empty(), JOIN_RING, sign)
                for piece in acc:
                    term = mul_join(term, FormalSum.of(piece, JOIN_RING))
                out = out + term
                return
            for y in range(lat.n):
                if y != x and lat.leq(x, y):
                    walk(y, acc + [_interval_polytope(poly, x, y)],
                         length + 1)

        walk(lat.bottom, [], 0)
        return out

    return s.map_terms(chi)


def comodule_pairs(poly):
    """Coaction of the join ring on the product ring: one (face, quotient)
    pair per nonempty face."""
    if poly.dim < 0:
        raise ValueError("defined for nonempty polytopes")
    lat = poly.lattice
    return [(_interval_polytope(poly, lat.bottom, z),
             _interval_polytope(poly, z, lat.top))
            for z in range(lat.n) if z != lat.bottom]


def l_alpha(poly):
    """Group the face quotients by face dimension: {power: sum of P/F}."""
    out = {}
    for face, quot in comodule_pairs(poly):
        p = out.setdefault(face.dim, FormalSum(JOIN_RING))
        out[face.dim] = p + FormalSum.of(quot, JOIN_RING)
    return out


def compositions(total):
    """All compositions of `total` (ordered tuples of positive parts)."""
    if total == 0:
        return [()]
    out = []
    for first in range(1, total + 1):
        for rest in compositions(total - first):
            out.append((first,) + rest)
    return out


def coaction(s):
    """Word-indexed coaction: all (composition, operator result) pairs with
    nonzero result; weight runs to dim in the product ring and dim+1 in
    the join ring."""
    bound = s.max_dim() + (2 if s.ambient == JOIN_RING else 1)
    out = []
    for total in range(max(bound, 1)):
        for word in compositions(total):
            r = apply_operator(word, s)
            if not r.is_zero():
                out.append((word, r))
    return out
