"""Combinatorial polytopes as canonicalized face lattices.

A Polytope wraps a GradedPoset whose bottom is the empty face and whose top
is the polytope itself, so dim = height - 1.  The empty polytope (dim -1,
one-element lattice) is a first-class value: it is the unit of the join
ring.  All constructions funnel through a global registry keyed by the
canonical key, so equal combinatorial types are the same object and carry a
shared flag-number cache.
"""

from __future__ import annotations

import itertools
import threading

from .posets import GradedPoset, PosetError, boolean_lattice, poset_product

_registry_lock = threading.Lock()
_registry = {}


class Polytope:
    __slots__ = ("lattice", "dim", "name", "_key", "_flags", "_name_pref")

    def __init__(self, lattice, name=None):
        self.lattice = lattice
        self.dim = lattice.height - 1
        self.name = name
        self._key = None
        self._flags = {}
        self._name_pref = False

    @property
    def key(self):
        if self._key is None:
            self._key = self.lattice.canonical_key()
        return self._key

    def __hash__(self):
        return hash(self.key)

    def __eq__(self, other):
        return isinstance(other, Polytope) and self.key == other.key

    def __repr__(self):
        if self.name:
            return "Polytope(%s)" % self.name
        return "Polytope(dim=%d, faces=%d)" % (self.dim, self.lattice.n)

    @property
    def vertex_count(self):
        return len(self.lattice.elements_of_rank(1))

    @property
    def facet_count(self):
        return len(self.lattice.elements_of_rank(self.lattice.height - 1))

    def is_empty(self):
        return self.dim == -1

    def to_json_obj(self):
        obj = self.lattice.to_json_obj()
        obj["dim"] = self.dim
        return obj

    @classmethod
    def from_json_obj(cls, obj):
        lat = GradedPoset.from_json_obj(obj)
        p = canonical(cls(lat))
        if "dim" in obj and obj["dim"] != p.dim:
            raise PosetError("dim field disagrees with the lattice height")
        return p


def canonical(poly, name=None, prefer=False):
    """Global dedup: the first Polytope seen for a key wins.  A preferred
    name (catalogue generators) replaces a synthesized one."""
    key = poly.key
    with _registry_lock:
        existing = _registry.get(key)
        if existing is not None:
            newname = name or poly.name
            if newname and (existing.name is None
                            or (prefer and not existing._name_pref)):
                existing.name = newname
                existing._name_pref = prefer
            return existing
        if name and poly.name is None:
            poly.name = name
        poly._name_pref = prefer
        _registry[key] = poly
        return poly


def registry_polytope(key):
    with _registry_lock:
        return _registry.get(key)


def registry_snapshot():
    with _registry_lock:
        items = list(_registry.values())
    return [{"name": p.name, "dim": p.dim, **p.lattice.to_json_obj()}
            for p in items]


def registry_restore(entries):
    count = 0
    for obj in entries:
        lat = GradedPoset.from_json_obj(obj)
        canonical(Polytope(lat), name=obj.get("name"))
        count += 1
    return count


# -- named generators ---------------------------------------------------


def empty():
    return canonical(Polytope(GradedPoset([0], [])), "empty", prefer=True)


def point():
    return canonical(Polytope(GradedPoset([0, 1], [(0, 1)])), "pt", prefer=True)


def simplex(n):
    if n < 0:
        raise ValueError("simplex(n) needs n >= 0")
    return canonical(Polytope(boolean_lattice(n + 1)), "simplex(%d)" % n,
                     prefer=True)


def segment():
    return canonical(Polytope(boolean_lattice(2)), "cube(1)", prefer=True)


def cube(n):
    if n < 1:
        raise ValueError("cube(n) needs n >= 1")
    p = segment()
    for _ in range(n - 1):
        p = product(p, segment())
    return canonical(p, "cube(%d)" % n, prefer=True)


def cross(n):
    """n-fold bipyramid over a point."""
    if n < 1:
        raise ValueError("cross(n) needs n >= 1")
    p = point()
    for _ in range(n):
        p = bipyramid(p)
    return canonical(p, "cross(%d)" % n, prefer=True)


def polygon(m):
    if m < 3:
        raise ValueError("polygon(m) needs m >= 3")
    # 0 = empty face, 1..m vertices, m+1..2m edges, 2m+1 top
    ranks = [0] + [1] * m + [2] * m + [3]
    covers = [(0, 1 + i) for i in range(m)]
    for j in range(m):
        covers.append((1 + j, 1 + m + j))
        covers.append((1 + (j + 1) % m, 1 + m + j))
        covers.append((1 + m + j, 2 * m + 1))
    return canonical(Polytope(GradedPoset(ranks, covers)), "polygon(%d)" % m,
                     prefer=True)


def _cell24_incidence():
    """Vertex sets of the 24 octahedral facets (coordinates doubled so the
    supporting functionals evaluate to the integer 2)."""
    verts = []
    for i in range(4):
        for s in (2, -2):
            v = [0, 0, 0, 0]
            v[i] = s
            verts.append(tuple(v))
    for signs in itertools.product((1, -1), repeat=4):
        verts.append(signs)
    facets = []
    for i in range(4):
        for j in range(i + 1, 4):
            for s in (1, -1):
                for t in (1, -1):
                    facets.append(frozenset(
                        k for k, x in enumerate(verts) if s * x[i] + t * x[j] == 2))
    return facets


def cell24():
    p = registry_by_name("cell24")
    if p is not None:
        return p
    return canonical(from_incidence(_cell24_incidence()), "cell24",
                     prefer=True)


_name_lock = threading.Lock()
_by_name = {}


def registry_by_name(name):
    with _name_lock:
        return _by_name.get(name)


def _remember_name(name, poly):
    with _name_lock:
        _by_name[name] = poly
    return poly


def build_named(name, *params):
    """Catalogue entry point: empty | pt | simplex(n) | cube(n) | cross(n)
    | polygon(m) | cell24."""
    request = (name,) + tuple(params)
    cached = registry_by_name(repr(request))
    if cached is not None:
        return cached
    makers = {"empty": (empty, 0), "pt": (point, 0), "simplex": (simplex, 1),
              "cube": (cube, 1), "cross": (cross, 1), "polygon": (polygon, 1),
              "cell24": (cell24, 0)}
    if name not in makers:
        raise ValueError("unknown polytope name %r" % name)
    fn, arity = makers[name]
    if len(params) != arity:
        raise ValueError("%s takes %d parameter(s)" % (name, arity))
    return _remember_name(repr(request), fn(*params))


def from_word(word):
    """Apply a word over {B, C} right-to-left to the empty polytope."""
    if not word:
        raise ValueError("empty operator word")
    if any(ch not in "BC" for ch in word):
        raise ValueError("operator word must use letters B and C only")
    cached = registry_by_name("word(%s)" % word)
    if cached is not None:
        return cached
    p = empty()
    for ch in reversed(word):
        p = cone(p) if ch == "C" else bipyramid(p)
    return _remember_name("word(%s)" % word,
                          canonical(p, "word(%s)" % word, prefer=True))


def from_incidence(facet_vertex_sets):
    """Face lattice from facet vertex sets, by intersection closure.

    Validates that the closure is a graded Eulerian lattice; arbitrary set
    systems are rejected.
    """
    facets = [frozenset(f) for f in facet_vertex_sets]
    if not facets:
        raise ValueError("need at least one facet")
    allv = frozenset().union(*facets)
    for f in facets:
        for g in facets:
            if f < g:
                raise ValueError("one facet contains another")
    faces = set(facets)
    work = list(facets)
    while work:
        nxt = []
        for a in work:
            for b in facets:
                c = a & b
                if c not in faces:
                    faces.add(c)
                    nxt.append(c)
        work = nxt
    faces.add(frozenset())
    faces.add(allv)
    faces = sorted(faces, key=lambda f: (len(f), tuple(sorted(f))))
    index = {f: i for i, f in enumerate(faces)}
    covers = []
    for i, f in enumerate(faces):
        subs = [g for g in faces if len(g) < len(f) and g < f]
        maxsubs = [g for g in subs if not any(g < h for h in subs)]
        covers.extend((index[g], i) for g in maxsubs)
    # longest-chain ranks; gradedness means every cover then raises by one
    ranks = [0] * len(faces)
    up = [[] for _ in faces]
    for a, b in covers:
        up[a].append(b)
    for i in range(len(faces)):
        for b in up[i]:
            ranks[b] = max(ranks[b], ranks[i] + 1)
    if any(ranks[b] != ranks[a] + 1 for a, b in covers):
        raise ValueError("not a valid polytope incidence: closure not graded")
    try:
        lattice = GradedPoset(ranks, covers)
    except PosetError as exc:
        raise ValueError("not a valid polytope incidence: %s" % exc) from None
    if not lattice.is_eulerian():
        raise ValueError("not a valid polytope incidence: closure not Eulerian")
    return canonical(Polytope(lattice))


# -- constructions ------------------------------------------------------


def _synth_name(fmt, *polys):
    names = [p.name for p in polys]
    if all(names):
        return fmt % tuple(names)
    return None


def product(p, q):
    """Direct product; nonempty faces are pairs of nonempty faces."""
    if p.is_empty() or q.is_empty():
        raise ValueError("product is defined on nonempty polytopes")
    lp, lq = p.lattice, q.lattice
    nonp = [x for x in range(lp.n) if x != lp.bottom]
    nonq = [y for y in range(lq.n) if y != lq.bottom]
    index = {}
    ranks = [0]
    for x in nonp:
        for y in nonq:
            index[(x, y)] = len(ranks)
            ranks.append(lp.ranks[x] + lq.ranks[y] - 1)
    covers = []
    for v in lp.up_covers(lp.bottom):
        for w in lq.up_covers(lq.bottom):
            covers.append((0, index[(v, w)]))
    for a, b in lp.covers:
        if a == lp.bottom:
            continue
        for y in nonq:
            covers.append((index[(a, y)], index[(b, y)]))
    for x in nonp:
        for a, b in lq.covers:
            if a == lq.bottom:
                continue
            covers.append((index[(x, a)], index[(x, b)]))
    poly = Polytope(GradedPoset(ranks, covers))
    return canonical(poly, _synth_name("prod(%s,%s)", p, q))


def join(p, q):
    """Join: the face lattice is the product of the face lattices."""
    poly = Polytope(poset_product(p.lattice, q.lattice))
    return canonical(poly, _synth_name("join(%s,%s)", p, q))


def cone(p):
    c = join(point(), p)
    return canonical(c, _synth_name("C %s", p))


def bipyramid(p):
    """Double cone, built from the face-lattice description: proper faces F
    of P survive, each acquires two cones, and a new top is added."""
    if p.is_empty():
        return point()
    lat = p.lattice
    proper = [x for x in range(lat.n) if x != lat.top]
    base = {x: i for i, x in enumerate(proper)}
    m = len(proper)
    conei = {(s, x): m + 2 * base[x] + s for x in proper for s in (0, 1)}
    newtop = 3 * m
    ranks = [0] * (3 * m + 1)
    for x in proper:
        ranks[base[x]] = lat.ranks[x]
        ranks[conei[(0, x)]] = lat.ranks[x] + 1
        ranks[conei[(1, x)]] = lat.ranks[x] + 1
    ranks[newtop] = lat.height + 1
    covers = []
    for a, b in lat.covers:
        if b == lat.top:
            covers.append((conei[(0, a)], newtop))
            covers.append((conei[(1, a)], newtop))
            continue
        covers.append((base[a], base[b]))
        covers.append((conei[(0, a)], conei[(0, b)]))
        covers.append((conei[(1, a)], conei[(1, b)]))
    for x in proper:
        covers.append((base[x], conei[(0, x)]))
        covers.append((base[x], conei[(1, x)]))
    poly = Polytope(GradedPoset(ranks, covers))
    return canonical(poly, _synth_name("B %s", p))


def dual(p):
    poly = Polytope(p.lattice.dual())
    return canonical(poly, _synth_name("dual(%s)", p))


def face_polytope(p, face):
    """Quotient P/F: the interval [F, P] of the face lattice."""
    lat = p.lattice
    if not (0 <= face < lat.n):
        raise ValueError("face index out of range")
    return canonical(Polytope(lat.interval(face, lat.top)))


def face_as_polytope(p, face):
    """The face F itself: the interval [empty, F]."""
    lat = p.lattice
    if not (0 <= face < lat.n):
        raise ValueError("face index out of range")
    return canonical(Polytope(lat.interval(lat.bottom, face)))


def faces(p, k):
    """All k-dimensional faces as (lattice element, Polytope) pairs."""
    if k < -1 or k > p.dim:
        return []
    return [(x, face_as_polytope(p, x))
            for x in p.lattice.elements_of_rank(k + 1)]


# -- flag numbers ---------------------------------------------------------


def _normalize_flag_set(p, subset):
    s = set(subset)
    s.discard(-1)
    s.discard(p.dim)
    for a in s:
        if not isinstance(a, int) or a < 0 or a >= p.dim:
            raise ValueError("flag set entry %r out of range for dim %d"
                             % (a, p.dim))
    return tuple(sorted(s))


def flag_number(p, subset):
    """Number of strictly increasing face chains hitting exactly the
    dimensions in `subset` (convention: -1 and dim are dropped)."""
    s = _normalize_flag_set(p, subset)
    if s in p._flags:
        return p._flags[s]
    lat = p.lattice
    lat._ensure_masks()
    target_ranks = [a + 1 for a in s]
    count_vec = None
    prev_rank = None
    for r in target_ranks:
        stratum = lat.elements_of_rank(r)
        if count_vec is None:
            count_vec = {x: 1 for x in stratum}
        else:
            nxt = {}
            prev_mask = lat.rank_mask(prev_rank)
            for y in stratum:
                m = lat.downset_mask(y) & prev_mask
                total = 0
                while m:
                    lsb = m & -m
                    total += count_vec[lsb.bit_length() - 1]
                    m ^= lsb
                nxt[y] = total
            count_vec = nxt
        prev_rank = r
    value = 1 if count_vec is None else sum(count_vec.values())
    p._flags[s] = value
    return value


def flag_vector(p):
    """All flag numbers f_S, S a subset of {0, .., dim-1}."""
    if p.dim < 0:
        return {(): 1}
    out = {}
    dims = range(p.dim)
    for k in range(p.dim + 1):
        for s in itertools.combinations(dims, k):
            out[s] = flag_number(p, s)
    return out


def f_vector(p):
    return [flag_number(p, (i,)) for i in range(max(p.dim, 0))]
