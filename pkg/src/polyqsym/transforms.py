"""Flag-vector transforms into quasi-symmetric functions and back.

The dimension-graded generating function of the flag numbers is computed by
two independent routes (straight from the flag vector, and through iterated
face-operator series); the poset transform is computed by chain counting
and by the flag formula.  The substitution identities cutting out the
images, the sparse-flag basis with its unimodular matrix, the projection
onto it, and the cone/bipyramid operators on the quasi-symmetric side all
live here.
"""

from __future__ import annotations

import itertools
import threading

from . import polytopes as pb
from .intlinalg import det_bareiss, solve_exact
from .ncalg import DualFunctional, basis_words
from .polys import AlphaPoly, MultiPoly
from .qsym import QSym, lift_from_expansion
from .ring import (FormalSum, JOIN_RING, PRODUCT_RING, apply_operator,
                   compositions, d_k, epsilon_alpha, xi_alpha)


# -- generalized flag polynomial --------------------------------------------


def composition_of_flag_set(n, s):
    """Composition attached to a flag set {a_1 < .. < a_k} in dimension n:
    (n - a_k, a_k - a_{k-1}, .., a_2 - a_1)."""
    s = tuple(sorted(s))
    if not s:
        return ()
    gaps = [n - s[-1]]
    for i in range(len(s) - 1, 0, -1):
        gaps.append(s[i] - s[i - 1])
    return tuple(gaps)


def f_poly_from_flags(n, flags):
    """Assemble the flag polynomial from a dimension and a full flag-number
    table {subset: value}."""
    out = QSym()
    for s, value in flags.items():
        if not value:
            continue
        alpha = s[0] if s else n
        out = out + QSym.monomial(composition_of_flag_set(n, s), value,
                                  alpha=alpha)
    return out


def f_poly(s):
    """Flag route: linear extension over the terms."""
    if isinstance(s, pb.Polytope):
        s = FormalSum.of(s, PRODUCT_RING)
    out = QSym()
    for poly, coeff in s.terms.items():
        if poly.is_empty():
            raise ValueError("flag polynomial is defined on the product ring")
        out = out + coeff * f_poly_from_flags(poly.dim, pb.flag_vector(poly))
    return out


def f_poly_operator_route(poly, r):
    """Operator route: the dimension character of the r-fold iterated
    face-operator series, one fresh variable per application."""
    state = {(0,) * r: FormalSum.of(poly, PRODUCT_RING)}
    for step in range(r):
        nxt = {}
        for exps, s in state.items():
            pieces = [s]
            for k in range(1, s.max_dim() + 2):
                pieces.append(d_k(s, k))
            for k, piece in enumerate(pieces):
                if piece.is_zero():
                    continue
                e = list(exps)
                e[step] = k
                key = tuple(e)
                nxt[key] = nxt.get(key, FormalSum(PRODUCT_RING)) + piece
        state = nxt
    terms = {}
    for exps, s in state.items():
        for power, c in xi_alpha(s).c.items():
            key = (power, exps)
            terms[key] = terms.get(key, 0) + c
    return MultiPoly(r, terms)


# -- poset transform ---------------------------------------------------------


def ehrenborg_F(s):
    """Chain transform of the face lattice; computed both by chain sums and
    from the flag vector, with the two answers compared."""
    if isinstance(s, pb.Polytope):
        s = FormalSum.of(s, JOIN_RING)
    out = QSym()
    for poly, coeff in s.terms.items():
        chain = _ehrenborg_chain_route(poly)
        flag = _ehrenborg_flag_route(poly)
        if chain != flag:
            raise AssertionError("chain and flag routes disagree on %r" % poly)
        out = out + coeff * chain
    return out


def _ehrenborg_chain_route(poly):
    lat = poly.lattice
    lat._ensure_masks()
    out = QSym()
    stack = [(lat.bottom, ())]
    while stack:
        x, gaps = stack.pop()
        if x == lat.top:
            out = out + QSym.monomial(gaps)
            continue
        for y in range(lat.n):
            if y != x and lat.leq(x, y):
                stack.append((y, gaps + (lat.ranks[y] - lat.ranks[x],)))
    return out


def _ehrenborg_flag_route(poly):
    n = poly.dim
    if n < 0:
        return QSym.one()
    out = QSym()
    for s, value in pb.flag_vector(poly).items():
        comp = [a + 1 for a in s[:1]] + \
               [s[i] - s[i - 1] for i in range(1, len(s))] + [n - s[-1]] \
               if s else [n + 1]
        out = out + QSym.monomial(tuple(comp), value)
    return out


def f_rp(s):
    """Rank-character transform of the join ring, by the word coaction; the
    decomposition into the poset transform plus the graded flag polynomial
    is asserted for each term."""
    if isinstance(s, pb.Polytope):
        s = FormalSum.of(s, JOIN_RING)
    out = QSym()
    for poly, coeff in s.terms.items():
        value = _f_rp_single(poly)
        expected = ehrenborg_F(poly).star()
        if not poly.is_empty():
            fp = f_poly(FormalSum.of(poly, PRODUCT_RING))
            expected = expected + QSym({(a + 1, c): v for (a, c), v
                                        in fp.terms.items()})
        if value != expected:
            raise AssertionError("coaction route disagrees with the "
                                 "star-transform identity on %r" % poly)
        out = out + coeff * value
    return out


def _f_rp_single(poly):
    out = QSym()
    base = FormalSum.of(poly, JOIN_RING)
    for total in range(poly.dim + 3):
        for word in compositions(total):
            r = apply_operator(word, base)
            if r.is_zero():
                continue
            for power, c in epsilon_alpha(r).c.items():
                out = out + QSym.monomial(word[::-1], c, alpha=power)
    return out


# -- image equations ----------------------------------------------------------


FLAVOR_PRODUCT = "P"
FLAVOR_JOIN = "RP"
FLAVOR_POSET = "F"


def verify_image_equations(g, n, flavor):
    """Substitution identities cutting out the transform images: adjacent
    sign-cancellation in every slot, plus the flavor's grading equation."""
    if flavor not in (FLAVOR_PRODUCT, FLAVOR_JOIN, FLAVOR_POSET):
        raise ValueError("unknown flavor %r" % flavor)
    if not g.is_homogeneous():
        raise ValueError("image equations apply to homogeneous polynomials")
    if not g.is_zero() and g.degree_set() != {n}:
        raise ValueError("degree mismatch")
    r = g.r
    for q in range(r - 1):
        lhs = g.merge_neg_pair(q)
        rhs = g.set_var_zero(q).set_var_zero(q + 1)
        if lhs != rhs:
            return False
    if flavor == FLAVOR_POSET:
        return True
    lhs = g.negate_alpha().var_to_alpha(r - 1)
    if flavor == FLAVOR_PRODUCT:
        rhs = g.set_var_zero(r - 1)
    else:
        rhs = g.set_var_zero(r - 1)
        rhs = MultiPoly(r, {(a, e): v for (a, e), v in rhs.terms.items()
                            if a == 0})
    return lhs == rhs


def dehn_sommerville_check(poly):
    """All instances of the generalized relations on one polytope."""
    n = poly.dim
    if n < 1:
        raise ValueError("needs dimension >= 1")
    dims = range(n)
    for size in range(n + 1):
        for s in itertools.combinations(dims, size):
            extended = (-1,) + s + (n,)
            for ii in range(len(extended) - 1):
                i, k = extended[ii], extended[ii + 1]
                if k - i < 2:
                    continue
                total = 0
                for j in range(i + 1, k):
                    term = pb.flag_number(poly, tuple(sorted(s + (j,))))
                    total += term if (j - i - 1) % 2 == 0 else -term
                want = (1 - (-1) ** (k - i - 1)) * pb.flag_number(poly, s)
                if total != want:
                    return False
    return True


# -- sparse-flag basis ---------------------------------------------------------


def sparse_index_sets(n):
    """Subsets of {0..n-2} with no two consecutive members, ordered as
    sorted tuples."""
    out = []
    for size in range(n):
        for s in itertools.combinations(range(n - 1), size):
            if all(s[i + 1] - s[i] >= 2 for i in range(len(s) - 1)):
                out.append(s)
    return sorted(out)


def basis_word_strings(n):
    """Cone/bipyramid words of the flag basis in dimension n: end in two
    cones, no adjacent bipyramids; sorted with C before B."""
    if n < 0:
        return []
    if n == 0:
        return ["C"]
    if n == 1:
        return ["CC"]
    words = ["C" + w for w in basis_word_strings(n - 1)]
    words += ["BC" + w for w in basis_word_strings(n - 2)]
    return sorted(words, key=lambda w: [0 if ch == "C" else 1 for ch in w])


class BBBasis:
    __slots__ = ("n", "psi_sets", "omega_words", "omega_polys", "matrix")

    def __init__(self, n, psi_sets, omega_words, omega_polys, matrix):
        self.n = n
        self.psi_sets = psi_sets
        self.omega_words = omega_words
        self.omega_polys = omega_polys
        self.matrix = matrix

    def det(self):
        return det_bareiss(self.matrix)

    def to_json_obj(self):
        return {"n": self.n, "psi": [list(s) for s in self.psi_sets],
                "omega": list(self.omega_words),
                "matrix": [list(r) for r in self.matrix]}


_bb_lock = threading.Lock()
_bb_cache = {}


def bb_basis(n):
    if n < 1:
        raise ValueError("needs n >= 1")
    with _bb_lock:
        hit = _bb_cache.get(n)
    if hit is not None:
        return hit
    psi = tuple(sparse_index_sets(n))
    words = tuple(basis_word_strings(n))
    polys = tuple(pb.from_word(w) for w in words)
    matrix = tuple(tuple(pb.flag_number(q, s) for s in psi) for q in polys)
    basis = BBBasis(n, psi, words, polys, matrix)
    with _bb_lock:
        _bb_cache.setdefault(n, basis)
    return basis


def bb_det(n):
    return bb_basis(n).det()


def flag_number_of_sum(s, subset):
    out = 0
    for poly, coeff in s.terms.items():
        out += coeff * pb.flag_number(poly, subset)
    return out


def project_bb(s, n):
    """Solve the unimodular sparse-flag system for the unique basis
    combination with the same flag vector."""
    if isinstance(s, pb.Polytope):
        s = FormalSum.of(s, PRODUCT_RING)
    if s.dims() not in ([], [n]):
        raise ValueError("projection needs a homogeneous input of the "
                         "stated dimension")
    basis = bb_basis(n)
    rows = [[basis.matrix[qi][si] for qi in range(len(basis.omega_polys))]
            for si in range(len(basis.psi_sets))]
    rhs = [flag_number_of_sum(s, subset) for subset in basis.psi_sets]
    coeffs = solve_exact(rows, rhs)
    out = FormalSum(PRODUCT_RING)
    for q, c in zip(basis.omega_polys, coeffs):
        if c.denominator != 1:
            raise AssertionError("unimodular solve returned a fraction")
        out = out + FormalSum.of(q, PRODUCT_RING, int(c))
    if f_poly(out) != f_poly(s):
        raise AssertionError("projection changed the flag polynomial")
    return out


def bb_multiply(x, y):
    """Multiply in the basis ring: project the product; the flag
    polynomial is multiplicative by construction and asserted."""
    from .ring import mul_product
    prod = mul_product(x, y)
    n = prod.max_dim()
    out = project_bb(prod, n)
    if f_poly(out) != f_poly(x) * f_poly(y):
        raise AssertionError("basis product is not flag-multiplicative")
    return out


# -- cone and bipyramid on the quasi-symmetric side ---------------------------


def _alpha_to_slot(g, m):
    """g with the grading slot read as t_m and the variables t_m, t_{m+1},
    .. set to zero: the m-th summand of the cone formula."""
    r = g.r
    out = {}
    for (a, e), v in g.terms.items():
        if any(e[i] for i in range(m - 1, r)):
            continue
        e2 = list(e)
        e2[m - 1] = a
        key = (0, tuple(e2))
        out[key] = out.get(key, 0) + v
    return MultiPoly(r, out)


def _shift_up(g, m):
    """g(alpha, t_m, t_{m+1}, ..): the j-th variable of g reads t_{m-1+j};
    terms that overflow the variable window drop (they sit at zero)."""
    r = g.r
    out = {}
    for (a, e), v in g.terms.items():
        width = max((i + 1 for i, p in enumerate(e) if p), default=0)
        if width + m - 1 > r:
            continue
        e2 = [0] * r
        for i, p in enumerate(e):
            if p:
                e2[i + m - 1] = p
        key = (a, tuple(e2))
        out[key] = out.get(key, 0) + v
    return MultiPoly(r, out)


def cone_qsym(g):
    """Quasi-symmetric counterpart of the cone operator."""
    n = g.degree() + 1
    r = n + 2
    gx = g.expand(r)
    sigma1 = QSym.sigma(1).expand(r) + MultiPoly.alpha(r)
    acc = sigma1 * gx
    for m in range(1, r + 1):
        acc = acc + MultiPoly.var(r, m - 1) * _alpha_to_slot(gx, m)
    return lift_from_expansion(acc)


def a_qsym(g):
    """Quasi-symmetric counterpart of twice-cone-minus-bipyramid on the
    product-ring side."""
    n = g.degree() + 1
    r = n + 2
    gx = g.expand(r)
    g0 = MultiPoly(r, {(a, e): v for (a, e), v in gx.terms.items()
                       if not any(e)})
    acc = MultiPoly.alpha(r) * g0
    acc = acc + MultiPoly.var(r, 0) * gx
    for m in range(2, r + 1):
        coeff = MultiPoly.var(r, m - 1) + MultiPoly.var(r, m - 2)
        acc = acc + coeff * _shift_up(gx, m)
    # the tail m = r+1 contributes t_r * g(alpha, 0, 0, ..)
    acc = acc + MultiPoly.var(r, r - 1) * g0
    return lift_from_expansion(acc)


def b_qsym(g):
    return 2 * cone_qsym(g) - a_qsym(g)


def _constant_term(g):
    return g.terms.get((0, ()), 0)


def a_rp_qsym(g):
    """Join-ring variant: same as the product-ring operator minus the
    counit correction."""
    out = a_qsym(g)
    c = _constant_term(g)
    if c:
        out = out - c * QSym.sigma(1)
    return out


def a0_qsym(g):
    """Counit variant acting on the plain ring (no grading variable)."""
    if not g.alpha_free():
        raise ValueError("plain-ring operator; no grading variable allowed")
    n = g.degree() + 1
    r = n + 2
    gx = g.expand(r)
    acc = MultiPoly.var(r, 0) * gx
    g0 = MultiPoly(r, {(a, e): v for (a, e), v in gx.terms.items()
                       if not any(e)})
    for m in range(2, r + 1):
        coeff = MultiPoly.var(r, m - 1) + MultiPoly.var(r, m - 2)
        acc = acc + coeff * _shift_up(gx, m)
    acc = acc + MultiPoly.var(r, r - 1) * g0
    c = _constant_term(g)
    if c:
        acc = acc - c * QSym.sigma(1).expand(r)
    return lift_from_expansion(acc)


def c_rp_qsym(g):
    return (QSym.alpha_power(1) + QSym.sigma(1)) * g


def b_rp_qsym(g):
    return 2 * c_rp_qsym(g) - a_rp_qsym(g)


def c0_qsym(g):
    return QSym.sigma(1) * g


def b0_qsym(g):
    return 2 * c0_qsym(g) - a0_qsym(g)


# -- functionals from polytopes ------------------------------------------------


def phi_alpha(s):
    """Functional on the operator quotient: the value on a word is the
    dimension character of the word acting on the input."""
    if isinstance(s, pb.Polytope):
        s = FormalSum.of(s, PRODUCT_RING)
    n = s.max_dim()
    values = {}
    for deg in range(0, max(n, 0) + 1):
        for w in basis_words(deg) if deg else [()]:
            v = xi_alpha(apply_operator(w, s)) if w else xi_alpha(s)
            if v:
                values[w] = v
    return DualFunctional(values, max(n, 0))


def phi_zero(s):
    """Vertex-count functional: the grading-zero part of phi_alpha."""
    psi = phi_alpha(s)
    values = {w: v.coeff(0) for w, v in psi.values.items() if v.coeff(0)}
    return DualFunctional(values, psi.max_degree)


def phi_image_law_holds(s):
    """psi(-alpha) shifted by the operator series equals psi(alpha)."""
    if isinstance(s, pb.Polytope):
        s = FormalSum.of(s, PRODUCT_RING)
    psi = phi_alpha(s)
    n = psi.max_degree
    for deg in range(0, n + 1):
        for sigma in (basis_words(deg) if deg else [()]):
            acc = AlphaPoly()
            for k in range(0, n - deg + 1):
                word = ((k,) + sigma) if k else sigma
                v = psi.value(word)
                if isinstance(v, int):
                    v = AlphaPoly.const(v)
                acc = acc + v.negate_variable().shift(k)
            want = psi.value(sigma)
            if isinstance(want, int):
                want = AlphaPoly.const(want)
            if acc != want:
                return False
    return True
