"""Quasi-symmetric functions over the integers.

Terms are indexed by (alpha power, composition); the plain ring sits at
alpha power 0.  The product is the overlapping shuffle on compositions,
the coproduct is deconcatenation, and expansion into finitely many
t-variables is exact and injective once the variable count reaches the
degree.
"""

from __future__ import annotations

import functools

from .polys import MultiPoly


@functools.lru_cache(maxsize=None)
def quasi_shuffle(c1, c2):
    """Overlapping shuffle of two compositions: interleavings where adjacent
    parts from the two factors may merge.  Returns {composition: count}."""
    if not c1:
        return {c2: 1}
    if not c2:
        return {c1: 1}
    out = {}

    def put(head, tail_counts):
        for comp, k in tail_counts.items():
            key = (head,) + comp
            out[key] = out.get(key, 0) + k

    put(c1[0], quasi_shuffle(c1[1:], c2))
    put(c2[0], quasi_shuffle(c1, c2[1:]))
    put(c1[0] + c2[0], quasi_shuffle(c1[1:], c2[1:]))
    return out


def composition_sort_key(comp):
    return (sum(comp), len(comp), comp)


class QSym:
    """Integer combination of quasi-symmetric monomials, with an optional
    polynomial grading variable folded into the keys."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        t = {}
        if terms:
            for (a, comp), v in terms.items():
                v = int(v)
                if v:
                    t[(int(a), tuple(comp))] = v
        self.terms = t

    @classmethod
    def monomial(cls, comp, coeff=1, alpha=0):
        return cls({(alpha, tuple(comp)): coeff})

    @classmethod
    def one(cls):
        return cls({(0, ()): 1})

    @classmethod
    def alpha_power(cls, k, coeff=1):
        return cls({(k, ()): coeff})

    @classmethod
    def sigma(cls, i):
        if i < 1:
            raise ValueError("sigma(i) needs i >= 1")
        return cls.monomial((1,) * i)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, QSym) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            w = out.get(k, 0) + v
            if w:
                out[k] = w
            else:
                del out[k]
        return QSym(out)

    def __neg__(self):
        return QSym({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return QSym({k: v * other for k, v in self.terms.items()})
        out = {}
        for (a1, c1), v1 in self.terms.items():
            for (a2, c2), v2 in other.terms.items():
                for comp, mult in quasi_shuffle(c1, c2).items():
                    k = (a1 + a2, comp)
                    out[k] = out.get(k, 0) + v1 * v2 * mult
        return QSym(out)

    __rmul__ = __mul__

    def star(self):
        """Reverse every composition; an involutory ring homomorphism."""
        return QSym({(a, comp[::-1]): v for (a, comp), v in self.terms.items()})

    def alpha_free(self):
        return all(a == 0 for a, _ in self.terms)

    def coefficient(self, comp, alpha=0):
        return self.terms.get((alpha, tuple(comp)), 0)

    def alpha_part(self, k):
        """The coefficient of the k-th power of the grading variable, as a
        plain quasi-symmetric function."""
        return QSym({(0, comp): v for (a, comp), v in self.terms.items()
                     if a == k})

    def max_alpha(self):
        return max((a for a, _ in self.terms), default=0)

    def degree_set(self):
        return {a + sum(c) for (a, c) in self.terms}

    def degree(self):
        return max(self.degree_set(), default=0)

    def is_homogeneous(self, degree=None):
        ds = self.degree_set()
        if not ds:
            return True
        return len(ds) == 1 and (degree is None or ds == {degree})

    def homogeneous_piece(self, degree):
        return QSym({k: v for k, v in self.terms.items()
                     if k[0] + sum(k[1]) == degree})

    def coproduct(self):
        """Deconcatenation coproduct; defined on the plain ring only.
        Returns {(left comp, right comp): coeff}."""
        if not self.alpha_free():
            raise ValueError("coproduct is defined on the plain ring")
        out = {}
        for (_, comp), v in self.terms.items():
            for i in range(len(comp) + 1):
                k = (comp[:i], comp[i:])
                out[k] = out.get(k, 0) + v
        return out

    def expand(self, r):
        """Expansion into r variables (compositions longer than r drop)."""
        out = {}
        for (a, comp), v in self.terms.items():
            k = len(comp)
            if k > r:
                continue
            for positions in _increasing_tuples(k, r):
                e = [0] * r
                for part, pos in zip(comp, positions):
                    e[pos] = part
                key = (a, tuple(e))
                out[key] = out.get(key, 0) + v
        return MultiPoly(r, out)

    def to_json_obj(self):
        out = []
        for (a, comp) in sorted(self.terms,
                                key=lambda k: (k[0] + sum(k[1]), k[0],
                                               len(k[1]), k[1])):
            entry = {"comp": list(comp), "coeff": self.terms[(a, comp)]}
            if a:
                entry["alpha"] = a
            out.append(entry)
        return out

    @classmethod
    def from_json_obj(cls, data):
        terms = {}
        for entry in data:
            key = (entry.get("alpha", 0), tuple(entry["comp"]))
            terms[key] = terms.get(key, 0) + entry["coeff"]
        return cls(terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for (a, comp) in sorted(self.terms,
                                key=lambda k: (k[0] + sum(k[1]), k[0],
                                               len(k[1]), k[1])):
            v = self.terms[(a, comp)]
            factors = []
            if a == 1:
                factors.append("a")
            elif a > 1:
                factors.append("a^%d" % a)
            if comp:
                factors.append("M[%s]" % ",".join(map(str, comp)))
            body = "*".join(factors) if factors else "1"
            if v == 1:
                bits.append(body)
            elif v == -1:
                bits.append("-%s" % body)
            else:
                bits.append("%d*%s" % (v, body))
        return " + ".join(bits).replace("+ -", "- ")


@functools.lru_cache(maxsize=None)
def _increasing_tuples(k, r):
    import itertools
    return tuple(itertools.combinations(range(r), k))


def expand(q, r):
    return q.expand(r)


def lift_from_expansion(poly):
    """Inverse of expand on quasi-symmetric input: read coefficients off
    the prefix-supported monomials, then verify by re-expanding."""
    r = poly.r
    terms = {}
    for (a, e), v in poly.terms.items():
        support = [i for i, p in enumerate(e) if p]
        if support == list(range(len(support))):
            terms[(a, tuple(e[i] for i in support))] = v
    q = QSym(terms)
    if q.expand(r) != poly:
        raise ValueError("polynomial is not quasi-symmetric in %d variables"
                         % r)
    return q


def is_quasisymmetric(poly, r=None):
    """A polynomial is a combination of quasi-symmetric monomials iff
    setting any one variable slot to zero gives the same polynomial in the
    remaining ordered variables."""
    if r is not None and r != poly.r:
        raise ValueError("variable count mismatch")
    r = poly.r
    if r <= 1:
        return True
    ref = poly.drop_var(r - 1)
    return all(poly.drop_var(i) == ref for i in range(r - 1))


def theta_substitution_invariant(q, k, n):
    """True iff inserting (t, -t) in front of the k-th variable leaves q
    unchanged: the expansion in n+2 variables must lose every monomial that
    touches the inserted pair and reproduce the n-variable expansion."""
    if k < 1 or k > n + 1:
        raise ValueError("insertion position out of range")
    if q.degree() > n:
        raise ValueError("degree exceeds the stated bound")
    g = q.expand(n + 2)
    sfree = {}
    p, pn = k - 1, k  # 0-based slots of the inserted pair
    for (a, e), v in g.terms.items():
        s_exp = e[p] + e[pn]
        sign = -1 if e[pn] % 2 else 1
        rest = e[:p] + e[p + 2:]
        if s_exp:
            key = (a, s_exp, rest)
            sfree[key] = sfree.get(key, 0) + sign * v
        else:
            key = (a, 0, rest)
            sfree[key] = sfree.get(key, 0) + v
    residue = {k2: v for k2, v in sfree.items() if v}
    expected = q.expand(n)
    want = {(a, 0, e): v for (a, e), v in expected.terms.items()}
    return residue == want
