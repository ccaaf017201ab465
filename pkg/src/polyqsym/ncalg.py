"""The free Leibnitz-Hopf algebra on countably many generators and its
quotient by the Euler relations.

Words are tuples of generator indices (>= 1); polynomials carry exact
rational coefficients.  The quotient modulo the two-sided ideal generated
by the alternating convolution relations admits a terminating rewriting
system whose normal-form words contain the index 1 at most once, and then
only as the leftmost letter.  Linear functionals on the quotient are stored
on normal-form basis words and evaluated anywhere through the rewriting.
"""

from __future__ import annotations

import functools
from fractions import Fraction

from .polys import AlphaPoly
from .qsym import QSym


class NCPoly:
    """Finite rational combination of words in the generators."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        t = {}
        if terms:
            for w, v in (terms.items() if isinstance(terms, dict) else terms):
                v = Fraction(v)
                if v:
                    w = tuple(int(x) for x in w)
                    if any(x < 1 for x in w):
                        raise ValueError("generator indices start at 1")
                    u = t.get(w, Fraction(0)) + v
                    if u:
                        t[w] = u
                    else:
                        del t[w]
        self.terms = t

    @classmethod
    def gen(cls, k, coeff=1):
        if k < 1:
            raise ValueError("generator indices start at 1")
        return cls({(k,): coeff})

    @classmethod
    def word(cls, w, coeff=1):
        return cls({tuple(w): coeff})

    @classmethod
    def one(cls):
        return cls({(): 1})

    def is_zero(self):
        return not self.terms

    def is_integral(self):
        return all(v.denominator == 1 for v in self.terms.values())

    def __eq__(self, other):
        return isinstance(other, NCPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        out = dict(self.terms)
        for w, v in other.terms.items():
            u = out.get(w, Fraction(0)) + v
            if u:
                out[w] = u
            else:
                del out[w]
        return NCPoly(out)

    def __neg__(self):
        return NCPoly({w: -v for w, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return NCPoly({w: v * other for w, v in self.terms.items()})
        out = {}
        for w1, v1 in self.terms.items():
            for w2, v2 in other.terms.items():
                w = w1 + w2
                out[w] = out.get(w, Fraction(0)) + v1 * v2
        return NCPoly(out)

    __rmul__ = __mul__

    def degree_set(self):
        return {sum(w) for w in self.terms}

    def is_homogeneous(self, degree=None):
        ds = self.degree_set()
        if not ds:
            return True
        return len(ds) == 1 and (degree is None or ds == {degree})

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for w in sorted(self.terms, key=lambda w: (sum(w), len(w), w)):
            v = self.terms[w]
            body = " ".join("Z%d" % x for x in w) if w else "1"
            if v == 1:
                bits.append(body)
            elif v == -1:
                bits.append("-%s" % body)
            else:
                bits.append("%s*%s" % (v, body))
        return " + ".join(bits).replace("+ -", "- ")


def coproduct(a):
    """Leibnitz coproduct: each generator splits as the full convolution
    with index 0 acting as the unit.  Returns {(left, right): coeff}."""
    out = {}
    for word, v in a.terms.items():
        splits = [((), ())]
        for k in word:
            splits = [(l + ((i,) if i else ()), r + ((k - i,) if k - i else ()))
                      for (l, r) in splits for i in range(k + 1)]
        for l, r in splits:
            out[(l, r)] = out.get((l, r), Fraction(0)) + v
    return {k: v for k, v in out.items() if v}


def counit(a):
    return a.terms.get((), Fraction(0))


@functools.lru_cache(maxsize=None)
def _antipode_gen(n):
    """Closed form: alternating sum over all compositions of n."""
    out = {}
    def rec(remaining, word):
        if remaining == 0:
            sign = -1 if len(word) % 2 else 1
            out[word] = out.get(word, 0) + sign
            return
        for j in range(1, remaining + 1):
            rec(remaining - j, word + (j,))
    rec(n, ())
    return NCPoly(out)


def antipode(a):
    """Antihomomorphic extension of the generator formula."""
    out = NCPoly()
    for word, v in a.terms.items():
        acc = NCPoly.one()
        for k in reversed(word):
            acc = acc * _antipode_gen(k)
        out = out + v * acc
    return out


# -- the quotient by the Euler relations -----------------------------------


def is_normal_word(w):
    ones = [i for i, x in enumerate(w) if x == 1]
    if not ones:
        return True
    return len(ones) == 1 and ones[0] == 0


@functools.lru_cache(maxsize=None)
def _normal_form_word(w):
    """Integer expansion of a word in the normal-form basis.

    Rewrites with the consequences of the alternating relations: a doubled
    leading 1 contracts to the next generator, any other 1 moves left past
    its >= 2 neighbour, shedding words with strictly fewer 1-letters."""
    if is_normal_word(w):
        return {w: 1}
    ones = [i for i, x in enumerate(w) if x == 1]
    if ones[0] == 0 and ones[1] == 1:
        # Z1 Z1 = 2 Z2 applied at the front
        rewrites = {(2,) + w[2:]: 2}
    else:
        p = ones[0] if ones[0] >= 1 else ones[1]
        i = w[p - 1]
        head, tail = w[:p - 1], w[p + 1:]
        # Z_i Z_1 = (-1)^i [ Z_1 Z_i - (1 + (-1)^(i+1)) Z_{i+1}
        #                    - sum_{a=2}^{i-1} (-1)^a Z_a Z_{i+1-a} ]
        sign = -1 if i % 2 else 1
        rewrites = {head + (1, i) + tail: sign}
        euler = 1 + (-1 if (i + 1) % 2 else 1)
        if euler:
            key = head + (i + 1,) + tail
            rewrites[key] = rewrites.get(key, 0) - sign * euler
        for a in range(2, i):
            s2 = -1 if a % 2 else 1
            key = head + (a, i + 1 - a) + tail
            rewrites[key] = rewrites.get(key, 0) - sign * s2
    out = {}
    for w2, c in rewrites.items():
        if not c:
            continue
        for w3, c3 in _normal_form_word(w2).items():
            u = out.get(w3, 0) + c * c3
            if u:
                out[w3] = u
            else:
                del out[w3]
    return out


def normal_form(a):
    """Canonical representative modulo the Euler-relation ideal."""
    out = NCPoly()
    for word, v in a.terms.items():
        out = out + v * NCPoly(_normal_form_word(word))
    return out


def euler_relation(n):
    """The degree-n ideal generator: the alternating convolution."""
    if n < 1:
        raise ValueError("relations start at degree 1")
    terms = {}
    for i in range(n + 1):
        w = tuple(x for x in (i, n - i) if x)
        sign = -1 if i % 2 else 1
        terms[w] = terms.get(w, 0) + sign
    return NCPoly(terms)


@functools.lru_cache(maxsize=None)
def basis_words(degree):
    """Normal-form basis in one degree: words with all parts >= 2, plus a
    single leading 1 in front of such a word."""
    def tails(total):
        if total == 0:
            return [()]
        out = []
        for first in range(2, total + 1):
            for rest in tails(total - first):
                out.append((first,) + rest)
        return out

    out = list(tails(degree))
    if degree >= 1:
        out += [(1,) + w for w in tails(degree - 1)]
    return tuple(sorted(out, key=lambda w: (len(w), w)))


def pairing(q, a):
    """Dual-basis pairing of a plain quasi-symmetric function against a
    word polynomial."""
    if not q.alpha_free():
        raise ValueError("pairing is defined on the plain ring")
    total = Fraction(0)
    for (_, comp), v in q.terms.items():
        c = a.terms.get(comp)
        if c:
            total += v * c
    return total


# -- functionals on the quotient --------------------------------------------


class DualFunctional:
    """Linear functional on the quotient algebra, stored on normal-form
    basis words (well-defined by construction) and evaluated on arbitrary
    words through the rewriting."""

    __slots__ = ("values", "max_degree")

    def __init__(self, values, max_degree):
        self.values = {tuple(w): v for w, v in values.items() if v}
        self.max_degree = max_degree
        for w in self.values:
            if not is_normal_word(w):
                raise ValueError("values must be keyed by basis words")

    @classmethod
    def from_word_values(cls, word_values, max_degree):
        """Build from values on arbitrary words, checking consistency with
        the quotient relations."""
        basis_vals = {}
        for w, v in word_values.items():
            if is_normal_word(tuple(w)):
                basis_vals[tuple(w)] = v
        psi = cls(basis_vals, max_degree)
        for w, v in word_values.items():
            if psi.value(tuple(w)) != v:
                raise ValueError("not a functional on the quotient: value on "
                                 "%r conflicts with the relations" % (w,))
        return psi

    def value(self, word):
        word = tuple(word)
        if sum(word) > self.max_degree:
            return 0
        total = 0
        for w, c in _normal_form_word(word).items():
            v = self.values.get(w)
            if v:
                total = total + c * v
        return total

    def value_on(self, a):
        total = 0
        for w, c in a.terms.items():
            v = self.value(w)
            if v:
                total = total + c * v
        return total

    def is_zero(self):
        return not self.values

    def to_qsym(self, degree):
        """Embedding into quasi-symmetric functions: the coefficient of the
        monomial indexed by a composition is the value on the reversed
        word.  Integer (or grading-polynomial) values pass through."""
        out = QSym()
        for word in _words_of_degree(degree):
            v = self.value(word[::-1])
            if isinstance(v, AlphaPoly):
                for p, c in v.c.items():
                    out = out + QSym.monomial(word, c, alpha=p)
            elif v:
                out = out + QSym.monomial(word, v)
        return out


@functools.lru_cache(maxsize=None)
def _words_of_degree(n):
    if n == 0:
        return ((),)
    out = []
    for first in range(1, n + 1):
        for rest in _words_of_degree(n - first):
            out.append((first,) + rest)
    return tuple(out)


def words_of_degree(n):
    return _words_of_degree(n)


# -- series ------------------------------------------------------------------


def s_series(nmax):
    """Coefficients of the logarithm of the generating series: a list whose
    k-th entry (k >= 1) is the degree-k coefficient."""
    if nmax < 1:
        raise ValueError("nmax >= 1")
    out = [NCPoly() for _ in range(nmax + 1)]
    # log(1 + u) = sum (-1)^(m+1) u^m / m with u = Z_1 t + Z_2 t^2 + ...
    powers = [NCPoly.one()]
    for m in range(1, nmax + 1):
        powers.append(NCPoly())
    # powers[m] tracked degree by degree: u^m truncated
    u_terms = {k: NCPoly.gen(k) for k in range(1, nmax + 1)}
    # compute u^m as dict degree -> NCPoly
    deg_pows = [{0: NCPoly.one()}]
    for m in range(1, nmax + 1):
        prev = deg_pows[m - 1]
        cur = {}
        for d1, poly in prev.items():
            for k in range(1, nmax - d1 + 1):
                d = d1 + k
                if d > nmax:
                    continue
                cur[d] = cur.get(d, NCPoly()) + poly * u_terms[k]
        deg_pows.append(cur)
    for m in range(1, nmax + 1):
        coeff = Fraction((-1) ** (m + 1), m)
        for d, poly in deg_pows[m].items():
            out[d] = out[d] + coeff * poly
    return out


def d_even_formula(k):
    """The even generator written in odd generators: the square-root series
    of the even/odd splitting of the relations."""
    if k < 1:
        raise ValueError("k >= 1")
    from math import comb
    out = NCPoly()
    for i in range(1, k + 1):
        coeff = Fraction((-1) ** (i - 1) * comb(2 * i - 2, i - 1),
                         i * 2 ** (2 * i - 1))
        acc = NCPoly()
        for word in _odd_words(2 * i, i + k):
            acc = acc + NCPoly.word(word)
        out = out + coeff * acc
    return out


def _odd_words(length, half_sum):
    """Words of fixed length in odd generators with (sum+length)/2 fixed:
    indices 2 j_l - 1 with the j_l summing to half_sum."""
    def rec(slots, remaining):
        if slots == 0:
            return [()] if remaining == 0 else []
        out = []
        for j in range(1, remaining - slots + 2):
            for rest in rec(slots - 1, remaining - j):
                out.append((2 * j - 1,) + rest)
        return out

    return rec(length, half_sum)
