"""Small exact polynomial carriers.

AlphaPoly: integer polynomials in the single grading variable (printed as
`a`).  MultiPoly: integer polynomials in the grading variable plus finitely
many t-variables, sparse on (alpha power, exponent vector) keys; this is the
expansion target for quasi-symmetric functions and the substrate for the
substitution identities.
"""

from __future__ import annotations


class AlphaPoly:
    """Integer polynomial in one variable, dict power -> coefficient."""

    __slots__ = ("c",)

    def __init__(self, coeffs=None):
        c = {}
        if coeffs:
            for p, v in coeffs.items():
                if v:
                    c[int(p)] = int(v)
        self.c = c

    @classmethod
    def const(cls, v):
        return cls({0: v})

    @classmethod
    def term(cls, power, coeff=1):
        return cls({power: coeff})

    def __bool__(self):
        return bool(self.c)

    def __eq__(self, other):
        if isinstance(other, int):
            other = AlphaPoly.const(other)
        return isinstance(other, AlphaPoly) and self.c == other.c

    def __hash__(self):
        return hash(frozenset(self.c.items()))

    def __add__(self, other):
        if isinstance(other, int):
            other = AlphaPoly.const(other)
        out = dict(self.c)
        for p, v in other.c.items():
            w = out.get(p, 0) + v
            if w:
                out[p] = w
            else:
                out.pop(p, None)
        return AlphaPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return AlphaPoly({p: -v for p, v in self.c.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = AlphaPoly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return AlphaPoly.const(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return AlphaPoly({p: v * other for p, v in self.c.items()})
        out = {}
        for p, v in self.c.items():
            for q, w in other.c.items():
                out[p + q] = out.get(p + q, 0) + v * w
        return AlphaPoly(out)

    __rmul__ = __mul__

    def shift(self, k):
        """Multiply by the k-th power of the variable."""
        return AlphaPoly({p + k: v for p, v in self.c.items()})

    def negate_variable(self):
        return AlphaPoly({p: (v if p % 2 == 0 else -v)
                          for p, v in self.c.items()})

    def coeff(self, power):
        return self.c.get(power, 0)

    def degree(self):
        return max(self.c) if self.c else -1

    def __repr__(self):
        if not self.c:
            return "0"
        bits = []
        for p in sorted(self.c):
            v = self.c[p]
            if p == 0:
                bits.append(str(v))
            else:
                var = "a" if p == 1 else "a^%d" % p
                bits.append(var if v == 1 else "-%s" % var if v == -1
                            else "%d*%s" % (v, var))
        return " + ".join(bits).replace("+ -", "- ")


class MultiPoly:
    """Integer polynomial in alpha and t_1..t_r.

    terms: dict {(alpha_power, exponent_tuple): coeff}; the exponent tuple
    always has length r.
    """

    __slots__ = ("r", "terms")

    def __init__(self, r, terms=None):
        self.r = r
        t = {}
        if terms:
            for (a, e), v in terms.items():
                if v:
                    t[(a, tuple(e))] = v
        self.terms = t

    @classmethod
    def zero(cls, r):
        return cls(r)

    @classmethod
    def const(cls, r, v):
        return cls(r, {(0, (0,) * r): v})

    @classmethod
    def alpha(cls, r, power=1, coeff=1):
        return cls(r, {(power, (0,) * r): coeff})

    @classmethod
    def var(cls, r, i, power=1, coeff=1):
        e = [0] * r
        e[i] = power
        return cls(r, {(0, tuple(e)): coeff})

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return (isinstance(other, MultiPoly) and self.r == other.r
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.r, frozenset(self.terms.items())))

    def __add__(self, other):
        if self.r != other.r:
            raise ValueError("variable counts differ")
        out = dict(self.terms)
        for k, v in other.terms.items():
            w = out.get(k, 0) + v
            if w:
                out[k] = w
            else:
                out.pop(k, None)
        return MultiPoly(self.r, out)

    def __neg__(self):
        return MultiPoly(self.r, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return MultiPoly(self.r,
                             {k: v * other for k, v in self.terms.items()})
        if self.r != other.r:
            raise ValueError("variable counts differ")
        out = {}
        for (a1, e1), v1 in self.terms.items():
            for (a2, e2), v2 in other.terms.items():
                k = (a1 + a2, tuple(x + y for x, y in zip(e1, e2)))
                out[k] = out.get(k, 0) + v1 * v2
        return MultiPoly(self.r, out)

    __rmul__ = __mul__

    def degree_set(self):
        return {a + sum(e) for (a, e) in self.terms}

    def is_homogeneous(self, degree=None):
        ds = self.degree_set()
        if not ds:
            return True
        return len(ds) == 1 and (degree is None or ds == {degree})

    def set_var_zero(self, i):
        """Substitute t_{i+1} = 0 (variable slot kept, exponent forced 0)."""
        out = {}
        for (a, e), v in self.terms.items():
            if e[i] == 0:
                out[(a, e)] = out.get((a, e), 0) + v
        return MultiPoly(self.r, out)

    def drop_var(self, i):
        """Substitute t_{i+1} = 0 and remove the slot (result has r-1 vars)."""
        out = {}
        for (a, e), v in self.terms.items():
            if e[i] == 0:
                k = (a, e[:i] + e[i + 1:])
                out[k] = out.get(k, 0) + v
        return MultiPoly(self.r - 1, out)

    def merge_neg_pair(self, q):
        """Substitute t_{q+2} = -t_{q+1} (0-based slots q, q+1)."""
        out = {}
        for (a, e), v in self.terms.items():
            sign = -1 if e[q + 1] % 2 else 1
            e2 = list(e)
            e2[q] = e[q] + e[q + 1]
            e2[q + 1] = 0
            k = (a, tuple(e2))
            out[k] = out.get(k, 0) + sign * v
        return MultiPoly(self.r, out)

    def negate_alpha(self):
        return MultiPoly(self.r, {(a, e): (v if a % 2 == 0 else -v)
                                  for (a, e), v in self.terms.items()})

    def var_to_alpha(self, i):
        """Substitute t_{i+1} = alpha."""
        out = {}
        for (a, e), v in self.terms.items():
            e2 = list(e)
            e2[i] = 0
            k = (a + e[i], tuple(e2))
            out[k] = out.get(k, 0) + v
        return MultiPoly(self.r, out)

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for (a, e) in sorted(self.terms):
            v = self.terms[(a, e)]
            mono = []
            if a:
                mono.append("a" if a == 1 else "a^%d" % a)
            for i, p in enumerate(e):
                if p:
                    mono.append("t%d" % (i + 1) if p == 1
                                else "t%d^%d" % (i + 1, p))
            body = "*".join(mono) if mono else "1"
            bits.append("%+d*%s" % (v, body))
        return " ".join(bits)
