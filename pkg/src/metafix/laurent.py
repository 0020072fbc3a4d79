"""Exact arithmetic in rings of integer Laurent polynomials.

A polynomial in n commuting variables x1..xn is a finite map from exponent
tuples (length n, entries possibly negative) to nonzero integer
coefficients; the zero polynomial is the empty map.  Coefficients are
arbitrary-precision integers throughout, so every identity tested by this
package is exact.

Conventions fixed here and relied on elsewhere:

* monomial order: graded lexicographic with x1 > x2 > ... > xn;
* units of the ring are the signed monomials +-x^m; `normalized` factors
  any nonzero polynomial as unit * poly with all minimum exponents 0 and a
  positive leading coefficient, the unit carrying the sign;
* divisibility is decided by single-divisor long division: integer
  quotient steps are forced whenever the quotient exists in the ring, so
  any failing step certifies non-divisibility.
"""

from __future__ import annotations

import heapq
import re
from fractions import Fraction
from math import gcd

from ._backend import termops


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a, b):
    return tuple(x - y for x, y in zip(a, b))


def grlex_key(mono):
    return (sum(mono), mono)


class LaurentPoly:
    """Immutable integer Laurent polynomial in a fixed number of variables."""

    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars, terms=None):
        clean = {}
        if terms:
            for m, c in terms.items():
                if c:
                    m = tuple(m)
                    if len(m) != nvars:
                        raise ValueError("exponent tuple of wrong length")
                    clean[m] = c
        self.nvars = nvars
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, nvars, terms):
        # terms must already be clean (no zero coefficients, right arity)
        self = object.__new__(cls)
        self.nvars = nvars
        self.terms = terms
        self._hash = None
        return self

    @classmethod
    def zero(cls, nvars):
        return cls._raw(nvars, {})

    @classmethod
    def constant(cls, c, nvars):
        if not c:
            return cls._raw(nvars, {})
        return cls._raw(nvars, {(0,) * nvars: c})

    @classmethod
    def one(cls, nvars):
        return cls.constant(1, nvars)

    @classmethod
    def monomial(cls, expts, nvars, coeff=1):
        if not coeff:
            return cls._raw(nvars, {})
        expts = tuple(expts)
        if len(expts) != nvars:
            raise ValueError("exponent tuple of wrong length")
        return cls._raw(nvars, {expts: coeff})

    @classmethod
    def variable(cls, i, nvars, power=1):
        """The monomial x_{i+1}^power (i is 0-based)."""
        if not 0 <= i < nvars:
            raise ValueError(f"variable index {i} out of range")
        e = [0] * nvars
        e[i] = power
        return cls._raw(nvars, {tuple(e): 1})

    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            if other.nvars != self.nvars:
                raise ValueError("polynomials from different rings")
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(other, self.nvars)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return LaurentPoly._raw(self.nvars, termops.tm_add(self.terms, other.terms))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return LaurentPoly._raw(self.nvars, termops.tm_sub(self.terms, other.terms))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return LaurentPoly._raw(self.nvars, termops.tm_sub(other.terms, self.terms))

    def __neg__(self):
        return LaurentPoly._raw(self.nvars, termops.tm_neg(self.terms))

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly._raw(self.nvars, termops.tm_scale(self.terms, other))
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return LaurentPoly._raw(self.nvars, termops.tm_mul(self.terms, other.terms))

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            u = self.as_unit()
            if u is None:
                raise ValueError("negative power of a non-unit")
            c, m = u
            return LaurentPoly.monomial(tuple(k * e for e in m), self.nvars, c if k % 2 else 1)
        out = LaurentPoly.one(self.nvars)
        base = self
        while k:
            if k & 1:
                out = out * base
            base_needed = k >> 1
            if base_needed:
                base = base * base
            k = base_needed
        return out

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def is_one(self):
        return self.terms == {(0,) * self.nvars: 1}

    def __eq__(self, other):
        if isinstance(other, int):
            if other == 0:
                return not self.terms
            return self.terms == {(0,) * self.nvars: other}
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    def as_unit(self):
        """Return (coeff, mono) if the polynomial is +-x^m, else None."""
        if len(self.terms) != 1:
            return None
        ((m, c),) = self.terms.items()
        if c == 1 or c == -1:
            return c, m
        return None

    def leading(self):
        """Leading (mono, coeff) in graded lex order; None for zero."""
        if not self.terms:
            return None
        m = max(self.terms, key=grlex_key)
        return m, self.terms[m]

    def content(self):
        """gcd of the coefficients; 0 for the zero polynomial."""
        g = 0
        for c in self.terms.values():
            g = gcd(g, c)
            if g == 1:
                return 1
        return g

    def constant_coefficient(self):
        return self.terms.get((0,) * self.nvars, 0)

    def eval(self, point):
        """Exact value at a point with nonzero rational coordinates."""
        if len(point) != self.nvars:
            raise ValueError("point of wrong dimension")
        pt = [Fraction(p) for p in point]
        for p in pt:
            if p == 0:
                raise ValueError("evaluation point has a zero coordinate")
        total = Fraction(0)
        for m, c in self.terms.items():
            v = Fraction(c)
            for p, e in zip(pt, m):
                if e:
                    v *= p**e
            total += v
        return total

    def subs_one(self, i):
        """Substitute x_{i+1} = 1 (variable count is preserved)."""
        out = {}
        for m, c in self.terms.items():
            if m[i]:
                m = m[:i] + (0,) + m[i + 1 :]
            cur = out.get(m, 0) + c
            if cur:
                out[m] = cur
            elif m in out:
                del out[m]
        return LaurentPoly._raw(self.nvars, out)

    def normalized(self):
        """Factor self = unit * poly with min exponent 0 in every variable.

        The unit is a signed monomial chosen so that poly's leading
        coefficient is positive.  Raises on zero input.
        """
        if not self.terms:
            raise ValueError("cannot normalize the zero polynomial")
        mins = [None] * self.nvars
        for m in self.terms:
            for i, e in enumerate(m):
                if mins[i] is None or e < mins[i]:
                    mins[i] = e
        shift = tuple(-e for e in mins)
        shifted = {mono_mul(m, shift): c for m, c in self.terms.items()}
        lead = max(shifted, key=grlex_key)
        sign = 1 if shifted[lead] > 0 else -1
        if sign < 0:
            shifted = {m: -c for m, c in shifted.items()}
        unit = LaurentPoly.monomial(tuple(mins), self.nvars, sign)
        return LaurentPoly._raw(self.nvars, shifted), unit

    def divide_exact(self, divisor):
        """Quotient q with self = q * divisor in the ring, or None.

        Single-divisor long division under graded lex order after pulling
        out monomial units.  If the quotient exists its leading
        coefficients divide at every step, so the integer division below
        never loses solutions.
        """
        divisor = self._coerce(divisor)
        if divisor is None or divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if not self.terms:
            return LaurentPoly.zero(self.nvars)
        gnorm, gunit = self.normalized()
        fnorm, funit = divisor.normalized()
        q = _divide_nonneg(gnorm.terms, fnorm.terms)
        if q is None:
            return None
        gc, gm = gunit.as_unit()
        fc, fm = funit.as_unit()
        unit_mono = mono_div(gm, fm)
        out = termops.tm_mul_term(q, unit_mono, gc * fc)
        return LaurentPoly._raw(self.nvars, out)

    def divides(self, other):
        return other.divide_exact(self) is not None

    def __str__(self):
        return poly_to_text(self)

    def __repr__(self):
        return f"LaurentPoly({self.nvars}, {poly_to_text(self)!r})"


def _heap_key(m):
    return (-sum(m), tuple(-e for e in m))


def _divide_nonneg(g, f):
    """Long division of term maps with nonnegative exponents; None if inexact.

    The leading monomial of the shrinking remainder is tracked with a
    lazy-deletion heap instead of a rescan, and the remainder is mutated
    in place.
    """
    fl = max(f, key=grlex_key)
    flc = f[fl]
    frest = {m: c for m, c in f.items() if m != fl}
    q = {}
    r = dict(g)
    heap = [_heap_key(m) for m in r]
    heapq.heapify(heap)
    push = heapq.heappush
    while heap:
        neg_deg, neg_mono = heapq.heappop(heap)
        rl = tuple(-e for e in neg_mono)
        rc = r.get(rl)
        if rc is None:
            continue
        mono = mono_div(rl, fl)
        if rc % flc or any(e < 0 for e in mono):
            return None
        c = rc // flc
        q[mono] = c
        del r[rl]
        if frest:
            for key, cc in termops.tm_mul_term(frest, mono, c).items():
                cur = r.get(key)
                if cur is None:
                    r[key] = -cc
                    push(heap, _heap_key(key))
                else:
                    cur -= cc
                    if cur:
                        r[key] = cur
                    else:
                        del r[key]
    if r:
        return None
    return q


_TERM_RE = re.compile(r"[+-]|[0-9]+|x[0-9]+|\^-?[0-9]+|\*|\s+|.")


def parse_poly(text, nvars):
    """Parse the textual polynomial syntax: terms like 3*x1^2*x2^-1."""
    tokens = []
    for m in _TERM_RE.finditer(text):
        t = m.group()
        if t.isspace():
            continue
        tokens.append((t, m.start()))
    terms = {}
    pos = 0

    def fail(msg, at):
        raise ValueError(f"polynomial syntax error at position {at}: {msg}")

    while pos < len(tokens):
        sign = 1
        tok, at = tokens[pos]
        while tok in "+-":
            if tok == "-":
                sign = -sign
            pos += 1
            if pos >= len(tokens):
                fail("dangling sign", at)
            tok, at = tokens[pos]
        coeff = sign
        expts = [0] * nvars
        saw_factor = False
        while True:
            tok, at = tokens[pos]
            if tok.isdigit():
                coeff *= int(tok)
                pos += 1
            elif tok.startswith("x"):
                idx = int(tok[1:])
                if not 1 <= idx <= nvars:
                    fail(f"variable {tok} out of range for {nvars} variables", at)
                e = 1
                if pos + 1 < len(tokens) and tokens[pos + 1][0].startswith("^"):
                    e = int(tokens[pos + 1][0][1:])
                    pos += 1
                expts[idx - 1] += e
                pos += 1
            else:
                fail(f"unexpected token {tok!r}", at)
            saw_factor = True
            if pos < len(tokens) and tokens[pos][0] == "*":
                pos += 1
                if pos >= len(tokens):
                    fail("dangling '*'", at)
                continue
            break
        if not saw_factor:
            fail("empty term", 0)
        key = tuple(expts)
        cur = terms.get(key, 0) + coeff
        if cur:
            terms[key] = cur
        elif key in terms:
            del terms[key]
        if pos < len(tokens) and tokens[pos][0] not in "+-":
            fail(f"expected '+' or '-', got {tokens[pos][0]!r}", tokens[pos][1])
    return LaurentPoly(nvars, terms)


def poly_to_text(p):
    """Canonical textual form: graded-lex descending, explicit '*' and '^'."""
    if not p.terms:
        return "0"
    parts = []
    for m in sorted(p.terms, key=grlex_key, reverse=True):
        c = p.terms[m]
        factors = []
        for i, e in enumerate(m):
            if e == 1:
                factors.append(f"x{i + 1}")
            elif e:
                factors.append(f"x{i + 1}^{e}")
        body = "*".join(factors)
        a = abs(c)
        if not body:
            body = str(a)
        elif a != 1:
            body = f"{a}*{body}"
        parts.append(("-" if c < 0 else "+", body))
    sign0, body0 = parts[0]
    pieces = [body0 if sign0 == "+" else "-" + body0]
    for s, b in parts[1:]:
        pieces.append(f" {s} {b}")
    return "".join(pieces)
