"""Normal forms in the free metabelian group and its commutator subgroup.

An element is represented by its exponent-sum vector together with the
vector of abelianized derivatives of any representing word.  Two words
represent the same metabelian element exactly when these pairs agree, which
makes equality here the independent oracle for every detector in the
package.

The commutator subgroup is abelian and carries the module action of the
Laurent ring by conjugation: a monomial x^m acts as conjugation by any
word with abelianization m, and the action extends linearly.  On
coordinates the action is plain multiplication.
"""

from __future__ import annotations

from .fox import word_coords
from .laurent import LaurentPoly
from .words import Word


class MagnusElement:
    """Pair (exponent sums, derivative coordinates) of a metabelian element."""

    __slots__ = ("rank", "abelian", "coords")

    def __init__(self, rank, abelian, coords):
        self.rank = rank
        self.abelian = tuple(abelian)
        self.coords = tuple(coords)
        if len(self.abelian) != rank or len(self.coords) != rank:
            raise ValueError("component count must equal the rank")

    @classmethod
    def of_word(cls, w):
        return cls(w.rank, w.exponent_sums(), word_coords(w))

    @classmethod
    def identity(cls, rank):
        z = LaurentPoly.zero(rank)
        return cls(rank, (0,) * rank, (z,) * rank)

    def _mono(self, sign=1):
        return LaurentPoly.monomial(tuple(sign * a for a in self.abelian), self.rank)

    def __mul__(self, other):
        if not isinstance(other, MagnusElement):
            return NotImplemented
        if self.rank != other.rank:
            raise ValueError("elements of different ranks")
        xa = self._mono()
        return MagnusElement(
            self.rank,
            tuple(a + b for a, b in zip(self.abelian, other.abelian)),
            tuple(u + xa * v for u, v in zip(self.coords, other.coords)),
        )

    def inverse(self):
        xainv = self._mono(-1)
        return MagnusElement(
            self.rank,
            tuple(-a for a in self.abelian),
            tuple(-(xainv * u) for u in self.coords),
        )

    def is_identity(self):
        return all(a == 0 for a in self.abelian) and all(u.is_zero() for u in self.coords)

    def fundamental_identity_holds(self):
        """sum_i coords_i * (x_i - 1) == x^abelian - 1, exactly."""
        n = self.rank
        total = LaurentPoly.zero(n)
        for i, u in enumerate(self.coords):
            total = total + u * (LaurentPoly.variable(i, n) - 1)
        return total == self._mono() - 1

    def __eq__(self, other):
        if not isinstance(other, MagnusElement):
            return NotImplemented
        return (
            self.rank == other.rank
            and self.abelian == other.abelian
            and self.coords == other.coords
        )

    def __hash__(self):
        return hash((self.rank, self.abelian, self.coords))

    def __repr__(self):
        return f"MagnusElement(abelian={self.abelian}, coords={[str(c) for c in self.coords]})"


def is_trivial(w):
    """Word problem: does the word represent the metabelian identity?"""
    return MagnusElement.of_word(w).is_identity()


def words_equal(u, v):
    """Equality of two words in the free metabelian group."""
    return is_trivial(u * v.inverse())


def is_module_vector(u):
    """Does the coordinate vector satisfy sum u_i (x_i - 1) = 0?"""
    n = len(u)
    total = LaurentPoly.zero(n)
    for i, p in enumerate(u):
        total = total + p * (LaurentPoly.variable(i, n) - 1)
    return total.is_zero()


def power_coords(r, u):
    """Coordinates of r^u for r in the commutator subgroup and a ring
    scalar u: the action is componentwise multiplication."""
    if any(r.exponent_sums()):
        raise ValueError("base word is not in the commutator subgroup")
    return [u * c for c in word_coords(r)]


def coset_word(exponents, rank):
    """Canonical representative x1^a1 ... xn^an of an abelian vector."""
    out = Word.identity(rank)
    for i, a in enumerate(exponents):
        if a:
            out = out * (Word.generator(i, rank) ** a)
    return out


def module_power_word(r, u):
    """A word equal to r^u: monomials act by canonical conjugators.

    For u = sum of c * x^m, the word is the product over monomials (in
    sorted order) of (g_m r g_m^-1)^c with g_m = x1^m1 ... xn^mn.
    """
    n = r.rank
    out = Word.identity(n)
    for m in sorted(u.terms):
        c = u.terms[m]
        g = coset_word(m, n)
        out = out * (r.conjugated_by(g) ** c)
    return out


def koszul_decompose(u):
    """Write a module vector as a combination of the elementary relations.

    Returns {(i, j): c_ij} (i < j, 0-based) with

        u = sum c_ij * ((x_j - 1) eps_i - (x_i - 1) eps_j).

    Works by peeling the last variable with a nonzero contribution: the
    difference u_i - u_i|x_j=1 is exactly divisible by (x_j - 1), and the
    evaluated vector is a module vector on fewer coordinates.  Raises
    ValueError when the input does not satisfy the defining constraint.
    """
    n = len(u)
    nvars = u[0].nvars if u else 0
    if n != nvars:
        raise ValueError("coordinate count must equal the number of variables")
    if not is_module_vector(u):
        raise ValueError("not a module vector: the defining constraint fails")
    cur = list(u)
    out = {}
    for j in range(n - 1, 0, -1):
        xj = LaurentPoly.variable(j, n)
        for i in range(j):
            low = cur[i].subs_one(j)
            diff = cur[i] - low
            if not diff.is_zero():
                h = diff.divide_exact(xj - 1)
                if h is None:
                    raise ArithmeticError("peeling division failed")
                out[(i, j)] = h
            cur[i] = low
        cur[j] = LaurentPoly.zero(n)
    return out


def realize_coords(u):
    """A word in the commutator subgroup with the given coordinates.

    The vector is decomposed over the elementary relations; each relation
    is realized by the corresponding basic commutator acted on by a ring
    scalar.  The elementary relation at (i, j) equals the coordinates of
    [x_i, x_j] times the unit -x_i x_j.
    """
    n = len(u)
    decomp = koszul_decompose(u)
    out = Word.identity(n)
    for (i, j) in sorted(decomp):
        c = decomp[(i, j)]
        base = Word.generator(i, n).commutator(Word.generator(j, n))
        unit = LaurentPoly.monomial(
            tuple(1 if k in (i, j) else 0 for k in range(n)), n, -1
        )
        out = out * module_power_word(base, c * unit)
    return out
