"""Detection of fixed points of IA-endomorphisms of free metabelian groups.

Writing the i-th image as x_i * s_i with s_i in the commutator subgroup,
a candidate fixed point inside the commutator subgroup is taken in the form

    g = [x1, x2]^z1 * [x2, x3]^z2 * ... * [x_{n-1}, x_n]^z_{n-1}

with ring scalars z_k.  Comparing coordinates of g and of its image turns
the fixed-point equation into a homogeneous linear system B z = 0 whose
column k is

    (x_{k+1}^-1 - 1) * v_k + (1 - x_k^-1) * v_{k+1},

v_k being the coordinate vector of s_k.  A nonzero kernel vector yields a
witness, which is always re-checked against the word-problem oracle; a
trivial kernel rules out every fixed point in the commutator subgroup,
because any such fixed point has a power (in the module sense) of the
candidate form, and the coordinate module is torsion free.

Outside the commutator subgroup the candidate is g = w_a * c with w_a the
canonical representative of the abelian vector a and c unknown with
coordinate vector u; the condition becomes the inhomogeneous system

    u * (J - I) = x^-a * (coords(w_a) - coords(image of w_a))

together with the membership constraint sum u_i (x_i - 1) = 0.  The solver
resolves a maximal nonsingular square subsystem by Cramer's rule with
exact-divisibility checks; underdetermined shapes are decided when the
undetermined coordinates touch only the membership row, and are reported
as undecided otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Optional

from .fox import jacobian, word_coords
from .laurent import LaurentPoly
from .magnus import (
    coset_word,
    is_trivial,
    module_power_word,
    realize_coords,
)
from .matrices import LaurentMatrix, cramer_solve
from .words import Word


class InternalCheckError(RuntimeError):
    """A structural invariant failed; indicates a bug, not bad input."""


def _require_ia(phi):
    if not phi.is_ia():
        raise ValueError("endomorphism is not IA (identical in abelianization)")


def is_fixed(phi, g):
    """Word-problem oracle: does the image of g equal g in the metabelian
    group?"""
    return is_trivial(phi.apply(g) * g.inverse())


def displacements(phi):
    """Coordinate vectors of the words s_i = x_i^-1 * image_i."""
    _require_ia(phi)
    n = phi.rank
    out = []
    for i, y in enumerate(phi.images):
        s = Word.generator(i, n).inverse() * y
        out.append(word_coords(s))
    return out


def fixed_point_system(phi):
    """The n x (n-1) system whose kernel parametrizes fixed points of the
    candidate commutator form."""
    _require_ia(phi)
    n = phi.rank
    v = displacements(phi)
    cols = []
    for k in range(n - 1):
        a = LaurentPoly.variable(k + 1, n, -1) - 1
        b = 1 - LaurentPoly.variable(k, n, -1)
        cols.append([a * v[k][j] + b * v[k + 1][j] for j in range(n)])
    return LaurentMatrix(n, [[cols[k][j] for k in range(n - 1)] for j in range(n)])


def adjacent_commutators(n):
    """The words [x_k, x_{k+1}], k = 1..n-1."""
    return [
        Word.generator(k, n).commutator(Word.generator(k + 1, n))
        for k in range(n - 1)
    ]


def commutator_form_word(z):
    """The word [x1,x2]^z1 ... [x_{n-1},x_n]^z_{n-1} for ring scalars z."""
    n = len(z) + 1
    out = Word.identity(n)
    for k, base in enumerate(adjacent_commutators(n)):
        if not z[k].is_zero():
            out = out * module_power_word(base, z[k])
    return out


def fixed_point_in_commutator(phi, verify=True):
    """A verified nontrivial fixed point inside the commutator subgroup,
    or None when no such fixed point exists."""
    _require_ia(phi)
    b = fixed_point_system(phi)
    z = b.kernel_vector()
    if z is None:
        return None
    g = commutator_form_word(z)
    if is_trivial(g):
        raise InternalCheckError("kernel vector realized to a trivial word")
    if verify and not is_fixed(phi, g):
        raise InternalCheckError("kernel witness failed the oracle check")
    return g


@dataclass
class CosetOutcome:
    """Result of the fixed-point search in one coset of the commutator
    subgroup: status is "found", "none" or "undecided"."""

    exponents: tuple
    status: str
    witness: Optional[Word] = None
    verified: bool = False


class CosetSolver:
    """Per-endomorphism context for coset searches.

    The Jacobian block and the structural decision (which route decides
    the system) are shared across cosets; only the right-hand side depends
    on the coset.
    """

    def __init__(self, phi):
        _require_ia(phi)
        self.phi = phi
        self.n = n = phi.rank
        self.J = jacobian(phi)
        jmi = self.J - LaurentMatrix.identity(n, n)
        self.G = jmi.transpose()
        self.membership = [LaurentPoly.variable(i, n) - 1 for i in range(n)]
        self.stacked = LaurentMatrix(n, self.G.entries + [self.membership])
        self.free_cols = [
            i
            for i in range(n)
            if all(self.G.entries[j][i].is_zero() for j in range(n))
        ]
        self.pivot_cols = [i for i in range(n) if i not in self.free_cols]
        self.sub_det = None
        self.mode, self.sub_rows = self._choose_route()

    def _choose_route(self):
        n = self.n
        rank_full = self.stacked.rank()
        if rank_full == n:
            for drop in range(n, -1, -1):
                rows = [r for r in range(n + 1) if r != drop]
                sub = self.stacked.submatrix(rows, list(range(n)))
                d = sub.det()
                if not d.is_zero():
                    self.sub_det = d
                    return "unique", rows
            raise InternalCheckError("full-rank system with no nonsingular subsystem")
        p = self.pivot_cols
        if p:
            gp = self.G.submatrix(list(range(n)), p)
            rank, prows, _ = gp.echelon_pivots()
            if rank == len(p):
                rows = sorted(prows)
                self.sub_det = self.G.submatrix(rows, p).det()
                return "decoupled", rows
        if not p:
            return "decoupled", []
        return "rank_deficient", None

    def solve(self, a, verify=True):
        n = self.n
        a = tuple(a)
        if len(a) != n:
            raise ValueError("coset exponent vector of wrong length")
        if not any(a):
            raise ValueError("the zero coset is the commutator-subgroup search")
        wa = coset_word(a, n)
        if is_fixed(self.phi, wa):
            return CosetOutcome(a, "found", wa, True)
        rhs = self._rhs(wa, a)
        if self.mode == "unique":
            return self._solve_unique(a, wa, rhs, verify)
        if self.mode == "decoupled":
            return self._solve_decoupled(a, wa, rhs, verify)
        return self._solve_rank_deficient(a, rhs)

    def _rhs(self, wa, a):
        n = self.n
        sa = word_coords(wa)
        ta = word_coords(self.phi.apply(wa))
        shift = LaurentPoly.monomial(tuple(-e for e in a), n)
        return [shift * (s - t) for s, t in zip(sa, ta)]

    def _tau(self, rhs):
        return rhs + [LaurentPoly.zero(self.n)]

    def _finish(self, a, wa, u, verify):
        c = realize_coords(u)
        g = wa * c
        if verify and not is_fixed(self.phi, g):
            raise InternalCheckError("coset witness failed the oracle check")
        return CosetOutcome(a, "found", g, verify)

    def _solve_unique(self, a, wa, rhs, verify):
        tau = self._tau(rhs)
        sub = self.stacked.submatrix(self.sub_rows, list(range(self.n)))
        res = cramer_solve(sub, [tau[r] for r in self.sub_rows], det=self.sub_det)
        if res.status == "singular":
            raise InternalCheckError("chosen subsystem became singular")
        if res.status == "no_solution_in_ring":
            return CosetOutcome(a, "none")
        u = res.solution
        full = self.stacked.mul_vector(u)
        if any((lhs - r) for lhs, r in zip(full, tau)):
            return CosetOutcome(a, "none")
        return self._finish(a, wa, u, verify)

    def _solve_decoupled(self, a, wa, rhs, verify):
        n = self.n
        p = self.pivot_cols
        u = [LaurentPoly.zero(n)] * n
        if p:
            gp = self.G.submatrix(self.sub_rows, p)
            res = cramer_solve(gp, [rhs[r] for r in self.sub_rows], det=self.sub_det)
            if res.status == "singular":
                raise InternalCheckError("decoupled subsystem became singular")
            if res.status == "no_solution_in_ring":
                return CosetOutcome(a, "none")
            for col, val in zip(p, res.solution):
                u[col] = val
        check = self.G.mul_vector(u)
        if any((lhs - r) for lhs, r in zip(check, rhs)):
            return CosetOutcome(a, "none")
        residual = LaurentPoly.zero(n)
        for i in p:
            residual = residual - u[i] * self.membership[i]
        for i in self.free_cols:
            low = residual.subs_one(i)
            diff = residual - low
            if not diff.is_zero():
                h = diff.divide_exact(LaurentPoly.variable(i, n) - 1)
                if h is None:
                    raise InternalCheckError("membership peeling division failed")
                u[i] = h
            residual = low
        if not residual.is_zero():
            return CosetOutcome(a, "none")
        return self._finish(a, wa, u, verify)

    def _solve_rank_deficient(self, a, rhs):
        tau = self._tau(rhs)
        augmented = LaurentMatrix(
            self.n,
            [row + [t] for row, t in zip(self.stacked.entries, tau)],
        )
        if augmented.rank() > self.stacked.rank():
            return CosetOutcome(a, "none")
        return CosetOutcome(a, "undecided")


def fixed_point_in_coset(phi, a, verify=True):
    """Search the coset with abelian vector a (nonzero) for a fixed point."""
    return CosetSolver(phi).solve(a, verify=verify)


def conjugates_fixed(phi, g):
    """Are all generator conjugates x_i g x_i^-1 also fixed?

    Requires g to be a fixed point inside the commutator subgroup.
    """
    if any(g.exponent_sums()):
        raise ValueError("word is not in the commutator subgroup")
    if not is_fixed(phi, g):
        raise ValueError("word is not a fixed point")
    n = phi.rank
    for i in range(n):
        if not is_fixed(phi, g.conjugated_by(Word.generator(i, n))):
            return False
    return True


@dataclass
class FixReport:
    """Aggregated search results for one endomorphism."""

    rank: int
    ia: bool
    det_vanishes: bool
    rank_defect_class: str
    witness_in_commutator: Optional[Word] = None
    witness_verified: bool = False
    cosets: list = field(default_factory=list)

    def found_any(self):
        if self.witness_in_commutator is not None:
            return True
        return any(c.status == "found" for c in self.cosets)


def rank_defect_class(phi, jmi=None):
    """"rank<=n-2" or "rank=n-1" for the matrix J - I of an IA input."""
    _require_ia(phi)
    n = phi.rank
    if jmi is None:
        jmi = jacobian(phi) - LaurentMatrix.identity(n, n)
    r = jmi.rank()
    if r > n - 1:
        raise InternalCheckError("J - I has full rank for an IA endomorphism")
    return "rank<=n-2" if r <= n - 2 else "rank=n-1"


def coset_box(n, bound):
    """All nonzero exponent vectors with max |a_i| <= bound, sorted."""
    return [
        a for a in product(range(-bound, bound + 1), repeat=n) if any(a)
    ]


def search_fixed(phi, bound, verify=True):
    """Run the commutator-subgroup detector plus every coset in the box."""
    _require_ia(phi)
    n = phi.rank
    jmi = jacobian(phi) - LaurentMatrix.identity(n, n)
    report = FixReport(
        rank=n,
        ia=True,
        det_vanishes=jmi.det().is_zero(),
        rank_defect_class=rank_defect_class(phi, jmi),
    )
    witness = fixed_point_in_commutator(phi, verify=verify)
    if witness is not None:
        report.witness_in_commutator = witness
        report.witness_verified = verify
    solver = CosetSolver(phi)
    for a in coset_box(n, bound):
        report.cosets.append(solver.solve(a, verify=verify))
    return report
