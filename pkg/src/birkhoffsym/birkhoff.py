"""Facet algebra of the polytope of doubly stochastic matrices.

The polytope B_n is the convex hull of the n! permutation matrices.  For
n >= 3 its facets, read as subsets of the vertex set S_n, are the n^2
sets F_ij = {pi : pi(i) != j}; it is more convenient to work with their
complements A_ij = {pi : pi(i) = j}, which obey

    |A_ij n A_kl| = (n-1)!  if i=k and j=l
                    0        if exactly one of i=k, j=l holds
                    (n-2)!   otherwise
    sigma A_ij tau^-1 = A_{tau(i), sigma(j)}
    {pi^-1 : pi in A_ij} = A_ji

Together these identities force every incidence-preserving vertex
bijection alpha to have the shape alpha(pi) = sigma pi^eps tau, and
decompose_symmetry extracts that certified triple.

Vertex indices are positions in the lexicographic enumeration of S_n
image tuples, the same order permcore uses for group elements, so vertex
labellings agree across modules.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import factorial

from .combiso import comb_automorphisms
from .errors import PreconditionError
from .exact import RationalMatrix
from .hull import facet_enumeration, incidence_of
from .perm import Permutation

MAX_N = 5


class NotFacetSymmetryError(ValueError):
    pass


class InconsistentSymmetryError(ValueError):
    pass


@dataclass(frozen=True)
class FacetLabel:
    i: int
    j: int


@dataclass(frozen=True)
class SymmetryDecomposition:
    sigma: Permutation
    tau: Permutation
    epsilon: int


@lru_cache(maxsize=8)
def sn_enumeration(n: int) -> tuple[Permutation, ...]:
    """The fixed vertex order of B_n: S_n sorted by image tuple."""
    return tuple(Permutation(p) for p in itertools.permutations(range(n)))


@lru_cache(maxsize=8)
def _sn_index(n: int) -> dict[tuple[int, ...], int]:
    return {p.images: v for v, p in enumerate(sn_enumeration(n))}


def permutation_matrix(perm: Permutation) -> RationalMatrix:
    """P(pi) with P(pi)[i][j] = 1 iff pi(j) = i, so P is a homomorphism:
    P(pi sigma) = P(pi) P(sigma)."""
    n = perm.degree
    return RationalMatrix(n, n, (1 if perm(j) == i else 0
                                 for i in range(n) for j in range(n)))


def birkhoff_vertices(n: int) -> list[RationalMatrix]:
    if not 1 <= n <= MAX_N:
        raise PreconditionError(f"vertex enumeration supports 1 <= n <= {MAX_N}")
    return [permutation_matrix(p) for p in sn_enumeration(n)]


def analytic_facet_sets(n: int) -> dict[FacetLabel, frozenset[int]]:
    """A_ij = {pi : pi(i) = j} as index sets into the vertex enumeration.

    For n <= 2 these sets do not describe facets (B_1 is a point, B_2 a
    segment with only 2 facets), so such n is rejected.
    """
    if n < 3:
        raise PreconditionError("facet description requires n >= 3")
    perms = sn_enumeration(n)
    out: dict[FacetLabel, frozenset[int]] = {}
    for i in range(n):
        for j in range(n):
            out[FacetLabel(i, j)] = frozenset(
                v for v, p in enumerate(perms) if p(i) == j)
    return out


@dataclass
class TableReport:
    n: int
    cases_checked: int
    failures: list[tuple[int, int, int, int]]
    passed: bool


def verify_intersection_table(n: int) -> TableReport:
    """Check |A_ij n A_kl| against the four-case formula for all n^4 cases."""
    if not 3 <= n <= MAX_N:
        raise PreconditionError(f"intersection table supports 3 <= n <= {MAX_N}")
    sets = analytic_facet_sets(n)
    failures = []
    cases = 0
    for i in range(n):
        for j in range(n):
            a = sets[FacetLabel(i, j)]
            for k in range(n):
                for l in range(n):
                    cases += 1
                    got = len(a & sets[FacetLabel(k, l)])
                    if i == k and j == l:
                        want = factorial(n - 1)
                    elif i == k or j == l:
                        want = 0
                    else:
                        want = factorial(n - 2)
                    if got != want:
                        failures.append((i, j, k, l))
    return TableReport(n, cases, failures, not failures)


@dataclass
class LawReport:
    n: int
    translation_cases: int
    inversion_cases: int
    failures: list[str]
    passed: bool


def verify_transformation_law(n: int) -> LawReport:
    """Check sigma A_ij tau^-1 = A_{tau(i), sigma(j)} for all sigma, tau
    and all (i, j), and A_ij^-1 = A_ji."""
    if not 3 <= n <= 4:
        raise PreconditionError("transformation law check supports 3 <= n <= 4")
    perms = sn_enumeration(n)
    index = _sn_index(n)
    sets = analytic_facet_sets(n)
    failures = []
    translation_cases = 0
    for sigma in perms:
        for tau in perms:
            tau_inv = tau.inverse()
            for i in range(n):
                for j in range(n):
                    translation_cases += 1
                    image = frozenset(index[(sigma * perms[v] * tau_inv).images]
                                      for v in sets[FacetLabel(i, j)])
                    if image != sets[FacetLabel(tau(i), sigma(j))]:
                        failures.append(
                            f"sigma={sigma.cycle_string()} tau={tau.cycle_string()} "
                            f"A({i},{j})")
    inversion_cases = 0
    for i in range(n):
        for j in range(n):
            inversion_cases += 1
            image = frozenset(index[perms[v].inverse().images]
                              for v in sets[FacetLabel(i, j)])
            if image != sets[FacetLabel(j, i)]:
                failures.append(f"inversion A({i},{j})")
    return LawReport(n, translation_cases, inversion_cases, failures,
                     not failures)


def inversion_vertex_map(n: int) -> Permutation:
    """The vertex permutation pi -> pi^-1 of the S_n enumeration."""
    index = _sn_index(n)
    return Permutation(index[p.inverse().images] for p in sn_enumeration(n))


def _facet_image_map(n, alpha, sets, set_index):
    image_map = {}
    for label, members in sets.items():
        image = frozenset(alpha(v) for v in members)
        target = set_index.get(image)
        if target is None:
            raise NotFacetSymmetryError("not a facet symmetry")
        image_map[label] = target
    return image_map


def decompose_symmetry(n: int, alpha: Permutation) -> SymmetryDecomposition:
    """Certified normal form (sigma, tau, epsilon) of a vertex bijection.

    Steps: (1) each A_ij must map onto some A_kl; (2) the image of a row
    family {A_i*} is a row family (epsilon = +1) or a column family
    (epsilon = -1; compose with inversion and redo); (3) with row-to-row
    images A_ij -> A_{r(i), c(j)}, the law sigma A_ij tau^-1 =
    A_{tau(i), sigma(j)} gives tau = r^-1 and sigma = c; (4) the triple is
    verified pointwise on all n! vertices before being returned.
    """
    if not 3 <= n <= MAX_N:
        raise PreconditionError(f"decomposition supports 3 <= n <= {MAX_N}")
    perms = sn_enumeration(n)
    if alpha.degree != len(perms):
        raise PreconditionError(
            f"alpha must permute {len(perms)} vertices, got degree {alpha.degree}")
    sets = analytic_facet_sets(n)
    set_index = {members: label for label, members in sets.items()}

    image_map = _facet_image_map(n, alpha, sets, set_index)
    row_constant = all(
        len({image_map[FacetLabel(i, j)].i for j in range(n)}) == 1
        for i in range(n))
    if row_constant:
        epsilon = 1
        working = alpha
    else:
        col_constant = all(
            len({image_map[FacetLabel(i, j)].j for j in range(n)}) == 1
            for i in range(n))
        if not col_constant:
            raise InconsistentSymmetryError("inconsistent")
        epsilon = -1
        working = alpha * inversion_vertex_map(n)
        image_map = _facet_image_map(n, working, sets, set_index)
        if not all(len({image_map[FacetLabel(i, j)].i for j in range(n)}) == 1
                   for i in range(n)):
            raise InconsistentSymmetryError("inconsistent")

    r = [image_map[FacetLabel(i, 0)].i for i in range(n)]
    c = [image_map[FacetLabel(0, j)].j for j in range(n)]
    if any(image_map[FacetLabel(i, j)].j != c[j]
           for i in range(n) for j in range(n)):
        raise InconsistentSymmetryError("inconsistent")
    try:
        tau = Permutation(r).inverse()
        sigma = Permutation(c)
    except ValueError as exc:
        raise InconsistentSymmetryError("inconsistent") from exc

    index = _sn_index(n)
    for v, p in enumerate(perms):
        reconstructed = sigma * (p if epsilon == 1 else p.inverse()) * tau
        if index[reconstructed.images] != alpha(v):
            raise InconsistentSymmetryError("inconsistent")
    return SymmetryDecomposition(sigma, tau, epsilon)


def reconstruct_symmetry(n: int, dec: SymmetryDecomposition) -> Permutation:
    """The vertex permutation pi -> sigma pi^eps tau of a decomposition."""
    index = _sn_index(n)
    return Permutation(
        index[(dec.sigma * (p if dec.epsilon == 1 else p.inverse()) * dec.tau).images]
        for p in sn_enumeration(n))


@dataclass
class SymmetryGroupReport:
    n: int
    n_vertices: int
    n_facets: int
    dim: int
    facets_match_analytic: bool
    aut_order: int
    expected_order: int
    roundtrip_failures: int
    passed: bool


def verify_symmetry_group(n: int) -> SymmetryGroupReport:
    """End-to-end check that the combinatorial symmetry group of B_n is
    {pi -> sigma pi^eps tau}: hull, incidence, automorphism search, order
    count 2(n!)^2, facet family comparison, and full decomposition
    round-trip.  Hull-based, so n is capped at 4.
    """
    if not 3 <= n <= 4:
        raise PreconditionError("symmetry group verification supports n in {3, 4}")
    vertices = [m.entries for m in birkhoff_vertices(n)]
    polytope = facet_enumeration(vertices)
    inc = incidence_of(polytope)
    analytic = analytic_facet_sets(n)
    n_fact = factorial(n)
    complements = {frozenset(range(n_fact)) - members
                   for members in analytic.values()}
    facets_match = set(polytope.tight_sets()) == complements

    aut = comb_automorphisms(inc)
    expected = 2 * n_fact ** 2
    roundtrip_failures = 0
    for p in aut.vertex_permutations.elements:
        try:
            dec = decompose_symmetry(n, p)
        except (NotFacetSymmetryError, InconsistentSymmetryError):
            roundtrip_failures += 1
            continue
        if reconstruct_symmetry(n, dec).images != p.images:
            roundtrip_failures += 1
    passed = (facets_match and aut.order == expected
              and roundtrip_failures == 0)
    return SymmetryGroupReport(
        n=n,
        n_vertices=polytope.n_vertices,
        n_facets=polytope.n_facets,
        dim=polytope.dim,
        facets_match_analytic=facets_match,
        aut_order=aut.order,
        expected_order=expected,
        roundtrip_failures=roundtrip_failures,
        passed=passed,
    )
