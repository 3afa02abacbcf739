"""Representation polytopes: convex hulls of finite matrix groups.

A finite group of invertible rational d x d matrices is vectorized
row-major into Q^(d^2); the convex hull of the element vectors is the
representation polytope.  The left and right translation actions of the
group permute the vertices linearly, so they always appear in the
combinatorial symmetry group of the polytope; inversion is checked and
reported separately since it need not be an affine map of the hull.

The uniqueness question asks which representation polytopes are
combinatorially equivalent to the hull B_n of all n x n permutation
matrices; catalog entries carry an optional expected answer so the
comparison doubles as a regression check.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from typing import Optional

from .birkhoff import birkhoff_vertices, permutation_matrix
from .combiso import comb_automorphisms, comb_equivalent
from .errors import PreconditionError
from .exact import RationalMatrix, inverse, parse_rational
from .gamma import GroupLabelling, left_translation
from .hull import Polytope, certify_vertices, facet_enumeration, incidence_of
from .perm import Permutation, PermutationGroup, named_group

MAX_CLOSURE = 500
MAX_POLYTOPE_ELEMENTS = 30


class MatrixGroup:
    """A finite matrix group with a fixed element order: the identity
    first, the rest sorted by entry tuple."""

    __slots__ = ("dim", "elements", "generators", "_index")

    def __init__(self, dim: int, elements: list[RationalMatrix],
                 generators: list[RationalMatrix]):
        self.dim = dim
        self.elements = list(elements)
        self.generators = list(generators)
        assert self.elements[0].is_identity()
        self._index = {m: i for i, m in enumerate(self.elements)}

    @property
    def order(self) -> int:
        return len(self.elements)

    def index(self, matrix: RationalMatrix) -> int:
        return self._index[matrix]

    def inverse_indices(self) -> list[int]:
        return [self._index[inverse(m)] for m in self.elements]

    def element_group(self) -> PermutationGroup:
        """The abstract group as permutations, via left translation on
        element indices.  The translation by element a sends index 0
        (the identity matrix) to a, so sorting the permutations by image
        tuple reproduces the matrix order: position i holds the
        translation by element i."""
        perms = [Permutation(self._index[a * x] for x in self.elements)
                 for a in self.elements]
        gen_perms = [Permutation(self._index[g * x] for x in self.elements)
                     for g in self.generators]
        return PermutationGroup(self.order, perms, gen_perms or None)

    def labelling(self) -> GroupLabelling:
        return GroupLabelling(self.element_group())


def matrix_closure(generators: list[RationalMatrix],
                   bound: int = MAX_CLOSURE) -> MatrixGroup:
    """Close a generator list under multiplication.

    A finite set of invertible matrices containing the identity and
    closed under products is a group (each element's powers cycle), so
    plain product saturation suffices.  Exceeding the bound raises,
    since the closure may well be infinite.
    """
    if not generators:
        raise PreconditionError("matrix closure needs at least one generator")
    dim = generators[0].rows
    for g in generators:
        if g.rows != g.cols or g.rows != dim:
            raise PreconditionError("generators must be square of equal size")
        try:
            inverse(g)
        except ValueError as exc:
            raise PreconditionError("generator is not invertible") from exc
    ident = RationalMatrix.identity(dim)
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for m in frontier:
            for g in generators:
                prod = m * g
                if prod not in seen:
                    seen.add(prod)
                    if len(seen) > bound:
                        raise PreconditionError("group not finite at this bound")
                    nxt.append(prod)
        frontier = nxt
    others = sorted((m for m in seen if m != ident),
                    key=lambda m: m.entries)
    return MatrixGroup(dim, [ident] + others, list(generators))


def matrix_group_from_perm_group(group: PermutationGroup) -> MatrixGroup:
    """Permutation matrices of a permutation group, acting on its own
    points.  For a cyclic shift on |G| points this is the regular
    representation; for S_n on n points it is the standard one."""
    gens = group.generator_perms() or [g for g in group.elements
                                       if not g.is_identity()][:2]
    if not gens:
        gens = [group.identity]
    return matrix_closure([permutation_matrix(g) for g in gens],
                          bound=max(MAX_CLOSURE, group.order))


def regular_matrix_group(group: PermutationGroup) -> MatrixGroup:
    """Left regular representation: |G| x |G| permutation matrices of the
    translation action of G on itself."""
    lab = GroupLabelling(group)
    gens = group.generator_perms() or group.elements[1:2]
    return matrix_closure(
        [permutation_matrix(left_translation(lab, g)) for g in gens],
        bound=max(MAX_CLOSURE, group.order))


def representation_polytope(mgroup: MatrixGroup) -> Polytope:
    """Convex hull of the row-major vectorized elements, vertex i being
    element i.  Every element must be a genuine vertex (no matrix may
    fall inside the hull of the others); the facet certificates of the
    hull are checked to confirm that."""
    if mgroup.order > MAX_POLYTOPE_ELEMENTS:
        raise PreconditionError(
            f"representation polytope supports at most "
            f"{MAX_POLYTOPE_ELEMENTS} elements")
    polytope = facet_enumeration([m.entries for m in mgroup.elements])
    if not all(certify_vertices(polytope)):
        raise ValueError("an element vectorization is not a vertex of the hull")
    return polytope


def translation_vertex_maps(mgroup: MatrixGroup) -> tuple[
        list[Permutation], list[Permutation], Permutation]:
    """Vertex permutations of the element list: left translations
    x -> g x, right translations x -> x g^-1, and inversion x -> x^-1."""
    inv = mgroup.inverse_indices()
    lams = []
    rhos = []
    for g_idx, g in enumerate(mgroup.elements):
        g_inv = mgroup.elements[inv[g_idx]]
        lams.append(Permutation(mgroup.index(g * x) for x in mgroup.elements))
        rhos.append(Permutation(mgroup.index(x * g_inv) for x in mgroup.elements))
    iota = Permutation(inv)
    return lams, rhos, iota


@dataclass
class GammaActsReport:
    group_order: int
    aut_order: int
    lambda_pass: bool
    rho_pass: bool
    iota_in_group: bool
    passed: bool


def verify_gamma_acts(mgroup: MatrixGroup) -> GammaActsReport:
    """Check that every left and every right translation of the element
    set is a combinatorial symmetry of the representation polytope.
    Inversion is checked too but reported separately: it preserves the
    hull only for special representations."""
    polytope = representation_polytope(mgroup)
    inc = incidence_of(polytope)
    aut = comb_automorphisms(inc)
    group = aut.vertex_permutations
    lams, rhos, iota = translation_vertex_maps(mgroup)
    lambda_pass = all(p in group for p in lams)
    rho_pass = all(p in group for p in rhos)
    iota_in = iota in group
    return GammaActsReport(
        group_order=mgroup.order,
        aut_order=aut.order,
        lambda_pass=lambda_pass,
        rho_pass=rho_pass,
        iota_in_group=iota_in,
        passed=lambda_pass and rho_pass,
    )


def matrix_from_rows(rows: list[list]) -> RationalMatrix:
    dim = len(rows)
    entries = []
    for row in rows:
        if len(row) != dim:
            raise ValueError("matrix rows must be square")
        for cell in row:
            entries.append(parse_rational(cell) if isinstance(cell, str)
                           else cell)
    return RationalMatrix(dim, dim, entries)


def matrix_group_from_document(doc: dict) -> "CatalogEntry":
    """Parse {"name", "dim", "generators", "order"?, "expect_equivalent"?}
    where each generator is a dim x dim array of integers or "p/q"
    strings."""
    if "generators" not in doc or "dim" not in doc:
        raise ValueError("matrix group document needs 'dim' and 'generators'")
    dim = doc["dim"]
    gens = []
    for rows in doc["generators"]:
        if len(rows) != dim:
            raise ValueError("generator does not match declared dim")
        gens.append(matrix_from_rows(rows))
    mgroup = matrix_closure(gens)
    declared = doc.get("order")
    if declared is not None and mgroup.order != declared:
        raise ValueError(
            f"closure has order {mgroup.order}, document declares {declared}")
    return CatalogEntry(
        name=doc.get("name", "unnamed"),
        matrix_group=mgroup,
        expect_equivalent=doc.get("expect_equivalent"),
        declared_order=declared,
    )


def load_exceptional_c6() -> MatrixGroup:
    """The 4-dimensional order-6 matrix group whose representation
    polytope is combinatorially equivalent to B_3 without being a
    permutation representation of S_3."""
    text = resources.files("birkhoffsym").joinpath(
        "data/c6_exceptional.json").read_text()
    return matrix_group_from_document(json.loads(text)).matrix_group


@dataclass
class CatalogEntry:
    name: str
    matrix_group: MatrixGroup
    expect_equivalent: Optional[bool] = None
    declared_order: Optional[int] = None


@dataclass
class EntryReport:
    name: str
    order: int
    dim: int
    n_vertices: int
    n_facets: int
    equivalent: bool
    expected: Optional[bool]
    witness: Optional[tuple[int, ...]]
    passed: bool


@dataclass
class UniquenessReport:
    n: int
    entries: list[EntryReport]
    passed: bool


def default_catalog(n: int) -> list[CatalogEntry]:
    if n == 3:
        return [
            CatalogEntry("s3_standard",
                         matrix_group_from_perm_group(named_group("s3")),
                         expect_equivalent=True, declared_order=6),
            CatalogEntry("c6_exceptional", load_exceptional_c6(),
                         expect_equivalent=True, declared_order=6),
            CatalogEntry("c6_regular",
                         matrix_group_from_perm_group(named_group("c6")),
                         expect_equivalent=False, declared_order=6),
            CatalogEntry("s3_regular",
                         regular_matrix_group(named_group("s3")),
                         expect_equivalent=False, declared_order=6),
            CatalogEntry("c4_regular",
                         matrix_group_from_perm_group(named_group("c4")),
                         expect_equivalent=False, declared_order=4),
            CatalogEntry("v4_regular",
                         matrix_group_from_perm_group(named_group("v4")),
                         expect_equivalent=False, declared_order=4),
        ]
    if n == 4:
        return [
            CatalogEntry("s4_standard",
                         matrix_group_from_perm_group(named_group("s4")),
                         expect_equivalent=True, declared_order=24),
            CatalogEntry("d4_standard",
                         matrix_group_from_perm_group(named_group("d4")),
                         expect_equivalent=False, declared_order=8),
            CatalogEntry("c4_regular",
                         matrix_group_from_perm_group(named_group("c4")),
                         expect_equivalent=False, declared_order=4),
        ]
    raise PreconditionError("uniqueness check supports n in {3, 4}")


def uniqueness_check(n: int,
                     catalog: Optional[list[CatalogEntry]] = None
                     ) -> UniquenessReport:
    """Compare each catalog entry's representation polytope with B_n
    combinatorially, emitting a vertex bijection witness when they are
    equivalent."""
    if n not in (3, 4):
        raise PreconditionError("uniqueness check supports n in {3, 4}")
    if catalog is None:
        catalog = default_catalog(n)
    reference = facet_enumeration(
        [m.entries for m in birkhoff_vertices(n)])
    reference_inc = incidence_of(reference)
    entry_reports = []
    for entry in catalog:
        if (entry.declared_order is not None
                and entry.matrix_group.order != entry.declared_order):
            raise ValueError(
                f"catalog entry {entry.name}: closure order "
                f"{entry.matrix_group.order} != declared {entry.declared_order}")
        polytope = representation_polytope(entry.matrix_group)
        inc = incidence_of(polytope)
        witness = comb_equivalent(inc, reference_inc)
        equivalent = witness is not None
        ok = entry.expect_equivalent is None or equivalent == entry.expect_equivalent
        entry_reports.append(EntryReport(
            name=entry.name,
            order=entry.matrix_group.order,
            dim=polytope.dim,
            n_vertices=polytope.n_vertices,
            n_facets=polytope.n_facets,
            equivalent=equivalent,
            expected=entry.expect_equivalent,
            witness=witness,
            passed=ok,
        ))
    return UniquenessReport(n, entry_reports,
                            all(e.passed for e in entry_reports))
