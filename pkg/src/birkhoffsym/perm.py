"""Finite permutations and explicitly listed permutation groups.

Conventions, fixed once and used everywhere:

* A permutation of degree m acts on points 0..m-1 and is stored as its
  image tuple, so p(i) == p.images[i].
* Composition is right-to-left: (p * q)(x) = p(q(x)), i.e. q acts first.
* Cycle notation uses the same point labels: "(0 1 2)(3 4)", identity "()".
* Group elements are kept fully enumerated, sorted by image tuple.  The
  identity's image tuple (0, 1, ..., m-1) is the lexicographic minimum of
  all bijections, so sorted element lists always start with the identity.

Groups here stay small (a few thousand elements at the very most), which is
why explicit element lists and index-based multiplication tables beat any
stabilizer-chain machinery in both simplicity and, at this scale, speed.
"""

from __future__ import annotations

import re
from functools import lru_cache
from typing import Iterable, Optional, Sequence

from .errors import NotASubgroupError, PreconditionError


class Permutation:
    __slots__ = ("images",)

    def __init__(self, images: Iterable[int]):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation of 0..{len(images) - 1}: {images}")
        object.__setattr__(self, "images", images)

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(range(degree))

    @classmethod
    def from_cycles(cls, text: str, degree: int) -> "Permutation":
        return parse_cycles(text, degree)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: "Permutation") -> "Permutation":
        # self after other: (self * other)(x) = self(other(x))
        if self.degree != other.degree:
            raise ValueError("composing permutations of different degrees")
        img = self.images
        return Permutation(img[x] for x in other.images)

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, x in enumerate(self.images):
            inv[x] = i
        return Permutation(inv)

    def __pow__(self, k: int) -> "Permutation":
        if k < 0:
            return self.inverse() ** (-k)
        result = Permutation.identity(self.degree)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def is_identity(self) -> bool:
        return all(x == i for i, x in enumerate(self.images))

    def order(self) -> int:
        n = 1
        p = self
        while not p.is_identity():
            p = p * self
            n += 1
        return n

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each rotated to start at its least point,
        sorted by that least point."""
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start] or self.images[start] == start:
                seen[start] = True
                continue
            cyc = [start]
            seen[start] = True
            x = self.images[start]
            while x != start:
                cyc.append(x)
                seen[x] = True
                x = self.images[x]
            out.append(tuple(cyc))
        return out

    def cycle_string(self) -> str:
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + " ".join(str(p) for p in c) + ")" for c in cycs)

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __lt__(self, other: "Permutation") -> bool:
        return self.images < other.images

    def __le__(self, other: "Permutation") -> bool:
        return self.images <= other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        return f"Permutation({self.cycle_string()}, degree={self.degree})"


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, degree: int) -> Permutation:
    """Parse cycle notation like "(0 1)(2 3)" into a permutation of the
    given degree.  "()" or an empty string is the identity.  Points may be
    separated by spaces or commas.  Repeated points are rejected.
    """
    s = text.strip()
    if s in ("", "()"):
        return Permutation.identity(degree)
    if not re.fullmatch(r"(\s*\([^()]*\)\s*)+", s):
        raise ValueError(f"malformed cycle notation: {text!r}")
    images = list(range(degree))
    used: set[int] = set()
    for body in _CYCLE_RE.findall(s):
        pts = [int(t) for t in re.split(r"[\s,]+", body.strip()) if t]
        if not pts:
            continue
        for p in pts:
            if p < 0 or p >= degree:
                raise ValueError(f"point {p} out of range for degree {degree}")
            if p in used:
                raise ValueError(f"point {p} repeated in {text!r}")
            used.add(p)
        for a, b in zip(pts, pts[1:] + pts[:1]):
            images[a] = b
    return Permutation(images)


class PermutationGroup:
    """A finite permutation group given by its full, sorted element list.

    `generators` carries (tag, permutation) pairs for reporting; tags are
    free-form labels.  Equality ignores tags and compares element sets.
    """

    __slots__ = ("degree", "elements", "generators", "_element_set")

    def __init__(self, degree: int, elements: Sequence[Permutation],
                 generators: Sequence[tuple[str, Permutation]] = ()):
        elements = tuple(sorted(set(elements)))
        if not elements or not elements[0].is_identity():
            raise ValueError("element list must contain the identity")
        if any(p.degree != degree for p in elements):
            raise ValueError("element of wrong degree")
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "elements", elements)
        object.__setattr__(self, "generators", tuple(generators))
        object.__setattr__(self, "_element_set", frozenset(elements))

    def __setattr__(self, name, value):
        raise AttributeError("PermutationGroup is immutable")

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> Permutation:
        return self.elements[0]

    def element_set(self) -> frozenset[Permutation]:
        return self._element_set

    def __contains__(self, p: Permutation) -> bool:
        return p in self._element_set

    def __eq__(self, other) -> bool:
        return (isinstance(other, PermutationGroup)
                and self.degree == other.degree
                and self.elements == other.elements)

    def __hash__(self) -> int:
        return hash((self.degree, self.elements))

    def __repr__(self) -> str:
        gens = ", ".join(tag for tag, _ in self.generators) or "full list"
        return f"PermutationGroup(degree={self.degree}, order={self.order}, gens=[{gens}])"

    def is_subgroup_of(self, other: "PermutationGroup") -> bool:
        return (self.degree == other.degree
                and self._element_set <= other._element_set)

    def generator_perms(self) -> list[Permutation]:
        return [p for _, p in self.generators]


def closure(generators: Sequence[Permutation],
            tags: Optional[Sequence[str]] = None,
            max_order: Optional[int] = None) -> PermutationGroup:
    """Group generated by the given permutations, by breadth-first closure.

    Every element of the closure is a word in the generators; starting from
    the identity and right-multiplying frontier elements by generators
    reaches each word in length order.  max_order aborts runaway closures.
    """
    if not generators:
        raise ValueError("closure needs at least one generator or a degree hint")
    degree = generators[0].degree
    if any(g.degree != degree for g in generators):
        raise ValueError("generators act on different point sets")
    gen_imgs = [g.images for g in generators]
    ident = tuple(range(degree))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for w in frontier:
            for g in gen_imgs:
                prod = tuple(w[x] for x in g)  # w * g, g acts first
                if prod not in seen:
                    seen.add(prod)
                    nxt.append(prod)
                    if max_order is not None and len(seen) > max_order:
                        raise PreconditionError(
                            f"closure exceeded {max_order} elements")
        frontier = nxt
    if tags is None:
        tags = [g.cycle_string() for g in generators]
    tagged = tuple(zip(tags, generators))
    return PermutationGroup(degree, [Permutation(t) for t in seen], tagged)


def symmetric_group(n: int) -> PermutationGroup:
    """S_n on points 0..n-1 with transposition and n-cycle generators."""
    import itertools
    if n < 1:
        raise ValueError("symmetric_group needs n >= 1")
    elements = [Permutation(p) for p in itertools.permutations(range(n))]
    if n == 1:
        gens: tuple = (("()", Permutation.identity(1)),)
    elif n == 2:
        gens = (("(0 1)", parse_cycles("(0 1)", 2)),)
    else:
        t = parse_cycles("(0 1)", n)
        c = Permutation(list(range(1, n)) + [0])
        gens = (("(0 1)", t), (c.cycle_string(), c))
    return PermutationGroup(n, elements, gens)


class IndexedGroup:
    """Index-level view of a group: elements as positions in the sorted
    list, products looked up in a table.  Built lazily because the table
    costs order^2 memory; only routines doing heavy subgroup arithmetic
    use it.
    """

    __slots__ = ("degree", "elems", "index", "inv", "table", "identity_index")

    def __init__(self, group: PermutationGroup):
        self.degree = group.degree
        self.elems = [p.images for p in group.elements]
        self.index = {img: i for i, img in enumerate(self.elems)}
        n = len(self.elems)
        ident = tuple(range(self.degree))
        self.identity_index = self.index[ident]
        inv = [0] * n
        for i, img in enumerate(self.elems):
            inv_img = [0] * self.degree
            for a, b in enumerate(img):
                inv_img[b] = a
            inv[i] = self.index[tuple(inv_img)]
        self.inv = inv
        idx = self.index
        elems = self.elems
        self.table = [
            [idx[tuple(a[x] for x in b)] for b in elems]  # row a, col b: a*b
            for a in elems
        ]

    @property
    def order(self) -> int:
        return len(self.elems)

    def mul(self, i: int, j: int) -> int:
        return self.table[i][j]

    def closure_indices(self, seeds: Iterable[int],
                        cap: Optional[int] = None) -> Optional[frozenset[int]]:
        """Subgroup generated by the seed indices.  Returns None if a cap is
        given and exceeded."""
        table = self.table
        seeds = list(dict.fromkeys(seeds))
        known = {self.identity_index}
        known.update(seeds)
        if cap is not None and len(known) > cap:
            return None
        frontier = list(known)
        while frontier:
            nxt = []
            for w in frontier:
                row = table[w]
                for s in seeds:
                    p = row[s]
                    if p not in known:
                        known.add(p)
                        nxt.append(p)
                        if cap is not None and len(known) > cap:
                            return None
            frontier = nxt
        return frozenset(known)

    def subgroup_from_indices(self, group: PermutationGroup,
                              members: Iterable[int],
                              gen_indices: Sequence[int] = ()) -> PermutationGroup:
        elems = [group.elements[i] for i in members]
        gens = tuple((group.elements[i].cycle_string(), group.elements[i])
                     for i in gen_indices)
        if not gens:
            gens = tuple((p.cycle_string(), p) for p in elems if not p.is_identity())[:2]
        return PermutationGroup(group.degree, elems, gens)


@lru_cache(maxsize=16)
def indexed(group: PermutationGroup) -> IndexedGroup:
    return IndexedGroup(group)


def centralizer(group: PermutationGroup, sub: PermutationGroup) -> PermutationGroup:
    """C_G(H) = elements of G commuting with every element of H.

    Commuting with the generators of H is enough, since conjugation by a
    fixed g is an automorphism of the permutation group.
    """
    if not sub.is_subgroup_of(group):
        raise NotASubgroupError("centralizer: H is not a subgroup of G")
    gens = sub.generator_perms()
    if not gens:
        gens = [p for p in sub.elements if not p.is_identity()]
    if not gens:
        return PermutationGroup(group.degree, group.elements,
                                group.generators)
    members = [g for g in group.elements
               if all((g * h).images == (h * g).images for h in gens)]
    tagged = tuple((p.cycle_string(), p) for p in members if not p.is_identity())[:4]
    return PermutationGroup(group.degree, members, tagged)


def all_subgroups(group: PermutationGroup, bound: int = 200) -> list[PermutationGroup]:
    """Every subgroup of G, by closing single-element extensions.

    Any subgroup K = <g1, ..., gk> is reached: the chain of closures of its
    generator prefixes consists of subgroups, each obtained from the
    previous by one extension, so a worklist over (found subgroup, extra
    element) pairs is exhaustive.  Results are sorted by (order, element
    list) for determinism.
    """
    if group.order > bound:
        raise PreconditionError(
            f"group of order {group.order} exceeds subgroup-enumeration bound {bound}")
    ig = indexed(group)
    n = ig.order
    trivial = frozenset({ig.identity_index})
    found: dict[frozenset[int], tuple[int, ...]] = {trivial: ()}
    queue = [trivial]
    while queue:
        members = queue.pop()
        gens = found[members]
        for g in range(n):
            if g in members:
                continue
            closed = ig.closure_indices(gens + (g,))
            if closed not in found:
                found[closed] = gens + (g,)
                queue.append(closed)
    subs = [ig.subgroup_from_indices(group, sorted(members), gens)
            for members, gens in found.items()]
    subs.sort(key=lambda h: (h.order, tuple(p.images for p in h.elements)))
    return subs


def regular_subgroups(group: PermutationGroup, base: int = 0,
                      max_degree: int = 24, max_order: int = 1500) -> list[PermutationGroup]:
    """All sharply transitive (regular) subgroups of G.

    A regular subgroup U has exactly one element sending `base` to each
    point, so U picks one element from each fiber {g in G : g(base) = x}.
    The search branches over the least point whose fiber element is not yet
    determined and closes after each choice; a partial set is pruned as
    soon as its closure exceeds the degree or hits one fiber twice.  Both
    conditions hold for every subset of a regular subgroup, so no regular
    subgroup is ever pruned, and each is found exactly once because all its
    fiber choices are forced.
    """
    m = group.degree
    if m > max_degree:
        raise PreconditionError(f"degree {m} exceeds bound {max_degree}")
    if group.order > max_order:
        raise PreconditionError(f"order {group.order} exceeds bound {max_order}")
    if group.order % m != 0:
        return []
    ig = indexed(group)
    elems = ig.elems
    fibers: list[list[int]] = [[] for _ in range(m)]
    for i, img in enumerate(elems):
        fibers[img[base]].append(i)
    if any(not f for f in fibers):
        return []  # not transitive, so no transitive subgroup exists

    table = ig.table
    results: list[frozenset[int]] = []

    def close_with(current: frozenset[int], extra: int) -> Optional[frozenset[int]]:
        # closure of current (already a subgroup) plus one element, pruned
        # on size > m or on two elements sharing a fiber
        point_of: dict[int, int] = {elems[i][base]: i for i in current}
        known = set(current)
        frontier = [extra]
        x = elems[extra][base]
        if x in point_of:
            return None
        point_of[x] = extra
        known.add(extra)
        while frontier:
            a = frontier.pop()
            row_a = table[a]
            for b in list(known):
                for p in (row_a[b], table[b][a]):
                    if p not in known:
                        x = elems[p][base]
                        if x in point_of:
                            return None
                        if len(known) >= m:
                            return None
                        point_of[x] = p
                        known.add(p)
                        frontier.append(p)
        return frozenset(known)

    def extend(current: frozenset[int]) -> None:
        if len(current) == m:
            results.append(current)
            return
        covered = {elems[i][base] for i in current}
        x = min(p for p in range(m) if p not in covered)
        for g in fibers[x]:
            closed = close_with(current, g)
            if closed is not None:
                extend(closed)

    extend(frozenset({ig.identity_index}))
    subs = []
    for members in sorted(results, key=sorted):
        sub = ig.subgroup_from_indices(group, sorted(members))
        subs.append(sub)
    subs.sort(key=lambda h: tuple(p.images for p in h.elements))
    return subs


def is_regular(group: PermutationGroup, sub: PermutationGroup, base: int = 0) -> bool:
    """Sharp transitivity check: |U| equals the degree and the images of
    `base` under U hit every point exactly once."""
    if not sub.is_subgroup_of(group):
        raise NotASubgroupError("is_regular: not a subgroup")
    hits = {p(base) for p in sub.elements}
    return sub.order == group.degree and len(hits) == group.degree


_BUILTIN_GENERATORS: dict[str, tuple[int, tuple[str, ...]]] = {
    "c2": (2, ("(0 1)",)),
    "c3": (3, ("(0 1 2)",)),
    "c4": (4, ("(0 1 2 3)",)),
    "c6": (6, ("(0 1 2 3 4 5)",)),
    "v4": (4, ("(0 1)(2 3)", "(0 2)(1 3)")),
    "s3": (3, ("(0 1)", "(0 1 2)")),
    "s4": (4, ("(0 1)", "(0 1 2 3)")),
    "s5": (5, ("(0 1)", "(0 1 2 3 4)")),
    "d4": (4, ("(0 1 2 3)", "(0 2)")),
    "q8": (8, ("(0 1 2 3)(4 5 6 7)", "(0 4 2 6)(1 7 3 5)")),
}


def builtin_group_names() -> list[str]:
    return sorted(_BUILTIN_GENERATORS)


def named_group(name: str) -> PermutationGroup:
    """Builtin small groups by short name (s3, s4, s5, c2, c3, c4, c6, v4,
    d4, q8)."""
    key = name.lower()
    if key not in _BUILTIN_GENERATORS:
        raise ValueError(f"unknown group name {name!r}; "
                         f"available: {', '.join(builtin_group_names())}")
    degree, gen_texts = _BUILTIN_GENERATORS[key]
    gens = [parse_cycles(t, degree) for t in gen_texts]
    return closure(gens, tags=list(gen_texts))


def group_from_generator_lines(lines: Iterable[str]) -> PermutationGroup:
    """Build a group from cycle-notation generator lines.

    The degree is one plus the largest point mentioned; blank lines and
    lines starting with # are skipped.  A file of only "()" lines gives the
    trivial group of degree 1.
    """
    texts = []
    for raw in lines:
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        texts.append(line)
    if not texts:
        raise ValueError("no generator lines found")
    max_point = -1
    for t in texts:
        for body in _CYCLE_RE.findall(t):
            for tok in re.split(r"[\s,]+", body.strip()):
                if tok:
                    max_point = max(max_point, int(tok))
    degree = max_point + 1 if max_point >= 0 else 1
    gens = [parse_cycles(t, degree) for t in texts]
    return closure(gens, tags=texts)
