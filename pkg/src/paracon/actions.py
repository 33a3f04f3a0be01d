"""Group actions over three kinds of backend.

Supported backends: finite permutation actions, the left self-action of a
free group on itself, trivial actions (g.x = x) over a finite or free-word
point universe, and the regular action of a finite permutation-generated
group on its own element list.

Every backend exposes the same small surface: normalize elements, act on
points and on sets, and build sets over its point universe.  All values are
immutable and every operation is pure.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional, Sequence, Union

from .langsets import ActionSet, FiniteSet, SymbolicSet, union_all
from .words import (
    FreeWord,
    GroupElement,
    Permutation,
    evaluate_word,
    identity_permutation,
    parse_word,
    permutation_closure,
)

Point = Union[int, FreeWord]


class Action:
    """Common backend interface; concrete actions subclass this."""

    kind: str = "abstract"

    @property
    def is_finite(self) -> bool:
        raise NotImplementedError

    def size(self) -> Optional[int]:
        """Number of points, or None for the infinite free-word universe."""
        raise NotImplementedError

    def points(self) -> Sequence[Point]:
        raise NotImplementedError

    def full_set(self) -> ActionSet:
        raise NotImplementedError

    def empty_set(self) -> ActionSet:
        raise NotImplementedError

    def point_set(self, points: Iterable[Point]) -> ActionSet:
        raise NotImplementedError

    def generator_map(self) -> Mapping[int, GroupElement]:
        """Generator index -> normalized element (empty when unspecified)."""
        return {}

    def normalize_element(self, g) -> GroupElement:
        raise NotImplementedError

    def identity(self) -> GroupElement:
        raise NotImplementedError

    def multiply(self, g: GroupElement, h: GroupElement) -> GroupElement:
        raise NotImplementedError

    def inverse(self, g: GroupElement) -> GroupElement:
        raise NotImplementedError

    def element_order(self, g: GroupElement) -> Optional[int]:
        """Order of g in the acting group; None means infinite."""
        raise NotImplementedError

    def act(self, g: GroupElement, x: Point) -> Point:
        raise NotImplementedError

    def act_on_set(self, g: GroupElement, s: ActionSet) -> ActionSet:
        raise NotImplementedError


def _parse_if_str(g, rank: int) -> GroupElement:
    return parse_word(g, rank) if isinstance(g, str) else g


class FreeSelfAction(Action):
    """F_rank acting on itself by left multiplication."""

    kind = "free-self"

    def __init__(self, rank: int):
        if rank < 1:
            raise ValueError("rank must be at least 1")
        self.rank = rank

    @property
    def is_finite(self) -> bool:
        return False

    def size(self) -> Optional[int]:
        return None

    def points(self):
        raise ValueError("free-word universe is infinite; enumerate sets instead")

    def full_set(self) -> SymbolicSet:
        return SymbolicSet.full(self.rank)

    def empty_set(self) -> SymbolicSet:
        return SymbolicSet.empty(self.rank)

    def point_set(self, points: Iterable[FreeWord]) -> SymbolicSet:
        items = [SymbolicSet.singleton(w, self.rank) for w in points]
        return union_all(items) if items else self.empty_set()

    def generator_map(self):
        return {i: FreeWord((i,)) for i in range(1, self.rank + 1)}

    def normalize_element(self, g) -> FreeWord:
        g = _parse_if_str(g, self.rank)
        if not isinstance(g, FreeWord):
            raise ValueError(f"free self-action needs words, got {type(g).__name__}")
        if any(abs(l) > self.rank for l in g.letters):
            raise ValueError(f"word {g} outside rank {self.rank}")
        return g

    def identity(self) -> FreeWord:
        return FreeWord(())

    def multiply(self, g, h):
        return self.normalize_element(g) * self.normalize_element(h)

    def inverse(self, g):
        return ~self.normalize_element(g)

    def element_order(self, g) -> Optional[int]:
        return 1 if self.normalize_element(g).is_identity else None

    def act(self, g, x: FreeWord) -> FreeWord:
        return self.normalize_element(g) * x

    def act_on_set(self, g, s: SymbolicSet) -> SymbolicSet:
        return s.translate(self.normalize_element(g))


class FinitePermutationAction(Action):
    """Permutations acting on {0, ..., degree-1}."""

    kind = "finite-permutation"

    def __init__(self, degree: int, generators: Mapping[int, Permutation] | None = None):
        if degree < 1:
            raise ValueError("degree must be at least 1")
        self.degree = degree
        self.generators = dict(generators or {})
        for idx, perm in self.generators.items():
            if perm.degree != degree:
                raise ValueError(f"generator {idx} has degree {perm.degree}, expected {degree}")

    @property
    def is_finite(self) -> bool:
        return True

    def size(self) -> int:
        return self.degree

    def points(self):
        return range(self.degree)

    def full_set(self) -> FiniteSet:
        return FiniteSet.full(self.degree)

    def empty_set(self) -> FiniteSet:
        return FiniteSet.empty(self.degree)

    def point_set(self, points: Iterable[int]) -> FiniteSet:
        return FiniteSet.of(self.degree, points)

    def generator_map(self):
        return dict(self.generators)

    def normalize_element(self, g) -> Permutation:
        if isinstance(g, str):
            g = parse_word(g)
        if isinstance(g, FreeWord):
            if g.is_identity:
                return identity_permutation(self.degree)
            return evaluate_word(self.generators, g)
        if isinstance(g, Permutation):
            if g.degree != self.degree:
                raise ValueError(f"degree mismatch: {g.degree} vs {self.degree}")
            return g
        raise ValueError(f"cannot interpret {g!r} as a permutation")

    def identity(self) -> Permutation:
        return identity_permutation(self.degree)

    def multiply(self, g, h):
        return self.normalize_element(g) * self.normalize_element(h)

    def inverse(self, g):
        return ~self.normalize_element(g)

    def element_order(self, g) -> int:
        return self.normalize_element(g).order()

    def act(self, g, x: int) -> int:
        return self.normalize_element(g).images[x]

    def act_on_set(self, g, s: FiniteSet) -> FiniteSet:
        perm = self.normalize_element(g)
        return FiniteSet.of(self.degree, (perm.images[p] for p in s.members))


class TrivialAction(Action):
    """Any group acting trivially: g.x = x for every g and x.

    Elements are free-word labels (the acting group is irrelevant to the
    action).  The point universe is either finite of a given degree or the
    reduced words of a given rank, so the trivial action is testable over an
    infinite set too.
    """

    kind = "trivial"

    def __init__(self, degree: int | None = None, rank: int | None = None):
        if (degree is None) == (rank is None):
            raise ValueError("specify exactly one of degree, rank")
        self.degree = degree
        self.rank = rank

    @property
    def is_finite(self) -> bool:
        return self.degree is not None

    def size(self) -> Optional[int]:
        return self.degree

    def points(self):
        if self.degree is None:
            raise ValueError("free-word universe is infinite; enumerate sets instead")
        return range(self.degree)

    def full_set(self) -> ActionSet:
        if self.degree is not None:
            return FiniteSet.full(self.degree)
        return SymbolicSet.full(self.rank)

    def empty_set(self) -> ActionSet:
        if self.degree is not None:
            return FiniteSet.empty(self.degree)
        return SymbolicSet.empty(self.rank)

    def point_set(self, points) -> ActionSet:
        if self.degree is not None:
            return FiniteSet.of(self.degree, points)
        items = [SymbolicSet.singleton(w, self.rank) for w in points]
        return union_all(items) if items else self.empty_set()

    def normalize_element(self, g) -> FreeWord:
        g = _parse_if_str(g, 10)
        if not isinstance(g, FreeWord):
            raise ValueError("trivial-action elements are word labels")
        return g

    def identity(self) -> FreeWord:
        return FreeWord(())

    def multiply(self, g, h):
        return self.normalize_element(g) * self.normalize_element(h)

    def inverse(self, g):
        return ~self.normalize_element(g)

    def element_order(self, g) -> Optional[int]:
        # unknowable from the action alone; the label group is free
        return 1 if self.normalize_element(g).is_identity else None

    def act(self, g, x: Point) -> Point:
        return x

    def act_on_set(self, g, s: ActionSet) -> ActionSet:
        return s


class FiniteRegularAction(Action):
    """A finite permutation-generated group acting on its own element list.

    Points are indices into the sorted element list of G = <generators>, and
    g acts by left multiplication.  This is where subsets of G itself live.
    """

    kind = "finite-regular"

    def __init__(self, generators: Mapping[int, Permutation], limit: int = 100_000):
        if not generators:
            raise ValueError("need at least one generator")
        self.generators = dict(generators)
        self.elements = permutation_closure(list(self.generators.values()), limit=limit)
        self._index = {perm: i for i, perm in enumerate(self.elements)}

    @property
    def is_finite(self) -> bool:
        return True

    def size(self) -> int:
        return len(self.elements)

    def points(self):
        return range(len(self.elements))

    def full_set(self) -> FiniteSet:
        return FiniteSet.full(len(self.elements))

    def empty_set(self) -> FiniteSet:
        return FiniteSet.empty(len(self.elements))

    def point_set(self, points: Iterable[int]) -> FiniteSet:
        return FiniteSet.of(len(self.elements), points)

    def generator_map(self):
        return dict(self.generators)

    def point_of(self, g) -> int:
        """Index of a group element in the point list."""
        return self._index[self.normalize_element(g)]

    def normalize_element(self, g) -> Permutation:
        if isinstance(g, str):
            g = parse_word(g)
        if isinstance(g, FreeWord):
            if g.is_identity:
                return identity_permutation(self.elements[0].degree)
            g = evaluate_word(self.generators, g)
        if not isinstance(g, Permutation):
            raise ValueError(f"cannot interpret {g!r} as a group element")
        if g not in self._index:
            raise ValueError(f"{g!r} is not in the generated group")
        return g

    def identity(self) -> Permutation:
        return identity_permutation(self.elements[0].degree)

    def multiply(self, g, h):
        return self.normalize_element(g) * self.normalize_element(h)

    def inverse(self, g):
        return ~self.normalize_element(g)

    def element_order(self, g) -> int:
        return self.normalize_element(g).order()

    def act(self, g, x: int) -> int:
        return self._index[self.normalize_element(g) * self.elements[x]]

    def act_on_set(self, g, s: FiniteSet) -> FiniteSet:
        perm = self.normalize_element(g)
        return FiniteSet.of(len(self.elements), (self._index[perm * self.elements[p]] for p in s.members))


# ---------------------------------------------------------------------------
# partitions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Partition:
    """Ordered blocks E_1..E_m; validity is checked by validate_partition."""

    blocks: tuple[ActionSet, ...]

    def __len__(self) -> int:
        return len(self.blocks)

    def __iter__(self):
        return iter(self.blocks)

    def __getitem__(self, i: int) -> ActionSet:
        return self.blocks[i]


@dataclass(frozen=True)
class PartitionReport:
    ok: bool
    problem: Optional[str] = None       # "empty-block" | "overlap" | "cover-gap"
    blocks_involved: tuple[int, ...] = ()
    witness: object = None

    def __bool__(self) -> bool:
        return self.ok


def validate_partition(action: Action, blocks: Sequence[ActionSet]) -> PartitionReport:
    """Check blocks are nonempty, pairwise disjoint, and cover the universe."""
    blocks = tuple(blocks)
    if not blocks:
        return PartitionReport(False, "empty-block", (), None)
    for i, block in enumerate(blocks):
        if block.is_empty:
            return PartitionReport(False, "empty-block", (i + 1,), None)
    for i in range(len(blocks)):
        for j in range(i + 1, len(blocks)):
            overlap = blocks[i].intersection(blocks[j])
            if not overlap.is_empty:
                return PartitionReport(False, "overlap", (i + 1, j + 1), overlap.witness())
    covered = union_all(blocks)
    gap = action.full_set().difference(covered)
    if not gap.is_empty:
        return PartitionReport(False, "cover-gap", (), gap.witness())
    return PartitionReport(True)


def partition(action: Action, blocks: Sequence[ActionSet]) -> Partition:
    """Validated partition constructor."""
    report = validate_partition(action, blocks)
    if not report:
        raise ValueError(f"invalid partition: {report.problem} "
                         f"(blocks {report.blocks_involved}, witness {report.witness!r})")
    return Partition(tuple(blocks))


# ---------------------------------------------------------------------------
# equivariant maps and quotients
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class EquivariantMap:
    """A surjection f: X -> Y with f(g.x) = phi(g).f(x) on the generators.

    Only finite backends are supported; validation is exhaustive.  phi is
    given by its images on the source generator indices and extends to words.
    """

    source: Action
    target: Action
    point_map: tuple[int, ...]
    gen_images: Mapping[int, GroupElement] = field(default_factory=dict)

    def phi(self, g) -> GroupElement:
        """Image of a source element, given as a word in the generators."""
        if isinstance(g, str):
            g = parse_word(g)
        if not isinstance(g, FreeWord):
            raise ValueError("phi is defined on generator words")
        result = self.target.identity()
        for letter in g.letters:
            image = self.gen_images.get(abs(letter))
            if image is None:
                raise ValueError(f"generator {abs(letter)} has no image")
            image = self.target.normalize_element(image)
            if letter < 0:
                image = self.target.inverse(image)
            result = self.target.multiply(result, image)
        return result

    def apply(self, x: int) -> int:
        return self.point_map[x]

    def validate(self) -> None:
        if not (self.source.is_finite and self.target.is_finite):
            raise ValueError("equivariant maps are only validated on finite backends")
        n, m = self.source.size(), self.target.size()
        if len(self.point_map) != n:
            raise ValueError(f"point map has {len(self.point_map)} entries, expected {n}")
        if set(self.point_map) != set(range(m)):
            raise ValueError("point map is not onto the target")
        for idx, gen in self.source.generator_map().items():
            image = self.gen_images.get(idx)
            if image is None:
                raise ValueError(f"generator {idx} has no image")
            image = self.target.normalize_element(image)
            for x in range(n):
                left = self.point_map[self.source.act(gen, x)]
                right = self.target.act(image, self.point_map[x])
                if left != right:
                    raise ValueError(
                        f"not equivariant at generator {idx}, point {x}: "
                        f"f(g.x)={left} but phi(g).f(x)={right}")

    def preimage(self, block: FiniteSet) -> FiniteSet:
        members = [x for x in range(len(self.point_map)) if self.point_map[x] in block.members]
        return FiniteSet.of(len(self.point_map), members)


def pull_back_partition(emap: EquivariantMap, target_partition: Partition) -> Partition:
    """Blocks of the preimage partition, in the same order."""
    emap.validate()
    blocks = tuple(emap.preimage(block) for block in target_partition)
    return partition(emap.source, blocks)


@dataclass(frozen=True)
class OrbitQuotient:
    """Result of the coset construction at a base point."""

    coset_action: FinitePermutationAction
    map: EquivariantMap        # from the (orbit-restricted) action onto cosets
    orbit_action: FinitePermutationAction
    orbit: tuple[int, ...]
    restricted: bool
    stabilizer_order: int


def orbit_coset_action(action: Action, x0: int) -> OrbitQuotient:
    """Identify the orbit of x0 with the coset space G/Stab(x0).

    Enumerates G = <generators>, its stabilizer of x0, and the left cosets;
    returns the coset action together with the equivariant bijection sending
    each orbit point x to the coset {g : g.x0 = x}.  A non-transitive action
    is restricted to the orbit (flagged in the result).
    """
    gens = action.generator_map()
    if not gens:
        raise ValueError("action has no generator assignment")
    perms = {idx: action.normalize_element(g) for idx, g in gens.items()}

    degree = action.size()
    if degree is None:
        raise ValueError("orbit/coset construction needs a finite action")
    # for the regular backend, points are already group-element indices but
    # the machinery below only uses act(), so treat points uniformly
    orbit = [x0]
    seen = {x0}
    for x in orbit:
        for perm in perms.values():
            for image in (action.act(perm, x), action.act(~perm, x)):
                if image not in seen:
                    seen.add(image)
                    orbit.append(image)
    orbit = sorted(seen)
    restricted = len(orbit) < degree
    position = {x: i for i, x in enumerate(orbit)}

    # restriction of the action to the orbit
    orbit_gens = {
        idx: Permutation(tuple(position[action.act(perm, orbit[i])] for i in range(len(orbit))))
        for idx, perm in perms.items()
    }
    orbit_action = FinitePermutationAction(len(orbit), orbit_gens)

    group = permutation_closure(list(orbit_gens.values()))
    base = position[x0]
    stabilizer = [g for g in group if g.images[base] == base]
    # left cosets of the stabilizer, each recorded as a frozenset of elements
    cosets: list[frozenset[Permutation]] = []
    assignment: dict[Permutation, int] = {}
    for g in group:
        if g in assignment:
            continue
        coset = frozenset(g * s for s in stabilizer)
        index = len(cosets)
        cosets.append(coset)
        for member in coset:
            assignment[member] = index
    coset_gens = {}
    for idx, perm in orbit_gens.items():
        images = []
        for coset in cosets:
            representative = next(iter(coset))
            images.append(assignment[perm * representative])
        coset_gens[idx] = Permutation(tuple(images))
    coset_action = FinitePermutationAction(len(cosets), coset_gens)

    # x -> g_x Stab(x0) where g_x.x0 = x; all members of a coset move x0 alike
    coset_of_point = {}
    for element, index in assignment.items():
        coset_of_point[element.images[base]] = index
    point_map = tuple(coset_of_point[i] for i in range(len(orbit)))
    emap = EquivariantMap(orbit_action, coset_action, point_map, coset_gens)
    emap.validate()
    return OrbitQuotient(
        coset_action=coset_action,
        map=emap,
        orbit_action=orbit_action,
        orbit=tuple(orbit),
        restricted=restricted,
        stabilizer_order=len(stabilizer),
    )
