"""Configuration sets of group actions.

A configuration pair is an ordered tuple of group elements together with a
finite partition of the point universe.  Each point x realizes the tuple of
block indices (block(x), block(g_1.x), ..., block(g_n.x)); the realized
tuples are the configurations, and the set of points realizing a
configuration C is its base cell

    x0(C) = E_{C_0}  intersect  g_1^-1 E_{C_1}  intersect ... intersect  g_n^-1 E_{C_n}.

Base cells partition the universe, as do their translates, which is the
combinatorial backbone everything downstream (equations, coarsening,
paradox patterns) relies on.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Optional, Sequence

from .actions import Action, Partition, partition as make_partition, validate_partition
from .langsets import ActionSet, union_all
from .words import FreeWord

Configuration = tuple[int, ...]


@dataclass(frozen=True)
class ConfigurationPair:
    """Ordered elements (g_1..g_n) plus a validated partition (E_1..E_m)."""

    action: Action
    elements: tuple
    partition: Partition

    @property
    def tuple_length(self) -> int:
        return len(self.elements)

    @property
    def block_count(self) -> int:
        return len(self.partition)


def configuration_pair(action: Action, elements: Sequence, blocks: Sequence[ActionSet]) -> ConfigurationPair:
    """Validated constructor: normalizes elements and checks the partition."""
    normalized = tuple(action.normalize_element(g) for g in elements)
    if not normalized:
        raise ValueError("tuple must contain at least one element")
    return ConfigurationPair(action, normalized, make_partition(action, blocks))


class ConfigurationSet:
    """Realized configurations of a pair with their base cells."""

    def __init__(self, pair: ConfigurationPair, base_cells: Mapping[Configuration, ActionSet]):
        self.pair = pair
        self.configurations: tuple[Configuration, ...] = tuple(sorted(base_cells))
        self.base_cells = dict(base_cells)

    def __contains__(self, config: Configuration) -> bool:
        return tuple(config) in self.base_cells

    def __len__(self) -> int:
        return len(self.configurations)

    def __iter__(self):
        return iter(self.configurations)

    def as_tuple_set(self) -> frozenset[Configuration]:
        return frozenset(self.configurations)

    def cell(self, config: Configuration, j: int) -> ActionSet:
        """x_j(C): the base cell for j = 0, its g_j-translate for j >= 1."""
        config = tuple(config)
        if config not in self.base_cells:
            raise ValueError(f"configuration {config} not realized")
        n = self.pair.tuple_length
        if j < 0 or j > n:
            raise ValueError(f"coordinate {j} out of range 0..{n}")
        base = self.base_cells[config]
        if j == 0:
            return base
        return self.pair.action.act_on_set(self.pair.elements[j - 1], base)

    def __repr__(self) -> str:
        return f"ConfigurationSet({len(self.configurations)} configurations, n={self.pair.tuple_length}, m={self.pair.block_count})"


def compute_configurations(pair: ConfigurationPair) -> ConfigurationSet:
    """Enumerate candidates in lexicographic order, keeping nonempty cells.

    Candidates are pruned along shared prefixes: the partial intersection
    E_{C_0} cap g_1^-1 E_{C_1} cap ... is threaded through the recursion and
    abandoned as soon as it is empty.
    """
    action = pair.action
    blocks = pair.partition.blocks
    n = pair.tuple_length
    inverse_translates = [
        [action.act_on_set(action.inverse(g), block) for block in blocks]
        for g in pair.elements
    ]
    found: dict[Configuration, ActionSet] = {}

    def extend(j: int, current: ActionSet, prefix: Configuration) -> None:
        if j > n:
            found[prefix] = current
            return
        for i, translated in enumerate(inverse_translates[j - 1], start=1):
            refined = current.intersection(translated)
            if not refined.is_empty:
                extend(j + 1, refined, prefix + (i,))

    for i, block in enumerate(blocks, start=1):
        extend(1, block, (i,))
    return ConfigurationSet(pair, found)


@dataclass(frozen=True)
class CellPartitionReport:
    ok: bool
    violations: tuple = ()

    def __bool__(self) -> bool:
        return self.ok


def verify_cell_partition(cs: ConfigurationSet) -> CellPartitionReport:
    """Exact check that each coordinate's cells partition X and refine E.

    For every j the family {x_j(C)} must be pairwise disjoint with union X,
    and for every block index i, E_i must equal the union of the x_j(C) with
    C_j = i.
    """
    action = cs.pair.action
    blocks = cs.pair.partition.blocks
    full = action.full_set()
    violations = []
    for j in range(cs.pair.tuple_length + 1):
        cells = [(config, cs.cell(config, j)) for config in cs.configurations]
        for (c1, s1), (c2, s2) in itertools.combinations(cells, 2):
            overlap = s1.intersection(s2)
            if not overlap.is_empty:
                violations.append(("overlap", j, (c1, c2), overlap.witness()))
        union = union_all([s for _, s in cells])
        gap = full.difference(union)
        if not gap.is_empty:
            violations.append(("cover-gap", j, None, gap.witness()))
        for i, block in enumerate(blocks, start=1):
            matched = [s for (config, s) in cells if config[j] == i]
            covered = union_all(matched) if matched else action.empty_set()
            if covered != block:
                missing = block.difference(covered)
                extra = covered.difference(block)
                witness = missing.witness() if not missing.is_empty else extra.witness()
                violations.append(("block-identity", j, i, witness))
    return CellPartitionReport(not violations, tuple(violations))


# ---------------------------------------------------------------------------
# refinement relations and solution coarsening
# ---------------------------------------------------------------------------


def refinement_block_map(fine: Partition, coarse: Partition) -> tuple[int, ...]:
    """For each fine block, the 1-based index of the coarse block containing it."""
    mapping = []
    for p, fine_block in enumerate(fine.blocks, start=1):
        hits = [l for l, coarse_block in enumerate(coarse.blocks, start=1)
                if fine_block.is_subset(coarse_block)]
        if not hits:
            raise ValueError(f"fine block {p} lies in no coarse block: not a refinement")
        mapping.append(hits[0])
    return tuple(mapping)


def project_configuration(
    mode: str,
    fine_pair: ConfigurationPair,
    coarse_pair: ConfigurationPair,
    config: Configuration,
) -> Configuration:
    """The unique coarse configuration under a fine one.

    mode "partition": same tuple, finer partition; each block index is
    replaced by the index of the containing coarse block.
    mode "string": same partition, extended tuple; the configuration is
    truncated to the coarse tuple's coordinates.
    """
    config = tuple(config)
    if len(config) != fine_pair.tuple_length + 1:
        raise ValueError(f"configuration length {len(config)} does not match the fine pair")
    if mode == "partition":
        if fine_pair.elements != coarse_pair.elements:
            raise ValueError("partition mode needs identical tuples")
        block_map = refinement_block_map(fine_pair.partition, coarse_pair.partition)
        return tuple(block_map[c - 1] for c in config)
    if mode == "string":
        if fine_pair.partition.blocks != coarse_pair.partition.blocks:
            raise ValueError("string mode needs identical partitions")
        n = coarse_pair.tuple_length
        if fine_pair.elements[:n] != coarse_pair.elements:
            raise ValueError("fine tuple does not extend the coarse tuple")
        return config[: n + 1]
    raise ValueError(f"unknown mode {mode!r}")


def coarsen_solution(
    mode: str,
    fine_cs: ConfigurationSet,
    coarse_cs: ConfigurationSet,
    z: Sequence[Fraction],
) -> tuple[Fraction, ...]:
    """Push a verified normalized solution down a refinement.

    Masses add up along the projection: z_D = sum of z_C over the fine C
    projecting to D.  Works coordinate-for-coordinate for both modes, and
    for a genuine two-step refinement compose partition mode with string
    mode (mode "composed" does this through the intermediate pair).
    """
    from .equations import build_equations, verify_solution

    if mode == "composed":
        middle_pair = ConfigurationPair(
            fine_cs.pair.action, fine_cs.pair.elements, coarse_cs.pair.partition)
        middle_cs = compute_configurations(middle_pair)
        step1 = coarsen_solution("partition", fine_cs, middle_cs, z)
        return coarsen_solution("string", middle_cs, coarse_cs, step1)

    fine_system = build_equations(fine_cs)
    check = verify_solution(fine_system, z)
    if not check.ok:
        raise ValueError(f"input vector is not a normalized solution: {check.violation}")
    totals: dict[Configuration, Fraction] = {c: Fraction(0) for c in coarse_cs.configurations}
    for config, value in zip(fine_cs.configurations, z):
        projected = project_configuration(mode, fine_cs.pair, coarse_cs.pair, config)
        if projected not in totals:
            raise ValueError(f"projection {projected} is not a coarse configuration")
        totals[projected] += value
    result = tuple(totals[c] for c in coarse_cs.configurations)
    coarse_system = build_equations(coarse_cs)
    check = verify_solution(coarse_system, result)
    if not check.ok:
        raise RuntimeError(f"coarsened vector failed verification: {check.violation}")
    return result


# ---------------------------------------------------------------------------
# bounded comparison of configuration data across actions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ConSearchBounds:
    max_tuple_length: int = 1
    max_word_length: int = 1
    max_blocks: int = 3
    family_limit: int = 500
    seed: int = 0


@dataclass(frozen=True)
class ConInclusionReport:
    included: bool
    pairs_checked: int
    bounds: ConSearchBounds
    counterexample: Optional[tuple] = None   # (elements repr, blocks repr, configurations)

    def __bool__(self) -> bool:
        return self.included


def _element_pool(action: Action, max_word_length: int) -> list:
    """Distinct elements reachable by generator words up to a length bound."""
    gens = action.generator_map()
    pool = {action.identity()}
    frontier = [action.identity()]
    for _ in range(max_word_length):
        next_frontier = []
        for elem in frontier:
            for gen in gens.values():
                for product in (action.multiply(gen, elem), action.multiply(action.inverse(gen), elem)):
                    if product not in pool:
                        pool.add(product)
                        next_frontier.append(product)
        frontier = next_frontier
    return sorted(pool, key=repr)


def _all_partitions(action: Action, max_blocks: int) -> list[tuple[ActionSet, ...]]:
    """Every partition of a finite point set into at most max_blocks blocks.

    Blocks are ordered by least member, which makes the family canonical.
    """
    degree = action.size()
    results: list[tuple[ActionSet, ...]] = []

    def assign(point: int, groups: list[list[int]]) -> None:
        if point == degree:
            results.append(tuple(action.point_set(g) for g in groups))
            return
        for group in groups:
            group.append(point)
            assign(point + 1, groups)
            group.pop()
        if len(groups) < max_blocks:
            groups.append([point])
            assign(point + 1, groups)
            groups.pop()

    assign(0, [])
    return results


def candidate_pairs(
    action: Action,
    bounds: ConSearchBounds,
    explicit: Optional[Sequence[tuple[Sequence, Sequence[ActionSet]]]] = None,
) -> list[ConfigurationPair]:
    """Configuration pairs to search: explicit ones, or generated to bounds."""
    if explicit is not None:
        return [configuration_pair(action, elems, blocks) for elems, blocks in explicit]
    if not action.is_finite:
        raise ValueError("supply explicit pairs for infinite actions")
    elements = _element_pool(action, bounds.max_word_length)
    tuples = []
    for length in range(1, bounds.max_tuple_length + 1):
        tuples.extend(itertools.product(elements, repeat=length))
    partitions = _all_partitions(action, bounds.max_blocks)
    pairs = [(tpl, blocks) for tpl in tuples for blocks in partitions]
    if len(pairs) > bounds.family_limit:
        rng = random.Random(bounds.seed)
        pairs = sorted(rng.sample(range(len(pairs)), bounds.family_limit))
        pairs = [
            (tuples[k // len(partitions)], partitions[k % len(partitions)]) for k in pairs
        ]
    return [ConfigurationPair(action, tuple(tpl), Partition(tuple(blocks))) for tpl, blocks in pairs]


def con_included(
    action_a: Action,
    action_b: Action,
    bounds: ConSearchBounds = ConSearchBounds(),
    pairs_a: Optional[Sequence] = None,
    pairs_b: Optional[Sequence] = None,
) -> ConInclusionReport:
    """Bounded test of Con(A) <= Con(B): every configuration set realized by
    a candidate pair of A must be realized by some candidate pair of B.

    This is a search within the stated bounds, never a proof of unbounded
    inclusion; a failure report carries the unmatched pair.
    """
    family_a = candidate_pairs(action_a, bounds, pairs_a)
    family_b = candidate_pairs(action_b, bounds, pairs_b)
    available = {compute_configurations(p).as_tuple_set() for p in family_b}
    checked = 0
    for pair in family_a:
        cs = compute_configurations(pair)
        checked += 1
        if cs.as_tuple_set() not in available:
            detail = (
                tuple(repr(g) for g in pair.elements),
                tuple(repr(b) for b in pair.partition.blocks),
                tuple(sorted(cs.as_tuple_set())),
            )
            return ConInclusionReport(False, checked, bounds, detail)
    return ConInclusionReport(True, checked, bounds, None)


# ---------------------------------------------------------------------------
# cardinality probe
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CardinalityProbe:
    possible: bool
    witness: Optional[Partition] = None

    def __bool__(self) -> bool:
        return self.possible


def cardinality_probe(action: Action, n: int) -> CardinalityProbe:
    """Can X be split into n nonempty blocks?  Witness: n-1 singletons + rest.

    Finite universes answer by counting; the free-word universe always says
    yes.  The witness realizes the singleton-partition construction that
    makes configuration data detect |X|.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if action.is_finite:
        degree = action.size()
        if degree < n:
            return CardinalityProbe(False, None)
        points = list(range(degree))
        blocks = [action.point_set([p]) for p in points[: n - 1]]
        blocks.append(action.point_set(points[n - 1:]))
        return CardinalityProbe(True, make_partition(action, blocks))
    full = action.full_set()
    words: list[FreeWord] = []
    length = 0
    while len(words) < n - 1:
        words = full.enumerate_up_to(length)
        length += 1
    chosen = words[: n - 1]
    blocks = [action.point_set([w]) for w in chosen]
    rest = full
    for b in blocks:
        rest = rest.difference(b)
    blocks.append(rest)
    return CardinalityProbe(True, make_partition(action, blocks))
