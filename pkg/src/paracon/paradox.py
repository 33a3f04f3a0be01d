"""Paradoxical decompositions, ping-pong certificates, and transfer patterns.

A paradoxical decomposition consists of pairwise disjoint pieces
A_1..A_n, B_1..B_m together with translators g_i, h_j such that both
families of translates cover the whole universe.  Everything here verifies
such data exactly against an action backend, constructs decompositions from
ping-pong chains, certifies free subgroups from ping-pong hypotheses, and
links decompositions to configuration sets through covering patterns.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Sequence, Union

from .actions import Action, FiniteRegularAction, FreeSelfAction, TrivialAction
from .configurations import ConfigurationSet
from .langsets import ActionSet, SymbolicSet, union_all
from .words import FreeWord, GroupElement

WAGON_NOTE = (
    "piece count 4 is the least possible for any paradoxical action; "
    "sharper stabilizer conclusions rest on Wagon, The Banach-Tarski "
    "Paradox, Theorems 4.5 and 4.8"
)


@dataclass(frozen=True)
class ParadoxicalDecomposition:
    pieces_a: tuple[ActionSet, ...]
    translators_a: tuple
    pieces_b: tuple[ActionSet, ...]
    translators_b: tuple

    @property
    def piece_count(self) -> int:
        return len(self.pieces_a) + len(self.pieces_b)


@dataclass(frozen=True)
class DecompositionReport:
    ok: bool
    piece_count: int
    problem: Optional[str] = None
    witness: object = None
    detail: Optional[tuple] = None

    def __bool__(self) -> bool:
        return self.ok


def verify_decomposition(
    action: Action, dec: ParadoxicalDecomposition, strict: bool = False
) -> DecompositionReport:
    """Exact check: disjoint pieces, both translate families cover X.

    With strict=True the translate families must each partition X and the
    pieces together must exhaust X (the exact-cover variant some authors
    use); the default follows the weaker covering definition.
    """
    if len(dec.pieces_a) != len(dec.translators_a) or len(dec.pieces_b) != len(dec.translators_b):
        raise ValueError("each piece needs exactly one translator")
    if not dec.pieces_a or not dec.pieces_b:
        raise ValueError("both families must be nonempty")
    count = dec.piece_count
    pieces = list(dec.pieces_a) + list(dec.pieces_b)
    for x, y in itertools.combinations(range(len(pieces)), 2):
        overlap = pieces[x].intersection(pieces[y])
        if not overlap.is_empty:
            return DecompositionReport(False, count, "pieces-overlap", overlap.witness(), (x, y))
    full = action.full_set()
    for name, family, translators in (
        ("a", dec.pieces_a, dec.translators_a),
        ("b", dec.pieces_b, dec.translators_b),
    ):
        translates = [
            action.act_on_set(action.normalize_element(g), piece)
            for g, piece in zip(translators, family)
        ]
        gap = full.difference(union_all(translates))
        if not gap.is_empty:
            return DecompositionReport(False, count, f"cover-gap-{name}", gap.witness())
        if strict:
            for x, y in itertools.combinations(range(len(translates)), 2):
                overlap = translates[x].intersection(translates[y])
                if not overlap.is_empty:
                    return DecompositionReport(
                        False, count, f"translates-overlap-{name}", overlap.witness(), (x, y))
    if strict:
        leftover = full.difference(union_all(pieces))
        if not leftover.is_empty:
            return DecompositionReport(False, count, "pieces-not-exhaustive", leftover.witness())
    return DecompositionReport(True, count)


# ---------------------------------------------------------------------------
# chain construction
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PingPongChain:
    """Sets X_1..X_n and elements h_1..h_n with h_i X_i inside X_{i+1} (cyclically)."""

    sets: tuple[ActionSet, ...]
    elements: tuple

    def __post_init__(self):
        if len(self.sets) < 2 or len(self.sets) != len(self.elements):
            raise ValueError("chain needs n >= 2 sets with one element each")


class ChainHypothesisError(ValueError):
    def __init__(self, message: str, witness=None):
        super().__init__(message if witness is None else f"{message} (witness {witness!r})")
        self.witness = witness


@dataclass(frozen=True)
class ChainResult:
    decomposition: ParadoxicalDecomposition
    piece_bound: int
    stage_elements: tuple            # s_1..s_{n+1}
    differences: tuple[ActionSet, ...]
    note: Optional[str] = None


def chain_to_decomposition(action: Action, chain: PingPongChain) -> ChainResult:
    """Turn a verified chain into an (n+2)-piece paradoxical decomposition.

    With s_i = h_n h_{n-1} ... h_i and s_{n+1} = e, splitting each
    s_{i+1} X_{i+1} into s_{i+1} D_i and s_i X_i telescopes down to

        X_1 = s_1 X_1  |_|  s_2 D_1  |_| ... |_|  s_{n+1} D_n,

    where D_i = X_{i+1} minus h_i X_i.  The pieces E_0 = s_1 X_1 and
    E_i = s_{i+1} D_i live inside X_1; one family {E_0, complement of X_1}
    recovers X via s_1^-1 and the identity, the other {E_1..E_n} recovers
    X via the s_{i+1}^-1, using the covering hypothesis X = union of D_i.
    The partition identity is checked exactly, never assumed.
    """
    n = len(chain.sets)
    sets = list(chain.sets) + [chain.sets[0]]
    elements = [action.normalize_element(h) for h in chain.elements]
    full = action.full_set()

    differences = []
    for i in range(n):
        image = action.act_on_set(elements[i], sets[i])
        outside = image.difference(sets[i + 1])
        if not outside.is_empty:
            raise ChainHypothesisError(
                f"h_{i+1} X_{i+1} is not contained in X_{(i + 1) % n + 1}",
                outside.witness())
        differences.append(sets[i + 1].difference(image))
    gap = full.difference(union_all(differences))
    if not gap.is_empty:
        raise ChainHypothesisError("the differences X_{i+1} minus h_i X_i do not cover X",
                                   gap.witness())

    stages = []
    suffix = action.identity()
    for h in reversed(elements):
        suffix = action.multiply(suffix, h)   # builds h_n h_{n-1} ... h_i
        stages.append(suffix)
    stages.reverse()
    stages.append(action.identity())          # s_{n+1} = e

    telescope = [action.act_on_set(stages[0], sets[0])]
    telescope += [action.act_on_set(stages[i + 1], differences[i]) for i in range(n)]
    for x, y in itertools.combinations(range(len(telescope)), 2):
        if not telescope[x].is_disjoint(telescope[y]):
            raise RuntimeError("telescoping pieces overlap; internal error")
    if union_all(telescope) != sets[0]:
        raise RuntimeError("telescoping identity failed; internal error")

    complement = full.difference(sets[0])
    decomposition = ParadoxicalDecomposition(
        pieces_a=(telescope[0], complement),
        translators_a=(action.inverse(stages[0]), action.identity()),
        pieces_b=tuple(telescope[1:]),
        translators_b=tuple(action.inverse(stages[i + 1]) for i in range(n)),
    )
    report = verify_decomposition(action, decomposition)
    if not report.ok:
        raise RuntimeError(f"constructed decomposition failed verification: {report.problem}")
    return ChainResult(
        decomposition=decomposition,
        piece_bound=n + 2,
        stage_elements=tuple(stages),
        differences=tuple(differences),
        note=WAGON_NOTE if n == 2 else None,
    )


# ---------------------------------------------------------------------------
# ping-pong certificates
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CyclicTableau:
    """Sets A_1..A_k, B_1..B_k and elements g_1..g_k with B_i^c inside g_i A_i."""

    sets_a: tuple[ActionSet, ...]
    sets_b: tuple[ActionSet, ...]
    elements: tuple

    def __post_init__(self):
        k = len(self.elements)
        if k < 2 or len(self.sets_a) != k or len(self.sets_b) != k:
            raise ValueError("tableau needs k >= 2 with matching set lists")


@dataclass(frozen=True)
class PingPongReport:
    ok: bool
    conclusion: Optional[str] = None
    inclusions: tuple = ()
    bound_note: Optional[str] = None
    problem: Optional[str] = None
    witness: object = None

    def __bool__(self) -> bool:
        return self.ok


def check_pingpong_cyclic(action: Action, tableau: CyclicTableau) -> PingPongReport:
    """Verify the cyclic ping-pong hypotheses exactly.

    All 2k sets must be pairwise disjoint (precondition; violations raise),
    and each complement B_i^c must be contained in g_i A_i.  Success
    certifies that g_1..g_k freely generate a free subgroup of rank k.
    """
    k = len(tableau.elements)
    everything = list(tableau.sets_a) + list(tableau.sets_b)
    for x, y in itertools.combinations(range(2 * k), 2):
        overlap = everything[x].intersection(everything[y])
        if not overlap.is_empty:
            raise ValueError(f"tableau sets {x} and {y} overlap (witness {overlap.witness()!r})")
    inclusions = []
    for i in range(k):
        g = action.normalize_element(tableau.elements[i])
        target = action.act_on_set(g, tableau.sets_a[i])
        source = tableau.sets_b[i].complement()
        missing = source.difference(target)
        if not missing.is_empty:
            return PingPongReport(
                False, problem=f"B_{i+1}^c is not contained in g_{i+1} A_{i+1}",
                witness=missing.witness())
        inclusions.append((f"B_{i+1}^c", f"g_{i+1} A_{i+1}"))
    return PingPongReport(
        True,
        conclusion=f"the {k} elements freely generate a free subgroup of rank {k}",
        inclusions=tuple(inclusions),
    )


@dataclass(frozen=True)
class CyclicSubgroup:
    """<g>, enumerated as g^k for 1 <= |k| <= exponent_bound when infinite."""

    generator: object
    exponent_bound: int = 3


@dataclass(frozen=True)
class FiniteSubgroup:
    """An explicit element list; must be closed under product and inverse."""

    elements: tuple


SubgroupSpec = Union[CyclicSubgroup, FiniteSubgroup]


def _subgroup_nonidentity(action: Action, spec: SubgroupSpec) -> tuple[list, object, str]:
    """Nonidentity elements to test, the certified size, and a bound note."""
    identity = action.identity()
    if isinstance(spec, FiniteSubgroup):
        elements = [action.normalize_element(g) for g in spec.elements]
        pool = set(elements) | {identity}
        for g in pool:
            if action.inverse(g) not in pool:
                raise ValueError(f"element list not closed under inverses at {g!r}")
            for h in pool:
                if action.multiply(g, h) not in pool:
                    raise ValueError(f"element list not closed under products at {g!r}*{h!r}")
        nonidentity = sorted((g for g in pool if g != identity), key=repr)
        return nonidentity, len(pool), "exhaustive"
    generator = action.normalize_element(spec.generator)
    order = action.element_order(generator)
    if order is not None and order <= spec.exponent_bound + 1:
        # small finite cyclic group: enumerate it completely
        elements = []
        power = generator
        while power != identity:
            elements.append(power)
            power = action.multiply(power, generator)
        return elements, order, "exhaustive"
    elements = []
    power = identity
    inverse_power = identity
    for _ in range(spec.exponent_bound):
        power = action.multiply(power, generator)
        inverse_power = action.multiply(inverse_power, action.inverse(generator))
        elements.extend([power, inverse_power])
    size = order if order is not None else float("inf")
    return elements, size, f"exponents up to {spec.exponent_bound}"


def check_pingpong_subgroups(
    action: Action, subgroups: Sequence[SubgroupSpec], sets: Sequence[ActionSet]
) -> PingPongReport:
    """Ping-pong for k subgroups with pairwise disjoint sets X_1..X_k.

    Verifies h X_s inside X_i for every listed or bounded nonidentity
    h in H_i and every s != i.  Size side conditions: for k = 2 we need
    |H_1| >= 3 and |H_2| >= 2, in general some |H_i| > 2; sizes must be
    certified (finite enumeration, or infinite order of a generator).
    Success concludes <H_1,...,H_k> is their free product, up to the
    enumeration bound recorded in the report.
    """
    k = len(subgroups)
    if k < 2 or len(sets) != k:
        raise ValueError("need k >= 2 subgroups with one set each")
    for x, y in itertools.combinations(range(k), 2):
        overlap = sets[x].intersection(sets[y])
        if not overlap.is_empty:
            raise ValueError(f"sets X_{x+1} and X_{y+1} overlap (witness {overlap.witness()!r})")
    enumerated = [_subgroup_nonidentity(action, spec) for spec in subgroups]
    sizes = [size for _, size, _ in enumerated]
    if k == 2:
        if sizes[0] < 3:
            raise ValueError(f"size condition violated: |H_1| = {sizes[0]} < 3 (need >= 3, |H_2| >= 2)")
        if sizes[1] < 2:
            raise ValueError(f"size condition violated: |H_2| = {sizes[1]} < 2")
    elif not any(size > 2 for size in sizes):
        raise ValueError("size condition violated: some subgroup must have more than 2 elements")
    checks = 0
    for i, (elements, _, _) in enumerate(enumerated):
        for h in elements:
            for s in range(k):
                if s == i:
                    continue
                image = action.act_on_set(h, sets[s])
                outside = image.difference(sets[i])
                checks += 1
                if not outside.is_empty:
                    return PingPongReport(
                        False,
                        problem=f"h X_{s+1} is not contained in X_{i+1} for an element of H_{i+1}",
                        witness=outside.witness())
    bound_note = "; ".join(f"H_{i+1}: {note}" for i, (_, _, note) in enumerate(enumerated))
    return PingPongReport(
        True,
        conclusion=f"<H_1,...,H_{k}> decomposes as the free product of the {k} subgroups",
        inclusions=(("checks", checks),),
        bound_note=bound_note,
    )


# ---------------------------------------------------------------------------
# witnesses
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class NonabelianWitness:
    sets: tuple[ActionSet, ...]      # E_1..E_5
    g1: object
    g2: object


def make_nonabelian_witness(action: Action, g1, g2) -> NonabelianWitness:
    """The five singletons {e}, {g1}, {g2}, {g2 g1}, {g1 g2} inside G.

    Only defined over a self-action (free or finite regular), where group
    elements are points.  Under left multiplication these are exactly the
    sets satisfying g1 E1 = E2 = g2^-1 E4 and E3 = g1^-1 E5 = g2 E1
    (the right-action construction has E4 and E5 swapped).  Fails when the
    elements commute.
    """
    g1 = action.normalize_element(g1)
    g2 = action.normalize_element(g2)
    if action.multiply(g1, g2) == action.multiply(g2, g1):
        raise ValueError("elements commute; no witness exists")
    members = [action.identity(), g1, g2, action.multiply(g2, g1), action.multiply(g1, g2)]
    if isinstance(action, FreeSelfAction):
        sets = tuple(action.point_set([w]) for w in members)
    elif isinstance(action, FiniteRegularAction):
        sets = tuple(action.point_set([action.point_of(g)]) for g in members)
    else:
        raise ValueError("witness sets live in the group itself; use a self-action")
    return NonabelianWitness(sets, g1, g2)


def verify_nonabelian(action: Action, witness: NonabelianWitness) -> PingPongReport:
    """Check disjointness plus g1 E1 = E2 = g2^-1 E4 and E3 = g1^-1 E5 = g2 E1.

    E_1 must be nonempty: with all sets empty the relations hold in any
    group, so emptiness certifies nothing.  Success certifies that the two
    elements do not commute.
    """
    e1, e2, e3, e4, e5 = witness.sets
    if e1.is_empty:
        return PingPongReport(False, problem="E_1 is empty; relations hold vacuously")
    sets = [e1, e2, e3, e4, e5]
    for x, y in itertools.combinations(range(5), 2):
        if not sets[x].is_disjoint(sets[y]):
            return PingPongReport(False, problem=f"E_{x+1} and E_{y+1} overlap",
                                  witness=sets[x].intersection(sets[y]).witness())
    g1 = action.normalize_element(witness.g1)
    g2 = action.normalize_element(witness.g2)
    relations = [
        ("g1 E1 = E2", action.act_on_set(g1, e1), e2),
        ("g2^-1 E4 = E2", action.act_on_set(action.inverse(g2), e4), e2),
        ("g1^-1 E5 = E3", action.act_on_set(action.inverse(g1), e5), e3),
        ("g2 E1 = E3", action.act_on_set(g2, e1), e3),
    ]
    for name, left, right in relations:
        if left != right:
            return PingPongReport(False, problem=f"relation {name} fails",
                                  witness=left.difference(right).witness()
                                  if not left.difference(right).is_empty
                                  else right.difference(left).witness())
    return PingPongReport(True, conclusion="the two elements do not commute")


@dataclass(frozen=True)
class InfiniteOrderWitness:
    e1: ActionSet                    # {a^n : n >= 0}
    e2: ActionSet                    # {a^-n : n >= 1}
    element: object


def make_infinite_order_witness(action: Action, a) -> InfiniteOrderWitness:
    """E_1 = nonnegative powers of a, E_2 = negative powers, as exact sets.

    Works over the free self-action for any nonidentity a.  On finite
    backends every element has finite order and construction fails,
    reporting that order.
    """
    a = action.normalize_element(a)
    if isinstance(action, FreeSelfAction):
        if a.is_identity:
            raise ValueError("element has finite order 1")
        e1 = SymbolicSet.powers(a, action.rank)
        e2 = SymbolicSet.powers(~a, action.rank).difference(
            SymbolicSet.singleton(FreeWord(()), action.rank))
        return InfiniteOrderWitness(e1, e2, a)
    if isinstance(action, TrivialAction):
        raise ValueError("the trivial action cannot exhibit infinite order")
    raise ValueError(f"element has finite order {action.element_order(a)}")


def verify_infinite_order(action: Action, witness: InfiniteOrderWitness) -> PingPongReport:
    """Check E1, E2 disjoint, a E1 inside E1, and a E2 meets E1.

    Passing certifies that the element has infinite order; on a finite
    backend no witness can pass.
    """
    a = action.normalize_element(witness.element)
    if not witness.e1.is_disjoint(witness.e2):
        return PingPongReport(False, problem="E_1 and E_2 overlap",
                              witness=witness.e1.intersection(witness.e2).witness())
    moved = action.act_on_set(a, witness.e1)
    outside = moved.difference(witness.e1)
    if not outside.is_empty:
        return PingPongReport(False, problem="a E_1 is not contained in E_1",
                              witness=outside.witness())
    touched = action.act_on_set(a, witness.e2).intersection(witness.e1)
    if touched.is_empty:
        return PingPongReport(False, problem="a E_2 does not meet E_1")
    return PingPongReport(True, conclusion="the element has infinite order")


# ---------------------------------------------------------------------------
# covering patterns: decompositions as predicates on configuration sets
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ParadoxPattern:
    """Two families of (coordinate, block) hits.

    A cover X = union g_i A_i with pieces drawn from partition blocks and
    translators inverse to tuple entries (coordinate 0 standing for the
    identity) says exactly: every realized configuration C satisfies
    C_j = i for some listed hit (j, i).  Two such families with pairwise
    distinct blocks describe a paradoxical decomposition purely in terms of
    the configuration set, which is what lets decompositions transfer
    between actions with equal configuration sets.
    """

    family_a: tuple[tuple[int, int], ...]
    family_b: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class PatternReport:
    holds: bool
    problem: Optional[str] = None
    counterexample: Optional[tuple] = None
    decomposition: Optional[ParadoxicalDecomposition] = None

    def __bool__(self) -> bool:
        return self.holds


def pattern_check(cs: ConfigurationSet, pattern: ParadoxPattern) -> PatternReport:
    """Decide whether the pattern's two covering families hold on cs.

    When they do, the implied decomposition (pieces = hit blocks,
    translators = inverses of the matching tuple entries) is built,
    verified against the action, and returned with the report.
    """
    n = cs.pair.tuple_length
    m = cs.pair.block_count
    for j, i in pattern.family_a + pattern.family_b:
        if not (0 <= j <= n):
            raise ValueError(f"coordinate {j} out of range 0..{n}")
        if not (1 <= i <= m):
            raise ValueError(f"block index {i} out of range 1..{m}")
    blocks_used = [i for _, i in pattern.family_a + pattern.family_b]
    if len(set(blocks_used)) != len(blocks_used):
        return PatternReport(False, problem="families reuse a block; pieces would overlap")
    for config in cs.configurations:
        for family_name, family in (("a", pattern.family_a), ("b", pattern.family_b)):
            if not any(config[j] == i for j, i in family):
                return PatternReport(
                    False,
                    problem=f"configuration misses family {family_name}",
                    counterexample=config)

    action = cs.pair.action
    blocks = cs.pair.partition.blocks

    def implied(family):
        pieces, translators = [], []
        for j, i in family:
            pieces.append(blocks[i - 1])
            translators.append(action.identity() if j == 0
                               else action.inverse(cs.pair.elements[j - 1]))
        return tuple(pieces), tuple(translators)

    pieces_a, translators_a = implied(pattern.family_a)
    pieces_b, translators_b = implied(pattern.family_b)
    decomposition = ParadoxicalDecomposition(pieces_a, translators_a, pieces_b, translators_b)
    report = verify_decomposition(action, decomposition)
    if not report.ok:
        raise RuntimeError(f"pattern held but decomposition failed: {report.problem}")
    return PatternReport(True, decomposition=decomposition)


# ---------------------------------------------------------------------------
# bounded search
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SearchResult:
    decomposition: Optional[ParadoxicalDecomposition]
    bounds: tuple[int, int, int]     # (max_pieces, cone_depth, translator_length)
    reason: Optional[str] = None

    def __bool__(self) -> bool:
        return self.decomposition is not None


def depth_atoms(rank: int, depth: int) -> list[SymbolicSet]:
    """The canonical depth-d partition atoms of the free-word universe:
    singletons for words shorter than d, cones at length exactly d."""
    full = SymbolicSet.full(rank)
    atoms: list[SymbolicSet] = []
    for w in full.enumerate_up_to(depth):
        if len(w.letters) < depth:
            atoms.append(SymbolicSet.singleton(w, rank))
        else:
            atoms.append(SymbolicSet.cone(w, rank))
    return atoms


def bounded_paradox_search(
    action: Action, max_pieces: int, cone_depth: int, translator_length: int
) -> SearchResult:
    """Exhaustive search for a decomposition within the stated bounds.

    Pieces range over the depth atoms (pairwise disjoint by construction),
    translators over words of bounded length; candidates are scanned in
    lexicographic order (piece count, then split, then atom choices, then
    translators) and the first verified decomposition is returned.  Finite
    and trivial actions are rejected up front with the counting and
    invariance obstructions.
    """
    bounds = (max_pieces, cone_depth, translator_length)
    if max_pieces < 2 or cone_depth < 0 or translator_length < 0:
        raise ValueError("bounds must allow at least two pieces")
    if isinstance(action, TrivialAction):
        return SearchResult(None, bounds, reason=(
            "trivial action: translates equal their pieces, so two disjoint "
            "covering families cannot both exist"))
    if action.is_finite:
        return SearchResult(None, bounds, reason=(
            "finite point set: disjoint pieces satisfy |A|+|B| <= |X| while two "
            "covers need |A|+|B| >= 2|X|"))
    if not isinstance(action, FreeSelfAction):
        raise ValueError(f"unsupported backend {action.kind}")

    rank = action.rank
    atoms = depth_atoms(rank, cone_depth)
    translators = SymbolicSet.full(rank).enumerate_up_to(translator_length)
    moved: dict[tuple[int, int], SymbolicSet] = {}

    def translate(t_idx: int, a_idx: int) -> SymbolicSet:
        key = (t_idx, a_idx)
        if key not in moved:
            moved[key] = atoms[a_idx].translate(translators[t_idx])
        return moved[key]

    full = action.full_set()

    def covering_choices(atom_indices: tuple[int, ...]):
        """Translator assignments making the translates cover X, lex order."""
        for assignment in itertools.product(range(len(translators)), repeat=len(atom_indices)):
            translates = [translate(t, a) for t, a in zip(assignment, atom_indices)]
            if union_all(translates) == full:
                yield assignment

    for total in range(2, max_pieces + 1):
        for count_a in range(1, total):
            count_b = total - count_a
            for subset_a in itertools.combinations(range(len(atoms)), count_a):
                remaining = [i for i in range(len(atoms)) if i not in subset_a]
                if len(remaining) < count_b:
                    continue
                for assign_a in covering_choices(subset_a):
                    for subset_b in itertools.combinations(remaining, count_b):
                        for assign_b in covering_choices(subset_b):
                            dec = ParadoxicalDecomposition(
                                tuple(atoms[i] for i in subset_a),
                                tuple(translators[t] for t in assign_a),
                                tuple(atoms[i] for i in subset_b),
                                tuple(translators[t] for t in assign_b),
                            )
                            report = verify_decomposition(action, dec)
                            if report.ok:
                                return SearchResult(dec, bounds)
    return SearchResult(None, bounds, reason="no decomposition within bounds")
