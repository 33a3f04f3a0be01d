"""JSON document parsing and serialization for the command-line surface.

Documents are plain JSON: words use the letter syntax ("ab", "A", "e"),
permutations are image arrays, rationals are "p/q" strings, and sets are
expression trees (cone / singleton / full / empty / points / powers plus
boolean combinators).  Computed symbolic sets serialize canonically as
automaton tables so that output is byte-stable and parses back to the same
value.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Mapping

from .actions import (
    Action,
    FinitePermutationAction,
    FiniteRegularAction,
    FreeSelfAction,
    TrivialAction,
)
from .langsets import ActionSet, FiniteSet, SymbolicSet
from .words import FreeWord, Permutation, WordParseError, parse_word, word_str


class DocumentError(ValueError):
    """Schema or parse failure; carries a JSON-path-style location."""

    def __init__(self, message: str, location: str):
        super().__init__(f"{message} at {location}")
        self.location = location
        self.reason = message


def _expect(condition: bool, message: str, location: str) -> None:
    if not condition:
        raise DocumentError(message, location)


def parse_rational(value: Any, location: str) -> Fraction:
    _expect(isinstance(value, str), "rational must be a 'p/q' string", location)
    try:
        if "/" in value:
            num, den = value.split("/", 1)
            return Fraction(int(num), int(den))
        return Fraction(int(value))
    except (ValueError, ZeroDivisionError) as err:
        raise DocumentError(f"bad rational {value!r}: {err}", location) from None


def rational_str(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def parse_element(value: Any, action: Action, location: str):
    """A group element: a word string, or an image array for permutations."""
    if isinstance(value, str):
        try:
            word = parse_word(value)
        except WordParseError as err:
            raise DocumentError(f"bad word {value!r}: {err}", location) from None
        try:
            return action.normalize_element(word)
        except ValueError as err:
            raise DocumentError(str(err), location) from None
    if isinstance(value, list):
        _expect(all(isinstance(v, int) for v in value), "permutation entries must be integers", location)
        try:
            return action.normalize_element(Permutation(tuple(value)))
        except ValueError as err:
            raise DocumentError(str(err), location) from None
    raise DocumentError(f"cannot read element from {type(value).__name__}", location)


def element_json(value) -> Any:
    if isinstance(value, FreeWord):
        return word_str(value)
    if isinstance(value, Permutation):
        return list(value.images)
    raise TypeError(f"not a group element: {value!r}")


def parse_action(doc: Any, location: str = "action") -> Action:
    _expect(isinstance(doc, dict), "action must be an object", location)
    backend = doc.get("backend")
    if backend == "free-self":
        rank = doc.get("rank")
        _expect(isinstance(rank, int) and rank >= 1, "free-self needs integer rank >= 1", f"{location}.rank")
        return FreeSelfAction(rank)
    if backend == "trivial":
        degree, rank = doc.get("degree"), doc.get("rank")
        _expect((degree is None) != (rank is None),
                "trivial needs exactly one of degree, rank", location)
        try:
            return TrivialAction(degree=degree, rank=rank)
        except ValueError as err:
            raise DocumentError(str(err), location) from None
    if backend in ("finite-permutation", "finite-regular"):
        raw = doc.get("generators")
        _expect(isinstance(raw, dict) and raw, "needs a generators object", f"{location}.generators")
        generators = {}
        for name, images in raw.items():
            gen_loc = f"{location}.generators.{name}"
            try:
                index = abs(parse_word(name).letters[0])
            except (WordParseError, IndexError):
                raise DocumentError(f"bad generator name {name!r}", gen_loc) from None
            _expect(isinstance(images, list) and all(isinstance(v, int) for v in images),
                    "generator must be an image array", gen_loc)
            try:
                generators[index] = Permutation(tuple(images))
            except ValueError as err:
                raise DocumentError(str(err), gen_loc) from None
        try:
            if backend == "finite-regular":
                return FiniteRegularAction(generators)
            degree = doc.get("degree")
            _expect(isinstance(degree, int) and degree >= 1,
                    "finite-permutation needs integer degree >= 1", f"{location}.degree")
            return FinitePermutationAction(degree, generators)
        except DocumentError:
            raise
        except ValueError as err:
            raise DocumentError(str(err), location) from None
    raise DocumentError(f"unknown backend {backend!r}", f"{location}.backend")


def action_json(action: Action) -> dict:
    if isinstance(action, FreeSelfAction):
        return {"backend": "free-self", "rank": action.rank}
    if isinstance(action, TrivialAction):
        if action.degree is not None:
            return {"backend": "trivial", "degree": action.degree}
        return {"backend": "trivial", "rank": action.rank}
    if isinstance(action, FinitePermutationAction):
        return {
            "backend": "finite-permutation",
            "degree": action.degree,
            "generators": {word_str(FreeWord((i,))): list(p.images)
                           for i, p in sorted(action.generators.items())},
        }
    if isinstance(action, FiniteRegularAction):
        return {
            "backend": "finite-regular",
            "generators": {word_str(FreeWord((i,))): list(p.images)
                           for i, p in sorted(action.generators.items())},
        }
    raise TypeError(f"unknown action {action!r}")


def _parse_word_field(doc: Mapping, location: str) -> FreeWord:
    value = doc.get("word", "e")
    _expect(isinstance(value, str), "word must be a string", f"{location}.word")
    try:
        return parse_word(value)
    except WordParseError as err:
        raise DocumentError(f"bad word {value!r}: {err}", f"{location}.word") from None


def parse_set(doc: Any, action: Action, location: str) -> ActionSet:
    """Set expression tree over the action's point universe."""
    _expect(isinstance(doc, dict), "set must be an object", location)
    kind = doc.get("kind")
    symbolic = isinstance(action.full_set(), SymbolicSet)
    if kind in ("cone", "singleton", "powers"):
        _expect(symbolic, f"{kind} sets need a free-word universe", location)
        rank = action.full_set().rank
        w = _parse_word_field(doc, location)
        if any(abs(l) > rank for l in w.letters):
            raise DocumentError(f"word {word_str(w)!r} outside rank {rank}", f"{location}.word")
        if kind == "cone":
            return SymbolicSet.cone(w, rank)
        if kind == "singleton":
            return SymbolicSet.singleton(w, rank)
        return SymbolicSet.powers(w, rank)
    if kind == "full":
        return action.full_set()
    if kind == "empty":
        return action.empty_set()
    if kind == "points":
        _expect(not symbolic, "points sets need a finite universe", location)
        points = doc.get("points")
        _expect(isinstance(points, list) and all(isinstance(p, int) for p in points),
                "points must be an integer array", f"{location}.points")
        try:
            return action.point_set(points)
        except ValueError as err:
            raise DocumentError(str(err), f"{location}.points") from None
    if kind in ("union", "intersection"):
        parts = doc.get("of")
        _expect(isinstance(parts, list) and parts, f"{kind} needs a nonempty 'of' array", location)
        sets = [parse_set(p, action, f"{location}.of[{i}]") for i, p in enumerate(parts)]
        result = sets[0]
        for s in sets[1:]:
            result = result.union(s) if kind == "union" else result.intersection(s)
        return result
    if kind == "complement":
        inner = doc.get("of")
        _expect(inner is not None, "complement needs 'of'", location)
        return parse_set(inner, action, f"{location}.of").complement()
    if kind == "difference":
        left, right = doc.get("left"), doc.get("right")
        _expect(left is not None and right is not None, "difference needs 'left' and 'right'", location)
        return parse_set(left, action, f"{location}.left").difference(
            parse_set(right, action, f"{location}.right"))
    if kind == "automaton":
        _expect(symbolic, "automaton sets need a free-word universe", location)
        rank, trans, acc = doc.get("rank"), doc.get("transitions"), doc.get("accepting")
        _expect(isinstance(rank, int) and rank == action.full_set().rank,
                "automaton rank must match the action", f"{location}.rank")
        _expect(isinstance(trans, list) and isinstance(acc, list) and trans
                and len(trans) == len(acc),
                "automaton needs matching transitions/accepting lists", location)
        n_states = len(trans)
        for i, row in enumerate(trans):
            _expect(isinstance(row, list) and len(row) == 2 * rank
                    and all(isinstance(t, int) and 0 <= t < n_states for t in row),
                    f"transition row {i} must hold {2*rank} states below {n_states}",
                    f"{location}.transitions")
        raw = SymbolicSet(rank, tuple(tuple(row) for row in trans), tuple(bool(v) for v in acc))
        # re-canonicalize so hand-written tables compare like computed ones
        return raw.union(SymbolicSet.empty(rank))
    raise DocumentError(f"unknown set kind {kind!r}", f"{location}.kind")


def set_json(value: ActionSet) -> dict:
    if isinstance(value, FiniteSet):
        return {"kind": "points", "points": sorted(value.members)}
    return {
        "kind": "automaton",
        "rank": value.rank,
        "transitions": [list(row) for row in value.transitions],
        "accepting": [bool(v) for v in value.accepting],
    }


def parse_sets(doc: Any, action: Action, location: str) -> list[ActionSet]:
    _expect(isinstance(doc, list) and doc, "expected a nonempty array of sets", location)
    return [parse_set(item, action, f"{location}[{i}]") for i, item in enumerate(doc)]


def parse_elements(doc: Any, action: Action, location: str) -> list:
    _expect(isinstance(doc, list) and doc, "expected a nonempty array of elements", location)
    return [parse_element(item, action, f"{location}[{i}]") for i, item in enumerate(doc)]
