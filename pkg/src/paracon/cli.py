"""Command-line interface.

Reads a JSON document, dispatches to the engines, and prints a
deterministic JSON report: {"command", "status", "data", "bounds",
"input_digest", "seed"}.  Identical inputs produce byte-identical reports;
wall-clock timing goes to stderr so stdout stays diffable.

Exit codes: 0 = computed result (including negative outcomes such as
"infeasible" or "hypothesis-violated"), 2 = schema/parse error with a
location, 3 = a requested bound exceeds the declared --bound-* cap.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from fractions import Fraction

from . import configurations as cfg
from . import equations as eqs
from . import paradox as pdx
from .actions import validate_partition
from .serialization import (
    DocumentError,
    action_json,
    element_json,
    parse_action,
    parse_element,
    parse_elements,
    parse_rational,
    parse_set,
    parse_sets,
    rational_str,
    set_json,
)


class BoundExceeded(Exception):
    def __init__(self, name: str, requested: int, cap: int):
        super().__init__(f"requested {name}={requested} exceeds declared cap {cap}")
        self.name = name
        self.requested = requested
        self.cap = cap


def _require(doc: dict, key: str, location: str = ""):
    if key not in doc:
        raise DocumentError(f"missing field {key!r}", location or key)
    return doc[key]


def _int_field(doc: dict, key: str, default=None) -> int:
    value = doc.get(key, default)
    if not isinstance(value, int) or isinstance(value, bool):
        raise DocumentError(f"field {key!r} must be an integer", key)
    return value


def _cap(name: str, requested: int, cap: int) -> int:
    if requested > cap:
        raise BoundExceeded(name, requested, cap)
    return requested


def _parse_pair(doc: dict, action, location: str) -> cfg.ConfigurationPair:
    elements = parse_elements(_require(doc, "tuple", f"{location}.tuple"), action, f"{location}.tuple")
    blocks = parse_sets(_require(doc, "partition", f"{location}.partition"), action, f"{location}.partition")
    report = validate_partition(action, blocks)
    if not report:
        raise DocumentError(
            f"invalid partition: {report.problem} (blocks {list(report.blocks_involved)}, "
            f"witness {report.witness!r})", f"{location}.partition")
    return cfg.configuration_pair(action, elements, blocks)


def _witness_json(value):
    if value is None:
        return None
    try:
        return element_json(value)
    except TypeError:
        return value if isinstance(value, (int, str)) else repr(value)


def _cs_json(cs: cfg.ConfigurationSet) -> dict:
    return {
        "tuple_length": cs.pair.tuple_length,
        "block_count": cs.pair.block_count,
        "configurations": [list(c) for c in cs.configurations],
    }


def _decomposition_json(dec: pdx.ParadoxicalDecomposition) -> dict:
    return {
        "pieces_a": [set_json(p) for p in dec.pieces_a],
        "translators_a": [element_json(t) for t in dec.translators_a],
        "pieces_b": [set_json(p) for p in dec.pieces_b],
        "translators_b": [element_json(t) for t in dec.translators_b],
        "piece_count": dec.piece_count,
    }


def _parse_decomposition(doc: dict, action, location: str) -> pdx.ParadoxicalDecomposition:
    return pdx.ParadoxicalDecomposition(
        tuple(parse_sets(_require(doc, "pieces_a", location), action, f"{location}.pieces_a")),
        tuple(parse_elements(_require(doc, "translators_a", location), action, f"{location}.translators_a")),
        tuple(parse_sets(_require(doc, "pieces_b", location), action, f"{location}.pieces_b")),
        tuple(parse_elements(_require(doc, "translators_b", location), action, f"{location}.translators_b")),
    )


# ---------------------------------------------------------------------------
# command handlers: (args, doc) -> (status, data, bounds)
# ---------------------------------------------------------------------------


def cmd_con_compute(args, doc):
    action = parse_action(_require(doc, "action"))
    pair = _parse_pair(doc, action, "")
    cs = cfg.compute_configurations(pair)
    cells = cfg.verify_cell_partition(cs)
    data = _cs_json(cs)
    data["base_cells"] = [
        {"configuration": list(c), "cell": set_json(cs.base_cells[c])} for c in cs.configurations
    ]
    data["cell_partition_ok"] = bool(cells)
    return "ok", data, {}


def cmd_eq_solve(args, doc):
    action = parse_action(_require(doc, "action"))
    pair = _parse_pair(doc, action, "")
    cs = cfg.compute_configurations(pair)
    system = eqs.build_equations(cs)
    result = eqs.solve_feasibility(system)
    data = {
        "variables": [list(c) for c in cs.configurations],
        "rows": [list(label) for label in system.labels],
    }
    if result.feasible:
        data["solution"] = [rational_str(v) for v in result.solution]
        return "feasible", data, {}
    data["certificate"] = [rational_str(v) for v in result.certificate]
    return "infeasible", data, {}


def cmd_eq_verify(args, doc):
    action = parse_action(_require(doc, "action"))
    pair = _parse_pair(doc, action, "")
    cs = cfg.compute_configurations(pair)
    system = eqs.build_equations(cs)
    data = {"variables": [list(c) for c in cs.configurations]}
    if "solution" in doc:
        values = [parse_rational(v, f"solution[{i}]") for i, v in enumerate(_require(doc, "solution"))]
        report = eqs.verify_solution(system, values)
        kind = "solution"
    elif "multipliers" in doc:
        values = [parse_rational(v, f"multipliers[{i}]") for i, v in enumerate(_require(doc, "multipliers"))]
        report = eqs.verify_certificate(system, values)
        kind = "certificate"
    else:
        raise DocumentError("need either 'solution' or 'multipliers'", "")
    data["kind"] = kind
    if report.ok:
        return "ok", data, {}
    data["violation"] = [str(part) for part in report.violation]
    return "violated", data, {}


def cmd_coarsen(args, doc):
    action = parse_action(_require(doc, "action"))
    mode = _require(doc, "mode")
    if mode not in ("partition", "string", "composed"):
        raise DocumentError("mode must be partition | string | composed", "mode")
    fine = _parse_pair(_require(doc, "fine"), action, "fine")
    coarse = _parse_pair(_require(doc, "coarse"), action, "coarse")
    fine_cs = cfg.compute_configurations(fine)
    coarse_cs = cfg.compute_configurations(coarse)
    raw = _require(doc, "solution")
    values = [parse_rational(v, f"solution[{i}]") for i, v in enumerate(raw)]
    try:
        result = cfg.coarsen_solution(mode, fine_cs, coarse_cs, values)
    except ValueError as err:
        raise DocumentError(str(err), "solution") from None
    data = {
        "mode": mode,
        "fine_configurations": [list(c) for c in fine_cs.configurations],
        "coarse_configurations": [list(c) for c in coarse_cs.configurations],
        "solution": [rational_str(v) for v in result],
    }
    return "ok", data, {}


def cmd_compare_con(args, doc):
    action_a = parse_action(_require(doc, "action_a"), "action_a")
    action_b = parse_action(_require(doc, "action_b"), "action_b")
    raw_bounds = doc.get("bounds", {})
    if not isinstance(raw_bounds, dict):
        raise DocumentError("bounds must be an object", "bounds")
    bounds = cfg.ConSearchBounds(
        max_tuple_length=_cap("max_tuple_length",
                              _int_field(raw_bounds, "max_tuple_length", 1), args.bound_length),
        max_word_length=_cap("max_word_length",
                             _int_field(raw_bounds, "max_word_length", 1), args.bound_length),
        max_blocks=_cap("max_blocks", _int_field(raw_bounds, "max_blocks", 3), args.bound_depth),
        family_limit=_int_field(raw_bounds, "family_limit", 500),
        seed=args.seed,
    )

    def explicit(key, action):
        if key not in doc:
            return None
        items = doc[key]
        if not isinstance(items, list):
            raise DocumentError(f"{key} must be an array of pairs", key)
        out = []
        for i, item in enumerate(items):
            pair = _parse_pair(item, action, f"{key}[{i}]")
            out.append((pair.elements, pair.partition.blocks))
        return out

    report = cfg.con_included(action_a, action_b, bounds,
                              pairs_a=explicit("pairs_a", action_a),
                              pairs_b=explicit("pairs_b", action_b))
    bounds_json = {
        "max_tuple_length": bounds.max_tuple_length,
        "max_word_length": bounds.max_word_length,
        "max_blocks": bounds.max_blocks,
        "family_limit": bounds.family_limit,
    }
    data = {"pairs_checked": report.pairs_checked}
    if report.included:
        return "included-up-to-bounds", data, bounds_json
    elements, blocks, configs = report.counterexample
    data["counterexample"] = {
        "tuple": list(elements),
        "partition": list(blocks),
        "configurations": [list(c) for c in configs],
    }
    return "counterexample", data, bounds_json


def cmd_probe_cardinality(args, doc):
    action = parse_action(_require(doc, "action"))
    n = _int_field(doc, "n")
    if n < 1:
        raise DocumentError("n must be positive", "n")
    probe = cfg.cardinality_probe(action, n)
    data = {"n": n}
    if probe.possible:
        data["witness_partition"] = [set_json(b) for b in probe.witness.blocks]
        return "yes", data, {}
    return "no", data, {}


def cmd_paradox_verify(args, doc):
    action = parse_action(_require(doc, "action"))
    dec = _parse_decomposition(_require(doc, "decomposition"), action, "decomposition")
    report = pdx.verify_decomposition(action, dec, strict=args.strict_partition)
    data = {"piece_count": report.piece_count, "strict": args.strict_partition}
    if report.ok:
        return "ok", data, {}
    data["problem"] = report.problem
    data["witness"] = _witness_json(report.witness)
    return "failed", data, {}


def cmd_paradox_chain(args, doc):
    action = parse_action(_require(doc, "action"))
    raw = _require(doc, "chain")
    sets = parse_sets(_require(raw, "sets", "chain.sets"), action, "chain.sets")
    elements = parse_elements(_require(raw, "elements", "chain.elements"), action, "chain.elements")
    try:
        chain = pdx.PingPongChain(tuple(sets), tuple(elements))
    except ValueError as err:
        raise DocumentError(str(err), "chain") from None
    try:
        result = pdx.chain_to_decomposition(action, chain)
    except pdx.ChainHypothesisError as err:
        return "hypothesis-violated", {
            "message": str(err),
            "witness": _witness_json(err.witness),
        }, {}
    data = {
        "piece_bound": result.piece_bound,
        "stage_elements": [element_json(s) for s in result.stage_elements],
        "decomposition": _decomposition_json(result.decomposition),
    }
    if result.note:
        data["note"] = result.note
    return "ok", data, {}


def cmd_paradox_search(args, doc):
    action = parse_action(_require(doc, "action"))
    max_pieces = _cap("max_pieces", _int_field(doc, "max_pieces", 4), args.bound_pieces)
    cone_depth = _cap("cone_depth", _int_field(doc, "cone_depth", 1), args.bound_depth)
    translator_length = _cap("translator_length",
                             _int_field(doc, "translator_length", 1), args.bound_length)
    result = pdx.bounded_paradox_search(action, max_pieces, cone_depth, translator_length)
    bounds_json = {
        "max_pieces": max_pieces,
        "cone_depth": cone_depth,
        "translator_length": translator_length,
    }
    if result.decomposition is not None:
        return "found", {"decomposition": _decomposition_json(result.decomposition)}, bounds_json
    return "none-within-bounds", {"reason": result.reason}, bounds_json


def cmd_paradox_pattern(args, doc):
    action = parse_action(_require(doc, "action"))
    pair = _parse_pair(doc, action, "")
    cs = cfg.compute_configurations(pair)
    raw = _require(doc, "pattern")

    def family(key):
        items = raw.get(key)
        if not (isinstance(items, list) and items
                and all(isinstance(p, list) and len(p) == 2
                        and all(isinstance(v, int) for v in p) for p in items)):
            raise DocumentError(f"pattern.{key} must be a nonempty array of [coordinate, block] pairs",
                                f"pattern.{key}")
        return tuple((j, i) for j, i in items)

    pattern = pdx.ParadoxPattern(family("family_a"), family("family_b"))
    try:
        report = pdx.pattern_check(cs, pattern)
    except ValueError as err:
        raise DocumentError(str(err), "pattern") from None
    data = {"configurations": [list(c) for c in cs.configurations]}
    if report.holds:
        data["decomposition"] = _decomposition_json(report.decomposition)
        return "holds", data, {}
    data["problem"] = report.problem
    if report.counterexample is not None:
        data["counterexample"] = list(report.counterexample)
    return "fails", data, {}


def cmd_pingpong_cyclic(args, doc):
    action = parse_action(_require(doc, "action"))
    raw = _require(doc, "tableau")
    sets_a = parse_sets(_require(raw, "sets_a", "tableau.sets_a"), action, "tableau.sets_a")
    sets_b = parse_sets(_require(raw, "sets_b", "tableau.sets_b"), action, "tableau.sets_b")
    elements = parse_elements(_require(raw, "elements", "tableau.elements"), action, "tableau.elements")
    try:
        tableau = pdx.CyclicTableau(tuple(sets_a), tuple(sets_b), tuple(elements))
        report = pdx.check_pingpong_cyclic(action, tableau)
    except ValueError as err:
        return "precondition-failed", {"message": str(err)}, {}
    if report.ok:
        return "ok", {
            "conclusion": report.conclusion,
            "inclusions": [list(pair) for pair in report.inclusions],
        }, {}
    return "failed", {"problem": report.problem, "witness": _witness_json(report.witness)}, {}


def cmd_pingpong_subgroups(args, doc):
    action = parse_action(_require(doc, "action"))
    raw_specs = _require(doc, "subgroups")
    if not isinstance(raw_specs, list) or len(raw_specs) < 2:
        raise DocumentError("subgroups must be an array of at least two descriptions", "subgroups")
    specs = []
    for i, item in enumerate(raw_specs):
        loc = f"subgroups[{i}]"
        if not isinstance(item, dict):
            raise DocumentError("subgroup description must be an object", loc)
        kind = item.get("kind")
        if kind == "cyclic":
            bound = _cap("exponent_bound", _int_field(item, "exponent_bound", 3), args.bound_length)
            generator = parse_element(_require(item, "generator", loc), action, f"{loc}.generator")
            specs.append(pdx.CyclicSubgroup(generator, bound))
        elif kind == "finite":
            elements = parse_elements(_require(item, "elements", loc), action, f"{loc}.elements")
            specs.append(pdx.FiniteSubgroup(tuple(elements)))
        else:
            raise DocumentError(f"unknown subgroup kind {kind!r}", f"{loc}.kind")
    sets = parse_sets(_require(doc, "sets"), action, "sets")
    try:
        report = pdx.check_pingpong_subgroups(action, specs, sets)
    except BoundExceeded:
        raise
    except ValueError as err:
        return "precondition-failed", {"message": str(err)}, {}
    if report.ok:
        return "ok", {
            "conclusion": report.conclusion,
            "checks": report.inclusions[0][1],
        }, {"enumeration": report.bound_note}
    return "failed", {"problem": report.problem, "witness": _witness_json(report.witness)}, {}


def cmd_witness_nonabelian(args, doc):
    action = parse_action(_require(doc, "action"))
    g1 = parse_element(_require(doc, "g1"), action, "g1")
    g2 = parse_element(_require(doc, "g2"), action, "g2")
    try:
        witness = pdx.make_nonabelian_witness(action, g1, g2)
    except ValueError as err:
        return "no-witness", {"message": str(err)}, {}
    report = pdx.verify_nonabelian(action, witness)
    data = {
        "sets": [set_json(s) for s in witness.sets],
        "verified": report.ok,
        "conclusion": report.conclusion,
    }
    return ("ok" if report.ok else "failed"), data, {}


def cmd_witness_infinite_order(args, doc):
    action = parse_action(_require(doc, "action"))
    element = parse_element(_require(doc, "element"), action, "element")
    try:
        witness = pdx.make_infinite_order_witness(action, element)
    except ValueError as err:
        data = {"message": str(err)}
        order = None
        try:
            order = action.element_order(element)
        except ValueError:
            pass
        if order is not None:
            data["order"] = order
        return "finite-order", data, {}
    report = pdx.verify_infinite_order(action, witness)
    data = {
        "e1": set_json(witness.e1),
        "e2": set_json(witness.e2),
        "verified": report.ok,
        "conclusion": report.conclusion,
    }
    return ("ok" if report.ok else "failed"), data, {}


COMMANDS = {
    ("con", "compute"): cmd_con_compute,
    ("eq", "solve"): cmd_eq_solve,
    ("eq", "verify"): cmd_eq_verify,
    ("coarsen", None): cmd_coarsen,
    ("compare", "con"): cmd_compare_con,
    ("probe", "cardinality"): cmd_probe_cardinality,
    ("paradox", "verify"): cmd_paradox_verify,
    ("paradox", "chain"): cmd_paradox_chain,
    ("paradox", "search"): cmd_paradox_search,
    ("paradox", "pattern"): cmd_paradox_pattern,
    ("pingpong", "cyclic"): cmd_pingpong_cyclic,
    ("pingpong", "subgroups"): cmd_pingpong_subgroups,
    ("witness", "nonabelian"): cmd_witness_nonabelian,
    ("witness", "infinite-order"): cmd_witness_infinite_order,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", help="input JSON document (default: stdin)")
    common.add_argument("--output", help="output path (default: stdout)")
    common.add_argument("--bound-depth", type=int, default=6,
                        help="cap on cone depths and block counts")
    common.add_argument("--bound-length", type=int, default=8,
                        help="cap on word/tuple lengths and exponent bounds")
    common.add_argument("--bound-pieces", type=int, default=8,
                        help="cap on decomposition piece counts")
    common.add_argument("--strict-partition", action="store_true",
                        help="verify decompositions as exact covers")
    common.add_argument("--seed", type=int, default=0,
                        help="seed for sampled candidate families")

    parser = argparse.ArgumentParser(prog="paracon", description=__doc__)
    subparsers = parser.add_subparsers(dest="group")
    groups: dict[str, argparse.ArgumentParser] = {}
    for (group, sub), handler in COMMANDS.items():
        if sub is None:
            leaf = subparsers.add_parser(group, parents=[common])
            leaf.set_defaults(handler=handler, command=group)
            continue
        if group not in groups:
            groups[group] = subparsers.add_parser(group).add_subparsers(dest="subcommand")
        leaf = groups[group].add_parser(sub, parents=[common])
        leaf.set_defaults(handler=handler, command=f"{group} {sub}")
    return parser


def _emit(args, report: dict) -> None:
    text = json.dumps(report, sort_keys=True, indent=2) + "\n"
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = getattr(args, "handler", None)
    if handler is None:
        parser.print_help(sys.stderr)
        return 2

    started = time.monotonic()
    if args.input:
        with open(args.input, "rb") as handle:
            raw = handle.read()
    else:
        raw = sys.stdin.buffer.read()
    digest = "sha256:" + hashlib.sha256(raw).hexdigest()

    base = {"command": args.command, "input_digest": digest, "seed": args.seed}
    try:
        doc = json.loads(raw)
    except json.JSONDecodeError as err:
        report = dict(base, status="error",
                      error={"message": f"invalid JSON: {err.msg}",
                             "location": f"line {err.lineno} column {err.colno}"})
        _emit(args, report)
        return 2
    try:
        status, data, bounds = handler(args, doc)
    except DocumentError as err:
        report = dict(base, status="error",
                      error={"message": err.reason, "location": err.location})
        _emit(args, report)
        return 2
    except BoundExceeded as err:
        report = dict(base, status="bound-exceeded",
                      error={"message": str(err), "bound": err.name,
                             "requested": err.requested, "cap": err.cap})
        _emit(args, report)
        return 3

    report = dict(base, status=status, data=data, bounds=bounds)
    _emit(args, report)
    print(f"{args.command}: {time.monotonic() - started:.3f}s", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
