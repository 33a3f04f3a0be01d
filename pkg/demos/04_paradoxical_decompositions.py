"""Paradoxical decompositions: verify, construct, search, transfer.

A paradoxical decomposition doubles the space from disjoint pieces.  The
classical four-piece one for the free group is verified exactly; a
ping-pong chain is compiled into a decomposition with its telescoping
partition checked rather than assumed; exhaustive search recovers the
classical answer from tiny bounds; and a covering pattern turns the whole
phenomenon into a predicate on configuration sets that links back to
infeasibility of the equations.
"""

from paracon import (
    FreeSelfAction,
    ParadoxPattern,
    ParadoxicalDecomposition,
    PingPongChain,
    SymbolicSet,
    bounded_paradox_search,
    build_equations,
    chain_to_decomposition,
    compute_configurations,
    configuration_pair as pair,
    parse_word,
    pattern_check,
    solve_feasibility,
    verify_decomposition,
    word_str,
)

f2 = FreeSelfAction(2)
cone = lambda s: SymbolicSet.cone(parse_word(s), 2)
e = parse_word("e")

print("== the classical four-piece decomposition ==")
dec = ParadoxicalDecomposition(
    pieces_a=(cone("a"), cone("A")), translators_a=(e, parse_word("a")),
    pieces_b=(cone("b"), cone("B")), translators_b=(e, parse_word("b")))
report = verify_decomposition(f2, dec)
print("verifies with", report.piece_count, "pieces (4 is the least possible):", report.ok)

print()
print("== compiling a ping-pong chain ==")
chain = PingPongChain(
    (cone("a").complement().union(cone("ab")), cone("a")),
    (parse_word("abA"), parse_word("ab")))
result = chain_to_decomposition(f2, chain)
print("stage elements:", [word_str(s) for s in result.stage_elements])
print("piece bound n+2 =", result.piece_bound,
      "- verified:", verify_decomposition(f2, result.decomposition).ok)
print(result.note)

print()
print("== exhaustive bounded search ==")
found = bounded_paradox_search(f2, max_pieces=4, cone_depth=1, translator_length=1)
print("found a decomposition with pieces:",
      found.decomposition.piece_count if found.decomposition else None)
print("translators:", [word_str(t) for t in
                       found.decomposition.translators_a + found.decomposition.translators_b])

print()
print("== the same fact as a covering pattern ==")
blocks = [SymbolicSet.singleton(e, 2), cone("a"), cone("A"), cone("b"), cone("B")]
cs = compute_configurations(pair(f2, ["A", "B"], blocks))
pattern = ParadoxPattern(((0, 2), (1, 3)), ((0, 4), (2, 5)))
outcome = pattern_check(cs, pattern)
print("pattern holds on the configuration set:", outcome.holds)
print("derived decomposition verifies:",
      verify_decomposition(f2, outcome.decomposition).ok)
print("and the equations are infeasible:",
      not solve_feasibility(build_equations(cs)).feasible)
