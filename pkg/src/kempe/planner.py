"""Constructive recolouring planner.

Given two k-colourings of a graph in which every induced odd cycle has a
vertex of degree at most the local degree/clique threshold, and k strictly
above that threshold, the planner emits an explicit sequence of Kempe
changes from one colouring to the other.

The strategy is induction on the vertex count: delete a vertex v, plan on
the smaller graph, then lift the plan back. A lifted colouring may disagree
with the smaller graph's colouring on a controlled set of "bad" two-coloured
chains; the lift steps below repair or carry that error set. States are kept
*faithful*:

  C1  the full colouring, restricted to the small graph, differs from the
      reference exactly on the union of the bad chains, each fully
      colour-swapped, using only the pair's two colours there;
  C2  every bad chain contains a neighbour of v whose reference colour is
      ``a`` (hence whose full colour is ``b``).

With that orientation, full(v) = b is impossible (v touches a b-coloured
witness), and full(v) = a is the delicate configuration the case analysis
works around.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .colouring import (
    Colouring,
    KempeChain,
    apply_change,
    chain_violation,
    kempe_chain,
    missed_colours,
)
from .errors import (
    CliqueBoundViolationError,
    InputClassError,
    InternalLiftError,
    InvalidChainError,
    OddHoleViolationError,
    OpenCaseError,
    UnsupportedRegimeError,
)
from .graph import Graph, delete_vertex, iter_odd_holes, recolouring_threshold


@dataclass(frozen=True)
class RecolouringPlan:
    """An ordered list of Kempe changes from start to target; each step must
    be a valid chain in the colouring reached after the previous steps."""

    start: Colouring
    target: Colouring
    steps: tuple[KempeChain, ...]


@dataclass(frozen=True)
class FaithfulState:
    """A colouring of g tracked against a reference colouring of g minus
    ``vertex``, with the colour pair and the current bad chains (conditions
    C1/C2 in the module docstring). ``sub`` is the deleted-vertex graph with
    ids renumbered order-preservingly; ``bad`` chains live in sub ids."""

    vertex: int
    sub: Graph
    full: Colouring
    ref: Colouring
    pair: tuple[int, int]
    bad: tuple[KempeChain, ...]

    def check(self, g: Graph) -> None:
        v = self.vertex
        self.full.validate(g)
        self.ref.validate(self.sub)
        a, b = self.pair
        bad_union: set[int] = set()
        for chain in self.bad:
            if chain.pair != (min(a, b), max(a, b)):
                raise InternalLiftError(f"bad chain pair {chain.pair} is not {self.pair}")
            if chain_violation(self.sub, self.ref, chain) is not None:
                raise InternalLiftError("bad chain is not a chain of the reference")
            witnessed = False
            for u in chain.vertices:
                fu = _to_full_id(u, v)
                if self.full[fu] not in (a, b) or self.full[fu] == self.ref[u]:
                    raise InternalLiftError("bad chain vertex is not colour-swapped")
                if g.has_edge(v, fu) and self.ref[u] == a:
                    witnessed = True
                bad_union.add(u)
            if not witnessed:
                raise InternalLiftError("bad chain has no a-coloured neighbour of v")
        for u in range(self.sub.n):
            if u in bad_union:
                continue
            if self.full[_to_full_id(u, v)] != self.ref[u]:
                raise InternalLiftError(f"difference outside the bad chains at sub vertex {u}")
        if self.bad and self.full[v] == b:
            raise InternalLiftError("v holds the witness colour next to a witness")


def _to_full_id(u: int, v: int) -> int:
    return u + (u >= v)


def _to_sub_id(u: int, v: int) -> int:
    return u - (u > v)


def _chain_to_full(chain: KempeChain, v: int) -> KempeChain:
    return KempeChain(chain.a, chain.b, frozenset(_to_full_id(u, v) for u in chain.vertices))


def _chain_to_sub(chain: KempeChain, v: int) -> KempeChain:
    return KempeChain(chain.a, chain.b, frozenset(_to_sub_id(u, v) for u in chain.vertices))


def _restrict(c: Colouring, v: int) -> Colouring:
    return Colouring(c.k, tuple(col for u, col in enumerate(c.colours) if u != v))


def pick_vertex(g: Graph) -> int:
    """Deterministic choice for the induction: minimum degree, then smallest id."""
    if g.n == 0:
        raise ValueError("empty graph")
    return min(g.vertices(), key=lambda v: (g.degree(v), v))


# -- lifting one reference step ------------------------------------------


def lift_base(
    g: Graph, v: int, gamma: Colouring, chain_in_gprime: KempeChain
) -> tuple[FaithfulState, list[KempeChain]]:
    """Lift one reference step when the full colouring extends the reference.

    Performs exactly one Kempe change in g: the extension of the reference
    chain. If the extension avoids v the new state has no bad chains;
    otherwise the other components of (extension minus v) become bad.
    """
    sub, _ = delete_vertex(g, v)
    ref = _restrict(gamma, v)
    return _lift_base(g, v, sub, gamma, ref, chain_in_gprime)


def _lift_base(
    g: Graph,
    v: int,
    sub: Graph,
    gamma: Colouring,
    ref: Colouring,
    chain_sub: KempeChain,
) -> tuple[FaithfulState, list[KempeChain]]:
    problem = chain_violation(sub, ref, chain_sub)
    if problem is not None:
        raise InvalidChainError(f"reference chain invalid: {problem}")
    new_ref = apply_change(sub, ref, chain_sub)
    if chain_sub.is_degenerate:
        state = FaithfulState(v, sub, gamma, new_ref, (0, min(1, gamma.k - 1)), ())
        return state, []

    seed = _to_full_id(min(chain_sub.vertices), v)
    other = chain_sub.b if gamma[seed] == chain_sub.a else chain_sub.a
    extension = kempe_chain(g, gamma, seed, other)
    new_full = apply_change(g, gamma, extension)

    if v not in extension.vertices:
        # The reference chain was already maximal in g.
        if _chain_to_sub(extension, v).vertices != chain_sub.vertices:
            raise InternalLiftError("extension without v must equal the reference chain")
        state = FaithfulState(v, sub, new_full, new_ref, chain_sub.pair, ())
        return state, [extension]

    witness_full = extension.b if gamma[v] == extension.a else extension.a
    # Components of (extension minus v) are exactly the reference chains on
    # this pair that contain a neighbour of v coloured witness_full.
    from .graph import induced_components

    mask = 0
    for u in extension.vertices:
        if u != v:
            mask |= 1 << u
    pieces = []
    for comp in induced_components(g, mask):
        verts = frozenset(
            _to_sub_id(u, v) for u in range(g.n) if comp >> u & 1
        )
        pieces.append(KempeChain(extension.a, extension.b, verts))
    bad = tuple(p for p in pieces if p.vertices != chain_sub.vertices)
    if len(bad) != len(pieces) - 1:
        raise InternalLiftError("the performed reference chain must be one component")
    # After the swap v holds witness_full; witnesses keep it in the reference.
    pair = (witness_full, gamma[v])
    state = FaithfulState(v, sub, new_full, new_ref, pair, bad)
    state.check(g)
    return state, [extension]


def lift_step(
    g: Graph, v: int, state: FaithfulState, next_chain: KempeChain
) -> tuple[FaithfulState, list[KempeChain]]:
    """Advance a faithful state across one reference step, emitting the Kempe
    changes performed on g (possibly several)."""
    problem = chain_violation(state.sub, state.ref, next_chain)
    if problem is not None:
        raise InvalidChainError(f"reference chain invalid: {problem}")
    if not state.bad:
        return _lift_base(g, v, state.sub, state.full, state.ref, next_chain)

    a, b = state.pair
    full = state.full

    if full[v] != a:
        return _perform_bad_then_base(g, v, state, next_chain)

    if not next_chain.is_degenerate and not {next_chain.a, next_chain.b} & {a, b}:
        # The step's colours avoid the pair entirely: it is a chain of g and
        # cannot touch the bad chains, so the error set rides along.
        full_chain = _chain_to_full(next_chain, v)
        new_full = apply_change(g, full, full_chain)
        new_ref = apply_change(state.sub, state.ref, next_chain)
        new_state = FaithfulState(v, state.sub, new_full, new_ref, state.pair, state.bad)
        new_state.check(g)
        return new_state, [full_chain]

    missed = sorted(missed_colours(g, full, v))
    if missed:
        c = missed[0]
        move = KempeChain(full[v], c, frozenset([v]))
        new_full = apply_change(g, full, move)
        interim = FaithfulState(v, state.sub, new_full, state.ref, state.pair, state.bad)
        interim.check(g)
        follow, steps = _perform_bad_then_base(g, v, interim, next_chain)
        return follow, [move] + steps

    witness_neighbours = [u for u in g.neighbours(v) if full[u] == b]
    if not witness_neighbours:
        raise InternalLiftError("faithful state lost its witnesses")

    if len(witness_neighbours) == 1:
        # Exactly one bad chain; its extension through v repairs everything.
        if len(state.bad) != 1:
            raise InternalLiftError("unique witness but multiple bad chains")
        (bad_chain,) = state.bad
        extension = kempe_chain(g, full, v, b)
        expected = {_to_full_id(u, v) for u in bad_chain.vertices} | {v}
        if set(extension.vertices) != expected:
            raise InternalLiftError("extension of the unique bad chain is not as expected")
        new_full = apply_change(g, full, extension)
        follow, steps = _lift_base(g, v, state.sub, new_full, state.ref, next_chain)
        return follow, [extension] + steps

    return _two_witness_case(g, v, state, next_chain)


def _perform_bad_then_base(
    g: Graph, v: int, state: FaithfulState, next_chain: KempeChain
) -> tuple[FaithfulState, list[KempeChain]]:
    # full(v) is outside the pair, so each bad chain is a chain of g.
    full = state.full
    steps = []
    for chain in state.bad:
        full_chain = _chain_to_full(chain, v)
        full = apply_change(g, full, full_chain)
        steps.append(full_chain)
    follow, base_steps = _lift_base(g, v, state.sub, full, state.ref, next_chain)
    return follow, steps + base_steps


def _two_witness_case(
    g: Graph, v: int, state: FaithfulState, next_chain: KempeChain
) -> tuple[FaithfulState, list[KempeChain]]:
    """full(v) = a, no missed colour, at least two witness neighbours.

    Free v by one remote Kempe change: among neighbours whose colour is
    unique in N(v) and not problematic, some two are non-adjacent (else they
    would form too large a clique with v); swapping the chain through one of
    them frees that colour for v.
    """
    a, b = state.pair
    full = state.full

    colour_count: dict[int, int] = {}
    for u in g.neighbours(v):
        colour_count[full[u]] = colour_count.get(full[u], 0) + 1
    unique = [u for u in g.neighbours(v) if colour_count[full[u]] == 1]
    problematic = {a, b, next_chain.a, next_chain.b}
    t_set = sorted(u for u in unique if full[u] not in problematic)

    u_pick: Optional[int] = None
    w_pick: Optional[int] = None
    for cand in t_set:
        non_nbrs = [w for w in t_set if w != cand and not g.has_edge(cand, w)]
        if non_nbrs:
            u_pick, w_pick = cand, min(non_nbrs)
            break
    if u_pick is None:
        raise CliqueBoundViolationError(
            "candidate set induces a clique; colour budget below the supported threshold"
        )

    c_u, c_w = full[u_pick], full[w_pick]
    remote = kempe_chain(g, full, u_pick, c_w)
    if w_pick in remote.vertices:
        raise OddHoleViolationError(
            "remote chain reached both picked neighbours; the input has an"
            " induced odd cycle violating the planner's graph-class precondition"
        )
    steps = [remote]
    full = apply_change(g, full, remote)

    if c_u not in missed_colours(g, full, v):
        raise InternalLiftError("vertex still sees the freed colour")
    move = KempeChain(a, c_u, frozenset([v]))
    steps.append(move)
    full = apply_change(g, full, move)

    for chain in state.bad:
        full_chain = _chain_to_full(chain, v)
        full = apply_change(g, full, full_chain)
        steps.append(full_chain)

    new_bad = KempeChain(c_u, c_w, frozenset(_to_sub_id(x, v) for x in remote.vertices))
    interim = FaithfulState(v, state.sub, full, state.ref, (c_u, c_w), (new_bad,))
    interim.check(g)

    # The step's colours avoid {c_u, c_w}, so it applies directly.
    full_chain = _chain_to_full(next_chain, v)
    full = apply_change(g, full, full_chain)
    steps.append(full_chain)
    new_ref = apply_change(state.sub, state.ref, next_chain)
    new_state = FaithfulState(v, state.sub, full, new_ref, (c_u, c_w), (new_bad,))
    new_state.check(g)
    return new_state, steps


def finalize(
    g: Graph,
    v: int,
    state: FaithfulState,
    target_on_gprime: Colouring,
    target_colour_of_v: int,
) -> list[KempeChain]:
    """Close out a faithful state whose reference already equals the target
    restriction: undo the bad chains, then recolour v if needed.

    When v blocks the bad chains, the chain of g through v repairs them all
    at once whenever its restriction is exactly their union. Otherwise v is
    parked on a missed colour first; if it misses none, one remote chain
    swap (as in the two-witness lift case) frees a colour, and the colour v
    vacates becomes missed on the following round, so the loop ends after at
    most two such rounds.
    """
    if state.ref != target_on_gprime:
        raise ValueError("state reference does not match the target restriction")
    sub = state.sub
    ref = state.ref
    full = state.full
    pair = state.pair
    bad = state.bad
    steps: list[KempeChain] = []

    def emit(chain: KempeChain) -> None:
        nonlocal full
        full = apply_change(g, full, chain)
        steps.append(chain)

    rounds = 0
    while bad:
        rounds += 1
        if rounds > 4:
            raise InternalLiftError("finalize failed to converge")
        a, b = pair
        if full[v] not in (a, b):
            for chain in bad:
                emit(_chain_to_full(chain, v))
            bad = ()
            break
        if full[v] == b:
            raise InternalLiftError("v holds the witness colour next to a witness")

        combined = kempe_chain(g, full, v, b)
        expected = {v}
        for chain in bad:
            expected |= {_to_full_id(u, v) for u in chain.vertices}
        if set(combined.vertices) == expected:
            emit(combined)
            bad = ()
            break

        missed = sorted(missed_colours(g, full, v))
        if missed:
            emit(KempeChain(a, missed[0], frozenset([v])))
            continue

        # No missed colour and several witness-coloured contacts: free one
        # colour remotely exactly as in the two-witness lift case.
        colour_count: dict[int, int] = {}
        for u in g.neighbours(v):
            colour_count[full[u]] = colour_count.get(full[u], 0) + 1
        t_set = sorted(
            u
            for u in g.neighbours(v)
            if colour_count[full[u]] == 1 and full[u] not in (a, b)
        )
        u_pick = w_pick = None
        for cand in t_set:
            non_nbrs = [w for w in t_set if w != cand and not g.has_edge(cand, w)]
            if non_nbrs:
                u_pick, w_pick = cand, min(non_nbrs)
                break
        if u_pick is None:
            raise CliqueBoundViolationError(
                "candidate set induces a clique; colour budget below the"
                " supported threshold"
            )
        c_u, c_w = full[u_pick], full[w_pick]
        remote = kempe_chain(g, full, u_pick, c_w)
        if w_pick in remote.vertices:
            raise OddHoleViolationError(
                "remote chain reached both picked neighbours; the input has an"
                " induced odd cycle violating the planner's graph-class"
                " precondition"
            )
        emit(remote)
        if c_u not in missed_colours(g, full, v):
            raise InternalLiftError("vertex still sees the freed colour")
        emit(KempeChain(a, c_u, frozenset([v])))
        for chain in bad:
            emit(_chain_to_full(chain, v))
        pair = (c_u, c_w)
        bad = (KempeChain(c_u, c_w, frozenset(_to_sub_id(x, v) for x in remote.vertices)),)
        FaithfulState(v, sub, full, ref, pair, bad).check(g)

    if full[v] != target_colour_of_v:
        # The target is proper, so once the rest matches it, v misses its
        # target colour.
        if target_colour_of_v not in missed_colours(g, full, v):
            raise InternalLiftError("target colour of v not missed after the merge")
        emit(KempeChain(full[v], target_colour_of_v, frozenset([v])))
    for u in range(sub.n):
        if full[_to_full_id(u, v)] != target_on_gprime[u]:
            raise InternalLiftError("finalize failed to reach the target restriction")
    return steps


# -- low-degree lift -----------------------------------------------------


def low_degree_lift(
    g: Graph,
    v: int,
    plan_on_gprime: RecolouringPlan,
    alpha: Colouring,
    beta: Colouring,
) -> RecolouringPlan:
    """Lift a plan on g minus v when deg(v) < k.

    A step's chain is blocked only when v holds one of its colours and is
    adjacent to the chain. Then either v misses a colour outside the pair
    and can step aside, or v misses nothing: with deg(v) < k that forces all
    neighbour colours distinct, so v has exactly one opposite-coloured
    neighbour, that neighbour lies in the blocked chain, and performing the
    merged chain (v plus the step's chain) advances the reference instead.
    """
    k = alpha.k
    if g.degree(v) >= k:
        raise ValueError("low-degree lift needs deg(v) < k")
    current = alpha
    steps: list[KempeChain] = []

    def emit(chain: KempeChain) -> None:
        nonlocal current
        current = apply_change(g, current, chain)
        steps.append(chain)

    for chain in plan_on_gprime.steps:
        full_chain = _chain_to_full(chain, v)
        if chain_violation(g, current, full_chain) is None:
            emit(full_chain)
            continue
        missed = sorted(missed_colours(g, current, v) - {chain.a, chain.b})
        if missed:
            # Park v outside the pair; the chain is then maximal in g.
            emit(KempeChain(current[v], missed[0], frozenset([v])))
            if chain_violation(g, current, full_chain) is not None:
                raise InternalLiftError("chain still invalid after parking v")
            emit(full_chain)
            continue
        merged = KempeChain(chain.a, chain.b, full_chain.vertices | frozenset([v]))
        if chain_violation(g, current, merged) is not None:
            raise InternalLiftError("blocked chain did not merge with v alone")
        emit(merged)

    if current[v] != beta[v]:
        if beta[v] not in missed_colours(g, current, v):
            raise InternalLiftError("target colour of v not missed at the end of the lift")
        emit(KempeChain(current[v], beta[v], frozenset([v])))
    if current != beta:
        raise InternalLiftError("low-degree lift did not reach the target")
    return RecolouringPlan(alpha, beta, tuple(steps))


# -- the planner ----------------------------------------------------------


def plan_recolouring(
    g: Graph,
    alpha: Colouring,
    beta: Colouring,
    check_preconditions: bool = True,
) -> RecolouringPlan:
    """Plan a Kempe-change sequence from alpha to beta.

    Requires alpha.k == beta.k == k with k strictly above the graph's
    degree/clique threshold; k equal to the threshold is refused with a
    distinct error since connectivity is unknown in that regime. With
    ``check_preconditions`` every induced odd cycle is required to contain a
    vertex of degree at most the threshold (exhaustive search, desk scale).
    """
    alpha.validate(g)
    beta.validate(g)
    if alpha.k != beta.k:
        raise ValueError(f"colour counts differ: {alpha.k} vs {beta.k}")
    k = alpha.k
    if g.n == 0:
        return RecolouringPlan(alpha, beta, ())
    threshold = recolouring_threshold(g)
    if k == threshold:
        raise OpenCaseError(
            f"k = {k} equals the threshold; connectivity in this regime is unknown"
        )
    if k < threshold:
        raise UnsupportedRegimeError(f"k = {k} below the threshold {threshold}")
    if check_preconditions:
        for hole in iter_odd_holes(g):
            if all(g.degree(u) > threshold for u in hole.cycle):
                raise InputClassError(
                    f"odd hole {hole.cycle} has no vertex of degree <= {threshold}"
                )
    plan = _plan(g, alpha, beta, k)
    problem = check_plan(g, plan)
    if problem is not None:
        raise InternalLiftError(f"emitted plan failed replay: {problem}")
    return plan


def _plan(g: Graph, alpha: Colouring, beta: Colouring, k: int) -> RecolouringPlan:
    if g.n == 0:
        return RecolouringPlan(alpha, beta, ())
    if g.n == 1:
        steps: tuple[KempeChain, ...] = ()
        if alpha[0] != beta[0]:
            steps = (KempeChain(alpha[0], beta[0], frozenset([0])),)
        return RecolouringPlan(alpha, beta, steps)

    hole = next(iter_odd_holes(g), None)
    if hole is not None:
        v = min(hole.cycle, key=lambda u: (g.degree(u), u))
        if g.degree(v) >= k:
            raise InputClassError(
                f"odd hole {hole.cycle} has minimum degree {g.degree(v)} >= k = {k}"
            )
        sub, _ = delete_vertex(g, v)
        subplan = _plan(sub, _restrict(alpha, v), _restrict(beta, v), k)
        return low_degree_lift(g, v, subplan, alpha, beta)

    v = pick_vertex(g)
    sub, _ = delete_vertex(g, v)
    ref_start = _restrict(alpha, v)
    ref_target = _restrict(beta, v)
    subplan = _plan(sub, ref_start, ref_target, k)

    state = FaithfulState(v, sub, alpha, ref_start, (0, min(1, k - 1)), ())
    steps: list[KempeChain] = []
    for chain in subplan.steps:
        state, new_steps = lift_step(g, v, state, chain)
        steps.extend(new_steps)
    steps.extend(finalize(g, v, state, ref_target, beta[v]))
    # Runaway guard: each reference step lifts to at most n+2 changes, and
    # the merge adds at most as much again.
    if len(steps) > (len(subplan.steps) + 2) * (g.n + 2):
        raise InternalLiftError("lifted plan grew past the per-level bound")
    return RecolouringPlan(alpha, beta, tuple(steps))


# -- plan verification -----------------------------------------------------


def check_plan(g: Graph, plan: RecolouringPlan) -> str | None:
    """Replay the plan; None if it is valid and reaches the target, else a
    diagnostic naming the first failing step."""
    try:
        plan.start.validate(g)
        plan.target.validate(g)
    except ValueError as exc:
        return f"endpoint colouring invalid: {exc}"
    current = plan.start
    for idx, chain in enumerate(plan.steps):
        problem = chain_violation(g, current, chain)
        if problem is not None:
            return f"step {idx}: {problem}"
        current = apply_change(g, current, chain)
        if not current.is_proper(g):
            return f"step {idx}: result not proper"
    if current != plan.target:
        return "final colouring does not equal the target"
    return None


def verify_plan(g: Graph, plan: RecolouringPlan) -> bool:
    """True iff the plan replays cleanly from start to target."""
    return check_plan(g, plan) is None
