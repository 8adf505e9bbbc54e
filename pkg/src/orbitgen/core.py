"""Generic engine for coupled dynamical systems.

A system couples a base dynamic (a step map with a weak attractor — a set
every orbit eventually enters) to an output dynamic through a seed map:
the generated value at ``t`` is the output step applied depth-many times
to the seed of the first attractor state on t's orbit.

States are plain hashable values: unsigned integers, pairs of unsigned
integers, or finite-field elements.  The engine only ever compares, hashes
and passes them to the system's own functions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Sequence, Union

from .errors import DepthExceeded, DomainNotClosed, HypothesisViolated
from .finfield import FieldElement

State = Union[int, tuple[int, int], FieldElement]
OutputValue = int

DEFAULT_MAX_DEPTH = 100_000

__all__ = [
    "State",
    "OutputValue",
    "CoupledSystem",
    "OrbitTrace",
    "DEFAULT_MAX_DEPTH",
    "delta",
    "evaluate",
    "evaluate_recursive",
    "evaluate_range",
    "minimal_orbits",
    "is_weak_attractor",
    "dynamics_from_depth",
]


@dataclass(frozen=True)
class CoupledSystem:
    """A base dynamic, its attractor, and the coupled output dynamic.

    ``seed`` must be defined on every state accepted by ``in_attractor``;
    ``step`` must stay within the state carrier.  ``max_depth`` caps the
    attractor search — some catalog systems only provably terminate under
    open conjectures, so an unbounded search is never run.
    """

    step: Callable[[State], State]
    in_attractor: Callable[[State], bool]
    out_step: Callable[[OutputValue], OutputValue]
    seed: Callable[[State], OutputValue]
    max_depth: int = DEFAULT_MAX_DEPTH


@dataclass(frozen=True)
class OrbitTrace:
    """Witness of one attractor search: the orbit prefix ending at the hit.

    ``visited`` lists the depth+1 states from ``start`` to ``first_hit``;
    only the final one lies in the attractor.
    """

    start: State
    depth: int
    first_hit: State
    visited: tuple[State, ...]


def delta(sys: CoupledSystem, t: State) -> OrbitTrace:
    """Walk t's orbit to the first attractor state.

    Iterative on purpose: catalog depths exceed recursion limits.  Raises
    DepthExceeded after max_depth steps without a hit.
    """
    visited = [t]
    cur = t
    while not sys.in_attractor(cur):
        if len(visited) - 1 >= sys.max_depth:
            raise DepthExceeded(t, sys.max_depth, cur)
        cur = sys.step(cur)
        visited.append(cur)
    return OrbitTrace(start=t, depth=len(visited) - 1, first_hit=cur,
                      visited=tuple(visited))


def evaluate(sys: CoupledSystem, t: State) -> OutputValue:
    """Generated value at t: out_step applied depth times to seed(first hit)."""
    trace = delta(sys, t)
    y = sys.seed(trace.first_hit)
    for _ in range(trace.depth):
        y = sys.out_step(y)
    return y


def evaluate_recursive(sys: CoupledSystem, t: State) -> OutputValue:
    """Generated value at t by the defining recursion.

    seed(t) on the attractor, else out_step of the value one step ahead.
    Runs on an explicit work stack (never the call stack) and serves as
    the independent oracle for :func:`evaluate`.
    """
    pending = 0
    cur = t
    while not sys.in_attractor(cur):
        if pending >= sys.max_depth:
            raise DepthExceeded(t, sys.max_depth, cur)
        pending += 1
        cur = sys.step(cur)
    y = sys.seed(cur)
    while pending:
        y = sys.out_step(y)
        pending -= 1
    return y


def evaluate_range(sys: CoupledSystem, states: Iterable[State],
                   memoize: bool = True) -> list[OutputValue]:
    """Element-wise evaluate, in input order.

    With ``memoize`` (the default) values and depths are cached across the
    batch, so orbits sharing a suffix are walked once.  The cache is local
    to the call and transparent: results, including DepthExceeded on any
    over-deep state, are identical to per-element evaluation.
    """
    if not memoize:
        return [evaluate(sys, t) for t in states]
    cache: dict[State, tuple[OutputValue, int]] = {}
    out = []
    for t in states:
        out.append(_evaluate_memo(sys, t, cache))
    return out


def _evaluate_memo(sys, t, cache):
    path = []
    cur = t
    while True:
        hit = cache.get(cur)
        if hit is not None:
            y, depth = hit
            break
        if sys.in_attractor(cur):
            y, depth = sys.seed(cur), 0
            cache[cur] = (y, 0)
            break
        if len(path) >= sys.max_depth:
            raise DepthExceeded(t, sys.max_depth, cur)
        path.append(cur)
        cur = sys.step(cur)
    for s in reversed(path):
        y = sys.out_step(y)
        depth += 1
        if depth > sys.max_depth:
            # per-element evaluation would not have reached the attractor
            raise DepthExceeded(t, sys.max_depth)
        cache[s] = (y, depth)
    return y


# ---------------------------------------------------------------------------
# Finite-system structure
# ---------------------------------------------------------------------------

def minimal_orbits(step: Callable[[State], State],
                   domain: Sequence[State]) -> list[tuple[State, ...]]:
    """All cycles of a finite dynamical system, each exactly once.

    The domain must be closed under step (DomainNotClosed otherwise).
    Each cycle is rotated to start at its earliest element in domain
    order, and cycles are sorted by that element's position.
    """
    index = {s: i for i, s in enumerate(domain)}
    seen: set[State] = set()
    cycles: list[tuple[State, ...]] = []
    for start in domain:
        if start in seen:
            continue
        path: list[State] = []
        pos: dict[State, int] = {}
        cur = start
        while cur not in seen and cur not in pos:
            pos[cur] = len(path)
            path.append(cur)
            nxt = step(cur)
            if nxt not in index:
                raise DomainNotClosed(cur, nxt)
            cur = nxt
        if cur not in seen:
            cyc = path[pos[cur]:]
            head = min(range(len(cyc)), key=lambda i: index[cyc[i]])
            cycles.append(tuple(cyc[head:] + cyc[:head]))
        seen.update(path)
    cycles.sort(key=lambda c: index[c[0]])
    return cycles


def is_weak_attractor(step: Callable[[State], State],
                      domain: Sequence[State],
                      omega: Callable[[State], bool]) -> bool:
    """Whether omega meets every cycle of the finite system (so every
    orbit eventually enters it)."""
    return all(any(omega(s) for s in cycle)
               for cycle in minimal_orbits(step, domain))


def dynamics_from_depth(eps: Callable[[State], int],
                        domain: Sequence[State],
                        ) -> tuple[dict[State, State], set[State]]:
    """Build a dynamic whose depth function is exactly ``eps``.

    Requires eps to assume every value in {0, ..., eps(t)} somewhere on
    the domain (HypothesisViolated otherwise).  The returned step map
    sends each state of positive depth to the first domain element one
    level shallower, and fixes the zero set, which is the attractor.
    """
    if not domain:
        raise HypothesisViolated("empty domain")
    first_at: dict[int, State] = {}
    values = {}
    for t in domain:
        e = eps(t)
        if e < 0:
            raise HypothesisViolated(f"eps({t!r}) = {e} is negative")
        values[t] = e
        first_at.setdefault(e, t)
    top = max(values.values())
    missing = [j for j in range(top + 1) if j not in first_at]
    if missing:
        raise HypothesisViolated(
            f"eps never takes value(s) {missing} below its maximum {top}")
    g = {t: (t if e == 0 else first_at[e - 1]) for t, e in values.items()}
    omega = {t for t, e in values.items() if e == 0}
    return g, omega
