"""
Random walks on fibers of a presentation, with Gröbner basis binomials as moves.

A fiber is the set of nonnegative presentation vectors sharing one image.
Each step picks a basis element uniformly and a sign uniformly, adds
sign * (tail - lead) to the state and stays put if a coordinate turns
negative.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from pathlib import Path

from loguru import logger
import numpy as np
import polars as pl

from toricnest.algebra.ring import Exponents, Monomial
from toricnest.config import get_settings
from toricnest.exceptions import (
    CombinatorialLimitError,
    PreconditionError,
    RingMismatchError,
    VerificationFailure,
)
from toricnest.groebner.binomials import MarkedBasis
from toricnest.toric.configuration import Presentation


@dataclass(frozen=True, slots=True)
class FiberWalk:
    """Visited states, the start included, and how many proposals were taken."""

    presentation: Presentation
    states: tuple[Exponents, ...]
    accepted: int
    seed: int

    @property
    def steps(self) -> int:
        return len(self.states) - 1

    def visited(self) -> set[Exponents]:
        return set(self.states)


def move_matrix(basis: MarkedBasis) -> np.ndarray:
    """One row tail - lead per basis element."""
    n = len(basis.ring)
    if not len(basis):
        return np.zeros((0, n), dtype=np.int64)
    return np.array(
        [[b - a for a, b in zip(g.lead.exponents, g.tail.exponents, strict=True)] for g in basis],
        dtype=np.int64,
    )


def _start_vector(presentation: Presentation, start: Monomial | Sequence[int]) -> Exponents:
    if isinstance(start, Monomial):
        if start.ring != presentation.source:
            raise RingMismatchError("Start state is not over the presentation ring")
        return start.exponents
    state = tuple(int(v) for v in start)
    if len(state) != len(presentation.source):
        raise PreconditionError(
            f"Observed vector has {len(state)} entries, expected {len(presentation.source)}"
        )
    if any(v < 0 for v in state):
        raise PreconditionError(f"Observed vector has negative entries: {list(state)}")
    return state


def fiber_walk(
    presentation: Presentation,
    basis: MarkedBasis,
    start: Monomial | Sequence[int],
    *,
    steps: int | None = None,
    seed: int | None = None,
    check_fibers: bool | None = None,
) -> FiberWalk:
    """
    Walk `steps` proposals from `start`; the result holds steps + 1 states.

    Raises:
        PreconditionError: if the start vector, step count or seed is invalid
        VerificationFailure: if fiber checking (or debug mode) is on and a step leaves the fiber
    """
    settings = get_settings()
    walk_settings = settings.walk
    steps = walk_settings.default_steps if steps is None else steps
    seed = walk_settings.default_seed if seed is None else seed
    if check_fibers is None:
        check_fibers = walk_settings.check_fibers or settings.debug
    if steps < 0:
        raise PreconditionError(f"Step count must be nonnegative, got {steps}")
    if seed < 0:
        raise PreconditionError(f"Seed must be nonnegative, got {seed}")
    if basis.ring != presentation.source:
        raise RingMismatchError("Basis is not over the presentation ring")

    state = np.array(_start_vector(presentation, start), dtype=np.int64)
    target = presentation.image_exponents(tuple(state.tolist()))
    moves = move_matrix(basis)
    rng = np.random.default_rng(seed)

    states: list[Exponents] = [tuple(state.tolist())]
    accepted = 0
    for _ in range(steps):
        if len(moves):
            index = rng.integers(len(moves))
            sign = rng.choice((-1, 1))
            candidate = state + sign * moves[index]
            if (candidate >= 0).all():
                state = candidate
                accepted += 1
                if check_fibers and presentation.image_exponents(tuple(state.tolist())) != target:
                    raise VerificationFailure(f"Move {index} left the fiber of {target}")
        states.append(tuple(state.tolist()))

    logger.info(f"Fiber walk: {steps} steps, {accepted} accepted, {len(set(states))} distinct states")
    return FiberWalk(presentation, tuple(states), accepted, seed)


def enumerate_fiber(
    presentation: Presentation, state: Sequence[int], *, cap: int | None = None
) -> set[Exponents]:
    """
    Every nonnegative vector with the same image as `state`, by exhaustive search.

    Raises:
        CombinatorialLimitError: if more than `cap` vectors are found
    """
    cap = cap or get_settings().toric.enumeration_cap
    members = [m.exponents for m in presentation.configuration.members]
    target = presentation.image_exponents(tuple(state))
    found: set[Exponents] = set()
    counts = [0] * len(members)

    def search(k: int, remaining: list[int]) -> None:
        if k == len(members):
            if not any(remaining):
                found.add(tuple(counts))
                if len(found) > cap:
                    raise CombinatorialLimitError(f"Fiber has more than {cap} elements")
            return
        a = members[k]
        most = min((r // e for r, e in zip(remaining, a, strict=True) if e), default=0)
        for c in range(most, -1, -1):
            counts[k] = c
            search(k + 1, [r - c * e for r, e in zip(remaining, a, strict=True)])
        counts[k] = 0

    search(0, list(target))
    logger.debug(f"Fiber of {target}: {len(found)} elements")
    return found


def walk_frame(walk: FiberWalk) -> pl.DataFrame:
    """One row per visited state, a `step` column followed by one column per variable."""
    names = walk.presentation.source.variables
    data: dict[str, list[int]] = {"step": list(range(len(walk.states)))}
    for k, name in enumerate(names):
        data[name] = [s[k] for s in walk.states]
    return pl.DataFrame(data, schema={"step": pl.Int64, **{name: pl.Int64 for name in names}})


def write_walk(walk: FiberWalk, path: Path) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    walk_frame(walk).write_csv(path)
    logger.info(f"Wrote {len(walk.states)} states to {path}")
