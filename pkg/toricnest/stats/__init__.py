"""Fiber random walks driven by Gröbner basis moves."""

from toricnest.stats.fiber_walk import (
    FiberWalk,
    enumerate_fiber,
    fiber_walk,
    move_matrix,
    walk_frame,
    write_walk,
)

__all__ = [
    "FiberWalk",
    "enumerate_fiber",
    "fiber_walk",
    "move_matrix",
    "walk_frame",
    "write_walk",
]
