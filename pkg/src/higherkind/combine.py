"""Functions needing more than one class, and instances built from instances."""
from __future__ import annotations

from typing import Any, Callable

from .core import Apply, FoldableMin, MonadMin, ProductTag

__all__ = ["fold_m", "cons_prod"]


def fold_m(foldable: FoldableMin, monad: MonadMin) -> Callable[[Callable, Any, Apply], Apply]:
    """Left-to-right monadic fold, ``foldM`` for a given Foldable and Monad.

    ``step(acc, x)`` returns the next accumulator inside the monad.  Each
    step is bound before the next element is looked at, so a failing step
    stops the fold.  The left fold is assembled from ``fold_right`` by
    stacking continuations.
    """
    return_, bind = monad.return_, monad.bind

    def run(step, init, container):
        def push(x, k):
            return lambda acc: bind(step(acc, x), k)

        return foldable.fold_right(push, return_, container)(init)

    return run


def cons_prod(f: MonadMin, g: MonadMin) -> MonadMin:
    """Product monad: computations are pairs ``(f-computation, g-computation)``."""

    def return_(a):
        return (f.return_(a), g.return_(a))

    def bind(m, k):
        mf, mg = m
        return (f.bind(mf, lambda a: k(a)[0]), g.bind(mg, lambda a: k(a)[1]))

    return MonadMin(tag=ProductTag(f.tag, g.tag), return_=return_, bind=bind)
