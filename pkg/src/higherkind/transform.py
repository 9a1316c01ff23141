"""Monad transformers: functions from a base MonadMin to a new MonadMin.

Stacks are built by nesting calls, e.g. ``state_t(except_t(identity_monad_min(), str), int)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable

from .core import Apply, Err, ExceptTTag, MonadMin, Ok, StateTTag
from .elaborate import UNIT

__all__ = [
    "TransformedMonadMin", "StateTMonadMin", "ExceptTMonadMin", "state_t", "except_t",
]


@dataclass(frozen=True, kw_only=True)
class TransformedMonadMin(MonadMin):
    """A MonadMin for ``T(M)`` that remembers ``M`` and can lift into it."""

    base: MonadMin
    lift: Callable[[Apply], Apply]


@dataclass(frozen=True, kw_only=True)
class StateTMonadMin(TransformedMonadMin):
    get: Apply
    put: Callable[[Any], Apply]
    modify: Callable[[Callable[[Any], Any]], Apply]


@dataclass(frozen=True, kw_only=True)
class ExceptTMonadMin(TransformedMonadMin):
    throw: Callable[[Any], Apply]
    catch: Callable[[Apply, Callable[[Any], Apply]], Apply]


def state_t(base: MonadMin, state_type: Any = object) -> StateTMonadMin:
    """Thread a state of ``state_type`` through ``base``.

    A computation is a function ``s -> base[(a, s)]``; run it by calling it
    with the initial state.
    """
    b_return, b_bind = base.return_, base.bind

    def return_(a):
        return lambda s: b_return((a, s))

    def bind(m, k):
        return lambda s: b_bind(m(s), lambda pair: k(pair[0])(pair[1]))

    def lift(m):
        return lambda s: b_bind(m, lambda a: b_return((a, s)))

    def get(s):
        return b_return((s, s))

    def put(new):
        return lambda _: b_return((UNIT, new))

    def modify(f):
        return lambda s: b_return((UNIT, f(s)))

    return StateTMonadMin(tag=StateTTag(state_type, base.tag), return_=return_, bind=bind,
                          base=base, lift=lift, get=get, put=put, modify=modify)


def except_t(base: MonadMin, error_type: Any = object) -> ExceptTMonadMin:
    """Add short-circuiting errors of ``error_type`` on top of ``base``.

    A computation is ``base[Ok(a) | Err(e)]``.
    """
    b_return, b_bind = base.return_, base.bind

    def return_(a):
        return b_return(Ok(a))

    def bind(m, k):
        return b_bind(m, lambda r: k(r.value) if isinstance(r, Ok) else b_return(r))

    def lift(m):
        return b_bind(m, lambda a: b_return(Ok(a)))

    def throw(e):
        return b_return(Err(e))

    def catch(m, handler):
        return b_bind(m, lambda r: handler(r.error) if isinstance(r, Err) else b_return(r))

    return ExceptTMonadMin(tag=ExceptTTag(error_type, base.tag), return_=return_, bind=bind,
                           base=base, lift=lift, throw=throw, catch=catch)
