"""Concrete minimal bundles for the standard constructors.

Each ``*_min`` function hand-writes the smallest definition; the matching
un-suffixed helper (``list_monad`` ...) is the elaborated full bundle.

Representations:

==========  ====================================
list        ``list``
option      ``Some(x)`` / ``NOTHING``
either      ``Ok(x)`` / ``Err(e)``
identity    the bare value
reader      ``env -> a``
writer      ``(a, w)``
state       ``s -> (a, s)``
==========  ====================================
"""
from __future__ import annotations

from typing import Any

from .alt import Monad0p, Monad0pMin, mk_monad0p
from .core import (
    NOTHING, ApplicativeMin, Err, FoldableMin, FunctorMin, IdentityTag, JoinMin,
    ListTag, Monad, MonadMin, MonoidMin, Ok, OptionTag, Some, EitherTag,
    ReaderTag, StateTag, WriterTag,
)
from .elaborate import UNIT, mk_monad, mona_min_to_app_min

# list

def list_monad_min() -> MonadMin:
    def return_(x):
        return [x]

    def bind(seq, func):
        return [y for x in seq for y in func(x)]

    return MonadMin(tag=ListTag, return_=return_, bind=bind)


def list_monad() -> Monad:
    return mk_monad(list_monad_min())


def list_functor_min() -> FunctorMin:
    return FunctorMin(tag=ListTag, fmap=lambda f, xs: [f(x) for x in xs])


def list_applicative_min() -> ApplicativeMin:
    """Cartesian-product applicative, the one the list monad induces."""
    return mona_min_to_app_min(list_monad_min())


def list_zip_applicative_min() -> ApplicativeMin:
    """Pairwise applicative, truncating to the shorter list.

    ``pure`` is a singleton: a strict language cannot build the infinite
    repetition a lawful zip ``pure`` needs, so the identity law only holds
    for lists of length <= 1.
    """
    return ApplicativeMin(
        tag=ListTag,
        pure=lambda x: [x],
        apply=lambda fs, xs: [f(x) for f, x in zip(fs, xs)],
    )


def list_join_min() -> JoinMin:
    return JoinMin(
        tag=ListTag,
        return_=lambda x: [x],
        fmap=lambda f, xs: [f(x) for x in xs],
        join=lambda xss: [x for xs in xss for x in xs],
    )


def list_foldable_min() -> FoldableMin:
    def fold_right(f, z, xs):
        acc = z
        for x in reversed(xs):
            acc = f(x, acc)
        return acc

    return FoldableMin(tag=ListTag, fold_right=fold_right)


def list_monoid() -> MonoidMin:
    return MonoidMin(mempty=[], mappend=lambda a, b: a + b)


def list_monad0p_min() -> Monad0pMin:
    base = list_monad_min()
    return Monad0pMin(tag=ListTag, return_=base.return_, bind=base.bind,
                      zero=[], plus=lambda a, b: a + b)


def list_monad0p() -> Monad0p:
    return mk_monad0p(list_monad0p_min())


# option

def option_monad_min() -> MonadMin:
    def bind(m, k):
        return k(m.value) if isinstance(m, Some) else NOTHING

    return MonadMin(tag=OptionTag, return_=Some, bind=bind)


def option_monad() -> Monad:
    return mk_monad(option_monad_min())


def option_functor_min() -> FunctorMin:
    return FunctorMin(tag=OptionTag,
                      fmap=lambda f, m: Some(f(m.value)) if isinstance(m, Some) else NOTHING)


def option_applicative_min() -> ApplicativeMin:
    return mona_min_to_app_min(option_monad_min())


def option_join_min() -> JoinMin:
    return JoinMin(
        tag=OptionTag,
        return_=Some,
        fmap=option_functor_min().fmap,
        join=lambda n: n.value if isinstance(n, Some) else NOTHING,
    )


def option_monad0p_min() -> Monad0pMin:
    base = option_monad_min()
    return Monad0pMin(tag=OptionTag, return_=base.return_, bind=base.bind,
                      zero=NOTHING, plus=lambda a, b: a if isinstance(a, Some) else b)


def option_monad0p() -> Monad0p:
    return mk_monad0p(option_monad0p_min())


# either

def either_monad_min(error_type: Any = object) -> MonadMin:
    def bind(m, k):
        return k(m.value) if isinstance(m, Ok) else m

    return MonadMin(tag=EitherTag(error_type), return_=Ok, bind=bind)


# identity

def identity_monad_min() -> MonadMin:
    return MonadMin(tag=IdentityTag, return_=lambda x: x, bind=lambda m, k: k(m))


def identity_join_min() -> JoinMin:
    return JoinMin(tag=IdentityTag, return_=lambda x: x,
                   fmap=lambda f, m: f(m), join=lambda n: n)


# reader

def reader_monad_min(env_type: Any = object) -> MonadMin:
    def return_(x):
        return lambda env: x

    def bind(m, k):
        return lambda env: k(m(env))(env)

    return MonadMin(tag=ReaderTag(env_type), return_=return_, bind=bind)


def ask(env: Any) -> Any:
    """The reader computation yielding its environment."""
    return env


# writer

def writer_monad_min(monoid: MonoidMin) -> MonadMin:
    mempty, mappend = monoid.mempty, monoid.mappend

    def return_(x):
        return (x, mempty)

    def bind(m, k):
        a, w1 = m
        b, w2 = k(a)
        return (b, mappend(w1, w2))

    return MonadMin(tag=WriterTag(type(mempty)), return_=return_, bind=bind)


def tell(w: Any) -> tuple:
    return (UNIT, w)


# state

def state_monad_min(state_type: Any = object) -> MonadMin:
    def return_(x):
        return lambda s: (x, s)

    def bind(m, k):
        def run(s):
            a, s1 = m(s)
            return k(a)(s1)
        return run

    return MonadMin(tag=StateTag(state_type), return_=return_, bind=bind)


def state_get(s: Any) -> tuple:
    """The state computation yielding the current state."""
    return (s, s)


def state_put(new: Any):
    return lambda _: (UNIT, new)


def state_modify(f):
    return lambda s: (UNIT, f(s))
