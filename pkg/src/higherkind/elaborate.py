"""Elaboration of minimal bundles into full ones, and superclass derivation.

``mk_*`` turn a minimal bundle into the full class.  The ``*_to_*`` helpers go
the other way round the hierarchy: they build a superclass's *minimal* bundle
out of a subclass's, which is what lets ``mk_monad`` instantiate Applicative
and Functor for free.
"""
from __future__ import annotations

from typing import Any, Callable

from .core import (
    Applicative, ApplicativeMin, Functor, FunctorMin, JoinMin, Monad, MonadMin,
)

__all__ = [
    "mk_functor", "mk_applicative", "mk_monad",
    "app_min_to_fun_min", "mona_min_to_app_min",
    "join_min_to_monad_min", "monad_min_to_join_min",
]

UNIT = ()


def _identity(x: Any) -> Any:
    return x


def _cons_to_list(cell: Any) -> list:
    # cells are (head, tail) pairs built newest-first
    out = []
    while cell is not None:
        head, cell = cell
        out.append(head)
    out.reverse()
    return out


def mk_functor(min: FunctorMin) -> Functor:
    fmap = min.fmap

    def replace_left(value, m):
        return fmap(lambda _: value, m)

    def replace_right(m, value):
        return fmap(lambda _: value, m)

    def void(m):
        return fmap(lambda _: UNIT, m)

    return Functor(tag=min.tag, fmap=fmap, replace_left=replace_left,
                   replace_right=replace_right, void=void)


def app_min_to_fun_min(min: ApplicativeMin) -> FunctorMin:
    pure, apply = min.pure, min.apply

    def fmap(f, m):
        return apply(pure(f), m)

    return FunctorMin(tag=min.tag, fmap=fmap)


def mk_applicative(min: ApplicativeMin) -> Applicative:
    functor = mk_functor(app_min_to_fun_min(min))
    fmap, pure, apply = functor.fmap, min.pure, min.apply

    def lift_a2(f, x, y):
        return apply(fmap(lambda a: lambda b: f(a, b), x), y)

    def lift_a3(f, x, y, z):
        return apply(apply(fmap(lambda a: lambda b: lambda c: f(a, b, c), x), y), z)

    def seq_right(x, y):
        return lift_a2(lambda _, b: b, x, y)

    def seq_left(x, y):
        return lift_a2(lambda a, _: a, x, y)

    return Applicative(
        tag=min.tag, fmap=fmap, replace_left=functor.replace_left,
        replace_right=functor.replace_right, void=functor.void,
        pure=pure, apply=apply, lift_a2=lift_a2, lift_a3=lift_a3,
        seq_right=seq_right, seq_left=seq_left,
    )


def mona_min_to_app_min(min: MonadMin) -> ApplicativeMin:
    return_, bind = min.return_, min.bind

    # function side is bound first, so its effects come first
    def apply(fs, xs):
        return bind(fs, lambda f: bind(xs, lambda x: return_(f(x))))

    return ApplicativeMin(tag=min.tag, pure=return_, apply=apply)


def mk_monad(min: MonadMin) -> Monad:
    """Elaborate ``return_`` and ``bind`` into the full Monad class.

    Applicative and Functor members come from elaborating the derived
    applicative, so the result is a complete instance of all three classes.
    """
    app = mk_applicative(mona_min_to_app_min(min))
    return_, bind = min.return_, min.bind

    def then_(m, k):
        return bind(m, lambda _: k)

    def join(n):
        return bind(n, _identity)

    def kleisli(f, g):
        return lambda a: bind(f(a), g)

    def kleisli_rev(g, f):
        return kleisli(f, g)

    def lift_m(f, m):
        return bind(m, lambda x: return_(f(x)))

    def lift_m2(f, m1, m2):
        return bind(m1, lambda a: bind(m2, lambda b: return_(f(a, b))))

    def ap(mf, mx):
        return bind(mf, lambda f: bind(mx, lambda x: return_(f(x))))

    def forever(m):
        # the recursive call sits under the continuation: building forever(m)
        # never recurses, only running it does
        return bind(m, lambda _: forever(m))

    # The list helpers fold left to right with bind, accumulating a cons
    # chain, so long lists cost O(n) and eager monads never nest calls.
    def map_m(f, xs):
        acc = return_(None)
        for x in xs:
            acc = bind(acc, lambda cell, x=x: bind(f(x), lambda y, cell=cell: return_((y, cell))))
        return bind(acc, lambda cell: return_(_cons_to_list(cell)))

    def sequence(ms):
        return map_m(_identity, ms)

    def filter_m(p, xs):
        acc = return_(None)
        for x in xs:
            acc = bind(acc, lambda cell, x=x: bind(
                p(x), lambda keep, cell=cell: return_((x, cell) if keep else cell)))
        return bind(acc, lambda cell: return_(_cons_to_list(cell)))

    def replicate_m(n, m):
        if n < 0:
            raise ValueError("replicate_m count must be non-negative, got %d" % n)
        return sequence([m] * n)

    def when_(cond, m):
        return m if cond else app.pure(UNIT)

    def unless_(cond, m):
        return app.pure(UNIT) if cond else m

    return Monad(
        tag=min.tag, fmap=app.fmap, replace_left=app.replace_left,
        replace_right=app.replace_right, void=app.void, pure=app.pure,
        apply=app.apply, lift_a2=app.lift_a2, lift_a3=app.lift_a3,
        seq_right=app.seq_right, seq_left=app.seq_left,
        return_=return_, bind=bind, then_=then_, join=join, kleisli=kleisli,
        kleisli_rev=kleisli_rev, lift_m=lift_m, lift_m2=lift_m2, ap=ap,
        forever=forever, map_m=map_m, sequence=sequence, filter_m=filter_m,
        replicate_m=replicate_m, when_=when_, unless_=unless_,
    )


def join_min_to_monad_min(min: JoinMin) -> MonadMin:
    fmap, join = min.fmap, min.join

    def bind(m, k: Callable):
        return join(fmap(k, m))

    return MonadMin(tag=min.tag, return_=min.return_, bind=bind)


def monad_min_to_join_min(min: MonadMin) -> JoinMin:
    return_, bind = min.return_, min.bind

    def fmap(f, m):
        return bind(m, lambda x: return_(f(x)))

    def join(n):
        return bind(n, _identity)

    return JoinMin(tag=min.tag, return_=return_, fmap=fmap, join=join)
