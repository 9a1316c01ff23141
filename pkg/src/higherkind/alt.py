"""Alternative and MonadZeroPlus: the diamond of the class hierarchy.

A ``Monad0p`` reaches Applicative twice: through ``Monad`` and through
``Alter``.  Both routes start from the same ``Monad0pMin`` and end in
extensionally equal ``pure``/``apply`` (checked by
:func:`higherkind.laws.check_monad0p_laws`), so which one supplies the flat
members is immaterial.  ``mk_monad0p`` takes them from the monad route.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable

from .core import NOTHING, Applicative, ApplicativeMin, Apply, Monad, MonadMin, Some
from .elaborate import UNIT, mk_applicative, mk_monad, mona_min_to_app_min

__all__ = [
    "AlterMin", "Monad0pMin", "Alter", "Monad0p",
    "mk_alter", "mk_monad0p", "m0p_min_to_alter_min", "m0p_min_to_monad_min",
]


@dataclass(frozen=True, kw_only=True)
class AlterMin(ApplicativeMin):
    empty: Apply
    alt: Callable[[Apply, Apply], Apply]


@dataclass(frozen=True, kw_only=True)
class Monad0pMin(MonadMin):
    zero: Apply
    plus: Callable[[Apply, Apply], Apply]


@dataclass(frozen=True, kw_only=True)
class Alter(Applicative):
    empty: Apply
    alt: Callable[[Apply, Apply], Apply]
    optional_: Callable[[Apply], Apply]
    msum: Callable[[list], Apply]
    guard_: Callable[[bool], Apply]


@dataclass(frozen=True, kw_only=True)
class Monad0p(Monad, Alter):
    zero: Apply
    plus: Callable[[Apply, Apply], Apply]
    mfilter: Callable[[Callable[[Any], bool], Apply], Apply]


def _alter_members(app: Applicative, empty: Apply, alt: Callable) -> dict:
    def optional_(m):
        return alt(app.fmap(Some, m), app.pure(NOTHING))

    def msum(ms):
        acc = empty
        for m in reversed(ms):
            acc = alt(m, acc)
        return acc

    def guard_(cond):
        return app.pure(UNIT) if cond else empty

    return dict(empty=empty, alt=alt, optional_=optional_, msum=msum, guard_=guard_)


def _fields(bundle: Any) -> dict:
    return {name: getattr(bundle, name) for name in bundle.__dataclass_fields__}


def mk_alter(min: AlterMin) -> Alter:
    app = mk_applicative(ApplicativeMin(tag=min.tag, pure=min.pure, apply=min.apply))
    return Alter(**_fields(app), **_alter_members(app, min.empty, min.alt))


def m0p_min_to_monad_min(min: Monad0pMin) -> MonadMin:
    return MonadMin(tag=min.tag, return_=min.return_, bind=min.bind)


def m0p_min_to_alter_min(min: Monad0pMin) -> AlterMin:
    app = mona_min_to_app_min(m0p_min_to_monad_min(min))
    return AlterMin(tag=min.tag, pure=app.pure, apply=app.apply, empty=min.zero, alt=min.plus)


def mk_monad0p(min: Monad0pMin) -> Monad0p:
    monad = mk_monad(m0p_min_to_monad_min(min))
    alter = mk_alter(m0p_min_to_alter_min(min))
    alter_only = {k: getattr(alter, k) for k in ("empty", "alt", "optional_", "msum", "guard_")}
    zero, return_, bind = min.zero, min.return_, min.bind

    def mfilter(p, m):
        return bind(m, lambda x: return_(x) if p(x) else zero)

    return Monad0p(**_fields(monad), **alter_only, zero=zero, plus=min.plus, mfilter=mfilter)
