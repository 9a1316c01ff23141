"""Higher-kind encoding and the class signatures.

Python has no way to abstract over a type constructor, so a constructor is
represented by a ``ConstructorTag`` value and every class instance is an
explicit, immutable bundle of functions carrying that tag.  Callers pass
bundles around by hand; nothing is resolved implicitly.

Full bundles use dataclass inheritance the way an ML signature uses
``include``: a ``Monad`` *is* an ``Applicative`` *is* a ``Functor``, and every
member is reachable under its flat name (``list_monad.fmap``, never
``list_monad.applicative.functor.fmap``).
"""
from __future__ import annotations

import dataclasses
from dataclasses import dataclass, field
from typing import Any, Callable, Generic, Optional, TypeVar

__all__ = [
    "ConstructorTag", "Apply",
    "ListTag", "OptionTag", "IdentityTag", "EitherTag", "ReaderTag",
    "WriterTag", "StateTag", "ProductTag", "StateTTag", "ExceptTTag",
    "Some", "Nothing", "NOTHING", "Option", "Ok", "Err", "Either",
    "FunctorMin", "ApplicativeMin", "MonadMin", "JoinMin", "FoldableMin",
    "MonoidMin", "Functor", "Applicative", "Monad",
    "members", "with_overrides", "MONAD_DERIVED_MEMBERS",
    "embed_list", "project_list", "embed_option", "project_option",
    "embed_either", "project_either", "embed_identity", "project_identity",
    "embed_product", "project_product",
]

A = TypeVar("A")
E = TypeVar("E")

# Apply(F, A): whatever concrete value the constructor tagged F produces for
# element type A.  Python cannot express the application, so it stays opaque.
Apply = Any


@dataclass(frozen=True)
class ConstructorTag:
    """Zero-data marker naming one unary type constructor."""

    name: str
    params: tuple = ()

    def __str__(self) -> str:
        if not self.params:
            return self.name
        return "%s[%s]" % (self.name, ", ".join(_param_name(p) for p in self.params))


def _param_name(p: Any) -> str:
    if isinstance(p, ConstructorTag):
        return str(p)
    return getattr(p, "__name__", str(p))


ListTag = ConstructorTag("list")
OptionTag = ConstructorTag("option")
IdentityTag = ConstructorTag("identity")


def EitherTag(error_type: Any) -> ConstructorTag:
    return ConstructorTag("either", (error_type,))


def ReaderTag(env_type: Any) -> ConstructorTag:
    return ConstructorTag("reader", (env_type,))


def WriterTag(output_type: Any) -> ConstructorTag:
    return ConstructorTag("writer", (output_type,))


def StateTag(state_type: Any) -> ConstructorTag:
    return ConstructorTag("state", (state_type,))


def ProductTag(f: ConstructorTag, g: ConstructorTag) -> ConstructorTag:
    return ConstructorTag("product", (f, g))


def StateTTag(state_type: Any, base: ConstructorTag) -> ConstructorTag:
    return ConstructorTag("state_t", (state_type, base))


def ExceptTTag(error_type: Any, base: ConstructorTag) -> ConstructorTag:
    return ConstructorTag("except_t", (error_type, base))


# Option and Either values.  Option needs its own wrapper because ``None`` is
# an ordinary element value in Python and cannot double as "absent".

@dataclass(frozen=True)
class Some(Generic[A]):
    value: A


@dataclass(frozen=True)
class Nothing:
    def __repr__(self) -> str:
        return "NOTHING"


NOTHING = Nothing()
Option = Any  # Some[A] | Nothing


@dataclass(frozen=True)
class Ok(Generic[A]):
    value: A


@dataclass(frozen=True)
class Err(Generic[E]):
    error: E


Either = Any  # Ok[A] | Err[E]


# Minimal bundles: the operations a user writes by hand.

@dataclass(frozen=True, kw_only=True)
class FunctorMin:
    tag: ConstructorTag
    fmap: Callable[[Callable, Apply], Apply]


@dataclass(frozen=True, kw_only=True)
class ApplicativeMin:
    tag: ConstructorTag
    pure: Callable[[Any], Apply]
    apply: Callable[[Apply, Apply], Apply]


@dataclass(frozen=True, kw_only=True)
class MonadMin:
    tag: ConstructorTag
    return_: Callable[[Any], Apply]
    bind: Callable[[Apply, Callable[[Any], Apply]], Apply]


@dataclass(frozen=True, kw_only=True)
class JoinMin:
    """Alternative minimal monad: return, fmap and join instead of bind."""

    tag: ConstructorTag
    return_: Callable[[Any], Apply]
    fmap: Callable[[Callable, Apply], Apply]
    join: Callable[[Apply], Apply]


@dataclass(frozen=True, kw_only=True)
class FoldableMin:
    tag: ConstructorTag
    # fold_right(f, z, xs) with f(a, b) -> b
    fold_right: Callable[[Callable[[Any, Any], Any], Any, Apply], Any]


@dataclass(frozen=True, kw_only=True)
class MonoidMin:
    mempty: Any
    mappend: Callable[[Any, Any], Any]


# Full bundles.

@dataclass(frozen=True, kw_only=True)
class Functor:
    tag: ConstructorTag
    fmap: Callable[[Callable, Apply], Apply]
    replace_left: Callable[[Any, Apply], Apply]
    replace_right: Callable[[Apply, Any], Apply]
    void: Callable[[Apply], Apply]


@dataclass(frozen=True, kw_only=True)
class Applicative(Functor):
    pure: Callable[[Any], Apply]
    apply: Callable[[Apply, Apply], Apply]
    lift_a2: Callable[[Callable, Apply, Apply], Apply]
    lift_a3: Callable[[Callable, Apply, Apply, Apply], Apply]
    seq_right: Callable[[Apply, Apply], Apply]
    seq_left: Callable[[Apply, Apply], Apply]


@dataclass(frozen=True, kw_only=True)
class Monad(Applicative):
    return_: Callable[[Any], Apply]
    bind: Callable[[Apply, Callable[[Any], Apply]], Apply]
    then_: Callable[[Apply, Apply], Apply]
    join: Callable[[Apply], Apply]
    kleisli: Callable[[Callable, Callable], Callable]
    kleisli_rev: Callable[[Callable, Callable], Callable]
    lift_m: Callable[[Callable, Apply], Apply]
    lift_m2: Callable[[Callable, Apply, Apply], Apply]
    ap: Callable[[Apply, Apply], Apply]
    forever: Callable[[Apply], Apply]
    map_m: Callable[[Callable, list], Apply]
    sequence: Callable[[list], Apply]
    filter_m: Callable[[Callable, list], Apply]
    replicate_m: Callable[[int, Apply], Apply]
    when_: Callable[[bool, Apply], Apply]
    unless_: Callable[[bool, Apply], Apply]


def members(bundle: Any) -> tuple[str, ...]:
    """Names of every operation in a bundle, superclass members included."""
    cls = bundle if isinstance(bundle, type) else type(bundle)
    return tuple(f.name for f in dataclasses.fields(cls) if f.name != "tag")


MONAD_DERIVED_MEMBERS = tuple(m for m in members(Monad) if m not in ("return_", "bind"))
assert len(MONAD_DERIVED_MEMBERS) >= 20, MONAD_DERIVED_MEMBERS


def with_overrides(bundle: Any, **overrides: Any) -> Any:
    """Copy of ``bundle`` with some members replaced.

    Nothing is re-derived: members that were built on top of an overridden
    one keep their original definitions.

    >>> from higherkind.instances import list_monad
    >>> fast = with_overrides(list_monad(), apply=lambda fs, xs: [f(x) for f in fs for x in xs])
    >>> fast.apply([lambda x: x + 1], [5])
    [6]
    """
    if "tag" in overrides:
        raise ValueError("the constructor tag of a bundle cannot be overridden")
    known = set(members(bundle))
    unknown = sorted(set(overrides) - known)
    if unknown:
        raise TypeError("%s has no member(s) %s" % (type(bundle).__name__, ", ".join(unknown)))
    return dataclasses.replace(bundle, **overrides)


# embed/project: host container <-> Apply(tag, A)

def embed_list(xs: list) -> Apply:
    return list(xs)


def project_list(m: Apply) -> list:
    return list(m)


def embed_option(x: Optional[Any]) -> Apply:
    return NOTHING if x is None else Some(x)


def project_option(m: Apply) -> Optional[Any]:
    return m.value if isinstance(m, Some) else None


def embed_either(x: tuple) -> Apply:
    """Host either is a ``("ok", value)`` / ``("err", error)`` pair."""
    kind, payload = x
    if kind == "ok":
        return Ok(payload)
    if kind == "err":
        return Err(payload)
    raise ValueError("either tag must be 'ok' or 'err', got %r" % (kind,))


def project_either(m: Apply) -> tuple:
    return ("ok", m.value) if isinstance(m, Ok) else ("err", m.error)


def embed_identity(x: Any) -> Apply:
    return x


def project_identity(m: Apply) -> Any:
    return m


def embed_product(pair: tuple) -> Apply:
    left, right = pair
    return (left, right)


def project_product(m: Apply) -> tuple:
    return (m[0], m[1])
