"""Seeded property checks for the algebraic laws of each class.

Every law draws its cases from a generator seeded by ``(seed, suite, law,
case index)``, so a report depends only on its inputs and can be reproduced
exactly.  Containers holding functions (reader, state, parsers) are compared
extensionally by running them on a fixed fan of sample arguments.

The element type is small integers and the function family is affine maps,
which keeps equality decidable and counterexamples readable.
"""
from __future__ import annotations

import functools
import hashlib
import json
import operator
from dataclasses import dataclass, field
from typing import Any, Callable, Generic, Iterable, Optional, Sequence, TypeVar

from .alt import m0p_min_to_alter_min, m0p_min_to_monad_min
from .core import NOTHING, Applicative, Err, Functor, Monad, Ok, Some
from .elaborate import mona_min_to_app_min

__all__ = [
    "DEFAULT_SEED", "DEFAULT_CASES", "DEFAULT_SIZE", "INT_FAN",
    "SplitMix", "mix", "Gen", "Affine", "RandomFunction",
    "integers", "affines", "lists", "constant", "one_of", "functions", "arrows",
    "Arbitrary", "list_arbitrary", "fixed_length_list_arbitrary", "option_arbitrary",
    "either_arbitrary", "identity_arbitrary", "reader_arbitrary", "writer_arbitrary",
    "state_arbitrary", "product_arbitrary",
    "LawResult", "LawReport",
    "check_functor_laws", "check_applicative_laws", "check_monad_laws",
    "check_coherence", "check_alter_laws", "check_monad0p_laws",
    "check_transformer_laws",
]

A = TypeVar("A")

DEFAULT_SEED = 42
DEFAULT_CASES = 500
DEFAULT_SIZE = 8
INT_FAN = tuple(range(-8, 8))

_MASK = (1 << 64) - 1
_MISSING = object()


class SplitMix:
    """SplitMix64.  Tiny, fast to seed, and identical on every platform."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def randint(self, lo: int, hi: int) -> int:
        return lo + self.next64() % (hi - lo + 1)

    def choice(self, seq: Sequence[A]) -> A:
        return seq[self.next64() % len(seq)]

    def chance(self, numerator: int, denominator: int) -> bool:
        return self.next64() % denominator < numerator


def _splitmix64(x: int) -> int:
    z = (x + 0x9E3779B97F4A7C15) & _MASK
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return z ^ (z >> 31)


@functools.lru_cache(maxsize=4096)
def _digest(part: Any) -> int:
    digest = hashlib.blake2b(repr(part).encode(), digest_size=8).digest()
    return int.from_bytes(digest, "little")


def mix(*parts: Any) -> int:
    """Deterministically combine seeds, names and sample points into one seed."""
    h = 0x243F6A8885A308D3
    for part in parts:
        if type(part) is int:
            h = _splitmix64(h ^ (part & _MASK))
        else:
            h = _splitmix64(h ^ _digest(part))
    return h


@dataclass(frozen=True, eq=False)
class Gen(Generic[A]):
    """Seeded generator; ``size`` bounds list lengths."""

    draw: Callable[[SplitMix, int], A]

    def sample(self, seed: int, index: int, size: int = DEFAULT_SIZE) -> A:
        return self.draw(SplitMix(mix(seed, index)), size)

    def map(self, f: Callable[[A], Any]) -> "Gen":
        return Gen(lambda rng, size: f(self.draw(rng, size)))


def integers(lo: int = -100, hi: int = 100) -> Gen[int]:
    return Gen(lambda rng, size: rng.randint(lo, hi))


def constant(value: Any) -> Gen:
    return Gen(lambda rng, size: value)


def one_of(*gens: Gen) -> Gen:
    return Gen(lambda rng, size: rng.choice(gens).draw(rng, size))


def lists(elem: Gen, min_len: int = 0, max_len: Optional[int] = None) -> Gen[list]:
    def draw(rng, size):
        n = rng.randint(min_len, max(min_len, size if max_len is None else max_len))
        return [elem.draw(rng, size) for _ in range(n)]
    return Gen(draw)


@dataclass(frozen=True)
class Affine:
    slope: int
    offset: int

    def __call__(self, x: int) -> int:
        return self.slope * x + self.offset

    def __repr__(self) -> str:
        return "(x -> %d*x%+d)" % (self.slope, self.offset)


def affines() -> Gen[Affine]:
    return Gen(lambda rng, size: Affine(rng.randint(-3, 3), rng.randint(-5, 5)))


@dataclass(frozen=True, eq=False)
class RandomFunction:
    """A pseudo-random but fixed function: its result for ``x`` is a draw
    seeded by ``(seed, x)`` from the generator ``gen_for(x)``."""

    seed: int
    gen_for: Callable[[Any], Gen]
    size: int
    _memo: dict = field(default_factory=dict, repr=False, compare=False)

    def __call__(self, x: Any) -> Any:
        try:
            out = self._memo.get(x, _MISSING)
        except TypeError:  # unhashable argument
            return self.gen_for(x).draw(SplitMix(mix(self.seed, x)), self.size)
        if out is _MISSING:
            out = self._memo[x] = self.gen_for(x).draw(SplitMix(mix(self.seed, x)), self.size)
        return out

    def __repr__(self) -> str:
        return "<fn %016x>" % self.seed


def functions(gen_for: Callable[[Any], Gen]) -> Gen[RandomFunction]:
    return Gen(lambda rng, size: RandomFunction(rng.next64(), gen_for, size))


def arrows(arb: "Arbitrary", elem: Gen) -> Gen[RandomFunction]:
    """Kleisli arrows ``x -> F elem``."""
    target = arb.containers(elem)
    return functions(lambda _: target)


@dataclass(frozen=True, eq=False)
class Arbitrary:
    """How to generate, compare and print containers of one constructor.

    ``containers`` lifts an element generator to a container generator, so
    one description covers ``F int``, ``F (int -> int)`` and Kleisli arrows.
    """

    containers: Callable[[Gen], Gen]
    eq: Callable[[Any, Any], bool] = operator.eq
    show: Callable[[Any], str] = repr


def list_arbitrary() -> Arbitrary:
    return Arbitrary(containers=lists)


def fixed_length_list_arbitrary(length: int) -> Arbitrary:
    return Arbitrary(containers=lambda elem: lists(elem, length, length))


def option_arbitrary() -> Arbitrary:
    def containers(elem):
        return Gen(lambda rng, size: Some(elem.draw(rng, size)) if rng.chance(3, 4) else NOTHING)
    return Arbitrary(containers=containers)


def either_arbitrary(errors: Sequence[Any] = ("e1", "e2", "e3")) -> Arbitrary:
    def containers(elem):
        def draw(rng, size):
            if rng.chance(3, 4):
                return Ok(elem.draw(rng, size))
            return Err(rng.choice(errors))
        return Gen(draw)
    return Arbitrary(containers=containers)


def identity_arbitrary() -> Arbitrary:
    return Arbitrary(containers=lambda elem: elem)


def _extensional(fan: Sequence[Any], eq: Callable[[Any, Any], bool]) -> Callable[[Any, Any], bool]:
    return lambda f, g: all(eq(f(x), g(x)) for x in fan)


def _show_table(fan: Sequence[Any], show: Callable[[Any], str], points: int = 4) -> Callable[[Any], str]:
    return lambda f: "{%s, ...}" % ", ".join("%r: %s" % (x, show(f(x))) for x in fan[:points])


def reader_arbitrary(fan: Sequence[Any] = INT_FAN) -> Arbitrary:
    return Arbitrary(
        containers=lambda elem: functions(lambda _: elem),
        eq=_extensional(fan, operator.eq),
        show=_show_table(fan, repr),
    )


def writer_arbitrary() -> Arbitrary:
    log = lists(integers(0, 9), max_len=3)
    return Arbitrary(
        containers=lambda elem: Gen(lambda rng, size: (elem.draw(rng, size), log.draw(rng, size))))


def state_arbitrary(
    base: Arbitrary,
    fan: Sequence[Any] = INT_FAN,
    step: Callable[[SplitMix, Any], Any] = lambda rng, s: rng.randint(-8, 7),
) -> Arbitrary:
    """Functions ``s -> base[(a, s')]``; ``base`` is identity for plain state.

    ``step(rng, s)`` picks the successor state.
    """
    def containers(elem):
        def gen_for(s):
            pair = Gen(lambda rng, size: (elem.draw(rng, size), step(rng, s)))
            return base.containers(pair)
        return functions(gen_for)

    return Arbitrary(containers=containers, eq=_extensional(fan, base.eq),
                     show=_show_table(fan, base.show))


def product_arbitrary(left: Arbitrary, right: Arbitrary) -> Arbitrary:
    def containers(elem):
        lg, rg = left.containers(elem), right.containers(elem)
        return Gen(lambda rng, size: (lg.draw(rng, size), rg.draw(rng, size)))

    return Arbitrary(
        containers=containers,
        eq=lambda x, y: left.eq(x[0], y[0]) and right.eq(x[1], y[1]),
        show=lambda x: "(%s, %s)" % (left.show(x[0]), right.show(x[1])),
    )


# reports

@dataclass(frozen=True)
class LawResult:
    law: str
    cases: int
    passed: bool
    counterexample: Optional[str] = None


@dataclass(frozen=True)
class LawReport:
    suite: str
    instance: str
    results: tuple[LawResult, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def lines(self) -> list[str]:
        out = []
        for r in self.results:
            verdict = "PASS" if r.passed else "FAIL %s" % r.counterexample
            out.append("%s %s %s (%d cases): %s" % (self.instance, self.suite, r.law, r.cases, verdict))
        return out

    def render(self) -> str:
        return "\n".join(self.lines())

    def records(self) -> list[dict]:
        return [
            {"instance": self.instance, "suite": self.suite, "law": r.law, "cases": r.cases,
             "passed": r.passed, "counterexample": r.counterexample}
            for r in self.results
        ]

    def to_json_lines(self) -> str:
        return "\n".join(json.dumps(rec, sort_keys=True) for rec in self.records())


Case = Callable[[SplitMix, int], tuple]


class _Runner:
    def __init__(self, suite: str, instance: str, seed: int, cases: int, size: int,
                 eq: Callable[[Any, Any], bool], show: Callable[[Any], str]):
        if cases < 0:
            raise ValueError("cases must be >= 0")
        self.suite, self.instance = suite, instance
        self.seed, self.cases, self.size = seed, cases, size
        self.eq, self.show = eq, show
        self.results: list[LawResult] = []

    def law(self, name: str, case: Case, eq=None, show=None) -> None:
        """``case(rng, size)`` returns ``(lhs, rhs, describe_inputs)``."""
        eq = eq or self.eq
        show = show or self.show
        for i in range(self.cases):
            rng = SplitMix(mix(self.seed, self.suite, name, i))
            lhs, rhs, describe = case(rng, self.size)
            if not eq(lhs, rhs):
                text = "%s; lhs=%s; rhs=%s" % (describe(), show(lhs), show(rhs))
                self.results.append(LawResult(name, i + 1, False, text))
                return
        self.results.append(LawResult(name, self.cases, True))

    def report(self) -> LawReport:
        return LawReport(self.suite, self.instance, tuple(self.results))


def _selected(laws: Optional[Iterable[str]], name: str) -> bool:
    return laws is None or name in laws


def _identity(x):
    return x


def _compose(f):
    return lambda g: lambda x: f(g(x))


def check_functor_laws(f: Functor, arb: Arbitrary, *, instance: str = "", cases: int = DEFAULT_CASES,
                       seed: int = DEFAULT_SEED, size: int = DEFAULT_SIZE,
                       laws: Optional[Iterable[str]] = None) -> LawReport:
    run = _Runner("functor", instance, seed, cases, size, arb.eq, arb.show)
    values, fns = arb.containers(integers()), affines()

    def identity(rng, size):
        v = values.draw(rng, size)
        return f.fmap(_identity, v), v, lambda: "v=%s" % arb.show(v)

    def composition(rng, size):
        v, g, h = values.draw(rng, size), fns.draw(rng, size), fns.draw(rng, size)
        return (f.fmap(lambda x: h(g(x)), v), f.fmap(h, f.fmap(g, v)),
                lambda: "v=%s, f=%r, g=%r" % (arb.show(v), g, h))

    for name, case in (("identity", identity), ("composition", composition)):
        if _selected(laws, name):
            run.law(name, case)
    return run.report()


def check_applicative_laws(a: Applicative, arb: Arbitrary, *, instance: str = "",
                           cases: int = DEFAULT_CASES, seed: int = DEFAULT_SEED,
                           size: int = DEFAULT_SIZE, laws: Optional[Iterable[str]] = None,
                           shaped_pure: Optional[Callable[[Any, Any], Any]] = None) -> LawReport:
    """Identity, homomorphism, interchange and composition.

    ``shaped_pure(x, like)`` replaces ``pure(x)`` in the composition law with
    a container shaped like ``like``.  Zip lists need it: their singleton
    ``pure`` truncates, while a same-length replica stands in for the
    infinite ``pure`` a lazy language would use.
    """
    run = _Runner("applicative", instance, seed, cases, size, arb.eq, arb.show)
    elems, fns = integers(), affines()
    values, fn_boxes = arb.containers(elems), arb.containers(fns)
    pure_like = shaped_pure or (lambda x, like: a.pure(x))

    def identity(rng, size):
        v = values.draw(rng, size)
        return a.apply(a.pure(_identity), v), v, lambda: "v=%s" % arb.show(v)

    def homomorphism(rng, size):
        f, x = fns.draw(rng, size), elems.draw(rng, size)
        return a.apply(a.pure(f), a.pure(x)), a.pure(f(x)), lambda: "f=%r, x=%r" % (f, x)

    def interchange(rng, size):
        u, y = fn_boxes.draw(rng, size), elems.draw(rng, size)
        return (a.apply(u, a.pure(y)), a.apply(a.pure(lambda g: g(y)), u),
                lambda: "u=%s, y=%r" % (arb.show(u), y))

    def composition(rng, size):
        u, v, w = fn_boxes.draw(rng, size), fn_boxes.draw(rng, size), values.draw(rng, size)
        lhs = a.apply(a.apply(a.apply(pure_like(_compose, u), u), v), w)
        return (lhs, a.apply(u, a.apply(v, w)),
                lambda: "u=%s, v=%s, w=%s" % (arb.show(u), arb.show(v), arb.show(w)))

    for name, case in (("identity", identity), ("homomorphism", homomorphism),
                       ("interchange", interchange), ("composition", composition)):
        if _selected(laws, name):
            run.law(name, case)
    return run.report()


def check_monad_laws(m: Monad, arb: Arbitrary, *, instance: str = "", cases: int = DEFAULT_CASES,
                     seed: int = DEFAULT_SEED, size: int = DEFAULT_SIZE,
                     laws: Optional[Iterable[str]] = None) -> LawReport:
    run = _Runner("monad", instance, seed, cases, size, arb.eq, arb.show)
    elems = integers()
    values, ks = arb.containers(elems), arrows(arb, elems)

    def left_identity(rng, size):
        x, k = elems.draw(rng, size), ks.draw(rng, size)
        return m.bind(m.return_(x), k), k(x), lambda: "a=%r, k=%r" % (x, k)

    def right_identity(rng, size):
        v = values.draw(rng, size)
        return m.bind(v, m.return_), v, lambda: "m=%s" % arb.show(v)

    def associativity(rng, size):
        v, k, h = values.draw(rng, size), ks.draw(rng, size), ks.draw(rng, size)
        return (m.bind(m.bind(v, k), h), m.bind(v, lambda x: m.bind(k(x), h)),
                lambda: "m=%s, k=%r, h=%r" % (arb.show(v), k, h))

    for name, case in (("left-identity", left_identity), ("right-identity", right_identity),
                       ("associativity", associativity)):
        if _selected(laws, name):
            run.law(name, case)
    return run.report()


def check_coherence(m: Monad, arb: Arbitrary, *, instance: str = "", cases: int = DEFAULT_CASES,
                    seed: int = DEFAULT_SEED, size: int = DEFAULT_SIZE) -> LawReport:
    """Members reachable by two routes agree: lift_m/fmap, ap/apply, return_/pure."""
    run = _Runner("coherence", instance, seed, cases, size, arb.eq, arb.show)
    elems, fns = integers(), affines()
    values, fn_boxes = arb.containers(elems), arb.containers(fns)

    def lift_m(rng, size):
        f, v = fns.draw(rng, size), values.draw(rng, size)
        return m.lift_m(f, v), m.fmap(f, v), lambda: "f=%r, m=%s" % (f, arb.show(v))

    def ap(rng, size):
        u, v = fn_boxes.draw(rng, size), values.draw(rng, size)
        return m.ap(u, v), m.apply(u, v), lambda: "u=%s, v=%s" % (arb.show(u), arb.show(v))

    def return_(rng, size):
        x = elems.draw(rng, size)
        return m.return_(x), m.pure(x), lambda: "a=%r" % x

    run.law("lift_m=fmap", lift_m)
    run.law("ap=apply", ap)
    run.law("return_=pure", return_)
    return run.report()


def _monoid_laws(run: _Runner, prefix: str, empty: Any, op: Callable, values: Gen, show) -> None:
    def left(rng, size):
        v = values.draw(rng, size)
        return op(empty, v), v, lambda: "x=%s" % show(v)

    def right(rng, size):
        v = values.draw(rng, size)
        return op(v, empty), v, lambda: "x=%s" % show(v)

    def assoc(rng, size):
        x, y, z = values.draw(rng, size), values.draw(rng, size), values.draw(rng, size)
        return (op(op(x, y), z), op(x, op(y, z)),
                lambda: "x=%s, y=%s, z=%s" % (show(x), show(y), show(z)))

    run.law(prefix + "left-identity", left)
    run.law(prefix + "right-identity", right)
    run.law(prefix + "associativity", assoc)


def check_alter_laws(a: Any, arb: Arbitrary, *, instance: str = "", cases: int = DEFAULT_CASES,
                     seed: int = DEFAULT_SEED, size: int = DEFAULT_SIZE) -> LawReport:
    """``(alt, empty)`` is a monoid."""
    run = _Runner("alter", instance, seed, cases, size, arb.eq, arb.show)
    _monoid_laws(run, "", a.empty, a.alt, arb.containers(integers()), arb.show)
    return run.report()


def check_monad0p_laws(m: Any, arb: Arbitrary, *, instance: str = "", cases: int = DEFAULT_CASES,
                       seed: int = DEFAULT_SEED, size: int = DEFAULT_SIZE,
                       source: Any = None) -> LawReport:
    """Left zero and the ``(plus, zero)`` monoid.

    With ``source`` (the Monad0pMin ``m`` was elaborated from) the diamond is
    checked too: the Applicative reached through Alter and the one reached
    through Monad must agree on ``pure`` and ``apply``.
    """
    run = _Runner("monad0p", instance, seed, cases, size, arb.eq, arb.show)
    elems = integers()
    values, ks = arb.containers(elems), arrows(arb, elems)

    def left_zero(rng, size):
        k = ks.draw(rng, size)
        return m.bind(m.zero, k), m.zero, lambda: "k=%r" % k

    run.law("left-zero", left_zero)
    _monoid_laws(run, "plus-", m.zero, m.plus, values, arb.show)

    if source is not None:
        via_alter = m0p_min_to_alter_min(source)
        via_monad = mona_min_to_app_min(m0p_min_to_monad_min(source))
        fn_boxes = arb.containers(affines())

        def diamond_pure(rng, size):
            x = elems.draw(rng, size)
            return via_alter.pure(x), via_monad.pure(x), lambda: "a=%r" % x

        def diamond_apply(rng, size):
            u, v = fn_boxes.draw(rng, size), values.draw(rng, size)
            return (via_alter.apply(u, v), via_monad.apply(u, v),
                    lambda: "u=%s, v=%s" % (arb.show(u), arb.show(v)))

        run.law("diamond-pure", diamond_pure)
        run.law("diamond-apply", diamond_apply)
    return run.report()


def check_transformer_laws(t: Any, base_arb: Arbitrary, arb: Arbitrary, *, instance: str = "",
                           cases: int = DEFAULT_CASES, seed: int = DEFAULT_SEED,
                           size: int = DEFAULT_SIZE) -> LawReport:
    """``lift`` is a monad morphism from the base monad into ``t``."""
    run = _Runner("transformer", instance, seed, cases, size, arb.eq, arb.show)
    base = t.base
    elems = integers()
    base_values, base_ks = base_arb.containers(elems), arrows(base_arb, elems)

    def lift_unit(rng, size):
        x = elems.draw(rng, size)
        return t.lift(base.return_(x)), t.return_(x), lambda: "a=%r" % x

    def lift_bind(rng, size):
        mv, k = base_values.draw(rng, size), base_ks.draw(rng, size)
        return (t.lift(base.bind(mv, k)), t.bind(t.lift(mv), lambda x: t.lift(k(x))),
                lambda: "m=%s, k=%r" % (base_arb.show(mv), k))

    run.law("lift-unit", lift_unit)
    run.law("lift-bind", lift_bind)
    return run.report()
