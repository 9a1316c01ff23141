"""Named instances together with what the law suites need to test them."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Optional

from . import laws
from .alt import mk_monad0p
from .combine import cons_prod
from .core import Err, Ok
from .elaborate import mk_applicative, mk_monad
from .instances import (
    either_monad_min, identity_monad_min, list_monad0p_min, list_monad_min, list_monoid,
    list_zip_applicative_min, option_monad0p_min, option_monad_min, reader_monad_min,
    state_monad_min, writer_monad_min,
)
from .laws import Arbitrary, LawReport
from .parsec import ParseError, ParseState, parser_monad0p_min
from .transform import except_t, state_t

SUITES = ("functor", "applicative", "monad", "coherence", "alter", "monad0p", "transformer")

ZIP_LENGTH = 4


@dataclass(frozen=True)
class Entry:
    name: str
    arbitrary: Callable[[], Arbitrary]
    monad_min: Optional[Callable[[], Any]] = None
    applicative_min: Optional[Callable[[], Any]] = None
    monad0p_min: Optional[Callable[[], Any]] = None
    transformer: Optional[Callable[[], Any]] = None
    base_arbitrary: Optional[Callable[[], Arbitrary]] = None
    applicative_laws: Optional[tuple] = None
    shaped_pure: Optional[Callable[[Any, Any], Any]] = None

    def suites(self) -> tuple[str, ...]:
        out = []
        if self.monad_min is not None:
            out += ["functor", "applicative", "monad", "coherence"]
        elif self.applicative_min is not None:
            out += ["applicative"]
        if self.monad0p_min is not None:
            out += ["alter", "monad0p"]
        if self.transformer is not None:
            out += ["transformer"]
        return tuple(s for s in SUITES if s in out)

    def run(self, suite: str, *, seed: int = laws.DEFAULT_SEED,
            cases: int = laws.DEFAULT_CASES) -> LawReport:
        if suite not in self.suites():
            raise KeyError("suite %r does not apply to instance %r" % (suite, self.name))
        arb = self.arbitrary()
        opts = dict(instance=self.name, seed=seed, cases=cases)
        if suite == "applicative" and self.monad_min is None:
            return laws.check_applicative_laws(
                mk_applicative(self.applicative_min()), arb, laws=self.applicative_laws,
                shaped_pure=self.shaped_pure, **opts)
        if suite in ("alter", "monad0p"):
            source = self.monad0p_min()
            bundle = mk_monad0p(source)
            if suite == "alter":
                return laws.check_alter_laws(bundle, arb, **opts)
            return laws.check_monad0p_laws(bundle, arb, source=source, **opts)
        if suite == "transformer":
            return laws.check_transformer_laws(self.transformer(), self.base_arbitrary(), arb, **opts)
        bundle = mk_monad(self.monad_min())
        check = {
            "functor": laws.check_functor_laws,
            "applicative": laws.check_applicative_laws,
            "monad": laws.check_monad_laws,
            "coherence": laws.check_coherence,
        }[suite]
        return check(bundle, arb, **opts)


def _parser_step(rng, s: ParseState) -> ParseState:
    return ParseState(s.text, min(len(s.text), s.offset + rng.randint(0, 1)))


def parser_arbitrary() -> Arbitrary:
    """Random parsers: each fails at the current offset or yields an element
    and consumes zero or one character."""
    def containers(elem):
        def gen_for(s):
            def draw(rng, size):
                if rng.chance(1, 4):
                    return Err(ParseError(s.offset, rng.choice(("x", "y"))))
                return Ok((elem.draw(rng, size), _parser_step(rng, s)))
            return laws.Gen(draw)
        return laws.functions(gen_for)

    fan = PARSER_FAN
    return Arbitrary(containers=containers,
                     eq=lambda p, q: all(p(s) == q(s) for s in fan),
                     show=lambda p: "{%s, ...}" % ", ".join(
                         "%r@%d: %r" % (s.text, s.offset, p(s)) for s in fan[:3]))


PARSER_FAN = tuple(
    ParseState(text, offset)
    for text, offsets in (("", (0,)), ("a", (0, 1)), ("ab", (0, 1, 2)), ("abc", (0, 1, 2, 3)),
                          ("12+3", (0, 2, 4)), ("xyz", (0, 1, 2)))
    for offset in offsets
)
assert len(PARSER_FAN) == 16


def _state_t_option():
    return state_t(option_monad_min(), int)


def _state_t_identity():
    return state_t(identity_monad_min(), int)


def _parser_transformer():
    return state_t(either_monad_min(ParseError), ParseState)


def _except_t_identity():
    return except_t(identity_monad_min(), str)


ENTRIES: dict[str, Entry] = {e.name: e for e in (
    Entry("list", laws.list_arbitrary, monad_min=list_monad_min, monad0p_min=list_monad0p_min),
    Entry("list-zip", lambda: laws.fixed_length_list_arbitrary(ZIP_LENGTH),
          applicative_min=list_zip_applicative_min,
          applicative_laws=("homomorphism", "interchange", "composition"),
          shaped_pure=lambda x, like: [x] * len(like)),
    Entry("option", laws.option_arbitrary, monad_min=option_monad_min,
          monad0p_min=option_monad0p_min),
    Entry("either", laws.either_arbitrary, monad_min=lambda: either_monad_min(str)),
    Entry("identity", laws.identity_arbitrary, monad_min=identity_monad_min),
    Entry("reader", laws.reader_arbitrary, monad_min=lambda: reader_monad_min(int)),
    Entry("writer", laws.writer_arbitrary, monad_min=lambda: writer_monad_min(list_monoid())),
    Entry("state", lambda: laws.state_arbitrary(laws.identity_arbitrary()),
          monad_min=lambda: state_monad_min(int)),
    Entry("product-option-list",
          lambda: laws.product_arbitrary(laws.option_arbitrary(), laws.list_arbitrary()),
          monad_min=lambda: cons_prod(option_monad_min(), list_monad_min())),
    Entry("state-t-option", lambda: laws.state_arbitrary(laws.option_arbitrary()),
          monad_min=_state_t_option, transformer=_state_t_option,
          base_arbitrary=laws.option_arbitrary),
    Entry("state-t-identity", lambda: laws.state_arbitrary(laws.identity_arbitrary()),
          monad_min=_state_t_identity, transformer=_state_t_identity,
          base_arbitrary=laws.identity_arbitrary),
    Entry("except-t-identity", laws.either_arbitrary, monad_min=_except_t_identity,
          transformer=_except_t_identity, base_arbitrary=laws.identity_arbitrary),
    Entry("parser", parser_arbitrary, monad_min=parser_monad0p_min,
          monad0p_min=parser_monad0p_min, transformer=_parser_transformer,
          base_arbitrary=lambda: laws.either_arbitrary((ParseError(0, "x"), ParseError(1, "y")))),
)}

BASE_INSTANCES = ("list", "list-zip", "option", "either", "identity", "reader", "writer", "state")


def instance_names() -> tuple[str, ...]:
    return tuple(ENTRIES)


def run_suites(suite: str = "all", instance: str = "all", *, seed: int = laws.DEFAULT_SEED,
               cases: int = laws.DEFAULT_CASES) -> list[LawReport]:
    """Every applicable (instance, suite) pair, instances in declaration order."""
    names = instance_names() if instance == "all" else (instance,)
    reports = []
    for name in names:
        entry = ENTRIES[name]
        for s in entry.suites():
            if suite in ("all", s):
                reports.append(entry.run(s, seed=seed, cases=cases))
    return reports
