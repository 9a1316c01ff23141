import dataclasses

import pytest
from hypothesis import given, strategies as st

from higherkind.core import (
    NOTHING, Applicative, ConstructorTag, EitherTag, Err, Functor, IdentityTag, ListTag, Monad,
    MONAD_DERIVED_MEMBERS, Ok, OptionTag, ProductTag, Some, StateTTag, embed_either, embed_identity,
    embed_list, embed_option, embed_product, members, project_either, project_identity,
    project_list, project_option, project_product, with_overrides,
)
from higherkind.instances import list_monad, option_monad

SHIPPED_TAGS = [ListTag, OptionTag, IdentityTag, EitherTag(str), ProductTag(OptionTag, ListTag),
                StateTTag(int, OptionTag)]


def test_shipped_tags_are_distinct():
    assert len(set(SHIPPED_TAGS)) == len(SHIPPED_TAGS)
    assert EitherTag(str) != EitherTag(int)


def test_tag_rendering():
    assert str(StateTTag(int, OptionTag)) == "state_t[int, option]"
    assert str(ListTag) == "list"


@pytest.mark.parametrize("xs", [[1, 2], [], [[3], "a", None]])
def test_list_round_trip_examples(xs):
    assert project_list(embed_list(xs)) == xs


def test_option_round_trip_examples():
    assert embed_option(None) is NOTHING
    assert project_option(embed_option(None)) is None
    assert embed_option(4) == Some(4)


@given(st.lists(st.integers()))
def test_list_round_trip(xs):
    assert project_list(embed_list(xs)) == xs


@given(st.one_of(st.none(), st.integers(), st.text()))
def test_option_round_trip(x):
    assert project_option(embed_option(x)) == x


@given(st.tuples(st.sampled_from(["ok", "err"]), st.integers()))
def test_either_round_trip(x):
    assert project_either(embed_either(x)) == x


def test_either_embedding():
    assert embed_either(("ok", 1)) == Ok(1)
    assert embed_either(("err", "e")) == Err("e")
    with pytest.raises(ValueError):
        embed_either(("maybe", 1))


@given(st.integers(), st.tuples(st.integers(), st.lists(st.integers())))
def test_identity_and_product_round_trip(x, pair):
    assert project_identity(embed_identity(x)) == x
    assert project_product(embed_product(pair)) == pair


def test_monad_has_more_than_twenty_derived_members():
    assert len(MONAD_DERIVED_MEMBERS) >= 20
    assert len(MONAD_DERIVED_MEMBERS) == 24
    assert "return_" not in MONAD_DERIVED_MEMBERS and "bind" not in MONAD_DERIVED_MEMBERS


def test_class_inclusion_is_flat():
    m = list_monad()
    assert isinstance(m, Applicative) and isinstance(m, Functor)
    assert set(members(Functor)) < set(members(Applicative)) < set(members(Monad))
    assert m.fmap(lambda x: x + 1, [1, 2]) == [2, 3]


def test_bundles_are_immutable():
    m = list_monad()
    with pytest.raises(dataclasses.FrozenInstanceError):
        m.bind = None


def test_empty_override_is_identity():
    m = list_monad()
    same = with_overrides(m)
    assert same is not m
    for name in members(m):
        assert getattr(same, name) is getattr(m, name)


def test_override_apply_with_cartesian_product():
    m = list_monad()
    fast = with_overrides(m, apply=lambda fs, xs: [f(x) for f in fs for x in xs])
    assert fast.apply([lambda x: x + 1], [5]) == [6]
    assert fast.bind is m.bind
    # the original bundle is untouched
    assert m.apply is not fast.apply


def test_override_fmap_on_option():
    m = option_monad()

    def fmap(f, opt):
        return Some(f(opt.value)) if isinstance(opt, Some) else NOTHING

    o = with_overrides(m, fmap=fmap)
    assert o.fmap(lambda x: x + 1, Some(2)) == Some(3)
    assert o.fmap is fmap
    assert o.lift_m is m.lift_m


def test_override_rejects_unknown_members_and_tag():
    m = list_monad()
    with pytest.raises(TypeError):
        with_overrides(m, nonsense=len)
    with pytest.raises(ValueError):
        with_overrides(m, tag=ConstructorTag("other"))
