import itertools
from functools import reduce

import pytest
from hypothesis import given, strategies as st

from higherkind.core import NOTHING, Err, Ok, Some
from higherkind.elaborate import (
    app_min_to_fun_min, join_min_to_monad_min, mk_applicative, mk_functor, mk_monad,
    mona_min_to_app_min, monad_min_to_join_min,
)
from higherkind.instances import (
    either_monad_min, identity_join_min, identity_monad_min, list_applicative_min,
    list_functor_min, list_join_min, list_monad_min, option_applicative_min, option_functor_min,
    option_join_min, option_monad_min,
)

inc = lambda x: x + 1  # noqa: E731
dbl = lambda x: x * 2  # noqa: E731


def test_mk_functor_examples():
    lf = mk_functor(list_functor_min())
    assert lf.fmap(inc, [1, 2]) == [x + 1 for x in [1, 2]]
    assert mk_functor(option_functor_min()).fmap(lambda x: x, Some(9)) == Some(9)
    assert lf.replace_left(0, [7, 8, 9]) == [0, 0, 0]
    assert lf.replace_right([7, 8], "z") == ["z", "z"]
    assert lf.void([1, 2]) == [(), ()]


def test_mk_applicative_examples():
    oa = mk_applicative(option_applicative_min())
    assert oa.lift_a2(lambda a, b: a + b, Some(1), Some(2)) == Some(3)
    assert oa.apply(NOTHING, Some(1)) is NOTHING
    la = mk_applicative(list_applicative_min())
    # cartesian product, keep the right component
    assert la.seq_right([1, 2], [10]) == [b for a, b in itertools.product([1, 2], [10])]
    assert la.seq_left([1, 2], [10, 20]) == [a for a, b in itertools.product([1, 2], [10, 20])]
    assert la.lift_a3(lambda a, b, c: a + b + c, [1, 2], [10], [100, 200]) == [
        a + b + c for a, b, c in itertools.product([1, 2], [10], [100, 200])]


def test_mk_monad_list_examples():
    m = mk_monad(list_monad_min())
    assert m.return_(3) == [3]
    func = lambda x: [x, 10 * x]  # noqa: E731
    assert m.bind([1, 2], func) == [y for x in [1, 2] for y in func(x)] == [1, 10, 2, 20]
    assert m.lift_m(inc, [1, 2]) == [2, 3]


def test_join_and_sequence():
    assert mk_monad(option_monad_min()).join(Some(Some(5))) == Some(5)
    m = mk_monad(list_monad_min())
    assert m.sequence([[1, 2], [3]]) == [list(p) for p in itertools.product([1, 2], [3])]
    assert m.sequence([]) == [[]]


def test_derived_members_on_list():
    m = mk_monad(list_monad_min())
    f = lambda x: [x, x + 1]  # noqa: E731
    g = lambda x: [x * 10]  # noqa: E731
    assert m.kleisli(f, g)(1) == [10, 20]
    assert m.kleisli_rev(g, f)(1) == [10, 20]
    assert m.then_([1, 2], ["a"]) == ["a", "a"]
    assert m.lift_m2(lambda a, b: (a, b), [1, 2], "xy") == list(itertools.product([1, 2], "xy"))
    assert m.ap([inc, dbl], [10, 20]) == [11, 21, 20, 40]
    # filterM (const [True, False]) is the powerset
    subsets = m.filter_m(lambda _: [True, False], [1, 2, 3])
    brute = [[x for x, keep in zip([1, 2, 3], mask) if keep]
             for mask in itertools.product([True, False], repeat=3)]
    assert subsets == brute
    assert m.replicate_m(2, [0, 1]) == [list(p) for p in itertools.product([0, 1], repeat=2)]
    assert m.replicate_m(0, [0, 1]) == [[]]
    with pytest.raises(ValueError):
        m.replicate_m(-1, [0])
    assert m.when_(False, [1, 2]) == [()]
    assert m.when_(True, [1, 2]) == [1, 2]
    assert m.unless_(True, [1, 2]) == [()]
    assert m.unless_(False, [1, 2]) == [1, 2]


def test_map_m_short_circuits_option():
    m = mk_monad(option_monad_min())
    seen = []

    def half(x):
        seen.append(x)
        return Some(x // 2) if x % 2 == 0 else NOTHING

    assert m.map_m(half, [2, 4, 6]) == Some([1, 2, 3])
    seen.clear()
    assert m.map_m(half, [2, 3, 4]) is NOTHING
    assert seen == [2, 3]


def test_either_filter_m_stops_at_first_error():
    m = mk_monad(either_monad_min(str))

    def check(x):
        return Err("neg %d" % x) if x < 0 else Ok(x % 2 == 0)

    assert m.filter_m(check, [1, 2, 3, 4]) == Ok([2, 4])
    assert m.filter_m(check, [1, -2, -3]) == Err("neg -2")


def test_map_m_handles_long_lists():
    n = 100_000
    assert mk_monad(option_monad_min()).map_m(Some, range(n)) == Some(list(range(n)))
    assert mk_monad(identity_monad_min()).sequence(list(range(n))) == list(range(n))


def test_forever_stops_on_failure():
    m = mk_monad(option_monad_min())
    assert m.forever(NOTHING) is NOTHING
    assert mk_monad(either_monad_min(str)).forever(Err("stop")) == Err("stop")


@given(st.lists(st.integers(-50, 50)))
def test_identity_map_m_is_map(xs):
    m = mk_monad(identity_monad_min())
    assert m.map_m(inc, xs) == [x + 1 for x in xs]
    assert m.sequence(xs) == xs


def test_app_min_to_fun_min_examples():
    lf = app_min_to_fun_min(list_applicative_min())
    assert lf.fmap(inc, [1, 2]) == [2, 3]
    of = app_min_to_fun_min(option_applicative_min())
    assert of.fmap(lambda x: x, NOTHING) is NOTHING
    assert of.fmap(dbl, Some(4)) == Some(8)


def test_mona_min_to_app_min_follows_nested_bind_order():
    la = mona_min_to_app_min(list_monad_min())
    # functions outermost, exactly as the nested binds enumerate them
    expected = [f(x) for f in [inc, dbl] for x in [10, 20]]
    assert la.apply([inc, dbl], [10, 20]) == expected == [11, 21, 20, 40]
    oa = mona_min_to_app_min(option_monad_min())
    assert oa.apply(Some(inc), NOTHING) is NOTHING
    assert oa.pure(7) == Some(7)


def test_apply_effect_order_is_function_side_first():
    from higherkind.instances import writer_monad_min, list_monoid
    w = mona_min_to_app_min(writer_monad_min(list_monoid()))
    assert w.apply((inc, ["f"]), (1, ["x"])) == (2, ["f", "x"])


def test_join_min_to_monad_min_examples():
    lm = join_min_to_monad_min(list_join_min())
    assert lm.bind([1, 2], lambda x: [x, x]) == [1, 1, 2, 2]
    om = join_min_to_monad_min(option_join_min())
    assert om.bind(NOTHING, lambda x: Some(x)) is NOTHING
    im = join_min_to_monad_min(identity_join_min())
    assert im.bind(5, inc) == 6


def test_monad_min_to_join_min_examples():
    lj = monad_min_to_join_min(list_monad_min())
    assert lj.join([[1], [2, 3]]) == [1, 2, 3]
    oj = monad_min_to_join_min(option_monad_min())
    assert oj.fmap(inc, Some(1)) == Some(2)


list_conts = st.sampled_from([lambda x: [], lambda x: [x], lambda x: [x, -x], lambda x: [x] * 3])


@given(st.lists(st.integers(-9, 9), max_size=6), list_conts, st.integers())
def test_join_bind_round_trip_on_lists(xs, k, a):
    orig = list_monad_min()
    back = join_min_to_monad_min(monad_min_to_join_min(orig))
    assert back.bind(xs, k) == orig.bind(xs, k)
    assert back.return_(a) == orig.return_(a)


@given(st.lists(st.lists(st.integers(-9, 9), max_size=4), max_size=4))
def test_bind_join_round_trip_on_lists(xss):
    orig = list_join_min()
    back = monad_min_to_join_min(join_min_to_monad_min(orig))
    assert back.join(xss) == orig.join(xss)
    flat = [x for xs in xss for x in xs]
    assert back.fmap(inc, flat) == orig.fmap(inc, flat)


def test_list_helper_fold_oracle():
    # sequence over lists equals itertools.product for random shapes
    m = mk_monad(list_monad_min())
    shapes = [[[1], [2, 3], [4, 5, 6]], [[], [1]], [[0, 1]] * 4]
    for ms in shapes:
        assert m.sequence(ms) == [list(p) for p in itertools.product(*ms)]
    assert reduce(lambda acc, x: acc + [x], [1, 2], []) == m.map_m(lambda x: [x], [1, 2])[0]
