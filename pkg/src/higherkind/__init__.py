"""Constructor classes (Functor, Applicative, Monad, Alternative,
MonadZeroPlus) as explicit bundles of functions.

Write ``return_`` and ``bind``; ``mk_monad`` derives the rest, including the
Applicative and Functor instances.
"""
from .alt import (
    Alter, AlterMin, Monad0p, Monad0pMin, m0p_min_to_alter_min, m0p_min_to_monad_min,
    mk_alter, mk_monad0p,
)
from .combine import cons_prod, fold_m
from .core import (
    NOTHING, Applicative, ApplicativeMin, ConstructorTag, Err, FoldableMin, Functor,
    FunctorMin, JoinMin, Monad, MonadMin, MonoidMin, Nothing, Ok, Some, members,
    with_overrides,
)
from .elaborate import (
    app_min_to_fun_min, join_min_to_monad_min, mk_applicative, mk_functor, mk_monad,
    mona_min_to_app_min, monad_min_to_join_min,
)
from .transform import ExceptTMonadMin, StateTMonadMin, TransformedMonadMin, except_t, state_t

__version__ = "0.1.0"
