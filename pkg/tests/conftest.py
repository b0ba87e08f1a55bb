from fractions import Fraction

import hypothesis
from hypothesis import strategies as st

from gcrystal.datatypes import GTPattern, MatrixGrid, gt_indices

hypothesis.settings.register_profile("default", max_examples=25, deadline=None)
hypothesis.settings.register_profile("ci", max_examples=100, deadline=None)
hypothesis.settings.load_profile("default")


###########
# Strategies
###########

positive_rationals = st.builds(Fraction, st.integers(1, 12), st.integers(1, 12))


@st.composite
def grids(draw: st.DrawFn, m_max: int = 3, n_max: int = 3, m_min: int = 1, n_min: int = 1) -> MatrixGrid:
    m = draw(st.integers(m_min, m_max))
    n = draw(st.integers(n_min, n_max))
    return MatrixGrid(tuple(tuple(draw(positive_rationals) for _ in range(n)) for _ in range(m)))


@st.composite
def patterns(draw: st.DrawFn, m_max: int = 3, n_max: int = 3, n_min: int = 1) -> GTPattern:
    m = draw(st.integers(1, m_max))
    n = draw(st.integers(n_min, n_max))
    return GTPattern(m, n, {k: draw(positive_rationals) for k in gt_indices(m, n)})


@st.composite
def int_matrices(
    draw: st.DrawFn, m_max: int = 3, n_max: int = 3, entry_max: int = 3, m_min: int = 1, n_min: int = 1
) -> list[list[int]]:
    m = draw(st.integers(m_min, m_max))
    n = draw(st.integers(n_min, n_max))
    return [[draw(st.integers(0, entry_max)) for _ in range(n)] for _ in range(m)]
