from math import gcd

from hypothesis import strategies as st

from rmtorus.lattice import KVector, SL2Matrix

_S = SL2Matrix(0, -1, 1, 0)
_T = SL2Matrix(1, 1, 0, 1)
_TI = SL2Matrix(1, -1, 0, 1)


@st.composite
def sl2(draw, max_len: int = 12):
    word = draw(st.lists(st.sampled_from([_S, _T, _TI]), min_size=0, max_size=max_len))
    g = SL2Matrix.identity()
    for h in word:
        g = g @ h
    return g


small = st.integers(min_value=-40, max_value=40)
vectors = st.builds(KVector, small, small)
nonzero_vectors = vectors.filter(lambda v: not v.is_zero())
primitive_vectors = vectors.filter(lambda v: gcd(v.deg, v.rk) == 1)
