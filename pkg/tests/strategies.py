"""Shared hypothesis strategies."""

from fractions import Fraction

from hypothesis import strategies as st

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
small_rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)
nonzero_rationals = rationals.filter(lambda r: r != 0)


def rational_lists(min_size=0, max_size=8):
    return st.lists(small_rationals, min_size=min_size, max_size=max_size)


def frac(*args):
    return Fraction(*args)
