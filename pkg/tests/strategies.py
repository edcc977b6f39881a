"""Hypothesis strategies shared by the property suites."""

from hypothesis import strategies as st

from fixtrace.groupring import GroupRingElement
from fixtrace.grmatrix import GRMatrix


def words(rank=2, max_size=8):
    return st.lists(st.tuples(st.integers(0, rank - 1), st.sampled_from([1, -1])),
                    max_size=max_size).map(tuple)


def group_ring_elements(group, elements, max_terms=4, coeff=3):
    return st.dictionaries(elements, st.integers(-coeff, coeff), max_size=max_terms).map(
        lambda d: GroupRingElement(group, d))


def finite_elements(group, max_terms=4, coeff=3):
    return group_ring_elements(group, st.integers(0, group.order - 1), max_terms, coeff)


def gr_matrices(group, rows, cols, max_terms=2, coeff=2):
    return st.lists(st.lists(finite_elements(group, max_terms, coeff), min_size=cols, max_size=cols),
                    min_size=rows, max_size=rows).map(lambda r: GRMatrix(group, rows, cols, r))


def int_matrices(max_rows=4, max_cols=4, bound=6):
    return st.integers(0, max_rows).flatmap(lambda r: st.integers(0, max_cols).flatmap(
        lambda c: st.lists(st.lists(st.integers(-bound, bound), min_size=c, max_size=c),
                           min_size=r, max_size=r).map(lambda rows: (r, c, rows))))
