import pytest
from hypothesis import given, settings

from mubar.checks import derived_series_words
from mubar.series import (
    GradedSeries,
    SeriesError,
    TruncatedSeries,
    coefficient,
    coefficients,
    format_series,
    lcs_residue_degree,
    magnus_expand,
)
from mubar.words import Word, commutator

from conftest import monomials, words


def test_commutator_expansion():
    s = magnus_expand(commutator(Word((1,), 2), Word((2,), 2)), 3)
    assert format_series(s) == "1 + 1·X1X2 − 1·X2X1"


def test_inverse_generator_series():
    s = magnus_expand(Word((-1,), 1), 5)
    assert [s[(1,) * k] for k in range(5)] == [1, -1, 1, -1, 1]


def test_truncation_is_enforced():
    with pytest.raises(SeriesError):
        TruncatedSeries(2, 2, {(1, 2): 1})


@settings(max_examples=1000)
@given(words(), words())
def test_magnus_homomorphism(u, v):
    assert magnus_expand(u * v, 5) == magnus_expand(u, 5) * magnus_expand(v, 5)


@settings(max_examples=1000)
@given(words())
def test_magnus_inverse(w):
    one = TruncatedSeries.one(3, 5)
    assert magnus_expand(w, 5) * magnus_expand(w.inverse(), 5) == one
    assert GradedSeries.from_word(w, 3, 5) * GradedSeries.from_word(w.inverse(), 3, 5) == GradedSeries.one(3, 5)


@settings(max_examples=500)
@given(words(max_len=16), monomials(max_deg=5))
def test_dp_matches_full_series(w, mono):
    assert coefficient(w, mono) == magnus_expand(w, len(mono) + 1)[mono]


@given(words(max_len=10))
def test_dense_and_sparse_agree(w):
    g = GradedSeries.from_word(w, 3, 4)
    assert g.to_truncated() == magnus_expand(w, 4)
    assert GradedSeries.from_truncated(magnus_expand(w, 4)) == g


@given(words(max_len=10), words(max_len=10))
def test_dense_product(u, v):
    assert (GradedSeries.from_word(u, 3, 4) * GradedSeries.from_word(v, 3, 4)).to_truncated() == magnus_expand(u * v, 4)


def test_batch_coefficients_both_paths():
    w = Word((1, 2, -1, -2) * 40, 2)
    monos = [(1, 2), (2, 1), (1, 2, 1, 2), ()]
    assert coefficients(w, monos) == [coefficient(w, m) for m in monos]


def test_coefficient_of_empty_monomial():
    assert coefficient(Word((1, 2, 3), 3), ()) == 1


def test_nested_commutator_residue_degrees():
    assert [lcs_residue_degree(w, 10) for w in derived_series_words()] == [2, 4, 8]


def test_residue_of_identity_is_none():
    assert lcs_residue_degree(Word((), 2), 6) is None
    assert lcs_residue_degree(Word((1,), 2), 6) == 1
