import pytest
from hypothesis import given, strategies as st

import bibliometry.collab as collab
from bibliometry.corpus import Corpus, Subfield
from bibliometry.errors import InsufficientDataError
from bibliometry.testkit import oracle_pair_counts
from tests.conftest import make_work


# --- collaboration index -------------------------------------------------

def test_ci_mean_identity_small(default_windows):
    works = [make_work("W1", authors=("a",)),
             make_work("W2", authors=("a", "b")),
             make_work("W3", authors=("a", "b", "c"))]
    corpus = Corpus.from_works(works, default_windows)
    assert collab.collaboration_index(corpus, None, Subfield.AI) == 2.0


def test_ci_single_author_corpus(default_windows):
    works = [make_work(f"W{i}", authors=("solo",)) for i in range(5)]
    corpus = Corpus.from_works(works, default_windows)
    assert collab.collaboration_index(corpus, None, Subfield.AI) == 1.0


def test_ci_empty_scope(tiny_corpus):
    with pytest.raises(InsufficientDataError):
        collab.collaboration_index(tiny_corpus, None, Subfield.NLP)


@given(st.lists(st.integers(1, 12), min_size=1, max_size=30))
def test_ci_equals_plain_mean(sizes):
    """Frequency-form CI agrees with the plain mean to 1e-12."""
    works = [make_work(f"W{i}", authors=tuple(f"a{i}_{j}" for j in range(n)))
             for i, n in enumerate(sizes)]
    from bibliometry.corpus import make_window_partition
    corpus = Corpus.from_works(works, make_window_partition(2000, 2024, 5))
    ci = collab.collaboration_index(corpus, None, Subfield.AI)
    assert ci == pytest.approx(sum(sizes) / len(sizes), abs=1e-12)


# --- international collaboration -----------------------------------------

def test_pair_ratio_two_countries():
    work = make_work("W1", authors=("a", "b"), countries=("CN", "US"))
    assert collab.international_pair_ratio(work) == 1.0


def test_pair_ratio_two_thirds():
    work = make_work("W1", authors=("a", "b", "c"), countries=("CN", "CN", "US"))
    assert collab.international_pair_ratio(work) == pytest.approx(2 / 3)


def test_pair_ratio_all_domestic():
    work = make_work("W1", authors=tuple("abcd"), countries=("DE",) * 4)
    assert collab.international_pair_ratio(work) == 0.0


def test_pair_ratio_unknown_countries_excluded():
    work = make_work("W1", authors=("a", "b", "c"),
                     countries=("CN", "unknown", "US"))
    assert collab.international_pair_ratio(work) == 1.0  # only CN-US pair


def test_pair_ratio_undefined_below_two_known():
    work = make_work("W1", authors=("a", "b"), countries=("CN", "unknown"))
    assert collab.international_pair_ratio(work) is None


@given(st.lists(st.sampled_from(["CN", "US", "GB", "DE"]), min_size=2, max_size=8))
def test_pair_ratio_matches_oracle_and_permutation_invariant(countries):
    authors = tuple(f"a{i}" for i in range(len(countries)))
    work = make_work("W1", authors=authors, countries=tuple(countries))
    total, cross = oracle_pair_counts(countries)
    assert collab.international_pair_ratio(work) == pytest.approx(cross / total)
    reordered = make_work("W2", authors=authors,
                          countries=tuple(reversed(countries)))
    assert collab.international_pair_ratio(reordered) == \
        pytest.approx(cross / total)


def test_international_rates(default_windows):
    works = [make_work("W1", authors=("a", "b"), countries=("CN", "CN")),
             make_work("W2", authors=("c", "d"), countries=("CN", "US"))]
    corpus = Corpus.from_works(works, default_windows)
    simple, pair_mean = collab.international_rates(corpus, None, Subfield.AI)
    assert simple == 0.5
    assert pair_mean == 0.5


def test_international_rates_all_domestic(default_windows):
    works = [make_work("W1", authors=("a", "b"), countries=("CN", "CN"))]
    corpus = Corpus.from_works(works, default_windows)
    assert collab.international_rates(corpus, None, Subfield.AI) == (0.0, 0.0)


# --- country pair matrix --------------------------------------------------

def test_country_pairs_cn_us_us(default_windows):
    work = make_work("W1", authors=("a", "b", "c"), countries=("CN", "US", "US"))
    corpus = Corpus.from_works([work], default_windows)
    matrix = collab.country_pair_matrix(corpus)
    assert matrix.count("CN", "US") == 2
    assert matrix.count("US", "CN") == 2   # symmetric access
    assert matrix.count("US", "US") == 0   # same-country pairs never counted


def test_country_pairs_same_country_work(default_windows):
    work = make_work("W1", authors=("a", "b"), countries=("CN", "CN"))
    corpus = Corpus.from_works([work], default_windows)
    assert collab.country_pair_matrix(corpus).total_pairs == 0


def test_country_pairs_additive_across_works(default_windows):
    works = [make_work("W1", authors=("a", "b"), countries=("CN", "GB")),
             make_work("W2", authors=("c", "d"), countries=("GB", "CN"))]
    corpus = Corpus.from_works(works, default_windows)
    matrix = collab.country_pair_matrix(corpus)
    assert matrix.count("CN", "GB") == 2
    # matrix total equals the summed per-work cross-pair counts
    per_work = sum(oracle_pair_counts(["CN", "GB"])[1] for _ in works)
    assert matrix.total_pairs == per_work


# --- industry -------------------------------------------------------------

def test_industry_rate_quarter(default_windows):
    works = [make_work(f"W{i}", authors=("a",), industry=(i == 0,))
             for i in range(4)]
    corpus = Corpus.from_works(works, default_windows)
    assert collab.industry_rate(corpus, None, Subfield.AI) == 0.25


def test_industry_rate_zero(tiny_corpus):
    assert collab.industry_rate(tiny_corpus, None, Subfield.AI) == 0.0


def test_top_collaborators_ranking(default_windows):
    works = [
        make_work(f"W{i}", authors=("a", "b"), industry=(True, False),
                  organizations=("Google Research", "Some University"))
        for i in range(3)
    ]
    works.append(make_work("W9", authors=("c",), industry=(True,),
                           organizations=("Adobe Research",)))
    corpus = Corpus.from_works(works, default_windows)
    top = collab.top_industry_collaborators(corpus, Subfield.AI, k=5)
    assert top[0] == ("google research", 3)
    assert top[1] == ("adobe research", 1)


def test_top_collaborators_per_work_dedup(default_windows):
    work = make_work("W1", authors=("a", "b"), industry=(True, True),
                     organizations=("Google Research", "Google Research"))
    corpus = Corpus.from_works([work], default_windows)
    assert collab.top_industry_collaborators(corpus, Subfield.AI, k=5) == \
        [("google research", 1)]


def test_top_collaborators_tie_breaks_lexicographically(default_windows):
    works = [
        make_work("W1", authors=("a",), industry=(True,),
                  organizations=("Zeta Systems",)),
        make_work("W2", authors=("b",), industry=(True,),
                  organizations=("Acme Robotics",)),
    ]
    corpus = Corpus.from_works(works, default_windows)
    top = collab.top_industry_collaborators(corpus, Subfield.AI, k=2)
    assert top == [("acme robotics", 1), ("zeta systems", 1)]


def test_top_collaborators_no_padding(default_windows):
    work = make_work("W1", authors=("a",), industry=(True,),
                     organizations=("Adobe Research",))
    corpus = Corpus.from_works([work], default_windows)
    assert len(collab.top_industry_collaborators(corpus, Subfield.AI, k=15)) == 1


def test_org_normalization():
    assert collab.normalize_org_name("  Google   Research, Inc. ") == \
        "google research inc"
