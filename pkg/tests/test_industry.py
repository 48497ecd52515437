import pytest

from bibliometry.harvest import IndustryKeywordList, classify_industry


@pytest.fixture(scope="module")
def default_keywords():
    return IndustryKeywordList.default()


def test_shipped_list_has_171_unique_terms(default_keywords):
    assert len(default_keywords.keywords) == 171
    assert len(set(default_keywords.keywords)) == 171


def test_google_affiliation_matches(default_keywords):
    assert classify_industry("Google Research, Mountain View", default_keywords)


def test_boundary_rule_blocks_incheon():
    keywords = IndustryKeywordList(["inc"])
    assert not classify_industry("University of Incheon", keywords)
    assert classify_industry("Widgets Inc., Delaware", keywords)


def test_short_term_boundaries(default_keywords):
    # "tech" must not fire inside an unrelated longer word
    assert not classify_industry("Pyrotechnics Society", IndustryKeywordList(["tech"]))
    assert classify_industry("Georgia Tech", IndustryKeywordList(["tech"]))


def test_substring_match_for_long_terms():
    keywords = IndustryKeywordList(["corporation"])
    assert classify_industry("Example Corporation of London", keywords)


def test_empty_affiliation(default_keywords):
    assert not classify_industry("", default_keywords)


def test_case_insensitive(default_keywords):
    assert classify_industry("HUAWEI TECHNOLOGIES CO., LTD.", default_keywords)


def test_empty_keyword_list_rejected():
    with pytest.raises(ValueError):
        IndustryKeywordList([])


def test_duplicate_keywords_rejected():
    with pytest.raises(ValueError):
        IndustryKeywordList(["google", "Google"])


def test_keyword_file_roundtrip(tmp_path):
    path = tmp_path / "kw.txt"
    path.write_text("# comment\nacme robotics\nmegacorp\n")
    keywords = IndustryKeywordList.from_file(path)
    assert keywords.keywords == ["acme robotics", "megacorp"]
    assert len(keywords.sha256) == 64
    assert classify_industry("ACME Robotics GmbH", keywords)
