import pytest

from turlex import Dictionary, LexiconResources, SuffixStemmer

# Filled by test_acceptance.py; echoed after the run so every criterion
# shows one visible pass/fail line even though pytest captures stdout.
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def bundled():
    return LexiconResources.bundled()


@pytest.fixture()
def tiny_dict():
    d = Dictionary()
    for word, freq in [
        ("çok", 900),
        ("güzel", 700),
        ("film", 800),
        ("kötü", 500),
        ("şok", 120),
        ("anne", 60),
        ("görüşürüz", 40),
        ("gelirim", 300),
        ("geldim", 200),
        ("geliyorum", 100),
    ]:
        d.add(word, freq)
    return d


@pytest.fixture()
def tiny_resources(tiny_dict):
    return LexiconResources(
        dictionary=tiny_dict,
        stopwords=frozenset({"ve", "bir", "bu"}),
        abbreviations={"slm": "selam", "grz": "görüşürüz"},
        stemmer=SuffixStemmer(["ler", "lar", "di", "dı"]),
    )
