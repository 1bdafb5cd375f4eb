import pytest

from ulrich_kit.cli.corpus import CORPUS_IDS, builtin_corpus, corpus_text, load_corpus
from ulrich_kit.cli.session import SessionError, parse_session
from ulrich_kit.modules import same_normalized_presentation

GOOD = """\
# a comment
[ring]
char = 32003
vars = x, y
relations = x^2 + y^4   # trailing comment
dim = 1

[ideal I]
gens = x, y^2
Q = x

[module N]
kind = presentation
matrix = x, y^2
"""


def test_parse_and_build():
    s = parse_session(GOOD)
    W = s.build()
    assert W.ring.dim == 1
    assert W.module("N").length() == 2
    assert W.module("I").num_gens == 2     # an ideal name works as a module


@pytest.mark.parametrize("cid", [c for c in CORPUS_IDS])
def test_corpus_roundtrip(cid):
    s = load_corpus(cid)
    again = parse_session(s.to_text(), name=cid)
    assert again.ring == s.ring and again.ideals == s.ideals and again.modules == s.modules


def test_roundtrip_preserves_modules():
    a = load_corpus("sec6").build()
    b = parse_session(load_corpus("sec6").to_text()).build()
    assert same_normalized_presentation(a.module("ImPhi"), b.module("ImPhi"))


def test_builtin_corpus_skips_alias():
    ids = [cid for cid, _ in builtin_corpus()]
    assert "ex5.17" not in ids and "sec6" in ids
    assert corpus_text("ex5.17") == corpus_text("ex2.6ii-d1s2")


@pytest.mark.parametrize("text,needle", [
    ("[ring]\nvars = x\n[ideal I]\nQ = x\n", "ideal requires gens"),
    ("[ring]\nvars = x\n[ideal I]\ngens = w\n", "w"),
    ("[ring]\nchar = 32001\nvars = x\n", "not prime"),
    ("[ring]\nvars = x, y\n[module M]\nkind = image\nmatrix = x, y; x\n", "not rectangular"),
    ("[ring]\nvars = x\n[module M]\nkind = dual\nof = N\n", "unknown"),
    ("[ring]\nvars = x\n[module M]\nkind = blob\n", "unknown kind"),
    ("vars = x\n", "outside of a block"),
    ("[ring]\nvars = x\n[ring]\nvars = y\n", "duplicate [ring]"),
    ("[ring]\nvars = x\n[ideal I]\ngens = x\n[module I]\nkind = free\nrank = 1\n", "defined twice"),
])
def test_errors(text, needle):
    with pytest.raises(SessionError) as e:
        parse_session(text)
    assert needle in str(e.value)


def test_error_carries_line():
    with pytest.raises(SessionError) as e:
        parse_session("[ring]\nvars = x\n\n[ideal I]\nQ = x\n")
    assert e.value.line == 4


def test_cycle_is_reported():
    s = parse_session("[ring]\nvars = x\n[module A]\nkind = dual\nof = B\n"
                      "[module B]\nkind = dual\nof = A\n")
    with pytest.raises(SessionError) as e:
        s.build().module("A")
    assert "A -> B -> A" in str(e.value)
