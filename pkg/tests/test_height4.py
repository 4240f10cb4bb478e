import pytest
from hypothesis import given

from elenas.core import LEAF, TooTall, chain, parse_elena_word, parse_tree, render_tree
from elenas.dyck import enumerate_trees
from elenas.elena import enumerate_elenas
from elenas.height4 import elena_to_height4, height4_to_elena, interpret_path

from conftest import trees, words

FIGURE7 = [
    ("a a a a", "(()()())"),
    ("a p2 a", "(((())))"),
    ("a p1 a a", "((())())"),
    ("a p1 p1 a", "((()()))"),
    ("a a p1 a", "(()(()))"),
]


def test_interpret_path():
    assert interpret_path(1) == LEAF
    assert interpret_path(5) == parse_tree("(()()()())")
    assert interpret_path(2) == parse_tree("(())")


@pytest.mark.parametrize("word,tree", FIGURE7)
def test_figure7(word, tree):
    w = parse_elena_word(word)
    assert render_tree(elena_to_height4(w)) == tree
    assert height4_to_elena(parse_tree(tree)) == w


def test_inverse_examples():
    assert str(height4_to_elena(LEAF)) == "a"
    with pytest.raises(TooTall):
        height4_to_elena(chain(5))


@given(words)
def test_round_trip(w):
    t = elena_to_height4(w)
    assert t.size == w.size
    assert t.height <= 4
    assert height4_to_elena(t) == w


@given(trees)
def test_inverse_round_trip(t):
    if t.height <= 4:
        assert elena_to_height4(height4_to_elena(t)) == t
    else:
        with pytest.raises(TooTall):
            height4_to_elena(t)


@pytest.mark.parametrize("n", range(1, 10))
def test_image_is_all_short_trees(n):
    image = [elena_to_height4(w) for w in enumerate_elenas(n)]
    assert len(set(image)) == len(image)
    assert set(image) == {t for t in enumerate_trees(n) if t.height <= 4}
