import pytest
from hypothesis import given

from elenas.core import (
    LEAF,
    LimitExceeded,
    NotElenaShape,
    NotNondecreasing,
    chain,
    parse_dyck,
    parse_elena_word,
    parse_tree,
    render_dyck,
    render_elena_word,
    render_tree,
)
from elenas.dyck import dyck_to_tree, enumerate_trees, is_nondecreasing
from elenas.elena import (
    count_elenas,
    dyck_to_word,
    enumerate_elenas,
    fibonacci,
    is_elena_shape,
    tree_to_word,
    word_to_dyck,
    word_to_tree,
)

from conftest import trees, words

NON_ELENA_5 = parse_tree("((()())())")


def test_word_to_tree_examples():
    assert word_to_tree(parse_elena_word("a")) == LEAF
    assert word_to_tree(parse_elena_word("a p2 a")) == parse_tree("((())())")
    assert word_to_tree(parse_elena_word("a p1 p1 a")) == parse_tree("(()()())")


def test_tree_to_word_examples():
    assert render_elena_word(tree_to_word(LEAF)) == "a"
    assert render_elena_word(tree_to_word(parse_tree("(()(()(()())))"))) == "a p1 a p1 a p1 a"
    with pytest.raises(NotElenaShape):
        tree_to_word(NON_ELENA_5)


def test_shape_predicate():
    assert all(is_elena_shape(chain(m)) for m in range(1, 8))
    assert not is_elena_shape(NON_ELENA_5)
    # the only non-Elena among the 14 trees of size 5
    assert [render_tree(t) for t in enumerate_trees(5) if not is_elena_shape(t)] == ["((()())())"]


def test_word_dyck_examples():
    assert render_dyck(word_to_dyck(parse_elena_word("a"))) == ""
    assert render_dyck(word_to_dyck(parse_elena_word("a p1 a p1 a p1 a"))) == "UDUUDUUDUDDD"
    with pytest.raises(NotNondecreasing):
        dyck_to_word(parse_dyck("UUDUDDUD"))


def test_enumerate_small():
    assert [str(w) for w in enumerate_elenas(1)] == ["a"]
    assert {str(w) for w in enumerate_elenas(4)} == {
        "a a a a", "a p2 a", "a p1 a a", "a p1 p1 a", "a a p1 a",
    }
    assert len(list(enumerate_elenas(6))) == 34


def test_enumeration_order_is_text_order():
    for n in range(1, 12):
        texts = [str(w) for w in enumerate_elenas(n)]
        assert texts == sorted(texts)
        assert len(set(texts)) == len(texts)
    # multi-digit lengths sort as text
    texts = [str(w) for w in enumerate_elenas(12)]
    assert texts.index("a p10 a") < texts.index("a p2 p1 p1 p1 p1 p1 p1 p1 p1 a")


def test_enumeration_limit():
    with pytest.raises(LimitExceeded):
        next(enumerate_elenas(17))


def test_count_values():
    assert [count_elenas(n) for n in range(1, 9)] == [1, 1, 2, 5, 13, 34, 89, 233]


@pytest.mark.parametrize("n", range(1, 11))
def test_count_against_tree_filter(n):
    # independent oracle: filter all planted plane trees by the shape predicate
    assert count_elenas(n) == sum(map(is_elena_shape, enumerate_trees(n)))


def test_count_is_odd_fibonacci():
    for n in range(2, 51):
        assert count_elenas(n) == fibonacci(2 * n - 3)
    assert fibonacci(1) == fibonacci(2) == 1


@given(words)
def test_word_tree_round_trip(w):
    t = word_to_tree(w)
    assert t.size == w.size
    assert is_elena_shape(t)
    assert tree_to_word(t) == w


@given(words)
def test_word_dyck_round_trip(w):
    p = word_to_dyck(w)
    assert is_nondecreasing(p)
    assert dyck_to_word(p) == w


@given(trees)
def test_shape_iff_nondecreasing(t):
    from elenas.dyck import tree_to_dyck

    assert is_elena_shape(t) == is_nondecreasing(tree_to_dyck(t))


@given(trees)
def test_shape_iff_word_exists(t):
    if is_elena_shape(t):
        assert word_to_tree(tree_to_word(t)) == t
    else:
        with pytest.raises(NotElenaShape):
            tree_to_word(t)


def test_spine_is_last_child():
    w = parse_elena_word("a p5 p3 p1 a p4 a a p3 p1 p1 a")
    t = word_to_tree(w)
    assert t.degree == 4
    assert [c.size for c in t.children[:-1]] == [5, 3, 1]
    spine = 1
    while t.children:
        t = t.children[-1]
        spine += 1
    assert spine == 5
    assert dyck_to_tree(word_to_dyck(w)) == word_to_tree(w)
