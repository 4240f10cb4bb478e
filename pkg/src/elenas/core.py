"""Domain types, error classes and the three text codecs.

Text formats:

* Dyck paths: a word over ``U``/``D`` (canonical) or ``(``/``)`` (input only).
* Trees: balanced parentheses, a node is ``"(" + children + ")"``.
* Elena words: space-separated tokens ``a`` and ``p<k>`` (k >= 1) matching
  ``(a p*)* a``.
"""

from __future__ import annotations

import re
from dataclasses import asdict, dataclass
from functools import cached_property


class ElenaError(ValueError):
    """Base class for every error raised by this package."""


class ParseError(ElenaError):
    pass


class NonBalanced(ParseError):
    pass


class BadAlphabet(ParseError):
    pass


class TrailingGarbage(ParseError):
    pass


class GrammarViolation(ParseError):
    pass


class BadToken(ParseError):
    pass


class LimitExceeded(ElenaError):
    pass


class NotElenaShape(ElenaError):
    pass


class NotNondecreasing(ElenaError):
    pass


class TooTall(ElenaError):
    pass


class BudgetExceeded(ElenaError):
    pass


class IdentityViolated(ElenaError):
    """A generating-function identity failed; carries the first bad coefficient."""

    def __init__(self, name: str, index, expected, actual):
        self.name = name
        self.index = index
        self.expected = expected
        self.actual = actual
        super().__init__(f"{name}: coefficient {index}: expected {expected}, got {actual}")


@dataclass(frozen=True)
class Limits:
    """Enumeration and computation budgets."""

    dyck: int = 12  # max semilength for enumerate_dyck_paths
    words: int = 16  # max Elena size for enumerate_elenas
    bivariate: int = 10  # max z-order for the brute-force psi distribution
    series: int = 2000  # max n for averages / asymptotics


DEFAULT_LIMITS = Limits()


# ---------------------------------------------------------------------------
# Dyck paths


@dataclass(frozen=True)
class DyckPath:
    steps: str = ""

    def __post_init__(self):
        if set(self.steps) - {"U", "D"}:
            raise BadAlphabet(f"steps must be over 'UD': {self.steps!r}")
        level = 0
        for i, s in enumerate(self.steps):
            level += 1 if s == "U" else -1
            if level < 0:
                raise NonBalanced(f"path dips below zero at step {i}")
        if level != 0:
            raise NonBalanced(f"path ends at height {level}")

    def __len__(self):
        return len(self.steps)

    def __str__(self):
        return self.steps

    @property
    def semilength(self) -> int:
        return len(self.steps) // 2


def parse_dyck(text: str) -> DyckPath:
    chars = set(text)
    if chars <= {"U", "D"}:
        return DyckPath(text)
    if chars <= {"(", ")"}:
        return DyckPath(text.replace("(", "U").replace(")", "D"))
    raise BadAlphabet(f"expected a word over 'UD' or '()': {text!r}")


def render_dyck(path: DyckPath) -> str:
    return path.steps


# ---------------------------------------------------------------------------
# Planted plane trees


@dataclass(frozen=True)
class Tree:
    """Planted plane tree: a node with an ordered tuple of child subtrees."""

    children: tuple[Tree, ...] = ()

    @cached_property
    def size(self) -> int:
        return 1 + sum(c.size for c in self.children)

    @cached_property
    def height(self) -> int:
        """Number of nodes on the longest root-to-leaf path."""
        return 1 + max((c.height for c in self.children), default=0)

    @property
    def degree(self) -> int:
        return len(self.children)

    def __str__(self):
        return render_tree(self)


PlantedPlaneTree = Tree

LEAF = Tree()


def chain(m: int) -> Tree:
    """A path of ``m`` nodes, each with at most one child."""
    if m < 1:
        raise ValueError("chain needs at least one node")
    t = LEAF
    for _ in range(m - 1):
        t = Tree((t,))
    return t


def is_chain(t: Tree) -> bool:
    while t.children:
        if len(t.children) > 1:
            return False
        t = t.children[0]
    return True


def parse_tree(text: str) -> Tree:
    if not text:
        raise NonBalanced("empty text is not a tree")
    if set(text) - {"(", ")"}:
        raise BadAlphabet(f"tree text must be over '()': {text!r}")
    if text[0] != "(":
        raise NonBalanced("tree text must start with '('")
    stack: list[list[Tree]] = []
    for i, ch in enumerate(text):
        if ch == "(":
            stack.append([])
            continue
        if not stack:
            raise TrailingGarbage(f"unexpected ')' at offset {i}")
        node = Tree(tuple(stack.pop()))
        if not stack:
            if i != len(text) - 1:
                raise TrailingGarbage(f"text continues after the tree at offset {i + 1}")
            return node
        stack[-1].append(node)
    raise NonBalanced(f"{len(stack)} unclosed '('")


def render_tree(t: Tree) -> str:
    out: list[str] = []
    # explicit stack: chains of a few thousand nodes must not hit the recursion limit
    todo: list[Tree | None] = [t]
    while todo:
        node = todo.pop()
        if node is None:
            out.append(")")
            continue
        out.append("(")
        todo.append(None)
        todo.extend(reversed(node.children))
    return "".join(out)


# ---------------------------------------------------------------------------
# Elena words

_P_TOKEN = re.compile(r"p([1-9][0-9]*)")


@dataclass(frozen=True)
class ElenaWord:
    """A word of ``(a p*)* a``: one tuple of path lengths per ``(a p*)`` factor.

    The terminating ``a`` is implicit, so ``ElenaWord(())`` is the single node.
    """

    blocks: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(tuple(b) for b in self.blocks))
        for b in self.blocks:
            for m in b:
                if not isinstance(m, int) or m < 1:
                    raise BadToken(f"path lengths must be integers >= 1, got {m!r}")

    @property
    def size(self) -> int:
        return 1 + len(self.blocks) + sum(sum(b) for b in self.blocks)

    def tokens(self) -> list[str]:
        out = []
        for b in self.blocks:
            out.append("a")
            out.extend(f"p{m}" for m in b)
        out.append("a")
        return out

    def __str__(self):
        return render_elena_word(self)


def parse_elena_word(text: str) -> ElenaWord:
    if not text:
        raise GrammarViolation("empty word; the smallest word is 'a'")
    tokens = text.split(" ")
    blocks: list[list[int]] = []
    for i, tok in enumerate(tokens):
        if tok == "a":
            blocks.append([])
            continue
        m = _P_TOKEN.fullmatch(tok)
        if m is None:
            if re.fullmatch(r"p0+", tok):
                raise BadToken(f"path length must be >= 1 in token {i}: {tok!r}")
            raise BadToken(f"bad token {i}: {tok!r}")
        if not blocks:
            raise GrammarViolation("word must start with 'a'")
        blocks[-1].append(int(m.group(1)))
    if tokens[-1] != "a":
        raise GrammarViolation("word must end with 'a'")
    blocks.pop()  # the terminating 'a' opens no block
    return ElenaWord(tuple(tuple(b) for b in blocks))


def render_elena_word(w: ElenaWord) -> str:
    return " ".join(w.tokens())


# ---------------------------------------------------------------------------
# Statistics record


@dataclass(frozen=True)
class StatRecord:
    root_degree: int
    leaves: int
    height: int
    psi: int
    path_length: int
    paths: int
    spine_nodes: int
    path_nodes: int

    def as_dict(self) -> dict[str, int]:
        return asdict(self)
