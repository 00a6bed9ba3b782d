"""Permutation words and the primitive moves every family is built from.

A word is a tuple (x_0, ..., x_{n-1}) that is a permutation of 0..n-1.
Symbols are single digits, which caps the degree at 10 and keeps the text
form "x_0x_1...x_{n-1}" unambiguous.
"""

from __future__ import annotations

import itertools
from math import factorial

Word = tuple[int, ...]

MAX_DEGREE = 10


def check_word(w: Word) -> None:
    """Raise ValueError unless w is a permutation of 0..n-1 with 2 <= n <= 10."""
    n = len(w)
    if not 2 <= n <= MAX_DEGREE:
        raise ValueError(f"degree {n} outside supported range 2..{MAX_DEGREE}")
    if sorted(w) != list(range(n)):
        raise ValueError(f"not a permutation word: {w!r}")


def word_from_text(text: str) -> Word:
    """Parse a digit string such as "30142" into a word.

    >>> word_from_text("1320")
    (1, 3, 2, 0)
    """
    stripped = text.strip()
    if not stripped.isdigit():
        raise ValueError(f"not a digit string: {text!r}")
    w = tuple(int(c) for c in stripped)
    check_word(w)
    return w


def word_to_text(w: Word) -> str:
    return "".join(str(x) for x in w)


def all_words(n: int) -> list[Word]:
    """All degree-n words in lexicographic order."""
    return list(itertools.permutations(range(n)))


def even_words(n: int) -> list[Word]:
    """The even degree-n words (the alternating group), lexicographic."""
    return [w for w in all_words(n) if is_even(w)]


def inversion_count(w: Word) -> int:
    n = len(w)
    return sum(1 for a in range(n) for b in range(a + 1, n) if w[a] > w[b])


def is_even(w: Word) -> bool:
    return inversion_count(w) % 2 == 0


def parity(w: Word) -> str:
    """Inversion-count parity of a word: "even" or "odd".

    >>> parity((1, 0, 3, 2))
    'even'
    """
    check_word(w)
    return "even" if is_even(w) else "odd"


def apply_star_gen(w: Word, i: int, direction: str = "forward") -> Word:
    """Follow one arc of the order-3 generator that rotates positions 0, 1, i.

    Forward gives y with y_0 = x_i, y_1 = x_0, y_i = x_1 and all other
    positions fixed; inverse undoes one forward step.  Three forward steps
    return the argument, so each generator closes a directed triangle
    through every vertex.

    >>> word_to_text(apply_star_gen(word_from_text("0123"), 3))
    '3021'
    """
    n = len(w)
    if not 2 <= i <= n - 1:
        raise ValueError(f"generator index {i} outside 2..{n - 1}")
    y = list(w)
    if direction == "forward":
        y[0], y[1], y[i] = w[i], w[0], w[1]
    elif direction == "inverse":
        y[0], y[1], y[i] = w[1], w[i], w[0]
    else:
        raise ValueError(f"direction must be 'forward' or 'inverse', got {direction!r}")
    return tuple(y)


def shift_symbol(x: int, i: int, n: int) -> int:
    """Shift a symbol of 0..n-1 past the insertion value i: x below i is kept,
    x at or above i moves up by one.  The output never equals i."""
    if not 0 <= x < n:
        raise ValueError(f"symbol {x} outside 0..{n - 1}")
    if not 0 <= i <= n:
        raise ValueError(f"insertion symbol {i} outside 0..{n}")
    return x if x < i else x + 1


def embed_orientation(i: int, j: int) -> str:
    """Orientation class of the (i, j) insertion embedding: "plus" when arcs
    are preserved, "minus" when they are reversed; decided by parity of i+j."""
    return "minus" if (i + j) % 2 else "plus"


def insert_embed(w: Word, i: int, j: int) -> Word:
    """Embed an even degree-n word into degree n+1: shift every symbol past i,
    swap the leading pair iff i+j is odd, then insert symbol i at position j.

    Inserting i at position j changes the inversion count by i+j modulo 2,
    so the conditional swap is exactly what keeps the output even.

    >>> word_to_text(insert_embed(word_from_text("0123"), 1, 4))
    '20341'
    """
    check_word(w)
    n = len(w)
    if n + 1 > MAX_DEGREE:
        raise ValueError(f"embedding degree {n + 1} exceeds {MAX_DEGREE}")
    if not 0 <= i <= n:
        raise ValueError(f"insertion symbol {i} outside 0..{n}")
    if not 2 <= j <= n:
        raise ValueError(f"insertion position {j} outside 2..{n}")
    if not is_even(w):
        raise ValueError(f"only even words embed, got odd {word_to_text(w)}")
    shifted = [shift_symbol(x, i, n) for x in w]
    if (i + j) % 2 == 1:
        shifted[0], shifted[1] = shifted[1], shifted[0]
    return tuple(shifted[:j] + [i] + shifted[j:])


def lehmer_rank(w: Word) -> int:
    """Rank of w in lexicographic order over all words of its degree.

    >>> lehmer_rank((3, 2, 1, 0))
    23
    """
    check_word(w)
    n = len(w)
    r = 0
    for a in range(n):
        smaller = sum(1 for b in range(a + 1, n) if w[b] < w[a])
        r += smaller * factorial(n - 1 - a)
    return r


def lehmer_unrank(r: int, n: int) -> Word:
    """Inverse of lehmer_rank for degree n."""
    if not 2 <= n <= MAX_DEGREE:
        raise ValueError(f"degree {n} outside supported range 2..{MAX_DEGREE}")
    if not 0 <= r < factorial(n):
        raise ValueError(f"rank {r} outside 0..{factorial(n) - 1}")
    symbols = list(range(n))
    out = []
    for a in range(n - 1, -1, -1):
        q, r = divmod(r, factorial(a))
        out.append(symbols.pop(q))
    return tuple(out)


def _calibrate() -> None:
    # The generator action is pinned by these four directed triangles; any
    # change to apply_star_gen that breaks them is a regression.
    fixed = [
        ("0123", 3, "3021", "1320"),
        ("1203", 3, "3102", "2301"),
        ("2013", 3, "3210", "0312"),
        ("13042", 2, "01342", "30142"),
    ]
    for start, i, second, third in fixed:
        w = word_from_text(start)
        a = apply_star_gen(w, i)
        b = apply_star_gen(a, i)
        if (word_to_text(a), word_to_text(b)) != (second, third) or apply_star_gen(b, i) != w:
            raise AssertionError(f"generator action miscalibrated at {start}, i={i}")


_calibrate()
