"""Lattice words: ballot words over the alphabet {1, 2}.

A lattice word of half-length n has n 1s and n 2s and no prefix with more
2s than 1s.  Read left to right with 1 = step east and 2 = step north, it
is a monotone path from (0,0) to (n,n) that never rises above the diagonal.
The canonical text form is a string of '1' and '2' characters with no
separators; the empty string is the unique word of half-length 0.

Enumeration refuses half-lengths above a safety cap (default 16, roughly
35 million words) unless overridden via the ``max_n`` argument or the
``QCAT_MAX_ENUM`` environment variable.
"""

from __future__ import annotations

import math
import os

import numpy as np

from . import _kernels

DEFAULT_MAX_ENUM = 16

_ALPHABET = frozenset("12")


def to_array(word: str) -> np.ndarray:
    """Convert a word string to an int8 array of 1s and 2s."""
    arr = np.frombuffer(word.encode("ascii"), dtype=np.int8) - ord("0")
    return arr


def from_array(arr: np.ndarray) -> str:
    """Convert an int8 array of 1s and 2s back to a word string."""
    return (arr.astype(np.int8) + ord("0")).tobytes().decode("ascii")


def validate(word: str) -> bool:
    """True iff ``word`` is a lattice word (ballot condition, equal counts)."""
    if not isinstance(word, str):
        return False
    if not word:
        return True
    if set(word) - _ALPHABET:
        return False
    return bool(_kernels.is_lattice(to_array(word)))


def _require_valid(word: str) -> None:
    if not validate(word):
        raise ValueError(f"not a lattice word: {word!r}")


def half_length(word: str) -> int:
    """The n for a word of P_n."""
    _require_valid(word)
    return len(word) // 2


def inversions(word: str) -> int:
    """Number of pairs (i, j), i < j, with word[i] = '2' and word[j] = '1'."""
    _require_valid(word)
    return int(_kernels.inv_word(to_array(word)))


def raw_inversions(fragment: str) -> int:
    """Inversions of an arbitrary {1,2} fragment; no ballot requirement."""
    if set(fragment) - _ALPHABET:
        raise ValueError(f"not a {{1,2}} word: {fragment!r}")
    if not fragment:
        return 0
    return int(_kernels.inv_word(to_array(fragment)))


def path_points(word: str, origin: tuple[int, int] = (0, 0)) -> list[tuple[int, int]]:
    """Lattice points visited by the word's path, starting at ``origin``.

    Works on any {1,2} fragment; a word of length m yields m + 1 points.
    """
    x, y = origin
    points = [(x, y)]
    for ch in word:
        if ch == "1":
            x += 1
        elif ch == "2":
            y += 1
        else:
            raise ValueError(f"not a {{1,2}} word: {word!r}")
        points.append((x, y))
    return points


def area(word: str) -> int:
    """Unit cells strictly below the word's path inside its n x n square.

    Computed as the line integral of y dx along the path, which counts the
    cells between the path and the bottom edge.
    """
    _require_valid(word)
    points = path_points(word)
    total = 0
    for (x0, y0), (x1, _y1) in zip(points, points[1:]):
        total += y0 * (x1 - x0)
    return total


def prefix_counts(word: str, t: int) -> tuple[int, int]:
    """Counts (m1, m2) of 1s and 2s in the length-t prefix."""
    if not 0 <= t <= len(word):
        raise IndexError(f"prefix length {t} out of range for word of length {len(word)}")
    prefix = word[:t]
    m1 = prefix.count("1")
    m2 = t - m1
    return m1, m2


def concat(a: str, b: str) -> str:
    """Plain concatenation of fragments; validity is not implied."""
    return a + b


def _enum_cap(max_n: int | None) -> int:
    if max_n is not None:
        return max_n
    env = os.environ.get("QCAT_MAX_ENUM")
    if env:
        return int(env)
    return DEFAULT_MAX_ENUM


def enumerate_matrix(n: int, max_n: int | None = None) -> np.ndarray:
    """All words of P_n as an int8 matrix (one row per word), lex order.

    Row count is the n-th Catalan number.  Refuses n above the safety cap.
    """
    if n < 0:
        raise ValueError(f"half-length must be nonnegative, got {n}")
    cap = _enum_cap(max_n)
    if n > cap:
        raise ValueError(
            f"enumeration of P_{n} exceeds the safety cap {cap}; "
            f"pass max_n or set QCAT_MAX_ENUM to override"
        )
    count = math.comb(2 * n, n) // (n + 1)
    out = np.empty((count, 2 * n), dtype=np.int8)
    _kernels.fill_words(n, out)
    return out


def enumerate_words(n: int, max_n: int | None = None) -> list[str]:
    """All words of P_n as strings, in lexicographic order with 1 < 2."""
    mat = enumerate_matrix(n, max_n)
    return [from_array(row) for row in mat]
