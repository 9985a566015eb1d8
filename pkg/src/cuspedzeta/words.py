"""Words in a finitely generated group.

A word is a tuple of ``(generator_index, exponent)`` pairs with exponent
+1 or -1.  The empty tuple is the identity.  Letter strings use the
convention that a lowercase letter is a generator and the corresponding
uppercase letter its inverse.
"""

from __future__ import annotations

from .errors import PresentationSyntaxError

Letter = tuple[int, int]
GroupWord = tuple[Letter, ...]

IDENTITY: GroupWord = ()


def free_reduce(letters) -> GroupWord:
    """Cancel adjacent x x^-1 pairs until none remain."""
    out: list[Letter] = []
    for g, e in letters:
        if out and out[-1][0] == g and out[-1][1] == -e:
            out.pop()
        else:
            out.append((g, e))
    return tuple(out)


def cyclic_reduce(word: GroupWord) -> GroupWord:
    """Freely reduce, then strip cancelling first/last letters."""
    w = list(free_reduce(word))
    while len(w) >= 2 and w[0][0] == w[-1][0] and w[0][1] == -w[-1][1]:
        w = w[1:-1]
    return tuple(w)


def inverse(word: GroupWord) -> GroupWord:
    return tuple((g, -e) for g, e in reversed(word))


def concat(*words: GroupWord) -> GroupWord:
    letters: list[Letter] = []
    for w in words:
        letters.extend(w)
    return free_reduce(letters)


def power(word: GroupWord, k: int) -> GroupWord:
    if k < 0:
        return power(inverse(word), -k)
    return free_reduce([l for _ in range(k) for l in word])


def is_freely_reduced(word: GroupWord) -> bool:
    return free_reduce(word) == tuple(word)


def cyclic_rotations(word: GroupWord):
    for i in range(max(1, len(word))):
        yield word[i:] + word[:i]


def canonical_conjugacy_form(word: GroupWord) -> GroupWord:
    """Least cyclic rotation of the cyclic reduction; a canonical
    representative of the free-conjugacy class."""
    w = cyclic_reduce(word)
    if not w:
        return w
    return min(cyclic_rotations(w))


def word_period(word: GroupWord) -> int:
    """Largest k such that the cyclic word is a k-fold repetition."""
    n = len(word)
    if n == 0:
        return 1
    for p in range(1, n + 1):
        if n % p == 0 and word == word[:p] * (n // p):
            return n // p
    return 1


def parse_letters(text: str, n_generators: int, names=None,
                  line=None, col_offset=0) -> GroupWord:
    """Parse a letter string like ``abAB`` into a word.

    When ``names`` is given they name the generators; otherwise the
    first ``n_generators`` letters of the alphabet are used.
    """
    if names is None:
        names = [chr(ord("a") + i) for i in range(n_generators)]
    index = {nm: i for i, nm in enumerate(names)}
    letters: list[Letter] = []
    for pos, ch in enumerate(text):
        low = ch.lower()
        if low not in index:
            raise PresentationSyntaxError(
                f"unknown generator letter {ch!r}", line=line,
                column=col_offset + pos + 1)
        letters.append((index[low], 1 if ch.islower() else -1))
    return tuple(letters)


def format_letters(word: GroupWord, names=None) -> str:
    if names is None:
        hi = max((g for g, _ in word), default=-1)
        names = [chr(ord("a") + i) for i in range(hi + 1)]
    out = []
    for g, e in word:
        nm = names[g]
        out.append(nm if e == 1 else nm.upper())
    return "".join(out)
