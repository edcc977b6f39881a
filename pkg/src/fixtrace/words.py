"""Words in a free group.

A word is a tuple of letters ``(generator, sign)`` with ``sign`` in ``{1, -1}``.
The empty tuple is the identity.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence, Tuple

Letter = Tuple[int, int]
Word = Tuple[Letter, ...]

IDENTITY: Word = ()


def free_reduce(w: Iterable[Letter]) -> Word:
    """Cancel adjacent ``x x^-1`` pairs until none remain (stack based, one pass)."""
    out: list[Letter] = []
    for gen, sign in w:
        if out and out[-1][0] == gen and out[-1][1] == -sign:
            out.pop()
        else:
            out.append((gen, sign))
    return tuple(out)


def inverse(w: Sequence[Letter]) -> Word:
    return tuple((g, -s) for g, s in reversed(w))


def multiply(*words: Sequence[Letter]) -> Word:
    out: list[Letter] = []
    for w in words:
        for gen, sign in w:
            if out and out[-1][0] == gen and out[-1][1] == -sign:
                out.pop()
            else:
                out.append((gen, sign))
    return tuple(out)


def generator(i: int, sign: int = 1) -> Word:
    return ((i, sign),)


def power(w: Word, k: int) -> Word:
    if k < 0:
        w, k = inverse(w), -k
    return free_reduce(w * k)


def letter_key(letter: Letter) -> tuple[int, int]:
    return (letter[0], 0 if letter[1] > 0 else 1)


def shortlex_key(w: Sequence[Letter]) -> tuple:
    """Length first, then letters with ``g_i < g_i^-1 < g_{i+1}``."""
    return (len(w), tuple(letter_key(x) for x in w))


def cyclic_reduce(w: Word) -> Word:
    w = free_reduce(w)
    i, j = 0, len(w) - 1
    while i < j and w[i][0] == w[j][0] and w[i][1] == -w[j][1]:
        i += 1
        j -= 1
    return w[i:j + 1]


def exponent_sums(w: Iterable[Letter], rank: int) -> list[int]:
    sums = [0] * rank
    for gen, sign in w:
        sums[gen] += sign
    return sums


def from_exponents(exps: Sequence[int], gens: Sequence[int] | None = None) -> Word:
    """The word ``g_0^e_0 g_1^e_1 ...`` (optionally relabelling generators)."""
    out: list[Letter] = []
    for i, e in enumerate(exps):
        g = i if gens is None else gens[i]
        s = 1 if e > 0 else -1
        out.extend([(g, s)] * abs(e))
    return tuple(out)


def substitute(w: Iterable[Letter], images: Sequence[Word]) -> Word:
    """Apply the homomorphism sending generator ``i`` to ``images[i]``."""
    out: list[Letter] = []
    for gen, sign in w:
        img = images[gen] if sign > 0 else inverse(images[gen])
        for g, s in img:
            if out and out[-1][0] == g and out[-1][1] == -s:
                out.pop()
            else:
                out.append((g, s))
    return tuple(out)


def format_word(w: Sequence[Letter], names: Sequence[str] | None = None) -> str:
    if not w:
        return "e"
    parts = []
    i = 0
    while i < len(w):
        gen, sign = w[i]
        j = i
        while j < len(w) and w[j] == w[i]:
            j += 1
        exp = (j - i) * sign
        name = names[gen] if names is not None else f"g{gen}"
        parts.append(name if exp == 1 else f"{name}^{exp}")
        i = j
    return "*".join(parts)


def reduced_words(rank: int, max_length: int) -> Iterator[Word]:
    """All freely reduced words of length <= ``max_length``, in shortlex order."""
    letters = sorted(((g, s) for g in range(rank) for s in (1, -1)), key=letter_key)
    layer: list[Word] = [IDENTITY]
    yield IDENTITY
    for _ in range(max_length):
        nxt = []
        for w in layer:
            for x in letters:
                if w and w[-1][0] == x[0] and w[-1][1] == -x[1]:
                    continue
                nxt.append(w + (x,))
        if not nxt:
            return
        yield from nxt
        layer = nxt
