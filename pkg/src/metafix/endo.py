"""Endomorphisms of the free group, given by generator images."""

from __future__ import annotations

from .words import Word, WordError, parse_word, word_to_text


class Endomorphism:
    __slots__ = ("rank", "images")

    def __init__(self, images):
        images = tuple(images)
        if not images:
            raise ValueError("an endomorphism needs at least one image")
        rank = images[0].rank
        for y in images:
            if y.rank != rank:
                raise ValueError("image words of mixed ranks")
        if len(images) != rank:
            raise ValueError(f"{rank} generators but {len(images)} image words")
        self.rank = rank
        self.images = images

    @classmethod
    def identity(cls, rank):
        return cls(tuple(Word.generator(i, rank) for i in range(rank)))

    def apply(self, w):
        """Image of a word: substitute generator images, freely reduce."""
        stack = []
        for L in w.letters:
            img = self.images[abs(L) - 1].letters
            if L < 0:
                img = tuple(-x for x in reversed(img))
            for M in img:
                if stack and stack[-1] == -M:
                    stack.pop()
                else:
                    stack.append(M)
        return Word._raw(self.rank, tuple(stack))

    def compose(self, other):
        """(self o other)(x) = self(other(x))."""
        if self.rank != other.rank:
            raise ValueError("endomorphisms of different ranks")
        return Endomorphism(tuple(self.apply(y) for y in other.images))

    def is_ia(self):
        """True when every image abelianizes to its own generator."""
        for i, y in enumerate(self.images):
            sums = y.exponent_sums()
            for j, s in enumerate(sums):
                if s != (1 if j == i else 0):
                    return False
        return True

    def __eq__(self, other):
        if not isinstance(other, Endomorphism):
            return NotImplemented
        return self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        body = "; ".join(f"x{i + 1} -> {word_to_text(y)}" for i, y in enumerate(self.images))
        return f"Endomorphism({body})"


def inner_automorphism(g):
    """Conjugation x -> g^-1 x g."""
    n = g.rank
    ginv = g.inverse()
    return Endomorphism(tuple(ginv * Word.generator(i, n) * g for i in range(n)))


def parse_endomorphism(text):
    """Parse an endomorphism file: line i is `xI -> word`, rank = #lines.

    Blank lines and `#` comments are ignored.  Lines must appear in
    generator order x1, x2, ...
    """
    entries = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "->" not in line:
            raise WordError(f"line {lineno}: expected 'xI -> word'")
        lhs, rhs = line.split("->", 1)
        lhs = lhs.strip()
        if not lhs.startswith("x") or not lhs[1:].isdigit():
            raise WordError(f"line {lineno}: left side must be a generator, got {lhs!r}")
        entries.append((lineno, int(lhs[1:]), rhs.strip()))
    n = len(entries)
    if n == 0:
        raise WordError("no generator images found")
    images = []
    for k, (lineno, idx, rhs) in enumerate(entries, start=1):
        if idx != k:
            raise WordError(f"line {lineno}: expected x{k} on the left, got x{idx}")
        try:
            images.append(parse_word(rhs, n))
        except WordError as e:
            raise WordError(f"line {lineno}: {e}") from None
    return Endomorphism(tuple(images))
