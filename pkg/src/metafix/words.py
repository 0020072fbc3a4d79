"""Freely reduced words over generators x1..xn.

A word stores its letters as signed 1-based generator indices (+i for x_i,
-i for its inverse) and is always freely reduced.  The commutator
convention used everywhere in this package is [a, b] = a^-1 b^-1 a b.
"""

from __future__ import annotations


class WordError(ValueError):
    def __init__(self, message, position=None):
        super().__init__(message if position is None else f"{message} (at position {position})")
        self.position = position


def free_reduce(letters):
    stack = []
    for L in letters:
        if stack and stack[-1] == -L:
            stack.pop()
        else:
            stack.append(L)
    return tuple(stack)


class Word:
    """A freely reduced word in the free group of the given rank."""

    __slots__ = ("rank", "letters")

    def __init__(self, rank, letters=()):
        for L in letters:
            if L == 0 or abs(L) > rank:
                raise WordError(f"letter {L} out of range for rank {rank}")
        self.rank = rank
        self.letters = free_reduce(letters)

    @classmethod
    def _raw(cls, rank, reduced):
        self = object.__new__(cls)
        self.rank = rank
        self.letters = reduced
        return self

    @classmethod
    def identity(cls, rank):
        return cls._raw(rank, ())

    @classmethod
    def generator(cls, i, rank):
        """x_{i+1} (0-based index)."""
        if not 0 <= i < rank:
            raise WordError(f"generator index {i} out of range")
        return cls._raw(rank, (i + 1,))

    def _check(self, other):
        if self.rank != other.rank:
            raise WordError("words of different ranks")

    def __mul__(self, other):
        if not isinstance(other, Word):
            return NotImplemented
        self._check(other)
        stack = list(self.letters)
        for L in other.letters:
            if stack and stack[-1] == -L:
                stack.pop()
            else:
                stack.append(L)
        return Word._raw(self.rank, tuple(stack))

    def inverse(self):
        return Word._raw(self.rank, tuple(-L for L in reversed(self.letters)))

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inverse()
        out = Word.identity(self.rank)
        for _ in range(abs(k)):
            out = out * base
        return out

    def conjugated_by(self, g):
        """g * self * g^-1."""
        return g * self * g.inverse()

    def commutator(self, other):
        """[self, other] = self^-1 other^-1 self other."""
        return self.inverse() * other.inverse() * self * other

    def exponent_sums(self):
        out = [0] * self.rank
        for L in self.letters:
            if L > 0:
                out[L - 1] += 1
            else:
                out[-L - 1] -= 1
        return tuple(out)

    def is_identity(self):
        return not self.letters

    def __len__(self):
        return len(self.letters)

    def __eq__(self, other):
        if not isinstance(other, Word):
            return NotImplemented
        return self.rank == other.rank and self.letters == other.letters

    def __hash__(self):
        return hash((self.rank, self.letters))

    def __str__(self):
        return word_to_text(self)

    def __repr__(self):
        return f"Word({self.rank}, {word_to_text(self)!r})"


def commutator(u, v):
    return u.commutator(v)


def word_to_text(w):
    """Canonical text: runs of one generator collapse to xK^E."""
    if not w.letters:
        return "1"
    parts = []
    i = 0
    letters = w.letters
    while i < len(letters):
        L = letters[i]
        j = i
        while j < len(letters) and letters[j] == L:
            j += 1
        e = (j - i) if L > 0 else -(j - i)
        gen = abs(L)
        parts.append(f"x{gen}" if e == 1 else f"x{gen}^{e}")
        i = j
    return " ".join(parts)


def _tokenize(text):
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch == "x":
            j = i + 1
            while j < n and text[j].isdigit():
                j += 1
            if j == i + 1:
                raise WordError("generator name needs an index", i)
            tokens.append(("gen", int(text[i + 1 : j]), i))
            i = j
        elif ch == "^":
            j = i + 1
            if j < n and text[j] == "-":
                j += 1
            k = j
            while k < n and text[k].isdigit():
                k += 1
            if k == j:
                raise WordError("exponent needs digits", i)
            tokens.append(("pow", int(text[i + 1 : k]), i))
            i = k
        elif ch in "[](),":
            tokens.append((ch, None, i))
            i += 1
        elif ch == "1":
            tokens.append(("one", None, i))
            i += 1
        else:
            raise WordError(f"unexpected character {ch!r}", i)
    return tokens


def parse_word(text, rank):
    """Parse the word grammar: factors xK, xK^E, [w1,...,wk], (w)^E.

    Multi-entry brackets are left-normed: [a,b,c] = [[a,b],c].  The parsed
    word is freely reduced.
    """
    tokens = _tokenize(text)
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else (None, None, len(text))

    def parse_sequence(stoppers):
        nonlocal pos
        out = Word.identity(rank)
        while pos < len(tokens) and tokens[pos][0] not in stoppers:
            out = out * parse_factor()
        return out

    def parse_factor():
        nonlocal pos
        kind, value, at = peek()
        if kind == "gen":
            if not 1 <= value <= rank:
                raise WordError(f"generator x{value} out of range for rank {rank}", at)
            pos += 1
            atom = Word._raw(rank, (value,))
        elif kind == "one":
            pos += 1
            atom = Word.identity(rank)
        elif kind == "[":
            pos += 1
            entries = [parse_sequence({",", "]"})]
            while peek()[0] == ",":
                pos += 1
                entries.append(parse_sequence({",", "]"}))
            if peek()[0] != "]":
                raise WordError("unclosed '['", at)
            pos += 1
            if len(entries) < 2:
                raise WordError("a commutator needs at least two entries", at)
            atom = entries[0]
            for e in entries[1:]:
                atom = atom.commutator(e)
        elif kind == "(":
            pos += 1
            atom = parse_sequence({")"})
            if peek()[0] != ")":
                raise WordError("unclosed '('", at)
            pos += 1
        else:
            raise WordError(f"unexpected token {kind!r}", at)
        if peek()[0] == "pow":
            atom = atom ** peek()[1]
            pos += 1
        return atom

    out = parse_sequence(set())
    if pos != len(tokens):
        raise WordError("trailing input", tokens[pos][2])
    return out
