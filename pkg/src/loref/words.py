"""Free-group word arithmetic over a single-letter generator alphabet.

Words are immutable sequences of signed letter codes: code +(i+1) is the
i-th generator, code -(i+1) its inverse.  Every Word is freely reduced at
construction, so equality of Words is equality in the free group.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


class WordError(ValueError):
    """Malformed word text or alphabet misuse."""


@dataclass(frozen=True, order=True)
class Generator:
    index: int
    name: str


class Alphabet:
    """Ordered set of generators named by distinct lowercase letters."""

    def __init__(self, names: Iterable[str]):
        names = list(names)
        if not names:
            raise WordError("alphabet must be non-empty")
        if len(names) > 26:
            raise WordError("alphabet capped at 26 single-letter generators")
        seen = set()
        for name in names:
            if len(name) != 1 or not name.islower() or not name.isalpha():
                raise WordError(f"generator name must be a single lowercase letter, got {name!r}")
            if name in seen:
                raise WordError(f"duplicate generator {name!r}")
            seen.add(name)
        self.generators = tuple(Generator(i, n) for i, n in enumerate(names))
        self.names = tuple(names)
        self._codes = {}
        for gen in self.generators:
            self._codes[gen.name] = gen.index + 1
            self._codes[gen.name.upper()] = -(gen.index + 1)

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self) -> Iterator[Generator]:
        return iter(self.generators)

    def __eq__(self, other) -> bool:
        return isinstance(other, Alphabet) and self.names == other.names

    def __hash__(self) -> int:
        return hash(self.names)

    def __repr__(self) -> str:
        return f"Alphabet({''.join(self.names)!r})"

    def code(self, char: str) -> int:
        """Signed letter code for a display character (uppercase = inverse)."""
        try:
            return self._codes[char]
        except KeyError:
            raise WordError(f"unknown generator letter {char!r}") from None

    def char(self, code: int) -> str:
        name = self.generators[abs(code) - 1].name
        return name if code > 0 else name.upper()

    def word(self, letters: Iterable[int] = ()) -> "Word":
        return Word(self, letters)

    def parse(self, text: str) -> "Word":
        return parse_word(text, self)


def _reduce_codes(codes: Iterable[int]) -> tuple[int, ...]:
    stack: list[int] = []
    for c in codes:
        if stack and stack[-1] == -c:
            stack.pop()
        else:
            stack.append(c)
    return tuple(stack)


class Word:
    """A freely reduced word; the empty word is the group identity."""

    __slots__ = ("alphabet", "letters", "_hash")

    def __init__(self, alphabet: Alphabet, letters: Iterable[int] = ()):
        object.__setattr__(self, "alphabet", alphabet)
        object.__setattr__(self, "letters", _reduce_codes(letters))
        object.__setattr__(self, "_hash", hash((alphabet.names, self.letters)))

    def __setattr__(self, name, value):
        raise AttributeError("Word is immutable")

    @classmethod
    def _raw(cls, alphabet: Alphabet, reduced: tuple[int, ...]) -> "Word":
        # Trusted constructor for letters already known to be reduced.
        w = cls.__new__(cls)
        object.__setattr__(w, "alphabet", alphabet)
        object.__setattr__(w, "letters", reduced)
        object.__setattr__(w, "_hash", hash((alphabet.names, reduced)))
        return w

    def __len__(self) -> int:
        return len(self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Word)
            and self.letters == other.letters
            and self.alphabet.names == other.alphabet.names
        )

    def __hash__(self) -> int:
        return self._hash

    def __mul__(self, other: "Word") -> "Word":
        if self.alphabet != other.alphabet:
            raise WordError("cannot multiply words over different alphabets")
        return Word(self.alphabet, self.letters + other.letters)

    def __pow__(self, n: int) -> "Word":
        if n == 0:
            return Word._raw(self.alphabet, ())
        base = self if n > 0 else self.inverse()
        return Word(base.alphabet, base.letters * abs(n))

    def __invert__(self) -> "Word":
        return self.inverse()

    def inverse(self) -> "Word":
        return Word._raw(self.alphabet, tuple(-c for c in reversed(self.letters)))

    def __str__(self) -> str:
        return "".join(self.alphabet.char(c) for c in self.letters) or "1"

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"

    def key(self):
        """Total order: length, then (generator index, sign) per letter."""
        return (len(self.letters), tuple((abs(c), c < 0) for c in self.letters))

    def letter_mask(self) -> int:
        """Bitmask of signed letters present (bit 2i = gen i, 2i+1 = its inverse)."""
        m = 0
        for c in self.letters:
            m |= 1 << (2 * (abs(c) - 1) + (c < 0))
        return m

    def is_cyclically_reduced(self) -> bool:
        L = self.letters
        return not L or L[0] != -L[-1]

    def cyclic_reduce(self) -> tuple["Word", "Word"]:
        """Return (core, conjugator) with self = conjugator * core * conjugator^-1."""
        L = self.letters
        i, j = 0, len(L)
        while j - i >= 2 and L[i] == -L[j - 1]:
            i += 1
            j -= 1
        return Word._raw(self.alphabet, L[i:j]), Word._raw(self.alphabet, L[:i])

    def rotations(self) -> list["Word"]:
        """All distinct rotations of a cyclically reduced word, in start order."""
        if not self.is_cyclically_reduced():
            raise WordError(f"word {self} is not cyclically reduced")
        L = self.letters
        if not L:
            return [self]
        seen = set()
        out = []
        for i in range(len(L)):
            rot = L[i:] + L[:i]
            if rot not in seen:
                seen.add(rot)
                out.append(Word._raw(self.alphabet, rot))
        return out

    def exponent_vector(self) -> tuple[int, ...]:
        vec = [0] * len(self.alphabet)
        for c in self.letters:
            vec[abs(c) - 1] += 1 if c > 0 else -1
        return tuple(vec)


def reduce(alphabet: Alphabet, letters: Iterable[int]) -> Word:
    """Freely reduce a raw letter-code sequence."""
    return Word(alphabet, letters)


def concat(w1: Word, w2: Word) -> Word:
    return w1 * w2


def invert(w: Word) -> Word:
    return w.inverse()


def cyclic_reduce(w: Word) -> tuple[Word, Word]:
    return w.cyclic_reduce()


def cyclic_permutations(w: Word) -> set[Word]:
    return set(w.rotations())


def exponent_vector(w: Word) -> tuple[int, ...]:
    return w.exponent_vector()


def word_key(w: Word):
    return w.key()


class _Parser:
    """Recursive-descent parser for the word grammar.

    atom   := letter | '(' word ')'
    factor := atom ['^' integer]
    word   := factor*
    Lowercase letters are generators, uppercase their inverses; whitespace
    is ignored; exponent 0 yields the empty factor, negative exponents invert.
    """

    def __init__(self, text: str, alphabet: Alphabet):
        self.text = text
        self.alphabet = alphabet
        self.pos = 0

    def error(self, message: str):
        raise WordError(f"{message} at position {self.pos} in {self.text!r}")

    def peek(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1
        return self.text[self.pos] if self.pos < len(self.text) else None

    def parse(self) -> Word:
        codes = self.word(top=True)
        return Word(self.alphabet, codes)

    def word(self, top: bool = False) -> list[int]:
        codes: list[int] = []
        while True:
            ch = self.peek()
            if ch is None or ch == ")":
                if top and ch == ")":
                    self.error("unmatched ')'")
                return codes
            codes.extend(self.factor())

    def factor(self) -> list[int]:
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            base = self.word()
            if self.peek() != ")":
                self.error("expected ')'")
            self.pos += 1
        elif ch == "1":
            # identity factor, matching the canonical rendering of the empty word
            self.pos += 1
            base = []
        elif ch is not None and ch.isalpha():
            try:
                base = [self.alphabet.code(ch)]
            except WordError:
                self.error(f"unknown generator letter {ch!r}")
            self.pos += 1
        else:
            self.error(f"unexpected character {ch!r}")
        if self.peek() == "^":
            self.pos += 1
            n = self.integer()
            if n < 0:
                base = [-c for c in reversed(base)]
                n = -n
            base = base * n
        return base

    def integer(self) -> int:
        sign = 1
        ch = self.peek()
        if ch in ("+", "-"):
            sign = -1 if ch == "-" else 1
            self.pos += 1
            ch = self.peek()
        if ch is None or not ch.isdigit():
            self.error("expected integer exponent")
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        return sign * int(self.text[start : self.pos])


def parse_word(text: str, alphabet: Alphabet) -> Word:
    """Parse text in the word grammar and return its free reduction."""
    return _Parser(text, alphabet).parse()


def format_word(w: Word) -> str:
    """Canonical text: plain letters, uppercase for inverses, no powers."""
    return str(w)
