"""Rational tangle words, Conway fractions, one-minus-one synthesis.

A tangle word is a nonempty integer sequence a_1 .. a_k evaluated
right to left by the continued-fraction rule

    F([a_1 .. a_k]) = a_k + 1 / F([a_1 .. a_{k-1}]),   F([a_1]) = a_1

over the extended rationals: 1/0 = inf, x + inf = inf, 1/inf = 0, so
evaluation never divides by zero unguarded.  Two rational tangles are
equivalent exactly when their fractions agree, which is what
``verify_substitution`` checks.

Text notation follows the digit-per-entry convention of the LinKnot
package: every digit is its own entry ("2110" is [2, 1, 1, 0]) and a
``-`` sign, with or without surrounding spaces, attaches to the single
digit after it ("4 - 111" is [4, -1, 1, 1]).  Machine output is
space-separated ("4 -1 1 1"); both spellings parse identically.

``synthesize_one_minus_one`` finds, for a negative fraction, an
equivalent word whose only negative entry is a single -1, searching
words of length at most 12 with entries in [-1, 9] in breadth-first
order (shortest first, lexicographic within a length), so the result
is deterministic.  The enumeration is realized as a meet-in-the-middle
search: prefix values and suffix requirements are tabulated to half
depth and joined, which reaches length 12 where the plain level-by-
level enumeration would need ~10^12 states.  Nonnegative fractions are
returned as their plain continued-fraction word with no -1 at all; the
caller can tell the two cases apart by whether -1 occurs.

Not every rational is representable under those bounds: digits stop at
9, so fractions whose continued fractions need a partial quotient
above 9 in every disguise (for example -12 or -19/20) are genuinely
out of reach and raise NotFound.
"""

from __future__ import annotations

import math
import re
import threading
from dataclasses import dataclass

__all__ = [
    "ExtendedRational",
    "TangleWord",
    "MalformedWord",
    "NotFound",
    "parse_word",
    "render_word",
    "fraction",
    "synthesize_one_minus_one",
    "verify_substitution",
    "extract_substitutions",
]

MAX_ENTRY = 64  # corpus words and synthesized words stay far below this
MAX_SYNTH_LENGTH = 12


class MalformedWord(ValueError):
    """Text or entries violating the tangle word shape."""


class NotFound(LookupError):
    """Bounded synthesis search exhausted without a match."""


@dataclass(frozen=True)
class ExtendedRational:
    """Rational p/q in lowest terms with q >= 0; (1, 0) is infinity."""

    p: int
    q: int

    def __post_init__(self) -> None:
        if self.q < 0:
            raise ValueError("denominator must be nonnegative")
        if self.q == 0 and self.p != 1:
            raise ValueError("infinity is encoded as (1, 0) only")
        if self.q and math.gcd(abs(self.p), self.q) != 1:
            raise ValueError(f"{self.p}/{self.q} is not in lowest terms")

    @staticmethod
    def make(p: int, q: int) -> ExtendedRational:
        """Canonicalize an arbitrary integer pair."""
        if q == 0:
            if p == 0:
                raise ValueError("0/0 is not an extended rational")
            return ExtendedRational(1, 0)
        if q < 0:
            p, q = -p, -q
        g = math.gcd(abs(p), q)
        return ExtendedRational(p // g, q // g)

    @staticmethod
    def from_int(n: int) -> ExtendedRational:
        return ExtendedRational(n, 1)

    @staticmethod
    def parse(text: str) -> ExtendedRational:
        """Parse "p/q" or a bare integer."""
        body = text.strip()
        m = re.fullmatch(r"(-?\d+)\s*(?:/\s*(-?\d+))?", body)
        if not m:
            raise ValueError(f"not a rational: {text!r}")
        p = int(m.group(1))
        q = int(m.group(2)) if m.group(2) else 1
        return ExtendedRational.make(p, q)

    @property
    def is_infinite(self) -> bool:
        return self.q == 0

    def recip(self) -> ExtendedRational:
        """1/x with 1/0 = inf and 1/inf = 0."""
        return ExtendedRational.make(self.q, self.p)

    def plus_int(self, n: int) -> ExtendedRational:
        """x + n with inf + n = inf."""
        if self.q == 0:
            return self
        return ExtendedRational.make(self.p + n * self.q, self.q)

    def __str__(self) -> str:
        if self.q == 0:
            return "inf"
        if self.q == 1:
            return str(self.p)
        return f"{self.p}/{self.q}"


@dataclass(frozen=True)
class TangleWord:
    """Conway rational tangle word; 0 may appear only as the last entry."""

    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.entries:
            raise MalformedWord("empty tangle word")
        if any(e == 0 for e in self.entries[:-1]):
            raise MalformedWord(f"interior zero in {list(self.entries)}")
        if any(abs(e) > MAX_ENTRY for e in self.entries):
            raise MalformedWord(f"entry beyond +-{MAX_ENTRY} in {list(self.entries)}")


def parse_word(text: str) -> TangleWord:
    """Read digit-per-entry notation, signs attaching to the next digit."""
    entries: list[int] = []
    negate = False
    for ch in text:
        if ch.isspace():
            continue
        if ch == "-":
            if negate:
                raise MalformedWord(f"doubled sign in {text!r}")
            negate = True
        elif ch.isdigit():
            value = int(ch)
            entries.append(-value if negate else value)
            negate = False
        else:
            raise MalformedWord(f"unexpected character {ch!r} in {text!r}")
    if negate:
        raise MalformedWord(f"dangling sign in {text!r}")
    if not entries:
        raise MalformedWord(f"no entries in {text!r}")
    return TangleWord(tuple(entries))


def render_word(w: TangleWord) -> str:
    """Space-separated entries, e.g. [4, -1, 1, 1] -> "4 -1 1 1"."""
    return " ".join(str(e) for e in w.entries)


def fraction(w: TangleWord) -> ExtendedRational:
    """Conway fraction of a rational tangle word."""
    acc = ExtendedRational.from_int(w.entries[0])
    for e in w.entries[1:]:
        acc = acc.recip().plus_int(e)
    return acc


def _nonnegative_word(q: ExtendedRational) -> TangleWord:
    """Plain continued-fraction word for q >= 0 (reversed digit order)."""
    digits: list[int] = []
    p, d = q.p, q.q
    while True:
        digits.append(p // d)
        p, d = d, p - (p // d) * d
        if d == 0:
            break
    if any(x > MAX_ENTRY for x in digits):
        raise NotFound(f"continued fraction of {q} exceeds the entry bound")
    return TangleWord(tuple(reversed(digits)))


# Search states are bare (numerator, denominator, minus_one_flag)
# tuples: the flag on a prefix state records whether the -1 was spent,
# on a suffix state whether the -1 still has to appear in the suffix.
_State = tuple[int, int, bool]

_HALF_DEPTH = MAX_SYNTH_LENGTH // 2


def _step(p: int, d: int, e: int) -> tuple[int, int]:
    """Fraction after appending entry e to a word with fraction p/d."""
    r = ExtendedRational.make(d, p).plus_int(e)
    return r.p, r.q


def _unstep(p: int, d: int, e: int) -> tuple[int, int]:
    """Fraction before a final entry e was appended."""
    r = ExtendedRational.make(p - e * d, d).recip()
    return r.p, r.q


class _PrefixTable:
    """Minimum length of a valid prefix per reachable (fraction, -1
    used) state, grown level by level and shared across calls."""

    def __init__(self) -> None:
        self.min_len: dict[_State, int] = {}
        self.depth = 0
        self._frontier: list[_State] = []
        self._lock = threading.Lock()

    def grow_to(self, depth: int) -> None:
        with self._lock:
            while self.depth < min(depth, _HALF_DEPTH):
                self._grow()

    def _grow(self) -> None:
        fresh: list[_State] = []
        if self.depth == 0:
            for e in range(-1, 10):
                if e == 0:  # a zero is only legal as the final entry
                    continue
                fresh.append((e, 1, e == -1))
        else:
            for p, d, used in self._frontier:
                for e in range(-1, 10):
                    if e == 0 or (e == -1 and used):
                        continue
                    np_, nd = _step(p, d, e)
                    state = (np_, nd, used or e == -1)
                    if state not in self.min_len:
                        fresh.append(state)
        for state in fresh:
            self.min_len[state] = self.depth + 1
        self._frontier = fresh
        self.depth += 1


_PREFIXES = _PrefixTable()


class _SuffixTable:
    """Minimum number of trailing entries turning a (fraction, -1
    still pending) state into the target; one instance per search."""

    def __init__(self, q: ExtendedRational) -> None:
        self.min_peel: dict[_State, int] = {(q.p, q.q, False): 0}
        self.depth = 0
        self._frontier: list[_State] = [(q.p, q.q, False)]

    def grow(self) -> None:
        fresh: list[_State] = []
        final = self.depth == 0
        for p, d, used in self._frontier:
            for e in range(-1, 10):
                if e == 0 and not final:
                    continue
                if e == -1 and used:
                    continue
                pp, pd = _unstep(p, d, e)
                state = (pp, pd, used or e == -1)
                if state not in self.min_peel:
                    fresh.append(state)
        for state in fresh:
            self.min_peel[state] = self.depth + 1
        self._frontier = fresh
        self.depth += 1


def _shortest_total(suffixes: _SuffixTable) -> int | None:
    """Minimum prefix length + suffix length over all meeting states."""
    best: int | None = None
    for (p, d, used), b in suffixes.min_peel.items():
        a = _PREFIXES.min_len.get((p, d, not used))
        if a is not None and a + b <= MAX_SYNTH_LENGTH:
            if best is None or a + b < best:
                best = a + b
    return best


def _reconstruct(q: ExtendedRational, length: int, suffixes: _SuffixTable) -> tuple[int, ...]:
    """Lexicographically first valid word of the given (minimal) length.

    Because the length is minimal, a candidate prefix state can finish
    in exactly r more entries iff the suffix table holds it at exactly
    r (anything smaller would contradict minimality), so the exact
    table answers all queries at depth <= half and a short memoized
    recursion bridges deeper remainders.
    """
    memo: dict[tuple[int, int, bool, int], bool] = {}

    def completable(p: int, d: int, used: bool, r: int) -> bool:
        if r == 0:
            return used and (p, d) == (q.p, q.q)
        if r <= suffixes.depth:
            return suffixes.min_peel.get((p, d, not used)) == r
        key = (p, d, used, r)
        cached = memo.get(key)
        if cached is not None:
            return cached
        ok = False
        for e in _candidates(used, r):
            np_, nd = _step(p, d, e)
            if completable(np_, nd, used or e == -1, r - 1):
                ok = True
                break
        memo[key] = ok
        return ok

    def _candidates(used: bool, r: int) -> list[int]:
        out = [] if used else [-1]
        if r == 1:
            out.append(0)
        out.extend(range(1, 10))
        return out

    entries: list[int] = []
    p, d, used = 0, 1, False
    for pos in range(length):
        r = length - pos
        for e in _candidates(used, r):
            if pos == 0:
                np_, nd, nu = e, 1, e == -1
            else:
                np_, nd = _step(p, d, e)
                nu = used or e == -1
            if completable(np_, nd, nu, r - 1):
                entries.append(e)
                p, d, used = np_, nd, nu
                break
        else:
            raise RuntimeError(f"synthesis reconstruction dead end at {entries}")
    return tuple(entries)


def synthesize_one_minus_one(q: ExtendedRational) -> TangleWord:
    """Shortest word for q whose only negative entry is a single -1.

    Nonnegative q comes back as its ordinary continued-fraction word
    with no -1 entry at all.  Negative q is resolved to the first word
    in (length, lexicographic) order among words of length <= 12 with
    entries in [-1, 9] and zeros only in final position.
    """
    if q.is_infinite:
        raise ValueError("cannot synthesize a word for infinity")
    if q.p >= 0:
        return _nonnegative_word(q)

    suffixes = _SuffixTable(q)
    _PREFIXES.grow_to(1)
    while True:
        best = _shortest_total(suffixes)
        bounds = []
        if _PREFIXES.depth < _HALF_DEPTH:
            bounds.append(_PREFIXES.depth + 1)  # a newly found prefix, b >= 0
        if suffixes.depth < _HALF_DEPTH:
            bounds.append(suffixes.depth + 2)  # a >= 1 plus a longer suffix
        if best is not None and (not bounds or best <= min(bounds)):
            break
        if not bounds:
            break
        if suffixes.depth <= _PREFIXES.depth and suffixes.depth < _HALF_DEPTH:
            suffixes.grow()
        else:
            _PREFIXES.grow_to(_PREFIXES.depth + 1)

    if best is None:
        raise NotFound(
            f"no word of length <= {MAX_SYNTH_LENGTH} with entries in [-1, 9] "
            f"and one -1 entry has fraction {q}"
        )
    while suffixes.depth < min(_HALF_DEPTH, best - 1):
        suffixes.grow()
    return TangleWord(_reconstruct(q, best, suffixes))


def verify_substitution(left: TangleWord, right: TangleWord) -> bool:
    """True iff the words have equal fractions and the right word's
    only negative entry is a single -1."""
    ones = sum(1 for e in right.entries if e == -1)
    if ones != 1 or any(e < 0 and e != -1 for e in right.entries):
        return False
    return fraction(left) == fraction(right)


_POLYHEDRON_TAG = re.compile(r"^\s*(\d+\^?\*+)")
_SEPARATORS = re.compile(r"([.:,()])")


def _tokenize_conway(text: str) -> tuple[str, tuple[str, ...], tuple[str, ...]]:
    """Split a Conway string into a polyhedron tag, separator skeleton,
    and whitespace-normalized slot texts."""
    m = _POLYHEDRON_TAG.match(text)
    tag = m.group(1).replace("^", "") if m else ""
    rest = text[m.end() :] if m else text
    parts = _SEPARATORS.split(rest)
    slots = tuple(" ".join(t.split()) for t in parts[0::2])
    seps = tuple(parts[1::2])
    return tag, seps, slots


def extract_substitutions(
    conway_min: str, conway_rep: str
) -> list[tuple[TangleWord, TangleWord]] | None:
    """Pair up the tangle slot where two Conway strings differ.

    Both strings are split on the shared separators; when they carry
    the same polyhedron tag and separator skeleton and differ in
    exactly one slot, that slot is parsed and returned as a word pair
    (identical strings yield an empty list).  None means the strings
    are not slotwise alignable: a different skeleton, or a rewrite
    touching several slots at once (those are whole-form restatements,
    typically of the mirror diagram, not single-tangle substitutions).
    """
    tag_a, seps_a, slots_a = _tokenize_conway(conway_min)
    tag_b, seps_b, slots_b = _tokenize_conway(conway_rep)
    if tag_a != tag_b or seps_a != seps_b:
        return None
    pairs = [(a, b) for a, b in zip(slots_a, slots_b) if a != b]
    if len(pairs) > 1:
        return None
    try:
        return [(parse_word(a), parse_word(b)) for a, b in pairs]
    except MalformedWord:
        return None
