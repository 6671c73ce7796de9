"""Words and strings over a presentation.

Storage convention: a word written beta_n ... beta_1 (paper order, rightmost
traversed first) is stored as the tuple (beta_1, ..., beta_n), i.e. in
traversal order.  Hence

  * a LEFT substring (the part containing s(y)) is a prefix of .letters,
  * a RIGHT substring (the part containing t(y)) is a suffix of .letters,

and rendering reverses the tuple back to written order.

Zero-length strings 1_(v,i) carry (vertex, sign) with sigma = -i and
epsilon = i; they are equal only when both coordinates match.
"""

import re
from dataclasses import dataclass

from .errors import ParseError, UnknownArrow, ZeroLength


@dataclass(frozen=True, order=True)
class Letter:
    arrow: str
    inverted: bool = False

    @property
    def inverse(self):
        return Letter(self.arrow, not self.inverted)

    def render(self, single):
        if single:
            return self.arrow.upper() if self.inverted else self.arrow
        return self.arrow + "^-1" if self.inverted else self.arrow


@dataclass(frozen=True, order=True)
class Str:
    """A string (or general word): letters in traversal order, or a
    zero-length marker (vertex, sign)."""
    letters: tuple
    vertex: str = None
    sign: int = None

    @staticmethod
    def word(letters):
        return Str(tuple(letters))

    @staticmethod
    def trivial(vertex, sign):
        return Str((), vertex, sign)

    def __len__(self):
        return len(self.letters)

    def __repr__(self):
        return f"Str<{format_str(self)}>"


# -- letter-level semantics --------------------------------------------------

def letter_source(p, letter):
    if letter.arrow not in p.arrows:
        raise UnknownArrow(letter.arrow)
    src, tgt = p.arrows[letter.arrow]
    return tgt if letter.inverted else src


def letter_target(p, letter):
    src, tgt = p.arrows[letter.arrow]
    return src if letter.inverted else tgt


def letter_sigma(p, letter):
    return p.epsilon[letter.arrow] if letter.inverted else p.sigma[letter.arrow]


def letter_epsilon(p, letter):
    return p.sigma[letter.arrow] if letter.inverted else p.epsilon[letter.arrow]


def letter_theta(letter):
    return 1 if letter.inverted else -1


# -- endpoints and signs of words ---------------------------------------------

def source(p, y):
    return y.vertex if not y.letters else letter_source(p, y.letters[0])


def target(p, y):
    return y.vertex if not y.letters else letter_target(p, y.letters[-1])


def sigma(p, y):
    return -y.sign if not y.letters else letter_sigma(p, y.letters[0])


def epsilon(p, y):
    return y.sign if not y.letters else letter_epsilon(p, y.letters[-1])


def theta(p, y):
    if not y.letters:
        raise ZeroLength("theta is undefined for zero-length strings")
    return letter_theta(y.letters[0])


def delta(p, y):
    if not y.letters:
        raise ZeroLength("delta is undefined for zero-length strings")
    signs = {letter_theta(l) for l in y.letters}
    return signs.pop() if len(signs) == 1 else 0


# -- string predicate ---------------------------------------------------------

def is_word(p, letters):
    """Vertex- and sign-composable sequence of letters (hence reduced)."""
    for a, b in zip(letters, letters[1:]):
        if letter_source(p, b) != letter_target(p, a):
            return False
        if letter_sigma(p, b) != -letter_epsilon(p, a):
            return False
    return True


def relation_free(p, letters):
    letters = tuple(letters)
    pairs = tuple((l.arrow, l.inverted) for l in letters)
    for n in p.relation_lengths:
        if n > len(pairs):
            break
        for i in range(len(pairs) - n + 1):
            if pairs[i:i + n] in p.relation_set:
                return False
    return True


def is_string(p, y):
    letters = y.letters if isinstance(y, Str) else tuple(y)
    for l in letters:
        if l.arrow not in p.arrows:
            raise UnknownArrow(l.arrow)
    return is_word(p, letters) and relation_free(p, letters)


# -- concatenation, inverses --------------------------------------------------

def concat(p, x, y):
    """The word x.y (y traversed first, x written to the left); None when the
    junction does not compose or the result is not a string."""
    if source(p, x) != target(p, y) or sigma(p, x) != -epsilon(p, y):
        return None
    if not x.letters and not y.letters:
        return y
    if not x.letters:
        return y
    if not y.letters:
        return x
    w = Str.word(y.letters + x.letters)
    return w if is_string(p, w) else None


def concat_many(p, *parts):
    """Right-to-left concatenation of parts written left to right:
    concat_many(p, x, y, z) is the word x.y.z."""
    acc = parts[-1]
    for x in reversed(parts[:-1]):
        if acc is None:
            return None
        acc = concat(p, x, acc)
    return acc


def inverse(p, y):
    if not y.letters:
        return Str.trivial(y.vertex, -y.sign)
    return Str.word(tuple(l.inverse for l in reversed(y.letters)))


def left_identity(p, y):
    return Str.trivial(target(p, y), epsilon(p, y))


def right_identity(p, y):
    return Str.trivial(source(p, y), -sigma(p, y))


# -- substrings ---------------------------------------------------------------

def left_substring(p, y, k):
    """The left substring of length k (the traversal-initial part)."""
    if k == 0:
        return right_identity(p, y)
    return Str.word(y.letters[:k])


def right_substring(p, y, k):
    """The right substring of length k (the traversal-final part)."""
    if k == 0:
        return left_identity(p, y)
    return Str.word(y.letters[len(y.letters) - k:])


def left_substrings(p, y):
    return [left_substring(p, y, k) for k in range(len(y.letters) + 1)]


def is_left_substring(p, x, y):
    """x is a left substring of y (as anchored substrings from s(y))."""
    if not x.letters:
        return x == right_identity(p, y)
    return y.letters[:len(x.letters)] == x.letters


def is_right_substring(p, x, y):
    if not x.letters:
        return x == left_identity(p, y)
    return len(x) <= len(y) and y.letters[len(y.letters) - len(x.letters):] == x.letters


def z_l(p, y):
    """Longest left substring with delta != 0 (maximal monotone prefix)."""
    k = 0
    while k < len(y.letters) and (k == 0 or letter_theta(y.letters[k]) == letter_theta(y.letters[0])):
        k += 1
    return left_substring(p, y, k)


def z_r(p, y):
    k = 0
    n = len(y.letters)
    while k < n and (k == 0 or letter_theta(y.letters[n - 1 - k]) == letter_theta(y.letters[-1])):
        k += 1
    return right_substring(p, y, k)


def rho_r(p, y):
    """Maximal right substring of positive length that is a proper left
    substring of a relation or inverse relation; 1_(t(y),eps(y)) if none.

    Only relations that are themselves words count: a phantom relation can
    never be completed across the end of a string."""
    pairs = tuple((l.arrow, l.inverted) for l in y.letters)
    for k in range(min(len(pairs), p.maxrel - 1), 0, -1):
        tail = pairs[len(pairs) - k:]
        if any(len(r) > k and r[:k] == tail for r in p.word_relations):
            return Str.word(y.letters[len(pairs) - k:])
    return left_identity(p, y)


def rho_l(p, y):
    return inverse(p, rho_r(p, inverse(p, y)))


# -- forks --------------------------------------------------------------------

@dataclass(frozen=True)
class Fork:
    common: Str
    branch1: Letter
    branch2: Letter
    forks: bool


def fork(p, x1, x2):
    """Maximal common left substring of two distinct strings with equal
    (s, sigma); forks is true when it is proper in both."""
    assert x1 != x2
    assert source(p, x1) == source(p, x2) and sigma(p, x1) == sigma(p, x2)
    k = 0
    while k < len(x1.letters) and k < len(x2.letters) and x1.letters[k] == x2.letters[k]:
        k += 1
    common = left_substring(p, x1, k) if k else right_identity(p, x1)
    b1 = x1.letters[k] if k < len(x1.letters) else None
    b2 = x2.letters[k] if k < len(x2.letters) else None
    return Fork(common, b1, b2, b1 is not None and b2 is not None)


def forks(p, x1, x2):
    return fork(p, x1, x2).forks


# -- extension enumeration ------------------------------------------------------

def extension_letters(p, y):
    """Letters l such that l.y is a string, in deterministic order."""
    t, e = target(p, y), epsilon(p, y)
    out = []
    for name in sorted(p.arrows):
        for l in (Letter(name), Letter(name, True)):
            if letter_source(p, l) != t or letter_sigma(p, l) != -e:
                continue
            tail = y.letters[-(p.maxrel - 1):] + (l,) if y.letters else (l,)
            if relation_free(p, tail):
                out.append(l)
    return out


def enumerate_left_extensions(p, y, maxlen):
    """All strings x.y with |x| <= maxlen, in (length, lexicographic) order."""
    out = [y]
    frontier = [y]
    for _ in range(maxlen):
        nxt = []
        for cur in frontier:
            for l in extension_letters(p, cur):
                nxt.append(Str.word(cur.letters + (l,)))
        frontier = sorted(set(nxt), key=lambda s: s.letters)
        out.extend(frontier)
    return out


def enumerate_strings(p, maxlen):
    """All strings of length <= maxlen (trivial ones included)."""
    out = []
    for v in p.vertices:
        for i in (1, -1):
            out.extend(enumerate_left_extensions(p, Str.trivial(v, i), maxlen))
    seen, uniq = set(), []
    for s in out:
        if s not in seen:
            seen.add(s)
            uniq.append(s)
    return uniq


# -- parsing / rendering --------------------------------------------------------

_TRIVIAL_RE = re.compile(r"^1_\(\s*([^,()\s]+)\s*,\s*([+-]?1)\s*\)$")


def parse_str(p, text):
    """Parse a string literal: single-letter mode "jiFc" (uppercase =
    inverse), explicit mode "j,i,f^-1,c", or trivial "1_(v2,+1)"."""
    text = text.strip()
    m = _TRIVIAL_RE.match(text)
    if m:
        v, i = m.group(1), int(m.group(2))
        if v not in p.vertices:
            raise ParseError(f"unknown vertex {v!r}")
        return Str.trivial(v, i)
    if "," in text or "^-1" in text:
        tokens = [t.strip() for t in text.split(",") if t.strip()]
        written = []
        for tok in tokens:
            inv = tok.endswith("^-1")
            name = tok[:-3] if inv else tok
            if name not in p.arrows:
                raise UnknownArrow(name)
            written.append(Letter(name, inv))
    else:
        written = []
        for ch in text:
            name = ch.lower()
            if name not in p.arrows:
                raise UnknownArrow(ch)
            written.append(Letter(name, ch.isupper()))
    if not written:
        raise ParseError("empty string literal; use 1_(v,i) for trivial strings")
    return Str.word(tuple(reversed(written)))


def format_str(s):
    if not s.letters:
        return f"1_({s.vertex},{'+1' if s.sign > 0 else '-1'})"
    single = all(len(l.arrow) == 1 and l.arrow.islower() for l in s.letters)
    sep = "" if single else ","
    return sep.join(l.render(single) for l in reversed(s.letters))
