"""Bands: primitive cyclic strings, found as elementary cycles of the
forbidden-factor window automaton.

A band is kept up to cyclic rotation only; a band and its inverse are
distinct objects (they are distinct vertices of the bridge quivers).  The
canonical representative is the lexicographically least rotation, but since
bridge words depend on the chosen representative, every Band carries a
representative that callers may override.
"""

from dataclasses import dataclass
from functools import lru_cache

import networkx as nx

from .errors import NonDomesticError
from . import strings as S
from .strings import Letter, Str


@dataclass(frozen=True, order=True)
class Band:
    canonical: tuple  # letters of the canonical rotation, traversal order
    representative: Str

    def __len__(self):
        return len(self.canonical)

    def __repr__(self):
        return f"Band<{S.format_str(self.representative)}>"

    def with_representative(self, rep):
        return Band(self.canonical, rep)

    @property
    def word(self):
        return self.representative

    def rotations(self):
        """All rotations of the representative, representative first."""
        ls = self.representative.letters
        return [ls[k:] + ls[:k] for k in range(len(ls))]


def _window_automaton(p):
    w = max(1, p.maxrel - 1)
    layer = [(Letter(a, inv),) for a in sorted(p.arrows) for inv in (False, True)]
    for _ in range(w - 1):
        layer = [st + (l,) for st in layer for l in S.extension_letters(p, Str.word(st))]
    g = nx.DiGraph()
    g.add_nodes_from(layer)
    for st in layer:
        for l in S.extension_letters(p, Str.word(st)):
            nxt = (st + (l,))[1:]
            if nxt in g:
                g.add_edge(st, nxt, letter=l)
    return g


def _canonical_rotation(letters):
    return min(tuple(letters[k:] + letters[:k]) for k in range(len(letters)))


@lru_cache(maxsize=None)
def bands(p):
    """All bands of p, canonical representatives, sorted; raises
    NonDomesticError with a shared-state certificate when p is not domestic."""
    g = _window_automaton(p)
    found = {}
    state_use = {}
    for cyc in nx.simple_cycles(g):
        letters = tuple(cyc[(i + 1) % len(cyc)][-1] for i in range(len(cyc)))
        word = Str.word(letters)
        if S.delta(p, word) != 0:
            continue  # monotone cycle: not a band (caught by validation)
        key = _canonical_rotation(letters)
        found[key] = Band(key, Str.word(key))
        for st in cyc:
            other = state_use.setdefault(st, key)
            if other != key:
                raise NonDomesticError((st, other, key))
    return tuple(sorted(found.values()))


def find_band(p, word):
    """The band whose orbit contains the given word (a Str or literal)."""
    if isinstance(word, str):
        word = S.parse_str(p, word)
    key = _canonical_rotation(word.letters)
    for b in bands(p):
        if b.canonical == key:
            return b.with_representative(word)
    raise ValueError(f"{S.format_str(word)} is not a rotation of a band")


def with_representatives(p, reps):
    """The band list with the orbits matching the given representative words
    re-based on them; unmatched orbits keep their canonical representative."""
    chosen = {}
    for rep in reps:
        b = find_band(p, rep)
        chosen[b.canonical] = b
    return tuple(chosen.get(b.canonical, b) for b in bands(p))


# -- occurrences, N, B, reductions -------------------------------------------

def occurrences(p, b, y, min_start=0):
    """All (start, rotation letters) positions where a rotation of b occurs
    as a factor of y, at offset >= min_start."""
    out = []
    n, rots = len(y.letters), {tuple(r) for r in b.rotations()}
    for i in range(min_start, n - len(b) + 1):
        window = y.letters[i:i + len(b)]
        if window in rots:
            out.append((i, window))
    return out


def band_power_count(p, b, y, min_start=0):
    """N(x0; b, y): the largest n with y = y2.b'^n.y1 (occurrence offsets
    counted from min_start, the length of the base string x0)."""
    best = 0
    L = len(b)
    for i, rot in occurrences(p, b, y, min_start):
        n = 1
        while y.letters[i + n * L: i + (n + 1) * L] == rot:
            n += 1
        best = max(best, n)
    return best


def bands_of(p, y, min_start=0, band_list=None):
    """B(y): bands with at least one rotation occurring in y."""
    bl = bands(p) if band_list is None else band_list
    return [b for b in bl if band_power_count(p, b, y, min_start) > 0]


@dataclass(frozen=True)
class OccurrenceProfile:
    """Stacked-power counts N(x0; b, y) per band, for bands present in y
    beyond the first min_start letters (the base string x0)."""
    counts: tuple  # ((Band, n), ...) with n > 0

    @property
    def bands_present(self):
        return tuple(b for b, _ in self.counts)

    def count(self, b):
        for b2, n in self.counts:
            if b2.canonical == b.canonical:
                return n
        return 0


def occurrence_profile(p, y, min_start=0, band_list=None):
    bl = bands(p) if band_list is None else band_list
    counts = []
    for b in bl:
        n = band_power_count(p, b, y, min_start)
        if n:
            counts.append((b, n))
    return OccurrenceProfile(tuple(counts))


def is_band_free(p, y):
    return not bands_of(p, y)


def red_b(p, b, y, min_start=0):
    """The 1-step b-reduction Red_b(y): delete one rotation occurrence,
    scanning written-left-first (largest traversal offset first); the first
    split whose deletion result is a string wins.  None if no split works."""
    for i, rot in sorted(occurrences(p, b, y, min_start), reverse=True):
        rest = y.letters[:i] + y.letters[i + len(b):]
        cand = Str.word(rest) if rest else S.right_identity(p, y)
        if not rest or S.is_string(p, cand):
            return cand
    return None


def skeleton(p, y, min_start=0, band_list=None):
    """sk{y}: collapse every band power to a single occurrence."""
    for b in (bands(p) if band_list is None else band_list):
        while band_power_count(p, b, y, min_start) > 1:
            reduced = red_b(p, b, y, min_start)
            if reduced is None:
                break
            y = reduced
    return y


def is_skeletal(p, y, min_start=0):
    return all(band_power_count(p, b, y, min_start) <= 1 for b in bands(p))


# -- exits ---------------------------------------------------------------------

def exit_letters(p, b):
    """E(b): letters v, not syllables of b, with v.b' a string for some
    rotation b'."""
    syllables = set(b.canonical)
    out = []
    for rot in b.rotations():
        w = Str.word(rot)
        for l in S.extension_letters(p, w):
            if l not in syllables and l not in out:
                out.append(l)
    return sorted(out)
