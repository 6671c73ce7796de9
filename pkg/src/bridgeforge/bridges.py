"""Weak bridges, bridges, the partial composition o, exits/entries and the
normal/abnormal calculus, and the (weak) bridge quiver.

A weak bridge b1 --u--> b2 is a band-free string u such that the word
b2.u.b1 is a string (for the fixed band representatives).  Endpoints may
also be plain strings: a weak half bridge goes x0 -> b, a weak reverse half
bridge b -> 1_(v,j), a weak zero bridge x0 -> 1_(v,j).

All positional work happens on the frame word

    W = s s u t t      (traversal order: source part first)

where the source/target parts are two copies of the band representative, or
a single copy of the endpoint string.  The exit beta(u) is the first letter
after the source copy deviating from the source pattern; the entry alpha(u)
is dual.  The letters before beta(u) always follow the source-band pattern
and the letters after alpha(u) the target-band pattern, which is what makes
the rotation extraction below correct.
"""

import itertools
import os
from dataclasses import dataclass
from functools import lru_cache

from . import bands as B
from . import strings as S
from .bands import Band
from .errors import BridgeforgeError, NoExit
from .strings import Str

try:
    import networkx as nx
except ImportError:  # pragma: no cover
    nx = None


@dataclass(frozen=True)
class WeakBridge:
    source: object  # Band or Str
    target: object  # Band or Str
    word: Str

    def __repr__(self):
        return (f"WeakBridge<{_end_name(self.source)}--"
                f"{S.format_str(self.word)}-->{_end_name(self.target)}>")

    @property
    def is_trivial(self):
        return len(self.word) == 0 and self.source == self.target

    @property
    def band_to_band(self):
        return isinstance(self.source, Band) and isinstance(self.target, Band)


@dataclass(frozen=True)
class NormalData:
    interior: Str  # u^o


@dataclass(frozen=True)
class AbnormalData:
    u_c: Str
    u_e: Str
    u_beta_up: Str    # u^beta
    u_beta_low: Str   # u_beta
    u_alpha_up: Str   # u^alpha
    u_alpha_low: Str  # u_alpha
    b_alpha_up: Str   # b^alpha: rotation of t(u), b^alpha.alpha(u) in t(u)^2 u
    b_alpha_low: Str  # b_alpha: rotation of s(u) with u^c a left substring
    b_beta_up: Str    # b^beta: rotation of s(u) with beta(u).b^beta a string
    b_beta_low: Str   # b_beta: rotation of t(u) with u^c a right substring


def _end_name(end):
    if isinstance(end, Band):
        return S.format_str(end.representative)
    return S.format_str(end)


def _end_letters(end):
    """(letters of one period/copy, periodic?) for a bridge endpoint."""
    if isinstance(end, Band):
        return tuple(end.representative.letters), True
    return tuple(end.letters), False


def _end_string(end):
    return end.representative if isinstance(end, Band) else end


# -- weak bridge recognition and enumeration ----------------------------------

def is_weak_bridge(p, source, target, word):
    """word is band-free and target.word.source is a string."""
    if not B.is_band_free(p, word):
        return False
    return S.concat_many(p, _end_string(target), word, _end_string(source)) is not None


DEFAULT_MAXLEN = 64


def _maxlen(p):
    env = os.environ.get("BRIDGEFORGE_MAXLEN")
    if env:
        return int(env)
    return max(DEFAULT_MAXLEN, 4 * len(p.arrows))


@lru_cache(maxsize=None)
def band_free_strings(p):
    """All band-free strings (including the zero-length ones).  Band-free
    strings are closed under left substrings, so breadth-first left
    extension visits exactly this finite set; the length cap only guards
    against a non-domestic input slipping past the band enumeration."""
    cap = _maxlen(p)
    out = []
    frontier = [Str.trivial(v, i) for v in p.vertices for i in (1, -1)]
    while frontier:
        out.extend(frontier)
        nxt = []
        for y in frontier:
            for l in S.extension_letters(p, y):
                z = Str.word(y.letters + (l,))
                if B.is_band_free(p, z):
                    nxt.append(z)
        if nxt and len(nxt[0]) > cap:
            raise BridgeforgeError(
                f"band-free string of length > {cap} found; the input is "
                "likely non-domestic (override with BRIDGEFORGE_MAXLEN)")
        frontier = nxt
    return tuple(out)


@lru_cache(maxsize=None)
def _weak_bridges_cached(p, b1, b2):
    found = []
    for u in band_free_strings(p):
        if is_weak_bridge(p, b1, b2, u):
            found.append(WeakBridge(b1, b2, u))
    return tuple(sorted(found, key=lambda w: (len(w.word), S.format_str(w.word))))


def weak_bridges(p, b1, b2, include_trivial=False):
    """All weak bridges b1 -> b2 (for the representatives carried by b1, b2),
    ordered by (length, rendering)."""
    return [w for w in _weak_bridges_cached(p, b1, b2)
            if include_trivial or not w.is_trivial]


def trivial_bridge(p, b):
    return WeakBridge(b, b, S.left_identity(p, b.representative))


# -- composition ---------------------------------------------------------------

@dataclass(frozen=True)
class Composition:
    """Result of u2 o u1: .arrow is set, or .tag explains why not."""
    arrow: object
    tag: str

    def __bool__(self):
        return self.arrow is not None


def compose(p, u2, u1):
    """The partial composition u2 o u1 of weak bridges.

    u2 o u1 = u2u1 if that word is a weak bridge; otherwise, when
    N(t(u1), u2u1) = 1, it is Red_{t(u1)}(u2u1) provided that reduction
    exists and is a weak bridge.  Failures carry a diagnostic tag."""
    if u1.target != u2.source:
        return Composition(None, "target mismatch")
    w = S.concat(p, u2.word, u1.word)
    if w is None:
        return Composition(None, "reduction nonexistent")
    if is_weak_bridge(p, u1.source, u2.target, w):
        return Composition(WeakBridge(u1.source, u2.target, w), "word")
    band = u1.target
    n = B.band_power_count(p, band, w)
    if n != 1:
        if not B.is_band_free(p, w):
            # w is a string that contains a band which is not the junction
            # band occurring exactly once, so no reduction applies to it.
            return Composition(
                None, "reduction not band-free / contains another band")
        return Composition(None, "reduction nonexistent")
    red = B.red_b(p, band, w)
    if red is None:
        return Composition(None, "reduction nonexistent")
    if not B.is_band_free(p, red):
        return Composition(None, "reduction not band-free / contains another band")
    if not is_weak_bridge(p, u1.source, u2.target, red):
        return Composition(None, "reduction nonexistent")
    return Composition(WeakBridge(u1.source, u2.target, red), "reduced")


def _aligned_bands(p, *fixed):
    """The band list with orbits that coincide with one of the fixed bands
    replaced by that band, so that every orbit appears with one consistent
    representative.  Mixing representatives of one orbit would manufacture
    rotation-shim 'bridges' between copies of the same band."""
    out = []
    for b in B.bands(p):
        for f in fixed:
            if f.canonical == b.canonical:
                b = f
                break
        out.append(b)
    return out


def is_bridge(p, u):
    """o-irreducibility of a nontrivial weak bridge over all nontrivial
    weak-bridge pairs through all bands.  Whether a factorization through an
    intermediate band exists does not depend on that band's representative,
    so the canonical intermediates suffice; the endpoints keep u's own
    representatives so that composition results are comparable to u."""
    for b in _aligned_bands(p, u.source, u.target):
        for u1 in weak_bridges(p, u.source, b):
            for u2 in weak_bridges(p, b, u.target):
                c = compose(p, u2, u1)
                if c and c.arrow == u:
                    return False
    return True


def all_weak_bridges(p, band_list=None):
    bs = tuple(band_list) if band_list is not None else B.bands(p)
    out = []
    for b1 in bs:
        for b2 in bs:
            out.extend(weak_bridges(p, b1, b2))
    return tuple(out)


# -- frames, exits and entries ---------------------------------------------------

def _frame(p, u):
    """(W letters, start of u, start of the target part) with two copies of
    each band endpoint and one copy of each string endpoint."""
    s_let, s_per = _end_letters(u.source)
    t_let, t_per = _end_letters(u.target)
    s_part = s_let * 2 if s_per else s_let
    t_part = t_let * 2 if t_per else t_let
    return s_part + u.word.letters + t_part, len(s_part), len(s_part) + len(u.word)


def _is_factor_of_power(pattern, letters):
    """letters occurs as a factor of pattern repeated."""
    if not pattern:
        return not letters
    reps = len(letters) // len(pattern) + 2
    big = pattern * reps
    n = len(letters)
    return any(big[i:i + n] == letters for i in range(len(pattern)))


def exit_position(p, u):
    """Index in the frame W of beta(u): the first letter after the source
    part such that source-part + scanned prefix is no longer a factor of a
    power of the source (band) or a left extension of the source (string)."""
    W, u0, t0 = _frame(p, u)
    s_let, s_per = _end_letters(u.source)
    for i in range(u0, len(W)):
        seg = W[:i + 1]
        if s_per:
            if not _is_factor_of_power(s_let, seg):
                return i
        else:
            # a plain string never repeats: the first extra letter deviates
            return i
    raise NoExit(f"no exit syllable for {u!r}")


def entry_position(p, u):
    """Index in the frame W of alpha(u), via the exit of the inverse arrow."""
    W, u0, t0 = _frame(p, u)
    t_let, t_per = _end_letters(u.target)
    inv_t = tuple(l.inverse for l in reversed(t_let))
    for j in range(t0 - 1, -1, -1):
        if t_per:
            seg_inv = tuple(l.inverse for l in reversed(W[j:]))
            if not _is_factor_of_power(inv_t, seg_inv):
                return j
        else:
            return j
    raise NoExit(f"no entry syllable for {u!r}")


def exit(p, u):
    W, _, _ = _frame(p, u)
    return W[exit_position(p, u)]


def entry(p, u):
    W, _, _ = _frame(p, u)
    return W[entry_position(p, u)]


def _rotation_from(letters, start, period):
    """The |period| letters of the periodic pattern beginning at phase
    start (mod |period|)."""
    n = len(period)
    return tuple(period[(start + m) % n] for m in range(n))


# -- classification -------------------------------------------------------------

def is_abnormal(p, u):
    return exit_position(p, u) > entry_position(p, u)


def classify(p, u):
    """NormalData (interior u^o) or AbnormalData (the full complemented
    calculus) for a weak bridge with exit and entry."""
    W, u0, t0 = _frame(p, u)
    pb, pa = exit_position(p, u), entry_position(p, u)
    beta, alpha = W[pb], W[pa]
    if pb <= pa:
        return NormalData(Str.word(W[pb:pa + 1]))

    # abnormal: u^c sits strictly between beta and alpha in traversal order
    core = W[pa + 1:pb]
    if core:
        u_c = Str.word(core)
    else:
        u_c = Str.trivial(S.letter_target(p, alpha), S.letter_epsilon(p, alpha))

    s_let, _ = _end_letters(u.source)
    t_let, _ = _end_letters(u.target)
    b_alpha_up = Str.word(W[pa + 1:pa + 1 + len(t_let)])
    b_beta_up = Str.word(W[pb - len(s_let):pb])
    b_alpha_low = Str.word(_rotation_from(s_let, (pa + 1) % len(s_let), s_let))
    b_beta_low = Str.word(_rotation_from(t_let, (pb - t0) % len(t_let), t_let))

    u_e = _shortest_blocking_prefix(p, b_alpha_low, b_alpha_up, len(u_c))
    u_beta_up = Str.word(u_e.letters[len(u_c):])
    u_alpha_up = _shortest_blocking_suffix(p, b_alpha_up, b_alpha_low)
    u_beta_low = _relation_completion_suffix(p, b_alpha_up, u_c, u_beta_up)
    u_alpha_low = _relation_completion_prefix(p, b_beta_up, u_c, u_alpha_up)
    return AbnormalData(u_c, u_e, u_beta_up, u_beta_low, u_alpha_up,
                        u_alpha_low, b_alpha_up, b_alpha_low, b_beta_up,
                        b_beta_low)


def _shortest_blocking_prefix(p, b_low, b_up, min_len):
    """u^e: shortest left substring of b_alpha, longer than u^c, such that
    the word u^e.b^alpha is not a string."""
    period = b_low.letters * (2 + (min_len + p.maxrel) // len(b_low))
    for k in range(min_len + 1, len(period) + 1):
        cand = b_up.letters + period[:k]
        if not S.is_string(p, Str.word(cand)):
            return Str.word(period[:k])
    raise BridgeforgeError("u^e not found; is the algebra domestic?")


def _shortest_blocking_suffix(p, b_up, b_low):
    """u^alpha: shortest right substring of b^alpha with b_alpha.u^alpha not
    a string."""
    period = b_up.letters * (2 + p.maxrel // len(b_up))
    for k in range(1, len(period) + 1):
        cand = period[len(period) - k:] + b_low.letters
        if not S.is_string(p, Str.word(cand)):
            return Str.word(period[len(period) - k:])
    raise BridgeforgeError("u^alpha not found; is the algebra domestic?")


def _relation_completion_suffix(p, b_up, u_c, u_beta_up):
    """u_beta: shortest right substring of b^alpha with u^beta.u^c.u_beta in
    rho u rho^-1."""
    period = b_up.letters * (2 + p.maxrel // len(b_up))
    for k in range(1, p.maxrel + 1):
        word = period[len(period) - k:] + u_c.letters + u_beta_up.letters
        if tuple((l.arrow, l.inverted) for l in word) in p.relation_set:
            return Str.word(period[len(period) - k:])
    raise BridgeforgeError("u_beta not found; is the algebra domestic?")


def _relation_completion_prefix(p, b_up, u_c, u_alpha_up):
    """u_alpha: shortest left substring of b^beta with u_alpha.u^c.u^alpha in
    rho u rho^-1."""
    period = b_up.letters * (2 + p.maxrel // len(b_up))
    for k in range(1, p.maxrel + 1):
        word = u_alpha_up.letters + u_c.letters + period[:k]
        if tuple((l.arrow, l.inverted) for l in word) in p.relation_set:
            return Str.word(period[:k])
    raise BridgeforgeError("u_alpha not found; is the algebra domestic?")


def rotations_of(p, u):
    """(b^alpha, b^beta) for any weak bridge with entry/exit; for abnormal
    ones classify() additionally carries b_alpha and b_beta."""
    W, u0, t0 = _frame(p, u)
    pb, pa = exit_position(p, u), entry_position(p, u)
    s_let, _ = _end_letters(u.source)
    t_let, _ = _end_letters(u.target)
    b_alpha_up = Str.word(W[pa + 1:pa + 1 + len(t_let)]) if t_let else None
    b_beta_up = Str.word(W[pb - len(s_let):pb]) if s_let else None
    return b_alpha_up, b_beta_up


# -- exits of a band: lambda-sets and incidence ----------------------------------

def weak_reverse_half_bridges(p, b):
    """Band-free strings u with u.b a string (b -> 1_(t(u),eps(u)))."""
    out = []
    rep = b.representative
    for u in band_free_strings(p):
        if S.concat(p, u, rep) is not None:
            tgt = Str.trivial(S.target(p, u) if len(u) else S.target(p, rep),
                              S.epsilon(p, u) if len(u) else S.epsilon(p, rep))
            out.append(WeakBridge(b, tgt, u))
    return sorted(out, key=lambda w: (len(w.word), S.format_str(w.word)))


def is_torsion_reverse_half(p, u, band_list=None):
    """u.b forks with b^2 and with b'.u'.b for every weak bridge u' out of b."""
    b = u.source
    rep = b.representative
    ub = S.concat(p, u.word, rep)
    if ub is None:
        return False
    b2 = S.concat(p, rep, rep)
    if b2 is not None and not S.forks(p, ub, b2):
        return False
    for b2_ in (band_list if band_list is not None else _aligned_bands(p, b)):
        for u1 in weak_bridges(p, b, b2_):
            w = S.concat_many(p, u1.target.representative, u1.word, rep)
            if w is not None and not S.forks(p, ub, w):
                return False
    return True


def maximal_torsion_reverse_half_bridges(p, b, band_list=None):
    all_rev = weak_reverse_half_bridges(p, b)
    words = {u.word for u in all_rev}
    out = []
    for u in all_rev:
        if not is_torsion_reverse_half(p, u, band_list):
            continue
        proper_ext = any(len(w) > len(u.word) and w.letters[:len(u.word)] == u.word.letters
                         for w in words)
        if not proper_ext:
            out.append(u)
    return out


def lambda_bar(p, v, b, band_list=None):
    """(lambda^b(v), lambda^r(v), lambda^a(v) or None) for v in E(b).

    band_list fixes the representative used for each target orbit; the word
    of an arrow depends on that choice."""
    if band_list is None:
        band_list = _aligned_bands(p, b)
    lam_b = [u for b2 in band_list for u in weak_bridges(p, b, b2)
             if exit(p, u) == v]
    lam_r = [u for u in maximal_torsion_reverse_half_bridges(p, b, band_list)
             if len(u.word) and exit(p, u) == v]
    abn = [u for u in lam_b if is_abnormal(p, u)]
    return lam_b, lam_r, (abn[0] if abn else None)


def abnormal_exits(p, b, band_list=None):
    return [v for v in B.exit_letters(p, b)
            if lambda_bar(p, v, b, band_list)[2] is not None]


def incidence(p, v, v_prime, b, band_list=None):
    """v incident on v': v' abnormal with a partition lambda^a(v')^e = x2.x1,
    |x2| > 0, such that v.x1 is a string."""
    abn = lambda_bar(p, v_prime, b, band_list)[2]
    if abn is None:
        return False
    u_e = classify(p, abn).u_e
    for k in range(len(u_e)):
        x1 = (S.left_substring(p, u_e, k) if k
              else Str.trivial(S.source(p, u_e), -S.sigma(p, u_e)))
        if S.concat(p, Str.word((v,)), x1) is not None:
            return True
    return False


# -- quivers ---------------------------------------------------------------------

@dataclass(frozen=True)
class BridgeQuiver:
    nodes: tuple   # Band objects
    arrows: tuple  # WeakBridge objects

    def is_acyclic(self):
        g = nx.MultiDiGraph()
        g.add_nodes_from(self.nodes)
        g.add_edges_from((a.source, a.target) for a in self.arrows)
        return nx.is_directed_acyclic_graph(g)

    def arrows_between(self, b1, b2):
        return [a for a in self.arrows if a.source == b1 and a.target == b2]


def build_weak_bridge_quiver(p, band_list=None):
    bs = tuple(band_list) if band_list is not None else B.bands(p)
    return BridgeQuiver(bs, all_weak_bridges(p, bs))


def build_bridge_quiver(p, band_list=None):
    bs = tuple(band_list) if band_list is not None else B.bands(p)
    return BridgeQuiver(
        bs, tuple(u for u in all_weak_bridges(p, bs) if is_bridge(p, u)))


# -- case-by-case interiors of a composition --------------------------------------

def _shortest_left_joining(p, rot, left, right, min_len=0):
    """Shortest left substring w of the periodic rot (length >= min_len)
    such that the written word left.w.right is a string."""
    period = rot.letters * (2 + p.maxrel // len(rot))
    for k in range(min_len, len(period) + 1):
        if k == 0:
            cand = S.concat(p, left, right)
        else:
            w = Str.word(period[:k])
            cand = S.concat_many(p, left, w, right)
        if cand is not None:
            return (Str.word(period[:k]) if k
                    else Str.trivial(S.target(p, right), S.epsilon(p, right)))
    return None


def interiors_of_composition(p, u2, u1):
    """Case tag (I, II(1..3), III(1..3), IV(1..2)) and the interior or
    complemented interior of u = u2 o u1 predicted from the data of u1, u2."""
    comp = compose(p, u2, u1)
    if not comp:
        raise BridgeforgeError(f"composition does not exist: {comp.tag}")
    u = comp.arrow
    c1, c2, c = classify(p, u1), classify(p, u2), classify(p, u)
    n1, n2 = isinstance(c1, NormalData), isinstance(c2, NormalData)

    if n1 and n2:
        # Case I: u normal, u^o = u2^o w u1^o with w the shortest left
        # substring of b^alpha(u1) making the concatenation a string.
        b_au1, _ = rotations_of(p, u1)
        w = _shortest_left_joining(p, b_au1, c2.interior, c1.interior)
        pred = S.concat_many(p, c2.interior, w, c1.interior) if len(w) else \
            S.concat(p, c2.interior, c1.interior)
        return "I", pred

    if n1 and not n2:
        # Case II: u normal; subcase by |w| vs |u2^c| where w is the smallest
        # left substring of b^alpha(u1) with beta(u2).w.alpha(u1) a string.
        b_au1, _ = rotations_of(p, u1)
        beta2 = Str.word((exit(p, u2),))
        alpha1 = Str.word((entry(p, u1),))
        w = _shortest_left_joining(p, b_au1, beta2, alpha1)
        if len(c2.u_c) > len(w):
            return "II(1)", c1.interior
        if len(c2.u_c) == len(w):
            # u1^o = w'' u^o with w'' the maximal common right substring of
            # b^alpha(u2) and u1^o; predict u^o by stripping w''.
            b_au2 = c2.b_alpha_up
            per = b_au2.letters * (2 + len(c1.interior) // len(b_au2))
            k = 0
            while (k < len(c1.interior) and k < len(per)
                   and c1.interior.letters[len(c1.interior) - 1 - k]
                   == per[len(per) - 1 - k]):
                k += 1
            rest = c1.interior.letters[:len(c1.interior) - k]
            pred = Str.word(rest) if rest else None
            return "II(2)", pred
        extra = w.letters[:len(w) - len(c2.u_c)]
        return "II(3)", Str.word(c1.interior.letters + extra)

    if not n1 and n2:
        # Case III: u normal; subcase by |x1| vs |u1^c| where u1^e = x2.x1
        # with |x2| > 0 and beta(u).x1 a string.
        beta_u = Str.word((exit(p, u),))
        u_e = c1.u_e
        x1_len = None
        for k in range(len(u_e) - 1, -1, -1):
            x1 = (S.left_substring(p, u_e, k) if k
                  else Str.trivial(S.source(p, u_e), -S.sigma(p, u_e)))
            if S.concat(p, beta_u, x1) is not None:
                x1_len = k
                break
        if x1_len is None:
            raise BridgeforgeError("case III: no valid partition of u1^e")
        if x1_len < len(c1.u_c):
            return "III(1)", c2.interior
        if x1_len == len(c1.u_c):
            w = _shortest_left_joining(
                p, c1.b_beta_low, c2.interior,
                Str.trivial(S.source(p, c1.b_beta_low), -S.sigma(p, c1.b_beta_low)),
                min_len=1)
            pred = Str.word(w.letters + c2.interior.letters) if w else None
            return "III(2)", pred
        x1 = S.left_substring(p, u_e, x1_len)
        for k in range(len(c2.interior), 0, -1):
            w = Str.word(c2.interior.letters[len(c2.interior) - k:])
            if S.concat(p, w, x1) is not None:
                return "III(3)", w
        raise BridgeforgeError("case III(3): empty interior predicted")

    # Case IV: both abnormal.
    if isinstance(c, AbnormalData):
        # u^c is a left substring of u1^c and a right substring of u2^c.
        ok = (c.u_c.letters == c1.u_c.letters[:len(c.u_c)]
              and c.u_c.letters == c2.u_c.letters[len(c2.u_c) - len(c.u_c):])
        return "IV(1)", c.u_c if ok else None
    w = _shortest_left_joining(p, c1.b_beta_low, c2.u_c, c1.u_c, min_len=1)
    return "IV(2)", w
