"""Everything relative to a base string x0: the hammock H_l(x0) and its two
sides, weak half/zero/reverse half bridges, the extended weak/ordinary
quivers, H-reduction relative to (i, x0) and the extended arch and semi
layers, and the linear order <_l on hammocks.

Conventions mirror bridges/arch: a weak half bridge x0 --u--> b is a
band-free u with b.u.x0 a string.  A normal u (not a factor of a power of b)
is framed by the fixed representative of b, exactly like a weak bridge
between bands; an abnormal u wraps into the band, so its frame uses the
rotation it wraps into, and the arrow is the cut of the periodic ray at its
first sign change: u has constant sign and the next ray letter has the
opposite sign (for |u| = 0 the wrap evidence must come from x0 itself).  A
weak zero bridge x0 --u--> 1_(v,j) has u.x0 a string with j = eps(u), and a
weak reverse half bridge goes from a band to a 0-length string.  The side-i
quiver keeps at x0 only the arrows extending into side i of the hammock
(theta of the letter adjacent to x0); the partition sign theta(u) of the
written-first syllable is exposed separately as half_theta.
"""

from dataclasses import dataclass
from functools import cmp_to_key

from . import arch as A
from . import bands as B
from . import bridges as BR
from . import hred as HR
from . import strings as S
from .arch import ArchArrow
from .bands import Band
from .bridges import BridgeQuiver, WeakBridge
from .errors import (BridgeforgeError, DifferentBase, NotInHammock,
                     NotInHammockSide)
from .strings import Str


# -- hammock membership -------------------------------------------------------

def in_hammock(p, x0, y):
    """y in H_l(x0): y = z.x0 for some (possibly 0-length) extension z."""
    if y == x0:
        return True
    n0 = len(x0.letters)
    if len(y.letters) <= n0 or y.letters[:n0] != x0.letters:
        return False
    z = Str.word(y.letters[n0:])
    return S.concat(p, z, x0) is not None


def hammock_side(p, x0, y):
    """+1 or -1 for a proper extension of x0, 0 for x0 itself."""
    if y == x0:
        return 0
    if not in_hammock(p, x0, y):
        raise NotInHammock(f"{S.format_str(y)} is not a left extension of "
                           f"{S.format_str(x0)}")
    return S.letter_theta(y.letters[len(x0.letters)])


def in_hammock_side(p, x0, i, y):
    """y in H_l^i(x0); x0 itself belongs to both sides."""
    try:
        return hammock_side(p, x0, y) in (0, i)
    except NotInHammock:
        return False


def _require_side(p, x0, i, y):
    if not in_hammock_side(p, x0, i, y):
        raise NotInHammockSide(
            f"{S.format_str(y)} is not in H_l^{i:+d}({S.format_str(x0)})")


# -- weak half / zero bridges --------------------------------------------------

def half_theta(p, u):
    """theta of a weak half bridge for the lambda-bar partition: theta of
    its written-first syllable.  For a 0-length arrow it is theta of the
    wrapping rotation, which the defining condition forces to be +1."""
    if u.word.letters:
        return S.letter_theta(u.word.letters[-1])
    return 1


def arrow_theta(p, u):
    """Side of the hammock of x0 that an arrow u out of x0 extends into:
    theta of the letter adjacent to x0.  For a 0-length half bridge that
    letter belongs to the witnessing rotation of the target band."""
    if u.word.letters:
        return S.letter_theta(u.word.letters[0])
    if isinstance(u.target, Band):
        for r in _witness_rotations(p, u.source, u.target, u.word):
            return S.letter_theta(r.letters[0])
    return u.target.sign if hasattr(u.target, 'sign') else 1


def _band_rotations(p, b):
    return [Str.word(tuple(r)) for r in b.rotations()]


def half_frames(p, x0, b, u):
    """All strings b~.u.x0 over rotations b~ of b (the frame is
    rotation-sensitive, so the defining condition quantifies over them)."""
    out = []
    for r in _band_rotations(p, b):
        w = S.concat_many(p, r, u, x0)
        if w is not None:
            out.append(w)
    return out


def _witness_rotations(p, x0, b, u):
    """Rotations b~ of b with b~.u.x0 a string."""
    return [r for r in _band_rotations(p, b)
            if S.concat_many(p, r, u, x0) is not None]


def _is_abnormal_word(p, b, u):
    if not u.letters:
        return True
    return BR._is_factor_of_power(b.representative.letters, u.letters)


def _abnormal_half_ok(p, x0, b, u, witnesses):
    """An abnormal u wraps into the band, so every cut of the periodic ray
    along b is frame-valid; the genuine arrow is the cut at the first sign
    change of the ray: u has constant sign and the next ray letter has the
    opposite sign.  A 0-length u carries no wrap evidence of its own, so it
    additionally needs x0 itself to wrap into the band."""
    if not u.letters:
        return (len(x0.letters) > 0
                and BR._is_factor_of_power(b.representative.letters,
                                           x0.letters))
    t0 = S.letter_theta(u.letters[0])
    if any(S.letter_theta(g) != t0 for g in u.letters):
        return False
    return any(S.letter_theta(r.letters[0]) != t0 for r in witnesses)


def weak_half_bridges(p, x0, b):
    """Weak half bridges x0 --u--> b: band-free u (0-length allowed) with
    b.u.x0 a string.  A normal u is framed by the fixed representative of b,
    mirroring weak bridges between bands; an abnormal u (a factor of a power
    of b) is framed by the rotation it wraps into."""
    rep = Str.word(b.representative.letters)
    out = []
    for u in BR.band_free_strings(p):
        if _is_abnormal_word(p, b, u):
            witnesses = _witness_rotations(p, x0, b, u)
            if not witnesses or not _abnormal_half_ok(p, x0, b, u, witnesses):
                continue
        elif S.concat_many(p, rep, u, x0) is None:
            continue
        out.append(WeakBridge(x0, b, u))
    return sorted(out, key=lambda w: (len(w.word), S.format_str(w.word)))


def arrow_frames(p, u):
    """The defining frame strings b.u.x0 of a weak half bridge."""
    x0, b = u.source, u.target
    if _is_abnormal_word(p, b, u.word):
        return [S.concat_many(p, r, u.word, x0)
                for r in _witness_rotations(p, x0, b, u.word)]
    rep = Str.word(b.representative.letters)
    return [S.concat_many(p, rep, u.word, x0)]


def weak_zero_bridges(p, x0):
    """Band-free strings u with u.x0 a string (x0 -> 1_(t(u),eps(u)))."""
    out = []
    for u in BR.band_free_strings(p):
        if S.concat(p, u, x0) is not None:
            tgt = Str.trivial(S.target(p, u) if len(u) else S.target(p, x0),
                              S.epsilon(p, u) if len(u) else S.epsilon(p, x0))
            out.append(WeakBridge(x0, tgt, u))
    return sorted(out, key=lambda w: (len(w.word), S.format_str(w.word)))


def is_torsion_zero(p, x0, u, band_list=None):
    """|u| > 0 and u.x0 forks with b'.u'.x0 for every weak half bridge u'."""
    if not u.word.letters:
        return False
    ux0 = S.concat(p, u.word, x0)
    if ux0 is None:
        return False
    bl = band_list if band_list is not None else list(B.bands(p))
    for b in bl:
        for u1 in weak_half_bridges(p, x0, b):
            for w in arrow_frames(p, u1):
                if not S.forks(p, ux0, w):
                    return False
    return True


def maximal_torsion_zero_bridges(p, x0, band_list=None):
    pool = weak_zero_bridges(p, x0)
    words = {u.word for u in pool}
    out = []
    for u in pool:
        if not is_torsion_zero(p, x0, u, band_list):
            continue
        proper_ext = any(len(w) > len(u.word)
                         and w.letters[:len(u.word)] == u.word.letters
                         for w in words)
        if not proper_ext:
            out.append(u)
    return out


def is_abnormal_half(p, u):
    """u is a right substring of the target band (0-length is abnormal)."""
    if not isinstance(u.target, Band):
        raise BridgeforgeError("abnormality is defined for half bridges")
    if not u.word.letters:
        return True
    return BR._is_factor_of_power(u.target.representative.letters,
                                  u.word.letters)


# -- the extended weak bridge quiver -------------------------------------------

def _node_key(n):
    if isinstance(n, Band):
        return (1, S.format_str(n.representative))
    return (2, S.format_str(n))


def build_extended_weak_quiver(p, x0, i=None, band_list=None):
    """barQ^Ba(x0) (or barQ^Ba_i(x0) when i is given): weak bridges between
    bands, weak half bridges and maximal torsion weak zero bridges from x0
    (restricted to sign i when given), and maximal torsion weak reverse half
    bridges, on the vertices reachable from x0."""
    bl = list(B.bands(p)) if band_list is None else list(band_list)
    starts = [u for b in bl for u in weak_half_bridges(p, x0, b)]
    starts += maximal_torsion_zero_bridges(p, x0, bl)
    if i is not None:
        starts = [u for u in starts if arrow_theta(p, u) == i]
    others = list(BR.all_weak_bridges(p, bl))
    others += [u for b in bl
               for u in BR.maximal_torsion_reverse_half_bridges(p, b, bl)]

    reachable = {x0}
    frontier = [x0]
    pool = starts + others
    while frontier:
        node = frontier.pop()
        outgoing = starts if node == x0 else [u for u in others
                                              if u.source == node]
        for u in outgoing:
            if u.target not in reachable:
                reachable.add(u.target)
                frontier.append(u.target)

    nodes = [x0] + sorted((n for n in reachable if n != x0), key=_node_key)
    arrows = [u for u in pool if u.source in reachable]
    arrows.sort(key=lambda u: (_node_key(u.source), _node_key(u.target),
                               len(u.word), S.format_str(u.word)))
    return BridgeQuiver(tuple(nodes), tuple(arrows))


def compose_from_base(p, u2, u1):
    """u2 o u1 when u1 is an arrow out of a base string; the composite must
    itself be a weak half (or zero) bridge from the base.  Returns a
    WeakBridge or None."""
    if u1.target != u2.source or not isinstance(u1.target, Band):
        return None
    w = S.concat(p, u2.word, u1.word)
    if w is None:
        return None
    x0 = u1.source

    def ok(word):
        if not B.is_band_free(p, word):
            return False
        if isinstance(u2.target, Band):
            return any(wb.word == word
                       for wb in weak_half_bridges(p, x0, u2.target))
        return S.concat(p, word, x0) is not None

    if ok(w):
        return WeakBridge(x0, u2.target, w)
    band = u1.target
    if B.band_power_count(p, band, w) != 1:
        return None
    red = B.red_b(p, band, w)
    if red is None or not ok(red):
        return None
    return WeakBridge(x0, u2.target, red)


def _compose_words(p, u2, u1):
    """The word of u2 o u1, or None; dispatches on the type of the source."""
    if isinstance(u1.source, Band):
        c = BR.compose(p, u2, u1)
        return c.arrow.word if c else None
    c = compose_from_base(p, u2, u1)
    return c.word if c else None


def factorizations(p, quiver, u):
    """Pairs (u2, u1) of arrows of the quiver with u2 o u1 = u."""
    out = []
    for u1 in quiver.arrows:
        if u1.source != u.source or not isinstance(u1.target, Band):
            continue
        for u2 in quiver.arrows:
            if u2.source != u1.target or u2.target != u.target:
                continue
            if _compose_words(p, u2, u1) == u.word:
                out.append((u2, u1))
    return out


def is_extended_bridge(p, x0, u, band_list=None, quiver=None):
    """o-irreducibility of an arrow over the full (both-sided) extended
    weak bridge quiver; this is the unsubscripted half/zero/reverse-half
    bridge notion."""
    q = quiver or build_extended_weak_quiver(p, x0, None, band_list)
    return not factorizations(p, q, u)


def half_bridges(p, x0, b, band_list=None):
    q = build_extended_weak_quiver(p, x0, None, band_list)
    return [u for u in weak_half_bridges(p, x0, b)
            if is_extended_bridge(p, x0, u, quiver=q)]


def zero_bridges(p, x0, band_list=None):
    q = build_extended_weak_quiver(p, x0, None, band_list)
    return [u for u in maximal_torsion_zero_bridges(p, x0, band_list)
            if is_extended_bridge(p, x0, u, quiver=q)]


def reverse_half_bridges(p, x0, b, band_list=None):
    q = build_extended_weak_quiver(p, x0, None, band_list)
    return [u for u in BR.maximal_torsion_reverse_half_bridges(p, b, band_list)
            if is_extended_bridge(p, x0, u, quiver=q)]


def build_extended_bridge_quiver(p, x0, i=None, band_list=None):
    """Q^Ba(x0) / Q^Ba_i(x0): arrows of the weak quiver that are not
    o-compositions of two of its arrows."""
    q = build_extended_weak_quiver(p, x0, i, band_list)
    arrows = tuple(u for u in q.arrows if not factorizations(p, q, u))
    return BridgeQuiver(q.nodes, arrows)


# -- H-reduction relative to (i, x0) --------------------------------------------

def hred_step_relative(p, x0, i, b, y):
    """One H-reduction of y at band b staying inside H_l^i(x0)."""
    n0 = len(x0.letters)
    for j, rot in sorted(B.occurrences(p, b, y, n0), reverse=True):
        rest = y.letters[:j] + y.letters[j + len(b):]
        result = Str.word(rest) if rest else S.right_identity(p, y)
        if rest and not S.is_string(p, result):
            continue
        if not in_hammock_side(p, x0, i, result):
            continue
        y1 = S.left_substring(p, y, j)
        by1 = S.left_substring(p, y, j + len(b))
        if HR.h_equivalent(p, by1, y1):
            return HR.ReductionStep(b.with_representative(Str.word(rot)),
                                    Str.word(rot), j, result)
    return None


def hh_b_relative(p, x0, i, b, y):
    while True:
        step = hred_step_relative(p, x0, i, b, y)
        if step is None:
            return y
        y = step.result


def hh_relative(p, x0, i, y, band_list=None):
    """The H-reduced (relative to (i, x0)) normal form of y with its trace."""
    _require_side(p, x0, i, y)
    bl = B.bands(p) if band_list is None else band_list
    trace = []
    changed = True
    while changed:
        changed = False
        for b in bl:
            while True:
                step = hred_step_relative(p, x0, i, b, y)
                if step is None:
                    break
                trace.append(step)
                y = step.result
                changed = True
    return y, tuple(trace)


def is_h_reduced_relative(p, x0, i, y, band_list=None):
    _require_side(p, x0, i, y)
    bl = B.bands(p) if band_list is None else band_list
    return all(hred_step_relative(p, x0, i, b, y) is None for b in bl)


def is_hereditary_relative(p, x0, i, y):
    """The two-bullet hereditary H-string condition relative to (i, x0):
    distinct left substrings past x0 are pairwise inequivalent, and a left
    substring equivalent to x0 may only be extended against the side i."""
    _require_side(p, x0, i, y)
    n0 = len(x0.letters)
    subs = [S.left_substring(p, y, k)
            for k in range(n0 + 1, len(y.letters) + 1)]
    for a in range(len(subs)):
        for c in range(a + 1, len(subs)):
            if HR.h_equivalent(p, subs[a], subs[c]):
                return False
    for k, y1 in enumerate(subs, start=n0 + 1):
        if k < len(y.letters) and HR.h_equivalent(p, y1, x0):
            if S.letter_theta(y.letters[k]) != -i:
                return False
    return True


# -- hh of paths and o_H in the extended quiver ----------------------------------

def _part(end):
    if isinstance(end, Band):
        return Str.word(end.representative.letters)
    return end


def _part_options(p, end):
    if isinstance(end, Band):
        rep = end.representative.letters
        rots = [tuple(r) for r in end.rotations()]
        rots.sort(key=lambda r: r != rep)
        return [Str.word(r) for r in rots]
    return [end]


def _frame_with_rotations(p, arrows):
    """Frame word t(u_n)u_n...t(u_1)u_1 s(u_1) with one rotation chosen per
    band endpoint (arrows out of a base string only constrain the band up to
    rotation).  Returns (word, bottom_part, top_part) or None."""
    src, tgt = arrows[0].source, arrows[-1].target
    slots = [_part_options(p, tgt)]
    for u in reversed(arrows):
        slots.append([u.word])
        slots.append(_part_options(p, u.source))
    # slots run top-to-bottom; fold from the bottom, backtracking over the
    # rotation chosen for each band copy
    last = len(slots) - 1

    def fold(idx, acc):
        if idx < 0:
            return acc
        for opt in slots[idx]:
            nxt = S.concat(p, opt, acc)
            if nxt is not None:
                got = fold(idx - 1, nxt)
                if got is not None:
                    return got
        return None

    for bottom in slots[last]:
        w = fold(last - 1, bottom)
        if w is not None:
            top = Str.word(w.letters[len(w.letters) - len(slots[0][0].letters):]
                           ) if isinstance(tgt, Band) else tgt
            return w, bottom, top
    return None


def _strip(p, w, bottom, top):
    """Remove the endpoint copies (bottom/top letter tuples) from a reduced
    frame word."""
    if (w.letters[:len(bottom)] != bottom
            or (len(top) and w.letters[len(w.letters) - len(top):] != top)):
        raise BridgeforgeError("frame word lost its endpoint copies")
    core = w.letters[len(bottom):len(w.letters) - len(top)]
    if core:
        return Str.word(core)
    if bottom:
        return S.left_identity(p, Str.word(bottom))
    if top:
        return S.right_identity(p, Str.word(top))
    return w


def hh_of_path(p, x0, i, arrows):
    """hh(P) for a path P in barQ^Ba_i(x0); relative H-machinery when the
    path starts at x0, the absolute one when it starts at a band."""
    if not arrows:
        raise BridgeforgeError("empty path")
    for u1, u2 in zip(arrows, arrows[1:]):
        if u1.target != u2.source:
            raise BridgeforgeError("not a path: endpoint mismatch")
    src, tgt = arrows[0].source, arrows[-1].target
    relative = not isinstance(src, Band)
    if relative and src != x0:
        raise BridgeforgeError("path must start at a band or at x0")
    framed = _frame_with_rotations(p, arrows)
    if framed is None:
        raise BridgeforgeError("frame word of path is not a string")
    w, bottom, top = framed
    n0 = len(x0.letters) if relative else 0
    w = B.skeleton(p, w, min_start=n0, band_list=list(B.bands(p)))
    for u in arrows[:-1]:
        if relative:
            w = hh_b_relative(p, x0, i, u.target, w)
        else:
            w = HR.hh_b(p, u.target, w)
    return _strip(p, w, bottom.letters, top.letters)


def compose_H(p, x0, i, u2, u1):
    """u2 o_H u1 for arrows of the extended weak arch quiver (junction must
    be a band)."""
    if u1.target != u2.source:
        raise BridgeforgeError("target mismatch")
    if not isinstance(u1.target, Band):
        raise BridgeforgeError("the junction of o_H must be a band")
    src = u1.source
    relative = not isinstance(src, Band)
    if relative and src != x0:
        raise BridgeforgeError("composition must start at a band or at x0")
    if not relative and isinstance(u2.target, Band):
        return A.compose_H(p, u2, u1)
    b = u1.target
    framed = _frame_with_rotations(p, [u1, u2])
    if framed is None:
        raise BridgeforgeError("junction word is not a string")
    w, bottom, top = framed
    n0 = len(x0.letters) if relative else 0

    def hhb(bb, ww):
        if relative:
            return hh_b_relative(p, x0, i, bb, ww)
        return HR.hh_b(p, bb, ww)

    w = B.skeleton(p, w, min_start=n0, band_list=list(B.bands(p)))
    w = hhb(b, w)
    skip = {e.canonical for e in (src, u2.target) if isinstance(e, Band)}
    for b2 in B.bands(p):
        if b2.canonical in skip:
            continue
        w = hhb(b2, w)
    word = _strip(p, w, bottom.letters, top.letters)
    return ArchArrow(src, u2.target, word,
                     witness=A._witness(u1) + A._witness(u2))


# -- the extended (weak) arch quiver ----------------------------------------------

def _arch_arrows_with_paths(p, x0, i, quiver):
    """Per ordered vertex pair, the map word -> witnessing paths over all
    paths in the extended weak quiver."""
    table = []
    for v1 in quiver.nodes:
        for v2 in quiver.nodes:
            if v1 == v2:
                continue
            words = {}
            for path in A._paths(quiver, v1, v2):
                try:
                    w = hh_of_path(p, x0, i, path)
                except BridgeforgeError:
                    continue
                words.setdefault(w, []).append(path)
            for w in sorted(words, key=lambda s: (len(s), S.format_str(s))):
                table.append((ArchArrow(v1, v2, w, witness=words[w][0]),
                              words[w]))
    return table


def build_extended_weak_arch_quiver(p, x0, i=1, band_list=None):
    q = build_extended_weak_quiver(p, x0, i, band_list)
    arrows = tuple(a for a, _ in _arch_arrows_with_paths(p, x0, i, q))
    return BridgeQuiver(q.nodes, arrows)


def build_extended_arch_quiver(p, x0, i=1, band_list=None):
    """HQ^Ba_i(x0): arrows u of the extended weak arch quiver with
    u != hh(P) for every path P of length >= 2."""
    q = build_extended_weak_quiver(p, x0, i, band_list)
    arrows = tuple(a for a, paths in _arch_arrows_with_paths(p, x0, i, q)
                   if all(len(P) == 1 for P in paths))
    return BridgeQuiver(q.nodes, arrows)


def is_arch_arrow(p, x0, i, u, band_list=None, quiver=None):
    q = quiver or build_extended_weak_quiver(p, x0, i, band_list)
    for path in A._paths(q, u.source, u.target):
        if len(path) >= 2 and hh_of_path(p, x0, i, path) == u.word:
            return False
    return True


# -- the extended semi layer: lambda sets at x0 ------------------------------------

def lambda_bar_base(p, x0, i=None, band_list=None):
    """(bar-lambda^h, bar-lambda^z) at x0, optionally restricted to sign i."""
    bl = list(B.bands(p)) if band_list is None else list(band_list)
    lam_h = [u for b in bl for u in weak_half_bridges(p, x0, b)]
    lam_z = maximal_torsion_zero_bridges(p, x0, bl)
    if i is not None:
        lam_h = [u for u in lam_h if arrow_theta(p, u) == i]
        lam_z = [u for u in lam_z if arrow_theta(p, u) == i]
    return lam_h, lam_z


def _precedes(p, u0, u):
    """u0 <| u: u = u'' o u0 for some weak bridge (or reverse half) u''."""
    if u0 == u or u0.source != u.source or not isinstance(u0.target, Band):
        return False
    b = u0.target
    if isinstance(u.target, Band):
        candidates = BR.weak_bridges(p, b, u.target)
    else:
        candidates = [w for w in BR.weak_reverse_half_bridges(p, b)
                      if w.target == u.target]
    for u2 in candidates:
        if _compose_words(p, u2, u0) == u.word:
            return True
    return False


def lambda_base(p, x0, i, band_list=None):
    """(lambda^h_i(x0), lambda^z_i(x0)): <|-minimal elements of the pool."""
    lam_h, lam_z = lambda_bar_base(p, x0, i, band_list)
    pool = lam_h + lam_z
    minimal = [u for u in pool
               if not any(_precedes(p, u0, u) for u0 in pool)]
    return ([u for u in minimal if u in lam_h],
            [u for u in minimal if u in lam_z])


def lambda_a_base(p, x0, i, band_list=None):
    """lambda^a_i(x0): the unique abnormal half semi-bridge, or None."""
    lam_h, _ = lambda_base(p, x0, i, band_list)
    abn = [u for u in lam_h if is_abnormal_half(p, u)]
    if len(abn) > 1:
        raise BridgeforgeError("multiple abnormal half semi-bridges")
    return abn[0] if abn else None


# -- hammocks ----------------------------------------------------------------------

@dataclass(frozen=True)
class HammockElement:
    word: Str
    side: int  # +1 / -1, 0 for x0 itself
    profile: B.OccurrenceProfile

    def __repr__(self):
        return f"HammockElement<{S.format_str(self.word)}; side={self.side}>"


def hammock_compare(p, x0, y, z):
    """The total order <_l on H_l(x0) as -1/0/+1: past the maximal common
    left substring, the inverse-letter branch is the greater one (so a
    proper restriction sits below its inverse-letter extensions and above
    its direct-letter ones)."""
    for w in (y, z):
        if not in_hammock(p, x0, w):
            raise DifferentBase(
                f"{S.format_str(w)} is not in H_l({S.format_str(x0)})")
    if y == z:
        return 0
    a, b = y.letters, z.letters
    m = 0
    while m < len(a) and m < len(b) and a[m] == b[m]:
        m += 1
    if m == len(a):  # y is a proper left restriction of z
        return -1 if S.letter_theta(b[m]) == 1 else 1
    if m == len(b):
        return 1 if S.letter_theta(a[m]) == 1 else -1
    return 1 if S.letter_theta(a[m]) == 1 else -1


def hammock_segment(p, x0, maxlen, band_list=None):
    """All elements of H_l(x0) with extension length <= maxlen, sorted by
    <_l and annotated with side and occurrence profile."""
    n0 = len(x0.letters)
    seen, elems = set(), []
    for y in S.enumerate_left_extensions(p, x0, maxlen):
        if y in seen:
            continue
        seen.add(y)
        elems.append(HammockElement(
            y, hammock_side(p, x0, y),
            B.occurrence_profile(p, y, min_start=n0, band_list=band_list)))
    elems.sort(key=cmp_to_key(
        lambda e1, e2: hammock_compare(p, x0, e1.word, e2.word)))
    return elems
