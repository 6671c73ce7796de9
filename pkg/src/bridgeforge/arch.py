"""Weak arch bridges, the H-composition o_H, arch bridges and the
semi-bridge layer.

For a path P = (u1, ..., un) in the weak bridge quiver the arrow hh(P) is
obtained from the frame word

    t(un) un t(u_{n-1}) ... t(u1) u1 s(u1)     (written order)

by taking the skeleton, applying the H-reduction operator hh_b at each
intermediate band t(u1), ..., t(u_{n-1}) (confluent, so the order does not
matter) and stripping the two outer band copies.  A weak arch bridge is any
such hh(P); o_H is total on composable weak arch bridges and associative,
and arch bridges are its irreducibles.  Every weak arch bridge has a unique
factorization into arch bridges.
"""

from dataclasses import dataclass, field

from . import bands as B
from . import bridges as BR
from . import hred as HR
from . import strings as S
from .bridges import BridgeQuiver, WeakBridge
from .errors import BridgeforgeError, NotAWeakArchBridge
from .strings import Str


@dataclass(frozen=True)
class ArchArrow:
    """An arrow of the weak arch bridge quiver.  Equality is by endpoints
    and word; the witness path is provenance only."""
    source: object
    target: object
    word: Str
    witness: tuple = field(default=None, compare=False, hash=False)

    @property
    def is_trivial(self):
        return len(self.word) == 0

    def __repr__(self):
        return (f"ArchArrow<{BR._end_name(self.source)}--"
                f"{S.format_str(self.word)}-->{BR._end_name(self.target)}>")


def _rep_word(p, band):
    return Str.word(band.representative.letters)


def _strip_frame(p, w, source, target):
    """Remove the outer band copies from the reduced frame word."""
    s_let = source.representative.letters
    t_let = target.representative.letters
    if (w.letters[:len(s_let)] != s_let
            or w.letters[len(w) - len(t_let):] != t_let):
        raise BridgeforgeError("frame word lost its outer band copies")
    core = w.letters[len(s_let):len(w) - len(t_let)]
    if core:
        return Str.word(core)
    # trivial arrow: the junction vertex with the sign that continues after
    # the source copy
    head = Str.word(s_let)
    return S.left_identity(p, head)


def hh_of_path(p, arrows):
    """hh(P) for a path P = (u1, ..., un) in the weak bridge quiver."""
    if not arrows:
        raise BridgeforgeError("empty path")
    for u1, u2 in zip(arrows, arrows[1:]):
        if u1.target != u2.source:
            raise BridgeforgeError("not a path: endpoint mismatch")
    parts = []
    for u in reversed(arrows):
        parts.append(_rep_word(p, u.target))
        parts.append(u.word)
    parts.append(_rep_word(p, arrows[0].source))
    w = S.concat_many(p, *parts)
    if w is None:
        raise BridgeforgeError("frame word of path is not a string")
    inner = [u.target for u in arrows[:-1]]
    w = B.skeleton(p, w, band_list=list(B.bands(p)))
    for b in inner:
        w = HR.hh_b(p, b, w)
    return _strip_frame(p, w, arrows[0].source, arrows[-1].target)


def compose_H(p, u2, u1):
    """The H-composition u2 o_H u1, total on composable arch arrows."""
    if u1.target != u2.source:
        raise BridgeforgeError("target mismatch")
    b = u1.target
    parts = [_rep_word(p, u2.target), u2.word, _rep_word(p, b), u1.word,
             _rep_word(p, u1.source)]
    w = S.concat_many(p, *parts)
    if w is None:
        raise BridgeforgeError("junction word is not a string")
    w = B.skeleton(p, w, band_list=list(B.bands(p)))
    w = HR.hh_b(p, b, w)
    # residual bands other than the endpoints may still admit H-reductions
    for b2 in B.bands(p):
        if b2.canonical in (u1.source.canonical, u2.target.canonical):
            continue
        w = HR.hh_b(p, b2, w)
    word = _strip_frame(p, w, u1.source, u2.target)
    return ArchArrow(u1.source, u2.target, word,
                     witness=_witness(u1) + _witness(u2))


def _witness(u):
    if isinstance(u, ArchArrow) and u.witness:
        return u.witness
    return (u,)


def _as_arch(u):
    if isinstance(u, ArchArrow):
        return u
    return ArchArrow(u.source, u.target, u.word, witness=(u,))


def _paths(quiver, b1, b2):
    """All paths b1 -> b2 in an acyclic quiver, as arrow tuples."""
    out = []

    def go(node, acc):
        if acc and node == b2:
            out.append(tuple(acc))
        for u in quiver.arrows:
            if u.source == node:
                acc.append(u)
                go(u.target, acc)
                acc.pop()

    go(b1, [])
    return out


def weak_arch_bridges(p, b1, b2, band_list=None):
    """All weak arch bridges b1 -> b2, via hh over paths in the weak bridge
    quiver."""
    q = BR.build_weak_bridge_quiver(p, band_list)
    seen = {}
    for path in _paths(q, b1, b2):
        word = hh_of_path(p, path)
        if word not in seen:
            seen[word] = ArchArrow(b1, b2, word, witness=path)
    return sorted(seen.values(),
                  key=lambda a: (len(a.word), S.format_str(a.word)))


def all_weak_arch_bridges(p, band_list=None):
    if band_list is None:
        band_list = list(B.bands(p))
    out = []
    for b1 in band_list:
        for b2 in band_list:
            if b1 != b2:
                out.extend(weak_arch_bridges(p, b1, b2, band_list))
    return out


def is_arch_bridge(p, u, band_list=None):
    """o_H-irreducible: u != hh(P) for every path of length >= 2."""
    u = _as_arch(u)
    if band_list is None:
        band_list = BR._aligned_bands(p, u.source, u.target)
    for b in band_list:
        if b in (u.source, u.target):
            continue
        for u1 in weak_arch_bridges(p, u.source, b, band_list):
            for u2 in weak_arch_bridges(p, b, u.target, band_list):
                if compose_H(p, u2, u1) == u:
                    return False
    return True


def build_arch_quiver(p, band_list=None):
    """HQ^Ba: the quiver of arch bridges."""
    if band_list is None:
        band_list = list(B.bands(p))
    arrows = [u for u in all_weak_arch_bridges(p, band_list)
              if is_arch_bridge(p, u, band_list)]
    return BridgeQuiver(tuple(band_list), tuple(arrows))


def factor_arch(p, u, band_list=None):
    """The unique path of arch bridges P with hh(P) = u."""
    u = _as_arch(u)
    if band_list is None:
        band_list = BR._aligned_bands(p, u.source, u.target)
    if not any(u == w for w in
               weak_arch_bridges(p, u.source, u.target, band_list)):
        raise NotAWeakArchBridge(f"{u!r} is not a weak arch bridge")
    hq = build_arch_quiver(p, band_list)
    matches = []
    for path in _paths(hq, u.source, u.target):
        acc = _as_arch(path[0]) if not isinstance(path[0], ArchArrow) \
            else path[0]
        for nxt in path[1:]:
            acc = compose_H(p, nxt, acc)
        if acc == u:
            matches.append(path)
    if len(matches) != 1:
        raise BridgeforgeError(
            f"expected a unique arch factorization, found {len(matches)}")
    return matches[0]


# -- semi-bridges ----------------------------------------------------------------

def _factorizations(p, u, band_list=None):
    """Nontrivial factorizations u = u2 o u1 with u1 a weak bridge."""
    if band_list is None:
        band_list = BR._aligned_bands(p, u.source,
                                      *([u.target] if isinstance(
                                          u.target, B.Band) else []))
    out = []
    for b in band_list:
        if b == u.source:
            continue
        for u1 in BR.weak_bridges(p, u.source, b):
            if isinstance(u.target, B.Band):
                if b == u.target:
                    continue
                candidates = BR.weak_bridges(p, b, u.target)
            else:
                candidates = [w for w in BR.weak_reverse_half_bridges(p, b)
                              if w.target == u.target and len(w.word)]
            for u2 in candidates:
                c = BR.compose(p, u2, u1)
                if c and c.arrow.word == u.word:
                    out.append((u2, u1))
    return out


def is_semi_bridge(p, u, band_list=None):
    """No nontrivial factorization u = u2 o u1 has beta(u) = beta(u1)."""
    beta = BR.exit(p, u)
    for _, u1 in _factorizations(p, u, band_list):
        if BR.exit(p, u1) == beta:
            return False
    return True


def lambda_sets(p, v, b, band_list=None):
    """(lambda^b(v), lambda^r(v)): the minimal elements of
    (bar-lambda(v), <|) split into semi-bridges and maximal torsion reverse
    semi-bridges."""
    lam_b, lam_r, _ = BR.lambda_bar(p, v, b, band_list)
    pool = lam_b + lam_r
    minimal = [u for u in pool
               if not any(u0 != u and _precedes(p, u0, u, band_list)
                          for u0 in pool)]
    return ([u for u in minimal if u in lam_b],
            [u for u in minimal if u in lam_r])


def _precedes(p, u0, u, band_list=None):
    """u0 <| u: u = u'' o u0 for some weak bridge (or reverse half) u''."""
    if u0.source != u.source:
        return False
    b = u0.target
    if not isinstance(b, B.Band):
        return False
    if isinstance(u.target, B.Band):
        candidates = BR.weak_bridges(p, b, u.target)
    else:
        candidates = [w for w in BR.weak_reverse_half_bridges(p, b)
                      if w.target == u.target]
    for u2 in candidates:
        c = BR.compose(p, u2, u0)
        if c and c.arrow.word == u.word:
            return True
    return False


def build_semi_quiver(p, band_list=None):
    """The semi-bridge quiver: weak bridges u that are semi-bridges."""
    if band_list is None:
        band_list = list(B.bands(p))
    arrows = [u for u in BR.all_weak_bridges(p, band_list)
              if is_semi_bridge(p, u, band_list)]
    return BridgeQuiver(tuple(band_list), tuple(arrows))
