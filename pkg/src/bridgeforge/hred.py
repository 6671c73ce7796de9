"""H-equivalence and H-reduction.

Two strings with the same signed target (vertex and epsilon) are
H-equivalent when exactly the same words x make x.y a string.  The
decidable criterion compares the boundary data rho_r and the last
syllables; the brute-force oracle enumerates left extensions up to the
longest relation length, which is enough to witness any difference.

An H-reduction deletes a band rotation occurrence y = y2.b'.y1 when
b'.y1 is H-equivalent to y1; hh(y) iterates these steps to the unique
H-reduced normal form.
"""

from dataclasses import dataclass

from . import bands as B
from . import strings as S
from .strings import Str


@dataclass(frozen=True)
class HVerdict:
    equivalent: bool
    rule: str
    counterexample: Str = None

    def __bool__(self):
        return self.equivalent


def relation_crossing_blocks(p, y):
    """Splits of relations across the target end of y: triples (prefix
    length k, blocked letter, relation) where the last k letters of y equal
    the first k letters of a relation word r, 1 <= k < |r|.  Only relations
    that are words give realizable blocks: the matched prefix is composable
    because y is a string, so a phantom junction elsewhere in r means no
    string extending y can ever complete r."""
    tail = tuple(y.letters)
    out = []
    for r in p.word_relations:
        R = tuple(S.Letter(a, inv) for a, inv in r)
        for k in range(1, min(len(R), len(tail) + 1)):
            if tail[len(tail) - k:] != R[:k]:
                continue
            out.append((k, R[k], R))
    return out


def _oracle_witness(p, y1, y2, bound):
    """A word x (as extension letters) with x.y1 a string xor x.y2 a string,
    or None.  Once both x.y1 and x.y2 fail, no longer x can tell them apart,
    so such branches are pruned."""
    def extended(y, x):
        return Str.word(y.letters + x) if (y.letters or x) else y

    frontier = [()]
    for _ in range(bound):
        nxt = []
        for x in frontier:
            s1, s2 = extended(y1, x), extended(y2, x)
            ok1, ok2 = S.is_string(p, s1), S.is_string(p, s2)
            cands = set(S.extension_letters(p, s1) if ok1 else ())
            if ok2:
                cands |= set(S.extension_letters(p, s2))
            for l in sorted(cands):
                nx = x + (l,)
                a = S.is_string(p, extended(y1, nx))
                b = S.is_string(p, extended(y2, nx))
                if a != b:
                    return Str.word(nx)
                if a or b:
                    nxt.append(nx)
        frontier = nxt
    return None


def h_equivalent_oracle(p, y1, y2, bound=None):
    """Brute-force H-equivalence: compare string-hood of x.y1 and x.y2 over
    all extensions x with |x| <= bound (default: longest relation length)."""
    bound = bound or p.maxrel
    if S.target(p, y1) != S.target(p, y2) or S.epsilon(p, y1) != S.epsilon(p, y2):
        return HVerdict(False, "target-mismatch")
    w = _oracle_witness(p, y1, y2, bound)
    if w is not None:
        return HVerdict(False, "oracle-witness", w)
    return HVerdict(True, "oracle-exhausted")


def h_equivalent(p, y1, y2):
    """The boundary-data criterion for H-equivalence."""
    if S.target(p, y1) != S.target(p, y2) or S.epsilon(p, y1) != S.epsilon(p, y2):
        return HVerdict(False, "target-mismatch")
    if y1 == y2:
        return HVerdict(True, "identical")
    r1, r2 = S.rho_r(p, y1), S.rho_r(p, y2)
    if len(r1) == 0 and len(r2) == 0:
        return HVerdict(True, "both-rho-empty")
    if len(r1) == 0 or len(r2) == 0:
        return _refuted(p, y1, y2, "rho-empty-mismatch")
    g1, g2 = y1.letters[-1], y2.letters[-1]
    if g1 == g2:
        if r1.letters == r2.letters:
            return HVerdict(True, "equal-last-syllable")
        return _refuted(p, y1, y2, "rho-r-differs")
    # crossed syllables: g_j^-1 . rho_r(y_k) must be a relation both ways
    for g, r in ((g1, r2), (g2, r1)):
        word = tuple((l.arrow, l.inverted) for l in r.letters + (g.inverse,))
        if word not in p.word_relation_set:
            return _refuted(p, y1, y2, "crossed-syllable-missing-relation")
    # every relation-crossing block must be blocked exactly by the other's
    # last syllable inverse
    for y, g_other in ((y1, g2), (y2, g1)):
        for _, blocked, _ in relation_crossing_blocks(p, y):
            if blocked != g_other.inverse:
                return _refuted(p, y1, y2, "crossed-syllable-obstruction")
    return HVerdict(True, "crossed-syllable")


def _refuted(p, y1, y2, rule):
    w = _oracle_witness(p, y1, y2, p.maxrel)
    return HVerdict(False, rule, w)


# -- H-reduction ----------------------------------------------------------------

@dataclass(frozen=True)
class ReductionStep:
    band: B.Band
    rotation: Str
    position: int
    result: Str


def _prefix(p, y, k):
    return S.left_substring(p, y, k)


def hred_b_step(p, b, y, min_start=0):
    """One H-reduction of y at band b, written-leftmost split first;
    None if no split admits one."""
    for i, rot in sorted(B.occurrences(p, b, y, min_start), reverse=True):
        rest = y.letters[:i] + y.letters[i + len(b):]
        result = Str.word(rest) if rest else S.right_identity(p, y)
        if rest and not S.is_string(p, result):
            continue
        y1 = _prefix(p, y, i)
        by1 = _prefix(p, y, i + len(b))
        if h_equivalent(p, by1, y1):
            return ReductionStep(b.with_representative(Str.word(rot)), Str.word(rot), i, result)
    return None


def hred_b(p, b, y, min_start=0):
    step = hred_b_step(p, b, y, min_start)
    return step.result if step else None


def hh_b(p, b, y, min_start=0):
    """All H-reductions at band b (the per-band operator of the confluence
    statement hh_b1.hh_b2 = hh_b2.hh_b1)."""
    while True:
        step = hred_b_step(p, b, y, min_start)
        if step is None:
            return y
        y = step.result


def is_h_reduced(p, y, min_start=0, band_list=None):
    bl = B.bands(p) if band_list is None else band_list
    return all(hred_b_step(p, b, y, min_start) is None for b in bl)


def hh(p, y, min_start=0, band_list=None):
    """The H-reduced normal form of y, with the trace of applied steps."""
    bl = B.bands(p) if band_list is None else band_list
    trace = []
    changed = True
    while changed:
        changed = False
        for b in bl:
            while True:
                step = hred_b_step(p, b, y, min_start)
                if step is None:
                    break
                trace.append(step)
                y = step.result
                changed = True
    return y, tuple(trace)


# -- hereditary H-strings ---------------------------------------------------------

def is_h_string(p, y):
    """No proper left substring of y is H-equivalent to y."""
    for k in range(len(y.letters)):
        if h_equivalent(p, y, _prefix(p, y, k)):
            return False
    return True


def is_hereditary_h_string(p, y):
    """Every left substring of y is an H-string; the paper's theorem makes
    this the same as being H-reduced."""
    for n in range(len(y.letters) + 1):
        if not is_h_string(p, _prefix(p, y, n)):
            return False
    return True


def enumerate_hereditary_h_strings(p, cap=10000):
    """All hereditary H-strings (finite for domestic algebras).  BFS over
    left extensions; hereditarity is prefix-closed, so pruning is sound."""
    out = []
    frontier = [Str.trivial(v, i) for v in p.vertices for i in (1, -1)]
    while frontier:
        if len(out) + len(frontier) > cap:
            raise RuntimeError(f"hereditary enumeration exceeded cap {cap}")
        nxt = []
        for y in frontier:
            out.append(y)
            for l in S.extension_letters(p, y):
                ext = Str.word(y.letters + (l,))
                if is_h_string(p, ext):
                    nxt.append(ext)
        frontier = nxt
    return out
