"""String-algebra presentations: quiver, monomial relations, sign maps.

A presentation is a quiver Q with a set rho of monomial relations (directed
paths of length >= 2) together with sign maps sigma, epsilon: Q_1 -> {+1,-1}
satisfying

  (1) distinct arrows with equal source have opposite sigma;
  (2) distinct arrows with equal target have opposite epsilon;
  (3) sigma(beta) = -epsilon(alpha) for every composable pair of arrows
      whose length-2 path beta.alpha is not a factor of any relation.

When beta.alpha sits inside a longer relation the signs of the pair are a
free choice, and the choice matters: it decides whether a string may pass
through that junction.  Fixtures pin such junction signs explicitly.

Relations are written in composition order: ["d","f","g"] is the path that
traverses g first, then f, then d (the paper's "dfg").
"""

import json

from .errors import InconsistentSigns, ParseError, ValidationError

try:
    import networkx as nx
except ImportError:  # pragma: no cover
    nx = None


class Presentation:
    def __init__(self, vertices, arrows, relations, sigma=None, epsilon=None):
        """arrows: list of (name, source, target); relations: list of arrow
        name sequences in written (composition) order."""
        self.vertices = tuple(vertices)
        self.arrows = {}
        for name, src, tgt in arrows:
            if name in self.arrows:
                raise ValidationError("arrow-names", f"duplicate arrow {name!r}")
            self.arrows[name] = (src, tgt)
        self.relations = tuple(tuple(r) for r in relations)
        self.sigma = dict(sigma) if sigma else {}
        self.epsilon = dict(epsilon) if epsilon else {}
        self._validate_quiver()
        if len(self.sigma) < len(self.arrows) or len(self.epsilon) < len(self.arrows):
            self.sigma, self.epsilon = derive_sign_maps(self, self.sigma, self.epsilon)
        self._validate_signs()
        # Relations in traversal order (first-traversed letter first), with
        # their inverses, as tuples of (arrow, inverted) pairs.
        self.maxrel = max((len(r) for r in self.relations), default=2)
        self._check_finite_dimensional()
        fwd = [tuple((a, False) for a in reversed(r)) for r in self.relations]
        bwd = [tuple((a, True) for a in r) for r in self.relations]
        self.relation_words = tuple(fwd + bwd)
        self.relation_set = frozenset(self.relation_words)
        self.relation_lengths = sorted({len(r) for r in self.relation_words})
        # Relations that are sign-composable throughout, i.e. actual words.
        # A relation with a phantom (non-composable) junction can never occur
        # inside a word, so only these matter when asking how a string may be
        # blocked or extended across a relation.
        self.word_relations = tuple(
            r for r in self.relation_words if self._sign_composable(r)
        )
        self.word_relation_set = frozenset(self.word_relations)

    def _sign_composable(self, letters):
        for (a1, i1), (a2, i2) in zip(letters, letters[1:]):
            eps = self.sigma[a1] if i1 else self.epsilon[a1]
            sig = self.epsilon[a2] if i2 else self.sigma[a2]
            if sig != -eps:
                return False
        return True

    # -- raw letter data ---------------------------------------------------
    def arrow_source(self, name):
        return self.arrows[name][0]

    def arrow_target(self, name):
        return self.arrows[name][1]

    # -- validation --------------------------------------------------------
    def _validate_quiver(self):
        vset = set(self.vertices)
        for name, (src, tgt) in self.arrows.items():
            if src not in vset or tgt not in vset:
                raise ValidationError("arrow-endpoints", f"arrow {name!r} uses unknown vertex")
        outs, ins = {}, {}
        for name, (src, tgt) in self.arrows.items():
            outs.setdefault(src, []).append(name)
            ins.setdefault(tgt, []).append(name)
        for v, names in outs.items():
            if len(names) > 2:
                raise ValidationError("out-degree", f"vertex {v!r} has {len(names)} outgoing arrows")
        for v, names in ins.items():
            if len(names) > 2:
                raise ValidationError("in-degree", f"vertex {v!r} has {len(names)} incoming arrows")
        relset = set(self.relations)
        for r in self.relations:
            if len(r) < 2:
                raise ValidationError("relation-length", f"relation {r} shorter than 2")
            for a in r:
                if a not in self.arrows:
                    raise ValidationError("relation-arrows", f"relation {r} uses unknown arrow {a!r}")
            # written order: r[i] is composed after r[i+1]
            for i in range(len(r) - 1):
                if self.arrow_target(r[i + 1]) != self.arrow_source(r[i]):
                    raise ValidationError("relation-path", f"relation {r} is not a directed path")
        for r in self.relations:
            for q in self.relations:
                if r is q or len(q) > len(r):
                    continue
                if r != q and any(r[i:i + len(q)] == q for i in range(len(r) - len(q) + 1)):
                    raise ValidationError("relation-comparability", f"{q} is a subpath of {r}")
        # unique relation-free continuation on either side of each arrow
        for g in self.arrows:
            after = [b for b in self.arrows
                     if self.arrow_source(b) == self.arrow_target(g) and (b, g) not in {(x[0], x[1]) for x in relset if len(x) == 2}]
            before = [a for a in self.arrows
                      if self.arrow_target(a) == self.arrow_source(g) and (g, a) not in {(x[0], x[1]) for x in relset if len(x) == 2}]
            if len(after) > 2 or len(before) > 2:
                raise ValidationError("continuations", f"arrow {g!r} has too many continuations")
            if len(after) > 1:
                raise ValidationError("continuations", f"arrows {after} both follow {g!r} without a relation")
            if len(before) > 1:
                raise ValidationError("continuations", f"arrows {before} both precede {g!r} without a relation")

    def _validate_signs(self):
        for a in self.arrows:
            if self.sigma.get(a) not in (1, -1) or self.epsilon.get(a) not in (1, -1):
                raise InconsistentSigns(f"arrow {a!r} lacks a sign value")
        for c, s, after in _sign_constraints(self):
            # constraint: value(c) == s * value(after)
            if _sign_value(self, c) != s * _sign_value(self, after):
                raise InconsistentSigns(f"constraint {c} = {'+' if s > 0 else '-'}{after} violated")

    def _check_finite_dimensional(self):
        """No arbitrarily long relation-free directed path may exist, i.e.
        the window automaton over direct paths must be acyclic."""
        w = max(2, self.maxrel if self.relations else 2) - 1
        relset = set(self.relations)

        def relation_free(path):
            return not any(path[i:i + len(r)] == r for r in relset for i in range(len(path) - len(r) + 1))

        # build relation-free direct paths of length w (written order tuples)
        paths = [(a,) for a in sorted(self.arrows)]
        for _ in range(w - 1):
            paths = [(b,) + p for p in paths for b in self.arrows
                     if self.arrow_source(b) == self.arrow_target(p[0]) and relation_free((b,) + p)]
        g = nx.DiGraph()
        g.add_nodes_from(paths)
        for p in paths:
            for b in sorted(self.arrows):
                if self.arrow_source(b) != self.arrow_target(p[0]):
                    continue
                ext = (b,) + p
                if relation_free(ext):
                    g.add_edge(p, ext[:w])
        if not nx.is_directed_acyclic_graph(g):
            cyc = nx.find_cycle(g)
            raise ValidationError("finite-dimensionality", f"relation-free directed cycle: {cyc}")


def _sign_value(p, var):
    kind, a = var
    return p.sigma[a] if kind == "s" else p.epsilon[a]


def _sign_constraints(p):
    """Yield parity constraints (var1, +/-1, var2) meaning var1 == s*var2."""
    arrows = sorted(p.arrows)
    for i, a in enumerate(arrows):
        for b in arrows[i + 1:]:
            if p.arrow_source(a) == p.arrow_source(b):
                yield ("s", a), -1, ("s", b)
            if p.arrow_target(a) == p.arrow_target(b):
                yield ("e", a), -1, ("e", b)
    relation_factors = {r[i:i + 2] for r in p.relations for i in range(len(r) - 1)}
    relation_factors.update(p.relations)
    for a in arrows:  # alpha
        for b in arrows:  # beta, path beta.alpha
            if p.arrow_target(a) == p.arrow_source(b) and (b, a) not in relation_factors:
                yield ("s", b), -1, ("e", a)


def derive_sign_maps(p, pinned_sigma=None, pinned_epsilon=None):
    """Find sigma/epsilon satisfying the axioms, honouring any pinned values.

    The constraints are all parities between +/-1 variables, so a weighted
    union-find settles them; free components default to +1 at their
    lexicographically least variable.
    """
    parent, parity = {}, {}

    def find(x):
        if parent.setdefault(x, x) == x:
            parity.setdefault(x, 1)
            return x, 1
        root, s = find(parent[x])
        parent[x], parity[x] = root, s * parity[x]
        return parent[x], parity[x]

    def union(x, y, s):
        rx, sx = find(x)
        ry, sy = find(y)
        if rx == ry:
            if sx != s * sy:
                raise InconsistentSigns(f"contradictory constraint chain at {x} = {'+' if s > 0 else '-'}{y}")
            return
        parent[rx] = ry
        parity[rx] = s * sy * sx

    for a in p.arrows:
        find(("s", a))
        find(("e", a))
    for v1, s, v2 in _sign_constraints(p):
        union(v1, v2, s)

    pins = {}
    for a, val in (pinned_sigma or {}).items():
        pins[("s", a)] = val
    for a, val in (pinned_epsilon or {}).items():
        pins[("e", a)] = val
    root_value = {}
    for var, val in sorted(pins.items()):
        r, s = find(var)
        want = s * val
        if root_value.setdefault(r, want) != want:
            raise InconsistentSigns(f"pinned values conflict at {var}")
    for var in sorted(parent):
        r, _ = find(var)
        root_value.setdefault(r, 1)

    sigma, epsilon = {}, {}
    for a in p.arrows:
        r, s = find(("s", a))
        sigma[a] = s * root_value[r]
        r, s = find(("e", a))
        epsilon[a] = s * root_value[r]
    return sigma, epsilon


# -- the .alg file format ---------------------------------------------------

def parse_presentation(text):
    """Parse the JSON algebra format (see cli module docs) into a validated
    Presentation."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"not valid JSON: {e}") from None
    for key in ("vertices", "arrows"):
        if key not in data:
            raise ParseError(f"missing {key!r}")
    try:
        arrows = [(a["name"], a["from"], a["to"]) for a in data["arrows"]]
    except (TypeError, KeyError) as e:
        raise ParseError(f"malformed arrow entry: {e}") from None
    sigma = {k: int(v) for k, v in data.get("sigma", {}).items()}
    epsilon = {k: int(v) for k, v in data.get("epsilon", {}).items()}
    return Presentation(data["vertices"], arrows, data.get("relations", []),
                        sigma=sigma or None, epsilon=epsilon or None)


def load_presentation(path):
    with open(path) as fh:
        return parse_presentation(fh.read())


def serialize_presentation(p):
    data = {
        "vertices": list(p.vertices),
        "arrows": [{"name": a, "from": s, "to": t} for a, (s, t) in sorted(p.arrows.items())],
        "relations": [list(r) for r in p.relations],
        "sigma": {a: p.sigma[a] for a in sorted(p.arrows)},
        "epsilon": {a: p.epsilon[a] for a in sorted(p.arrows)},
    }
    return json.dumps(data, indent=2, sort_keys=False) + "\n"
