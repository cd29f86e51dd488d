"""Permutation morphisms of level-2 elements.

Two independent kinds of isomorphism act on a planar tree:

* a one-morphism reorders, node by node, the child subtrees hanging off a
  node's prongs (one permutation per factor, degree = that factor's arity);
* a two-morphism relates two elements whose factor sequences match up to a
  permutation: target factor t equals source factor sigma(t).

apply_two constructs the canonical two-morphism candidate that keeps the
graft-index sequence (and reports NoMorphism when that candidate is not a
valid element); squares and induced morphisms carry explicit targets, since
transporting a one-morphism generally changes the index data.

One- and two-morphisms out of a common source complete to a unique
commuting square, and composition is equivariant under two-morphisms.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .elements import PlainElement, compose
from .errors import (
    DegreeMismatch,
    LevelMismatch,
    MatchViolation,
    NotComposable,
    OrderViolation,
    RangeViolation,
    SizeBound,
)
from .trees import from_tree, leaf_order, node_order, to_tree


def _check_perm(perm, degree, what):
    if sorted(perm) != list(range(1, degree + 1)):
        raise DegreeMismatch("%s must be a permutation of 1..%d, got %r"
                             % (what, degree, perm))


@dataclass(frozen=True)
class OneMor2:
    """Prong permutations per node; target computed via the tree view.

    node_perms[t-1] sends the subtree at prong p of source factor t to
    prong node_perms[t-1][p-1] of the corresponding target node.
    leaf_perm and node_relabel give the induced position maps (1-based).
    """
    source: PlainElement
    node_perms: tuple
    target: PlainElement
    leaf_perm: tuple
    node_relabel: tuple

    def then(self, other):
        """Composite morphism: self followed by other (other.source == self.target)."""
        if other.source != self.target:
            raise NotComposable("target/source mismatch in one-morphism composition")
        k = self.source.m
        perms = []
        for t in range(1, k + 1):
            p1 = self.node_perms[t - 1]
            p2 = other.node_perms[self.node_relabel[t - 1] - 1]
            perms.append(tuple(p2[p1[p - 1] - 1] for p in range(1, len(p1) + 1)))
        return apply_one(self.source, perms)

    def inverse(self):
        k = self.source.m
        perms = [None] * k
        for t in range(1, k + 1):
            p = self.node_perms[t - 1]
            inv = [0] * len(p)
            for a, b in enumerate(p, start=1):
                inv[b - 1] = a
            perms[self.node_relabel[t - 1] - 1] = tuple(inv)
        return apply_one(self.target, perms)

    def is_identity(self):
        return self.source == self.target and all(
            p == tuple(range(1, len(p) + 1)) for p in self.node_perms)


@dataclass(frozen=True)
class TwoMor2:
    """Factor permutation between two valid elements: target[t] = source[sigma[t]]."""
    source: PlainElement
    target: PlainElement
    sigma: tuple

    def __post_init__(self):
        _check_perm(self.sigma, self.source.m, "sigma")
        if self.target.m != self.source.m:
            raise DegreeMismatch("source and target must have equal factor counts")
        for t in range(1, self.source.m + 1):
            if self.target.factors[t - 1] != self.source.factors[self.sigma[t - 1] - 1]:
                raise MatchViolation(
                    "factor %d of the target is not factor %d of the source"
                    % (t, self.sigma[t - 1]))

    def transport(self, pos):
        """Target position of the factor at source position pos."""
        return self.sigma.index(pos) + 1

    def then(self, other):
        if other.source != self.target:
            raise NotComposable("target/source mismatch in two-morphism composition")
        k = len(self.sigma)
        sigma = tuple(self.sigma[other.sigma[t - 1] - 1] for t in range(1, k + 1))
        return TwoMor2(self.source, other.target, sigma)

    def inverse(self):
        inv = [0] * len(self.sigma)
        for t, s in enumerate(self.sigma, start=1):
            inv[s - 1] = t
        return TwoMor2(self.target, self.source, tuple(inv))

    def is_identity(self):
        return (self.source == self.target
                and self.sigma == tuple(range(1, len(self.sigma) + 1)))


@dataclass(frozen=True)
class Square12:
    """Commuting square: a one-edge and a two-edge out of a common source.

    top: source -> corner_two (two-morphism), left: source -> corner_one
    (one-morphism); the opposite corner carries the transported data.
    """
    source: PlainElement
    top: TwoMor2
    left: OneMor2
    right: OneMor2    # corner_two -> opposite, transported prong perms
    bottom: TwoMor2   # corner_one -> opposite, transported factor perm
    opposite: PlainElement

    def commutes(self):
        return (self.top.source == self.source
                and self.left.source == self.source
                and self.right.source == self.top.target
                and self.bottom.source == self.left.target
                and self.right.target == self.opposite
                and self.bottom.target == self.opposite
                and all(self.right.node_perms[t - 1]
                        == self.left.node_perms[self.top.sigma[t - 1] - 1]
                        for t in range(1, self.source.m + 1)))


def apply_one(source, node_perms):
    """Reorder every node's child subtrees by its permutation."""
    if source.level != 2:
        raise LevelMismatch("one-morphisms act on level-2 elements")
    if len(node_perms) != source.m:
        raise DegreeMismatch("need one permutation per factor")
    node_perms = tuple(tuple(p) for p in node_perms)
    for t, p in enumerate(node_perms, start=1):
        _check_perm(p, source.factors[t - 1].arity, "permutation %d" % t)

    root = to_tree(source)
    nodes = node_order(root)                 # tagged with source positions
    src_leaves = leaf_order(root)
    leaf_tags = {}
    for n, (node, prong) in enumerate(src_leaves, start=1):
        leaf_tags[(node.tag, prong)] = n

    for node in nodes:
        perm = node_perms[node.tag - 1]
        newc = [None] * node.arity
        newtags = {}
        for p in range(1, node.arity + 1):
            newc[perm[p - 1] - 1] = node.children[p - 1]
            if (node.tag, p) in leaf_tags:
                newtags[perm[p - 1]] = leaf_tags.pop((node.tag, p))
        node.children = newc
        for q, tag in newtags.items():
            leaf_tags[(node.tag, q)] = tag

    target = from_tree(root)
    tgt_nodes = node_order(root)
    node_relabel = [0] * source.m
    for pos, node in enumerate(tgt_nodes, start=1):
        node_relabel[node.tag - 1] = pos
    leaf_perm = [0] * len(src_leaves)
    for pos, (node, prong) in enumerate(leaf_order(root), start=1):
        leaf_perm[leaf_tags[(node.tag, prong)] - 1] = pos
    return OneMor2(source, node_perms, target, tuple(leaf_perm),
                   tuple(node_relabel))


def apply_two(source, sigma):
    """Canonical two-morphism keeping indices; None when that is not valid."""
    if source.level != 2:
        raise LevelMismatch("two-morphisms act on level-2 elements")
    sigma = tuple(sigma)
    _check_perm(sigma, source.m, "sigma")
    factors = [source.factors[sigma[t] - 1] for t in range(source.m)]
    try:
        target = PlainElement(2, factors=factors, indices=source.indices)
    except (RangeViolation, MatchViolation, OrderViolation):
        return None
    return TwoMor2(source, target, sigma)


def two_morphisms_between(x, y):
    """All factor-matching permutations from x to y (both fixed and valid)."""
    if x.m != y.m:
        return []
    out = []
    for sigma in permutations(range(1, x.m + 1)):
        if all(y.factors[t - 1] == x.factors[sigma[t - 1] - 1]
               for t in range(1, x.m + 1)):
            out.append(TwoMor2(x, y, tuple(sigma)))
    return out


def complete_square(f, g):
    """The unique square with one-edge f and two-edge g at the same source.

    The right edge applies, at each node of g's target, the prong
    permutation f prescribed for the matching source node; the bottom edge
    is g's factor permutation read through the two node relabellings.
    """
    if f.source != g.source:
        raise NotComposable("the two edges must share their source")
    k = f.source.m
    transported = tuple(f.node_perms[g.sigma[t] - 1] for t in range(k))
    right = apply_one(g.target, transported)
    opposite = right.target
    inv_right = [0] * k
    for t in range(1, k + 1):
        inv_right[right.node_relabel[t - 1] - 1] = t
    sigma_bottom = tuple(
        f.node_relabel[g.sigma[inv_right[t - 1] - 1] - 1]
        for t in range(1, k + 1))
    bottom = TwoMor2(f.target, opposite, sigma_bottom)
    return Square12(f.source, g, f, right, bottom, opposite)


def induced_two_on_composition(x, i, y, f, g):
    """Transport a composition along factor automorphisms of its arguments.

    f and g must be two-morphisms from x to x and y to y.  The result is a
    two-morphism from compose(x, i, y) to compose(x, i', y), i' the slot f
    carries i to, acting as f on the x-positions and g on the y-positions;
    the transported composite is literally the composite at the transported
    slot, which is the strict commutation of composition with the action.
    """
    if f.source != x or f.target != x:
        raise NotComposable("f must be an automorphism of x")
    if g.source != y or g.target != y:
        raise NotComposable("g must be an automorphism of y")
    xy, sh = compose(x, i, y)
    i2 = f.transport(i)
    xy2, sh2 = compose(x, i2, y)
    k = xy.m
    sigma = [0] * k
    for j in range(1, x.m + 1):
        if j == i:
            continue
        sigma[sh2.phi[f.transport(j)] - 1] = sh.phi[j]
    for t in range(1, y.m + 1):
        sigma[sh2.psi[g.transport(t)] - 1] = sh.psi[t]
    return TwoMor2(xy, xy2, tuple(sigma))


def identity_one(x):
    return apply_one(x, [tuple(range(1, f.arity + 1)) for f in x.factors])


def identity_two(x):
    return TwoMor2(x, x, tuple(range(1, x.m + 1)))


def enumerate_morphisms(x, kind, max_factors=6):
    """All one-morphisms out of x, or all index-keeping two-morphisms."""
    if x.m > max_factors:
        raise SizeBound("element has %d factors, bound is %d" % (x.m, max_factors))
    if kind == "one":
        pools = [list(permutations(range(1, f.arity + 1))) for f in x.factors]
        out = []

        def rec(chosen):
            if len(chosen) == len(pools):
                out.append(apply_one(x, list(chosen)))
                return
            for p in pools[len(chosen)]:
                rec(chosen + [p])

        rec([])
        return out
    if kind == "two":
        out = []
        for sigma in permutations(range(1, x.m + 1)):
            mor = apply_two(x, sigma)
            if mor is not None:
                out.append(mor)
        return out
    raise ValueError("kind must be 'one' or 'two'")
