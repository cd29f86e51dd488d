"""Named property batteries runnable from the command line.

Each suite returns a SuiteReport; results are deterministic per
(seed, size).  Sizes: small keeps everything under a few seconds, medium
matches the acceptance-scale bounds.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from . import ordinals
from .elements import (
    check_associativity,
    check_phi_long,
    check_phi_short,
    compose,
    normalize,
    total_G,
)
from .enumeration import catalan, count_binary, enumerate_elements
from .grammar import format_element
from .morphisms import complete_square, enumerate_morphisms
from .presentations import symmetric_presentation, todd_coxeter, verify_symmetric_realization
from .randgen import (
    random_composable_triple,
    random_gamma,
    random_phi_quad,
)
from .units import check_runital_bijection


@dataclass
class SuiteReport:
    suite: str
    passed: int = 0
    failed: int = 0
    first_failure: str = None
    notes: list = field(default_factory=list)

    def check(self, ok, describe):
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            if self.first_failure is None:
                self.first_failure = describe()

    def summary(self):
        line = "suite %-10s pass %5d fail %3d" % (self.suite, self.passed, self.failed)
        if self.first_failure:
            line += "  first failure: %s" % self.first_failure
        return line


_SIZES = {
    "small": {"triples": 200, "gammas": 100, "pairs_nodes": 5, "mor_nodes": 4},
    "medium": {"triples": 2000, "gammas": 500, "pairs_nodes": 6, "mor_nodes": 5},
}


def _composable_pairs_level2(max_nodes, max_arity=4):
    """Every (x, i, y) at level 2 within the node bound."""
    by_nodes = {}
    for k in range(1, max_nodes):
        by_nodes[k] = [e for e in enumerate_elements(2, k, max_arity) if e.m == k]
    for kx in range(1, max_nodes):
        for x in by_nodes[kx]:
            for i in range(1, x.m + 1):
                target = x.factors[i - 1]
                for ky in range(1, max_nodes - kx + 1):
                    for y in by_nodes[ky]:
                        if total_G(y) == target:
                            yield x, i, y


def suite_axioms(seed, size):
    rep = SuiteReport("axioms")
    cfg = _SIZES[size]
    rng = random.Random(seed)
    # exhaustive associativity at level 2 within the node bound
    elems = enumerate_elements(2, cfg["pairs_nodes"] - 1, 3)
    for x in elems:
        if x.m < 2:
            continue
        for i in range(1, x.m):
            for j in range(i + 1, x.m + 1):
                for y in enumerate_elements(2, 2, 3):
                    if total_G(y) != x.factors[i - 1]:
                        continue
                    for z in enumerate_elements(2, 2, 3):
                        if total_G(z) != x.factors[j - 1]:
                            continue
                        w = check_associativity(x, i, y, j, z)
                        rep.check(bool(w), lambda: "assoc %s %d %s %d %s" % (
                            format_element(x), i, format_element(y), j, format_element(z)))
    # randomized at levels 3 and 4
    for level in (3, 4):
        for _ in range(cfg["triples"] // 4):
            x, i, y, j, z = random_composable_triple(level, rng, grafts=2, max_arity=3)
            w = check_associativity(x, i, y, j, z)
            rep.check(bool(w), lambda: "assoc level %d %s" % (level, format_element(x)))
    # phi coherence
    for level in (2, 3):
        for _ in range(cfg["triples"] // 8):
            x, i, y, j, z, k, t = random_phi_quad(level, rng, grafts=3, max_arity=3)
            rep.check(bool(check_phi_long(x, i, y, j, z, k)),
                      lambda: "phi-long level %d %s" % (level, format_element(x)))
            rep.check(bool(check_phi_short(x, i, y, j, k, t)),
                      lambda: "phi-short level %d %s" % (level, format_element(x)))
    return rep


def suite_oracle(seed, size):
    """compose against node substitution through the tree view.

    This is an in-package cross-check (the fully independent oracle lives
    in the test suite): substitute the tree of y at node i of the tree of x
    and compare against the splice-and-sort composition.
    """
    from .trees import from_tree, node_order, to_tree

    rep = SuiteReport("oracle")
    cfg = _SIZES[size]
    for x, i, y in _composable_pairs_level2(cfg["pairs_nodes"]):
        root = to_tree(x)
        nodes = node_order(root)
        target = nodes[i - 1]
        sub = to_tree(y)
        sub_leaves = list(sub.leaves())
        for p in range(1, target.arity + 1):
            node, prong = sub_leaves[p - 1]
            node.children[prong - 1] = target.children[p - 1]
        if i == 1:
            new_root = sub
        else:
            parent = next(n for n in nodes
                          if target in [c for c in n.children if c is not None])
            parent.children[parent.children.index(target)] = sub
            new_root = root
        expected = from_tree(new_root)
        got, sh = compose(x, i, y)
        rep.check(got == expected,
                  lambda: "compose %s %d %s" % (format_element(x), i,
                                                format_element(y)))
    return rep


def suite_confluence(seed, size):
    from .elements import GammaSequence

    rep = SuiteReport("confluence")
    cfg = _SIZES[size]
    rng = random.Random(seed)
    for level in (2, 3):
        for _ in range(cfg["gammas"]):
            g = random_gamma(level, rng, steps=4)
            e1, p1 = normalize(g, "left")
            e2, p2 = normalize(g, "right")
            e3, p3 = normalize(g, "random:%d" % rng.randint(0, 10 ** 6))
            rep.check(e1 == e2 == e3 and p1 == p2 == p3,
                      lambda: "confluence level %d %r" % (level, g))
            again, p_again = normalize(
                GammaSequence(e1.level, e1.factors, e1.indices), "left")
            rep.check(again == e1 and p_again == tuple(range(1, e1.m + 1)),
                      lambda: "idempotence %s" % format_element(e1))
    return rep


def suite_morphisms(seed, size):
    rep = SuiteReport("morphisms")
    cfg = _SIZES[size]
    bound = cfg["mor_nodes"]
    elems = [e for e in enumerate_elements(2, bound, 3)]
    for x in elems[: 400 if size == "small" else len(elems)]:
        ones = enumerate_morphisms(x, "one")
        twos = enumerate_morphisms(x, "two")
        for f in ones[:6]:
            inv = f.inverse()
            rep.check(f.then(inv).is_identity(),
                      lambda: "one-inverse %s" % format_element(x))
        for g in twos[:6]:
            rep.check(g.then(g.inverse()).is_identity(),
                      lambda: "two-inverse %s" % format_element(x))
        for f in ones[:4]:
            for g in twos[:4]:
                sq = complete_square(f, g)
                rep.check(sq.commutes(), lambda: "square %s" % format_element(x))
    return rep


def suite_ordinals(seed, size):
    rep = SuiteReport("ordinals")
    rng = random.Random(seed)
    count = 100 if size == "small" else 500
    for n in (1, 2, 3, 4):
        done = 0
        while done < count:
            beta = random_normal_form(rng, n, depth=4 if n > 1 else 0)
            if beta.is_zero() or ordinals.cmp(beta, ordinals._phi_bound(n)) >= 0:
                continue
            z = ordinals.encode(beta, n)
            back = ordinals.eval_phin(z)
            rep.check(ordinals.cmp(back, beta) == 0,
                      lambda: "roundtrip n=%d %s" % (n, ordinals.format_ordinal(beta)))
            done += 1
    return rep


def random_normal_form(rng, n, depth):
    """Random notation below phi_n(0) with bounded nesting."""
    parts = [random_term(rng, n, depth) for _ in range(rng.randint(1, 3))]
    import functools
    parts.sort(key=functools.cmp_to_key(ordinals.cmp), reverse=True)
    acc = ordinals.ZERO
    for p in parts:
        acc = ordinals.add(acc, p)
    return acc


def random_term(rng, n, depth):
    if depth <= 0 or n == 1 or rng.random() < 0.35:
        return ordinals.from_int(rng.randint(1, 4))
    a = rng.randint(1, n - 1)
    b = ordinals.ZERO if rng.random() < 0.4 else random_normal_form(rng, n, depth - 1)
    return ordinals.phi(ordinals.from_int(a), b)


def suite_groups(seed, size):
    rep = SuiteReport("groups")
    import math
    top = 5 if size == "small" else 6
    for n in range(2, top + 1):
        ct = todd_coxeter(symmetric_presentation(n))
        rep.check(ct.order == math.factorial(n),
                  lambda: "sym %d -> %s" % (n, ct.order))
    for k in range(1, top):
        shapes = [e for e in enumerate_elements(2, k, 2)
                  if e.m == k and all(f.arity == 2 for f in e.factors)]
        for x in shapes:
            r = verify_symmetric_realization(x)
            rep.check(r.isomorphic, lambda: "tree %s" % format_element(x))
    return rep


def suite_counts(seed, size):
    rep = SuiteReport("counts")
    expected = [1, 2, 5, 14, 42, 132, 429, 1430]
    top = 6 if size == "small" else 8
    for k in range(1, top + 1):
        rep.check(count_binary(k) == expected[k - 1],
                  lambda: "count_binary(%d)=%d" % (k, count_binary(k)))
        rep.check(count_binary(k) == catalan(k),
                  lambda: "catalan mismatch at %d" % k)
    rec = [1]
    for k in range(1, top + 1):
        rec.append(sum(rec[i] * rec[k - 1 - i] for i in range(k)))
        rep.check(count_binary(k) == rec[k], lambda: "recurrence at %d" % k)
    rep.check(check_runital_bijection(2, 3, 3).equal, lambda: "runital bijection")
    return rep


SUITES = {
    "axioms": suite_axioms,
    "oracle": suite_oracle,
    "confluence": suite_confluence,
    "morphisms": suite_morphisms,
    "ordinals": suite_ordinals,
    "groups": suite_groups,
    "counts": suite_counts,
}


def run_suite(name, seed=0, size="small"):
    if name not in SUITES:
        raise ValueError("unknown suite %r (choose from %s)"
                         % (name, ", ".join(sorted(SUITES))))
    return SUITES[name](seed, size)
