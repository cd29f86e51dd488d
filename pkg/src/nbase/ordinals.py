"""Ordinal notations below the first subscript-hierarchy fixed point, and
the maps between elements and ordinals.

Notation: an ordinal is a nonincreasing sum of terms, each either 1 or
phi_a(b) in normal form (b below the value, subscripts absorbed).  The
subscript convention is shifted so that phi_1(b) is the omega power
omega^(1+b); for subscripts >= 2 the shift is invisible.

The element evaluation walks head decompositions: at level 2 a free prong
contributes 1 and a subtree s contributes omega^(eval(s)); one level up,
an attachment at a slot contributes the next function in the hierarchy
applied (shift-adjusted) to the attachment's value, delivered through the
slot it subdivides.  A per-slot value attached to a factor surfaces where
that factor heads its local decomposition, replacing the 1s of its free
slots; encode never builds anything but single-use carriers, so the value
appears exactly once.

encode inverts the default evaluation constructively: each normal-form
term becomes a column (prong, optional carrier chain, attachment) whose
contribution is exactly that term; it is implemented for levels 1..4,
which covers every notation below the level-4 image bound.
"""

from __future__ import annotations

from dataclasses import dataclass

from .elements import (
    corolla,
    decompose_head,
    embed,
    graft_at_slot,
    total_G,
)
from .errors import NotImplementedLevel, OutOfRange, ParseError


# -- notation ---------------------------------------------------------------

@dataclass(frozen=True)
class Ordinal:
    """Sum of terms, nonincreasing; a term is None (the ordinal 1) or a
    pair (a, b) of Ordinals standing for phi_a(b)."""
    terms: tuple = ()

    def is_zero(self):
        return not self.terms

    def __repr__(self):
        return "<ord %s>" % format_ordinal(self)


ZERO = Ordinal(())
ONE = Ordinal((None,))


def from_int(n):
    if n < 0:
        raise OutOfRange("ordinals are nonnegative")
    return Ordinal((None,) * n)


def to_int(x):
    if any(t is not None for t in x.terms):
        raise OutOfRange("not a finite ordinal: %s" % format_ordinal(x))
    return len(x.terms)


def is_finite(x):
    return all(t is None for t in x.terms)


def _term_ord(t):
    return ONE if t is None else Ordinal((t,))


def _cmp_term(s, t):
    if s is None and t is None:
        return 0
    if s is None:
        return -1
    if t is None:
        return 1
    a, b = s
    c, d = t
    ac = cmp(a, c)
    if ac == 0:
        return cmp(b, d)
    if ac < 0:
        # phi_a(b) vs the larger-subscript term: compare b with the whole term
        return cmp(b, _term_ord(t))
    return -cmp(d, _term_ord(s))


def cmp(x, y):
    """Total order on notations: -1, 0, or 1."""
    for s, t in zip(x.terms, y.terms):
        c = _cmp_term(s, t)
        if c != 0:
            return c
    if len(x.terms) == len(y.terms):
        return 0
    return -1 if len(x.terms) < len(y.terms) else 1


def add(x, y):
    """Normal-form sum: trailing terms of x below y's lead are absorbed."""
    if y.is_zero():
        return x
    if x.is_zero():
        return y
    lead = y.terms[0]
    keep = len(x.terms)
    while keep > 0 and _cmp_term(x.terms[keep - 1], lead) < 0:
        keep -= 1
    return Ordinal(x.terms[:keep] + y.terms)


def phi(a, b):
    """The normal term phi_a(b); absorbs when b already dominates.

    phi_1 is the shifted omega power; a must be at least 1.  Finite
    notations never reach the subscript-hierarchy fixed point, so the
    overflow guard cannot fire on well-formed input.
    """
    if cmp(a, ONE) < 0:
        raise OutOfRange("phi subscript must be >= 1")
    if len(b.terms) == 1 and b.terms[0] is not None:
        c, _d = b.terms[0]
        if cmp(c, a) > 0:
            return b
    return Ordinal((((a, b)),))


def pred1(g):
    """The unique g' with 1 + g' = g (g must be >= 1)."""
    if g.is_zero():
        raise OutOfRange("no predecessor under 1+x for 0")
    if g.terms[0] is None:
        return Ordinal(g.terms[1:])
    return g


def omega_pow(g):
    """omega^g through the shifted first function: phi_1(g') with 1+g' = g."""
    if g.is_zero():
        return ONE
    return phi(ONE, pred1(g))


def hier(k, g):
    """The k-th hierarchy function applied shift-adjusted: phi_k(g') with
    1 + g' = g.  For k = 1 this is the omega power; higher k absorb their
    own fixed points the same way."""
    if g.is_zero():
        raise OutOfRange("attachment values are >= 1")
    if k == 1:
        return omega_pow(g)
    return phi(from_int(k), pred1(g))


# -- formatting and parsing --------------------------------------------------

def format_ordinal(x):
    if x.is_zero():
        return "0"
    parts = []
    ones = 0
    for t in x.terms:
        if t is None:
            ones += 1
            continue
        parts.append(_format_term(t))
    if ones:
        parts.append(str(ones))
    return "+".join(parts)


def _format_term(t):
    a, b = t
    if cmp(a, ONE) == 0:
        exponent = add(ONE, b)
        if cmp(exponent, ONE) == 0:
            return "w"
        return "w^(%s)" % format_ordinal(exponent)
    return "phi(%s,%s)" % (format_ordinal(a), format_ordinal(b))


def parse_ordinal(text):
    """Parse `0 | term (+ term)*` with term `nat | w | w^(ord) | phi(a,b)`."""
    pos = 0
    text = text.strip()

    def skip_ws():
        nonlocal pos
        while pos < len(text) and text[pos].isspace():
            pos += 1

    def parse_sum():
        nonlocal pos
        acc = parse_term()
        skip_ws()
        while pos < len(text) and text[pos] == "+":
            pos += 1
            acc = add(acc, parse_term())
            skip_ws()
        return acc

    def expect(ch):
        nonlocal pos
        skip_ws()
        if pos >= len(text) or text[pos] != ch:
            raise ParseError("expected %r at offset %d in %r" % (ch, pos, text))
        pos += 1

    def parse_term():
        nonlocal pos
        skip_ws()
        if pos >= len(text):
            raise ParseError("unexpected end of ordinal literal")
        c = text[pos]
        if c.isdigit():
            j = pos
            while j < len(text) and text[j].isdigit():
                j += 1
            n = int(text[pos:j])
            pos = j
            return from_int(n)
        if text.startswith("phi(", pos):
            pos += 4
            a = parse_sum()
            expect(",")
            b = parse_sum()
            expect(")")
            return phi(a, b)
        if c == "w":
            pos += 1
            skip_ws()
            if pos < len(text) and text[pos] == "^":
                pos += 1
                expect("(")
                g = parse_sum()
                expect(")")
                return omega_pow(g)
            return omega_pow(ONE)
        raise ParseError("cannot parse ordinal at offset %d in %r" % (pos, text))

    value = parse_sum()
    skip_ws()
    if pos != len(text):
        raise ParseError("trailing input in ordinal literal %r" % text)
    return value


# -- evaluation ---------------------------------------------------------------

def eval_phi2(z):
    """Explicit level-2 value: walk the head corolla's prongs left to right;
    a free prong adds 1, a subtree s adds omega^(eval_phi2(s))."""
    if z.level != 2:
        raise NotImplementedLevel("eval_phi2 needs a level-2 element")
    hf = decompose_head(z)
    occupied = {att.slot: att.element for att in hf.attachments}
    acc = ZERO
    for p in range(1, hf.head.arity + 1):
        if p in occupied:
            acc = add(acc, omega_pow(eval_phi2(occupied[p])))
        else:
            acc = add(acc, ONE)
    return acc


def eval_phin(z, alphas=None):
    """Hierarchy value of an element, optional per-slot arguments.

    With default arguments this extends the explicit level-2 walk: an
    attachment at a slot contributes hier(level-1, value of the attachment)
    at that slot's position, a free slot contributes 1.  A non-default
    argument rides its slot's factor and surfaces where that factor heads
    its local decomposition (at level 1 the arguments are simply summed).
    """
    if z.level < 1:
        raise NotImplementedLevel("evaluation needs level >= 1")
    if alphas is not None:
        if len(alphas) != z.m:
            raise OutOfRange("need one argument per slot (%d)" % z.m)
        bindings = {i: a for i, a in enumerate(alphas, start=1)
                    if cmp(a, ONE) != 0}
    else:
        bindings = {}
    return _walk(z, bindings, z.level)


def _walk(z, bindings, level):
    if level == 1:
        acc = ZERO
        for p in range(1, z.arity + 1):
            acc = add(acc, bindings.get(p, ONE))
        return acc
    hf = decompose_head(z)
    att_vals = []
    for att in hf.attachments:
        sub = {local: bindings[orig]
               for local, orig in enumerate(att.positions, start=1)
               if orig in bindings}
        att_vals.append((att.slot, hier(level - 1, _walk(att.element, sub, level))))
    if 1 in bindings:
        acc = bindings[1]
        for _slot, val in att_vals:
            acc = add(acc, val)
        return acc
    v = dict(att_vals)
    return _walk(hf.head, v, level - 1)


# -- encoding -----------------------------------------------------------------

def _phi_bound(n):
    return phi(from_int(n), ZERO)


def encode(beta, n):
    """An element whose default evaluation is beta (1 <= beta < phi_n(0)).

    Constructive: each term of beta becomes one column of the result.
    Implemented for levels 1 through 4.
    """
    if n < 1:
        raise OutOfRange("level must be >= 1")
    if n > 4:
        raise NotImplementedLevel("encode is implemented for levels 1..4")
    if beta.is_zero():
        raise OutOfRange("0 is not a value of the evaluation (sums are nonempty)")
    if cmp(beta, _phi_bound(n)) >= 0:
        raise OutOfRange("%s is not below phi_%d(0)" % (format_ordinal(beta), n))
    return _encode(beta, n)


def _term_split(t, n):
    """(subscript as int, recursion value 1+b) of a non-1 term below phi_n(0)."""
    a, b = t
    a_int = to_int(a)
    if a_int >= n:
        raise OutOfRange("term subscript %d at level %d" % (a_int, n))
    return a_int, add(ONE, b)


def _encode(beta, n):
    if n == 1:
        return corolla(to_int(beta))
    if n == 2:
        z = embed(corolla(len(beta.terms)))
        # graft right-to-left so earlier prong numbers stay put
        for p in range(len(beta.terms), 0, -1):
            t = beta.terms[p - 1]
            if t is None:
                continue
            _a, delta = _term_split(t, 2)
            z = graft_at_slot(z, p, _encode(delta, 2)).element
        return z
    head, reqs = _assemble(beta, n - 1, n)
    z = embed(head)
    # anchors are slots of the head; graft largest-anchor first
    for anchor, chain in sorted(reqs, key=lambda r: -r[0]):
        assert chain["level"] == n
        z = graft_at_slot(z, anchor, chain["att"]).element
    return z


def _assemble(gamma, j, n):
    """Level-j element whose walk is gamma, plus level-(j+1) requests.

    Requests are (anchor, payload) pairs: the anchor is a slot of the
    returned element (a factor position one level down from the enclosing
    structure) and the payload is either the ready attachment (for the top
    level) or a (element, sub-requests) pair to graft next level up.
    """
    if j == 2:
        return _assemble_tree(gamma, n)
    elem, reqs = _assemble_level(j, gamma, n)
    return elem, reqs


def _assemble_tree(gamma, n):
    """The level-2 layer: one prong per term; subtrees realize omega powers,
    carrier nodes anchor the higher-level attachments."""
    terms = gamma.terms
    tree = embed(corolla(len(terms)))
    reqs = []   # (node-position-in-tree, chain)
    for p in range(len(terms), 0, -1):
        t = terms[p - 1]
        if t is None:
            continue
        a_int, delta = _term_split(t, n)
        if a_int == 1:
            sub, sub_reqs = _assemble_tree(delta, n)
            g = graft_at_slot(tree, p, sub)
            tree = g.element
            reqs = [(g.factor_phi[pos], chain) for pos, chain in reqs]
            reqs.extend((g.factor_psi[pos], chain) for pos, chain in sub_reqs)
        else:
            chain = _build_chain(t, n)
            carrier = embed(chain["contents"][1])
            g = graft_at_slot(tree, p, carrier)
            tree = g.element
            reqs = [(g.factor_phi[pos], c) for pos, c in reqs]
            reqs.append((g.factor_psi[1], chain))
    return tree, reqs


def _build_chain(t, n):
    """Column data for a term with subscript >= 2: the attachment, the
    carrier contents at every level, and the attachment's own requests."""
    a_int, delta = _term_split(t, n)
    level = a_int + 1
    if level == n:
        att, att_reqs = _encode(delta, n), []
    else:
        att, att_reqs = _assemble(delta, level, n)
    contents = {}
    cur = total_G(att)              # one level below the attachment
    for lvl in range(level - 1, 0, -1):
        contents[lvl] = cur
        if lvl > 1:
            cur = total_G(cur)
    return {"level": level, "att": att, "att_reqs": att_reqs,
            "contents": contents}


def _assemble_level(j, gamma, n):
    """Levels 3 and above: embed the layer below, then materialize every
    level-j request (attachments or single-factor carriers)."""
    below, reqs = _assemble(gamma, j - 1, n)
    elem = embed(below)
    out = []    # requests for level j+1: (factor-position of elem, chain)
    pending = sorted(reqs, key=lambda r: -r[0])
    while pending:
        anchor, chain = pending.pop(0)
        if chain["level"] == j:
            g = graft_at_slot(elem, anchor, chain["att"])
            elem = g.element
            out = [(g.factor_phi[pos], c) for pos, c in out]
            out.extend((g.factor_psi[pos], c) for pos, c in chain["att_reqs"])
        else:
            carrier = embed(chain["contents"][j - 1])
            g = graft_at_slot(elem, anchor, carrier)
            elem = g.element
            out = [(g.factor_phi[pos], c) for pos, c in out]
            out.append((g.factor_psi[1], chain))
        pending = [(g.slot_phi[a], c) for a, c in pending]
    return elem, out


# -- misc ---------------------------------------------------------------------

def image_sweep(n, max_factors, max_arity, use_phi2=None):
    """Set of evaluation values over the bounded enumeration."""
    from .enumeration import enumerate_elements

    values = set()
    for e in enumerate_elements(n, max_factors, max_arity):
        if (use_phi2 if use_phi2 is not None else n == 2):
            values.add(eval_phi2(e))
        else:
            values.add(eval_phin(e))
    return values
