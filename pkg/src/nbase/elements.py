"""Core algebra of level-indexed composable shapes.

An element of level 0 is the point.  An element of level 1 is a positive
arity (a corolla with that many prongs).  An element of level n >= 2 is a
nonempty sequence of level-(n-1) factors together with graft indices: factor
t+1 is grafted into slot ``indices[t-1]`` of the executed composite of the
factors before it.  Canonical form requires the index sequence to be
nondecreasing; grafting at equal indices means grafting into the piece that
was just inserted.

At level 2 these are exactly planar rooted trees (factor t+1's corolla hangs
off prong ``indices[t-1]`` of the partial tree, prongs numbered left to
right) and the canonical factor order is the preorder traversal.

Composition ``compose(x, i, y)`` substitutes y for the i-th factor of x and
returns, besides the canonical result, the pair of strictly increasing
position maps (phi for x's surviving factors, psi for y's) recording where
every factor lands.  All values are immutable; every function is pure.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    InvalidSequence,
    LevelMismatch,
    MatchViolation,
    NotComposable,
    OrderViolation,
    RangeViolation,
)


class PlainElement:
    """Immutable level-tagged shape; equality is structural."""

    __slots__ = ("level", "arity", "factors", "indices", "_hash", "_total")

    def __init__(self, level, arity=None, factors=None, indices=None,
                 allow_zero=False):
        self.level = level
        self._total = None
        if level == 0:
            self.arity = None
            self.factors = None
            self.indices = None
            self._hash = hash((0,))
        elif level == 1:
            if not isinstance(arity, int) or arity < (0 if allow_zero else 1):
                raise RangeViolation("level-1 arity must be a positive integer, got %r" % (arity,))
            self.arity = arity
            self.factors = None
            self.indices = None
            self._hash = hash((1, arity))
        else:
            factors = tuple(factors)
            indices = tuple(indices)
            if not factors:
                raise RangeViolation("level-%d element needs at least one factor" % level)
            if len(indices) != len(factors) - 1:
                raise RangeViolation(
                    "expected %d graft indices for %d factors, got %d"
                    % (len(factors) - 1, len(factors), len(indices)))
            for f in factors:
                if not isinstance(f, PlainElement) or f.level != level - 1:
                    raise LevelMismatch(
                        "factor %r is not a level-%d element" % (f, level - 1))
            for a, b in zip(indices, indices[1:]):
                if a > b:
                    raise OrderViolation(
                        "graft indices must be nondecreasing: %r" % (indices,))
            _check_sequence(factors, indices)
            self.arity = None
            self.factors = factors
            self.indices = indices
            self._hash = hash((level, factors, indices))

    # -- basic structure -------------------------------------------------

    @property
    def m(self):
        """Number of entries: factor count, arity at level 1, 1 for the point."""
        if self.level == 0:
            return 1
        if self.level == 1:
            return self.arity
        return len(self.factors)

    def slot(self, i):
        """The i-th entry of the slot sequence (1-based)."""
        return slots_F(self)[i - 1]

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, PlainElement):
            return NotImplemented
        if self._hash != other._hash or self.level != other.level:
            return False
        return (self.arity == other.arity and self.factors == other.factors
                and self.indices == other.indices)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        from .grammar import format_element
        return "<%d:%s>" % (self.level, format_element(self))


POINT = PlainElement(0)


def corolla(arity, allow_zero=False):
    """The level-1 element with the given number of prongs."""
    return PlainElement(1, arity=arity, allow_zero=allow_zero)


def make(level, factors, indices):
    """Canonical level-n element (n >= 2); validates all invariants."""
    return PlainElement(level, factors=factors, indices=indices)


@dataclass(frozen=True)
class ShuffleMap:
    """Position maps of a composition at slot i.

    phi maps the surviving x-factor positions {1..m_x} minus {i}, psi maps
    y-factor positions {1..m_y}; both are strictly increasing and their
    images partition {1..m_x+m_y-1}.
    """
    i: int
    m_x: int
    m_y: int
    phi: dict
    psi: dict

    def check(self):
        tot = self.m_x + self.m_y - 1
        phi_keys = sorted(self.phi)
        psi_keys = sorted(self.psi)
        assert phi_keys == [j for j in range(1, self.m_x + 1) if j != self.i]
        assert psi_keys == list(range(1, self.m_y + 1))
        phi_vals = [self.phi[j] for j in phi_keys]
        psi_vals = [self.psi[k] for k in psi_keys]
        assert all(a < b for a, b in zip(phi_vals, phi_vals[1:]))
        assert all(a < b for a, b in zip(psi_vals, psi_vals[1:]))
        assert all(self.phi[j] == j for j in phi_keys if j < self.i)
        assert sorted(phi_vals + psi_vals) == list(range(1, tot + 1))
        return True


@dataclass(frozen=True)
class GammaSequence:
    """A raw application sequence: like an element but with unsorted indices."""
    level: int
    factors: tuple
    indices: tuple

    def validate(self):
        if self.level < 2:
            raise LevelMismatch("raw sequences live at level >= 2")
        try:
            _check_sequence(self.factors, self.indices)
        except (RangeViolation, MatchViolation) as exc:
            raise InvalidSequence(str(exc)) from exc
        return self


def _check_sequence(factors, indices):
    """Range and matching constraints of a graft sequence, in application order."""
    partial = factors[0]
    for t, (f, idx) in enumerate(zip(factors[1:], indices), start=2):
        if idx < 1 or idx > partial.m:
            raise RangeViolation(
                "index %d of factor %d outside 1..%d" % (idx, t, partial.m))
        slot_content = slots_F(partial)[idx - 1]
        if total_G(f) != slot_content:
            raise MatchViolation(
                "factor %d has total %r but slot %d holds %r"
                % (t, total_G(f), idx, slot_content))
        partial = _execute(partial, idx, f)
    return partial


# -- the F, G, m trio ----------------------------------------------------

def arity_m(x):
    """Entry count of x (m-value)."""
    return x.m


def slots_F(x):
    """The slot sequence: factors at level >= 2, m copies of the point at level 1."""
    if x.level == 0:
        raise LevelMismatch("the point has no slot sequence")
    if x.level == 1:
        return (POINT,) * x.arity
    return x.factors


def total_G(x):
    """The executed composite one level down (the total shape of x)."""
    if x.level == 0:
        raise LevelMismatch("the point has no total")
    if x.level == 1:
        return POINT
    if x._total is None:
        partial = x.factors[0]
        for f, idx in zip(x.factors[1:], x.indices):
            partial = _execute(partial, idx, f)
        x._total = partial
    return x._total


def _execute(x, i, y):
    """Composite without shuffle bookkeeping (used by validation and G)."""
    if x.level == 1:
        return corolla(x.arity + y.arity - 1, allow_zero=True)
    return compose(x, i, y)[0]


# -- composition ---------------------------------------------------------

_compose_cache: dict = {}


def compose(x, i, y):
    """Substitute y into slot i of x; returns (result, ShuffleMap)."""
    key = (x, i, y)
    hit = _compose_cache.get(key)
    if hit is not None:
        return hit
    res = _compose(x, i, y)
    _compose_cache[key] = res
    return res


def _compose(x, i, y):
    if x.level != y.level or x.level < 1:
        raise LevelMismatch("compose needs two elements of equal level >= 1")
    if i < 1 or i > x.m:
        raise RangeViolation("slot %d outside 1..%d" % (i, x.m))
    n = x.level
    if n == 1:
        result = corolla(x.arity + y.arity - 1, allow_zero=True)
        phi = {j: (j if j < i else j + y.arity - 1)
               for j in range(1, x.arity + 1) if j != i}
        psi = {k: k + i - 1 for k in range(1, y.arity + 1)}
        return result, ShuffleMap(i, x.arity, y.arity, phi, psi)

    if total_G(y) != slots_F(x)[i - 1]:
        raise NotComposable(
            "G(y)=%r does not match slot %d of x (%r)"
            % (total_G(y), i, slots_F(x)[i - 1]))

    raw_factors, raw_indices = _splice(x, i, y)
    canonical, perm = _sort_sequence(n, list(raw_factors), list(raw_indices))
    # raw order: x_1..x_{i-1}, y_1..y_l, x_{i+1}..x_k
    phi = {}
    psi = {}
    for j in range(1, i):
        phi[j] = perm[j - 1]
    for k in range(1, y.m + 1):
        psi[k] = perm[i - 1 + k - 1]
    for j in range(i + 1, x.m + 1):
        phi[j] = perm[y.m + j - 2]
    return canonical, ShuffleMap(i, x.m, y.m, phi, psi)


def _splice(x, i, y):
    """Raw factor/index lists with y's factors substituted for x's factor i.

    y's first factor takes over x's graft index at position i; the graft
    index of each later y-factor is translated from y-local slot numbering
    to ambient numbering through the slot maps of the level-(n-1) grafts
    performed so far.  x's trailing indices are reused verbatim: the
    level-(n-1) partial composites before and after the splice are equal.
    """
    yf = y.factors
    yi = y.indices
    raw_factors = list(x.factors[:i - 1])
    raw_indices = list(x.indices[:max(i - 2, 0)])

    if i >= 2:
        prefix = x.factors[0]
        for f, idx in zip(x.factors[1:i - 1], x.indices[:i - 2]):
            prefix = _execute(prefix, idx, f)
        s0 = x.indices[i - 2]
        _, sh = compose(prefix, s0, yf[0])
        ambient = _execute(prefix, s0, yf[0])
        rho = dict(sh.psi)
        raw_factors.append(yf[0])
        raw_indices.append(s0)
    else:
        ambient = yf[0]
        rho = {s: s for s in range(1, yf[0].m + 1)}
        raw_factors.append(yf[0])

    local = yf[0]
    for t in range(1, y.m):
        iota = yi[t - 1]
        sigma = rho[iota]
        _, sh_amb = compose(ambient, sigma, yf[t])
        _, sh_loc = compose(local, iota, yf[t])
        new_rho = {}
        for q, cur in rho.items():
            if q == iota:
                continue
            new_rho[sh_loc.phi[q]] = sh_amb.phi[cur]
        for r in range(1, yf[t].m + 1):
            new_rho[sh_loc.psi[r]] = sh_amb.psi[r]
        rho = new_rho
        ambient = _execute(ambient, sigma, yf[t])
        local = _execute(local, iota, yf[t])
        raw_factors.append(yf[t])
        raw_indices.append(sigma)

    raw_factors.extend(x.factors[i:])
    raw_indices.extend(x.indices[i - 1:])
    return raw_factors, raw_indices


# -- normalization -------------------------------------------------------

def normalize(g, strategy="left"):
    """Sort a raw application sequence into canonical form.

    Adjacent out-of-order grafts are rewritten with the swap rule: applying
    gamma at b and then at a < b equals applying gamma at a first and then at
    phi^(w,a,u)(b), where w is the partial composite before the pair and u
    the factor moved in at a.  Returns the canonical element and the map
    original factor position -> canonical position (1-based tuple).

    strategy picks which inversion to rewrite first ("left", "right", or
    "random:<seed>"); the outcome is strategy-independent.
    """
    g.validate()
    elem, perm = _sort_sequence(g.level, list(g.factors), list(g.indices),
                                strategy=strategy)
    return elem, perm


def _sort_sequence(level, factors, indices, strategy="left"):
    """Bubble the sequence canonical, tracking factor positions."""
    k = len(factors)
    pos = list(range(k))  # pos[p] = original index of factor currently at p
    rng = None
    if strategy.startswith("random"):
        import random as _random
        seed = strategy.split(":", 1)[1] if ":" in strategy else "0"
        rng = _random.Random(seed)

    # partial[t] = executed composite of factors[0..t]
    partial = [factors[0]]
    for t in range(1, k):
        partial.append(_execute(partial[t - 1], indices[t - 1], factors[t]))

    while True:
        inversions = [t for t in range(k - 2) if indices[t] > indices[t + 1]]
        if not inversions:
            break
        if strategy == "left":
            t = inversions[0]
        elif strategy == "right":
            t = inversions[-1]
        else:
            t = rng.choice(inversions)
        b, a = indices[t], indices[t + 1]
        u, v = factors[t + 1], factors[t + 2]
        w = partial[t]
        # v moves left to slot a; u is re-indexed by the shuffle of (w, a, v)
        _, sh = compose(w, a, v)
        indices[t] = a
        indices[t + 1] = sh.phi[b]
        factors[t + 1], factors[t + 2] = v, u
        pos[t + 1], pos[t + 2] = pos[t + 2], pos[t + 1]
        partial[t + 1] = _execute(w, a, v)
        # partial[t + 2] is unchanged by the rewrite

    elem = PlainElement(level, factors=factors, indices=indices)
    perm = [0] * k
    for p, orig in enumerate(pos):
        perm[orig] = p + 1
    return elem, tuple(perm)


# -- shuffles and axioms -------------------------------------------------

def shuffle(x, i, y):
    """The shuffle maps of compose(x, i, y)."""
    return compose(x, i, y)[1]


@dataclass(frozen=True)
class Witness:
    """Result of an axiom check; falsy when the two sides disagree."""
    ok: bool
    lhs: object
    rhs: object

    def __bool__(self):
        return self.ok


def check_associativity(x, i, y, j, z):
    """(x o_i y) o_{phi(j)} z  ==  (x o_j z) o_i y  for i < j."""
    if not 1 <= i < j <= x.m:
        raise RangeViolation("need 1 <= i < j <= m_x")
    xy, sh = compose(x, i, y)
    lhs = compose(xy, sh.phi[j], z)[0]
    rhs = compose(compose(x, j, z)[0], i, y)[0]
    return Witness(lhs == rhs, lhs, rhs)


def check_phi_long(x, i, y, j, z, k):
    """phi^(x o_j z, i, y)(phi^(x,j,z)(k)) == phi^(x o_i y, phi^(x,i,y)(j), z)(phi^(x,i,y)(k))."""
    if not 1 <= i < j < k <= x.m:
        raise RangeViolation("need i < j < k <= m_x")
    xz, sh_xz = compose(x, j, z)
    lhs = shuffle(xz, i, y).phi[sh_xz.phi[k]]
    xy, sh_xy = compose(x, i, y)
    rhs = shuffle(xy, sh_xy.phi[j], z).phi[sh_xy.phi[k]]
    return Witness(lhs == rhs, lhs, rhs)


def check_phi_short(x, i, y, j, k, t):
    """phi^(x,i,y)(j) == phi^(x o_k t, i, y)(j)  for i < j < k."""
    if not 1 <= i < j < k <= x.m:
        raise RangeViolation("need i < j < k <= m_x")
    lhs = shuffle(x, i, y).phi[j]
    xt = compose(x, k, t)[0]
    rhs = shuffle(xt, i, y).phi[j]
    return Witness(lhs == rhs, lhs, rhs)


# -- embedding, grafting, head decomposition ------------------------------

def embed(y):
    """The single-factor element [y|] one level up (defined for level >= 1)."""
    if y.level < 1:
        raise LevelMismatch("embed is defined for level >= 1 (the point has no single-factor image)")
    return PlainElement(y.level + 1, factors=(y,), indices=())


@dataclass(frozen=True)
class GraftResult:
    element: "PlainElement"
    factor_phi: dict   # u-factor position -> position in result
    factor_psi: dict   # v-factor position -> position in result
    slot_phi: dict     # slot of G(u), except the grafted one -> slot of G(result)
    slot_psi: dict     # slot of G(v) -> slot of G(result)


def graft_at_slot(u, slot, v):
    """Append all of v's factors to u, the first into the given slot of G(u).

    Requires G(total_G(v)) to match the slot's content.  This is the gamma
    operation of the free structure: compose substitutes at a factor, graft
    subdivides a slot of the total.
    """
    n = u.level
    if v.level != n or n < 2:
        raise LevelMismatch("graft needs equal levels >= 2")
    W = total_G(u)
    if slot < 1 or slot > W.m:
        raise RangeViolation("slot %d outside 1..%d" % (slot, W.m))
    if slots_F(W)[slot - 1] != total_G(total_G(v)):
        raise NotComposable(
            "total of the graft does not match slot %d of the base" % slot)

    raw_factors = list(u.factors)
    raw_indices = list(u.indices)
    yf, yi = v.factors, v.indices

    _, sh0 = compose(W, slot, yf[0])
    slot_map = {s: sh0.phi[s] for s in range(1, W.m + 1) if s != slot}
    rho = dict(sh0.psi)
    ambient = _execute(W, slot, yf[0])
    local = yf[0]
    raw_factors.append(yf[0])
    raw_indices.append(slot)
    for t in range(1, v.m):
        iota = yi[t - 1]
        sigma = rho[iota]
        _, sh_amb = compose(ambient, sigma, yf[t])
        _, sh_loc = compose(local, iota, yf[t])
        slot_map = {o: sh_amb.phi[c] for o, c in slot_map.items()}
        new_rho = {}
        for q, cur in rho.items():
            if q != iota:
                new_rho[sh_loc.phi[q]] = sh_amb.phi[cur]
        for r in range(1, yf[t].m + 1):
            new_rho[sh_loc.psi[r]] = sh_amb.psi[r]
        rho = new_rho
        ambient = _execute(ambient, sigma, yf[t])
        local = _execute(local, iota, yf[t])
        raw_factors.append(yf[t])
        raw_indices.append(sigma)

    elem, perm = _sort_sequence(n, raw_factors, raw_indices)
    factor_phi = {j: perm[j - 1] for j in range(1, u.m + 1)}
    factor_psi = {t: perm[u.m + t - 1] for t in range(1, v.m + 1)}
    return GraftResult(elem, factor_phi, factor_psi, slot_map, rho)


@dataclass(frozen=True)
class Attachment:
    slot: int              # slot of the head that the subtree subdivides
    element: "PlainElement"
    positions: tuple       # original factor positions in z, in local order


@dataclass(frozen=True)
class HeadForm:
    head: "PlainElement"
    attachments: tuple

    def recompose(self):
        """Graft the attachments back into the embedded head (identity check)."""
        z = embed(self.head)
        for att in sorted(self.attachments, key=lambda a: -a.slot):
            z = graft_at_slot(z, att.slot, att.element).element
        return z


def decompose_head(z):
    """Split z into its first factor and the subtrees grafted into its slots.

    Each remaining factor is assigned to the attachment owning the slot it
    grafts into, tracked through the accumulated position maps; slots come
    out strictly increasing and recomposition reproduces z.
    """
    if z.level < 2:
        raise LevelMismatch("head decomposition needs level >= 2")
    head = z.factors[0]
    # origin[s] for each slot s of the current partial composite:
    # ("head", slot-of-head) or (attachment id, local slot)
    origin = {s: ("head", s) for s in range(1, head.m + 1)}
    atts = {}      # id -> dict(slot, factors, indices, local, positions)
    order = []
    partial = head
    for t, (f, idx) in enumerate(zip(z.factors[1:], z.indices), start=2):
        owner, where = origin[idx]
        _, sh_amb = compose(partial, idx, f)
        if owner == "head":
            aid = len(order)
            order.append(aid)
            atts[aid] = {"slot": where, "factors": [f], "indices": [],
                         "local": f, "positions": [t]}
            new_origin = {}
            for s, o in origin.items():
                if s != idx:
                    new_origin[sh_amb.phi[s]] = o
            for r in range(1, f.m + 1):
                new_origin[sh_amb.psi[r]] = (aid, r)
            origin = new_origin
        else:
            a = atts[owner]
            _, sh_loc = compose(a["local"], where, f)
            a["factors"].append(f)
            a["indices"].append(where)
            a["positions"].append(t)
            a["local"] = _execute(a["local"], where, f)
            new_origin = {}
            for s, o in origin.items():
                if s == idx:
                    continue
                if o[0] == owner:
                    new_origin[sh_amb.phi[s]] = (owner, sh_loc.phi[o[1]])
                else:
                    new_origin[sh_amb.phi[s]] = o
            for r in range(1, f.m + 1):
                new_origin[sh_amb.psi[r]] = (owner, sh_loc.psi[r])
            origin = new_origin
        partial = _execute(partial, idx, f)

    result = []
    for aid in order:
        a = atts[aid]
        elem = PlainElement(z.level, factors=a["factors"], indices=a["indices"])
        result.append(Attachment(a["slot"], elem, tuple(a["positions"])))
    result.sort(key=lambda att: att.slot)
    return HeadForm(head, tuple(result))


def validate_literal(level, factors=None, indices=None, arity=None,
                     allow_zero=False):
    """Build and validate an element from parsed pieces (used by the grammar)."""
    if level == 0:
        return POINT
    if level == 1:
        return corolla(arity, allow_zero=allow_zero)
    return PlainElement(level, factors=factors, indices=indices)
