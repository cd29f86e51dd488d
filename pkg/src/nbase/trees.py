"""Planar rooted tree view of level-2 elements.

A level-2 element is a planar tree: its factors are the internal nodes in
preorder (root first, children left to right), and factor t+1 hangs off
prong ``indices[t-1]`` of the partial tree built from the first t factors.
This module converts both ways and exposes leaf/node bookkeeping used by
the morphism calculus and the renderers.
"""

from __future__ import annotations

from .elements import PlainElement, corolla
from .errors import LevelMismatch


class TreeNode:
    """Mutable planar tree node; children[p] is None for a free prong."""

    __slots__ = ("arity", "children", "tag")

    def __init__(self, arity, tag=None):
        self.arity = arity
        self.children = [None] * arity
        self.tag = tag

    def preorder(self):
        yield self
        for child in self.children:
            if child is not None:
                yield from child.preorder()

    def leaves(self):
        """(node, prong) pairs of the free prongs, left to right."""
        for p, child in enumerate(self.children, start=1):
            if child is None:
                yield (self, p)
            else:
                yield from child.leaves()

    def copy(self):
        dup = TreeNode(self.arity, self.tag)
        dup.children = [c.copy() if c is not None else None
                        for c in self.children]
        return dup


def to_tree(x):
    """Planar tree of a level-2 element; nodes tagged with factor positions."""
    if x.level != 2:
        raise LevelMismatch("tree view needs a level-2 element")
    root = TreeNode(x.factors[0].arity, tag=1)
    slots = [(root, p) for p in range(1, root.arity + 1)]
    for t, (f, idx) in enumerate(zip(x.factors[1:], x.indices), start=2):
        node, prong = slots[idx - 1]
        new = TreeNode(f.arity, tag=t)
        node.children[prong - 1] = new
        slots[idx - 1:idx] = [(new, p) for p in range(1, new.arity + 1)]
    return root


def from_tree(root):
    """Canonical level-2 element of a planar tree (preorder factor order)."""
    factors = []
    indices = []
    slots = []

    def place(node, ambient_pos):
        factors.append(corolla(node.arity))
        if ambient_pos is not None:
            indices.append(ambient_pos)
            slots[ambient_pos - 1:ambient_pos] = [(node, p) for p in range(1, node.arity + 1)]
        else:
            slots.extend((node, p) for p in range(1, node.arity + 1))
        for p, child in enumerate(node.children, start=1):
            if child is not None:
                place(child, slots.index((node, p)) + 1)

    place(root, None)
    return PlainElement(2, factors=factors, indices=indices)


def node_order(root):
    """Preorder list of nodes (position 1-based lookup via index + 1)."""
    return list(root.preorder())


def leaf_order(root):
    """Free prongs in left-to-right order."""
    return list(root.leaves())
