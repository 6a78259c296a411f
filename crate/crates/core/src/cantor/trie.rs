//! Binary trie over `2^{<ω}` used as the working representation of clopen
//! sets. A normalized trie never contains `Split(Full, Full)` or
//! `Split(Empty, Empty)`, so its `Full` leaves are exactly the canonical
//! antichain.

use std::collections::BTreeSet;

use super::BitString;
use crate::dyadic::Dyadic;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Node {
    Empty,
    Full,
    Split(Box<Node>, Box<Node>),
}

impl Node {
    pub fn split(zero: Node, one: Node) -> Node {
        match (zero, one) {
            (Node::Full, Node::Full) => Node::Full,
            (Node::Empty, Node::Empty) => Node::Empty,
            (a, b) => Node::Split(Box::new(a), Box::new(b)),
        }
    }

    /// Trie covering the union of the given cylinders, normalized.
    pub fn from_strings<'a>(strings: impl IntoIterator<Item = &'a BitString>) -> Node {
        let mut root = Node::Empty;
        for s in strings {
            root.insert(s.bits());
        }
        root.normalized()
    }

    /// Unnormalized trie with a `Full` leaf for each inserted string.
    /// Used to inspect level functions exactly as given.
    pub fn raw_from_strings<'a>(strings: impl IntoIterator<Item = &'a BitString>) -> Node {
        let mut root = Node::Empty;
        for s in strings {
            root.insert(s.bits());
        }
        root
    }

    fn insert(&mut self, bits: &[bool]) {
        if matches!(self, Node::Full) {
            return;
        }
        let Some((&first, rest)) = bits.split_first() else {
            *self = Node::Full;
            return;
        };
        if matches!(self, Node::Empty) {
            *self = Node::Split(Box::new(Node::Empty), Box::new(Node::Empty));
        }
        if let Node::Split(a, b) = self {
            if first { b.insert(rest) } else { a.insert(rest) }
        }
    }

    fn normalized(self) -> Node {
        match self {
            Node::Split(a, b) => Node::split(a.normalized(), b.normalized()),
            leaf => leaf,
        }
    }

    pub fn union(&self, other: &Node) -> Node {
        match (self, other) {
            (Node::Full, _) | (_, Node::Full) => Node::Full,
            (Node::Empty, x) | (x, Node::Empty) => x.clone(),
            (Node::Split(a0, a1), Node::Split(b0, b1)) => Node::split(a0.union(b0), a1.union(b1)),
        }
    }

    pub fn intersect(&self, other: &Node) -> Node {
        match (self, other) {
            (Node::Empty, _) | (_, Node::Empty) => Node::Empty,
            (Node::Full, x) | (x, Node::Full) => x.clone(),
            (Node::Split(a0, a1), Node::Split(b0, b1)) => {
                Node::split(a0.intersect(b0), a1.intersect(b1))
            }
        }
    }

    pub fn complement(&self) -> Node {
        match self {
            Node::Empty => Node::Full,
            Node::Full => Node::Empty,
            Node::Split(a, b) => Node::Split(Box::new(a.complement()), Box::new(b.complement())),
        }
    }

    /// Measure of the covered part relative to this node's own cylinder.
    pub fn relative_measure(&self) -> Dyadic {
        match self {
            Node::Empty => Dyadic::zero(),
            Node::Full => Dyadic::one(),
            Node::Split(a, b) => (a.relative_measure() + b.relative_measure()).shr(1),
        }
    }

    /// Follow `path`; stops early at a leaf, which then stands for the
    /// whole sub-cylinder.
    pub fn descend(&self, path: &[bool]) -> &Node {
        let mut node = self;
        for &bit in path {
            match node {
                Node::Split(a, b) => node = if bit { b } else { a },
                leaf => return leaf,
            }
        }
        node
    }

    pub fn members(&self) -> BTreeSet<BitString> {
        let mut out = BTreeSet::new();
        let mut path = Vec::new();
        self.collect_full(&mut path, &mut out);
        out
    }

    fn collect_full(&self, path: &mut Vec<bool>, out: &mut BTreeSet<BitString>) {
        match self {
            Node::Empty => {}
            Node::Full => {
                out.insert(BitString::from_bits(path.iter().copied()));
            }
            Node::Split(a, b) => {
                path.push(false);
                a.collect_full(path, out);
                path.pop();
                path.push(true);
                b.collect_full(path, out);
                path.pop();
            }
        }
    }

    /// True if some internal node of this (possibly unnormalized) trie is
    /// completely covered by the leaves below it.
    pub fn has_covered_internal_node(&self) -> bool {
        match self {
            Node::Split(a, b) => {
                self.relative_measure() == Dyadic::one()
                    || a.has_covered_internal_node()
                    || b.has_covered_internal_node()
            }
            _ => false,
        }
    }
}
