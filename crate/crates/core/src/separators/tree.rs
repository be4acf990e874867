//! Universal ordered trees.
//!
//! `U(n, h)` is built recursively: `U(0, h)` is empty, `U(n, 0)` is a single
//! leaf, and the root of `U(n, h)` has as children the children of
//! `U(⌊n/2⌋, h)`, then one child carrying `U(n, h-1)`, then the children of
//! `U(n-1-⌊n/2⌋, h)`. Every ordered tree of height `h` with at most `n`
//! leaves, all at depth `h`, embeds into it.
//!
//! The tree is never materialised. Subtrees only ever use the `n` values on
//! the halving chain from the root, so leaf and child counts are tabulated
//! for those values and every query walks down in `O(h log n)` steps.
//! Leaves are numbered left to right, and every node covers a contiguous
//! range of leaf numbers.

use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, Debug)]
struct Shape {
    n: usize,
    left: usize,
    right: usize,
}

#[derive(Clone, Debug)]
pub struct UniversalTree {
    n: usize,
    height: usize,
    root: usize,
    shapes: Vec<Shape>,
    /// `leaves[shape][h]`, saturating.
    leaves: Vec<Vec<u64>>,
    /// Number of root children of the tree for `(shape, h)`.
    children: Vec<Vec<u64>>,
}

/// A leaf, as the child index taken at each level from the root down:
/// `(x_h, ..., x_1)`. Comparing leaves lexicographically is the
/// left-to-right order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Leaf(pub Vec<u64>);

impl Leaf {
    /// The child index `x_level` taken at `level` (`h` is the root level, 1
    /// the level just above the leaves).
    pub fn component(&self, level: usize) -> u64 {
        self.0[self.0.len() - level]
    }
}

impl fmt::Display for Leaf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// An explicit ordered tree; a node without children is a leaf.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct OrderedTree {
    pub children: Vec<OrderedTree>,
}

impl OrderedTree {
    pub fn leaf() -> OrderedTree {
        OrderedTree::default()
    }

    pub fn leaf_count(&self) -> usize {
        if self.children.is_empty() {
            1
        } else {
            self.children.iter().map(OrderedTree::leaf_count).sum()
        }
    }

    /// Whether every leaf sits at exactly `depth`.
    pub fn leaves_at_depth(&self, depth: usize) -> bool {
        if depth == 0 {
            self.children.is_empty()
        } else {
            !self.children.is_empty() && self.children.iter().all(|c| c.leaves_at_depth(depth - 1))
        }
    }
}

impl UniversalTree {
    pub fn new(n: usize, height: usize) -> UniversalTree {
        let mut by_n: BTreeMap<usize, usize> = BTreeMap::new();
        let mut pending = vec![n];
        while let Some(m) = pending.pop() {
            if by_n.contains_key(&m) {
                continue;
            }
            by_n.insert(m, 0);
            if m > 0 {
                pending.push(m / 2);
                pending.push(m - 1 - m / 2);
            }
        }
        // ascending n, so every shape comes after the shapes it refers to
        for (i, id) in by_n.values_mut().enumerate() {
            *id = i;
        }
        let shapes: Vec<Shape> = by_n
            .keys()
            .map(|&m| {
                let (a, b) = if m > 0 { (m / 2, m - 1 - m / 2) } else { (0, 0) };
                Shape { n: m, left: by_n[&a], right: by_n[&b] }
            })
            .collect();
        let mut leaves = vec![vec![0u64; height + 1]; shapes.len()];
        let mut children = vec![vec![0u64; height + 1]; shapes.len()];
        for (i, shape) in shapes.iter().enumerate() {
            if shape.n == 0 {
                continue;
            }
            leaves[i][0] = 1;
            for h in 1..=height {
                leaves[i][h] = leaves[shape.left][h]
                    .saturating_add(leaves[i][h - 1])
                    .saturating_add(leaves[shape.right][h]);
                children[i][h] = children[shape.left][h]
                    .saturating_add(1)
                    .saturating_add(children[shape.right][h]);
            }
        }
        UniversalTree { n, height, root: by_n[&n], shapes, leaves, children }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn height(&self) -> usize {
        self.height
    }

    /// Number of leaves, saturating at `u64::MAX`.
    pub fn leaf_count(&self) -> u64 {
        self.leaves[self.root][self.height]
    }

    /// The leaf with left-to-right number `index`.
    pub fn leaf(&self, index: u64) -> Option<Leaf> {
        if index >= self.leaf_count() {
            return None;
        }
        let mut components = Vec::with_capacity(self.height);
        let (mut shape, mut h, mut base, mut rel) = (self.root, self.height, 0u64, index);
        while h > 0 {
            let s = &self.shapes[shape];
            let left = self.leaves[s.left][h];
            let middle = self.leaves[shape][h - 1];
            if rel < left {
                shape = s.left;
            } else if rel < left + middle {
                components.push(base + self.children[s.left][h]);
                base = 0;
                rel -= left;
                h -= 1;
            } else {
                base += self.children[s.left][h] + 1;
                rel -= left + middle;
                shape = s.right;
            }
        }
        Some(Leaf(components))
    }

    /// Left-to-right number of `leaf`, or `None` if it addresses no leaf.
    pub fn index_of(&self, leaf: &Leaf) -> Option<u64> {
        if leaf.0.len() != self.height {
            return None;
        }
        let (mut shape, mut h, mut base, mut offset, mut pos) = (self.root, self.height, 0u64, 0u64, 0);
        while h > 0 {
            let s = &self.shapes[shape];
            if s.n == 0 {
                return None;
            }
            let c = leaf.0[pos];
            let before = base + self.children[s.left][h];
            if c < base {
                return None;
            } else if c < before {
                shape = s.left;
            } else if c == before {
                offset += self.leaves[s.left][h];
                base = 0;
                h -= 1;
                pos += 1;
            } else {
                offset += self.leaves[s.left][h] + self.leaves[shape][h - 1];
                base = before + 1;
                shape = s.right;
            }
        }
        (self.shapes[shape].n > 0).then_some(offset)
    }

    /// The range `(first, count)` of leaf numbers below the node at `depth`
    /// (0 is the root) on the way to leaf `index`.
    pub fn node_range(&self, index: u64, depth: usize) -> (u64, u64) {
        debug_assert!(index < self.leaf_count() && depth <= self.height);
        let (mut shape, mut h, mut depth, mut offset) = (self.root, self.height, depth, 0u64);
        loop {
            if depth == 0 {
                return (offset, self.leaves[shape][h]);
            }
            let s = &self.shapes[shape];
            let left = self.leaves[s.left][h];
            let middle = self.leaves[shape][h - 1];
            let rel = index - offset;
            if rel < left {
                shape = s.left;
            } else if rel < left + middle {
                offset += left;
                h -= 1;
                depth -= 1;
            } else {
                offset += left + middle;
                shape = s.right;
            }
        }
    }

    /// The whole tree as nested nodes. Only sensible for small trees.
    pub fn to_ordered_tree(&self) -> OrderedTree {
        self.materialize(self.root, self.height)
    }

    fn materialize(&self, shape: usize, h: usize) -> OrderedTree {
        if h == 0 {
            return OrderedTree::leaf();
        }
        OrderedTree { children: self.root_children(shape, h) }
    }

    fn root_children(&self, shape: usize, h: usize) -> Vec<OrderedTree> {
        let s = &self.shapes[shape];
        if s.n == 0 {
            return Vec::new();
        }
        let mut children = self.root_children(s.left, h);
        children.push(self.materialize(shape, h - 1));
        children.extend(self.root_children(s.right, h));
        children
    }
}
