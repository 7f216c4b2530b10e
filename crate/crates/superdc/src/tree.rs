//! Postordered full binary trees over contiguous index ranges.

use std::ops::Range;

use crate::error::{Error, Result};

/// A full binary tree in postorder (children precede their parent, root last).
///
/// Every node owns a contiguous row range; leaf ranges partition `0..n` in
/// tree order. The root sits at level 0 and children of a level-`l` node are
/// at level `l + 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct HssTree {
    children: Vec<Option<(usize, usize)>>,
    parent: Vec<Option<usize>>,
    level: Vec<usize>,
    rows: Vec<Range<usize>>,
    n: usize,
}

impl HssTree {
    /// Builds the tree for dimension `n` with contiguous leaf blocks of
    /// `leaf_size` rows; the last leaf absorbs the remainder.
    pub fn partition(n: usize, leaf_size: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidDimension("n must be positive".into()));
        }
        if leaf_size < 2 {
            return Err(Error::InvalidDimension(format!(
                "leaf_size must be at least 2, got {leaf_size}"
            )));
        }
        let nleaves = (n / leaf_size).max(1);
        let mut sizes = vec![leaf_size; nleaves];
        if nleaves == 1 {
            sizes[0] = n;
        } else {
            sizes[nleaves - 1] += n % leaf_size;
        }
        let mut ranges = Vec::with_capacity(nleaves);
        let mut start = 0;
        for s in sizes {
            ranges.push(start..start + s);
            start += s;
        }
        Ok(Self::from_leaf_ranges(&ranges))
    }

    /// Builds a balanced full binary tree over the given leaf row ranges.
    pub fn from_leaf_ranges(ranges: &[Range<usize>]) -> Self {
        assert!(!ranges.is_empty());
        let mut tree = HssTree {
            children: Vec::new(),
            parent: Vec::new(),
            level: Vec::new(),
            rows: Vec::new(),
            n: ranges.last().unwrap().end,
        };
        tree.build(ranges, 0);
        // Postorder construction leaves levels unknown; fill them root-down.
        let root = tree.root();
        tree.level[root] = 0;
        for i in (0..tree.node_count()).rev() {
            if let Some((c1, c2)) = tree.children[i] {
                tree.level[c1] = tree.level[i] + 1;
                tree.level[c2] = tree.level[i] + 1;
            }
        }
        tree
    }

    fn build(&mut self, ranges: &[Range<usize>], _depth: usize) -> usize {
        if ranges.len() == 1 {
            self.push(None, ranges[0].clone())
        } else {
            let mid = ranges.len().div_ceil(2);
            let c1 = self.build(&ranges[..mid], _depth + 1);
            let c2 = self.build(&ranges[mid..], _depth + 1);
            let idx = self.push(Some((c1, c2)), ranges[0].start..ranges.last().unwrap().end);
            self.parent[c1] = Some(idx);
            self.parent[c2] = Some(idx);
            idx
        }
    }

    fn push(&mut self, children: Option<(usize, usize)>, rows: Range<usize>) -> usize {
        self.children.push(children);
        self.parent.push(None);
        self.level.push(0);
        self.rows.push(rows);
        self.children.len() - 1
    }

    pub fn node_count(&self) -> usize {
        self.children.len()
    }

    pub fn root(&self) -> usize {
        self.node_count() - 1
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_leaf(&self, i: usize) -> bool {
        self.children[i].is_none()
    }

    pub fn children(&self, i: usize) -> Option<(usize, usize)> {
        self.children[i]
    }

    pub fn parent(&self, i: usize) -> Option<usize> {
        self.parent[i]
    }

    pub fn level(&self, i: usize) -> usize {
        self.level[i]
    }

    pub fn rows(&self, i: usize) -> Range<usize> {
        self.rows[i].clone()
    }

    pub fn node_size(&self, i: usize) -> usize {
        self.rows[i].len()
    }

    /// Leaf level of the tree (`l_max`); 0 for a single-node tree.
    pub fn max_level(&self) -> usize {
        (0..self.node_count())
            .filter(|&i| self.is_leaf(i))
            .map(|i| self.level[i])
            .max()
            .unwrap_or(0)
    }

    pub fn leaves(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.node_count()).filter(|&i| self.is_leaf(i))
    }

    pub fn nonleaves(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.node_count()).filter(|&i| !self.is_leaf(i))
    }

    /// Smallest postorder index in the subtree rooted at `i` (its first leaf).
    pub fn first_descendant(&self, i: usize) -> usize {
        let mut k = i;
        while let Some((c1, _)) = self.children[k] {
            k = c1;
        }
        k
    }

    /// Checks the full-binary/postorder/contiguity invariants.
    pub fn validate(&self) -> Result<()> {
        let root = self.root();
        if self.rows[root] != (0..self.n) {
            return Err(Error::InvalidInput("root range must cover 0..n".into()));
        }
        for i in 0..self.node_count() {
            match self.children[i] {
                None => {}
                Some((c1, c2)) => {
                    if c1 >= i || c2 >= i {
                        return Err(Error::InvalidInput("postorder violated".into()));
                    }
                    if self.rows[c1].end != self.rows[c2].start
                        || self.rows[c1].start != self.rows[i].start
                        || self.rows[c2].end != self.rows[i].end
                    {
                        return Err(Error::InvalidInput("child ranges must tile parent".into()));
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_shapes() {
        let t = HssTree::partition(10, 2).unwrap();
        assert_eq!(t.leaves().count(), 5);
        assert_eq!(t.n(), 10);
        t.validate().unwrap();
        // last leaf absorbs the remainder
        let t = HssTree::partition(11, 4).unwrap();
        let sizes: Vec<usize> = t.leaves().map(|i| t.node_size(i)).collect();
        assert_eq!(sizes, vec![4, 7]);
        t.validate().unwrap();
    }

    #[test]
    fn single_leaf() {
        let t = HssTree::partition(3, 4).unwrap();
        assert_eq!(t.node_count(), 1);
        assert!(t.is_leaf(t.root()));
    }

    #[test]
    fn postorder_and_levels() {
        let t = HssTree::partition(16, 2).unwrap();
        assert_eq!(t.level(t.root()), 0);
        for i in 0..t.node_count() {
            if let Some((c1, c2)) = t.children(i) {
                assert!(c1 < i && c2 < i);
                assert_eq!(t.level(c1), t.level(i) + 1);
                assert_eq!(t.level(c2), t.level(i) + 1);
                assert_eq!(t.parent(c1), Some(i));
            }
        }
        assert_eq!(t.max_level(), 3);
        assert_eq!(t.first_descendant(t.root()), 0);
    }

    #[test]
    fn rejects_bad_dims() {
        assert!(HssTree::partition(0, 4).is_err());
        assert!(HssTree::partition(8, 1).is_err());
    }
}
