//! Disjoint sets whose class representative is always the smallest member.
//!
//! Keeping the minimum as root (instead of union by rank) lets callers
//! number classes by their smallest element without a second pass.

#[derive(Clone, Debug)]
pub(crate) struct DisjointSet {
    parent: Vec<usize>,
}

impl DisjointSet {
    pub(crate) fn new(n: usize) -> Self {
        Self { parent: (0..n).collect() }
    }

    pub(crate) fn find(&mut self, mut node: usize) -> usize {
        let mut root = node;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        while self.parent[node] != root {
            let next = self.parent[node];
            self.parent[node] = root;
            node = next;
        }
        root
    }

    pub(crate) fn union(&mut self, left: usize, right: usize) -> usize {
        let left = self.find(left);
        let right = self.find(right);
        let (low, high) = if left < right { (left, right) } else { (right, left) };
        self.parent[high] = low;
        low
    }

    /// Class index of every element, classes numbered in order of their
    /// smallest member. Returns `(class_of, class_count)`.
    pub(crate) fn classes(&mut self) -> (Vec<usize>, usize) {
        let n = self.parent.len();
        let mut index_of_root = vec![usize::MAX; n];
        let mut class_of = vec![0; n];
        let mut count = 0;
        for i in 0..n {
            let root = self.find(i);
            if index_of_root[root] == usize::MAX {
                index_of_root[root] = count;
                count += 1;
            }
            class_of[i] = index_of_root[root];
        }
        (class_of, count)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classes_are_numbered_by_smallest_member() {
        let mut set = DisjointSet::new(6);
        set.union(5, 3);
        set.union(4, 1);
        set.union(3, 4);
        let (class_of, count) = set.classes();
        assert_eq!(count, 3);
        assert_eq!(class_of, vec![0, 1, 2, 1, 1, 1]);
        assert_eq!(set.find(5), 1);
    }
}
