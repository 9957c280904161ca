/// Disjoint sets over `0..n` with path halving and union by size.
#[derive(Clone, Debug)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
    classes: usize,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        Self { parent: (0..n).collect(), size: vec![1; n], classes: n }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns true if `a` and `b` were in different classes.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        self.classes -= 1;
        true
    }

    pub fn classes(&self) -> usize {
        self.classes
    }
}

/// Union-find without path compression that can undo unions in LIFO order.
/// Used by the state-sum walk, which pushes and pops one crossing at a time.
#[derive(Clone, Debug)]
pub(crate) struct RollbackUnionFind {
    parent: Vec<u32>,
    rank: Vec<u8>,
    history: Vec<Option<(u32, u32, bool)>>,
    classes: usize,
}

impl RollbackUnionFind {
    pub(crate) fn new(n: usize) -> Self {
        Self {
            parent: (0..n as u32).collect(),
            rank: vec![0; n],
            history: Vec::with_capacity(2 * n),
            classes: n,
        }
    }

    fn find(&self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            x = self.parent[x as usize];
        }
        x
    }

    pub(crate) fn union(&mut self, a: u32, b: u32) {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            self.history.push(None);
            return;
        }
        if self.rank[ra as usize] < self.rank[rb as usize] {
            std::mem::swap(&mut ra, &mut rb);
        }
        let bumped = self.rank[ra as usize] == self.rank[rb as usize];
        self.parent[rb as usize] = ra;
        if bumped {
            self.rank[ra as usize] += 1;
        }
        self.classes -= 1;
        self.history.push(Some((ra, rb, bumped)));
    }

    pub(crate) fn undo(&mut self) {
        if let Some(Some((ra, rb, bumped))) = self.history.pop() {
            self.parent[rb as usize] = rb;
            if bumped {
                self.rank[ra as usize] -= 1;
            }
            self.classes += 1;
        }
    }

    pub(crate) fn classes(&self) -> usize {
        self.classes
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rollback_restores_classes() {
        let mut uf = RollbackUnionFind::new(5);
        uf.union(0, 1);
        uf.union(1, 2);
        uf.union(0, 2);
        assert_eq!(uf.classes(), 3);
        uf.undo();
        uf.undo();
        assert_eq!(uf.classes(), 4);
        uf.undo();
        assert_eq!(uf.classes(), 5);
    }

    #[test]
    fn plain_union_find() {
        let mut uf = UnionFind::new(4);
        assert!(uf.union(0, 3));
        assert!(!uf.union(3, 0));
        assert_eq!(uf.classes(), 3);
        assert_eq!(uf.find(3), uf.find(0));
    }
}
