use std::collections::HashSet;

use crate::int::Int;
use crate::vector::LatticeVector;

/// Norm-sorted set of distinct nonzero vectors holding at most `capacity`.
///
/// Members are stored as their canonical associates, so `v` and `-v` (and
/// `±iv` in a module) are one member. Order is `(norm², entries)`, which
/// breaks ties deterministically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Population {
    members: Vec<LatticeVector>,
    index: HashSet<LatticeVector>,
    capacity: usize,
}

impl Population {
    pub fn new(capacity: usize) -> Self {
        Population {
            members: Vec::new(),
            index: HashSet::new(),
            capacity,
        }
    }

    /// Keeps the `capacity` smallest distinct nonzero vectors of `vectors`.
    pub fn from_vectors(vectors: impl IntoIterator<Item = LatticeVector>, capacity: usize) -> Self {
        elite_select(vectors, capacity)
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[LatticeVector] {
        &self.members
    }

    pub fn get(&self, i: usize) -> &LatticeVector {
        &self.members[i]
    }

    pub fn best(&self) -> Option<&LatticeVector> {
        self.members.first()
    }

    /// Whether `v` or one of its associates is a member.
    pub fn contains(&self, v: &LatticeVector) -> bool {
        self.index.contains(&v.canonical_associate())
    }

    /// Inserts `v` in order. Returns `false` (and leaves the population
    /// unchanged) for zero vectors, duplicates, and vectors that would rank
    /// beyond capacity.
    pub fn insert(&mut self, v: LatticeVector) -> bool {
        let v = v.canonical_associate();
        if v.is_zero() || self.capacity == 0 || self.index.contains(&v) {
            return false;
        }
        let pos = self.members.binary_search(&v).unwrap_or_else(|p| p);
        if pos >= self.capacity {
            return false;
        }
        if self.members.len() == self.capacity {
            let dropped = self.members.pop().expect("population is full");
            self.index.remove(&dropped);
        }
        self.index.insert(v.clone());
        self.members.insert(pos, v);
        true
    }

    /// Mean Euclidean length of the members.
    pub fn mean_norm(&self) -> f64 {
        if self.members.is_empty() {
            return 0.0;
        }
        self.members.iter().map(LatticeVector::norm).sum::<f64>() / self.members.len() as f64
    }

    pub fn best_norm_sq(&self) -> Int {
        self.best()
            .map(|v| v.norm_sq().clone())
            .unwrap_or(Int::ZERO)
    }

    pub fn into_members(self) -> Vec<LatticeVector> {
        self.members
    }

    /// Pairs `(u_i, u_j)` for `i < j` in index order.
    pub fn pairs(&self) -> impl Iterator<Item = (&LatticeVector, &LatticeVector)> + '_ {
        pair_stream(self)
    }
}

/// Yields `(u_i, v_j)` for `i < j`, outer loop over `i`, over the sorted
/// population.
pub fn pair_stream(p: &Population) -> impl Iterator<Item = (&LatticeVector, &LatticeVector)> + '_ {
    let m = p.members();
    (0..m.len()).flat_map(move |i| (i + 1..m.len()).map(move |j| (&m[i], &m[j])))
}

/// The `n` smallest nonzero vectors of `pool`, one per associate class,
/// sorted ascending.
pub fn elite_select(pool: impl IntoIterator<Item = LatticeVector>, n: usize) -> Population {
    let mut all: Vec<LatticeVector> = pool
        .into_iter()
        .filter(|v| !v.is_zero())
        .map(|v| v.canonical_associate())
        .collect();
    all.sort();
    all.dedup();
    all.truncate(n);
    let index = all.iter().cloned().collect();
    Population {
        members: all,
        index,
        capacity: n,
    }
}
