use num_traits::Zero;

use super::ring::{Elem, RingSpec};

/// Sparse vector: entries sorted by index, no stored zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SparseVec {
    entries: Vec<(usize, Elem)>,
}

impl SparseVec {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn unit(i: usize, ring: &RingSpec) -> Self {
        Self {
            entries: vec![(i, ring.one())],
        }
    }

    /// Builds a vector from unsorted, possibly repeated entries.
    pub fn from_entries(ring: &RingSpec, mut raw: Vec<(usize, Elem)>) -> Self {
        raw.sort_by_key(|(i, _)| *i);
        let mut entries: Vec<(usize, Elem)> = Vec::with_capacity(raw.len());
        for (i, v) in raw {
            match entries.last_mut() {
                Some((j, w)) if *j == i => *w = ring.add(w, &v),
                _ => entries.push((i, v)),
            }
        }
        entries.retain(|(_, v)| !v.is_zero());
        Self { entries }
    }

    pub fn from_dense(ring: &RingSpec, dense: &[Elem]) -> Self {
        Self::from_entries(
            ring,
            dense
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(i, v)| (i, v.clone()))
                .collect(),
        )
    }

    pub fn to_dense(&self, dim: usize) -> Vec<Elem> {
        let mut out = vec![Elem::zero(); dim];
        for (i, v) in &self.entries {
            out[*i] = v.clone();
        }
        out
    }

    pub fn entries(&self) -> &[(usize, Elem)] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<(usize, Elem)> {
        self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn lead(&self) -> Option<(usize, &Elem)> {
        self.entries.first().map(|(i, v)| (*i, v))
    }

    pub fn max_index(&self) -> Option<usize> {
        self.entries.last().map(|(i, _)| *i)
    }

    pub fn get(&self, i: usize) -> Elem {
        match self.entries.binary_search_by_key(&i, |(j, _)| *j) {
            Ok(p) => self.entries[p].1.clone(),
            Err(_) => Elem::zero(),
        }
    }

    pub fn scale(&self, ring: &RingSpec, c: &Elem) -> Self {
        if c.is_zero() {
            return Self::new();
        }
        let entries = self
            .entries
            .iter()
            .map(|(i, v)| (*i, ring.mul(v, c)))
            .filter(|(_, v)| !v.is_zero())
            .collect();
        Self { entries }
    }

    pub fn neg(&self, ring: &RingSpec) -> Self {
        self.scale(ring, &ring.from_i64(-1))
    }

    /// `self + c * other`
    pub fn axpy(&self, ring: &RingSpec, c: &Elem, other: &SparseVec) -> Self {
        if c.is_zero() || other.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (0, 0);
        while a < self.entries.len() || b < other.entries.len() {
            let ia = self.entries.get(a).map(|e| e.0).unwrap_or(usize::MAX);
            let ib = other.entries.get(b).map(|e| e.0).unwrap_or(usize::MAX);
            if ia < ib {
                out.push(self.entries[a].clone());
                a += 1;
            } else if ib < ia {
                let v = ring.mul(c, &other.entries[b].1);
                if !v.is_zero() {
                    out.push((ib, v));
                }
                b += 1;
            } else {
                let v = ring.add(&self.entries[a].1, &ring.mul(c, &other.entries[b].1));
                if !v.is_zero() {
                    out.push((ia, v));
                }
                a += 1;
                b += 1;
            }
        }
        Self { entries: out }
    }

    pub fn add(&self, ring: &RingSpec, other: &SparseVec) -> Self {
        self.axpy(ring, &ring.one(), other)
    }

    pub fn sub(&self, ring: &RingSpec, other: &SparseVec) -> Self {
        self.axpy(ring, &ring.from_i64(-1), other)
    }

    pub fn dot(&self, ring: &RingSpec, other: &SparseVec) -> Elem {
        let mut acc = Elem::zero();
        let (mut a, mut b) = (0, 0);
        while a < self.entries.len() && b < other.entries.len() {
            let (ia, ib) = (self.entries[a].0, other.entries[b].0);
            if ia < ib {
                a += 1;
            } else if ib < ia {
                b += 1;
            } else {
                acc = ring.add(&acc, &ring.mul(&self.entries[a].1, &other.entries[b].1));
                a += 1;
                b += 1;
            }
        }
        acc
    }

    /// Re-indexes every entry; entries mapped to `None` are dropped.
    pub fn remap(&self, ring: &RingSpec, f: impl Fn(usize) -> Option<usize>) -> Self {
        Self::from_entries(
            ring,
            self.entries
                .iter()
                .filter_map(|(i, v)| f(*i).map(|j| (j, v.clone())))
                .collect(),
        )
    }

    /// Drops entries outside `0..dim`-style predicates.
    pub fn filter(&self, keep: impl Fn(usize) -> bool) -> Self {
        Self {
            entries: self
                .entries
                .iter()
                .filter(|(i, _)| keep(*i))
                .cloned()
                .collect(),
        }
    }

    /// Concatenation `(self, other)` with `other` shifted by `offset`.
    pub fn concat(&self, offset: usize, other: &SparseVec) -> Self {
        debug_assert!(self.max_index().is_none_or(|m| m < offset));
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().map(|(i, v)| (i + offset, v.clone())));
        Self { entries }
    }

    /// Splits at `offset`: `(indices < offset, indices >= offset shifted down)`.
    pub fn split_at(&self, offset: usize) -> (SparseVec, SparseVec) {
        let p = self.entries.partition_point(|(i, _)| *i < offset);
        let lo = Self {
            entries: self.entries[..p].to_vec(),
        };
        let hi = Self {
            entries: self.entries[p..]
                .iter()
                .map(|(i, v)| (i - offset, v.clone()))
                .collect(),
        };
        (lo, hi)
    }

    /// Canonicalizes each entry into `ring` (used after changing rings).
    pub fn coerce(&self, ring: &RingSpec) -> Self {
        Self::from_entries(
            ring,
            self.entries
                .iter()
                .map(|(i, v)| (*i, ring.coerce(v).expect("coefficient not in ring")))
                .collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn axpy_cancels_entries() {
        let q = RingSpec::Rationals;
        let a = SparseVec::from_entries(&q, vec![(0, q.one()), (3, q.from_i64(2))]);
        let b = SparseVec::from_entries(&q, vec![(3, q.one()), (5, q.one())]);
        let c = a.axpy(&q, &q.from_i64(-2), &b);
        assert_eq!(c.entries(), &[(0, q.one()), (5, q.from_i64(-2))]);
        assert_eq!(a.dot(&q, &b), q.from_i64(2));
    }

    #[test]
    fn from_entries_merges_duplicates() {
        let f2 = RingSpec::int_mod(2).unwrap();
        let v = SparseVec::from_entries(&f2, vec![(1, f2.one()), (1, f2.one()), (0, f2.one())]);
        assert_eq!(v.entries(), &[(0, f2.one())]);
    }
}
