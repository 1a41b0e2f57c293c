//! Incremental row echelon forms over `Z`, `Q` and `Z/p`.
//!
//! Over a field this is ordinary Gaussian elimination with pivots scaled
//! to one. Over the integers it is a Hermite-style form: insertion uses
//! unimodular 2x2 row transforms (extended gcd) whenever a pivot does not
//! divide the incoming entry, so the stored rows always generate the same
//! lattice as everything inserted so far. Every row can carry an
//! augmentation vector that records it as a combination of the inserted
//! vectors; this is how kernels and coordinates are obtained.

use std::collections::BTreeMap;

use num_traits::Zero;

use super::ring::{Elem, RingSpec};
use super::sparse::SparseVec;
use crate::error::Result;

#[derive(Clone, Debug)]
struct Row {
    vec: SparseVec,
    aug: SparseVec,
}

#[derive(Clone, Debug)]
pub struct Echelon {
    ring: RingSpec,
    dim: usize,
    pivots: BTreeMap<usize, Row>,
}

/// Outcome of inserting one vector.
#[derive(Clone, Debug)]
pub struct Inserted {
    /// The generated submodule grew.
    pub changed: bool,
    /// Augmentation of a combination that reduced to zero, i.e. a relation
    /// among the inserted vectors. Present only when the inserted vector
    /// itself (after all row transforms) ended up in the zero row space.
    pub relation: Option<SparseVec>,
}

impl Echelon {
    pub fn new(ring: RingSpec, dim: usize) -> Result<Self> {
        ring.ensure_supported()?;
        Ok(Self {
            ring,
            dim,
            pivots: BTreeMap::new(),
        })
    }

    /// Echelon form of the span of `vectors`.
    pub fn from_vectors<'a>(
        ring: RingSpec,
        dim: usize,
        vectors: impl IntoIterator<Item = &'a SparseVec>,
    ) -> Result<Self> {
        let mut e = Self::new(ring, dim)?;
        for v in vectors {
            e.insert_vec(v.clone());
        }
        Ok(e)
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivot_cols(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivots.keys().copied()
    }

    pub fn pivot_value(&self, col: usize) -> Option<Elem> {
        self.pivots.get(&col).map(|r| r.vec.get(col))
    }

    /// Rows in increasing pivot order.
    pub fn rows(&self) -> impl Iterator<Item = &SparseVec> + '_ {
        self.pivots.values().map(|r| &r.vec)
    }

    /// Rows with their augmentations, in increasing pivot order.
    pub fn rows_with_aug(&self) -> impl Iterator<Item = (&SparseVec, &SparseVec)> + '_ {
        self.pivots.values().map(|r| (&r.vec, &r.aug))
    }

    /// True when the span is the whole free module of rank `dim`.
    pub fn is_full(&self) -> bool {
        self.rank() == self.dim
            && self
                .pivots
                .iter()
                .all(|(c, r)| self.ring.is_unit(&r.vec.get(*c)))
    }

    pub fn insert_vec(&mut self, v: SparseVec) -> bool {
        self.insert(v, SparseVec::new()).changed
    }

    pub fn insert(&mut self, mut v: SparseVec, mut aug: SparseVec) -> Inserted {
        let ring = self.ring;
        let mut changed = false;
        loop {
            let Some((c, a)) = v.lead().map(|(c, a)| (c, a.clone())) else {
                return Inserted {
                    changed,
                    relation: Some(aug),
                };
            };
            match self.pivots.get_mut(&c) {
                None => {
                    let (u, _) = ring.normalize(&a);
                    let row = Row {
                        vec: v.scale(&ring, &u),
                        aug: aug.scale(&ring, &u),
                    };
                    self.pivots.insert(c, row);
                    return Inserted {
                        changed: true,
                        relation: None,
                    };
                }
                Some(prow) => {
                    let p = prow.vec.get(c);
                    if let Some(q) = ring.divide(&a, &p) {
                        let mq = ring.neg(&q);
                        v = v.axpy(&ring, &mq, &prow.vec);
                        aug = aug.axpy(&ring, &mq, &prow.aug);
                    } else {
                        // integers only: replace the pivot by the gcd combination
                        let (g, s, t) = ring.gcdext(&p, &a);
                        let a_g = ring.divide(&a, &g).unwrap();
                        let p_g = ring.divide(&p, &g).unwrap();
                        let new_vec = prow.vec.scale(&ring, &s).axpy(&ring, &t, &v);
                        let new_aug = prow.aug.scale(&ring, &s).axpy(&ring, &t, &aug);
                        let other_vec = prow.vec.scale(&ring, &a_g).axpy(&ring, &ring.neg(&p_g), &v);
                        let other_aug = prow.aug.scale(&ring, &a_g).axpy(&ring, &ring.neg(&p_g), &aug);
                        prow.vec = new_vec;
                        prow.aug = new_aug;
                        debug_assert!(other_vec.get(c).is_zero());
                        v = other_vec;
                        aug = other_aug;
                        changed = true;
                    }
                }
            }
        }
    }

    /// Canonical representative of `v` modulo the span: at every pivot
    /// column the entry lies in `[0, pivot)` (zero over fields).
    pub fn normal_form(&self, v: &SparseVec) -> SparseVec {
        self.reduce_tracking(v).0
    }

    /// Reduces `v` and returns `(remainder, quotients)` where the quotients
    /// are indexed by pivot column: `v = remainder + sum q_c row_c`.
    fn reduce_tracking(&self, v: &SparseVec) -> (SparseVec, Vec<(usize, Elem)>) {
        let ring = self.ring;
        let mut v = v.clone();
        let mut qs = Vec::new();
        for (c, row) in &self.pivots {
            let a = v.get(*c);
            if a.is_zero() {
                continue;
            }
            let q = ring.quotient(&a, &row.vec.get(*c));
            if !q.is_zero() {
                v = v.axpy(&ring, &ring.neg(&q), &row.vec);
                qs.push((*c, q));
            }
        }
        (v, qs)
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.normal_form(v).is_zero()
    }

    /// Expresses `v` through the augmentations of the stored rows, i.e. as
    /// a combination of the inserted vectors. `None` if `v` is not in the
    /// span.
    pub fn coordinates(&self, v: &SparseVec) -> Option<SparseVec> {
        let (rem, qs) = self.reduce_tracking(v);
        if !rem.is_zero() {
            return None;
        }
        let mut out = SparseVec::new();
        for (c, q) in qs {
            out = out.axpy(&self.ring, &q, &self.pivots[&c].aug);
        }
        Some(out)
    }

    /// Coordinates of `v` with respect to the stored rows themselves
    /// (indexed by row position in pivot order).
    pub fn row_coordinates(&self, v: &SparseVec) -> Option<SparseVec> {
        let (rem, qs) = self.reduce_tracking(v);
        if !rem.is_zero() {
            return None;
        }
        let pos: BTreeMap<usize, usize> = self
            .pivots
            .keys()
            .enumerate()
            .map(|(i, c)| (*c, i))
            .collect();
        Some(SparseVec::from_entries(
            &self.ring,
            qs.into_iter().map(|(c, q)| (pos[&c], q)).collect(),
        ))
    }

    /// Reduces every row against the later pivots, giving the reduced row
    /// echelon form over fields and the reduced Hermite form over `Z`.
    pub fn fully_reduce(&mut self) {
        let ring = self.ring;
        let cols: Vec<usize> = self.pivots.keys().rev().copied().collect();
        for &c in &cols {
            let mut row = self.pivots.remove(&c).unwrap();
            for (c2, prow) in self.pivots.range(c + 1..) {
                let a = row.vec.get(*c2);
                if a.is_zero() {
                    continue;
                }
                let q = ring.quotient(&a, &prow.vec.get(*c2));
                if !q.is_zero() {
                    let mq = ring.neg(&q);
                    row.vec = row.vec.axpy(&ring, &mq, &prow.vec);
                    row.aug = row.aug.axpy(&ring, &mq, &prow.aug);
                }
            }
            self.pivots.insert(c, row);
        }
    }

    /// Same submodule (compares reduced forms).
    pub fn same_span(&self, other: &Echelon) -> bool {
        self.rank() == other.rank()
            && self.rows().all(|r| other.contains(r))
            && other.rows().all(|r| self.contains(r))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(ring: &RingSpec, xs: &[i64]) -> SparseVec {
        SparseVec::from_dense(ring, &xs.iter().map(|x| ring.from_i64(*x)).collect::<Vec<_>>())
    }

    #[test]
    fn integer_lattice_gcd_pivot() {
        let z = RingSpec::Integers;
        let mut e = Echelon::new(z, 2).unwrap();
        e.insert_vec(v(&z, &[4, 1]));
        e.insert_vec(v(&z, &[6, 0]));
        // lattice spanned by (4,1), (6,0) has determinant 6
        assert_eq!(e.rank(), 2);
        let prod: Elem = e.pivot_cols().map(|c| e.pivot_value(c).unwrap()).product();
        assert_eq!(prod, z.from_i64(6));
        assert!(e.contains(&v(&z, &[2, 2])));
        assert!(!e.contains(&v(&z, &[2, 0])));
    }

    #[test]
    fn normal_form_is_canonical_over_z() {
        let z = RingSpec::Integers;
        let e = Echelon::from_vectors(z, 2, [&v(&z, &[2, 0]), &v(&z, &[0, 3])]).unwrap();
        assert_eq!(e.normal_form(&v(&z, &[5, -1])), v(&z, &[1, 2]));
        assert_eq!(e.normal_form(&v(&z, &[7, 5])), v(&z, &[1, 2]));
    }

    #[test]
    fn coordinates_recover_combination() {
        let q = RingSpec::Rationals;
        let mut e = Echelon::new(q, 3).unwrap();
        let a = v(&q, &[1, 2, 0]);
        let b = v(&q, &[0, 1, 1]);
        e.insert(a.clone(), SparseVec::unit(0, &q));
        e.insert(b.clone(), SparseVec::unit(1, &q));
        let target = a.scale(&q, &q.from_i64(3)).axpy(&q, &q.from_i64(-2), &b);
        let c = e.coordinates(&target).unwrap();
        assert_eq!(c, v(&q, &[3, -2]));
        assert!(e.coordinates(&v(&q, &[0, 0, 1])).is_none());
    }

    #[test]
    fn relations_come_back_as_augmentations() {
        let z = RingSpec::Integers;
        let mut e = Echelon::new(z, 1).unwrap();
        assert!(e.insert(v(&z, &[2]), SparseVec::unit(0, &z)).relation.is_none());
        let r = e.insert(v(&z, &[-2]), SparseVec::unit(1, &z)).relation.unwrap();
        assert_eq!(r, v(&z, &[1, 1]));
    }
}
