use super::echelon::Echelon;
use super::invariants::{GradedModuleInvariants, Parity};
use super::ring::RingSpec;
use super::snf::quotient_invariants;
use super::sparse::SparseVec;
use crate::error::Result;

/// Span of homogeneous vectors, kept as one echelon form per parity so the
/// stored rows stay homogeneous. Inserting a mixed vector inserts its two
/// components, which is only meaningful for graded submodules.
#[derive(Clone, Debug)]
pub struct GradedEchelon {
    parity: Vec<Parity>,
    parts: [Echelon; 2],
}

impl GradedEchelon {
    pub fn new(ring: RingSpec, parity: Vec<Parity>) -> Result<Self> {
        let n = parity.len();
        Ok(Self {
            parity,
            parts: [Echelon::new(ring, n)?, Echelon::new(ring, n)?],
        })
    }

    pub fn ring(&self) -> &RingSpec {
        self.parts[0].ring()
    }

    pub fn dim(&self) -> usize {
        self.parity.len()
    }

    pub fn parities(&self) -> &[Parity] {
        &self.parity
    }

    pub fn split(&self, v: &SparseVec) -> [SparseVec; 2] {
        [
            v.filter(|i| !self.parity[i].is_odd()),
            v.filter(|i| self.parity[i].is_odd()),
        ]
    }

    /// True when the span grew.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        let [e, o] = self.split(v);
        let a = !e.is_zero() && self.parts[0].insert_vec(e);
        let b = !o.is_zero() && self.parts[1].insert_vec(o);
        a || b
    }

    pub fn part(&self, p: Parity) -> &Echelon {
        &self.parts[p.bit() as usize]
    }

    pub fn rank(&self) -> usize {
        self.parts[0].rank() + self.parts[1].rank()
    }

    pub fn rows(&self) -> impl Iterator<Item = &SparseVec> + '_ {
        self.parts[0].rows().chain(self.parts[1].rows())
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        let [e, o] = self.split(v);
        self.parts[0].contains(&e) && self.parts[1].contains(&o)
    }

    pub fn normal_form(&self, v: &SparseVec) -> SparseVec {
        let [e, o] = self.split(v);
        let ring = *self.ring();
        self.parts[0]
            .normal_form(&e)
            .add(&ring, &self.parts[1].normal_form(&o))
    }

    /// Invariants of the quotient of the ambient graded free module by the span.
    pub fn quotient_invariants(&self) -> Result<GradedModuleInvariants> {
        let ring = *self.ring();
        let mut out = GradedModuleInvariants::zero();
        for p in [Parity::EVEN, Parity::ODD] {
            let mut local = vec![None; self.dim()];
            let mut count = 0;
            for (i, q) in self.parity.iter().enumerate() {
                if *q == p {
                    local[i] = Some(count);
                    count += 1;
                }
            }
            let rels: Vec<SparseVec> = self
                .part(p)
                .rows()
                .map(|r| r.remap(&ring, |i| local[i]))
                .collect();
            let (free, torsion) = quotient_invariants(ring, count, &rels)?;
            out = out.direct_sum(&GradedModuleInvariants::component(p, free, torsion));
        }
        Ok(out)
    }

    pub fn same_span(&self, other: &GradedEchelon) -> bool {
        self.parts[0].same_span(&other.parts[0]) && self.parts[1].same_span(&other.parts[1])
    }
}
