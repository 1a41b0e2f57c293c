//! Finite-rank associative superdialgebras given by structure constants.
//!
//! A superdialgebra carries two associative products, written `left`
//! (`a ⊣ b`) and `right` (`a ⊢ b`), subject to three compatibility axioms:
//!
//! ```text
//! a ⊣ (b ⊣ c) = a ⊣ (b ⊢ c)
//! (a ⊢ b) ⊣ c = a ⊢ (b ⊣ c)
//! (a ⊣ b) ⊢ c = (a ⊢ b) ⊢ c
//! ```
//!
//! A bar-unit `e` satisfies `a ⊣ e = a = e ⊢ a`.

mod catalog;
mod constructors;
mod ideal;
mod io;

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactlin::{Echelon, GradedFreeModule, Parity, RingSpec, SparseVec};

pub use catalog::{builtin, builtin_names, default_catalog, CatalogEntry};
pub use constructors::{
    bar_duplex, from_algebra, from_bimodule_map, from_dga, matrix_dialgebra,
    matrix_dialgebra_graded, tensor_product, AssocSuperalgebra, Bimodule,
};
pub use ideal::{
    bracket_ideal, bracket_lemma_violations, bracket_span, ideal_closure, quotient_dm, right_bracket_span,
    BracketIdeal, QuotientDm,
};
pub use io::{from_json, load_file, to_json, DialgebraFile};

#[derive(Clone, Debug)]
pub struct SuperDialgebra {
    name: String,
    ring: RingSpec,
    module: GradedFreeModule,
    left: Vec<Vec<SparseVec>>,
    right: Vec<Vec<SparseVec>>,
    bar_unit: Option<SparseVec>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom {
    LeftAssociativity,
    RightAssociativity,
    /// a ⊣ (b ⊣ c) = a ⊣ (b ⊢ c)
    LeftAbsorbsRight,
    /// (a ⊢ b) ⊣ c = a ⊢ (b ⊣ c)
    MiddleAssociativity,
    /// (a ⊣ b) ⊢ c = (a ⊢ b) ⊢ c
    RightAbsorbsLeft,
    BarUnitLeft,
    BarUnitRight,
    BarUnitEven,
    LeftParity,
    RightParity,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Axiom::LeftAssociativity => "associativity of ⊣: (a⊣b)⊣c = a⊣(b⊣c)",
            Axiom::RightAssociativity => "associativity of ⊢: (a⊢b)⊢c = a⊢(b⊢c)",
            Axiom::LeftAbsorbsRight => "a⊣(b⊣c) = a⊣(b⊢c)",
            Axiom::MiddleAssociativity => "(a⊢b)⊣c = a⊢(b⊣c)",
            Axiom::RightAbsorbsLeft => "(a⊣b)⊢c = (a⊢b)⊢c",
            Axiom::BarUnitLeft => "bar-unit: a⊣e = a",
            Axiom::BarUnitRight => "bar-unit: e⊢a = a",
            Axiom::BarUnitEven => "bar-unit must be even",
            Axiom::LeftParity => "⊣ is not parity-additive",
            Axiom::RightParity => "⊢ is not parity-additive",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub axiom: Axiom,
    /// Basis indices involved.
    pub indices: Vec<usize>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails at basis indices {:?}", self.axiom, self.indices)
    }
}

impl SuperDialgebra {
    /// Assembles a superdialgebra from structure constants. Only the shapes
    /// are checked here; use [`validate`] for the axioms.
    pub fn new(
        name: impl Into<String>,
        ring: RingSpec,
        module: GradedFreeModule,
        left: Vec<Vec<SparseVec>>,
        right: Vec<Vec<SparseVec>>,
        bar_unit: Option<SparseVec>,
    ) -> Result<Self> {
        ring.validate()?;
        let n = module.rank();
        let shape_ok = |t: &Vec<Vec<SparseVec>>| {
            t.len() == n
                && t.iter().all(|row| {
                    row.len() == n
                        && row.iter().all(|v| v.max_index().is_none_or(|m| m < n))
                })
        };
        if !shape_ok(&left) || !shape_ok(&right) {
            return Err(Error::InvalidInput(format!(
                "structure constants do not match rank {n}"
            )));
        }
        if let Some(e) = &bar_unit {
            if e.max_index().is_some_and(|m| m >= n) {
                return Err(Error::InvalidInput("bar-unit has too many coordinates".into()));
            }
        }
        Ok(Self {
            name: name.into(),
            ring,
            module,
            left,
            right,
            bar_unit,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn module(&self) -> &GradedFreeModule {
        &self.module
    }

    pub fn dim(&self) -> usize {
        self.module.rank()
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.module.parity(i)
    }

    pub fn bar_unit(&self) -> Option<&SparseVec> {
        self.bar_unit.as_ref()
    }

    pub fn is_unital(&self) -> bool {
        self.bar_unit.is_some()
    }

    pub fn left_basis(&self, i: usize, j: usize) -> &SparseVec {
        &self.left[i][j]
    }

    pub fn right_basis(&self, i: usize, j: usize) -> &SparseVec {
        &self.right[i][j]
    }

    fn bilinear(&self, table: &[Vec<SparseVec>], a: &SparseVec, b: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (i, x) in a.entries() {
            for (j, y) in b.entries() {
                out = out.axpy(&self.ring, &self.ring.mul(x, y), &table[*i][*j]);
            }
        }
        out
    }

    /// `a ⊣ b`
    pub fn left_mul(&self, a: &SparseVec, b: &SparseVec) -> SparseVec {
        self.bilinear(&self.left, a, b)
    }

    /// `a ⊢ b`
    pub fn right_mul(&self, a: &SparseVec, b: &SparseVec) -> SparseVec {
        self.bilinear(&self.right, a, b)
    }

    /// `[e_i, e_j] = e_i ⊣ e_j - (-1)^{|i||j|} e_j ⊢ e_i`
    pub fn bracket_basis(&self, i: usize, j: usize) -> SparseVec {
        let sign = if self.parity(i).sign_with(self.parity(j)) {
            self.ring.one()
        } else {
            self.ring.from_i64(-1)
        };
        self.left[i][j].axpy(&self.ring, &sign, &self.right[j][i])
    }

    /// Bilinear extension of the basis bracket.
    pub fn bracket(&self, a: &SparseVec, b: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (i, x) in a.entries() {
            for (j, y) in b.entries() {
                out = out.axpy(&self.ring, &self.ring.mul(x, y), &self.bracket_basis(*i, *j));
            }
        }
        out
    }

    /// Parity of a nonzero homogeneous vector, `None` for zero, error if
    /// the support mixes parities.
    pub fn parity_of(&self, v: &SparseVec) -> Result<Option<Parity>> {
        let mut p = None;
        for (i, _) in v.entries() {
            let q = self.parity(*i);
            match p {
                None => p = Some(q),
                Some(p0) if p0 != q => {
                    return Err(Error::InvalidInput("element is not homogeneous".into()))
                }
                _ => {}
            }
        }
        Ok(p)
    }

    /// Index of the bar-unit when it is a basis vector.
    pub fn bar_unit_index(&self) -> Option<usize> {
        let e = self.bar_unit.as_ref()?;
        match e.entries() {
            [(i, v)] if *v == self.ring.one() => Some(*i),
            _ => None,
        }
    }

    /// Changes basis so that basis vector 0 is the bar-unit. Possible when
    /// some coordinate of the bar-unit is a unit of the ring.
    pub fn with_bar_unit_basis(&self) -> Result<SuperDialgebra> {
        if self.bar_unit_index() == Some(0) {
            return Ok(self.clone());
        }
        let e = self.bar_unit.as_ref().ok_or(Error::NoBarUnitBasis)?;
        let ring = self.ring;
        let k = e
            .entries()
            .iter()
            .find(|(i, v)| ring.is_unit(v) && self.parity(*i) == Parity::EVEN)
            .map(|(i, _)| *i)
            .ok_or(Error::NoBarUnitBasis)?;
        // new basis: e, then the old basis vectors except e_k
        let n = self.dim();
        let mut new_basis = vec![e.clone()];
        let mut old_order = Vec::new();
        for i in 0..n {
            if i != k {
                new_basis.push(SparseVec::unit(i, &ring));
                old_order.push(i);
            }
        }
        let mut ech = Echelon::new(ring, n)?;
        for (t, b) in new_basis.iter().enumerate() {
            ech.insert(b.clone(), SparseVec::unit(t, &ring));
        }
        let to_new = |v: &SparseVec| -> Result<SparseVec> {
            ech.coordinates(v)
                .ok_or_else(|| Error::Consistency("basis change is not invertible".into()))
        };
        let mut parity = vec![Parity::EVEN];
        parity.extend(old_order.iter().map(|&i| self.parity(i)));
        let labels = self.module.labels().map(|l| {
            let mut out = vec!["1".to_string()];
            out.extend(old_order.iter().map(|&i| l[i].clone()));
            out
        });
        let mut left = vec![vec![SparseVec::new(); n]; n];
        let mut right = vec![vec![SparseVec::new(); n]; n];
        for a in 0..n {
            for b in 0..n {
                left[a][b] = to_new(&self.left_mul(&new_basis[a], &new_basis[b]))?;
                right[a][b] = to_new(&self.right_mul(&new_basis[a], &new_basis[b]))?;
            }
        }
        let module = match labels {
            Some(l) => GradedFreeModule::with_labels(parity, l)?,
            None => GradedFreeModule::new(parity),
        };
        SuperDialgebra::new(
            self.name.clone(),
            ring,
            module,
            left,
            right,
            Some(SparseVec::unit(0, &ring)),
        )
    }

    /// Searches for a bar-unit by solving the linear conditions
    /// `e_i ⊣ x = e_i`, `x ⊢ e_i = e_i`. Returns an even solution if any.
    pub fn find_bar_unit(&self) -> Result<Option<SparseVec>> {
        let n = self.dim();
        let ring = self.ring;
        let mut ech = Echelon::new(ring, 2 * n * n)?;
        for k in 0..n {
            if self.parity(k).is_odd() {
                continue;
            }
            let mut col = Vec::new();
            for i in 0..n {
                for (r, v) in self.left[i][k].entries() {
                    col.push((i * n + r, v.clone()));
                }
                for (r, v) in self.right[k][i].entries() {
                    col.push((n * n + i * n + r, v.clone()));
                }
            }
            ech.insert(SparseVec::from_entries(&ring, col), SparseVec::unit(k, &ring));
        }
        let mut target = Vec::new();
        for i in 0..n {
            target.push((i * n + i, ring.one()));
            target.push((n * n + i * n + i, ring.one()));
        }
        Ok(ech.coordinates(&SparseVec::from_entries(&ring, target)))
    }

    pub fn with_bar_unit(mut self, e: Option<SparseVec>) -> Self {
        self.bar_unit = e;
        self
    }

    /// Checks every dialgebra axiom on all basis triples, the bar-unit laws
    /// on all basis vectors and parity additivity of both products.
    pub fn validate(&self) -> Vec<Violation> {
        validate(self)
    }
}

fn check_parity(d: &SuperDialgebra, table: &[Vec<SparseVec>], axiom: Axiom, out: &mut Vec<Violation>) {
    let n = d.dim();
    for i in 0..n {
        for j in 0..n {
            let p = d.parity(i) + d.parity(j);
            if table[i][j].entries().iter().any(|(k, _)| d.parity(*k) != p) {
                out.push(Violation {
                    axiom,
                    indices: vec![i, j],
                });
            }
        }
    }
}

/// Violated axioms; empty means valid.
pub fn validate(d: &SuperDialgebra) -> Vec<Violation> {
    let n = d.dim();
    let ring = d.ring;
    let mut out = Vec::new();
    check_parity(d, &d.left, Axiom::LeftParity, &mut out);
    check_parity(d, &d.right, Axiom::RightParity, &mut out);
    for a in 0..n {
        let ea = SparseVec::unit(a, &ring);
        for b in 0..n {
            let ab_l = &d.left[a][b];
            let ab_r = &d.right[a][b];
            for c in 0..n {
                let ec = SparseVec::unit(c, &ring);
                let bc_l = &d.left[b][c];
                let bc_r = &d.right[b][c];
                let idx = || vec![a, b, c];
                let l_l = d.left_mul(&ea, bc_l);
                if d.left_mul(ab_l, &ec) != l_l {
                    out.push(Violation { axiom: Axiom::LeftAssociativity, indices: idx() });
                }
                let r_r = d.right_mul(&ea, bc_r);
                if d.right_mul(ab_r, &ec) != r_r {
                    out.push(Violation { axiom: Axiom::RightAssociativity, indices: idx() });
                }
                if l_l != d.left_mul(&ea, bc_r) {
                    out.push(Violation { axiom: Axiom::LeftAbsorbsRight, indices: idx() });
                }
                if d.left_mul(ab_r, &ec) != d.right_mul(&ea, bc_l) {
                    out.push(Violation { axiom: Axiom::MiddleAssociativity, indices: idx() });
                }
                if d.right_mul(ab_l, &ec) != d.right_mul(ab_r, &ec) {
                    out.push(Violation { axiom: Axiom::RightAbsorbsLeft, indices: idx() });
                }
            }
        }
    }
    if let Some(e) = &d.bar_unit {
        if e.entries().iter().any(|(i, _)| d.parity(*i).is_odd()) {
            out.push(Violation { axiom: Axiom::BarUnitEven, indices: vec![] });
        }
        for a in 0..n {
            let ea = SparseVec::unit(a, &ring);
            if d.left_mul(&ea, e) != ea {
                out.push(Violation { axiom: Axiom::BarUnitLeft, indices: vec![a] });
            }
            if d.right_mul(e, &ea) != ea {
                out.push(Violation { axiom: Axiom::BarUnitRight, indices: vec![a] });
            }
        }
    }
    out
}
