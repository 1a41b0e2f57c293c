//! Hochschild complex of a superdialgebra in low degrees,
//!
//! ```text
//! d_n(a_0 ⊗ … ⊗ a_n) = Σ_{i<n} (-1)^i a_0 ⊗ … ⊗ a_i ⊣ a_{i+1} ⊗ … ⊗ a_n
//!                    + (-1)^{n + |a_n|(|a_0|+…+|a_{n-1}|)} a_n ⊢ a_0 ⊗ … ⊗ a_{n-1}
//! ```
//!
//! `HHS₁(D) = Ker d₁ / (Im d₂ + I)` with `I` spanned by `a ⊗ (b⊣c) - a ⊗ (b⊢c)`,
//! and the maps `μ`, `Str₂` comparing it with `HL₂(sl(m,n,D))`.

use serde::Serialize;

use crate::chain::{tensor_index, tensor_rank, tensor_tuple};
use crate::error::{Error, Result};
use crate::exactlin::{
    kernel_basis, subquotient_invariants, Echelon, GradedFreeModule, GradedModuleInvariants,
    Parity, SparseMat, SparseVec,
};
use crate::leibniz::{sl, supertrace, SpecialLinear};
use crate::superdialg::SuperDialgebra;
use crate::tensorsq::{off_diagonal, tensor2, tensor_square, w_cycles, TensorSquare};

#[derive(Clone, Debug)]
pub struct HochschildMap {
    pub n: usize,
    pub source: GradedFreeModule,
    pub target: GradedFreeModule,
    pub matrix: SparseMat,
}

fn tensor_module(d: &SuperDialgebra, n: usize, size: usize) -> GradedFreeModule {
    GradedFreeModule::new(
        (0..size)
            .map(|x| tensor_tuple(d.dim(), n, x).iter().map(|&a| d.parity(a)).sum())
            .collect(),
    )
}

fn require_bar_unit_basis(d: &SuperDialgebra) -> Result<()> {
    d.bar_unit_index().map(|_| ()).ok_or(Error::NoBarUnitBasis)
}

/// `d_n` on one basis tensor `a_0 ⊗ … ⊗ a_n`.
pub fn d_basis(d: &SuperDialgebra, tuple: &[usize]) -> SparseVec {
    let ring = *d.ring();
    let dim = d.dim();
    let n = tuple.len() - 1;
    let mut out = SparseVec::new();
    for i in 0..n {
        let prod = d.left_basis(tuple[i], tuple[i + 1]);
        let mut rest: Vec<usize> = tuple[..i + 1].to_vec();
        rest.extend_from_slice(&tuple[i + 2..]);
        let sign = ring.from_i64(if i % 2 == 0 { 1 } else { -1 });
        for (z, c) in prod.entries() {
            rest[i] = *z;
            out = out.axpy(&ring, &ring.mul(&sign, c), &SparseVec::unit(tensor_index(dim, &rest), &ring));
        }
    }
    let before: Parity = tuple[..n].iter().map(|&a| d.parity(a)).sum();
    let neg = (n % 2 == 1) ^ d.parity(tuple[n]).sign_with(before);
    let prod = d.right_basis(tuple[n], tuple[0]);
    let mut rest: Vec<usize> = tuple[..n].to_vec();
    for (z, c) in prod.entries() {
        rest[0] = *z;
        let c = if neg { ring.neg(c) } else { c.clone() };
        out = out.axpy(&ring, &c, &SparseVec::unit(tensor_index(dim, &rest), &ring));
    }
    out
}

/// Matrix of `d_n : D^⊗(n+1) → D^⊗n`.
pub fn d(dlg: &SuperDialgebra, n: usize, guard: u128) -> Result<HochschildMap> {
    require_bar_unit_basis(dlg)?;
    if n == 0 {
        return Err(Error::InvalidInput("d_n needs n >= 1".into()));
    }
    let size = tensor_rank(dlg.dim(), n + 1, guard)?;
    let target = tensor_rank(dlg.dim(), n, guard)?;
    let cols = (0..size)
        .map(|x| d_basis(dlg, &tensor_tuple(dlg.dim(), n + 1, x)))
        .collect();
    Ok(HochschildMap {
        n,
        source: tensor_module(dlg, n + 1, size),
        target: tensor_module(dlg, n, target),
        matrix: SparseMat::from_columns(*dlg.ring(), target, cols),
    })
}

/// Generators `a ⊗ (b⊣c) - a ⊗ (b⊢c)` of `I` over basis triples.
pub fn ideal_generators(dlg: &SuperDialgebra) -> Vec<SparseVec> {
    let ring = *dlg.ring();
    let n = dlg.dim();
    let mut out = Vec::new();
    for a in 0..n {
        let ea = SparseVec::unit(a, &ring);
        for b in 0..n {
            for c in 0..n {
                let diff = dlg.left_basis(b, c).sub(&ring, dlg.right_basis(b, c));
                if !diff.is_zero() {
                    out.push(tensor2(&ring, n, &ea, &diff));
                }
            }
        }
    }
    out
}

/// The degree-one data of the complex: `Ker d₁` and `Im d₂ + I`.
#[derive(Clone, Debug)]
pub struct DegreeOne {
    pub d1: HochschildMap,
    pub d2: HochschildMap,
    pub kernel: SparseMat,
    /// `Im d₂ + I` in echelon form.
    pub boundaries: Echelon,
    pub ideal: Vec<SparseVec>,
}

pub fn degree_one(dlg: &SuperDialgebra, guard: u128) -> Result<DegreeOne> {
    let d1 = d(dlg, 1, guard)?;
    let d2 = d(dlg, 2, guard)?;
    let kernel = kernel_basis(&d1.matrix)?;
    let ideal = ideal_generators(dlg);
    let boundaries = Echelon::from_vectors(
        *dlg.ring(),
        d1.source.rank(),
        d2.matrix.columns().iter().chain(ideal.iter()),
    )?;
    Ok(DegreeOne {
        d1,
        d2,
        kernel,
        boundaries,
        ideal,
    })
}

impl DegreeOne {
    pub fn hhs1(&self) -> Result<GradedModuleInvariants> {
        let rel: Vec<SparseVec> = self.boundaries.rows().cloned().collect();
        let im = SparseMat::from_columns(*self.boundaries.ring(), self.d1.source.rank(), rel);
        subquotient_invariants(&self.kernel, &im, self.d1.source.parities())
    }
}

/// `HHS₁(D) = Ker d₁ / (Im d₂ + I)`
pub fn hhs1(dlg: &SuperDialgebra, guard: u128) -> Result<GradedModuleInvariants> {
    degree_one(dlg, guard)?.hhs1()
}

/// Outcome of comparing `HHS₁(D) ⊕ W(m,n,D)` with `HL₂(sl(m,n,D))`.
#[derive(Clone, Debug, Serialize)]
pub struct SplittingReport {
    pub m: usize,
    pub n: usize,
    pub hhs1: GradedModuleInvariants,
    pub w: GradedModuleInvariants,
    pub hl2: GradedModuleInvariants,
    /// Rows `(r, s)` (1-based) used by `μ`.
    pub mu_rows: (usize, usize),
    pub d_squared_zero: bool,
    /// `Str₁ ∘ δ₂ ∘ μ = d₁` on `D ⊗ D`.
    pub mu_commutes: bool,
    /// `μ` kills `Im d₂ + I`.
    pub mu_well_defined: bool,
    /// `Str₂` sends `Im δ₃` into `Im d₂ + I`.
    pub str2_well_defined: bool,
    /// `d₁ ∘ Str₂ = Str₁ ∘ δ₂` on the tensor square.
    pub diagram_commutes: bool,
    /// `Str₂ ∘ μ = id` modulo `Im d₂ + I`.
    pub retraction: bool,
    /// `k - μ(Str₂(k))` lies in the span of the W-classes for every `k` in `Ker δ₂`.
    pub kernel_decomposes: bool,
    /// The W-classes satisfy their relations and factor through the `D_m`.
    pub w_well_defined: bool,
    /// `μ(Ker d₁)` and the W-classes generate `HL₂`.
    pub surjective: bool,
    pub invariants_match: bool,
    /// Surjective parity-preserving map between isomorphic finitely
    /// generated modules, hence an isomorphism.
    pub iso: bool,
}

/// `Str₂(x ⊗ y)` for `x, y` in `gl` coordinates: the `D ⊗ D` component
/// `Σ (-1)^{|i|(1+|a|+|b|)} a ⊗ b` over pairs `x_ij = a`, `y_ji = b`.
pub fn str2_gl(s: &SpecialLinear, x: &SparseVec, y: &SparseVec) -> SparseVec {
    let ring = *s.gl.ring();
    let d = &s.dialgebra;
    let dd = d.dim();
    let mut out = Vec::new();
    for (p, c) in x.entries() {
        let ep = s.layout.decode(*p);
        for (q, e) in y.entries() {
            let eq = s.layout.decode(*q);
            if ep.j != eq.i || ep.i != eq.j {
                continue;
            }
            let odd = s.layout.row_parity(ep.i).is_odd()
                && (Parity::ODD + d.parity(ep.b) + d.parity(eq.b)).is_odd();
            let v = ring.mul(c, e);
            out.push((ep.b * dd + eq.b, if odd { ring.neg(&v) } else { v }));
        }
    }
    SparseVec::from_entries(&ring, out)
}

struct Splitter<'a> {
    s: &'a SpecialLinear,
    ts: &'a TensorSquare,
    r: usize,
    t: usize,
}

impl Splitter<'_> {
    /// `Str₂` of a tensor in `sl ⊗ sl`.
    fn str2_tensor(&self, t: &SparseVec) -> SparseVec {
        let ring = *self.ts.ring();
        let dim = self.s.dim();
        let mut out = SparseVec::new();
        for (idx, c) in t.entries() {
            let (x, y) = (idx / dim, idx % dim);
            let v = str2_gl(self.s, self.s.inclusion.column(x), self.s.inclusion.column(y));
            out = out.axpy(&ring, c, &v);
        }
        out
    }

    /// `Str₂` of a carrier element, through the generator lifts.
    fn str2(&self, v: &SparseVec) -> SparseVec {
        let ring = *self.ts.ring();
        let mut out = SparseVec::new();
        for (g, c) in v.entries() {
            out = out.axpy(&ring, c, &self.str2_tensor(&self.ts.generator_tensor(*g)));
        }
        out
    }

    /// `μ(a ⊗ b) = ε (E_rt(a) ⊗ E_tr(b) - (-1)^{|a||b|} E_rt(b⊢a) ⊗ E_tr(1))`
    /// with `ε = (-1)^{|r|(1+|a|+|b|)}`.
    fn mu_basis(&self, a: usize, b: usize) -> Result<SparseVec> {
        let ring = *self.ts.ring();
        let d = &self.s.dialgebra;
        let one = d.bar_unit().ok_or(Error::NoBarUnitBasis)?;
        let (ea, eb) = (SparseVec::unit(a, &ring), SparseVec::unit(b, &ring));
        let first = self.ts.tensor(
            &off_diagonal(self.s, self.r, self.t, &ea)?,
            &off_diagonal(self.s, self.t, self.r, &eb)?,
        );
        let second = self.ts.tensor(
            &off_diagonal(self.s, self.r, self.t, d.right_basis(b, a))?,
            &off_diagonal(self.s, self.t, self.r, one)?,
        );
        let mut v = if d.parity(a).sign_with(d.parity(b)) {
            first.add(&ring, &second)
        } else {
            first.sub(&ring, &second)
        };
        let pr = self.s.layout.row_parity(self.r);
        if pr.is_odd() && (Parity::ODD + d.parity(a) + d.parity(b)).is_odd() {
            v = v.neg(&ring);
        }
        Ok(self.ts.project(&v))
    }

    fn mu(&self, t: &SparseVec, table: &[SparseVec]) -> SparseVec {
        let ring = *self.ts.ring();
        let mut out = SparseVec::new();
        for (x, c) in t.entries() {
            out = out.axpy(&ring, c, &table[*x]);
        }
        out
    }

    /// `Str₁ ∘ δ₂` of a carrier element.
    fn str1_delta(&self, v: &SparseVec) -> SparseVec {
        let x = self.s.to_gl(&self.ts.delta2().mul_vec(v));
        supertrace(&self.s.layout, &self.s.dialgebra, &x)
    }
}

/// Rows `(r, t)` of equal parity used by `μ`.
fn mu_rows(m: usize, n: usize) -> Result<(usize, usize)> {
    if m >= 2 || (m == 0 && n >= 2) {
        Ok((0, 1))
    } else if m == 1 && n >= 2 {
        Ok((1, 2))
    } else {
        Err(Error::UnsupportedCase {
            m,
            n,
            reason: "μ needs two rows of equal parity".into(),
        })
    }
}

/// Builds `μ` and `Str₂` for `sl(m,n,D)` and checks that they induce a
/// graded isomorphism `HHS₁(D) ⊕ W(m,n,D) → HL₂(sl(m,n,D))`.
pub fn splitting_check(m: usize, n: usize, dlg: &SuperDialgebra, guard: u128) -> Result<SplittingReport> {
    let w = crate::theorems::expected_w(m, n, dlg)?;
    let one = degree_one(dlg, guard)?;
    let s = sl(m, n, dlg)?;
    let ts = tensor_square(&s.algebra, guard)?;
    splitting_check_with(&s, &ts, &one, w)
}

/// `splitting_check` on prebuilt `sl`, tensor square and degree-one data.
pub fn splitting_check_with(
    s: &SpecialLinear,
    ts: &TensorSquare,
    one: &DegreeOne,
    w: GradedModuleInvariants,
) -> Result<SplittingReport> {
    let (m, n) = (s.layout.m, s.layout.n);
    let ring = *ts.ring();
    let dlg = &s.dialgebra;
    let dd = dlg.dim();
    let (r, t) = mu_rows(m, n)?;
    let sp = Splitter { s, ts, r, t };
    let zero = SparseVec::new();

    let d_squared_zero = one.d1.matrix.compose(&one.d2.matrix)?.is_zero();
    let mu_table: Vec<SparseVec> = (0..dd * dd)
        .map(|x| sp.mu_basis(x / dd, x % dd))
        .collect::<Result<_>>()?;
    let mut mu_commutes = true;
    let mut retraction = true;
    for (x, mx) in mu_table.iter().enumerate() {
        if sp.str1_delta(mx) != *one.d1.matrix.column(x) {
            mu_commutes = false;
        }
        let back = sp.str2(mx).sub(&ring, &SparseVec::unit(x, &ring));
        if !one.boundaries.contains(&back) {
            retraction = false;
        }
    }
    let mut mu_well_defined = true;
    for b in one.boundaries.rows() {
        if !ts.carrier_equal(&sp.mu(b, &mu_table), &zero)? {
            mu_well_defined = false;
        }
    }
    let str2_well_defined = ts
        .boundary_rows()
        .all(|row| one.boundaries.contains(&sp.str2_tensor(row)));
    let mut diagram_commutes = true;
    for g in 0..ts.rank() {
        let e = SparseVec::unit(g, &ring);
        if one.d1.matrix.mul_vec(&sp.str2(&e)) != sp.str1_delta(&e) {
            diagram_commutes = false;
        }
    }

    let w_classes = match w_cycles(s, ts) {
        Ok(wc) => Some(wc),
        Err(Error::UnsupportedCase { .. }) => None,
        Err(e) => return Err(e),
    };
    let w_well_defined = w_classes
        .as_ref()
        .is_none_or(|wc| wc.cycles && wc.quotient_respected && wc.relation_failures.is_empty());
    let mut w_span = Echelon::from_vectors(ring, ts.rank(), ts.relations().iter())?;
    if let Some(wc) = &w_classes {
        for c in &wc.classes {
            w_span.insert_vec(c.class.clone());
        }
    }
    let kernel = ts.kernel()?;
    let mut kernel_decomposes = true;
    for k in kernel.columns() {
        let rest = k.sub(&ring, &sp.mu(&sp.str2(k), &mu_table));
        if !w_span.contains(&rest) {
            kernel_decomposes = false;
        }
    }
    let mut image = w_span.clone();
    for k in one.kernel.columns() {
        image.insert_vec(sp.mu(k, &mu_table));
    }
    let surjective = kernel.columns().iter().all(|k| image.contains(k));

    let hhs1 = one.hhs1()?;
    let hl2 = ts.hl2()?;
    let source = hhs1.direct_sum(&w);
    let invariants_match = source == hl2;
    let iso = d_squared_zero
        && mu_commutes
        && mu_well_defined
        && str2_well_defined
        && diagram_commutes
        && retraction
        && kernel_decomposes
        && w_well_defined
        && surjective
        && invariants_match;
    Ok(SplittingReport {
        m,
        n,
        hhs1,
        w,
        hl2,
        mu_rows: (r + 1, t + 1),
        d_squared_zero,
        mu_commutes,
        mu_well_defined,
        str2_well_defined,
        diagram_commutes,
        retraction,
        kernel_decomposes,
        w_well_defined,
        surjective,
        invariants_match,
        iso,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::DEFAULT_GUARD;
    use crate::leibniz::LeibnizSuperalgebra;
    use crate::superdialg::{builtin, builtin_names};

    #[test]
    fn d1_is_the_bracket() {
        for name in ["grassmann_q", "mat2_q", "bar_duplex_q"] {
            let dlg = builtin(name).unwrap();
            let l = LeibnizSuperalgebra::from_dialgebra(&dlg);
            let d1 = d(&dlg, 1, DEFAULT_GUARD).unwrap();
            for x in 0..dlg.dim() {
                for y in 0..dlg.dim() {
                    assert_eq!(d1.matrix.column(x * dlg.dim() + y), l.bracket_basis(x, y), "{name}");
                }
            }
        }
    }

    #[test]
    fn d2_on_rationals() {
        let q = builtin("rationals").unwrap();
        let d2 = d(&q, 2, DEFAULT_GUARD).unwrap();
        assert_eq!(d2.matrix.column(0), &SparseVec::unit(0, q.ring()));
    }

    #[test]
    fn d_squares_to_zero() {
        for name in builtin_names() {
            let dlg = builtin(name).unwrap();
            if dlg.bar_unit_index().is_none() {
                assert!(matches!(d(&dlg, 1, DEFAULT_GUARD), Err(Error::NoBarUnitBasis)));
                continue;
            }
            let d1 = d(&dlg, 1, DEFAULT_GUARD).unwrap();
            let d2 = d(&dlg, 2, DEFAULT_GUARD).unwrap();
            assert!(d1.matrix.compose(&d2.matrix).unwrap().is_zero(), "{name}");
        }
    }

    #[test]
    fn hhs1_small() {
        for name in ["rationals", "f2", "integers", "bar_duplex_q"] {
            assert!(hhs1(&builtin(name).unwrap(), DEFAULT_GUARD).unwrap().is_zero(), "{name}");
        }
    }

    #[test]
    fn ideal_vanishes_for_algebras() {
        for name in ["rationals", "dual_numbers_q", "grassmann_q", "mat2_q"] {
            assert!(ideal_generators(&builtin(name).unwrap()).is_empty(), "{name}");
        }
        assert!(!ideal_generators(&builtin("bar_duplex_q").unwrap()).is_empty());
    }

    #[test]
    fn splitting_small_cases() {
        for (m, n, name) in [(2, 2, "rationals"), (3, 0, "rationals"), (3, 0, "f3"), (2, 1, "rationals")] {
            let rep = splitting_check(m, n, &builtin(name).unwrap(), DEFAULT_GUARD).unwrap();
            assert!(rep.iso, "({m},{n},{name}): {rep:?}");
        }
    }
}
