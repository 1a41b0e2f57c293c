//! Leibniz superalgebras, and the matrix superalgebras `gl(m,n,D)` and
//! `sl(m,n,D)` over a superdialgebra.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exactlin::{
    kernel_basis, Echelon, GradedFreeModule, Parity, RingSpec, SparseMat, SparseVec,
};
use crate::superdialg::{bracket_span, matrix_dialgebra_graded, SuperDialgebra};

/// Weight of a basis vector under the diagonal torus; brackets add weights.
pub type Weight = Vec<i32>;

#[derive(Clone, Debug)]
pub struct LeibnizSuperalgebra {
    name: String,
    ring: RingSpec,
    module: GradedFreeModule,
    bracket: Vec<Vec<SparseVec>>,
    weights: Option<Vec<Weight>>,
}

impl LeibnizSuperalgebra {
    pub fn new(
        name: impl Into<String>,
        ring: RingSpec,
        module: GradedFreeModule,
        bracket: Vec<Vec<SparseVec>>,
    ) -> Result<Self> {
        let n = module.rank();
        if bracket.len() != n || bracket.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidInput(format!("bracket table must be {n}x{n}")));
        }
        for (i, row) in bracket.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                let p = module.parity(i) + module.parity(j);
                if v.entries().iter().any(|(k, _)| *k >= n || module.parity(*k) != p) {
                    return Err(Error::InvalidInput(format!(
                        "bracket of e{i} and e{j} is not parity-additive"
                    )));
                }
            }
        }
        Ok(Self {
            name: name.into(),
            ring,
            module,
            bracket,
            weights: None,
        })
    }

    /// Abelian algebra on a graded free module.
    pub fn abelian(ring: RingSpec, parity: Vec<Parity>) -> Self {
        let n = parity.len();
        Self {
            name: "abelian".into(),
            ring,
            module: GradedFreeModule::new(parity),
            bracket: vec![vec![SparseVec::new(); n]; n],
            weights: None,
        }
    }

    /// `[a, b] = a ⊣ b - (-1)^{|a||b|} b ⊢ a`
    pub fn from_dialgebra(d: &SuperDialgebra) -> Self {
        let n = d.dim();
        let bracket = (0..n)
            .map(|i| (0..n).map(|j| d.bracket_basis(i, j)).collect())
            .collect();
        Self {
            name: d.name().to_string(),
            ring: *d.ring(),
            module: d.module().clone(),
            bracket,
            weights: None,
        }
    }

    /// Attaches torus weights, checking that brackets add them.
    pub fn with_weights(mut self, weights: Vec<Weight>) -> Result<Self> {
        if weights.len() != self.dim() {
            return Err(Error::InvalidInput("one weight per basis vector expected".into()));
        }
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                let w: Weight = weights[i].iter().zip(&weights[j]).map(|(a, b)| a + b).collect();
                if self.bracket[i][j].entries().iter().any(|(k, _)| weights[*k] != w) {
                    return Err(Error::InvalidInput(format!(
                        "bracket of e{i} and e{j} does not add weights"
                    )));
                }
            }
        }
        self.weights = Some(weights);
        Ok(self)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
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

    pub fn weights(&self) -> Option<&[Weight]> {
        self.weights.as_deref()
    }

    /// Weight of basis vector `i`, empty when no weights are attached.
    pub fn weight(&self, i: usize) -> &[i32] {
        match &self.weights {
            Some(w) => &w[i],
            None => &[],
        }
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> &SparseVec {
        &self.bracket[i][j]
    }

    pub fn bracket(&self, a: &SparseVec, b: &SparseVec) -> SparseVec {
        let ring = self.ring;
        let mut out = SparseVec::new();
        for (i, x) in a.entries() {
            for (j, y) in b.entries() {
                out = out.axpy(&ring, &ring.mul(x, y), &self.bracket[*i][*j]);
            }
        }
        out
    }

    /// `[x,[y,z]] - [[x,y],z] + (-1)^{|y||z|} [[x,z],y]` on basis vectors.
    pub fn leibniz_defect(&self, x: usize, y: usize, z: usize) -> SparseVec {
        let ring = self.ring;
        let ex = SparseVec::unit(x, &ring);
        let ez = SparseVec::unit(z, &ring);
        let ey = SparseVec::unit(y, &ring);
        let lhs = self.bracket(&ex, &self.bracket[y][z]);
        let a = self.bracket(&self.bracket[x][y], &ez);
        let b = self.bracket(&self.bracket[x][z], &ey);
        let sign = if self.parity(y).sign_with(self.parity(z)) {
            ring.from_i64(-1)
        } else {
            ring.one()
        };
        lhs.sub(&ring, &a).axpy(&ring, &sign, &b)
    }

    /// Basis triples where the Leibniz identity fails. Exhaustive up to
    /// dimension 40, otherwise `samples` random triples.
    pub fn leibniz_violations(&self, samples: usize, seed: u64) -> Vec<(usize, usize, usize)> {
        let n = self.dim();
        let mut out = Vec::new();
        if n <= 40 {
            for x in 0..n {
                for y in 0..n {
                    for z in 0..n {
                        if !self.leibniz_defect(x, y, z).is_zero() {
                            out.push((x, y, z));
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..samples {
                let (x, y, z) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
                if !self.leibniz_defect(x, y, z).is_zero() {
                    out.push((x, y, z));
                }
            }
        }
        out
    }

    /// Echelon form of the span of all brackets.
    pub fn derived_span(&self) -> Result<Echelon> {
        let mut e = Echelon::new(self.ring, self.dim())?;
        for row in &self.bracket {
            for v in row {
                e.insert_vec(v.clone());
            }
        }
        Ok(e)
    }

    pub fn is_perfect(&self) -> Result<bool> {
        Ok(self.derived_span()?.is_full())
    }

    /// Columns span `Z(L) = {z : [z, L] = [L, z] = 0}`.
    pub fn centre(&self) -> Result<SparseMat> {
        let n = self.dim();
        let cols = (0..n)
            .map(|i| {
                let mut v = SparseVec::new();
                for j in 0..n {
                    v = v.concat(2 * j * n, &self.bracket[i][j]);
                    v = v.concat((2 * j + 1) * n, &self.bracket[j][i]);
                }
                v
            })
            .collect();
        kernel_basis(&SparseMat::from_columns(self.ring, 2 * n * n, cols))
    }
}

/// Basis position `E_ij(e_b)` in a matrix superalgebra. Indices are
/// 0-based; rows `i >= m` are odd.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MatrixBasisIndex {
    pub i: usize,
    pub j: usize,
    pub b: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MatrixLayout {
    pub m: usize,
    pub n: usize,
    pub dim_d: usize,
}

impl MatrixLayout {
    pub fn new(m: usize, n: usize, dim_d: usize) -> Self {
        Self { m, n, dim_d }
    }

    pub fn size(&self) -> usize {
        self.m + self.n
    }

    pub fn dim(&self) -> usize {
        self.size() * self.size() * self.dim_d
    }

    pub fn index(&self, i: usize, j: usize, b: usize) -> usize {
        (i * self.size() + j) * self.dim_d + b
    }

    pub fn decode(&self, idx: usize) -> MatrixBasisIndex {
        let b = idx % self.dim_d;
        let ij = idx / self.dim_d;
        MatrixBasisIndex {
            i: ij / self.size(),
            j: ij % self.size(),
            b,
        }
    }

    pub fn row_parity(&self, i: usize) -> Parity {
        Parity::new((i >= self.m) as u8)
    }

    /// `|i| + |j| + |e_b|`
    pub fn parity(&self, d: &SuperDialgebra, idx: usize) -> Parity {
        let x = self.decode(idx);
        self.row_parity(x.i) + self.row_parity(x.j) + d.parity(x.b)
    }

    /// `ε_i - ε_j`
    pub fn weight(&self, idx: usize) -> Weight {
        let x = self.decode(idx);
        let mut w = vec![0; self.size()];
        w[x.i] += 1;
        w[x.j] -= 1;
        w
    }

    /// `E_ij(a)` for `a` in coordinates of `D`.
    pub fn embed(&self, ring: &RingSpec, i: usize, j: usize, a: &SparseVec) -> SparseVec {
        a.remap(ring, |b| Some(self.index(i, j, b)))
    }
}

/// `gl(m, n, D)`
pub fn gl(m: usize, n: usize, d: &SuperDialgebra) -> Result<LeibnizSuperalgebra> {
    if m + n == 0 {
        return Err(Error::InvalidInput("m + n must be positive".into()));
    }
    let md = matrix_dialgebra_graded(m, n, d)?;
    let layout = MatrixLayout::new(m, n, d.dim());
    let weights = (0..layout.dim()).map(|x| layout.weight(x)).collect();
    LeibnizSuperalgebra::from_dialgebra(&md)
        .with_name(format!("gl({m},{n},{})", d.name()))
        .with_weights(weights)
}

/// `Str₁(x) = Σ_i (-1)^{|i|(|i| + |x_ii|)} x_ii`
pub fn supertrace(layout: &MatrixLayout, d: &SuperDialgebra, x: &SparseVec) -> SparseVec {
    let ring = *d.ring();
    let mut entries = Vec::new();
    for (idx, c) in x.entries() {
        let e = layout.decode(*idx);
        if e.i != e.j {
            continue;
        }
        let ri = layout.row_parity(e.i);
        let neg = ri.sign_with(ri + d.parity(e.b));
        entries.push((e.b, if neg { ring.neg(c) } else { c.clone() }));
    }
    SparseVec::from_entries(&ring, entries)
}

/// `sl(m, n, D) = [gl, gl]` with its inclusion into `gl`.
#[derive(Clone, Debug)]
pub struct SpecialLinear {
    pub algebra: LeibnizSuperalgebra,
    pub gl: LeibnizSuperalgebra,
    /// Columns are the basis of `sl` in `gl` coordinates.
    pub inclusion: SparseMat,
    pub layout: MatrixLayout,
    pub dialgebra: SuperDialgebra,
    /// `[gl, gl]` equals `{x : Str₁(x) ∈ span [D, D]}`.
    pub supertrace_agrees: bool,
    span: Echelon,
}

impl SpecialLinear {
    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// Coordinates in the `sl` basis of an element of `[gl, gl]`.
    pub fn coordinates(&self, x: &SparseVec) -> Option<SparseVec> {
        self.span.row_coordinates(x)
    }

    pub fn to_gl(&self, v: &SparseVec) -> SparseVec {
        self.inclusion.mul_vec(v)
    }

    /// Basis index of `E_ij(e_b)` in `sl`, when it is a basis vector (always
    /// the case off the diagonal).
    pub fn basis_index(&self, i: usize, j: usize, b: usize) -> Option<usize> {
        let target = SparseVec::unit(self.layout.index(i, j, b), self.gl.ring());
        self.inclusion.columns().iter().position(|c| *c == target)
    }

    pub fn label(&self, k: usize) -> String {
        self.algebra.module().label(k)
    }
}

pub fn sl(m: usize, n: usize, d: &SuperDialgebra) -> Result<SpecialLinear> {
    if m + n < 2 {
        return Err(Error::InvalidInput("sl needs m + n >= 2".into()));
    }
    let ring = *d.ring();
    let g = gl(m, n, d)?;
    let layout = MatrixLayout::new(m, n, d.dim());
    let mut span = g.derived_span()?;
    span.fully_reduce();
    let basis: Vec<SparseVec> = span.rows().cloned().collect();
    let k = basis.len();
    let mut bracket = vec![vec![SparseVec::new(); k]; k];
    for a in 0..k {
        for b in 0..k {
            let v = g.bracket(&basis[a], &basis[b]);
            bracket[a][b] = span
                .row_coordinates(&v)
                .ok_or_else(|| Error::Consistency("bracket left [gl, gl]".into()))?;
        }
    }
    let first = |v: &SparseVec| v.lead().map(|(i, _)| i).expect("nonzero basis vector");
    let parity: Vec<Parity> = basis.iter().map(|v| g.parity(first(v))).collect();
    let weights: Vec<Weight> = basis.iter().map(|v| g.weight(first(v)).to_vec()).collect();
    let inclusion = SparseMat::from_columns(ring, g.dim(), basis);
    let labels = (0..k)
        .map(|c| {
            let col = inclusion.column(c);
            col.entries()
                .iter()
                .map(|(idx, v)| {
                    let lab = g.module().label(*idx);
                    if *v == ring.one() {
                        lab
                    } else {
                        format!("{}*{}", ring.format(v), lab)
                    }
                })
                .collect::<Vec<_>>()
                .join(" + ")
        })
        .collect();
    let algebra = LeibnizSuperalgebra::new(
        format!("sl({m},{n},{})", d.name()),
        ring,
        GradedFreeModule::with_labels(parity, labels)?,
        bracket,
    )?
    .with_weights(weights)?;
    let supertrace_agrees = supertrace_kernel(&layout, d, &g)?.same_span(&span);
    Ok(SpecialLinear {
        algebra,
        gl: g,
        inclusion,
        layout,
        dialgebra: d.clone(),
        supertrace_agrees,
        span,
    })
}

/// `{x ∈ gl : Str₁(x) ∈ span [D, D]}`
fn supertrace_kernel(
    layout: &MatrixLayout,
    d: &SuperDialgebra,
    g: &LeibnizSuperalgebra,
) -> Result<Echelon> {
    let ring = *d.ring();
    let n = g.dim();
    let dd = bracket_span(d)?;
    let minus = ring.from_i64(-1);
    let mut cols: Vec<SparseVec> = (0..n)
        .map(|x| supertrace(layout, d, &SparseVec::unit(x, &ring)))
        .collect();
    cols.extend(dd.rows().map(|r| r.scale(&ring, &minus)));
    let ker = kernel_basis(&SparseMat::from_columns(ring, d.dim(), cols))?;
    let projected: Vec<SparseVec> = ker.columns().iter().map(|c| c.split_at(n).0).collect();
    let mut e = Echelon::from_vectors(ring, n, projected.iter())?;
    e.fully_reduce();
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::superdialg::builtin;

    fn q() -> RingSpec {
        RingSpec::Rationals
    }

    #[test]
    fn from_dialgebra_examples() {
        let l = LeibnizSuperalgebra::from_dialgebra(&builtin("dual_numbers_q").unwrap());
        assert!(l.derived_span().unwrap().rank() == 0);
        // f takes scalar values, so x f(y) - f(y) x = 0
        let bd = LeibnizSuperalgebra::from_dialgebra(&builtin("bar_duplex_q").unwrap());
        assert!(bd.bracket_basis(0, 1).is_zero());
        let m = LeibnizSuperalgebra::from_dialgebra(&builtin("mat2_q").unwrap());
        assert!(m.leibniz_violations(0, 0).is_empty());
        assert_eq!(m.derived_span().unwrap().rank(), 3);
    }

    #[test]
    fn gl_brackets() {
        let qd = builtin("rationals").unwrap();
        let g = gl(1, 0, &qd).unwrap();
        assert_eq!(g.dim(), 1);
        assert!(g.bracket_basis(0, 0).is_zero());
        let r = q();
        let g = gl(2, 0, &qd).unwrap();
        let lay = MatrixLayout::new(2, 0, 1);
        let v = g.bracket_basis(lay.index(0, 1, 0), lay.index(1, 0, 0));
        let expect = SparseVec::from_entries(
            &r,
            vec![(lay.index(0, 0, 0), r.one()), (lay.index(1, 1, 0), r.from_i64(-1))],
        );
        assert_eq!(*v, expect);
        let g = gl(1, 1, &qd).unwrap();
        let lay = MatrixLayout::new(1, 1, 1);
        let v = g.bracket_basis(lay.index(0, 1, 0), lay.index(1, 0, 0));
        let expect = SparseVec::from_entries(
            &r,
            vec![(lay.index(0, 0, 0), r.one()), (lay.index(1, 1, 0), r.one())],
        );
        assert_eq!(*v, expect);
        assert!(g.leibniz_violations(0, 0).is_empty());
    }

    #[test]
    fn sl_dimensions() {
        let qd = builtin("rationals").unwrap();
        let s = sl(2, 0, &qd).unwrap();
        assert_eq!(s.dim(), 3);
        assert!(s.supertrace_agrees);
        let s = sl(2, 2, &qd).unwrap();
        assert_eq!(s.dim(), 15);
        assert!(s.supertrace_agrees);
        // [D,D] = 0 for the bar duplex, so only Str₁ = 0 remains: 32 - 2
        let s = sl(2, 2, &builtin("bar_duplex_q").unwrap()).unwrap();
        assert_eq!(s.dim(), 30);
        assert!(s.supertrace_agrees);
    }

    #[test]
    fn supertrace_signs() {
        let d = builtin("grassmann_q").unwrap();
        let r = q();
        let lay = MatrixLayout::new(1, 1, 2);
        let one = SparseVec::unit(0, &r);
        let x = SparseVec::unit(1, &r);
        assert_eq!(supertrace(&lay, &d, &lay.embed(&r, 0, 0, &one)), one);
        assert_eq!(supertrace(&lay, &d, &lay.embed(&r, 1, 1, &one)), one.neg(&r));
        assert_eq!(supertrace(&lay, &d, &lay.embed(&r, 1, 1, &x)), x);
    }

    #[test]
    fn centre_and_perfectness() {
        let ab = LeibnizSuperalgebra::abelian(q(), vec![Parity::EVEN; 3]);
        assert_eq!(ab.centre().unwrap().ncols(), 3);
        let qd = builtin("rationals").unwrap();
        assert_eq!(sl(2, 0, &qd).unwrap().algebra.centre().unwrap().ncols(), 0);
        assert_eq!(gl(2, 0, &qd).unwrap().centre().unwrap().ncols(), 1);
        assert!(sl(2, 1, &qd).unwrap().algebra.is_perfect().unwrap());
        assert!(!LeibnizSuperalgebra::abelian(q(), vec![Parity::EVEN]).is_perfect().unwrap());
        assert!(sl(3, 0, &builtin("f2").unwrap()).unwrap().algebra.is_perfect().unwrap());
    }

    #[test]
    fn off_diagonal_generators_reproduce_formula() {
        let d = builtin("bar_duplex_q").unwrap();
        let s = sl(2, 1, &d).unwrap();
        let r = q();
        let lay = s.layout;
        for (i, j, k, l) in [(0, 1, 1, 2), (0, 2, 2, 0), (2, 0, 1, 2), (1, 0, 0, 1)] {
            for a in 0..2 {
                for b in 0..2 {
                    let x = s.basis_index(i, j, a).unwrap();
                    let y = s.basis_index(k, l, b).unwrap();
                    let got = s.to_gl(s.algebra.bracket_basis(x, y));
                    let px = s.algebra.parity(x);
                    let py = s.algebra.parity(y);
                    let ea = SparseVec::unit(a, &r);
                    let eb = SparseVec::unit(b, &r);
                    let mut want = SparseVec::new();
                    if j == k {
                        want = want.add(&r, &lay.embed(&r, i, l, &d.left_mul(&ea, &eb)));
                    }
                    if i == l {
                        let t = lay.embed(&r, k, j, &d.right_mul(&eb, &ea));
                        want = if px.sign_with(py) { want.add(&r, &t) } else { want.sub(&r, &t) };
                    }
                    assert_eq!(got, want, "({i}{j},{k}{l};{a},{b})");
                }
            }
        }
    }
}
