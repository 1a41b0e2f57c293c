use super::SuperDialgebra;
use crate::error::{Error, Result};
use crate::exactlin::{Echelon, GradedFreeModule, Parity, RingSpec, SparseMat, SparseVec};

/// Associative superalgebra by structure constants: `mult[i][j] = e_i e_j`.
#[derive(Clone, Debug)]
pub struct AssocSuperalgebra {
    pub ring: RingSpec,
    pub module: GradedFreeModule,
    pub mult: Vec<Vec<SparseVec>>,
    pub unit: Option<SparseVec>,
}

/// Superbimodule over an associative superalgebra `A`.
/// `left[i][j] = a_i · m_j` and `right[j][i] = m_j · a_i`.
#[derive(Clone, Debug)]
pub struct Bimodule {
    pub module: GradedFreeModule,
    pub left: Vec<Vec<SparseVec>>,
    pub right: Vec<Vec<SparseVec>>,
}

impl AssocSuperalgebra {
    pub fn dim(&self) -> usize {
        self.module.rank()
    }

    pub fn mul(&self, a: &SparseVec, b: &SparseVec) -> SparseVec {
        let ring = self.ring;
        let mut out = SparseVec::new();
        for (i, x) in a.entries() {
            for (j, y) in b.entries() {
                out = out.axpy(&ring, &ring.mul(x, y), &self.mult[*i][*j]);
            }
        }
        out
    }

    /// Checks shapes, parity additivity, associativity and the unit.
    pub fn check(&self) -> Result<()> {
        let n = self.dim();
        let ring = self.ring;
        if self.mult.len() != n || self.mult.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidInput("multiplication table has the wrong shape".into()));
        }
        for i in 0..n {
            for j in 0..n {
                let p = self.module.parity(i) + self.module.parity(j);
                if self.mult[i][j]
                    .entries()
                    .iter()
                    .any(|(k, _)| *k >= n || self.module.parity(*k) != p)
                {
                    return Err(Error::InvalidInput(format!(
                        "product e{i} e{j} is not parity-additive"
                    )));
                }
            }
        }
        for i in 0..n {
            let ei = SparseVec::unit(i, &ring);
            for j in 0..n {
                for k in 0..n {
                    let ek = SparseVec::unit(k, &ring);
                    if self.mul(&self.mult[i][j], &ek) != self.mul(&ei, &self.mult[j][k]) {
                        return Err(Error::InvalidInput(format!(
                            "multiplication is not associative at ({i}, {j}, {k})"
                        )));
                    }
                }
            }
        }
        if let Some(u) = &self.unit {
            for i in 0..n {
                let ei = SparseVec::unit(i, &ring);
                if self.mul(u, &ei) != ei || self.mul(&ei, u) != ei {
                    return Err(Error::InvalidInput(format!("unit fails on e{i}")));
                }
            }
        }
        Ok(())
    }
}

/// A unital associative superalgebra viewed as a superdialgebra with both
/// products equal to the multiplication.
pub fn from_algebra(name: &str, a: &AssocSuperalgebra) -> Result<SuperDialgebra> {
    a.check()?;
    let unit = a
        .unit
        .clone()
        .ok_or_else(|| Error::InvalidInput("algebra is not unital".into()))?;
    SuperDialgebra::new(
        name,
        a.ring,
        a.module.clone(),
        a.mult.clone(),
        a.mult.clone(),
        Some(unit),
    )
}

/// `x ⊣ y = x d(y)`, `x ⊢ y = d(x) y` for a differential `d` (columns are
/// images of basis vectors). A bar-unit is searched for unless supplied;
/// the result may be non-unital.
pub fn from_dga(
    name: &str,
    a: &AssocSuperalgebra,
    d: &SparseMat,
    bar_unit: Option<SparseVec>,
) -> Result<SuperDialgebra> {
    a.check()?;
    let n = a.dim();
    let ring = a.ring;
    if d.nrows() != n || d.ncols() != n {
        return Err(Error::NotADifferential(format!("expected a {n}x{n} map")));
    }
    for i in 0..n {
        if d.column(i)
            .entries()
            .iter()
            .any(|(k, _)| a.module.parity(*k) != a.module.parity(i))
        {
            return Err(Error::NotADifferential(format!("d(e{i}) changes parity")));
        }
        if !d.mul_vec(d.column(i)).is_zero() {
            return Err(Error::NotADifferential(format!("d^2(e{i}) is not zero")));
        }
    }
    for i in 0..n {
        let ei = SparseVec::unit(i, &ring);
        for j in 0..n {
            let ej = SparseVec::unit(j, &ring);
            let lhs = d.mul_vec(&a.mult[i][j]);
            let rhs = a.mul(d.column(i), &ej).add(&ring, &a.mul(&ei, d.column(j)));
            if lhs != rhs {
                return Err(Error::NotADifferential(format!(
                    "Leibniz rule fails on (e{i}, e{j})"
                )));
            }
        }
    }
    let mut left = vec![vec![SparseVec::new(); n]; n];
    let mut right = vec![vec![SparseVec::new(); n]; n];
    for i in 0..n {
        let ei = SparseVec::unit(i, &ring);
        for j in 0..n {
            let ej = SparseVec::unit(j, &ring);
            left[i][j] = a.mul(&ei, d.column(j));
            right[i][j] = a.mul(d.column(i), &ej);
        }
    }
    let out = SuperDialgebra::new(name, ring, a.module.clone(), left, right, None)?;
    let e = match bar_unit {
        Some(e) => Some(e),
        None => out.find_bar_unit()?,
    };
    Ok(out.with_bar_unit(e))
}

/// `m ⊣ m' = m · f(m')`, `m ⊢ m' = f(m) · m'` for an even bimodule map
/// `f : M -> A` (columns are images of the basis of `M`).
pub fn from_bimodule_map(
    name: &str,
    a: &AssocSuperalgebra,
    m: &Bimodule,
    f: &SparseMat,
) -> Result<SuperDialgebra> {
    a.check()?;
    let ring = a.ring;
    let na = a.dim();
    let nm = m.module.rank();
    let shape = |t: &Vec<Vec<SparseVec>>, r: usize, c: usize| {
        t.len() == r && t.iter().all(|row| row.len() == c)
    };
    if !shape(&m.left, na, nm) || !shape(&m.right, nm, na) {
        return Err(Error::InvalidInput("bimodule tables have the wrong shape".into()));
    }
    if f.nrows() != na || f.ncols() != nm {
        return Err(Error::NotABimoduleMap(format!("expected a {na}x{nm} map")));
    }
    for j in 0..nm {
        if f.column(j)
            .entries()
            .iter()
            .any(|(k, _)| a.module.parity(*k) != m.module.parity(j))
        {
            return Err(Error::NotABimoduleMap(format!("f(m{j}) changes parity")));
        }
    }
    let act_left = |x: &SparseVec, y: &SparseVec| {
        let mut out = SparseVec::new();
        for (i, s) in x.entries() {
            for (j, t) in y.entries() {
                out = out.axpy(&ring, &ring.mul(s, t), &m.left[*i][*j]);
            }
        }
        out
    };
    let act_right = |y: &SparseVec, x: &SparseVec| {
        let mut out = SparseVec::new();
        for (j, t) in y.entries() {
            for (i, s) in x.entries() {
                out = out.axpy(&ring, &ring.mul(s, t), &m.right[*j][*i]);
            }
        }
        out
    };
    for i in 0..na {
        let ai = SparseVec::unit(i, &ring);
        for j in 0..nm {
            if f.mul_vec(&m.left[i][j]) != a.mul(&ai, f.column(j)) {
                return Err(Error::NotABimoduleMap(format!("f(a{i} m{j}) != a{i} f(m{j})")));
            }
            if f.mul_vec(&m.right[j][i]) != a.mul(f.column(j), &ai) {
                return Err(Error::NotABimoduleMap(format!("f(m{j} a{i}) != f(m{j}) a{i}")));
            }
        }
    }
    let mut left = vec![vec![SparseVec::new(); nm]; nm];
    let mut right = vec![vec![SparseVec::new(); nm]; nm];
    for i in 0..nm {
        let mi = SparseVec::unit(i, &ring);
        for j in 0..nm {
            let mj = SparseVec::unit(j, &ring);
            left[i][j] = act_right(&mi, f.column(j));
            right[i][j] = act_left(f.column(i), &mj);
        }
    }
    // bar-unit: an even solution of f(x) = 1
    let bar_unit = match &a.unit {
        None => None,
        Some(u) => {
            let mut ech = Echelon::new(ring, na)?;
            for j in 0..nm {
                if !m.module.parity(j).is_odd() {
                    ech.insert(f.column(j).clone(), SparseVec::unit(j, &ring));
                }
            }
            ech.coordinates(u)
        }
    };
    SuperDialgebra::new(name, ring, m.module.clone(), left, right, bar_unit)
}

fn scalar_algebra(ring: RingSpec) -> AssocSuperalgebra {
    AssocSuperalgebra {
        ring,
        module: GradedFreeModule::new(vec![Parity::EVEN]),
        mult: vec![vec![SparseVec::unit(0, &ring)]],
        unit: Some(SparseVec::unit(0, &ring)),
    }
}

/// `M = R²` over `A = R` with `f(a, b) = a + b`: `m ⊣ m' = m f(m')`,
/// `m ⊢ m' = f(m) m'`, bar-unit `(1, 0)`. Not an associative algebra, since
/// `⊣` and `⊢` differ.
pub fn bar_duplex(ring: RingSpec) -> Result<SuperDialgebra> {
    let a = scalar_algebra(ring);
    let unit = SparseVec::unit(0, &ring);
    let m = Bimodule {
        module: GradedFreeModule::with_labels(
            vec![Parity::EVEN; 2],
            vec!["u".into(), "v".into()],
        )?,
        left: vec![vec![SparseVec::unit(0, &ring), SparseVec::unit(1, &ring)]],
        right: vec![vec![SparseVec::unit(0, &ring)], vec![SparseVec::unit(1, &ring)]],
    };
    let f = SparseMat::from_columns(ring, 1, vec![unit.clone(), unit]);
    let name = match ring {
        RingSpec::Integers => "bar_duplex_z".to_string(),
        RingSpec::Rationals => "bar_duplex_q".to_string(),
        RingSpec::IntMod { modulus } => format!("bar_duplex_f{modulus}"),
    };
    from_bimodule_map(&name, &a, &m, &f)
}

/// `D ⊗ D'` with the Koszul sign `(-1)^{|a'||b|}`; basis `e_a ⊗ e_a'` at
/// index `a * dim(D') + a'`.
pub fn tensor_product(d1: &SuperDialgebra, d2: &SuperDialgebra) -> Result<SuperDialgebra> {
    if d1.ring() != d2.ring() {
        return Err(Error::RingMismatch(*d1.ring(), *d2.ring()));
    }
    let ring = *d1.ring();
    let (n1, n2) = (d1.dim(), d2.dim());
    let idx = |a: usize, b: usize| a * n2 + b;
    let kron = |x: &SparseVec, y: &SparseVec| {
        let mut e = Vec::new();
        for (i, s) in x.entries() {
            for (j, t) in y.entries() {
                e.push((idx(*i, *j), ring.mul(s, t)));
            }
        }
        SparseVec::from_entries(&ring, e)
    };
    let n = n1 * n2;
    let mut parity = Vec::with_capacity(n);
    let mut labels = Vec::with_capacity(n);
    for a in 0..n1 {
        for b in 0..n2 {
            parity.push(d1.parity(a) + d2.parity(b));
            labels.push(format!("{}⊗{}", d1.module().label(a), d2.module().label(b)));
        }
    }
    let mut left = vec![vec![SparseVec::new(); n]; n];
    let mut right = vec![vec![SparseVec::new(); n]; n];
    let minus = ring.from_i64(-1);
    for a in 0..n1 {
        for a2 in 0..n2 {
            for b in 0..n1 {
                for b2 in 0..n2 {
                    let neg = d2.parity(a2).sign_with(d1.parity(b));
                    let mut l = kron(d1.left_basis(a, b), d2.left_basis(a2, b2));
                    let mut r = kron(d1.right_basis(a, b), d2.right_basis(a2, b2));
                    if neg {
                        l = l.scale(&ring, &minus);
                        r = r.scale(&ring, &minus);
                    }
                    left[idx(a, a2)][idx(b, b2)] = l;
                    right[idx(a, a2)][idx(b, b2)] = r;
                }
            }
        }
    }
    let bar = match (d1.bar_unit(), d2.bar_unit()) {
        (Some(x), Some(y)) => Some(kron(x, y)),
        _ => None,
    };
    SuperDialgebra::new(
        format!("{}⊗{}", d1.name(), d2.name()),
        ring,
        GradedFreeModule::with_labels(parity, labels)?,
        left,
        right,
        bar,
    )
}

/// `M_k(D)` with `(a ∘ b)_{ij} = Σ_l a_{il} ∘ b_{lj}`.
pub fn matrix_dialgebra(k: usize, d: &SuperDialgebra) -> Result<SuperDialgebra> {
    matrix_dialgebra_graded(k, 0, d)
}

/// Matrices of size `m + n` over `D` where `E_ij(a)` has parity
/// `|i| + |j| + |a|` and indices beyond `m` are odd. The products carry no
/// extra signs. Basis `E_ij(e_b)` sits at index `(i (m+n) + j) dim(D) + b`.
pub fn matrix_dialgebra_graded(m: usize, n: usize, d: &SuperDialgebra) -> Result<SuperDialgebra> {
    let k = m + n;
    if k == 0 {
        return Err(Error::InvalidInput("matrix size must be positive".into()));
    }
    let ring = *d.ring();
    let nd = d.dim();
    let idx = |i: usize, j: usize, b: usize| (i * k + j) * nd + b;
    let pi = |i: usize| Parity::new((i >= m) as u8);
    let size = k * k * nd;
    let mut parity = Vec::with_capacity(size);
    let mut labels = Vec::with_capacity(size);
    for i in 0..k {
        for j in 0..k {
            for b in 0..nd {
                parity.push(pi(i) + pi(j) + d.parity(b));
                labels.push(format!("E{}{}({})", i + 1, j + 1, d.module().label(b)));
            }
        }
    }
    let embed = |i: usize, j: usize, v: &SparseVec| v.remap(&ring, |b| Some(idx(i, j, b)));
    let mut left = vec![vec![SparseVec::new(); size]; size];
    let mut right = vec![vec![SparseVec::new(); size]; size];
    for i in 0..k {
        for j in 0..k {
            for a in 0..nd {
                for l in 0..k {
                    for b in 0..nd {
                        left[idx(i, j, a)][idx(j, l, b)] = embed(i, l, d.left_basis(a, b));
                        right[idx(i, j, a)][idx(j, l, b)] = embed(i, l, d.right_basis(a, b));
                    }
                }
            }
        }
    }
    let bar = d.bar_unit().map(|e| {
        let mut out = SparseVec::new();
        for i in 0..k {
            out = out.add(&ring, &embed(i, i, e));
        }
        out
    });
    let name = if n == 0 {
        format!("M{}({})", m, d.name())
    } else {
        format!("M({}|{})({})", m, n, d.name())
    };
    SuperDialgebra::new(
        name,
        ring,
        GradedFreeModule::with_labels(parity, labels)?,
        left,
        right,
        bar,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::superdialg::builtin;

    fn q() -> RingSpec {
        RingSpec::Rationals
    }

    fn vec2(a: i64, b: i64) -> SparseVec {
        let r = q();
        SparseVec::from_dense(&r, &[r.from_i64(a), r.from_i64(b)])
    }

    #[test]
    fn bar_duplex_products() {
        let d = bar_duplex(q()).unwrap();
        assert!(d.validate().is_empty());
        assert_eq!(d.bar_unit(), Some(&vec2(1, 0)));
        assert_eq!(d.left_mul(&vec2(0, 1), &vec2(1, 0)), vec2(0, 1));
        assert_eq!(d.right_mul(&vec2(1, 0), &vec2(0, 1)), vec2(0, 1));
        assert_eq!(d.left_mul(&vec2(1, 0), &vec2(1, 0)), vec2(1, 0));
        assert_eq!(d.right_mul(&vec2(0, 1), &vec2(0, 1)), vec2(0, 1));
    }

    #[test]
    fn algebra_examples() {
        let d = builtin("dual_numbers_q").unwrap();
        let eps = SparseVec::unit(1, &q());
        assert!(d.left_mul(&eps, &eps).is_zero());
        let one = builtin("rationals").unwrap();
        let e = SparseVec::unit(0, &q());
        assert_eq!(one.left_mul(&e, &e), e);
        let g = builtin("grassmann_q").unwrap();
        assert!(g.parity(1).is_odd());
        assert!(g.validate().is_empty());
    }

    #[test]
    fn non_associative_algebra_is_rejected() {
        let r = q();
        let a = AssocSuperalgebra {
            ring: r,
            module: GradedFreeModule::new(vec![Parity::EVEN]),
            mult: vec![vec![SparseVec::unit(0, &r).scale(&r, &r.from_i64(2))]],
            unit: Some(SparseVec::unit(0, &r)),
        };
        assert!(matches!(from_algebra("x", &a), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn dga_examples() {
        let r = q();
        let dual = AssocSuperalgebra {
            ring: r,
            module: GradedFreeModule::new(vec![Parity::EVEN; 2]),
            mult: vec![
                vec![SparseVec::unit(0, &r), SparseVec::unit(1, &r)],
                vec![SparseVec::unit(1, &r), SparseVec::new()],
            ],
            unit: Some(SparseVec::unit(0, &r)),
        };
        let zero = SparseMat::zero(r, 2, 2);
        let d = from_dga("z", &dual, &zero, None).unwrap();
        assert!(!d.is_unital());
        for i in 0..2 {
            for j in 0..2 {
                assert!(d.left_basis(i, j).is_zero() && d.right_basis(i, j).is_zero());
            }
        }
        // d(eps) = 1 violates the Leibniz rule: d(eps^2) = 0 but 2 eps d(eps) != 0
        let bad = SparseMat::from_dense(r, &[vec![0, 1], vec![0, 0]]);
        assert!(matches!(
            from_dga("bad", &dual, &bad, None),
            Err(Error::NotADifferential(_))
        ));
        let t = builtin("dga_trunc_q").unwrap();
        assert!(t.validate().is_empty());
        assert!(!t.is_unital());
    }

    #[test]
    fn bimodule_identity_recovers_algebra() {
        let r = q();
        let a = scalar_algebra(r);
        let m = Bimodule {
            module: a.module.clone(),
            left: a.mult.clone(),
            right: a.mult.clone(),
        };
        let d = from_bimodule_map("q", &a, &m, &SparseMat::identity(r, 1)).unwrap();
        let alg = from_algebra("q", &a).unwrap();
        assert_eq!(d.left_basis(0, 0), alg.left_basis(0, 0));
        assert_eq!(d.right_basis(0, 0), alg.right_basis(0, 0));
        assert_eq!(d.bar_unit(), alg.bar_unit());
        let broken = SparseMat::from_columns(r, 1, vec![SparseVec::unit(0, &r).scale(&r, &r.from_i64(2))]);
        let m2 = Bimodule {
            module: a.module.clone(),
            left: a.mult.clone(),
            right: a.mult.clone(),
        };
        // f(1) = 2 is still equivariant over a commutative scalar ring
        assert!(from_bimodule_map("q", &a, &m2, &broken).is_ok());
    }

    #[test]
    fn tensor_examples() {
        let qd = builtin("rationals").unwrap();
        let t = tensor_product(&qd, &qd).unwrap();
        assert_eq!(t.dim(), 1);
        assert_eq!(t.left_basis(0, 0), qd.left_basis(0, 0));
        let bd = bar_duplex(q()).unwrap();
        let t = tensor_product(&qd, &bd).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(t.left_basis(i, j), bd.left_basis(i, j));
                assert_eq!(t.right_basis(i, j), bd.right_basis(i, j));
            }
        }
        let g = builtin("grassmann_q").unwrap();
        let gg = tensor_product(&g, &g).unwrap();
        assert!(gg.validate().is_empty());
        // x⊗1 at index 2, 1⊗x at index 1
        let a = SparseVec::unit(2, &q());
        let b = SparseVec::unit(1, &q());
        let ab = gg.left_mul(&a, &b);
        let ba = gg.left_mul(&b, &a);
        assert!(!ab.is_zero());
        assert_eq!(ab, ba.neg(&q()));
    }

    #[test]
    fn matrix_examples() {
        let qd = builtin("rationals").unwrap();
        let m1 = matrix_dialgebra(1, &qd).unwrap();
        assert_eq!(m1.left_basis(0, 0), qd.left_basis(0, 0));
        let m2 = matrix_dialgebra(2, &qd).unwrap();
        assert!(m2.validate().is_empty());
        let e12 = SparseVec::unit(1, &q());
        let e21 = SparseVec::unit(2, &q());
        assert_eq!(m2.left_mul(&e12, &e21), SparseVec::unit(0, &q()));
        assert!(m2.left_mul(&e12, &e12).is_zero());
        let bd = bar_duplex(q()).unwrap();
        let g = matrix_dialgebra_graded(1, 1, &bd).unwrap();
        assert!(g.validate().is_empty());
    }
}
