use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::SuperDialgebra;
use crate::error::Result;
use crate::exactlin::{GradedEchelon, GradedModuleInvariants, Parity, SparseVec};

/// Smallest two-sided ideal containing `generators`, closed under both
/// products on both sides. Generators should be homogeneous.
///
/// Every vector that enlarges the span has its products with all basis
/// vectors queued, which reaches the fixed point over any noetherian ring.
pub fn ideal_closure(d: &SuperDialgebra, generators: &[SparseVec]) -> Result<GradedEchelon> {
    let ring = *d.ring();
    let n = d.dim();
    let mut span = GradedEchelon::new(ring, d.module().parities().to_vec())?;
    let mut queue: Vec<SparseVec> = generators.to_vec();
    while let Some(v) = queue.pop() {
        if v.is_zero() || !span.insert(&v) {
            continue;
        }
        for k in 0..n {
            let ek = SparseVec::unit(k, &ring);
            queue.push(d.left_mul(&v, &ek));
            queue.push(d.right_mul(&v, &ek));
            queue.push(d.left_mul(&ek, &v));
            queue.push(d.right_mul(&ek, &v));
        }
    }
    Ok(span)
}

/// Span of all basis brackets `[e_i, e_j]`.
pub fn bracket_span(d: &SuperDialgebra) -> Result<GradedEchelon> {
    let mut span = GradedEchelon::new(*d.ring(), d.module().parities().to_vec())?;
    for i in 0..d.dim() {
        for j in 0..d.dim() {
            span.insert(&d.bracket_basis(i, j));
        }
    }
    Ok(span)
}

#[derive(Clone, Debug)]
pub struct BracketIdeal {
    /// The ideal generated by all brackets.
    pub ideal: GradedEchelon,
    /// The span of `[D,D] ⊣ D`.
    pub left_span: GradedEchelon,
    pub spans_agree: bool,
}

/// Ideal generated by `a ⊣ b - (-1)^{|a||b|} b ⊢ a`, compared with the
/// plain span `[D,D] ⊣ D`.
pub fn bracket_ideal(d: &SuperDialgebra) -> Result<BracketIdeal> {
    let ring = *d.ring();
    let n = d.dim();
    let brackets: Vec<SparseVec> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .map(|(i, j)| d.bracket_basis(i, j))
        .collect();
    let ideal = ideal_closure(d, &brackets)?;
    let mut left_span = GradedEchelon::new(ring, d.module().parities().to_vec())?;
    for b in &brackets {
        for k in 0..n {
            left_span.insert(&d.left_mul(b, &SparseVec::unit(k, &ring)));
        }
    }
    let spans_agree = ideal.same_span(&left_span);
    Ok(BracketIdeal {
        ideal,
        left_span,
        spans_agree,
    })
}

/// Span of `D ⊢ [D,D]`.
pub fn right_bracket_span(d: &SuperDialgebra) -> Result<GradedEchelon> {
    let ring = *d.ring();
    let n = d.dim();
    let mut span = GradedEchelon::new(ring, d.module().parities().to_vec())?;
    for i in 0..n {
        for j in 0..n {
            let b = d.bracket_basis(i, j);
            for k in 0..n {
                span.insert(&d.right_mul(&SparseVec::unit(k, &ring), &b));
            }
        }
    }
    Ok(span)
}

/// Random homogeneous element with small integer coefficients.
fn random_homogeneous(d: &SuperDialgebra, rng: &mut ChaCha8Rng) -> SparseVec {
    let ring = *d.ring();
    let p = if rng.gen_bool(0.5) { Parity::EVEN } else { Parity::ODD };
    let entries = (0..d.dim())
        .filter(|&i| d.parity(i) == p)
        .map(|i| (i, ring.from_i64(rng.gen_range(-3..=3))))
        .collect();
    SparseVec::from_entries(&ring, entries)
}

/// Checks on random homogeneous triples that `a ⊣ [b,c]` lies in
/// `[D,D] ⊣ D`, that `[a,b] ⊢ c` lies in `D ⊢ [D,D]`, that both spans agree
/// and that they equal the ideal generated by the brackets. Returns the
/// failures found.
pub fn bracket_lemma_violations(d: &SuperDialgebra, samples: usize, seed: u64) -> Result<Vec<String>> {
    let b = bracket_ideal(d)?;
    let right = right_bracket_span(d)?;
    let mut out = Vec::new();
    if !b.left_span.same_span(&right) {
        out.push("[D,D] ⊣ D differs from D ⊢ [D,D]".to_string());
    }
    if !b.spans_agree {
        out.push("bracket ideal differs from [D,D] ⊣ D".to_string());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let (x, y, z) = (
            random_homogeneous(d, &mut rng),
            random_homogeneous(d, &mut rng),
            random_homogeneous(d, &mut rng),
        );
        if !b.left_span.contains(&d.left_mul(&x, &d.bracket(&y, &z))) {
            out.push(format!("a ⊣ [b,c] outside [D,D] ⊣ D for {x:?}, {y:?}, {z:?}"));
        }
        if !right.contains(&d.right_mul(&d.bracket(&x, &y), &z)) {
            out.push(format!("[a,b] ⊢ c outside D ⊢ [D,D] for {x:?}, {y:?}, {z:?}"));
        }
    }
    Ok(out)
}

/// `D_m = D / (m D + bracket ideal)` as a graded module.
#[derive(Clone, Debug)]
pub struct QuotientDm {
    pub m: u64,
    pub ideal: GradedEchelon,
    pub invariants: GradedModuleInvariants,
}

impl QuotientDm {
    /// Canonical representative of the class of `v`.
    pub fn project(&self, v: &SparseVec) -> SparseVec {
        self.ideal.normal_form(v)
    }

    pub fn is_zero_class(&self, v: &SparseVec) -> bool {
        self.ideal.contains(v)
    }
}

pub fn quotient_dm(d: &SuperDialgebra, m: u64) -> Result<QuotientDm> {
    let ring = *d.ring();
    let n = d.dim();
    let mut gens = Vec::new();
    let mi = ring.from_bigint(m.into());
    for k in 0..n {
        gens.push(SparseVec::unit(k, &ring).scale(&ring, &mi));
    }
    for i in 0..n {
        for j in 0..n {
            gens.push(d.bracket_basis(i, j));
        }
    }
    let ideal = ideal_closure(d, &gens)?;
    let invariants = ideal.quotient_invariants()?;
    Ok(QuotientDm {
        m,
        ideal,
        invariants,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::GradedModuleInvariants;
    use crate::superdialg::builtin;

    #[test]
    fn commutative_algebras_have_zero_ideal() {
        for name in ["rationals", "integers", "f2", "dual_numbers_q"] {
            let b = bracket_ideal(&builtin(name).unwrap()).unwrap();
            assert_eq!(b.ideal.rank(), 0, "{name}");
            assert!(b.spans_agree);
        }
    }

    #[test]
    fn bar_duplex_brackets_vanish() {
        // [x, y] = x f(y) - f(y) x = 0 since f takes scalar values
        let d = builtin("bar_duplex_q").unwrap();
        let b = bracket_ideal(&d).unwrap();
        assert!(b.spans_agree);
        assert_eq!(b.ideal.rank(), 0);
    }

    #[test]
    fn matrix_brackets() {
        let d = builtin("mat2_q").unwrap();
        // commutators span the trace-zero matrices, which generate everything
        let span = bracket_span(&d).unwrap();
        assert_eq!(span.rank(), 3);
        assert!(!span.contains(&SparseVec::unit(0, d.ring())));
        let b = bracket_ideal(&d).unwrap();
        assert!(b.spans_agree);
        assert_eq!(b.ideal.rank(), 4);
    }

    #[test]
    fn noncommutative_dialgebra_ideal() {
        let d = crate::superdialg::tensor_product(
            &builtin("mat2_q").unwrap(),
            &builtin("bar_duplex_q").unwrap(),
        )
        .unwrap();
        assert!(d.validate().is_empty());
        let b = bracket_ideal(&d).unwrap();
        assert!(b.spans_agree);
        assert!(b.ideal.rank() > 0);
    }

    #[test]
    fn bracket_lemma_on_catalog() {
        for name in crate::superdialg::builtin_names() {
            let d = builtin(name).unwrap();
            if !d.is_unital() {
                continue;
            }
            assert!(bracket_lemma_violations(&d, 200, 1).unwrap().is_empty(), "{name}");
        }
    }

    #[test]
    fn dm_examples() {
        let q = builtin("rationals").unwrap();
        assert!(quotient_dm(&q, 2).unwrap().invariants.is_zero());
        let f2 = builtin("f2").unwrap();
        assert_eq!(
            quotient_dm(&f2, 2).unwrap().invariants,
            GradedModuleInvariants::even_free(1)
        );
        let bd = builtin("bar_duplex_q").unwrap();
        assert_eq!(
            quotient_dm(&bd, 0).unwrap().invariants,
            GradedModuleInvariants::even_free(2)
        );
        let m = builtin("mat2_q").unwrap();
        assert!(quotient_dm(&m, 0).unwrap().invariants.is_zero());
        let z = builtin("integers").unwrap();
        assert_eq!(
            quotient_dm(&z, 2).unwrap().invariants,
            GradedModuleInvariants::new(0, 0, vec![2.into()], vec![])
        );
    }
}
