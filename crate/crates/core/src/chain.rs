//! The Leibniz chain complex `δ_n : L^⊗n → L^⊗(n-1)` with
//!
//! ```text
//! δ_n(x_1 ⊗ … ⊗ x_n) = Σ_{i<j} (-1)^{n-j+|x_j|(|x_{i+1}|+…+|x_{j-1}|)}
//!                      x_1 ⊗ … ⊗ [x_i, x_j] ⊗ … ⊗ x̂_j ⊗ … ⊗ x_n
//! ```
//!
//! and its homology `HL_n`. Tensor bases are ordered lexicographically by
//! component index; the parity of a basis tensor is the sum of the parities.

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::exactlin::{
    kernel_basis, subquotient_invariants, GradedFreeModule, GradedModuleInvariants, Parity,
    SparseMat, SparseVec,
};
use crate::leibniz::{LeibnizSuperalgebra, Weight};

pub const DEFAULT_GUARD: u128 = 50_000;

/// Number of basis tensors of `L^⊗n`, checked against `guard`.
pub fn tensor_rank(dim: usize, n: usize, guard: u128) -> Result<usize> {
    let mut total: u128 = 1;
    for _ in 0..n {
        total = total.saturating_mul(dim as u128);
    }
    if total > guard {
        return Err(Error::SizeGuardExceeded {
            required: total,
            guard,
        });
    }
    Ok(total as usize)
}

pub fn tensor_index(dim: usize, tuple: &[usize]) -> usize {
    tuple.iter().fold(0, |acc, &x| acc * dim + x)
}

pub fn tensor_tuple(dim: usize, n: usize, mut idx: usize) -> Vec<usize> {
    let mut out = vec![0; n];
    for k in (0..n).rev() {
        out[k] = idx % dim;
        idx /= dim;
    }
    out
}

pub fn tensor_parity(l: &LeibnizSuperalgebra, tuple: &[usize]) -> Parity {
    tuple.iter().map(|&x| l.parity(x)).sum()
}

fn tensor_weight(l: &LeibnizSuperalgebra, tuple: &[usize]) -> Weight {
    let mut w: Weight = Vec::new();
    for &x in tuple {
        let wx = l.weight(x);
        if w.is_empty() {
            w = wx.to_vec();
        } else {
            for (a, b) in w.iter_mut().zip(wx) {
                *a += b;
            }
        }
    }
    w
}

/// Key of the direct summand of the complex containing a basis tensor.
/// The differential preserves parity and, when weights are attached, weight.
pub type BlockKey = (Parity, Weight);

pub fn block_key(l: &LeibnizSuperalgebra, tuple: &[usize]) -> BlockKey {
    (tensor_parity(l, tuple), tensor_weight(l, tuple))
}

/// `δ_n` of one basis tensor, in the basis of `L^⊗(n-1)`.
pub fn delta_basis(l: &LeibnizSuperalgebra, tuple: &[usize]) -> SparseVec {
    let ring = *l.ring();
    let n = tuple.len();
    let dim = l.dim();
    let mut entries = Vec::new();
    if n < 2 {
        return SparseVec::new();
    }
    for j in 1..n {
        for i in 0..j {
            // 0-based i < j: exponent (n - (j+1)) + |x_j| (|x_{i+1}| + … + |x_{j-1}|)
            let between: Parity = tuple[i + 1..j].iter().map(|&x| l.parity(x)).sum();
            let odd = (n - j - 1) % 2 == 1;
            let neg = odd ^ l.parity(tuple[j]).sign_with(between);
            let br = l.bracket_basis(tuple[i], tuple[j]);
            if br.is_zero() {
                continue;
            }
            let mut rest: Vec<usize> = Vec::with_capacity(n - 1);
            rest.extend_from_slice(&tuple[..j]);
            rest.extend_from_slice(&tuple[j + 1..]);
            for (z, c) in br.entries() {
                rest[i] = *z;
                let c = if neg { ring.neg(c) } else { c.clone() };
                entries.push((tensor_index(dim, &rest), c));
            }
        }
    }
    SparseVec::from_entries(&ring, entries)
}

/// A differential between tensor powers.
#[derive(Clone, Debug)]
pub struct ChainMap {
    pub n: usize,
    pub source: GradedFreeModule,
    pub target: GradedFreeModule,
    pub matrix: SparseMat,
}

fn tensor_module(l: &LeibnizSuperalgebra, n: usize, size: usize) -> GradedFreeModule {
    GradedFreeModule::new(
        (0..size)
            .map(|x| tensor_parity(l, &tensor_tuple(l.dim(), n, x)))
            .collect(),
    )
}

/// The full matrix of `δ_n` (`δ_1 = 0` onto the zero module).
pub fn delta(l: &LeibnizSuperalgebra, n: usize, guard: u128) -> Result<ChainMap> {
    if n == 0 {
        return Err(Error::InvalidInput("δ_n needs n >= 1".into()));
    }
    let size = tensor_rank(l.dim(), n, guard)?;
    let dim = l.dim();
    let target_size = if n == 1 { 0 } else { tensor_rank(dim, n - 1, guard)? };
    let cols = (0..size)
        .map(|x| delta_basis(l, &tensor_tuple(dim, n, x)))
        .collect();
    Ok(ChainMap {
        n,
        source: tensor_module(l, n, size),
        target: if n == 1 {
            GradedFreeModule::new(Vec::new())
        } else {
            tensor_module(l, n - 1, target_size)
        },
        matrix: SparseMat::from_columns(*l.ring(), target_size, cols),
    })
}

/// Basis tensors of `L^⊗n` grouped by block.
pub fn blocks(l: &LeibnizSuperalgebra, n: usize, guard: u128) -> Result<BTreeMap<BlockKey, Vec<usize>>> {
    let size = tensor_rank(l.dim(), n, guard)?;
    let mut out: BTreeMap<BlockKey, Vec<usize>> = BTreeMap::new();
    for x in 0..size {
        out.entry(block_key(l, &tensor_tuple(l.dim(), n, x)))
            .or_default()
            .push(x);
    }
    Ok(out)
}

/// `HL_n(L) = Ker δ_n / Im δ_{n+1}`, computed one block at a time.
pub fn hl(l: &LeibnizSuperalgebra, n: usize, guard: u128) -> Result<GradedModuleInvariants> {
    if n == 0 {
        return Err(Error::InvalidInput("HL_n needs n >= 1".into()));
    }
    tensor_rank(l.dim(), n + 1, guard)?;
    let ring = *l.ring();
    let dim = l.dim();
    let lower = blocks(l, n, guard)?;
    let upper = blocks(l, n + 1, guard)?;
    let mut out = GradedModuleInvariants::zero();
    for (key, members) in &lower {
        let local: HashMap<usize, usize> = members.iter().enumerate().map(|(a, &x)| (x, a)).collect();
        let k = members.len();
        let ker = if n == 1 {
            SparseMat::identity(ring, k)
        } else {
            let image_rows = tensor_rank(dim, n - 1, guard)?;
            let cols = members
                .iter()
                .map(|&x| delta_basis(l, &tensor_tuple(dim, n, x)))
                .collect();
            kernel_basis(&SparseMat::from_columns(ring, image_rows, cols))?
        };
        let im_cols: Vec<SparseVec> = upper
            .get(key)
            .map(|ms| {
                ms.iter()
                    .map(|&x| {
                        delta_basis(l, &tensor_tuple(dim, n + 1, x)).remap(&ring, |y| local.get(&y).copied())
                    })
                    .collect()
            })
            .unwrap_or_default();
        let im = SparseMat::from_columns(ring, k, im_cols);
        let parity = vec![key.0; k];
        out = out.direct_sum(&subquotient_invariants(&ker, &im, &parity)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::RingSpec;
    use crate::leibniz::sl;
    use crate::superdialg::builtin;

    #[test]
    fn abelian_differentials_vanish() {
        let l = LeibnizSuperalgebra::abelian(RingSpec::Rationals, vec![Parity::EVEN, Parity::ODD]);
        assert!(delta(&l, 2, DEFAULT_GUARD).unwrap().matrix.is_zero());
        let h = hl(&LeibnizSuperalgebra::abelian(RingSpec::Rationals, vec![Parity::EVEN]), 2, DEFAULT_GUARD)
            .unwrap();
        assert_eq!(h, GradedModuleInvariants::even_free(1));
    }

    #[test]
    fn delta3_matches_closed_form() {
        let s = sl(1, 1, &builtin("grassmann_q").unwrap()).unwrap().algebra;
        let r = *s.ring();
        let n = s.dim();
        let t2 = |a: &SparseVec, b: &SparseVec| {
            let mut e = Vec::new();
            for (i, x) in a.entries() {
                for (j, y) in b.entries() {
                    e.push((tensor_index(n, &[*i, *j]), r.mul(x, y)));
                }
            }
            SparseVec::from_entries(&r, e)
        };
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let (ex, ey, ez) = (SparseVec::unit(x, &r), SparseVec::unit(y, &r), SparseVec::unit(z, &r));
                    let mut want = t2(s.bracket_basis(x, y), &ez).neg(&r);
                    want = want.add(&r, &t2(&ex, s.bracket_basis(y, z)));
                    let v = t2(s.bracket_basis(x, z), &ey);
                    want = if s.parity(y).sign_with(s.parity(z)) { want.sub(&r, &v) } else { want.add(&r, &v) };
                    assert_eq!(delta_basis(&s, &[x, y, z]), want);
                }
            }
        }
    }

    #[test]
    fn delta_squares_to_zero() {
        for (m, n, name) in [(2, 0, "rationals"), (1, 1, "grassmann_q"), (2, 1, "integers")] {
            let s = sl(m, n, &builtin(name).unwrap()).unwrap().algebra;
            let d2 = delta(&s, 2, DEFAULT_GUARD).unwrap();
            let d3 = delta(&s, 3, DEFAULT_GUARD).unwrap();
            assert!(d2.matrix.compose(&d3.matrix).unwrap().is_zero(), "{name}");
            let d1 = delta(&s, 1, DEFAULT_GUARD).unwrap();
            assert!(d1.matrix.compose(&d2.matrix).unwrap().is_zero());
        }
    }

    #[test]
    fn homology_examples() {
        let s = sl(2, 0, &builtin("rationals").unwrap()).unwrap().algebra;
        assert!(hl(&s, 1, DEFAULT_GUARD).unwrap().is_zero());
        assert!(hl(&s, 2, DEFAULT_GUARD).unwrap().is_zero());
        let s = sl(3, 0, &builtin("rationals").unwrap()).unwrap().algebra;
        assert!(hl(&s, 2, DEFAULT_GUARD).unwrap().is_zero());
    }

    #[test]
    fn guard_is_enforced() {
        let s = sl(3, 0, &builtin("rationals").unwrap()).unwrap().algebra;
        assert!(matches!(hl(&s, 2, 100), Err(Error::SizeGuardExceeded { .. })));
    }
}
