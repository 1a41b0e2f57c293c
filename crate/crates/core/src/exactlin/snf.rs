//! Smith normal form, kernels and subquotients.

use num_bigint::BigInt;

use super::echelon::Echelon;
use super::invariants::{GradedModuleInvariants, Parity};
use super::matrix::SparseMat;
use super::ring::{Elem, RingSpec};
use super::sparse::SparseVec;
use crate::error::{Error, Result};

/// Diagonal of the Smith normal form of the matrix whose rows (or columns,
/// the result is the same) are `vectors`, nonzero entries only.
pub fn invariant_factors(ring: RingSpec, dim: usize, vectors: &[SparseVec]) -> Result<Vec<Elem>> {
    ring.ensure_supported()?;
    let mut rows: Vec<SparseVec> = vectors.iter().filter(|v| !v.is_zero()).cloned().collect();
    let mut ncols = dim;
    loop {
        let e = Echelon::from_vectors(ring, ncols, rows.iter())?;
        if ring.is_field() {
            return Ok(vec![ring.one(); e.rank()]);
        }
        let rs: Vec<SparseVec> = e.rows().cloned().collect();
        if rs.iter().all(|r| r.nnz() == 1) {
            let diag: Vec<BigInt> = rs.iter().map(|r| r.lead().unwrap().1.numer().clone()).collect();
            let nonunit = super::invariants::normalize_torsion(diag.clone());
            let mut out: Vec<Elem> = vec![ring.one(); diag.len() - nonunit.len()];
            out.extend(nonunit.into_iter().map(|d| ring.from_bigint(d)));
            return Ok(out);
        }
        // transpose the echelon rows and go again
        let r = rs.len();
        let mut raw: Vec<Vec<(usize, Elem)>> = vec![Vec::new(); ncols];
        for (i, row) in rs.iter().enumerate() {
            for (c, v) in row.entries() {
                raw[*c].push((i, v.clone()));
            }
        }
        rows = raw
            .into_iter()
            .map(|c| SparseVec::from_entries(&ring, c))
            .filter(|v| !v.is_zero())
            .collect();
        ncols = r;
    }
}

/// Smith normal form invariant factors of `m`: nonzero diagonal entries,
/// each dividing the next. Over fields this is a list of ones of length
/// `rank(m)`.
pub fn snf(m: &SparseMat) -> Result<Vec<Elem>> {
    invariant_factors(*m.ring(), m.nrows(), m.columns())
}

pub fn rank(m: &SparseMat) -> Result<usize> {
    Ok(Echelon::from_vectors(*m.ring(), m.nrows(), m.columns())?.rank())
}

/// Columns span `{v : m v = 0}`. Over the integers they form a basis of the
/// kernel lattice, which is automatically saturated.
pub fn kernel_basis(m: &SparseMat) -> Result<SparseMat> {
    let ring = *m.ring();
    let mut e = Echelon::new(ring, m.nrows())?;
    let mut kernel = Vec::new();
    for (j, col) in m.columns().iter().enumerate() {
        if let Some(rel) = e.insert(col.clone(), SparseVec::unit(j, &ring)).relation {
            kernel.push(rel);
        }
    }
    Ok(SparseMat::from_columns(ring, m.ncols(), kernel))
}

/// `R^dim / span(relations)` as `(free rank, nontrivial invariant factors)`.
pub fn quotient_invariants(
    ring: RingSpec,
    dim: usize,
    relations: &[SparseVec],
) -> Result<(usize, Vec<BigInt>)> {
    let factors = invariant_factors(ring, dim, relations)?;
    let free = dim - factors.len();
    let torsion = factors
        .into_iter()
        .filter(|d| !ring.is_unit(d))
        .map(|d| d.numer().clone())
        .collect();
    Ok((free, torsion))
}

fn column_parity(v: &SparseVec, parity: &[Parity]) -> Result<Option<Parity>> {
    let mut p = None;
    for (i, _) in v.entries() {
        let q = *parity.get(*i).ok_or_else(|| {
            Error::InvalidInput(format!("index {i} outside the parity vector"))
        })?;
        match p {
            None => p = Some(q),
            Some(p0) if p0 != q => {
                return Err(Error::InvalidInput(
                    "generator is not parity-homogeneous".into(),
                ))
            }
            _ => {}
        }
    }
    Ok(p)
}

/// Invariants of `span(ker) / span(im)`, split by parity. Every column of
/// `im` must lie in the span of the columns of `ker`. Columns must be
/// parity-homogeneous with respect to `parity` (one entry per row).
pub fn subquotient_invariants(
    ker: &SparseMat,
    im: &SparseMat,
    parity: &[Parity],
) -> Result<GradedModuleInvariants> {
    let ring = *ker.ring();
    if ring != *im.ring() {
        return Err(Error::RingMismatch(ring, *im.ring()));
    }
    if ker.nrows() != im.nrows() || ker.nrows() != parity.len() {
        return Err(Error::InvalidInput(format!(
            "shape mismatch: ker has {} rows, im has {}, parity has {}",
            ker.nrows(),
            im.nrows(),
            parity.len()
        )));
    }
    let mut out = GradedModuleInvariants::zero();
    for p in [Parity::EVEN, Parity::ODD] {
        let mut gens = Vec::new();
        for c in ker.columns() {
            if column_parity(c, parity)? == Some(p) {
                gens.push(c.clone());
            }
        }
        let mut e = Echelon::new(ring, ker.nrows())?;
        let mut relations = Vec::new();
        for (i, g) in gens.iter().enumerate() {
            if let Some(rel) = e.insert(g.clone(), SparseVec::unit(i, &ring)).relation {
                relations.push(rel);
            }
        }
        for c in im.columns() {
            match column_parity(c, parity)? {
                Some(q) if q == p => {
                    let coords = e.coordinates(c).ok_or(Error::NotASubmodule)?;
                    relations.push(coords);
                }
                _ => {}
            }
        }
        let (free, torsion) = quotient_invariants(ring, gens.len(), &relations)?;
        out = out.direct_sum(&GradedModuleInvariants::component(p, free, torsion));
    }
    Ok(out)
}

/// Isomorphism type of the submodule generated by `vectors` inside the
/// finitely presented module `R^dim / span(relations)`.
pub fn generated_submodule_invariants(
    ring: RingSpec,
    dim: usize,
    vectors: &[SparseVec],
    relations: &[SparseVec],
) -> Result<(usize, Vec<BigInt>)> {
    // S = Z^k / {c : sum c_i v_i in span(relations)}; the relation lattice
    // is the projection of the kernel of [V | -Rel] onto the first k slots.
    let k = vectors.len();
    let mut e = Echelon::new(ring, dim)?;
    let mut rel = Vec::new();
    let minus = ring.from_i64(-1);
    for (i, v) in vectors.iter().enumerate() {
        if let Some(r) = e.insert(v.clone(), SparseVec::unit(i, &ring)).relation {
            rel.push(r);
        }
    }
    for (j, r) in relations.iter().enumerate() {
        if let Some(x) = e
            .insert(r.scale(&ring, &minus), SparseVec::unit(k + j, &ring))
            .relation
        {
            rel.push(x);
        }
    }
    let projected: Vec<SparseVec> = rel.iter().map(|r| r.split_at(k).0).collect();
    quotient_invariants(ring, k, &projected)
}

/// True when `m * v = 0` for every column `v` of `k`.
pub fn annihilates(m: &SparseMat, k: &SparseMat) -> bool {
    k.columns().iter().all(|c| m.mul_vec(c).is_zero())
}
