use super::constructors::{bar_duplex, from_algebra, from_dga, AssocSuperalgebra};
use super::SuperDialgebra;
use crate::error::{Error, Result};
use crate::exactlin::{GradedFreeModule, Parity, RingSpec, SparseMat, SparseVec};

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub description: &'static str,
    pub dialgebra: SuperDialgebra,
    pub unital: bool,
}

const NAMES: &[(&str, &str)] = &[
    ("rationals", "Q as a one-dimensional algebra"),
    ("integers", "Z as a one-dimensional algebra"),
    ("f2", "the field with two elements"),
    ("f3", "the field with three elements"),
    ("dual_numbers_q", "Q[e]/(e^2), e even"),
    ("grassmann_q", "Q<x>/(x^2), x odd"),
    ("mat2_q", "2x2 matrices over Q, basis 1, E12, E21, E22"),
    ("bar_duplex_q", "Q^2 with m⊣m' = m f(m'), m⊢m' = f(m) m', f(a,b) = a+b"),
    ("bar_duplex_z", "the same over Z"),
    ("bar_duplex_f2", "the same over F2"),
    ("dga_trunc_q", "Q[t]/(t^3) with d(t) = t^2, x⊣y = x d(y), x⊢y = d(x) y (no bar-unit)"),
];

pub fn builtin_names() -> Vec<&'static str> {
    NAMES.iter().map(|(n, _)| *n).collect()
}

fn monomial_algebra(
    ring: RingSpec,
    parity: Vec<Parity>,
    labels: &[&str],
    mult: impl Fn(usize, usize) -> Option<(usize, i64)>,
) -> Result<AssocSuperalgebra> {
    let n = parity.len();
    let table = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| match mult(i, j) {
                    Some((k, c)) => SparseVec::unit(k, &ring).scale(&ring, &ring.from_i64(c)),
                    None => SparseVec::new(),
                })
                .collect()
        })
        .collect();
    Ok(AssocSuperalgebra {
        ring,
        module: GradedFreeModule::with_labels(parity, labels.iter().map(|s| s.to_string()).collect())?,
        mult: table,
        unit: Some(SparseVec::unit(0, &ring)),
    })
}

fn scalars(ring: RingSpec) -> Result<AssocSuperalgebra> {
    monomial_algebra(ring, vec![Parity::EVEN], &["1"], |_, _| Some((0, 1)))
}

fn truncated_polynomials(ring: RingSpec) -> Result<AssocSuperalgebra> {
    monomial_algebra(ring, vec![Parity::EVEN; 3], &["1", "t", "t^2"], |i, j| {
        (i + j < 3).then_some((i + j, 1))
    })
}

fn mat2(ring: RingSpec) -> Result<SuperDialgebra> {
    // matrix units E11, E12, E21, E22 at 0..4
    let alg = monomial_algebra(
        ring,
        vec![Parity::EVEN; 4],
        &["E11", "E12", "E21", "E22"],
        |x, y| {
            let (i, j) = (x / 2, x % 2);
            let (k, l) = (y / 2, y % 2);
            (j == k).then_some((2 * i + l, 1))
        },
    )?;
    let one = SparseVec::from_entries(&ring, vec![(0, ring.one()), (3, ring.one())]);
    let alg = AssocSuperalgebra {
        unit: Some(one),
        ..alg
    };
    from_algebra("mat2_q", &alg)?.with_bar_unit_basis()
}

fn build(name: &str) -> Result<SuperDialgebra> {
    let q = RingSpec::Rationals;
    match name {
        "rationals" => from_algebra(name, &scalars(q)?),
        "integers" => from_algebra(name, &scalars(RingSpec::Integers)?),
        "f2" => from_algebra(name, &scalars(RingSpec::int_mod(2)?)?),
        "f3" => from_algebra(name, &scalars(RingSpec::int_mod(3)?)?),
        "dual_numbers_q" => from_algebra(
            name,
            &monomial_algebra(q, vec![Parity::EVEN; 2], &["1", "e"], |i, j| {
                (i + j < 2).then_some((i + j, 1))
            })?,
        ),
        "grassmann_q" => from_algebra(
            name,
            &monomial_algebra(q, vec![Parity::EVEN, Parity::ODD], &["1", "x"], |i, j| {
                (i + j < 2).then_some((i + j, 1))
            })?,
        ),
        "mat2_q" => mat2(q),
        "bar_duplex_q" => bar_duplex(q),
        "bar_duplex_z" => bar_duplex(RingSpec::Integers),
        "bar_duplex_f2" => bar_duplex(RingSpec::int_mod(2)?),
        "dga_trunc_q" => {
            let d = SparseMat::from_dense(q, &[vec![0, 0, 0], vec![0, 0, 0], vec![0, 1, 0]]);
            from_dga(name, &truncated_polynomials(q)?, &d, None)
        }
        _ => Err(Error::InvalidInput(format!(
            "unknown builtin '{name}'; available: {}",
            builtin_names().join(", ")
        ))),
    }
}

/// Builtin dialgebra by name. Unital entries have the bar-unit as basis
/// vector 0.
pub fn builtin(name: &str) -> Result<SuperDialgebra> {
    build(name)
}

pub fn default_catalog() -> Vec<CatalogEntry> {
    NAMES
        .iter()
        .map(|(name, description)| {
            let dialgebra = build(name).expect("builtin construction");
            CatalogEntry {
                name,
                description,
                unital: dialgebra.is_unital(),
                dialgebra,
            }
        })
        .collect()
}
