use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Z/2 degree of a homogeneous element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Parity(u8);

impl Parity {
    pub const EVEN: Parity = Parity(0);
    pub const ODD: Parity = Parity(1);

    pub fn new(bit: u8) -> Self {
        Parity(bit & 1)
    }

    pub fn bit(self) -> u8 {
        self.0
    }

    pub fn is_odd(self) -> bool {
        self.0 == 1
    }

    /// `(-1)^(self * other)` as a boolean "negate".
    pub fn sign_with(self, other: Parity) -> bool {
        self.0 & other.0 == 1
    }
}

impl std::ops::Add for Parity {
    type Output = Parity;
    fn add(self, rhs: Parity) -> Parity {
        Parity(self.0 ^ rhs.0)
    }
}

impl std::ops::AddAssign for Parity {
    fn add_assign(&mut self, rhs: Parity) {
        self.0 ^= rhs.0;
    }
}

impl std::iter::Sum for Parity {
    fn sum<I: Iterator<Item = Parity>>(iter: I) -> Parity {
        iter.fold(Parity::EVEN, |a, b| a + b)
    }
}

impl Serialize for Parity {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_u8(self.0)
    }
}

impl<'de> Deserialize<'de> for Parity {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = u8::deserialize(d)?;
        if v > 1 {
            return Err(serde::de::Error::custom(format!("parity must be 0 or 1, got {v}")));
        }
        Ok(Parity(v))
    }
}

/// Free module with a homogeneous basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedFreeModule {
    parity: Vec<Parity>,
    labels: Option<Vec<String>>,
}

impl GradedFreeModule {
    pub fn new(parity: Vec<Parity>) -> Self {
        Self {
            parity,
            labels: None,
        }
    }

    pub fn with_labels(parity: Vec<Parity>, labels: Vec<String>) -> Result<Self> {
        if labels.len() != parity.len() {
            return Err(Error::InvalidInput(format!(
                "{} labels for a module of rank {}",
                labels.len(),
                parity.len()
            )));
        }
        Ok(Self {
            parity,
            labels: Some(labels),
        })
    }

    pub fn rank(&self) -> usize {
        self.parity.len()
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.parity[i]
    }

    pub fn parities(&self) -> &[Parity] {
        &self.parity
    }

    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(l) => l[i].clone(),
            None => format!("e{i}"),
        }
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }
}

/// Isomorphism class of a finitely generated Z/2-graded module over one of
/// the supported rings: per parity a free rank and a chain of invariant
/// factors `d1 | d2 | ...`, each at least 2.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GradedModuleInvariants {
    pub even_free_rank: usize,
    pub odd_free_rank: usize,
    pub even_torsion: Vec<BigInt>,
    pub odd_torsion: Vec<BigInt>,
}

/// Brings a list of cyclic orders into invariant factor form. Units are
/// dropped; zeros are not allowed (they are free summands).
pub fn normalize_torsion(mut ds: Vec<BigInt>) -> Vec<BigInt> {
    for d in ds.iter_mut() {
        *d = d.abs();
    }
    ds.retain(|d| !d.is_one());
    debug_assert!(ds.iter().all(|d| !d.is_zero()));
    let n = ds.len();
    for i in 0..n {
        for j in i + 1..n {
            let g = ds[i].gcd(&ds[j]);
            let l = ds[i].lcm(&ds[j]);
            ds[i] = g;
            ds[j] = l;
        }
    }
    ds.retain(|d| !d.is_one());
    ds
}

impl GradedModuleInvariants {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn even_free(rank: usize) -> Self {
        Self {
            even_free_rank: rank,
            ..Self::default()
        }
    }

    pub fn odd_free(rank: usize) -> Self {
        Self {
            odd_free_rank: rank,
            ..Self::default()
        }
    }

    pub fn new(
        even_free_rank: usize,
        odd_free_rank: usize,
        even_torsion: Vec<BigInt>,
        odd_torsion: Vec<BigInt>,
    ) -> Self {
        Self {
            even_free_rank,
            odd_free_rank,
            even_torsion: normalize_torsion(even_torsion),
            odd_torsion: normalize_torsion(odd_torsion),
        }
    }

    /// One parity component.
    pub fn component(parity: Parity, free: usize, torsion: Vec<BigInt>) -> Self {
        if parity.is_odd() {
            Self::new(0, free, Vec::new(), torsion)
        } else {
            Self::new(free, 0, torsion, Vec::new())
        }
    }

    pub fn is_zero(&self) -> bool {
        self.even_free_rank == 0
            && self.odd_free_rank == 0
            && self.even_torsion.is_empty()
            && self.odd_torsion.is_empty()
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut et = self.even_torsion.clone();
        et.extend(other.even_torsion.iter().cloned());
        let mut ot = self.odd_torsion.clone();
        ot.extend(other.odd_torsion.iter().cloned());
        Self::new(
            self.even_free_rank + other.even_free_rank,
            self.odd_free_rank + other.odd_free_rank,
            et,
            ot,
        )
    }

    /// `k` copies.
    pub fn power(&self, k: usize) -> Self {
        (0..k).fold(Self::zero(), |acc, _| acc.direct_sum(self))
    }

    /// The parity change functor: swaps the even and odd components.
    pub fn parity_shift(&self) -> Self {
        Self {
            even_free_rank: self.odd_free_rank,
            odd_free_rank: self.even_free_rank,
            even_torsion: self.odd_torsion.clone(),
            odd_torsion: self.even_torsion.clone(),
        }
    }

    /// Total length over a field: free ranks plus number of torsion
    /// summands. Over a prime field this is the dimension.
    pub fn total_dimension(&self) -> usize {
        self.even_free_rank + self.odd_free_rank + self.even_torsion.len() + self.odd_torsion.len()
    }

    pub fn even_dimension(&self) -> usize {
        self.even_free_rank + self.even_torsion.len()
    }

    pub fn odd_dimension(&self) -> usize {
        self.odd_free_rank + self.odd_torsion.len()
    }

    pub fn is_divisibility_chain(&self) -> bool {
        let chain = |t: &[BigInt]| {
            t.iter().all(|d| d > &BigInt::one())
                && t.windows(2).all(|w| (&w[1] % &w[0]).is_zero())
        };
        chain(&self.even_torsion) && chain(&self.odd_torsion)
    }
}

/// Graded-module isomorphism for finitely generated modules over a PID or
/// field: all four components must agree.
pub fn module_iso_check(a: &GradedModuleInvariants, b: &GradedModuleInvariants) -> bool {
    a == b
}

pub fn parity_shift(a: &GradedModuleInvariants) -> GradedModuleInvariants {
    a.parity_shift()
}

fn fmt_component(free: usize, torsion: &[BigInt]) -> String {
    let mut parts = Vec::new();
    if free > 0 {
        parts.push(if free == 1 {
            "R".to_string()
        } else {
            format!("R^{free}")
        });
    }
    let mut i = 0;
    while i < torsion.len() {
        let mut j = i;
        while j < torsion.len() && torsion[j] == torsion[i] {
            j += 1;
        }
        let k = j - i;
        parts.push(if k == 1 {
            format!("R/{}", torsion[i])
        } else {
            format!("(R/{})^{k}", torsion[i])
        });
        i = j;
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

impl fmt::Display for GradedModuleInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "even: {}; odd: {}",
            fmt_component(self.even_free_rank, &self.even_torsion),
            fmt_component(self.odd_free_rank, &self.odd_torsion)
        )
    }
}

#[derive(Serialize, Deserialize)]
struct InvariantsRepr {
    even_free_rank: usize,
    odd_free_rank: usize,
    even_torsion: Vec<String>,
    odd_torsion: Vec<String>,
}

impl Serialize for GradedModuleInvariants {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        InvariantsRepr {
            even_free_rank: self.even_free_rank,
            odd_free_rank: self.odd_free_rank,
            even_torsion: self.even_torsion.iter().map(|d| d.to_string()).collect(),
            odd_torsion: self.odd_torsion.iter().map(|d| d.to_string()).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for GradedModuleInvariants {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = InvariantsRepr::deserialize(d)?;
        let parse = |v: Vec<String>| -> std::result::Result<Vec<BigInt>, D::Error> {
            v.iter()
                .map(|s| s.parse::<BigInt>().map_err(serde::de::Error::custom))
                .collect()
        };
        Ok(Self::new(
            r.even_free_rank,
            r.odd_free_rank,
            parse(r.even_torsion)?,
            parse(r.odd_torsion)?,
        ))
    }
}
