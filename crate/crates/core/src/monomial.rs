//! Monomials and monomial ideals in `k[x_1, ..., x_D]`.
//!
//! An ideal is stored by its minimal generating set in a canonical order, so
//! two ideals are equal exactly when their representations are identical. The
//! coefficient field never appears: every length we need is a count of
//! standard monomials.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::staircase::Staircase;

/// Default cap on the volume of the pure-power box enumerated by `colength`.
pub const DEFAULT_BOX_CAP: u64 = 100_000_000;

/// Largest ambient variable count accepted by the exhaustive dimension search.
pub const MAX_AMBIENT: usize = 6;

/// A monomial `x_1^{a_1} ... x_D^{a_D}` given by its exponent vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exponents: Vec<u32>,
}

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Self { exponents }
    }

    pub fn one(ambient: usize) -> Self {
        Self {
            exponents: vec![0; ambient],
        }
    }

    pub fn var(index: usize, ambient: usize) -> Self {
        Self::pure_power(index, 1, ambient)
    }

    pub fn pure_power(index: usize, exponent: u32, ambient: usize) -> Self {
        let mut exponents = vec![0; ambient];
        exponents[index] = exponent;
        Self { exponents }
    }

    pub fn ambient(&self) -> usize {
        self.exponents.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn degree(&self) -> u64 {
        self.exponents.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    /// `Some((i, a))` when the monomial is `x_i^a` with `a > 0`.
    pub fn as_pure_power(&self) -> Option<(usize, u32)> {
        let mut found = None;
        for (i, &e) in self.exponents.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some((i, e));
            }
        }
        found
    }

    /// Componentwise `self <= other`. Both must share the ambient dimension.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.exponents
            .iter()
            .zip(&other.exponents)
            .all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    /// Support: the set of variables with positive exponent, as a bit mask.
    pub fn support_mask(&self) -> u64 {
        self.exponents
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0, |m, (i, _)| m | (1 << i))
    }

    pub(crate) fn with_exponent(&self, index: usize, exponent: u32) -> Monomial {
        let mut exponents = self.exponents.clone();
        exponents[index] = exponent;
        Monomial::new(exponents)
    }

    fn check_ambient(&self, ambient: usize) -> Result<()> {
        if self.ambient() != ambient {
            return Err(Error::DimensionMismatch {
                left: ambient,
                right: self.ambient(),
            });
        }
        Ok(())
    }
}

/// Graded lexicographic order used for generator lists: lower total degree
/// first, then larger exponent vectors first (`x^2 < x*y < y^2`).
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.exponents.cmp(&self.exponents))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exponents)
    }
}

/// A monomial ideal held by its canonical minimal generating set.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    ambient: usize,
    gens: Vec<Monomial>,
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MonomialIdeal")
            .field("ambient", &self.ambient)
            .field("gens", &self.gens)
            .finish()
    }
}

/// Canonical minimal generating set of the ideal spanned by `gens`.
pub fn minimalize(
    ambient: usize,
    gens: impl IntoIterator<Item = Monomial>,
) -> Result<MonomialIdeal> {
    let mut all: Vec<Monomial> = Vec::new();
    for g in gens {
        g.check_ambient(ambient)?;
        all.push(g);
    }
    all.sort_unstable();
    all.dedup();
    // A proper divisor has strictly smaller degree, so it precedes its multiples.
    let mut kept: Vec<Monomial> = Vec::with_capacity(all.len());
    for g in all {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    Ok(MonomialIdeal {
        ambient,
        gens: kept,
    })
}

impl MonomialIdeal {
    pub fn zero(ambient: usize) -> Self {
        Self {
            ambient,
            gens: Vec::new(),
        }
    }

    pub fn unit(ambient: usize) -> Self {
        Self {
            ambient,
            gens: vec![Monomial::one(ambient)],
        }
    }

    /// The maximal ideal `(x_1, ..., x_D)`.
    pub fn maximal(ambient: usize) -> Self {
        let gens = (0..ambient).map(|i| Monomial::var(i, ambient));
        minimalize(ambient, gens).expect("variables share the ambient dimension")
    }

    /// The complete intersection `(x_1^{a_1}, ..., x_D^{a_D})`.
    pub fn pure_powers(exponents: &[u32]) -> Self {
        let ambient = exponents.len();
        let gens = exponents
            .iter()
            .enumerate()
            .map(|(i, &a)| Monomial::pure_power(i, a, ambient));
        minimalize(ambient, gens).expect("pure powers share the ambient dimension")
    }

    pub fn from_generators(
        ambient: usize,
        gens: impl IntoIterator<Item = Monomial>,
    ) -> Result<Self> {
        minimalize(ambient, gens)
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    fn check_same(&self, other: &MonomialIdeal) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch {
                left: self.ambient,
                right: other.ambient,
            });
        }
        Ok(())
    }

    pub fn contains(&self, t: &Monomial) -> Result<bool> {
        t.check_ambient(self.ambient)?;
        Ok(self.gens.iter().any(|g| g.divides(t)))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_same(other)?;
        minimalize(self.ambient, self.gens.iter().chain(&other.gens).cloned())
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_same(other)?;
        let gens = self
            .gens
            .iter()
            .flat_map(|a| other.gens.iter().map(move |b| a.mul(b)));
        minimalize(self.ambient, gens)
    }

    pub fn intersection(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_same(other)?;
        let gens = self
            .gens
            .iter()
            .flat_map(|a| other.gens.iter().map(move |b| a.lcm(b)));
        minimalize(self.ambient, gens)
    }

    pub fn power(&self, n: u32) -> MonomialIdeal {
        let mut acc = MonomialIdeal::unit(self.ambient);
        for _ in 0..n {
            acc = acc.product(self).expect("same ambient");
        }
        acc
    }

    pub fn is_subideal(&self, other: &MonomialIdeal) -> Result<bool> {
        self.check_same(other)?;
        Ok(self
            .gens
            .iter()
            .all(|g| other.gens.iter().any(|h| h.divides(g))))
    }

    pub fn equals(&self, other: &MonomialIdeal) -> Result<bool> {
        self.check_same(other)?;
        Ok(self == other)
    }

    /// For each variable, the exponent of the pure power of it among the
    /// generators (at most one survives minimalization).
    pub fn pure_power_exponents(&self) -> Vec<Option<u32>> {
        let mut out = vec![None; self.ambient];
        if self.is_unit() {
            return vec![Some(0); self.ambient];
        }
        for g in &self.gens {
            if let Some((i, a)) = g.as_pure_power() {
                out[i] = Some(a);
            }
        }
        out
    }

    /// True iff the ideal is primary to `(x_1, ..., x_D)` or is the unit ideal.
    pub fn is_primary_to_max(&self) -> bool {
        self.pure_power_exponents().iter().all(Option::is_some)
    }

    /// `true` iff the generators are exactly one pure power of each variable.
    pub fn is_pure_power_complete_intersection(&self) -> bool {
        !self.is_unit() && self.gens.len() == self.ambient && self.is_primary_to_max()
    }

    /// Number of standard monomials, `dim_k R/I`, with the default box cap.
    pub fn colength(&self) -> Result<BigUint> {
        self.colength_capped(DEFAULT_BOX_CAP)
    }

    pub fn colength_capped(&self, box_cap: u64) -> Result<BigUint> {
        Ok(BigUint::from(
            Staircase::from_ideal(self, box_cap)?.colength(),
        ))
    }

    /// `(I : x_i^infinity)`: every generator with its `x_i` exponent set to zero.
    pub fn saturate_variable(&self, index: usize) -> MonomialIdeal {
        let gens = self.gens.iter().map(|g| g.with_exponent(index, 0));
        minimalize(self.ambient, gens).expect("same ambient")
    }

    /// `(I : m^infinity)`, the intersection of the per-variable saturations.
    pub fn saturate(&self) -> MonomialIdeal {
        if self.is_zero() {
            return self.clone();
        }
        (0..self.ambient)
            .map(|i| self.saturate_variable(i))
            .reduce(|acc, s| acc.intersection(&s).expect("same ambient"))
            .unwrap_or_else(|| MonomialIdeal::unit(self.ambient))
    }

    /// Krull dimension of `R/I`: `D` minus the size of a minimum set of
    /// variables meeting the support of every generator.
    pub fn krull_dim_of_quotient(&self) -> Result<usize> {
        if self.is_unit() {
            return Err(Error::UndefinedDimension);
        }
        if self.ambient > MAX_AMBIENT {
            return Err(Error::AmbientTooLarge(self.ambient, MAX_AMBIENT));
        }
        let supports: Vec<u64> = self.gens.iter().map(Monomial::support_mask).collect();
        let mut masks: Vec<u64> = (0..(1u64 << self.ambient)).collect();
        masks.sort_by_key(|m| m.count_ones());
        let cover = masks
            .into_iter()
            .find(|&mask| supports.iter().all(|s| s & mask != 0))
            .expect("the full variable set covers every non-constant generator");
        Ok(self.ambient - cover.count_ones() as usize)
    }
}
