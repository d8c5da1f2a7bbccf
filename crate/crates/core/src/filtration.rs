//! Modules `M = R/J` and good `I`-filtrations of them.
//!
//! Terms are stored as ideals of `R`; every comparison between terms is made
//! after adding `J`. A filtration is given by a finite prefix `G_1, ..., G_L`
//! and continues `I`-adically: `F_n = I^{n-L} G_L + J` for `n > L`. The zeroth
//! term is always `M` itself.

use std::fmt;

use num_bigint::BigUint;
use thiserror::Error;

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModulePresentation {
    annihilator: MonomialIdeal,
    dim: usize,
    h0: BigUint,
}

/// `l(sat(J)/J)`, counted over the box `t_i < max_g g_i`: a monomial of
/// `sat(J)` with `t_i` at least every generator's `x_i` exponent is in `J`.
fn local_cohomology_length(j: &MonomialIdeal) -> u64 {
    if j.is_zero() {
        return 0;
    }
    let sat = j.saturate();
    let d = j.ambient();
    let mut bounds = vec![0u32; d];
    for g in j.generators() {
        for (b, &e) in bounds.iter_mut().zip(g.exponents()) {
            *b = (*b).max(e);
        }
    }
    if bounds.contains(&0) {
        return 0;
    }
    let mut count = 0;
    let mut point = vec![0u32; d];
    loop {
        let t = Monomial::new(point.clone());
        if sat.generators().iter().any(|g| g.divides(&t))
            && !j.generators().iter().any(|g| g.divides(&t))
        {
            count += 1;
        }
        let mut a = 0;
        loop {
            if a == d {
                return count;
            }
            point[a] += 1;
            if point[a] < bounds[a] {
                break;
            }
            point[a] = 0;
            a += 1;
        }
    }
}

impl ModulePresentation {
    pub fn new(annihilator: MonomialIdeal) -> Result<Self> {
        let dim = annihilator.krull_dim_of_quotient()?;
        if dim == 0 {
            return Err(Error::DimensionZero(0));
        }
        let h0 = BigUint::from(local_cohomology_length(&annihilator));
        Ok(Self {
            annihilator,
            dim,
            h0,
        })
    }

    /// `M = R`.
    pub fn free(ambient: usize) -> Result<Self> {
        Self::new(MonomialIdeal::zero(ambient))
    }

    pub fn ambient(&self) -> usize {
        self.annihilator.ambient()
    }

    pub fn annihilator(&self) -> &MonomialIdeal {
        &self.annihilator
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn h0(&self) -> &BigUint {
        &self.h0
    }

    pub fn is_free(&self) -> bool {
        self.annihilator.is_zero()
    }

    /// `M / H^0_m(M) = R / sat(J)`.
    pub fn quotient_by_h0(&self) -> ModulePresentation {
        let sat = self.annihilator.saturate();
        Self {
            annihilator: sat,
            dim: self.dim,
            h0: BigUint::from(0u32),
        }
    }
}

/// A failed filtration axiom. Indices follow the term numbering `F_n`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Violation {
    #[error("base ideal is not primary to the maximal ideal")]
    BaseNotPrimary,
    /// `F_index` is not contained in `F_{index-1}`.
    #[error("chain is not descending: F_{index} is not contained in F_{}", index - 1)]
    NotDescending { index: usize },
    /// `I * F_index` is not contained in `F_{index+1}`.
    #[error("I-stability fails: I*F_{index} is not contained in F_{}", index + 1)]
    NotStable { index: usize },
}

impl Violation {
    pub fn code(&self) -> &'static str {
        match self {
            Violation::BaseNotPrimary => "base_not_primary",
            Violation::NotDescending { .. } => "not_descending",
            Violation::NotStable { .. } => "not_stable",
        }
    }

    pub fn index(&self) -> Option<usize> {
        match self {
            Violation::BaseNotPrimary => None,
            Violation::NotDescending { index } | Violation::NotStable { index } => Some(*index),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn first(&self) -> Option<&Violation> {
        self.violations.first()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.first() {
            None => write!(f, "valid"),
            Some(v) => write!(f, "invalid: {v}"),
        }
    }
}

fn check_ambient(module: &ModulePresentation, ideal: &MonomialIdeal) -> Result<()> {
    if ideal.ambient() != module.ambient() {
        return Err(Error::DimensionMismatch {
            left: module.ambient(),
            right: ideal.ambient(),
        });
    }
    Ok(())
}

/// Checks every filtration axiom on raw parts. An empty prefix stands for the
/// adic filtration `[base]`.
pub fn validate_parts(
    module: &ModulePresentation,
    base: &MonomialIdeal,
    prefix: &[MonomialIdeal],
) -> Result<ValidationReport> {
    check_ambient(module, base)?;
    for g in prefix {
        check_ambient(module, g)?;
    }
    let j = module.annihilator();
    let mut report = ValidationReport::default();
    if !base.is_primary_to_max() {
        report.violations.push(Violation::BaseNotPrimary);
    }
    let mut previous = MonomialIdeal::unit(module.ambient());
    for (k, g) in prefix.iter().enumerate() {
        let n = k + 1;
        let with_j = g.sum(j)?;
        if n >= 2 && !g.is_subideal(&previous.sum(j)?)? {
            report
                .violations
                .push(Violation::NotDescending { index: n });
        }
        if !base.product(&previous)?.is_subideal(&with_j)? {
            report
                .violations
                .push(Violation::NotStable { index: n - 1 });
        }
        previous = g.clone();
    }
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoodFiltration {
    module: ModulePresentation,
    base: MonomialIdeal,
    prefix: Vec<MonomialIdeal>,
    reduction_number: usize,
}

impl GoodFiltration {
    /// Validates the parts and caches the reduction number.
    pub fn new(
        module: ModulePresentation,
        base: MonomialIdeal,
        prefix: Vec<MonomialIdeal>,
    ) -> Result<Self> {
        let prefix = if prefix.is_empty() {
            vec![base.clone()]
        } else {
            prefix
        };
        let report = validate_parts(&module, &base, &prefix)?;
        if let Some(v) = report.first() {
            return Err(Error::InvalidFiltration(v.clone()));
        }
        let mut f = Self {
            module,
            base,
            prefix,
            reduction_number: 0,
        };
        f.reduction_number = f.compute_reduction_number()?;
        Ok(f)
    }

    /// The `I`-adic filtration `{I^n M}`.
    pub fn adic(base: MonomialIdeal, module: ModulePresentation) -> Result<Self> {
        if !base.is_primary_to_max() {
            return Err(Error::NotPrimary);
        }
        Self::new(module, base.clone(), vec![base])
    }

    /// `M ⊇ F_1 ⊇ Q F_1 ⊇ Q^2 F_1 ⊇ ...`, a good `Q`-filtration when `Q ⊆ F_1 + J`.
    pub fn e_filtration(
        first: MonomialIdeal,
        parameter: MonomialIdeal,
        module: ModulePresentation,
    ) -> Result<Self> {
        check_ambient(&module, &first)?;
        check_ambient(&module, &parameter)?;
        if !parameter.is_primary_to_max() {
            return Err(Error::NotPrimary);
        }
        if !parameter.is_subideal(&first.sum(module.annihilator())?)? {
            return Err(Error::NotParameterFiltration);
        }
        Self::new(module, parameter, vec![first])
    }

    pub fn module(&self) -> &ModulePresentation {
        &self.module
    }

    pub fn base(&self) -> &MonomialIdeal {
        &self.base
    }

    pub fn prefix(&self) -> &[MonomialIdeal] {
        &self.prefix
    }

    pub fn prefix_len(&self) -> usize {
        self.prefix.len()
    }

    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    pub fn ambient(&self) -> usize {
        self.module.ambient()
    }

    pub fn reduction_number(&self) -> usize {
        self.reduction_number
    }

    pub fn validate(&self) -> ValidationReport {
        validate_parts(&self.module, &self.base, &self.prefix)
            .expect("ambient checked at construction")
    }

    /// `F_n` as an ideal of `R` containing `J`; `F_0` is the unit ideal.
    pub fn term_at(&self, n: usize) -> MonomialIdeal {
        let j = self.module.annihilator();
        if n == 0 {
            return MonomialIdeal::unit(self.ambient());
        }
        let l = self.prefix.len();
        let mut term = self.prefix[n.min(l) - 1].sum(j).expect("same ambient");
        for _ in l..n {
            term = self
                .base
                .product(&term)
                .and_then(|t| t.sum(j))
                .expect("same ambient");
        }
        term
    }

    fn compute_reduction_number(&self) -> Result<usize> {
        let j = self.module.annihilator();
        let mut last_mismatch = None;
        let mut current = MonomialIdeal::unit(self.ambient());
        for n in 0..self.prefix.len() {
            let next = self.prefix[n].sum(j)?;
            let expected = self.base.product(&current)?.sum(j)?;
            if next != expected {
                last_mismatch = Some(n);
            }
            current = next;
        }
        Ok(last_mismatch.map_or(0, |n| n + 1))
    }

    /// `F / H^0_m(M)`: same base and prefix over `R / sat(J)`.
    pub fn quotient_by_h0(&self) -> Result<GoodFiltration> {
        Self::new(
            self.module.quotient_by_h0(),
            self.base.clone(),
            self.prefix.clone(),
        )
    }

    /// Canonical text encoding, stable across runs, used for cache keys.
    pub fn canonical_encoding(&self) -> String {
        fn enc(i: &MonomialIdeal) -> String {
            let gens: Vec<String> = i
                .generators()
                .iter()
                .map(|g| {
                    g.exponents()
                        .iter()
                        .map(u32::to_string)
                        .collect::<Vec<_>>()
                        .join(",")
                })
                .collect();
            format!("[{}]", gens.join(";"))
        }
        let prefix: Vec<String> = self.prefix.iter().map(enc).collect();
        format!(
            "D={};J={};I={};P={}",
            self.ambient(),
            enc(self.module.annihilator()),
            enc(&self.base),
            prefix.join("")
        )
    }
}
