//! Closed-form bounds on regularity, Hilbert coefficients and lengths, and
//! checkers that compare them with exactly computed invariants.
//!
//! Every evaluator works in exact big-integer arithmetic. Right-hand sides
//! routinely run to hundreds of bits; reports keep them exact and add a
//! decimal digit count plus a `log2(rhs/lhs)` slack.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::filtration::{GoodFiltration, ModulePresentation};
use crate::hilbert::{Analysis, HilbertConfig};
use crate::monomial::MonomialIdeal;
use crate::serde_big;

/// Refuse exponent/bit-size combinations beyond this many result bits.
const MAX_RESULT_BITS: u64 = 1 << 30;

/// Identifies which inequality or identity a report checks. The serialized
/// names are the stable wire identifiers of the report schema.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum StatementId {
    /// `e_0(F) = e_0(F')` for two good filtrations over the same ideal.
    #[serde(rename = "LEMMA_2_2")]
    MultiplicityInvariance,
    /// `e_i(F) = e_i(F / H^0_m(M))` for `i <= d - 1`.
    #[serde(rename = "LEMMA_2_4_I")]
    CoefficientsModuloH0,
    /// `h^0(M)` against the coefficient bound, first level only.
    #[serde(rename = "LEMMA_2_5_I0")]
    H0Bound,
    /// `l(M / Q M)` for a pure-power parameter ideal.
    #[serde(rename = "LEMMA_2_6")]
    ParameterColengthBound,
    /// Postulation number against the regularity bound.
    #[serde(rename = "THM_3_2")]
    RegularityBound,
    #[serde(rename = "THM_3_3_E1")]
    FirstCoefficientBound,
    #[serde(rename = "THM_3_3_E2")]
    SecondCoefficientBound,
    #[serde(rename = "THM_3_3_EI")]
    HigherCoefficientBound,
    /// Coefficient bounds against the `I`-adic filtration.
    #[serde(rename = "COR_3_4")]
    AdicComparison,
    /// Coefficient bounds for `M ⊇ F_1 ⊇ Q F_1 ⊇ ...` against `Q`-adic.
    #[serde(rename = "COR_3_5")]
    ParameterFiltration,
}

impl StatementId {
    pub const ALL: [StatementId; 10] = [
        StatementId::MultiplicityInvariance,
        StatementId::CoefficientsModuloH0,
        StatementId::H0Bound,
        StatementId::ParameterColengthBound,
        StatementId::RegularityBound,
        StatementId::FirstCoefficientBound,
        StatementId::SecondCoefficientBound,
        StatementId::HigherCoefficientBound,
        StatementId::AdicComparison,
        StatementId::ParameterFiltration,
    ];

    pub fn wire_name(self) -> &'static str {
        match self {
            StatementId::MultiplicityInvariance => "LEMMA_2_2",
            StatementId::CoefficientsModuloH0 => "LEMMA_2_4_I",
            StatementId::H0Bound => "LEMMA_2_5_I0",
            StatementId::ParameterColengthBound => "LEMMA_2_6",
            StatementId::RegularityBound => "THM_3_2",
            StatementId::FirstCoefficientBound => "THM_3_3_E1",
            StatementId::SecondCoefficientBound => "THM_3_3_E2",
            StatementId::HigherCoefficientBound => "THM_3_3_EI",
            StatementId::AdicComparison => "COR_3_4",
            StatementId::ParameterFiltration => "COR_3_5",
        }
    }

    pub fn from_wire_name(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|id| id.wire_name() == s)
    }

    pub fn is_equality(self) -> bool {
        matches!(
            self,
            StatementId::MultiplicityInvariance | StatementId::CoefficientsModuloH0
        )
    }

    fn for_coefficient(i: usize) -> Self {
        match i {
            1 => StatementId::FirstCoefficientBound,
            2 => StatementId::SecondCoefficientBound,
            _ => StatementId::HigherCoefficientBound,
        }
    }
}

impl fmt::Display for StatementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.wire_name())
    }
}

/// `log2(rhs / lhs)`; infinite when `lhs <= 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Slack {
    Finite(f64),
    Infinite,
    NegInfinite,
}

impl Slack {
    pub fn between(lhs: &BigInt, rhs: &BigInt) -> Self {
        if !lhs.is_positive() {
            Slack::Infinite
        } else if !rhs.is_positive() {
            Slack::NegInfinite
        } else {
            Slack::Finite(log2_big(rhs.magnitude()) - log2_big(lhs.magnitude()))
        }
    }

    pub fn finite(self) -> Option<f64> {
        match self {
            Slack::Finite(v) => Some(v),
            _ => None,
        }
    }
}

impl fmt::Display for Slack {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Slack::Finite(v) => write!(f, "{v:.2}"),
            Slack::Infinite => f.write_str("inf"),
            Slack::NegInfinite => f.write_str("-inf"),
        }
    }
}

impl Serialize for Slack {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Slack::Finite(v) => s.serialize_f64(*v),
            Slack::Infinite => s.serialize_str("inf"),
            Slack::NegInfinite => s.serialize_str("-inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Slack {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Num(f64),
            Str(String),
        }
        match Repr::deserialize(d)? {
            Repr::Num(v) => Ok(Slack::Finite(v)),
            Repr::Str(s) if s == "inf" => Ok(Slack::Infinite),
            Repr::Str(s) if s == "-inf" => Ok(Slack::NegInfinite),
            Repr::Str(s) => Err(serde::de::Error::custom(format!("invalid slack {s:?}"))),
        }
    }
}

pub fn log2_big(n: &BigUint) -> f64 {
    let bits = n.bits();
    if bits <= 64 {
        return n.to_u64().expect("fits").to_f64().expect("finite").log2();
    }
    let shift = bits - 64;
    let top = (n >> shift).to_u64().expect("64 bits");
    (top as f64).log2() + shift as f64
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct BoundReport {
    pub instance: String,
    pub statement_id: StatementId,
    /// Coefficient index `i` for per-coefficient statements.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub index: Option<usize>,
    #[serde(with = "serde_big::int")]
    pub lhs: BigInt,
    #[serde(with = "serde_big::int")]
    pub rhs: BigInt,
    pub holds: bool,
    pub slack_log2: Slack,
    pub rhs_digits: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub proxy_note: Option<String>,
}

impl BoundReport {
    pub fn new(
        instance: &str,
        statement_id: StatementId,
        index: Option<usize>,
        lhs: BigInt,
        rhs: BigInt,
    ) -> Self {
        let holds = if statement_id.is_equality() {
            lhs == rhs
        } else {
            lhs <= rhs
        };
        let slack_log2 = Slack::between(&lhs, &rhs);
        let rhs_digits = rhs.magnitude().to_str_radix(10).len();
        Self {
            instance: instance.to_string(),
            statement_id,
            index,
            lhs,
            rhs,
            holds,
            slack_log2,
            rhs_digits,
            proxy_note: None,
        }
    }

    pub fn with_note(mut self, note: &str) -> Self {
        self.proxy_note = Some(note.to_string());
        self
    }

    /// Short label such as `THM_3_3_EI[3]`.
    pub fn label(&self) -> String {
        match self.index {
            Some(i) => format!("{}[{i}]", self.statement_id),
            None => self.statement_id.to_string(),
        }
    }
}

pub const REGULARITY_PROXY_NOTE: &str =
    "lhs is the postulation number of F, which never exceeds reg G(F)";
pub const H0_SCOPE_NOTE: &str = "checked at the first level (i = 0) only";
pub const PARAMETER_SCOPE_NOTE: &str =
    "Q is a pure-power complete intersection over M = R; F is the Q-adic filtration";

fn pow_big(base: &BigUint, exp: u64) -> Result<BigUint> {
    if base.bits().saturating_mul(exp) > MAX_RESULT_BITS {
        return Err(Error::OutOfRange(format!(
            "power with exponent {exp} is too large to evaluate"
        )));
    }
    let exp = u32::try_from(exp).map_err(|_| Error::OutOfRange("exponent overflow".into()))?;
    Ok(base.pow(exp))
}

fn factorial(n: u64) -> Result<u64> {
    (1..=n)
        .try_fold(1u64, |acc, k| acc.checked_mul(k))
        .ok_or_else(|| Error::OutOfRange(format!("{n}! overflows")))
}

fn shifted(xi: &BigUint, r: usize) -> BigUint {
    xi + BigUint::from(r) + BigUint::one()
}

fn overflow() -> Error {
    Error::OutOfRange("exponent overflow".into())
}

/// Exponents of `(xi + r' + 1)` and `(xi + r + 1)` in the regularity bound;
/// `(d(d+1)! - d, (d-1)!)` once `d >= 3`.
pub fn regularity_exponents(d: usize) -> Result<(u64, u64)> {
    match d {
        0 => return Err(Error::OutOfRange("dimension must be >= 1".into())),
        1 => return Ok((1, 1)),
        2 => return Ok((6, 1)),
        _ => {}
    }
    let d = d as u64;
    let first = d
        .checked_mul(factorial(d + 1)?)
        .and_then(|v| v.checked_sub(d))
        .ok_or_else(overflow)?;
    Ok((first, factorial(d - 1)?))
}

/// Exponents of `(xi_i + r' + 1)` and `(xi_i + r + 1)` in the coefficient
/// bound; `((i^3+i^2+i) i! - i^2 + 1, i!)` once `i >= 3`.
pub fn coefficient_exponents(i: usize) -> Result<(u64, u64)> {
    match i {
        0 => return Err(Error::OutOfRange("coefficient index must be >= 1".into())),
        1 => return Ok((2, 1)),
        2 => return Ok((17, 2)),
        _ => {}
    }
    let i = i as u64;
    let poly = i
        .checked_pow(3)
        .and_then(|c| c.checked_add(i * i + i))
        .ok_or_else(overflow)?;
    let first = poly
        .checked_mul(factorial(i)?)
        .and_then(|v| v.checked_sub(i * i))
        .and_then(|v| v.checked_add(1))
        .ok_or_else(overflow)?;
    Ok((first, factorial(i)?))
}

/// Upper bound on `reg G(F)` from `xi = xi(F')`, `r = r(F)`, `r' = r(F')`.
pub fn reg_bound(xi: &BigUint, r: usize, r_prime: usize, d: usize) -> Result<BigUint> {
    if d < 1 {
        return Err(Error::OutOfRange("dimension must be >= 1".into()));
    }
    if xi.is_zero() {
        return Err(Error::OutOfRange("xi must be >= 1".into()));
    }
    let a = shifted(xi, r_prime);
    let b = shifted(xi, r);
    let (ea, eb) = regularity_exponents(d)?;
    let offset = match d {
        1 => 2,
        2 => 3,
        _ => d,
    };
    Ok(pow_big(&a, ea)? * pow_big(&b, eb)? - BigUint::from(offset))
}

/// Upper bound on `|e_i(F)|` from `xi_i = xi_i(F')`, `r = r(F)`, `r' = r(F')`.
pub fn coeff_bound(i: usize, xi_i: &BigUint, r: usize, r_prime: usize) -> Result<BigUint> {
    if i < 1 {
        return Err(Error::OutOfRange("coefficient index must be >= 1".into()));
    }
    if xi_i.is_zero() {
        return Err(Error::OutOfRange("xi must be >= 1".into()));
    }
    let a = shifted(xi_i, r_prime);
    let b = shifted(xi_i, r);
    let (ea, eb) = coefficient_exponents(i)?;
    Ok(xi_i * pow_big(&a, ea)? * pow_big(&b, eb)?)
}

/// `sum_{k=0}^{i} xi_{d-i+k} (xi_{d-i-1+k} + r + 1)^{(d-i+k) (d-i+k)!}`.
pub fn h0_bound(i: usize, xi: &[BigUint], r: usize, d: usize) -> Result<BigUint> {
    if d < 1 || i > d - 1 {
        return Err(Error::OutOfRange(format!(
            "level {i} outside 0..={}",
            d.saturating_sub(1)
        )));
    }
    if xi.len() != d + 1 {
        return Err(Error::OutOfRange(format!(
            "xi has length {}, expected {}",
            xi.len(),
            d + 1
        )));
    }
    let mut total = BigUint::zero();
    for k in 0..=i {
        let top = d - i + k;
        let exp = (top as u64)
            .checked_mul(factorial(top as u64)?)
            .ok_or_else(overflow)?;
        total += &xi[top] * pow_big(&shifted(&xi[top - 1], r), exp)?;
    }
    Ok(total)
}

/// `sum_{k=0}^{d} xi_k (xi_{k-1} + r + 1)^{k k!}` with `xi_{-1} = 0`.
pub fn b_bound(xi: &[BigUint], r: usize, d: usize) -> Result<BigUint> {
    if d < 1 {
        return Err(Error::OutOfRange("dimension must be >= 1".into()));
    }
    if xi.len() != d + 1 {
        return Err(Error::OutOfRange(format!(
            "xi has length {}, expected {}",
            xi.len(),
            d + 1
        )));
    }
    let mut total = BigUint::zero();
    for (k, xk) in xi.iter().enumerate() {
        let previous = if k == 0 {
            BigUint::zero()
        } else {
            xi[k - 1].clone()
        };
        let exp = (k as u64)
            .checked_mul(factorial(k as u64)?)
            .ok_or_else(overflow)?;
        total += xk * pow_big(&shifted(&previous, r), exp)?;
    }
    Ok(total)
}

fn big(v: BigUint) -> BigInt {
    BigInt::from(v)
}

fn ensure_comparable(f: &GoodFiltration, fp: &GoodFiltration) -> Result<()> {
    if f.module().annihilator() != fp.module().annihilator() {
        return Err(Error::ModuleMismatch);
    }
    if f.base() != fp.base() {
        return Err(Error::BaseIdealMismatch);
    }
    Ok(())
}

fn coefficient_reports(
    instance: &str,
    f: &Analysis,
    xi: &crate::hilbert::XiVector,
    r: usize,
    r_prime: usize,
    label: Option<StatementId>,
) -> Result<Vec<BoundReport>> {
    (1..=f.dim())
        .map(|i| {
            let id = label.unwrap_or_else(|| StatementId::for_coefficient(i));
            let rhs = coeff_bound(i, xi.get(i), r, r_prime)?;
            Ok(BoundReport::new(
                instance,
                id,
                Some(i),
                BigInt::from(f.e(i).magnitude().clone()),
                big(rhs),
            ))
        })
        .collect()
}

/// Multiplicity equality, regularity proxy and coefficient bounds for `(F, F')`.
pub fn pair_reports(instance: &str, f: &Analysis, fp: &Analysis) -> Result<Vec<BoundReport>> {
    ensure_comparable(&f.filtration, &fp.filtration)?;
    let d = f.dim();
    let r = f.reduction_number();
    let r_prime = fp.reduction_number();
    let mut out = vec![BoundReport::new(
        instance,
        StatementId::MultiplicityInvariance,
        None,
        f.e(0).clone(),
        fp.e(0).clone(),
    )];
    let reg = reg_bound(fp.xi.get(d), r, r_prime, d)?;
    out.push(
        BoundReport::new(
            instance,
            StatementId::RegularityBound,
            None,
            BigInt::from(f.hilbert.postulation),
            big(reg),
        )
        .with_note(REGULARITY_PROXY_NOTE),
    );
    out.extend(coefficient_reports(instance, f, &fp.xi, r, r_prime, None)?);
    Ok(out)
}

pub fn check_pair(
    instance: &str,
    f: &GoodFiltration,
    fp: &GoodFiltration,
    cfg: &HilbertConfig,
) -> Result<Vec<BoundReport>> {
    ensure_comparable(f, fp)?;
    let a = Analysis::new(f.clone(), cfg)?;
    let b = Analysis::new(fp.clone(), cfg)?;
    pair_reports(instance, &a, &b)
}

/// Coefficient bounds of `F` against the `I`-adic filtration `adic`.
pub fn adic_comparison_reports(
    instance: &str,
    f: &Analysis,
    adic: &Analysis,
) -> Result<Vec<BoundReport>> {
    ensure_comparable(&f.filtration, &adic.filtration)?;
    coefficient_reports(
        instance,
        f,
        &adic.xi,
        f.reduction_number(),
        0,
        Some(StatementId::AdicComparison),
    )
}

pub fn check_adic_comparison(
    instance: &str,
    f: &GoodFiltration,
    cfg: &HilbertConfig,
) -> Result<Vec<BoundReport>> {
    let adic = GoodFiltration::adic(f.base().clone(), f.module().clone())?;
    let a = Analysis::new(f.clone(), cfg)?;
    let b = Analysis::new(adic, cfg)?;
    adic_comparison_reports(instance, &a, &b)
}

/// Coefficient bounds of the filtration `e = {F_1, Q F_1, ...}` against the
/// `Q`-adic filtration, with reduction numbers 1 and 0, plus the length bound
/// on `R/Q`.
pub fn parameter_reports(
    instance: &str,
    e: &Analysis,
    q_adic: &Analysis,
    box_cap: u64,
) -> Result<Vec<BoundReport>> {
    ensure_comparable(&e.filtration, &q_adic.filtration)?;
    let mut out = coefficient_reports(
        instance,
        e,
        &q_adic.xi,
        1,
        0,
        Some(StatementId::ParameterFiltration),
    )?;
    let q = q_adic.filtration.base();
    let colength = q.colength_capped(box_cap)?;
    let rhs = b_bound(q_adic.xi.values(), q_adic.reduction_number(), q_adic.dim())?;
    out.push(
        BoundReport::new(
            instance,
            StatementId::ParameterColengthBound,
            None,
            big(colength),
            big(rhs),
        )
        .with_note(PARAMETER_SCOPE_NOTE),
    );
    Ok(out)
}

pub fn parameter_filtrations(
    first: &MonomialIdeal,
    q: &MonomialIdeal,
) -> Result<(GoodFiltration, GoodFiltration)> {
    if !q.is_pure_power_complete_intersection() {
        return Err(Error::NotCompleteIntersection);
    }
    let r = ModulePresentation::free(q.ambient())?;
    let e = GoodFiltration::e_filtration(first.clone(), q.clone(), r.clone())?;
    let q_adic = GoodFiltration::adic(q.clone(), r)?;
    Ok((e, q_adic))
}

pub fn check_parameter_filtration(
    instance: &str,
    first: &MonomialIdeal,
    q: &MonomialIdeal,
    cfg: &HilbertConfig,
) -> Result<Vec<BoundReport>> {
    let (e, q_adic) = parameter_filtrations(first, q)?;
    let a = Analysis::new(e, cfg)?;
    let b = Analysis::new(q_adic, cfg)?;
    parameter_reports(instance, &a, &b, cfg.box_cap)
}

pub fn h0_report(instance: &str, f: &Analysis) -> Result<BoundReport> {
    let d = f.dim();
    let rhs = h0_bound(0, f.xi.values(), f.reduction_number(), d)?;
    Ok(BoundReport::new(
        instance,
        StatementId::H0Bound,
        None,
        big(f.filtration.module().h0().clone()),
        big(rhs),
    )
    .with_note(H0_SCOPE_NOTE))
}

pub fn check_h0_bound(
    instance: &str,
    f: &GoodFiltration,
    cfg: &HilbertConfig,
) -> Result<BoundReport> {
    h0_report(instance, &Analysis::new(f.clone(), cfg)?)
}

/// `e_i(F) = e_i(F-bar)` for `0 <= i <= d - 1`; `bar` is over `M / H^0_m(M)`.
pub fn h0_quotient_reports(instance: &str, f: &Analysis, bar: &Analysis) -> Vec<BoundReport> {
    (0..f.dim())
        .map(|i| {
            BoundReport::new(
                instance,
                StatementId::CoefficientsModuloH0,
                Some(i),
                f.e(i).clone(),
                bar.e(i).clone(),
            )
        })
        .collect()
}

pub fn check_coefficients_mod_h0(
    instance: &str,
    f: &GoodFiltration,
    cfg: &HilbertConfig,
) -> Result<Vec<BoundReport>> {
    let a = Analysis::new(f.clone(), cfg)?;
    let b = Analysis::new(f.quotient_by_h0()?, cfg)?;
    Ok(h0_quotient_reports(instance, &a, &b))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(v: u64) -> BigUint {
        BigUint::from(v)
    }

    fn us(v: &[u64]) -> Vec<BigUint> {
        v.iter().map(|&x| u(x)).collect()
    }

    #[test]
    fn regularity_bound_values() {
        assert_eq!(reg_bound(&u(1), 0, 0, 1).unwrap(), u(2));
        assert_eq!(reg_bound(&u(1), 0, 0, 2).unwrap(), u(125));
        assert_eq!(reg_bound(&u(4), 1, 0, 2).unwrap(), u(93747));
        // d = 3: 2^69 * 2^2 - 3
        assert_eq!(reg_bound(&u(1), 0, 0, 3).unwrap(), (u(1) << 71usize) - u(3));
        assert!(reg_bound(&u(1), 0, 0, 0).is_err());
    }

    #[test]
    fn exponent_facts() {
        assert_eq!(coefficient_exponents(3).unwrap(), (226, 6));
        assert_eq!(regularity_exponents(3).unwrap(), (69, 2));
    }

    #[test]
    fn coefficient_bound_values() {
        assert_eq!(coeff_bound(1, &u(4), 1, 0).unwrap(), u(600));
        assert_eq!(coeff_bound(2, &u(1), 1, 0).unwrap(), u(1_179_648));
        assert_eq!(coeff_bound(3, &u(1), 0, 0).unwrap(), u(1) << 232usize);
        assert!(coeff_bound(0, &u(1), 0, 0).is_err());
    }

    #[test]
    fn h0_bound_values() {
        assert_eq!(h0_bound(0, &us(&[1, 1]), 0, 1).unwrap(), u(2));
        assert_eq!(h0_bound(0, &us(&[4, 4, 4]), 0, 2).unwrap(), u(2500));
        assert_eq!(h0_bound(1, &us(&[4, 4, 4]), 0, 2).unwrap(), u(2520));
        assert!(h0_bound(2, &us(&[4, 4, 4]), 0, 2).is_err());
    }

    #[test]
    fn b_bound_values() {
        assert_eq!(b_bound(&us(&[4, 4, 4]), 0, 2).unwrap(), u(2524));
        assert_eq!(b_bound(&us(&[1, 1]), 0, 1).unwrap(), u(3));
        assert_eq!(b_bound(&us(&[1, 1, 1]), 1, 2).unwrap(), u(85));
        assert!(b_bound(&us(&[1, 1]), 0, 2).is_err());
    }

    #[test]
    fn report_verdicts_and_slack() {
        let r = BoundReport::new(
            "t",
            StatementId::FirstCoefficientBound,
            Some(1),
            3.into(),
            600.into(),
        );
        assert!(r.holds);
        assert_eq!(r.rhs_digits, 3);
        let s = r.slack_log2.finite().unwrap();
        assert!((s - (200f64).log2()).abs() < 1e-12);
        let zero = BoundReport::new("t", StatementId::RegularityBound, None, 0.into(), 2.into());
        assert_eq!(zero.slack_log2, Slack::Infinite);
        let eq = BoundReport::new(
            "t",
            StatementId::MultiplicityInvariance,
            None,
            4.into(),
            5.into(),
        );
        assert!(!eq.holds);
    }

    #[test]
    fn log2_of_huge_values() {
        let v = u(3) << 1000usize;
        assert!((log2_big(&v) - (1000.0 + 3f64.log2())).abs() < 1e-9);
    }

    #[test]
    fn wire_names_round_trip() {
        for id in StatementId::ALL {
            assert_eq!(StatementId::from_wire_name(id.wire_name()), Some(id));
            let json = serde_json::to_string(&id).unwrap();
            assert_eq!(json, format!("\"{}\"", id.wire_name()));
        }
    }
}
