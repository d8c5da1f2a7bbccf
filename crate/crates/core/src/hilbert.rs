//! Hilbert-Samuel function `H_F(n) = l(M/F_{n+1})` and its polynomial.
//!
//! Samples are produced incrementally on staircases: `F_{n+1} = I F_n + J`
//! past the prefix. Coefficients are read off by exact differencing in the
//! binomial basis `C(n+d-i, d-i)`, so no fitting error can creep in.

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::filtration::GoodFiltration;
use crate::monomial::DEFAULT_BOX_CAP;
use crate::serde_big;
use crate::staircase::Staircase;

pub const DEFAULT_HORIZON_CAP: usize = 256;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertConfig {
    pub horizon_cap: usize,
    pub box_cap: u64,
}

impl Default for HilbertConfig {
    fn default() -> Self {
        Self {
            horizon_cap: DEFAULT_HORIZON_CAP,
            box_cap: DEFAULT_BOX_CAP,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sample {
    pub n: usize,
    #[serde(with = "serde_big::uint")]
    pub value: BigUint,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertData {
    pub dim: usize,
    #[serde(with = "serde_big::int_vec")]
    pub coefficients: Vec<BigInt>,
    pub postulation: usize,
    pub horizon: usize,
    pub samples: Vec<Sample>,
}

impl HilbertData {
    /// `P(n) = sum_i (-1)^i e_i C(n+d-i, d-i)`.
    pub fn polynomial_at(&self, n: usize) -> BigInt {
        hilbert_polynomial(&self.coefficients, self.dim, n)
    }

    pub fn multiplicity(&self) -> &BigInt {
        &self.coefficients[0]
    }
}

pub(crate) fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for t in 0..k {
        acc = acc * BigInt::from(n - t) / BigInt::from(t + 1);
    }
    acc
}

pub fn hilbert_polynomial(e: &[BigInt], d: usize, n: usize) -> BigInt {
    e.iter()
        .enumerate()
        .map(|(i, ei)| {
            let term = ei * binomial(n + d - i, d - i);
            if i % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .sum()
}

/// `max(e_0, |e_1|, ..., |e_s|)` for every `s`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct XiVector(#[serde(with = "serde_big::uint_vec")] pub Vec<BigUint>);

impl XiVector {
    pub fn from_coefficients(e: &[BigInt]) -> Result<Self> {
        let e0 = e
            .first()
            .ok_or_else(|| Error::OutOfRange("empty coefficient list".into()))?;
        if e0.sign() != Sign::Plus {
            return Err(Error::InvalidMultiplicity(e0.to_string()));
        }
        let mut running = BigUint::zero();
        let values = e
            .iter()
            .map(|ei| {
                let a = ei.magnitude();
                if *a > running {
                    running = a.clone();
                }
                running.clone()
            })
            .collect();
        Ok(Self(values))
    }

    /// `xi_s`; indices past the end read the last value (the full `xi`).
    pub fn get(&self, s: usize) -> &BigUint {
        &self.0[s.min(self.0.len() - 1)]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn values(&self) -> &[BigUint] {
        &self.0
    }
}

/// Lazily produces `H(0), H(1), ...` for one filtration.
pub struct HilbertSampler<'a> {
    filtration: &'a GoodFiltration,
    base: Staircase,
    /// Staircase of `F_{next+1}` once the prefix is exhausted.
    current: Option<Staircase>,
    next: usize,
    box_cap: u64,
}

impl<'a> HilbertSampler<'a> {
    pub fn new(filtration: &'a GoodFiltration, box_cap: u64) -> Result<Self> {
        Ok(Self {
            filtration,
            base: Staircase::from_ideal(filtration.base(), box_cap)?,
            current: None,
            next: 0,
            box_cap,
        })
    }

    pub fn next_value(&mut self) -> Result<BigUint> {
        let term_index = self.next + 1;
        let l = self.filtration.prefix_len();
        let st = if term_index <= l {
            Staircase::from_ideal(&self.filtration.term_at(term_index), self.box_cap)?
        } else {
            let prev = self.current.take().expect("previous term computed");
            prev.product(&self.base, self.box_cap)?
                .sum_ideal(self.filtration.module().annihilator())?
        };
        let value = BigUint::from(st.colength());
        self.current = Some(st);
        self.next += 1;
        Ok(value)
    }
}

/// `H_F(n)` computed directly from the term ideal.
pub fn hilbert_samuel(f: &GoodFiltration, n: usize, box_cap: u64) -> Result<BigUint> {
    f.term_at(n + 1).colength_capped(box_cap)
}

fn window_len(d: usize) -> usize {
    (d + 2).max(8)
}

fn initial_horizon(d: usize, prefix_len: usize) -> usize {
    (prefix_len + d + 2).max(2 * (d + 2))
}

fn forward_difference(values: &[BigInt], start: usize, order: usize) -> BigInt {
    (0..=order)
        .map(|t| {
            let term = binomial(order, t) * &values[start + t];
            if (order - t).is_multiple_of(2) {
                term
            } else {
                -term
            }
        })
        .sum()
}

/// Start of the trailing stable window when `D^{d+1} H` vanishes on it.
fn stable_start(values: &[BigInt], d: usize) -> Option<usize> {
    let w = window_len(d);
    let horizon = values.len().checked_sub(1)?;
    let start = horizon.checked_sub(d + w)?;
    (start..start + w)
        .all(|n| forward_difference(values, n, d + 1).is_zero())
        .then_some(start)
}

fn extract(values: &[BigInt], d: usize, n0: usize) -> Vec<BigInt> {
    let mut e: Vec<BigInt> = Vec::with_capacity(d + 1);
    for i in 0..=d {
        let residual: Vec<BigInt> = (n0..=n0 + d)
            .map(|n| {
                let mut r = values[n].clone();
                for (j, ej) in e.iter().enumerate() {
                    let term = ej * binomial(n + d - j, d - j);
                    if j % 2 == 0 {
                        r -= term;
                    } else {
                        r += term;
                    }
                }
                r
            })
            .collect();
        let diff = forward_difference(&residual, 0, d - i);
        e.push(if i % 2 == 0 { diff } else { -diff });
    }
    e
}

fn finish(values: Vec<BigInt>, d: usize, n0: usize) -> Result<HilbertData> {
    let coefficients = extract(&values, d, n0);
    if !coefficients[0].is_positive() {
        return Err(Error::DegreeMismatch(d));
    }
    let horizon = values.len() - 1;
    let postulation = (0..=horizon)
        .rev()
        .find(|&n| hilbert_polynomial(&coefficients, d, n) != values[n])
        .map_or(0, |n| n + 1);
    let samples = values
        .into_iter()
        .enumerate()
        .map(|(n, v)| Sample {
            n,
            value: v.to_biguint().expect("lengths are non-negative"),
        })
        .collect();
    Ok(HilbertData {
        dim: d,
        coefficients,
        postulation,
        horizon,
        samples,
    })
}

fn sample_to(
    sampler: &mut HilbertSampler<'_>,
    values: &mut Vec<BigInt>,
    horizon: usize,
) -> Result<()> {
    while values.len() <= horizon {
        values.push(BigInt::from(sampler.next_value()?));
    }
    Ok(())
}

/// Adaptive fit: sample, double the horizon until the trailing window is
/// polynomial of degree `d`, then extract `e_0..e_d` and the postulation number.
pub fn fit_hilbert_data(f: &GoodFiltration, cfg: &HilbertConfig) -> Result<HilbertData> {
    let d = f.dim();
    let mut sampler = HilbertSampler::new(f, cfg.box_cap)?;
    let mut values = Vec::new();
    let mut horizon = initial_horizon(d, f.prefix_len()).min(cfg.horizon_cap);
    loop {
        sample_to(&mut sampler, &mut values, horizon)?;
        if let Some(n0) = stable_start(&values, d) {
            return finish(values, d, n0);
        }
        if horizon >= cfg.horizon_cap {
            return Err(Error::NonStabilized(horizon));
        }
        horizon = (2 * horizon).min(cfg.horizon_cap);
    }
}

/// Fit on exactly `0..=horizon`, without adapting. Used for re-fit checks.
pub fn fit_at_horizon(f: &GoodFiltration, horizon: usize, box_cap: u64) -> Result<HilbertData> {
    let d = f.dim();
    let mut sampler = HilbertSampler::new(f, box_cap)?;
    let mut values = Vec::new();
    sample_to(&mut sampler, &mut values, horizon)?;
    let n0 = stable_start(&values, d).ok_or(Error::NonStabilized(horizon))?;
    finish(values, d, n0)
}

/// Re-fit at twice the horizon and compare coefficients and postulation.
pub fn refit_agrees(f: &GoodFiltration, data: &HilbertData, box_cap: u64) -> Result<bool> {
    let again = fit_at_horizon(f, 2 * data.horizon, box_cap)?;
    Ok(again.coefficients == data.coefficients && again.postulation == data.postulation)
}

pub fn postulation_number(f: &GoodFiltration, cfg: &HilbertConfig) -> Result<usize> {
    Ok(fit_hilbert_data(f, cfg)?.postulation)
}

/// A filtration together with its fitted invariants.
#[derive(Debug, Clone)]
pub struct Analysis {
    pub filtration: GoodFiltration,
    pub hilbert: HilbertData,
    pub xi: XiVector,
}

impl Analysis {
    pub fn new(filtration: GoodFiltration, cfg: &HilbertConfig) -> Result<Self> {
        let hilbert = fit_hilbert_data(&filtration, cfg)?;
        let xi = XiVector::from_coefficients(&hilbert.coefficients)?;
        Ok(Self {
            filtration,
            hilbert,
            xi,
        })
    }

    pub fn dim(&self) -> usize {
        self.hilbert.dim
    }

    pub fn e(&self, i: usize) -> &BigInt {
        &self.hilbert.coefficients[i]
    }

    pub fn reduction_number(&self) -> usize {
        self.filtration.reduction_number()
    }
}
