//! Dense height-map representation of an m-primary monomial ideal.
//!
//! For `I` primary to the maximal ideal, let `b_i` be the exponent of the pure
//! power of `x_i` in `I`. Every standard monomial lies in the box
//! `[0, b_1) x ... x [0, b_D)`. Over the leading `D - 1` coordinates of that
//! box we store, for each cell `c`, the least `k` with `x^c * x_D^k` in `I`.
//! The colength is the sum of the heights, and products and sums of ideals
//! become min-plus scatters followed by a prefix-minimum sweep. This is the
//! counting kernel behind every Hilbert-Samuel sample.

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Staircase {
    /// Pure-power exponents `b_1..b_D`; all zero for the unit ideal.
    extents: Vec<u32>,
    /// Row-major over the leading `D - 1` extents.
    heights: Vec<u32>,
}

fn box_volume(extents: &[u32]) -> u128 {
    extents.iter().map(|&e| u128::from(e)).product()
}

fn check_cap(extents: &[u32], cap: u64) -> Result<()> {
    let volume = box_volume(extents);
    if volume > u128::from(cap) {
        return Err(Error::BoxCapExceeded { volume, cap });
    }
    Ok(())
}

fn strides(lead: &[u32]) -> Vec<usize> {
    let mut s = vec![1usize; lead.len()];
    for k in (0..lead.len().saturating_sub(1)).rev() {
        s[k] = s[k + 1] * lead[k + 1] as usize;
    }
    s
}

fn cell_count(lead: &[u32]) -> usize {
    lead.iter().map(|&e| e as usize).product()
}

impl Staircase {
    pub fn from_ideal(ideal: &MonomialIdeal, box_cap: u64) -> Result<Self> {
        let pure = ideal.pure_power_exponents();
        let extents: Vec<u32> = pure
            .iter()
            .map(|p| p.ok_or(Error::InfiniteColength))
            .collect::<Result<_>>()?;
        check_cap(&extents, box_cap)?;
        if ideal.is_unit() {
            return Ok(Self::unit(ideal.ambient()));
        }
        let mut st = Self::filled(extents);
        st.scatter(ideal.generators().iter().map(|g| {
            let (lead, last) = g.exponents().split_at(g.ambient() - 1);
            (lead.to_vec(), last[0])
        }));
        st.close();
        Ok(st)
    }

    fn unit(ambient: usize) -> Self {
        Self {
            extents: vec![0; ambient],
            heights: Vec::new(),
        }
    }

    fn filled(extents: Vec<u32>) -> Self {
        let (lead, last) = extents.split_at(extents.len() - 1);
        let heights = vec![last[0]; cell_count(lead)];
        Self { extents, heights }
    }

    pub fn ambient(&self) -> usize {
        self.extents.len()
    }

    pub fn extents(&self) -> &[u32] {
        &self.extents
    }

    pub fn is_unit(&self) -> bool {
        self.extents.contains(&0)
    }

    fn lead(&self) -> &[u32] {
        &self.extents[..self.extents.len() - 1]
    }

    fn last(&self) -> u32 {
        self.extents[self.extents.len() - 1]
    }

    fn index_of(&self, coords: &[u32]) -> Option<usize> {
        let lead = self.lead();
        let s = strides(lead);
        let mut idx = 0;
        for (k, &c) in coords.iter().enumerate() {
            if c >= lead[k] {
                return None;
            }
            idx += s[k] * c as usize;
        }
        Some(idx)
    }

    /// Lower heights at the given leading coordinates; cells outside the box are ignored.
    fn scatter(&mut self, points: impl IntoIterator<Item = (Vec<u32>, u32)>) {
        let s = strides(self.lead());
        let lead = self.lead().to_vec();
        'points: for (coords, h) in points {
            let mut idx = 0;
            for (k, &c) in coords.iter().enumerate() {
                if c >= lead[k] {
                    continue 'points;
                }
                idx += s[k] * c as usize;
            }
            let slot = &mut self.heights[idx];
            *slot = (*slot).min(h);
        }
    }

    /// Prefix-minimum along every leading axis, restoring upward closure.
    fn close(&mut self) {
        let lead = self.lead().to_vec();
        let s = strides(&lead);
        for axis in 0..lead.len() {
            let stride = s[axis];
            let extent = lead[axis] as usize;
            for idx in 0..self.heights.len() {
                if (idx / stride) % extent >= 1 {
                    let prev = self.heights[idx - stride];
                    if prev < self.heights[idx] {
                        self.heights[idx] = prev;
                    }
                }
            }
        }
    }

    /// Number of standard monomials.
    pub fn colength(&self) -> u64 {
        if self.is_unit() {
            return 0;
        }
        self.heights.iter().map(|&h| u64::from(h)).sum()
    }

    pub fn contains(&self, t: &Monomial) -> bool {
        if self.is_unit() {
            return true;
        }
        let (lead, last) = t.exponents().split_at(t.ambient() - 1);
        match self.index_of(lead) {
            Some(idx) => last[0] >= self.heights[idx],
            None => true,
        }
    }

    /// Minimal generators as (leading exponents, last exponent) pairs.
    fn corners(&self) -> Vec<(Vec<u32>, u32)> {
        let d = self.ambient();
        if self.is_unit() {
            return vec![(vec![0; d - 1], 0)];
        }
        let lead = self.lead().to_vec();
        let s = strides(&lead);
        let mut out = Vec::new();
        let mut coords = vec![0u32; lead.len()];
        for idx in 0..self.heights.len() {
            let h = self.heights[idx];
            let corner = (0..lead.len()).all(|a| coords[a] == 0 || h < self.heights[idx - s[a]]);
            if corner {
                out.push((coords.clone(), h));
            }
            // odometer, last coordinate fastest
            for a in (0..coords.len()).rev() {
                coords[a] += 1;
                if coords[a] < lead[a] {
                    break;
                }
                coords[a] = 0;
            }
        }
        for (a, &e) in lead.iter().enumerate() {
            let mut c = vec![0; lead.len()];
            c[a] = e;
            out.push((c, 0));
        }
        out
    }

    pub fn to_ideal(&self) -> MonomialIdeal {
        let d = self.ambient();
        let gens = self.corners().into_iter().map(|(mut lead, h)| {
            lead.push(h);
            Monomial::new(lead)
        });
        MonomialIdeal::from_generators(d, gens).expect("corners share the ambient dimension")
    }

    /// Staircase of the product ideal.
    pub fn product(&self, other: &Staircase, box_cap: u64) -> Result<Staircase> {
        if self.ambient() != other.ambient() {
            return Err(Error::DimensionMismatch {
                left: self.ambient(),
                right: other.ambient(),
            });
        }
        if self.is_unit() {
            return Ok(other.clone());
        }
        if other.is_unit() {
            return Ok(self.clone());
        }
        let extents: Vec<u32> = self
            .extents
            .iter()
            .zip(&other.extents)
            .map(|(a, b)| a + b)
            .collect();
        check_cap(&extents, box_cap)?;
        let mut out = Self::filled(extents);
        let left = self.corners();
        let right = other.corners();
        out.scatter(left.iter().flat_map(|(la, ha)| {
            right.iter().map(move |(lb, hb)| {
                let lead = la.iter().zip(lb).map(|(a, b)| a + b).collect();
                (lead, ha + hb)
            })
        }));
        out.close();
        Ok(out)
    }

    /// Staircase of `self + J` for an arbitrary monomial ideal `J`.
    pub fn sum_ideal(&self, j: &MonomialIdeal) -> Result<Staircase> {
        if self.ambient() != j.ambient() {
            return Err(Error::DimensionMismatch {
                left: self.ambient(),
                right: j.ambient(),
            });
        }
        if self.is_unit() || j.is_unit() {
            return Ok(Self::unit(self.ambient()));
        }
        if j.is_zero() {
            return Ok(self.clone());
        }
        let extents: Vec<u32> = self
            .extents
            .iter()
            .zip(j.pure_power_exponents())
            .map(|(&e, p)| p.map_or(e, |p| p.min(e)))
            .collect();
        let mut out = Self::filled(extents);
        let new_lead = out.lead().to_vec();
        let old_strides = strides(self.lead());
        let mut coords = vec![0u32; new_lead.len()];
        let last = out.last();
        for idx in 0..out.heights.len() {
            let old_idx: usize = coords
                .iter()
                .zip(&old_strides)
                .map(|(&c, &s)| c as usize * s)
                .sum();
            out.heights[idx] = self.heights[old_idx].min(last);
            for a in (0..coords.len()).rev() {
                coords[a] += 1;
                if coords[a] < new_lead[a] {
                    break;
                }
                coords[a] = 0;
            }
        }
        out.scatter(j.generators().iter().map(|g| {
            let (lead, last) = g.exponents().split_at(g.ambient() - 1);
            (lead.to_vec(), last[0])
        }));
        out.close();
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::{minimalize, DEFAULT_BOX_CAP};

    fn ideal(gens: &[&[u32]]) -> MonomialIdeal {
        minimalize(
            gens[0].len(),
            gens.iter().map(|g| Monomial::new(g.to_vec())),
        )
        .unwrap()
    }

    #[test]
    fn round_trips_through_generators() {
        let i = ideal(&[&[3, 0, 0], &[1, 1, 0], &[0, 2, 1], &[0, 0, 2], &[0, 4, 0]]);
        let st = Staircase::from_ideal(&i, DEFAULT_BOX_CAP).unwrap();
        assert_eq!(st.to_ideal(), i);
    }

    #[test]
    fn one_variable() {
        let i = ideal(&[&[5]]);
        let st = Staircase::from_ideal(&i, DEFAULT_BOX_CAP).unwrap();
        assert_eq!(st.colength(), 5);
        assert_eq!(st.to_ideal(), i);
        let sq = st.product(&st, DEFAULT_BOX_CAP).unwrap();
        assert_eq!(sq.colength(), 10);
    }

    #[test]
    fn product_matches_generator_product() {
        let a = ideal(&[&[2, 0], &[1, 1], &[0, 3]]);
        let b = ideal(&[&[1, 0], &[0, 2]]);
        let sa = Staircase::from_ideal(&a, DEFAULT_BOX_CAP).unwrap();
        let sb = Staircase::from_ideal(&b, DEFAULT_BOX_CAP).unwrap();
        let p = sa.product(&sb, DEFAULT_BOX_CAP).unwrap();
        assert_eq!(p.to_ideal(), a.product(&b).unwrap());
    }

    #[test]
    fn sum_with_non_primary_ideal() {
        let mm = MonomialIdeal::maximal(2).power(4);
        let j = ideal(&[&[2, 0], &[1, 1]]);
        let st = Staircase::from_ideal(&mm, DEFAULT_BOX_CAP).unwrap();
        let s = st.sum_ideal(&j).unwrap();
        assert_eq!(s.to_ideal(), mm.sum(&j).unwrap());
        // 1, x, y, y^2, y^3
        assert_eq!(s.colength(), 5);
    }

    #[test]
    fn unit_staircase() {
        let u = Staircase::from_ideal(&MonomialIdeal::unit(3), DEFAULT_BOX_CAP).unwrap();
        assert!(u.is_unit());
        assert_eq!(u.colength(), 0);
        assert!(u.to_ideal().is_unit());
    }
}
