//! Test-only oracles. Nothing here calls the staircase kernel or the fitting
//! code; ideals are plain generator lists and lengths are box counts.

#![allow(dead_code)]

use hilbfilt::rng::SplitMix64;
use hilbfilt::{GoodFiltration, Monomial, MonomialIdeal};

pub type Gens = Vec<Vec<u32>>;

pub fn gens_of(ideal: &MonomialIdeal) -> Gens {
    ideal
        .generators()
        .iter()
        .map(|g| g.exponents().to_vec())
        .collect()
}

pub fn ideal_of(ambient: usize, gens: &Gens) -> MonomialIdeal {
    hilbfilt::minimalize(ambient, gens.iter().map(|g| Monomial::new(g.clone()))).unwrap()
}

pub fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub fn member(gens: &Gens, t: &[u32]) -> bool {
    gens.iter().any(|g| divides(g, t))
}

/// Drop generators divisible by another one.
pub fn prune(gens: Gens) -> Gens {
    let mut out: Gens = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        let redundant = gens
            .iter()
            .enumerate()
            .any(|(j, h)| divides(h, g) && (h != g || j < i));
        if !redundant {
            out.push(g.clone());
        }
    }
    out
}

pub fn product(a: &Gens, b: &Gens) -> Gens {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for x in a {
        for y in b {
            out.push(x.iter().zip(y).map(|(p, q)| p + q).collect());
        }
    }
    prune(out)
}

/// Every exponent vector in `0..bounds[0] x ... x 0..bounds[D-1]`.
pub fn box_points(bounds: &[u32]) -> Vec<Vec<u32>> {
    let mut pts = vec![vec![]];
    for &b in bounds {
        pts = pts
            .into_iter()
            .flat_map(|p| {
                (0..b).map(move |v| {
                    let mut q = p.clone();
                    q.push(v);
                    q
                })
            })
            .collect();
    }
    pts
}

fn pure_power_bounds(ambient: usize, gens: &Gens) -> Option<Vec<u32>> {
    (0..ambient)
        .map(|i| {
            gens.iter()
                .filter(|g| g.iter().enumerate().all(|(k, &e)| k == i || e == 0))
                .map(|g| g[i])
                .min()
        })
        .collect()
}

/// Number of standard monomials; `None` if some variable has no pure power.
pub fn brute_colength(ambient: usize, gens: &Gens) -> Option<u64> {
    let bounds = pure_power_bounds(ambient, gens)?;
    Some(
        box_points(&bounds)
            .iter()
            .filter(|t| !member(gens, t))
            .count() as u64,
    )
}

/// Generators of `F_n + J`, rebuilt from the public parts of `f`.
pub fn term(f: &GoodFiltration, n: usize) -> Gens {
    let ambient = f.ambient();
    let j = gens_of(f.module().annihilator());
    let mut t = if n == 0 {
        vec![vec![0; ambient]]
    } else {
        let l = f.prefix_len();
        let mut t = gens_of(&f.prefix()[n.min(l) - 1]);
        let base = gens_of(f.base());
        for _ in l..n {
            t = product(&t, &base);
        }
        t
    };
    t.extend(j);
    prune(t)
}

/// `H(n) = length(M / F_{n+1} M)`.
pub fn hilbert(f: &GoodFiltration, n: usize) -> u64 {
    brute_colength(f.ambient(), &term(f, n + 1)).expect("terms are m-primary")
}

/// Exact rational Lagrange interpolation through `(xs, ys)`, evaluated at `x`.
pub fn lagrange(xs: &[i128], ys: &[i128], x: i128) -> (i128, i128) {
    let (mut num, mut den) = (0i128, 1i128);
    for (i, (&xi, &yi)) in xs.iter().zip(ys).enumerate() {
        let (mut tn, mut td) = (yi, 1i128);
        for (k, &xk) in xs.iter().enumerate() {
            if k != i {
                tn *= x - xk;
                td *= xi - xk;
            }
        }
        num = num * td + tn * den;
        den *= td;
        let g = gcd(num, den);
        num /= g;
        den /= g;
    }
    if den < 0 {
        (-num, -den)
    } else {
        (num, den)
    }
}

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.max(1)
}

/// Interpolates the last `d + 1` samples and returns `(P on 0..len, postulation)`.
pub fn polynomial_and_postulation(values: &[u64], d: usize) -> (Vec<i128>, usize) {
    let n = values.len();
    let xs: Vec<i128> = (n - d - 1..n).map(|k| k as i128).collect();
    let ys: Vec<i128> = xs.iter().map(|&k| values[k as usize] as i128).collect();
    let p: Vec<i128> = (0..n)
        .map(|k| {
            let (num, den) = lagrange(&xs, &ys, k as i128);
            assert_eq!(den, 1, "Hilbert polynomial takes integer values");
            num
        })
        .collect();
    let post = (0..n)
        .rev()
        .find(|&k| p[k] != values[k] as i128)
        .map_or(0, |k| k + 1);
    (p, post)
}

pub fn binom(n: i128, k: i128) -> i128 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `sum_i (-1)^i e_i C(n+d-i, d-i)`, written out independently of the library.
pub fn samuel_polynomial(e: &[i128], n: i128) -> i128 {
    let d = e.len() as i128 - 1;
    e.iter()
        .enumerate()
        .map(|(i, &ei)| {
            let i = i as i128;
            let sign = if i % 2 == 0 { 1 } else { -1 };
            sign * ei * binom(n + d - i, d - i)
        })
        .sum()
}

/// Random m-primary generator list: pure powers plus a few monomials.
pub fn random_primary(rng: &mut SplitMix64, ambient: usize, max_power: u32) -> Gens {
    let mut gens = Vec::new();
    for i in 0..ambient {
        let mut g = vec![0; ambient];
        g[i] = rng.range(1, max_power as u64) as u32;
        gens.push(g);
    }
    for _ in 0..rng.range(0, 4) {
        gens.push(
            (0..ambient)
                .map(|_| rng.range(0, max_power as u64) as u32)
                .collect(),
        );
    }
    gens
}
