mod common;

use common::*;
use hilbfilt::corpus::{generate_instance, GenSpec};
use hilbfilt::hilbert::fit_hilbert_data;
use hilbfilt::rng::SplitMix64;
use hilbfilt::{GoodFiltration, HilbertConfig, ModulePresentation, MonomialIdeal};
use num_traits::ToPrimitive;

fn to_i128(v: &num_bigint::BigInt) -> i128 {
    v.to_i128().unwrap()
}

#[test]
fn colength_matches_box_count() {
    let mut rng = SplitMix64::new(2024);
    for case in 0..200 {
        let ambient = 1 + case % 3;
        let gens = random_primary(&mut rng, ambient, 5);
        let ideal = ideal_of(ambient, &gens);
        assert_eq!(
            ideal.colength().unwrap().to_u64().unwrap(),
            brute_colength(ambient, &gens).unwrap(),
            "case {case}: {gens:?}"
        );
    }
}

#[test]
fn membership_matches_divisibility() {
    let mut rng = SplitMix64::new(5);
    for _ in 0..100 {
        let gens = random_primary(&mut rng, 3, 4);
        let ideal = ideal_of(3, &gens);
        for t in box_points(&[5, 5, 5]) {
            let m = hilbfilt::Monomial::new(t.clone());
            assert_eq!(ideal.contains(&m).unwrap(), member(&gens, &t));
        }
    }
}

#[test]
fn saturation_and_dimension_against_boxes() {
    // x^2, xy in two variables: the saturation is (x) and h0 counts only x.
    let j = ideal_of(2, &vec![vec![2, 0], vec![1, 1]]);
    let sat = gens_of(&j.saturate());
    for t in box_points(&[6, 6]) {
        assert_eq!(member(&sat, &t), t[0] >= 1, "{t:?}");
    }
    let m = ModulePresentation::new(j).unwrap();
    assert_eq!((m.dim(), m.h0().to_u64().unwrap()), (1, 1));
}

fn check_against_oracle(f: &GoodFiltration, cfg: &HilbertConfig, full: bool) {
    let data = fit_hilbert_data(f, cfg).unwrap();
    let limit = if full {
        data.horizon
    } else {
        data.horizon.min(10)
    };
    for n in 0..=limit {
        let got = data.samples[n].value.to_u64().unwrap();
        assert_eq!(got, hilbert(f, n), "H({n}) of {}", f.canonical_encoding());
    }
    if !full {
        return;
    }
    let values: Vec<u64> = (0..=data.horizon + 4).map(|n| hilbert(f, n)).collect();
    let (p, post) = polynomial_and_postulation(&values, data.dim);
    let e: Vec<i128> = data.coefficients.iter().map(to_i128).collect();
    for (n, pn) in p.iter().enumerate() {
        assert_eq!(
            samuel_polynomial(&e, n as i128),
            *pn,
            "P({n}) of {}",
            f.canonical_encoding()
        );
    }
    assert_eq!(
        data.postulation,
        post,
        "postulation of {}",
        f.canonical_encoding()
    );
}

#[test]
fn corpus_hilbert_functions_match_oracle_in_two_variables() {
    let spec = GenSpec {
        ambient: [2, 2],
        count: 40,
        ..GenSpec::default()
    };
    let cfg = HilbertConfig::default();
    for i in 0..spec.count {
        let inst = generate_instance(&spec, i).unwrap();
        check_against_oracle(&inst.f, &cfg, true);
        check_against_oracle(&inst.f_prime, &cfg, true);
    }
}

#[test]
fn corpus_hilbert_functions_match_oracle_in_three_variables() {
    let spec = GenSpec {
        ambient: [3, 3],
        max_pure_power: 3,
        count: 12,
        ..GenSpec::default()
    };
    let cfg = HilbertConfig::default();
    for i in 0..spec.count {
        let inst = generate_instance(&spec, i).unwrap();
        check_against_oracle(&inst.f, &cfg, false);
    }
}

#[test]
fn multiplicity_of_maximal_powers() {
    let cfg = HilbertConfig::default();
    for ambient in 1..=3usize {
        for k in 1..=3u32 {
            let base = MonomialIdeal::maximal(ambient).power(k);
            let f = GoodFiltration::adic(base, ModulePresentation::free(ambient).unwrap()).unwrap();
            let data = fit_hilbert_data(&f, &cfg).unwrap();
            assert_eq!(
                to_i128(data.multiplicity()),
                (k as i128).pow(ambient as u32)
            );
            check_against_oracle(&f, &cfg, ambient < 3);
        }
    }
}

#[test]
fn postulation_of_staircase_adic_filtration() {
    let base = ideal_of(2, &vec![vec![2, 0], vec![1, 1], vec![0, 3]]);
    let f = GoodFiltration::adic(base, ModulePresentation::free(2).unwrap()).unwrap();
    let cfg = HilbertConfig::default();
    check_against_oracle(&f, &cfg, true);
    let data = fit_hilbert_data(&f, &cfg).unwrap();
    let e: Vec<i128> = data.coefficients.iter().map(to_i128).collect();
    assert_eq!(e, vec![5, 1, 0]);
}

#[test]
fn quotient_module_values() {
    let j = ideal_of(2, &vec![vec![2, 0], vec![1, 1]]);
    let f = GoodFiltration::adic(
        MonomialIdeal::maximal(2),
        ModulePresentation::new(j).unwrap(),
    )
    .unwrap();
    let values: Vec<u64> = (0..6).map(|n| hilbert(&f, n)).collect();
    assert_eq!(values, vec![1, 3, 4, 5, 6, 7]);
    check_against_oracle(&f, &HilbertConfig::default(), true);
}
