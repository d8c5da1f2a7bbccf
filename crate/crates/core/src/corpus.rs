//! Seeded instance generation and the batch campaign runner.
//!
//! Instance `k` of a campaign draws from its own SplitMix64 stream derived
//! from `(seed, k)`, so the corpus does not depend on scheduling and any single
//! instance can be regenerated on its own.

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::{
    adic_comparison_reports, h0_quotient_reports, h0_report, pair_reports, parameter_reports,
    BoundReport, StatementId,
};
use crate::error::{Error, Result};
use crate::filtration::{GoodFiltration, ModulePresentation};
use crate::hilbert::{refit_agrees, Analysis, HilbertConfig};
use crate::monomial::{minimalize, Monomial, MonomialIdeal, MAX_AMBIENT};
use crate::rng::SplitMix64;

const MAX_PURE_POWER_CAP: u32 = 32;
const MAX_PREFIX_LEN: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct GenSpec {
    pub seed: u64,
    /// Inclusive range for the ambient variable count `D`.
    pub ambient: [usize; 2],
    pub max_pure_power: u32,
    /// Inclusive range for the number of extra generators of `I`.
    pub extra_gens: [usize; 2],
    /// Inclusive range for the prefix length `L`; 0 yields the adic filtration.
    pub prefix_len: [usize; 2],
    /// Draw a non-trivial annihilator `J` for about half of the instances.
    pub with_annihilator: bool,
    pub count: usize,
}

impl Default for GenSpec {
    fn default() -> Self {
        Self {
            seed: 42,
            ambient: [2, 4],
            max_pure_power: 4,
            extra_gens: [0, 3],
            prefix_len: [1, 3],
            with_annihilator: true,
            count: 200,
        }
    }
}

impl GenSpec {
    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidInput(m));
        if self.count < 1 {
            return bad("count must be >= 1".into());
        }
        let [lo, hi] = self.ambient;
        if lo < 1 || lo > hi || hi > MAX_AMBIENT {
            return bad(format!(
                "ambient range must satisfy 1 <= lo <= hi <= {MAX_AMBIENT}"
            ));
        }
        if self.max_pure_power < 1 || self.max_pure_power > MAX_PURE_POWER_CAP {
            return bad(format!(
                "max_pure_power must lie in 1..={MAX_PURE_POWER_CAP}"
            ));
        }
        if self.extra_gens[0] > self.extra_gens[1] {
            return bad("extra_gens range is empty".into());
        }
        if self.prefix_len[0] > self.prefix_len[1] || self.prefix_len[1] > MAX_PREFIX_LEN {
            return bad(format!("prefix_len range must lie in 0..={MAX_PREFIX_LEN}"));
        }
        Ok(())
    }
}

fn draw(rng: &mut SplitMix64, range: [usize; 2]) -> usize {
    rng.range(range[0] as u64, range[1] as u64) as usize
}

fn random_monomial(rng: &mut SplitMix64, ambient: usize, vars: &[usize], degree: u64) -> Monomial {
    let mut exps = vec![0u32; ambient];
    for _ in 0..degree {
        exps[*rng.pick(vars)] += 1;
    }
    Monomial::new(exps)
}

/// An m-primary ideal: pure powers `x_i^{b_i}`, `b_i` in `1..=max_pure_power`,
/// plus a few random monomials of lower degree.
pub fn gen_primary_ideal(spec: &GenSpec, rng: &mut SplitMix64, ambient: usize) -> MonomialIdeal {
    let powers: Vec<u32> = (0..ambient)
        .map(|_| rng.range(1, u64::from(spec.max_pure_power)) as u32)
        .collect();
    let mut ideal = MonomialIdeal::pure_powers(&powers);
    let max_b = u64::from(*powers.iter().max().expect("ambient >= 1"));
    let vars: Vec<usize> = (0..ambient).collect();
    let extras = draw(rng, spec.extra_gens);
    for _ in 0..extras {
        if max_b < 2 {
            break;
        }
        for _attempt in 0..8 {
            let degree = rng.range(1, max_b - 1);
            let t = random_monomial(rng, ambient, &vars, degree);
            if !ideal.contains(&t).expect("same ambient") {
                let gens = ideal.generators().iter().cloned().chain([t]);
                ideal = minimalize(ambient, gens).expect("same ambient");
                break;
            }
        }
    }
    ideal
}

/// A proper annihilator with `dim R/J >= 1`: one variable is left free of
/// covering duty, so every generator involves another variable.
pub fn gen_annihilator(rng: &mut SplitMix64, ambient: usize) -> MonomialIdeal {
    if ambient < 2 {
        return MonomialIdeal::zero(ambient);
    }
    let free = rng.below(ambient as u64) as usize;
    let others: Vec<usize> = (0..ambient).filter(|&i| i != free).collect();
    let count = rng.range(1, 2);
    let gens: Vec<Monomial> = (0..count)
        .map(|_| {
            let degree = rng.range(1, 2);
            let t = random_monomial(rng, ambient, &others, degree);
            let free_exp = rng.range(0, 2) as u32;
            t.mul(&Monomial::pure_power(free, free_exp, ambient))
        })
        .collect();
    minimalize(ambient, gens).expect("same ambient")
}

/// A good `I`-filtration with a random prefix `G_1 ⊇ ... ⊇ G_L` built so that
/// `I G_{n-1} ⊆ G_n ⊆ G_{n-1}`.
pub fn gen_good_filtration(
    spec: &GenSpec,
    rng: &mut SplitMix64,
    base: &MonomialIdeal,
    module: &ModulePresentation,
) -> Result<GoodFiltration> {
    let ambient = base.ambient();
    let len = draw(rng, spec.prefix_len);
    if len == 0 {
        return GoodFiltration::adic(base.clone(), module.clone());
    }
    let vars: Vec<usize> = (0..ambient).collect();
    let mut previous = MonomialIdeal::unit(ambient);
    let mut prefix = Vec::with_capacity(len);
    for _ in 0..len {
        let mut gens: Vec<Monomial> = base.product(&previous)?.generators().to_vec();
        let kept = rng.range(0, 2);
        for _ in 0..kept {
            let g = rng.pick(previous.generators()).clone();
            let degree = if previous.is_unit() {
                rng.range(1, 2)
            } else {
                rng.range(0, 2)
            };
            gens.push(g.mul(&random_monomial(rng, ambient, &vars, degree)));
        }
        let term = minimalize(ambient, gens)?;
        prefix.push(term.clone());
        previous = term;
    }
    let f = GoodFiltration::new(module.clone(), base.clone(), prefix);
    if let Err(Error::InvalidFiltration(v)) = &f {
        panic!("generation bug: constructed prefix violates the filtration axioms: {v}");
    }
    f
}

#[derive(Debug, Clone)]
pub struct Instance {
    pub id: String,
    pub index: usize,
    pub base: MonomialIdeal,
    pub module: ModulePresentation,
    pub f: GoodFiltration,
    pub f_prime: GoodFiltration,
}

pub fn instance_id(seed: u64, index: usize) -> String {
    format!("s{seed}-{index:05}")
}

/// Regenerate instance `index` of the corpus described by `spec`.
pub fn generate_instance(spec: &GenSpec, index: usize) -> Result<Instance> {
    let mut rng = SplitMix64::stream(spec.seed, index as u64);
    let ambient = draw(&mut rng, spec.ambient);
    let base = gen_primary_ideal(spec, &mut rng, ambient);
    let annihilator = if spec.with_annihilator && rng.coin() {
        gen_annihilator(&mut rng, ambient)
    } else {
        MonomialIdeal::zero(ambient)
    };
    let module = ModulePresentation::new(annihilator)?;
    let f = gen_good_filtration(spec, &mut rng, &base, &module)?;
    let f_prime = gen_good_filtration(spec, &mut rng, &base, &module)?;
    Ok(Instance {
        id: instance_id(spec.seed, index),
        index,
        base,
        module,
        f,
        f_prime,
    })
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tally {
    pub pass: usize,
    pub fail: usize,
    /// Instances that produced at least one report for the statement.
    pub instances: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SlackExtreme {
    pub instance: String,
    pub statement: String,
    pub slack_log2: f64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rejection {
    pub instance: String,
    pub reason: String,
}

/// Milliseconds per phase, summed over instances.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct PhaseTimings {
    pub generate_ms: f64,
    pub fit_ms: f64,
    pub check_ms: f64,
    pub refit_ms: f64,
    pub wall_ms: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CampaignReport {
    pub spec: GenSpec,
    pub config: HilbertConfig,
    pub instances_checked: usize,
    pub tallies: BTreeMap<String, Tally>,
    pub max_slack: Option<SlackExtreme>,
    pub min_slack: Option<SlackExtreme>,
    pub rejections: Vec<Rejection>,
    pub violations: Vec<BoundReport>,
    /// Filtrations whose coefficients changed when re-fit at twice the horizon.
    pub refit_mismatches: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing: Option<PhaseTimings>,
}

impl CampaignReport {
    pub fn has_violations(&self) -> bool {
        !self.violations.is_empty() || !self.refit_mismatches.is_empty()
    }

    pub fn tally(&self, id: StatementId) -> Tally {
        self.tallies
            .get(id.wire_name())
            .cloned()
            .unwrap_or_default()
    }

    pub fn rejection_rate(&self) -> f64 {
        self.rejections.len() as f64 / self.spec.count as f64
    }

    /// Pretty JSON without timing fields; identical specs give identical bytes.
    pub fn payload_json(&self) -> String {
        let mut clone = self.clone();
        clone.timing = None;
        serde_json::to_string_pretty(&clone).expect("report serializes")
    }
}

#[derive(Debug, Clone)]
pub struct CampaignRun {
    pub report: CampaignReport,
    /// Every report, ordered by instance then statement.
    pub reports: Vec<BoundReport>,
}

struct InstanceOutcome {
    id: String,
    result: std::result::Result<InstanceChecks, String>,
    timing: [Duration; 4],
}

struct InstanceChecks {
    reports: Vec<BoundReport>,
    refit_mismatches: Vec<String>,
}

fn run_instance(spec: &GenSpec, index: usize, cfg: &HilbertConfig) -> InstanceOutcome {
    let mut timing = [Duration::ZERO; 4];
    let id = instance_id(spec.seed, index);
    let result = (|| -> Result<InstanceChecks> {
        let start = Instant::now();
        let inst = generate_instance(spec, index)?;
        timing[0] = start.elapsed();

        let start = Instant::now();
        let f = Analysis::new(inst.f.clone(), cfg)?;
        let fp = Analysis::new(inst.f_prime.clone(), cfg)?;
        let adic = Analysis::new(
            GoodFiltration::adic(inst.base.clone(), inst.module.clone())?,
            cfg,
        )?;
        let bar = Analysis::new(inst.f.quotient_by_h0()?, cfg)?;
        let parameter = if inst.module.is_free() {
            let exps: Vec<u32> = inst
                .base
                .pure_power_exponents()
                .into_iter()
                .map(|p| p.expect("base ideal is m-primary"))
                .collect();
            let q = MonomialIdeal::pure_powers(&exps);
            let (e, q_adic) = crate::bounds::parameter_filtrations(&inst.f.term_at(1), &q)?;
            Some((Analysis::new(e, cfg)?, Analysis::new(q_adic, cfg)?))
        } else {
            None
        };
        timing[1] = start.elapsed();

        let start = Instant::now();
        let mut reports = pair_reports(&id, &f, &fp)?;
        reports.extend(adic_comparison_reports(&id, &f, &adic)?);
        reports.extend(h0_quotient_reports(&id, &f, &bar));
        reports.push(h0_report(&id, &f)?);
        if let Some((e, q_adic)) = &parameter {
            reports.extend(parameter_reports(&id, e, q_adic, cfg.box_cap)?);
        }
        reports.sort_by_key(|r| (r.statement_id, r.index));
        timing[2] = start.elapsed();

        let start = Instant::now();
        let mut refit_mismatches = Vec::new();
        for (name, a) in [("F", &f), ("F'", &fp)] {
            if !refit_agrees(&a.filtration, &a.hilbert, cfg.box_cap)? {
                refit_mismatches.push(format!("{id}:{name}"));
            }
        }
        timing[3] = start.elapsed();
        Ok(InstanceChecks {
            reports,
            refit_mismatches,
        })
    })()
    .map_err(|e| e.to_string());
    InstanceOutcome { id, result, timing }
}

/// Generate and check every instance; deterministic given the spec.
pub fn run_campaign(spec: &GenSpec, cfg: &HilbertConfig) -> Result<CampaignRun> {
    spec.validate()?;
    let wall = Instant::now();
    let outcomes: Vec<InstanceOutcome> = (0..spec.count)
        .into_par_iter()
        .map(|i| run_instance(spec, i, cfg))
        .collect();

    let mut tallies: BTreeMap<String, Tally> = StatementId::ALL
        .iter()
        .map(|id| (id.wire_name().to_string(), Tally::default()))
        .collect();
    let mut timing = PhaseTimings::default();
    let mut rejections = Vec::new();
    let mut violations = Vec::new();
    let mut refit_mismatches = Vec::new();
    let mut all_reports = Vec::new();
    let mut max_slack: Option<SlackExtreme> = None;
    let mut min_slack: Option<SlackExtreme> = None;
    let mut checked = 0;

    for outcome in outcomes {
        let ms = |d: Duration| d.as_secs_f64() * 1e3;
        timing.generate_ms += ms(outcome.timing[0]);
        timing.fit_ms += ms(outcome.timing[1]);
        timing.check_ms += ms(outcome.timing[2]);
        timing.refit_ms += ms(outcome.timing[3]);
        let checks = match outcome.result {
            Ok(c) => c,
            Err(reason) => {
                rejections.push(Rejection {
                    instance: outcome.id,
                    reason,
                });
                continue;
            }
        };
        checked += 1;
        let mut seen = BTreeSet::new();
        for r in &checks.reports {
            let t = tallies
                .entry(r.statement_id.wire_name().to_string())
                .or_default();
            if r.holds {
                t.pass += 1;
            } else {
                t.fail += 1;
                violations.push(r.clone());
            }
            if seen.insert(r.statement_id) {
                t.instances += 1;
            }
            if r.statement_id.is_equality() {
                continue;
            }
            if let Some(s) = r.slack_log2.finite() {
                let candidate = || SlackExtreme {
                    instance: r.instance.clone(),
                    statement: r.label(),
                    slack_log2: s,
                };
                if max_slack.as_ref().is_none_or(|m| s > m.slack_log2) {
                    max_slack = Some(candidate());
                }
                if min_slack.as_ref().is_none_or(|m| s < m.slack_log2) {
                    min_slack = Some(candidate());
                }
            }
        }
        refit_mismatches.extend(checks.refit_mismatches);
        all_reports.extend(checks.reports);
    }
    timing.wall_ms = wall.elapsed().as_secs_f64() * 1e3;

    Ok(CampaignRun {
        report: CampaignReport {
            spec: spec.clone(),
            config: *cfg,
            instances_checked: checked,
            tallies,
            max_slack,
            min_slack,
            rejections,
            violations,
            refit_mismatches,
            timing: Some(timing),
        },
        reports: all_reports,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small_spec() -> GenSpec {
        GenSpec {
            ambient: [2, 2],
            count: 4,
            ..GenSpec::default()
        }
    }

    #[test]
    fn generated_ideals_are_primary_and_reproducible() {
        let spec = small_spec();
        for seed in 0..20 {
            let a = gen_primary_ideal(&spec, &mut SplitMix64::new(seed), 3);
            let b = gen_primary_ideal(&spec, &mut SplitMix64::new(seed), 3);
            assert!(a.is_primary_to_max());
            assert_eq!(a, b);
        }
    }

    #[test]
    fn pure_powers_without_extras() {
        let spec = GenSpec {
            max_pure_power: 2,
            extra_gens: [0, 0],
            ..small_spec()
        };
        let i = gen_primary_ideal(&spec, &mut SplitMix64::new(1), 2);
        assert!(i.is_pure_power_complete_intersection());
    }

    #[test]
    fn zero_prefix_gives_the_adic_filtration() {
        let spec = GenSpec {
            prefix_len: [0, 0],
            ..small_spec()
        };
        let inst = generate_instance(&spec, 0).unwrap();
        assert_eq!(
            inst.f,
            GoodFiltration::adic(inst.base.clone(), inst.module.clone()).unwrap()
        );
    }

    #[test]
    fn generated_filtrations_validate() {
        let spec = GenSpec {
            ambient: [1, 3],
            count: 40,
            ..GenSpec::default()
        };
        for i in 0..spec.count {
            let inst = generate_instance(&spec, i).unwrap();
            assert!(inst.f.validate().is_valid());
            assert!(inst.f_prime.validate().is_valid());
            assert!(inst.module.dim() >= 1);
            let again = generate_instance(&spec, i).unwrap();
            assert_eq!(inst.f, again.f);
        }
    }

    #[test]
    fn spec_validation() {
        assert!(GenSpec {
            count: 0,
            ..GenSpec::default()
        }
        .validate()
        .is_err());
        assert!(GenSpec {
            ambient: [3, 2],
            ..GenSpec::default()
        }
        .validate()
        .is_err());
        assert!(GenSpec {
            max_pure_power: 0,
            ..GenSpec::default()
        }
        .validate()
        .is_err());
        assert!(GenSpec::default().validate().is_ok());
    }

    #[test]
    fn single_instance_campaign_holds() {
        let run = run_campaign(
            &GenSpec {
                count: 1,
                ..small_spec()
            },
            &HilbertConfig::default(),
        )
        .unwrap();
        assert!(run.report.rejections.is_empty());
        assert!(!run.report.has_violations());
        assert!(!run.reports.is_empty());
    }
}
