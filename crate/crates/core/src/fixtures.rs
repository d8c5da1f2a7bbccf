//! Golden fixtures: small named computations with stored expected results.

use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::bounds::{self, BoundReport};
use crate::error::{Error, Result};
use crate::filtration::{validate_parts, GoodFiltration, ModulePresentation};
use crate::hilbert::{hilbert_samuel, Analysis, HilbertConfig, XiVector};
use crate::input::{parse_filtration, parse_parts};
use crate::monomial::{minimalize, MonomialIdeal};
use crate::rng::SplitMix64;
use crate::text::Vars;

pub const GOLDEN: &str = include_str!("../fixtures/golden.json");

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Fixture {
    pub id: String,
    pub op: String,
    #[serde(default)]
    pub args: Value,
    pub expected: Value,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FixtureSet {
    pub fixtures: Vec<Fixture>,
}

impl FixtureSet {
    pub fn parse(source: &str) -> Result<Self> {
        serde_json::from_str(source).map_err(|e| Error::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    }

    pub fn builtin() -> Self {
        Self::parse(GOLDEN).expect("embedded fixtures parse")
    }

    pub fn ids(&self) -> Vec<&str> {
        self.fixtures.iter().map(|f| f.id.as_str()).collect()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FixtureResult {
    pub id: String,
    pub expected: Value,
    pub actual: Value,
}

impl FixtureResult {
    pub fn passed(&self) -> bool {
        self.expected == self.actual
    }

    /// Line diff of the pretty-printed values.
    pub fn diff(&self) -> String {
        let e = serde_json::to_string_pretty(&self.expected).expect("value prints");
        let a = serde_json::to_string_pretty(&self.actual).expect("value prints");
        let el: Vec<&str> = e.lines().collect();
        let al: Vec<&str> = a.lines().collect();
        let mut out = format!("--- {} expected\n+++ {} actual\n", self.id, self.id);
        for k in 0..el.len().max(al.len()) {
            match (el.get(k), al.get(k)) {
                (Some(x), Some(y)) if x == y => out.push_str(&format!("  {x}\n")),
                (x, y) => {
                    if let Some(x) = x {
                        out.push_str(&format!("- {x}\n"));
                    }
                    if let Some(y) = y {
                        out.push_str(&format!("+ {y}\n"));
                    }
                }
            }
        }
        out
    }
}

#[derive(Debug, Clone)]
pub struct FixtureRun {
    pub results: Vec<FixtureResult>,
    pub elapsed: Duration,
}

impl FixtureRun {
    pub fn failures(&self) -> impl Iterator<Item = &FixtureResult> {
        self.results.iter().filter(|r| !r.passed())
    }

    pub fn all_passed(&self) -> bool {
        self.failures().next().is_none()
    }
}

pub fn run_fixtures(set: &FixtureSet) -> FixtureRun {
    let start = Instant::now();
    let results = set
        .fixtures
        .iter()
        .map(|f| FixtureResult {
            id: f.id.clone(),
            expected: f.expected.clone(),
            actual: evaluate(f),
        })
        .collect();
    FixtureRun {
        results,
        elapsed: start.elapsed(),
    }
}

/// Result of one fixture; errors become `{"error": code}`.
pub fn evaluate(f: &Fixture) -> Value {
    eval_op(&f.op, &f.args).unwrap_or_else(|e| json!({ "error": e.code() }))
}

fn bad(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}

fn field<'a>(args: &'a Value, key: &str) -> Result<&'a Value> {
    args.get(key)
        .ok_or_else(|| bad(format!("missing argument {key:?}")))
}

fn usize_arg(args: &Value, key: &str) -> Result<usize> {
    field(args, key)?
        .as_u64()
        .map(|v| v as usize)
        .ok_or_else(|| bad(format!("argument {key:?} must be a non-negative integer")))
}

fn big_of(v: &Value) -> Result<BigUint> {
    match v {
        Value::String(s) => s.parse().map_err(|_| bad(format!("bad integer {s:?}"))),
        Value::Number(n) => n
            .as_u64()
            .map(BigUint::from)
            .ok_or_else(|| bad(format!("bad integer {n}"))),
        _ => Err(bad("expected an integer")),
    }
}

fn big_arg(args: &Value, key: &str) -> Result<BigUint> {
    big_of(field(args, key)?)
}

fn big_list(args: &Value, key: &str) -> Result<Vec<BigUint>> {
    field(args, key)?
        .as_array()
        .ok_or_else(|| bad(format!("argument {key:?} must be a list")))?
        .iter()
        .map(big_of)
        .collect()
}

fn vars_arg(args: &Value) -> Result<Vars> {
    let names: Vec<String> =
        serde_json::from_value(field(args, "vars")?.clone()).map_err(|e| bad(e.to_string()))?;
    Vars::new(names).map_err(bad)
}

fn ideal_arg(args: &Value, vars: &Vars, key: &str) -> Result<MonomialIdeal> {
    let items: Vec<String> =
        serde_json::from_value(field(args, key)?.clone()).map_err(|e| bad(e.to_string()))?;
    let gens = items
        .iter()
        .map(|t| vars.parse_monomial(t).map_err(|e| bad(e.to_string())))
        .collect::<Result<Vec<_>>>()?;
    minimalize(vars.len(), gens)
}

fn filtration_arg(args: &Value, key: &str) -> Result<(Vars, GoodFiltration)> {
    let p = parse_filtration(&field(args, key)?.to_string())?;
    Ok((p.vars, p.filtration))
}

fn ideal_json(vars: &Vars, ideal: &MonomialIdeal) -> Value {
    json!(vars.render_ideal(ideal))
}

fn strings<T: ToString>(v: &[T]) -> Value {
    json!(v.iter().map(ToString::to_string).collect::<Vec<_>>())
}

fn report_json(reports: &[BoundReport]) -> Value {
    json!(reports
        .iter()
        .map(|r| json!({
            "statement": r.label(),
            "lhs": r.lhs.to_string(),
            "rhs": r.rhs.to_string(),
            "holds": r.holds,
        }))
        .collect::<Vec<_>>())
}

fn eval_op(op: &str, args: &Value) -> Result<Value> {
    let cfg = HilbertConfig::default();
    let binary = |f: fn(&MonomialIdeal, &MonomialIdeal) -> Result<MonomialIdeal>| -> Result<Value> {
        let v = vars_arg(args)?;
        let out = f(&ideal_arg(args, &v, "a")?, &ideal_arg(args, &v, "b")?)?;
        Ok(ideal_json(&v, &out))
    };
    Ok(match op {
        "minimalize" => {
            let v = vars_arg(args)?;
            ideal_json(&v, &ideal_arg(args, &v, "gens")?)
        }
        "contains" => {
            let v = vars_arg(args)?;
            let text = field(args, "monomial")?
                .as_str()
                .ok_or_else(|| bad("monomial"))?;
            let t = v.parse_monomial(text).map_err(|e| bad(e.to_string()))?;
            json!(ideal_arg(args, &v, "ideal")?.contains(&t)?)
        }
        "sum" => binary(MonomialIdeal::sum)?,
        "product" => binary(MonomialIdeal::product)?,
        "intersection" => binary(MonomialIdeal::intersection)?,
        "power" => {
            let v = vars_arg(args)?;
            let k = u32::try_from(usize_arg(args, "k")?).map_err(|_| bad("k"))?;
            ideal_json(&v, &ideal_arg(args, &v, "ideal")?.power(k))
        }
        "is_subideal" => {
            let v = vars_arg(args)?;
            json!(ideal_arg(args, &v, "a")?.is_subideal(&ideal_arg(args, &v, "b")?)?)
        }
        "equals" => {
            let v = vars_arg(args)?;
            json!(ideal_arg(args, &v, "a")?.equals(&ideal_arg(args, &v, "b")?)?)
        }
        "is_primary" => {
            let v = vars_arg(args)?;
            json!(ideal_arg(args, &v, "ideal")?.is_primary_to_max())
        }
        "colength" => {
            let v = vars_arg(args)?;
            json!(ideal_arg(args, &v, "ideal")?.colength()?.to_string())
        }
        "saturate" => {
            let v = vars_arg(args)?;
            ideal_json(&v, &ideal_arg(args, &v, "ideal")?.saturate())
        }
        "krull_dim" => {
            let v = vars_arg(args)?;
            json!(ideal_arg(args, &v, "ideal")?.krull_dim_of_quotient()?)
        }
        "module" => {
            let v = vars_arg(args)?;
            let m = ModulePresentation::new(ideal_arg(args, &v, "annihilator")?)?;
            json!({ "dim": m.dim(), "h0": m.h0().to_string() })
        }
        "validate" => {
            let p = parse_parts(&field(args, "filtration")?.to_string())?;
            let prefix = if p.prefix.is_empty() {
                vec![p.base.clone()]
            } else {
                p.prefix
            };
            let report = validate_parts(&p.module, &p.base, &prefix)?;
            match report.first() {
                None => json!({ "valid": true }),
                Some(v) => json!({ "valid": false, "violation": v.code(), "index": v.index() }),
            }
        }
        "term_at" => {
            let (v, f) = filtration_arg(args, "filtration")?;
            ideal_json(&v, &f.term_at(usize_arg(args, "n")?))
        }
        "reduction_number" => json!(filtration_arg(args, "filtration")?.1.reduction_number()),
        "hilbert_samuel" => {
            let (_, f) = filtration_arg(args, "filtration")?;
            let ns: Vec<usize> = serde_json::from_value(field(args, "n")?.clone())
                .map_err(|e| bad(e.to_string()))?;
            let values = ns
                .iter()
                .map(|&n| hilbert_samuel(&f, n, cfg.box_cap))
                .collect::<Result<Vec<_>>>()?;
            strings(&values)
        }
        "coeffs" => {
            let (_, f) = filtration_arg(args, "filtration")?;
            let a = Analysis::new(f, &cfg)?;
            json!({
                "d": a.dim(),
                "e": strings(&a.hilbert.coefficients),
                "xi": strings(a.xi.values()),
                "r": a.reduction_number(),
                "postulation": a.hilbert.postulation,
                "h0": a.filtration.module().h0().to_string(),
            })
        }
        "quotient_by_h0" => {
            let (v, f) = filtration_arg(args, "filtration")?;
            let q = f.quotient_by_h0()?;
            json!({
                "annihilator": ideal_json(&v, q.module().annihilator()),
                "prefix": q.prefix().iter().map(|g| ideal_json(&v, g)).collect::<Vec<_>>(),
                "r": q.reduction_number(),
            })
        }
        "e_filtration" => {
            let v = vars_arg(args)?;
            let first = ideal_arg(args, &v, "first")?;
            let q = ideal_arg(args, &v, "q")?;
            let f = GoodFiltration::e_filtration(first, q, ModulePresentation::free(v.len())?)?;
            let terms: Vec<Value> = (0..4).map(|n| ideal_json(&v, &f.term_at(n))).collect();
            let a = Analysis::new(f, &cfg)?;
            json!({
                "terms": terms,
                "r": a.reduction_number(),
                "e": strings(&a.hilbert.coefficients),
            })
        }
        "xi" => {
            let e: Vec<BigInt> = field(args, "e")?
                .as_array()
                .ok_or_else(|| bad("e"))?
                .iter()
                .map(|x| match x {
                    Value::Number(n) => n.as_i64().map(BigInt::from).ok_or_else(|| bad("e")),
                    Value::String(s) => s.parse().map_err(|_| bad("e")),
                    _ => Err(bad("e")),
                })
                .collect::<Result<_>>()?;
            strings(XiVector::from_coefficients(&e)?.values())
        }
        "regularity_exponents" => {
            let (a, b) = bounds::regularity_exponents(usize_arg(args, "d")?)?;
            json!([a, b])
        }
        "coefficient_exponents" => {
            let (a, b) = bounds::coefficient_exponents(usize_arg(args, "i")?)?;
            json!([a, b])
        }
        "reg_bound" => json!(bounds::reg_bound(
            &big_arg(args, "xi")?,
            usize_arg(args, "r")?,
            usize_arg(args, "r_prime")?,
            usize_arg(args, "d")?,
        )?
        .to_string()),
        "coeff_bound" => json!(bounds::coeff_bound(
            usize_arg(args, "i")?,
            &big_arg(args, "xi")?,
            usize_arg(args, "r")?,
            usize_arg(args, "r_prime")?,
        )?
        .to_string()),
        "h0_bound" => json!(bounds::h0_bound(
            usize_arg(args, "i")?,
            &big_list(args, "xi")?,
            usize_arg(args, "r")?,
            usize_arg(args, "d")?,
        )?
        .to_string()),
        "b_bound" => json!(bounds::b_bound(
            &big_list(args, "xi")?,
            usize_arg(args, "r")?,
            usize_arg(args, "d")?,
        )?
        .to_string()),
        "check_pair" => {
            let (_, f) = filtration_arg(args, "f")?;
            let (_, fp) = filtration_arg(args, "f_prime")?;
            report_json(&bounds::check_pair("fixture", &f, &fp, &cfg)?)
        }
        "check_adic" => {
            let (_, f) = filtration_arg(args, "f")?;
            report_json(&bounds::check_adic_comparison("fixture", &f, &cfg)?)
        }
        "check_parameter" => {
            let v = vars_arg(args)?;
            let first = ideal_arg(args, &v, "first")?;
            let q = ideal_arg(args, &v, "q")?;
            report_json(&bounds::check_parameter_filtration(
                "fixture", &first, &q, &cfg,
            )?)
        }
        "check_mod_h0" => {
            let (_, f) = filtration_arg(args, "f")?;
            report_json(&bounds::check_coefficients_mod_h0("fixture", &f, &cfg)?)
        }
        "check_h0" => {
            let (_, f) = filtration_arg(args, "f")?;
            report_json(&[bounds::check_h0_bound("fixture", &f, &cfg)?])
        }
        "splitmix64" => {
            let mut g = SplitMix64::new(field(args, "seed")?.as_u64().ok_or_else(|| bad("seed"))?);
            let values: Vec<u64> = (0..usize_arg(args, "n")?).map(|_| g.next_u64()).collect();
            strings(&values)
        }
        other => return Err(bad(format!("unknown fixture op {other:?}"))),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_fixtures_pass() {
        let run = run_fixtures(&FixtureSet::builtin());
        for r in run.failures() {
            eprintln!("{}", r.diff());
        }
        assert!(run.all_passed());
    }

    #[test]
    fn ids_are_unique() {
        let set = FixtureSet::builtin();
        let mut ids = set.ids();
        let n = ids.len();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), n);
    }

    #[test]
    fn corrupted_expectation_is_reported() {
        let mut set = FixtureSet::builtin();
        set.fixtures.truncate(1);
        set.fixtures[0].expected = json!("tampered");
        let run = run_fixtures(&set);
        let failure = run.failures().next().expect("one failure");
        assert!(failure.diff().contains("- \"tampered\""));
    }
}
