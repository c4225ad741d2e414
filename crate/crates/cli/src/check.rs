//! Property sweeps behind `partfac check`.

use std::collections::BTreeSet;

use num_integer::Integer;
use partfac::{
    circular_factors, classify_varieties, factor_interval_table_with, is_balanced1_circular,
    lower_christoffel, make_params, mechanical_prefix_with, multiplicities_formula,
    partitioned_frequencies_with, verify_isc, Composition, NamedConstant, PrecisionCap, SlopeValue,
    ThetaForm, Word,
};

use crate::report::{CheckBounds, CheckReport, CheckResult, SCHEMA_VERSION};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Scope {
    Christoffel,
    Sturmian,
    All,
}

impl Scope {
    fn name(self) -> &'static str {
        match self {
            Scope::Christoffel => "christoffel",
            Scope::Sturmian => "sturmian",
            Scope::All => "all",
        }
    }
}

/// Counts cases until the first counterexample.
struct Sweep {
    property: &'static str,
    cases: usize,
    counterexample: Option<String>,
}

impl Sweep {
    fn new(property: &'static str) -> Sweep {
        Sweep {
            property,
            cases: 0,
            counterexample: None,
        }
    }

    /// Records one case; returns false once a counterexample is known.
    fn case(&mut self, holds: Result<bool, String>, describe: impl FnOnce() -> String) -> bool {
        self.cases += 1;
        match holds {
            Ok(true) => true,
            Ok(false) => {
                self.counterexample = Some(describe());
                false
            }
            Err(e) => {
                self.counterexample = Some(format!("{}: {e}", describe()));
                false
            }
        }
    }

    fn finish(self) -> CheckResult {
        CheckResult {
            property: self.property.to_string(),
            passed: self.counterexample.is_none(),
            cases: self.cases,
            counterexample: self.counterexample,
        }
    }
}

fn coprime_pairs(max_n: usize) -> Vec<(usize, usize)> {
    (2..=max_n)
        .flat_map(|n| (1..n).map(move |p| (p, n - p)))
        .filter(|(p, q)| p.gcd(q) == 1)
        .collect()
}

fn oracle_equivalence(max_n: usize, max_part_m: usize) -> CheckResult {
    let mut sweep = Sweep::new("closed form equals brute force");
    'pairs: for (p, q) in coprime_pairs(max_n) {
        let word = lower_christoffel(p, q).expect("coprime");
        let params = make_params(p, q).expect("coprime");
        for m in 1..=max_part_m.min(p + q - 1) {
            let fs = circular_factors(&word, m).expect("m < n");
            for comp in Composition::all(m) {
                let holds = match (
                    multiplicities_formula(&params, &comp),
                    classify_varieties(&fs, &comp),
                ) {
                    (Ok(a), Ok(b)) => Ok(a == b),
                    (Err(e), _) | (_, Err(e)) => Err(e.to_string()),
                };
                if !sweep.case(holds, || format!("counts {p}/{q}, composition ({comp})")) {
                    break 'pairs;
                }
            }
        }
    }
    sweep.finish()
}

fn factor_counts(max_n: usize) -> CheckResult {
    let mut sweep = Sweep::new("m + 1 circular factors of each length");
    'pairs: for (p, q) in coprime_pairs(max_n) {
        let word = lower_christoffel(p, q).expect("coprime");
        for m in 1..p + q {
            let holds = circular_factors(&word, m)
                .map(|fs| fs.distinct_count() == m + 1)
                .map_err(|e| e.to_string());
            if !sweep.case(holds, || format!("{word}, m = {m}")) {
                break 'pairs;
            }
        }
    }
    sweep.finish()
}

fn balanced(max_n: usize) -> CheckResult {
    let mut sweep = Sweep::new("Christoffel words are circularly balanced");
    for (p, q) in coprime_pairs(max_n) {
        let word = lower_christoffel(p, q).expect("coprime");
        if !sweep.case(
            is_balanced1_circular(&word).map_err(|e| e.to_string()),
            || word.to_string(),
        ) {
            break;
        }
    }
    sweep.finish()
}

fn adjacent_rows(max_n: usize) -> CheckResult {
    let mut sweep = Sweep::new("adjacent sorted conjugates differ by one exchange");
    for (p, q) in coprime_pairs(max_n) {
        let word = lower_christoffel(p, q).expect("coprime");
        if !sweep.case(verify_isc(&word).map_err(|e| e.to_string()), || {
            word.to_string()
        }) {
            break;
        }
    }
    sweep.finish()
}

fn rational_mechanical(max_n: usize, cap: PrecisionCap) -> CheckResult {
    let mut sweep = Sweep::new("mechanical word of q/n is the Christoffel word");
    for (p, q) in coprime_pairs(max_n) {
        let n = p + q;
        let theta = SlopeValue::rational(q as u64, n as u64).expect("positive denominator");
        let holds = mechanical_prefix_with(&theta, n, cap)
            .map(|w| w == lower_christoffel(p, q).expect("coprime"))
            .map_err(|e| e.to_string());
        if !sweep.case(holds, || format!("slope {q}/{n}")) {
            break;
        }
    }
    sweep.finish()
}

fn three_distance(slopes: &[SlopeValue], max_m: usize, cap: PrecisionCap) -> CheckResult {
    let mut sweep = Sweep::new("at most three arc lengths");
    'slopes: for theta in slopes {
        for m in 1..=max_m {
            let holds = factor_interval_table_with(theta, m, cap)
                .map(|t| {
                    let total: ThetaForm = t.intervals.iter().map(|i| i.length_form).sum();
                    t.distinct_length_forms().len() <= 3 && total == ThetaForm::ONE
                })
                .map_err(|e| e.to_string());
            if !sweep.case(holds, || format!("slope {theta}, m = {m}")) {
                break 'slopes;
            }
        }
    }
    sweep.finish()
}

fn lexicographic_arcs(slopes: &[SlopeValue], max_m: usize, cap: PrecisionCap) -> CheckResult {
    let mut sweep = Sweep::new("arc order is lexicographic order of factors");
    let len = 5000.max(4 * max_m);
    'slopes: for theta in slopes {
        let prefix = match mechanical_prefix_with(theta, len, cap) {
            Ok(w) => w,
            Err(e) => {
                sweep.case(Err(e.to_string()), || format!("slope {theta}"));
                break;
            }
        };
        for m in 1..=max_m {
            let seen: Vec<Word> = (0..=len - m)
                .map(|s| prefix.factor(s, m))
                .collect::<BTreeSet<_>>()
                .into_iter()
                .collect();
            let holds = factor_interval_table_with(theta, m, cap)
                .map(|t| t.factors() == seen)
                .map_err(|e| e.to_string());
            if !sweep.case(holds, || format!("slope {theta}, m = {m}")) {
                break 'slopes;
            }
        }
    }
    sweep.finish()
}

fn variety_frequencies(slopes: &[SlopeValue], max_m: usize, cap: PrecisionCap) -> CheckResult {
    let mut sweep = Sweep::new("k + 1 varieties with frequencies summing to 1");
    'slopes: for theta in slopes {
        for m in 1..=max_m {
            let comps = [Composition::whole(m), Composition::unit(m)];
            for comp in comps.into_iter().map(|c| c.expect("m > 0")) {
                let holds = partitioned_frequencies_with(theta, &comp, cap)
                    .map(|t| {
                        let total: ThetaForm = t.entries.iter().map(|e| e.frequency_form).sum();
                        t.entries.len() == comp.k() + 1 && total == ThetaForm::ONE
                    })
                    .map_err(|e| e.to_string());
                if !sweep.case(holds, || format!("slope {theta}, composition ({comp})")) {
                    break 'slopes;
                }
            }
        }
    }
    sweep.finish()
}

pub fn run(scope: Scope, bounds: CheckBounds, cap: PrecisionCap) -> CheckReport {
    let mut results = Vec::new();
    if matches!(scope, Scope::Christoffel | Scope::All) {
        results.push(oracle_equivalence(bounds.max_n, bounds.max_part_m));
        results.push(factor_counts(bounds.max_n));
        results.push(balanced(bounds.max_n));
        results.push(adjacent_rows(bounds.max_n));
        results.push(rational_mechanical(bounds.max_n, cap));
    }
    if matches!(scope, Scope::Sturmian | Scope::All) {
        let slopes = NamedConstant::ALL.map(SlopeValue::named);
        results.push(three_distance(&slopes, bounds.max_m, cap));
        results.push(lexicographic_arcs(&slopes, bounds.max_m, cap));
        results.push(variety_frequencies(&slopes, bounds.max_m, cap));
    }
    CheckReport {
        schema_version: SCHEMA_VERSION,
        scope: scope.name().to_string(),
        passed: results.iter().all(|r| r.passed),
        bounds,
        results,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sweep_keeps_the_first_counterexample() {
        let mut sweep = Sweep::new("demo");
        assert!(sweep.case(Ok(true), || unreachable!()));
        assert!(!sweep.case(Ok(false), || "case 2".into()));
        let result = sweep.finish();
        assert!(!result.passed);
        assert_eq!(result.cases, 2);
        assert_eq!(result.counterexample.as_deref(), Some("case 2"));

        let mut sweep = Sweep::new("demo");
        sweep.case(Err("boom".into()), || "case 1".into());
        assert_eq!(
            sweep.finish().counterexample.as_deref(),
            Some("case 1: boom")
        );
    }

    #[test]
    fn small_sweeps_pass() {
        let bounds = CheckBounds {
            max_n: 12,
            max_m: 6,
            max_part_m: 5,
        };
        let report = run(Scope::All, bounds, PrecisionCap::default());
        assert!(report.passed, "{report:?}");
        assert_eq!(report.results.len(), 8);
    }
}
