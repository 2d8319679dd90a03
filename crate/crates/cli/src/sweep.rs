//! The `verify` sweep: selected checks over a range of orders.

use std::fmt::{self, Write as _};

use clap::ValueEnum;
use qderange_core::verify::{
    verify_lemma2, verify_log_concave, verify_ratio_monotone, verify_spiral, verify_unimodal_peak,
    PropertyReport, MIN_THEOREM_ORDER,
};
use qderange_core::{
    compute_coeff_recurrence, compute_recursive, compute_wachs, oracle_dn_with_cap, CoeffSeq, Error,
};
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, ValueEnum)]
pub enum Check {
    Ratio,
    Spiral,
    Unimodal,
    Logconcave,
    Lemma2,
    Crossmethod,
}

impl Check {
    pub const ALL: [Check; 6] = [
        Check::Ratio,
        Check::Spiral,
        Check::Unimodal,
        Check::Logconcave,
        Check::Lemma2,
        Check::Crossmethod,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Ratio => "ratio",
            Check::Spiral => "spiral",
            Check::Unimodal => "unimodal",
            Check::Logconcave => "logconcave",
            Check::Lemma2 => "lemma2",
            Check::Crossmethod => "crossmethod",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CheckOutcome {
    Pass,
    Fail(String),
    /// Order outside the theorem's scope; neither pass nor fail.
    Scope(String),
    /// Not applicable to this order (lemma2 on odd n); counts as neither.
    NotApplicable(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum SweepStatus {
    Pass,
    Scope,
    Fail,
}

impl SweepStatus {
    /// Exit code contract: 0 all pass, 1 a property violation, 2 a scope
    /// refusal (with no violation anywhere).
    pub fn exit_code(self) -> u8 {
        match self {
            SweepStatus::Pass => 0,
            SweepStatus::Fail => 1,
            SweepStatus::Scope => 2,
        }
    }
}

#[derive(Debug, Clone)]
pub struct OrderResult {
    pub n: u32,
    pub outcomes: Vec<(Check, CheckOutcome)>,
}

#[derive(Debug, Clone)]
pub struct SweepReport {
    pub orders: Vec<OrderResult>,
}

impl SweepReport {
    pub fn status(&self) -> SweepStatus {
        self.orders
            .iter()
            .flat_map(|o| &o.outcomes)
            .map(|(_, outcome)| match outcome {
                CheckOutcome::Fail(_) => SweepStatus::Fail,
                CheckOutcome::Scope(_) => SweepStatus::Scope,
                _ => SweepStatus::Pass,
            })
            .max()
            .unwrap_or(SweepStatus::Pass)
    }
}

impl fmt::Display for SweepReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for order in &self.orders {
            let mut line = format!("n = {:>3}:", order.n);
            for (check, outcome) in &order.outcomes {
                let _ = match outcome {
                    CheckOutcome::Pass => write!(line, " {}=pass", check.name()),
                    CheckOutcome::Fail(_) => write!(line, " {}=FAIL", check.name()),
                    CheckOutcome::Scope(_) => write!(line, " {}=scope", check.name()),
                    CheckOutcome::NotApplicable(_) => write!(line, " {}=n/a", check.name()),
                };
            }
            writeln!(f, "{line}")?;
            for (check, outcome) in &order.outcomes {
                match outcome {
                    CheckOutcome::Fail(why) => writeln!(f, "    {}: {why}", check.name())?,
                    CheckOutcome::Scope(why) => writeln!(f, "    {}: {why}", check.name())?,
                    _ => {}
                }
            }
        }
        let verdict = match self.status() {
            SweepStatus::Pass => "all checks pass",
            SweepStatus::Fail => "property violation found",
            SweepStatus::Scope => "no violations, but some orders are out of scope",
        };
        writeln!(f, "{verdict}")
    }
}

fn from_report(result: Result<PropertyReport, Error>) -> CheckOutcome {
    match result {
        Ok(report) if report.pass => CheckOutcome::Pass,
        Ok(report) => CheckOutcome::Fail(report.to_string()),
        Err(e @ Error::OrderTooSmall { .. }) => CheckOutcome::Scope(e.to_string()),
        Err(e @ Error::OutOfScope { .. }) => CheckOutcome::NotApplicable(e.to_string()),
        Err(e) => CheckOutcome::Fail(e.to_string()),
    }
}

fn cross_method(n: u32, reference: &CoeffSeq, oracle_cap: u32) -> CheckOutcome {
    let mut failures = Vec::new();
    let mut compare = |name: &str, other: Result<CoeffSeq, Error>| match other {
        Ok(seq) if &seq == reference => {}
        Ok(_) => failures.push(format!("{name} differs from recursive")),
        Err(e) => failures.push(format!("{name}: {e}")),
    };
    compare("wachs", compute_wachs(n));
    compare("coeff-recurrence", compute_coeff_recurrence(n));
    if n <= oracle_cap {
        compare("oracle", oracle_dn_with_cap(n, oracle_cap));
    }
    if failures.is_empty() {
        CheckOutcome::Pass
    } else {
        CheckOutcome::Fail(failures.join("; "))
    }
}

fn check_order(n: u32, checks: &[Check], oracle_cap: u32) -> OrderResult {
    let seq = compute_recursive(n);
    let outcomes = checks
        .iter()
        .map(|&check| {
            let seq = match &seq {
                Ok(seq) => seq,
                Err(e) => return (check, CheckOutcome::Scope(e.to_string())),
            };
            let outcome = match check {
                Check::Crossmethod => cross_method(n, seq, oracle_cap),
                Check::Ratio => from_report(verify_ratio_monotone(seq)),
                Check::Spiral => from_report(verify_spiral(seq)),
                Check::Unimodal => from_report(verify_unimodal_peak(seq)),
                Check::Logconcave => from_report(verify_log_concave(seq)),
                Check::Lemma2 if n >= MIN_THEOREM_ORDER && n % 2 == 1 => {
                    CheckOutcome::NotApplicable("closed forms cover even orders only".into())
                }
                Check::Lemma2 => from_report(verify_lemma2(seq)),
            };
            (check, outcome)
        })
        .collect();
    OrderResult { n, outcomes }
}

/// Runs `checks` for every `n` in `from..=to`, in parallel across orders.
/// Results are ordered by `n`.
pub fn run(from: u32, to: u32, checks: &[Check], oracle_cap: u32) -> SweepReport {
    let orders = (from..=to)
        .into_par_iter()
        .map(|n| check_order(n, checks, oracle_cap))
        .collect();
    SweepReport { orders }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theorem_range_passes() {
        let report = run(6, 12, &Check::ALL, 10);
        assert_eq!(report.status(), SweepStatus::Pass, "{report}");
        assert_eq!(report.orders.len(), 7);
        assert!(report.orders.windows(2).all(|w| w[0].n < w[1].n));
    }

    #[test]
    fn below_scope_is_its_own_status() {
        let report = run(5, 5, &[Check::Ratio], 10);
        assert_eq!(report.status(), SweepStatus::Scope);
        assert_eq!(report.status().exit_code(), 2);
    }

    #[test]
    fn crossmethod_runs_from_one() {
        let report = run(1, 5, &[Check::Crossmethod], 10);
        assert_eq!(report.status(), SweepStatus::Pass, "{report}");
    }

    #[test]
    fn zero_order_is_a_scope_refusal() {
        let report = run(0, 0, &[Check::Crossmethod], 10);
        assert_eq!(report.status(), SweepStatus::Scope);
    }
}
