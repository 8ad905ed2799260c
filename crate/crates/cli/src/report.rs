//! Decision reports: the JSON document and its text rendering.

use std::fmt::Write as _;
use std::time::Instant;

use num_traits::Zero;
use one_radical::arith::rational::serde_str;
use one_radical::solvers::depress;
use one_radical::verify::numeric::format_scientific;
use one_radical::verify::{numeric_cross_check, verify_certificate};
use one_radical::{decide_polynomial, Certificate, Diagnostics, Outcome, QPoly, Rational};
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DepressedForm {
    pub poly: String,
    #[serde(with = "serde_str::vec")]
    pub coeffs: Vec<Rational>,
    /// `f(x)` is depressed by `x = y − shift`.
    #[serde(with = "serde_str")]
    pub shift: Rational,
    /// Leading coefficient divided out before shifting.
    #[serde(with = "serde_str")]
    pub scale: Rational,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Verification {
    pub exact: bool,
    /// `|f(root)|` at `digits` decimal digits, in scientific notation.
    pub numeric_residual: String,
    pub digits: u32,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Timing {
    pub elapsed_us: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DecisionReport {
    pub schema_version: u32,
    pub input: String,
    #[serde(with = "serde_str::vec")]
    pub coeffs: Vec<Rational>,
    pub degree: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub depressed: Option<DepressedForm>,
    pub verdict: String,
    #[serde(with = "serde_str::option", default, skip_serializing_if = "Option::is_none")]
    pub rational_root: Option<Rational>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Certificate>,
    /// Human-readable form of the certified root.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub root: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub diagnostics: Diagnostics,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verification: Option<Verification>,
    /// Wall-clock data; excluded from [`DecisionReport::comparable`].
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing: Option<Timing>,
}

/// Process exit status for each verdict tag.
pub mod exit {
    pub const SOLVABLE: i32 = 0;
    pub const NOT_SOLVABLE: i32 = 1;
    pub const UNKNOWN: i32 = 2;
    pub const ERROR: i32 = 3;

    pub fn for_verdict(tag: &str) -> i32 {
        match tag {
            "rational_root" | "one_radical" => SOLVABLE,
            "not_one_solvable" => NOT_SOLVABLE,
            "unknown" => UNKNOWN,
            _ => ERROR,
        }
    }
}

impl DecisionReport {
    /// Runs the decision pipeline on `f` and verifies any root found.
    pub fn build(f: &QPoly, digits: u32) -> one_radical::Result<Self> {
        let start = Instant::now();
        let verdict = decide_polynomial(f)?;
        let degree = f.degree().unwrap_or(0);
        let depressed = if matches!(degree, 3 | 4) {
            let d = depress(f)?;
            Some(DepressedForm {
                poly: d.poly.to_string(),
                coeffs: d.poly.coeffs().to_vec(),
                shift: d.shift,
                scale: d.scale,
            })
        } else {
            None
        };

        let mut report = DecisionReport {
            schema_version: SCHEMA_VERSION,
            input: f.to_string(),
            coeffs: f.coeffs().to_vec(),
            degree,
            depressed,
            verdict: verdict.outcome.tag().to_string(),
            rational_root: None,
            certificate: None,
            root: None,
            reason: None,
            diagnostics: verdict.diagnostics,
            verification: None,
            timing: None,
        };
        match verdict.outcome {
            Outcome::RationalRoot(r) => {
                let residual = f.eval(&r);
                report.verification = Some(Verification {
                    exact: residual.is_zero(),
                    numeric_residual: format_scientific(&residual),
                    digits,
                });
                report.root = Some(r.to_string());
                report.rational_root = Some(r);
            }
            Outcome::OneRadical(cert) => {
                report.verification = Some(Verification {
                    exact: verify_certificate(f, &cert)?,
                    numeric_residual: format_scientific(&numeric_cross_check(f, &cert, digits)),
                    digits,
                });
                report.root = Some(cert.to_string());
                report.certificate = Some(cert);
            }
            Outcome::NotOneSolvable(why) | Outcome::Unknown(why) => report.reason = Some(why),
        }
        report.timing = Some(Timing { elapsed_us: start.elapsed().as_micros() as u64 });
        Ok(report)
    }

    pub fn exit_code(&self) -> i32 {
        exit::for_verdict(&self.verdict)
    }

    /// The report without wall-clock data; identical across runs.
    pub fn comparable(&self) -> Self {
        DecisionReport { timing: None, ..self.clone() }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "input:      {}", self.input);
        if let Some(d) = &self.depressed {
            let _ = writeln!(s, "depressed:  {} (shift {}, scale {})", d.poly, d.shift, d.scale);
        }
        let _ = writeln!(s, "verdict:    {}", self.verdict);
        if let Some(root) = &self.root {
            let _ = writeln!(s, "root:       {root}");
        }
        if let Some(reason) = &self.reason {
            let _ = writeln!(s, "reason:     {reason}");
        }
        let d = &self.diagnostics;
        if let Some(v) = &d.d_pq {
            let _ = writeln!(s, "D_pq:       {v}");
        }
        if let Some(v) = &d.quadratic_discriminant {
            let _ = writeln!(s, "quad disc:  {v}");
        }
        for g in &d.gammas {
            let mark = if Some(&g.alpha) == d.alpha.as_ref() { " *" } else { "" };
            let adm = if g.admissible { "" } else { " (2α ≤ p)" };
            let _ = writeln!(s, "alpha:      {}  Gamma = {}{adm}{mark}", g.alpha, g.gamma);
        }
        if let Some(v) = &self.verification {
            let _ = writeln!(s, "verified:   exact={} residual={} ({} digits)", v.exact, v.numeric_residual, v.digits);
        }
        if let Some(t) = &self.timing {
            let _ = writeln!(s, "elapsed:    {} us", t.elapsed_us);
        }
        s
    }
}
