//! Verification report structures with deterministic plain-text rendering.

/// Outcome of one verified identity family.
#[derive(Debug, Clone)]
pub struct IdentityReport {
    pub name: String,
    /// Configuration echo (deterministic, human-readable).
    pub config: String,
    pub max_defect: f64,
    pub tolerance: f64,
    pub passed: bool,
    /// Optional per-case lines.
    pub details: Vec<String>,
}

impl IdentityReport {
    /// Build a report from a measured defect; NaN defects fail.
    pub fn from_defect(name: &str, config: &str, max_defect: f64, tolerance: f64) -> Self {
        Self {
            name: name.to_string(),
            config: config.to_string(),
            max_defect,
            tolerance,
            passed: max_defect <= tolerance,
            details: Vec::new(),
        }
    }

    pub fn with_details(mut self, details: Vec<String>) -> Self {
        self.details = details;
        self
    }
}

/// Fixed 17-significant-digit scientific notation: round-trip exact for
/// 64-bit floats and stable across runs.
pub fn fmt_float(x: f64) -> String {
    format!("{x:.16e}")
}

/// Defect accumulator: like `f64::max` but NaN anywhere poisons the
/// result to infinity instead of being silently dropped.
pub fn defect_join(acc: f64, defect: f64) -> f64 {
    if acc.is_nan() || defect.is_nan() {
        f64::INFINITY
    } else {
        acc.max(defect)
    }
}

/// Render a block of identity reports as plain text. Byte-for-byte
/// deterministic for a fixed input.
pub fn render_reports(title: &str, reports: &[IdentityReport]) -> String {
    let mut out = String::new();
    out.push_str(&format!("== {title} ==\n"));
    for report in reports {
        out.push_str(&format!(
            "[{}] {} | {} | max defect {} (tolerance {})\n",
            if report.passed { "PASS" } else { "FAIL" },
            report.name,
            report.config,
            fmt_float(report.max_defect),
            fmt_float(report.tolerance),
        ));
        for line in &report.details {
            out.push_str(&format!("    {line}\n"));
        }
    }
    out
}

pub fn all_passed(reports: &[IdentityReport]) -> bool {
    reports.iter().all(|r| r.passed)
}
