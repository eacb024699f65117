//! Subcommand implementations. All outputs are deterministic: identical
//! configurations produce byte-identical files.

use std::fs;
use std::path::Path;

use num_complex::Complex64;

use kafourier::laguerre::{basis_function, Branch};
use kafourier::report::{all_passed, fmt_float, render_reports};
use kafourier::scalar::format_rational;
use kafourier::spectral::{expand, generalized_ft, laguerre_semigroup, SpectralCoefficients};

use crate::checks::{select, CheckContext};
use crate::config::{RunConfig, TransformRequest};

/// Process exit codes: 0 = all checks passed, 1 = some invariant failed,
/// 2 = configuration error. Code 2 cases are raised before these commands
/// run.
pub const EXIT_PASS: i32 = 0;
pub const EXIT_INVARIANT_FAILURE: i32 = 1;
pub const EXIT_CONFIG_ERROR: i32 = 2;

fn ensure_out_dir(config: &RunConfig) -> anyhow::Result<()> {
    fs::create_dir_all(&config.out_dir)?;
    Ok(())
}

fn write_deterministic(path: &Path, content: &str) -> anyhow::Result<()> {
    fs::write(path, content)?;
    Ok(())
}

/// Run the selected verification checks, write `report.txt`, and return
/// the exit code.
pub fn cmd_verify(config: &RunConfig) -> anyhow::Result<i32> {
    ensure_out_dir(config)?;
    let checks = select(config.checks.as_deref())?;
    let ctx = CheckContext { config };
    let mut text = String::new();
    text.push_str(&format!("configuration: {}\n", config.echo));
    let mut ok = true;
    for check in checks {
        let reports = check.run(&ctx)?;
        ok &= all_passed(&reports);
        let title = format!("{}: {}", check.name(), check.summary());
        text.push_str(&render_reports(&title, &reports));
    }
    text.push_str(if ok {
        "verdict: PASS\n"
    } else {
        "verdict: FAIL\n"
    });
    print!("{text}");
    write_deterministic(&config.out_dir.join("report.txt"), &text)?;
    Ok(if ok { EXIT_PASS } else { EXIT_INVARIANT_FAILURE })
}

/// Emit the discrete spectrum table for both branches:
/// `branch,m,l,eigenvalue,eigenvalue_float`.
pub fn cmd_spectrum(config: &RunConfig) -> anyhow::Result<i32> {
    ensure_out_dir(config)?;
    let mut csv = String::from("branch,m,l,eigenvalue,eigenvalue_float\n");
    for &m in &config.sectors {
        for branch in [Branch::Positive, Branch::Negative] {
            let spec = config.basis_spec(m, branch);
            for l in 0..=config.l_max {
                let eigenvalue = spec.compact_eigenvalue(l);
                csv.push_str(&format!(
                    "{},{},{},{},{}\n",
                    branch.label(),
                    m,
                    l,
                    format_rational(&eigenvalue),
                    fmt_float(kafourier::scalar::rational_to_f64(&eigenvalue)),
                ));
            }
        }
    }
    print!("{csv}");
    write_deterministic(&config.out_dir.join("spectrum.csv"), &csv)?;
    Ok(EXIT_PASS)
}

fn coefficients_csv(c: &SpectralCoefficients, m: u32) -> String {
    let mut csv = String::from("m,l,re,im\n");
    for (l, coeff) in c.coeffs.iter().enumerate() {
        csv.push_str(&format!(
            "{m},{l},{},{}\n",
            fmt_float(coeff.re),
            fmt_float(coeff.im)
        ));
    }
    csv
}

/// Expand the configured input function and apply the requested diagonal
/// transform, emitting coefficient tables before and after.
pub fn cmd_transform(config: &RunConfig) -> anyhow::Result<i32> {
    ensure_out_dir(config)?;
    let Some(input) = &config.input else {
        anyhow::bail!("transform requires an \"input\" function in the configuration");
    };
    let Some(request) = &config.transform else {
        anyhow::bail!("transform requires a \"transform\" section in the configuration");
    };
    let (branch, sector_override) = match request {
        TransformRequest::Fourier { branch, m } => (*branch, *m),
        TransformRequest::Semigroup { branch, m, .. } => (*branch, *m),
    };
    let m = sector_override.unwrap_or(config.sectors[0]);
    let spec = config.basis_spec(m, branch);

    let expansion = expand(input, &spec, config.truncation, &config.quadrature)?;
    let before = coefficients_csv(&expansion.coefficients, m);
    let after_coeffs = match request {
        TransformRequest::Fourier { .. } => generalized_ft(&expansion.coefficients)?,
        TransformRequest::Semigroup { z, .. } => laguerre_semigroup(*z, &expansion.coefficients)?,
    };
    let after = coefficients_csv(&after_coeffs, m);

    println!(
        "expansion residual: {} (truncation {})",
        fmt_float(expansion.residual),
        config.truncation
    );
    write_deterministic(&config.out_dir.join("coefficients_in.csv"), &before)?;
    write_deterministic(&config.out_dir.join("coefficients_out.csv"), &after)?;
    Ok(EXIT_PASS)
}

/// Emit basis-function tables `l,r,f_value` for each configured sector on
/// both branches.
pub fn cmd_basis_table(config: &RunConfig) -> anyhow::Result<i32> {
    ensure_out_dir(config)?;
    for &m in &config.sectors {
        for branch in [Branch::Positive, Branch::Negative] {
            let spec = config.basis_spec(m, branch);
            let mut csv = String::from("l,r,f_value\n");
            for l in 0..=config.l_max {
                let f = basis_function(&spec, l)?;
                for &r in &config.r_grid {
                    let value: Complex64 = f.eval(r);
                    csv.push_str(&format!("{l},{},{}\n", fmt_float(r), fmt_float(value.re)));
                }
            }
            let file = format!("basis_{}_m{}.csv", branch.label(), m);
            write_deterministic(&config.out_dir.join(file), &csv)?;
        }
    }
    println!(
        "wrote basis tables for sectors {:?} to {}",
        config.sectors,
        config.out_dir.display()
    );
    Ok(EXIT_PASS)
}
