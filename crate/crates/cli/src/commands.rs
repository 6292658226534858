use std::env;
use std::fs;
use std::io::Write;
use std::path::Path;

use clausen_core::classes::{m_star_deficit, n_star_deficit, probe_m, probe_n, probe_rtau, rtau_bound_check};
use clausen_core::hyper::{
    eval_3f2, gauss_sum_brute, gauss_sum_closed, shifted_sum_brute, shifted_sum_closed, weighted_sum_brute,
    weighted_sum_closed,
};
use clausen_core::operator::{apply_operator, OperatorCoeffs};
use clausen_core::verify::{evaluate_point_with, SweepSummary};
use clausen_core::{
    CoeffSeries, Complex64, GeneralHyperParams, HyperParams, JanowskiParams, ProbeResult, ShapeParams, SumValue,
    SweepGrid, SweepReport, Theorem, Tolerances,
};
use rayon::prelude::*;

use crate::args::{ApplyOperatorArgs, CheckClassArgs, Eval3f2Args, GridArgs, SumsArgs, SweepArgs, VerifyArgs};
use crate::error::{exit, CliError, CliResult};
use crate::grid::{parse_coeffs, parse_triple};
use crate::report::{fmt_f64, write_report, Format};

/// Caps the number of sweep worker threads.
pub const THREADS_ENV: &str = "CLAUSEN_VERIFY_THREADS";

fn clausen_params(a: Complex64, b: f64, c: f64) -> CliResult<HyperParams> {
    let p = if a == Complex64::new(0.0, 0.0) { HyperParams::degenerate(b, c)? } else { HyperParams::new(a, b, c)? };
    Ok(p)
}

fn csv_writer(out: &mut dyn Write) -> csv::Writer<&mut dyn Write> {
    csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out)
}

pub fn eval3f2(args: &Eval3f2Args, out: &mut dyn Write) -> CliResult<u8> {
    let a = Complex64::new(args.a_re, args.a_im);
    let gp = match (args.d, args.e) {
        (Some(d), Some(e)) => {
            let r = |x: f64| Complex64::new(x, 0.0);
            GeneralHyperParams::new(a, r(args.b), r(args.c), r(d), r(e))?
        }
        _ => GeneralHyperParams::clausen(&clausen_params(a, args.b, args.c)?),
    };
    let v = eval_3f2(&gp, Complex64::new(args.z_re, args.z_im), args.tol)?;
    let fields = [
        ("value_re", fmt_f64(v.value.re)),
        ("value_im", fmt_f64(v.value.im)),
        ("terms_used", v.terms_used.to_string()),
        ("tail_bound", fmt_f64(v.tail_bound)),
    ];
    match args.format {
        Format::Csv => {
            let mut w = csv_writer(out);
            w.write_record(fields.iter().map(|f| f.0))?;
            w.write_record(fields.iter().map(|f| f.1.as_str()))?;
            w.flush()?;
        }
        Format::Json => {
            let body: Vec<String> = fields
                .iter()
                .map(|(k, v)| match v.parse::<f64>() {
                    Ok(x) if x.is_finite() => format!("\"{k}\":{v}"),
                    _ => format!("\"{k}\":\"{v}\""),
                })
                .collect();
            writeln!(out, "{{{}}}", body.join(","))?;
        }
    }
    Ok(exit::OK)
}

pub fn sums(args: &SumsArgs, out: &mut dyn Write) -> CliResult<u8> {
    let p = clausen_params(Complex64::new(args.a, 0.0), args.b, args.c)?;
    let tol = args.tol;
    type Pair = (clausen_core::Result<f64>, clausen_core::Result<SumValue<f64>>);
    let rows: Vec<(&str, Pair)> = vec![
        ("gauss", (gauss_sum_closed(&p), gauss_sum_brute(&p, tol))),
        ("weighted_k1", (weighted_sum_closed(1, &p), weighted_sum_brute(1, &p, tol))),
        ("weighted_k2", (weighted_sum_closed(2, &p), weighted_sum_brute(2, &p, tol))),
        ("weighted_k3", (weighted_sum_closed(3, &p), weighted_sum_brute(3, &p, tol))),
        ("shifted", (shifted_sum_closed(&p), shifted_sum_brute(&p, tol))),
    ];
    let mut w = csv_writer(out);
    w.write_record(["sum", "closed", "brute", "terms_used", "tail_bound", "status"])?;
    let mut code = exit::OK;
    for (name, (closed, brute)) in rows {
        let c = closed.as_ref().copied().unwrap_or(f64::NAN);
        let (b, n, t) =
            brute.as_ref().map(|v| (v.value, v.terms_used, v.tail_bound)).unwrap_or((f64::NAN, 0, f64::NAN));
        let status = match (&closed, &brute) {
            (Ok(_), Ok(_)) if (c - b).abs() <= t + 1e-9 * c.abs() => "ok".to_string(),
            (Ok(_), Ok(_)) => {
                code = exit::VIOLATION;
                "mismatch".to_string()
            }
            (Err(e), _) | (_, Err(e)) => e.to_string(),
        };
        w.write_record([name.to_string(), fmt_f64(c), fmt_f64(b), n.to_string(), fmt_f64(t), status])?;
    }
    w.flush()?;
    Ok(code)
}

fn janowski(triple: &str) -> CliResult<JanowskiParams> {
    let (a, b, tau) = parse_triple(triple).map_err(CliError::usage)?;
    Ok(JanowskiParams::new(Complex64::new(tau, 0.0), a, b)?)
}

fn probe_rows(name: &str, r: &ProbeResult) -> [(String, String); 3] {
    [
        (format!("{name}_sup"), fmt_f64(r.sup_value)),
        (format!("{name}_argmax_re"), fmt_f64(r.argmax_z.re)),
        (format!("{name}_argmax_im"), fmt_f64(r.argmax_z.im)),
    ]
}

pub fn check_class(args: &CheckClassArgs, out: &mut dyn Write) -> CliResult<u8> {
    let f = CoeffSeries::new(parse_coeffs(&args.coeffs)?)?;
    let s = ShapeParams::new(args.lambda, args.alpha)?;
    let j = args.janowski.as_deref().map(janowski).transpose()?;
    let mut rows = vec![
        ("m_deficit".to_string(), fmt_f64(m_star_deficit(&f, &s))),
        ("n_deficit".to_string(), fmt_f64(n_star_deficit(&f, &s))),
    ];
    if args.probe {
        rows.extend(probe_rows("m_probe", &probe_m(&f, &s, args.radius, args.grid)?));
        rows.extend(probe_rows("n_probe", &probe_n(&f, &s, args.radius, args.grid)?));
    }
    if let Some(j) = &j {
        rows.push(("rtau_bound".into(), rtau_bound_check(&f, j).to_string()));
        if args.probe {
            rows.push(("rtau_probe_sup".into(), fmt_f64(probe_rtau(&f, j, args.radius, args.grid)?)));
        }
    }
    let mut w = csv_writer(out);
    w.write_record(["quantity", "value"])?;
    for (k, v) in rows {
        w.write_record([k, v])?;
    }
    w.flush()?;
    Ok(exit::OK)
}

pub fn apply(args: &ApplyOperatorArgs, out: &mut dyn Write) -> CliResult<u8> {
    let p = clausen_params(Complex64::new(args.a_re, args.a_im), args.b, args.c)?;
    let f = CoeffSeries::new(parse_coeffs(&args.coeffs)?)?;
    let ops = OperatorCoeffs::new(&p, f.degree());
    let g = apply_operator(&p, &f);
    let mut w = csv_writer(out);
    w.write_record(["n", "multiplier", "a_n", "A_n"])?;
    for (i, ((m, a), big)) in ops.mods().iter().zip(f.coeffs()).zip(g.coeffs()).enumerate() {
        w.write_record([(i + 2).to_string(), fmt_f64(*m), fmt_f64(*a), fmt_f64(*big)])?;
    }
    w.flush()?;
    Ok(exit::OK)
}

fn sweep_grid(g: &GridArgs) -> SweepGrid {
    SweepGrid {
        a_abs: g.a_abs.clone(),
        b: g.b.clone(),
        c: g.c.clone(),
        lambda: g.lambda.clone(),
        alpha: g.alpha.clone(),
        janowski: g.janowski.clone(),
    }
}

fn thread_pool() -> CliResult<rayon::ThreadPool> {
    let n = match env::var(THREADS_ENV) {
        Ok(s) => match s.trim().parse::<usize>() {
            Ok(n) if n > 0 => n,
            _ => return Err(CliError::usage(format!("{THREADS_ENV} must be a positive integer, got {s:?}"))),
        },
        Err(_) => 0,
    };
    rayon::ThreadPoolBuilder::new().num_threads(n).build().map_err(|e| CliError::usage(e.to_string()))
}

/// Run a sweep on the worker pool; outcomes keep grid order.
pub fn parallel_sweep(which: Theorem, grid: &SweepGrid, tol: &Tolerances) -> CliResult<SweepReport> {
    let points = grid.points(which);
    if points.is_empty() {
        return Err(CliError::usage("sweep grid is empty"));
    }
    let pool = thread_pool()?;
    let outcomes: Vec<_> = pool.install(|| points.par_iter().map(|pt| evaluate_point_with(which, pt, tol)).collect());
    Ok(SweepReport::from_outcomes(which, outcomes))
}

fn point_label(p: &clausen_core::SweepPoint) -> String {
    let mut s = format!("a_abs={} b={} c={} lambda={} alpha={}", p.a_abs, p.b, p.c, p.lambda, p.alpha);
    if let Some((a, b, t)) = p.janowski {
        s.push_str(&format!(" A={a} B={b} tau_abs={t}"));
    }
    s
}

fn write_summary(err: &mut dyn Write, r: &SweepReport) -> CliResult<()> {
    let SweepSummary {
        evaluated,
        skipped,
        errored,
        stated_true,
        derived_true,
        brute_true,
        violations,
        derived_misses,
        stated_mismatches,
    } = r.summary;
    let n = r.theorem.number();
    writeln!(err, "theorem {n}: {evaluated} evaluated, {skipped} skipped, {errored} errored")?;
    writeln!(err, "theorem {n}: stated true {stated_true}, derived true {derived_true}, brute true {brute_true}")?;
    writeln!(
        err,
        "theorem {n}: violations {violations}, derived misses {derived_misses}, stated/derived mismatches {stated_mismatches}"
    )?;
    for (p, reason) in &r.skipped {
        writeln!(err, "skipped {}: {reason}", point_label(p))?;
    }
    for v in r.verdicts.iter().filter(|v| v.skip_reason.is_some()) {
        writeln!(err, "errored {}: {}", point_label(&v.point), v.skip_reason.as_deref().unwrap_or_default())?;
    }
    Ok(())
}

fn tolerances(g: &GridArgs) -> CliResult<Tolerances> {
    Ok(Tolerances::new(g.tol, g.tail_target)?)
}

fn theorem(n: u8) -> CliResult<Theorem> {
    Theorem::try_from(n).map_err(|_| CliError::usage(format!("no theorem {n}")))
}

fn report_bytes(r: &SweepReport, format: Format) -> CliResult<Vec<u8>> {
    let mut buf = Vec::new();
    write_report(&mut buf, r, format)?;
    Ok(buf)
}

pub fn verify(args: &VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> CliResult<u8> {
    let which = theorem(args.theorem)?;
    let tol = tolerances(&args.grid)?;
    let report = parallel_sweep(which, &sweep_grid(&args.grid), &tol)?;
    let bytes = report_bytes(&report, args.grid.format)?;
    match &args.output {
        Some(path) => fs::write(path, bytes)?,
        None => out.write_all(&bytes)?,
    }
    write_summary(err, &report)?;
    Ok(if report.summary.violations > 0 { exit::VIOLATION } else { exit::OK })
}

/// Report file name for one theorem.
pub fn report_path(dir: &Path, which: Theorem, format: Format) -> std::path::PathBuf {
    dir.join(format!("theorem{}.{}", which.number(), format.extension()))
}

pub fn sweep(args: &SweepArgs, err: &mut dyn Write) -> CliResult<u8> {
    let tol = tolerances(&args.grid)?;
    let theorems = args.theorems.iter().map(|&n| theorem(n)).collect::<CliResult<Vec<_>>>()?;
    let grid = sweep_grid(&args.grid);
    fs::create_dir_all(&args.output_dir)?;
    let mut code = exit::OK;
    for which in theorems {
        let report = parallel_sweep(which, &grid, &tol)?;
        fs::write(report_path(&args.output_dir, which, args.grid.format), report_bytes(&report, args.grid.format)?)?;
        write_summary(err, &report)?;
        if report.summary.violations > 0 {
            code = exit::VIOLATION;
        }
    }
    Ok(code)
}
