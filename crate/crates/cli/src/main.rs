mod args;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;
use std::process::ExitCode;

use clap::Parser;
use num_bigint::BigInt;
use qpartitions::combinatorics::{
    enumerate_vectors, enumerated_series, residue_classes, series_counts, Family,
};
use qpartitions::theta::SeriesName;
use qpartitions::verification::{
    check_congruence, negative_controls, run_items, run_suite, suite_items, CongruenceSpec,
    Report, Status, Target,
};
use qpartitions::Error;
use serde::Serialize;

use args::{Cli, Command, FamilyArg, FamilySelect, Format};

enum Failure {
    /// Bad input: exit 2.
    Usage(String),
    /// Anything else: exit 3.
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::UnknownSeries(_)
            | Error::InvalidParameter(_)
            | Error::InvalidDissection { .. }
            | Error::EnumerationTooLarge { .. }
            | Error::ZeroSubstitution
            | Error::InvalidFactor(_) => Failure::Usage(e.to_string()),
            _ => Failure::Internal(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Internal(format!("i/o: {e}"))
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Internal(format!("csv: {e}"))
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Internal(format!("json: {e}"))
    }
}

type Outcome = Result<bool, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Expand(a) => expand(a),
        Command::Verify(a) => verify(a),
        Command::Suite(a) => suite(a),
        Command::Ranktable(a) => ranktable(a),
        Command::Cranktable(a) => cranktable(a),
        Command::Sweep(a) => sweep(a),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(m)) => {
            eprintln!("internal error: {m}");
            ExitCode::from(3)
        }
    }
}

fn sink(path: Option<&Path>) -> Result<Box<dyn Write>, Failure> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p).map_err(|e| {
            Failure::Internal(format!("cannot create {}: {e}", p.display()))
        })?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn write_json(path: Option<&Path>, value: &impl Serialize) -> Result<(), Failure> {
    let mut w = sink(path)?;
    serde_json::to_writer_pretty(&mut w, value)?;
    writeln!(w)?;
    w.flush()?;
    Ok(())
}

fn family(sel: &FamilySelect) -> Family {
    match sel.family {
        FamilyArg::V => Family::V { t: sel.t, h: sel.h },
        FamilyArg::W2 => Family::W2,
    }
}

fn family_t(f: Family) -> usize {
    f.t()
}

fn family_name(f: Family) -> &'static str {
    match f {
        Family::V { .. } => "V",
        Family::W2 => "W2",
    }
}

fn expand(a: args::ExpandArgs) -> Outcome {
    let name = SeriesName::parse(&a.series, a.t, a.k)?;
    let mut series = name.build(a.precision.precision)?;
    if let Some((m, r)) = a.dissect {
        series = series.dissect(m, r)?;
    }
    let path = a.out.output.as_deref();
    match a.out.format {
        Format::Json => {
            #[derive(Serialize)]
            struct Out {
                series: String,
                #[serde(skip_serializing_if = "Option::is_none")]
                dissect: Option<(usize, usize)>,
                precision: usize,
                coefficients: Vec<String>,
            }
            write_json(
                path,
                &Out {
                    series: name.to_string(),
                    dissect: a.dissect,
                    precision: series.precision(),
                    coefficients: series.to_decimal_strings(),
                },
            )?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(sink(path)?);
            w.write_record(["n", "coefficient"])?;
            for (n, c) in series.coeffs().iter().enumerate() {
                w.write_record([n.to_string(), c.to_string()])?;
            }
            w.flush()?;
        }
        Format::Plain => {
            let mut w = sink(path)?;
            for (n, c) in series.coeffs().iter().enumerate() {
                writeln!(w, "{n}: {c}")?;
            }
            w.flush()?;
        }
    }
    Ok(true)
}

fn finish_reports(reports: Vec<Report>, no_timings: bool, path: Option<&Path>) -> Outcome {
    let reports: Vec<Report> = if no_timings {
        reports.into_iter().map(Report::without_timing).collect()
    } else {
        reports
    };
    write_json(path, &reports)?;
    let failed: Vec<&str> = reports
        .iter()
        .filter(|r| r.status == Status::Fail)
        .map(|r| r.id.as_str())
        .collect();
    let skipped = reports.iter().filter(|r| r.status == Status::Skipped).count();
    eprintln!(
        "{} checks: {} passed, {} failed, {skipped} skipped",
        reports.len(),
        reports.len() - failed.len() - skipped,
        failed.len()
    );
    for id in &failed {
        eprintln!("failed: {id}");
    }
    Ok(failed.is_empty())
}

fn verify(a: args::VerifyArgs) -> Outcome {
    let mut items = suite_items();
    if a.controls || a.list {
        items.extend(negative_controls());
    }
    if a.list {
        let mut w = sink(a.output.as_deref())?;
        for item in &items {
            writeln!(
                w,
                "{}\t{}\tneeds {}",
                item.id,
                item.tags.join(","),
                item.required_precision()
            )?;
        }
        w.flush()?;
        return Ok(true);
    }
    let mut chosen = Vec::new();
    for id in &a.id {
        match items.iter().find(|i| &i.id == id) {
            Some(item) => chosen.push(item.clone()),
            None => return Err(Failure::Usage(format!("no suite item `{id}` (see --list)"))),
        }
    }
    let reports = run_items(&chosen, a.precision.precision)?;
    finish_reports(reports, a.no_timings, a.output.as_deref())
}

fn suite(a: args::SuiteArgs) -> Outcome {
    let reports = run_suite(a.precision.precision, a.filter.as_deref())?;
    finish_reports(reports, a.no_timings, a.output.as_deref())
}

fn ranktable(a: args::RankArgs) -> Outcome {
    let fam = family(&a.family);
    let modulus = a.modulus.unwrap_or(match fam {
        Family::V { .. } => 5,
        Family::W2 => 7,
    });
    let vectors = enumerate_vectors(fam, a.n, a.force)?;
    let classes = residue_classes(fam, a.n, modulus, a.force)?;
    let path = a.out.output.as_deref();
    match a.out.format {
        Format::Json => {
            #[derive(Serialize)]
            struct Row {
                components: String,
                weight: i64,
                statistic: i64,
            }
            #[derive(Serialize)]
            struct Summary {
                modulus: usize,
                classes: Vec<String>,
                total: String,
            }
            #[derive(Serialize)]
            struct Out {
                family: &'static str,
                t: usize,
                n: usize,
                rows: Vec<Row>,
                summary: Summary,
            }
            let total: BigInt = classes.iter().sum();
            write_json(
                path,
                &Out {
                    family: family_name(fam),
                    t: family_t(fam),
                    n: a.n,
                    rows: vectors
                        .iter()
                        .map(|v| Row {
                            components: v.render_components(),
                            weight: v.weight(),
                            statistic: v.statistic(),
                        })
                        .collect(),
                    summary: Summary {
                        modulus,
                        classes: classes.iter().map(ToString::to_string).collect(),
                        total: total.to_string(),
                    },
                },
            )?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(sink(path)?);
            w.write_record(["n", "family", "t", "components", "weight", "statistic"])?;
            for v in &vectors {
                w.write_record([
                    a.n.to_string(),
                    family_name(fam).to_string(),
                    family_t(fam).to_string(),
                    v.render_components(),
                    v.weight().to_string(),
                    v.statistic().to_string(),
                ])?;
            }
            w.flush()?;
            eprintln!("residues mod {modulus}: {}", join(&classes));
        }
        Format::Plain => {
            let mut w = sink(path)?;
            for v in &vectors {
                writeln!(w, "{}  weight {}  statistic {}", v.render_components(), v.weight(), v.statistic())?;
            }
            writeln!(w, "residues mod {modulus}: {}", join(&classes))?;
            w.flush()?;
        }
    }
    Ok(true)
}

fn join(values: &[BigInt]) -> String {
    values
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn cranktable(a: args::CrankArgs) -> Outcome {
    let fam = family(&a.family);
    let table = if a.enumerate {
        enumerated_series(fam, a.n_max + 1, a.force)?
    } else {
        series_counts(fam, a.n_max + 1)?
    };
    let mut rows = Vec::new();
    for n in 0..=a.n_max {
        for (m, c) in table.row(n).into_iter().flatten() {
            rows.push((n, *m, c.to_string()));
        }
    }
    let path = a.out.output.as_deref();
    match a.out.format {
        Format::Json => {
            #[derive(Serialize)]
            struct Row<'a> {
                n: usize,
                family: &'static str,
                t: usize,
                statistic: i64,
                count: &'a str,
            }
            let out: Vec<Row> = rows
                .iter()
                .map(|(n, m, c)| Row {
                    n: *n,
                    family: family_name(fam),
                    t: family_t(fam),
                    statistic: *m,
                    count: c,
                })
                .collect();
            write_json(path, &out)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(sink(path)?);
            w.write_record(["n", "family", "t", "statistic", "count"])?;
            for (n, m, c) in &rows {
                w.write_record([
                    n.to_string(),
                    family_name(fam).to_string(),
                    family_t(fam).to_string(),
                    m.to_string(),
                    c.clone(),
                ])?;
            }
            w.flush()?;
        }
        Format::Plain => {
            let mut w = sink(path)?;
            for (n, m, c) in &rows {
                writeln!(w, "n {n}  m {m}: {c}")?;
            }
            w.flush()?;
        }
    }
    Ok(true)
}

fn sweep(a: args::SweepArgs) -> Outcome {
    let source = SeriesName::parse(&a.series, a.t, a.k)?;
    let target = match a.modulus {
        Some(m) => Target::Modulus(m),
        None => Target::Zero,
    };
    let id = format!("sweep-{source}");
    let spec = CongruenceSpec::new(&id, "user supplied", source, a.progression, target, a.n_max);
    let report = check_congruence(&spec, a.precision.precision)?;
    finish_reports(vec![report], a.no_timings, a.output.as_deref())
}
