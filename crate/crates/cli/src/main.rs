use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use circulant::{
    bounds_report, diameter_exact, diameter_formula, distance, formula_witness, oracle_diameter,
    sweep, ChordChoice, CirculantParams, RealizedPath, SweepOptions, SweepRow,
};

/// Above this n, --verify-oracle is skipped unless --force-oracle is given.
const ORACLE_DEFAULT_LIMIT: u64 = 2000;

const EXIT_USAGE: u8 = 1;
const EXIT_MISMATCH: u8 = 2;

/// Distances and diameters of the circulant graphs C_n(1,s).
#[derive(Parser, Debug)]
#[command(name = "circulant", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Distance between two vertices.
    Distance {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        s: u64,
        #[arg(long)]
        from: u64,
        #[arg(long)]
        to: u64,
        /// Also print the shortest canonical class and its vertex sequence.
        #[arg(long)]
        witness: bool,
        #[arg(long, value_enum, default_value_t = QueryFormat::Text)]
        format: QueryFormat,
    },
    /// Diameter of C_n(1,s).
    Diameter {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        s: u64,
        #[arg(long, value_enum, default_value_t = DiamMethod::Algorithm)]
        method: DiamMethod,
        /// Also print witness vertices and a shortest path to one of them.
        #[arg(long)]
        witness: bool,
        #[arg(long, value_enum, default_value_t = QueryFormat::Text)]
        format: QueryFormat,
    },
    /// Upper bounds on the diameter, next to the exact value.
    Bounds {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        s: u64,
        #[arg(long, value_enum, default_value_t = QueryFormat::Text)]
        format: QueryFormat,
    },
    /// One report row per valid (n, s) in a range.
    Sweep {
        #[arg(long)]
        n_min: u64,
        #[arg(long)]
        n_max: u64,
        /// "all" or a single chord length.
        #[arg(long, default_value = "all", value_parser = parse_chord)]
        s: ChordChoice,
        /// Cross-check every row against breadth-first search.
        #[arg(long)]
        verify_oracle: bool,
        /// Run the oracle even for n above 2000.
        #[arg(long)]
        force_oracle: bool,
        /// Write to this file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = SweepFormat::Csv)]
        format: SweepFormat,
        /// Worker threads; 0 uses every core.
        #[arg(long, env = "CIRC_JOBS")]
        jobs: Option<usize>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum QueryFormat {
    Text,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum SweepFormat {
    Csv,
    Json,
    Ndjson,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum DiamMethod {
    Algorithm,
    Formula,
    Oracle,
}

fn parse_chord(raw: &str) -> std::result::Result<ChordChoice, String> {
    if raw.eq_ignore_ascii_case("all") {
        return Ok(ChordChoice::All);
    }
    raw.parse::<u64>()
        .map(ChordChoice::Fixed)
        .map_err(|_| format!("expected \"all\" or a positive integer, got {raw:?}"))
}

/// Outcome of a subcommand that ran to completion.
enum Outcome {
    Ok,
    Mismatch,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Mismatch) => ExitCode::from(EXIT_MISMATCH),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn run(command: Command) -> Result<Outcome> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match command {
        Command::Distance { n, s, from, to, witness, format } => {
            run_distance(&mut out, n, s, from, to, witness, format)?
        }
        Command::Diameter { n, s, method, witness, format } => {
            run_diameter(&mut out, n, s, method, witness, format)?
        }
        Command::Bounds { n, s, format } => run_bounds(&mut out, n, s, format)?,
        Command::Sweep { n_min, n_max, s, verify_oracle, force_oracle, out: path, format, jobs } => {
            let mut opts = SweepOptions::new(n_min, n_max);
            opts.chord = s;
            opts.verify_oracle = verify_oracle;
            if verify_oracle && !force_oracle && n_max > ORACLE_DEFAULT_LIMIT {
                eprintln!(
                    "warning: skipping the oracle for n > {ORACLE_DEFAULT_LIMIT}; pass --force-oracle to run it"
                );
                opts.oracle_n_limit = Some(ORACLE_DEFAULT_LIMIT);
            }
            let rows = run_sweep(&opts, jobs)?;
            match path {
                Some(path) => {
                    let file = File::create(&path)
                        .with_context(|| format!("creating {}", path.display()))?;
                    let mut w = BufWriter::new(file);
                    write_rows(&mut w, &rows, format)?;
                    w.flush()?;
                }
                None => write_rows(&mut out, &rows, format)?,
            }
            if rows.iter().any(|r| !r.verified()) {
                let bad = rows.iter().filter(|r| !r.verified()).count();
                eprintln!("verification failed on {bad} row(s)");
                return Ok(Outcome::Mismatch);
            }
        }
    }
    out.flush()?;
    Ok(Outcome::Ok)
}

fn params(n: u64, s: u64) -> Result<CirculantParams> {
    CirculantParams::new(n, s).context("invalid graph parameters")
}

fn shifted(path: &RealizedPath, by: u64, n: u64) -> RealizedPath {
    RealizedPath {
        vertices: path.vertices.iter().map(|v| (v + by) % n).collect(),
        ..path.clone()
    }
}

fn run_distance(
    out: &mut impl Write,
    n: u64,
    s: u64,
    from: u64,
    to: u64,
    witness: bool,
    format: QueryFormat,
) -> Result<()> {
    let p = params(n, s)?;
    let r = distance(&p, from, to)?;
    let path = shifted(&r.realized, from, n);
    match format {
        QueryFormat::Text => {
            writeln!(out, "{}", r.value)?;
            if witness {
                writeln!(out, "class: {}", r.argmin_class)?;
                writeln!(out, "path: {path}")?;
            }
        }
        QueryFormat::Json => {
            let mut doc = json!({ "n": n, "s": s, "from": from, "to": to, "value": r.value });
            if witness {
                doc["class"] = json!({
                    "family": r.argmin_class.family,
                    "t": r.argmin_class.t,
                    "shape": r.argmin_class.shape.to_string(),
                });
                doc["path"] = json!(path.vertices);
                doc["path_text"] = json!(path.to_string());
            }
            writeln!(out, "{doc}")?;
        }
    }
    Ok(())
}

fn run_diameter(
    out: &mut impl Write,
    n: u64,
    s: u64,
    method: DiamMethod,
    witness: bool,
    format: QueryFormat,
) -> Result<()> {
    let p = params(n, s)?;
    let (value, witnesses, case, subcase) = match method {
        DiamMethod::Algorithm => {
            let r = diameter_exact(&p);
            (Some(r.value), r.witnesses, None, None)
        }
        DiamMethod::Oracle => {
            let r = oracle_diameter(&p);
            (Some(r.value), r.witnesses, None, None)
        }
        DiamMethod::Formula => {
            let case = circulant::classify_case(&p.decompose(), &p);
            let f = diameter_formula(&p);
            let w = formula_witness(&p).into_iter().collect();
            (f.map(|f| f.value), w, Some(case), f.and_then(|f| f.subcase))
        }
    };
    let path = match (witness, witnesses.first()) {
        (true, Some(&w)) => Some(distance(&p, 0, w)?.realized),
        _ => None,
    };
    let method_label = match method {
        DiamMethod::Algorithm => "algorithm",
        DiamMethod::Formula => "formula",
        DiamMethod::Oracle => "oracle",
    };
    match format {
        QueryFormat::Text => {
            match value {
                Some(v) => writeln!(out, "{v}")?,
                None => writeln!(out, "null")?,
            }
            if let Some(case) = case {
                match (value, subcase) {
                    (None, _) => writeln!(out, "no closed form (case: {case})")?,
                    (Some(_), Some(sub)) => writeln!(out, "case: {case} ({sub})")?,
                    (Some(_), None) => writeln!(out, "case: {case}")?,
                }
            }
            if witness {
                let list: Vec<String> = witnesses.iter().map(u64::to_string).collect();
                writeln!(out, "witnesses: {}", list.join(" "))?;
                if let Some(path) = &path {
                    writeln!(out, "path: {path}")?;
                }
            }
        }
        QueryFormat::Json => {
            let mut doc = json!({ "n": n, "s": s, "method": method_label, "value": value });
            if let Some(case) = case {
                doc["case"] = json!(case.as_str());
                doc["subcase"] = json!(subcase);
            }
            if witness {
                doc["witnesses"] = json!(witnesses);
                doc["path"] = path.as_ref().map_or(Value::Null, |p| json!(p.vertices));
                doc["path_text"] = path.as_ref().map_or(Value::Null, |p| json!(p.to_string()));
            }
            writeln!(out, "{doc}")?;
        }
    }
    Ok(())
}

fn run_bounds(out: &mut impl Write, n: u64, s: u64, format: QueryFormat) -> Result<()> {
    let p = params(n, s)?;
    let b = bounds_report(&p);
    let diam = diameter_exact(&p).value;
    let slack = b.combined - diam;
    match format {
        QueryFormat::Text => writeln!(
            out,
            "du={} gn={} new={} combined={} diam={diam} slack={slack}",
            b.du, b.gobel_neutel, b.new_bound, b.combined
        )?,
        QueryFormat::Json => {
            let doc = json!({
                "n": n,
                "s": s,
                "du": b.du,
                "gobel_neutel": b.gobel_neutel,
                "new_bound": b.new_bound,
                "combined": b.combined,
                "diam": diam,
                "slack": slack,
            });
            writeln!(out, "{doc}")?;
        }
    }
    Ok(())
}

#[cfg(feature = "parallel")]
fn run_sweep(opts: &SweepOptions, jobs: Option<usize>) -> Result<Vec<SweepRow>> {
    match jobs {
        Some(jobs) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(jobs)
                .build()
                .context("building worker pool")?;
            Ok(pool.install(|| sweep(opts)))
        }
        None => Ok(sweep(opts)),
    }
}

#[cfg(not(feature = "parallel"))]
fn run_sweep(opts: &SweepOptions, jobs: Option<usize>) -> Result<Vec<SweepRow>> {
    if jobs.is_some_and(|j| j != 1) {
        eprintln!("warning: built without the parallel feature; --jobs ignored");
    }
    Ok(sweep(opts))
}

fn write_rows(out: &mut impl Write, rows: &[SweepRow], format: SweepFormat) -> Result<()> {
    match format {
        SweepFormat::Csv => {
            let mut w = csv::WriterBuilder::new()
                .has_headers(false)
                .terminator(csv::Terminator::Any(b'\n'))
                .from_writer(out);
            // Written by hand so an empty sweep still gets a header.
            w.write_record(SweepRow::COLUMNS)?;
            for row in rows {
                w.serialize(row)?;
            }
            w.flush()?;
        }
        SweepFormat::Json => {
            serde_json::to_writer_pretty(&mut *out, rows)?;
            writeln!(out)?;
        }
        SweepFormat::Ndjson => {
            for row in rows {
                serde_json::to_writer(&mut *out, row)?;
                writeln!(out)?;
            }
        }
    }
    Ok(())
}
