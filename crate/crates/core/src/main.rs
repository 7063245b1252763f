use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use ideal_polyhedra::analysis::{
    atkinson_bounds, certified_cutoff, distinct_volumes, format_volume, itr_reachable,
    volume_rounding, volume_spectrum, BoundsReport, Census, CensusRecord, BOUND_TOLERANCE,
};
use ideal_polyhedra::enumeration::{check_validity, Enumerator, MIN_FACES};
use ideal_polyhedra::planar::{
    canonical_form, parse_planar_code, trace_faces, write_json_lines, write_planar_code,
    PlanarGraph, PLANAR_CODE_HEADER,
};
use ideal_polyhedra::volume::{ideal_volume_with, SolverOptions};

#[derive(Parser)]
#[command(
    name = "idealpoly",
    version,
    about = "Ideal right-angled hyperbolic polyhedra"
)]
struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true, value_parser = parse_jobs)]
    jobs: Option<usize>,

    /// Seed for the optimizer's randomized feasibility restarts.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate all polyhedra up to a face count.
    Enumerate {
        #[arg(long, value_parser = parse_max_faces)]
        max_faces: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "planar_code")]
        format: Format,
        /// Report each enumeration level on standard error.
        #[arg(long)]
        progress: bool,
    },
    /// Compute volumes of the graphs in a planar_code or JSON-lines stream.
    Volume {
        /// Input stream (default: standard input).
        #[arg(long = "in")]
        input: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Enumerate and compute volumes, writing JSON-lines records and a
    /// planar_code sidecar next to the output file.
    Census {
        #[arg(long, value_parser = parse_max_faces)]
        max_faces: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        progress: bool,
    },
    /// Sorted distinct volumes.
    Spectrum {
        #[command(flatten)]
        source: CensusSource,
        /// Only list values up to this volume; fails if the census is too
        /// small to contain all of them.
        #[arg(long)]
        cutoff: Option<f64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare every census volume with the known bounds.
    Bounds {
        #[command(flatten)]
        source: CensusSource,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Search for polyhedra whose triangles are pairwise vertex-disjoint.
    Itr {
        #[arg(long, value_parser = parse_max_faces)]
        max_faces: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        progress: bool,
    },
    /// Volume against vertex count with the lower and upper bound curves.
    PlotData {
        #[command(flatten)]
        source: CensusSource,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct CensusSource {
    /// Census records written by `census` (otherwise the census is built).
    #[arg(long = "in")]
    input: Option<PathBuf>,
    /// Face count the census is complete to. Required without `--in`.
    #[arg(long, value_parser = parse_max_faces)]
    max_faces: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    #[value(name = "planar_code")]
    PlanarCode,
    Json,
    Csv,
}

fn parse_max_faces(s: &str) -> std::result::Result<usize, String> {
    let n: usize = s.parse().map_err(|e| format!("{e}"))?;
    if n < MIN_FACES {
        return Err(format!("must be at least {MIN_FACES}"));
    }
    Ok(n)
}

fn parse_jobs(s: &str) -> std::result::Result<usize, String> {
    let n: usize = s.parse().map_err(|e| format!("{e}"))?;
    if n == 0 {
        return Err("must be at least 1".into());
    }
    Ok(n)
}

/// Data goes to the output file or standard output; summaries go to
/// standard output when data has its own file, else to standard error.
struct Output {
    data: Box<dyn Write>,
    to_file: bool,
}

impl Output {
    fn open(path: Option<&Path>) -> Result<Self> {
        Ok(match path {
            Some(p) => Output {
                data: Box::new(BufWriter::new(
                    File::create(p).with_context(|| format!("cannot create {}", p.display()))?,
                )),
                to_file: true,
            },
            None => Output {
                data: Box::new(BufWriter::new(io::stdout().lock())),
                to_file: false,
            },
        })
    }

    fn summary(&self, line: &str) {
        if self.to_file {
            println!("{line}");
        } else {
            eprintln!("{line}");
        }
    }

    fn finish(mut self) -> Result<()> {
        self.data.flush()?;
        Ok(())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(j) = cli.jobs {
        pool = pool.num_threads(j);
    }
    let pool = match pool.build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::FAILURE;
        }
    };
    let opts = SolverOptions {
        seed: cli.seed,
        ..SolverOptions::default()
    };
    match pool.install(|| run(cli.command, &opts)) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

/// Returns whether every record was processed without error.
fn run(command: Command, opts: &SolverOptions) -> Result<bool> {
    match command {
        Command::Enumerate {
            max_faces,
            out,
            format,
            progress,
        } => enumerate(max_faces, out.as_deref(), format, progress),
        Command::Volume { input, out, format } => {
            volume(input.as_deref(), out.as_deref(), format, opts)
        }
        Command::Census {
            max_faces,
            out,
            progress,
        } => census(max_faces, out.as_deref(), progress, opts),
        Command::Spectrum {
            source,
            cutoff,
            out,
        } => spectrum(&source, cutoff, out.as_deref(), opts),
        Command::Bounds { source, out } => bounds(&source, out.as_deref(), opts),
        Command::Itr {
            max_faces,
            out,
            progress,
        } => itr(max_faces, out.as_deref(), progress, opts),
        Command::PlotData { source, out } => plot_data(&source, out.as_deref(), opts),
    }
}

fn enumerate(max_faces: usize, out: Option<&Path>, format: Format, progress: bool) -> Result<bool> {
    let mut output = Output::open(out)?;
    let mut graphs = Vec::new();
    let counts = Enumerator::new(max_faces)
        .progress(progress)
        .run(|code, g| graphs.push((code.clone(), g.clone())))?;
    graphs.sort_by(|a, b| a.0.cmp(&b.0));
    match format {
        Format::PlanarCode => write_planar_code(graphs.iter().map(|(_, g)| g), &mut output.data)?,
        Format::Json => write_json_lines(graphs.iter().map(|(_, g)| g), &mut output.data)?,
        Format::Csv => {
            writeln!(output.data, "code,faces,vertices")?;
            for (code, g) in &graphs {
                writeln!(
                    output.data,
                    "{code},{},{}",
                    g.vertex_count() + 2,
                    g.vertex_count()
                )?;
            }
        }
    }
    for (faces, count) in counts {
        output.summary(&format!("faces={faces} polyhedra={count}"));
    }
    output.finish()?;
    Ok(true)
}

/// Reads a planar_code stream or JSON lines, reporting unreadable JSON lines
/// individually.
fn read_graphs(input: Option<&Path>) -> Result<Vec<std::result::Result<PlanarGraph, String>>> {
    let mut bytes = Vec::new();
    match input {
        Some(p) => File::open(p)
            .with_context(|| format!("cannot open {}", p.display()))?
            .read_to_end(&mut bytes)?,
        None => io::stdin().lock().read_to_end(&mut bytes)?,
    };
    if bytes.starts_with(PLANAR_CODE_HEADER) {
        return Ok(parse_planar_code(&bytes)?.into_iter().map(Ok).collect());
    }
    let mut out = Vec::new();
    for line in BufReader::new(&bytes[..]).lines() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        out.push(
            serde_json::from_str(&line)
                .map_err(|e| e.to_string())
                .and_then(|j| PlanarGraph::from_json(&j).map_err(|e| e.to_string())),
        );
    }
    Ok(out)
}

fn volume(
    input: Option<&Path>,
    out: Option<&Path>,
    format: Format,
    opts: &SolverOptions,
) -> Result<bool> {
    if format == Format::PlanarCode {
        bail!("volume output is csv or json");
    }
    let graphs = read_graphs(input)?;
    let results: Vec<_> = graphs
        .par_iter()
        .enumerate()
        .map(|(i, g)| {
            let g = g.as_ref().map_err(|e| format!("record {}: {e}", i + 1))?;
            let (code, canon) = canonical_form(g);
            if let Some(w) = check_validity(&canon).failure_witness {
                return Err(format!("record {} ({code}): not realizable: {w}", i + 1));
            }
            let sol = ideal_volume_with(&canon, opts)
                .map_err(|e| format!("record {} ({code}): {e}", i + 1))?;
            Ok((code, trace_faces(&canon).face_count(), sol.volume))
        })
        .collect();

    let mut ok = true;
    let mut rows = Vec::new();
    for r in results {
        match r {
            Ok(row) => rows.push(row),
            Err(msg) => {
                eprintln!("error: {msg}");
                ok = false;
            }
        }
    }
    rows.sort_by(|a, b| a.0.cmp(&b.0));
    let mut output = Output::open(out)?;
    if format == Format::Csv {
        writeln!(output.data, "code,faces,volume")?;
    }
    for (code, faces, v) in &rows {
        match format {
            Format::Csv => writeln!(output.data, "{code},{faces},{}", format_volume(*v))?,
            _ => writeln!(
                output.data,
                "{{\"code\":\"{code}\",\"faces\":{faces},\"volume\":{}}}",
                format_volume(*v)
            )?,
        }
    }
    output.finish()?;
    Ok(ok)
}

fn sidecar_path(out: &Path) -> PathBuf {
    let mut name = out.as_os_str().to_owned();
    name.push(".planar_code");
    PathBuf::from(name)
}

fn census(
    max_faces: usize,
    out: Option<&Path>,
    progress: bool,
    opts: &SolverOptions,
) -> Result<bool> {
    let census = Census::build(max_faces, opts, progress)?;
    let mut output = Output::open(out)?;
    census.write_json_lines(&mut output.data)?;
    if let Some(p) = out {
        let side = sidecar_path(p);
        let file =
            File::create(&side).with_context(|| format!("cannot create {}", side.display()))?;
        census.write_planar_code(BufWriter::new(file))?;
    }
    report_levels(&census, &output);
    output.finish()?;
    Ok(true)
}

fn report_levels(census: &Census, output: &Output) {
    for level in census.levels() {
        output.summary(&format!(
            "faces={} polyhedra={} distinct={} min={} max={} minimizer={}",
            level.faces,
            level.count,
            level.distinct_volumes,
            format_volume(level.min_volume),
            format_volume(level.max_volume),
            level.minimizer.label()
        ));
        let expected = if level.faces % 2 == 0 {
            "antiprism"
        } else {
            "twisted"
        };
        if level.minimizer.label() != expected {
            output.summary(&format!(
                "note: minimal volume at faces={} is not attained by the {expected} family",
                level.faces
            ));
        }
    }
}

fn load_census(source: &CensusSource, opts: &SolverOptions) -> Result<Census> {
    match (&source.input, source.max_faces) {
        (Some(p), claimed) => {
            let file = File::open(p).with_context(|| format!("cannot open {}", p.display()))?;
            Ok(Census::read_json_lines(BufReader::new(file), claimed)?)
        }
        (None, Some(max_faces)) => Ok(Census::build(max_faces, opts, false)?),
        (None, None) => bail!("either --in or --max-faces is required"),
    }
}

fn spectrum(
    source: &CensusSource,
    cutoff: Option<f64>,
    out: Option<&Path>,
    opts: &SolverOptions,
) -> Result<bool> {
    let census = load_census(source, opts)?;
    let values = match cutoff {
        Some(c) => volume_spectrum(&census, c)?,
        None => {
            let values = distinct_volumes(census.records.iter().map(|r| r.volume));
            eprintln!(
                "note: values below {} are complete for a census to {} faces",
                format_volume(certified_cutoff(census.max_faces)),
                census.max_faces
            );
            values
        }
    };
    let mut output = Output::open(out)?;
    writeln!(output.data, "index,volume")?;
    for (i, v) in values.iter().enumerate() {
        writeln!(output.data, "{},{}", i + 1, format_volume(*v))?;
    }
    output.summary(&format!("values={}", values.len()));
    output.finish()?;
    Ok(true)
}

fn optional(v: Option<f64>) -> String {
    v.map(format_volume).unwrap_or_default()
}

fn bounds(source: &CensusSource, out: Option<&Path>, opts: &SolverOptions) -> Result<bool> {
    let census = load_census(source, opts)?;
    let mut output = Output::open(out)?;
    writeln!(
        output.data,
        "code,vertices,volume,atkinson_lower,atkinson_upper,improved_upper,quad_upper,violations"
    )?;
    let mut violations = 0;
    for r in &census.records {
        let g = r.code.to_graph()?;
        let report = BoundsReport::for_graph(&g)?;
        // stored volumes carry 9 significant digits; allow for that rounding
        let tolerance = match source.input {
            Some(_) => BOUND_TOLERANCE.max(volume_rounding(r.volume)),
            None => BOUND_TOLERANCE,
        };
        let failed = report.violations_within(r.volume, tolerance);
        violations += failed.len();
        writeln!(
            output.data,
            "{},{},{},{},{},{},{},{}",
            r.code,
            r.vertices,
            format_volume(r.volume),
            format_volume(report.atkinson_lower),
            format_volume(report.atkinson_upper),
            optional(report.improved_upper),
            optional(report.quad_upper),
            failed.join(";")
        )?;
    }
    output.summary(&format!(
        "records={} violations={violations}",
        census.records.len()
    ));
    output.finish()?;
    Ok(violations == 0)
}

fn itr(max_faces: usize, out: Option<&Path>, progress: bool, opts: &SolverOptions) -> Result<bool> {
    let keep = itr_reachable(max_faces);
    let mut found = Vec::new();
    Enumerator::new(max_faces)
        .progress(progress)
        .keep(&keep)
        .run(|_, g| {
            if ideal_polyhedra::analysis::is_itr(g) {
                found.push(g.clone());
            }
        })?;
    let records = found
        .par_iter()
        .map(|g| CensusRecord::new(g, opts))
        .collect::<ideal_polyhedra::Result<Vec<_>>>()?;
    let mut output = Output::open(out)?;
    if records.is_empty() {
        output.summary(&format!(
            "no ITR-polyhedra found with at most {max_faces} faces"
        ));
    } else {
        writeln!(output.data, "code,faces,triangles,volume")?;
        for r in &records {
            writeln!(
                output.data,
                "{},{},{},{}",
                r.code,
                r.faces,
                r.face_vector.get(&3).copied().unwrap_or(0),
                format_volume(r.volume)
            )?;
        }
        output.summary(&format!("itr_polyhedra={}", records.len()));
    }
    output.finish()?;
    Ok(true)
}

fn plot_data(source: &CensusSource, out: Option<&Path>, opts: &SolverOptions) -> Result<bool> {
    let census = load_census(source, opts)?;
    let mut output = Output::open(out)?;
    writeln!(output.data, "vertices,volume,class")?;
    let mut rows: Vec<(usize, f64, &str)> = census
        .records
        .iter()
        .map(|r| (r.vertices, r.volume, r.flags.label()))
        .collect();
    let max_vertices = rows.iter().map(|r| r.0).max().unwrap_or(6);
    for n in 6..=max_vertices {
        let (lower, upper) = atkinson_bounds(n)?;
        rows.push((n, lower, "curve-lower"));
        rows.push((n, upper, "curve-upper"));
    }
    rows.sort_by(|a, b| a.0.cmp(&b.0).then(a.1.total_cmp(&b.1)).then(a.2.cmp(b.2)));
    for (n, v, class) in rows {
        writeln!(output.data, "{n},{},{class}", format_volume(v))?;
    }
    output.finish()?;
    Ok(true)
}
