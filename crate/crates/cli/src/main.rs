use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use perfectsolve::basic::recognize_basic;
use perfectsolve::decompose::validate_certificate;
use perfectsolve::detect::{find_end, find_proper_2join, find_proper_complement_2join};
use perfectsolve::io::{emit_dimacs, emit_tri, generate, parse, Format, GeneratorSpec};
use perfectsolve::oracle::{alpha_bf, bf_cap, chi_bf, has_bsp_bf, omega_bf};
use perfectsolve::{alpha, color, extract_stable_set, ColorOutcome, Error, Trigraph, VertexSet};
use rayon::prelude::*;
use serde_json::json;

/// Writes to stdout; a closed pipe (as with `| head`) ends the process quietly.
macro_rules! out {
    ($($arg:tt)*) => {{
        use std::io::Write;
        if write!(std::io::stdout(), $($arg)*).is_err() {
            std::process::exit(0);
        }
    }};
}

macro_rules! outln {
    ($($arg:tt)*) => {{
        use std::io::Write;
        if writeln!(std::io::stdout(), $($arg)*).is_err() {
            std::process::exit(0);
        }
    }};
}

/// Exact stable sets and colorings of Berge trigraphs by 2-join decomposition.
#[derive(Parser)]
#[command(name = "perfectsolve", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Tri,
    Dimacs,
}

#[derive(Args)]
struct Input {
    /// Input file (`-` for stdin).
    file: PathBuf,
    /// Input format; guessed from the extension when omitted.
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
    /// Machine-readable output.
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Maximum weight strong stable set.
    Alpha {
        #[command(flatten)]
        input: Input,
        /// Print the certificate as JSON when the input is outside the class.
        #[arg(long)]
        emit_certificate: bool,
    },
    /// Optimal coloring with a clique of equal size (graphs only).
    Color {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        emit_certificate: bool,
    },
    /// Recognize the five basic classes.
    Basic {
        #[command(flatten)]
        input: Input,
    },
    /// Find a proper 2-join or complement 2-join.
    #[command(name = "find-2join")]
    Find2Join {
        #[command(flatten)]
        input: Input,
    },
    /// Find an end and its block.
    FindEnd {
        #[command(flatten)]
        input: Input,
    },
    /// Generate a composed instance.
    Gen {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 12)]
        n: usize,
        /// Weights uniform in 0..=max-weight; unit weights when omitted.
        #[arg(long)]
        max_weight: Option<u64>,
        /// Realize every switchable pair.
        #[arg(long)]
        graph: bool,
        #[arg(long, value_enum, default_value = "tri")]
        format: FormatArg,
    },
    /// Exhaustive reference values.
    Oracle {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        bf_cap: Option<usize>,
    },
    /// Compare the solver with the oracles over files, directories, or
    /// generated instances when no path is given.
    Check {
        paths: Vec<PathBuf>,
        #[arg(long)]
        format: Option<FormatArg>,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        bf_cap: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 12)]
        n: usize,
        /// Number of generated instances.
        #[arg(long, default_value_t = 100)]
        count: u64,
        #[arg(long, default_value_t = 10)]
        max_weight: u64,
    },
}

const SOLVED: u8 = 0;
const USAGE: u8 = 1;
const CERTIFICATE: u8 = 2;
const MISMATCH: u8 = 3;

fn to_format(f: FormatArg) -> Format {
    match f {
        FormatArg::Tri => Format::Tri,
        FormatArg::Dimacs => Format::Dimacs,
    }
}

fn read(path: &Path, format: Option<FormatArg>) -> Result<Trigraph, String> {
    let text = if path.as_os_str() == "-" {
        std::io::read_to_string(std::io::stdin()).map_err(|e| format!("stdin: {e}"))?
    } else {
        std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?
    };
    let format = format.map(to_format).unwrap_or_else(|| Format::from_path(&path.to_string_lossy()));
    parse(&text, format).map_err(|e| format!("{}: {e}", path.display()))
}

fn one_based(s: &VertexSet) -> String {
    s.iter().map(|v| (v + 1).to_string()).collect::<Vec<_>>().join(" ")
}

fn print_json(v: &impl serde::Serialize) {
    outln!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

fn set_cap(cap: Option<usize>) {
    if let Some(c) = cap {
        // single-threaded at this point
        std::env::set_var("PERFECTSOLVE_BF_CAP", c.to_string());
    }
}

fn certificate(e: &Error, json: bool, emit: bool) -> u8 {
    match e.certificate() {
        Some(c) => {
            if emit || json {
                print_json(c);
            } else {
                outln!("not in class: {}", c.reason);
            }
            CERTIFICATE
        }
        None => {
            eprintln!("error: {e}");
            USAGE
        }
    }
}

fn cmd_alpha(input: &Input, emit: bool) -> Result<u8, String> {
    let t = read(&input.file, input.format)?;
    let out = match alpha(&t) {
        Ok(o) => o,
        Err(e) => return Ok(certificate(&e, input.json, emit)),
    };
    let set = extract_stable_set(&t, &out).map_err(|e| e.to_string())?;
    if input.json {
        print_json(&json!({ "alpha": out.alpha, "stable_set": set, "stats": out.stats, "trace": out.trace }));
    } else {
        outln!("alpha {}", out.alpha);
        outln!("set {}", one_based(&set));
    }
    Ok(SOLVED)
}

fn cmd_color(input: &Input, emit: bool) -> Result<u8, String> {
    let t = read(&input.file, input.format)?;
    if !t.is_graph() {
        return Err("coloring needs a graph: the input has switchable pairs".into());
    }
    let g = t.full_realization();
    let outcome = color(&g).map_err(|e| e.to_string())?;
    match &outcome {
        ColorOutcome::Colored(c) => {
            if input.json {
                print_json(&outcome);
            } else {
                outln!("colors {}", c.num_colors);
                let classes: Vec<String> = c.clique_cover.iter().map(one_based).collect();
                outln!("classes {}", classes.join(" | "));
                outln!("clique {}", one_based(&c.max_clique));
            }
            Ok(SOLVED)
        }
        ColorOutcome::Imperfect(_) | ColorOutcome::NotInClass(_) => {
            if emit || input.json {
                print_json(&outcome);
            } else if let ColorOutcome::NotInClass(c) = &outcome {
                outln!("not in class: {}", c.reason);
            } else {
                outln!("imperfect: the clique list outgrew the vertex count");
            }
            Ok(CERTIFICATE)
        }
    }
}

fn cmd_basic(input: &Input) -> Result<u8, String> {
    let t = read(&input.file, input.format)?;
    let report = recognize_basic(&t);
    if input.json {
        print_json(&report);
    } else {
        match &report {
            Some(r) => outln!("basic {}", r.class.name()),
            None => outln!("not basic"),
        }
    }
    Ok(SOLVED)
}

fn cmd_find_2join(input: &Input) -> Result<u8, String> {
    let t = read(&input.file, input.format)?;
    let split = find_proper_2join(&t).or_else(|| find_proper_complement_2join(&t));
    if input.json {
        print_json(&split);
    } else {
        match split {
            Some(s) => {
                let kind = if s.complemented { "complement 2-join" } else { "2-join" };
                outln!("{kind} ({:?})", s.parity);
                for (name, set) in [("A1", &s.a1), ("B1", &s.b1), ("C1", &s.c1), ("A2", &s.a2), ("B2", &s.b2), ("C2", &s.c2)] {
                    outln!("{name} {}", one_based(set));
                }
            }
            None => outln!("none"),
        }
    }
    Ok(SOLVED)
}

fn cmd_find_end(input: &Input) -> Result<u8, String> {
    let t = read(&input.file, input.format)?;
    let end = find_end(&t);
    if input.json {
        print_json(&end.as_ref().map(|(f, b)| json!({ "fragment": f, "block": b })));
    } else {
        match end {
            Some((f, b)) => {
                outln!("end {}", one_based(&f.x()));
                out!("{}", emit_tri(&b.trigraph));
            }
            None => outln!("none"),
        }
    }
    Ok(SOLVED)
}

fn cmd_gen(seed: u64, n: usize, max_weight: Option<u64>, graph: bool, format: FormatArg) -> Result<u8, String> {
    let mut spec = GeneratorSpec::new(seed, n);
    spec.max_weight = max_weight;
    spec.switchable = !graph;
    let (t, steps) = generate(&spec).map_err(|e| e.to_string())?;
    match format {
        FormatArg::Tri => {
            outln!("c seed {seed}, recipe {}", serde_json::to_string(&steps).expect("serializable"));
            out!("{}", emit_tri(&t));
        }
        FormatArg::Dimacs => {
            if !t.is_graph() {
                return Err("DIMACS output needs a graph; pass --graph".into());
            }
            out!("{}", emit_dimacs(&t.full_realization()));
        }
    }
    Ok(SOLVED)
}

fn cmd_oracle(input: &Input, cap: Option<usize>) -> Result<u8, String> {
    set_cap(cap);
    let t = read(&input.file, input.format)?;
    let (a, set) = alpha_bf(&t).map_err(|e| e.to_string())?;
    let bsp = has_bsp_bf(&t).map_err(|e| e.to_string())?;
    let graph = t.is_graph().then(|| t.full_realization());
    let omega = graph.as_ref().map(omega_bf).transpose().map_err(|e| e.to_string())?;
    let chi = graph.as_ref().map(chi_bf).transpose().map_err(|e| e.to_string())?;
    if input.json {
        print_json(&json!({ "alpha": a, "stable_set": set, "has_bsp": bsp, "omega": omega, "chi": chi }));
    } else {
        outln!("alpha {a}");
        outln!("set {}", one_based(&set));
        outln!("balanced skew-partition {bsp}");
        if let (Some(o), Some(c)) = (omega, chi) {
            outln!("omega {o}");
            outln!("chi {c}");
        }
    }
    Ok(SOLVED)
}

#[derive(serde::Serialize)]
struct CheckRow {
    name: String,
    n: usize,
    result: String,
    ok: bool,
}

fn check_one(name: String, t: &Trigraph) -> CheckRow {
    let n = t.vertex_count();
    let row = |result: String, ok: bool| CheckRow { name: name.clone(), n, result, ok };
    let solved = alpha(t);
    let within = n <= bf_cap();
    match solved {
        Ok(out) => {
            let set = match extract_stable_set(t, &out) {
                Ok(s) => s,
                Err(e) => return row(format!("extraction failed: {e}"), false),
            };
            if !t.is_strong_stable(&set) || set.weight(t.weights()) != out.alpha as u128 {
                return row("extracted set is not an optimal strong stable set".into(), false);
            }
            if !within {
                return row(format!("alpha {} (unchecked)", out.alpha), true);
            }
            let (bf, _) = alpha_bf(t).expect("within cap");
            if bf != out.alpha {
                return row(format!("alpha {} but brute force gives {bf}", out.alpha), false);
            }
            if t.is_graph() {
                let g = t.full_realization();
                match color(&g) {
                    Ok(ColorOutcome::Colored(c)) => {
                        let (omega, chi) = (omega_bf(&g).expect("cap"), chi_bf(&g).expect("cap"));
                        if c.num_colors != omega || c.num_colors != chi {
                            return row(format!("{} colors, omega {omega}, chi {chi}", c.num_colors), false);
                        }
                    }
                    Ok(_) => {}
                    Err(e) => return row(format!("coloring failed: {e}"), false),
                }
            }
            row(format!("alpha {}", out.alpha), true)
        }
        Err(Error::NotInClass(c)) => match validate_certificate(&c) {
            Ok(()) => row(format!("certificate: {}", c.reason), true),
            Err(e) => row(format!("invalid certificate: {e}"), false),
        },
        Err(e) => row(format!("error: {e}"), false),
    }
}

fn collect_files(paths: &[PathBuf]) -> Result<Vec<PathBuf>, String> {
    let mut out = Vec::new();
    for p in paths {
        if p.is_dir() {
            let mut entries: Vec<PathBuf> = std::fs::read_dir(p)
                .map_err(|e| format!("{}: {e}", p.display()))?
                .filter_map(|e| e.ok().map(|e| e.path()))
                .filter(|p| p.is_file())
                .collect();
            entries.sort();
            out.extend(entries);
        } else {
            out.push(p.clone());
        }
    }
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn cmd_check(
    paths: &[PathBuf],
    format: Option<FormatArg>,
    json: bool,
    cap: Option<usize>,
    seed: u64,
    n: usize,
    count: u64,
    max_weight: u64,
) -> Result<u8, String> {
    set_cap(cap);
    let instances: Vec<(String, Trigraph)> = if paths.is_empty() {
        (seed..seed + count)
            .map(|s| {
                let mut spec = GeneratorSpec::new(s, n);
                spec.max_weight = Some(max_weight);
                generate(&spec).map(|(t, _)| (format!("seed {s}"), t)).map_err(|e| e.to_string())
            })
            .collect::<Result<_, _>>()?
    } else {
        collect_files(paths)?
            .into_iter()
            .map(|p| read(&p, format).map(|t| (p.display().to_string(), t)))
            .collect::<Result<_, _>>()?
    };
    let rows: Vec<CheckRow> = instances.into_par_iter().map(|(name, t)| check_one(name, &t)).collect();
    let mismatches = rows.iter().filter(|r| !r.ok).count();
    if json {
        print_json(&json!({ "instances": rows.len(), "mismatches": mismatches, "rows": rows }));
    } else {
        for r in &rows {
            outln!("{} {} (n = {}): {}", if r.ok { "ok" } else { "MISMATCH" }, r.name, r.n, r.result);
        }
        outln!("{} instances, {mismatches} mismatches", rows.len());
    }
    Ok(if mismatches == 0 { SOLVED } else { MISMATCH })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Alpha { input, emit_certificate } => cmd_alpha(input, *emit_certificate),
        Command::Color { input, emit_certificate } => cmd_color(input, *emit_certificate),
        Command::Basic { input } => cmd_basic(input),
        Command::Find2Join { input } => cmd_find_2join(input),
        Command::FindEnd { input } => cmd_find_end(input),
        Command::Gen { seed, n, max_weight, graph, format } => cmd_gen(*seed, *n, *max_weight, *graph, *format),
        Command::Oracle { input, bf_cap } => cmd_oracle(input, *bf_cap),
        Command::Check { paths, format, json, bf_cap, seed, n, count, max_weight } => {
            cmd_check(paths, *format, *json, *bf_cap, *seed, *n, *count, *max_weight)
        }
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(USAGE)
        }
    }
}
