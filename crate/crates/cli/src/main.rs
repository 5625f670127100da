//! `rhodes`: build the Dowling and Rhodes lattices, count, verify, represent
//! and export.
//!
//! Exit codes: 0 success, 1 a verification failed, 2 a size bound was
//! exceeded, 3 bad usage (unknown suite, bad group spec, malformed flags).

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use rhodes_core::boolrep::{matrix_from_lattice_rep, matrix_from_lattice_rep_rows, BooleanMatrix};
use rhodes_core::counting::{facet_formula_corrected, facet_formula_closed, ratio};
use rhodes_core::gain_graph::{delta, delta_prime, GainGraph, Mode};
use rhodes_core::lattice::{build_dowling, build_ln, build_partition_lattice, build_rhodes, build_rhodes_hat, FinitePoset};
use rhodes_core::models::{
    dowling_complex, ln_representation, multi_complete_graphic, powerset_representation, rhodes_complex,
    rhodes_hat_complex,
};
use rhodes_core::spc::{SpcSpace, DEFAULT_ENUM_BOUND};
use rhodes_core::verify::{self, SUITES};
use rhodes_core::{oracle, Error, FiniteGroup, SimplicialComplex};

#[derive(Parser, Debug)]
#[command(name = "rhodes", version, about = "Dowling and Rhodes lattices over finite groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Number of points (default 2; `verify` runs its full range when omitted).
    #[arg(long, global = true)]
    n: Option<usize>,
    /// Group: 1, Zm, V4, Sk or products such as Z2xZ3 (default 1).
    #[arg(long, global = true)]
    group: Option<String>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Write to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Enumeration bound on |G|^n for SPC constructions.
    #[arg(long, global = true, default_value_t = DEFAULT_ENUM_BOUND)]
    bound: usize,
    /// Seed for the randomized parts of `verify`.
    #[arg(long, global = true, default_value_t = 0x5eed)]
    seed: u64,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a lattice (or the Rhodes poset) and print its structure.
    Build { lattice: LatticeName },
    /// Count facets, bases or flats of a complex.
    Count {
        target: Target,
        #[arg(long, value_enum)]
        complex: ComplexName,
        /// Rank for `uniform`, edge multiplicity for `graphic`.
        #[arg(long, default_value_t = 1)]
        k: usize,
    },
    /// Run a named verification suite.
    Verify {
        suite: String,
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
    },
    /// Print the Boolean matrix of a lattice representation.
    Represent {
        #[arg(long, value_enum)]
        lattice: RepName,
    },
    /// Export a complex, gain graph or group.
    Export {
        #[arg(value_enum)]
        object: ExportName,
        #[arg(long, default_value_t = 1)]
        k: usize,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq)]
enum Format {
    Json,
    Dot,
    Csv,
    Text,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum LatticeName {
    Dowling,
    Rhodes,
    RhodesHat,
    #[value(name = "Ln", alias = "ln")]
    Ln,
    Powerset,
    Partition,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Target {
    Facets,
    Bases,
    Flats,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum ComplexName {
    #[value(name = "H")]
    H,
    #[value(name = "Hhat")]
    Hhat,
    #[value(name = "M")]
    M,
    Lift,
    Frame,
    Uniform,
    Graphic,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum RepName {
    #[value(name = "Ln", alias = "ln")]
    Ln,
    Powerset,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum ExportName {
    #[value(name = "H")]
    H,
    #[value(name = "Hhat")]
    Hhat,
    #[value(name = "M")]
    M,
    Lift,
    Frame,
    Uniform,
    Graphic,
    Delta,
    DeltaPrime,
    Group,
}

impl Cli {
    fn points(&self) -> usize {
        self.n.unwrap_or(2)
    }

    fn group_spec(&self) -> &str {
        self.group.as_deref().unwrap_or("1")
    }
}

enum Failure {
    Verification,
    Error(Error),
    Usage(String),
}

impl<E: Into<Error>> From<E> for Box<Failure> {
    fn from(e: E) -> Self {
        Box::new(Failure::Error(e.into()))
    }
}

type Outcome = Result<String, Box<Failure>>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 3 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = run(&cli);
    let (text, code) = match result {
        Ok(text) => (Some(text), 0),
        Err(f) => match *f {
            Failure::Verification => (None, 1),
            Failure::Error(e) => {
                eprintln!("error: {e}");
                (None, if e.is_bounds() { 2 } else { 3 })
            }
            Failure::Usage(msg) => {
                eprintln!("error: {msg}");
                (None, 3)
            }
        },
    };
    if let Some(text) = text {
        match &cli.out {
            Some(path) => {
                if let Err(e) = std::fs::write(path, text) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(3);
                }
            }
            None => print!("{text}"),
        }
    }
    ExitCode::from(code)
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Build { lattice } => build(cli, *lattice),
        Command::Count { target, complex, k } => count(cli, *target, *complex, *k),
        Command::Verify { suite, samples } => verify_suite(cli, suite, *samples),
        Command::Represent { lattice } => represent(cli, *lattice),
        Command::Export { object, k } => export(cli, *object, *k),
    }
}

fn group(cli: &Cli) -> Result<FiniteGroup, Box<Failure>> {
    Ok(FiniteGroup::from_spec(cli.group_spec())?)
}

/// SPC constructions refuse `|G|^n` above the bound before enumerating.
fn spc_space(cli: &Cli) -> Result<SpcSpace, Box<Failure>> {
    let space = SpcSpace::new(cli.points(), group(cli)?)?;
    let size = (space.group().order() as u128).saturating_pow(cli.points() as u32);
    if size > cli.bound as u128 {
        return Err(Box::new(Failure::Error(Error::Bounds(format!("|G|^n = {size} exceeds bound {}", cli.bound)))));
    }
    Ok(space)
}

fn format_or(cli: &Cli, default: Format, allowed: &[Format]) -> Result<Format, Box<Failure>> {
    let f = cli.format.unwrap_or(default);
    if allowed.contains(&f) {
        Ok(f)
    } else {
        Err(Box::new(Failure::Usage(format!("format {f:?} is not available here"))))
    }
}

fn poset_output(cli: &Cli, name: &str, poset: &FinitePoset, extra: serde_json::Value) -> Outcome {
    match format_or(cli, Format::Json, &[Format::Json, Format::Dot, Format::Text])? {
        Format::Dot => Ok(poset.to_dot(name)),
        Format::Text => {
            let mut s = format!("{name}: {} elements\n", poset.len());
            for (key, ids) in [
                ("atoms", poset.atoms()),
                ("join-irreducibles", poset.join_irreducibles()),
                ("meet-irreducibles", poset.meet_irreducibles()),
            ] {
                let labels: Vec<&str> = ids.iter().map(|&i| poset.label(i)).collect();
                let _ = writeln!(s, "{key} ({}): {}", labels.len(), labels.join(" "));
            }
            if let Some(obj) = extra.as_object() {
                for (k, v) in obj {
                    let _ = writeln!(s, "{k}: {v}");
                }
            }
            Ok(s)
        }
        _ => {
            let labels = |ids: Vec<usize>| ids.iter().map(|&i| poset.label(i).to_string()).collect::<Vec<_>>();
            let mut v = json!({
                "schema_version": "1",
                "name": name,
                "size": poset.len(),
                "elements": poset.labels(),
                "covers": poset.cover_relation(),
                "atoms": labels(poset.atoms()),
                "join_irreducibles": labels(poset.join_irreducibles()),
                "meet_irreducibles": labels(poset.meet_irreducibles()),
            });
            if let (Some(obj), Some(more)) = (v.as_object_mut(), extra.as_object()) {
                obj.extend(more.clone());
            }
            Ok(format!("{}\n", serde_json::to_string_pretty(&v).expect("serializable")))
        }
    }
}

fn build(cli: &Cli, lattice: LatticeName) -> Outcome {
    let g = group(cli)?;
    match lattice {
        LatticeName::Dowling => {
            spc_space(cli)?;
            let l = build_dowling(cli.points(), &g)?;
            poset_output(cli, &format!("Q_{}({})", cli.points(), cli.group_spec()), &l.lattice, json!({}))
        }
        LatticeName::Rhodes => {
            spc_space(cli)?;
            let r = build_rhodes(cli.points(), &g)?;
            let witness = r.witness.map(|(a, b)| vec![r.poset.label(a).to_string(), r.poset.label(b).to_string()]);
            let extra = json!({ "is_lattice": r.is_lattice, "no_join_witness": witness });
            poset_output(cli, &format!("R_{}({})", cli.points(), cli.group_spec()), &r.poset, extra)
        }
        LatticeName::RhodesHat => {
            spc_space(cli)?;
            let r = build_rhodes_hat(cli.points(), &g)?;
            let extra = json!({ "top_adjoined": r.top_sentinel.is_some() });
            poset_output(cli, &format!("Rhat_{}({})", cli.points(), cli.group_spec()), &r.lattice, extra)
        }
        LatticeName::Ln => {
            let l = build_ln(cli.points())?;
            poset_output(cli, &format!("L_{}", cli.points()), &l.lattice, json!({}))
        }
        LatticeName::Powerset => {
            let l = rhodes_core::lattice::build_powerset(cli.points())?;
            poset_output(cli, &format!("2^{}", cli.points()), &l.lattice, json!({}))
        }
        LatticeName::Partition => {
            let (l, _) = build_partition_lattice(cli.points())?;
            poset_output(cli, &format!("Pi_{}", cli.points()), &l, json!({}))
        }
    }
}

fn gain_graph(cli: &Cli) -> Result<GainGraph, Box<Failure>> {
    Ok(delta(cli.points(), &group(cli)?)?)
}

fn complex(cli: &Cli, name: ComplexName, k: usize) -> Result<(String, SimplicialComplex), Box<Failure>> {
    let g = group(cli)?;
    let n = cli.points();
    let gs = cli.group_spec();
    Ok(match name {
        ComplexName::H => {
            spc_space(cli)?;
            (format!("H_{n}({gs})"), rhodes_complex(n, &g)?)
        }
        ComplexName::Hhat => {
            spc_space(cli)?;
            (format!("Hhat_{n}({gs})"), rhodes_hat_complex(n, &g)?)
        }
        ComplexName::M => {
            spc_space(cli)?;
            (format!("M_{n}({gs})"), dowling_complex(n, &g)?)
        }
        ComplexName::Lift => (format!("lift(Delta_{n}({gs}))"), gain_graph(cli)?.lift_matroid()?),
        ComplexName::Frame => (format!("frame(Delta_{n}({gs}))"), gain_graph(cli)?.frame_matroid()?),
        ComplexName::Uniform => (format!("U_{{{k},{n}}}"), SimplicialComplex::uniform(k, n)?),
        ComplexName::Graphic => (format!("graphic {k}K_{n}"), multi_complete_graphic(n, k)?),
    })
}

fn count(cli: &Cli, target: Target, name: ComplexName, k: usize) -> Outcome {
    let (label, h) = complex(cli, name, k)?;
    let rank = h.rank();
    let value = match target {
        Target::Facets => h.facets().len(),
        Target::Bases => match name {
            ComplexName::Lift => oracle::basis_count(&gain_graph(cli)?, Mode::Lift),
            ComplexName::Frame => oracle::basis_count(&gain_graph(cli)?, Mode::Frame),
            _ => h.independent_sets().filter(|x| x.count_ones() as usize == rank).count(),
        },
        Target::Flats => h.flats()?.len(),
    };
    let formulas = matches!(name, ComplexName::Lift | ComplexName::Hhat)
        && matches!(target, Target::Facets | Target::Bases)
        && cli.points() >= 2;
    let mut v = json!({
        "schema_version": "1",
        "target": format!("{target:?}").to_lowercase(),
        "complex": label,
        "ground": h.ground_size(),
        "rank": rank,
        "oracle": value,
    });
    if formulas {
        let q = group(cli)?.order() as u64;
        let closed = facet_formula_closed(cli.points() as u64, q);
        let corrected = facet_formula_corrected(cli.points() as u64, q);
        let obj = v.as_object_mut().expect("object");
        obj.insert("closed_formula".into(), json!(closed.to_string()));
        obj.insert("corrected_formula".into(), json!(corrected.to_string()));
        obj.insert("closed_formula_over_oracle".into(), json!(ratio(closed, value).map(|r| r.to_string())));
    }
    match format_or(cli, Format::Text, &[Format::Text, Format::Json])? {
        Format::Json => Ok(format!("{}\n", serde_json::to_string_pretty(&v).expect("serializable"))),
        _ => {
            let mut s = String::new();
            for key in [
                "complex",
                "target",
                "ground",
                "rank",
                "oracle",
                "closed_formula",
                "corrected_formula",
                "closed_formula_over_oracle",
            ] {
                if let Some(val) = v.get(key) {
                    let val = val.as_str().map(str::to_string).unwrap_or_else(|| val.to_string());
                    let _ = writeln!(s, "{}: {val}", key.replace('_', " "));
                }
            }
            Ok(s)
        }
    }
}

fn verify_suite(cli: &Cli, suite: &str, samples: usize) -> Outcome {
    if !SUITES.iter().any(|(name, _, _)| *name == suite) {
        let names: Vec<&str> = SUITES.iter().map(|s| s.0).collect();
        return Err(Box::new(Failure::Usage(format!("unknown suite {suite:?}; known: {}", names.join(", ")))));
    }
    let opts = verify::Options {
        n: cli.n,
        group: cli.group.clone(),
        seed: cli.seed,
        samples,
    };
    let report = verify::run(suite, &opts)?;
    let text = match format_or(cli, Format::Text, &[Format::Text, Format::Json])? {
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&report).expect("serializable")),
        _ => {
            let mut s = String::new();
            for c in &report.checks {
                let _ = writeln!(s, "{} {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail);
            }
            let _ = writeln!(s, "{}: {}", report.suite, if report.passed() { "pass" } else { "fail" });
            s
        }
    };
    if report.passed() {
        Ok(text)
    } else {
        print!("{text}");
        Err(Box::new(Failure::Verification))
    }
}

fn matrix_output(cli: &Cli, m: &BooleanMatrix, ground: &[String], rows: Vec<String>) -> Outcome {
    match format_or(cli, Format::Text, &[Format::Text, Format::Csv, Format::Json])? {
        Format::Csv => Ok(m.to_csv()),
        Format::Json => {
            let matrix: Vec<Vec<u8>> = (0..m.rows()).map(|i| (0..m.cols()).map(|j| m.get(i, j) as u8).collect()).collect();
            let v = json!({ "schema_version": "1", "columns": ground, "rows": rows, "matrix": matrix });
            Ok(format!("{}\n", serde_json::to_string_pretty(&v).expect("serializable")))
        }
        _ => Ok(m.to_string()),
    }
}

fn represent(cli: &Cli, lattice: RepName) -> Outcome {
    match lattice {
        RepName::Ln => {
            let g = group(cli)?;
            let rep = ln_representation(cli.points(), &g)?;
            let rows = build_ln(cli.points())?.meet_irreducibles_sorted();
            let m = matrix_from_lattice_rep_rows(&rep, &rows)?;
            let labels = rows.iter().map(|&r| rep.lattice.label(r).to_string()).collect();
            matrix_output(cli, &m, &rep.ground, labels)
        }
        RepName::Powerset => {
            let rep = powerset_representation(cli.points())?;
            let m = matrix_from_lattice_rep(&rep)?;
            let labels = rep.lattice.meet_irreducibles().iter().map(|&r| rep.lattice.label(r).to_string()).collect();
            matrix_output(cli, &m, &rep.ground, labels)
        }
    }
}

fn export(cli: &Cli, object: ExportName, k: usize) -> Outcome {
    let gain = |gg: GainGraph, name: &str| -> Outcome {
        match format_or(cli, Format::Text, &[Format::Text, Format::Dot])? {
            Format::Dot => Ok(gg.to_dot(name)),
            _ => Ok(gg.to_edge_list()),
        }
    };
    let name = match object {
        ExportName::Delta => return gain(gain_graph(cli)?, &format!("Delta_{}({})", cli.points(), cli.group_spec())),
        ExportName::DeltaPrime => {
            return gain(delta_prime(cli.points(), &group(cli)?)?, &format!("Delta'_{}({})", cli.points(), cli.group_spec()))
        }
        ExportName::Group => {
            format_or(cli, Format::Json, &[Format::Json])?;
            let g = group(cli)?;
            let v = json!({ "schema_version": "1", "labels": g.labels(), "table": g.table_rows() });
            return Ok(format!("{}\n", serde_json::to_string_pretty(&v).expect("serializable")));
        }
        ExportName::H => ComplexName::H,
        ExportName::Hhat => ComplexName::Hhat,
        ExportName::M => ComplexName::M,
        ExportName::Lift => ComplexName::Lift,
        ExportName::Frame => ComplexName::Frame,
        ExportName::Uniform => ComplexName::Uniform,
        ExportName::Graphic => ComplexName::Graphic,
    };
    let (label, h) = complex(cli, name, k)?;
    match format_or(cli, Format::Json, &[Format::Json, Format::Text])? {
        Format::Text => {
            let mut s = format!("{label}: ground {}, rank {}, f-vector {:?}\n", h.ground_size(), h.rank(), h.f_vector());
            for f in h.facets() {
                let _ = writeln!(s, "{}", h.format_set(f));
            }
            Ok(s)
        }
        _ => Ok(format!("{}\n", serde_json::to_string_pretty(&h.to_json()).expect("serializable"))),
    }
}
