use clap::{Parser, Subcommand, ValueEnum};
use quantlat::corpus::CorpusSource;
use quantlat::inflator::{enumerate_nuclei, Carrier, Family, FrameClaim};
use quantlat::input::{load_module, load_structure, InputError, Loaded, Structure};
use quantlat::lattice::{structure_report, StructureReport};
use quantlat::module::submodule::SubmoduleLattice;
use quantlat::module::theory::analyze_lattice;
use quantlat::quantale::{law_report, LawReport};
use quantlat::spectrum::{mu, point_set_label, spectrum_report, topology, SpectrumError};
use quantlat::verify::run_verification;
use serde::Serialize;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "quantlat", version, about = "Finite lattices, quasi-quantales, nuclei and spectra")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Emit::Text, global = true)]
    emit: Emit,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Emit {
    Json,
    Text,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Nuclei,
    Idiomatic,
    Multiplicative,
    Contextual,
}

#[derive(Subcommand)]
enum Command {
    /// Lattice laws of a structure file.
    Latcheck { file: PathBuf },
    /// Quasi-quantale law battery. Bare lattices use `∧` as the product.
    Qqcheck { file: PathBuf },
    /// Enumerates a family of nuclei and reports its lattice.
    Nuclei {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = FamilyArg::Nuclei)]
        family: FamilyArg,
        #[arg(long, default_value_t = 8)]
        max_size: usize,
    },
    /// Prime spectrum, topology and μ. Uses `B` = everything unless `--relative`.
    Spec {
        file: PathBuf,
        #[arg(long)]
        relative: bool,
    },
    /// Submodule lattice analysis of a finite abelian group.
    Module { file: PathBuf },
    /// Runs every named check over the bundled corpus.
    VerifyPaper {
        /// Read the corpus from this directory, hashing each file against the manifest.
        #[arg(long)]
        corpus: Option<PathBuf>,
        /// Skip a check by name; the run then fails as incomplete.
        #[arg(long)]
        omit: Vec<String>,
    },
}

enum Failure {
    /// A claim checked by the command fails.
    Law(String),
    /// Unreadable or invalid input.
    Input(String),
}

impl From<InputError> for Failure {
    fn from(e: InputError) -> Self {
        Failure::Input(e.to_string())
    }
}

struct Output {
    json: serde_json::Value,
    text: String,
    dot: Option<String>,
    ok: bool,
}

fn json<T: Serialize>(schema: &str, name: &str, body: &T) -> serde_json::Value {
    let mut v = serde_json::json!({ "schema": schema, "name": name });
    let body = serde_json::to_value(body).expect("reports serialize");
    if let serde_json::Value::Object(m) = body {
        v.as_object_mut().unwrap().extend(m);
    }
    v
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn opt(b: Option<bool>) -> &'static str {
    match b {
        Some(true) => "yes",
        Some(false) => "no",
        None => "n/a",
    }
}

fn lattice_text(name: &str, r: &StructureReport) -> String {
    let mut t = format!(
        "{name}: {} elements\nmodular: {}\ndistributive: {}\nframe: {}\nboolean: {}\n",
        r.size,
        yes(r.is_modular),
        yes(r.is_distributive),
        yes(r.is_frame),
        yes(r.is_boolean)
    );
    for w in &r.witnesses {
        t.push_str(&format!("witness: {w}\n"));
    }
    t
}

fn latcheck(s: Loaded<Structure>) -> Output {
    let l = s.value.lattice();
    let r = structure_report(l);
    #[derive(Serialize)]
    struct Body<'a> {
        elements: &'a [String],
        covers: Vec<(&'a str, &'a str)>,
        report: &'a StructureReport,
    }
    let body = Body {
        elements: l.names(),
        covers: l.covers().into_iter().map(|(a, b)| (l.name(a), l.name(b))).collect(),
        report: &r,
    };
    Output {
        json: json("quantlat.latcheck/1", &s.name, &body),
        text: lattice_text(&s.name, &r),
        dot: Some(l.hasse_dot(&s.name)),
        ok: true,
    }
}

fn qq_text(name: &str, r: &LawReport) -> String {
    let mut t = format!(
        "{name}: {} elements\nquantale: {}\nbinary distributive: {}\nright join law: {}\nleft unit: {}\nright unit: {}\n\
         commutative: {}\n1a ≤ a: {}\nbounds from 1a ≤ a: {}\nsquare laws: {}\nzero-divisor conditions: {}\n\
         frame iff idempotent monoid: {}\nproduct is meet: {}\n{}\n",
        r.size,
        yes(r.is_quantale),
        yes(r.binary_distributive),
        yes(r.right_join_law),
        r.left_unit.as_deref().unwrap_or("none"),
        r.right_unit.as_deref().unwrap_or("none"),
        yes(r.is_commutative),
        yes(r.satisfies_one_dominates),
        opt(r.holds_one_dominates_bounds),
        opt(r.holds_square),
        yes(r.holds_zero_divisor),
        yes(r.holds_frame_iff_idempotent_monoid),
        opt(r.holds_product_is_meet),
        r.banner
    );
    for w in &r.witnesses {
        t.push_str(&format!("witness: {w}\n"));
    }
    t
}

fn qqcheck(s: Loaded<Structure>) -> Output {
    let q = s.value.into_quantale();
    let r = law_report(&q);
    Output {
        json: json("quantlat.qqcheck/1", &s.name, &serde_json::json!({ "report": &r })),
        text: qq_text(&s.name, &r),
        dot: Some(q.lattice().hasse_dot(&s.name)),
        ok: true,
    }
}

fn nuclei(s: Loaded<Structure>, family: FamilyArg, max_size: usize) -> Result<Output, Failure> {
    let q = s.value.into_quantale();
    let family = match family {
        FamilyArg::Nuclei => Family::Nuclei,
        FamilyArg::Idiomatic => Family::Idiomatic,
        FamilyArg::Multiplicative => Family::Multiplicative,
        FamilyArg::Contextual => Family::Contextual,
    };
    let f = enumerate_nuclei(Carrier::Quantale(&q), family, max_size).map_err(|e| Failure::Input(e.to_string()))?;
    let l = q.lattice();
    #[derive(Serialize)]
    struct Member {
        table: Vec<String>,
        fixed: String,
    }
    #[derive(Serialize)]
    struct Body<'a> {
        family: Family,
        count: usize,
        members: Vec<Member>,
        report: &'a Option<StructureReport>,
        frame: &'a FrameClaim,
    }
    let members: Vec<Member> = f
        .members
        .iter()
        .map(|d| Member {
            table: d.table_names(),
            fixed: point_set_label(l, d.fixed_mask()),
        })
        .collect();
    let mut text = format!("{}: {} members of family {:?}\n", s.name, members.len(), family);
    for m in &members {
        text.push_str(&format!("  fixed {} map [{}]\n", m.fixed, m.table.join(", ")));
    }
    match &f.report {
        Some(r) => text.push_str(&lattice_text("family lattice", r)),
        None => text.push_str("family is not a lattice under the pointwise order\n"),
    }
    text.push_str(&format!("frame claim: {:?}\n", f.frame));
    let body = Body {
        family,
        count: members.len(),
        members,
        report: &f.report,
        frame: &f.frame,
    };
    Ok(Output {
        json: json("quantlat.nuclei/1", &s.name, &body),
        text,
        dot: f.lattice.as_ref().map(|fl| fl.hasse_dot(&s.name)),
        ok: f.frame.passed(),
    })
}

fn spec(s: Loaded<Structure>, relative: bool) -> Result<Output, Failure> {
    let mut q = s.value.into_quantale();
    if !relative {
        let all = q.lattice().all_mask();
        q = q.with_sub_b(all).map_err(|e| Failure::Input(e.to_string()))?;
    }
    let space = topology(&q).map_err(|e| match e {
        SpectrumError::HypothesisFailure(_) => Failure::Input(e.to_string()),
        _ => Failure::Law(e.to_string()),
    })?;
    let nu = mu(&space).map_err(|e| Failure::Law(e.to_string()))?;
    let r = spectrum_report(&space, &nu);
    let mut text = format!(
        "{}: B = {{{}}}\npoints: {{{}}}\nopens ({}): {}\nopens form a frame: {}\n",
        s.name,
        r.b.join(","),
        r.points.join(","),
        r.opens.len(),
        r.opens.join(" "),
        yes(r.open_frame_is_frame)
    );
    for (b, m) in &r.mu {
        text.push_str(&format!("mu({b}) = {m}\n"));
    }
    text.push_str(&format!("Fix(mu) = {{{}}}\n", r.mu_fixed.join(",")));
    Ok(Output {
        json: json("quantlat.spec/1", &s.name, &serde_json::json!({ "report": &r })),
        text,
        dot: Some(space.dot(&s.name)),
        ok: true,
    })
}

fn module(path: &Path) -> Result<Output, Failure> {
    let m = load_module(path)?;
    let certified = m.value.is_certified();
    let sl = SubmoduleLattice::new(m.value).map_err(|e| Failure::Input(e.to_string()))?;
    let a = analyze_lattice(&sl, certified).map_err(|e| Failure::Law(e.to_string()))?;
    let mut text = format!(
        "{}: factors {:?}, {} elements, certified: {}\nsubmodules ({}): {}\nfully invariant ({}): {}\n",
        m.name,
        a.factors,
        a.size,
        yes(a.certified),
        a.submodules.len(),
        a.submodules.join(" "),
        a.fully_invariant.len(),
        a.fully_invariant.join(" ")
    );
    text.push_str(&format!(
        "product laws: {}\nassociative: {}\ngenerator sufficiency: {} pairs, {} mismatches, {} skipped\n",
        yes(a.laws.all_hold()),
        yes(a.laws.associative),
        a.sufficiency.pairs_checked,
        a.sufficiency.mismatches.len(),
        a.sufficiency.pairs_skipped
    ));
    if let Some(sp) = &a.spectra {
        text.push_str(&format!(
            "LgSpec = {{{}}}\nSpec_fi = {{{}}}\ndense: {}\n",
            sp.lg_spec.join(","),
            sp.spec_fi.join(","),
            yes(sp.dense)
        ));
    }
    if let Some(s) = &a.semiprime {
        text.push_str(&format!(
            "SP = {{{}}}\nSP size = {}\nSP is a frame: {}\nSP boolean: {}\n",
            s.sp.join(","),
            s.sp.len(),
            yes(s.sp_is_frame),
            yes(s.sp_is_boolean)
        ));
    }
    if let Some(r) = &a.radicals {
        text.push_str(&format!(
            "Nil_star = {}\nRad = {}\nNil_star <= Rad: {}\n",
            r.nil_star,
            r.rad,
            yes(r.nil_star_below_rad)
        ));
    }
    if let Some(c) = &a.classification {
        text.push_str(&format!(
            "prime: {}\nFI-simple: {}\nduo: {}\nco-semisimple: {}\nLambda_fi frame: {}\n",
            yes(c.prime),
            yes(c.fi_simple),
            yes(c.duo),
            yes(c.co_semisimple),
            opt(c.lambda_fi_frame)
        ));
    }
    for w in &a.findings {
        text.push_str(&format!("finding: {w}\n"));
    }
    Ok(Output {
        json: json("quantlat.module/1", &m.name, &a),
        text,
        dot: Some(sl.lattice().hasse_dot(&m.name)),
        ok: true,
    })
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    match &cli.command {
        Command::Latcheck { file } => Ok(latcheck(load_structure(file)?)),
        Command::Qqcheck { file } => Ok(qqcheck(load_structure(file)?)),
        Command::Nuclei { file, family, max_size } => nuclei(load_structure(file)?, *family, *max_size),
        Command::Spec { file, relative } => spec(load_structure(file)?, *relative),
        Command::Module { file } => module(file),
        Command::VerifyPaper { corpus, omit } => {
            if let Some(dir) = corpus {
                if !dir.is_dir() {
                    return Err(Failure::Input(format!("{}: not a directory", dir.display())));
                }
            }
            let source = corpus.clone().map_or(CorpusSource::Embedded, CorpusSource::Dir);
            let r = run_verification(source, omit);
            Ok(Output {
                json: serde_json::to_value(&r).expect("run serializes"),
                text: r.text(),
                dot: None,
                ok: r.passed,
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let body = match cli.emit {
                Emit::Json => format!("{}\n", serde_json::to_string_pretty(&out.json).expect("json")),
                Emit::Text => out.text,
                Emit::Dot => match out.dot {
                    Some(d) => d,
                    None => {
                        eprintln!("error: this command has no dot output");
                        return ExitCode::from(2);
                    }
                },
            };
            // A closed pipe (e.g. `| head`) is not an error worth reporting.
            let _ = std::io::stdout().lock().write_all(body.as_bytes());
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Law(e)) => {
            eprintln!("law failure: {e}");
            ExitCode::from(1)
        }
        Err(Failure::Input(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
