//! `sepcx` command line.
//!
//! Exit codes: 0 success, 1 a check failed, 2 usage or input error,
//! 3 the requested `n` exceeds the enumeration cap (or a heavy computation
//! was requested without `--allow-heavy`).

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use sepcx::homology::{format_homology, reduced_homology};
use sepcx::report::{format_f_vector, reproduce_paper, Check, Report, ReproduceOptions, Status};
use sepcx::scomplex::{Complex, ComplexFile, Face};
use sepcx::sepcx::{
    boundary_study, build, cross_polytope_k, pair_free_index_sets, star_cover_cone_points,
    verify_complementary_extensions, verify_equivariance, verify_pi_chain_condition, verify_pi_properties,
    verify_ws_cover_intersections, SepcxError, DEFAULT_CAP,
};
use sepcx::sepsets::{GroundSize, Relation};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;

/// Environment variable overriding the enumeration cap.
pub const CAP_ENV: &str = "SEPCX_CAP";

/// Boundary computations above this `n` need `--allow-heavy`.
const BOUNDARY_LIGHT_LIMIT: u32 = 5;

#[derive(Parser, Debug)]
#[command(name = "sepcx", version, about = "Weak- and strong-separation clique complexes")]
struct Cli {
    /// Largest n accepted by the builders (default: $SEPCX_CAP or 7).
    #[arg(long, global = true)]
    cap: Option<u32>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args, Debug)]
struct Source {
    /// Complex file in the JSON exchange format.
    input: Option<PathBuf>,
    /// Build the complex for this n instead of reading a file.
    #[arg(long)]
    n: Option<u32>,
    /// Separation relation: ws or ss.
    #[arg(long, value_parser = parse_relation)]
    relation: Option<Relation>,
}

#[derive(Args, Debug)]
struct Output {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the result here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a separation complex and export it.
    Build {
        #[arg(long)]
        n: u32,
        #[arg(long, value_parser = parse_relation)]
        relation: Relation,
        /// Write the complex file here; a summary goes to standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Reduced integer homology.
    Homology {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Link of a face, e.g. `--face 15,234`.
    Link {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        face: String,
        #[command(flatten)]
        output: Output,
    },
    /// Star of a face.
    Star {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        face: String,
        #[command(flatten)]
        output: Output,
    },
    /// Deletion of a vertex set.
    Deletion {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        face: String,
        #[command(flatten)]
        output: Output,
    },
    /// Subcomplex generated by the ridges lying in exactly one facet.
    Boundary {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        output: Output,
        #[arg(long)]
        allow_heavy: bool,
    },
    /// f-vector as space-separated counts.
    Fvector {
        #[command(flatten)]
        source: Source,
    },
    /// Run a named verification.
    Verify {
        #[arg(value_enum)]
        check: VerifyName,
        #[arg(long)]
        n: u32,
        /// Relation for `equivariance` (both when omitted).
        #[arg(long, value_parser = parse_relation)]
        relation: Option<Relation>,
        #[command(flatten)]
        output: Output,
    },
    /// Every check in order, for n up to `--n`.
    ReproducePaper {
        #[arg(long, default_value_t = 5)]
        n: u32,
        /// Include the n = 6 computations.
        #[arg(long)]
        allow_heavy: bool,
        /// Also compute the ws boundary at n = 6.
        #[arg(long)]
        force_ws_boundary: bool,
        /// Stream progress to standard error.
        #[arg(long)]
        progress: bool,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VerifyName {
    /// Every nonempty face of the ss complex has a nonempty pi'.
    ComplementaryExtensions,
    /// No comparable pair of faces has a complementary pair in its pi' images.
    ChainCondition,
    /// pi' images are complement-free faces of K, carriers are faces, K is fixed.
    PiProperties,
    /// The symmetry group preserves facets, K and pi'.
    Equivariance,
    /// K is the cross-polytope boundary with sphere homology.
    CrossPolytope,
    /// Deletion covering of the ws complex and its intersections.
    WsCover,
    /// Cone points of the star covers of pair-free intersections.
    StarCover,
    /// Boundary homology and links at n = 5.
    BoundaryStudy,
}

fn parse_relation(s: &str) -> Result<Relation, String> {
    s.parse()
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Cap(String),
}

impl From<SepcxError> for Failure {
    fn from(e: SepcxError) -> Self {
        match e {
            SepcxError::CapExceeded { .. } => Failure::Cap(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<sepcx::scomplex::ComplexError> for Failure {
    fn from(e: sepcx::scomplex::ComplexError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<sepcx::sepsets::SetError> for Failure {
    fn from(e: sepcx::sepsets::SetError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn cap_from_env(flag: Option<u32>) -> Result<u32, Failure> {
    if let Some(c) = flag {
        return Ok(c);
    }
    match std::env::var(CAP_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| Failure::Usage(format!("{CAP_ENV}={v:?} is not a number"))),
        Err(_) => Ok(DEFAULT_CAP),
    }
}

fn ground(n: u32) -> Result<GroundSize, Failure> {
    Ok(GroundSize::new(n)?)
}

/// A loaded complex with its exchange-format description.
struct Loaded {
    file: ComplexFile,
    complex: Complex,
}

impl Loaded {
    fn resolve_face(&self, text: &str) -> Result<Face, Failure> {
        if self.file.n.is_some() {
            return Ok(self.file.resolve_face(text)?);
        }
        // free-form labels: match them literally
        let idx = text
            .split(',')
            .map(str::trim)
            .filter(|p| !p.is_empty())
            .map(|p| {
                self.file
                    .vertices
                    .iter()
                    .position(|v| v == p)
                    .ok_or_else(|| Failure::Usage(format!("{p} is not a vertex label")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        if idx.is_empty() {
            return Err(Failure::Usage(format!("empty face {text:?}")));
        }
        Ok(Face::new(idx))
    }

    fn n(&self) -> Option<u32> {
        self.file.n
    }

    fn export(&self, sub: &Complex) -> ComplexFile {
        ComplexFile::new(self.file.n, self.file.relation, self.file.vertices.clone(), sub)
    }
}

fn load(source: &Source, cap: u32) -> Result<Loaded, Failure> {
    match (&source.input, source.n, source.relation) {
        (Some(path), None, None) => {
            let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            let file = ComplexFile::from_json(&text)?;
            let complex = file.complex()?;
            Ok(Loaded { file, complex })
        }
        (None, Some(n), Some(r)) => {
            let x = build(ground(n)?, r, cap)?;
            Ok(Loaded { file: x.to_file(), complex: x.complex().clone() })
        }
        (None, Some(_), None) | (None, None, Some(_)) => Err(Failure::Usage("--n and --relation go together".into())),
        (None, None, None) => Err(Failure::Usage("give a complex file or --n and --relation".into())),
        (Some(_), _, _) => Err(Failure::Usage("give either a complex file or --n/--relation, not both".into())),
    }
}

fn emit(output: &Output, text: &str, stdout: &mut dyn Write) -> Result<(), Failure> {
    match &output.out {
        Some(path) => fs::write(path, text)?,
        None => stdout.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn emit_subcomplex(loaded: &Loaded, sub: &Complex, output: &Output, stdout: &mut dyn Write) -> Result<(), Failure> {
    let text = match output.format {
        Format::Json => {
            let mut s = loaded.export(sub).to_json();
            s.push('\n');
            s
        }
        Format::Text => {
            let mut s = format!("f-vector {}\n", format_f_vector(&sub.f_vector()));
            for f in sub.facets() {
                let labels: Vec<&str> = f.vertices().iter().map(|&v| loaded.file.vertices[v].as_str()).collect();
                s.push_str(&format!("{{{}}}\n", labels.join(",")));
            }
            s
        }
    };
    emit(output, &text, stdout)
}

fn emit_report(report: &Report, output: &Output, stdout: &mut dyn Write) -> Result<i32, Failure> {
    let text = match output.format {
        Format::Text => report.to_text(),
        Format::Json => report.to_json(),
    };
    emit(output, &text, stdout)?;
    Ok(if report.passed() { EXIT_OK } else { EXIT_FAILED })
}

fn sweep_line(report: &mut Report, name: String, scope: &str, s: &sepcx::sepcx::Sweep) {
    let mode = if s.exhaustive { "exhaustive" } else { "sampled" };
    let mut c = Check::compare(name, scope, 0, s.violations);
    let mut w = format!("{} {mode} checks", s.checked);
    if !s.witnesses.is_empty() {
        w.push_str(&format!("; {}", s.witnesses.join("; ")));
    }
    c = c.witness(w);
    report.push(c);
}

fn verify(check: VerifyName, n: u32, relation: Option<Relation>, cap: u32) -> Result<Report, Failure> {
    let gs = ground(n)?;
    let mut report = Report::default();
    match check {
        VerifyName::ComplementaryExtensions | VerifyName::ChainCondition | VerifyName::PiProperties => {
            let x = build(gs, Relation::Strong, cap)?;
            let scope = x.name();
            match check {
                VerifyName::ComplementaryExtensions => {
                    let s = verify_complementary_extensions(&x)?;
                    sweep_line(&mut report, format!("faces of {scope} with pi' empty"), &scope, &s);
                }
                VerifyName::ChainCondition => {
                    let s = verify_pi_chain_condition(&x)?;
                    sweep_line(
                        &mut report,
                        format!("comparable pairs of {scope} with a complementary pair in pi'"),
                        &scope,
                        &s,
                    );
                }
                _ => {
                    let p = verify_pi_properties(&x)?;
                    sweep_line(&mut report, format!("faces of {scope} whose pi' is not a complement-free face of K"), &scope, &p.image_is_k_face);
                    sweep_line(&mut report, format!("faces of {scope} with sigma + pi'(sigma) not a face"), &scope, &p.carrier_is_face);
                    sweep_line(&mut report, format!("faces of K({n}) not fixed by pi'"), &scope, &p.identity_on_k);
                }
            }
        }
        VerifyName::Equivariance => {
            let relations = relation.map_or(Relation::ALL.to_vec(), |r| vec![r]);
            for r in relations {
                let x = build(gs, r, cap)?;
                let scope = x.name();
                for e in verify_equivariance(&x)? {
                    let computed = if e.passed() { "equivariant" } else { "not equivariant" };
                    report.push(Check::compare(format!("symmetry {} on {scope}", e.element), &scope, "equivariant", computed));
                }
            }
        }
        VerifyName::CrossPolytope => {
            if n > cap {
                return Err(SepcxError::CapExceeded { n, cap }.into());
            }
            let k = cross_polytope_k(gs)?;
            let scope = format!("K({n})");
            let iso = k.has_cross_polytope_graph() && k.model_isomorphism().is_some();
            report.push(Check::compare(
                format!("K({n}) isomorphic to the {}-cross-polytope boundary", n - 2),
                &scope,
                "yes",
                if iso { "yes" } else { "no" },
            ));
            let h = reduced_homology(k.complex());
            report.push(Check::compare(
                format!("homology(K({n}))"),
                &scope,
                format!("H~{} = Z", n - 3),
                sepcx::report::homology_summary(&h),
            ));
        }
        VerifyName::WsCover => {
            let x = build(gs, Relation::Weak, cap)?;
            let scope = x.name();
            let all = verify_ws_cover_intersections(&x)?;
            let total = all.len();
            let ok = |f: &dyn Fn(&sepcx::sepcx::CoverIntersection) -> bool| all.iter().filter(|c| f(c)).count();
            report.push(Check::compare(format!("nonempty covering intersections of {scope}"), &scope, total, ok(&|c| c.nonempty())));
            report.push(Check::compare(format!("acyclic covering intersections of {scope}"), &scope, total, ok(&|c| c.homology_trivial)));
            report.push(Check::compare(
                format!("covering intersections of {scope} containing the star of the hub edge"),
                &scope,
                total,
                ok(&|c| c.contains_hub_star),
            ));
            let collapsed = ok(&|c| c.collapse == sepcx::scomplex::CollapseStatus::CollapsedToPoint);
            let status = if collapsed == total { Status::Pass } else { Status::Inconclusive };
            report.push(Check::with_status(
                format!("collapsible covering intersections of {scope}"),
                &scope,
                total,
                collapsed,
                status,
            ));
        }
        VerifyName::StarCover => {
            let x = build(gs, Relation::Weak, cap)?;
            let scope = x.name();
            for sigma in pair_free_index_sets(gs) {
                let sc = star_cover_cone_points(&x, &sigma)?;
                let bad: Vec<String> = sc
                    .intersections
                    .iter()
                    .filter(|i| !i.passed())
                    .map(|i| format!("tau {:?}", i.tau))
                    .collect();
                let computed = if sc.passed() { "cone points found" } else { "missing cone points" };
                report.push(
                    Check::compare(format!("star cover of {scope} for indices {sigma:?}"), &scope, "cone points found", computed)
                        .witness(bad.join("; ")),
                );
            }
        }
        VerifyName::BoundaryStudy => {
            if n != 5 {
                return Err(Failure::Usage("boundary-study runs at n = 5".into()));
            }
            let ss = build(gs, Relation::Strong, cap)?;
            let ws = build(gs, Relation::Weak, cap)?;
            let b = boundary_study(&ss, &ws)?;
            report.push(Check::compare(
                "homology(boundary ss5)",
                "ss5",
                "H~2 = Z, H~3 = Z^9, H~4 = Z",
                sepcx::report::homology_summary(&b.ss_boundary),
            ));
            report.push(Check::compare(
                "homology(boundary ws5)",
                "ws5",
                "H~2 = Z, H~4 = Z",
                sepcx::report::homology_summary(&b.ws_boundary),
            ));
            for (v, h) in &b.ws_vertex_links {
                report.push(Check::compare(
                    format!("homology(lk({v}) in boundary ws5)"),
                    "ws5",
                    "H~1 = Z, H~3 = Z",
                    sepcx::report::homology_summary(h),
                ));
            }
            report.push(Check::compare(
                "lk(15,234) in boundary ws5",
                "ws5",
                "2 octahedron boundaries, f (12,24,16)",
                format!(
                    "{} {}, f {}",
                    b.ws_edge_link.components,
                    if b.ws_edge_link.all_match_model { "octahedron boundaries" } else { "components" },
                    format_f_vector(&b.ws_edge_link.f_vector)
                ),
            ));
            report.push(Check::compare(
                "lk(2,23,234) in boundary ss5",
                "ss5",
                "2 4-cycles, f (8,8)",
                format!(
                    "{} {}, f {}",
                    b.ss_triangle_link.components,
                    if b.ss_triangle_link.all_match_model { "4-cycles" } else { "components" },
                    format_f_vector(&b.ss_triangle_link.f_vector)
                ),
            ));
        }
    }
    Ok(report)
}

fn dispatch(cli: Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32, Failure> {
    let cap = cap_from_env(cli.cap)?;
    match cli.command {
        Command::Build { n, relation, out } => {
            let x = build(ground(n)?, relation, cap)?;
            let mut json = x.to_file().to_json();
            json.push('\n');
            match out {
                Some(path) => {
                    fs::write(&path, json)?;
                    writeln!(
                        stdout,
                        "{}: {} vertices, f-vector {} -> {}",
                        x.name(),
                        x.complex().vertex_count(),
                        format_f_vector(&x.complex().f_vector()),
                        path.display()
                    )?;
                }
                None => stdout.write_all(json.as_bytes())?,
            }
            Ok(EXIT_OK)
        }
        Command::Homology { source, format } => {
            let loaded = load(&source, cap)?;
            let h = reduced_homology(&loaded.complex);
            match format {
                Format::Text => stdout.write_all(format_homology(&h).as_bytes())?,
                Format::Json => {
                    let v = serde_json::json!({ "f_vector": loaded.complex.f_vector(), "homology": h });
                    writeln!(stdout, "{}", serde_json::to_string(&v).expect("serializable"))?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Link { source, face, output } => {
            let loaded = load(&source, cap)?;
            let sub = loaded.complex.link(&loaded.resolve_face(&face)?)?;
            emit_subcomplex(&loaded, &sub, &output, stdout)?;
            Ok(EXIT_OK)
        }
        Command::Star { source, face, output } => {
            let loaded = load(&source, cap)?;
            let sub = loaded.complex.star(&loaded.resolve_face(&face)?)?;
            emit_subcomplex(&loaded, &sub, &output, stdout)?;
            Ok(EXIT_OK)
        }
        Command::Deletion { source, face, output } => {
            let loaded = load(&source, cap)?;
            let sub = loaded.complex.deletion(&loaded.resolve_face(&face)?);
            emit_subcomplex(&loaded, &sub, &output, stdout)?;
            Ok(EXIT_OK)
        }
        Command::Boundary { source, output, allow_heavy } => {
            let loaded = load(&source, cap)?;
            if let Some(n) = loaded.n() {
                if n > BOUNDARY_LIGHT_LIMIT && !allow_heavy {
                    return Err(Failure::Cap(format!("boundary at n = {n} needs --allow-heavy")));
                }
            }
            if allow_heavy {
                writeln!(stderr, "computing boundary of a complex with {} facets", loaded.complex.facets().len())?;
            }
            let sub = loaded.complex.boundary_subcomplex()?;
            emit_subcomplex(&loaded, &sub, &output, stdout)?;
            Ok(EXIT_OK)
        }
        Command::Fvector { source } => {
            let loaded = load(&source, cap)?;
            let f: Vec<String> = loaded.complex.f_vector().iter().map(ToString::to_string).collect();
            writeln!(stdout, "{}", f.join(" "))?;
            Ok(EXIT_OK)
        }
        Command::Verify { check, n, relation, output } => {
            let report = verify(check, n, relation, cap)?;
            emit_report(&report, &output, stdout)
        }
        Command::ReproducePaper { n, allow_heavy, force_ws_boundary, progress, output } => {
            let opts = ReproduceOptions { nmax: n, cap, allow_heavy, force_ws_boundary };
            let stream = progress || allow_heavy;
            let report = reproduce_paper(&opts, &mut |msg| {
                if stream {
                    let _ = writeln!(stderr, "... {msg}");
                }
            })?;
            emit_report(&report, &output, stdout)
        }
    }
}

/// Runs the command line `argv` (including the program name) and returns
/// the process exit code.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = stderr.write_all(rendered.as_bytes());
            } else {
                let _ = stdout.write_all(rendered.as_bytes());
            }
            return code;
        }
    };
    match dispatch(cli, stdout, stderr) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Cap(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_CAP
        }
    }
}
