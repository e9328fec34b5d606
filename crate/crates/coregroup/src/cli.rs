//! The subcommands behind the `coregroup` binary.
//!
//! Every command renders into a [`Report`], a list of `key = value`
//! records, and only then writes it out in one piece. Structured output is
//! exactly those records, one per line; human output aligns the keys.
//!
//! Exit codes: `0` success, `1` usage or parse error, `2` a budget ran out,
//! `3` an internal invariant failed (including a certificate that does not
//! replay).

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::abelian::{abelianization, alexander_nu_matrix, relation_matrix, smith_normal_form};
use crate::diagram::{generate_named, parse_gauss_code, Named, VirtualLinkDiagram};
use crate::error::{Error, Result};
use crate::grouppres::{
    build_core_presentation, build_orbifold_presentation, build_wirtinger_presentation,
    recognize_free_product_of_cyclics, split_off_generator, tietze_simplify, Presentation,
};
use crate::peripheral::{
    emit_pairs, enumerate_pairs, longitude, orbifold_plus_presentation, phi, ByRewriting,
    Equivalence, FreeReduction,
};
use crate::quotients::whitehead::{analyze_diagram, analyze_two_generator};
use crate::quotients::{eta_family, separate, SeparationCertificate};
use crate::triangle::{
    build_triangle, check_translation_along_xi, evaluate, relation_residual,
    trotter_longitude_class, trotter_quotient,
};

#[derive(Debug, Parser)]
#[command(
    name = "coregroup",
    version,
    about = "Core groups of virtual links and their peripheral structure"
)]
pub struct Cli {
    /// Output style.
    #[arg(long, value_enum, default_value_t = Format::Structured, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Structured,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Core,
    Wirtinger,
    Orbifold,
    OrbifoldPlus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Oracle {
    /// Free reduction only.
    Free,
    /// Bounded rewriting with the crossing relators.
    Rewrite,
    /// Free-product normal forms; fails when recognition fails.
    Freeprod,
    /// Images in the abelianization.
    Abelian,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    /// Compare longitudes at equally labelled arcs of two diagrams with the
    /// same core presentation.
    Peripheral,
    /// Compare which longitudes are trivial.
    LongitudeTriviality,
}

/// Exactly one diagram source.
#[derive(Debug, Clone, Args)]
#[group(required = true, multiple = false)]
pub struct Input {
    /// A named fixture, e.g. `hopf`, `pretzel:7,-3,5`, `twisted_whitehead:1`.
    #[arg(long, allow_hyphen_values = true)]
    pub fixture: Option<String>,
    /// An inline signed Gauss code, e.g. `O1+,U2+;U1+,O2+`.
    #[arg(long, allow_hyphen_values = true)]
    pub code: Option<String>,
    /// A file holding a Gauss code; `#` starts a comment line.
    #[arg(long)]
    pub file: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Emit a presentation.
    Present {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Kind::Core)]
        kind: Kind,
        /// Kill the generator of this arc label first.
        #[arg(long)]
        split: Option<String>,
        /// Run Tietze simplification.
        #[arg(long)]
        simplify: bool,
    },
    /// Emit meridian-longitude pairs up to a depth of ι maps.
    Peripheral {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 2)]
        depth: usize,
        #[arg(long, value_enum, default_value_t = Oracle::Rewrite)]
        oracle: Oracle,
        /// Rewriting budget in steps.
        #[arg(long, default_value_t = 2000)]
        budget: usize,
    },
    /// Abelianization, φ check and longitude properties.
    Invariants {
        #[command(flatten)]
        input: Input,
    },
    /// Try to tell two diagrams apart.
    Distinguish {
        /// Fixture name or Gauss code.
        #[arg(long, allow_hyphen_values = true)]
        left: String,
        /// Fixture name or Gauss code.
        #[arg(long, allow_hyphen_values = true)]
        right: String,
        #[arg(long, value_enum, default_value_t = Mode::Peripheral)]
        mode: Mode,
        /// Largest degree for the homomorphism search.
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u64).range(2..))]
        degree: u64,
        /// Homomorphisms tried per degree.
        #[arg(long, default_value_t = 200, value_parser = clap::value_parser!(u64).range(1..))]
        limit: u64,
        /// Write the separation certificate here, ready for `verify`.
        #[arg(long)]
        emit_cert: Option<PathBuf>,
    },
    /// Orders and structures of the even-product groups of twisted Whitehead links.
    Whitehead {
        #[arg(long, default_value_t = -2, allow_hyphen_values = true)]
        from: i64,
        #[arg(long, default_value_t = 2, allow_hyphen_values = true)]
        to: i64,
        /// Coset table ceiling.
        #[arg(long, default_value_t = 1_000_000, value_parser = clap::value_parser!(u64).range(1..))]
        ceiling: u64,
    },
    /// Reflection representation check for a pretzel triple.
    Trotter {
        #[arg(allow_hyphen_values = true)]
        p: i64,
        #[arg(allow_hyphen_values = true)]
        q: i64,
        #[arg(allow_hyphen_values = true)]
        r: i64,
    },
    /// Replay a separation certificate.
    Verify {
        #[arg(long)]
        cert: PathBuf,
    },
    /// List the named fixtures.
    Fixtures,
}

/// Ordered key-value records.
#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct Report {
    records: Vec<(String, String)>,
}

impl Report {
    pub fn push(&mut self, key: impl Into<String>, value: impl ToString) {
        self.records.push((key.into(), value.to_string()));
    }

    /// Absorbs `key = value` lines; the split is at the first ` = `.
    pub fn absorb(&mut self, text: &str) {
        for line in text.lines().filter(|l| !l.trim().is_empty()) {
            match line.split_once(" = ") {
                Some((k, v)) => self.push(k, v),
                None => self.push(line, ""),
            }
        }
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.records
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    pub fn records(&self) -> &[(String, String)] {
        &self.records
    }

    pub fn render(&self, format: Format) -> String {
        let mut s = String::new();
        match format {
            Format::Structured => {
                for (k, v) in &self.records {
                    let _ = writeln!(s, "{k} = {v}");
                }
            }
            Format::Human => {
                let w = self
                    .records
                    .iter()
                    .map(|(k, _)| k.chars().count())
                    .max()
                    .unwrap_or(0);
                for (k, v) in &self.records {
                    let _ = writeln!(s, "{k:<w$}  {v}");
                }
            }
        }
        s
    }
}

/// What a finished run prints and returns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::BudgetExceeded(_) => 2,
        Error::Invariant(_) => 3,
        _ => 1,
    }
}

/// Parses arguments (including the program name) and runs the command.
pub fn run_from_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: 1,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    match run(&cli) {
        Ok(r) => Outcome {
            code: 0,
            stdout: r.render(cli.format),
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: exit_code(&e),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

pub fn run(cli: &Cli) -> Result<Report> {
    match &cli.command {
        Command::Present {
            input,
            kind,
            split,
            simplify,
        } => cmd_present(&load(input)?, *kind, split.as_deref(), *simplify),
        Command::Peripheral {
            input,
            depth,
            oracle,
            budget,
        } => cmd_peripheral(&load(input)?, *depth, *oracle, *budget),
        Command::Invariants { input } => cmd_invariants(&load(input)?),
        Command::Distinguish {
            left,
            right,
            mode,
            degree,
            limit,
            emit_cert,
        } => {
            let l = diagram_from_spec(left)?;
            let r = diagram_from_spec(right)?;
            let mut report = match mode {
                Mode::Peripheral => {
                    cmd_distinguish_peripheral(&l, &r, *degree as usize, *limit as usize)?
                }
                Mode::LongitudeTriviality => cmd_distinguish_triviality(&l, &r)?,
            };
            if let (Some(path), Some(cert)) = (emit_cert, report.certificate.take()) {
                let text = format!("fixture = {left}\n{cert}");
                std::fs::write(path, text)
                    .map_err(|e| Error::Precondition(format!("{}: {e}", path.display())))?;
            }
            Ok(report.report)
        }
        Command::Whitehead { from, to, ceiling } => cmd_whitehead(*from, *to, *ceiling as usize),
        Command::Trotter { p, q, r } => cmd_trotter(*p, *q, *r),
        Command::Verify { cert } => {
            let text = std::fs::read_to_string(cert)
                .map_err(|e| Error::Precondition(format!("{}: {e}", cert.display())))?;
            cmd_verify(&text)
        }
        Command::Fixtures => cmd_fixtures(),
    }
}

fn load(input: &Input) -> Result<VirtualLinkDiagram> {
    match (&input.fixture, &input.code, &input.file) {
        (Some(f), None, None) => generate_named(&f.parse::<Named>()?),
        (None, Some(c), None) => parse_gauss_code(c),
        (None, None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Precondition(format!("{}: {e}", path.display())))?;
            let code: String = text
                .lines()
                .map(str::trim)
                .filter(|l| !l.starts_with('#'))
                .collect::<Vec<_>>()
                .join("");
            parse_gauss_code(&code)
        }
        _ => Err(Error::Precondition(
            "give exactly one of --fixture, --code, --file".into(),
        )),
    }
}

/// A fixture name if it parses as one, otherwise a Gauss code.
pub fn diagram_from_spec(spec: &str) -> Result<VirtualLinkDiagram> {
    match spec.parse::<Named>() {
        Ok(n) => generate_named(&n),
        Err(_) => parse_gauss_code(spec),
    }
}

pub fn cmd_present(
    d: &VirtualLinkDiagram,
    kind: Kind,
    split: Option<&str>,
    simplify: bool,
) -> Result<Report> {
    let mut p = match kind {
        Kind::Core => build_core_presentation(d),
        Kind::Wirtinger => build_wirtinger_presentation(d),
        Kind::Orbifold => build_orbifold_presentation(&build_wirtinger_presentation(d))?,
        Kind::OrbifoldPlus => orbifold_plus_presentation(d)?,
    };
    let mut r = Report::default();
    r.push("components", d.mu());
    r.push("crossings", d.crossing_count());
    if let Some(label) = split {
        let arc = d.arc_by_label(label)?;
        p = split_off_generator(&p, arc)?;
        r.push("split", label);
    }
    if simplify {
        p = tietze_simplify(&p).presentation;
        r.push("simplified", true);
    }
    r.absorb(&p.emit());
    Ok(r)
}

fn oracle_for(p: &Presentation, oracle: Oracle, budget: usize) -> Result<Box<dyn Equivalence>> {
    Ok(match oracle {
        Oracle::Free => Box::new(FreeReduction),
        Oracle::Rewrite => Box::new(ByRewriting::new(p, budget)),
        Oracle::Freeprod => Box::new(recognize_free_product_of_cyclics(p, budget)?),
        Oracle::Abelian => Box::new(abelianization(p)?),
    })
}

pub fn cmd_peripheral(
    d: &VirtualLinkDiagram,
    depth: usize,
    oracle: Oracle,
    budget: usize,
) -> Result<Report> {
    let p = build_core_presentation(d);
    let eq = oracle_for(&p, oracle, budget)?;
    let pairs = enumerate_pairs(d, depth, eq.as_ref())?;
    let mut r = Report::default();
    r.push("depth", depth);
    r.absorb(&emit_pairs(&p, &pairs));
    Ok(r)
}

fn show_vec(v: &[i64]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(", "))
}

/// One summand per cyclic factor, e.g. `Z + Z4 + Z4`.
fn summands(free_rank: usize, torsion: &[u64]) -> String {
    let parts: Vec<String> = std::iter::repeat_n("Z".to_string(), free_rank)
        .chain(torsion.iter().map(|t| format!("Z{t}")))
        .collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

pub fn cmd_invariants(d: &VirtualLinkDiagram) -> Result<Report> {
    let p = build_core_presentation(d);
    let ab = abelianization(&p)?;
    let mut r = Report::default();
    r.push("abelianization", ab.describe());
    r.push("summands", summands(ab.free_rank, &ab.torsion));
    r.push("free_rank", ab.free_rank);
    let tors: Vec<String> = ab.torsion.iter().map(|t| t.to_string()).collect();
    r.push(
        "invariant_factors",
        if tors.is_empty() {
            "none".to_string()
        } else {
            tors.join(" ")
        },
    );

    let phi_ok = p.relators().iter().try_fold(true, |ok, w| {
        let t = phi(d, w)?;
        Ok::<_, Error>(ok && t.integer == 0 && t.bits.iter().all(|&b| b == 0))
    })?;
    r.push("phi_relators_zero", phi_ok);

    let abs_diag = |m| -> Result<Vec<String>> {
        Ok(smith_normal_form(m)?
            .diagonal()
            .iter()
            .map(|x| x.magnitude().to_string())
            .collect())
    };
    r.push(
        "nu_factors_match",
        abs_diag(&alexander_nu_matrix(d))? == abs_diag(&relation_matrix(&p))?,
    );

    let mut all_two_torsion = true;
    let mut sum = vec![0i64; ab.moduli().len()];
    for arc in d.arcs() {
        let l = longitude(d, arc.id)?;
        let img = ab.image(&l)?;
        let doubled: Vec<i64> = img.iter().map(|x| 2 * x).collect();
        all_two_torsion &= ab.is_zero(&doubled);
        r.push(
            format!("longitude {}", arc.label),
            format!("{} ab = {}", p.show(&l), show_vec(&img)),
        );
    }
    for c in 0..d.mu() {
        let first = d.component_arcs(c)[0];
        let img = ab.image(&longitude(d, first)?)?;
        sum.iter_mut().zip(&img).for_each(|(s, x)| *s += x);
    }
    r.push("longitudes_two_torsion", all_two_torsion);
    r.push(
        "component_longitudes_sum_zero",
        ab.is_zero(&ab.normalize(&sum)),
    );
    if d.is_knot() {
        let zero = d.arcs().iter().try_fold(true, |ok, a| {
            Ok::<_, Error>(ok && ab.is_zero(&ab.image(&longitude(d, a.id)?)?))
        })?;
        r.push("knot_longitudes_zero", zero);
    }
    Ok(r)
}

/// A distinguish report and, when one was found, the certificate text.
pub struct Distinction {
    pub report: Report,
    pub certificate: Option<String>,
}

/// `(over, sorted unders)` per crossing, sorted: equal keys mean equal
/// core presentations up to relator rotation and inversion.
fn core_key(d: &VirtualLinkDiagram) -> Vec<(usize, usize, usize)> {
    let mut k: Vec<_> = d
        .crossings()
        .map(|c| {
            let (b1, b2) = (c.right_under, c.left_under());
            (c.over_arc, b1.min(b2), b1.max(b2))
        })
        .collect();
    k.sort_unstable();
    k
}

pub fn cmd_distinguish_peripheral(
    l: &VirtualLinkDiagram,
    rd: &VirtualLinkDiagram,
    degree: usize,
    limit: usize,
) -> Result<Distinction> {
    let mut r = Report::default();
    r.push("mode", "peripheral");
    let p = build_core_presentation(l);
    if l.labels() != rd.labels() || core_key(l) != core_key(rd) {
        r.push("shared_core_presentation", false);
        r.push("result", "not_separated");
        return Ok(Distinction {
            report: r,
            certificate: None,
        });
    }
    r.push("shared_core_presentation", true);
    let mut candidates = Vec::new();
    if p.ngens() == 6 {
        for n in 1..=6 {
            candidates.extend(eta_family(n)?);
        }
    }
    for arc in l.arcs() {
        let (wl, wr) = (longitude(l, arc.id)?, longitude(rd, arc.id)?);
        if wl.free_reduce() == wr.free_reduce() {
            continue;
        }
        if let Some(cert) = separate(&p, &wl, &wr, &candidates, degree, limit)? {
            if !cert.verify(&p)? {
                return Err(Error::Invariant("fresh certificate fails to verify".into()));
            }
            r.push("result", "separated");
            r.push("arc", &arc.label);
            let text = cert.emit(&p);
            r.absorb(&text);
            return Ok(Distinction {
                report: r,
                certificate: Some(text),
            });
        }
    }
    r.push("result", "not_separated");
    r.push("search_degree", degree);
    Ok(Distinction {
        report: r,
        certificate: None,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Triviality {
    Trivial,
    Nontrivial,
    Unknown,
}

fn classify_longitudes(d: &VirtualLinkDiagram) -> Result<Vec<(String, Triviality)>> {
    let p = build_core_presentation(d);
    let fp = recognize_free_product_of_cyclics(&p, 10_000).ok();
    d.arcs()
        .iter()
        .map(|a| {
            let w = longitude(d, a.id)?.free_reduce();
            let t = if w.is_empty() {
                Triviality::Trivial
            } else {
                match &fp {
                    Some(s) if s.normal_form(&w)?.is_empty() => Triviality::Trivial,
                    Some(_) => Triviality::Nontrivial,
                    None => Triviality::Unknown,
                }
            };
            Ok((a.label.clone(), t))
        })
        .collect()
}

pub fn cmd_distinguish_triviality(
    l: &VirtualLinkDiagram,
    rd: &VirtualLinkDiagram,
) -> Result<Distinction> {
    let mut r = Report::default();
    r.push("mode", "longitude-triviality");
    let sides = [
        ("left", classify_longitudes(l)?),
        ("right", classify_longitudes(rd)?),
    ];
    for (side, cls) in &sides {
        for (label, t) in cls {
            let s = match t {
                Triviality::Trivial => "trivial",
                Triviality::Nontrivial => "nontrivial",
                Triviality::Unknown => "unknown",
            };
            r.push(format!("{side} longitude {label}"), s);
        }
    }
    let has_trivial = |c: &[(String, Triviality)]| c.iter().any(|(_, t)| *t == Triviality::Trivial);
    let all_nontrivial =
        |c: &[(String, Triviality)]| c.iter().all(|(_, t)| *t == Triviality::Nontrivial);
    let separated = (has_trivial(&sides[0].1) && all_nontrivial(&sides[1].1))
        || (has_trivial(&sides[1].1) && all_nontrivial(&sides[0].1));
    r.push(
        "result",
        if separated {
            "separated"
        } else {
            "not_separated"
        },
    );
    Ok(Distinction {
        report: r,
        certificate: None,
    })
}

pub fn cmd_whitehead(from: i64, to: i64, ceiling: usize) -> Result<Report> {
    if from > to {
        return Err(Error::InvalidParameter(format!("empty range {from}..{to}")));
    }
    let mut r = Report::default();
    for n in from..=to {
        let w = analyze_two_generator(n, ceiling)?;
        r.push("n", n);
        r.push("order", w.order);
        r.push("structure", &w.structure);
        r.push("b_order", w.b_order);
        r.push("u_order", w.u_order);
        r.push("kernel_cyclic", w.kernel_cyclic);
        r.push("b_inverts_u", w.b_inverts_u);
        let diag = analyze_diagram(n, ceiling)?;
        r.push("diagram_order", diag.order);
        r.push("diagram_agrees", diag == w.structure);
    }
    Ok(r)
}

pub fn cmd_trotter(p: i64, q: i64, rr: i64) -> Result<Report> {
    let (data, refl) = build_triangle(p, q, rr)?;
    let pres = trotter_quotient(p, q, rr)?;
    let lam = trotter_longitude_class(p, q, rr)?;
    let t = evaluate(&lam, &refl)?;
    let rep = check_translation_along_xi(&data, &refl, &t)?;
    let back = check_translation_along_xi(&data, &refl, &evaluate(&lam.inverse(), &refl)?)?;
    let mut r = Report::default();
    r.push("triple", format!("{p} {q} {rr}"));
    r.push("klm", format!("{} {} {}", data.k, data.l, data.m));
    r.push("longitude", pres.show(&lam));
    r.push(
        "relation_residual",
        format!("{:.3e}", relation_residual(&data, &refl)),
    );
    r.push("commutes_with_x", rep.commutes_with_x);
    r.push(
        "commutator_residual",
        format!("{:.3e}", rep.commutator_residual),
    );
    r.push(
        "translation_length",
        format!("{:.6}", rep.translation_length),
    );
    r.push("direction_sign", rep.direction_sign);
    r.push("inverse_direction_sign", back.direction_sign);
    Ok(r)
}

/// Replays a certificate file: a `fixture = ...` or `code = ...` header,
/// then the certificate lines.
pub fn cmd_verify(text: &str) -> Result<Report> {
    let mut source = None;
    let mut body = String::new();
    for line in text.lines() {
        match line.split_once('=').map(|(k, v)| (k.trim(), v.trim())) {
            Some(("fixture", v)) => source = Some(diagram_from_spec(v)?),
            Some(("code", v)) => source = Some(parse_gauss_code(v)?),
            _ => {
                body.push_str(line);
                body.push('\n');
            }
        }
    }
    let d =
        source.ok_or_else(|| Error::BadText("certificate lacks a fixture or code line".into()))?;
    let p = build_core_presentation(&d);
    let cert = SeparationCertificate::parse(&p, &body)?;
    if !cert.verify(&p)? {
        return Err(Error::Invariant("certificate does not replay".into()));
    }
    let mut r = Report::default();
    r.push("valid", true);
    r.push("degree", cert.assignment.degree);
    r.push("w1", p.show(&cert.w1));
    r.push("w2", p.show(&cert.w2));
    Ok(r)
}

pub fn cmd_fixtures() -> Result<Report> {
    let mut r = Report::default();
    for name in Named::catalogue() {
        let d = generate_named(&name)?;
        r.push("fixture", &name);
        r.push("components", d.mu());
        r.push("crossings", d.crossing_count());
        r.push("code", d.to_gauss_code());
    }
    Ok(r)
}
