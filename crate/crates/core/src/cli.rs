//! Command-line front end. The binary only parses arguments and calls [`execute`];
//! everything else lives here so it can be tested in-process.

use std::fmt;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::algebra::{AlgebraSpec, Parity};
use crate::corpus;
use crate::error::{Error, Result};
use crate::extension::{build_extended, check_extension, verify_embedding_decomposition, verify_phi_properties};
use crate::format::{parse_algebra, TripleFile};
use crate::linalg::{format_scalar, Matrix};
use crate::maps::GradedMap;
use crate::report::{matrix_strings, Check, CheckReport, Witness};
use crate::spaces::{decompose_generalized, solve_space, MapSpace, Mode, SpaceCache, SpaceKind};
use crate::theorems::{axiom_checks, check_bracket_laws, check_generalized_split, check_inclusion_chain, check_qc_structure};

#[derive(Debug, Parser)]
#[command(name = "homlie", version, about = "Exact operator spaces of Hom-Lie superalgebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Target {
    /// Algebra file (JSON), or the name of a bundled algebra
    /// (ex2_5, abelian2, heisenberg3, odd_heisenberg).
    pub algebra: String,
    /// Do not require maps to commute with the twist.
    #[arg(long)]
    pub lax: bool,
    /// Emit the structured report as JSON.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the axioms and report multiplicativity.
    Validate(Target),
    /// Print the center and the derived subalgebra.
    Center(Target),
    /// Solve for one space and print its canonical basis.
    Solve {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_parser = parse_kind)]
        kind: SpaceKind,
        #[arg(long, allow_negative_numbers = true)]
        k: i64,
        #[arg(long, default_value_t = 0, value_parser = clap::value_parser!(u8).range(0..=1))]
        degree: u8,
    },
    /// Inclusions ZDer ⊆ Der ⊆ QDer ⊆ GDer, C ⊆ QC and C ⊆ QDer.
    Chain {
        #[command(flatten)]
        target: Target,
        #[arg(long, default_value_t = 3)]
        kmax: u32,
    },
    /// Bracket laws among the spaces.
    Laws {
        #[command(flatten)]
        target: Target,
        #[arg(long, default_value_t = 3)]
        kmax: u32,
    },
    /// Split a generalized derivation triple read from a JSON file.
    Decompose {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        k: u32,
        /// File with {"degree": 0|1, "maps": [D, D', D'']}, matrices of rational strings.
        #[arg(long)]
        triple: PathBuf,
    },
    /// Build and check the t-truncated extension.
    Extend(Target),
    /// Check phi and the decomposition of the extension's derivations at one k.
    Embed {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        k: u32,
    },
    /// Jordan structure of the quasicentroid.
    Jordan {
        #[command(flatten)]
        target: Target,
        #[arg(long, default_value_t = 3)]
        kmax: u32,
    },
    /// Everything above.
    Report {
        #[command(flatten)]
        target: Target,
        #[arg(long, default_value_t = 3)]
        kmax: u32,
    },
}

fn parse_kind(s: &str) -> std::result::Result<SpaceKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

impl Command {
    pub fn target(&self) -> &Target {
        match self {
            Command::Validate(t) | Command::Center(t) | Command::Extend(t) => t,
            Command::Solve { target, .. }
            | Command::Chain { target, .. }
            | Command::Laws { target, .. }
            | Command::Decompose { target, .. }
            | Command::Embed { target, .. }
            | Command::Jordan { target, .. }
            | Command::Report { target, .. } => target,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Command::Validate(_) => "validate",
            Command::Center(_) => "center",
            Command::Solve { .. } => "solve",
            Command::Chain { .. } => "chain",
            Command::Laws { .. } => "laws",
            Command::Decompose { .. } => "decompose",
            Command::Extend(_) => "extend",
            Command::Embed { .. } => "embed",
            Command::Jordan { .. } => "jordan",
            Command::Report { .. } => "report",
        }
    }

    fn k_max(&self) -> Option<u32> {
        match self {
            Command::Chain { kmax, .. }
            | Command::Laws { kmax, .. }
            | Command::Jordan { kmax, .. }
            | Command::Report { kmax, .. } => Some(*kmax),
            _ => None,
        }
    }
}

/// Loads a file if `arg` names one, otherwise a bundled algebra.
pub fn load_algebra(arg: &str) -> Result<AlgebraSpec> {
    if Path::new(arg).exists() {
        return parse_algebra(arg);
    }
    corpus::by_name(arg).ok_or_else(|| {
        Error::Parse(format!("{arg:?} is neither a readable file nor a bundled algebra ({})", corpus::NAMES.join(", ")))
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationSummary {
    pub even: bool,
    pub skew_symmetric: bool,
    pub jacobi: bool,
    pub multiplicative: bool,
    /// Every failed identity, multiplicativity included.
    pub failures: Vec<Witness>,
}

impl ValidationSummary {
    pub fn axioms_hold(&self) -> bool {
        self.even && self.skew_symmetric && self.jacobi
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimensionRow {
    pub kind: SpaceKind,
    pub k: u32,
    pub degree: u8,
    pub dim: usize,
    /// Dimension of the span of first components.
    pub first_component_dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ListingEntry {
    pub label: String,
    pub rows: Vec<Vec<String>>,
}

/// A titled list of matrices or vectors printed by a command.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Listing {
    pub title: String,
    pub entries: Vec<ListingEntry>,
}

impl Listing {
    fn new(title: impl Into<String>) -> Self {
        Listing { title: title.into(), entries: Vec::new() }
    }

    fn matrix(&mut self, label: impl Into<String>, m: &Matrix) {
        self.entries.push(ListingEntry { label: label.into(), rows: matrix_strings(m) });
    }

    fn vector(&mut self, label: impl Into<String>, v: &[crate::linalg::Scalar]) {
        self.entries.push(ListingEntry { label: label.into(), rows: vec![v.iter().map(format_scalar).collect()] });
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RunReport {
    pub command: String,
    pub algebra: String,
    pub dim: usize,
    pub mode: Mode,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k_max: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub validation: Option<ValidationSummary>,
    pub dimensions: Vec<DimensionRow>,
    pub listings: Vec<Listing>,
    pub sections: Vec<CheckReport>,
}

impl RunReport {
    pub fn passed(&self) -> bool {
        self.sections.iter().all(CheckReport::passed)
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    pub fn checks(&self) -> impl Iterator<Item = &Check> {
        self.sections.iter().flat_map(|s| &s.checks)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

fn summarize(spec: &AlgebraSpec) -> (ValidationSummary, CheckReport) {
    let v = spec.validate();
    let failures = v
        .failures
        .iter()
        .map(|f| Witness::new(f.identity.clone()).with_indices(f.indices.clone()).with_residual(&f.residual))
        .collect();
    let summary = ValidationSummary {
        even: v.even_ok,
        skew_symmetric: v.skew_ok,
        jacobi: v.jacobi_ok,
        multiplicative: v.multiplicative_ok,
        failures,
    };
    (summary, axiom_checks(spec.name(), &v))
}

fn dimension_row(space: &MapSpace) -> DimensionRow {
    DimensionRow {
        kind: space.kind(),
        k: space.k(),
        degree: space.degree().bit(),
        dim: space.dim(),
        first_component_dim: space.project_component(0).expect("arity >= 1").dim(),
    }
}

fn component_names(arity: usize) -> &'static [&'static str] {
    &["D", "D'", "D''"][..arity]
}

/// Runs one command. `Err` means the input could not be used (exit status 2);
/// failed checks are recorded in the report instead.
pub fn run(command: &Command) -> Result<RunReport> {
    let target = command.target();
    let spec = load_algebra(&target.algebra)?;
    let mode = if target.lax { Mode::Lax } else { Mode::Strict };
    let mut report = RunReport {
        command: command.name().into(),
        algebra: spec.name().into(),
        dim: spec.dim(),
        mode,
        k_max: command.k_max(),
        validation: None,
        dimensions: Vec::new(),
        listings: Vec::new(),
        sections: Vec::new(),
    };
    let needs_valid = !matches!(command, Command::Validate(_));
    let (summary, axioms) = summarize(&spec);
    if needs_valid && !summary.axioms_hold() {
        report.validation = Some(summary);
        report.sections.push(axioms);
        return Ok(report);
    }
    match command {
        Command::Validate(_) => {
            report.validation = Some(summary);
            report.sections.push(axioms);
        }
        Command::Center(_) => center_listings(&spec, &mut report),
        Command::Solve { kind, k, degree, .. } => {
            let space = solve_space(&spec, *kind, *k, Parity::from_bit(*degree)?, mode)?;
            report.dimensions.push(dimension_row(&space));
            let mut listing = Listing::new(format!("basis of {}", space.label()));
            let names = component_names(kind.arity());
            for (b, tuple) in space.tuples().iter().enumerate() {
                for (name, m) in names.iter().zip(tuple) {
                    listing.matrix(format!("#{b} {name}"), m.matrix());
                }
            }
            report.listings.push(listing);
        }
        Command::Chain { kmax, .. } => {
            let mut cache = SpaceCache::new(&spec, mode);
            report.sections.push(check_inclusion_chain(&mut cache, *kmax));
        }
        Command::Laws { kmax, .. } => {
            let mut cache = SpaceCache::new(&spec, mode);
            report.sections.push(check_bracket_laws(&mut cache, *kmax));
        }
        Command::Jordan { kmax, .. } => {
            let mut cache = SpaceCache::new(&spec, mode);
            report.sections.push(check_qc_structure(&mut cache, *kmax).report);
        }
        Command::Decompose { k, triple, .. } => decompose(&spec, *k, triple, mode, &mut report)?,
        Command::Extend(_) => {
            extend(&spec, &mut report)?;
        }
        Command::Embed { k, .. } => {
            let ext = build_extended(&spec)?;
            report.sections.push(verify_phi_properties(&ext, *k, mode));
            report.sections.push(verify_embedding_decomposition(&ext, *k, mode));
        }
        Command::Report { kmax, .. } => {
            report.validation = Some(summary);
            report.sections.push(axioms);
            center_listings(&spec, &mut report);
            let mut cache = SpaceCache::new(&spec, mode);
            for kind in SpaceKind::ALL {
                for k in 0..=*kmax {
                    for degree in Parity::BOTH {
                        report.dimensions.push(dimension_row(&cache.get(kind, k, degree)));
                    }
                }
            }
            report.sections.push(check_inclusion_chain(&mut cache, *kmax));
            report.sections.push(check_bracket_laws(&mut cache, *kmax));
            report.sections.push(check_generalized_split(&mut cache, *kmax));
            report.sections.push(check_qc_structure(&mut cache, *kmax).report);
            let ext = extend(&spec, &mut report)?;
            for k in 0..=*kmax {
                report.sections.push(verify_phi_properties(&ext, k, mode));
                report.sections.push(verify_embedding_decomposition(&ext, k, mode));
            }
        }
    }
    Ok(report)
}

fn center_listings(spec: &AlgebraSpec, report: &mut RunReport) {
    let mut center = Listing::new(format!("center (dim {})", spec.center().dim()));
    for (i, v) in spec.center().basis().iter().enumerate() {
        center.vector(format!("z{i}"), v);
    }
    let derived = spec.derived_subalgebra();
    let mut listing = Listing::new(format!("derived subalgebra [L, L] (dim {})", derived.dim()));
    for (i, v) in derived.basis().iter().enumerate() {
        listing.vector(format!("d{i}"), v);
    }
    report.listings.push(center);
    report.listings.push(listing);
}

fn decompose(spec: &AlgebraSpec, k: u32, path: &Path, mode: Mode, report: &mut RunReport) -> Result<()> {
    let text = std::fs::read_to_string(path)?;
    let (degree, mats) = TripleFile::from_json(&text)?.matrices(spec.dim())?;
    let maps = mats
        .into_iter()
        .map(|m| GradedMap::new(spec.degrees(), m, degree))
        .collect::<Result<Vec<_>>>()?;
    let mut section = CheckReport::new(format!("split of a generalized derivation (k = {k}, degree {degree})"));
    match decompose_generalized(spec, k, degree, mode, [&maps[0], &maps[1], &maps[2]]) {
        Ok(split) => {
            let mut listing = Listing::new("D = (D + D')/2 + (D - D')/2");
            listing.matrix("quasiderivation (D + D')/2", split.quasiderivation.0.matrix());
            listing.matrix("its partner D''", split.quasiderivation.1.matrix());
            listing.matrix("quasicentroid (D - D')/2", split.quasicentroid.matrix());
            report.listings.push(listing);
            section.push(Check::pass("triple splits into QDer + QC", "both parts verified by residual"));
        }
        Err(Error::NotMember { space, detail }) => {
            section.push(Check::fail(
                "triple splits into QDer + QC",
                format!("input is not in {space}"),
                Witness::new(detail).with_map(&maps[0]),
            ));
        }
        Err(e) => return Err(e),
    }
    report.sections.push(section);
    Ok(())
}

fn extend(spec: &AlgebraSpec, report: &mut RunReport) -> Result<crate::extension::ExtendedAlgebra> {
    let ext = build_extended(spec)?;
    let mut listing = Listing::new(format!(
        "extension {} (dim {}), complement U of [L, L] (dim {})",
        ext.spec().name(),
        ext.spec().dim(),
        ext.u_complement().dim()
    ));
    for (i, v) in ext.u_complement().basis().iter().enumerate() {
        listing.vector(format!("u{i}"), v);
    }
    listing.matrix("projection onto [L, L] along U", ext.projection());
    report.listings.push(listing);
    report.sections.push(check_extension(&ext));
    Ok(ext)
}

impl fmt::Display for RunReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} (dim {}, {} mode", self.command, self.algebra, self.dim, self.mode)?;
        if let Some(k) = self.k_max {
            write!(f, ", k <= {k}")?;
        }
        writeln!(f, ")")?;
        if let Some(v) = &self.validation {
            if v.axioms_hold() {
                write!(f, "all axioms hold")?;
            } else {
                write!(f, "axioms FAIL")?;
            }
            writeln!(f, ", multiplicative: {}", if v.multiplicative { "yes" } else { "no" })?;
            for w in &v.failures {
                let residual = w.residual.as_ref().map(|r| r.join(", ")).unwrap_or_default();
                writeln!(f, "  {} fails at basis indices {:?}: residual [{residual}]", w.description, w.indices)?;
            }
        }
        if !self.dimensions.is_empty() {
            writeln!(f, "dimensions (space, k, degree: dim / first components):")?;
            for d in &self.dimensions {
                writeln!(f, "  {:<4} k={} deg {}: {} / {}", d.kind.name(), d.k, d.degree, d.dim, d.first_component_dim)?;
            }
        }
        for l in &self.listings {
            writeln!(f, "{}:", l.title)?;
            if l.entries.is_empty() {
                writeln!(f, "  (none)")?;
            }
            for e in &l.entries {
                let rows: Vec<String> = e.rows.iter().map(|r| format!("[{}]", r.join(", "))).collect();
                let body = if rows.len() == 1 { rows[0].clone() } else { format!("[{}]", rows.join(", ")) };
                writeln!(f, "  {} = {body}", e.label)?;
            }
        }
        for s in &self.sections {
            write!(f, "{s}")?;
        }
        let checks: Vec<&Check> = self.checks().collect();
        if !checks.is_empty() {
            let skipped = checks.iter().filter(|c| c.status == crate::report::Status::Skipped).count();
            let failed = checks.iter().filter(|c| c.status == crate::report::Status::Fail).count();
            writeln!(
                f,
                "{}: {} checks, {failed} failed, {skipped} skipped (hypotheses)",
                if failed == 0 { "PASS" } else { "FAIL" },
                checks.len()
            )?;
        }
        Ok(())
    }
}

/// Parses `args`, runs, prints, and returns the process exit status.
pub fn execute<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match run(&cli.command) {
        Ok(report) => {
            use std::io::Write;
            let mut out = std::io::stdout().lock();
            // a closed pipe (e.g. `| head`) is not an error worth reporting
            let _ = if cli.command.target().json {
                writeln!(out, "{}", report.to_json())
            } else {
                write!(out, "{report}")
            };
            report.exit_code()
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> RunReport {
        let cli = Cli::try_parse_from(std::iter::once("homlie").chain(args.iter().copied())).unwrap();
        run(&cli.command).unwrap()
    }

    #[test]
    fn validate_example() {
        let r = run_args(&["validate", "ex2_5"]);
        let v = r.validation.as_ref().unwrap();
        assert!(v.axioms_hold());
        assert!(!v.multiplicative);
        assert_eq!(r.exit_code(), 0);
        let text = r.to_string();
        assert!(text.contains("all axioms hold, multiplicative: no"), "{text}");
    }

    #[test]
    fn solve_prints_the_quasicentroid_basis() {
        let r = run_args(&["solve", "ex2_5", "--kind", "QC", "--k", "1", "--degree", "0"]);
        assert_eq!(r.dimensions[0].dim, 1);
        assert_eq!(r.listings[0].entries[0].rows, vec![vec!["1", "0", "0"], vec!["0", "2", "0"], vec!["0", "0", "2"]]);
    }

    #[test]
    fn usage_errors() {
        assert!(Cli::try_parse_from(["homlie", "solve", "ex2_5", "--kind", "Foo", "--k", "1"]).is_err());
        assert!(Cli::try_parse_from(["homlie", "solve", "ex2_5", "--kind", "QC", "--k", "1", "--degree", "2"]).is_err());
        assert!(Cli::try_parse_from(["homlie", "frobnicate", "ex2_5"]).is_err());
        let cli = Cli::try_parse_from(["homlie", "solve", "ex2_5", "--kind", "QC", "--k", "-1"]).unwrap();
        assert!(matches!(run(&cli.command), Err(Error::NegativePower(-1))));
        let cli = Cli::try_parse_from(["homlie", "center", "no_such_algebra"]).unwrap();
        assert!(matches!(run(&cli.command), Err(Error::Parse(_))));
    }

    #[test]
    fn json_dimensions_match_text() {
        let r = run_args(&["report", "odd_heisenberg", "--kmax", "1"]);
        let json: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        let text = r.to_string();
        for d in json["dimensions"].as_array().unwrap() {
            let line = format!(
                "{:<4} k={} deg {}: {} / {}",
                d["kind"].as_str().unwrap(),
                d["k"],
                d["degree"],
                d["dim"],
                d["first_component_dim"]
            );
            assert!(text.contains(&line), "{line}");
        }
        assert_eq!(json["dimensions"].as_array().unwrap().len(), 6 * 2 * 2);
    }
}
