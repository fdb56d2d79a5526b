//! Machine-readable reports and their text rendering. Every text report is
//! rendered from the machine object alone, so a report read back from its
//! JSON renders identically.

use std::fmt::Write as _;

use multiarr::freeness::{Certificate, FreenessVerdict, Witness};
use multiarr::lattice::FiltrationViolation;
use multiarr::model::Multiarrangement;
use serde::{Deserialize, Serialize};

use crate::file::ArrangementFile;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub name: String,
    pub variables: Vec<String>,
    pub hyperplanes: usize,
    pub total_multiplicity: u64,
    pub rank: usize,
}

impl Summary {
    pub fn new(name: String, a: &Multiarrangement) -> Summary {
        Summary {
            name,
            variables: a.vars().to_vec(),
            hyperplanes: a.len(),
            total_multiplicity: a.total(),
            rank: a.essential_rank(),
        }
    }

    fn render(&self, out: &mut String) {
        let _ = writeln!(
            out,
            "{}: {} variables ({}), {} hyperplanes, |m| = {}, rank {}",
            self.name,
            self.variables.len(),
            self.variables.join(", "),
            self.hyperplanes,
            self.total_multiplicity,
            self.rank
        );
    }
}

pub fn flat_label(a: &Multiarrangement, hyperplanes: &[usize]) -> Vec<String> {
    hyperplanes.iter().map(|&i| a.describe_hyperplane(i)).collect()
}

fn braces(labels: &[String]) -> String {
    format!("{{{}}}", labels.join(", "))
}

fn tuple(values: &[u64]) -> String {
    let v: Vec<String> = values.iter().map(u64::to_string).collect();
    format!("({})", v.join(", "))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HyperplaneRow {
    pub index: usize,
    pub form: String,
    pub mult: u64,
}

pub fn hyperplane_rows(a: &Multiarrangement) -> Vec<HyperplaneRow> {
    (0..a.len())
        .map(|i| HyperplaneRow {
            index: i,
            form: a.describe_hyperplane(i),
            mult: a.multiplicity(i),
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlatRow {
    pub hyperplanes: Vec<String>,
    pub mass: u64,
    pub exponents: [u64; 2],
    pub contribution: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct B2Table {
    pub b1: u64,
    pub b2: u64,
    pub flats: Vec<FlatRow>,
}

impl B2Table {
    pub fn new(a: &Multiarrangement, report: &multiarr::freeness::BettiReport) -> B2Table {
        B2Table {
            b1: report.b1,
            b2: report.b2,
            flats: report
                .flats
                .iter()
                .map(|f| FlatRow {
                    hyperplanes: flat_label(a, &f.hyperplanes),
                    mass: f.mass,
                    exponents: [f.exponents.e1, f.exponents.e2],
                    contribution: f.contribution(),
                })
                .collect(),
        }
    }

    fn render(&self, out: &mut String) {
        let width = self.flats.iter().map(|f| braces(&f.hyperplanes).chars().count()).max().unwrap_or(4).max(4);
        let _ = writeln!(out, "codimension-2 flats:");
        let _ = writeln!(out, "  {:<width$}  {:>5}  {:>10}  {:>6}", "flat", "|m_X|", "exponents", "e1*e2");
        for f in &self.flats {
            let _ = writeln!(
                out,
                "  {:<width$}  {:>5}  {:>10}  {:>6}",
                braces(&f.hyperplanes),
                f.mass,
                tuple(&f.exponents),
                f.contribution
            );
        }
        let _ = writeln!(out, "b1 = {}, b2 = {}", self.b1, self.b2);
    }
}

/// Evidence behind a verdict, with hyperplanes given by their forms.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Evidence {
    LowRank,
    Restriction {
        hyperplane: String,
        heavy: bool,
        reduced_b2: u64,
        restriction_b2: u64,
    },
    HeavyFlag {
        flag: Vec<Vec<String>>,
        values: Vec<u64>,
        b2: u64,
        rhs: u64,
        literal_step0_heavy: bool,
    },
    Supersolvable {
        levels: Vec<Vec<String>>,
    },
    HeavyB2 {
        hyperplane: String,
        reduced_b2: u64,
        restriction_b2: u64,
    },
    RestrictionNotFree {
        hyperplane: String,
        reason: String,
    },
    NotSupersolvable {
        flag: Vec<Vec<String>>,
        violation: Option<String>,
    },
}

fn flag_data(a: &Multiarrangement, d: &multiarr::freeness::FlagData) -> Evidence {
    Evidence::HeavyFlag {
        flag: d.flag.iter().map(|x| flat_label(a, x)).collect(),
        values: d.values.clone(),
        b2: d.b2,
        rhs: d.rhs,
        literal_step0_heavy: d.literal_step0_heavy,
    }
}

fn certificate(a: &Multiarrangement, c: &Certificate) -> Evidence {
    match c {
        Certificate::HeavyB2 {
            label,
            reduced_b2,
            restriction_b2,
            ..
        } => Evidence::HeavyB2 {
            hyperplane: label.clone(),
            reduced_b2: *reduced_b2,
            restriction_b2: *restriction_b2,
        },
        // the inner certificate refers to hyperplanes of the restriction,
        // so only its text is kept
        Certificate::RestrictionNotFree { label, inner, .. } => Evidence::RestrictionNotFree {
            hyperplane: label.clone(),
            reason: inner.to_string(),
        },
        Certificate::HeavyFlag(d) => flag_data(a, d),
        Certificate::NotSupersolvable {
            flag,
            candidate_violation,
        } => Evidence::NotSupersolvable {
            flag: flag.iter().map(|x| flat_label(a, x)).collect(),
            violation: candidate_violation.as_ref().map(|v| violation_text(a, v)),
        },
    }
}

pub fn violation_text(a: &Multiarrangement, v: &FiltrationViolation) -> String {
    match v {
        FiltrationViolation::Shape { level, reason } => format!("level {level}: {reason}"),
        FiltrationViolation::Pair { level, first, second } => format!(
            "level {level}: {} and {} meet outside every hyperplane of level {}",
            a.describe_hyperplane(*first),
            a.describe_hyperplane(*second),
            level - 1
        ),
    }
}

impl Evidence {
    fn render(&self, out: &mut String, indent: &str) {
        match self {
            Evidence::LowRank => {
                let _ = writeln!(out, "{indent}rank at most 2: every such multiarrangement is free");
            }
            Evidence::Restriction {
                hyperplane,
                heavy,
                reduced_b2,
                restriction_b2,
            } => {
                let kind = if *heavy { "heavy" } else { "locally heavy" };
                let _ = writeln!(
                    out,
                    "{indent}free restriction onto {kind} hyperplane {hyperplane}, b2^H = {reduced_b2} = {restriction_b2}"
                );
            }
            Evidence::HeavyFlag {
                flag,
                values,
                b2,
                rhs,
                literal_step0_heavy,
            } => {
                let chain: Vec<String> = flag.iter().map(|x| braces(x)).collect();
                let _ = writeln!(out, "{indent}heavy flag {}", chain.join(" > "));
                let relation = if b2 == rhs { "=" } else { "vs" };
                let _ = writeln!(out, "{indent}values {}, flag sum {rhs} {relation} b2 = {b2}", tuple(values));
                if !literal_step0_heavy {
                    let _ = writeln!(
                        out,
                        "{indent}note: the first flag element is not heavy in the arrangement itself; \
                         heaviness is enforced from the second step on"
                    );
                }
            }
            Evidence::Supersolvable { levels } => {
                let _ = writeln!(out, "{indent}supersolvable filtration:");
                for (i, level) in levels.iter().enumerate() {
                    let _ = writeln!(out, "{indent}  level {}: {}", i + 1, braces(level));
                }
            }
            Evidence::HeavyB2 {
                hyperplane,
                reduced_b2,
                restriction_b2,
            } => {
                let _ = writeln!(
                    out,
                    "{indent}heavy hyperplane {hyperplane}: b2^H = {reduced_b2}, restriction b2 = {restriction_b2}"
                );
            }
            Evidence::RestrictionNotFree { hyperplane, reason } => {
                let _ = writeln!(out, "{indent}restriction onto heavy hyperplane {hyperplane} is not free: {reason}");
            }
            Evidence::NotSupersolvable { flag, violation } => {
                if !flag.is_empty() {
                    let chain: Vec<String> = flag.iter().map(|x| braces(x)).collect();
                    let _ = writeln!(out, "{indent}heavy flag {}", chain.join(" > "));
                }
                if let Some(v) = violation {
                    let _ = writeln!(out, "{indent}induced filtration fails: {v}");
                }
                let _ = writeln!(out, "{indent}no supersolvable filtration of the underlying arrangement exists");
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Free,
    NotFree,
    Undecided,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictReport {
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exponents: Option<Vec<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub evidence: Option<Evidence>,
    pub text: String,
}

impl VerdictReport {
    pub fn new(a: &Multiarrangement, v: &FreenessVerdict) -> VerdictReport {
        let (status, evidence) = match v {
            FreenessVerdict::Free { witness, .. } => (
                Status::Free,
                Some(match witness {
                    Witness::LowRank => Evidence::LowRank,
                    Witness::Restriction {
                        label,
                        heavy,
                        reduced_b2,
                        restriction_b2,
                        ..
                    } => Evidence::Restriction {
                        hyperplane: label.clone(),
                        heavy: *heavy,
                        reduced_b2: *reduced_b2,
                        restriction_b2: *restriction_b2,
                    },
                    Witness::HeavyFlag(d) => flag_data(a, d),
                    Witness::Supersolvable { levels } => Evidence::Supersolvable {
                        levels: levels.iter().map(|x| flat_label(a, x)).collect(),
                    },
                }),
            ),
            FreenessVerdict::NonFree(c) => (Status::NotFree, Some(certificate(a, c))),
            FreenessVerdict::Unknown { .. } => (Status::Undecided, None),
        };
        VerdictReport {
            status,
            exponents: v.exponents().map(<[u64]>::to_vec),
            evidence,
            text: v.to_string(),
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self.status {
            Status::Free => 0,
            Status::NotFree => 1,
            Status::Undecided => 2,
        }
    }

    fn render(&self, out: &mut String, indent: &str) {
        let _ = writeln!(out, "{}", self.text);
        if let Some(e) = &self.evidence {
            e.render(out, indent);
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Attempt {
    pub decider: String,
    pub verdict: VerdictReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalyzeReport {
    pub summary: Summary,
    pub hyperplanes: Vec<HyperplaneRow>,
    pub heavy: Vec<String>,
    pub locally_heavy: Vec<String>,
    pub b2: B2Table,
    pub attempts: Vec<Attempt>,
    pub verdict: VerdictReport,
}

fn list_or_none(items: &[String]) -> String {
    if items.is_empty() {
        "none".into()
    } else {
        items.join(", ")
    }
}

impl AnalyzeReport {
    pub fn render(&self) -> String {
        let mut out = String::new();
        self.summary.render(&mut out);
        let width = self.hyperplanes.iter().map(|h| h.form.chars().count()).max().unwrap_or(0);
        let iw = self.hyperplanes.len().saturating_sub(1).to_string().len() + 2;
        let _ = writeln!(out, "hyperplanes:");
        for h in &self.hyperplanes {
            let tag = format!("[{}]", h.index);
            let _ = writeln!(out, "  {tag:<iw$} {:<width$}  m = {}", h.form, h.mult);
        }
        let _ = writeln!(out, "heavy: {}", list_or_none(&self.heavy));
        let _ = writeln!(out, "locally heavy: {}", list_or_none(&self.locally_heavy));
        self.b2.render(&mut out);
        let _ = writeln!(out, "deciders:");
        for a in &self.attempts {
            let _ = writeln!(out, "  {}: {}", a.decider, a.verdict.text);
        }
        let _ = write!(out, "verdict: ");
        self.verdict.render(&mut out, "  ");
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HyperplaneB2 {
    pub hyperplane: String,
    pub mult: u64,
    pub reduced_b2: u64,
    pub away_b2: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct B2Report {
    pub summary: Summary,
    pub b2: B2Table,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hyperplane: Option<HyperplaneB2>,
}

impl B2Report {
    pub fn render(&self) -> String {
        let mut out = String::new();
        self.summary.render(&mut out);
        self.b2.render(&mut out);
        if let Some(h) = &self.hyperplane {
            let _ = writeln!(
                out,
                "at {} (m = {}): b2^H = {}, b2 away from H = {}",
                h.hyperplane, h.mult, h.reduced_b2, h.away_b2
            );
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RestrictReport {
    pub summary: Summary,
    pub mode: String,
    pub hyperplane: String,
    pub fibers: Vec<Vec<String>>,
    pub restriction: ArrangementFile,
    pub multiplicities: Vec<u64>,
    pub total: u64,
    pub b2: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exponents: Option<Vec<u64>>,
}

impl RestrictReport {
    pub fn render(&self) -> String {
        let mut out = String::new();
        self.summary.render(&mut out);
        let _ = writeln!(out, "{} restriction onto {}:", self.mode, self.hyperplane);
        let _ = writeln!(out, "  {} variables ({})", self.restriction.variables.len(), self.restriction.variables.join(", "));
        let entries = self.restriction.hyperplanes.as_deref().unwrap_or_default();
        for ((fiber, entry), m) in self.fibers.iter().zip(entries).zip(&self.multiplicities) {
            let _ = writeln!(out, "  [{}] m = {m} from {}", entry.coeffs.join(", "), braces(fiber));
        }
        let _ = writeln!(out, "|m^H| = {}, b2 = {}", self.total, self.b2);
        if let Some(e) = &self.exponents {
            let _ = writeln!(out, "exponents {}", tuple(e));
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainReport {
    pub summary: Summary,
    pub hyperplane: String,
    pub heavy: bool,
    pub reduced_b2: u64,
    pub away_b2: u64,
    pub ziegler_b2: u64,
    pub euler_b2: u64,
}

impl ChainReport {
    pub fn render(&self) -> String {
        let mut out = String::new();
        self.summary.render(&mut out);
        let _ = writeln!(out, "chain at {}{}:", self.hyperplane, if self.heavy { " (heavy)" } else { "" });
        let _ = writeln!(
            out,
            "  {} ≥ {} ≥ {} ≥ {}",
            self.reduced_b2, self.away_b2, self.ziegler_b2, self.euler_b2
        );
        let _ = writeln!(
            out,
            "  b2^H = {}, away from H = {}, Ziegler restriction = {}, Euler restriction = {}",
            self.reduced_b2, self.away_b2, self.ziegler_b2, self.euler_b2
        );
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlagRow {
    pub flats: Vec<Vec<String>>,
    pub values: Vec<u64>,
    pub rhs: u64,
    pub heavy: bool,
    pub literal_step0_heavy: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlagsReport {
    pub summary: Summary,
    pub heavy_only: bool,
    /// First flag step at which heaviness is required.
    pub heavy_from: usize,
    pub b2: u64,
    pub flags: Vec<FlagRow>,
}

impl FlagsReport {
    pub fn render(&self) -> String {
        let mut out = String::new();
        self.summary.render(&mut out);
        let kind = if self.heavy_only { "heavy maximal flags" } else { "maximal flags" };
        let _ = writeln!(out, "{} {kind}, b2 = {}:", self.flags.len(), self.b2);
        for f in &self.flags {
            let chain: Vec<String> = f.flats.iter().map(|x| braces(x)).collect();
            let mut tags = Vec::new();
            if f.heavy {
                tags.push("heavy");
            }
            if f.heavy && !f.literal_step0_heavy {
                tags.push("first step light");
            }
            if f.rhs == self.b2 {
                tags.push("sum = b2");
            }
            let tags = if tags.is_empty() { String::new() } else { format!("  [{}]", tags.join(", ")) };
            let _ = writeln!(out, "  {}  values {} sum {}{tags}", chain.join(" > "), tuple(&f.values), f.rhs);
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SupersolvableReport {
    pub summary: Summary,
    pub supersolvable: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub levels: Option<Vec<Vec<String>>>,
    /// Exponents of the underlying simple arrangement.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub simple_exponents: Option<Vec<u64>>,
    /// Freeness of the multiarrangement along the filtration.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub multi_verdict: Option<VerdictReport>,
}

impl SupersolvableReport {
    pub fn render(&self) -> String {
        let mut out = String::new();
        self.summary.render(&mut out);
        if !self.supersolvable {
            let _ = writeln!(out, "the underlying arrangement is not supersolvable");
            return out;
        }
        let _ = writeln!(out, "supersolvable filtration:");
        for (i, level) in self.levels.iter().flatten().enumerate() {
            let _ = writeln!(out, "  level {}: {}", i + 1, braces(level));
        }
        if let Some(e) = &self.simple_exponents {
            let _ = writeln!(out, "simple exponents {}", tuple(e));
        }
        if let Some(v) = &self.multi_verdict {
            let _ = write!(out, "multiarrangement: ");
            v.render(&mut out, "  ");
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum SaitoStatus {
    IsBasis { factor: String },
    InModuleNotBasis { quotient: String },
    NotInModule { hyperplane: String, derivation: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SaitoReport {
    pub summary: Summary,
    pub derivations: Vec<String>,
    pub degrees: Vec<u32>,
    pub result: SaitoStatus,
}

impl SaitoReport {
    pub fn exit_code(&self) -> i32 {
        match self.result {
            SaitoStatus::IsBasis { .. } => 0,
            _ => 1,
        }
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        self.summary.render(&mut out);
        for (i, (d, deg)) in self.derivations.iter().zip(&self.degrees).enumerate() {
            let _ = writeln!(out, "  θ{} = {d}  (degree {deg})", i + 1);
        }
        let _ = match &self.result {
            SaitoStatus::IsBasis { factor } => writeln!(out, "basis: det = {factor} Q(A, m)"),
            SaitoStatus::InModuleNotBasis { quotient } => {
                writeln!(out, "not a basis: det = f Q(A, m) with f = {quotient}")
            }
            SaitoStatus::NotInModule { hyperplane, derivation } => writeln!(
                out,
                "not a basis: θ{} does not preserve {hyperplane} to its multiplicity",
                derivation + 1
            ),
        };
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChiReport {
    pub summary: Summary,
    pub polynomial: String,
    /// Coefficients of `t^0, t^1, ...` as integer strings.
    pub coefficients: Vec<String>,
    /// `b_i` as integer strings, `i = 0, ..., ℓ`.
    pub betti: Vec<String>,
}

impl ChiReport {
    pub fn render(&self) -> String {
        let mut out = String::new();
        self.summary.render(&mut out);
        let _ = writeln!(out, "chi(t) = {}", self.polynomial);
        let b: Vec<String> = self.betti.iter().enumerate().map(|(i, v)| format!("b{i} = {v}")).collect();
        let _ = writeln!(out, "{}", b.join(", "));
        out
    }
}
