use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use multiarr::exec::Execution;
use multiarr::freeness::{
    analyze_with, away_b2, b2, b2_with, inequality_chain, reduced_b2, saito_verify, supersolvable_multi_free,
    SaitoOutcome,
};
use multiarr::lattice::{characteristic_polynomial_simple, flag_enumerate, is_supersolvable};
use multiarr::model::{parse_linear_form, parse_polynomial, LinearForm, Multiarrangement};
use multiarr::rank2::{low_rank_exponents, Derivation};
use multiarr::restriction::{
    euler_restriction, euler_ziegler_restriction, is_heavy, iterated_restriction, multi_ziegler_restriction,
};
use serde::{Deserialize, Serialize};

use crate::file::ArrangementFile;
use crate::report::*;

/// A command result: a machine object with a text rendering and an exit
/// code.
pub trait Report: Serialize {
    fn render(&self) -> String;
    fn exit_code(&self) -> i32 {
        0
    }
}

macro_rules! plain_report {
    ($($t:ty),*) => {$(
        impl Report for $t {
            fn render(&self) -> String {
                <$t>::render(self)
            }
        }
    )*};
}

plain_report!(B2Report, RestrictReport, ChainReport, FlagsReport, SupersolvableReport, ChiReport);

impl Report for AnalyzeReport {
    fn render(&self) -> String {
        AnalyzeReport::render(self)
    }
    fn exit_code(&self) -> i32 {
        self.verdict.exit_code()
    }
}

impl Report for SaitoReport {
    fn render(&self) -> String {
        SaitoReport::render(self)
    }
    fn exit_code(&self) -> i32 {
        SaitoReport::exit_code(self)
    }
}

pub struct Input {
    pub file: ArrangementFile,
    pub arrangement: Multiarrangement,
}

impl Input {
    pub fn read(path: &Path) -> Result<Input> {
        let file = ArrangementFile::read(path)?;
        let arrangement = file
            .to_arrangement()
            .with_context(|| format!("{}: invalid arrangement", path.display()))?;
        Ok(Input { file, arrangement })
    }

    fn summary(&self) -> Summary {
        Summary::new(self.file.label(&self.arrangement), &self.arrangement)
    }
}

/// A hyperplane given by its defining form (`x - y`) or by its 0-based
/// index in the file.
pub fn resolve_hyperplane(a: &Multiarrangement, query: &str) -> Result<usize> {
    if let Ok(coeffs) = parse_linear_form(query, a.vars()) {
        let form = LinearForm::new(coeffs).map_err(|e| anyhow!("{e}"))?;
        if let Some(i) = a.index_of(&form) {
            return Ok(i);
        }
    } else if let Ok(i) = query.trim().parse::<usize>() {
        if i < a.len() {
            return Ok(i);
        }
    }
    let known: Vec<String> = (0..a.len()).map(|i| format!("[{i}] {}", a.describe_hyperplane(i))).collect();
    bail!("no hyperplane `{query}`; the hyperplanes are {}", known.join(", "))
}

fn lib<T>(r: multiarr::error::Result<T>) -> Result<T> {
    r.map_err(|e| anyhow!("{e}"))
}

pub fn analyze(input: &Input, exec: Execution) -> Result<AnalyzeReport> {
    let a = &input.arrangement;
    let analysis = lib(analyze_with(a, exec))?;
    let labels = |idx: &[usize]| idx.iter().map(|&i| a.describe_hyperplane(i)).collect();
    Ok(AnalyzeReport {
        summary: input.summary(),
        hyperplanes: hyperplane_rows(a),
        heavy: labels(&analysis.heavy),
        locally_heavy: labels(&analysis.locally_heavy),
        b2: B2Table::new(a, &analysis.betti),
        attempts: analysis
            .attempts
            .iter()
            .map(|(d, v)| Attempt {
                decider: d.name().into(),
                verdict: VerdictReport::new(a, v),
            })
            .collect(),
        verdict: VerdictReport::new(a, &analysis.verdict),
    })
}

pub fn betti(input: &Input, hyperplane: Option<&str>, exec: Execution) -> Result<B2Report> {
    let a = &input.arrangement;
    let table = lib(b2_with(a, exec))?;
    let hyperplane = match hyperplane {
        None => None,
        Some(query) => {
            let h = resolve_hyperplane(a, query)?;
            Some(HyperplaneB2 {
                hyperplane: a.describe_hyperplane(h),
                mult: a.multiplicity(h),
                reduced_b2: lib(reduced_b2(a, h))?,
                away_b2: lib(away_b2(a, h))?,
            })
        }
    };
    Ok(B2Report {
        summary: input.summary(),
        b2: B2Table::new(a, &table),
        hyperplane,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Mode {
    Ziegler,
    Euler,
    EulerZiegler,
}

impl Mode {
    fn name(self) -> &'static str {
        match self {
            Mode::Ziegler => "ziegler",
            Mode::Euler => "euler",
            Mode::EulerZiegler => "euler-ziegler",
        }
    }
}

pub fn restrict(input: &Input, query: &str, mode: Mode) -> Result<RestrictReport> {
    let a = &input.arrangement;
    let h = resolve_hyperplane(a, query)?;
    if a.nvars() < 2 {
        bail!("restriction needs at least two variables");
    }
    let r = lib(match mode {
        Mode::Ziegler => multi_ziegler_restriction(a, h),
        Mode::Euler => euler_restriction(a, h),
        Mode::EulerZiegler => euler_ziegler_restriction(a, h),
    })?;
    let restricted = &r.arrangement;
    let exponents = if restricted.essential_rank() <= 2 {
        // pad with zeros to one exponent per variable
        let e = lib(low_rank_exponents(restricted))?;
        let n = restricted.nvars();
        let mut v = vec![0; n];
        v.extend([e.e1, e.e2]);
        v.sort_unstable();
        Some(v.split_off(v.len() - n))
    } else {
        None
    };
    Ok(RestrictReport {
        summary: input.summary(),
        mode: mode.name().into(),
        hyperplane: a.describe_hyperplane(h),
        fibers: r.fibers.iter().map(|f| flat_label(a, f)).collect(),
        restriction: ArrangementFile::from_arrangement(restricted, None),
        multiplicities: restricted.mult().to_vec(),
        total: restricted.total(),
        b2: lib(b2(restricted))?.b2,
        exponents,
    })
}

pub fn chain(input: &Input, query: &str) -> Result<ChainReport> {
    let a = &input.arrangement;
    let h = resolve_hyperplane(a, query)?;
    let c = lib(inequality_chain(a, h))?;
    Ok(ChainReport {
        summary: input.summary(),
        hyperplane: a.describe_hyperplane(h),
        heavy: lib(is_heavy(a, h))?,
        reduced_b2: c.reduced,
        away_b2: c.away,
        ziegler_b2: c.ziegler,
        euler_b2: c.euler,
    })
}

pub fn flags(input: &Input, heavy_only: bool) -> Result<FlagsReport> {
    let a = &input.arrangement;
    let heavy_from = usize::from(a.is_simple());
    let mut rows = Vec::new();
    for flag in lib(flag_enumerate(a))? {
        let steps = lib(iterated_restriction(a, &flag))?;
        let heavy = steps.iter().skip(heavy_from).all(|s| s.is_heavy());
        if heavy_only && !heavy {
            continue;
        }
        let values: Vec<u64> = steps.iter().map(|s| s.value).collect();
        rows.push(FlagRow {
            flats: flag.flats()[1..].iter().map(|x| flat_label(a, x.hyperplanes())).collect(),
            rhs: multiarr::freeness::pairwise_sum(&values),
            values,
            heavy,
            literal_step0_heavy: steps.first().is_some_and(|s| s.is_heavy()),
        });
    }
    Ok(FlagsReport {
        summary: input.summary(),
        heavy_only,
        heavy_from,
        b2: lib(b2(a))?.b2,
        flags: rows,
    })
}

pub fn supersolvable(input: &Input) -> Result<SupersolvableReport> {
    let a = &input.arrangement;
    let simple = a.simple();
    let Some(filtration) = is_supersolvable(&simple, None) else {
        return Ok(SupersolvableReport {
            summary: input.summary(),
            supersolvable: false,
            levels: None,
            simple_exponents: None,
            multi_verdict: None,
        });
    };
    let mut exponents: Vec<u64> = filtration
        .levels
        .iter()
        .scan(0, |prev, level| {
            let d = (level.len() - *prev) as u64;
            *prev = level.len();
            Some(d)
        })
        .collect();
    exponents.resize(a.nvars(), 0);
    exponents.sort_unstable();
    let multi_verdict = if a.is_simple() {
        None
    } else {
        Some(VerdictReport::new(a, &lib(supersolvable_multi_free(a, &filtration))?))
    };
    Ok(SupersolvableReport {
        summary: input.summary(),
        supersolvable: true,
        levels: Some(filtration.levels.iter().map(|l| flat_label(a, l)).collect()),
        simple_exponents: Some(exponents),
        multi_verdict,
    })
}

/// Derivations file: a list of coordinate lists, bare or under
/// `derivations`.
#[derive(Deserialize)]
#[serde(untagged)]
enum DerivationFile {
    Bare(Vec<Vec<String>>),
    Named { derivations: Vec<Vec<String>> },
}

pub fn saito(input: &Input, path: &Path) -> Result<SaitoReport> {
    let a = &input.arrangement;
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let parsed: DerivationFile =
        serde_json::from_str(&text).with_context(|| format!("{}: malformed derivations file", path.display()))?;
    let lists = match parsed {
        DerivationFile::Bare(l) | DerivationFile::Named { derivations: l } => l,
    };
    let mut ds = Vec::with_capacity(lists.len());
    for (i, coords) in lists.iter().enumerate() {
        let polys = coords
            .iter()
            .enumerate()
            .map(|(j, c)| parse_polynomial(c, a.vars()).map_err(|e| anyhow!("derivations[{i}][{j}]: {e}")))
            .collect::<Result<Vec<_>>>()?;
        ds.push(Derivation::new(polys).map_err(|e| anyhow!("derivations[{i}]: {e}"))?);
    }
    let result = match lib(saito_verify(a, &ds))? {
        SaitoOutcome::IsBasis(c) => SaitoStatus::IsBasis { factor: c.to_string() },
        SaitoOutcome::InModuleNotBasis(f) => SaitoStatus::InModuleNotBasis {
            quotient: f.display_with(a.vars()),
        },
        SaitoOutcome::NotInModule { hyperplane, derivation } => SaitoStatus::NotInModule {
            hyperplane: a.describe_hyperplane(hyperplane),
            derivation,
        },
    };
    Ok(SaitoReport {
        summary: input.summary(),
        derivations: ds.iter().map(|d| d.display_with(a.vars())).collect(),
        degrees: ds.iter().map(|d| d.degree).collect(),
        result,
    })
}

pub fn chi(input: &Input) -> Result<ChiReport> {
    let a = &input.arrangement;
    let chi = lib(characteristic_polynomial_simple(a))?;
    Ok(ChiReport {
        summary: input.summary(),
        polynomial: chi.to_string(),
        coefficients: chi.coeffs().iter().map(ToString::to_string).collect(),
        betti: (0..=a.nvars()).map(|i| chi.betti(i).to_string()).collect(),
    })
}

#[derive(Serialize)]
pub struct CorpusListing {
    pub name: &'static str,
    pub variables: usize,
    pub defining_polynomial: &'static str,
    pub summary: &'static str,
}

pub fn listing() -> Vec<CorpusListing> {
    crate::corpus::CORPUS
        .iter()
        .map(|e| CorpusListing {
            name: e.name,
            variables: e.nvars,
            defining_polynomial: e.polynomial,
            summary: e.summary,
        })
        .collect()
}
