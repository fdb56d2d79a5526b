//! Bundled example arrangements.

use anyhow::{bail, Result};
use multiarr::model::default_var_names;

use crate::file::ArrangementFile;

pub struct Entry {
    pub name: &'static str,
    pub nvars: usize,
    pub polynomial: &'static str,
    pub summary: &'static str,
}

pub const CORPUS: [Entry; 8] = [
    Entry {
        name: "ex-thm12-free",
        nvars: 3,
        polynomial: "x^5 y^2 z^16 (x-y)^3 (y-z)^2 (x-z)^4",
        summary: "heavy plane z, free with exponents (7, 9, 16)",
    },
    Entry {
        name: "ex-thm12-nonfree",
        nvars: 3,
        polynomial: "x^2 y^2 z^14 (x-y)^3 (y-z)^3 (x-z)^4",
        summary: "heavy plane z, b2^H = 51 against 49, not free",
    },
    Entry {
        name: "ex-thm14-4dim",
        nvars: 4,
        polynomial: "x y (x-y) (y-z) (x-z) (x+y+z) w (y-w) (y+w) prod_{k=-3}^{4}(z-kw)",
        summary: "17 hyperplanes, heavy flag sum 96 below b2 = 99, not free",
    },
    Entry {
        name: "ex-a3-m3",
        nvars: 3,
        polynomial: "x^3 y^3 z^3 (x-y)^3 (y-z)^3 (z-x)^3",
        summary: "braid arrangement with constant multiplicity 3, undecided",
    },
    Entry {
        name: "ex-sec5-nonss",
        nvars: 3,
        polynomial: "x y^2 z^7 (x+y) (y-z)^2 (z-x)",
        summary: "heavy flag over a non-supersolvable arrangement, not free",
    },
    Entry {
        name: "ex-sec5-B",
        nvars: 4,
        polynomial: "x y w (x-z) (y-z) (y-w) prod_{k=-2}^{2}(z-kw)",
        summary: "11 hyperplanes, heavy flag sum equal to b2 = 41, free",
    },
    Entry {
        name: "boolean-3",
        nvars: 3,
        polynomial: "x y z",
        summary: "coordinate hyperplanes, free with exponents (1, 1, 1)",
    },
    Entry {
        name: "braid-a3",
        nvars: 3,
        polynomial: "x y z (x-y) (y-z) (z-x)",
        summary: "braid arrangement, supersolvable, free with exponents (1, 2, 3)",
    },
];

pub fn names() -> Vec<&'static str> {
    CORPUS.iter().map(|e| e.name).collect()
}

/// The canonical file for a bundled example, with product ranges expanded.
pub fn load(name: &str) -> Result<ArrangementFile> {
    let Some(entry) = CORPUS.iter().find(|e| e.name == name) else {
        bail!("unknown example `{name}`; valid names: {}", names().join(", "));
    };
    let source = ArrangementFile {
        name: Some(entry.name.into()),
        variables: default_var_names(entry.nvars),
        hyperplanes: None,
        defining_polynomial: Some(entry.polynomial.into()),
    };
    let a = source.to_arrangement()?;
    Ok(ArrangementFile::from_arrangement(&a, source.name))
}
