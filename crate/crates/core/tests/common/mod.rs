#![allow(dead_code)]

use multiarr::lattice::Flag;
use multiarr::model::{default_var_names, parse_defining_polynomial, parse_linear_form, LinearForm, Multiarrangement};

pub fn parse(text: &str, nvars: usize) -> Multiarrangement {
    parse_defining_polynomial(text, &default_var_names(nvars)).unwrap()
}

pub fn example1() -> Multiarrangement {
    parse("x^5 y^2 z^16 (x-y)^3 (y-z)^2 (x-z)^4", 3)
}

pub fn example2() -> Multiarrangement {
    parse("x^2 y^2 z^14 (x-y)^3 (y-z)^3 (x-z)^4", 3)
}

pub fn a3(m: u64) -> Multiarrangement {
    let text = format!("x^{m} y^{m} z^{m} (x-y)^{m} (y-z)^{m} (z-x)^{m}");
    parse(&text, 3)
}

fn pencil(lo: i64, hi: i64) -> String {
    (lo..=hi)
        .map(|k| match k {
            0 => "z".to_string(),
            k if k < 0 => format!("(z+{}w)", -k),
            k => format!("(z-{k}w)"),
        })
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn four_dim() -> Multiarrangement {
    let text = format!("x y (x-y) (y-z) (x-z) (x+y+z) w (y-w) (y+w) {}", pencil(-3, 4));
    parse(&text, 4)
}

pub fn heavy_non_supersolvable() -> Multiarrangement {
    parse("x y^2 z^7 (x+y) (y-z)^2 (z-x)", 3)
}

pub fn arrangement_b() -> Multiarrangement {
    let text = format!("x y w (x-z) (y-z) (y-w) {}", pencil(-2, 2));
    parse(&text, 4)
}

pub fn boolean(n: usize) -> Multiarrangement {
    let rows: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
    let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
    Multiarrangement::simple_from_ints(n, &refs).unwrap()
}

pub fn braid() -> Multiarrangement {
    a3(1)
}

/// Index of the hyperplane with the given defining form.
pub fn index(a: &Multiarrangement, form: &str) -> usize {
    let coeffs = parse_linear_form(form, a.vars()).unwrap();
    a.index_of(&LinearForm::new(coeffs).unwrap()).unwrap()
}

/// Flag cut out by the listed hyperplanes.
pub fn flag(a: &Multiarrangement, forms: &[&str]) -> Flag {
    let seq: Vec<usize> = forms.iter().map(|f| index(a, f)).collect();
    Flag::from_hyperplanes(a, &seq).unwrap()
}

/// Every simple arrangement used across the tests.
pub fn simple_fixtures() -> Vec<(&'static str, Multiarrangement)> {
    vec![
        ("boolean-2", boolean(2)),
        ("boolean-3", boolean(3)),
        ("boolean-4", boolean(4)),
        ("braid", braid()),
        ("four-dim", four_dim()),
        ("arrangement-b", arrangement_b()),
        ("heavy-non-ss-simple", heavy_non_supersolvable().simple()),
        ("example1-simple", example1().simple()),
    ]
}

pub mod gen {
    use multiarr::kernel::{rat, Matrix};
    use multiarr::model::Multiarrangement;
    use proptest::collection::vec;
    use proptest::prelude::*;
    use proptest::sample::subsequence;

    pub const LINES: [[i64; 2]; 10] = [
        [1, 0],
        [0, 1],
        [1, 1],
        [1, -1],
        [1, 2],
        [2, 1],
        [1, -2],
        [2, -1],
        [1, 3],
        [3, -1],
    ];

    pub const PLANES: [[i64; 3]; 14] = [
        [1, 0, 0],
        [0, 1, 0],
        [0, 0, 1],
        [1, 1, 0],
        [1, -1, 0],
        [0, 1, 1],
        [0, 1, -1],
        [1, 0, 1],
        [1, 0, -1],
        [1, 1, 1],
        [1, -1, 1],
        [1, 2, 0],
        [2, 0, 1],
        [1, 1, -2],
    ];

    pub const SPACES: [[i64; 4]; 10] = [
        [1, 0, 0, 0],
        [0, 1, 0, 0],
        [0, 0, 1, 0],
        [0, 0, 0, 1],
        [1, -1, 0, 0],
        [0, 1, -1, 0],
        [0, 0, 1, -1],
        [1, 0, 0, -1],
        [1, 1, 1, 0],
        [0, 1, 0, 1],
    ];

    fn build<const N: usize>(forms: &[[i64; N]], mult: &[u64]) -> Multiarrangement {
        let refs: Vec<&[i64]> = forms.iter().map(|f| f.as_slice()).collect();
        Multiarrangement::from_ints(N, &refs, &mult[..forms.len()]).unwrap()
    }

    /// 2 to 6 distinct lines in the plane, multiplicities up to `max_m`.
    pub fn rank2(max_lines: usize, max_m: u64) -> impl Strategy<Value = Multiarrangement> {
        (subsequence(LINES.to_vec(), 2..=max_lines), vec(1..=max_m, max_lines))
            .prop_map(|(lines, m)| build(&lines, &m))
    }

    /// Essential arrangements of 3 to `max_planes` planes in 3-space.
    pub fn rank3(max_planes: usize, max_m: u64) -> impl Strategy<Value = Multiarrangement> {
        (subsequence(PLANES.to_vec(), 3..=max_planes), vec(1..=max_m, max_planes))
            .prop_map(|(planes, m)| build(&planes, &m))
            .prop_filter("essential", |a| a.is_essential())
    }

    /// Essential arrangements in 4-space.
    pub fn rank4(max_planes: usize, max_m: u64) -> impl Strategy<Value = Multiarrangement> {
        (subsequence(SPACES.to_vec(), 4..=max_planes), vec(1..=max_m, max_planes))
            .prop_map(|(planes, m)| build(&planes, &m))
            .prop_filter("essential", |a| a.is_essential())
    }

    /// Invertible integer matrices with small entries.
    pub fn invertible(n: usize) -> impl Strategy<Value = Matrix> {
        vec(-2i64..=2, n * n)
            .prop_map(move |e| {
                let rows = e.chunks(n).map(|r| r.iter().map(|&v| rat(v)).collect()).collect();
                Matrix::from_rows(n, rows)
            })
            .prop_filter("invertible", |m| m.rank() == m.rows())
    }
}
