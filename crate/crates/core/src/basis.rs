//! Product tables for three distinguished bases, with golden copies to
//! check the computed tables against.
//!
//! Every entry in these tables is an integer or half-integer combination,
//! so the comparisons are exact (`f64 ==`), not tolerance-based.

use crate::quantion::Quantion;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

const fn z(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BasisName {
    Tetrad,
    Quaternion,
    NullTetrad,
}

impl BasisName {
    pub fn as_str(&self) -> &'static str {
        match self {
            BasisName::Tetrad => "tetrad",
            BasisName::Quaternion => "quaternion",
            BasisName::NullTetrad => "null",
        }
    }
}

/// A 4x4 product table over a named basis.
pub struct BasisTable {
    pub name: BasisName,
    pub labels: [&'static str; 4],
    pub elements: [Quantion; 4],
    /// `entries[r][c]` is the product of row element `r` with column
    /// element `c`.
    pub entries: [[Quantion; 4]; 4],
}

/// One golden cell: the product is `(re + i im) * elements[idx]`.
#[derive(Clone, Copy)]
pub struct GoldenCell {
    pub re: f64,
    pub im: f64,
    pub idx: usize,
}

const fn g(re: f64, im: f64, idx: usize) -> GoldenCell {
    GoldenCell { re, im, idx }
}

/// Tetrad table: identical to the Pauli multiplication table.
/// Rows and columns ordered (Omega, e1, e2, e3).
pub const GOLDEN_TETRAD: [[GoldenCell; 4]; 4] = [
    [g(1., 0., 0), g(1., 0., 1), g(1., 0., 2), g(1., 0., 3)],
    [g(1., 0., 1), g(1., 0., 0), g(0., 1., 3), g(0., -1., 2)],
    [g(1., 0., 2), g(0., -1., 3), g(1., 0., 0), g(0., 1., 1)],
    [g(1., 0., 3), g(0., 1., 2), g(0., -1., 1), g(1., 0., 0)],
];

/// Quaternion table over (1, i, j, k): `ij = k`, cyclically, squares `-1`.
pub const GOLDEN_QUATERNION: [[GoldenCell; 4]; 4] = [
    [g(1., 0., 0), g(1., 0., 1), g(1., 0., 2), g(1., 0., 3)],
    [g(1., 0., 1), g(-1., 0., 0), g(1., 0., 3), g(-1., 0., 2)],
    [g(1., 0., 2), g(-1., 0., 3), g(-1., 0., 0), g(1., 0., 1)],
    [g(1., 0., 3), g(1., 0., 2), g(-1., 0., 1), g(-1., 0., 0)],
];

/// Null tetrad table, rows and columns ordered (l, m-bar, m, n). Half the
/// cells vanish: the null directions compose like a path algebra.
pub const GOLDEN_NULL: [[GoldenCell; 4]; 4] = [
    [g(1., 0., 0), g(0., 0., 0), g(1., 0., 2), g(0., 0., 0)],
    [g(1., 0., 1), g(0., 0., 0), g(1., 0., 3), g(0., 0., 0)],
    [g(0., 0., 0), g(1., 0., 0), g(0., 0., 0), g(1., 0., 2)],
    [g(0., 0., 0), g(1., 0., 1), g(0., 0., 0), g(1., 0., 3)],
];

pub fn golden_table(name: BasisName) -> &'static [[GoldenCell; 4]; 4] {
    match name {
        BasisName::Tetrad => &GOLDEN_TETRAD,
        BasisName::Quaternion => &GOLDEN_QUATERNION,
        BasisName::NullTetrad => &GOLDEN_NULL,
    }
}

/// The null tetrad `l = (Omega + e3)/2`, `n = (Omega - e3)/2`,
/// `m = (e1 + i e2)/2`, `m-bar = (e1 - i e2)/2`. All four are null
/// divisors (`M = 0`), and `l + n = Omega`.
pub struct NullTetrad {
    pub l: Quantion,
    pub n: Quantion,
    pub m: Quantion,
    pub m_bar: Quantion,
}

pub fn null_tetrad() -> NullTetrad {
    let i = z(0., 1.);
    NullTetrad {
        l: (Quantion::OMEGA + Quantion::E3) * 0.5,
        n: (Quantion::OMEGA - Quantion::E3) * 0.5,
        m: (Quantion::E1 + Quantion::E2 * i) * 0.5,
        m_bar: (Quantion::E1 - Quantion::E2 * i) * 0.5,
    }
}

/// Hamilton product of two quaternions given as `(h0, h1, h2, h3)`.
pub fn quaternion_mul(x: &[f64; 4], y: &[f64; 4]) -> [f64; 4] {
    [
        x[0] * y[0] - x[1] * y[1] - x[2] * y[2] - x[3] * y[3],
        x[0] * y[1] + x[1] * y[0] + x[2] * y[3] - x[3] * y[2],
        x[0] * y[2] - x[1] * y[3] + x[2] * y[0] + x[3] * y[1],
        x[0] * y[3] + x[1] * y[2] - x[2] * y[1] + x[3] * y[0],
    ]
}

/// Embeds a quaternion into the quantions:
/// `h0 Omega + h1 (-i e1) + h2 (-i e2) + h3 (-i e3)`.
///
/// The `-i` (rather than `+i`) is what makes this a homomorphism for the
/// right-handed table `ij = k`; with `+i` the image satisfies `ij = -k`.
pub fn quaternion_embed(h: &[f64; 4]) -> Quantion {
    let mi = z(0., -1.);
    Quantion::OMEGA * h[0]
        + Quantion::E1 * (mi * h[1])
        + Quantion::E2 * (mi * h[2])
        + Quantion::E3 * (mi * h[3])
}

/// Computes the product table for a basis. Tetrad and null entries come
/// from the beta product; quaternion entries come from the Hamilton product
/// pushed through the embedding.
pub fn basis_table(name: BasisName) -> BasisTable {
    match name {
        BasisName::Tetrad => {
            let elements = [Quantion::OMEGA, Quantion::E1, Quantion::E2, Quantion::E3];
            BasisTable {
                name,
                labels: ["\u{03a9}", "e1", "e2", "e3"],
                elements,
                entries: beta_entries(&elements),
            }
        }
        BasisName::NullTetrad => {
            let t = null_tetrad();
            let elements = [t.l, t.m_bar, t.m, t.n];
            BasisTable {
                name,
                labels: ["l", "m\u{0304}", "m", "n"],
                elements,
                entries: beta_entries(&elements),
            }
        }
        BasisName::Quaternion => {
            let units: [[f64; 4]; 4] = [
                [1., 0., 0., 0.],
                [0., 1., 0., 0.],
                [0., 0., 1., 0.],
                [0., 0., 0., 1.],
            ];
            let elements = [
                quaternion_embed(&units[0]),
                quaternion_embed(&units[1]),
                quaternion_embed(&units[2]),
                quaternion_embed(&units[3]),
            ];
            let mut entries = [[Quantion::ZERO; 4]; 4];
            for r in 0..4 {
                for c in 0..4 {
                    entries[r][c] = quaternion_embed(&quaternion_mul(&units[r], &units[c]));
                }
            }
            BasisTable {
                name,
                labels: ["1", "i", "j", "k"],
                entries,
                elements,
            }
        }
    }
}

fn beta_entries(elements: &[Quantion; 4]) -> [[Quantion; 4]; 4] {
    let mut entries = [[Quantion::ZERO; 4]; 4];
    for r in 0..4 {
        for c in 0..4 {
            entries[r][c] = elements[r].beta_mul(&elements[c]);
        }
    }
    entries
}

/// A cell whose computed value disagrees with the golden table.
#[derive(Debug, Clone)]
pub struct CellMismatch {
    pub row: &'static str,
    pub col: &'static str,
    pub computed: Quantion,
    pub expected: Quantion,
}

/// Exact comparison of a computed table against its golden copy.
pub fn diff_against_golden(table: &BasisTable) -> Vec<CellMismatch> {
    let golden = golden_table(table.name);
    let mut out = Vec::new();
    for (r, golden_row) in golden.iter().enumerate() {
        for (c, cell) in golden_row.iter().enumerate() {
            let expected = table.elements[cell.idx] * z(cell.re, cell.im);
            if table.entries[r][c] != expected {
                out.push(CellMismatch {
                    row: table.labels[r],
                    col: table.labels[c],
                    computed: table.entries[r][c],
                    expected,
                });
            }
        }
    }
    out
}

/// Human-readable name for a table entry: matches it exactly against
/// `coeff * element` for coefficients 0, +-1, +-i, falling back to the
/// component form for anything else.
pub fn cell_label(q: &Quantion, table: &BasisTable) -> String {
    if *q == Quantion::ZERO {
        return "0".to_string();
    }
    const COEFFS: [(Complex64, &str); 4] = [
        (z(1., 0.), ""),
        (z(-1., 0.), "-"),
        (z(0., 1.), "i\u{b7}"),
        (z(0., -1.), "-i\u{b7}"),
    ];
    for (k, label) in table.labels.iter().enumerate() {
        for (coeff, prefix) in COEFFS {
            if *q == table.elements[k] * coeff {
                // "i·1" would be silly for the quaternion unit, but no
                // golden or computed cell produces it.
                return format!("{prefix}{label}");
            }
        }
    }
    q.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    #[test]
    fn all_three_tables_match_golden() {
        for name in [
            BasisName::Tetrad,
            BasisName::Quaternion,
            BasisName::NullTetrad,
        ] {
            let table = basis_table(name);
            let diffs = diff_against_golden(&table);
            assert!(diffs.is_empty(), "{:?}: {:?}", name, diffs);
        }
    }

    #[test]
    fn entries_are_reproducible_by_beta() {
        // Holds for the quaternion table too: the embedding is a
        // homomorphism, and every value involved is exact.
        for name in [
            BasisName::Tetrad,
            BasisName::Quaternion,
            BasisName::NullTetrad,
        ] {
            let t = basis_table(name);
            for r in 0..4 {
                for c in 0..4 {
                    assert_eq!(t.entries[r][c], t.elements[r].beta_mul(&t.elements[c]));
                }
            }
        }
    }

    #[test]
    fn null_table_has_eight_zero_cells() {
        let t = basis_table(BasisName::NullTetrad);
        let zeros = t
            .entries
            .iter()
            .flatten()
            .filter(|q| **q == Quantion::ZERO)
            .count();
        assert_eq!(zeros, 8);
    }

    #[test]
    fn null_tetrad_elements() {
        let t = null_tetrad();
        assert_eq!(t.l + t.n, Quantion::OMEGA);
        for q in [&t.l, &t.n, &t.m, &t.m_bar] {
            assert_eq!(q.met_norm(), z(0., 0.));
        }
        assert_eq!(t.l.beta_mul(&t.l), t.l);
        assert_eq!(t.l.beta_mul(&t.m), t.m);
        assert_eq!(t.m.beta_mul(&t.l), Quantion::ZERO);
    }

    #[test]
    fn quaternion_embedding_is_a_homomorphism() {
        assert_eq!(quaternion_embed(&[1., 0., 0., 0.]), Quantion::OMEGA);
        let i = quaternion_embed(&[0., 1., 0., 0.]);
        let j = quaternion_embed(&[0., 0., 1., 0.]);
        let k = quaternion_embed(&[0., 0., 0., 1.]);
        assert_eq!(i.beta_mul(&i), -Quantion::OMEGA);
        assert_eq!(i.beta_mul(&j), k);
        // Random integer quaternions: embed(x y) == embed(x) beta embed(y),
        // exactly, since all values are small integers.
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let x: [f64; 4] = std::array::from_fn(|_| rng.gen_range(-4..=4) as f64);
            let y: [f64; 4] = std::array::from_fn(|_| rng.gen_range(-4..=4) as f64);
            assert_eq!(
                quaternion_embed(&quaternion_mul(&x, &y)),
                quaternion_embed(&x).beta_mul(&quaternion_embed(&y))
            );
        }
    }

    #[test]
    fn diff_reports_the_offending_cell() {
        let mut table = basis_table(BasisName::Tetrad);
        table.entries[1][2] = Quantion::ZERO;
        let diffs = diff_against_golden(&table);
        assert_eq!(diffs.len(), 1);
        assert_eq!(diffs[0].row, "e1");
        assert_eq!(diffs[0].col, "e2");
    }

    #[test]
    fn labels_round_trip_through_cell_label() {
        let t = basis_table(BasisName::Tetrad);
        assert_eq!(cell_label(&t.entries[1][2], &t), "i\u{b7}e3");
        assert_eq!(cell_label(&t.entries[1][3], &t), "-i\u{b7}e2");
        assert_eq!(cell_label(&Quantion::ZERO, &t), "0");
        let q = basis_table(BasisName::Quaternion);
        assert_eq!(cell_label(&q.entries[1][1], &q), "-1");
        assert_eq!(cell_label(&q.entries[1][2], &q), "k");
    }
}
