//! Named example derivations used by tests, benches and the CLI `corpus`
//! command.

use crate::derivation::Derivation;
use crate::poly::{int, Rat};

/// A derivation given by its coefficient strings, optionally with a
/// translation known to fix every coefficient.
#[derive(Clone, Copy, Debug)]
pub struct CorpusEntry {
    pub name: &'static str,
    pub coeffs: &'static [&'static str],
    pub translation: Option<&'static [i64]>,
}

impl CorpusEntry {
    pub fn n(&self) -> usize {
        self.coeffs.len()
    }

    pub fn derivation(&self) -> Derivation {
        Derivation::parse(self.coeffs).expect("corpus entries parse")
    }

    pub fn translation(&self) -> Option<Vec<Rat>> {
        self.translation.map(|c| c.iter().map(|&v| int(v)).collect())
    }
}

const fn entry(
    name: &'static str,
    coeffs: &'static [&'static str],
    translation: Option<&'static [i64]>,
) -> CorpusEntry {
    CorpusEntry {
        name,
        coeffs,
        translation,
    }
}

pub const CORPUS: &[CorpusEntry] = &[
    entry("intro-three-variable", &["1 - x1*x2", "x1^3", "x2"], Some(&[0, 0, 1])),
    entry("line-unit", &["1"], Some(&[1])),
    entry("line-euler", &["x1"], None),
    entry("line-quadratic", &["x1^2"], None),
    entry("line-quadratic-shifted", &["x1^2 + 2*x1 + 1"], None),
    entry("plane-cubic-fibre", &["1", "x1*x2^2"], None),
    entry("plane-mixed-fibre", &["1", "x1^2*x2^2 + x1*x2"], None),
    entry("linear-dependence", &["x1 + x2", "2*x1 + 2*x2"], None),
    entry("zero-coefficient", &["0", "x1"], Some(&[0, 1])),
    entry("vanishing-fibre", &["1", "x1*x2"], None),
    entry("plane-antiderivative", &["x2 - x1", "x2 - x1 + 1"], Some(&[1, 1])),
    entry("plane-zero-s", &["x2 - x1", "x2 - x1"], Some(&[1, 1])),
    entry(
        "plane-nonconstant-s",
        &["x2 - x1", "x1^2 - 2*x1*x2 + x2^2"],
        Some(&[1, 1]),
    ),
    entry("plane-diagonal", &["1", "1"], Some(&[1, 0])),
    entry("plane-swap-shift", &["x2", "1"], Some(&[1, 0])),
    entry("plane-quadratic-drift", &["x2^2", "1"], Some(&[1, 0])),
    entry("plane-slanted", &["x1 - x2", "x1 - x2 + 2"], Some(&[1, 1])),
    entry("plane-slanted-steep", &["2*x2 - x1 + 3", "1"], Some(&[2, 1])),
    entry("line-family-linear", &["1", "x1"], Some(&[0, 1])),
    entry("line-family-quadratic", &["1", "x1^2"], Some(&[0, 1])),
    entry("line-family-cubic", &["1", "x1^3 - x1"], Some(&[0, 1])),
    entry("pairwise-quadratic-p", &["x1^2", "x1*x2"], None),
    entry("pairwise-invariant-q", &["x1^2 + 1", "3"], Some(&[0, 1])),
    entry("pairwise-constant-q", &["1", "5"], Some(&[1, 0])),
    entry(
        "pairwise-barred-q",
        &["1", "4*x1^2 - 4*x1*x2 + x2^2 + 1"],
        Some(&[1, 2]),
    ),
    entry("pairwise-scaled-p", &["2", "x1 + 3"], Some(&[0, 1])),
    entry("shamsuddin-simple", &["1", "x1*x2 + 1"], None),
    entry("shamsuddin-solvable", &["1", "x2 + x1"], None),
    entry("shamsuddin-degree-gap", &["1", "x1^2*x2 + x1"], None),
    entry("space-line-family", &["1", "x1", "x1^2"], Some(&[0, 1, 0])),
    entry("space-chain", &["1", "x1", "x2"], Some(&[0, 0, 1])),
    entry("space-slanted", &["1", "1", "x1 - x2"], Some(&[1, 1, 0])),
    entry("space-cubic-fibres", &["x1^3", "x2^3", "x3^3"], None),
];

pub fn find(name: &str) -> Option<&'static CorpusEntry> {
    CORPUS.iter().find(|e| e.name == name)
}
