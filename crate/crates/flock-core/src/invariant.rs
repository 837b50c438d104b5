//! Cycles attached to colorings, the cocycle invariant polynomial, and its
//! orbit refinement.
//!
//! Every coloring `C` of a closed diagram yields the degree-1 cycle
//! `c(C) = Σ ε(cr)·(C(r_s), C(r_m), C(r_t))`; evaluating a 1-cocycle on all
//! cycles gives a multiset of `ℤ_p` values, written as a polynomial whose
//! `t^a` coefficient counts colorings with value `a`.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::braid::ClosedBraidDiagram;
use crate::cochain::{CochainError, CochainTable};
use crate::coloring::{self, ActionSpec, Coloring, ColoringError};
use crate::homology::Chain;
use crate::ternary::TernaryTable;

/// The multiset of cocycle values over all colorings, as coefficients of
/// `t^0 .. t^{p-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct InvariantPolynomial {
    pub modulus: u32,
    pub coefficients: Vec<u64>,
}

impl InvariantPolynomial {
    pub fn coloring_count(&self) -> u64 {
        self.coefficients.iter().sum()
    }
}

impl fmt::Display for InvariantPolynomial {
    /// `c₀ + c₁t + c₂t^2` with zero terms dropped; a bare constant when only
    /// `t^0` occurs; `0` for the empty multiset.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (a, &c) in self.coefficients.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if wrote {
                write!(f, " + ")?;
            }
            match a {
                0 => write!(f, "{c}")?,
                _ => {
                    if c != 1 {
                        write!(f, "{c}")?;
                    }
                    if a == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{a}")?;
                    }
                }
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Per-orbit value multisets with multiplicities: entry `(poly, m)` records
/// `m` orbits whose colorings realize exactly the multiset `poly`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RefinedInvariant {
    pub modulus: u32,
    /// Sorted by (orbit size, coefficient vector); multiplicities positive.
    pub entries: Vec<(InvariantPolynomial, u64)>,
}

impl RefinedInvariant {
    /// Summing all orbit polynomials with multiplicity recovers the plain
    /// invariant polynomial.
    pub fn expand(&self) -> InvariantPolynomial {
        let p = self.modulus as usize;
        let mut coeff = vec![0u64; p];
        for (poly, mult) in &self.entries {
            for (a, &c) in poly.coefficients.iter().enumerate() {
                coeff[a] += c * mult;
            }
        }
        InvariantPolynomial {
            modulus: self.modulus,
            coefficients: coeff,
        }
    }
}

impl fmt::Display for RefinedInvariant {
    /// `{132[1], 212[3], 60[t], ...}`: multiplicity then the orbit polynomial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (poly, mult)) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{mult}[{poly}]")?;
        }
        write!(f, "}}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InvariantError {
    Coloring(ColoringError),
    Cochain(CochainError),
    /// The cocycle does not pass the 1-cocycle conditions.
    NotACocycle,
}

impl fmt::Display for InvariantError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InvariantError::Coloring(e) => write!(f, "{e}"),
            InvariantError::Cochain(e) => write!(f, "{e}"),
            InvariantError::NotACocycle => write!(f, "cochain fails the cocycle conditions"),
        }
    }
}

impl core::error::Error for InvariantError {}

impl From<ColoringError> for InvariantError {
    fn from(e: ColoringError) -> Self {
        InvariantError::Coloring(e)
    }
}

impl From<CochainError> for InvariantError {
    fn from(e: CochainError) -> Self {
        InvariantError::Cochain(e)
    }
}

/// The degree-1 cycle `Σ ε(cr)·(C(r_s), C(r_m), C(r_t))` of a coloring.
pub fn coloring_cycle(diagram: &ClosedBraidDiagram, coloring: &Coloring) -> Chain {
    let mut out = Chain::zero(3);
    for r in diagram.crossing_records() {
        let tuple = vec![
            coloring.colors[r.roles[0]],
            coloring.colors[r.roles[1]],
            coloring.colors[r.roles[2]],
        ];
        out.add_term(tuple, r.sign as i64);
    }
    out.normalize();
    out
}

/// Evaluates a 1-cochain on a degree-1 chain (linear extension mod `p`).
pub fn evaluate_cocycle(f: &CochainTable, chain: &Chain) -> Result<u32, CochainError> {
    f.evaluate(chain)
}

/// The cocycle value of one coloring, computed directly from the crossing
/// records without materializing the chain.
fn coloring_value(diagram: &ClosedBraidDiagram, f: &CochainTable, colors: &[usize]) -> u32 {
    let p = f.modulus as i64;
    let mut acc = 0i64;
    for r in diagram.crossing_records() {
        let v = f.value(&[
            colors[r.roles[0]],
            colors[r.roles[1]],
            colors[r.roles[2]],
        ]) as i64;
        acc = (acc + r.sign as i64 * v).rem_euclid(p);
    }
    acc as u32
}

/// The invariant polynomial: histogram of cocycle values over all colorings.
///
/// The cocycle is assumed verified (`check_1cocycle`) by the caller; this
/// function only needs colorability.
pub fn cocycle_invariant(
    diagram: &ClosedBraidDiagram,
    table: &TernaryTable,
    f: &CochainTable,
) -> Result<InvariantPolynomial, InvariantError> {
    let p = f.modulus as usize;
    let mut coefficients = vec![0u64; p];
    let records = diagram.crossing_records();
    // stream over raw colorings; roles index canonical regions, so map back
    let mut canonical_colors = vec![0usize; diagram.regions];
    coloring::for_each_coloring(diagram, table, |raw| {
        for (rawid, &c) in raw.iter().enumerate() {
            canonical_colors[diagram.canonical_of(rawid)] = c;
        }
        let mut acc = 0i64;
        for r in &records {
            let v = f.value(&[
                canonical_colors[r.roles[0]],
                canonical_colors[r.roles[1]],
                canonical_colors[r.roles[2]],
            ]) as i64;
            acc = (acc + r.sign as i64 * v).rem_euclid(p as i64);
        }
        coefficients[acc as usize] += 1;
    })?;
    Ok(InvariantPolynomial {
        modulus: f.modulus,
        coefficients,
    })
}

/// Orbit-refined invariant: partition the colorings under the action, then
/// record each orbit's value multiset. Entries are grouped with
/// multiplicities and sorted by (orbit size, coefficient vector).
pub fn refined_invariant(
    diagram: &ClosedBraidDiagram,
    table: &TernaryTable,
    f: &CochainTable,
    action: &ActionSpec,
) -> Result<RefinedInvariant, InvariantError> {
    let colorings = coloring::enumerate_colorings(diagram, table)?;
    let partition = coloring::orbit_partition(diagram, table, &colorings, action)?;
    let p = f.modulus as usize;
    // canonical key: (orbit size, sorted value vector)
    let mut grouped: BTreeMap<(usize, Vec<u32>), u64> = BTreeMap::new();
    for orbit in &partition.orbits {
        let mut values: Vec<u32> = orbit
            .iter()
            .map(|&i| coloring_value(diagram, f, &colorings[i].colors))
            .collect();
        values.sort_unstable();
        *grouped.entry((orbit.len(), values)).or_insert(0) += 1;
    }
    Ok(RefinedInvariant {
        modulus: f.modulus,
        entries: grouped
            .into_iter()
            .map(|((_, values), mult)| {
                let mut coefficients = vec![0u64; p];
                for v in values {
                    coefficients[v as usize] += 1;
                }
                (
                    InvariantPolynomial {
                        modulus: f.modulus,
                        coefficients,
                    },
                    mult,
                )
            })
            .collect(),
    })
}

/// Batch summary over a list of braid words: per-word polynomial plus the
/// counts of distinct polynomials and distinct coloring counts.
#[derive(Clone, Debug)]
pub struct BatchReport {
    pub rows: Vec<(String, InvariantPolynomial)>,
    pub distinct_polynomials: usize,
    pub distinct_coloring_counts: usize,
}

pub fn batch_invariants(
    words: &[crate::braid::BraidWord],
    table: &TernaryTable,
    f: &CochainTable,
) -> Result<BatchReport, InvariantError> {
    let mut rows = Vec::with_capacity(words.len());
    for w in words {
        let d = ClosedBraidDiagram::close(w.clone());
        let psi = cocycle_invariant(&d, table, f)?;
        rows.push((alloc::format!("{w}"), psi));
    }
    let mut polys: Vec<&InvariantPolynomial> = rows.iter().map(|(_, p)| p).collect();
    polys.sort();
    polys.dedup();
    let distinct_polynomials = polys.len();
    let mut counts: Vec<u64> = rows.iter().map(|(_, p)| p.coloring_count()).collect();
    counts.sort_unstable();
    counts.dedup();
    Ok(BatchReport {
        rows,
        distinct_polynomials,
        distinct_coloring_counts: counts.len(),
    })
}
