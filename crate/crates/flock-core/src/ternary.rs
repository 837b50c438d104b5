//! Ternary operation tables and the flock axiom battery.
//!
//! The central construction: for a finite group `(X,·)` and `b` central of
//! order ≤ 2, the table `[xyz] = x·y⁻¹·z·b` is a ternary quasigroup that is
//! para-associative and satisfies both nesting conditions; conversely every
//! such table arises this way (recovered by [`TernaryTable::retract_group`]).

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::group::FiniteGroup;
use crate::loops::{LoopError, LoopTable};

/// A flock presented by its associated group and central parameter.
#[derive(Clone, PartialEq, Eq)]
pub struct FlockSpec {
    pub group: FiniteGroup,
    /// 0-based index of the central element of order ≤ 2.
    pub b: usize,
}

impl FlockSpec {
    pub fn new(group: FiniteGroup, b: usize) -> Result<Self, TernaryError> {
        if !group.admissible_b().contains(&b) {
            return Err(TernaryError::BNotAdmissible { b: b + 1 });
        }
        Ok(FlockSpec { group, b })
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    /// Whether `b` is the identity, i.e. the flock is idempotent (a heap).
    pub fn is_idempotent(&self) -> bool {
        self.b == self.group.identity()
    }
}

impl fmt::Debug for FlockSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FlockSpec(order {}, b {})", self.group.order(), self.b + 1)
    }
}

/// Where a ternary table came from, when known. Conjugation-style coloring
/// actions need the group, so flock provenance carries it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    Unknown,
    Flock(FlockSpec),
    /// Built from a loop by one of the two bracketings, with parameter `k`.
    LoopVariant { variant: u8, k: usize },
}

/// An `n³` lookup table for a ternary operation on `1..=n`.
#[derive(Clone, PartialEq, Eq)]
pub struct TernaryTable {
    order: usize,
    /// `values[(x*n + y)*n + z] = [xyz]`, all 0-based.
    values: Vec<usize>,
    pub provenance: Provenance,
}

/// Axioms checked by the battery; appears in witnesses and reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axiom {
    /// Unique solvability in the given coordinate (0, 1 or 2).
    Quasigroup(u8),
    Associative,
    ParaAssociative,
    LeftNesting,
    RightNesting,
    Idempotent,
    SemiCommutative,
    Heap,
    /// `[[abc]cb]=a`, `[c[abc]a]=b`, `[ba[abc]]=c`.
    Recovery,
    /// `[aax] = [xaa]` for all `a, x`.
    Special,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Axiom::Quasigroup(c) => write!(f, "quasigroup (coordinate {})", c + 1),
            Axiom::Associative => write!(f, "associativity"),
            Axiom::ParaAssociative => write!(f, "para-associativity"),
            Axiom::LeftNesting => write!(f, "left nesting"),
            Axiom::RightNesting => write!(f, "right nesting"),
            Axiom::Idempotent => write!(f, "idempotence"),
            Axiom::SemiCommutative => write!(f, "semi-commutativity"),
            Axiom::Heap => write!(f, "heap"),
            Axiom::Recovery => write!(f, "recovery equations"),
            Axiom::Special => write!(f, "all elements special"),
        }
    }
}

/// Lexicographically first tuple falsifying an axiom (0-based internally;
/// display is 1-based).
#[derive(Clone, PartialEq, Eq)]
pub struct Witness {
    pub axiom: Axiom,
    pub tuple: Vec<usize>,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails at (", self.axiom)?;
        for (i, &x) in self.tuple.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", x + 1)?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TernaryError {
    /// `b` (1-based) is not the identity or a central involution.
    BNotAdmissible { b: usize },
    /// Entry out of range in a table (1-based).
    EntryOutOfRange { entry: usize, order: usize },
    Shape { expected: usize, got: usize },
    /// Skew elements require unique solvability in the middle coordinate.
    NotQuasigroup,
    /// Retraction round-trip failed: the table is not a knot-theoretic flock.
    ReconstructionFailed,
    Loop(LoopError),
}

impl fmt::Display for TernaryError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TernaryError::BNotAdmissible { b } => {
                write!(f, "element {b} is not the identity or a central involution")
            }
            TernaryError::EntryOutOfRange { entry, order } => {
                write!(f, "entry {entry} out of range 1..={order}")
            }
            TernaryError::Shape { expected, got } => {
                write!(f, "expected {expected} entries, got {got}")
            }
            TernaryError::NotQuasigroup => write!(f, "table is not a ternary quasigroup"),
            TernaryError::ReconstructionFailed => {
                write!(f, "retraction does not reproduce the table")
            }
            TernaryError::Loop(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for TernaryError {}

impl From<LoopError> for TernaryError {
    fn from(e: LoopError) -> Self {
        TernaryError::Loop(e)
    }
}

impl TernaryTable {
    /// `[xyz] = x·y⁻¹·z·b` over the spec's group.
    pub fn flock_from_group(spec: FlockSpec) -> TernaryTable {
        let g = &spec.group;
        let n = g.order();
        let mut values = vec![0usize; n * n * n];
        for x in 0..n {
            for y in 0..n {
                let xy = g.mul(x, g.inv(y));
                for z in 0..n {
                    values[(x * n + y) * n + z] = g.mul(g.mul(xy, z), spec.b);
                }
            }
        }
        TernaryTable {
            order: n,
            values,
            provenance: Provenance::Flock(spec),
        }
    }

    /// The two bracketings of the flock operation in an extra loop:
    /// variant 1 is `((x∗y⁻¹)∗z)∗k`, variant 2 is `(x∗(y⁻¹∗z))∗k`, with `k`
    /// central of order ≤ 2. Errors when `l` is not an extra loop or `k` is
    /// not a central involution.
    pub fn extra_loop_ternary(
        l: &LoopTable,
        k: usize,
        variant: u8,
    ) -> Result<TernaryTable, TernaryError> {
        if let Some((x, y, z)) = l.extra_loop_witness() {
            return Err(TernaryError::Loop(LoopError::NotExtraLoop {
                x: x + 1,
                y: y + 1,
                z: z + 1,
            }));
        }
        if !l.central_involutions().contains(&k) {
            return Err(TernaryError::Loop(LoopError::KNotCentralInvolution {
                k: k + 1,
            }));
        }
        let n = l.order();
        let mut values = vec![0usize; n * n * n];
        for x in 0..n {
            for y in 0..n {
                // extra loops have the inverse properties; left and right
                // inverses coincide
                let yi = l.right_inverse(y);
                for z in 0..n {
                    let v = match variant {
                        1 => l.mul(l.mul(l.mul(x, yi), z), k),
                        _ => l.mul(l.mul(x, l.mul(yi, z)), k),
                    };
                    values[(x * n + y) * n + z] = v;
                }
            }
        }
        Ok(TernaryTable {
            order: n,
            values,
            provenance: Provenance::LoopVariant { variant, k },
        })
    }

    /// Builds from raw 0-based values (length `n³`).
    pub fn from_values0(values: Vec<usize>, n: usize) -> Result<TernaryTable, TernaryError> {
        if values.len() != n * n * n {
            return Err(TernaryError::Shape {
                expected: n * n * n,
                got: values.len(),
            });
        }
        for &v in &values {
            if v >= n {
                return Err(TernaryError::EntryOutOfRange {
                    entry: v + 1,
                    order: n,
                });
            }
        }
        Ok(TernaryTable {
            order: n,
            values,
            provenance: Provenance::Unknown,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize, z: usize) -> usize {
        self.values[(x * self.order + y) * self.order + z]
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// The associated flock data, when this table was built from a group.
    pub fn flock_spec(&self) -> Option<&FlockSpec> {
        match &self.provenance {
            Provenance::Flock(s) => Some(s),
            _ => None,
        }
    }

    // ---- axiom battery -------------------------------------------------
    //
    // Every checker scans in lexicographic order and reports the first
    // falsifying tuple, so failures are reproducible.

    /// Unique solvability of `[zab]=c`, `[azb]=c`, `[abz]=c`. Equivalent to
    /// the Latin-cube property in each coordinate.
    pub fn quasigroup_witness(&self) -> Option<Witness> {
        let n = self.order;
        for coord in 0..3u8 {
            for a in 0..n {
                for b in 0..n {
                    let mut seen = vec![false; n];
                    for z in 0..n {
                        let v = match coord {
                            0 => self.get(z, a, b),
                            1 => self.get(a, z, b),
                            _ => self.get(a, b, z),
                        };
                        if seen[v] {
                            // not injective: some c is hit twice, so some c
                            // has no solution as well
                            return Some(Witness {
                                axiom: Axiom::Quasigroup(coord),
                                tuple: vec![a, b, v],
                            });
                        }
                        seen[v] = true;
                    }
                }
            }
        }
        None
    }

    pub fn is_ternary_quasigroup(&self) -> bool {
        self.quasigroup_witness().is_none()
    }

    /// `[[abc]de] = [a[bcd]e] = [ab[cde]]` over all quintuples.
    pub fn associative_witness(&self) -> Option<Witness> {
        self.quintuple_scan(Axiom::Associative, |t, a, b, c, d, e| {
            let l = t.get(t.get(a, b, c), d, e);
            l == t.get(a, t.get(b, c, d), e) && l == t.get(a, b, t.get(c, d, e))
        })
    }

    /// `[[abc]de] = [a[dcb]e] = [ab[cde]]` over all quintuples.
    pub fn para_associative_witness(&self) -> Option<Witness> {
        self.quintuple_scan(Axiom::ParaAssociative, |t, a, b, c, d, e| {
            let l = t.get(t.get(a, b, c), d, e);
            l == t.get(a, t.get(d, c, b), e) && l == t.get(a, b, t.get(c, d, e))
        })
    }

    fn quintuple_scan(
        &self,
        axiom: Axiom,
        ok: impl Fn(&Self, usize, usize, usize, usize, usize) -> bool,
    ) -> Option<Witness> {
        let n = self.order;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for d in 0..n {
                        for e in 0..n {
                            if !ok(self, a, b, c, d, e) {
                                return Some(Witness {
                                    axiom,
                                    tuple: vec![a, b, c, d, e],
                                });
                            }
                        }
                    }
                }
            }
        }
        None
    }

    pub fn is_associative(&self) -> bool {
        self.associative_witness().is_none()
    }

    pub fn is_para_associative(&self) -> bool {
        self.para_associative_witness().is_none()
    }

    /// Left nesting: `[ab[bcd]] = [a[abc][[abc]cd]]` over all quadruples.
    pub fn left_nesting_witness(&self) -> Option<Witness> {
        let n = self.order;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let abc = self.get(a, b, c);
                    for d in 0..n {
                        if self.get(a, b, self.get(b, c, d))
                            != self.get(a, abc, self.get(abc, c, d))
                        {
                            return Some(Witness {
                                axiom: Axiom::LeftNesting,
                                tuple: vec![a, b, c, d],
                            });
                        }
                    }
                }
            }
        }
        None
    }

    /// Right nesting: `[[abc]cd] = [[ab[bcd]][bcd]d]` over all quadruples.
    pub fn right_nesting_witness(&self) -> Option<Witness> {
        let n = self.order;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let abc = self.get(a, b, c);
                    for d in 0..n {
                        let bcd = self.get(b, c, d);
                        if self.get(abc, c, d) != self.get(self.get(a, b, bcd), bcd, d) {
                            return Some(Witness {
                                axiom: Axiom::RightNesting,
                                tuple: vec![a, b, c, d],
                            });
                        }
                    }
                }
            }
        }
        None
    }

    pub fn satisfies_left_nesting(&self) -> bool {
        self.left_nesting_witness().is_none()
    }

    pub fn satisfies_right_nesting(&self) -> bool {
        self.right_nesting_witness().is_none()
    }

    pub fn idempotent_witness(&self) -> Option<Witness> {
        (0..self.order).find(|&a| self.get(a, a, a) != a).map(|a| Witness {
            axiom: Axiom::Idempotent,
            tuple: vec![a],
        })
    }

    pub fn is_idempotent(&self) -> bool {
        self.idempotent_witness().is_none()
    }

    /// `[abc] = [cba]` over all triples.
    pub fn semi_commutative_witness(&self) -> Option<Witness> {
        let n = self.order;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.get(a, b, c) != self.get(c, b, a) {
                        return Some(Witness {
                            axiom: Axiom::SemiCommutative,
                            tuple: vec![a, b, c],
                        });
                    }
                }
            }
        }
        None
    }

    pub fn is_semi_commutative(&self) -> bool {
        self.semi_commutative_witness().is_none()
    }

    /// `[aax] = x = [xaa]` over all pairs.
    pub fn heap_witness(&self) -> Option<Witness> {
        let n = self.order;
        for a in 0..n {
            for x in 0..n {
                if self.get(a, a, x) != x || self.get(x, a, a) != x {
                    return Some(Witness {
                        axiom: Axiom::Heap,
                        tuple: vec![a, x],
                    });
                }
            }
        }
        None
    }

    pub fn is_heap(&self) -> bool {
        self.heap_witness().is_none()
    }

    /// Unique solution of `[a z a] = a`; requires the quasigroup property in
    /// the middle coordinate.
    pub fn skew(&self, a: usize) -> Result<usize, TernaryError> {
        let hits: Vec<usize> = (0..self.order)
            .filter(|&z| self.get(a, z, a) == a)
            .collect();
        match hits.as_slice() {
            [z] => Ok(*z),
            _ => Err(TernaryError::NotQuasigroup),
        }
    }

    /// `[aax] = [xaa]` for all `a, x` (every element special).
    pub fn all_special_witness(&self) -> Option<Witness> {
        let n = self.order;
        for a in 0..n {
            for x in 0..n {
                if self.get(a, a, x) != self.get(x, a, a) {
                    return Some(Witness {
                        axiom: Axiom::Special,
                        tuple: vec![a, x],
                    });
                }
            }
        }
        None
    }

    pub fn all_special(&self) -> bool {
        self.all_special_witness().is_none()
    }

    /// `[[abc]cb]=a`, `[c[abc]a]=b`, `[ba[abc]]=c` over all triples. These are
    /// what region colorings actually use: each lets one crossing color be
    /// recovered from the other three.
    pub fn recovery_witness(&self) -> Option<Witness> {
        let n = self.order;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let abc = self.get(a, b, c);
                    if self.get(abc, c, b) != a
                        || self.get(c, abc, a) != b
                        || self.get(b, a, abc) != c
                    {
                        return Some(Witness {
                            axiom: Axiom::Recovery,
                            tuple: vec![a, b, c],
                        });
                    }
                }
            }
        }
        None
    }

    pub fn recovery_equations_hold(&self) -> bool {
        self.recovery_witness().is_none()
    }

    /// Gate for the coloring engine: a quasigroup, or a table with both
    /// nesting conditions and the recovery equations (the loop variants).
    pub fn is_colorable(&self) -> bool {
        self.is_ternary_quasigroup()
            || (self.satisfies_left_nesting()
                && self.satisfies_right_nesting()
                && self.recovery_equations_hold())
    }

    /// Recovers a group and parameter from a flock: `x∘y := [x a y]` with
    /// identity `skew(a)` and `b := [eee]`. The round trip through
    /// [`flock_from_group`](Self::flock_from_group) must reproduce the table,
    /// otherwise the input was not a knot-theoretic flock.
    pub fn retract_group(&self, a: usize) -> Result<FlockSpec, TernaryError> {
        let n = self.order;
        let mut rows = vec![vec![0usize; n]; n];
        for x in 0..n {
            for y in 0..n {
                rows[x][y] = self.get(x, a, y) + 1;
            }
        }
        let group =
            FiniteGroup::from_table(&rows).map_err(|_| TernaryError::ReconstructionFailed)?;
        let e = group.identity();
        if self.skew(a).ok() != Some(e) {
            return Err(TernaryError::ReconstructionFailed);
        }
        let b = self.get(e, e, e);
        let spec = FlockSpec::new(group, b).map_err(|_| TernaryError::ReconstructionFailed)?;
        let rebuilt = TernaryTable::flock_from_group(spec.clone());
        if rebuilt.values != self.values {
            return Err(TernaryError::ReconstructionFailed);
        }
        Ok(spec)
    }
}

impl fmt::Debug for TernaryTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TernaryTable(order {})", self.order)
    }
}
