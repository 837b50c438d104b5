//! Braid words and the region complex of their closures.
//!
//! A braid on `n` strands is swept top to bottom. Each of the `m` letters
//! crosses two adjacent strands; between consecutive letters the plane is cut
//! into `n + 1` gap cells. A crossing consumes the gap region above it and
//! starts a fresh region below; the closure (arcs to the right) then
//! identifies the bottom gap regions with the top ones, gap by gap.
//!
//! Crossing conventions (fixed once, by calibration against Reidemeister II,
//! the braid relation, Markov moves, and reference invariant values — they
//! cannot be varied independently):
//!
//! * regions around a crossing are `(a, b, c, d)` = (left, above, right, below);
//! * a positive letter `σ_i` imposes `d = [a b c]` and carries sign `+1`,
//!   source/middle/target regions `(r_s, r_m, r_t) = (a, b, c)`;
//! * a negative letter `σ_i⁻¹` imposes `d = [c b a]`, sign `−1`, roles `(a, d, c)`;
//! * the over-strand enters from the right at positive crossings, so `r_m`
//!   (across an under-arc from `r_s = a`) is the above region there and the
//!   below region at negative crossings.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// A word in the braid generators: letter `g > 0` is `σ_g`, `g < 0` is `σ_{|g|}⁻¹`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidWord {
    pub strands: usize,
    pub letters: Vec<i32>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BraidError {
    /// Letter `|g|` must lie in `1..=strands-1`.
    LetterOutOfRange { letter: i32, strands: usize },
    EmptyTokens,
    BadToken { token: String },
}

impl fmt::Display for BraidError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BraidError::LetterOutOfRange { letter, strands } => {
                write!(f, "letter {letter} out of range for {strands} strands")
            }
            BraidError::EmptyTokens => write!(f, "empty braid word (specify strands=n)"),
            BraidError::BadToken { token } => write!(f, "bad braid token {token:?}"),
        }
    }
}

impl core::error::Error for BraidError {}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self, BraidError> {
        for &g in &letters {
            if g == 0 || g.unsigned_abs() as usize > strands.saturating_sub(1) {
                return Err(BraidError::LetterOutOfRange { letter: g, strands });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    /// Parses whitespace-separated signed integers with an optional
    /// `strands=n` prefix; without it, `n = max|g| + 1`.
    pub fn parse(text: &str) -> Result<Self, BraidError> {
        let mut strands: Option<usize> = None;
        let mut letters = Vec::new();
        for tok in text.split_whitespace() {
            if let Some(v) = tok.strip_prefix("strands=") {
                strands = Some(v.parse().map_err(|_| BraidError::BadToken {
                    token: String::from(tok),
                })?);
            } else {
                let g: i32 = tok.parse().map_err(|_| BraidError::BadToken {
                    token: String::from(tok),
                })?;
                letters.push(g);
            }
        }
        let strands = match strands {
            Some(s) => s,
            None => {
                if letters.is_empty() {
                    return Err(BraidError::EmptyTokens);
                }
                letters.iter().map(|g| g.unsigned_abs() as usize).max().unwrap() + 1
            }
        };
        Self::new(strands, letters)
    }

    /// Number of link components of the closure: cycles of the strand
    /// permutation.
    pub fn closure_components(&self) -> usize {
        let n = self.strands;
        let mut at: Vec<usize> = (0..n).collect(); // at[pos] = strand currently there
        for &g in &self.letters {
            let i = g.unsigned_abs() as usize - 1;
            at.swap(i, i + 1);
        }
        // strand at bottom position j reconnects to top position j
        let mut next = vec![0usize; n];
        for (pos, &strand) in at.iter().enumerate() {
            next[strand] = pos;
        }
        let mut seen = vec![false; n];
        let mut comps = 0;
        for mut s in 0..n {
            if seen[s] {
                continue;
            }
            comps += 1;
            while !seen[s] {
                seen[s] = true;
                s = next[s];
            }
        }
        comps
    }

    pub fn mirror(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().map(|&g| -g).collect(),
        }
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "strands={}", self.strands);
        }
        for (i, g) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

/// One crossing of the closed diagram, in canonical region ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossingRecord {
    pub sign: i8,
    /// `(left, above, right, below)`.
    pub around: [usize; 4],
    /// `(r_s, r_m, r_t)`: source, the region across an under-arc from the
    /// source, and target.
    pub roles: [usize; 3],
    /// Which incoming strand passes over: true means the strand entering from
    /// the upper left.
    pub over_from_left: bool,
}

/// The region complex of a braid closure.
#[derive(Clone, Debug)]
pub struct ClosedBraidDiagram {
    pub word: BraidWord,
    /// Number of canonical regions (faces, counting the unbounded one).
    pub regions: usize,
    /// Canonical region id for each raw sweep id.
    canonical: Vec<usize>,
    /// Raw ids of the `strands+1` gap cells at the top level.
    top_raw: Vec<usize>,
    /// Raw ids at the bottom level (identified with the top by the closure).
    bottom_raw: Vec<usize>,
    /// Raw `(sign, left, above, right, below)` per crossing, in word order.
    raw_crossings: Vec<(i8, [usize; 4])>,
    /// Canonical id of the unbounded region: the class of (level 0, gap 0).
    pub unbounded: usize,
    pub components: usize,
}

impl ClosedBraidDiagram {
    /// Sweep construction plus closure identification.
    pub fn close(word: BraidWord) -> ClosedBraidDiagram {
        let n = word.strands;
        let mut cur: Vec<usize> = (0..=n).collect();
        let top_raw = cur.clone();
        let mut next_id = n + 1;
        let mut raw_crossings = Vec::with_capacity(word.letters.len());
        for &g in &word.letters {
            let i = g.unsigned_abs() as usize;
            let (a, b, c) = (cur[i - 1], cur[i], cur[i + 1]);
            let d = next_id;
            next_id += 1;
            raw_crossings.push((if g > 0 { 1 } else { -1 }, [a, b, c, d]));
            cur[i] = d;
        }
        let bottom_raw = cur;

        // union-find over raw ids; closure merges bottom gap j with top gap j
        let mut parent: Vec<usize> = (0..next_id).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for j in 0..=n {
            let (x, y) = (
                find(&mut parent, bottom_raw[j]),
                find(&mut parent, top_raw[j]),
            );
            if x != y {
                parent[x] = y;
            }
        }
        // canonical ids numbered by first raw appearance
        let mut canonical = vec![usize::MAX; next_id];
        let mut count = 0;
        for raw in 0..next_id {
            let root = find(&mut parent, raw);
            if canonical[root] == usize::MAX {
                canonical[root] = count;
                count += 1;
            }
            canonical[raw] = canonical[root];
        }
        let unbounded = canonical[top_raw[0]];
        let components = word.closure_components();
        ClosedBraidDiagram {
            word,
            regions: count,
            canonical,
            top_raw,
            bottom_raw,
            raw_crossings,
            unbounded,
            components,
        }
    }

    pub fn crossing_count(&self) -> usize {
        self.raw_crossings.len()
    }

    /// Canonical id of a raw sweep region id.
    pub fn canonical_of(&self, raw: usize) -> usize {
        self.canonical[raw]
    }

    /// Raw `(sign, [a, b, c, d])` tuples in word order; the coloring engine
    /// propagates over these.
    pub fn raw_crossings(&self) -> &[(i8, [usize; 4])] {
        &self.raw_crossings
    }

    pub fn top_raw(&self) -> &[usize] {
        &self.top_raw
    }

    pub fn bottom_raw(&self) -> &[usize] {
        &self.bottom_raw
    }

    /// Crossing records in canonical region ids, with roles assigned by the
    /// calibrated convention.
    pub fn crossing_records(&self) -> Vec<CrossingRecord> {
        self.raw_crossings
            .iter()
            .map(|&(sign, [a, b, c, d])| {
                let (a, b, c, d) = (
                    self.canonical[a],
                    self.canonical[b],
                    self.canonical[c],
                    self.canonical[d],
                );
                let roles = if sign > 0 { [a, b, c] } else { [a, d, c] };
                CrossingRecord {
                    sign,
                    around: [a, b, c, d],
                    roles,
                    over_from_left: sign < 0,
                }
            })
            .collect()
    }

    /// Euler characteristic check: `V − E + F = 2` on the sphere for nonempty
    /// words (V = crossings, E = 2V, F = regions); the empty `n`-braid closes
    /// to `n + 1` regions.
    pub fn euler_consistent(&self) -> bool {
        let v = self.crossing_count() as isize;
        if v == 0 {
            self.regions == self.word.strands + 1
        } else {
            v - 2 * v + self.regions as isize == 2
        }
    }
}
