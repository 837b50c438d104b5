//! Permutations on points `1..=n` with disjoint-cycle text notation.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// A permutation of the points `1..=n`, stored as an image array.
///
/// `images[i]` is the 0-based image of the 0-based point `i`; all text IO is
/// 1-based cycle notation with fixed points omitted and the identity written
/// `()`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PermError {
    /// A point outside `1..=n`, or n = 0.
    PointOutOfRange { point: usize, points: usize },
    /// Some point appears twice across the cycles.
    RepeatedPoint { point: usize },
    /// Malformed cycle text.
    Syntax { text: String },
}

impl fmt::Display for PermError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PermError::PointOutOfRange { point, points } => {
                write!(f, "point {point} out of range 1..={points}")
            }
            PermError::RepeatedPoint { point } => write!(f, "point {point} repeated in cycles"),
            PermError::Syntax { text } => write!(f, "malformed cycle notation: {text:?}"),
        }
    }
}

impl core::error::Error for PermError {}

impl Permutation {
    /// Identity permutation on `points` points.
    pub fn identity(points: usize) -> Self {
        Permutation {
            images: (0..points).collect(),
        }
    }

    /// Builds from a 0-based image array; must be a bijection.
    pub fn from_images(images: Vec<usize>) -> Result<Self, PermError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &im in &images {
            if im >= n {
                return Err(PermError::PointOutOfRange {
                    point: im + 1,
                    points: n,
                });
            }
            if seen[im] {
                return Err(PermError::RepeatedPoint { point: im + 1 });
            }
            seen[im] = true;
        }
        Ok(Permutation { images })
    }

    /// Parses disjoint-cycle notation like `(1,2,3)(4,5)`; `()` is the identity.
    pub fn parse(text: &str, points: usize) -> Result<Self, PermError> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let mut images: Vec<usize> = (0..points).collect();
        let mut moved = vec![false; points];
        let mut rest = compact.as_str();
        if rest.is_empty() {
            return Err(PermError::Syntax {
                text: String::from(text),
            });
        }
        while !rest.is_empty() {
            let Some(stripped) = rest.strip_prefix('(') else {
                return Err(PermError::Syntax {
                    text: String::from(text),
                });
            };
            let Some(close) = stripped.find(')') else {
                return Err(PermError::Syntax {
                    text: String::from(text),
                });
            };
            let body = &stripped[..close];
            rest = &stripped[close + 1..];
            if body.is_empty() {
                continue; // "()" — identity cycle
            }
            let mut pts = Vec::new();
            for tok in body.split(',') {
                let p: usize = tok.parse().map_err(|_| PermError::Syntax {
                    text: String::from(text),
                })?;
                if p == 0 || p > points {
                    return Err(PermError::PointOutOfRange { point: p, points });
                }
                if moved[p - 1] {
                    return Err(PermError::RepeatedPoint { point: p });
                }
                moved[p - 1] = true;
                pts.push(p - 1);
            }
            for w in 0..pts.len() {
                images[pts[w]] = pts[(w + 1) % pts.len()];
            }
        }
        Ok(Permutation { images })
    }

    pub fn points(&self) -> usize {
        self.images.len()
    }

    /// 0-based image of the 0-based point `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    /// Left-to-right composition: `(self * other)(x) = other(self(x))`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: self.images.iter().map(|&i| other.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &im) in self.images.iter().enumerate() {
            images[im] = i;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &im)| i == im)
    }
}

impl fmt::Display for Permutation {
    /// Disjoint cycles, 1-based, fixed points omitted, identity as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "()");
        }
        let n = self.images.len();
        let mut seen = vec![false; n];
        for start in 0..n {
            if seen[start] || self.images[start] == start {
                continue;
            }
            write!(f, "(")?;
            let mut p = start;
            let mut first = true;
            loop {
                if !first {
                    write!(f, ",")?;
                }
                write!(f, "{}", p + 1)?;
                first = false;
                seen[p] = true;
                p = self.images[p];
                if p == start {
                    break;
                }
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
