//! Finite groups as explicit multiplication tables.
//!
//! Element indices are 1-based in all IO and error reports (matching the
//! catalog and cocycle file conventions); in-memory indices are 0-based.
//! Products of permutations compose left to right: `(p·q)(x) = q(p(x))`.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

pub use crate::perm::{PermError, Permutation};

/// A finite group given by its Cayley table.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    /// Row-major `order × order` table, 0-based: `table[x*order + y] = x·y`.
    table: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
    /// Optional per-element display strings (e.g. cycle notation).
    pub labels: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupError {
    /// Table is not square or entries exceed the order (1-based offender).
    Shape { row: usize, len: usize, order: usize },
    /// Row or column is not a permutation; names the first offending cell (1-based).
    NotLatin { row: usize, col: usize },
    /// First failing triple (1-based): (x·y)·z ≠ x·(y·z).
    NotAssociative { x: usize, y: usize, z: usize },
    NoIdentity,
    /// Explicit element list does not equal the generated closure.
    ClosureMismatch { generated: usize, listed: usize },
    Perm(PermError),
    /// An element outside the group (1-based).
    ElementOutOfRange { element: usize, order: usize },
}

impl fmt::Display for GroupError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupError::Shape { row, len, order } => {
                write!(f, "row {row} has {len} entries, expected {order}")
            }
            GroupError::NotLatin { row, col } => {
                write!(f, "not a Latin square: duplicate at row {row}, column {col}")
            }
            GroupError::NotAssociative { x, y, z } => {
                write!(f, "not associative: ({x}*{y})*{z} != {x}*({y}*{z})")
            }
            GroupError::NoIdentity => write!(f, "no identity element"),
            GroupError::ClosureMismatch { generated, listed } => write!(
                f,
                "closure has {generated} elements but the explicit list has {listed}"
            ),
            GroupError::Perm(e) => write!(f, "{e}"),
            GroupError::ElementOutOfRange { element, order } => {
                write!(f, "element {element} out of range 1..={order}")
            }
        }
    }
}

impl core::error::Error for GroupError {}

impl From<PermError> for GroupError {
    fn from(e: PermError) -> Self {
        GroupError::Perm(e)
    }
}

impl FiniteGroup {
    /// Validates a Cayley table of 1-based indices: Latin square, identity,
    /// associativity over all triples, and computes inverses.
    pub fn from_table(rows: &[Vec<usize>]) -> Result<Self, GroupError> {
        let n = rows.len();
        if n == 0 {
            return Err(GroupError::NoIdentity);
        }
        let mut table = vec![0usize; n * n];
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(GroupError::Shape {
                    row: i + 1,
                    len: row.len(),
                    order: n,
                });
            }
            for (j, &v) in row.iter().enumerate() {
                if v == 0 || v > n {
                    return Err(GroupError::ElementOutOfRange {
                        element: v,
                        order: n,
                    });
                }
                table[i * n + j] = v - 1;
            }
        }
        Self::from_table0(table, n)
    }

    /// Same as [`from_table`](Self::from_table) but for a flat 0-based table.
    pub fn from_table0(table: Vec<usize>, n: usize) -> Result<Self, GroupError> {
        debug_assert_eq!(table.len(), n * n);
        // Latin square: first duplicate cell reported, scanning rows then columns.
        for i in 0..n {
            let mut seen = vec![false; n];
            for j in 0..n {
                let v = table[i * n + j];
                if seen[v] {
                    return Err(GroupError::NotLatin {
                        row: i + 1,
                        col: j + 1,
                    });
                }
                seen[v] = true;
            }
        }
        for j in 0..n {
            let mut seen = vec![false; n];
            for i in 0..n {
                let v = table[i * n + j];
                if seen[v] {
                    return Err(GroupError::NotLatin {
                        row: i + 1,
                        col: j + 1,
                    });
                }
                seen[v] = true;
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e * n + x] == x && table[x * n + e] == x))
            .ok_or(GroupError::NoIdentity)?;
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if table[table[x * n + y] * n + z] != table[x * n + table[y * n + z]] {
                        return Err(GroupError::NotAssociative {
                            x: x + 1,
                            y: y + 1,
                            z: z + 1,
                        });
                    }
                }
            }
        }
        let mut inverse = vec![0usize; n];
        for x in 0..n {
            inverse[x] = (0..n).find(|&y| table[x * n + y] == identity).unwrap();
        }
        Ok(FiniteGroup {
            order: n,
            table,
            identity,
            inverse,
            labels: None,
        })
    }

    /// Closes a set of permutation generators under left-to-right composition.
    ///
    /// Element 1 is the identity; the rest are indexed in first-seen
    /// breadth-first order (generators in the given order). When `explicit`
    /// is supplied, indices follow that list instead, and the closure must
    /// equal it exactly.
    pub fn from_permutations(
        gens: &[Permutation],
        explicit: Option<&[Permutation]>,
    ) -> Result<Self, GroupError> {
        let points = if let Some(list) = explicit {
            list.first().map(|p| p.points()).unwrap_or(1)
        } else {
            gens.first().map(|p| p.points()).unwrap_or(1)
        };
        let id = Permutation::identity(points);
        let mut elems: Vec<Permutation> = vec![id.clone()];
        let mut frontier: Vec<Permutation> = vec![id];
        while let Some(p) = frontier.first().cloned() {
            frontier.remove(0);
            for g in gens {
                let q = p.then(g);
                if !elems.contains(&q) {
                    elems.push(q.clone());
                    frontier.push(q);
                }
            }
        }
        if let Some(list) = explicit {
            if list.len() != elems.len() || !elems.iter().all(|p| list.contains(p)) {
                return Err(GroupError::ClosureMismatch {
                    generated: elems.len(),
                    listed: list.len(),
                });
            }
            elems = list.to_vec();
        }
        let n = elems.len();
        let mut table = vec![0usize; n * n];
        for i in 0..n {
            for j in 0..n {
                let r = elems[i].then(&elems[j]);
                let k = elems.iter().position(|p| *p == r).unwrap();
                table[i * n + j] = k;
            }
        }
        let mut g = Self::from_table0(table, n)?;
        g.labels = Some(elems.iter().map(|p| alloc::format!("{p}")).collect());
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// 0-based product.
    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.table[x * self.order + y]
    }

    #[inline]
    pub fn inv(&self, x: usize) -> usize {
        self.inverse[x]
    }

    #[inline]
    pub fn identity(&self) -> usize {
        self.identity
    }

    /// Cayley table rows with 1-based entries, for serialization.
    pub fn rows_1based(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|i| (0..self.order).map(|j| self.mul(i, j) + 1).collect())
            .collect()
    }

    /// Multiplicative order of an element.
    pub fn element_order(&self, x: usize) -> usize {
        let mut y = x;
        let mut o = 1;
        while y != self.identity {
            y = self.mul(y, x);
            o += 1;
        }
        o
    }

    /// Sorted multiset of element orders, used to prune isomorphism searches.
    pub fn order_statistics(&self) -> Vec<usize> {
        let mut v: Vec<usize> = (0..self.order).map(|x| self.element_order(x)).collect();
        v.sort_unstable();
        v
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|x| (x..self.order).all(|y| self.mul(x, y) == self.mul(y, x)))
    }

    /// `{z : z·x = x·z for all x}`, ascending.
    pub fn center(&self) -> Vec<usize> {
        (0..self.order)
            .filter(|&z| (0..self.order).all(|x| self.mul(z, x) == self.mul(x, z)))
            .collect()
    }

    /// Valid flock parameters: the identity plus every central involution.
    pub fn admissible_b(&self) -> Vec<usize> {
        let mut out = vec![self.identity];
        for z in self.center() {
            if z != self.identity && self.mul(z, z) == self.identity {
                out.push(z);
            }
        }
        out.sort_unstable();
        out
    }

    /// Closure of a subset under multiplication, ascending.
    pub fn subgroup_closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order];
        seen[self.identity] = true;
        let mut out = vec![self.identity];
        let mut frontier = vec![self.identity];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    out.push(y);
                    frontier.push(y);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Smallest generating set, found by exhausting subset sizes 1, 2, 3, …
    /// in lexicographic order. Deterministic.
    pub fn minimal_generating_set(&self) -> Vec<usize> {
        if self.order == 1 {
            return vec![];
        }
        let mut size = 1;
        loop {
            let mut combo: Vec<usize> = (0..size).collect();
            loop {
                if self.subgroup_closure(&combo).len() == self.order {
                    return combo;
                }
                // next lexicographic combination of {0..order} choose size
                let mut i = size;
                loop {
                    if i == 0 {
                        combo.clear();
                        break;
                    }
                    i -= 1;
                    if combo[i] + 1 <= self.order - (size - i) {
                        combo[i] += 1;
                        for j in i + 1..size {
                            combo[j] = combo[j - 1] + 1;
                        }
                        break;
                    }
                }
                if combo.is_empty() {
                    break;
                }
            }
            size += 1;
            assert!(size <= self.order, "no generating set found");
        }
    }

    /// All automorphisms, by backtracking over images of a minimal generating
    /// set (candidates filtered by element order). Sorted by their map arrays.
    pub fn automorphisms(&self) -> Vec<GroupIso> {
        let mut out = iso_search(self, self, false);
        out.sort_by(|a, b| a.map.cmp(&b.map));
        out
    }

    /// Some isomorphism onto `other` if one exists. Deterministic: the first
    /// hit in the backtracking order over images of the minimal generating set.
    pub fn isomorphism_to(&self, other: &FiniteGroup) -> Option<GroupIso> {
        if self.order != other.order {
            return None;
        }
        if self.order_statistics() != other.order_statistics() {
            return None;
        }
        iso_search(self, other, true).into_iter().next()
    }
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteGroup(order {})", self.order)
    }
}

/// A bijection `map: source → target` with `map(x·y) = map(x)∗map(y)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupIso {
    /// 0-based: `map[x]` is the image of `x`.
    pub map: Vec<usize>,
}

impl GroupIso {
    pub fn identity(order: usize) -> Self {
        GroupIso {
            map: (0..order).collect(),
        }
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    /// `self` then `other`.
    pub fn then(&self, other: &GroupIso) -> GroupIso {
        GroupIso {
            map: self.map.iter().map(|&x| other.map[x]).collect(),
        }
    }

    /// Checks the homomorphism and bijection conditions against the two groups.
    pub fn is_valid(&self, source: &FiniteGroup, target: &FiniteGroup) -> bool {
        if self.map.len() != source.order() || source.order() != target.order() {
            return false;
        }
        let mut seen = vec![false; self.map.len()];
        for &v in &self.map {
            if v >= self.map.len() || seen[v] {
                return false;
            }
            seen[v] = true;
        }
        for x in 0..source.order() {
            for y in 0..source.order() {
                if self.map[source.mul(x, y)] != target.mul(self.map[x], self.map[y]) {
                    return false;
                }
            }
        }
        true
    }
}

/// Backtracking over images of `g`'s minimal generating set. Each assignment
/// is extended to a full map by closure; consistent complete bijections that
/// verify as homomorphisms are collected.
fn iso_search(g: &FiniteGroup, h: &FiniteGroup, first_only: bool) -> Vec<GroupIso> {
    let gens = g.minimal_generating_set();
    if gens.is_empty() {
        return vec![GroupIso { map: vec![0] }]
            .into_iter()
            .filter(|_| h.order() == 1)
            .collect();
    }
    let n = g.order();
    let h_orders: Vec<usize> = (0..h.order()).map(|x| h.element_order(x)).collect();
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&gen| {
            let o = g.element_order(gen);
            (0..h.order()).filter(|&y| h_orders[y] == o).collect()
        })
        .collect();
    let mut found = Vec::new();
    let mut choice = vec![0usize; gens.len()];
    let mut depth = 0usize;
    'outer: loop {
        if depth == gens.len() {
            let imgs: Vec<usize> = (0..gens.len()).map(|i| candidates[i][choice[i]]).collect();
            if let Some(map) = extend_hom(g, h, &gens, &imgs) {
                found.push(GroupIso { map });
                if first_only {
                    return found;
                }
            }
            // backtrack
            loop {
                if depth == 0 {
                    break 'outer;
                }
                depth -= 1;
                choice[depth] += 1;
                if choice[depth] < candidates[depth].len() {
                    depth += 1;
                    continue 'outer;
                }
                choice[depth] = 0;
            }
        } else {
            depth += 1;
        }
    }
    let _ = n;
    found
}

/// Extends generator images to a full map via BFS products; returns the map
/// if it is a bijective homomorphism.
fn extend_hom(
    g: &FiniteGroup,
    h: &FiniteGroup,
    gens: &[usize],
    imgs: &[usize],
) -> Option<Vec<usize>> {
    let n = g.order();
    const UNSET: usize = usize::MAX;
    let mut map = vec![UNSET; n];
    map[g.identity()] = h.identity();
    let mut frontier = vec![g.identity()];
    let mut assigned = 1usize;
    while let Some(x) = frontier.pop() {
        for (&gen, &im) in gens.iter().zip(imgs) {
            let y = g.mul(x, gen);
            let fy = h.mul(map[x], im);
            if map[y] == UNSET {
                map[y] = fy;
                assigned += 1;
                frontier.push(y);
            } else if map[y] != fy {
                return None;
            }
        }
    }
    if assigned != n {
        return None;
    }
    let mut seen = vec![false; n];
    for &v in &map {
        if seen[v] {
            return None;
        }
        seen[v] = true;
    }
    for x in 0..n {
        for y in 0..n {
            if map[g.mul(x, y)] != h.mul(map[x], map[y]) {
                return None;
            }
        }
    }
    Some(map)
}
