//! Loops and extra loops: Latin squares with identity, the doubling
//! construction `M(G, 2)`, associators, nucleus, and loop center.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::group::FiniteGroup;

/// A loop: a quasigroup with a two-sided identity.
#[derive(Clone, PartialEq, Eq)]
pub struct LoopTable {
    order: usize,
    /// Row-major, 0-based.
    table: Vec<usize>,
    identity: usize,
    left_inverse: Vec<usize>,
    right_inverse: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LoopError {
    Shape { row: usize, len: usize, order: usize },
    NotLatin { row: usize, col: usize },
    NoIdentity,
    ElementOutOfRange { element: usize, order: usize },
    /// The loop is not an extra loop; carries the first failing triple (1-based).
    NotExtraLoop { x: usize, y: usize, z: usize },
    /// The designated element is not a central element of order ≤ 2 (1-based).
    KNotCentralInvolution { k: usize },
}

impl fmt::Display for LoopError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LoopError::Shape { row, len, order } => {
                write!(f, "row {row} has {len} entries, expected {order}")
            }
            LoopError::NotLatin { row, col } => {
                write!(f, "not a Latin square: duplicate at row {row}, column {col}")
            }
            LoopError::NoIdentity => write!(f, "no identity element"),
            LoopError::ElementOutOfRange { element, order } => {
                write!(f, "element {element} out of range 1..={order}")
            }
            LoopError::NotExtraLoop { x, y, z } => {
                write!(f, "not an extra loop: identity fails at ({x},{y},{z})")
            }
            LoopError::KNotCentralInvolution { k } => {
                write!(f, "element {k} is not central of order one or two")
            }
        }
    }
}

impl core::error::Error for LoopError {}

impl LoopTable {
    /// Validates a Latin square with identity, given as 1-based rows.
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self, LoopError> {
        let n = rows.len();
        if n == 0 {
            return Err(LoopError::NoIdentity);
        }
        let mut table = vec![0usize; n * n];
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(LoopError::Shape {
                    row: i + 1,
                    len: row.len(),
                    order: n,
                });
            }
            for (j, &v) in row.iter().enumerate() {
                if v == 0 || v > n {
                    return Err(LoopError::ElementOutOfRange {
                        element: v,
                        order: n,
                    });
                }
                table[i * n + j] = v - 1;
            }
        }
        Self::from_table0(table, n)
    }

    pub fn from_table0(table: Vec<usize>, n: usize) -> Result<Self, LoopError> {
        for i in 0..n {
            let mut seen = vec![false; n];
            for j in 0..n {
                let v = table[i * n + j];
                if seen[v] {
                    return Err(LoopError::NotLatin {
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
                    return Err(LoopError::NotLatin {
                        row: i + 1,
                        col: j + 1,
                    });
                }
                seen[v] = true;
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e * n + x] == x && table[x * n + e] == x))
            .ok_or(LoopError::NoIdentity)?;
        let mut left_inverse = vec![0usize; n];
        let mut right_inverse = vec![0usize; n];
        for x in 0..n {
            left_inverse[x] = (0..n).find(|&y| table[y * n + x] == identity).unwrap();
            right_inverse[x] = (0..n).find(|&y| table[x * n + y] == identity).unwrap();
        }
        Ok(LoopTable {
            order: n,
            table,
            identity,
            left_inverse,
            right_inverse,
        })
    }

    /// Views a group as a loop. Any group is an extra loop.
    pub fn from_group(g: &FiniteGroup) -> Self {
        let n = g.order();
        let table = (0..n)
            .flat_map(|x| (0..n).map(move |y| g.mul(x, y)))
            .collect();
        Self::from_table0(table, n).expect("group tables are loops")
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.table[x * self.order + y]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn left_inverse(&self, x: usize) -> usize {
        self.left_inverse[x]
    }

    pub fn right_inverse(&self, x: usize) -> usize {
        self.right_inverse[x]
    }

    pub fn rows_1based(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|i| (0..self.order).map(|j| self.mul(i, j) + 1).collect())
            .collect()
    }

    pub fn is_associative(&self) -> bool {
        let n = self.order;
        (0..n).all(|x| {
            (0..n).all(|y| (0..n).all(|z| self.mul(self.mul(x, y), z) == self.mul(x, self.mul(y, z))))
        })
    }

    /// First triple falsifying one of the three equivalent extra-loop
    /// identities, scanning identity 1 then 2 then 3 in lexicographic order.
    pub fn extra_loop_witness(&self) -> Option<(usize, usize, usize)> {
        let n = self.order;
        for check in 0..3 {
            for x in 0..n {
                for y in 0..n {
                    for z in 0..n {
                        if !self.extra_identity_holds(check, x, y, z) {
                            return Some((x, y, z));
                        }
                    }
                }
            }
        }
        None
    }

    fn extra_identity_holds(&self, which: usize, x: usize, y: usize, z: usize) -> bool {
        let m = |a, b| self.mul(a, b);
        match which {
            // (x*(y*z))*y = (x*y)*(z*y)
            0 => m(m(x, m(y, z)), y) == m(m(x, y), m(z, y)),
            // (y*z)*(y*x) = y*((z*y)*x)
            1 => m(m(y, z), m(y, x)) == m(y, m(m(z, y), x)),
            // ((x*y)*z)*x = x*(y*(z*x))
            _ => m(m(m(x, y), z), x) == m(x, m(y, m(z, x))),
        }
    }

    pub fn is_extra_loop(&self) -> bool {
        self.extra_loop_witness().is_none()
    }

    /// Whether the three defining identities hold-or-fail together on this
    /// loop. They are equivalent, so this must be true on every loop; exposed
    /// so tests can assert the equivalence on concrete tables.
    pub fn extra_identities_agree(&self) -> bool {
        let n = self.order;
        let holds = |which: usize| {
            (0..n).all(|x| {
                (0..n).all(|y| (0..n).all(|z| self.extra_identity_holds(which, x, y, z)))
            })
        };
        holds(0) == holds(1) && holds(1) == holds(2)
    }

    /// Unique solution of `(x*y)*z = (x,y,z) * (x*(y*z))`.
    pub fn associator(&self, x: usize, y: usize, z: usize) -> usize {
        let lhs = self.mul(self.mul(x, y), z);
        let rhs = self.mul(x, self.mul(y, z));
        // solve a * rhs = lhs
        (0..self.order)
            .find(|&a| self.mul(a, rhs) == lhs)
            .expect("Latin square")
    }

    /// Elements whose associator with every pair vanishes in all three slots.
    pub fn nucleus(&self) -> Vec<usize> {
        let n = self.order;
        let e = self.identity;
        (0..n)
            .filter(|&x| {
                (0..n).all(|y| {
                    (0..n).all(|z| {
                        self.associator(x, y, z) == e
                            && self.associator(y, x, z) == e
                            && self.associator(y, z, x) == e
                    })
                })
            })
            .collect()
    }

    /// Nucleus elements commuting with everything.
    pub fn loop_center(&self) -> Vec<usize> {
        let n = self.order;
        self.nucleus()
            .into_iter()
            .filter(|&x| (0..n).all(|y| self.mul(x, y) == self.mul(y, x)))
            .collect()
    }

    /// Central elements of order one or two: the valid `k` parameters for the
    /// ternary operations on extra loops.
    pub fn central_involutions(&self) -> Vec<usize> {
        self.loop_center()
            .into_iter()
            .filter(|&x| self.mul(x, x) == self.identity)
            .collect()
    }
}

impl fmt::Debug for LoopTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LoopTable(order {})", self.order)
    }
}

/// The doubling construction on a group `G`: the loop on `G × {0, 1}` with
/// `(g,0)(h,0)=(gh,0)`, `(g,0)(h,1)=(hg,1)`, `(g,1)(h,0)=(gh⁻¹,1)`,
/// `(g,1)(h,1)=(h⁻¹g,0)`. Nonassociative Moufang exactly when `G` is
/// nonabelian; an extra loop for `G` dihedral of order 8.
pub fn m_construction(g: &FiniteGroup) -> LoopTable {
    let n = g.order();
    let idx = |x: usize, i: usize| i * n + x;
    let mut table = vec![0usize; 4 * n * n];
    for x in 0..n {
        for i in 0..2 {
            for y in 0..n {
                for j in 0..2 {
                    let v = match (i, j) {
                        (0, 0) => idx(g.mul(x, y), 0),
                        (0, 1) => idx(g.mul(y, x), 1),
                        (1, 0) => idx(g.mul(x, g.inv(y)), 1),
                        _ => idx(g.mul(g.inv(y), x), 0),
                    };
                    table[idx(x, i) * 2 * n + idx(y, j)] = v;
                }
            }
        }
    }
    LoopTable::from_table0(table, 2 * n).expect("doubling yields a loop")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn groups_are_extra_loops() {
        for g in [families::cyclic(5), families::dihedral(3), families::quaternion()] {
            let l = LoopTable::from_group(&g);
            assert!(l.is_extra_loop());
            assert!(l.extra_identities_agree());
        }
    }

    #[test]
    fn doubling_of_abelian_is_a_group() {
        let l = m_construction(&families::cyclic(4));
        assert!(l.is_associative());
        assert!(l.is_extra_loop());
    }

    #[test]
    fn doubling_of_trivial_group_is_z2() {
        let l = m_construction(&families::cyclic(1));
        assert_eq!(l.order(), 2);
        assert!(l.is_associative());
    }

    #[test]
    fn doubling_of_d4_is_nonassociative_extra_loop() {
        let l = m_construction(&families::dihedral(4));
        assert_eq!(l.order(), 16);
        assert!(!l.is_associative());
        assert!(l.is_extra_loop());
        assert!(l.extra_identities_agree());
    }

    #[test]
    fn doubling_of_d4_has_nonidentity_central_involution() {
        let l = m_construction(&families::dihedral(4));
        let invs = l.central_involutions();
        assert!(invs.iter().any(|&k| k != l.identity()));
    }

    #[test]
    fn doubling_of_s3_is_moufang_but_not_extra() {
        let l = m_construction(&families::symmetric(3));
        assert!(!l.is_associative());
        assert!(!l.is_extra_loop());
        assert!(l.extra_loop_witness().is_some());
    }

    #[test]
    fn associator_trivial_on_groups() {
        let l = LoopTable::from_group(&families::dihedral(4));
        for x in 0..8 {
            for y in 0..8 {
                for z in 0..8 {
                    assert_eq!(l.associator(x, y, z), l.identity());
                }
            }
        }
    }

    #[test]
    fn center_inside_nucleus() {
        for l in [
            m_construction(&families::dihedral(4)),
            m_construction(&families::symmetric(3)),
            LoopTable::from_group(&families::dicyclic(3)),
        ] {
            let nuc = l.nucleus();
            for z in l.loop_center() {
                assert!(nuc.contains(&z));
            }
        }
    }

    #[test]
    fn nonassociative_loop_of_order_5_rejected_as_extra() {
        // A loop of order 5 found by a brute-force Latin-square search; it
        // cannot be a group (no group of order 5 is nonassociative) and the
        // extra-loop identity fails.
        let rows = [
            vec![1, 2, 3, 4, 5],
            vec![2, 1, 4, 5, 3],
            vec![3, 4, 5, 1, 2],
            vec![4, 5, 2, 3, 1],
            vec![5, 3, 1, 2, 4],
        ];
        let l = LoopTable::from_rows(&rows).unwrap();
        assert!(!l.is_extra_loop());
        assert!(l.extra_identities_agree());
    }
}
