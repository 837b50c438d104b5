//! Standard finite-group families: cyclic, dihedral, dicyclic, semidirect and
//! direct products, symmetric/alternating, and the sporadic small 2-groups.
//!
//! These back the shipped catalog of nonabelian groups up to order 24 and the
//! unit tests. Every constructor goes through full table validation.

use alloc::vec;
use alloc::vec::Vec;

use crate::group::{FiniteGroup, GroupError};

fn build<E: Clone + PartialEq>(elems: Vec<E>, mul: impl Fn(&E, &E) -> E) -> FiniteGroup {
    let n = elems.len();
    let mut table = vec![0usize; n * n];
    for i in 0..n {
        for j in 0..n {
            let r = mul(&elems[i], &elems[j]);
            let k = elems.iter().position(|e| *e == r).expect("closed");
            table[i * n + j] = k;
        }
    }
    FiniteGroup::from_table0(table, n).expect("family construction is a group")
}

/// Cyclic group of order `n` (element 1 is the identity).
pub fn cyclic(n: usize) -> FiniteGroup {
    assert!(n > 0);
    build((0..n).collect(), |a, b| (a + b) % n)
}

/// Dihedral group of order `2m`: rotations and reflections of an `m`-gon.
pub fn dihedral(m: usize) -> FiniteGroup {
    assert!(m >= 2);
    let elems: Vec<(usize, usize)> = (0..2).flat_map(|s| (0..m).map(move |r| (r, s))).collect();
    build(elems, move |&(r1, s1), &(r2, s2)| {
        let r = if s1 == 0 { r1 + r2 } else { r1 + m - r2 };
        (r % m, (s1 + s2) % 2)
    })
}

/// Dicyclic group of order `4m`: `⟨a, b | a^{2m} = e, b² = aᵐ, b·a·b⁻¹ = a⁻¹⟩`.
/// `dicyclic(2)` is the quaternion group.
pub fn dicyclic(m: usize) -> FiniteGroup {
    assert!(m >= 2);
    let n2 = 2 * m;
    let elems: Vec<(usize, usize)> = (0..2).flat_map(|s| (0..n2).map(move |r| (r, s))).collect();
    build(elems, move |&(r1, s1), &(r2, s2)| {
        if s1 == 0 {
            ((r1 + r2) % n2, s2)
        } else {
            let r = (r1 + n2 - r2) % n2;
            if s2 == 0 {
                (r, 1)
            } else {
                ((r + m) % n2, 0)
            }
        }
    })
}

/// The quaternion group of order 8.
pub fn quaternion() -> FiniteGroup {
    dicyclic(2)
}

/// `C_m ⋊ C_k` with the action `x ↦ t·x (mod m)`; errors unless `t^k ≡ 1`.
pub fn semidirect_cyclic(m: usize, k: usize, t: usize) -> Result<FiniteGroup, GroupError> {
    let mut tk = 1usize;
    for _ in 0..k {
        tk = tk * t % m;
    }
    if tk != 1 % m {
        return Err(GroupError::NotAssociative { x: 1, y: 1, z: 1 });
    }
    let mut pow = vec![1usize; k];
    for j in 1..k {
        pow[j] = pow[j - 1] * t % m;
    }
    let elems: Vec<(usize, usize)> = (0..k).flat_map(|j| (0..m).map(move |x| (x, j))).collect();
    Ok(build(elems, move |&(x, j), &(y, l)| {
        ((x + y * pow[j]) % m, (j + l) % k)
    }))
}

/// Direct product, elements ordered `(a, b)` with `b` varying fastest.
pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> FiniteGroup {
    let (n, m) = (g.order(), h.order());
    let elems: Vec<(usize, usize)> = (0..n).flat_map(|a| (0..m).map(move |b| (a, b))).collect();
    build(elems, |&(a, b), &(c, d)| (g.mul(a, c), h.mul(b, d)))
}

/// Generalized dihedral group of an abelian group: `G ⋊ C2` with inversion.
pub fn generalized_dihedral(g: &FiniteGroup) -> FiniteGroup {
    assert!(g.is_abelian());
    let n = g.order();
    let elems: Vec<(usize, usize)> = (0..2).flat_map(|s| (0..n).map(move |x| (x, s))).collect();
    build(elems, |&(x, s1), &(y, s2)| {
        let yy = if s1 == 0 { y } else { g.inv(y) };
        (g.mul(x, yy), (s1 + s2) % 2)
    })
}

/// Symmetric group on `n` points (as permutation words, left-to-right products).
pub fn symmetric(n: usize) -> FiniteGroup {
    assert!((1..=5).contains(&n));
    build(perms_of(n, None), |p, q| compose(p, q))
}

/// Alternating group on `n` points.
pub fn alternating(n: usize) -> FiniteGroup {
    assert!((3..=5).contains(&n));
    build(perms_of(n, Some(0)), |p, q| compose(p, q))
}

fn compose(p: &Vec<usize>, q: &Vec<usize>) -> Vec<usize> {
    p.iter().map(|&i| q[i]).collect()
}

fn perms_of(n: usize, parity: Option<usize>) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        let inversions = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| cur[i] > cur[j])
            .count();
        if parity.is_none_or(|p| inversions % 2 == p) {
            out.push(cur.clone());
        }
        // next lexicographic permutation
        let Some(i) = (0..n - 1).rev().find(|&i| cur[i] < cur[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
    out
}

/// `SL(2, 3)`: 2×2 matrices over the field with three elements, determinant 1.
pub fn sl_2_3() -> FiniteGroup {
    let mut elems = Vec::new();
    for a in 0..3usize {
        for b in 0..3usize {
            for c in 0..3usize {
                for d in 0..3usize {
                    if (3 + a * d % 3 - b * c % 3) % 3 == 1 {
                        elems.push([a, b, c, d]);
                    }
                }
            }
        }
    }
    assert_eq!(elems.len(), 24);
    build(elems, |x, y| {
        [
            (x[0] * y[0] + x[1] * y[2]) % 3,
            (x[0] * y[1] + x[1] * y[3]) % 3,
            (x[2] * y[0] + x[3] * y[2]) % 3,
            (x[2] * y[1] + x[3] * y[3]) % 3,
        ]
    })
}

/// The central product `Q8 ∘ C4` of order 16 (Pauli group).
pub fn central_product_q8_c4() -> FiniteGroup {
    let q8 = quaternion();
    let minus_one = q8.mul(1, 1); // a² for the order-4 generator a = element 1
    let elems: Vec<(usize, usize)> = (0..8).flat_map(|q| (0..2).map(move |i| (q, i))).collect();
    build(elems, move |&(q, i), &(p, j)| {
        let mut r = q8.mul(q, p);
        if i + j >= 2 {
            r = q8.mul(r, minus_one);
        }
        (r, (i + j) % 2)
    })
}

/// `(C4 × C2) ⋊ C2` of order 16, with the involution acting by `a ↦ ab`.
pub fn c4_c2_semidirect_c2() -> FiniteGroup {
    let elems: Vec<(usize, usize, usize)> = (0..2)
        .flat_map(|l| (0..2).flat_map(move |j| (0..4).map(move |i| (i, j, l))))
        .collect();
    build(elems, |&(i, j, l), &(i2, j2, l2)| {
        let j2p = if l == 1 { (i2 + j2) % 2 } else { j2 };
        ((i + i2) % 4, (j + j2p) % 2, (l + l2) % 2)
    })
}

/// `C4 ⋊ C4` of order 16 (the odd powers of the second factor invert the first).
pub fn c4_semidirect_c4() -> FiniteGroup {
    let elems: Vec<(usize, usize)> = (0..4).flat_map(|j| (0..4).map(move |i| (i, j))).collect();
    build(elems, |&(i, j), &(i2, j2)| {
        let ii = if j % 2 == 0 { i + i2 } else { i + 4 - i2 };
        (ii % 4, (j + j2) % 4)
    })
}

/// `C3 ⋊ D4` of order 24 with the rotation inverting and reflections centralizing.
pub fn c3_semidirect_d4() -> FiniteGroup {
    let elems: Vec<(usize, usize, usize)> = (0..2)
        .flat_map(|j| (0..4).flat_map(move |i| (0..3).map(move |x| (x, i, j))))
        .collect();
    build(elems, |&(x, i, j), &(y, i2, j2)| {
        let yy = if i % 2 == 0 { y } else { (3 - y) % 3 };
        let ii = if j == 0 { i + i2 } else { i + 4 - i2 };
        ((x + yy) % 3, ii % 4, (j + j2) % 2)
    })
}
