//! Cochains over `ℤ_p` and the 1-/2-cocycle conditions.
//!
//! A 1-cochain is a function `f : X³ → ℤ_p` stored densely in lexicographic
//! tuple order; a 2-cochain has arity 4. The cocycle conditions are the
//! printed identities of the flock complex: condition (1) forces vanishing on
//! degenerate tuples, condition (2) is `f∘∂ = 0` expanded term by term.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::homology::boundary;
use crate::ternary::FlockSpec;

/// Dense values of a cochain `f : X^arity → ℤ_p`.
#[derive(Clone, PartialEq, Eq)]
pub struct CochainTable {
    pub arity: usize,
    pub order: usize,
    /// Modulus `p > 0`; 0 would mean integer coefficients, which the solvers
    /// here do not use.
    pub modulus: u32,
    /// `values[((..)*n + y)*n + z]`, reduced mod `p`.
    pub values: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CochainError {
    ArityMismatch { expected: usize, got: usize },
    Shape { expected: usize, got: usize },
    BadModulus { modulus: u32 },
    ValueOutOfRange { value: u32, modulus: u32 },
    SizeBudgetExceeded { cells: u128, budget: u128 },
}

impl fmt::Display for CochainError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CochainError::ArityMismatch { expected, got } => {
                write!(f, "expected arity {expected}, got {got}")
            }
            CochainError::Shape { expected, got } => {
                write!(f, "expected {expected} values, got {got}")
            }
            CochainError::BadModulus { modulus } => write!(f, "bad modulus {modulus}"),
            CochainError::ValueOutOfRange { value, modulus } => {
                write!(f, "value {value} not reduced mod {modulus}")
            }
            CochainError::SizeBudgetExceeded { cells, budget } => {
                write!(f, "system of {cells} cells exceeds budget {budget}")
            }
        }
    }
}

impl core::error::Error for CochainError {}

/// First failing cocycle condition: which condition (1 or 2) and at which
/// tuple of group elements (0-based).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CocycleWitness {
    pub condition: u8,
    pub tuple: Vec<usize>,
}

impl fmt::Display for CocycleWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "condition ({}) fails at (", self.condition)?;
        for (i, &x) in self.tuple.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", x + 1)?;
        }
        write!(f, ")")
    }
}

impl CochainTable {
    pub fn zero(arity: usize, order: usize, modulus: u32) -> Self {
        CochainTable {
            arity,
            order,
            modulus,
            values: vec![0; order.pow(arity as u32)],
        }
    }

    pub fn from_values(
        arity: usize,
        order: usize,
        modulus: u32,
        values: Vec<u32>,
    ) -> Result<Self, CochainError> {
        if modulus == 0 {
            return Err(CochainError::BadModulus { modulus });
        }
        let expected = order.pow(arity as u32);
        if values.len() != expected {
            return Err(CochainError::Shape {
                expected,
                got: values.len(),
            });
        }
        if let Some(&v) = values.iter().find(|&&v| v >= modulus) {
            return Err(CochainError::ValueOutOfRange {
                value: v,
                modulus,
            });
        }
        Ok(CochainTable {
            arity,
            order,
            modulus,
            values,
        })
    }

    #[inline]
    pub fn index(&self, tuple: &[usize]) -> usize {
        tuple.iter().fold(0, |acc, &x| acc * self.order + x)
    }

    #[inline]
    pub fn value(&self, tuple: &[usize]) -> u32 {
        self.values[self.index(tuple)]
    }

    /// Evaluates on a formal integer combination of tuples, mod `p`.
    pub fn evaluate(&self, chain: &crate::homology::Chain) -> Result<u32, CochainError> {
        if chain.arity != self.arity {
            return Err(CochainError::ArityMismatch {
                expected: self.arity,
                got: chain.arity,
            });
        }
        let p = self.modulus as i64;
        let mut acc: i64 = 0;
        for (tuple, &coeff) in &chain.terms {
            acc = (acc + coeff.rem_euclid(p) * self.value(tuple) as i64).rem_euclid(p);
        }
        Ok(acc as u32)
    }
}

impl fmt::Debug for CochainTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "CochainTable(arity {}, order {}, mod {})",
            self.arity, self.order, self.modulus
        )
    }
}

/// 1-cocycle check: condition (1) `f(a, b, b·a⁻¹·b·k) = 0` over all pairs,
/// then condition (2), the six-term identity, over all quadruples.
pub fn check_1cocycle(spec: &FlockSpec, f: &CochainTable) -> Result<Option<CocycleWitness>, CochainError> {
    if f.arity != 3 {
        return Err(CochainError::ArityMismatch {
            expected: 3,
            got: f.arity,
        });
    }
    let g = &spec.group;
    let n = g.order();
    let k = spec.b;
    let p = f.modulus as i64;
    let w = |x: usize, y: usize, z: usize, kp: bool| -> usize {
        let v = g.mul(g.mul(x, g.inv(y)), z);
        if kp {
            g.mul(v, k)
        } else {
            v
        }
    };
    for a in 0..n {
        for b in 0..n {
            if f.value(&[a, b, w(b, a, b, true)]) != 0 {
                return Ok(Some(CocycleWitness {
                    condition: 1,
                    tuple: vec![a, b],
                }));
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    let abck = w(a, b, c, true);
                    let abd = w(a, b, d, false);
                    let bcdk = w(b, c, d, true);
                    let acd = w(a, c, d, false);
                    let total = f.value(&[b, c, d]) as i64
                        - f.value(&[a, abck, abd]) as i64
                        - f.value(&[abck, c, d]) as i64
                        + f.value(&[a, b, bcdk]) as i64
                        + f.value(&[acd, bcdk, d]) as i64
                        - f.value(&[a, b, c]) as i64;
                    if total.rem_euclid(p) != 0 {
                        return Ok(Some(CocycleWitness {
                            condition: 2,
                            tuple: vec![a, b, c, d],
                        }));
                    }
                }
            }
        }
    }
    Ok(None)
}

/// 2-cocycle check: condition (1), both degenerate-slot patterns
/// `φ(a,b,b·a⁻¹·b·k,c) = φ(c,a,b,b·a⁻¹·b·k) = 0`, then the eight-term
/// condition (2) over all quintuples.
pub fn check_2cocycle(spec: &FlockSpec, f: &CochainTable) -> Result<Option<CocycleWitness>, CochainError> {
    if f.arity != 4 {
        return Err(CochainError::ArityMismatch {
            expected: 4,
            got: f.arity,
        });
    }
    let g = &spec.group;
    let n = g.order();
    let k = spec.b;
    let p = f.modulus as i64;
    let w = |x: usize, y: usize, z: usize, kp: bool| -> usize {
        let v = g.mul(g.mul(x, g.inv(y)), z);
        if kp {
            g.mul(v, k)
        } else {
            v
        }
    };
    for a in 0..n {
        for b in 0..n {
            let deg = w(b, a, b, true);
            for c in 0..n {
                if f.value(&[a, b, deg, c]) != 0 || f.value(&[c, a, b, deg]) != 0 {
                    return Ok(Some(CocycleWitness {
                        condition: 1,
                        tuple: vec![a, b, c],
                    }));
                }
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    for e in 0..n {
                        let abck = w(a, b, c, true);
                        let abd = w(a, b, d, false);
                        let abek = w(a, b, e, true);
                        let bcdk = w(b, c, d, true);
                        let bce = w(b, c, e, false);
                        let acd = w(a, c, d, false);
                        let cdek = w(c, d, e, true);
                        let adek = w(a, d, e, true);
                        let bde = w(b, d, e, false);
                        let total = f.value(&[b, c, d, e]) as i64
                            - f.value(&[a, abck, abd, abek]) as i64
                            - f.value(&[abck, c, d, e]) as i64
                            + f.value(&[a, b, bcdk, bce]) as i64
                            + f.value(&[acd, bcdk, d, e]) as i64
                            - f.value(&[a, b, c, cdek]) as i64
                            - f.value(&[adek, bde, cdek, e]) as i64
                            + f.value(&[a, b, c, d]) as i64;
                        if total.rem_euclid(p) != 0 {
                            return Ok(Some(CocycleWitness {
                                condition: 2,
                                tuple: vec![a, b, c, d, e],
                            }));
                        }
                    }
                }
            }
        }
    }
    Ok(None)
}

/// Coboundary of a 1-cochain: `(δg)(t) = g(∂t)` on arity-4 tuples.
pub fn coboundary_1(spec: &FlockSpec, g: &CochainTable) -> Result<CochainTable, CochainError> {
    if g.arity != 3 {
        return Err(CochainError::ArityMismatch {
            expected: 3,
            got: g.arity,
        });
    }
    let n = g.order;
    let mut out = CochainTable::zero(4, n, g.modulus);
    let total = n.pow(4);
    for code in 0..total {
        let mut t = [0usize; 4];
        let mut c = code;
        for slot in (0..4).rev() {
            t[slot] = c % n;
            c /= n;
        }
        let b = boundary(spec, &t);
        out.values[code] = g.evaluate(&b)?;
    }
    Ok(out)
}

/// Deterministic echelon basis of the space of 1-cocycles mod `p`:
/// all solutions of conditions (1) and (2) as a linear system in the
/// `|X|³` unknown values.
///
/// The system is hugely redundant (`|X|⁴` six-term equations against `|X|³`
/// unknowns), so rows are not eliminated eagerly. Instead the solver keeps a
/// reduced echelon pivot set, reads off a candidate null basis, and sweeps
/// the sparse equations against it; only equations the candidate violates
/// (which are exactly the ones independent of the pivot rows) get a dense
/// insertion. Row arithmetic defers the modulus: entries accumulate in `u32`
/// via plain multiply-adds and are normalized once per pass.
pub fn cocycle_space_1(
    spec: &FlockSpec,
    p: u32,
    cell_budget: u128,
) -> Result<Vec<CochainTable>, CochainError> {
    if p < 2 || p > 8191 {
        return Err(CochainError::BadModulus { modulus: p });
    }
    let g = &spec.group;
    let n = g.order();
    let k = spec.b;
    let unknowns = n * n * n;
    let rows_estimate = (n * n) as u128 + (n as u128).pow(4);
    let cells = rows_estimate * unknowns as u128;
    if cells > cell_budget {
        return Err(CochainError::SizeBudgetExceeded {
            cells,
            budget: cell_budget,
        });
    }
    let w = |x: usize, y: usize, z: usize, kp: bool| -> usize {
        let v = g.mul(g.mul(x, g.inv(y)), z);
        if kp {
            g.mul(v, k)
        } else {
            v
        }
    };
    let idx = |x: usize, y: usize, z: usize| (x * n + y) * n + z;

    // sparse equation list: condition (1) pins, then the six-term rows
    let mut equations: Vec<Vec<(usize, u32)>> = Vec::with_capacity(n * n + n.pow(4));
    for a in 0..n {
        for b in 0..n {
            equations.push(vec![(idx(a, b, w(b, a, b, true)), 1)]);
        }
    }
    let minus = p - 1;
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    let abck = w(a, b, c, true);
                    let mut row: Vec<(usize, u32)> = Vec::with_capacity(6);
                    let mut add = |col: usize, coeff: u32, row: &mut Vec<(usize, u32)>| {
                        match row.iter_mut().find(|(cc, _)| *cc == col) {
                            Some((_, v)) => *v = (*v + coeff) % p,
                            None => row.push((col, coeff)),
                        }
                    };
                    add(idx(b, c, d), 1, &mut row);
                    add(idx(a, abck, w(a, b, d, false)), minus, &mut row);
                    add(idx(abck, c, d), minus, &mut row);
                    add(idx(a, b, w(b, c, d, true)), 1, &mut row);
                    add(idx(w(a, c, d, false), w(b, c, d, true), d), 1, &mut row);
                    add(idx(a, b, c), minus, &mut row);
                    row.retain(|&(_, v)| v != 0);
                    if !row.is_empty() {
                        equations.push(row);
                    }
                }
            }
        }
    }

    let mut solver = NullSpaceSolver::new(unknowns, p);
    // seed with the single-entry pins; the sweep loop handles the rest
    let mut sweep_start = 0usize;
    loop {
        let basis = solver.null_basis();
        let mut inserted = 0usize;
        let mut all_clean = true;
        // deterministic sweep from the top every time
        for eq in &equations {
            let violated = basis.iter().any(|v| {
                let mut acc: u64 = 0;
                for &(col, coeff) in eq {
                    acc += coeff as u64 * v[col] as u64;
                }
                acc % p as u64 != 0
            });
            if violated {
                all_clean = false;
                solver.insert_sparse(eq);
                inserted += 1;
                if inserted >= 512 {
                    break;
                }
            }
        }
        let _ = sweep_start;
        sweep_start += 1;
        if all_clean {
            let mut out = Vec::with_capacity(basis.len());
            for v in basis {
                out.push(CochainTable {
                    arity: 3,
                    order: n,
                    modulus: p,
                    values: v,
                });
            }
            return Ok(out);
        }
    }
}

/// Incremental reduced row echelon form over `ℤ_p` with deferred
/// normalization: rows accumulate plain `u32` multiply-adds and are reduced
/// mod `p` once per pass, so the hot loops vectorize.
struct NullSpaceSolver {
    unknowns: usize,
    p: u32,
    /// `pivot_row[c]` = Some(fully reduced row with leading 1 at column c).
    pivot_rows: Vec<Option<Vec<u32>>>,
    pivot_cols: Vec<usize>,
}

impl NullSpaceSolver {
    fn new(unknowns: usize, p: u32) -> Self {
        NullSpaceSolver {
            unknowns,
            p,
            pivot_rows: vec![None; unknowns],
            pivot_cols: Vec::new(),
        }
    }

    fn insert_sparse(&mut self, eq: &[(usize, u32)]) {
        let mut row = vec![0u32; self.unknowns];
        for &(col, coeff) in eq {
            row[col] = coeff % self.p;
        }
        self.insert_dense(row);
    }

    fn insert_dense(&mut self, mut row: Vec<u32>) {
        let p = self.p;
        // entries accumulate un-normalized between passes; each axpy adds at
        // most (p-1)^2 per entry, so a counter bounds the growth
        let max_axpys = ((u32::MAX - (p - 1)) / ((p - 1) * (p - 1))).max(1);
        let mut since_norm = 0u32;
        let mut scan = 0usize;
        loop {
            // leading nonzero (mod p), scanning canonically from `scan`
            let mut lead = None;
            while scan < self.unknowns {
                let v = row[scan] % p;
                row[scan] = v;
                if v != 0 {
                    lead = Some(scan);
                    break;
                }
                scan += 1;
            }
            let Some(lead) = lead else {
                return; // dependent row
            };
            match &self.pivot_rows[lead] {
                Some(pr) => {
                    // row += (p - f) * pivot, deferring the modulus
                    if since_norm >= max_axpys {
                        for r in row[lead..].iter_mut() {
                            *r %= p;
                        }
                        since_norm = 0;
                    }
                    let f = row[lead];
                    let mult = p - f;
                    for (r, &pv) in row[lead..].iter_mut().zip(&pr[lead..]) {
                        *r += mult * pv;
                    }
                    since_norm += 1;
                    debug_assert_eq!(row[lead] % p, 0);
                }
                None => {
                    // normalize the whole row and scale to a leading 1
                    for r in row.iter_mut() {
                        *r %= p;
                    }
                    let inv = mod_inverse(row[lead], p) as u64;
                    for r in row.iter_mut() {
                        *r = (*r as u64 * inv % p as u64) as u32;
                    }
                    // keep the pivot set fully reduced: clear this column
                    // from every existing pivot row
                    for &c in &self.pivot_cols {
                        let pr = self.pivot_rows[c].as_mut().unwrap();
                        let f = pr[lead];
                        if f != 0 {
                            let mult = p - f;
                            for (r, &pv) in pr[lead..].iter_mut().zip(&row[lead..]) {
                                *r = (*r + mult * pv) % p;
                            }
                        }
                    }
                    self.pivot_rows[lead] = Some(row);
                    self.pivot_cols.push(lead);
                    return;
                }
            }
        }
    }

    /// One basis vector per free column, in ascending column order.
    fn null_basis(&self) -> Vec<Vec<u32>> {
        let p = self.p;
        let mut basis = Vec::new();
        for free in 0..self.unknowns {
            if self.pivot_rows[free].is_some() {
                continue;
            }
            let mut v = vec![0u32; self.unknowns];
            v[free] = 1;
            for &c in &self.pivot_cols {
                let pr = self.pivot_rows[c].as_ref().unwrap();
                let coeff = pr[free] % p;
                if coeff != 0 {
                    v[c] = p - coeff;
                }
            }
            basis.push(v);
        }
        basis
    }
}

fn mod_inverse(a: u32, p: u32) -> u32 {
    // p is prime in all callers; Fermat
    let mut result: u64 = 1;
    let mut base = a as u64 % p as u64;
    let mut e = p as u64 - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    result as u32
}
