//! Region colorings of closed-braid diagrams and group actions on them.
//!
//! Enumeration is brute force over the top-gap tuples: colors propagate down
//! through the crossings by the calibrated relation (`d = [a b c]` at positive
//! crossings, `d = [c b a]` at negative ones) and a tuple survives iff the
//! closure identifications hold. Worst case in scope is `12⁶` tuples, which is
//! well within desk scale.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::braid::ClosedBraidDiagram;
use crate::ternary::TernaryTable;

/// A valid region coloring: one element per canonical region.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Coloring {
    /// `colors[region] = 0-based element index`.
    pub colors: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ColoringError {
    /// The table is neither a ternary quasigroup nor nesting+recovery.
    NotColorable,
    /// The acting coloring is not a valid coloring by central elements.
    NotCentralColoring,
    /// Conjugation and two-sided actions need flock provenance (a group).
    NoGroupProvenance,
    /// An acting element lies outside the stated subgroup.
    NotInSubgroup { element: usize },
    /// The acting set is not closed under the group operation.
    ActingSetNotClosed { x: usize, y: usize },
    /// An action produced a non-coloring (would indicate a convention bug).
    InvalidImage,
}

impl fmt::Display for ColoringError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ColoringError::NotColorable => write!(f, "table cannot color diagrams"),
            ColoringError::NotCentralColoring => {
                write!(f, "acting coloring is not central-valued or not valid")
            }
            ColoringError::NoGroupProvenance => {
                write!(f, "action needs a flock built from a group")
            }
            ColoringError::NotInSubgroup { element } => {
                write!(f, "element {} outside the acting subgroup", element + 1)
            }
            ColoringError::ActingSetNotClosed { x, y } => write!(
                f,
                "acting set not closed: product of {} and {} missing",
                x + 1,
                y + 1
            ),
            ColoringError::InvalidImage => write!(f, "action image is not a valid coloring"),
        }
    }
}

impl core::error::Error for ColoringError {}

/// Streams every valid coloring in lexicographic top-tuple order.
pub fn for_each_coloring(
    diagram: &ClosedBraidDiagram,
    table: &TernaryTable,
    mut yield_fn: impl FnMut(&[usize]),
) -> Result<(), ColoringError> {
    if !table.is_colorable() {
        return Err(ColoringError::NotColorable);
    }
    let n = table.order();
    let gaps = diagram.word.strands + 1;
    let raw_count = gaps + diagram.crossing_count();
    let mut colors = vec![0usize; raw_count];
    let mut tuple = vec![0usize; gaps];
    let top = diagram.top_raw();
    let bottom = diagram.bottom_raw();
    loop {
        for (j, &t) in tuple.iter().enumerate() {
            colors[top[j]] = t;
        }
        for &(sign, [a, b, c, d]) in diagram.raw_crossings() {
            colors[d] = if sign > 0 {
                table.get(colors[a], colors[b], colors[c])
            } else {
                table.get(colors[c], colors[b], colors[a])
            };
        }
        if (0..gaps).all(|j| colors[bottom[j]] == colors[top[j]]) {
            yield_fn(&colors);
        }
        // odometer, last gap fastest
        let mut j = gaps;
        loop {
            if j == 0 {
                return Ok(());
            }
            j -= 1;
            tuple[j] += 1;
            if tuple[j] < n {
                break;
            }
            tuple[j] = 0;
        }
    }
}

/// All valid colorings as canonical-region color maps, in enumeration order.
pub fn enumerate_colorings(
    diagram: &ClosedBraidDiagram,
    table: &TernaryTable,
) -> Result<Vec<Coloring>, ColoringError> {
    let mut out = Vec::new();
    let regions = diagram.regions;
    for_each_coloring(diagram, table, |raw_colors| {
        let mut colors = vec![0usize; regions];
        for (raw, &col) in raw_colors.iter().enumerate() {
            colors[diagram.canonical_of(raw)] = col;
        }
        out.push(Coloring { colors });
    })?;
    Ok(out)
}

/// Checks the per-crossing constraint for an explicit canonical coloring.
pub fn is_valid_coloring(
    diagram: &ClosedBraidDiagram,
    table: &TernaryTable,
    coloring: &Coloring,
) -> bool {
    if coloring.colors.len() != diagram.regions
        || coloring.colors.iter().any(|&c| c >= table.order())
    {
        return false;
    }
    diagram.crossing_records().iter().all(|r| {
        let [a, b, c, d] = r.around;
        let col = |i: usize| coloring.colors[i];
        if r.sign > 0 {
            col(d) == table.get(col(a), col(b), col(c))
        } else {
            col(d) == table.get(col(c), col(b), col(a))
        }
    })
}

/// A group action on the coloring set.
#[derive(Clone, Debug)]
pub enum ActionSpec {
    /// Central colorings acting by region-wise multiplication.
    CentralColorings { acting: Vec<Coloring> },
    /// A subgroup acting by conjugation: `r ↦ g·c(r)·g⁻¹`.
    Conjugation { elements: Vec<usize> },
    /// `H × S` acting by `r ↦ h·c(r)·s⁻¹`.
    TwoSided { left: Vec<usize>, right: Vec<usize> },
}

/// Region-wise product with a coloring by central elements of the associated
/// group. The result is verified to be a coloring again.
pub fn act_central(
    diagram: &ClosedBraidDiagram,
    table: &TernaryTable,
    coloring: &Coloring,
    central: &Coloring,
) -> Result<Coloring, ColoringError> {
    let spec = table
        .flock_spec()
        .ok_or(ColoringError::NoGroupProvenance)?;
    let g = &spec.group;
    let center = g.center();
    if central.colors.len() != diagram.regions
        || central.colors.iter().any(|&z| !center.contains(&z))
    {
        return Err(ColoringError::NotCentralColoring);
    }
    // the acting coloring must itself color the diagram over F(Z(X), e)
    let idem = TernaryTable::flock_from_group(
        crate::ternary::FlockSpec::new(g.clone(), g.identity()).expect("identity is admissible"),
    );
    if !is_valid_coloring(diagram, &idem, central) {
        return Err(ColoringError::NotCentralColoring);
    }
    let colors = coloring
        .colors
        .iter()
        .zip(&central.colors)
        .map(|(&x, &z)| g.mul(z, x))
        .collect();
    let image = Coloring { colors };
    if !is_valid_coloring(diagram, table, &image) {
        return Err(ColoringError::InvalidImage);
    }
    Ok(image)
}

/// Conjugation action `r ↦ g·c(r)·g⁻¹`; needs flock provenance.
pub fn act_conjugation(
    diagram: &ClosedBraidDiagram,
    table: &TernaryTable,
    coloring: &Coloring,
    g_elem: usize,
) -> Result<Coloring, ColoringError> {
    let spec = table
        .flock_spec()
        .ok_or(ColoringError::NoGroupProvenance)?;
    let g = &spec.group;
    let gi = g.inv(g_elem);
    let colors = coloring
        .colors
        .iter()
        .map(|&x| g.mul(g.mul(g_elem, x), gi))
        .collect();
    let image = Coloring { colors };
    if !is_valid_coloring(diagram, table, &image) {
        return Err(ColoringError::InvalidImage);
    }
    Ok(image)
}

/// Two-sided action `r ↦ h·c(r)·s⁻¹`; needs flock provenance.
pub fn act_two_sided(
    diagram: &ClosedBraidDiagram,
    table: &TernaryTable,
    coloring: &Coloring,
    h: usize,
    s: usize,
) -> Result<Coloring, ColoringError> {
    let spec = table
        .flock_spec()
        .ok_or(ColoringError::NoGroupProvenance)?;
    let g = &spec.group;
    let si = g.inv(s);
    let colors = coloring
        .colors
        .iter()
        .map(|&x| g.mul(g.mul(h, x), si))
        .collect();
    let image = Coloring { colors };
    if !is_valid_coloring(diagram, table, &image) {
        return Err(ColoringError::InvalidImage);
    }
    Ok(image)
}

/// Orbits of the action on an explicit coloring list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitPartition {
    /// Sorted orbits of sorted coloring indices.
    pub orbits: Vec<Vec<usize>>,
}

impl OrbitPartition {
    /// Histogram of orbit sizes as (size, count), ascending.
    pub fn size_histogram(&self) -> Vec<(usize, usize)> {
        let mut hist: BTreeMap<usize, usize> = BTreeMap::new();
        for orbit in &self.orbits {
            *hist.entry(orbit.len()).or_insert(0) += 1;
        }
        hist.into_iter().collect()
    }
}

/// Union-find over all (coloring, acting element) images.
///
/// The acting sets are validated for closure under the relevant operation
/// (subgroup closure for group elements, region-wise products for central
/// colorings), and every image must land back in `colorings`.
pub fn orbit_partition(
    diagram: &ClosedBraidDiagram,
    table: &TernaryTable,
    colorings: &[Coloring],
    action: &ActionSpec,
) -> Result<OrbitPartition, ColoringError> {
    // index for image lookup
    let index: BTreeMap<&Coloring, usize> = colorings
        .iter()
        .enumerate()
        .map(|(i, c)| (c, i))
        .collect();
    validate_action(diagram, table, action)?;
    let mut parent: Vec<usize> = (0..colorings.len()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let join = |parent: &mut Vec<usize>, i: usize, image: Coloring| {
        let j = *index.get(&image).ok_or(ColoringError::InvalidImage)?;
        let (ri, rj) = (find(parent, i), find(parent, j));
        if ri != rj {
            parent[ri] = rj;
        }
        Ok::<(), ColoringError>(())
    };
    for (i, c) in colorings.iter().enumerate() {
        match action {
            ActionSpec::CentralColorings { acting } => {
                for z in acting {
                    join(&mut parent, i, act_central(diagram, table, c, z)?)?;
                }
            }
            ActionSpec::Conjugation { elements } => {
                for &g in elements {
                    join(&mut parent, i, act_conjugation(diagram, table, c, g)?)?;
                }
            }
            ActionSpec::TwoSided { left, right } => {
                for &h in left {
                    for &s in right {
                        join(&mut parent, i, act_two_sided(diagram, table, c, h, s)?)?;
                    }
                }
            }
        }
    }
    let mut buckets: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for i in 0..colorings.len() {
        buckets.entry(find(&mut parent, i)).or_default().push(i);
    }
    let mut orbits: Vec<Vec<usize>> = buckets.into_values().collect();
    for o in &mut orbits {
        o.sort_unstable();
    }
    orbits.sort();
    Ok(OrbitPartition { orbits })
}

fn validate_action(
    diagram: &ClosedBraidDiagram,
    table: &TernaryTable,
    action: &ActionSpec,
) -> Result<(), ColoringError> {
    match action {
        ActionSpec::CentralColorings { acting } => {
            let spec = table
                .flock_spec()
                .ok_or(ColoringError::NoGroupProvenance)?;
            let g = &spec.group;
            // closed under region-wise multiplication
            for (xi, x) in acting.iter().enumerate() {
                for (yi, y) in acting.iter().enumerate() {
                    let prod = Coloring {
                        colors: x
                            .colors
                            .iter()
                            .zip(&y.colors)
                            .map(|(&a, &b)| g.mul(a, b))
                            .collect(),
                    };
                    if !acting.contains(&prod) {
                        return Err(ColoringError::ActingSetNotClosed { x: xi, y: yi });
                    }
                }
            }
            let _ = diagram;
            Ok(())
        }
        ActionSpec::Conjugation { elements } => {
            let spec = table
                .flock_spec()
                .ok_or(ColoringError::NoGroupProvenance)?;
            closed_under_mul(&spec.group, elements)
        }
        ActionSpec::TwoSided { left, right } => {
            let spec = table
                .flock_spec()
                .ok_or(ColoringError::NoGroupProvenance)?;
            closed_under_mul(&spec.group, left)?;
            closed_under_mul(&spec.group, right)
        }
    }
}

fn closed_under_mul(
    g: &crate::group::FiniteGroup,
    elements: &[usize],
) -> Result<(), ColoringError> {
    for &x in elements {
        if x >= g.order() {
            return Err(ColoringError::NotInSubgroup { element: x });
        }
        for &y in elements {
            if !elements.contains(&g.mul(x, y)) {
                return Err(ColoringError::ActingSetNotClosed { x, y });
            }
        }
    }
    Ok(())
}

/// All colorings of the diagram over `F(Z(X), e)`, embedded into the carrier
/// of the ambient group: the acting group of the central-coloring action.
pub fn central_colorings(
    diagram: &ClosedBraidDiagram,
    table: &TernaryTable,
) -> Result<Vec<Coloring>, ColoringError> {
    let spec = table
        .flock_spec()
        .ok_or(ColoringError::NoGroupProvenance)?;
    let g = &spec.group;
    let idem = TernaryTable::flock_from_group(
        crate::ternary::FlockSpec::new(g.clone(), g.identity()).expect("identity is admissible"),
    );
    let center = g.center();
    let all = enumerate_colorings(diagram, &idem)?;
    Ok(all
        .into_iter()
        .filter(|c| c.colors.iter().all(|x| center.contains(x)))
        .collect())
}
