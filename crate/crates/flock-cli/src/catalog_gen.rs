//! Builds the shipped catalog of nonabelian groups of order ≤ 24 from the
//! standard families and writes it as a catalog directory.
//!
//! Coverage is complete for every order up to 24: orders 1..=5, 7, 9, 11, 13,
//! 15, 17, 19 and 23 have no nonabelian groups at all, and the remaining
//! orders are covered by dihedral, dicyclic, symmetric/alternating, semidirect
//! and direct product constructions plus the five sporadic 2-groups of order
//! 16. Validation (pairwise non-isomorphism) runs before anything is written.

use std::fs;
use std::path::Path;

use flock_core::classify::{CatalogEntry, GroupCatalog};
use flock_core::families as fam;
use flock_core::group::FiniteGroup;

use crate::formats::{write_group, FormatError};

fn entry(id: &str, group: FiniteGroup) -> CatalogEntry {
    let abelian = group.is_abelian();
    CatalogEntry {
        id: id.to_string(),
        group,
        abelian,
    }
}

/// The full in-memory catalog: all nonabelian groups of each order up to 24.
pub fn builtin_catalog() -> GroupCatalog {
    let c = fam::cyclic;
    let entries = vec![
        entry("6_s3", fam::symmetric(3)),
        entry("8_d4", fam::dihedral(4)),
        entry("8_q8", fam::quaternion()),
        entry("10_d5", fam::dihedral(5)),
        entry("12_d6", fam::dihedral(6)),
        entry("12_a4", fam::alternating(4)),
        entry("12_dic3", fam::dicyclic(3)),
        entry("14_d7", fam::dihedral(7)),
        entry("16_d8", fam::dihedral(8)),
        entry("16_sd16", fam::semidirect_cyclic(8, 2, 3).unwrap()),
        entry("16_m4_2", fam::semidirect_cyclic(8, 2, 5).unwrap()),
        entry("16_q16", fam::dicyclic(4)),
        entry("16_d4xc2", fam::direct_product(&fam::dihedral(4), &c(2))),
        entry("16_q8xc2", fam::direct_product(&fam::quaternion(), &c(2))),
        entry("16_q8oc4", fam::central_product_q8_c4()),
        entry("16_c4c2_c2", fam::c4_c2_semidirect_c2()),
        entry("16_c4_c4", fam::c4_semidirect_c4()),
        entry("18_d9", fam::dihedral(9)),
        entry("18_c3xs3", fam::direct_product(&c(3), &fam::symmetric(3))),
        entry(
            "18_gd_c3c3",
            fam::generalized_dihedral(&fam::direct_product(&c(3), &c(3))),
        ),
        entry("20_d10", fam::dihedral(10)),
        entry("20_dic5", fam::dicyclic(5)),
        entry("20_f20", fam::semidirect_cyclic(5, 4, 2).unwrap()),
        entry("21_c7_c3", fam::semidirect_cyclic(7, 3, 2).unwrap()),
        entry("22_d11", fam::dihedral(11)),
        entry("24_s4", fam::symmetric(4)),
        entry("24_sl23", fam::sl_2_3()),
        entry("24_a4xc2", fam::direct_product(&fam::alternating(4), &c(2))),
        entry("24_d12", fam::dihedral(12)),
        entry("24_dic6", fam::dicyclic(6)),
        entry("24_c3_c8", fam::semidirect_cyclic(3, 8, 2).unwrap()),
        entry("24_dic3xc2", fam::direct_product(&fam::dicyclic(3), &c(2))),
        entry("24_c3_d4", fam::c3_semidirect_d4()),
        entry("24_c3xd4", fam::direct_product(&c(3), &fam::dihedral(4))),
        entry("24_c3xq8", fam::direct_product(&c(3), &fam::quaternion())),
        entry("24_c4xs3", fam::direct_product(&c(4), &fam::symmetric(3))),
        entry(
            "24_c2c2xs3",
            fam::direct_product(&fam::direct_product(&c(2), &c(2)), &fam::symmetric(3)),
        ),
    ];
    GroupCatalog {
        entries,
        complete_orders: (1..=24).collect(),
    }
}

/// Writes the builtin catalog as a directory of group files plus manifest.
pub fn write_catalog(dir: &Path) -> Result<GroupCatalog, FormatError> {
    let catalog = builtin_catalog();
    catalog.validate().map_err(|e| FormatError::Invalid {
        path: dir.to_path_buf(),
        message: e.to_string(),
    })?;
    fs::create_dir_all(dir).map_err(|source| FormatError::Io {
        path: dir.to_path_buf(),
        source,
    })?;
    let mut manifest = String::from("catalog\n");
    for e in &catalog.entries {
        write_group(&dir.join(format!("{}.group", e.id)), &e.group)?;
        manifest.push_str(&format!(
            "entry {} {}\n",
            e.id,
            if e.abelian { "abelian" } else { "nonabelian" }
        ));
    }
    let orders: Vec<String> = catalog.complete_orders.iter().map(|o| o.to_string()).collect();
    manifest.push_str(&format!("complete {}\n", orders.join(" ")));
    fs::write(dir.join("manifest.txt"), manifest).map_err(|source| FormatError::Io {
        path: dir.to_path_buf(),
        source,
    })?;
    Ok(catalog)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_catalog_validates() {
        let cat = builtin_catalog();
        let report = cat.validate().unwrap();
        // nonabelian group counts per covered order
        let expected = [
            (6, 1),
            (8, 2),
            (10, 1),
            (12, 3),
            (14, 1),
            (16, 9),
            (18, 3),
            (20, 3),
            (21, 1),
            (22, 1),
            (24, 12),
        ];
        for (order, count) in expected {
            let row = report
                .per_order
                .iter()
                .find(|(o, _, _)| *o == order)
                .unwrap();
            assert_eq!(row.2, count, "order {order}");
        }
    }
}
