//! Text file formats: groups, permutation generators, flocks, cochains,
//! braid lists, and the catalog directory layout.
//!
//! All element indices in files are 1-based. Lines starting with `#` and
//! blank lines are ignored everywhere; `#` also starts a trailing comment.

use std::fs;
use std::path::{Path, PathBuf};

use flock_core::classify::{CatalogEntry, GroupCatalog};
use flock_core::cochain::CochainTable;
use flock_core::group::{FiniteGroup, Permutation};
use flock_core::ternary::{FlockSpec, TernaryTable};
use flock_core::BraidWord;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}:{line}: expected {expected}, found {found:?}")]
    Unexpected {
        path: PathBuf,
        line: usize,
        expected: &'static str,
        found: String,
    },
    #[error("{path}: {message}")]
    Invalid { path: PathBuf, message: String },
}

fn invalid(path: &Path, message: impl std::fmt::Display) -> FormatError {
    FormatError::Invalid {
        path: path.to_path_buf(),
        message: message.to_string(),
    }
}

/// Meaningful lines of a file: (1-based line number, comment-stripped text).
fn read_lines(path: &Path) -> Result<Vec<(usize, String)>, FormatError> {
    let text = fs::read_to_string(path).map_err(|source| FormatError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    Ok(text
        .lines()
        .enumerate()
        .map(|(i, l)| {
            let stripped = l.split('#').next().unwrap_or("").trim();
            (i + 1, stripped.to_string())
        })
        .filter(|(_, l)| !l.is_empty())
        .collect())
}

fn expect_keyword<'a>(
    path: &Path,
    lines: &'a [(usize, String)],
    at: usize,
    keyword: &'static str,
) -> Result<&'a str, FormatError> {
    let (line, text) = lines.get(at).ok_or_else(|| FormatError::Unexpected {
        path: path.to_path_buf(),
        line: lines.last().map(|(l, _)| *l).unwrap_or(0) + 1,
        expected: keyword,
        found: String::from("end of file"),
    })?;
    if let Some(rest) = text.strip_prefix(keyword) {
        if rest.is_empty() || rest.starts_with(' ') {
            return Ok(rest.trim());
        }
    }
    Err(FormatError::Unexpected {
        path: path.to_path_buf(),
        line: *line,
        expected: keyword,
        found: text.clone(),
    })
}

fn parse_usize(path: &Path, line: usize, text: &str) -> Result<usize, FormatError> {
    text.parse().map_err(|_| FormatError::Unexpected {
        path: path.to_path_buf(),
        line,
        expected: "a positive integer",
        found: text.to_string(),
    })
}

/// Loads a group from either format: `group` (Cayley table) or `perms`
/// (permutation generators), detected by the first line.
pub fn load_group(path: &Path) -> Result<FiniteGroup, FormatError> {
    let lines = read_lines(path)?;
    match lines.first().map(|(_, l)| l.as_str()) {
        Some(l) if l == "group" || l.starts_with("group ") => load_group_table(path, &lines),
        Some(l) if l == "perms" || l.starts_with("perms ") => load_group_perms(path, &lines),
        _ => Err(FormatError::Unexpected {
            path: path.to_path_buf(),
            line: 1,
            expected: "group or perms",
            found: lines
                .first()
                .map(|(_, l)| l.clone())
                .unwrap_or_else(|| String::from("empty file")),
        }),
    }
}

fn load_group_table(path: &Path, lines: &[(usize, String)]) -> Result<FiniteGroup, FormatError> {
    expect_keyword(path, lines, 0, "group")?;
    let order_text = expect_keyword(path, lines, 1, "order")?;
    let n = parse_usize(path, lines[1].0, order_text)?;
    let mut rows = Vec::with_capacity(n);
    for i in 0..n {
        let (line, text) = lines.get(2 + i).ok_or_else(|| invalid(path, "missing table rows"))?;
        let row: Result<Vec<usize>, _> = text
            .split_whitespace()
            .map(|t| parse_usize(path, *line, t))
            .collect();
        rows.push(row?);
    }
    let mut g = FiniteGroup::from_table(&rows).map_err(|e| invalid(path, e))?;
    // optional labels section
    if let Some((_, l)) = lines.get(2 + n) {
        if l == "labels" {
            let labels: Vec<String> = lines[3 + n..].iter().map(|(_, l)| l.clone()).collect();
            if labels.len() != n {
                return Err(invalid(path, format!("expected {n} labels, found {}", labels.len())));
            }
            g.labels = Some(labels);
        }
    }
    Ok(g)
}

fn load_group_perms(path: &Path, lines: &[(usize, String)]) -> Result<FiniteGroup, FormatError> {
    expect_keyword(path, lines, 0, "perms")?;
    let points_text = expect_keyword(path, lines, 1, "points")?;
    let points = parse_usize(path, lines[1].0, points_text)?;
    let mut at = 2;
    let explicit = matches!(lines.get(at), Some((_, l)) if l == "explicit");
    if explicit {
        at += 1;
    }
    let mut perms = Vec::new();
    for (line, text) in &lines[at..] {
        perms.push(
            Permutation::parse(text, points)
                .map_err(|e| invalid(path, format!("line {line}: {e}")))?,
        );
    }
    if explicit {
        FiniteGroup::from_permutations(&perms, Some(&perms)).map_err(|e| invalid(path, e))
    } else {
        FiniteGroup::from_permutations(&perms, None).map_err(|e| invalid(path, e))
    }
}

pub fn write_group(path: &Path, group: &FiniteGroup) -> Result<(), FormatError> {
    let mut out = String::from("group\n");
    out.push_str(&format!("order {}\n", group.order()));
    for row in group.rows_1based() {
        let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    if let Some(labels) = &group.labels {
        out.push_str("labels\n");
        for l in labels {
            out.push_str(l);
            out.push('\n');
        }
    }
    fs::write(path, out).map_err(|source| FormatError::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Loads a flock file: a group reference plus the parameter `b`, or an
/// explicit ternary table. Returns the table (with flock provenance when a
/// group was given).
pub fn load_flock(path: &Path) -> Result<TernaryTable, FormatError> {
    let lines = read_lines(path)?;
    match lines.first().map(|(_, l)| l.as_str()) {
        Some("flock") => {}
        _ => {
            return Err(FormatError::Unexpected {
                path: path.to_path_buf(),
                line: 1,
                expected: "flock",
                found: lines
                    .first()
                    .map(|(_, l)| l.clone())
                    .unwrap_or_else(|| String::from("empty file")),
            })
        }
    }
    let order_text = expect_keyword(path, &lines, 1, "order")?;
    let n = parse_usize(path, lines[1].0, order_text)?;
    let b_text = expect_keyword(path, &lines, 2, "b")?;
    let b = parse_usize(path, lines[2].0, b_text)?;
    if b == 0 || b > n {
        return Err(invalid(path, format!("b {b} out of range 1..={n}")));
    }
    let (line3, text3) = lines
        .get(3)
        .ok_or_else(|| invalid(path, "missing group reference, table, or ternary block"))?;
    let group = if let Some(rel) = text3.strip_prefix("group ") {
        let gpath = path.parent().unwrap_or(Path::new(".")).join(rel.trim());
        load_group(&gpath)?
    } else if text3 == "ternary" {
        // N blocks of N rows of N entries: [i, j, l] is block i, row j, col l
        let mut values = vec![0usize; n * n * n];
        let rows: Vec<&(usize, String)> = lines[4..].iter().collect();
        if rows.len() != n * n {
            return Err(invalid(
                path,
                format!("expected {} ternary rows, found {}", n * n, rows.len()),
            ));
        }
        for (ridx, (line, text)) in rows.iter().enumerate() {
            let entries: Result<Vec<usize>, _> = text
                .split_whitespace()
                .map(|t| parse_usize(path, *line, t))
                .collect();
            let entries = entries?;
            if entries.len() != n {
                return Err(invalid(path, format!("line {line}: expected {n} entries")));
            }
            let (i, j) = (ridx / n, ridx % n);
            for (l, &v) in entries.iter().enumerate() {
                if v == 0 || v > n {
                    return Err(invalid(path, format!("line {line}: entry {v} out of range")));
                }
                values[(i * n + j) * n + l] = v - 1;
            }
        }
        let table =
            TernaryTable::from_values0(values, n).map_err(|e| invalid(path, e))?;
        // b is ignored for explicit ternary tables: the operation is the data
        return Ok(table);
    } else {
        // inline Cayley table: n rows starting here
        let mut rows = Vec::with_capacity(n);
        for i in 0..n {
            let (line, text) = lines
                .get(3 + i)
                .ok_or_else(|| invalid(path, "missing inline table rows"))?;
            let row: Result<Vec<usize>, _> = text
                .split_whitespace()
                .map(|t| parse_usize(path, *line, t))
                .collect();
            rows.push(row?);
        }
        FiniteGroup::from_table(&rows).map_err(|e| invalid(path, e))?
    };
    let _ = line3;
    if group.order() != n {
        return Err(invalid(
            path,
            format!("group order {} does not match declared order {n}", group.order()),
        ));
    }
    let spec = FlockSpec::new(group, b - 1).map_err(|e| invalid(path, e))?;
    Ok(TernaryTable::flock_from_group(spec))
}

/// Loads a cochain file (`cocycle1` for arity 3, `cocycle2` for arity 4):
/// header then `N^(arity-2)` blocks of `N` lines of `N` digits each, block
/// order matching lexicographic leading coordinates.
pub fn load_cochain(path: &Path) -> Result<CochainTable, FormatError> {
    let lines = read_lines(path)?;
    let arity = match lines.first().map(|(_, l)| l.as_str()) {
        Some("cocycle1") => 3usize,
        Some("cocycle2") => 4usize,
        _ => {
            return Err(FormatError::Unexpected {
                path: path.to_path_buf(),
                line: 1,
                expected: "cocycle1 or cocycle2",
                found: lines
                    .first()
                    .map(|(_, l)| l.clone())
                    .unwrap_or_else(|| String::from("empty file")),
            })
        }
    };
    let order_text = expect_keyword(path, &lines, 1, "order")?;
    let n = parse_usize(path, lines[1].0, order_text)?;
    let modulus_text = expect_keyword(path, &lines, 2, "modulus")?;
    let p = parse_usize(path, lines[2].0, modulus_text)? as u32;
    let expected_rows = n.pow(arity as u32 - 1);
    let data_lines = &lines[3..];
    if data_lines.len() != expected_rows {
        return Err(invalid(
            path,
            format!("expected {expected_rows} value rows, found {}", data_lines.len()),
        ));
    }
    let mut values = Vec::with_capacity(n.pow(arity as u32));
    for (line, text) in data_lines {
        let mut row = Vec::with_capacity(n);
        if p <= 10 {
            for ch in text.chars().filter(|c| !c.is_whitespace()) {
                let d = ch.to_digit(10).ok_or_else(|| {
                    invalid(path, format!("line {line}: bad digit {ch:?}"))
                })?;
                row.push(d);
            }
        } else {
            for tok in text.split_whitespace() {
                row.push(parse_usize(path, *line, tok)? as u32);
            }
        }
        if row.len() != n {
            return Err(invalid(
                path,
                format!("line {line}: expected {n} values, found {}", row.len()),
            ));
        }
        values.extend(row);
    }
    CochainTable::from_values(arity, n, p, values).map_err(|e| invalid(path, e))
}

pub fn write_cochain(path: &Path, f: &CochainTable) -> Result<(), FormatError> {
    let n = f.order;
    let mut out = String::new();
    out.push_str(if f.arity == 3 { "cocycle1\n" } else { "cocycle2\n" });
    out.push_str(&format!("order {n}\nmodulus {}\n", f.modulus));
    let rows = n.pow(f.arity as u32 - 1);
    for r in 0..rows {
        if r % n == 0 {
            out.push('\n');
        }
        for c in 0..n {
            if f.modulus <= 10 {
                out.push_str(&f.values[r * n + c].to_string());
            } else {
                if c > 0 {
                    out.push(' ');
                }
                out.push_str(&f.values[r * n + c].to_string());
            }
        }
        out.push('\n');
    }
    fs::write(path, out).map_err(|source| FormatError::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Braid list: one word per line (same syntax as `--braid`).
pub fn load_braids(path: &Path) -> Result<Vec<BraidWord>, FormatError> {
    let lines = read_lines(path)?;
    lines
        .iter()
        .map(|(line, text)| {
            BraidWord::parse(text).map_err(|e| invalid(path, format!("line {line}: {e}")))
        })
        .collect()
}

/// Catalog directory: `manifest.txt` with `entry <id> <abelian|nonabelian>`
/// and `complete <order>` lines; one `<id>.group` file per entry.
pub fn load_catalog(dir: &Path) -> Result<GroupCatalog, FormatError> {
    let manifest = dir.join("manifest.txt");
    let lines = read_lines(&manifest)?;
    expect_keyword(&manifest, &lines, 0, "catalog")?;
    let mut entries = Vec::new();
    let mut complete_orders = Vec::new();
    for (line, text) in &lines[1..] {
        let mut tokens = text.split_whitespace();
        match tokens.next() {
            Some("entry") => {
                let id = tokens
                    .next()
                    .ok_or_else(|| invalid(&manifest, format!("line {line}: missing id")))?
                    .to_string();
                let flag = tokens.next().unwrap_or("");
                let abelian = match flag {
                    "abelian" => true,
                    "nonabelian" => false,
                    other => {
                        return Err(invalid(
                            &manifest,
                            format!("line {line}: expected abelian|nonabelian, found {other:?}"),
                        ))
                    }
                };
                let group = load_group(&dir.join(format!("{id}.group")))?;
                if group.is_abelian() != abelian {
                    return Err(invalid(
                        &manifest,
                        format!("entry {id}: abelian flag disagrees with the table"),
                    ));
                }
                entries.push(CatalogEntry { id, group, abelian });
            }
            Some("complete") => {
                for tok in tokens {
                    complete_orders.push(parse_usize(&manifest, *line, tok)?);
                }
            }
            Some(other) => {
                return Err(invalid(
                    &manifest,
                    format!("line {line}: unknown directive {other:?}"),
                ))
            }
            None => {}
        }
    }
    Ok(GroupCatalog {
        entries,
        complete_orders,
    })
}
