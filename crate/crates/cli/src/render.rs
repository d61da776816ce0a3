//! Plain-text classification tables.

use aqjl_core::catalog::{Catalog, CatalogRow};
use aqjl_core::roots::GroupKind;

/// Aligns columns by character count; the first row is the header.
fn aligned(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| rows.iter().filter_map(|r| r.get(c)).map(|s| s.chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for (i, row) in rows.iter().enumerate() {
        let mut line = String::new();
        for (c, cell) in row.iter().enumerate() {
            if c + 1 == row.len() {
                line.push_str(cell);
            } else {
                line.push_str(cell);
                line.extend(std::iter::repeat_n(' ', widths[c] - cell.chars().count() + 2));
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
        if i == 0 {
            let total: usize = widths.iter().sum::<usize>() + 2 * cols.saturating_sub(1);
            out.push_str(&"-".repeat(total));
            out.push('\n');
        }
    }
    out
}

fn poincare_cell(row: &CatalogRow) -> String {
    row.module.poincare().map(|p| p.to_string()).unwrap_or_else(|_| "-".into())
}

fn title(catalog: &Catalog) -> String {
    let group = match catalog.kind {
        GroupKind::SplitReal(n) => format!("GL_{n}(R)"),
        GroupKind::Quaternionic(k) => format!("GL_{k}(H)"),
    };
    format!("Coh({group}) at mu = {}\n", catalog.mu)
}

/// Split-side table: one line per partition, with the sign twist in its own
/// column.
pub fn split_table(catalog: &Catalog) -> String {
    let mut rows = vec![vec!["n".to_string(), "A_q(λ)".into(), "A_q(λ)⊗sgn".into(), "P(X)".into()]];
    let mut i = 0;
    while i < catalog.rows.len() {
        let row = &catalog.rows[i];
        let plain = row.datum().label();
        // a second row with the same partition carries ε = 1
        let (twisted, step) = match catalog.rows.get(i + 1) {
            Some(next) if next.label == row.label => (next.datum().label(), 2),
            _ => (plain.clone(), 1),
        };
        rows.push(vec![row.label.to_string(), plain, twisted, poincare_cell(row)]);
        i += step;
    }
    let mut out = title(catalog);
    out.push_str(&aligned(&rows));
    out
}

/// Quaternionic table: one line per listed partition; aliased lines name
/// their canonical partition.
pub fn quaternionic_table(catalog: &Catalog) -> String {
    let mut rows = vec![vec!["k".to_string(), "A_q'(λ)".into(), "P(X)".into(), "class".into()]];
    for row in &catalog.rows {
        rows.push(vec![
            row.label.to_string(),
            row.datum().label(),
            poincare_cell(row),
            row.module.partition().to_string(),
        ]);
    }
    let mut out = title(catalog);
    out.push_str(&aligned(&rows));
    out
}

pub fn table(catalog: &Catalog) -> String {
    if let Some(diag) = &catalog.diagnostic {
        return format!("{}(empty: {diag})\n", title(catalog));
    }
    match catalog.kind {
        GroupKind::SplitReal(_) => split_table(catalog),
        GroupKind::Quaternionic(_) => quaternionic_table(catalog),
    }
}
