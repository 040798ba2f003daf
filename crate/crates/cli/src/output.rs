//! Text forms of coefficients, cycle index components and count tables.

use std::fmt::Write;

use num_bigint::BigInt;
use species_core::{labeled_count, unlabeled_count, Poly, Result, Series};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Listing {
    Egf,
    Tgf,
    Cis,
    Labeled,
    Unlabeled,
}

/// One line per degree `0..=n`.
pub fn listing(series: &Series, kind: Listing, n: usize) -> Result<Vec<String>> {
    (0..=n)
        .map(|k| {
            Ok(match kind {
                Listing::Egf => series.egf_coefficient(k)?.to_string(),
                Listing::Tgf => series.tgf_coefficient(k)?.to_string(),
                Listing::Cis => format!("{k}: {}", series.component(k)?),
                Listing::Labeled => labeled_count(series, k)?.to_string(),
                Listing::Unlabeled => unlabeled_count(series, k)?.to_string(),
            })
        })
        .collect()
}

/// Reads back a `degree: poly` line as printed by [`listing`].
pub fn parse_cis_line(line: &str) -> Option<(usize, Poly)> {
    let (degree, poly) = line.split_once(':')?;
    let degree = degree.trim().parse().ok()?;
    Some((degree, Poly::parse(degree, poly).ok()?))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub n: usize,
    pub labeled: BigInt,
    pub unlabeled: BigInt,
}

pub fn table_rows(series: &Series, max_n: usize) -> Result<Vec<TableRow>> {
    (0..=max_n)
        .map(|n| {
            Ok(TableRow {
                n,
                labeled: labeled_count(series, n)?,
                unlabeled: unlabeled_count(series, n)?,
            })
        })
        .collect()
}

pub fn format_tsv(rows: &[TableRow]) -> String {
    let mut out = String::from("n\tlabeled\tunlabeled\n");
    for r in rows {
        let _ = writeln!(out, "{}\t{}\t{}", r.n, r.labeled, r.unlabeled);
    }
    out
}

/// Right-aligned columns under a header rule.
pub fn format_text(rows: &[TableRow]) -> String {
    let cells: Vec<[String; 3]> = rows
        .iter()
        .map(|r| {
            [
                r.n.to_string(),
                r.labeled.to_string(),
                r.unlabeled.to_string(),
            ]
        })
        .collect();
    let header = ["n", "labeled", "unlabeled"];
    let widths: Vec<usize> = (0..3)
        .map(|i| {
            cells
                .iter()
                .map(|c| c[i].len())
                .chain([header[i].len()])
                .max()
                .unwrap_or(0)
        })
        .collect();
    let line = |c: [&str; 3]| {
        format!(
            "{:>w0$}  {:>w1$}  {:>w2$}\n",
            c[0],
            c[1],
            c[2],
            w0 = widths[0],
            w1 = widths[1],
            w2 = widths[2]
        )
    };
    let mut out = line(header);
    out.push_str(&"-".repeat(widths.iter().sum::<usize>() + 4));
    out.push('\n');
    for c in &cells {
        out.push_str(&line([&c[0], &c[1], &c[2]]));
    }
    out
}
