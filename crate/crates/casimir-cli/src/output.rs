//! Text and CSV rendering. Output is deterministic: records arrive in
//! lexicographic order and all formatting is fixed-width or fixed-field.

use crate::record::RepRecord;

/// Print a table with two-space aligned columns.
pub fn print_table(headers: &[&str], rows: &[Vec<String>]) {
    let mut widths: Vec<usize> = headers.iter().map(|h| h.len()).collect();
    for row in rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.len());
        }
    }
    let fmt_line = |cells: Vec<String>| -> String {
        cells
            .iter()
            .enumerate()
            .map(|(i, c)| format!("{:<width$}", c, width = widths[i]))
            .collect::<Vec<_>>()
            .join("  ")
            .trim_end()
            .to_string()
    };
    println!(
        "{}",
        fmt_line(headers.iter().map(|h| h.to_string()).collect())
    );
    for row in rows {
        println!("{}", fmt_line(row.clone()));
    }
}

pub fn join_labels(labels: &[u32]) -> String {
    labels
        .iter()
        .map(|l| l.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn poly_string(record: &RepRecord) -> String {
    // Reconstructed from the exact coefficients the record carries.
    let a1: casimir::Rational = record.poly.a1.parse().unwrap();
    let a0: casimir::Rational = record.poly.a0.parse().unwrap();
    let am1: casimir::Rational = record.poly.am1.parse().unwrap();
    casimir::CasimirPoly::new(a1, a0, am1).to_string()
}

pub fn universal_string(record: &RepRecord) -> String {
    match &record.universal {
        Some(u) => format!("x={} y={} z={}", u.x, u.y, u.z),
        None => "-".to_string(),
    }
}

/// One table row for a decomposition record.
pub fn record_row(record: &RepRecord) -> Vec<String> {
    vec![
        record.k.to_string(),
        join_labels(&record.head),
        join_labels(&record.tail),
        record.mult.map_or_else(|| "-".into(), |m| m.to_string()),
        record.dim.clone().unwrap_or_else(|| "-".into()),
        poly_string(record),
        if record.balanced { "yes" } else { "no" }.to_string(),
        format!("{}/{}", record.areas[0], record.areas[1]),
        universal_string(record),
    ]
}

pub const RECORD_HEADERS: [&str; 9] = [
    "k", "head", "tail", "mult", "dim", "C(N)", "balanced", "areas", "universal",
];

pub const CSV_HEADER: &str = "k,head,tail,mult,dim,a1,a0,am1,balanced,area_head,area_tail,x,y,z";

/// One CSV line; empty fields where the record has none.
pub fn csv_row(record: &RepRecord) -> String {
    let (x, y, z) = match &record.universal {
        Some(u) => (u.x.clone(), u.y.clone(), u.z.clone()),
        None => (String::new(), String::new(), String::new()),
    };
    format!(
        "{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
        record.k,
        join_labels(&record.head),
        join_labels(&record.tail),
        record.mult.map_or_else(String::new, |m| m.to_string()),
        record.dim.clone().unwrap_or_default(),
        record.poly.a1,
        record.poly.a0,
        record.poly.am1,
        record.balanced,
        record.areas[0],
        record.areas[1],
        x,
        y,
        z,
    )
}
