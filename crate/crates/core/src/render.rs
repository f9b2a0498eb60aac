//! Deterministic report rendering: aligned tables for terminals, CSV and
//! JSON for machines.
//!
//! Tables round to six significant digits; CSV and JSON print the shortest
//! representation that round-trips the exact f64, so downstream tooling
//! sees the model's numbers bit for bit. Nothing here depends on time,
//! locale or environment: the same inputs always render the same bytes.

use serde_json::json;

use crate::bbu::{BsClass, PartName, SystemParams};
use crate::bs_power::PowerBreakdown;
use crate::landauer::{ChipTechnology, ThroughputModel};
use crate::sweep::{FigureSeries, SweepAxis, SweepPoint, ValidationReport};

/// Formats with six significant digits (scientific notation outside a
/// comfortable magnitude window).
pub(crate) fn sig6(x: f64) -> String {
    if x == 0.0 {
        return "0.00000".to_owned();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let exp = x.abs().log10().floor() as i32;
    if (-4..=8).contains(&exp) {
        let decimals = (5 - exp).max(0) as usize;
        format!("{x:.decimals$}")
    } else {
        format!("{x:.5e}")
    }
}

/// Shortest round-trip representation, used by CSV and JSON emitters.
fn exact(x: f64) -> String {
    format!("{x}")
}

// --- CSV -------------------------------------------------------------------

/// Fixed column tail shared by every power CSV: the eight parts in table
/// order, then the aggregates.
fn csv_power_columns() -> Vec<&'static str> {
    let mut cols: Vec<&'static str> = PartName::ALL.iter().map(|p| p.label()).collect();
    cols.extend(["computation_w", "transmission_w", "overhead_w", "total_w", "ratio"]);
    cols
}

fn push_power_cells(cells: &mut Vec<String>, b: &PowerBreakdown) {
    for (_, w) in &b.per_part_w {
        cells.push(exact(*w));
    }
    cells.push(exact(b.computation_w));
    cells.push(exact(b.transmission_w));
    cells.push(exact(b.overhead_w));
    cells.push(exact(b.total_w));
    cells.push(exact(b.computation_ratio));
}

/// Series CSV: `axis,class,<parts...>,computation_w,transmission_w,overhead_w,total_w,ratio`.
pub(crate) fn series_csv(axis: SweepAxis, points: &[SweepPoint]) -> String {
    let mut out = String::new();
    out.push_str(axis.label());
    out.push_str(",class,");
    out.push_str(&csv_power_columns().join(","));
    out.push('\n');
    for p in points {
        let mut cells = vec![exact(p.axis_value), p.class.label().to_owned()];
        push_power_cells(&mut cells, &p.breakdown);
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

/// Single-point CSV: as the series layout minus the axis column.
pub(crate) fn breakdown_csv(class: BsClass, b: &PowerBreakdown) -> String {
    let mut out = String::from("class,");
    out.push_str(&csv_power_columns().join(","));
    out.push('\n');
    let mut cells = vec![class.label().to_owned()];
    push_power_cells(&mut cells, b);
    out.push_str(&cells.join(","));
    out.push('\n');
    out
}

pub(crate) fn validation_csv(report: &ValidationReport) -> String {
    let mut out = String::from(
        "class,quantity,model_w,reference_model_w,rel_err_vs_model,measured_w,rel_err_vs_measured\n",
    );
    for r in &report.rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            r.class,
            r.quantity,
            exact(r.model_w),
            exact(r.reference_model_w),
            exact(r.rel_err_vs_model),
            exact(r.measured_w),
            exact(r.rel_err_vs_measured),
        ));
    }
    out
}

// --- JSON ------------------------------------------------------------------

fn power_row_json(b: &PowerBreakdown) -> serde_json::Map<String, serde_json::Value> {
    let mut row = serde_json::Map::new();
    for (name, w) in &b.per_part_w {
        row.insert(name.label().to_owned(), json!(w));
    }
    row.insert("computation_w".to_owned(), json!(b.computation_w));
    row.insert("transmission_w".to_owned(), json!(b.transmission_w));
    row.insert("overhead_w".to_owned(), json!(b.overhead_w));
    row.insert("total_w".to_owned(), json!(b.total_w));
    row.insert("ratio".to_owned(), json!(b.computation_ratio));
    row
}

pub(crate) fn model_meta_json(
    chip: &ChipTechnology,
    throughput: &ThroughputModel,
) -> serde_json::Value {
    json!({
        "chip": serde_json::to_value(chip).expect("chip serializes"),
        "throughput": serde_json::to_value(throughput).expect("throughput serializes"),
    })
}

pub(crate) fn breakdown_json(
    meta: serde_json::Value,
    class: BsClass,
    b: &PowerBreakdown,
) -> String {
    let mut row = power_row_json(b);
    row.insert("class".to_owned(), json!(class.label()));
    let doc = json!({ "meta": meta, "rows": [serde_json::Value::Object(row)] });
    to_pretty(&doc)
}

pub(crate) fn series_json(
    meta: serde_json::Value,
    axis: SweepAxis,
    points: &[SweepPoint],
) -> String {
    let rows: Vec<serde_json::Value> = points
        .iter()
        .map(|p| {
            let mut row = power_row_json(&p.breakdown);
            row.insert(axis.label().to_owned(), json!(p.axis_value));
            row.insert("class".to_owned(), json!(p.class.label()));
            serde_json::Value::Object(row)
        })
        .collect();
    to_pretty(&json!({ "meta": meta, "rows": rows }))
}

pub(crate) fn validation_json(meta: serde_json::Value, report: &ValidationReport) -> String {
    let rows = serde_json::to_value(&report.rows).expect("report serializes");
    to_pretty(&json!({ "meta": meta, "rows": rows }))
}

fn to_pretty(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("value serializes");
    s.push('\n');
    s
}

// --- human tables ----------------------------------------------------------

fn table(rows: &[Vec<String>]) -> String {
    let columns = rows.iter().map(Vec::len).max().unwrap_or(0);
    let mut widths = vec![0usize; columns];
    for row in rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.len());
        }
    }
    let mut out = String::new();
    for row in rows {
        let mut line = String::new();
        for (i, cell) in row.iter().enumerate() {
            if i > 0 {
                line.push_str("  ");
            }
            if i == 0 {
                // first column left-aligned, the rest right-aligned
                line.push_str(&format!("{cell:<width$}", width = widths[0]));
            } else {
                line.push_str(&format!("{cell:>width$}", width = widths[i]));
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn params_block(params: &SystemParams) -> String {
    let rows = vec![
        vec!["bandwidth [Hz]".to_owned(), sig6(params.bandwidth_hz)],
        vec!["antennas".to_owned(), params.antennas.to_string()],
        vec!["modulation [bits]".to_owned(), params.modulation_bits.to_string()],
        vec!["coding rate".to_owned(), sig6(params.coding_rate)],
        vec!["time duty".to_owned(), sig6(params.time_duty)],
        vec!["freq duty".to_owned(), sig6(params.freq_duty)],
    ];
    table(&rows)
}

pub(crate) fn breakdown_table(class: BsClass, params: &SystemParams, b: &PowerBreakdown) -> String {
    let mut out = format!("power breakdown: {class} cell\n\n");
    out.push_str(&params_block(params));
    out.push('\n');
    let mut rows = vec![vec!["part".to_owned(), "power [W]".to_owned()]];
    for (name, w) in &b.per_part_w {
        rows.push(vec![name.label().to_owned(), sig6(*w)]);
    }
    rows.push(vec!["computation".to_owned(), sig6(b.computation_w)]);
    rows.push(vec!["transmission".to_owned(), sig6(b.transmission_w)]);
    rows.push(vec!["overhead".to_owned(), sig6(b.overhead_w)]);
    rows.push(vec!["total".to_owned(), sig6(b.total_w)]);
    rows.push(vec!["computation ratio".to_owned(), sig6(b.computation_ratio)]);
    out.push_str(&table(&rows));
    out
}

/// Axis values render as integers on the (validated-integral) antenna
/// axis and as 6-significant-digit floats on the bandwidth axis.
fn axis_cell(axis: SweepAxis, value: f64) -> String {
    match axis {
        SweepAxis::Antennas => exact(value),
        SweepAxis::BandwidthHz => sig6(value),
    }
}

pub(crate) fn series_table(title: &str, axis: SweepAxis, points: &[SweepPoint]) -> String {
    let mut out = format!("{title}\n\n");
    let mut rows = vec![vec![
        axis.label().to_owned(),
        "class".to_owned(),
        "computation [W]".to_owned(),
        "transmission [W]".to_owned(),
        "overhead [W]".to_owned(),
        "total [W]".to_owned(),
        "ratio".to_owned(),
    ]];
    for p in points {
        rows.push(vec![
            axis_cell(axis, p.axis_value),
            p.class.label().to_owned(),
            sig6(p.breakdown.computation_w),
            sig6(p.breakdown.transmission_w),
            sig6(p.breakdown.overhead_w),
            sig6(p.breakdown.total_w),
            sig6(p.breakdown.computation_ratio),
        ]);
    }
    out.push_str(&table(&rows));
    out
}

pub(crate) fn figure_title(fig: &FigureSeries) -> String {
    let quantity = match fig.quantity {
        crate::sweep::FigureQuantity::ComputationPower => "computation power",
        crate::sweep::FigureQuantity::ComputationRatio => "computation ratio",
    };
    format!("{}: {} vs {}", fig.figure, quantity, fig.axis)
}

pub(crate) fn validation_table(report: &ValidationReport, tolerance: f64) -> String {
    let mut out = String::from("EARTH reference comparison");
    out.push_str(&format!(
        " ({} Hz, {} antennas, M={}, R={})\n\n",
        sig6(report.params.bandwidth_hz),
        report.params.antennas,
        report.params.modulation_bits,
        sig6(report.params.coding_rate),
    ));
    let mut rows = vec![vec![
        "class".to_owned(),
        "quantity".to_owned(),
        "model [W]".to_owned(),
        "published [W]".to_owned(),
        "rel err".to_owned(),
        "measured [W]".to_owned(),
        "rel err".to_owned(),
    ]];
    for r in &report.rows {
        rows.push(vec![
            r.class.label().to_owned(),
            r.quantity.to_owned(),
            sig6(r.model_w),
            sig6(r.reference_model_w),
            sig6(r.rel_err_vs_model),
            sig6(r.measured_w),
            sig6(r.rel_err_vs_measured),
        ]);
    }
    out.push_str(&table(&rows));
    let verdict = if report.within(tolerance) { "PASS" } else { "FAIL" };
    out.push_str(&format!(
        "\nresult: {verdict} (max relative error vs published model {}, tolerance {})\n",
        sig6(report.max_rel_err_vs_model()),
        sig6(tolerance),
    ));
    out
}

// ---------------------------------------------------------------------------
// tests
// ---------------------------------------------------------------------------
