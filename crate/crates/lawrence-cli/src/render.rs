//! Plain-text rendering. Colors mark check statuses and are suppressed
//! when the NO_COLOR environment variable is set.

use crate::doc::{
    ArrangementDoc, BoxDoc, DeltaAllDoc, MatroidElementDoc, ReportDoc, VolumeDoc,
    POINT_DISPLAY_CAP,
};
use lawrence_core::report::{CheckEntry, CheckStatus};
use std::fmt::Write;

fn use_color() -> bool {
    std::env::var_os("NO_COLOR").is_none()
}

pub fn status_label(status: CheckStatus) -> &'static str {
    match status {
        CheckStatus::Pass => "PASS",
        CheckStatus::Fail => "FAIL",
        CheckStatus::Skipped => "SKIP",
    }
}

fn colored_status(status: CheckStatus) -> String {
    let label = status_label(status);
    if !use_color() {
        return label.to_string();
    }
    let code = match status {
        CheckStatus::Pass => "32",
        CheckStatus::Fail => "31",
        CheckStatus::Skipped => "33",
    };
    format!("\u{1b}[{code}m{label}\u{1b}[0m")
}

pub fn render_check(entry: &CheckEntry) -> String {
    let mut line = format!("{} {}", colored_status(entry.status), entry.name);
    match (&entry.expected, &entry.actual) {
        (Some(e), Some(a)) if entry.status == CheckStatus::Fail => {
            let _ = write!(line, " (expected {e}, got {a})");
        }
        (_, Some(a)) if entry.status == CheckStatus::Pass => {
            let _ = write!(line, " ({a})");
        }
        _ => {}
    }
    if let Some(note) = &entry.note {
        let _ = write!(line, " [{note}]");
    }
    if let Some(ms) = entry.timing_ms {
        let _ = write!(line, " [{ms} ms]");
    }
    line
}

pub fn render_checks(checks: &[CheckEntry]) -> String {
    let mut out = String::new();
    for entry in checks {
        out.push_str(&render_check(entry));
        out.push('\n');
    }
    let failed = checks.iter().filter(|c| !c.passed()).count();
    let skipped = checks.iter().filter(|c| c.is_skipped()).count();
    let _ = writeln!(
        out,
        "{} checks: {} failed, {} skipped",
        checks.len(),
        failed,
        skipped
    );
    out
}

fn flat_label(indices: &[usize]) -> String {
    if indices.is_empty() {
        "{}".to_string()
    } else {
        let parts: Vec<String> = indices.iter().map(|i| i.to_string()).collect();
        format!("{{{}}}", parts.join(","))
    }
}

pub fn render_matroid(elements: &[MatroidElementDoc]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "matroid elements: {}", elements.len());
    for e in elements {
        let _ = writeln!(
            out,
            "  F = {:<10} dim {}  f = {:?}  h_F = {}",
            flat_label(&e.indices),
            e.dim,
            e.f_vector,
            e.h.display
        );
    }
    out
}

fn render_point(p: &[String]) -> String {
    format!("({})", p.join(","))
}

pub fn render_boxes(boxes: &[BoxDoc]) -> String {
    let mut out = String::new();
    for b in boxes {
        let pts: Vec<String> = b.points.iter().map(|p| render_point(p)).collect();
        let _ = writeln!(
            out,
            "  F = {:<10} box points: {}  {}",
            flat_label(&b.flat),
            b.count,
            pts.join(" ")
        );
    }
    out
}

pub fn render_arrangement(doc: &ArrangementDoc) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "offsets: [{}]", doc.offsets.join(", "));
    let _ = writeln!(out, "cells by dimension (total/bounded):");
    for row in &doc.cells {
        let _ = writeln!(out, "  dim {}: {} / {}", row.dim, row.total, row.bounded);
    }
    let _ = writeln!(out, "regions: {}", doc.regions);
    let _ = writeln!(out, "bounded regions: {}", doc.bounded_regions);
    let _ = writeln!(out, "vertices: {}", doc.vertices);
    let _ = writeln!(out, "h_bd = {}", doc.h_bd.display);
    out
}

pub fn render_delta(doc: &DeltaAllDoc) -> String {
    let mut out = String::new();
    for r in &doc.results {
        let _ = writeln!(out, "{:<12} {}", r.method, r.delta.display);
    }
    if doc.results.len() > 1 {
        let _ = writeln!(
            out,
            "agreement: {}",
            if doc.agree { "exact" } else { "MISMATCH" }
        );
    }
    out
}

pub fn render_volume(doc: &VolumeDoc) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "delta(1) = {}", doc.delta_at_one);
    let _ = writeln!(out, "sum of box * V_F = {}", doc.box_vertex_sum);
    let _ = writeln!(
        out,
        "agreement: {}",
        if doc.agree { "exact" } else { "MISMATCH" }
    );
    out
}

pub fn render_points(count: &str, points: Option<&[Vec<String>]>, interior: bool) -> String {
    let mut out = String::new();
    let kind = if interior { "interior points" } else { "lattice points" };
    let _ = writeln!(out, "{kind}: {count}");
    if let Some(pts) = points {
        if pts.len() <= POINT_DISPLAY_CAP {
            for p in pts {
                let _ = writeln!(out, "  {}", render_point(p));
            }
        } else {
            let _ = writeln!(out, "  (list suppressed: {} > {})", pts.len(), POINT_DISPLAY_CAP);
        }
    }
    out
}

pub fn render_report(doc: &ReportDoc) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "schema version: {}", doc.schema_version);
    let vectors: Vec<String> = doc.input.vectors.iter().map(|v| render_point(v)).collect();
    let _ = writeln!(
        out,
        "configuration: rank {}, vectors {}",
        doc.input.rank,
        vectors.join(" ")
    );
    let _ = writeln!(out, "multipliers: [{}]", doc.input.multipliers.join(", "));
    let _ = writeln!(
        out,
        "offsets{}: [{}]",
        if doc.input.offsets_generated {
            format!(" (generated, seed {})", doc.input.seed)
        } else {
            String::new()
        },
        doc.input.offsets.join(", ")
    );
    out.push('\n');
    out.push_str(&render_matroid(&doc.matroid));
    out.push('\n');
    out.push_str("box points:\n");
    out.push_str(&render_boxes(&doc.boxes));
    out.push('\n');
    out.push_str(&render_arrangement(&doc.arrangement));
    out.push('\n');
    out.push_str(&render_delta(&doc.delta));
    out.push('\n');
    out.push_str(&render_volume(&doc.volume));
    out.push('\n');
    out.push_str(&render_checks(&doc.checks));
    let _ = writeln!(out, "overall: {}", doc.overall);
    out
}
