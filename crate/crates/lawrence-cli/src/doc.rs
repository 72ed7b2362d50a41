//! Structured report documents. Everything numeric is serialized as exact
//! strings; field order is fixed by the struct definitions so identical
//! inputs yield byte-identical JSON.

use crate::input::ValidatedInput;
use crate::CliError;
use lawrence_core::arrangement::{
    self, enumerate_cells, restrict, Arrangement, Cell,
};
use lawrence_core::boxlattice::box_points;
use lawrence_core::ehrhart::{
    self, DeltaMethod,
};
use lawrence_core::matroid::{
    bases_count, f_vector, h_polynomial, independent_sets, quotient_config, IndepSet,
};
use lawrence_core::poly::IntPolynomial;
use lawrence_core::report::CheckEntry;
use lawrence_core::verify::{run_suite, SuiteOptions};
use lawrence_core::{Config, Guards};
use num::BigInt;
use serde::Serialize;

pub const SCHEMA_VERSION: u32 = 1;

/// How many points a text listing will print before summarizing.
pub const POINT_DISPLAY_CAP: usize = 64;

#[derive(Clone, Debug, Serialize)]
pub struct PolyDoc {
    pub display: String,
    pub coefficients: Vec<String>,
}

impl PolyDoc {
    pub fn new(p: &IntPolynomial) -> PolyDoc {
        PolyDoc {
            display: p.display(),
            coefficients: p.coeffs().iter().map(|c| c.to_string()).collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct InputEcho {
    pub rank: usize,
    pub vectors: Vec<Vec<String>>,
    pub multipliers: Vec<String>,
    pub offsets: Vec<String>,
    pub offsets_generated: bool,
    pub seed: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct MatroidElementDoc {
    pub indices: Vec<usize>,
    pub dim: usize,
    pub f_vector: Vec<usize>,
    pub h: PolyDoc,
}

#[derive(Clone, Debug, Serialize)]
pub struct BoxDoc {
    pub flat: Vec<usize>,
    pub count: usize,
    pub points: Vec<Vec<String>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CellCensusRow {
    pub dim: usize,
    pub total: usize,
    pub bounded: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct ArrangementDoc {
    pub offsets: Vec<String>,
    pub cells: Vec<CellCensusRow>,
    pub regions: usize,
    pub bounded_regions: usize,
    pub vertices: usize,
    pub h_bd: PolyDoc,
}

#[derive(Clone, Debug, Serialize)]
pub struct DeltaDoc {
    pub method: String,
    pub delta: PolyDoc,
}

#[derive(Clone, Debug, Serialize)]
pub struct DeltaAllDoc {
    pub results: Vec<DeltaDoc>,
    pub agree: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct VolumeDoc {
    pub delta_at_one: String,
    pub box_vertex_sum: String,
    pub agree: bool,
}

/// The one-document report: everything the individual subcommands print.
#[derive(Clone, Debug, Serialize)]
pub struct ReportDoc {
    pub schema_version: u32,
    pub input: InputEcho,
    pub matroid: Vec<MatroidElementDoc>,
    pub boxes: Vec<BoxDoc>,
    pub arrangement: ArrangementDoc,
    pub delta: DeltaAllDoc,
    pub volume: VolumeDoc,
    pub checks: Vec<CheckEntry>,
    pub overall: String,
}

fn bigints_to_strings(v: &[BigInt]) -> Vec<String> {
    v.iter().map(|e| e.to_string()).collect()
}

/// Resolve the arrangement: explicit offsets when supplied, else seeded.
pub fn resolve_arrangement(input: &ValidatedInput) -> Result<(Arrangement, bool), CliError> {
    match &input.offsets {
        Some(offsets) => {
            let arr = Arrangement::new(input.config.clone(), offsets.clone())
                .map_err(CliError::from)?;
            Ok((arr, false))
        }
        None => {
            let arr =
                arrangement::choose_offsets(&input.config, input.seed).map_err(CliError::from)?;
            Ok((arr, true))
        }
    }
}

pub fn input_echo(input: &ValidatedInput, arr: &Arrangement, generated: bool) -> InputEcho {
    let c = &input.config;
    InputEcho {
        rank: c.rank(),
        vectors: (0..c.len())
            .map(|i| bigints_to_strings(c.vector(i)))
            .collect(),
        multipliers: (0..c.len()).map(|i| c.mult(i).to_string()).collect(),
        offsets: arr.offsets().iter().map(|r| r.to_string()).collect(),
        offsets_generated: generated,
        seed: input.seed,
    }
}

pub fn matroid_doc(c: &Config, guards: &Guards) -> Result<Vec<MatroidElementDoc>, CliError> {
    let sets = independent_sets(c, guards)?;
    let d = c.rank();
    let mut out = Vec::new();
    for f in &sets {
        let codim = d - f.dim();
        let q = quotient_config(c, f);
        let qsets = independent_sets(q.config(), guards)?;
        let fv = f_vector(&qsets, codim);
        let h = h_polynomial(&fv, codim);
        out.push(MatroidElementDoc {
            indices: f.indices().iter().map(|i| i + 1).collect(),
            dim: f.dim(),
            f_vector: fv,
            h: PolyDoc::new(&h),
        });
    }
    Ok(out)
}

pub fn boxes_doc(c: &Config, guards: &Guards) -> Result<Vec<BoxDoc>, CliError> {
    let sets = independent_sets(c, guards)?;
    let mut out = Vec::new();
    for f in &sets {
        let pts = box_points(c, f);
        out.push(BoxDoc {
            flat: f.indices().iter().map(|i| i + 1).collect(),
            count: pts.len(),
            points: pts
                .iter()
                .map(|p| bigints_to_strings(p.point()))
                .collect(),
        });
    }
    Ok(out)
}

pub fn census_rows(cells: &[Cell], rank: usize) -> Vec<CellCensusRow> {
    (0..=rank)
        .map(|dim| CellCensusRow {
            dim,
            total: cells.iter().filter(|c| c.dim() == dim).count(),
            bounded: cells
                .iter()
                .filter(|c| c.dim() == dim && c.bounded())
                .count(),
        })
        .collect()
}

pub fn arrangement_doc(arr: &Arrangement, guards: &Guards) -> Result<ArrangementDoc, CliError> {
    let rank = arr.config().rank();
    let cells = enumerate_cells(arr, guards)?;
    Ok(ArrangementDoc {
        offsets: arr.offsets().iter().map(|r| r.to_string()).collect(),
        cells: census_rows(&cells, rank),
        regions: arrangement::regions_count(&cells, rank),
        bounded_regions: arrangement::bounded_regions_count(&cells, rank),
        vertices: cells.iter().filter(|c| c.dim() == 0).count(),
        h_bd: PolyDoc::new(&arrangement::h_bd_polynomial(&cells, rank)),
    })
}

/// Census of the restriction to the flat of the given 1-based indices.
pub fn flat_doc(
    arr: &Arrangement,
    flat_one_based: &[usize],
    guards: &Guards,
) -> Result<ArrangementDoc, CliError> {
    let c = arr.config();
    for &i in flat_one_based {
        if i == 0 || i > c.len() {
            return Err(CliError::Input(format!(
                "flat index {i} out of range 1..={}",
                c.len()
            )));
        }
    }
    let mut indices: Vec<usize> = flat_one_based.iter().map(|&i| i - 1).collect();
    indices.sort_unstable();
    indices.dedup();
    let sets = independent_sets(c, guards)?;
    let f = sets
        .iter()
        .find(|s| s.indices() == indices.as_slice())
        .ok_or_else(|| {
            CliError::Input("flat indices are not an independent set of the matroid".to_string())
        })?;
    let res = restrict(arr, f)?;
    arrangement_doc(res.arrangement(), guards)
}

pub fn delta_all_doc(
    c: &Config,
    arr: &Arrangement,
    guards: &Guards,
) -> Result<DeltaAllDoc, CliError> {
    let methods = [
        DeltaMethod::FormulaH,
        DeltaMethod::FormulaHbd,
        DeltaMethod::BruteForce,
    ];
    let mut results = Vec::new();
    for method in methods {
        let r = ehrhart::compute_delta(c, method, Some(arr), None, guards)?;
        results.push(DeltaDoc {
            method: method.tag().to_string(),
            delta: PolyDoc::new(&r.delta),
        });
    }
    let agree = results
        .windows(2)
        .all(|w| w[0].delta.coefficients == w[1].delta.coefficients);
    Ok(DeltaAllDoc { results, agree })
}

pub fn volume_doc(c: &Config, guards: &Guards) -> Result<VolumeDoc, CliError> {
    let delta = ehrhart::delta_from_formula(c, guards)?;
    let at_one = ehrhart::normalized_volume(&delta);
    let cross = ehrhart::volume_cross_sum(c, guards)?;
    Ok(VolumeDoc {
        agree: at_one == cross,
        delta_at_one: at_one.to_string(),
        box_vertex_sum: cross.to_string(),
    })
}

/// Assemble the full report document.
pub fn build_report(input: &ValidatedInput) -> Result<ReportDoc, CliError> {
    let c = &input.config;
    let (arr, generated) = resolve_arrangement(input)?;
    let opts = SuiteOptions {
        seed: input.seed,
        guards: input.guards.clone(),
        offsets: input.offsets.clone(),
        ..SuiteOptions::default()
    };
    let suite = run_suite(c, &opts)?;
    let delta = delta_all_doc(c, &arr, &input.guards)?;
    let overall = if suite.all_passed() && delta.agree {
        "pass"
    } else {
        "fail"
    };
    Ok(ReportDoc {
        schema_version: SCHEMA_VERSION,
        input: input_echo(input, &arr, generated),
        matroid: matroid_doc(c, &input.guards)?,
        boxes: boxes_doc(c, &input.guards)?,
        arrangement: arrangement_doc(&arr, &input.guards)?,
        delta,
        volume: volume_doc(c, &input.guards)?,
        checks: suite.checks,
        overall: overall.to_string(),
    })
}

/// Find the independent set with the given 0-based indices.
pub fn find_flat<'a>(sets: &'a [IndepSet], indices: &[usize]) -> Option<&'a IndepSet> {
    sets.iter().find(|s| s.indices() == indices)
}

/// Vertex count V_F used by the volume cross-sum, exposed for text output.
pub fn vertex_count(c: &Config, f: &IndepSet, guards: &Guards) -> Result<usize, CliError> {
    let q = quotient_config(c, f);
    let qsets = independent_sets(q.config(), guards)?;
    Ok(bases_count(&qsets, c.rank() - f.dim()))
}
