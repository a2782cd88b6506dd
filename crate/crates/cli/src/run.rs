//! Task dispatch.

use lqt_core::algebra::{quiver_algebra, Bimodule, DecoratedQuiver};
use lqt_core::complexes::{compare_cells, homology_dims_in};
use lqt_core::hochschild::{bar_complex, relative_bar_complex_with, splitting_maps, Caps, TensorS};
use lqt_core::local::{cycle_local_dims, hc_of_quiver_algebra, path_local_dims, tor_of_quiver_algebra};
use lqt_core::quiver::{enumerate_cycles, enumerate_framed_paths, Cycle, FramedPath};
use lqt_core::verify::verify_lqt;
use serde_json::json;

use crate::job::{JobSpec, PathSpec, Problem};
use crate::report::Report;
use crate::CliError;

pub const TASKS: [&str; 9] = ["hh", "hc", "tor", "cycles", "paths", "floop", "fpath", "lqt-check", "maps-check"];

/// Validates and runs a job. Errors become report entries with a nonzero
/// exit code.
pub fn run(job: &JobSpec) -> Report {
    let mut report = match job.problem().and_then(|p| dispatch(&p)) {
        Ok(mut r) => {
            r.input = Some(job.clone());
            r
        }
        Err(e) => Report::failed(&job.task.name, Some(job.clone()), &e),
    };
    report.task = job.task.name.clone();
    report
}

fn dispatch(p: &Problem) -> Result<Report, CliError> {
    let name = p.task.name.as_str();
    let mut r = Report::new(name, None);
    let (caps, field, dq) = (p.caps, p.field, &p.dq);
    match name {
        "hh" => {
            let qa = quiver_algebra(dq)?;
            let m = Bimodule::regular(&qa.algebra);
            let how = p.task.tensor.map_or(TensorS::Auto, |t| t.to_core());
            let plain = homology_dims_in(&bar_complex(&qa.algebra, &m, caps)?, caps.degree, field)?;
            let rel = homology_dims_in(&relative_bar_complex_with(&qa.algebra, &m, &qa.separable, caps, how)?, caps.degree, field)?;
            r.set_dims(&plain, -1, caps.degree);
            r.set_cells(compare_cells(&plain, &rel, -1..=caps.degree, caps.weight, None));
            r.details = json!({ "lhs": "bar complex", "rhs": "bar complex relative to the vertex idempotents" });
        }
        "hc" => {
            let d = hc_of_quiver_algebra(dq, caps, field)?;
            r.set_dims(&d.lhs, -1, caps.degree);
            r.set_cells(d.cells);
            r.details = json!({ "lhs": "Connes complex of A_Q over S", "rhs": "vertex cyclic homology plus shifted cycle-local homology" });
        }
        "tor" => {
            let d = tor_of_quiver_algebra(dq, caps, field)?;
            r.set_dims(&d.lhs, 0, caps.degree);
            r.set_cells(d.cells);
            r.details = json!({ "lhs": "Tor over A_Q of the framing modules", "rhs": "sum of path-local homology" });
        }
        "cycles" => {
            let q = dq.quiver();
            let list: Vec<_> = enumerate_cycles(q, caps.weight as usize)
                .iter()
                .map(|c| json!({ "edges": c.names(q), "length": c.len(), "degree": c.degree() }))
                .collect();
            r.details = json!({ "max_length": caps.weight, "count": list.len(), "cycles": list });
        }
        "paths" => {
            let max = caps.weight.saturating_sub(2) as usize;
            let list: Vec<_> = framed_paths(dq, caps).iter().map(|p| json!({ "path": p.names(&dq.framed), "length": p.edges.len() })).collect();
            r.details = json!({ "max_length": max, "count": list.len(), "paths": list });
        }
        "floop" => {
            let q = dq.quiver();
            let cycles = match &p.task.cycle {
                Some(names) => vec![Cycle::new(q, edge_indices(dq, names)?)?],
                None => enumerate_cycles(q, caps.weight as usize),
            };
            let mut list = Vec::new();
            for c in &cycles {
                let d = cycle_local_dims(dq, c, caps, field)?;
                if cycles.len() == 1 {
                    r.set_dims(&d, 0, caps.degree);
                }
                list.push(json!({ "cycle": c.names(q), "dims": dims_json(&d) }));
            }
            r.details = json!({ "cycles": list });
        }
        "fpath" => {
            let paths = match &p.task.path {
                Some(spec) => vec![framed_path(dq, spec)?],
                None => framed_paths(dq, caps),
            };
            let mut list = Vec::new();
            for fp in &paths {
                let d = path_local_dims(dq, fp, caps, field)?;
                if paths.len() == 1 {
                    r.set_dims(&d, 0, caps.degree);
                }
                list.push(json!({ "path": fp.names(&dq.framed), "dims": dims_json(&d) }));
            }
            r.details = json!({ "paths": list });
        }
        "lqt-check" => {
            let n = p.n.ok_or_else(|| CliError::Usage("lqt-check needs caps.N or --N".into()))?;
            let c = verify_lqt(dq, n, caps, p.task.stable_degree, field)?;
            let outside = c.outside_stable_range();
            r.details = json!({ "N": n, "stable_degree": c.stable_degree, "cells_outside_stable_range": outside });
            r.set_cells(c.cells);
        }
        "maps-check" => {
            let qa = quiver_algebra(dq)?;
            let m = Bimodule::regular(&qa.algebra);
            let top = caps.degree + 1;
            let maps = splitting_maps(&qa.algebra, &m, &qa.separable, Caps::new(top, caps.weight))?;
            let problems = maps.check(top);
            r.details = json!({ "identities": ["phi psi = id", "d h + h d = id - psi phi"], "degrees": caps.degree, "violations": problems });
            r.judge(problems.is_empty());
        }
        other => return Err(CliError::Usage(format!("unknown task `{other}`; expected one of {}", TASKS.join(", ")))),
    }
    Ok(r)
}

fn framed_paths(dq: &DecoratedQuiver, caps: Caps) -> Vec<FramedPath> {
    if caps.weight < 2 {
        return Vec::new();
    }
    enumerate_framed_paths(&dq.framed, caps.weight as usize - 2)
}

fn edge_indices(dq: &DecoratedQuiver, names: &[String]) -> Result<Vec<usize>, CliError> {
    names
        .iter()
        .map(|e| dq.quiver().edge_index(e).ok_or_else(|| CliError::Core(lqt_core::Error::UnknownName(e.clone()))))
        .collect()
}

fn framed_path(dq: &DecoratedQuiver, spec: &PathSpec) -> Result<FramedPath, CliError> {
    let leg = |legs: &[(String, usize)], name: &str| {
        legs.iter().position(|(w, _)| w == name).ok_or_else(|| CliError::Core(lqt_core::Error::UnknownName(name.to_string())))
    };
    let fp = FramedPath { plus: leg(&dq.framed.plus, &spec.plus)?, edges: edge_indices(dq, &spec.edges)?, minus: leg(&dq.framed.minus, &spec.minus)? };
    fp.check(&dq.framed)?;
    Ok(fp)
}

fn dims_json(d: &lqt_core::complexes::BigradedDims) -> serde_json::Value {
    d.iter().filter(|(_, k)| *k > 0).map(|((n, w), k)| json!({ "degree": n, "weight": w, "dim": k })).collect()
}
