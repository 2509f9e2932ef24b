//! Sweep evaluation: one record per (family, region, grid point), computed
//! through the first-principles channel pipeline.
//!
//! Output ordering is fixed — families in declaration order, region I before
//! II, grid points ascending — regardless of how many worker threads
//! evaluate the points, so downstream files are byte-identical for any
//! thread count.

use unruh_core::measures::{average_capacity, fidelity, negativity_summary};
use unruh_core::rindler::{accelerated_channel, minkowski_state};
use unruh_core::{AccelerationTriple, RindlerRegion, StateFamily};

use crate::config::{SweepConfig, SweepMode};

/// One sweep row. Only the requested measures are populated.
#[derive(Debug, Clone, PartialEq)]
pub struct MeasureRecord {
    pub family: StateFamily,
    pub region: RindlerRegion,
    pub r_a: f64,
    pub r_b: f64,
    pub r_c: f64,
    pub fidelity: Option<f64>,
    pub c_ab: Option<f64>,
    pub c_ac: Option<f64>,
    pub c_bc: Option<f64>,
    pub capacity_avg: Option<f64>,
    pub neg_a_bc: Option<f64>,
    pub neg_b_ac: Option<f64>,
    pub neg_c_ab: Option<f64>,
    pub neg_mean: Option<f64>,
}

/// Evaluates the configured sweep. Numeric-invariant violations abort with
/// the offending (family, region, r) identified.
pub fn run_sweep(config: &SweepConfig) -> Result<Vec<MeasureRecord>, String> {
    let triples = grid_triples(config);
    let mut jobs: Vec<(StateFamily, RindlerRegion, [f64; 3])> = Vec::new();
    for &family in &config.families {
        for &region in &config.regions {
            for &triple in &triples {
                jobs.push((family, region, triple));
            }
        }
    }

    if config.threads <= 1 || jobs.len() < 2 {
        return jobs
            .iter()
            .map(|&(family, region, r)| evaluate_point(config, family, region, r))
            .collect();
    }

    let workers = config.threads.min(jobs.len());
    let mut slots: Vec<Option<Result<MeasureRecord, String>>> = vec![None; jobs.len()];
    std::thread::scope(|scope| {
        let mut handles = Vec::with_capacity(workers);
        for worker in 0..workers {
            let jobs = &jobs;
            handles.push(scope.spawn(move || {
                let mut results = Vec::new();
                let mut index = worker;
                while index < jobs.len() {
                    let (family, region, r) = jobs[index];
                    results.push((index, evaluate_point(config, family, region, r)));
                    index += workers;
                }
                results
            }));
        }
        for handle in handles {
            for (index, result) in handle.join().expect("sweep worker panicked") {
                slots[index] = Some(result);
            }
        }
    });

    slots
        .into_iter()
        .map(|slot| slot.expect("every job index is assigned to a worker"))
        .collect()
}

/// Grid points in output order. Equal mode sweeps one parameter applied to
/// all three modes; grid mode walks the full triple lattice lexicographically.
fn grid_triples(config: &SweepConfig) -> Vec<[f64; 3]> {
    let axis = linspace(config.r_start, config.r_end, config.steps);
    match config.mode {
        SweepMode::Equal => axis.iter().map(|&r| [r, r, r]).collect(),
        SweepMode::Grid => {
            let mut triples = Vec::with_capacity(axis.len().pow(3));
            for &r_a in &axis {
                for &r_b in &axis {
                    for &r_c in &axis {
                        triples.push([r_a, r_b, r_c]);
                    }
                }
            }
            triples
        }
    }
}

fn linspace(start: f64, end: f64, steps: usize) -> Vec<f64> {
    let span = end - start;
    (0..steps)
        .map(|i| {
            if i == steps - 1 {
                end
            } else {
                (start + span * i as f64 / (steps - 1) as f64).min(end)
            }
        })
        .collect()
}

fn evaluate_point(
    config: &SweepConfig,
    family: StateFamily,
    region: RindlerRegion,
    r: [f64; 3],
) -> Result<MeasureRecord, String> {
    let context = |e: unruh_core::Error| {
        format!("{family}/{region} at r = ({}, {}, {}): {e}", r[0], r[1], r[2])
    };
    let accel = AccelerationTriple::new(r[0], r[1], r[2]).map_err(context)?;
    let rho = accelerated_channel(family, &accel, region).map_err(context)?;

    let mut record = MeasureRecord {
        family,
        region,
        r_a: r[0],
        r_b: r[1],
        r_c: r[2],
        fidelity: None,
        c_ab: None,
        c_ac: None,
        c_bc: None,
        capacity_avg: None,
        neg_a_bc: None,
        neg_b_ac: None,
        neg_c_ab: None,
        neg_mean: None,
    };
    if config.measures.fidelity {
        record.fidelity = Some(fidelity(&rho, &minkowski_state(family)).map_err(context)?);
    }
    if config.measures.capacity {
        let summary = average_capacity(&rho).map_err(context)?;
        record.c_ab = Some(summary.c_ab);
        record.c_ac = Some(summary.c_ac);
        record.c_bc = Some(summary.c_bc);
        record.capacity_avg = Some(summary.average);
    }
    if config.measures.negativity {
        let summary = negativity_summary(&rho).map_err(context)?;
        record.neg_a_bc = Some(summary.n_a_bc);
        record.neg_b_ac = Some(summary.n_b_ac);
        record.neg_c_ab = Some(summary.n_c_ab);
        record.neg_mean = Some(summary.mean);
    }
    Ok(record)
}
