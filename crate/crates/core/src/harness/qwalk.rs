use crate::error::{Error, Result};
use crate::qwalk::{build_case, symmetric_initial_state, CaseKind, Propagator, WalkCase};

use super::csv::Table;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QwalkRunSpec {
    pub case: WalkCase,
    pub steps: usize,
    pub record_distribution_at: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ObservableRow {
    pub t: usize,
    /// `sqrt(<x^2>)`
    pub sigma: f64,
    pub mean_x: f64,
    /// Probability at the origin.
    pub p0: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct DistributionSnapshot {
    pub t: usize,
    /// `(x, |A_x|^2, |B_x|^2, p(x))` over the support window.
    pub entries: Vec<(i64, f64, f64, f64)>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct QwalkReport {
    pub case: WalkCase,
    /// One row per step, `t = 0..=steps`.
    pub rows: Vec<ObservableRow>,
    pub snapshots: Vec<DistributionSnapshot>,
}

fn observe(prop: &Propagator<'_>) -> ObservableRow {
    let (mut mean, mut second, mut p0) = (0.0, 0.0, 0.0);
    let x0 = prop.window_min();
    for (k, (a, b)) in prop
        .coin0_amplitudes()
        .iter()
        .zip(prop.coin1_amplitudes())
        .enumerate()
    {
        let x = x0 + k as i64;
        let p = a.norm_sqr() + b.norm_sqr();
        mean += x as f64 * p;
        second += (x as f64).powi(2) * p;
        if x == 0 {
            p0 = p;
        }
    }
    ObservableRow {
        t: prop.step(),
        sigma: second.sqrt(),
        mean_x: mean,
        p0,
    }
}

fn snapshot(prop: &Propagator<'_>) -> DistributionSnapshot {
    let x0 = prop.window_min();
    let entries = prop
        .coin0_amplitudes()
        .iter()
        .zip(prop.coin1_amplitudes())
        .enumerate()
        .map(|(k, (a, b))| {
            let (pa, pb) = (a.norm_sqr(), b.norm_sqr());
            (x0 + k as i64, pa, pb, pa + pb)
        })
        .collect();
    DistributionSnapshot {
        t: prop.step(),
        entries,
    }
}

/// Evolves the symmetric initial state under the case's profile, logging
/// observables at every step and full distributions at the requested steps.
pub fn run_qwalk_observables(spec: &QwalkRunSpec) -> Result<QwalkReport> {
    if let Some(&bad) = spec.record_distribution_at.iter().find(|&&t| t > spec.steps) {
        return Err(Error::SnapshotOutOfRange {
            requested: bad,
            total: spec.steps,
        });
    }
    let profile = build_case(spec.case)?;
    let initial = symmetric_initial_state();
    let mut prop = Propagator::new(&initial, &profile, spec.steps);
    let mut rows = Vec::with_capacity(spec.steps + 1);
    let mut snapshots = Vec::new();
    let mut snapshot_steps = spec.record_distribution_at.clone();
    snapshot_steps.sort_unstable();
    snapshot_steps.dedup();
    let mut pending = snapshot_steps.into_iter().peekable();

    loop {
        rows.push(observe(&prop));
        if pending.next_if_eq(&prop.step()).is_some() {
            snapshots.push(snapshot(&prop));
        }
        if prop.remaining() == 0 {
            break;
        }
        prop.advance();
    }
    Ok(QwalkReport {
        case: spec.case,
        rows,
        snapshots,
    })
}

/// `t,sigma,mean_x,p0`
pub fn observables_table(report: &QwalkReport) -> Table {
    let mut table = Table::new(&["t", "sigma", "mean_x", "p0"]);
    for row in &report.rows {
        table.push(vec![row.t.into(), row.sigma.into(), row.mean_x.into(), row.p0.into()]);
    }
    table
}

/// `t,x,prob_coin0,prob_coin1,prob`
pub fn distribution_table(snapshot: &DistributionSnapshot) -> Table {
    let mut table = Table::new(&["t", "x", "prob_coin0", "prob_coin1", "prob"]);
    for &(x, pa, pb, p) in &snapshot.entries {
        table.push(vec![snapshot.t.into(), x.into(), pa.into(), pb.into(), p.into()]);
    }
    table
}

/// `case,t,sigma` for every case: cases I, II and HADAMARD sized by `period`,
/// cases III by `q`. Every size is validated before any walk runs.
pub fn sigma_by_case(period: usize, q: usize, steps: usize) -> Result<Table> {
    let cases = CaseKind::ALL
        .into_iter()
        .map(|kind| {
            let case = WalkCase::new(kind, if kind.sized_by_q() { q } else { period });
            build_case(case).map(|_| case)
        })
        .collect::<Result<Vec<_>>>()?;

    let mut table = Table::new(&["case", "t", "sigma"]);
    for case in cases {
        let report = run_qwalk_observables(&QwalkRunSpec {
            case,
            steps,
            record_distribution_at: Vec::new(),
        })?;
        for row in &report.rows {
            table.push(vec![case.kind.label().into(), row.t.into(), row.sigma.into()]);
        }
    }
    Ok(table)
}
