//! P–L diagram data: one row per sampled width along each leg of a cycle.

use serde::{Deserialize, Serialize};

use qwell::{eigen_energy, Cycle, LegKind, ProcessLeg, UnitSystem};

use crate::error::CliError;

/// One point of the P–L diagram.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiagramSample {
    /// Which leg the point belongs to, labelled by its vertex pair
    /// ("1→2" … "4→1").
    pub leg_id: String,
    #[serde(rename = "L")]
    pub width: f64,
    #[serde(rename = "P")]
    pub pressure: f64,
    #[serde(rename = "E")]
    pub energy: f64,
    /// Ground-state fraction |a_1|² at this point.
    pub a1_sq: f64,
}

/// Samples every leg uniformly in L, `samples_per_leg` points each
/// (endpoints included), ordered around the cycle. Rows at a leg joint
/// repeat the shared vertex.
pub fn sample_cycle(cycle: &Cycle, samples_per_leg: usize) -> Result<Vec<DiagramSample>, CliError> {
    if samples_per_leg < 2 {
        return Err(CliError::Parameter(format!(
            "samples per leg must be at least 2: got {samples_per_leg}"
        )));
    }
    let n_legs = cycle.legs().len();
    let mut rows = Vec::with_capacity(n_legs * samples_per_leg);
    for (k, leg) in cycle.legs().iter().enumerate() {
        let leg_id = format!("{}→{}", k + 1, (k + 1) % n_legs + 1);
        sample_leg(leg, &leg_id, samples_per_leg, cycle.units(), &mut rows)?;
    }
    Ok(rows)
}

fn sample_leg(
    leg: &ProcessLeg,
    leg_id: &str,
    samples: usize,
    units: UnitSystem,
    rows: &mut Vec<DiagramSample>,
) -> Result<(), CliError> {
    let start = leg.start().width();
    let end = leg.end().width();
    for i in 0..samples {
        // The last point is the end width itself so that joints coincide
        // bit for bit.
        let width = if i == samples - 1 {
            end
        } else {
            start + (i as f64 / (samples - 1) as f64) * (end - start)
        };
        let pressure = leg.pressure_at(width, units)?;
        let (energy, a1_sq) = match *leg.kind() {
            LegKind::Isothermal { energy } => {
                // Invert E = E_1(L)·(4 − 3|a_1|²) for the ground fraction;
                // clamping absorbs last-ulp excursions at the endpoints.
                let e1 = eigen_energy(1, width, units)?;
                (energy, ((4.0 - energy / e1) / 3.0).clamp(0.0, 1.0))
            }
            LegKind::ConstantN { n } => {
                let energy = eigen_energy(n, width, units)?;
                (energy, if n == 1 { 1.0 } else { 0.0 })
            }
            // pressure_at has already rejected constant-width legs.
            LegKind::ConstantWidth { .. } => unreachable!(),
        };
        rows.push(DiagramSample {
            leg_id: leg_id.to_string(),
            width,
            pressure,
            energy,
            a1_sq,
        });
    }
    Ok(())
}
