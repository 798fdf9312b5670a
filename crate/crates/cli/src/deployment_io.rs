//! Sensor lists as CSV: `x_m,y_m,radius_m,view_angle_deg,deviation_deg`.

use std::path::Path;

use aaso::coverage::Sensor;
use anyhow::{Context, Result};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SensorRecord {
    pub x_m: f64,
    pub y_m: f64,
    pub radius_m: f64,
    pub view_angle_deg: f64,
    pub deviation_deg: f64,
}

impl SensorRecord {
    pub fn from_sensor(s: &Sensor<f64>) -> Self {
        Self {
            x_m: s.x,
            y_m: s.y,
            radius_m: s.radius,
            view_angle_deg: s.view_angle.to_degrees(),
            deviation_deg: s.deviation().to_degrees(),
        }
    }

    pub fn to_sensor(&self) -> aaso::Result<Sensor<f64>> {
        Sensor::new(
            self.x_m,
            self.y_m,
            self.radius_m,
            self.view_angle_deg.to_radians(),
            self.deviation_deg.to_radians(),
        )
    }
}

pub fn read_deployment(path: &Path) -> Result<Vec<Sensor<f64>>> {
    let mut reader = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_path(path)
        .with_context(|| format!("cannot open deployment {}", path.display()))?;
    let mut sensors = Vec::new();
    for (i, rec) in reader.deserialize::<SensorRecord>().enumerate() {
        // header is line 1
        let line = i + 2;
        let rec = rec.with_context(|| format!("{}: line {line}", path.display()))?;
        let sensor = rec
            .to_sensor()
            .with_context(|| format!("{}: line {line}", path.display()))?;
        sensors.push(sensor);
    }
    anyhow::ensure!(!sensors.is_empty(), "{} lists no sensors", path.display());
    Ok(sensors)
}

pub fn write_deployment(path: &Path, sensors: &[Sensor<f64>]) -> Result<()> {
    let mut writer = csv::Writer::from_path(path).with_context(|| format!("cannot write {}", path.display()))?;
    for s in sensors {
        writer.serialize(SensorRecord::from_sensor(s))?;
    }
    writer.flush()?;
    Ok(())
}
