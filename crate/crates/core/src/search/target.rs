use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_4};
use std::path::Path;

use num_complex::Complex64;

use crate::error::SearchError;
use crate::unitary::{Unitary2, UNITARY_TOLERANCE};

/// Names accepted by [`target`].
pub const TARGET_NAMES: [&str; 7] =
    ["identity", "hadamard", "pauli_x", "pauli_y", "pauli_z", "phase_s", "t"];

#[derive(Debug, Clone, PartialEq)]
pub struct TargetGate {
    pub name: String,
    pub matrix: Unitary2,
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Standard single-qubit gate by name.
pub fn target(name: &str) -> Result<TargetGate, SearchError> {
    let o = c(0.0, 0.0);
    let l = c(1.0, 0.0);
    let h = c(FRAC_1_SQRT_2, 0.0);
    let entries = match name.to_ascii_lowercase().as_str() {
        "identity" => [[l, o], [o, l]],
        "hadamard" => [[h, h], [h, -h]],
        "pauli_x" => [[o, l], [l, o]],
        "pauli_y" => [[o, c(0.0, -1.0)], [c(0.0, 1.0), o]],
        "pauli_z" => [[l, o], [o, -l]],
        "phase_s" => [[l, o], [o, c(0.0, 1.0)]],
        "t" => [[l, o], [o, Complex64::from_polar(1.0, FRAC_PI_4)]],
        _ => return Err(SearchError::UnknownTarget(name.to_string())),
    };
    Ok(TargetGate {
        name: name.to_ascii_lowercase(),
        matrix: Unitary2::from_entries_unchecked(entries),
    })
}

impl TargetGate {
    /// Wraps a user matrix, rejecting it unless unitary within `1e-10`.
    pub fn custom(name: impl Into<String>, entries: [[Complex64; 2]; 2]) -> Result<Self, SearchError> {
        let matrix = Unitary2::with_tolerance(entries, UNITARY_TOLERANCE).map_err(|e| match e {
            crate::error::BraidError::NotUnitary { residual } => {
                SearchError::NonUnitaryTarget { residual }
            }
            other => SearchError::TargetFormat(other.to_string()),
        })?;
        Ok(Self { name: name.into(), matrix })
    }

    /// Parses a 2x2 array of `[re, im]` pairs, row-major.
    pub fn from_json(name: impl Into<String>, text: &str) -> Result<Self, SearchError> {
        let raw: [[[f64; 2]; 2]; 2] =
            serde_json::from_str(text).map_err(|e| SearchError::TargetFormat(e.to_string()))?;
        let entries = raw.map(|row| row.map(|[re, im]| c(re, im)));
        Self::custom(name, entries)
    }

    pub fn from_file(path: &Path) -> Result<Self, SearchError> {
        let text = std::fs::read_to_string(path)?;
        let name = path.file_stem().map_or_else(|| "custom".to_string(), |s| s.to_string_lossy().into_owned());
        Self::from_json(name, &text)
    }

    /// The matrix as the JSON file layout.
    pub fn to_json_value(&self) -> serde_json::Value {
        matrix_to_json(&self.matrix)
    }
}

/// `[[[re, im], [re, im]], [[re, im], [re, im]]]`.
pub fn matrix_to_json(m: &Unitary2) -> serde_json::Value {
    let e = m.entries();
    serde_json::json!([
        [[e[0][0].re, e[0][0].im], [e[0][1].re, e[0][1].im]],
        [[e[1][0].re, e[1][0].im], [e[1][1].re, e[1][1].im]],
    ])
}
