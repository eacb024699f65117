//! Named root-system presets, registered by name and resolved at run
//! time from the configuration.
//!
//! Rational presets (`A1`, `A1xA1`, `A1xA1xA1`) run on the exact backend;
//! the dihedral family `I2(p)` is realized by unit vectors at angles
//! `jπ/p` and runs on the float backend (its coordinates are irrational
//! for most `p`).

use kafourier::roots::{CoordinateValue, RootSystemDocument};

struct Preset {
    name: &'static str,
    build: fn() -> RootSystemDocument,
}

const PRESETS: &[Preset] = &[
    Preset { name: "A1", build: a1 },
    Preset { name: "A1xA1", build: a1xa1 },
    Preset { name: "A1xA1xA1", build: a1cubed },
];

fn integer_vec(coords: &[i64]) -> Vec<CoordinateValue> {
    coords.iter().map(|&c| CoordinateValue::Integer(c)).collect()
}

fn a1() -> RootSystemDocument {
    RootSystemDocument {
        dimension: 1,
        roots: vec![integer_vec(&[1]), integer_vec(&[-1])],
        multiplicity: Vec::new(),
    }
}

fn a1xa1() -> RootSystemDocument {
    RootSystemDocument {
        dimension: 2,
        roots: vec![
            integer_vec(&[1, 0]),
            integer_vec(&[-1, 0]),
            integer_vec(&[0, 1]),
            integer_vec(&[0, -1]),
        ],
        multiplicity: Vec::new(),
    }
}

fn a1cubed() -> RootSystemDocument {
    RootSystemDocument {
        dimension: 3,
        roots: vec![
            integer_vec(&[1, 0, 0]),
            integer_vec(&[-1, 0, 0]),
            integer_vec(&[0, 1, 0]),
            integer_vec(&[0, -1, 0]),
            integer_vec(&[0, 0, 1]),
            integer_vec(&[0, 0, -1]),
        ],
        multiplicity: Vec::new(),
    }
}

fn dihedral(p: u32) -> RootSystemDocument {
    let roots = (0..2 * p)
        .map(|j| {
            let angle = std::f64::consts::PI * f64::from(j) / f64::from(p);
            vec![
                CoordinateValue::Float(angle.cos()),
                CoordinateValue::Float(angle.sin()),
            ]
        })
        .collect();
    RootSystemDocument {
        dimension: 2,
        roots,
        multiplicity: Vec::new(),
    }
}

/// Resolve a preset name; `I2(p)` is parsed for any `p >= 2`.
pub fn build(name: &str) -> Option<RootSystemDocument> {
    if let Some(preset) = PRESETS.iter().find(|p| p.name == name) {
        return Some((preset.build)());
    }
    if name == "A1^3" {
        return Some(a1cubed());
    }
    if let Some(inner) = name.strip_prefix("I2(").and_then(|s| s.strip_suffix(')')) {
        if let Ok(p) = inner.parse::<u32>() {
            if p >= 2 {
                return Some(dihedral(p));
            }
        }
    }
    None
}
