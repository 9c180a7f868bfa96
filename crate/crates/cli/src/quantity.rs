//! Parsing of lengths and temperatures with unit suffixes.

use casimir_core::units::{celsius_to_kelvin, MICRON};

const LENGTH_UNITS: [(&str, f64); 8] = [
    ("micron", MICRON),
    ("um", MICRON),
    ("μm", MICRON),
    ("µm", MICRON),
    ("nm", 1e-9),
    ("mm", 1e-3),
    ("cm", 1e-2),
    ("m", 1.0),
];

fn split_number(s: &str) -> Result<(f64, &str), String> {
    let s = s.trim();
    let end = s
        .char_indices()
        .find(|&(i, c)| {
            !(c.is_ascii_digit() || matches!(c, '.' | '+' | '-') || (matches!(c, 'e' | 'E') && is_exponent(s, i)))
        })
        .map_or(s.len(), |(i, _)| i);
    let (num, unit) = s.split_at(end);
    let value = num
        .parse::<f64>()
        .map_err(|_| format!("cannot read a number from {s:?}"))?;
    Ok((value, unit.trim()))
}

// an 'e' followed by a digit or sign is part of the number
fn is_exponent(s: &str, i: usize) -> bool {
    s[i + 1..]
        .chars()
        .next()
        .is_some_and(|c| c.is_ascii_digit() || c == '-' || c == '+')
}

/// Plate distance in metres. A bare number is taken as micrometres.
pub fn parse_length(s: &str) -> Result<f64, String> {
    let (value, unit) = split_number(s)?;
    if unit.is_empty() {
        return Ok(value * MICRON);
    }
    LENGTH_UNITS
        .iter()
        .find(|(name, _)| *name == unit)
        .map(|(_, scale)| value * scale)
        .ok_or_else(|| format!("unknown length unit {unit:?} (use um, nm, mm, cm or m)"))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TempUnit {
    Kelvin,
    Celsius,
}

/// A temperature as typed; the unit may be left to a command-line flag.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TempInput {
    pub value: f64,
    pub unit: Option<TempUnit>,
}

impl TempInput {
    pub fn kelvin(self, celsius_default: bool) -> f64 {
        match self.unit {
            Some(TempUnit::Kelvin) => self.value,
            Some(TempUnit::Celsius) => celsius_to_kelvin(self.value),
            None if celsius_default => celsius_to_kelvin(self.value),
            None => self.value,
        }
    }
}

pub fn parse_temperature(s: &str) -> Result<TempInput, String> {
    let (value, unit) = split_number(s)?;
    let unit = match unit {
        "" => None,
        "K" => Some(TempUnit::Kelvin),
        "C" | "°C" | "degC" => Some(TempUnit::Celsius),
        other => return Err(format!("unknown temperature unit {other:?} (use K or C)")),
    };
    Ok(TempInput { value, unit })
}
