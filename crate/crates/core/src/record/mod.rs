//! Field records: a defining polynomial plus optional ingested invariants,
//! read from JSON lines or a JSON array with exact rationals.

use std::path::Path;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::arith::parse_rational;
use crate::error::{Error, Result};
use crate::field::{FieldConfig, FieldElement, NumberField};
use crate::poly::Polynomial;
use crate::units::UnitGroupDesc;

const BUNDLED: &str = include_str!("../../data/records.jsonl");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldRecord {
    pub label: String,
    /// Ascending integer coefficients of a monic polynomial.
    #[serde(with = "int_list")]
    pub min_poly: Vec<BigInt>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub class_number: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub narrow_class_number: Option<u64>,
    /// Units as coordinate vectors in the power basis, entries `"a/b"`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit_gens: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub galois: Option<bool>,
    /// Irreducibility asserted by the source when no small prime certifies it.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub irreducible: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<String>,
}

impl FieldRecord {
    /// A record with only a polynomial.
    pub fn bare(label: &str, min_poly: &[i64]) -> Self {
        FieldRecord {
            label: label.to_string(),
            min_poly: min_poly.iter().map(|&c| BigInt::from(c)).collect(),
            class_number: None,
            narrow_class_number: None,
            unit_gens: None,
            galois: None,
            irreducible: None,
            provenance: None,
        }
    }

    pub fn degree(&self) -> usize {
        self.min_poly.len().saturating_sub(1)
    }

    pub fn polynomial(&self) -> Polynomial {
        Polynomial::from_bigints(&self.min_poly)
    }

    pub fn field(&self) -> Result<Arc<NumberField>> {
        self.field_with(FieldConfig::default())
    }

    pub fn field_with(&self, config: FieldConfig) -> Result<Arc<NumberField>> {
        NumberField::with_config(self.polynomial(), config, self.irreducible == Some(true))
    }

    /// Ingested unit generators as elements of `field`.
    pub fn unit_elements(&self, field: &Arc<NumberField>) -> Result<Option<Vec<FieldElement>>> {
        let Some(gens) = &self.unit_gens else {
            return Ok(None);
        };
        gens.iter()
            .map(|g| {
                let coeffs = g
                    .iter()
                    .map(|s| parse_rational(s).map_err(Error::Domain))
                    .collect::<Result<Vec<_>>>()?;
                FieldElement::from_coeffs(field, &coeffs)
            })
            .collect::<Result<Vec<_>>>()
            .map(Some)
    }

    /// The group generated by -1 and the ingested units. Ingested generators
    /// are not certified fundamental.
    pub fn unit_group(&self, field: &Arc<NumberField>) -> Result<Option<UnitGroupDesc>> {
        match self.unit_elements(field)? {
            Some(gens) => UnitGroupDesc::new(field, None, gens, false).map(Some),
            None => Ok(None),
        }
    }

    fn has_invariants(&self) -> bool {
        self.class_number.is_some()
            || self.narrow_class_number.is_some()
            || self.unit_gens.is_some()
            || self.galois.is_some()
            || self.irreducible.is_some()
    }

    fn validate(&self) -> std::result::Result<(), String> {
        if self.min_poly.len() < 2 {
            return Err("min_poly must have degree at least 1".into());
        }
        if !self.min_poly.last().unwrap().is_one() {
            return Err(format!("min_poly of {} is not monic", self.label));
        }
        if self.has_invariants() && self.provenance.as_deref().map_or(true, |p| p.trim().is_empty()) {
            return Err(format!("record {} supplies invariants without provenance", self.label));
        }
        if let Some(gens) = &self.unit_gens {
            for (i, g) in gens.iter().enumerate() {
                if g.len() > self.degree() {
                    return Err(format!("unit generator {i} has {} coordinates, degree is {}", g.len(), self.degree()));
                }
                for s in g {
                    parse_rational(s).map_err(|e| format!("unit generator {i}: {e}"))?;
                }
            }
        }
        Ok(())
    }
}

mod int_list {
    use super::*;

    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Int {
        Small(i64),
        Text(String),
    }

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = s.serialize_seq(Some(v.len()))?;
        for c in v {
            match i64::try_from(c) {
                Ok(x) => seq.serialize_element(&x)?,
                Err(_) => seq.serialize_element(&c.to_string())?,
            }
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<BigInt>, D::Error> {
        Vec::<Int>::deserialize(d)?
            .into_iter()
            .map(|c| match c {
                Int::Small(x) => Ok(BigInt::from(x)),
                Int::Text(t) => t
                    .trim()
                    .parse::<BigInt>()
                    .map_err(|_| serde::de::Error::custom(format!("malformed integer {t:?}"))),
            })
            .collect()
    }
}

fn parse_error(location: String, message: impl Into<String>) -> Error {
    Error::Parse { location, message: message.into() }
}

/// Parses a JSON array of records, or one record per non-blank line.
pub fn parse_records_str(text: &str, source: &str) -> Result<Vec<FieldRecord>> {
    let records = if text.trim_start().starts_with('[') {
        let recs: Vec<FieldRecord> = serde_json::from_str(text)
            .map_err(|e| parse_error(format!("{source}:{}:{}", e.line(), e.column()), e.to_string()))?;
        for (i, r) in recs.iter().enumerate() {
            r.validate().map_err(|m| parse_error(format!("{source}: entry {}", i + 1), m))?;
        }
        recs
    } else {
        let mut recs = Vec::new();
        for (i, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let r: FieldRecord = serde_json::from_str(line)
                .map_err(|e| parse_error(format!("{source}:{}:{}", i + 1, e.column()), e.to_string()))?;
            r.validate().map_err(|m| parse_error(format!("{source}:{}", i + 1), m))?;
            recs.push(r);
        }
        recs
    };
    Ok(records)
}

pub fn parse_records(path: &Path) -> Result<Vec<FieldRecord>> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_records_str(&text, &path.display().to_string())
}

/// Records shipped with the crate.
pub fn bundled_records() -> Vec<FieldRecord> {
    parse_records_str(BUNDLED, "records.jsonl").expect("bundled records parse")
}

pub fn bundled_record(label: &str) -> Option<FieldRecord> {
    bundled_records().into_iter().find(|r| r.label == label)
}

/// Exact rational coordinates as strings.
pub fn element_strings(x: &FieldElement) -> Vec<String> {
    x.coeffs().iter().map(BigRational::to_string).collect()
}
