//! Rows of the value table for one period: every pattern with its sine and
//! cosine forms.

use serde::{Deserialize, Serialize};

use periodic_radicals::closedform::{alpha_exact, closed_form_of, sin_form};
use periodic_radicals::pattern::patterns;
use periodic_radicals::{Result, SignPattern};

use crate::fmt::round15;

pub const MAX_TABLE_PERIOD: u32 = 16;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableRow {
    pub pattern: String,
    pub parity: i8,
    pub alpha: String,
    pub ell: u64,
    pub denominator: u64,
    pub sin_form: String,
    pub cos_form: String,
    pub value: f64,
}

impl TableRow {
    pub fn for_pattern(p: &SignPattern) -> Result<TableRow> {
        let cf = closed_form_of(p)?;
        Ok(TableRow {
            pattern: p.to_string(),
            parity: p.parity().value(),
            alpha: alpha_exact(p)?.to_string(),
            ell: cf.ell,
            denominator: cf.denominator,
            sin_form: sin_form(p)?,
            cos_form: cf.cos_form(),
            value: round15(cf.value()),
        })
    }
}

/// All `2^n` rows in canonical pattern order.
pub fn table_rows(n: u32) -> Result<Vec<TableRow>> {
    patterns(n)?.map(|p| TableRow::for_pattern(&p)).collect()
}
