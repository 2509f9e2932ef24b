//! Deterministic data rendering.
//!
//! Reals print with 12 significant digits in fixed notation (values of unit
//! magnitude get 11 decimals, sub-unit values 12), `.` as decimal separator,
//! LF line endings. Identical records yield byte-identical files, which is
//! what the golden-file tests pin.

use crate::sweep::MeasureRecord;

pub const CSV_HEADER: &str =
    "family,region,r_a,r_b,r_c,fidelity,c_ab,c_ac,c_bc,capacity_avg,neg_a_bc,neg_b_ac,neg_c_ab,neg_mean";

const SIGNIFICANT_DIGITS: i32 = 12;

/// 12 significant digits, fixed notation below 1e6 magnitude.
pub fn format_real(value: f64) -> String {
    let x = if value == 0.0 { 0.0 } else { value }; // normalize -0.0
    let magnitude = x.abs();
    if magnitude >= 1e6 {
        return format!("{x:.6e}");
    }
    let integer_digits = if magnitude < 1.0 {
        0
    } else {
        magnitude.log10().floor() as i32 + 1
    };
    let decimals = (SIGNIFICANT_DIGITS - integer_digits).max(0) as usize;
    format!("{x:.decimals$}")
}

fn optional(value: Option<f64>) -> String {
    value.map(format_real).unwrap_or_default()
}

pub fn render_csv(records: &[MeasureRecord]) -> String {
    let mut out = String::with_capacity(64 * (records.len() + 1));
    out.push_str(CSV_HEADER);
    out.push('\n');
    for r in records {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n",
            r.family,
            r.region,
            format_real(r.r_a),
            format_real(r.r_b),
            format_real(r.r_c),
            optional(r.fidelity),
            optional(r.c_ab),
            optional(r.c_ac),
            optional(r.c_bc),
            optional(r.capacity_avg),
            optional(r.neg_a_bc),
            optional(r.neg_b_ac),
            optional(r.neg_c_ab),
            optional(r.neg_mean),
        ));
    }
    out
}

/// One JSON object per line; field names equal the CSV headers; absent
/// measures are omitted.
pub fn render_jsonl(records: &[MeasureRecord]) -> String {
    let mut out = String::with_capacity(96 * records.len());
    for r in records {
        let mut fields: Vec<String> = vec![
            format!("\"family\":\"{}\"", r.family),
            format!("\"region\":\"{}\"", r.region),
            format!("\"r_a\":{}", format_real(r.r_a)),
            format!("\"r_b\":{}", format_real(r.r_b)),
            format!("\"r_c\":{}", format_real(r.r_c)),
        ];
        let mut push = |name: &str, value: Option<f64>| {
            if let Some(v) = value {
                fields.push(format!("\"{name}\":{}", format_real(v)));
            }
        };
        push("fidelity", r.fidelity);
        push("c_ab", r.c_ab);
        push("c_ac", r.c_ac);
        push("c_bc", r.c_bc);
        push("capacity_avg", r.capacity_avg);
        push("neg_a_bc", r.neg_a_bc);
        push("neg_b_ac", r.neg_b_ac);
        push("neg_c_ab", r.neg_c_ab);
        push("neg_mean", r.neg_mean);
        out.push('{');
        out.push_str(&fields.join(","));
        out.push_str("}\n");
    }
    out
}
