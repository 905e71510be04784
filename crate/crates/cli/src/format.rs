//! Locale-independent number formatting.

/// Formats `x` with `precision` significant digits in positional notation,
/// switching to scientific notation from `1e6` upwards. With `decimals`
/// set, a fixed number of digits after the point is used instead. At most
/// [`MAX_DECIMALS`] digits follow the point, so roundoff residue prints as
/// `0`; anything that rounds to zero prints as `0` without a sign.
pub const MAX_DECIMALS: usize = 15;

pub fn number(x: f64, precision: usize, decimals: Option<usize>) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return if x.is_nan() {
            "nan".to_string()
        } else if x > 0.0 {
            "inf".to_string()
        } else {
            "-inf".to_string()
        };
    }
    let s = match decimals {
        Some(d) => {
            let d = d.min(MAX_DECIMALS);
            format!("{x:.d$}")
        }
        None if x.abs() >= 1e6 => format!("{:.*e}", precision.saturating_sub(1), x),
        None => {
            let exponent = x.abs().log10().floor() as i64;
            let d = ((precision as i64 - 1 - exponent).max(0) as usize).min(MAX_DECIMALS);
            format!("{x:.d$}")
        }
    };
    if s.trim_start_matches('-').chars().all(|c| c == '0' || c == '.') {
        "0".to_string()
    } else {
        s
    }
}

/// `x` rounded the way [`number`] prints it, for JSON output.
pub fn rounded(x: f64, precision: usize, decimals: Option<usize>) -> f64 {
    number(x, precision, decimals).parse().unwrap_or(x)
}

pub fn list(xs: &[f64], precision: usize, decimals: Option<usize>) -> String {
    xs.iter()
        .map(|&x| number(x, precision, decimals))
        .collect::<Vec<_>>()
        .join(",")
}
