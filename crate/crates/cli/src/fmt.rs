//! Fixed float formatting shared by every output format.

/// Formats like C's `%.15g`: 15 significant digits, trailing zeros trimmed,
/// scientific notation outside `1e-4 <= |x| < 1e15`.
pub fn g15(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{x:.14e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-4..15).contains(&exp) {
        let mantissa = trim_zeros(mantissa);
        let sign = if exp < 0 { '-' } else { '+' };
        return format!("{mantissa}e{sign}{:02}", exp.abs());
    }
    let decimals = (14 - exp) as usize;
    trim_zeros(&format!("{x:.decimals$}")).to_string()
}

/// `x` rounded to what [`g15`] prints.
pub fn round15(x: f64) -> f64 {
    g15(x).parse().unwrap_or(x)
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}
