//! Fixed-precision number formatting shared by reports and the CLI.

/// Formats `x` with 10 significant digits in the style of C's `%.10g`.
/// Magnitudes below `1e-12` print as `0`.
pub fn sig10(x: f64) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x.abs() < 1e-12 {
        return "0".into();
    }
    let exp = x.abs().log10().floor() as i32;
    if (-5..10).contains(&exp) {
        let decimals = (9 - exp).max(0) as usize;
        let s = format!("{x:.decimals$}");
        // rounding can carry into a new leading digit (9.99999999995 -> 10.000000000)
        let s = if s.trim_start_matches('-').split('.').next().map_or(0, str::len) > (exp.max(0) + 1) as usize
            && decimals > 0
        {
            format!("{x:.prec$}", prec = decimals - 1)
        } else {
            s
        };
        trim_zeros(&s)
    } else {
        let s = format!("{x:.9e}");
        let (mantissa, e) = s.split_once('e').expect("scientific format");
        format!("{}e{}", trim_zeros(mantissa), e)
    }
}

fn trim_zeros(s: &str) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ten_significant_digits() {
        assert_eq!(sig10(4.0), "4");
        assert_eq!(sig10(-2.0), "-2");
        assert_eq!(sig10(2.0f64.sqrt()), "1.414213562");
        assert_eq!(sig10(4.469367923073131), "4.469367923");
        assert_eq!(sig10(1234567.891234), "1234567.891");
        assert_eq!(sig10(1e-16), "0");
        assert_eq!(sig10(3.2e-9), "3.2e-9");
        assert_eq!(sig10(9.99999999995), "10");
        assert_eq!(sig10(0.25), "0.25");
    }
}
