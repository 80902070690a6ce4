//! Parser for the command-line complex literal syntax "a+bi": optional sign,
//! no spaces, scientific notation allowed, and a trailing `i` marking the
//! imaginary part (`0.3`, `-0.5i`, `0.3-0.2i`, `1e-3+2.5e-2i`, `i`).

use wco_core::Complex64;

pub fn parse_complex(input: &str) -> Result<Complex64, String> {
    let s = input.trim();
    if s.is_empty() {
        return Err("empty complex literal".to_string());
    }
    let Some(body) = s.strip_suffix(['i', 'I']) else {
        return s
            .parse::<f64>()
            .map(|re| Complex64::new(re, 0.0))
            .map_err(|_| format!("invalid real literal '{s}'"));
    };
    // Split before the last +/- that starts the imaginary term (signs inside
    // exponents are preceded by e/E and do not split).
    let mut split = None;
    for (idx, ch) in body.char_indices().skip(1) {
        if (ch == '+' || ch == '-') && !matches!(body.as_bytes()[idx - 1], b'e' | b'E') {
            split = Some(idx);
        }
    }
    match split {
        Some(idx) => {
            let re_part = &body[..idx];
            let im_part = &body[idx..];
            let re = re_part
                .parse::<f64>()
                .map_err(|_| format!("invalid real part '{re_part}' in '{s}'"))?;
            let im = parse_signed_unit(im_part)
                .ok_or_else(|| format!("invalid imaginary part '{im_part}i' in '{s}'"))?;
            Ok(Complex64::new(re, im))
        }
        None => {
            let im = parse_signed_unit(body)
                .ok_or_else(|| format!("invalid imaginary literal '{s}'"))?;
            Ok(Complex64::new(0.0, im))
        }
    }
}

/// "+", "-", or "" mean a unit coefficient; anything else must parse as f64.
fn parse_signed_unit(s: &str) -> Option<f64> {
    match s {
        "" | "+" => Some(1.0),
        "-" => Some(-1.0),
        _ => s.parse::<f64>().ok(),
    }
}
