//! Command-line value parsers: angles, axes and complex numbers.

use std::f64::consts::PI;

use num_complex::Complex64;

/// Largest deviation from unit length that is silently normalized away.
pub const AXIS_SLACK: f64 = 1e-6;

/// Decimal radians, or a multiple of pi such as `pi/2`, `-3pi/4`, `2*pi`.
pub fn angle(s: &str) -> Result<f64, String> {
    let t = s.trim().to_ascii_lowercase();
    let value = match t.find("pi") {
        None => t.parse::<f64>().map_err(|_| format!("bad angle `{s}`"))?,
        Some(at) => {
            let coeff = t[..at].trim_end_matches('*');
            let coeff = match coeff {
                "" | "+" => 1.0,
                "-" => -1.0,
                c => c.parse::<f64>().map_err(|_| format!("bad angle `{s}`"))?,
            };
            let rest = &t[at + 2..];
            let denom = match rest {
                "" => 1.0,
                r => r
                    .strip_prefix('/')
                    .and_then(|d| d.parse::<f64>().ok())
                    .filter(|d| *d != 0.0)
                    .ok_or_else(|| format!("bad angle `{s}`"))?,
            };
            coeff * PI / denom
        }
    };
    if value.is_finite() {
        Ok(value)
    } else {
        Err(format!("bad angle `{s}`"))
    }
}

/// Three comma-separated decimals, normalized when within [`AXIS_SLACK`]
/// of unit length.
pub fn axis(s: &str) -> Result<[f64; 3], String> {
    let parts: Vec<f64> = s
        .split(',')
        .map(|p| p.trim().parse::<f64>())
        .collect::<Result<_, _>>()
        .map_err(|_| format!("bad axis `{s}`: expected three decimals such as 0,0,1"))?;
    let [x, y, z] = parts[..] else {
        return Err(format!("bad axis `{s}`: expected three components"));
    };
    let norm = (x * x + y * y + z * z).sqrt();
    if !norm.is_finite() || (norm - 1.0).abs() > AXIS_SLACK {
        return Err(format!("axis `{s}` has length {norm}, not 1"));
    }
    Ok([x / norm, y / norm, z / norm])
}

/// `a`, `bi`, `a+bi`, `a-bi`; `i` alone means the imaginary unit.
pub fn complex(s: &str) -> Result<Complex64, String> {
    let err = || format!("bad complex number `{s}`");
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let imag_part = |p: &str| -> Result<f64, String> {
        match p {
            "" | "+" => Ok(1.0),
            "-" => Ok(-1.0),
            q => q.parse().map_err(|_| err()),
        }
    };
    let Some(body) = t.strip_suffix(['i', 'j']) else {
        return t
            .parse::<f64>()
            .map(|re| Complex64::new(re, 0.0))
            .map_err(|_| err());
    };
    // split at the last sign that is not the leading one or an exponent sign
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let c = match split {
        None => Complex64::new(0.0, imag_part(body)?),
        Some(k) => Complex64::new(
            body[..k].parse().map_err(|_| err())?,
            imag_part(&body[k..])?,
        ),
    };
    if c.re.is_finite() && c.im.is_finite() {
        Ok(c)
    } else {
        Err(err())
    }
}
