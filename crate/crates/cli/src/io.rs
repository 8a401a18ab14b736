//! Textual formats and literal parsers.
//!
//! Two file formats, both plain text with LF line endings and enough digits
//! for exact `f64` round-trips:
//!
//! * matrix files: a `rows cols` header line followed by whitespace-separated
//!   complex literals of the form `<re><im>j` with explicit signs, e.g.
//!   `+5.0e-1-2.5e-1j`, in row-major order;
//! * sweep curves: CSV with the header `theta,lambda_min` and one
//!   `theta,lambda` pair per line.
//!
//! The angle parser accepts plain floats as well as `pi` literals such as
//! `pi`, `2pi`, `-pi/2`, `3pi/4` or `0.5pi`.

use std::f64::consts::PI;
use std::io::{self, Write};

use num_complex::Complex64;

use entwit_core::linalg::{BipartiteDims, ComplexMatrix};
use entwit_core::witness::{SweepCurve, SweepPoint};

/// Header line of a sweep-curve CSV file.
pub const CURVE_HEADER: &str = "theta,lambda_min";

/// Formats one complex entry with explicit signs on both parts, e.g.
/// `+1.0e0-5.0e-1j`. 17 significant digits make the round-trip exact.
pub fn format_complex(z: Complex64) -> String {
    format!("{:+.16e}{:+.16e}j", z.re, z.im)
}

/// Parses a complex literal produced by [`format_complex`] (both parts
/// present, explicit sign on the imaginary part, trailing `j`).
pub fn parse_complex(s: &str) -> Result<Complex64, String> {
    let body = s
        .strip_suffix(['j', 'J'])
        .ok_or_else(|| format!("'{s}': complex entries must end with 'j'"))?;
    let bytes = body.as_bytes();
    // The imaginary part starts at the last sign that is not an exponent sign.
    let split = (1..bytes.len())
        .rev()
        .find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'))
        .ok_or_else(|| format!("'{s}': expected <re><+/-><im>j"))?;
    let re: f64 = body[..split]
        .parse()
        .map_err(|_| format!("'{s}': bad real part '{}'", &body[..split]))?;
    let im: f64 = body[split..]
        .parse()
        .map_err(|_| format!("'{s}': bad imaginary part '{}'", &body[split..]))?;
    Ok(Complex64::new(re, im))
}

/// Writes a matrix in the `rows cols` + row-major-entries format.
pub fn write_matrix(out: &mut impl Write, m: &ComplexMatrix) -> io::Result<()> {
    writeln!(out, "{} {}", m.rows(), m.cols())?;
    for i in 0..m.rows() {
        let row: Vec<String> = (0..m.cols()).map(|j| format_complex(m[(i, j)])).collect();
        writeln!(out, "{}", row.join(" "))?;
    }
    Ok(())
}

/// Parses a matrix file; tokens may be split across lines arbitrarily.
pub fn read_matrix(text: &str) -> Result<ComplexMatrix, String> {
    let mut tokens = text.split_whitespace();
    let mut dimension = |what: &str| -> Result<usize, String> {
        tokens
            .next()
            .ok_or_else(|| format!("matrix file ended before the {what} count"))?
            .parse::<usize>()
            .map_err(|_| format!("bad {what} count in matrix header"))
    };
    let rows = dimension("row")?;
    let cols = dimension("column")?;
    let mut data = Vec::with_capacity(rows * cols);
    for k in 0..rows * cols {
        let token = tokens
            .next()
            .ok_or_else(|| format!("matrix file has {k} entries, expected {}", rows * cols))?;
        data.push(parse_complex(token)?);
    }
    if tokens.next().is_some() {
        return Err(format!(
            "trailing data after {} matrix entries",
            rows * cols
        ));
    }
    ComplexMatrix::new(rows, cols, data).map_err(|e| e.to_string())
}

/// Writes a sweep curve as CSV.
pub fn write_curve(out: &mut impl Write, curve: &SweepCurve) -> io::Result<()> {
    writeln!(out, "{CURVE_HEADER}")?;
    for p in curve.points() {
        writeln!(out, "{:.16e},{:.16e}", p.theta, p.lambda_min)?;
    }
    Ok(())
}

/// Parses a sweep-curve CSV file back into its points.
pub fn read_curve(text: &str) -> Result<Vec<SweepPoint>, String> {
    let mut lines = text.lines();
    match lines.next() {
        Some(header) if header.trim() == CURVE_HEADER => {}
        _ => return Err(format!("curve files must start with '{CURVE_HEADER}'")),
    }
    let mut points = Vec::new();
    for (k, line) in lines.enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let (theta, lambda) = line
            .split_once(',')
            .ok_or_else(|| format!("line {}: expected 'theta,lambda'", k + 2))?;
        points.push(SweepPoint {
            theta: theta
                .trim()
                .parse()
                .map_err(|_| format!("line {}: bad angle '{theta}'", k + 2))?,
            lambda_min: lambda
                .trim()
                .parse()
                .map_err(|_| format!("line {}: bad eigenvalue '{lambda}'", k + 2))?,
        });
    }
    Ok(points)
}

/// Parses an angle given as a float or a `pi` literal (`pi`, `2pi`, `-pi/2`,
/// `3pi/4`, `0.5pi`, ...).
pub fn parse_angle(s: &str) -> Result<f64, String> {
    let lower = s.trim().to_ascii_lowercase();
    let Some((before, after)) = lower.split_once("pi") else {
        return lower
            .parse()
            .map_err(|_| format!("'{s}': expected a number or a pi literal like 3pi/4"));
    };
    let coefficient = match before {
        "" | "+" => 1.0,
        "-" => -1.0,
        other => other
            .parse()
            .map_err(|_| format!("'{s}': bad coefficient '{other}' before pi"))?,
    };
    let divisor = match after.strip_prefix('/') {
        None if after.is_empty() => 1.0,
        None => return Err(format!("'{s}': unexpected '{after}' after pi")),
        Some(div) => {
            let div: f64 = div
                .parse()
                .map_err(|_| format!("'{s}': bad divisor '{div}' after pi/"))?;
            if div == 0.0 {
                return Err(format!("'{s}': division by zero"));
            }
            div
        }
    };
    Ok(coefficient * PI / divisor)
}

/// Parses tensor factor dimensions written as `AxB`, e.g. `3x3`.
pub fn parse_dims(s: &str) -> Result<BipartiteDims, String> {
    let (a, b) = s
        .split_once(['x', 'X'])
        .ok_or_else(|| format!("'{s}': expected AxB, e.g. 3x3"))?;
    let dim_a = a
        .trim()
        .parse()
        .map_err(|_| format!("'{s}': bad first dimension '{a}'"))?;
    let dim_b = b
        .trim()
        .parse()
        .map_err(|_| format!("'{s}': bad second dimension '{b}'"))?;
    BipartiteDims::new(dim_a, dim_b).map_err(|e| e.to_string())
}
