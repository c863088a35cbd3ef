//! Complex scalars on the command line: `re` or `re+imi` / `re-imi`, and
//! comma-separated triples of them.

use num_complex::Complex64;

/// Parse `"−5"`, `"1.5+0.5i"`, `"2-1i"`, or `"3i"` into a complex number.
pub fn parse_complex(s: &str) -> Result<Complex64, String> {
    let t = s.trim();
    if t.is_empty() {
        return Err("empty complex literal".into());
    }
    if let Some(body) = t.strip_suffix(['i', 'I']) {
        // split into real and imaginary parts at the last interior sign
        let split = body
            .char_indices()
            .skip(1)
            .filter(|(i, ch)| {
                matches!(ch, '+' | '-')
                    && !matches!(body.as_bytes()[i - 1], b'e' | b'E')
            })
            .map(|(i, _)| i)
            .last();
        match split {
            Some(i) => {
                let re: f64 = body[..i]
                    .parse()
                    .map_err(|_| format!("bad real part in {t:?}"))?;
                let im_str = &body[i..];
                let im: f64 = if im_str == "+" {
                    1.0
                } else if im_str == "-" {
                    -1.0
                } else {
                    im_str.parse().map_err(|_| format!("bad imaginary part in {t:?}"))?
                };
                Ok(Complex64::new(re, im))
            }
            None => {
                let im: f64 = if body.is_empty() {
                    1.0
                } else if body == "-" {
                    -1.0
                } else {
                    body.parse().map_err(|_| format!("bad imaginary part in {t:?}"))?
                };
                Ok(Complex64::new(0.0, im))
            }
        }
    } else {
        let re: f64 = t.parse().map_err(|_| format!("bad number {t:?}"))?;
        Ok(Complex64::new(re, 0.0))
    }
}

/// Parse `"a,b,c"` into three complex numbers.
pub fn parse_triple(s: &str) -> Result<[Complex64; 3], String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 3 {
        return Err(format!("expected three comma-separated values, got {}", parts.len()));
    }
    Ok([
        parse_complex(parts[0])?,
        parse_complex(parts[1])?,
        parse_complex(parts[2])?,
    ])
}

/// Render a complex number compactly, dropping a vanishing imaginary part.
pub fn format_complex(z: Complex64) -> String {
    if z.im == 0.0 || z.im.abs() < 1e-14 * z.re.abs() {
        format!("{:.12e}", z.re)
    } else if z.im < 0.0 {
        format!("{:.12e}-{:.12e}i", z.re, -z.im)
    } else {
        format!("{:.12e}+{:.12e}i", z.re, z.im)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scalar_forms() {
        assert_eq!(parse_complex("-5").unwrap(), Complex64::new(-5.0, 0.0));
        assert_eq!(parse_complex("1.5+0.5i").unwrap(), Complex64::new(1.5, 0.5));
        assert_eq!(parse_complex("2-1i").unwrap(), Complex64::new(2.0, -1.0));
        assert_eq!(parse_complex("3i").unwrap(), Complex64::new(0.0, 3.0));
        assert_eq!(parse_complex("-2.5e-3").unwrap(), Complex64::new(-2.5e-3, 0.0));
        assert_eq!(parse_complex("1e-2+2e-3i").unwrap(), Complex64::new(1e-2, 2e-3));
        assert!(parse_complex("").is_err());
        assert!(parse_complex("bogus").is_err());
    }

    #[test]
    fn triples() {
        let t = parse_triple("-5,-5,-5").unwrap();
        assert!(t.iter().all(|z| *z == Complex64::new(-5.0, 0.0)));
        assert!(parse_triple("1,2").is_err());
    }
}
