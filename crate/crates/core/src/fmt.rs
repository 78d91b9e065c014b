//! Fixed-precision, locale-independent number formatting.
//!
//! Rust's float formatting rounds the exact binary value, breaking exact
//! decimal ties to even, and always uses '.' as the separator.

use num_complex::Complex64;

pub const DECIMALS: usize = 10;

/// `x` with 10 decimals; a value that rounds to zero prints without a sign.
pub fn fixed(x: f64) -> String {
    let s = format!("{x:.DECIMALS$}");
    match s.strip_prefix('-') {
        Some(rest) if rest.bytes().all(|b| b == b'0' || b == b'.') => rest.to_string(),
        _ => s,
    }
}

/// `a+bi` / `a-bi` with both parts at 10 decimals.
pub fn complex(z: Complex64) -> String {
    let im = fixed(z.im);
    if im.starts_with('-') {
        format!("{}{}i", fixed(z.re), im)
    } else {
        format!("{}+{}i", fixed(z.re), im)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn negative_zero_is_unsigned() {
        assert_eq!(fixed(-0.0), "0.0000000000");
        assert_eq!(fixed(-2.2e-16), "0.0000000000");
        assert_eq!(fixed(-1.0), "-1.0000000000");
    }

    #[test]
    fn ties_round_to_even() {
        // 2^-11 = 0.00048828125 is exact in binary; both are ties at 10 decimals
        assert_eq!(fixed(0.00048828125), "0.0004882812");
        assert_eq!(fixed(-0.00048828125), "-0.0004882812");
    }

    #[test]
    fn complex_signs() {
        assert_eq!(
            complex(Complex64::new(-0.5527707984, -0.8333333333)),
            "-0.5527707984-0.8333333333i"
        );
        assert_eq!(complex(Complex64::new(1.0, 0.0)), "1.0000000000+0.0000000000i");
        assert_eq!(complex(Complex64::new(1.0, -0.0)), "1.0000000000+0.0000000000i");
    }
}
