//! Browser bindings for the `primechi` demo page.
//!
//! Each exported function returns a flat `Float64Array`; the layout is given
//! per function. The plain-Rust versions (without the `js_` prefix) carry
//! the logic and are what the native tests exercise.

use primechi::basel::{basel_partial, sin_product_partial, sin_product_relative_bound, sinc};
use primechi::character::CharacterAssignment;
use primechi::series::{DirichletWalk, SeriesPoint};
use std::f64::consts::PI;
use wasm_bindgen::prelude::*;

/// Largest `n` the page may request; keeps a single call well under a frame
/// budget on slow machines.
pub const MAX_N: u64 = 200_000;

pub const KIND_ONE: f64 = 0.0;
pub const KIND_PRIME: f64 = 1.0;
pub const KIND_COMPOSITE: f64 = 2.0;

fn check_limit(n: u64, what: &str) -> Result<(), String> {
    if n == 0 || n > MAX_N {
        return Err(format!("{what} must be in 1..={MAX_N}; got {n}"));
    }
    Ok(())
}

/// `[re, im, kind]` for `n = 1..=limit`.
pub fn unit_circle(limit: u64) -> Result<Vec<f64>, String> {
    check_limit(limit, "limit")?;
    let a = CharacterAssignment::new(limit as usize).map_err(|e| e.to_string())?;
    let mut out = Vec::with_capacity(3 * limit as usize);
    for n in 1..=limit {
        let z = a.get(n).expect("within limit");
        let kind = match n {
            1 => KIND_ONE,
            _ if a.is_prime(n) => KIND_PRIME,
            _ => KIND_COMPOSITE,
        };
        out.extend([z.re, z.im, kind]);
    }
    Ok(out)
}

/// `[L_re, L_im, ω_re, ω_im, λ_re, λ_im]` after each `n = 1..=depth`.
pub fn partial_sums(sigma: f64, t: f64, depth: u64) -> Result<Vec<f64>, String> {
    check_limit(depth, "depth")?;
    let s = SeriesPoint::new(sigma, t).map_err(|e| e.to_string())?;
    let a = CharacterAssignment::new(depth as usize).map_err(|e| e.to_string())?;
    let walk = DirichletWalk::new(&a, s, depth).map_err(|e| e.to_string())?;
    let mut out = Vec::with_capacity(6 * depth as usize);
    for st in walk {
        out.extend([
            st.dirichlet.re,
            st.dirichlet.im,
            st.omega.re,
            st.omega.im,
            st.lambda.re,
            st.lambda.im,
        ]);
    }
    Ok(out)
}

/// `[K, π²/6 − S_K, |Π_K(x) − sinc x|, bound_K(x)·|sinc x|]` at roughly
/// log-spaced `K` up to `depth`. The bound column is NaN where `|x| >= Kπ`.
pub fn convergence(x: f64, depth: u64) -> Result<Vec<f64>, String> {
    check_limit(depth, "depth")?;
    if !x.is_finite() {
        return Err(format!("x must be finite; got {x}"));
    }
    let limit = PI * PI / 6.0;
    let exact = sinc(x);
    let mut out = Vec::new();
    let mut k = 1u64;
    loop {
        let gap = limit - basel_partial(k).map_err(|e| e.to_string())?;
        let product_err = (sin_product_partial(x, k) - exact).abs();
        let bound = sin_product_relative_bound(x, k).map_or(f64::NAN, |b| b * exact.abs());
        out.extend([k as f64, gap, product_err, bound]);
        if k == depth {
            break;
        }
        k = (k + k / 4 + 1).min(depth);
    }
    Ok(out)
}

#[wasm_bindgen(js_name = unitCircle)]
pub fn js_unit_circle(limit: u32) -> Result<Vec<f64>, JsError> {
    unit_circle(limit.into()).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = partialSums)]
pub fn js_partial_sums(sigma: f64, t: f64, depth: u32) -> Result<Vec<f64>, JsError> {
    partial_sums(sigma, t, depth.into()).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = convergence)]
pub fn js_convergence(x: f64, depth: u32) -> Result<Vec<f64>, JsError> {
    convergence(x, depth.into()).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = maxN)]
pub fn js_max_n() -> u32 {
    MAX_N as u32
}
