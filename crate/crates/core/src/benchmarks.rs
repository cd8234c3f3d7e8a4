//! Built-in benchmark problems with closed-form references.
//!
//! Three classic summation problems exercise the machinery end to end and
//! double as CLI demos: the `ζ(p)` series sum over a geometric node sequence,
//! and two cosine Fourier series (a Lorentzian-kernel one that sums to
//! `cosh[a(1-x)]/sinh(a)` and a resonant one that sums to
//! `sin(ax) - cos(ax)/tan(a)`). The `1/a` constants and `±2/a` prefactors of
//! the series live here in the driver; the transform layer below stays a pure
//! `Σ f(n) e^{-ikn}` engine.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::kernel::Wavenumber;
use crate::nodes::{hybrid_nodes, q_sequence, split_nodes, HybridSpec, QSequenceSpec, SplitSpec};
use crate::oracle::{exact_value, zeta_reference, ExactExample};
use crate::transform::{assemble_weights, cosine_transform, piecewise_transform, FnSampled};

/// One row of the zeta benchmark table.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZetaRow {
    pub p: f64,
    /// Weighted sum over the node sequence.
    pub value: f64,
    /// Tabulated ζ(p) when known.
    pub reference: Option<f64>,
    /// value - reference.
    pub delta: Option<f64>,
    pub node_count: usize,
    pub cutoff: i64,
    pub efficiency: f64,
}

/// `Σ_{n>=1} n^{-p}` for each exponent, all sharing one node sequence and one
/// k = 0 weight table.
pub fn zeta_table(exponents: &[f64], ratio: f64, count: usize) -> Result<Vec<ZetaRow>> {
    for &p in exponents {
        if p <= 1.0 {
            return Err(Error::DivergentSeries { p });
        }
    }
    let seq = q_sequence(&QSequenceSpec::new(ratio, count)?)?;
    let cutoff = seq.last();
    let table = assemble_weights(Wavenumber::ZERO, &seq);
    exponents
        .iter()
        .map(|&p| {
            let f = FnSampled::new(1, cutoff, move |n| Complex64::new((n as f64).powf(-p), 0.0));
            let r = table.apply(&seq, &f)?;
            let reference = zeta_reference(p);
            Ok(ZetaRow {
                p,
                value: r.value.re,
                reference,
                delta: reference.map(|z| r.value.re - z),
                node_count: r.node_count,
                cutoff: r.cutoff,
                efficiency: r.efficiency,
            })
        })
        .collect()
}

/// One grid point of a Fourier-series benchmark curve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurveRow {
    pub x: f64,
    pub approx: f64,
    pub exact: f64,
    /// approx - exact.
    pub error: f64,
}

/// The summand `1/((nπ/a)² + 1)`: flat below `n ≈ a/π`, quadratic decay above.
pub fn lorentzian_integrand(a: f64) -> impl Fn(i64) -> Complex64 + Copy {
    move |n| {
        let u = n as f64 * PI / a;
        Complex64::new(1.0 / (u * u + 1.0), 0.0)
    }
}

/// The summand `1/((nπ/a)² - 1)`, with a pole at the continuum point `a/π`.
pub fn resonant_integrand(a: f64) -> impl Fn(i64) -> Complex64 + Copy {
    move |n| {
        let u = n as f64 * PI / a;
        Complex64::new(1.0 / (u * u - 1.0), 0.0)
    }
}

/// `F(x) = 1/a + (2/a) Σ cos(nπx)/((nπ/a)²+1)` over hybrid nodes, with the
/// closed form `cosh[a(1-x)]/sinh(a)` alongside. The wavenumber is `k = xπ`.
pub fn lorentzian_curve(a: f64, grid: &[f64], count: usize) -> Result<Vec<CurveRow>> {
    let spec = HybridSpec::from_scale(a, count)?;
    let nodes = hybrid_nodes(&spec)?;
    let f = FnSampled::new(1, spec.cutoff(), lorentzian_integrand(a));
    grid.iter()
        .map(|&x| {
            let fc = cosine_transform(&f, &nodes, Wavenumber::new(x * PI))?;
            let approx = 1.0 / a + 2.0 / a * fc.re;
            let exact = exact_value(&ExactExample::Lorentzian { a }, x)?;
            Ok(CurveRow {
                x,
                approx,
                exact,
                error: approx - exact,
            })
        })
        .collect()
}

/// `F(x) = 1/a - (2/a) Σ cos(nπx)/((nπ/a)²-1)` over split segments, with the
/// closed form `sin(ax) - cos(ax)/tan(a)` alongside.
pub fn resonant_curve(a: f64, grid: &[f64], count: usize) -> Result<Vec<CurveRow>> {
    // Rejects integer a/π before any nodes are built.
    exact_value(&ExactExample::Resonant { a }, 0.5)?;
    let spec = SplitSpec::from_scale(a, count)?;
    let segments = split_nodes(&spec)?;
    let f = FnSampled::new(1, spec.cutoff(), resonant_integrand(a));
    grid.iter()
        .map(|&x| {
            let fc = piecewise_transform(&segments, &f, Wavenumber::new(x * PI))?;
            let approx = 1.0 / a - 2.0 / a * fc.value.re;
            let exact = exact_value(&ExactExample::Resonant { a }, x)?;
            Ok(CurveRow {
                x,
                approx,
                exact,
                error: approx - exact,
            })
        })
        .collect()
}

/// The default curve grid: `x = 0.01·i` for `i = 1..=199`, covering `(0, 2)`
/// away from the endpoints where the closed forms jump between periods.
pub fn default_grid() -> Vec<f64> {
    (1..=199).map(|i| 0.01 * i as f64).collect()
}

/// Uniform inclusive grid with `count` points.
pub fn grid(min: f64, max: f64, count: usize) -> Result<Vec<f64>> {
    if count == 0 || !min.is_finite() || !max.is_finite() || min >= max {
        return Err(Error::InvalidSequence {
            reason: format!(
                "grid needs finite min < max and count >= 1, got [{min}, {max}] x {count}"
            ),
        });
    }
    if count == 1 {
        return Ok(vec![min]);
    }
    let step = (max - min) / (count - 1) as f64;
    Ok((0..count).map(|i| min + step * i as f64).collect())
}
