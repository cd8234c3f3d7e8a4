//! Closed-form geometric sums and per-panel complex weights.
//!
//! A panel is a triple of integers `n1 < n2 < n3`. Fitting a parabola through
//! the sampled values `f(n1), f(n2), f(n3)` and summing it analytically against
//! `exp(-ikn)` turns the partial sum
//!
//! ```text
//!   F(k; n1, n3) = Σ_{n=n1}^{n3-1} f(n) exp(-ikn)
//! ```
//!
//! into a three-term weighted form
//!
//! ```text
//!   w1 f(n1) e^{-ikn1} + w2 f(n2) e^{-ikn2} + w3 f(n3) e^{-ikn3},
//! ```
//!
//! exact whenever `f` restricted to the panel is a quadratic in `n`. The
//! weights are built from the moment sums over the span `L = n3 - n1`
//!
//! ```text
//!   Y0 = Σ_{m=0}^{L-1} e^{-ikm},   Y1 = Σ m e^{-ikm},   Y2 = Σ m² e^{-ikm},
//! ```
//!
//! which have closed forms with `sin(k/2)` denominators. Those denominators
//! cancel against the numerators as `k -> 0`, so below `|k|·L < 0.5` the
//! moments switch to a truncated Taylor series in `k` whose coefficients are
//! power sums `Σ n^m` (Faulhaber polynomials). At `k = 0` the weights use
//! dedicated real-valued forms.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Real transform parameter, kept in the canonical interval `[-π, π)`.
///
/// The weighted sums are 2π-periodic in `k`, so values outside the interval
/// are reduced modulo 2π on construction. Values already canonical are kept
/// bit-exact. `k = ±π` is fine: the `sin(k/2)` denominators are `±1` there.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Wavenumber(f64);

impl Wavenumber {
    pub const ZERO: Wavenumber = Wavenumber(0.0);

    pub fn new(k: f64) -> Self {
        debug_assert!(k.is_finite(), "wavenumber must be finite");
        if (-PI..PI).contains(&k) {
            Wavenumber(k)
        } else {
            Wavenumber((k + PI).rem_euclid(TAU) - PI)
        }
    }

    /// Canonical value in radians per unit index step.
    pub fn radians(&self) -> f64 {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0 == 0.0
    }
}

impl From<f64> for Wavenumber {
    fn from(k: f64) -> Self {
        Wavenumber::new(k)
    }
}

/// Three strictly ascending integer indices defining one quadratic panel.
///
/// The weighted form covers the half-open index range `[n1, n3 - 1]`; the
/// value at `n3` belongs to the next panel (or to the boundary term of the
/// assembled transform).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Panel {
    n1: i64,
    n2: i64,
    n3: i64,
}

impl Panel {
    pub fn new(n1: i64, n2: i64, n3: i64) -> Result<Self> {
        if n1 < n2 && n2 < n3 {
            Ok(Panel { n1, n2, n3 })
        } else {
            Err(Error::InvalidPanel { n1, n2, n3 })
        }
    }

    pub fn nodes(&self) -> (i64, i64, i64) {
        (self.n1, self.n2, self.n3)
    }

    /// `n3 - n1`, at least 2 by construction.
    pub fn span(&self) -> i64 {
        self.n3 - self.n1
    }
}

/// Complex weights attached to the three panel nodes at one wavenumber.
///
/// At `k = 0` all imaginary parts are exactly zero.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PanelWeights {
    pub w1: Complex64,
    pub w2: Complex64,
    pub w3: Complex64,
}

/// The geometric sum `y(k) = Σ_{m=0}^{L-1} e^{-ikm}` over a panel span `L`
/// together with its first and second derivatives in `k`.
///
/// Limits at `k -> 0`: `y -> L`, `y1 -> -i L(L-1)/2`, `y2 -> -L(L-1)(2L-1)/6`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct YTriple {
    pub y: Complex64,
    pub y1: Complex64,
    pub y2: Complex64,
    pub span: i64,
}

const PI: f64 = std::f64::consts::PI;
const TAU: f64 = std::f64::consts::TAU;

// ---------------------------------------------------------------------------
// Phase arithmetic.
//
// e^{-ikn} needs the product k·n reduced mod 2π. For n up to ~1e9 the plain
// f64 product already carries a rounding error of |kn|·eps ~ 1e-7 rad, which
// would dominate every tolerance in this crate. The product is therefore
// formed exactly (Dekker two-product) and reduced against a four-part
// splitting of 2π (Cody-Waite), leaving the angle accurate to a few ulp.
// ---------------------------------------------------------------------------

// fl(2π) split into short-significand pieces so that m·TAU_A and m·TAU_B are
// exact for |m| < 2^32, plus the in-f64 residual and the fl(2π) -> 2π tail.
const HI20: u64 = 0xFFFF_FFFF_0000_0000;
const TAU_A: f64 = f64::from_bits(TAU.to_bits() & HI20);
const TAU_B: f64 = f64::from_bits((TAU - TAU_A).to_bits() & HI20);
const TAU_C: f64 = TAU - TAU_A - TAU_B;
const TAU_D: f64 = 2.4492935982947064e-16;

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    const SPLIT: f64 = 134217729.0; // 2^27 + 1, Veltkamp splitting constant
    let p = a * b;
    let t = SPLIT * a;
    let ah = t - (t - a);
    let al = a - ah;
    let t = SPLIT * b;
    let bh = t - (t - b);
    let bl = b - bh;
    let e = ((ah * bh - p) + ah * bl + al * bh) + al * bl;
    (p, e)
}

/// `(k·n) mod 2π`, reduced to roughly `[-π, π]`, accurate to a few ulp for
/// products up to `|k·n| < 2^32·2π ≈ 2.7e10` (indices beyond ~8e9 at `|k| = π`
/// lose the exactness of the `m·TAU_A` products and degrade like a plain
/// product would).
pub(crate) fn reduced_angle(k: f64, n: i64) -> f64 {
    let nf = n as f64;
    debug_assert_eq!(nf as i64, n, "index magnitude exceeds exact f64 range");
    let (hi, lo) = two_prod(k, nf);
    let m = (hi / TAU).round();
    ((((hi - m * TAU_A) - m * TAU_B) - m * TAU_C) - m * TAU_D) + lo
}

/// `e^{-ikn}` with the accurately reduced phase.
pub(crate) fn unit_phase(k: f64, n: i64) -> Complex64 {
    let (sin, cos) = reduced_angle(k, n).sin_cos();
    Complex64::new(cos, -sin)
}

// ---------------------------------------------------------------------------
// Power sums for the small-k Taylor path.
// ---------------------------------------------------------------------------

const SMALL_K_SPAN: f64 = 0.5;
const TAYLOR_ORDER: usize = 12;
const MAX_POWER: usize = TAYLOR_ORDER + 2;

// B_0 .. B_14 with the B_1 = -1/2 convention.
const BERNOULLI: [f64; MAX_POWER + 1] = [
    1.0,
    -0.5,
    1.0 / 6.0,
    0.0,
    -1.0 / 30.0,
    0.0,
    1.0 / 42.0,
    0.0,
    -1.0 / 30.0,
    0.0,
    5.0 / 66.0,
    0.0,
    -691.0 / 2730.0,
    0.0,
    7.0 / 6.0,
];

/// `Σ_{n=0}^{L-1} n^p` via the Bernoulli form of the Faulhaber polynomial.
///
/// For `L <= p` the Bernoulli terms alternate with magnitudes far above the
/// result; a direct sum of the handful of terms is exact there instead.
fn power_sum(p: usize, l: f64) -> f64 {
    debug_assert!(p <= MAX_POWER);
    if l <= 16.0 {
        return (0..l as i64).map(|n| (n as f64).powi(p as i32)).sum();
    }
    let mut binom = 1.0; // C(p+1, j)
    let mut lpow = l.powi(p as i32 + 1);
    let mut acc = 0.0;
    for (j, b) in BERNOULLI.iter().enumerate().take(p + 1) {
        acc += binom * b * lpow;
        binom *= (p + 1 - j) as f64 / (j + 1) as f64;
        lpow /= l;
    }
    acc / (p + 1) as f64
}

// ---------------------------------------------------------------------------
// Moment sums Y0, Y1 and the combination C2 = Y2 - L·Y1.
//
// C2 is carried instead of Y2 because the weight formulas only need Y2 in
// combinations where its leading i L² e^{-ik(L-1/2)}/(2 sin(k/2)) part cancels
// against L·Y1; forming that cancellation symbolically keeps the weights
// accurate for spans up to 1e9.
// ---------------------------------------------------------------------------

struct Moments {
    y0: Complex64,
    y1: Complex64,
    c2: Complex64,
}

fn moments(k: f64, span: i64) -> Moments {
    let lf = span as f64;
    if k.abs() * lf < SMALL_K_SPAN {
        moments_taylor(k, lf)
    } else {
        moments_closed(k, span)
    }
}

fn moments_taylor(k: f64, lf: f64) -> Moments {
    let mut p = [0.0; MAX_POWER + 1];
    for (m, slot) in p.iter_mut().enumerate() {
        *slot = power_sum(m, lf);
    }
    let z = Complex64::new(0.0, -k);
    let mut term = Complex64::new(1.0, 0.0); // z^t / t!
    let mut y0 = Complex64::new(0.0, 0.0);
    let mut y1 = Complex64::new(0.0, 0.0);
    let mut c2 = Complex64::new(0.0, 0.0);
    for t in 0..=TAYLOR_ORDER {
        y0 += term * p[t];
        y1 += term * p[t + 1];
        c2 += term * (p[t + 2] - lf * p[t + 1]);
        term = term * z / (t + 1) as f64;
    }
    Moments { y0, y1, c2 }
}

fn moments_closed(k: f64, span: i64) -> Moments {
    let lf = span as f64;
    let s = (0.5 * k).sin();
    let s2 = s * s;
    // (k L / 2) mod 2π; all longer phases are products of this and e^{±ik/2}.
    let half = reduced_angle(0.5 * k, span);
    let (sin_half, cos_half) = half.sin_cos();
    let e_half = Complex64::new(cos_half, -sin_half); // e^{-ikL/2}
    let e_fwd = Complex64::cis(0.5 * k);
    let e_lm = e_half * e_half * e_fwd; // e^{-ik(L-1/2)}

    let y0 = e_half * e_fwd * (sin_half / s);
    let y1 = Complex64::i() * (e_lm * (lf / (2.0 * s)) - e_half * (sin_half / (2.0 * s2)));
    let c2 = e_half * Complex64::new(lf * cos_half, -sin_half) / (2.0 * s2)
        - e_half * e_fwd.conj() * (sin_half / (2.0 * s2 * s));
    Moments { y0, y1, c2 }
}

// ---------------------------------------------------------------------------
// Public operations.
// ---------------------------------------------------------------------------

/// Evaluate `y(k)`, `y'(k)`, `y''(k)` for a panel span `L >= 2`.
///
/// Uses the closed forms away from `k = 0` and the Faulhaber-coefficient
/// Taylor series when `|k|·L < 0.5`; at `k = 0` the series degenerates to the
/// exact limits.
pub fn y_triple(k: Wavenumber, span: i64) -> Result<YTriple> {
    if span < 2 {
        return Err(Error::SpanTooSmall { span });
    }
    let m = moments(k.radians(), span);
    let lf = span as f64;
    Ok(YTriple {
        y: m.y0,
        // Y1 = Σ m e^{-ikm} = i y'(k), Y2 = Σ m² e^{-ikm} = -y''(k).
        y1: m.y1 * Complex64::new(0.0, -1.0),
        y2: -(m.c2 + m.y1 * lf),
        span,
    })
}

/// Complex weights `(w1, w2, w3)` such that
/// `Σ_{n=n1}^{n3-1} f(n) e^{-ikn} ≈ w1 f(n1) e^{-ikn1} + w2 f(n2) e^{-ikn2} + w3 f(n3) e^{-ikn3}`,
/// exactly for `f` quadratic in `n`.
pub fn panel_weights(k: Wavenumber, panel: &Panel) -> PanelWeights {
    let (n1, n2, n3) = panel.nodes();
    let d21 = (n2 - n1) as f64;
    let d31 = (n3 - n1) as f64;
    let d32 = (n3 - n2) as f64;

    if k.is_zero() {
        let w1 = (d31 + 1.0) * (3.0 * d21 - d31 + 1.0) / (6.0 * d21);
        let w2 = d31 * (d31 * d31 - 1.0) / (6.0 * d21 * d32);
        let w3 = (d31 - 1.0) * (2.0 * d31 - 3.0 * d21 - 1.0) / (6.0 * d32);
        return PanelWeights {
            w1: Complex64::new(w1, 0.0),
            w2: Complex64::new(w2, 0.0),
            w3: Complex64::new(w3, 0.0),
        };
    }

    let kk = k.radians();
    let m = moments(kk, panel.span());
    let p21 = unit_phase(kk, n1 - n2); // e^{+ik(n2-n1)}
    let p31 = unit_phase(kk, n1 - n3); // e^{+ik(n3-n1)}
    PanelWeights {
        w1: m.y0 + (m.c2 - m.y1 * d21) / (d21 * d31),
        w2: -m.c2 * p21 / (d21 * d32),
        w3: (m.c2 + m.y1 * d32) * p31 / (d31 * d32),
    }
}

/// The weighted three-term approximation of `Σ_{n=n1}^{n3-1} f(n) e^{-ikn}`
/// given the sampled values `f1 = f(n1)`, `f2 = f(n2)`, `f3 = f(n3)`.
pub fn panel_sum(
    k: Wavenumber,
    panel: &Panel,
    f1: Complex64,
    f2: Complex64,
    f3: Complex64,
) -> Complex64 {
    let (n1, n2, n3) = panel.nodes();
    let w = panel_weights(k, panel);
    let kk = k.radians();
    w.w1 * f1 * unit_phase(kk, n1) + w.w2 * f2 * unit_phase(kk, n2) + w.w3 * f3 * unit_phase(kk, n3)
}
