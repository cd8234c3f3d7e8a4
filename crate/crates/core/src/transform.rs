//! Node sequences, assembled weight tables, and the transform entry points.
//!
//! An odd-length ascending node sequence `n_1 < n_2 < ... < n_{2m+1}` tiles
//! the summation range with `m` panels `(n_{2ℓ-1}, n_{2ℓ}, n_{2ℓ+1})`. Each
//! panel covers the half-open range `[n_{2ℓ-1}, n_{2ℓ+1} - 1]`, so the panel
//! weights chain into per-node weights
//!
//! ```text
//!   W_1 = w1(panel 1)
//!   W_{2ℓ}   = w2(panel ℓ)
//!   W_{2ℓ+1} = w3(panel ℓ) + w1(panel ℓ+1)
//!   W_{2m+1} = w3(panel m) + 1        // the final term f(n_b) e^{-ikn_b}
//! ```
//!
//! and the full transform becomes `F(k) ≈ Σ_j W_j f(n_j) e^{-ikn_j}` with
//! exactly `2m + 1` evaluations of `f`. Weight tables depend only on `(k,
//! nodes)`, never on `f`, so one table can be reused across many functions.

use std::cell::Cell;
use std::collections::HashMap;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::kernel::{self, Panel, Wavenumber};

/// Strictly ascending, odd-length (≥ 3) list of sampling indices.
///
/// The first and last entries are the endpoints of the range the sequence
/// covers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NodeSequence {
    nodes: Vec<i64>,
}

impl NodeSequence {
    pub fn new(nodes: Vec<i64>) -> Result<Self> {
        if nodes.len() < 3 {
            return Err(Error::InvalidSequence {
                reason: format!("need at least 3 nodes, got {}", nodes.len()),
            });
        }
        if nodes.len().is_multiple_of(2) {
            return Err(Error::InvalidSequence {
                reason: format!("length must be odd, got {}", nodes.len()),
            });
        }
        for pair in nodes.windows(2) {
            if pair[0] >= pair[1] {
                return Err(Error::InvalidSequence {
                    reason: format!(
                        "nodes must ascend strictly, got {} then {}",
                        pair[0], pair[1]
                    ),
                });
            }
        }
        Ok(NodeSequence { nodes })
    }

    pub fn nodes(&self) -> &[i64] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        false // length is at least 3 by construction
    }

    pub fn first(&self) -> i64 {
        self.nodes[0]
    }

    pub fn last(&self) -> i64 {
        *self.nodes.last().unwrap()
    }

    pub fn panel_count(&self) -> usize {
        (self.nodes.len() - 1) / 2
    }

    fn panel(&self, i: usize) -> Panel {
        Panel::new(
            self.nodes[2 * i],
            self.nodes[2 * i + 1],
            self.nodes[2 * i + 2],
        )
        .expect("sequence nodes ascend strictly")
    }
}

/// Supplier of complex samples `f(n)` over an inclusive integer domain.
///
/// Transforms evaluate `f` only at their nodes (or, for direct segments, over
/// the segment range), never over the whole domain.
pub trait SampledFunction {
    fn eval(&self, n: i64) -> Complex64;

    /// Inclusive `[lo, hi]` bounds within which `eval` is meaningful.
    fn domain(&self) -> (i64, i64);
}

/// Closure-backed [`SampledFunction`].
pub struct FnSampled<F> {
    lo: i64,
    hi: i64,
    f: F,
}

impl<F: Fn(i64) -> Complex64> FnSampled<F> {
    pub fn new(lo: i64, hi: i64, f: F) -> Self {
        FnSampled { lo, hi, f }
    }
}

impl<F: Fn(i64) -> Complex64> SampledFunction for FnSampled<F> {
    fn eval(&self, n: i64) -> Complex64 {
        (self.f)(n)
    }

    fn domain(&self) -> (i64, i64) {
        (self.lo, self.hi)
    }
}

/// Table-backed [`SampledFunction`] keyed by index.
///
/// The domain is the min/max key span; interior indices may be missing, so
/// callers feeding node files should check coverage with [`Self::covers`]
/// before transforming. Missing lookups evaluate to zero.
pub struct TableSampled {
    values: HashMap<i64, Complex64>,
    lo: i64,
    hi: i64,
}

impl TableSampled {
    pub fn from_pairs(pairs: impl IntoIterator<Item = (i64, Complex64)>) -> Result<Self> {
        let values: HashMap<i64, Complex64> = pairs.into_iter().collect();
        let lo = values.keys().min().copied();
        let hi = values.keys().max().copied();
        match (lo, hi) {
            (Some(lo), Some(hi)) => Ok(TableSampled { values, lo, hi }),
            _ => Err(Error::InvalidSequence {
                reason: "sample table is empty".into(),
            }),
        }
    }

    pub fn covers(&self, n: i64) -> bool {
        self.values.contains_key(&n)
    }
}

impl SampledFunction for TableSampled {
    fn eval(&self, n: i64) -> Complex64 {
        self.values
            .get(&n)
            .copied()
            .unwrap_or(Complex64::new(0.0, 0.0))
    }

    fn domain(&self) -> (i64, i64) {
        (self.lo, self.hi)
    }
}

/// Wrapper that counts evaluations, for checking the M-evaluation contract.
pub struct CountingSampled<'a, F: SampledFunction + ?Sized> {
    inner: &'a F,
    count: Cell<usize>,
}

impl<'a, F: SampledFunction + ?Sized> CountingSampled<'a, F> {
    pub fn new(inner: &'a F) -> Self {
        CountingSampled {
            inner,
            count: Cell::new(0),
        }
    }

    pub fn count(&self) -> usize {
        self.count.get()
    }
}

impl<F: SampledFunction + ?Sized> SampledFunction for CountingSampled<'_, F> {
    fn eval(&self, n: i64) -> Complex64 {
        self.count.set(self.count.get() + 1);
        self.inner.eval(n)
    }

    fn domain(&self) -> (i64, i64) {
        self.inner.domain()
    }
}

/// Per-node weights `W_j` for one node sequence at one wavenumber.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightTable {
    k: Wavenumber,
    weights: Vec<Complex64>,
}

/// Build the per-node weight table for `nodes` at wavenumber `k`.
pub fn assemble_weights(k: Wavenumber, nodes: &NodeSequence) -> WeightTable {
    let mut weights = vec![Complex64::new(0.0, 0.0); nodes.len()];
    for i in 0..nodes.panel_count() {
        let pw = kernel::panel_weights(k, &nodes.panel(i));
        weights[2 * i] += pw.w1;
        weights[2 * i + 1] += pw.w2;
        weights[2 * i + 2] += pw.w3;
    }
    *weights.last_mut().unwrap() += 1.0;
    WeightTable { k, weights }
}

impl WeightTable {
    pub fn k(&self) -> Wavenumber {
        self.k
    }

    pub fn weights(&self) -> &[Complex64] {
        &self.weights
    }

    pub fn weight_sum(&self) -> Complex64 {
        self.weights.iter().sum()
    }

    /// Evaluate `Σ_j W_j f(n_j) e^{-ikn_j}` against the sequence this table
    /// was built from. Exactly one evaluation of `f` per node.
    pub fn apply<F: SampledFunction + ?Sized>(
        &self,
        nodes: &NodeSequence,
        f: &F,
    ) -> Result<TransformResult> {
        if nodes.len() != self.weights.len() {
            return Err(Error::InvalidSequence {
                reason: format!(
                    "weight table built for {} nodes applied to {}",
                    self.weights.len(),
                    nodes.len()
                ),
            });
        }
        check_domain(f, nodes.first(), nodes.last())?;
        let k = self.k.radians();
        let mut value = Complex64::new(0.0, 0.0);
        for (&n, &w) in nodes.nodes().iter().zip(&self.weights) {
            value += w * f.eval(n) * kernel::unit_phase(k, n);
        }
        Ok(TransformResult::new(value, nodes.len(), nodes.last()))
    }
}

/// Transform value plus diagnostics.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransformResult {
    pub value: Complex64,
    /// Number of function evaluations spent.
    pub node_count: usize,
    /// Largest retained index; terms beyond it are the truncation error.
    pub cutoff: i64,
    /// Terms a direct sum would touch per term actually evaluated.
    pub efficiency: f64,
}

impl TransformResult {
    fn new(value: Complex64, node_count: usize, cutoff: i64) -> Self {
        TransformResult {
            value,
            node_count,
            cutoff,
            efficiency: cutoff as f64 / node_count as f64,
        }
    }
}

fn check_domain<F: SampledFunction + ?Sized>(f: &F, first: i64, last: i64) -> Result<()> {
    let (lo, hi) = f.domain();
    if first < lo {
        return Err(Error::Domain {
            node: first,
            lo,
            hi,
        });
    }
    if last > hi {
        return Err(Error::Domain { node: last, lo, hi });
    }
    Ok(())
}

/// `F(k) = Σ_{n} f(n) e^{-ikn}` over the range covered by `nodes`.
pub fn dft<F: SampledFunction + ?Sized>(
    f: &F,
    nodes: &NodeSequence,
    k: Wavenumber,
) -> Result<TransformResult> {
    assemble_weights(k, nodes).apply(nodes, f)
}

/// Series sum `Σ_n f(n)`: the `k = 0` transform on the real weight path.
pub fn series_sum<F: SampledFunction + ?Sized>(
    f: &F,
    nodes: &NodeSequence,
) -> Result<TransformResult> {
    dft(f, nodes, Wavenumber::ZERO)
}

/// `F_s(k) = Σ_n f(n) sin(kn)`, evaluated as
/// `Σ_j f(n_j) [Re W_j sin(kn_j) - Im W_j cos(kn_j)]`.
///
/// Real for real `f`; the formula stays valid for complex `f` by linearity.
pub fn sine_transform<F: SampledFunction + ?Sized>(
    f: &F,
    nodes: &NodeSequence,
    k: Wavenumber,
) -> Result<Complex64> {
    check_domain(f, nodes.first(), nodes.last())?;
    let table = assemble_weights(k, nodes);
    let kk = k.radians();
    let mut acc = Complex64::new(0.0, 0.0);
    for (&n, w) in nodes.nodes().iter().zip(table.weights()) {
        let (sin, cos) = kernel::reduced_angle(kk, n).sin_cos();
        acc += f.eval(n) * (w.re * sin - w.im * cos);
    }
    Ok(acc)
}

/// `F_c(k) = Σ_n f(n) cos(kn)`, evaluated as
/// `Σ_j f(n_j) [Re W_j cos(kn_j) + Im W_j sin(kn_j)]`.
pub fn cosine_transform<F: SampledFunction + ?Sized>(
    f: &F,
    nodes: &NodeSequence,
    k: Wavenumber,
) -> Result<Complex64> {
    check_domain(f, nodes.first(), nodes.last())?;
    let table = assemble_weights(k, nodes);
    let kk = k.radians();
    let mut acc = Complex64::new(0.0, 0.0);
    for (&n, w) in nodes.nodes().iter().zip(table.weights()) {
        let (sin, cos) = kernel::reduced_angle(kk, n).sin_cos();
        acc += f.eval(n) * (w.re * cos + w.im * sin);
    }
    Ok(acc)
}

/// One piece of a piecewise-smooth summation problem.
///
/// A weighted segment covers the inclusive range between its sequence
/// endpoints; a direct segment is summed term by term, which is the right
/// tool when the range is too short for panels (or short enough that exact
/// summation is cheaper).
#[derive(Debug, Clone, PartialEq)]
pub struct Segment {
    lo: i64,
    hi: i64,
    plan: SegmentPlan,
}

#[derive(Debug, Clone, PartialEq)]
enum SegmentPlan {
    Weighted(NodeSequence),
    Direct,
}

impl Segment {
    pub fn weighted(nodes: NodeSequence) -> Segment {
        Segment {
            lo: nodes.first(),
            hi: nodes.last(),
            plan: SegmentPlan::Weighted(nodes),
        }
    }

    pub fn direct(lo: i64, hi: i64) -> Result<Segment> {
        if lo > hi {
            return Err(Error::InvalidSequence {
                reason: format!("direct segment range [{lo}, {hi}] is empty"),
            });
        }
        Ok(Segment {
            lo,
            hi,
            plan: SegmentPlan::Direct,
        })
    }

    pub fn range(&self) -> (i64, i64) {
        (self.lo, self.hi)
    }

    pub fn is_direct(&self) -> bool {
        matches!(self.plan, SegmentPlan::Direct)
    }

    pub fn node_sequence(&self) -> Option<&NodeSequence> {
        match &self.plan {
            SegmentPlan::Weighted(nodes) => Some(nodes),
            SegmentPlan::Direct => None,
        }
    }
}

/// Sum the transforms of disjoint segments.
pub fn piecewise_transform<F: SampledFunction + ?Sized>(
    segments: &[Segment],
    f: &F,
    k: Wavenumber,
) -> Result<TransformResult> {
    let mut order: Vec<&Segment> = segments.iter().collect();
    order.sort_by_key(|s| s.lo);
    for pair in order.windows(2) {
        if pair[0].hi >= pair[1].lo {
            return Err(Error::InvalidPartition { at: pair[1].lo });
        }
    }

    let kk = k.radians();
    let mut value = Complex64::new(0.0, 0.0);
    let mut evals = 0usize;
    let mut cutoff = i64::MIN;
    for seg in order {
        cutoff = cutoff.max(seg.hi);
        match &seg.plan {
            SegmentPlan::Weighted(nodes) => {
                let part = dft(f, nodes, k)?;
                value += part.value;
                evals += part.node_count;
            }
            SegmentPlan::Direct => {
                check_domain(f, seg.lo, seg.hi)?;
                for n in seg.lo..=seg.hi {
                    value += f.eval(n) * kernel::unit_phase(kk, n);
                }
                evals += (seg.hi - seg.lo + 1) as usize;
            }
        }
    }
    if evals == 0 {
        return Err(Error::InvalidSequence {
            reason: "piecewise transform needs at least one segment".into(),
        });
    }
    Ok(TransformResult::new(value, evals, cutoff))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn seq(nodes: &[i64]) -> NodeSequence {
        NodeSequence::new(nodes.to_vec()).unwrap()
    }

    fn brute(f: impl Fn(i64) -> Complex64, lo: i64, hi: i64, k: f64) -> Complex64 {
        (lo..=hi).map(|n| f(n) * kernel::unit_phase(k, n)).sum()
    }

    #[test]
    fn sequence_validation() {
        assert!(NodeSequence::new(vec![0, 1, 2]).is_ok());
        assert!(matches!(
            NodeSequence::new(vec![0, 1]),
            Err(Error::InvalidSequence { .. })
        ));
        assert!(matches!(
            NodeSequence::new(vec![0, 1, 2, 3]),
            Err(Error::InvalidSequence { .. })
        ));
        assert!(matches!(
            NodeSequence::new(vec![0, 2, 2]),
            Err(Error::InvalidSequence { .. })
        ));
        assert!(matches!(
            NodeSequence::new(vec![5, 3, 8]),
            Err(Error::InvalidSequence { .. })
        ));
    }

    #[test]
    fn unit_sequence_weights_at_zero() {
        let table = assemble_weights(Wavenumber::ZERO, &seq(&[0, 1, 2]));
        for w in table.weights() {
            assert_eq!(*w, Complex64::new(1.0, 0.0));
        }
        // Σ W_j at k=0 counts the integers in the covered range.
        let table = assemble_weights(Wavenumber::ZERO, &seq(&[0, 2, 4, 6, 8]));
        assert_abs_diff_eq!(table.weight_sum().re, 9.0, epsilon = 1e-11);
        assert_eq!(table.weight_sum().im, 0.0);
    }

    #[test]
    fn irregular_sequence_reproduces_quadratics() {
        let nodes = seq(&[0, 1, 2, 4, 8]);
        let q = |n: i64| {
            let x = n as f64;
            Complex64::new(2.0 - 3.0 * x + x * x, 0.0)
        };
        let f = FnSampled::new(0, 8, q);
        for k in [0.3, 2.9] {
            let got = dft(&f, &nodes, Wavenumber::new(k)).unwrap().value;
            let want = brute(q, 0, 8, k);
            assert!(
                (got - want).norm() <= 1e-10 * want.norm(),
                "k={k}: got {got}, want {want}"
            );
        }
    }

    #[test]
    fn constant_function_over_any_cover() {
        let one = |_: i64| Complex64::new(1.0, 0.0);
        for nodes in [
            seq(&[0, 50, 100]),
            seq(&(0..=100).step_by(10).collect::<Vec<_>>()),
        ] {
            let f = FnSampled::new(0, 100, one);
            let r = series_sum(&f, &nodes).unwrap();
            assert_abs_diff_eq!(r.value.re, 101.0, epsilon = 1e-9);
            assert_abs_diff_eq!(r.value.im, 0.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn quadratic_dft_against_brute_force() {
        let sq = |n: i64| Complex64::new((n * n) as f64, 0.0);
        let nodes = seq(&(0..=50).step_by(5).collect::<Vec<_>>());
        let f = FnSampled::new(0, 50, sq);
        let got = dft(&f, &nodes, Wavenumber::new(1.0)).unwrap();
        let want = brute(sq, 0, 50, 1.0);
        assert!((got.value - want).norm() <= 1e-10 * want.norm());
        assert_eq!(got.node_count, 11);
        assert_eq!(got.cutoff, 50);
    }

    #[test]
    fn series_sum_examples() {
        let f = FnSampled::new(0, 10, |n| Complex64::new(n as f64, 0.0));
        let r = series_sum(&f, &seq(&[0, 5, 10])).unwrap();
        assert_abs_diff_eq!(r.value.re, 55.0, epsilon = 1e-10);

        let zero = FnSampled::new(-5, 5, |_| Complex64::new(0.0, 0.0));
        let r = series_sum(&zero, &seq(&[-5, 0, 5])).unwrap();
        assert_eq!(r.value, Complex64::new(0.0, 0.0));
    }

    #[test]
    fn evaluation_count_is_exactly_m() {
        let f = FnSampled::new(0, 1000, |n| Complex64::new(1.0 / (1 + n) as f64, 0.0));
        let counter = CountingSampled::new(&f);
        let nodes = seq(&[0, 3, 10, 40, 1000]);
        dft(&counter, &nodes, Wavenumber::new(0.8)).unwrap();
        assert_eq!(counter.count(), 5);
    }

    #[test]
    fn domain_violations_are_reported() {
        let f = FnSampled::new(0, 10, |_| Complex64::new(1.0, 0.0));
        let err = dft(&f, &seq(&[0, 5, 11]), Wavenumber::ZERO).unwrap_err();
        assert_eq!(
            err,
            Error::Domain {
                node: 11,
                lo: 0,
                hi: 10
            }
        );
    }

    #[test]
    fn sine_cosine_split_real_dft() {
        let vals: Vec<f64> = (0..=20)
            .map(|n| ((n * 7919) % 23) as f64 / 23.0 - 0.4)
            .collect();
        let f = FnSampled::new(0, 20, move |n| Complex64::new(vals[n as usize], 0.0));
        let nodes = seq(&[0, 2, 5, 9, 14, 17, 20]);
        for k in [0.0, 0.9, -1.4, 2.7] {
            let k = Wavenumber::new(k);
            let d = dft(&f, &nodes, k).unwrap().value;
            let s = sine_transform(&f, &nodes, k).unwrap();
            let c = cosine_transform(&f, &nodes, k).unwrap();
            assert_abs_diff_eq!(s.re, -d.im, epsilon = 1e-12);
            assert_abs_diff_eq!(c.re, d.re, epsilon = 1e-12);
            assert_eq!(s.im, 0.0);
            assert_eq!(c.im, 0.0);
        }
    }

    #[test]
    fn sine_transform_examples() {
        let f = FnSampled::new(0, 2, |n| Complex64::new(n as f64, 0.0));
        let nodes = seq(&[0, 1, 2]);
        // Σ n sin(πn/2) over 0..=2 is sin(π/2) + 2 sin(π) = 1.
        let s = sine_transform(&f, &nodes, Wavenumber::new(0.5 * std::f64::consts::PI)).unwrap();
        assert_abs_diff_eq!(s.re, 1.0, epsilon = 1e-12);
        // k = 0 kills every term.
        let s = sine_transform(&f, &nodes, Wavenumber::ZERO).unwrap();
        assert_eq!(s, Complex64::new(0.0, 0.0));
    }

    #[test]
    fn cosine_at_zero_is_series_sum() {
        let f = FnSampled::new(1, 41, |n| Complex64::new(1.0 / (n * n) as f64, 0.0));
        let nodes = seq(&(1..=41).collect::<Vec<_>>());
        let c = cosine_transform(&f, &nodes, Wavenumber::ZERO).unwrap();
        let s = series_sum(&f, &nodes).unwrap().value;
        assert_abs_diff_eq!(c.re, s.re, epsilon = 1e-13);
    }

    #[test]
    fn complex_samples_pass_through_linearly() {
        let g = |n: i64| Complex64::new((n as f64).cos(), 0.3 * n as f64);
        let f = FnSampled::new(0, 12, g);
        let nodes = seq(&(0..=12).collect::<Vec<_>>());
        let k = Wavenumber::new(1.1);
        let s = sine_transform(&f, &nodes, k).unwrap();
        let c = cosine_transform(&f, &nodes, k).unwrap();
        let want_s: Complex64 = (0..=12).map(|n| g(n) * (1.1 * n as f64).sin()).sum();
        let want_c: Complex64 = (0..=12).map(|n| g(n) * (1.1 * n as f64).cos()).sum();
        assert!((s - want_s).norm() <= 1e-11 * want_s.norm());
        assert!((c - want_c).norm() <= 1e-11 * want_c.norm());
    }

    #[test]
    fn piecewise_single_segment_matches_dft() {
        let g = |n: i64| Complex64::new(1.0 / (1.0 + n as f64), 0.0);
        let f = FnSampled::new(0, 60, g);
        let nodes = seq(&(0..=60).step_by(6).collect::<Vec<_>>());
        let k = Wavenumber::new(0.45);
        let whole = dft(&f, &nodes, k).unwrap();
        let split = piecewise_transform(&[Segment::weighted(nodes.clone())], &f, k).unwrap();
        assert_eq!(whole.value, split.value);
        assert_eq!(split.cutoff, 60);
    }

    #[test]
    fn piecewise_split_with_direct_tail() {
        let g = |n: i64| {
            let x = n as f64;
            Complex64::new(1.0 - 0.5 * x + 0.25 * x * x, 0.0)
        };
        let f = FnSampled::new(0, 10, g);
        let k = Wavenumber::new(1.7);
        let segments = [
            Segment::weighted(seq(&[0, 2, 5])),
            Segment::direct(6, 10).unwrap(),
        ];
        let got = piecewise_transform(&segments, &f, k).unwrap();
        let want = brute(g, 0, 10, 1.7);
        assert!((got.value - want).norm() <= 1e-10 * want.norm());
        assert_eq!(got.node_count, 3 + 5);
    }

    #[test]
    fn piecewise_rejects_overlap() {
        let f = FnSampled::new(0, 20, |_| Complex64::new(1.0, 0.0));
        let segments = [
            Segment::weighted(seq(&[0, 5, 10])),
            Segment::weighted(seq(&[10, 15, 20])),
        ];
        let err = piecewise_transform(&segments, &f, Wavenumber::ZERO).unwrap_err();
        assert_eq!(err, Error::InvalidPartition { at: 10 });
    }

    #[test]
    fn shared_types_are_send_and_sync() {
        fn check<T: Send + Sync>() {}
        check::<NodeSequence>();
        check::<WeightTable>();
        check::<Segment>();
        check::<TransformResult>();
        check::<TableSampled>();
    }

    #[test]
    fn weight_tables_stay_finite() {
        for k in [0.0, 1e-9, 0.5, std::f64::consts::PI] {
            let nodes = seq(&[1, 2, 3, 30, 1_000_000, 500_000_000, 1_272_553_509]);
            let table = assemble_weights(Wavenumber::new(k), &nodes);
            assert!(table
                .weights()
                .iter()
                .all(|w| w.re.is_finite() && w.im.is_finite()));
        }
    }

    #[test]
    fn weight_table_reuse_across_functions() {
        let nodes = seq(&[1, 3, 7, 12, 21]);
        let table = assemble_weights(Wavenumber::new(0.6), &nodes);
        let f1 = FnSampled::new(1, 21, |n| Complex64::new(n as f64, 0.0));
        let f2 = FnSampled::new(1, 21, |n| Complex64::new(0.0, (n * n) as f64));
        let a = table.apply(&nodes, &f1).unwrap();
        let b = table.apply(&nodes, &f2).unwrap();
        assert_eq!(
            a.value,
            dft(&f1, &nodes, Wavenumber::new(0.6)).unwrap().value
        );
        assert_eq!(
            b.value,
            dft(&f2, &nodes, Wavenumber::new(0.6)).unwrap().value
        );

        let other = seq(&[1, 3, 7]);
        assert!(table.apply(&other, &f1).is_err());
    }
}
