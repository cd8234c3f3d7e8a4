//! Node-selection strategies.
//!
//! Three plans cover the common shapes of decaying or locally singular
//! summands:
//!
//! - [`q_sequence`]: geometrically sparse nodes `n_j = ⌊q^{j-1}⌋` with a
//!   fallback to `j` while the power is still small. Good for smooth decaying
//!   tails; node counts stay at ~150 while cutoffs exceed 1e9.
//! - [`hybrid_nodes`]: a block of equally spaced nodes across a flat region
//!   `[1, N0]`, unit steps, then a geometric tail calibrated to land on the
//!   cutoff `N`.
//! - [`split_nodes`]: two regions around an interior point `N0` where the
//!   summand blows up or changes character; nodes densify toward `N0` from
//!   both sides (a reversed dense geometric sequence below, a fresh geometric
//!   sequence above). Small first regions are summed term by term.

use std::io::{self, BufRead, Write};

use crate::error::{Error, Result};
use crate::transform::{NodeSequence, Segment};

/// Growth ratio and count for the geometric node rule.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QSequenceSpec {
    ratio: f64,
    count: usize,
}

impl QSequenceSpec {
    pub fn new(ratio: f64, count: usize) -> Result<Self> {
        if !ratio.is_finite() || ratio <= 1.0 {
            return Err(Error::InvalidRatio { q: ratio });
        }
        check_odd_count(count)?;
        Ok(QSequenceSpec { ratio, count })
    }

    pub fn ratio(&self) -> f64 {
        self.ratio
    }

    pub fn count(&self) -> usize {
        self.count
    }
}

/// Flat-plus-geometric plan: `count` nodes covering `[1, cutoff]` with
/// `flat_count` of them equally spaced over `[1, flat_end]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HybridSpec {
    flat_end: i64,
    cutoff: i64,
    count: usize,
    flat_count: usize,
}

impl HybridSpec {
    pub fn new(flat_end: i64, cutoff: i64, count: usize) -> Result<Self> {
        check_odd_count(count)?;
        if flat_end < 1 {
            return Err(Error::InvalidSequence {
                reason: format!("flat-region boundary must be >= 1, got {flat_end}"),
            });
        }
        if cutoff <= flat_end {
            return Err(Error::InvalidCutoff {
                boundary: flat_end,
                cutoff,
            });
        }
        let flat_count = (flat_end as usize).min(4 * count / 5);
        // The tail places count - flat_count distinct integers in (flat_end, cutoff].
        if cutoff - flat_end < (count - flat_count) as i64 {
            return Err(Error::BudgetExhausted {
                count,
                cutoff,
                reached: flat_end,
            });
        }
        Ok(HybridSpec {
            flat_end,
            cutoff,
            count,
            flat_count,
        })
    }

    /// Plan for a summand that is flat below `n ≈ a/π` and decays like
    /// `(a/nπ)²` beyond: boundary `⌊4a/π⌋ + 1`, cutoff `max(300, ⌊300a/π⌋)`.
    pub fn from_scale(a: f64, count: usize) -> Result<Self> {
        if !a.is_finite() || a <= 0.0 {
            return Err(Error::SingularParameter { a });
        }
        let pi = std::f64::consts::PI;
        let flat_end = (4.0 * a / pi).floor() as i64 + 1;
        let cutoff = ((300.0 * a / pi).floor() as i64).max(300);
        HybridSpec::new(flat_end, cutoff, count)
    }

    pub fn flat_end(&self) -> i64 {
        self.flat_end
    }

    pub fn cutoff(&self) -> i64 {
        self.cutoff
    }

    pub fn count(&self) -> usize {
        self.count
    }

    pub fn flat_count(&self) -> usize {
        self.flat_count
    }
}

/// Two-region plan around an interior boundary index `N0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SplitSpec {
    boundary: i64,
    cutoff: i64,
    dense_ratio: f64,
    count: usize,
}

/// First regions no wider than this are summed term by term; beyond it the
/// reversed dense sequence takes over.
pub const DIRECT_REGION_LIMIT: i64 = 301;

impl SplitSpec {
    pub fn new(boundary: i64, cutoff: i64, dense_ratio: f64, count: usize) -> Result<Self> {
        check_odd_count(count)?;
        if boundary < 0 {
            return Err(Error::InvalidSequence {
                reason: format!("region boundary must be >= 0, got {boundary}"),
            });
        }
        if !dense_ratio.is_finite() || dense_ratio <= 1.0 {
            return Err(Error::InvalidRatio { q: dense_ratio });
        }
        if cutoff - boundary < count as i64 {
            return Err(Error::InvalidCutoff { boundary, cutoff });
        }
        Ok(SplitSpec {
            boundary,
            cutoff,
            dense_ratio,
            count,
        })
    }

    /// Plan for a summand with a pole at the continuum point `a/π`: boundary
    /// `⌊a/π⌋`, cutoff `max(1, N0)·10⁴`, dense ratio 1.1.
    pub fn from_scale(a: f64, count: usize) -> Result<Self> {
        if !a.is_finite() || a <= 0.0 {
            return Err(Error::SingularParameter { a });
        }
        let boundary = (a / std::f64::consts::PI).floor() as i64;
        let cutoff = boundary.max(1).saturating_mul(10_000);
        SplitSpec::new(boundary, cutoff, 1.1, count)
    }

    pub fn boundary(&self) -> i64 {
        self.boundary
    }

    pub fn cutoff(&self) -> i64 {
        self.cutoff
    }

    pub fn dense_ratio(&self) -> f64 {
        self.dense_ratio
    }

    pub fn count(&self) -> usize {
        self.count
    }
}

fn check_odd_count(count: usize) -> Result<()> {
    if count < 3 || count.is_multiple_of(2) {
        Err(Error::InvalidCount { count })
    } else {
        Ok(())
    }
}

fn floor_power(base: f64, exponent: usize) -> Result<f64> {
    let v = base.powf(exponent as f64).floor();
    if !v.is_finite() || v >= i64::MAX as f64 {
        return Err(Error::Overflow { value: v });
    }
    Ok(v)
}

/// `n_j = ⌊q^{j-1}⌋` when that exceeds `j`, else `n_j = j`, for `j = 1..=M`.
///
/// The fallback keeps the sequence strictly ascending through the region
/// where the geometric rule would repeat small integers.
pub fn q_sequence(spec: &QSequenceSpec) -> Result<NodeSequence> {
    let mut nodes = Vec::with_capacity(spec.count);
    for j in 1..=spec.count {
        let v = floor_power(spec.ratio, j - 1)?;
        let j = j as i64;
        nodes.push(if v > j as f64 { v as i64 } else { j });
    }
    NodeSequence::new(nodes)
}

/// Equally spaced head, unit steps, then a geometric tail clamped to end
/// exactly at the cutoff.
pub fn hybrid_nodes(spec: &HybridSpec) -> Result<NodeSequence> {
    let m0 = spec.flat_count;
    let n0 = spec.flat_end;
    let mut nodes: Vec<i64> = Vec::with_capacity(spec.count);
    if m0 as i64 == n0 {
        nodes.extend(1..=n0);
    } else {
        // Rounded linear interpolation with first node 1 and last node n0.
        let step = (n0 - 1) as f64 / (m0 - 1) as f64;
        for i in 0..m0 {
            nodes.push(1 + (i as f64 * step).round() as i64);
        }
    }
    debug_assert_eq!(nodes.len(), m0);
    debug_assert_eq!(*nodes.last().unwrap(), n0);

    let q = (spec.cutoff as f64 / n0 as f64).powf(1.0 / (spec.count - m0) as f64);
    let mut geometric = false;
    let mut prev = n0;
    for _ in m0..spec.count {
        let cand = q * prev as f64;
        if !cand.is_finite() || cand >= i64::MAX as f64 {
            return Err(Error::Overflow { value: cand });
        }
        let cand = cand.floor() as i64;
        if cand > prev {
            geometric = true;
            prev = cand;
        } else {
            prev += 1;
        }
        nodes.push(prev);
    }
    if !geometric && prev != spec.cutoff {
        return Err(Error::BudgetExhausted {
            count: spec.count,
            cutoff: spec.cutoff,
            reached: prev,
        });
    }
    clamp_tail(&mut nodes, m0, spec.cutoff);
    NodeSequence::new(nodes)
}

/// Pin the final node to `cutoff` and restore strict ascent backwards, never
/// touching indices below `floor_idx`.
fn clamp_tail(nodes: &mut [i64], floor_idx: usize, cutoff: i64) {
    let last = nodes.len() - 1;
    nodes[last] = cutoff;
    for i in (floor_idx..last).rev() {
        if nodes[i] >= nodes[i + 1] {
            nodes[i] = nodes[i + 1] - 1;
        } else {
            break;
        }
    }
}

/// One or two segments around the boundary: a first region `[1, N0]` (term by
/// term when small, reversed dense nodes when large) and a geometric second
/// region `[N0 + 1, N]`.
pub fn split_nodes(spec: &SplitSpec) -> Result<Vec<Segment>> {
    let mut segments = Vec::with_capacity(2);
    if spec.boundary >= 1 {
        if spec.boundary <= DIRECT_REGION_LIMIT {
            segments.push(Segment::direct(1, spec.boundary)?);
        } else {
            segments.push(Segment::weighted(dense_region(
                spec.boundary,
                spec.dense_ratio,
            )?));
        }
    }
    segments.push(Segment::weighted(offset_geometric(
        spec.boundary,
        spec.cutoff,
        spec.count,
    )?));
    Ok(segments)
}

/// Nodes for `[1, n0]`, densest next to `n0`: the dense-ratio sequence,
/// truncated to an odd count just below `n0`, mirrored so its unit-step head
/// hugs the boundary, with node 1 prepended.
fn dense_region(n0: i64, q: f64) -> Result<NodeSequence> {
    let mut tilde: Vec<i64> = Vec::new();
    let mut j = 1usize;
    loop {
        let v = floor_power(q, j - 1)?;
        let fallback = j as i64;
        let val = if v > fallback as f64 {
            v as i64
        } else {
            fallback
        };
        if val > n0 {
            break;
        }
        tilde.push(val);
        j += 1;
    }
    let j0 = j;
    let m1 = if j0 % 2 == 1 { j0 } else { j0 - 1 };
    if m1 < 3 {
        return Err(Error::InvalidRatio { q });
    }
    let mut nodes = vec![1_i64];
    for idx in (1..m1).rev() {
        nodes.push(n0 + 1 - tilde[idx - 1]);
    }
    // The innermost mirrored node can land on 1 when the dense sequence
    // reaches n0 itself; drop the repeat, then fix parity.
    nodes.dedup();
    repair_parity(&mut nodes);
    NodeSequence::new(nodes)
}

/// The second-region sequence: shifted `q`-sequence with the ratio chosen so
/// that node `count` lands on the cutoff, then clamped exactly there.
fn offset_geometric(n0: i64, cutoff: i64, count: usize) -> Result<NodeSequence> {
    let width = cutoff - n0;
    let ratio = (width as f64).powf(1.0 / (count - 1) as f64);
    let mut nodes = Vec::with_capacity(count);
    for j in 1..=count {
        let v = floor_power(ratio, j - 1)?;
        let j = j as i64;
        nodes.push(n0 + if v > j as f64 { v as i64 } else { j });
    }
    clamp_tail(&mut nodes, 0, cutoff);
    NodeSequence::new(nodes)
}

/// Make the count odd again after a dedup: insert the midpoint of the widest
/// gap, or drop a node next to the tail when every gap is already 1.
fn repair_parity(nodes: &mut Vec<i64>) {
    if nodes.len() % 2 == 1 {
        return;
    }
    let mut widest = 0usize;
    let mut gap = 0i64;
    for i in 0..nodes.len() - 1 {
        let g = nodes[i + 1] - nodes[i];
        if g > gap {
            gap = g;
            widest = i;
        }
    }
    if gap >= 2 {
        let mid = nodes[widest] + gap / 2;
        nodes.insert(widest + 1, mid);
    } else {
        nodes.remove(nodes.len() - 2);
    }
}

/// Write one decimal integer per line (the `--nodes-file` format).
pub fn write_nodes<W: Write>(nodes: &NodeSequence, out: &mut W) -> io::Result<()> {
    for n in nodes.nodes() {
        writeln!(out, "{n}")?;
    }
    Ok(())
}

/// Parse the one-integer-per-line format back into a validated sequence.
pub fn read_nodes<R: BufRead>(input: R) -> Result<NodeSequence> {
    let mut nodes = Vec::new();
    for (idx, line) in input.lines().enumerate() {
        let line = line.map_err(|e| Error::InvalidSequence {
            reason: format!("line {}: {e}", idx + 1),
        })?;
        let text = line.trim();
        if text.is_empty() {
            continue;
        }
        let n: i64 = text.parse().map_err(|e| Error::InvalidSequence {
            reason: format!("line {}: {e}", idx + 1),
        })?;
        nodes.push(n);
    }
    NodeSequence::new(nodes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn q_sequence_crossover_and_tail() {
        let seq = q_sequence(&QSequenceSpec::new(1.15, 151).unwrap()).unwrap();
        let n = seq.nodes();
        assert_eq!(n[0], 1);
        assert_eq!(n[23], 24, "n_24 falls back to its index");
        assert_eq!(n[24], 28, "n_25 = ⌊1.15^24⌋");
        let last = *n.last().unwrap();
        assert_eq!(last, (1.15_f64).powf(150.0).floor() as i64);
        assert!((1.26e9..1.28e9).contains(&(last as f64)));
    }

    #[test]
    fn q_sequence_doubling() {
        let seq = q_sequence(&QSequenceSpec::new(2.0, 5).unwrap()).unwrap();
        assert_eq!(seq.nodes(), &[1, 2, 4, 8, 16]);
    }

    #[test]
    fn q_sequence_validation() {
        assert!(matches!(
            QSequenceSpec::new(1.15, 150),
            Err(Error::InvalidCount { count: 150 })
        ));
        assert!(matches!(
            QSequenceSpec::new(0.9, 151),
            Err(Error::InvalidRatio { .. })
        ));
        assert!(matches!(
            QSequenceSpec::new(1.0, 151),
            Err(Error::InvalidRatio { .. })
        ));
    }

    #[test]
    fn hybrid_small_scale() {
        // a = 1: boundary ⌊4/π⌋+1 = 2, cutoff max(300, ⌊300/π⌋) = 300.
        let spec = HybridSpec::from_scale(1.0, 151).unwrap();
        assert_eq!(spec.flat_end(), 2);
        assert_eq!(spec.cutoff(), 300);
        assert_eq!(spec.flat_count(), 2);
        let seq = hybrid_nodes(&spec).unwrap();
        assert_eq!(seq.len(), 151);
        assert_eq!(&seq.nodes()[..3], &[1, 2, 3]);
        assert_eq!(seq.last(), 300);
    }

    #[test]
    fn hybrid_cutoff_rule() {
        let spec = HybridSpec::from_scale(5.0, 151).unwrap();
        assert_eq!(spec.cutoff(), 477); // ⌊300·5/π⌋
        let seq = hybrid_nodes(&spec).unwrap();
        assert_eq!(seq.first(), 1);
        assert_eq!(seq.last(), 477);
        assert_eq!(seq.len(), 151);
    }

    #[test]
    fn hybrid_flat_block_saturates_at_four_fifths() {
        let spec = HybridSpec::new(120, 1000, 151).unwrap();
        assert_eq!(spec.flat_count(), 120);
        let seq = hybrid_nodes(&spec).unwrap();
        let expect: Vec<i64> = (1..=120).collect();
        assert_eq!(&seq.nodes()[..120], &expect[..]);
    }

    #[test]
    fn hybrid_large_scale() {
        let spec = HybridSpec::from_scale(1.0e5, 151).unwrap();
        assert_eq!(spec.flat_end(), 127_324);
        assert_eq!(spec.cutoff(), 9_549_296);
        assert_eq!(spec.flat_count(), 120);
        let seq = hybrid_nodes(&spec).unwrap();
        assert_eq!(seq.len(), 151);
        assert_eq!(seq.first(), 1);
        assert_eq!(seq.nodes()[119], 127_324);
        assert_eq!(seq.last(), 9_549_296);
    }

    #[test]
    fn hybrid_rejects_impossible_budgets() {
        assert!(matches!(
            HybridSpec::new(3, 6, 9),
            Err(Error::BudgetExhausted { .. })
        ));
        assert!(matches!(
            HybridSpec::new(10, 10, 5),
            Err(Error::InvalidCutoff { .. })
        ));
    }

    #[test]
    fn split_without_first_region() {
        // a = π/2: boundary 0, single region [1, 1e4].
        let spec = SplitSpec::from_scale(std::f64::consts::FRAC_PI_2, 151).unwrap();
        assert_eq!(spec.boundary(), 0);
        assert_eq!(spec.cutoff(), 10_000);
        let segments = split_nodes(&spec).unwrap();
        assert_eq!(segments.len(), 1);
        let nodes = segments[0].node_sequence().unwrap();
        assert_eq!(nodes.first(), 1);
        assert_eq!(nodes.last(), 10_000);
        assert_eq!(nodes.len(), 151);
    }

    #[test]
    fn split_with_single_term_first_region() {
        // a = 3π/2: boundary 1, term-by-term first region.
        let spec = SplitSpec::from_scale(1.5 * std::f64::consts::PI, 151).unwrap();
        assert_eq!(spec.boundary(), 1);
        let segments = split_nodes(&spec).unwrap();
        assert_eq!(segments.len(), 2);
        assert!(segments[0].is_direct());
        assert_eq!(segments[0].range(), (1, 1));
        let nodes = segments[1].node_sequence().unwrap();
        assert_eq!(nodes.first(), 2);
        assert_eq!(nodes.last(), 10_000);
    }

    #[test]
    fn split_with_dense_first_region() {
        // a = 1e5 π + π/2: boundary 1e5, cutoff 1e9.
        let a = 1.0e5 * std::f64::consts::PI + std::f64::consts::FRAC_PI_2;
        let spec = SplitSpec::from_scale(a, 151).unwrap();
        assert_eq!(spec.boundary(), 100_000);
        assert_eq!(spec.cutoff(), 1_000_000_000);
        let segments = split_nodes(&spec).unwrap();
        assert_eq!(segments.len(), 2);

        let first = segments[0].node_sequence().expect("weighted first region");
        assert_eq!(first.first(), 1);
        assert_eq!(first.last(), 100_000);
        assert_eq!(first.len() % 2, 1);
        // Gaps shrink toward the boundary over the mirrored portion.
        let n = first.nodes();
        for i in 1..n.len() - 1 {
            assert!(
                n[i + 1] - n[i] <= n[i] - n[i - 1] || i == 1,
                "gap grew toward boundary at {i}"
            );
        }
        // Unit steps right at the boundary, where the summand varies fastest.
        assert_eq!(n[n.len() - 2], 99_999);

        let second = segments[1].node_sequence().unwrap();
        assert_eq!(second.first(), 100_001);
        assert_eq!(second.last(), 1_000_000_000);
        assert_eq!(second.len(), 151);
        // Disjoint and ordered.
        assert!(first.last() < second.first());
    }

    #[test]
    fn random_specs_yield_valid_sequences() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x9e3779b97f4a7c15);
        let mut produced = 0usize;
        for _ in 0..1000 {
            match rng.gen_range(0..3) {
                0 => {
                    let m = 2 * rng.gen_range(1..150) + 1;
                    // Cap the ratio so q^(m-1) stays inside i64.
                    let q_max = (40.0 / (m - 1) as f64).exp().min(3.0);
                    let q = rng.gen_range(1.01..q_max.max(1.011));
                    let seq = q_sequence(&QSequenceSpec::new(q, m).unwrap()).unwrap();
                    assert_eq!(seq.len(), m);
                    assert_eq!(seq.first(), 1);
                    produced += 1;
                }
                1 => {
                    let n0 = rng.gen_range(1..500);
                    let m = 2 * rng.gen_range(1..120) + 1;
                    let n = n0 + rng.gen_range(1..100_000);
                    if let Ok(spec) = HybridSpec::new(n0, n, m) {
                        let seq = hybrid_nodes(&spec).unwrap();
                        assert_eq!(seq.len(), m);
                        assert_eq!(seq.first(), 1);
                        assert_eq!(seq.last(), n);
                        produced += 1;
                    }
                }
                _ => {
                    let n0 = rng.gen_range(0..5000);
                    let m = 2 * rng.gen_range(1..100) + 1;
                    let n = (n0 + m as i64) + rng.gen_range(0..1_000_000);
                    if let Ok(spec) = SplitSpec::new(n0, n, rng.gen_range(1.02..1.5), m) {
                        let segments = split_nodes(&spec).unwrap();
                        let mut prev_hi = 0i64;
                        for (i, seg) in segments.iter().enumerate() {
                            let (lo, hi) = seg.range();
                            assert!(lo <= hi);
                            if i > 0 {
                                assert!(lo > prev_hi, "segments must be disjoint and ordered");
                            }
                            prev_hi = hi;
                        }
                        let (_, hi) = segments.last().unwrap().range();
                        assert_eq!(hi, n);
                        produced += 1;
                    }
                }
            }
        }
        // The draw ranges are chosen so most specs are feasible.
        assert!(produced > 800, "only {produced} specs were feasible");
    }

    #[test]
    fn node_file_round_trip() {
        let seq = q_sequence(&QSequenceSpec::new(1.3, 21).unwrap()).unwrap();
        let mut buf = Vec::new();
        write_nodes(&seq, &mut buf).unwrap();
        let back = read_nodes(buf.as_slice()).unwrap();
        assert_eq!(back.nodes(), seq.nodes());

        assert!(read_nodes("1\n2\nx\n".as_bytes()).is_err());
        assert!(read_nodes("5\n4\n6\n".as_bytes()).is_err());
    }
}
