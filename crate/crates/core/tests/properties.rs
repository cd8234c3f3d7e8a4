//! Property-based invariants over randomly drawn sequences, panels and
//! wavenumbers.

use num_complex::Complex64;
use proptest::collection::btree_set;
use proptest::prelude::*;
use std::f64::consts::PI;

use qdft_core::nodes::{read_nodes, write_nodes};
use qdft_core::oracle::brute_force_dft;
use qdft_core::transform::{assemble_weights, dft, FnSampled, NodeSequence};
use qdft_core::{panel_weights, Panel, Wavenumber};

/// Strictly ascending odd-length node vectors inside a bounded range.
fn node_sequences() -> impl Strategy<Value = NodeSequence> {
    (btree_set(-2000i64..2000, 3..41), any::<bool>()).prop_map(|(set, drop_last)| {
        let mut nodes: Vec<i64> = set.into_iter().collect();
        if nodes.len().is_multiple_of(2) {
            if drop_last {
                nodes.pop();
            } else {
                nodes.remove(0);
            }
        }
        if nodes.len() < 3 {
            nodes = vec![0, 1, 2];
        }
        NodeSequence::new(nodes).unwrap()
    })
}

proptest! {
    /// Quadratics are summed exactly for any node layout and wavenumber.
    #[test]
    fn dft_matches_brute_force_for_quadratics(
        nodes in node_sequences(),
        alpha in -1.0f64..1.0,
        beta in -1.0f64..1.0,
        gamma in -1.0f64..1.0,
        k in -PI..PI,
    ) {
        let f = FnSampled::new(nodes.first(), nodes.last(), move |n| {
            let x = n as f64;
            Complex64::new(alpha + beta * x + gamma * x * x, 0.0)
        });
        let k = Wavenumber::new(k);
        let got = dft(&f, &nodes, k).unwrap().value;
        let want = brute_force_dft(&f, nodes.first(), nodes.last(), k, false).unwrap();
        let scale = want.norm().max(1.0);
        prop_assert!(
            (got - want).norm() <= 1e-9 * scale,
            "got {got}, want {want}"
        );
    }

    /// Σ W_j(0) counts the integers in the covered range.
    #[test]
    fn weight_sum_counts_range(nodes in node_sequences()) {
        let table = assemble_weights(Wavenumber::ZERO, &nodes);
        let want = (nodes.last() - nodes.first() + 1) as f64;
        let sum = table.weight_sum();
        prop_assert!((sum.re - want).abs() <= 1e-11 * want.abs());
        prop_assert_eq!(sum.im, 0.0);
    }

    /// Negating k conjugates every panel weight.
    #[test]
    fn panel_weights_conjugate_under_k_negation(
        n1 in -10_000i64..10_000,
        d21 in 1i64..5000,
        d32 in 1i64..5000,
        k in 1e-12f64..PI,
    ) {
        let panel = Panel::new(n1, n1 + d21, n1 + d21 + d32).unwrap();
        let plus = panel_weights(Wavenumber::new(k), &panel);
        let minus = panel_weights(Wavenumber::new(-k), &panel);
        for (m, p) in [(minus.w1, plus.w1), (minus.w2, plus.w2), (minus.w3, plus.w3)] {
            prop_assert!((m - p.conj()).norm() <= 1e-12 * p.norm().max(1.0));
        }
    }

    /// Node files survive a write/read cycle unchanged.
    #[test]
    fn node_file_round_trip(nodes in node_sequences()) {
        let mut buf = Vec::new();
        write_nodes(&nodes, &mut buf).unwrap();
        let back = read_nodes(buf.as_slice()).unwrap();
        prop_assert_eq!(back.nodes(), nodes.nodes());
    }
}
