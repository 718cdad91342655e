use std::collections::HashSet;

use proptest::prelude::*;

use youngwit::bounds::valid_ranks;
use youngwit::dataset::{read_dataset, write_dataset};
use youngwit::oracle::brute_force_max;
use youngwit::partitions::{enumerate, Constraint};
use youngwit::states::{optimal_diagram, qfi_analytic, qfi_statevector, GhzProduct, SpinAxis};
use youngwit::tuples::{all_tuples, is_valid};
use youngwit::witness::{Kind, Measurement, Unit};
use youngwit::YoungDiagram;

#[test]
fn constrained_enumeration_equals_filtered() {
    for n in 1..=20u32 {
        let all: Vec<_> = enumerate(n, Constraint::none()).collect();
        let unique: HashSet<_> = all.iter().cloned().collect();
        assert_eq!(unique.len(), all.len(), "duplicates for n={n}");
        for d in &all {
            assert_eq!(d.n(), n);
            assert_eq!(d.rank(), d.width() as i32 - d.height() as i32);
            assert!(d.rows().windows(2).all(|p| p[0] >= p[1]));
        }
        let widths = [None, Some(1), Some(2), Some(n / 2 + 1), Some(n)];
        let heights = [None, Some(1), Some(2), Some(n / 2 + 1), Some(n)];
        let ranks = [None, Some(1 - n as i32), Some(-2), Some(0), Some(3), Some(n as i32)];
        for max_width in widths {
            for min_height in heights {
                for max_rank in ranks {
                    let c = Constraint {
                        max_width,
                        min_height,
                        max_rank,
                    };
                    let pruned: Vec<_> = enumerate(n, c).collect();
                    let filtered: Vec<_> = all.iter().filter(|d| c.matches(d)).cloned().collect();
                    assert_eq!(pruned, filtered, "n={n} {c:?}");
                }
            }
        }
    }
}

#[test]
fn tuple_validity_matches_enumeration() {
    for n in 1..=20u32 {
        let realized: HashSet<(u32, u32)> = enumerate(n, Constraint::none())
            .map(|d| (d.width(), d.height()))
            .collect();
        for w in 0..=n + 1 {
            for h in 0..=n + 1 {
                assert_eq!(is_valid(n, w, h), realized.contains(&(w, h)), "n={n} ({w},{h})");
            }
        }
        let ranks: HashSet<i32> = enumerate(n, Constraint::none()).map(|d| d.rank()).collect();
        let mut ranks: Vec<_> = ranks.into_iter().collect();
        ranks.sort_unstable();
        assert_eq!(ranks, valid_ranks(n));
    }
}

#[test]
fn optimal_diagram_is_a_maximizer() {
    for n in 2..=24u32 {
        for t in all_tuples(n) {
            let d = optimal_diagram(n, t.w, t.h).unwrap();
            assert_eq!((d.width(), d.height()), (t.w, t.h));
            let best = brute_force_max(n, Constraint::width_height(t.w, t.h)).unwrap();
            assert_eq!(d.sum_of_squares(), best.value, "n={n} {t}");
        }
    }
}

fn partition_of(n: u32) -> impl Strategy<Value = YoungDiagram> {
    proptest::collection::vec(1u32..=n, 1..=n as usize).prop_map(move |parts| {
        let mut rows = Vec::new();
        let mut left = n;
        for p in parts {
            if left == 0 {
                break;
            }
            let p = p.min(left);
            rows.push(p);
            left -= p;
        }
        rows.extend(std::iter::repeat_n(1, left as usize));
        YoungDiagram::from_blocks(rows).unwrap()
    })
}

fn diagram() -> impl Strategy<Value = YoungDiagram> {
    (1u32..=30).prop_flat_map(partition_of)
}

proptest! {
    #[test]
    fn moving_a_box_up_never_lowers_the_sum(d in diagram(), i in 0usize..30, j in 0usize..30) {
        let rows = d.rows();
        prop_assume!(rows.len() >= 2);
        let (i, j) = (i % rows.len(), j % rows.len());
        prop_assume!(rows[i] >= rows[j] && i != j);
        let mut moved = rows.to_vec();
        moved[i] += 1;
        moved[j] -= 1;
        moved.retain(|&r| r > 0);
        let moved = YoungDiagram::from_blocks(moved).unwrap();
        prop_assert!(moved.sum_of_squares() > d.sum_of_squares());
    }

    #[test]
    fn text_form_round_trips(d in diagram()) {
        let text = d.to_string();
        prop_assert!(!text.contains(' '));
        prop_assert_eq!(text.parse::<YoungDiagram>().unwrap(), d);
    }

    #[test]
    fn phases_do_not_change_qfi(
        d in (1u32..=10).prop_flat_map(partition_of),
        seed in proptest::collection::vec(-10.0f64..10.0, 10),
    ) {
        let phases: Vec<f64> = seed.into_iter().take(d.height() as usize).collect();
        let plain = GhzProduct::real(d.clone());
        let phased = GhzProduct::new(d, phases).unwrap();
        prop_assert_eq!(qfi_analytic(&plain), qfi_analytic(&phased));
        let a = qfi_statevector(&plain, SpinAxis::Z).unwrap();
        let b = qfi_statevector(&phased, SpinAxis::Z).unwrap();
        prop_assert!((a - b).abs() <= 1e-9);
        prop_assert!((b - qfi_analytic(&phased) as f64).abs() <= 1e-9);
    }

    #[test]
    fn dense_qfi_is_bounded_by_heisenberg(
        d in (1u32..=8).prop_flat_map(partition_of),
        (x, y, z) in (-1.0f64..1.0, -1.0f64..1.0, -1.0f64..1.0),
    ) {
        prop_assume!(x * x + y * y + z * z > 1e-3);
        let axis = SpinAxis::normalized(x, y, z).unwrap();
        let n = f64::from(d.n());
        let f = qfi_statevector(&GhzProduct::real(d), axis).unwrap();
        prop_assert!(f >= -1e-9 && f <= n * n + 1e-9);
    }

    #[test]
    fn dataset_round_trip(
        rows in proptest::collection::vec(
            (1u32..1000, any::<bool>(), 1u32..100_000, "[a-zA-Z ,\"]{0,20}"),
            1..6,
        )
    ) {
        let records: Vec<Measurement> = rows
            .into_iter()
            .enumerate()
            .map(|(i, (n, qfi, v, reference))| {
                let value = format!("{}.{}", v / 100, v % 100);
                let m = if qfi {
                    Measurement::qfi(format!("rec-{i}"), n, &value).unwrap()
                } else {
                    Measurement::squeezing(format!("rec-{i}"), n, &format!("-{value}"), Unit::Db).unwrap()
                };
                m.with_reference(reference.trim().to_string())
            })
            .collect();
        let mut buf = Vec::new();
        write_dataset(&records, &mut buf).unwrap();
        let parsed = read_dataset(buf.as_slice()).unwrap();
        prop_assert_eq!(&parsed, &records);
        prop_assert!(parsed.iter().all(|m| m.kind == Kind::Fq || m.unit == Unit::Db));
    }
}
