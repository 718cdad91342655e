//! Brute-force maximization of `sum N_l^2` over constrained partitions.
//!
//! This is the ground truth the closed forms in [`crate::bounds`] are checked
//! against. It shares nothing with them beyond the partition enumerator.

use serde::{Deserialize, Serialize};

use crate::bounds::{self, valid_ranks};
use crate::error::{Error, Result};
use crate::partitions::{enumerate, Constraint, YoungDiagram};
use crate::tuples::all_tuples;

/// Class membership test on partitions; an empty predicate admits everything.
pub type ClassPredicate = Constraint;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BruteForceMax {
    pub value: u64,
    /// First maximizer in reverse-lexicographic order.
    pub argmax: YoungDiagram,
}

pub fn brute_force_max(n: u32, pred: ClassPredicate) -> Result<BruteForceMax> {
    let mut best: Option<BruteForceMax> = None;
    for d in enumerate(n, pred) {
        debug_assert!(pred.matches(&d));
        let value = d.sum_of_squares();
        if best.as_ref().is_none_or(|b| value > b.value) {
            best = Some(BruteForceMax { value, argmax: d });
        }
    }
    best.ok_or(Error::EmptyClass { n })
}

/// The closed forms under test. Swapping a field lets tests confirm that the
/// sweep actually catches a wrong formula.
#[derive(Clone, Copy)]
pub struct ClosedForms {
    pub f_wh: fn(u32, u32, u32) -> Result<u64>,
    pub f_width: fn(u32, u32) -> Result<u64>,
    pub f_height: fn(u32, u32) -> Result<u64>,
    pub f_rank: fn(u32, i32) -> Result<u64>,
}

impl Default for ClosedForms {
    fn default() -> Self {
        Self {
            f_wh: bounds::f_wh,
            f_width: bounds::f_width,
            f_height: bounds::f_height,
            f_rank: bounds::f_rank,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub n: u32,
    /// `wh:w,h`, `w:w`, `h:h` or `r:r`.
    pub class: String,
    /// `None` when the closed form returned an error.
    pub closed: Option<u64>,
    pub brute: u64,
}

/// Compares every closed form against brute force for `2 <= n <= n_max`.
pub fn verify_closed_forms(n_max: u32) -> Vec<Mismatch> {
    verify_with(n_max, ClosedForms::default())
}

pub fn verify_with(n_max: u32, forms: ClosedForms) -> Vec<Mismatch> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        verify_n(n, &forms, &mut out);
    }
    out
}

fn check(
    out: &mut Vec<Mismatch>,
    n: u32,
    class: String,
    closed: Result<u64>,
    pred: ClassPredicate,
) {
    // every class checked here is non-empty, so brute force cannot fail
    let brute = brute_force_max(n, pred).expect("non-empty class").value;
    let closed = closed.ok();
    if closed != Some(brute) {
        out.push(Mismatch {
            n,
            class,
            closed,
            brute,
        });
    }
}

fn verify_n(n: u32, forms: &ClosedForms, out: &mut Vec<Mismatch>) {
    for t in all_tuples(n) {
        check(
            out,
            n,
            format!("wh:{},{}", t.w, t.h),
            (forms.f_wh)(n, t.w, t.h),
            Constraint::width_height(t.w, t.h),
        );
    }
    for w in 1..=n {
        check(out, n, format!("w:{w}"), (forms.f_width)(n, w), Constraint::max_width(w));
    }
    for h in 1..=n {
        check(out, n, format!("h:{h}"), (forms.f_height)(n, h), Constraint::min_height(h));
    }
    for r in valid_ranks(n) {
        check(out, n, format!("r:{r}"), (forms.f_rank)(n, r), Constraint::max_rank(r));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(rows: &[u32]) -> YoungDiagram {
        YoungDiagram::new(rows.to_vec()).unwrap()
    }

    #[test]
    fn brute_force_examples() {
        let m = brute_force_max(7, Constraint::width_height(4, 3)).unwrap();
        assert_eq!((m.value, m.argmax), (21, d(&[4, 2, 1])));
        let m = brute_force_max(5, Constraint::none()).unwrap();
        assert_eq!((m.value, m.argmax), (25, d(&[5])));
        // N+r = 10 special case: two rows of 4 beat the single wide row
        let m = brute_force_max(10, Constraint::max_rank(0)).unwrap();
        assert_eq!((m.value, m.argmax), (34, d(&[4, 4, 1, 1])));
    }

    #[test]
    fn empty_class_is_an_error() {
        assert_eq!(
            brute_force_max(4, Constraint::min_height(5)),
            Err(Error::EmptyClass { n: 4 })
        );
    }

    #[test]
    fn unconstrained_max_is_heisenberg() {
        for n in 1..=25u32 {
            let m = brute_force_max(n, Constraint::none()).unwrap();
            assert_eq!(m.value, u64::from(n) * u64::from(n));
        }
    }

    #[test]
    fn small_sweeps_are_clean() {
        assert!(verify_closed_forms(2).is_empty());
        assert!(verify_closed_forms(14).is_empty());
    }

    fn bad_rank(n: u32, r: i32) -> Result<u64> {
        let v = bounds::f_rank(n, r)?;
        Ok(if i64::from(n) + i64::from(r) == 10 && n >= 8 {
            v - 1
        } else {
            v
        })
    }

    #[test]
    fn corrupted_form_is_caught() {
        let forms = ClosedForms {
            f_rank: bad_rank,
            ..ClosedForms::default()
        };
        let bad = verify_with(10, forms);
        assert_eq!(bad.len(), 3); // n = 8, 9, 10
        assert!(bad.iter().all(|m| m.class == format!("r:{}", 10 - m.n as i32)));
        assert_eq!((bad[0].closed, bad[0].brute), (Some(31), 32));
    }
}
