//! Slopes against brute force on the three-unknown equation.

use lde_core::slopes::{slopes3, slopes3_trace, solve3_general};
use lde_core::{Basis, Solution};
use proptest::prelude::*;

/// Minimal solutions of `a·x = b·y + c·z + v` by scanning `y, z ≤ span` and
/// solving for `x`.
fn brute(a: u64, b: u64, c: u64, v: i64, span: u64) -> Vec<[u64; 3]> {
    let mut basis = Basis::new();
    for y in 0..=span {
        for z in 0..=span {
            let num = (b * y + c * z) as i64 + v;
            if num < 0 || num % a as i64 != 0 || (num == 0 && y == 0 && z == 0) {
                continue;
            }
            basis.insert_minimal(Solution::new(vec![num as u64 / a, y, z]));
        }
    }
    basis.iter().map(|s| [s[0], s[1], s[2]]).collect()
}

#[test]
fn slopes3_small_grid() {
    for a in 1..=12 {
        for b in 1..=12 {
            for c in 1..=12 {
                assert_eq!(slopes3(a, b, c), brute(a, b, c, 0, a), "{a}x = {b}y + {c}z");
            }
        }
    }
}

#[test]
fn inhomogeneous_example_frozen() {
    // brute force over y, z ≤ 10
    assert_eq!(solve3_general(2, 3, 5, 1), vec![[2, 1, 0], [3, 0, 1]]);
    assert_eq!(brute(2, 3, 5, 1, 10), vec![[2, 1, 0], [3, 0, 1]]);
}

proptest! {
    #[test]
    fn general_matches_brute_force(a in 1u64..=9, b in 1u64..=9, c in 1u64..=9, v in -30i64..=30) {
        let span = 30 + 2 * a;
        let got = solve3_general(a, b, c, v);
        prop_assert_eq!(&got, &brute(a, b, c, v, span));
        for [x, y, z] in got {
            prop_assert_eq!((a * x) as i64, (b * y + c * z) as i64 + v);
            prop_assert_eq!(((b * y + c * z) as i64 + v).rem_euclid(a as i64), 0);
        }
    }

    #[test]
    fn staircase_is_strict(a in 1u64..=60, b in 1u64..=60, c in 1u64..=60) {
        let trace = slopes3_trace(a, b, c);
        for t in trace.seeds.iter().chain(&trace.descent) {
            prop_assert_eq!(a * t[0], b * t[1] + c * t[2]);
        }
        for pair in trace.descent.windows(2) {
            prop_assert!(pair[1][2] > pair[0][2] && pair[1][1] < pair[0][1]);
        }
        let out = slopes3(a, b, c);
        for (i, s) in out.iter().enumerate() {
            for t in &out[i + 1..] {
                prop_assert!(!lde_core::dominates(s, t) && !lde_core::dominates(t, s));
            }
        }
    }
}
