//! The q = -1 phenomenon: the number of weights fixed by the longest Weyl
//! element equals the Dynkin polynomial evaluated at -1, on every minuscule
//! orbit in the sweep.
//!
//! Run with: cargo run -p minuscule-lab --example fixed_points_at_minus_one

use minuscule_lab::rootsys::{RootSystem, Weight};
use minuscule_lab::verify::minuscule_cases;
use minuscule_lab::weyl::NodePermutation;

fn main() {
    println!(
        "{:<10} {:>6} {:>8} {:>8}",
        "case", "orbit", "D(-1)", "fixed"
    );
    for (t, node) in minuscule_cases(8) {
        let rs = RootSystem::simple(t);
        let lambda = Weight::fundamental(rs.stype().clone(), node).unwrap();
        let d = rs.dynkin_sum(&lambda).unwrap();
        let fixed = rs
            .fixed_weight_count(&lambda, &NodePermutation::identity(rs.rank()))
            .unwrap();
        let value = d.eval_i64(-1);
        assert_eq!(value.to_string(), fixed.to_string());
        println!(
            "{:<10} {:>6} {:>8} {:>8}",
            format!("{} w{}", t, node + 1),
            rs.orbit(&lambda).unwrap().len(),
            value.to_string(),
            fixed
        );
    }
}
