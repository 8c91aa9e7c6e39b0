//! The longest Weyl element as a reduced word from the descent algorithm,
//! and the diagram automorphism -w0 it induces on the fundamental weights.
//!
//! Run with: cargo run -p minuscule-lab --example longest_element

use minuscule_lab::rootsys::{RootSystem, Weight};
use minuscule_lab::verify::sweep_simple_types;

fn main() {
    for t in sweep_simple_types(6) {
        let rs = RootSystem::simple(t);
        let word = rs.w0_word();
        assert_eq!(word.len(), rs.num_positive_roots());

        let delta = rs.minus_w0_automorphism();
        let delta_str = if delta.is_identity() {
            "identity (w0 = -1)".to_string()
        } else {
            (0..rs.rank())
                .filter(|&i| delta.image(i) != i)
                .map(|i| format!("{}->{}", i + 1, delta.image(i) + 1))
                .collect::<Vec<_>>()
                .join(" ")
        };

        // w0 is an involution on weights.
        let rho = Weight::rho(rs.stype().clone());
        let twice = rs.w0_apply(&rs.w0_apply(&rho).unwrap()).unwrap();
        assert_eq!(twice, rho);

        println!(
            "{:<4} |w0| = {:<3}  -w0 automorphism: {}",
            t.to_string(),
            word.len(),
            delta_str
        );
    }
}
