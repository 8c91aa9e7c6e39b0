//! Even Dynkin polynomials and the freeness criterion D_ev(1) != 0, with
//! the bridging identity D_ev(1) = D(-1).
//!
//! Run with: cargo run -p minuscule-lab --example even_dynkin_freeness

use minuscule_lab::rootsys::{RootSystem, Weight};
use minuscule_lab::verify::minuscule_cases;

fn main() {
    for (t, node) in minuscule_cases(6) {
        let rs = RootSystem::simple(t);
        let lambda = Weight::fundamental(rs.stype().clone(), node).unwrap();
        let even = rs.dynkin_even(&lambda).unwrap();
        let free = rs.freeness_split(&lambda).unwrap();
        println!(
            "{} node {}: D_ev = {}  D_ev(1) = {}  free: {}",
            t,
            node + 1,
            even,
            even.eval_i64(1),
            free
        );
    }
}
