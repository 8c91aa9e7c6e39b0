//! Compute the Dynkin polynomial of each minuscule weight by both routes:
//! the graded weight-orbit sum and the product over positive roots, and
//! check they agree coefficientwise.
//!
//! Run with: cargo run -p minuscule-lab --example dynkin_two_routes

use minuscule_lab::rootsys::{RootSystem, Weight};
use minuscule_lab::verify::minuscule_cases;

fn main() {
    for (t, node) in minuscule_cases(5) {
        let rs = RootSystem::simple(t);
        let lambda = Weight::fundamental(rs.stype().clone(), node).unwrap();

        let graded = rs.graded_orbit(&lambda).unwrap();
        let sum_route = graded.rank_generating_function();

        let ratio = rs.dynkin_product(&lambda).unwrap();
        let product_route = ratio.to_polynomial().unwrap();

        assert_eq!(sum_route, product_route);
        println!("{} node {}:", t, node + 1);
        println!("  orbit ranks {:?}", graded.rank_sizes());
        println!("  D(q) = {sum_route}");
        println!("       = {ratio}");
    }
}
