//! The Dynkin polynomial through reflection-group degrees: the ratio of
//! Π(1 - q^d) over D(W) and D(W_lambda) reproduces the orbit polynomial,
//! and its even filtering reproduces the even Dynkin polynomial.
//!
//! Run with: cargo run -p minuscule-lab --example degree_multisets

use minuscule_lab::rootsys::{RootSystem, Weight};
use minuscule_lab::verify::minuscule_cases;

fn main() {
    for (t, node) in minuscule_cases(6) {
        let rs = RootSystem::simple(t);
        let lambda = Weight::fundamental(rs.stype().clone(), node).unwrap();

        let stab = rs.stabilizer_subtype(&lambda).unwrap();
        let dp = rs.degrees_poincare(&lambda).unwrap();
        let poly = dp.full.to_polynomial().unwrap();
        assert_eq!(poly, rs.dynkin_sum(&lambda).unwrap());

        println!("{} node {}:", t, node + 1);
        println!(
            "  D(W) = {:?}  W_lambda of type {} with D = {:?}",
            rs.weyl_degrees().degrees(),
            stab,
            RootSystem::new(stab.clone()).weyl_degrees().degrees()
        );
        println!("  ratio {} = {}", dp.full, poly);
        println!("  even  {}", dp.even);
    }
}
