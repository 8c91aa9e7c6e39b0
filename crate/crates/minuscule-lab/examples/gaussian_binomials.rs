//! Gaussian binomial coefficients as Dynkin polynomials of type A: the
//! fundamental weight omega_k of A_{n-1} has D(q) = [n choose k]_q, and at
//! q = -1 the value counts the k-subsets fixed by the mirror involution.
//!
//! Run with: cargo run -p minuscule-lab --example gaussian_binomials

use minuscule_lab::polyarith::gaussian_binomial;
use minuscule_lab::rootsys::{Family, RootSystem, SimpleType, Weight};
use minuscule_lab::weyl::NodePermutation;

fn main() {
    for n in 2..=8u64 {
        for k in 1..n {
            let gauss = gaussian_binomial(n, k).to_polynomial().unwrap();
            let rs =
                RootSystem::simple(SimpleType::new(Family::A, (n - 1) as usize).unwrap());
            let lambda =
                Weight::fundamental(rs.stype().clone(), (k - 1) as usize).unwrap();
            assert_eq!(rs.dynkin_sum(&lambda).unwrap(), gauss);
            let fixed = rs
                .fixed_weight_count(&lambda, &NodePermutation::identity(rs.rank()))
                .unwrap();
            println!(
                "[{n} choose {k}]_q = {gauss}   at -1: {} (= {} fixed subsets)",
                gauss.eval_i64(-1),
                fixed
            );
        }
    }
}
