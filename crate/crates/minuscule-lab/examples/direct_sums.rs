//! Dynkin polynomials and fixed-weight counts multiply over direct sums.
//!
//! Run with: cargo run -p minuscule-lab --example direct_sums

use minuscule_lab::minuscule::direct_sum;
use minuscule_lab::rootsys::{Family, SimpleType};
use minuscule_lab::weyl::NodePermutation;

fn main() {
    let a1 = SimpleType::new(Family::A, 1).unwrap();
    let a2 = SimpleType::new(Family::A, 2).unwrap();
    let b2 = SimpleType::new(Family::B, 2).unwrap();
    let d4 = SimpleType::new(Family::D, 4).unwrap();

    type Factor = (SimpleType, Vec<i64>);
    let pairs: Vec<(Factor, Factor)> = vec![
        ((a1, vec![1]), (a1, vec![1])),
        ((a2, vec![1, 0]), (b2, vec![0, 1])),
        ((d4, vec![0, 0, 0, 1]), (a2, vec![0, 1])),
        ((b2, vec![0, 1]), (b2, vec![0, 0])),
    ];

    for ((ta, ca), (tb, cb)) in pairs {
        let (rs_a, ga) = direct_sum(&[(ta, ca.clone())]).unwrap();
        let (rs_b, gb) = direct_sum(&[(tb, cb.clone())]).unwrap();
        let (rs_ab, gab) = direct_sum(&[(ta, ca.clone()), (tb, cb.clone())]).unwrap();

        let da = ga.rank_generating_function();
        let db = gb.rank_generating_function();
        let dab = gab.rank_generating_function();
        assert_eq!(dab, da.mul(&db));

        let fix = |rs: &minuscule_lab::RootSystem, g: &minuscule_lab::GradedOrbit| {
            rs.fixed_weight_count(g.lambda(), &NodePermutation::identity(rs.rank()))
                .unwrap()
        };
        let (fa, fb, fab) = (fix(&rs_a, &ga), fix(&rs_b, &gb), fix(&rs_ab, &gab));
        assert_eq!(fab, fa * fb);

        println!("{ta}{ca:?} (+) {tb}{cb:?}:");
        println!("  D = ({da}) * ({db}) = {dab}");
        println!("  fixed: {fa} * {fb} = {fab}");
    }
}
