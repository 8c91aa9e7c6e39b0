//! Verification suites: the Dynkin-polynomial identities over the full type
//! sweep, and the table checks for the adapted real forms. Each suite
//! produces a deterministic [`Report`].
//!
//! Checks can run concurrently; the records are assembled in case order
//! regardless of completion order, so output bytes do not depend on thread
//! scheduling. The MINUSCULE_LAB_THREADS environment variable caps the
//! worker count.

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;

use crate::minuscule::{direct_sum, minuscule_classification, FibrePermutation};
use crate::polyarith::IntPoly;
use crate::report::{CheckRecord, Report, Status};
use crate::rootsys::{Family, RootSystem, SimpleType, Weight};
use crate::weyl::NodePermutation;
use crate::{realforms, Error};

/// Deterministic sweep of simple types: every valid simple type of rank at
/// most `max_rank`, in family order.
pub fn sweep_simple_types(max_rank: usize) -> Vec<SimpleType> {
    let mut out = Vec::new();
    let mut push = |f: Family, r: usize| {
        if let Ok(t) = SimpleType::new(f, r) {
            out.push(t);
        }
    };
    for r in 1..=max_rank {
        push(Family::A, r);
    }
    for r in 2..=max_rank {
        push(Family::B, r);
    }
    for r in 2..=max_rank {
        push(Family::C, r);
    }
    for r in 3..=max_rank {
        push(Family::D, r);
    }
    for r in [6, 7, 8] {
        if r <= max_rank {
            push(Family::E, r);
        }
    }
    if max_rank >= 4 {
        push(Family::F, 4);
    }
    if max_rank >= 2 {
        push(Family::G, 2);
    }
    out
}

/// All (type, minuscule node) pairs in the sweep, 0-based nodes.
pub fn minuscule_cases(max_rank: usize) -> Vec<(SimpleType, usize)> {
    let mut cases = Vec::new();
    for t in sweep_simple_types(max_rank) {
        let rs = RootSystem::simple(t);
        for node in rs.list_minuscule() {
            cases.push((t, node));
        }
    }
    cases
}

fn thread_pool() -> rayon::ThreadPool {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Ok(v) = std::env::var("MINUSCULE_LAB_THREADS") {
        if let Ok(k) = v.trim().parse::<usize>() {
            builder = builder.num_threads(k.max(1));
        }
    }
    builder.build().expect("thread pool builds")
}

fn record(id: String, subject: String, ok: bool, expected: String, actual: String) -> CheckRecord {
    CheckRecord {
        id,
        subject,
        status: if ok { Status::Pass } else { Status::Fail },
        expected,
        actual,
    }
}

/// Identity checks for one minuscule case.
fn identity_records(t: SimpleType, node: usize) -> Vec<CheckRecord> {
    let subject = format!("{} node {}", t, node + 1);
    let rs = RootSystem::simple(t);
    let lambda = Weight::fundamental(rs.stype().clone(), node).expect("node in range");
    let mut recs = Vec::new();

    let graded = rs.graded_orbit(&lambda).expect("minuscule case");
    let sum_poly = graded.rank_generating_function();
    let product = rs.dynkin_product(&lambda).expect("dominant");
    let product_poly = product.to_polynomial();

    // A: the two routes to the Dynkin polynomial agree coefficientwise.
    recs.push(record(
        "identity-a.two-route".into(),
        subject.clone(),
        product_poly.as_ref() == Ok(&sum_poly),
        sum_poly.to_string(),
        match &product_poly {
            Ok(p) => p.to_string(),
            Err(e) => e.to_string(),
        },
    ));

    // Dimension and palindromicity of the rank generating function.
    recs.push(record(
        "identity-a.dimension".into(),
        subject.clone(),
        sum_poly.eval_i64(1) == BigInt::from(graded.len()),
        format!("D(1) = {}", graded.len()),
        format!("{}", sum_poly.eval_i64(1)),
    ));
    recs.push(record(
        "identity-a.palindromic".into(),
        subject.clone(),
        sum_poly.is_palindromic(),
        "palindromic coefficients".into(),
        format!("{sum_poly}"),
    ));

    // B: fixed points of w0 count D(-1).
    let fixed = rs
        .fixed_weight_count(&lambda, &NodePermutation::identity(rs.rank()))
        .expect("identity twist");
    let d_minus_one = sum_poly.eval_i64(-1);
    recs.push(record(
        "identity-b.q-minus-one".into(),
        subject.clone(),
        BigInt::from(fixed) == d_minus_one,
        format!("D(-1) = {d_minus_one}"),
        format!("fixed count {fixed}"),
    ));

    // C: the even-filtered product is an even polynomial bridging to D(-1).
    let even_poly = product.even_part().to_polynomial();
    match &even_poly {
        Ok(p) => {
            recs.push(record(
                "identity-c.even-polynomial".into(),
                subject.clone(),
                p.is_even_polynomial(),
                "only even-degree terms".into(),
                p.to_string(),
            ));
            recs.push(record(
                "identity-c.even-bridge".into(),
                subject.clone(),
                p.eval_i64(1) == d_minus_one,
                format!("D_ev(1) = D(-1) = {d_minus_one}"),
                format!("{}", p.eval_i64(1)),
            ));
        }
        Err(e) => recs.push(record(
            "identity-c.even-polynomial".into(),
            subject.clone(),
            false,
            "a polynomial".into(),
            e.to_string(),
        )),
    }

    // D: degree multisets of W over W_lambda reproduce both polynomials.
    let stab = rs.stabilizer_subtype(&lambda).expect("dominant");
    let stab_rs = RootSystem::new(stab);
    let mut stab_degrees: Vec<u64> = stab_rs.weyl_degrees().degrees().to_vec();
    stab_degrees.extend(std::iter::repeat_n(1, rs.rank() - stab_rs.rank()));
    let degree_ratio = crate::polyarith::CycloRatio::new(
        rs.weyl_degrees().degrees().iter().copied(),
        stab_degrees,
    );
    let degree_poly = degree_ratio.to_polynomial();
    recs.push(record(
        "identity-d.degrees-full".into(),
        subject.clone(),
        degree_poly.as_ref() == Ok(&sum_poly),
        sum_poly.to_string(),
        match &degree_poly {
            Ok(p) => p.to_string(),
            Err(e) => e.to_string(),
        },
    ));
    let degree_even = degree_ratio.even_part().to_polynomial();
    recs.push(record(
        "identity-d.degrees-even".into(),
        subject.clone(),
        degree_even.is_ok() && degree_even.as_ref().ok() == even_poly.as_ref().ok(),
        match &even_poly {
            Ok(p) => p.to_string(),
            Err(e) => e.to_string(),
        },
        match &degree_even {
            Ok(p) => p.to_string(),
            Err(e) => e.to_string(),
        },
    ));

    // Orbit size by the index formula.
    let by_index = rs.orbit_size_by_index(&lambda).expect("dominant");
    recs.push(record(
        "structural.orbit-index".into(),
        subject.clone(),
        by_index == num_bigint::BigUint::from(graded.len() as u64),
        format!("orbit size {}", graded.len()),
        format!("|W|/|W_lambda| = {by_index}"),
    ));

    // F (orbit part): trace, fixed points and coinvariant dimension of the
    // w0 involution, including the exact-rank route.
    let perm = rs
        .fibre_permutation(&graded, &NodePermutation::identity(rs.rank()))
        .expect("identity twist");
    let ok = perm.is_involution()
        && perm.trace() == fixed
        && perm.coinvariant_dim() == perm.coinvariant_dim_by_rank()
        && perm.fixed_points() + perm.len() as u64 == 2 * perm.cycle_count();
    recs.push(record(
        "identity-f.w0-coinvariants".into(),
        subject,
        ok,
        "trace = fixed, cycles = rank route, involution relation".into(),
        format!(
            "trace {}, cycles {}, size {}",
            perm.trace(),
            perm.cycle_count(),
            perm.len()
        ),
    ));

    recs
}

/// Structural checks for one type in the sweep.
fn structural_records(t: SimpleType) -> Vec<CheckRecord> {
    let subject = t.to_string();
    let rs = RootSystem::simple(t);
    let mut recs = Vec::new();

    let degrees = rs.weyl_degrees();
    recs.push(record(
        format!("structural.degrees-order.{t}"),
        subject.clone(),
        degrees.product() == *rs.weyl_group_order(),
        format!("|W| = {}", rs.weyl_group_order()),
        format!("product of degrees {}", degrees.product()),
    ));
    recs.push(record(
        format!("structural.degrees-posroots.{t}"),
        subject.clone(),
        degrees.sum_of_degrees_minus_one() as usize == rs.num_positive_roots(),
        format!("|positive roots| = {}", rs.num_positive_roots()),
        format!("sum of (d-1) = {}", degrees.sum_of_degrees_minus_one()),
    ));

    // The three minuscule detection routes agree.
    let by_criterion = rs.list_minuscule();
    let by_subtraction: Vec<usize> = (0..rs.rank())
        .filter(|&i| {
            let w = Weight::fundamental(rs.stype().clone(), i).expect("node in range");
            rs.is_minuscule_by_root_subtraction(&w).expect("dominant")
        })
        .collect();
    let by_table = minuscule_classification(&t);
    recs.push(record(
        format!("structural.minuscule-routes.{t}"),
        subject,
        by_criterion == by_subtraction && by_criterion == by_table,
        format!("{by_table:?}"),
        format!("criterion {by_criterion:?}, subtraction {by_subtraction:?}"),
    ));

    recs
}

/// Multiplicativity of the Dynkin polynomial and of fixed counts over
/// direct sums, for all pairs of minuscule data on small-rank factors.
fn multiplicativity_records(max_rank: usize) -> Vec<CheckRecord> {
    let small = max_rank.min(4);
    let mut data: Vec<(SimpleType, Vec<i64>)> = Vec::new();
    for (t, node) in minuscule_cases(small) {
        let mut coords = vec![0i64; t.rank()];
        coords[node] = 1;
        data.push((t, coords));
    }
    // Zero weights exercise the multiplicative identity.
    if let Ok(b2) = SimpleType::new(Family::B, 2) {
        if small >= 2 {
            data.push((b2, vec![0, 0]));
        }
    }

    let pairs: Vec<(usize, usize)> = (0..data.len())
        .flat_map(|i| (i..data.len()).map(move |j| (i, j)))
        .collect();
    pairs
        .par_iter()
        .map(|&(i, j)| {
            let (ta, ca) = &data[i];
            let (tb, cb) = &data[j];
            let subject = format!("{ta}{ca:?} (+) {tb}{cb:?}");

            let (rs_a, ga) = direct_sum(&[(*ta, ca.clone())]).expect("factor data");
            let (rs_b, gb) = direct_sum(&[(*tb, cb.clone())]).expect("factor data");
            let (rs_ab, gab) =
                direct_sum(&[(*ta, ca.clone()), (*tb, cb.clone())]).expect("pair data");

            let d_prod = ga
                .rank_generating_function()
                .mul(&gb.rank_generating_function());
            let d_sum = gab.rank_generating_function();

            let fa = rs_a
                .fixed_weight_count(ga.lambda(), &NodePermutation::identity(rs_a.rank()))
                .expect("identity twist");
            let fb = rs_b
                .fixed_weight_count(gb.lambda(), &NodePermutation::identity(rs_b.rank()))
                .expect("identity twist");
            let fab = rs_ab
                .fixed_weight_count(gab.lambda(), &NodePermutation::identity(rs_ab.rank()))
                .expect("identity twist");

            record(
                format!("identity-e.multiplicativity.{i}.{j}"),
                subject,
                d_sum == d_prod && fab == fa * fb,
                format!("D product {d_prod}, fixed {}", fa * fb),
                format!("D sum {d_sum}, fixed {fab}"),
            )
        })
        .collect()
}

/// Deterministic xorshift-style generator for the random-permutation sweep;
/// fixed seed so reports are byte-stable.
struct SplitMix64(u64);

impl SplitMix64 {
    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    fn below(&mut self, n: u64) -> u64 {
        self.next() % n
    }
}

/// Coinvariant checks on random permutations: trace equals the fixed-point
/// count, the cycle count matches the exact-rank route, and involutions
/// satisfy #fixed = 2 * cycles - size.
fn random_permutation_records(count: usize, max_size: usize) -> Vec<CheckRecord> {
    let mut rng = SplitMix64(0x6d696e75);
    let mut recs = Vec::new();
    for trial in 0..count {
        let n = 1 + rng.below(max_size as u64) as usize;
        let mut perm: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            let j = rng.below(i as u64 + 1) as usize;
            perm.swap(i, j);
        }
        let p = FibrePermutation::new(perm);
        let mut ok = p.trace() == p.fixed_points() && p.coinvariant_dim() == p.coinvariant_dim_by_rank();
        if p.is_involution() {
            ok = ok && p.fixed_points() + p.len() as u64 == 2 * p.cycle_count();
        }
        if !ok || trial < 3 || trial == count - 1 {
            recs.push(record(
                format!("identity-f.random-permutation.{trial}"),
                format!("permutation of {n} points"),
                ok,
                "trace = fixed, cycle count = rank route".into(),
                format!(
                    "trace {}, cycles {}, rank route {}",
                    p.trace(),
                    p.cycle_count(),
                    p.coinvariant_dim_by_rank()
                ),
            ));
        }
    }
    // One summary record keeps the report small while recording the sweep.
    recs.push(record(
        "identity-f.random-permutations-summary".into(),
        format!("{count} seeded random permutations, sizes <= {max_size}"),
        recs.iter().all(|r| r.status != Status::Fail),
        "all trials consistent".into(),
        format!("{count} trials run"),
    ));
    recs
}

/// The identity suite: structural sanity per type plus the Dynkin-polynomial
/// identity battery per minuscule case.
pub fn suite_identities(max_rank: usize) -> Report {
    let pool = thread_pool();
    let records = pool.install(|| {
        let types = sweep_simple_types(max_rank);
        let structural: Vec<Vec<CheckRecord>> = types
            .par_iter()
            .map(|&t| structural_records(t))
            .collect();

        let cases = minuscule_cases(max_rank);
        let identities: Vec<Vec<CheckRecord>> = cases
            .par_iter()
            .map(|&(t, node)| identity_records(t, node))
            .collect();

        let mut records: Vec<CheckRecord> = Vec::new();
        records.extend(structural.into_iter().flatten());
        records.extend(identities.into_iter().flatten());
        records.extend(multiplicativity_records(max_rank));
        records.extend(random_permutation_records(200, 60));
        records
    });
    Report::new("identities", records)
}

/// The table suite: the five row checks on every instantiated row, the
/// quasi-compact catalog invariants, the rank comparisons and the Coxeter
/// parity sweep.
pub fn suite_tables(max_rank: usize) -> Report {
    let pool = thread_pool();
    let records = pool.install(|| {
        let mut records: Vec<CheckRecord> = Vec::new();

        if max_rank >= 2 {
            let n_max = max_rank.min(6);
            let rows = realforms::instantiate_tables(2..=n_max);
            let row_records: Vec<Vec<CheckRecord>> = rows
                .par_iter()
                .map(realforms::verify_row)
                .collect();
            records.extend(row_records.into_iter().flatten());
        }

        // Catalog invariants: every entry is a valid diagram by
        // construction; the trivial-class entry is the compact form.
        let catalog = realforms::quasi_compact_catalog(max_rank);
        for entry in catalog.entries() {
            if entry.class.is_trivial() {
                records.push(record(
                    format!("catalog.compact.{}", entry.class.base),
                    entry.class.base.to_string(),
                    entry.diagram.is_compact(),
                    "all nodes painted".into(),
                    entry.diagram.render(None),
                ));
            }
        }

        records.extend(realforms::rank_comparison_cases(max_rank.min(6)));
        records.extend(realforms::coxeter_parity_check(max_rank));
        records
    });
    Report::new("tables", records)
}

pub fn suite_all(max_rank: usize) -> Report {
    Report::merge(
        "all",
        vec![suite_identities(max_rank), suite_tables(max_rank)],
    )
}

/// Cross-check used by tests: a polynomial route for the Gaussian binomial
/// through explicit subsets. Weights of the k-th fundamental weight of
/// A_{n-1} are k-subsets of {0..n-1}; w0 acts by i -> n-1-i; the grading is
/// the sum over the subset shifted to start at zero.
pub fn gaussian_subset_model(n: usize, k: usize) -> (IntPoly, u64) {
    assert!(k <= n && n >= 1);
    let mut coeffs: Vec<BigInt> = Vec::new();
    let mut fixed = 0u64;
    let base: u64 = (0..k as u64).sum();
    let mut subset: Vec<usize> = (0..k).collect();
    loop {
        let degree: u64 = subset.iter().map(|&x| x as u64).sum::<u64>() - base;
        if coeffs.len() <= degree as usize {
            coeffs.resize(degree as usize + 1, BigInt::zero());
        }
        coeffs[degree as usize] += 1;
        let mirrored: std::collections::BTreeSet<usize> =
            subset.iter().map(|&x| n - 1 - x).collect();
        if subset.iter().copied().collect::<std::collections::BTreeSet<_>>() == mirrored {
            fixed += 1;
        }
        // Next k-subset in lexicographic order.
        let mut i = k;
        loop {
            if i == 0 {
                return (IntPoly::from_coeffs(coeffs), fixed);
            }
            i -= 1;
            if subset[i] != i + n - k {
                break;
            }
        }
        subset[i] += 1;
        for j in i + 1..k {
            subset[j] = subset[j - 1] + 1;
        }
    }
}

/// Convenience wrapper for tests and the CLI: the error type when a node is
/// not minuscule.
pub fn require_minuscule(rs: &RootSystem, lambda: &Weight) -> crate::Result<()> {
    if rs.is_minuscule(lambda)? {
        Ok(())
    } else {
        Err(Error::NotMinuscule(lambda.to_string()))
    }
}
