//! Root-system data for all finite simple and semisimple types, with exact
//! arithmetic: Cartan matrices, positive roots, pairings against coroots,
//! Coxeter numbers, reflection-group degrees and Weyl group orders.
//!
//! Conventions (Bourbaki numbering throughout):
//! - Weights are stored in the fundamental-weight basis as integer vectors.
//! - Roots are stored in the simple-root basis as integer vectors.
//! - The Cartan matrix is stored with `entry(i, j) = <alpha_j, alpha_i^vee>`,
//!   so column j holds the fundamental-weight coordinates of the simple root
//!   alpha_j, and `<beta, alpha_i^vee>` is row i dotted with beta's
//!   root-basis coordinates.
//! - Node indices are 0-based in the library API and 1-based in all rendered
//!   output.
//!
//! Conversions between the two bases go through the exact rational inverse
//! of the Cartan matrix; no floating point is used anywhere.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ratmat;

/// The nine families of finite simple root systems.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        };
        write!(f, "{c}")
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            "E" => Ok(Family::E),
            "F" => Ok(Family::F),
            "G" => Ok(Family::G),
            other => Err(Error::InvalidType(other.to_string())),
        }
    }
}

/// A simple type: family plus rank, validated against the classification.
///
/// D3 is accepted (it is isomorphic to A3 but stored as given); D2 is
/// rejected as ambiguous.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleType {
    family: Family,
    rank: usize,
}

impl SimpleType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(SimpleType { family, rank })
        } else {
            Err(Error::InvalidType(format!("{family}{rank}")))
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Langlands dual type: B and C swap, everything else is self-dual.
    /// Node numbering is preserved.
    pub fn langlands_dual(&self) -> SimpleType {
        let family = match self.family {
            Family::B => Family::C,
            Family::C => Family::B,
            f => f,
        };
        SimpleType {
            family,
            rank: self.rank,
        }
    }

    /// Cartan matrix rows under the crate convention (see module docs).
    fn cartan_rows(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut m = vec![vec![0i64; n]; n];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 2;
        }
        let link = |m: &mut Vec<Vec<i64>>, i: usize, j: usize| {
            m[i][j] = -1;
            m[j][i] = -1;
        };
        match self.family {
            Family::A => {
                for i in 0..n - 1 {
                    link(&mut m, i, i + 1);
                }
            }
            Family::B => {
                for i in 0..n - 1 {
                    link(&mut m, i, i + 1);
                }
                // alpha_n short: <alpha_{n-1}, alpha_n^vee> = -2
                m[n - 1][n - 2] = -2;
            }
            Family::C => {
                for i in 0..n - 1 {
                    link(&mut m, i, i + 1);
                }
                // alpha_n long: <alpha_n, alpha_{n-1}^vee> = -2
                m[n - 2][n - 1] = -2;
            }
            Family::D => {
                for i in 0..n.saturating_sub(3) {
                    link(&mut m, i, i + 1);
                }
                link(&mut m, n - 3, n - 2);
                link(&mut m, n - 3, n - 1);
            }
            Family::E => {
                // Chain 1-3-4-5-6(-7)(-8), node 2 attached to node 4.
                let chain: &[(usize, usize)] = &[(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7)];
                for &(a, b) in chain.iter().take(n - 2) {
                    link(&mut m, a, b);
                }
                link(&mut m, 1, 3);
            }
            Family::F => {
                link(&mut m, 0, 1);
                link(&mut m, 1, 2);
                link(&mut m, 2, 3);
                // alpha_2 long, alpha_3 short: <alpha_2, alpha_3^vee> = -2
                m[2][1] = -2;
            }
            Family::G => {
                // Node 1 long: matrix [[2,-1],[-3,2]].
                m[0][1] = -1;
                m[1][0] = -3;
            }
        }
        m
    }

    /// Symmetrisers d_i = (alpha_i, alpha_i)/2 normalised so short roots
    /// have d = 1.
    fn symmetrizers(&self) -> Vec<i64> {
        let n = self.rank;
        match self.family {
            Family::A | Family::D | Family::E => vec![1; n],
            Family::B => {
                let mut d = vec![2; n];
                d[n - 1] = 1;
                d
            }
            Family::C => {
                let mut d = vec![1; n];
                d[n - 1] = 2;
                d
            }
            Family::F => vec![2, 2, 1, 1],
            Family::G => vec![3, 1],
        }
    }

    /// Standard degree table of the Weyl group as a reflection group.
    fn degree_table(&self) -> Vec<u64> {
        let n = self.rank as u64;
        match self.family {
            Family::A => (2..=n + 1).collect(),
            Family::B | Family::C => (1..=n).map(|k| 2 * k).collect(),
            Family::D => {
                let mut d: Vec<u64> = (1..n).map(|k| 2 * k).collect();
                d.push(n);
                d
            }
            Family::E => match self.rank {
                6 => vec![2, 5, 6, 8, 9, 12],
                7 => vec![2, 6, 8, 10, 12, 14, 18],
                8 => vec![2, 8, 12, 14, 18, 20, 24, 30],
                _ => unreachable!(),
            },
            Family::F => vec![2, 6, 8, 12],
            Family::G => vec![2, 6],
        }
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

/// An ordered direct sum of simple types. Global node indices run over the
/// factors in order; each factor uses Bourbaki numbering internally.
///
/// The empty product (rank 0) is allowed; it arises as the stabiliser type
/// of a regular weight.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SemisimpleType {
    factors: Vec<SimpleType>,
}

impl SemisimpleType {
    pub fn new(factors: Vec<SimpleType>) -> Self {
        SemisimpleType { factors }
    }

    pub fn simple(t: SimpleType) -> Self {
        SemisimpleType { factors: vec![t] }
    }

    pub fn empty() -> Self {
        SemisimpleType {
            factors: Vec::new(),
        }
    }

    pub fn factors(&self) -> &[SimpleType] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.iter().map(|f| f.rank()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// The factor containing global node `idx` plus the node's local index.
    pub fn factor_of_node(&self, idx: usize) -> Option<(usize, usize)> {
        let mut offset = 0;
        for (fi, f) in self.factors.iter().enumerate() {
            if idx < offset + f.rank() {
                return Some((fi, idx - offset));
            }
            offset += f.rank();
        }
        None
    }

    /// Global index of the first node of factor `fi`.
    pub fn factor_offset(&self, fi: usize) -> usize {
        self.factors[..fi].iter().map(|f| f.rank()).sum()
    }

    pub fn langlands_dual(&self) -> SemisimpleType {
        SemisimpleType {
            factors: self.factors.iter().map(|f| f.langlands_dual()).collect(),
        }
    }

    /// Block-diagonal Cartan matrix over the factors.
    pub fn cartan_rows(&self) -> Vec<Vec<i64>> {
        let n = self.rank();
        let mut m = vec![vec![0i64; n]; n];
        let mut offset = 0;
        for f in &self.factors {
            let block = f.cartan_rows();
            for (i, row) in block.iter().enumerate() {
                for (j, &v) in row.iter().enumerate() {
                    m[offset + i][offset + j] = v;
                }
            }
            offset += f.rank();
        }
        m
    }

    fn symmetrizers(&self) -> Vec<i64> {
        self.factors
            .iter()
            .flat_map(|f| f.symmetrizers())
            .collect()
    }

    /// Abstract isomorphism test: factor multisets agree after sending the
    /// accidental isomorphism D3 to A3.
    pub fn is_isomorphic_to(&self, other: &SemisimpleType) -> bool {
        fn canon(t: &SemisimpleType) -> Vec<SimpleType> {
            let mut v: Vec<SimpleType> = t
                .factors
                .iter()
                .map(|f| {
                    if f.family() == Family::D && f.rank() == 3 {
                        SimpleType::new(Family::A, 3).unwrap()
                    } else {
                        *f
                    }
                })
                .collect();
            v.sort();
            v
        }
        canon(self) == canon(other)
    }
}

impl fmt::Display for SemisimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.factors.iter().map(|t| t.to_string()).collect();
        f.write_str(&parts.join("+"))
    }
}

impl From<SimpleType> for SemisimpleType {
    fn from(t: SimpleType) -> Self {
        SemisimpleType::simple(t)
    }
}

/// Square integer matrix `entry(i, j) = <alpha_j, alpha_i^vee>`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanMatrix {
    rows: Vec<Vec<i64>>,
}

impl CartanMatrix {
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        let n = rows.len();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidType("non-square Cartan matrix".into()));
            }
            for (j, &v) in row.iter().enumerate() {
                let ok = if i == j {
                    v == 2
                } else {
                    (-3..=0).contains(&v) && ((v == 0) == (rows[j][i] == 0))
                };
                if !ok {
                    return Err(Error::InvalidType(format!(
                        "bad Cartan entry {v} at ({i},{j})"
                    )));
                }
            }
        }
        Ok(CartanMatrix { rows })
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.rows[i][j]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    /// Fundamental-weight coordinates of alpha_j (column j).
    pub fn simple_root_in_weight_coords(&self, j: usize) -> Vec<i64> {
        self.rows.iter().map(|row| row[j]).collect()
    }
}

/// Integer vector in the simple-root basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootVec {
    coords: Vec<i64>,
}

impl RootVec {
    pub fn new(coords: Vec<i64>) -> Self {
        RootVec { coords }
    }

    pub fn simple(rank: usize, i: usize) -> Self {
        let mut coords = vec![0; rank];
        coords[i] = 1;
        RootVec { coords }
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn height(&self) -> i64 {
        self.coords.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.coords.iter().all(|&c| c >= 0) && self.coords.iter().any(|&c| c > 0)
    }
}

impl fmt::Display for RootVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Integer vector in the fundamental-weight basis, tied to its ambient type.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Weight {
    coords: Vec<i64>,
    ambient: SemisimpleType,
}

impl Weight {
    pub fn new(ambient: SemisimpleType, coords: Vec<i64>) -> Result<Self> {
        if coords.len() != ambient.rank() {
            return Err(Error::AmbientMismatch {
                expected: ambient.to_string(),
                got: format!("vector of length {}", coords.len()),
            });
        }
        Ok(Weight { coords, ambient })
    }

    pub fn zero(ambient: SemisimpleType) -> Self {
        let n = ambient.rank();
        Weight {
            coords: vec![0; n],
            ambient,
        }
    }

    /// The fundamental weight omega at 0-based node `idx`.
    pub fn fundamental(ambient: SemisimpleType, idx: usize) -> Result<Self> {
        let n = ambient.rank();
        if idx >= n {
            return Err(Error::NodeOutOfRange { node: idx, rank: n });
        }
        let mut coords = vec![0; n];
        coords[idx] = 1;
        Ok(Weight { coords, ambient })
    }

    /// rho: all fundamental-weight coordinates equal to 1.
    pub fn rho(ambient: SemisimpleType) -> Self {
        let n = ambient.rank();
        Weight {
            coords: vec![1; n],
            ambient,
        }
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> i64 {
        self.coords[i]
    }

    pub fn ambient(&self) -> &SemisimpleType {
        &self.ambient
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    pub fn is_dominant(&self) -> bool {
        self.coords.iter().all(|&c| c >= 0)
    }

    pub fn negate(&self) -> Weight {
        Weight {
            coords: self.coords.iter().map(|&c| -c).collect(),
            ambient: self.ambient.clone(),
        }
    }

    pub fn add(&self, other: &Weight) -> Result<Weight> {
        self.check_ambient(other)?;
        Ok(Weight {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
            ambient: self.ambient.clone(),
        })
    }

    /// Concatenate weights of separate ambients into one weight of the sum.
    pub fn concat(parts: &[Weight]) -> Weight {
        let ambient = SemisimpleType::new(
            parts
                .iter()
                .flat_map(|w| w.ambient.factors().iter().copied())
                .collect(),
        );
        let coords = parts.iter().flat_map(|w| w.coords.iter().copied()).collect();
        Weight { coords, ambient }
    }

    pub(crate) fn check_ambient(&self, other: &Weight) -> Result<()> {
        if self.ambient == other.ambient {
            Ok(())
        } else {
            Err(Error::AmbientMismatch {
                expected: self.ambient.to_string(),
                got: other.ambient.to_string(),
            })
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Multiset of reflection-group degrees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeMultiset {
    degrees: Vec<u64>,
}

impl DegreeMultiset {
    pub fn new(mut degrees: Vec<u64>) -> Self {
        degrees.sort_unstable();
        DegreeMultiset { degrees }
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    pub fn product(&self) -> BigUint {
        self.degrees
            .iter()
            .fold(BigUint::one(), |acc, &d| acc * BigUint::from(d))
    }

    pub fn sum_of_degrees_minus_one(&self) -> u64 {
        self.degrees.iter().map(|&d| d - 1).sum()
    }

    pub fn union(&self, other: &DegreeMultiset) -> DegreeMultiset {
        let mut v = self.degrees.clone();
        v.extend_from_slice(&other.degrees);
        DegreeMultiset::new(v)
    }
}

/// Independent Weyl group order: |W| as a product of orbit sizes via
/// parabolic quotients. Uses only the Cartan matrix and breadth-first orbit
/// closure, so it cross-checks the hard-coded degree tables.
pub fn weyl_order(t: &SemisimpleType) -> BigUint {
    let mut acc = BigUint::one();
    for f in t.factors() {
        acc *= weyl_order_simple(f);
    }
    acc
}

fn weyl_order_simple(t: &SimpleType) -> BigUint {
    if t.rank() == 1 {
        return BigUint::from(2u32);
    }
    let st = SemisimpleType::simple(*t);
    let rows = st.cartan_rows();
    let n = t.rank();
    // Orbit of omega_1 under the Weyl group, by raw reflection closure.
    let mut start = vec![0i64; n];
    start[0] = 1;
    let orbit = raw_orbit(&rows, start);
    let sub = classify_subdiagram(&rows, &(1..n).collect::<Vec<_>>());
    BigUint::from(orbit) * weyl_order(&sub.stype)
}

/// Size of the reflection-closure orbit of `start` for the given Cartan rows.
fn raw_orbit(rows: &[Vec<i64>], start: Vec<i64>) -> u64 {
    let n = rows.len();
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.clone());
    queue.push_back(start);
    while let Some(w) = queue.pop_front() {
        for i in 0..n {
            if w[i] == 0 {
                continue;
            }
            let mut next = w.clone();
            let c = w[i];
            for (k, row) in rows.iter().enumerate() {
                next[k] -= c * row[i];
            }
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    seen.len() as u64
}

/// A classified induced subdiagram: the semisimple type of the selected
/// nodes plus the map from its new global node indices back to the original
/// ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subdiagram {
    pub stype: SemisimpleType,
    /// `node_map[new_index] = original_index`
    pub node_map: Vec<usize>,
}

/// Identify the Dynkin type of the subdiagram induced on `nodes`, together
/// with a deterministic Bourbaki renumbering (the lexicographically smallest
/// valid assignment of original nodes to Bourbaki positions).
pub fn classify_subdiagram(rows: &[Vec<i64>], nodes: &[usize]) -> Subdiagram {
    let node_set: HashSet<usize> = nodes.iter().copied().collect();
    // Connected components, ordered by smallest member.
    let mut remaining: Vec<usize> = nodes.to_vec();
    remaining.sort_unstable();
    let mut seen: HashSet<usize> = HashSet::new();
    let mut components: Vec<Vec<usize>> = Vec::new();
    for &v in &remaining {
        if seen.contains(&v) {
            continue;
        }
        let mut comp = vec![];
        let mut stack = vec![v];
        seen.insert(v);
        while let Some(u) = stack.pop() {
            comp.push(u);
            for &w in &remaining {
                if !seen.contains(&w) && rows[u][w] != 0 && node_set.contains(&w) {
                    seen.insert(w);
                    stack.push(w);
                }
            }
        }
        comp.sort_unstable();
        components.push(comp);
    }

    let mut factors = Vec::new();
    let mut node_map = Vec::new();
    for comp in components {
        let (t, order) = classify_component(rows, &comp);
        factors.push(t);
        node_map.extend(order);
    }
    Subdiagram {
        stype: SemisimpleType::new(factors),
        node_map,
    }
}

fn classify_component(rows: &[Vec<i64>], comp: &[usize]) -> (SimpleType, Vec<usize>) {
    let r = comp.len();
    let st = |f, r| SimpleType::new(f, r).expect("classified rank in bounds");
    if r == 1 {
        return (st(Family::A, 1), comp.to_vec());
    }
    let neighbors = |u: usize| -> Vec<usize> {
        comp.iter()
            .copied()
            .filter(|&w| w != u && rows[u][w] != 0)
            .collect()
    };
    let bond = |u: usize, v: usize| -> i64 { rows[u][v].abs().max(rows[v][u].abs()) };

    // Triple bond: G2. Node 1 is the long root, i.e. the j with
    // <alpha_j, alpha_i^vee> = -3 read as rows[i][j] = -3.
    for &u in comp {
        for &v in comp {
            if u != v && rows[u][v] == -3 {
                assert_eq!(r, 2, "triple bond outside G2");
                return (st(Family::G, 2), vec![v, u]);
            }
        }
    }

    let double: Vec<(usize, usize)> = comp
        .iter()
        .flat_map(|&u| {
            neighbors(u)
                .into_iter()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
        .filter(|&(u, v)| bond(u, v) == 2)
        .collect();

    if !double.is_empty() {
        assert_eq!(double.len(), 1, "more than one double bond in component");
        let (u, v) = double[0];
        // rows[i][j] = -2 means alpha_i is short and alpha_j long.
        let (short, long) = if rows[u][v] == -2 { (u, v) } else { (v, u) };
        if r == 2 {
            // Canonicalised as B2: node 1 long, node 2 short.
            return (st(Family::B, 2), vec![long, short]);
        }
        let chain = chain_order(&neighbors, comp);
        let ends = [chain[0], chain[r - 1]];
        let end_member = [u, v].into_iter().find(|x| ends.contains(x));
        match end_member {
            None => {
                // Double bond strictly inside the chain: F4, node 2 long.
                assert_eq!(r, 4, "interior double bond outside F4");
                let order: Vec<usize> = if chain[1] == long {
                    chain
                } else {
                    chain.into_iter().rev().collect()
                };
                assert_eq!(order[1], long);
                (st(Family::F, 4), order)
            }
            Some(e) => {
                let order: Vec<usize> = if chain[r - 1] == e {
                    chain
                } else {
                    chain.into_iter().rev().collect()
                };
                if e == short {
                    (st(Family::B, r), order)
                } else {
                    (st(Family::C, r), order)
                }
            }
        }
    } else {
        // Simply laced: chain or fork.
        let hub: Vec<usize> = comp
            .iter()
            .copied()
            .filter(|&u| neighbors(u).len() == 3)
            .collect();
        if hub.is_empty() {
            let chain = chain_order(&neighbors, comp);
            let rev: Vec<usize> = chain.iter().rev().copied().collect();
            return (st(Family::A, r), lex_min(vec![chain, rev]));
        }
        assert_eq!(hub.len(), 1, "unsupported branching");
        let h = hub[0];
        // Arms as paths from the hub outward.
        let mut arms: Vec<Vec<usize>> = Vec::new();
        for start in neighbors(h) {
            let mut arm = vec![start];
            let mut prev = h;
            loop {
                let next: Vec<usize> = neighbors(*arm.last().unwrap())
                    .into_iter()
                    .filter(|&x| x != prev)
                    .collect();
                match next.as_slice() {
                    [] => break,
                    [one] => {
                        prev = *arm.last().unwrap();
                        arm.push(*one);
                    }
                    _ => panic!("unsupported branching"),
                }
            }
            arms.push(arm);
        }
        arms.sort_by_key(|a| a.len());
        let lens: Vec<usize> = arms.iter().map(|a| a.len()).collect();
        match lens.as_slice() {
            [1, 1, k] => {
                let n = k + 3;
                // Candidates: any choice of which short arms take positions
                // n-1 and n; for D4 any arm can play the chain.
                let mut cands = Vec::new();
                let arm_sets: Vec<(usize, usize, usize)> = if *k == 1 {
                    vec![(0, 1, 2), (1, 0, 2), (2, 0, 1), (0, 2, 1), (1, 2, 0), (2, 1, 0)]
                } else {
                    vec![(2, 0, 1), (2, 1, 0)]
                };
                for (chain_arm, s1, s2) in arm_sets {
                    let mut order: Vec<usize> =
                        arms[chain_arm].iter().rev().copied().collect();
                    order.push(h);
                    order.push(arms[s1][0]);
                    order.push(arms[s2][0]);
                    cands.push(order);
                }
                (st(Family::D, n), lex_min(cands))
            }
            [1, 2, 2] => {
                // E6: positions 1,3 on one length-2 arm, 5,6 on the other,
                // 2 on the short arm, 4 at the hub.
                let mut cands = Vec::new();
                for (a, b) in [(1, 2), (2, 1)] {
                    let order = vec![
                        arms[a][1], // 1
                        arms[0][0], // 2
                        arms[a][0], // 3
                        h,          // 4
                        arms[b][0], // 5
                        arms[b][1], // 6
                    ];
                    cands.push(order);
                }
                (st(Family::E, 6), lex_min(cands))
            }
            [1, 2, k2] if *k2 == 3 || *k2 == 4 => {
                let n = k2 + 4;
                let mut order = vec![arms[1][1], arms[0][0], arms[1][0], h];
                order.extend(arms[2].iter().copied());
                (st(Family::E, n), order)
            }
            _ => panic!("unsupported diagram shape {lens:?}"),
        }
    }
}

fn chain_order(neighbors: &dyn Fn(usize) -> Vec<usize>, comp: &[usize]) -> Vec<usize> {
    let ends: Vec<usize> = comp
        .iter()
        .copied()
        .filter(|&u| neighbors(u).len() <= 1)
        .collect();
    assert_eq!(ends.len(), 2, "not a chain");
    let start = *ends.iter().min().unwrap();
    let mut order = vec![start];
    let mut prev = usize::MAX;
    while order.len() < comp.len() {
        let cur = *order.last().unwrap();
        let next = neighbors(cur)
            .into_iter()
            .find(|&x| x != prev)
            .expect("chain walk");
        prev = cur;
        order.push(next);
    }
    order
}

fn lex_min(cands: Vec<Vec<usize>>) -> Vec<usize> {
    cands.into_iter().min().expect("nonempty candidates")
}

/// Root-system data for a semisimple type, computed once and immutable.
#[derive(Debug, Clone)]
pub struct RootSystem {
    stype: SemisimpleType,
    cartan: CartanMatrix,
    simple_d: Vec<i64>,
    positive_roots: Vec<RootVec>,
    /// Coroot coordinates (in the simple-coroot basis) per positive root.
    coroot_coords: Vec<Vec<i64>>,
    inv_cartan: ratmat::RatMatrix,
    /// <rho^vee, omega_i> per node: column sums of the inverse Cartan matrix.
    rho_check_on_fw: Vec<BigRational>,
    degrees: DegreeMultiset,
    weyl_order: BigUint,
}

impl RootSystem {
    pub fn new(stype: SemisimpleType) -> Self {
        let rows = stype.cartan_rows();
        let cartan = CartanMatrix::new(rows.clone()).expect("family data is valid");
        let simple_d = stype.symmetrizers();
        let positive_roots = positive_roots_closure(&rows);
        let coroot_coords: Vec<Vec<i64>> = positive_roots
            .iter()
            .map(|beta| coroot_coordinates(&rows, &simple_d, beta))
            .collect();

        let n = stype.rank();
        let (inv_cartan, rho_check_on_fw) = if n == 0 {
            (Vec::new(), Vec::new())
        } else {
            let inv = ratmat::invert(&ratmat::from_integers(&rows));
            let col_sums: Vec<BigRational> = (0..n)
                .map(|j| {
                    (0..n)
                        .map(|i| inv[i][j].clone())
                        .fold(BigRational::zero(), |a, b| a + b)
                })
                .collect();
            (inv, col_sums)
        };

        let degrees = stype
            .factors()
            .iter()
            .map(|f| DegreeMultiset::new(f.degree_table()))
            .fold(DegreeMultiset::new(vec![]), |acc, d| acc.union(&d));

        // Hard-coded degree tables are validated on every construction
        // against independently computed |W| and |positive roots|.
        let order = weyl_order(&stype);
        assert_eq!(
            degrees.product(),
            order,
            "degree table product differs from Weyl group order for {stype}"
        );
        assert_eq!(
            degrees.sum_of_degrees_minus_one() as usize,
            positive_roots.len(),
            "degree table vs positive root count for {stype}"
        );

        RootSystem {
            stype,
            cartan,
            simple_d,
            positive_roots,
            coroot_coords,
            inv_cartan,
            rho_check_on_fw,
            degrees,
            weyl_order: order,
        }
    }

    pub fn simple(t: SimpleType) -> Self {
        Self::new(SemisimpleType::simple(t))
    }

    pub fn stype(&self) -> &SemisimpleType {
        &self.stype
    }

    pub fn rank(&self) -> usize {
        self.stype.rank()
    }

    pub fn cartan_matrix(&self) -> &CartanMatrix {
        &self.cartan
    }

    /// Positive roots, each exactly once, sorted by height then
    /// lexicographically.
    pub fn positive_roots(&self) -> &[RootVec] {
        &self.positive_roots
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    /// The unique positive root of maximal height. Simple types only.
    pub fn highest_root(&self) -> Result<RootVec> {
        if self.stype.factors().len() != 1 {
            return Err(Error::InvalidType(format!(
                "highest root needs a simple type, got {}",
                self.stype
            )));
        }
        Ok(self
            .positive_roots
            .last()
            .expect("positive root set nonempty")
            .clone())
    }

    /// Coxeter number c = height(highest root) + 1; asserts agreement with
    /// the root-count formula |roots| / rank. Simple types only.
    pub fn coxeter_number(&self) -> Result<u64> {
        let h = self.highest_root()?.height() as u64 + 1;
        let by_count = (2 * self.num_positive_roots() as u64) / self.rank() as u64;
        assert_eq!(h, by_count, "Coxeter number routes disagree");
        Ok(h)
    }

    /// Coordinates of the coroot beta^vee in the simple-coroot basis.
    pub fn coroot_coords(&self, beta: &RootVec) -> Vec<i64> {
        coroot_coordinates(self.cartan.rows(), &self.simple_d, beta)
    }

    /// Cached coroot coordinates of the k-th positive root.
    pub fn positive_coroot_coords(&self, k: usize) -> &[i64] {
        &self.coroot_coords[k]
    }

    /// Exact pairing <mu, beta^vee> for an integral weight: an integer.
    pub fn pairing(&self, mu: &Weight, beta: &RootVec) -> Result<i64> {
        if mu.ambient() != &self.stype {
            return Err(Error::AmbientMismatch {
                expected: self.stype.to_string(),
                got: mu.ambient().to_string(),
            });
        }
        if beta.coords().len() != self.rank() {
            return Err(Error::AmbientMismatch {
                expected: self.stype.to_string(),
                got: format!("root of length {}", beta.coords().len()),
            });
        }
        let c = self.coroot_coords(beta);
        Ok(c.iter().zip(mu.coords()).map(|(a, b)| a * b).sum())
    }

    /// <rho^vee, mu>: the sum of mu's coordinates in the simple-root basis,
    /// computed with exact rationals through the inverse Cartan matrix.
    pub fn rho_check_pairing(&self, mu: &Weight) -> BigRational {
        self.rho_check_on_fw
            .iter()
            .zip(mu.coords())
            .map(|(c, &m)| c * BigRational::from_integer(BigInt::from(m)))
            .fold(BigRational::zero(), |a, b| a + b)
    }

    /// mu in the simple-root basis (exact rationals).
    pub fn root_coords(&self, mu: &Weight) -> Vec<BigRational> {
        let v: Vec<BigRational> = mu
            .coords()
            .iter()
            .map(|&c| BigRational::from_integer(BigInt::from(c)))
            .collect();
        ratmat::mat_vec(&self.inv_cartan, &v)
    }

    /// Degree multiset of the Weyl group (validated hard-coded tables).
    pub fn weyl_degrees(&self) -> &DegreeMultiset {
        &self.degrees
    }

    pub fn weyl_group_order(&self) -> &BigUint {
        &self.weyl_order
    }

    /// Height of a root; for the highest root this is c - 1.
    pub fn height(&self, beta: &RootVec) -> i64 {
        beta.height()
    }
}

fn positive_roots_closure(rows: &[Vec<i64>]) -> Vec<RootVec> {
    let n = rows.len();
    let mut seen: HashMap<Vec<i64>, ()> = HashMap::new();
    let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
    for i in 0..n {
        let mut v = vec![0i64; n];
        v[i] = 1;
        seen.insert(v.clone(), ());
        queue.push_back(v);
    }
    while let Some(beta) = queue.pop_front() {
        for i in 0..n {
            // <beta, alpha_i^vee> = row i of the Cartan matrix dotted with beta.
            let p: i64 = rows[i].iter().zip(&beta).map(|(a, b)| a * b).sum();
            if p == 0 {
                continue;
            }
            let mut next = beta.clone();
            next[i] -= p;
            if next.iter().all(|&c| c >= 0) && !seen.contains_key(&next) {
                seen.insert(next.clone(), ());
                queue.push_back(next);
            }
        }
    }
    let mut roots: Vec<RootVec> = seen.into_keys().map(RootVec::new).collect();
    roots.sort_by(|a, b| {
        a.height()
            .cmp(&b.height())
            .then_with(|| a.coords().cmp(b.coords()))
    });
    roots
}

/// beta^vee = sum_j (m_j d_j / d_beta) alpha_j^vee, always integral.
fn coroot_coordinates(rows: &[Vec<i64>], simple_d: &[i64], beta: &RootVec) -> Vec<i64> {
    let m = beta.coords();
    let n = m.len();
    // (beta, beta)/2 = (1/2) sum_i m_i d_i (row_i . m)
    let mut twice: i64 = 0;
    for i in 0..n {
        let row_dot: i64 = rows[i].iter().zip(m).map(|(a, b)| a * b).sum();
        twice += m[i] * simple_d[i] * row_dot;
    }
    assert!(twice > 0 && twice % 2 == 0, "root norm must be a positive even integer");
    let d_beta = twice / 2;
    m.iter()
        .zip(simple_d)
        .map(|(&mj, &dj)| {
            let num = mj * dj;
            assert_eq!(num % d_beta, 0, "coroot coordinates must be integral");
            num / d_beta
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn st(f: Family, r: usize) -> SimpleType {
        SimpleType::new(f, r).unwrap()
    }

    fn rs(f: Family, r: usize) -> RootSystem {
        RootSystem::simple(st(f, r))
    }

    #[test]
    fn rank_bounds() {
        assert!(SimpleType::new(Family::A, 1).is_ok());
        assert!(SimpleType::new(Family::B, 1).is_err());
        assert!(SimpleType::new(Family::C, 1).is_err());
        assert!(SimpleType::new(Family::D, 2).is_err());
        assert!(SimpleType::new(Family::D, 3).is_ok());
        assert!(SimpleType::new(Family::E, 5).is_err());
        assert!(SimpleType::new(Family::E, 9).is_err());
        assert!(SimpleType::new(Family::F, 4).is_ok());
        assert!(SimpleType::new(Family::G, 2).is_ok());
        assert!(SimpleType::new(Family::G, 3).is_err());
    }

    #[test]
    fn cartan_matrices_match_bourbaki() {
        assert_eq!(rs(Family::A, 1).cartan_matrix().rows(), &[vec![2]]);
        assert_eq!(
            rs(Family::A, 2).cartan_matrix().rows(),
            &[vec![2, -1], vec![-1, 2]]
        );
        assert_eq!(
            rs(Family::G, 2).cartan_matrix().rows(),
            &[vec![2, -1], vec![-3, 2]]
        );
        assert_eq!(
            rs(Family::B, 2).cartan_matrix().rows(),
            &[vec![2, -1], vec![-2, 2]]
        );
        assert_eq!(
            rs(Family::C, 3).cartan_matrix().rows(),
            &[vec![2, -1, 0], vec![-1, 2, -2], vec![0, -1, 2]]
        );
        assert_eq!(
            rs(Family::F, 4).cartan_matrix().rows(),
            &[
                vec![2, -1, 0, 0],
                vec![-1, 2, -1, 0],
                vec![0, -2, 2, -1],
                vec![0, 0, -1, 2]
            ]
        );
    }

    #[test]
    fn g2_relation_and_root_count() {
        // <alpha_1, alpha_2^vee> * <alpha_2, alpha_1^vee> = 3 for G2.
        let m = rs(Family::G, 2);
        let c = m.cartan_matrix();
        assert_eq!(c.entry(0, 1) * c.entry(1, 0), 3);
        assert_eq!(m.num_positive_roots(), 6);
    }

    #[test]
    fn positive_roots_small_types() {
        let a2 = rs(Family::A, 2);
        let roots: Vec<Vec<i64>> = a2
            .positive_roots()
            .iter()
            .map(|r| r.coords().to_vec())
            .collect();
        assert_eq!(roots, vec![vec![0, 1], vec![1, 0], vec![1, 1]]);

        let b2 = rs(Family::B, 2);
        let roots: Vec<Vec<i64>> = b2
            .positive_roots()
            .iter()
            .map(|r| r.coords().to_vec())
            .collect();
        assert_eq!(
            roots,
            vec![vec![0, 1], vec![1, 0], vec![1, 1], vec![1, 2]]
        );

        assert_eq!(rs(Family::E, 7).num_positive_roots(), 63);
        assert_eq!(rs(Family::E, 8).num_positive_roots(), 120);
        assert_eq!(rs(Family::F, 4).num_positive_roots(), 24);
    }

    #[test]
    fn highest_roots() {
        assert_eq!(rs(Family::A, 2).highest_root().unwrap().coords(), &[1, 1]);
        assert_eq!(
            rs(Family::C, 3).highest_root().unwrap().coords(),
            &[2, 2, 1]
        );
        assert_eq!(rs(Family::E, 7).highest_root().unwrap().height(), 17);
    }

    #[test]
    fn coxeter_numbers() {
        for n in 1..=8 {
            assert_eq!(rs(Family::A, n).coxeter_number().unwrap(), n as u64 + 1);
        }
        assert_eq!(rs(Family::E, 7).coxeter_number().unwrap(), 18);
        assert_eq!(rs(Family::G, 2).coxeter_number().unwrap(), 6);
        assert_eq!(rs(Family::B, 5).coxeter_number().unwrap(), 10);
        assert_eq!(rs(Family::D, 6).coxeter_number().unwrap(), 10);
        assert_eq!(rs(Family::F, 4).coxeter_number().unwrap(), 12);
    }

    #[test]
    fn pairing_rho_with_simple_and_highest() {
        let sweep = [
            st(Family::A, 5),
            st(Family::B, 4),
            st(Family::C, 4),
            st(Family::D, 5),
            st(Family::E, 6),
            st(Family::E, 7),
            st(Family::E, 8),
            st(Family::F, 4),
            st(Family::G, 2),
        ];
        for t in sweep {
            let r = RootSystem::simple(t);
            let rho = Weight::rho(r.stype().clone());
            for i in 0..r.rank() {
                let alpha = RootVec::simple(r.rank(), i);
                assert_eq!(r.pairing(&rho, &alpha).unwrap(), 1);
            }
            let hi = r.highest_root().unwrap();
            let c = r.coxeter_number().unwrap() as i64;
            // <rho^vee, alpha_max> is the height of the highest root, c - 1.
            assert_eq!(hi.height(), c - 1);
            let fw: Vec<i64> = (0..r.rank())
                .map(|i| {
                    hi.coords()
                        .iter()
                        .enumerate()
                        .map(|(j, &m)| m * r.cartan_matrix().entry(i, j))
                        .sum()
                })
                .collect();
            let hi_weight = Weight::new(r.stype().clone(), fw).unwrap();
            assert_eq!(
                r.rho_check_pairing(&hi_weight),
                BigRational::from_integer(BigInt::from(c - 1))
            );
            // <rho, alpha_max^vee> = c - 1 holds in the simply-laced types,
            // where roots and coroots are identified.
            if matches!(t.family(), Family::A | Family::D | Family::E) {
                assert_eq!(r.pairing(&rho, &hi).unwrap(), c - 1);
            }
        }
    }

    #[test]
    fn pairing_a3_example() {
        let r = rs(Family::A, 3);
        let mu = Weight::fundamental(r.stype().clone(), 1).unwrap();
        let alpha = RootVec::new(vec![1, 1, 1]);
        assert_eq!(r.pairing(&mu, &alpha).unwrap(), 1);
    }

    #[test]
    fn rho_check_pairing_examples() {
        let r = rs(Family::A, 2);
        // Simple roots pair to 1.
        for j in 0..2 {
            let alpha_fw = r.cartan_matrix().simple_root_in_weight_coords(j);
            let w = Weight::new(r.stype().clone(), alpha_fw).unwrap();
            assert_eq!(r.rho_check_pairing(&w), BigRational::one());
        }
        let w1 = Weight::fundamental(r.stype().clone(), 0).unwrap();
        assert_eq!(r.rho_check_pairing(&w1), BigRational::one());
        let zero = Weight::zero(r.stype().clone());
        assert_eq!(r.rho_check_pairing(&zero), BigRational::zero());
    }

    #[test]
    fn degrees_tables_validated() {
        assert_eq!(rs(Family::A, 2).weyl_degrees().degrees(), &[2, 3]);
        let d4 = rs(Family::D, 4);
        assert_eq!(d4.weyl_degrees().degrees(), &[2, 4, 4, 6]);
        assert_eq!(d4.weyl_group_order(), &BigUint::from(192u32));
        let e6 = rs(Family::E, 6);
        assert_eq!(e6.weyl_degrees().sum_of_degrees_minus_one(), 36);
        assert_eq!(e6.weyl_group_order(), &BigUint::from(51840u32));
        assert_eq!(
            rs(Family::E, 8).weyl_group_order(),
            &BigUint::from(696729600u64)
        );
    }

    #[test]
    fn d3_matches_a3_counts() {
        let d3 = rs(Family::D, 3);
        let a3 = rs(Family::A, 3);
        assert_eq!(d3.num_positive_roots(), a3.num_positive_roots());
        assert_eq!(d3.weyl_group_order(), a3.weyl_group_order());
        assert_eq!(
            d3.weyl_degrees().product(),
            a3.weyl_degrees().product()
        );
    }

    #[test]
    fn semisimple_block_structure() {
        let t = SemisimpleType::new(vec![st(Family::A, 1), st(Family::B, 2)]);
        let r = RootSystem::new(t.clone());
        assert_eq!(r.rank(), 3);
        assert_eq!(r.num_positive_roots(), 1 + 4);
        assert_eq!(r.weyl_group_order(), &BigUint::from(16u32));
        assert_eq!(t.factor_of_node(0), Some((0, 0)));
        assert_eq!(t.factor_of_node(2), Some((1, 1)));
        assert_eq!(t.factor_offset(1), 1);
    }

    #[test]
    fn classify_subdiagrams() {
        // E6 minus node 1 is D5.
        let e6 = SemisimpleType::simple(st(Family::E, 6));
        let sub = classify_subdiagram(&e6.cartan_rows(), &[1, 2, 3, 4, 5]);
        assert_eq!(sub.stype.factors(), &[st(Family::D, 5)]);

        // E7 minus node 7 is E6.
        let e7 = SemisimpleType::simple(st(Family::E, 7));
        let sub = classify_subdiagram(&e7.cartan_rows(), &[0, 1, 2, 3, 4, 5]);
        assert_eq!(sub.stype.factors(), &[st(Family::E, 6)]);

        // E8 minus node 1 is D7.
        let e8 = SemisimpleType::simple(st(Family::E, 8));
        let sub = classify_subdiagram(&e8.cartan_rows(), &(1..8).collect::<Vec<_>>());
        assert_eq!(sub.stype.factors(), &[st(Family::D, 7)]);

        // A3 minus the middle node is A1+A1.
        let a3 = SemisimpleType::simple(st(Family::A, 3));
        let sub = classify_subdiagram(&a3.cartan_rows(), &[0, 2]);
        assert_eq!(sub.stype.factors(), &[st(Family::A, 1), st(Family::A, 1)]);

        // B4 minus node 1 is B3; C4 minus node 1 is C3.
        let b4 = SemisimpleType::simple(st(Family::B, 4));
        let sub = classify_subdiagram(&b4.cartan_rows(), &[1, 2, 3]);
        assert_eq!(sub.stype.factors(), &[st(Family::B, 3)]);
        let c4 = SemisimpleType::simple(st(Family::C, 4));
        let sub = classify_subdiagram(&c4.cartan_rows(), &[1, 2, 3]);
        assert_eq!(sub.stype.factors(), &[st(Family::C, 3)]);

        // D5 minus node 1 is D4; D4 minus node 1 is A3 (the D3 shape).
        let d5 = SemisimpleType::simple(st(Family::D, 5));
        let sub = classify_subdiagram(&d5.cartan_rows(), &[1, 2, 3, 4]);
        assert_eq!(sub.stype.factors(), &[st(Family::D, 4)]);
        let d4 = SemisimpleType::simple(st(Family::D, 4));
        let sub = classify_subdiagram(&d4.cartan_rows(), &[1, 2, 3]);
        assert_eq!(sub.stype.factors(), &[st(Family::A, 3)]);

        // F4 middle nodes classify back to B2 (canonical form of C2).
        let f4 = SemisimpleType::simple(st(Family::F, 4));
        let sub = classify_subdiagram(&f4.cartan_rows(), &[1, 2]);
        assert_eq!(sub.stype.factors(), &[st(Family::B, 2)]);
    }

    #[test]
    fn langlands_duality() {
        assert_eq!(st(Family::B, 4).langlands_dual(), st(Family::C, 4));
        assert_eq!(st(Family::C, 4).langlands_dual(), st(Family::B, 4));
        assert_eq!(st(Family::E, 7).langlands_dual(), st(Family::E, 7));
    }

    #[test]
    fn isomorphism_d3_a3() {
        let d3 = SemisimpleType::simple(st(Family::D, 3));
        let a3 = SemisimpleType::simple(st(Family::A, 3));
        assert!(d3.is_isomorphic_to(&a3));
        assert!(!d3.is_isomorphic_to(&SemisimpleType::simple(st(Family::B, 3))));
    }

    #[test]
    fn empty_type() {
        let t = SemisimpleType::empty();
        let r = RootSystem::new(t);
        assert_eq!(r.rank(), 0);
        assert_eq!(r.num_positive_roots(), 0);
        assert!(r.weyl_group_order().is_one());
    }
}
