//! Weyl-group actions on weights: simple reflections, orbit enumeration,
//! the longest element w0 as a reduced word, stabiliser subdiagrams, and the
//! diagram automorphism -w0.
//!
//! w0 is represented as a concrete word in the simple reflections, never as
//! a matrix; all arithmetic stays integral. The word is produced by the
//! descent algorithm from rho, always descending at the smallest node index
//! with a positive coordinate, so it is reproducible.

use std::collections::{HashMap, VecDeque};

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::rootsys::{classify_subdiagram, RootSystem, SemisimpleType, Subdiagram, Weight};

/// A word in the simple-reflection generators; letters are 0-based node
/// indices applied left to right.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylWord {
    letters: Vec<usize>,
}

impl WeylWord {
    pub fn new(letters: Vec<usize>) -> Self {
        WeylWord { letters }
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

/// A Weyl-group orbit of a weight, deterministically ordered
/// (lexicographically by coordinates) with an index map.
#[derive(Debug, Clone)]
pub struct WeightOrbit {
    elements: Vec<Weight>,
    index: HashMap<Vec<i64>, usize>,
}

impl WeightOrbit {
    pub fn elements(&self) -> &[Weight] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn position(&self, w: &Weight) -> Option<usize> {
        self.index.get(w.coords()).copied()
    }

    pub fn contains(&self, w: &Weight) -> bool {
        self.position(w).is_some()
    }

    pub fn dominant_representative(&self) -> &Weight {
        self.elements
            .iter()
            .find(|w| w.is_dominant())
            .expect("every Weyl orbit has a dominant element")
    }

    pub(crate) fn from_sorted(elements: Vec<Weight>) -> Self {
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, w)| (w.coords().to_vec(), i))
            .collect();
        WeightOrbit { elements, index }
    }
}

/// A permutation of diagram nodes preserving the Cartan matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NodePermutation {
    perm: Vec<usize>,
}

impl NodePermutation {
    /// Validates that the permutation preserves the Cartan matrix of `t`.
    pub fn new(t: &SemisimpleType, perm: Vec<usize>) -> Result<Self> {
        let n = t.rank();
        if perm.len() != n {
            return Err(Error::NotCartanPreserving);
        }
        let mut seen = vec![false; n];
        for &p in &perm {
            if p >= n || seen[p] {
                return Err(Error::NotCartanPreserving);
            }
            seen[p] = true;
        }
        let rows = t.cartan_rows();
        for i in 0..n {
            for j in 0..n {
                if rows[perm[i]][perm[j]] != rows[i][j] {
                    return Err(Error::NotCartanPreserving);
                }
            }
        }
        Ok(NodePermutation { perm })
    }

    pub fn identity(n: usize) -> Self {
        NodePermutation {
            perm: (0..n).collect(),
        }
    }

    pub fn image(&self, i: usize) -> usize {
        self.perm[i]
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p)
    }

    pub fn inverse(&self) -> NodePermutation {
        let mut inv = vec![0; self.perm.len()];
        for (i, &p) in self.perm.iter().enumerate() {
            inv[p] = i;
        }
        NodePermutation { perm: inv }
    }

    pub fn compose(&self, then: &NodePermutation) -> NodePermutation {
        NodePermutation {
            perm: self.perm.iter().map(|&p| then.perm[p]).collect(),
        }
    }

    pub fn is_involution(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| self.perm[p] == i)
    }

    /// Action on weights by permuting coordinates: (p.w)_{p(i)} = w_i.
    pub fn apply(&self, w: &Weight) -> Weight {
        let mut coords = vec![0i64; w.coords().len()];
        for (i, &c) in w.coords().iter().enumerate() {
            coords[self.perm[i]] = c;
        }
        Weight::new(w.ambient().clone(), coords).expect("permutation preserves length")
    }
}

impl RootSystem {
    /// Simple reflection s_i on a weight:
    /// s_i(mu) = mu - mu_i * alpha_i, with alpha_i read off as column i of
    /// the Cartan matrix in fundamental-weight coordinates.
    pub fn reflect(&self, i: usize, mu: &Weight) -> Result<Weight> {
        let n = self.rank();
        if i >= n {
            return Err(Error::NodeOutOfRange { node: i, rank: n });
        }
        if mu.ambient() != self.stype() {
            return Err(Error::AmbientMismatch {
                expected: self.stype().to_string(),
                got: mu.ambient().to_string(),
            });
        }
        let mut coords = mu.coords().to_vec();
        self.reflect_in_place(i, &mut coords);
        Weight::new(self.stype().clone(), coords)
    }

    pub(crate) fn reflect_in_place(&self, i: usize, coords: &mut [i64]) {
        let c = coords[i];
        if c == 0 {
            return;
        }
        for (k, row) in self.cartan_matrix().rows().iter().enumerate() {
            coords[k] -= c * row[i];
        }
    }

    /// Breadth-first closure of {mu} under all simple reflections. The
    /// result is sorted lexicographically, so orbits are reproducible
    /// independent of traversal order.
    pub fn orbit(&self, mu: &Weight) -> Result<WeightOrbit> {
        if mu.ambient() != self.stype() {
            return Err(Error::AmbientMismatch {
                expected: self.stype().to_string(),
                got: mu.ambient().to_string(),
            });
        }
        let n = self.rank();
        let mut seen: HashMap<Vec<i64>, ()> = HashMap::new();
        let mut queue = VecDeque::new();
        seen.insert(mu.coords().to_vec(), ());
        queue.push_back(mu.coords().to_vec());
        while let Some(w) = queue.pop_front() {
            for i in 0..n {
                if w[i] == 0 {
                    continue;
                }
                let mut next = w.clone();
                self.reflect_in_place(i, &mut next);
                if !seen.contains_key(&next) {
                    seen.insert(next.clone(), ());
                    queue.push_back(next);
                }
            }
        }
        let mut coords: Vec<Vec<i64>> = seen.into_keys().collect();
        coords.sort();
        let elements: Vec<Weight> = coords
            .into_iter()
            .map(|c| Weight::new(self.stype().clone(), c).expect("orbit element"))
            .collect();
        let orbit = WeightOrbit::from_sorted(elements);
        debug_assert_eq!(
            orbit.elements().iter().filter(|w| w.is_dominant()).count(),
            1,
            "a Weyl orbit contains exactly one dominant weight"
        );
        Ok(orbit)
    }

    /// A reduced word for the longest element w0, by the descent algorithm:
    /// starting from rho, repeatedly reflect at the smallest node with a
    /// positive coordinate until the antidominant chamber is reached. The
    /// word length equals the number of positive roots.
    pub fn w0_word(&self) -> WeylWord {
        let n = self.rank();
        let mut coords = vec![1i64; n];
        let mut letters = Vec::with_capacity(self.num_positive_roots());
        while let Some(i) = (0..n).find(|&i| coords[i] > 0) {
            self.reflect_in_place(i, &mut coords);
            letters.push(i);
        }
        assert_eq!(
            letters.len(),
            self.num_positive_roots(),
            "descent word for w0 must have length |positive roots|"
        );
        WeylWord::new(letters)
    }

    /// Apply a word letter by letter, left to right.
    pub fn act(&self, word: &WeylWord, mu: &Weight) -> Result<Weight> {
        if mu.ambient() != self.stype() {
            return Err(Error::AmbientMismatch {
                expected: self.stype().to_string(),
                got: mu.ambient().to_string(),
            });
        }
        let n = self.rank();
        let mut coords = mu.coords().to_vec();
        for &i in word.letters() {
            if i >= n {
                return Err(Error::NodeOutOfRange { node: i, rank: n });
            }
            self.reflect_in_place(i, &mut coords);
        }
        Weight::new(self.stype().clone(), coords)
    }

    /// w0 applied to a weight, using the descent word.
    pub fn w0_apply(&self, mu: &Weight) -> Result<Weight> {
        self.act(&self.w0_word(), mu)
    }

    /// The diagram automorphism delta with w0(omega_i) = -omega_{delta(i)}.
    /// Identity exactly when w0 = -1.
    pub fn minus_w0_automorphism(&self) -> NodePermutation {
        let n = self.rank();
        let word = self.w0_word();
        let mut perm = vec![0usize; n];
        for i in 0..n {
            let omega = Weight::fundamental(self.stype().clone(), i).expect("node in range");
            let img = self.act(&word, &omega).expect("same ambient");
            let neg = img.negate();
            let j = (0..n)
                .find(|&j| {
                    neg.coords()
                        .iter()
                        .enumerate()
                        .all(|(k, &c)| c == i64::from(k == j))
                })
                .expect("w0(omega_i) is minus a fundamental weight");
            perm[i] = j;
        }
        NodePermutation::new(self.stype(), perm).expect("-w0 preserves the Cartan matrix")
    }

    /// lambda* = -w0(lambda), the highest weight of the dual representation.
    pub fn dual_weight(&self, lambda: &Weight) -> Result<Weight> {
        Ok(self.w0_apply(lambda)?.negate())
    }

    /// Stabiliser subdiagram data of a dominant weight: the parabolic
    /// W_lambda is generated by the reflections at nodes where the weight
    /// vanishes.
    pub fn stabilizer_subdiagram(&self, lambda: &Weight) -> Result<Subdiagram> {
        if lambda.ambient() != self.stype() {
            return Err(Error::AmbientMismatch {
                expected: self.stype().to_string(),
                got: lambda.ambient().to_string(),
            });
        }
        if !lambda.is_dominant() {
            return Err(Error::NotDominant(lambda.to_string()));
        }
        let nodes: Vec<usize> = (0..self.rank()).filter(|&i| lambda.coord(i) == 0).collect();
        Ok(classify_subdiagram(
            self.stype().cartan_rows().as_slice(),
            &nodes,
        ))
    }

    /// Semisimple type of the stabiliser subdiagram of a dominant weight.
    pub fn stabilizer_subtype(&self, lambda: &Weight) -> Result<SemisimpleType> {
        Ok(self.stabilizer_subdiagram(lambda)?.stype)
    }

    /// Orbit size by the index formula |W| / |W_lambda|, with both orders
    /// given by products of reflection-group degrees.
    pub fn orbit_size_by_index(&self, lambda: &Weight) -> Result<BigUint> {
        let sub = self.stabilizer_subtype(lambda)?;
        let sub_rs = RootSystem::new(sub);
        let full = self.weyl_degrees().product();
        let stab = sub_rs.weyl_degrees().product();
        let q = &full / &stab;
        assert!(
            &q * &stab == full,
            "stabiliser order divides group order"
        );
        Ok(q)
    }
}
