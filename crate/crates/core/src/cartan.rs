//! Symmetrizable generalized Cartan matrices, root and weight lattices,
//! the Weyl group action and reduced words.
//!
//! Simple roots and coroots are indexed from `0` internally. Everything that
//! crosses a serialization boundary (JSON, CLI) uses 1-based indices.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Root systems with more real roots than this are treated as infinite.
const FINITE_ROOT_CAP: usize = 20_000;

/// A vector in the root lattice, in the basis of simple roots.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RootVector(pub Vec<i64>);

impl RootVector {
    pub fn zero(rank: usize) -> Self {
        RootVector(vec![0; rank])
    }

    pub fn simple(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        RootVector(v)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn is_nonpositive(&self) -> bool {
        self.0.iter().all(|&c| c <= 0)
    }

    /// Sum of coordinates.
    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn scaled(&self, k: i64) -> Self {
        RootVector(self.0.iter().map(|&c| c * k).collect())
    }

    /// `self + k * alpha_i`
    pub fn add_simple(&mut self, i: usize, k: i64) {
        self.0[i] += k;
    }
}

impl Add for &RootVector {
    type Output = RootVector;
    fn add(self, rhs: &RootVector) -> RootVector {
        assert_eq!(self.rank(), rhs.rank(), "root vectors of different rank");
        RootVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &RootVector {
    type Output = RootVector;
    fn sub(self, rhs: &RootVector) -> RootVector {
        assert_eq!(self.rank(), rhs.rank(), "root vectors of different rank");
        RootVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &RootVector {
    type Output = RootVector;
    fn neg(self) -> RootVector {
        RootVector(self.0.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, "{}", if c > 0 { " + " } else { " - " })?;
            } else if c < 0 {
                write!(f, "-")?;
            }
            first = false;
            match c.abs() {
                1 => write!(f, "a{}", i + 1)?,
                k => write!(f, "{}a{}", k, i + 1)?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// A weight `lambda + beta`: a reference dominant weight given by its
/// coroot pairings, shifted by an exact root-lattice vector.
///
/// The root part is kept separately because the Cartan matrix of an affine
/// type is singular, so pairings alone do not determine it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Weight {
    pub dominant: Vec<i64>,
    pub root: RootVector,
}

impl Weight {
    /// The dominant weight with the given fundamental coordinates.
    pub fn dominant(coords: Vec<i64>) -> Self {
        let rank = coords.len();
        Weight {
            dominant: coords,
            root: RootVector::zero(rank),
        }
    }

    pub fn new(dominant: Vec<i64>, root: RootVector) -> Self {
        assert_eq!(dominant.len(), root.rank(), "weight parts of different rank");
        Weight { dominant, root }
    }

    pub fn rank(&self) -> usize {
        self.dominant.len()
    }

    /// True when the weight is a plain dominant reference weight: zero root
    /// part and nonnegative fundamental coordinates.
    pub fn is_dominant_reference(&self) -> bool {
        self.root.is_zero() && self.dominant.iter().all(|&c| c >= 0)
    }

    pub fn shifted(&self, beta: &RootVector) -> Self {
        Weight {
            dominant: self.dominant.clone(),
            root: &self.root + beta,
        }
    }
}

/// A word in the simple reflections.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<usize>);

impl Word {
    pub fn new(letters: Vec<usize>) -> Self {
        Word(letters)
    }

    /// Parses 1-based letters, checking them against the rank.
    pub fn from_one_based(letters: &[i64], rank: usize) -> Result<Self, Error> {
        letters
            .iter()
            .map(|&l| {
                if l >= 1 && (l as usize) <= rank {
                    Ok(l as usize - 1)
                } else {
                    Err(Error::IndexOutOfRange { index: l, rank })
                }
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Word)
    }

    pub fn to_one_based(&self) -> Vec<usize> {
        self.0.iter().map(|&i| i + 1).collect()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn prefix(&self, k: usize) -> Word {
        Word(self.0[..k].to_vec())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, i) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", i + 1)?;
        }
        write!(f, ")")
    }
}

/// A symmetrizable generalized Cartan matrix with `gcm[i][j] = <alpha_i^vee, alpha_j>`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanData {
    gcm: Vec<Vec<i64>>,
    symmetrizer: Vec<i64>,
}

#[derive(Deserialize)]
struct CartanJson {
    gcm: Vec<Vec<i64>>,
}

impl CartanData {
    pub fn new(gcm: Vec<Vec<i64>>) -> Result<Self, Error> {
        let n = gcm.len();
        if n == 0 {
            return Err(Error::InvalidCartan("empty matrix".into()));
        }
        if gcm.iter().any(|row| row.len() != n) {
            return Err(Error::InvalidCartan("matrix is not square".into()));
        }
        for i in 0..n {
            if gcm[i][i] != 2 {
                return Err(Error::InvalidCartan(format!("diagonal entry a_{0}{0} is not 2", i + 1)));
            }
            for j in 0..n {
                if i == j {
                    continue;
                }
                if gcm[i][j] > 0 {
                    return Err(Error::InvalidCartan(format!(
                        "off-diagonal entry a_{}{} is positive",
                        i + 1,
                        j + 1
                    )));
                }
                if (gcm[i][j] == 0) != (gcm[j][i] == 0) {
                    return Err(Error::InvalidCartan(format!(
                        "zero pattern is not symmetric at ({}, {})",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        let symmetrizer = symmetrize(&gcm)?;
        Ok(CartanData { gcm, symmetrizer })
    }

    /// Named presets: `A1`, `A2`, `A3`, `B2`, `G2` and the affine `A1~`.
    pub fn preset(name: &str) -> Result<Self, Error> {
        let gcm = match name {
            "A1" => vec![vec![2]],
            "A2" => vec![vec![2, -1], vec![-1, 2]],
            "A3" => vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]],
            "B2" => vec![vec![2, -2], vec![-1, 2]],
            "G2" => vec![vec![2, -1], vec![-3, 2]],
            "A1~" => vec![vec![2, -2], vec![-2, 2]],
            _ => return Err(Error::UnknownPreset(name.to_string())),
        };
        CartanData::new(gcm)
    }

    /// Parses `{"gcm": [[2,-1],[-1,2]]}`.
    pub fn from_json(text: &str) -> Result<Self, Error> {
        let parsed: CartanJson =
            serde_json::from_str(text).map_err(|e| Error::InvalidCartan(e.to_string()))?;
        CartanData::new(parsed.gcm)
    }

    pub fn rank(&self) -> usize {
        self.gcm.len()
    }

    pub fn gcm(&self) -> &[Vec<i64>] {
        &self.gcm
    }

    #[inline]
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.gcm[i][j]
    }

    /// Positive integers `d_i` with `d_i a_ij = d_j a_ji`, coprime on each
    /// connected component of the Dynkin diagram.
    pub fn symmetrizer(&self) -> &[i64] {
        &self.symmetrizer
    }

    fn check_index(&self, i: usize) {
        assert!(i < self.rank(), "simple root index {} out of range for rank {}", i, self.rank());
    }

    /// `<alpha_i^vee, beta>` for a root-lattice vector.
    pub fn pair_root(&self, i: usize, beta: &RootVector) -> i64 {
        self.check_index(i);
        self.gcm[i].iter().zip(&beta.0).map(|(a, c)| a * c).sum()
    }

    /// `<alpha_i^vee, mu>`.
    pub fn pair(&self, i: usize, mu: &Weight) -> i64 {
        mu.dominant[i] + self.pair_root(i, &mu.root)
    }

    /// `s_i beta = beta - <alpha_i^vee, beta> alpha_i`.
    pub fn reflect_root(&self, i: usize, beta: &RootVector) -> RootVector {
        let mut out = beta.clone();
        out.add_simple(i, -self.pair_root(i, beta));
        out
    }

    /// `s_i mu = mu - <alpha_i^vee, mu> alpha_i`; the dominant reference part is untouched.
    pub fn reflect_weight(&self, i: usize, mu: &Weight) -> Weight {
        let mut out = mu.clone();
        out.root.add_simple(i, -self.pair(i, mu));
        out
    }

    /// `s_{i_1} ... s_{i_k} beta` for the word `(i_1, ..., i_k)`.
    pub fn act_root(&self, word: &[usize], beta: &RootVector) -> RootVector {
        word.iter().rev().fold(beta.clone(), |acc, &i| self.reflect_root(i, &acc))
    }

    /// `s_{i_1} ... s_{i_k} mu` for the word `(i_1, ..., i_k)`.
    pub fn act_weight(&self, word: &[usize], mu: &Weight) -> Weight {
        word.iter().rev().fold(mu.clone(), |acc, &i| self.reflect_weight(i, &acc))
    }

    /// `beta_k = s_{i_1} ... s_{i_{k-1}} alpha_{i_k}` for every k, without
    /// checking positivity.
    fn raw_inversion_roots(&self, word: &Word) -> Vec<RootVector> {
        let n = self.rank();
        (0..word.len())
            .map(|k| {
                let i = word.0[k];
                self.check_index(i);
                self.act_root(&word.0[..k], &RootVector::simple(n, i))
            })
            .collect()
    }

    /// A word is reduced iff all of its inversion roots are positive.
    pub fn is_reduced(&self, word: &Word) -> bool {
        self.raw_inversion_roots(word).iter().all(RootVector::is_nonnegative)
    }

    pub fn inversion_roots(&self, word: &Word) -> Result<Vec<RootVector>, Error> {
        let roots = self.raw_inversion_roots(word);
        if roots.iter().all(RootVector::is_nonnegative) {
            Ok(roots)
        } else {
            Err(Error::NotReduced(word.to_string()))
        }
    }

    /// `d_k = <alpha_{i_k}^vee, s_{i_{k-1}} ... s_{i_1} lambda>`.
    pub fn d_sequence(&self, word: &Word, lambda: &Weight) -> Result<Vec<i64>, Error> {
        if !lambda.is_dominant_reference() {
            return Err(Error::NotDominant(lambda.dominant.clone()));
        }
        if !self.is_reduced(word) {
            return Err(Error::NotReduced(word.to_string()));
        }
        let mut mu = lambda.clone();
        let mut out = Vec::with_capacity(word.len());
        for &i in word.letters() {
            out.push(self.pair(i, &mu));
            mu = self.reflect_weight(i, &mu);
        }
        Ok(out)
    }

    /// All nonempty reduced words of length at most `max_len`, in
    /// lexicographic order (shorter words first).
    pub fn reduced_words(&self, max_len: usize) -> Vec<Word> {
        let n = self.rank();
        let mut by_len: Vec<Vec<Word>> = vec![vec![Word::default()]];
        for len in 1..=max_len {
            let mut next = Vec::new();
            for w in &by_len[len - 1] {
                for j in 0..n {
                    // w s_j is reduced iff w alpha_j is positive.
                    if self.act_root(w.letters(), &RootVector::simple(n, j)).is_nonnegative() {
                        let mut letters = w.0.clone();
                        letters.push(j);
                        next.push(Word(letters));
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            by_len.push(next);
        }
        let mut out: Vec<Word> = by_len.into_iter().skip(1).flatten().collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }

    /// Number of positive real roots, or `None` if the root system is
    /// infinite (not of finite type).
    pub fn positive_root_count(&self) -> Option<usize> {
        let n = self.rank();
        let mut seen: HashSet<RootVector> = HashSet::new();
        let mut queue: VecDeque<RootVector> = VecDeque::new();
        for i in 0..n {
            let a = RootVector::simple(n, i);
            seen.insert(a.clone());
            queue.push_back(a);
        }
        while let Some(beta) = queue.pop_front() {
            for i in 0..n {
                let r = self.reflect_root(i, &beta);
                if seen.insert(r.clone()) {
                    if seen.len() > FINITE_ROOT_CAP {
                        return None;
                    }
                    queue.push_back(r);
                }
            }
        }
        Some(seen.iter().filter(|r| r.is_nonnegative()).count())
    }

    pub fn is_finite_type(&self) -> bool {
        self.positive_root_count().is_some()
    }

    /// True for a reduced word of the longest element (finite type only).
    pub fn is_longest_word(&self, word: &Word) -> bool {
        match self.positive_root_count() {
            Some(count) => word.len() == count && self.is_reduced(word),
            None => false,
        }
    }
}

fn symmetrize(gcm: &[Vec<i64>]) -> Result<Vec<i64>, Error> {
    let n = gcm.len();
    let mut d: Vec<Option<Ratio<i64>>> = vec![None; n];
    let mut out = vec![0i64; n];
    for start in 0..n {
        if d[start].is_some() {
            continue;
        }
        d[start] = Some(Ratio::from_integer(1));
        let mut component = vec![start];
        let mut queue = VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            let di = d[i].unwrap();
            for j in 0..n {
                if j == i || gcm[i][j] == 0 {
                    continue;
                }
                // d_i a_ij = d_j a_ji
                let dj = di * Ratio::new(gcm[i][j], gcm[j][i]);
                match d[j] {
                    None => {
                        d[j] = Some(dj);
                        component.push(j);
                        queue.push_back(j);
                    }
                    Some(existing) if existing != dj => {
                        return Err(Error::InvalidCartan("matrix is not symmetrizable".into()));
                    }
                    Some(_) => {}
                }
            }
        }
        let lcm = component
            .iter()
            .fold(1i64, |acc, &i| num_integer_lcm(acc, *d[i].unwrap().denom()));
        let scaled: Vec<i64> = component
            .iter()
            .map(|&i| (d[i].unwrap() * lcm).to_integer())
            .collect();
        let g = scaled.iter().fold(0i64, |acc, &x| gcd(acc, x));
        for (&i, &v) in component.iter().zip(&scaled) {
            out[i] = v / g;
        }
    }
    Ok(out)
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn num_integer_lcm(a: i64, b: i64) -> i64 {
    a / gcd(a, b) * b
}
