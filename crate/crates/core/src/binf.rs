//! Elements of `B(inf)`, starred operators and Saito reflections.
//!
//! An element is identified by its string data in the reference model (the
//! cyclic sequence `1, 2, ..., n, 1, 2, ...`). Alongside it we keep a
//! lowering word, which is what lets us move the element into another model:
//! the starred operators are read off the first entry of the model whose head
//! is a single letter `i`, since that entry is `eps_i(b*)`.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;
use std::hash::{Hash, Hasher};

use serde::{Serialize, Serializer};

use crate::cartan::{CartanData, RootVector};
use crate::error::Error;
use crate::string_model::{ModelSequence, StringData};

#[derive(Clone, Debug)]
pub struct BInfElement {
    canonical: StringData,
    /// `b = f_{j_1} ... f_{j_m} u_inf`, greedy raising order.
    word: Vec<usize>,
}

impl BInfElement {
    pub fn canonical(&self) -> &StringData {
        &self.canonical
    }

    /// Lowering word `(j_1, ..., j_m)` with `b = f_{j_1} ... f_{j_m} u_inf`.
    pub fn lowering_word(&self) -> &[usize] {
        &self.word
    }

    pub fn weight(&self) -> RootVector {
        self.canonical.weight()
    }

    /// Height of `-wt(b)`, i.e. the length of any lowering word.
    pub fn depth(&self) -> usize {
        self.word.len()
    }

    pub fn is_highest(&self) -> bool {
        self.canonical.is_highest()
    }

    pub fn to_verbose_json(&self) -> serde_json::Value {
        serde_json::json!({
            "word": self.word.iter().map(|i| i + 1).collect::<Vec<_>>(),
            "canonical": self.canonical,
        })
    }
}

impl PartialEq for BInfElement {
    fn eq(&self, other: &Self) -> bool {
        self.canonical == other.canonical
    }
}

impl Eq for BInfElement {}

impl Hash for BInfElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.canonical.hash(state)
    }
}

impl Ord for BInfElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.word
            .len()
            .cmp(&other.word.len())
            .then_with(|| self.canonical.entries().cmp(other.canonical.entries()))
    }
}

impl PartialOrd for BInfElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Serialize for BInfElement {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            word: Vec<usize>,
        }
        Repr { word: self.word.iter().map(|i| i + 1).collect() }.serialize(s)
    }
}

impl fmt::Display for BInfElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return write!(f, "u");
        }
        for j in &self.word {
            write!(f, "f{}", j + 1)?;
        }
        write!(f, "u")
    }
}

/// Crystal operations on `B(inf)` for a fixed Cartan datum.
#[derive(Clone, Copy, Debug)]
pub struct BInfinity<'a> {
    cartan: &'a CartanData,
}

impl<'a> BInfinity<'a> {
    pub fn new(cartan: &'a CartanData) -> Self {
        BInfinity { cartan }
    }

    pub fn cartan(&self) -> &'a CartanData {
        self.cartan
    }

    fn reference(&self) -> ModelSequence {
        ModelSequence::reference(self.cartan.rank())
    }

    pub fn highest(&self) -> BInfElement {
        BInfElement {
            canonical: StringData::highest(self.reference()),
            word: Vec::new(),
        }
    }

    /// `f_{j_1} ... f_{j_m} u_inf` for 0-based letters.
    pub fn from_word(&self, word: &[usize]) -> BInfElement {
        let x = StringData::highest(self.reference()).lowered(self.cartan, word);
        self.from_reference(x)
    }

    /// Same as [`from_word`](Self::from_word) for 1-based letters.
    pub fn from_one_based(&self, word: &[i64]) -> Result<BInfElement, Error> {
        let rank = self.cartan.rank();
        let letters = word
            .iter()
            .map(|&l| {
                if l >= 1 && l as usize <= rank {
                    Ok(l as usize - 1)
                } else {
                    Err(Error::IndexOutOfRange { index: l, rank })
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(self.from_word(&letters))
    }

    /// Wraps reference-model string data, checking that it raises to `u_inf`.
    pub fn from_canonical(&self, x: StringData) -> Result<BInfElement, Error> {
        if x.model() != &self.reference() {
            return Err(Error::ModelMismatch);
        }
        let word = expand(&self.raise_string(&x)?);
        Ok(BInfElement { canonical: x, word })
    }

    fn from_reference(&self, x: StringData) -> BInfElement {
        self.from_canonical(x).expect("B(inf) element always raises to u_inf")
    }

    /// Greedy raising in any model: repeatedly take the smallest `j` with
    /// `eps_j > 0` and apply `e_j^{eps_j}`. Returns the `(j, count)` steps in
    /// the order they were applied.
    pub fn raise_string(&self, x: &StringData) -> Result<Vec<(usize, i64)>, Error> {
        let mut steps = Vec::new();
        let mut cur = x.clone();
        while !cur.is_highest() {
            let found = (0..self.cartan.rank())
                .map(|j| (j, cur.eps(self.cartan, j)))
                .find(|&(_, e)| e > 0);
            let Some((j, count)) = found else {
                return Err(Error::StuckElement);
            };
            for _ in 0..count {
                let len = cur.truncation_length();
                let sig = cur.signature(self.cartan, j, len);
                // outside the image the maximizing entry can already be zero
                if cur.entry(sig.last) == 0 {
                    return Err(Error::StuckElement);
                }
                cur = cur.apply_e_with(self.cartan, j, len).expect("eps_j > 0");
            }
            steps.push((j, count));
        }
        Ok(steps)
    }

    pub fn raise_to_highest(&self, b: &BInfElement) -> Vec<(usize, i64)> {
        self.raise_string(&b.canonical).expect("B(inf) element always raises to u_inf")
    }

    pub fn eps(&self, i: usize, b: &BInfElement) -> i64 {
        b.canonical.eps(self.cartan, i)
    }

    pub fn phi(&self, i: usize, b: &BInfElement) -> i64 {
        b.canonical.phi(self.cartan, i)
    }

    pub fn f(&self, i: usize, b: &BInfElement) -> BInfElement {
        self.from_reference(b.canonical.apply_f(self.cartan, i))
    }

    pub fn f_pow(&self, i: usize, b: &BInfElement, m: i64) -> BInfElement {
        let x = (0..m).fold(b.canonical.clone(), |x, _| x.apply_f(self.cartan, i));
        self.from_reference(x)
    }

    pub fn e(&self, i: usize, b: &BInfElement) -> Option<BInfElement> {
        b.canonical.apply_e(self.cartan, i).map(|x| self.from_reference(x))
    }

    /// `e_i^{max} b`.
    pub fn e_max(&self, i: usize, b: &BInfElement) -> BInfElement {
        let mut x = b.canonical.clone();
        while let Some(y) = x.apply_e(self.cartan, i) {
            x = y;
        }
        self.from_reference(x)
    }

    /// Replays the lowering word in the model with the given heads prepended.
    pub fn reembed_with(&self, b: &BInfElement, head: Vec<usize>) -> StringData {
        let model = ModelSequence::with_head(self.cartan.rank(), head);
        StringData::highest(model).lowered(self.cartan, &b.word)
    }

    /// String data of `b` in the model `(head, 1, 2, ..., n, 1, ...)`.
    pub fn reembed(&self, b: &BInfElement, head: usize) -> StringData {
        self.reembed_with(b, vec![head])
    }

    /// Moves string data from any model back to the reference one.
    fn from_model(&self, y: &StringData) -> BInfElement {
        let word = expand(&self.raise_string(y).expect("re-embedded data raises to u_inf"));
        self.from_word(&word)
    }

    /// `eps_i(b*)`.
    pub fn eps_star(&self, i: usize, b: &BInfElement) -> i64 {
        self.reembed(b, i).entry(0)
    }

    /// `phi_i(b*) = eps_i(b*) + <alpha_i^vee, wt(b)>`.
    pub fn phi_star(&self, i: usize, b: &BInfElement) -> i64 {
        self.eps_star(i, b) + self.cartan.pair_root(i, &b.weight())
    }

    /// `(e*_i)^m b`.
    pub fn e_star(&self, i: usize, b: &BInfElement, m: i64) -> Result<BInfElement, Error> {
        let y = self.reembed(b, i);
        let available = y.entry(0);
        if m > available || m < 0 {
            return Err(Error::StarredUnderflow { index: i, requested: m, available });
        }
        if m == 0 {
            return Ok(b.clone());
        }
        Ok(self.from_model(&y.bumped(0, -m)))
    }

    /// `(f*_i)^m b`.
    pub fn f_star(&self, i: usize, b: &BInfElement, m: i64) -> BInfElement {
        assert!(m >= 0, "negative power of f*");
        if m == 0 {
            return b.clone();
        }
        let y = self.reembed(b, i).bumped(0, m);
        self.from_model(&y)
    }

    /// `(e*_i)^{max} b`.
    pub fn e_star_max(&self, i: usize, b: &BInfElement) -> BInfElement {
        let m = self.eps_star(i, b);
        self.e_star(i, b, m).expect("m = eps*")
    }

    /// Saito's reflection `sigma_i(b) = f_i^{phi_i(b*)} (e*_i)^{max} b`,
    /// defined when `eps_i(b) = 0`.
    pub fn saito(&self, i: usize, b: &BInfElement) -> Result<BInfElement, Error> {
        let eps = self.eps(i, b);
        if eps != 0 {
            return Err(Error::SaitoDomain { index: i, eps });
        }
        let power = self.phi_star(i, b);
        assert!(power >= 0, "phi_i(b*) < 0 on the domain of sigma_i");
        let top = self.e_star_max(i, b);
        Ok(self.f_pow(i, &top, power))
    }

    /// `sigma_hat_i(b) = sigma_i(e_i^{max} b)`.
    pub fn saito_hat(&self, i: usize, b: &BInfElement) -> BInfElement {
        let top = self.e_max(i, b);
        self.saito(i, &top).expect("eps_i(e_i^max b) = 0")
    }

    /// All elements of depth `0..=max_depth`, grouped by depth and sorted.
    pub fn enumerate(&self, max_depth: usize) -> Vec<Vec<BInfElement>> {
        let mut levels = vec![vec![self.highest()]];
        for _ in 0..max_depth {
            let mut seen: HashSet<StringData> = HashSet::new();
            let mut next = Vec::new();
            for b in levels.last().unwrap() {
                for i in 0..self.cartan.rank() {
                    let x = b.canonical.apply_f(self.cartan, i);
                    if seen.insert(x.clone()) {
                        next.push(self.from_reference(x));
                    }
                }
            }
            next.sort();
            levels.push(next);
        }
        levels
    }
}

fn expand(steps: &[(usize, i64)]) -> Vec<usize> {
    steps
        .iter()
        .flat_map(|&(j, c)| std::iter::repeat(j).take(c as usize))
        .collect()
}
