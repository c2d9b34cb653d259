//! String data for `B(inf)` along an iterated Kashiwara embedding
//!
//! An element is stored as `x = (x_1, x_2, ...)`, standing for the tensor
//! product `... (x) b_{i_2}(-x_2) (x) b_{i_1}(-x_1)` of elementary crystals.
//! Position 1 is the rightmost factor. The colors `i_1, i_2, ...` come from a
//! [`ModelSequence`]: a finite head followed by the cyclic tail `1, 2, ..., n`.
//!
//! Tensor convention: `f_i` acts on the left factor iff `phi(left) > eps(right)`,
//! `e_i` acts on the left factor iff `phi(left) >= eps(right)`. Unrolled over
//! the whole product this gives, for the positions `k` of color `i`,
//!
//! ```text
//! sigma_k = x_k + sum_{j > k} a_{i, i_j} x_j
//! eps_i   = max_k sigma_k
//! ```
//!
//! with `f_i` incrementing the smallest maximizing position and `e_i`
//! decrementing the largest one.

use serde::{Deserialize, Serialize, Serializer};

use crate::cartan::{CartanData, RootVector};
use crate::error::Error;

/// The color sequence of an embedding: `head` then `1, 2, ..., n` repeated.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModelSequence {
    head: Vec<usize>,
    rank: usize,
}

impl ModelSequence {
    /// The reference model: empty head.
    pub fn reference(rank: usize) -> Self {
        ModelSequence { head: Vec::new(), rank }
    }

    pub fn with_head(rank: usize, head: Vec<usize>) -> Self {
        assert!(head.iter().all(|&i| i < rank), "model head index out of range");
        ModelSequence { head, rank }
    }

    pub fn head(&self) -> &[usize] {
        &self.head
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_reference(&self) -> bool {
        self.head.is_empty()
    }

    /// Color of the 0-based position `p`.
    #[inline]
    pub fn color(&self, p: usize) -> usize {
        match self.head.get(p) {
            Some(&i) => i,
            None => (p - self.head.len()) % self.rank,
        }
    }
}

/// Result of scanning one color over a truncated product.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Signature {
    pub eps: i64,
    /// Smallest maximizing position (where `f_i` acts).
    pub first: usize,
    /// Largest maximizing position (where `e_i` acts). Only meaningful
    /// when `eps > 0`; otherwise it depends on the window length.
    pub last: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StringData {
    model: ModelSequence,
    entries: Vec<i64>,
}

impl StringData {
    /// The highest element `u_inf` in the given model.
    pub fn highest(model: ModelSequence) -> Self {
        StringData { model, entries: Vec::new() }
    }

    pub fn new(model: ModelSequence, mut entries: Vec<i64>) -> Result<Self, Error> {
        if entries.iter().any(|&x| x < 0) {
            return Err(Error::NegativeEntry);
        }
        while entries.last() == Some(&0) {
            entries.pop();
        }
        Ok(StringData { model, entries })
    }

    pub fn model(&self) -> &ModelSequence {
        &self.model
    }

    /// Entries with trailing zeros trimmed.
    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    /// Entry at the 0-based position `p`.
    #[inline]
    pub fn entry(&self, p: usize) -> i64 {
        self.entries.get(p).copied().unwrap_or(0)
    }

    pub fn support(&self) -> usize {
        self.entries.len()
    }

    pub fn is_highest(&self) -> bool {
        self.entries.is_empty()
    }

    /// Number of positions on which every color statistic is exact.
    pub fn truncation_length(&self) -> usize {
        self.support().max(self.model.head.len()) + self.model.rank
    }

    /// `-sum_k x_k alpha_{i_k}`.
    pub fn weight(&self) -> RootVector {
        let mut wt = RootVector::zero(self.model.rank);
        for (p, &x) in self.entries.iter().enumerate() {
            wt.add_simple(self.model.color(p), -x);
        }
        wt
    }

    /// Scans color `i` over the first `len` positions. `len` must be at
    /// least [`truncation_length`](Self::truncation_length).
    pub fn signature(&self, cartan: &CartanData, i: usize, len: usize) -> Signature {
        debug_assert_eq!(cartan.rank(), self.model.rank);
        debug_assert!(len >= self.truncation_length());
        let row = &cartan.gcm()[i];
        let mut suffix = 0i64;
        let mut best: Option<Signature> = None;
        for p in (0..len).rev() {
            let c = self.model.color(p);
            let x = self.entry(p);
            if c == i {
                let s = x + suffix;
                best = Some(match best {
                    Some(sig) if s < sig.eps => sig,
                    Some(sig) if s == sig.eps => Signature { first: p, ..sig },
                    _ => Signature { eps: s, first: p, last: p },
                });
            }
            suffix += row[c] * x;
        }
        best.expect("truncation window contains every color")
    }

    fn sig(&self, cartan: &CartanData, i: usize) -> Signature {
        self.signature(cartan, i, self.truncation_length())
    }

    pub fn eps(&self, cartan: &CartanData, i: usize) -> i64 {
        self.sig(cartan, i).eps
    }

    pub fn phi(&self, cartan: &CartanData, i: usize) -> i64 {
        self.eps(cartan, i) + cartan.pair_root(i, &self.weight())
    }

    pub fn apply_f(&self, cartan: &CartanData, i: usize) -> StringData {
        self.apply_f_with(cartan, i, self.truncation_length())
    }

    pub fn apply_e(&self, cartan: &CartanData, i: usize) -> Option<StringData> {
        self.apply_e_with(cartan, i, self.truncation_length())
    }

    /// `f_i` computed on an explicit window of `len` positions.
    pub fn apply_f_with(&self, cartan: &CartanData, i: usize, len: usize) -> StringData {
        let p = self.signature(cartan, i, len).first;
        self.bumped(p, 1)
    }

    /// `e_i` computed on an explicit window of `len` positions.
    pub fn apply_e_with(&self, cartan: &CartanData, i: usize, len: usize) -> Option<StringData> {
        let sig = self.signature(cartan, i, len);
        (sig.eps > 0).then(|| self.bumped(sig.last, -1))
    }

    /// Adds `delta` to the entry at position `p`.
    pub(crate) fn bumped(&self, p: usize, delta: i64) -> StringData {
        let mut entries = self.entries.clone();
        if entries.len() <= p {
            entries.resize(p + 1, 0);
        }
        entries[p] += delta;
        assert!(entries[p] >= 0, "string data entry would become negative");
        while entries.last() == Some(&0) {
            entries.pop();
        }
        StringData { model: self.model.clone(), entries }
    }

    /// Applies a lowering word `f_{j_1} ... f_{j_m}` (rightmost letter first)
    /// to this element.
    pub fn lowered(&self, cartan: &CartanData, word: &[usize]) -> StringData {
        word.iter().rev().fold(self.clone(), |x, &j| x.apply_f(cartan, j))
    }
}

#[derive(Serialize, Deserialize)]
struct StringDataJson {
    model_head: Vec<usize>,
    entries: Vec<i64>,
}

impl Serialize for StringData {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        StringDataJson {
            model_head: self.model.head.iter().map(|i| i + 1).collect(),
            entries: self.entries.clone(),
        }
        .serialize(s)
    }
}

/// Deserializes into a model of the given rank.
pub fn string_data_from_json(text: &str, rank: usize) -> Result<StringData, Error> {
    let raw: StringDataJson = serde_json::from_str(text)
        .map_err(|e| Error::Parse(format!("string data: {e}")))?;
    let head = raw
        .model_head
        .iter()
        .map(|&i| {
            if i >= 1 && i <= rank {
                Ok(i - 1)
            } else {
                Err(Error::IndexOutOfRange { index: i as i64, rank })
            }
        })
        .collect::<Result<Vec<_>, _>>()?;
    StringData::new(ModelSequence::with_head(rank, head), raw.entries)
}
