//! The reflection recursion along a reduced word.
//!
//! Given `b (x) t_lambda` in `B(lambda)` and a reduced word `(i_1, ..., i_l)`,
//! the recursion lowers maximally along the word,
//!
//! ```text
//! b_0 = b,   c_k = phi_{i_k}(b_{k-1} (x) t_lambda),   b_k = f_{i_k}^{c_k} b_{k-1},
//! d_k = <alpha_{i_k}^vee, s_{i_{k-1}} ... s_{i_1} lambda>,
//! ```
//!
//! and compares the two routes
//!
//! ```text
//! sigma_hat_{i_l} ... sigma_hat_{i_1} b  ==  e*_{i_l}^{d_l} ... e*_{i_1}^{d_1} b_l.
//! ```
//!
//! From a trace we also read off the vertex chain
//! `s_{i_1} ... s_{i_k} wt(b_k (x) t_lambda)` and the integers `n_k`, once from
//! the closed formula `n_k = -c_k - <alpha_{i_k}^vee, wt(b_k (x) t_lambda)>`
//! and once by solving the triangular system on the inversion roots.

use serde::Serialize;

use crate::binf::BInfElement;
use crate::cartan::{RootVector, Weight, Word};
use crate::error::Error;
use crate::highest_weight::HighestWeightCrystal;

/// Why the starred descent could not be carried out at step `k` (1-based).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ApplicabilityFailure {
    pub k: usize,
    pub needed: i64,
    pub available: i64,
}

#[derive(Clone, Debug)]
pub struct TheoremTrace {
    pub word: Word,
    pub lambda: Weight,
    /// `b_0, ..., b_l`.
    pub b_seq: Vec<BInfElement>,
    pub c_seq: Vec<i64>,
    pub d_seq: Vec<i64>,
    /// `sigma_hat_{i_k} ... sigma_hat_{i_1} b` for `k = 0..=l`.
    pub cascade: Vec<BInfElement>,
    /// Right-hand side; `Err` when some `e*` power was not applicable.
    pub rhs: Result<BInfElement, ApplicabilityFailure>,
}

impl TheoremTrace {
    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn b(&self) -> &BInfElement {
        &self.b_seq[0]
    }

    pub fn lhs(&self) -> &BInfElement {
        self.cascade.last().unwrap()
    }

    /// Whether both sides of the reflection identity agree.
    pub fn verify_eq1(&self) -> bool {
        matches!(&self.rhs, Ok(rhs) if rhs == self.lhs())
    }

    /// `wt(b_k (x) t_lambda)`.
    pub fn lambda_weight(&self, k: usize) -> Weight {
        self.lambda.shifted(&self.b_seq[k].weight())
    }
}

/// A vertex `k` (0-based) where the two expressions for `mu_k` disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexMismatch {
    pub k: usize,
    pub from_crystal: Weight,
    pub from_reflections: Weight,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LusztigMismatch {
    /// The difference vector is not an integer multiple of `beta_k`.
    Inconsistent { k: usize, difference: RootVector, beta: RootVector },
    /// Formula and system give different integers at step `k` (1-based).
    Disagree { k: usize, formula: i64, system: i64 },
}

impl<'a> HighestWeightCrystal<'a> {
    /// `e*_{i_l}^{d_l} ... e*_{i_1}^{d_1} start`, innermost first.
    pub fn starred_descent(
        &self,
        word: &Word,
        d_seq: &[i64],
        start: &BInfElement,
    ) -> Result<BInfElement, ApplicabilityFailure> {
        let binf = self.binf();
        let mut cur = start.clone();
        for (k, (&i, &d)) in word.letters().iter().zip(d_seq).enumerate() {
            let available = binf.eps_star(i, &cur);
            if available < d {
                return Err(ApplicabilityFailure { k: k + 1, needed: d, available });
            }
            cur = binf.e_star(i, &cur, d).expect("checked eps* >= d");
        }
        Ok(cur)
    }

    /// `sigma_hat_{i_k} ... sigma_hat_{i_1} b` for every prefix.
    pub fn saito_cascade(&self, word: &Word, b: &BInfElement) -> Vec<BInfElement> {
        let binf = self.binf();
        let mut out = Vec::with_capacity(word.len() + 1);
        out.push(b.clone());
        for &i in word.letters() {
            let next = binf.saito_hat(i, out.last().unwrap());
            out.push(next);
        }
        out
    }

    pub fn run_recursion(&self, b: &BInfElement, word: &Word) -> Result<TheoremTrace, Error> {
        let cartan = self.cartan();
        if !cartan.is_reduced(word) {
            return Err(Error::NotReduced(word.to_string()));
        }
        let mut cur = self.element(b.clone())?;
        let mut b_seq = vec![b.clone()];
        let mut c_seq = Vec::with_capacity(word.len());
        for &i in word.letters() {
            let chain = self.f_string(i, &cur);
            let counted = chain.len() as i64 - 1;
            let formula = self.phi_formula(i, &cur);
            if counted != formula {
                return Err(Error::PhiInconsistency { index: i, counted, formula });
            }
            c_seq.push(counted);
            cur = chain.into_iter().last().unwrap();
            b_seq.push(cur.b().clone());
        }
        let d_seq = cartan.d_sequence(word, self.lambda())?;
        let cascade = self.saito_cascade(word, b);
        let rhs = self.starred_descent(word, &d_seq, b_seq.last().unwrap());
        Ok(TheoremTrace {
            word: word.clone(),
            lambda: self.lambda().clone(),
            b_seq,
            c_seq,
            d_seq,
            cascade,
            rhs,
        })
    }

    /// `mu_k = s_{i_1} ... s_{i_k} wt(b_k (x) t_lambda)` for `k = 0..=l`, each
    /// checked against `s_{i_1} ... s_{i_k} wt(cascade_k) + lambda`.
    pub fn vertices(&self, trace: &TheoremTrace) -> Result<Vec<Weight>, VertexMismatch> {
        let cartan = self.cartan();
        let letters = trace.word.letters();
        (0..=trace.len())
            .map(|k| {
                let prefix = &letters[..k];
                let from_crystal = cartan.act_weight(prefix, &trace.lambda_weight(k));
                let moved = cartan.act_root(prefix, &trace.cascade[k].weight());
                let from_reflections = trace.lambda.shifted(&moved);
                if from_crystal == from_reflections {
                    Ok(from_crystal)
                } else {
                    Err(VertexMismatch { k, from_crystal, from_reflections })
                }
            })
            .collect()
    }

    /// `n_k = -c_k - <alpha_{i_k}^vee, wt(b_k (x) t_lambda)>`.
    pub fn lusztig_formula(&self, trace: &TheoremTrace) -> Vec<i64> {
        let cartan = self.cartan();
        trace
            .word
            .letters()
            .iter()
            .enumerate()
            .map(|(k, &i)| -trace.c_seq[k] - cartan.pair(i, &trace.lambda_weight(k + 1)))
            .collect()
    }

    /// Solves `s_{i_1} ... s_{i_k} wt(cascade_k) - wt(b) = sum_{p <= k} n_p beta_p`
    /// by consecutive differences.
    pub fn lusztig_system(&self, trace: &TheoremTrace) -> Result<Vec<i64>, LusztigMismatch> {
        let cartan = self.cartan();
        let letters = trace.word.letters();
        let betas = cartan
            .inversion_roots(&trace.word)
            .expect("trace words are reduced");
        let moved: Vec<RootVector> = (0..=trace.len())
            .map(|k| cartan.act_root(&letters[..k], &trace.cascade[k].weight()))
            .collect();
        (1..=trace.len())
            .map(|k| {
                let difference = &moved[k] - &moved[k - 1];
                let beta = &betas[k - 1];
                let (p, &pivot) = beta
                    .0
                    .iter()
                    .enumerate()
                    .find(|(_, &c)| c != 0)
                    .expect("inversion roots are nonzero");
                let inconsistent = || LusztigMismatch::Inconsistent {
                    k,
                    difference: difference.clone(),
                    beta: beta.clone(),
                };
                if difference.0[p] % pivot != 0 {
                    return Err(inconsistent());
                }
                let n = difference.0[p] / pivot;
                if beta.scaled(n) != difference {
                    return Err(inconsistent());
                }
                Ok(n)
            })
            .collect()
    }

    /// The `n_k`, required to agree between the formula and the system.
    pub fn lusztig_params(&self, trace: &TheoremTrace) -> Result<Vec<i64>, LusztigMismatch> {
        let formula = self.lusztig_formula(trace);
        let system = self.lusztig_system(trace)?;
        for (k, (&f, &s)) in formula.iter().zip(&system).enumerate() {
            if f != s {
                return Err(LusztigMismatch::Disagree { k: k + 1, formula: f, system: s });
            }
        }
        Ok(formula)
    }
}
