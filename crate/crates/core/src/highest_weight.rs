//! The highest-weight crystal `B(lambda)` inside `B(inf) (x) T_lambda`.
//!
//! `b (x) t_lambda` lies in `B(lambda)` iff `eps_i(b*) <= <alpha_i^vee, lambda>`
//! for every `i`. Operators act on the `B(inf)` factor; a lowering step that
//! leaves the subcrystal returns `None`.

use std::collections::HashSet;

use serde::Serialize;

use crate::binf::{BInfElement, BInfinity};
use crate::cartan::{CartanData, Weight};
use crate::error::Error;

/// `b (x) t_lambda`, known to lie in `B(lambda)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LambdaElement {
    b: BInfElement,
}

impl LambdaElement {
    pub fn b(&self) -> &BInfElement {
        &self.b
    }

    pub fn into_b(self) -> BInfElement {
        self.b
    }
}

#[derive(Clone, Debug)]
pub struct HighestWeightCrystal<'a> {
    binf: BInfinity<'a>,
    lambda: Weight,
}

/// Result of a breadth-first closure of `B(lambda)`.
#[derive(Clone, Debug)]
pub struct Enumeration {
    /// Elements grouped by depth, each level sorted.
    pub levels: Vec<Vec<LambdaElement>>,
    /// True when the closure stabilized, i.e. this is all of `B(lambda)`.
    pub complete: bool,
}

impl Enumeration {
    pub fn len(&self) -> usize {
        self.levels.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = &LambdaElement> {
        self.levels.iter().flatten()
    }
}

#[derive(Serialize)]
pub struct EnumeratedLine {
    pub word: Vec<usize>,
    pub weight: WeightJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, serde::Deserialize)]
pub struct WeightJson {
    pub dominant: Vec<i64>,
    pub root: Vec<i64>,
}

impl From<&Weight> for WeightJson {
    fn from(w: &Weight) -> Self {
        WeightJson {
            dominant: w.dominant.clone(),
            root: w.root.0.clone(),
        }
    }
}

impl<'a> HighestWeightCrystal<'a> {
    pub fn new(cartan: &'a CartanData, lambda: Weight) -> Result<Self, Error> {
        if lambda.rank() != cartan.rank() {
            return Err(Error::RankMismatch { expected: cartan.rank(), got: lambda.rank() });
        }
        if !lambda.is_dominant_reference() {
            return Err(Error::NotDominant(lambda.dominant));
        }
        Ok(HighestWeightCrystal { binf: BInfinity::new(cartan), lambda })
    }

    pub fn binf(&self) -> &BInfinity<'a> {
        &self.binf
    }

    pub fn cartan(&self) -> &'a CartanData {
        self.binf.cartan()
    }

    pub fn lambda(&self) -> &Weight {
        &self.lambda
    }

    fn bound(&self, i: usize) -> i64 {
        self.lambda.dominant[i]
    }

    /// The first index violating membership, with its `eps*` value.
    pub fn membership_violation(&self, b: &BInfElement) -> Option<(usize, i64)> {
        (0..self.cartan().rank())
            .map(|i| (i, self.binf.eps_star(i, b)))
            .find(|&(i, e)| e > self.bound(i))
    }

    pub fn contains(&self, b: &BInfElement) -> bool {
        self.membership_violation(b).is_none()
    }

    pub fn element(&self, b: BInfElement) -> Result<LambdaElement, Error> {
        match self.membership_violation(&b) {
            Some((index, eps_star)) => Err(Error::NotMember {
                index,
                eps_star,
                bound: self.bound(index),
            }),
            None => Ok(LambdaElement { b }),
        }
    }

    pub fn highest(&self) -> LambdaElement {
        LambdaElement { b: self.binf.highest() }
    }

    /// `wt(b (x) t_lambda) = lambda + wt(b)`.
    pub fn weight(&self, x: &LambdaElement) -> Weight {
        self.lambda.shifted(&x.b.weight())
    }

    pub fn f(&self, i: usize, x: &LambdaElement) -> Option<LambdaElement> {
        let b = self.binf.f(i, &x.b);
        self.contains(&b).then_some(LambdaElement { b })
    }

    pub fn e(&self, i: usize, x: &LambdaElement) -> Option<LambdaElement> {
        let b = self.binf.e(i, &x.b)?;
        debug_assert!(self.contains(&b), "e_i left B(lambda)");
        self.contains(&b).then_some(LambdaElement { b })
    }

    pub fn eps(&self, i: usize, x: &LambdaElement) -> i64 {
        self.binf.eps(i, &x.b)
    }

    /// `phi_i(b (x) t_lambda) = phi_i(b) + <alpha_i^vee, lambda>`.
    pub fn phi_formula(&self, i: usize, x: &LambdaElement) -> i64 {
        self.binf.phi(i, &x.b) + self.bound(i)
    }

    /// The `f_i`-string below `x` inside `B(lambda)`, starting with `x`.
    pub fn f_string(&self, i: usize, x: &LambdaElement) -> Vec<LambdaElement> {
        let mut chain = vec![x.clone()];
        while let Some(next) = self.f(i, chain.last().unwrap()) {
            chain.push(next);
        }
        chain
    }

    /// `max{n : f_i^n x in B(lambda)}`, counted and checked against the formula.
    pub fn phi(&self, i: usize, x: &LambdaElement) -> Result<i64, Error> {
        let counted = self.f_string(i, x).len() as i64 - 1;
        let formula = self.phi_formula(i, x);
        if counted == formula {
            Ok(counted)
        } else {
            Err(Error::PhiInconsistency { index: i, counted, formula })
        }
    }

    /// Breadth-first closure from `u_inf (x) t_lambda`, up to `max_depth` lowering steps.
    pub fn enumerate(&self, max_depth: usize) -> Enumeration {
        let n = self.cartan().rank();
        let mut levels = vec![vec![self.highest()]];
        let mut complete = false;
        loop {
            let last = levels.last().unwrap();
            // every f lowers the depth by one, so new elements can only collide within a level
            let mut seen = HashSet::new();
            let mut next = Vec::new();
            for x in last {
                for i in 0..n {
                    if let Some(y) = self.f(i, x) {
                        if seen.insert(y.clone()) {
                            next.push(y);
                        }
                    }
                }
            }
            if next.is_empty() {
                complete = true;
                break;
            }
            if levels.len() > max_depth {
                break;
            }
            next.sort();
            levels.push(next);
        }
        Enumeration { levels, complete }
    }

    pub fn line(&self, x: &LambdaElement) -> EnumeratedLine {
        EnumeratedLine {
            word: x.b.lowering_word().iter().map(|i| i + 1).collect(),
            weight: WeightJson::from(&self.weight(x)),
        }
    }
}
