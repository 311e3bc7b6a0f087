//! Type-agnostic crystal machinery: the signature rule, tensor products,
//! operator words, raising to highest elements and component generation.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::hash::Hash;

use serde::{Deserialize, Serialize};

use crate::cartan::WeightVec;
use crate::error::{Error, Result};
use crate::graph::CrystalGraph;

/// Raising (`E`) or lowering (`F`) Kashiwara operator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Dir {
    E,
    F,
}

impl Dir {
    pub fn opposite(self) -> Dir {
        match self {
            Dir::E => Dir::F,
            Dir::F => Dir::E,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

/// An `i`-signature: a sequence of `+`/`-` symbols.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Signature(pub Vec<Sign>);

impl Signature {
    /// Concatenation of `-^{ε} +^{φ}` blocks, one per tensor factor.
    pub fn from_blocks(blocks: &[(usize, usize)]) -> Self {
        let mut v = Vec::new();
        for &(e, p) in blocks {
            v.extend(std::iter::repeat_n(Sign::Minus, e));
            v.extend(std::iter::repeat_n(Sign::Plus, p));
        }
        Signature(v)
    }

    /// Parses `+`, `-` and `−`; any other character (e.g. `·` separators)
    /// is ignored.
    pub fn parse(s: &str) -> Self {
        Signature(
            s.chars()
                .filter_map(|c| match c {
                    '+' => Some(Sign::Plus),
                    '-' | '−' => Some(Sign::Minus),
                    _ => None,
                })
                .collect(),
        )
    }
}

/// Reduces a signature by repeatedly deleting adjacent `+-` pairs and
/// returns `(a, b)` for the reduced form `-^a +^b`.
pub fn reduce_signature(s: &Signature) -> (usize, usize) {
    let mut minus = 0;
    let mut plus = 0;
    for &sym in &s.0 {
        match sym {
            Sign::Plus => plus += 1,
            Sign::Minus if plus > 0 => plus -= 1,
            Sign::Minus => minus += 1,
        }
    }
    (minus, plus)
}

/// Outcome of the signature rule on a list of `(ε_i, φ_i)` blocks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SignatureRule {
    pub eps: usize,
    pub phi: usize,
    /// Factor holding the rightmost surviving `-`.
    pub e_factor: Option<usize>,
    /// Factor holding the leftmost surviving `+`.
    pub f_factor: Option<usize>,
}

impl SignatureRule {
    pub fn new(blocks: &[(usize, usize)]) -> Self {
        // unmatched pluses as (factor, count), nearest on top
        let mut stack: Vec<(usize, usize)> = Vec::new();
        let mut eps = 0;
        let mut e_factor = None;
        for (j, &(e, p)) in blocks.iter().enumerate() {
            let mut m = e;
            while m > 0 {
                match stack.last_mut() {
                    Some(top) => {
                        let take = top.1.min(m);
                        top.1 -= take;
                        m -= take;
                        if top.1 == 0 {
                            stack.pop();
                        }
                    }
                    None => break,
                }
            }
            if m > 0 {
                eps += m;
                e_factor = Some(j);
            }
            if p > 0 {
                stack.push((j, p));
            }
        }
        SignatureRule { eps, phi: stack.iter().map(|s| s.1).sum(), e_factor, f_factor: stack.first().map(|s| s.0) }
    }

    pub fn factor(&self, dir: Dir) -> Option<usize> {
        match dir {
            Dir::E => self.e_factor,
            Dir::F => self.f_factor,
        }
    }
}

/// A word `a_1 a_2 ... a_m` of crystal indices with multiplicities.
/// `e_a = e_{a_m} ⋯ e_{a_1}`: entries are applied left entry first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct OpWord(pub Vec<(usize, usize)>);

impl OpWord {
    pub fn new() -> Self {
        OpWord(Vec::new())
    }

    pub fn from_entries(entries: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut w = OpWord::new();
        for (i, m) in entries {
            w.push(i, m);
        }
        w
    }

    /// Appends `i^m`, merging with a trailing entry of the same index.
    pub fn push(&mut self, i: usize, m: usize) {
        if m == 0 {
            return;
        }
        match self.0.last_mut() {
            Some(last) if last.0 == i => last.1 += m,
            _ => self.0.push((i, m)),
        }
    }

    /// `Rev(a)`.
    pub fn reversed(&self) -> OpWord {
        OpWord(self.0.iter().rev().copied().collect())
    }

    pub fn len(&self) -> usize {
        self.0.iter().map(|e| e.1).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Unmerged entries, zero exponents kept; `(i, m)` in application order.
    pub fn entries(&self) -> &[(usize, usize)] {
        &self.0
    }
}

impl fmt::Display for OpWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("∅");
        }
        let s: Vec<String> = self.0.iter().map(|(i, m)| format!("{i}^{m}")).collect();
        f.write_str(&s.join(" "))
    }
}

/// A crystal: partial operators `e_i`, `f_i` and a weight map.
pub trait Crystal {
    type Elem: Clone + Eq + Hash + Ord + fmt::Debug;

    fn apply(&self, dir: Dir, i: usize, b: &Self::Elem) -> Option<Self::Elem>;

    fn weight(&self, b: &Self::Elem) -> WeightVec;

    /// `(ε_i(b), φ_i(b))`, by default counted by repeated application.
    fn eps_phi(&self, i: usize, b: &Self::Elem) -> (usize, usize) {
        let count = |dir| {
            let mut n = 0;
            let mut cur = b.clone();
            while let Some(next) = self.apply(dir, i, &cur) {
                n += 1;
                cur = next;
            }
            n
        };
        (count(Dir::E), count(Dir::F))
    }

    fn e(&self, i: usize, b: &Self::Elem) -> Option<Self::Elem> {
        self.apply(Dir::E, i, b)
    }

    fn f(&self, i: usize, b: &Self::Elem) -> Option<Self::Elem> {
        self.apply(Dir::F, i, b)
    }
}

/// Applies `e_w` (or `f_w`) to `b`; `None` propagates.
pub fn apply_word<C: Crystal>(c: &C, dir: Dir, w: &OpWord, b: &C::Elem) -> Option<C::Elem> {
    let mut cur = b.clone();
    for &(i, m) in w.entries() {
        for _ in 0..m {
            cur = c.apply(dir, i, &cur)?;
        }
    }
    Some(cur)
}

/// `e_i^m b`, `None` if some step vanishes.
pub fn apply_power<C: Crystal>(c: &C, dir: Dir, i: usize, m: usize, b: &C::Elem) -> Option<C::Elem> {
    let mut cur = b.clone();
    for _ in 0..m {
        cur = c.apply(dir, i, &cur)?;
    }
    Some(cur)
}

/// `b` is killed by every `e_i`, `i ∈ indices`.
pub fn is_highest<C: Crystal>(c: &C, b: &C::Elem, indices: &[usize]) -> bool {
    indices.iter().all(|&i| c.e(i, b).is_none())
}

/// Raises `b` until every `e_i`, `i ∈ indices`, vanishes; always applies
/// the smallest applicable index. Returns the highest element `h` and the
/// word `w` with `e_w(b) = h`.
pub fn raise_to_highest<C: Crystal>(c: &C, b: &C::Elem, indices: &[usize]) -> (C::Elem, OpWord) {
    let mut sorted = indices.to_vec();
    sorted.sort_unstable();
    let mut cur = b.clone();
    let mut word = OpWord::new();
    'outer: loop {
        for &i in &sorted {
            if let Some(next) = c.e(i, &cur) {
                cur = next;
                word.push(i, 1);
                continue 'outer;
            }
        }
        return (cur, word);
    }
}

/// Connected component of `seed` under `e_i`, `f_i` for `i ∈ indices`,
/// in canonical element order.
pub fn generate_component<C: Crystal>(
    c: &C,
    seed: &C::Elem,
    indices: &[usize],
    cap: usize,
) -> Result<CrystalGraph<C::Elem>> {
    let mut seen: HashMap<C::Elem, ()> = HashMap::new();
    let mut queue = VecDeque::new();
    let mut arrows = Vec::new();
    seen.insert(seed.clone(), ());
    queue.push_back(seed.clone());
    while let Some(b) = queue.pop_front() {
        for &i in indices {
            for dir in [Dir::F, Dir::E] {
                if let Some(nb) = c.apply(dir, i, &b) {
                    if dir == Dir::F {
                        arrows.push((b.clone(), i, nb.clone()));
                    }
                    if !seen.contains_key(&nb) {
                        if seen.len() >= cap {
                            return Err(Error::CapExceeded { cap });
                        }
                        seen.insert(nb.clone(), ());
                        queue.push_back(nb);
                    }
                }
            }
        }
    }
    let nodes: Vec<C::Elem> = seen.into_keys().collect();
    Ok(CrystalGraph::from_arrows(nodes, arrows))
}

/// Tensor product `B_1 ⊗ ⋯ ⊗ B_m` of crystals of one element type, with
/// operators dispatched by the signature rule.
pub struct TensorProduct<'a, C: Crystal> {
    factors: Vec<&'a C>,
}

impl<'a, C: Crystal> TensorProduct<'a, C> {
    pub fn new(factors: Vec<&'a C>) -> Self {
        TensorProduct { factors }
    }

    pub fn factors(&self) -> &[&'a C] {
        &self.factors
    }

    fn blocks(&self, i: usize, t: &[C::Elem]) -> Vec<(usize, usize)> {
        self.factors.iter().zip(t).map(|(c, b)| c.eps_phi(i, b)).collect()
    }

    /// Factor on which `e_i`/`f_i` acts, if the operator does not vanish.
    pub fn acting_factor(&self, dir: Dir, i: usize, t: &[C::Elem]) -> Option<usize> {
        SignatureRule::new(&self.blocks(i, t)).factor(dir)
    }

    pub fn try_apply(&self, dir: Dir, i: usize, t: &[C::Elem]) -> Result<Option<Vec<C::Elem>>> {
        if t.len() != self.factors.len() {
            return Err(Error::InvalidElement(format!(
                "tensor element has {} factors, expected {}",
                t.len(),
                self.factors.len()
            )));
        }
        let Some(j) = self.acting_factor(dir, i, t) else {
            return Ok(None);
        };
        let nb = self.factors[j]
            .apply(dir, i, &t[j])
            .ok_or_else(|| Error::Inconsistent(format!("factor {j} vanished under {dir:?}_{i} though selected")))?;
        let mut out = t.to_vec();
        out[j] = nb;
        Ok(Some(out))
    }
}

impl<C: Crystal> Crystal for TensorProduct<'_, C> {
    type Elem = Vec<C::Elem>;

    fn apply(&self, dir: Dir, i: usize, b: &Self::Elem) -> Option<Self::Elem> {
        self.try_apply(dir, i, b).expect("tensor factor operators consistent with ε/φ")
    }

    fn weight(&self, b: &Self::Elem) -> WeightVec {
        let mut it = self.factors.iter().zip(b).map(|(c, x)| c.weight(x));
        let first = it.next().expect("nonempty tensor");
        it.fold(first, |acc, w| acc.add(&w))
    }

    fn eps_phi(&self, i: usize, b: &Self::Elem) -> (usize, usize) {
        let rule = SignatureRule::new(&self.blocks(i, b));
        (rule.eps, rule.phi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// A toy crystal: a single `i`-string of each given length, element
    /// `(len, pos)` with `pos` counted from the top.
    struct Strings;

    impl Crystal for Strings {
        type Elem = (usize, usize);
        fn apply(&self, dir: Dir, _i: usize, b: &(usize, usize)) -> Option<(usize, usize)> {
            match dir {
                Dir::E if b.1 > 0 => Some((b.0, b.1 - 1)),
                Dir::F if b.1 < b.0 => Some((b.0, b.1 + 1)),
                _ => None,
            }
        }
        fn weight(&self, b: &(usize, usize)) -> WeightVec {
            WeightVec(vec![b.0 as i64 - 2 * b.1 as i64])
        }
    }

    #[test]
    fn reduce_worked_example() {
        let s = Signature::parse("−++·−+·−−+");
        assert_eq!(reduce_signature(&s), (1, 1));
        assert_eq!(Signature::from_blocks(&[(1, 2), (1, 1), (2, 1)]), s);
        assert_eq!(reduce_signature(&Signature::parse("+-")), (0, 0));
        assert_eq!(reduce_signature(&Signature::default()), (0, 0));
    }

    #[test]
    fn signature_rule_worked_example() {
        let rule = SignatureRule::new(&[(1, 2), (1, 1), (2, 1)]);
        assert_eq!((rule.eps, rule.phi), (1, 1));
        assert_eq!(rule.e_factor, Some(0));
        assert_eq!(rule.f_factor, Some(2));

        // the same through a tensor product of toy strings: ε = pos, φ = len - pos
        let s = Strings;
        let t = TensorProduct::new(vec![&s, &s, &s]);
        let b = vec![(3, 1), (2, 1), (3, 2)];
        assert_eq!(t.eps_phi(1, &b), (1, 1));
        assert_eq!(t.e(1, &b), Some(vec![(3, 0), (2, 1), (3, 2)]));
        assert_eq!(t.f(1, &b), Some(vec![(3, 1), (2, 1), (3, 3)]));
        let top = vec![(3, 0), (2, 0), (3, 0)];
        assert_eq!(t.e(1, &top), None);
    }

    #[test]
    fn two_factor_rule_matches_signature_rule() {
        for e1 in 0..4 {
            for p1 in 0..4 {
                for e2 in 0..4 {
                    for p2 in 0..4 {
                        let rule = SignatureRule::new(&[(e1, p1), (e2, p2)]);
                        let e_expect = if e1 + e2 == 0 || (p1 >= e2 && e1 == 0) {
                            None
                        } else if p1 >= e2 {
                            Some(0)
                        } else {
                            Some(1)
                        };
                        assert_eq!(rule.e_factor, e_expect, "{e1} {p1} {e2} {p2}");
                        let f_expect = if p1 > e2 {
                            Some(0)
                        } else if p2 > 0 {
                            Some(1)
                        } else {
                            None
                        };
                        assert_eq!(rule.f_factor, f_expect, "{e1} {p1} {e2} {p2}");
                        assert_eq!(rule.eps, e1 + e2.saturating_sub(p1));
                        assert_eq!(rule.phi, p2 + p1.saturating_sub(e2));
                    }
                }
            }
        }
    }

    #[test]
    fn word_application_and_raising() {
        let s = Strings;
        let b = (5, 3);
        assert_eq!(apply_word(&s, Dir::E, &OpWord::new(), &b), Some(b));
        let (h, w) = raise_to_highest(&s, &b, &[1]);
        assert_eq!(h, (5, 0));
        assert_eq!(w, OpWord(vec![(1, 3)]));
        assert_eq!(apply_word(&s, Dir::F, &w.reversed(), &h), Some(b));
        assert_eq!(apply_power(&s, Dir::E, 1, 4, &b), None);
    }

    #[test]
    fn op_word_merges_and_reverses() {
        let w = OpWord::from_entries([(1, 2), (1, 1), (2, 0), (3, 1)]);
        assert_eq!(w.entries(), &[(1, 3), (3, 1)]);
        assert_eq!(w.reversed().entries(), &[(3, 1), (1, 3)]);
        assert_eq!(w.len(), 4);
    }

    #[test]
    fn component_of_toy_tensor() {
        let s = Strings;
        let t = TensorProduct::new(vec![&s, &s]);
        let g = generate_component(&t, &vec![(1, 0), (1, 0)], &[1], 100).unwrap();
        // V(1) ⊗ V(1) restricted to one string: the component of the top is V(2)
        assert_eq!(g.nodes().len(), 3);
        assert!(matches!(generate_component(&t, &vec![(1, 0), (1, 0)], &[1], 2), Err(Error::CapExceeded { cap: 2 })));
    }
}
