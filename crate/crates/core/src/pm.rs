//! ±-diagrams: nested partitions `λ ⊆ μ ⊆ Λ` with `+` on `μ/λ` and `-` on
//! `Λ/μ`, indexing the `J`-highest elements (`J = {2, …, n}`) of a classical
//! crystal `B(Λ)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cartan::{CartanKind, CartanSpec, Partition};
use crate::crystal::Crystal;
use crate::crystal::OpWord;
use crate::error::{Error, Result};
use crate::tableau::{KNTableau, Letter, TableauCrystal};

/// What a column of a ±-diagram carries above its inner part.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ColumnKind {
    Dot,
    Plus,
    Minus,
    /// `+` with a `-` on top of it.
    PlusMinus,
}

/// One column: outer, middle and inner heights.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Column {
    pub outer: usize,
    pub middle: usize,
    pub inner: usize,
}

impl Column {
    pub fn new(outer: usize, middle: usize, inner: usize) -> Self {
        Column { outer, middle, inner }
    }

    /// A column of the given kind and outer height.
    pub fn of_kind(kind: ColumnKind, outer: usize) -> Result<Self> {
        let need = match kind {
            ColumnKind::Dot => 0,
            ColumnKind::Plus | ColumnKind::Minus => 1,
            ColumnKind::PlusMinus => 2,
        };
        if outer < need {
            return Err(Error::MalformedDiagram(format!("{kind:?} column cannot have height {outer}")));
        }
        Ok(match kind {
            ColumnKind::Dot => Column::new(outer, outer, outer),
            ColumnKind::Plus => Column::new(outer, outer, outer - 1),
            ColumnKind::Minus => Column::new(outer, outer - 1, outer - 1),
            ColumnKind::PlusMinus => Column::new(outer, outer - 1, outer - 2),
        })
    }

    fn is_valid(&self) -> bool {
        self.outer >= self.middle
            && self.middle >= self.inner
            && self.outer - self.middle <= 1
            && self.middle - self.inner <= 1
    }

    pub fn kind(&self) -> ColumnKind {
        match (self.outer - self.middle, self.middle - self.inner) {
            (0, 0) => ColumnKind::Dot,
            (0, 1) => ColumnKind::Plus,
            (1, 0) => ColumnKind::Minus,
            _ => ColumnKind::PlusMinus,
        }
    }

    pub fn has_plus(&self) -> bool {
        self.middle > self.inner
    }

    pub fn has_minus(&self) -> bool {
        self.outer > self.middle
    }
}

/// A ±-diagram. Column `j` of `outer`, `middle`, `inner` is read off the
/// conjugate partitions.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawPm")]
pub struct PMDiagram {
    outer: Partition,
    middle: Partition,
    inner: Partition,
}

#[derive(Deserialize)]
struct RawPm {
    outer: Partition,
    middle: Partition,
    inner: Partition,
}

impl TryFrom<RawPm> for PMDiagram {
    type Error = Error;
    fn try_from(raw: RawPm) -> Result<Self> {
        PMDiagram::new(raw.outer, raw.middle, raw.inner)
    }
}

impl PMDiagram {
    pub fn new(outer: Partition, middle: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&middle) || !middle.contains(&inner) {
            return Err(Error::MalformedDiagram(format!("{inner} ⊆ {middle} ⊆ {outer} fails")));
        }
        if !outer.is_horizontal_strip_over(&middle) || !middle.is_horizontal_strip_over(&inner) {
            return Err(Error::MalformedDiagram(format!(
                "{outer}/{middle} or {middle}/{inner} is not a horizontal strip"
            )));
        }
        Ok(PMDiagram { outer, middle, inner })
    }

    /// Builds a diagram from its columns, left to right. Trailing empty
    /// columns are allowed.
    pub fn from_columns(cols: &[Column]) -> Result<Self> {
        if let Some(c) = cols.iter().find(|c| !c.is_valid()) {
            return Err(Error::MalformedDiagram(format!("bad column {c:?}")));
        }
        let decreasing = |f: fn(&Column) -> usize| cols.windows(2).all(|p| f(&p[0]) >= f(&p[1]));
        if !decreasing(|c| c.outer) || !decreasing(|c| c.middle) || !decreasing(|c| c.inner) {
            return Err(Error::MalformedDiagram("column heights must weakly decrease".into()));
        }
        let part = |f: fn(&Column) -> usize| Partition::from_column_heights(&cols.iter().map(f).collect::<Vec<_>>());
        Ok(PMDiagram { outer: part(|c| c.outer), middle: part(|c| c.middle), inner: part(|c| c.inner) })
    }

    /// The diagram with no signs.
    pub fn empty_of(shape: &Partition) -> Self {
        PMDiagram { outer: shape.clone(), middle: shape.clone(), inner: shape.clone() }
    }

    /// Every column of `shape` carries a single `+`: the diagram of the
    /// highest element of `B(shape)`.
    pub fn all_plus(shape: &Partition) -> Self {
        let cols: Vec<Column> = shape.column_heights(0).into_iter().map(|h| Column::new(h, h, h - 1)).collect();
        Self::from_columns(&cols).expect("all-plus columns are valid")
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn middle(&self) -> &Partition {
        &self.middle
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn width(&self) -> usize {
        self.outer.width()
    }

    /// Columns left to right, padded to at least `width` with empty ones.
    pub fn columns_padded(&self, width: usize) -> Vec<Column> {
        let w = width.max(self.width());
        let o = self.outer.column_heights(w);
        let m = self.middle.column_heights(w);
        let l = self.inner.column_heights(w);
        (0..w).map(|j| Column::new(o[j], m[j], l[j])).collect()
    }

    pub fn columns(&self) -> Vec<Column> {
        self.columns_padded(0)
    }

    /// Symbol counts by outer column height for a diagram of width `k`.
    pub fn stats(&self, k: usize) -> Result<PMStats> {
        if self.width() > k {
            return Err(Error::MalformedDiagram(format!("width {} exceeds k = {k}", self.width())));
        }
        let mut s = PMStats::zero(k, self.outer.depth());
        for c in self.columns_padded(k) {
            let slot = match c.kind() {
                ColumnKind::Dot => &mut s.dot,
                ColumnKind::Plus => &mut s.plus,
                ColumnKind::Minus => &mut s.minus,
                ColumnKind::PlusMinus => &mut s.pm,
            };
            slot[c.outer] += 1;
        }
        Ok(s)
    }
}

impl fmt::Display for PMDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cols: Vec<String> = self
            .columns()
            .iter()
            .map(|c| {
                let sym = match c.kind() {
                    ColumnKind::Dot => "·",
                    ColumnKind::Plus => "+",
                    ColumnKind::Minus => "-",
                    ColumnKind::PlusMinus => "∓",
                };
                format!("{}{sym}", c.outer)
            })
            .collect();
        write!(f, "[{}]", cols.join(" "))
    }
}

/// `p_i^∗`: number of columns of outer height `i` containing `∗`. Height 0
/// counts the empty columns among the `k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PMStats {
    pub k: usize,
    pub dot: Vec<usize>,
    pub plus: Vec<usize>,
    pub minus: Vec<usize>,
    pub pm: Vec<usize>,
}

impl PMStats {
    /// All counts zero, heights `0..=depth`.
    pub fn zero(k: usize, depth: usize) -> Self {
        let z = vec![0; depth + 1];
        PMStats { k, dot: z.clone(), plus: z.clone(), minus: z.clone(), pm: z }
    }

    fn at(v: &[usize], i: usize) -> usize {
        v.get(i).copied().unwrap_or(0)
    }

    pub fn p_dot(&self, i: usize) -> usize {
        Self::at(&self.dot, i)
    }

    pub fn p_plus(&self, i: usize) -> usize {
        Self::at(&self.plus, i)
    }

    pub fn p_minus(&self, i: usize) -> usize {
        Self::at(&self.minus, i)
    }

    pub fn p_pm(&self, i: usize) -> usize {
        Self::at(&self.pm, i)
    }

    pub fn max_height(&self) -> usize {
        self.dot.len().max(self.plus.len()).max(self.minus.len()).max(self.pm.len()).saturating_sub(1)
    }

    pub fn total(&self) -> usize {
        [&self.dot, &self.plus, &self.minus, &self.pm].iter().flat_map(|v| v.iter()).sum()
    }

    /// Lays out the columns tallest first, and within one height in the
    /// order `·`, `+`, `-`, `∓`.
    pub fn to_diagram(&self) -> Result<PMDiagram> {
        if self.total() != self.k {
            return Err(Error::MalformedDiagram(format!("counts sum to {} but k = {}", self.total(), self.k)));
        }
        let mut cols = Vec::new();
        for h in (1..=self.max_height()).rev() {
            for (kind, m) in [
                (ColumnKind::Dot, self.p_dot(h)),
                (ColumnKind::Plus, self.p_plus(h)),
                (ColumnKind::Minus, self.p_minus(h)),
                (ColumnKind::PlusMinus, self.p_pm(h)),
            ] {
                for _ in 0..m {
                    cols.push(Column::of_kind(kind, h)?);
                }
            }
        }
        for v in [&self.plus, &self.minus, &self.pm] {
            if Self::at(v, 0) > 0 {
                return Err(Error::MalformedDiagram("signed column of height 0".into()));
            }
        }
        PMDiagram::from_columns(&cols)
    }
}

/// All ±-diagrams of shape `outer/inner`.
pub fn enumerate_pm(spec: &CartanSpec, outer: &Partition, inner: &Partition) -> Vec<PMDiagram> {
    if !outer.contains(inner) {
        return Vec::new();
    }
    if spec.kind() == CartanKind::A2Odd && inner.depth() >= spec.n() {
        return Vec::new();
    }
    let w = outer.width();
    let o = outer.column_heights(w);
    let l = inner.column_heights(w);
    let mut choices = Vec::with_capacity(w);
    for j in 0..w {
        match o[j] - l[j] {
            0 => choices.push(vec![l[j]]),
            1 => choices.push(vec![l[j], l[j] + 1]),
            2 => choices.push(vec![l[j] + 1]),
            _ => return Vec::new(),
        }
    }
    let mut out = Vec::new();
    let mut mid = Vec::with_capacity(w);
    fn rec(j: usize, choices: &[Vec<usize>], o: &[usize], l: &[usize], mid: &mut Vec<usize>, out: &mut Vec<PMDiagram>) {
        if j == choices.len() {
            let cols: Vec<Column> = (0..j).map(|t| Column::new(o[t], mid[t], l[t])).collect();
            if let Ok(p) = PMDiagram::from_columns(&cols) {
                out.push(p);
            }
            return;
        }
        for &m in &choices[j] {
            if j > 0 && mid[j - 1] < m {
                continue;
            }
            mid.push(m);
            rec(j + 1, choices, o, l, mid, out);
            mid.pop();
        }
    }
    rec(0, &choices, &o, &l, &mut mid, &mut out);
    out.sort();
    out
}

/// Every partition `λ ⊆ outer` whose columns are at most 2 shorter.
pub fn candidate_inners(outer: &Partition) -> Vec<Partition> {
    let o = outer.column_heights(0);
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(o.len());
    fn rec(j: usize, o: &[usize], cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if j == o.len() {
            out.push(Partition::from_column_heights(cur));
            return;
        }
        for d in 0..=2.min(o[j]) {
            let h = o[j] - d;
            if j > 0 && cur[j - 1] < h {
                continue;
            }
            cur.push(h);
            rec(j + 1, o, cur, out);
            cur.pop();
        }
    }
    rec(0, &o, &mut cur, &mut out);
    out.sort();
    out
}

/// All ±-diagrams with the given outer shape.
pub fn enumerate_pm_outer(spec: &CartanSpec, outer: &Partition) -> Vec<PMDiagram> {
    let mut out: Vec<PMDiagram> = candidate_inners(outer).iter().flat_map(|l| enumerate_pm(spec, outer, l)).collect();
    out.sort();
    out
}

enum Item {
    Bar { col: usize, row: usize },
    Str { col: usize, len: usize },
}

/// The `J`-highest tableau of a ±-diagram.
pub fn phi(spec: &CartanSpec, p: &PMDiagram) -> Result<KNTableau> {
    let n = spec.n();
    let cols = p.columns();
    if cols.iter().any(|c| c.outer > n) {
        return Err(Error::MalformedDiagram(format!("column taller than n = {n}")));
    }
    let mut out: Vec<Vec<Letter>> = Vec::with_capacity(cols.len());
    let mut items = Vec::new();
    let mut pluses = Vec::new();
    for (j, c) in cols.iter().enumerate() {
        if c.outer == n && c.kind() == ColumnKind::Plus {
            out.push((1..=n).map(Letter::unbarred).collect());
            continue;
        }
        let mut col: Vec<Letter> = (0..c.middle).map(|t| Letter::unbarred(t + 2)).collect();
        if c.has_minus() {
            col.push(Letter::barred(1));
            items.push(Item::Bar { col: j, row: c.middle });
        }
        if c.middle > 0 {
            items.push(Item::Str { col: j, len: c.middle });
        }
        if c.has_plus() {
            pluses.push(c.inner + 1);
        }
        out.push(col);
    }
    let mut items = items.into_iter();
    for h in pluses {
        match items.next() {
            Some(Item::Bar { col, row }) => out[col][row] = Letter::barred(h + 1),
            Some(Item::Str { col, len }) => {
                if h > len {
                    return Err(Error::MalformedDiagram(format!("+ at height {h} meets a string of length {len}")));
                }
                for (t, cell) in out[col][..h].iter_mut().enumerate() {
                    *cell = Letter::unbarred(t + 1);
                }
            }
            None => return Err(Error::MalformedDiagram("more + than available cells".into())),
        }
    }
    KNTableau::from_columns(out.into_iter().filter(|c| !c.is_empty()).collect())
}

/// `X_{n-1}` weight of a tableau: ε-coordinates 2..n as a partition.
pub fn restricted_weight(spec: &CartanSpec, t: &KNTableau) -> Option<Partition> {
    let w = TableauCrystal::new(*spec).weight(t);
    crate::cartan::WeightVec(w.0[1..].to_vec()).as_partition()
}

/// Inverse of [`phi`], found by testing every diagram with the right outer
/// and inner shapes.
pub fn phi_inv(spec: &CartanSpec, t: &KNTableau) -> Result<PMDiagram> {
    let inner = restricted_weight(spec, t)
        .ok_or_else(|| Error::NotHighest(format!("{t}: restricted weight is not dominant")))?;
    let outer = t.shape();
    enumerate_pm(spec, &outer, &inner)
        .into_iter()
        .find(|p| phi(spec, p).as_ref() == Ok(t))
        .ok_or_else(|| Error::NotHighest(format!("{t} is not the image of a ±-diagram")))
}

/// The involution `𝔖` on ±-diagrams of `B^{r,k}`.
pub fn s_map(p: &PMDiagram, r: usize, k: usize) -> Result<PMDiagram> {
    let cols = p.columns_padded(k);
    if cols.len() > k {
        return Err(Error::MalformedDiagram(format!("width {} exceeds k = {k}", cols.len())));
    }
    let mut out = Vec::with_capacity(k);
    // inner shape is a partition, so equal inner heights are contiguous
    let mut j = 0;
    while j < cols.len() {
        let i = cols[j].inner;
        let mut end = j;
        while end < cols.len() && cols[end].inner == i {
            end += 1;
        }
        let group = &cols[j..end];
        if i > r || group.iter().any(|c| c.outer > r) {
            return Err(Error::Parity(format!("column taller than r = {r}")));
        }
        if i == r {
            out.extend_from_slice(group);
        } else if (r - i) % 2 == 1 {
            let mut plus = 0;
            for c in group {
                match c.kind() {
                    ColumnKind::Plus => plus += 1,
                    ColumnKind::Minus => {}
                    _ => return Err(Error::Parity(format!("inner height {i} needs a single sign above it"))),
                }
            }
            let minus = group.len() - plus;
            out.extend(std::iter::repeat_n(Column::of_kind(ColumnKind::Plus, i + 1)?, minus));
            out.extend(std::iter::repeat_n(Column::of_kind(ColumnKind::Minus, i + 1)?, plus));
        } else {
            let mut pairs = 0;
            for c in group {
                match c.kind() {
                    ColumnKind::PlusMinus => pairs += 1,
                    ColumnKind::Dot => {}
                    _ => return Err(Error::Parity(format!("inner height {i} needs no sign or ∓ above it"))),
                }
            }
            let flipped = group.len() - pairs;
            out.extend(std::iter::repeat_n(Column::new(i + 2, i + 1, i), flipped));
            out.extend(std::iter::repeat_n(Column::new(i, i, i), pairs));
        }
        j = end;
    }
    PMDiagram::from_columns(&out)
}

/// The staged raising word taking `Φ(P)` to the highest element of
/// `B(outer(P))`. Zero exponents are kept so that every stage can be
/// checked for maximality.
pub fn to_highest_word(spec: &CartanSpec, p: &PMDiagram) -> Result<OpWord> {
    let n = spec.n();
    let r = p.outer().depth();
    if r > spec.max_column_height() {
        return Err(Error::MalformedDiagram(format!("depth {r} exceeds {} for {spec}", spec.max_column_height())));
    }
    let mut c = vec![0i64; n + 2];
    let mut cp = vec![0i64; n + 2];
    let mut cm = vec![0i64; n + 2];
    for col in p.columns() {
        c[col.outer] += 1;
        if col.has_plus() {
            cp[col.inner + 1] += 1;
        }
        if col.has_minus() {
            cm[col.outer] += 1;
        }
    }
    let a = |i: usize| -> i64 {
        (1..i).map(|j| cm[j]).sum::<i64>() + (c[i] - cp[i]) + (i + 1..=n).map(|j| c[j] + cm[j] - cp[j]).sum::<i64>()
    };
    let a_bar = |i: usize| -> i64 { (1..=i).map(|j| cm[j]).sum() };
    let (gamma, gamma_p) = match spec.kind() {
        CartanKind::B1 => (2, 1),
        CartanKind::D1 => (1, 0),
        CartanKind::A2Odd => (1, 1),
    };
    let mut stages: Vec<(usize, i64)> = (1..n).map(|i| (i, a(i))).collect();
    stages.push((n, gamma * a(n)));
    stages.push((n - 1, gamma_p * a_bar(n - 1)));
    stages.extend((1..n - 1).rev().map(|i| (i, a_bar(i))));
    if let Some(&(i, m)) = stages.iter().find(|s| s.1 < 0) {
        return Err(Error::Inconsistent(format!("negative exponent {m} at index {i}")));
    }
    Ok(OpWord(stages.into_iter().map(|(i, m)| (i, m as usize)).collect()))
}

/// A `J`-highest `P` together with a ±-diagram `p` of the restricted type
/// with `outer(p) = inner(P)`: an element that is highest for
/// `{3, …, n}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PMPair {
    pub big: PMDiagram,
    pub small: PMDiagram,
}

impl PMPair {
    pub fn new(big: PMDiagram, small: PMDiagram) -> Result<Self> {
        if big.inner() != small.outer() {
            return Err(Error::MalformedDiagram(format!(
                "inner {} of P differs from outer {} of p",
                big.inner(),
                small.outer()
            )));
        }
        Ok(PMPair { big, small })
    }

    /// `(P, p)` where `p` is the all-plus diagram: the pair of `Φ(P)`.
    pub fn of_highest(big: PMDiagram) -> Self {
        let small = PMDiagram::all_plus(big.inner());
        PMPair { big, small }
    }
}

impl fmt::Display for PMPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.big, self.small)
    }
}

/// A symbol moving between `P` and `p`. The shared shape `λ` changes in
/// row `lam`; the middle shape of `p` (for a `+`) or of `P` (for a `-`)
/// changes in row `mid`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Move {
    plus: bool,
    grow: bool,
    lam: usize,
    mid: usize,
}

fn e1_move(pp: &PMPair) -> Option<Move> {
    let w = pp.big.width();
    let big = pp.big.columns_padded(w);
    let small = pp.small.columns_padded(w);
    let mut big_plus: Vec<(usize, bool)> = (0..w).filter(|&j| big[j].has_plus()).map(|j| (j, false)).collect();
    let mut big_minus: Vec<(usize, bool)> = (0..w).filter(|&j| big[j].has_minus()).map(|j| (j, false)).collect();
    let small_plus: Vec<usize> = (0..w).filter(|&j| small[j].has_plus()).collect();
    let small_minus: Vec<usize> = (0..w).filter(|&j| small[j].has_minus()).collect();
    let mut plus_paired = vec![false; small_plus.len()];
    let mut minus_paired = vec![false; small_minus.len()];

    for (s, &j) in small_plus.iter().enumerate() {
        if let Some(b) = big_plus.iter_mut().find(|b| !b.1 && b.0 <= j) {
            b.1 = true;
            plus_paired[s] = true;
        }
    }
    for (t, &j) in small_minus.iter().enumerate() {
        if let Some(b) = big_minus.iter_mut().rev().find(|b| !b.1 && b.0 <= j) {
            b.1 = true;
            minus_paired[t] = true;
        }
    }
    for paired in plus_paired.iter_mut().filter(|p| !**p) {
        if let Some(t) = (0..small_minus.len()).find(|&t| !minus_paired[t]) {
            minus_paired[t] = true;
            *paired = true;
        }
    }
    if let Some(s) = (0..small_plus.len()).rev().find(|&s| !plus_paired[s]) {
        let c = small[small_plus[s]];
        return Some(Move { plus: true, grow: false, lam: c.outer, mid: c.middle });
    }
    big_minus.iter().find(|b| !b.1).map(|b| {
        let c = big[b.0];
        Move { plus: false, grow: true, lam: c.inner + 1, mid: c.middle + 1 }
    })
}

fn bump(p: &Partition, row: usize, up: bool) -> Option<Partition> {
    let mut rows = p.rows().to_vec();
    if rows.len() < row {
        rows.resize(row, 0);
    }
    let r = &mut rows[row - 1];
    if up {
        *r += 1;
    } else {
        *r = r.checked_sub(1)?;
    }
    Partition::new(rows).ok()
}

fn perform(pp: &PMPair, mv: Move) -> Option<PMPair> {
    let (big, small) = (&pp.big, &pp.small);
    let lam = bump(&big.inner, mv.lam, mv.grow)?;
    let (b_mid, s_mid) = if mv.plus {
        (big.middle.clone(), bump(&small.middle, mv.mid, mv.grow)?)
    } else {
        (bump(&big.middle, mv.mid, mv.grow)?, small.middle.clone())
    };
    let b = PMDiagram::new(big.outer.clone(), b_mid, lam.clone()).ok()?;
    let s = PMDiagram::new(lam, s_mid, small.inner.clone()).ok()?;
    Some(PMPair { big: b, small: s })
}

/// `e_1` on a pair by the pairing rule.
pub fn e1_on_pair(pp: &PMPair) -> Result<Option<PMPair>> {
    match e1_move(pp) {
        None => Ok(None),
        Some(mv) => perform(pp, mv)
            .map(Some)
            .ok_or_else(|| Error::MalformedDiagram(format!("{mv:?} on {pp} leaves no ±-diagram"))),
    }
}

/// `f_1` on a pair: the unique one-symbol move that `e_1` undoes.
pub fn f1_on_pair(pp: &PMPair) -> Result<Option<PMPair>> {
    let depth = pp.big.outer().depth();
    let mut found = None;
    for h in 1..=depth {
        let moves = [
            Move { plus: true, grow: true, lam: h, mid: h },
            Move { plus: true, grow: true, lam: h, mid: h - 1 },
            Move { plus: false, grow: false, lam: h, mid: h },
            Move { plus: false, grow: false, lam: h, mid: h + 1 },
        ];
        for mv in moves {
            if mv.mid == 0 {
                continue;
            }
            let Some(cand) = perform(pp, mv) else { continue };
            if e1_on_pair(&cand).ok().flatten().as_ref() == Some(pp) {
                if found.is_some() {
                    return Err(Error::Inconsistent(format!("f_1 of {pp} is not unique")));
                }
                found = Some(cand);
            }
        }
    }
    Ok(found)
}

/// Apply `e_1` (or `f_1`) to a pair.
pub fn apply_on_pair(pp: &PMPair, dir: crate::crystal::Dir) -> Result<Option<PMPair>> {
    match dir {
        crate::crystal::Dir::E => e1_on_pair(pp),
        crate::crystal::Dir::F => f1_on_pair(pp),
    }
}

/// `ε_1` of a pair: number of successful `e_1` steps.
pub fn eps1_of_pair(pp: &PMPair) -> Result<usize> {
    let mut cur = pp.clone();
    let mut n = 0;
    while let Some(next) = e1_on_pair(&cur)? {
        cur = next;
        n += 1;
    }
    Ok(n)
}

/// `ε_0(Φ(P))` read off the counts of `P` in `B^{r,k}`.
pub fn eps0_closed_form(stats: &PMStats, r: usize) -> i64 {
    let s = |v: usize| v as i64;
    if r % 2 == 1 {
        (1..=r).map(|j| s(stats.p_dot(j)) + 2 * s(stats.p_plus(j)) + s(stats.p_pm(j))).sum::<i64>() - s(stats.p_plus(1))
    } else {
        let mut total = s(stats.p_dot(r)) + 2 * s(stats.p_plus(r)) + s(stats.p_dot(r - 2));
        for j in (2..=r - 2).step_by(2) {
            total += s(stats.p_pm(j + 2)) + 2 * s(stats.p_plus(j)) + s(stats.p_dot(j - 2));
        }
        total
    }
}
