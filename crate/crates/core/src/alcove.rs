//! Walls, alcoves and the infinite dihedral group acting on weights.
//!
//! Walls sit at the integers `x = -m (mod l)`. The fundamental alcove is
//! the open interval `(-m, l - m)` containing 0, and the two fundamental
//! reflections fix its walls:
//!
//! ```text
//! s_-: x -> -2m - x        s_+: x -> 2(l - m) - x
//! ```
//!
//! A walk sharing its residue sequence with `t^λ` copies `t^λ` up to the
//! first fundamental-wall contact, then makes full wall-to-wall steps of
//! length `l` in free directions, and finishes with a straight run. This
//! module enumerates those walks structurally and derives `M_n(λ)` and its
//! indexing from them.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::AlcoveError;
use crate::params::BlobParams;
use crate::tableaux::{
    degree_g, residue_of_tableau, t_lambda, tableau_of, walk_of, Bitableau, OneLineBipartition,
    Walk,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AlcoveSystem {
    l: i64,
    m: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum WeightClass {
    OnFundamentalWall,
    OnOuterWall,
    InFundamentalAlcove,
    InOuterAlcove,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    Negative,
    Positive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeightPosition {
    pub class: WeightClass,
    /// `None` only inside the fundamental alcove.
    pub side: Option<Side>,
    /// Number of alcoves strictly between the weight and the fundamental
    /// alcove.
    pub kappa: usize,
}

impl WeightPosition {
    pub fn is_wall(&self) -> bool {
        matches!(
            self.class,
            WeightClass::OnFundamentalWall | WeightClass::OnOuterWall
        )
    }

    /// In the fundamental alcove or on one of its walls; `M_n` is then a
    /// singleton.
    pub fn is_fundamental(&self) -> bool {
        matches!(
            self.class,
            WeightClass::OnFundamentalWall | WeightClass::InFundamentalAlcove
        )
    }
}

impl AlcoveSystem {
    pub fn new(p: &BlobParams) -> Self {
        Self { l: p.l(), m: p.m() }
    }

    pub fn l(&self) -> i64 {
        self.l
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    pub fn is_wall(&self, x: i64) -> bool {
        (x + self.m).rem_euclid(self.l) == 0
    }

    /// The walls `(-m, l - m)` bounding the fundamental alcove.
    pub fn fundamental_walls(&self) -> (i64, i64) {
        (-self.m, self.l - self.m)
    }

    pub fn is_fundamental_wall(&self, x: i64) -> bool {
        let (lo, hi) = self.fundamental_walls();
        x == lo || x == hi
    }

    pub fn reflect_left(&self, x: i64) -> i64 {
        -2 * self.m - x
    }

    pub fn reflect_right(&self, x: i64) -> i64 {
        2 * (self.l - self.m) - x
    }

    /// Walls in the closed interval `[lo, hi]`, ascending.
    pub fn walls_in(&self, lo: i64, hi: i64) -> Vec<i64> {
        let first = lo + (-self.m - lo).rem_euclid(self.l);
        (0..)
            .map(|i| first + i * self.l)
            .take_while(|w| *w <= hi)
            .collect()
    }

    pub fn classify(&self, w: i64) -> WeightPosition {
        let (lo, hi) = self.fundamental_walls();
        let between = self.walls_in(w.min(0) + 1, w.max(0) - 1).len();
        let side = match w {
            _ if lo < w && w < hi => None,
            _ if w < 0 => Some(Side::Negative),
            _ => Some(Side::Positive),
        };
        let (class, kappa) = if self.is_wall(w) {
            let class = if self.is_fundamental_wall(w) {
                WeightClass::OnFundamentalWall
            } else {
                WeightClass::OnOuterWall
            };
            (class, between)
        } else if side.is_none() {
            (WeightClass::InFundamentalAlcove, 0)
        } else {
            (WeightClass::InOuterAlcove, between.saturating_sub(1))
        };
        WeightPosition { class, side, kappa }
    }

    /// `O_n(w)`: weights of absolute value at most `n` in the orbit of `w`,
    /// ascending.
    pub fn orbit(&self, w: i64, n: usize) -> Vec<i64> {
        // The orbit is {w + 2al} ∪ {s_-(w) + 2al}.
        let n = n as i64;
        let period = 2 * self.l;
        let mut out = BTreeSet::new();
        for base in [w, self.reflect_left(w)] {
            let mut x = base - period * ((base + n).div_euclid(period));
            while x < -n {
                x += period;
            }
            while x <= n {
                out.insert(x);
                x += period;
            }
        }
        out.into_iter().collect()
    }
}

pub fn classify_weight(w: i64, sys: &AlcoveSystem) -> WeightPosition {
    sys.classify(w)
}

pub fn orbit(w: i64, sys: &AlcoveSystem, n: usize) -> Vec<i64> {
    sys.orbit(w, n)
}

/// Shape of the walks in the residue class of `t^λ`.
#[derive(Clone, Debug, PartialEq, Eq)]
struct ClassSkeleton {
    /// `w(t^λ)` truncated at its first fundamental-wall vertex.
    prefix: Vec<i64>,
    steps: usize,
    remainder: usize,
}

fn skeleton(lambda: i64, p: &BlobParams) -> Result<Option<ClassSkeleton>, AlcoveError> {
    let sys = AlcoveSystem::new(p);
    let shape = OneLineBipartition::from_weight(lambda, p.n())?;
    let top = walk_of(&t_lambda(&shape));
    let Some(contact) = top
        .weights()
        .iter()
        .position(|w| sys.is_fundamental_wall(*w))
    else {
        return Ok(None);
    };
    let rest = p.n() - contact;
    let l = p.l() as usize;
    Ok(Some(ClassSkeleton {
        prefix: top.weights()[..=contact].to_vec(),
        steps: rest / l,
        remainder: rest % l,
    }))
}

fn straight(weights: &mut Vec<i64>, dir: i64, len: usize) {
    let mut x = *weights.last().expect("non-empty walk");
    for _ in 0..len {
        x += dir;
        weights.push(x);
    }
}

/// Every bitableau with the residue sequence of `t^λ`, built from the
/// wall-to-wall skeleton rather than by search. Sorted lexicographically.
pub fn class_walks(lambda: i64, p: &BlobParams) -> Result<Vec<Bitableau>, AlcoveError> {
    let shape = OneLineBipartition::from_weight(lambda, p.n())?;
    let Some(sk) = skeleton(lambda, p)? else {
        return Ok(vec![t_lambda(&shape)]);
    };
    let l = p.l() as usize;
    let finals: &[i64] = if sk.remainder == 0 { &[0] } else { &[1, -1] };
    let mut out = Vec::with_capacity((1 << sk.steps) * finals.len());
    for choice in 0u64..(1u64 << sk.steps) {
        let mut weights = sk.prefix.clone();
        for i in 0..sk.steps {
            let dir = if choice >> i & 1 == 1 { 1 } else { -1 };
            straight(&mut weights, dir, l);
        }
        for &dir in finals {
            let mut full = weights.clone();
            straight(&mut full, dir, sk.remainder);
            let walk = Walk::from_weights(full).expect("skeleton walks have unit steps");
            out.push(tableau_of(&walk));
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// The indexed set `M_n(λ) = {λ_1, ..., λ_N}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitIndex {
    lambda: i64,
    position: WeightPosition,
    entries: Vec<i64>,
}

impl OrbitIndex {
    pub fn lambda(&self) -> i64 {
        self.lambda
    }

    pub fn position(&self) -> WeightPosition {
        self.position
    }

    pub fn kappa(&self) -> usize {
        self.position.kappa
    }

    pub fn is_wall(&self) -> bool {
        self.position.is_wall()
    }

    /// Entries in index order `λ_1, ..., λ_N`.
    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `λ_k`, 1-based.
    pub fn get(&self, k: usize) -> Option<i64> {
        k.checked_sub(1).and_then(|i| self.entries.get(i).copied())
    }

    /// The 1-based index of `w`, if present.
    pub fn index_of(&self, w: i64) -> Option<usize> {
        self.entries.iter().position(|x| *x == w).map(|i| i + 1)
    }

    pub fn contains(&self, w: i64) -> bool {
        self.entries.contains(&w)
    }
}

/// Orders `M_n(λ)`: `λ_1 = λ`; on the negative side `λ_{i+1}` is the
/// rightmost remaining weight for odd `i` and the leftmost for even `i`,
/// mirrored on the positive side.
fn index_entries(lambda: i64, set: &BTreeSet<i64>) -> Vec<i64> {
    let mut rest: BTreeSet<i64> = set.clone();
    rest.remove(&lambda);
    let mut out = vec![lambda];
    let negative = lambda < 0;
    while !rest.is_empty() {
        let odd = out.len() % 2 == 1;
        let pick = if odd == negative {
            *rest.iter().next_back().unwrap()
        } else {
            *rest.iter().next().unwrap()
        };
        rest.remove(&pick);
        out.push(pick);
    }
    out
}

pub fn m_set(lambda: i64, p: &BlobParams) -> Result<OrbitIndex, AlcoveError> {
    let sys = AlcoveSystem::new(p);
    let position = sys.classify(lambda);
    let set: BTreeSet<i64> = class_walks(lambda, p)?
        .iter()
        .map(Bitableau::weight)
        .collect();
    Ok(OrbitIndex {
        lambda,
        position,
        entries: index_entries(lambda, &set),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum WallStep {
    /// Crosses the fundamental alcove.
    F,
    /// Moves toward the central axis.
    I,
    /// Moves away from the central axis.
    O,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FinalDirection {
    TowardAxis,
    AwayFromAxis,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WallWord {
    pub letters: Vec<WallStep>,
    /// Direction of the closing straight run; `None` when there is none.
    pub final_direction: Option<FinalDirection>,
}

impl WallWord {
    fn count(&self, step: WallStep) -> usize {
        self.letters.iter().filter(|s| **s == step).count()
    }

    pub fn n_f(&self) -> usize {
        self.count(WallStep::F)
    }

    pub fn n_i(&self) -> usize {
        self.count(WallStep::I)
    }

    pub fn n_o(&self) -> usize {
        self.count(WallStep::O)
    }

    /// `#O >= #I` on every prefix.
    pub fn is_ballot(&self) -> bool {
        let mut height = 0i64;
        self.letters.iter().all(|s| {
            match s {
                WallStep::O => height += 1,
                WallStep::I => height -= 1,
                WallStep::F => {}
            }
            height >= 0
        })
    }
}

impl fmt::Display for WallWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.letters {
            write!(f, "{s:?}")?;
        }
        Ok(())
    }
}

/// Splits `w(s)` into prefix, wall-to-wall steps and closing run.
pub fn wall_word_of(s: &Bitableau, lambda: i64, p: &BlobParams) -> Result<WallWord, AlcoveError> {
    let p = p.with_n(s.len().max(1));
    let shape = OneLineBipartition::from_weight(lambda, s.len())?;
    if residue_of_tableau(s, &p) != residue_of_tableau(&t_lambda(&shape), &p) {
        return Err(AlcoveError::NotInResidueClass { lambda });
    }
    let Some(sk) = skeleton(lambda, &p)? else {
        return Ok(WallWord {
            letters: Vec::new(),
            final_direction: None,
        });
    };
    let sys = AlcoveSystem::new(&p);
    let w = walk_of(s);
    let w = w.weights();
    let l = p.l() as usize;
    let start = sk.prefix.len() - 1;
    let letters = (0..sk.steps)
        .map(|i| {
            let from = w[start + i * l];
            let to = w[start + (i + 1) * l];
            if sys.is_fundamental_wall(from) && sys.is_fundamental_wall(to) && from != to {
                WallStep::F
            } else if to.abs() > from.abs() {
                WallStep::O
            } else {
                WallStep::I
            }
        })
        .collect();
    let final_direction = (sk.remainder > 0).then(|| {
        let at = start + sk.steps * l;
        if w[at + 1].abs() < w[at].abs() {
            FinalDirection::TowardAxis
        } else {
            FinalDirection::AwayFromAxis
        }
    });
    Ok(WallWord {
        letters,
        final_direction,
    })
}

/// `n_F`, plus one when the closing run heads toward the axis.
pub fn degree_word(word: &WallWord) -> i64 {
    word.n_f() as i64 + i64::from(word.final_direction == Some(FinalDirection::TowardAxis))
}

/// The two-column partition `(p, q)'`: columns of lengths `p >= q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TwoColumnPartition {
    pub p: usize,
    pub q: usize,
}

impl fmt::Display for TwoColumnPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})'", self.p, self.q)
    }
}

/// `μ_i^j = (κ - j + i, j - i)'`.
pub fn mu_partition(kappa: i64, i: i64, j: i64) -> Result<TwoColumnPartition, AlcoveError> {
    let (p, q) = (kappa - j + i, j - i);
    if q < 0 || p < q {
        return Err(AlcoveError::NotAPartition { p, q });
    }
    Ok(TwoColumnPartition {
        p: p as usize,
        q: q as usize,
    })
}

fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// Ballot number `C(p+q, q) - C(p+q, q-1)`, the number of standard tableaux
/// of shape `(p, q)` and of its conjugate.
pub fn count_std_two_column(mu: &TwoColumnPartition) -> BigInt {
    let total = mu.p + mu.q;
    let below = if mu.q == 0 {
        BigInt::zero()
    } else {
        binomial(total, mu.q - 1)
    };
    binomial(total, mu.q) - below
}

/// Degree histogram of the class members of shape `target`, where `target`
/// must be some `λ_{4j+1}` (or `λ_{2j+1}` when `λ` is on a wall).
pub fn count_degree_classes(
    lambda: i64,
    target: i64,
    p: &BlobParams,
) -> Result<BTreeMap<i64, BigInt>, AlcoveError> {
    let index = m_set(lambda, p)?;
    let k = index.index_of(target).ok_or_else(|| {
        AlcoveError::IndexMismatch(format!("{target} is not in M_{}({lambda})", p.n()))
    })?;
    let period = if index.is_wall() { 2 } else { 4 };
    if (k - 1) % period != 0 {
        return Err(AlcoveError::IndexMismatch(format!(
            "{target} is lambda_{k}, expected an index congruent to 1 mod {period}"
        )));
    }
    let mut hist = BTreeMap::new();
    for s in class_walks(lambda, p)?
        .iter()
        .filter(|s| s.weight() == target)
    {
        *hist.entry(degree_g(s, p)).or_insert_with(BigInt::zero) += 1;
    }
    Ok(hist)
}

/// ASCII picture of levels `0..=n` of the Pascal triangle: `|` marks wall
/// columns, `*` the vertices of `walk`, `.` the other vertices.
pub fn render_triangle(sys: &AlcoveSystem, n: usize, walk: Option<&Walk>) -> String {
    let ni = n as i64;
    let width = n.to_string().len();
    let mut out = String::new();
    for level in 0..=n {
        let li = level as i64;
        let on_walk = walk.and_then(|w| w.weights().get(level).copied());
        let row: String = (-ni..=ni)
            .map(|x| {
                if on_walk == Some(x) {
                    '*'
                } else if sys.is_wall(x) {
                    '|'
                } else if x.abs() <= li && (li - x).rem_euclid(2) == 0 {
                    '.'
                } else {
                    ' '
                }
            })
            .collect();
        out.push_str(&format!("{level:>width$} {}\n", row.trim_end()));
    }
    out
}
