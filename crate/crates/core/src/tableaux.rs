//! One-line bipartitions, standard bitableaux and their walks.
//!
//! A standard one-line bitableau is determined by which component each of
//! `1..=n` lands in, so it is stored as a sign sequence: `+` for the first
//! component, `-` for the second. Reading the signs as unit steps gives a
//! walk on the Pascal triangle starting at weight 0; the weight after `j`
//! steps is `#plus - #minus` among the first `j` entries.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::TableauError;
use crate::params::BlobParams;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn step(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

/// The bipartition `((a), (b))`, identified with the weight `a - b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OneLineBipartition {
    a: usize,
    b: usize,
}

impl OneLineBipartition {
    pub fn new(a: usize, b: usize) -> Self {
        Self { a, b }
    }

    pub fn from_weight(weight: i64, n: usize) -> Result<Self, TableauError> {
        let ni = n as i64;
        if weight.abs() > ni || (ni - weight) % 2 != 0 {
            return Err(TableauError::BadWeight { weight, n });
        }
        let a = ((ni + weight) / 2) as usize;
        Ok(Self { a, b: n - a })
    }

    pub fn first(&self) -> usize {
        self.a
    }

    pub fn second(&self) -> usize {
        self.b
    }

    pub fn n(&self) -> usize {
        self.a + self.b
    }

    pub fn weight(&self) -> i64 {
        self.a as i64 - self.b as i64
    }
}

impl fmt::Display for OneLineBipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(({}),({}))", self.a, self.b)
    }
}

/// A standard one-line bitableau as a sign sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bitableau {
    signs: Vec<Sign>,
}

impl Bitableau {
    pub fn new(signs: Vec<Sign>) -> Self {
        Self { signs }
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    pub fn len(&self) -> usize {
        self.signs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.signs.is_empty()
    }

    pub fn shape(&self) -> OneLineBipartition {
        let a = self.signs.iter().filter(|s| **s == Sign::Plus).count();
        OneLineBipartition::new(a, self.signs.len() - a)
    }

    /// Weight of the final vertex of the walk.
    pub fn weight(&self) -> i64 {
        self.signs.iter().map(|s| s.step()).sum()
    }

    /// All `2^n` bitableaux with `n` entries, lexicographic with `+ < -`.
    pub fn all(n: usize) -> impl Iterator<Item = Bitableau> {
        assert!(n < 63, "exhaustive sweep too large");
        (0u64..(1u64 << n)).map(move |mask| {
            let signs = (0..n)
                .map(|j| {
                    if mask >> (n - 1 - j) & 1 == 1 {
                        Sign::Minus
                    } else {
                        Sign::Plus
                    }
                })
                .collect();
            Bitableau { signs }
        })
    }

    /// `Std(shape)`, lexicographic with `+ < -`.
    pub fn standard_of_shape(shape: &OneLineBipartition) -> Vec<Bitableau> {
        fn go(a: usize, b: usize, prefix: &mut Vec<Sign>, out: &mut Vec<Bitableau>) {
            if a == 0 && b == 0 {
                out.push(Bitableau::new(prefix.clone()));
                return;
            }
            if a > 0 {
                prefix.push(Sign::Plus);
                go(a - 1, b, prefix, out);
                prefix.pop();
            }
            if b > 0 {
                prefix.push(Sign::Minus);
                go(a, b - 1, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(
            shape.first(),
            shape.second(),
            &mut Vec::with_capacity(shape.n()),
            &mut out,
        );
        out
    }
}

impl FromStr for Bitableau {
    type Err = TableauError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.trim()
            .chars()
            .map(|c| match c {
                '+' => Ok(Sign::Plus),
                '-' => Ok(Sign::Minus),
                other => Err(TableauError::BadSign(other)),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Bitableau::new)
    }
}

impl fmt::Display for Bitableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.signs {
            write!(f, "{}", s.as_char())?;
        }
        Ok(())
    }
}

/// A walk `w_0 = 0, w_1, ..., w_n` with unit steps.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Walk {
    weights: Vec<i64>,
}

impl Walk {
    pub fn from_weights(weights: Vec<i64>) -> Result<Self, TableauError> {
        match weights.first() {
            None => return Err(TableauError::MalformedWalk("empty weight sequence".into())),
            Some(&w0) if w0 != 0 => {
                return Err(TableauError::MalformedWalk(format!(
                    "walk starts at {w0}, not 0"
                )))
            }
            _ => {}
        }
        if let Some(j) = weights.windows(2).position(|p| (p[1] - p[0]).abs() != 1) {
            return Err(TableauError::MalformedWalk(format!(
                "step {} goes from {} to {}",
                j + 1,
                weights[j],
                weights[j + 1]
            )));
        }
        Ok(Self { weights })
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    /// Number of steps.
    pub fn len(&self) -> usize {
        self.weights.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn end(&self) -> i64 {
        *self.weights.last().expect("walk has at least one vertex")
    }
}

impl FromStr for Walk {
    type Err = TableauError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let weights = s
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<i64>()
                    .map_err(|e| TableauError::MalformedWalk(format!("{x:?}: {e}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Walk::from_weights(weights)
    }
}

impl fmt::Display for Walk {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.weights.iter().map(i64::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

pub fn walk_of(t: &Bitableau) -> Walk {
    let mut weights = Vec::with_capacity(t.len() + 1);
    let mut w = 0;
    weights.push(w);
    for s in t.signs() {
        w += s.step();
        weights.push(w);
    }
    Walk { weights }
}

pub fn tableau_of(w: &Walk) -> Bitableau {
    Bitableau::new(
        w.weights
            .windows(2)
            .map(|p| if p[1] > p[0] { Sign::Plus } else { Sign::Minus })
            .collect(),
    )
}

/// The `⪰`-maximal bitableau `t^λ` of the given shape.
///
/// With `c = min(a, b)`: entries `<= 2c` alternate `-, +`, the rest all go
/// to the longer component.
pub fn t_lambda(shape: &OneLineBipartition) -> Bitableau {
    let c = shape.first().min(shape.second());
    let tail = if shape.first() >= shape.second() {
        Sign::Plus
    } else {
        Sign::Minus
    };
    let signs = (1..=shape.n())
        .map(|e| {
            if e > 2 * c {
                tail
            } else if e % 2 == 0 {
                Sign::Plus
            } else {
                Sign::Minus
            }
        })
        .collect();
    Bitableau::new(signs)
}

/// A residue sequence in `(Z/lZ)^n`, entries normalised into `0..l`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ResidueSequence(Vec<i64>);

impl ResidueSequence {
    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for ResidueSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A node `(1, column, component)` of a one-line bipartition; columns and
/// components are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Node {
    pub column: usize,
    pub component: u8,
}

impl Node {
    pub fn residue(&self, p: &BlobParams) -> i64 {
        let base = self.column as i64 - 1;
        match self.component {
            1 => p.residue(base + p.k()),
            _ => p.residue(base - p.k()),
        }
    }

    /// `self` is below `other` when it sits in a later column, or in the
    /// same column but the first component while `other` is in the second.
    pub fn is_below(&self, other: &Node) -> bool {
        self.column > other.column
            || (self.column == other.column && self.component == 1 && other.component == 2)
    }
}

pub fn residue_of_tableau(t: &Bitableau, p: &BlobParams) -> ResidueSequence {
    let (mut a, mut b) = (0usize, 0usize);
    let entries = t
        .signs()
        .iter()
        .map(|s| {
            let node = match s {
                Sign::Plus => {
                    a += 1;
                    Node {
                        column: a,
                        component: 1,
                    }
                }
                Sign::Minus => {
                    b += 1;
                    Node {
                        column: b,
                        component: 2,
                    }
                }
            };
            node.residue(p)
        })
        .collect();
    ResidueSequence(entries)
}

/// Residue of the `j`-th step of a walk from `prev` to `next`: the `r` with
/// `2r = j - 2 + (next - prev)(next + m) (mod l)`.
pub fn step_residue(j: usize, prev: i64, next: i64, p: &BlobParams) -> i64 {
    let half = (p.l() + 1) / 2;
    let twice = j as i64 - 2 + (next - prev) * (next + p.m());
    p.residue(p.residue(twice) * half)
}

pub fn residue_via_walk(w: &Walk, p: &BlobParams) -> ResidueSequence {
    ResidueSequence(
        w.weights
            .windows(2)
            .enumerate()
            .map(|(i, pair)| step_residue(i + 1, pair[0], pair[1], p))
            .collect(),
    )
}

/// The total order `⪰` on weights, as an `Ordering` of `x` against `y`:
/// closer to 0 is larger, and on a tie the negative weight is larger.
pub fn weight_order(x: i64, y: i64) -> Ordering {
    (-x.abs(), -x).cmp(&(-y.abs(), -y))
}

pub fn bipartition_order(
    lambda: &OneLineBipartition,
    mu: &OneLineBipartition,
) -> Result<Ordering, TableauError> {
    if lambda.n() != mu.n() {
        return Err(TableauError::SizeMismatch {
            left: lambda.n(),
            right: mu.n(),
        });
    }
    Ok(weight_order(lambda.weight(), mu.weight()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum TableauOrder {
    Greater,
    Less,
    Equal,
    Incomparable,
}

/// Levelwise comparison of the truncated shapes, levels `1..=n`.
pub fn tableau_order(s: &Bitableau, t: &Bitableau) -> Result<TableauOrder, TableauError> {
    if s.len() != t.len() {
        return Err(TableauError::SizeMismatch {
            left: s.len(),
            right: t.len(),
        });
    }
    let (ws, wt) = (walk_of(s), walk_of(t));
    let (mut ge, mut le) = (true, true);
    for (x, y) in ws.weights[1..].iter().zip(&wt.weights[1..]) {
        match weight_order(*x, *y) {
            Ordering::Greater => le = false,
            Ordering::Less => ge = false,
            Ordering::Equal => {}
        }
    }
    Ok(match (ge, le) {
        (true, true) => TableauOrder::Equal,
        (true, false) => TableauOrder::Greater,
        (false, true) => TableauOrder::Less,
        (false, false) => TableauOrder::Incomparable,
    })
}

/// Applies `s_r` (1-based `r`). Returns `None` when entries `r` and `r+1`
/// lie in the same component, since `s_r t` is then not standard and `t` is
/// left as it is.
pub fn apply_transposition(t: &Bitableau, r: usize) -> Result<Option<Bitableau>, TableauError> {
    if r == 0 || r >= t.len() {
        return Err(TableauError::BadPosition {
            r,
            max: t.len().saturating_sub(1),
        });
    }
    if t.signs[r - 1] == t.signs[r] {
        return Ok(None);
    }
    let mut signs = t.signs.clone();
    signs.swap(r - 1, r);
    Ok(Some(Bitableau::new(signs)))
}

/// Degree via addable and removable nodes of the same residue lying below
/// the node of each entry.
///
/// Recomputes the node sets at every level from the running component
/// sizes; this is the reference path the walk formula is checked against.
pub fn degree_g(t: &Bitableau, p: &BlobParams) -> i64 {
    let (mut a, mut b) = (0usize, 0usize);
    let mut total = 0;
    for s in t.signs() {
        let node = match s {
            Sign::Plus => {
                a += 1;
                Node {
                    column: a,
                    component: 1,
                }
            }
            Sign::Minus => {
                b += 1;
                Node {
                    column: b,
                    component: 2,
                }
            }
        };
        let res = node.residue(p);
        let addable = [
            Node {
                column: a + 1,
                component: 1,
            },
            Node {
                column: b + 1,
                component: 2,
            },
        ];
        let removable = [
            (a > 0).then_some(Node {
                column: a,
                component: 1,
            }),
            (b > 0).then_some(Node {
                column: b,
                component: 2,
            }),
        ];
        let counts = |n: &Node| n.is_below(&node) && n.residue(p) == res;
        let n_add = addable.iter().filter(|n| counts(n)).count() as i64;
        let n_rem = removable.iter().flatten().filter(|n| counts(n)).count() as i64;
        total += n_add - n_rem;
    }
    total
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeBreakdown {
    /// Steps leaving a wall toward the central axis (1-based).
    pub a_positions: Vec<usize>,
    /// Steps arriving at a wall toward the central axis (1-based).
    pub r_positions: Vec<usize>,
    pub degree: i64,
}

/// Degree as `|A_t| - |R_t|` read off the walk.
pub fn degree_walk(t: &Bitableau, p: &BlobParams) -> DegreeBreakdown {
    let w = walk_of(t);
    let wall = p.residue(-p.m());
    let (mut a_positions, mut r_positions) = (Vec::new(), Vec::new());
    for (i, pair) in w.weights.windows(2).enumerate() {
        let (prev, cur) = (pair[0], pair[1]);
        let (rp, rc) = (p.residue(prev), p.residue(cur));
        let j = i + 1;
        let leaves = rp == wall
            && ((cur < 0 && rc == p.residue(wall + 1)) || (cur > 0 && rc == p.residue(wall - 1)));
        let arrives = rc == wall
            && ((cur < 0 && rp == p.residue(wall - 1)) || (cur > 0 && rp == p.residue(wall + 1)));
        if leaves {
            a_positions.push(j);
        }
        if arrives {
            r_positions.push(j);
        }
    }
    let degree = a_positions.len() as i64 - r_positions.len() as i64;
    DegreeBreakdown {
        a_positions,
        r_positions,
        degree,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::validate_params;

    fn tab(s: &str) -> Bitableau {
        s.parse().unwrap()
    }

    fn params(l: i64, m: i64, n: i64) -> BlobParams {
        validate_params(l, m, n).unwrap()
    }

    #[test]
    fn walk_examples() {
        assert_eq!(walk_of(&tab("+-")).weights(), &[0, 1, 0]);
        assert_eq!(walk_of(&tab("+++")).weights(), &[0, 1, 2, 3]);
        assert_eq!(tableau_of(&"0,1,0".parse().unwrap()), tab("+-"));
    }

    #[test]
    fn malformed_walks() {
        assert!(matches!(
            "1,2".parse::<Walk>(),
            Err(TableauError::MalformedWalk(_))
        ));
        assert!(matches!(
            "0,2".parse::<Walk>(),
            Err(TableauError::MalformedWalk(_))
        ));
        assert!(matches!(
            "0,1,1".parse::<Walk>(),
            Err(TableauError::MalformedWalk(_))
        ));
        assert!(matches!(
            "0,x".parse::<Walk>(),
            Err(TableauError::MalformedWalk(_))
        ));
        assert_eq!("+*".parse::<Bitableau>(), Err(TableauError::BadSign('*')));
    }

    #[test]
    fn walk_bijection_is_exhaustive_at_ten() {
        for t in Bitableau::all(10) {
            let w = walk_of(&t);
            assert_eq!(tableau_of(&w), t);
            assert_eq!(t.shape().weight(), w.end());
            let shape = t.shape();
            assert_eq!(shape.first() + shape.second(), 10);
        }
    }

    #[test]
    fn t_lambda_examples() {
        let t = t_lambda(&OneLineBipartition::new(4, 2));
        assert_eq!(t.to_string(), "-+-+++");
        assert_eq!(walk_of(&t).weights(), &[0, -1, 0, -1, 0, 1, 2]);
        assert_eq!(t_lambda(&OneLineBipartition::new(0, 3)).to_string(), "---");
        assert_eq!(t_lambda(&OneLineBipartition::new(1, 1)).to_string(), "-+");
    }

    #[test]
    fn residue_examples() {
        let p = params(5, 2, 6);
        assert_eq!(
            residue_of_tableau(&tab("++++-+"), &p).entries(),
            &[1, 2, 3, 4, 4, 0]
        );
        assert_eq!(residue_of_tableau(&tab("+"), &p).entries(), &[1]);
        assert_eq!(residue_of_tableau(&tab("-"), &p).entries(), &[4]);
        assert_eq!(
            residue_via_walk(&"0,1".parse().unwrap(), &p).entries(),
            &[1]
        );
        assert_eq!(
            residue_via_walk(&"0,-1".parse().unwrap(), &p).entries(),
            &[4]
        );
    }

    #[test]
    fn residue_routes_agree_exhaustively() {
        for (l, m) in [(5, 2), (7, 3), (9, 4)] {
            let p = params(l, m, 12);
            for t in Bitableau::all(12) {
                assert_eq!(
                    residue_via_walk(&walk_of(&t), &p),
                    residue_of_tableau(&t, &p)
                );
            }
        }
    }

    #[test]
    fn bipartition_order_examples() {
        // f-values (-3, 7): |-3| < |7|.
        let a = OneLineBipartition::from_weight(-3, 7).unwrap();
        let b = OneLineBipartition::from_weight(7, 7).unwrap();
        assert_eq!(bipartition_order(&a, &b), Ok(Ordering::Greater));
        assert_eq!(weight_order(-3, 3), Ordering::Greater);
        assert_eq!(weight_order(3, -3), Ordering::Less);
        assert_eq!(weight_order(5, 5), Ordering::Equal);
        let c = OneLineBipartition::new(1, 1);
        assert_eq!(
            bipartition_order(&a, &c),
            Err(TableauError::SizeMismatch { left: 7, right: 2 })
        );
    }

    #[test]
    fn tableau_order_examples() {
        let s = tab("++++-+");
        let t = tab("+++++-");
        assert_eq!(tableau_order(&s, &t), Ok(TableauOrder::Greater));
        assert_eq!(tableau_order(&t, &s), Ok(TableauOrder::Less));
        assert_eq!(tableau_order(&s, &s), Ok(TableauOrder::Equal));
        assert!(tableau_order(&s, &tab("+")).is_err());
        // Partial order: level 1 prefers "-", level 3 prefers the other walk.
        assert_eq!(
            tableau_order(&tab("-----"), &tab("++-+-")),
            Ok(TableauOrder::Incomparable)
        );
    }

    #[test]
    fn t_lambda_is_unique_maximum() {
        for n in 1..=10 {
            for a in 0..=n {
                let shape = OneLineBipartition::new(a, n - a);
                let top = t_lambda(&shape);
                for t in Bitableau::standard_of_shape(&shape) {
                    let want = if t == top {
                        TableauOrder::Equal
                    } else {
                        TableauOrder::Greater
                    };
                    assert_eq!(tableau_order(&top, &t), Ok(want), "shape {shape} t {t}");
                }
            }
        }
    }

    #[test]
    fn transposition_examples() {
        let s = tab("++++-+");
        assert_eq!(apply_transposition(&s, 5), Ok(Some(tab("+++++-"))));
        assert_eq!(apply_transposition(&tab("++"), 1), Ok(None));
        assert_eq!(
            apply_transposition(&s, 6),
            Err(TableauError::BadPosition { r: 6, max: 5 })
        );
        assert!(apply_transposition(&s, 0).is_err());
        let once = apply_transposition(&s, 5).unwrap().unwrap();
        assert_eq!(apply_transposition(&once, 5), Ok(Some(s)));
    }

    #[test]
    fn degree_examples() {
        let p = params(5, 2, 6);
        assert_eq!(degree_g(&tab("++++-+"), &p), -1);
        assert_eq!(degree_g(&tab("+++++-"), &p), 0);
        let br = degree_walk(&tab("++++-+"), &p);
        assert!(br.a_positions.is_empty());
        assert_eq!(br.r_positions, vec![5]);
        assert_eq!(br.degree, -1);
        let br = degree_walk(&tab("+-"), &p);
        assert_eq!(
            (br.a_positions.len(), br.r_positions.len(), br.degree),
            (0, 0, 0)
        );
    }

    #[test]
    fn degree_routes_agree_exhaustively() {
        for (l, m) in [(5, 2), (7, 3)] {
            let p = params(l, m, 12);
            for t in Bitableau::all(12) {
                let br = degree_walk(&t, &p);
                assert_eq!(degree_g(&t, &p), br.degree, "t = {t}");
                assert!(br.a_positions.iter().all(|j| !br.r_positions.contains(j)));
            }
        }
    }

    #[test]
    fn t_lambda_has_degree_zero() {
        for (l, m) in [(5, 2), (7, 3), (7, 5)] {
            for n in 1..=12 {
                let p = params(l, m, n as i64);
                for a in 0..=n {
                    let t = t_lambda(&OneLineBipartition::new(a, n - a));
                    assert_eq!(degree_g(&t, &p), 0);
                    let br = degree_walk(&t, &p);
                    assert!(br.a_positions.is_empty() && br.r_positions.is_empty());
                }
            }
        }
    }

    // For s ≻ t = s_r s: g(t) - g(s) = deg(psi_r e(i^s)) = -a_{i_r, i_{r+1}}.
    #[test]
    fn transposition_degree_delta_law() {
        for (l, m) in [(5, 2), (7, 3)] {
            for n in 2..=10 {
                let p = params(l, m, n as i64);
                for t in Bitableau::all(n) {
                    for r in 1..n {
                        let Some(u) = apply_transposition(&t, r).unwrap() else {
                            continue;
                        };
                        let (big, small) = match tableau_order(&t, &u).unwrap() {
                            TableauOrder::Greater => (&t, &u),
                            TableauOrder::Less => (&u, &t),
                            other => panic!("{t} and {u} compare as {other:?}"),
                        };
                        let i = residue_of_tableau(big, &p);
                        let (ir, ir1) = (i.entries()[r - 1], i.entries()[r]);
                        assert_eq!(
                            degree_g(small, &p) - degree_g(big, &p),
                            -p.cartan_entry(ir, ir1),
                            "s = {big}, r = {r}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn t_lambda_unique_in_its_residue_class_within_shape() {
        for (l, m) in [(5, 2), (7, 3)] {
            for n in 1..=10 {
                let p = params(l, m, n as i64);
                for a in 0..=n {
                    let shape = OneLineBipartition::new(a, n - a);
                    let target = residue_of_tableau(&t_lambda(&shape), &p);
                    let hits = Bitableau::standard_of_shape(&shape)
                        .iter()
                        .filter(|t| residue_of_tableau(t, &p) == target)
                        .count();
                    assert_eq!(hits, 1);
                }
            }
        }
    }

    #[test]
    fn standard_of_shape_counts() {
        let s = Bitableau::standard_of_shape(&OneLineBipartition::new(3, 2));
        assert_eq!(s.len(), 10);
        assert!(s.windows(2).all(|w| w[0] < w[1]));
        assert!(s.iter().all(|t| t.shape() == OneLineBipartition::new(3, 2)));
    }
}
