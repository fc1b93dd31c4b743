//! Brute-force reference computations.
//!
//! Everything here is built from the tableau combinatorics alone: residue
//! classes come from a depth-first search over walks, graded dimensions
//! from summing `t^deg` over class members, and decomposition numbers from
//! solving the unitriangular system those dimensions satisfy. None of it
//! touches the alcove skeleton or the closed forms in [`crate::repdims`].

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::OracleError;
use crate::laurent::LaurentPoly;
use crate::params::BlobParams;
use crate::tableaux::{
    degree_g, residue_of_tableau, step_residue, t_lambda, tableau_of, weight_order, Bitableau,
    OneLineBipartition, ResidueSequence, Walk,
};

/// Largest `p + q` accepted by [`oracle_count_std`].
pub const STD_COUNT_BOUND: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassMember {
    pub tableau: Bitableau,
    pub degree: i64,
    pub weight: i64,
}

/// `Std(i^λ)`: all standard bitableaux sharing the residue sequence of `t^λ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueClass {
    pub target: ResidueSequence,
    /// Lexicographic in the sign sequence.
    pub members: Vec<ClassMember>,
}

impl ResidueClass {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Shapes occurring in the class, as weights.
    pub fn shapes(&self) -> BTreeSet<i64> {
        self.members.iter().map(|m| m.weight).collect()
    }

    /// `Σ t^deg` over members of shape `mu`.
    pub fn graded_count(&self, mu: i64) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for m in self.members.iter().filter(|m| m.weight == mu) {
            out.add_term(m.degree, BigInt::from(1));
        }
        out
    }
}

pub fn enumerate_residue_class(lambda: i64, p: &BlobParams) -> Result<ResidueClass, OracleError> {
    let shape = OneLineBipartition::from_weight(lambda, p.n())?;
    let target = residue_of_tableau(&t_lambda(&shape), p);
    let mut found = Vec::new();
    let mut weights = vec![0i64];
    extend(&mut weights, target.entries(), p, &mut found);
    let members = found
        .into_iter()
        .map(|w| {
            let tableau = tableau_of(&Walk::from_weights(w).expect("unit steps"));
            ClassMember {
                degree: degree_g(&tableau, p),
                weight: tableau.weight(),
                tableau,
            }
        })
        .collect();
    Ok(ResidueClass { target, members })
}

// `+1` is tried before `-1`, so walks come out in lexicographic sign order.
fn extend(weights: &mut Vec<i64>, target: &[i64], p: &BlobParams, out: &mut Vec<Vec<i64>>) {
    let j = weights.len();
    if j > target.len() {
        out.push(weights.clone());
        return;
    }
    let prev = weights[j - 1];
    for next in [prev + 1, prev - 1] {
        if step_residue(j, prev, next, p) == target[j - 1] {
            weights.push(next);
            extend(weights, target, p, out);
            weights.pop();
        }
    }
}

/// `Σ t^deg(s)` over `s ∈ Std(μ)` with `i^s = i^λ`.
pub fn oracle_cell_dim_subalgebra(
    lambda: i64,
    mu: i64,
    p: &BlobParams,
) -> Result<LaurentPoly, OracleError> {
    OneLineBipartition::from_weight(mu, p.n())?;
    Ok(enumerate_residue_class(lambda, p)?.graded_count(mu))
}

/// Number of standard fillings of the two-row shape `(p, q)`, by listing
/// every arrangement of row labels and keeping the lattice words.
pub fn oracle_count_std(p: usize, q: usize) -> Result<u64, OracleError> {
    if q > p {
        return Err(OracleError::NotAPartition { p, q });
    }
    if p + q > STD_COUNT_BOUND {
        return Err(OracleError::TooLarge {
            p,
            q,
            bound: STD_COUNT_BOUND,
        });
    }
    let total = p + q;
    let count = (0u32..1 << total)
        .filter(|mask| mask.count_ones() as usize == q)
        .filter(|mask| {
            let mut height = 0i64;
            (0..total).all(|i| {
                height += if mask >> i & 1 == 1 { -1 } else { 1 };
                height >= 0
            })
        })
        .count();
    Ok(count as u64)
}

/// Recovers decomposition columns from oracle cell dimensions, memoizing
/// columns and classes across weights of one `n`.
///
/// For `ν` in the class of `λ`, processed in increasing `⪰` order,
/// `dim Δ_λ(ν) = Σ_{ν'} [Δ(ν):L(ν')] dim L_λ(ν')`. Simples are assumed to
/// live in degree 0 and off-diagonal entries to have no constant term, so
/// the constant term of `dim Δ_λ(ν)` is `dim L_λ(ν)` and the rest, after
/// removing contributions of earlier `ν'`, is `[Δ(ν):L(λ)]`.
pub struct RecoverySolver {
    params: BlobParams,
    classes: HashMap<i64, ResidueClass>,
    columns: HashMap<i64, BTreeMap<i64, LaurentPoly>>,
}

impl RecoverySolver {
    pub fn new(params: BlobParams) -> Self {
        Self {
            params,
            classes: HashMap::new(),
            columns: HashMap::new(),
        }
    }

    fn class(&mut self, lambda: i64) -> Result<&ResidueClass, OracleError> {
        if !self.classes.contains_key(&lambda) {
            let class = enumerate_residue_class(lambda, &self.params)?;
            self.classes.insert(lambda, class);
        }
        Ok(&self.classes[&lambda])
    }

    /// Nonzero entries `[Δ(ν):L(λ)]`, keyed by `ν`.
    pub fn column(&mut self, lambda: i64) -> Result<BTreeMap<i64, LaurentPoly>, OracleError> {
        if let Some(col) = self.columns.get(&lambda) {
            return Ok(col.clone());
        }
        let class = self.class(lambda)?.clone();
        let mut order: Vec<i64> = class.shapes().into_iter().collect();
        order.sort_by(|a, b| weight_order(*a, *b));
        if order.first() != Some(&lambda) {
            return Err(OracleError::NotSolvable {
                lambda,
                mu: lambda,
                reason: "lambda is not the least shape of its class".into(),
            });
        }
        let mut simple: BTreeMap<i64, BigInt> = BTreeMap::new();
        let mut col = BTreeMap::new();
        for (pos, &nu) in order.iter().enumerate() {
            let cell = class.graded_count(nu);
            let s = cell.constant_term();
            if pos == 0 {
                if !cell.is_one() {
                    return Err(OracleError::NotSolvable {
                        lambda,
                        mu: nu,
                        reason: format!("dim Delta_lambda(lambda) = {cell}, expected 1"),
                    });
                }
                simple.insert(nu, s);
                col.insert(nu, LaurentPoly::one());
                continue;
            }
            let mut residual = &cell - &LaurentPoly::from(s.clone());
            for &earlier in &order[1..pos] {
                let ds = simple[&earlier].clone();
                if ds.is_zero() {
                    continue;
                }
                let entry = self
                    .column(earlier)?
                    .get(&nu)
                    .cloned()
                    .unwrap_or_else(LaurentPoly::zero);
                residual = &residual - &entry.scale(&ds);
            }
            if !residual.has_nonnegative_coeffs() || !residual.constant_term().is_zero() {
                return Err(OracleError::NotSolvable {
                    lambda,
                    mu: nu,
                    reason: format!("residual {residual} is not a nonnegative polynomial in tZ[t]"),
                });
            }
            simple.insert(nu, s);
            if !residual.is_zero() {
                col.insert(nu, residual);
            }
        }
        self.columns.insert(lambda, col.clone());
        Ok(col)
    }
}

/// `[Δ(ν):L(λ)]` for every `ν` with a nonzero entry.
pub fn oracle_decomposition_column(
    lambda: i64,
    p: &BlobParams,
) -> Result<BTreeMap<i64, LaurentPoly>, OracleError> {
    OneLineBipartition::from_weight(lambda, p.n())?;
    RecoverySolver::new(*p).column(lambda)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::validate_params;
    use crate::tableaux::degree_walk;

    fn params(l: i64, m: i64, n: usize) -> BlobParams {
        validate_params(l, m, n as i64).unwrap()
    }

    fn poly(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn class_examples() {
        let p = params(5, 2, 13);
        let class = enumerate_residue_class(-13, &p).unwrap();
        assert_eq!(class.shapes(), BTreeSet::from([-13, -11, -3, -1, 7, 9]));
        let class = enumerate_residue_class(0, &params(5, 2, 10)).unwrap();
        assert_eq!(class.len(), 1);
        assert_eq!(
            class.members[0].tableau,
            t_lambda(&OneLineBipartition::from_weight(0, 10).unwrap())
        );
    }

    // Filter over all 2^n sign sequences; the DFS must find exactly these.
    #[test]
    fn dfs_matches_exhaustive_filter() {
        for (l, m) in [(5, 2), (7, 3)] {
            let p = params(l, m, 12);
            for lam in p.weights() {
                let class = enumerate_residue_class(lam, &p).unwrap();
                let want: Vec<Bitableau> = Bitableau::all(12)
                    .filter(|t| residue_of_tableau(t, &p) == class.target)
                    .collect();
                let got: Vec<Bitableau> = class.members.iter().map(|m| m.tableau.clone()).collect();
                assert_eq!(got, want, "l={l} m={m} λ={lam}");
            }
        }
    }

    #[test]
    fn cell_dim_examples() {
        let p = params(5, 2, 16);
        assert_eq!(
            oracle_cell_dim_subalgebra(-16, 2, &p).unwrap(),
            poly(&[(3, 1), (1, 1)])
        );
        assert_eq!(
            oracle_cell_dim_subalgebra(-16, -16, &p).unwrap(),
            LaurentPoly::one()
        );
        assert!(oracle_cell_dim_subalgebra(-16, 0, &p).unwrap().is_zero());
        assert!(oracle_cell_dim_subalgebra(-16, 3, &p).is_err());
    }

    #[test]
    fn member_count_is_sum_of_dims_and_degrees_agree() {
        let p = params(7, 3, 14);
        for lam in p.weights() {
            let class = enumerate_residue_class(lam, &p).unwrap();
            let total: BigInt = class
                .shapes()
                .iter()
                .map(|mu| class.graded_count(*mu).eval_at_one())
                .sum();
            assert_eq!(total, BigInt::from(class.len()));
            for m in &class.members {
                assert_eq!(degree_walk(&m.tableau, &p).degree, m.degree);
            }
        }
    }

    fn binom(n: u64, k: u64) -> i64 {
        (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1)) as i64
    }

    #[test]
    fn std_counts() {
        assert_eq!(oracle_count_std(2, 1), Ok(2));
        assert_eq!(oracle_count_std(3, 3), Ok(5));
        assert_eq!(oracle_count_std(7, 0), Ok(1));
        assert_eq!(
            oracle_count_std(1, 2),
            Err(OracleError::NotAPartition { p: 1, q: 2 })
        );
        assert_eq!(
            oracle_count_std(11, 10),
            Err(OracleError::TooLarge {
                p: 11,
                q: 10,
                bound: 20
            })
        );
        for total in 0..=12u64 {
            for q in 0..=total / 2 {
                let below = if q == 0 { 0 } else { binom(total, q - 1) };
                let want = binom(total, q) - below;
                assert_eq!(
                    oracle_count_std((total - q) as usize, q as usize),
                    Ok(want as u64)
                );
            }
        }
    }

    #[test]
    fn recovery_examples() {
        let p = params(5, 2, 16);
        let col = oracle_decomposition_column(-16, &p).unwrap();
        let want = BTreeMap::from([
            (-16, LaurentPoly::one()),
            (12, poly(&[(1, 1)])),
            (-8, poly(&[(1, 1)])),
            (4, poly(&[(2, 1)])),
            (-6, poly(&[(2, 1)])),
            (2, poly(&[(3, 1)])),
        ]);
        assert_eq!(col, want);
        let p = params(5, 2, 12);
        let col = oracle_decomposition_column(-12, &p).unwrap();
        let want = BTreeMap::from([
            (-12, LaurentPoly::one()),
            (8, poly(&[(1, 1)])),
            (-2, poly(&[(2, 1)])),
        ]);
        assert_eq!(col, want);
        let col = oracle_decomposition_column(0, &params(5, 2, 10)).unwrap();
        assert_eq!(col, BTreeMap::from([(0, LaurentPoly::one())]));
    }
}
