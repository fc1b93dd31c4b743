//! Numeric parameters of `b_n(q, m)`.
//!
//! The root of unity `q` only enters through its quantum characteristic `l`.
//! The standing hypotheses on `(q, m)` translate into: `l` odd and at least
//! 3, and `2 <= m <= l - 2`.

use serde::{Deserialize, Serialize};

use crate::error::ParamError;

/// A validated parameter bundle `(l, m, k, n)` with `2k = m (mod l)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BlobParams {
    l: i64,
    m: i64,
    k: i64,
    n: usize,
}

/// Checks `(l, m, n)` and computes `k`.
///
/// `l` is checked first, then `m`, then `n`; the first failure wins. With
/// `l = 3` no `m` survives, so that case is rejected as `MOutOfRange`.
pub fn validate_params(l: i64, m: i64, n: i64) -> Result<BlobParams, ParamError> {
    if l < 3 || l % 2 == 0 {
        return Err(ParamError::EvenOrSmallL { l });
    }
    // m = 1 and m = l-1 make 2m-2 resp. 2m+2 divisible by l.
    if m <= 1 || m >= l - 1 {
        return Err(ParamError::MOutOfRange { l, m });
    }
    if n < 1 {
        return Err(ParamError::BadN { n });
    }
    Ok(BlobParams {
        l,
        m,
        k: solve_k(l, m),
        n: n as usize,
    })
}

/// The unique residue `k` in `0..l` with `2k = m (mod l)`, for odd `l`.
pub fn solve_k(l: i64, m: i64) -> i64 {
    // (l+1)/2 is the inverse of 2 modulo an odd l.
    (m.rem_euclid(l) * ((l + 1) / 2)).rem_euclid(l)
}

/// Entry `a_{ij}` of the type `A^{(1)}_{l-1}` Cartan matrix on `Z/lZ`.
pub fn cartan_entry(l: i64, i: i64, j: i64) -> i64 {
    let d = (i - j).rem_euclid(l);
    if d == 0 {
        2
    } else if d == 1 || d == l - 1 {
        -1
    } else {
        0
    }
}

impl BlobParams {
    pub fn l(&self) -> i64 {
        self.l
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The same `(l, m)` at a different number of strands.
    pub fn with_n(&self, n: usize) -> Self {
        assert!(n >= 1, "n must be positive");
        Self { n, ..*self }
    }

    pub fn cartan_entry(&self, i: i64, j: i64) -> i64 {
        cartan_entry(self.l, i, j)
    }

    /// Reduces an integer into `0..l`.
    pub fn residue(&self, x: i64) -> i64 {
        x.rem_euclid(self.l)
    }

    /// The weights `-n, -n+2, ..., n`, ascending.
    pub fn weights(&self) -> Vec<i64> {
        let n = self.n as i64;
        (0..=n).map(|i| -n + 2 * i).collect()
    }

    pub fn contains_weight(&self, w: i64) -> bool {
        let n = self.n as i64;
        w.abs() <= n && (w - n).rem_euclid(2) == 0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn validation_examples() {
        let p = validate_params(5, 2, 13).unwrap();
        assert_eq!((p.l(), p.m(), p.k(), p.n()), (5, 2, 1, 13));
        assert_eq!(
            validate_params(5, 1, 4),
            Err(ParamError::MOutOfRange { l: 5, m: 1 })
        );
        assert_eq!(
            validate_params(4, 2, 6),
            Err(ParamError::EvenOrSmallL { l: 4 })
        );
        assert_eq!(
            validate_params(5, 4, 6),
            Err(ParamError::MOutOfRange { l: 5, m: 4 })
        );
        assert_eq!(
            validate_params(1, 2, 6),
            Err(ParamError::EvenOrSmallL { l: 1 })
        );
        assert_eq!(validate_params(7, 3, 0), Err(ParamError::BadN { n: 0 }));
        for m in -2..6 {
            assert!(matches!(
                validate_params(3, m, 3),
                Err(ParamError::MOutOfRange { .. })
            ));
        }
    }

    // Brute-force restatement of the four conditions on q, checked through
    // the exponents of q modulo l: q^4 != 1, q^{2m} != 1, q^{2m-2} != 1,
    // q^{2m+2} != 1.
    fn hypotheses_hold(l: i64, m: i64) -> bool {
        [4, 2 * m, 2 * m - 2, 2 * m + 2]
            .iter()
            .all(|e| e.rem_euclid(l) != 0)
    }

    #[test]
    fn validation_matches_divisibility_conditions() {
        for l in (3..=21).step_by(2) {
            for m in 1..l {
                assert_eq!(
                    validate_params(l, m, 4).is_ok(),
                    hypotheses_hold(l, m),
                    "l={l} m={m}"
                );
            }
        }
    }

    #[test]
    fn solve_k_examples() {
        assert_eq!(solve_k(5, 2), 1);
        assert_eq!(solve_k(7, 3), 5);
        assert_eq!(solve_k(9, 4), 2);
    }

    #[test]
    fn cartan_examples() {
        assert_eq!(cartan_entry(5, 4, 0), -1);
        assert_eq!(cartan_entry(5, 2, 2), 2);
        assert_eq!(cartan_entry(5, 1, 3), 0);
    }

    #[test]
    fn weights_of_level() {
        let p = validate_params(5, 2, 3).unwrap();
        assert_eq!(p.weights(), vec![-3, -1, 1, 3]);
        assert!(p.contains_weight(-1));
        assert!(!p.contains_weight(0));
        assert!(!p.contains_weight(5));
    }

    proptest! {
        #[test]
        fn k_solves_congruence(half in 1i64..20, m_raw in 0i64..100) {
            let l = 2 * half + 1;
            let m = 1 + m_raw % (l - 1);
            let k = solve_k(l, m);
            prop_assert!((0..l).contains(&k));
            prop_assert_eq!((2 * k).rem_euclid(l), m.rem_euclid(l));
        }

        #[test]
        fn cartan_is_symmetric(half in 1i64..20, i in 0i64..41, j in 0i64..41) {
            let l = 2 * half + 1;
            let (i, j) = (i % l, j % l);
            prop_assert_eq!(cartan_entry(l, i, j), cartan_entry(l, j, i));
        }
    }
}
