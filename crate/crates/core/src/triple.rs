//! Hyperbolic triples of integers and their componentwise partial order.

use serde::Serialize;

use crate::error::Error;
use crate::rational::Rational;

/// A validated hyperbolic triple: 2 <= a <= b <= c with 1/a + 1/b + 1/c < 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct HyperbolicTriple {
    a: u64,
    b: u64,
    c: u64,
}

impl HyperbolicTriple {
    /// Sorts the entries and checks hyperbolicity; rejections cite the
    /// exact value of mu = 1/a + 1/b + 1/c.
    pub fn new(a: u64, b: u64, c: u64) -> Result<Self, Error> {
        let mut v = [a, b, c];
        v.sort_unstable();
        let [a, b, c] = v;
        if a < 2 {
            return Err(Error::NotHyperbolic {
                a,
                b,
                c,
                reason: "all entries must be at least 2".into(),
            });
        }
        // 1/a + 1/b + 1/c < 1  <=>  bc + ac + ab < abc, exactly.
        let lhs = (b as u128) * (c as u128) + (a as u128) * (c as u128) + (a as u128) * (b as u128);
        let rhs = (a as u128) * (b as u128) * (c as u128);
        if lhs >= rhs {
            let t = HyperbolicTriple { a, b, c };
            return Err(Error::NotHyperbolic {
                a,
                b,
                c,
                reason: format!("mu = {} >= 1", t.mu_unchecked()),
            });
        }
        Ok(HyperbolicTriple { a, b, c })
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn b(&self) -> u64 {
        self.b
    }

    pub fn c(&self) -> u64 {
        self.c
    }

    pub fn entries(&self) -> [u64; 3] {
        [self.a, self.b, self.c]
    }

    /// mu = 1/a + 1/b + 1/c as an exact rational; at most 41/42.
    pub fn mu(&self) -> Rational {
        self.mu_unchecked()
    }

    fn mu_unchecked(&self) -> Rational {
        Rational::new(1, self.a as i64)
            + Rational::new(1, self.b as i64)
            + Rational::new(1, self.c as i64)
    }

    /// Componentwise partial order on sorted triples.
    pub fn dominates(&self, other: &HyperbolicTriple) -> bool {
        self.a >= other.a && self.b >= other.b && self.c >= other.c
    }

    /// The three minimal hyperbolic triples; every hyperbolic triple
    /// dominates at least one of them.
    pub fn minimal_triples() -> [HyperbolicTriple; 3] {
        [
            HyperbolicTriple { a: 2, b: 3, c: 7 },
            HyperbolicTriple { a: 2, b: 4, c: 5 },
            HyperbolicTriple { a: 3, b: 3, c: 4 },
        ]
    }

    /// All hyperbolic triples with c <= cap, in lexicographic order.
    pub fn enumerate_up_to(cap: u64) -> Vec<HyperbolicTriple> {
        let mut out = Vec::new();
        for a in 2..=cap {
            for b in a..=cap {
                for c in b..=cap {
                    if let Ok(t) = HyperbolicTriple::new(a, b, c) {
                        out.push(t);
                    }
                }
            }
        }
        out
    }
}

impl std::fmt::Display for HyperbolicTriple {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{},{})", self.a, self.b, self.c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sorts_input() {
        let t = HyperbolicTriple::new(7, 3, 2).unwrap();
        assert_eq!(t.entries(), [2, 3, 7]);
    }

    #[test]
    fn rejects_euclidean_triple_citing_mu() {
        let err = HyperbolicTriple::new(2, 3, 6).unwrap_err();
        match err {
            Error::NotHyperbolic { reason, .. } => assert!(reason.contains("mu = 1")),
            other => panic!("unexpected error {other:?}"),
        }
        assert!(HyperbolicTriple::new(3, 3, 3).is_err());
        assert!(HyperbolicTriple::new(2, 2, 100).is_err());
        assert!(HyperbolicTriple::new(1, 8, 9).is_err());
    }

    #[test]
    fn mu_upper_bound_attained_only_at_237() {
        let t = HyperbolicTriple::new(2, 3, 7).unwrap();
        assert_eq!(t.mu(), Rational::new(41, 42));
        for t in HyperbolicTriple::enumerate_up_to(30) {
            assert!(t.mu() <= Rational::new(41, 42), "{t}");
            if t.mu() == Rational::new(41, 42) {
                assert_eq!(t.entries(), [2, 3, 7]);
            }
        }
    }

    #[test]
    fn minimal_triples_are_minimal_and_dominating() {
        let minimal = HyperbolicTriple::minimal_triples();
        let m245 = minimal[1];
        for other in [minimal[0], minimal[2]] {
            assert!(!m245.dominates(&other));
            assert!(!other.dominates(&m245));
        }
        for t in HyperbolicTriple::enumerate_up_to(40) {
            assert!(
                minimal.iter().any(|m| t.dominates(m)),
                "{t} dominates no minimal triple"
            );
            assert!(
                minimal.iter().all(|m| !m.dominates(&t) || *m == t),
                "{t} strictly below a minimal triple"
            );
        }
    }
}
