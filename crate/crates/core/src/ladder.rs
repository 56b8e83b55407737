//! The saturation decision procedure: SO(3)-density of the base point,
//! subgroup ladders from the principal homomorphism up to the target type,
//! and the floor-sum criterion deciding whether each ladder step strictly
//! increases dim H^1.

use serde::Serialize;

use crate::dynkin::{DynkinType, Family};
use crate::error::Error;
use crate::root_system;
use crate::triple::HyperbolicTriple;
use crate::weil;

/// The six hyperbolic triples without SO(3)-dense representations.
pub const SO3_EXCLUDED: [(u64, u64, u64); 6] = [
    (2, 4, 6),
    (2, 6, 6),
    (2, 6, 10),
    (3, 4, 4),
    (3, 6, 6),
    (4, 6, 12),
];

/// True unless the triple is one of the six members of the excluded set S
/// (an imported fact, hardcoded).
pub fn so3_dense(t: HyperbolicTriple) -> bool {
    let [a, b, c] = t.entries();
    !SO3_EXCLUDED.contains(&(a, b, c))
}

/// Validated triple constructor; the CLI-facing name for
/// [`HyperbolicTriple::new`].
pub fn validate_triple(a: u64, b: u64, c: u64) -> Result<HyperbolicTriple, Error> {
    HyperbolicTriple::new(a, b, c)
}

/// The three minimal hyperbolic triples under the componentwise order.
pub fn minimal_triples() -> [HyperbolicTriple; 3] {
    HyperbolicTriple::minimal_triples()
}

/// A subgroup chain from the group receiving the SO(3) base point up to
/// the target type. Direct types have a one-element chain. A_1 has no
/// chain at all (the principal point is the whole group and rigid).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LadderChain {
    pub target: DynkinType,
    pub steps: Vec<DynkinType>,
}

impl LadderChain {
    /// The chain for a type, or `None` for A_1.
    pub fn for_type(target: DynkinType) -> Option<LadderChain> {
        let t = |s: &str| s.parse::<DynkinType>().unwrap();
        let mid = |f: Family, r: u32| DynkinType::new(f, r).unwrap();
        let r = target.rank();
        let steps: Vec<DynkinType> = match target.family() {
            Family::A => match r {
                1 => return None,
                2 => vec![target],
                6 => vec![t("G_2"), t("B_3"), target],
                _ if r.is_multiple_of(2) => vec![mid(Family::B, r / 2), target],
                _ => vec![mid(Family::C, r.div_ceil(2)), target],
            },
            // B_2 is C_2 and a direct type; B_3 climbs through G_2.
            Family::B => match r {
                2 => vec![target],
                3 => vec![t("G_2"), target],
                _ => vec![target],
            },
            Family::C => vec![target],
            Family::D => match r {
                4 => vec![t("G_2"), t("B_3"), target],
                _ => vec![mid(Family::B, r - 1), target],
            },
            Family::E => match r {
                6 => vec![t("F_4"), target],
                _ => vec![target],
            },
            Family::F | Family::G => vec![target],
        };
        let chain = LadderChain { target, steps };
        chain.check_exponent_containment();
        Some(chain)
    }

    /// The first group of the chain, the one receiving the SO(3) base
    /// point directly.
    pub fn base(&self) -> DynkinType {
        self.steps[0]
    }

    /// Consecutive (subgroup, overgroup) pairs.
    pub fn step_pairs(&self) -> Vec<(DynkinType, DynkinType)> {
        self.steps.windows(2).map(|w| (w[0], w[1])).collect()
    }

    fn check_exponent_containment(&self) {
        for (sub, whole) in self.step_pairs() {
            assert!(
                exponent_difference(whole, sub).is_ok(),
                "chain step {sub} -> {whole} violates exponent containment"
            );
        }
    }
}

/// Multiset difference of exponent lists: exponents of `whole` minus
/// exponents of `sub`. Errors unless the latter is a sub-multiset.
pub fn exponent_difference(whole: DynkinType, sub: DynkinType) -> Result<Vec<u64>, Error> {
    let mut rest = root_system::exponents(whole);
    for e in root_system::exponents(sub) {
        match rest.iter().position(|&x| x == e) {
            Some(idx) => {
                rest.remove(idx);
            }
            None => {
                return Err(Error::InvalidChainStep {
                    sub: sub.to_string(),
                    whole: whole.to_string(),
                })
            }
        }
    }
    Ok(rest)
}

/// Both sides of the strict floor-sum inequality for one ladder step, with
/// E the exponent multiset difference:
/// L = sum over k, e in E of floor(e / n_k); R = sum(E) - |E|.
/// `strict` (L < R) holds exactly when dim H^1 strictly increases along
/// the step; the increase is 2(R - L).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LrResult {
    pub l: u64,
    pub r: u64,
    pub strict: bool,
}

pub fn lr_criterion(
    whole: DynkinType,
    sub: DynkinType,
    t: HyperbolicTriple,
) -> Result<LrResult, Error> {
    let diff = exponent_difference(whole, sub)?;
    Ok(lr_from_difference(&diff, t))
}

fn lr_from_difference(diff: &[u64], t: HyperbolicTriple) -> LrResult {
    let l: u64 = t
        .entries()
        .iter()
        .map(|&n| diff.iter().map(|&e| e / n).sum::<u64>())
        .sum();
    let r: u64 = diff.iter().sum::<u64>() - diff.len() as u64;
    LrResult {
        l,
        r,
        strict: l < r,
    }
}

/// Structured first-failure code for a non-saturated verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Reason {
    /// The triple is in the excluded set S: no SO(3)-dense base point.
    InS,
    /// Type A_1: the base representation is already rigid.
    RankOne,
    /// dim H^1 vanishes on the first chain group.
    BaseH1Zero { group: DynkinType },
    /// The A_2 base failure (exactly the a = 2 vanishing case).
    A2aTwo,
    /// The ladder step of this index has L = R, so H^1 does not grow.
    StepEquality {
        index: usize,
        from: DynkinType,
        to: DynkinType,
    },
}

impl Reason {
    pub fn token(&self) -> &'static str {
        match self {
            Reason::InS => "s",
            Reason::RankOne => "rank1",
            Reason::BaseH1Zero { .. } | Reason::A2aTwo => "base",
            Reason::StepEquality { .. } => "step",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SaturationOutcome {
    Saturated,
    PossibleException,
}

/// One evaluated ladder step in the audit trace.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct StepRecord {
    pub from: DynkinType,
    pub to: DynkinType,
    pub l: u64,
    pub r: u64,
    pub strict: bool,
}

/// Everything the decision looked at, recorded regardless of where it
/// first failed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SaturationTrace {
    pub in_s: bool,
    pub chain: Vec<DynkinType>,
    /// dim H^1 at the principal point of the first chain group.
    pub base_h1: Option<u64>,
    pub steps: Vec<StepRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SaturationVerdict {
    pub target: DynkinType,
    pub triple: HyperbolicTriple,
    pub outcome: SaturationOutcome,
    /// First failing condition in the fixed order
    /// (InS, RankOne, base vanishing, step equality by index).
    pub reason: Option<Reason>,
    pub trace: SaturationTrace,
}

impl SaturationVerdict {
    pub fn is_saturated(&self) -> bool {
        self.outcome == SaturationOutcome::Saturated
    }
}

/// Decide saturation of T with finite quotients of the given type.
/// Saturated requires: the triple outside S, type not A_1, positive
/// principal H^1 on the base group, and strict L < R at every chain step.
pub fn saturation(target: DynkinType, t: HyperbolicTriple) -> SaturationVerdict {
    let in_s = !so3_dense(t);
    let chain = LadderChain::for_type(target);

    let (chain_types, base_h1, steps) = match &chain {
        None => (Vec::new(), None, Vec::new()),
        Some(chain) => {
            let base_h1 = weil::principal_h1(chain.base(), t);
            let steps: Vec<StepRecord> = chain
                .step_pairs()
                .into_iter()
                .map(|(sub, whole)| {
                    let lr = lr_criterion(whole, sub, t).expect("chain invariant");
                    StepRecord {
                        from: sub,
                        to: whole,
                        l: lr.l,
                        r: lr.r,
                        strict: lr.strict,
                    }
                })
                .collect();
            (chain.steps.clone(), Some(base_h1), steps)
        }
    };

    let reason = if in_s {
        Some(Reason::InS)
    } else if chain.is_none() {
        Some(Reason::RankOne)
    } else if base_h1 == Some(0) {
        let group = chain_types[0];
        if target.family() == Family::A && target.rank() == 2 {
            Some(Reason::A2aTwo)
        } else {
            Some(Reason::BaseH1Zero { group })
        }
    } else {
        steps
            .iter()
            .enumerate()
            .find(|(_, s)| !s.strict)
            .map(|(index, s)| Reason::StepEquality {
                index,
                from: s.from,
                to: s.to,
            })
    };

    SaturationVerdict {
        target,
        triple: t,
        outcome: if reason.is_none() {
            SaturationOutcome::Saturated
        } else {
            SaturationOutcome::PossibleException
        },
        reason,
        trace: SaturationTrace {
            in_s,
            chain: chain_types,
            base_h1,
            steps,
        },
    }
}
