//! Decides, for `GL_n` with Newton slopes in `[0,1]` and the minuscule class
//! of Hodge–Tate weights `{0, 1}` (jump `h = 1`, `f = t_N`), whether the
//! weakly admissible locus equals the admissible one.
//!
//! Equality holds exactly when, after removing the slopes 0 and 1, what is
//! left is nothing, a single `M(1,h)`, a single `M(h-1,h)`, or `M(1,2)^{⊕2}`.
//! Otherwise the slope data contains one of five minimal bad configurations,
//! returned as a [`BadWitness`].

use std::fmt;

use crate::error::{Result, SlopeError};
use crate::exactnum::Fraction;
use crate::slopecalc::{enumerate_types, SimpleSummand, SlopeType};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PatternKind {
    /// `(1^{(h1)}, (1/h)^{(h)}, 0^{(h0)})`
    A,
    /// `(1^{(h1)}, ((h-1)/h)^{(h)}, 0^{(h0)})`
    B,
    /// `(1^{(h1)}, (1/2)^{(4)}, 0^{(h0)})`
    C,
}

/// A matched good pattern with its multiplicities (counted in rank).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GoodPattern {
    pub kind: PatternKind,
    pub h1: u64,
    pub h: u64,
    pub h0: u64,
}

/// A sub-multiset forcing the weakly admissible locus to be strictly larger.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BadWitness {
    /// `M(c,h)` with `gcd(c,h) = 1`, `2 ≤ c ≤ h-2`.
    T1 { c: u64, h: u64 },
    /// `M(1,h1) ⊕ M(1,h2)`, `2 ≤ h1 ≤ h2`, `h2 > 2`.
    T2 { h1: u64, h2: u64 },
    /// `M(h1-1,h1) ⊕ M(h2-1,h2)`, `2 ≤ h1 ≤ h2`, `h2 > 2`.
    T3 { h1: u64, h2: u64 },
    /// `M(1,h1) ⊕ M(h2-1,h2)`, `h1, h2 ≥ 3`.
    T4 { h1: u64, h2: u64 },
    /// `M(1,2)^{⊕3}`.
    T5,
}

impl BadWitness {
    /// The witnessing sub-multiset.
    pub fn summands(&self) -> SlopeType {
        let raw: Vec<(i64, i64, u64)> = match *self {
            BadWitness::T1 { c, h } => vec![(c as i64, h as i64, 1)],
            BadWitness::T2 { h1, h2 } => vec![(1, h1 as i64, 1), (1, h2 as i64, 1)],
            BadWitness::T3 { h1, h2 } => {
                vec![(h1 as i64 - 1, h1 as i64, 1), (h2 as i64 - 1, h2 as i64, 1)]
            }
            BadWitness::T4 { h1, h2 } => vec![(1, h1 as i64, 1), (h2 as i64 - 1, h2 as i64, 1)],
            BadWitness::T5 => vec![(1, 2, 3)],
        };
        SlopeType::normalize(&raw).expect("witness summands are well formed")
    }

    /// Whether the parameters satisfy the bounds of their family.
    pub fn is_well_formed(&self) -> bool {
        use num_integer::Integer;
        match *self {
            BadWitness::T1 { c, h } => c.gcd(&h) == 1 && c >= 2 && c + 2 <= h && h >= 5,
            BadWitness::T2 { h1, h2 } | BadWitness::T3 { h1, h2 } => 2 <= h1 && h1 <= h2 && h2 > 2,
            BadWitness::T4 { h1, h2 } => h1 >= 3 && h2 >= 3,
            BadWitness::T5 => true,
        }
    }

    pub fn tag(&self) -> &'static str {
        match self {
            BadWitness::T1 { .. } => "T1",
            BadWitness::T2 { .. } => "T2",
            BadWitness::T3 { .. } => "T3",
            BadWitness::T4 { .. } => "T4",
            BadWitness::T5 => "T5",
        }
    }

    pub fn params(&self) -> Vec<u64> {
        match *self {
            BadWitness::T1 { c, h } => vec![c, h],
            BadWitness::T2 { h1, h2 } | BadWitness::T3 { h1, h2 } | BadWitness::T4 { h1, h2 } => {
                vec![h1, h2]
            }
            BadWitness::T5 => vec![],
        }
    }
}

impl fmt::Display for BadWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.params();
        if p.is_empty() {
            f.write_str(self.tag())
        } else {
            let p: Vec<String> = p.iter().map(u64::to_string).collect();
            write!(f, "{}({})", self.tag(), p.join(","))
        }
    }
}

impl fmt::Display for GoodPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            PatternKind::A => "A",
            PatternKind::B => "B",
            PatternKind::C => "C",
        };
        write!(f, "{kind}(h1={}, h={}, h0={})", self.h1, self.h, self.h0)
    }
}

/// Outcome of [`classify`]: exactly one of `pattern` and `witness` is set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Verdict {
    pub equal: bool,
    pub pattern: Option<GoodPattern>,
    pub witness: Option<BadWitness>,
}

pub fn validate_input(iso: &SlopeType) -> bool {
    iso.summands()
        .all(|(s, _)| s.slope() >= Fraction::ZERO && s.slope() <= Fraction::ONE)
}

fn require_valid(iso: &SlopeType) -> Result<()> {
    if validate_input(iso) {
        Ok(())
    } else {
        Err(SlopeError::domain(format!(
            "Newton slopes of {iso} are not all in [0,1]"
        )))
    }
}

/// Splits off slopes 0 and 1: `(h1, fractional part, h0)`.
fn strip_integral(iso: &SlopeType) -> (u64, Vec<(SimpleSummand, u64)>, u64) {
    let h1 = iso.copies_of(SimpleSummand::new(1, 1).unwrap());
    let h0 = iso.copies_of(SimpleSummand::UNIT);
    let rest = iso.summands().filter(|(s, _)| s.d() > 1).collect();
    (h1, rest, h0)
}

pub fn match_pattern(iso: &SlopeType) -> Result<Option<GoodPattern>> {
    require_valid(iso)?;
    let (h1, rest, h0) = strip_integral(iso);
    let pattern = |kind, h| Some(GoodPattern { kind, h1, h, h0 });
    Ok(match rest.as_slice() {
        [] => pattern(PatternKind::A, 0),
        [(s, 1)] if s.c() == 1 => pattern(PatternKind::A, s.d() as u64),
        [(s, 1)] if s.c() == s.d() - 1 => pattern(PatternKind::B, s.d() as u64),
        [(s, 2)] if s.c() == 1 && s.d() == 2 => pattern(PatternKind::C, 2),
        _ => None,
    })
}

/// Searches for a bad sub-configuration in the order T1, T5, T2, T3, T4, each
/// family scanned by ascending parameters.
pub fn find_witness(iso: &SlopeType) -> Result<Option<BadWitness>> {
    require_valid(iso)?;
    let (_, rest, _) = strip_integral(iso);

    let t1 = rest
        .iter()
        .filter(|(s, _)| s.c() >= 2 && s.c() <= s.d() - 2)
        .map(|(s, _)| BadWitness::T1 {
            c: s.c() as u64,
            h: s.d() as u64,
        })
        .min_by_key(|w| w.params());
    if t1.is_some() {
        return Ok(t1);
    }

    let half = SimpleSummand::new(1, 2).unwrap();
    if iso.copies_of(half) >= 3 {
        return Ok(Some(BadWitness::T5));
    }

    // Denominators of the 1/h and (h-1)/h summands, one entry per copy, ascending.
    let low: Vec<u64> = expand(&rest, |s| s.c() == 1);
    let high: Vec<u64> = expand(&rest, |s| s.c() == s.d() - 1);

    let pair_in = |v: &[u64]| -> Option<(u64, u64)> {
        // smallest lexicographic (h1, h2) with h1 <= h2, h2 > 2
        let h1 = *v.first()?;
        let h2 = *v[1..].iter().find(|&&x| x > 2)?;
        Some((h1, h2))
    };
    if let Some((h1, h2)) = pair_in(&low) {
        return Ok(Some(BadWitness::T2 { h1, h2 }));
    }
    if let Some((h1, h2)) = pair_in(&high) {
        return Ok(Some(BadWitness::T3 { h1, h2 }));
    }

    let h1 = low.iter().find(|&&x| x >= 3);
    let h2 = high.iter().find(|&&x| x >= 3);
    if let (Some(&h1), Some(&h2)) = (h1, h2) {
        return Ok(Some(BadWitness::T4 { h1, h2 }));
    }
    Ok(None)
}

fn expand(rest: &[(SimpleSummand, u64)], pred: impl Fn(&SimpleSummand) -> bool) -> Vec<u64> {
    let mut v: Vec<u64> = rest
        .iter()
        .filter(|(s, _)| pred(s))
        .flat_map(|(s, k)| std::iter::repeat_n(s.d() as u64, *k as usize))
        .collect();
    v.sort_unstable();
    v
}

pub fn classify(iso: &SlopeType) -> Result<Verdict> {
    let pattern = match_pattern(iso)?;
    let witness = find_witness(iso)?;
    if pattern.is_some() == witness.is_some() {
        return Err(SlopeError::Internal(format!(
            "classification of {iso} found pattern {pattern:?} and witness {witness:?}"
        )));
    }
    Ok(Verdict {
        equal: pattern.is_some(),
        pattern,
        witness,
    })
}

/// `λ ↦ 1 - λ`, i.e. `M(c,d) ↦ M(d-c,d)`: the slope data of `Hom(D, 1(1))`.
pub fn dual_slopes(iso: &SlopeType) -> Result<SlopeType> {
    require_valid(iso)?;
    Ok(iso.dual().tate_twist(1))
}

/// Every slope type with slopes in `[0,1]` and rank `1..=max_rank`.
pub fn unit_interval_types(max_rank: u64) -> impl Iterator<Item = SlopeType> {
    (1..=max_rank).flat_map(|r| enumerate_types(r, Fraction::ZERO, Fraction::ONE, None))
}

/// A failure found by [`sweep`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SweepViolation {
    Exclusivity { iso: SlopeType, detail: String },
    Duality { iso: SlopeType, dual: SlopeType },
}

impl fmt::Display for SweepViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SweepViolation::Exclusivity { iso, detail } => {
                write!(f, "xor: {} ({detail})", iso.to_spec())
            }
            SweepViolation::Duality { iso, dual } => {
                write!(f, "duality: {} vs {}", iso.to_spec(), dual.to_spec())
            }
        }
    }
}

/// Summary of an exhaustive sweep.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SweepReport {
    pub max_rank: u64,
    pub checked: u64,
    pub equal: u64,
    pub violations: Vec<SweepViolation>,
}

/// Checks pattern/witness exclusivity and invariance under `λ ↦ 1-λ` on every
/// slope type in `[0,1]` up to the given rank.
pub fn sweep(max_rank: u64) -> SweepReport {
    let mut report = SweepReport {
        max_rank,
        ..Default::default()
    };
    for iso in unit_interval_types(max_rank) {
        report.checked += 1;
        let pattern = match_pattern(&iso).expect("sweep inputs lie in [0,1]");
        let witness = find_witness(&iso).expect("sweep inputs lie in [0,1]");
        if pattern.is_some() == witness.is_some() {
            report.violations.push(SweepViolation::Exclusivity {
                iso: iso.clone(),
                detail: format!("pattern {pattern:?}, witness {witness:?}"),
            });
            continue;
        }
        if pattern.is_some() {
            report.equal += 1;
        }
        let dual = dual_slopes(&iso).expect("sweep inputs lie in [0,1]");
        let dual_equal = match_pattern(&dual).expect("dual lies in [0,1]").is_some();
        if dual_equal != pattern.is_some() {
            report
                .violations
                .push(SweepViolation::Duality { iso, dual });
        }
    }
    report
}
