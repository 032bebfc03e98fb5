//! Filtered isocrystals with a minuscule filtration, weak admissibility and the
//! possible slope types of the attached φ-module.
//!
//! The filtration has a single jump: `Fil^{h-1} = D`, `Fil^{h+1} = 0` and
//! `dim Fil^h = f`. Subobjects are described at slope-type level by a
//! [`SubSelection`], a copy count per distinct simple summand, and the
//! dimension of their intersection with `Fil^h` by an [`IntersectionProfile`].

use std::cmp::Ordering;
use std::collections::BTreeMap;

use crate::error::{Result, SlopeError};
use crate::exactnum::{ConvexPolygon, Fraction};
use crate::slopecalc::{enumerate_types, SlopeType};

/// Minuscule Hodge–Tate datum: jump `h`, `f = dim Fil^h`, ambient rank `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MinusculeHodge {
    h: i64,
    f: u64,
    n: u64,
}

impl MinusculeHodge {
    pub fn new(h: i64, f: u64, n: u64) -> Result<Self> {
        if f > n {
            return Err(SlopeError::domain(format!(
                "filtration dimension {f} exceeds rank {n}"
            )));
        }
        Ok(MinusculeHodge { h, f, n })
    }

    pub fn h(&self) -> i64 {
        self.h
    }

    pub fn f(&self) -> u64 {
        self.f
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// `Σ i·dim gr^i = h·f + (h-1)·(n-f)`.
    pub fn t_h(&self) -> i64 {
        self.h * self.f as i64 + (self.h - 1) * (self.n - self.f) as i64
    }

    /// Generic intersection of `Fil^h` with a subspace of dimension `rank`.
    pub fn generic_intersection(&self, rank: u64) -> u64 {
        (rank + self.f).saturating_sub(self.n)
    }

    /// Polygon with `n-f` segments of slope `h-1` followed by `f` of slope `h`.
    pub fn polygon(&self) -> ConvexPolygon {
        ConvexPolygon::from_slopes([
            (Fraction::from_int(self.h - 1), self.n - self.f),
            (Fraction::from_int(self.h), self.f),
        ])
    }
}

/// A subobject at slope-type level: how many copies of each distinct summand
/// of the ambient type (in canonical summand order) it contains.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubSelection(pub Vec<u64>);

impl SubSelection {
    pub fn counts(&self) -> &[u64] {
        &self.0
    }

    pub fn rank(&self, iso: &SlopeType) -> u64 {
        iso.summands()
            .zip(&self.0)
            .map(|((s, _), &k)| s.rank() * k)
            .sum()
    }

    pub fn t_n(&self, iso: &SlopeType) -> i64 {
        iso.summands()
            .zip(&self.0)
            .map(|((s, _), &k)| s.degree() * k as i64)
            .sum()
    }

    /// Every selection of `iso`, from empty to full, in lexicographic order.
    pub fn all(iso: &SlopeType) -> Vec<SubSelection> {
        let bounds: Vec<u64> = iso.summands().map(|(_, k)| k).collect();
        let mut out = vec![SubSelection(Vec::with_capacity(bounds.len()))];
        for &b in &bounds {
            out = out
                .into_iter()
                .flat_map(|sel| {
                    (0..=b).map(move |k| {
                        let mut v = sel.0.clone();
                        v.push(k);
                        SubSelection(v)
                    })
                })
                .collect();
        }
        out
    }

    pub fn to_label(&self) -> String {
        let parts: Vec<String> = self.0.iter().map(u64::to_string).collect();
        format!("({})", parts.join(","))
    }
}

/// `dim(D' ∩ Fil^h)` for each subobject `D'`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IntersectionProfile {
    /// `max(0, rank + f - n)`: `Fil^h` in general position against each
    /// subobject individually. Exact only when every summand occurs once.
    Generic,
    Explicit(BTreeMap<SubSelection, u64>),
}

/// A filtered isocrystal at slope-type level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FilteredType {
    iso: SlopeType,
    hodge: MinusculeHodge,
    profile: IntersectionProfile,
}

/// One line of the weak-admissibility ledger.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubCheck {
    pub selection: SubSelection,
    pub rank: u64,
    pub t_n: i64,
    /// `t_H` of the subobject, which must not exceed `t_n`.
    pub bound: i64,
}

impl SubCheck {
    pub fn holds(&self) -> bool {
        self.bound <= self.t_n
    }
}

/// Full outcome of a weak-admissibility test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WaReport {
    pub t_n: i64,
    pub t_h: i64,
    pub subs: Vec<SubCheck>,
}

impl WaReport {
    pub fn is_weakly_admissible(&self) -> bool {
        self.t_h == self.t_n && self.subs.iter().all(SubCheck::holds)
    }
}

impl FilteredType {
    pub fn new(
        iso: SlopeType,
        hodge: MinusculeHodge,
        profile: IntersectionProfile,
    ) -> Result<Self> {
        if hodge.n() != iso.rank() {
            return Err(SlopeError::domain(format!(
                "Hodge datum has rank {} but the isocrystal has rank {}",
                hodge.n(),
                iso.rank()
            )));
        }
        Ok(FilteredType {
            iso,
            hodge,
            profile,
        })
    }

    pub fn generic(iso: SlopeType, h: i64, f: u64) -> Result<Self> {
        let n = iso.rank();
        FilteredType::new(
            iso,
            MinusculeHodge::new(h, f, n)?,
            IntersectionProfile::Generic,
        )
    }

    pub fn iso(&self) -> &SlopeType {
        &self.iso
    }

    pub fn hodge(&self) -> MinusculeHodge {
        self.hodge
    }

    pub fn profile(&self) -> &IntersectionProfile {
        &self.profile
    }

    pub fn t_n(&self) -> i64 {
        self.iso.degree()
    }

    pub fn t_h(&self) -> i64 {
        self.hodge.t_h()
    }

    /// The generic profile written out as an explicit table.
    pub fn generic_profile(&self) -> IntersectionProfile {
        IntersectionProfile::Explicit(
            SubSelection::all(&self.iso)
                .into_iter()
                .map(|k| {
                    let i = self.hodge.generic_intersection(k.rank(&self.iso));
                    (k, i)
                })
                .collect(),
        )
    }

    fn intersection(&self, k: &SubSelection) -> u64 {
        match &self.profile {
            IntersectionProfile::Generic => self.hodge.generic_intersection(k.rank(&self.iso)),
            IntersectionProfile::Explicit(map) => map[k],
        }
    }

    /// Checks an explicit profile: defined on every selection, bounded by
    /// `max(0, rank+f-n) ≤ ι ≤ min(rank, f)`, monotone, `ι(full) = f`.
    pub fn validate_profile(&self) -> Result<()> {
        let map = match &self.profile {
            IntersectionProfile::Generic => return Ok(()),
            IntersectionProfile::Explicit(map) => map,
        };
        let bounds: Vec<u64> = self.iso.summands().map(|(_, k)| k).collect();
        let f = self.hodge.f();
        for k in SubSelection::all(&self.iso) {
            let Some(&i) = map.get(&k) else {
                return Err(SlopeError::domain(format!(
                    "profile has no value for selection {}",
                    k.to_label()
                )));
            };
            let r = k.rank(&self.iso);
            let lo = self.hodge.generic_intersection(r);
            if i < lo || i > r.min(f) {
                return Err(SlopeError::domain(format!(
                    "profile value {i} at {} outside [{lo}, {}]",
                    k.to_label(),
                    r.min(f)
                )));
            }
            for j in 0..k.0.len() {
                if k.0[j] > 0 {
                    let mut smaller = k.clone();
                    smaller.0[j] -= 1;
                    if map.get(&smaller).is_some_and(|&p| p > i) {
                        return Err(SlopeError::domain(format!(
                            "profile is not monotone at {}",
                            k.to_label()
                        )));
                    }
                }
            }
        }
        if map.len() != SubSelection::all(&self.iso).len()
            || map
                .keys()
                .any(|k| k.0.len() != bounds.len() || k.0.iter().zip(&bounds).any(|(a, b)| a > b))
        {
            return Err(SlopeError::domain(
                "profile has selections outside the isocrystal",
            ));
        }
        Ok(())
    }

    /// Evaluates every subobject inequality `(h-1)·rank + ι ≤ t_N`.
    pub fn wa_report(&self) -> Result<WaReport> {
        self.validate_profile()?;
        let h = self.hodge.h();
        let subs = SubSelection::all(&self.iso)
            .into_iter()
            .map(|k| {
                let rank = k.rank(&self.iso);
                let bound = (h - 1) * rank as i64 + self.intersection(&k) as i64;
                SubCheck {
                    t_n: k.t_n(&self.iso),
                    rank,
                    bound,
                    selection: k,
                }
            })
            .collect();
        Ok(WaReport {
            t_n: self.t_n(),
            t_h: self.t_h(),
            subs,
        })
    }

    pub fn is_weakly_admissible(&self) -> Result<bool> {
        Ok(self.wa_report()?.is_weakly_admissible())
    }

    pub fn hodge_polygon(&self) -> ConvexPolygon {
        self.hodge.polygon()
    }

    /// `deg M = t_N - t_H`.
    pub fn deg_m(&self) -> i64 {
        self.t_n() - self.t_h()
    }

    /// Every slope type of rank `n` and degree `t_N - t_H` whose slopes lie in
    /// `[λ_min - h, λ_max - h + 1]`, the window allowed by `t^{1-h}D ⊂ M ⊂ t^{-h}D`.
    ///
    /// Ordered so that Newton polygons decrease: candidates are compared by
    /// their ascending slope vectors, larger first. A unit-root candidate, when
    /// present, comes first.
    pub fn enumerate_m_candidates(&self) -> Result<Vec<SlopeType>> {
        let (lo, hi) = self.candidate_window()?;
        let mut out = enumerate_types(self.hodge.n(), lo, hi, Some(self.deg_m()));
        out.sort_by(candidate_order);
        Ok(out)
    }

    /// The slope window `[λ_min - h, λ_max - h + 1]`.
    pub fn candidate_window(&self) -> Result<(Fraction, Fraction)> {
        let h = Fraction::from_int(self.hodge.h());
        let lo = self.iso.min_slope()? - h;
        let hi = self.iso.max_slope()? - h + Fraction::ONE;
        Ok((lo, hi))
    }
}

/// Larger ascending slope vector first.
pub fn candidate_order(a: &SlopeType, b: &SlopeType) -> Ordering {
    b.slope_vector().cmp(&a.slope_vector())
}

/// Hodge polygon on or below the Newton polygon with common endpoints.
pub fn wa_exists(iso: &SlopeType, hodge: MinusculeHodge) -> Result<bool> {
    if hodge.n() != iso.rank() {
        return Err(SlopeError::domain(format!(
            "Hodge datum has rank {} but the isocrystal has rank {}",
            hodge.n(),
            iso.rank()
        )));
    }
    let newton = iso.newton_polygon();
    let hodge = hodge.polygon();
    Ok(newton.share_endpoints(&hodge) && newton.lies_on_or_above(&hodge)?)
}

pub fn is_unit_root(m: &SlopeType) -> bool {
    m.is_unit_root()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn st(raw: &[(i64, i64, u64)]) -> SlopeType {
        SlopeType::normalize(raw).unwrap()
    }

    fn gl5() -> FilteredType {
        FilteredType::generic(st(&[(2, 5, 1)]), 1, 2).unwrap()
    }

    #[test]
    fn hodge_validation() {
        assert!(MinusculeHodge::new(1, 6, 5).is_err());
        assert!(FilteredType::generic(st(&[(2, 5, 1)]), 1, 6).is_err());
        let hodge = MinusculeHodge::new(1, 2, 4).unwrap();
        assert!(FilteredType::new(st(&[(2, 5, 1)]), hodge, IntersectionProfile::Generic).is_err());
    }

    #[test]
    fn t_n_examples() {
        assert_eq!(gl5().t_n(), 2);
        assert_eq!(
            FilteredType::generic(SlopeType::unit(4), 0, 0)
                .unwrap()
                .t_n(),
            0
        );
        assert_eq!(
            FilteredType::generic(st(&[(-1, 2, 1), (1, 3, 1)]), 0, 0)
                .unwrap()
                .t_n(),
            0
        );
    }

    #[test]
    fn t_h_examples() {
        assert_eq!(MinusculeHodge::new(1, 2, 5).unwrap().t_h(), 2);
        assert_eq!(MinusculeHodge::new(0, 0, 3).unwrap().t_h(), -3);
        assert_eq!(MinusculeHodge::new(0, 0, 0).unwrap().t_h(), 0);
        assert_eq!(MinusculeHodge::new(1, 5, 5).unwrap().t_h(), 5);
    }

    #[test]
    fn generic_intersection_examples() {
        let hd = MinusculeHodge::new(1, 2, 5).unwrap();
        assert_eq!(hd.generic_intersection(2), 0);
        assert_eq!(hd.generic_intersection(4), 1);
        assert_eq!(hd.generic_intersection(5), 2);
    }

    #[test]
    fn generic_profile_is_valid_explicit_profile() {
        let f = FilteredType::generic(st(&[(0, 1, 2), (1, 2, 1), (1, 1, 1)]), 1, 3).unwrap();
        let explicit = FilteredType::new(f.iso().clone(), f.hodge(), f.generic_profile()).unwrap();
        explicit.validate_profile().unwrap();
        assert_eq!(explicit.wa_report().unwrap(), f.wa_report().unwrap());
    }

    #[test]
    fn wa_examples() {
        assert!(gl5().is_weakly_admissible().unwrap());

        let iso = st(&[(0, 1, 1), (1, 1, 1)]);
        let hodge = MinusculeHodge::new(1, 1, 2).unwrap();
        // selections: (slope-0 copies, slope-1 copies)
        let prof: BTreeMap<SubSelection, u64> = [
            (vec![0, 0], 0),
            (vec![1, 0], 1),
            (vec![0, 1], 0),
            (vec![1, 1], 1),
        ]
        .into_iter()
        .map(|(k, v)| (SubSelection(k), v))
        .collect();
        let bad =
            FilteredType::new(iso.clone(), hodge, IntersectionProfile::Explicit(prof)).unwrap();
        assert!(!bad.is_weakly_admissible().unwrap());
        let report = bad.wa_report().unwrap();
        let failing: Vec<_> = report.subs.iter().filter(|s| !s.holds()).collect();
        assert_eq!(failing.len(), 1);
        assert_eq!(failing[0].selection, SubSelection(vec![1, 0]));
        assert_eq!((failing[0].bound, failing[0].t_n), (1, 0));

        // filtration concentrated in weight 0
        assert!(FilteredType::generic(SlopeType::unit(3), 1, 0)
            .unwrap()
            .is_weakly_admissible()
            .unwrap());
        // h = 0, f = 0 puts everything in weight -1, so t_H = -n != t_N
        assert!(!FilteredType::generic(SlopeType::unit(3), 0, 0)
            .unwrap()
            .is_weakly_admissible()
            .unwrap());
    }

    #[test]
    fn invalid_profiles_rejected() {
        let iso = st(&[(0, 1, 1), (1, 1, 1)]);
        let hodge = MinusculeHodge::new(1, 1, 2).unwrap();
        let mk = |vals: [u64; 4]| {
            let prof = [vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]
                .into_iter()
                .zip(vals)
                .map(|(k, v)| (SubSelection(k), v))
                .collect();
            FilteredType::new(iso.clone(), hodge, IntersectionProfile::Explicit(prof)).unwrap()
        };
        assert!(mk([0, 0, 1, 1]).validate_profile().is_ok());
        // full selection must meet Fil in dimension f
        assert!(mk([0, 0, 0, 0]).is_weakly_admissible().is_err());
        // empty selection must be 0
        assert!(mk([1, 1, 1, 1]).validate_profile().is_err());
        // above min(rank, f)
        assert!(mk([0, 2, 0, 1]).validate_profile().is_err());
        let missing = FilteredType::new(
            iso.clone(),
            hodge,
            IntersectionProfile::Explicit(BTreeMap::new()),
        )
        .unwrap();
        assert!(missing.validate_profile().is_err());
    }

    #[test]
    fn lower_bound_enforced() {
        // n = 2, f = 2: every line meets Fil^1 = D
        let iso = st(&[(0, 1, 1), (2, 1, 1)]);
        let hodge = MinusculeHodge::new(1, 2, 2).unwrap();
        let prof = [
            (vec![0, 0], 0),
            (vec![0, 1], 1),
            (vec![1, 0], 0),
            (vec![1, 1], 2),
        ]
        .into_iter()
        .map(|(k, v)| (SubSelection(k), v))
        .collect();
        let f = FilteredType::new(iso, hodge, IntersectionProfile::Explicit(prof)).unwrap();
        assert!(f.validate_profile().is_err());
    }

    #[test]
    fn hodge_polygon_examples() {
        assert_eq!(gl5().hodge_polygon().to_string(), "[(0,0),(3,0),(5,2)]");
        let p = MinusculeHodge::new(3, 0, 4).unwrap().polygon();
        assert_eq!(p.segment_slopes(), vec![Fraction::from_int(2)]);
        let p = MinusculeHodge::new(3, 4, 4).unwrap().polygon();
        assert_eq!(p.segment_slopes(), vec![Fraction::from_int(3)]);
    }

    #[test]
    fn wa_exists_examples() {
        let hd = |h, f, n| MinusculeHodge::new(h, f, n).unwrap();
        assert!(wa_exists(&st(&[(2, 5, 1)]), hd(1, 2, 5)).unwrap());
        assert!(!wa_exists(&SlopeType::unit(2), hd(1, 1, 2)).unwrap());
        assert!(wa_exists(&st(&[(1, 1, 1)]), hd(1, 1, 1)).unwrap());
        assert!(wa_exists(&st(&[(1, 1, 1)]), hd(1, 1, 2)).is_err());
    }

    #[test]
    fn deg_m_examples() {
        assert_eq!(gl5().deg_m(), 0);
        let f = FilteredType::generic(st(&[(3, 2, 1), (-1, 1, 1)]), 1, 0).unwrap();
        assert_eq!(f.deg_m(), f.t_n());
        let f = FilteredType::generic(st(&[(3, 2, 1), (-1, 1, 1)]), 0, 0).unwrap();
        assert_eq!(f.deg_m(), f.t_n() + 3);
        let f = FilteredType::generic(st(&[(0, 1, 1), (1, 1, 1)]), 1, 1).unwrap();
        assert_eq!(f.deg_m(), 0);
    }

    #[test]
    fn enumerate_gl5() {
        let c = gl5().enumerate_m_candidates().unwrap();
        assert_eq!(c, vec![SlopeType::unit(5), st(&[(-1, 2, 1), (1, 3, 1)])]);
        assert!(is_unit_root(&c[0]));
        assert!(!is_unit_root(&c[1]));
        assert_eq!(
            gl5().candidate_window().unwrap(),
            (Fraction::new(-3, 5).unwrap(), Fraction::new(2, 5).unwrap())
        );
    }

    #[test]
    fn enumerate_small() {
        let f = FilteredType::generic(st(&[(1, 2, 1)]), 1, 1).unwrap();
        assert_eq!(
            f.enumerate_m_candidates().unwrap(),
            vec![SlopeType::unit(2)]
        );
        let f = FilteredType::generic(SlopeType::unit(4), 1, 0).unwrap();
        assert_eq!(
            f.enumerate_m_candidates().unwrap(),
            vec![SlopeType::unit(4)]
        );
        let f = FilteredType::generic(SlopeType::empty(), 0, 0).unwrap();
        assert!(f.enumerate_m_candidates().is_err());
    }
}
