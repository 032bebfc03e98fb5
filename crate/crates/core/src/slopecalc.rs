//! Isomorphism classes of isocrystals and φ-modules as multisets of simple
//! objects `M(c,d)`, with the tensor-category operations on them.
//!
//! Both Dieudonné–Manin (isocrystals) and Kedlaya (φ-modules over the extended
//! Robba ring) classify objects by the same data: a finite multiset of coprime
//! pairs `(c, d)` with `d ≥ 1`. `M(c,d)` has rank `d`, degree `c` and slope `c/d`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;

use crate::error::{Result, SlopeError};
use crate::exactnum::{ConvexPolygon, ExtCount, Fraction};

fn mul_i64(a: i64, b: i64) -> i64 {
    a.checked_mul(b)
        .expect("integer overflow in slope arithmetic")
}

fn add_i64(a: i64, b: i64) -> i64 {
    a.checked_add(b)
        .expect("integer overflow in slope arithmetic")
}

fn mul_u64(a: u64, b: u64) -> u64 {
    a.checked_mul(b)
        .expect("integer overflow in slope arithmetic")
}

fn to_i64(n: u64) -> i64 {
    i64::try_from(n).expect("integer overflow in slope arithmetic")
}

/// The simple object `M(c,d)`: `gcd(c,d) = 1`, `d ≥ 1`.
///
/// Ordered by slope, ties (impossible for coprime pairs) broken by `(c, d)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct SimpleSummand {
    c: i64,
    d: i64,
}

impl SimpleSummand {
    pub fn new(c: i64, d: i64) -> Result<Self> {
        if d < 1 {
            return Err(SlopeError::domain(format!("M({c},{d}) needs d >= 1")));
        }
        if c.gcd(&d) != 1 {
            return Err(SlopeError::domain(format!(
                "M({c},{d}) is not a coprime pair"
            )));
        }
        Ok(SimpleSummand { c, d })
    }

    /// The simple object of the given slope.
    pub fn from_slope(slope: Fraction) -> Self {
        SimpleSummand {
            c: slope.numer(),
            d: slope.denom(),
        }
    }

    pub const UNIT: SimpleSummand = SimpleSummand { c: 0, d: 1 };

    pub fn c(&self) -> i64 {
        self.c
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn rank(&self) -> u64 {
        self.d as u64
    }

    pub fn degree(&self) -> i64 {
        self.c
    }

    pub fn slope(&self) -> Fraction {
        Fraction::new(self.c, self.d).unwrap()
    }

    /// `End(M(c,d))`: a central division algebra of dimension `d²` over the
    /// base field with Hasse invariant `c/d mod 1`.
    pub fn end_algebra(&self) -> (u64, Fraction) {
        (mul_u64(self.rank(), self.rank()), self.slope().fract())
    }
}

impl Ord for SimpleSummand {
    fn cmp(&self, other: &Self) -> Ordering {
        self.slope()
            .cmp(&other.slope())
            .then(self.c.cmp(&other.c))
            .then(self.d.cmp(&other.d))
    }
}

impl PartialOrd for SimpleSummand {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SimpleSummand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M({},{})", self.c, self.d)
    }
}

impl fmt::Debug for SimpleSummand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// An isomorphism class: a multiset of simple summands with copy counts.
///
/// The empty multiset is the rank-0 object.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct SlopeType {
    summands: BTreeMap<SimpleSummand, u64>,
}

impl SlopeType {
    pub fn empty() -> Self {
        SlopeType::default()
    }

    /// `M(0,1)^{⊕n}`.
    pub fn unit(n: u64) -> Self {
        let mut t = SlopeType::empty();
        t.push(SimpleSummand::UNIT, n);
        t
    }

    pub fn simple(s: SimpleSummand) -> Self {
        let mut t = SlopeType::empty();
        t.push(s, 1);
        t
    }

    fn push(&mut self, s: SimpleSummand, copies: u64) {
        if copies > 0 {
            let e = self.summands.entry(s).or_insert(0);
            *e = e.checked_add(copies).expect("copy count overflow");
        }
    }

    /// Adds `copies` copies of the (possibly non-reduced) pair `(c,d)`, using
    /// `M(gc, gd) = M(c,d)^{⊕g}`.
    fn push_raw(&mut self, c: i64, d: i64, copies: u64) {
        debug_assert!(d >= 1);
        let g = c.gcd(&d);
        self.push(
            SimpleSummand { c: c / g, d: d / g },
            mul_u64(copies, g as u64),
        );
    }

    /// Canonical form of a raw list of `(c, d, copies)`.
    ///
    /// Each pair is reduced by `g = gcd(c, d)` into `g·copies` copies of
    /// `M(c/g, d/g)`; duplicates are merged.
    pub fn normalize(raw: &[(i64, i64, u64)]) -> Result<Self> {
        let mut t = SlopeType::empty();
        for &(c, d, copies) in raw {
            if d < 1 {
                return Err(SlopeError::domain(format!("M({c},{d}) needs d >= 1")));
            }
            if copies == 0 {
                return Err(SlopeError::domain(format!("M({c},{d}) with zero copies")));
            }
            t.push_raw(c, d, copies);
        }
        Ok(t)
    }

    /// Builds the isoclinic object of the given slope and rank. The rank must
    /// be a multiple of the reduced denominator of the slope.
    pub fn isoclinic(slope: Fraction, rank: u64) -> Result<Self> {
        let d = slope.denom() as u64;
        if !rank.is_multiple_of(d) {
            return Err(SlopeError::Internal(format!(
                "isoclinic block of slope {slope} has rank {rank}, not divisible by {d}"
            )));
        }
        let mut t = SlopeType::empty();
        t.push(SimpleSummand::from_slope(slope), rank / d);
        Ok(t)
    }

    /// Summands in ascending slope order with their copy counts.
    pub fn summands(&self) -> impl Iterator<Item = (SimpleSummand, u64)> + '_ {
        self.summands.iter().map(|(s, &k)| (*s, k))
    }

    pub fn copies_of(&self, s: SimpleSummand) -> u64 {
        self.summands.get(&s).copied().unwrap_or(0)
    }

    pub fn distinct_len(&self) -> usize {
        self.summands.len()
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn is_multiplicity_free(&self) -> bool {
        self.summands.values().all(|&k| k == 1)
    }

    pub fn rank(&self) -> u64 {
        self.summands.iter().fold(0, |acc, (s, &k)| {
            acc.checked_add(mul_u64(s.rank(), k))
                .expect("rank overflow")
        })
    }

    pub fn degree(&self) -> i64 {
        self.summands
            .iter()
            .fold(0, |acc, (s, &k)| add_i64(acc, mul_i64(s.c, to_i64(k))))
    }

    /// `degree / rank`.
    pub fn weight(&self) -> Result<Fraction> {
        match self.rank() {
            0 => Err(SlopeError::domain("weight of the rank-0 object")),
            r => Fraction::new(self.degree(), to_i64(r)),
        }
    }

    /// The slope decomposition as `(slope, rank)` blocks, ascending.
    pub fn isoclinic_blocks(&self) -> Vec<(Fraction, u64)> {
        self.summands
            .iter()
            .map(|(s, &k)| (s.slope(), mul_u64(s.rank(), k)))
            .collect()
    }

    /// The slope multiset as one entry per unit of rank, ascending.
    pub fn slope_vector(&self) -> Vec<Fraction> {
        self.isoclinic_blocks()
            .into_iter()
            .flat_map(|(s, r)| std::iter::repeat_n(s, r as usize))
            .collect()
    }

    pub fn direct_sum(&self, other: &SlopeType) -> SlopeType {
        let mut t = self.clone();
        for (s, k) in other.summands() {
            t.push(s, k);
        }
        t
    }

    /// `M(c,d) ⊗ M(c',d') = M(cd' + c'd, dd')`, extended bilinearly.
    pub fn tensor(&self, other: &SlopeType) -> SlopeType {
        let mut t = SlopeType::empty();
        for (a, ka) in self.summands() {
            for (b, kb) in other.summands() {
                t.push_raw(
                    add_i64(mul_i64(a.c, b.d), mul_i64(b.c, a.d)),
                    mul_i64(a.d, b.d),
                    mul_u64(ka, kb),
                );
            }
        }
        t
    }

    /// `M(c,d)^∨ = M(-c,d)`.
    pub fn dual(&self) -> SlopeType {
        let mut t = SlopeType::empty();
        for (s, k) in self.summands() {
            t.push(SimpleSummand { c: -s.c, d: s.d }, k);
        }
        t
    }

    /// Tensor with the rank-one object of slope `r`: `(c,d) ↦ (c + r·d, d)`.
    pub fn tate_twist(&self, r: i64) -> SlopeType {
        let mut t = SlopeType::empty();
        for (s, k) in self.summands() {
            t.push_raw(add_i64(s.c, mul_i64(r, s.d)), s.d, k);
        }
        t
    }

    /// Top exterior power, `M(Σc_i, 1)`.
    pub fn determinant(&self) -> SlopeType {
        if self.is_empty() {
            return SlopeType::unit(1);
        }
        let mut t = SlopeType::empty();
        t.push_raw(self.degree(), 1, 1);
        t
    }

    /// `∧^k`, expanded over the slope decomposition: the k-th power of an
    /// isoclinic block of slope `s` and rank `m` is isoclinic of slope `k·s` and
    /// rank `C(m,k)`, and `∧^k(X ⊕ Y) = ⊕_{i+j=k} ∧^i X ⊗ ∧^j Y`.
    pub fn exterior_power(&self, k: u64) -> Result<SlopeType> {
        let n = self.rank();
        if k > n {
            return Err(SlopeError::domain(format!(
                "exterior power {k} exceeds rank {n}"
            )));
        }
        // layers[j] = ∧^j of the blocks folded so far, as slope -> rank
        let mut layers: Vec<BTreeMap<Fraction, u64>> = vec![BTreeMap::new(); k as usize + 1];
        layers[0].insert(Fraction::ZERO, 1);
        for (slope, m) in self.isoclinic_blocks() {
            let mut next: Vec<BTreeMap<Fraction, u64>> = vec![BTreeMap::new(); k as usize + 1];
            for (j, layer) in layers.iter().enumerate() {
                for i in 0..=m.min(k - j as u64) {
                    let binom = binomial(m, i)?;
                    for (&t, &r) in layer {
                        let e = next[j + i as usize]
                            .entry(t + slope.mul_int(to_i64(i)))
                            .or_insert(0);
                        *e = e
                            .checked_add(
                                r.checked_mul(binom)
                                    .ok_or(SlopeError::Overflow("exterior power"))?,
                            )
                            .ok_or(SlopeError::Overflow("exterior power"))?;
                    }
                }
            }
            layers = next;
        }
        let mut out = SlopeType::empty();
        for (&slope, &rank) in &layers[k as usize] {
            out = out.direct_sum(&SlopeType::isoclinic(slope, rank)?);
        }
        Ok(out)
    }

    /// Restriction along `φ ↦ φ^b`: each isoclinic block keeps its rank and has
    /// its slope multiplied by `b`. For `b = d` this sends `M(c,d)` to
    /// `M(c,1)^{⊕d}`.
    pub fn frobenius_restriction(&self, b: u64) -> Result<SlopeType> {
        if b == 0 {
            return Err(SlopeError::domain("restriction degree must be positive"));
        }
        let mut out = SlopeType::empty();
        for (slope, rank) in self.isoclinic_blocks() {
            out = out.direct_sum(&SlopeType::isoclinic(slope.mul_int(to_i64(b)), rank)?);
        }
        Ok(out)
    }

    /// Dimension of `H⁰` (Frobenius invariants): positive slopes contribute
    /// nothing, `M(0,1)` contributes one per copy, negative slopes make it infinite.
    pub fn h0_dim(&self) -> ExtCount {
        self.summands()
            .map(|(s, k)| match s.c.signum() {
                1 => ExtCount::ZERO,
                0 => ExtCount::Finite(k),
                _ => ExtCount::Infinity,
            })
            .sum()
    }

    /// `dim Hom(self, other) = dim H⁰(self^∨ ⊗ other)`.
    pub fn hom_dim(&self, other: &SlopeType) -> ExtCount {
        self.dual().tensor(other).h0_dim()
    }

    pub fn min_slope(&self) -> Result<Fraction> {
        self.summands
            .keys()
            .next()
            .map(SimpleSummand::slope)
            .ok_or_else(|| SlopeError::domain("minimal slope of the rank-0 object"))
    }

    pub fn max_slope(&self) -> Result<Fraction> {
        self.summands
            .keys()
            .next_back()
            .map(SimpleSummand::slope)
            .ok_or_else(|| SlopeError::domain("maximal slope of the rank-0 object"))
    }

    pub fn is_isoclinic(&self) -> bool {
        self.summands.len() == 1
    }

    /// True iff the object is `M(0,1)^{⊕rank}` (the empty object included).
    pub fn is_unit_root(&self) -> bool {
        self.summands.keys().all(|s| *s == SimpleSummand::UNIT)
    }

    pub fn newton_polygon(&self) -> ConvexPolygon {
        ConvexPolygon::from_slopes(self.isoclinic_blocks())
    }

    /// Least `s ≥ 1` with `s·λ` integral for every slope `λ`.
    pub fn decency_integer(&self) -> Result<u64> {
        if self.is_empty() {
            return Err(SlopeError::domain("decency integer of the rank-0 object"));
        }
        Ok(self.summands.keys().fold(1u64, |acc, s| acc.lcm(&s.rank())))
    }

    /// Canonical textual form in the `slope^rank` grammar, e.g. `-1/2^2,1/3^3`.
    pub fn to_spec(&self) -> String {
        self.isoclinic_blocks()
            .iter()
            .map(|(s, r)| {
                if s.is_integer() {
                    format!("{}^{r}", s.numer())
                } else {
                    format!("{s}^{r}")
                }
            })
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Display for SlopeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("0");
        }
        for (i, (s, k)) in self.summands().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if k == 1 {
                write!(f, "{s}")?;
            } else {
                write!(f, "{s}^{k}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SlopeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}")
    }
}

fn binomial(n: u64, k: u64) -> Result<u64> {
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return Err(SlopeError::Overflow("binomial coefficient"));
        }
    }
    Ok(acc as u64)
}

/// Every coprime pair `(c,d)` with `d ≤ max_d` and slope in `[lo, hi]`, in
/// ascending summand order.
pub fn coprime_pairs_in(lo: Fraction, hi: Fraction, max_d: u64) -> Vec<SimpleSummand> {
    let mut out = Vec::new();
    for d in 1..=to_i64(max_d) {
        let cmin = (lo.mul_int(d)).floor();
        let cmax = (hi.mul_int(d)).floor();
        for c in cmin..=cmax {
            if c.gcd(&d) != 1 {
                continue;
            }
            let s = Fraction::new(c, d).unwrap();
            if s >= lo && s <= hi {
                out.push(SimpleSummand { c, d });
            }
        }
    }
    out.sort();
    out
}

/// All slope types of exactly the given rank whose slopes lie in `[lo, hi]`,
/// optionally restricted to a fixed degree. Output is in ascending order of
/// the summand lists.
pub fn enumerate_types(
    rank: u64,
    lo: Fraction,
    hi: Fraction,
    degree: Option<i64>,
) -> Vec<SlopeType> {
    let pairs = coprime_pairs_in(lo, hi, rank.max(1));
    let mut out = Vec::new();
    let mut chosen: Vec<(SimpleSummand, u64)> = Vec::new();
    enumerate_rec(&pairs, 0, rank, 0, hi, degree, &mut chosen, &mut out);
    out
}

#[allow(clippy::too_many_arguments)]
fn enumerate_rec(
    pairs: &[SimpleSummand],
    idx: usize,
    rank_left: u64,
    degree_so_far: i64,
    hi: Fraction,
    degree: Option<i64>,
    chosen: &mut Vec<(SimpleSummand, u64)>,
    out: &mut Vec<SlopeType>,
) {
    if rank_left == 0 {
        if degree.is_none_or(|d| d == degree_so_far) {
            let mut t = SlopeType::empty();
            for &(s, k) in chosen.iter() {
                t.push(s, k);
            }
            out.push(t);
        }
        return;
    }
    if idx == pairs.len() {
        return;
    }
    if let Some(target) = degree {
        // remaining summands have slopes in [slope(pairs[idx]), hi]
        let need = Fraction::from_int(target - degree_so_far);
        let r = Fraction::from_int(to_i64(rank_left));
        if need < pairs[idx].slope() * r || need > hi * r {
            return;
        }
    }
    let s = pairs[idx];
    let max_k = rank_left / s.rank();
    for k in (0..=max_k).rev() {
        if k > 0 {
            chosen.push((s, k));
        }
        enumerate_rec(
            pairs,
            idx + 1,
            rank_left - k * s.rank(),
            degree_so_far + s.c * to_i64(k),
            hi,
            degree,
            chosen,
            out,
        );
        if k > 0 {
            chosen.pop();
        }
    }
}
