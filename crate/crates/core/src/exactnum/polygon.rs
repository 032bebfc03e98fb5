use std::fmt;

use crate::error::{Result, SlopeError};
use crate::exactnum::Fraction;

/// A lower-convex polygon anchored at the origin.
///
/// Breakpoints have strictly increasing integer abscissae and the segment slopes
/// are nondecreasing. Heights are exact.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ConvexPolygon {
    breakpoints: Vec<(u64, Fraction)>,
}

impl ConvexPolygon {
    /// Builds the polygon whose segments are the given `(slope, width)` pairs in
    /// ascending slope order. Equal slopes are merged and zero widths ignored.
    pub fn from_slopes<I>(slopes: I) -> Self
    where
        I: IntoIterator<Item = (Fraction, u64)>,
    {
        let mut segs: Vec<(Fraction, u64)> = slopes.into_iter().filter(|s| s.1 > 0).collect();
        segs.sort_by_key(|a| a.0);

        let mut breakpoints = vec![(0u64, Fraction::ZERO)];
        let mut last_slope: Option<Fraction> = None;
        for (slope, width) in segs {
            let (x, y) = *breakpoints.last().unwrap();
            let next = (
                x.checked_add(width).expect("polygon width overflow"),
                y + slope.mul_int(i64::try_from(width).expect("polygon width overflow")),
            );
            if last_slope == Some(slope) {
                *breakpoints.last_mut().unwrap() = next;
            } else {
                breakpoints.push(next);
            }
            last_slope = Some(slope);
        }
        ConvexPolygon { breakpoints }
    }

    pub fn breakpoints(&self) -> &[(u64, Fraction)] {
        &self.breakpoints
    }

    pub fn start(&self) -> (u64, Fraction) {
        self.breakpoints[0]
    }

    pub fn end(&self) -> (u64, Fraction) {
        *self.breakpoints.last().unwrap()
    }

    pub fn width(&self) -> u64 {
        self.end().0
    }

    /// Slopes of the successive segments.
    pub fn segment_slopes(&self) -> Vec<Fraction> {
        self.breakpoints
            .windows(2)
            .map(|w| {
                let dx = Fraction::from_int((w[1].0 - w[0].0) as i64);
                (w[1].1 - w[0].1).checked_div(dx).unwrap()
            })
            .collect()
    }

    /// Interpolated height at `x`, or `None` outside `[0, width]`.
    pub fn height_at(&self, x: u64) -> Option<Fraction> {
        if x > self.width() {
            return None;
        }
        let i = self.breakpoints.partition_point(|&(bx, _)| bx < x);
        let (x1, y1) = self.breakpoints[i];
        if x1 == x {
            return Some(y1);
        }
        let (x0, y0) = self.breakpoints[i - 1];
        let t = Fraction::new((x - x0) as i64, (x1 - x0) as i64).ok()?;
        Some(y0 + (y1 - y0) * t)
    }

    /// True when `self` is pointwise at or above `other` on their common range.
    pub fn lies_on_or_above(&self, other: &ConvexPolygon) -> Result<bool> {
        if self.width() != other.width() {
            return Err(SlopeError::domain(format!(
                "polygons have different x-ranges [0,{}] and [0,{}]",
                self.width(),
                other.width()
            )));
        }
        Ok((0..=self.width()).all(|x| self.height_at(x).unwrap() >= other.height_at(x).unwrap()))
    }

    pub fn share_endpoints(&self, other: &ConvexPolygon) -> bool {
        self.start() == other.start() && self.end() == other.end()
    }

    /// Monospace rendering with one column per unit of width and one row per
    /// integer height; breakpoints are drawn as `o`, other lattice abscissae as `*`.
    pub fn sketch(&self) -> String {
        let pts: Vec<(u64, i64, bool)> = (0..=self.width())
            .map(|x| {
                let y = self.height_at(x).unwrap();
                let on_break = self.breakpoints.iter().any(|b| b.0 == x);
                (x, y.floor(), on_break)
            })
            .collect();
        let ymin = pts.iter().map(|p| p.1).min().unwrap_or(0);
        let ymax = pts.iter().map(|p| p.1).max().unwrap_or(0);
        let mut out = String::new();
        for row in (ymin..=ymax).rev() {
            out.push_str(&format!("{row:>4} |"));
            for &(_, y, brk) in &pts {
                out.push(' ');
                out.push(if y == row {
                    if brk {
                        'o'
                    } else {
                        '*'
                    }
                } else {
                    ' '
                });
            }
            out.push('\n');
        }
        out.push_str("     +");
        out.push_str(&"--".repeat(pts.len()));
        out.push('\n');
        out
    }
}

impl fmt::Display for ConvexPolygon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, (x, y)) in self.breakpoints.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            if y.is_integer() {
                write!(f, "({x},{})", y.numer())?;
            } else {
                write!(f, "({x},{y})")?;
            }
        }
        f.write_str("]")
    }
}

/// Free-function form of [`ConvexPolygon::from_slopes`].
pub fn polygon_from_slopes<I>(slopes: I) -> ConvexPolygon
where
    I: IntoIterator<Item = (Fraction, u64)>,
{
    ConvexPolygon::from_slopes(slopes)
}

pub fn lies_on_or_above(p: &ConvexPolygon, q: &ConvexPolygon) -> Result<bool> {
    p.lies_on_or_above(q)
}

pub fn share_endpoints(p: &ConvexPolygon, q: &ConvexPolygon) -> bool {
    p.share_endpoints(q)
}
