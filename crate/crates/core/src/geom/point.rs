use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Signed, ToPrimitive, Zero};
use std::fmt;

/// A point of the plane with exact rational coordinates.
///
/// `BigRational` keeps values in canonical reduced form (positive
/// denominator, gcd 1), so equality and hashing behave as expected.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalPoint {
    pub x: BigRational,
    pub y: BigRational,
}

/// Sign of the signed area of the triangle `(a, b, c)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    CounterClockwise,
    Clockwise,
    Collinear,
}

impl RationalPoint {
    pub fn new(x: BigRational, y: BigRational) -> Self {
        RationalPoint { x, y }
    }

    /// Point with integer coordinates.
    pub fn from_ints(x: i64, y: i64) -> Self {
        RationalPoint {
            x: BigRational::from_integer(BigInt::from(x)),
            y: BigRational::from_integer(BigInt::from(y)),
        }
    }

    /// Point `num_x/den_x, num_y/den_y`; denominators must be nonzero.
    pub fn from_fractions(num_x: i64, den_x: i64, num_y: i64, den_y: i64) -> Self {
        assert!(den_x != 0 && den_y != 0, "zero denominator");
        RationalPoint {
            x: BigRational::new(BigInt::from(num_x), BigInt::from(den_x)),
            y: BigRational::new(BigInt::from(num_y), BigInt::from(den_y)),
        }
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (
            self.x.to_f64().expect("coordinate out of f64 range"),
            self.y.to_f64().expect("coordinate out of f64 range"),
        )
    }

    /// Exact midpoint of `self` and `other`.
    pub fn midpoint(&self, other: &RationalPoint) -> RationalPoint {
        let two = BigRational::from_integer(BigInt::from(2));
        RationalPoint {
            x: (&self.x + &other.x) / &two,
            y: (&self.y + &other.y) / &two,
        }
    }

    /// Mirror image across the x axis.
    pub fn mirrored(&self) -> RationalPoint {
        RationalPoint {
            x: self.x.clone(),
            y: -self.y.clone(),
        }
    }

    /// Point reflection through the origin.
    pub fn negated(&self) -> RationalPoint {
        RationalPoint {
            x: -self.x.clone(),
            y: -self.y.clone(),
        }
    }
}

impl fmt::Display for RationalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Exact cross product `(b - a) x (c - a)`.
pub(crate) fn cross(a: &RationalPoint, b: &RationalPoint, c: &RationalPoint) -> BigRational {
    (&b.x - &a.x) * (&c.y - &a.y) - (&b.y - &a.y) * (&c.x - &a.x)
}

/// Orientation of the triple `(a, b, c)`.
pub fn orient(a: &RationalPoint, b: &RationalPoint, c: &RationalPoint) -> Orientation {
    let det = cross(a, b, c);
    if det.is_zero() {
        Orientation::Collinear
    } else if det.is_positive() {
        Orientation::CounterClockwise
    } else {
        Orientation::Clockwise
    }
}

/// Whether `p` lies on the closed segment `ab`; assumes the three points
/// are collinear.
pub(crate) fn on_segment(a: &RationalPoint, b: &RationalPoint, p: &RationalPoint) -> bool {
    let min_x = std::cmp::min(&a.x, &b.x);
    let max_x = std::cmp::max(&a.x, &b.x);
    let min_y = std::cmp::min(&a.y, &b.y);
    let max_y = std::cmp::max(&a.y, &b.y);
    &p.x >= min_x && &p.x <= max_x && &p.y >= min_y && &p.y <= max_y
}

/// Exact test for any intersection of closed segments `ab` and `cd`.
pub(crate) fn segments_intersect(
    a: &RationalPoint,
    b: &RationalPoint,
    c: &RationalPoint,
    d: &RationalPoint,
) -> bool {
    let o1 = orient(a, b, c);
    let o2 = orient(a, b, d);
    let o3 = orient(c, d, a);
    let o4 = orient(c, d, b);

    if o1 != o2 && o3 != o4 && o1 != Orientation::Collinear && o2 != Orientation::Collinear {
        return true;
    }
    // Collinear touches and overlaps.
    (o1 == Orientation::Collinear && on_segment(a, b, c))
        || (o2 == Orientation::Collinear && on_segment(a, b, d))
        || (o3 == Orientation::Collinear && on_segment(c, d, a))
        || (o4 == Orientation::Collinear && on_segment(c, d, b))
}

/// Exact test for a proper (interior-to-interior) crossing of segments
/// `ab` and `cd`.
pub(crate) fn segments_cross_properly(
    a: &RationalPoint,
    b: &RationalPoint,
    c: &RationalPoint,
    d: &RationalPoint,
) -> bool {
    let o1 = orient(a, b, c);
    let o2 = orient(a, b, d);
    let o3 = orient(c, d, a);
    let o4 = orient(c, d, b);
    o1 != o2
        && o3 != o4
        && o1 != Orientation::Collinear
        && o2 != Orientation::Collinear
        && o3 != Orientation::Collinear
        && o4 != Orientation::Collinear
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: i64, y: i64) -> RationalPoint {
        RationalPoint::from_ints(x, y)
    }

    #[test]
    fn orientation_signs() {
        assert_eq!(
            orient(&p(0, 0), &p(1, 0), &p(0, 1)),
            Orientation::CounterClockwise
        );
        assert_eq!(orient(&p(0, 0), &p(0, 1), &p(1, 0)), Orientation::Clockwise);
        assert_eq!(orient(&p(0, 0), &p(1, 1), &p(2, 2)), Orientation::Collinear);
    }

    #[test]
    fn proper_crossing() {
        assert!(segments_cross_properly(
            &p(0, 0),
            &p(2, 2),
            &p(0, 2),
            &p(2, 0)
        ));
        // Shared endpoint is not a proper crossing.
        assert!(!segments_cross_properly(
            &p(0, 0),
            &p(2, 2),
            &p(0, 0),
            &p(2, 0)
        ));
        assert!(segments_intersect(&p(0, 0), &p(2, 2), &p(0, 0), &p(2, 0)));
    }

    #[test]
    fn midpoint_is_exact() {
        let m = p(1, 2).midpoint(&p(2, 3));
        assert_eq!(m, RationalPoint::from_fractions(3, 2, 5, 2));
    }
}
