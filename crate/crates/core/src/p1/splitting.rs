use std::fmt;

use super::bundle::TransitionBundle;
use super::cohomology::{h0, h1};
use super::GeometryError;

/// The exponents `a_1 >= ... >= a_r` with `E ≅ O(a_1) ⊕ ... ⊕ O(a_r)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SplittingType(Vec<i64>);

impl SplittingType {
    pub fn new(mut degrees: Vec<i64>) -> Self {
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        SplittingType(degrees)
    }

    pub fn degrees(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().sum()
    }

    /// `h^0(E(n)) = Σ max(0, a_i + n + 1)`.
    pub fn h0(&self, n: i64) -> usize {
        self.0.iter().map(|a| (a + n + 1).max(0) as usize).sum()
    }

    /// `h^1(E(n)) = Σ max(0, -a_i - n - 1)`.
    pub fn h1(&self, n: i64) -> usize {
        self.0.iter().map(|a| (-a - n - 1).max(0) as usize).sum()
    }
}

impl fmt::Display for SplittingType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.0.iter().map(|a| format!("O({a})")).collect();
        write!(f, "{}", parts.join(" ⊕ "))
    }
}

const SLACK: i64 = 2;

/// Recovers the splitting type from any oracle for `n ↦ h^0(E(n))`.
///
/// The increments `δ(n) = h^0(n) - h^0(n-1)` count the `a_i >= -n`. The scan
/// walks down until `h^0` vanishes and up until `δ = r`, each for `SLACK`
/// consecutive twists.
pub fn splitting_from_h0(
    rank: usize,
    degree: i64,
    mut h0_of: impl FnMut(i64) -> usize,
) -> Result<SplittingType, GeometryError> {
    let r = rank;
    if r == 0 {
        return Ok(SplittingType(Vec::new()));
    }
    // lowest twist with h0 > 0 is -a_max; scan down from -degree / r
    let start = -degree.div_euclid(r as i64);
    let mut lo = start;
    let mut zeros = 0;
    while zeros < SLACK {
        lo -= 1;
        if h0_of(lo) == 0 {
            zeros += 1;
        } else {
            zeros = 0;
        }
        if lo < start - 10_000 {
            return Err(GeometryError::InconsistentIncrements("h0 never vanishes".into()));
        }
    }
    let mut values = vec![(lo, 0usize)];
    let mut n = lo;
    let mut full = 0;
    while full < SLACK {
        n += 1;
        let v = h0_of(n);
        let prev = values.last().unwrap().1;
        if v < prev {
            return Err(GeometryError::InconsistentIncrements(format!(
                "h0 decreases from {prev} to {v} at twist {n}"
            )));
        }
        if v - prev == r {
            full += 1;
        } else {
            full = 0;
        }
        values.push((n, v));
        if n > start + 10_000 {
            return Err(GeometryError::InconsistentIncrements("increments never reach the rank".into()));
        }
    }
    let deltas: Vec<(i64, usize)> = values.windows(2).map(|w| (w[1].0, w[1].1 - w[0].1)).collect();
    let mut degrees = Vec::with_capacity(r);
    let mut prev = 0usize;
    for &(n, d) in &deltas {
        if d > r || d < prev {
            return Err(GeometryError::InconsistentIncrements(format!(
                "increment {d} at twist {n} after {prev} (rank {r})"
            )));
        }
        degrees.extend(std::iter::repeat_n(-n, d - prev));
        prev = d;
    }
    if prev != r {
        return Err(GeometryError::InconsistentIncrements(format!(
            "increments end at {prev}, rank is {r}"
        )));
    }
    let split = SplittingType::new(degrees);
    if split.degree() != degree {
        return Err(GeometryError::InconsistentIncrements(format!(
            "{split} has degree {}, determinant gives {degree}",
            split.degree()
        )));
    }
    Ok(split)
}

/// Splitting type from `h^0` increments of the kernel computation.
pub fn splitting_type(e: &TransitionBundle) -> Result<SplittingType, GeometryError> {
    splitting_from_h0(e.rank(), e.degree(), |n| h0(e, n))
}

/// Splitting type from `h^1` and Riemann-Roch,
/// `h^0(E(n)) = h^1(E(n)) + deg E + r (n + 1)`.
pub fn splitting_type_via_h1(e: &TransitionBundle) -> Result<SplittingType, GeometryError> {
    let deg = e.degree();
    let r = e.rank() as i64;
    splitting_from_h0(e.rank(), deg, |n| {
        let v = h1(e, n) as i64 + deg + r * (n + 1);
        // a negative value would violate Riemann-Roch; map it to a sentinel
        // that fails the monotonicity check
        usize::try_from(v).unwrap_or(usize::MAX)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::matrix::Matrix;

    const Q: Field = Field::Rational;

    #[test]
    fn lines_and_sums() {
        let e = TransitionBundle::new(Matrix::from_int_terms(Q, &[&[&[(-3, 1)]]])).unwrap();
        assert_eq!(splitting_type(&e).unwrap().degrees(), &[3]);
        let e = TransitionBundle::split(Q, &[-2, 4, 1]);
        assert_eq!(splitting_type(&e).unwrap().degrees(), &[4, 1, -2]);
        assert_eq!(splitting_type_via_h1(&e).unwrap().degrees(), &[4, 1, -2]);
    }

    #[test]
    fn non_split_extension() {
        // O(0) -> E -> O(2) with nonzero extension class t^{-1}
        let t = Matrix::from_int_terms(Q, &[&[&[(0, 1)], &[(-1, 1)]], &[&[], &[(-2, 1)]]]);
        let e = TransitionBundle::new(t).unwrap();
        assert_eq!(splitting_type(&e).unwrap().degrees(), &[1, 1]);
        assert_eq!(splitting_type_via_h1(&e).unwrap().degrees(), &[1, 1]);
        let t = Matrix::from_int_terms(Q, &[&[&[(0, 1)], &[]], &[&[], &[(-2, 1)]]]);
        let e = TransitionBundle::new(t).unwrap();
        assert_eq!(splitting_type(&e).unwrap().degrees(), &[2, 0]);
    }

    #[test]
    fn inconsistent_oracle() {
        let err = splitting_from_h0(1, 0, |n| if n == 1 { 0 } else { (n + 1).max(0) as usize });
        assert!(matches!(err, Err(GeometryError::InconsistentIncrements(_))));
        let err = splitting_from_h0(1, 5, |n| (n + 1).max(0) as usize);
        assert!(matches!(err, Err(GeometryError::InconsistentIncrements(_))));
    }

    #[test]
    fn display() {
        let s = SplittingType::new(vec![1, 3]);
        assert_eq!(s.to_string(), "O(3) ⊕ O(1)");
        assert_eq!(s.h0(0), 6);
        assert_eq!(SplittingType::new(vec![-4]).h1(0), 3);
    }
}
