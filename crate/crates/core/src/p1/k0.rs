use std::ops::{Add, Sub};

use super::bundle::TransitionBundle;
use super::GeometryError;

/// The image of `[E]` under `K_0(P^1) ≅ Z ⊕ Z`, `[E] ↦ (deg E, rk E)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct K0Class {
    pub degree: i64,
    pub rank: i64,
}

impl Add for K0Class {
    type Output = K0Class;
    fn add(self, o: K0Class) -> K0Class {
        K0Class {
            degree: self.degree + o.degree,
            rank: self.rank + o.rank,
        }
    }
}

impl Sub for K0Class {
    type Output = K0Class;
    fn sub(self, o: K0Class) -> K0Class {
        K0Class {
            degree: self.degree - o.degree,
            rank: self.rank - o.rank,
        }
    }
}

pub fn k0_class(e: &TransitionBundle) -> K0Class {
    K0Class {
        degree: e.degree(),
        rank: e.rank() as i64,
    }
}

/// `[left] - [right]` for the two structures of a jet module.
pub fn c_i_class(left: &TransitionBundle, right: &TransitionBundle) -> Result<K0Class, GeometryError> {
    if left.rank() != right.rank() {
        return Err(GeometryError::RankMismatch {
            left: left.rank(),
            right: right.rank(),
        });
    }
    Ok(k0_class(left) - k0_class(right))
}
