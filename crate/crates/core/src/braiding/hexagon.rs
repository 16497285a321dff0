use serde::Serialize;

use crate::algebra::{FiniteAbelianGroup, GroupElement, Phase};
use crate::cocycle::CochainTable;

/// A triple where one of the hexagon identities fails.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HexagonViolation {
    pub x: GroupElement,
    pub y: GroupElement,
    pub z: GroupElement,
    /// Residual of `R(xy,z) - R(x,z) - R(y,z) - ω(x,y,z) - ω(z,x,y) + ω(x,z,y)`.
    pub first: Phase,
    /// Residual of `R(x,yz) - R(x,y) - R(x,z) + ω(x,y,z) + ω(y,z,x) - ω(y,x,z)`.
    pub second: Phase,
}

/// Index-level view of `ω` and `R` shared with the searches.
pub(crate) struct Tables<'a> {
    pub ord: usize,
    pub mult: &'a [usize],
    pub omega: &'a [Phase],
}

impl Tables<'_> {
    #[inline]
    pub fn w(&self, x: usize, y: usize, z: usize) -> Phase {
        self.omega[(x * self.ord + y) * self.ord + z]
    }

    #[inline]
    pub fn m(&self, x: usize, y: usize) -> usize {
        self.mult[x * self.ord + y]
    }

    #[inline]
    pub fn first(&self, r: &[Phase], x: usize, y: usize, z: usize) -> Phase {
        let o = self.ord;
        r[self.m(x, y) * o + z] - r[x * o + z] - r[y * o + z] - self.w(x, y, z) - self.w(z, x, y) + self.w(x, z, y)
    }

    #[inline]
    pub fn second(&self, r: &[Phase], x: usize, y: usize, z: usize) -> Phase {
        let o = self.ord;
        r[x * o + self.m(y, z)] - r[x * o + y] - r[x * o + z] + self.w(x, y, z) + self.w(y, z, x) - self.w(y, x, z)
    }

    pub fn satisfied(&self, r: &[Phase]) -> bool {
        let o = self.ord;
        (0..o).all(|x| (0..o).all(|y| (0..o).all(|z| self.first(r, x, y, z).is_zero() && self.second(r, x, y, z).is_zero())))
    }
}

/// Every triple where either hexagon identity fails, in index order.
pub fn hexagon_residuals(omega: &CochainTable, r: &CochainTable) -> Vec<HexagonViolation> {
    assert_eq!(omega.degree(), 3, "ω must have degree 3");
    assert_eq!(r.degree(), 2, "R must have degree 2");
    assert_eq!(omega.group(), r.group(), "group mismatch");
    let group: &FiniteAbelianGroup = omega.group();
    let mult = group.multiplication_table();
    let t = Tables {
        ord: group.order_usize(),
        mult: &mult,
        omega: omega.values(),
    };
    let o = t.ord;
    let mut out = Vec::new();
    for x in 0..o {
        for y in 0..o {
            for z in 0..o {
                let first = t.first(r.values(), x, y, z);
                let second = t.second(r.values(), x, y, z);
                if !first.is_zero() || !second.is_zero() {
                    out.push(HexagonViolation {
                        x: group.element_at(x),
                        y: group.element_at(y),
                        z: group.element_at(z),
                        first,
                        second,
                    });
                }
            }
        }
    }
    out
}
