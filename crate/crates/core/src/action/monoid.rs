//! Finite monoids, right actions of one monoid on another, and their lift to
//! discrete strict monoidal categories.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use super::WeakAction;
use crate::cat::Category;
use crate::error::{Error, Result};
use crate::skew::SkewMonoidal;

/// A finite monoid on `0..n` given by its multiplication table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Monoid {
    pub mul: Vec<Vec<usize>>,
    pub unit: usize,
}

impl Monoid {
    pub fn new(mul: Vec<Vec<usize>>, unit: usize) -> Result<Self> {
        let m = Monoid { mul, unit };
        m.validate()?;
        Ok(m)
    }

    pub fn cyclic(n: usize) -> Self {
        let mul = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Monoid { mul, unit: 0 }
    }

    pub fn trivial() -> Self {
        Monoid::cyclic(1)
    }

    pub fn order(&self) -> usize {
        self.mul.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a][b]
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.order();
        if n == 0 || self.unit >= n {
            return Err(Error::InvalidInstance(format!("monoid of order {n} with unit {}", self.unit)));
        }
        for (a, row) in self.mul.iter().enumerate() {
            if row.len() != n || row.iter().any(|&v| v >= n) {
                return Err(Error::InvalidInstance(format!("row {a} of the table is malformed")));
            }
        }
        for a in 0..n {
            if self.mul(self.unit, a) != a || self.mul(a, self.unit) != a {
                return Err(Error::InvalidInstance(format!("unit law fails at {a}")));
            }
            for b in 0..n {
                for c in 0..n {
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        return Err(Error::InvalidInstance(format!(
                            "associativity fails at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Endomorphisms of the monoid, as element maps.
    pub fn endomorphisms(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        all_maps(n, n)
            .into_iter()
            .filter(|f| {
                f[self.unit] == self.unit
                    && (0..n).all(|a| (0..n).all(|b| f[self.mul(a, b)] == self.mul(f[a], f[b])))
            })
            .collect()
    }
}

/// Every function `0..n → 0..m`, as value lists.
fn all_maps(n: usize, m: usize) -> Vec<Vec<usize>> {
    crate::report::odometer(&vec![m; n])
}

/// Every monoid table on `0..n` with unit `0`, for `1 ≤ n ≤ max_order`.
/// Isomorphic copies are kept.
pub fn all_monoids(max_order: usize) -> Vec<Monoid> {
    let mut out = Vec::new();
    for n in 1..=max_order {
        let free = (n - 1) * (n - 1);
        for vals in crate::report::odometer(&vec![n; free]) {
            let mut mul = vec![vec![0; n]; n];
            for a in 0..n {
                mul[0][a] = a;
                mul[a][0] = a;
            }
            for a in 1..n {
                for b in 1..n {
                    mul[a][b] = vals[(a - 1) * (n - 1) + (b - 1)];
                }
            }
            let m = Monoid { mul, unit: 0 };
            if m.validate().is_ok() {
                out.push(m);
            }
        }
    }
    out
}

/// A right action `(c, x) ↦ c^x` of `x` on `c` by monoid homomorphisms:
/// `b^x c^x = (bc)^x`, `1^x = 1`, `c^{xy} = (c^x)^y`, `c^1 = c`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonoidAction {
    pub x: Monoid,
    pub c: Monoid,
    /// `act[c][x] = c^x`
    pub act: Vec<Vec<usize>>,
}

impl MonoidAction {
    pub fn new(x: Monoid, c: Monoid, act: Vec<Vec<usize>>) -> Result<Self> {
        let m = MonoidAction { x, c, act };
        m.validate()?;
        Ok(m)
    }

    pub fn new_unchecked(x: Monoid, c: Monoid, act: Vec<Vec<usize>>) -> Self {
        MonoidAction { x, c, act }
    }

    pub fn trivial(x: Monoid, c: Monoid) -> Self {
        let act = (0..c.order()).map(|e| vec![e; x.order()]).collect();
        MonoidAction { x, c, act }
    }

    pub fn apply(&self, c: usize, x: usize) -> usize {
        self.act[c][x]
    }

    pub fn validate(&self) -> Result<()> {
        self.x.validate()?;
        self.c.validate()?;
        let (nx, nc) = (self.x.order(), self.c.order());
        if self.act.len() != nc
            || self.act.iter().any(|r| r.len() != nx || r.iter().any(|&v| v >= nc))
        {
            return Err(Error::Shape(format!("action table must be {nc} x {nx}")));
        }
        let bad = |condition: &'static str, witness: alloc::string::String| {
            Err(Error::InvalidAction { condition, witness })
        };
        for x in 0..nx {
            if self.apply(self.c.unit, x) != self.c.unit {
                return bad("1^x = 1", format!("x = {x}"));
            }
            for b in 0..nc {
                for c in 0..nc {
                    let lhs = self.c.mul(self.apply(b, x), self.apply(c, x));
                    if lhs != self.apply(self.c.mul(b, c), x) {
                        return bad("b^x c^x = (bc)^x", format!("b = {b}, c = {c}, x = {x}"));
                    }
                }
            }
        }
        for c in 0..nc {
            if self.apply(c, self.x.unit) != c {
                return bad("c^1 = c", format!("c = {c}"));
            }
            for x in 0..nx {
                for y in 0..nx {
                    if self.apply(c, self.x.mul(x, y)) != self.apply(self.apply(c, x), y) {
                        return bad("c^{xy} = (c^x)^y", format!("c = {c}, x = {x}, y = {y}"));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Every valid action of `x` on `c`, found by assigning an endomorphism of
/// `c` to each element of `x`.
pub fn all_actions(x: &Monoid, c: &Monoid) -> Vec<MonoidAction> {
    let ends = c.endomorphisms();
    let mut out = Vec::new();
    for choice in crate::report::odometer(&vec![ends.len(); x.order()]) {
        let act: Vec<Vec<usize>> = (0..c.order())
            .map(|e| choice.iter().map(|&k| ends[k][e]).collect())
            .collect();
        let m = MonoidAction::new_unchecked(x.clone(), c.clone(), act);
        if m.validate().is_ok() {
            out.push(m);
        }
    }
    out
}

/// A monoid as a discrete strict monoidal category: objects are elements,
/// only identities, tensor is multiplication.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscreteMonoid {
    pub monoid: Monoid,
}

impl Category for DiscreteMonoid {
    type Obj = usize;
    /// The identity on the given element.
    type Mor = usize;

    fn source(&self, f: &usize) -> usize {
        *f
    }
    fn target(&self, f: &usize) -> usize {
        *f
    }
    fn identity(&self, a: &usize) -> usize {
        *a
    }
    fn compose(&self, f: &usize, g: &usize) -> Result<usize> {
        if f == g {
            Ok(*f)
        } else {
            Err(Error::IllTyped(format!("id_{f} ; id_{g}")))
        }
    }
    fn is_morphism(&self, f: &usize) -> bool {
        *f < self.monoid.order()
    }
    fn hom(&self, a: &usize, b: &usize) -> Result<Vec<usize>> {
        Ok(if a == b { vec![*a] } else { Vec::new() })
    }
}

impl SkewMonoidal for DiscreteMonoid {
    fn tensor_obj(&self, a: &usize, b: &usize) -> usize {
        self.monoid.mul(*a, *b)
    }
    fn tensor_mor(&self, f: &usize, g: &usize) -> Result<usize> {
        Ok(self.monoid.mul(*f, *g))
    }
    fn unit(&self) -> usize {
        self.monoid.unit
    }
    fn assoc(&self, a: &usize, b: &usize, c: &usize) -> Result<usize> {
        Ok(self.tensor3l(a, b, c))
    }
    fn lunit(&self, a: &usize) -> Result<usize> {
        Ok(*a)
    }
    fn runit(&self, a: &usize) -> Result<usize> {
        Ok(*a)
    }
}

/// A monoid action seen as a weak action between discrete categories, with
/// every structure map an identity.
#[derive(Debug, Clone)]
pub struct LiftedAction {
    pub x: DiscreteMonoid,
    pub c: DiscreteMonoid,
    pub act: Vec<Vec<usize>>,
}

pub fn lift_monoid_action(m: &MonoidAction) -> Result<LiftedAction> {
    m.validate()?;
    Ok(lift_monoid_action_unchecked(m))
}

/// Lifts without validating, so that broken tables reach the checker.
pub fn lift_monoid_action_unchecked(m: &MonoidAction) -> LiftedAction {
    LiftedAction {
        x: DiscreteMonoid { monoid: m.x.clone() },
        c: DiscreteMonoid { monoid: m.c.clone() },
        act: m.act.clone(),
    }
}

impl WeakAction for LiftedAction {
    type X = DiscreteMonoid;
    type C = DiscreteMonoid;

    fn acting(&self) -> &DiscreteMonoid {
        &self.x
    }
    fn acted(&self) -> &DiscreteMonoid {
        &self.c
    }
    fn act_obj(&self, c: &usize, x: &usize) -> usize {
        self.act[*c][*x]
    }
    fn act_mor(&self, g: &usize, x: &usize) -> Result<usize> {
        Ok(self.act[*g][*x])
    }
    fn act_x_mor(&self, c: &usize, f: &usize) -> Result<usize> {
        Ok(self.act[*c][*f])
    }
    fn phi2(&self, x: &usize, b: &usize, c: &usize) -> Result<usize> {
        Ok(self.c.tensor_obj(&self.act_obj(b, x), &self.act_obj(c, x)))
    }
    fn phi0(&self, _: &usize) -> Result<usize> {
        Ok(self.c.unit())
    }
    fn psi2(&self, x: &usize, y: &usize, c: &usize) -> Result<usize> {
        Ok(self.act_obj(c, &self.x.tensor_obj(x, y)))
    }
    fn psi0(&self, c: &usize) -> Result<usize> {
        Ok(self.act_obj(c, &self.x.unit()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iso_classes(ms: &[Monoid]) -> usize {
        let mut reps: Vec<&Monoid> = Vec::new();
        for m in ms {
            let n = m.order();
            let iso = |r: &Monoid| {
                r.order() == n
                    && crate::report::odometer(&vec![n; n]).into_iter().any(|p| {
                        let mut seen = p.clone();
                        seen.sort_unstable();
                        seen.dedup();
                        seen.len() == n
                            && (0..n).all(|a| (0..n).all(|b| p[m.mul(a, b)] == r.mul(p[a], p[b])))
                    })
            };
            if !reps.iter().any(|r| iso(r)) {
                reps.push(m);
            }
        }
        reps.len()
    }

    #[test]
    fn monoid_counts() {
        // up to isomorphism: 1, 2 and 7 monoids of orders 1, 2, 3
        let ms = all_monoids(3);
        let by = |n: usize| ms.iter().filter(|m| m.order() == n).cloned().collect::<Vec<_>>();
        assert_eq!(iso_classes(&by(1)), 1);
        assert_eq!(iso_classes(&by(2)), 2);
        assert_eq!(iso_classes(&by(3)), 7);
    }

    #[test]
    fn inversion_action_on_c3() {
        let act = vec![vec![0, 0], vec![1, 2], vec![2, 1]];
        assert!(MonoidAction::new(Monoid::cyclic(2), Monoid::cyclic(3), act).is_ok());
    }

    #[test]
    fn unit_condition_is_reported() {
        let act = vec![vec![0, 1], vec![1, 1]];
        let err = MonoidAction::new(Monoid::cyclic(2), Monoid::cyclic(2), act).unwrap_err();
        assert!(matches!(err, Error::InvalidAction { .. }));
    }

    #[test]
    fn endomorphisms_of_c3() {
        // x ↦ 0, x ↦ x, x ↦ -x
        assert_eq!(Monoid::cyclic(3).endomorphisms().len(), 3);
    }
}
