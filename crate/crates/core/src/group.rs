//! Finite abelian groups presented as products of cyclic factors.
//!
//! Elements are residue vectors and the group law is written additively, so
//! the class carried by a glued cobordism is the sum of the classes of its
//! pieces. The trivial group has no factors and exactly one element, `[]`.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("cyclic factor {index} has non-positive order {order}")]
    NonPositiveOrder { index: usize, order: i64 },
    #[error("group mismatch: element has {found} residues, group has {expected} factors")]
    GroupMismatch { expected: usize, found: usize },
}

/// `Z/n_1 × … × Z/n_k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FiniteAbelianGroup {
    orders: Vec<u64>,
}

/// A residue vector; each entry is reduced modulo the matching factor order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GroupElement(Vec<u64>);

impl GroupElement {
    pub fn residues(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, r) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, "]")
    }
}

impl FiniteAbelianGroup {
    pub fn new(orders: &[i64]) -> Result<Self, GroupError> {
        let orders = orders
            .iter()
            .enumerate()
            .map(|(index, &order)| {
                if order < 1 {
                    Err(GroupError::NonPositiveOrder { index, order })
                } else {
                    Ok(order as u64)
                }
            })
            .collect::<Result<_, _>>()?;
        Ok(Self { orders })
    }

    pub fn trivial() -> Self {
        Self { orders: Vec::new() }
    }

    /// `Z/n`.
    pub fn cyclic(n: u64) -> Self {
        assert!(n >= 1, "cyclic group order must be positive");
        Self { orders: vec![n] }
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn num_factors(&self) -> usize {
        self.orders.len()
    }

    /// Number of elements.
    pub fn order(&self) -> u64 {
        self.orders.iter().product()
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement(vec![0; self.orders.len()])
    }

    /// The `i`-th generator: residue 1 in factor `i`, 0 elsewhere.
    pub fn generator(&self, i: usize) -> GroupElement {
        let mut r = vec![0; self.orders.len()];
        r[i] = 1 % self.orders[i];
        GroupElement(r)
    }

    /// Builds an element from arbitrary integers, reducing each modulo its factor.
    pub fn element(&self, residues: &[i64]) -> Result<GroupElement, GroupError> {
        self.check_len(residues.len())?;
        Ok(GroupElement(
            residues
                .iter()
                .zip(&self.orders)
                .map(|(&r, &n)| r.rem_euclid(n as i64) as u64)
                .collect(),
        ))
    }

    /// Accepts an element only if it has the right shape and is already reduced.
    pub fn check(&self, g: &GroupElement) -> Result<(), GroupError> {
        self.check_len(g.len())?;
        if g.0.iter().zip(&self.orders).all(|(r, n)| r < n) {
            Ok(())
        } else {
            Err(GroupError::GroupMismatch { expected: self.orders.len(), found: g.len() })
        }
    }

    fn check_len(&self, found: usize) -> Result<(), GroupError> {
        if found == self.orders.len() {
            Ok(())
        } else {
            Err(GroupError::GroupMismatch { expected: self.orders.len(), found })
        }
    }

    pub fn op(&self, g: &GroupElement, h: &GroupElement) -> Result<GroupElement, GroupError> {
        self.check_len(g.len())?;
        self.check_len(h.len())?;
        Ok(GroupElement(
            g.0.iter()
                .zip(&h.0)
                .zip(&self.orders)
                .map(|((a, b), n)| (a % n + b % n) % n)
                .collect(),
        ))
    }

    pub fn inv(&self, g: &GroupElement) -> Result<GroupElement, GroupError> {
        self.check_len(g.len())?;
        Ok(GroupElement(g.0.iter().zip(&self.orders).map(|(a, n)| (n - a % n) % n).collect()))
    }

    /// Sum of a sequence of elements.
    pub fn sum<'a>(
        &self,
        items: impl IntoIterator<Item = &'a GroupElement>,
    ) -> Result<GroupElement, GroupError> {
        items.into_iter().try_fold(self.identity(), |acc, g| self.op(&acc, g))
    }

    /// All elements in lexicographic order of residues.
    pub fn enumerate(&self) -> Vec<GroupElement> {
        let mut out = Vec::with_capacity(self.order() as usize);
        let mut cur = vec![0u64; self.orders.len()];
        loop {
            out.push(GroupElement(cur.clone()));
            // odometer, last factor fastest
            let mut i = self.orders.len();
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                cur[i] += 1;
                if cur[i] < self.orders[i] {
                    break;
                }
                cur[i] = 0;
            }
        }
    }
}

impl fmt::Display for FiniteAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.orders.is_empty() {
            return write!(f, "0");
        }
        for (i, n) in self.orders.iter().enumerate() {
            if i > 0 {
                write!(f, " x ")?;
            }
            write!(f, "Z/{n}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(g: &FiniteAbelianGroup, r: &[i64]) -> GroupElement {
        g.element(r).unwrap()
    }

    #[test]
    fn construction() {
        let t = FiniteAbelianGroup::new(&[]).unwrap();
        assert_eq!(t.order(), 1);
        assert_eq!(t.enumerate(), vec![t.identity()]);
        assert!(t.identity().is_empty());

        assert_eq!(FiniteAbelianGroup::new(&[2]).unwrap().order(), 2);
        assert_eq!(FiniteAbelianGroup::new(&[2, 3]).unwrap().order(), 6);
        assert_eq!(
            FiniteAbelianGroup::new(&[2, 0]),
            Err(GroupError::NonPositiveOrder { index: 1, order: 0 })
        );
        assert!(FiniteAbelianGroup::new(&[-3]).is_err());
    }

    #[test]
    fn arithmetic() {
        let z4 = FiniteAbelianGroup::cyclic(4);
        assert_eq!(z4.op(&el(&z4, &[3]), &el(&z4, &[2])).unwrap(), el(&z4, &[1]));

        let g = FiniteAbelianGroup::new(&[2, 3]).unwrap();
        assert_eq!(g.inv(&el(&g, &[1, 2])).unwrap(), el(&g, &[1, 1]));
        assert_eq!(el(&g, &[-1, 7]), el(&g, &[1, 1]));

        let bad = el(&z4, &[1]);
        assert_eq!(
            g.op(&bad, &g.identity()),
            Err(GroupError::GroupMismatch { expected: 2, found: 1 })
        );
    }

    #[test]
    fn enumeration_is_lexicographic() {
        let z2 = FiniteAbelianGroup::cyclic(2);
        assert_eq!(z2.enumerate(), vec![el(&z2, &[0]), el(&z2, &[1])]);
        let k = FiniteAbelianGroup::new(&[2, 2]).unwrap();
        let got: Vec<Vec<u64>> = k.enumerate().iter().map(|g| g.residues().to_vec()).collect();
        assert_eq!(got, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
    }

    #[test]
    fn group_laws_exhaustive() {
        // every factorization with at most 64 elements
        let shapes: Vec<Vec<i64>> = vec![
            vec![],
            vec![1],
            vec![2],
            vec![7],
            vec![64],
            vec![2, 2],
            vec![2, 3],
            vec![4, 4],
            vec![2, 2, 2],
            vec![3, 1, 5],
            vec![2, 2, 2, 2, 2, 2],
        ];
        for shape in shapes {
            let g = FiniteAbelianGroup::new(&shape).unwrap();
            let all = g.enumerate();
            assert_eq!(all.len() as u64, g.order());
            let e = g.identity();
            for a in &all {
                assert_eq!(&g.op(a, &e).unwrap(), a);
                assert_eq!(g.op(a, &g.inv(a).unwrap()).unwrap(), e);
                assert_eq!(&g.inv(&g.inv(a).unwrap()).unwrap(), a);
                for b in &all {
                    let ab = g.op(a, b).unwrap();
                    assert_eq!(ab, g.op(b, a).unwrap());
                    for c in &all {
                        assert_eq!(g.op(&ab, c).unwrap(), g.op(a, &g.op(b, c).unwrap()).unwrap());
                    }
                }
            }
        }
    }
}
