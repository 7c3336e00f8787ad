//! Closed oriented surfaces glued from triangles, each carrying a group label.
//!
//! Every triangle has edge slots 0, 1, 2; slot `e` is the directed edge from
//! corner `e` to corner `e + 1 (mod 3)` in the triangle's boundary orientation.
//! A gluing pairs two slots and identifies the edges head-to-tail, which is
//! what makes the glued surface oriented. Vertices of the surface are not
//! stored; they are recovered as classes of corners under the gluings.

pub mod builders;
mod dual;
mod moves;

pub use dual::{DualEdge, DualGraph, DualVertex};

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::group::{FiniteAbelianGroup, GroupElement, GroupError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SurfaceError {
    #[error("expected {expected} labels, found {found}")]
    LabelCount { expected: usize, found: usize },
    #[error("slot {slot} does not exist")]
    SlotOutOfRange { slot: Slot },
    #[error("slot {slot} is not glued")]
    OpenSlot { slot: Slot },
    #[error("slot {slot} appears in more than one gluing")]
    DuplicateSlot { slot: Slot },
    #[error("gluing {index} matches edges {a} and {b} tail-to-tail; the result would not be oriented")]
    NonOrientableGluing { index: usize, a: Slot, b: Slot },
    #[error("triangle {triangle} does not exist")]
    BadTriangle { triangle: usize },
    #[error("gluing {index} does not exist")]
    BadGluingIndex { index: usize },
    #[error("triangles {from} and {to} share no edge")]
    NotAdjacent { from: usize, to: usize },
    #[error("gluing {index} joins a triangle to itself")]
    SelfGluing { index: usize },
    #[error("the triangles of gluing {index} share more than one edge")]
    MultiSharedEdge { index: usize },
    #[error("corner {corner} of triangle {triangle} is not an interior vertex of degree 3 in three distinct triangles")]
    BadVertex { triangle: usize, corner: usize },
    #[error("surface has {components} connected components")]
    Disconnected { components: usize },
    #[error("Euler characteristic {chi} is odd")]
    OddChi { chi: i64 },
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// Edge slot `edge` of triangle `triangle`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Slot {
    pub triangle: usize,
    pub edge: usize,
}

impl Slot {
    pub fn new(triangle: usize, edge: usize) -> Self {
        Self { triangle, edge }
    }

    #[inline]
    fn index(self) -> usize {
        3 * self.triangle + self.edge
    }
}

impl From<(usize, usize)> for Slot {
    fn from((triangle, edge): (usize, usize)) -> Self {
        Self { triangle, edge }
    }
}

impl fmt::Display for Slot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.triangle, self.edge)
    }
}

/// How the two directed edges of a gluing are matched.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeMatch {
    /// Head to tail; the only matching allowed on an oriented surface.
    #[default]
    Reverse,
    /// Head to head. Always rejected.
    Preserve,
}

/// A requested gluing, as accepted by [`LabeledSurface::new`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GluingSpec {
    pub a: Slot,
    pub b: Slot,
    pub matching: EdgeMatch,
}

impl<A: Into<Slot>, B: Into<Slot>> From<(A, B)> for GluingSpec {
    fn from((a, b): (A, B)) -> Self {
        Self { a: a.into(), b: b.into(), matching: EdgeMatch::Reverse }
    }
}

/// Two slots identified head-to-tail.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Gluing {
    pub a: Slot,
    pub b: Slot,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledSurface {
    group: FiniteAbelianGroup,
    labels: Vec<GroupElement>,
    gluings: Vec<Gluing>,
    /// Gluing index for each slot, indexed by `3 t + e`.
    slot_gluing: Vec<usize>,
}

impl LabeledSurface {
    /// Builds and validates a closed oriented surface. A `None` label is the
    /// group identity.
    pub fn new<G: Into<GluingSpec>>(
        group: FiniteAbelianGroup,
        labels: Vec<Option<GroupElement>>,
        gluings: impl IntoIterator<Item = G>,
    ) -> Result<Self, SurfaceError> {
        let n = labels.len();
        let labels = labels
            .into_iter()
            .map(|l| match l {
                Some(g) => group.check(&g).map(|_| g),
                None => Ok(group.identity()),
            })
            .collect::<Result<Vec<_>, _>>()?;
        let mut slot_gluing = vec![usize::MAX; 3 * n];
        let mut stored = Vec::new();
        for (index, spec) in gluings.into_iter().map(Into::into).enumerate() {
            for s in [spec.a, spec.b] {
                if s.triangle >= n || s.edge > 2 {
                    return Err(SurfaceError::SlotOutOfRange { slot: s });
                }
            }
            if spec.matching == EdgeMatch::Preserve {
                return Err(SurfaceError::NonOrientableGluing { index, a: spec.a, b: spec.b });
            }
            for s in [spec.a, spec.b] {
                if slot_gluing[s.index()] != usize::MAX {
                    return Err(SurfaceError::DuplicateSlot { slot: s });
                }
                slot_gluing[s.index()] = index;
            }
            stored.push(Gluing { a: spec.a, b: spec.b });
        }
        if let Some(i) = slot_gluing.iter().position(|&g| g == usize::MAX) {
            return Err(SurfaceError::OpenSlot { slot: Slot::new(i / 3, i % 3) });
        }
        Ok(Self { group, labels, gluings: stored, slot_gluing })
    }

    /// Same as [`new`](Self::new) with every label set.
    pub fn with_labels<G: Into<GluingSpec>>(
        group: FiniteAbelianGroup,
        labels: Vec<GroupElement>,
        gluings: impl IntoIterator<Item = G>,
    ) -> Result<Self, SurfaceError> {
        Self::new(group, labels.into_iter().map(Some).collect(), gluings)
    }

    /// The surface with no triangles.
    pub fn empty(group: FiniteAbelianGroup) -> Self {
        Self { group, labels: Vec::new(), gluings: Vec::new(), slot_gluing: Vec::new() }
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    pub fn num_triangles(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[GroupElement] {
        &self.labels
    }

    pub fn label(&self, t: usize) -> &GroupElement {
        &self.labels[t]
    }

    pub fn gluings(&self) -> &[Gluing] {
        &self.gluings
    }

    /// Index of the gluing containing `slot`.
    pub fn gluing_of(&self, slot: Slot) -> usize {
        self.slot_gluing[slot.index()]
    }

    /// The slot glued to `slot`.
    pub fn partner(&self, slot: Slot) -> Slot {
        let g = self.gluings[self.gluing_of(slot)];
        if g.a == slot {
            g.b
        } else {
            g.a
        }
    }

    /// Replaces all labels, keeping the triangulation.
    pub fn relabeled(&self, labels: Vec<GroupElement>) -> Result<Self, SurfaceError> {
        if labels.len() != self.labels.len() {
            return Err(SurfaceError::LabelCount {
                expected: self.labels.len(),
                found: labels.len(),
            });
        }
        for l in &labels {
            self.group.check(l)?;
        }
        Ok(Self { labels, ..self.clone() })
    }

    pub fn with_label(&self, t: usize, g: GroupElement) -> Result<Self, SurfaceError> {
        if t >= self.labels.len() {
            return Err(SurfaceError::BadTriangle { triangle: t });
        }
        let mut labels = self.labels.clone();
        labels[t] = g;
        self.relabeled(labels)
    }

    /// Class id of each corner `3 t + c` and the number of classes.
    pub fn corner_classes(&self) -> (Vec<usize>, usize) {
        let mut uf = UnionFind::new(3 * self.num_triangles());
        for g in &self.gluings {
            // slot a runs corner a.e -> a.e+1, slot b runs b.e -> b.e+1, reversed
            uf.union(corner(g.a.triangle, g.a.edge), corner(g.b.triangle, g.b.edge + 1));
            uf.union(corner(g.a.triangle, g.a.edge + 1), corner(g.b.triangle, g.b.edge));
        }
        uf.classes()
    }

    pub fn num_vertices(&self) -> usize {
        self.corner_classes().1
    }

    pub fn num_edges(&self) -> usize {
        self.gluings.len()
    }

    /// `V − E + F`.
    pub fn euler_characteristic(&self) -> i64 {
        self.num_vertices() as i64 - self.num_edges() as i64 + self.num_triangles() as i64
    }

    /// Triangles of each connected component, components ordered by their
    /// smallest triangle.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut uf = UnionFind::new(self.num_triangles());
        for g in &self.gluings {
            uf.union(g.a.triangle, g.b.triangle);
        }
        let (class, count) = uf.classes();
        let mut out = vec![Vec::new(); count];
        for (t, &c) in class.iter().enumerate() {
            out[c].push(t);
        }
        out
    }

    pub fn genus(&self) -> Result<i64, SurfaceError> {
        let components = self.components().len();
        if components != 1 {
            return Err(SurfaceError::Disconnected { components });
        }
        let chi = self.euler_characteristic();
        if chi % 2 != 0 {
            return Err(SurfaceError::OddChi { chi });
        }
        Ok((2 - chi) / 2)
    }

    /// Sum of the labels on each connected component.
    pub fn total_class(&self) -> Vec<GroupElement> {
        self.components()
            .iter()
            .map(|ts| {
                self.group.sum(ts.iter().map(|&t| &self.labels[t])).expect("labels are checked")
            })
            .collect()
    }

    pub fn dual_graph(&self) -> DualGraph {
        DualGraph::of(self)
    }

    /// `self ⊔ other`, with `other`'s triangles numbered after `self`'s.
    pub fn disjoint_union(&self, other: &Self) -> Result<Self, SurfaceError> {
        if self.group != other.group {
            return Err(GroupError::GroupMismatch {
                expected: self.group.num_factors(),
                found: other.group.num_factors(),
            }
            .into());
        }
        let off = self.num_triangles();
        let shift = |s: Slot| Slot::new(s.triangle + off, s.edge);
        let labels = self.labels.iter().chain(&other.labels).cloned().collect();
        let gluings: Vec<(Slot, Slot)> = self
            .gluings
            .iter()
            .map(|g| (g.a, g.b))
            .chain(other.gluings.iter().map(|g| (shift(g.a), shift(g.b))))
            .collect();
        Self::with_labels(self.group.clone(), labels, gluings)
    }
}

#[inline]
fn corner(t: usize, c: usize) -> usize {
    3 * t + c % 3
}

/// Disjoint sets with path halving and union by size.
#[derive(Debug, Clone)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        Self { parent: (0..n).collect(), size: vec![1; n] }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
    }

    /// Dense class ids in order of first appearance.
    pub(crate) fn classes(&mut self) -> (Vec<usize>, usize) {
        let n = self.parent.len();
        let mut id = vec![usize::MAX; n];
        let mut out = Vec::with_capacity(n);
        let mut count = 0;
        for x in 0..n {
            let r = self.find(x);
            if id[r] == usize::MAX {
                id[r] = count;
                count += 1;
            }
            out.push(id[r]);
        }
        (out, count)
    }
}

#[cfg(test)]
mod tests {
    use super::builders::*;
    use super::*;

    fn z(n: u64) -> FiniteAbelianGroup {
        FiniteAbelianGroup::cyclic(n)
    }

    #[test]
    fn two_triangle_sphere_and_torus() {
        let s = sphere(FiniteAbelianGroup::trivial());
        assert_eq!((s.num_vertices(), s.num_edges(), s.num_triangles()), (3, 3, 2));
        assert_eq!(s.euler_characteristic(), 2);
        assert_eq!(s.genus().unwrap(), 0);

        let t = torus(FiniteAbelianGroup::trivial());
        assert_eq!((t.num_vertices(), t.num_edges(), t.num_triangles()), (1, 3, 2));
        assert_eq!(t.euler_characteristic(), 0);
        assert_eq!(t.genus().unwrap(), 1);
    }

    #[test]
    fn construction_errors() {
        let g = FiniteAbelianGroup::trivial();
        let one = || vec![None];
        assert_eq!(
            LabeledSurface::new(
                g.clone(),
                one(),
                [GluingSpec {
                    a: Slot::new(0, 0),
                    b: Slot::new(0, 1),
                    matching: EdgeMatch::Preserve
                }]
            ),
            Err(SurfaceError::NonOrientableGluing {
                index: 0,
                a: Slot::new(0, 0),
                b: Slot::new(0, 1)
            })
        );
        assert_eq!(
            LabeledSurface::new(g.clone(), one(), [((0, 0), (0, 1))]),
            Err(SurfaceError::OpenSlot { slot: Slot::new(0, 2) })
        );
        assert_eq!(
            LabeledSurface::new(g.clone(), one(), [((0, 0), (0, 0))]),
            Err(SurfaceError::DuplicateSlot { slot: Slot::new(0, 0) })
        );
        assert_eq!(
            LabeledSurface::new(g.clone(), vec![None, None], [((0, 0), (1, 3))]),
            Err(SurfaceError::SlotOutOfRange { slot: Slot::new(1, 3) })
        );
        assert!(matches!(
            LabeledSurface::new(
                g.clone(),
                vec![None, None],
                [((0, 0), (1, 0)), ((0, 1), (1, 1)), ((0, 2), (1, 1))]
            ),
            Err(SurfaceError::DuplicateSlot { .. })
        ));
        let bad_label = z(2).element(&[1]).unwrap();
        assert!(matches!(
            LabeledSurface::new(g, vec![Some(bad_label), None], sphere_gluings()),
            Err(SurfaceError::Group(_))
        ));
    }

    #[test]
    fn disjoint_union_and_components() {
        let g = z(3);
        let a = sphere(g.clone()).with_label(0, g.element(&[1]).unwrap()).unwrap();
        let b = sphere(g.clone()).with_label(1, g.element(&[2]).unwrap()).unwrap();
        let u = a.disjoint_union(&b).unwrap();
        assert_eq!(u.euler_characteristic(), 4);
        assert_eq!(u.genus(), Err(SurfaceError::Disconnected { components: 2 }));
        assert_eq!(u.components(), vec![vec![0, 1], vec![2, 3]]);
        assert_eq!(u.total_class(), vec![g.element(&[1]).unwrap(), g.element(&[2]).unwrap()]);
    }

    #[test]
    fn total_class_sums_labels() {
        let g = z(5);
        let s = torus(g.clone());
        assert_eq!(s.total_class(), vec![g.identity()]);
        let s = s
            .relabeled(vec![g.element(&[2]).unwrap(), g.element(&[4]).unwrap()])
            .unwrap();
        assert_eq!(s.total_class(), vec![g.element(&[1]).unwrap()]);
    }

    #[test]
    fn empty_surface() {
        let e = LabeledSurface::empty(FiniteAbelianGroup::trivial());
        assert_eq!(e.euler_characteristic(), 0);
        assert!(e.total_class().is_empty());
        assert_eq!(e.genus(), Err(SurfaceError::Disconnected { components: 0 }));
    }
}
