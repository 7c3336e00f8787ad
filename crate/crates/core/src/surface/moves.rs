//! Local moves on labeled triangulations.
//!
//! Every move returns a new surface and leaves the total class of each
//! connected component unchanged. Labels are placed by fixed conventions:
//! a 2-2 flip puts the sum of both labels on the first new triangle, a 1-3
//! split keeps the label on child 0, and a 3-1 merge sums the three labels.

use std::collections::HashMap;

use super::{LabeledSurface, Slot, SurfaceError};
use crate::group::GroupElement;

impl LabeledSurface {
    /// Moves the label of `from` onto the adjacent triangle `to`:
    /// `(g, h) ↦ (0, g + h)`.
    pub fn homotopy_shift(&self, from: usize, to: usize) -> Result<Self, SurfaceError> {
        let n = self.num_triangles();
        for t in [from, to] {
            if t >= n {
                return Err(SurfaceError::BadTriangle { triangle: t });
            }
        }
        let adjacent = from != to
            && (0..3).any(|e| self.partner(Slot::new(from, e)).triangle == to);
        if !adjacent {
            return Err(SurfaceError::NotAdjacent { from, to });
        }
        let mut labels = self.labels.clone();
        labels[to] = self.group.op(&labels[from], &labels[to])?;
        labels[from] = self.group.identity();
        self.relabeled(labels)
    }

    /// Flips the edge of gluing `index` to the other diagonal of the
    /// quadrilateral formed by its two triangles.
    ///
    /// With triangle `t = (a, b, c)` glued along `a→b` to `t' = (b, a, d)`,
    /// the result has `t = (c, a, d)` and `t' = (d, b, c)` sharing `d–c`.
    pub fn pachner_22(&self, index: usize) -> Result<Self, SurfaceError> {
        let g = *self.gluings.get(index).ok_or(SurfaceError::BadGluingIndex { index })?;
        let (t, e) = (g.a.triangle, g.a.edge);
        let (u, f) = (g.b.triangle, g.b.edge);
        if t == u {
            return Err(SurfaceError::SelfGluing { index });
        }
        let shared = self
            .gluings
            .iter()
            .filter(|q| {
                (q.a.triangle == t && q.b.triangle == u) || (q.a.triangle == u && q.b.triangle == t)
            })
            .count();
        if shared > 1 {
            return Err(SurfaceError::MultiSharedEdge { index });
        }
        let mut remap = HashMap::new();
        remap.insert(Slot::new(t, (e + 2) % 3), Slot::new(t, 0)); // c→a
        remap.insert(Slot::new(u, (f + 1) % 3), Slot::new(t, 1)); // a→d
        remap.insert(Slot::new(u, (f + 2) % 3), Slot::new(u, 0)); // d→b
        remap.insert(Slot::new(t, (e + 1) % 3), Slot::new(u, 1)); // b→c
        let map = |s: Slot| remap.get(&s).copied().unwrap_or(s);
        let gluings: Vec<(Slot, Slot)> = self
            .gluings
            .iter()
            .enumerate()
            .map(|(i, q)| {
                if i == index {
                    (Slot::new(t, 2), Slot::new(u, 2))
                } else {
                    (map(q.a), map(q.b))
                }
            })
            .collect();
        let mut labels = self.labels.clone();
        labels[t] = self.group.op(&self.labels[t], &self.labels[u])?;
        labels[u] = self.group.identity();
        Self::with_labels(self.group.clone(), labels, gluings)
    }

    /// Splits triangle `t` into three around a new interior vertex. Child 0
    /// keeps index `t`; children 1 and 2 are appended.
    pub fn pachner_13(&self, t: usize) -> Result<Self, SurfaceError> {
        let n = self.num_triangles();
        if t >= n {
            return Err(SurfaceError::BadTriangle { triangle: t });
        }
        let children = [t, n, n + 1];
        // child k = (c_k, c_{k+1}, v); its slot 0 inherits old slot k
        let map = |s: Slot| {
            if s.triangle == t {
                Slot::new(children[s.edge], 0)
            } else {
                s
            }
        };
        let mut gluings: Vec<(Slot, Slot)> =
            self.gluings.iter().map(|q| (map(q.a), map(q.b))).collect();
        for k in 0..3 {
            gluings.push((Slot::new(children[k], 1), Slot::new(children[(k + 1) % 3], 2)));
        }
        let mut labels = self.labels.clone();
        labels.push(self.group.identity());
        labels.push(self.group.identity());
        Self::with_labels(self.group.clone(), labels, gluings)
    }

    /// Merges the three triangles around the vertex at corner `corner` of
    /// triangle `t`. The vertex must have degree 3 with three distinct
    /// triangles; the merged triangle takes the smallest of their indices
    /// and the other two are removed.
    pub fn pachner_31(&self, t: usize, corner: usize) -> Result<Self, SurfaceError> {
        let n = self.num_triangles();
        if t >= n || corner > 2 {
            return Err(SurfaceError::BadTriangle { triangle: t });
        }
        let bad = SurfaceError::BadVertex { triangle: t, corner };
        let (class, _) = self.corner_classes();
        let target = class[3 * t + corner];
        let members: Vec<usize> = (0..3 * n).filter(|&x| class[x] == target).collect();
        if members.len() != 3 {
            return Err(bad);
        }
        let mut tris: Vec<usize> = members.iter().map(|x| x / 3).collect();
        tris.sort_unstable();
        tris.dedup();
        if tris.len() != 3 {
            return Err(bad);
        }
        let corner_in = |tri: usize| members.iter().find(|&&x| x / 3 == tri).map(|x| x % 3);

        // walk around the vertex starting from the smallest triangle
        let mut ring = Vec::with_capacity(3);
        let mut cur = tris[0];
        for _ in 0..3 {
            let c = corner_in(cur).ok_or(bad.clone())?;
            ring.push((cur, c));
            // spoke x→v is slot c+2; its partner runs v→x in the next triangle
            let next = self.partner(Slot::new(cur, (c + 2) % 3));
            if corner_in(next.triangle) != Some(next.edge) {
                return Err(bad);
            }
            cur = next.triangle;
        }
        if cur != ring[0].0 {
            return Err(bad);
        }

        let merged = ring[0].0;
        let removed = [ring[1].0, ring[2].0];
        let renumber = |old: usize| old - removed.iter().filter(|&&r| r < old).count();
        let mut remap = HashMap::new();
        for (k, &(tri, c)) in ring.iter().enumerate() {
            remap.insert(Slot::new(tri, (c + 1) % 3), Slot::new(merged, k));
        }
        let spokes: Vec<Slot> =
            ring.iter().flat_map(|&(tri, c)| [Slot::new(tri, c), Slot::new(tri, (c + 2) % 3)]).collect();
        let map = |s: Slot| {
            let s = remap.get(&s).copied().unwrap_or(s);
            Slot::new(renumber(s.triangle), s.edge)
        };
        let gluings: Vec<(Slot, Slot)> = self
            .gluings
            .iter()
            .filter(|q| !spokes.contains(&q.a))
            .map(|q| (map(q.a), map(q.b)))
            .collect();
        let sum = self.group.sum(ring.iter().map(|&(tri, _)| &self.labels[tri]))?;
        let labels: Vec<GroupElement> = (0..n)
            .filter(|x| !removed.contains(x))
            .map(|x| if x == merged { sum.clone() } else { self.labels[x].clone() })
            .collect();
        Self::with_labels(self.group.clone(), labels, gluings)
    }

    /// Corners `(t, c)` at which [`pachner_31`](Self::pachner_31) applies,
    /// one representative per vertex.
    pub fn degree3_vertices(&self) -> Vec<(usize, usize)> {
        let (class, count) = self.corner_classes();
        let mut members = vec![Vec::new(); count];
        for (x, &c) in class.iter().enumerate() {
            members[c].push(x);
        }
        members
            .iter()
            .filter(|m| m.len() == 3)
            .filter(|m| {
                let (a, b, c) = (m[0] / 3, m[1] / 3, m[2] / 3);
                a != b && b != c && a != c
            })
            .map(|m| (m[0] / 3, m[0] % 3))
            .filter(|&(t, c)| self.pachner_31(t, c).is_ok())
            .collect()
    }

    /// Gluing indices at which [`pachner_22`](Self::pachner_22) applies.
    pub fn flippable_edges(&self) -> Vec<usize> {
        (0..self.gluings.len()).filter(|&i| self.pachner_22(i).is_ok()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::super::builders::*;
    use super::*;
    use crate::group::FiniteAbelianGroup;

    fn z4() -> FiniteAbelianGroup {
        FiniteAbelianGroup::cyclic(4)
    }

    #[test]
    fn shift_moves_labels() {
        let g = z4();
        let s = torus(g.clone())
            .relabeled(vec![g.element(&[1]).unwrap(), g.element(&[2]).unwrap()])
            .unwrap();
        let moved = s.homotopy_shift(0, 1).unwrap();
        assert_eq!(moved.labels(), &[g.identity(), g.element(&[3]).unwrap()]);
        assert_eq!(moved.total_class(), s.total_class());
        let back = moved.homotopy_shift(1, 0).unwrap();
        assert_eq!(back.labels(), &[g.element(&[3]).unwrap(), g.identity()]);

        let plain = torus(g.clone());
        assert_eq!(plain.homotopy_shift(0, 1).unwrap(), plain);
        assert_eq!(plain.homotopy_shift(0, 0), Err(SurfaceError::NotAdjacent { from: 0, to: 0 }));
        let two = plain.disjoint_union(&plain).unwrap();
        assert_eq!(two.homotopy_shift(0, 2), Err(SurfaceError::NotAdjacent { from: 0, to: 2 }));
    }

    #[test]
    fn one_three_and_back() {
        let g = z4();
        let s = sphere(g.clone()).with_label(0, g.element(&[3]).unwrap()).unwrap();
        let t = s.pachner_13(0).unwrap();
        assert_eq!(t.num_triangles(), 4);
        assert_eq!(t.euler_characteristic(), 2);
        assert_eq!(
            t.labels(),
            &[g.element(&[3]).unwrap(), g.identity(), g.identity(), g.identity()]
        );
        // the new vertex is corner 2 of child 0
        let back = t.pachner_31(0, 2).unwrap();
        assert_eq!(back, s);
        assert_eq!(back.total_class(), s.total_class());
    }

    #[test]
    fn three_one_rejects_bad_vertices() {
        let s = sphere(z4());
        // vertices of the 2-triangle sphere have degree 2
        assert!(matches!(s.pachner_31(0, 0), Err(SurfaceError::BadVertex { .. })));
        let t = torus(z4());
        assert!(matches!(t.pachner_31(0, 0), Err(SurfaceError::BadVertex { .. })));
    }

    #[test]
    fn two_two_flip() {
        let g = z4();
        let tet = sphere(g.clone()).pachner_13(0).unwrap();
        let tet = tet
            .relabeled(vec![
                g.element(&[1]).unwrap(),
                g.element(&[2]).unwrap(),
                g.identity(),
                g.element(&[3]).unwrap(),
            ])
            .unwrap();
        // gluing 0 joins triangles 0 and 1 of the original sphere, now
        // child 0 and the back triangle
        let q = tet.gluings()[0];
        let flipped = tet.pachner_22(0).unwrap();
        assert_eq!(flipped.num_triangles(), 4);
        assert_eq!(flipped.euler_characteristic(), 2);
        assert_eq!(flipped.total_class(), tet.total_class());
        let sum = g.op(tet.label(q.a.triangle), tet.label(q.b.triangle)).unwrap();
        assert_eq!(flipped.label(q.a.triangle), &sum);
        assert_eq!(flipped.label(q.b.triangle), &g.identity());
    }

    #[test]
    fn two_two_rejections() {
        let t = torus(z4());
        assert_eq!(t.pachner_22(0), Err(SurfaceError::MultiSharedEdge { index: 0 }));
        assert_eq!(t.pachner_22(7), Err(SurfaceError::BadGluingIndex { index: 7 }));
        // a triangle folded onto itself along two edges
        let folded = LabeledSurface::new(
            z4(),
            vec![None, None],
            [((0, 0), (0, 1)), ((0, 2), (1, 0)), ((1, 1), (1, 2))],
        )
        .unwrap();
        assert_eq!(folded.pachner_22(0), Err(SurfaceError::SelfGluing { index: 0 }));
        assert!(folded.pachner_22(1).is_ok());
    }
}
