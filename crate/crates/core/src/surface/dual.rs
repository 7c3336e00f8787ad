use super::LabeledSurface;
use crate::group::GroupElement;

/// A vertex of the dual graph: one triangle, with its three flags listed in
/// the cyclic order induced by the triangle's orientation (slot 0 first).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualVertex {
    pub label: GroupElement,
    /// Flag ids `3 t + e` for `e = 0, 1, 2`.
    pub flags: [usize; 3],
}

/// A dual edge joins the two flags of one gluing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DualEdge {
    pub flags: [usize; 2],
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualGraph {
    pub vertices: Vec<DualVertex>,
    pub edges: Vec<DualEdge>,
}

impl DualGraph {
    pub(crate) fn of(s: &LabeledSurface) -> Self {
        let vertices = s
            .labels()
            .iter()
            .enumerate()
            .map(|(t, label)| DualVertex { label: label.clone(), flags: [3 * t, 3 * t + 1, 3 * t + 2] })
            .collect();
        let edges =
            s.gluings().iter().map(|g| DualEdge { flags: [g.a.index(), g.b.index()] }).collect();
        Self { vertices, edges }
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn num_flags(&self) -> usize {
        3 * self.vertices.len()
    }

    /// Vertex owning a flag.
    pub fn flag_vertex(flag: usize) -> usize {
        flag / 3
    }

    /// For each vertex, the edge ids of its flags in cyclic order. A self-loop
    /// lists its edge twice.
    pub fn legs(&self) -> Vec<Vec<usize>> {
        let mut edge_of_flag = vec![usize::MAX; self.num_flags()];
        for (e, edge) in self.edges.iter().enumerate() {
            for &f in &edge.flags {
                edge_of_flag[f] = e;
            }
        }
        self.vertices.iter().map(|v| v.flags.iter().map(|&f| edge_of_flag[f]).collect()).collect()
    }

    /// Every flag lies in exactly one edge and every vertex has degree 3.
    pub fn is_consistent(&self) -> bool {
        let mut seen = vec![0u8; self.num_flags()];
        for e in &self.edges {
            for &f in &e.flags {
                if f >= seen.len() {
                    return false;
                }
                seen[f] += 1;
            }
        }
        seen.iter().all(|&c| c == 1) && 2 * self.num_edges() == self.num_flags()
    }
}

#[cfg(test)]
mod tests {
    use super::super::builders::*;
    use super::*;
    use crate::group::FiniteAbelianGroup;

    #[test]
    fn theta_graphs() {
        for s in [sphere(FiniteAbelianGroup::trivial()), torus(FiniteAbelianGroup::trivial())] {
            let d = s.dual_graph();
            assert_eq!(d.num_vertices(), 2);
            assert_eq!(d.num_edges(), 3);
            assert!(d.is_consistent());
            // every edge joins the two vertices
            for e in &d.edges {
                assert_ne!(DualGraph::flag_vertex(e.flags[0]), DualGraph::flag_vertex(e.flags[1]));
            }
        }
        // the two presentations differ in how flags pair up
        let a = sphere(FiniteAbelianGroup::trivial()).dual_graph();
        let b = torus(FiniteAbelianGroup::trivial()).dual_graph();
        assert_ne!(a.edges, b.edges);
    }

    #[test]
    fn handshake() {
        let s = genus_surface(FiniteAbelianGroup::trivial(), 2);
        let d = s.dual_graph();
        assert_eq!(2 * d.num_edges(), 3 * d.num_vertices());
        let legs = d.legs();
        assert!(legs.iter().all(|l| l.len() == 3));
    }
}
