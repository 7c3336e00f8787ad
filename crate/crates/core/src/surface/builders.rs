//! Ready-made triangulations: minimal spheres and tori, fan-triangulated
//! polygon presentations for any genus, and random closed surfaces.

use rand::seq::SliceRandom;
use rand::Rng;

use super::{LabeledSurface, Slot};
use crate::group::{FiniteAbelianGroup, GroupElement};

/// Gluings of the 2-triangle sphere: both triangles share all three edges.
pub fn sphere_gluings() -> [((usize, usize), (usize, usize)); 3] {
    [((0, 0), (1, 2)), ((0, 1), (1, 1)), ((0, 2), (1, 0))]
}

/// The 2-triangle sphere, all labels trivial.
pub fn sphere(group: FiniteAbelianGroup) -> LabeledSurface {
    LabeledSurface::new(group, vec![None, None], sphere_gluings()).expect("sphere")
}

/// The square with opposite sides identified, cut along one diagonal.
pub fn torus(group: FiniteAbelianGroup) -> LabeledSurface {
    LabeledSurface::new(group, vec![None, None], [((0, 2), (1, 0)), ((0, 0), (1, 1)), ((0, 1), (1, 2))])
        .expect("torus")
}

/// Boundary of a tetrahedron, obtained by splitting one face of the sphere.
pub fn tetrahedron(group: FiniteAbelianGroup) -> LabeledSurface {
    sphere(group).pachner_13(0).expect("1-3 always applies")
}

/// Fan-triangulates a polygon whose sides are identified by `word`.
///
/// `word[i] = (letter, inverse)` labels side `i` (from polygon corner `i` to
/// `i + 1`). Each letter must occur exactly twice, once inverted. The polygon
/// needs at least three sides.
pub fn polygon_surface(group: FiniteAbelianGroup, word: &[(usize, bool)]) -> LabeledSurface {
    let n = word.len();
    assert!(n >= 3, "polygon needs at least three sides");
    let tris = n - 2;
    // triangle i = (P0, P_{i+1}, P_{i+2}); its slot 1 is polygon side i+1
    let side_slot = |side: usize| -> Slot {
        match side {
            0 => Slot::new(0, 0),
            s if s == n - 1 => Slot::new(tris - 1, 2),
            s => Slot::new(s - 1, 1),
        }
    };
    let mut gluings = Vec::new();
    for i in 0..tris.saturating_sub(1) {
        gluings.push((Slot::new(i, 2), Slot::new(i + 1, 0)));
    }
    for side in 0..n {
        let (letter, inverse) = word[side];
        if inverse {
            continue;
        }
        let other = (0..n)
            .find(|&s| word[s] == (letter, true))
            .expect("every letter needs an inverse partner");
        gluings.push((side_slot(side), side_slot(other)));
    }
    LabeledSurface::new(group, vec![None; tris], gluings).expect("polygon identification")
}

/// A closed orientable surface of genus `h`: the 2-triangle sphere for
/// `h = 0`, otherwise the `4h`-gon `a_1 b_1 a_1⁻¹ b_1⁻¹ ⋯` with `4h − 2`
/// triangles.
pub fn genus_surface(group: FiniteAbelianGroup, h: usize) -> LabeledSurface {
    if h == 0 {
        return sphere(group);
    }
    let mut word = Vec::with_capacity(4 * h);
    for k in 0..h {
        let (a, b) = (2 * k, 2 * k + 1);
        word.extend([(a, false), (b, false), (a, true), (b, true)]);
    }
    polygon_surface(group, &word)
}

/// All closed surfaces on `t` labeled triangles given by perfect matchings of
/// the `3t` slots, in a fixed order. Only sensible for very small `t`.
pub fn all_matchings(group: &FiniteAbelianGroup, t: usize) -> Vec<LabeledSurface> {
    fn rec(free: &mut Vec<usize>, cur: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        if free.is_empty() {
            out.push(cur.clone());
            return;
        }
        let a = free.remove(0);
        for i in 0..free.len() {
            let b = free.remove(i);
            cur.push((a, b));
            rec(free, cur, out);
            cur.pop();
            free.insert(i, b);
        }
        free.insert(0, a);
    }
    if (3 * t) % 2 == 1 {
        return Vec::new();
    }
    let mut out = Vec::new();
    rec(&mut (0..3 * t).collect(), &mut Vec::new(), &mut out);
    out.into_iter()
        .map(|m| {
            let gl: Vec<(Slot, Slot)> =
                m.iter().map(|&(a, b)| (Slot::new(a / 3, a % 3), Slot::new(b / 3, b % 3))).collect();
            LabeledSurface::new(group.clone(), vec![None; t], gl).expect("any matching is closed")
        })
        .collect()
}

/// A closed surface from a uniformly random perfect matching of `3t` slots
/// (`t` must be even).
pub fn random_matching<R: Rng + ?Sized>(
    rng: &mut R,
    group: &FiniteAbelianGroup,
    t: usize,
) -> LabeledSurface {
    assert!(t.is_multiple_of(2), "an odd number of triangles has an odd number of slots");
    let mut slots: Vec<usize> = (0..3 * t).collect();
    slots.shuffle(rng);
    let gl: Vec<(Slot, Slot)> = slots
        .chunks(2)
        .map(|p| (Slot::new(p[0] / 3, p[0] % 3), Slot::new(p[1] / 3, p[1] % 3)))
        .collect();
    LabeledSurface::new(group.clone(), vec![None; t], gl).expect("any matching is closed")
}

pub fn random_element<R: Rng + ?Sized>(rng: &mut R, group: &FiniteAbelianGroup) -> GroupElement {
    let r: Vec<i64> = group.orders().iter().map(|&n| rng.random_range(0..n) as i64).collect();
    group.element(&r).expect("shape matches")
}

/// Random labels on every triangle.
pub fn randomly_labeled<R: Rng + ?Sized>(rng: &mut R, s: &LabeledSurface) -> LabeledSurface {
    let labels = (0..s.num_triangles()).map(|_| random_element(rng, s.group())).collect();
    s.relabeled(labels).expect("labels from the surface's group")
}

/// Random labels on a connected surface whose sum is `class`.
pub fn random_labels_with_class<R: Rng + ?Sized>(
    rng: &mut R,
    s: &LabeledSurface,
    class: &GroupElement,
) -> LabeledSurface {
    let g = s.group();
    let n = s.num_triangles();
    assert!(n > 0);
    let mut labels: Vec<GroupElement> = (0..n - 1).map(|_| random_element(rng, g)).collect();
    let partial = g.sum(labels.iter()).expect("same group");
    labels.push(g.op(class, &g.inv(&partial).expect("same group")).expect("same group"));
    labels.shuffle(rng);
    s.relabeled(labels).expect("labels from the surface's group")
}
