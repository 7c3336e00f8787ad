//! Dense tensors with labelled legs, every leg of the same dimension.

use crate::linalg::{Matrix, Scalar, ZERO};

#[derive(Debug, Clone, PartialEq)]
pub(crate) struct Tensor {
    /// Edge id of each leg, slowest-varying first.
    pub legs: Vec<usize>,
    pub data: Vec<Scalar>,
}

fn strides(rank: usize, d: usize) -> Vec<usize> {
    let mut s = vec![1; rank];
    for k in (0..rank.saturating_sub(1)).rev() {
        s[k] = s[k + 1] * d;
    }
    s
}

impl Tensor {
    pub fn rank(&self) -> usize {
        self.legs.len()
    }

    /// Reorders legs so that new leg `k` is old leg `order[k]`.
    pub fn permute(&self, order: &[usize], d: usize) -> Self {
        let r = self.rank();
        debug_assert_eq!(order.len(), r);
        if order.iter().enumerate().all(|(k, &o)| k == o) {
            return self.clone();
        }
        let old = strides(r, d);
        let src: Vec<usize> = order.iter().map(|&o| old[o]).collect();
        let mut data = Vec::with_capacity(self.data.len());
        let mut idx = vec![0usize; r];
        let mut off = 0usize;
        for _ in 0..self.data.len() {
            data.push(self.data[off]);
            let mut k = r;
            while k > 0 {
                k -= 1;
                idx[k] += 1;
                off += src[k];
                if idx[k] < d {
                    break;
                }
                off -= src[k] * d;
                idx[k] = 0;
            }
        }
        Self { legs: order.iter().map(|&o| self.legs[o]).collect(), data }
    }

    /// Contracts leg `pos` with the first index of `m`: the leg keeps its
    /// position and id, now carrying `m`'s second index.
    pub fn absorb(&mut self, pos: usize, m: &Matrix, d: usize) {
        let st = strides(self.rank(), d)[pos];
        let mut out = vec![ZERO; self.data.len()];
        let block = st * d;
        for base in (0..self.data.len()).step_by(block) {
            for inner in 0..st {
                for kp in 0..d {
                    let mut s = ZERO;
                    for k in 0..d {
                        s += self.data[base + k * st + inner] * m[(k, kp)];
                    }
                    out[base + kp * st + inner] = s;
                }
            }
        }
        self.data = out;
    }

    /// Sums over the diagonal of legs `p < q`, removing both.
    pub fn trace(&self, p: usize, q: usize, d: usize) -> Self {
        let r = self.rank();
        let mut order: Vec<usize> = (0..r).filter(|&k| k != p && k != q).collect();
        order.push(p);
        order.push(q);
        let t = self.permute(&order, d);
        let outer = t.data.len() / (d * d);
        let data = (0..outer)
            .map(|o| (0..d).map(|k| t.data[o * d * d + k * d + k]).sum())
            .collect();
        Self { legs: t.legs[..r - 2].to_vec(), data }
    }

    /// Traces out every edge that appears twice on this tensor.
    pub fn trace_repeated(mut self, d: usize) -> Self {
        loop {
            let found = (0..self.rank())
                .find_map(|p| ((p + 1)..self.rank()).find(|&q| self.legs[q] == self.legs[p]).map(|q| (p, q)));
            match found {
                Some((p, q)) => self = self.trace(p, q, d),
                None => return self,
            }
        }
    }

    /// Pairwise contraction over all shared legs. Output legs: `self`'s free
    /// legs then `other`'s, each in original order.
    pub fn contract(&self, other: &Self, d: usize) -> Self {
        let shared: Vec<usize> = self.legs.iter().copied().filter(|e| other.legs.contains(e)).collect();
        let free_a: Vec<usize> = (0..self.rank()).filter(|&k| !shared.contains(&self.legs[k])).collect();
        let free_b: Vec<usize> = (0..other.rank()).filter(|&k| !shared.contains(&other.legs[k])).collect();
        let pos_a = |e: usize| self.legs.iter().position(|&x| x == e).expect("shared");
        let pos_b = |e: usize| other.legs.iter().position(|&x| x == e).expect("shared");

        let order_a: Vec<usize> = free_a.iter().copied().chain(shared.iter().map(|&e| pos_a(e))).collect();
        let order_b: Vec<usize> = shared.iter().map(|&e| pos_b(e)).chain(free_b.iter().copied()).collect();
        let a = self.permute(&order_a, d);
        let b = other.permute(&order_b, d);

        let s = d.pow(shared.len() as u32);
        let fa = a.data.len() / s;
        let fb = b.data.len() / s;
        let mut data = vec![ZERO; fa * fb];
        for i in 0..fa {
            let arow = &a.data[i * s..(i + 1) * s];
            let orow = &mut data[i * fb..(i + 1) * fb];
            for (k, &x) in arow.iter().enumerate() {
                if x == ZERO {
                    continue;
                }
                let brow = &b.data[k * fb..(k + 1) * fb];
                for (o, &y) in orow.iter_mut().zip(brow) {
                    *o += x * y;
                }
            }
        }
        let legs = free_a.iter().map(|&k| self.legs[k]).chain(free_b.iter().map(|&k| other.legs[k])).collect();
        Self { legs, data }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(legs: Vec<usize>, vals: &[f64]) -> Tensor {
        Tensor { legs, data: vals.iter().map(|&x| Scalar::new(x, 0.0)).collect() }
    }

    #[test]
    fn permute_transposes() {
        let a = t(vec![0, 1], &[1.0, 2.0, 3.0, 4.0]);
        let b = a.permute(&[1, 0], 2);
        assert_eq!(b, t(vec![1, 0], &[1.0, 3.0, 2.0, 4.0]));
    }

    #[test]
    fn contract_is_matrix_product() {
        // A[x][e], B[e][y] with d = 2
        let a = t(vec![7, 5], &[1.0, 2.0, 3.0, 4.0]);
        let b = t(vec![5, 9], &[5.0, 6.0, 7.0, 8.0]);
        let c = a.contract(&b, 2);
        assert_eq!(c, t(vec![7, 9], &[19.0, 22.0, 43.0, 50.0]));
        // full contraction is the Frobenius inner product
        let b2 = t(vec![5, 7], &[5.0, 6.0, 7.0, 8.0]);
        let s = a.contract(&b2, 2);
        assert_eq!(s.legs, Vec::<usize>::new());
        assert_eq!(s.data[0], Scalar::new(1.0 * 5.0 + 2.0 * 7.0 + 3.0 * 6.0 + 4.0 * 8.0, 0.0));
    }

    #[test]
    fn trace_and_absorb() {
        let a = t(vec![3, 3], &[1.0, 2.0, 3.0, 4.0]);
        assert_eq!(a.clone().trace_repeated(2).data, vec![Scalar::new(5.0, 0.0)]);
        let mut b = t(vec![0, 1], &[1.0, 2.0, 3.0, 4.0]);
        let m = Matrix::from_row_slice(2, 2, &[0.0, 1.0, 1.0, 0.0].map(|x| Scalar::new(x, 0.0)));
        b.absorb(0, &m, 2);
        assert_eq!(b, t(vec![0, 1], &[3.0, 4.0, 1.0, 2.0]));
    }
}
