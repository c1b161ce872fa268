//! Root system of a finite type in simple-root coordinates.

use std::collections::{BTreeSet, VecDeque};

use crate::weyl::types::WeylType;

#[derive(Clone, Debug)]
pub struct RootSystem {
    pub kind: WeylType,
    pub cartan: Vec<Vec<i64>>,
    pub gram: Vec<Vec<i64>>,
    /// Positive roots, sorted by height then lexicographically.
    pub positive: Vec<Vec<i64>>,
}

impl RootSystem {
    pub fn new(kind: WeylType) -> Self {
        let kind = kind.finite_part();
        let cartan = kind.cartan_matrix();
        let gram = kind.gram_matrix();
        let m = kind.rank;
        let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
        for i in 0..m {
            let mut e = vec![0; m];
            e[i] = 1;
            seen.insert(e.clone());
            queue.push_back(e);
        }
        while let Some(v) = queue.pop_front() {
            for j in 0..m {
                let w = reflect(&cartan, j, &v);
                if !seen.contains(&w) {
                    seen.insert(w.clone());
                    queue.push_back(w);
                }
            }
        }
        let mut positive: Vec<Vec<i64>> = seen.into_iter().filter(|r| r.iter().all(|c| *c >= 0)).collect();
        positive.sort_by_key(|r| (r.iter().sum::<i64>(), r.clone()));
        Self { kind, cartan, gram, positive }
    }

    pub fn highest_root(&self) -> &[i64] {
        self.positive.last().expect("nonempty root system")
    }

    /// `(a, b)` for vectors in simple-root coordinates.
    pub fn inner(&self, a: &[i64], b: &[i64]) -> i64 {
        let m = self.kind.rank;
        let mut s = 0;
        for i in 0..m {
            for j in 0..m {
                s += a[i] * self.gram[i][j] * b[j];
            }
        }
        s
    }

    /// `<r^vee, v> = 2 (r, v) / (r, r)`.
    pub fn coroot_pairing(&self, r: &[i64], v: &[i64]) -> i64 {
        let num = 2 * self.inner(r, v);
        let den = self.inner(r, r);
        debug_assert_eq!(num % den, 0);
        num / den
    }

    /// Matrix (row-major, columns = images of simple roots) of the
    /// reflection in root `r`.
    pub fn reflection_matrix(&self, r: &[i64]) -> Vec<i64> {
        let m = self.kind.rank;
        let mut out = vec![0; m * m];
        for j in 0..m {
            let mut e = vec![0; m];
            e[j] = 1;
            let p = self.coroot_pairing(r, &e);
            for i in 0..m {
                out[i * m + j] = e[i] - p * r[i];
            }
        }
        out
    }
}

fn reflect(cartan: &[Vec<i64>], j: usize, v: &[i64]) -> Vec<i64> {
    let pairing: i64 = v.iter().enumerate().map(|(k, c)| c * cartan[j][k]).sum();
    let mut w = v.to_vec();
    w[j] -= pairing;
    w
}
