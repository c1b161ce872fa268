use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::weyl::diagram::CoxeterDiagram;
use crate::weyl::roots::RootSystem;
use crate::weyl::types::WeylType;

/// Default cap on `|W|`, the order of `E_6`.
pub const DEFAULT_MAX_ORDER: u128 = 51_840;

/// Integer matrix of a Weyl group element acting on simple-root coordinates.
/// Column `j` is the image of `a_j`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GroupElement {
    dim: usize,
    entries: Vec<i64>,
}

impl GroupElement {
    pub fn identity(dim: usize) -> Self {
        let mut entries = vec![0; dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = 1;
        }
        Self { dim, entries }
    }

    pub fn from_entries(dim: usize, entries: Vec<i64>) -> Self {
        assert_eq!(entries.len(), dim * dim);
        Self { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.dim + j]
    }

    pub fn mul(&self, rhs: &GroupElement) -> GroupElement {
        let n = self.dim;
        let mut out = vec![0; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.entries[i * n + k];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    out[i * n + j] += a * rhs.entries[k * n + j];
                }
            }
        }
        GroupElement { dim: n, entries: out }
    }

    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        (0..self.dim).map(|i| (0..self.dim).map(|j| self.get(i, j) * v[j]).sum()).collect()
    }

    /// Determinant by cofactor-free elimination over the rationals; the
    /// result is always `±1` for group elements.
    pub fn determinant(&self) -> i64 {
        let n = self.dim;
        let mut a: Vec<Vec<f64>> = (0..n).map(|i| (0..n).map(|j| self.get(i, j) as f64).collect()).collect();
        let mut det = 1.0;
        for c in 0..n {
            let Some(p) = (c..n).max_by(|&x, &y| a[x][c].abs().total_cmp(&a[y][c].abs())) else { return 0 };
            if a[p][c] == 0.0 {
                return 0;
            }
            if p != c {
                a.swap(p, c);
                det = -det;
            }
            det *= a[c][c];
            for r in c + 1..n {
                let f = a[r][c] / a[c][c];
                for k in c..n {
                    a[r][k] -= f * a[c][k];
                }
            }
        }
        det.round() as i64
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<&[i64]> = self.entries.chunks(self.dim.max(1)).collect();
        write!(f, "{rows:?}")
    }
}

/// A finite Weyl group, fully enumerated.
///
/// Elements are stored in canonical order: by length, then by the
/// lexicographically smallest reduced word. Index 0 is the identity and
/// index `i` (for `1 <= i <= m`) is the simple reflection `s_i`.
#[derive(Clone, Debug)]
pub struct WeylGroup {
    pub diagram: CoxeterDiagram,
    elements: Vec<GroupElement>,
    index: HashMap<GroupElement, usize>,
    lengths: Vec<usize>,
    words: Vec<Vec<u8>>,
    /// `right_mult[w * m + (i - 1)]` is the index of `w s_i`.
    right_mult: Vec<usize>,
}

impl WeylGroup {
    pub fn rank(&self) -> usize {
        self.diagram.rank()
    }

    pub fn kind(&self) -> WeylType {
        self.diagram.kind
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn element(&self, w: usize) -> &GroupElement {
        &self.elements[w]
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn index_of(&self, g: &GroupElement) -> Option<usize> {
        self.index.get(g).copied()
    }

    pub fn length(&self, w: usize) -> usize {
        self.lengths[w]
    }

    pub fn lengths(&self) -> &[usize] {
        &self.lengths
    }

    /// Lexicographically smallest reduced word, as generator labels.
    pub fn word(&self, w: usize) -> &[u8] {
        &self.words[w]
    }

    pub fn word_string(&self, w: usize) -> String {
        if self.words[w].is_empty() {
            "e".to_string()
        } else {
            self.words[w].iter().map(|l| format!("s{l}")).collect()
        }
    }

    /// Index of the simple reflection `s_label`.
    pub fn simple(&self, label: usize) -> usize {
        assert!((1..=self.rank()).contains(&label), "no simple reflection s{label}");
        label
    }

    pub fn right_mult(&self, w: usize, label: usize) -> usize {
        self.right_mult[w * self.rank() + label - 1]
    }

    /// `a * b`, walking the reduced word of `b`.
    pub fn multiply(&self, a: usize, b: usize) -> usize {
        self.words[b].iter().fold(a, |acc, &l| self.right_mult(acc, l as usize))
    }

    pub fn inverse(&self, w: usize) -> usize {
        self.words[w].iter().rev().fold(0, |acc, &l| self.right_mult(acc, l as usize))
    }

    /// Element with the given word (any word, not necessarily reduced).
    pub fn from_word(&self, word: &[usize]) -> usize {
        word.iter().fold(0, |acc, &l| self.right_mult(acc, l))
    }

    pub fn longest_length(&self) -> usize {
        self.lengths.iter().copied().max().unwrap_or(0)
    }
}

/// Breadth-first enumeration over right multiplication by simple
/// reflections, with the default size bound.
pub fn enumerate_weyl_group(diagram: &CoxeterDiagram) -> Result<WeylGroup> {
    enumerate_weyl_group_bounded(diagram, DEFAULT_MAX_ORDER)
}

pub fn enumerate_weyl_group_bounded(diagram: &CoxeterDiagram, max_order: u128) -> Result<WeylGroup> {
    let kind = diagram.kind;
    if kind.affine {
        return Err(Error::NotFinite(kind.to_string()));
    }
    if kind.group_order() > max_order {
        return Err(Error::GroupTooLarge { kind: kind.to_string(), order: kind.group_order(), bound: max_order });
    }
    let m = kind.rank;
    let cartan = kind.cartan_matrix();
    let gens: Vec<GroupElement> = (0..m)
        .map(|i| {
            let mut g = GroupElement::identity(m);
            for j in 0..m {
                g.entries[i * m + j] -= cartan[i][j];
            }
            g
        })
        .collect();

    let mut elements = vec![GroupElement::identity(m)];
    let mut index = HashMap::new();
    index.insert(elements[0].clone(), 0);
    let mut lengths = vec![0];
    let mut words: Vec<Vec<u8>> = vec![Vec::new()];
    let mut right_mult: Vec<usize> = Vec::new();
    // Elements are discovered level by level; processing each level in
    // canonical order with generators ascending yields the lex-smallest
    // reduced word on first discovery.
    let mut head = 0;
    while head < elements.len() {
        for (i, g) in gens.iter().enumerate() {
            let prod = elements[head].mul(g);
            let target = match index.get(&prod) {
                Some(&t) => t,
                None => {
                    let t = elements.len();
                    let mut word = words[head].clone();
                    word.push((i + 1) as u8);
                    index.insert(prod.clone(), t);
                    elements.push(prod);
                    lengths.push(lengths[head] + 1);
                    words.push(word);
                    t
                }
            };
            right_mult.push(target);
        }
        head += 1;
    }
    Ok(WeylGroup { diagram: diagram.clone(), elements, index, lengths, words, right_mult })
}

/// Reflection in the highest root, as an element of the enumerated group.
/// This is the image of the affine generator `s_0` under `W~ -> W~/L = W`.
pub fn highest_root_reflection(group: &WeylGroup) -> usize {
    let rs = RootSystem::new(group.kind());
    let m = rs.reflection_matrix(rs.highest_root());
    group
        .index_of(&GroupElement::from_entries(group.rank(), m))
        .expect("highest root reflection lies in W")
}

/// Projection of the affine generator `s_label` to `W`: the simple
/// reflection for `label >= 1`, the highest-root reflection for `label = 0`.
pub fn project_affine_generator(affine: &CoxeterDiagram, group: &WeylGroup, label: usize) -> Result<usize> {
    affine.check_label(label)?;
    if label == 0 {
        Ok(highest_root_reflection(group))
    } else {
        Ok(group.simple(label))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::diagram::diagram_for;

    fn group(tag: &str) -> WeylGroup {
        enumerate_weyl_group(&diagram_for(tag).unwrap()).unwrap()
    }

    #[test]
    fn small_groups() {
        let a1 = group("A1");
        assert_eq!(a1.order(), 2);
        assert_eq!(a1.lengths(), &[0, 1]);
        let a2 = group("A2");
        assert_eq!(a2.order(), 6);
        assert_eq!(a2.longest_length(), 3);
        let b2 = group("B2");
        assert_eq!(b2.order(), 8);
        assert_eq!(b2.longest_length(), 4);
    }

    #[test]
    fn orders_and_lengths_match_classical_data() {
        for tag in ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "D4", "F4", "G2"] {
            let g = group(tag);
            let t = g.kind();
            assert_eq!(g.order() as u128, t.group_order(), "{tag}");
            assert_eq!(g.longest_length(), t.positive_root_count(), "{tag}");
            for w in 0..g.order() {
                assert_eq!(g.element(w).determinant().abs(), 1);
                for l in 1..=g.rank() {
                    let ws = g.right_mult(w, l);
                    assert_eq!(g.length(ws).abs_diff(g.length(w)), 1);
                }
            }
        }
    }

    #[test]
    fn words_reproduce_elements() {
        let g = group("B3");
        for w in 0..g.order() {
            let word: Vec<usize> = g.word(w).iter().map(|&l| l as usize).collect();
            assert_eq!(g.from_word(&word), w);
            assert_eq!(word.len(), g.length(w));
            let mut prod = GroupElement::identity(3);
            for &l in &word {
                prod = prod.mul(g.element(l));
            }
            assert_eq!(&prod, g.element(w));
            assert_eq!(g.multiply(w, g.inverse(w)), 0);
        }
    }

    #[test]
    fn canonical_order_is_by_length_then_word() {
        let g = group("A3");
        for w in 1..g.order() {
            let prev = (g.length(w - 1), g.word(w - 1));
            let cur = (g.length(w), g.word(w));
            assert!(prev < cur);
        }
    }

    #[test]
    fn size_bound_is_enforced() {
        let d = diagram_for("E7").unwrap();
        assert!(matches!(enumerate_weyl_group(&d), Err(Error::GroupTooLarge { .. })));
        assert!(matches!(enumerate_weyl_group(&diagram_for("A~2").unwrap()), Err(Error::NotFinite(_))));
    }

    #[test]
    fn s0_projections() {
        let a1 = group("A1");
        assert_eq!(project_affine_generator(&diagram_for("A~1").unwrap(), &a1, 0).unwrap(), 1);
        let a2 = group("A2");
        let s0 = project_affine_generator(&diagram_for("A~2").unwrap(), &a2, 0).unwrap();
        assert_eq!(s0, a2.from_word(&[1, 2, 1]));
    }

    #[test]
    fn s0_is_conjugate_of_a_simple_reflection() {
        // Independent route: find w, i with w(a_i) = theta; then s_theta = w s_i w^-1.
        for tag in ["A2", "A3", "B2", "B3", "C2", "C3", "G2", "F4", "D4"] {
            let g = group(tag);
            let rs = RootSystem::new(g.kind());
            let theta = rs.highest_root().to_vec();
            let (w, i) = (0..g.order())
                .flat_map(|w| (1..=g.rank()).map(move |i| (w, i)))
                .find(|&(w, i)| {
                    let mut e = vec![0; g.rank()];
                    e[i - 1] = 1;
                    g.element(w).apply(&e) == theta
                })
                .unwrap();
            let conj = g.multiply(g.multiply(w, i), g.inverse(w));
            assert_eq!(conj, highest_root_reflection(&g), "{tag}");
        }
    }
}
