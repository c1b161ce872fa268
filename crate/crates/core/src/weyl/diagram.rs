use crate::error::{Error, Result};
use crate::weyl::genset::GenSet;
use crate::weyl::roots::RootSystem;
use crate::weyl::types::{Family, WeylType};

/// Coxeter label standing for `m(s, t) = infinity` (only in affine `A~1`).
pub const INFINITE: u32 = 0;

/// Generators of a finite or affine Weyl type with their Coxeter matrix.
///
/// Finite diagrams use labels `1..=m`; affine ones add the extra node `s_0`.
/// The matrix is indexed by position in `labels`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoxeterDiagram {
    pub kind: WeylType,
    pub labels: Vec<usize>,
    pub matrix: Vec<Vec<u32>>,
}

fn coxeter_label(product: i64) -> u32 {
    match product {
        0 => 2,
        1 => 3,
        2 => 4,
        3 => 6,
        _ => INFINITE,
    }
}

/// Diagram of `kind`. Affine diagrams are obtained from the finite one by
/// attaching `s_0` according to the highest root.
pub fn coxeter_diagram(kind: WeylType) -> Result<CoxeterDiagram> {
    let kind = WeylType::new(kind.family, kind.rank, kind.affine)?;
    let fin = kind.finite_part();
    let cartan = fin.cartan_matrix();
    let m = fin.rank;
    let labels = kind.labels();
    let n = labels.len();
    let mut matrix = vec![vec![1u32; n]; n];
    let off = usize::from(kind.affine);
    for i in 0..m {
        for j in 0..m {
            if i != j {
                matrix[i + off][j + off] = coxeter_label(cartan[i][j] * cartan[j][i]);
            }
        }
    }
    if kind.affine {
        let rs = RootSystem::new(fin);
        let theta = rs.highest_root().to_vec();
        for j in 0..m {
            let mut e = vec![0; m];
            e[j] = 1;
            let a = rs.coroot_pairing(&theta, &e);
            let b = rs.coroot_pairing(&e, &theta);
            let label = coxeter_label(a * b);
            matrix[0][j + 1] = label;
            matrix[j + 1][0] = label;
        }
    }
    Ok(CoxeterDiagram { kind, labels, matrix })
}

impl CoxeterDiagram {
    pub fn is_affine(&self) -> bool {
        self.kind.affine
    }

    pub fn rank(&self) -> usize {
        self.kind.rank
    }

    pub fn generators(&self) -> GenSet {
        GenSet::from_labels(self.labels.iter().copied())
    }

    pub fn position(&self, label: usize) -> Option<usize> {
        self.labels.iter().position(|l| *l == label)
    }

    /// `m(s_a, s_b)` by label.
    pub fn entry(&self, a: usize, b: usize) -> u32 {
        let pa = self.position(a).expect("label in diagram");
        let pb = self.position(b).expect("label in diagram");
        self.matrix[pa][pb]
    }

    /// Whether every generator of `a` commutes with every generator of `b`.
    pub fn commute(&self, a: GenSet, b: GenSet) -> bool {
        a.iter().all(|x| b.iter().all(|y| x == y || self.entry(x, y) == 2))
    }

    /// Connected components of the subdiagram on `gamma`.
    pub fn components(&self, gamma: GenSet) -> Vec<GenSet> {
        let mut left = gamma;
        let mut out = Vec::new();
        while let Some(start) = left.iter().next() {
            let mut comp = GenSet::single(start);
            let mut frontier = vec![start];
            while let Some(x) = frontier.pop() {
                for y in left.iter() {
                    if !comp.contains(y) && self.entry(x, y) != 2 {
                        comp = comp.with(y);
                        frontier.push(y);
                    }
                }
            }
            left = left.minus(comp);
            out.push(comp);
        }
        out
    }

    /// Finite types of the connected components of `gamma`, or `None` if
    /// the parabolic subgroup it generates is infinite (or non-crystallographic).
    pub fn classify(&self, gamma: GenSet) -> Option<Vec<WeylType>> {
        self.components(gamma).into_iter().map(|c| self.classify_connected(c)).collect()
    }

    /// Abstract order of the Coxeter group on the subdiagram `gamma`.
    pub fn subgroup_order(&self, gamma: GenSet) -> Option<u128> {
        Some(self.classify(gamma)?.iter().map(|t| t.group_order()).product())
    }

    fn classify_connected(&self, comp: GenSet) -> Option<WeylType> {
        let nodes: Vec<usize> = comp.iter().collect();
        let n = nodes.len();
        if n == 1 {
            return WeylType::finite(Family::A, 1).ok();
        }
        let mut edges = Vec::new();
        for (i, &a) in nodes.iter().enumerate() {
            for &b in &nodes[i + 1..] {
                match self.entry(a, b) {
                    2 => {}
                    INFINITE => return None,
                    l => edges.push((a, b, l)),
                }
            }
        }
        if edges.len() != n - 1 {
            return None;
        }
        let degree = |x: usize| edges.iter().filter(|(a, b, _)| *a == x || *b == x).count();
        let branch: Vec<usize> = nodes.iter().copied().filter(|&x| degree(x) >= 3).collect();
        let non_simple: Vec<u32> = edges.iter().map(|e| e.2).filter(|l| *l != 3).collect();
        if let Some(&center) = branch.first() {
            if branch.len() > 1 || degree(center) > 3 || !non_simple.is_empty() {
                return None;
            }
            let mut arms: Vec<usize> = edges
                .iter()
                .filter_map(|(a, b, _)| match (*a == center, *b == center) {
                    (true, _) => Some(*b),
                    (_, true) => Some(*a),
                    _ => None,
                })
                .map(|start| self.arm_length(comp, center, start))
                .collect();
            arms.sort_unstable();
            return match arms.as_slice() {
                [1, 1, c] => WeylType::finite(Family::D, c + 3).ok(),
                [1, 2, 2] => WeylType::finite(Family::E, 6).ok(),
                [1, 2, 3] => WeylType::finite(Family::E, 7).ok(),
                [1, 2, 4] => WeylType::finite(Family::E, 8).ok(),
                _ => None,
            };
        }
        match non_simple.as_slice() {
            [] => WeylType::finite(Family::A, n).ok(),
            [4] => {
                let ends: Vec<usize> = nodes.iter().copied().filter(|&x| degree(x) == 1).collect();
                let at_end = edges.iter().any(|(a, b, l)| *l == 4 && (ends.contains(a) || ends.contains(b)));
                if at_end {
                    WeylType::finite(Family::B, n).ok()
                } else if n == 4 {
                    WeylType::finite(Family::F, 4).ok()
                } else {
                    None
                }
            }
            [6] if n == 2 => WeylType::finite(Family::G, 2).ok(),
            _ => None,
        }
    }

    fn arm_length(&self, comp: GenSet, center: usize, start: usize) -> usize {
        let mut prev = center;
        let mut cur = start;
        let mut len = 1;
        loop {
            let next = comp.iter().find(|&y| y != prev && y != cur && self.entry(cur, y) != 2);
            match next {
                Some(y) => {
                    prev = cur;
                    cur = y;
                    len += 1;
                }
                None => return len,
            }
        }
    }
}

/// Convenience: diagram from a type tag such as `"A~2"`.
pub fn diagram_for(tag: &str) -> Result<CoxeterDiagram> {
    coxeter_diagram(tag.parse::<WeylType>()?)
}

impl CoxeterDiagram {
    pub fn check_label(&self, label: usize) -> Result<()> {
        if self.position(label).is_some() {
            Ok(())
        } else {
            Err(Error::UnknownGenerator { label, kind: self.kind.to_string() })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a1_and_a2() {
        let d = diagram_for("A1").unwrap();
        assert_eq!(d.matrix, vec![vec![1]]);
        let d = diagram_for("A2").unwrap();
        assert_eq!(d.entry(1, 2), 3);
    }

    #[test]
    fn affine_a2_is_a_triangle() {
        let d = diagram_for("A~2").unwrap();
        assert_eq!(d.labels, vec![0, 1, 2]);
        for (a, b) in [(0, 1), (0, 2), (1, 2)] {
            assert_eq!(d.entry(a, b), 3);
        }
        assert_eq!(d.subgroup_order(d.generators()), None);
    }

    #[test]
    fn affine_a1_is_infinite() {
        let d = diagram_for("A~1").unwrap();
        assert_eq!(d.entry(0, 1), INFINITE);
        assert_eq!(d.subgroup_order(GenSet::single(0)), Some(2));
    }

    #[test]
    fn bourbaki_affine_tables() {
        // s0 attaches with a double bond to s1 in C~m.
        let c = diagram_for("C~3").unwrap();
        assert_eq!((c.entry(0, 1), c.entry(0, 2), c.entry(0, 3)), (4, 2, 2));
        // s0 attaches to s2 in B~m and D~m.
        let b = diagram_for("B~3").unwrap();
        assert_eq!((b.entry(0, 1), b.entry(0, 2), b.entry(0, 3)), (2, 3, 2));
        let dd = diagram_for("D~4").unwrap();
        assert_eq!((1..=4).map(|j| dd.entry(0, j)).collect::<Vec<_>>(), vec![2, 3, 2, 2]);
        // G~2: s0 - s2 (long) ≡ s1.
        let g = diagram_for("G~2").unwrap();
        assert_eq!((g.entry(0, 1), g.entry(0, 2), g.entry(1, 2)), (2, 3, 6));
        // F~4: s0 - s1.
        let f = diagram_for("F~4").unwrap();
        assert_eq!((1..=4).map(|j| f.entry(0, j)).collect::<Vec<_>>(), vec![3, 2, 2, 2]);
        // E~6: s0 - s2; E~7: s0 - s1; E~8: s0 - s8.
        assert_eq!(diagram_for("E~6").unwrap().entry(0, 2), 3);
        assert_eq!(diagram_for("E~7").unwrap().entry(0, 1), 3);
        assert_eq!(diagram_for("E~8").unwrap().entry(0, 8), 3);
    }

    #[test]
    fn classification_of_subdiagrams() {
        let b = diagram_for("B~3").unwrap();
        // Removing s3 from B~3 leaves s0 - s2 - s1 = A3 = D3, order 24.
        assert_eq!(b.subgroup_order(GenSet::from_labels([0, 1, 2])), Some(24));
        let b4 = diagram_for("B~4").unwrap();
        let d4 = b4.classify(GenSet::from_labels([0, 1, 2, 3])).unwrap();
        assert_eq!(d4, vec![WeylType::finite(Family::D, 4).unwrap()]);
        for t in WeylType::catalogue().into_iter().filter(|t| !t.affine) {
            let d = coxeter_diagram(t).unwrap();
            let found = d.classify(d.generators()).unwrap();
            assert_eq!(found.len(), 1);
            assert_eq!(found[0].group_order(), t.group_order(), "{t}");
        }
        for t in WeylType::catalogue().into_iter().filter(|t| t.affine) {
            let d = coxeter_diagram(t).unwrap();
            assert_eq!(d.subgroup_order(d.generators()), None, "{t}");
            for l in d.labels.clone() {
                assert!(d.subgroup_order(d.generators().without(l)).is_some(), "{t} minus s{l}");
            }
        }
    }
}
