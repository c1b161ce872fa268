//! Weyl type tags and their Bourbaki data.
//!
//! Node labels follow Bourbaki's planches: `B_m` has its short simple root
//! at `s_m`, `C_m` its long one at `s_m`, `D_m` branches at `s_{m-2}`, and in
//! `E_n` the node `s_2` hangs off `s_4`. `G_2` has `s_1` short.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    fn from_letter(c: char) -> Option<Self> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }
}

/// A finite Weyl type `X_m` or its affine extension `X~_m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylType {
    pub family: Family,
    pub rank: usize,
    pub affine: bool,
}

impl WeylType {
    pub fn new(family: Family, rank: usize, affine: bool) -> Result<Self, Error> {
        let t = Self { family, rank, affine };
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok && rank <= 31 {
            Ok(t)
        } else {
            Err(Error::UnsupportedType(t.to_string()))
        }
    }

    pub fn finite(family: Family, rank: usize) -> Result<Self, Error> {
        Self::new(family, rank, false)
    }

    pub fn affine(family: Family, rank: usize) -> Result<Self, Error> {
        Self::new(family, rank, true)
    }

    /// The finite type underlying an affine one (identity on finite types).
    pub fn finite_part(self) -> Self {
        Self { affine: false, ..self }
    }

    /// Number of generators: `m` finite, `m + 1` affine.
    pub fn generator_count(self) -> usize {
        self.rank + usize::from(self.affine)
    }

    /// Generator labels in order: `1..=m`, or `0..=m` for affine types.
    pub fn labels(self) -> Vec<usize> {
        let start = usize::from(!self.affine);
        (start..=self.rank).collect()
    }

    /// Order of the finite Weyl group of `finite_part()`.
    pub fn group_order(self) -> u128 {
        let m = self.rank as u128;
        let fact = |n: u128| (1..=n).product::<u128>();
        match self.family {
            Family::A => fact(m + 1),
            Family::B | Family::C => (1u128 << m) * fact(m),
            Family::D => (1u128 << (m - 1)) * fact(m),
            Family::E => match self.rank {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            Family::F => 1152,
            Family::G => 12,
        }
    }

    pub fn positive_root_count(self) -> usize {
        let m = self.rank;
        match self.family {
            Family::A => m * (m + 1) / 2,
            Family::B | Family::C => m * m,
            Family::D => m * (m - 1),
            Family::E => match m {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Family::F => 24,
            Family::G => 6,
        }
    }

    /// Classical exponents of the finite type.
    pub fn exponents(self) -> Vec<usize> {
        let m = self.rank;
        match self.family {
            Family::A => (1..=m).collect(),
            Family::B | Family::C => (0..m).map(|i| 2 * i + 1).collect(),
            Family::D => {
                let mut e: Vec<usize> = (0..m - 1).map(|i| 2 * i + 1).collect();
                e.push(m - 1);
                e.sort_unstable();
                e
            }
            Family::E => match m {
                6 => vec![1, 4, 5, 7, 8, 11],
                7 => vec![1, 5, 7, 9, 11, 13, 17],
                _ => vec![1, 7, 11, 13, 17, 19, 23, 29],
            },
            Family::F => vec![1, 5, 7, 11],
            Family::G => vec![1, 5],
        }
    }

    /// Symmetric bilinear form `(a_i, a_j)` on the simple roots, scaled to
    /// integers. Indexed by `label - 1`.
    pub fn gram_matrix(self) -> Vec<Vec<i64>> {
        let m = self.rank;
        let mut g = vec![vec![0i64; m]; m];
        let link = |g: &mut Vec<Vec<i64>>, i: usize, j: usize, v: i64| {
            g[i][j] = v;
            g[j][i] = v;
        };
        match self.family {
            Family::A => {
                for i in 0..m {
                    g[i][i] = 2;
                }
                for i in 0..m.saturating_sub(1) {
                    link(&mut g, i, i + 1, -1);
                }
            }
            Family::B => {
                for i in 0..m {
                    g[i][i] = if i + 1 < m { 4 } else { 2 };
                }
                for i in 0..m - 1 {
                    link(&mut g, i, i + 1, -2);
                }
            }
            Family::C => {
                for i in 0..m {
                    g[i][i] = if i + 1 < m { 2 } else { 4 };
                }
                for i in 0..m - 1 {
                    link(&mut g, i, i + 1, if i + 2 < m { -1 } else { -2 });
                }
            }
            Family::D => {
                for i in 0..m {
                    g[i][i] = 2;
                }
                for i in 0..m - 2 {
                    link(&mut g, i, i + 1, -1);
                }
                link(&mut g, m - 3, m - 1, -1);
            }
            Family::E => {
                for i in 0..m {
                    g[i][i] = 2;
                }
                link(&mut g, 0, 2, -1);
                link(&mut g, 1, 3, -1);
                for i in 2..m - 1 {
                    link(&mut g, i, i + 1, -1);
                }
            }
            Family::F => {
                g[0][0] = 4;
                g[1][1] = 4;
                g[2][2] = 2;
                g[3][3] = 2;
                link(&mut g, 0, 1, -2);
                link(&mut g, 1, 2, -2);
                link(&mut g, 2, 3, -1);
            }
            Family::G => {
                g[0][0] = 2;
                g[1][1] = 6;
                link(&mut g, 0, 1, -3);
            }
        }
        g
    }

    /// Cartan matrix `c[i][j] = <a_i^vee, a_j> = 2 (a_i, a_j) / (a_i, a_i)`.
    pub fn cartan_matrix(self) -> Vec<Vec<i64>> {
        let g = self.gram_matrix();
        (0..self.rank).map(|i| (0..self.rank).map(|j| 2 * g[i][j] / g[i][i]).collect()).collect()
    }

    /// Every type this build knows how to handle, finite first.
    pub fn catalogue() -> Vec<WeylType> {
        let mut out = Vec::new();
        for affine in [false, true] {
            for m in 1..=8 {
                out.push(Self { family: Family::A, rank: m, affine });
            }
            for m in 2..=6 {
                out.push(Self { family: Family::B, rank: m, affine });
                out.push(Self { family: Family::C, rank: m, affine });
            }
            for m in 4..=6 {
                out.push(Self { family: Family::D, rank: m, affine });
            }
            for m in 6..=8 {
                out.push(Self { family: Family::E, rank: m, affine });
            }
            out.push(Self { family: Family::F, rank: 4, affine });
            out.push(Self { family: Family::G, rank: 2, affine });
        }
        out.sort();
        out
    }
}

impl fmt::Display for WeylType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tilde = if self.affine { "~" } else { "" };
        write!(f, "{}{}{}", self.family.letter(), tilde, self.rank)
    }
}

impl FromStr for WeylType {
    type Err = Error;

    /// Accepts `A2`, `A~2`, `~A2` and `Ã2` style tags.
    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::UnsupportedType(s.to_string());
        let mut rest = s.trim();
        let mut affine = false;
        if let Some(r) = rest.strip_prefix('~') {
            affine = true;
            rest = r;
        }
        let mut chars = rest.chars();
        let head = chars.next().ok_or_else(bad)?;
        let (family, mut rest) = match head {
            'Ã' => (Family::A, chars.as_str()),
            c => (Family::from_letter(c).ok_or_else(bad)?, chars.as_str()),
        };
        if head == 'Ã' {
            affine = true;
        }
        for combining in ["~", "\u{303}"] {
            if let Some(r) = rest.strip_prefix(combining) {
                affine = true;
                rest = r;
            }
        }
        let rank: usize = rest.parse().map_err(|_| bad())?;
        WeylType::new(family, rank, affine)
    }
}

impl Serialize for WeylType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for WeylType {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
