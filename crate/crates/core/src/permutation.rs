//! Permutations of `{0, .., n-1}` stored as image arrays.
//!
//! Composition follows function composition: `p.compose(&q)` is `p ∘ q`,
//! so `q` is applied first and `(p ∘ q)(i) = p(q(i))`. Every caller in this
//! crate relies on that order, in particular the displacement generators
//! `s_x ∘ s_y⁻¹`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A bijection on `{0, .., degree-1}`. Equality, hashing and ordering are by
/// image array, so the derived `Ord` is the lexicographic order on images.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "Vec<usize>", try_from = "Vec<usize>")]
pub struct Permutation {
    images: Box<[u32]>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let degree = images.len();
        if degree == 0 {
            return Err(Error::DegreeZero);
        }
        let mut seen = vec![false; degree];
        for &image in &images {
            if image >= degree {
                return Err(Error::NotBijective {
                    degree,
                    reason: format!("image {image} out of range"),
                });
            }
            if std::mem::replace(&mut seen[image], true) {
                return Err(Error::NotBijective {
                    degree,
                    reason: format!("image {image} repeated"),
                });
            }
        }
        Ok(Self::from_u32_unchecked(
            images.into_iter().map(|i| i as u32).collect(),
        ))
    }

    /// Caller guarantees `images` is a bijection.
    pub(crate) fn from_u32_unchecked(images: Box<[u32]>) -> Self {
        debug_assert!(!images.is_empty());
        Permutation { images }
    }

    pub fn identity(degree: usize) -> Result<Self> {
        if degree == 0 {
            return Err(Error::DegreeZero);
        }
        Ok(Self::from_u32_unchecked((0..degree as u32).collect()))
    }

    /// Parses cycle notation such as `"(0 1)(2 3)"`; `"()"` or `""` is the
    /// identity. Points are 0-based and may be separated by spaces or commas.
    pub fn from_cycles(degree: usize, text: &str) -> Result<Self> {
        let fail = |reason: &str| Error::PermutationSyntax {
            input: text.to_string(),
            reason: reason.to_string(),
        };
        if degree == 0 {
            return Err(Error::DegreeZero);
        }
        let mut images: Vec<usize> = (0..degree).collect();
        let mut touched = vec![false; degree];
        let mut rest = text.trim();
        while !rest.is_empty() {
            let body = rest.strip_prefix('(').ok_or_else(|| fail("expected '('"))?;
            let close = body.find(')').ok_or_else(|| fail("unclosed cycle"))?;
            let points = body[..close]
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<usize>().map_err(|_| fail("bad point")))
                .collect::<Result<Vec<_>>>()?;
            for (k, &p) in points.iter().enumerate() {
                if p >= degree {
                    return Err(fail("point out of range"));
                }
                if std::mem::replace(&mut touched[p], true) {
                    return Err(fail("point appears twice"));
                }
                images[p] = points[(k + 1) % points.len()];
            }
            rest = body[close + 1..].trim_start();
        }
        Self::new(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn images(&self) -> impl ExactSizeIterator<Item = usize> + '_ {
        self.images.iter().map(|&i| i as usize)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.images().collect()
    }

    /// `self ∘ other`: `other` acts first.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.compose_unchecked(other))
    }

    #[inline]
    pub(crate) fn compose_unchecked(&self, other: &Permutation) -> Permutation {
        let images = other
            .images
            .iter()
            .map(|&i| self.images[i as usize])
            .collect();
        Permutation { images }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.degree()].into_boxed_slice();
        for (i, &image) in self.images.iter().enumerate() {
            inv[image as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &p)| i as u32 == p)
    }

    pub fn fixed_point_count(&self) -> usize {
        self.images
            .iter()
            .enumerate()
            .filter(|&(i, &p)| i as u32 == p)
            .count()
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        self.images()
            .enumerate()
            .filter(|&(i, p)| i == p)
            .map(|(i, _)| i)
            .collect()
    }

    /// Disjoint cycles of length at least two, each starting at its
    /// smallest point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut cycles = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.apply(start) == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cycle.push(p);
                p = self.apply(p);
            }
            cycles.push(cycle);
        }
        cycles
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(images: Vec<usize>) -> Result<Self> {
        Permutation::new(images)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.to_vec()
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.images()).finish()
    }
}

/// Cycle notation; the identity prints as `()`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            f.write_str("(")?;
            for (k, p) in cycle.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{p}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

/// Parses a JSON-style image array such as `[1,0,2]`.
impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let images: Vec<usize> = serde_json::from_str(s).map_err(|e| Error::PermutationSyntax {
            input: s.to_string(),
            reason: e.to_string(),
        })?;
        Permutation::new(images)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn perm(images: &[usize]) -> Permutation {
        Permutation::new(images.to_vec()).unwrap()
    }

    #[test]
    fn identity() {
        assert_eq!(Permutation::identity(3).unwrap().to_vec(), vec![0, 1, 2]);
        assert_eq!(Permutation::identity(1).unwrap().to_vec(), vec![0]);
        assert_eq!(Permutation::identity(5).unwrap().fixed_point_count(), 5);
        assert_eq!(Permutation::identity(0), Err(Error::DegreeZero));
    }

    #[test]
    fn compose() {
        let t = perm(&[1, 0, 2]);
        assert_eq!(t.compose(&t).unwrap(), Permutation::identity(3).unwrap());
        let c = perm(&[1, 2, 0]);
        assert_eq!(c.compose(&c).unwrap().to_vec(), vec![2, 0, 1]);
        assert_eq!(c.compose(&Permutation::identity(3).unwrap()).unwrap(), c);
        assert_eq!(
            c.compose(&Permutation::identity(4).unwrap()),
            Err(Error::DegreeMismatch { left: 3, right: 4 })
        );
    }

    #[test]
    fn compose_applies_right_factor_first() {
        // p = (0 1), q = (1 2): p(q(1)) = p(2) = 2
        let p = perm(&[1, 0, 2]);
        let q = perm(&[0, 2, 1]);
        assert_eq!(p.compose(&q).unwrap().apply(1), 2);
        assert_eq!(q.compose(&p).unwrap().apply(1), 0);
    }

    #[test]
    fn inverse() {
        assert_eq!(perm(&[1, 2, 0]).inverse().to_vec(), vec![2, 0, 1]);
        let id = Permutation::identity(4).unwrap();
        assert_eq!(id.inverse(), id);
        assert_eq!(perm(&[1, 0]).inverse().to_vec(), vec![1, 0]);
    }

    #[test]
    fn fixed_points() {
        assert_eq!(perm(&[0, 1, 2]).fixed_point_count(), 3);
        assert_eq!(perm(&[1, 0, 2]).fixed_point_count(), 1);
        assert_eq!(perm(&[1, 0, 2]).fixed_points(), vec![2]);
        assert_eq!(perm(&[1, 2, 0]).fixed_point_count(), 0);
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(matches!(
            Permutation::new(vec![0, 0, 1]),
            Err(Error::NotBijective { .. })
        ));
        assert!(matches!(
            Permutation::new(vec![0, 3, 1]),
            Err(Error::NotBijective { .. })
        ));
        assert_eq!(Permutation::new(vec![]), Err(Error::DegreeZero));
    }

    #[test]
    fn cycle_notation() {
        let p = Permutation::from_cycles(4, "(0 1)(2 3)").unwrap();
        assert_eq!(p.to_vec(), vec![1, 0, 3, 2]);
        assert_eq!(p.to_string(), "(0 1)(2 3)");
        assert_eq!(
            Permutation::from_cycles(3, "(0,1,2)").unwrap().to_vec(),
            vec![1, 2, 0]
        );
        assert!(Permutation::from_cycles(3, "()").unwrap().is_identity());
        assert!(Permutation::from_cycles(3, "").unwrap().is_identity());
        assert!(Permutation::from_cycles(3, "(0 3)").is_err());
        assert!(Permutation::from_cycles(3, "(0 1)(1 2)").is_err());
        assert!(Permutation::from_cycles(3, "(0 1").is_err());
        assert!(Permutation::from_cycles(3, "0 1").is_err());
    }

    #[test]
    fn json_form() {
        let p: Permutation = "[1,0,2]".parse().unwrap();
        assert_eq!(serde_json::to_string(&p).unwrap(), "[1,0,2]");
        assert!(serde_json::from_str::<Permutation>("[1,1]").is_err());
    }

    fn arb_perm(degree: usize) -> impl Strategy<Value = Permutation> {
        Just((0..degree).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(|v| Permutation::new(v).unwrap())
    }

    fn arb_triple() -> impl Strategy<Value = (Permutation, Permutation, Permutation)> {
        (1usize..9).prop_flat_map(|n| (arb_perm(n), arb_perm(n), arb_perm(n)))
    }

    proptest! {
        #[test]
        fn group_laws((p, q, r) in arb_triple()) {
            let id = Permutation::identity(p.degree()).unwrap();
            prop_assert_eq!(p.inverse().compose(&p).unwrap(), id.clone());
            prop_assert_eq!(p.compose(&p.inverse()).unwrap(), id);
            prop_assert_eq!(
                p.compose(&q).unwrap().compose(&r).unwrap(),
                p.compose(&q.compose(&r).unwrap()).unwrap()
            );
            let moved = (0..p.degree()).filter(|&i| p.apply(i) != i).count();
            prop_assert_eq!(p.fixed_point_count(), p.degree() - moved);
        }

        #[test]
        fn cycle_notation_round_trips(p in (1usize..10).prop_flat_map(arb_perm)) {
            let back = Permutation::from_cycles(p.degree(), &p.to_string()).unwrap();
            prop_assert_eq!(back, p);
        }
    }
}
