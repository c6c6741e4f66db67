//! Finite quandles given by their Cayley table.
//!
//! Row convention: `table[x][y] = s_x(y)`, where `s_x` is the point symmetry
//! centred at `x`. All IO uses the same convention.

mod homogeneity;

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::permutation::Permutation;

pub use homogeneity::{automorphism_mapping, DEFAULT_SEARCH_BUDGET};

/// A validated finite quandle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteQuandle {
    size: usize,
    table: Vec<u32>,
    inv_table: Vec<u32>,
    labels: Option<Vec<String>>,
}

impl FiniteQuandle {
    /// Checks the three quandle axioms and builds the inverse table.
    ///
    /// Q1 is checked for every element before Q2, and Q2 before Q3, so the
    /// reported witness is the first violation in that order.
    pub fn validate(table: Vec<Vec<usize>>) -> Result<Self> {
        let n = table.len();
        if n == 0 || table.iter().any(|row| row.len() != n) {
            return Err(Error::NotSquare);
        }
        if let Some(x) = (0..n).find(|&x| table[x][x] != x) {
            return Err(Error::Q1Violation(x));
        }
        for (x, row) in table.iter().enumerate() {
            if Permutation::new(row.clone()).is_err() {
                return Err(Error::Q2Violation(x));
            }
        }
        let flat: Vec<u32> = table.into_iter().flatten().map(|v| v as u32).collect();
        Self::from_flat(n, flat)
    }

    /// Q2 already holds for `flat`; checks Q1 and Q3.
    pub(crate) fn from_flat(n: usize, flat: Vec<u32>) -> Result<Self> {
        let at = |x: usize, y: usize| flat[x * n + y] as usize;
        if let Some(x) = (0..n).find(|&x| at(x, x) != x) {
            return Err(Error::Q1Violation(x));
        }
        for x in 0..n {
            for y in 0..n {
                let xy = at(x, y);
                for z in 0..n {
                    if at(x, at(y, z)) != at(xy, at(x, z)) {
                        return Err(Error::Q3Violation(x, y, z));
                    }
                }
            }
        }
        let mut inv_table = vec![0u32; n * n];
        for x in 0..n {
            for y in 0..n {
                inv_table[x * n + at(x, y)] = y as u32;
            }
        }
        Ok(FiniteQuandle {
            size: n,
            table: flat,
            inv_table,
            labels: None,
        })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.size {
            return Err(Error::InvalidParameter(format!(
                "{} labels for {} elements",
                labels.len(),
                self.size
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// `s_x(y)`.
    #[inline]
    pub fn act(&self, x: usize, y: usize) -> usize {
        self.table[x * self.size + y] as usize
    }

    /// `s_x⁻¹(y)`.
    #[inline]
    pub fn act_inv(&self, x: usize, y: usize) -> usize {
        self.inv_table[x * self.size + y] as usize
    }

    pub fn table(&self) -> Vec<Vec<usize>> {
        self.table
            .chunks(self.size)
            .map(|row| row.iter().map(|&v| v as usize).collect())
            .collect()
    }

    fn row(&self, x: usize) -> &[u32] {
        &self.table[x * self.size..(x + 1) * self.size]
    }

    pub fn point_symmetry(&self, x: usize) -> Result<Permutation> {
        if x >= self.size {
            return Err(Error::IndexOutOfRange {
                index: x,
                size: self.size,
            });
        }
        Ok(Permutation::from_u32_unchecked(self.row(x).into()))
    }

    /// Distinct point symmetries, in lexicographic order.
    pub fn inner_generators(&self) -> Vec<Permutation> {
        (0..self.size)
            .map(|x| Permutation::from_u32_unchecked(self.row(x).into()))
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect()
    }

    /// Distinct non-identity `s_x ∘ s_y⁻¹`, in lexicographic order. Empty
    /// means the displacement group is trivial.
    pub fn displacement_generators(&self) -> Vec<Permutation> {
        let rows = self.inner_generators();
        let inverses: Vec<Permutation> = rows.iter().map(Permutation::inverse).collect();
        let mut gens = BTreeSet::new();
        for sx in &rows {
            for sy_inv in &inverses {
                let g = sx.compose_unchecked(sy_inv);
                if !g.is_identity() {
                    gens.insert(g);
                }
            }
        }
        gens.into_iter().collect()
    }

    pub fn is_trivial(&self) -> bool {
        (0..self.size).all(|x| self.row(x).iter().enumerate().all(|(y, &v)| y as u32 == v))
    }

    /// Orbit of `start` under the inner automorphism group, by BFS over the
    /// point symmetries and their inverses.
    pub fn inner_orbit(&self, start: usize) -> Vec<usize> {
        let n = self.size;
        let mut seen = vec![false; n];
        seen[start] = true;
        let mut queue = vec![start];
        let mut head = 0;
        while head < queue.len() {
            let y = queue[head];
            head += 1;
            for x in 0..n {
                for z in [self.act(x, y), self.act_inv(x, y)] {
                    if !std::mem::replace(&mut seen[z], true) {
                        queue.push(z);
                    }
                }
            }
        }
        queue.sort_unstable();
        queue
    }

    pub fn is_connected(&self) -> bool {
        self.inner_orbit(0).len() == self.size
    }

    /// Whether the automorphism group acts transitively, decided by
    /// backtracking search with at most `budget` search nodes.
    pub fn is_homogeneous(&self, budget: u64) -> Result<bool> {
        homogeneity::is_homogeneous(self, budget)
    }

    /// `s_{(x1,x2)}(y1,y2) = (s_{x1}(y1), s_{x2}(y2))` on pairs indexed
    /// `a * |X2| + b`.
    pub fn direct_product(x1: &FiniteQuandle, x2: &FiniteQuandle) -> Result<FiniteQuandle> {
        let (n1, n2) = (x1.size, x2.size);
        let n = n1 * n2;
        let mut flat = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                let a = x1.act(x / n2, y / n2);
                let b = x2.act(x % n2, y % n2);
                flat.push((a * n2 + b) as u32);
            }
        }
        let q = Self::from_flat(n, flat)?;
        match (&x1.labels, &x2.labels) {
            (Some(l1), Some(l2)) => {
                let labels = l1
                    .iter()
                    .flat_map(|a| l2.iter().map(move |b| format!("({a},{b})")))
                    .collect();
                q.with_labels(labels)
            }
            _ => Ok(q),
        }
    }

    /// Interaction-free union: `X1` keeps indices `0..n1`, `X2` is shifted by
    /// `n1`, and each symmetry is the identity on the other part.
    pub fn free_union(x1: &FiniteQuandle, x2: &FiniteQuandle) -> Result<FiniteQuandle> {
        let (n1, n2) = (x1.size, x2.size);
        let n = n1 + n2;
        let mut flat = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                let v = match (x < n1, y < n1) {
                    (true, true) => x1.act(x, y),
                    (false, false) => x2.act(x - n1, y - n1) + n1,
                    _ => y,
                };
                flat.push(v as u32);
            }
        }
        let q = Self::from_flat(n, flat)?;
        match (&x1.labels, &x2.labels) {
            (Some(l1), Some(l2)) => {
                let labels = l1
                    .iter()
                    .map(|a| format!("{a}.0"))
                    .chain(l2.iter().map(|b| format!("{b}.1")))
                    .collect();
                q.with_labels(labels)
            }
            _ => Ok(q),
        }
    }

    /// The isomorphic copy with `table'[π(x)][π(y)] = π(table[x][y])`.
    pub fn relabel(&self, pi: &Permutation) -> Result<FiniteQuandle> {
        let n = self.size;
        if pi.degree() != n {
            return Err(Error::DegreeMismatch {
                left: n,
                right: pi.degree(),
            });
        }
        let mut flat = vec![0u32; n * n];
        for x in 0..n {
            for y in 0..n {
                flat[pi.apply(x) * n + pi.apply(y)] = pi.apply(self.act(x, y)) as u32;
            }
        }
        let mut q = Self::from_flat(n, flat)?;
        if let Some(labels) = &self.labels {
            let mut moved = labels.clone();
            for (x, l) in labels.iter().enumerate() {
                moved[pi.apply(x)] = l.clone();
            }
            q.labels = Some(moved);
        }
        Ok(q)
    }

    /// Whether `f` is a quandle automorphism: `f ∘ s_x = s_{f(x)} ∘ f`.
    pub fn is_automorphism(&self, f: &Permutation) -> bool {
        f.degree() == self.size
            && (0..self.size).all(|x| {
                (0..self.size).all(|y| f.apply(self.act(x, y)) == self.act(f.apply(x), f.apply(y)))
            })
    }
}
