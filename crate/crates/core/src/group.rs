//! Finite groups as fully tabulated multiplication tables.

use crate::error::{Error, Result};
use crate::permutation::Permutation;

/// A validated finite group on `{0, .., order-1}`.
///
/// Built-in constructors put the identity at index 0; tables supplied through
/// [`FiniteGroup::from_table`] may have it anywhere.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    mult: Vec<u32>,
    identity: usize,
    inverse: Vec<u32>,
}

impl FiniteGroup {
    /// `Z/nZ` under addition.
    pub fn cyclic(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::OrderZero);
        }
        let mult = (0..n)
            .flat_map(|a| (0..n).map(move |b| ((a + b) % n) as u32))
            .collect();
        let inverse = (0..n).map(|a| ((n - a) % n) as u32).collect();
        Ok(FiniteGroup {
            order: n,
            mult,
            identity: 0,
            inverse,
        })
    }

    /// The symmetric group on `degree` points; element `k` is the `k`-th
    /// permutation in lexicographic order, so the identity is element 0.
    pub fn symmetric(degree: usize) -> Result<Self> {
        if degree == 0 {
            return Err(Error::DegreeZero);
        }
        let mut elements = Vec::new();
        let mut current: Vec<usize> = (0..degree).collect();
        loop {
            elements.push(Permutation::new(current.clone())?);
            if !next_permutation(&mut current) {
                break;
            }
        }
        Self::from_permutations(&elements)
    }

    /// The group formed by a list of permutations closed under composition;
    /// element `k` is `elements[k]` and products are `p ∘ q`.
    pub fn from_permutations(elements: &[Permutation]) -> Result<Self> {
        let index: std::collections::HashMap<&Permutation, usize> =
            elements.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let mut mult = Vec::with_capacity(elements.len() * elements.len());
        for p in elements {
            for q in elements {
                let r = p.compose(q)?;
                let k = index.get(&r).ok_or_else(|| {
                    Error::InvalidParameter("permutations are not closed under composition".into())
                })?;
                mult.push(*k);
            }
        }
        let n = elements.len();
        Self::from_table(mult.chunks(n.max(1)).map(|r| r.to_vec()).collect())
    }

    /// Componentwise product; the pair `(g, h)` has index `g * |H| + h`.
    pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> FiniteGroup {
        let (m, n) = (g.order, h.order);
        let order = m * n;
        let mut mult = Vec::with_capacity(order * order);
        for a in 0..order {
            for b in 0..order {
                let first = g.mul(a / n, b / n);
                let second = h.mul(a % n, b % n);
                mult.push((first * n + second) as u32);
            }
        }
        let inverse = (0..order)
            .map(|a| (g.inv(a / n) * n + h.inv(a % n)) as u32)
            .collect();
        FiniteGroup {
            order,
            mult,
            identity: g.identity * n + h.identity,
            inverse,
        }
    }

    /// Validates a multiplication table `mult[a][b] = a·b`.
    pub fn from_table(mult: Vec<Vec<usize>>) -> Result<Self> {
        let n = mult.len();
        if n == 0 {
            return Err(Error::OrderZero);
        }
        if mult.iter().any(|row| row.len() != n) {
            return Err(Error::NotSquare);
        }
        for (a, row) in mult.iter().enumerate() {
            if !is_permutation_of(row.iter().copied(), n) {
                return Err(Error::NotLatin(format!("row {a}")));
            }
        }
        for b in 0..n {
            if !is_permutation_of(mult.iter().map(|row| row[b]), n) {
                return Err(Error::NotLatin(format!("column {b}")));
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| mult[e][a] == a && mult[a][e] == a))
            .ok_or(Error::NoIdentity)?;
        let inverse = (0..n)
            .map(|a| {
                (0..n)
                    .find(|&b| mult[a][b] == identity && mult[b][a] == identity)
                    .map(|b| b as u32)
                    .ok_or(Error::NoInverse(a))
            })
            .collect::<Result<Vec<u32>>>()?;
        for a in 0..n {
            for b in 0..n {
                let ab = mult[a][b];
                for c in 0..n {
                    if mult[ab][c] != mult[a][mult[b][c]] {
                        return Err(Error::NotAssociative(a, b, c));
                    }
                }
            }
        }
        Ok(FiniteGroup {
            order: n,
            mult: mult.into_iter().flatten().map(|x| x as u32).collect(),
            identity,
            inverse,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }

    pub fn table(&self) -> Vec<Vec<usize>> {
        self.mult
            .chunks(self.order)
            .map(|row| row.iter().map(|&x| x as usize).collect())
            .collect()
    }

    /// Multiplicative order of `a`.
    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// True iff `sigma` is a bijection fixing the identity that respects
    /// multiplication.
    pub fn validate_automorphism(&self, sigma: &Permutation) -> Result<bool> {
        if sigma.degree() != self.order {
            return Err(Error::DegreeMismatch {
                left: self.order,
                right: sigma.degree(),
            });
        }
        if sigma.apply(self.identity) != self.identity {
            return Ok(false);
        }
        let n = self.order;
        Ok((0..n).all(|a| {
            (0..n).all(|b| sigma.apply(self.mul(a, b)) == self.mul(sigma.apply(a), sigma.apply(b)))
        }))
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order;
        (0..n).all(|a| (a + 1..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Every element squares to the identity, i.e. the group is a product of
    /// copies of `Z/2`.
    pub fn is_elementary_abelian_2(&self) -> bool {
        (0..self.order).all(|a| self.mul(a, a) == self.identity)
    }

    /// Inner automorphism `x ↦ g x g⁻¹`.
    pub fn conjugation(&self, g: usize) -> Result<Permutation> {
        self.check_index(g)?;
        let gi = self.inv(g);
        Permutation::new((0..self.order).map(|x| self.mul(self.mul(g, x), gi)).collect())
    }

    /// `x ↦ x⁻¹`; an automorphism exactly when the group is abelian.
    pub fn inversion_map(&self) -> Permutation {
        Permutation::new((0..self.order).map(|x| self.inv(x)).collect())
            .expect("inversion is a bijection")
    }

    /// `x ↦ xᵏ`, or an error when this is not a bijection.
    pub fn power_map(&self, k: usize) -> Result<Permutation> {
        let images = (0..self.order)
            .map(|x| (0..k).fold(self.identity, |acc, _| self.mul(acc, x)))
            .collect();
        Permutation::new(images)
    }

    fn check_index(&self, a: usize) -> Result<()> {
        if a >= self.order {
            return Err(Error::IndexOutOfRange {
                index: a,
                size: self.order,
            });
        }
        Ok(())
    }
}

fn is_permutation_of(values: impl Iterator<Item = usize>, n: usize) -> bool {
    let mut seen = vec![false; n];
    for v in values {
        if v >= n || std::mem::replace(&mut seen[v], true) {
            return false;
        }
    }
    true
}

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}
