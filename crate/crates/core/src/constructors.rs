//! Builders for the named quandle families. Every builder returns a
//! quandle that has been through full axiom validation.

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::permutation::Permutation;
use crate::quandle::FiniteQuandle;

fn require(ok: bool, message: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidParameter(message.to_string()))
    }
}

fn from_fn(n: usize, s: impl Fn(usize, usize) -> usize) -> Result<FiniteQuandle> {
    FiniteQuandle::validate(
        (0..n)
            .map(|x| (0..n).map(|y| s(x, y)).collect())
            .collect(),
    )
}

/// Every point symmetry is the identity.
pub fn trivial(n: usize) -> Result<FiniteQuandle> {
    require(n >= 1, "trivial quandle needs n >= 1")?;
    from_fn(n, |_, y| y)
}

/// `R_n`: `Z/nZ` with `s_a(b) = 2a - b`.
pub fn dihedral(n: usize) -> Result<FiniteQuandle> {
    require(n >= 1, "dihedral quandle needs n >= 1")?;
    from_fn(n, |a, b| (2 * a + n - b) % n)
}

/// `GAlex(G, σ)` with `s_h(g) = h σ(h⁻¹ g)`.
pub fn galex(group: &FiniteGroup, sigma: &Permutation) -> Result<FiniteQuandle> {
    if !group.validate_automorphism(sigma)? {
        return Err(Error::NotAnAutomorphism);
    }
    from_fn(group.order(), |h, g| {
        group.mul(h, sigma.apply(group.mul(group.inv(h), g)))
    })
}

/// `Core(G)` with `s_h(g) = h g⁻¹ h`.
pub fn core(group: &FiniteGroup) -> Result<FiniteQuandle> {
    from_fn(group.order(), |h, g| group.mul(group.mul(h, group.inv(g)), h))
}

/// `DS^n`: the points `±e_1, .., ±e_{n+1}` with index `2k` for `+e_{k+1}` and
/// `2k+1` for `-e_{k+1}`. The symmetry at either point of an axis fixes that
/// axis and negates every other one.
pub fn discrete_sphere(n: usize) -> Result<FiniteQuandle> {
    require(n >= 1, "discrete sphere needs dimension >= 1")?;
    let q = from_fn(2 * (n + 1), |x, y| if x / 2 == y / 2 { y } else { y ^ 1 })?;
    let labels = (1..=n + 1)
        .flat_map(|k| [format!("+e{k}"), format!("-e{k}")])
        .collect();
    q.with_labels(labels)
}

/// An `A`-weighted graph `(V, A, d)` with `A` abelian and `d(v, v) = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedGraphSpec {
    vertex_count: usize,
    weight_group: FiniteGroup,
    d: Vec<Vec<usize>>,
}

impl WeightedGraphSpec {
    pub fn new(weight_group: FiniteGroup, d: Vec<Vec<usize>>) -> Result<Self> {
        let n = d.len();
        require(n >= 1, "weighted graph needs at least one vertex")?;
        if d.iter().any(|row| row.len() != n) {
            return Err(Error::NotSquare);
        }
        if !weight_group.is_abelian() {
            return Err(Error::NotAbelian);
        }
        if let Some(&bad) = d.iter().flatten().find(|&&w| w >= weight_group.order()) {
            return Err(Error::IndexOutOfRange {
                index: bad,
                size: weight_group.order(),
            });
        }
        if let Some(v) = (0..n).find(|&v| d[v][v] != weight_group.identity()) {
            return Err(Error::DiagonalNonzero(v));
        }
        Ok(WeightedGraphSpec {
            vertex_count: n,
            weight_group,
            d,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn weight_group(&self) -> &FiniteGroup {
        &self.weight_group
    }

    pub fn weights(&self) -> &[Vec<usize>] {
        &self.d
    }

    /// Row `d_v`, the translation vector of the symmetry at any `(v, a)`.
    pub fn row(&self, v: usize) -> &[usize] {
        &self.d[v]
    }

    /// The permutation of `V × A` translating fibre `w` by `shift[w]`.
    pub fn translation(&self, shift: &[usize]) -> Permutation {
        let a = &self.weight_group;
        let m = a.order();
        let images = (0..self.vertex_count * m)
            .map(|i| (i / m) * m + a.mul(shift[i / m], i % m))
            .collect();
        Permutation::new(images).expect("translations are bijective")
    }
}

/// `V ×_d A` with `s_{(v,a)}(w,b) = (w, d(v,w) + b)`, indexed `v * |A| + a`.
pub fn graph_quandle(spec: &WeightedGraphSpec) -> Result<FiniteQuandle> {
    let a = &spec.weight_group;
    let m = a.order();
    from_fn(spec.vertex_count * m, |x, y| {
        let (v, w, b) = (x / m, y / m, y % m);
        w * m + a.mul(spec.d[v][w], b)
    })
}

/// Weights of `C_n`: `d(v_i, v_j) = 1` in `Z/2` iff `i - j ≡ 1 (mod n)`.
pub fn cycle_spec(n: usize) -> Result<WeightedGraphSpec> {
    require(n >= 2, "cycle quandle needs n >= 2")?;
    let d = (0..n)
        .map(|i| (0..n).map(|j| usize::from((i + n - j) % n == 1)).collect())
        .collect();
    WeightedGraphSpec::new(FiniteGroup::cyclic(2)?, d)
}

pub fn cycle_quandle(n: usize) -> Result<FiniteQuandle> {
    graph_quandle(&cycle_spec(n)?)
}

/// Weights of `B_n`: two vertices over `Z/n` with the single edge
/// `d(v_1, v_2) = 1`, which is `d[0][1]` with 0-based vertices.
pub fn path_spec(n: usize) -> Result<WeightedGraphSpec> {
    require(n >= 2, "path quandle needs n >= 2")?;
    WeightedGraphSpec::new(FiniteGroup::cyclic(n)?, vec![vec![0, 1], vec![0, 0]])
}

pub fn path_quandle(n: usize) -> Result<FiniteQuandle> {
    graph_quandle(&path_spec(n)?)
}

/// `DT_u = R_{m_1} × .. × R_{m_k}`. Factors with `m_i ≤ 2` are trivial and
/// allowed.
pub fn discrete_torus(m: &[usize]) -> Result<FiniteQuandle> {
    require(!m.is_empty(), "discrete torus needs at least one factor")?;
    let mut q = dihedral(m[0])?;
    for &mi in &m[1..] {
        q = FiniteQuandle::direct_product(&q, &dihedral(mi)?)?;
    }
    Ok(q)
}
