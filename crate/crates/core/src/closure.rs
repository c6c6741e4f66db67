//! Breadth-first enumeration of permutation groups from generators.
//!
//! Elements are discovered in a fixed order: generators are sorted and
//! deduplicated first, and the queue is processed in insertion order, so the
//! result does not depend on how the caller ordered the generators.

use std::ops::ControlFlow;

use indexmap::IndexSet;

use crate::error::{Error, Result};
use crate::permutation::Permutation;
use crate::quandle::FiniteQuandle;

pub const DEFAULT_CAP: usize = 2_000_000;

/// Elements of `⟨generators⟩`, or the first `cap` of them in BFS order.
#[derive(Clone, Debug)]
pub struct ClosureResult {
    elements: IndexSet<Permutation>,
    truncated: bool,
}

impl ClosureResult {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn is_truncated(&self) -> bool {
        self.truncated
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.contains(p)
    }

    /// Elements in discovery order; the identity comes first.
    pub fn elements(&self) -> impl ExactSizeIterator<Item = &Permutation> {
        self.elements.iter()
    }
}

/// How a walk over a closure ended.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Walk {
    Complete,
    Truncated,
    Stopped,
}

fn prepare(degree: usize, generators: &[Permutation], with_inverses: bool) -> Result<Vec<Permutation>> {
    if degree == 0 {
        return Err(Error::EmptyDegree);
    }
    if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
        return Err(Error::MixedDegrees {
            expected: degree,
            found: g.degree(),
        });
    }
    let mut gens: Vec<Permutation> = generators.to_vec();
    if with_inverses {
        gens.extend(generators.iter().map(Permutation::inverse));
    }
    gens.retain(|g| !g.is_identity());
    gens.sort_unstable();
    gens.dedup();
    Ok(gens)
}

/// Runs the BFS, calling `visit` on every new element (the identity first).
/// `visit` may stop the walk early.
pub(crate) fn walk(
    degree: usize,
    generators: &[Permutation],
    cap: usize,
    with_inverses: bool,
    mut visit: impl FnMut(&Permutation) -> ControlFlow<()>,
) -> Result<(IndexSet<Permutation>, Walk)> {
    if cap == 0 {
        return Err(Error::InvalidCap);
    }
    let gens = prepare(degree, generators, with_inverses)?;
    let mut elements = IndexSet::new();
    let identity = Permutation::identity(degree)?;
    if visit(&identity).is_break() {
        elements.insert(identity);
        return Ok((elements, Walk::Stopped));
    }
    elements.insert(identity);
    let mut head = 0;
    while head < elements.len() {
        for g in &gens {
            let next = g.compose_unchecked(&elements[head]);
            if elements.contains(&next) {
                continue;
            }
            if elements.len() == cap {
                return Ok((elements, Walk::Truncated));
            }
            let flow = visit(&next);
            elements.insert(next);
            if flow.is_break() {
                return Ok((elements, Walk::Stopped));
            }
        }
        head += 1;
    }
    Ok((elements, Walk::Complete))
}

/// The group generated by `generators` acting on `degree` points.
///
/// If the group has more than `cap` elements the result holds exactly `cap`
/// of them and is flagged truncated.
pub fn close(degree: usize, generators: &[Permutation], cap: usize) -> Result<ClosureResult> {
    let (elements, walk) = walk(degree, generators, cap, true, |_| ControlFlow::Continue(()))?;
    Ok(ClosureResult {
        elements,
        truncated: walk == Walk::Truncated,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GroupKind {
    Inner,
    Displacement,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GroupOrder {
    Exact(usize),
    Truncated,
}

impl GroupOrder {
    pub fn exact(self) -> Option<usize> {
        match self {
            GroupOrder::Exact(n) => Some(n),
            GroupOrder::Truncated => None,
        }
    }
}

pub fn generators(q: &FiniteQuandle, which: GroupKind) -> Vec<Permutation> {
    match which {
        GroupKind::Inner => q.inner_generators(),
        GroupKind::Displacement => q.displacement_generators(),
    }
}

/// `Inn(X)` or `Dis(X)` as an explicit element set.
pub fn quandle_group(q: &FiniteQuandle, which: GroupKind, cap: usize) -> Result<ClosureResult> {
    close(q.size(), &generators(q, which), cap)
}

pub fn group_order(q: &FiniteQuandle, which: GroupKind, cap: usize) -> Result<GroupOrder> {
    let closure = quandle_group(q, which, cap)?;
    Ok(if closure.is_truncated() {
        GroupOrder::Truncated
    } else {
        GroupOrder::Exact(closure.order())
    })
}

/// Orbits of the group generated by `generators`, each sorted, ordered by
/// smallest element.
pub fn orbits(degree: usize, generators: &[Permutation]) -> Vec<Vec<usize>> {
    let mut owner = vec![usize::MAX; degree];
    let mut result: Vec<Vec<usize>> = Vec::new();
    for start in 0..degree {
        if owner[start] != usize::MAX {
            continue;
        }
        let id = result.len();
        owner[start] = id;
        let mut orbit = vec![start];
        let mut head = 0;
        while head < orbit.len() {
            let p = orbit[head];
            head += 1;
            for g in generators {
                let q = g.apply(p);
                if owner[q] == usize::MAX {
                    owner[q] = id;
                    orbit.push(q);
                }
            }
        }
        orbit.sort_unstable();
        result.push(orbit);
    }
    result
}
