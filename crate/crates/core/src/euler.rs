//! The quandle Euler characteristic: the least number of fixed points of an
//! element of the displacement group.

use std::collections::HashSet;
use std::ops::ControlFlow;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::closure::{self, Walk};
use crate::constructors::WeightedGraphSpec;
use crate::error::Result;
use crate::permutation::Permutation;
use crate::quandle::FiniteQuandle;

/// Outcome of an Euler characteristic computation.
///
/// When `exact` is set, `chi` is the true value and `witness` is an element of
/// the displacement group with exactly `chi` fixed points. Otherwise `chi` is
/// `None` and `upper_bound` is the best count seen before the cap tripped.
/// `dis_order` is `None` whenever the group was not fully enumerated, which
/// includes the early exit on a fixed-point-free element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EulerReport {
    pub chi: Option<usize>,
    pub exact: bool,
    pub witness: Option<Permutation>,
    pub dis_order: Option<usize>,
    pub upper_bound: usize,
}

impl EulerReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    fn exact(witness: Permutation, dis_order: Option<usize>) -> Self {
        let chi = witness.fixed_point_count();
        EulerReport {
            chi: Some(chi),
            exact: true,
            witness: Some(witness),
            dis_order,
            upper_bound: chi,
        }
    }
}

/// Keeps the minimizer with the fewest fixed points, ties broken towards
/// the lexicographically smallest image array.
struct Best {
    count: usize,
    witness: Option<Permutation>,
}

impl Best {
    fn offer(&mut self, count: usize, candidate: impl FnOnce() -> Permutation) {
        match self.witness.as_ref() {
            None => {}
            Some(_) if count < self.count => {}
            Some(w) if count == self.count => {
                let c = candidate();
                if c < *w {
                    self.witness = Some(c);
                }
                return;
            }
            Some(_) => return,
        }
        self.count = count;
        self.witness = Some(candidate());
    }
}

/// Enumerates `Dis(X)` breadth-first and returns the minimum fixed-point
/// count. Stops as soon as a fixed-point-free element turns up.
pub fn euler_characteristic(q: &FiniteQuandle, cap: usize) -> Result<EulerReport> {
    let gens = q.displacement_generators();
    let mut best = Best {
        count: q.size(),
        witness: None,
    };
    let (elements, walk) = closure::walk(q.size(), &gens, cap, true, |g| {
        let count = g.fixed_point_count();
        best.offer(count, || g.clone());
        if count == 0 {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    let order = elements.len();
    let witness = best.witness.expect("identity is always visited");
    Ok(match walk {
        Walk::Complete => EulerReport::exact(witness, Some(order)),
        Walk::Stopped => EulerReport::exact(witness, None),
        Walk::Truncated => EulerReport {
            chi: None,
            exact: false,
            witness: None,
            dis_order: None,
            upper_bound: best.count,
        },
    })
}

/// Euler characteristic of `V ×_d A` computed on `Aⁿ`: the displacement
/// group is spanned by the row differences `d_i - d_{i+1}`, and an element
/// `a` fixes exactly `|A| · #{i : a_i = 0}` points.
pub fn euler_graph_fast(spec: &WeightedGraphSpec, cap: usize) -> Result<EulerReport> {
    if cap == 0 {
        return Err(crate::error::Error::InvalidCap);
    }
    let a = spec.weight_group();
    let n = spec.vertex_count();
    let zero = a.identity();
    let add = |x: &[usize], y: &[usize]| -> Vec<usize> {
        x.iter().zip(y).map(|(&p, &q)| a.mul(p, q)).collect()
    };
    let gens: Vec<Vec<usize>> = (0..n.saturating_sub(1))
        .map(|i| {
            let next_neg: Vec<usize> = spec.row(i + 1).iter().map(|&w| a.inv(w)).collect();
            add(spec.row(i), &next_neg)
        })
        .filter(|g| g.iter().any(|&w| w != zero))
        .collect();

    let identity = vec![zero; n];
    let mut seen: HashSet<Vec<usize>> = HashSet::from([identity.clone()]);
    let mut queue = vec![identity];
    let mut head = 0;
    let mut truncated = false;
    'outer: while head < queue.len() {
        for g in &gens {
            let next = add(g, &queue[head]);
            if seen.contains(&next) {
                continue;
            }
            if seen.len() == cap {
                truncated = true;
                break 'outer;
            }
            seen.insert(next.clone());
            queue.push(next);
        }
        head += 1;
    }

    let zeros = |t: &[usize]| t.iter().filter(|&&w| w == zero).count();
    let min_zeros = queue.iter().map(|t| zeros(t)).min().expect("identity present");
    let mut best = Best {
        count: usize::MAX,
        witness: None,
    };
    for t in queue.iter().filter(|t| zeros(t) == min_zeros) {
        best.offer(min_zeros * a.order(), || spec.translation(t));
    }
    let upper_bound = min_zeros * a.order();
    Ok(if truncated {
        EulerReport {
            chi: None,
            exact: false,
            witness: None,
            dis_order: None,
            upper_bound,
        }
    } else {
        EulerReport::exact(best.witness.expect("identity present"), Some(queue.len()))
    })
}

/// Tries random words in the displacement generators and returns the first
/// fixed-point-free one. Trial `t` uses a word of length `1 + t mod 32`.
/// A hit proves the Euler characteristic is 0; a miss proves nothing.
pub fn zero_witness_search(q: &FiniteQuandle, trials: usize, seed: u64) -> Option<Permutation> {
    let gens = q.displacement_generators();
    if gens.is_empty() {
        return None;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for trial in 0..trials {
        let length = 1 + trial % 32;
        let mut word = gens[rng.random_range(0..gens.len())].clone();
        for _ in 1..length {
            word = gens[rng.random_range(0..gens.len())].compose_unchecked(&word);
        }
        if word.fixed_point_count() == 0 {
            return Some(word);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::*;
    use crate::group::FiniteGroup;

    fn chi(q: &FiniteQuandle) -> usize {
        euler_characteristic(q, closure::DEFAULT_CAP).unwrap().chi.unwrap()
    }

    #[test]
    fn known_values() {
        let t4 = euler_characteristic(&trivial(4).unwrap(), 10).unwrap();
        assert_eq!(t4.chi, Some(4));
        assert!(t4.witness.unwrap().is_identity());
        assert_eq!(t4.dis_order, Some(1));

        assert_eq!(chi(&dihedral(5).unwrap()), 0);
        assert_eq!(chi(&discrete_sphere(2).unwrap()), 2);
        assert_eq!(chi(&discrete_sphere(3).unwrap()), 0);
        assert_eq!(chi(&cycle_quandle(3).unwrap()), 2);
        let c3 = cycle_quandle(3).unwrap();
        assert_eq!(chi(&FiniteQuandle::free_union(&c3, &c3).unwrap()), 0);
    }

    #[test]
    fn report_json_shape() {
        let r = euler_characteristic(&discrete_sphere(2).unwrap(), 100).unwrap();
        assert_eq!(
            r.to_json(),
            r#"{"chi":2,"exact":true,"witness":[0,1,3,2,5,4],"dis_order":4,"upper_bound":2}"#
        );
    }

    #[test]
    fn witness_is_lexicographically_smallest_minimizer() {
        let q = discrete_sphere(4).unwrap();
        let r = euler_characteristic(&q, 1000).unwrap();
        let dis = closure::close(q.size(), &q.displacement_generators(), 1000).unwrap();
        let expected = dis
            .elements()
            .filter(|g| g.fixed_point_count() == 2)
            .min()
            .unwrap();
        assert_eq!(r.witness.as_ref(), Some(expected));
        assert_eq!(r.dis_order, Some(16));
    }

    #[test]
    fn early_exit_skips_group_order() {
        let r = euler_characteristic(&dihedral(7).unwrap(), 100).unwrap();
        assert_eq!(r.chi, Some(0));
        assert!(r.exact);
        assert_eq!(r.dis_order, None);
        assert_eq!(r.witness.unwrap().fixed_point_count(), 0);
    }

    #[test]
    fn truncated_report() {
        // Dis(B_5) has order 5; a cap of 2 cuts it short
        let r = euler_characteristic(&path_quandle(5).unwrap(), 2).unwrap();
        assert!(!r.exact);
        assert_eq!(r.chi, None);
        assert_eq!(r.upper_bound, 5);
        let fast = euler_graph_fast(&path_spec(5).unwrap(), 2).unwrap();
        assert!(!fast.exact);
        assert_eq!(fast.upper_bound, 5);
    }

    #[test]
    fn fast_path() {
        let r = euler_graph_fast(&cycle_spec(3).unwrap(), 100).unwrap();
        assert_eq!(r.chi, Some(2));
        assert_eq!(r.dis_order, Some(4));
        let r = euler_graph_fast(&path_spec(4).unwrap(), 100).unwrap();
        assert_eq!(r.chi, Some(4));
        assert_eq!(r.dis_order, Some(4));
        let zero = WeightedGraphSpec::new(FiniteGroup::cyclic(2).unwrap(), vec![vec![0; 3]; 3]).unwrap();
        let r = euler_graph_fast(&zero, 100).unwrap();
        assert_eq!(r.chi, Some(6));
        assert_eq!(r.dis_order, Some(1));
    }

    #[test]
    fn fast_path_witness_matches_full_enumeration() {
        for n in [3, 5] {
            let spec = cycle_spec(n).unwrap();
            let fast = euler_graph_fast(&spec, 1000).unwrap();
            let slow = euler_characteristic(&graph_quandle(&spec).unwrap(), 1000).unwrap();
            assert_eq!(fast, slow);
        }
    }

    #[test]
    fn zero_witnesses() {
        let w = zero_witness_search(&dihedral(101).unwrap(), 1000, 7).unwrap();
        assert_eq!(w.fixed_point_count(), 0);
        assert_eq!(zero_witness_search(&trivial(3).unwrap(), 1000, 7), None);
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let w = zero_witness_search(&core(&s3).unwrap(), 1000, 7).unwrap();
        assert_eq!(w.fixed_point_count(), 0);
        // positive characteristic: no fixed-point-free element exists
        assert_eq!(zero_witness_search(&discrete_sphere(2).unwrap(), 500, 1), None);
    }

    #[test]
    fn zero_witness_search_is_deterministic() {
        let q = discrete_torus(&[3, 5]).unwrap();
        assert_eq!(zero_witness_search(&q, 50, 42), zero_witness_search(&q, 50, 42));
    }
}
