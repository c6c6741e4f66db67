use super::FiniteQuandle;
use crate::error::{Error, Result};
use crate::permutation::Permutation;

pub const DEFAULT_SEARCH_BUDGET: u64 = 10_000_000;

const UNSET: u32 = u32::MAX;

/// Invariants of `x` preserved by every automorphism: the cycle type of
/// `s_x` and how many points share the symmetry `s_x`.
fn signature(q: &FiniteQuandle, x: usize) -> (Vec<usize>, usize) {
    let sx = q.row(x);
    let mut lengths: Vec<usize> = Vec::new();
    let mut seen = vec![false; q.size()];
    for start in 0..q.size() {
        let mut len = 0;
        let mut p = start;
        while !seen[p] {
            seen[p] = true;
            p = sx[p] as usize;
            len += 1;
        }
        if len > 0 {
            lengths.push(len);
        }
    }
    lengths.sort_unstable();
    let twins = (0..q.size()).filter(|&z| q.row(z) == sx).count();
    (lengths, twins)
}

struct Search<'a> {
    q: &'a FiniteQuandle,
    forward: Vec<u32>,
    backward: Vec<u32>,
    trail: Vec<usize>,
    signatures: &'a [(Vec<usize>, usize)],
    nodes: u64,
    budget: u64,
}

impl<'a> Search<'a> {
    fn new(q: &'a FiniteQuandle, signatures: &'a [(Vec<usize>, usize)], budget: u64) -> Self {
        let n = q.size();
        Search {
            q,
            forward: vec![UNSET; n],
            backward: vec![UNSET; n],
            trail: Vec::with_capacity(n),
            signatures,
            nodes: 0,
            budget,
        }
    }

    /// Sets `f(x) = y` and everything it forces through
    /// `f(s_a(c)) = s_{f(a)}(f(c))` and the same for `s⁻¹`. Returns false on
    /// a contradiction; the caller undoes the partial assignment.
    fn extend(&mut self, x: usize, y: usize) -> bool {
        let q = self.q;
        let mut pending = vec![(x, y)];
        while let Some((a, b)) = pending.pop() {
            match (self.forward[a], self.backward[b]) {
                (fa, _) if fa != UNSET => {
                    if fa as usize != b {
                        return false;
                    }
                    continue;
                }
                (_, ba) if ba != UNSET => return false,
                _ => {}
            }
            if self.signatures[a] != self.signatures[b] {
                return false;
            }
            self.forward[a] = b as u32;
            self.backward[b] = a as u32;
            self.trail.push(a);
            for k in 0..self.trail.len() {
                let c = self.trail[k];
                let fc = self.forward[c] as usize;
                pending.push((q.act(a, c), q.act(b, fc)));
                pending.push((q.act(c, a), q.act(fc, b)));
                pending.push((q.act_inv(a, c), q.act_inv(b, fc)));
                pending.push((q.act_inv(c, a), q.act_inv(fc, b)));
            }
        }
        true
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let a = self.trail.pop().unwrap();
            let b = self.forward[a] as usize;
            self.forward[a] = UNSET;
            self.backward[b] = UNSET;
        }
    }

    fn search(&mut self) -> Result<bool> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::SearchBudgetExceeded(self.budget));
        }
        let Some(x) = self.forward.iter().position(|&v| v == UNSET) else {
            return Ok(true);
        };
        for y in 0..self.q.size() {
            if self.backward[y] != UNSET {
                continue;
            }
            let mark = self.trail.len();
            if self.extend(x, y) && self.search()? {
                return Ok(true);
            }
            self.undo(mark);
        }
        Ok(false)
    }

    fn find(&mut self, source: usize, target: usize) -> Result<Option<Permutation>> {
        self.undo(0);
        if !self.extend(source, target) {
            return Ok(None);
        }
        if !self.search()? {
            return Ok(None);
        }
        let images = self.forward.iter().map(|&v| v as usize).collect();
        Ok(Some(Permutation::new(images).expect("complete search yields a bijection")))
    }
}

/// Finds a quandle automorphism `f` with `f(source) = target`, or `None` if
/// none exists. Errors once more than `budget` search nodes are visited.
pub fn automorphism_mapping(
    q: &FiniteQuandle,
    source: usize,
    target: usize,
    budget: u64,
) -> Result<Option<Permutation>> {
    for i in [source, target] {
        if i >= q.size() {
            return Err(Error::IndexOutOfRange {
                index: i,
                size: q.size(),
            });
        }
    }
    let signatures: Vec<_> = (0..q.size()).map(|x| signature(q, x)).collect();
    Search::new(q, &signatures, budget).find(source, target)
}

pub(super) fn is_homogeneous(q: &FiniteQuandle, budget: u64) -> Result<bool> {
    let n = q.size();
    let signatures: Vec<_> = (0..n).map(|x| signature(q, x)).collect();
    if signatures.iter().any(|s| *s != signatures[0]) {
        return Ok(false);
    }
    let mut movers: Vec<Permutation> = q.inner_generators();
    let mut search = Search::new(q, &signatures, budget);
    loop {
        let covered = orbit(n, &movers, 0);
        let Some(target) = covered.iter().position(|&c| !c) else {
            return Ok(true);
        };
        match search.find(0, target)? {
            Some(f) => movers.push(f),
            None => return Ok(false),
        }
    }
}

fn orbit(n: usize, movers: &[Permutation], start: usize) -> Vec<bool> {
    let mut seen = vec![false; n];
    seen[start] = true;
    let mut queue = vec![start];
    while let Some(p) = queue.pop() {
        for g in movers {
            let image = g.apply(p);
            if !std::mem::replace(&mut seen[image], true) {
                queue.push(image);
            }
        }
    }
    seen
}
