//! Branch-and-bound tier.
//!
//! Sets are `u64` bitsets and `nbhd[v]` is either the closed or the open
//! neighborhood of `v`. Every family handled here is symmetric (`u ∈ nbhd[v]`
//! iff `v ∈ nbhd[u]`), so adding `v` raises the load of exactly the vertices
//! in `nbhd[v]`.

use super::masks::{bits, full, within_budget};

struct Loads {
    load: Vec<u32>,
}

impl Loads {
    fn new(n: usize) -> Self {
        Loads { load: vec![0; n] }
    }

    fn can_add(&self, nbhd: &[u64], v: usize, k: u32) -> bool {
        bits(nbhd[v]).all(|u| self.load[u] < k)
    }

    fn add(&mut self, nbhd: &[u64], v: usize) {
        for u in bits(nbhd[v]) {
            self.load[u] += 1;
        }
    }

    fn remove(&mut self, nbhd: &[u64], v: usize) {
        for u in bits(nbhd[v]) {
            self.load[u] -= 1;
        }
    }
}

/// Largest set with `|nbhd[u] ∩ S| <= k` for all `u`. Vertices are decided in
/// ascending order, inclusion first; a branch is cut when the still-addable
/// vertices cannot beat the incumbent.
pub fn max_limited(nbhd: &[u64], k: u32) -> u64 {
    struct Search<'a> {
        nbhd: &'a [u64],
        k: u32,
        loads: Loads,
        best: u64,
    }

    impl Search<'_> {
        fn run(&mut self, v: usize, chosen: u64) {
            let n = self.nbhd.len();
            let size = chosen.count_ones();
            if size > self.best.count_ones() {
                self.best = chosen;
            }
            if v == n {
                return;
            }
            let addable = (v..n)
                .filter(|&w| self.loads.can_add(self.nbhd, w, self.k))
                .count() as u32;
            if size + addable <= self.best.count_ones() {
                return;
            }
            if self.loads.can_add(self.nbhd, v, self.k) {
                self.loads.add(self.nbhd, v);
                self.run(v + 1, chosen | 1 << v);
                self.loads.remove(self.nbhd, v);
            }
            self.run(v + 1, chosen);
        }
    }

    let mut search = Search {
        nbhd,
        k,
        loads: Loads::new(nbhd.len()),
        best: 0,
    };
    search.run(0, 0);
    debug_assert!(within_budget(nbhd, search.best, k));
    search.best
}

/// Smallest maximal set with `|nbhd[u] ∩ S| <= k` for all `u`.
///
/// Target sizes are tried in ascending order; the first size that admits a
/// maximal set wins. Maximality of a completed candidate is decided by the
/// add-test. While searching, a branch is cut when some excluded vertex `w`
/// can no longer be blocked: a maximal set needs some `u ∈ nbhd[w]` whose load
/// reaches `k`, which is impossible once `load[u]` plus the undecided part of
/// `nbhd[u]` (and the picks left) falls short of `k` for every such `u`.
pub fn min_maximal_limited(nbhd: &[u64], k: u32) -> u64 {
    struct Search<'a> {
        nbhd: &'a [u64],
        k: u32,
        target: u32,
        loads: Loads,
    }

    impl Search<'_> {
        fn is_maximal(&self, chosen: u64) -> bool {
            let n = self.nbhd.len();
            bits(full(n) & !chosen).all(|w| !self.loads.can_add(self.nbhd, w, self.k))
        }

        fn blockable(&self, excluded: u64, undecided: u64, picks_left: u32) -> bool {
            bits(excluded).all(|w| {
                bits(self.nbhd[w]).any(|u| {
                    let reachable = (self.nbhd[u] & undecided).count_ones().min(picks_left);
                    self.loads.load[u] + reachable >= self.k
                })
            })
        }

        fn run(&mut self, v: usize, chosen: u64) -> Option<u64> {
            let n = self.nbhd.len();
            let size = chosen.count_ones();
            if size == self.target {
                return self.is_maximal(chosen).then_some(chosen);
            }
            if size + ((n - v) as u32) < self.target {
                return None;
            }
            let decided = full(v);
            let undecided = full(n) & !decided;
            if !self.blockable(decided & !chosen, undecided, self.target - size) {
                return None;
            }
            if self.loads.can_add(self.nbhd, v, self.k) {
                self.loads.add(self.nbhd, v);
                let found = self.run(v + 1, chosen | 1 << v);
                self.loads.remove(self.nbhd, v);
                if found.is_some() {
                    return found;
                }
            }
            self.run(v + 1, chosen)
        }
    }

    let n = nbhd.len();
    for target in 0..=n as u32 {
        let mut search = Search {
            nbhd,
            k,
            target,
            loads: Loads::new(n),
        };
        if let Some(set) = search.run(0, 0) {
            return set;
        }
    }
    unreachable!("a maximal limited set always exists")
}

/// Smallest `S` whose neighborhoods cover `V`: with closed neighborhoods a
/// minimum dominating set, with open neighborhoods a minimum total dominating
/// set. Branches on the members of `nbhd[u]` for the lowest uncovered `u`.
/// Every vertex must lie in some `nbhd[w]`.
pub fn min_cover(nbhd: &[u64]) -> u64 {
    struct Search<'a> {
        nbhd: &'a [u64],
        all: u64,
        max_cover: u32,
        best: u64,
    }

    impl Search<'_> {
        fn run(&mut self, chosen: u64, covered: u64) {
            if covered == self.all {
                if chosen.count_ones() < self.best.count_ones() {
                    self.best = chosen;
                }
                return;
            }
            let size = chosen.count_ones();
            let uncovered = (self.all & !covered).count_ones();
            let needed = uncovered.div_ceil(self.max_cover);
            if size + needed >= self.best.count_ones() {
                return;
            }
            let u = (self.all & !covered).trailing_zeros() as usize;
            // Members of nbhd[u] are exactly the vertices that can cover u.
            for w in bits(self.nbhd[u] & !chosen) {
                self.run(chosen | 1 << w, covered | self.nbhd[w]);
            }
        }
    }

    let n = nbhd.len();
    let all = full(n);
    let mut search = Search {
        nbhd,
        all,
        max_cover: nbhd
            .iter()
            .map(|m| m.count_ones())
            .max()
            .unwrap_or(1)
            .max(1),
        best: all,
    };
    search.run(0, 0);
    search.best
}
