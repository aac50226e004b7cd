//! Linear-time domination and total domination on trees.
//!
//! Both algorithms root the tree at vertex 0 and visit children in ascending
//! id order, so the returned sets are deterministic.

use crate::graph::Graph;
use crate::packing::{Optimality, PackingCertificate, PackingKind, SolveError};

const NONE: usize = usize::MAX;

/// Parent pointers and a post-order (children before parents, siblings
/// ascending) for the tree rooted at 0.
struct Rooted {
    parent: Vec<usize>,
    post_order: Vec<usize>,
}

impl Rooted {
    fn new(t: &Graph) -> Self {
        let n = t.order();
        let mut parent = vec![NONE; n];
        let mut post_order = Vec::with_capacity(n);
        // (vertex, index of the next neighbor to look at)
        let mut stack = vec![(0usize, 0usize)];
        while let Some(&mut (v, ref mut next)) = stack.last_mut() {
            let neighbors = t.neighbors(v);
            match neighbors[*next..].iter().position(|&u| u != parent[v]) {
                Some(offset) => {
                    let child = neighbors[*next + offset];
                    *next += offset + 1;
                    parent[child] = v;
                    stack.push((child, 0));
                }
                None => {
                    post_order.push(v);
                    stack.pop();
                }
            }
        }
        Rooted { parent, post_order }
    }

    fn children<'a>(&'a self, t: &'a Graph, v: usize) -> impl Iterator<Item = usize> + 'a {
        t.neighbors(v)
            .iter()
            .copied()
            .filter(move |&u| u != self.parent[v])
    }
}

/// `γ(t)` by the leaf-up greedy: whenever a vertex is still undominated when
/// its subtree is finished, take its parent.
pub fn tree_domination(t: &Graph) -> Result<PackingCertificate, SolveError> {
    if !t.is_tree() {
        return Err(SolveError::NotATree);
    }
    let rooted = Rooted::new(t);
    let n = t.order();
    let mut dominated = vec![false; n];
    let mut chosen = Vec::new();
    for &v in &rooted.post_order {
        let p = rooted.parent[v];
        if dominated[v] {
            continue;
        }
        let pick = if p == NONE { v } else { p };
        chosen.push(pick);
        dominated[pick] = true;
        for &u in t.neighbors(pick) {
            dominated[u] = true;
        }
    }
    PackingCertificate::certify(
        t,
        PackingKind::Dominating,
        Optimality::Minimum,
        chosen.into(),
    )
}

const INF: usize = usize::MAX / 4;

/// Per-vertex costs for the subtree below `v`.
#[derive(Clone, Copy)]
struct Costs {
    /// v chosen, v has a chosen child.
    in_covered: usize,
    /// v chosen, no chosen child (the parent must be chosen).
    in_open: usize,
    /// v not chosen, v has a chosen child.
    out_covered: usize,
    /// v not chosen, no chosen child (the parent must be chosen).
    out_open: usize,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum State {
    InCovered,
    InOpen,
    OutCovered,
    OutOpen,
}

impl Costs {
    fn get(&self, s: State) -> usize {
        match s {
            State::InCovered => self.in_covered,
            State::InOpen => self.in_open,
            State::OutCovered => self.out_covered,
            State::OutOpen => self.out_open,
        }
    }

    /// Cheapest of `options`, first listed wins ties.
    fn best(&self, options: &[State]) -> (State, usize) {
        options
            .iter()
            .map(|&s| (s, self.get(s)))
            .fold(
                (options[0], INF + 1),
                |acc, cur| if cur.1 < acc.1 { cur } else { acc },
            )
    }
}

const ANY: [State; 4] = [
    State::InCovered,
    State::InOpen,
    State::OutCovered,
    State::OutOpen,
];
const CHOSEN: [State; 2] = [State::InCovered, State::InOpen];
const SELF_COVERED: [State; 2] = [State::InCovered, State::OutCovered];

/// Sum of each child's best cost over `free`, with one child forced into
/// `forced`. Returns the total and the forced child (lowest id on ties).
fn with_one_forced(
    children: &[Costs],
    ids: &[usize],
    free: &[State],
    forced: &[State],
) -> (usize, usize) {
    let mut total = 0usize;
    let mut extra = INF;
    let mut who = NONE;
    for (c, &id) in children.iter().zip(ids) {
        let base = c.best(free).1;
        total = (total + base).min(INF);
        let delta = c.best(forced).1.saturating_sub(base);
        if delta < extra {
            extra = delta;
            who = id;
        }
    }
    ((total + extra).min(INF), who)
}

/// `γ_t(t)` by dynamic programming over the four states of [`Costs`].
pub fn tree_total_domination(t: &Graph) -> Result<PackingCertificate, SolveError> {
    if !t.is_tree() {
        return Err(SolveError::NotATree);
    }
    if t.order() < 2 {
        return Err(SolveError::TooSmall);
    }
    let n = t.order();
    let rooted = Rooted::new(t);
    let mut costs = vec![
        Costs {
            in_covered: INF,
            in_open: INF,
            out_covered: INF,
            out_open: INF,
        };
        n
    ];
    let mut kids: Vec<Costs> = Vec::new();
    let mut ids: Vec<usize> = Vec::new();
    for &v in &rooted.post_order {
        ids.clear();
        ids.extend(rooted.children(t, v));
        kids.clear();
        kids.extend(ids.iter().map(|&c| costs[c]));
        let sum = |states: &[State]| {
            kids.iter()
                .map(|c| c.best(states).1)
                .fold(0, |a: usize, b| (a + b).min(INF))
        };
        costs[v] = Costs {
            in_covered: (1 + with_one_forced(&kids, &ids, &ANY, &CHOSEN).0).min(INF),
            in_open: (1 + sum(&[State::OutCovered, State::OutOpen])).min(INF),
            out_covered: with_one_forced(&kids, &ids, &SELF_COVERED, &[State::InCovered]).0,
            out_open: sum(&[State::OutCovered]),
        };
    }

    // Top-down reconstruction in reverse post-order (parents first).
    let mut state = vec![State::OutOpen; n];
    let (root_state, total) = costs[0].best(&SELF_COVERED);
    if total >= INF {
        return Err(SolveError::Internal("no total dominating set found".into()));
    }
    state[0] = root_state;
    let mut chosen = Vec::new();
    for &v in rooted.post_order.iter().rev() {
        ids.clear();
        ids.extend(rooted.children(t, v));
        let kids: Vec<Costs> = ids.iter().map(|&c| costs[c]).collect();
        let (free, forced): (&[State], Option<(&[State], usize)>) = match state[v] {
            State::InCovered => (
                &ANY,
                Some((&CHOSEN, with_one_forced(&kids, &ids, &ANY, &CHOSEN).1)),
            ),
            State::InOpen => (&[State::OutCovered, State::OutOpen], None),
            State::OutCovered => (
                &SELF_COVERED,
                Some((
                    &[State::InCovered],
                    with_one_forced(&kids, &ids, &SELF_COVERED, &[State::InCovered]).1,
                )),
            ),
            State::OutOpen => (&[State::OutCovered], None),
        };
        if matches!(state[v], State::InCovered | State::InOpen) {
            chosen.push(v);
        }
        for (c, &id) in kids.iter().zip(&ids) {
            state[id] = match forced {
                Some((options, who)) if who == id => c.best(options).0,
                _ => c.best(free).0,
            };
        }
    }
    PackingCertificate::certify(
        t,
        PackingKind::TotalDominating,
        Optimality::Minimum,
        chosen.into(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|v| (v - 1, v))).unwrap()
    }

    fn star(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|v| (0, v))).unwrap()
    }

    #[test]
    fn post_order_puts_children_first() {
        let t = Graph::from_edges(5, [(0, 3), (0, 1), (1, 4), (1, 2)]).unwrap();
        let r = Rooted::new(&t);
        assert_eq!(r.post_order, vec![2, 4, 1, 3, 0]);
        assert_eq!(r.parent[4], 1);
    }

    #[test]
    fn small_domination_values() {
        assert_eq!(tree_domination(&Graph::empty(1)).unwrap().value, 1);
        assert_eq!(tree_domination(&path(2)).unwrap().value, 1);
        assert_eq!(tree_domination(&path(4)).unwrap().value, 2);
        assert_eq!(tree_domination(&star(6)).unwrap().set.as_slice(), &[0]);
    }

    #[test]
    fn corona_of_p3_needs_every_support() {
        // base path 0-1-2, pendants 3,4,5
        let t = Graph::from_edges(6, [(0, 1), (1, 2), (0, 3), (1, 4), (2, 5)]).unwrap();
        assert_eq!(tree_domination(&t).unwrap().value, 3);
    }

    #[test]
    fn small_total_domination_values() {
        assert_eq!(tree_total_domination(&path(2)).unwrap().value, 2);
        assert_eq!(tree_total_domination(&path(4)).unwrap().value, 2);
        assert_eq!(tree_total_domination(&star(5)).unwrap().value, 2);
        assert_eq!(tree_total_domination(&path(5)).unwrap().value, 3);
    }

    #[test]
    fn rejects_non_trees() {
        let c4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(tree_domination(&c4), Err(SolveError::NotATree));
        assert_eq!(tree_total_domination(&c4), Err(SolveError::NotATree));
        assert_eq!(tree_domination(&Graph::empty(2)), Err(SolveError::NotATree));
        assert_eq!(
            tree_total_domination(&Graph::empty(1)),
            Err(SolveError::TooSmall)
        );
    }

    #[test]
    fn paths_match_closed_forms() {
        for n in 2..40 {
            let p = path(n);
            assert_eq!(tree_domination(&p).unwrap().value, n.div_ceil(3), "γ(P{n})");
            let expected = n / 2 + n.div_ceil(4) - n / 4;
            assert_eq!(
                tree_total_domination(&p).unwrap().value,
                expected,
                "γt(P{n})"
            );
        }
    }
}
