//! Reference implementations used only by tests. None of this shares code
//! with the library paths it checks.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use claimproof_core::graphs::{Multigraph, VertexId};
use claimproof_core::{AceRule, DeckSpec, HandCategory};
use rand::rngs::StdRng;
use rand::Rng;

/// Literal reading of the category definitions over a 5-card multiset.
pub fn naive_category(cards: &[(u32, u32); 5], spec: &DeckSpec) -> HandCategory {
    let v = spec.values();
    let mut counts: BTreeMap<u32, usize> = BTreeMap::new();
    for &(value, _) in cards {
        *counts.entry(value).or_default() += 1;
    }
    let mut pattern: Vec<usize> = counts.values().copied().collect();
    pattern.sort_unstable_by(|a, b| b.cmp(a));
    let flush = cards.iter().all(|c| c.1 == cards[0].1);

    let mut runs: BTreeSet<BTreeSet<u32>> = BTreeSet::new();
    if v >= 5 {
        for lo in 1..=v - 4 {
            runs.insert((lo..lo + 5).collect());
        }
        if spec.ace_rule() == AceRule::Both {
            runs.insert([1, 2, 3, 4, v].into_iter().collect());
        }
    }
    let value_set: BTreeSet<u32> = counts.keys().copied().collect();
    let straight = value_set.len() == 5 && runs.contains(&value_set);
    let top: BTreeSet<u32> = (v.saturating_sub(4)..=v).collect();

    match () {
        _ if flush && straight && value_set == top => HandCategory::RoyalFlush,
        _ if flush && straight => HandCategory::StraightFlush,
        _ if pattern == [4, 1] || pattern == [5] => HandCategory::FourOfAKind,
        _ if pattern == [3, 2] => HandCategory::FullHouse,
        _ if flush => HandCategory::Flush,
        _ if straight => HandCategory::Straight,
        _ if pattern == [3, 1, 1] => HandCategory::ThreeOfAKind,
        _ if pattern == [2, 2, 1] => HandCategory::TwoPair,
        _ if pattern == [2, 1, 1, 1] => HandCategory::Pair,
        _ => HandCategory::HighCard,
    }
}

/// Strongest category over every way of replacing the wilds with natural cards.
pub fn brute_force_wilds(naturals: &[(u32, u32)], wilds: usize, spec: &DeckSpec) -> HandCategory {
    let all: Vec<(u32, u32)> =
        (1..=spec.values()).flat_map(|v| (1..=spec.suits()).map(move |s| (v, s))).collect();
    let mut best = HandCategory::HighCard;
    let mut hand = naturals.to_vec();
    fn recurse(hand: &mut Vec<(u32, u32)>, left: usize, all: &[(u32, u32)], spec: &DeckSpec, best: &mut HandCategory) {
        if left == 0 {
            let cards: [(u32, u32); 5] = hand.as_slice().try_into().unwrap();
            *best = (*best).min(naive_category(&cards, spec));
            return;
        }
        for &card in all {
            hand.push(card);
            recurse(hand, left - 1, all, spec, best);
            hand.pop();
        }
    }
    recurse(&mut hand, wilds, &all, spec, &mut best);
    best
}

/// Exhaustive search: does some walk use every edge exactly once?
pub fn backtracking_has_trail(g: &Multigraph) -> bool {
    let m = g.edge_count();
    if m == 0 {
        return false;
    }
    let edges: Vec<(usize, usize)> = g.edges().map(|(_, e)| (e.a.0, e.b.0)).collect();
    let mut used = vec![false; m];
    fn extend(at: usize, used: &mut [bool], edges: &[(usize, usize)], left: usize) -> bool {
        if left == 0 {
            return true;
        }
        for i in 0..edges.len() {
            if used[i] {
                continue;
            }
            let (a, b) = edges[i];
            let next = if a == at {
                b
            } else if b == at {
                a
            } else {
                continue;
            };
            used[i] = true;
            if extend(next, used, edges, left - 1) {
                return true;
            }
            used[i] = false;
        }
        false
    }
    (0..g.vertex_count()).any(|start| extend(start, &mut used, &edges, m))
}

/// Connectivity of the edge set and the odd-vertex count, computed by BFS.
pub fn edge_connected_with_odd(g: &Multigraph) -> (bool, usize) {
    let n = g.vertex_count();
    let mut adj = vec![Vec::new(); n];
    let mut degree = vec![0usize; n];
    for (_, e) in g.edges() {
        adj[e.a.0].push(e.b.0);
        adj[e.b.0].push(e.a.0);
        degree[e.a.0] += 1;
        degree[e.b.0] += 1;
    }
    let odd = degree.iter().filter(|d| *d % 2 == 1).count();
    let Some(start) = (0..n).find(|&v| degree[v] > 0) else {
        return (false, odd);
    };
    let mut seen = vec![false; n];
    let mut queue = vec![start];
    seen[start] = true;
    while let Some(v) = queue.pop() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                queue.push(w);
            }
        }
    }
    ((0..n).all(|v| degree[v] == 0 || seen[v]), odd)
}

/// Random multigraph with at most `max_vertices` vertices and `max_edges` edges.
///
/// Mixes three kinds so every status shows up often: uniform random edges,
/// random edges with odd vertices then paired off, and random walks (which
/// always have a trail).
pub fn random_multigraph(rng: &mut StdRng, max_vertices: usize, max_edges: usize) -> Multigraph {
    let n = rng.gen_range(1..=max_vertices);
    let mut g = Multigraph::new();
    for i in 0..n {
        g.add_vertex(&format!("v{i}")).unwrap();
    }
    let pick = |rng: &mut StdRng| VertexId(rng.gen_range(0..n));
    match rng.gen_range(0..3) {
        0 => {
            let m = rng.gen_range(1..=max_edges);
            for _ in 0..m {
                let (a, b) = (pick(rng), pick(rng));
                g.add_edge(a, b, None);
            }
        }
        1 => {
            let m = rng.gen_range(1..=max_edges / 2);
            for _ in 0..m {
                let (a, b) = (pick(rng), pick(rng));
                g.add_edge(a, b, None);
            }
            let mut odd = g.odd_vertices();
            // leave zero, one or two pairs unmatched
            let keep = 2 * rng.gen_range(0..=2usize);
            while odd.len() > keep && g.edge_count() < max_edges {
                let a = odd.pop().unwrap();
                let b = odd.pop().unwrap();
                g.add_edge(a, b, None);
            }
        }
        _ => {
            let m = rng.gen_range(1..=max_edges);
            let mut at = pick(rng);
            for _ in 0..m {
                let next = pick(rng);
                g.add_edge(at, next, None);
                at = next;
            }
        }
    }
    g
}
