//! Test-side oracles, written independently of the library internals:
//! Floyd-Warshall distances and direct hash-map triple counting.

#![allow(dead_code)]

use std::collections::{HashMap, HashSet};

use wdrd::digraph::{Digraph, DistancePair, FiberKind};

const BIG: usize = usize::MAX / 4;

/// All-pairs shortest paths by Floyd-Warshall (the library uses BFS).
pub fn fw_distances(g: &Digraph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut dist = vec![vec![BIG; n]; n];
    for v in 0..n {
        dist[v][v] = 0;
        for &w in g.out_neighbors(v) {
            dist[v][w] = 1;
        }
    }
    for k in 0..n {
        for x in 0..n {
            for y in 0..n {
                let via = dist[x][k] + dist[k][y];
                if via < dist[x][y] {
                    dist[x][y] = via;
                }
            }
        }
    }
    dist
}

/// Two-way distance pairs for every ordered vertex pair, or None when
/// some vertex is unreachable.
pub fn fw_pairs(g: &Digraph) -> Option<Vec<Vec<DistancePair>>> {
    let n = g.n();
    let dist = fw_distances(g);
    if dist.iter().any(|row| row.iter().any(|&d| d >= BIG)) {
        return None;
    }
    Some(
        (0..n)
            .map(|x| (0..n).map(|y| DistancePair::new(dist[x][y], dist[y][x])).collect())
            .collect(),
    )
}

/// The sorted set of two-way classes.
pub fn fw_classes(g: &Digraph) -> Option<Vec<DistancePair>> {
    let pairs = fw_pairs(g)?;
    let mut classes: Vec<DistancePair> = pairs.iter().flatten().copied().collect();
    classes.sort_unstable();
    classes.dedup();
    Some(classes)
}

/// Number of z with pairs(x,z) = i and pairs(z,y) = j.
pub fn midpoint_count(
    pairs: &[Vec<DistancePair>],
    x: usize,
    y: usize,
    i: DistancePair,
    j: DistancePair,
) -> usize {
    (0..pairs.len()).filter(|&z| pairs[x][z] == i && pairs[z][y] == j).count()
}

/// Exhaustive weak-distance-regularity oracle: for every class triple,
/// the midpoint count must not depend on the chosen pair.
pub fn is_wdrd_oracle(g: &Digraph) -> Option<bool> {
    let pairs = fw_pairs(g)?;
    let n = g.n();
    let classes = fw_classes(g)?;
    let mut seen: HashMap<(DistancePair, DistancePair, DistancePair), usize> = HashMap::new();
    for x in 0..n {
        for y in 0..n {
            let h = pairs[x][y];
            for &i in &classes {
                for &j in &classes {
                    let c = midpoint_count(&pairs, x, y, i, j);
                    match seen.insert((h, i, j), c) {
                        Some(prev) if prev != c => return Some(false),
                        _ => {}
                    }
                }
            }
        }
    }
    Some(true)
}

/// Circulant digraph on Z_n with the given forward steps.
pub fn circulant(n: usize, steps: &[usize]) -> Digraph {
    let mut arcs = Vec::new();
    for v in 0..n {
        for &s in steps {
            arcs.push((v, (v + s) % n));
        }
    }
    Digraph::from_arcs(n, &arcs).unwrap()
}

/// The shared corpus: directed cycles C_3..C_12 and lexicographic
/// products over bases C_3..C_8 with fibers of 2 or 3 vertices.
pub fn corpus() -> Vec<(String, Digraph)> {
    let mut out = Vec::new();
    for n in 3..=12 {
        out.push((format!("C_{n}"), Digraph::directed_cycle(n).unwrap()));
    }
    for n in 3..=8 {
        for m in [2, 3] {
            for (tag, fiber) in [("complete", FiberKind::Complete), ("empty", FiberKind::Empty)] {
                let g = Digraph::directed_cycle(n).unwrap().lex_product(m, fiber).unwrap();
                out.push((format!("lex(C_{n},{m},{tag})"), g));
            }
        }
    }
    out
}

/// Deterministic permutation of 1..=d from a seed (splitmix-style).
pub fn shuffled_ordering(d: usize, seed: u64) -> Vec<usize> {
    let mut state = seed;
    let mut next = || {
        state = state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    };
    let mut ordering: Vec<usize> = (1..=d).collect();
    for i in (1..d).rev() {
        let j = (next() % (i as u64 + 1)) as usize;
        ordering.swap(i, j);
    }
    ordering
}

/// Sanity helper: true iff `ordering` is a permutation of 1..=d.
pub fn is_permutation(d: usize, ordering: &[usize]) -> bool {
    let set: HashSet<usize> = ordering.iter().copied().collect();
    ordering.len() == d && set.len() == d && set.iter().all(|&c| c >= 1 && c <= d)
}
