//! Exhaustive enumeration of small complexes and graphs, with canonical
//! forms for deduplication up to vertex permutation.
//!
//! Complexes on `[n]` are exactly the antichains of nonempty subsets whose
//! union covers the vertex set, so enumeration is a DFS over candidate
//! facets ordered by decreasing cardinality. Canonical forms refine vertex
//! invariants (facet-size profiles and neighbor profiles) and minimize the
//! sorted facet list over the invariant-respecting permutations only.

use std::collections::HashSet;

use crate::complex::{Face, SimplicialComplex};

/// Calls `f` on every complex on exactly `n` vertices whose facets all have
/// cardinality at least `min_card` (every vertex covered, facets an
/// antichain). `min_card = 1` enumerates all complexes; `min_card = 2`
/// skips complexes with isolated vertices.
pub fn for_each_complex<F: FnMut(&SimplicialComplex)>(n: usize, min_card: usize, f: &mut F) {
    assert!((1..=20).contains(&n), "exhaustive enumeration is for small n");
    let full = Face::full(n).mask();
    let mut candidates: Vec<u64> = (1..=full)
        .filter(|m| m.count_ones() as usize >= min_card)
        .collect();
    candidates.sort_by_key(|m| (std::cmp::Reverse(m.count_ones()), *m));
    let mut suffix_union = vec![0u64; candidates.len() + 1];
    for i in (0..candidates.len()).rev() {
        suffix_union[i] = suffix_union[i + 1] | candidates[i];
    }
    let mut chosen: Vec<Face> = Vec::new();
    recurse(&candidates, &suffix_union, 0, full, 0, &mut chosen, f);
}

fn recurse<F: FnMut(&SimplicialComplex)>(
    candidates: &[u64],
    suffix_union: &[u64],
    idx: usize,
    full: u64,
    union: u64,
    chosen: &mut Vec<Face>,
    f: &mut F,
) {
    if union | suffix_union[idx] != full {
        return;
    }
    if idx == candidates.len() {
        if union == full && !chosen.is_empty() {
            let n = full.count_ones() as usize;
            let complex = SimplicialComplex::from_antichain_unchecked(n, chosen.clone());
            f(&complex);
        }
        return;
    }
    let candidate = Face::from_mask(candidates[idx]);
    // candidates come in decreasing cardinality, so only containment of the
    // new facet in an already-chosen one can break the antichain
    if !chosen.iter().any(|g| candidate.is_subset_of(*g)) {
        chosen.push(candidate);
        recurse(
            candidates,
            suffix_union,
            idx + 1,
            full,
            union | candidate.mask(),
            chosen,
            f,
        );
        chosen.pop();
    }
    recurse(candidates, suffix_union, idx + 1, full, union, chosen, f);
}

/// Calls `f` on every pure complex on exactly `n` vertices: for each facet
/// cardinality k, every covering family of k-subsets (any such family is an
/// antichain).
pub fn for_each_pure_complex<F: FnMut(&SimplicialComplex)>(n: usize, f: &mut F) {
    assert!((1..=6).contains(&n), "pure enumeration is for small n");
    let full = Face::full(n).mask();
    for card in 1..=n {
        let k_subsets: Vec<u64> = (1..=full)
            .filter(|m| m.count_ones() as usize == card)
            .collect();
        // families are indexed by bitmasks over the k-subsets
        for family in 1u64..(1 << k_subsets.len()) {
            let mut union = 0u64;
            let mut facets = Vec::with_capacity(family.count_ones() as usize);
            let mut bits = family;
            while bits != 0 {
                let j = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                union |= k_subsets[j];
                facets.push(Face::from_mask(k_subsets[j]));
            }
            if union == full {
                let complex = SimplicialComplex::from_antichain_unchecked(n, facets);
                f(&complex);
            }
        }
    }
}

/// Applies a vertex permutation: vertex `v` becomes `perm[v]`.
pub fn relabel_complex(complex: &SimplicialComplex, perm: &[usize]) -> SimplicialComplex {
    assert_eq!(perm.len(), complex.n_vertices());
    let mut facets: Vec<Face> = complex
        .facets()
        .iter()
        .map(|f| Face::from_vertices(f.vertices().map(|v| perm[v])))
        .collect();
    facets.sort_unstable();
    SimplicialComplex::from_antichain_unchecked(complex.n_vertices(), facets)
}

/// The canonical form of a complex up to vertex permutation: the
/// lexicographically least sorted facet-mask list over all permutations
/// consistent with the refined vertex invariants.
pub fn canonical_key(complex: &SimplicialComplex) -> Vec<u64> {
    let n = complex.n_vertices();
    let facets = complex.facets();

    // invariant round 0: sorted facet-cardinality profile per vertex
    let mut profile: Vec<Vec<usize>> = vec![Vec::new(); n];
    for facet in facets {
        for v in facet.vertices() {
            profile[v].push(facet.cardinality());
        }
    }
    for p in &mut profile {
        p.sort_unstable();
    }
    let id0 = rank_values(&profile);

    // refinement round: own id plus the multiset of ids seen across facets
    let mut refined: Vec<(usize, Vec<usize>)> = (0..n).map(|v| (id0[v], Vec::new())).collect();
    for facet in facets {
        for v in facet.vertices() {
            for u in facet.vertices() {
                if u != v {
                    refined[v].1.push(id0[u]);
                }
            }
        }
    }
    for r in &mut refined {
        r.1.sort_unstable();
    }
    let id1 = rank_values(&refined);

    // vertex classes in invariant order; permutations shuffle within classes
    let n_classes = id1.iter().max().map_or(0, |m| m + 1);
    let mut classes: Vec<Vec<usize>> = vec![Vec::new(); n_classes];
    for (v, &c) in id1.iter().enumerate() {
        classes[c].push(v);
    }
    let mut position_base = vec![0usize; n_classes];
    let mut base = 0;
    for (c, members) in classes.iter().enumerate() {
        position_base[c] = base;
        base += members.len();
    }

    let mut assign = vec![0usize; n];
    let mut best: Option<Vec<u64>> = None;
    permute_classes(&classes, &position_base, 0, &mut assign, &mut |assign| {
        let mut key: Vec<u64> = facets
            .iter()
            .map(|f| f.vertices().fold(0u64, |acc, v| acc | 1 << assign[v]))
            .collect();
        key.sort_unstable();
        match &best {
            Some(b) if *b <= key => {}
            _ => best = Some(key),
        }
    });
    best.expect("at least the identity permutation")
}

/// Whether the complex already equals its canonical form; picks one
/// representative per isomorphism class during exhaustive scans.
pub fn is_canonical(complex: &SimplicialComplex) -> bool {
    let own: Vec<u64> = complex.facets().iter().map(|f| f.mask()).collect();
    canonical_key(complex) == own
}

/// Dense ranking of arbitrary orderable values: equal values share an id,
/// ids follow the sort order.
fn rank_values<T: Ord>(values: &[T]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| values[a].cmp(&values[b]));
    let mut ids = vec![0usize; values.len()];
    let mut current = 0;
    for w in order.windows(2) {
        if values[w[1]] != values[w[0]] {
            current += 1;
        }
        ids[w[1]] = current;
    }
    if let Some(&first) = order.first() {
        ids[first] = 0;
    }
    ids
}

fn permute_classes<F: FnMut(&[usize])>(
    classes: &[Vec<usize>],
    position_base: &[usize],
    class_idx: usize,
    assign: &mut Vec<usize>,
    f: &mut F,
) {
    if class_idx == classes.len() {
        f(assign);
        return;
    }
    let mut members = classes[class_idx].clone();
    let base = position_base[class_idx];
    permute_within(&mut members, base, 0, assign, &mut |assign: &mut Vec<
        usize,
    >| {
        permute_classes(classes, position_base, class_idx + 1, assign, f)
    });
}

fn permute_within<F: FnMut(&mut Vec<usize>)>(
    members: &mut Vec<usize>,
    base: usize,
    k: usize,
    assign: &mut Vec<usize>,
    f: &mut F,
) {
    if k == members.len() {
        f(assign);
        return;
    }
    for i in k..members.len() {
        members.swap(k, i);
        assign[members[k]] = base + k;
        permute_within(members, base, k + 1, assign, f);
        members.swap(k, i);
    }
}

/// All connected graphs up to isomorphism with at most `max_n` vertices,
/// as one-dimensional complexes (the single-vertex graph is the point).
///
/// Built by vertex augmentation: every connected graph arises from a
/// connected graph with one fewer vertex by attaching a new vertex along a
/// nonempty neighborhood; canonical forms deduplicate each level.
pub fn connected_graphs_up_to_iso(max_n: usize) -> Vec<SimplicialComplex> {
    assert!((1..=8).contains(&max_n));
    let mut all = Vec::new();
    let point = SimplicialComplex::from_facets(1, &[vec![1]]).unwrap();
    all.push(point);
    // adjacency rows of the previous level's representatives
    let mut level: Vec<Vec<u64>> = vec![vec![0]];
    for n in 2..=max_n {
        let mut seen: HashSet<Vec<u64>> = HashSet::new();
        let mut next: Vec<Vec<u64>> = Vec::new();
        for adj in &level {
            for neighborhood in 1u64..(1 << (n - 1)) {
                let mut grown: Vec<u64> = adj.clone();
                grown.push(neighborhood);
                for v in 0..n - 1 {
                    if neighborhood >> v & 1 == 1 {
                        grown[v] |= 1 << (n - 1);
                    }
                }
                let complex = graph_complex(n, &grown);
                if seen.insert(canonical_key(&complex)) {
                    next.push(grown);
                    all.push(complex);
                }
            }
        }
        level = next;
    }
    all
}

fn graph_complex(n: usize, adj: &[u64]) -> SimplicialComplex {
    let mut edges = Vec::new();
    for v in 0..n {
        let mut higher = adj[v] >> (v + 1);
        let mut u = v + 1;
        while higher != 0 {
            if higher & 1 == 1 {
                edges.push(Face::from_vertices([v, u]));
            }
            higher >>= 1;
            u += 1;
        }
    }
    edges.sort_unstable();
    SimplicialComplex::from_antichain_unchecked(n, edges)
}
