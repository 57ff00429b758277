//! Maximum bipartite matching by augmenting paths (Kuhn's algorithm).

/// `adj[l]` lists the right vertices adjacent to left vertex `l`, tried in
/// the given order. Returns `left -> right` for matched left vertices.
pub fn maximum_matching(adj: &[Vec<usize>], right_count: usize) -> Vec<Option<usize>> {
    let mut right_match: Vec<Option<usize>> = vec![None; right_count];
    let mut matched = vec![false; adj.len()];
    // greedy pass first, so uncontested choices follow the given order
    for (l, rs) in adj.iter().enumerate() {
        if let Some(&r) = rs.iter().find(|&&r| right_match[r].is_none()) {
            right_match[r] = Some(l);
            matched[l] = true;
        }
    }
    for l in 0..adj.len() {
        if !matched[l] {
            let mut visited = vec![false; right_count];
            augment(l, adj, &mut visited, &mut right_match);
        }
    }
    let mut left_match = vec![None; adj.len()];
    for (r, l) in right_match.iter().enumerate() {
        if let Some(l) = *l {
            left_match[l] = Some(r);
        }
    }
    left_match
}

fn augment(
    l: usize,
    adj: &[Vec<usize>],
    visited: &mut [bool],
    right_match: &mut [Option<usize>],
) -> bool {
    for &r in &adj[l] {
        if visited[r] {
            continue;
        }
        visited[r] = true;
        let free = match right_match[r] {
            None => true,
            Some(other) => augment(other, adj, visited, right_match),
        };
        if free {
            right_match[r] = Some(l);
            return true;
        }
    }
    false
}
