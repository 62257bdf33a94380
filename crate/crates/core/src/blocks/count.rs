use std::collections::HashMap;

use super::{ColoredGraph, Level};
use crate::{Error, Result};

fn check_tails(graph: &ColoredGraph, level: Level) -> Result<()> {
    // Odd colors at odd levels are let through: they can never close up
    // admissibly, so the count is 0.
    for &(_, c) in graph.tails() {
        if c > level.max_color() {
            return Err(Error::InvalidColor {
                color: c,
                p: level.p(),
            });
        }
    }
    Ok(())
}

/// Colors meeting at each vertex, given a color per edge.
fn vertex_triples(graph: &ColoredGraph, edge_colors: &[u32]) -> Vec<Vec<u32>> {
    let mut at = vec![Vec::with_capacity(3); graph.vertex_count()];
    for (&(u, v), &c) in graph.edges().iter().zip(edge_colors) {
        at[u].push(c);
        at[v].push(c);
    }
    for &(v, c) in graph.tails() {
        at[v].push(c);
    }
    at
}

/// Every admissible coloring of the internal edges, in lexicographic order
/// of the edge-color vectors.
pub fn admissible_colorings(graph: &ColoredGraph, level: Level) -> Result<Vec<Vec<u32>>> {
    check_tails(graph, level)?;
    let colors = level.colors();
    let e = graph.edges().len();
    let mut out = Vec::new();
    let mut idx = vec![0usize; e];
    loop {
        let assignment: Vec<u32> = idx.iter().map(|&i| colors[i]).collect();
        let ok = vertex_triples(graph, &assignment)
            .iter()
            .all(|t| level.admits(t[0], t[1], t[2]));
        if ok {
            out.push(assignment);
        }
        if !advance(&mut idx, colors.len()) {
            return Ok(out);
        }
    }
}

/// Odometer step over `radix^len` indices; false once it wraps around.
fn advance(idx: &mut [usize], radix: usize) -> bool {
    for slot in idx.iter_mut().rev() {
        *slot += 1;
        if *slot < radix {
            return true;
        }
        *slot = 0;
    }
    false
}

/// Block dimension by enumerating all `|colors|^edges` assignments.
pub fn block_dimension_exhaustive(graph: &ColoredGraph, level: Level) -> Result<u64> {
    Ok(admissible_colorings(graph, level)?.len() as u64)
}

/// Block dimension by a frontier dynamic program.
///
/// Vertices are processed in breadth-first order. The state is the color
/// vector on the edges that have exactly one processed endpoint; each vertex
/// closes its incoming edges, chooses colors for its loops and for its edges
/// to unprocessed vertices, and keeps the state only if its triple is
/// admissible.
pub fn block_dimension(graph: &ColoredGraph, level: Level) -> Result<u64> {
    check_tails(graph, level)?;
    let n = graph.vertex_count();
    let colors = level.colors();

    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (id, &(u, v)) in graph.edges().iter().enumerate() {
        incident[u].push(id);
        if u != v {
            incident[v].push(id);
        }
    }
    let mut tails_at: Vec<Vec<u32>> = vec![Vec::new(); n];
    for &(v, c) in graph.tails() {
        tails_at[v].push(c);
    }

    let order = bfs_order(graph, &incident);
    let mut processed = vec![false; n];
    let mut open: Vec<usize> = Vec::new();
    let mut states: HashMap<Vec<u32>, u64> = HashMap::from([(Vec::new(), 1)]);

    for v in order {
        let mut closing = Vec::new();
        let mut loops = Vec::new();
        let mut opening = Vec::new();
        for &id in &incident[v] {
            let (a, b) = graph.edges()[id];
            if a == b {
                loops.push(id);
            } else if processed[if a == v { b } else { a }] {
                closing.push(id);
            } else {
                opening.push(id);
            }
        }
        let closing_pos: Vec<usize> = closing
            .iter()
            .map(|id| {
                open.iter()
                    .position(|o| o == id)
                    .expect("closing edge must be open")
            })
            .collect();
        let next_open: Vec<usize> = open
            .iter()
            .copied()
            .filter(|id| !closing.contains(id))
            .chain(opening.iter().copied())
            .collect();
        let kept_pos: Vec<usize> = (0..open.len())
            .filter(|i| !closing_pos.contains(i))
            .collect();

        let free = loops.len() + opening.len();
        let mut next: HashMap<Vec<u32>, u64> = HashMap::new();
        for (state, count) in &states {
            let mut idx = vec![0usize; free];
            loop {
                let mut triple: Vec<u32> = closing_pos.iter().map(|&i| state[i]).collect();
                for k in 0..loops.len() {
                    triple.push(colors[idx[k]]);
                    triple.push(colors[idx[k]]);
                }
                for k in 0..opening.len() {
                    triple.push(colors[idx[loops.len() + k]]);
                }
                triple.extend(&tails_at[v]);
                debug_assert_eq!(triple.len(), 3);
                if level.admits(triple[0], triple[1], triple[2]) {
                    let key: Vec<u32> = kept_pos
                        .iter()
                        .map(|&i| state[i])
                        .chain((0..opening.len()).map(|k| colors[idx[loops.len() + k]]))
                        .collect();
                    *next.entry(key).or_insert(0) += count;
                }
                if !advance(&mut idx, colors.len()) {
                    break;
                }
            }
        }
        processed[v] = true;
        open = next_open;
        states = next;
    }
    debug_assert!(open.is_empty());
    Ok(states.values().sum())
}

fn bfs_order(graph: &ColoredGraph, incident: &[Vec<usize>]) -> Vec<usize> {
    let n = graph.vertex_count();
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &id in &incident[v] {
                let (a, b) = graph.edges()[id];
                let w = if a == v { b } else { a };
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    order
}

/// Checks `dim(graph) = Σ_j dim(graph cut along cut_edges, new tails colored j)`
/// where `j` runs over all colorings of the cut edges.
pub fn cut_identity_check(graph: &ColoredGraph, cut_edges: &[usize], level: Level) -> Result<bool> {
    let whole = block_dimension(graph, level)?;
    let colors = level.colors();
    let mut idx = vec![0usize; cut_edges.len()];
    let mut total = 0u64;
    loop {
        let j: Vec<u32> = idx.iter().map(|&i| colors[i]).collect();
        total += block_dimension(&graph.cut(cut_edges, &j)?, level)?;
        if !advance(&mut idx, colors.len()) {
            return Ok(total == whole);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn lv(p: u32) -> Level {
        Level::new(p).unwrap()
    }

    #[test]
    fn tadpole_dimensions() {
        let d = |tail, p| block_dimension(&ColoredGraph::tadpole(tail), lv(p)).unwrap();
        assert_eq!(d(4, 9), 2);
        assert_eq!(d(2, 16), 5);
        assert_eq!(d(0, 5), 2);
    }

    #[test]
    fn odd_tail_at_odd_level_is_zero() {
        let g = ColoredGraph::tadpole(3);
        assert_eq!(block_dimension(&g, lv(9)), Ok(0));
        assert_eq!(block_dimension_exhaustive(&g, lv(9)), Ok(0));
        assert!(matches!(
            block_dimension(&ColoredGraph::tadpole(8), lv(9)),
            Err(Error::InvalidColor { .. })
        ));
    }

    #[test]
    fn closed_genus_two_small_levels() {
        // p = 5 has colors {0, 2}. Theta: (0,0,0), three with two 2s, (2,2,2).
        assert_eq!(block_dimension(&ColoredGraph::theta(), lv(5)), Ok(5));
        assert_eq!(
            block_dimension_exhaustive(&ColoredGraph::theta(), lv(5)),
            Ok(5)
        );
        // Dumbbell: bar 0 with free loops (4), or bar 2 with both loops 2.
        // Same genus, same dimension.
        assert_eq!(block_dimension(&ColoredGraph::dumbbell(), lv(5)), Ok(5));
    }

    #[test]
    fn disconnected_graphs_multiply() {
        let g = ColoredGraph::new(3, vec![(0, 1), (0, 1), (0, 1), (2, 2)], vec![(2, 0)]).unwrap();
        let theta = block_dimension(&ColoredGraph::theta(), lv(8)).unwrap();
        let tad = block_dimension(&ColoredGraph::tadpole(0), lv(8)).unwrap();
        assert_eq!(block_dimension(&g, lv(8)), Ok(theta * tad));
    }

    #[test]
    fn cut_identity_examples() {
        assert_eq!(
            cut_identity_check(&ColoredGraph::theta(), &[0], lv(5)),
            Ok(true)
        );
        assert_eq!(
            cut_identity_check(&ColoredGraph::tadpole(0), &[0], lv(7)),
            Ok(true)
        );
        assert_eq!(
            cut_identity_check(&ColoredGraph::long_dumbbell(), &[1], lv(8)),
            Ok(true)
        );
        assert_eq!(
            cut_identity_check(&ColoredGraph::long_dumbbell(), &[2, 3], lv(8)),
            Ok(true)
        );
    }

    fn corpus() -> Vec<ColoredGraph> {
        let mut out = vec![
            ColoredGraph::theta(),
            ColoredGraph::dumbbell(),
            ColoredGraph::long_dumbbell(),
            // K4
            ColoredGraph::new(
                4,
                vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
                vec![],
            )
            .unwrap(),
            // three-holed sphere
            ColoredGraph::new(1, vec![], vec![(0, 2), (0, 2), (0, 2)]).unwrap(),
        ];
        for t in 0..4 {
            out.push(ColoredGraph::tadpole(t));
            out.push(ColoredGraph::theta_with_tail(t));
        }
        out
    }

    proptest! {
        #[test]
        fn dp_agrees_with_enumeration(gi in 0usize..13, p in 5u32..=20) {
            let g = &corpus()[gi];
            let level = lv(p);
            match (block_dimension(g, level), block_dimension_exhaustive(g, level)) {
                (Ok(a), Ok(b)) => prop_assert_eq!(a, b),
                (Err(a), Err(b)) => prop_assert_eq!(a, b),
                (a, b) => prop_assert!(false, "routes disagree: {:?} vs {:?}", a, b),
            }
        }
    }
}
