use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::text::{number, pieces};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    C,
    D,
}

/// Intersection data of two multicurves `c = c_1 ∪ … ∪ c_m` and
/// `d = d_1 ∪ … ∪ d_k`, one vertex per component.
///
/// Vertices keep the order they were given in; `side` records which
/// multicurve each belongs to. `inter` is the symmetric matrix of
/// geometric intersection numbers and `mult` holds the positive
/// multiplicities `d_i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConfigurationGraph {
    side: Vec<Side>,
    inter: Vec<Vec<u32>>,
    mult: Vec<u32>,
}

impl ConfigurationGraph {
    /// Checks shapes, symmetry, positivity of multiplicities and that no two
    /// curves on the same side intersect. Connectivity is checked by the
    /// operations that need it.
    pub fn new(side: Vec<Side>, inter: Vec<Vec<u32>>, mult: Vec<u32>) -> Result<Self> {
        let n = side.len();
        if n == 0 {
            return Err(Error::InvalidGraph("no curves".into()));
        }
        if inter.len() != n || inter.iter().any(|row| row.len() != n) {
            return Err(Error::InvalidGraph(format!(
                "intersection matrix must be {n}×{n}"
            )));
        }
        if mult.len() != n {
            return Err(Error::InvalidGraph(format!(
                "expected {n} multiplicities, got {}",
                mult.len()
            )));
        }
        if mult.contains(&0) {
            return Err(Error::InvalidGraph(
                "multiplicities must be positive".into(),
            ));
        }
        for i in 0..n {
            for j in 0..n {
                if inter[i][j] != inter[j][i] {
                    return Err(Error::InvalidGraph(format!("i({i},{j}) != i({j},{i})")));
                }
                if side[i] == side[j] && inter[i][j] != 0 {
                    return Err(Error::NotBipartite);
                }
            }
        }
        Ok(ConfigurationGraph { side, inter, mult })
    }

    /// Curves `c_1..c_m` followed by `d_1..d_k`; `pairs` lists
    /// `(i, j, count)` with `i < m` and `j < k` (zero-based).
    pub fn bipartite(
        m: usize,
        k: usize,
        pairs: &[(usize, usize, u32)],
        mult: Vec<u32>,
    ) -> Result<Self> {
        let n = m + k;
        let mut inter = vec![vec![0; n]; n];
        for &(i, j, count) in pairs {
            if i >= m || j >= k {
                return Err(Error::InvalidGraph(format!(
                    "pair ({i},{j}) outside {m}×{k}"
                )));
            }
            inter[i][m + j] += count;
            inter[m + j][i] += count;
        }
        let side = (0..n)
            .map(|v| if v < m { Side::C } else { Side::D })
            .collect();
        Self::new(side, inter, mult)
    }

    /// Builds a graph from an undirected edge list with unit multiplicities,
    /// splitting the vertices into the two multicurves by a 2-coloring that
    /// puts vertex 0 in `c`.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut inter = vec![vec![0u32; n]; n];
        for &(u, v) in edges {
            if u >= n || v >= n || u == v {
                return Err(Error::InvalidGraph(format!("bad edge {u}-{v}")));
            }
            inter[u][v] += 1;
            inter[v][u] += 1;
        }
        let mut side: Vec<Option<Side>> = vec![None; n];
        for root in 0..n {
            if side[root].is_some() {
                continue;
            }
            side[root] = Some(Side::C);
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                let other = if side[u] == Some(Side::C) {
                    Side::D
                } else {
                    Side::C
                };
                for w in (0..n).filter(|&w| inter[u][w] > 0) {
                    match side[w] {
                        None => {
                            side[w] = Some(other);
                            queue.push_back(w);
                        }
                        Some(s) if s != other => return Err(Error::NotBipartite),
                        _ => {}
                    }
                }
            }
        }
        Self::new(
            side.into_iter().map(Option::unwrap).collect(),
            inter,
            vec![1; n],
        )
    }

    /// Path `A_n`.
    pub fn a(n: usize) -> Result<Self> {
        Self::from_edges(n, &(1..n).map(|i| (i - 1, i)).collect::<Vec<_>>())
    }

    /// `D_n`, `n ≥ 4`: a path of `n - 1` vertices with a leaf on the second.
    pub fn d(n: usize) -> Result<Self> {
        if n < 4 {
            return Err(Error::InvalidGraph(format!("D_{n} needs n ≥ 4")));
        }
        let mut edges: Vec<_> = (1..n - 1).map(|i| (i - 1, i)).collect();
        edges.push((1, n - 1));
        Self::from_edges(n, &edges)
    }

    /// `E_6`, `E_7`, `E_8`.
    pub fn e(n: usize) -> Result<Self> {
        if !(6..=8).contains(&n) {
            return Err(Error::InvalidGraph(format!("E_{n} needs n in 6..=8")));
        }
        Self::spider(&[1, 2, n - 4])
    }

    /// Cycle on `n` vertices; `n = 2` is a double edge.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidGraph(
                "a cycle needs at least 2 vertices".into(),
            ));
        }
        Self::from_edges(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>())
    }

    /// Star with `leaves` leaves.
    pub fn star(leaves: usize) -> Result<Self> {
        Self::spider(&vec![1; leaves])
    }

    /// Affine `D̃_n` on `n + 1` vertices, `n ≥ 4`.
    pub fn affine_d(n: usize) -> Result<Self> {
        if n < 4 {
            return Err(Error::InvalidGraph(format!("affine D_{n} needs n ≥ 4")));
        }
        let mut edges: Vec<_> = (1..n - 1).map(|i| (i - 1, i)).collect();
        edges.push((1, n - 1));
        edges.push((n - 3, n));
        Self::from_edges(n + 1, &edges)
    }

    /// Affine `Ẽ_6`, `Ẽ_7`, `Ẽ_8`.
    pub fn affine_e(n: usize) -> Result<Self> {
        match n {
            6 => Self::spider(&[2, 2, 2]),
            7 => Self::spider(&[1, 3, 3]),
            8 => Self::spider(&[1, 2, 5]),
            _ => Err(Error::InvalidGraph(format!(
                "affine E_{n} needs n in 6..=8"
            ))),
        }
    }

    /// A center (vertex 0) with arms of the given lengths.
    pub fn spider(arms: &[usize]) -> Result<Self> {
        let mut edges = Vec::new();
        let mut next = 1;
        for &len in arms {
            let mut prev = 0;
            for _ in 0..len {
                edges.push((prev, next));
                prev = next;
                next += 1;
            }
        }
        Self::from_edges(next, &edges)
    }

    /// Named family: `A:n`, `D:n`, `E:n`, `cycle:n`, `star:n`,
    /// `affine-D:n`, `affine-E:n`.
    pub fn family(input: &str) -> Result<Self> {
        let input = input.trim();
        let Some((name, arg)) = input.split_once(':') else {
            return Err(Error::parse(input, 0, "expected family:n"));
        };
        let n: usize = number(arg.trim(), name.len() + 1)?;
        match name.trim() {
            "A" => Self::a(n),
            "D" => Self::d(n),
            "E" => Self::e(n),
            "cycle" => Self::cycle(n),
            "star" => Self::star(n),
            "affine-D" => Self::affine_d(n),
            "affine-E" => Self::affine_e(n),
            other => Err(Error::parse(other, 0, "unknown family")),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.side.len()
    }

    pub fn sides(&self) -> &[Side] {
        &self.side
    }

    pub fn intersections(&self) -> &[Vec<u32>] {
        &self.inter
    }

    pub fn multiplicities(&self) -> &[u32] {
        &self.mult
    }

    pub fn has_unit_multiplicities(&self) -> bool {
        self.mult.iter().all(|&d| d == 1)
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut stack = vec![0];
        while let Some(u) = stack.pop() {
            for w in 0..n {
                if self.inter[u][w] > 0 && !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    pub(crate) fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::DisconnectedGraph)
        }
    }

    /// Same graph with vertices permuted: new vertex `i` is old `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        let n = self.vertex_count();
        Self::new(
            perm.iter().map(|&i| self.side[i]).collect(),
            (0..n)
                .map(|i| (0..n).map(|j| self.inter[perm[i]][perm[j]]).collect())
                .collect(),
            perm.iter().map(|&i| self.mult[i]).collect(),
        )
    }

    fn side_indices(&self, s: Side) -> Vec<usize> {
        (0..self.vertex_count())
            .filter(|&v| self.side[v] == s)
            .collect()
    }
}

/// `c=m; d=k; inter=(i,j,count),...; mult=d_1,...` with 1-based `i, j`.
impl fmt::Display for ConfigurationGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cs = self.side_indices(Side::C);
        let ds = self.side_indices(Side::D);
        let mut pairs = Vec::new();
        for (a, &i) in cs.iter().enumerate() {
            for (b, &j) in ds.iter().enumerate() {
                if self.inter[i][j] > 0 {
                    pairs.push(format!("({},{},{})", a + 1, b + 1, self.inter[i][j]));
                }
            }
        }
        let mult: Vec<String> = cs
            .iter()
            .chain(&ds)
            .map(|&v| self.mult[v].to_string())
            .collect();
        write!(
            f,
            "c={}; d={}; inter={}; mult={}",
            cs.len(),
            ds.len(),
            pairs.join(","),
            mult.join(",")
        )
    }
}

/// Parses `(i,j,count),(i,j,count)` with byte offsets relative to `base`.
fn parse_pairs(s: &str, base: usize) -> Result<Vec<(usize, usize, u32)>> {
    let mut out = Vec::new();
    let mut rest = s;
    let mut offset = base;
    loop {
        let trimmed = rest.trim_start_matches(|c: char| c.is_whitespace() || c == ',');
        offset += rest.len() - trimmed.len();
        rest = trimmed;
        if rest.is_empty() {
            return Ok(out);
        }
        if !rest.starts_with('(') {
            let tok = rest
                .split(|c: char| c == ',' || c.is_whitespace())
                .next()
                .unwrap_or(rest);
            return Err(Error::parse(tok, offset, "expected (i,j,count)"));
        }
        let Some(close) = rest.find(')') else {
            return Err(Error::parse(rest, offset, "unclosed parenthesis"));
        };
        let fields = pieces(&rest[1..close], offset + 1, ',');
        if fields.len() != 3 {
            return Err(Error::parse(
                &rest[..=close],
                offset,
                "expected three fields",
            ));
        }
        let i: usize = number(fields[0].1, fields[0].0)?;
        let j: usize = number(fields[1].1, fields[1].0)?;
        let count: u32 = number(fields[2].1, fields[2].0)?;
        if i == 0 || j == 0 {
            let (pos, tok) = if i == 0 { fields[0] } else { fields[1] };
            return Err(Error::parse(tok, pos, "indices are 1-based"));
        }
        out.push((i - 1, j - 1, count));
        offset += close + 1;
        rest = &rest[close + 1..];
    }
}

impl FromStr for ConfigurationGraph {
    type Err = Error;

    /// Accepts a family name (see [`ConfigurationGraph::family`]) or the
    /// explicit bipartite form. In the explicit form `c` and `d` default to
    /// the largest index used, and `mult` defaults to all ones.
    fn from_str(s: &str) -> Result<Self> {
        if !s.contains('=') {
            return Self::family(s);
        }
        let mut m = None;
        let mut k = None;
        let mut pairs = Vec::new();
        let mut mult = None;
        for (pos, clause) in pieces(s, 0, ';') {
            if clause.is_empty() {
                continue;
            }
            let Some(eq) = clause.find('=') else {
                return Err(Error::parse(clause, pos, "expected key=value"));
            };
            let key = clause[..eq].trim();
            let value = &clause[eq + 1..];
            let value_pos = pos + eq + 1;
            match key {
                "c" => m = Some(number::<usize>(value.trim(), value_pos)?),
                "d" => k = Some(number::<usize>(value.trim(), value_pos)?),
                "inter" => pairs = parse_pairs(value, value_pos)?,
                "mult" => {
                    let mut v = Vec::new();
                    for (p, item) in pieces(value, value_pos, ',') {
                        v.push(number::<u32>(item, p)?);
                    }
                    mult = Some(v);
                }
                _ => return Err(Error::parse(key, pos, "unknown key")),
            }
        }
        let m = m.unwrap_or_else(|| pairs.iter().map(|p| p.0 + 1).max().unwrap_or(0));
        let k = k.unwrap_or_else(|| pairs.iter().map(|p| p.1 + 1).max().unwrap_or(0));
        let mult = mult.unwrap_or_else(|| vec![1; m + k]);
        Self::bipartite(m, k, &pairs, mult)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn families_have_expected_sizes() {
        assert_eq!(ConfigurationGraph::a(5).unwrap().vertex_count(), 5);
        assert_eq!(ConfigurationGraph::d(6).unwrap().vertex_count(), 6);
        assert_eq!(ConfigurationGraph::e(8).unwrap().vertex_count(), 8);
        assert_eq!(ConfigurationGraph::affine_d(6).unwrap().vertex_count(), 7);
        assert_eq!(ConfigurationGraph::affine_e(7).unwrap().vertex_count(), 8);
        assert_eq!(ConfigurationGraph::star(4).unwrap().vertex_count(), 5);
        assert_eq!(ConfigurationGraph::cycle(5), Err(Error::NotBipartite));
        assert_eq!(
            ConfigurationGraph::cycle(2).unwrap().intersections()[0][1],
            2
        );
    }

    #[test]
    fn path_sides_alternate() {
        let g = ConfigurationGraph::a(4).unwrap();
        assert_eq!(g.sides(), &[Side::C, Side::D, Side::C, Side::D]);
    }

    #[test]
    fn parses_explicit_form() {
        let g: ConfigurationGraph = "c=1; d=1; inter=(1,1,3); mult=1,1".parse().unwrap();
        assert_eq!(g.intersections(), &[vec![0, 3], vec![3, 0]]);
        let h: ConfigurationGraph = "inter=(1,1,3); mult=1,1".parse().unwrap();
        assert_eq!(g, h);
        assert_eq!(g.to_string().parse::<ConfigurationGraph>().unwrap(), g);
        let a3: ConfigurationGraph = "A:3".parse().unwrap();
        assert_eq!(a3, ConfigurationGraph::a(3).unwrap());
    }

    #[test]
    fn parse_errors_carry_positions() {
        let err = "c=2; d=1; inter=(1,1,1),(2,x,1)"
            .parse::<ConfigurationGraph>()
            .unwrap_err();
        assert!(
            matches!(err, Error::Parse { ref token, position: 27, .. } if token == "x"),
            "{err:?}"
        );
        let err = "c=1; d=1; inter=1,1,1"
            .parse::<ConfigurationGraph>()
            .unwrap_err();
        assert!(matches!(err, Error::Parse { position: 16, .. }), "{err:?}");
        let err = "A:x".parse::<ConfigurationGraph>().unwrap_err();
        assert!(matches!(err, Error::Parse { ref token, position: 2, .. } if token == "x"));
        assert!(matches!(
            "F:4".parse::<ConfigurationGraph>(),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn same_side_intersections_rejected() {
        let side = vec![Side::C, Side::C];
        let inter = vec![vec![0, 1], vec![1, 0]];
        assert_eq!(
            ConfigurationGraph::new(side, inter, vec![1, 1]),
            Err(Error::NotBipartite)
        );
    }

    #[test]
    fn connectivity() {
        let g = ConfigurationGraph::bipartite(2, 2, &[(0, 0, 1), (1, 1, 1)], vec![1; 4]).unwrap();
        assert!(!g.is_connected());
        assert!(ConfigurationGraph::cycle(6).unwrap().is_connected());
    }
}
