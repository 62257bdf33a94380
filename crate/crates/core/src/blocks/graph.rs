use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::text::{number, pieces};
use crate::{Error, Result};

/// A trivalent graph with loops, multi-edges and colored tails.
///
/// Internal edges carry no color; counting functions range over all of
/// them. Text form: `vertices=n; edges=u-v,u-v,...; tails=v:color,...`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ColoredGraph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    tails: Vec<(usize, u32)>,
}

impl ColoredGraph {
    pub fn new(
        vertex_count: usize,
        edges: Vec<(usize, usize)>,
        tails: Vec<(usize, u32)>,
    ) -> Result<Self> {
        let mut degree = vec![0usize; vertex_count];
        for &(u, v) in &edges {
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::InvalidGraph(format!(
                    "edge {u}-{v} references a missing vertex"
                )));
            }
            degree[u] += 1;
            degree[v] += 1;
        }
        for &(v, _) in &tails {
            if v >= vertex_count {
                return Err(Error::InvalidGraph(format!("tail on missing vertex {v}")));
            }
            degree[v] += 1;
        }
        if let Some((v, d)) = degree.iter().enumerate().find(|(_, &d)| d != 3) {
            return Err(Error::InvalidGraph(format!(
                "vertex {v} has degree {d}, expected 3"
            )));
        }
        Ok(ColoredGraph {
            vertex_count,
            edges,
            tails,
        })
    }

    /// One vertex carrying a loop and a tail colored `tail`.
    pub fn tadpole(tail: u32) -> Self {
        ColoredGraph {
            vertex_count: 1,
            edges: vec![(0, 0)],
            tails: vec![(0, tail)],
        }
    }

    /// Two vertices joined by three edges (closed genus 2).
    pub fn theta() -> Self {
        ColoredGraph {
            vertex_count: 2,
            edges: vec![(0, 1), (0, 1), (0, 1)],
            tails: vec![],
        }
    }

    /// Two loops joined by a bar (closed genus 2); the bar is edge 1.
    pub fn dumbbell() -> Self {
        ColoredGraph {
            vertex_count: 2,
            edges: vec![(0, 0), (0, 1), (1, 1)],
            tails: vec![],
        }
    }

    /// Loop, bar, double edge, bar, loop (closed genus 3); the double edge
    /// in the middle is edges 2 and 3.
    pub fn long_dumbbell() -> Self {
        ColoredGraph {
            vertex_count: 4,
            edges: vec![(0, 0), (0, 1), (1, 2), (1, 2), (2, 3), (3, 3)],
            tails: vec![],
        }
    }

    /// Theta graph with one edge subdivided by a vertex carrying a tail.
    pub fn theta_with_tail(tail: u32) -> Self {
        ColoredGraph {
            vertex_count: 3,
            edges: vec![(0, 1), (0, 1), (0, 2), (2, 1)],
            tails: vec![(2, tail)],
        }
    }

    /// A trivalent graph from a family name: `tadpole`, `theta`, `dumbbell`,
    /// `long-dumbbell`, or `theta-tail` (the latter two with `tail` as needed).
    pub fn named(name: &str, tail: Option<u32>) -> Option<Self> {
        match name {
            "tadpole" => Some(Self::tadpole(tail.unwrap_or(0))),
            "theta" => Some(Self::theta()),
            "dumbbell" => Some(Self::dumbbell()),
            "long-dumbbell" => Some(Self::long_dumbbell()),
            "theta-tail" => Some(Self::theta_with_tail(tail.unwrap_or(0))),
            _ => None,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn tails(&self) -> &[(usize, u32)] {
        &self.tails
    }

    /// Cuts the listed edges; each cut edge becomes two tails colored with
    /// the matching entry of `colors`.
    pub fn cut(&self, cut_edges: &[usize], colors: &[u32]) -> Result<Self> {
        assert_eq!(cut_edges.len(), colors.len());
        let mut keep = vec![true; self.edges.len()];
        let mut tails = self.tails.clone();
        for (&e, &c) in cut_edges.iter().zip(colors) {
            if e >= self.edges.len() || !keep[e] {
                return Err(Error::InvalidGraph(format!("cannot cut edge {e}")));
            }
            keep[e] = false;
            let (u, v) = self.edges[e];
            tails.push((u, c));
            tails.push((v, c));
        }
        let edges = self
            .edges
            .iter()
            .zip(&keep)
            .filter(|(_, &k)| k)
            .map(|(&e, _)| e)
            .collect();
        ColoredGraph::new(self.vertex_count, edges, tails)
    }
}

impl fmt::Display for ColoredGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self.edges.iter().map(|(u, v)| format!("{u}-{v}")).collect();
        let tails: Vec<String> = self.tails.iter().map(|(v, c)| format!("{v}:{c}")).collect();
        write!(
            f,
            "vertices={}; edges={}; tails={}",
            self.vertex_count,
            edges.join(","),
            tails.join(",")
        )
    }
}

impl FromStr for ColoredGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut vertices = None;
        let mut edges = Vec::new();
        let mut tails = Vec::new();
        for (pos, clause) in pieces(s, 0, ';') {
            if clause.is_empty() {
                continue;
            }
            let Some(eq) = clause.find('=') else {
                return Err(Error::parse(clause, pos, "expected key=value"));
            };
            let key = clause[..eq].trim();
            let value_pos = pos + eq + 1;
            let value = &clause[eq + 1..];
            match key {
                "vertices" => vertices = Some(number::<usize>(value.trim(), value_pos)?),
                "edges" => {
                    for (p, item) in pieces(value, value_pos, ',') {
                        if item.is_empty() {
                            continue;
                        }
                        let Some(dash) = item.find('-') else {
                            return Err(Error::parse(item, p, "expected u-v"));
                        };
                        let u = number(&item[..dash], p)?;
                        let v = number(&item[dash + 1..], p + dash + 1)?;
                        edges.push((u, v));
                    }
                }
                "tails" => {
                    for (p, item) in pieces(value, value_pos, ',') {
                        if item.is_empty() {
                            continue;
                        }
                        let Some(colon) = item.find(':') else {
                            return Err(Error::parse(item, p, "expected vertex:color"));
                        };
                        let v = number(&item[..colon], p)?;
                        let c = number(&item[colon + 1..], p + colon + 1)?;
                        tails.push((v, c));
                    }
                }
                _ => return Err(Error::parse(key, pos, "unknown key")),
            }
        }
        let Some(n) = vertices else {
            return Err(Error::parse(s.trim(), 0, "missing vertices=..."));
        };
        ColoredGraph::new(n, edges, tails)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_tadpole() {
        let g: ColoredGraph = " vertices = 1 ;edges= 0 - 0; tails = 0 : 4 "
            .parse()
            .unwrap();
        assert_eq!(g, ColoredGraph::tadpole(4));
        assert_eq!(g.to_string().parse::<ColoredGraph>().unwrap(), g);
    }

    #[test]
    fn parse_errors_name_the_token() {
        let err = "vertices=1; edges=0-x; tails=0:2"
            .parse::<ColoredGraph>()
            .unwrap_err();
        match err {
            Error::Parse {
                token, position, ..
            } => {
                assert_eq!(token, "x");
                assert_eq!(position, 20);
            }
            other => panic!("unexpected {other:?}"),
        }
        let err = "vertices=1; bogus=3".parse::<ColoredGraph>().unwrap_err();
        assert!(matches!(err, Error::Parse { ref token, position: 12, .. } if token == "bogus"));
        let err = "vertices=1; edges=00".parse::<ColoredGraph>().unwrap_err();
        assert!(matches!(err, Error::Parse { ref token, .. } if token == "00"));
    }

    #[test]
    fn rejects_non_trivalent() {
        let err = "vertices=2; edges=0-1; tails=0:0"
            .parse::<ColoredGraph>()
            .unwrap_err();
        assert!(matches!(err, Error::InvalidGraph(_)));
    }

    #[test]
    fn cut_adds_two_tails() {
        let g = ColoredGraph::theta().cut(&[0], &[2]).unwrap();
        assert_eq!(g.edges().len(), 2);
        assert_eq!(g.tails(), &[(0, 2), (1, 2)]);
        let t = ColoredGraph::tadpole(0).cut(&[0], &[4]).unwrap();
        assert_eq!(t.tails(), &[(0, 0), (0, 4), (0, 4)]);
    }
}
