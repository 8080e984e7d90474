use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Named graph families available to the CLI and the benchmark harness.
///
/// `Ladder(n)` is P2 x Pn (2n vertices); `ModifiedLadder(n)` is the ladder
/// with its highest-index corner removed, leaving 2n-1 vertices and, for
/// n >= 3, exactly one vertex of degree 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFamily {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Star(usize),
    Ladder(usize),
    ModifiedLadder(usize),
    Grid(usize, usize),
    Prism(usize),
}

impl GraphFamily {
    pub fn generate(&self) -> Result<Graph> {
        match *self {
            GraphFamily::Path(k) => {
                require(k >= 1, "path", "size must be >= 1")?;
                let edges: Vec<_> = (1..k).map(|i| (i - 1, i)).collect();
                Graph::from_edge_list(k, &edges)
            }
            GraphFamily::Cycle(k) => {
                require(k >= 3, "cycle", "size must be >= 3 in a simple graph")?;
                let edges: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
                Graph::from_edge_list(k, &edges)
            }
            GraphFamily::Complete(k) => {
                require(k >= 1, "complete", "size must be >= 1")?;
                let mut edges = Vec::with_capacity(k * (k - 1) / 2);
                for u in 0..k {
                    for v in u + 1..k {
                        edges.push((u, v));
                    }
                }
                Graph::from_edge_list(k, &edges)
            }
            GraphFamily::Star(k) => {
                // center 0 with k leaves
                require(k >= 1, "star", "leaf count must be >= 1")?;
                let edges: Vec<_> = (1..=k).map(|leaf| (0, leaf)).collect();
                Graph::from_edge_list(k + 1, &edges)
            }
            GraphFamily::Ladder(n) => {
                require(n >= 2, "ladder", "size must be >= 2")?;
                let p2 = GraphFamily::Path(2).generate()?;
                let pn = GraphFamily::Path(n).generate()?;
                Ok(p2.cartesian_product(&pn))
            }
            GraphFamily::ModifiedLadder(n) => {
                require(n >= 2, "modified_ladder", "size must be >= 2")?;
                let ladder = GraphFamily::Ladder(n).generate()?;
                // the removed corner is the last vertex, so indices of the
                // remaining 2n-1 vertices are unchanged
                let (g, _) = ladder.remove_vertex(2 * n - 1)?;
                Ok(g)
            }
            GraphFamily::Grid(a, b) => {
                require(a >= 1 && b >= 1, "grid", "both sides must be >= 1")?;
                let pa = GraphFamily::Path(a).generate()?;
                let pb = GraphFamily::Path(b).generate()?;
                Ok(pa.cartesian_product(&pb))
            }
            GraphFamily::Prism(k) => {
                require(k >= 3, "prism", "cycle length must be >= 3")?;
                let ck = GraphFamily::Cycle(k).generate()?;
                let p2 = GraphFamily::Path(2).generate()?;
                Ok(ck.cartesian_product(&p2))
            }
        }
    }
}

fn require(cond: bool, family: &str, reason: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidGeneratorSize {
            family: family.to_string(),
            reason: reason.to_string(),
        })
    }
}

impl fmt::Display for GraphFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GraphFamily::Path(k) => write!(f, "path:{k}"),
            GraphFamily::Cycle(k) => write!(f, "cycle:{k}"),
            GraphFamily::Complete(k) => write!(f, "complete:{k}"),
            GraphFamily::Star(k) => write!(f, "star:{k}"),
            GraphFamily::Ladder(n) => write!(f, "ladder:{n}"),
            GraphFamily::ModifiedLadder(n) => write!(f, "modified_ladder:{n}"),
            GraphFamily::Grid(a, b) => write!(f, "grid:{a}x{b}"),
            GraphFamily::Prism(k) => write!(f, "prism:{k}"),
        }
    }
}

/// Generator spec grammar: `family:arg` with `grid:AxB` for grids.
impl FromStr for GraphFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::BadGeneratorSpec(s.to_string());
        let (family, arg) = s.split_once(':').ok_or_else(bad)?;
        let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
        match family.trim() {
            "path" => Ok(GraphFamily::Path(num(arg)?)),
            "cycle" => Ok(GraphFamily::Cycle(num(arg)?)),
            "complete" => Ok(GraphFamily::Complete(num(arg)?)),
            "star" => Ok(GraphFamily::Star(num(arg)?)),
            "ladder" => Ok(GraphFamily::Ladder(num(arg)?)),
            "modified_ladder" => Ok(GraphFamily::ModifiedLadder(num(arg)?)),
            "prism" => Ok(GraphFamily::Prism(num(arg)?)),
            "grid" => {
                let (a, b) = arg.split_once(['x', 'X']).ok_or_else(bad)?;
                Ok(GraphFamily::Grid(num(a)?, num(b)?))
            }
            _ => Err(bad()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ladder_2_is_a_4_cycle() {
        let g = GraphFamily::Ladder(2).generate().unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.edge_count(), 4);
        assert_eq!(g.degree_sequence_sorted(), vec![2, 2, 2, 2]);
        assert!(g.is_connected());
    }

    #[test]
    fn path_1_is_a_single_vertex() {
        let g = GraphFamily::Path(1).generate().unwrap();
        assert_eq!(g.n(), 1);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn modified_ladder_3_degrees() {
        let g = GraphFamily::ModifiedLadder(3).generate().unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.degree_sequence_sorted(), vec![1, 2, 2, 2, 3]);
    }

    #[test]
    fn modified_ladders_have_one_degree_1_vertex() {
        for n in 3..=12 {
            let g = GraphFamily::ModifiedLadder(n).generate().unwrap();
            assert_eq!(g.n(), 2 * n - 1);
            let ones = g.degree_sequence_sorted().iter().filter(|&&d| d == 1).count();
            assert_eq!(ones, 1, "modified ladder {n}");
        }
    }

    #[test]
    fn prism_and_grid() {
        let prism3 = GraphFamily::Prism(3).generate().unwrap();
        assert_eq!(prism3.n(), 6);
        assert_eq!(prism3.edge_count(), 9);
        assert_eq!(prism3.degree_sequence_sorted(), vec![3; 6]);

        let grid = GraphFamily::Grid(3, 4).generate().unwrap();
        assert_eq!(grid.n(), 12);
        assert_eq!(grid.edge_count(), 3 * 3 + 4 * 2); // (a-1)b + a(b-1)
    }

    #[test]
    fn size_validation() {
        assert!(GraphFamily::Path(0).generate().is_err());
        assert!(GraphFamily::Cycle(2).generate().is_err());
        assert!(GraphFamily::Ladder(1).generate().is_err());
        assert!(GraphFamily::ModifiedLadder(1).generate().is_err());
        assert!(GraphFamily::Grid(0, 3).generate().is_err());
    }

    #[test]
    fn spec_grammar() {
        assert_eq!("ladder:5".parse::<GraphFamily>().unwrap(), GraphFamily::Ladder(5));
        assert_eq!("grid:3x4".parse::<GraphFamily>().unwrap(), GraphFamily::Grid(3, 4));
        assert_eq!("path:1".parse::<GraphFamily>().unwrap(), GraphFamily::Path(1));
        assert!("ladder".parse::<GraphFamily>().is_err());
        assert!("blob:3".parse::<GraphFamily>().is_err());
        assert!("grid:3".parse::<GraphFamily>().is_err());
        // round-trip through Display
        for fam in [
            GraphFamily::Star(4),
            GraphFamily::Grid(2, 7),
            GraphFamily::ModifiedLadder(6),
        ] {
            assert_eq!(fam.to_string().parse::<GraphFamily>().unwrap(), fam);
        }
    }
}
