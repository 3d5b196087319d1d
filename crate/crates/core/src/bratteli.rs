//! Young diagrams and the Bratteli diagram of the BMW/Brauer tower.
//!
//! Level `n` holds one node per Young diagram with `n`, `n-2`, ... boxes;
//! a node at level `n` is joined to a node at level `n-1` exactly when the
//! two diagrams differ by adding or removing one box. Dimensions are path
//! counts from the single box at level 1, equivalently the sum of the
//! dimensions of the level-below neighbors.

use num::bigint::BigUint;
use num::{One, Zero};
use serde::Serialize;
use std::fmt::Write as _;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BratteliError {
    #[error("rows must be weakly decreasing and positive, got {0:?}")]
    InvalidShape(Vec<usize>),
    #[error("level must be at least 1")]
    InvalidLevel,
    #[error("no node with {boxes} boxes at level {level}")]
    MissingNode { level: usize, boxes: usize },
}

/// A partition shape: weakly decreasing positive row lengths. The empty
/// sequence is the empty diagram.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct YoungDiagram {
    rows: Vec<usize>,
}

impl YoungDiagram {
    pub fn new(rows: Vec<usize>) -> Result<Self, BratteliError> {
        let decreasing = rows.windows(2).all(|w| w[0] >= w[1]);
        let positive = rows.iter().all(|&r| r >= 1);
        if decreasing && positive {
            Ok(YoungDiagram { rows })
        } else {
            Err(BratteliError::InvalidShape(rows))
        }
    }

    pub fn empty() -> Self {
        YoungDiagram { rows: Vec::new() }
    }

    /// Single row of `boxes` boxes; the empty diagram when `boxes` is 0.
    pub fn single_row(boxes: usize) -> Self {
        if boxes == 0 {
            Self::empty()
        } else {
            YoungDiagram { rows: vec![boxes] }
        }
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.rows.iter().sum()
    }

    pub fn transpose(&self) -> Self {
        if self.rows.is_empty() {
            return Self::empty();
        }
        let cols = self.rows[0];
        let rows = (0..cols)
            .map(|c| self.rows.iter().filter(|&&r| r > c).count())
            .collect();
        YoungDiagram { rows }
    }

    /// Whether the two diagrams differ by adding or removing exactly one box.
    pub fn differs_by_one_box(&self, other: &Self) -> bool {
        let (small, big) = if self.size() + 1 == other.size() {
            (self, other)
        } else if other.size() + 1 == self.size() {
            (other, self)
        } else {
            return false;
        };
        if big.rows.len() < small.rows.len() {
            return false;
        }
        let mut diffs = 0;
        for r in 0..big.rows.len() {
            let s = small.rows.get(r).copied().unwrap_or(0);
            match big.rows[r].checked_sub(s) {
                Some(0) => {}
                Some(1) => diffs += 1,
                _ => return false,
            }
        }
        diffs == 1
    }

    /// Number of standard Young tableaux: `|shape|!` divided by the product
    /// of hook lengths. The empty diagram counts 1.
    pub fn hook_length_dim(&self) -> BigUint {
        let size = self.size();
        let mut numerator = BigUint::one();
        for k in 1..=size {
            numerator *= BigUint::from(k);
        }
        let transpose = self.transpose();
        let mut hooks = BigUint::one();
        for (r, &len) in self.rows.iter().enumerate() {
            for c in 0..len {
                let arm = len - c - 1;
                let leg = transpose.rows[c] - r - 1;
                hooks *= BigUint::from(arm + leg + 1);
            }
        }
        &numerator / &hooks
    }
}

impl std::fmt::Display for YoungDiagram {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.rows.is_empty() {
            write!(f, "[]")
        } else {
            let parts: Vec<String> = self.rows.iter().map(|r| r.to_string()).collect();
            write!(f, "[{}]", parts.join(","))
        }
    }
}

/// All partitions of `k` in canonical order (lexicographic by rows).
pub fn partitions_of(k: usize) -> Vec<YoungDiagram> {
    fn go(remaining: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if remaining == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in 1..=max_part.min(remaining) {
            prefix.push(part);
            go(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    if k == 0 {
        return vec![YoungDiagram::empty()];
    }
    let mut raw = Vec::new();
    go(k, k, &mut Vec::new(), &mut raw);
    let mut out: Vec<YoungDiagram> = raw
        .into_iter()
        .map(|rows| YoungDiagram::new(rows).expect("generated shapes are valid"))
        .collect();
    out.sort();
    out
}

/// One node of the diagram: a shape, its path-count dimension, and the
/// indices of its neighbors one level down.
#[derive(Debug, Clone, Serialize)]
pub struct BratteliNode {
    pub diagram: YoungDiagram,
    #[serde(serialize_with = "serialize_dim")]
    pub dim: BigUint,
    pub parents: Vec<usize>,
}

fn serialize_dim<S: serde::Serializer>(dim: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&dim.to_string())
}

/// The leveled multigraph of simple modules, levels 1 through `max_level`.
#[derive(Debug, Clone)]
pub struct BratteliGraph {
    levels: Vec<Vec<BratteliNode>>,
}

impl BratteliGraph {
    /// Build levels 1..=`max_level`. Level `n` holds partitions of
    /// `n, n-2, ...` down to 0 or 1, ordered by (size descending, rows
    /// lexicographic); edges join shapes one box apart.
    pub fn build(max_level: usize) -> Result<Self, BratteliError> {
        if max_level < 1 {
            return Err(BratteliError::InvalidLevel);
        }
        let mut levels: Vec<Vec<BratteliNode>> = Vec::with_capacity(max_level);
        for level in 1..=max_level {
            let mut nodes = Vec::new();
            let mut boxes = level;
            loop {
                for diagram in partitions_of(boxes) {
                    let (parents, dim) = if level == 1 {
                        (Vec::new(), BigUint::one())
                    } else {
                        let below: &Vec<BratteliNode> = &levels[level - 2];
                        let parents: Vec<usize> = below
                            .iter()
                            .enumerate()
                            .filter(|(_, p)| p.diagram.differs_by_one_box(&diagram))
                            .map(|(k, _)| k)
                            .collect();
                        let dim = parents
                            .iter()
                            .fold(BigUint::zero(), |acc, &k| acc + &below[k].dim);
                        (parents, dim)
                    };
                    nodes.push(BratteliNode {
                        diagram,
                        dim,
                        parents,
                    });
                }
                if boxes < 2 {
                    break;
                }
                boxes -= 2;
            }
            levels.push(nodes);
        }
        Ok(BratteliGraph { levels })
    }

    pub fn max_level(&self) -> usize {
        self.levels.len()
    }

    /// Nodes at a 1-based level.
    pub fn level(&self, n: usize) -> &[BratteliNode] {
        &self.levels[n - 1]
    }

    pub fn node(&self, level: usize, rows: &[usize]) -> Option<&BratteliNode> {
        self.level(level)
            .iter()
            .find(|node| node.diagram.rows() == rows)
    }

    pub fn dim(&self, level: usize, rows: &[usize]) -> Option<&BigUint> {
        self.node(level, rows).map(|n| &n.dim)
    }

    /// Sum over level-`n` nodes of the squared dimensions.
    pub fn level_dim_square_sum(&self, n: usize) -> BigUint {
        self.level(n)
            .iter()
            .fold(BigUint::zero(), |acc, node| acc + &node.dim * &node.dim)
    }

    /// Graphviz rendering, nodes ranked by level.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph bratteli {\n  rankdir=TB;\n  node [shape=box];\n");
        for (li, nodes) in self.levels.iter().enumerate() {
            let level = li + 1;
            let _ = writeln!(out, "  {{ rank=same;");
            for (k, node) in nodes.iter().enumerate() {
                let _ = writeln!(
                    out,
                    "    \"L{level}N{k}\" [label=\"{} dim={}\"];",
                    node.diagram, node.dim
                );
            }
            let _ = writeln!(out, "  }}");
        }
        for (li, nodes) in self.levels.iter().enumerate() {
            let level = li + 1;
            for (k, node) in nodes.iter().enumerate() {
                for &p in &node.parents {
                    let _ = writeln!(out, "  \"L{}N{}\" -> \"L{level}N{k}\";", level - 1, p);
                }
            }
        }
        out.push_str("}\n");
        out
    }

    /// Plain-text rendering, one level per line.
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        for (li, nodes) in self.levels.iter().enumerate() {
            let cells: Vec<String> = nodes
                .iter()
                .map(|n| format!("{}:{}", n.diagram, n.dim))
                .collect();
            let _ = writeln!(out, "level {:>2}: {}", li + 1, cells.join("  "));
        }
        out
    }
}

#[derive(Debug, Serialize)]
struct NodeJson<'a> {
    level: usize,
    index: usize,
    rows: &'a [usize],
    dim: String,
}

#[derive(Debug, Serialize)]
struct EdgeJson {
    lower_level: usize,
    lower_index: usize,
    upper_level: usize,
    upper_index: usize,
}

#[derive(Debug, Serialize)]
struct GraphJson<'a> {
    levels: usize,
    nodes: Vec<NodeJson<'a>>,
    edges: Vec<EdgeJson>,
}

impl BratteliGraph {
    pub fn to_json(&self) -> String {
        let mut nodes = Vec::new();
        let mut edges = Vec::new();
        for (li, level_nodes) in self.levels.iter().enumerate() {
            let level = li + 1;
            for (index, node) in level_nodes.iter().enumerate() {
                nodes.push(NodeJson {
                    level,
                    index,
                    rows: node.diagram.rows(),
                    dim: node.dim.to_string(),
                });
                for &p in &node.parents {
                    edges.push(EdgeJson {
                        lower_level: level - 1,
                        lower_index: p,
                        upper_level: level,
                        upper_index: index,
                    });
                }
            }
        }
        let doc = GraphJson {
            levels: self.levels.len(),
            nodes,
            edges,
        };
        serde_json::to_string_pretty(&doc).expect("graph serialization")
    }
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let mut out = BigUint::one();
    for i in 0..k {
        out = out * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    out
}

/// `(2n-1)!! = (2n-1)(2n-3)...3.1`, the number of pairings of `2n` points.
pub fn double_factorial_odd(n: usize) -> BigUint {
    let mut out = BigUint::one();
    let mut k = 1usize;
    while k < 2 * n {
        out *= BigUint::from(k);
        k += 2;
    }
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct DimensionTheoremReport {
    pub n: usize,
    pub dim: String,
    pub expected: String,
    pub upper_row: String,
    pub upper_hook: String,
    pub upper_recursive: String,
    pub pass: bool,
}

/// The counting argument for the single-row node with `n-2` boxes at level
/// `n`: its dimension is `C(n,2)`, decomposed through its three neighbors
/// at level `n-1` as `1 + (n-2) + C(n-1,2)`.
pub fn dimension_theorem_check(n: usize) -> Result<DimensionTheoremReport, BratteliError> {
    if n < 3 {
        return Err(BratteliError::InvalidLevel);
    }
    let graph = BratteliGraph::build(n)?;
    let target = YoungDiagram::single_row(n - 2);
    let node = graph
        .node(n, target.rows())
        .ok_or(BratteliError::MissingNode {
            level: n,
            boxes: n - 2,
        })?;
    let expected = binomial(n, 2);

    // The three upward connections at level n-1.
    let full_row = graph
        .dim(n - 1, YoungDiagram::single_row(n - 1).rows())
        .cloned()
        .unwrap_or_default();
    let hook_shape = YoungDiagram::new(vec![n - 2, 1]).expect("valid hook shape");
    let hook = graph
        .dim(n - 1, hook_shape.rows())
        .cloned()
        .unwrap_or_default();
    let recursive = graph
        .dim(n - 1, YoungDiagram::single_row(n - 3).rows())
        .cloned()
        .unwrap_or_default();

    let parents_match = node.parents.len() == 3
        && full_row == BigUint::one()
        && hook == BigUint::from(n - 2)
        && recursive == binomial(n - 1, 2);
    let pass = node.dim == expected && parents_match;
    Ok(DimensionTheoremReport {
        n,
        dim: node.dim.to_string(),
        expected: expected.to_string(),
        upper_row: full_row.to_string(),
        upper_hook: hook.to_string(),
        upper_recursive: recursive.to_string(),
        pass,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct LevelIdentityReport {
    pub n: usize,
    pub sum_of_squares: String,
    pub double_factorial: String,
    pub pass: bool,
}

/// Cross-check against the Brauer-algebra dimension: the squared dims at
/// level `n` sum to `(2n-1)!!`.
pub fn level_dimension_identity(n: usize) -> Result<LevelIdentityReport, BratteliError> {
    if n < 1 {
        return Err(BratteliError::InvalidLevel);
    }
    let graph = BratteliGraph::build(n)?;
    let sum = graph.level_dim_square_sum(n);
    let expected = double_factorial_odd(n);
    Ok(LevelIdentityReport {
        n,
        pass: sum == expected,
        sum_of_squares: sum.to_string(),
        double_factorial: expected.to_string(),
    })
}
