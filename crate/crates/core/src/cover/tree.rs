use std::cmp::Ordering;
use std::fmt;

use crate::{Error, Result};

/// Whether a step of a path follows an arrow or goes against it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    Along,
    Against,
}

/// Vertex class in the bipartite orientation: sources cover vertex 1, sinks vertex 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VertexClass {
    Source,
    Sink,
}

/// A vertex of the universal cover of the n-Kronecker quiver, named by the
/// reduced path of arrow labels (`1..=n`) leading to it from the base vertex
/// `z`, which is a source.
///
/// Steps alternate between following an arrow (from a source) and going back
/// along one (from a sink), so the labels alone determine the path; a path is
/// reduced when no label repeats immediately.
///
/// Vertices are ordered by distance from `z`, then lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TreeVertex {
    labels: Vec<usize>,
}

impl TreeVertex {
    pub fn root() -> Self {
        TreeVertex { labels: Vec::new() }
    }

    pub fn from_labels(labels: Vec<usize>) -> Result<Self> {
        if labels.contains(&0) {
            return Err(Error::InvalidArgument("arrow labels start at 1".into()));
        }
        if labels.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidArgument(format!("path {labels:?} backtracks")));
        }
        Ok(TreeVertex { labels })
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn steps(&self) -> Vec<(usize, Direction)> {
        self.labels
            .iter()
            .enumerate()
            .map(|(k, &l)| (l, if k % 2 == 0 { Direction::Along } else { Direction::Against }))
            .collect()
    }

    pub fn depth(&self) -> usize {
        self.labels.len()
    }

    pub fn class(&self) -> VertexClass {
        if self.labels.len().is_multiple_of(2) {
            VertexClass::Source
        } else {
            VertexClass::Sink
        }
    }

    /// The other end of the arrow labelled `label` at this vertex.
    pub fn neighbor(&self, label: usize) -> Self {
        let mut labels = self.labels.clone();
        if labels.last() == Some(&label) {
            labels.pop();
        } else {
            labels.push(label);
        }
        TreeVertex { labels }
    }

    pub fn max_label(&self) -> usize {
        self.labels.iter().copied().max().unwrap_or(0)
    }
}

impl PartialOrd for TreeVertex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for TreeVertex {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.labels.len(), &self.labels).cmp(&(other.labels.len(), &other.labels))
    }
}

impl fmt::Display for TreeVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("z")?;
        for l in &self.labels {
            write!(f, "/{l}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn neighbors_step_back_along_the_last_label() {
        let z = TreeVertex::root();
        let y = z.neighbor(2);
        assert_eq!(y.class(), VertexClass::Sink);
        let x = y.neighbor(3);
        assert_eq!(x.labels(), &[2, 3]);
        assert_eq!(x.neighbor(3), y);
        assert_eq!(y.neighbor(2), z);
        assert_eq!(x.steps(), vec![(2, Direction::Along), (3, Direction::Against)]);
    }

    #[test]
    fn backtracking_paths_are_rejected() {
        assert!(TreeVertex::from_labels(vec![1, 1]).is_err());
        assert!(TreeVertex::from_labels(vec![0]).is_err());
    }
}
