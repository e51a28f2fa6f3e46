//! Breadth-first Coxeter length oracle.
//!
//! The search runs over group elements of `C̃_n` starting at the identity and
//! applying generators on the right. The first element reached whose coset
//! normal form equals the queried representative is the representative
//! itself, so its depth is the Coxeter length and its search path is a
//! reduced word.

use std::collections::HashMap;

use super::{apply_generator_in_place, coset_normal_window, AffineElement, CosetRep};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    pub depth_cap: u32,
    pub node_cap: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            depth_cap: 14,
            node_cap: 5_000_000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LengthReport {
    pub length: u32,
    /// Generator indices `i_1, …, i_ℓ` with `w = s_{i_1} ⋯ s_{i_ℓ}`.
    pub word: Vec<usize>,
    pub s0_count: usize,
    pub sn_count: usize,
    pub element: AffineElement,
}

struct Node {
    window: Box<[i64]>,
    parent: u32,
    generator: u8,
    depth: u32,
}

/// A BFS whose explored layers persist across queries of the same rank.
pub struct LengthOracle {
    n: usize,
    config: OracleConfig,
    nodes: Vec<Node>,
    index: HashMap<Box<[i64]>, u32>,
    coset_first: HashMap<Box<[i64]>, u32>,
    layer_start: usize,
    explored_depth: u32,
}

impl LengthOracle {
    pub fn new(n: usize, config: OracleConfig) -> Self {
        let root: Box<[i64]> = (1..=n as i64).collect();
        let mut index = HashMap::new();
        index.insert(root.clone(), 0);
        let mut coset_first = HashMap::new();
        coset_first.insert(root.clone(), 0);
        LengthOracle {
            n,
            config,
            nodes: vec![Node {
                window: root,
                parent: u32::MAX,
                generator: 0,
                depth: 0,
            }],
            index,
            coset_first,
            layer_start: 0,
            explored_depth: 0,
        }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn config(&self) -> OracleConfig {
        self.config
    }

    /// Number of group elements discovered so far.
    pub fn explored(&self) -> usize {
        self.nodes.len()
    }

    /// Length and a reduced word of `w`, searching at most `max_depth`
    /// layers (further limited by the configured depth cap).
    pub fn query(&mut self, w: &CosetRep, max_depth: u32) -> Result<LengthReport> {
        if w.rank() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                found: w.rank(),
            });
        }
        let limit = max_depth.min(self.config.depth_cap);
        loop {
            if let Some(&idx) = self.coset_first.get(w.window()) {
                let node = &self.nodes[idx as usize];
                if node.depth > limit {
                    return Err(Error::ExceedsDepth(limit));
                }
                return Ok(self.report(idx));
            }
            if self.explored_depth >= limit {
                return Err(Error::ExceedsDepth(limit));
            }
            self.expand_layer()?;
        }
    }

    fn expand_layer(&mut self) -> Result<()> {
        let layer_end = self.nodes.len();
        let next_depth = self.explored_depth + 1;
        let mut scratch = vec![0i64; self.n];
        for parent in self.layer_start..layer_end {
            for g in 0..=self.n {
                scratch.copy_from_slice(&self.nodes[parent].window);
                apply_generator_in_place(&mut scratch, g)?;
                if self.index.contains_key(scratch.as_slice()) {
                    continue;
                }
                if self.nodes.len() >= self.config.node_cap {
                    return Err(Error::ResourceCap(format!(
                        "length oracle node cap {} reached at depth {next_depth}",
                        self.config.node_cap
                    )));
                }
                let id = self.nodes.len() as u32;
                let window: Box<[i64]> = scratch.as_slice().into();
                self.index.insert(window.clone(), id);
                self.coset_first
                    .entry(coset_normal_window(&window).into_boxed_slice())
                    .or_insert(id);
                self.nodes.push(Node {
                    window,
                    parent: parent as u32,
                    generator: g as u8,
                    depth: next_depth,
                });
            }
        }
        self.layer_start = layer_end;
        self.explored_depth = next_depth;
        Ok(())
    }

    fn report(&self, idx: u32) -> LengthReport {
        let mut word = Vec::new();
        let mut cur = idx;
        while cur != 0 {
            let node = &self.nodes[cur as usize];
            word.push(node.generator as usize);
            cur = node.parent;
        }
        word.reverse();
        let node = &self.nodes[idx as usize];
        LengthReport {
            length: node.depth,
            s0_count: word.iter().filter(|&&g| g == 0).count(),
            sn_count: word.iter().filter(|&&g| g == self.n).count(),
            word,
            element: AffineElement::new(node.window.to_vec()).expect("reached elements are valid"),
        }
    }
}

/// One-shot query with the default configuration.
pub fn length_oracle(w: &CosetRep, max_depth: u32) -> Result<LengthReport> {
    LengthOracle::new(w.rank(), OracleConfig::default()).query(w, max_depth)
}
