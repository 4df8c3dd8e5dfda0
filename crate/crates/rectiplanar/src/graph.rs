//! Simple undirected graphs and their block-cut-vertex decomposition.

use std::collections::HashSet;

use thiserror::Error;

pub type Vertex = usize;
pub type EdgeId = usize;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("parallel edge between {0} and {1}")]
    ParallelEdge(Vertex, Vertex),
    #[error("vertex id {id} out of range (vertex count {n})")]
    VertexIdOutOfRange { id: Vertex, n: usize },
    #[error("graph is disconnected")]
    Disconnected,
}

/// An undirected simple graph with dense vertex ids and edge ids in input order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    adj: Vec<Vec<EdgeId>>,
}

impl Graph {
    pub fn new(vertex_count: usize, edge_list: &[(Vertex, Vertex)]) -> Result<Graph, GraphError> {
        let mut adj = vec![Vec::new(); vertex_count];
        let mut seen = HashSet::with_capacity(edge_list.len());
        for (e, &(u, v)) in edge_list.iter().enumerate() {
            for id in [u, v] {
                if id >= vertex_count {
                    return Err(GraphError::VertexIdOutOfRange { id, n: vertex_count });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(GraphError::ParallelEdge(u, v));
            }
            adj[u].push(e);
            adj[v].push(e);
        }
        Ok(Graph { n: vertex_count, edges: edge_list.to_vec(), adj })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn endpoints(&self, e: EdgeId) -> (Vertex, Vertex) {
        self.edges[e]
    }

    /// The endpoint of `e` that is not `w`.
    pub fn other(&self, e: EdgeId, w: Vertex) -> Vertex {
        let (a, b) = self.edges[e];
        if a == w {
            b
        } else {
            debug_assert_eq!(b, w);
            a
        }
    }

    pub fn incident(&self, v: Vertex) -> &[EdgeId] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.adj[v].iter().map(move |&e| self.other(e, v))
    }

    pub fn edge_between(&self, u: Vertex, v: Vertex) -> Option<EdgeId> {
        self.adj[u].iter().copied().find(|&e| self.other(e, u) == v)
    }

    /// Whether a drawing with straight orthogonal edges is even conceivable.
    pub fn check_degree_bound(&self) -> bool {
        self.max_degree() <= 4
    }

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut comp = vec![usize::MAX; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![s];
            comp[s] = id;
            let mut i = 0;
            while i < members.len() {
                let v = members[i];
                i += 1;
                for w in self.neighbors(v) {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// Whether some three vertices are pairwise adjacent.
    pub fn has_triangle(&self) -> bool {
        self.edges.iter().any(|&(u, v)| {
            let (a, b) = if self.degree(u) <= self.degree(v) { (u, v) } else { (v, u) };
            self.neighbors(a).any(|w| w != b && self.edge_between(w, b).is_some())
        })
    }

    /// The subgraph formed by `edge_ids` with local, dense ids.
    ///
    /// Local vertex `i` is `vmap[i]`; local edge `j` is `emap[j]`. Vertices keep
    /// their relative order, edges keep the order given.
    pub fn edge_subgraph(&self, edge_ids: &[EdgeId]) -> (Graph, Vec<Vertex>, Vec<EdgeId>) {
        let mut vs: Vec<Vertex> = edge_ids
            .iter()
            .flat_map(|&e| [self.edges[e].0, self.edges[e].1])
            .collect();
        vs.sort_unstable();
        vs.dedup();
        self.relabel(&vs, edge_ids)
    }

    /// The subgraph induced by a vertex set, with local ids as in `edge_subgraph`.
    pub fn induced_subgraph(&self, vertices: &[Vertex]) -> (Graph, Vec<Vertex>, Vec<EdgeId>) {
        let mut vs = vertices.to_vec();
        vs.sort_unstable();
        vs.dedup();
        let inside: HashSet<Vertex> = vs.iter().copied().collect();
        let es: Vec<EdgeId> = (0..self.edges.len())
            .filter(|&e| inside.contains(&self.edges[e].0) && inside.contains(&self.edges[e].1))
            .collect();
        self.relabel(&vs, &es)
    }

    fn relabel(&self, vs: &[Vertex], es: &[EdgeId]) -> (Graph, Vec<Vertex>, Vec<EdgeId>) {
        let local: std::collections::HashMap<Vertex, usize> =
            vs.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let list: Vec<(usize, usize)> = es
            .iter()
            .map(|&e| (local[&self.edges[e].0], local[&self.edges[e].1]))
            .collect();
        let g = Graph::new(vs.len(), &list).expect("subgraph of a simple graph is simple");
        (g, vs.to_vec(), es.to_vec())
    }
}

/// One block of a connected graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    /// Edge ids of the block, increasing.
    pub edges: Vec<EdgeId>,
    /// Vertex ids of the block, increasing.
    pub vertices: Vec<Vertex>,
    pub trivial: bool,
}

/// Bipartite tree of blocks (B-nodes) and cut vertices (C-nodes).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockCutTree {
    pub blocks: Vec<Block>,
    /// Cut vertex ids, increasing.
    pub cut_vertices: Vec<Vertex>,
    /// (block index, index into `cut_vertices`).
    pub tree_edges: Vec<(usize, usize)>,
    /// Block containing each edge.
    pub edge_block: Vec<usize>,
}

impl BlockCutTree {
    /// Blocks containing vertex `v`, increasing.
    pub fn blocks_at(&self, v: Vertex) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .blocks
            .iter()
            .enumerate()
            .filter(|(_, b)| b.vertices.binary_search(&v).is_ok())
            .map(|(i, _)| i)
            .collect();
        out.sort_unstable();
        out
    }

    pub fn is_cut_vertex(&self, v: Vertex) -> bool {
        self.cut_vertices.binary_search(&v).is_ok()
    }
}

/// Decomposes a connected graph into blocks (iterative Hopcroft-Tarjan).
pub fn block_cut_tree(g: &Graph) -> Result<BlockCutTree, GraphError> {
    if !g.is_connected() {
        return Err(GraphError::Disconnected);
    }
    let n = g.vertex_count();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut edge_block = vec![usize::MAX; g.edge_count()];
    let mut estack: Vec<EdgeId> = Vec::new();
    let mut block_edges: Vec<Vec<EdgeId>> = Vec::new();
    let mut time = 0;

    if n > 0 {
        // frames: (vertex, parent edge, next adjacency index)
        let mut stack: Vec<(Vertex, usize, usize)> = vec![(0, usize::MAX, 0)];
        disc[0] = time;
        low[0] = time;
        time += 1;
        while let Some(top) = stack.last_mut() {
            let (v, pe, idx) = *top;
            if idx < g.degree(v) {
                top.2 += 1;
                let e = g.incident(v)[idx];
                if e == pe {
                    continue;
                }
                let w = g.other(e, v);
                if disc[w] == usize::MAX {
                    estack.push(e);
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    stack.push((w, e, 0));
                } else if disc[w] < disc[v] {
                    estack.push(e);
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[v]);
                    if low[v] >= disc[p] {
                        let id = block_edges.len();
                        let mut es = Vec::new();
                        while let Some(e) = estack.pop() {
                            edge_block[e] = id;
                            es.push(e);
                            if e == pe {
                                break;
                            }
                        }
                        es.sort_unstable();
                        block_edges.push(es);
                    }
                }
            }
        }
    }

    let mut blocks: Vec<Block> = block_edges
        .into_iter()
        .map(|edges| {
            let mut vertices: Vec<Vertex> =
                edges.iter().flat_map(|&e| [g.endpoints(e).0, g.endpoints(e).1]).collect();
            vertices.sort_unstable();
            vertices.dedup();
            let trivial = edges.len() == 1;
            Block { edges, vertices, trivial }
        })
        .collect();
    // order blocks by smallest edge id for reproducibility
    let mut order: Vec<usize> = (0..blocks.len()).collect();
    order.sort_by_key(|&b| blocks[b].edges[0]);
    let mut rank = vec![0; blocks.len()];
    for (r, &b) in order.iter().enumerate() {
        rank[b] = r;
    }
    let mut sorted = Vec::with_capacity(blocks.len());
    for &b in &order {
        sorted.push(std::mem::replace(
            &mut blocks[b],
            Block { edges: vec![], vertices: vec![], trivial: true },
        ));
    }
    for eb in edge_block.iter_mut() {
        *eb = rank[*eb];
    }
    let blocks = sorted;

    let mut count = vec![0u32; n];
    for b in &blocks {
        for &v in &b.vertices {
            count[v] += 1;
        }
    }
    let cut_vertices: Vec<Vertex> = (0..n).filter(|&v| count[v] >= 2).collect();
    let mut tree_edges = Vec::new();
    for (bi, b) in blocks.iter().enumerate() {
        for &v in &b.vertices {
            if let Ok(ci) = cut_vertices.binary_search(&v) {
                tree_edges.push((bi, ci));
            }
        }
    }
    Ok(BlockCutTree { blocks, cut_vertices, tree_edges, edge_block })
}
