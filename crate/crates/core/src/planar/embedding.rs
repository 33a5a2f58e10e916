use std::collections::{BTreeMap, BTreeSet, VecDeque};

use super::rotation::Rotation;
use crate::graph::{Graph, VertexId};

/// Rotation system of a planar graph plus a designated outer face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CombinatorialEmbedding {
    rotation: BTreeMap<VertexId, Vec<VertexId>>,
    outer_face: Vec<VertexId>,
}

impl CombinatorialEmbedding {
    /// Cyclic order of the neighbours of `v`.
    pub fn rotation(&self, v: VertexId) -> &[VertexId] {
        self.rotation.get(&v).map_or(&[], Vec::as_slice)
    }

    /// Vertex walk of the outer face; empty when the graph has no edges.
    pub fn outer_face(&self) -> &[VertexId] {
        &self.outer_face
    }

    fn dense(&self) -> (Vec<VertexId>, Rotation) {
        let ids: Vec<VertexId> = self.rotation.keys().copied().collect();
        let index: BTreeMap<VertexId, usize> =
            ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut rot = Rotation::new(ids.len());
        for (i, v) in ids.iter().enumerate() {
            rot.order[i] = self.rotation[v].iter().map(|w| index[w]).collect();
        }
        (ids, rot)
    }

    pub(crate) fn to_rotation(&self) -> (Vec<VertexId>, Rotation) {
        self.dense()
    }

    /// Face walks traced from the rotation system.
    pub fn faces(&self) -> Vec<Vec<VertexId>> {
        let (ids, rot) = self.dense();
        rot.faces()
            .into_iter()
            .map(|f| f.into_iter().map(|i| ids[i]).collect())
            .collect()
    }

    /// Number of faces, counting one face for every edgeless component.
    pub fn face_count(&self) -> usize {
        self.faces().len() + self.rotation.values().filter(|r| r.is_empty()).count()
    }

    /// Checks that the rotation at each vertex is a cyclic order of exactly
    /// its neighbours in `g` and that every connected component satisfies
    /// Euler's formula `V - E + F = 2`.
    pub fn is_consistent_with(&self, g: &Graph) -> bool {
        if self.rotation.len() != g.vertex_count() {
            return false;
        }
        for v in g.vertices() {
            let Some(r) = self.rotation.get(&v) else {
                return false;
            };
            let as_set: BTreeSet<_> = r.iter().copied().collect();
            if as_set.len() != r.len() || !as_set.iter().copied().eq(g.neighbors(v)) {
                return false;
            }
        }
        let faces = self.faces();
        g.components().into_iter().all(|comp| {
            let set: BTreeSet<_> = comp.iter().copied().collect();
            let v = comp.len() as i64;
            let e = comp.iter().map(|&x| g.degree(x)).sum::<usize>() as i64 / 2;
            let f = if e == 0 {
                1
            } else {
                faces.iter().filter(|f| set.contains(&f[0])).count() as i64
            };
            v - e + f == 2
        })
    }
}

/// Computes a planar rotation system, or `None` if `g` is not planar.
///
/// Each biconnected block is embedded by path addition: start from a cycle,
/// then repeatedly route a path of some remaining fragment through a face
/// that contains all of the fragment's attachment vertices, preferring
/// fragments with a single admissible face. Block rotations are spliced
/// together at cut vertices.
pub fn planarity_embedding(g: &Graph) -> Option<CombinatorialEmbedding> {
    let (ids, adj) = g.indexed();
    let n = ids.len();
    let m = g.edge_count();
    if n >= 3 && m > 3 * n - 6 {
        return None;
    }
    let mut rot = Rotation::new(n);
    for block in biconnected_blocks(&adj) {
        let block_rot = embed_block(&block)?;
        for (local, &global) in block.vertices.iter().enumerate() {
            rot.order[global].extend(block_rot.order[local].iter().map(|&w| block.vertices[w]));
        }
    }
    let faces = rot.faces();
    let outer = faces
        .iter()
        .fold(None::<&Vec<usize>>, |best, f| match best {
            Some(b) if b.len() >= f.len() => Some(b),
            _ => Some(f),
        })
        .map(|f| f.iter().map(|&i| ids[i]).collect())
        .unwrap_or_default();
    let rotation = ids
        .iter()
        .enumerate()
        .map(|(i, &v)| (v, rot.order[i].iter().map(|&w| ids[w]).collect()))
        .collect();
    let emb = CombinatorialEmbedding {
        rotation,
        outer_face: outer,
    };
    debug_assert!(emb.is_consistent_with(g), "path addition produced a non-planar rotation");
    Some(emb)
}

struct Block {
    // global indices, ascending
    vertices: Vec<usize>,
    // local edges
    edges: Vec<(usize, usize)>,
}

/// Edge-biconnected blocks (Hopcroft–Tarjan) in discovery order.
fn biconnected_blocks(adj: &[Vec<usize>]) -> Vec<Block> {
    struct State<'a> {
        adj: &'a [Vec<usize>],
        disc: Vec<usize>,
        low: Vec<usize>,
        time: usize,
        stack: Vec<(usize, usize)>,
        blocks: Vec<Vec<(usize, usize)>>,
    }
    fn dfs(s: &mut State, v: usize, parent: Option<usize>) {
        s.time += 1;
        s.disc[v] = s.time;
        s.low[v] = s.time;
        let adj = s.adj;
        for &w in &adj[v] {
            if s.disc[w] == 0 {
                s.stack.push((v, w));
                dfs(s, w, Some(v));
                s.low[v] = s.low[v].min(s.low[w]);
                if s.low[w] >= s.disc[v] {
                    let mut block = Vec::new();
                    while let Some(e) = s.stack.pop() {
                        block.push(e);
                        if e == (v, w) {
                            break;
                        }
                    }
                    s.blocks.push(block);
                }
            } else if Some(w) != parent && s.disc[w] < s.disc[v] {
                s.stack.push((v, w));
                s.low[v] = s.low[v].min(s.disc[w]);
            }
        }
    }
    let n = adj.len();
    let mut s = State {
        adj,
        disc: vec![0; n],
        low: vec![0; n],
        time: 0,
        stack: Vec::new(),
        blocks: Vec::new(),
    };
    for v in 0..n {
        if s.disc[v] == 0 {
            dfs(&mut s, v, None);
        }
    }
    s.blocks
        .into_iter()
        .map(|edges| {
            let vertices: Vec<usize> = edges
                .iter()
                .flat_map(|&(a, b)| [a, b])
                .collect::<BTreeSet<_>>()
                .into_iter()
                .collect();
            let local = |x: usize| vertices.binary_search(&x).unwrap();
            let mut edges: Vec<(usize, usize)> = edges
                .into_iter()
                .map(|(a, b)| {
                    let (a, b) = (local(a), local(b));
                    (a.min(b), a.max(b))
                })
                .collect();
            edges.sort_unstable();
            Block { vertices, edges }
        })
        .collect()
}

fn embed_block(block: &Block) -> Option<Rotation> {
    let n = block.vertices.len();
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in &block.edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    for a in adj.iter_mut() {
        a.sort_unstable();
    }
    if block.edges.len() == 1 {
        let mut rot = Rotation::new(n);
        rot.order[0].push(1);
        rot.order[1].push(0);
        return Some(rot);
    }

    let mut placed_v = vec![false; n];
    let mut placed_e: BTreeSet<(usize, usize)> = BTreeSet::new();
    let key = |a: usize, b: usize| (a.min(b), a.max(b));

    // initial cycle: edge 0-a closed by a shortest path from a back to 0
    let a = adj[0][0];
    let cycle = {
        let mut parent = vec![usize::MAX; n];
        parent[a] = a;
        let mut queue = VecDeque::from([a]);
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if parent[w] == usize::MAX && !(v == a && w == 0) {
                    parent[w] = v;
                    queue.push_back(w);
                }
            }
        }
        let mut cycle = vec![0];
        let mut cur = parent[0];
        while cur != a {
            cycle.push(cur);
            cur = parent[cur];
        }
        cycle.push(a);
        cycle
    };
    for i in 0..cycle.len() {
        let (u, v) = (cycle[i], cycle[(i + 1) % cycle.len()]);
        placed_v[u] = true;
        placed_e.insert(key(u, v));
    }
    let mut faces = vec![cycle.clone(), cycle.iter().rev().copied().collect()];

    while placed_e.len() < block.edges.len() {
        let fragments = fragments(&adj, &placed_v, &placed_e);
        let face_sets: Vec<BTreeSet<usize>> =
            faces.iter().map(|f| f.iter().copied().collect()).collect();
        let mut choice: Option<(usize, usize)> = None;
        for (fi, frag) in fragments.iter().enumerate() {
            let admissible: Vec<usize> = face_sets
                .iter()
                .enumerate()
                .filter(|(_, s)| frag.attachments.iter().all(|a| s.contains(a)))
                .map(|(i, _)| i)
                .collect();
            match admissible.len() {
                0 => return None,
                1 => {
                    choice = Some((fi, admissible[0]));
                    break;
                }
                _ => {
                    if choice.is_none() {
                        choice = Some((fi, admissible[0]));
                    }
                }
            }
        }
        let (fi, face_idx) = choice.expect("some fragment remains");
        let path = fragment_path(&adj, &placed_v, &fragments[fi]);

        let face = &faces[face_idx];
        let len = face.len();
        let i = face.iter().position(|&v| v == path[0]).unwrap();
        let j = face.iter().position(|&v| v == *path.last().unwrap()).unwrap();
        let inner = &path[1..path.len() - 1];
        let mut first: Vec<usize> = (0..).map(|k| face[(i + k) % len]).take((j + len - i) % len + 1).collect();
        first.extend(inner.iter().rev());
        let mut second: Vec<usize> = (0..).map(|k| face[(j + k) % len]).take((i + len - j) % len + 1).collect();
        second.extend(inner.iter());
        faces[face_idx] = first;
        faces.push(second);

        for w in path.windows(2) {
            placed_e.insert(key(w[0], w[1]));
        }
        for &v in &path {
            placed_v[v] = true;
        }
    }
    Some(Rotation::from_faces(n, &faces))
}

struct Fragment {
    attachments: BTreeSet<usize>,
    // unplaced vertices; empty for a single chord edge
    interior: BTreeSet<usize>,
}

fn fragments(adj: &[Vec<usize>], placed_v: &[bool], placed_e: &BTreeSet<(usize, usize)>) -> Vec<Fragment> {
    let n = adj.len();
    let mut out = Vec::new();
    for u in 0..n {
        for &v in &adj[u] {
            if u < v && placed_v[u] && placed_v[v] && !placed_e.contains(&(u, v)) {
                out.push(Fragment {
                    attachments: BTreeSet::from([u, v]),
                    interior: BTreeSet::new(),
                });
            }
        }
    }
    let mut seen = vec![false; n];
    for s in 0..n {
        if placed_v[s] || seen[s] {
            continue;
        }
        let mut interior = BTreeSet::from([s]);
        let mut attachments = BTreeSet::new();
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if placed_v[w] {
                    attachments.insert(w);
                } else if !seen[w] {
                    seen[w] = true;
                    interior.insert(w);
                    stack.push(w);
                }
            }
        }
        out.push(Fragment {
            attachments,
            interior,
        });
    }
    out
}

/// A path through the fragment joining two distinct attachment vertices.
fn fragment_path(adj: &[Vec<usize>], placed_v: &[bool], frag: &Fragment) -> Vec<usize> {
    let mut atts = frag.attachments.iter().copied();
    let a1 = atts.next().expect("fragment has attachments");
    if frag.interior.is_empty() {
        return vec![a1, atts.next().expect("chord has two ends")];
    }
    let start = *adj[a1]
        .iter()
        .find(|w| frag.interior.contains(w))
        .expect("attachment touches the fragment");
    let mut parent = BTreeMap::from([(start, start)]);
    let mut queue = VecDeque::from([start]);
    while let Some(v) = queue.pop_front() {
        if let Some(&a2) = adj[v].iter().find(|&&w| placed_v[w] && w != a1) {
            let mut path = vec![a2, v];
            let mut cur = v;
            while cur != start {
                cur = parent[&cur];
                path.push(cur);
            }
            path.push(a1);
            path.reverse();
            return path;
        }
        for &w in &adj[v] {
            if frag.interior.contains(&w) && !parent.contains_key(&w) {
                parent.insert(w, v);
                queue.push_back(w);
            }
        }
    }
    unreachable!("a block fragment has at least two attachments")
}
