//! Dense rotation systems: each vertex keeps its neighbours in cyclic order.
//!
//! Face traversal convention: the dart following `u -> v` is
//! `v -> pred_v(u)`, where `pred_v(u)` precedes `u` in the order at `v`.

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Rotation {
    pub(crate) order: Vec<Vec<usize>>,
}

impl Rotation {
    pub(crate) fn new(n: usize) -> Self {
        Rotation {
            order: vec![Vec::new(); n],
        }
    }

    pub(crate) fn len(&self) -> usize {
        self.order.len()
    }

    fn index_of(&self, v: usize, u: usize) -> usize {
        self.order[v]
            .iter()
            .position(|&w| w == u)
            .unwrap_or_else(|| panic!("{u} is not a neighbour of {v}"))
    }

    pub(crate) fn pred(&self, v: usize, u: usize) -> usize {
        let ring = &self.order[v];
        let i = self.index_of(v, u);
        ring[(i + ring.len() - 1) % ring.len()]
    }

    pub(crate) fn has_edge(&self, u: usize, v: usize) -> bool {
        self.order[u].contains(&v)
    }

    /// Dart after `u -> v` on its face.
    pub(crate) fn next_dart(&self, u: usize, v: usize) -> (usize, usize) {
        (v, self.pred(v, u))
    }

    /// Inserts `w` into the order at `v` right after `after`.
    pub(crate) fn insert_after(&mut self, v: usize, w: usize, after: usize) {
        let i = self.index_of(v, after);
        self.order[v].insert(i + 1, w);
    }

    /// Inserts `w` into the order at `v` right before `before`.
    pub(crate) fn insert_before(&mut self, v: usize, w: usize, before: usize) {
        let i = self.index_of(v, before);
        self.order[v].insert(i, w);
    }

    /// Adds the chord `a - c` across the corner `a -> b -> c` of a face, so
    /// that `a -> c` continues the face and `c -> a -> b -> c` becomes a triangle.
    pub(crate) fn add_chord(&mut self, a: usize, b: usize, c: usize) {
        self.insert_after(a, c, b);
        self.insert_before(c, a, b);
    }

    /// Every face as its vertex walk, darts visited in index order.
    pub(crate) fn faces(&self) -> Vec<Vec<usize>> {
        let mut seen: Vec<Vec<bool>> = self.order.iter().map(|r| vec![false; r.len()]).collect();
        let mut faces = Vec::new();
        for u in 0..self.len() {
            for k in 0..self.order[u].len() {
                if seen[u][k] {
                    continue;
                }
                let start = (u, self.order[u][k]);
                let mut face = Vec::new();
                let mut dart = start;
                loop {
                    let idx = self.index_of(dart.0, dart.1);
                    seen[dart.0][idx] = true;
                    face.push(dart.0);
                    dart = self.next_dart(dart.0, dart.1);
                    if dart == start {
                        break;
                    }
                }
                faces.push(face);
            }
        }
        faces
    }

    /// Builds the rotation whose faces are exactly `faces`; every dart must
    /// appear in exactly one face walk.
    pub(crate) fn from_faces(n: usize, faces: &[Vec<usize>]) -> Self {
        // succ[v] maps w to the neighbour following w at v
        let mut succ: Vec<std::collections::BTreeMap<usize, usize>> = vec![Default::default(); n];
        for f in faces {
            let m = f.len();
            for i in 0..m {
                let (u, v, w) = (f[i], f[(i + 1) % m], f[(i + 2) % m]);
                succ[v].insert(w, u);
            }
        }
        let mut rot = Rotation::new(n);
        for (v, next) in succ.iter().enumerate() {
            let Some((&start, _)) = next.iter().next() else {
                continue;
            };
            let mut cur = start;
            loop {
                rot.order[v].push(cur);
                cur = next[&cur];
                if cur == start {
                    break;
                }
            }
            debug_assert_eq!(rot.order[v].len(), succ[v].len());
        }
        rot
    }
}
