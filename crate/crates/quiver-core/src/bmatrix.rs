use crate::{linalg, IceQuiver, VertexId};

/// Signed arrow-count matrix: rows are mutable vertices, columns all vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BMatrix {
    pub rows: Vec<VertexId>,
    pub cols: Vec<VertexId>,
    pub entries: Vec<Vec<i64>>,
}

impl BMatrix {
    pub fn of(q: &IceQuiver) -> BMatrix {
        let rows = q.mutable_vertices();
        let cols = q.vertices().to_vec();
        let mut entries = vec![vec![0i64; cols.len()]; rows.len()];
        for (r, u) in rows.iter().enumerate() {
            for (c, v) in cols.iter().enumerate() {
                entries[r][c] = q.multiplicity(u, v) as i64 - q.multiplicity(v, u) as i64;
            }
        }
        BMatrix { rows, cols, entries }
    }

    pub fn get(&self, u: &VertexId, v: &VertexId) -> Option<i64> {
        let r = self.rows.iter().position(|x| x == u)?;
        let c = self.cols.iter().position(|x| x == v)?;
        Some(self.entries[r][c])
    }

    /// Matrix mutation in direction `k` (a mutable vertex).
    pub fn mutate(&self, k: &VertexId) -> Option<BMatrix> {
        let rk = self.rows.iter().position(|x| x == k)?;
        let ck = self.cols.iter().position(|x| x == k)?;
        let mut out = self.clone();
        for r in 0..self.rows.len() {
            for c in 0..self.cols.len() {
                let b = self.entries[r][c];
                out.entries[r][c] = if r == rk || c == ck {
                    -b
                } else {
                    let bik = self.entries[r][ck];
                    let bkj = self.entries[rk][c];
                    b + (bik.abs() * bkj + bik * bkj.abs()) / 2
                };
            }
        }
        Some(out)
    }

    /// Whether the square mutable block is skew-symmetric.
    pub fn mutable_block_is_skew(&self) -> bool {
        let idx: Vec<usize> =
            self.rows.iter().map(|u| self.cols.iter().position(|x| x == u).expect("row vertex is a column")).collect();
        (0..self.rows.len()).all(|a| (0..self.rows.len()).all(|b| self.entries[a][idx[b]] == -self.entries[b][idx[a]]))
    }

    pub fn rank(&self) -> usize {
        linalg::rank(&self.entries)
    }

    pub fn has_full_row_rank(&self) -> bool {
        self.rank() == self.rows.len()
    }
}
