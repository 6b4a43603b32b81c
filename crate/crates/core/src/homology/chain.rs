//! Chain complexes of free abelian groups, chain maps, mapping cones and
//! double mapping cylinders.

use rayon::prelude::*;

use super::matrix::SparseMatrix;
use super::HomologyResult;
use crate::complexes::{Simplex, SimplicialComplex};
use crate::error::{Error, Result};

/// Free chain complex concentrated in degrees `0..ranks.len()`.
/// `boundaries[d]` maps degree `d` to degree `d - 1`; `boundaries[0]` has no rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainComplex {
    ranks: Vec<usize>,
    boundaries: Vec<SparseMatrix>,
}

impl ChainComplex {
    pub fn new(ranks: Vec<usize>, boundaries: Vec<SparseMatrix>) -> Result<Self> {
        if ranks.len() != boundaries.len() {
            return Err(Error::InvalidComplex("one boundary per degree expected".into()));
        }
        for (d, b) in boundaries.iter().enumerate() {
            let below = if d == 0 { 0 } else { ranks[d - 1] };
            if b.cols() != ranks[d] || b.rows() != below {
                return Err(Error::InvalidComplex(format!("boundary in degree {d} has the wrong shape")));
            }
        }
        for d in 2..boundaries.len() {
            match boundaries[d - 1].mul(&boundaries[d]) {
                Some(m) if m.is_zero() => {}
                _ => return Err(Error::InvalidComplex(format!("boundary squares to nonzero in degree {d}"))),
            }
        }
        Ok(ChainComplex { ranks, boundaries })
    }

    /// Oriented simplicial chains; a simplex is oriented by increasing vertex id.
    pub fn of(k: &SimplicialComplex) -> Self {
        let top = k.dim();
        let mut ranks = Vec::new();
        let mut boundaries = Vec::new();
        for d in 0..=top.max(-1) {
            let d = d as usize;
            let cells = k.simplices(d);
            ranks.push(cells.len());
            if d == 0 {
                boundaries.push(SparseMatrix::zeros(0, cells.len()));
                continue;
            }
            let below = k.simplices(d - 1);
            let mut triplets = Vec::with_capacity(cells.len() * (d + 1));
            for (c, s) in cells.iter().enumerate() {
                for skip in 0..=d {
                    let face: Simplex = s.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &v)| v).collect();
                    let row = below.binary_search(&face).expect("faces are present");
                    triplets.push((row, c, if skip % 2 == 0 { 1 } else { -1 }));
                }
            }
            boundaries.push(SparseMatrix::from_triplets(below.len(), cells.len(), triplets));
        }
        ChainComplex { ranks, boundaries }
    }

    pub fn rank(&self, d: isize) -> usize {
        if d < 0 {
            0
        } else {
            self.ranks.get(d as usize).copied().unwrap_or(0)
        }
    }

    /// Number of degrees, i.e. one more than the top degree.
    pub fn len(&self) -> usize {
        self.ranks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranks.iter().all(|&r| r == 0)
    }

    /// Boundary out of degree `d`, zero-padded outside the stored range.
    pub fn boundary(&self, d: isize) -> SparseMatrix {
        match usize::try_from(d).ok().and_then(|d| self.boundaries.get(d)) {
            Some(b) => b.clone(),
            None => SparseMatrix::zeros(self.rank(d - 1), self.rank(d)),
        }
    }

    pub fn homology(&self) -> HomologyResult {
        let forms: Vec<_> = self.boundaries.par_iter().skip(1).map(SparseMatrix::smith).collect();
        let rank_of = |d: usize| if d == 0 || d > forms.len() { 0 } else { forms[d - 1].rank };
        let mut betti = Vec::with_capacity(self.ranks.len());
        let mut torsion = Vec::with_capacity(self.ranks.len());
        for d in 0..self.ranks.len() {
            betti.push(self.ranks[d] - rank_of(d) - rank_of(d + 1));
            torsion.push(forms.get(d).map(|f| f.torsion().cloned().collect()).unwrap_or_default());
        }
        HomologyResult::new(betti, torsion)
    }
}

/// Chain map given degreewise; `matrices[d]` maps `C_d(source)` to `C_d(target)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainMap {
    matrices: Vec<SparseMatrix>,
}

impl ChainMap {
    pub fn new(matrices: Vec<SparseMatrix>) -> Self {
        ChainMap { matrices }
    }

    /// Chain map of a simplicial vertex map; degenerate images go to zero and
    /// the sign is that of the permutation sorting the image vertices.
    pub fn induced(source: &SimplicialComplex, target: &SimplicialComplex, vertex_map: &[usize]) -> Result<Self> {
        source.check_simplicial_map(target, vertex_map)?;
        let mut matrices = Vec::new();
        for d in 0..=source.dim().max(-1) {
            let d = d as usize;
            let cells = source.simplices(d);
            let image_cells = target.simplices(d);
            let mut triplets = Vec::new();
            for (c, s) in cells.iter().enumerate() {
                let image: Vec<usize> = s.iter().map(|&v| vertex_map[v]).collect();
                if let Some(sign) = permutation_sign(&image) {
                    let mut sorted = image;
                    sorted.sort_unstable();
                    let row = image_cells.binary_search(&sorted).expect("simplicial map");
                    triplets.push((row, c, sign));
                }
            }
            matrices.push(SparseMatrix::from_triplets(image_cells.len(), cells.len(), triplets));
        }
        Ok(ChainMap { matrices })
    }

    pub fn identity(c: &ChainComplex) -> Self {
        let matrices =
            (0..c.len()).map(|d| SparseMatrix::from_triplets(c.ranks[d], c.ranks[d], (0..c.ranks[d]).map(|i| (i, i, 1)))).collect();
        ChainMap { matrices }
    }

    /// Degree `d` component between the given complexes, zero-padded.
    pub fn at(&self, d: isize, source: &ChainComplex, target: &ChainComplex) -> SparseMatrix {
        match usize::try_from(d).ok().and_then(|d| self.matrices.get(d)) {
            Some(m) => {
                assert_eq!((m.rows(), m.cols()), (target.rank(d), source.rank(d)), "chain map shape");
                m.clone()
            }
            None => SparseMatrix::zeros(target.rank(d), source.rank(d)),
        }
    }
}

/// Sign of the permutation sorting `image`, or `None` if it repeats a value.
fn permutation_sign(image: &[usize]) -> Option<i64> {
    let mut sign = 1;
    for i in 0..image.len() {
        for j in i + 1..image.len() {
            match image[i].cmp(&image[j]) {
                std::cmp::Ordering::Equal => return None,
                std::cmp::Ordering::Greater => sign = -sign,
                std::cmp::Ordering::Less => {}
            }
        }
    }
    Some(sign)
}

/// Assembles a block matrix. Each block is `(block_row, block_col, matrix, sign)`.
fn block_matrix(row_sizes: &[usize], col_sizes: &[usize], blocks: &[(usize, usize, &SparseMatrix, i64)]) -> SparseMatrix {
    let offsets = |sizes: &[usize]| sizes.iter().scan(0, |acc, &s| Some(std::mem::replace(acc, *acc + s))).collect::<Vec<_>>();
    let (row_off, col_off) = (offsets(row_sizes), offsets(col_sizes));
    let triplets = blocks.iter().flat_map(|&(bi, bj, m, sign)| {
        assert_eq!((m.rows(), m.cols()), (row_sizes[bi], col_sizes[bj]), "block shape");
        let (ro, co) = (row_off[bi], col_off[bj]);
        m.triplets().map(move |(i, j, x)| (ro + i, co + j, sign * x))
    });
    SparseMatrix::from_triplets(row_sizes.iter().sum(), col_sizes.iter().sum(), triplets.collect::<Vec<_>>())
}

/// `Cone_n = B_n ⊕ A_{n-1}` with differential `[[∂B, f], [0, -∂A]]`.
pub fn mapping_cone(f: &ChainMap, a: &ChainComplex, b: &ChainComplex) -> ChainComplex {
    let top = b.len().max(a.len() + 1);
    let mut ranks = Vec::with_capacity(top);
    let mut boundaries = Vec::with_capacity(top);
    for n in 0..top as isize {
        ranks.push(b.rank(n) + a.rank(n - 1));
        let rows = [b.rank(n - 1), a.rank(n - 2)];
        let cols = [b.rank(n), a.rank(n - 1)];
        let (db, fa, da) = (b.boundary(n), f.at(n - 1, a, b), a.boundary(n - 1));
        boundaries.push(block_matrix(&rows, &cols, &[(0, 0, &db, 1), (0, 1, &fa, 1), (1, 1, &da, -1)]));
    }
    ChainComplex { ranks, boundaries }
}

/// Double mapping cylinder of `X ← Z → Y`:
/// `D_n = X_n ⊕ Z_{n-1} ⊕ Y_n`, `d(x, z, y) = (∂x + u z, -∂z, ∂y - v z)`.
pub fn double_mapping_cylinder(u: &ChainMap, v: &ChainMap, x: &ChainComplex, z: &ChainComplex, y: &ChainComplex) -> ChainComplex {
    let top = x.len().max(y.len()).max(z.len() + 1);
    let mut ranks = Vec::with_capacity(top);
    let mut boundaries = Vec::with_capacity(top);
    for n in 0..top as isize {
        ranks.push(x.rank(n) + z.rank(n - 1) + y.rank(n));
        let rows = [x.rank(n - 1), z.rank(n - 2), y.rank(n - 1)];
        let cols = [x.rank(n), z.rank(n - 1), y.rank(n)];
        let (dx, dz, dy) = (x.boundary(n), z.boundary(n - 1), y.boundary(n));
        let (un, vn) = (u.at(n - 1, z, x), v.at(n - 1, z, y));
        boundaries.push(block_matrix(&rows, &cols, &[(0, 0, &dx, 1), (0, 1, &un, 1), (1, 1, &dz, -1), (2, 1, &vn, -1), (2, 2, &dy, 1)]));
    }
    ChainComplex { ranks, boundaries }
}

/// The comparison `[i, 0, j]` from the double mapping cylinder to `C(W)`.
pub fn cylinder_to_target(i: &ChainMap, j: &ChainMap, x: &ChainComplex, z: &ChainComplex, y: &ChainComplex, w: &ChainComplex) -> ChainMap {
    let top = x.len().max(y.len()).max(z.len() + 1);
    let matrices = (0..top as isize)
        .map(|n| {
            let cols = [x.rank(n), z.rank(n - 1), y.rank(n)];
            let (im, jm) = (i.at(n, x, w), j.at(n, y, w));
            block_matrix(&[w.rank(n)], &cols, &[(0, 0, &im, 1), (0, 2, &jm, 1)])
        })
        .collect();
    ChainMap { matrices }
}
