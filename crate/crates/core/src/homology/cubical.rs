//! Cubical set systems on a shared grid and the closure complexes of their
//! cell sets.
//!
//! Cells of the closure complex are addressed in doubled ("Khalimsky")
//! coordinates over the bounding box of the selected top cells: a
//! coordinate is odd along the axes the cell spans, so a cell's dimension is
//! its number of odd coordinates and its facets sit at `±1` along each odd
//! axis.

use crate::bits::{Bits, Subfamily};
use crate::error::{Error, Result};
use crate::homology::gf2::SparseGf2Matrix;
use crate::set_system::SetSystem;

pub(crate) fn check_dims(dims: &[usize]) -> Result<()> {
    if !(2..=3).contains(&dims.len()) {
        return Err(Error::Input(format!(
            "cubical grids must be 2- or 3-dimensional, got {} dimensions",
            dims.len()
        )));
    }
    if dims.contains(&0) {
        return Err(Error::Input("grid extents must be positive".into()));
    }
    Ok(())
}

/// A family of top-cell sets over one row-major grid (first axis slowest).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubicalSetSystem {
    dims: Vec<usize>,
    sets: Vec<Bits>,
    names: Vec<String>,
}

impl CubicalSetSystem {
    pub fn new(dims: Vec<usize>, sets: Vec<Bits>) -> Result<Self> {
        let names = (0..sets.len()).map(|i| format!("S{i}")).collect();
        Self::with_names(dims, sets, names)
    }

    pub fn with_names(dims: Vec<usize>, sets: Vec<Bits>, names: Vec<String>) -> Result<Self> {
        check_dims(&dims)?;
        let cells: usize = dims.iter().product();
        if let Some(i) = sets.iter().position(|s| s.len() != cells) {
            return Err(Error::Input(format!(
                "member {i} has {} cells, grid has {cells}",
                sets[i].len()
            )));
        }
        if names.len() != sets.len() {
            return Err(Error::Input("one name per member required".into()));
        }
        Ok(CubicalSetSystem { dims, sets, names })
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn cell_count(&self) -> usize {
        self.dims.iter().product()
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn sets(&self) -> &[Bits] {
        &self.sets
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn cell_index(&self, coords: &[usize]) -> usize {
        cell_index(&self.dims, coords)
    }

    /// Intersection of the members in `mask`; the full grid for the empty
    /// mask.
    pub fn intersection(&self, mask: Subfamily) -> Bits {
        let mut acc = Bits::ones(self.cell_count());
        for i in mask.members() {
            acc.intersect_with(&self.sets[i]);
        }
        acc
    }

    /// The same family viewed as an abstract set system on the grid cells.
    pub fn to_set_system(&self) -> SetSystem {
        SetSystem::with_names(self.cell_count(), self.sets.clone(), self.names.clone())
            .expect("lengths already validated")
    }
}

pub fn cell_index(dims: &[usize], coords: &[usize]) -> usize {
    coords.iter().zip(dims).fold(0, |acc, (&c, &d)| acc * d + c)
}

pub fn cell_coords(dims: &[usize], mut index: usize) -> Vec<usize> {
    let mut out = vec![0; dims.len()];
    for a in (0..dims.len()).rev() {
        out[a] = index % dims[a];
        index /= dims[a];
    }
    out
}

/// Cells of every dimension with their GF(2) boundary matrices.
#[derive(Clone, Debug)]
pub struct ChainComplex {
    dim: usize,
    cells: Vec<usize>,
    /// `boundaries[q - 1]` is `∂_q` from q-cells to (q-1)-cells.
    boundaries: Vec<SparseGf2Matrix>,
}

impl ChainComplex {
    /// Ambient dimension.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of cells in each dimension `0..=dim`.
    pub fn cell_counts(&self) -> &[usize] {
        &self.cells
    }

    pub fn is_empty(&self) -> bool {
        self.cells.iter().all(|&c| c == 0)
    }

    /// `∂_q` for `1 <= q <= dim`.
    pub fn boundary(&self, q: usize) -> &SparseGf2Matrix {
        &self.boundaries[q - 1]
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.cells
            .iter()
            .enumerate()
            .map(|(q, &c)| if q % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum()
    }

    /// Unreduced Betti numbers `β_0..β_dim` over Z2.
    ///
    /// Boundary matrices are reduced from the top dimension down; a row that
    /// becomes a pivot of `∂_{q+1}` marks a q-cell whose column in `∂_q`
    /// reduces to zero, so that column is skipped.
    pub fn betti_numbers(&self) -> Vec<usize> {
        let d = self.dim;
        let mut rank = vec![0usize; d + 2];
        let mut cleared: Option<Vec<bool>> = None;
        for q in (1..=d).rev() {
            let red = self.boundaries[q - 1].reduce(cleared.as_deref());
            rank[q] = red.rank;
            cleared = Some(red.pivot_rows);
        }
        (0..=d)
            .map(|q| self.cells[q] - rank[q] - rank[q + 1])
            .collect()
    }
}

/// Closure complex of the selected top cells: every face of every selected
/// cell. Fails when `cells` does not match the grid.
pub fn build_complex(cells: &Bits, dims: &[usize]) -> Result<ChainComplex> {
    check_dims(dims)?;
    let total: usize = dims.iter().product();
    if cells.len() != total {
        return Err(Error::Input(format!(
            "cell set covers {} cells, grid has {total}",
            cells.len()
        )));
    }
    let d = dims.len();
    let selected: Vec<Vec<usize>> = cells.iter().map(|i| cell_coords(dims, i)).collect();
    if selected.is_empty() {
        return Ok(ChainComplex {
            dim: d,
            cells: vec![0; d + 1],
            boundaries: (1..=d)
                .map(|_| SparseGf2Matrix::new(0, Vec::new()))
                .collect(),
        });
    }

    let mut lo = vec![usize::MAX; d];
    let mut hi = vec![0; d];
    for c in &selected {
        for a in 0..d {
            lo[a] = lo[a].min(c[a]);
            hi[a] = hi[a].max(c[a]);
        }
    }
    let ext: Vec<usize> = (0..d).map(|a| 2 * (hi[a] - lo[a] + 1) + 1).collect();
    let kcount: usize = ext.iter().product();
    let mut strides = vec![1usize; d];
    for a in (0..d - 1).rev() {
        strides[a] = strides[a + 1] * ext[a + 1];
    }

    let mut marked = vec![false; kcount];
    let offsets: Vec<Vec<isize>> = (0..3usize.pow(d as u32))
        .map(|mut o| {
            (0..d)
                .map(|_| {
                    let v = (o % 3) as isize - 1;
                    o /= 3;
                    v
                })
                .collect()
        })
        .collect();
    for c in &selected {
        let center: usize = (0..d).map(|a| (2 * (c[a] - lo[a]) + 1) * strides[a]).sum();
        for off in &offsets {
            let delta: isize = (0..d).map(|a| off[a] * strides[a] as isize).sum();
            marked[(center as isize + delta) as usize] = true;
        }
    }

    // Number cells per dimension in row-major order of their positions.
    let mut index = vec![u32::MAX; kcount];
    let mut positions: Vec<Vec<usize>> = vec![Vec::new(); d + 1];
    let mut coord = vec![0usize; d];
    for (pos, &m) in marked.iter().enumerate() {
        if m {
            let mut rem = pos;
            for a in 0..d {
                coord[a] = rem / strides[a];
                rem %= strides[a];
            }
            let q = coord.iter().filter(|&&x| x % 2 == 1).count();
            index[pos] = positions[q].len() as u32;
            positions[q].push(pos);
        }
    }

    let mut boundaries = Vec::with_capacity(d);
    for q in 1..=d {
        let columns = positions[q]
            .iter()
            .map(|&pos| {
                let mut col = Vec::with_capacity(2 * q);
                let mut rem = pos;
                for a in 0..d {
                    let x = rem / strides[a];
                    rem %= strides[a];
                    if x % 2 == 1 {
                        col.push(index[pos - strides[a]]);
                        col.push(index[pos + strides[a]]);
                    }
                }
                col.sort_unstable();
                col
            })
            .collect();
        boundaries.push(SparseGf2Matrix::new(positions[q - 1].len(), columns));
    }
    for q in 2..=d {
        assert!(
            boundaries[q - 2].mul(&boundaries[q - 1]).is_zero(),
            "boundary of boundary is nonzero in dimension {q}"
        );
    }
    Ok(ChainComplex {
        dim: d,
        cells: positions.iter().map(Vec::len).collect(),
        boundaries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_square() {
        let cells = Bits::from_indices(4, [0]);
        let c = build_complex(&cells, &[2, 2]).unwrap();
        assert_eq!(c.cell_counts(), &[4, 4, 1]);
        assert_eq!(c.betti_numbers(), vec![1, 0, 0]);
    }

    #[test]
    fn two_squares_sharing_an_edge() {
        let cells = Bits::from_indices(4, [0, 1]);
        let c = build_complex(&cells, &[2, 2]).unwrap();
        assert_eq!(c.cell_counts(), &[6, 7, 2]);
    }

    #[test]
    fn empty_cell_set() {
        let c = build_complex(&Bits::zeros(9), &[3, 3]).unwrap();
        assert!(c.is_empty());
        assert_eq!(c.betti_numbers(), vec![0, 0, 0]);
    }

    #[test]
    fn unit_cube() {
        let c = build_complex(&Bits::ones(1), &[1, 1, 1]).unwrap();
        assert_eq!(c.cell_counts(), &[8, 12, 6, 1]);
        assert_eq!(c.betti_numbers(), vec![1, 0, 0, 0]);
    }

    #[test]
    fn hollow_cube_shell_has_a_void() {
        let dims = [3, 3, 3];
        let cells = Bits::from_indices(27, (0..27).filter(|&i| i != 13));
        let c = build_complex(&cells, &dims).unwrap();
        assert_eq!(c.betti_numbers(), vec![1, 0, 1, 0]);
    }

    #[test]
    fn wrong_length_or_dimension() {
        assert!(build_complex(&Bits::zeros(5), &[2, 2]).is_err());
        assert!(build_complex(&Bits::zeros(4), &[4]).is_err());
        assert!(build_complex(&Bits::zeros(16), &[2, 2, 2, 2]).is_err());
    }

    #[test]
    fn coords_roundtrip() {
        let dims = [3, 4, 5];
        for i in 0..60 {
            assert_eq!(cell_index(&dims, &cell_coords(&dims, i)), i);
        }
    }
}
