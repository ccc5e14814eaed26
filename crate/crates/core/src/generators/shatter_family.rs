use crate::bits::{Bits, Subfamily};
use crate::error::{Error, Result};
use crate::homology::CubicalSetSystem;

/// Limits for the ring construction.
#[derive(Clone, Copy, Debug)]
pub struct ShatterOptions {
    /// Longest accepted prefix of `f`.
    pub max_len: usize,
    /// Largest accepted value of `f`.
    pub max_value: usize,
    /// Outer side of every ring; chosen per box when `None`.
    pub ring_side: Option<usize>,
}

impl Default for ShatterOptions {
    fn default() -> Self {
        ShatterOptions {
            max_len: 8,
            max_value: 6,
            ring_side: None,
        }
    }
}

/// A generated family together with the member range of each box.
#[derive(Clone, Debug)]
pub struct ShatterFamily {
    pub system: CubicalSetSystem,
    pub f: Vec<usize>,
    /// `boxes[i - 1]` holds the members `F_1^(i)..F_i^(i)`.
    pub boxes: Vec<Subfamily>,
}

impl ShatterFamily {
    pub fn box_members(&self, i: usize) -> Subfamily {
        self.boxes[i - 1]
    }
}

fn ring_perimeter(side: usize) -> usize {
    4 * side - 4
}

/// Perimeter cells of a square ring with top-left `(r0, c0)`, clockwise from
/// the top-left corner.
fn ring_cells(r0: usize, c0: usize, side: usize) -> Vec<(usize, usize)> {
    let last = side - 1;
    let mut out = Vec::with_capacity(ring_perimeter(side));
    out.extend((0..last).map(|c| (r0, c0 + c)));
    out.extend((0..last).map(|r| (r0 + r, c0 + last)));
    out.extend((0..last).map(|c| (r0 + last, c0 + last - c)));
    out.extend((0..last).map(|r| (r0 + last - r, c0)));
    out
}

/// A 2-dimensional family whose 0-th homological shatter function equals `f`
/// on `1..=len(f)`.
///
/// Box `i` holds `f(i)` disjoint thickness-1 square rings. Each ring's cells
/// are cut into `i` contiguous arcs labelled `1..=i`, and member `F_k^(i)`
/// is the box minus every arc labelled `k`. Removing all labels isolates the
/// inside of each ring; any surviving arc reconnects it to the outside.
pub fn gen_shatter_family(f: &[usize], options: ShatterOptions) -> Result<ShatterFamily> {
    if f.len() > options.max_len {
        return Err(Error::Size(format!(
            "prefix of length {} exceeds the limit {}",
            f.len(),
            options.max_len
        )));
    }
    if let Some(w) = f.windows(2).position(|w| w[1] < w[0]) {
        return Err(Error::Validation(format!(
            "f must be non-decreasing: f({}) = {} > f({}) = {}",
            w + 1,
            f[w],
            w + 2,
            f[w + 1]
        )));
    }
    if let Some(&v) = f.iter().find(|&&v| v > options.max_value) {
        return Err(Error::Size(format!(
            "value {v} exceeds the per-box ring limit {}",
            options.max_value
        )));
    }

    let mut sides = Vec::with_capacity(f.len());
    for i in 1..=f.len() {
        let needed = (i + 4).div_ceil(4).max(3);
        let side = match options.ring_side {
            None => needed,
            Some(s) if s >= needed => s,
            Some(s) => {
                let count = f[i - 1].max(1);
                return Err(Error::Size(format!(
                    "rings of side {s} hold {} perimeter cells but box {i} needs {i} arcs \
                     (requires ring side >= {needed}, box of {} x {} cells)",
                    if s >= 3 { ring_perimeter(s) } else { 0 },
                    needed + 2,
                    count * (needed + 1) + 1
                )));
            }
        };
        sides.push(side);
    }

    let heights: Vec<usize> = sides.iter().map(|s| s + 2).collect();
    let widths: Vec<usize> = sides
        .iter()
        .zip(f)
        .map(|(s, &fi)| fi.max(1) * (s + 1) + 1)
        .collect();
    let rows = heights.iter().copied().max().unwrap_or(1);
    let cols = (widths.iter().sum::<usize>() + widths.len().saturating_sub(1)).max(1);
    let dims = vec![rows, cols];
    let at = |r: usize, c: usize| r * cols + c;

    let mut sets = Vec::new();
    let mut names = Vec::new();
    let mut boxes = Vec::new();
    let mut left = 0;
    for (idx, &count) in f.iter().enumerate() {
        let i = idx + 1;
        let side = sides[idx];
        let (h, w) = (heights[idx], widths[idx]);
        let box_cells = Bits::from_indices(
            rows * cols,
            (0..h).flat_map(|r| (0..w).map(move |c| at(r, left + c))),
        );
        // arcs[k] = cells labelled k + 1 across every ring of the box.
        let mut arcs = vec![Bits::zeros(rows * cols); i];
        for ring in 0..count {
            let cells = ring_cells(1, left + 1 + ring * (side + 1), side);
            let p = cells.len();
            for (pos, &(r, c)) in cells.iter().enumerate() {
                arcs[pos * i / p].insert(at(r, c));
            }
        }
        let first = sets.len();
        for (k, arc) in arcs.iter().enumerate() {
            let mut member = box_cells.clone();
            member.difference_with(arc);
            sets.push(member);
            names.push(format!("F{i}_{}", k + 1));
        }
        boxes.push(Subfamily::from_members(first..sets.len()));
        left += w + 1;
    }
    Ok(ShatterFamily {
        system: CubicalSetSystem::with_names(dims, sets, names)?,
        f: f.to_vec(),
        boxes,
    })
}
