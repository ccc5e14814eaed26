//! Finite set systems and the hull operator they induce.

use crate::bits::{Bits, Subfamily, MAX_MASK_MEMBERS};
use crate::error::{Error, Result};

/// A finite ground set `{0..ground_size}` together with an ordered family of
/// subsets. Duplicate members are allowed and stay distinct by index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetSystem {
    ground_size: usize,
    sets: Vec<Bits>,
    names: Vec<String>,
}

impl SetSystem {
    pub fn new(ground_size: usize, sets: Vec<Bits>) -> Result<Self> {
        let names = (0..sets.len()).map(|i| format!("S{i}")).collect();
        Self::with_names(ground_size, sets, names)
    }

    pub fn with_names(ground_size: usize, sets: Vec<Bits>, names: Vec<String>) -> Result<Self> {
        if let Some(i) = sets.iter().position(|s| s.len() != ground_size) {
            return Err(Error::input(format!(
                "member {i} has {} entries, expected {ground_size}",
                sets[i].len()
            )));
        }
        if names.len() != sets.len() {
            return Err(Error::input("one name per member required"));
        }
        Ok(SetSystem {
            ground_size,
            sets,
            names,
        })
    }

    /// Builds a system from member element lists.
    pub fn from_lists(ground_size: usize, lists: &[&[usize]]) -> Result<Self> {
        let mut sets = Vec::with_capacity(lists.len());
        for (i, l) in lists.iter().enumerate() {
            if let Some(&x) = l.iter().find(|&&x| x >= ground_size) {
                return Err(Error::input(format!(
                    "member {i} lists element {x} outside ground of size {ground_size}"
                )));
            }
            sets.push(Bits::from_indices(ground_size, l.iter().copied()));
        }
        SetSystem::new(ground_size, sets)
    }

    pub fn ground_size(&self) -> usize {
        self.ground_size
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

    pub fn set(&self, i: usize) -> &Bits {
        &self.sets[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn push(&mut self, name: impl Into<String>, set: Bits) -> Result<()> {
        if set.len() != self.ground_size {
            return Err(Error::input("member length differs from ground size"));
        }
        self.sets.push(set);
        self.names.push(name.into());
        Ok(())
    }

    /// The family with member `i` deleted.
    pub fn without_member(&self, i: usize) -> SetSystem {
        let mut s = self.clone();
        s.sets.remove(i);
        s.names.remove(i);
        s
    }

    /// The subfamily selected by `mask`, as a standalone system.
    pub fn restrict(&self, mask: Subfamily) -> SetSystem {
        let keep: Vec<usize> = mask.members().filter(|&i| i < self.len()).collect();
        SetSystem {
            ground_size: self.ground_size,
            sets: keep.iter().map(|&i| self.sets[i].clone()).collect(),
            names: keep.iter().map(|&i| self.names[i].clone()).collect(),
        }
    }

    /// Mask of all members. Fails for families with more than 64 members.
    pub fn full_mask(&self) -> Result<Subfamily> {
        self.check_mask_capacity()?;
        Ok(Subfamily::full(self.len()))
    }

    pub(crate) fn check_mask_capacity(&self) -> Result<()> {
        if self.len() > MAX_MASK_MEMBERS {
            return Err(Error::size(format!(
                "family has {} members; subfamily analysis supports at most {MAX_MASK_MEMBERS}",
                self.len()
            )));
        }
        Ok(())
    }

    pub(crate) fn check_point(&self, x: usize) -> Result<()> {
        if x >= self.ground_size {
            return Err(Error::input(format!(
                "point {x} outside ground of size {}",
                self.ground_size
            )));
        }
        Ok(())
    }

    /// Membership signature of every ground element: bit `i` set iff member
    /// `i` contains the element.
    pub fn signatures(&self) -> Result<Vec<u64>> {
        self.check_mask_capacity()?;
        let mut sig = vec![0u64; self.ground_size];
        for (i, s) in self.sets.iter().enumerate() {
            for x in s.iter() {
                sig[x] |= 1 << i;
            }
        }
        Ok(sig)
    }

    /// Intersection of the members in `mask`; the whole ground set for the
    /// empty mask.
    pub fn intersection(&self, mask: Subfamily) -> Bits {
        let mut acc = Bits::ones(self.ground_size);
        for i in mask.members() {
            acc.intersect_with(&self.sets[i]);
        }
        acc
    }

    pub fn intersects(&self, mask: Subfamily) -> bool {
        let mut members = mask.members();
        match members.next() {
            None => self.ground_size > 0,
            Some(first) => {
                let mut acc = self.sets[first].clone();
                for i in members {
                    acc.intersect_with(&self.sets[i]);
                    if acc.none() {
                        return false;
                    }
                }
                !acc.none()
            }
        }
    }

    /// The hull of `points` with respect to the members in `active`: the
    /// intersection of every active member containing all points, or the
    /// whole ground set when no active member does.
    pub fn hull(&self, active: Subfamily, points: &PointSet) -> Result<Bits> {
        self.check_mask_capacity()?;
        let mut containing = active.0 & Subfamily::full(self.len()).0;
        for &p in points.elements() {
            self.check_point(p)?;
            containing &= (0..self.len())
                .filter(|&i| self.sets[i].contains(p))
                .fold(0u64, |m, i| m | (1 << i));
        }
        Ok(self.intersection(Subfamily(containing)))
    }

    /// Collapses ground elements that belong to exactly the same members.
    ///
    /// Classes are numbered by first occurrence; the returned map sends each
    /// ground element to its class.
    pub fn quotient(&self) -> (SetSystem, Vec<usize>) {
        let columns: Vec<Vec<bool>> = (0..self.ground_size)
            .map(|x| self.sets.iter().map(|s| s.contains(x)).collect())
            .collect();
        let mut reps: Vec<&Vec<bool>> = Vec::new();
        let mut class_of = Vec::with_capacity(self.ground_size);
        let mut index = std::collections::HashMap::new();
        for col in &columns {
            let c = *index.entry(col).or_insert_with(|| {
                reps.push(col);
                reps.len() - 1
            });
            class_of.push(c);
        }
        let q = reps.len();
        let sets = (0..self.len())
            .map(|i| Bits::from_indices(q, (0..q).filter(|&c| reps[c][i])))
            .collect();
        let quotient = SetSystem {
            ground_size: q,
            sets,
            names: self.names.clone(),
        };
        (quotient, class_of)
    }
}

/// A multiset of ground elements.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PointSet(Vec<usize>);

impl PointSet {
    pub fn new(elements: Vec<usize>) -> Self {
        PointSet(elements)
    }

    pub fn elements(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn validate(&self, system: &SetSystem) -> Result<()> {
        self.0.iter().try_for_each(|&p| system.check_point(p))
    }
}

impl From<Vec<usize>> for PointSet {
    fn from(v: Vec<usize>) -> Self {
        PointSet(v)
    }
}

/// A split of a point multiset into two nonempty blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition2 {
    block0: PointSet,
    block1: PointSet,
}

impl Partition2 {
    pub fn new(block0: Vec<usize>, block1: Vec<usize>) -> Result<Self> {
        if block0.is_empty() || block1.is_empty() {
            return Err(Error::input("both partition blocks must be nonempty"));
        }
        Ok(Partition2 {
            block0: PointSet(block0),
            block1: PointSet(block1),
        })
    }

    /// The split of `points` whose second block holds the positions set in
    /// `block1_positions`.
    pub fn from_positions(points: &PointSet, block1_positions: u64) -> Result<Self> {
        let (mut b0, mut b1) = (Vec::new(), Vec::new());
        for (pos, &p) in points.elements().iter().enumerate() {
            if (block1_positions >> pos) & 1 == 1 {
                b1.push(p);
            } else {
                b0.push(p);
            }
        }
        Partition2::new(b0, b1)
    }

    pub fn block0(&self) -> &PointSet {
        &self.block0
    }

    pub fn block1(&self) -> &PointSet {
        &self.block1
    }
}

/// A surjective assignment of colors `0..color_count` to family members.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    color_count: usize,
    assignment: Vec<(usize, usize)>,
}

impl Coloring {
    /// `assignment` lists `(member, color)` pairs; each member at most once.
    pub fn new(color_count: usize, assignment: Vec<(usize, usize)>) -> Result<Self> {
        let mut used = vec![false; color_count];
        let mut seen = std::collections::HashSet::new();
        for &(member, color) in &assignment {
            if color >= color_count {
                return Err(Error::input(format!(
                    "color {color} out of range for {color_count} colors"
                )));
            }
            if !seen.insert(member) {
                return Err(Error::input(format!("member {member} colored twice")));
            }
            used[color] = true;
        }
        if let Some(c) = used.iter().position(|u| !u) {
            return Err(Error::input(format!(
                "coloring is not surjective: color {c} unused"
            )));
        }
        Ok(Coloring {
            color_count,
            assignment,
        })
    }

    /// Colors each member of `classes[c]` with color `c`.
    pub fn from_classes(classes: &[Subfamily]) -> Result<Self> {
        let assignment = classes
            .iter()
            .enumerate()
            .flat_map(|(c, m)| m.members().map(move |i| (i, c)))
            .collect();
        Coloring::new(classes.len(), assignment)
    }

    pub fn color_count(&self) -> usize {
        self.color_count
    }

    pub fn assignment(&self) -> &[(usize, usize)] {
        &self.assignment
    }

    pub fn domain(&self) -> Subfamily {
        Subfamily::from_members(self.assignment.iter().map(|&(m, _)| m))
    }

    pub fn classes(&self) -> Vec<Subfamily> {
        let mut classes = vec![Subfamily::EMPTY; self.color_count];
        for &(m, c) in &self.assignment {
            classes[c] = classes[c].with(m);
        }
        classes
    }
}
