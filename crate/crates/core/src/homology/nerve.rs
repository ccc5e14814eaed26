//! Nerve complexes: subfamilies with nonempty intersection.

use crate::bits::Subfamily;
use crate::error::Result;
use crate::intersection::for_each_intersecting;
use crate::set_system::SetSystem;

/// Faces of the nerve up to a dimension cap; `faces[q]` lists the
/// `(q + 1)`-member subfamilies with a common point in increasing mask order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NerveComplex {
    pub vertex_count: usize,
    pub faces: Vec<Vec<Subfamily>>,
}

impl NerveComplex {
    pub fn face_count(&self, q: usize) -> usize {
        self.faces.get(q).map_or(0, Vec::len)
    }

    pub fn contains(&self, face: Subfamily) -> bool {
        face.len()
            .checked_sub(1)
            .and_then(|q| self.faces.get(q))
            .is_some_and(|f| f.binary_search(&face).is_ok())
    }
}

pub fn nerve(system: &SetSystem, dim_cap: usize) -> Result<NerveComplex> {
    let mut faces: Vec<Vec<Subfamily>> = vec![Vec::new(); dim_cap + 1];
    for_each_intersecting(system, dim_cap + 1, |mask, size| faces[size - 1].push(mask))?;
    for f in &mut faces {
        f.sort_unstable();
    }
    Ok(NerveComplex {
        vertex_count: system.len(),
        faces,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bits::submasks;

    #[test]
    fn hollow_triangle() {
        let s = SetSystem::from_lists(3, &[&[0, 1], &[1, 2], &[0, 2]]).unwrap();
        let n = nerve(&s, 2).unwrap();
        assert_eq!(
            (n.face_count(0), n.face_count(1), n.face_count(2)),
            (3, 3, 0)
        );
    }

    #[test]
    fn common_point_gives_full_simplex() {
        let s = SetSystem::from_lists(2, &[&[0], &[0, 1], &[0], &[0, 1]]).unwrap();
        let n = nerve(&s, 3).unwrap();
        assert_eq!(
            (0..4).map(|q| n.face_count(q)).collect::<Vec<_>>(),
            vec![4, 6, 4, 1]
        );
    }

    #[test]
    fn pairwise_disjoint_isolated_vertices() {
        let s = SetSystem::from_lists(3, &[&[0], &[1], &[2]]).unwrap();
        let n = nerve(&s, 2).unwrap();
        assert_eq!((n.face_count(0), n.face_count(1)), (3, 0));
    }

    #[test]
    fn downward_closed() {
        let s = SetSystem::from_lists(4, &[&[0, 1], &[1, 2], &[2, 3], &[0, 1, 2], &[3]]).unwrap();
        let n = nerve(&s, 4).unwrap();
        for f in n.faces.iter().flatten() {
            for sub in submasks(f.0).filter(|&m| m != 0) {
                assert!(n.contains(Subfamily(sub)));
            }
        }
    }
}
