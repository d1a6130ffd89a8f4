//! `d(i)` as the shortest canonical class, and `d(i, j)` by translation.

use serde::Serialize;

use crate::params::CirculantParams;
use crate::path::{class_iter, realize_path, translate_endpoints, PathClass, RealizedPath};
use crate::Result;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DistanceResult {
    pub value: u64,
    /// Shortest class; ties go to the earlier family, then the smaller `t`.
    pub argmin_class: PathClass,
    pub realized: RealizedPath,
}

/// Length of the shortest canonical class of `i`, without building a path.
#[cfg(test)]
pub(crate) fn min_class_len(p: &CirculantParams, i: u64) -> u64 {
    class_iter(p, i).map(|c| c.len()).min().unwrap_or(0)
}

pub(crate) fn argmin_class(p: &CirculantParams, i: u64) -> PathClass {
    class_iter(p, i)
        .min_by_key(PathClass::rank_key)
        .expect("P1 and P2 always exist")
}

pub fn distance_from_zero(p: &CirculantParams, i: u64) -> Result<DistanceResult> {
    p.check_vertex(i)?;
    let class = argmin_class(p, i);
    let realized = realize_path(p, &class.shape, i)?;
    Ok(DistanceResult { value: class.len(), argmin_class: class, realized })
}

/// Distance between `i` and `j`, computed on the translated pair `(0, j - i mod n)`.
/// The realized path therefore starts at `0`.
pub fn distance(p: &CirculantParams, i: u64, j: u64) -> Result<DistanceResult> {
    let k = translate_endpoints(p, i, j)?;
    distance_from_zero(p, k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::path::{Direction, Family, PathShape};

    fn c10() -> CirculantParams {
        CirculantParams::new(10, 4).unwrap()
    }

    #[test]
    fn vertex_six_uses_backward_chord() {
        let r = distance_from_zero(&c10(), 6).unwrap();
        assert_eq!(r.value, 1);
        assert_eq!(r.argmin_class.family, Family::P3t);
        assert_eq!(r.argmin_class.t, Some(1));
        assert_eq!(
            r.argmin_class.shape,
            PathShape::new(0, Direction::Clockwise, 1, Direction::Counterclockwise)
        );
        assert_eq!(r.realized.to_string(), "0 ->c- 6");
    }

    #[test]
    fn zero_and_one() {
        let p = c10();
        let r = distance_from_zero(&p, 0).unwrap();
        assert_eq!(r.value, 0);
        assert_eq!(r.realized.vertices, vec![0]);
        assert_eq!(distance_from_zero(&p, 1).unwrap().value, 1);
    }

    #[test]
    fn vertex_five_from_bfs() {
        // C_10(1,4): 0 -> 4 -> 5 and no single generator reaches 5.
        assert_eq!(distance_from_zero(&c10(), 5).unwrap().value, 2);
    }

    #[test]
    fn pair_distances() {
        let p = c10();
        let r = distance(&p, 6, 9).unwrap();
        assert_eq!(r.value, 2);
        assert_eq!(
            r.argmin_class.shape,
            PathShape::new(1, Direction::Counterclockwise, 1, Direction::Clockwise)
        );
        assert_eq!(distance(&p, 6, 2).unwrap().value, 1);
        assert_eq!(distance(&p, 3, 3).unwrap().value, 0);
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(distance_from_zero(&c10(), 10).is_err());
        assert!(distance(&c10(), 0, 11).is_err());
    }

    #[test]
    fn value_matches_realized_length() {
        let p = CirculantParams::new(37, 8).unwrap();
        for i in 0..37 {
            let r = distance_from_zero(&p, i).unwrap();
            assert_eq!(r.value as usize, r.realized.len());
            assert_eq!(r.value, r.argmin_class.len());
            assert_eq!(*r.realized.vertices.last().unwrap(), i);
            assert!(r.realized.is_genuine_path);
            assert_eq!(r.value, min_class_len(&p, i));
        }
    }
}
