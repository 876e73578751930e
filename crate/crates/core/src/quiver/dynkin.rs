use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use super::ExchangeMatrix;
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    D,
    E,
    AffineA,
    AffineD,
    AffineE,
    None,
}

/// A Dynkin or affine Dynkin type. For affine types `rank` is the subscript,
/// so the diagram has `rank + 1` vertices. For `Family::None`, `rank` is the
/// number of vertices of the component.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DynkinType {
    pub family: Family,
    pub rank: usize,
}

impl DynkinType {
    pub const fn a(r: usize) -> Self {
        DynkinType { family: Family::A, rank: r }
    }
    pub const fn d(r: usize) -> Self {
        DynkinType { family: Family::D, rank: r }
    }
    pub const fn e(r: usize) -> Self {
        DynkinType { family: Family::E, rank: r }
    }

    pub fn is_finite(&self) -> bool {
        match self.family {
            Family::A => self.rank >= 1,
            Family::D => self.rank >= 4,
            Family::E => (6..=8).contains(&self.rank),
            _ => false,
        }
    }

    pub fn is_affine(&self) -> bool {
        matches!(self.family, Family::AffineA | Family::AffineD | Family::AffineE)
    }

    /// Number of vertices of the diagram.
    pub fn vertex_count(&self) -> usize {
        if self.is_affine() {
            self.rank + 1
        } else {
            self.rank
        }
    }

    /// Short name: `A3`, `D5`, `E6`, `affine-D4`, `E9/affine-E8`.
    pub fn name(&self) -> String {
        match self.family {
            Family::A => alloc::format!("A{}", self.rank),
            Family::D => alloc::format!("D{}", self.rank),
            Family::E => alloc::format!("E{}", self.rank),
            Family::AffineA => alloc::format!("affine-A{}", self.rank),
            Family::AffineD => alloc::format!("affine-D{}", self.rank),
            Family::AffineE if self.rank == 8 => String::from("E9/affine-E8"),
            Family::AffineE => alloc::format!("affine-E{}", self.rank),
            Family::None => alloc::format!("none({})", self.rank),
        }
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl FromStr for DynkinType {
    type Err = Error;

    /// Parses `A3`, `D5`, `E6`, `E9`, `affine-D4`, `E9/affine-E8`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::NotFinite(String::from(s));
        if s == "E9" || s == "E9/affine-E8" {
            return Ok(DynkinType { family: Family::AffineE, rank: 8 });
        }
        let (family, rest) = if let Some(r) = s.strip_prefix("affine-") {
            let f = match r.as_bytes().first() {
                Some(b'A') => Family::AffineA,
                Some(b'D') => Family::AffineD,
                Some(b'E') => Family::AffineE,
                _ => return Err(bad()),
            };
            (f, &r[1..])
        } else {
            let f = match s.as_bytes().first() {
                Some(b'A') => Family::A,
                Some(b'D') => Family::D,
                Some(b'E') => Family::E,
                _ => return Err(bad()),
            };
            (f, &s[1..])
        };
        let rank: usize = rest.parse().map_err(|_| bad())?;
        let t = DynkinType { family, rank };
        let ok = match family {
            Family::A => rank >= 1,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::AffineA => rank >= 1,
            Family::AffineD => rank >= 4,
            Family::AffineE => (6..=8).contains(&rank),
            Family::None => false,
        };
        if ok {
            Ok(t)
        } else {
            Err(bad())
        }
    }
}

/// Type of each connected component (ordered by smallest vertex).
///
/// A component is recognized only if it is simply laced and acyclic; otherwise
/// it is reported as `Family::None`.
pub fn recognize(b: &ExchangeMatrix) -> Vec<DynkinType> {
    b.connected_components().into_iter().map(|c| recognize_component(&b.restrict(&c))).collect()
}

/// Recognizes a connected quiver.
pub fn recognize_component(b: &ExchangeMatrix) -> DynkinType {
    let n = b.size();
    let none = DynkinType { family: Family::None, rank: n };
    if b.max_abs_entry() > 1 || !b.is_acyclic() {
        return none;
    }
    let adj: Vec<Vec<usize>> = (0..n).map(|v| (0..n).filter(|&u| b.get(v, u) != 0).collect()).collect();
    let edges: usize = adj.iter().map(|a| a.len()).sum::<usize>() / 2;
    let deg: Vec<usize> = adj.iter().map(|a| a.len()).collect();
    if n == 0 {
        return none;
    }
    if edges == n {
        // unicyclic; affine A iff the whole graph is the cycle
        if deg.iter().all(|&d| d == 2) && n >= 2 {
            return DynkinType { family: Family::AffineA, rank: n - 1 };
        }
        return none;
    }
    if edges + 1 != n {
        return none;
    }
    let branch: Vec<usize> = (0..n).filter(|&v| deg[v] >= 3).collect();
    match branch.len() {
        0 => DynkinType::a(n),
        1 => {
            let c = branch[0];
            let mut legs: Vec<usize> = adj[c].iter().map(|&u| leg_length(&adj, c, u)).collect();
            legs.sort_unstable();
            match (deg[c], legs.as_slice()) {
                (4, [1, 1, 1, 1]) => DynkinType { family: Family::AffineD, rank: 4 },
                (3, [1, 1, _]) => DynkinType::d(n),
                (3, [1, 2, 2]) => DynkinType::e(6),
                (3, [1, 2, 3]) => DynkinType::e(7),
                (3, [1, 2, 4]) => DynkinType::e(8),
                (3, [2, 2, 2]) => DynkinType { family: Family::AffineE, rank: 6 },
                (3, [1, 3, 3]) => DynkinType { family: Family::AffineE, rank: 7 },
                (3, [1, 2, 5]) => DynkinType { family: Family::AffineE, rank: 8 },
                _ => none,
            }
        }
        2 => {
            let ok = branch.iter().all(|&c| deg[c] == 3 && adj[c].iter().filter(|&&u| deg[u] == 1).count() >= 2);
            if ok && n >= 6 {
                DynkinType { family: Family::AffineD, rank: n - 1 }
            } else {
                none
            }
        }
        _ => none,
    }
}

/// Number of vertices on the leg starting at `u` away from `c`, in a tree
/// where the leg is a path.
fn leg_length(adj: &[Vec<usize>], c: usize, mut u: usize) -> usize {
    let mut prev = c;
    let mut len = 1;
    loop {
        let next: Vec<usize> = adj[u].iter().copied().filter(|&x| x != prev).collect();
        match next.as_slice() {
            [] => return len,
            [x] => {
                prev = u;
                u = *x;
                len += 1;
            }
            _ => return usize::MAX,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn path(n: usize) -> ExchangeMatrix {
        let arrows: Vec<(usize, usize)> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
        ExchangeMatrix::from_arrows(n, &arrows).unwrap()
    }

    #[test]
    fn test_basic_shapes() {
        assert_eq!(recognize(&path(1)), vec![DynkinType::a(1)]);
        assert_eq!(recognize(&path(5)), vec![DynkinType::a(5)]);
        // star with 3 leaves: D4; with 4 leaves: affine D4
        let d4 = ExchangeMatrix::from_arrows(4, &[(0, 1), (0, 2), (3, 0)]).unwrap();
        assert_eq!(recognize(&d4), vec![DynkinType::d(4)]);
        let dt4 = ExchangeMatrix::from_arrows(5, &[(0, 1), (0, 2), (3, 0), (4, 0)]).unwrap();
        assert_eq!(recognize(&dt4), vec![DynkinType { family: Family::AffineD, rank: 4 }]);
        // acyclic square: affine A3; oriented triangle: none
        let sq = ExchangeMatrix::from_arrows(4, &[(0, 1), (1, 2), (0, 3), (3, 2)]).unwrap();
        assert_eq!(recognize(&sq), vec![DynkinType { family: Family::AffineA, rank: 3 }]);
        let tri = ExchangeMatrix::from_arrows(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(recognize(&tri)[0].family, Family::None);
        let dbl = ExchangeMatrix::from_arrows(2, &[(0, 1), (0, 1)]).unwrap();
        assert_eq!(recognize(&dbl)[0].family, Family::None);
    }

    #[test]
    fn test_affine_d() {
        // two branch points joined by a path of length 2: affine D6
        let q = ExchangeMatrix::from_arrows(7, &[(0, 2), (1, 2), (2, 3), (3, 4), (4, 5), (4, 6)]).unwrap();
        assert_eq!(recognize(&q), vec![DynkinType { family: Family::AffineD, rank: 6 }]);
        // adjacent branch points: affine D5
        let q = ExchangeMatrix::from_arrows(6, &[(0, 2), (1, 2), (2, 3), (3, 4), (3, 5)]).unwrap();
        assert_eq!(recognize(&q), vec![DynkinType { family: Family::AffineD, rank: 5 }]);
    }

    #[test]
    fn test_names_roundtrip() {
        for s in ["A1", "A12", "D4", "E6", "E8", "affine-D4", "affine-A3", "affine-E6", "E9/affine-E8"] {
            assert_eq!(s.parse::<DynkinType>().unwrap().name(), s);
        }
        assert_eq!("E9".parse::<DynkinType>().unwrap().name(), "E9/affine-E8");
        assert!("D3".parse::<DynkinType>().is_err());
        assert!("E5".parse::<DynkinType>().is_err());
    }
}
