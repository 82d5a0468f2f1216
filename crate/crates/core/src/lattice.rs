//! Periodic triangular lattices.

use serde::Serialize;

use crate::error::{Error, Result};

/// Vertex order inside each down triangle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum DownOrder {
    /// `(v(x+1,y), v(x,y+1), v(x+1,y+1))`: every edge is oriented the same
    /// way by both triangles that contain it.
    Branching,
    /// `(v(x+1,y), v(x+1,y+1), v(x,y+1))`: the horizontal edge runs against
    /// its orientation in the neighbouring up triangle.
    Skewed,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TriTorus {
    pub lx: usize,
    pub ly: usize,
    pub down_order: DownOrder,
    pub up: Vec<[usize; 3]>,
    pub down: Vec<[usize; 3]>,
}

impl TriTorus {
    pub fn new(lx: usize, ly: usize) -> Result<Self> {
        Self::with_order(lx, ly, DownOrder::Branching)
    }

    pub fn with_order(lx: usize, ly: usize, down_order: DownOrder) -> Result<Self> {
        if lx == 0 || ly == 0 {
            return Err(Error::InvalidLattice(format!("{lx}x{ly} torus")));
        }
        let v = |x: usize, y: usize| (y % ly) * lx + (x % lx);
        let mut up = Vec::with_capacity(lx * ly);
        let mut down = Vec::with_capacity(lx * ly);
        for y in 0..ly {
            for x in 0..lx {
                up.push([v(x, y), v(x + 1, y), v(x, y + 1)]);
                down.push(match down_order {
                    DownOrder::Branching => [v(x + 1, y), v(x, y + 1), v(x + 1, y + 1)],
                    DownOrder::Skewed => [v(x + 1, y), v(x + 1, y + 1), v(x, y + 1)],
                });
            }
        }
        Ok(TriTorus {
            lx,
            ly,
            down_order,
            up,
            down,
        })
    }

    /// Parse `LxxLy`, e.g. `3x3`.
    pub fn parse_dims(s: &str) -> Result<(usize, usize)> {
        let (a, b) = s
            .split_once(['x', 'X'])
            .ok_or_else(|| Error::Parse(format!("lattice `{s}` is not of the form LxxLy")))?;
        let p = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad lattice size `{t}`")))
        };
        Ok((p(a)?, p(b)?))
    }

    pub fn vertex(&self, x: usize, y: usize) -> usize {
        (y % self.ly) * self.lx + (x % self.lx)
    }

    pub fn vertex_count(&self) -> usize {
        self.lx * self.ly
    }

    /// Undirected edges, each listed once (with multiplicity on tiny tori).
    pub fn edge_count(&self) -> usize {
        3 * self.vertex_count()
    }

    /// Triangles containing `v`, tagged `true` for up triangles.
    pub fn triangles_at(&self, v: usize) -> Vec<(bool, [usize; 3])> {
        let up = self.up.iter().filter(|t| t.contains(&v)).map(|t| (true, *t));
        let down = self.down.iter().filter(|t| t.contains(&v)).map(|t| (false, *t));
        up.chain(down).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn incidences(t: &TriTorus) -> (Vec<usize>, Vec<usize>) {
        let mut up = vec![0; t.vertex_count()];
        let mut down = vec![0; t.vertex_count()];
        for tri in &t.up {
            for &v in tri {
                up[v] += 1;
            }
        }
        for tri in &t.down {
            for &v in tri {
                down[v] += 1;
            }
        }
        (up, down)
    }

    #[test]
    fn counts() {
        for (lx, ly) in [(1, 1), (2, 2), (3, 2), (3, 3)] {
            let t = TriTorus::new(lx, ly).unwrap();
            assert_eq!(t.up.len(), lx * ly);
            assert_eq!(t.down.len(), lx * ly);
            let (u, d) = incidences(&t);
            assert!(u.iter().all(|&c| c == 3) && d.iter().all(|&c| c == 3));
            // V - E + F on a torus
            let (v, e, f) = (t.vertex_count() as i64, t.edge_count() as i64, 2 * (lx * ly) as i64);
            assert_eq!(v - e + f, 0);
        }
        assert!(TriTorus::new(0, 2).is_err());
        assert_eq!(TriTorus::parse_dims("3x2").unwrap(), (3, 2));
        assert!(TriTorus::parse_dims("3").is_err());
    }

    #[test]
    fn branching_orientations_agree() {
        // on a torus large enough to have distinct edges, every directed edge of
        // a down triangle appears reversed nowhere among the up triangles
        let t = TriTorus::new(3, 3).unwrap();
        let dir = |tri: &[usize; 3]| vec![(tri[0], tri[1]), (tri[1], tri[2]), (tri[0], tri[2])];
        let ups: Vec<(usize, usize)> = t.up.iter().flat_map(dir).collect();
        for tri in &t.down {
            for (a, b) in dir(tri) {
                assert!(!ups.contains(&(b, a)));
                assert!(ups.contains(&(a, b)));
            }
        }
        let s = TriTorus::with_order(3, 3, DownOrder::Skewed).unwrap();
        let reversed = s.down.iter().flat_map(dir).any(|(a, b)| ups.contains(&(b, a)));
        assert!(reversed);
    }
}
