use quiver_core::{IceQuiver, VertexId};

use crate::canon::{hive_points, on_edge};
use crate::BuildError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    Ccw,
    Cw,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct HiveSpec {
    pub l: usize,
    pub orientation: Orientation,
    pub n: u32,
    pub dual: bool,
}

/// Steps of the three arrow families of a counter-clockwise hive.
pub(crate) const CCW_STEPS: [(i32, i32); 3] = [(0, 1), (-1, 0), (1, -1)];

/// A single hive quiver on raw labels, boundary frozen.
pub fn hive(spec: HiveSpec) -> Result<IceQuiver, BuildError> {
    let l = spec.l;
    if l < 2 {
        return Err(BuildError::SizeTooSmall { l, m: spec.n as usize });
    }
    let pts = hive_points(l);
    let label = |(i, j): (u32, u32)| VertexId::hive(spec.n, i, j, spec.dual);
    let frozen = pts.iter().filter(|&&(i, j)| {
        let e = on_edge(i, j, l);
        e.left || e.diagonal || e.right
    });
    let mut q = IceQuiver::new(pts.iter().map(|&p| label(p)), frozen.map(|&p| label(p)));
    for &(i, j) in &pts {
        for (di, dj) in CCW_STEPS {
            let t = (i as i32 + di, j as i32 + dj);
            if t.0 < 0 || t.1 < 0 {
                continue;
            }
            let t = (t.0 as u32, t.1 as u32);
            if !pts.contains(&t) {
                continue;
            }
            let (a, b) = match spec.orientation {
                Orientation::Ccw => (label((i, j)), label(t)),
                Orientation::Cw => (label(t), label((i, j))),
            };
            q.add_arrows(a, b, 1)?;
        }
    }
    Ok(q)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(l: usize, orientation: Orientation) -> HiveSpec {
        HiveSpec { l, orientation, n: 1, dual: false }
    }

    #[test]
    fn sizes() {
        let q = hive(spec(5, Orientation::Ccw)).unwrap();
        assert_eq!(q.vertices().len(), 18);
        assert_eq!(q.mutable_vertices().len(), 6);
        assert_eq!(q.frozen().len(), 12);
        let q = hive(spec(2, Orientation::Ccw)).unwrap();
        assert_eq!(q.vertices().len(), 3);
        assert!(q.mutable_vertices().is_empty());
        assert!(hive(spec(1, Orientation::Ccw)).is_err());
    }

    #[test]
    fn interior_neighbourhood_l3() {
        let q = hive(spec(3, Orientation::Ccw)).unwrap();
        let v = |i, j| VertexId::plain(1, i, j);
        let mut ins: Vec<_> = q.in_arrows(&v(1, 1)).into_iter().map(|x| x.0).collect();
        let mut outs: Vec<_> = q.out_arrows(&v(1, 1)).into_iter().map(|x| x.0).collect();
        ins.sort();
        outs.sort();
        let mut want_in = vec![v(1, 0), v(2, 1), v(0, 2)];
        let mut want_out = vec![v(1, 2), v(0, 1), v(2, 0)];
        want_in.sort();
        want_out.sort();
        assert_eq!(ins, want_in);
        assert_eq!(outs, want_out);
        let cw = hive(spec(3, Orientation::Cw)).unwrap();
        assert_eq!(cw, q.reversed());
    }

    #[test]
    fn unit_triangles_are_oriented_cycles() {
        for l in 2..=6 {
            let q = hive(spec(l, Orientation::Ccw)).unwrap();
            let v = |i: u32, j: u32| VertexId::plain(1, i, j);
            let has = |p: (u32, u32)| q.contains(&v(p.0, p.1));
            let l = l as u32;
            for i in 0..l {
                for j in 0..l - i {
                    let tris = [[(i, j), (i + 1, j), (i, j + 1)], [(i + 1, j), (i + 1, j + 1), (i, j + 1)]];
                    for t in tris {
                        if !t.iter().all(|&p| has(p)) {
                            continue;
                        }
                        let [a, b, c] = t.map(|p| v(p.0, p.1));
                        let fwd =
                            q.multiplicity(&a, &b) == 1 && q.multiplicity(&b, &c) == 1 && q.multiplicity(&c, &a) == 1;
                        let back =
                            q.multiplicity(&b, &a) == 1 && q.multiplicity(&c, &b) == 1 && q.multiplicity(&a, &c) == 1;
                        assert!(fwd || back, "triangle {t:?} at l = {l}");
                    }
                }
            }
        }
    }
}
