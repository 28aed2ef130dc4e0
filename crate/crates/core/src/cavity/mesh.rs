//! Subdivided-icosahedron sphere meshes.

use nalgebra::Vector3;

/// Triangle on the unit sphere, vertices in outward (counter-clockwise
/// seen from outside) order.
#[derive(Debug, Clone, Copy)]
pub struct UnitTriangle {
    pub v: [Vector3<f64>; 3],
}

/// Faces of an icosahedron subdivided `level - 1` times and projected onto
/// the unit sphere: 20 * 4^(level-1) triangles.
pub fn unit_icosphere(level: u32) -> Vec<UnitTriangle> {
    let phi = (1.0 + 5.0_f64.sqrt()) / 2.0;
    let verts: Vec<Vector3<f64>> = [
        [-1.0, phi, 0.0],
        [1.0, phi, 0.0],
        [-1.0, -phi, 0.0],
        [1.0, -phi, 0.0],
        [0.0, -1.0, phi],
        [0.0, 1.0, phi],
        [0.0, -1.0, -phi],
        [0.0, 1.0, -phi],
        [phi, 0.0, -1.0],
        [phi, 0.0, 1.0],
        [-phi, 0.0, -1.0],
        [-phi, 0.0, 1.0],
    ]
    .iter()
    .map(|v| Vector3::new(v[0], v[1], v[2]).normalize())
    .collect();
    const FACES: [[usize; 3]; 20] = [
        [0, 11, 5],
        [0, 5, 1],
        [0, 1, 7],
        [0, 7, 10],
        [0, 10, 11],
        [1, 5, 9],
        [5, 11, 4],
        [11, 10, 2],
        [10, 7, 6],
        [7, 1, 8],
        [3, 9, 4],
        [3, 4, 2],
        [3, 2, 6],
        [3, 6, 8],
        [3, 8, 9],
        [4, 9, 5],
        [2, 4, 11],
        [6, 2, 10],
        [8, 6, 7],
        [9, 8, 1],
    ];
    let mut tris: Vec<UnitTriangle> = FACES
        .iter()
        .map(|f| UnitTriangle {
            v: [verts[f[0]], verts[f[1]], verts[f[2]]],
        })
        .collect();
    for _ in 1..level {
        let mut next = Vec::with_capacity(tris.len() * 4);
        for t in &tris {
            let m01 = (t.v[0] + t.v[1]).normalize();
            let m12 = (t.v[1] + t.v[2]).normalize();
            let m20 = (t.v[2] + t.v[0]).normalize();
            next.push(UnitTriangle { v: [t.v[0], m01, m20] });
            next.push(UnitTriangle { v: [m01, t.v[1], m12] });
            next.push(UnitTriangle { v: [m20, m12, t.v[2]] });
            next.push(UnitTriangle { v: [m01, m12, m20] });
        }
        tris = next;
    }
    tris
}

/// Spherical (geodesic) area of a unit-sphere triangle via l'Huilier's
/// theorem, so a full mesh tiles exactly 4 pi.
pub fn spherical_area(t: &UnitTriangle) -> f64 {
    let side = |a: &Vector3<f64>, b: &Vector3<f64>| a.dot(b).clamp(-1.0, 1.0).acos();
    let (a, b, c) = (
        side(&t.v[1], &t.v[2]),
        side(&t.v[0], &t.v[2]),
        side(&t.v[0], &t.v[1]),
    );
    let s = 0.5 * (a + b + c);
    let tan_quarter = ((s / 2.0).tan()
        * ((s - a) / 2.0).tan()
        * ((s - b) / 2.0).tan()
        * ((s - c) / 2.0).tan())
    .max(0.0)
    .sqrt();
    4.0 * tan_quarter.atan()
}

/// Evenly spread sample points inside a unit triangle (barycentric
/// midpoints of a uniform 4x subdivision), projected onto the sphere.
pub fn sample_points(t: &UnitTriangle, per_edge: usize) -> Vec<Vector3<f64>> {
    let mut pts = Vec::new();
    let n = per_edge as f64;
    for i in 0..per_edge {
        for j in 0..(per_edge - i) {
            // Two sub-triangles per (i, j) cell except on the diagonal.
            let corners = [
                (i as f64, j as f64),
                (i as f64 + 1.0, j as f64),
                (i as f64, j as f64 + 1.0),
            ];
            let centroid = |cs: &[(f64, f64); 3]| {
                let (mut u, mut v) = (0.0, 0.0);
                for &(a, b) in cs {
                    u += a / (3.0 * n);
                    v += b / (3.0 * n);
                }
                (u, v)
            };
            let (u, v) = centroid(&corners);
            pts.push((t.v[0] * (1.0 - u - v) + t.v[1] * u + t.v[2] * v).normalize());
            if i + j + 2 <= per_edge {
                let corners = [
                    (i as f64 + 1.0, j as f64),
                    (i as f64 + 1.0, j as f64 + 1.0),
                    (i as f64, j as f64 + 1.0),
                ];
                let (u, v) = centroid(&corners);
                pts.push((t.v[0] * (1.0 - u - v) + t.v[1] * u + t.v[2] * v).normalize());
            }
        }
    }
    pts
}
