//! Volume as the maximum of the tetrahedron volume sum over angle structures.
//!
//! The equality constraints (angle sum pi per tetrahedron, prescribed sum per
//! edge class) are eliminated by writing `x = x_p + N z` with `N` an
//! orthonormal basis of the constraint null space. The reduced objective is
//! strictly concave on the open polytope, so damped Newton in `z` converges
//! to the unique interior maximizer.

use std::f64::consts::PI;

use nalgebra::{DMatrix, DVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::lobachevsky::lob;
use super::triangulation::{apex_order, cone_from, IdealTriangulation};
use crate::enumeration::check_validity_with;
use crate::error::{Error, Result};
use crate::planar::{trace_faces, PlanarGraph};

#[derive(Clone, Copy, Debug)]
pub struct SolverOptions {
    /// Stop once the reduced gradient norm falls below this.
    pub gradient_tolerance: f64,
    pub max_iterations: usize,
    /// Seed for the random restarts of the feasibility phase.
    pub seed: u64,
    /// Angles below this count as degenerate.
    pub min_angle: f64,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions {
            gradient_tolerance: 1e-10,
            max_iterations: 200,
            seed: 0,
            min_angle: 1e-6,
        }
    }
}

/// Dihedral angles per tetrahedron, one per corner of the base triangle.
#[derive(Clone, Debug, PartialEq)]
pub struct AngleStructure {
    pub angles: Vec<[f64; 3]>,
}

impl AngleStructure {
    pub fn volume(&self) -> f64 {
        self.angles.iter().flatten().map(|&a| lob(a)).sum()
    }

    /// Largest violation of the linear constraints of `tri`.
    pub fn max_residual(&self, tri: &IdealTriangulation) -> f64 {
        let per_tet = self
            .angles
            .iter()
            .map(|a| (a.iter().sum::<f64>() - PI).abs())
            .fold(0.0, f64::max);
        let per_class = tri
            .edge_classes()
            .iter()
            .map(|c| {
                let s: f64 = c.members.iter().map(|&(t, s)| self.angles[t][s]).sum();
                (s - c.kind.target()).abs()
            })
            .fold(0.0, f64::max);
        per_tet.max(per_class)
    }

    pub fn min_angle(&self) -> f64 {
        self.angles
            .iter()
            .flatten()
            .copied()
            .fold(f64::INFINITY, f64::min)
    }
}

#[derive(Clone, Debug)]
pub struct VolumeSolution {
    pub volume: f64,
    pub apex: usize,
    pub angles: AngleStructure,
    pub iterations: usize,
    pub gradient_norm: f64,
    /// Objective value after each accepted step, starting point first.
    pub objective_history: Vec<f64>,
}

/// Hyperbolic volume of the ideal right-angled realization of `g`.
pub fn ideal_volume(g: &PlanarGraph) -> Result<f64> {
    ideal_volume_with(g, &SolverOptions::default()).map(|s| s.volume)
}

/// Tries apexes in [`apex_order`] until one yields an interior maximizer.
pub fn ideal_volume_with(g: &PlanarGraph, opts: &SolverOptions) -> Result<VolumeSolution> {
    let fs = trace_faces(g);
    if let Some(w) = check_validity_with(g, &fs).failure_witness {
        return Err(Error::Precondition(format!("graph is not realizable: {w}")));
    }
    let mut last = None;
    for apex in apex_order(g, &fs) {
        match maximize_volume(&cone_from(g, &fs, apex), opts) {
            Ok(sol) => return Ok(sol),
            Err(e) if e.is_retriable() => last = Some(e),
            Err(e) => return Err(e),
        }
    }
    Err(last
        .map(|e| Error::Degenerate {
            apex: usize::MAX,
            reason: format!("triangulation degenerate for every apex; last failure: {e}"),
        })
        .unwrap_or_else(|| Error::Degenerate {
            apex: usize::MAX,
            reason: "no apex".into(),
        }))
}

/// Volume computed from the triangulation coned at `apex`.
pub fn ideal_volume_at_apex(
    g: &PlanarGraph,
    apex: usize,
    opts: &SolverOptions,
) -> Result<VolumeSolution> {
    if apex >= g.vertex_count() {
        return Err(Error::Domain(format!("apex {apex} out of range")));
    }
    let fs = trace_faces(g);
    if let Some(w) = check_validity_with(g, &fs).failure_witness {
        return Err(Error::Precondition(format!("graph is not realizable: {w}")));
    }
    maximize_volume(&cone_from(g, &fs, apex), opts)
}

struct Affine {
    particular: DVector<f64>,
    basis: DMatrix<f64>,
}

impl Affine {
    fn point(&self, z: &DVector<f64>) -> DVector<f64> {
        &self.particular + &self.basis * z
    }
}

fn constraint_space(tri: &IdealTriangulation) -> Result<Affine> {
    let n = tri.angle_count();
    let m = tri.tetrahedron_count() + tri.edge_classes().len();
    let rows = m.max(n);
    let mut a = DMatrix::<f64>::zeros(rows, n);
    let mut b = DVector::<f64>::zeros(rows);
    for t in 0..tri.tetrahedron_count() {
        for s in 0..3 {
            a[(t, 3 * t + s)] = 1.0;
        }
        b[t] = PI;
    }
    for (i, class) in tri.edge_classes().iter().enumerate() {
        let row = tri.tetrahedron_count() + i;
        for &(t, s) in &class.members {
            a[(row, 3 * t + s)] += 1.0;
        }
        b[row] = class.kind.target();
    }

    let svd = a.clone().svd(true, true);
    let sigma_max = svd.singular_values.max();
    let eps = 1e-10 * sigma_max.max(1.0);
    let particular = svd
        .solve(&b, eps)
        .map_err(|_| Error::Infeasible { apex: tri.apex() })?;
    let residual = (&a * &particular - &b).amax();
    if residual > 1e-9 {
        return Err(Error::Infeasible { apex: tri.apex() });
    }
    let v_t = svd.v_t.as_ref().expect("requested V^T");
    let null: Vec<usize> = (0..svd.singular_values.len())
        .filter(|&i| svd.singular_values[i] <= eps)
        .collect();
    let mut basis = DMatrix::<f64>::zeros(n, null.len());
    for (col, &i) in null.iter().enumerate() {
        basis.set_column(col, &v_t.row(i).transpose());
    }
    Ok(Affine { particular, basis })
}

/// Finds `z` with every angle in `[lo, hi]` by minimizing the squared bound
/// violation with safeguarded Gauss-Newton steps.
fn repair(space: &Affine, mut z: DVector<f64>, lo: f64, hi: f64) -> Option<DVector<f64>> {
    let violation = |x: &DVector<f64>| -> DVector<f64> {
        x.map(|v| {
            if v < lo {
                v - lo
            } else if v > hi {
                v - hi
            } else {
                0.0
            }
        })
    };
    let dim = z.len();
    for _ in 0..500 {
        let x = space.point(&z);
        let r = violation(&x);
        let phi = 0.5 * r.norm_squared();
        if phi == 0.0 {
            return Some(z);
        }
        let active: Vec<usize> = (0..r.len()).filter(|&i| r[i] != 0.0).collect();
        let mut ns = DMatrix::<f64>::zeros(active.len(), dim);
        let mut rs = DVector::<f64>::zeros(active.len());
        for (k, &i) in active.iter().enumerate() {
            ns.set_row(k, &space.basis.row(i));
            rs[k] = r[i];
        }
        let grad = ns.transpose() * &rs;
        let normal = ns.transpose() * &ns + DMatrix::<f64>::identity(dim, dim) * 1e-10;
        let step = match normal.cholesky() {
            Some(ch) => -ch.solve(&grad),
            None => -grad.clone(),
        };
        let slope = grad.dot(&step);
        let mut t = 1.0;
        loop {
            let trial = &z + &step * t;
            let r_trial = violation(&space.point(&trial));
            if 0.5 * r_trial.norm_squared() <= phi + 1e-4 * t * slope {
                z = trial;
                break;
            }
            t *= 0.5;
            if t < 1e-12 {
                return None;
            }
        }
    }
    None
}

fn feasible_start(
    space: &Affine,
    tri: &IdealTriangulation,
    opts: &SolverOptions,
) -> Result<DVector<f64>> {
    let n = tri.angle_count();
    let dim = space.basis.ncols();
    let project = |c: &DVector<f64>| space.basis.transpose() * (c - &space.particular);
    let positive = |z: &DVector<f64>| space.point(z).min() > opts.min_angle;

    // Class-average start: each corner gets the mean of its two class targets
    // divided by class size, then the projection onto the affine space.
    let mut target = DVector::<f64>::from_element(n, PI / 3.0);
    let mut share = vec![Vec::new(); n];
    for class in tri.edge_classes() {
        let each = class.kind.target() / class.members.len() as f64;
        for &(t, s) in &class.members {
            share[3 * t + s].push(each);
        }
    }
    for (i, s) in share.iter().enumerate() {
        if !s.is_empty() {
            target[i] = s.iter().sum::<f64>() / s.len() as f64;
        }
    }
    let z0 = project(&target);
    if positive(&z0) {
        return Ok(z0);
    }
    let margin = 1e-3;
    if let Some(z) = repair(space, z0, margin, PI - margin) {
        if positive(&z) {
            return Ok(z);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    for _ in 0..8 {
        let perturbed = target.map(|v| v * rng.random_range(0.5..1.5));
        let mut z = project(&perturbed);
        for k in 0..dim {
            z[k] += rng.random_range(-0.1..0.1);
        }
        if let Some(z) = repair(space, z, margin, PI - margin) {
            if positive(&z) {
                return Ok(z);
            }
        }
    }
    Err(Error::Infeasible { apex: tri.apex() })
}

fn objective(x: &DVector<f64>) -> f64 {
    x.iter().map(|&a| lob(a)).sum()
}

/// Maximizes the volume over the angle structures of `tri`.
pub fn maximize_volume(tri: &IdealTriangulation, opts: &SolverOptions) -> Result<VolumeSolution> {
    let space = constraint_space(tri)?;
    let mut z = feasible_start(&space, tri, opts)?;
    let dim = z.len();
    let mut x = space.point(&z);
    let mut f = objective(&x);
    let mut history = vec![f];
    let mut iterations = 0;
    let mut grad_norm = f64::INFINITY;

    while iterations < opts.max_iterations {
        let g_full = x.map(|a| -(2.0 * a.sin()).ln());
        let h_full = x.map(|a| -1.0 / a.tan());
        let grad = space.basis.transpose() * &g_full;
        grad_norm = grad.norm();
        if grad_norm < opts.gradient_tolerance {
            break;
        }
        iterations += 1;
        // -H = N^T diag(-h) N, positive definite on the open polytope
        let mut neg_hess =
            space.basis.transpose() * DMatrix::from_diagonal(&(-&h_full)) * &space.basis;
        let mut shift = 0.0;
        let step = loop {
            if let Some(ch) = neg_hess.clone().cholesky() {
                break ch.solve(&grad);
            }
            shift = if shift == 0.0 { 1e-8 } else { shift * 10.0 };
            for i in 0..dim {
                neg_hess[(i, i)] += shift;
            }
        };
        let dx = &space.basis * &step;
        // stay strictly inside (0, pi)
        let mut t: f64 = 1.0;
        for i in 0..x.len() {
            if dx[i] < 0.0 {
                t = t.min(0.95 * x[i] / -dx[i]);
            } else if dx[i] > 0.0 {
                t = t.min(0.95 * (PI - x[i]) / dx[i]);
            }
        }
        let slope = grad.dot(&step);
        let accepted = loop {
            let x_new = &x + &dx * t;
            let f_new = objective(&x_new);
            if f_new >= f + 1e-4 * t * slope || (f_new >= f - 1e-14 && grad_norm < 1e-6) {
                break Some((x_new, f_new));
            }
            t *= 0.5;
            if t < 1e-14 {
                break None;
            }
        };
        let Some((x_new, f_new)) = accepted else {
            break;
        };
        z += &step * t;
        x = x_new;
        f = f_new;
        history.push(f);
    }

    let angles = AngleStructure {
        angles: x.as_slice().chunks(3).map(|c| [c[0], c[1], c[2]]).collect(),
    };
    if grad_norm >= opts.gradient_tolerance.max(1e-8) {
        return Err(Error::Degenerate {
            apex: tri.apex(),
            reason: format!("gradient norm {grad_norm:e} after {iterations} iterations"),
        });
    }
    if angles.min_angle() < opts.min_angle {
        return Err(Error::Degenerate {
            apex: tri.apex(),
            reason: format!("angle {} at the boundary", angles.min_angle()),
        });
    }
    Ok(VolumeSolution {
        volume: f,
        apex: tri.apex(),
        angles,
        iterations,
        gradient_norm: grad_norm,
        objective_history: history,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumeration::antiprism;
    use crate::volume::{antiprism_volume, octahedron_volume, triangulate};

    #[test]
    fn octahedron_volume_from_solver() {
        let g = antiprism(3).unwrap();
        let v = ideal_volume(&g).unwrap();
        assert!((v - octahedron_volume()).abs() < 1e-9, "{v}");
    }

    #[test]
    fn solution_satisfies_constraints() {
        let g = antiprism(5).unwrap();
        let tri = triangulate(&g).unwrap();
        let sol = maximize_volume(&tri, &SolverOptions::default()).unwrap();
        assert!(sol.angles.max_residual(&tri) < 1e-9);
        assert!(sol.angles.min_angle() > 0.0);
        assert!((sol.angles.volume() - sol.volume).abs() < 1e-12);
        assert!((sol.volume - antiprism_volume(5).unwrap()).abs() < 1e-8);
    }

    #[test]
    fn objective_never_decreases() {
        let g = crate::solids::pseudo_rhombicuboctahedron();
        let sol = ideal_volume_with(&g, &SolverOptions::default()).unwrap();
        assert!(sol
            .objective_history
            .windows(2)
            .all(|w| w[1] >= w[0] - 1e-12));
    }
}
