use num_traits::One;

use super::{ExponentVector, PolyError, Polynomial};
use crate::lp::{LinearProgram, LpOutcome, Relation};
use crate::rational::Q;

/// Support of a polynomial and the vertices of `conv(support) + R^n_{>=0}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonData {
    pub support: Vec<ExponentVector>,
    pub vertices: Vec<ExponentVector>,
}

/// Whether `point` lies in `conv(generators) + R^n_{>=0}`.
pub fn point_in_newton_polyhedron(point: &[Q], generators: &[Vec<Q>]) -> bool {
    if generators.is_empty() {
        return false;
    }
    if generators.iter().any(|g| g.iter().zip(point).all(|(a, b)| a <= b)) {
        return true;
    }
    let k = generators.len();
    let mut lp = LinearProgram::feasibility(k);
    lp.constraint(vec![Q::one(); k], Relation::Eq, Q::one());
    for (coord, target) in point.iter().enumerate() {
        let row = generators.iter().map(|g| g[coord].clone()).collect();
        lp.constraint(row, Relation::Le, target.clone());
    }
    !matches!(lp.solve(), LpOutcome::Infeasible)
}

/// Indices of the vertices of `conv(points) + R^n_{>=0}`.
///
/// Repeated points count once (the first occurrence is kept).
pub fn newton_vertices(points: &[Vec<Q>]) -> Vec<usize> {
    let mut distinct: Vec<usize> = Vec::new();
    for (i, p) in points.iter().enumerate() {
        if !distinct.iter().any(|&j| points[j] == *p) {
            distinct.push(i);
        }
    }
    distinct
        .iter()
        .copied()
        .filter(|&i| {
            let others: Vec<Vec<Q>> = distinct
                .iter()
                .filter(|&&j| j != i)
                .map(|&j| points[j].clone())
                .collect();
            !point_in_newton_polyhedron(&points[i], &others)
        })
        .collect()
}

pub fn newton_data(p: &Polynomial) -> Result<NewtonData, PolyError> {
    if p.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let support: Vec<ExponentVector> = p.support().cloned().collect();
    let rational: Vec<Vec<Q>> = support.iter().map(ExponentVector::to_rational).collect();
    let vertices = newton_vertices(&rational).into_iter().map(|i| support[i].clone()).collect();
    Ok(NewtonData { support, vertices })
}

impl NewtonData {
    pub fn vertex_points(&self) -> Vec<Vec<Q>> {
        self.vertices.iter().map(ExponentVector::to_rational).collect()
    }

    /// `p = unit * monomial` near the origin.
    pub fn single_vertex(&self) -> Option<&ExponentVector> {
        if self.vertices.len() == 1 {
            self.vertices.first()
        } else {
            None
        }
    }
}
