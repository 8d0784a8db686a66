//! Candidate rays for ratio minimization over the standard simplex.
//!
//! A function `w -> min_{p in S} <p, w>` is linear on each cell cut out by
//! the tie hyperplanes `<p - p', w> = 0`. For several such functions, every
//! vertex of the common refinement inside `{w >= 0, sum w = 1}` is the
//! solution of `n - 1` independent hyperplanes (tie or coordinate) plus the
//! simplex equation, so enumerating those intersections yields a superset
//! of the cell vertices.

use std::collections::BTreeSet;

use num_traits::{One, Signed, Zero};

use crate::rational::{solve_square, Q};

fn normalize(mut v: Vec<Q>) -> Option<Vec<Q>> {
    let lead = v.iter().find(|x| !x.is_zero())?.clone();
    for x in v.iter_mut() {
        *x = &*x / &lead;
    }
    Some(v)
}

/// Distinct hyperplane normals: coordinates plus pairwise ties in each set.
pub fn tie_normals(dim: usize, point_sets: &[&[Vec<Q>]]) -> Vec<Vec<Q>> {
    let mut normals = BTreeSet::new();
    for i in 0..dim {
        let mut e = vec![Q::zero(); dim];
        e[i] = Q::one();
        normals.insert(e);
    }
    for set in point_sets {
        for (i, a) in set.iter().enumerate() {
            for b in &set[i + 1..] {
                let diff: Vec<Q> = a.iter().zip(b).map(|(x, y)| x - y).collect();
                if let Some(n) = normalize(diff) {
                    normals.insert(n);
                }
            }
        }
    }
    normals.into_iter().collect()
}

fn for_each_combination(n: usize, k: usize, f: &mut dyn FnMut(&[usize])) {
    fn rec(start: usize, n: usize, k: usize, buf: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if buf.len() == k {
            f(buf);
            return;
        }
        for i in start..n {
            if n - i < k - buf.len() {
                break;
            }
            buf.push(i);
            rec(i + 1, n, k, buf, f);
            buf.pop();
        }
    }
    rec(0, n, k, &mut Vec::with_capacity(k), f);
}

/// Candidate vertices on the simplex, sorted lexicographically.
pub fn candidate_rays(dim: usize, point_sets: &[&[Vec<Q>]]) -> Vec<Vec<Q>> {
    assert!(dim >= 1, "dimension must be positive");
    let normals = tie_normals(dim, point_sets);
    let mut out = BTreeSet::new();
    let mut rhs = vec![Q::zero(); dim];
    rhs[dim - 1] = Q::one();
    for_each_combination(normals.len(), dim - 1, &mut |idx| {
        let mut rows: Vec<Vec<Q>> = idx.iter().map(|&i| normals[i].clone()).collect();
        rows.push(vec![Q::one(); dim]);
        if let Some(w) = solve_square(rows, rhs.clone()) {
            if w.iter().all(|x| !x.is_negative()) {
                out.insert(w);
            }
        }
    });
    out.into_iter().collect()
}
