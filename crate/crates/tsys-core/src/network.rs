//! Lattice-path determinant formula for values over a flat surface.
//!
//! The value `T(i0, j0, k)` equals the path determinant of a diamond-shaped
//! planar network times the product of the surface variables along its
//! south-east edge. Paths run left to right through nodes `(s, t)` with
//! `s + t` even and `|s - (k-1)| + |t| <= k - 1`; each step is horizontal
//! `(s, t) -> (s+2, t)`, rising `(s, t) -> (s+1, t+1)`, or falling
//! `(s, t) -> (s+1, t-1)`, weighted by the surface variables around the
//! upward face it crosses.
//!
//! [`lgv_path_families`] recomputes the same determinant by brute-force
//! enumeration of vertex-disjoint path families, which pins the sign and
//! pairing conventions independently of any matrix algebra.

use alloc::vec::Vec;
use alloc::collections::{BTreeMap, BTreeSet};

use crate::condensation::{laplace_determinant, one_like, zero_like};
use crate::ring::{RingError, RingValue};

/// Surface values by column; the network only reads the initial layer.
pub type FlatSource<'s> = dyn FnMut(i64, i64) -> RingValue + 's;

fn inside(k: i64, s: i64, t: i64) -> bool {
    (s - (k - 1)).abs() + t.abs() <= k - 1 && (s + t).rem_euclid(2) == 0
}

fn face(i0: i64, j0: i64, k: i64, s: i64, t: i64) -> (i64, i64) {
    (i0 + s - (k - 1), j0 + t)
}

/// Weight of the step `from -> to`, read off the unique upward face the
/// step touches.
fn edge_weight(
    x: &mut FlatSource,
    i0: i64,
    j0: i64,
    k: i64,
    from: (i64, i64),
    to: (i64, i64),
) -> Result<RingValue, RingError> {
    let (s1, t1) = from;
    let (s2, t2) = to;
    if t2 == t1 + 1 {
        // rising step, apex at (s2, t2), face over the band t1..t2
        let (i, j) = face(i0, j0, k, s2, t1);
        x(i - 1, j - 1).div_exact(&x(i, j))
    } else if t2 == t1 - 1 {
        // falling step, apex at (s1, t1), face over the band t2..t1
        let (i, j) = face(i0, j0, k, s1, t2);
        x(i, j + 1).div_exact(&x(i + 1, j))
    } else {
        // horizontal step under the apex (s1 + 1, t1 + 1)
        let (i, j) = face(i0, j0, k, s1 + 1, t1);
        let num = x(i - 1, j - 1).mul(&x(i - 1, j))?;
        let den = x(i, j - 1).mul(&x(i, j))?;
        num.div_exact(&den)
    }
}

fn diamond_nodes(k: i64) -> Vec<(i64, i64)> {
    let mut nodes = Vec::new();
    for s in 0..=(2 * k - 2) {
        for t in -(k - 1)..=(k - 1) {
            if inside(k, s, t) {
                nodes.push((s, t));
            }
        }
    }
    nodes
}

fn successors(k: i64, s: i64, t: i64) -> impl Iterator<Item = (i64, i64)> {
    [(s + 2, t), (s + 1, t + 1), (s + 1, t - 1)]
        .into_iter()
        .filter(move |&(s2, t2)| inside(k, s2, t2))
}

fn left_port(k: i64, a: i64) -> (i64, i64) {
    (k - a, a - k)
}

fn right_port(k: i64, b: i64) -> (i64, i64) {
    (k + b - 2, b - k)
}

/// The `k x k` matrix of weighted path sums between the boundary ports.
pub fn path_matrix(x: &mut FlatSource, i0: i64, j0: i64, k: i64) -> Result<Vec<Vec<RingValue>>, RingError> {
    assert!(k >= 1, "the network needs at least one port");
    let nodes = diamond_nodes(k);
    let one = one_like(&x(i0, j0));
    let zero = zero_like(&one);

    let mut matrix = Vec::with_capacity(k as usize);
    for a in 1..=k {
        // nodes sorted by (s, t) and steps strictly increasing s give a
        // topological order for the accumulation
        let mut acc: BTreeMap<(i64, i64), RingValue> = BTreeMap::new();
        acc.insert(left_port(k, a), one.clone());
        for &(s, t) in &nodes {
            let Some(v) = acc.get(&(s, t)).cloned() else { continue };
            if v.is_zero() {
                continue;
            }
            for (s2, t2) in successors(k, s, t) {
                let w = edge_weight(x, i0, j0, k, (s, t), (s2, t2))?;
                let add = v.mul(&w)?;
                let slot = acc.entry((s2, t2)).or_insert_with(|| zero.clone());
                *slot = slot.add(&add)?;
            }
        }
        let mut row = Vec::with_capacity(k as usize);
        for b in 1..=k {
            row.push(acc.get(&right_port(k, b)).cloned().unwrap_or_else(|| zero.clone()));
        }
        matrix.push(row);
    }
    Ok(matrix)
}

/// Determinant evaluation of the network with the boundary factors split
/// out, so `value == det * black_dots` exactly.
pub struct NetworkEvaluation {
    pub det: RingValue,
    pub black_dots: RingValue,
    pub value: RingValue,
}

/// Evaluate `T(i0, j0, k)` through the network. The column ring along the
/// south-west edge is folded into the port rows, leaving the determinant
/// times the south-east product.
pub fn t_via_network(x: &mut FlatSource, i0: i64, j0: i64, k: i64) -> Result<NetworkEvaluation, RingError> {
    let mut n = path_matrix(x, i0, j0, k)?;
    for a in 2..=k {
        let sw = x(i0 + 1 - a, j0 + a - k - 1);
        for entry in n[(a - 1) as usize].iter_mut() {
            *entry = entry.div_exact(&sw)?;
        }
    }
    let det = laplace_determinant(&n)?;
    let mut black_dots = one_like(&det);
    for m in 0..k {
        black_dots = black_dots.mul(&x(i0 + m, j0 - k + 1 + m))?;
    }
    let value = det.mul(&black_dots)?;
    Ok(NetworkEvaluation { det, black_dots, value })
}

/// Sum of weights of vertex-disjoint path families joining left port `a`
/// to right port `a` for every `a`. Port 1 is the shared south corner, so
/// its path is the empty one occupying that single node.
pub fn lgv_path_families(x: &mut FlatSource, i0: i64, j0: i64, k: i64) -> Result<RingValue, RingError> {
    assert!(k >= 1, "the network needs at least one port");

    fn all_paths(k: i64, from: (i64, i64), to: (i64, i64)) -> Vec<Vec<(i64, i64)>> {
        if from == to {
            return alloc::vec![alloc::vec![from]];
        }
        let mut out = Vec::new();
        for next in successors(k, from.0, from.1) {
            for mut p in all_paths(k, next, to) {
                p.insert(0, from);
                out.push(p);
            }
        }
        out
    }

    let per_port: Vec<Vec<Vec<(i64, i64)>>> =
        (1..=k).map(|a| all_paths(k, left_port(k, a), right_port(k, a))).collect();

    let one = one_like(&x(i0, j0));
    let mut total = zero_like(&one);
    let mut used: BTreeSet<(i64, i64)> = BTreeSet::new();

    fn descend(
        x: &mut FlatSource,
        i0: i64,
        j0: i64,
        k: i64,
        per_port: &[Vec<Vec<(i64, i64)>>],
        used: &mut BTreeSet<(i64, i64)>,
        weight: &RingValue,
        total: &mut RingValue,
    ) -> Result<(), RingError> {
        let Some((paths, rest)) = per_port.split_first() else {
            *total = total.add(weight)?;
            return Ok(());
        };
        'next_path: for p in paths {
            for node in p {
                if used.contains(node) {
                    continue 'next_path;
                }
            }
            let mut w = weight.clone();
            for pair in p.windows(2) {
                w = w.mul(&edge_weight(x, i0, j0, k, pair[0], pair[1])?)?;
            }
            for node in p {
                used.insert(*node);
            }
            descend(x, i0, j0, k, rest, used, &w, total)?;
            for node in p {
                used.remove(node);
            }
        }
        Ok(())
    }

    descend(x, i0, j0, k, &per_port, &mut used, &one, &mut total)?;
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{InitialSurface, LatticePoint, Parity, TField};
    use crate::ring::{Int, LaurentPoly, Rat};

    fn sym_source() -> impl FnMut(i64, i64) -> RingValue {
        |i, j| RingValue::var((i, j))
    }

    fn sym_field(radius: i64) -> TField {
        let s = InitialSurface::flat_symbolic(Parity::Odd, (-radius, radius), (-radius, radius));
        TField::new(s).unwrap()
    }

    #[test]
    fn level_one_is_the_surface_value() {
        let mut x = sym_source();
        let eval = t_via_network(&mut x, 0, 0, 1).unwrap();
        assert!(eval.det.is_one());
        let want = RingValue::Poly(LaurentPoly::var((0, 0)));
        assert_eq!(eval.black_dots, want);
        assert_eq!(eval.value, want);
    }

    #[test]
    fn determinant_formula_matches_evolution_symbolically() {
        let mut f = sym_field(6);
        for k in 1i64..=3 {
            for (i0, j0) in [(0i64, 0i64), (0, 1), (3, -2), (2, 1)] {
                if (i0 + j0 + 1).rem_euclid(2) != k.rem_euclid(2) {
                    continue;
                }
                let want = f.evolve_to(LatticePoint::new(i0, j0, k)).unwrap();
                let mut x = sym_source();
                let eval = t_via_network(&mut x, i0, j0, k).unwrap();
                assert_eq!(eval.value, want, "network differs at ({},{},{})", i0, j0, k);
                assert_eq!(eval.det.mul(&eval.black_dots).unwrap(), want);
            }
        }
        // one deeper point: a 64-term value
        let want = f.evolve_to(LatticePoint::new(0, 1, 4)).unwrap();
        let mut x = sym_source();
        let eval = t_via_network(&mut x, 0, 1, 4).unwrap();
        assert_eq!(eval.value, want);
    }

    #[test]
    fn families_equal_the_determinant() {
        for (i0, j0) in [(0i64, 0i64), (1, 2)] {
            let mut x = sym_source();
            let n = path_matrix(&mut x, i0, j0, 3).unwrap();
            let det = laplace_determinant(&n).unwrap();
            let fam = lgv_path_families(&mut x, i0, j0, 3).unwrap();
            assert_eq!(det, fam, "at ({},{})", i0, j0);
        }
    }

    #[test]
    fn rational_surfaces_agree_with_evolution() {
        let mut seed = 42u64;
        let mut surface_value = move |_: i64, _: i64| {
            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let num = 1 + ((seed >> 33) % 9) as i64;
            let den = 1 + ((seed >> 13) % 5) as i64;
            RingValue::Rat(Rat::new(Int::from(num), Int::from(den)))
        };
        let mut cache: alloc::collections::BTreeMap<(i64, i64), RingValue> = alloc::collections::BTreeMap::new();
        let mut x = move |i: i64, j: i64| cache.entry((i, j)).or_insert_with(|| surface_value(i, j)).clone();

        let surface = InitialSurface::flat_from(Parity::Odd, (-6, 6), (-6, 6), &mut x);
        let mut f = TField::new(surface).unwrap();
        for (i0, j0, k) in [(0i64, 0i64, 3i64), (0, 1, 4), (1, 2, 2), (-1, 2, 4)] {
            let want = f.evolve_to(LatticePoint::new(i0, j0, k)).unwrap();
            let eval = t_via_network(&mut x, i0, j0, k).unwrap();
            assert_eq!(eval.value, want, "network differs at ({},{},{})", i0, j0, k);
        }
    }
}
