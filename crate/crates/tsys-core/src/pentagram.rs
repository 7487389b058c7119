//! Twisted polygons over the rationals, their cross-ratio coordinates, and
//! the pentagram family of maps.
//!
//! A twisted `n`-gon is a sequence of points in the projective plane with
//! `v(i + n) = M v(i)` for a fixed monodromy `M`. For each `kappa >= 3` the
//! polygon carries coordinates `(p_i, q_i)` built from cross-ratios along
//! the chords `v(i - r') v(i + r + 1)` with `r = floor((kappa-2)/2)` and
//! `r' = ceil((kappa-2)/2)`. The map acts on these coordinates by
//! [`higher_map`]; for `kappa = 3` it is conjugate to the classical
//! pentagram construction on vertices, with no index shift.
//!
//! The same dynamics arises from quiver mutation: [`glick_b_matrix`] builds
//! the exchange matrix on `2n` vertices and [`pentagram_via_mutations`]
//! mutates every `p` vertex and relabels, returning to the original quiver.

use alloc::string::String;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::ring::{rat_pow, Int, Rat};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PentagramError {
    /// Collinear data, vanishing cross-ratio denominator, or a singular
    /// monodromy.
    Degenerate,
    /// Coordinate lists of unequal length, or too few vertices.
    SizeMismatch,
}

impl core::fmt::Display for PentagramError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            PentagramError::Degenerate => write!(f, "degenerate configuration"),
            PentagramError::SizeMismatch => write!(f, "mismatched sizes"),
        }
    }
}

pub type Vec3 = [Rat; 3];

/// Cross product; joins two points into a line and meets two lines in a
/// point, depending on how the arguments are read.
pub fn cross(u: &Vec3, v: &Vec3) -> Vec3 {
    [
        &u[1] * &v[2] - &u[2] * &v[1],
        &u[2] * &v[0] - &u[0] * &v[2],
        &u[0] * &v[1] - &u[1] * &v[0],
    ]
}

pub fn join(u: &Vec3, v: &Vec3) -> Vec3 {
    cross(u, v)
}

pub fn meet(l1: &Vec3, l2: &Vec3) -> Vec3 {
    cross(l1, l2)
}

fn is_zero_vec(v: &Vec3) -> bool {
    v.iter().all(Zero::is_zero)
}

/// Coordinates `(alpha, beta)` with `p = alpha e + beta f`, solved from a
/// nonsingular pair of rows and checked on the third.
pub fn coords_on_line(p: &Vec3, e: &Vec3, f: &Vec3) -> Result<(Rat, Rat), PentagramError> {
    for r1 in 0..3usize {
        for r2 in (r1 + 1)..3 {
            let det = &e[r1] * &f[r2] - &e[r2] * &f[r1];
            if det.is_zero() {
                continue;
            }
            let alpha = (&p[r1] * &f[r2] - &p[r2] * &f[r1]) / &det;
            let beta = (&e[r1] * &p[r2] - &e[r2] * &p[r1]) / &det;
            let r3 = 3 - r1 - r2;
            if &alpha * &e[r3] + &beta * &f[r3] != p[r3] {
                return Err(PentagramError::Degenerate);
            }
            return Ok((alpha, beta));
        }
    }
    Err(PentagramError::Degenerate)
}

/// Cross-ratio of four collinear points, scale-invariant in each argument;
/// on affine parameters it is `(a-b)(c-d) / ((a-c)(b-d))`.
pub fn cross_ratio(a: &Vec3, b: &Vec3, c: &Vec3, d: &Vec3) -> Result<Rat, PentagramError> {
    let cs = [
        coords_on_line(a, a, b)?,
        coords_on_line(b, a, b)?,
        coords_on_line(c, a, b)?,
        coords_on_line(d, a, b)?,
    ];
    let dd = |m: usize, l: usize| &cs[m].1 * &cs[l].0 - &cs[l].1 * &cs[m].0;
    let num = dd(0, 1) * dd(2, 3);
    let den = dd(0, 2) * dd(1, 3);
    if den.is_zero() {
        return Err(PentagramError::Degenerate);
    }
    Ok(num / den)
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Mat3(pub [[Rat; 3]; 3]);

impl Mat3 {
    pub fn identity() -> Mat3 {
        Mat3(core::array::from_fn(|i| {
            core::array::from_fn(|j| if i == j { Rat::one() } else { Rat::zero() })
        }))
    }

    pub fn from_integers(rows: [[i64; 3]; 3]) -> Mat3 {
        Mat3(rows.map(|r| r.map(|v| Rat::from_integer(Int::from(v)))))
    }

    pub fn mul(&self, other: &Mat3) -> Mat3 {
        Mat3(core::array::from_fn(|i| {
            core::array::from_fn(|j| (0..3).map(|l| &self.0[i][l] * &other.0[l][j]).sum())
        }))
    }

    pub fn apply(&self, v: &Vec3) -> Vec3 {
        core::array::from_fn(|i| (0..3).map(|l| &self.0[i][l] * &v[l]).sum())
    }

    pub fn det(&self) -> Rat {
        let m = &self.0;
        &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1])
            - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
            + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
    }

    /// Transposed cofactor matrix; a projective inverse whenever the
    /// determinant is nonzero.
    pub fn adjugate(&self) -> Mat3 {
        let m = &self.0;
        let minor = |r0: usize, r1: usize, c0: usize, c1: usize| &m[r0][c0] * &m[r1][c1] - &m[r0][c1] * &m[r1][c0];
        let other = |x: usize| -> (usize, usize) {
            match x {
                0 => (1, 2),
                1 => (0, 2),
                _ => (0, 1),
            }
        };
        Mat3(core::array::from_fn(|i| {
            core::array::from_fn(|j| {
                let (r0, r1) = other(j);
                let (c0, c1) = other(i);
                let cof = minor(r0, r1, c0, c1);
                if (i + j) % 2 == 0 {
                    cof
                } else {
                    -cof
                }
            })
        }))
    }
}

/// A twisted `n`-gon: vertices `v(0..n)` and `v(i + n) = M v(i)`.
#[derive(Clone, Debug)]
pub struct TwistedPolygon {
    vertices: Vec<Vec3>,
    monodromy: Mat3,
    backward: Mat3,
}

impl TwistedPolygon {
    pub fn new(vertices: Vec<Vec3>, monodromy: Mat3) -> Result<TwistedPolygon, PentagramError> {
        if vertices.len() < 3 {
            return Err(PentagramError::SizeMismatch);
        }
        if monodromy.det().is_zero() {
            return Err(PentagramError::Degenerate);
        }
        let backward = monodromy.adjugate();
        Ok(TwistedPolygon { vertices, monodromy, backward })
    }

    pub fn closed(vertices: Vec<Vec3>) -> Result<TwistedPolygon, PentagramError> {
        TwistedPolygon::new(vertices, Mat3::identity())
    }

    pub fn n(&self) -> usize {
        self.vertices.len()
    }

    pub fn monodromy(&self) -> &Mat3 {
        &self.monodromy
    }

    pub fn vertices(&self) -> &[Vec3] {
        &self.vertices
    }

    /// Vertex at any index, wrapping through powers of the monodromy.
    pub fn vertex(&self, i: i64) -> Vec3 {
        let n = self.vertices.len() as i64;
        let wraps = i.div_euclid(n);
        let mut v = self.vertices[i.rem_euclid(n) as usize].clone();
        for _ in 0..wraps.abs() {
            v = if wraps > 0 { self.monodromy.apply(&v) } else { self.backward.apply(&v) };
        }
        v
    }

    /// One step of the vertex construction: the new vertex `i` is the meet
    /// of the short diagonals `v(i-1) v(i+1)` and `v(i) v(i+2)`. The
    /// monodromy is unchanged.
    pub fn pentagram_image(&self) -> Result<TwistedPolygon, PentagramError> {
        let n = self.vertices.len() as i64;
        let mut out = Vec::with_capacity(self.vertices.len());
        for i in 0..n {
            let w = meet(
                &join(&self.vertex(i - 1), &self.vertex(i + 1)),
                &join(&self.vertex(i), &self.vertex(i + 2)),
            );
            if is_zero_vec(&w) {
                return Err(PentagramError::Degenerate);
            }
            out.push(w);
        }
        TwistedPolygon::new(out, self.monodromy.clone())
    }
}

/// Chord radii `(r, r')` for the map of order `kappa`:
/// `r = floor((kappa-2)/2)`, `r' = ceil((kappa-2)/2)`.
pub fn radii(kappa: i64) -> (i64, i64) {
    assert!(kappa >= 3, "the map family starts at kappa = 3");
    ((kappa - 2).div_euclid(2), (kappa - 1).div_euclid(2))
}

fn wrap<'s>(v: &'s [Rat]) -> impl Fn(i64) -> &'s Rat {
    move |i: i64| &v[i.rem_euclid(v.len() as i64) as usize]
}

fn inv(x: &Rat) -> Result<Rat, PentagramError> {
    if x.is_zero() {
        return Err(PentagramError::Degenerate);
    }
    Ok(Rat::one() / x)
}

/// The `(p, q)` coordinates of a twisted polygon for the order-`kappa` map.
pub fn pq_of_polygon(poly: &TwistedPolygon, kappa: i64) -> Result<(Vec<Rat>, Vec<Rat>), PentagramError> {
    let n = poly.n() as i64;
    let (r, rp) = radii(kappa);
    let mut ps = Vec::with_capacity(poly.n());
    let mut qs = Vec::with_capacity(poly.n());
    for i in 0..n {
        let chord = join(&poly.vertex(i - rp), &poly.vertex(i + r + 1));
        let a = poly.vertex(i - rp);
        let b = meet(&join(&poly.vertex(i - rp - 1), &poly.vertex(i + r)), &chord);
        let c = meet(&chord, &join(&poly.vertex(i - rp + 1), &poly.vertex(i + r + 2)));
        let d = poly.vertex(i + r + 1);
        let chi = cross_ratio(&a, &b, &c, &d)?;
        ps.push(-inv(&chi)?);

        let side = join(&poly.vertex(i), &poly.vertex(i + 1));
        let a2 = meet(&join(&poly.vertex(i - kappa + 1), &poly.vertex(i - kappa + 2)), &side);
        let d2 = meet(&side, &join(&poly.vertex(i + kappa - 1), &poly.vertex(i + kappa)));
        qs.push(-cross_ratio(&a2, &poly.vertex(i), &poly.vertex(i + 1), &d2)?);
    }
    Ok((ps, qs))
}

/// The two corner cross-ratios `(X_i, Y_i)` at each vertex; for `kappa = 3`
/// they factor the coordinates as `p_i = -1/(X_i Y_i)` and
/// `q_i = -Y_i X_{i+1}`.
pub fn corner_invariants(poly: &TwistedPolygon) -> Result<(Vec<Rat>, Vec<Rat>), PentagramError> {
    let n = poly.n() as i64;
    let mut xs = Vec::with_capacity(poly.n());
    let mut ys = Vec::with_capacity(poly.n());
    for i in 0..n {
        let l1 = join(&poly.vertex(i - 2), &poly.vertex(i - 1));
        let l2 = join(&poly.vertex(i + 1), &poly.vertex(i + 2));
        let hinge = meet(&l1, &l2);
        xs.push(cross_ratio(
            &poly.vertex(i - 2),
            &poly.vertex(i - 1),
            &meet(&l1, &join(&poly.vertex(i), &poly.vertex(i + 1))),
            &hinge,
        )?);
        ys.push(cross_ratio(
            &hinge,
            &meet(&join(&poly.vertex(i - 1), &poly.vertex(i)), &l2),
            &poly.vertex(i + 1),
            &poly.vertex(i + 2),
        )?);
    }
    Ok((xs, ys))
}

/// One forward step of the order-`kappa` map on `(p, q)`.
pub fn higher_map(ps: &[Rat], qs: &[Rat], kappa: i64) -> Result<(Vec<Rat>, Vec<Rat>), PentagramError> {
    if ps.len() != qs.len() || ps.is_empty() {
        return Err(PentagramError::SizeMismatch);
    }
    let n = ps.len() as i64;
    let (r, rp) = radii(kappa);
    let p = wrap(ps);
    let q = wrap(qs);
    let mut new_p = Vec::with_capacity(ps.len());
    let mut new_q = Vec::with_capacity(ps.len());
    for i in 0..n {
        new_q.push(inv(p(i + rp - r))?);
        let num = (Rat::one() + p(i - r)) * (Rat::one() + p(i + rp));
        let den = (Rat::one() + inv(p(i - r - 1))?) * (Rat::one() + inv(p(i + rp + 1))?);
        if den.is_zero() {
            return Err(PentagramError::Degenerate);
        }
        new_p.push(q(i) * num / den);
    }
    Ok((new_p, new_q))
}

/// The inverse step; composing with [`higher_map`] is the identity. The
/// forward step stores the old `p` list inside the new `q` list, so the
/// inverse rebuilds `p` from `q` and unwinds the `p` update using only
/// `q`-values.
pub fn higher_map_inverse(ps: &[Rat], qs: &[Rat], kappa: i64) -> Result<(Vec<Rat>, Vec<Rat>), PentagramError> {
    if ps.len() != qs.len() || ps.is_empty() {
        return Err(PentagramError::SizeMismatch);
    }
    let n = ps.len() as i64;
    let (r, rp) = radii(kappa);
    let p = wrap(ps);
    let q = wrap(qs);
    let mut new_p = Vec::with_capacity(ps.len());
    let mut new_q = Vec::with_capacity(ps.len());
    for i in 0..n {
        new_p.push(inv(q(i + r - rp))?);
        let num = (Rat::one() + q(i - rp - 1)) * (Rat::one() + q(i + r + 1));
        let den = (Rat::one() + inv(q(i - rp))?) * (Rat::one() + inv(q(i + r))?);
        if den.is_zero() {
            return Err(PentagramError::Degenerate);
        }
        new_q.push(p(i) * num / den);
    }
    Ok((new_p, new_q))
}

/// The products `O = prod p_i` and `E = prod q_i`. One map step sends them
/// to `(E O^2, 1/O)`, so each is conserved exactly when `O E = 1`.
pub fn conserved_quantities(ps: &[Rat], qs: &[Rat]) -> (Rat, Rat) {
    let o = ps.iter().fold(Rat::one(), |acc, x| acc * x);
    let e = qs.iter().fold(Rat::one(), |acc, x| acc * x);
    (o, e)
}

/// Exchange matrix on `2n` vertices, `p_1..p_n` then `q_1..q_n`: vertex
/// `p_i` connects to the `q` row at offsets `-r-1, -r, r', r'+1` with signs
/// `+, -, -, +`.
pub fn glick_b_matrix(kappa: i64, n: usize) -> Vec<Vec<i64>> {
    assert!((n as i64) > kappa, "the quiver needs n > kappa to keep the arrow offsets distinct");
    let (r, rp) = radii(kappa);
    let m = n as i64;
    let mut b = alloc::vec![alloc::vec![0i64; 2 * n]; 2 * n];
    for i in 0..m {
        for j in 0..m {
            let mut v = 0;
            for (offset, sign) in [(-r - 1, 1i64), (-r, -1), (rp, -1), (rp + 1, 1)] {
                if (i - (j + offset)).rem_euclid(m) == 0 {
                    v += sign;
                }
            }
            b[i as usize][(m + j) as usize] = v;
            b[(m + j) as usize][i as usize] = -v;
        }
    }
    b
}

/// Mutation at vertex `k`: coefficient dynamics
/// `y_j -> y_j y_k^max(b_kj, 0) (1 + y_k)^(-b_kj)`, `y_k -> 1/y_k`, with
/// the usual matrix rule.
pub fn mutate_y_seed(b: &mut [Vec<i64>], y: &mut [Rat], k: usize) -> Result<(), PentagramError> {
    let m = y.len();
    assert!(b.len() == m && b.iter().all(|row| row.len() == m), "square seed");
    let yk = y[k].clone();
    let one_plus = Rat::one() + &yk;
    if one_plus.is_zero() || yk.is_zero() {
        return Err(PentagramError::Degenerate);
    }
    for j in 0..m {
        if j == k {
            continue;
        }
        let exp = b[k][j];
        let mut v = y[j].clone();
        if exp > 0 {
            v *= rat_pow(&yk, exp).map_err(|_| PentagramError::Degenerate)?;
        }
        v *= rat_pow(&one_plus, -exp).map_err(|_| PentagramError::Degenerate)?;
        y[j] = v;
    }
    y[k] = Rat::one() / yk;

    let old: Vec<Vec<i64>> = b.to_vec();
    for i in 0..m {
        for j in 0..m {
            b[i][j] = if i == k || j == k {
                -old[i][j]
            } else {
                old[i][j] + old[i][k].signum() * (old[i][k] * old[k][j]).max(0)
            };
        }
    }
    Ok(())
}

/// The map step realized by quiver mutation and relabeling.
pub struct MutationRealization {
    /// The mutated matrix pulled back along the relabeling; equal to the
    /// original exchange matrix.
    pub b_permuted: Vec<Vec<i64>>,
    pub p: Vec<Rat>,
    pub q: Vec<Rat>,
}

/// Mutate every `p` vertex (in any order; they are pairwise disconnected)
/// and relabel: the old `q_i` slot becomes `p_i` and the old `p_(i+s)` slot
/// becomes `q_i`, where `s = r' - r`. The result matches [`higher_map`] and
/// restores the exchange matrix.
pub fn pentagram_via_mutations(
    kappa: i64,
    ps: &[Rat],
    qs: &[Rat],
    order: &[usize],
) -> Result<MutationRealization, PentagramError> {
    let n = ps.len();
    if qs.len() != n || order.len() != n {
        return Err(PentagramError::SizeMismatch);
    }
    let mut seen = alloc::vec![false; n];
    for &k in order {
        assert!(k < n && !seen[k], "order must enumerate the p vertices once");
        seen[k] = true;
    }
    let mut b = glick_b_matrix(kappa, n);
    let mut y: Vec<Rat> = ps.iter().chain(qs.iter()).cloned().collect();
    for &k in order {
        mutate_y_seed(&mut b, &mut y, k)?;
    }
    let (r, rp) = radii(kappa);
    let s = (rp - r) as usize;
    let new_p: Vec<Rat> = (0..n).map(|i| y[n + i].clone()).collect();
    let new_q: Vec<Rat> = (0..n).map(|i| y[(i + s) % n].clone()).collect();
    // perm[new] = old: new p_i sits at old q_i, new q_i at old p_(i+s)
    let mut perm = alloc::vec![0usize; 2 * n];
    for i in 0..n {
        perm[i] = n + i;
        perm[n + i] = (i + s) % n;
    }
    let b_permuted: Vec<Vec<i64>> =
        (0..2 * n).map(|a| (0..2 * n).map(|c| b[perm[a]][perm[c]]).collect()).collect();
    Ok(MutationRealization { b_permuted, p: new_p, q: new_q })
}

/// Formats a rational list for error messages.
pub fn rat_list(v: &[Rat]) -> String {
    use core::fmt::Write;
    let mut s = String::from("[");
    for (i, x) in v.iter().enumerate() {
        if i > 0 {
            s.push_str(", ");
        }
        let _ = write!(s, "{}", x);
    }
    s.push(']');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rint(k: i64) -> Rat {
        Rat::from_integer(Int::from(k))
    }

    fn rfrac(n: i64, d: i64) -> Rat {
        Rat::new(Int::from(n), Int::from(d))
    }

    fn lcg(seed: &mut u64, m: u64) -> i64 {
        *seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        ((*seed >> 33) % m) as i64
    }

    fn rand_rats(seed: &mut u64, n: usize) -> Vec<Rat> {
        (0..n).map(|_| rfrac(1 + lcg(seed, 9), 1 + lcg(seed, 9))).collect()
    }

    fn rand_polygon(seed: &mut u64, n: usize) -> TwistedPolygon {
        // perturbed rational circle through tangent half-angle points
        let mut vs = Vec::new();
        for i in 0..n {
            let t = rfrac(lcg(seed, 801) - 400, 401) + rfrac(3 * i as i64, n as i64);
            let t2 = &t * &t;
            let den = Rat::one() + &t2;
            let x = (Rat::one() - &t2) / &den + rfrac(lcg(seed, 61) - 30, 1000);
            let y = (&t + &t) / &den + rfrac(lcg(seed, 61) - 30, 1000);
            vs.push([x, y, Rat::one()]);
        }
        TwistedPolygon::closed(vs).unwrap()
    }

    #[test]
    fn cross_ratio_matches_affine_parameters() {
        let pt = |t: i64| [rint(t), rint(0), rint(1)];
        let chi = cross_ratio(&pt(0), &pt(1), &pt(3), &pt(4)).unwrap();
        assert_eq!(chi, rfrac(1, 9));
        // scale invariance in a single argument
        let c7 = [rint(21), rint(0), rint(7)];
        assert_eq!(cross_ratio(&pt(0), &pt(1), &c7, &pt(4)).unwrap(), rfrac(1, 9));
        // non-collinear data is rejected
        let off = [rint(3), rint(1), rint(1)];
        assert_eq!(cross_ratio(&pt(0), &pt(1), &off, &pt(4)), Err(PentagramError::Degenerate));
    }

    #[test]
    fn adjugate_inverts_projectively() {
        let m = Mat3::from_integers([[2, 1, 0], [0, 1, 1], [1, 0, 3]]);
        let d = m.det();
        assert!(!d.is_zero());
        let prod = m.mul(&m.adjugate());
        for i in 0..3 {
            for j in 0..3 {
                let want = if i == j { d.clone() } else { Rat::zero() };
                assert_eq!(prod.0[i][j], want);
            }
        }
    }

    #[test]
    fn constant_example_of_the_smallest_map() {
        let ps = alloc::vec![rint(2); 5];
        let qs = alloc::vec![rint(3); 5];
        let (np, nq) = higher_map(&ps, &qs, 3).unwrap();
        assert!(np.iter().all(|x| *x == rint(12)));
        assert!(nq.iter().all(|x| *x == rfrac(1, 2)));
    }

    #[test]
    fn forward_and_inverse_compose_to_identity() {
        let mut seed = 11u64;
        let ps = rand_rats(&mut seed, 6);
        let qs = rand_rats(&mut seed, 6);
        for kappa in 3i64..=5 {
            let (a, b) = higher_map(&ps, &qs, kappa).unwrap();
            let (c, d) = higher_map_inverse(&a, &b, kappa).unwrap();
            assert_eq!(c, ps, "kappa = {}", kappa);
            assert_eq!(d, qs, "kappa = {}", kappa);
        }
    }

    #[test]
    fn products_transform_as_stated() {
        let mut seed = 23u64;
        for kappa in 3i64..=5 {
            let ps = rand_rats(&mut seed, 7);
            let qs = rand_rats(&mut seed, 7);
            let (o, e) = conserved_quantities(&ps, &qs);
            let (np, nq) = higher_map(&ps, &qs, kappa).unwrap();
            let (o2, e2) = conserved_quantities(&np, &nq);
            assert_eq!(o2, &e * &o * &o, "kappa = {}", kappa);
            assert_eq!(e2, Rat::one() / &o, "kappa = {}", kappa);
        }
    }

    #[test]
    fn corner_invariants_factor_the_coordinates() {
        let mut seed = 3u64;
        for n in [5usize, 6] {
            let poly = rand_polygon(&mut seed, n);
            let (ps, qs) = pq_of_polygon(&poly, 3).unwrap();
            let (xs, ys) = corner_invariants(&poly).unwrap();
            for i in 0..n {
                assert_eq!(ps[i], -inv(&(&xs[i] * &ys[i])).unwrap(), "p at {}", i);
                assert_eq!(qs[i], -(&ys[i] * &xs[(i + 1) % n]), "q at {}", i);
            }
        }
    }

    #[test]
    fn vertex_construction_matches_the_coordinate_map() {
        let mut seed = 17u64;
        let poly = rand_polygon(&mut seed, 7);
        let (ps, qs) = pq_of_polygon(&poly, 3).unwrap();
        let image = poly.pentagram_image().unwrap();
        let (ips, iqs) = pq_of_polygon(&image, 3).unwrap();
        let (mps, mqs) = higher_map(&ps, &qs, 3).unwrap();
        assert_eq!(ips, mps);
        assert_eq!(iqs, mqs);
    }

    #[test]
    fn twisted_polygons_behave_like_closed_ones() {
        let mut seed = 29u64;
        let mut vs = Vec::new();
        for _ in 0..6 {
            vs.push([rfrac(lcg(&mut seed, 19) - 9, 4), rfrac(lcg(&mut seed, 19) - 9, 5), Rat::one()]);
        }
        let m = Mat3::from_integers([[2, 1, 0], [0, 1, 1], [1, 0, 3]]);
        let poly = TwistedPolygon::new(vs, m).unwrap();
        // wrapping is consistent in both directions
        let forward = poly.monodromy().apply(&poly.vertex(2));
        assert_eq!(poly.vertex(8), forward);
        let back = poly.backward.apply(&poly.vertex(4));
        assert_eq!(poly.vertex(-2), back);

        let (ps, qs) = pq_of_polygon(&poly, 3).unwrap();
        let image = poly.pentagram_image().unwrap();
        let (ips, iqs) = pq_of_polygon(&image, 3).unwrap();
        let (mps, mqs) = higher_map(&ps, &qs, 3).unwrap();
        assert_eq!(ips, mps);
        assert_eq!(iqs, mqs);
    }

    #[test]
    fn mutations_realize_the_map() {
        let mut seed = 31u64;
        for (kappa, n) in [(3i64, 6usize), (4, 7), (5, 8)] {
            let ps = rand_rats(&mut seed, n);
            let qs = rand_rats(&mut seed, n);
            let (want_p, want_q) = higher_map(&ps, &qs, kappa).unwrap();
            let order: Vec<usize> = (0..n).collect();
            let real = pentagram_via_mutations(kappa, &ps, &qs, &order).unwrap();
            assert_eq!(real.p, want_p, "kappa = {}", kappa);
            assert_eq!(real.q, want_q, "kappa = {}", kappa);
            assert_eq!(real.b_permuted, glick_b_matrix(kappa, n), "kappa = {}", kappa);
            // mutation order among the p vertices is immaterial
            let mut shuffled: Vec<usize> = (0..n).rev().collect();
            shuffled.swap(0, n / 2);
            let again = pentagram_via_mutations(kappa, &ps, &qs, &shuffled).unwrap();
            assert_eq!(again.p, want_p);
            assert_eq!(again.q, want_q);
            assert_eq!(again.b_permuted, glick_b_matrix(kappa, n));
        }
    }

    #[test]
    fn exchange_matrix_is_skew_with_the_stated_offsets() {
        let b = glick_b_matrix(3, 6);
        for i in 0..12 {
            for j in 0..12 {
                assert_eq!(b[i][j], -b[j][i]);
            }
        }
        // row p_1: arrows meet q_j when j + offset = 0 mod n, so the signs
        // +,-,-,+ at offsets -1,0,1,2 land on columns 1,0,5,4
        let row: Vec<i64> = (0..6).map(|j| b[0][6 + j]).collect();
        assert_eq!(row, alloc::vec![-1, 1, 0, 0, 1, -1]);
    }
}
