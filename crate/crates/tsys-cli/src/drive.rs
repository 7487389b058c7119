//! Drivers behind the `tsys` subcommands. Each produces the JSON artifact,
//! an optional CSV flattening of its numeric series, and the pass/fail
//! verdict of whatever identities it checked. String errors mean the input
//! could not be used at all (exit code 2); falsified identities land in the
//! report with `failed` set (exit code 1).

use std::collections::BTreeMap;
use std::path::Path;

use num_traits::One;
use serde_json::json;

use tsys_core::boundary::{
    check_zamolodchikov, tube_field, verify_mirror, verify_wall_zeros, walled_strip_field,
};
use tsys_core::condensation::{
    dodgson_condensation, recursion_coefficients, verify_coefficient_identity,
    verify_direction_independence, window_anchor, Direction, ExtendedRow,
};
use tsys_core::lattice::{LatticePoint, Parity, TField, ValueKind};
use tsys_core::lattice::EvolveError;
use tsys_core::network::t_via_network;
use tsys_core::pentagram::{
    conserved_quantities, glick_b_matrix, higher_map, pentagram_via_mutations, pq_of_polygon,
};
use tsys_core::report::Report;
use tsys_core::ring::{rat_string, Rat, RingValue};
use tsys_core::torus::{check_double_periodicity, check_read_off, verify_unfolding, QuasiPeriodicSurface};

use crate::accept;
use crate::io;
use crate::sample;

pub struct RunOutput {
    pub json: serde_json::Value,
    pub csv: Option<String>,
    pub failed: bool,
}

fn ok_report(json: serde_json::Value, csv: Option<String>, report: &Report) -> RunOutput {
    RunOutput { json, csv, failed: !report.all_passed() }
}

fn evolution(e: EvolveError) -> String {
    format!("evolution failed: {}", e)
}

fn rats_to_json(v: &[Rat]) -> serde_json::Value {
    serde_json::Value::Array(v.iter().map(|x| rat_string(x).into()).collect())
}

/// All values reachable from the surface up to `kmax`, column by column.
pub fn evolve(input: Option<&Path>, kmax: i64) -> Result<RunOutput, String> {
    let path = input.ok_or("evolve requires --input (a surface file)")?;
    let loaded = io::load_surface(path)?;
    let mut field = TField::new(loaded.surface).map_err(|e| format!("bad surface: {}", e))?;
    let symbolic = field.kind() == ValueKind::Poly;

    let cells: Vec<(i64, i64, i64)> =
        field.surface().cells().map(|((i, j), h, _)| (i, j, h)).collect();
    let mut values: Vec<(i64, i64, i64, RingValue)> = Vec::new();
    for &(i, j, h) in &cells {
        let mut k = h;
        while k <= kmax {
            match field.evolve_to(LatticePoint::new(i, j, k)) {
                Ok(v) => values.push((k, i, j, v)),
                Err(EvolveError::Unresolved(_)) => break,
                Err(e) => return Err(evolution(e)),
            }
            k += 2;
        }
    }
    values.sort_by(|a, b| (a.0, a.1, a.2).cmp(&(b.0, b.1, b.2)));

    let rows: Vec<serde_json::Value> = values
        .iter()
        .map(|(k, i, j, v)| json!({"i": i, "j": j, "k": k, "value": io::value_to_json(v)}))
        .collect();
    let csv = if symbolic {
        None
    } else {
        let mut s = String::from("i,j,k,value\n");
        for (k, i, j, v) in &values {
            let r = v.as_rat().expect("rational field");
            s.push_str(&format!("{},{},{},{}\n", i, j, k, rat_string(r)));
        }
        Some(s)
    };
    let json = json!({"kmax": kmax, "count": rows.len(), "values": rows});
    Ok(RunOutput { json, csv, failed: false })
}

/// Torus-wrapped Y-dynamics from `(p, q)`: double periodicity of the window
/// values and the read-off of the map iterates.
pub fn ysys(
    input: Option<&Path>,
    kappa: i64,
    n: i64,
    levels: i64,
    half: Option<i64>,
    seed: u64,
) -> Result<RunOutput, String> {
    if levels < 1 {
        return Err("levels must be at least 1".into());
    }
    let (kappa, ps, qs) = match input {
        Some(p) => io::load_pq(p)?,
        None => {
            if kappa < 3 {
                return Err("kappa must be at least 3".into());
            }
            if n < 3 {
                return Err("n must be at least 3".into());
            }
            let (ps, qs) = sample::random_pq(&mut sample::rng(seed), n as usize);
            (kappa, ps, qs)
        }
    };
    let n = ps.len() as i64;
    let half = half.unwrap_or(n + levels);

    let mut report = check_double_periodicity(kappa, n, &ps, &qs, levels, half).map_err(evolution)?;
    report.merge(check_read_off(kappa, n, &ps, &qs, levels, half).map_err(evolution)?);

    let json = json!({
        "kappa": kappa,
        "n": n,
        "levels": levels,
        "half": half,
        "p": rats_to_json(&ps),
        "q": rats_to_json(&qs),
        "report": io::report_to_json(&report),
    });
    Ok(ok_report(json, None, &report))
}

/// Evaluate one value through the path-determinant network.
pub fn lgv(input: Option<&Path>, i0: i64, j0: i64, k: i64) -> Result<RunOutput, String> {
    if k < 1 {
        return Err("k must be at least 1".into());
    }

    let loaded = match input {
        Some(p) => Some(io::load_surface(p)?),
        None => None,
    };
    let (mut source, parity): (Box<dyn FnMut(i64, i64) -> RingValue>, Parity) = match &loaded {
        None => (Box::new(|i, j| RingValue::var((i, j))), Parity::Odd),
        Some(l) => {
            let cells: Vec<((i64, i64), i64)> =
                l.surface.cells().map(|((i, j), h, _)| ((i, j), h)).collect();
            let parity = match l.parity {
                Some(p) => p,
                None => [Parity::Odd, Parity::Even]
                    .into_iter()
                    .find(|p| cells.iter().all(|&((i, j), h)| h == p.flat_height(i, j)))
                    .ok_or("the network needs a flat surface")?,
            };
            if cells.iter().any(|&((i, j), h)| h != parity.flat_height(i, j)) {
                return Err("the network needs a flat surface".into());
            }
            let vals: BTreeMap<(i64, i64), RingValue> =
                l.surface.cells().map(|((i, j), _, v)| ((i, j), v.clone())).collect();
            for di in -k..=k {
                for dj in -k..=k {
                    if !vals.contains_key(&(i0 + di, j0 + dj)) {
                        return Err(format!(
                            "the surface must cover the box |i-{}| <= {}, |j-{}| <= {}",
                            i0, k, j0, k
                        ));
                    }
                }
            }
            (Box::new(move |i, j| vals[&(i, j)].clone()), parity)
        }
    };
    if (i0 + j0 + k).rem_euclid(2) != parity.total() {
        return Err(format!("({}, {}, {}) is off the surface sublattice", i0, j0, k));
    }

    let eval = t_via_network(&mut *source, i0, j0, k).map_err(|e| format!("network evaluation failed: {}", e))?;
    let dots: Vec<serde_json::Value> =
        (0..k).map(|m| io::value_to_json(&source(i0 + m, j0 - k + 1 + m))).collect();
    let json = json!({
        "det": io::value_to_json(&eval.det),
        "blackdots": dots,
        "T": io::value_to_json(&eval.value),
    });
    Ok(RunOutput { json, csv: None, failed: false })
}

fn field_from_grid(
    d: i64,
    ell: Option<i64>,
    grid: &[Vec<Rat>],
) -> Result<TField, String> {
    let value = |i: i64, j: i64| RingValue::Rat(grid[(i - 1) as usize][(j - 1) as usize].clone());
    let built = match ell {
        Some(l) => tube_field(d, l, value),
        None => walled_strip_field(d, grid[0].len() as i64, value),
    };
    built.map_err(|e| format!("bad grid: {}", e))
}

/// Wall consequences on a one-wall strip: zero window, wall of ones, mirror
/// symmetry, and the determinant route agreeing with plain evolution.
pub fn wall(
    input: Option<&Path>,
    d: i64,
    kmax: i64,
    jmax: Option<i64>,
    seed: u64,
) -> Result<RunOutput, String> {
    if kmax < 1 {
        return Err("kmax must be at least 1".into());
    }
    let (d, ell, grid) = match input {
        Some(p) => io::load_grid(p)?,
        None => {
            if d < 1 {
                return Err("d must be at least 1".into());
            }
            let width = jmax.unwrap_or(14 + 2 * kmax + 6 * d);
            if width < d + 4 {
                return Err("jmax is too small for the determinant windows".into());
            }
            (d, None, sample::random_grid(&mut sample::rng(seed), d, width))
        }
    };
    let mut field = field_from_grid(d, ell, &grid)?;
    let mut report = verify_wall_zeros(&mut field, kmax).map_err(evolution)?;
    report.merge(verify_mirror(&mut field, kmax).map_err(evolution)?);

    let json = json!({
        "d": d,
        "columns": grid[0].len(),
        "kmax": kmax,
        "report": io::report_to_json(&report),
    });
    Ok(ok_report(json, None, &report))
}

/// Vertical periodicity of a two-wall tube.
pub fn zamolodchikov(
    input: Option<&Path>,
    d: i64,
    ell: i64,
    levels: i64,
    seed: u64,
) -> Result<RunOutput, String> {
    if levels < 1 {
        return Err("levels must be at least 1".into());
    }
    let (d, ell, grid) = match input {
        Some(p) => {
            let (d, ell, grid) = io::load_grid(p)?;
            let ell = ell.ok_or("a tube file needs \"ell\" alongside \"d\" and \"grid\"")?;
            (d, ell, grid)
        }
        None => {
            if d < 1 || ell < 1 {
                return Err("d and ell must be at least 1".into());
            }
            (d, ell, sample::random_grid(&mut sample::rng(seed), d, ell))
        }
    };
    let mut field = field_from_grid(d, Some(ell), &grid)?;
    let report = check_zamolodchikov(&mut field, levels).map_err(evolution)?;

    let json = json!({
        "d": d,
        "ell": ell,
        "p": d + ell + 2,
        "levels": levels,
        "report": io::report_to_json(&report),
    });
    Ok(ok_report(json, None, &report))
}

/// Dodgson condensation of one matrix, with every stage of minors.
pub fn condense(input: Option<&Path>) -> Result<RunOutput, String> {
    let path = input.ok_or("condense requires --input (a matrix file)")?;
    let m = io::load_matrix(path)?;
    let rows: Vec<Vec<RingValue>> =
        m.iter().map(|r| r.iter().map(|x| RingValue::Rat(x.clone())).collect()).collect();
    let c = dodgson_condensation(&rows).map_err(|e| format!("condensation failed: {}", e))?;
    let stages: Vec<serde_json::Value> = c
        .stages
        .iter()
        .map(|stage| {
            let rows: Vec<serde_json::Value> = stage
                .iter()
                .map(|r| serde_json::Value::Array(r.iter().map(io::value_to_json).collect()))
                .collect();
            serde_json::Value::Array(rows)
        })
        .collect();
    let json = json!({
        "size": m.len(),
        "det": io::value_to_json(&c.det),
        "fallback": c.fallback,
        "stages": stages,
    });
    Ok(RunOutput { json, csv: None, failed: false })
}

/// Linear-recursion coefficients along the rows of a wall-bounded field,
/// with the direction-independence and wall-value identifications.
pub fn coeffs(input: Option<&Path>, d: i64, jmax: Option<i64>, seed: u64) -> Result<RunOutput, String> {
    let (d, ell, grid) = match input {
        Some(p) => io::load_grid(p)?,
        None => {
            if d < 1 {
                return Err("d must be at least 1".into());
            }
            let width = jmax.unwrap_or(16 + 5 * d);
            (d, None, sample::random_grid(&mut sample::rng(seed), d, width))
        }
    };
    let mut field = field_from_grid(d, ell, &grid)?;
    let j0 = d + 2;
    let label = d + 5;
    let s_values = [d + 3, d + 5, d + 7];

    let mut report = verify_coefficient_identity(&mut field, &s_values, j0).map_err(evolution)?;
    let rc = {
        let mut row = ExtendedRow::new(&mut field);
        let indep = verify_direction_independence(
            &mut |j, k| row.x(j, k),
            d,
            Direction::Sum,
            label,
            &[j0, j0 + 1, j0 + 2],
        )
        .map_err(evolution)?;
        report.merge(indep);
        let anchor = window_anchor(Direction::Sum, label, j0);
        recursion_coefficients(&mut |j, k| row.x(j, k), d, Direction::Sum, anchor).map_err(evolution)?
    };

    let json = json!({
        "d": d,
        "direction": "sum",
        "label": rc.label,
        "coeffs": rc.coeffs.iter().map(io::value_to_json).collect::<Vec<_>>(),
        "report": io::report_to_json(&report),
    });
    Ok(ok_report(json, None, &report))
}

enum PentagramInput {
    Polygon(tsys_core::pentagram::TwistedPolygon),
    Coordinates(Vec<Rat>, Vec<Rat>),
}

/// Iterate the order-`kappa` map and track the two products `O`, `E`.
pub fn pentagram(
    input: Option<&Path>,
    kappa: i64,
    n: i64,
    iters: i64,
    seed: u64,
) -> Result<RunOutput, String> {
    if iters < 1 {
        return Err("iters must be at least 1".into());
    }
    if kappa < 3 {
        return Err("kappa must be at least 3".into());
    }
    let (kappa, start) = match input {
        Some(p) => {
            let v: serde_json::Value = io::read_json(p)?;
            if v.get("vertices").is_some() {
                (kappa, PentagramInput::Polygon(io::load_polygon(p)?))
            } else {
                let (kappa, ps, qs) = io::load_pq(p)?;
                (kappa, PentagramInput::Coordinates(ps, qs))
            }
        }
        None => {
            if n < 3 {
                return Err("n must be at least 3".into());
            }
            let (ps, qs) = sample::conserved_pq(&mut sample::rng(seed), n as usize);
            (kappa, PentagramInput::Coordinates(ps, qs))
        }
    };
    let (ps, qs) = match &start {
        PentagramInput::Polygon(poly) => {
            pq_of_polygon(poly, kappa).map_err(|e| format!("polygon has no coordinates: {}", e))?
        }
        PentagramInput::Coordinates(ps, qs) => (ps.clone(), qs.clone()),
    };
    let n = ps.len() as i64;

    let mut report = Report::new();
    if let PentagramInput::Polygon(poly) = &start {
        if kappa == 3 {
            let image = poly.pentagram_image().map_err(|e| format!("degenerate polygon: {}", e))?;
            let gpq = pq_of_polygon(&image, 3).map_err(|e| format!("degenerate image: {}", e))?;
            let mpq = higher_map(&ps, &qs, 3).map_err(|e| format!("degenerate step: {}", e))?;
            report.check(
                "the vertex construction matches the coordinate map",
                gpq == mpq,
                format!("image p = {:?}", gpq.0.iter().map(rat_string).collect::<Vec<_>>()),
            );
        }
    }

    let (o0, e0) = conserved_quantities(&ps, &qs);
    let on_locus = (&o0 * &e0).is_one();
    let mut series: Vec<(Rat, Rat)> = vec![(o0.clone(), e0.clone())];
    let (mut cp, mut cq) = (ps.clone(), qs.clone());
    let mut law_bad: Option<String> = None;
    let mut conserve_bad: Option<String> = None;
    for t in 1..=iters {
        let (np, nq) = higher_map(&cp, &cq, kappa)
            .map_err(|e| format!("the orbit degenerates at step {}: {}", t, e))?;
        let (po, pe) = series.last().expect("nonempty").clone();
        let (o, e) = conserved_quantities(&np, &nq);
        if (o != &pe * &po * &po || e != Rat::one() / &po) && law_bad.is_none() {
            law_bad = Some(format!("step {}", t));
        }
        if on_locus && (o != o0 || e != e0) && conserve_bad.is_none() {
            conserve_bad = Some(format!("step {}: O = {}, E = {}", t, rat_string(&o), rat_string(&e)));
        }
        series.push((o, e));
        cp = np;
        cq = nq;
    }
    report.check(
        "each step sends (O, E) to (E O^2, 1/O)",
        law_bad.is_none(),
        law_bad.unwrap_or_default(),
    );
    if on_locus {
        report.check(
            "O and E are invariant on the O E = 1 locus",
            conserve_bad.is_none(),
            conserve_bad.unwrap_or_default(),
        );
    }

    let o_series: Vec<serde_json::Value> =
        series.iter().map(|(o, _)| rat_string(o).into()).collect();
    let e_series: Vec<serde_json::Value> =
        series.iter().map(|(_, e)| rat_string(e).into()).collect();
    let mut csv = String::from("iter,O,E\n");
    for (t, (o, e)) in series.iter().enumerate() {
        csv.push_str(&format!("{},{},{}\n", t, rat_string(o), rat_string(e)));
    }
    let json = json!({
        "kappa": kappa,
        "n": n,
        "iters": iters,
        "on_conserved_locus": on_locus,
        "initial": {"p": rats_to_json(&ps), "q": rats_to_json(&qs)},
        "O": o_series,
        "E": e_series,
        "report": io::report_to_json(&report),
    });
    Ok(RunOutput { json, csv: Some(csv), failed: !report.all_passed() })
}

/// Realize one map step by quiver mutations, in two different orders.
pub fn mutations(input: Option<&Path>, kappa: i64, n: i64, seed: u64) -> Result<RunOutput, String> {
    let (kappa, ps, qs) = match input {
        Some(p) => io::load_pq(p)?,
        None => {
            if kappa < 3 {
                return Err("kappa must be at least 3".into());
            }
            if n <= kappa {
                return Err("the quiver needs n > kappa".into());
            }
            let (ps, qs) = sample::random_pq(&mut sample::rng(seed), n as usize);
            (kappa, ps, qs)
        }
    };
    let n = ps.len();
    if (n as i64) <= kappa {
        return Err("the quiver needs n > kappa".into());
    }

    let want = higher_map(&ps, &qs, kappa).map_err(|e| format!("degenerate step: {}", e))?;
    let b0 = glick_b_matrix(kappa, n);
    let identity: Vec<usize> = (0..n).collect();
    let shuffled = sample::shuffled_order(&mut sample::rng(seed ^ 0x5eed), n);

    let first = pentagram_via_mutations(kappa, &ps, &qs, &identity)
        .map_err(|e| format!("mutation failed: {}", e))?;
    let second = pentagram_via_mutations(kappa, &ps, &qs, &shuffled)
        .map_err(|e| format!("mutation failed: {}", e))?;

    let mut report = Report::new();
    report.check(
        "mutating every p vertex realizes the map step",
        (first.p.clone(), first.q.clone()) == want,
        String::new(),
    );
    report.check("the mutation sweep restores the exchange matrix", first.b_permuted == b0, String::new());
    report.check(
        "the mutation order is immaterial",
        second.p == first.p && second.q == first.q && second.b_permuted == first.b_permuted,
        format!("order {:?}", shuffled),
    );

    let json = json!({
        "kappa": kappa,
        "n": n,
        "shuffled_order": shuffled,
        "p": rats_to_json(&first.p),
        "q": rats_to_json(&first.q),
        "report": io::report_to_json(&report),
    });
    Ok(ok_report(json, None, &report))
}

/// Unfold a quasi-periodic surface and verify the induced identities.
pub fn unfold(
    input: Option<&Path>,
    kappa: i64,
    n: i64,
    kmax: i64,
    seed: u64,
) -> Result<RunOutput, String> {
    if kmax < 1 {
        return Err("kmax must be at least 1".into());
    }
    let q = match input {
        Some(p) => {
            let f: io::UnfoldFile = io::read_json(p)?;
            let lambda = io::parse_rat(&f.lambda)?;
            let mu = io::parse_rat(&f.mu)?;
            if f.kappa < 3 {
                return Err("kappa must be at least 3".into());
            }
            if f.n < 2 {
                return Err("n must be at least 2".into());
            }
            let mut entries = Vec::with_capacity(f.fundamental.len());
            for e in &f.fundamental {
                entries.push(((e.i, e.j), io::parse_rat(&e.value)?));
            }
            QuasiPeriodicSurface::from_entries(f.kappa, f.n, lambda, mu, &entries)
                .map_err(|e| format!("bad fundamental domain: {}", e))?
        }
        None => {
            if kappa < 3 {
                return Err("kappa must be at least 3".into());
            }
            if n < 2 {
                return Err("n must be at least 2".into());
            }
            sample::random_quasi(&mut sample::rng(seed), kappa, n)
        }
    };
    let report = verify_unfolding(&q, kmax).map_err(evolution)?;

    let wrap = q.wrap();
    let fundamental: Vec<serde_json::Value> = q
        .fundamental()
        .iter()
        .map(|((i, j), v)| json!({"i": i, "j": j, "value": rat_string(v)}))
        .collect();
    let json = json!({
        "kappa": wrap.kappa,
        "n": wrap.n,
        "lambda": rat_string(q.lambda()),
        "mu": rat_string(q.mu()),
        "kmax": kmax,
        "fundamental": fundamental,
        "report": io::report_to_json(&report),
    });
    Ok(ok_report(json, None, &report))
}

/// The whole acceptance suite, aggregated.
pub fn verify_all(seed: u64) -> Result<RunOutput, String> {
    let criteria = accept::all_criteria(seed);
    let passed = criteria.iter().all(|(_, r)| r.all_passed());
    let entries: Vec<serde_json::Value> = criteria
        .iter()
        .map(|(name, r)| json!({"name": name, "passed": r.all_passed(), "checks": io::report_to_json(r)["checks"].clone()}))
        .collect();
    let json = json!({"seed": seed, "passed": passed, "criteria": entries});
    Ok(RunOutput { json, csv: None, failed: !passed })
}
