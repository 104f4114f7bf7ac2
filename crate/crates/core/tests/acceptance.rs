//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each,
//! and exits nonzero if any fails.

use std::f64::consts::{PI, TAU};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_integer::Integer;
use num_rational::Rational64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use su3coh::cartan::{normalizer_components, normalizer_dim_numeric};
use su3coh::classify::{classify_circle_base, deltas, emit_tables, Cell, Table, TubeDescriptor};
use su3coh::geomverify::consim::{consim_act, gamma, geodesic};
use su3coh::geomverify::grassmann::{
    flow_line_stabilizer, grassmann_f, grassmann_survey, random_rotation, OrientedThreePlane,
};
use su3coh::geomverify::hypersurface::hypersurface_torus_solutions;
use su3coh::geomverify::suite::{consim_profile, REFINED_PLANES};
use su3coh::reps::{
    enumerate_slice_reps, sphere_transitivity_check, torus_oracle, u2_stabilizer_closed_form,
    u2_weight, RealRep, StabilizerTag,
};
use su3coh::{
    CartanVector, CircleClass, CircleSubgroup, GroupMatrix, IdentityComponent, Tolerances,
    Tolerances64,
};

type Outcome = Result<(), String>;

/// Name, time limit and check.
type Criterion = (&'static str, Duration, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn coprime_pairs(bound: i64) -> impl Iterator<Item = (i64, i64)> {
    (-bound..=bound)
        .flat_map(move |k| (-bound..=bound).map(move |l| (k, l)))
        .filter(|&(k, l)| (k, l) != (0, 0) && k.gcd(&l) == 1)
}

fn table_cells_match(
    table: &Table,
    oracle: fn(&TubeDescriptor, &TubeDescriptor) -> Option<u8>,
) -> Outcome {
    for (r, row) in table.row_labels.iter().enumerate() {
        for (c, col) in table.col_labels.iter().enumerate() {
            let rt: TubeDescriptor = row.parse().map_err(|e| format!("{row}: {e}"))?;
            let ct: TubeDescriptor = col.parse().map_err(|e| format!("{col}: {e}"))?;
            let expected =
                oracle(&rt, &ct).ok_or_else(|| format!("no delta for ({row}, {col})"))?;
            ensure(table.cells[r][c] == Cell::Count(expected), || {
                format!(
                    "{}: ({row}, {col}) = {:?}, delta gives {expected}",
                    table.table_id, table.cells[r][c]
                )
            })?;
        }
    }
    Ok(())
}

fn table_fidelity() -> Outcome {
    let set = emit_tables(5);
    let [_, t2, t3, t4] = &set.tables[..] else {
        return Err("expected four tables".into());
    };
    table_cells_match(t2, deltas::connected_cell)?;
    table_cells_match(t3, deltas::flag_cell)?;
    table_cells_match(t4, deltas::nonconnected_cell)?;
    let expect = |t: &Table, r: &str, c: &str, v: u8| {
        ensure(t.cell(r, c) == Some(&Cell::Count(v)), || {
            format!("({r}, {c}) should be {v}")
        })
    };
    expect(t2, "P(1)", "P(1)", 2)?;
    for (m, l) in [(1, 3), (3, 5), (5, 1)] {
        expect(t2, &format!("P({m})"), &format!("P({l})"), 0)?;
    }
    expect(t3, "F(0,1)", "S", 1)?;
    for h in 2..=5 {
        expect(t4, &format!("F(0,{h})"), &format!("Squot({h})"), 1)?;
    }
    Ok(())
}

/// Permutations σ with `σ(triple) = ±triple`, counted directly.
fn line_preserving_count(t: [i64; 3]) -> usize {
    let perms = [
        [0, 1, 2],
        [1, 0, 2],
        [0, 2, 1],
        [2, 1, 0],
        [1, 2, 0],
        [2, 0, 1],
    ];
    perms
        .iter()
        .filter(|p| {
            let img = [t[p[0]], t[p[1]], t[p[2]]];
            img == t || img == [-t[0], -t[1], -t[2]]
        })
        .count()
}

fn normalizer_components_check() -> Outcome {
    let tol = Tolerances64::default();
    for (k, l) in coprime_pairs(10) {
        let c = CircleSubgroup::canonicalize(k, l).map_err(|e| e.to_string())?;
        let t = c.triple();
        let repeated = t[0] == t[1] || t[1] == t[2] || t[0] == t[2];
        let brute = line_preserving_count(t) / if repeated { 2 } else { 1 };
        let (identity, comps, dim) = match c.class() {
            CircleClass::RootType => (IdentityComponent::Torus, 2, 2),
            CircleClass::SingularType => (IdentityComponent::U2, 1, 4),
            CircleClass::Generic => (IdentityComponent::Torus, 1, 2),
        };
        let info = normalizer_components(&c);
        ensure(
            brute == comps && info.component_count == comps && info.identity_component == identity,
            || format!("({k},{l}) -> {c}: brute {brute}, library {info:?}, expected {comps}"),
        )?;
        let numeric = normalizer_dim_numeric(&c, &tol).map_err(|e| e.to_string())?;
        ensure(numeric == dim, || {
            format!("({k},{l}): numeric normalizer dim {numeric}, expected {dim}")
        })?;
    }
    Ok(())
}

fn torus_stabilizer_gcd() -> Outcome {
    for p in -6i64..=6 {
        for q in -6i64..=6 {
            if (p, q) == (0, 0) {
                continue;
            }
            let count = torus_oracle::stabilizer_components(p, q).map_err(|e| e.to_string())?;
            let h = p.gcd(&q) as usize;
            ensure(count == h, || {
                format!("T2 {p} {q}: {count} components, gcd {h}")
            })?;
        }
    }
    Ok(())
}

fn slice_to_stabilizer() -> Outcome {
    for m in (1..=21).step_by(2) {
        let closed = u2_stabilizer_closed_form(m).map_err(|e| e.to_string())?;
        let solved = u2_weight(m).perp_line().map_err(|e| e.to_string())?;
        ensure(closed == solved, || {
            format!("m = {m}: closed form {closed}, solve {solved}")
        })?;
        // The generator of U_{(m−1)/2, −(m+1)/2} has Cartan coordinates
        // (k, k + l) and must be orthogonal to ½u + (m/6)v.
        let (k, l) = ((m - 1) / 2, -(m + 1) / 2);
        let weight = CartanVector::new(Rational64::new(m + 3, 6), Rational64::new(m, 3));
        let generator = CartanVector::from_ints(k, k + l);
        ensure(
            weight.inner(&generator) == Rational64::from_integer(0),
            || format!("m = {m}: generator not orthogonal to the weight"),
        )?;
    }
    let class = |m| u2_stabilizer_closed_form(m).map(|c| c.class());
    ensure(
        u2_stabilizer_closed_form(1) == CircleSubgroup::canonicalize(0, 1)
            && class(1) == Ok(CircleClass::RootType),
        || "m = 1 should give the (0,1) class".into(),
    )?;
    ensure(class(3) == Ok(CircleClass::SingularType), || {
        "m = 3 should be singular".into()
    })
}

fn sphere_transitivity() -> Outcome {
    let tol = Tolerances::new(1e-9, 1e-7).map_err(|e| e.to_string())?;
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for tag in StabilizerTag::ALL {
        for rep in enumerate_slice_reps(tag, 5) {
            let ok = sphere_transitivity_check(&rep.real_form::<f64>(), &mut rng, 8, &tol)
                .map_err(|e| format!("{rep}: {e}"))?;
            ensure(ok, || format!("{rep} is not sphere-transitive"))?;
        }
    }
    let control = sphere_transitivity_check(&RealRep::<f64>::trivial_torus(), &mut rng, 8, &tol)
        .map_err(|e| e.to_string())?;
    ensure(!control, || "trivial control representation passed".into())
}

fn consimilarity_profile() -> Outcome {
    let tol = Tolerances64::default();
    let dims = consim_profile(&tol).map_err(|e| e.to_string())?;
    ensure(dims == [3, 1, 1, 1, 1, 1, 1, 1, 3], || {
        format!("profile {dims:?}")
    })?;
    for k in 0..=64 {
        let t = k as f64 * PI / 32.0;
        let d = gamma(&geodesic(t)).distance(&geodesic(2.0 * t));
        ensure(d < 1e-10, || format!("Gamma(B({t})) off B(2t) by {d:e}"))?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let (mut trace, mut equivariance) = (0.0f64, 0.0f64);
    for _ in 0..1000 {
        let a = GroupMatrix::<f64>::random(&mut rng);
        let b = GroupMatrix::random(&mut rng);
        trace = trace.max(gamma(&a).trace().im.abs());
        let lhs = gamma(&consim_act(&a, &b));
        equivariance = equivariance.max(lhs.distance(&(a * gamma(&b) * a.inverse())));
    }
    ensure(trace < 1e-12, || format!("|Im Tr Gamma| up to {trace:e}"))?;
    ensure(equivariance < 1e-10, || {
        format!("equivariance deviation {equivariance:e}")
    })
}

/// Distance on the torus to `{s ≡ 0 mod π} ∪ {s ≡ ±t mod 2π}`.
fn line_distance(t: f64, s: f64) -> f64 {
    let wrap = |x: f64, p: f64| {
        let r = x.rem_euclid(p);
        r.min(p - r)
    };
    wrap(s, PI)
        .min(wrap(s - t, TAU) / 2f64.sqrt())
        .min(wrap(s + t, TAU) / 2f64.sqrt())
}

fn torus_hypersurface() -> Outcome {
    let scan = hypersurface_torus_solutions(720, 1e-9).map_err(|e| e.to_string())?;
    let h = TAU / 720.0;
    for &(i, j) in &scan.cells {
        let (t, s) = ((i as f64 + 0.5) * h, (j as f64 + 0.5) * h);
        let d = line_distance(t, s);
        ensure(d <= h, || format!("cell ({i},{j}) is {d:e} from the lines"))?;
    }
    for k in 0..720 {
        let x = (k as f64 + 0.5) * h;
        for (t, s) in [(x, 0.0), (x, PI), (x, x), (x, TAU - x)] {
            ensure(scan.contains_point(t, s), || {
                format!("line point ({t:.4}, {s:.4}) not marked")
            })?;
        }
    }
    ensure(!scan.contains_point(1.0, 2.0), || {
        "cell at (1, 2) marked".into()
    })?;
    let components = scan.component_count();
    ensure(components == 1, || format!("{components} components"))
}

fn grassmannian_function() -> Outcome {
    let tol = Tolerances64::default();
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let mut worst = 0.0f64;
    for _ in 0..1000 {
        let plane = OrientedThreePlane::<f64>::random(&mut rng);
        let f = grassmann_f(&plane);
        let g = GroupMatrix::random(&mut rng);
        worst = worst.max((grassmann_f(&plane.adjoint_by(&g)) - f).abs());
        worst = worst.max((grassmann_f(&plane.rotated(&random_rotation(&mut rng))) - f).abs());
    }
    ensure(worst < 1e-9, || format!("invariance deviation {worst:e}"))?;

    // ⟨v₁, [v₂, v₃]⟩ = ⟨v₁, −2v₁⟩ = −4 on the frame v_k, so |f| = 4 / 2^{3/2} = √2.
    let critical = 2f64.sqrt();
    let survey = grassmann_survey(42, 100_000, REFINED_PLANES);
    ensure(survey.max_sampled <= critical + 1e-6, || {
        format!("sampled max {}", survey.max_sampled)
    })?;
    ensure(survey.max_refined <= critical + 1e-6, || {
        format!("refined max {}", survey.max_refined)
    })?;
    ensure(critical - survey.max_refined < 0.05, || {
        format!(
            "refined max {} not within 0.05 of {critical}",
            survey.max_refined
        )
    })?;

    for (t, expected) in [
        (0.0, 4),
        (PI, 4),
        (-PI, 4),
        (PI / 3.0, 2),
        (1.0, 2),
        (2.5, 2),
        (PI / 2.0, 2),
    ] {
        let dim = flow_line_stabilizer(t, &tol).map_err(|e| e.to_string())?;
        ensure(dim == expected, || {
            format!("flow line at t = {t}: {dim}, expected {expected}")
        })?;
    }
    Ok(())
}

fn circle_base_bundles() -> Outcome {
    for (k, l) in coprime_pairs(10) {
        let result = classify_circle_base(k, l).map_err(|e| e.to_string())?;
        let root = [k, l, -k - l].contains(&0);
        let c = CircleSubgroup::canonicalize(k, l).map_err(|e| e.to_string())?;
        let disconnected = normalizer_components(&c).component_count == 2;
        ensure(result.trivial_bundle, || {
            format!("({k},{l}): trivial bundle missing")
        })?;
        ensure(
            result.nontrivial_bundle_exists == root && root == disconnected,
            || {
                format!(
                    "({k},{l}): nontrivial {}, root {root}, disconnected {disconnected}",
                    result.nontrivial_bundle_exists
                )
            },
        )?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("table fidelity", Duration::from_secs(1), table_fidelity),
        (
            "normalizer components",
            Duration::from_secs(5),
            normalizer_components_check,
        ),
        (
            "torus stabilizer components",
            Duration::from_secs(30),
            torus_stabilizer_gcd,
        ),
        (
            "slice-to-stabilizer formulas",
            Duration::MAX,
            slice_to_stabilizer,
        ),
        (
            "sphere transitivity",
            Duration::from_secs(2),
            sphere_transitivity,
        ),
        (
            "consimilarity profile",
            Duration::from_secs(5),
            consimilarity_profile,
        ),
        (
            "torus hypersurface",
            Duration::from_secs(10),
            torus_hypersurface,
        ),
        (
            "grassmannian function",
            Duration::from_secs(30),
            grassmannian_function,
        ),
        (
            "bundles over a circle",
            Duration::from_secs(1),
            circle_base_bundles,
        ),
    ];
    let mut failures = 0;
    for (i, (name, limit, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|()| {
            ensure(elapsed <= *limit, || {
                format!("took {elapsed:.2?}, limit {limit:?}")
            })
        });
        match outcome {
            Ok(()) => println!("PASS  {}. {name} ({elapsed:.2?})", i + 1),
            Err(msg) => {
                failures += 1;
                println!("FAIL  {}. {name} ({elapsed:.2?}): {msg}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failures,
        criteria.len()
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
