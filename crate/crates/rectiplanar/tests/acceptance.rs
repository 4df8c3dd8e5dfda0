//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit on failure.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rectiplanar::drawing::{realize, validate_geometry};
use rectiplanar::fixed::{test_2con_fixed, test_fixed, test_outerplane, LowerBoundMap};
use rectiplanar::graph::{block_cut_tree, Graph, Vertex};
use rectiplanar::oracle::{
    all_embeddings, chord6, enumerate_outerplanar, ladder, oracle_fixed, oracle_variable, random_outerplanar,
    Constraints, DEFAULT_CAP,
};
use rectiplanar::rectirep::{join, JoinPart, JoinProperty, RepError};
use rectiplanar::variable::{
    all_edge_labels, dio_feasible, test_2con_rooted, test_variable, ChiSet, DioInstance,
};
use rectiplanar::{Angle, Dart, RectilinearRepresentation};
use std::time::{Duration, Instant};

const ENUMERATED_MAX_N: usize = 8;
const RANDOM_GRAPHS: u64 = 2000;
const RANDOM_MAX_N: u64 = 12;
const SUITE_BUDGET: Duration = Duration::from_secs(600);
const NOMURA_GRAPHS: u64 = 500;
const DIO_BOUND: u32 = 15;
const DIO_MAX_T: u32 = 80;
const DIO_BUDGET: Duration = Duration::from_secs(60);
const LADDER_SIZES: [usize; 4] = [1_000, 10_000, 100_000, 1_000_000];
const SLOPE_TARGET: f64 = 1.0;
const SLOPE_TOLERANCE: f64 = 0.15;
const LARGEST_LADDER_BUDGET: Duration = Duration::from_secs(10);
const VALID_JOINS: usize = 1000;
const BROKEN_JOINS_PER_PROPERTY: usize = 25;

struct Report {
    passed: bool,
    detail: String,
}

fn report(passed: bool, detail: impl Into<String>) -> Report {
    Report { passed, detail: detail.into() }
}

fn corpus() -> Vec<Graph> {
    (1..=ENUMERATED_MAX_N).flat_map(enumerate_outerplanar).collect()
}

fn random_corpus() -> Vec<Graph> {
    (0..RANDOM_GRAPHS).map(|s| random_outerplanar(1 + (s % RANDOM_MAX_N) as usize, 4, s)).collect()
}

fn variable_matches_oracle() -> Report {
    let start = Instant::now();
    let mut graphs = corpus();
    let enumerated = graphs.len();
    graphs.extend(random_corpus());
    let mut wrong = 0;
    for g in &graphs {
        let fast = test_variable(g).expect("connected outerplanar input").is_some();
        let slow = oracle_variable(g, &[], None, DEFAULT_CAP).expect("within cap").feasible;
        wrong += usize::from(fast != slow);
    }
    let took = start.elapsed();
    report(
        wrong == 0 && took <= SUITE_BUDGET,
        format!("{enumerated} enumerated + {RANDOM_GRAPHS} random graphs, {wrong} disagreements, {took:.1?}"),
    )
}

fn fixed_matches_oracle() -> Report {
    let (mut checked, mut wrong) = (0, 0);
    for g in corpus() {
        for e in all_embeddings(&g) {
            let fast = test_fixed(&e).expect("connected input").is_some();
            let slow = oracle_fixed(&e, &Constraints::default(), DEFAULT_CAP).expect("within cap").feasible;
            checked += 1;
            wrong += usize::from(fast != slow);
        }
    }
    report(wrong == 0, format!("{checked} embeddings, {wrong} disagreements"))
}

fn is_two_connected(g: &Graph) -> bool {
    g.vertex_count() >= 3 && block_cut_tree(g).is_ok_and(|b| b.blocks.len() == 1)
}

fn respects(rep: &RectilinearRepresentation, ell: &LowerBoundMap) -> bool {
    rep.angles.iter().enumerate().all(|(d, &a)| a >= ell.get(Dart(d)))
}

fn witnesses_are_valid() -> Report {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let (mut reps, mut bad_rep, mut bad_ell, mut bad_chi, mut bad_draw) = (0, 0, 0, 0, 0);
    let mut check = |rep: &RectilinearRepresentation, bad_rep: &mut usize, bad_draw: &mut usize| {
        reps += 1;
        *bad_rep += usize::from(!rep.validate());
        let drawn = realize(rep).is_ok_and(|d| validate_geometry(&d, rep));
        *bad_draw += usize::from(!drawn);
    };
    for g in &corpus() {
        if let Some(r) = test_variable(g).unwrap() {
            check(&r, &mut bad_rep, &mut bad_draw);
        }
        if let Some(r) = test_outerplane(g).unwrap() {
            check(&r, &mut bad_rep, &mut bad_draw);
        }
        for e in all_embeddings(g) {
            if let Some(r) = test_fixed(&e).unwrap() {
                check(&r, &mut bad_rep, &mut bad_draw);
                bad_ell += usize::from(!respects(&r, &LowerBoundMap::uniform(&e, Angle::RIGHT)));
            }
            if is_two_connected(g) {
                let mut ell = LowerBoundMap::uniform(&e, Angle::RIGHT);
                for d in 0..e.dart_count() {
                    ell.set(Dart(d), Angle::from_quarters(rng.gen_range(1..=2)).unwrap());
                }
                if let Some(r) = test_2con_fixed(&e, &ell).unwrap() {
                    check(&r, &mut bad_rep, &mut bad_draw);
                    bad_ell += usize::from(!respects(&r, &ell));
                }
            }
        }
        if is_two_connected(g) {
            let deg2: Vec<Vertex> = (0..g.vertex_count()).filter(|&v| g.degree(v) == 2).collect();
            let chi = ChiSet::new(deg2.iter().copied().filter(|_| rng.gen_bool(0.5)).collect());
            let labels = all_edge_labels(g, &chi).unwrap();
            for (e, set) in labels.outer_edges() {
                for (mu, nu) in set.iter() {
                    let r = test_2con_rooted(g, e, &chi, mu, nu).unwrap().expect("labelled pair is realizable");
                    check(&r, &mut bad_rep, &mut bad_draw);
                    let emb = &r.embedding;
                    let chi_ok = chi.iter().all(|&v| {
                        emb.in_darts(v).all(|d| matches!(r.angle(d).quarters(), 1 | 3))
                    });
                    bad_chi += usize::from(!chi_ok);
                }
            }
        }
    }
    let bad = bad_rep + bad_ell + bad_chi + bad_draw;
    report(
        bad == 0,
        format!(
            "{reps} representations: {bad_rep} invalid, {bad_ell} below bounds, {bad_chi} bad constrained angles, {bad_draw} bad drawings"
        ),
    )
}

fn nomura() -> Report {
    let mut wrong = 0;
    for seed in 0..NOMURA_GRAPHS {
        let g = random_outerplanar(5 + (seed % 40) as usize, 3, 1000 + seed);
        let drawable = test_variable(&g).unwrap().is_some();
        wrong += usize::from(drawable == g.has_triangle());
    }
    report(wrong == 0, format!("{NOMURA_GRAPHS} max-degree-3 graphs, {wrong} disagree with triangle-freeness"))
}

fn dio_exhaustive() -> Report {
    let start = Instant::now();
    let (mut count, mut wrong, mut bad_witness) = (0u64, 0u64, 0u64);
    for a in 0..=DIO_BOUND {
        for b in 0..=DIO_BOUND {
            for c in 0..=DIO_BOUND {
                // sums of the big parts, as a bit set
                let mut big = 0u128;
                for i in 0..=a {
                    for j in 0..=b {
                        for k in 0..=c {
                            let s = 4 * i + 3 * j + 2 * k;
                            if s <= DIO_MAX_T {
                                big |= 1 << s;
                            }
                        }
                    }
                }
                for d in 0..=DIO_BOUND {
                    for t in 0..=DIO_MAX_T {
                        let reachable = (t.saturating_sub(d)..=t).any(|s| big >> s & 1 == 1);
                        let inst = DioInstance { a, b, c1: c, c2: 0, d, t };
                        let got = dio_feasible(&inst);
                        count += 1;
                        wrong += u64::from(got.is_some() != reachable);
                        bad_witness += u64::from(got.is_some_and(|s| !s.solves(&inst)));
                    }
                }
            }
        }
    }
    let took = start.elapsed();
    report(
        wrong == 0 && bad_witness == 0 && took <= DIO_BUDGET,
        format!("{count} instances, {wrong} wrong verdicts, {bad_witness} bad witnesses, {took:.1?}"),
    )
}

fn chord6_sensitivity() -> Report {
    let g = chord6();
    let o = rectiplanar::embedding::outerplane_embedding(&g).expect("outerplanar");
    let mut verdicts = Vec::new();
    let mut agree = true;
    for f in 0..o.face_count() {
        let e = o.with_outer_face(f).unwrap();
        let got = test_fixed(&e).unwrap().is_some();
        agree &= got == oracle_fixed(&e, &Constraints::default(), DEFAULT_CAP).unwrap().feasible;
        verdicts.push((o.face(f).len(), got));
    }
    let hexagon_ok = verdicts.iter().filter(|v| v.0 == 6).all(|v| v.1);
    let quads_fail = verdicts.iter().filter(|v| v.0 == 4).all(|v| !v.1);
    let variable = test_variable(&g).unwrap().is_some();
    report(
        hexagon_ok && quads_fail && variable && agree && verdicts.len() == 3,
        format!("outer face size -> drawable: {verdicts:?}; any embedding: {variable}"),
    )
}

fn least_squares_slope(points: &[(f64, f64)]) -> f64 {
    rectiplanar::cli::loglog_slope(points)
}

fn ladder_linearity() -> Report {
    let mut points = Vec::new();
    let mut largest = Duration::ZERO;
    let mut once = true;
    for n in LADDER_SIZES {
        let g = ladder(n / 2 - 1);
        let reps = if n <= 10_000 { 7 } else { 3.min(1_000_000 / n) };
        let mut best = Duration::MAX;
        for _ in 0..reps.max(1) {
            let t = Instant::now();
            let r = test_variable(&g).unwrap();
            best = best.min(t.elapsed());
            assert!(r.is_some(), "ladders are drawable");
        }
        largest = best;
        points.push((n as f64, best.as_secs_f64()));
        if n <= 100_000 {
            let labels = all_edge_labels(&g, &ChiSet::default()).unwrap();
            let squares = g.edge_count() - g.vertex_count() + 1;
            let outer = g.edge_count() - (squares - 1);
            once &= labels.stats.recomputed == 0 && labels.stats.sets_computed == 2 * (squares - 1) + outer;
        }
    }
    let slope = least_squares_slope(&points);
    let times: Vec<String> = points.iter().map(|p| format!("{:.0}:{:.3}s", p.0, p.1)).collect();
    report(
        (slope - SLOPE_TARGET).abs() <= SLOPE_TOLERANCE && largest <= LARGEST_LADDER_BUDGET && once,
        format!("slope {slope:.3}, times [{}], each outgoing set computed once: {once}", times.join(", ")),
    )
}

/// A drawable graph and a vertex with a single outer corner.
struct Piece {
    rep: RectilinearRepresentation,
    at: Vertex,
    outer: u8,
}

fn pieces() -> Vec<Piece> {
    let mut out = Vec::new();
    for seed in 0..400u64 {
        let g = random_outerplanar(2 + (seed % 7) as usize, 4, 77 + seed);
        let Some(rep) = test_variable(&g).unwrap() else { continue };
        for v in 0..g.vertex_count() {
            if let Ok(a) = rep.outer_angle(v) {
                if g.degree(v) <= 3 {
                    out.push(Piece { rep: rep.clone(), at: v, outer: a.quarters() });
                }
            }
        }
    }
    out
}

/// Clockwise edges at `v` starting right after the outer corner.
fn after_outer_corner(rep: &RectilinearRepresentation, v: Vertex) -> Vec<usize> {
    let e = &rep.embedding;
    let rot = e.rotation(v);
    let start = rot
        .iter()
        .position(|&x| e.face_of(Dart::leaving(e.graph(), x, v).twin()) == e.outer_face())
        .expect("vertex on the outer face");
    (0..rot.len()).map(|i| rot[(start + i) % rot.len()]).collect()
}

struct JoinCase {
    maps: [Vec<Vertex>; 2],
    rotation: Vec<(usize, usize)>,
    angles: Vec<Angle>,
    first_len: usize,
}

fn join_case(p: &Piece, q: &Piece, x: u8) -> JoinCase {
    let n1 = p.rep.embedding.graph().vertex_count();
    let map1: Vec<Vertex> = (0..n1).map(|v| if v == p.at { 0 } else if v < p.at { v + 1 } else { v }).collect();
    let n2 = q.rep.embedding.graph().vertex_count();
    let map2: Vec<Vertex> = (0..n2).map(|v| if v == q.at { 0 } else if v < q.at { n1 + v } else { n1 + v - 1 }).collect();
    let e1 = after_outer_corner(&p.rep, p.at);
    let e2 = after_outer_corner(&q.rep, q.at);
    let inner = |piece: &Piece, edges: &[usize]| -> Vec<Angle> {
        let emb = &piece.rep.embedding;
        edges.iter().map(|&x| piece.rep.angle(Dart::leaving(emb.graph(), x, piece.at).twin())).collect()
    };
    let y = p.outer + q.outer - 4 - x;
    let mut angles = inner(p, &e1);
    angles[0] = Angle::from_quarters(y).unwrap();
    let mut second = inner(q, &e2);
    second[0] = Angle::from_quarters(x).unwrap();
    angles.extend(second);
    let rotation = e1.iter().map(|&x| (0, x)).chain(e2.iter().map(|&x| (1, x))).collect();
    JoinCase { maps: [map1, map2], rotation, angles, first_len: e1.len() }
}

fn run_join(p: &Piece, q: &Piece, case: &JoinCase) -> Result<RectilinearRepresentation, RepError> {
    let parts = [
        JoinPart { rep: &p.rep, vertex_map: &case.maps[0] },
        JoinPart { rep: &q.rep, vertex_map: &case.maps[1] },
    ];
    join(&parts, 0, &case.rotation, &case.angles)
}

// breaks exactly one property of a valid case, if this case allows it
fn break_case(mut case: JoinCase, prop: JoinProperty) -> Option<JoinCase> {
    let k = case.first_len;
    let q = |a: &Angle| a.quarters();
    match prop {
        JoinProperty::A => {
            // the first part's edges in the wrong cyclic order
            if k < 3 {
                return None;
            }
            case.rotation[..k].reverse();
            case.angles[..k].reverse();
        }
        JoinProperty::B => {
            let i = case.angles.iter().position(|a| q(a) == 1)?;
            let j = (0..case.angles.len()).find(|&j| j != i && q(&case.angles[j]) == 3)?;
            case.angles[i] = Angle::ZERO;
            case.angles[j] = Angle::FULL;
        }
        JoinProperty::C => {
            let i = case.angles.iter().position(|a| q(a) < 3)?;
            case.angles[i] = Angle::from_quarters(q(&case.angles[i]) + 1).unwrap();
        }
        JoinProperty::D => {
            // move a unit between an inner corner of the first part and a new corner
            let new = k;
            let inner = (1..k).find(|&i| q(&case.angles[i]) >= 2 && q(&case.angles[new]) <= 2);
            let (from, to) = match inner {
                Some(i) => (i, new),
                None => {
                    let i = (1..k).find(|&i| q(&case.angles[i]) <= 2 && q(&case.angles[new]) >= 2)?;
                    (new, i)
                }
            };
            case.angles[from] = Angle::from_quarters(q(&case.angles[from]) - 1).unwrap();
            case.angles[to] = Angle::from_quarters(q(&case.angles[to]) + 1).unwrap();
        }
    }
    Some(case)
}

fn joins() -> Report {
    let pieces = pieces();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let (mut valid_ok, mut valid_total) = (0, 0);
    let mut broken = [(JoinProperty::A, 0, 0), (JoinProperty::B, 0, 0), (JoinProperty::C, 0, 0), (JoinProperty::D, 0, 0)];
    let mut attempts = 0;
    while (valid_total < VALID_JOINS || broken.iter().any(|b| b.1 < BROKEN_JOINS_PER_PROPERTY)) && attempts < 1_000_000 {
        attempts += 1;
        let p = &pieces[rng.gen_range(0..pieces.len())];
        let q = &pieces[rng.gen_range(0..pieces.len())];
        let deg = |x: &Piece| x.rep.embedding.graph().degree(x.at);
        let gap = i32::from(p.outer) + i32::from(q.outer) - 4;
        if deg(p) + deg(q) > 4 || !(2..=6).contains(&gap) {
            continue;
        }
        let lo = (gap - 3).max(1) as u8;
        let hi = (gap - 1).min(3) as u8;
        let case = join_case(p, q, rng.gen_range(lo..=hi));
        if valid_total < VALID_JOINS {
            valid_total += 1;
            valid_ok += usize::from(run_join(p, q, &case).is_ok_and(|r| r.validate()));
            continue;
        }
        let slot = rng.gen_range(0..4);
        let (prop, done, _) = broken[slot];
        if done >= BROKEN_JOINS_PER_PROPERTY {
            continue;
        }
        if let Some(bad) = break_case(case, prop) {
            broken[slot].1 += 1;
            let caught = run_join(p, q, &bad) == Err(RepError::JoinPropertyViolated(prop));
            broken[slot].2 += usize::from(caught);
        }
    }
    let rejected: usize = broken.iter().map(|b| b.2).sum();
    let tried: usize = broken.iter().map(|b| b.1).sum();
    let per: Vec<String> = broken.iter().map(|b| format!("({}) {}/{}", b.0, b.2, b.1)).collect();
    report(
        valid_total == VALID_JOINS
            && valid_ok == VALID_JOINS
            && tried == 4 * BROKEN_JOINS_PER_PROPERTY
            && rejected == tried,
        format!("{valid_ok}/{valid_total} valid joins accepted; violated joins rejected with the matching property: {}", per.join(", ")),
    )
}

fn main() {
    let criteria: [(&str, fn() -> Report); 8] = [
        ("variable embedding matches the oracle", variable_matches_oracle),
        ("fixed embedding matches the oracle", fixed_matches_oracle),
        ("witnesses and drawings are valid", witnesses_are_valid),
        ("max-degree-3 drawability is triangle-freeness", nomura),
        ("bounded equation solver matches exhaustive search", dio_exhaustive),
        ("chord6 verdict depends on the outer face", chord6_sensitivity),
        ("ladder running time is linear", ladder_linearity),
        ("joins are accepted or rejected correctly", joins),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let r = f();
        println!("criterion {} {} {name}: {}", i + 1, if r.passed { "PASS" } else { "FAIL" }, r.detail);
        failed += usize::from(!r.passed);
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
