//! One PASS/FAIL line per acceptance criterion; exits nonzero on any FAIL.
//!
//! Every comparison is exact over the rationals, so the only pinned
//! tolerance is zero. Sample counts and seeds are pinned below.

use std::collections::BTreeMap;
use std::process::{Command, ExitCode};
use std::sync::Arc;

use liecyclic_core::complex::{build_mixed, mixed_check, total_complexes, Side};
use liecyclic_core::duality::duality_square_check;
use liecyclic_core::enveloping::coaction::{regular_g_coaction, regular_stability_defect, ug_ayd_holds};
use liecyclic_core::enveloping::filtration::{filtration, in_span};
use liecyclic_core::enveloping::pbw::{unit, Descent, Enveloping, Mono, PbwElement};
use liecyclic_core::enveloping::suite::{self, SuiteConfig};
use liecyclic_core::enveloping::{extend_coaction, restrict_coaction, CocyclicModule, Projection};
use liecyclic_core::lie::builtin::{abelian, heisenberg, nonabelian2, sl2};
use liecyclic_core::linalg::{span_rank, Matrix};
use liecyclic_core::sayd::builtin::{adjoint, sl2_simple, trivial};
use liecyclic_core::sayd::{solve_ayd_linear, ActionMatrices, CoactionMatrices, SaydModule};
use liecyclic_core::scalar::{q, qr};
use liecyclic_core::weil::{build_truncated_weil, build_weyl_ops};
use liecyclic_core::{Lie, Pbw, QMatrix, Sayd, Q};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Exact arithmetic throughout: a value matches only when equal.
const TOLERANCE: i64 = 0;
const RANDOM_INSTANCES: usize = 100;
const RANDOM_WORDS: usize = 200;
const MAX_WORD_LEN: usize = 5;
const HOPF_DEGREE: u32 = 3;
const COCYCLIC_SAMPLES: usize = 20;
const SEED: u64 = 7;

type Outcome = (bool, String);

fn cli(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_liecyclic")).args(args).output().expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8_lossy(&out.stdout).into_owned())
}

fn algebras() -> Vec<(&'static str, Arc<Lie>)> {
    vec![
        ("sl2", Arc::new(sl2())),
        ("heisenberg", Arc::new(heisenberg())),
        ("nonabelian2", Arc::new(nonabelian2())),
        ("abelian3", Arc::new(abelian(3))),
    ]
}

fn shipped() -> Vec<(String, Sayd)> {
    let mut out = Vec::new();
    for (name, g) in algebras() {
        out.push((format!("{name}/trivial"), trivial(g.clone(), 1)));
        for cap in 1..=4 {
            out.push((format!("{name}/weil{cap}"), build_truncated_weil(g.clone(), cap)));
        }
    }
    out
}

fn sl2_weil() -> Sayd {
    build_truncated_weil(Arc::new(sl2()), 2)
}

// ---- 1 ----

fn simple_module_classification() -> Outcome {
    let g = Arc::new(sl2::<Q>());
    let dim = solve_ayd_linear(&sl2_simple(g).unwrap()).dim();
    let (code, out) = cli(&["solve-sayd", "sl2:simple"]);
    let printed = out.contains("solution space dimension: 0");
    (dim == 0 && code == 0 && printed, format!("solution dimension {dim}, cli exit {code}"))
}

// ---- 2 ----

fn m4(rows: [[i64; 4]; 4]) -> QMatrix {
    Matrix::from_i64(&rows.iter().map(|r| r.as_slice()).collect::<Vec<_>>())
}

fn displayed_b() -> Vec<QMatrix> {
    vec![
        m4([[0, 0, 0, 0], [0, 0, 0, -2], [0, 0, 0, 0], [0, 0, 1, 0]]),
        m4([[0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 2], [0, -1, 0, 0]]),
        m4([[0, 0, 0, 0], [0, 2, 0, 0], [0, 0, -2, 0], [0, 0, 0, 0]]),
    ]
}

fn family(c: Q, d: Q) -> Vec<QMatrix> {
    let z = || Matrix::<Q>::zeros(4, 4);
    let (mut a1, mut a2, mut a3) = (z(), z(), z());
    a1[(0, 1)] = c.clone();
    a1[(2, 0)] = d.clone();
    a2[(0, 2)] = c.clone();
    a2[(1, 0)] = d.clone();
    a3[(0, 3)] = c;
    a3[(3, 0)] = d * qr(1, 2);
    vec![a1, a2, a3]
}

fn flatten(mats: &[QMatrix]) -> Vec<Q> {
    mats.iter().flat_map(|m| (0..m.rows()).flat_map(move |i| (0..m.cols()).map(move |j| m[(i, j)].clone()))).collect()
}

fn weil_classification() -> Outcome {
    let w = sl2_weil();
    let sol = solve_ayd_linear(&w.action);
    let computed: Vec<Vec<Q>> = sol.basis.iter().map(|s| flatten(s)).collect();
    let mut both = computed.clone();
    both.push(flatten(&family(q(1), q(0))));
    both.push(flatten(&family(q(0), q(1))));
    let spans = sol.dim() == 2 && span_rank(&computed, 48) == 2 && span_rank(&both, 48) == 2;
    // brute-force commutators of the displayed matrices
    let mut oracle = true;
    for c in -3..=3 {
        for d in -3..=3 {
            let a = family(q(c), q(d));
            let commute = (0..3).all(|i| (0..3).all(|j| a[i].commutator(&a[j]).is_zero()));
            oracle &= commute == (c * d == 0);
        }
    }
    let symbolic = sol.commutativity.obstructions() == vec![(0, 1)];
    let ok = w.action.mats() == displayed_b().as_slice() && spans && oracle && symbolic;
    (ok, format!("dim {}, spans displayed family {spans}, brute-force cd=0 {oracle}, symbolic {symbolic}", sol.dim()))
}

// ---- 3 ----

fn random_matrix(rng: &mut ChaCha8Rng, m: usize) -> QMatrix {
    Matrix::from_fn(m, m, |_, _| q(rng.gen_range(-2..=2)))
}

fn perturb(rng: &mut ChaCha8Rng, v: &Sayd) -> Sayd {
    let (n, m) = (v.lie().dim(), v.dim());
    let mut b = v.action.mats().to_vec();
    let mut a = v.coaction.mats().to_vec();
    let target = if rng.gen_bool(0.5) { &mut b } else { &mut a };
    let k = rng.gen_range(0..n);
    let (i, j) = (rng.gen_range(0..m), rng.gen_range(0..m));
    target[k][(i, j)] = target[k][(i, j)].clone() + if rng.gen_bool(0.5) { q(1) } else { q(-1) };
    SaydModule::new(ActionMatrices::new(v.lie().clone(), m, b).unwrap(), CoactionMatrices::new(v.lie().clone(), m, a).unwrap()).unwrap()
}

fn random_instance(rng: &mut ChaCha8Rng) -> Sayd {
    let small: Vec<Arc<Lie>> =
        vec![Arc::new(abelian(1)), Arc::new(abelian(2)), Arc::new(nonabelian2()), Arc::new(sl2()), Arc::new(heisenberg()), Arc::new(abelian(3))];
    let g = small[rng.gen_range(0..small.len())].clone();
    let n = g.dim();
    let m = rng.gen_range(1..=4);
    let base = match rng.gen_range(0..5) {
        0 => {
            let b = (0..n).map(|_| random_matrix(rng, m)).collect();
            let a = (0..n).map(|_| random_matrix(rng, m)).collect();
            SaydModule::new(ActionMatrices::new(g.clone(), m, b).unwrap(), CoactionMatrices::new(g.clone(), m, a).unwrap()).unwrap()
        }
        1 => {
            let x = Matrix::from_fn(m, m, |i, j| if i < j { q(rng.gen_range(-2..=2)) } else { q(0) });
            let a = (0..n).map(|_| x.scale(&q(rng.gen_range(-2..=2)))).collect();
            SaydModule::new(ActionMatrices::zero(g.clone(), m), CoactionMatrices::new(g.clone(), m, a).unwrap()).unwrap()
        }
        2 => {
            let w = build_truncated_weil(g.clone(), rng.gen_range(0..=2));
            if w.dim() > 4 {
                trivial(g.clone(), m)
            } else {
                w
            }
        }
        3 => {
            let action = adjoint(g.clone());
            let sol = solve_ayd_linear(&action);
            let mut a: Vec<QMatrix> = vec![Matrix::zeros(n, n); n];
            for basis in &sol.basis {
                let c = q(rng.gen_range(-2..=2));
                for (j, bj) in basis.iter().enumerate() {
                    a[j] = &a[j] + &bj.scale(&c);
                }
            }
            SaydModule::new(action, CoactionMatrices::new(g.clone(), n, a).unwrap()).unwrap()
        }
        _ => trivial(g.clone(), m),
    };
    if rng.gen_bool(0.4) {
        perturb(rng, &base)
    } else {
        base
    }
}

fn biconditional() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let (mut pos, mut neg, mut exceptions) = (0, 0, 0);
    for _ in 0..RANDOM_INSTANCES {
        let v = random_instance(&mut rng);
        let r = mixed_check(&v);
        let four = r.module && r.comodule && r.ayd && r.stability;
        if r.chain.total_squared_zero() != four {
            exceptions += 1;
        }
        if four {
            pos += 1;
        } else {
            neg += 1;
        }
    }
    (exceptions == 0, format!("{RANDOM_INSTANCES} instances: {pos} with all four verdicts, {neg} without, {exceptions} exceptions"))
}

// ---- 4 ----

fn squares_vanish() -> Outcome {
    let mut bad = Vec::new();
    let examples = shipped();
    for (name, v) in &examples {
        for side in [Side::Chain, Side::Cochain] {
            let ok = build_mixed(v, side).map(|d| d.up_squares_to_zero() && d.down_squares_to_zero()).unwrap_or(false);
            if !ok {
                bad.push(format!("{name} {side:?}"));
            }
        }
    }
    (bad.is_empty(), format!("{} examples, failures: [{}]", examples.len(), bad.join(", ")))
}

// ---- 5 ----

/// Chevalley–Eilenberg Betti numbers with trivial coefficients, written
/// directly from the bracket without the engine's complexes.
mod oracle {
    use liecyclic_core::scalar::q;
    use liecyclic_core::{Lie, Q};
    use num_traits::Zero;

    fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
        if k == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for s in subsets(n, k - 1) {
            let start = s.last().map_or(0, |&l| l + 1);
            for x in start..n {
                let mut t = s.clone();
                t.push(x);
                out.push(t);
            }
        }
        out
    }

    fn sort_signed(mut w: Vec<usize>) -> Option<(Vec<usize>, bool)> {
        let mut odd = false;
        for i in 0..w.len() {
            for j in 0..w.len() - 1 - i {
                if w[j] == w[j + 1] {
                    return None;
                }
                if w[j] > w[j + 1] {
                    w.swap(j, j + 1);
                    odd = !odd;
                }
            }
        }
        Some((w, odd))
    }

    fn boundary_rank(g: &Lie, n: usize) -> usize {
        if n == 0 {
            return 0;
        }
        let src = subsets(g.dim(), n);
        let dst = subsets(g.dim(), n - 1);
        let mut m = vec![vec![q(0); src.len()]; dst.len()];
        for (c, s) in src.iter().enumerate() {
            for r in 0..n {
                for t in r + 1..n {
                    let sign = if (r + t) % 2 == 1 { q(-1) } else { q(1) };
                    let rest: Vec<usize> = s.iter().enumerate().filter(|(i, _)| *i != r && *i != t).map(|(_, &x)| x).collect();
                    for k in 0..g.dim() {
                        let ck = g.c(s[r], s[t], k);
                        if ck.is_zero() {
                            continue;
                        }
                        let mut w = vec![k];
                        w.extend(&rest);
                        if let Some((sorted, odd)) = sort_signed(w) {
                            let row = dst.iter().position(|d| *d == sorted).unwrap();
                            let v = if odd { -ck } else { ck };
                            m[row][c] = m[row][c].clone() + sign.clone() * v;
                        }
                    }
                }
            }
        }
        rank(m)
    }

    fn rank(mut m: Vec<Vec<Q>>) -> usize {
        let rows = m.len();
        let cols = m.first().map_or(0, Vec::len);
        let mut r = 0;
        for c in 0..cols {
            let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
            m.swap(r, p);
            for i in 0..rows {
                if i != r && !m[i][c].is_zero() {
                    let f = m[i][c].clone() / m[r][c].clone();
                    for j in 0..cols {
                        let d = f.clone() * m[r][j].clone();
                        m[i][j] = m[i][j].clone() - d;
                    }
                }
            }
            r += 1;
        }
        r
    }

    pub fn betti(g: &Lie) -> Vec<usize> {
        let n = g.dim();
        let ranks: Vec<usize> = (0..=n).map(|k| boundary_rank(g, k)).collect();
        (0..=n).map(|k| subsets(n, k).len() - ranks[k] - if k < n { ranks[k + 1] } else { 0 }).collect()
    }
}

fn sl2_periodic() -> Outcome {
    let g = Arc::new(sl2::<Q>());
    let h = oracle::betti(&g);
    let even: usize = h.iter().step_by(2).sum();
    let odd: usize = h.iter().skip(1).step_by(2).sum();
    let hp = build_mixed(&trivial(g, 1), Side::Chain).and_then(|d| d.hp_dims()).unwrap_or_default();
    let (code, out) = cli(&["cohomology", "--hp", "sl2:trivial"]);
    let printed = out.contains("hp: 1 1");
    let ok = hp == vec![1, 1] && hp == vec![even, odd] && code == 0 && printed;
    (ok, format!("HP = {hp:?}, oracle CE betti {h:?} gives ({even},{odd}), cli exit {code}"))
}

// ---- 6 ----

fn hc_stabilizes() -> Outcome {
    let mut bad = Vec::new();
    let mut checked = 0;
    for (name, v) in shipped() {
        // the chain side needs stability; non-unimodular Weil data is twisted by +δ
        let chain = if v.check().stability.ok { v.clone() } else { v.delta_twist(1) };
        for (side, v) in [(Side::Chain, chain), (Side::Cochain, v.clone())] {
            let n = v.lie().dim();
            let ok = total_complexes(&v, side, 2 * n + 7)
                .and_then(|(stair, periodic)| {
                    let hp = periodic.cohomology_dims()?;
                    let hc = stair.cohomology_dims()?;
                    Ok((2 * n + 2..=2 * n + 6).all(|k| hc[k] == hp[k % 2]))
                })
                .unwrap_or(false);
            checked += 1;
            if !ok {
                bad.push(format!("{name} {side:?}"));
            }
        }
    }
    (bad.is_empty(), format!("{checked} example sides, degrees 2N+2..=2N+6, failures: [{}]", bad.join(", ")))
}

// ---- 7 ----

fn duality_squares() -> Outcome {
    let cases = [("sl2/weil2", sl2_weil()), ("abelian3/trivial", trivial(Arc::new(abelian(3)), 1))];
    let mut notes = Vec::new();
    let mut ok = true;
    for (name, v) in cases {
        let n = v.lie().dim();
        let squares = duality_square_check(&v).map(|r| r.ce_ok() && r.koszul_ok()).unwrap_or(false);
        let chain = build_mixed(&v, Side::Chain).unwrap();
        let cochain = build_mixed(&v.delta_twist(-1), Side::Cochain).unwrap();
        let hc = chain.down_complex().cohomology_dims().unwrap();
        let hk = cochain.up_complex().cohomology_dims().unwrap();
        let mirror = (0..=n).all(|p| hc[p] == hk[n - p]);
        ok &= squares && mirror;
        notes.push(format!("{name}: squares {squares}, betti {hc:?} mirrors {hk:?} {mirror}"));
    }
    (ok, format!("sign (−1)^(N−p−1); {}", notes.join("; ")))
}

// ---- 8 ----

fn pbw_engine() -> Outcome {
    let u = Enveloping::new(Arc::new(sl2::<Q>()));
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut confluent = 0;
    for _ in 0..RANDOM_WORDS {
        let len = rng.gen_range(0..=MAX_WORD_LEN);
        let w: Vec<usize> = (0..len).map(|_| rng.gen_range(0..3)).collect();
        let left = u.normalize_with(&w, q(1), Descent::Leftmost);
        let k = rng.gen_range(0..len.max(1));
        if left == u.normalize_with(&w, q(1), Descent::Rightmost) && left == u.normalize_with(&w, q(1), Descent::Nth(k)) {
            confluent += 1;
        }
    }
    let monos: Vec<Mono> = (0..=HOPF_DEGREE)
        .flat_map(|a| (0..=HOPF_DEGREE - a).flat_map(move |b| (0..=HOPF_DEGREE - a - b).map(move |c| vec![a, b, c])))
        .collect();
    let hopf = monos.iter().filter(|e| hopf_axioms(&u, e)).count();
    let ok = confluent == RANDOM_WORDS && hopf == monos.len();
    (ok, format!("confluent on {confluent}/{RANDOM_WORDS} words; Hopf axioms on {hopf}/{} monomials of degree ≤ {HOPF_DEGREE}", monos.len()))
}

fn hopf_axioms(u: &Enveloping<Q>, e: &[u32]) -> bool {
    let n = u.rank();
    let mut left: BTreeMap<Vec<Mono>, Q> = BTreeMap::new();
    let mut right: BTreeMap<Vec<Mono>, Q> = BTreeMap::new();
    let delta = u.coproduct_mono(e);
    for (f, g, c) in &delta {
        for (f1, f2, c1) in u.coproduct_mono(f) {
            *left.entry(vec![f1, f2, g.clone()]).or_insert_with(|| q(0)) += c.clone() * c1;
        }
        for (g1, g2, c2) in u.coproduct_mono(g) {
            *right.entry(vec![f.clone(), g1, g2]).or_insert_with(|| q(0)) += c.clone() * c2;
        }
    }
    left.retain(|_, v| *v != q(0));
    right.retain(|_, v| *v != q(0));
    let zero = vec![0u32; n];
    let x = PbwElement::monomial(e.to_vec(), q(1));
    let (mut l, mut r, mut sl, mut sr) = (PbwElement::zero(n), PbwElement::zero(n), PbwElement::zero(n), PbwElement::zero(n));
    for (f, g, c) in &delta {
        if *f == zero {
            l.add_term(g.clone(), c.clone());
        }
        if *g == zero {
            r.add_term(f.clone(), c.clone());
        }
        let (pf, pg) = (PbwElement::monomial(f.clone(), q(1)), PbwElement::monomial(g.clone(), q(1)));
        sl = sl.add(&u.mul(&u.antipode_mono(f), &pg).scale(c));
        sr = sr.add(&u.mul(&pf, &u.antipode_mono(g)).scale(c));
    }
    let eps = PbwElement::one(n).scale(&x.counit());
    left == right && l == x && r == x && sl == eps && sr == eps
}

// ---- 9 ----

fn functor_round_trips() -> Outcome {
    let mut round_trips = 0;
    let mut total = 0;
    for (_, g) in algebras() {
        let mut coeffs = vec![trivial(g.clone(), 2)];
        coeffs.extend((1..=4).map(|cap| build_truncated_weil(g.clone(), cap)));
        for v in coeffs {
            total += 1;
            let env = Enveloping::new(v.lie().clone());
            let ok = extend_coaction(&v.coaction)
                .map(|u| restrict_coaction(&u, &v.coaction) == v.coaction && u.is_counital() && u.is_coassociative(&env) && ug_ayd_holds(&env, &v, &u))
                .unwrap_or(false);
            round_trips += usize::from(ok);
        }
    }
    let g = Arc::new(sl2::<Q>());
    let env = Enveloping::new(g);
    let u = env.normalize(&[0, 1, 2], q(1));
    let legs = regular_g_coaction(&env, &u, Projection::PbwDegreeOne);
    let three_term = legs[0] == env.normalize(&[1, 2], q(1)) && legs[1] == env.normalize(&[0, 2], q(1)) && legs[2] == env.normalize(&[0, 1], q(1));
    let defect = regular_stability_defect(&env, &u, Projection::PbwDegreeOne);
    let expected = Pbw::monomial(unit(3, 2), q(-2));
    let ok = round_trips == total && three_term && defect == expected;
    (ok, format!("P∘E = Id on {round_trips}/{total} conilpotent coactions; X1X2X3 three-term coaction {three_term}, defect −2X3 {}", defect == expected))
}

// ---- 10 ----

fn cocyclic_suite() -> Outcome {
    let c = CocyclicModule::new(sl2_weil()).unwrap();
    let cfg = SuiteConfig { seed: SEED, samples: COCYCLIC_SAMPLES, max_level: 2 };
    let runs = [("cosimplicial", suite::cosimplicial(&c, &cfg)), ("cyclic", suite::cyclic(&c, &cfg)), ("b/B", suite::b_and_connes_b(&c, &cfg))];
    let mut ok = true;
    let mut notes = Vec::new();
    for (name, r) in runs {
        match r {
            Ok(o) => {
                ok &= o.ok();
                notes.push(format!("{name} {} relations{}", o.checked, o.first_failure.map(|f| format!(", first failure {f}")).unwrap_or_default()));
            }
            Err(e) => {
                ok = false;
                notes.push(format!("{name} error {e}"));
            }
        }
    }
    (ok, format!("{COCYCLIC_SAMPLES} tensors per level q ≤ 2; {}", notes.join("; ")))
}

// ---- 11 ----

fn antisymmetrization() -> Outcome {
    let g = Arc::new(sl2::<Q>());
    let v = SaydModule::new(sl2_simple(g.clone()).unwrap(), CoactionMatrices::zero(g, 2)).unwrap();
    let c = CocyclicModule::new(v).unwrap();
    match suite::antisymmetrization(&c, 3) {
        Ok(o) => (
            o.ok(),
            format!(
                "restated identity: b∘α = 0 and B∘α_n = α_(n−1)∘∂_CE with α carrying 1/n!, on {} basis relations for n ≤ 3; the literal b∘α = α∘∂_CE mixes a level-raising and a degree-lowering map",
                o.checked
            ),
        ),
        Err(e) => (false, e.to_string()),
    }
}

// ---- 12 ----

fn filtration_preserved() -> Outcome {
    let w = sl2_weil();
    let f = match filtration(&w.coaction) {
        Ok(f) => f,
        Err(e) => return (false, e.to_string()),
    };
    let theta = |i: usize| (0..4).map(|k| if k == i { q(1) } else { q(0) }).collect::<Vec<Q>>();
    let span = vec![theta(1), theta(2), theta(3)];
    let f0 = in_span(&f.levels[0], &span, 4) && in_span(&span, &f.levels[0], 4);
    let c = CocyclicModule::new(w).unwrap();
    let cfg = SuiteConfig { seed: SEED, samples: COCYCLIC_SAMPLES, max_level: 2 };
    let pass = suite::filtration_pass(&c, &cfg);
    let (drops, preserved) = pass.as_ref().map(|p| (p.koszul_drops, p.preserved.ok())).unwrap_or((false, false));
    let ok = f.dims() == vec![3, 4] && f0 && drops && preserved;
    (ok, format!("dims {:?}, F0 = span(θ1,θ2,θ3) {f0}, ∂_K drops a level {drops}, b/B/τ/σ₋₁ preserve {preserved}", f.dims()))
}

// ---- 13 ----

fn weyl_window() -> Outcome {
    let g = sl2::<Q>();
    let ops = build_weyl_ops(&g, 4);
    let (weyl, stab, phi) = (ops.weyl_relations_hold(), ops.stability_holds(), ops.phi_relation_holds(&g));
    (weyl && stab && phi, format!("D = 4: [P_i,Q^j] = δ {weyl}, Σ τ(X_i)Q^i = 0 {stab}, Φ identity {phi}"))
}

fn main() -> ExitCode {
    assert_eq!(TOLERANCE, 0);
    let criteria: Vec<(&str, fn() -> Outcome)> = vec![
        ("sl2 simple module classification", simple_module_classification),
        ("sl2 truncated Weil classification", weil_classification),
        ("mixed-complex biconditional", biconditional),
        ("squares vanish on shipped examples", squares_vanish),
        ("HP of sl2 with trivial coefficients", sl2_periodic),
        ("HC stabilization", hc_stabilizes),
        ("duality squares", duality_squares),
        ("PBW engine", pbw_engine),
        ("functor round trips", functor_round_trips),
        ("cocyclic suite", cocyclic_suite),
        ("antisymmetrization chain map", antisymmetrization),
        ("filtration preservation", filtration_preserved),
        ("Weyl window", weyl_window),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let (ok, detail) = check();
        failed += usize::from(!ok);
        println!("criterion {:>2} {}: {name}: {detail}", k + 1, if ok { "PASS" } else { "FAIL" });
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
