//! Acceptance suite: one PASS/FAIL line per criterion, then a single
//! assertion that every criterion passed.
//!
//! All comparisons are exact (rational arithmetic, zero tolerance). Time
//! limits are wall-clock and pinned below.

use std::process::Command;
use std::time::{Duration, Instant};

use antiassoc::audit::{bundled_fixtures, parse_fixture, FixtureInput};
use antiassoc::classify2d::{listed_classes, IsoVerdict};
use antiassoc::dendriform::check_dendriform_matched_pair;
use antiassoc::io::Document;
use antiassoc::linalg::basis_vector;
use antiassoc::notation::{double_labels, product_table};
use antiassoc::operators::{check_omega_compatibility, check_t_homomorphism};
use antiassoc::{
    are_isomorphic_dim2, associated_algebra, build_quadratic_double, build_symplectic_double, check_bimodule,
    check_q_dendriform, check_rota_baxter, check_symplectic_criterion, dendriform_from_symplectic, dual_bimodule,
    enumerate_2d_antiassociative, induced_dendriform_on_module, int, octuple_from_symplectic_pair, rat,
    semidirect_product, verify_paper_classification, Bimodule, DendriformStructure, LinearMap, Matrix, Rational,
    StructureAlgebra, Tensor3,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const LIMIT_CRITERION_1: Duration = Duration::from_secs(1);
const LIMIT_CRITERION_2: Duration = Duration::from_secs(10);
const LIMIT_CRITERION_5: Duration = Duration::from_secs(1);
const LIMIT_CRITERION_10: Duration = Duration::from_secs(10);
const RANDOM_BIMODULES: usize = 240;
const MIN_RANDOM_BIMODULES: usize = 200;
const MIN_PERTURBED_INVALID: usize = 50;
const SEED: u64 = 0x5eed_2024;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn within(start: Instant, limit: Duration, detail: String) -> Outcome {
    let took = start.elapsed();
    ensure!(took <= limit, "{detail}; took {took:?}, limit {limit:?}");
    Ok(format!("{detail}; {took:.2?} (limit {limit:?})"))
}

/// Products given 1-indexed, as `(i, j, k, c)` for `e_i·e_j = c e_k`.
fn algebra(products: &[(usize, usize, usize, i64)]) -> StructureAlgebra {
    let ps: Vec<_> = products.iter().map(|&(i, j, k, c)| (i, j, k, int(c))).collect();
    StructureAlgebra::from_products(2, int(-1), &ps).unwrap()
}

fn symplectic_fixture(file: &str) -> (DendriformStructure, DendriformStructure) {
    let (name, text) = bundled_fixtures().into_iter().find(|(n, _)| *n == file).unwrap();
    match parse_fixture(&Document::new(name, text)).unwrap().input {
        FixtureInput::Symplectic(a, b) => (a, b),
        FixtureInput::Quadratic(..) => panic!("{file} is not a symplectic fixture"),
    }
}

const CASE3: [(&str, (i64, i64)); 3] =
    [("case3a_lambda_0.json", (0, 1)), ("case3b_lambda_1_2.json", (1, 2)), ("case3c_lambda_1.json", (1, 1))];

// 1 ----------------------------------------------------------------------

/// Direct evaluation of (e_i e_j) e_k + e_i (e_j e_k) on all 8 triples.
fn oracle_violations(a: &StructureAlgebra) -> Vec<([usize; 3], Vec<Rational>)> {
    let e = |i| basis_vector(2, i);
    let mut out = Vec::new();
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                let lhs = a.mul(&a.mul(&e(i), &e(j)), &e(k));
                let rhs = a.mul(&e(i), &a.mul(&e(j), &e(k)));
                let r: Vec<Rational> = lhs.iter().zip(&rhs).map(|(x, y)| x + y).collect();
                if r.iter().any(|x| !x.is_zero()) {
                    out.push(([i + 1, j + 1, k + 1], r));
                }
            }
        }
    }
    out
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    for (label, a) in
        [("zero", algebra(&[])), ("e1·e1=e2", algebra(&[(1, 1, 2, 1)])), ("e2·e2=e1", algebra(&[(2, 2, 1, 1)]))]
    {
        ensure!(a.check_q_associative().passed(), "{label} should pass");
        ensure!(oracle_violations(&a).is_empty(), "oracle disagrees on {label}");
    }
    let bad = algebra(&[(2, 1, 2, 1)]);
    let report = bad.check_q_associative();
    let vs = report.violations();
    ensure!(vs.len() == 1, "e2·e1=e2: expected 1 violation, got {}", vs.len());
    ensure!(vs[0].indices == [2, 1, 1], "violating triple {:?}", vs[0].indices);
    ensure!(vs[0].residual == [int(0), int(1)], "residual {:?}", vs[0].residual);
    let oracle = oracle_violations(&bad);
    ensure!(oracle == vec![([2, 1, 1], vec![int(0), int(1)])], "oracle gives {oracle:?}");
    within(start, LIMIT_CRITERION_1, "3 classes pass; e2·e1=e2 fails only at (2,1,1) with residual e2".into())
}

// 2 ----------------------------------------------------------------------

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let grid = [int(-1), int(0), int(1)];
    let all = enumerate_2d_antiassociative(&grid);
    ensure!(!all.is_empty(), "enumeration is empty");
    for a in &all {
        let quartic = a.check_quartic_vanishing();
        ensure!(quartic.passed(), "quartic vanishing fails on {:?}", a.tensor());
        let mock = a.anticommutator_algebra().check_mock_lie();
        ensure!(mock.passed(), "anticommutator not mock-Lie on {:?}", a.tensor());
    }
    within(start, LIMIT_CRITERION_2, format!("{} of 3^8 solutions, all quartic-vanishing and mock-Lie", all.len()))
}

// 3, 4 -------------------------------------------------------------------

fn small(rng: &mut ChaCha8Rng) -> Rational {
    let xs = [rat(-2, 1), rat(-1, 1), rat(-1, 2), rat(0, 1), rat(1, 2), rat(1, 1), rat(2, 1)];
    xs.choose(rng).unwrap().clone()
}

fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> Matrix {
    Matrix::from_row_major(rows, cols, (0..rows * cols).map(|_| small(rng)).collect()).unwrap()
}

fn random_invertible(rng: &mut ChaCha8Rng, n: usize) -> Matrix {
    loop {
        let p = random_matrix(rng, n, n);
        if p.invert().is_ok() {
            return p;
        }
    }
}

/// Products of `e_1..e_{n-1}` land on `e_n`, which annihilates everything,
/// so `(xy)z = x(yz) = 0` for every q.
fn top_heavy(rng: &mut ChaCha8Rng, n: usize, q: &Rational) -> StructureAlgebra {
    let mut c = Tensor3::cube(n);
    for i in 0..n - 1 {
        for j in 0..n - 1 {
            c[(i, j, n - 1)] = small(rng);
        }
    }
    StructureAlgebra::new(q.clone(), c).unwrap()
}

/// Actions with image in the first module coordinate and that coordinate
/// in their kernel, vanishing on `e_n`: all compositions are zero.
fn square_zero(rng: &mut ChaCha8Rng, n: usize, m: usize) -> Bimodule {
    let mut pick = |i: usize| {
        let mut x = Matrix::zeros(m, m);
        if i + 1 < n {
            for j in 1..m {
                x[(0, j)] = small(rng);
            }
        }
        x
    };
    let l = (0..n).map(&mut pick).collect();
    let r = (0..n).map(&mut pick).collect();
    Bimodule::new(n, m, l, r).unwrap()
}

fn dense(rng: &mut ChaCha8Rng, n: usize, m: usize) -> Bimodule {
    let l = (0..n).map(|_| random_matrix(rng, m, m)).collect();
    let r = (0..n).map(|_| random_matrix(rng, m, m)).collect();
    Bimodule::new(n, m, l, r).unwrap()
}

fn perturbed(rng: &mut ChaCha8Rng, base: &Bimodule) -> Bimodule {
    let (n, m) = (base.algebra_dim(), base.module_dim());
    let (mut l, mut r) = (base.l().to_vec(), base.r().to_vec());
    let side = if rng.gen() { &mut l } else { &mut r };
    let (x, i, j) = (rng.gen_range(0..n), rng.gen_range(0..m), rng.gen_range(0..m));
    side[x][(i, j)] += &int(rng.gen_range(1..=2));
    Bimodule::new(n, m, l, r).unwrap()
}

/// The pair written in the basis formed by the columns of `p`:
/// `l'(e'_i) = l(p e_i)`, likewise for `r`.
fn rebase(a: &StructureAlgebra, m: &Bimodule, p: &Matrix) -> (StructureAlgebra, Bimodule) {
    let n = a.dim();
    let l = (0..n).map(|i| m.l_of(&p.column(i))).collect();
    let r = (0..n).map(|i| m.r_of(&p.column(i))).collect();
    (a.change_basis(p).unwrap(), Bimodule::new(n, m.module_dim(), l, r).unwrap())
}

fn bimodule_corpus() -> Vec<(StructureAlgebra, Bimodule)> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let qs = [int(1), int(-1), int(2)];
    let mut out = Vec::new();
    for k in 0..RANDOM_BIMODULES {
        let q = &qs[k % 3];
        let n = rng.gen_range(1..=3);
        let a = top_heavy(&mut rng, n, q);
        let m = rng.gen_range(1..=3);
        let module = match k % 5 {
            0 => Bimodule::regular(&a),
            1 => Bimodule::zero(n, m),
            2 => square_zero(&mut rng, n, m),
            3 => dense(&mut rng, n, m),
            _ => {
                let base = if rng.gen() { Bimodule::regular(&a) } else { square_zero(&mut rng, n, m) };
                perturbed(&mut rng, &base)
            }
        };
        let p = random_invertible(&mut rng, n);
        out.push(rebase(&a, &module, &p));
    }
    out
}

fn criterion_3(corpus: &[(StructureAlgebra, Bimodule)]) -> Outcome {
    ensure!(corpus.len() >= MIN_RANDOM_BIMODULES, "corpus has {} instances", corpus.len());
    let mut valid = 0;
    for (k, (a, m)) in corpus.iter().enumerate() {
        ensure!(a.check_q_associative().passed(), "instance {k}: algebra is not q-associative");
        let laws = check_bimodule(a, m).unwrap().passed();
        let semi = semidirect_product(a, m).unwrap().check_q_associative().passed();
        ensure!(laws == semi, "instance {k} (q = {}): bimodule {laws}, semidirect {semi}", a.q());
        valid += usize::from(laws);
    }
    ensure!(valid > 0 && valid < corpus.len(), "corpus is one-sided: {valid} valid of {}", corpus.len());
    Ok(format!("{} instances ({valid} valid), q in {{1,-1,2}}, verdicts agree", corpus.len()))
}

fn criterion_4(corpus: &[(StructureAlgebra, Bimodule)]) -> Outcome {
    let mut valid = 0;
    for (k, (a, m)) in corpus.iter().enumerate() {
        let d = dual_bimodule(a, m);
        ensure!(dual_bimodule(a, &d) == *m, "instance {k}: double dual differs");
        if check_bimodule(a, m).unwrap().passed() {
            valid += 1;
            let report = check_bimodule(a, &d).unwrap();
            ensure!(report.passed(), "instance {k}: dual fails, {}", report.summary());
        }
    }
    Ok(format!("{valid} valid duals; double dual equal on all {}", corpus.len()))
}

// 5, 6 -------------------------------------------------------------------

fn symplectic_products(file: &str) -> Result<Vec<String>, String> {
    let (a, b) = symplectic_fixture(file);
    let d = build_symplectic_double(&a, &b).unwrap();
    ensure!(d.report.passed(), "{file}: {}", d.report.summary());
    for part in ["total:", "form:"] {
        ensure!(d.report.violations_of(part).next().is_none(), "{file}: {part} fails");
    }
    ensure!(d.form.is_nondegenerate(), "{file}: degenerate form");
    Ok(product_table(&d.total, &double_labels(2)))
}

fn case3_expected(num: i64, den: i64) -> Vec<String> {
    let lambda = rat(num, den);
    let rest = int(1) - &lambda;
    let coeff = |c: &Rational| if c.is_one() { String::new() } else { c.to_string() };
    let mut out = vec!["e1·e1=e2".to_string()];
    if !lambda.is_zero() {
        out.push(format!("e1·e2*={}e1*", coeff(&lambda)));
    }
    if !rest.is_zero() {
        out.push(format!("e2*·e1={}e1*", coeff(&rest)));
    }
    out
}

fn sorted(mut v: Vec<String>) -> Vec<String> {
    v.sort();
    v
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    for (file, (num, den)) in CASE3 {
        let got = symplectic_products(file)?;
        let want = case3_expected(num, den);
        ensure!(sorted(got.clone()) == sorted(want.clone()), "{file}: products {got:?}, expected {want:?}");
    }
    within(start, LIMIT_CRITERION_5, "λ = 0, 1/2, 1 reproduce exactly; all checks pass".into())
}

fn criterion_6() -> Outcome {
    let got = symplectic_products("case4.json")?;
    let want = vec!["e1*·e2=e2*".to_string(), "e2·e1*=-e2*".to_string()];
    ensure!(sorted(got.clone()) == sorted(want.clone()), "products {got:?}, expected {want:?}");
    Ok("e1*∗e2=e2*, e2∗e1*=-e2*; all checks pass".into())
}

// 7 ----------------------------------------------------------------------

fn criterion_7() -> Outcome {
    let a = algebra(&[(1, 1, 2, 1)]);
    let tau = LinearMap::new(Matrix::diagonal(&[int(1), rat(1, 2)]));
    ensure!(check_rota_baxter(&a, &tau).unwrap().passed(), "Rota–Baxter identity fails");
    let d = induced_dendriform_on_module(&a, &Bimodule::regular(&a), &tau).map_err(|e| e.to_string())?;
    ensure!(check_q_dendriform(&d).passed(), "induced structure is not antidendriform");
    ensure!(check_t_homomorphism(&a, &d, &tau).unwrap().passed(), "T-homomorphism fails");
    // x ≻ y = τ(x)y and x ≺ y = xτ(y): only e1 ≻ e1 = e1 ≺ e1 = e2 survive
    let mut expected = Tensor3::cube(2);
    expected[(0, 0, 1)] = int(1);
    ensure!(*d.succ_tensor() == expected, "≻ = {:?}", d.succ_tensor());
    ensure!(*d.prec_tensor() == expected, "≺ = {:?}", d.prec_tensor());
    Ok("τ = diag(1,1/2): e1≻e1 = e1≺e1 = e2, axioms and T-homomorphism hold".into())
}

// 8 ----------------------------------------------------------------------

fn criterion_8() -> Outcome {
    let files = CASE3.iter().map(|(f, _)| *f).chain(["case4.json"]);
    let mut n = 0;
    for file in files {
        let (a, b) = symplectic_fixture(file);
        let double = build_symplectic_double(&a, &b).unwrap();
        let d = dendriform_from_symplectic(&double.total, &double.form).map_err(|e| format!("{file}: {e}"))?;
        let compat = check_omega_compatibility(&double.total, &double.form, &d).unwrap();
        ensure!(compat.passed(), "{file}: {}", compat.summary());
        ensure!(associated_algebra(&d).tensor() == double.total.tensor(), "{file}: ≺ + ≻ differs from the product");
        n += 1;
    }
    Ok(format!("{n} doubles: compatibility on all 64 triples, ≺ + ≻ equals the product"))
}

// 9 ----------------------------------------------------------------------

fn three_verdicts(a: &DendriformStructure, b: &DendriformStructure) -> [bool; 3] {
    [
        build_symplectic_double(a, b).unwrap().matched_pair_passed(),
        check_symplectic_criterion(a, b).unwrap().passed(),
        check_dendriform_matched_pair(&octuple_from_symplectic_pair(a, b).unwrap()).passed(),
    ]
}

fn perturb(rng: &mut ChaCha8Rng, d: &DendriformStructure) -> DendriformStructure {
    let (mut prec, mut succ) = (d.prec_tensor().clone(), d.succ_tensor().clone());
    let t = if rng.gen() { &mut prec } else { &mut succ };
    let idx = (rng.gen_range(0..2), rng.gen_range(0..2), rng.gen_range(0..2));
    t[idx] += &int(if rng.gen() { 1 } else { -1 });
    DendriformStructure::new(int(-1), prec, succ).unwrap()
}

fn criterion_9() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 9);
    let bases: Vec<_> = CASE3.iter().map(|(f, _)| *f).chain(["case4.json"]).map(symplectic_fixture).collect();
    let zero = DendriformStructure::zero(2, int(-1));
    let mut corpus = Vec::new();
    for (a, b) in &bases {
        corpus.push((a.clone(), b.clone()));
        corpus.push((a.clone(), zero.clone()));
        corpus.push((zero.clone(), b.clone()));
    }
    let (mut passing, mut invalid) = (0, 0);
    for (a, b) in &corpus {
        let v = three_verdicts(a, b);
        ensure!(v[0] == v[1] && v[1] == v[2], "verdicts {v:?} on a reference pair");
        passing += usize::from(v[0]);
    }
    let mut tries = 0;
    while invalid < MIN_PERTURBED_INVALID {
        tries += 1;
        ensure!(tries < 50 * MIN_PERTURBED_INVALID, "only {invalid} invalid perturbations found");
        let (a, b) = &bases[rng.gen_range(0..bases.len())];
        let (a, b) = if rng.gen() { (perturb(&mut rng, a), b.clone()) } else { (a.clone(), perturb(&mut rng, b)) };
        let v = three_verdicts(&a, &b);
        ensure!(v[0] == v[1] && v[1] == v[2], "verdicts {v:?} on perturbation {tries}");
        invalid += usize::from(!v[0]);
    }
    Ok(format!(
        "{} reference pairs ({passing} valid) and {tries} perturbations ({invalid} invalid) agree",
        corpus.len()
    ))
}

// 10 ---------------------------------------------------------------------

fn criterion_10() -> Outcome {
    let start = Instant::now();
    let audit = verify_paper_classification();
    ensure!(audit.classes.len() == 2, "{} classes", audit.classes.len());
    ensure!(audit.undecided_comparisons == 0, "{} undecided comparisons", audit.undecided_comparisons);
    let reps: Vec<_> = audit.classes.iter().map(|c| c.representative.clone()).collect();
    ensure!(reps.iter().any(Vec::is_empty), "no zero class among {reps:?}");
    ensure!(reps.iter().any(|r| r.len() == 1 && r[0].starts_with("e1·e1=")), "no e1·e1 class among {reps:?}");
    let listed = listed_classes();
    let find = |label: &str| listed.iter().find(|(l, _)| *l == label).map(|(_, a)| a.clone()).unwrap();
    let grid = [int(-1), int(0), int(1)];
    match are_isomorphic_dim2(&find("e2·e2=e1"), &find("e1·e1=e2"), &grid) {
        IsoVerdict::Yes { witness } => {
            ensure!(witness == Matrix::from_i64(&[&[0, 1], &[1, 0]]), "witness {witness:?} is not the swap")
        }
        other => return Err(format!("e2·e2=e1 vs e1·e1=e2: {other:?}")),
    }
    ensure!(!audit.discrepancies.is_empty(), "no discrepancy report");
    within(
        start,
        LIMIT_CRITERION_10,
        format!("{} solutions, 2 classes, swap witness, {} discrepancies", audit.solutions, audit.discrepancies.len()),
    )
}

// 11 ---------------------------------------------------------------------

fn criterion_11() -> Outcome {
    let a = algebra(&[(1, 1, 2, 1)]);
    let d = build_quadratic_double(&a, &StructureAlgebra::zero(2, int(-1))).unwrap();
    ensure!(d.matched_pair_passed(), "matched pair fails: {}", d.report.summary());
    let g = d.form.gram();
    let e = |i| basis_vector(4, i);
    // B(u, v) = uᵀ G v, evaluated directly
    let b = |u: &[Rational], v: &[Rational]| -> Rational {
        (0..4).flat_map(|i| (0..4).map(move |j| (i, j))).map(|(i, j)| &(&u[i] * &g[(i, j)]) * &v[j]).sum()
    };
    let mut checked = 0;
    for i in 0..4 {
        for j in 0..4 {
            for k in 0..4 {
                let lhs = b(&d.total.mul(&e(i), &e(j)), &e(k));
                let rhs = b(&e(i), &d.total.mul(&e(j), &e(k)));
                ensure!(
                    lhs == rhs,
                    "B(e{}e{}, e{}) = {lhs}, B(e{}, e{}e{}) = {rhs}",
                    i + 1,
                    j + 1,
                    k + 1,
                    i + 1,
                    j + 1,
                    k + 1
                );
                checked += 1;
            }
        }
    }
    Ok(format!("B-invariant on {checked}/64 triples; matched pair passes"))
}

// 12 ---------------------------------------------------------------------

fn criterion_12() -> Outcome {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_antiassoc"))
            .args(["paper", "fixtures", "--json"])
            .env_remove("ANTIASSOC_FIXTURES")
            .output()
            .expect("binary runs")
    };
    let (first, second) = (run(), run());
    ensure!(!first.stdout.is_empty(), "empty output; stderr: {}", String::from_utf8_lossy(&first.stderr));
    ensure!(first.stdout == second.stdout, "outputs differ");
    ensure!(first.status.code() == second.status.code(), "exit codes differ");
    Ok(format!("{} bytes, identical across runs", first.stdout.len()))
}

#[test]
fn acceptance() {
    let corpus = bimodule_corpus();
    let results: Vec<(usize, Outcome)> = vec![
        (1, criterion_1()),
        (2, criterion_2()),
        (3, criterion_3(&corpus)),
        (4, criterion_4(&corpus)),
        (5, criterion_5()),
        (6, criterion_6()),
        (7, criterion_7()),
        (8, criterion_8()),
        (9, criterion_9()),
        (10, criterion_10()),
        (11, criterion_11()),
        (12, criterion_12()),
    ];
    let mut failed = Vec::new();
    for (n, r) in &results {
        match r {
            Ok(detail) => println!("criterion {n:>2}: PASS  {detail}"),
            Err(why) => {
                println!("criterion {n:>2}: FAIL  {why}");
                failed.push(*n);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
