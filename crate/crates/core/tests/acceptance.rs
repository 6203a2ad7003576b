//! Acceptance suite: one line per criterion, exit status 1 if any criterion fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use hopf_factor::bundle::{check_bundle, BundleFile, CheckSelection};
use hopf_factor::comodule::{
    check_braided_module, check_comodule_algebra, check_k_matrix, compute_end_space, h_simplicity, is_factorizable_comodule,
    omega_copairing, theta_at_unit, theta_comodule, theta_module_category, weak_factorizability, ComoduleAlgebra, KMatrix,
    Simplicity,
};
use hopf_factor::constructions::{
    drinfeld_double_group, dual_group_algebra, group_algebra, named_example, r_lambda, reflective_algebra, subgroup_example,
    sweedler_h4, FiniteGroup,
};
use hopf_factor::hopf::{check_hopf, HopfAlgebra, Module};
use hopf_factor::linalg::{kernel_checks, rref_dense};
use hopf_factor::quasitri::{check_r_matrix, drinfeld_map, RMatrix};
use hopf_factor::{Exec, Field, Matrix, Scalar};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const Q: Field = Field::Rational;
const GF101: Field = Field::Prime(101);

fn group(name: &str) -> FiniteGroup {
    FiniteGroup::from_name(name).unwrap()
}

/// A quasitriangular comodule algebra `(B, K)` over `(H, R)`.
struct Member {
    name: String,
    k: KMatrix,
}

impl Member {
    fn h(&self) -> &HopfAlgebra {
        self.k.host()
    }
    fn c(&self) -> &ComoduleAlgebra {
        self.k.comodule()
    }
    fn r(&self) -> &RMatrix {
        self.k.rmatrix()
    }
}

struct Corpus {
    /// `(H, Δ, K = R_21R)` for the quasitriangular Hopf algebras of the suite.
    coregular: Vec<Member>,
    subgroups: Vec<Member>,
    reflective: Vec<Member>,
    /// `K = 1⊗1` with `B = 𝕜` over triangular hosts.
    trivial_k: Vec<Member>,
}

impl Corpus {
    fn all(&self) -> impl Iterator<Item = &Member> {
        self.coregular.iter().chain(&self.subgroups).chain(&self.reflective).chain(&self.trivial_k)
    }
}

fn hosts() -> Vec<(String, RMatrix)> {
    let mut out = Vec::new();
    out.push(("kS3".to_string(), RMatrix::trivial(group_algebra(&group("S3"), Q).unwrap()).unwrap()));
    out.push(("(kC3)*".to_string(), RMatrix::trivial(dual_group_algebra(&group("C3"), Q).unwrap()).unwrap()));
    let h4 = sweedler_h4(Q).unwrap();
    for lambda in [0, 1] {
        out.push((format!("H4 λ={lambda}"), r_lambda(&h4, &Q.from_i64(lambda)).unwrap()));
    }
    for (g, f) in [("C2", Q), ("C3", Q), ("S3", GF101)] {
        out.push((format!("D({g}) over {f}"), drinfeld_double_group(&group(g), f).unwrap().1));
    }
    out
}

fn corpus() -> Corpus {
    let coregular = hosts()
        .into_iter()
        .map(|(name, r)| Member { name: format!("coregular {name}"), k: KMatrix::coregular(r).unwrap() })
        .collect();
    let subgroups = [("C2", "C1"), ("S3", "C2"), ("S3", "C3"), ("C1", "C1")]
        .iter()
        .map(|(g, s)| Member { name: format!("k{s} ⊆ k{g}"), k: subgroup_example(&group(g), &group(s), Q).unwrap().2 })
        .collect();
    let reflective = [("C2", Q), ("C3", Q), ("S3", GF101)]
        .iter()
        .map(|(g, f)| {
            let (h, r) = drinfeld_double_group(&group(g), *f).unwrap();
            let data = reflective_algebra(&r, &ComoduleAlgebra::base_field(&h).unwrap()).unwrap();
            Member { name: format!("R_D({g})(k)"), k: data.kmatrix }
        })
        .collect();
    let trivial_k = hosts()
        .into_iter()
        .filter(|(name, _)| !name.starts_with('D'))
        .chain(std::iter::once(("kC1".to_string(), RMatrix::trivial(group_algebra(&group("C1"), Q).unwrap()).unwrap())))
        .map(|(name, r)| {
            let c = ComoduleAlgebra::base_field(r.host()).unwrap();
            Member { name: format!("k over {name}, K = 1⊗1"), k: KMatrix::trivial(c, r).unwrap() }
        })
        .collect();
    Corpus { coregular, subgroups, reflective, trivial_k }
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

/// `R_21R` computed term by term from the structure constants.
fn monodromy_matrix(r: &RMatrix) -> Matrix {
    let h = r.host();
    let n = h.dim();
    let terms: Vec<(usize, usize, Scalar)> = r.element().terms().map(|(i, c)| (i[0], i[1], c.clone())).collect();
    let mut m = Matrix::zeros(h.field(), n, n);
    for (a, b, c) in &terms {
        for (a2, b2, c2) in &terms {
            // (h_b ⊗ h_a)(h_a2 ⊗ h_b2)
            for (x, u) in h.alg().product(*b, *a2) {
                for (y, v) in h.alg().product(*a, *b2) {
                    // column = first leg (the functional's slot), row = output
                    m.add_to(*y, *x, &(&(c * c2) * &(u * v)));
                }
            }
        }
    }
    m
}

fn antipode_transpose(h: &HopfAlgebra) -> Matrix {
    h.antipode().matrix.transpose()
}

fn c1_axioms(_c: &Corpus) -> Result<String, String> {
    let small = Instant::now();
    let mut count = 0;
    let mut hopf: Vec<(String, HopfAlgebra, Option<RMatrix>)> = Vec::new();
    for g in ["C2", "C3", "S3"] {
        hopf.push((format!("k{g}"), group_algebra(&group(g), Q).unwrap(), None));
    }
    for g in ["C2", "C3"] {
        hopf.push((format!("(k{g})*"), dual_group_algebra(&group(g), Q).unwrap(), None));
    }
    hopf.push(("(kS3)*".into(), dual_group_algebra(&group("S3"), Q).unwrap(), None));
    for (name, r) in hosts() {
        hopf.push((name, r.host().clone(), Some(r)));
    }
    for g in ["C2", "C3"] {
        let (h, r) = drinfeld_double_group(&group(g), Q).unwrap();
        hopf.push((format!("D({g})"), h, Some(r)));
    }
    for (name, h, r) in &hopf {
        if h.field() != Q {
            continue;
        }
        ensure(check_hopf(h).is_pass(), || format!("check_hopf fails on {name}"))?;
        if let Some(r) = r {
            ensure(check_r_matrix(h, r.element()).unwrap().is_pass(), || format!("check_r_matrix fails on {name}"))?;
        }
        count += 1;
    }
    let corpus_q = corpus_over(Q);
    for m in &corpus_q {
        ensure(check_comodule_algebra(m.c()).is_pass(), || format!("comodule algebra fails on {}", m.name))?;
        ensure(check_k_matrix(m.c(), m.r(), m.k.element()).unwrap().is_pass(), || format!("K-matrix fails on {}", m.name))?;
        count += 1;
    }
    let small_time = small.elapsed();
    ensure(small_time < Duration::from_secs(10), || format!("ℚ suite took {small_time:?}"))?;

    let big = Instant::now();
    let (h, r) = drinfeld_double_group(&group("S3"), GF101).unwrap();
    ensure(check_hopf(&h).is_pass() && check_r_matrix(&h, r.element()).unwrap().is_pass(), || "D(S3)".into())?;
    let k = KMatrix::coregular(r.clone()).unwrap();
    ensure(check_comodule_algebra(k.comodule()).is_pass(), || "coregular D(S3)".into())?;
    ensure(check_k_matrix(k.comodule(), &r, k.element()).unwrap().is_pass(), || "R_21R on D(S3)".into())?;
    let data = reflective_algebra(&r, &ComoduleAlgebra::base_field(&h).unwrap()).unwrap();
    ensure(check_comodule_algebra(&data.crossed).is_pass(), || "R_D(S3)(k)".into())?;
    ensure(check_k_matrix(&data.crossed, &r, data.kmatrix.element()).unwrap().is_pass(), || "K_ref on D(S3)".into())?;
    let big_time = big.elapsed();
    ensure(big_time < Duration::from_secs(60), || format!("GF(101) suite took {big_time:?}"))?;
    Ok(format!("{} structures over ℚ in {:.2?}; D(S3), R_D(S3)(k) over GF(101) in {:.2?}", count, small_time, big_time))
}

fn corpus_over(field: Field) -> Vec<Member> {
    let c = corpus();
    c.coregular
        .into_iter()
        .chain(c.subgroups)
        .chain(c.reflective)
        .filter(|m| m.k.host().field() == field)
        .collect()
}

fn c2_drinfeld(c: &Corpus) -> Result<String, String> {
    for m in &c.coregular {
        let e = compute_end_space(m.c()).map_err(|e| e.to_string())?;
        let at_unit = theta_at_unit(&m.k, &e).map_err(|e| e.to_string())?;
        let oracle = monodromy_matrix(m.r());
        ensure(at_unit.matrix == oracle, || format!("θ_B(-)(1) differs from (f⊗id)(R_21R) on {}", m.name))?;
        ensure(drinfeld_map(m.r()).matrix.matrix == oracle, || format!("drinfeld_map differs on {}", m.name))?;
    }
    Ok(format!("{} hosts", c.coregular.len()))
}

fn c3_theta_identity(c: &Corpus) -> Result<String, String> {
    for m in c.all() {
        let e = compute_end_space(m.c()).map_err(|e| e.to_string())?;
        let theta_b = theta_comodule(&m.k, &e).map_err(|e| e.to_string())?;
        let theta_mod = theta_module_category(&m.k, &e).map_err(|e| e.to_string())?;
        let composed = theta_b.matrix.mul(&antipode_transpose(m.h())).unwrap();
        ensure(theta_mod.matrix == composed, || format!("θ_mod ≠ θ_B∘S on {}", m.name))?;
    }
    Ok(format!("{} members", c.all().count()))
}

fn c4_triangular_collapse(c: &Corpus) -> Result<String, String> {
    for m in &c.trivial_k {
        let (h, b) = (m.h(), m.c().alg());
        let e = compute_end_space(m.c()).map_err(|e| e.to_string())?;
        let theta = theta_comodule(&m.k, &e).map_err(|e| e.to_string())?;
        let maps = e.basis_maps(h, m.c());
        let unit_h = h.alg().unit_dense();
        let unit_b = b.unit_dense();
        // θ_B(f)(h) = ε(h) f(1) 1_B
        for a in 0..h.dim() {
            let mut image = Matrix::zeros(h.field(), b.dim(), h.dim());
            for (j, map) in maps.iter().enumerate() {
                image = image.add(&map.matrix.scale(theta.matrix.get(j, a)));
            }
            let expected = Matrix::from_fn(h.field(), b.dim(), h.dim(), |k, l| &(&h.counit()[l] * &unit_h[a]) * &unit_b[k]);
            ensure(image == expected, || format!("θ_B(h^{a}) is not ε·f(1)·1 on {}", m.name))?;
        }
        ensure(theta.rank() == 1, || format!("rank {} on {}", theta.rank(), m.name))?;
        let fact = is_factorizable_comodule(&m.k).unwrap();
        ensure(fact == (h.dim() == 1), || format!("factorizable = {fact} on {}", m.name))?;
    }
    let (h, r) = drinfeld_double_group(&group("C2"), Q).unwrap();
    let one_one = KMatrix::trivial(ComoduleAlgebra::base_field(&h).unwrap(), r).is_err();
    ensure(one_one, || "1⊗1 unexpectedly a K-matrix over D(C2)".into())?;
    Ok(format!("{} triangular hosts; 1⊗1 rejected over D(C2)", c.trivial_k.len()))
}

fn c5_subgroups(c: &Corpus) -> Result<String, String> {
    let mut verdicts = Vec::new();
    for m in &c.subgroups {
        let f = is_factorizable_comodule(&m.k).unwrap();
        ensure(f == m.name.starts_with("kC1 ⊆ kC1"), || format!("factorizable = {f} on {}", m.name))?;
        verdicts.push(format!("{}: {f}", m.name));
    }
    Ok(verdicts.join(", "))
}

fn c6_end_space(c: &Corpus) -> Result<String, String> {
    let mut certified = 0;
    for m in c.all() {
        if !matches!(h_simplicity(m.c()), Simplicity::Simple { .. }) {
            continue;
        }
        certified += 1;
        let e = compute_end_space(m.c()).map_err(|e| e.to_string())?;
        ensure(e.dim() == m.h().dim(), || format!("dim E = {} ≠ {} on {}", e.dim(), m.h().dim(), m.name))?;
    }
    for m in &c.coregular {
        let e = compute_end_space(m.c()).map_err(|e| e.to_string())?;
        let ev = e.unit_evaluation(m.h(), m.c());
        ensure(ev.rank() == m.h().dim(), || format!("ξ ↦ ξ(1) not bijective on {}", m.name))?;
    }
    Ok(format!("{certified} H-simple members"))
}

fn closed_product(g: &FiniteGroup, (x, y): (usize, usize), (x2, y2): (usize, usize)) -> Option<(usize, usize)> {
    let (xi, yi) = (g.inv(x), g.inv(y));
    if y2 != g.mul(g.mul3(yi, xi, y), g.mul(x, y)) {
        return None;
    }
    let word = [yi, x, y, x2, yi, xi, y, x];
    Some((word.iter().fold(g.identity(), |acc, &w| g.mul(acc, w)), y))
}

fn c7_reflective(_c: &Corpus) -> Result<String, String> {
    let mut times = Vec::new();
    for (name, field) in [("C2", Q), ("C3", Q), ("S3", GF101)] {
        let start = Instant::now();
        let g = group(name);
        let n = g.order();
        let at = |x: usize, y: usize| x * n + y;
        let (h, r) = drinfeld_double_group(&g, field).unwrap();
        let data = reflective_algebra(&r, &ComoduleAlgebra::base_field(&h).unwrap()).map_err(|e| e.to_string())?;
        let one = field.one();
        for i in 0..n * n {
            for j in 0..n * n {
                let expected: Vec<(usize, Scalar)> =
                    closed_product(&g, (i / n, i % n), (j / n, j % n)).map(|(x, y)| (at(x, y), one.clone())).into_iter().collect();
                ensure(data.crossed.alg().product(i, j) == expected.as_slice(), || format!("product ({i},{j}) for {name}"))?;
            }
            let (x, y) = (i / n, i % n);
            let mut expected: Vec<(usize, usize, Scalar)> = (0..n)
                .map(|k| {
                    let ki = g.inv(k);
                    (at(k, g.mul3(g.inv(y), x, y)), at(g.mul3(ki, x, k), g.mul(ki, y)), one.clone())
                })
                .collect();
            expected.sort_by_key(|t| (t.0, t.1));
            ensure(data.crossed.coaction(i) == expected.as_slice(), || format!("coaction of {i} for {name}"))?;
        }
        let k_terms: Vec<(Vec<usize>, Scalar)> = data.kmatrix.element().terms().map(|(i, c)| (i.to_vec(), c.clone())).collect();
        let expected: Vec<(Vec<usize>, Scalar)> = (0..n * n).map(|k| (vec![k, k], one.clone())).collect();
        ensure(k_terms == expected, || format!("K_ref for {name}"))?;
        let simple = h_simplicity(&data.crossed);
        ensure(matches!(simple, Simplicity::Simple { .. }), || format!("{simple:?} for {name}"))?;
        ensure(is_factorizable_comodule(&data.kmatrix).unwrap(), || format!("R_D({name})(k) not factorizable"))?;
        let t = start.elapsed();
        ensure(t < Duration::from_secs(120), || format!("{name} took {t:?}"))?;
        times.push(format!("{name} {t:.2?}"));
    }
    Ok(times.join(", "))
}

fn c8_copairing(c: &Corpus) -> Result<String, String> {
    for m in c.all() {
        let h = m.h();
        let field = h.field();
        let e = compute_end_space(m.c()).map_err(|e| e.to_string())?;
        let omega = omega_copairing(&m.k, &e).map_err(|e| e.to_string())?;
        let terms: Vec<(usize, usize, Scalar)> = omega.terms().map(|(i, c)| (i[0], i[1], c.clone())).collect();
        let s = h.antipode().matrix;
        for i in 0..h.dim() {
            // h·(x ⊗ ξ) = h_(1) x S(h_(2)) ⊗ h_(3)·ξ
            let mut lhs = Matrix::zeros(field, h.dim(), e.dim());
            for (a, b, c) in h.coproduct(i) {
                for (p, q, d) in h.coproduct(*a) {
                    for (x, y, w) in &terms {
                        let s_q: Vec<(usize, Scalar)> =
                            (0..h.dim()).filter(|&t| !s.get(t, *q).is_zero()).map(|t| (t, s.get(t, *q).clone())).collect();
                        let moved = h.alg().mul3(&h.basis_vector(*p), &h.basis_vector(*x), &s_q);
                        let acted = e.module().action(*b).column(*y);
                        for (u, cu) in &moved {
                            for (v, cv) in acted {
                                lhs.add_to(*u, *v, &(&(&(c * d) * w) * &(cu * cv)));
                            }
                        }
                    }
                }
            }
            let mut rhs = Matrix::zeros(field, h.dim(), e.dim());
            for (x, y, w) in &terms {
                rhs.add_to(*x, *y, &(&h.counit()[i] * w));
            }
            ensure(lhs == rhs, || format!("h_{i}·ω ≠ ε(h_{i})ω on {}", m.name))?;
        }
    }
    Ok(format!("{} members", c.all().count()))
}

fn c9_weak(c: &Corpus) -> Result<String, String> {
    let (mut factorizable, mut total) = (0, 0);
    for m in c.all() {
        let e = compute_end_space(m.c()).map_err(|e| e.to_string())?;
        let w = weak_factorizability(&m.k, &e).map_err(|e| e.to_string())?;
        total += 1;
        if is_factorizable_comodule(&m.k).unwrap() {
            factorizable += 1;
            ensure(w.bijective, || format!("{} factorizable but Ω = {w:?}", m.name))?;
        }
    }
    Ok(format!("{factorizable} of {total} members factorizable, all weakly factorizable"))
}

fn c10_braided_modules(c: &Corpus) -> Result<String, String> {
    let mut checks = 0;
    for m in c.all() {
        let h = m.h();
        let modules = [Module::trivial(h), Module::regular(h.alg())];
        let target = Module::regular(m.c().alg());
        for x in &modules {
            for y in &modules {
                let v = check_braided_module(&m.k, x, y, &target);
                ensure(v.is_pass(), || format!("{v} on {}", m.name))?;
                checks += 1;
            }
        }
    }
    Ok(format!("{checks} (X, Y, M) triples"))
}

fn c11_round_trip(_c: &Corpus) -> Result<String, String> {
    let before = kernel_checks();
    let names = [
        ("regular:C1", Q),
        ("regular:C2", Q),
        ("regular:S3", Q),
        ("double:C2", Q),
        ("double:C3", Q),
        ("double:S3", GF101),
        ("dual:C2", Q),
        ("dual:C3", Field::Prime(7)),
        ("reflective-trivial:C2", Q),
        ("reflective-trivial:C3", Q),
        ("reflective-trivial:S3", GF101),
        ("subgroup:C2:C1", Q),
        ("subgroup:S3:C2", Q),
        ("subgroup:S3:C3", Q),
        ("subgroup:C1:C1", Q),
        ("sweedler:0", Q),
        ("sweedler:1", Q),
        ("sweedler:-3/2", Q),
        ("trivial-coaction:C2", Q),
        ("trivial-coaction:S3", Field::Prime(5)),
        ("base-field:C3", Q),
    ];
    for (name, field) in names {
        let e = named_example(name, field).map_err(|e| format!("{name}: {e}"))?;
        let text = BundleFile::from_example(&e).to_json();
        let parsed = BundleFile::from_json(&text).map_err(|e| format!("{name}: {e}"))?;
        let bundle = parsed.load().map_err(|e| format!("{name}: {e}"))?;
        let outcomes = check_bundle(&bundle, CheckSelection::all()).map_err(|e| format!("{name}: {e}"))?;
        ensure(outcomes.len() == 6 && outcomes.iter().all(|o| o.verdict.is_pass()), || format!("{name}: {outcomes:?}"))?;
        ensure(BundleFile::from_json(&parsed.to_json()).unwrap() == parsed, || format!("{name}: second round trip differs"))?;
    }
    // rank + nullity = #columns, and every kernel vector is annihilated
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for field in [Q, GF101] {
        for _ in 0..25 {
            let (rows, cols) = (rng.gen_range(1..12), rng.gen_range(1..12));
            let m = Matrix::from_fn(field, rows, cols, |_, _| {
                if rng.gen_bool(0.4) {
                    field.from_i64(rng.gen_range(-4..5))
                } else {
                    field.zero()
                }
            });
            let r = rref_dense(field, cols, &m.rows_vec(), Exec::default());
            let kernel = r.kernel_basis();
            ensure(r.rank() + kernel.len() == cols, || "rank-nullity".into())?;
            ensure(kernel.iter().all(|v| m.apply(v).iter().all(Scalar::is_zero)), || "kernel vector not annihilated".into())?;
        }
    }
    let checked = kernel_checks() - before;
    Ok(format!("{} registry entries round-trip clean; {} kernel computations rank-nullity checked ({} in the whole suite)", names.len(), checked, kernel_checks()))
}

type Criterion = (usize, &'static str, fn(&Corpus) -> Result<String, String>);

fn main() -> ExitCode {
    let start = Instant::now();
    let corpus = corpus();
    println!("corpus built in {:.2?}", start.elapsed());
    let criteria: [Criterion; 11] = [
        (1, "axiom suite", c1_axioms),
        (2, "Drinfeld map equals θ_B at the unit", c2_drinfeld),
        (3, "θ_{B-FdMod} = θ_B ∘ S_{H*}", c3_theta_identity),
        (4, "triangular collapse for K = 1⊗1", c4_triangular_collapse),
        (5, "subgroup non-factorizability", c5_subgroups),
        (6, "dim E(H,B) = dim H", c6_end_space),
        (7, "reflective algebra regression", c7_reflective),
        (8, "copairing invariance", c8_copairing),
        (9, "factorizable implies weakly factorizable", c9_weak),
        (10, "braided-module identities", c10_braided_modules),
        (11, "round trip and rank-nullity", c11_round_trip),
    ];
    let mut failed = 0;
    for (n, name, run) in criteria {
        let t = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(|| run(&corpus))).unwrap_or_else(|p| {
            let msg = p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        match outcome {
            Ok(detail) => println!("criterion {n:>2} PASS  {name} ({detail}; {:.2?})", t.elapsed()),
            Err(why) => {
                failed += 1;
                println!("criterion {n:>2} FAIL  {name}: {why}");
            }
        }
    }
    println!("{} of 11 criteria pass in {:.2?}", 11 - failed, start.elapsed());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
