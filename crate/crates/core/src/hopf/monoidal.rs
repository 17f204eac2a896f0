//! Checks that `Γ` is a strong pseudofunctor: `ζ` and `γ` are invertible.

use super::functors::{
    gamma_comparison, gamma_functor, gamma_map, kappa, module_tensor, phi_functor, sigma, tau, trivial_module, xi,
    zeta, GammaImage,
};
use super::presentation::projective_presentation;
use super::HopfData;
use crate::bimodule::{associator, hom_space, tensor_over_a, Bimodule, LeftModule, TensorQuotient};
use crate::matrix::Mat;
use crate::report::ValidationReport;

/// Runs the four verification phases and the structural side checks.
pub fn verify_gamma_monoidal(hd: &HopfData) -> ValidationReport {
    let mut report = ValidationReport::new();
    report.extend("ζ: ", check_zeta(hd));
    report.extend("bases: ", check_bases(hd));
    report.extend("γ_{A,A}: ", check_gamma_regular(hd));
    report.extend("presentations: ", check_presentations(hd));
    report.extend("adjunction: ", check_adjunction(hd));
    report.extend("lax structure: ", check_lax(hd));
    report.extend("associativity: ", check_hexagon(hd));
    report
}

fn vertex_elements(hd: &HopfData) -> Vec<usize> {
    let alg = &hd.algebra;
    (0..alg.num_vertices()).map(|v| alg.vertex_element(v)).collect()
}

fn check_zeta(hd: &HopfData) -> ValidationReport {
    let alg = &hd.algebra;
    let d = alg.dim();
    let mut report = ValidationReport::new();
    let l1 = trivial_module(hd);
    let gl = gamma_functor(hd, &l1);
    let z = zeta(hd, &gl);
    report.record("bijective", (!z.is_invertible()).then(|| format!("{}×{} of rank {}", z.rows(), z.cols(), z.rank())));
    let a = Bimodule::regular(alg);
    report.record("bimodule map", (!gl.bimodule.is_morphism(&a, &z)).then(|| "fails to intertwine".to_string()));
    let vs = vertex_elements(hd);
    let bad = (0..d).find(|&b| {
        let class = gl.quotient.project(vs.iter().map(|&v| ((v * d + b, 0), 1)));
        z.mul_vec(&class) != alg.unit_vector(b)
    });
    report.record("ζ(1⊗b⊗v) = b", bad.map(|b| format!("b = {}", alg.basis_label(b))));
    report
}

/// `Y_abc` in `Γ(A⊗A)`, indexed `a·d² + b·d + c`.
fn y_family(hd: &HopfData, gaa: &GammaImage) -> Vec<Vec<u64>> {
    let alg = &hd.algebra;
    let f = alg.field();
    let d = alg.dim();
    let vs = vertex_elements(hd);
    let mut out = Vec::with_capacity(d * d * d);
    for a in 0..d {
        let da = hd.delta.column(a);
        for b in 0..d {
            let mut b_terms: Vec<(usize, u64)> = Vec::new();
            for (idx, &c) in da.iter().enumerate() {
                if c == 0 {
                    continue;
                }
                let (p, q) = (idx / d, idx % d);
                let s = alg.mul(&hd.antipode.column(q), &alg.unit_vector(b));
                for (r, &x) in s.iter().enumerate() {
                    if x != 0 {
                        b_terms.push((p * d + r, f.mul(c, x)));
                    }
                }
            }
            for c in 0..d {
                let terms = b_terms
                    .iter()
                    .flat_map(|&(bi, coef)| vs.iter().map(move |&v| ((bi, v * d + c), coef)));
                out.push(gaa.quotient.project(terms));
            }
        }
    }
    out
}

/// `X_abc = Σ a₁ ⊗ c₁ ⊗ S(a₂c₂) b` in `A⊗A⊗A`, indexed like `y_family`.
fn x_family(hd: &HopfData) -> Vec<Vec<u64>> {
    let alg = &hd.algebra;
    let f = alg.field();
    let d = alg.dim();
    let mut out = Vec::with_capacity(d * d * d);
    for a in 0..d {
        let da = hd.delta.column(a);
        for b in 0..d {
            for c in 0..d {
                let dc = hd.delta.column(c);
                let mut v = vec![0; d * d * d];
                for (i, &x) in da.iter().enumerate() {
                    if x == 0 {
                        continue;
                    }
                    let (p, q) = (i / d, i % d);
                    for (j, &y) in dc.iter().enumerate() {
                        if y == 0 {
                            continue;
                        }
                        let (r, s) = (j / d, j % d);
                        let prod = alg.mul(&alg.unit_vector(q), &alg.unit_vector(s));
                        let tail = alg.mul(&hd.antipode.mul_vec(&prod), &alg.unit_vector(b));
                        let xy = f.mul(x, y);
                        for (t, &z) in tail.iter().enumerate() {
                            let k = (p * d + r) * d + t;
                            v[k] = f.add(v[k], f.mul(xy, z));
                        }
                    }
                }
                out.push(v);
            }
        }
    }
    out
}

fn rank_of(columns: &[Vec<u64>], rows: usize, field: crate::field::PrimeField) -> usize {
    Mat::from_columns(field, rows, columns).rank()
}

fn check_bases(hd: &HopfData) -> ValidationReport {
    let alg = &hd.algebra;
    let f = alg.field();
    let d = alg.dim();
    let mut report = ValidationReport::new();
    let a = LeftModule::regular(alg);
    let aa = module_tensor(hd, &a, &a);
    let gaa = gamma_functor(hd, &aa);
    report.record(
        "dim Γ(A⊗A) = d³",
        (gaa.dim() != d * d * d).then(|| format!("{} ≠ {}", gaa.dim(), d * d * d)),
    );
    let ys = y_family(hd, &gaa);
    let ry = rank_of(&ys, gaa.dim(), f);
    report.record("Y_abc is a basis of Γ(A⊗A)", (ry != d * d * d || gaa.dim() != ry).then(|| format!("rank {ry}")));
    let xs = x_family(hd);
    let rx = rank_of(&xs, d * d * d, f);
    report.record("X_abc is a basis of A⊗A⊗A", (rx != d * d * d).then(|| format!("rank {rx}")));
    report
}

/// `ι : A⊗A⊗A → Γ(A) ⊗_A Γ(A)`, `p⊗q⊗r ↦ ((p⊗1) ⊗ 1) ⊗ ((q⊗r) ⊗ 1)`.
fn iota(hd: &HopfData, ga: &GammaImage, out: &TensorQuotient) -> Mat {
    let alg = &hd.algebra;
    let f = alg.field();
    let d = alg.dim();
    let vs = vertex_elements(hd);
    let left: Vec<Vec<u64>> = (0..d)
        .map(|p| ga.quotient.project(vs.iter().flat_map(|&v| vs.iter().map(move |&w| ((p * d + v, w), 1)))))
        .collect();
    let right: Vec<Vec<u64>> = (0..d * d).map(|qr| ga.quotient.project(vs.iter().map(|&w| ((qr, w), 1)))).collect();
    let mut cols = Vec::with_capacity(d * d * d);
    for p in 0..d {
        for qr in 0..d * d {
            let mut terms = Vec::new();
            for (i, &x) in left[p].iter().enumerate() {
                if x == 0 {
                    continue;
                }
                for (j, &y) in right[qr].iter().enumerate() {
                    if y != 0 {
                        terms.push(((i, j), f.mul(x, y)));
                    }
                }
            }
            cols.push(out.project(terms));
        }
    }
    Mat::from_columns(f, out.dim(), &cols)
}

fn check_gamma_regular(hd: &HopfData) -> ValidationReport {
    let alg = &hd.algebra;
    let d = alg.dim();
    let mut report = ValidationReport::new();
    let a = LeftModule::regular(alg);
    let ga = gamma_functor(hd, &a);
    let aa = module_tensor(hd, &a, &a);
    let gaa = gamma_functor(hd, &aa);
    let (_, out) = tensor_over_a(alg, &ga.bimodule, &ga.bimodule);
    let gamma = gamma_comparison(hd, d, &ga, &ga, &gaa, &out);
    report.record("invertible", (!gamma.is_invertible()).then(|| format!("rank {}", gamma.rank())));
    let ys = y_family(hd, &gaa);
    let xs = x_family(hd);
    let io = iota(hd, &ga, &out);
    report.record("identification A⊗A⊗A ≅ Γ(A)⊗Γ(A)", (!io.is_invertible()).then(|| format!("rank {}", io.rank())));
    let bad = (0..d * d * d).find(|&k| gamma.mul_vec(&ys[k]) != io.mul_vec(&xs[k]));
    report.record(
        "γ(Y_abc) = X_abc",
        bad.map(|k| {
            let (a, b, c) = (k / (d * d), (k / d) % d, k % d);
            format!("a = {}, b = {}, c = {}", alg.basis_label(a), alg.basis_label(b), alg.basis_label(c))
        }),
    );
    report
}

/// Non-projective test modules: `L_1`, another simple, and a truncated projective.
fn sample_modules(hd: &HopfData) -> Vec<(String, LeftModule)> {
    let alg = &hd.algebra;
    let grp = hd.group();
    let mut out = vec![("L_1".to_string(), trivial_module(hd)), ("A".to_string(), LeftModule::regular(alg))];
    if let Some(v) = (0..alg.num_vertices()).find(|&v| v != grp.identity()) {
        out.push((format!("S_{}", alg.quiver().vertices()[v]), LeftModule::simple(alg, v)));
    }
    let p = LeftModule::projective(alg, grp.identity());
    let support = alg.left_projective_basis(grp.identity());
    let deep: Vec<usize> = (0..support.len()).filter(|&k| alg.path_length(support[k]) >= 2).collect();
    if !deep.is_empty() && deep.len() + 1 < support.len() {
        let span = Mat::from_fn(alg.field(), support.len(), deep.len(), |r, c| u64::from(r == deep[c]));
        let (q, _) = p.quotient(alg, &span);
        out.push(("Ae_1/rad²".to_string(), q));
    }
    out
}

/// `γ_{X,Y}` together with its domain and codomain data.
struct Comparison {
    gx: GammaImage,
    gy: GammaImage,
    gxy: GammaImage,
    out: TensorQuotient,
    gamma: Mat,
}

fn comparison(hd: &HopfData, x: &LeftModule, y: &LeftModule) -> Comparison {
    let gx = gamma_functor(hd, x);
    let gy = gamma_functor(hd, y);
    let gxy = gamma_functor(hd, &module_tensor(hd, x, y));
    let out = TensorQuotient::for_bimodules(&hd.algebra, &gx.bimodule, &gy.bimodule);
    let gamma = gamma_comparison(hd, y.dim(), &gx, &gy, &gxy, &out);
    Comparison { gx, gy, gxy, out, gamma }
}

fn check_presentations(hd: &HopfData) -> ValidationReport {
    let alg = &hd.algebra;
    let mut report = ValidationReport::new();
    let samples = sample_modules(hd);
    for (xn, x) in &samples {
        for (yn, y) in &samples {
            let name = format!("({xn}, {yn}) ");
            let (px, py) = match (projective_presentation(alg, x), projective_presentation(alg, y)) {
                (Ok(px), Ok(py)) => (px, py),
                (Err(e), _) | (_, Err(e)) => {
                    report.fail(format!("{name}presentation"), e.to_string());
                    continue;
                }
            };
            let free = comparison(hd, &px.p0, &py.p0);
            let target = comparison(hd, x, y);
            report.record(
                format!("{name}γ on the projective covers is invertible"),
                (!free.gamma.is_invertible()).then(|| format!("rank {}", free.gamma.rank())),
            );
            let cover_xy = gamma_map(hd, &free.gxy, &target.gxy, &px.cover.kron(&py.cover));
            report.record(
                format!("{name}Γ(π⊗π) is surjective"),
                (cover_xy.rank() != target.gxy.dim()).then(|| format!("rank {}", cover_xy.rank())),
            );
            let gx_cover = gamma_map(hd, &free.gx, &target.gx, &px.cover);
            let gy_cover = gamma_map(hd, &free.gy, &target.gy, &py.cover);
            let outer = target.out.induced_map(&free.out, &gx_cover, &gy_cover);
            let square = target.gamma.mul(&cover_xy) == outer.mul(&free.gamma);
            report.record(format!("{name}naturality square"), (!square).then(|| "square does not commute".to_string()));
            report.record(
                format!("{name}γ_{{X,Y}} is invertible"),
                (!target.gamma.is_invertible()).then(|| {
                    format!("{}×{} of rank {}", target.gamma.rows(), target.gamma.cols(), target.gamma.rank())
                }),
            );
        }
    }
    report
}

fn check_adjunction(hd: &HopfData) -> ValidationReport {
    let alg = &hd.algebra;
    let mut report = ValidationReport::new();
    for (name, x) in [("A", LeftModule::regular(alg)), ("L_1", trivial_module(hd))] {
        let gx = gamma_functor(hd, &x);
        let s = sigma(hd, &x, &gx);
        let phi_gx = phi_functor(hd, &gx.bimodule);
        let gpg = gamma_functor(hd, &phi_gx);
        let t = tau(hd, &gx.bimodule, &gpg);
        let lhs = t.mul(&gamma_map(hd, &gx, &gpg, &s));
        report.record(format!("τ_Γ ∘ Γ(σ) = id on Γ({name})"), (!lhs.is_identity()).then(|| "not the identity".into()));
        report.record(
            format!("σ is a module map on {name}"),
            (!left_morphism(&x, &phi_gx, &s)).then(|| "fails to intertwine".into()),
        );
    }
    for (name, m) in [("A", Bimodule::regular(alg)), ("Γ(L_1)", gamma_functor(hd, &trivial_module(hd)).bimodule)] {
        let phi_m = phi_functor(hd, &m);
        let g = gamma_functor(hd, &phi_m);
        let s = sigma(hd, &phi_m, &g);
        let t = tau(hd, &m, &g);
        let lhs = t.mul(&s);
        report.record(format!("Φ(τ) ∘ σ_Φ = id on Φ({name})"), (!lhs.is_identity()).then(|| "not the identity".into()));
        report.record(
            format!("τ is a bimodule map on {name}"),
            (!g.bimodule.is_morphism(&m, &t)).then(|| "fails to intertwine".into()),
        );
    }
    report
}

fn left_morphism(m: &LeftModule, n: &LeftModule, t: &Mat) -> bool {
    m.generator_actions().iter().zip(n.generator_actions()).all(|(a, b)| t.mul(a) == b.mul(t))
}

fn check_lax(hd: &HopfData) -> ValidationReport {
    let alg = &hd.algebra;
    let f = alg.field();
    let mut report = ValidationReport::new();
    let a = Bimodule::regular(alg);
    let phi_a = phi_functor(hd, &a);
    let l1 = trivial_module(hd);
    report.record("ξ is a module map", (!left_morphism(&l1, &phi_a, &xi(hd))).then(|| "fails".into()));
    let (aa, tq) = tensor_over_a(alg, &a, &a);
    let k = kappa(&tq, f);
    let src = module_tensor(hd, &phi_a, &phi_a);
    let dst = phi_functor(hd, &aa);
    report.record("κ_{A,A} is a module map", (!left_morphism(&src, &dst, &k)).then(|| "fails".into()));
    report.record("κ_{A,A} is surjective", (k.rank() != tq.dim()).then(|| format!("rank {}", k.rank())));
    let ends = hom_space(alg, &a, &a);
    let mut bad = None;
    'nat: for u in &ends {
        for v in &ends {
            let lhs = tq.induced_map(&tq, u, v).mul(&k);
            let rhs = k.mul(&u.kron(v));
            if lhs != rhs {
                bad = Some("Φ(u⊗v)∘κ ≠ κ∘(u⊗v)".to_string());
                break 'nat;
            }
        }
    }
    report.record("κ is natural on End(A)", bad);
    report
}

/// `(γ ⊗ id)∘γ` against `(id ⊗ γ)∘γ` up to the associator, on `(A,A,A)`
/// for small algebras and on `(A, L_1, A)` otherwise.
fn check_hexagon(hd: &HopfData) -> ValidationReport {
    let alg = &hd.algebra;
    let f = alg.field();
    let mut report = ValidationReport::new();
    let a = LeftModule::regular(alg);
    let (middle, label) = if alg.dim() <= 4 { (a.clone(), "(A, A, A)") } else { (trivial_module(hd), "(A, L_1, A)") };
    let (x, y, z) = (&a, &middle, &a);
    let xy = module_tensor(hd, x, y);
    let yz = module_tensor(hd, y, z);
    let c_xy = comparison(hd, x, y);
    let c_yz = comparison(hd, y, z);
    let c_xy_z = comparison(hd, &xy, z);
    let c_x_yz = comparison(hd, x, &yz);
    // (Γ(X)⊗Γ(Y))⊗Γ(Z) and Γ(X)⊗(Γ(Y)⊗Γ(Z)).
    let (gxy_bimod, _) = tensor_over_a(alg, &c_xy.gx.bimodule, &c_xy.gy.bimodule);
    let left_out = TensorQuotient::for_bimodules(alg, &gxy_bimod, &c_yz.gy.bimodule);
    let (gyz_bimod, _) = tensor_over_a(alg, &c_yz.gx.bimodule, &c_yz.gy.bimodule);
    let right_out = TensorQuotient::for_bimodules(alg, &c_xy.gx.bimodule, &gyz_bimod);
    let id_z = Mat::identity(f, c_yz.gy.dim());
    let id_x = Mat::identity(f, c_xy.gx.dim());
    let path_left = left_out.induced_map(&c_xy_z.out, &c_xy.gamma, &id_z).mul(&c_xy_z.gamma);
    let path_right = right_out.induced_map(&c_x_yz.out, &id_x, &c_yz.gamma).mul(&c_x_yz.gamma);
    let assoc = associator(&c_xy.out, &left_out, &c_yz.out, &right_out, f);
    let ok = assoc.mul(&path_left) == path_right;
    report.record(format!("γ compatible with associators on {label}"), (!ok).then(|| "diagram does not commute".into()));
    report
}
