//! The registry of named checks driven by `verify`.

use num_complex::Complex64;

use crate::dirac::{c, clifford_basis, max_abs, spinor_rep_from_word, wigner_d_block, DiracMatrix};
use crate::error::Result;
use crate::lab::{
    boost_form_residual, check_branch_preservation, check_covariance, check_fw_equivalence,
    check_locality_grid, check_parity, check_position_eigenstate, check_wigner_cocycle, CheckReport,
    TrialField,
};
use crate::operators::{
    commutator, field_position, field_position_gauged, field_spin, field_spin_component, gauge_phase,
    momentum_component, nw_position, pauli_lubanski, pauli_lubanski_square, position_matrix_from_boost,
    position_matrix_part, velocity, velocity_closed, velocity_correction, wigner_spin, DerivativeMode,
    FdScheme, PauliLubanskiMode,
};
use crate::sampling::{self, SampleRng};
use crate::spinor::{
    branch_projector, energy_projector, localized_phase, spinor_components, Branch, MomentumLattice, Spin,
};
use crate::tensor::{levi_civita3, lorentz_from_word, wigner_rotation, Momentum};

/// Inputs to [`run_suite`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SuiteSettings {
    pub mass: f64,
    pub seed: u64,
    pub tol_exact: f64,
    pub tol_fd: f64,
    pub samples: usize,
}

impl Default for SuiteSettings {
    fn default() -> Self {
        Self {
            mass: 1.0,
            seed: 20_240_521,
            tol_exact: 1e-12,
            tol_fd: 1e-6,
            samples: 100,
        }
    }
}

/// Tolerance policy of a check.
#[derive(Debug, Clone, Copy, PartialEq)]
enum Tol {
    Exact,
    Fd,
    /// Fixed band independent of the run tolerances.
    Band(f64),
}

struct Ctx {
    s: SuiteSettings,
    fd: FdScheme,
}

impl Ctx {
    fn tol(&self, t: Tol) -> f64 {
        match t {
            Tol::Exact => self.s.tol_exact,
            Tol::Fd => self.s.tol_fd,
            Tol::Band(b) => b,
        }
    }

    fn report(&self, name: &str, anchor: &str, t: Tol) -> CheckReport {
        CheckReport::new(name, anchor, self.tol(t))
    }

    fn momenta(&self, rng: &mut SampleRng, p_max_over_m: f64) -> Vec<Momentum> {
        (0..self.s.samples)
            .map(|_| sampling::momentum(rng, self.s.mass, p_max_over_m * self.s.mass))
            .collect()
    }
}

fn describe(p: &Momentum) -> String {
    let v = p.spatial();
    format!("p=({:.4},{:.4},{:.4})", v.x, v.y, v.z)
}

type CheckFn = fn(&Ctx, &mut SampleRng) -> Result<Vec<CheckReport>>;

/// Registry order is the report order.
const REGISTRY: &[CheckFn] = &[
    pl_consistency,
    casimirs,
    wigner_spin_check,
    field_spin_structure,
    orbital_decomposition,
    commutators,
    eigenstates,
    branch_preservation,
    gauge_freedom,
    covariance,
    lorentz_structure,
    fw_nw,
    nw_hermiticity,
    velocities,
    locality,
    parity_and_spinors,
];

/// Run every registered check; output order is fixed.
pub fn run_suite(settings: &SuiteSettings) -> Result<Vec<CheckReport>> {
    let ctx = Ctx {
        s: *settings,
        fd: FdScheme::default(),
    };
    let mut out = Vec::new();
    for (i, check) in REGISTRY.iter().enumerate() {
        let mut rng = sampling::rng_for(settings.seed, i as u64);
        out.extend(check(&ctx, &mut rng)?);
    }
    Ok(out)
}

fn pl_consistency(ctx: &Ctx, rng: &mut SampleRng) -> Result<Vec<CheckReport>> {
    let mut r = ctx.report(
        "pauli-lubanski definition vs closed",
        "W^mu contraction = closed form",
        Tol::Exact,
    );
    for p in ctx.momenta(rng, 8.0) {
        let a = pauli_lubanski(&p, PauliLubanskiMode::Definition);
        let b = pauli_lubanski(&p, PauliLubanskiMode::Closed);
        let res = (0..4).map(|mu| max_abs(&(a[mu] - b[mu]))).fold(0.0, f64::max);
        r.record(res, || describe(&p));
    }
    Ok(vec![r])
}

fn casimirs(ctx: &Ctx, rng: &mut SampleRng) -> Result<Vec<CheckReport>> {
    let mut ss = ctx.report("spin casimir S.S", "S.S = 3/4", Tol::Exact);
    let mut ww = ctx.report("pauli-lubanski casimir", "W_mu W^mu = -3/4 m^2", Tol::Exact);
    let mut alg = ctx.report("field spin su(2) algebra", "[S^i,S^j] = i eps S^k", Tol::Exact);
    let id = DiracMatrix::identity();
    for p in ctx.momenta(rng, 8.0) {
        let m2 = p.mass() * p.mass();
        let w = pauli_lubanski(&p, PauliLubanskiMode::Closed);
        ww.record(
            max_abs(&(pauli_lubanski_square(&w) / c(m2) + id * c(0.75))),
            || describe(&p),
        );
        for br in Branch::BOTH {
            let s = field_spin(&p, br);
            let sq = s[0] * s[0] + s[1] * s[1] + s[2] * s[2];
            ss.record(max_abs(&(sq - id * c(0.75))), || format!("{br} {}", describe(&p)));
            let mut worst: f64 = 0.0;
            for i in 0..3 {
                for j in 0..3 {
                    let mut rhs = DiracMatrix::zeros();
                    for k in 0..3 {
                        rhs += s[k] * Complex64::new(0.0, levi_civita3(i, j, k));
                    }
                    worst = worst.max(max_abs(&(s[i] * s[j] - s[j] * s[i] - rhs)));
                }
            }
            alg.record(worst, || format!("{br} {}", describe(&p)));
        }
    }
    Ok(vec![ss, ww, alg])
}

fn wigner_spin_check(ctx: &Ctx, rng: &mut SampleRng) -> Result<Vec<CheckReport>> {
    let b = clifford_basis();
    let mut r = ctx.report("wigner spin reduction", "S_W = Sigma/2", Tol::Band(1e-13));
    for p in ctx.momenta(rng, 8.0) {
        for mode in [PauliLubanskiMode::Closed, PauliLubanskiMode::Definition] {
            let s = wigner_spin(&p, mode);
            let res = (0..3)
                .map(|k| max_abs(&(s[k] - b.sigma_spin[k] * c(0.5))))
                .fold(0.0, f64::max);
            r.record(res, || format!("{mode:?} {}", describe(&p)));
        }
    }
    Ok(vec![r])
}

fn field_spin_structure(ctx: &Ctx, rng: &mut SampleRng) -> Result<Vec<CheckReport>> {
    let b = clifford_basis();
    let mut conj = ctx.report("field spin = boosted Sigma/2", "S = M (Sigma/2) M^-1", Tol::Exact);
    let mut eig = ctx.report("field spin eigenvalue", "S^z psi = lambda psi", Tol::Exact);
    let mut herm = ctx.report("field spin chirality grading", "[S, gamma5] = 0", Tol::Exact);
    for p in ctx.momenta(rng, 8.0) {
        let mm = crate::dirac::boost_spinor_rep(&p);
        let minv = crate::dirac::boost_spinor_rep_inv(&p);
        for br in Branch::BOTH {
            let s = field_spin(&p, br);
            let res = (0..3)
                .map(|k| max_abs(&(s[k] - mm * b.sigma_spin[k] * c(0.5) * minv)))
                .fold(0.0, f64::max);
            conj.record(res, || format!("{br} {}", describe(&p)));
            let h = (0..3)
                .map(|k| max_abs(&(s[k] * b.gamma5 - b.gamma5 * s[k])))
                .fold(0.0, f64::max);
            herm.record(h, || format!("{br} {}", describe(&p)));
            for sp in Spin::BOTH {
                let psi = spinor_components(&p, br, sp);
                eig.record((s[2] * psi - psi * c(sp.value())).norm(), || {
                    format!("{br} {}", describe(&p))
                });
            }
        }
    }
    Ok(vec![conj, eig, herm])
}

fn orbital_decomposition(ctx: &Ctx, rng: &mut SampleRng) -> Result<Vec<CheckReport>> {
    let b = clifford_basis();
    let mut r = ctx.report(
        "orbital + field spin = wigner spin",
        "A x p + S = Sigma/2",
        Tol::Band(1e-10),
    );
    let mut g = ctx.report(
        "position matrix = boost generator",
        "A_k = -i dM M^-1",
        Tol::Band(1e-10),
    );
    for p in ctx.momenta(rng, 8.0) {
        let a: Vec<DiracMatrix> = (0..3).map(|k| position_matrix_part(&p, k)).collect();
        let s = field_spin(&p, Branch::Particle);
        let mut worst: f64 = 0.0;
        let mut gen: f64 = 0.0;
        for i in 0..3 {
            let (j, k) = ((i + 1) % 3, (i + 2) % 3);
            let l = a[j] * c(p.component(k)) - a[k] * c(p.component(j));
            worst = worst.max(max_abs(&(l + s[i] - b.sigma_spin[i] * c(0.5))));
            gen = gen.max(max_abs(&(a[i] - position_matrix_from_boost(&p, i))));
        }
        r.record(worst, || describe(&p));
        g.record(gen, || describe(&p));
    }
    Ok(vec![r, g])
}

fn commutators(ctx: &Ctx, rng: &mut SampleRng) -> Result<Vec<CheckReport>> {
    let fd_mode = DerivativeMode::FiniteDifference(ctx.fd);
    let mut out = Vec::new();
    let momenta = ctx.momenta(rng, 8.0);
    for (mode, tol, tag) in [
        (fd_mode, Tol::Fd, "fd"),
        (DerivativeMode::Analytic, Tol::Band(1e-10), "analytic"),
    ] {
        let mut xx = ctx.report(
            &format!("[X^i,X^j] = 0 ({tag})"),
            "position components commute",
            tol,
        );
        let mut xs = ctx.report(
            &format!("[X^i,S^j] = 0 ({tag})"),
            "position commutes with spin",
            tol,
        );
        let mut xp = ctx.report(
            &format!("[X^i,P^j] = i delta ({tag})"),
            "canonical commutator",
            tol,
        );
        for p in &momenta {
            for br in Branch::BOTH {
                let x = field_position(br);
                let (mut a, mut b2, mut c2): (f64, f64, f64) = (0.0, 0.0, 0.0);
                for i in 0..3 {
                    for j in 0..3 {
                        a = a.max(max_abs(&commutator(&x[i], &x[j], p, &mode)?));
                        b2 = b2.max(max_abs(&commutator(
                            &x[i],
                            &field_spin_component(br, j),
                            p,
                            &mode,
                        )?));
                        let r = commutator(&x[i], &momentum_component(br, j), p, &mode)?;
                        let want = if i == j {
                            Complex64::new(0.0, 1.0)
                        } else {
                            Complex64::new(0.0, 0.0)
                        };
                        c2 = c2.max(max_abs(&(r - DiracMatrix::identity() * want)));
                    }
                }
                xx.record(a, || format!("{br} {}", describe(p)));
                xs.record(b2, || format!("{br} {}", describe(p)));
                xp.record(c2, || format!("{br} {}", describe(p)));
            }
        }
        out.extend([xx, xs, xp]);
    }
    Ok(out)
}

fn eigenstates(ctx: &Ctx, rng: &mut SampleRng) -> Result<Vec<CheckReport>> {
    let mut r = ctx.report("position eigenstates", "X^k(x0) f = x^k f", Tol::Fd);
    for _ in 0..ctx.s.samples {
        let p = sampling::momentum(rng, ctx.s.mass, 8.0 * ctx.s.mass);
        let x = sampling::position(rng, 2.0 / ctx.s.mass);
        let x0: f64 = rand::Rng::random_range(rng, -1.0..=1.0) / ctx.s.mass;
        let (br, sp) = (sampling::branch(rng), sampling::spin(rng));
        let rep = check_position_eigenstate(&x, x0, &p, br, sp, &ctx.fd, r.tolerance)?;
        r.merge(&rep);
    }
    Ok(vec![r])
}

fn branch_preservation(ctx: &Ctx, rng: &mut SampleRng) -> Result<Vec<CheckReport>> {
    let mut r = ctx.report("branch preservation", "Lambda_-+ X psi_+- = 0", Tol::Fd);
    for p in ctx.momenta(rng, 4.0) {
        for br in Branch::BOTH {
            r.merge(&check_branch_preservation(
                &p,
                br,
                sampling::spin(rng),
                &ctx.fd,
                r.tolerance,
            )?);
        }
    }
    Ok(vec![r])
}

fn gauge_freedom(ctx: &Ctx, rng: &mut SampleRng) -> Result<Vec<CheckReport>> {
    let mode = DerivativeMode::FiniteDifference(ctx.fd);
    let mut alg = ctx.report(
        "gauge-shifted algebra",
        "b(p^2) freedom keeps commutators",
        Tol::Fd,
    );
    let mut eig = ctx.report("gauge-shifted eigenstates", "b(p^2) freedom is a phase", Tol::Fd);
    let n = ctx.s.samples.min(25);
    for _ in 0..n {
        let p = sampling::momentum(rng, ctx.s.mass, 4.0 * ctx.s.mass);
        let beta: f64 = rand::Rng::random_range(rng, -1.0..=1.0);
        let br = sampling::branch(rng);
        let x = sampling::position(rng, 1.0);
        let g = field_position_gauged(br, beta);
        let base = field_position(br);
        let mut worst: f64 = 0.0;
        for i in 0..3 {
            for j in 0..3 {
                let shifted = [
                    commutator(&g[i], &g[j], &p, &mode)?,
                    commutator(&g[i], &field_spin_component(br, j), &p, &mode)?,
                    commutator(&g[i], &momentum_component(br, j), &p, &mode)?,
                ];
                let plain = [
                    commutator(&base[i], &base[j], &p, &mode)?,
                    commutator(&base[i], &field_spin_component(br, j), &p, &mode)?,
                    commutator(&base[i], &momentum_component(br, j), &p, &mode)?,
                ];
                for (a, b) in shifted.iter().zip(&plain) {
                    worst = worst.max(max_abs(&(a - b)));
                }
            }
        }
        alg.record(worst, || format!("beta={beta:.3} {br} {}", describe(&p)));
        let f = |q: &Momentum| {
            spinor_components(q, br, Spin::Up) * localized_phase(q, br, &x, 0.0) * gauge_phase(q, br, beta)
        };
        for (k, op) in g.iter().enumerate() {
            let res = (op.apply(f, &p, &ctx.fd)? - f(&p) * c(x[k])).norm();
            eig.record(res, || {
                format!("beta={beta:.3} {br} {} k={}", describe(&p), k + 1)
            });
        }
    }
    Ok(vec![alg, eig])
}

fn covariance(ctx: &Ctx, rng: &mut SampleRng) -> Result<Vec<CheckReport>> {
    let mut spinor = ctx.report(
        "covariance spinor identity",
        "M(L) psi(p) = D(R) psi(Lp)",
        Tol::Band(1e-10),
    );
    let mut eigen = ctx.report(
        "covariance transformed eigenvalue",
        "X'(x0') psi' = x' psi'",
        Tol::Fd,
    );
    let mut cocycle = ctx.report("wigner cocycle", "D(R21) = D(R2) D(R1)", Tol::Band(1e-10));
    for _ in 0..ctx.s.samples {
        let p = sampling::momentum(rng, ctx.s.mass, 2.0 * ctx.s.mass);
        let w = sampling::word(rng, 3, 0.6);
        let x = sampling::position(rng, 1.0 / ctx.s.mass);
        let x0: f64 = rand::Rng::random_range(rng, -0.5..=0.5) / ctx.s.mass;
        let (br, sp) = (sampling::branch(rng), sampling::spin(rng));
        let rep = check_covariance(&w, &p, br, sp, &x, x0, &ctx.fd, spinor.tolerance, eigen.tolerance)?;
        spinor.merge(&rep.spinor);
        eigen.merge(&rep.eigenvalue);
        let w2 = sampling::word(rng, 3, 0.6);
        cocycle.merge(&check_wigner_cocycle(&w, &w2, &p, cocycle.tolerance)?);
    }
    Ok(vec![spinor, eigen, cocycle])
}

fn lorentz_structure(ctx: &Ctx, rng: &mut SampleRng) -> Result<Vec<CheckReport>> {
    let b = clifford_basis();
    let mut metric = ctx.report("lorentz metric preservation", "L^T g L = g", Tol::Exact);
    let mut hom = ctx.report(
        "spinor homomorphism",
        "M^-1 gamma^mu M = L^mu_nu gamma^nu",
        Tol::Band(1e-10),
    );
    let mut fixed = ctx.report(
        "wigner rotation is spatial",
        "R fixes (1,0,0,0)",
        Tol::Band(1e-10),
    );
    let mut trace = ctx.report("wigner block trace", "tr u = 2 cos(angle/2)", Tol::Exact);
    let mut forms = ctx.report(
        "boost exponential vs rational form",
        "M(L_p) closed forms",
        Tol::Exact,
    );
    for _ in 0..ctx.s.samples {
        let w = sampling::word(rng, 3, 1.0);
        let l = lorentz_from_word(&w)?;
        metric.record(l.metric_residual(), || format!("[{w}]"));
        let m = spinor_rep_from_word(&w)?;
        let minv = m.try_inverse().unwrap_or_else(DiracMatrix::zeros);
        let mut worst: f64 = 0.0;
        for mu in 0..4 {
            let mut rhs = DiracMatrix::zeros();
            for nu in 0..4 {
                rhs += b.gamma[nu] * c(l.entry(mu, nu));
            }
            worst = worst.max(max_abs(&(minv * b.gamma[mu] * m - rhs)));
        }
        hom.record(worst, || format!("[{w}]"));
        let p = sampling::momentum(rng, ctx.s.mass, 8.0 * ctx.s.mass);
        let r = wigner_rotation(&l, &p)?;
        fixed.record(r.timelike_mixing(), || format!("[{w}] {}", describe(&p)));
        let u = wigner_d_block(&r)?;
        let (_, angle) = crate::dirac::axis_angle(&r.spatial_block());
        trace.record((u.trace() - c(2.0 * (angle / 2.0).cos())).norm(), || {
            format!("[{w}]")
        });
        forms.record(boost_form_residual(&p), || describe(&p));
    }
    Ok(vec![metric, hom, fixed, trace, forms])
}

fn fw_nw(ctx: &Ctx, rng: &mut SampleRng) -> Result<Vec<CheckReport>> {
    let mut ident = ctx.report("FW boost identity", "M P+ = sqrt(E/m) U_P P+", Tol::Exact);
    let mut op = ctx.report(
        "NW = field position on particles",
        "FW mean position equivalence",
        Tol::Fd,
    );
    for p in ctx.momenta(rng, 4.0) {
        let center = sampling::position(rng, 1.0) * ctx.s.mass;
        let width: f64 = rand::Rng::random_range(rng, 0.5..=1.5) * ctx.s.mass;
        let trial = TrialField::Gaussian {
            center,
            width,
            spin: sampling::spin(rng),
        };
        let (a, b) = check_fw_equivalence(&p, &trial, &ctx.fd, ident.tolerance, op.tolerance)?;
        ident.merge(&a);
        op.merge(&b);
    }
    Ok(vec![ident, op])
}

fn nw_hermiticity(ctx: &Ctx, _rng: &mut SampleRng) -> Result<Vec<CheckReport>> {
    let mut r = ctx.report("NW hermiticity", "<f|X g> = <X f|g>", Tol::Band(1e-8));
    let lattice = MomentumLattice::one_dim(256, 8.0 * ctx.s.mass, ctx.s.mass)?;
    let nw = nw_position();
    let f = |q: &Momentum| {
        let a = (-(q.component(2) - 0.3 * ctx.s.mass).powi(2) / (2.0 * ctx.s.mass.powi(2))).exp();
        spinor_components(q, Branch::Particle, Spin::Up) * Complex64::from_polar(a, 0.7 * q.component(2))
    };
    let g = |q: &Momentum| {
        let a = (-(q.component(2) + 0.2 * ctx.s.mass).powi(2) / (1.5 * ctx.s.mass.powi(2))).exp();
        spinor_components(q, Branch::Particle, Spin::Up) * c(a)
    };
    let mut lhs = Vec::new();
    let mut rhs = Vec::new();
    for (i, q) in lattice.momenta().enumerate() {
        let w = lattice.measure(i);
        lhs.push(f(&q).dotc(&nw[2].apply(g, &q, &ctx.fd)?) * w);
        rhs.push(nw[2].apply(f, &q, &ctx.fd)?.dotc(&g(&q)) * w);
    }
    let diff = crate::numeric::pairwise_sum_complex(&lhs) - crate::numeric::pairwise_sum_complex(&rhs);
    r.record(diff.norm(), || "z component, 1-D lattice N=256".into());
    Ok(vec![r])
}

fn velocities(ctx: &Ctx, rng: &mut SampleRng) -> Result<Vec<CheckReport>> {
    let fd_mode = DerivativeMode::FiniteDifference(ctx.fd);
    let mut sub = ctx.report("velocity on branch subspace", "V^k = +-p^k/E", Tol::Fd);
    let mut closed = ctx.report(
        "particle velocity closed form",
        "-i[X,H_P] closed form",
        Tol::Exact,
    );
    let mut corr = ctx.report(
        "velocity correction annihilates psi+",
        "added term * psi_+ = 0",
        Tol::Exact,
    );
    let mut sum = ctx.report("corrected velocity", "closed + added = p^k/E", Tol::Exact);
    let mut dirac = ctx.report("dirac velocity spectrum", "(gamma0 gamma^k)^2 = 1", Tol::Exact);
    for k in 0..3 {
        let v = crate::operators::dirac_velocity(k);
        dirac.record(max_abs(&(v * v - DiracMatrix::identity())), || {
            format!("k={}", k + 1)
        });
    }
    let mut momenta = vec![Momentum::from_components(
        ctx.s.mass,
        0.0,
        0.0,
        0.75 * ctx.s.mass,
    )?];
    momenta.extend(ctx.momenta(rng, 8.0));
    for p in &momenta {
        let scale = 1.0 + p.energy() * p.energy() / (p.mass() * p.mass());
        for br in Branch::BOTH {
            let v = velocity(br, p, &fd_mode)?;
            let proj = branch_projector(p, br);
            let res = (0..3)
                .map(|k| max_abs(&(v[k] * proj - proj * c(br.sign() * p.component(k) / p.energy()))))
                .fold(0.0, f64::max);
            sub.record(res, || format!("{br} {}", describe(p)));
        }
        let va = velocity(Branch::Particle, p, &DerivativeMode::Analytic)?;
        let vc = velocity_closed(p);
        let add = velocity_correction(p);
        let mut worst: f64 = 0.0;
        let mut total: f64 = 0.0;
        for k in 0..3 {
            worst = worst.max(max_abs(&(va[k] - vc[k])) / scale);
            let target = DiracMatrix::identity() * c(p.component(k) / p.energy());
            total = total.max(max_abs(&(vc[k] + add[k] - target)) / scale);
            for sp in Spin::BOTH {
                let psi = spinor_components(p, Branch::Particle, sp);
                corr.record((add[k] * psi).norm() / scale, || {
                    format!("{} k={}", describe(p), k + 1)
                });
            }
        }
        closed.record(worst, || describe(p));
        sum.record(total, || describe(p));
    }
    Ok(vec![sub, closed, corr, sum, dirac])
}

fn locality(ctx: &Ctx, _rng: &mut SampleRng) -> Result<Vec<CheckReport>> {
    let lattice = MomentumLattice::one_dim(256, 8.0 * ctx.s.mass, ctx.s.mass)?;
    let mut r = check_locality_grid(&lattice, lattice.len() - 1, ctx.tol(Tol::Band(1e-8)))?;
    r.name = "NW locality (N=256)".into();
    Ok(vec![r])
}

fn parity_and_spinors(ctx: &Ctx, rng: &mut SampleRng) -> Result<Vec<CheckReport>> {
    let g0 = clifford_basis().gamma[0];
    let mut parity = ctx.report("parity relations", "M^-2 psi = +-gamma0 psi", Tol::Exact);
    let mut norm = ctx.report(
        "spinor normalization",
        "psi^dagger psi = E/m, psibar psi = eps",
        Tol::Exact,
    );
    let mut ortho = ctx.report(
        "paired-mode orthogonality",
        "psi_+(p)^dagger psi_-(-p) = 0",
        Tol::Exact,
    );
    let mut proj = ctx.report(
        "energy projectors",
        "Lambda_+ + Lambda_- = 1, idempotent",
        Tol::Exact,
    );
    for p in ctx.momenta(rng, 8.0) {
        let scale = p.energy() / p.mass();
        for br in Branch::BOTH {
            for sp in Spin::BOTH {
                let mut rep = check_parity(&p, br, sp, parity.tolerance * scale);
                rep.max_residual /= scale;
                parity.merge(&rep);
                let psi = spinor_components(&p, br, sp);
                let dens = psi.norm_squared();
                let bar = (psi.adjoint() * g0 * psi)[(0, 0)].re;
                norm.record(
                    ((dens - scale).abs() / scale).max((bar - br.sign()).abs()),
                    || format!("{br} {}", describe(&p)),
                );
            }
        }
        let mut worst: f64 = 0.0;
        for a in Spin::BOTH {
            for b in Spin::BOTH {
                let u = spinor_components(&p, Branch::Particle, a);
                let v = spinor_components(&p.reversed(), Branch::Antiparticle, b);
                worst = worst.max(u.dotc(&v).norm() / scale);
            }
        }
        ortho.record(worst, || describe(&p));
        let (lp, lm) = (energy_projector(&p, 1.0), energy_projector(&p, -1.0));
        let id = DiracMatrix::identity();
        let res = max_abs(&(lp + lm - id))
            .max(max_abs(&(lp * lp - lp)))
            .max(max_abs(&(lp * lm)))
            .max((lp.trace() - c(2.0)).norm());
        proj.record(res, || describe(&p));
    }
    Ok(vec![parity, norm, ortho, proj])
}
