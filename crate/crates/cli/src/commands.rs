use std::error::Error;

use kgalilei_core::equivalence::{self, ExchangeOperator, PairParams, TwoParticleState};
use kgalilei_core::grid::{self, GridWavefunction, MomentumGrid};
use kgalilei_core::hopf::Generator;
use kgalilei_core::hydrogen::{self, HydrogenConfig};
use kgalilei_core::mass::{self, AlgebraMass, DeformationParam, PhysicalMass};
use kgalilei_core::realization::{self, OneParticleRealization, TwoParticleSystem};
use kgalilei_core::{CentralCharge, GkAlgebra, Particle, RationalFunction};
use nalgebra::Vector3;
use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::report::{number, Report};
use crate::{Central, Cocycle, Command, Hydrogen, Mass, MassKind, PairArgs, Solver, Verify};

type Res = Result<Report, Box<dyn Error>>;

/// Radial levels must agree with the closed form to this relative error.
const SPECTRUM_TOLERANCE: f64 = 1e-6;
/// Richardson gate handed to the radial solver.
const GRID_GATE: f64 = 1e-4;
const COCYCLE_TOLERANCE: f64 = 1e-8;

pub fn run(cmd: &Command) -> Res {
    match cmd {
        Command::Verify(Verify::Hopf { central }) => verify_hopf(*central),
        Command::Verify(Verify::Realization { exact: _, perturb_mf }) => verify_realization(perturb_mf.as_deref()),
        Command::Verify(Verify::Equivalence(args)) => verify_equivalence(args),
        Command::Mass(m) => mass_cmd(m),
        Command::Hydrogen(Hydrogen::Spectrum { mf, mfp, k, nmax, solver, e2, hbar }) => {
            spectrum(*mf, *mfp, k, *nmax, *solver, *e2, *hbar)
        }
        Command::Cocycle(Cocycle::Demo { seed, pairs }) => cocycle_demo(*seed, *pairs),
    }
}

fn deformation(s: &str) -> Result<DeformationParam, Box<dyn Error>> {
    Ok(s.parse::<DeformationParam>()?)
}

/// `p/q`, an integer or a finite decimal, as an exact rational.
fn parse_rational(s: &str) -> Result<RationalFunction, Box<dyn Error>> {
    let bad = || format!("not a rational number: {s:?}");
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: i64 = n.trim().parse().map_err(|_| bad())?;
        let d: i64 = d.trim().parse().map_err(|_| bad())?;
        if d == 0 {
            return Err(bad().into());
        }
        return Ok(RationalFunction::rational(n, d));
    }
    let (int, frac) = s.split_once('.').unwrap_or((s, ""));
    if frac.len() > 15 || !frac.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad().into());
    }
    let digits: i64 = format!("{int}{frac}").parse().map_err(|_| bad())?;
    Ok(RationalFunction::rational(digits, 10i64.pow(frac.len() as u32)))
}

fn verify_hopf(central: Central) -> Res {
    let charge = match central {
        Central::Normalized => CentralCharge::Normalized,
        Central::Reference => CentralCharge::Reference,
    };
    let mut r = Report::new("verify hopf");
    r.param("central", match central {
        Central::Normalized => "normalized",
        Central::Reference => "reference",
    });
    let alg = GkAlgebra::exact(charge);
    let gens = Generator::all();
    let n = gens.len();

    let mut jacobi = (0, String::new());
    for i in 0..n {
        for j in i + 1..n {
            for l in j + 1..n {
                let e = alg.check_jacobi(gens[i], gens[j], gens[l]);
                if !e.is_zero() {
                    jacobi.0 += e.terms().count();
                    jacobi.1 = format!("({}, {}, {}): {e:?}", gens[i].name(), gens[j].name(), gens[l].name());
                }
            }
        }
    }
    r.exact("jacobi", jacobi.0, || jacobi.1.clone());

    let (mut hom, mut anti) = ((0, String::new()), (0, String::new()));
    for &g in &gens {
        for &h in &gens {
            let e = alg.check_hom(g, h);
            if !e.is_zero() {
                hom.0 += e.terms().count();
                hom.1 = format!("({}, {}): {e:?}", g.name(), h.name());
            }
            let e = alg.check_antipode_antihom(g, h);
            if !e.is_zero() {
                anti.0 += e.terms().count();
                anti.1 = format!("({}, {}): {e:?}", g.name(), h.name());
            }
        }
    }
    r.exact("coproduct_homomorphism", hom.0, || hom.1.clone());

    let (mut coassoc, mut axiom, mut counit) = ((0, String::new()), (0, String::new()), (0, String::new()));
    for &g in &gens {
        let e = alg.check_coassoc(g);
        if !e.is_zero() {
            coassoc.0 += e.terms().count();
            coassoc.1 = format!("{}: {e:?}", g.name());
        }
        let (a, b) = alg.check_hopf_axiom(g);
        let c = a.terms().count() + b.terms().count();
        if c > 0 {
            axiom.0 += c;
            axiom.1 = format!("{}: {a:?} / {b:?}", g.name());
        }
        let (a, b) = alg.check_counit(g);
        let c = a.terms().count() + b.terms().count();
        if c > 0 {
            counit.0 += c;
            counit.1 = format!("{}: {a:?} / {b:?}", g.name());
        }
    }
    r.exact("coassociativity", coassoc.0, || coassoc.1.clone());
    r.exact("counit", counit.0, || counit.1.clone());
    r.exact("antipode_axiom", axiom.0, || axiom.1.clone());
    r.exact("antipode_antihomomorphism", anti.0, || anti.1.clone());
    r.result("generators", gens.iter().map(|g| g.name()).collect::<Vec<_>>());
    Ok(r)
}

fn tally(name: &str, r: &mut Report, residuals: &[(String, realization::Operator)]) {
    let bad: Vec<&(String, realization::Operator)> = residuals.iter().filter(|(_, e)| !e.is_zero()).collect();
    let count = bad.iter().map(|(_, e)| e.terms().count()).sum();
    r.exact(name, count, || bad.iter().map(|(n, e)| format!("{n}: {e:?}")).collect::<Vec<_>>().join("; "));
}

fn verify_realization(perturb: Option<&str>) -> Res {
    let mut r = Report::new("verify realization");
    r.param("backend", "exact");
    let alg = GkAlgebra::default();
    let mut one = OneParticleRealization::new(Particle::First);
    if let Some(p) = perturb {
        let delta = parse_rational(p)?;
        r.param("perturb_mf", delta.to_string());
        let m_f = &realization::physical_mass_of(one.lambda()) + &delta;
        one = one.with_physical_mass(m_f)?;
    }
    tally("one_particle_brackets", &mut r, &realization::verify_one_particle(&one, &alg)?);

    let sys = TwoParticleSystem::deformed();
    tally("two_particle_brackets", &mut r, &sys.verify_composed(&alg, false)?);
    tally("two_particle_brackets_swapped", &mut r, &sys.verify_composed(&alg, true)?);
    tally("relative_variables_canonical", &mut r, &sys.relative_variables()?.canonical_residuals());
    tally("tilde_variables_canonical", &mut r, &sys.tilde_variables()?.canonical_residuals());
    let split = sys.kinetic_split(&alg)?;
    r.exact("kinetic_split", split.terms().count(), || format!("{split:?}"));
    r.result("total_mass", sys.total_mass()?.to_string());
    r.result("reduced_mass", sys.reduced_mass()?.to_string());
    Ok(r)
}

fn verify_equivalence(args: &PairArgs) -> Res {
    let k = deformation(&args.k)?;
    let mut r = Report::new("verify equivalence");
    r.param("mf", args.mf);
    r.param("mfp", args.mfp);
    r.param("k", k.to_string());
    let p = PairParams::new(args.mf, args.mfp, k)?;
    let (l, lp) = p.lambdas();
    r.result("lambda", l);
    r.result("lambda_p", lp);
    r.result("total_mass", p.total_mass());
    match equivalence::find_theta(&p) {
        Ok(s) => {
            r.numeric("theta_alignment", s.residual, equivalence::THETA_TOLERANCE);
            r.result("theta", s.theta);
            r.result("theta_closed_form", s.closed_form);
            r.result("theta_printed_form", s.printed_form);
            r.result("closed_form_matches", s.matches_closed_form(1e-8));
            r.result("printed_form_matches", s.matches_printed_form(1e-8));
        }
        Err(e) => r.fail("theta_alignment", e.to_string()),
    }
    if args.mf == args.mfp {
        r.numeric("us_involution", equivalence::check_involution(args.mf, k)?, 1e-10);
        let us = ExchangeOperator::new(args.mf, args.mfp, k)?;
        let state = TwoParticleState::scalar(|q| {
            Complex64::new((-(q[0] - 0.2).powi(2) - q[1].powi(2) - (q[3] + 0.4).powi(2) - q[4].powi(2) - q[2] * q[5]).exp(), q[0] * q[4])
        });
        let pts = equivalence::sample_points(5, 1.5);
        let one = Complex64::new(1.0, 0.0);
        let plus = us.projector(1, &state);
        let minus = us.projector(-1, &state);
        let worst = [
            equivalence::max_difference(&plus.combine(one, &minus, one), &state, &pts),
            equivalence::max_difference(&us.projector(1, &plus), &plus, &pts),
            equivalence::max_difference(&us.projector(-1, &minus), &minus, &pts),
            equivalence::max_norm(&us.projector(1, &minus), &pts),
            equivalence::max_norm(&us.projector(-1, &plus), &pts),
        ]
        .into_iter()
        .fold(0.0, f64::max);
        r.numeric("exchange_projectors", worst, 1e-8);
    }
    Ok(r)
}

fn mass_cmd(m: &Mass) -> Res {
    match m {
        Mass::Compose { k, masses } => {
            let kp = deformation(k)?;
            let mut r = Report::new("mass compose");
            r.param("k", kp.to_string());
            r.param("masses", masses.clone());
            let ms: Vec<PhysicalMass> = masses.iter().map(|&x| PhysicalMass(x)).collect();
            let total = mass::compose_many(&ms, kp)?;
            r.result("total", total.0);
            r.table(&["total"], vec![vec![number(total.0)]]);
            Ok(r)
        }
        Mass::Convert { k, from, value } => {
            let kp = deformation(k)?;
            let mut r = Report::new("mass convert");
            r.param("k", kp.to_string());
            let (phys, alg) = match from {
                MassKind::Physical => {
                    r.param("from", "physical");
                    (*value, mass::to_algebra(PhysicalMass(*value), kp)?.0)
                }
                MassKind::Algebra => {
                    r.param("from", "algebra");
                    (mass::to_physical(AlgebraMass(*value), kp)?.0, *value)
                }
            };
            r.param("value", *value);
            r.result("physical", phys);
            r.result("algebra", alg);
            r.table(&["physical", "algebra"], vec![vec![number(phys), number(alg)]]);
            Ok(r)
        }
        Mass::Reduced { k, m1, m2 } => {
            let kp = deformation(k)?;
            let mut r = Report::new("mass reduced");
            r.param("k", kp.to_string());
            r.param("m1", *m1);
            r.param("m2", *m2);
            let v = mass::reduced(PhysicalMass(*m1), PhysicalMass(*m2), kp)?.0;
            r.result("reduced", v);
            r.table(&["reduced"], vec![vec![number(v)]]);
            Ok(r)
        }
    }
}

fn spectrum(mf: f64, mfp: f64, k: &str, nmax: u32, solver: Solver, e2: f64, hbar: f64) -> Res {
    if nmax == 0 {
        return Err("--nmax must be at least 1".into());
    }
    let kp = deformation(k)?;
    let mut cfg = HydrogenConfig::new(mf, mfp, kp);
    cfg.e2 = e2;
    cfg.hbar = hbar;
    let mut r = Report::new("hydrogen spectrum");
    r.param("mf", mf);
    r.param("mfp", mfp);
    r.param("k", kp.to_string());
    r.param("nmax", nmax);
    r.param("e2", e2);
    r.param("hbar", hbar);
    r.param("solver", match solver {
        Solver::Closed => "closed",
        Solver::Radial => "radial",
        Solver::Both => "both",
    });
    let closed = hydrogen::bohr_levels(&cfg, nmax)?;
    let v = cfg.reduced_mass()?;
    r.result("reduced_mass", v);
    r.result("bohr_radius", cfg.bohr_radius()?);
    if let Ok(s) = hydrogen::correction_series(mf * mfp / (mf + mfp), kp, 3) {
        r.result("mass_ratio", s.exact_ratio);
    }

    let radial: Vec<Option<Vec<f64>>> = if solver == Solver::Closed {
        vec![None; nmax as usize]
    } else {
        (0..nmax)
            .map(|l| hydrogen::coulomb_levels(&cfg, l, (nmax - l) as usize, GRID_GATE).map(|s| Some(s.energies)))
            .collect::<Result<_, _>>()?
    };

    let mut rows = Vec::new();
    let mut levels = Vec::new();
    let mut worst = 0.0f64;
    for n in 1..=nmax {
        for l in 0..n {
            let ec = closed[n as usize - 1];
            let er = radial[l as usize].as_ref().map(|e| e[(n - l - 1) as usize]);
            let rel = er.map(|e| ((e - ec) / ec).abs());
            if let Some(x) = rel {
                worst = worst.max(x);
            }
            let show_closed = solver != Solver::Radial;
            let cell = |x: Option<f64>| x.map(number).unwrap_or(Value::Null);
            rows.push(vec![json!(n), json!(l), cell(show_closed.then_some(ec)), cell(er), cell(rel)]);
            levels.push(json!({
                "n": n,
                "l": l,
                "E_closed": cell(show_closed.then_some(ec)),
                "E_radial": cell(er),
                "rel_err": cell(rel),
            }));
        }
    }
    if solver == Solver::Both {
        r.numeric("radial_matches_closed", worst, SPECTRUM_TOLERANCE);
    }
    r.result("levels", levels);
    r.table(&["n", "l", "E_closed", "E_radial", "rel_err"], rows);
    Ok(r)
}

fn cocycle_demo(seed: u64, pairs: usize) -> Res {
    let grid = MomentumGrid::default();
    let m = 0.7;
    let mut r = Report::new("cocycle demo");
    r.param("seed", seed);
    r.param("pairs", pairs as u64);
    r.param("mass", m);
    r.param("grid_points", grid.n as u64);
    r.param("p_max", grid.p_max);
    let psi = GridWavefunction::gaussian(grid, m, Vector3::new(0.5, -0.25, 0.25), 1.0, Vector3::new(0.3, 0.1, -0.2));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let shift = grid.shift_limit() / 2.0;
    let (mut spread, mut angle) = (0.0f64, 0.0f64);
    let mut rows = Vec::new();
    for i in 0..pairs {
        let g = grid::random_lattice_element(&mut rng, m, &grid, shift);
        let h = if i % 2 == 0 {
            grid::random_lattice_element(&mut rng, m, &grid, shift)
        } else {
            grid::random_element(&mut rng, m, shift)
        };
        let c = grid::cocycle_phase(&g, &h, &psi)?;
        let expected = grid::cocycle_closed_form(m, &g, &h);
        let diff = grid::angle_difference(c.angle(), expected).abs();
        spread = spread.max(c.spread);
        angle = angle.max(diff);
        rows.push(vec![json!(i), number(c.angle()), number(expected), number(diff), number(c.spread)]);
    }
    r.numeric("ratio_spread", spread, grid::SPREAD_TOLERANCE);
    r.numeric("phase_vs_closed_form", angle, COCYCLE_TOLERANCE);
    r.result(
        "pairs",
        rows.iter()
            .map(|row| json!({"index": row[0], "measured": row[1], "closed_form": row[2], "difference": row[3], "spread": row[4]}))
            .collect::<Vec<_>>(),
    );
    r.table(&["index", "measured", "closed_form", "difference", "spread"], rows);
    Ok(r)
}
