use gerstenhaber::bracket::{Engine, SmallCochain};
use gerstenhaber::diagonal::{chain_map_identity, transport_identity};
use gerstenhaber::homotopy::{contracting_identity, d_squared_zero, phi_identity, Phi};
use gerstenhaber::hopf::{generators, hopf_bracket, hopf_cohomology_dims};
use gerstenhaber::oracle::{bar_hh_dim, compare_brackets, ComparisonMaps, PiIota};
use gerstenhaber::resolution::Resolution;
use gerstenhaber::{AlgElem, Algebra, AlgebraKind, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::report::{Entry, Report};
use crate::Task;

const KINDS: [AlgebraKind; 2] = [AlgebraKind::TruncPoly, AlgebraKind::Taft];

fn name(alg: &Algebra) -> String {
    if alg.is_taft() {
        format!("T_{}", alg.p())
    } else {
        format!("k[x]/(x^{})", alg.p())
    }
}

fn sign(e: usize) -> i64 {
    if e.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

pub fn run(report: &mut Report, task: Task, p: usize, max_degree: usize, seed: u64) -> Result<()> {
    match task {
        Task::Verify => verify(report, p, max_degree, seed),
        Task::BracketA => bracket_table(report, &Algebra::truncated(p)?, max_degree),
        Task::BracketTaft => bracket_table(report, &Algebra::taft(p)?, max_degree),
        Task::Hopf => hopf(report, p, max_degree),
        Task::OracleCompare => oracle_compare(report, p, max_degree),
        Task::Dims => dims(report, p, max_degree),
    }
}

fn random_cochain(e: &Engine, deg: usize, rng: &mut ChaCha8Rng) -> Result<SmallCochain> {
    let mut v = AlgElem::zero(e.alg());
    for m in e.admissible(deg) {
        v.add_assign(&AlgElem::term(e.alg(), m, e.alg().scalar(rng.gen_range(-3..=3))));
    }
    e.cochain(deg, v)
}

fn random_cocycle(e: &Engine, deg: usize, rng: &mut ChaCha8Rng) -> Result<SmallCochain> {
    let mut v = AlgElem::zero(e.alg());
    for f in cocycle_basis(e, deg)? {
        v.add_assign(&f.value.scale(&e.alg().scalar(rng.gen_range(-3..=3))));
    }
    e.cochain(deg, v)
}

fn cocycle_basis(e: &Engine, deg: usize) -> Result<Vec<SmallCochain>> {
    let mut out = Vec::new();
    for m in e.admissible(deg) {
        let f = e.basis_cochain(deg, m)?;
        if e.is_cocycle(&f) {
            out.push(f);
        }
    }
    Ok(out)
}

fn verify(report: &mut Report, p: usize, max: usize, seed: u64) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for kind in KINDS {
        let alg = Algebra::new(kind, p)?;
        let an = name(&alg);
        let res = Resolution::new(&alg)?;
        let phi = Phi::build(&res, max)?;
        for n in -1..=max as i64 {
            report.check("hd + dh = id", &an, Some(n), contracting_identity(&res, n)?);
        }
        for n in 0..=max {
            report.check("d d = 0", &an, Some(n as i64), d_squared_zero(&res, n)?);
            report.check("diagonal is a chain map", &an, Some(n as i64), chain_map_identity(&res, n)?);
            report.check("d phi + phi d = F", &an, Some(n as i64), phi_identity(&phi, n)?);
            report.check("transport of F", &an, Some(n as i64), transport_identity(&res, n, true)?);
        }

        let e = Engine::new(&alg, max)?;
        for m in 0..=max.min(3) {
            for n in 0..=max.min(3) {
                if m + n == 0 || m + n > max + 1 {
                    continue;
                }
                let f = random_cochain(&e, m, &mut rng)?;
                let g = random_cochain(&e, n, &mut rng)?;
                let fg = e.bracket(&f, &g)?.value;
                let gf = e.bracket(&g, &f)?.value;
                let ok = fg.add(&gf.scale(&alg.scalar(sign((m + 1) * (n + 1))))).is_zero();
                report.check(&format!("graded antisymmetry ({m},{n})"), &an, None, ok);
            }
        }
        for (x, y, z) in [(1, 1, 1), (1, 2, 1), (2, 1, 1), (1, 1, 2)] {
            if x + y + z > max + 1 {
                continue;
            }
            let f = random_cocycle(&e, x, &mut rng)?;
            let g = random_cocycle(&e, y, &mut rng)?;
            let h = random_cocycle(&e, z, &mut rng)?;
            let ok = e.derivation_identity(&f, &g, &h)?;
            report.check(&format!("derivation identity ({x},{y},{z})"), &an, None, ok);
        }
    }
    Ok(())
}

fn bracket_table(report: &mut Report, alg: &Algebra, max: usize) -> Result<()> {
    let e = Engine::new(alg, (2 * max).saturating_sub(1).max(1))?;
    let an = name(alg);
    for m in 0..=max {
        for n in m..=max {
            if m + n == 0 {
                continue;
            }
            let (mut closed, mut antisym) = (true, true);
            for f in cocycle_basis(&e, m)? {
                for g in cocycle_basis(&e, n)? {
                    let b = e.bracket(&f, &g)?;
                    let back = e.bracket(&g, &f)?;
                    antisym &= b.value.add(&back.value.scale(&alg.scalar(sign((m + 1) * (n + 1))))).is_zero();
                    closed &= e.is_cocycle(&b);
                    let class = e.to_class(&b)?;
                    report.push(Entry::Bracket {
                        algebra: an.clone(),
                        f: e.label(m, f.value.iter().next().map(|(k, _)| *k).expect("basis cochain")),
                        g: e.label(n, g.value.iter().next().map(|(k, _)| *k).expect("basis cochain")),
                        degree: b.deg,
                        value: b.value,
                        class,
                    });
                }
            }
            report.check(&format!("brackets of degree ({m},{n}) cocycles are cocycles"), &an, None, closed);
            report.check(&format!("graded antisymmetry ({m},{n})"), &an, None, antisym);
        }
    }
    Ok(())
}

fn hopf(report: &mut Report, p: usize, max: usize) -> Result<()> {
    let t = Algebra::taft(p)?;
    let an = name(&t);
    report.push(Entry::Dims { name: format!("H({an},k)"), dims: hopf_cohomology_dims(p, max)? });
    let gens = generators(&t)?;
    for u in &gens {
        if u.deg() <= max {
            report.check("generator is a cocycle", &an, Some(u.deg() as i64), u.is_cocycle());
            report.check("generator is not a coboundary", &an, Some(u.deg() as i64), !u.is_coboundary());
        }
    }
    for f in &gens {
        for g in &gens {
            let total = f.deg() + g.deg();
            if total == 0 || total > max {
                continue;
            }
            let b = hopf_bracket(f, g)?;
            let (is_cocycle, class_zero) = (b.is_cocycle(), b.is_coboundary());
            report.push(Entry::HopfBracket { f: f.deg(), g: g.deg(), is_cocycle, class_zero, zero: b.is_zero() });
            report.check(&format!("[u{}, u{}] is a coboundary", f.deg(), g.deg()), &an, None, class_zero);
        }
    }
    Ok(())
}

fn oracle_compare(report: &mut Report, p: usize, max: usize) -> Result<()> {
    for kind in KINDS {
        let alg = Algebra::new(kind, p)?;
        let an = name(&alg);
        let top = (2 * max).saturating_sub(1).max(1);
        let e = Engine::new(&alg, top)?;
        let maps = ComparisonMaps::build(e.resolution(), top)?;
        for n in 0..=top {
            let level = maps.pi_iota(&e, n)?;
            let label = match level {
                PiIota::Identity => "pi iota = id",
                PiIota::OnCohomology => "pi iota = id on cohomology",
                PiIota::Neither => "pi iota = id on cohomology (violated)",
            };
            report.check(label, &an, Some(n as i64), level != PiIota::Neither);
        }
        let mut agree = true;
        for m in 1..=max {
            for n in m..=max {
                for f in cocycle_basis(&e, m)? {
                    for g in cocycle_basis(&e, n)? {
                        let a = compare_brackets(&e, &maps, &f, &g)?;
                        agree &= a.holds();
                        report.push(Entry::Compare {
                            algebra: an.clone(),
                            f: e.label(m, f.value.iter().next().map(|(k, _)| *k).expect("basis cochain")),
                            g: e.label(n, g.value.iter().next().map(|(k, _)| *k).expect("basis cochain")),
                            small: a.small,
                            transported: a.transported,
                            bar_equal: a.bar_equal,
                        });
                    }
                }
            }
        }
        report.check("phi bracket agrees with the bar bracket", &an, None, agree);
    }
    Ok(())
}

fn dims(report: &mut Report, p: usize, max: usize) -> Result<()> {
    for kind in KINDS {
        let alg = Algebra::new(kind, p)?;
        let an = name(&alg);
        let e = Engine::new(&alg, 1)?;
        let small: Vec<usize> = (0..=max).map(|n| e.hh_dim(n)).collect();
        if p == 3 {
            let cap = if alg.is_taft() { 2 } else { 3 };
            let bar: Vec<usize> = (0..=max.min(cap)).map(|n| bar_hh_dim(&alg, n)).collect();
            report.check("small and bar resolutions give equal dimensions", &an, None, small[..bar.len()] == bar[..]);
            report.push(Entry::Dims { name: format!("HH({an}) via bar resolution"), dims: bar });
        }
        report.push(Entry::Dims { name: format!("HH({an})"), dims: small });
    }
    let t = format!("H(T_{p},k)");
    report.push(Entry::Dims { name: t, dims: hopf_cohomology_dims(p, max)? });
    Ok(())
}
