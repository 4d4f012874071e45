use std::time::Instant;

use group2::cocycle::random_polymatrix;
use group2::{
    check_group_3cocycle, check_group_rep, check_two_group, differentiate_3cocycle, exactness_transfer,
    integrate_nilpotent, symbolic_fbar_defect, two_group, Derivative, DiffMode, GroupError, GroupModel, GroupRep,
    SampleConfig,
};
use lie2::quadratic::nu_tilde_of;
use lie2::rep::string_datum;
use lie2::{catalog, AlgebraError, AlternatingMap, Check, Exec, Mode, RepUpToHomotopy, Report};

use crate::commands::exec;
use crate::{DiffKind, Failure, GroupCommon, Output, TwoGroupAction};

impl From<GroupError> for Failure {
    fn from(e: GroupError) -> Self {
        match e {
            GroupError::Algebra(a) => a.into(),
            GroupError::NotNilpotent
            | GroupError::Unsupported(_)
            | GroupError::ModeUnsupported(_)
            | GroupError::Dimension { .. } => Failure::Usage(e.to_string()),
            _ => Failure::Domain(e.to_string()),
        }
    }
}

pub fn config(samples: usize, seed: u64, float: bool, tol: f64, exec: Exec) -> SampleConfig {
    let cfg = SampleConfig {
        samples,
        seed,
        tolerance: tol,
        exec,
        ..SampleConfig::default()
    };
    if float {
        cfg.floating()
    } else {
        cfg
    }
}

/// Integrates `rep` and runs the group-rep suite, plus the 2-group suite if
/// asked.
pub fn suite_on(name: &str, rep: &RepUpToHomotopy, with_two_group: bool, cfg: &SampleConfig) -> Result<Report, Failure> {
    let integrated = integrate_nilpotent(name, rep)?;
    let mut report = Report::new("group", integrated.describe());
    adopt(&mut report, check_group_rep(&integrated, cfg), "group-rep/");
    if with_two_group {
        adopt(&mut report, check_two_group(&two_group(integrated), cfg), "two-group/");
    }
    Ok(report)
}

fn adopt(report: &mut Report, sub: Report, prefix: &str) {
    report.mode = sub.mode;
    report.tolerance = sub.tolerance;
    report.seed = sub.seed.or(report.seed);
    report.absorb(prefix, sub);
}

fn build(c: &GroupCommon) -> Result<(GroupRep, RepUpToHomotopy), Failure> {
    let g = catalog::by_name(&c.alg)?;
    let mut r = string_datum(&g);
    if c.strict {
        r.nu = AlternatingMap::zero(2, g.dim(), r.v0() * r.v1());
        let model = GroupModel::nilpotent(&c.alg, &g)?;
        Ok((GroupRep::strict(model, &r)?, r))
    } else {
        Ok((integrate_nilpotent(&c.alg, &r)?, r))
    }
}

fn cfg_of(c: &GroupCommon) -> SampleConfig {
    config(c.samples, c.seed, c.float, c.tol, exec(&c.out))
}

pub fn run(action: &TwoGroupAction) -> Result<(Report, Output), Failure> {
    let start = Instant::now();
    let (mut report, out) = match action {
        TwoGroupAction::Check(c) => {
            let (rep, _) = build(c)?;
            let cfg = cfg_of(c);
            let mut report = Report::new("twogroup check", rep.describe());
            adopt(&mut report, check_group_rep(&rep, &cfg), "group-rep/");
            adopt(&mut report, check_two_group(&two_group(rep), &cfg), "");
            (report, c.out)
        }
        TwoGroupAction::Integrate(c) => {
            let (rep, _) = build(c)?;
            let mut report = Report::new("twogroup integrate", rep.describe());
            if let Some(defect) = symbolic_fbar_defect(&rep) {
                let mut check = Check::exact("fbar_cocycle_symbolic");
                let worst = defect.entries().iter().find(|p| !p.is_zero());
                let text = worst.map_or_else(|| "0".to_string(), |p| p.to_string());
                let size = worst.map_or(0.0, |p| lie2::scalar::to_f64(&p.max_abs()));
                check.record_raw(&[], size, text, worst.is_some());
                report.push(check);
            }
            if let Some(fbar) = rep.fbar_polys() {
                for i in 0..fbar.rows() {
                    for j in 0..fbar.cols() {
                        if !fbar.get(i, j).is_zero() {
                            report.notes.push(format!("Fbar[{i}][{j}](x,y) = {}", fbar.get(i, j)));
                        }
                    }
                }
            }
            adopt(&mut report, check_group_rep(&rep, &cfg_of(c)), "group-rep/");
            (report, c.out)
        }
        TwoGroupAction::Cocycle(c) => {
            let (rep, _) = build(c)?;
            let mut report = Report::new("twogroup cocycle", rep.describe());
            adopt(&mut report, check_group_3cocycle(&rep, &cfg_of(c))?, "");
            (report, c.out)
        }
        TwoGroupAction::Differentiate {
            common: c,
            mode,
            step,
            fd_tol,
        } => {
            let (rep, r) = build(c)?;
            let expected = nu_tilde_of(&r);
            let mut report = Report::new("twogroup differentiate", rep.describe());
            let diff_mode = match mode {
                DiffKind::Jet => DiffMode::Jet,
                DiffKind::Fd => DiffMode::CentralDifference { step: *step },
            };
            match differentiate_3cocycle(&rep, diff_mode)? {
                Derivative::Exact(found) => {
                    let mut check = Check::exact("jet_equals_nu_tilde");
                    check.record(&[], &found.sub(&expected).map_err(AlgebraError::from)?.to_coords());
                    report.push(check);
                    let mut terms: Vec<String> = found
                        .entries()
                        .map(|(t, v)| format!("{t:?} -> {}", render(v)))
                        .collect();
                    terms.sort();
                    report.notes.push(format!("derivative: {}", terms.join(", ")));
                }
                Derivative::Floating(fd) => {
                    report.mode = Mode::Floating;
                    report.step = Some(*step);
                    report.tolerance = Some(*fd_tol);
                    let err = fd.max_error(&expected);
                    let mut check = Check::with_tolerance("fd_close_to_nu_tilde", false, *fd_tol);
                    check.record_raw(&[], err, format!("{err:e}"), err != 0.0);
                    report.push(check);
                }
            }
            (report, c.out)
        }
        TwoGroupAction::Transfer { common: c, degree, trials } => {
            let g = catalog::by_name(&c.alg)?;
            let strict = GroupCommon {
                strict: true,
                ..c.clone()
            };
            let (base, _) = build(&strict)?;
            let cfg = cfg_of(c);
            let mut report = Report::new("twogroup transfer", base.describe());
            report.seed = Some(c.seed);
            let mut check = Check::exact("f2_tilde_equals_d_beta");
            for t in 0..*trials {
                let seed = c.seed.wrapping_add(t as u64);
                let alpha = random_polymatrix(base.v1(), base.v0(), g.dim(), *degree, seed);
                let transfer = exactness_transfer(&base, &alpha, &SampleConfig { seed, ..cfg })?;
                for res in &transfer.report.checks {
                    check.record_raw(&[t], res.max_residual_f64, res.max_residual.clone(), !res.passed);
                }
            }
            report.push(check);
            (report, c.out)
        }
    };
    report.set_duration(start.elapsed());
    Ok((report, out))
}

fn render(v: &[lie2::Scalar]) -> String {
    let parts: Vec<String> = v.iter().map(lie2::scalar::format_scalar).collect();
    format!("({})", parts.join(", "))
}
