use std::time::Instant;

use courant::{check_courant_linfty, check_courant_rep, check_id_complex_rep, CourantConfig, Mutation};
use lie2::ce::{ce_differential, trivial_action};
use lie2::document::Document;
use lie2::linfty::{check_linfty_with, semidirect};
use lie2::quadratic::{check_nonexactness, double, double_algebra, nu_tilde, omni_lie, omni_linfty, string_lie2};
use lie2::rep::{check_rep_with, sample_rep, string_datum};
use lie2::{catalog, check_lie_algebra, AlgebraError, Check, Exec, LieAlgebra, RepUpToHomotopy, Report};

use crate::group;
use crate::{ConstructArgs, Construction, CourantArgs, CourantSuite, Failure, NonexactArgs, Output, Suite, VerifyArgs};

impl From<AlgebraError> for Failure {
    fn from(e: AlgebraError) -> Self {
        match e {
            AlgebraError::Parse(_)
            | AlgebraError::Dimension { .. }
            | AlgebraError::UnknownAlgebra(_)
            | AlgebraError::InvalidArgument(_) => Failure::Usage(e.to_string()),
            _ => Failure::Domain(e.to_string()),
        }
    }
}

pub fn exec(out: &Output) -> Exec {
    Exec { parallel: out.parallel }
}

/// What a `verify` run operates on.
pub struct Input {
    pub name: String,
    pub algebra: LieAlgebra,
    pub rep: Option<RepUpToHomotopy>,
    pub doc: Option<Document>,
}

pub fn load(alg: Option<&str>, file: Option<&std::path::Path>) -> Result<Input, Failure> {
    match (alg, file) {
        (Some(name), None) => Ok(Input {
            name: name.to_string(),
            algebra: catalog::by_name(name)?,
            rep: None,
            doc: None,
        }),
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
            let doc = Document::from_json(&text)
                .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            let algebra = doc.lie_algebra()?;
            let rep = doc.rep()?;
            let name = doc.name.clone().unwrap_or_else(|| path.display().to_string());
            Ok(Input {
                name,
                algebra,
                rep,
                doc: Some(doc),
            })
        }
        _ => Err(Failure::Usage("give exactly one of --alg or --file".into())),
    }
}

pub fn verify(a: &VerifyArgs) -> Result<Report, Failure> {
    let start = Instant::now();
    let input = load(a.alg.as_deref(), a.file.as_deref())?;
    let exec = exec(&a.out);
    let mut report = Report::new(format!("verify:{}", suite_name(a.suite)), &input.name);
    let wants = |s: Suite| a.suite == s || a.suite == Suite::All;

    if wants(Suite::Jacobi) {
        report.absorb("jacobi/", check_lie_algebra(&input.algebra, &input.name));
    }
    if wants(Suite::Rep) {
        match &input.rep {
            Some(r) => report.absorb("rep/", check_rep_with(r, exec)),
            None if a.suite == Suite::Rep => return Err(Failure::Usage("the input carries no representation".into())),
            None => {}
        }
    }
    if wants(Suite::Linfty) {
        let l = match input.doc.as_ref().map(Document::linfty).transpose()?.flatten() {
            Some(l) => Some(l),
            None => match &input.rep {
                Some(r) => Some(semidirect(r)?),
                None => None,
            },
        };
        match l {
            Some(l) => report.absorb("linfty/", check_linfty_with(&l, exec)),
            None if a.suite == Suite::Linfty => {
                return Err(Failure::Usage("the input carries no L-infinity structure or representation".into()))
            }
            None => {}
        }
    }
    if matches!(a.suite, Suite::GroupRep | Suite::TwoGroup) {
        let rep = input.rep.clone().unwrap_or_else(|| string_datum(&input.algebra));
        let cfg = group::config(a.samples, a.seed, false, 1e-10, exec);
        let sub = group::suite_on(&input.name, &rep, a.suite == Suite::TwoGroup, &cfg)?;
        report.seed = Some(a.seed);
        report.absorb("", sub);
    }
    report.set_duration(start.elapsed());
    Ok(report)
}

fn suite_name(s: Suite) -> &'static str {
    match s {
        Suite::Jacobi => "jacobi",
        Suite::Rep => "rep",
        Suite::Linfty => "linfty",
        Suite::GroupRep => "group-rep",
        Suite::TwoGroup => "two-group",
        Suite::All => "all",
    }
}

pub fn construct(a: &ConstructArgs) -> Result<String, Failure> {
    let alg = || -> Result<(String, LieAlgebra), Failure> {
        let name = a
            .alg
            .as_deref()
            .ok_or_else(|| Failure::Usage("this construction needs --alg".into()))?;
        Ok((name.to_string(), catalog::by_name(name)?))
    };
    let doc = match a.name {
        Construction::Algebra => {
            let (name, g) = alg()?;
            Document::from_algebra(&g).with_name(name)
        }
        Construction::Double => {
            let (name, g) = alg()?;
            let q = double(&g);
            Document::from_algebra(&q.algebra)
                .with_pairing(&q.pairing)
                .with_name(format!("double({name})"))
        }
        Construction::String => {
            let (name, g) = alg()?;
            let q = double(&g);
            let l = string_lie2(&q)?;
            Document::from_algebra(&q.algebra)
                .with_pairing(&q.pairing)
                .with_linfty(&l)
                .with_name(format!("string({name})"))
        }
        Construction::StringDatum => {
            let (name, g) = alg()?;
            let r = string_datum(&g);
            Document::from_rep(&r)
                .with_linfty(&semidirect(&r)?)
                .with_name(format!("string-datum({name})"))
        }
        Construction::Omni => {
            let n = a.n.ok_or_else(|| Failure::Usage("omni needs --n".into()))?;
            if n == 0 || n > 3 {
                return Err(Failure::Usage("omni supports 1 <= n <= 3".into()));
            }
            Document::from_rep(&omni_lie(n))
                .with_linfty(&omni_linfty(n))
                .with_name(format!("omni({n})"))
        }
        Construction::Semidirect => {
            let (name, r) = match (&a.file, a.seed, &a.alg) {
                (Some(path), None, None) => {
                    let input = load(None, Some(path))?;
                    let r = input
                        .rep
                        .ok_or_else(|| Failure::Usage("the document carries no representation".into()))?;
                    (input.name, r)
                }
                (None, Some(seed), None) => (format!("random-rep(seed {seed})"), sample_rep(seed)?),
                (None, None, Some(_)) => {
                    let (name, g) = alg()?;
                    (format!("string-datum({name})"), string_datum(&g))
                }
                _ => return Err(Failure::Usage("semidirect needs exactly one of --file, --seed, --alg".into())),
            };
            Document::from_rep(&r)
                .with_linfty(&semidirect(&r)?)
                .with_name(format!("semidirect({name})"))
        }
    };
    Ok(doc.to_json())
}

/// The verdict is informational; the report passes when the certificate is
/// internally consistent and any primitive really has `dφ = ν̃`.
pub fn nonexact(a: &NonexactArgs) -> Result<Report, Failure> {
    let start = Instant::now();
    let g = catalog::by_name(&a.alg)?;
    let result = check_nonexactness(&g)?;
    let cert = &result.certificate;
    let mut report = Report::new("nonexact", &a.alg);

    let mut ranks = Check::exact("rank_certificate");
    let consistent = (cert.augmented_rank > cert.rank) == result.not_exact;
    ranks.record_raw(
        &[cert.rank, cert.augmented_rank],
        if consistent { 0.0 } else { 1.0 },
        if consistent { "0".into() } else { "rank data contradicts verdict".into() },
        !consistent,
    );
    report.push(ranks);

    if let Some(phi) = &cert.primitive {
        let k = double_algebra(&g);
        let residual = ce_differential(&k, &trivial_action(&k, 1), phi)?.sub(&nu_tilde(&g))?;
        let mut check = Check::exact("primitive_d_phi_eq_nu_tilde");
        check.record(&[], &residual.to_coords());
        report.push(check);
        let mut terms: Vec<String> = phi
            .entries()
            .map(|(t, v)| format!("phi{:?} = {}", t, lie2::scalar::format_scalar(&v[0])))
            .collect();
        terms.sort();
        report.notes.push(format!("primitive: {}", terms.join(", ")));
    }
    report.notes.push(format!(
        "verdict: nu_tilde is {} (unknowns {}, equations {}, rank D = {}, rank [D|nu] = {})",
        if result.not_exact { "NOT exact" } else { "exact" },
        cert.unknowns,
        cert.equations,
        cert.rank,
        cert.augmented_rank
    ));
    report.set_duration(start.elapsed());
    Ok(report)
}

pub fn courant(a: &CourantArgs) -> Result<Report, Failure> {
    let start = Instant::now();
    let mutation = Mutation::parse(&a.mutation)
        .ok_or_else(|| Failure::Usage(format!("unknown mutation {:?}", a.mutation)))?;
    let cfg = CourantConfig {
        n_vars: a.vars,
        degree: a.degree,
        trials: a.trials,
        seed: a.seed,
        mutation,
        exec: exec(&a.out),
    };
    let instance = format!("R^{} degree <= {} mutation {}", a.vars, a.degree, mutation.name());
    let mut report = Report::new("courant", instance);
    report.seed = Some(a.seed);
    let all = a.suite == CourantSuite::All;
    if all || a.suite == CourantSuite::Rep {
        report.absorb("rep/", check_courant_rep(&cfg)?);
    }
    if all || a.suite == CourantSuite::Linfty {
        report.absorb("linfty/", check_courant_linfty(&cfg)?);
    }
    if all || a.suite == CourantSuite::Id {
        report.absorb("id/", check_id_complex_rep(&cfg)?);
    }
    report.set_duration(start.elapsed());
    Ok(report)
}
