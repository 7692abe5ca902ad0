use std::fmt::Write as _;
use std::sync::Arc;

use serde::Serialize;
use vacuum_core::criterion::{dual_coxeter_number, is_vacuum_simple, Level};
use vacuum_core::denom::{kw_coefficient, KPi};
use vacuum_core::jantzen::find_nonzero_a;
use vacuum_core::rootsys::{custom_simple_roots, distinguished_simple_roots, table1_simple_roots};
use vacuum_core::verify::{self, grid, Case, Status as CheckStatus, SweepConfig};
use vacuum_core::{
    Error, Family, LevelSign, Orientation, Rational, RootSystem, Scalar, SimpleRootSet,
    Superalgebra, Weight,
};

use crate::{BaseArgs, BaseChoice, GridArgs, Query, Status};

type Outcome = vacuum_core::Result<(String, Status)>;

fn render<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}

fn is_d_n2_n(alg: Superalgebra) -> bool {
    alg.family() == Family::D
        && alg.orientation() == Orientation::EpsDominant
        && alg.eps_count() == alg.del_count() + 2
}

/// The base named by the flags, or one matched to the sign of `k + h^∨`.
fn choose_base(
    alg: Superalgebra,
    k: Option<&Rational>,
    args: &BaseArgs,
) -> vacuum_core::Result<(SimpleRootSet, String)> {
    if let Some(list) = &args.simple_roots {
        let (m, n) = (alg.eps_count(), alg.del_count());
        let roots = list
            .split(',')
            .map(|t| Weight::parse(t, m, n))
            .collect::<vacuum_core::Result<Vec<_>>>()?;
        let pi = custom_simple_roots(Arc::new(RootSystem::new(alg)), roots)?;
        return Ok((pi, "custom".into()));
    }
    let sign = match args.base {
        Some(BaseChoice::Distinguished) => None,
        Some(BaseChoice::Plus) => Some(LevelSign::Plus),
        Some(BaseChoice::Minus) => Some(LevelSign::Minus),
        Some(BaseChoice::Special) => Some(LevelSign::PlusSpecial),
        None if alg.del_count() < 2 => None,
        None => {
            let shift = match k {
                Some(k) => k + dual_coxeter_number::<Rational>(alg)?,
                None => Rational::from_integer(1),
            };
            let zero = Rational::from_integer(0);
            if shift < zero {
                Some(LevelSign::Minus)
            } else if is_d_n2_n(alg) && shift > zero && shift.recip().is_integral() {
                Some(LevelSign::PlusSpecial)
            } else {
                Some(LevelSign::Plus)
            }
        }
    };
    match sign {
        Some(sign) => Ok((table1_simple_roots(alg, sign)?, sign.to_string())),
        None => Ok((distinguished_simple_roots(alg)?, "distinguished".into())),
    }
}

fn simple_roots_text(pi: &SimpleRootSet) -> String {
    let parts: Vec<String> = pi.weights().map(|w| w.to_string()).collect();
    parts.join(", ")
}

#[derive(Serialize)]
struct RootRatio {
    root: String,
    ratio: String,
}

#[derive(Serialize)]
struct CheckReport {
    algebra: String,
    level: String,
    simple: bool,
    witness: Option<RootRatio>,
    critical: bool,
}

pub(crate) fn check(query: &Query, json: bool) -> Outcome {
    let decision = is_vacuum_simple(query.algebra, &query.level)?;
    let report = CheckReport {
        algebra: query.algebra.to_string(),
        level: query.level.to_string(),
        simple: decision.simple,
        witness: decision.witness().map(|(root, ratio)| RootRatio {
            root: root.to_string(),
            ratio: ratio.to_string(),
        }),
        critical: decision.is_critical(),
    };
    let status = if report.simple {
        Status::Ok
    } else {
        Status::NotSimple
    };
    if json {
        return Ok((render(&report), status));
    }
    let mut out = format!(
        "{} at k = {}: {}\n",
        report.algebra,
        report.level,
        if report.simple {
            "simple"
        } else {
            "not simple"
        }
    );
    match (&report.witness, report.critical) {
        (Some(w), true) => {
            writeln!(out, "  critical level; even root {} has ratio 0", w.root).unwrap()
        }
        (Some(w), false) => writeln!(
            out,
            "  even root {} has (k+h^v)/(a,a) = {}",
            w.root, w.ratio
        )
        .unwrap(),
        (None, _) => writeln!(out, "  reason: {:?}", decision.reason).unwrap(),
    }
    Ok((out, status))
}

#[derive(Serialize)]
struct WitnessFound {
    m: u64,
    xi: String,
    a: i64,
}

#[derive(Serialize)]
struct WitnessReport {
    algebra: String,
    level: String,
    base: String,
    lmax: u64,
    mmax: u64,
    witness: Option<WitnessFound>,
    examined: usize,
    skipped: usize,
}

pub(crate) fn witness(query: &Query, base: &BaseArgs, lmax: u64, mmax: u64, json: bool) -> Outcome {
    let Level::Rational(k) = &query.level else {
        return Err(Error::Parameters(
            "witness search needs a rational level".into(),
        ));
    };
    let (pi, label) = choose_base(query.algebra, Some(k), base)?;
    let kpi = KPi::new(Arc::new(pi));
    let search = find_nonzero_a(&kpi, k, lmax, mmax)?;
    let report = WitnessReport {
        algebra: query.algebra.to_string(),
        level: query.level.to_string(),
        base: label,
        lmax,
        mmax,
        witness: search.witness.map(|w| WitnessFound {
            m: w.m,
            xi: w.xi.to_string(),
            a: w.a,
        }),
        examined: search.examined,
        skipped: search.skipped.len(),
    };
    let status = if report.witness.is_some() {
        Status::NotSimple
    } else {
        Status::Inconclusive
    };
    if json {
        return Ok((render(&report), status));
    }
    let mut out = format!(
        "{} at k = {} (base {}): {} pairs of C(k Lambda0) examined, {} skipped over budget\n",
        report.algebra, report.level, report.base, report.examined, report.skipped
    );
    match &report.witness {
        Some(w) => writeln!(out, "  a_(m,xi) = {} for m = {}, xi = {}", w.a, w.m, w.xi).unwrap(),
        None => writeln!(
            out,
            "  no witness within cutoffs l <= {lmax}, m <= {mmax} (inconclusive)"
        )
        .unwrap(),
    }
    Ok((out, status))
}

#[derive(Serialize)]
struct KpiReport {
    algebra: String,
    base: String,
    simple_roots: String,
    eta: String,
    coords: Option<Vec<String>>,
    value: i64,
    note: String,
}

pub(crate) fn kpi(alg: Superalgebra, eta_text: &str, base: &BaseArgs, json: bool) -> Outcome {
    let (pi, label) = choose_base(alg, None, base)?;
    let eta = Weight::parse(eta_text, alg.eps_count(), alg.del_count())?;
    let mut report = KpiReport {
        algebra: alg.to_string(),
        base: label,
        simple_roots: simple_roots_text(&pi),
        eta: eta.to_string(),
        coords: None,
        value: 0,
        note: String::new(),
    };
    let mut status = Status::Ok;
    match pi.pi_coordinates(&eta) {
        Err(Error::NotInLattice(_)) => report.note = "not in the span of the simple roots".into(),
        Err(e) => return Err(e),
        Ok(coords) => {
            report.coords = Some(coords.iter().map(|c| c.to_string()).collect());
            match pi.lattice_coordinates(&eta) {
                None => report.note = "not in the root lattice".into(),
                Some(c) if c.iter().any(|&x| x < 0) => report.note = "outside Q+".into(),
                Some(c) => {
                    let pi = Arc::new(pi);
                    match KPi::new(pi.clone()).value_at(&c) {
                        Ok(v) => report.value = v,
                        Err(Error::ExpansionBudget { .. }) => match kw_coefficient(&pi, &c) {
                            Ok(v) => {
                                report.value = v;
                                report.note = "from the W# expansion".into();
                            }
                            Err(e) => {
                                report.note = format!("not evaluated: {e}");
                                status = Status::Inconclusive;
                            }
                        },
                        Err(e) => return Err(e),
                    }
                }
            }
        }
    }
    if json {
        return Ok((render(&report), status));
    }
    let mut out = format!(
        "{} base {}: {}\n",
        report.algebra, report.base, report.simple_roots
    );
    let coords = report
        .coords
        .as_ref()
        .map_or("-".to_string(), |c| format!("({})", c.join(", ")));
    write!(
        out,
        "k_Pi({}) = {}  [Pi-coordinates {}]",
        report.eta, report.value, coords
    )
    .unwrap();
    if !report.note.is_empty() {
        write!(out, "  {}", report.note).unwrap();
    }
    out.push('\n');
    Ok((out, status))
}

#[derive(Serialize)]
struct CheckLine {
    claim: String,
    status: &'static str,
    detail: String,
}

#[derive(Serialize)]
struct CaseLines {
    case_id: String,
    checks: Vec<CheckLine>,
}

#[derive(Serialize)]
struct SweepReport {
    cases: Vec<CaseLines>,
    pass: usize,
    fail: usize,
    skip: usize,
}

fn status_name(s: CheckStatus) -> &'static str {
    match s {
        CheckStatus::Pass => "pass",
        CheckStatus::Fail => "fail",
        CheckStatus::Skip => "skip",
    }
}

pub(crate) fn verify(grid_args: &GridArgs, height: u64, inject_fault: bool, json: bool) -> Outcome {
    let config = SweepConfig {
        max_n: grid_args.max_n,
        family: grid_args.family.map(Family::from),
        kw_height: height,
        equation_height: height,
        inject_fault,
        ..SweepConfig::default()
    };
    let reports = verify::sweep::<Rational>(&config);
    let count = |s| reports.iter().map(|r| r.count(s)).sum::<usize>();
    let summary = SweepReport {
        cases: reports
            .iter()
            .map(|r| CaseLines {
                case_id: r.case_id.clone(),
                checks: r
                    .checked
                    .iter()
                    .map(|c| CheckLine {
                        claim: c.claim.clone(),
                        status: status_name(c.status),
                        detail: c.detail.clone(),
                    })
                    .collect(),
            })
            .collect(),
        pass: count(CheckStatus::Pass),
        fail: count(CheckStatus::Fail),
        skip: count(CheckStatus::Skip),
    };
    let status = if summary.fail > 0 {
        Status::VerifyFailed
    } else {
        Status::Ok
    };
    if json {
        return Ok((render(&summary), status));
    }
    let mut out = String::new();
    for r in &reports {
        out.push_str(&r.to_string());
    }
    writeln!(
        out,
        "{} cases: {} pass, {} fail, {} skip",
        reports.len(),
        summary.pass,
        summary.fail,
        summary.skip
    )
    .unwrap();
    Ok((out, status))
}

#[derive(Serialize)]
struct TableRow {
    case_id: String,
    simple_roots: Vec<String>,
    theta: String,
    theta_norm: String,
    rho_theta: String,
    dual_coxeter: String,
    half_theta_is_root: bool,
    a_pi: Vec<String>,
    isotropic_subset: Option<Vec<String>>,
}

fn table_row(case: Case) -> vacuum_core::Result<TableRow> {
    let pi: SimpleRootSet = table1_simple_roots(case.alg, case.sign)?;
    let theta = pi.theta();
    let strings = |ws: &[Weight]| ws.iter().map(|w| w.to_string()).collect::<Vec<_>>();
    Ok(TableRow {
        case_id: case.id(),
        simple_roots: pi.weights().map(|w| w.to_string()).collect(),
        theta: theta.to_string(),
        theta_norm: pi.bilinear(theta, theta)?.to_string(),
        rho_theta: pi.bilinear(pi.rho(), theta)?.to_string(),
        dual_coxeter: pi.dual_coxeter().to_string(),
        half_theta_is_root: pi.system().is_root(&theta.scale(&Rational::new(1, 2))),
        a_pi: strings(&verify::a_pi(&pi)),
        isotropic_subset: pi.isotropic_subset().map(|s| strings(&s)),
    })
}

pub(crate) fn tables(grid_args: &GridArgs, json: bool) -> Outcome {
    let rows = grid(grid_args.max_n, grid_args.family.map(Family::from))
        .into_iter()
        .map(table_row)
        .collect::<vacuum_core::Result<Vec<_>>>()?;
    if json {
        return Ok((render(&rows), Status::Ok));
    }
    let mut out = String::new();
    for r in &rows {
        writeln!(out, "{}", r.case_id).unwrap();
        writeln!(out, "  Pi        {}", r.simple_roots.join(", ")).unwrap();
        writeln!(
            out,
            "  theta     {}   (theta,theta) = {}   (rho,theta) = {}   h^v = {}   theta/2 root: {}",
            r.theta, r.theta_norm, r.rho_theta, r.dual_coxeter, r.half_theta_is_root
        )
        .unwrap();
        writeln!(out, "  A_Pi      {{{}}}", r.a_pi.join(", ")).unwrap();
        match &r.isotropic_subset {
            Some(s) => writeln!(out, "  S         {{{}}}", s.join(", ")).unwrap(),
            None => writeln!(out, "  S         none in Pi").unwrap(),
        }
    }
    Ok((out, Status::Ok))
}
