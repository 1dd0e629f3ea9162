mod report;
mod spec;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use freecommutant_core::commutator::{
    cancellation_sum_with_cap, commutator_polynomial, expansion_size, freeness_witness,
    freeness_witness_expected, prop41_closed_form, prop41_oracle, s_plus_commutator,
    x_plus_commutator, AdditivityReport, CommutatorKind, DistributionPair, CANCELLATION_MAX_ORDER,
    DEFAULT_MAX_ORDER,
};
use freecommutant_core::cumulant::{cumulant_of_polynomials, CumulantSequence};
use freecommutant_core::fid::{compound_poisson_from_rho, hankel_fid_check};
use freecommutant_core::fock::{
    composition_formula_cumulant, model_cumulant_parts, verify_adjointness, OperatorName,
};
use freecommutant_core::partitions::{enumerate, PartitionKind};
use freecommutant_core::poly::Polynomial;
use freecommutant_core::rational::{int, parse_rational, Rational};
use freecommutant_core::Error;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use report::{Report, Section};
use spec::DistributionSpec;

const MAX_ORDER_ENV: &str = "FREECOMMUTANT_MAX_ORDER";
/// Adjointness samples use tensors whose inner products need moments up to this order.
const ADJOINTNESS_MOMENTS: usize = 8;

#[derive(Parser)]
#[command(
    name = "freecommutant",
    version,
    about = "Exact checks of free cumulant identities for commutators with a semicircular element"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,

    /// Worker threads for the cumulant expansion.
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Perturbs one computed cumulant so that the checked identity fails.
    #[arg(long, global = true, hide = true)]
    inject_fault: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Args)]
struct PairArgs {
    /// Law of x, e.g. "free-poisson(1)" or "atomic(1/2:0, 1/2:1)".
    #[arg(long)]
    x: DistributionSpec,

    /// Variance of the semicircular s.
    #[arg(long, default_value = "1", value_parser = rational_arg)]
    s_var: Rational,

    /// Law of s, replacing the semicircle (for probing the hypothesis).
    #[arg(long, conflicts_with = "s_var")]
    s: Option<DistributionSpec>,
}

#[derive(Subcommand)]
enum Command {
    /// κ_n(s + i[s,x]) = κ_n(s) + κ_n(i[s,x]) for n up to the maximal order.
    VerifyAdditivity {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long)]
        max_order: Option<usize>,
    },
    /// κ_4(s, i[s,x], i[s,x], s), which is κ_2(s)²κ_2(x) for semicircular s.
    FreenessWitness {
        #[command(flatten)]
        pair: PairArgs,
    },
    /// Signed sums over sx/xs placements that vanish for semicircular s.
    Cancellation {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long)]
        max_order: Option<usize>,
    },
    /// Closed form for κ_n(x + i[x,s]) against brute-force expansion (standard s).
    VerifyProp41 {
        #[arg(long)]
        x: DistributionSpec,
        #[arg(long)]
        max_order: Option<usize>,
    },
    /// Operator model, composition formula and closed form agree; adjoint pairs hold.
    VerifyFock {
        /// Driving measure, as atomic(...) or rho-moments[m1, m2, ...].
        #[arg(long)]
        rho: DistributionSpec,
        #[arg(long)]
        max_order: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 50)]
        samples: usize,
    },
    /// Hankel positivity of [κ_{i+j+2}], a necessary condition for free infinite divisibility.
    FidCheck {
        /// Law of x; without --poly its own cumulants are checked.
        #[arg(long, required_unless_present = "rho")]
        x: Option<DistributionSpec>,
        /// Driving measure; x is the compound free Poisson law of ρ.
        #[arg(long, conflicts_with = "x")]
        rho: Option<DistributionSpec>,
        /// Check the law of this polynomial in s and x instead, e.g. "x + i[x,s]".
        #[arg(long)]
        poly: Option<Polynomial>,
        #[arg(long, default_value = "1", value_parser = rational_arg)]
        s_var: Rational,
        #[arg(long, default_value_t = 3)]
        size: usize,
    },
    /// Lists partitions of {1..n} of one kind.
    Partitions {
        #[arg(long)]
        n: usize,
        /// all, nc, interval, interval-min2 or nc-irr.
        #[arg(long, default_value = "nc")]
        kind: PartitionKind,
    },
    /// κ_1..κ_N of a polynomial in s and x.
    Cumulants {
        #[arg(long)]
        poly: Polynomial,
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long)]
        max_order: Option<usize>,
    },
}

fn rational_arg(text: &str) -> Result<Rational, String> {
    parse_rational(text)
        .ok_or_else(|| format!("expected a rational \"p\" or \"p/q\", found {text:?}"))
}

enum Failure {
    Usage(String),
    Library(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Library(e)
    }
}

impl From<spec::SpecError> for Failure {
    fn from(e: spec::SpecError) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<Report, Failure>;

fn order_cap() -> Result<usize, Failure> {
    match std::env::var(MAX_ORDER_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| {
            Failure::Usage(format!(
                "{MAX_ORDER_ENV} must be a positive integer, got {v:?}"
            ))
        }),
        Err(_) => Ok(DEFAULT_MAX_ORDER),
    }
}

fn resolve_order(requested: Option<usize>, default: usize) -> Result<usize, Failure> {
    let cap = order_cap()?;
    let order = requested.unwrap_or(default.min(cap));
    if order == 0 {
        return Err(Failure::Usage("--max-order must be at least 1".into()));
    }
    if order > cap {
        return Err(Failure::Usage(format!(
            "--max-order {order} exceeds the cap {cap}; set {MAX_ORDER_ENV} to raise it"
        )));
    }
    Ok(order)
}

fn estimate(polys: &[&Polynomial], order: usize) {
    let choices: u128 = polys
        .iter()
        .flat_map(|p| (1..=order).map(move |n| expansion_size(p, n)))
        .sum();
    let letters = polys.iter().map(|p| p.degree()).max().unwrap_or(0) * order;
    eprintln!("estimate: {choices} term choices up to order {order}, at most {letters} letters per cumulant");
}

fn rat(v: &Rational) -> Value {
    Value::String(v.to_string())
}

fn bump(v: &mut Rational, fault: bool) {
    if fault {
        *v += Rational::one();
    }
}

impl PairArgs {
    /// Cumulant sequences good enough for polynomials of `degree` at `order`.
    fn pair(&self, degree: usize, order: usize) -> Result<DistributionPair, Failure> {
        let needed = (degree * order).max(4);
        let s = match &self.s {
            Some(spec) => spec.cumulants(needed)?,
            None => CumulantSequence::semicircle(self.s_var.clone()),
        };
        Ok(DistributionPair::new(s, self.x.cumulants(needed)?))
    }

    fn describe(&self, report: &mut Report) {
        report.param("x", &self.x);
        match &self.s {
            Some(spec) => report.param("s", spec),
            None => report.param("s", format!("semicircle({})", self.s_var)),
        }
    }
}

fn verify_additivity(args: &PairArgs, max_order: Option<usize>, fault: bool) -> Outcome {
    let order = resolve_order(max_order, DEFAULT_MAX_ORDER)?;
    let sum = s_plus_commutator();
    let comm = commutator_polynomial(CommutatorKind::ISX);
    estimate(&[&sum, &comm], order);
    let pair = args.pair(2, order)?;
    let lhs = freecommutant_core::commutator::cumulant_sequence_of(&sum, &pair, order)?;
    let rhs = freecommutant_core::commutator::cumulant_sequence_of(&comm, &pair, order)?;

    let mut report = Report::new("verify-additivity");
    args.describe(&mut report);
    report.param("max_order", order);
    let mut section = Section::new(
        "κ_n(s + i[s,x]) against κ_n(s) + κ_n(i[s,x])",
        &["n", "lhs", "kappa_s", "kappa_commutator", "holds"],
    );
    for n in 1..=order {
        let mut l = lhs.get(n)?;
        bump(&mut l, fault && n == 1);
        let r = AdditivityReport::new(n, l, pair.s.get(n)?, rhs.get(n)?);
        section.push(vec![
            json!(n),
            rat(&r.lhs),
            rat(&r.rhs_s),
            rat(&r.rhs_c),
            json!(r.holds),
        ]);
        report.check(r.holds, || {
            format!(
                "n = {n}: κ_n(s + i[s,x]) = {} but κ_n(s) + κ_n(i[s,x]) = {}",
                r.lhs,
                &r.rhs_s + &r.rhs_c
            )
        });
    }
    report.sections.push(section);
    if !pair.s_is_semicircular() {
        report.note("s is not semicircular, so additivity is not expected to hold");
    }
    Ok(report)
}

fn witness(args: &PairArgs, fault: bool) -> Outcome {
    let pair = args.pair(2, 4)?;
    let mut value = freeness_witness(&pair)?;
    bump(&mut value, fault);
    let expected = freeness_witness_expected(&pair)?;
    let mut report = Report::new("freeness-witness");
    args.describe(&mut report);
    let mut section = Section::new(
        "κ_4(s, i[s,x], i[s,x], s)",
        &["witness", "expected", "holds"],
    );
    let holds = value == expected;
    section.push(vec![rat(&value), rat(&expected), json!(holds)]);
    report.sections.push(section);
    report.check(holds, || {
        format!("witness {value} differs from κ_2(s)²κ_2(x) = {expected}")
    });
    if !value.is_zero() {
        report.note("nonzero ⇒ s and i[s,x] are not free");
    }
    if !pair.s_is_semicircular() {
        report.note("s is not semicircular; the expected value assumes it is");
    }
    Ok(report)
}

fn cancellation(args: &PairArgs, max_order: Option<usize>, fault: bool) -> Outcome {
    let order = resolve_order(max_order, CANCELLATION_MAX_ORDER)?;
    if order < 2 {
        return Err(Failure::Usage(
            "cancellation needs --max-order at least 2".into(),
        ));
    }
    let terms: usize = (2..=order).map(|n| 3usize.pow(n as u32) - 1).sum();
    eprintln!(
        "estimate: {terms} word-product cumulants, at most {} letters each",
        2 * order
    );
    let pair = args.pair(2, order)?;
    let mut report = Report::new("cancellation");
    args.describe(&mut report);
    report.param("max_order", order);
    let mut section = Section::new(
        "signed sums over B and D ⊆ B",
        &["n", "k", "value", "holds"],
    );
    let mut first = true;
    for n in 2..=order {
        for k in 1..n {
            let mut value = cancellation_sum_with_cap(n, k, &pair, order)?.re;
            bump(&mut value, fault && first);
            first = false;
            let holds = value.is_zero();
            section.push(vec![json!(n), json!(k), rat(&value), json!(holds)]);
            report.check(holds, || format!("n = {n}, k = {k}: sum is {value}, not 0"));
        }
    }
    report.sections.push(section);
    Ok(report)
}

fn verify_prop41(x: &DistributionSpec, max_order: Option<usize>, fault: bool) -> Outcome {
    let order = resolve_order(max_order, DEFAULT_MAX_ORDER)?;
    let poly = x_plus_commutator();
    estimate(&[&poly], order);
    let kx = x.cumulants(order)?;
    let mut report = Report::new("verify-prop41");
    report.param("x", x);
    report.param("s", "semicircle(1)");
    report.param("max_order", order);
    let mut section = Section::new(
        "κ_n(x + i[x,s]): closed form against expansion",
        &["n", "closed_form", "oracle", "holds"],
    );
    for n in 1..=order {
        let mut closed = prop41_closed_form(n, &kx)?;
        bump(&mut closed, fault && n == 1);
        let oracle = prop41_oracle(n, &kx, &int(1))?;
        let holds = closed == oracle;
        section.push(vec![json!(n), rat(&closed), rat(&oracle), json!(holds)]);
        report.check(holds, || {
            format!("n = {n}: closed form {closed}, expansion {oracle}")
        });
    }
    report.sections.push(section);
    Ok(report)
}

fn verify_fock(
    rho_spec: &DistributionSpec,
    max_order: Option<usize>,
    seed: u64,
    samples: usize,
    fault: bool,
) -> Outcome {
    let order = resolve_order(max_order, DEFAULT_MAX_ORDER)?;
    let rho = rho_spec.rho(order.max(ADJOINTNESS_MOMENTS))?;
    let kx = CumulantSequence::new(rho.values()[1..].to_vec());
    let mut report = Report::new("verify-fock");
    report.param("rho", rho_spec);
    report.param("max_order", order);
    report.param("seed", seed);

    let mut chain = Section::new(
        "vacuum moments against the composition formula and the closed form",
        &[
            "n",
            "hat",
            "tilde",
            "model",
            "composition",
            "closed_form",
            "holds",
        ],
    );
    for n in 1..=order {
        let parts = model_cumulant_parts(n, &rho)?;
        let mut model = parts.total();
        bump(&mut model, fault && n == 1);
        let composition = composition_formula_cumulant(n, &rho)?;
        let closed = prop41_closed_form(n, &kx)?;
        let holds = model == composition && composition == closed;
        chain.push(vec![
            json!(n),
            rat(&parts.hat),
            rat(&parts.tilde),
            rat(&model),
            rat(&composition),
            rat(&closed),
            json!(holds),
        ]);
        report.check(holds, || {
            format!("n = {n}: model {model}, composition {composition}, closed form {closed}")
        });
    }
    report.sections.push(chain);

    if rho.max_order() >= ADJOINTNESS_MOMENTS {
        report.param("samples", samples);
        let mut adj = Section::new(
            "adjoint pairs on seeded samples",
            &["operator", "adjoint", "holds"],
        );
        for op in OperatorName::ALL {
            let holds = verify_adjointness(&[(op, op.adjoint())], samples, &rho, seed)?;
            adj.push(vec![
                json!(op.as_str()),
                json!(op.adjoint().as_str()),
                json!(holds),
            ]);
            report.check(holds, || {
                format!("{op} and {} are not adjoint", op.adjoint())
            });
        }
        report.sections.push(adj);
    } else {
        report.note(format!(
            "adjointness samples skipped: they need moments of ρ up to order {ADJOINTNESS_MOMENTS}"
        ));
    }
    if !rho.is_genuine_measure()? {
        report.note("the moments of ρ fail the Hankel positivity test; identities are checked algebraically");
    }
    Ok(report)
}

struct FidArgs<'a> {
    x: Option<&'a DistributionSpec>,
    rho: Option<&'a DistributionSpec>,
    poly: Option<&'a Polynomial>,
    s_var: &'a Rational,
    size: usize,
}

fn fid_check(a: FidArgs<'_>, fault: bool) -> Outcome {
    if a.size == 0 {
        return Err(Failure::Usage("--size must be at least 1".into()));
    }
    let order = 2 * a.size;
    let mut report = Report::new("fid-check");
    let degree = a.poly.map(Polynomial::degree).unwrap_or(1);
    let kx = match (a.x, a.rho) {
        (Some(x), _) => {
            report.param("x", x);
            x.cumulants(degree * order)?
        }
        (None, Some(r)) => {
            report.param("rho", r);
            compound_poisson_from_rho(&r.rho(degree * order)?, degree * order)?
        }
        (None, None) => return Err(Failure::Usage("one of --x or --rho is required".into())),
    };
    let mut seq = match a.poly {
        Some(p) => {
            report.param("poly", p);
            report.param("s", format!("semicircle({})", a.s_var));
            let cap = order_cap()?;
            if order > cap {
                return Err(Failure::Usage(format!(
                    "--size {} needs order {order}, above the cap {cap}; set {MAX_ORDER_ENV} to raise it",
                    a.size
                )));
            }
            estimate(&[p], order);
            let pair = DistributionPair::new(CumulantSequence::semicircle(a.s_var.clone()), kx);
            let values = (1..=order)
                .map(|n| {
                    let k = cumulant_of_polynomials(&vec![p.clone(); n], &pair.s, &pair.x)?;
                    if k.is_real() {
                        Ok(k.re)
                    } else {
                        Err(Error::NotReal(format!("κ_{n}({p}) = {k}")))
                    }
                })
                .collect::<Result<Vec<_>, Error>>()?;
            CumulantSequence::new(values)
        }
        None => kx,
    };
    if fault {
        let values: Vec<Rational> = (1..=order)
            .map(|k| {
                if k == 2 {
                    Ok(-Rational::one())
                } else {
                    seq.get(k)
                }
            })
            .collect::<Result<_, Error>>()?;
        seq = CumulantSequence::new(values);
    }
    report.param("size", a.size);
    let verdict = hankel_fid_check(&seq, a.size)?;
    let mut section = Section::new(
        "Hankel matrix [κ_{i+j+2}]",
        &["size", "order", "psd", "failure_index", "pivots"],
    );
    section.push(vec![
        json!(a.size),
        json!(verdict.order),
        json!(verdict.psd),
        json!(verdict.failure_index),
        Value::Array(verdict.pivots.iter().map(rat).collect()),
    ]);
    report.sections.push(section);
    let mut kappas = Section::new("cumulants", &["n", "kappa"]);
    for n in 1..=order {
        kappas.push(vec![json!(n), rat(&seq.get(n)?)]);
    }
    report.sections.push(kappas);
    report.check(verdict.psd, || {
        format!(
            "Hankel matrix of order {} is not positive semidefinite (row {})",
            verdict.order,
            verdict.failure_index.unwrap_or_default()
        )
    });
    if verdict.psd {
        report.note(format!(
            "consistent with free infinite divisibility at order {}; this is a necessary condition only",
            verdict.order
        ));
    } else {
        report.note("not freely infinitely divisible");
    }
    Ok(report)
}

fn partitions(n: usize, kind: PartitionKind) -> Outcome {
    let list = enumerate(n, kind)?;
    let mut report = Report::new("partitions");
    report.param("n", n);
    report.param("kind", format!("{kind:?}"));
    report.param("count", list.len());
    let mut section = Section::new("partitions", &["index", "partition", "blocks"]);
    for (i, p) in list.iter().enumerate() {
        section.push(vec![json!(i + 1), json!(p.to_string()), json!(p.blocks())]);
    }
    report.sections.push(section);
    Ok(report)
}

fn cumulants(poly: &Polynomial, args: &PairArgs, max_order: Option<usize>) -> Outcome {
    let order = resolve_order(max_order, DEFAULT_MAX_ORDER)?;
    estimate(&[poly], order);
    let pair = args.pair(poly.degree(), order)?;
    let mut report = Report::new("cumulants");
    report.param("poly", poly);
    args.describe(&mut report);
    report.param("max_order", order);
    let mut section = Section::new("free cumulants", &["n", "kappa"]);
    for n in 1..=order {
        let k = cumulant_of_polynomials(&vec![poly.clone(); n], &pair.s, &pair.x)?;
        section.push(vec![json!(n), json!(k.to_string())]);
    }
    report.sections.push(section);
    Ok(report)
}

fn run(cli: &Cli) -> Outcome {
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            return Err(Failure::Usage("--jobs must be at least 1".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .map_err(|e| Failure::Usage(e.to_string()))?;
    }
    let fault = cli.inject_fault;
    match &cli.command {
        Command::VerifyAdditivity { pair, max_order } => verify_additivity(pair, *max_order, fault),
        Command::FreenessWitness { pair } => witness(pair, fault),
        Command::Cancellation { pair, max_order } => cancellation(pair, *max_order, fault),
        Command::VerifyProp41 { x, max_order } => verify_prop41(x, *max_order, fault),
        Command::VerifyFock {
            rho,
            max_order,
            seed,
            samples,
        } => verify_fock(rho, *max_order, *seed, *samples, fault),
        Command::FidCheck {
            x,
            rho,
            poly,
            s_var,
            size,
        } => fid_check(
            FidArgs {
                x: x.as_ref(),
                rho: rho.as_ref(),
                poly: poly.as_ref(),
                s_var,
                size: *size,
            },
            fault,
        ),
        Command::Partitions { n, kind } => partitions(*n, *kind),
        Command::Cumulants {
            poly,
            pair,
            max_order,
        } => cumulants(poly, pair, *max_order),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            let text = match cli.format {
                Format::Json => report.to_json(),
                Format::Table => report.to_table(),
            };
            print!("{text}");
            if report.holds {
                ExitCode::SUCCESS
            } else {
                if let Some(c) = &report.counterexample {
                    eprintln!("first counterexample: {c}");
                }
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Library(Error::InternalConsistency(msg))) => {
            eprintln!("internal consistency failure: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Library(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
