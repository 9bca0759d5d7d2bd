//! One function per subcommand. Each returns a status and a payload; the
//! caller wraps them into a [`Report`](crate::report::Report).

use std::path::PathBuf;

use liepair::cochain::CECochain;
use liepair::exact::{int, MultiIndex};
use liepair::kapranov::{
    atiyah_class_vanishes, horse_check, hvf_coefficients, mc_residual, zebra_check, HvfCoefficients, ThetaTables,
};
use liepair::lie_pair::{alpha_map, atiyah_cocycle, torsion_beta};
use liepair::linfty::jacobi_check;
use liepair::sym_coalgebra::{shark_check, Coderivation};
use liepair::{Error, Execution, PbwContext};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::input::{canonical, parse_input, parse_monomial, InputError, Loaded};
use crate::report::{one_based, scalar, Labels, Status};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Validate,
    Pbw,
    PbwInv,
    Theta,
    Atiyah,
    Hvf,
    McCheck,
    LinftyCheck,
    Horse,
    Zebra,
    SharkDemo,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Validate => "validate",
            Command::Pbw => "pbw",
            Command::PbwInv => "pbw-inv",
            Command::Theta => "theta",
            Command::Atiyah => "atiyah",
            Command::Hvf => "hvf",
            Command::McCheck => "mc-check",
            Command::LinftyCheck => "linfty-check",
            Command::Horse => "horse",
            Command::Zebra => "zebra",
            Command::SharkDemo => "shark-demo",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Options {
    pub input: Option<PathBuf>,
    pub connection: Option<PathBuf>,
    pub weight: usize,
    pub arity: usize,
    pub monomial: Option<String>,
    pub samples: usize,
    pub seed: u64,
    pub exec: Execution,
}

pub type Outcome = Result<(Status, Value), InputError>;

pub fn run(cmd: Command, opts: &Options) -> Outcome {
    if cmd == Command::SharkDemo {
        return coderivation_demo(opts);
    }
    let path = opts.input.as_deref().ok_or_else(|| InputError::Usage(format!("{} needs --input", cmd.name())))?;
    let loaded = parse_input(path, opts.connection.as_deref())?;
    let ctx = PbwContext::new(loaded.pair.clone(), loaded.conn.clone()).with_execution(opts.exec);
    let labels = Labels { names: &loaded.labels };
    match cmd {
        Command::Validate => validate(&loaded, &labels),
        Command::Pbw => pbw(&ctx, &labels, opts, false),
        Command::PbwInv => pbw(&ctx, &labels, opts, true),
        Command::Theta => theta(&ctx, &labels, opts),
        Command::Atiyah => atiyah(&loaded, &labels),
        Command::Hvf => {
            let hvf = hvf_coefficients(&ctx, opts.weight);
            Ok((Status::Ok, json!({ "max_weight": opts.weight, "components": components(&hvf, &labels) })))
        }
        Command::McCheck => mc(&ctx, &labels, opts),
        Command::LinftyCheck => linfty(&ctx, &labels, opts),
        Command::Horse => intertwining(&ctx, &labels, opts),
        Command::Zebra => flat_splitting(&ctx, &labels, opts),
        Command::SharkDemo => unreachable!(),
    }
}

fn nonzero(x: &liepair::Scalar) -> bool {
    *x != int(0)
}

fn validate(l: &Loaded, labels: &Labels) -> Outcome {
    let (pair, q) = (&l.pair, l.pair.quotient_dim());
    let mut conn = Vec::new();
    for (i, rows) in l.conn.gamma().iter().enumerate() {
        for (j, row) in rows.iter().enumerate() {
            for (k, x) in row.iter().enumerate() {
                if nonzero(x) {
                    conn.push(json!({ "i": i + 1, "j": j + 1, "k": k + 1, "coeff": scalar(x) }));
                }
            }
        }
    }
    let torsion_free = !torsion_beta(pair, &l.conn).iter().flatten().flatten().any(nonzero);
    let complement_closed = !alpha_map(pair).iter().flatten().flatten().any(nonzero);
    let doc = serde_json::to_value(canonical(&l.doc)?).expect("document serializes");
    Ok((
        Status::Ok,
        json!({
            "dim": pair.dim(),
            "subalgebra_dim": pair.sub_dim(),
            "quotient_dim": q,
            "complement": labels.names[..q],
            "subalgebra": labels.names[q..],
            "connection": conn,
            "torsion_free_on_complement": torsion_free,
            "complement_is_subalgebra": complement_closed,
            "canonical": doc,
        }),
    ))
}

fn monomials(opts: &Options, q: usize) -> Result<Vec<MultiIndex>, InputError> {
    Ok(match &opts.monomial {
        Some(s) => vec![MultiIndex::new(parse_monomial(s, q)?)],
        None => MultiIndex::all_up_to_weight(opts.weight, q),
    })
}

fn pbw(ctx: &PbwContext, labels: &Labels, opts: &Options, inverse: bool) -> Outcome {
    let q = ctx.pair().quotient_dim();
    let monos = monomials(opts, q)?;
    if !inverse {
        ctx.precompute(monos.iter().map(MultiIndex::weight).max().unwrap_or(0));
    }
    let entries: Vec<Value> = monos
        .iter()
        .map(|m| {
            let image = if inverse {
                labels.combination(&ctx.pbw_inverse(&liepair::enveloping::QuotElt::monomial(m.clone(), int(1))))
            } else {
                labels.combination(&ctx.pbw_monomial(m))
            };
            json!({ "monomial": labels.monomial(m), "slots": one_based(m.slots()), "image": image })
        })
        .collect();
    Ok((Status::Ok, json!({ "max_weight": opts.weight, "entries": entries })))
}

fn theta(ctx: &PbwContext, labels: &Labels, opts: &Options) -> Outcome {
    let pair = ctx.pair();
    let q = pair.quotient_dim();
    let t = ThetaTables::build(pair, ctx.conn(), opts.weight, ctx.execution());
    let (mut r, mut h) = (Vec::new(), Vec::new());
    for w in 1..=opts.weight {
        for m in MultiIndex::all_of_weight(w, q) {
            for a in pair.sub_slots() {
                let v = t.r_slot(a, &m);
                if !v.is_zero() {
                    r.push(json!({ "arg": labels.name(a), "arg_slot": a + 1, "monomial": labels.monomial(&m),
                                   "slots": one_based(m.slots()), "value": labels.combination(&v) }));
                }
            }
            for c in 0..q {
                let v = t.h_slot(c, &m);
                if !v.is_zero() {
                    h.push(json!({ "arg": labels.name(c), "arg_slot": c + 1, "monomial": labels.monomial(&m),
                                   "slots": one_based(m.slots()), "value": labels.combination(&v) }));
                }
            }
        }
    }
    Ok((Status::Ok, json!({ "max_weight": opts.weight, "r": r, "h": h })))
}

fn atiyah(l: &Loaded, labels: &Labels) -> Outcome {
    let z = atiyah_cocycle(&l.pair, &l.conn);
    let d = atiyah_class_vanishes(&l.pair, &l.conn);
    let mut out = json!({ "vanishes": d.vanishes, "cocycle_zero": z.is_zero(), "cocycle": labels.cochain(&z) });
    if let Some(phi) = &d.potential {
        out["potential"] = labels.cochain(phi);
    }
    if let Some(w) = &d.obstruction {
        if let Some((e, m, j)) = &w.slot {
            out["witness_slot"] = json!({
                "form": e.slots().iter().map(|&s| labels.name(s)).collect::<Vec<_>>(),
                "form_slots": one_based(e.slots()),
                "monomial": labels.monomial(m),
                "monomial_slots": one_based(m.slots()),
                "out": labels.name(*j),
                "out_slot": j + 1,
            });
        }
        out["pairing"] = scalar(&w.pairing);
        out["rank"] = json!(w.rank);
        out["augmented_rank"] = json!(w.augmented_rank);
        out["functional"] = labels.cochain(&w.functional);
    }
    Ok((Status::Ok, out))
}

fn components(hvf: &HvfCoefficients, labels: &Labels) -> Value {
    Value::Array(
        hvf.iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| json!({ "weight": k, "terms": labels.cochain(c) }))
            .collect(),
    )
}

fn weighted(map: &std::collections::BTreeMap<usize, CECochain>, labels: &Labels) -> Value {
    Value::Array(
        map.iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| json!({ "weight": k, "terms": labels.cochain(c) }))
            .collect(),
    )
}

fn mc(ctx: &PbwContext, labels: &Labels, opts: &Options) -> Outcome {
    let hvf = hvf_coefficients(ctx, opts.weight);
    let r = mc_residual(ctx.pair(), &hvf);
    let status = if r.passed() { Status::Ok } else { Status::Failed };
    Ok((
        status,
        json!({ "max_weight": r.max_weight, "passed": r.passed(), "residual": weighted(&r.residual, labels) }),
    ))
}

fn linfty(ctx: &PbwContext, labels: &Labels, opts: &Options) -> Outcome {
    let truncation = opts.weight.max(opts.arity);
    let hvf = hvf_coefficients(ctx, truncation);
    let rep = jacobi_check(ctx.pair(), &hvf, opts.arity, ctx.execution())?;
    let checked: Vec<Value> = rep.checked.iter().map(|(n, c)| json!({ "arity": n, "tuples": c })).collect();
    let failures: Vec<Value> = rep
        .failures
        .iter()
        .map(|(n, args)| {
            let args: Vec<Value> = args
                .iter()
                .map(|(e, j)| {
                    json!({ "form": e.slots().iter().map(|&s| labels.name(s)).collect::<Vec<_>>(),
                            "out": labels.name(*j), "out_slot": j + 1 })
                })
                .collect();
            json!({ "arity": n, "args": args })
        })
        .collect();
    let status = if rep.passed() { Status::Ok } else { Status::Failed };
    Ok((
        status,
        json!({ "arity": opts.arity, "truncation": truncation, "passed": rep.passed(),
                "checked": checked, "failures": failures }),
    ))
}

fn intertwining(ctx: &PbwContext, labels: &Labels, opts: &Options) -> Outcome {
    let rep = horse_check(ctx, opts.weight);
    let failure = rep.first_failure.as_ref().map(|f| {
        json!({
            "arg": labels.name(f.slot),
            "arg_slot": f.slot + 1,
            "monomial": labels.monomial(&f.monomial),
            "slots": one_based(f.monomial.slots()),
            "left_action": labels.combination(&f.left_action),
            "transported": labels.combination(&f.transported),
        })
    });
    let status = if rep.consistent() { Status::Ok } else { Status::Failed };
    Ok((
        status,
        json!({ "max_weight": rep.max_weight, "cocycle_zero": rep.cocycle_zero, "intertwines": rep.intertwines,
                "consistent": rep.consistent(), "first_failure": failure }),
    ))
}

fn flat_splitting(ctx: &PbwContext, labels: &Labels, opts: &Options) -> Outcome {
    let rep = zebra_check(ctx, opts.weight)?;
    let mismatches: Vec<Value> = rep
        .mismatches
        .iter()
        .map(|(n, a, m)| {
            json!({ "n": n, "arg": labels.name(*a), "arg_slot": a + 1,
                    "monomial": labels.monomial(m), "slots": one_based(m.slots()) })
        })
        .collect();
    let status = if rep.passed() { Status::Ok } else { Status::Failed };
    Ok((
        status,
        json!({ "max_weight": rep.max_weight, "h_vanishes": rep.h_vanishes, "checked": rep.checked,
                "passed": rep.passed(), "mismatches": mismatches, "components": components(&rep.hvf, labels) }),
    ))
}

/// Random coderivations of S(V) for dim V = 1..=3, half of them with a
/// constant term, checking that the filtration is preserved exactly when
/// δ(1) = 0.
fn coderivation_demo(opts: &Options) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut dims = Vec::new();
    let mut all_ok = true;
    for dim in 1..=3 {
        let (mut preserved, mut with_constant, mut disagreements) = (0, 0, 0);
        for s in 0..opts.samples {
            let constant = s % 2 == 1;
            let delta = Coderivation::random(dim, opts.weight.min(3), constant, &mut rng);
            let v = shark_check(&delta, opts.weight);
            with_constant += usize::from(constant);
            preserved += usize::from(v.filtration_preserved);
            disagreements += usize::from(!v.equivalent());
        }
        let primitives = liepair::sym_coalgebra::primitives_are_linear(dim, opts.weight);
        all_ok &= disagreements == 0 && primitives;
        dims.push(json!({
            "dim": dim,
            "samples": opts.samples,
            "with_constant_term": with_constant,
            "filtration_preserved": preserved,
            "disagreements": disagreements,
            "primitives_are_linear": primitives,
        }));
    }
    let status = if all_ok { Status::Ok } else { Status::Failed };
    Ok((status, json!({ "seed": opts.seed, "max_weight": opts.weight, "equivalent": all_ok, "dims": dims })))
}

/// Errors that mean "the request cannot be answered" rather than
/// "the answer is no".
pub fn error_payload(e: &InputError) -> Value {
    let kind = match e {
        InputError::Io { .. } => "io",
        InputError::Parse { .. } => "parse",
        InputError::Validation(Error::HypothesisViolated { .. }) => "hypothesis",
        InputError::Validation(_) => "validation",
        InputError::Usage(_) => "usage",
    };
    json!({ "error": kind, "message": e.to_string() })
}
