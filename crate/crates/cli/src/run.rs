//! Command execution. Every command produces one JSON document; matrices in
//! it use the matrix file format.

use std::fs;
use std::path::{Path, PathBuf};

use infmod_core::corpus::{pencil, random_intertwiner, random_nonsingular_l, random_pencil, random_transfer};
use infmod_core::matrix::{jordan_nilpotent_blocks, rank};
use infmod_core::{
    alt_condition_check, canonical_split, check_intertwining, complete_intertwiner, dual_intertwiner,
    exists_injective, exists_surjective, gram_matrix, hom_matrix, infinite_elementary_divisors,
    injectivity_certificate, kernel_inclusion_check, realize_plus, smith_at_infinity, smith_at_infinity_with,
    surjectivity_certificate, verify_markov, CoprimeCertificate, Gf, GfContext, Intertwiner, PivotRule, PolyMatrix,
    RatMatrix, Rational, Scalar, UBasis, UHost,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use crate::args::{Cli, Command, Direction, GenKind, HomArgs, HomCommand, Pivot};
use crate::error::CliError;
use crate::format::{emit_matrix, k_value, parse_document, poly_value, rat_value, to_matrix, FieldChoice, MatrixFile};

/// Rendered output document and the conjunction of its verification flags.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub text: String,
    pub verified: bool,
}

pub fn execute(cli: &Cli) -> Result<Report, CliError> {
    let paths = cli.command.inputs();
    let docs = paths
        .iter()
        .map(|p| {
            let bytes = fs::read(p).map_err(|e| CliError::parse(format!("{}: {e}", p.display())))?;
            parse_document(&p.display().to_string(), &bytes)
        })
        .collect::<Result<Vec<_>, _>>()?;
    let field = resolve_field(cli.field, &docs, &paths)?;
    match field {
        FieldChoice::Rational => run::<Rational>(cli, field, &docs, &paths),
        FieldChoice::Prime(p) => {
            let _ctx = GfContext::enter(p)?;
            run::<Gf>(cli, field, &docs, &paths)
        }
    }
}

/// `--field` wins when given; otherwise the first input decides. Rational
/// inputs may be reduced into a prime field; any other mismatch is an error.
fn resolve_field(flag: Option<FieldChoice>, docs: &[MatrixFile], paths: &[PathBuf]) -> Result<FieldChoice, CliError> {
    let declared = docs
        .iter()
        .zip(paths)
        .map(|(d, p)| d.field.choice().map_err(|e| CliError::parse(format!("{}: {e}", p.display()))))
        .collect::<Result<Vec<_>, _>>()?;
    let field = flag.or(declared.first().copied()).unwrap_or(FieldChoice::Rational);
    for (d, p) in declared.iter().zip(paths) {
        if *d != field && *d != FieldChoice::Rational {
            return Err(CliError::parse(format!("{}: declares field {d}, but {field} is in use", p.display())));
        }
    }
    Ok(field)
}

struct Ctx<'a, F> {
    field: FieldChoice,
    inputs: Vec<RatMatrix<F>>,
    paths: &'a [PathBuf],
}

impl<F: Scalar> Ctx<'_, F> {
    fn rat(&self, i: usize) -> &RatMatrix<F> {
        &self.inputs[i]
    }

    /// Input `i` as a polynomial matrix.
    fn poly(&self, i: usize) -> Result<PolyMatrix<F>, CliError> {
        let m = &self.inputs[i];
        if !m.is_polynomial() {
            return Err(CliError::precondition(format!("{}: expected a polynomial matrix", self.paths[i].display())));
        }
        Ok(m.map(|f| f.num().clone()))
    }

    fn mat(&self, m: &RatMatrix<F>) -> Value {
        rat_value(m, self.field)
    }

    fn pmat(&self, m: &PolyMatrix<F>) -> Value {
        poly_value(m, self.field)
    }

    fn kmat(&self, m: &infmod_core::KMatrix<F>) -> Value {
        k_value(m, self.field)
    }
}

fn run<F: Scalar>(cli: &Cli, field: FieldChoice, docs: &[MatrixFile], paths: &[PathBuf]) -> Result<Report, CliError> {
    let inputs = docs
        .iter()
        .zip(paths)
        .map(|(d, p)| to_matrix::<F>(d, &p.display().to_string()))
        .collect::<Result<Vec<_>, _>>()?;
    let hash = match &cli.command {
        Command::Gen { kind, size, .. } => digest(&format!("gen {kind:?} {size} {}", cli.seed.unwrap_or(0))),
        _ => digest(&inputs.iter().map(|m| emit_matrix(m, field)).collect::<String>()),
    };
    let ctx = Ctx { field, inputs, paths };
    let (body, verified) = match &cli.command {
        Command::Structure { .. } => structure(&ctx)?,
        Command::SmithInf { out_dir, pivot, .. } => smith_inf(&ctx, out_dir.as_deref(), *pivot)?,
        Command::Basis { .. } => basis(&ctx)?,
        Command::Rho { extended, .. } => rho_cmd(&ctx, *extended)?,
        Command::ExistsHom { direction, .. } => exists_hom(&ctx, *direction)?,
        Command::Realize { .. } => realize(&ctx)?,
        Command::Gen { kind, size, out_dir } => gen(&ctx, *kind, *size, cli.seed.unwrap_or(0), out_dir.as_deref())?,
        Command::Hom { op } => match op {
            HomCommand::Check(_) => hom_check(&ctx)?,
            HomCommand::Build(a) => hom_build(&ctx, a)?,
            HomCommand::Complete(_) => hom_complete(&ctx)?,
            HomCommand::Dual(a) => hom_dual(&ctx, a)?,
            HomCommand::Surjective(a) => hom_onto(&ctx, a, true)?,
            HomCommand::Injective(a) => hom_onto(&ctx, a, false)?,
        },
    };
    let Value::Object(mut doc) = body else { unreachable!("command bodies are objects") };
    doc.insert("command".into(), json!(cli.command.name()));
    doc.insert("field".into(), json!(field.to_string()));
    doc.insert("input_hash".into(), json!(hash));
    let verified = match verified {
        Some(v) => {
            let v = v && !cli.fail_verification;
            doc.insert("verified".into(), json!(v));
            v
        }
        None if cli.fail_verification => {
            doc.insert("verified".into(), json!(false));
            false
        }
        None => true,
    };
    Ok(Report { text: render(&Value::Object(doc)), verified })
}

fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn digest(text: &str) -> String {
    hex::encode(Sha256::digest(text.as_bytes()))
}

type Outcome = Result<(Value, Option<bool>), CliError>;

fn write_files(dir: &Path, files: &[(&str, String)]) -> Result<(), CliError> {
    let fail = |e: std::io::Error| CliError::precondition(format!("{}: {e}", dir.display()));
    fs::create_dir_all(dir).map_err(fail)?;
    for (name, text) in files {
        fs::write(dir.join(format!("{name}.json")), text).map_err(fail)?;
    }
    Ok(())
}

fn structure<F: Scalar>(ctx: &Ctx<F>) -> Outcome {
    let l = ctx.poly(0)?;
    let alphas = infinite_elementary_divisors(&l)?;
    let w = l.to_rat().shift(-1);
    let f = smith_at_infinity(&w);
    let body = json!({
        "n": l.rows(),
        "alphas": alphas,
        "betas": f.profile.betas,
        "exponents": f.profile.exponents(),
        "dim": f.profile.dimension(),
    });
    Ok((body, Some(f.verify(&w) && f.profile.alphas == alphas)))
}

fn smith_inf<F: Scalar>(ctx: &Ctx<F>, out_dir: Option<&Path>, pivot: Pivot) -> Outcome {
    let w = ctx.rat(0);
    let rule = match pivot {
        Pivot::RowMajor => PivotRule::RowMajor,
        Pivot::ColumnMajor => PivotRule::ColumnMajor,
    };
    let f = smith_at_infinity_with(w, rule);
    if let Some(dir) = out_dir {
        write_files(
            dir,
            &[
                ("P", emit_matrix(&f.p, ctx.field)),
                ("Sigma", emit_matrix(&f.sigma, ctx.field)),
                ("Q", emit_matrix(&f.q, ctx.field)),
            ],
        )?;
    }
    let body = json!({
        "P": ctx.mat(&f.p),
        "Sigma": ctx.mat(&f.sigma),
        "Q": ctx.mat(&f.q),
        "rank": f.profile.rank,
        "alphas": f.profile.alphas,
        "betas": f.profile.betas,
        "exponents": f.profile.exponents(),
    });
    Ok((body, Some(f.verify(w))))
}

fn basis<F: Scalar>(ctx: &Ctx<F>) -> Outcome {
    let l = ctx.poly(0)?;
    let alphas = infinite_elementary_divisors(&l)?;
    let b = UBasis::compute(&l)?;
    let bt = UBasis::compute(&l.transpose())?;
    let gram = gram_matrix(&bt, &b)?;
    let blocks = jordan_nilpotent_blocks(b.shift_matrix());
    let canonical = b.elements().iter().all(|e| b.host().is_canonical(e.rep()));
    let body = json!({
        "dim": b.dim(),
        "alphas": alphas,
        "reps": ctx.pmat(&b.reps_matrix()),
        "preimages": ctx.mat(&b.preimages_matrix()),
        "shift": ctx.kmat(b.shift_matrix()),
        "gram": ctx.kmat(&gram),
        "jordan_blocks": blocks,
    });
    let verified = canonical && blocks.as_ref() == Some(&alphas) && rank(&gram) == b.dim();
    Ok((body, Some(verified)))
}

fn rho_cmd<F: Scalar>(ctx: &Ctx<F>, extended: bool) -> Outcome {
    let host = UHost::new(&ctx.poly(0)?)?;
    let x = ctx.rat(1);
    let u = if extended { host.rho_e(x)? } else { host.rho(x)? };
    let rep = PolyMatrix::from_column(u.rep().to_vec());
    let body = json!({ "rep": ctx.pmat(&rep), "is_zero": u.is_zero() });
    Ok((body, Some(host.is_canonical(u.rep()))))
}

fn require_proper<'a, F: Scalar>(ctx: &'a Ctx<F>, i: usize) -> Result<&'a RatMatrix<F>, CliError> {
    let m = ctx.rat(i);
    if !m.is_proper() {
        return Err(CliError::precondition(format!("{}: Theta must be proper", ctx.paths[i].display())));
    }
    Ok(m)
}

/// The intertwiner from the inputs, completing `Θ1` when it is omitted.
fn intertwiner<F: Scalar>(ctx: &Ctx<F>, args: &HomArgs) -> Result<(Intertwiner<F>, bool), CliError> {
    let (l, l1) = (ctx.poly(0)?, ctx.poly(1)?);
    let theta = require_proper(ctx, 2)?;
    if args.theta1.is_some() {
        return Ok((Intertwiner::new(&l, &l1, theta.clone(), ctx.rat(3).clone())?, false));
    }
    let done = complete_intertwiner(theta, &l, &l1)?;
    Ok((Intertwiner::new(&l, &l1, done.theta_adjusted, done.theta1)?, true))
}

fn hom_check<F: Scalar>(ctx: &Ctx<F>) -> Outcome {
    let (l, l1) = (ctx.poly(0)?, ctx.poly(1)?);
    let theta = require_proper(ctx, 2)?;
    let theta1 = ctx.rat(3);
    let body = json!({
        "intertwining": check_intertwining(theta, theta1, &l, &l1)?,
        "alt_condition": alt_condition_check(theta, theta1, &l, &l1)?,
        "kernel_inclusion": kernel_inclusion_check(theta, &l, &l1)?,
    });
    Ok((body, None))
}

fn hom_build<F: Scalar>(ctx: &Ctx<F>, args: &HomArgs) -> Outcome {
    let (iw, completed) = intertwiner(ctx, args)?;
    let b = UBasis::compute(iw.l())?;
    let b1 = UBasis::compute(iw.l1())?;
    let h = hom_matrix(&iw, &b, &b1)?;
    let body = json!({
        "completed": completed,
        "Theta": ctx.mat(iw.theta()),
        "Theta1": ctx.mat(iw.theta1()),
        "hom_matrix": ctx.kmat(&h),
        "dim_source": b.dim(),
        "dim_target": b1.dim(),
        "rank": rank(&h),
    });
    Ok((body, Some(&h * b.shift_matrix() == b1.shift_matrix() * &h)))
}

fn hom_complete<F: Scalar>(ctx: &Ctx<F>) -> Outcome {
    let (l, l1) = (ctx.poly(0)?, ctx.poly(1)?);
    let theta = require_proper(ctx, 2)?;
    let done = complete_intertwiner(theta, &l, &l1)?;
    let body = json!({
        "Psi": ctx.mat(&done.psi),
        "Theta1": ctx.mat(&done.theta1),
        "ThetaAdjusted": ctx.mat(&done.theta_adjusted),
    });
    Ok((body, Some(done.verify(&l, &l1))))
}

fn hom_dual<F: Scalar>(ctx: &Ctx<F>, args: &HomArgs) -> Outcome {
    let (iw, completed) = intertwiner(ctx, args)?;
    let dual = dual_intertwiner(&iw);
    let (b, b1) = (UBasis::compute(iw.l())?, UBasis::compute(iw.l1())?);
    let (bt, b1t) = (UBasis::compute(dual.l1())?, UBasis::compute(dual.l())?);
    let h = hom_matrix(&iw, &b, &b1)?;
    let hd = hom_matrix(&dual, &b1t, &bt)?;
    let adjoint = &gram_matrix(&b1t, &b1)? * &h == &hd.transpose() * &gram_matrix(&bt, &b)?;
    let body = json!({
        "completed": completed,
        "L": ctx.pmat(dual.l()),
        "L1": ctx.pmat(dual.l1()),
        "Theta": ctx.mat(dual.theta()),
        "Theta1": ctx.mat(dual.theta1()),
        "hom_matrix": ctx.kmat(&hd),
    });
    let intertwines = check_intertwining(dual.theta(), dual.theta1(), dual.l(), dual.l1())?;
    Ok((body, Some(intertwines && adjoint)))
}

fn certificate_value<F: Scalar>(ctx: &Ctx<F>, cert: &CoprimeCertificate<F>) -> Value {
    let mut m = Map::new();
    m.insert("C".into(), cert.c.as_ref().map_or(Value::Null, |c| ctx.mat(c)));
    m.insert("D".into(), cert.d.as_ref().map_or(Value::Null, |d| ctx.mat(d)));
    Value::Object(m)
}

fn hom_onto<F: Scalar>(ctx: &Ctx<F>, args: &HomArgs, surjective: bool) -> Outcome {
    let (iw, completed) = intertwiner(ctx, args)?;
    let (b, b1) = (UBasis::compute(iw.l())?, UBasis::compute(iw.l1())?);
    let r = rank(&hom_matrix(&iw, &b, &b1)?);
    let (cert, x, y, expected) = if surjective {
        (surjectivity_certificate(&iw)?, iw.theta().clone(), iw.l1().to_rat().shift(-1), r == b1.dim())
    } else {
        (
            injectivity_certificate(&iw)?,
            iw.theta1().transpose(),
            iw.l().transpose().to_rat().shift(-1),
            r == b.dim(),
        )
    };
    let body = json!({
        "completed": completed,
        "verdict": cert.verdict,
        "reason": cert.reason,
        "certificate": certificate_value(ctx, &cert),
        "rank": r,
        "dim_source": b.dim(),
        "dim_target": b1.dim(),
    });
    Ok((body, Some(cert.verify(&x, &y) && cert.verdict == expected)))
}

fn exists_hom<F: Scalar>(ctx: &Ctx<F>, direction: Direction) -> Outcome {
    let (l, l1) = (ctx.poly(0)?, ctx.poly(1)?);
    let verdict = match direction {
        Direction::Surj => exists_surjective(&l, &l1)?,
        Direction::Inj => exists_injective(&l, &l1)?,
    };
    let body = json!({
        "direction": match direction { Direction::Surj => "surj", Direction::Inj => "inj" },
        "verdict": verdict,
        "alphas_source": infinite_elementary_divisors(&l)?,
        "alphas_target": infinite_elementary_divisors(&l1)?,
    });
    Ok((body, None))
}

fn realize<F: Scalar>(ctx: &Ctx<F>) -> Outcome {
    let g = ctx.rat(0);
    let r = canonical_split(g);
    let real = realize_plus(&r)?;
    let markov = verify_markov(&r, &real);
    let reconstructs = r.reconstructs(g);
    let body = json!({
        "W2": ctx.mat(r.w2()),
        "P2": ctx.mat(r.p2()),
        "D2": ctx.pmat(r.d2()),
        "Q2": ctx.mat(r.q2()),
        "N2": ctx.kmat(&real.n2),
        "B2": ctx.kmat(&real.b2),
        "C2": ctx.kmat(&real.c2),
        "basis": ctx.pmat(&real.basis.reps_matrix()),
        "dim": real.dim(),
        "markov": markov,
        "reconstructs": reconstructs,
    });
    Ok((body, Some(markov && reconstructs)))
}

fn gen<F: Scalar>(ctx: &Ctx<F>, kind: GenKind, size: usize, seed: u64, out_dir: Option<&Path>) -> Outcome {
    if size == 0 {
        return Err(CliError::precondition("--size must be positive"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let matrices: Vec<(&str, RatMatrix<F>)> = match kind {
        GenKind::L => vec![("L", random_nonsingular_l::<F, _>(&mut rng, size, 3).to_rat())],
        GenKind::Pencil => {
            let (a0, a1) = random_pencil::<F, _>(&mut rng, size);
            vec![
                ("A0", RatMatrix::from_k(&a0)),
                ("A1", RatMatrix::from_k(&a1)),
                ("L", pencil(&a0, &a1).to_rat()),
            ]
        }
        GenKind::Intertwiner => {
            let c = random_intertwiner::<F, _>(&mut rng, size);
            vec![("L", c.l.to_rat()), ("L1", c.l1.to_rat()), ("Theta", c.theta), ("Theta1", c.theta1)]
        }
        GenKind::Transfer => vec![("G", random_transfer::<F, _>(&mut rng, size, size, 3))],
    };
    if let Some(dir) = out_dir {
        let files: Vec<(&str, String)> = matrices.iter().map(|(n, m)| (*n, emit_matrix(m, ctx.field))).collect();
        write_files(dir, &files)?;
    }
    let mut all = Map::new();
    for (name, m) in &matrices {
        all.insert((*name).into(), ctx.mat(m));
    }
    Ok((json!({ "seed": seed, "size": size, "matrices": all }), None))
}
