//! Command-line front end: build arrangements from graph/complex files, run
//! the characteristic-polynomial and freeness machinery, verify the
//! structural identities, and reproduce the worked tables.
//!
//! Exit codes: 0 success / all checks pass, 1 verification failure, 2 parse
//! error, 3 resource bound exceeded, 4 precondition violated.

use crate::arrangement::Arrangement;
use crate::charpoly::{
    charpoly_mobius, charpoly_subsets, complement_count, skeleton_charpoly_formula,
    verify_congruence, verify_identity_monomial, verify_identity_sgq, verify_q_delcon,
    verify_q_delcon_monomial,
};
use crate::combinat::{mcs_peo, Graph, SimplicialComplex};
use crate::freeness::{
    basis_graphic, basis_monomial, basis_qdef, chordal_filtration, saito_check,
    supersolvable_search, supersolvable_verify, terao_factor_check, BasisKind,
};
use crate::gf::FieldSpec;
use crate::polyalg::IntPoly;
use crate::{Error, Result};
use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Deserialize;
use std::path::{Path, PathBuf};
use std::sync::Arc;

#[derive(Parser)]
#[command(
    name = "qarr",
    version,
    about = "Exact characteristic polynomials and freeness certificates for \
             graphic arrangements and their q-deformations over finite fields"
)]
pub struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Characteristic polynomial with integer-root split
    Charpoly(CharpolyArgs),
    /// Derivation basis, Saito certificate, exponents, Terao factorization
    Freeness(FreenessArgs),
    /// Verify the structural identities (PASS/FAIL per check)
    Verify(VerifyArgs),
    /// Recompute the worked examples next to their published values
    Reproduce(ReproduceArgs),
}

#[derive(Args, Clone)]
struct FieldArgs {
    /// Field size q = p^e (prime-power shorthand)
    #[arg(long, global = true)]
    q: Option<u64>,
    /// Field characteristic (prime)
    #[arg(long, global = true)]
    p: Option<u64>,
    /// Extension degree
    #[arg(long, global = true)]
    e: Option<usize>,
    /// "auto" picks the smallest valid field for monomial builders
    #[arg(long, global = true)]
    field: Option<String>,
}

fn split_prime_power(q: u64) -> Result<(u64, usize)> {
    if q < 2 {
        return Err(Error::Parse(format!("{q} is not a prime power")));
    }
    let mut p = 2;
    while p * p <= q {
        if q % p == 0 {
            break;
        }
        p += 1;
    }
    if q % p != 0 {
        return Ok((q, 1));
    }
    let mut e = 0;
    let mut rest = q;
    while rest % p == 0 {
        rest /= p;
        e += 1;
    }
    if rest != 1 {
        return Err(Error::Parse(format!("{q} is not a prime power")));
    }
    Ok((p, e))
}

impl FieldArgs {
    fn resolve(&self) -> Result<Option<Arc<FieldSpec>>> {
        if let Some(mode) = &self.field {
            if mode != "auto" {
                return Err(Error::Parse(format!("unknown --field mode {mode}")));
            }
            if self.q.is_some() || self.p.is_some() {
                return Err(Error::Parse("--field auto conflicts with --q/--p".into()));
            }
            return Ok(None);
        }
        if let Some(q) = self.q {
            if self.p.is_some() || self.e.is_some() {
                return Err(Error::Parse("--q conflicts with --p/--e".into()));
            }
            let (p, e) = split_prime_power(q)?;
            return Ok(Some(Arc::new(FieldSpec::new(p, e)?)));
        }
        if let Some(p) = self.p {
            return Ok(Some(Arc::new(FieldSpec::new(p, self.e.unwrap_or(1))?)));
        }
        Ok(None)
    }

    fn required(&self) -> Result<Arc<FieldSpec>> {
        self.resolve()?
            .ok_or_else(|| Error::Parse("a field is required: pass --q or --p [--e]".into()))
    }
}

#[derive(Args, Clone, Copy)]
struct BuilderArgs {
    /// Graphic arrangement x_i - x_j (default field GF(7))
    #[arg(long)]
    graphic: bool,
    /// 1-dimensional q-deformation (coordinate hyperplanes + x_i - a x_j)
    #[arg(long)]
    sgq: bool,
    /// q-deformation of the clique complex
    #[arg(long)]
    qdef: bool,
    /// Graphic monomial arrangement with r-th roots of unity
    #[arg(long, value_name = "R")]
    monomial_r: Option<usize>,
}

impl BuilderArgs {
    fn kind(&self) -> Result<GraphBuilder> {
        let picks = [self.graphic, self.sgq, self.qdef, self.monomial_r.is_some()];
        match picks.iter().filter(|&&b| b).count() {
            0 => Ok(GraphBuilder::Graphic),
            1 if self.graphic => Ok(GraphBuilder::Graphic),
            1 if self.sgq => Ok(GraphBuilder::Sgq),
            1 if self.qdef => Ok(GraphBuilder::QDef),
            1 => Ok(GraphBuilder::Monomial(self.monomial_r.unwrap())),
            _ => Err(Error::Parse("pick exactly one of --graphic/--sgq/--qdef/--monomial-r".into())),
        }
    }
}

#[derive(Clone, Copy)]
enum GraphBuilder {
    Graphic,
    Sgq,
    QDef,
    Monomial(usize),
}

impl GraphBuilder {
    /// Resolves the field per builder: graphic defaults to GF(7), monomial
    /// auto-picks the smallest prime with an r-th root of unity, the
    /// q-dependent builders require an explicit field.
    fn field(self, fa: &FieldArgs) -> Result<Arc<FieldSpec>> {
        match self {
            GraphBuilder::Graphic => Ok(fa
                .resolve()?
                .unwrap_or_else(|| Arc::new(FieldSpec::new(7, 1).unwrap()))),
            GraphBuilder::Sgq | GraphBuilder::QDef => fa.required(),
            GraphBuilder::Monomial(r) => match fa.resolve()? {
                Some(f) => Ok(f),
                None => Ok(Arc::new(Arrangement::monomial_auto_field(r)?)),
            },
        }
    }

    fn build(self, g: &Graph, field: Arc<FieldSpec>) -> Result<Arrangement> {
        Ok(match self {
            GraphBuilder::Graphic => Arrangement::graphic(g, field),
            GraphBuilder::Sgq => Arrangement::sgq(g, field),
            GraphBuilder::QDef => Arrangement::qdef_graph(g, field),
            GraphBuilder::Monomial(r) => Arrangement::monomial(g, r, field, false)?,
        })
    }
}

/// Edge lists, 1-indexed "u v" lines; a single-integer line raises the vertex
/// count (for isolated vertices); '#' starts a comment.
fn parse_graph(path: &Path) -> Result<Graph> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    let mut n = 0usize;
    let mut edges = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let nums: std::result::Result<Vec<usize>, _> =
            line.split_whitespace().map(str::parse).collect();
        let nums = nums.map_err(|e| Error::Parse(format!("line {}: {e}", ln + 1)))?;
        match nums[..] {
            [v] => n = n.max(v),
            [u, v] => {
                if u == 0 || v == 0 {
                    return Err(Error::Parse(format!("line {}: vertices are 1-indexed", ln + 1)));
                }
                n = n.max(u).max(v);
                edges.push((u - 1, v - 1));
            }
            _ => return Err(Error::Parse(format!("line {}: expected \"u v\"", ln + 1))),
        }
    }
    Graph::new(n, edges).map_err(|e| Error::Parse(e.to_string()))
}

#[derive(Deserialize)]
struct ComplexFile {
    n: usize,
    facets: Vec<Vec<usize>>,
}

/// JSON {"n": .., "facets": [[..], ..]}, vertices 1-indexed like graph files.
fn parse_complex(path: &Path) -> Result<SimplicialComplex> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    let doc: ComplexFile =
        serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))?;
    let mut facets = Vec::with_capacity(doc.facets.len());
    for f in &doc.facets {
        let mut zero = Vec::with_capacity(f.len());
        for &v in f {
            if v == 0 || v > doc.n {
                return Err(Error::Parse(format!("facet vertex {v} out of range 1..{}", doc.n)));
            }
            zero.push(v - 1);
        }
        facets.push(zero);
    }
    SimplicialComplex::from_facets(doc.n, &facets).map_err(|e| Error::Parse(e.to_string()))
}

#[derive(Args)]
struct CharpolyArgs {
    /// Graph edge-list file
    #[arg(long)]
    graph: Option<PathBuf>,
    /// Simplicial complex JSON file
    #[arg(long)]
    complex: Option<PathBuf>,
    #[command(flatten)]
    builder: BuilderArgs,
    #[command(flatten)]
    fargs: FieldArgs,
    /// Cross-check against subset inclusion-exclusion and point counting
    #[arg(long)]
    oracle: bool,
    /// Machine-readable output
    #[arg(long)]
    json: bool,
}

fn coeff_strings(p: &IntPoly) -> Vec<String> {
    p.coeffs().iter().map(|c| c.to_string()).collect()
}

fn run_charpoly(a: &CharpolyArgs) -> Result<i32> {
    let arr = match (&a.graph, &a.complex) {
        (Some(path), None) => {
            let g = parse_graph(path)?;
            let kind = a.builder.kind()?;
            kind.build(&g, kind.field(&a.fargs)?)?
        }
        (None, Some(path)) => {
            let delta = parse_complex(path)?;
            Arrangement::qdef_complex(&delta, a.fargs.required()?)
        }
        _ => return Err(Error::Parse("pass exactly one of --graph or --complex".into())),
    };
    let chi = charpoly_mobius(&arr)?;
    let split = chi.int_root_split();
    let mut ok = true;
    let mut oracle_lines = Vec::new();
    if a.oracle {
        if arr.len() <= 20 {
            let agree = charpoly_subsets(&arr)? == chi;
            ok &= agree;
            oracle_lines.push(("subsets", if agree { "PASS" } else { "FAIL" }));
        }
        for k in 1..=2usize {
            match complement_count(&arr, k) {
                Ok(count) => {
                    let qk = BigInt::from(arr.field().q()).pow(k as u32);
                    let agree = chi.eval(&qk) == BigInt::from(count);
                    ok &= agree;
                    oracle_lines
                        .push(if k == 1 { ("points k=1", if agree { "PASS" } else { "FAIL" }) } else { ("points k=2", if agree { "PASS" } else { "FAIL" }) });
                }
                Err(Error::TooLarge(_)) => {}
                Err(e) => return Err(e),
            }
        }
    }
    if a.json {
        let doc = serde_json::json!({
            "schema": 1,
            "q": arr.field().q(),
            "dim": arr.dim(),
            "hyperplanes": arr.len(),
            "charpoly": coeff_strings(&chi),
            "split": split.display(),
            "oracles": oracle_lines
                .iter()
                .map(|(name, verdict)| serde_json::json!({"name": name, "verdict": verdict}))
                .collect::<Vec<_>>(),
        });
        println!("{}", serde_json::to_string_pretty(&doc).unwrap());
    } else {
        println!("{}", split.display());
        for (name, verdict) in &oracle_lines {
            println!("{verdict} oracle {name}");
        }
    }
    Ok(if ok { 0 } else { 1 })
}

#[derive(Args)]
struct FreenessArgs {
    /// Graph edge-list file
    #[arg(long)]
    graph: PathBuf,
    #[command(flatten)]
    builder: BuilderArgs,
    #[command(flatten)]
    fargs: FieldArgs,
    /// Machine-readable output
    #[arg(long)]
    json: bool,
}

fn run_freeness(a: &FreenessArgs) -> Result<i32> {
    let g = parse_graph(&a.graph)?;
    let Some(peo) = mcs_peo(&g) else {
        println!("not chordal: these families are free exactly for chordal graphs, so no basis exists");
        return Err(Error::NotChordal);
    };
    let kind = a.builder.kind()?;
    let field = kind.field(&a.fargs)?;
    let basis = match kind {
        GraphBuilder::Graphic => basis_graphic(&g, &peo, &field)?,
        GraphBuilder::QDef => basis_qdef(&g, &peo, &field)?,
        GraphBuilder::Monomial(r) => basis_monomial(&g, &peo, r, &field)?,
        GraphBuilder::Sgq => {
            return Err(Error::Parse(
                "--sgq has no basis construction; use --monomial-r with r = q-1".into(),
            ))
        }
    };
    let arr = kind.build(&g.relabel_by_peo(&peo), field)?;
    let degrees: Vec<u32> = basis
        .iter()
        .map(|t| t.homogeneous_degree())
        .collect::<Result<_>>()?;
    let exps = saito_check(&basis, &arr)?;
    let (saito, exps) = match exps {
        Some(e) => ("PASS", Some(e)),
        None => ("FAIL", None),
    };
    let terao = match &exps {
        Some(e) => {
            if terao_factor_check(&arr, e)? {
                "PASS"
            } else {
                "FAIL"
            }
        }
        None => "FAIL",
    };
    if a.json {
        let doc = serde_json::json!({
            "schema": 1,
            "degrees": degrees,
            "saito": saito,
            "exponents": exps.as_ref().map(|e| e.as_slice().to_vec()),
            "terao": terao,
        });
        println!("{}", serde_json::to_string_pretty(&doc).unwrap());
    } else {
        println!(
            "degrees: ({})",
            degrees.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(",")
        );
        println!("{saito} saito");
        if let Some(e) = &exps {
            println!(
                "exponents: ({})",
                e.as_slice().iter().map(|d| d.to_string()).collect::<Vec<_>>().join(",")
            );
        }
        println!("{terao} terao factorization");
    }
    Ok(if saito == "PASS" && terao == "PASS" { 0 } else { 1 })
}

#[derive(Args)]
struct VerifyArgs {
    #[command(subcommand)]
    check: VerifyCmd,
    /// Machine-readable output
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// chi(S_G^q,t) = (q-1)^l chi(G,(t-1)/(q-1)), or the r-version with
    /// --monomial-r
    Prop43 {
        /// Edge-list file, or "all5" for every graph on 5 labeled vertices
        #[arg(long)]
        graph: String,
        /// Field sizes to test (repeatable)
        #[arg(long = "q")]
        qs: Vec<u64>,
        /// Use M(G,r) and the factor r instead of S_G^q
        #[arg(long, value_name = "R")]
        monomial_r: Option<usize>,
    },
    /// q-deletion-contraction over every maximal edge (complexes) or every
    /// edge (graphs with --r)
    Qdelcon {
        #[arg(long)]
        complex: Option<PathBuf>,
        #[arg(long)]
        graph: Option<PathBuf>,
        #[command(flatten)]
        fargs: FieldArgs,
        /// Root-of-unity order for the graph form
        #[arg(long)]
        r: Option<usize>,
    },
    /// chi(S_Delta^q, q^k)/(q-1)^l == chi(G,k) mod q-1
    Congruence {
        #[arg(long)]
        complex: PathBuf,
        #[command(flatten)]
        fargs: FieldArgs,
        #[arg(long)]
        k: u32,
    },
    /// Chordal filtration check, or exhaustive search for small inputs
    Supersolvable {
        #[arg(long)]
        graph: PathBuf,
        #[command(flatten)]
        builder: BuilderArgs,
        #[command(flatten)]
        fargs: FieldArgs,
    },
}

fn all5_corpus() -> Vec<Graph> {
    (0u64..1 << 10).map(|m| Graph::from_edge_mask(5, m)).collect()
}

fn run_verify(a: &VerifyArgs) -> Result<i32> {
    let mut failures = 0usize;
    match &a.check {
        VerifyCmd::Prop43 { graph, qs, monomial_r } => {
            if qs.is_empty() && monomial_r.is_none() {
                return Err(Error::Parse("pass at least one --q (or --monomial-r)".into()));
            }
            let graphs = if graph == "all5" {
                all5_corpus()
            } else {
                vec![parse_graph(Path::new(graph))?]
            };
            for &q in qs {
                let (p, e) = split_prime_power(q)?;
                let field = Arc::new(FieldSpec::new(p, e)?);
                let results: Vec<Result<bool>> = graphs
                    .par_iter()
                    .map(|g| match monomial_r {
                        None => verify_identity_sgq(g, field.clone()).map(|r| r.holds),
                        Some(r) => {
                            verify_identity_monomial(g, *r, field.clone()).map(|rep| rep.holds)
                        }
                    })
                    .collect();
                let mut passed = 0usize;
                for (i, res) in results.iter().enumerate() {
                    match res {
                        Ok(true) => passed += 1,
                        Ok(false) => {
                            failures += 1;
                            println!("FAIL prop43 q={q} graph#{i}");
                        }
                        Err(e) => return Err(clone_err(e)),
                    }
                }
                println!("PASS prop43 q={q} graphs={passed}/{}", graphs.len());
            }
            if let (Some(r), true) = (monomial_r, qs.is_empty()) {
                let field = Arc::new(Arrangement::monomial_auto_field(*r)?);
                for (i, g) in graphs.iter().enumerate() {
                    let rep = verify_identity_monomial(g, *r, field.clone())?;
                    if rep.holds {
                        println!("PASS prop43 r={r} graph#{i}");
                    } else {
                        failures += 1;
                        println!("FAIL prop43 r={r} graph#{i}");
                    }
                }
            }
        }
        VerifyCmd::Qdelcon { complex, graph, fargs, r } => match (complex, graph) {
            (Some(path), None) => {
                let delta = parse_complex(path)?;
                let field = fargs.required()?;
                let g = delta.underlying_graph();
                let mut tested = 0;
                for (u, v) in g.edges() {
                    if !delta.is_maximal(1 << u | 1 << v) {
                        continue;
                    }
                    tested += 1;
                    let rep = verify_q_delcon(&delta, (u, v), field.clone())?;
                    let verdict = if rep.holds { "PASS" } else { "FAIL" };
                    if !rep.holds {
                        failures += 1;
                    }
                    println!("{verdict} qdelcon e=({},{})", u + 1, v + 1);
                }
                if tested == 0 {
                    return Err(Error::Parse("complex has no maximal edges".into()));
                }
            }
            (None, Some(path)) => {
                let g = parse_graph(path)?;
                let r = r.ok_or_else(|| Error::Parse("--r required with --graph".into()))?;
                let field = match fargs.resolve()? {
                    Some(f) => f,
                    None => Arc::new(Arrangement::monomial_auto_field(r)?),
                };
                for (u, v) in g.edges() {
                    let rep = verify_q_delcon_monomial(&g, (u, v), r, field.clone())?;
                    let verdict = if rep.holds { "PASS" } else { "FAIL" };
                    if !rep.holds {
                        failures += 1;
                    }
                    println!("{verdict} qdelcon r={r} e=({},{})", u + 1, v + 1);
                }
            }
            _ => return Err(Error::Parse("pass exactly one of --complex or --graph".into())),
        },
        VerifyCmd::Congruence { complex, fargs, k } => {
            let delta = parse_complex(complex)?;
            let field = fargs.required()?;
            let rep = verify_congruence(&delta, field.clone(), *k)?;
            let verdict = if rep.holds { "PASS" } else { "FAIL" };
            if !rep.holds {
                failures += 1;
            }
            println!(
                "{verdict} congruence q={} k={k}: chi(q^k)={} quotient={} ({} == {} mod {})",
                field.q(),
                rep.value,
                rep.quotient,
                rep.lhs_mod,
                rep.rhs_mod,
                rep.modulus
            );
        }
        VerifyCmd::Supersolvable { graph, builder, fargs } => {
            let g = parse_graph(graph)?;
            let kind = builder.kind()?;
            let field = kind.field(fargs)?;
            let basis_kind = match kind {
                GraphBuilder::Graphic => Some(BasisKind::Graphic),
                GraphBuilder::QDef => Some(BasisKind::QDef),
                GraphBuilder::Monomial(r) => Some(BasisKind::Monomial(r)),
                GraphBuilder::Sgq => None,
            };
            let verified = match (mcs_peo(&g), basis_kind) {
                (Some(peo), Some(bk)) => {
                    let (arr, filt) = chordal_filtration(&g, &peo, bk, field)?;
                    supersolvable_verify(&arr, &filt)?.is_some()
                }
                _ => {
                    let arr = kind.build(&g, field)?;
                    supersolvable_search(&arr)?.is_some()
                }
            };
            if verified {
                println!("PASS supersolvable");
            } else {
                failures += 1;
                println!("FAIL supersolvable: no valid filtration");
            }
        }
    }
    Ok(if failures == 0 { 0 } else { 1 })
}

fn clone_err(e: &Error) -> Error {
    // Error is not Clone (io sources); rebuild via the display text.
    Error::Internal(e.to_string())
}

#[derive(Args)]
struct ReproduceArgs {
    #[command(subcommand)]
    what: ReproduceCmd,
}

#[derive(Subcommand)]
enum ReproduceCmd {
    /// The q=2..5 table for the 2-skeleton of the 4-simplex
    Delta53,
    /// Closed skeleton formula vs the Mobius computation
    Skeleton {
        #[arg(long)]
        l: usize,
        #[arg(long)]
        q: u64,
    },
    /// Exponents (1,3,..,2l-1) of M(K_l, 2)
    ExponentsB {
        #[arg(long)]
        l: usize,
    },
}

/// (t-1)(t-q)(t-q^2)(t^2 - (9q^2-11q+4)t + 21q^4-54q^3+57q^2-29q+6).
pub fn delta53_parametric(q: i64) -> IntPoly {
    let lin = IntPoly::from_roots([1, q, q * q].map(BigInt::from));
    let b = 9 * q * q - 11 * q + 4;
    let c = 21 * q.pow(4) - 54 * q.pow(3) + 57 * q * q - 29 * q + 6;
    lin.mul(&IntPoly::from_i64_coeffs(&[c, -b, 1]))
}

fn run_reproduce(a: &ReproduceArgs) -> Result<i32> {
    let mut all_match = true;
    match &a.what {
        ReproduceCmd::Delta53 => {
            let delta = SimplicialComplex::skeleton(5, 3).unwrap();
            for q in [2u64, 3, 4, 5] {
                let (p, e) = split_prime_power(q)?;
                let field = Arc::new(FieldSpec::new(p, e)?);
                let chi = charpoly_mobius(&Arrangement::qdef_complex(&delta, field))?;
                let expected = delta53_parametric(q as i64);
                let matched = chi == expected;
                all_match &= matched;
                let split = chi.int_root_split();
                let residual_note = if split.residual.degree().map_or(0, |d| d) >= 2 {
                    " residual-splits=no"
                } else {
                    ""
                };
                println!(
                    "q={q} chi={} match={}{residual_note}",
                    split.display(),
                    if matched { "yes" } else { "NO" }
                );
            }
        }
        ReproduceCmd::Skeleton { l, q } => {
            let (p, e) = split_prime_power(*q)?;
            let field = Arc::new(FieldSpec::new(p, e)?);
            let delta = SimplicialComplex::skeleton(*l, l - 1).map_err(|_| {
                Error::Parse(format!("need l >= 2, got {l}"))
            })?;
            let chi = charpoly_mobius(&Arrangement::qdef_complex(&delta, field))?;
            let formula = skeleton_charpoly_formula(*l, *q);
            let matched = chi == formula;
            all_match &= matched;
            println!(
                "l={l} q={q} mobius={} formula={} match={}",
                chi.int_root_split().display(),
                formula.int_root_split().display(),
                if matched { "yes" } else { "NO" }
            );
        }
        ReproduceCmd::ExponentsB { l } => {
            if *l < 2 {
                return Err(Error::Parse(format!("need l >= 2, got {l}")));
            }
            let g = Graph::complete(*l);
            let peo = mcs_peo(&g).unwrap();
            let field = Arc::new(Arrangement::monomial_auto_field(2)?);
            let basis = basis_monomial(&g, &peo, 2, &field)?;
            let arr = Arrangement::monomial(&g, 2, field, false)?;
            let exps = saito_check(&basis, &arr)?
                .ok_or_else(|| Error::Internal("saito check failed on M(K_l,2)".into()))?;
            let want: Vec<u32> = (0..*l as u32).map(|i| 2 * i + 1).collect();
            let matched = exps.as_slice() == &want[..];
            all_match &= matched;
            println!(
                "l={l} exponents=({}) match={}",
                exps.as_slice().iter().map(|d| d.to_string()).collect::<Vec<_>>().join(","),
                if matched { "yes" } else { "NO" }
            );
        }
    }
    Ok(if all_match { 0 } else { 1 })
}

fn code_for(e: &Error) -> i32 {
    match e {
        Error::Parse(_) => 2,
        Error::TooLarge(_) => 3,
        _ => 4,
    }
}

/// Parses the process arguments and runs one command; returns the exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let informational = matches!(
                e.kind(),
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion
            );
            let _ = e.print();
            return if informational { 0 } else { 2 };
        }
    };
    let out = match cli.cmd {
        Cmd::Charpoly(a) => run_charpoly(&a),
        Cmd::Freeness(a) => run_freeness(&a),
        Cmd::Verify(a) => run_verify(&a),
        Cmd::Reproduce(a) => run_reproduce(&a),
    };
    match out {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            code_for(&e)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_power_split() {
        assert_eq!(split_prime_power(4).unwrap(), (2, 2));
        assert_eq!(split_prime_power(5).unwrap(), (5, 1));
        assert_eq!(split_prime_power(27).unwrap(), (3, 3));
        assert!(split_prime_power(6).is_err());
        assert!(split_prime_power(1).is_err());
    }

    #[test]
    fn parametric_quintic_q2() {
        // The parametric quintic instantiated at q=2 matches the tabulated
        // split form.
        let chi = delta53_parametric(2);
        assert_eq!(chi, IntPoly::from_roots([1, 2, 4, 8, 10].map(BigInt::from)));
    }

    #[test]
    fn graph_file_parsing() {
        let dir = std::env::temp_dir();
        let path = dir.join("qarr_cli_test_graph.edges");
        std::fs::write(&path, "# a triangle plus an isolated vertex\n1 2\n2 3\n1 3\n4\n").unwrap();
        let g = parse_graph(&path).unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.edge_count(), 3);
        std::fs::remove_file(&path).unwrap();

        let bad = dir.join("qarr_cli_test_bad.edges");
        std::fs::write(&bad, "0 1\n").unwrap();
        assert!(matches!(parse_graph(&bad), Err(Error::Parse(_))));
        std::fs::remove_file(&bad).unwrap();
    }

    #[test]
    fn complex_file_parsing() {
        let dir = std::env::temp_dir();
        let path = dir.join("qarr_cli_test_complex.json");
        std::fs::write(&path, r#"{"n": 3, "facets": [[1, 2, 3]]}"#).unwrap();
        let delta = parse_complex(&path).unwrap();
        assert_eq!(delta.face_count(), 7);
        std::fs::remove_file(&path).unwrap();
    }
}
