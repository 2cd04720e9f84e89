//! `braidinj`: batch front end for the braided-injection toolkit.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or format error.
//! Output is JSON on stdout unless `--text`.

mod inputs;

use std::io::Write;
use std::process::ExitCode;

use braidinj::binj::{self, from_word, parse_gen_word, verify_presentation};
use braidinj::braid::{self, BraidWord, GarsideNF};
use braidinj::bspace::{
    bar_face, bar_multiply, check_bar_multiply, check_bar_simplicial, check_bspace, check_commutative_monoid, check_eval_independent, check_flat,
    check_monoid, hocolim_b_approx, hocolim_finite, homology, CoendElement, HomologyGroup, TBSpace, TBSpaceMonoid, APPROXIMATE_CAVEAT,
};
use braidinj::fincat::{check_braided_monoidal, check_category, BCategory, BraidedMonCat, Groth, GrothMorphism, GrothObject, TableCat};
use braidinj::rectify::{check_p_functor, p_morphism, p_object, phi_action, phi_check_commutative, phi_check_relations, phi_symmetric, Phi, PhiMor};
use braidinj::report::CheckReport;
use braidinj::symspec::{check_commutative_imonoid, check_ispace, check_structure_map, spectrum_level, TISpace};
use braidinj::verify::{verify_all, Profile, RunReport};
use braidinj::{rng, Error, Result};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "braidinj", version, about = "Braided injections, rectification and finite B-space checks")]
struct Cli {
    #[command(flatten)]
    g: Global,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Clone)]
struct Global {
    /// seed for randomized suites
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// human-readable output instead of JSON
    #[arg(long, global = true, conflicts_with = "json")]
    text: bool,
    /// JSON output (the default)
    #[arg(long, global = true)]
    json: bool,
    #[arg(long, global = true)]
    max_n: Option<usize>,
    #[arg(long, global = true)]
    max_level: Option<usize>,
    #[arg(long, global = true)]
    word_len: Option<usize>,
    /// simplicial truncation D
    #[arg(long, global = true)]
    dim: Option<usize>,
    /// random instances per randomized check
    #[arg(long, global = true)]
    samples: Option<usize>,
    /// include wall time in reports (makes them non-reproducible)
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Subcommand)]
enum Cmd {
    /// braid words: normal forms, equality, deletion, cabling, parabolic factors
    Braid {
        #[command(subcommand)]
        cmd: BraidCmd,
    },
    /// braided injections
    Binj {
        #[command(subcommand)]
        cmd: BinjCmd,
    },
    /// finite and braided monoidal categories
    Cat {
        #[command(subcommand)]
        cmd: CatCmd,
    },
    /// the Grothendieck construction of the rectification
    Groth {
        #[command(subcommand)]
        cmd: GrothCmd,
    },
    /// the rectification and the comparison functor P
    Phi {
        #[command(subcommand)]
        cmd: PhiCmd,
    },
    /// truncated B-spaces
    Bspace {
        #[command(subcommand)]
        cmd: BspaceCmd,
    },
    /// truncated simplicial sets
    Sset {
        #[command(subcommand)]
        cmd: SsetCmd,
    },
    /// homotopy colimits
    Hocolim {
        #[command(subcommand)]
        cmd: HocolimCmd,
    },
    /// the bar construction on a commutative monoid
    Bar {
        #[command(subcommand)]
        cmd: BarCmd,
    },
    /// levels and structure maps of the symmetric spectrum of an I-space
    Spec {
        #[command(subcommand)]
        cmd: SpecCmd,
    },
    /// every verification suite under a bounds profile
    VerifyAll {
        #[arg(long, default_value = "quick")]
        profile: String,
        /// directory of extra braided categories (JSON) to put through the suites
        #[arg(long)]
        fixtures: Option<String>,
        /// run only these suites (repeatable)
        #[arg(long)]
        only: Vec<String>,
    },
}

#[derive(Subcommand)]
enum BraidCmd {
    Nf {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
    },
    Eq {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
    },
    Delete {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        /// strands to remove, e.g. "1,3"
        #[arg(long)]
        strands: String,
    },
    Cable {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        /// ribbon widths, one per strand
        #[arg(long)]
        widths: String,
    },
    Parabolic {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        /// block widths summing to n
        #[arg(long)]
        widths: String,
    },
}

#[derive(Subcommand)]
enum BinjCmd {
    /// g∘f, f applied first
    Compose {
        #[arg(long)]
        g: String,
        #[arg(long)]
        f: String,
    },
    VerifyPresentation,
    FromWord {
        /// source object (defaults to the first letter's)
        #[arg(long)]
        n: Option<usize>,
        /// letters such as "z1@2 z1^-1@2 d3@2"
        #[arg(long, allow_hyphen_values = true)]
        word: String,
    },
}

#[derive(Subcommand)]
enum CatCmd {
    /// identity and associativity laws of a finite category
    Check {
        #[arg(long)]
        cat: String,
    },
    /// braided strict monoidal axioms of a table category
    CheckBraided {
        #[arg(long)]
        cat: String,
    },
}

#[derive(Subcommand)]
enum GrothCmd {
    Compose {
        #[arg(long)]
        cat: String,
        #[arg(long)]
        g: String,
        #[arg(long)]
        f: String,
    },
    Tensor {
        #[arg(long)]
        cat: String,
        #[arg(long)]
        f: String,
        #[arg(long)]
        g: String,
    },
    Braiding {
        #[arg(long)]
        cat: String,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
}

#[derive(Subcommand)]
enum PhiCmd {
    /// Φ(𝒜)(α) on an object tuple, and on a morphism out of it
    Act {
        #[arg(long)]
        cat: String,
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        obj: String,
        /// morphism name of 𝒜 together with --tgt
        #[arg(long)]
        mor: Option<String>,
        #[arg(long)]
        tgt: Option<String>,
    },
    Verify {
        #[arg(long)]
        cat: String,
    },
    /// P of one Grothendieck morphism, or the functor checks without --mor
    P {
        #[arg(long)]
        cat: String,
        #[arg(long)]
        mor: Option<String>,
    },
}

#[derive(Args)]
struct SpaceArgs {
    /// built-in space (see --help of the verb)
    #[arg(long, default_value = "terminal")]
    fixture: String,
    /// a B-space JSON file, overriding --fixture
    #[arg(long)]
    space: Option<String>,
    /// braided category for the nphi fixture
    #[arg(long)]
    cat: Option<String>,
}

#[derive(Subcommand)]
enum BspaceCmd {
    /// presentation relations and simpliciality of every level
    Check {
        #[command(flatten)]
        s: SpaceArgs,
    },
    Flat {
        #[command(flatten)]
        s: SpaceArgs,
    },
    /// commutative monoid laws (commutative I-monoid laws with --symmetric)
    Commutative {
        #[command(flatten)]
        s: SpaceArgs,
        #[arg(long)]
        symmetric: bool,
    },
}

#[derive(Subcommand)]
enum SsetCmd {
    Homology {
        /// simplicial set JSON file
        #[arg(long)]
        sset: Option<String>,
        #[arg(long, default_value = "circle")]
        fixture: String,
        /// highest degree (defaults to D - 1)
        #[arg(long)]
        max_deg: Option<usize>,
    },
}

#[derive(Subcommand)]
enum HocolimCmd {
    /// Bousfield–Kan hocolim of a diagram over a finite category
    Finite {
        #[arg(long)]
        diagram: Option<String>,
        #[arg(long, default_value = "pushout")]
        fixture: String,
        #[arg(long)]
        emit: bool,
    },
    /// truncated hocolim over B; always flagged APPROXIMATE
    Approx {
        #[command(flatten)]
        s: SpaceArgs,
        #[arg(long)]
        emit: bool,
    },
}

#[derive(Subcommand)]
enum BarCmd {
    /// d_i of a bar element
    Face {
        #[command(flatten)]
        s: SpaceArgs,
        #[arg(long)]
        element: String,
        #[arg(long)]
        i: usize,
    },
    /// simplicial identities, evaluation independence and product compatibility
    Verify {
        #[command(flatten)]
        s: SpaceArgs,
        #[arg(long, default_value_t = 3)]
        k_max: usize,
    },
    Mult {
        #[command(flatten)]
        s: SpaceArgs,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
    },
}

#[derive(Subcommand)]
enum SpecCmd {
    Level {
        #[command(flatten)]
        s: SpaceArgs,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        emit: bool,
    },
    Structure {
        #[command(flatten)]
        s: SpaceArgs,
        #[arg(long)]
        n: usize,
    },
}

/// What a verb produced: a value, its text rendering, and pass/fail.
struct Out {
    value: Value,
    text: String,
    ok: bool,
}

impl Out {
    fn value(value: Value) -> Out {
        let text = serde_json::to_string_pretty(&value).expect("serializable");
        Out { value, text, ok: true }
    }

    fn with_text(value: Value, text: String) -> Out {
        Out { value, text, ok: true }
    }

    fn report(r: CheckReport) -> Out {
        let mut text = r.summary();
        for f in r.failures.iter().take(20) {
            text.push_str(&format!("\n  {}: {}", f.key, f.detail));
        }
        let ok = r.passed();
        let mut value = serde_json::to_value(&r).expect("serializable");
        value["pass"] = json!(ok);
        Out { value, text, ok }
    }

    fn run(r: RunReport) -> Out {
        let mut text = format!("{}: {} ({} instances, seed {})", r.suite, if r.pass { "pass" } else { "FAIL" }, r.instances, r.seed);
        for s in &r.suites {
            text.push_str(&format!("\n  {:<14} {:>8} instances {:>5} failures", s.name, s.instances, s.failures));
        }
        for f in r.failures.iter().take(20) {
            text.push_str(&format!("\n  FAIL {} {}: {}\n    replay: {}", f.suite, f.key, f.detail, f.reproducer));
        }
        if let Some(ms) = r.wall_ms {
            text.push_str(&format!("\n  wall time {ms} ms"));
        }
        let ok = r.pass;
        Out { value: serde_json::to_value(&r).expect("serializable"), text, ok }
    }
}

fn word_json(w: &BraidWord) -> Value {
    json!({ "n": w.n, "word": w.to_string() })
}

fn nf_json(nf: &GarsideNF) -> Value {
    json!({ "n": nf.to_word().n, "normal_form": nf, "word": nf.to_word().to_string() })
}

fn homology_json(h: &[HomologyGroup]) -> Value {
    json!(h.iter().map(|g| json!({ "rank": g.rank, "torsion": g.torsion, "group": g.to_string() })).collect::<Vec<_>>())
}

fn homology_text(h: &[HomologyGroup]) -> String {
    h.iter().enumerate().map(|(k, g)| format!("H{k} = {g}")).collect::<Vec<_>>().join(", ")
}

fn run_braid(cmd: BraidCmd) -> Result<Out> {
    Ok(match cmd {
        BraidCmd::Nf { n, word } => {
            let nf = GarsideNF::parse(n, &word)?;
            Out::with_text(nf_json(&nf), nf.to_word().to_string())
        }
        BraidCmd::Eq { n, a, b } => {
            let eq = braid::equals(&BraidWord::parse(n, &a)?, &BraidWord::parse(n, &b)?)?;
            Out::with_text(json!({ "equal": eq }), eq.to_string())
        }
        BraidCmd::Delete { n, word, strands } => {
            let w = braid::delete_strands(&BraidWord::parse(n, &word)?, &inputs::usize_list(&strands)?)?;
            Out::with_text(word_json(&w), w.to_string())
        }
        BraidCmd::Cable { n, word, widths } => {
            let w = braid::cable(&BraidWord::parse(n, &word)?, &inputs::usize_list(&widths)?)?;
            Out::with_text(word_json(&w), w.to_string())
        }
        BraidCmd::Parabolic { n, word, widths } => {
            let f = braid::parabolic_factor_blocks(&BraidWord::parse(n, &word)?, &inputs::usize_list(&widths)?)?;
            match f {
                Some(bs) => {
                    let text = bs.iter().map(|b| format!("[{b}]")).collect::<Vec<_>>().join(" ");
                    Out::with_text(json!({ "parabolic": true, "factors": bs.iter().map(word_json).collect::<Vec<_>>() }), text)
                }
                None => Out::with_text(json!({ "parabolic": false, "factors": null }), "not in the parabolic subgroup".into()),
            }
        }
    })
}

fn run_binj(cmd: BinjCmd, g: &Global) -> Result<Out> {
    Ok(match cmd {
        BinjCmd::Compose { g: gs, f } => {
            let c = binj::compose(&inputs::binj(&gs)?, &inputs::binj(&f)?)?;
            Out::value(c.to_json())
        }
        BinjCmd::VerifyPresentation => {
            let n = g.max_n.unwrap_or(6);
            if n < 2 {
                return Err(Error::Truncation("--max-n must be at least 2".into()));
            }
            Out::report(verify_presentation(n))
        }
        BinjCmd::FromWord { n, word } => {
            let tokens: Vec<String> = word.split_whitespace().map(String::from).collect();
            let gens = parse_gen_word(&tokens)?;
            let start = match (n, gens.first()) {
                (Some(n), _) => n,
                (None, Some(first)) => first.source(),
                (None, None) => return Err(Error::Parse("empty word needs --n".into())),
            };
            Out::value(from_word(start, &gens)?.to_json())
        }
    })
}

fn run_cat(cmd: CatCmd, g: &Global) -> Result<Out> {
    Ok(match cmd {
        CatCmd::Check { cat } => Out::report(check_category(&inputs::fin_cat(&cat)?)),
        CatCmd::CheckBraided { cat } => {
            let c = inputs::table_cat(&cat)?;
            Out::report(check_braided_monoidal(&c, g.samples.unwrap_or(100), &mut rng(g.seed)))
        }
    })
}

type PhiG = Groth<Phi<TableCat>>;
type GMor = GrothMorphism<Vec<usize>, PhiMor<usize, usize>>;

fn groth_json(cat: &TableCat, m: &GMor) -> Value {
    json!({
        "source": { "n": m.source.n, "x": inputs::names(cat, &m.source.x) },
        "target": { "n": m.target.n, "x": inputs::names(cat, &m.target.x) },
        "alpha": m.alpha.to_json(),
        "s": { "src": inputs::names(cat, &m.s.src), "tgt": inputs::names(cat, &m.s.tgt), "f": cat.morphisms[m.s.f].0 },
    })
}

/// Reads `{"source":{"x":[..]},"alpha":{..},"s":{"tgt":[..],"f":name}}`;
/// the remaining fields are recomputed.
fn groth_parse(g: &PhiG, s: &str) -> Result<GMor> {
    let v = inputs::json_arg(s)?;
    let cat = &g.x.cat;
    let field = |p: &str| v.pointer(p).ok_or_else(|| Error::Parse(format!("Grothendieck morphism needs {p}")));
    let x = inputs::tuple(cat, &field("/source/x")?.to_string())?;
    let alpha = binj::BraidedInjection::from_json(field("/alpha")?)?;
    let tgt = inputs::tuple(cat, &field("/s/tgt")?.to_string())?;
    let f = cat.morphism_index(field("/s/f")?.as_str().ok_or_else(|| Error::Parse("s.f is a morphism name".into()))?)?;
    let src = g.x.act_obj(&alpha, &x)?;
    let s = g.x.morphism(src, tgt, f)?;
    g.morphism(g.object(x), alpha, s)
}

fn run_groth(cmd: GrothCmd, gl: &Global) -> Result<Out> {
    let build = |cat: &str| -> Result<PhiG> {
        let c = inputs::table_cat(cat)?;
        Ok(Groth::new(Phi::new(c, gl.max_level.unwrap_or(4)), gl.max_level.unwrap_or(4), gl.word_len.unwrap_or(4)))
    };
    Ok(match cmd {
        GrothCmd::Compose { cat, g, f } => {
            let gr = build(&cat)?;
            let c = gr.compose(&groth_parse(&gr, &g)?, &groth_parse(&gr, &f)?)?;
            Out::value(groth_json(&gr.x.cat, &c))
        }
        GrothCmd::Tensor { cat, f, g } => {
            let gr = build(&cat)?;
            let t = gr.tensor_mor(&groth_parse(&gr, &f)?, &groth_parse(&gr, &g)?)?;
            Out::value(groth_json(&gr.x.cat, &t))
        }
        GrothCmd::Braiding { cat, a, b } => {
            let gr = build(&cat)?;
            let (a, b) = (inputs::tuple(&gr.x.cat, &a)?, inputs::tuple(&gr.x.cat, &b)?);
            let c = gr.braiding(&GrothObject { n: a.len(), x: a }, &GrothObject { n: b.len(), x: b });
            Out::value(groth_json(&gr.x.cat, &c))
        }
    })
}

fn run_phi(cmd: PhiCmd, g: &Global) -> Result<Out> {
    let level = g.max_level.unwrap_or(4);
    Ok(match cmd {
        PhiCmd::Act { cat, alpha, obj, mor, tgt } => {
            let phi = Phi::new(inputs::table_cat(&cat)?, level);
            let alpha = inputs::binj(&alpha)?;
            let x = inputs::tuple(&phi.cat, &obj)?;
            let f = match (mor, tgt) {
                (Some(m), Some(t)) => Some(phi.morphism(x.clone(), inputs::tuple(&phi.cat, &t)?, phi.cat.morphism_index(&m)?)?),
                (None, None) => None,
                _ => return Err(Error::Parse("--mor and --tgt go together".into())),
            };
            let (y, fy) = phi_action(&phi, &alpha, &x, f.as_ref())?;
            let mut v = json!({ "object": inputs::names(&phi.cat, &y) });
            if let Some(fy) = fy {
                v["morphism"] = json!({
                    "src": inputs::names(&phi.cat, &fy.src),
                    "tgt": inputs::names(&phi.cat, &fy.tgt),
                    "f": phi.cat.morphisms[fy.f].0,
                });
            }
            Out::value(v)
        }
        PhiCmd::Verify { cat } => {
            let c = inputs::table_cat(&cat)?;
            let mut gen = rng(g.seed);
            let few = g.samples.unwrap_or(3);
            let mut r = CheckReport::new(format!("phi {}", c.name));
            r.absorb(phi_check_relations(&Phi::new(c.clone(), level), level, few, &mut gen));
            let bound = level.min(3);
            r.absorb(phi_check_commutative(&Phi::new(c.clone(), bound), bound, few, &mut gen));
            if c.is_symmetric() {
                let ps = phi_symmetric(c, level)?;
                r.absorb(ps.check_relations(level, few, &mut gen));
                r.absorb(ps.check_commutative(bound, few, &mut gen));
            }
            Out::report(r)
        }
        PhiCmd::P { cat, mor } => {
            let phi = Phi::new(inputs::table_cat(&cat)?, level.min(4));
            match mor {
                Some(m) => {
                    let gr = Groth::new(phi.clone(), phi.max_level, g.word_len.unwrap_or(4));
                    let m = groth_parse(&gr, &m)?;
                    let pm = p_morphism(&phi, &m)?;
                    let v = json!({
                        "source": phi.cat.objects[p_object(&phi, &m.source)],
                        "target": phi.cat.objects[p_object(&phi, &m.target)],
                        "morphism": phi.cat.morphisms[pm].0,
                    });
                    Out::value(v)
                }
                None => Out::report(check_p_functor(&phi, g.word_len.unwrap_or(4), g.samples.unwrap_or(1000), &mut rng(g.seed))),
            }
        }
    })
}

fn load_space(s: &SpaceArgs, g: &Global) -> Result<(TBSpace, Option<TBSpaceMonoid>)> {
    inputs::space(s.space.as_deref(), &s.fixture, g.max_level.unwrap_or(3), g.dim.unwrap_or(1), s.cat.as_deref())
}

fn need_monoid(m: Option<TBSpaceMonoid>, name: &str) -> Result<TBSpaceMonoid> {
    m.ok_or_else(|| Error::Invalid(format!("{name} carries no monoid structure")))
}

fn run_bspace(cmd: BspaceCmd, g: &Global) -> Result<Out> {
    Ok(match cmd {
        BspaceCmd::Check { s } => Out::report(check_bspace(&load_space(&s, g)?.0)),
        BspaceCmd::Flat { s } => Out::report(check_flat(&load_space(&s, g)?.0)),
        BspaceCmd::Commutative { s, symmetric } => {
            let (x, m) = load_space(&s, g)?;
            let m = need_monoid(m, &x.name)?;
            if symmetric {
                Out::report(check_commutative_imonoid(&m))
            } else {
                let mut r = CheckReport::new(format!("commutative monoid {}", x.name));
                r.absorb(check_monoid(&m));
                r.absorb(check_commutative_monoid(&m));
                Out::report(r)
            }
        }
    })
}

fn run_sset(cmd: SsetCmd, g: &Global) -> Result<Out> {
    let SsetCmd::Homology { sset, fixture, max_deg } = cmd;
    let x = match sset {
        Some(f) => braidinj::bspace::TSSet::from_json(&inputs::json_arg(&f)?)?,
        None => inputs::sset_fixture(&fixture, g.dim.unwrap_or(3))?,
    };
    let deg = max_deg.unwrap_or(x.dim.saturating_sub(1));
    let h = homology(&x, deg)?;
    Ok(Out::with_text(json!({ "D": x.dim, "homology": homology_json(&h) }), homology_text(&h)))
}

fn run_hocolim(cmd: HocolimCmd, g: &Global) -> Result<Out> {
    Ok(match cmd {
        HocolimCmd::Finite { diagram, fixture, emit } => {
            let d = match diagram {
                Some(f) => inputs::diagram(&f)?,
                None => inputs::diagram_fixture(&fixture, g.dim.unwrap_or(2))?,
            };
            let h = hocolim_finite(&d)?;
            let hom = homology(&h, h.dim.saturating_sub(1))?;
            let mut v = json!({
                "counts": (0..=h.dim).map(|k| h.count(k)).collect::<Vec<_>>(),
                "homology": homology_json(&hom),
            });
            if emit {
                v["simplicial_set"] = h.to_json();
            }
            Out::with_text(v, homology_text(&hom))
        }
        HocolimCmd::Approx { s, emit } => {
            let (x, _) = load_space(&s, g)?;
            let a = hocolim_b_approx(&x, g.max_n.unwrap_or(2), g.word_len.unwrap_or(1))?;
            let hom = homology(&a.set, a.set.dim.saturating_sub(1))?;
            let mut v = a.to_json();
            if !emit {
                v.as_object_mut().expect("object").remove("simplicial_set");
            }
            v["homology"] = homology_json(&hom);
            Out::with_text(v, format!("{APPROXIMATE_CAVEAT}\n{}", homology_text(&hom)))
        }
    })
}

/// `{"splits":[..],"phi":{..},"xs":[index or label, ..],"dim":k}`.
fn element(space: &TBSpace, s: &str) -> Result<CoendElement> {
    let v = inputs::json_arg(s)?;
    let splits: Vec<usize> = serde_json::from_value(v.get("splits").cloned().unwrap_or(Value::Null))
        .map_err(|e| Error::Parse(format!("element splits: {e}")))?;
    let dim = v.get("dim").and_then(Value::as_u64).unwrap_or(0) as usize;
    let phi = binj::BraidedInjection::from_json(v.get("phi").ok_or_else(|| Error::Parse("element needs phi".into()))?)?;
    let raw = v.get("xs").and_then(Value::as_array).ok_or_else(|| Error::Parse("element needs xs".into()))?;
    if raw.len() != splits.len() {
        return Err(Error::Dimension(format!("{} factors for {} splits", raw.len(), splits.len())));
    }
    let mut xs = Vec::new();
    for (x, &m) in raw.iter().zip(&splits) {
        let level = space.levels.get(m).ok_or_else(|| Error::Truncation(format!("level {m} above N = {}", space.n_max)))?;
        if dim > level.dim {
            return Err(Error::Truncation(format!("dimension {dim} above D = {}", level.dim)));
        }
        let idx = match x {
            Value::Number(n) => n.as_u64().map(|n| n as usize).filter(|&n| n < level.count(dim)),
            Value::String(l) => level.lookup(dim, l),
            _ => None,
        };
        xs.push(idx.ok_or_else(|| Error::Parse(format!("{x} is not a {dim}-simplex of level {m}")))?);
    }
    CoendElement::new(splits, phi, xs, dim)
}

fn element_json(space: &TBSpace, e: &CoendElement) -> Value {
    let mut v = serde_json::to_value(e).expect("serializable");
    v["labels"] = json!(e.splits.iter().zip(&e.xs).map(|(&m, &x)| space.levels[m].label(e.dim, x).to_string()).collect::<Vec<_>>());
    v
}

fn run_bar(cmd: BarCmd, g: &Global) -> Result<Out> {
    Ok(match cmd {
        BarCmd::Face { s, element: e, i } => {
            let (x, m) = load_space(&s, g)?;
            let m = need_monoid(m, &x.name)?;
            let e = element(&x, &e)?;
            if i > e.arity() {
                return Err(Error::Dimension(format!("face {i} of a bar element of degree {}", e.arity())));
            }
            Out::value(element_json(&x, &bar_face(&m, &e, i)?))
        }
        BarCmd::Verify { s, k_max } => {
            let (x, m) = load_space(&s, g)?;
            let m = need_monoid(m, &x.name)?;
            let mut gen = rng(g.seed);
            let n = g.samples.unwrap_or(500);
            let wl = g.word_len.unwrap_or(4);
            let mut r = CheckReport::new(format!("bar {}", x.name));
            r.absorb(check_bar_simplicial(&m, k_max, n, wl, &mut gen));
            r.absorb(check_eval_independent(&m, 2 * n, wl, &mut gen));
            r.absorb(check_bar_multiply(&m, k_max, n, wl, &mut gen));
            Out::report(r)
        }
        BarCmd::Mult { s, x: ex, y: ey } => {
            let (x, m) = load_space(&s, g)?;
            let m = need_monoid(m, &x.name)?;
            let p = bar_multiply(&m, &element(&x, &ex)?, &element(&x, &ey)?)?;
            Out::value(element_json(&x, &p))
        }
    })
}

fn run_spec(cmd: SpecCmd, g: &Global) -> Result<Out> {
    Ok(match cmd {
        SpecCmd::Level { s, n, emit } => {
            let gl = Global { dim: Some(g.dim.unwrap_or(n + 1)), max_level: Some(g.max_level.unwrap_or(n.max(1))), ..g.clone() };
            let x = TISpace::new(load_space(&s, &gl)?.0);
            let l = spectrum_level(&x, n)?;
            let h = homology(&l.space, l.space.dim.saturating_sub(1).min(n.max(1)))?;
            let mut v = json!({
                "n": n,
                "D": l.space.dim,
                "counts": (0..=l.space.dim).map(|k| l.space.count(k)).collect::<Vec<_>>(),
                "homology": homology_json(&h),
                "sigma_generators": l.sigma_action.len(),
                "i_space": check_ispace(&x).passed(),
            });
            if emit {
                v["level"] = l.to_json();
            }
            Out::with_text(v, homology_text(&h))
        }
        SpecCmd::Structure { s, n } => {
            let gl = Global { max_level: Some(g.max_level.unwrap_or(n + 2)), ..g.clone() };
            let x = TISpace::new(load_space(&s, &gl)?.0);
            Out::report(check_structure_map(&x, n))
        }
    })
}

fn run(cli: Cli) -> Result<Out> {
    let g = cli.g;
    match cli.cmd {
        Cmd::Braid { cmd } => run_braid(cmd),
        Cmd::Binj { cmd } => run_binj(cmd, &g),
        Cmd::Cat { cmd } => run_cat(cmd, &g),
        Cmd::Groth { cmd } => run_groth(cmd, &g),
        Cmd::Phi { cmd } => run_phi(cmd, &g),
        Cmd::Bspace { cmd } => run_bspace(cmd, &g),
        Cmd::Sset { cmd } => run_sset(cmd, &g),
        Cmd::Hocolim { cmd } => run_hocolim(cmd, &g),
        Cmd::Bar { cmd } => run_bar(cmd, &g),
        Cmd::Spec { cmd } => run_spec(cmd, &g),
        Cmd::VerifyAll { profile, fixtures, only } => {
            let p = Profile::by_name(&profile)?;
            let extra = match &fixtures {
                Some(d) => inputs::fixture_dir(d)?,
                None => Vec::new(),
            };
            let mut r = verify_all(&p, g.seed, &extra, &only, g.timing)?;
            if let Some(d) = fixtures {
                for f in &mut r.failures {
                    f.reproducer.push_str(&format!(" --fixtures {d}"));
                }
            }
            Ok(Out::run(r))
        }
    }
}

/// Ignores write errors so a closed pipe ends output quietly.
fn emit(s: &str) {
    let _ = writeln!(std::io::stdout(), "{s}");
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let text = cli.g.text;
    match run(cli) {
        Ok(out) => {
            if text {
                emit(&out.text);
            } else {
                emit(&serde_json::to_string_pretty(&out.value).expect("serializable"));
            }
            ExitCode::from(if out.ok { 0 } else { 1 })
        }
        Err(e) => {
            let kind = match e {
                Error::Dimension(_) => "dimension",
                Error::Parse(_) => "format",
                Error::Invalid(_) => "invalid",
                Error::Truncation(_) => "truncation",
                Error::Rejected(_) => "rejected",
            };
            if text {
                emit(&format!("error: {e}"));
            } else {
                emit(&serde_json::to_string_pretty(&json!({ "error": kind, "message": e.to_string() })).expect("serializable"));
            }
            ExitCode::from(2)
        }
    }
}
