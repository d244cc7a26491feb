use std::fmt::Write as _;
use std::fs;
use std::path::Path;
use std::sync::Mutex;

use tensor_restrict::properties::{self, Property};
use tensor_restrict::ranks::{self, TensorRank};
use tensor_restrict::reptheory::{self, RepVector, SchurAlgebra};
use tensor_restrict::restriction::{self, WitnessKind};
use tensor_restrict::tensor::{format_tensor, parse_tensor, parse_tensors};
use tensor_restrict::{linalg, selftest, Budget, Error, Exec, PrimeField, Ratio, Tensor};

use crate::{Cli, Command, Format, PosetCommand, PropertyCommand, RunConfig};

pub const EXIT_TRUE: u8 = 0;
pub const EXIT_FALSE: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_BUDGET: u8 = 3;

#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Budget(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_budget() {
            Failure::Budget(e.to_string())
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

type Outcome = Result<bool, Failure>;

pub fn dispatch(cli: &Cli) -> u8 {
    match run(cli) {
        Ok(true) => EXIT_TRUE,
        Ok(false) => EXIT_FALSE,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Budget(msg)) => {
            eprintln!("error: {msg}");
            EXIT_BUDGET
        }
    }
}

fn run(cli: &Cli) -> Outcome {
    let cfg = &cli.config;
    match &cli.command {
        Command::Restrict {
            s,
            t,
            uniform: _,
            multilinear,
            bruteforce,
        } => restrict(cfg, s, t, *multilinear, *bruteforce),
        Command::Rank { s, r_max } => rank(cfg, s, *r_max),
        Command::SliceRank { s } => slice_rank(cfg, s),
        Command::AnalyticRank { t, oracle } => analytic_rank(cfg, t, *oracle),
        Command::AsymptoticBounds { s, t_max, r_max } => asymptotic_bounds(cfg, s, *t_max, *r_max),
        Command::Weights { v } => weights(cfg, v),
        Command::Spread { v } => spread(cfg, v),
        Command::FOp { v, i, j, b, n } => f_op(cfg, v, *i, *j, *b, *n),
        Command::SchurTable { p, u, d } => schur_table(cfg, *p, *u, *d),
        Command::Property(cmd) => property(cfg, cmd),
        Command::Poset(PosetCommand::Build { p, n, d, dot }) => poset_build(cfg, *p, *n, *d, dot.as_deref()),
        Command::WeakShiftCount { n, m, p } => weak_shift(cfg, *n, *m, *p),
        Command::Selftest { no_controls, only } => run_selftest(cfg, *no_controls, only),
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))
}

fn load_tensor(path: &Path) -> Result<Tensor, Failure> {
    parse_tensor(&read(path)?).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn load_tensors(path: &Path) -> Result<Vec<Tensor>, Failure> {
    parse_tensors(&read(path)?).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn load_vector(path: &Path) -> Result<RepVector, Failure> {
    reptheory::parse_rep_vector(&read(path)?).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn field(p: u32) -> Result<PrimeField, Failure> {
    Ok(PrimeField::new(p)?)
}

fn require_formats(cfg: &RunConfig, command: &str, allowed: &[Format]) -> Result<(), Failure> {
    if cfg.format == Format::Text || allowed.contains(&cfg.format) {
        Ok(())
    } else {
        Err(Failure::Usage(format!("{command} does not support --format {:?}", cfg.format).to_lowercase()))
    }
}

fn restrict(cfg: &RunConfig, s: &Path, t: &Path, multilinear: bool, bruteforce: bool) -> Outcome {
    require_formats(cfg, "restrict", &[])?;
    let (s, t) = (load_tensor(s)?, load_tensor(t)?);
    let budget = cfg.budget();
    let witness = if multilinear {
        restriction::is_restriction_multilinear_with(&s, &t, &budget, cfg.exec())?
    } else if bruteforce {
        restriction::is_restriction_bruteforce(&s, &t, &budget)?
    } else {
        restriction::is_restriction_with(&s, &t, &budget, cfg.exec())?
    };
    let Some(w) = witness else {
        println!("restricts=false");
        return Ok(false);
    };
    let kind = match w.kind {
        WitnessKind::Uniform => "uniform",
        WitnessKind::Multilinear => "multilinear",
    };
    let mut out = format!("# restricts=true kind={kind}\n");
    for (k, m) in w.maps.iter().enumerate() {
        if k > 0 {
            out.push('\n');
        }
        out.push_str(&linalg::format_matrix(m));
    }
    print!("{out}");
    Ok(true)
}

fn rank(cfg: &RunConfig, s: &Path, r_max: usize) -> Outcome {
    require_formats(cfg, "rank", &[Format::Csv])?;
    let s = load_tensor(s)?;
    let lower = ranks::max_flattening_rank(&s);
    let r = ranks::tensor_rank_with(&s, r_max, &cfg.budget(), cfg.exec())?;
    if cfg.format == Format::Csv {
        let (value, status) = match r {
            TensorRank::Exact(k) => (k.to_string(), "exact"),
            TensorRank::AboveCap(k) => (format!(">{k}"), "above_cap"),
            TensorRank::Undetermined { lower } => (format!(">={lower}"), "undetermined"),
        };
        println!("rank,status,flattening_lower\n{value},{status},{lower}");
    } else {
        println!("{r}\nflattening_lower={lower}");
    }
    match r {
        TensorRank::Exact(_) => Ok(true),
        TensorRank::AboveCap(_) => Ok(false),
        TensorRank::Undetermined { lower } => Err(Failure::Budget(format!(
            "rank search at length {lower} exceeds the search-node budget of {}",
            cfg.max_nodes
        ))),
    }
}

fn slice_rank(cfg: &RunConfig, s: &Path) -> Outcome {
    require_formats(cfg, "slice-rank", &[Format::Csv])?;
    let s = load_tensor(s)?;
    let r = ranks::slice_rank_d3_with(&s, &cfg.budget(), cfg.exec())?;
    if cfg.format == Format::Csv {
        println!("slice_rank\n{r}");
    } else {
        println!("slice_rank={r}");
    }
    Ok(true)
}

fn analytic_rank(cfg: &RunConfig, t: &Path, oracle: bool) -> Outcome {
    require_formats(cfg, "analytic-rank", &[Format::Csv])?;
    let t = load_tensor(t)?;
    let budget = cfg.budget();
    let ar = ranks::analytic_rank_with(&t, &budget, cfg.exec())?;
    let check = if oracle {
        let cs = ranks::character_sum_with(&t, &budget, cfg.exec())?;
        Some(cs.expectation())
    } else {
        None
    };
    let agree = check.is_none_or(|e| e == Some(ar.expectation));
    let oracle_value = |e: Option<Ratio<u64>>| match e {
        Some(r) => format!("{}/{}", r.numer(), r.denom()),
        None => "undefined".into(),
    };
    if cfg.format == Format::Csv {
        let mut out = String::from("zero_count,tuples,expectation,rank");
        if check.is_some() {
            out.push_str(",oracle,agree");
        }
        let _ = write!(
            out,
            "\n{},{},{}/{},{}",
            ar.zero_count,
            ar.tuples,
            ar.expectation.numer(),
            ar.expectation.denom(),
            ar.value()
        );
        if let Some(e) = check {
            let _ = write!(out, ",{},{agree}", oracle_value(e));
        }
        println!("{out}");
    } else {
        println!("{ar}");
        if let Some(e) = check {
            println!("oracle={} agree={agree}", oracle_value(e));
        }
    }
    Ok(agree)
}

fn asymptotic_bounds(cfg: &RunConfig, s: &Path, t_max: usize, r_max: usize) -> Outcome {
    require_formats(cfg, "asymptotic-bounds", &[Format::Csv])?;
    let s = load_tensor(s)?;
    let bounds = ranks::asymptotic_rank_bounds(&s, t_max, r_max, &cfg.budget())?;
    let mut out = String::new();
    if cfg.format == Format::Csv {
        out.push_str("t,lower,upper,exact,lower_estimate,upper_estimate\n");
    }
    for b in &bounds {
        let upper = b.upper.map_or("none".to_string(), |u| u.to_string());
        let upper_est = b.upper_estimate().map_or("none".to_string(), |u| format!("{u:.6}"));
        if cfg.format == Format::Csv {
            let _ = writeln!(
                out,
                "{},{},{upper},{},{:.6},{upper_est}",
                b.t,
                b.lower,
                b.exact,
                b.lower_estimate()
            );
        } else {
            let _ = writeln!(
                out,
                "t={} lower={} upper={upper} exact={} lower_estimate={:.6} upper_estimate={upper_est}",
                b.t,
                b.lower,
                b.exact,
                b.lower_estimate()
            );
        }
    }
    print!("{out}");
    Ok(true)
}

fn coords(v: &RepVector) -> String {
    let c: Vec<String> = v.coords.iter().map(u8::to_string).collect();
    c.join(" ")
}

fn weights(cfg: &RunConfig, v: &Path) -> Outcome {
    require_formats(cfg, "weights", &[Format::Csv])?;
    let v = load_vector(v)?;
    let parts = reptheory::weight_decompose(&v);
    let mut out = String::new();
    if cfg.format == Format::Csv {
        out.push_str("weight,coords\n");
        for (w, c) in &parts {
            let _ = writeln!(out, "\"{w}\",{}", coords(c));
        }
    } else {
        for (w, c) in &parts {
            let _ = writeln!(out, "weight={w} coords={}", coords(c));
        }
    }
    print!("{out}");
    Ok(true)
}

fn spread(cfg: &RunConfig, v: &Path) -> Outcome {
    require_formats(cfg, "spread", &[])?;
    let v = load_vector(v)?;
    let s = reptheory::spread_out(&v)?;
    print!(
        "# steps={} weight={}\n{}",
        s.steps,
        s.weight,
        reptheory::format_rep_vector(&s.vector)
    );
    Ok(true)
}

fn f_op(cfg: &RunConfig, v: &Path, i: usize, j: usize, b: u8, n: Option<usize>) -> Outcome {
    require_formats(cfg, "f-op", &[])?;
    if i == 0 || j == 0 {
        return Err(Failure::Usage("indices i and j are 1-based".into()));
    }
    let v = load_vector(v)?;
    let n = n.unwrap_or(v.n);
    let w = reptheory::f_operator(&v, n, i - 1, j - 1, b)?;
    print!("{}", reptheory::format_rep_vector(&w));
    Ok(true)
}

fn schur_table(cfg: &RunConfig, p: u32, u: usize, d: usize) -> Outcome {
    require_formats(cfg, "schur-table", &[])?;
    let algebra = SchurAlgebra::new(field(p)?, u, d, &cfg.budget())?;
    print!("{}", algebra.format_table());
    Ok(true)
}

fn property_for(forbidden: &Path, s: &Tensor) -> Result<Property, Failure> {
    Ok(Property::new(s.field(), s.order(), load_tensors(forbidden)?)?)
}

fn property(cfg: &RunConfig, cmd: &PropertyCommand) -> Outcome {
    require_formats(cfg, "property", &[])?;
    let budget = cfg.budget();
    match cmd {
        PropertyCommand::Member { forbidden, s } => {
            let s = load_tensor(s)?;
            let member = property_for(forbidden, &s)?.member_with(&s, &budget, cfg.exec())?;
            println!("member={member}");
            Ok(member)
        }
        PropertyCommand::SubtensorTest { forbidden, n0, s } => {
            let s = load_tensor(s)?;
            let passes = property_for(forbidden, &s)?.subtensor_test(&s, *n0, &budget)?;
            println!("subtensor_test={passes} n0={n0}");
            Ok(passes)
        }
        PropertyCommand::MinN0 { forbidden, n_max } => {
            let list = load_tensors(forbidden)?;
            let first = list
                .first()
                .ok_or_else(|| Failure::Usage("forbidden list is empty".into()))?;
            let x = Property::new(first.field(), first.order(), list.clone())?;
            let min = properties::minimal_test_size_with(&x, *n_max, &budget, cfg.exec())?;
            let mut out = match min.value {
                Some(v) => format!("n0={v} certified_up_to={}\n", min.certified_up_to),
                None => format!("n0=none certified_up_to={}\n", min.certified_up_to),
            };
            for (n0, t) in &min.counterexamples {
                let _ = write!(out, "\n# rejected n0={n0}\n{}", format_tensor(t));
            }
            print!("{out}");
            Ok(min.value.is_some())
        }
        PropertyCommand::Compile { p, d, side, predicate } => compile(cfg, field(*p)?, *d, *side, predicate),
    }
}

#[derive(Debug, Clone, Copy)]
enum Predicate {
    Zero,
    FlatteningRank(usize),
    TensorRank(usize),
    SliceRank(usize),
}

fn parse_predicate(text: &str) -> Result<Predicate, Failure> {
    let bad = || {
        Failure::Usage(format!(
            "unknown predicate {text:?}: expected zero, flattening-rank:R, tensor-rank:R or slice-rank:R"
        ))
    };
    if text == "zero" {
        return Ok(Predicate::Zero);
    }
    let (name, r) = text.split_once(':').ok_or_else(bad)?;
    let r: usize = r.parse().map_err(|_| bad())?;
    match name {
        "flattening-rank" => Ok(Predicate::FlatteningRank(r)),
        "tensor-rank" => Ok(Predicate::TensorRank(r)),
        "slice-rank" => Ok(Predicate::SliceRank(r)),
        _ => Err(bad()),
    }
}

fn holds(pred: Predicate, t: &Tensor, budget: &Budget) -> Result<bool, Error> {
    Ok(match pred {
        Predicate::Zero => t.data().iter().all(|&x| x == 0),
        Predicate::FlatteningRank(r) => ranks::max_flattening_rank(t) <= r,
        Predicate::TensorRank(r) => match ranks::tensor_rank_with(t, r, budget, Exec::Sequential)? {
            TensorRank::Exact(k) => k <= r,
            TensorRank::AboveCap(_) => false,
            TensorRank::Undetermined { lower } if lower > r => false,
            TensorRank::Undetermined { .. } => {
                return Err(Error::Budget {
                    what: "rank search",
                    needed: budget.search_nodes + 1,
                    budget: budget.search_nodes,
                })
            }
        },
        Predicate::SliceRank(r) => ranks::slice_rank_d3_with(t, budget, Exec::Sequential)? <= r,
    })
}

fn compile(cfg: &RunConfig, k: PrimeField, d: usize, side: usize, predicate: &str) -> Outcome {
    let pred = parse_predicate(predicate)?;
    if matches!(pred, Predicate::SliceRank(_)) && d != 3 {
        return Err(Failure::Usage("slice-rank predicates need d = 3".into()));
    }
    let budget = cfg.budget();
    let failed: Mutex<Option<Error>> = Mutex::new(None);
    let x = properties::compile(
        k,
        d,
        side,
        |t| match holds(pred, t, &budget) {
            Ok(v) => v,
            Err(e) => {
                failed.lock().expect("poisoned").get_or_insert(e);
                true
            }
        },
        &budget,
    )?;
    if let Some(e) = failed.into_inner().expect("poisoned") {
        return Err(e.into());
    }
    let mut out = format!(
        "# predicate {predicate}: {} forbidden, valid up to side {side}\n",
        x.forbidden.len()
    );
    for (i, t) in x.forbidden.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        out.push_str(&format_tensor(t));
    }
    print!("{out}");
    Ok(true)
}

fn poset_build(cfg: &RunConfig, p: u32, n: usize, d: usize, dot: Option<&Path>) -> Outcome {
    let atlas = properties::build_poset_with(field(p)?, n, d, &cfg.budget(), cfg.exec())?;
    if let Some(path) = dot {
        fs::write(path, atlas.to_dot())
            .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?;
    }
    match cfg.format {
        Format::Csv => print!("{}", atlas.to_csv()),
        Format::Dot => print!("{}", atlas.to_dot()),
        Format::Text => {
            let mut out = format!(
                "classes={} covers={} acyclic={} transitively_reduced={}\n",
                atlas.classes.len(),
                atlas.covers.len(),
                atlas.is_acyclic(),
                atlas.is_transitively_reduced()
            );
            for k in &atlas.classes {
                let _ = writeln!(
                    out,
                    "class={} representative={} size={} orbits={} level={}",
                    k.id,
                    atlas.label(k),
                    k.size,
                    k.orbits,
                    k.level
                );
            }
            for (lo, up) in &atlas.covers {
                let _ = writeln!(out, "cover={lo}<{up}");
            }
            print!("{out}");
        }
    }
    Ok(true)
}

fn weak_shift(cfg: &RunConfig, n: usize, m: usize, p: u32) -> Outcome {
    require_formats(cfg, "weak-shift-count", &[Format::Csv])?;
    let w = properties::weak_shift_count_with(n, m, p, &cfg.budget(), cfg.exec())?;
    if cfg.format == Format::Csv {
        println!("count,predicted,agree\n{},{},{}", w.count, w.predicted, w.agree());
    } else {
        println!("count={} predicted={} agree={}", w.count, w.predicted, w.agree());
    }
    Ok(w.agree())
}

fn run_selftest(cfg: &RunConfig, no_controls: bool, only: &[u8]) -> Outcome {
    require_formats(cfg, "selftest", &[])?;
    let mut checks = if only.is_empty() {
        selftest::run_all(cfg.seed)
    } else {
        let ids: Vec<usize> = only.iter().map(|&i| i as usize).collect();
        selftest::run_selected(cfg.seed, &ids)
    };
    if !no_controls {
        checks.extend(selftest::negative_controls());
    }
    let passed = checks.iter().filter(|c| c.passed).count();
    for c in &checks {
        println!("{c}");
    }
    println!("selftest: {passed}/{} passed (seed {:#x})", checks.len(), cfg.seed);
    Ok(passed == checks.len())
}
