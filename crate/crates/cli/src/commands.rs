//! Command implementations. Each returns a [`Report`]; `main` renders it.

use std::fmt;

use anyhow::{bail, Context, Result};
use flagbound::bounds::{
    best_bound, disjointness_implied, m_disjointness_implied, min_distance_lower_bound_for_disjoint,
    refined_if_useful, variety_bound_with, BoundCertificate, Comparison, SubspaceBoundProvider,
    Theorem,
};
use flagbound::distvec::{
    enumerate_distance_vectors, max_flag_distance, parse_index_list, DistanceVector, TupleDisplay,
    TypeVector,
};
use flagbound::dvalues::{
    canonical_difference_multiset, canonical_patterns, max_distance_with_zeros, patterns_of_size,
    ZeroPattern,
};
use flagbound::flagalg::{
    code_census, default_mode, distance_vector_of_pair, is_disjoint, is_m_disjoint, oracle_check,
    parse_flag_code, projected_distances, realize_distance_vector, Flag, OracleMode,
};
use flagbound::qcalc::{evaluate, QPolynomial};
use flagbound::{Error, Execution};

use crate::output::{Cell, Report, Table};

/// Bad command-line input; exits with status 2.
#[derive(Debug)]
pub struct Usage(pub String);

impl fmt::Display for Usage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn usage(e: Error) -> anyhow::Error {
    Usage(e.to_string()).into()
}

/// The type selected by `--full` / `-t`; full when neither is given.
pub fn select_type(n: usize, types: Option<&str>) -> Result<TypeVector> {
    match types {
        Some(list) => TypeVector::parse(list, n).map_err(usage),
        None => TypeVector::full(n).map_err(usage),
    }
}

fn type_label(t: &TypeVector) -> String {
    if t.is_full() {
        format!("full type on n = {}", t.ambient())
    } else {
        format!("type {} on n = {}", t, t.ambient())
    }
}

fn multiset(items: &[usize]) -> String {
    let inner: Vec<String> = items.iter().map(usize::to_string).collect();
    format!("{{{{{}}}}}", inner.join(","))
}

/// Values of `D(i_1, ..., i_M)`.
pub fn dvalues(t: &TypeVector, m: Option<usize>, pattern: Option<&str>) -> Result<Report> {
    let mut report = Report::new("dvalues");
    report.param("n", t.ambient());
    report.param("type", t);
    let r = t.len();
    let n = t.ambient();
    let pattern = match pattern {
        Some(p) => {
            let z: ZeroPattern = p.parse().map_err(usage)?;
            z.check_for(t).map_err(usage)?;
            if z.is_empty() {
                bail!(Usage("--pattern needs at least one position".into()));
            }
            if m.is_some_and(|m| m != z.len()) {
                bail!(Usage(format!("pattern {z} does not have M = {} positions", m.unwrap())));
            }
            report.param("pattern", &z);
            Some(z)
        }
        None => None,
    };
    if let Some(m) = m {
        if m == 0 || m > r {
            bail!(Usage(format!("M = {m} outside 1..={r}")));
        }
        report.param("M", m);
    }
    let sizes: Vec<usize> = match (&pattern, m) {
        (Some(z), _) => vec![z.len()],
        (None, Some(m)) => vec![m],
        (None, None) => (1..=r).collect(),
    };
    let full = TypeVector::full(n)?;
    let mut table = if t.is_full() {
        Table::new(
            format!("D(i_1,...,i_M) for the {}", type_label(t)),
            &["M", "pattern", "differences", "vector", "value"],
        )
    } else {
        Table::new(
            format!("D(i_1,...,i_M) for {}", type_label(t)),
            &["M", "pattern", "full-type vector", "vector", "value"],
        )
    };
    for size in sizes {
        let patterns: Vec<ZeroPattern> = match &pattern {
            Some(z) => vec![z.clone()],
            None if t.is_full() => canonical_patterns(n, size),
            None => patterns_of_size(r, size).collect(),
        };
        for z in patterns {
            let (v, value) = max_distance_with_zeros(t, &z)?;
            let middle = if t.is_full() {
                multiset(&canonical_difference_multiset(n, &z)?)
            } else {
                let zf = ZeroPattern::new(z.dims_in(t))?;
                max_distance_with_zeros(&full, &zf)?.0.to_string()
            };
            table.push(vec![
                size.into(),
                z.to_string().into(),
                middle.into(),
                v.to_string().into(),
                value.into(),
            ]);
        }
    }
    report.tables.push(table);
    Ok(report)
}

/// `D(d, t, n)` in lexicographic order.
pub fn enumerate(d: usize, t: &TypeVector) -> Result<Report> {
    let mut report = Report::new("enumerate");
    report.param("d", d);
    report.param("n", t.ambient());
    report.param("type", t);
    let mut vs = enumerate_distance_vectors(d, t).map_err(usage)?;
    vs.sort_by(|a, b| a.comps().cmp(b.comps()));
    let mut table = Table::new(
        format!("distance vectors at d = {d} for {} ({} vectors)", type_label(t), vs.len()),
        &["vector"],
    );
    for v in vs {
        table.push(vec![v.to_string().into()]);
    }
    report.tables.push(table);
    Ok(report)
}

pub struct BoundsArgs<'a> {
    pub t: &'a TypeVector,
    pub d: Option<usize>,
    pub q: Option<u64>,
    pub overrides: Option<(String, String)>,
    pub per_theorem: bool,
}

fn is_prime_power(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let p = (2..)
        .take_while(|p| p * p <= q)
        .find(|p| q.is_multiple_of(*p))
        .unwrap_or(q);
    let mut x = q;
    while x.is_multiple_of(p) {
        x /= p;
    }
    x == 1
}

fn bound_cell(bound: &QPolynomial, q: Option<u64>) -> Result<Cell> {
    Ok(match q {
        None => bound.to_string().into(),
        Some(q) => evaluate(bound, q)?.to_string().into(),
    })
}

fn variety_name(c: &BoundCertificate, n: usize) -> String {
    match c.theorem {
        Theorem::Grassmannian => format!("|G_q({},{n})|", c.dims[0]),
        _ => format!("|F_q({},{n})|", TupleDisplay(&c.dims)),
    }
}

fn refined_name(c: &BoundCertificate, n: usize) -> String {
    format!("A_q({n},{},{})", c.bar_d.unwrap_or(0), c.dims[0])
}

fn justification(c: &BoundCertificate) -> String {
    format!("D{}={}", c.pattern, c.justification)
}

fn provider_for(args: &BoundsArgs, report: &mut Report) -> Result<SubspaceBoundProvider> {
    let mut provider = SubspaceBoundProvider::new();
    if let Some((path, text)) = &args.overrides {
        report.param("overrides", path);
        let warnings = provider
            .load_overrides(text)
            .with_context(|| format!("reading override file {path}"))?;
        report.warnings.extend(warnings.into_iter().map(|w| format!("{path}: {w}")));
    }
    Ok(provider)
}

fn note_certificate(report: &mut Report, d: usize, c: &BoundCertificate) {
    if c.uses_fallback() {
        let e = &c.provenance[0];
        report.warnings.push(format!(
            "d = {d}: A_q({},{},{}) rests on the generic fallback, {}",
            e.n, e.d, e.k, e.source
        ));
    }
    for alt in &c.alternatives {
        report.warnings.push(format!(
            "d = {d}: {} bound {} at {} is not comparable for every q with the selected {}",
            alt.theorem, alt.bound, alt.pattern, c.bound
        ));
    }
}

/// Bound certificates, one row per `d` or split by theorem.
pub fn bounds(args: BoundsArgs) -> Result<Report> {
    let t = args.t;
    let n = t.ambient();
    let mut report = Report::new("bounds");
    report.param("n", n);
    report.param("type", t);
    let cmp = match args.q {
        Some(q) if !is_prime_power(q) => bail!(Usage(format!("q = {q} is not a prime power"))),
        Some(q) => {
            report.param("q", q);
            Comparison::At(q)
        }
        None => Comparison::Symbolic,
    };
    let provider = provider_for(&args, &mut report)?;
    let max = max_flag_distance(t);
    let ds: Vec<usize> = match args.d {
        Some(d) => {
            if d % 2 != 0 || d < 2 || d > max {
                bail!(Usage(format!("d = {d} is not an even value in [2, {max}]")));
            }
            report.param("d", d);
            vec![d]
        }
        None => (2..=max).step_by(2).collect(),
    };
    if max < 2 {
        bail!(Usage(format!("{} has no positive flag distance", type_label(t))));
    }
    if args.per_theorem {
        report.param("per-theorem", true);
        per_theorem(&mut report, t, &ds, &provider, cmp, args.q)?;
        return Ok(report);
    }
    let mut table = Table::new(
        format!("upper bounds for A_q^f({n}, d, t), {}", type_label(t)),
        &["d", "theorem", "justification", "bar-d", "via", "bound"],
    );
    for &d in &ds {
        let c = best_bound(d, t, &provider, cmp)?;
        note_certificate(&mut report, d, &c);
        let via = if c.theorem.is_refined() {
            refined_name(&c, n)
        } else {
            variety_name(&c, n)
        };
        table.push(vec![
            d.into(),
            c.theorem.to_string().into(),
            justification(&c).into(),
            c.bar_d.map_or(Cell::from("-"), Cell::from),
            via.into(),
            bound_cell(&c.bound, args.q)?,
        ]);
    }
    report.tables.push(table);
    Ok(report)
}

fn per_theorem(
    report: &mut Report,
    t: &TypeVector,
    ds: &[usize],
    provider: &SubspaceBoundProvider,
    cmp: Comparison,
    q: Option<u64>,
) -> Result<()> {
    let n = t.ambient();
    let mut variety_rows: Vec<(usize, usize, BoundCertificate)> = Vec::new();
    let mut refined = Table::new(
        format!("refined bounds A_q(n, bar-d_i, t_i), {}", type_label(t)),
        &["d", "i", "bar-d_i", "via", "bound", "source"],
    );
    for &d in ds {
        let v = variety_bound_with(d, t, cmp, Execution::default())?;
        if let Some(r) = refined_if_useful(d, t, provider, cmp, &v)? {
            note_certificate(report, d, &r);
            refined.push(vec![
                d.into(),
                r.pattern.positions()[0].into(),
                r.bar_d.unwrap_or(0).into(),
                refined_name(&r, n).into(),
                bound_cell(&r.bound, q)?,
                r.provenance[0].source.clone().into(),
            ]);
        }
        note_certificate(report, d, &v);
        match variety_rows.last_mut() {
            Some((_, hi, prev)) if prev.pattern == v.pattern && prev.bound == v.bound && *hi + 2 == d => {
                *hi = d;
            }
            _ => variety_rows.push((d, d, v)),
        }
    }
    let mut variety = Table::new(
        format!("variety bounds |F_q(dims, n)|, {}", type_label(t)),
        &["d", "justification", "via", "bound"],
    );
    for (lo, hi, c) in variety_rows {
        let range = if lo == hi { lo.to_string() } else { format!("{lo}-{hi}") };
        variety.push(vec![
            range.into(),
            justification(&c).into(),
            variety_name(&c, n).into(),
            bound_cell(&c.bound, q)?,
        ]);
    }
    report.tables.push(variety);
    report.tables.push(refined);
    Ok(())
}

fn yes_no(b: bool) -> Cell {
    Cell::from(if b { "yes" } else { "no" })
}

/// Census, disjointness and the distance floor for a code file.
pub fn verify(path: &str, text: &str, patterns: &[String]) -> Result<Report> {
    let code = parse_flag_code(text).with_context(|| format!("reading code file {path}"))?;
    let t = code.type_vector().clone();
    let r = t.len();
    let mut report = Report::new("verify");
    report.param("file", path);
    let census = code_census(&code);

    let mut summary = Table::new("code summary", &["property", "value"]);
    summary.push(vec!["q".into(), (code.modulus() as u64).into()]);
    summary.push(vec!["n".into(), t.ambient().into()]);
    summary.push(vec!["type".into(), t.to_string().into()]);
    summary.push(vec!["flags".into(), code.len().into()]);
    summary.push(vec!["pairs".into(), census.pairs.len().into()]);
    summary.push(vec!["minimum distance".into(), census.min_distance.into()]);
    report.tables.push(summary);

    let mut at_min = Table::new("distance vectors at the minimum distance", &["vector"]);
    for v in &census.vectors_at_min {
        at_min.push(vec![v.to_string().into()]);
    }
    report.tables.push(at_min);

    let mut pairs = Table::new("pair census", &["flags", "distance", "vector"]);
    for p in &census.pairs {
        pairs.push(vec![
            format!("{},{}", p.i + 1, p.j + 1).into(),
            p.distance.into(),
            p.vector.to_string().into(),
        ]);
    }
    report.tables.push(pairs);

    let projected = projected_distances(&code);
    let mut proj = Table::new("projected codes", &["position", "dimension", "distinct subspaces", "d_S"]);
    for (pos, &ds) in projected.iter().enumerate() {
        let distinct: std::collections::HashSet<_> =
            code.flags().iter().map(|f| &f.subspaces()[pos]).collect();
        proj.push(vec![(pos + 1).into(), t.dim(pos + 1).into(), distinct.len().into(), ds.into()]);
    }
    report.tables.push(proj);

    let d = census.min_distance;
    let mut disj = Table::new(
        "disjointness by pattern",
        &["pattern", "disjoint", "witness", "implied by distance"],
    );
    for p in patterns {
        let z: ZeroPattern = p.parse().map_err(usage)?;
        z.check_for(&t).map_err(usage)?;
        if z.is_empty() {
            bail!(Usage("--pattern needs at least one position".into()));
        }
        let rep = is_disjoint(&code, &z)?;
        let implied = code.len() > 1 && disjointness_implied(d, &t, &z)?;
        disj.push(vec![
            z.to_string().into(),
            yes_no(rep.disjoint),
            rep.witness
                .map_or(Cell::from("-"), |(a, b)| format!("flags {} and {}", a + 1, b + 1).into()),
            yes_no(implied),
        ]);
    }
    if !patterns.is_empty() {
        report.tables.push(disj);
    }

    let mut mdisj = Table::new(
        "M-disjointness and distance floor",
        &["M", "disjoint", "failing pattern", "witness", "implied by distance", "distance floor"],
    );
    for m in 1..=r {
        let rep = is_m_disjoint(&code, m)?;
        let implied = code.len() > 1 && m_disjointness_implied(d, &t, m)?;
        let floor = if rep.disjoint && code.len() > 1 {
            let f = min_distance_lower_bound_for_disjoint(&projected, m)?;
            if d < f {
                report.failed = true;
                report.warnings.push(format!("M = {m}: minimum distance {d} is below the floor {f}"));
            }
            Cell::from(f)
        } else {
            Cell::from("-")
        };
        let (pat, wit) = match &rep.failure {
            Some((z, a, b)) => (Cell::from(z.to_string()), Cell::from(format!("flags {} and {}", a + 1, b + 1))),
            None => (Cell::from("-"), Cell::from("-")),
        };
        mdisj.push(vec![m.into(), yes_no(rep.disjoint), pat, wit, yes_no(implied), floor]);
    }
    report.tables.push(mdisj);
    Ok(report)
}

fn flag_table(title: &str, f: &Flag) -> Table {
    let mut table = Table::new(title, &["row", "basis vector"]);
    let m = f.nested_basis();
    for (k, row) in m.row_vecs().iter().enumerate() {
        let entries: Vec<String> = row.iter().map(u32::to_string).collect();
        table.push(vec![(k + 1).into(), entries.join(" ").into()]);
    }
    table
}

/// Two flags realizing a distance vector, re-measured.
pub fn realize(v: &str, t: &TypeVector, q: u64) -> Result<Report> {
    let comps = parse_index_list(v).map_err(usage)?;
    if comps.len() != t.len() {
        bail!(Usage(format!(
            "vector {} has {} components, type {t} needs {}",
            TupleDisplay(&comps),
            comps.len(),
            t.len()
        )));
    }
    let dv = DistanceVector::new(comps, t).map_err(usage)?;
    let mut report = Report::new("realize");
    report.param("n", t.ambient());
    report.param("type", t);
    report.param("q", q);
    report.param("vector", &dv);
    let (f, g) = realize_distance_vector(&dv, q).map_err(|e| match e {
        Error::Validation(_) | Error::Domain(_) => usage(e),
        e => e.into(),
    })?;
    let measured = distance_vector_of_pair(&f, &g)?;
    report.tables.push(flag_table("flag F (nested basis)", &f));
    report.tables.push(flag_table("flag F' (nested basis)", &g));
    let mut check = Table::new("round trip", &["requested", "measured", "match"]);
    let ok = measured == dv;
    check.push(vec![dv.to_string().into(), measured.to_string().into(), yes_no(ok)]);
    report.tables.push(check);
    report.failed = !ok;
    Ok(report)
}

pub struct OracleArgs {
    pub q: u64,
    pub mode: Option<String>,
    pub pairs: u64,
    pub seed: u64,
}

/// Brute force against the characterization, one row per `d`.
pub fn oracle(t: &TypeVector, args: OracleArgs) -> Result<Report> {
    let mode = match args.mode.as_deref() {
        None => default_mode(t, args.q).map_err(usage)?,
        Some("exhaustive") => OracleMode::Exhaustive,
        Some("anchored") => OracleMode::Anchored,
        Some("sampled") => OracleMode::Sampled {
            pairs: args.pairs,
            seed: args.seed,
        },
        Some(other) => bail!(Usage(format!("unknown oracle mode {other:?}"))),
    };
    let mut report = Report::new("oracle-check");
    report.param("n", t.ambient());
    report.param("type", t);
    report.param("q", args.q);
    let mode_name = match mode {
        OracleMode::Exhaustive => "exhaustive".to_string(),
        OracleMode::Anchored => "anchored".to_string(),
        OracleMode::Sampled { pairs, seed } => format!("sampled ({pairs} pairs, seed {seed})"),
    };
    report.param("mode", &mode_name);
    let rows = oracle_check(t, args.q, mode, Execution::default()).map_err(|e| match e {
        Error::Validation(_) | Error::Domain(_) => usage(e),
        e => e.into(),
    })?;
    let sampled = matches!(mode, OracleMode::Sampled { .. });
    let mut table = Table::new(
        format!("oracle check, {}, q = {}, {mode_name}", type_label(t), args.q),
        &["d", "predicted", "observed", "missing", "unexpected", "status"],
    );
    for row in rows {
        // A sample can miss rare vectors; only unexpected vectors fail it.
        let pass = row.unexpected.is_empty() && (sampled || row.missing.is_empty());
        report.failed |= !pass;
        table.push(vec![
            row.d.into(),
            row.predicted.into(),
            row.observed.into(),
            row.missing.len().into(),
            row.unexpected.len().into(),
            Cell::from(if pass { "pass" } else { "FAIL" }),
        ]);
    }
    report.tables.push(table);
    Ok(report)
}

/// Every reproduction of the worked example on `F_q^7`.
pub fn tables() -> Result<Report> {
    let mut report = Report::new("tables");
    let full7 = TypeVector::full(7)?;
    let t = TypeVector::new(vec![1, 3, 5, 6], 7)?;
    report.absorb(dvalues(&full7, None, None)?);
    report.absorb(dvalues(&t, None, None)?);
    for ty in [&full7, &t] {
        report.absorb(bounds(BoundsArgs {
            t: ty,
            d: None,
            q: None,
            overrides: None,
            per_theorem: true,
        })?);
    }
    report.absorb(enumerate(20, &full7)?);
    report.absorb(enumerate(12, &t)?);
    report.absorb(enumerate(14, &t)?);
    Ok(report)
}
