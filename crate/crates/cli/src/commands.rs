//! The compute subcommands. Each prints a result document followed by `#`
//! summary lines, so the output can be fed back in as input.

use std::sync::Arc;

use stonekit::dlat::{DistLattice, IdealLattice};
use stonekit::frame;
use stonekit::topspace::{self, FilterSpace, FinSpace};

use crate::doc::{Document, Structure};
use crate::CliError;

/// What a compute command produced: the printable text and whether every
/// verdict it reports held.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub ok: bool,
}

impl Output {
    fn new(doc: Document, summary: Vec<String>) -> Self {
        Self::with_verdict(doc, summary, true)
    }

    fn with_verdict(doc: Document, summary: Vec<String>, ok: bool) -> Self {
        let mut text = doc.to_string();
        for line in summary {
            text.push_str("# ");
            text.push_str(&line);
            text.push('\n');
        }
        Output { text, ok }
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn plural(n: usize, word: &str) -> String {
    if n == 1 {
        format!("1 {word}")
    } else {
        format!("{n} {word}s")
    }
}

fn need_lattice<'a>(doc: &'a Document, command: &str) -> Result<&'a Arc<DistLattice>, CliError> {
    match &doc.structure {
        Structure::Lattice(l) => Ok(l),
        Structure::Space(_) => Err(CliError::WrongKind {
            command: command.to_string(),
            expected: "lattice",
        }),
    }
}

fn need_space<'a>(doc: &'a Document, command: &str) -> Result<&'a Arc<FinSpace>, CliError> {
    match &doc.structure {
        Structure::Space(x) => Ok(x),
        Structure::Lattice(_) => Err(CliError::WrongKind {
            command: command.to_string(),
            expected: "space",
        }),
    }
}

pub fn spectrum(doc: &Document) -> Result<Output, CliError> {
    let l = need_lattice(doc, "spectrum")?;
    let s = frame::spectrum(l);
    let spatial = frame::spatiality_iso(l).bijective;
    let summary = vec![format!(
        "{}, {}; a ↦ Σ_a bijective: {}",
        plural(s.len(), "point"),
        plural(s.opens().len(), "open"),
        yes(spatial)
    )];
    Ok(Output::with_verdict(
        Document::space(format!("Σ({})", doc.name), s),
        summary,
        spatial,
    ))
}

pub fn ideals(doc: &Document) -> Result<Output, CliError> {
    let l = need_lattice(doc, "ideals")?;
    let il = IdealLattice::new(l);
    let principal = il.ideals().iter().all(|&m| (0..l.len()).any(|a| l.below(a) == m));
    let mut summary = vec![format!(
        "{}, all principal: {}",
        plural(il.ideals().len(), "ideal"),
        yes(principal)
    )];
    for &m in il.ideals() {
        summary.push(format!("ideal {}", stonekit::bits::render(m, l.labels())));
    }
    Ok(Output::new(
        Document::lattice(format!("𝔍({})", doc.name), il.lattice().clone()),
        summary,
    ))
}

pub fn filters(doc: &Document) -> Result<Output, CliError> {
    let x = need_space(doc, "filters")?;
    let fx = FilterSpace::new(x);
    let space = fx.space().clone();
    let mut summary = vec![plural(space.len(), "open prime filter")];
    for p in 0..space.len() {
        let opens: Vec<String> = fx.filter(p).opens().into_iter().map(|u| x.render(u)).collect();
        summary.push(format!("filter {}: {}", space.label(p), opens.join(" ")));
    }
    Ok(Output::new(Document::space(format!("F({})", doc.name), space), summary))
}

pub fn sobrify(doc: &Document) -> Result<Output, CliError> {
    let x = need_space(doc, "sobrify")?;
    let s = topspace::sobrification(x);
    let space = s.spectrum.space().clone();
    let summary = vec![format!(
        "sober: {}; {} → {}",
        yes(topspace::is_sober(x)),
        plural(x.len(), "point"),
        plural(space.len(), "point")
    )];
    Ok(Output::new(
        Document::space(format!("sob({})", doc.name), space),
        summary,
    ))
}

pub fn t0(doc: &Document) -> Result<Output, CliError> {
    let x = need_space(doc, "t0")?;
    let (q, _) = topspace::t0_quotient(x);
    let summary = vec![format!(
        "T0: {}; {} → {}",
        yes(x.is_t0()),
        plural(x.len(), "point"),
        plural(q.len(), "point")
    )];
    Ok(Output::new(Document::space(format!("t0({})", doc.name), q), summary))
}

pub fn hausdorff(doc: &Document) -> Result<Output, CliError> {
    let x = need_space(doc, "hausdorff")?;
    let (r, _) = topspace::hausdorff_reflection(x);
    let summary = vec![plural(r.len(), "quasi-component")];
    Ok(Output::new(Document::space(format!("R({})", doc.name), r), summary))
}

pub fn center(doc: &Document) -> Result<Output, CliError> {
    let l = need_lattice(doc, "center")?;
    let c = frame::creg_coreflection(l);
    let atoms = c.lattice.len().trailing_zeros() as usize;
    let summary = vec![format!(
        "{} complemented, Boolean with {}",
        plural(c.lattice.len(), "element"),
        plural(atoms, "atom")
    )];
    Ok(Output::new(
        Document::lattice(format!("CReg({})", doc.name), c.lattice),
        summary,
    ))
}

/// The way-below relation, printed as the lattice it generates; the
/// summary reports whether it coincides with the order.
pub fn waybelow(doc: &Document) -> Result<Output, CliError> {
    let l = need_lattice(doc, "waybelow")?;
    let wb = frame::way_below(l).map_err(|e| CliError::Core(e.to_string()))?;
    let pairs = wb.pairs();
    let equals_order = (0..l.len()).all(|b| wb.approximants(b) == l.below(b));
    let labelled: Vec<(&str, &str)> = pairs.iter().map(|&(a, b)| (l.label(a), l.label(b))).collect();
    let elements: Vec<&str> = l.labels().iter().map(String::as_str).collect();
    let generated = DistLattice::from_pairs(&elements, &labelled).map_err(|e| CliError::Core(e.to_string()))?;
    let summary = vec![format!("{} way-below pairs; ≪ = ≤: {}", pairs.len(), yes(equals_order))];
    Ok(Output::with_verdict(
        Document::lattice(format!("≪({})", doc.name), Arc::new(generated)),
        summary,
        equals_order,
    ))
}

pub fn cechstone(doc: &Document) -> Result<Output, CliError> {
    let x = need_space(doc, "cechstone")?;
    let report = topspace::cech_stone_square(x);
    let (r, _) = topspace::hausdorff_reflection(&topspace::filter_space(x));
    let verdict = if report.iso { "ISO" } else { "NOT ISO" };
    let sides = if report.pointfree_points == report.pointset_points {
        format!("both sides: {} — {verdict}", plural(report.pointfree_points, "point"))
    } else {
        format!(
            "Σ CReg 𝒪 F: {}, R F: {} — {verdict}",
            plural(report.pointfree_points, "point"),
            plural(report.pointset_points, "point")
        )
    };
    Ok(Output::with_verdict(
        Document::space(format!("RF({})", doc.name), r),
        vec![sides],
        report.iso,
    ))
}
