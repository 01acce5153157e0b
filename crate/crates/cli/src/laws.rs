//! The `laws` suite runner.

use std::fmt;
use std::str::FromStr;

use stonekit::catengine::{self, LawReport, Outcome, Universe};
use stonekit::enumerate;
use stonekit::stone::{self, faults, Lat, Top};

use crate::CliError;

pub const MAX_POINTS: usize = 5;
pub const MAX_LATTICE: usize = 16;
/// Hard ceiling of the topology enumeration, even with `--force`.
pub const ENUMERATION_LIMIT: usize = 6;

/// Labeled topology counts, asserted as part of every space universe.
const TOPOLOGY_COUNTS: [usize; 7] = [1, 1, 4, 29, 355, 6942, 209527];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    MonadF,
    MonadI,
    ComonadK,
    AdjunctionOs,
    Lifting,
    Pairing,
    CechStone,
    Ultrafilter,
    Faults,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::MonadF,
        Suite::MonadI,
        Suite::ComonadK,
        Suite::AdjunctionOs,
        Suite::Lifting,
        Suite::Pairing,
        Suite::CechStone,
        Suite::Ultrafilter,
        Suite::Faults,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::MonadF => "monad-f",
            Suite::MonadI => "monad-i",
            Suite::ComonadK => "comonad-k",
            Suite::AdjunctionOs => "adjunction-os",
            Suite::Lifting => "lifting",
            Suite::Pairing => "pairing",
            Suite::CechStone => "cechstone",
            Suite::Ultrafilter => "ultrafilter",
            Suite::Faults => "faults",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| {
            let names: Vec<&str> = Suite::ALL.iter().map(|x| x.name()).collect();
            format!("unknown suite `{s}` (expected one of {})", names.join(", "))
        })
    }
}

#[derive(Debug, Clone)]
pub struct LawOptions {
    pub suite: Suite,
    pub max_points: usize,
    /// Largest lattice size; lattices are downsets of posets on at most 4
    /// elements (5 above 16, 6 above 32).
    pub max_lattice: usize,
    /// Number of sampled topologies per point count above 4.
    pub samples: usize,
    pub seed: u64,
    pub force: bool,
}

impl LawOptions {
    pub fn new(suite: Suite) -> Self {
        LawOptions {
            suite,
            max_points: 3,
            max_lattice: MAX_LATTICE,
            samples: 200,
            seed: enumerate::DEFAULT_SEED,
            force: false,
        }
    }

    fn check_budget(&self) -> Result<(), CliError> {
        if self.max_points > ENUMERATION_LIMIT {
            return Err(CliError::BudgetExceeded(format!(
                "--max-points {} is beyond the enumeration limit of {ENUMERATION_LIMIT}",
                self.max_points
            )));
        }
        if !self.force && self.max_points > MAX_POINTS {
            return Err(CliError::BudgetExceeded(format!(
                "--max-points {} exceeds {MAX_POINTS}; pass --force to run anyway",
                self.max_points
            )));
        }
        if !self.force && self.max_lattice > MAX_LATTICE {
            return Err(CliError::BudgetExceeded(format!(
                "--max-lattice {} exceeds {MAX_LATTICE}; pass --force to run anyway",
                self.max_lattice
            )));
        }
        if self.max_lattice > 64 {
            return Err(CliError::BudgetExceeded("lattices are limited to 64 elements".into()));
        }
        Ok(())
    }
}

/// Every topology on up to four points, then seeded samples above that.
fn spaces(opts: &LawOptions, rep: &mut LawReport) -> Universe<Top> {
    let exhaustive = opts.max_points.min(4);
    let mut u = stone::space_universe(exhaustive);
    for n in 0..=exhaustive {
        let count = u.objects.iter().filter(|(_, x)| x.len() == n).count();
        let outcome = if count == TOPOLOGY_COUNTS[n] {
            Outcome::Pass
        } else {
            Outcome::Fail(format!("{count} topologies, expected {}", TOPOLOGY_COUNTS[n]))
        };
        rep.push(format!("X{n}"), "topology-count", outcome);
    }
    for n in 5..=opts.max_points {
        let sampled = stone::sampled_space_universe(n, opts.samples, opts.seed);
        u.objects.extend(sampled.objects);
    }
    u
}

fn lattices(opts: &LawOptions) -> Universe<Lat> {
    let elements = match opts.max_lattice {
        0..=16 => 4,
        17..=32 => 5,
        _ => 6,
    };
    stone::lattice_universe(elements, opts.max_lattice)
}

/// Runs a suite; the report's lines are in canonical order.
pub fn run(opts: &LawOptions) -> Result<LawReport, CliError> {
    opts.check_budget()?;
    let mut rep = LawReport::new();
    match opts.suite {
        Suite::MonadF => {
            let mut u = spaces(opts, &mut rep);
            stone::add_all_maps(&mut u, opts.max_points.min(2));
            rep.extend(catengine::check_monad_laws(&stone::filter_monad(), &u));
        }
        Suite::MonadI => {
            let mut u = lattices(opts);
            stone::add_all_homs(&mut u, 5);
            rep.extend(catengine::check_monad_laws(&stone::ideal_monad(), &u));
        }
        Suite::ComonadK => {
            let mut u = lattices(opts);
            stone::add_all_homs(&mut u, 5);
            rep.extend(catengine::check_comonad_laws(&stone::ideal_comonad(), &u));
        }
        Suite::AdjunctionOs => {
            let xs = spaces(opts, &mut rep);
            let ls = stone::as_loc(&lattices(opts));
            rep.extend(catengine::check_adjunction(
                &stone::open_spectrum_adjunction(),
                &xs,
                &ls,
            ));
        }
        Suite::Lifting => {
            let xs = spaces(opts, &mut rep);
            rep.extend(stone::lifting_report(&xs, &lattices(opts)));
        }
        Suite::Pairing => {
            let mut u = spaces(opts, &mut rep);
            stone::add_all_maps(&mut u, opts.max_points.min(3));
            rep.extend(stone::check_pairing(&u));
        }
        Suite::CechStone => {
            let xs = spaces(opts, &mut rep);
            rep.extend(stone::cech_stone_report(&xs));
        }
        Suite::Ultrafilter => {
            let xs = spaces(opts, &mut rep);
            rep.extend(stone::ultrafilter_report(&xs));
        }
        Suite::Faults => rep.extend(faults::fault_report()),
    }
    Ok(rep)
}
