//! Structured outcomes of law suites, and the enumeration budget.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Debug;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FailureKind {
    /// Both sides are well-typed but differ.
    Law,
    /// A component has the wrong source or target.
    Shape,
    /// A composite could not be formed.
    IllTyped,
    /// A candidate datum is not a morphism of its category.
    NotAMorphism,
    MissingWitness,
    NotEnumerable,
}

/// A morphism (or object) rendering plus a short digest of it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub digest: String,
    pub repr: String,
}

impl Witness {
    pub fn of<T: Debug>(value: &T) -> Self {
        let repr = format!("{value:?}");
        Witness {
            digest: digest(&repr),
            repr,
        }
    }
}

/// FNV-1a, 64 bit, hex encoded.
pub fn digest(text: &str) -> String {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in text.bytes() {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    format!("{h:016x}")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub kind: FailureKind,
    pub instantiation: Vec<String>,
    pub lhs: Option<Witness>,
    pub rhs: Option<Witness>,
    pub message: String,
}

/// Failures kept per law; later ones are only counted.
pub const MAX_FAILURES: usize = 25;

/// Outcome of one law (diagram family) over all of its instantiations.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LawReport {
    pub law: String,
    /// The diagram being checked, written out.
    pub diagram: String,
    pub status: Status,
    pub checked: u64,
    pub exhaustive: bool,
    pub failures: Vec<Failure>,
    /// Failures beyond [`MAX_FAILURES`].
    #[serde(default)]
    pub omitted: u64,
}

impl LawReport {
    pub fn new(law: impl Into<String>, diagram: impl Into<String>) -> Self {
        LawReport {
            law: law.into(),
            diagram: diagram.into(),
            status: Status::Pass,
            checked: 0,
            exhaustive: true,
            failures: Vec::new(),
            omitted: 0,
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn tick(&mut self) {
        self.checked += 1;
    }

    pub fn fail(&mut self, failure: Failure) {
        self.status = Status::Fail;
        if self.failures.len() < MAX_FAILURES {
            self.failures.push(failure);
        } else {
            self.omitted += 1;
        }
    }

    pub fn failure_count(&self) -> u64 {
        self.failures.len() as u64 + self.omitted
    }

    pub fn fail_with(
        &mut self,
        kind: FailureKind,
        instantiation: Vec<String>,
        message: impl Into<String>,
    ) {
        self.fail(Failure {
            kind,
            instantiation,
            lhs: None,
            rhs: None,
            message: message.into(),
        });
    }

    /// Folds the counts and failures of `other` into `self`, prefixing each
    /// failure's instantiation with `context`.
    pub fn absorb(&mut self, other: LawReport, context: &[String]) {
        self.checked += other.checked;
        self.exhaustive &= other.exhaustive;
        self.omitted += other.omitted;
        for mut f in other.failures {
            let mut inst = context.to_vec();
            inst.append(&mut f.instantiation);
            f.instantiation = inst;
            self.fail(f);
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub subject: String,
    pub status: Status,
    pub seed: u64,
    pub laws: Vec<LawReport>,
}

impl CheckReport {
    pub fn new(subject: impl Into<String>, budget: &Budget) -> Self {
        CheckReport {
            subject: subject.into(),
            status: Status::Pass,
            seed: budget.seed,
            laws: Vec::new(),
        }
    }

    pub fn push(&mut self, law: LawReport) {
        if !law.passed() {
            self.status = Status::Fail;
        }
        self.laws.push(law);
    }

    pub fn extend(&mut self, other: CheckReport) {
        for law in other.laws {
            self.push(law);
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn law(&self, name: &str) -> Option<&LawReport> {
        self.laws.iter().find(|l| l.law == name)
    }

    pub fn failed_laws(&self) -> Vec<&str> {
        self.laws
            .iter()
            .filter(|l| !l.passed())
            .map(|l| l.law.as_str())
            .collect()
    }

    pub fn failure_count(&self) -> u64 {
        self.laws.iter().map(LawReport::failure_count).sum()
    }

    pub fn checked(&self) -> u64 {
        self.laws.iter().map(|l| l.checked).sum()
    }
}

/// Caps the number of instantiations per law. Within the cap every tuple is
/// checked; beyond it a seeded sample of `max_tuples` tuples is drawn.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    pub max_tuples: usize,
    pub seed: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_tuples: 10_000,
            seed: 0,
        }
    }
}

impl Budget {
    pub fn new(max_tuples: usize, seed: u64) -> Self {
        Budget { max_tuples, seed }
    }

    /// Index tuples over pools of the given sizes, plus whether the list is
    /// exhaustive. `salt` decorrelates the samples of different laws.
    pub fn tuples(&self, sizes: &[usize], salt: &str) -> (Vec<Vec<usize>>, bool) {
        if sizes.contains(&0) {
            return (Vec::new(), true);
        }
        let total = sizes
            .iter()
            .try_fold(1usize, |acc, &n| acc.checked_mul(n));
        match total {
            Some(t) if t <= self.max_tuples => (odometer(sizes), true),
            _ => {
                let seed = self.seed ^ u64::from_str_radix(&digest(salt), 16).unwrap_or(0);
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let sample = (0..self.max_tuples)
                    .map(|_| sizes.iter().map(|&n| rng.gen_range(0..n)).collect())
                    .collect();
                (sample, false)
            }
        }
    }
}

/// Every tuple `t` with `t[i] < sizes[i]`, first position most significant.
pub fn odometer(sizes: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if sizes.contains(&0) {
        return out;
    }
    let mut cur = vec![0usize; sizes.len()];
    loop {
        out.push(cur.clone());
        let mut i = sizes.len();
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            cur[i] += 1;
            if cur[i] < sizes[i] {
                break;
            }
            cur[i] = 0;
        }
    }
}

/// Renders objects for the `instantiation` field of a failure.
pub fn render<T: Debug>(items: &[&T]) -> Vec<String> {
    items.iter().map(|t| format!("{t:?}")).collect()
}

pub fn render_one<T: Debug>(item: &T) -> String {
    format!("{item:?}")
}
