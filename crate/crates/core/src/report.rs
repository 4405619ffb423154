//! Decider outcomes: verdicts with replayable witnesses or exhaustion
//! certificates.

use std::time::Duration;

/// Three-valued outcome. `NotFound` only appears for bounded searches over
/// the infinite backend; table-based deciders always decide.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    True,
    False,
    NotFound,
}

impl Verdict {
    pub fn is_true(self) -> bool {
        self == Verdict::True
    }
    pub fn is_false(self) -> bool {
        self == Verdict::False
    }
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::True => "true",
            Verdict::False => "false",
            Verdict::NotFound => "not-found",
        }
    }
}

/// Witness payloads, all in element indices of the ring the decider ran on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// `s*I ⊆ Ra ⊆ I`
    SPrincipal { s: usize, a: usize },
    /// `Ra = I`
    Principal { a: usize },
    /// `s*F ⊆ Ae ⊆ F`
    SCyclic { s: usize, e: usize },
    /// `s*I ⊆ J ⊆ I` with `J` generated by `generators`
    SFinite { s: usize, generators: Vec<usize> },
    /// One witness per ideal, for the ring-wide deciders.
    PerIdeal(Vec<IdealWitness>),
    /// A universally quantified check that scanned the whole space.
    Exhausted { checked: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealWitness {
    pub ideal_generators: Vec<usize>,
    pub witness: Box<Witness>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Counterexample {
    Ideal {
        generators: Vec<usize>,
        elements: Vec<usize>,
    },
    /// Nested pair `inner ⊆ outer` violating a descent property.
    IdealPair {
        inner_generators: Vec<usize>,
        outer_generators: Vec<usize>,
    },
    /// Two incomparable ideals.
    Incomparable {
        left_generators: Vec<usize>,
        right_generators: Vec<usize>,
    },
}

#[derive(Debug, Clone)]
pub struct WitnessReport {
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    pub counterexample: Option<Counterexample>,
    /// Size of the search space ruled out by a FALSE (or confirmed by an
    /// exhaustive TRUE).
    pub exhaustion: Option<u64>,
    pub flags: Vec<&'static str>,
    pub elapsed: Duration,
}

impl WitnessReport {
    pub fn found(witness: Witness) -> Self {
        WitnessReport {
            verdict: Verdict::True,
            witness: Some(witness),
            counterexample: None,
            exhaustion: None,
            flags: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    pub fn exhausted_false(space: u64) -> Self {
        WitnessReport {
            verdict: Verdict::False,
            witness: None,
            counterexample: None,
            exhaustion: Some(space),
            flags: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    pub fn refuted(counterexample: Counterexample) -> Self {
        WitnessReport {
            verdict: Verdict::False,
            witness: None,
            counterexample: Some(counterexample),
            exhaustion: None,
            flags: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    pub fn with_flag(mut self, flag: &'static str) -> Self {
        if !self.flags.contains(&flag) {
            self.flags.push(flag);
        }
        self
    }

    pub fn with_elapsed(mut self, elapsed: Duration) -> Self {
        self.elapsed = elapsed;
        self
    }

    pub fn is_true(&self) -> bool {
        self.verdict.is_true()
    }
}

pub const FLAG_DEGENERATE_MULT_SET: &str = "degenerate-mult-set-contains-zero";
pub const FLAG_NONNIL_CHAINED_DEF: &str = "nonnil-chained-definition-adopted-from-cited-literature";
pub const FLAG_BOUNDED_SEARCH: &str = "bounded-search";
pub const FLAG_MODULE_PART_EXHAUSTIVE: &str = "module-part-bound-exhaustive";
pub const FLAG_ZERO_RING: &str = "degenerate-zero-ring";
