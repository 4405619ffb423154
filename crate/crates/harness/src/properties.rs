//! The executable property registry.
//!
//! Each property reconstructs its instance from a seed, filters on the
//! theorem's hypotheses (skips are counted, not failed), runs the check,
//! and reports violations with enough payload to replay them. Probe entries
//! test directions the source theory does not claim; their violations are
//! segregated and never fail a suite.

use serde_json::{json, Value};

use ringlab_core::construct::{image_mult_set, localize, Localization};
use ringlab_core::deciders::{
    complement_of_prime, is_bezout, is_p_bezout, is_s_bezout, is_s_finite, is_s_principal,
    SBezoutMode,
};
use ringlab_core::ideal::{all_ideals, is_principal};
use ringlab_core::modules::{all_submodules, is_s_cyclic};
use ringlab_core::nonnil::{
    is_nonnil_chained, is_nonnil_s_bezout, is_phi_ring, localize_at_prime, maximal_ideals,
    phi_image, primes, quotient_by_nil_check,
};
use ringlab_core::zext::{zx_is_s_principal, ZxIdeal, ZxPowers, ZxRing};
use ringlab_core::Verdict;

use crate::generate::{self, Profile};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PropKind {
    /// A statement the source theory proves; violations fail the suite.
    Theorem,
    /// A converse probe the theory does not claim; violations are reported
    /// but never fail the suite.
    Probe,
}

#[derive(Debug, Clone)]
pub enum InstanceOutcome {
    /// Instance did not satisfy the hypotheses (or could not be built).
    Skipped,
    Holds,
    Violated(Violation),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Violation {
    pub property: String,
    pub seed: u64,
    pub detail: String,
    pub payload: Value,
}

impl Violation {
    pub fn to_json(&self) -> Value {
        json!({
            "property": self.property,
            "seed": self.seed,
            "detail": self.detail,
            "payload": self.payload,
        })
    }
}

pub struct PropertyDef {
    pub id: &'static str,
    pub title: &'static str,
    pub kind: PropKind,
    /// Scripted properties run a single fixed instance instead of a seeded
    /// stream.
    pub scripted: bool,
    pub runner: fn(u64, &Profile) -> InstanceOutcome,
}

pub fn registry() -> Vec<PropertyDef> {
    vec![
        PropertyDef {
            id: "P1",
            title: "S-Bezout iff every 2-generated ideal is S-principal",
            kind: PropKind::Theorem,
            scripted: false,
            runner: p1,
        },
        PropertyDef {
            id: "P2",
            title: "S-Bezout implies every S-finite ideal is S-principal",
            kind: PropKind::Theorem,
            scripted: false,
            runner: p2,
        },
        PropertyDef {
            id: "P3",
            title: "S-Bezout implies the localization is Bezout",
            kind: PropKind::Theorem,
            scripted: false,
            runner: p3,
        },
        PropertyDef {
            id: "P4",
            title: "finite rings: S-Bezout iff localization Bezout",
            kind: PropKind::Theorem,
            scripted: false,
            runner: p4,
        },
        PropertyDef {
            id: "P5",
            title: "S inside the units: S-Bezout iff Bezout",
            kind: PropKind::Theorem,
            scripted: false,
            runner: p5,
        },
        PropertyDef {
            id: "P6",
            title: "finite Bezout rings are principal ideal rings",
            kind: PropKind::Theorem,
            scripted: false,
            runner: p6,
        },
        PropertyDef {
            id: "P7",
            title: "semilocal: Bezout iff P-Bezout for all primes iff for all maximals",
            kind: PropKind::Theorem,
            scripted: false,
            runner: p7,
        },
        PropertyDef {
            id: "P8",
            title: "quotient transfer R/I with S+I, converse under s0 I = 0",
            kind: PropKind::Theorem,
            scripted: false,
            runner: p8,
        },
        PropertyDef {
            id: "P9",
            title: "surjective image transfer to f(S)-Bezout under ce-identities",
            kind: PropKind::Theorem,
            scripted: false,
            runner: p9,
        },
        PropertyDef {
            id: "P10",
            title: "products: S-Bezout iff every factor is S_i-Bezout",
            kind: PropKind::Theorem,
            scripted: false,
            runner: p10,
        },
        PropertyDef {
            id: "P11",
            title: "subring descent under IB ∩ A = I",
            kind: PropKind::Theorem,
            scripted: false,
            runner: p11,
        },
        PropertyDef {
            id: "P12",
            title: "trivial extension transfer and the 0 ∝ F lemma",
            kind: PropKind::Theorem,
            scripted: false,
            runner: p12,
        },
        PropertyDef {
            id: "P13",
            title: "trivial extension: base transfer, local ME = 0 equivalence",
            kind: PropKind::Theorem,
            scripted: false,
            runner: p13,
        },
        PropertyDef {
            id: "P14",
            title: "amalgamation transfer in all three hypothesis regimes",
            kind: PropKind::Theorem,
            scripted: false,
            runner: p14,
        },
        PropertyDef {
            id: "P15",
            title: "nonnil S-Bezout iff R/Nil is an S'-Bezout domain",
            kind: PropKind::Theorem,
            scripted: false,
            runner: p15,
        },
        PropertyDef {
            id: "P16",
            title: "nonnil S-Bezout iff phi(R) is nonnil phi(S)-Bezout",
            kind: PropKind::Theorem,
            scripted: false,
            runner: p16,
        },
        PropertyDef {
            id: "P17",
            title: "phi-rings: nonnil P-Bezout everywhere iff localizations nonnil chained",
            kind: PropKind::Theorem,
            scripted: false,
            runner: p17,
        },
        PropertyDef {
            id: "P18",
            title: "Z ∝ M worked example: containment witnesses and non-principality",
            kind: PropKind::Theorem,
            scripted: true,
            runner: p18,
        },
        PropertyDef {
            id: "P19",
            title: "Bezout x non-Bezout product with S = {(1,1),(1,0)}",
            kind: PropKind::Theorem,
            scripted: true,
            runner: p19,
        },
        PropertyDef {
            id: "C8",
            title: "probe: quotient converse without the s0 I = 0 hypothesis",
            kind: PropKind::Probe,
            scripted: false,
            runner: c8,
        },
        PropertyDef {
            id: "C12",
            title: "probe: trivial extension converse without homogeneity",
            kind: PropKind::Probe,
            scripted: false,
            runner: c12,
        },
    ]
}

pub fn property_by_id(id: &str) -> Option<PropertyDef> {
    registry().into_iter().find(|p| p.id == id)
}

fn violation(property: &str, seed: u64, detail: String, payload: Value) -> InstanceOutcome {
    InstanceOutcome::Violated(Violation {
        property: property.to_string(),
        seed,
        detail,
        payload,
    })
}

macro_rules! try_skip {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(_) => return InstanceOutcome::Skipped,
        }
    };
}

fn p1(seed: u64, profile: &Profile) -> InstanceOutcome {
    let inst = try_skip!(generate::gen_plain(seed, profile));
    let full = try_skip!(is_s_bezout(&inst.ring, &inst.mult_set, SBezoutMode::AllIdeals));
    let two = try_skip!(is_s_bezout(&inst.ring, &inst.mult_set, SBezoutMode::TwoGenerated));
    if full.verdict == two.verdict {
        InstanceOutcome::Holds
    } else {
        violation(
            "P1",
            seed,
            format!(
                "mode disagreement on {}: all-ideals={:?}, two-generated={:?}",
                inst.ring.desc(),
                full.verdict,
                two.verdict
            ),
            json!({"ring": inst.ring.desc(), "s": inst.mult_set.elements()}),
        )
    }
}

fn p2(seed: u64, profile: &Profile) -> InstanceOutcome {
    let inst = try_skip!(generate::gen_plain(seed, profile));
    let sbez = try_skip!(is_s_bezout(&inst.ring, &inst.mult_set, SBezoutMode::AllIdeals));
    if !sbez.is_true() {
        return InstanceOutcome::Skipped;
    }
    for ideal in all_ideals(&inst.ring) {
        for k in 0..=2usize {
            let finite = try_skip!(is_s_finite(&ideal, &inst.mult_set, k));
            if finite.is_true() {
                let principal = try_skip!(is_s_principal(&ideal, &inst.mult_set));
                if !principal.is_true() {
                    return violation(
                        "P2",
                        seed,
                        format!(
                            "S-finite (k={k}) ideal not S-principal in {}",
                            inst.ring.desc()
                        ),
                        json!({"ring": inst.ring.desc(), "ideal": ideal.elements(), "k": k}),
                    );
                }
            }
        }
    }
    InstanceOutcome::Holds
}

fn p3(seed: u64, profile: &Profile) -> InstanceOutcome {
    let inst = try_skip!(generate::gen_plain(seed, profile));
    if inst.mult_set.contains_zero() {
        return InstanceOutcome::Skipped;
    }
    let sbez = try_skip!(is_s_bezout(&inst.ring, &inst.mult_set, SBezoutMode::AllIdeals));
    if !sbez.is_true() {
        return InstanceOutcome::Skipped;
    }
    match try_skip!(localize(&inst.ring, &inst.mult_set)) {
        Localization::Ring { ring: loc, .. } => {
            if is_bezout(&loc).is_true() {
                InstanceOutcome::Holds
            } else {
                violation(
                    "P3",
                    seed,
                    format!("localization of {} is not Bezout", inst.ring.desc()),
                    json!({"ring": inst.ring.desc(), "s": inst.mult_set.elements()}),
                )
            }
        }
        Localization::Zero => InstanceOutcome::Skipped,
    }
}

fn p4(seed: u64, profile: &Profile) -> InstanceOutcome {
    let inst = try_skip!(generate::gen_plain(seed, profile));
    if inst.mult_set.contains_zero() {
        return InstanceOutcome::Skipped;
    }
    let sbez = try_skip!(is_s_bezout(&inst.ring, &inst.mult_set, SBezoutMode::AllIdeals));
    let loc_bezout = match try_skip!(localize(&inst.ring, &inst.mult_set)) {
        Localization::Ring { ring: loc, .. } => is_bezout(&loc).is_true(),
        Localization::Zero => return InstanceOutcome::Skipped,
    };
    if sbez.is_true() == loc_bezout {
        InstanceOutcome::Holds
    } else {
        violation(
            "P4",
            seed,
            format!(
                "equivalence failed on {}: S-Bezout={} localization-Bezout={}",
                inst.ring.desc(),
                sbez.is_true(),
                loc_bezout
            ),
            json!({"ring": inst.ring.desc(), "s": inst.mult_set.elements()}),
        )
    }
}

fn p5(seed: u64, profile: &Profile) -> InstanceOutcome {
    let mut rng = generate::rng_for(seed);
    let ring = try_skip!(generate::gen_base_ring(&mut rng, profile.max_order));
    let s = generate::gen_unit_mult_set(&mut rng, &ring);
    debug_assert!(s.all_units());
    let sbez = try_skip!(is_s_bezout(&ring, &s, SBezoutMode::AllIdeals));
    let bez = is_bezout(&ring);
    if sbez.is_true() == bez.is_true() {
        InstanceOutcome::Holds
    } else {
        violation(
            "P5",
            seed,
            format!("unit-set equivalence failed on {}", ring.desc()),
            json!({"ring": ring.desc(), "s": s.elements()}),
        )
    }
}

fn p6(seed: u64, profile: &Profile) -> InstanceOutcome {
    let inst = try_skip!(generate::gen_plain(seed, profile));
    if !is_bezout(&inst.ring).is_true() {
        return InstanceOutcome::Skipped;
    }
    for ideal in all_ideals(&inst.ring) {
        if !is_principal(&ideal).is_true() {
            return violation(
                "P6",
                seed,
                format!("Bezout ring {} has a non-principal ideal", inst.ring.desc()),
                json!({"ring": inst.ring.desc(), "ideal": ideal.elements()}),
            );
        }
    }
    InstanceOutcome::Holds
}

fn p7(seed: u64, profile: &Profile) -> InstanceOutcome {
    let inst = try_skip!(generate::gen_plain(seed, profile));
    let ring = &inst.ring;
    let bez = is_bezout(ring).is_true();
    let all_primes = primes(ring);
    let p_bez = all_primes
        .iter()
        .all(|p| is_p_bezout(ring, p).map(|r| r.is_true()).unwrap_or(false));
    let m_bez = maximal_ideals(ring)
        .iter()
        .all(|m| is_p_bezout(ring, m).map(|r| r.is_true()).unwrap_or(false));
    if bez == p_bez && p_bez == m_bez {
        InstanceOutcome::Holds
    } else {
        violation(
            "P7",
            seed,
            format!(
                "semilocal equivalence failed on {}: bezout={bez} p={p_bez} m={m_bez}",
                ring.desc()
            ),
            json!({"ring": ring.desc()}),
        )
    }
}

fn p8(seed: u64, profile: &Profile) -> InstanceOutcome {
    let inst = try_skip!(generate::gen_quotient_shape(seed, profile));
    let s_plus = try_skip!(inst.quotient.project_mult_set(&inst.s));
    let forward_hyp = try_skip!(is_s_bezout(&inst.ring, &inst.s, SBezoutMode::AllIdeals)).is_true();
    let quotient_sbez =
        try_skip!(is_s_bezout(&inst.quotient.ring, &s_plus, SBezoutMode::AllIdeals)).is_true();
    let mut ran_any = false;
    if forward_hyp {
        ran_any = true;
        if !quotient_sbez {
            return violation(
                "P8",
                seed,
                format!(
                    "{} is S-Bezout but its quotient is not (S+I)-Bezout",
                    inst.ring.desc()
                ),
                json!({"ring": inst.ring.desc(), "ideal": inst.ideal.elements(), "s": inst.s.elements()}),
            );
        }
    }
    let has_annihilator = inst.s.elements().iter().any(|&s0| {
        inst.ideal
            .elements()
            .iter()
            .all(|&i| inst.ring.mul(s0, i) == inst.ring.zero())
    });
    if has_annihilator && quotient_sbez {
        ran_any = true;
        if !forward_hyp {
            return violation(
                "P8",
                seed,
                format!(
                    "converse with s0 I = 0 failed on {}",
                    inst.ring.desc()
                ),
                json!({"ring": inst.ring.desc(), "ideal": inst.ideal.elements(), "s": inst.s.elements()}),
            );
        }
    }
    if ran_any {
        InstanceOutcome::Holds
    } else {
        InstanceOutcome::Skipped
    }
}

fn c8(seed: u64, profile: &Profile) -> InstanceOutcome {
    let inst = try_skip!(generate::gen_quotient_shape(seed, profile));
    let s_plus = try_skip!(inst.quotient.project_mult_set(&inst.s));
    let has_annihilator = inst.s.elements().iter().any(|&s0| {
        inst.ideal
            .elements()
            .iter()
            .all(|&i| inst.ring.mul(s0, i) == inst.ring.zero())
    });
    if has_annihilator {
        return InstanceOutcome::Skipped; // the probe targets the unproven case
    }
    let quotient_sbez =
        try_skip!(is_s_bezout(&inst.quotient.ring, &s_plus, SBezoutMode::AllIdeals)).is_true();
    if !quotient_sbez {
        return InstanceOutcome::Skipped;
    }
    let ring_sbez = try_skip!(is_s_bezout(&inst.ring, &inst.s, SBezoutMode::AllIdeals)).is_true();
    if ring_sbez {
        InstanceOutcome::Holds
    } else {
        violation(
            "C8",
            seed,
            format!(
                "paper does not claim this direction: {} has (S+I)-Bezout quotient but is not S-Bezout",
                inst.ring.desc()
            ),
            json!({"ring": inst.ring.desc(), "ideal": inst.ideal.elements(), "s": inst.s.elements()}),
        )
    }
}

fn p9(seed: u64, profile: &Profile) -> InstanceOutcome {
    let inst = try_skip!(generate::gen_hom(seed, profile));
    let f = &inst.hom;
    let a = f.source();
    let b = f.target();
    // hypotheses: A S-Bezout and I^{ce} = I for every ideal of B
    if !try_skip!(is_s_bezout(a, &inst.s, SBezoutMode::AllIdeals)).is_true() {
        return InstanceOutcome::Skipped;
    }
    for j in all_ideals(b) {
        let back = try_skip!(ringlab_core::ideal::contract(&j, f));
        let forth = try_skip!(ringlab_core::ideal::extend(&back, f));
        if forth.elements() != j.elements() {
            return InstanceOutcome::Skipped;
        }
    }
    let fs = try_skip!(image_mult_set(f, &inst.s));
    if try_skip!(is_s_bezout(b, &fs, SBezoutMode::AllIdeals)).is_true() {
        InstanceOutcome::Holds
    } else {
        violation(
            "P9",
            seed,
            format!("image of {} under {} is not f(S)-Bezout", a.desc(), f.desc()),
            json!({"source": a.desc(), "target": b.desc(), "s": inst.s.elements()}),
        )
    }
}

fn p10(seed: u64, profile: &Profile) -> InstanceOutcome {
    let inst = try_skip!(generate::gen_product(seed, profile));
    let p = &inst.product;
    let whole = try_skip!(is_s_bezout(&p.ring, &inst.s, SBezoutMode::AllIdeals)).is_true();
    let left = try_skip!(is_s_bezout(&p.left, &inst.s1, SBezoutMode::AllIdeals)).is_true();
    let right = try_skip!(is_s_bezout(&p.right, &inst.s2, SBezoutMode::AllIdeals)).is_true();
    if whole == (left && right) {
        InstanceOutcome::Holds
    } else {
        violation(
            "P10",
            seed,
            format!(
                "product equivalence failed on {}: whole={whole} left={left} right={right}",
                p.ring.desc()
            ),
            json!({"ring": p.ring.desc()}),
        )
    }
}

fn p11(seed: u64, profile: &Profile) -> InstanceOutcome {
    let inst = try_skip!(generate::gen_subring(seed, profile));
    let a = inst.embedding.source();
    let b = inst.embedding.target();
    if !try_skip!(ringlab_core::construct::extension_contracts_identically(
        &inst.embedding
    )) {
        return InstanceOutcome::Skipped;
    }
    if !try_skip!(is_s_bezout(b, &inst.s_big, SBezoutMode::AllIdeals)).is_true() {
        return InstanceOutcome::Skipped;
    }
    if try_skip!(is_s_bezout(a, &inst.s_sub, SBezoutMode::AllIdeals)).is_true() {
        InstanceOutcome::Holds
    } else {
        violation(
            "P11",
            seed,
            format!("subring of {} failed S-Bezout descent", b.desc()),
            json!({"ring": b.desc(), "subring_order": a.order()}),
        )
    }
}

fn p12(seed: u64, profile: &Profile) -> InstanceOutcome {
    let inst = try_skip!(generate::gen_trivext(seed, profile));
    let ext = &inst.ext;
    let s_full = try_skip!(ext.lift_mult_set_full(&inst.s0));
    let submodules = all_submodules(&ext.module);

    // Lemma: F is S-cyclic iff 0 ∝ F is (S0 ∝ E)-principal.
    for f in &submodules {
        let cyclic = try_skip!(is_s_cyclic(f, &inst.s0)).is_true();
        let ideal = try_skip!(ext.zero_extension_ideal(f));
        let principal = try_skip!(is_s_principal(&ideal, &s_full)).is_true();
        if cyclic != principal {
            return violation(
                "P12",
                seed,
                format!(
                    "0 ∝ F lemma failed on {}: cyclic={cyclic} principal={principal}",
                    ext.ring.desc()
                ),
                json!({"ring": ext.ring.desc(), "submodule": f.elements(), "s0": inst.s0.elements()}),
            );
        }
    }

    let r_sbez = try_skip!(is_s_bezout(&ext.ring, &s_full, SBezoutMode::AllIdeals)).is_true();
    let a_sbez = try_skip!(is_s_bezout(&ext.base, &inst.s0, SBezoutMode::AllIdeals)).is_true();
    let all_cyclic = submodules
        .iter()
        .all(|f| is_s_cyclic(f, &inst.s0).map(|r| r.is_true()).unwrap_or(false));

    // forward: R S-Bezout forces both conclusions
    if r_sbez && !(a_sbez && all_cyclic) {
        return violation(
            "P12",
            seed,
            format!(
                "forward transfer failed on {}: base={a_sbez} cyclic={all_cyclic}",
                ext.ring.desc()
            ),
            json!({"ring": ext.ring.desc(), "s0": inst.s0.elements()}),
        );
    }

    // converse under all-ideals-homogeneous
    let all_homogeneous = all_ideals(&ext.ring).iter().all(|l| {
        ext.is_homogeneous(l).map(|(h, _)| h).unwrap_or(false)
    });
    if all_homogeneous && a_sbez && all_cyclic && !r_sbez {
        return violation(
            "P12",
            seed,
            format!("homogeneous converse failed on {}", ext.ring.desc()),
            json!({"ring": ext.ring.desc(), "s0": inst.s0.elements()}),
        );
    }
    InstanceOutcome::Holds
}

fn c12(seed: u64, profile: &Profile) -> InstanceOutcome {
    let inst = try_skip!(generate::gen_trivext(seed, profile));
    let ext = &inst.ext;
    let s_full = try_skip!(ext.lift_mult_set_full(&inst.s0));
    let all_homogeneous = all_ideals(&ext.ring).iter().all(|l| {
        ext.is_homogeneous(l).map(|(h, _)| h).unwrap_or(false)
    });
    if all_homogeneous {
        return InstanceOutcome::Skipped; // the probe targets the missing hypothesis
    }
    let a_sbez = try_skip!(is_s_bezout(&ext.base, &inst.s0, SBezoutMode::AllIdeals)).is_true();
    let all_cyclic = all_submodules(&ext.module)
        .iter()
        .all(|f| is_s_cyclic(f, &inst.s0).map(|r| r.is_true()).unwrap_or(false));
    if !(a_sbez && all_cyclic) {
        return InstanceOutcome::Skipped;
    }
    if try_skip!(is_s_bezout(&ext.ring, &s_full, SBezoutMode::AllIdeals)).is_true() {
        InstanceOutcome::Holds
    } else {
        violation(
            "C12",
            seed,
            format!(
                "paper does not claim this direction: converse fails without homogeneity on {}",
                ext.ring.desc()
            ),
            json!({"ring": ext.ring.desc(), "s0": inst.s0.elements()}),
        )
    }
}

fn p13(seed: u64, profile: &Profile) -> InstanceOutcome {
    // part (1): any trivial extension, S = S0 ∝ E
    let inst = try_skip!(generate::gen_trivext(seed, profile));
    let ext = &inst.ext;
    let s_full = try_skip!(ext.lift_mult_set_full(&inst.s0));
    let mut ran_any = false;
    if try_skip!(is_s_bezout(&ext.ring, &s_full, SBezoutMode::AllIdeals)).is_true() {
        ran_any = true;
        if !try_skip!(is_s_bezout(&ext.base, &inst.s0, SBezoutMode::AllIdeals)).is_true() {
            return violation(
                "P13",
                seed,
                format!("base transfer failed on {}", ext.ring.desc()),
                json!({"ring": ext.ring.desc(), "s0": inst.s0.elements()}),
            );
        }
    }

    // part (3): local base, ME = 0, S0 meeting M — an equivalence
    if let Some(local) = try_skip!(generate::gen_local_me_zero(seed, profile)) {
        // verify the shape really satisfies the hypotheses
        let m_kills = local.maximal.elements().iter().all(|&m| {
            (0..local.ext.module.order()).all(|e| local.ext.module.act(m, e) == local.ext.module.zero())
        });
        let s0_meets_m = local.s0.elements().iter().any(|&s| local.maximal.contains(s));
        if m_kills && s0_meets_m {
            ran_any = true;
            let s = try_skip!(local.ext.lift_mult_set_full(&local.s0));
            let r_sbez =
                try_skip!(is_s_bezout(&local.ext.ring, &s, SBezoutMode::AllIdeals)).is_true();
            let a_sbez =
                try_skip!(is_s_bezout(&local.ext.base, &local.s0, SBezoutMode::AllIdeals)).is_true();
            if r_sbez != a_sbez {
                return violation(
                    "P13",
                    seed,
                    format!(
                        "local ME=0 equivalence failed on {}: R={r_sbez} A={a_sbez}",
                        local.ext.ring.desc()
                    ),
                    json!({"ring": local.ext.ring.desc(), "s0": local.s0.elements()}),
                );
            }
        }
    }
    if ran_any {
        InstanceOutcome::Holds
    } else {
        InstanceOutcome::Skipped
    }
}

fn p14(seed: u64, profile: &Profile) -> InstanceOutcome {
    let inst = try_skip!(generate::gen_amalg(seed, profile));
    let am = &inst.amalg;
    let ring = &am.ring;
    let s0 = &inst.s0;
    let s_lift = &inst.s_lift;
    // the lift projects back onto S0
    let projected = try_skip!(am.project_mult_set(s_lift));
    if projected.elements() != s0.elements() {
        return InstanceOutcome::Skipped;
    }
    let r_sbez = try_skip!(is_s_bezout(ring, s_lift, SBezoutMode::AllIdeals)).is_true();
    let a_sbez = try_skip!(is_s_bezout(&am.base, s0, SBezoutMode::AllIdeals)).is_true();

    // part (1): R S'-Bezout forces A S0-Bezout
    if r_sbez && !a_sbez {
        return violation(
            "P14",
            seed,
            format!("amalgamation base transfer failed on {}", ring.desc()),
            json!({"ring": ring.desc(), "s0": s0.elements()}),
        );
    }
    let f_s0_meets_j: bool = s0
        .elements()
        .iter()
        .any(|&s| am.along.contains(am.hom.apply(s)));
    // part (2): f(S0) ∩ J nonempty makes it an equivalence
    if f_s0_meets_j && r_sbez != a_sbez {
        return violation(
            "P14",
            seed,
            format!(
                "part-2 equivalence failed on {}: R={r_sbez} A={a_sbez}",
                ring.desc()
            ),
            json!({"ring": ring.desc(), "s0": s0.elements()}),
        );
    }
    // part (3): f(S0) ∩ J empty, J = ann(f(S0)), all proper ideals homogeneous
    if !f_s0_meets_j {
        let ann: Vec<usize> = (0..am.other.order())
            .filter(|&b| {
                s0.elements()
                    .iter()
                    .all(|&s| am.other.mul(b, am.hom.apply(s)) == am.other.zero())
            })
            .collect();
        let j_is_ann = ann == am.along.elements();
        if j_is_ann {
            let all_proper_homogeneous = all_ideals(ring)
                .iter()
                .filter(|l| l.is_proper())
                .all(|l| am.is_homogeneous(l).map(|(h, _)| h).unwrap_or(false));
            if all_proper_homogeneous && r_sbez != a_sbez {
                return violation(
                    "P14",
                    seed,
                    format!(
                        "part-3 equivalence failed on {}: R={r_sbez} A={a_sbez}",
                        ring.desc()
                    ),
                    json!({"ring": ring.desc(), "s0": s0.elements()}),
                );
            }
        }
    }
    InstanceOutcome::Holds
}

fn p15(seed: u64, profile: &Profile) -> InstanceOutcome {
    let inst = try_skip!(generate::gen_phi_biased(seed, profile));
    if !is_phi_ring(&inst.ring) {
        return InstanceOutcome::Skipped;
    }
    let direct = try_skip!(is_nonnil_s_bezout(&inst.ring, &inst.mult_set)).is_true();
    let characterized = try_skip!(quotient_by_nil_check(&inst.ring, &inst.mult_set));
    if direct == characterized {
        InstanceOutcome::Holds
    } else {
        violation(
            "P15",
            seed,
            format!(
                "characterization mismatch on {}: direct={direct} quotient={characterized}",
                inst.ring.desc()
            ),
            json!({"ring": inst.ring.desc(), "s": inst.mult_set.elements()}),
        )
    }
}

fn p16(seed: u64, profile: &Profile) -> InstanceOutcome {
    let inst = try_skip!(generate::gen_phi_biased(seed, profile));
    if !is_phi_ring(&inst.ring) {
        return InstanceOutcome::Skipped;
    }
    let (phi_ring, phi_hom) = try_skip!(phi_image(&inst.ring));
    let phi_s = try_skip!(image_mult_set(&phi_hom, &inst.mult_set));
    let original = try_skip!(is_nonnil_s_bezout(&inst.ring, &inst.mult_set)).is_true();
    let imaged = try_skip!(is_nonnil_s_bezout(&phi_ring, &phi_s)).is_true();
    if original == imaged {
        InstanceOutcome::Holds
    } else {
        violation(
            "P16",
            seed,
            format!(
                "phi corollary mismatch on {}: R={original} phi(R)={imaged}",
                inst.ring.desc()
            ),
            json!({"ring": inst.ring.desc(), "s": inst.mult_set.elements()}),
        )
    }
}

fn p17(seed: u64, profile: &Profile) -> InstanceOutcome {
    let inst = try_skip!(generate::gen_phi_biased(seed, profile));
    let ring = &inst.ring;
    if !is_phi_ring(ring) {
        return InstanceOutcome::Skipped;
    }
    let ps = primes(ring);
    let stmt1 = ps.iter().all(|p| {
        complement_of_prime(p)
            .and_then(|s| is_nonnil_s_bezout(ring, &s))
            .map(|r| r.is_true())
            .unwrap_or(false)
    });
    let stmt2 = ps.iter().all(|p| {
        localize_at_prime(ring, p)
            .map(|(loc, _)| is_nonnil_chained(&loc).is_true())
            .unwrap_or(false)
    });
    let stmt3 = maximal_ideals(ring).iter().all(|m| {
        localize_at_prime(ring, m)
            .map(|(loc, _)| is_nonnil_chained(&loc).is_true())
            .unwrap_or(false)
    });
    if stmt1 == stmt2 && stmt2 == stmt3 {
        InstanceOutcome::Holds
    } else {
        violation(
            "P17",
            seed,
            format!(
                "final equivalence failed on {}: (1)={stmt1} (2)={stmt2} (3)={stmt3}",
                ring.desc()
            ),
            json!({"ring": ring.desc()}),
        )
    }
}

fn p18(_seed: u64, _profile: &Profile) -> InstanceOutcome {
    let fail = |detail: String| violation("P18", 0, detail, json!({}));
    let ring = match ZxRing::new(2, 2) {
        Ok(r) => r,
        Err(e) => return fail(format!("ring construction failed: {e}")),
    };
    let elem = |a: i64, m: &[i64]| ring.elem(a.into(), m).expect("rank 2 literals");
    let powers2 = ZxPowers::new(2, 8).expect("base 2");
    let powers1 = ZxPowers::new(1, 4).expect("base 1");

    // (i) J = R(2,0) + R(0,e): witness ((2,0),(2,0))
    let j1 = match ZxIdeal::new(&ring, vec![elem(2, &[0, 0]), elem(0, &[1, 0])]) {
        Ok(j) => j,
        Err(e) => return fail(format!("ideal construction failed: {e}")),
    };
    let rep = zx_is_s_principal(&j1, &powers2);
    if rep.verdict != Verdict::True
        || rep.witness != Some((elem(2, &[0, 0]), elem(2, &[0, 0])))
    {
        return fail(format!("case (i) expected witness ((2,0),(2,0)), got {rep:?}"));
    }

    // (ii) J = R(0,e) + R(0,f): not principal, exhaustively
    let j2 = match ZxIdeal::new(&ring, vec![elem(0, &[1, 0]), elem(0, &[0, 1])]) {
        Ok(j) => j,
        Err(e) => return fail(format!("ideal construction failed: {e}")),
    };
    let rep = zx_is_s_principal(&j2, &powers1);
    if rep.verdict != Verdict::False || rep.exhaustion.is_none() {
        return fail(format!("case (ii) expected exhaustive FALSE, got {rep:?}"));
    }

    // (iii) same J with S = 2-powers: witness ((2,0),(0,0))
    let rep = zx_is_s_principal(&j2, &powers2);
    if rep.verdict != Verdict::True
        || rep.witness != Some((elem(2, &[0, 0]), elem(0, &[0, 0])))
    {
        return fail(format!("case (iii) expected witness ((2,0),(0,0)), got {rep:?}"));
    }
    InstanceOutcome::Holds
}

fn p19(_seed: u64, _profile: &Profile) -> InstanceOutcome {
    use ringlab_core::construct::{product, trivial_extension};
    use ringlab_core::modules::make_free_module;
    use ringlab_core::mulset::make_mult_set;
    use ringlab_core::ring::make_zmod;

    let fail = |detail: String| violation("P19", 0, detail, json!({}));
    let build = || -> ringlab_core::Result<InstanceOutcome> {
        let z4 = make_zmod(4)?;
        let f2 = make_zmod(2)?;
        let plane = make_free_module(&f2, 2)?;
        let ext = trivial_extension(&f2, &plane)?;
        let p = product(&z4, &ext.ring)?;
        let s = make_mult_set(&p.ring, &[p.pair(z4.one(), ext.ring.zero())])?;
        if s.len() != 2 {
            return Ok(fail(format!("S should be {{(1,1),(1,0)}}, has {} elements", s.len())));
        }
        for mode in [SBezoutMode::AllIdeals, SBezoutMode::TwoGenerated] {
            if !is_s_bezout(&p.ring, &s, mode)?.is_true() {
                return Ok(fail(format!("S-Bezout should hold in {mode:?} mode")));
            }
        }
        let bez = is_bezout(&p.ring);
        if bez.is_true() {
            return Ok(fail("product must not be Bezout".into()));
        }
        let expected: Vec<usize> = (0..4).map(|e| p.pair(0, ext.pair(0, e))).collect();
        match bez.counterexample {
            Some(ringlab_core::report::Counterexample::Ideal { ref elements, .. })
                if *elements == expected =>
            {
                Ok(InstanceOutcome::Holds)
            }
            other => Ok(fail(format!("expected counterexample 0 x (0 ∝ E), got {other:?}"))),
        }
    };
    match build() {
        Ok(outcome) => outcome,
        Err(e) => fail(format!("construction failed: {e}")),
    }
}
