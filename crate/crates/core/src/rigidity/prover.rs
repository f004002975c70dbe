use crate::algebra::GradedAlgebra;
use crate::derivations::{derivation_space_with, GradedLinearMap};
use crate::par::Strategy;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelRecord {
    /// `k`: size of the subsets `S` whose components `λ_S` this level kills.
    pub level: usize,
    /// `-k`.
    pub degree: i64,
    pub dimension: usize,
    pub certificate: Option<GradedLinearMap>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RigidityVerdict {
    /// Every multiplicative λ-family with `λ_∅ = id` is trivial.
    Established,
    /// The level-`k` space of derivations is nonzero; the criterion fails
    /// there. This does not show the triple is not splitting rigid.
    NotEstablished { level: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProofTrace {
    pub torus_rank: usize,
    pub top_degree: u32,
    /// `min(s, top_degree)`: components beyond it vanish for degree reasons.
    pub level_cap: usize,
    pub levels: Vec<LevelRecord>,
    pub verdict: RigidityVerdict,
}

impl ProofTrace {
    pub fn is_established(&self) -> bool {
        self.verdict == RigidityVerdict::Established
    }

    /// `level 1: dim 0; level 2: dim 0; established`.
    pub fn summary(&self) -> String {
        let mut parts: Vec<String> = self
            .levels
            .iter()
            .map(|l| format!("level {}: dim {}", l.level, l.dimension))
            .collect();
        parts.push(match self.verdict {
            RigidityVerdict::Established => "established".to_owned(),
            RigidityVerdict::NotEstablished { level } => format!("not established at level {level}"),
        });
        parts.join("; ")
    }
}

pub fn prove_rigidity(base: &GradedAlgebra, s: usize) -> ProofTrace {
    prove_rigidity_with(base, s, Strategy::default())
}

/// Level-by-level induction over `k = 1 ..= min(s, top_degree)`.
///
/// Once every `λ_T` with `|T| < k` vanishes, the `ι_S` coefficient of
/// `f*(uv) = f*(u) f*(v)` for `|S| = k` reduces to the Leibniz law for
/// `λ_S` in degree `-k`, so level `k` is settled by the degree `-k`
/// derivation space. The first nonzero level stops the induction.
pub fn prove_rigidity_with(base: &GradedAlgebra, s: usize, strategy: Strategy) -> ProofTrace {
    let top_degree = base.top_degree();
    let level_cap = s.min(top_degree as usize);
    let mut levels = Vec::new();
    let mut verdict = RigidityVerdict::Established;
    for level in 1..=level_cap {
        let degree = -(level as i64);
        let mut space = derivation_space_with(base, degree, strategy);
        let dimension = space.len();
        let certificate = (!space.is_empty()).then(|| space.swap_remove(0));
        levels.push(LevelRecord {
            level,
            degree,
            dimension,
            certificate,
        });
        if dimension > 0 {
            verdict = RigidityVerdict::NotEstablished { level };
            break;
        }
    }
    ProofTrace {
        torus_rank: s,
        top_degree,
        level_cap,
        levels,
        verdict,
    }
}
