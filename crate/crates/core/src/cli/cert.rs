use crate::configs::{check_syndetic_finite, SyndeticCertificate};
use crate::dynamics::{verify_weak_central, GapCertificate, HittingSet, SubshiftApprox, TdsFile, Time, WeakCentralCertificate};
use crate::ramsey::{Coloring, DiffSet, GrunwaldResult, MonoWitness};
use crate::Result;
use serde::{Deserialize, Serialize};

/// A self-contained positive claim. Each variant carries the input it is
/// about, so [`Certificate::verify`] needs nothing else.
#[allow(clippy::large_enum_variant)]
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    Grunwald { result: GrunwaldResult },
    Mono { coloring: Coloring, witness: MonoWitness },
    Diffset { coloring: Coloring, diff: DiffSet },
    Syndetic { certificate: SyndeticCertificate },
    Hitting { tds: TdsFile, hitting: HittingSet },
    WeakCentral { coloring: Coloring, approx: SubshiftApprox, certificate: WeakCentralCertificate },
}

impl Certificate {
    /// Rechecks the claim by direct evaluation.
    pub fn verify(&self) -> Result<bool> {
        Ok(match self {
            Certificate::Grunwald { result } => result.verify(),
            Certificate::Mono { coloring, witness } => witness.verify(coloring),
            Certificate::Diffset { coloring, diff } => diff.verify(coloring),
            Certificate::Syndetic { certificate } => certificate.verified && certificate.reverify()?,
            Certificate::Hitting { tds, hitting } => {
                let tds = tds.clone().load()?;
                let gap_ok = match &hitting.certificate {
                    Some(GapCertificate::Periodic(c)) => c.verified && c.reverify()?,
                    Some(GapCertificate::Finite(c)) => match tds.time() {
                        Time::Finite { module, .. } => {
                            c.d.iter().map(|&t| t as u64).eq(hitting.n.iter().copied())
                                && c.verified
                                && check_syndetic_finite(module.ring(), &c.d.iter().copied().collect(), &c.k)?.verified
                        }
                        Time::Nat { .. } => false,
                    },
                    None => false,
                };
                hitting.verify_witnesses(&tds)? && gap_ok
            }
            Certificate::WeakCentral { coloring, approx, certificate } => verify_weak_central(coloring, approx, certificate),
        })
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Certificate::Grunwald { .. } => "grunwald",
            Certificate::Mono { .. } => "mono",
            Certificate::Diffset { .. } => "diffset",
            Certificate::Syndetic { .. } => "syndetic",
            Certificate::Hitting { .. } => "hitting",
            Certificate::WeakCentral { .. } => "weak_central",
        }
    }
}
