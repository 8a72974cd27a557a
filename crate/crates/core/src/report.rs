//! The bundle of results `analyze` prints for one semigroup.

use std::fmt::{self, Write};

use crate::congruences::{self, least_semilattice_congruence};
use crate::finite::{
    basic_predicates, identity, is_zero_semigroup, rees_quotient, square_ideal, BasicPredicates,
    Partition, Semigroup,
};
use crate::structure::{
    eta_relation, is_putcha, semilattice_components, separativity, square_retract_check,
    tau_relation, theorem_audit, AuditReport, RetractVerdict, Separativity,
};
use crate::varieties::{variety_membership, VarietyNode};
use crate::Result;

/// Identities reported individually, in this order.
pub const REPORTED_IDENTITIES: [&str; 7] = [
    "aba=ab", "ab=aab", "ab=ac", "aab=aa", "abc=acb", "ab=ba", "aa=a",
];

#[derive(Debug, Clone)]
pub struct AnalysisReport {
    pub names: Vec<String>,
    pub predicates: BasicPredicates,
    pub identities: Vec<(String, bool)>,
    pub square_ideal: Vec<usize>,
    pub rees_quotient_order: usize,
    pub rees_quotient_is_zero: bool,
    /// `None` when the semigroup is not left legal.
    pub eta: Option<Partition>,
    pub components: Option<Partition>,
    /// `None` above the congruence enumeration bound.
    pub least_semilattice_congruence: Option<Partition>,
    pub tau: std::result::Result<Partition, String>,
    pub sigma: std::result::Result<Partition, String>,
    pub retract: RetractVerdict,
    pub separativity: Separativity,
    pub putcha: bool,
    pub varieties: Vec<VarietyNode>,
    pub subdirectly_irreducible: Option<bool>,
    pub audit: AuditReport,
}

pub fn analyze(s: &Semigroup) -> Result<AnalysisReport> {
    let square = square_ideal(s);
    let rees = rees_quotient(s, &square.subset)?;
    let identities = REPORTED_IDENTITIES
        .iter()
        .map(|text| Ok((text.to_string(), identity(text).holds_in(s)?)))
        .collect::<Result<Vec<_>>>()?;
    let within_bound = s.order() <= congruences::DEFAULT_MAX_ORDER;
    Ok(AnalysisReport {
        names: s.names().to_vec(),
        predicates: basic_predicates(s),
        identities,
        rees_quotient_order: rees.order(),
        rees_quotient_is_zero: is_zero_semigroup(&rees),
        square_ideal: square.subset,
        eta: eta_relation(s).ok().map(|r| r.relation),
        components: semilattice_components(s).ok(),
        least_semilattice_congruence: if within_bound {
            Some(least_semilattice_congruence(s)?.into_partition())
        } else {
            None
        },
        tau: tau_relation(s, false)
            .map(|r| r.relation)
            .map_err(|e| e.to_string()),
        sigma: tau_relation(s, true)
            .map(|r| r.relation)
            .map_err(|e| e.to_string()),
        retract: square_retract_check(s),
        separativity: separativity(s),
        putcha: is_putcha(s),
        varieties: variety_membership(s),
        subdirectly_irreducible: if within_bound {
            Some(congruences::is_subdirectly_irreducible(s)?)
        } else {
            None
        },
        audit: theorem_audit(s),
    })
}

impl fmt::Display for AnalysisReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = &self.names;
        let partition = |p: &Option<Partition>, missing: &str| match p {
            Some(p) => p.render(names),
            None => missing.to_string(),
        };
        let p = &self.predicates;
        writeln!(f, "order: {}", names.len())?;
        writeln!(f, "elements: {}", names.join(" "))?;
        writeln!(f, "band: {}", p.is_band)?;
        writeln!(f, "left_zero: {}", p.is_left_zero)?;
        writeln!(f, "zero_semigroup: {}", p.is_zero_semigroup)?;
        writeln!(f, "semilattice: {}", p.is_semilattice)?;
        writeln!(f, "left_regular_band: {}", p.is_left_regular_band)?;
        writeln!(f, "left_normal_band: {}", p.is_left_normal_band)?;
        writeln!(f, "left_legal: {}", p.is_left_legal)?;
        writeln!(f, "commutative: {}", p.is_commutative)?;
        for (id, holds) in &self.identities {
            writeln!(f, "{id}: {holds}")?;
        }
        let mut square = String::from("{");
        for (i, &a) in self.square_ideal.iter().enumerate() {
            if i > 0 {
                square.push(' ');
            }
            let _ = write!(square, "{}", names[a]);
        }
        square.push('}');
        writeln!(f, "square_ideal: {square}")?;
        writeln!(f, "rees_quotient_order: {}", self.rees_quotient_order)?;
        writeln!(f, "rees_quotient_zero: {}", self.rees_quotient_is_zero)?;
        writeln!(f, "eta: {}", partition(&self.eta, "n/a (not left legal)"))?;
        writeln!(
            f,
            "semilattice_components: {}",
            partition(&self.components, "n/a (not left legal)")
        )?;
        writeln!(
            f,
            "least_semilattice_congruence: {}",
            partition(
                &self.least_semilattice_congruence,
                "n/a (order above bound)"
            )
        )?;
        for (label, rel) in [("tau", &self.tau), ("sigma", &self.sigma)] {
            match rel {
                Ok(p) => writeln!(f, "{label}: {}", p.render(names))?,
                Err(e) => writeln!(f, "{label}: error ({e})")?,
            }
        }
        let r = &self.retract;
        writeln!(
            f,
            "square_retract: onto={} fixes_ideal={} homomorphism={} retract={}",
            r.onto_square, r.fixes_ideal, r.is_homomorphism, r.is_retract
        )?;
        let s = &self.separativity;
        writeln!(
            f,
            "separativity: right={} left={} weak={}",
            s.right_separative, s.left_separative, s.weakly_separative
        )?;
        writeln!(f, "putcha: {}", self.putcha)?;
        let varieties: Vec<&str> = self.varieties.iter().map(|v| v.name()).collect();
        writeln!(f, "varieties: {}", varieties.join(" "))?;
        match self.subdirectly_irreducible {
            Some(si) => writeln!(f, "subdirectly_irreducible: {si}")?,
            None => writeln!(f, "subdirectly_irreducible: n/a (order above bound)")?,
        }
        write!(f, "{}", self.audit)
    }
}
