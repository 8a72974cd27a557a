//! Mechanical check of the structure theorems on a single finite semigroup.
//!
//! Each clause is an implication or an equivalence between properties that
//! are all computable on a finite table. Implications whose hypothesis fails
//! on the given input are reported as [`ClauseStatus::VacuousPass`].

use std::fmt;

use super::{
    eta_relation, is_putcha, putcha_violation, semilattice_components, separativity,
    square_retract_check, tau_relation, tau_shortcut,
};
use crate::finite::{basic_predicates, holds, square_ideal, Semigroup};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClauseStatus {
    Pass,
    VacuousPass,
    Fail,
}

impl ClauseStatus {
    pub fn is_ok(self) -> bool {
        self != ClauseStatus::Fail
    }

    pub fn as_str(self) -> &'static str {
        match self {
            ClauseStatus::Pass => "pass",
            ClauseStatus::VacuousPass => "vacuous-pass",
            ClauseStatus::Fail => "fail",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditClause {
    pub id: char,
    pub name: &'static str,
    pub status: ClauseStatus,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditReport {
    pub clauses: Vec<AuditClause>,
}

impl AuditReport {
    pub fn all_ok(&self) -> bool {
        self.clauses.iter().all(|c| c.status.is_ok())
    }

    pub fn clause(&self, id: char) -> &AuditClause {
        self.clauses
            .iter()
            .find(|c| c.id == id)
            .expect("unknown clause id")
    }
}

/// One line per clause: `audit (a) retract_onto_lrb: pass; <detail>`.
impl fmt::Display for AuditReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.clauses {
            writeln!(
                f,
                "audit ({}) {}: {}; {}",
                c.id,
                c.name,
                c.status.as_str(),
                c.detail
            )?;
        }
        Ok(())
    }
}

fn equivalence(id: char, name: &'static str, lhs: (&str, bool), rhs: (&str, bool)) -> AuditClause {
    let status = if lhs.1 == rhs.1 {
        ClauseStatus::Pass
    } else {
        ClauseStatus::Fail
    };
    AuditClause {
        id,
        name,
        status,
        detail: format!("{}: {}, {}: {}", lhs.0, lhs.1, rhs.0, rhs.1),
    }
}

fn implication(
    id: char,
    name: &'static str,
    hypothesis: (&str, bool),
    conclusion: impl FnOnce() -> (bool, String),
) -> AuditClause {
    if !hypothesis.1 {
        return AuditClause {
            id,
            name,
            status: ClauseStatus::VacuousPass,
            detail: format!("{}: false", hypothesis.0),
        };
    }
    let (ok, detail) = conclusion();
    AuditClause {
        id,
        name,
        status: if ok {
            ClauseStatus::Pass
        } else {
            ClauseStatus::Fail
        },
        detail: format!("{}: true, {}", hypothesis.0, detail),
    }
}

pub fn theorem_audit(s: &Semigroup) -> AuditReport {
    let name = |a: usize| s.name(a).to_string();
    let basic = basic_predicates(s);
    let left_legal = basic.is_left_legal;
    let square = square_ideal(s);
    let square_basic = basic_predicates(&square.sub);
    let retract = square_retract_check(s);
    let sep = separativity(s);

    let mut clauses = Vec::with_capacity(8);

    clauses.push(equivalence(
        'a',
        "retract_onto_lrb",
        ("aba=ab and ab=a^2b", left_legal && holds(s, "ab=aab")),
        (
            "a->a^2 retracts onto left regular band S^2",
            retract.is_retract && square_basic.is_left_regular_band,
        ),
    ));

    clauses.push(equivalence(
        'b',
        "retract_onto_left_zero",
        ("ab=ac", holds(s, "ab=ac")),
        (
            "a->a^2 retracts onto left zero S^2",
            retract.is_retract && square_basic.is_left_zero,
        ),
    ));

    clauses.push(implication(
        'c',
        "indecomposable",
        ("left legal", left_legal),
        || {
            let eta_universal = eta_relation(s)
                .map(|r| r.relation.is_universal())
                .unwrap_or(false);
            let absorbs = holds(s, "aab=aa");
            let square_lz = square_basic.is_left_zero;
            (
                eta_universal == absorbs && absorbs == square_lz,
                format!(
                "eta universal: {eta_universal}, a^2b=a^2: {absorbs}, S^2 left zero: {square_lz}"
            ),
            )
        },
    ));

    clauses.push(implication('d', "tau_equals_eta", ("left legal", left_legal), || {
        let (Ok(tau), Ok(eta), Ok(components)) =
            (tau_relation(s, false), eta_relation(s), semilattice_components(s))
        else {
            return (false, "relation computation failed".to_string());
        };
        let shortcut = tau_shortcut(s);
        let equal = tau.relation == eta.relation
            && eta.relation == components
            && tau.relation == shortcut;
        let quotient_ok = tau.is_congruence && tau.semilattice_quotient;
        (
            equal && quotient_ok,
            format!(
                "tau = eta = components = shortcut: {equal}, tau congruence with semilattice (hence weakly separative) quotient: {quotient_ok}, tau: {}",
                tau.relation.render(s.names())
            ),
        )
    }));

    clauses.push(implication(
        'e',
        "right_iff_weak_separative",
        ("left legal", left_legal),
        || {
            (
                sep.right_separative == sep.weakly_separative,
                format!(
                    "right separative: {}, weakly separative: {}",
                    sep.right_separative, sep.weakly_separative
                ),
            )
        },
    ));

    clauses.push(implication(
        'f',
        "left_separative_commutative",
        (
            "left legal and left separative",
            left_legal && sep.left_separative,
        ),
        || {
            (
                basic.is_commutative,
                format!("commutative: {}", basic.is_commutative),
            )
        },
    ));

    clauses.push(implication(
        'g',
        "putcha",
        ("left legal", left_legal),
        || {
            let ok = is_putcha(s);
            let detail = match putcha_violation(s) {
                None => "putcha: true".to_string(),
                Some((a, b)) => format!("putcha: false, witness a={} b={}", name(a), name(b)),
            };
            (ok, detail)
        },
    ));

    clauses.push(implication(
        'h',
        "lemmas",
        ("left legal", left_legal),
        || {
            let idempotent_square = square.subset.iter().find(|&&e| s.square(e) != e);
            let cube = s.elements().find(|&a| s.pow(a, 3) != s.pow(a, 2));
            let right_square = s.elements().find_map(|a| {
                s.elements()
                    .find(|&b| s.mul(a, b) != s.mul(a, s.square(b)))
                    .map(|b| (a, b))
            });
            let mut detail = vec![
                format!("S^2 idempotent: {}", idempotent_square.is_none()),
                format!("a^3=a^2: {}", cube.is_none()),
                format!("ab=ab^2: {}", right_square.is_none()),
            ];
            if let Some(&e) = idempotent_square {
                detail.push(format!("witness e={}", name(e)));
            }
            if let Some(a) = cube {
                detail.push(format!("witness a={}", name(a)));
            }
            if let Some((a, b)) = right_square {
                detail.push(format!("witness a={} b={}", name(a), name(b)));
            }
            (
                idempotent_square.is_none() && cube.is_none() && right_square.is_none(),
                detail.join(", "),
            )
        },
    ));

    AuditReport { clauses }
}
