//! The cube condition, completeness verdicts, closure under complement, and
//! the completion procedure that adds redundant relations until the cube
//! condition holds on letters.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::oracle;
use crate::presentation::{Presentation, Relation};
use crate::reversing::{
    complement_any, min_nontrivial_steps_to_empty, reverse_all_right, Limits,
};
use crate::weights::{homogeneity_witness, WeightVector};
use crate::word::{SignedWord, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CubeStatus {
    Holds,
    Fails,
    /// No reversing of the test word reaches a positive-negative word, so
    /// the condition is vacuously true.
    VacuouslyHolds,
    Unknown,
}

/// Evidence for a failed cube check: the intermediate v' v^-1 reached from
/// u^-1 u'' u''^-1 u', and the residual (u v')^-1 (u' v) that provably does
/// not reverse to the empty word.
#[derive(Clone, Debug)]
pub struct CubeWitness {
    pub numerator: Word,
    pub denominator: Word,
    pub residual: SignedWord,
}

#[derive(Clone, Debug)]
pub struct CubeReport {
    pub triple: (Word, Word, Word),
    pub status: CubeStatus,
    pub witness: Option<CubeWitness>,
    pub limit: Option<String>,
}

/// Whether some reversing sequence from `w` reaches the empty word.
/// `Some(true)`: yes; `Some(false)`: provably not; `None`: limits hit.
fn reaches_empty(p: &Presentation, w: &SignedWord, limits: &Limits) -> Option<bool> {
    match min_nontrivial_steps_to_empty(p, w, limits) {
        (Some(_), _) => Some(true),
        (None, false) => Some(false),
        (None, true) => None,
    }
}

/// Checks the cube condition for the ordered triple (u, u', u''): every
/// positive-negative word v' v^-1 reachable from u^-1 u'' u''^-1 u' must
/// have (u v')^-1 (u' v) reversing to the empty word.
pub fn cube_condition(
    p: &Presentation,
    u: &Word,
    u1: &Word,
    u2: &Word,
    limits: &Limits,
) -> CubeReport {
    let triple = (u.clone(), u1.clone(), u2.clone());
    let mut test = SignedWord::quotient(u, u2);
    test.0.extend(SignedWord::quotient(u2, u1).0);
    let set = reverse_all_right(p, &test, limits);
    if set.truncated {
        return CubeReport {
            triple,
            status: CubeStatus::Unknown,
            witness: None,
            limit: Some("terminal enumeration truncated".into()),
        };
    }
    let mut saw_positive_negative = false;
    for t in &set.terminals {
        let Some((num, den)) = t.as_positive_negative() else {
            continue;
        };
        saw_positive_negative = true;
        let residual = SignedWord::quotient(&u.concat(&num), &u1.concat(&den));
        match reaches_empty(p, &residual, limits) {
            Some(true) => {}
            Some(false) => {
                return CubeReport {
                    triple,
                    status: CubeStatus::Fails,
                    witness: Some(CubeWitness {
                        numerator: num,
                        denominator: den,
                        residual,
                    }),
                    limit: None,
                }
            }
            None => {
                return CubeReport {
                    triple,
                    status: CubeStatus::Unknown,
                    witness: None,
                    limit: Some("residual search truncated".into()),
                }
            }
        }
    }
    CubeReport {
        triple,
        status: if saw_positive_negative {
            CubeStatus::Holds
        } else {
            CubeStatus::VacuouslyHolds
        },
        witness: None,
        limit: None,
    }
}

/// The complemented form of the cube condition: evaluates
/// ((x\y)\(x\z)) \ ((y\x)\(y\z)) for the three cyclic permutations of
/// (u, u', u''), each of which must be empty or undefined.
pub fn cube_condition_complemented(
    p: &Presentation,
    u: &Word,
    u1: &Word,
    u2: &Word,
    limits: &Limits,
) -> Result<CubeReport> {
    if !p.is_complemented() {
        return Err(Error::NotComplemented);
    }
    let triple = (u.clone(), u1.clone(), u2.clone());
    let perms = [
        (u.clone(), u1.clone(), u2.clone()),
        (u1.clone(), u2.clone(), u.clone()),
        (u2.clone(), u.clone(), u1.clone()),
    ];
    for (x, y, z) in perms {
        let value = (|| -> Result<Option<Word>> {
            let Some((xy, yx)) = complement_any(p, &x, &y, limits)? else {
                return Ok(None);
            };
            let Some((xz, _)) = complement_any(p, &x, &z, limits)? else {
                return Ok(None);
            };
            let Some((yz, _)) = complement_any(p, &y, &z, limits)? else {
                return Ok(None);
            };
            let Some((left, _)) = complement_any(p, &xy, &xz, limits)? else {
                return Ok(None);
            };
            let Some((right, _)) = complement_any(p, &yx, &yz, limits)? else {
                return Ok(None);
            };
            Ok(complement_any(p, &left, &right, limits)?.map(|(w, _)| w))
        })();
        match value {
            Ok(None) => {}
            Ok(Some(w)) if w.is_empty() => {}
            Ok(Some(w)) => {
                return Ok(CubeReport {
                    triple,
                    status: CubeStatus::Fails,
                    witness: Some(CubeWitness {
                        numerator: w.clone(),
                        denominator: Word::empty(),
                        residual: SignedWord::from_positive(&w),
                    }),
                    limit: None,
                })
            }
            Err(Error::LimitExceeded(msg)) => {
                return Ok(CubeReport {
                    triple,
                    status: CubeStatus::Unknown,
                    witness: None,
                    limit: Some(msg),
                })
            }
            Err(e) => return Err(e),
        }
    }
    Ok(CubeReport {
        triple,
        status: CubeStatus::Holds,
        witness: None,
        limit: None,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CompletenessStatus {
    Complete,
    Incomplete,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CompletenessMethod {
    /// Cube condition on all letter triples, justified by a homogeneity
    /// witness.
    HomogeneousLetters,
    /// Cube condition on all triples from a finite set closed under
    /// complement; requires a complemented presentation.
    ClosedSet,
}

#[derive(Clone, Debug)]
pub struct CompletenessVerdict {
    pub status: CompletenessStatus,
    pub method: CompletenessMethod,
    pub failing: Vec<CubeReport>,
    pub weights: Option<WeightVector>,
    pub closed_set: Option<Vec<Word>>,
    pub limit: Option<String>,
}

/// Checking mode for [`check_completeness`].
#[derive(Clone, Debug, Default)]
pub enum CompletenessMode {
    #[default]
    HomogeneousLetters,
    /// Check on the given closed set, or on the computed closure of the
    /// alphabet when absent.
    ClosedSet(Option<Vec<Word>>),
}

pub fn check_completeness(
    p: &Presentation,
    mode: CompletenessMode,
    limits: &Limits,
) -> Result<CompletenessVerdict> {
    match mode {
        CompletenessMode::HomogeneousLetters => {
            let weights = homogeneity_witness(p).ok_or(Error::NotHomogeneous)?;
            let words: Vec<Word> = p.letters().map(Word::single).collect();
            Ok(verdict_from_scan(
                p,
                &words,
                CompletenessMethod::HomogeneousLetters,
                Some(weights),
                None,
                limits,
            ))
        }
        CompletenessMode::ClosedSet(supplied) => {
            if !p.is_complemented() {
                return Err(Error::NotComplemented);
            }
            let set = match supplied {
                Some(s) => s,
                None => match closure_under_complement(p, &[], limits)? {
                    Some(s) => s,
                    None => {
                        return Ok(CompletenessVerdict {
                            status: CompletenessStatus::Unknown,
                            method: CompletenessMethod::ClosedSet,
                            failing: Vec::new(),
                            weights: None,
                            closed_set: None,
                            limit: Some("closure exceeded limits".into()),
                        })
                    }
                },
            };
            Ok(verdict_from_scan(
                p,
                &set,
                CompletenessMethod::ClosedSet,
                None,
                Some(set.clone()),
                limits,
            ))
        }
    }
}

fn verdict_from_scan(
    p: &Presentation,
    words: &[Word],
    method: CompletenessMethod,
    weights: Option<WeightVector>,
    closed_set: Option<Vec<Word>>,
    limits: &Limits,
) -> CompletenessVerdict {
    let mut failing = Vec::new();
    let mut unknown = None;
    for u in words {
        for u1 in words {
            for u2 in words {
                let report = cube_condition(p, u, u1, u2, limits);
                match report.status {
                    CubeStatus::Fails => failing.push(report),
                    CubeStatus::Unknown => {
                        unknown.get_or_insert_with(|| {
                            report.limit.clone().unwrap_or_else(|| "limit".into())
                        });
                    }
                    _ => {}
                }
            }
        }
    }
    let status = if !failing.is_empty() {
        CompletenessStatus::Incomplete
    } else if unknown.is_some() {
        CompletenessStatus::Unknown
    } else {
        CompletenessStatus::Complete
    };
    CompletenessVerdict {
        status,
        method,
        failing,
        weights,
        closed_set,
        limit: unknown,
    }
}

/// Is `set` closed under complement? For a complemented presentation this
/// means each defined u\v lies in the set as a word. In general every pair
/// must admit at least one positive-negative reversal whose two sides lie
/// in the set up to the rewriting congruence. `None` when limits prevent
/// deciding.
pub fn is_closed_under_complement(
    p: &Presentation,
    set: &[Word],
    limits: &Limits,
) -> Option<bool> {
    let complemented = p.is_complemented();
    for u in set {
        for v in set {
            if complemented {
                match complement_any(p, u, v, limits) {
                    Ok(Some((uv, _))) => {
                        if !set.contains(&uv) {
                            return Some(false);
                        }
                    }
                    Ok(None) => {}
                    Err(_) => return None,
                }
            } else {
                let outcomes = positive_negative_outcomes(p, u, v, limits)?;
                if outcomes.is_empty() {
                    continue;
                }
                let ok = outcomes.iter().any(|(n, d)| {
                    in_set_up_to_equivalence(p, set, n, limits) == Some(true)
                        && in_set_up_to_equivalence(p, set, d, limits) == Some(true)
                });
                if !ok {
                    return Some(false);
                }
            }
        }
    }
    Some(true)
}

fn in_set_up_to_equivalence(
    p: &Presentation,
    set: &[Word],
    w: &Word,
    limits: &Limits,
) -> Option<bool> {
    for s in set {
        match oracle::equivalence_distance(p, s, w, limits) {
            (Some(_), _) => return Some(true),
            (None, false) => {}
            (None, true) => return None,
        }
    }
    Some(false)
}

/// All positive-negative terminal reversals of u^-1 v, as (numerator,
/// denominator) pairs. `None` when the enumeration was truncated.
fn positive_negative_outcomes(
    p: &Presentation,
    u: &Word,
    v: &Word,
    limits: &Limits,
) -> Option<Vec<(Word, Word)>> {
    let set = reverse_all_right(p, &SignedWord::quotient(u, v), limits);
    if set.truncated {
        return None;
    }
    Some(
        set.terminals
            .iter()
            .filter_map(|t| t.as_positive_negative())
            .collect(),
    )
}

/// Least set containing the seed and the alphabet and closed under
/// complement. For a complemented presentation the closure is canonical.
/// Otherwise each pair must keep at least one of its reversal outcomes
/// inside the set: the computation adds, per unsatisfied pair, the outcome
/// introducing the fewest new rewriting classes (ties broken by the least
/// canonical representative), so the result is deterministic. Returns
/// `None` when limits stop the closure.
pub fn closure_under_complement(
    p: &Presentation,
    seed: &[Word],
    limits: &Limits,
) -> Result<Option<Vec<Word>>> {
    let complemented = p.is_complemented();
    let mut elems: Vec<Word> = Vec::new();
    let push_word = |elems: &mut Vec<Word>, w: Word| {
        if !elems.contains(&w) {
            elems.push(w);
        }
    };
    for l in p.letters() {
        push_word(&mut elems, Word::single(l));
    }
    for w in seed {
        push_word(&mut elems, w.clone());
    }

    // Class-aware insertion for the non-complemented case. Ok(None) means a
    // limit prevented deciding membership.
    let push_class = |elems: &mut Vec<Word>, w: &Word, limits: &Limits| -> Option<()> {
        for e in elems.iter() {
            match oracle::equivalence_distance(p, e, w, limits) {
                (Some(_), _) => return Some(()),
                (None, false) => {}
                (None, true) => return None,
            }
        }
        elems.push(oracle::canonical_representative(p, w, limits));
        Some(())
    };

    let mut queue: VecDeque<(usize, usize)> = VecDeque::new();
    let enqueue_for = |queue: &mut VecDeque<(usize, usize)>, n: usize| {
        for i in 0..=n {
            queue.push_back((i, n));
        }
        for i in 0..n {
            queue.push_back((n, i));
        }
    };
    for n in 0..elems.len() {
        enqueue_for(&mut queue, n);
    }

    let mut processed = 0usize;
    while let Some((i, j)) = queue.pop_front() {
        processed += 1;
        if processed > limits.max_steps || elems.len() > limits.max_frontier {
            return Ok(None);
        }
        let (u, v) = (elems[i].clone(), elems[j].clone());
        if complemented {
            match complement_any(p, &u, &v, limits) {
                Ok(Some((uv, _))) => {
                    let before = elems.len();
                    push_word(&mut elems, uv);
                    for n in before..elems.len() {
                        enqueue_for(&mut queue, n);
                    }
                }
                Ok(None) => {}
                Err(Error::LimitExceeded(_)) => return Ok(None),
                Err(e) => return Err(e),
            }
        } else {
            let Some(outcomes) = positive_negative_outcomes(p, &u, &v, limits) else {
                return Ok(None);
            };
            if outcomes.is_empty() {
                continue;
            }
            let mut satisfied = false;
            for (n, d) in &outcomes {
                let a = in_set_up_to_equivalence(p, &elems, n, limits);
                let b = in_set_up_to_equivalence(p, &elems, d, limits);
                match (a, b) {
                    (Some(true), Some(true)) => {
                        satisfied = true;
                        break;
                    }
                    (None, _) | (_, None) => return Ok(None),
                    _ => {}
                }
            }
            if satisfied {
                continue;
            }
            // Choose the outcome introducing the fewest, then least, new
            // representatives.
            let mut best: Option<(usize, Vec<Word>, (Word, Word))> = None;
            for (n, d) in &outcomes {
                let mut new_reps = Vec::new();
                for w in [n, d] {
                    if in_set_up_to_equivalence(p, &elems, w, limits) == Some(false) {
                        let rep = oracle::canonical_representative(p, w, limits);
                        if !new_reps.contains(&rep) {
                            new_reps.push(rep);
                        }
                    }
                }
                new_reps.sort();
                let candidate = (new_reps.len(), new_reps, (n.clone(), d.clone()));
                if best
                    .as_ref()
                    .is_none_or(|b| (candidate.0, &candidate.1) < (b.0, &b.1))
                {
                    best = Some(candidate);
                }
            }
            let (_, _, (n, d)) = best.expect("outcomes nonempty");
            let before = elems.len();
            if push_class(&mut elems, &n, limits).is_none() {
                return Ok(None);
            }
            if push_class(&mut elems, &d, limits).is_none() {
                return Ok(None);
            }
            for k in before..elems.len() {
                enqueue_for(&mut queue, k);
            }
        }
    }
    Ok(Some(elems))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CompletionStatus {
    Completed,
    Diverged,
}

#[derive(Clone, Debug)]
pub struct CompletionResult {
    pub presentation: Presentation,
    pub added: Vec<Relation>,
    pub rounds: usize,
    pub status: CompletionStatus,
    /// Present when the input is homogeneous; only then does a clean scan
    /// certify completeness.
    pub weights: Option<WeightVector>,
    pub note: Option<String>,
}

const MAX_ADDED_RELATIONS: usize = 64;
const MAX_RELATION_SIDE: usize = 32;

/// Iteratively adds the redundant relation witnessed by the first failing
/// letter triple, restarting the scan after each addition, until every
/// letter triple passes or the divergence cutoffs are hit.
pub fn complete_presentation(p: &Presentation, limits: &Limits) -> Result<CompletionResult> {
    let weights = homogeneity_witness(p);
    let mut current = p.clone();
    let mut added: Vec<Relation> = Vec::new();
    let mut rounds = 0usize;
    'scan: loop {
        rounds += 1;
        if rounds > MAX_ADDED_RELATIONS + 1 {
            return Ok(diverged(current, added, rounds, weights, "round cutoff"));
        }
        let letters: Vec<Word> = current.letters().map(Word::single).collect();
        for u in &letters {
            for u1 in &letters {
                for u2 in &letters {
                    let report = cube_condition(&current, u, u1, u2, limits);
                    match report.status {
                        CubeStatus::Fails => {
                            let w = report.witness.unwrap();
                            let lhs = u.concat(&w.numerator);
                            let rhs = u1.concat(&w.denominator);
                            if lhs.len() > MAX_RELATION_SIDE
                                || rhs.len() > MAX_RELATION_SIDE
                                || added.len() >= MAX_ADDED_RELATIONS
                            {
                                return Ok(diverged(
                                    current,
                                    added,
                                    rounds,
                                    weights,
                                    "relation growth cutoff",
                                ));
                            }
                            let r = Relation::new(lhs, rhs);
                            added.push(r.clone());
                            current = current.with_relation(r)?;
                            continue 'scan;
                        }
                        CubeStatus::Unknown => {
                            return Ok(diverged(
                                current,
                                added,
                                rounds,
                                weights,
                                "cube check hit limits",
                            ));
                        }
                        _ => {}
                    }
                }
            }
        }
        return Ok(CompletionResult {
            presentation: current,
            added,
            rounds,
            status: CompletionStatus::Completed,
            weights,
            note: None,
        });
    }
}

fn diverged(
    presentation: Presentation,
    added: Vec<Relation>,
    rounds: usize,
    weights: Option<WeightVector>,
    note: &str,
) -> CompletionResult {
    CompletionResult {
        presentation,
        added,
        rounds,
        status: CompletionStatus::Diverged,
        weights,
        note: Some(note.into()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::parse_presentation;

    fn preferred() -> Presentation {
        parse_presentation("gens: a b c d\nrel: a b = b c = c a\nrel: b a = d b = a d\n").unwrap()
    }

    fn completed_preferred() -> Presentation {
        parse_presentation(
            "gens: a b c d\nrel: a b = b c = c a\nrel: b a = d b = a d\nrel: c a a = d b b\n",
        )
        .unwrap()
    }

    fn flag_braid() -> Presentation {
        parse_presentation("gens: a b c\nrel: a b a = b b\nrel: a c a = c b\nrel: b c a = c c\n")
            .unwrap()
    }

    fn w(p: &Presentation, s: &str) -> Word {
        p.parse_word(s).unwrap()
    }

    #[test]
    fn cube_holds_for_a_c_b_on_the_preferred_example() {
        // The test word -a b -b c reverses to b -a and d b -a -a; both
        // residuals -b -a c a and -b -d -a c a a reverse to the empty word.
        let p = preferred();
        let r = cube_condition(&p, &w(&p, "a"), &w(&p, "c"), &w(&p, "b"), &Limits::default());
        assert_eq!(r.status, CubeStatus::Holds);
    }

    #[test]
    fn cube_fails_for_c_d_a_on_the_preferred_example() {
        let p = preferred();
        let r = cube_condition(&p, &w(&p, "c"), &w(&p, "d"), &w(&p, "a"), &Limits::default());
        assert_eq!(r.status, CubeStatus::Fails);
        let witness = r.witness.unwrap();
        assert_eq!(p.word_to_string(&witness.numerator), "a a");
        assert_eq!(p.word_to_string(&witness.denominator), "b b");
        assert_eq!(p.signed_to_string(&witness.residual), "-a -a -c d b b");
    }

    #[test]
    fn cube_fails_for_a_b_c_on_the_flag_braid_presentation() {
        let p = flag_braid();
        let r = cube_condition(&p, &w(&p, "a"), &w(&p, "b"), &w(&p, "c"), &Limits::default());
        assert_eq!(r.status, CubeStatus::Fails);
        let witness = r.witness.unwrap();
        assert_eq!(p.word_to_string(&witness.numerator), "c a c a");
        assert_eq!(p.word_to_string(&witness.denominator), "c a c");
        // The residual reverses to a -a, not to the empty word.
        let set = reverse_all_right(&p, &witness.residual, &Limits::default());
        assert!(!set.truncated);
        let rendered: Vec<String> =
            set.terminals.iter().map(|t| p.signed_to_string(t)).collect();
        assert!(rendered.contains(&"a -a".to_string()), "{rendered:?}");
    }

    #[test]
    fn complemented_cube_agrees_and_fails_on_the_non_homogeneous_example() {
        let p = parse_presentation("gens: a b c\nrel: a = b b c\nrel: b a = c\nrel: c a = a\n")
            .unwrap();
        let r = cube_condition_complemented(
            &p,
            &w(&p, "a"),
            &w(&p, "b c"),
            &w(&p, "c"),
            &Limits::default(),
        )
        .unwrap();
        assert_eq!(r.status, CubeStatus::Fails);
        let generic = cube_condition(
            &p,
            &w(&p, "a"),
            &w(&p, "b c"),
            &w(&p, "c"),
            &Limits::default(),
        );
        assert_eq!(generic.status, CubeStatus::Fails);
    }

    #[test]
    fn complemented_cube_trivial_and_braid_triples_hold() {
        let b3 = parse_presentation("gens: s1 s2\nrel: s1 s2 s1 = s2 s1 s2\n").unwrap();
        let r = cube_condition_complemented(
            &b3,
            &w(&b3, "s1"),
            &w(&b3, "s2"),
            &w(&b3, "s1"),
            &Limits::default(),
        )
        .unwrap();
        assert_eq!(r.status, CubeStatus::Holds);
        let generic = cube_condition(
            &b3,
            &w(&b3, "s1"),
            &w(&b3, "s2"),
            &w(&b3, "s1"),
            &Limits::default(),
        );
        assert!(matches!(
            generic.status,
            CubeStatus::Holds | CubeStatus::VacuouslyHolds
        ));
        // (u, u, u'') holds trivially.
        let r = cube_condition_complemented(
            &b3,
            &w(&b3, "s1 s2"),
            &w(&b3, "s1 s2"),
            &w(&b3, "s1"),
            &Limits::default(),
        )
        .unwrap();
        assert_eq!(r.status, CubeStatus::Holds);
    }

    #[test]
    fn completeness_verdicts() {
        let p = preferred();
        let v = check_completeness(&p, CompletenessMode::HomogeneousLetters, &Limits::default())
            .unwrap();
        assert_eq!(v.status, CompletenessStatus::Incomplete);
        assert!(v.failing.iter().any(|r| p.word_to_string(&r.triple.0) == "c"
            && p.word_to_string(&r.triple.1) == "d"
            && p.word_to_string(&r.triple.2) == "a"));

        let q = completed_preferred();
        let v = check_completeness(&q, CompletenessMode::HomogeneousLetters, &Limits::default())
            .unwrap();
        assert_eq!(v.status, CompletenessStatus::Complete);
        assert!(v.weights.is_some());

        let b3 = parse_presentation("gens: s1 s2\nrel: s1 s2 s1 = s2 s1 s2\n").unwrap();
        let v = check_completeness(&b3, CompletenessMode::HomogeneousLetters, &Limits::default())
            .unwrap();
        assert_eq!(v.status, CompletenessStatus::Complete);
    }

    #[test]
    fn closure_for_the_complemented_example() {
        let p = parse_presentation("gens: a b c\nrel: a = b b c\nrel: b a = c\nrel: c a = a\n")
            .unwrap();
        let set = closure_under_complement(&p, &[], &Limits::default())
            .unwrap()
            .unwrap();
        let mut names: Vec<String> = set.iter().map(|w| p.word_to_string(w)).collect();
        names.sort();
        assert_eq!(names, vec!["", "a", "b", "b c", "c"]);
        assert_eq!(
            is_closed_under_complement(&p, &set, &Limits::default()),
            Some(true)
        );
    }

    #[test]
    fn closure_for_the_free_monoid_is_letters_plus_empty() {
        let p = parse_presentation("gens: a b\n").unwrap();
        let set = closure_under_complement(&p, &[], &Limits::default())
            .unwrap()
            .unwrap();
        let mut names: Vec<String> = set.iter().map(|w| p.word_to_string(w)).collect();
        names.sort();
        assert_eq!(names, vec!["", "a", "b"]);
    }

    #[test]
    fn closure_for_the_completed_preferred_presentation() {
        // Nine classes: the empty word, the four letters, a^2, b^2, and the
        // classes of ab and of ba (the latter shows up as its least
        // representative a d).
        let p = completed_preferred();
        let set = closure_under_complement(&p, &[], &Limits::default())
            .unwrap()
            .unwrap();
        let mut names: Vec<String> = set.iter().map(|w| p.word_to_string(w)).collect();
        names.sort();
        assert_eq!(
            names,
            vec!["", "a", "a a", "a b", "a d", "b", "b b", "c", "d"]
        );
        assert_eq!(
            is_closed_under_complement(&p, &set, &Limits::default()),
            Some(true)
        );
    }

    #[test]
    fn closure_minimality_for_the_completed_presentation() {
        let p = completed_preferred();
        let set = closure_under_complement(&p, &[], &Limits::default())
            .unwrap()
            .unwrap();
        assert!(set.len() <= 12);
        let seeds: Vec<Word> = p.letters().map(Word::single).collect();
        for e in set.iter().filter(|e| !seeds.contains(e)) {
            let reduced: Vec<Word> = set.iter().filter(|x| *x != e).cloned().collect();
            assert_eq!(
                is_closed_under_complement(&p, &reduced, &Limits::default()),
                Some(false),
                "removing {} should break closure",
                p.word_to_string(e)
            );
        }
    }

    #[test]
    fn completion_of_the_preferred_presentation_adds_one_relation() {
        let p = preferred();
        let result = complete_presentation(&p, &Limits::default()).unwrap();
        assert_eq!(result.status, CompletionStatus::Completed);
        assert_eq!(result.added.len(), 1);
        let r = &result.added[0];
        assert_eq!(result.presentation.word_to_string(&r.lhs), "c a a");
        assert_eq!(result.presentation.word_to_string(&r.rhs), "d b b");
        let v = check_completeness(
            &result.presentation,
            CompletenessMode::HomogeneousLetters,
            &Limits::default(),
        )
        .unwrap();
        assert_eq!(v.status, CompletenessStatus::Complete);
    }

    #[test]
    fn completion_of_an_already_complete_presentation_adds_nothing() {
        let b3 = parse_presentation("gens: s1 s2\nrel: s1 s2 s1 = s2 s1 s2\n").unwrap();
        let result = complete_presentation(&b3, &Limits::default()).unwrap();
        assert_eq!(result.status, CompletionStatus::Completed);
        assert!(result.added.is_empty());
        assert_eq!(result.rounds, 1);
    }

    #[test]
    fn completion_of_the_heisenberg_presentation_adds_ab_equals_cba() {
        let p = parse_presentation(
            "gens: a b c\nrel: a c = c a\nrel: b c = c b\nrel: a b = b a c\n",
        )
        .unwrap();
        let result = complete_presentation(&p, &Limits::default()).unwrap();
        assert!(result.weights.is_none());
        let first = &result.added[0];
        assert_eq!(result.presentation.word_to_string(&first.lhs), "a b");
        assert_eq!(result.presentation.word_to_string(&first.rhs), "c b a");
        // The enlarged presentation has two relations a... = b...
        assert!(!result.presentation.is_complemented());
    }

    #[test]
    fn completion_of_the_flag_braid_presentation_diverges() {
        let p = flag_braid();
        let limits = Limits::new(20_000, 256, 50_000);
        let result = complete_presentation(&p, &limits).unwrap();
        assert_eq!(result.status, CompletionStatus::Diverged);
        assert!(!result.added.is_empty());
        let first = &result.added[0];
        assert_eq!(result.presentation.word_to_string(&first.lhs), "a c a c a");
        assert_eq!(result.presentation.word_to_string(&first.rhs), "b c a c");
    }
}
