//! Decision procedures built on reversing: cancellativity, lcm and gcd,
//! word problems for the monoid and the group of fractions, fraction
//! reduction, mixed reversing, and orbit exploration. The brute-force
//! rewriting oracle is re-exported here as the independent cross-check.

use crate::completeness::{
    check_completeness, complete_presentation, CompletenessMethod, CompletenessMode,
    CompletenessStatus, CompletenessVerdict, CompletionStatus,
};
use crate::error::{Error, Result};
use crate::oracle;
use crate::presentation::{Presentation, Relation};
use crate::reversing::{
    min_nontrivial_steps_to_empty, numerator_denominator_right, reverse_all_right, reverse_right,
    Limits, ReversalStatus, Strategy,
};
use crate::word::{SignedWord, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Yes,
    No,
    Unknown,
}

/// Renders a status for reports.
pub fn status_name(s: Status) -> &'static str {
    match s {
        Status::Yes => "yes",
        Status::No => "no",
        Status::Unknown => "unknown",
    }
}

/// Breadth-first search over single-relation rewrites; the combinatorial
/// distance when the target is reached within the limits.
pub fn bfs_equivalence_oracle(
    p: &Presentation,
    u: &Word,
    v: &Word,
    limits: &Limits,
) -> Option<usize> {
    oracle::equivalence_distance(p, u, v, limits).0
}

/// Tries the homogeneous-letters criterion first, the closed-set criterion
/// second, and reports Unknown when neither applies.
pub fn establish_completeness(p: &Presentation, limits: &Limits) -> CompletenessVerdict {
    let unknown = |method: CompletenessMethod, why: &str| CompletenessVerdict {
        status: CompletenessStatus::Unknown,
        method,
        failing: Vec::new(),
        weights: None,
        closed_set: None,
        limit: Some(why.into()),
    };
    match check_completeness(p, CompletenessMode::HomogeneousLetters, limits) {
        Ok(v) => v,
        Err(Error::NotHomogeneous) => {
            match check_completeness(p, CompletenessMode::ClosedSet(None), limits) {
                Ok(v) => v,
                Err(_) => unknown(
                    CompletenessMethod::ClosedSet,
                    "no applicable completeness criterion",
                ),
            }
        }
        Err(_) => unknown(CompletenessMethod::HomogeneousLetters, "criterion failed"),
    }
}

fn reaches_empty(p: &Presentation, w: &SignedWord, limits: &Limits) -> Option<bool> {
    match min_nontrivial_steps_to_empty(p, w, limits) {
        (Some(_), _) => Some(true),
        (None, false) => Some(false),
        (None, true) => None,
    }
}

/// A presentation of the same monoid on which completeness is established,
/// together with the relations completion had to add to get there. Criteria
/// are free to use whichever presentation of the monoid is most convenient,
/// as long as the evidence chain stays explicit.
#[derive(Clone, Debug)]
pub struct CompletenessPipeline {
    pub presentation: Presentation,
    pub verdict: CompletenessVerdict,
    pub added: Vec<Relation>,
}

/// Establishes completeness for the monoid of `p`, running the completion
/// procedure when the given presentation itself is incomplete.
pub fn complete_and_verify(p: &Presentation, limits: &Limits) -> CompletenessPipeline {
    let verdict = establish_completeness(p, limits);
    if verdict.status != CompletenessStatus::Incomplete {
        return CompletenessPipeline {
            presentation: p.clone(),
            verdict,
            added: Vec::new(),
        };
    }
    if let Ok(result) = complete_presentation(p, limits) {
        if result.status == CompletionStatus::Completed && result.weights.is_some() {
            let verdict = establish_completeness(&result.presentation, limits);
            return CompletenessPipeline {
                presentation: result.presentation,
                verdict,
                added: result.added,
            };
        }
    }
    CompletenessPipeline {
        presentation: p.clone(),
        verdict,
        added: Vec::new(),
    }
}

#[derive(Clone, Debug)]
pub struct CancellativityVerdict {
    pub status: Status,
    /// Checked on the mirror presentation for the right-hand version.
    pub mirrored: bool,
    pub completeness: CompletenessVerdict,
    /// Relations completion added to reach a complete presentation of the
    /// same monoid before the criterion was read off.
    pub completed_with: Vec<Relation>,
    /// A relation s v = s v' whose tails do not reverse to the empty word.
    pub failing_relation: Option<Relation>,
    pub limit: Option<String>,
}

/// Left-cancellativity via completeness: once the presentation is complete,
/// it suffices that v^-1 v' reverses to the empty word for every relation
/// s v = s v'.
pub fn left_cancellative(p: &Presentation, limits: &Limits) -> CancellativityVerdict {
    cancellative_inner(p, limits, false)
}

/// Right-cancellativity is left-cancellativity of the mirror.
pub fn right_cancellative(p: &Presentation, limits: &Limits) -> CancellativityVerdict {
    let mut v = cancellative_inner(&p.mirror(), limits, true);
    v.failing_relation = v.failing_relation.map(|r| r.mirrored());
    v
}

fn cancellative_inner(p: &Presentation, limits: &Limits, mirrored: bool) -> CancellativityVerdict {
    let pipeline = complete_and_verify(p, limits);
    let completeness = pipeline.verdict;
    let completed_with = pipeline.added;
    if completeness.status != CompletenessStatus::Complete {
        return CancellativityVerdict {
            status: Status::Unknown,
            mirrored,
            completeness,
            completed_with,
            failing_relation: None,
            limit: Some("completeness not established".into()),
        };
    }
    let q = &pipeline.presentation;
    for r in q.relations() {
        if r.lhs.first() != r.rhs.first() {
            continue;
        }
        let w = SignedWord::quotient(&r.lhs.tail(), &r.rhs.tail());
        match reaches_empty(q, &w, limits) {
            Some(true) => {}
            Some(false) => {
                return CancellativityVerdict {
                    status: Status::No,
                    mirrored,
                    completeness,
                    completed_with,
                    failing_relation: Some(r.clone()),
                    limit: None,
                }
            }
            None => {
                return CancellativityVerdict {
                    status: Status::Unknown,
                    mirrored,
                    completeness,
                    completed_with,
                    failing_relation: Some(r.clone()),
                    limit: Some("tail reversal truncated".into()),
                }
            }
        }
    }
    CancellativityVerdict {
        status: Status::Yes,
        mirrored,
        completeness,
        completed_with,
        failing_relation: None,
        limit: None,
    }
}

#[derive(Clone, Debug)]
pub struct EquivalenceVerdict {
    pub status: Status,
    pub completeness: CompletenessVerdict,
    /// Least number of nontrivial steps reversing u^-1 v to empty, on Yes.
    pub steps: Option<usize>,
    pub limit: Option<String>,
}

/// Monoid word problem over a complete presentation: u and v are equivalent
/// iff some reversing of u^-1 v reaches the empty word.
pub fn equivalent_monoid(
    p: &Presentation,
    u: &Word,
    v: &Word,
    limits: &Limits,
    completeness: Option<CompletenessVerdict>,
) -> EquivalenceVerdict {
    let completeness = completeness.unwrap_or_else(|| establish_completeness(p, limits));
    if completeness.status != CompletenessStatus::Complete {
        return EquivalenceVerdict {
            status: Status::Unknown,
            completeness,
            steps: None,
            limit: Some("completeness not established".into()),
        };
    }
    let w = SignedWord::quotient(u, v);
    let (steps, truncated) = min_nontrivial_steps_to_empty(p, &w, limits);
    let status = match (steps, truncated) {
        (Some(_), _) => Status::Yes,
        (None, false) => Status::No,
        (None, true) => Status::Unknown,
    };
    EquivalenceVerdict {
        status,
        completeness,
        steps,
        limit: truncated.then(|| "search truncated".into()),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GroupVariant {
    /// Reverse to N D^-1, then decide D^-1 N => empty by right-reversing.
    RightRight,
    /// Reverse to N D^-1, then left-reverse it and test for empty.
    RightLeft,
}

#[derive(Clone, Debug)]
pub struct GroupPrerequisites {
    pub completeness: CompletenessVerdict,
    pub left_cancellative: Status,
    pub right_cancellative: Status,
}

#[derive(Clone, Debug)]
pub struct GroupVerdict {
    pub status: Status,
    pub variant: GroupVariant,
    pub prerequisites: GroupPrerequisites,
    /// The positive-negative split N D^-1 obtained by the first reversing.
    pub fraction: Option<(Word, Word)>,
    pub limit: Option<String>,
}

/// Word problem of the enveloping group of fractions by double reversing.
/// Sound once the monoid is complete and cancellative on both sides.
pub fn equivalent_group(
    p: &Presentation,
    w: &SignedWord,
    variant: GroupVariant,
    limits: &Limits,
) -> GroupVerdict {
    let completeness = establish_completeness(p, limits);
    let left = left_cancellative(p, limits).status;
    let right = right_cancellative(p, limits).status;
    let prerequisites = GroupPrerequisites {
        completeness: completeness.clone(),
        left_cancellative: left,
        right_cancellative: right,
    };
    if completeness.status != CompletenessStatus::Complete
        || left != Status::Yes
        || right != Status::Yes
    {
        return GroupVerdict {
            status: Status::Unknown,
            variant,
            prerequisites,
            fraction: None,
            limit: Some("prerequisite verdicts missing".into()),
        };
    }
    let out = reverse_right(p, w, Strategy::ExhaustiveFirst, limits);
    let Some((num, den)) = (match out.status {
        ReversalStatus::Terminal => out.numerator_denominator,
        _ => None,
    }) else {
        let limit = match out.status {
            ReversalStatus::Stuck { .. } => "no common right-multiple found".to_string(),
            _ => "first reversing hit limits".to_string(),
        };
        return GroupVerdict {
            status: Status::Unknown,
            variant,
            prerequisites,
            fraction: None,
            limit: Some(limit),
        };
    };
    let empties = match variant {
        GroupVariant::RightRight => reaches_empty(p, &SignedWord::quotient(&den, &num), limits),
        GroupVariant::RightLeft => {
            let fraction = SignedWord::fraction_right(&num, &den);
            reaches_empty(&p.mirror(), &fraction.mirrored(), limits)
        }
    };
    let (status, limit) = match empties {
        Some(true) => (Status::Yes, None),
        Some(false) => (Status::No, None),
        None => (Status::Unknown, Some("second reversing hit limits".into())),
    };
    GroupVerdict {
        status,
        variant,
        prerequisites,
        fraction: Some((num, den)),
        limit,
    }
}

fn require_complete_complemented(p: &Presentation, limits: &Limits) -> Result<()> {
    if !p.is_complemented() {
        return Err(Error::NotComplemented);
    }
    let v = establish_completeness(p, limits);
    if v.status != CompletenessStatus::Complete {
        return Err(Error::Prerequisite("completeness not established".into()));
    }
    Ok(())
}

fn require_double_complete(p: &Presentation, limits: &Limits) -> Result<()> {
    require_complete_complemented(p, limits)?;
    let m = p.mirror();
    if !m.is_complemented() {
        return Err(Error::NotComplemented);
    }
    let v = establish_completeness(&m, limits);
    if v.status != CompletenessStatus::Complete {
        return Err(Error::Prerequisite(
            "left-completeness not established".into(),
        ));
    }
    Ok(())
}

/// Representative of the right-lcm of u and v: u (u\v), when the complement
/// exists. `Ok(None)` when reversing gets stuck, meaning there is no common
/// right-multiple.
pub fn right_lcm(p: &Presentation, u: &Word, v: &Word, limits: &Limits) -> Result<Option<Word>> {
    require_complete_complemented(p, limits)?;
    Ok(crate::reversing::complement(p, u, v, limits)?.map(|(uv, _)| u.concat(&uv)))
}

/// (N, D) with the left-reversal of `w` ending in D^-1 N.
fn left_numerator_denominator(
    p: &Presentation,
    w: &SignedWord,
    limits: &Limits,
) -> Result<(Word, Word)> {
    let m = p.mirror();
    let out = reverse_right(&m, &w.mirrored(), Strategy::Leftmost, limits);
    match out.status {
        ReversalStatus::Terminal => out
            .word
            .mirrored()
            .as_negative_positive()
            .ok_or_else(|| Error::Prerequisite("left reversal did not end negative-positive".into())),
        ReversalStatus::Stuck { pair: (s, t) } => Err(Error::Stuck {
            left: p.name(t).to_string(),
            right: p.name(s).to_string(),
        }),
        ReversalStatus::LimitExceeded { kind } => Err(Error::LimitExceeded(kind.describe().into())),
    }
}

/// Left-gcd by a triple reversing: right-reverse u^-1 v to N D^-1,
/// left-reverse that to w^-1 w', then left-reverse u w^-1 to w*^-1 u*.
/// The word w* must come out empty and u* represents the gcd.
pub fn left_gcd(p: &Presentation, u: &Word, v: &Word, limits: &Limits) -> Result<Word> {
    require_double_complete(p, limits)?;
    let (num, den) = numerator_denominator_right(p, &SignedWord::quotient(u, v), limits)?;
    let (_, reduced_den) =
        left_numerator_denominator(p, &SignedWord::fraction_right(&num, &den), limits)?;
    let (gcd, obstruction) =
        left_numerator_denominator(p, &SignedWord::fraction_right(u, &reduced_den), limits)?;
    if !obstruction.is_empty() {
        return Err(Error::Prerequisite(format!(
            "gcd hypothesis violated: nonempty obstruction `{}`",
            p.word_to_string(&obstruction)
        )));
    }
    Ok(gcd)
}

/// Minimal fractionary decomposition (D, N) of the class of `w` in the
/// group: right-reverse to N D^-1, then left-reverse to D'^-1 N'.
pub fn reduce_fraction(p: &Presentation, w: &SignedWord, limits: &Limits) -> Result<(Word, Word)> {
    require_double_complete(p, limits)?;
    let (num, den) = numerator_denominator_right(p, w, limits)?;
    let (n, d) = left_numerator_denominator(p, &SignedWord::fraction_right(&num, &den), limits)?;
    Ok((d, n))
}

#[derive(Clone, Debug)]
pub struct DivisibilityVerdict {
    pub status: Status,
    /// A word q with u q equivalent to w, on Yes.
    pub quotient: Option<Word>,
    pub completeness: CompletenessVerdict,
    pub limit: Option<String>,
}

/// Does u left-divide w? Yes iff some reversing of u^-1 w terminates with an
/// empty denominator. Yes answers are sound unconditionally; No answers rely
/// on the completeness evidence carried in the verdict.
pub fn left_divides(
    p: &Presentation,
    u: &Word,
    w: &Word,
    limits: &Limits,
    completeness: Option<CompletenessVerdict>,
) -> DivisibilityVerdict {
    let completeness = completeness.unwrap_or_else(|| establish_completeness(p, limits));
    let quotient = SignedWord::quotient(u, w);
    if p.is_complemented() {
        let out = reverse_right(p, &quotient, Strategy::Leftmost, limits);
        return match out.status {
            ReversalStatus::Terminal => {
                let (n, d) = out.numerator_denominator.unwrap();
                if d.is_empty() {
                    DivisibilityVerdict {
                        status: Status::Yes,
                        quotient: Some(n),
                        completeness,
                        limit: None,
                    }
                } else {
                    DivisibilityVerdict {
                        status: Status::No,
                        quotient: None,
                        completeness,
                        limit: None,
                    }
                }
            }
            ReversalStatus::Stuck { .. } => DivisibilityVerdict {
                status: Status::No,
                quotient: None,
                completeness,
                limit: None,
            },
            ReversalStatus::LimitExceeded { kind } => DivisibilityVerdict {
                status: Status::Unknown,
                quotient: None,
                completeness,
                limit: Some(kind.describe().into()),
            },
        };
    }
    let set = reverse_all_right(p, &quotient, limits);
    for t in &set.terminals {
        if let Some((n, d)) = t.as_positive_negative() {
            if d.is_empty() {
                return DivisibilityVerdict {
                    status: Status::Yes,
                    quotient: Some(n),
                    completeness,
                    limit: None,
                };
            }
        }
    }
    DivisibilityVerdict {
        status: if set.truncated {
            Status::Unknown
        } else {
            Status::No
        },
        quotient: None,
        completeness,
        limit: set.truncated.then(|| "search truncated".into()),
    }
}

#[derive(Clone, Debug)]
pub struct MixedVerdict {
    pub status: Status,
    pub explored: usize,
    /// A witnessing derivation to the empty word, on Yes.
    pub path: Option<Vec<SignedWord>>,
}

/// Bounded breadth-first search over the four mixed rewrite families:
/// right-reversing steps, left-reversing steps, relations applied to
/// positive subwords, and relations applied to inverted subwords.
pub fn mixed_reverse_to_empty(p: &Presentation, w: &SignedWord, limits: &Limits) -> MixedVerdict {
    use std::collections::{HashMap, VecDeque};
    if w.is_empty() {
        return MixedVerdict {
            status: Status::Yes,
            explored: 1,
            path: Some(vec![SignedWord::empty()]),
        };
    }
    let mirror = p.mirror();
    let mut parents: HashMap<SignedWord, Option<SignedWord>> = HashMap::new();
    parents.insert(w.clone(), None);
    let mut queue: VecDeque<SignedWord> = VecDeque::new();
    queue.push_back(w.clone());
    let mut expansions = 0usize;
    let mut truncated = false;
    while let Some(word) = queue.pop_front() {
        expansions += 1;
        if expansions > limits.max_steps {
            truncated = true;
            break;
        }
        for next in mixed_successors(p, &mirror, &word) {
            if next.len() > limits.max_word_length {
                truncated = true;
                continue;
            }
            if parents.contains_key(&next) {
                continue;
            }
            if parents.len() >= limits.max_frontier {
                truncated = true;
                continue;
            }
            parents.insert(next.clone(), Some(word.clone()));
            if next.is_empty() {
                let mut path = vec![SignedWord::empty()];
                let mut cur = word.clone();
                loop {
                    path.push(cur.clone());
                    match parents.get(&cur).cloned().flatten() {
                        Some(prev) => cur = prev,
                        None => break,
                    }
                }
                path.reverse();
                return MixedVerdict {
                    status: Status::Yes,
                    explored: parents.len(),
                    path: Some(path),
                };
            }
            queue.push_back(next);
        }
    }
    MixedVerdict {
        status: if truncated { Status::Unknown } else { Status::No },
        explored: parents.len(),
        path: None,
    }
}

fn mixed_successors(p: &Presentation, mirror: &Presentation, w: &SignedWord) -> Vec<SignedWord> {
    let mut out = Vec::new();
    // Right-reversing steps, including trivial tiles.
    for step in crate::reversing::one_step_all(p, w) {
        out.push(step.word);
    }
    // Left-reversing steps on positive-negative factors t s^-1.
    for i in 0..w.len().saturating_sub(1) {
        if !(w.0[i].positive && !w.0[i + 1].positive) {
            continue;
        }
        let t = w.0[i].letter;
        let s = w.0[i + 1].letter;
        if t == s {
            let mut v = w.0[..i].to_vec();
            v.extend_from_slice(&w.0[i + 2..]);
            out.push(SignedWord(v));
        }
        // A relation v' s = v t appears in the mirror index under (s, t).
        for rule in mirror.eligible(s, t) {
            let vp = rule.tail_left.reversed();
            let vv = rule.tail_right.reversed();
            let mut replacement = SignedWord::inverse_of(&vv);
            replacement.0.extend(SignedWord::from_positive(&vp).0);
            let mut v = w.0[..i].to_vec();
            v.extend_from_slice(&replacement.0);
            v.extend_from_slice(&w.0[i + 2..]);
            out.push(SignedWord(v));
        }
    }
    // Relations applied to positive and to inverted subwords.
    for r in p.relations() {
        for (from, to) in [(&r.lhs, &r.rhs), (&r.rhs, &r.lhs)] {
            let k = from.len();
            if k > w.len() {
                continue;
            }
            let positive = SignedWord::from_positive(from);
            let inverted = SignedWord::inverse_of(from);
            for start in 0..=w.len() - k {
                let window = &w.0[start..start + k];
                if window == positive.0.as_slice() {
                    let mut v = w.0[..start].to_vec();
                    v.extend(SignedWord::from_positive(to).0);
                    v.extend_from_slice(&w.0[start + k..]);
                    out.push(SignedWord(v));
                }
                if window == inverted.0.as_slice() {
                    let mut v = w.0[..start].to_vec();
                    v.extend(SignedWord::inverse_of(to).0);
                    v.extend_from_slice(&w.0[start + k..]);
                    out.push(SignedWord(v));
                }
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrbitStatus {
    Cycle { length: usize, entry: usize },
    LimitExceeded,
}

#[derive(Clone, Debug)]
pub struct OrbitReport {
    pub pairs: Vec<(Word, Word)>,
    pub status: OrbitStatus,
}

/// Iterates the map sending (u, v) to (D(u^-1 v), N(u^-1 v)) and reports the
/// first cycle, comparing pairs by word equality first and by monoid
/// equivalence when the presentation is known complete.
pub fn phi_orbit(
    p: &Presentation,
    u: &Word,
    v: &Word,
    limits: &Limits,
    max_iterations: usize,
    complete: bool,
) -> Result<OrbitReport> {
    if !p.is_complemented() {
        return Err(Error::NotComplemented);
    }
    let mut pairs: Vec<(Word, Word)> = vec![(u.clone(), v.clone())];
    for _ in 0..max_iterations {
        let (cu, cv) = pairs.last().unwrap().clone();
        let (num, den) = numerator_denominator_right(p, &SignedWord::quotient(&cu, &cv), limits)?;
        let next = (den, num);
        for (i, prev) in pairs.iter().enumerate() {
            let same_words = *prev == next;
            let same_classes = || {
                complete
                    && reaches_empty(p, &SignedWord::quotient(&prev.0, &next.0), limits)
                        == Some(true)
                    && reaches_empty(p, &SignedWord::quotient(&prev.1, &next.1), limits)
                        == Some(true)
            };
            if same_words || same_classes() {
                let length = pairs.len() - i;
                pairs.push(next);
                return Ok(OrbitReport {
                    pairs,
                    status: OrbitStatus::Cycle { length, entry: i },
                });
            }
        }
        pairs.push(next);
    }
    Ok(OrbitReport {
        pairs,
        status: OrbitStatus::LimitExceeded,
    })
}

/// Minimal nontrivial reversing steps from u^-1 v to the empty word over
/// all strategies: the reversing distance of an equivalent pair.
pub fn reversing_distance(p: &Presentation, u: &Word, v: &Word, limits: &Limits) -> Option<usize> {
    min_nontrivial_steps_to_empty(p, &SignedWord::quotient(u, v), limits).0
}

/// The signed word u v^-1 for the group word problem on a pair.
pub fn signed_from_pair(u: &Word, v: &Word) -> SignedWord {
    SignedWord::fraction_right(u, v)
}
