//! Right- and left-reversing of signed words: single steps, full runs under
//! the leftmost and exhaustive strategies, complements, and numerator /
//! denominator extraction.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::presentation::Presentation;
use crate::word::{Letter, SignedWord, Word};

/// Resource caps guarding against non-terminating reversings.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Cap on applied reversing steps (or node expansions in searches).
    pub max_steps: usize,
    /// Cap on the length of any signed word produced.
    pub max_word_length: usize,
    /// Cap on distinct words explored in exhaustive searches.
    pub max_frontier: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_steps: 100_000,
            max_word_length: 4096,
            max_frontier: 1_000_000,
        }
    }
}

impl Limits {
    pub fn new(max_steps: usize, max_word_length: usize, max_frontier: usize) -> Self {
        Limits {
            max_steps,
            max_word_length,
            max_frontier,
        }
    }
}

/// Which resource cap was hit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LimitKind {
    Steps,
    WordLength,
    Frontier,
}

impl LimitKind {
    pub fn describe(self) -> &'static str {
        match self {
            LimitKind::Steps => "step budget",
            LimitKind::WordLength => "word length cap",
            LimitKind::Frontier => "frontier cap",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ReversalStatus {
    /// No negative-positive factor remains.
    Terminal,
    /// Some factor s^-1 t admits no relation and nothing else applies.
    Stuck { pair: (Letter, Letter) },
    LimitExceeded { kind: LimitKind },
}

/// Result of a full reversing run.
#[derive(Clone, Debug)]
pub struct ReversalOutcome {
    pub status: ReversalStatus,
    /// Final word: terminal word, stuck word, or last word when a limit hit.
    pub word: SignedWord,
    /// All reversing steps applied along the reported run.
    pub steps: usize,
    /// Steps other than s^-1 s => empty.
    pub nontrivial_steps: usize,
    /// (N, D) with the run ending in N D^-1 (right) or D^-1 N (left).
    pub numerator_denominator: Option<(Word, Word)>,
    pub trace: Option<Vec<SignedWord>>,
}

impl ReversalOutcome {
    pub fn is_terminal(&self) -> bool {
        matches!(self.status, ReversalStatus::Terminal)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// Rewrite the leftmost reversible factor, trivial tile first, then
    /// relations in insertion order.
    Leftmost,
    /// Breadth-first over all choices; report the first terminal word found.
    ExhaustiveFirst,
}

/// The tile used by a single reversing step.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TileChoice {
    /// s^-1 s => empty.
    Trivial,
    /// Apply the relation with this index in `Presentation::relations`.
    Relation(usize),
}

/// One right-reversing step at `pos`: the factor s^-1 t there is replaced
/// by v' v^-1 for the chosen relation s v' = t v, or erased by the trivial
/// tile when s = t.
pub fn reverse_step_right(
    p: &Presentation,
    w: &SignedWord,
    pos: usize,
    choice: TileChoice,
) -> Result<SignedWord> {
    if pos + 1 >= w.len() || w.0[pos].positive || !w.0[pos + 1].positive {
        return Err(Error::NoFactorAt(pos));
    }
    let s = w.0[pos].letter;
    let t = w.0[pos + 1].letter;
    let replacement = match choice {
        TileChoice::Trivial => {
            if s != t {
                return Err(Error::NotEligible(pos));
            }
            SignedWord::empty()
        }
        TileChoice::Relation(id) => {
            let rule = p
                .eligible(s, t)
                .iter()
                .find(|r| r.relation == id)
                .ok_or(Error::NotEligible(pos))?;
            SignedWord::fraction_right(&rule.tail_left, &rule.tail_right)
        }
    };
    let mut out = Vec::with_capacity(w.len() + replacement.len());
    out.extend_from_slice(&w.0[..pos]);
    out.extend_from_slice(&replacement.0);
    out.extend_from_slice(&w.0[pos + 2..]);
    Ok(SignedWord(out))
}

pub(crate) struct Step {
    pub word: SignedWord,
    pub nontrivial: bool,
}

/// All one-step right-reversals of `w`, ordered by factor position, trivial
/// tile first, then relations in insertion order.
pub(crate) fn one_step_all(p: &Presentation, w: &SignedWord) -> Vec<Step> {
    let mut out = Vec::new();
    for pos in w.negative_positive_factors() {
        let s = w.0[pos].letter;
        let t = w.0[pos + 1].letter;
        if s == t {
            out.push(Step {
                word: reverse_step_right(p, w, pos, TileChoice::Trivial).unwrap(),
                nontrivial: false,
            });
        }
        for rule in p.eligible(s, t) {
            out.push(Step {
                word: reverse_step_right(p, w, pos, TileChoice::Relation(rule.relation)).unwrap(),
                nontrivial: true,
            });
        }
    }
    out
}

fn finish(
    status: ReversalStatus,
    word: SignedWord,
    steps: usize,
    nontrivial: usize,
    trace: Option<Vec<SignedWord>>,
    numden: impl Fn(&SignedWord) -> Option<(Word, Word)>,
) -> ReversalOutcome {
    let numerator_denominator = if matches!(status, ReversalStatus::Terminal) {
        numden(&word)
    } else {
        None
    };
    ReversalOutcome {
        status,
        word,
        steps,
        nontrivial_steps: nontrivial,
        numerator_denominator,
        trace,
    }
}

/// Full right-reversing of `w`.
pub fn reverse_right(
    p: &Presentation,
    w: &SignedWord,
    strategy: Strategy,
    limits: &Limits,
) -> ReversalOutcome {
    reverse_right_inner(p, w, strategy, limits, false)
}

/// Like [`reverse_right`] but records the sequence of words visited.
pub fn reverse_right_traced(
    p: &Presentation,
    w: &SignedWord,
    strategy: Strategy,
    limits: &Limits,
) -> ReversalOutcome {
    reverse_right_inner(p, w, strategy, limits, true)
}

fn reverse_right_inner(
    p: &Presentation,
    w: &SignedWord,
    strategy: Strategy,
    limits: &Limits,
    record: bool,
) -> ReversalOutcome {
    match strategy {
        Strategy::Leftmost => leftmost_run(p, w, limits, record),
        Strategy::ExhaustiveFirst => exhaustive_first_run(p, w, limits, record),
    }
}

fn leftmost_run(
    p: &Presentation,
    w: &SignedWord,
    limits: &Limits,
    record: bool,
) -> ReversalOutcome {
    let mut word = w.clone();
    let mut steps = 0usize;
    let mut nontrivial = 0usize;
    let mut trace = record.then(|| vec![word.clone()]);
    let numden = |v: &SignedWord| v.as_positive_negative();
    loop {
        if word.len() > limits.max_word_length {
            return finish(
                ReversalStatus::LimitExceeded {
                    kind: LimitKind::WordLength,
                },
                word,
                steps,
                nontrivial,
                trace,
                numden,
            );
        }
        let factors = word.negative_positive_factors();
        if factors.is_empty() {
            return finish(ReversalStatus::Terminal, word, steps, nontrivial, trace, numden);
        }
        let mut applied = false;
        for pos in &factors {
            let s = word.0[*pos].letter;
            let t = word.0[*pos + 1].letter;
            if s == t {
                word = reverse_step_right(p, &word, *pos, TileChoice::Trivial).unwrap();
                applied = true;
            } else if let Some(rule) = p.eligible(s, t).first() {
                word =
                    reverse_step_right(p, &word, *pos, TileChoice::Relation(rule.relation)).unwrap();
                applied = true;
                nontrivial += 1;
            }
            if applied {
                steps += 1;
                if let Some(tr) = trace.as_mut() {
                    tr.push(word.clone());
                }
                break;
            }
        }
        if !applied {
            let pos = factors[0];
            let pair = (word.0[pos].letter, word.0[pos + 1].letter);
            return finish(
                ReversalStatus::Stuck { pair },
                word,
                steps,
                nontrivial,
                trace,
                numden,
            );
        }
        if steps > limits.max_steps {
            return finish(
                ReversalStatus::LimitExceeded {
                    kind: LimitKind::Steps,
                },
                word,
                steps,
                nontrivial,
                trace,
                numden,
            );
        }
    }
}

fn exhaustive_first_run(
    p: &Presentation,
    w: &SignedWord,
    limits: &Limits,
    record: bool,
) -> ReversalOutcome {
    // Breadth-first with a parent map so the reported counts refer to the
    // actual derivation of the returned word.
    let numden = |v: &SignedWord| v.as_positive_negative();
    let mut parents: HashMap<SignedWord, Option<(SignedWord, bool)>> = HashMap::new();
    parents.insert(w.clone(), None);
    let mut queue: VecDeque<SignedWord> = VecDeque::new();
    queue.push_back(w.clone());
    let mut expansions = 0usize;
    let mut first_dead: Option<SignedWord> = None;
    let mut last = w.clone();
    let report = |word: SignedWord,
                  status: ReversalStatus,
                  parents: &HashMap<SignedWord, Option<(SignedWord, bool)>>| {
        let (steps, nontrivial, trace) = reconstruct(&word, parents, record);
        finish(status, word, steps, nontrivial, trace, numden)
    };

    while let Some(word) = queue.pop_front() {
        last = word.clone();
        let factors = word.negative_positive_factors();
        if factors.is_empty() {
            return report(word, ReversalStatus::Terminal, &parents);
        }
        expansions += 1;
        if expansions > limits.max_steps {
            return report(
                last,
                ReversalStatus::LimitExceeded {
                    kind: LimitKind::Steps,
                },
                &parents,
            );
        }
        let succ = one_step_all(p, &word);
        if succ.is_empty() {
            first_dead.get_or_insert(word.clone());
            continue;
        }
        for step in succ {
            if step.word.len() > limits.max_word_length {
                return report(
                    step.word,
                    ReversalStatus::LimitExceeded {
                        kind: LimitKind::WordLength,
                    },
                    &parents,
                );
            }
            if parents.contains_key(&step.word) {
                continue;
            }
            if parents.len() >= limits.max_frontier {
                return report(
                    word,
                    ReversalStatus::LimitExceeded {
                        kind: LimitKind::Frontier,
                    },
                    &parents,
                );
            }
            parents.insert(step.word.clone(), Some((word.clone(), step.nontrivial)));
            queue.push_back(step.word);
        }
    }
    // Search space exhausted without reaching a terminal word.
    let dead = first_dead.unwrap_or(last);
    let pos = dead.negative_positive_factors()[0];
    let pair = (dead.0[pos].letter, dead.0[pos + 1].letter);
    report(dead, ReversalStatus::Stuck { pair }, &parents)
}

fn reconstruct(
    word: &SignedWord,
    parents: &HashMap<SignedWord, Option<(SignedWord, bool)>>,
    record: bool,
) -> (usize, usize, Option<Vec<SignedWord>>) {
    let mut steps = 0usize;
    let mut nontrivial = 0usize;
    let mut path = vec![word.clone()];
    let mut cur = word.clone();
    while let Some(Some((parent, nt))) = parents.get(&cur) {
        steps += 1;
        if *nt {
            nontrivial += 1;
        }
        cur = parent.clone();
        path.push(cur.clone());
    }
    path.reverse();
    (steps, nontrivial, record.then_some(path))
}

/// Left-reversing, realized as right-reversing over the mirror presentation
/// with the word mirrored and the result mirrored back.
pub fn reverse_left(
    p: &Presentation,
    w: &SignedWord,
    strategy: Strategy,
    limits: &Limits,
) -> ReversalOutcome {
    reverse_left_inner(p, w, strategy, limits, false)
}

pub fn reverse_left_traced(
    p: &Presentation,
    w: &SignedWord,
    strategy: Strategy,
    limits: &Limits,
) -> ReversalOutcome {
    reverse_left_inner(p, w, strategy, limits, true)
}

fn reverse_left_inner(
    p: &Presentation,
    w: &SignedWord,
    strategy: Strategy,
    limits: &Limits,
    record: bool,
) -> ReversalOutcome {
    let mirror = p.mirror();
    let out = reverse_right_inner(&mirror, &w.mirrored(), strategy, limits, record);
    let word = out.word.mirrored();
    let status = match out.status {
        ReversalStatus::Stuck { pair: (s, t) } => ReversalStatus::Stuck { pair: (t, s) },
        other => other,
    };
    let numerator_denominator = if matches!(status, ReversalStatus::Terminal) {
        word.as_negative_positive()
    } else {
        None
    };
    ReversalOutcome {
        status,
        word,
        steps: out.steps,
        nontrivial_steps: out.nontrivial_steps,
        numerator_denominator,
        trace: out
            .trace
            .map(|tr| tr.into_iter().map(|v| v.mirrored()).collect()),
    }
}

/// The complement pair (u\v, v\u), defined when the deterministic reversing
/// of u^-1 v terminates. `Ok(None)` means the reversing got stuck, so the
/// complement does not exist.
pub fn complement(
    p: &Presentation,
    u: &Word,
    v: &Word,
    limits: &Limits,
) -> Result<Option<(Word, Word)>> {
    if !p.is_complemented() {
        return Err(Error::NotComplemented);
    }
    complement_any(p, u, v, limits)
}

/// Complement computation without the complementedness guard: uses the
/// deterministic leftmost strategy, which is canonical when the presentation
/// is complemented and a fixed choice function otherwise.
pub(crate) fn complement_any(
    p: &Presentation,
    u: &Word,
    v: &Word,
    limits: &Limits,
) -> Result<Option<(Word, Word)>> {
    let out = reverse_right(p, &SignedWord::quotient(u, v), Strategy::Leftmost, limits);
    match out.status {
        ReversalStatus::Terminal => Ok(Some(out.numerator_denominator.unwrap())),
        ReversalStatus::Stuck { .. } => Ok(None),
        ReversalStatus::LimitExceeded { kind } => {
            Err(Error::LimitExceeded(kind.describe().into()))
        }
    }
}

/// The unique positive words N, D with w => N D^-1 under deterministic
/// reversing of a complemented presentation.
pub fn numerator_denominator_right(
    p: &Presentation,
    w: &SignedWord,
    limits: &Limits,
) -> Result<(Word, Word)> {
    if !p.is_complemented() {
        return Err(Error::NotComplemented);
    }
    let out = reverse_right(p, w, Strategy::Leftmost, limits);
    match out.status {
        ReversalStatus::Terminal => Ok(out.numerator_denominator.unwrap()),
        ReversalStatus::Stuck { pair: (s, t) } => Err(Error::Stuck {
            left: p.name(s).to_string(),
            right: p.name(t).to_string(),
        }),
        ReversalStatus::LimitExceeded { kind } => {
            Err(Error::LimitExceeded(kind.describe().into()))
        }
    }
}

/// All words without a successor reachable from `w` by right-reversing.
#[derive(Clone, Debug)]
pub struct ReversalSet {
    /// Words with no one-step reversal: fully reversed or stuck.
    pub terminals: Vec<SignedWord>,
    /// True when a limit stopped the exploration before closure.
    pub truncated: bool,
    /// Number of distinct words visited.
    pub explored: usize,
}

/// Breadth-first closure over all one-step reversals with memoization.
pub fn reverse_all_right(p: &Presentation, w: &SignedWord, limits: &Limits) -> ReversalSet {
    let mut visited: HashSet<SignedWord> = HashSet::new();
    visited.insert(w.clone());
    let mut queue: VecDeque<SignedWord> = VecDeque::new();
    queue.push_back(w.clone());
    let mut terminals = Vec::new();
    let mut truncated = false;
    let mut expansions = 0usize;
    while let Some(word) = queue.pop_front() {
        expansions += 1;
        if expansions > limits.max_steps {
            truncated = true;
            break;
        }
        let succ = one_step_all(p, &word);
        if succ.is_empty() {
            terminals.push(word);
            continue;
        }
        for step in succ {
            if step.word.len() > limits.max_word_length {
                truncated = true;
                continue;
            }
            if visited.contains(&step.word) {
                continue;
            }
            if visited.len() >= limits.max_frontier {
                truncated = true;
                continue;
            }
            visited.insert(step.word.clone());
            queue.push_back(step.word);
        }
    }
    ReversalSet {
        terminals,
        truncated,
        explored: visited.len(),
    }
}

/// Whether some reversing sequence from `w` reaches the empty word, and the
/// least number of nontrivial steps over all such sequences (0-1 BFS).
/// Returns `(shortest, truncated)`.
pub fn min_nontrivial_steps_to_empty(
    p: &Presentation,
    w: &SignedWord,
    limits: &Limits,
) -> (Option<usize>, bool) {
    if w.is_empty() {
        return (Some(0), false);
    }
    let mut best: HashMap<SignedWord, usize> = HashMap::new();
    best.insert(w.clone(), 0);
    let mut queue: VecDeque<(SignedWord, usize)> = VecDeque::new();
    queue.push_back((w.clone(), 0));
    let mut truncated = false;
    let mut expansions = 0usize;
    while let Some((word, cost)) = queue.pop_front() {
        if best.get(&word).copied().unwrap_or(usize::MAX) < cost {
            continue;
        }
        expansions += 1;
        if expansions > limits.max_steps {
            truncated = true;
            break;
        }
        for step in one_step_all(p, &word) {
            if step.word.len() > limits.max_word_length {
                truncated = true;
                continue;
            }
            let c = cost + usize::from(step.nontrivial);
            if best.get(&step.word).is_none_or(|&old| c < old) {
                if best.len() >= limits.max_frontier {
                    truncated = true;
                    continue;
                }
                best.insert(step.word.clone(), c);
                if step.word.is_empty() {
                    continue;
                }
                if step.nontrivial {
                    queue.push_back((step.word, c));
                } else {
                    queue.push_front((step.word, c));
                }
            }
        }
    }
    (best.get(&SignedWord::empty()).copied(), truncated)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::parse_presentation;

    fn preferred() -> Presentation {
        parse_presentation("gens: a b c d\nrel: a b = b c = c a\nrel: b a = d b = a d\n").unwrap()
    }

    fn b3() -> Presentation {
        parse_presentation("gens: s1 s2\nrel: s1 s2 s1 = s2 s1 s2\n").unwrap()
    }

    #[test]
    fn single_step_on_the_preferred_example() {
        // B B B D C a c a a a at the (c, a) factor, via a b = c a.
        let p = preferred();
        let w = p.parse_signed_word("B B B D C a c a a a").unwrap();
        let pos = w.negative_positive_factors()[0];
        assert_eq!(pos, 4);
        let rule = p.eligible(p.letter("c").unwrap(), p.letter("a").unwrap());
        assert_eq!(rule.len(), 1);
        let next = reverse_step_right(&p, &w, pos, TileChoice::Relation(rule[0].relation)).unwrap();
        assert_eq!(p.signed_to_string(&next), "-b -b -b -d a -b c a a a");
    }

    #[test]
    fn trivial_step_erases_the_factor() {
        let p = preferred();
        let w = p.parse_signed_word("A a").unwrap();
        let next = reverse_step_right(&p, &w, 0, TileChoice::Trivial).unwrap();
        assert!(next.is_empty());
    }

    #[test]
    fn braid_single_step() {
        let p = b3();
        let w = p.parse_signed_word("-s1 s2").unwrap();
        let rule = p.eligible(p.letter("s1").unwrap(), p.letter("s2").unwrap());
        let next = reverse_step_right(&p, &w, 0, TileChoice::Relation(rule[0].relation)).unwrap();
        assert_eq!(p.signed_to_string(&next), "s2 s1 -s2 -s1");
    }

    #[test]
    fn stuck_reversal_of_the_preferred_words() {
        // (acaaa)^-1 (cdbbb) halts stuck on (c, d) after five steps, three
        // of them nontrivial.
        let p = preferred();
        let w = SignedWord::quotient(
            &p.parse_word("a c a a a").unwrap(),
            &p.parse_word("c d b b b").unwrap(),
        );
        let out = reverse_right_traced(&p, &w, Strategy::Leftmost, &Limits::default());
        let c = p.letter("c").unwrap();
        let d = p.letter("d").unwrap();
        assert_eq!(out.status, ReversalStatus::Stuck { pair: (c, d) });
        assert_eq!(out.steps, 5);
        assert_eq!(out.nontrivial_steps, 3);
        assert_eq!(out.trace.as_ref().unwrap().len(), 6);
    }

    #[test]
    fn quotient_of_a_word_by_itself_vanishes() {
        let p = preferred();
        for text in ["a", "a c a a a", "d b", ""] {
            let u = p.parse_word(text).unwrap();
            let w = SignedWord::quotient(&u, &u);
            let out = reverse_right(&p, &w, Strategy::Leftmost, &Limits::default());
            assert!(out.is_terminal());
            assert!(out.word.is_empty());
            assert_eq!(out.nontrivial_steps, 0);
        }
    }

    #[test]
    fn baumslag_solitar_word_growth_hits_the_limit() {
        let p = parse_presentation("gens: a b\nrel: a a b = b a\n").unwrap();
        let w = p.parse_signed_word("B a b").unwrap();
        let limits = Limits::new(10_000, 10, 10_000);
        let out = reverse_right_traced(&p, &w, Strategy::Leftmost, &limits);
        assert!(matches!(
            out.status,
            ReversalStatus::LimitExceeded {
                kind: LimitKind::WordLength
            }
        ));
        let trace = out.trace.unwrap();
        assert_eq!(p.signed_to_string(&trace[1]), "a -b -a b");
        assert_eq!(p.signed_to_string(&trace[2]), "a -b a b -a");
        for pair in trace.windows(2) {
            assert!(pair[0].len() <= pair[1].len(), "length must not decrease");
        }
    }

    #[test]
    fn left_reversing_braid_fraction() {
        // (sigma2 sigma3 sigma1 sigma2)(sigma1 sigma2 sigma3 sigma1)^-1
        // left-reverses to (sigma1 sigma3)^-1 (sigma2 sigma3) in B4.
        let p = parse_presentation(
            "gens: s1 s2 s3\nrel: s1 s2 s1 = s2 s1 s2\nrel: s2 s3 s2 = s3 s2 s3\nrel: s1 s3 = s3 s1\n",
        )
        .unwrap();
        let n = p.parse_word("s2 s3 s1 s2").unwrap();
        let d = p.parse_word("s1 s2 s3 s1").unwrap();
        let w = SignedWord::fraction_right(&n, &d);
        let out = reverse_left(&p, &w, Strategy::Leftmost, &Limits::default());
        assert!(out.is_terminal());
        assert_eq!(p.signed_to_string(&out.word), "-s3 -s1 s2 s3");
        let (num, den) = out.numerator_denominator.unwrap();
        assert_eq!(p.word_to_string(&num), "s2 s3");
        assert_eq!(p.word_to_string(&den), "s1 s3");
    }

    #[test]
    fn left_reversing_trivial_cases() {
        let p = b3();
        let w = p.parse_signed_word("s1 -s1").unwrap();
        let out = reverse_left(&p, &w, Strategy::Leftmost, &Limits::default());
        assert!(out.is_terminal());
        assert!(out.word.is_empty());

        // The empty word left-reverses only to itself.
        let out = reverse_left(&p, &SignedWord::empty(), Strategy::Leftmost, &Limits::default());
        assert!(out.is_terminal());
        assert!(out.word.is_empty());
    }

    #[test]
    fn mirror_duality_of_left_and_right() {
        let p = preferred();
        let m = p.mirror();
        let w = p.parse_signed_word("a c -a d b -c").unwrap();
        let left = reverse_left(&p, &w, Strategy::Leftmost, &Limits::default());
        let right = reverse_right(&m, &w.mirrored(), Strategy::Leftmost, &Limits::default());
        assert_eq!(left.word, right.word.mirrored());
        assert_eq!(left.nontrivial_steps, right.nontrivial_steps);
    }

    #[test]
    fn complement_examples() {
        // B4: s1 \ s3 = s3 and s3 \ s1 = s1.
        let p = parse_presentation(
            "gens: s1 s2 s3\nrel: s1 s2 s1 = s2 s1 s2\nrel: s2 s3 s2 = s3 s2 s3\nrel: s1 s3 = s3 s1\n",
        )
        .unwrap();
        let u = p.parse_word("s1").unwrap();
        let v = p.parse_word("s3").unwrap();
        let (uv, vu) = complement(&p, &u, &v, &Limits::default()).unwrap().unwrap();
        assert_eq!(p.word_to_string(&uv), "s3");
        assert_eq!(p.word_to_string(&vu), "s1");
        // u \ u is always empty.
        let w = p.parse_word("s1 s2 s3 s2").unwrap();
        let (a, b) = complement(&p, &w, &w, &Limits::default()).unwrap().unwrap();
        assert!(a.is_empty() && b.is_empty());
    }

    #[test]
    fn complement_by_hand_trace() {
        // a \ (b c) over a = b^2 c, b a = c, c a = a: reversing a^-1 b c goes
        // -c -b c, then -c a, then a, so a\(bc) = a and (bc)\a is empty.
        let p = parse_presentation("gens: a b c\nrel: a = b b c\nrel: b a = c\nrel: c a = a\n")
            .unwrap();
        assert!(p.is_complemented());
        let u = p.parse_word("a").unwrap();
        let v = p.parse_word("b c").unwrap();
        let (uv, vu) = complement(&p, &u, &v, &Limits::default()).unwrap().unwrap();
        assert_eq!(p.word_to_string(&uv), "a");
        assert!(vu.is_empty());
    }

    #[test]
    fn complement_requires_a_complemented_presentation() {
        let p = preferred();
        let u = p.parse_word("a").unwrap();
        let err = complement(&p, &u, &u, &Limits::default()).unwrap_err();
        assert_eq!(err, Error::NotComplemented);
    }

    #[test]
    fn numerator_denominator_on_braids() {
        let p = parse_presentation(
            "gens: s1 s2 s3\nrel: s1 s2 s1 = s2 s1 s2\nrel: s2 s3 s2 = s3 s2 s3\nrel: s1 s3 = s3 s1\n",
        )
        .unwrap();
        // N(s s^-1) = s, D(s s^-1) = s.
        let w = p.parse_signed_word("s1 -s1").unwrap();
        let (n, d) = numerator_denominator_right(&p, &w, &Limits::default()).unwrap();
        assert_eq!(p.word_to_string(&n), "s1");
        assert_eq!(p.word_to_string(&d), "s1");
        // N(empty) = D(empty) = empty.
        let (n, d) = numerator_denominator_right(&p, &SignedWord::empty(), &Limits::default())
            .unwrap();
        assert!(n.is_empty() && d.is_empty());
        // The fraction from the four-strand example.
        let w = p.parse_signed_word("-s3 -s1 s2 s3").unwrap();
        let (n, d) = numerator_denominator_right(&p, &w, &Limits::default()).unwrap();
        assert_eq!(p.word_to_string(&n), "s2 s3 s1 s2");
        assert_eq!(p.word_to_string(&d), "s1 s2 s3 s1");
    }

    #[test]
    fn exhaustive_and_leftmost_agree_on_complemented_presentations() {
        let p = b3();
        for (u, v) in [("s1 s2", "s2 s1"), ("s1 s2 s1", "s2 s1 s2"), ("s1", "s2 s2")] {
            let w = SignedWord::quotient(&p.parse_word(u).unwrap(), &p.parse_word(v).unwrap());
            let a = reverse_right(&p, &w, Strategy::Leftmost, &Limits::default());
            let b = reverse_right(&p, &w, Strategy::ExhaustiveFirst, &Limits::default());
            assert!(a.is_terminal() && b.is_terminal());
            assert_eq!(a.word, b.word);
        }
    }

    #[test]
    fn reverse_all_collects_every_terminal() {
        // A b B c over the preferred presentation reverses to b -a and to
        // d b -a -a.
        let p = preferred();
        let w = p.parse_signed_word("A b B c").unwrap();
        let set = reverse_all_right(&p, &w, &Limits::default());
        assert!(!set.truncated);
        let rendered: Vec<String> = set.terminals.iter().map(|t| p.signed_to_string(t)).collect();
        assert!(rendered.contains(&"b -a".to_string()), "{rendered:?}");
        assert!(rendered.contains(&"d b -a -a".to_string()), "{rendered:?}");
        assert_eq!(set.terminals.len(), 2);

        let w = p.parse_signed_word("-a a").unwrap();
        let set = reverse_all_right(&p, &w, &Limits::default());
        assert_eq!(set.terminals, vec![SignedWord::empty()]);
    }

    #[test]
    fn exhaustive_closure_of_the_stuck_pair_never_terminates_cleanly() {
        let p = preferred();
        let w = SignedWord::quotient(
            &p.parse_word("a c a a a").unwrap(),
            &p.parse_word("c d b b b").unwrap(),
        );
        let set = reverse_all_right(&p, &w, &Limits::default());
        assert!(!set.truncated);
        assert!(!set.terminals.is_empty());
        let c = p.letter("c").unwrap();
        let d = p.letter("d").unwrap();
        for t in &set.terminals {
            assert!(t.as_positive_negative().is_none(), "unexpectedly reversible");
            assert!(
                t.0.windows(2)
                    .any(|f| !f[0].positive && f[0].letter == c && f[1].positive && f[1].letter == d),
                "stuck word lacks the c^-1 d factor: {}",
                p.signed_to_string(t)
            );
        }
    }

    #[test]
    fn min_steps_to_empty_matches_leftmost_on_braids() {
        let p = b3();
        let w = SignedWord::quotient(
            &p.parse_word("s1 s2 s1").unwrap(),
            &p.parse_word("s2 s1 s2").unwrap(),
        );
        let (steps, truncated) = min_nontrivial_steps_to_empty(&p, &w, &Limits::default());
        assert!(!truncated);
        let leftmost = reverse_right(&p, &w, Strategy::Leftmost, &Limits::default());
        assert!(leftmost.is_terminal() && leftmost.word.is_empty());
        assert_eq!(steps, Some(leftmost.nontrivial_steps));
    }
}
