//! Brute-force rewriting oracle: breadth-first search over single-relation
//! substitutions. Independent of the reversing engine, it is the reference
//! that everything reversing-based is checked against.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::presentation::Presentation;
use crate::reversing::Limits;
use crate::word::Word;

/// Every word obtained from `w` by substituting one relation side for the
/// other, at every position, in both directions.
pub fn rewrite_neighbors(p: &Presentation, w: &Word) -> Vec<Word> {
    let mut out = Vec::new();
    for r in p.relations() {
        for (from, to) in [(&r.lhs, &r.rhs), (&r.rhs, &r.lhs)] {
            if from.len() > w.len() {
                continue;
            }
            for start in 0..=w.len() - from.len() {
                if &w.letters()[start..start + from.len()] == from.letters() {
                    let mut v = Vec::with_capacity(w.len() - from.len() + to.len());
                    v.extend_from_slice(&w.letters()[..start]);
                    v.extend_from_slice(to.letters());
                    v.extend_from_slice(&w.letters()[start + from.len()..]);
                    out.push(Word(v));
                }
            }
        }
    }
    out
}

/// The combinatorial distance from `u` to `v`: the least number of relation
/// applications transforming one into the other, when `v` is reachable
/// within the limits. Returns `(distance, truncated)`.
pub fn equivalence_distance(
    p: &Presentation,
    u: &Word,
    v: &Word,
    limits: &Limits,
) -> (Option<usize>, bool) {
    if u == v {
        return (Some(0), false);
    }
    let mut visited: HashSet<Word> = HashSet::new();
    visited.insert(u.clone());
    let mut queue: VecDeque<(Word, usize)> = VecDeque::new();
    queue.push_back((u.clone(), 0));
    let mut truncated = false;
    let mut expansions = 0usize;
    while let Some((w, d)) = queue.pop_front() {
        expansions += 1;
        if expansions > limits.max_steps {
            return (None, true);
        }
        for n in rewrite_neighbors(p, &w) {
            if n.len() > limits.max_word_length {
                truncated = true;
                continue;
            }
            if visited.contains(&n) {
                continue;
            }
            if n == *v {
                return (Some(d + 1), truncated);
            }
            if visited.len() >= limits.max_frontier {
                truncated = true;
                continue;
            }
            visited.insert(n.clone());
            queue.push_back((n, d + 1));
        }
    }
    (None, truncated)
}

/// The full rewriting class of `w`, or `None` if limits truncate it.
pub fn equivalence_class(p: &Presentation, w: &Word, limits: &Limits) -> Option<HashSet<Word>> {
    let mut visited: HashSet<Word> = HashSet::new();
    visited.insert(w.clone());
    let mut queue: VecDeque<Word> = VecDeque::new();
    queue.push_back(w.clone());
    let mut expansions = 0usize;
    while let Some(x) = queue.pop_front() {
        expansions += 1;
        if expansions > limits.max_steps {
            return None;
        }
        for n in rewrite_neighbors(p, &x) {
            if n.len() > limits.max_word_length || visited.len() >= limits.max_frontier {
                return None;
            }
            if visited.insert(n.clone()) {
                queue.push_back(n);
            }
        }
    }
    Some(visited)
}

/// Shortest, then lexicographically least, member of the rewriting class.
/// Falls back to `w` itself when the class cannot be enumerated in full.
pub fn canonical_representative(p: &Presentation, w: &Word, limits: &Limits) -> Word {
    match equivalence_class(p, w, limits) {
        Some(class) => class
            .into_iter()
            .min_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)))
            .unwrap(),
        None => w.clone(),
    }
}

/// Partitions all positive words of length at most `max_len` into rewriting
/// classes, returning a class id per word. Only valid when every relation
/// preserves length (so classes stay inside the generated set).
pub fn classes_up_to_length(
    p: &Presentation,
    max_len: usize,
) -> Option<HashMap<Word, usize>> {
    if p.relations()
        .iter()
        .any(|r| r.lhs.len() != r.rhs.len())
    {
        return None;
    }
    let mut words: Vec<Word> = vec![Word::empty()];
    let mut all: Vec<Word> = vec![Word::empty()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &words {
            for l in p.letters() {
                let mut v = w.0.clone();
                v.push(l);
                next.push(Word(v));
            }
        }
        all.extend(next.iter().cloned());
        words = next;
    }
    let index: HashMap<Word, usize> = all.iter().cloned().zip(0..).collect();
    let mut class = vec![usize::MAX; all.len()];
    let mut next_class = 0usize;
    for (i, w) in all.iter().enumerate() {
        if class[i] != usize::MAX {
            continue;
        }
        let id = next_class;
        next_class += 1;
        let mut queue = VecDeque::new();
        class[i] = id;
        queue.push_back(w.clone());
        while let Some(x) = queue.pop_front() {
            for n in rewrite_neighbors(p, &x) {
                let j = index[&n];
                if class[j] == usize::MAX {
                    class[j] = id;
                    queue.push_back(n);
                }
            }
        }
    }
    Some(all.into_iter().enumerate().map(|(i, w)| (w, class[i])).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::parse_presentation;

    fn preferred() -> Presentation {
        parse_presentation("gens: a b c d\nrel: a b = b c = c a\nrel: b a = d b = a d\n").unwrap()
    }

    #[test]
    fn distance_of_the_preferred_pair_is_at_most_six() {
        let p = preferred();
        let u = p.parse_word("a c a a a").unwrap();
        let v = p.parse_word("c d b b b").unwrap();
        let (d, truncated) = equivalence_distance(&p, &u, &v, &Limits::default());
        assert!(!truncated);
        let d = d.expect("the displayed six-step derivation connects them");
        assert!(d <= 6, "distance {d}");
        assert!(d > 0);
    }

    #[test]
    fn distance_to_self_is_zero() {
        let p = preferred();
        let u = p.parse_word("a b a").unwrap();
        assert_eq!(equivalence_distance(&p, &u, &u, &Limits::default()).0, Some(0));
    }

    #[test]
    fn canonical_representative_picks_shortest_then_lex() {
        let p = preferred();
        // The class of c a is {a b, b c, c a}; the least is a b.
        let w = p.parse_word("c a").unwrap();
        let rep = canonical_representative(&p, &w, &Limits::default());
        assert_eq!(p.word_to_string(&rep), "a b");
    }

    #[test]
    fn class_partition_agrees_with_pairwise_distance() {
        let p = preferred();
        let classes = classes_up_to_length(&p, 3).unwrap();
        let u = p.parse_word("a b a").unwrap();
        let v = p.parse_word("b c a").unwrap();
        assert_eq!(classes[&u], classes[&v]);
        let w = p.parse_word("a a b").unwrap();
        assert_ne!(classes[&u], classes[&w]);
    }
}
