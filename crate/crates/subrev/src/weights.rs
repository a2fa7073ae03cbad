//! Integer weight witnesses for homogeneity: a positive weight per letter
//! making every relation weight-balanced, when one exists over the rationals.

use num::rational::BigRational;
use num::{BigInt, One, Signed, Zero};

use crate::presentation::Presentation;
use crate::word::{Letter, Word};

/// A positive integer weight for each letter of the alphabet.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeightVector(pub Vec<u64>);

impl WeightVector {
    pub fn weight_of(&self, l: Letter) -> u64 {
        self.0[l.index()]
    }

    pub fn weight(&self, w: &Word) -> u64 {
        w.letters().iter().map(|&l| self.weight_of(l)).sum()
    }

    /// Every weight is at least one and every relation balances.
    pub fn is_witness_for(&self, p: &Presentation) -> bool {
        self.0.len() == p.letter_count()
            && self.0.iter().all(|&w| w >= 1)
            && p.relations()
                .iter()
                .all(|r| self.weight(&r.lhs) == self.weight(&r.rhs))
    }
}

/// Σ coeffs · x ≥ bound.
#[derive(Clone, PartialEq, Eq)]
struct Constraint {
    coeffs: Vec<BigRational>,
    bound: BigRational,
}

impl Constraint {
    fn normalized(mut self) -> Self {
        if let Some(c) = self.coeffs.iter().find(|c| !c.is_zero()).cloned() {
            let scale = c.abs();
            for v in &mut self.coeffs {
                *v /= scale.clone();
            }
            self.bound /= scale;
        }
        self
    }
}

/// Searches for an integer weight vector with all weights >= 1 balancing all
/// relations. Exact rational Fourier-Motzkin elimination; alphabets here are
/// small. Returns None when no positive solution exists.
pub fn homogeneity_witness(p: &Presentation) -> Option<WeightVector> {
    let n = p.letter_count();
    let ones = WeightVector(vec![1; n]);
    if ones.is_witness_for(p) {
        return Some(ones);
    }
    let rat = |i: i64| BigRational::from(BigInt::from(i));

    let mut constraints: Vec<Constraint> = Vec::new();
    for r in p.relations() {
        let mut coeffs = vec![rat(0); n];
        for l in p.letters() {
            let d = r.lhs.count(l) as i64 - r.rhs.count(l) as i64;
            coeffs[l.index()] = rat(d);
        }
        constraints.push(Constraint {
            coeffs: coeffs.clone(),
            bound: rat(0),
        });
        constraints.push(Constraint {
            coeffs: coeffs.into_iter().map(|c| -c).collect(),
            bound: rat(0),
        });
    }
    for i in 0..n {
        let mut coeffs = vec![rat(0); n];
        coeffs[i] = rat(1);
        constraints.push(Constraint {
            coeffs,
            bound: rat(1),
        });
    }

    // stages[k] holds the system before x_k is eliminated.
    let mut stages: Vec<Vec<Constraint>> = Vec::new();
    let mut current = constraints;
    for k in 0..n {
        stages.push(current.clone());
        let mut next: Vec<Constraint> = Vec::new();
        let mut lowers: Vec<Constraint> = Vec::new();
        let mut uppers: Vec<Constraint> = Vec::new();
        for c in current {
            let ck = c.coeffs[k].clone();
            if ck.is_zero() {
                next.push(c);
            } else if ck.is_positive() {
                lowers.push(c);
            } else {
                uppers.push(c);
            }
        }
        for lo in &lowers {
            for hi in &uppers {
                // lo: a x_k >= A, hi: -b x_k >= B with a, b > 0.
                let a = lo.coeffs[k].clone();
                let b = -hi.coeffs[k].clone();
                let mut coeffs = Vec::with_capacity(n);
                for i in 0..n {
                    coeffs.push(
                        lo.coeffs[i].clone() * b.clone() + hi.coeffs[i].clone() * a.clone(),
                    );
                }
                coeffs[k] = rat(0);
                let combined = Constraint {
                    coeffs,
                    bound: lo.bound.clone() * b + hi.bound.clone() * a,
                }
                .normalized();
                if !next.contains(&combined) {
                    next.push(combined);
                }
            }
        }
        current = next;
        if current.len() > 20_000 {
            return None; // system too large to decide; treat as no witness
        }
    }
    for c in &current {
        if c.bound.is_positive() {
            return None;
        }
    }

    // Back-substitute, always picking the least admissible value.
    let mut solution = vec![rat(0); n];
    for k in (0..n).rev() {
        let mut lo = rat(1);
        let mut hi: Option<BigRational> = None;
        for c in &stages[k] {
            let ck = c.coeffs[k].clone();
            if ck.is_zero() {
                continue;
            }
            let mut rest = c.bound.clone();
            for i in k + 1..n {
                rest -= c.coeffs[i].clone() * solution[i].clone();
            }
            let v = rest / ck.clone();
            if ck.is_positive() {
                if v > lo {
                    lo = v;
                }
            } else {
                hi = Some(match hi {
                    None => v,
                    Some(h) if v < h => v,
                    Some(h) => h,
                });
            }
        }
        if let Some(h) = &hi {
            if lo > *h {
                return None;
            }
        }
        solution[k] = lo;
    }

    // Scale to integers. Multiplying by a positive integer preserves both
    // the balance equations and the >= 1 bounds.
    let mut lcm = BigInt::one();
    for v in &solution {
        lcm = num::integer::lcm(lcm, v.denom().clone());
    }
    let mut weights = Vec::with_capacity(n);
    for v in &solution {
        let scaled = v * BigRational::from(lcm.clone());
        let int = scaled.to_integer();
        weights.push(u64::try_from(int).ok()?);
    }
    let wv = WeightVector(weights);
    wv.is_witness_for(p).then_some(wv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::parse_presentation;

    #[test]
    fn length_preserving_relations_get_unit_weights() {
        let p = parse_presentation("gens: a b c d\nrel: a b = b c = c a\nrel: b a = d b = a d\n")
            .unwrap();
        let w = homogeneity_witness(&p).expect("length-preserving");
        assert_eq!(w.0, vec![1, 1, 1, 1]);

        let p = parse_presentation("gens: a b\nrel: a b = b a\n").unwrap();
        assert_eq!(homogeneity_witness(&p).unwrap().0, vec![1, 1]);
    }

    #[test]
    fn degenerate_relation_has_no_witness() {
        // c a = a forces weight(c) = 0.
        let p = parse_presentation("gens: a b c\nrel: a = b b c\nrel: b a = c\nrel: c a = a\n")
            .unwrap();
        assert!(homogeneity_witness(&p).is_none());
        // Same conclusion for the variant with c a = c.
        let p = parse_presentation("gens: a b c\nrel: a = b b c\nrel: b a = c\nrel: c a = c\n")
            .unwrap();
        assert!(homogeneity_witness(&p).is_none());
    }

    #[test]
    fn graded_but_not_length_preserving() {
        // a b a = b^2, a c a = c b, b c a = c^2 balances with (1, 2, 3).
        let p = parse_presentation(
            "gens: a b c\nrel: a b a = b b\nrel: a c a = c b\nrel: b c a = c c\n",
        )
        .unwrap();
        let w = homogeneity_witness(&p).expect("graded");
        assert!(w.is_witness_for(&p));
        assert_eq!(2 * w.0[0], w.0[1]);
        assert_eq!(w.0[0] + w.0[1], w.0[2]);
    }

    #[test]
    fn baumslag_solitar_is_not_homogeneous() {
        let p = parse_presentation("gens: a b\nrel: a a b = b a\n").unwrap();
        assert!(homogeneity_witness(&p).is_none());
    }

    #[test]
    fn heisenberg_is_not_homogeneous() {
        let p = parse_presentation("gens: a b c\nrel: a c = c a\nrel: b c = c b\nrel: a b = b a c\n")
            .unwrap();
        assert!(homogeneity_witness(&p).is_none());
    }
}
