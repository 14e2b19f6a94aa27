use std::cmp::Ordering;

/// Exponent vector, one entry per ring variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        let mut e = vec![0; nvars];
        e[index] = 1;
        Monomial(e)
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn weighted_degree(&self, weights: &[u32]) -> i64 {
        self.0.iter().zip(weights).map(|(&e, &w)| e as i64 * w as i64).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if self.divides(other) {
            Some(Monomial(other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect()))
        } else {
            None
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }
}

/// Monomial orders on the ambient polynomial ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    /// Weighted graded reverse lexicographic.
    Grevlex,
    Lex,
    /// Product of two weighted grevlex blocks; the first `n` variables form the
    /// first block, so this eliminates them.
    Elimination(usize),
}

impl MonomialOrder {
    pub fn name(&self) -> &'static str {
        match self {
            MonomialOrder::Grevlex => "grevlex",
            MonomialOrder::Lex => "lex",
            MonomialOrder::Elimination(_) => "elimination",
        }
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial, weights: &[u32]) -> Ordering {
        match *self {
            MonomialOrder::Grevlex => grevlex(a.exponents(), b.exponents(), weights),
            MonomialOrder::Lex => a.exponents().cmp(b.exponents()),
            MonomialOrder::Elimination(k) => {
                let (a1, a2) = a.exponents().split_at(k);
                let (b1, b2) = b.exponents().split_at(k);
                let (w1, w2) = weights.split_at(k);
                grevlex(a1, b1, w1).then_with(|| grevlex(a2, b2, w2))
            }
        }
    }
}

fn grevlex(a: &[u32], b: &[u32], weights: &[u32]) -> Ordering {
    let da: i64 = a.iter().zip(weights).map(|(&e, &w)| e as i64 * w as i64).sum();
    let db: i64 = b.iter().zip(weights).map(|(&e, &w)| e as i64 * w as i64).sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b).rev() {
            if x != y {
                // smaller exponent in the last differing variable wins
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}
