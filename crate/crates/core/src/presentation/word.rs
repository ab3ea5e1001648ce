use serde::{Deserialize, Serialize};

/// Upper bound on the number of runs a word may expand to.
pub const MAX_RUNS: usize = 1 << 16;

/// A word in the free group, stored as runs `(generator index, exponent)`.
///
/// Words produced by the parser and by the operations below are freely
/// reduced; [`Word::from_letters`] accepts arbitrary runs.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Word {
    letters: Vec<(usize, i64)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WordError {
    TooLong,
    ExponentOverflow,
}

impl Word {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn generator(index: usize) -> Self {
        Self {
            letters: vec![(index, 1)],
        }
    }

    pub fn power_of(index: usize, exp: i64) -> Self {
        Self::from_letters(vec![(index, exp)]).free_reduce()
    }

    pub fn from_letters(letters: Vec<(usize, i64)>) -> Self {
        Self { letters }
    }

    pub fn letters(&self) -> &[(usize, i64)] {
        &self.letters
    }

    /// Number of runs.
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Sum of absolute exponents.
    pub fn syllable_length(&self) -> u128 {
        self.letters.iter().map(|&(_, e)| e.unsigned_abs() as u128).sum()
    }

    pub fn max_generator(&self) -> Option<usize> {
        self.letters.iter().map(|&(g, _)| g).max()
    }

    /// Merge adjacent runs on the same generator and drop zero exponents.
    pub fn free_reduce(&self) -> Word {
        let mut out: Vec<(usize, i64)> = Vec::with_capacity(self.letters.len());
        for &(g, e) in &self.letters {
            push_run(&mut out, g, e as i128);
        }
        Word { letters: out }
    }

    pub fn is_reduced(&self) -> bool {
        self.letters.iter().all(|&(_, e)| e != 0)
            && self.letters.windows(2).all(|w| w[0].0 != w[1].0)
    }

    pub fn inverse(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(|&(g, e)| (g, -e)).collect(),
        }
    }

    /// Reduced product `self * other`.
    pub fn mul(&self, other: &Word) -> Result<Word, WordError> {
        if self.len() + other.len() > MAX_RUNS {
            return Err(WordError::TooLong);
        }
        let mut out = self.free_reduce().letters;
        for &(g, e) in &other.letters {
            push_run_checked(&mut out, g, e)?;
        }
        Ok(Word { letters: out })
    }

    /// `[a, b] = a^-1 b^-1 a b`.
    pub fn commutator(a: &Word, b: &Word) -> Result<Word, WordError> {
        a.inverse().mul(&b.inverse())?.mul(a)?.mul(b)
    }

    /// Reduced `self^k`. Conjugates of a single run stay short, so `x^(q^2)`
    /// and `(u x u^-1)^k` do not expand.
    pub fn pow(&self, k: i64) -> Result<Word, WordError> {
        let w = self.free_reduce();
        if k == 0 || w.is_empty() {
            return Ok(Word::identity());
        }
        let (prefix, core) = w.cyclic_split();
        let core_pow = if core.len() == 1 {
            let (g, e) = core.letters[0];
            let e = e.checked_mul(k).ok_or(WordError::ExponentOverflow)?;
            Word::from_letters(vec![(g, e)])
        } else {
            let base = if k < 0 { core.inverse() } else { core };
            let reps = k.unsigned_abs() as usize;
            if base.len().saturating_mul(reps) > MAX_RUNS {
                return Err(WordError::TooLong);
            }
            let mut letters = Vec::with_capacity(base.len() * reps);
            for _ in 0..reps {
                letters.extend_from_slice(&base.letters);
            }
            Word { letters }
        };
        prefix.mul(&core_pow)?.mul(&prefix.inverse())
    }

    /// Write a reduced word as `u c u^-1` with `c` cyclically reduced and
    /// the first and last runs of `c` on different generators (or `c` a
    /// single run).
    fn cyclic_split(&self) -> (Word, Word) {
        let mut prefix: Vec<(usize, i64)> = Vec::new();
        let mut core = self.letters.clone();
        loop {
            if core.len() < 2 {
                break;
            }
            let (g0, e0) = core[0];
            let (g1, e1) = core[core.len() - 1];
            if g0 != g1 {
                break;
            }
            if e0 == -e1 {
                prefix.push((g0, e0));
                core.remove(0);
                core.pop();
            } else {
                // x^a ... x^b = x^a (... x^(a+b)) x^-a
                prefix.push((g0, e0));
                core.remove(0);
                let last = core.len() - 1;
                core[last].1 += e0;
                if core[last].1 == 0 {
                    core.pop();
                }
                // merging may have changed the structure; reduce and retry
                core = Word { letters: core }.free_reduce().letters;
            }
        }
        (Word { letters: prefix }.free_reduce(), Word { letters: core })
    }

    /// True iff the word is the identity of the free group.
    pub fn is_trivial_in_free(&self) -> bool {
        self.free_reduce().is_empty()
    }

    /// Exponent sum of each generator, for `n` generators.
    pub fn exponent_sums(&self, n: usize) -> Vec<i128> {
        let mut out = vec![0i128; n];
        for &(g, e) in &self.letters {
            out[g] += e as i128;
        }
        out
    }
}

fn push_run(out: &mut Vec<(usize, i64)>, g: usize, e: i128) {
    if e == 0 {
        return;
    }
    if let Some(last) = out.last_mut() {
        if last.0 == g {
            let s = last.1 as i128 + e;
            if s == 0 {
                out.pop();
            } else {
                last.1 = s as i64;
            }
            return;
        }
    }
    out.push((g, e as i64));
}

fn push_run_checked(out: &mut Vec<(usize, i64)>, g: usize, e: i64) -> Result<(), WordError> {
    if let Some(last) = out.last() {
        if last.0 == g {
            last.1.checked_add(e).ok_or(WordError::ExponentOverflow)?;
        }
    }
    push_run(out, g, e as i128);
    Ok(())
}

/// `free_reduce` as a free function.
pub fn free_reduce(w: &Word) -> Word {
    w.free_reduce()
}

/// `is_trivial_in_free` as a free function.
pub fn is_trivial_in_free(w: &Word) -> bool {
    w.is_trivial_in_free()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const X: usize = 0;
    const Y: usize = 1;

    #[test]
    fn cancellation() {
        let w = Word::from_letters(vec![(X, 1), (X, -1)]);
        assert!(w.free_reduce().is_empty());
    }

    #[test]
    fn merge_and_drop() {
        let w = Word::from_letters(vec![(X, 2), (X, 3), (Y, 0)]);
        assert_eq!(w.free_reduce().letters(), &[(X, 5)]);
    }

    #[test]
    fn commutator_already_reduced() {
        let c = Word::commutator(&Word::generator(X), &Word::generator(Y)).unwrap();
        assert_eq!(c.letters(), &[(X, -1), (Y, -1), (X, 1), (Y, 1)]);
        assert_eq!(c.free_reduce(), c);
    }

    #[test]
    fn triviality() {
        let w = Word::from_letters(vec![(X, 1), (Y, 1), (Y, -1), (X, -1)]);
        assert!(w.is_trivial_in_free());
        assert!(Word::identity().is_trivial_in_free());
        let xy = Word::commutator(&Word::generator(X), &Word::generator(Y)).unwrap();
        let w = Word::commutator(&Word::generator(X), &xy).unwrap();
        assert!(!w.is_trivial_in_free());
        assert_eq!(w.syllable_length(), 8);
    }

    #[test]
    fn powers_stay_compact() {
        let w = Word::generator(X).pow(1 << 40).unwrap();
        assert_eq!(w.letters(), &[(X, 1 << 40)]);
        let conj = Word::from_letters(vec![(Y, 1), (X, 3), (Y, -1)]);
        let p = conj.pow(-5).unwrap();
        assert_eq!(p.letters(), &[(Y, 1), (X, -15), (Y, -1)]);
        let xy = Word::from_letters(vec![(X, 1), (Y, 1)]);
        assert_eq!(xy.pow(3).unwrap().len(), 6);
        assert_eq!(xy.pow(i64::MAX), Err(WordError::TooLong));
    }

    fn arb_word() -> impl Strategy<Value = Word> {
        prop::collection::vec((0usize..3, -3i64..=3), 0..12).prop_map(Word::from_letters)
    }

    fn expand(w: &Word) -> Vec<(usize, i64)> {
        let mut out = Vec::new();
        for &(g, e) in w.letters() {
            for _ in 0..e.abs() {
                out.push((g, e.signum()));
            }
        }
        out
    }

    /// Letter-by-letter free reduction, independent of the run-based one.
    fn naive_reduce(w: &Word) -> Vec<(usize, i64)> {
        let mut st: Vec<(usize, i64)> = Vec::new();
        for l in expand(w) {
            if st.last().is_some_and(|&t| t.0 == l.0 && t.1 == -l.1) {
                st.pop();
            } else {
                st.push(l);
            }
        }
        st
    }

    proptest! {
        #[test]
        fn reduce_is_idempotent_and_shrinks(w in arb_word()) {
            let r = w.free_reduce();
            prop_assert!(r.is_reduced());
            prop_assert_eq!(r.free_reduce(), r.clone());
            prop_assert!(r.len() <= w.len());
            prop_assert_eq!(expand(&r), naive_reduce(&w));
        }

        #[test]
        fn commutator_length_bound(a in arb_word(), b in arb_word()) {
            let (a, b) = (a.free_reduce(), b.free_reduce());
            let c = Word::commutator(&a, &b).unwrap();
            prop_assert!(c.len() <= 4 * (a.len() + b.len()));
        }

        #[test]
        fn pow_matches_repetition(w in arb_word(), k in -4i64..=4) {
            let w = w.free_reduce();
            let fast = w.pow(k).unwrap();
            let base = if k < 0 { w.inverse() } else { w.clone() };
            let mut slow = Word::identity();
            for _ in 0..k.unsigned_abs() {
                slow = slow.mul(&base).unwrap();
            }
            prop_assert_eq!(fast, slow);
        }
    }
}
