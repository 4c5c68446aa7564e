use std::collections::HashSet;
use std::time::Instant;

use crate::sieve::config::GenerationReport;
use crate::sieve::population::{elite_select, Population};
use crate::vector::LatticeVector;

/// Sieving with plain differences and global selection.
///
/// Each iteration forms `t = v − u` for every ordered pair of distinct
/// members, keeps those that are new up to a unit, nonzero and shorter than `u` or `v`,
/// then reselects the `|P₀|` shortest of `P ∪ R`. Stops after the first
/// iteration that keeps nothing; that iteration is included in the history.
pub fn naive_sieve(p0: Population) -> (Population, Vec<GenerationReport>) {
    let start = Instant::now();
    let cap = p0.capacity().max(p0.len());
    let mut p = p0;
    let mut history = Vec::new();
    loop {
        let mut r: Vec<LatticeVector> = Vec::new();
        let mut seen: HashSet<LatticeVector> = HashSet::new();
        let mut attempts = 0;
        let m = p.members();
        for (i, u) in m.iter().enumerate() {
            for (j, v) in m.iter().enumerate() {
                if i == j {
                    continue;
                }
                attempts += 1;
                let t = v
                    .sub(u)
                    .expect("population members share a shape")
                    .canonical_associate();
                let shorter = t.norm_sq() < u.norm_sq() || t.norm_sq() < v.norm_sq();
                if !t.is_zero() && shorter && !p.contains(&t) && seen.insert(t.clone()) {
                    r.push(t);
                }
            }
        }
        let accepted = r.len();
        p = elite_select(p.into_members().into_iter().chain(r), cap);
        history.push(GenerationReport {
            generation: history.len() + 1,
            best_norm_sq: p.best_norm_sq(),
            best_norm: p.best().map_or(0.0, LatticeVector::norm),
            mean_norm: p.mean_norm(),
            accepted_children: accepted,
            crossovers_attempted: attempts,
            elapsed: start.elapsed(),
        });
        if accepted == 0 {
            return (p, history);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::int::Int;

    #[test]
    fn unit_vectors_stop_at_once() {
        let p = Population::from_vectors(
            vec![
                LatticeVector::from_ints(&[1, 0]),
                LatticeVector::from_ints(&[0, 1]),
            ],
            2,
        );
        let (out, hist) = naive_sieve(p.clone());
        assert_eq!(hist.len(), 1);
        assert_eq!(out, p);
    }

    #[test]
    fn multiples_collapse() {
        let v = LatticeVector::from_ints(&[3, 4]);
        let two_v = LatticeVector::from_ints(&[6, 8]);
        let (out, hist) = naive_sieve(Population::from_vectors(vec![v.clone(), two_v], 2));
        assert!(hist.len() <= 3);
        assert_eq!(out.best().unwrap(), &v);
        assert_eq!(hist.last().unwrap().accepted_children, 0);
    }

    #[test]
    fn reports_are_monotone() {
        let p = Population::from_vectors(
            [[46, 185], [94, 430], [97, 520], [475, 2300]]
                .iter()
                .map(|x| LatticeVector::from_ints(x)),
            4,
        );
        let (_, hist) = naive_sieve(p);
        for w in hist.windows(2) {
            assert!(w[1].best_norm_sq <= w[0].best_norm_sq);
        }
        assert_eq!(hist[0].crossovers_attempted, 12);
        assert!(hist.iter().all(|h| h.best_norm_sq > Int::ZERO));
    }
}
