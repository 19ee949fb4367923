/// Primes in `[lo, hi]` by the sieve of Eratosthenes.
pub fn primes_in(lo: u64, hi: u64) -> Vec<u64> {
    if hi < 2 || lo > hi {
        return Vec::new();
    }
    let n = hi as usize;
    let mut composite = vec![false; n + 1];
    let mut i = 2;
    while i * i <= n {
        if !composite[i] {
            for j in (i * i..=n).step_by(i) {
                composite[j] = true;
            }
        }
        i += 1;
    }
    (lo.max(2) as usize..=n)
        .filter(|&k| !composite[k])
        .map(|k| k as u64)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn agrees_with_trial_division() {
        let sieved = primes_in(0, 500);
        let trial: Vec<u64> = (0..=500).filter(|&n| hk_core::is_prime(n)).collect();
        assert_eq!(sieved, trial);
        assert_eq!(primes_in(5, 13), vec![5, 7, 11, 13]);
        assert!(primes_in(8, 10).is_empty());
        assert!(primes_in(10, 3).is_empty());
    }
}
