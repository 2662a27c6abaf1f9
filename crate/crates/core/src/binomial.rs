//! Arbitrary-precision binomial coefficients and factorials, cached per row.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigUint;
use num_traits::{One, Zero};

type RowCache = Mutex<HashMap<u64, Arc<Vec<BigUint>>>>;

fn row_cache() -> &'static RowCache {
    static CACHE: OnceLock<RowCache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn build_row(n: u64) -> Vec<BigUint> {
    let mut row = Vec::with_capacity(n as usize + 1);
    let mut current = BigUint::one();
    row.push(current.clone());
    for k in 0..n {
        current = current * (n - k) / (k + 1);
        row.push(current.clone());
    }
    row
}

/// Row `n` of Pascal's triangle: `C(n, 0..=n)`.
pub fn row(n: u64) -> Arc<Vec<BigUint>> {
    if let Some(r) = row_cache().lock().expect("binomial cache poisoned").get(&n) {
        return Arc::clone(r);
    }
    let built = Arc::new(build_row(n));
    row_cache()
        .lock()
        .expect("binomial cache poisoned")
        .entry(n)
        .or_insert(built)
        .clone()
}

/// `C(n, k)`, zero whenever `k < 0`, `k > n` or `n < 0`.
pub fn choose(n: i64, k: i64) -> BigUint {
    if n < 0 || k < 0 || k > n {
        return BigUint::zero();
    }
    row(n as u64)[k as usize].clone()
}

fn factorial_cache() -> &'static Mutex<Arc<Vec<BigUint>>> {
    static CACHE: OnceLock<Mutex<Arc<Vec<BigUint>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(Arc::new(vec![BigUint::one()])))
}

/// `0!, 1!, ..., n!`.
pub fn factorials(n: usize) -> Arc<Vec<BigUint>> {
    let mut guard = factorial_cache().lock().expect("factorial cache poisoned");
    if guard.len() <= n {
        let mut table = (**guard).clone();
        while table.len() <= n {
            let k = table.len();
            let next = &table[k - 1] * k;
            table.push(next);
        }
        *guard = Arc::new(table);
    }
    Arc::clone(&guard)
}
