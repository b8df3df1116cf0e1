//! Enumeration split into work units and run on a fixed number of threads.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use qcycle_core::enumeration::{merge_units, run_unit, split_search, Caps, EnumFilter, EnumResult};
use qcycle_core::Result;

/// Same structures and statistics for every `threads ≥ 1`: the split is
/// fixed at one `·` row and units are merged in index order.
pub fn enumerate_threaded(n: usize, f: EnumFilter, caps: &Caps, threads: usize) -> Result<EnumResult> {
    caps.check(n, &f)?;
    let units = split_search(n, f, 1);
    let next = AtomicUsize::new(0);
    let done: Mutex<Vec<(usize, EnumResult)>> = Mutex::new(Vec::with_capacity(units.len()));
    std::thread::scope(|scope| {
        for _ in 0..threads.max(1) {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(unit) = units.get(i) else { break };
                let r = run_unit(unit);
                done.lock().expect("worker panicked").push((i, r));
            });
        }
    });
    let mut done = done.into_inner().expect("worker panicked");
    done.sort_by_key(|(i, _)| *i);
    Ok(merge_units(n, f, done.into_iter().map(|(_, r)| r)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use qcycle_core::enumeration::enumerate_qcs;

    #[test]
    fn thread_count_does_not_matter() {
        let f = EnumFilter::up_to_iso();
        let one = enumerate_threaded(3, f, &Caps::default(), 1).unwrap();
        for k in [2, 8] {
            assert_eq!(enumerate_threaded(3, f, &Caps::default(), k).unwrap(), one);
        }
        assert_eq!(one.structures, enumerate_qcs(3, f).unwrap().structures);
    }
}
