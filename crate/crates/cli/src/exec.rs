//! Deterministic parallel execution: independent tasks fan out over a
//! worker pool, results merge in task order, so output never depends on
//! the job count.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::OnceLock;

/// Runs `count` tasks on up to `jobs` threads and returns their results
/// in task-index order.
pub fn run_ordered<T, F>(count: usize, jobs: usize, task: F) -> Vec<T>
where
    T: Send + Sync,
    F: Fn(usize) -> T + Sync,
{
    let jobs = jobs.max(1).min(count.max(1));
    if jobs <= 1 {
        return (0..count).map(&task).collect();
    }
    let slots: Vec<OnceLock<T>> = (0..count).map(|_| OnceLock::new()).collect();
    let next = AtomicUsize::new(0);
    std::thread::scope(|scope| {
        for _ in 0..jobs {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= count {
                    break;
                }
                let out = task(i);
                let _ = slots[i].set(out);
            });
        }
    });
    slots.into_iter().map(|s| s.into_inner().expect("every task ran")).collect()
}
