//! Work distribution for campaigns: data-parallel across graphs through
//! rayon when the `parallel` feature is enabled, sequential otherwise. Both
//! paths preserve input order, so reports are identical either way.

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Threading {
    Sequential,
    /// Rayon worker pool; degrades to sequential when the `parallel` feature
    /// is compiled out.
    Parallel,
}

impl Default for Threading {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Threading::Parallel
        } else {
            Threading::Sequential
        }
    }
}

/// Order-preserving map over owned items.
pub fn map_collect<I, T, F>(items: Vec<I>, threading: Threading, f: F) -> Vec<T>
where
    I: Send,
    T: Send,
    F: Fn(I) -> T + Sync + Send,
{
    match threading {
        Threading::Sequential => items.into_iter().map(f).collect(),
        Threading::Parallel => {
            #[cfg(feature = "parallel")]
            {
                use rayon::prelude::*;
                items.into_par_iter().map(f).collect()
            }
            #[cfg(not(feature = "parallel"))]
            {
                items.into_iter().map(f).collect()
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn map_preserves_order() {
        let items: Vec<u64> = (0..100).collect();
        let seq = map_collect(items.clone(), Threading::Sequential, |x| x * x);
        let par = map_collect(items, Threading::Parallel, |x| x * x);
        assert_eq!(seq, par);
        assert_eq!(seq[10], 100);
    }
}
