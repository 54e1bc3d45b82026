//! Wall-clock access. Browser builds (wasm32 without an OS) have no clock in std, so there
//! time limits never fire and elapsed times read zero.

pub use imp::{Deadline, Stopwatch};

#[cfg(not(all(target_arch = "wasm32", target_os = "unknown")))]
mod imp {
    use std::time::{Duration, Instant};

    #[derive(Clone, Copy, Debug)]
    pub struct Stopwatch(Instant);

    impl Stopwatch {
        pub fn start() -> Self {
            Stopwatch(Instant::now())
        }

        pub fn elapsed(&self) -> Duration {
            self.0.elapsed()
        }
    }

    /// A point in time; `None` when it lies beyond what `Instant` can represent.
    #[derive(Clone, Copy, Debug)]
    pub struct Deadline(Option<Instant>);

    impl Deadline {
        pub fn after(limit: Duration) -> Self {
            Deadline(Instant::now().checked_add(limit))
        }

        pub fn passed(&self) -> bool {
            self.0.is_some_and(|t| Instant::now() >= t)
        }
    }
}

#[cfg(all(target_arch = "wasm32", target_os = "unknown"))]
mod imp {
    use std::time::Duration;

    #[derive(Clone, Copy, Debug)]
    pub struct Stopwatch;

    impl Stopwatch {
        pub fn start() -> Self {
            Stopwatch
        }

        pub fn elapsed(&self) -> Duration {
            Duration::ZERO
        }
    }

    #[derive(Clone, Copy, Debug)]
    pub struct Deadline;

    impl Deadline {
        pub fn after(_limit: Duration) -> Self {
            Deadline
        }

        pub fn passed(&self) -> bool {
            false
        }
    }
}
