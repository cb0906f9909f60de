use std::time::{Duration, Instant};

/// Wall-clock allowance for a search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Budget {
    deadline: Option<Instant>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Self { deadline: None }
    }

    pub fn from_duration(d: Duration) -> Self {
        Self {
            deadline: Instant::now().checked_add(d),
        }
    }

    /// Too large to represent means unlimited.
    pub fn seconds(secs: f64) -> Self {
        match Duration::try_from_secs_f64(secs.max(0.0)) {
            Ok(d) => Self::from_duration(d),
            Err(_) => Self::unlimited(),
        }
    }

    pub fn expired(&self) -> bool {
        self.deadline.is_some_and(|d| Instant::now() >= d)
    }
}
