/// Resource limits shared by group construction and the heavier analyses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    /// Largest number of elements a constructed group may have.
    pub elements: usize,
    /// Cap on elementary steps for structure constants and exact rank.
    pub work: u64,
}

/// Environment variable that overrides [`Budget::elements`].
pub const BUDGET_ENV: &str = "REALITY_BUDGET";

pub const DEFAULT_ELEMENT_BUDGET: usize = 2_000_000;
pub const DEFAULT_WORK_BUDGET: u64 = 400_000_000;

impl Default for Budget {
    fn default() -> Self {
        Budget {
            elements: DEFAULT_ELEMENT_BUDGET,
            work: DEFAULT_WORK_BUDGET,
        }
    }
}

impl Budget {
    pub fn with_elements(elements: usize) -> Self {
        Budget {
            elements,
            ..Budget::default()
        }
    }

    /// Default budget, with the element cap taken from `REALITY_BUDGET` when
    /// it is set.
    pub fn from_env() -> Result<Self, String> {
        match std::env::var(BUDGET_ENV) {
            Ok(raw) => raw
                .trim()
                .parse::<usize>()
                .map(Budget::with_elements)
                .map_err(|_| format!("{BUDGET_ENV}={raw:?} is not a non-negative integer")),
            Err(_) => Ok(Budget::default()),
        }
    }
}
