use serde::Serialize;

/// Outcome of one exhaustive or sampled check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub passed: bool,
    /// Number of cases evaluated before stopping.
    pub checked: u64,
    /// Labels of the first failing case.
    pub witness: Option<Vec<usize>>,
    pub note: Option<String>,
}

impl Verdict {
    pub fn pass(checked: u64) -> Self {
        Verdict {
            passed: true,
            checked,
            witness: None,
            note: None,
        }
    }

    pub fn fail(checked: u64, witness: Vec<usize>, note: impl Into<String>) -> Self {
        Verdict {
            passed: false,
            checked,
            witness: Some(witness),
            note: Some(note.into()),
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    /// Both must pass; the first failure wins.
    pub fn and(self, other: Verdict) -> Verdict {
        if !self.passed {
            return self;
        }
        if !other.passed {
            return Verdict {
                checked: self.checked + other.checked,
                ..other
            };
        }
        Verdict {
            passed: true,
            checked: self.checked + other.checked,
            witness: None,
            note: self.note.or(other.note),
        }
    }
}

/// Run `f` on every case; stop at the first `Some(note)`.
pub fn sweep<I, F>(cases: I, mut f: F) -> Verdict
where
    I: IntoIterator<Item = Vec<usize>>,
    F: FnMut(&[usize]) -> Option<String>,
{
    let mut n = 0;
    for case in cases {
        n += 1;
        if let Some(note) = f(&case) {
            return Verdict::fail(n, case, note);
        }
    }
    Verdict::pass(n)
}

/// All tuples in `0..base` of length `len`, last coordinate fastest.
pub fn tuples(base: usize, len: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = base.checked_pow(len as u32).unwrap_or(usize::MAX);
    (0..total).map(move |mut i| {
        let mut v = vec![0; len];
        for slot in v.iter_mut().rev() {
            *slot = i % base;
            i /= base;
        }
        v
    })
}
