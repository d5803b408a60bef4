//! Runtime tracing that enforces the evaluator-independence contract: a
//! left-hand-side evaluator (raw summation over sequence terms) must never
//! call into a right-hand-side closed form. Closed-form helpers announce
//! themselves via [`note_closed_form`]; the verifier's meta-test evaluates
//! every registered left side inside [`lhs_scope`] and asserts that the
//! violation counter never moves.
//!
//! The accounting is thread-local and compiled out of no_std builds (the
//! meta-test runs under std).

#[cfg(feature = "std")]
mod imp {
    use std::cell::Cell;

    std::thread_local! {
        static IN_LHS: Cell<bool> = const { Cell::new(false) };
        static VIOLATIONS: Cell<u64> = const { Cell::new(0) };
    }

    pub fn lhs_scope<T>(f: impl FnOnce() -> T) -> T {
        let prev = IN_LHS.with(|c| c.replace(true));
        let out = f();
        IN_LHS.with(|c| c.set(prev));
        out
    }

    pub fn note_closed_form() {
        if IN_LHS.with(Cell::get) {
            VIOLATIONS.with(|c| c.set(c.get() + 1));
        }
    }

    /// Violations recorded on this thread so far; resets the counter.
    pub fn take_violations() -> u64 {
        VIOLATIONS.with(|c| c.replace(0))
    }
}

#[cfg(not(feature = "std"))]
mod imp {
    pub fn lhs_scope<T>(f: impl FnOnce() -> T) -> T {
        f()
    }

    pub fn note_closed_form() {}

    pub fn take_violations() -> u64 {
        0
    }
}

pub use imp::{lhs_scope, note_closed_form, take_violations};
