//! Reader/writer lock used by the memo tables. Backed by `std::sync::RwLock`
//! under the `std` feature and by `spin::RwLock` otherwise. Cache fills are
//! idempotent, so lock poisoning is recovered by taking the inner value.

#[cfg(feature = "std")]
mod imp {
    pub struct Lock<T>(std::sync::RwLock<T>);

    impl<T> Lock<T> {
        pub const fn new(value: T) -> Self {
            Lock(std::sync::RwLock::new(value))
        }

        pub fn read(&self) -> std::sync::RwLockReadGuard<'_, T> {
            self.0.read().unwrap_or_else(|e| e.into_inner())
        }

        pub fn write(&self) -> std::sync::RwLockWriteGuard<'_, T> {
            self.0.write().unwrap_or_else(|e| e.into_inner())
        }
    }
}

#[cfg(not(feature = "std"))]
mod imp {
    pub struct Lock<T>(spin::RwLock<T>);

    impl<T> Lock<T> {
        pub const fn new(value: T) -> Self {
            Lock(spin::RwLock::new(value))
        }

        pub fn read(&self) -> spin::RwLockReadGuard<'_, T> {
            self.0.read()
        }

        pub fn write(&self) -> spin::RwLockWriteGuard<'_, T> {
            self.0.write()
        }
    }
}

pub(crate) use imp::Lock;
