//! Input parsing, report documents and the regression suite behind the `lorhom3` binary.

pub mod input;
pub mod report;
pub mod verify;

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const CHECK_FAILED: i32 = 1;
    pub const UNKNOWN_NAME: i32 = 2;
    pub const INVALID_INPUT: i32 = 3;
    pub const NUMERICAL: i32 = 4;
}
