//! The enumeration cap is process-wide, so this lives in its own test binary.

use rigged_cli::{run, EXIT_CAP};

#[test]
fn cap_exceeded() {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let args = ["rk", "--cap", "3", "configs", "--lambda", "4,3,2,1", "--mu", "1,1,1,1,1,1,1,1,1,1", "--count"];
    let code = run(args, &mut out, &mut err);
    assert_eq!(code, EXIT_CAP, "{}", String::from_utf8_lossy(&err));
}
