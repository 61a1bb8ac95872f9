use std::io::{stderr, stdout};
use std::process::exit;

fn main() {
    let code = absep::cli::run_from(std::env::args_os(), &mut stdout(), &mut stderr());
    exit(code);
}
