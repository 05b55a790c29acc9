use std::io::{stderr, stdout};

fn main() {
    let status = masseyx::cli::run(std::env::args(), &mut stdout().lock(), &mut stderr().lock());
    std::process::exit(status);
}
