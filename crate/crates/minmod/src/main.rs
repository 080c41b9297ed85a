//! Thin binary wrapper: all behavior lives in the library's `cli_io`
//! module so it can be tested in-process.

fn main() {
    std::process::exit(minmod::cli_io::run());
}
