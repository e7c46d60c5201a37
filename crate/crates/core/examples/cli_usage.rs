//! Drive the command line from code; same as running the `qforms` binary.
//!
//! ```bash
//! cargo run --example cli_usage
//! ```

fn main() {
    for args in [
        "qforms mu --s 4 --format csv",
        "qforms rep --kind squares --s 2 --n-max 4 --check --format pretty",
        "qforms expand --double oe --r 2 --s 3 --order 4 --format csv",
        "qforms expand --series giinf --k 4 --order 3",
    ] {
        println!("$ {args}");
        let code = qforms::cli::run(args.split_whitespace());
        println!("[exit {code}]\n");
    }
}
