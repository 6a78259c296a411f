fn main() {
    let (code, out) = amoeba_forcing::cli::run(std::env::args().skip(1));
    if code == 2 {
        eprint!("{out}");
    } else {
        print!("{out}");
    }
    std::process::exit(code);
}
