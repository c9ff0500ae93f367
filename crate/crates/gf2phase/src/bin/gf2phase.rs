fn main() {
    std::process::exit(gf2phase::cli::run(std::env::args_os()));
}
