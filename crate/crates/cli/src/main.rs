fn main() {
    std::process::exit(bintrans_cli::run(std::env::args_os()));
}
