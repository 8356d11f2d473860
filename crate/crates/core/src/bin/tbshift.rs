fn main() {
    let (code, out) = tbshift::cli::run(std::env::args_os());
    println!("{out}");
    std::process::exit(code);
}
