use std::io::Write;

fn main() {
    let argv: Vec<String> = std::env::args().collect();
    let mut out = std::io::stdout().lock();
    let code = homhopf_cli::run(&argv, &mut out);
    let _ = out.flush();
    std::process::exit(code);
}
