use std::io::Write;
use std::path::PathBuf;

fn main() {
    let default_profiles = std::env::var_os("CELLWATT_PROFILES").map(PathBuf::from);
    let mut stdout = std::io::stdout();
    let mut stderr = std::io::stderr();
    let code = cellwatt::cli::run(std::env::args_os(), default_profiles, &mut stdout, &mut stderr);
    let _ = stdout.flush();
    std::process::exit(code);
}
