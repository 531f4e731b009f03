use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().collect();
    let json = args.iter().any(|a| a == "--json");
    let result = cyop_cli::run_command(&args);
    for w in &result.warnings {
        eprintln!("{w}");
    }
    let out = result.stdout(json);
    if result.code == cyop_cli::EXIT_USAGE && result.json.is_none() {
        eprintln!("{}", out.trim_end());
    } else {
        // a closed pipe (e.g. `| head`) is not an error worth reporting
        let _ = writeln!(std::io::stdout().lock(), "{}", out.trim_end());
    }
    ExitCode::from(result.code as u8)
}
