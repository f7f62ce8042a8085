use std::process::ExitCode;

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    match bnd_cli::run(&args) {
        Ok(output) => {
            print!("{}", output.stdout);
            if let Some(note) = output.stderr {
                eprint!("{note}");
            }
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("{err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
