use std::process::ExitCode;

use ars::{Payload, Status};

fn main() -> ExitCode {
    let argv: Vec<_> = std::env::args_os().collect();
    let result = ars::run(&argv);
    if ars::command::wants_json(&argv) {
        println!("{}", result.to_json());
    } else if result.status == Status::Error && matches!(result.payload, Payload::Message { .. }) {
        eprintln!("error: {}", result.to_human());
    } else {
        println!("{}", result.to_human());
    }
    ExitCode::from(result.exit_code())
}
