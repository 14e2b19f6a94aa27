//! Session files, command dispatch and report rendering for the `linkage`
//! command-line tool.

pub mod commands;
pub mod report;
pub mod session;

pub use commands::{run_command, Invocation, COMMANDS};
pub use report::{CommandResult, Format};
pub use session::{parse_session, render_session, Session};

/// Parses `text`, runs the invocation and renders the result. Returns the
/// rendered output and the process exit code (0 success, 2 inconclusive,
/// 1 error).
pub fn run(text: &str, inv: &Invocation, format: Format) -> (String, i32) {
    let result = parse_session(text).and_then(|s| run_command(&s, inv));
    match result {
        Ok(r) => (r.render(format), r.exit_code()),
        Err(e) => (report::render_error(&inv.echo(), &e.to_string(), format), 1),
    }
}
