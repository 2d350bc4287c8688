//! Command-line front end for `edgespace-core`.

pub mod commands;
pub mod graphfile;

pub use commands::{run, Cli, CliError, Command, Experiment};
pub use graphfile::{parse_edge_list, parse_set_file, GraphFile, ParseError};

/// Parses `args`, runs the command and returns the process exit code. Output and
/// diagnostics go to the given writers.
pub fn main_with_args<I, T>(
    args: I,
    out: &mut dyn std::io::Write,
    err: &mut dyn std::io::Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    use clap::Parser;
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match run(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
