//! Command plumbing behind the `orbcoh` binary.

use std::fs;
use std::path::{Path, PathBuf};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::presentations::{load_document, load_oracle, EulerOracle, InputFormat, SectorAtlas};
use crate::report::{CohomologyReport, RingReport, SectorsReport, VerifyReport};
use crate::ring::OrbRing;

pub const EXIT_OK: i32 = 0;
pub const EXIT_IO: i32 = 1;
pub const EXIT_VALIDATION: i32 = 3;
pub const EXIT_VERIFICATION_FAILED: i32 = 4;
pub const EXIT_INCOMPLETE: i32 = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Sectors,
    Cohomology,
    Ring,
    Verify,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum OutputFormat {
    #[default]
    Table,
    Json,
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub command: Command,
    pub input: PathBuf,
    pub oracle: Option<PathBuf>,
    pub format: OutputFormat,
    pub verbose: bool,
}

/// Rendered report and the process exit status it implies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    pub exit_code: i32,
}

/// Exit status for an error raised before a report exists.
pub fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::Io(_) => EXIT_IO,
        _ => EXIT_VALIDATION,
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn render<T: Serialize>(
    format: OutputFormat,
    report: &T,
    table: impl FnOnce(&T) -> String,
) -> String {
    match format {
        OutputFormat::Table => table(report),
        OutputFormat::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("report serializes");
            s.push('\n');
            s
        }
    }
}

/// Loads the input atlas and the inline oracle merged with `--oracle`.
pub fn load(config: &RunConfig) -> Result<(SectorAtlas, EulerOracle)> {
    let text = read(&config.input)?;
    let doc = load_document(&text, InputFormat::detect(Some(&config.input), &text))?;
    let atlas = doc.to_atlas()?;
    let mut oracle = doc.oracle()?;
    if let Some(path) = &config.oracle {
        let text = read(path)?;
        oracle.merge(load_oracle(&text, InputFormat::detect(Some(path), &text))?);
    }
    Ok((atlas, oracle))
}

/// Renders `command` for an atlas already in memory.
pub fn report_for(
    command: Command,
    atlas: &SectorAtlas,
    oracle: &EulerOracle,
    format: OutputFormat,
    verbose: bool,
) -> Result<Outcome> {
    Ok(match command {
        Command::Sectors => Outcome {
            output: render(
                format,
                &SectorsReport::build(atlas),
                SectorsReport::to_table,
            ),
            exit_code: EXIT_OK,
        },
        Command::Cohomology => Outcome {
            output: render(
                format,
                &CohomologyReport::build(atlas),
                CohomologyReport::to_table,
            ),
            exit_code: EXIT_OK,
        },
        Command::Ring => {
            let ring = OrbRing::new(atlas, oracle)?;
            let table = ring.structure_constants()?;
            let report = RingReport::build(&ring, &table);
            Outcome {
                output: render(format, &report, RingReport::to_table),
                exit_code: if report.is_complete() {
                    EXIT_OK
                } else {
                    EXIT_INCOMPLETE
                },
            }
        }
        Command::Verify => {
            let ring = OrbRing::new(atlas, oracle);
            if let Err(e @ Error::OracleValidation { .. }) = &ring {
                return Err(e.clone());
            }
            let report = VerifyReport::build(atlas, ring, verbose);
            Outcome {
                output: render(format, &report, VerifyReport::to_table),
                exit_code: if report.passed {
                    EXIT_OK
                } else {
                    EXIT_VERIFICATION_FAILED
                },
            }
        }
    })
}

pub fn run(config: &RunConfig) -> Result<Outcome> {
    let (atlas, oracle) = load(config)?;
    report_for(
        config.command,
        &atlas,
        &oracle,
        config.format,
        config.verbose,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn data(name: &str) -> PathBuf {
        Path::new(env!("CARGO_MANIFEST_DIR"))
            .join("data")
            .join(name)
    }

    fn config(command: Command, input: &str) -> RunConfig {
        RunConfig {
            command,
            input: data(input),
            oracle: None,
            format: OutputFormat::Table,
            verbose: false,
        }
    }

    #[test]
    fn missing_file_is_io_error() {
        let err = run(&config(Command::Sectors, "no_such_file.toml")).unwrap_err();
        assert_eq!(exit_code_for(&err), EXIT_IO);
    }

    #[test]
    fn exit_codes_by_command() {
        assert_eq!(
            run(&config(Command::Ring, "s3_mod_z3.toml"))
                .unwrap()
                .exit_code,
            EXIT_OK
        );
        assert_eq!(
            run(&config(Command::Ring, "wps_122333_circle.toml"))
                .unwrap()
                .exit_code,
            EXIT_INCOMPLETE
        );
        let mut c = config(Command::Ring, "wps_122333_circle.toml");
        c.oracle = Some(data("wps_122333_oracle.toml"));
        assert_eq!(run(&c).unwrap().exit_code, EXIT_OK);
        assert_eq!(
            run(&config(Command::Verify, "corrupted_raw.toml"))
                .unwrap()
                .exit_code,
            EXIT_VERIFICATION_FAILED
        );
    }

    #[test]
    fn bad_oracle_is_validation_error() {
        let dir = std::env::temp_dir().join(format!("orbcoh-cli-{}", std::process::id()));
        fs::create_dir_all(&dir).unwrap();
        let path = dir.join("bad_oracle.toml");
        fs::write(
            &path,
            "[[euler_oracle]]\nlabels = [\"1/3\", \"1/3\", \"1/3\"]\nmonomial = \"h⊗1\"\nvalue = \"1\"\n",
        )
        .unwrap();
        let mut c = config(Command::Verify, "wps_122333_circle.toml");
        c.oracle = Some(path);
        let err = run(&c).unwrap_err();
        assert!(matches!(err, Error::OracleValidation { .. }));
        assert_eq!(exit_code_for(&err), EXIT_VALIDATION);
        fs::remove_dir_all(&dir).ok();
    }
}
