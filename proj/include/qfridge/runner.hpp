// qfridge/runner.hpp — execute a RunConfig: compute everything in memory,
// then emit deterministic CSV/JSON artifacts.
#pragma once

#include <iosfwd>
#include <string>

#include "qfridge/run_config.hpp"

namespace qfridge {

// Fixed 17-significant-digit decimal rendering used by every CSV column.
std::string format_double(double x);

// JSON summary (sorted keys, two-space indent, trailing newline): config
// echo, solver, spectrum, steady-state observables, virtual temperature and
// witness maxima. Throws on solver failures.
std::string summary_json(const RunConfig& config);

// Run the config and write <out_dir>/<out_prefix>.csv/.json. No file is
// touched unless every computation succeeded. Returns the process exit code:
// 0 success, 2 config error, 3 solver failure, 4 I/O error; diagnostics on
// `err`.
int run(const RunConfig& config, std::ostream& err);
int run(const RunConfig& config);  // diagnostics to std::cerr

}  // namespace qfridge
