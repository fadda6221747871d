#pragma once

#include <string>

#include "lctjt/apps.hpp"
#include "lctjt/types.hpp"

namespace lctjt {

// Raised on malformed input files (CSV/JSON); distinct from numeric
// precondition errors so the CLI can map them to different exit codes.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// CSV with header "t,re,im" ("im" optional). Rejects non-uniform steps
// (relative deviation > 1e-9) and duplicate time points. Numbers are written
// with 17 significant digits so write-then-read is bit-exact.
SampledSignal read_signal_csv(const std::string& path);
void write_signal_csv(const std::string& path, const SampledSignal& x);
void write_signal_csv(const std::string& path, const RealSignal& x);

// JSON object {"a":..., "b":..., "c":..., "d":...}
LctParams read_matrix_json(const std::string& path);
void write_matrix_json(const std::string& path, const LctParams& m);

// Rows are time frames, columns frequency bins; header row carries the bin
// frequencies, first column the frame times.
void write_tfd_csv(const std::string& path, const TfdMatrix& tfd);

// All writers go through a temp file + rename.
void write_text_atomic(const std::string& path, const std::string& content);

}  // namespace lctjt
