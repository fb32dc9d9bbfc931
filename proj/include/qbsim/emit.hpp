#pragma once

#include <stdexcept>
#include <string>

#include "qbsim/scenario.hpp"

namespace qbsim {

/// File-system failure carrying the offending path in its message.
/// Distinguished from std::invalid_argument so callers can map validation
/// and I/O failures to different exit codes.
class IoError : public std::runtime_error {
  public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

/// Output encodings of emit().
enum class EmitFormat { Csv, Json };

EmitFormat emit_format_from_name(std::string_view name);

/// Round-trip a finite double through 12 significant decimal digits; every
/// emitted number passes through this so CSV and JSON carry identical values.
double round_to_emit_precision(double value);

/// Render a finite double with 12 significant digits (locale-independent).
std::string format_double(double value);

/// Render a result as text. CSV columns are exactly
///   sweep_param,sweep_value,t,ergotropy,power,coherence,steering,energy
/// with unselected observables left empty and rows ordered by (series, t).
/// JSON mirrors the same schema: a "records" array plus a "peaks" array and a
/// "series" legend. Identical results produce byte-identical text.
std::string emit_to_string(const SweepResult& result, EmitFormat format);

/// Write emit_to_string to a file; failures throw IoError naming the path.
void emit_to_file(const SweepResult& result, EmitFormat format,
                  const std::string& path);

}  // namespace qbsim
