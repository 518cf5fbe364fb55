#ifndef GQG_SEQUENCE_IO_HPP
#define GQG_SEQUENCE_IO_HPP

// Text interchange for pulse sequences.
//
// Pulse DSL (angles in degrees, pulses separated by whitespace, applied
// left to right):
//
//   sequence := pulse (WS pulse)*
//   pulse    := ANGLE '(' PHASE ')'                 xy-plane pulse
//             | 'rot(' AX ',' AY ',' AZ ';' ANGLE ')' arbitrary unit axis
//
// "180(60) 180(-60) 180(60)" is a pi pulse about (cos 60, sin 60, 0), then
// about (cos -60, sin -60, 0), then the first again.
//
// JSON document:
//   {"label": str,
//    "target": {"axis": [x, y, z], "angle_deg": num} | null,
//    "segments": [{"axis": [x, y, z], "angle_deg": num}, ...]}
//
// Sweep CSV: header `epsilon,infidelity,operator_error`, one row per grid
// point, scientific notation with 17 significant digits, LF line endings.

#include <cstddef>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "gqg/robustness.hpp"
#include "gqg/su2.hpp"

namespace gqg {

class ParseError : public std::runtime_error {
public:
  /// `column` is 1-based; 0 when no position applies.
  ParseError(const std::string &message, std::size_t column);

  [[nodiscard]] std::size_t column() const { return column_; }

private:
  std::size_t column_;
};

enum class Format { dsl, json };

PulseSequence parse_dsl(std::string_view text);
PulseSequence parse_json(std::string_view text);
/// JSON if the first non-blank character is '{', DSL otherwise.
PulseSequence parse_document(std::string_view text);

std::string to_dsl(const PulseSequence &seq);
std::string to_json(const PulseSequence &seq);
std::string serialize(const PulseSequence &seq, Format format);

/// Shortest of up to 15 significant digits; never "-0".
std::string format_number(double value);
/// d.dddddddddddddddde[+-]XX (17 significant digits).
std::string format_scientific(double value);

void write_sweep_csv(std::ostream &out, std::span<const SweepRow> rows);

} // namespace gqg

#endif // GQG_SEQUENCE_IO_HPP
