#include "gqg/sequence_io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <ostream>

#include <json.hpp>

namespace gqg {

namespace {

// User-typed axes are accepted within this tolerance and renormalized.
constexpr double kAxisInputTolerance = 1e-6;
constexpr double kPlaneTolerance = 1e-10;

bool is_blank(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

class DslParser {
public:
  explicit DslParser(std::string_view text) : text_(text) {}

  PulseSequence parse() {
    PulseSequence seq;
    skip_blank();
    if (at_end())
      fail("empty input: expected at least one pulse");
    while (true) {
      seq.segments.push_back(pulse());
      const std::size_t before = pos_;
      skip_blank();
      if (at_end())
        break;
      if (pos_ == before)
        fail("expected whitespace between pulses");
    }
    return seq;
  }

private:
  [[noreturn]] void fail(const std::string &what) const {
    fail_at(what, at_end() ? end_column() : pos_);
  }

  // Errors at end of input point just past the last non-blank character.
  std::size_t end_column() const {
    std::size_t n = text_.size();
    while (n > 0 && is_blank(text_[n - 1]))
      --n;
    return n;
  }

  [[noreturn]] void fail_at(const std::string &what, std::size_t at) const {
    throw ParseError("column " + std::to_string(at + 1) + ": " + what, at + 1);
  }

  bool at_end() const { return pos_ >= text_.size(); }

  std::string found() const {
    if (at_end())
      return "end of input";
    return "'" + std::string(1, text_[pos_]) + "'";
  }

  void skip_blank() {
    while (!at_end() && is_blank(text_[pos_]))
      ++pos_;
  }

  void expect(char c) {
    skip_blank();
    if (at_end() || text_[pos_] != c)
      fail("expected '" + std::string(1, c) + "', found " + found());
    ++pos_;
  }

  double number() {
    skip_blank();
    const std::size_t start = pos_;
    std::size_t p = pos_;
    if (p < text_.size() && text_[p] == '+')
      ++p;
    double value = 0.0;
    const char *first = text_.data() + p;
    const char *last = text_.data() + text_.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr == first || !std::isfinite(value))
      fail_at("expected number, found " + found(),
              at_end() ? end_column() : start);
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return value;
  }

  Segment pulse() {
    const std::size_t start = pos_;
    if (text_.substr(pos_, 4) == "rot(") {
      pos_ += 4;
      BlochVector axis;
      axis.x() = number();
      expect(',');
      axis.y() = number();
      expect(',');
      axis.z() = number();
      expect(';');
      const double angle = number();
      expect(')');
      if (std::abs(axis.norm() - 1.0) > kAxisInputTolerance)
        fail_at("rot axis must be a unit vector (norm " +
                    format_number(axis.norm()) + ")",
                start);
      return Segment(axis.normalized(), deg_to_rad(angle));
    }
    if (!at_end() && std::isalpha(static_cast<unsigned char>(text_[pos_])))
      fail("unknown token starting with " + found());
    const double angle = number();
    expect('(');
    const double phase = number();
    expect(')');
    return Segment(xy_axis(deg_to_rad(phase)), deg_to_rad(angle));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

BlochVector read_axis(const nlohmann::json &j, const char *where) {
  if (!j.is_array() || j.size() != 3)
    throw ParseError(std::string(where) + ": axis must be an array of 3 "
                                          "numbers",
                     0);
  BlochVector v;
  for (int i = 0; i < 3; ++i) {
    if (!j[i].is_number())
      throw ParseError(std::string(where) + ": axis components must be "
                                            "numbers",
                       0);
    v(i) = j[i].get<double>();
  }
  if (!v.allFinite() || std::abs(v.norm() - 1.0) > kAxisInputTolerance)
    throw ParseError(std::string(where) + ": axis must be a unit vector", 0);
  return v.normalized();
}

double read_angle(const nlohmann::json &obj, const char *where) {
  if (!obj.is_object() || !obj.contains("angle_deg") ||
      !obj["angle_deg"].is_number())
    throw ParseError(std::string(where) + ": missing numeric angle_deg", 0);
  const double deg = obj["angle_deg"].get<double>();
  if (!std::isfinite(deg))
    throw ParseError(std::string(where) + ": angle_deg must be finite", 0);
  return deg_to_rad(deg);
}

nlohmann::ordered_json axis_json(const BlochVector &v) {
  return nlohmann::ordered_json::array({v.x(), v.y(), v.z()});
}

} // namespace

ParseError::ParseError(const std::string &message, std::size_t column)
    : std::runtime_error(message), column_(column) {}

PulseSequence parse_dsl(std::string_view text) {
  return DslParser(text).parse();
}

PulseSequence parse_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
  if (!doc.is_object())
    throw ParseError("JSON document must be an object", 0);

  PulseSequence seq;
  if (doc.contains("label")) {
    if (!doc["label"].is_string())
      throw ParseError("label must be a string", 0);
    seq.label = doc["label"].get<std::string>();
  }
  if (doc.contains("target") && !doc["target"].is_null()) {
    const auto &t = doc["target"];
    if (!t.is_object() || !t.contains("axis"))
      throw ParseError("target must be null or {axis, angle_deg}", 0);
    seq.target = Rotation{read_axis(t["axis"], "target"),
                          read_angle(t, "target")};
  }
  if (!doc.contains("segments") || !doc["segments"].is_array())
    throw ParseError("segments must be an array", 0);
  if (doc["segments"].empty())
    throw ParseError("segments must not be empty", 0);
  std::size_t index = 0;
  for (const auto &s : doc["segments"]) {
    const std::string where = "segment " + std::to_string(++index);
    if (!s.is_object() || !s.contains("axis"))
      throw ParseError(where + ": expected {axis, angle_deg}", 0);
    seq.segments.emplace_back(read_axis(s["axis"], where.c_str()),
                              read_angle(s, where.c_str()));
  }
  return seq;
}

PulseSequence parse_document(std::string_view text) {
  for (char c : text) {
    if (is_blank(c))
      continue;
    return c == '{' ? parse_json(text) : parse_dsl(text);
  }
  return parse_dsl(text);
}

std::string to_dsl(const PulseSequence &seq) {
  std::string out;
  for (const Segment &s : seq.segments) {
    if (!out.empty())
      out += ' ';
    const std::string angle = format_number(rad_to_deg(s.angle));
    if (std::abs(s.axis.z()) <= kPlaneTolerance) {
      const double phase = std::atan2(s.axis.y(), s.axis.x());
      out += angle + "(" + format_number(rad_to_deg(phase)) + ")";
    } else {
      out += "rot(" + format_number(s.axis.x()) + "," +
             format_number(s.axis.y()) + "," + format_number(s.axis.z()) +
             "; " + angle + ")";
    }
  }
  return out;
}

std::string to_json(const PulseSequence &seq) {
  nlohmann::ordered_json doc;
  doc["label"] = seq.label;
  if (seq.target) {
    nlohmann::ordered_json t;
    t["axis"] = axis_json(seq.target->axis);
    t["angle_deg"] = rad_to_deg(seq.target->angle);
    doc["target"] = t;
  } else {
    doc["target"] = nullptr;
  }
  auto segments = nlohmann::ordered_json::array();
  for (const Segment &s : seq.segments) {
    nlohmann::ordered_json j;
    j["axis"] = axis_json(s.axis);
    j["angle_deg"] = rad_to_deg(s.angle);
    segments.push_back(std::move(j));
  }
  doc["segments"] = std::move(segments);
  return doc.dump(2);
}

std::string serialize(const PulseSequence &seq, Format format) {
  return format == Format::json ? to_json(seq) : to_dsl(seq);
}

std::string format_number(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value,
                                 std::chars_format::general, 15);
  std::string s(buf, res.ptr);
  if (s == "-0")
    s = "0";
  return s;
}

std::string format_scientific(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value,
                                 std::chars_format::scientific, 16);
  return std::string(buf, res.ptr);
}

void write_sweep_csv(std::ostream &out, std::span<const SweepRow> rows) {
  out << "epsilon,infidelity,operator_error\n";
  for (const SweepRow &r : rows)
    out << format_scientific(r.epsilon) << ',' << format_scientific(r.infidelity)
        << ',' << format_scientific(r.operator_error) << '\n';
}

} // namespace gqg
