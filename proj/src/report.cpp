#include "lorentz_bridge/report.hpp"

#include <fmt/format.h>

#include <cmath>
#include <string>

namespace lorentz_bridge {

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (const char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          out += fmt::format("\\u{:04x}", static_cast<int>(ch));
        } else {
          out += ch;
        }
    }
  }
  return out + "\"";
}

std::string number(double v) {
  if (!std::isfinite(v)) return "null";
  return format_number(v, 17);
}

std::string boolean(bool b) { return b ? "true" : "false"; }

std::string interval(const Interval& r) {
  return "[" + number(r.lo) + ", " + number(r.hi) + "]";
}

std::string witness_json(const Witness& w, const std::string& pad) {
  std::string out = "{\n" + pad + "  \"values\": {";
  for (std::size_t i = 0; i < w.values.size(); ++i) {
    out += (i ? ", " : "") + quote(w.values[i].first) + ": " + number(w.values[i].second);
  }
  out += "},\n" + pad + "  \"note\": " + quote(w.note) + "\n" + pad + "}";
  return out;
}

std::string verdict_json(const TheoremVerdict& v) {
  const std::string pad = "      ";
  std::string out = "    {\n";
  out += pad + "\"suite_name\": " + quote(v.suite_name) + ",\n";
  out += pad + "\"samples\": " + std::to_string(v.samples) + ",\n";
  out += pad + "\"max_abs_residual\": " + number(v.max_abs_residual) + ",\n";
  out += pad + "\"max_rel_residual\": " + number(v.max_rel_residual) + ",\n";
  out += pad + "\"tolerance\": " + number(v.tolerance) + ",\n";
  out += pad + "\"pass\": " + boolean(v.pass) + ",\n";
  out += pad + "\"witness\": " + (v.witness ? witness_json(*v.witness, pad) : "null") + ",\n";
  out += pad + "\"detail\": " + quote(v.detail) + "\n";
  return out + "    }";
}

}  // namespace

std::string format_number(double value, int significant_digits) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  // -0 prints as 0 so that tables do not flip sign on exact zeros.
  if (value == 0.0) value = 0.0;
  return fmt::format("{:.{}g}", value, significant_digits);
}

std::string to_json(const VerificationReport& r) {
  const SamplingSpec& c = r.config;
  const RunOptions& o = r.options;

  std::string axes;
  for (std::size_t i = 0; i < c.axes.size(); ++i) {
    axes += (i ? ", " : "") + quote(to_string(c.axes[i]));
  }
  std::string suites;
  for (std::size_t i = 0; i < o.suites.size(); ++i) {
    suites += (i ? ", " : "") + quote(to_string(o.suites[i]));
  }

  std::string out = "{\n";
  out += "  \"version\": " + quote(r.version) + ",\n";
  out += "  \"config\": {\n";
  out += "    \"seed\": " + std::to_string(c.seed) + ",\n";
  out += "    \"n_samples\": " + std::to_string(c.n_samples) + ",\n";
  out += "    \"beta_max\": " + number(c.beta_max) + ",\n";
  out += "    \"mass_range\": " + interval(c.mass_range) + ",\n";
  out += "    \"omega0_range\": " + interval(c.omega0_range) + ",\n";
  out += "    \"invariant_range\": " +
         (c.invariant_range ? interval(*c.invariant_range) : std::string("null")) + ",\n";
  out += "    \"axes\": [" + axes + "],\n";
  out += std::string("    \"sampling\": ") +
         quote(c.sampling == BetaSampling::uniform_beta ? "uniform-beta" : "uniform-rapidity") +
         ",\n";
  out += std::string("    \"profile\": ") +
         quote(c.profile == Profile::standard ? "standard" : "stress") + ",\n";
  out += "    \"C\": " + number(o.C) + ",\n";
  out += "    \"tolerance\": " + number(o.tolerance) + ",\n";
  out += "    \"exponent\": " + number(o.exponent) + ",\n";
  out += "    \"perturbation\": " + number(o.perturbation) + ",\n";
  out += "    \"suites\": [" + suites + "]\n";
  out += "  },\n";
  out += "  \"verdicts\": [";
  for (std::size_t i = 0; i < r.verdicts.size(); ++i) {
    out += (i ? ",\n" : "\n") + verdict_json(r.verdicts[i]);
  }
  out += r.verdicts.empty() ? "],\n" : "\n  ],\n";
  out += "  \"overall_pass\": " + boolean(r.overall_pass) + ",\n";
  out += "  \"wall_time\": " + number(r.wall_time) + "\n";
  out += "}\n";
  return out;
}

}  // namespace lorentz_bridge
