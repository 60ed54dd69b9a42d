#include "spiralemb/report_json.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace spiralemb {

namespace {

std::string escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", ch);
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  return out;
}

void append_map(std::ostringstream& os, const std::map<std::string, double>& m) {
  os << '{';
  bool first = true;
  for (const auto& [k, v] : m) {
    if (!first) os << ',';
    first = false;
    os << '"' << escape(k) << "\":" << format_double(v);
  }
  os << '}';
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.16e", v);
  return buf;
}

// wall_time_s is deliberately not serialized: identical inputs must yield
// byte-identical payloads.
std::string report_to_json(const VerificationReport& report) {
  std::ostringstream os;
  os << "{\"check\":\"" << escape(report.check) << "\",";
  os << "\"map_id\":\"" << escape(report.map_id) << "\",";
  os << "\"params\":";
  append_map(os, report.params);
  os << ",\"samples\":" << report.samples;
  os << ",\"violations\":" << report.violations;
  os << ",\"worst\":";
  if (report.worst) {
    os << "{\"index\":" << report.worst->index << ",\"where\":["
       << format_double(report.worst->where.x) << ',' << format_double(report.worst->where.y)
       << "],\"slack\":" << format_double(report.worst->slack) << '}';
  } else {
    os << "null";
  }
  os << ",\"extrema\":";
  append_map(os, report.extrema);
  os << ",\"pass\":" << (report.pass ? "true" : "false");
  os << ",\"rng_algorithm\":\"" << escape(report.rng_algorithm) << "\"";
  os << ",\"seed\":" << report.seed;
  os << "}\n";
  return os.str();
}

VerificationReport report_from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  VerificationReport report;
  report.check = j.at("check").get<std::string>();
  report.map_id = j.at("map_id").get<std::string>();
  for (const auto& [k, v] : j.at("params").items()) report.params[k] = v.get<double>();
  report.samples = j.at("samples").get<std::int64_t>();
  report.violations = j.at("violations").get<std::int64_t>();
  if (!j.at("worst").is_null()) {
    const nlohmann::json& w = j.at("worst");
    Violation v;
    v.index = w.at("index").get<std::int64_t>();
    v.where = {w.at("where").at(0).get<double>(), w.at("where").at(1).get<double>()};
    v.slack = w.at("slack").get<double>();
    report.worst = v;
  }
  for (const auto& [k, v] : j.at("extrema").items()) report.extrema[k] = v.get<double>();
  report.pass = j.at("pass").get<bool>();
  report.rng_algorithm = j.at("rng_algorithm").get<std::string>();
  report.seed = j.at("seed").get<std::uint64_t>();
  return report;
}

void write_report(const VerificationReport& report, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("write_report: cannot open " + path);
  out << report_to_json(report);
  if (!out) throw std::runtime_error("write_report: write failed for " + path);
}

}  // namespace spiralemb
