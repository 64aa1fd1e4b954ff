#include "ydilog/report.hpp"

#include <fmt/format.h>
#include <json.hpp>

#include <cmath>

namespace ydilog {

namespace {

std::string csv_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return fmt::format("{:.17g}", v);
}

nlohmann::json json_integer(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

nlohmann::json json_number(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

}  // namespace

Record to_record(const VerificationReport& report, const std::string& command) {
  return Record{report.instance, command, report.computed, report.expected, report.deviation, report.passed,
                report.check + " " + report.detail};
}

void write_records(std::ostream& out, const std::vector<Record>& records, Format format) {
  switch (format) {
    case Format::Text:
      for (const auto& r : records) {
        out << fmt::format("{}  {:<9} {:<22} computed={:<20.15g} expected={:<8} deviation={:.2e}  {}\n",
                           r.passed ? "PASS" : "FAIL", r.command, r.instance, r.computed,
                           r.expected ? r.expected->to_string() : "-", r.deviation, r.detail);
      }
      break;
    case Format::Json: {
      auto arr = nlohmann::json::array();
      for (const auto& r : records) {
        nlohmann::json j;
        j["instance"] = r.instance;
        j["command"] = r.command;
        j["computed"] = json_number(r.computed);
        if (r.expected) {
          j["expected_num"] = json_integer(r.expected->numerator());
          j["expected_den"] = json_integer(r.expected->denominator());
        } else {
          j["expected_num"] = nullptr;
          j["expected_den"] = nullptr;
        }
        j["deviation"] = json_number(r.deviation);
        j["passed"] = r.passed;
        arr.push_back(std::move(j));
      }
      out << arr.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      out << "instance,command,computed,expected_num,expected_den,deviation,passed\n";
      for (const auto& r : records) {
        out << r.instance << ',' << r.command << ',' << csv_number(r.computed) << ','
            << (r.expected ? r.expected->numerator().get_str() : "") << ','
            << (r.expected ? r.expected->denominator().get_str() : "") << ',' << csv_number(r.deviation) << ','
            << (r.passed ? "true" : "false") << '\n';
      }
      break;
  }
}

}  // namespace ydilog
