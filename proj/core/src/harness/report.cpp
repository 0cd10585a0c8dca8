#include "nsspec/harness/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include <json.hpp>

namespace nsspec {

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::ExplicitConstant:
      return "explicit-constant assertion";
    case Provenance::EmpiricalRatio:
      return "empirical ratio";
    case Provenance::ClosedForm:
      return "closed-form check";
  }
  return "unknown";
}

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::NotApplicable:
      return "n/a";
  }
  return "unknown";
}

void Report::append(Report other) {
  for (auto& row : other.rows) rows.push_back(std::move(row));
  numerical_errors_ += other.numerical_errors_;
  other_errors_ += other.other_errors_;
}

void Report::check(std::string section, std::string name, double value,
                   std::optional<double> reference, bool pass, std::string note) {
  add({std::move(section), std::move(name), value, reference, Provenance::ExplicitConstant,
       pass ? Status::Pass : Status::Fail, std::move(note)});
}

void Report::closed_form(std::string section, std::string name, double value, double reference,
                         bool pass, std::string note) {
  add({std::move(section), std::move(name), value, reference, Provenance::ClosedForm,
       pass ? Status::Pass : Status::Fail, std::move(note)});
}

void Report::measure(std::string section, std::string name, double value, std::string note) {
  add({std::move(section), std::move(name), value, std::nullopt, Provenance::EmpiricalRatio,
       Status::NotApplicable, std::move(note)});
}

void Report::error(std::string section, std::string stage, std::string message, bool numerical) {
  add({std::move(section), std::move(stage) + ".error", std::nan(""), std::nullopt,
       Provenance::ExplicitConstant, Status::Fail,
       (numerical ? "numerical: " : "domain: ") + std::move(message)});
  if (numerical)
    ++numerical_errors_;
  else
    ++other_errors_;
}

std::size_t Report::failures() const {
  std::size_t n = 0;
  for (const auto& row : rows)
    if (row.status == Status::Fail) ++n;
  return n;
}

int Report::exit_code() const {
  const std::size_t failed = failures();
  if (failed == 0) return 0;
  if (failed == numerical_errors_) return 3;
  return 1;
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

namespace {

constexpr const char* kHeader = "section,name,value,reference,provenance,status,note";

char hex_digit(unsigned v) { return "0123456789abcdef"[v & 0xF]; }

std::string hex64(std::uint64_t v) {
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i, v >>= 4) s[static_cast<std::size_t>(i)] = hex_digit(v);
  return s;
}

nlohmann::json number_json(double x) {
  if (std::isfinite(x)) return x;
  return format_number(x);
}

}  // namespace

std::string Report::to_csv(bool with_metadata) const {
  std::ostringstream os;
  if (with_metadata) {
    os << "# kind: " << meta.kind << "\n";
    os << "# seed: " << meta.seed << "\n";
    os << "# config_digest: " << hex64(meta.config_digest) << "\n";
    os << "# timestamp: " << meta.timestamp << "\n";
  }
  os << kHeader << "\n";
  for (const auto& row : rows) {
    os << csv_field(row.section) << ',' << csv_field(row.name) << ',' << format_number(row.value)
       << ',' << (row.reference ? format_number(*row.reference) : std::string()) << ','
       << csv_field(to_string(row.provenance)) << ',' << to_string(row.status) << ','
       << csv_field(row.note) << "\n";
  }
  return os.str();
}

std::string Report::to_json() const {
  nlohmann::ordered_json doc;
  doc["metadata"] = {{"kind", meta.kind},
                     {"seed", meta.seed},
                     {"config_digest", hex64(meta.config_digest)},
                     {"timestamp", meta.timestamp}};
  auto& out = doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    nlohmann::ordered_json r;
    r["section"] = row.section;
    r["name"] = row.name;
    r["value"] = number_json(row.value);
    r["reference"] = row.reference ? number_json(*row.reference) : nlohmann::json(nullptr);
    r["provenance"] = to_string(row.provenance);
    r["status"] = to_string(row.status);
    r["note"] = row.note;
    out.push_back(std::move(r));
  }
  doc["summary"] = {{"rows", rows.size()}, {"failures", failures()}, {"exit_code", exit_code()}};
  return doc.dump(2) + "\n";
}

std::vector<std::vector<std::string>> parse_csv(std::string_view text) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> record;
  std::string field;
  bool quoted = false;
  bool at_record_start = true;

  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (at_record_start && c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    at_record_start = false;
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      record.push_back(std::move(field));
      field.clear();
    } else if (c == '\n' || c == '\r') {
      if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
      record.push_back(std::move(field));
      field.clear();
      records.push_back(std::move(record));
      record.clear();
      at_record_start = true;
    } else {
      field += c;
    }
  }
  if (!field.empty() || !record.empty()) {
    record.push_back(std::move(field));
    records.push_back(std::move(record));
  }
  return records;
}

namespace {

std::optional<double> parse_number(const std::string& s) {
  if (s.empty()) return std::nullopt;
  if (s == "nan") return std::nan("");
  if (s == "inf") return HUGE_VAL;
  if (s == "-inf") return -HUGE_VAL;
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size()) return std::nullopt;
  return v;
}

bool numbers_match(double a, double b, double rel_tol) {
  if (std::isnan(a) || std::isnan(b)) return std::isnan(a) && std::isnan(b);
  if (std::isinf(a) || std::isinf(b)) return a == b;
  return std::abs(a - b) <= rel_tol * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace

CsvComparison compare_csv(std::string_view expected, std::string_view actual, double rel_tol) {
  const auto want = parse_csv(expected);
  const auto got = parse_csv(actual);
  CsvComparison out;
  auto differ = [&](std::string msg) {
    out.equal = false;
    out.first_difference = std::move(msg);
    return out;
  };
  if (want.size() != got.size())
    return differ("record count " + std::to_string(want.size()) + " vs " +
                  std::to_string(got.size()));
  for (std::size_t r = 0; r < want.size(); ++r) {
    if (want[r].size() != got[r].size())
      return differ("record " + std::to_string(r) + ": field count differs");
    for (std::size_t f = 0; f < want[r].size(); ++f) {
      const auto& a = want[r][f];
      const auto& b = got[r][f];
      if (a == b) continue;
      const auto x = parse_number(a);
      const auto y = parse_number(b);
      if (x && y && numbers_match(*x, *y, rel_tol)) continue;
      return differ("record " + std::to_string(r) + " field " + std::to_string(f) + ": '" + a +
                    "' vs '" + b + "'");
    }
  }
  return out;
}

}  // namespace nsspec
