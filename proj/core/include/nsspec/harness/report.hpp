#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nsspec {

/// How a row's status was decided.
enum class Provenance {
  ExplicitConstant,  ///< an inequality with fully explicit constants; may fail the run
  EmpiricalRatio,    ///< a measured constant; recorded, never failed
  ClosedForm,        ///< comparison against a known exact value
};

enum class Status { Pass, Fail, NotApplicable };

std::string to_string(Provenance p);
std::string to_string(Status s);

struct Row {
  std::string section;
  std::string name;
  double value = 0.0;
  std::optional<double> reference;
  Provenance provenance = Provenance::EmpiricalRatio;
  Status status = Status::NotApplicable;
  std::string note;
};

struct ReportMetadata {
  std::string kind;
  std::uint64_t seed = 0;
  std::uint64_t config_digest = 0;
  std::string timestamp;
};

class Report {
public:
  ReportMetadata meta;
  std::vector<Row> rows;

  void add(Row row) { rows.push_back(std::move(row)); }
  void append(Report other);

  /// An explicit-constant row passing iff `pass`.
  void check(std::string section, std::string name, double value, std::optional<double> reference,
             bool pass, std::string note = {});
  /// A closed-form comparison passing iff `pass`.
  void closed_form(std::string section, std::string name, double value, double reference,
                   bool pass, std::string note = {});
  /// A recorded measurement.
  void measure(std::string section, std::string name, double value, std::string note = {});
  /// A stage that threw; kept as a failed row so the run continues.
  void error(std::string section, std::string stage, std::string message, bool numerical);

  std::size_t failures() const;
  std::size_t numerical_errors() const { return numerical_errors_; }

  /// 0 when every checked row passes, 1 on a failed check, 3 when the only
  /// failures are numerical errors.
  int exit_code() const;

  /// "# key: value" metadata lines (when requested), then the header and rows.
  std::string to_csv(bool with_metadata = true) const;
  std::string to_json() const;

private:
  std::size_t numerical_errors_ = 0;
  std::size_t other_errors_ = 0;
};

/// printf("%.17g"); "nan", "inf" and "-inf" for non-finite values.
std::string format_number(double x);

/// RFC 4180: quote fields containing a comma, quote or line break; double quotes.
std::string csv_field(std::string_view s);

/// Parses RFC 4180 records. Lines starting with '#' outside quotes are skipped.
std::vector<std::vector<std::string>> parse_csv(std::string_view text);

struct CsvComparison {
  bool equal = true;
  std::string first_difference;
};

/// Field-by-field comparison of two CSV bodies. Fields that both parse as
/// numbers compare with relative tolerance `rel_tol` (absolute near zero);
/// other fields compare exactly.
CsvComparison compare_csv(std::string_view expected, std::string_view actual, double rel_tol);

}  // namespace nsspec
