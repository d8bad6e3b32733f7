#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "divalg/classification.hpp"
#include "divalg/eilenberg_moore.hpp"
#include "divalg/strength.hpp"
#include "divalg/validation.hpp"

namespace divalg {

inline constexpr std::string_view kToolkitVersion = "0.1.0";

enum class ReportFormat { json, markdown };

struct InputDigest {
  std::string source;  // file path, or "builtin:<name>"
  std::string sha256;
};

struct RunReport {
  std::vector<std::string> command;
  std::vector<InputDigest> inputs;
  std::string kind;  // e.g. "ring classify"
  nlohmann::json payload;
  // Only filled with --timing, so default reports stay byte-identical.
  std::optional<double> elapsed_ms;
  std::string version{kToolkitVersion};
};

// Key-sorted JSON (two-space indent, trailing newline) or a markdown summary
// with the full payload attached.
std::string export_report(const RunReport& report, ReportFormat format);
nlohmann::json report_to_json(const RunReport& report);

// "1 ⊔ tau", "2·g ⊔ h"; "0" for the zero vector.
std::string object_name(const std::vector<Multiplicity>& v,
                        const std::vector<std::string>& labels);

nlohmann::json to_json(const ValidationReport& report);
// ring_labels name the algebra; basis_labels name `object` and
// `unreachable` (module labels for the module form).
nlohmann::json to_json(const ClassificationReport& report,
                       const std::vector<std::string>& ring_labels,
                       const std::vector<std::string>& basis_labels);
nlohmann::json to_json(const FiniteMonad& monad, const AdjunctionVerdict& verdict);
nlohmann::json to_json(const ComparisonReport& report);
nlohmann::json to_json(const VeryStrongReport& report);
nlohmann::json to_json(const MonoidObject& a);
nlohmann::json to_json(const ModuleSurvey& survey);

// Command-line entry point; args exclude the program name. Exit codes:
// 0 verdict computed, 1 axiom failure in the input, 2 parse/structural or
// usage error, 3 budget or convergence failure.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace divalg
