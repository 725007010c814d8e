#pragma once

#include "hopf/hopfcore.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace hopf {

enum class CheckStatus { pass, fail, skipped };
std::string to_string(CheckStatus status);

struct CheckResult {
  std::string check_id;
  std::string algebra;
  std::string field;
  CheckStatus status = CheckStatus::skipped;
  std::string details;
  double elapsed_ms = 0;
};

struct SuiteContext {
  FieldSpec field;
  std::string field_name;
  /// Preset of the --pq flag; checks that sweep (p, q) themselves ignore it.
  std::string pq = "0,0";
};

struct CheckOutcome {
  CheckStatus status;
  std::string details;
  static CheckOutcome from(const CheckReport& report);
  static CheckOutcome skip(std::string why) { return {CheckStatus::skipped, std::move(why)}; }
};

struct RegisteredCheck {
  std::string id;
  std::string algebra;
  /// Acceptance criteria (1..14) the check contributes to.
  std::vector<int> criteria;
  std::function<CheckOutcome(const SuiteContext&)> run;
};

/// All registered checks, sorted by id. Ids are unique and stable.
const std::vector<RegisteredCheck>& registered_checks();

/// Shell-style glob with '*' and '?'.
bool glob_match(std::string_view pattern, std::string_view text);

struct SuiteOptions {
  std::string filter = "*";
  std::optional<std::string> algebra;
  std::string field = "Qr";
  std::string pq = "0,0";
  /// Worker threads; 0 picks the hardware concurrency.
  unsigned jobs = 1;
};

struct SuiteReport {
  std::vector<CheckResult> results;  // sorted by check_id
  std::size_t passed() const;
  std::size_t failed() const;
  std::size_t skipped() const;
  /// 0 when nothing failed, 1 otherwise.
  int exit_code() const { return failed() == 0 ? 0 : 1; }
  std::string to_json() const;
  std::string to_text() const;
};

/// Runs the registered checks matching the options. Throws
/// std::invalid_argument for an unknown field, (p, q) preset or algebra, or a
/// filter matching nothing.
SuiteReport run_suite(const SuiteOptions& options);

/// Confluence, bialgebra and antipode checks on a presentation file
/// (check ids "file.*").
SuiteReport run_file_checks(const std::string& path, const SuiteOptions& options);

}  // namespace hopf
