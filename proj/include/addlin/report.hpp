#pragma once

#include <optional>
#include <string>
#include <vector>

#include "addlin/equiv.hpp"
#include "addlin/io.hpp"

namespace addlin {

// "[n,k/2,d]_q^2", the bracket notation used for additive codes over the
// extension; k/2 is printed with a ".5" half when k is odd, d only when
// known.
std::string params_string(const FieldSpec& fs, size_t n, size_t k,
                          std::optional<unsigned> d);

// One report per tested code. Reports are deterministic for a fixed input
// except for the timing fields. The json variant is a single line.
std::string verdict_report_text(const AdditiveCode& c,
                                const LinearityVerdict& v,
                                const std::string& witness_path);
std::string verdict_report_json(const AdditiveCode& c,
                                const LinearityVerdict& v,
                                const std::string& witness_path);

enum class RowStatus { Pass, Fail, Skipped, Budget };
const char* row_status_name(RowStatus s);

struct TableRowResult {
  std::string name;
  RowStatus status = RowStatus::Skipped;
  std::string detail;  // mismatch description or skip reason
  std::optional<uint64_t> digest;
  std::optional<size_t> n, k;
  std::optional<unsigned> d;
  std::optional<std::string> verdict;
  std::optional<std::string> reason;
  std::optional<size_t> nullity;
  std::optional<size_t> raw_nullity;
  std::optional<size_t> rank1;
  std::optional<bool> acd, lcd;
};

struct TableResult {
  std::string table;
  std::vector<TableRowResult> rows;
  bool any_fail() const;
};

// Runs the pipeline for every manifest row with available data and checks
// each expectation. Rows without data come back Skipped, budget overruns
// Budget; neither counts as a failure.
TableResult verify_table(const Manifest& m, uint64_t distance_budget,
                         uint64_t search_budget);

std::string table_report_text(const TableResult& r);
std::string table_report_json(const TableResult& r);

// rendering of a witness re-verification outcome
std::string witness_check_text(const WitnessCheck& c);
std::string witness_check_json(const WitnessCheck& c);

}  // namespace addlin
