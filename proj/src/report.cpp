#include "addlin/report.hpp"

#include <cinttypes>
#include <cstdio>

#include "addlin/qc.hpp"
#include "json.hpp"

namespace addlin {

namespace {

using nlohmann::json;

std::string hex_digest(uint64_t d) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016" PRIx64, d);
  return buf;
}

std::string half_string(size_t k) {
  std::string s = std::to_string(k / 2);
  if (k % 2) s += ".5";
  return s;
}

std::string join_positions(const std::vector<size_t>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(v[i]);
  }
  return s.empty() ? "-" : s;
}

}  // namespace

std::string params_string(const FieldSpec& fs, size_t n, size_t k,
                          std::optional<unsigned> d) {
  std::string s = "[" + std::to_string(n) + "," + half_string(k);
  if (d) s += "," + std::to_string(*d);
  return s + "]_" + std::to_string(fs.q()) + "^2";
}

std::string verdict_report_text(const AdditiveCode& c,
                                const LinearityVerdict& v,
                                const std::string& witness_path) {
  std::string s;
  s += "digest: " + hex_digest(code_digest(c)) + "\n";
  s += "field: " + c.spec().header() + "\n";
  s += "params: " + params_string(c.spec(), c.length(), c.dim(), {}) + "\n";
  s += "punctured: " + join_positions(v.punctured) + "\n";
  s += "rank1: " +
       (v.rank_one_pos ? std::to_string(*v.rank_one_pos) : std::string("-")) +
       "\n";
  s += "S: ";
  if (v.s_rows)
    s += std::to_string(*v.s_rows) + "x" + std::to_string(*v.s_cols);
  else
    s += "-";
  s += "\n";
  s += "nullity: " +
       (v.null_dim ? std::to_string(*v.null_dim) : std::string("-")) + "\n";
  s += "candidates: " + std::to_string(v.candidates_tested) + "\n";
  s += "verdict: " + std::string(verdict_name(v.tag)) + "\n";
  s += "reason: " +
       (v.reason ? std::string(reason_name(*v.reason)) : std::string("-")) +
       "\n";
  s += "witness: " + (witness_path.empty() ? "-" : witness_path) + "\n";
  char t[128];
  std::snprintf(t, sizeof t,
                "time_ms: rank=%.2f s=%.2f nullity=%.2f search=%.2f",
                v.ms_rank, v.ms_s, v.ms_nullity, v.ms_search);
  s += std::string(t) + "\n";
  return s;
}

std::string verdict_report_json(const AdditiveCode& c,
                                const LinearityVerdict& v,
                                const std::string& witness_path) {
  json j;
  j["type"] = "verdict";
  j["digest"] = hex_digest(code_digest(c));
  j["q"] = c.spec().q();
  j["c0"] = c.spec().c0();
  j["c1"] = c.spec().c1();
  j["n"] = c.length();
  j["k"] = c.dim();
  j["params"] = params_string(c.spec(), c.length(), c.dim(), {});
  j["punctured"] = v.punctured;
  if (v.rank_one_pos) j["rank1"] = *v.rank_one_pos; else j["rank1"] = nullptr;
  if (v.s_rows) {
    j["s_rows"] = *v.s_rows;
    j["s_cols"] = *v.s_cols;
  } else {
    j["s_rows"] = nullptr;
    j["s_cols"] = nullptr;
  }
  if (v.null_dim) j["nullity"] = *v.null_dim; else j["nullity"] = nullptr;
  j["candidates"] = v.candidates_tested;
  j["budget_exceeded"] = v.budget_exceeded;
  j["verdict"] = verdict_name(v.tag);
  if (v.reason) j["reason"] = reason_name(*v.reason); else j["reason"] = nullptr;
  if (witness_path.empty()) j["witness"] = nullptr; else j["witness"] = witness_path;
  j["time_ms"] = {{"rank", v.ms_rank},
                  {"s", v.ms_s},
                  {"nullity", v.ms_nullity},
                  {"search", v.ms_search}};
  return j.dump() + "\n";
}

const char* row_status_name(RowStatus s) {
  switch (s) {
    case RowStatus::Pass: return "PASS";
    case RowStatus::Fail: return "FAIL";
    case RowStatus::Skipped: return "SKIPPED(no-data)";
    case RowStatus::Budget: return "BUDGET-EXCEEDED";
  }
  return "?";
}

bool TableResult::any_fail() const {
  for (const auto& r : rows)
    if (r.status == RowStatus::Fail) return true;
  return false;
}

namespace {

void append_mismatch(std::string& detail, const std::string& msg) {
  if (!detail.empty()) detail += "; ";
  detail += msg;
}

void run_row(const Manifest& m, const ManifestRow& row, TableRowResult& out,
             uint64_t distance_budget, uint64_t search_budget) {
  if (row.kind == SourceKind::None) {
    out.status = RowStatus::Skipped;
    out.detail = "no generator data";
    return;
  }

  AdditiveCode code = [&] {
    if (row.kind == SourceKind::QcFile) {
      QcFile f = read_qc_file(row.path);
      if (!f.spec.same(m.spec))
        fail(Status::FieldMismatch,
             row.path + ": field differs from the manifest header");
      return build_qc_additive(f.spec, f.qc);
    }
    return read_code_file(row.path);
  }();
  if (!code.spec().same(m.spec))
    fail(Status::FieldMismatch,
         row.path + ": field differs from the manifest header");
  if (row.apply_augment_ones) code = augment_all_ones(code);
  if (row.apply_extend) code = extend(code);

  out.digest = code_digest(code);
  out.n = code.length();
  out.k = code.dim();

  std::string detail;
  bool budget_hit = false;

  if (row.par_n && *row.par_n != code.length())
    append_mismatch(detail, "expected n=" + std::to_string(*row.par_n) +
                                ", got " + std::to_string(code.length()));
  if (row.par_k && *row.par_k != code.dim())
    append_mismatch(detail, "expected k=" + std::to_string(*row.par_k) +
                                ", got " + std::to_string(code.dim()));

  if (row.par_d) {
    try {
      unsigned d = min_distance(code, distance_budget);
      out.d = d;
      if (d != *row.par_d)
        append_mismatch(detail, "expected d=" + std::to_string(*row.par_d) +
                                    ", got " + std::to_string(d));
    } catch (const Error& e) {
      if (e.status() != Status::BudgetExceeded) throw;
      budget_hit = true;
    }
  }

  LinearityVerdict v = test_linearity(code, search_budget);
  out.verdict = verdict_name(v.tag);
  if (v.reason) out.reason = reason_name(*v.reason);
  if (v.null_dim) out.nullity = *v.null_dim;
  if (v.rank_one_pos) out.rank1 = *v.rank_one_pos;

  if (v.tag == VerdictTag::Undecided) {
    budget_hit = true;
  } else {
    const char* want = row.expect == "strict" ? "StrictlyAdditive"
                                              : "EquivalentToLinear";
    if (*out.verdict != want)
      append_mismatch(detail, "expected verdict " + std::string(want) +
                                  ", got " + *out.verdict);
  }

  if (row.nullity) {
    if (!v.null_dim)
      append_mismatch(detail,
                      "expected nullity " + std::to_string(*row.nullity) +
                          " but the pipeline stopped before computing it");
    else if (*v.null_dim != *row.nullity)
      append_mismatch(detail, "expected nullity " +
                                  std::to_string(*row.nullity) + ", got " +
                                  std::to_string(*v.null_dim));
  }

  if (row.raw_nullity) {
    GfMatrix s = build_s_raw(code);
    size_t raw = s.cols() - rank(s);
    out.raw_nullity = raw;
    if (raw != *row.raw_nullity)
      append_mismatch(detail, "expected raw nullity " +
                                  std::to_string(*row.raw_nullity) + ", got " +
                                  std::to_string(raw));
  }

  if (row.rank1) {
    if (!v.rank_one_pos)
      append_mismatch(detail, "expected a rank 1 block at " +
                                  std::to_string(*row.rank1) +
                                  " but none was found");
    else if (*v.rank_one_pos != *row.rank1)
      append_mismatch(detail, "expected rank 1 position " +
                                  std::to_string(*row.rank1) + ", got " +
                                  std::to_string(*v.rank_one_pos));
  }

  if (row.acd) {
    bool got = is_acd(code);
    out.acd = got;
    if (got != *row.acd)
      append_mismatch(detail, std::string("expected acd=") +
                                  (*row.acd ? "true" : "false") + ", got " +
                                  (got ? "true" : "false"));
  }

  if (row.lcd) {
    if (!v.witness) {
      append_mismatch(detail, "lcd expectation needs a witness");
    } else {
      bool got = hermitian_lcd(v.witness->linear);
      out.lcd = got;
      if (got != *row.lcd)
        append_mismatch(detail, std::string("expected lcd=") +
                                    (*row.lcd ? "true" : "false") + ", got " +
                                    (got ? "true" : "false"));
    }
  }

  out.detail = detail;
  if (!detail.empty())
    out.status = RowStatus::Fail;
  else if (budget_hit)
    out.status = RowStatus::Budget;
  else
    out.status = RowStatus::Pass;
}

}  // namespace

TableResult verify_table(const Manifest& m, uint64_t distance_budget,
                         uint64_t search_budget) {
  TableResult res;
  res.table = m.name;
  for (const ManifestRow& row : m.rows) {
    TableRowResult out;
    out.name = row.name;
    try {
      run_row(m, row, out, distance_budget, search_budget);
    } catch (const Error& e) {
      out.status = RowStatus::Fail;
      out.detail = e.what();
    }
    res.rows.push_back(std::move(out));
  }
  return res;
}

std::string table_report_text(const TableResult& r) {
  std::string s = "table: " + r.table + "\n";
  size_t pass = 0, failed = 0, skipped = 0, budget = 0;
  for (const auto& row : r.rows) {
    s += std::string(row_status_name(row.status)) + " " + row.name;
    std::string obs;
    if (row.verdict) obs += " verdict=" + *row.verdict;
    if (row.reason) obs += " reason=" + *row.reason;
    if (row.nullity) obs += " nullity=" + std::to_string(*row.nullity);
    if (row.raw_nullity)
      obs += " rawnullity=" + std::to_string(*row.raw_nullity);
    if (row.rank1) obs += " rank1=" + std::to_string(*row.rank1);
    if (row.d) obs += " d=" + std::to_string(*row.d);
    if (row.acd) obs += std::string(" acd=") + (*row.acd ? "true" : "false");
    if (row.lcd) obs += std::string(" lcd=") + (*row.lcd ? "true" : "false");
    s += obs;
    if (!row.detail.empty()) s += " [" + row.detail + "]";
    s += "\n";
    switch (row.status) {
      case RowStatus::Pass: ++pass; break;
      case RowStatus::Fail: ++failed; break;
      case RowStatus::Skipped: ++skipped; break;
      case RowStatus::Budget: ++budget; break;
    }
  }
  s += "summary: " + std::to_string(pass) + " pass, " +
       std::to_string(failed) + " fail, " + std::to_string(skipped) +
       " skipped, " + std::to_string(budget) + " over budget\n";
  return s;
}

std::string table_report_json(const TableResult& r) {
  std::string s;
  size_t pass = 0, failed = 0, skipped = 0, budget = 0;
  for (const auto& row : r.rows) {
    json j;
    j["type"] = "table-row";
    j["table"] = r.table;
    j["name"] = row.name;
    j["status"] = row_status_name(row.status);
    j["detail"] = row.detail;
    if (row.digest) j["digest"] = hex_digest(*row.digest);
    if (row.n) j["n"] = *row.n;
    if (row.k) j["k"] = *row.k;
    if (row.d) j["d"] = *row.d;
    if (row.verdict) j["verdict"] = *row.verdict;
    if (row.reason) j["reason"] = *row.reason;
    if (row.nullity) j["nullity"] = *row.nullity;
    if (row.raw_nullity) j["rawnullity"] = *row.raw_nullity;
    if (row.rank1) j["rank1"] = *row.rank1;
    if (row.acd) j["acd"] = *row.acd;
    if (row.lcd) j["lcd"] = *row.lcd;
    s += j.dump() + "\n";
    switch (row.status) {
      case RowStatus::Pass: ++pass; break;
      case RowStatus::Fail: ++failed; break;
      case RowStatus::Skipped: ++skipped; break;
      case RowStatus::Budget: ++budget; break;
    }
  }
  json sum;
  sum["type"] = "table-summary";
  sum["table"] = r.table;
  sum["pass"] = pass;
  sum["fail"] = failed;
  sum["skipped"] = skipped;
  sum["budget"] = budget;
  s += sum.dump() + "\n";
  return s;
}

std::string witness_check_text(const WitnessCheck& c) {
  auto b = [](bool v) { return v ? "true" : "false"; };
  std::string s;
  s += std::string("blocks_invertible: ") + b(c.blocks_invertible) + "\n";
  s += std::string("conjugation: ") + b(c.conjugation) + "\n";
  s += std::string("quadratic: ") + b(c.quadratic) + "\n";
  s += std::string("row_space: ") + b(c.row_space) + "\n";
  s += std::string("ok: ") + b(c.ok()) + "\n";
  return s;
}

std::string witness_check_json(const WitnessCheck& c) {
  json j;
  j["type"] = "witness-check";
  j["blocks_invertible"] = c.blocks_invertible;
  j["conjugation"] = c.conjugation;
  j["quadratic"] = c.quadratic;
  j["row_space"] = c.row_space;
  j["ok"] = c.ok();
  return j.dump() + "\n";
}

}  // namespace addlin
