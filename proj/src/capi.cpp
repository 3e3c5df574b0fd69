#include "addlin.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "addlin/equiv.hpp"
#include "addlin/io.hpp"
#include "addlin/qc.hpp"
#include "addlin/report.hpp"

struct addlin_code {
  addlin::AdditiveCode c;
};
struct addlin_verdict {
  addlin::LinearityVerdict v;
};
struct addlin_linear {
  addlin::LinearCodeExt l;
};

namespace {

thread_local std::string t_last_error;

int status_code(addlin::Status s) {
  using addlin::Status;
  switch (s) {
    case Status::Ok: return ADDLIN_OK;
    case Status::InvalidArgument: return ADDLIN_E_INVALID_ARGUMENT;
    case Status::NotPrimePower: return ADDLIN_E_NOT_PRIME_POWER;
    case Status::ReduciblePolynomial: return ADDLIN_E_REDUCIBLE_POLYNOMIAL;
    case Status::ZeroConstantTerm: return ADDLIN_E_ZERO_CONSTANT_TERM;
    case Status::FieldMismatch: return ADDLIN_E_FIELD_MISMATCH;
    case Status::DimensionMismatch: return ADDLIN_E_DIMENSION_MISMATCH;
    case Status::Singular: return ADDLIN_E_SINGULAR;
    case Status::RankDeficientBlock: return ADDLIN_E_RANK_DEFICIENT_BLOCK;
    case Status::BudgetExceeded: return ADDLIN_E_BUDGET_EXCEEDED;
    case Status::ZeroGenerator: return ADDLIN_E_ZERO_GENERATOR;
    case Status::PositionOutOfRange: return ADDLIN_E_POSITION_OUT_OF_RANGE;
    case Status::InstanceTooLarge: return ADDLIN_E_INSTANCE_TOO_LARGE;
    case Status::ModulusMismatch: return ADDLIN_E_MODULUS_MISMATCH;
    case Status::AllCoordinatesZero: return ADDLIN_E_ALL_COORDINATES_ZERO;
    case Status::ParseError: return ADDLIN_E_PARSE;
    case Status::IoError: return ADDLIN_E_IO;
    case Status::Internal: return ADDLIN_E_INTERNAL;
  }
  return ADDLIN_E_INTERNAL;
}

int arg_error(const char* msg) {
  t_last_error = msg;
  return ADDLIN_E_INVALID_ARGUMENT;
}

template <typename F>
int guard(F&& f) {
  try {
    t_last_error.clear();
    f();
    return ADDLIN_OK;
  } catch (const addlin::Error& e) {
    t_last_error = e.what();
    return status_code(e.status());
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return ADDLIN_E_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) return nullptr;
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

int out_string(const std::string& s, char** out) {
  *out = dup_string(s);
  if (!*out) {
    t_last_error = "out of memory";
    return ADDLIN_E_INTERNAL;
  }
  return ADDLIN_OK;
}

}  // namespace

extern "C" {

const char* addlin_version(void) { return "1.0.0"; }

const char* addlin_status_name(int status) {
  switch (status) {
    case ADDLIN_OK: return "Ok";
    case ADDLIN_E_INVALID_ARGUMENT: return "InvalidArgument";
    case ADDLIN_E_NOT_PRIME_POWER: return "NotPrimePower";
    case ADDLIN_E_REDUCIBLE_POLYNOMIAL: return "ReduciblePolynomial";
    case ADDLIN_E_ZERO_CONSTANT_TERM: return "ZeroConstantTerm";
    case ADDLIN_E_FIELD_MISMATCH: return "FieldMismatch";
    case ADDLIN_E_DIMENSION_MISMATCH: return "DimensionMismatch";
    case ADDLIN_E_SINGULAR: return "Singular";
    case ADDLIN_E_RANK_DEFICIENT_BLOCK: return "RankDeficientBlock";
    case ADDLIN_E_BUDGET_EXCEEDED: return "BudgetExceeded";
    case ADDLIN_E_ZERO_GENERATOR: return "ZeroGenerator";
    case ADDLIN_E_POSITION_OUT_OF_RANGE: return "PositionOutOfRange";
    case ADDLIN_E_INSTANCE_TOO_LARGE: return "InstanceTooLarge";
    case ADDLIN_E_MODULUS_MISMATCH: return "ModulusMismatch";
    case ADDLIN_E_ALL_COORDINATES_ZERO: return "AllCoordinatesZero";
    case ADDLIN_E_PARSE: return "ParseError";
    case ADDLIN_E_IO: return "IoError";
    case ADDLIN_E_INTERNAL: return "Internal";
  }
  return "Unknown";
}

const char* addlin_last_error(void) { return t_last_error.c_str(); }

void addlin_string_free(char* s) { std::free(s); }

int addlin_code_read(const char* path, int allow_rank_deficient,
                     addlin_code** out) {
  if (!path || !out) return arg_error("null argument");
  return guard([&] {
    *out = new addlin_code{
        addlin::read_code_file(path, allow_rank_deficient != 0)};
  });
}

int addlin_code_write(const addlin_code* c, const char* path) {
  if (!c || !path) return arg_error("null argument");
  return guard([&] { addlin::write_code_file(c->c, path); });
}

int addlin_qc_build(const char* spec_path, int augment_ones, int do_extend,
                    addlin_code** out) {
  if (!spec_path || !out) return arg_error("null argument");
  return guard([&] {
    addlin::QcFile f = addlin::read_qc_file(spec_path);
    addlin::AdditiveCode c = addlin::build_qc_additive(f.spec, f.qc);
    if (augment_ones) c = addlin::augment_all_ones(c);
    if (do_extend) c = addlin::extend(c);
    *out = new addlin_code{std::move(c)};
  });
}

void addlin_code_free(addlin_code* c) { delete c; }

int addlin_code_length(const addlin_code* c, size_t* out) {
  if (!c || !out) return arg_error("null argument");
  *out = c->c.length();
  return ADDLIN_OK;
}

int addlin_code_dim(const addlin_code* c, size_t* out) {
  if (!c || !out) return arg_error("null argument");
  *out = c->c.dim();
  return ADDLIN_OK;
}

int addlin_code_digest(const addlin_code* c, uint64_t* out) {
  if (!c || !out) return arg_error("null argument");
  return guard([&] { *out = addlin::code_digest(c->c); });
}

int addlin_code_params_string(const addlin_code* c, int with_d, unsigned d,
                              char** out) {
  if (!c || !out) return arg_error("null argument");
  return guard([&] {
    std::optional<unsigned> dd;
    if (with_d) dd = d;
    std::string s =
        addlin::params_string(c->c.spec(), c->c.length(), c->c.dim(), dd);
    int rc = out_string(s, out);
    if (rc != ADDLIN_OK) addlin::fail(addlin::Status::Internal, t_last_error);
  });
}

int addlin_code_distance(const addlin_code* c, uint64_t budget,
                         unsigned* out) {
  if (!c || !out) return arg_error("null argument");
  return guard([&] {
    *out = budget == 0 ? addlin::min_distance(c->c)
                       : addlin::min_distance(c->c, budget);
  });
}

int addlin_code_hull_dim(const addlin_code* c, size_t* out) {
  if (!c || !out) return arg_error("null argument");
  return guard([&] { *out = addlin::hull(c->c).dim(); });
}

int addlin_code_is_acd(const addlin_code* c, int* out) {
  if (!c || !out) return arg_error("null argument");
  return guard([&] { *out = addlin::is_acd(c->c) ? 1 : 0; });
}

int addlin_test(const addlin_code* c, uint64_t budget, addlin_verdict** out) {
  if (!c || !out) return arg_error("null argument");
  return guard([&] {
    addlin::LinearityVerdict v =
        budget == 0 ? addlin::test_linearity(c->c)
                    : addlin::test_linearity(c->c, budget);
    *out = new addlin_verdict{std::move(v)};
  });
}

void addlin_verdict_free(addlin_verdict* v) { delete v; }

int addlin_verdict_tag(const addlin_verdict* v, int* out) {
  if (!v || !out) return arg_error("null argument");
  switch (v->v.tag) {
    case addlin::VerdictTag::StrictlyAdditive:
      *out = ADDLIN_VERDICT_STRICTLY_ADDITIVE;
      break;
    case addlin::VerdictTag::EquivalentToLinear:
      *out = ADDLIN_VERDICT_EQUIVALENT_TO_LINEAR;
      break;
    case addlin::VerdictTag::Undecided:
      *out = ADDLIN_VERDICT_UNDECIDED;
      break;
  }
  return ADDLIN_OK;
}

int addlin_verdict_has_witness(const addlin_verdict* v, int* out) {
  if (!v || !out) return arg_error("null argument");
  *out = v->v.witness.has_value() ? 1 : 0;
  return ADDLIN_OK;
}

int addlin_verdict_write_witness(const addlin_verdict* v, const char* path) {
  if (!v || !path) return arg_error("null argument");
  return guard([&] {
    if (!v->v.witness)
      addlin::fail(addlin::Status::InvalidArgument,
                   "this verdict carries no witness");
    addlin::write_witness_file(*v->v.witness, path);
  });
}

int addlin_verdict_report(const addlin_verdict* v, const addlin_code* c,
                          const char* witness_path, int as_json, char** out) {
  if (!v || !c || !out) return arg_error("null argument");
  return guard([&] {
    std::string wp = witness_path ? witness_path : "";
    std::string s = as_json ? addlin::verdict_report_json(c->c, v->v, wp)
                            : addlin::verdict_report_text(c->c, v->v, wp);
    int rc = out_string(s, out);
    if (rc != ADDLIN_OK) addlin::fail(addlin::Status::Internal, t_last_error);
  });
}

int addlin_verdict_linear_is_hermitian_lcd(const addlin_verdict* v, int* out) {
  if (!v || !out) return arg_error("null argument");
  return guard([&] {
    if (!v->v.witness)
      addlin::fail(addlin::Status::InvalidArgument,
                   "this verdict carries no witness");
    *out = addlin::hermitian_lcd(v->v.witness->linear) ? 1 : 0;
  });
}

int addlin_linear_read(const char* path, addlin_linear** out) {
  if (!path || !out) return arg_error("null argument");
  return guard([&] { *out = new addlin_linear{addlin::read_linear_file(path)}; });
}

void addlin_linear_free(addlin_linear* l) { delete l; }

int addlin_linear_length(const addlin_linear* l, size_t* out) {
  if (!l || !out) return arg_error("null argument");
  *out = l->l.length();
  return ADDLIN_OK;
}

int addlin_linear_dim(const addlin_linear* l, size_t* out) {
  if (!l || !out) return arg_error("null argument");
  *out = l->l.dim();
  return ADDLIN_OK;
}

int addlin_linear_is_hermitian_lcd(const addlin_linear* l, int* out) {
  if (!l || !out) return arg_error("null argument");
  return guard([&] { *out = addlin::hermitian_lcd(l->l) ? 1 : 0; });
}

int addlin_verify_witness(const addlin_code* c, const char* witness_path,
                          int as_json, int* ok, char** report) {
  if (!c || !witness_path || !ok || !report) return arg_error("null argument");
  return guard([&] {
    addlin::Witness w = addlin::read_witness_file(witness_path);
    addlin::WitnessCheck chk = addlin::verify_witness(c->c, w);
    *ok = chk.ok() ? 1 : 0;
    std::string s = as_json ? addlin::witness_check_json(chk)
                            : addlin::witness_check_text(chk);
    int rc = out_string(s, report);
    if (rc != ADDLIN_OK) addlin::fail(addlin::Status::Internal, t_last_error);
  });
}

int addlin_verify_table(const char* manifest_path, uint64_t distance_budget,
                        uint64_t search_budget, int as_json, int* any_fail,
                        char** report) {
  if (!manifest_path || !any_fail || !report)
    return arg_error("null argument");
  return guard([&] {
    addlin::Manifest m = addlin::read_manifest(manifest_path);
    addlin::TableResult r = addlin::verify_table(
        m,
        distance_budget == 0 ? addlin::kDefaultDistanceBudget
                             : distance_budget,
        search_budget == 0 ? addlin::kDefaultSearchBudget : search_budget);
    *any_fail = r.any_fail() ? 1 : 0;
    std::string s =
        as_json ? addlin::table_report_json(r) : addlin::table_report_text(r);
    int rc = out_string(s, report);
    if (rc != ADDLIN_OK) addlin::fail(addlin::Status::Internal, t_last_error);
  });
}

}  // extern "C"
