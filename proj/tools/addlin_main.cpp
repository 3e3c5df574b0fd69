// command line front end; talks to the library through the C interface only
#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <string>

#include "CLI11.hpp"
#include "addlin.h"

namespace {

// exit codes: the test subcommand returns its verdict (0 strictly additive,
// 1 equivalent, 2 undecided) and verify-table/verify-witness return 1 on a
// mismatch, so errors start above 2: 64 usage, 65 runtime.
constexpr int kExitUsage = 64;
constexpr int kExitError = 65;

int fail_exit(int rc) {
  std::fprintf(stderr, "error: %s (%s)\n", addlin_last_error(),
               addlin_status_name(rc));
  return kExitError;
}

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string digest_hex(uint64_t d) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016" PRIx64, d);
  return buf;
}

struct CodeHandle {
  addlin_code* p = nullptr;
  ~CodeHandle() { addlin_code_free(p); }
};
struct VerdictHandle {
  addlin_verdict* p = nullptr;
  ~VerdictHandle() { addlin_verdict_free(p); }
};
struct LinearHandle {
  addlin_linear* p = nullptr;
  ~LinearHandle() { addlin_linear_free(p); }
};
struct StringHandle {
  char* p = nullptr;
  ~StringHandle() { addlin_string_free(p); }
};

int cmd_test(const std::string& input, const std::string& witness_out,
             bool allow_rd, uint64_t budget, bool json) {
  CodeHandle code;
  int rc = addlin_code_read(input.c_str(), allow_rd, &code.p);
  if (rc) return fail_exit(rc);
  VerdictHandle v;
  rc = addlin_test(code.p, budget, &v.p);
  if (rc) return fail_exit(rc);

  int has_witness = 0;
  addlin_verdict_has_witness(v.p, &has_witness);
  std::string wpath;
  if (has_witness) {
    wpath = witness_out.empty() ? input + ".witness" : witness_out;
    rc = addlin_verdict_write_witness(v.p, wpath.c_str());
    if (rc) return fail_exit(rc);
  }

  StringHandle rep;
  rc = addlin_verdict_report(v.p, code.p, wpath.empty() ? nullptr : wpath.c_str(),
                             json, &rep.p);
  if (rc) return fail_exit(rc);
  std::fputs(rep.p, stdout);

  int tag = 0;
  addlin_verdict_tag(v.p, &tag);
  return tag;
}

int cmd_qc(const std::string& input, std::string output, bool augment_ones,
           bool do_extend, bool json) {
  CodeHandle code;
  int rc = addlin_qc_build(input.c_str(), augment_ones, do_extend, &code.p);
  if (rc) return fail_exit(rc);
  if (output.empty()) output = input + ".code";
  rc = addlin_code_write(code.p, output.c_str());
  if (rc) return fail_exit(rc);

  size_t n = 0, k = 0;
  uint64_t dig = 0;
  addlin_code_length(code.p, &n);
  addlin_code_dim(code.p, &k);
  addlin_code_digest(code.p, &dig);
  if (json) {
    std::printf("{\"type\":\"qc\",\"digest\":\"%s\",\"n\":%zu,\"k\":%zu,"
                "\"file\":\"%s\"}\n",
                digest_hex(dig).c_str(), n, k, json_escape(output).c_str());
  } else {
    std::printf("n: %zu\nk: %zu\nwrote: %s\n", n, k, output.c_str());
  }
  return 0;
}

int cmd_distance(const std::string& input, bool allow_rd, uint64_t budget,
                 bool json) {
  CodeHandle code;
  int rc = addlin_code_read(input.c_str(), allow_rd, &code.p);
  if (rc) return fail_exit(rc);
  unsigned d = 0;
  rc = addlin_code_distance(code.p, budget, &d);
  if (rc) return fail_exit(rc);

  StringHandle params;
  rc = addlin_code_params_string(code.p, 1, d, &params.p);
  if (rc) return fail_exit(rc);
  size_t n = 0, k = 0;
  uint64_t dig = 0;
  addlin_code_length(code.p, &n);
  addlin_code_dim(code.p, &k);
  addlin_code_digest(code.p, &dig);
  if (json) {
    std::printf("{\"type\":\"distance\",\"digest\":\"%s\",\"n\":%zu,"
                "\"k\":%zu,\"params\":\"%s\",\"d\":%u}\n",
                digest_hex(dig).c_str(), n, k, params.p, d);
  } else {
    std::printf("digest: %s\nparams: %s\nd: %u\n", digest_hex(dig).c_str(),
                params.p, d);
  }
  return 0;
}

int cmd_hull(const std::string& input, bool allow_rd, bool json) {
  CodeHandle code;
  int rc = addlin_code_read(input.c_str(), allow_rd, &code.p);
  if (rc) return fail_exit(rc);
  size_t h = 0;
  rc = addlin_code_hull_dim(code.p, &h);
  if (rc) return fail_exit(rc);
  int acd = 0;
  rc = addlin_code_is_acd(code.p, &acd);
  if (rc) return fail_exit(rc);

  size_t n = 0, k = 0;
  uint64_t dig = 0;
  addlin_code_length(code.p, &n);
  addlin_code_dim(code.p, &k);
  addlin_code_digest(code.p, &dig);
  if (json) {
    std::printf("{\"type\":\"hull\",\"digest\":\"%s\",\"n\":%zu,\"k\":%zu,"
                "\"hull\":%zu,\"acd\":%s}\n",
                digest_hex(dig).c_str(), n, k, h, acd ? "true" : "false");
  } else {
    std::printf("digest: %s\nhull: %zu\nacd: %s\n", digest_hex(dig).c_str(),
                h, acd ? "true" : "false");
  }
  return 0;
}

int cmd_lcd(const std::string& input, bool json) {
  LinearHandle lin;
  int rc = addlin_linear_read(input.c_str(), &lin.p);
  if (rc) return fail_exit(rc);
  int lcd = 0;
  rc = addlin_linear_is_hermitian_lcd(lin.p, &lcd);
  if (rc) return fail_exit(rc);
  size_t n = 0, k = 0;
  addlin_linear_length(lin.p, &n);
  addlin_linear_dim(lin.p, &k);
  if (json) {
    std::printf("{\"type\":\"lcd\",\"n\":%zu,\"k\":%zu,\"lcd\":%s}\n", n, k,
                lcd ? "true" : "false");
  } else {
    std::printf("n: %zu\nk: %zu\nhermitian_lcd: %s\n", n, k,
                lcd ? "true" : "false");
  }
  return 0;
}

int cmd_verify_witness(const std::string& code_path,
                       const std::string& witness_path, bool allow_rd,
                       bool json) {
  CodeHandle code;
  int rc = addlin_code_read(code_path.c_str(), allow_rd, &code.p);
  if (rc) return fail_exit(rc);
  int ok = 0;
  StringHandle rep;
  rc = addlin_verify_witness(code.p, witness_path.c_str(), json, &ok, &rep.p);
  if (rc) return fail_exit(rc);
  std::fputs(rep.p, stdout);
  return ok ? 0 : 1;
}

int cmd_verify_table(const std::string& manifest, uint64_t distance_budget,
                     uint64_t search_budget, bool json) {
  int any_fail = 0;
  StringHandle rep;
  int rc = addlin_verify_table(manifest.c_str(), distance_budget,
                               search_budget, json, &any_fail, &rep.p);
  if (rc) return fail_exit(rc);
  std::fputs(rep.p, stdout);
  return any_fail ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"additive code toolkit: equivalence to linear codes, "
               "quasi-cyclic construction, distances, hulls and batch "
               "verification"};
  app.require_subcommand(1);

  std::string format = "text";
  uint64_t budget = 0;
  uint64_t seed = 0;
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json-lines"}))
      ->capture_default_str();
  app.add_option("--budget", budget,
                 "search/enumeration budget, 0 means the default");
  app.add_option("--seed", seed, "reserved for randomized subcommands");

  auto* t = app.add_subcommand(
      "test", "decide whether the code is equivalent to a linear code");
  std::string t_input, t_witness;
  bool t_allow = false;
  t->add_option("input", t_input, "additive code file")->required();
  t->add_option("--witness-out", t_witness,
                "witness path (default <input>.witness)");
  t->add_flag("--allow-rank-deficient", t_allow,
              "reduce a rank deficient generator instead of rejecting it");

  auto* q = app.add_subcommand("qc",
                               "build an additive code from a quasi-cyclic "
                               "spec and write the code file");
  std::string q_input, q_output;
  bool q_extend = false, q_augment = false;
  q->add_option("input", q_input, "qc spec file")->required();
  q->add_option("-o,--output", q_output, "output path (default <input>.code)");
  q->add_flag("--augment-ones", q_augment,
              "augment with the all-ones vector and w times it");
  q->add_flag("--extend", q_extend,
              "append the coordinate sum (applied after --augment-ones)");

  auto* d = app.add_subcommand("distance", "minimum distance by enumeration");
  std::string d_input;
  bool d_allow = false;
  d->add_option("input", d_input, "additive code file")->required();
  d->add_flag("--allow-rank-deficient", d_allow);

  auto* h = app.add_subcommand("hull", "hull dimension and the ACD check");
  std::string h_input;
  bool h_allow = false;
  h->add_option("input", h_input, "additive code file")->required();
  h->add_flag("--allow-rank-deficient", h_allow);

  auto* l = app.add_subcommand("lcd", "Hermitian LCD check for a linear code");
  std::string l_input;
  l->add_option("input", l_input, "linear code file over the extension")
      ->required();

  auto* vw = app.add_subcommand("verify-witness",
                                "re-verify a witness file against a code");
  std::string vw_code, vw_witness;
  bool vw_allow = false;
  vw->add_option("code", vw_code, "additive code file")->required();
  vw->add_option("witness", vw_witness, "witness file")->required();
  vw->add_flag("--allow-rank-deficient", vw_allow);

  auto* vt = app.add_subcommand("verify-table",
                                "run a verification manifest row by row");
  std::string vt_manifest;
  uint64_t vt_distance_budget = 0;
  vt->add_option("manifest", vt_manifest, "manifest file")->required();
  vt->add_option("--distance-budget", vt_distance_budget,
                 "distance enumeration budget, 0 means the default");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  const bool json = format == "json-lines";
  (void)seed;

  if (t->parsed()) return cmd_test(t_input, t_witness, t_allow, budget, json);
  if (q->parsed()) return cmd_qc(q_input, q_output, q_augment, q_extend, json);
  if (d->parsed()) return cmd_distance(d_input, d_allow, budget, json);
  if (h->parsed()) return cmd_hull(h_input, h_allow, json);
  if (l->parsed()) return cmd_lcd(l_input, json);
  if (vw->parsed())
    return cmd_verify_witness(vw_code, vw_witness, vw_allow, json);
  if (vt->parsed())
    return cmd_verify_table(vt_manifest, vt_distance_budget, budget, json);
  return kExitUsage;
}
