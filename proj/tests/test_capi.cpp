// exercises the shared library through the C interface alone
#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>

#include "addlin.h"
#include "doctest.h"

namespace {

std::string data_path(const std::string& name) {
  return std::string(ADDLIN_DATA_DIR) + "/" + name;
}

std::string tmp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("addlin_capi_" + name))
      .string();
}

std::string write_tmp(const std::string& name, const std::string& text) {
  std::string p = tmp_path(name);
  std::ofstream out(p);
  out << text;
  return p;
}

struct Code {
  addlin_code* p = nullptr;
  ~Code() { addlin_code_free(p); }
};
struct Verdict {
  addlin_verdict* p = nullptr;
  ~Verdict() { addlin_verdict_free(p); }
};
struct Linear {
  addlin_linear* p = nullptr;
  ~Linear() { addlin_linear_free(p); }
};

}  // namespace

TEST_CASE("version and status names") {
  CHECK(addlin_version() != nullptr);
  CHECK(std::string(addlin_status_name(ADDLIN_OK)) == "Ok");
  CHECK(std::string(addlin_status_name(ADDLIN_E_PARSE)) == "ParseError");
  CHECK(std::string(addlin_status_name(999)) == "Unknown");
}

TEST_CASE("null arguments are rejected with a message") {
  CHECK(addlin_code_read(nullptr, 0, nullptr) == ADDLIN_E_INVALID_ARGUMENT);
  CHECK(std::strlen(addlin_last_error()) > 0);
  size_t n = 0;
  CHECK(addlin_code_length(nullptr, &n) == ADDLIN_E_INVALID_ARGUMENT);
  CHECK(addlin_test(nullptr, 0, nullptr) == ADDLIN_E_INVALID_ARGUMENT);
}

TEST_CASE("io and parse failures map to their status codes") {
  addlin_code* c = nullptr;
  CHECK(addlin_code_read("/nonexistent/x.code", 0, &c) == ADDLIN_E_IO);
  CHECK(std::string(addlin_last_error()).find("x.code") != std::string::npos);

  std::string bad = write_tmp("bad.code", "q=2 c0=1 c1=1\nn=1 k=1\n1\n");
  CHECK(addlin_code_read(bad.c_str(), 0, &c) == ADDLIN_E_PARSE);
  CHECK(std::string(addlin_last_error()).find(":3:1:") != std::string::npos);
  CHECK(c == nullptr);
}

TEST_CASE("qc build, write, read and digest round trip") {
  Code c;
  REQUIRE(addlin_qc_build(data_path("qc_22_10_9.qc").c_str(), 0, 0, &c.p) ==
          ADDLIN_OK);
  size_t n = 0, k = 0;
  uint64_t dig = 0;
  CHECK(addlin_code_length(c.p, &n) == ADDLIN_OK);
  CHECK(addlin_code_dim(c.p, &k) == ADDLIN_OK);
  CHECK(addlin_code_digest(c.p, &dig) == ADDLIN_OK);
  CHECK(n == 22);
  CHECK(k == 20);
  CHECK(dig == 0x02f04dba978ac935ull);

  std::string out = tmp_path("ex42.code");
  REQUIRE(addlin_code_write(c.p, out.c_str()) == ADDLIN_OK);
  Code back;
  REQUIRE(addlin_code_read(out.c_str(), 0, &back.p) == ADDLIN_OK);
  uint64_t dig2 = 0;
  CHECK(addlin_code_digest(back.p, &dig2) == ADDLIN_OK);
  CHECK(dig2 == dig);
}

TEST_CASE("rank deficient reads honor the flag") {
  std::string p = write_tmp("dep.code",
                            "q=2 c0=1 c1=1\nn=2 k=2\n1 0 1 0\n1 0 1 0\n");
  addlin_code* raw = nullptr;
  CHECK(addlin_code_read(p.c_str(), 0, &raw) == ADDLIN_E_INVALID_ARGUMENT);
  Code c;
  REQUIRE(addlin_code_read(p.c_str(), 1, &c.p) == ADDLIN_OK);
  size_t k = 0;
  CHECK(addlin_code_dim(c.p, &k) == ADDLIN_OK);
  CHECK(k == 1);
}

TEST_CASE("distance, params, hull and acd") {
  Code c;
  REQUIRE(addlin_qc_build(data_path("qc_22_10_9.qc").c_str(), 0, 0, &c.p) ==
          ADDLIN_OK);
  unsigned d = 0;
  CHECK(addlin_code_distance(c.p, 0, &d) == ADDLIN_OK);
  CHECK(d == 9);
  char* params = nullptr;
  REQUIRE(addlin_code_params_string(c.p, 1, d, &params) == ADDLIN_OK);
  CHECK(std::string(params) == "[22,10,9]_2^2");
  addlin_string_free(params);

  size_t hull = 99;
  CHECK(addlin_code_hull_dim(c.p, &hull) == ADDLIN_OK);
  CHECK(hull == 0);
  int acd = 0;
  CHECK(addlin_code_is_acd(c.p, &acd) == ADDLIN_OK);
  CHECK(acd == 1);

  // an undersized budget refuses the 2^20 codeword sweep
  CHECK(addlin_code_distance(c.p, 100, &d) == ADDLIN_E_BUDGET_EXCEEDED);
}

TEST_CASE("test verdict, witness file and reverification") {
  Code c;
  REQUIRE(addlin_qc_build(data_path("qc_22_10_9.qc").c_str(), 0, 0, &c.p) ==
          ADDLIN_OK);
  Verdict v;
  REQUIRE(addlin_test(c.p, 0, &v.p) == ADDLIN_OK);
  int tag = -1, has = 0;
  CHECK(addlin_verdict_tag(v.p, &tag) == ADDLIN_OK);
  CHECK(tag == ADDLIN_VERDICT_EQUIVALENT_TO_LINEAR);
  CHECK(addlin_verdict_has_witness(v.p, &has) == ADDLIN_OK);
  CHECK(has == 1);
  int lcd = 0;
  CHECK(addlin_verdict_linear_is_hermitian_lcd(v.p, &lcd) == ADDLIN_OK);
  CHECK(lcd == 1);

  std::string wpath = tmp_path("ex42.witness");
  REQUIRE(addlin_verdict_write_witness(v.p, wpath.c_str()) == ADDLIN_OK);

  char* rep = nullptr;
  REQUIRE(addlin_verdict_report(v.p, c.p, wpath.c_str(), 0, &rep) ==
          ADDLIN_OK);
  std::string text = rep;
  addlin_string_free(rep);
  CHECK(text.find("verdict: EquivalentToLinear") != std::string::npos);
  CHECK(text.find("nullity: 2") != std::string::npos);

  rep = nullptr;
  REQUIRE(addlin_verdict_report(v.p, c.p, wpath.c_str(), 1, &rep) ==
          ADDLIN_OK);
  std::string json = rep;
  addlin_string_free(rep);
  CHECK(json.find("\"verdict\":\"EquivalentToLinear\"") != std::string::npos);

  int ok = 0;
  rep = nullptr;
  REQUIRE(addlin_verify_witness(c.p, wpath.c_str(), 0, &ok, &rep) ==
          ADDLIN_OK);
  CHECK(ok == 1);
  CHECK(std::string(rep).find("ok: true") != std::string::npos);
  addlin_string_free(rep);

  // a tampered witness still reports, with ok = 0
  std::ifstream in(wpath);
  std::string whole((std::istreambuf_iterator<char>(in)),
                    std::istreambuf_iterator<char>());
  in.close();
  size_t rpos = whole.find("R\n");
  REQUIRE(rpos != std::string::npos);
  whole[rpos + 2] = whole[rpos + 2] == '0' ? '1' : '0';
  std::string tampered = write_tmp("tampered.witness", whole);
  rep = nullptr;
  REQUIRE(addlin_verify_witness(c.p, tampered.c_str(), 0, &ok, &rep) ==
          ADDLIN_OK);
  CHECK(ok == 0);
  addlin_string_free(rep);
}

TEST_CASE("a tiny budget leaves the verdict undecided") {
  Code c;
  REQUIRE(addlin_qc_build(data_path("qc_22_10_9.qc").c_str(), 0, 0, &c.p) ==
          ADDLIN_OK);
  Verdict v;
  REQUIRE(addlin_test(c.p, 1, &v.p) == ADDLIN_OK);
  int tag = -1;
  CHECK(addlin_verdict_tag(v.p, &tag) == ADDLIN_OK);
  CHECK(tag == ADDLIN_VERDICT_UNDECIDED);
  int has = 1;
  CHECK(addlin_verdict_has_witness(v.p, &has) == ADDLIN_OK);
  CHECK(has == 0);
  std::string wpath = tmp_path("none.witness");
  CHECK(addlin_verdict_write_witness(v.p, wpath.c_str()) ==
        ADDLIN_E_INVALID_ARGUMENT);
}

TEST_CASE("qc transforms through the C interface") {
  Code plain, ext;
  REQUIRE(addlin_qc_build(data_path("qc_63_5_45.qc").c_str(), 0, 0, &plain.p) ==
          ADDLIN_OK);
  REQUIRE(addlin_qc_build(data_path("qc_63_5_45.qc").c_str(), 0, 1, &ext.p) ==
          ADDLIN_OK);
  size_t n1 = 0, n2 = 0, k1 = 0, k2 = 0;
  addlin_code_length(plain.p, &n1);
  addlin_code_length(ext.p, &n2);
  addlin_code_dim(plain.p, &k1);
  addlin_code_dim(ext.p, &k2);
  CHECK(n1 == 63);
  CHECK(n2 == 64);
  CHECK(k1 == k2);

  Verdict v;
  REQUIRE(addlin_test(plain.p, 0, &v.p) == ADDLIN_OK);
  int tag = -1;
  addlin_verdict_tag(v.p, &tag);
  CHECK(tag == ADDLIN_VERDICT_STRICTLY_ADDITIVE);
}

TEST_CASE("linear files through the C interface") {
  Linear l;
  REQUIRE(addlin_linear_read(data_path("linear_22_10_9.f4").c_str(),
                             &l.p) == ADDLIN_OK);
  size_t n = 0, k = 0;
  CHECK(addlin_linear_length(l.p, &n) == ADDLIN_OK);
  CHECK(addlin_linear_dim(l.p, &k) == ADDLIN_OK);
  CHECK(n == 22);
  CHECK(k == 10);
  int lcd = 0;
  CHECK(addlin_linear_is_hermitian_lcd(l.p, &lcd) == ADDLIN_OK);
  CHECK(lcd == 1);
}

TEST_CASE("verify table through the C interface") {
  int any_fail = 1;
  char* rep = nullptr;
  REQUIRE(addlin_verify_table(data_path("tables/table2.manifest").c_str(), 0,
                              0, 0, &any_fail, &rep) == ADDLIN_OK);
  std::string text = rep;
  addlin_string_free(rep);
  CHECK(any_fail == 0);
  CHECK(text.find("PASS 22-10-9") != std::string::npos);
  CHECK(text.find("SKIPPED(no-data) 27-10-12") != std::string::npos);

  // a manifest contradicting the computation must fail the run
  std::string qc = data_path("qc_22_10_9.qc");
  std::string bad = write_tmp("bad.manifest",
                              "q=2 c0=1 c1=1\n"
                              "table name=bad\n"
                              "row name=wrong source=qc:" +
                                  qc + " expect=strict nullity=2\n");
  rep = nullptr;
  REQUIRE(addlin_verify_table(bad.c_str(), 0, 0, 0, &any_fail, &rep) ==
          ADDLIN_OK);
  std::string text2 = rep;
  addlin_string_free(rep);
  CHECK(any_fail == 1);
  CHECK(text2.find("FAIL wrong") != std::string::npos);
}
