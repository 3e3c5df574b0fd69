#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "addlin/equiv.hpp"
#include "addlin/qc.hpp"

namespace addlin {

// File formats (grammar in FORMAT.md). Every format starts with the field
// header line "q=<q> c0=<c0> c1=<c1>"; '#' starts a comment and blank lines
// are skipped. Parse failures throw ParseError with "path:line:col",
// unreadable or unwritable files throw IoError.

// extension element tokens: "0", "1", "w", "w2", ... meaning powers of w.
// Writing an element outside the cycle of w (possible only when the
// modulus is not primitive) is rejected with InvalidArgument.
std::string ext_token(const FieldSpec& fs, ExtElem z);
ExtElem parse_ext_token(const FieldSpec& fs, const std::string& tok);

// additive code file: header, "n=<n> k=<k>", then k rows of 2n base field
// values. The stored matrix must have rank k unless allow_rank_deficient,
// which reduces it to a basis instead.
AdditiveCode read_code_file(const std::string& path,
                            bool allow_rank_deficient = false);
void write_code_file(const AdditiveCode& c, const std::string& path);
// the exact text write_code_file emits; the canonical serialization
std::string code_file_text(const AdditiveCode& c);

// quasi-cyclic spec file: header, "n=<n>", then the three exponent lines
// "g <exponents...>", "f0 <...>", "f1 <...>" in that order.
struct QcFile {
  FieldSpec spec;
  QcSpec qc;
};
QcFile read_qc_file(const std::string& path);

// linear code file over the extension: header, "n=<n> k=<dim>", then dim
// rows of n extension tokens. Rows must be independent.
LinearCodeExt read_linear_file(const std::string& path);
void write_linear_file(const LinearCodeExt& c, const std::string& path);
std::string linear_file_text(const LinearCodeExt& c);

// witness file: header, "n=<n> k=<k>", section "R" with k rows of k
// values, sections "A <i>" for i = 1..n with two rows of two values each,
// then "linear k=<k/2>" with the extension rows.
Witness read_witness_file(const std::string& path);
void write_witness_file(const Witness& w, const std::string& path);
std::string witness_file_text(const Witness& w);

// verification manifest: header, "table name=<name>", then "row" lines of
// key=value fields. Sources are "none", "qc:<relative path>" or
// "code:<relative path>", resolved against the manifest's directory.
enum class SourceKind { None, CodeFile, QcFile };

struct ManifestRow {
  std::string name;
  SourceKind kind = SourceKind::None;
  std::string path;
  bool apply_extend = false;
  bool apply_augment_ones = false;
  std::string expect;                 // "strict" or "equivalent"
  std::optional<size_t> nullity;      // expected pipeline nullity
  std::optional<size_t> raw_nullity;  // expected nullity of the unpruned S
  std::optional<size_t> rank1;        // expected rank 1 position, 1-based
  std::optional<size_t> par_n, par_k;
  std::optional<unsigned> par_d;
  std::optional<bool> acd;
  std::optional<bool> lcd;
  size_t line = 0;
};

struct Manifest {
  FieldSpec spec;
  std::string name;
  std::vector<ManifestRow> rows;
};
Manifest read_manifest(const std::string& path);

// FNV-1a 64 bit over bytes; code_digest hashes the canonical serialization
uint64_t fnv1a64(std::string_view bytes);
uint64_t code_digest(const AdditiveCode& c);

}  // namespace addlin
