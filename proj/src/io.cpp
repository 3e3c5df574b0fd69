#include "addlin/io.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace addlin {

namespace {

struct Tok {
  std::string text;
  size_t line = 0;
  size_t col = 0;
};

// whole file split into token lines; comments and blank lines dropped
class FileTokens {
 public:
  explicit FileTokens(const std::string& path) : path_(path) {
    std::ifstream in(path);
    if (!in) fail(Status::IoError, "cannot read " + path);
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      std::vector<Tok> toks;
      size_t i = 0;
      while (i < line.size()) {
        if (line[i] == '#') break;
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
          ++i;
          continue;
        }
        size_t start = i;
        while (i < line.size() && line[i] != '#' &&
               !std::isspace(static_cast<unsigned char>(line[i])))
          ++i;
        toks.push_back({line.substr(start, i - start), lineno, start + 1});
      }
      if (!toks.empty()) lines_.push_back(std::move(toks));
    }
  }

  bool done() const { return next_ >= lines_.size(); }

  const std::vector<Tok>& take(const std::string& what) {
    if (done())
      fail(Status::ParseError,
           path_ + ": unexpected end of file, expected " + what);
    return lines_[next_++];
  }

  [[noreturn]] void fail_at(const Tok& t, const std::string& msg) const {
    fail(Status::ParseError, path_ + ":" + std::to_string(t.line) + ":" +
                                 std::to_string(t.col) + ": " + msg);
  }

  void expect_done() const {
    if (!done())
      fail_at(lines_[next_][0], "unexpected content after the last section");
  }

  const std::string& path() const { return path_; }

 private:
  std::string path_;
  std::vector<std::vector<Tok>> lines_;
  size_t next_ = 0;
};

uint64_t parse_u64(const FileTokens& ft, const Tok& t) {
  if (t.text.empty()) ft.fail_at(t, "expected a number");
  uint64_t v = 0;
  for (char c : t.text) {
    if (c < '0' || c > '9') ft.fail_at(t, "expected a number, got '" + t.text + "'");
    if (v > (UINT64_MAX - (c - '0')) / 10) ft.fail_at(t, "number out of range");
    v = v * 10 + (c - '0');
  }
  return v;
}

// splits "key=value"; fails when the key differs
Tok kv_value(const FileTokens& ft, const Tok& t, const std::string& key) {
  size_t eq = t.text.find('=');
  if (eq == std::string::npos || t.text.substr(0, eq) != key)
    ft.fail_at(t, "expected " + key + "=<value>");
  return {t.text.substr(eq + 1), t.line, t.col + eq + 1};
}

uint64_t kv_u64(const FileTokens& ft, const Tok& t, const std::string& key) {
  return parse_u64(ft, kv_value(ft, t, key));
}

FieldSpec parse_field_line(FileTokens& ft) {
  const auto& l = ft.take("the field header \"q=<q> c0=<c0> c1=<c1>\"");
  if (l.size() != 3) ft.fail_at(l[0], "field header needs exactly q=, c0=, c1=");
  uint64_t q = kv_u64(ft, l[0], "q");
  uint64_t c0 = kv_u64(ft, l[1], "c0");
  uint64_t c1 = kv_u64(ft, l[2], "c1");
  if (q > 16 || c0 >= q || c1 >= q)
    ft.fail_at(l[0], "field header values out of range");
  try {
    return FieldSpec(static_cast<unsigned>(q), static_cast<uint8_t>(c0),
                     static_cast<uint8_t>(c1));
  } catch (const Error& e) {
    ft.fail_at(l[0], e.what());
  }
}

std::pair<size_t, size_t> parse_dims_line(FileTokens& ft) {
  const auto& l = ft.take("the dimensions line \"n=<n> k=<k>\"");
  if (l.size() != 2) ft.fail_at(l[0], "dimensions line needs exactly n= and k=");
  size_t n = kv_u64(ft, l[0], "n");
  size_t k = kv_u64(ft, l[1], "k");
  if (n == 0) ft.fail_at(l[0], "n must be positive");
  if (k == 0) ft.fail_at(l[1], "k must be positive");
  return {n, k};
}

uint8_t parse_base_value(const FileTokens& ft, const Gf& f, const Tok& t) {
  uint64_t v = parse_u64(ft, t);
  if (v >= f.q())
    ft.fail_at(t, "value " + t.text + " outside the base field 0.." +
                      std::to_string(f.q() - 1));
  return static_cast<uint8_t>(v);
}

GfMatrix parse_matrix_rows(FileTokens& ft, const Gf& f, size_t rows,
                           size_t cols, const std::string& what) {
  GfMatrix m(f, rows, cols);
  for (size_t r = 0; r < rows; ++r) {
    const auto& l = ft.take(what + " row " + std::to_string(r + 1));
    if (l.size() != cols)
      ft.fail_at(l[0], what + " row needs " + std::to_string(cols) +
                           " values, got " + std::to_string(l.size()));
    for (size_t c = 0; c < cols; ++c) m(r, c) = parse_base_value(ft, f, l[c]);
  }
  return m;
}

std::optional<ExtElem> try_parse_ext(const FieldSpec& fs,
                                     const std::string& tok) {
  if (tok == "0") return ExtElem{0, 0};
  if (tok == "1") return fs.omega_pow(0);
  if (tok.empty() || tok[0] != 'w') return std::nullopt;
  if (tok.size() == 1) return fs.omega_pow(1);
  uint64_t j = 0;
  for (size_t i = 1; i < tok.size(); ++i) {
    if (tok[i] < '0' || tok[i] > '9') return std::nullopt;
    j = j * 10 + (tok[i] - '0');
    if (j > 1000000) return std::nullopt;
  }
  return fs.omega_pow(static_cast<unsigned>(j % fs.omega_order()));
}

std::vector<std::vector<ExtElem>> parse_ext_rows(FileTokens& ft,
                                                 const FieldSpec& fs,
                                                 size_t rows, size_t cols,
                                                 const std::string& what) {
  std::vector<std::vector<ExtElem>> out(rows);
  for (size_t r = 0; r < rows; ++r) {
    const auto& l = ft.take(what + " row " + std::to_string(r + 1));
    if (l.size() != cols)
      ft.fail_at(l[0], what + " row needs " + std::to_string(cols) +
                           " entries, got " + std::to_string(l.size()));
    out[r].reserve(cols);
    for (size_t c = 0; c < cols; ++c) {
      auto e = try_parse_ext(fs, l[c].text);
      if (!e) ft.fail_at(l[c], "bad extension token '" + l[c].text + "'");
      out[r].push_back(*e);
    }
  }
  return out;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) fail(Status::IoError, "cannot write " + path);
  out << text;
  out.flush();
  if (!out) fail(Status::IoError, "write to " + path + " failed");
}

void append_base_row(std::string& s, const uint8_t* row, size_t len) {
  for (size_t c = 0; c < len; ++c) {
    if (c) s += ' ';
    s += std::to_string(unsigned{row[c]});
  }
  s += '\n';
}

}  // namespace

std::string ext_token(const FieldSpec& fs, ExtElem z) {
  if (z.is_zero()) return "0";
  if (!fs.in_omega_cycle(z))
    fail(Status::InvalidArgument,
         "element is not a power of w under this modulus and has no token");
  unsigned j = fs.omega_log(z);
  if (j == 0) return "1";
  if (j == 1) return "w";
  return "w" + std::to_string(j);
}

ExtElem parse_ext_token(const FieldSpec& fs, const std::string& tok) {
  auto e = try_parse_ext(fs, tok);
  if (!e) fail(Status::ParseError, "bad extension token '" + tok + "'");
  return *e;
}

AdditiveCode read_code_file(const std::string& path,
                            bool allow_rank_deficient) {
  FileTokens ft(path);
  FieldSpec fs = parse_field_line(ft);
  auto [n, k] = parse_dims_line(ft);
  GfMatrix g = parse_matrix_rows(ft, fs.base(), k, 2 * n, "generator");
  ft.expect_done();
  AdditiveCode c(fs, n, g);
  if (c.dim() < k && !allow_rank_deficient)
    fail(Status::InvalidArgument,
         path + ": generator has rank " + std::to_string(c.dim()) +
             " below k=" + std::to_string(k) +
             " (allow-rank-deficient reduces it instead)");
  return c;
}

std::string code_file_text(const AdditiveCode& c) {
  std::string s = c.spec().header() + "\n";
  s += "n=" + std::to_string(c.length()) + " k=" + std::to_string(c.dim()) +
       "\n";
  for (size_t r = 0; r < c.dim(); ++r)
    append_base_row(s, c.gen().row_ptr(r), 2 * c.length());
  return s;
}

void write_code_file(const AdditiveCode& c, const std::string& path) {
  write_text(path, code_file_text(c));
}

QcFile read_qc_file(const std::string& path) {
  FileTokens ft(path);
  FieldSpec fs = parse_field_line(ft);
  const auto& nl = ft.take("the length line \"n=<n>\"");
  if (nl.size() != 1) ft.fail_at(nl[0], "length line needs exactly n=");
  size_t n = kv_u64(ft, nl[0], "n");
  if (n == 0) ft.fail_at(nl[0], "n must be positive");

  QcSpec qc;
  qc.n = n;
  for (PolyModXn* dst : {&qc.g, &qc.f0, &qc.f1}) {
    const char* name = dst == &qc.g ? "g" : dst == &qc.f0 ? "f0" : "f1";
    const auto& l = ft.take(std::string("the exponent line \"") + name +
                            " <exponents...>\"");
    if (l[0].text != name)
      ft.fail_at(l[0], std::string("expected the ") + name + " line");
    std::vector<unsigned> exps;
    for (size_t i = 1; i < l.size(); ++i) {
      uint64_t e = parse_u64(ft, l[i]);
      exps.push_back(static_cast<unsigned>(e % n));
    }
    *dst = PolyModXn::from_exponents(n, exps);
  }
  ft.expect_done();
  return {fs, std::move(qc)};
}

LinearCodeExt read_linear_file(const std::string& path) {
  FileTokens ft(path);
  FieldSpec fs = parse_field_line(ft);
  auto [n, k] = parse_dims_line(ft);
  auto rows = parse_ext_rows(ft, fs, k, n, "generator");
  ft.expect_done();
  LinearCodeExt c(fs, n, std::move(rows));
  if (c.dim() < k)
    fail(Status::InvalidArgument,
         path + ": rows are dependent, rank " + std::to_string(c.dim()) +
             " below k=" + std::to_string(k));
  return c;
}

std::string linear_file_text(const LinearCodeExt& c) {
  std::string s = c.spec().header() + "\n";
  s += "n=" + std::to_string(c.length()) + " k=" + std::to_string(c.dim()) +
       "\n";
  for (const auto& row : c.rows()) {
    for (size_t j = 0; j < row.size(); ++j) {
      if (j) s += ' ';
      s += ext_token(c.spec(), row[j]);
    }
    s += '\n';
  }
  return s;
}

void write_linear_file(const LinearCodeExt& c, const std::string& path) {
  write_text(path, linear_file_text(c));
}

Witness read_witness_file(const std::string& path) {
  FileTokens ft(path);
  FieldSpec fs = parse_field_line(ft);
  auto [n, k] = parse_dims_line(ft);

  const auto& rl = ft.take("the R section");
  if (rl.size() != 1 || rl[0].text != "R") ft.fail_at(rl[0], "expected R");
  GfMatrix r = parse_matrix_rows(ft, fs.base(), k, k, "R");

  std::vector<GfMatrix> blocks;
  for (size_t i = 1; i <= n; ++i) {
    const auto& al = ft.take("the A " + std::to_string(i) + " section");
    if (al.size() != 2 || al[0].text != "A" ||
        parse_u64(ft, al[1]) != i)
      ft.fail_at(al[0], "expected \"A " + std::to_string(i) + "\"");
    blocks.push_back(parse_matrix_rows(ft, fs.base(), 2, 2, "A block"));
  }

  const auto& ll = ft.take("the linear section");
  if (ll.size() != 2 || ll[0].text != "linear")
    ft.fail_at(ll[0], "expected \"linear k=<k/2>\"");
  size_t m = kv_u64(ft, ll[1], "k");
  if (m * 2 != k)
    ft.fail_at(ll[1], "linear dimension must be half of k=" + std::to_string(k));
  auto rows = parse_ext_rows(ft, fs, m, n, "linear generator");
  ft.expect_done();

  LinearCodeExt lin(fs, n, std::move(rows));
  if (lin.dim() != m)
    fail(Status::InvalidArgument, path + ": linear generator rows are dependent");
  return Witness{std::move(r), std::move(blocks), std::move(lin)};
}

std::string witness_file_text(const Witness& w) {
  const FieldSpec& fs = w.linear.spec();
  const size_t n = w.a_blocks.size(), k = w.r.rows();
  std::string s = fs.header() + "\n";
  s += "n=" + std::to_string(n) + " k=" + std::to_string(k) + "\n";
  s += "R\n";
  for (size_t r = 0; r < k; ++r) append_base_row(s, w.r.row_ptr(r), k);
  for (size_t i = 0; i < n; ++i) {
    s += "A " + std::to_string(i + 1) + "\n";
    for (size_t r = 0; r < 2; ++r)
      append_base_row(s, w.a_blocks[i].row_ptr(r), 2);
  }
  s += "linear k=" + std::to_string(w.linear.dim()) + "\n";
  for (const auto& row : w.linear.rows()) {
    for (size_t j = 0; j < row.size(); ++j) {
      if (j) s += ' ';
      s += ext_token(fs, row[j]);
    }
    s += '\n';
  }
  return s;
}

void write_witness_file(const Witness& w, const std::string& path) {
  write_text(path, witness_file_text(w));
}

namespace {

bool parse_bool(const FileTokens& ft, const Tok& t) {
  if (t.text == "true") return true;
  if (t.text == "false") return false;
  ft.fail_at(t, "expected true or false");
}

// params=[n,k2,d]; k2 may end in ".5" for odd k
void parse_params(const FileTokens& ft, const Tok& t, ManifestRow& row) {
  const std::string& s = t.text;
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    ft.fail_at(t, "params must look like [n,k,d]");
  std::vector<std::string> parts;
  std::string cur;
  for (size_t i = 1; i + 1 < s.size(); ++i) {
    if (s[i] == ',') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += s[i];
    }
  }
  parts.push_back(cur);
  if (parts.size() != 3) ft.fail_at(t, "params must have three entries");

  auto num = [&](const std::string& p) -> uint64_t {
    return parse_u64(ft, Tok{p, t.line, t.col});
  };
  row.par_n = num(parts[0]);
  std::string k2 = parts[1];
  bool half = false;
  if (k2.size() > 2 && k2.substr(k2.size() - 2) == ".5") {
    half = true;
    k2 = k2.substr(0, k2.size() - 2);
  }
  row.par_k = 2 * num(k2) + (half ? 1 : 0);
  row.par_d = static_cast<unsigned>(num(parts[2]));
}

}  // namespace

Manifest read_manifest(const std::string& path) {
  FileTokens ft(path);
  FieldSpec fs = parse_field_line(ft);
  const auto& tl = ft.take("the table line \"table name=<name>\"");
  if (tl.size() != 2 || tl[0].text != "table")
    ft.fail_at(tl[0], "expected \"table name=<name>\"");
  std::string name = kv_value(ft, tl[1], "name").text;
  if (name.empty()) ft.fail_at(tl[1], "table name must not be empty");

  std::filesystem::path base = std::filesystem::path(path).parent_path();
  std::vector<ManifestRow> rows;
  while (!ft.done()) {
    const auto& l = ft.take("a row line");
    if (l[0].text != "row") ft.fail_at(l[0], "expected a row line");
    ManifestRow row;
    row.line = l[0].line;
    bool have_source = false;
    for (size_t i = 1; i < l.size(); ++i) {
      const Tok& t = l[i];
      size_t eq = t.text.find('=');
      if (eq == std::string::npos) ft.fail_at(t, "expected key=value");
      std::string key = t.text.substr(0, eq);
      Tok val{t.text.substr(eq + 1), t.line, t.col + eq + 1};
      if (key == "name") {
        row.name = val.text;
      } else if (key == "source") {
        have_source = true;
        if (val.text == "none") {
          row.kind = SourceKind::None;
        } else if (val.text.rfind("qc:", 0) == 0) {
          row.kind = SourceKind::QcFile;
          row.path = (base / val.text.substr(3)).string();
        } else if (val.text.rfind("code:", 0) == 0) {
          row.kind = SourceKind::CodeFile;
          row.path = (base / val.text.substr(5)).string();
        } else {
          ft.fail_at(val, "source must be none, qc:<path> or code:<path>");
        }
      } else if (key == "apply") {
        std::string cur;
        std::string text = val.text + ",";
        for (char ch : text) {
          if (ch != ',') {
            cur += ch;
            continue;
          }
          if (cur == "extend") row.apply_extend = true;
          else if (cur == "augment-ones") row.apply_augment_ones = true;
          else if (!cur.empty())
            ft.fail_at(val, "unknown apply step '" + cur + "'");
          cur.clear();
        }
      } else if (key == "expect") {
        if (val.text != "strict" && val.text != "equivalent")
          ft.fail_at(val, "expect must be strict or equivalent");
        row.expect = val.text;
      } else if (key == "nullity") {
        row.nullity = parse_u64(ft, val);
      } else if (key == "rawnullity") {
        row.raw_nullity = parse_u64(ft, val);
      } else if (key == "rank1") {
        row.rank1 = parse_u64(ft, val);
      } else if (key == "params") {
        parse_params(ft, val, row);
      } else if (key == "acd") {
        row.acd = parse_bool(ft, val);
      } else if (key == "lcd") {
        row.lcd = parse_bool(ft, val);
      } else {
        ft.fail_at(t, "unknown row key '" + key + "'");
      }
    }
    if (row.name.empty()) ft.fail_at(l[0], "row needs a name");
    if (!have_source) ft.fail_at(l[0], "row needs a source");
    if (row.expect.empty()) ft.fail_at(l[0], "row needs an expect verdict");
    rows.push_back(std::move(row));
  }
  return Manifest{fs, std::move(name), std::move(rows)};
}

uint64_t fnv1a64(std::string_view bytes) {
  uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

uint64_t code_digest(const AdditiveCode& c) {
  return fnv1a64(code_file_text(c));
}

}  // namespace addlin
