#include "addlin/equiv.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <string>

namespace addlin {

namespace {

using steady = std::chrono::steady_clock;

double ms_since(steady::time_point t) {
  return std::chrono::duration<double, std::milli>(steady::now() - t).count();
}

}  // namespace

const char* verdict_name(VerdictTag t) {
  switch (t) {
    case VerdictTag::StrictlyAdditive: return "StrictlyAdditive";
    case VerdictTag::EquivalentToLinear: return "EquivalentToLinear";
    case VerdictTag::Undecided: return "Undecided";
  }
  return "Unknown";
}

const char* reason_name(StrictReason r) {
  switch (r) {
    case StrictReason::OddDimensionK: return "OddDimensionK";
    case StrictReason::RankOneBlock: return "RankOneBlock";
    case StrictReason::OddNullity: return "OddNullity";
    case StrictReason::SearchExhaustedNoWitness: return "SearchExhaustedNoWitness";
  }
  return "Unknown";
}

PunctureResult puncture_zero_blocks(const AdditiveCode& c) {
  std::vector<size_t> removed, kept, keep_cols;
  for (size_t i = 0; i < c.length(); ++i) {
    if (c.block(i).is_zero()) {
      removed.push_back(i + 1);
    } else {
      kept.push_back(i + 1);
      keep_cols.push_back(2 * i);
      keep_cols.push_back(2 * i + 1);
    }
  }
  if (kept.empty())
    fail(Status::InvalidArgument, "every coordinate of the code is zero");
  if (removed.empty()) return {c, {}, std::move(kept)};
  return {AdditiveCode(c.spec(), kept.size(), c.gen().submatrix_cols(keep_cols)),
          std::move(removed), std::move(kept)};
}

GfMatrix build_s_raw(const AdditiveCode& c) {
  const size_t k = c.dim(), n = c.length();
  const Gf& f = c.spec().base();
  GfMatrix s(f, 2 * n * k, k * k + 4 * n);
  const GfMatrix ik = GfMatrix::identity(f, k);
  for (size_t i = 0; i < n; ++i) {
    GfMatrix gi = c.block(i);
    // vec(R G_i): (G_i^T kron I_k) vec(R)
    GfMatrix left = gi.transpose().kron(ik);
    for (size_t r = 0; r < 2 * k; ++r)
      for (size_t col = 0; col < k * k; ++col)
        s(i * 2 * k + r, col) = left(r, col);
    // vec(G_i T_i): (I_2 kron G_i) vec(T_i), subtracted
    for (size_t r = 0; r < k; ++r)
      for (size_t cc = 0; cc < 2; ++cc) {
        s(i * 2 * k + r, k * k + 4 * i + cc) = f.neg(gi(r, cc));
        s(i * 2 * k + k + r, k * k + 4 * i + 2 + cc) = f.neg(gi(r, cc));
      }
  }
  return s;
}

SMatrix build_s(const AdditiveCode& c) {
  for (size_t i = 0; i < c.length(); ++i)
    if (rank(c.block(i)) != 2)
      fail(Status::RankDeficientBlock,
           "coordinate " + std::to_string(i + 1) + " has block rank below 2");
  return {build_s_raw(c), c.length(), c.dim()};
}

size_t nullity(const SMatrix& s) { return s.s.cols() - rank(s.s); }

namespace {

// Invertible A with T A = A M (M the companion of w), valid whenever T
// satisfies the irreducible quadratic of w: columns ((T + c1 I) v, v) work
// for any nonzero v because T has no eigenvector over F_q.
GfMatrix conjugator_of(const FieldSpec& fs, const GfMatrix& t) {
  const Gf& f = fs.base();
  GfMatrix a(f, 2, 2);
  a(0, 0) = f.add(t(0, 0), fs.c1());
  a(1, 0) = t(1, 0);
  a(0, 1) = 1;
  a(1, 1) = 0;
  if (f.sub(f.mul(a(0, 0), a(1, 1)), f.mul(a(0, 1), a(1, 0))) == 0)
    fail(Status::Internal, "conjugator degenerated; T has an eigenvector");
  return a;
}

// G with every coordinate block right-multiplied by its 2x2 transform.
GfMatrix blockwise_product(const GfMatrix& g, size_t n,
                           const std::vector<GfMatrix>& blocks) {
  const Gf& f = g.field();
  GfMatrix out(f, g.rows(), 2 * n);
  for (size_t i = 0; i < n; ++i) {
    const GfMatrix& b = blocks[i];
    for (size_t r = 0; r < g.rows(); ++r) {
      uint8_t x = g(r, 2 * i), y = g(r, 2 * i + 1);
      out(r, 2 * i) = f.add(f.mul(x, b(0, 0)), f.mul(y, b(1, 0)));
      out(r, 2 * i + 1) = f.add(f.mul(x, b(0, 1)), f.mul(y, b(1, 1)));
    }
  }
  return out;
}

// Greedy basis over F_{q^2} for an omega-closed row space, pairing each
// chosen row with its w-multiple to grow an F_q basis two rows at a time.
LinearCodeExt extract_linear_basis(const FieldSpec& fs, size_t n,
                                   const GfMatrix& ga) {
  const Gf& f = fs.base();
  const size_t k = ga.rows();
  GfMatrix basis = row_basis(ga);
  GfMatrix acc(f, 0, 2 * n);
  std::vector<std::vector<ExtElem>> picked;
  for (size_t r = 0; r < basis.rows() && picked.size() < k / 2; ++r) {
    RowSolver solver(acc);
    if (solver.contains_row(basis.row_ptr(r), 2 * n)) continue;
    auto z = phi_inverse(fs, basis.row_ptr(r), 2 * n);
    auto wz = z;
    for (auto& e : wz) e = ext_times_omega(fs, e);
    GfMatrix pair(f, 2, 2 * n);
    auto pz = phi(fs, z);
    auto pwz = phi(fs, wz);
    std::copy(pz.begin(), pz.end(), pair.row_ptr(0));
    std::copy(pwz.begin(), pwz.end(), pair.row_ptr(1));
    acc = row_basis(vstack(acc, pair));
    picked.push_back(std::move(z));
  }
  if (picked.size() * 2 != k || acc.rows() != k || !same_row_space(acc, ga))
    fail(Status::Internal, "failed to extract an extension basis");
  return LinearCodeExt(fs, n, std::move(picked));
}

Witness expand_witness(const AdditiveCode& orig, const Witness& w,
                       const PunctureResult& pr) {
  const FieldSpec& fs = orig.spec();
  const size_t n = orig.length();
  std::vector<GfMatrix> blocks(n, GfMatrix::identity(fs.base(), 2));
  for (size_t j = 0; j < pr.kept.size(); ++j)
    blocks[pr.kept[j] - 1] = w.a_blocks[j];
  std::vector<std::vector<ExtElem>> rows;
  rows.reserve(w.linear.dim());
  for (const auto& row : w.linear.rows()) {
    std::vector<ExtElem> full(n, ExtElem{0, 0});
    for (size_t j = 0; j < pr.kept.size(); ++j) full[pr.kept[j] - 1] = row[j];
    rows.push_back(std::move(full));
  }
  Witness out{w.r, std::move(blocks), LinearCodeExt(fs, n, std::move(rows))};
  if (!verify_witness(orig, out).ok())
    fail(Status::Internal, "expanded witness failed re-verification");
  return out;
}

}  // namespace

WitnessCheck verify_witness(const AdditiveCode& c, const Witness& w) {
  WitnessCheck out;
  const FieldSpec& fs = c.spec();
  const Gf& f = fs.base();
  const size_t n = c.length(), k = c.dim();
  if (w.a_blocks.size() != n || w.r.rows() != k || w.r.cols() != k) return out;
  for (const GfMatrix& a : w.a_blocks)
    if (a.rows() != 2 || a.cols() != 2) return out;

  std::vector<GfMatrix> conj(n, GfMatrix(f, 2, 2));
  try {
    for (size_t i = 0; i < n; ++i)
      conj[i] = w.a_blocks[i] * fs.companion() * invert(w.a_blocks[i]);
  } catch (const Error&) {
    return out;  // some block is singular
  }
  out.blocks_invertible = true;

  out.conjugation = (w.r * c.gen() == blockwise_product(c.gen(), n, conj));

  GfMatrix quad = w.r * w.r + w.r.scaled(fs.c1()) +
                  GfMatrix::identity(f, k).scaled(fs.c0());
  out.quadratic = quad.is_zero();

  if (w.linear.spec().same(fs) && w.linear.length() == n &&
      2 * w.linear.dim() == k) {
    GfMatrix ga = blockwise_product(c.gen(), n, w.a_blocks);
    out.row_space = same_row_space(ga, w.linear.to_additive().gen());
  }
  return out;
}

std::optional<Witness> complete_witness(const AdditiveCode& c,
                                        const std::vector<GfMatrix>& a_blocks) {
  const FieldSpec& fs = c.spec();
  const Gf& f = fs.base();
  const size_t n = c.length(), k = c.dim();
  if (a_blocks.size() != n)
    fail(Status::DimensionMismatch, "expected one 2x2 block per coordinate");
  if (k % 2 != 0) return std::nullopt;
  for (const GfMatrix& a : a_blocks) {
    if (a.rows() != 2 || a.cols() != 2)
      fail(Status::DimensionMismatch, "conjugator blocks must be 2x2");
    invert(a);  // throws Singular when not invertible
  }

  GfMatrix ga = blockwise_product(c.gen(), n, a_blocks);
  // is G A linear as given? solve R (G A) = (G A)(I_n kron M)
  const GfMatrix& m = fs.companion();
  GfMatrix b(f, k, 2 * n);
  for (size_t r = 0; r < k; ++r)
    for (size_t i = 0; i < n; ++i) {
      uint8_t x = ga(r, 2 * i), y = ga(r, 2 * i + 1);
      b(r, 2 * i) = f.add(f.mul(x, m(0, 0)), f.mul(y, m(1, 0)));
      b(r, 2 * i + 1) = f.add(f.mul(x, m(0, 1)), f.mul(y, m(1, 1)));
    }
  auto r = RowSolver(ga).solve(b);
  if (!r) return std::nullopt;
  Witness w{std::move(*r), a_blocks, extract_linear_basis(fs, n, ga)};
  if (!verify_witness(c, w).ok())
    fail(Status::Internal, "completed witness failed re-verification");
  return w;
}

LinearityVerdict search_witness(const AdditiveCode& c, const SMatrix& s,
                                uint64_t budget) {
  LinearityVerdict v;
  v.s_rows = s.s.rows();
  v.s_cols = s.s.cols();
  const FieldSpec& fs = c.spec();
  const Gf& f = fs.base();
  const unsigned q = f.q();
  const size_t k = s.k, n = s.n;

  auto t0 = steady::now();
  GfMatrix ns = null_space(s.s);
  const size_t d = ns.rows();
  v.null_dim = d;
  v.ms_nullity = ms_since(t0);

  auto t1 = steady::now();
  if (d % 2 == 1) {
    v.tag = VerdictTag::StrictlyAdditive;
    v.reason = StrictReason::OddNullity;
    v.ms_search = ms_since(t1);
    return v;
  }
  if (pow_exceeds(q, d, budget)) {
    v.tag = VerdictTag::Undecided;
    v.budget_exceeded = true;
    v.ms_search = ms_since(t1);
    return v;
  }

  std::vector<uint8_t> x(ns.cols());
  auto try_candidate = [&](const std::vector<uint8_t>& alpha) -> bool {
    ++v.candidates_tested;
    std::fill(x.begin(), x.end(), 0);
    for (size_t j = 0; j < d; ++j) {
      if (alpha[j] == 0) continue;
      const uint8_t* row = ns.row_ptr(j);
      for (size_t t = 0; t < x.size(); ++t)
        x[t] = f.add(x[t], f.mul(alpha[j], row[t]));
    }
    GfMatrix r(f, k, k);
    for (size_t col = 0; col < k; ++col)
      for (size_t row = 0; row < k; ++row) r(row, col) = x[col * k + row];
    GfMatrix quad = r * r;
    for (size_t i = 0; i < k; ++i) {
      for (size_t j = 0; j < k; ++j)
        quad(i, j) = f.add(quad(i, j), f.mul(fs.c1(), r(i, j)));
      quad(i, i) = f.add(quad(i, i), fs.c0());
    }
    if (!quad.is_zero()) return false;

    // the same null vector already carries every T_i with G_i T_i = R G_i
    std::vector<GfMatrix> blocks;
    blocks.reserve(n);
    for (size_t i = 0; i < n; ++i) {
      GfMatrix t(f, 2, 2);
      for (size_t col = 0; col < 2; ++col)
        for (size_t row = 0; row < 2; ++row)
          t(row, col) = x[k * k + 4 * i + col * 2 + row];
      blocks.push_back(conjugator_of(fs, t));
    }
    GfMatrix ga = blockwise_product(c.gen(), n, blocks);
    Witness w{std::move(r), std::move(blocks), extract_linear_basis(fs, n, ga)};
    if (!verify_witness(c, w).ok())
      fail(Status::Internal, "search produced a witness that fails verification");
    v.witness = std::move(w);
    v.tag = VerdictTag::EquivalentToLinear;
    return true;
  };

  // scalar-normalized combinations first (leading coefficient 1), then the
  // remaining leading values; the quadratic is not scale invariant, so the
  // second pass is not redundant for q > 2
  bool found = false;
  std::vector<uint8_t> alpha(d, 0);
  for (int pass = 0; pass < 2 && !found; ++pass) {
    const unsigned lv_begin = pass == 0 ? 1 : 2;
    const unsigned lv_end = pass == 0 ? 2 : q;
    for (unsigned lv = lv_begin; lv < lv_end && !found; ++lv) {
      for (size_t lead = 0; lead < d && !found; ++lead) {
        std::fill(alpha.begin(), alpha.end(), 0);
        alpha[lead] = static_cast<uint8_t>(lv);
        for (;;) {
          if (try_candidate(alpha)) {
            found = true;
            break;
          }
          size_t j = lead + 1;
          while (j < d && ++alpha[j] == q) alpha[j++] = 0;
          if (j == d) break;
        }
      }
    }
  }
  if (!found) {
    v.tag = VerdictTag::StrictlyAdditive;
    v.reason = StrictReason::SearchExhaustedNoWitness;
  }
  v.ms_search = ms_since(t1);
  return v;
}

LinearityVerdict test_linearity(const AdditiveCode& c, uint64_t budget) {
  if (c.dim() == 0)
    fail(Status::InvalidArgument, "the zero code is not a test instance");
  LinearityVerdict v;
  auto t0 = steady::now();
  if (c.dim() % 2 == 1) {
    v.tag = VerdictTag::StrictlyAdditive;
    v.reason = StrictReason::OddDimensionK;
    v.ms_rank = ms_since(t0);
    return v;
  }
  PunctureResult pr = puncture_zero_blocks(c);
  v.punctured = pr.removed;
  for (size_t j = 0; j < pr.code.length(); ++j) {
    if (rank(pr.code.block(j)) == 1) {
      v.tag = VerdictTag::StrictlyAdditive;
      v.reason = StrictReason::RankOneBlock;
      v.rank_one_pos = pr.kept[j];
      v.ms_rank = ms_since(t0);
      return v;
    }
  }
  v.ms_rank = ms_since(t0);

  auto t1 = steady::now();
  SMatrix s = build_s(pr.code);
  v.ms_s = ms_since(t1);

  LinearityVerdict sv = search_witness(pr.code, s, budget);
  v.tag = sv.tag;
  v.reason = sv.reason;
  v.s_rows = sv.s_rows;
  v.s_cols = sv.s_cols;
  v.null_dim = sv.null_dim;
  v.candidates_tested = sv.candidates_tested;
  v.budget_exceeded = sv.budget_exceeded;
  v.ms_nullity = sv.ms_nullity;
  v.ms_search = sv.ms_search;
  if (sv.witness) {
    v.witness = pr.removed.empty() ? std::move(*sv.witness)
                                   : expand_witness(c, *sv.witness, pr);
  }
  return v;
}

AdditiveCode apply_monomial(const AdditiveCode& c,
                            const std::vector<GfMatrix>& a_blocks,
                            const std::vector<size_t>& perm) {
  const size_t n = c.length();
  if (a_blocks.size() != n || perm.size() != n)
    fail(Status::DimensionMismatch, "transform size differs from the length");
  std::vector<char> seen(n, 0);
  for (size_t p : perm) {
    if (p >= n || seen[p])
      fail(Status::InvalidArgument, "perm is not a permutation of 0..n-1");
    seen[p] = 1;
  }
  const Gf& f = c.spec().base();
  for (const GfMatrix& a : a_blocks) {
    if (a.rows() != 2 || a.cols() != 2)
      fail(Status::DimensionMismatch, "transform blocks must be 2x2");
    if (f.sub(f.mul(a(0, 0), a(1, 1)), f.mul(a(0, 1), a(1, 0))) == 0)
      fail(Status::Singular, "transform block is not invertible");
  }
  GfMatrix out(f, c.dim(), 2 * n);
  for (size_t j = 0; j < n; ++j) {
    GfMatrix b = c.block(perm[j]) * a_blocks[j];
    for (size_t r = 0; r < c.dim(); ++r) {
      out(r, 2 * j) = b(r, 0);
      out(r, 2 * j + 1) = b(r, 1);
    }
  }
  return AdditiveCode(c.spec(), n, out);
}

bool oracle_equivalent_to_linear(const AdditiveCode& c, size_t max_n,
                                 size_t max_k, uint64_t max_transforms) {
  const size_t n = c.length(), k = c.dim();
  if (n > max_n || k > max_k)
    fail(Status::InstanceTooLarge,
         "oracle caps are n <= " + std::to_string(max_n) + ", k <= " +
             std::to_string(max_k));
  const Gf& f = c.spec().base();
  const unsigned q = f.q();

  std::vector<GfMatrix> units;
  for (unsigned a = 0; a < q; ++a)
    for (unsigned b = 0; b < q; ++b)
      for (unsigned cc = 0; cc < q; ++cc)
        for (unsigned dd = 0; dd < q; ++dd) {
          if (f.sub(f.mul(a, dd), f.mul(b, cc)) == 0) continue;
          units.push_back(GfMatrix::from_rows(f, 2, 2, {a, b, cc, dd}));
        }

  uint64_t total = 1;
  for (size_t i = 2; i <= n; ++i) total *= i;
  for (size_t i = 0; i < n; ++i) {
    if (total > max_transforms / units.size())
      fail(Status::InstanceTooLarge,
           "transform count exceeds " + std::to_string(max_transforms));
    total *= units.size();
  }

  std::vector<size_t> perm(n);
  std::iota(perm.begin(), perm.end(), size_t{0});
  do {
    std::vector<size_t> choice(n, 0);
    for (;;) {
      std::vector<GfMatrix> blocks;
      blocks.reserve(n);
      for (size_t j = 0; j < n; ++j) blocks.push_back(units[choice[j]]);
      if (is_linear(apply_monomial(c, blocks, perm)).linear) return true;
      size_t j = 0;
      while (j < n && ++choice[j] == units.size()) choice[j++] = 0;
      if (j == n) break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace addlin
