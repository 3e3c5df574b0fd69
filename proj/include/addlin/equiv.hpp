#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "addlin/code.hpp"

namespace addlin {

// Default bound on the number of null space combinations the witness search
// will enumerate (compared against q^d).
inline constexpr uint64_t kDefaultSearchBudget = 1ull << 24;

enum class VerdictTag { StrictlyAdditive, EquivalentToLinear, Undecided };

enum class StrictReason {
  OddDimensionK,
  RankOneBlock,
  OddNullity,
  SearchExhaustedNoWitness,
};

const char* verdict_name(VerdictTag t);
const char* reason_name(StrictReason r);

// Zero coordinate blocks contribute nothing and are removed before the
// algebra; positions are reported 1-based against the input code.
struct PunctureResult {
  AdditiveCode code;
  std::vector<size_t> removed;  // original positions, 1-based
  std::vector<size_t> kept;     // original position of each new coordinate
};
PunctureResult puncture_zero_blocks(const AdditiveCode& c);

// The linear system tying a row space endomorphism R to per-coordinate
// companions: block row i states R G_i = G_i T_i through vectorization,
// [ G_i^T kron I_k | ... -(I_2 kron G_i) ... ] acting on
// (vec R, vec T_1, ..., vec T_n). Shape 2nk by k^2 + 4n. Every block must
// have rank 2.
struct SMatrix {
  GfMatrix s;
  size_t n = 0;
  size_t k = 0;
};
SMatrix build_s(const AdditiveCode& c);
size_t nullity(const SMatrix& s);

// The same block layout with no requirement on the block ranks. Published
// nullity values for codes carrying a rank 1 block were computed this way;
// the decision pipeline itself never consumes a rank deficient S.
GfMatrix build_s_raw(const AdditiveCode& c);

// A full equivalence certificate: R G = G A (I_n kron M) A^{-1} with
// R^2 + c1 R + c0 I = 0, plus the resulting linear code whose phi image is
// the row space of G A.
struct Witness {
  GfMatrix r;
  std::vector<GfMatrix> a_blocks;  // n invertible 2x2 conjugators
  LinearCodeExt linear;
};

struct WitnessCheck {
  bool blocks_invertible = false;
  bool conjugation = false;  // R G = G A (I_n kron M) A^{-1}, exactly
  bool quadratic = false;    // R^2 + c1 R + c0 I = 0
  bool row_space = false;    // rowspace(G A) is the phi image of `linear`
  bool ok() const {
    return blocks_invertible && conjugation && quadratic && row_space;
  }
};

// Re-derivation of every identity a witness claims, from scratch.
WitnessCheck verify_witness(const AdditiveCode& c, const Witness& w);

// Rebuild a full witness from conjugator blocks alone: derive R from the
// linearity of G A and extract a basis over the extension. Returns nullopt
// when G A is not linear (the blocks are not a witness). Non-invertible
// blocks throw Singular.
std::optional<Witness> complete_witness(const AdditiveCode& c,
                                        const std::vector<GfMatrix>& a_blocks);

struct LinearityVerdict {
  VerdictTag tag = VerdictTag::Undecided;
  std::optional<StrictReason> reason;

  // pipeline trace
  std::vector<size_t> punctured;        // removed coordinates, 1-based
  std::optional<size_t> rank_one_pos;   // first rank 1 block, 1-based
  std::optional<size_t> s_rows, s_cols;
  std::optional<size_t> null_dim;
  uint64_t candidates_tested = 0;
  bool budget_exceeded = false;

  std::optional<Witness> witness;

  // stage wall clock, milliseconds
  double ms_rank = 0, ms_s = 0, ms_nullity = 0, ms_search = 0;
};

// The whole decision pipeline: parity of k, puncturing and block ranks,
// parity of the nullity of S, then the null space search for R with
// R^2 + c1 R + c0 I = 0. The search is exact: exhausting it without a hit
// proves strict additivity, and any witness returned has been re-verified.
LinearityVerdict test_linearity(const AdditiveCode& c,
                                uint64_t budget = kDefaultSearchBudget);

// The search stage alone, for a code whose blocks all have rank 2 and its
// prebuilt S matrix. Scalar-normalized combinations (leading coefficient 1)
// are tried before the full sweep; for q = 2 the two passes coincide.
LinearityVerdict search_witness(const AdditiveCode& c, const SMatrix& s,
                                uint64_t budget = kDefaultSearchBudget);

// Monomial transform: coordinate j of the result is coordinate perm[j] of
// the source, right-multiplied by a_blocks[j] (0-based indices).
AdditiveCode apply_monomial(const AdditiveCode& c,
                            const std::vector<GfMatrix>& a_blocks,
                            const std::vector<size_t>& perm);

// Ground truth by brute force over all monomial transforms (every
// invertible block matrix, no determinant restriction, every coordinate
// permutation). Refuses instances beyond the caps with InstanceTooLarge.
bool oracle_equivalent_to_linear(const AdditiveCode& c, size_t max_n = 4,
                                 size_t max_k = 6,
                                 uint64_t max_transforms = 2000000);

}  // namespace addlin
