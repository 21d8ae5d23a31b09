#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace fpt {

/// Hard upper bound on the ground-set size handled by the lattice code.
inline constexpr int kMaxGroundSize = 16;

/// Default cap for enumerate_nc; overridable through FPT_ORDER_CAP.
inline constexpr int kDefaultOrderCap = 15;

/// Active order cap: FPT_ORDER_CAP if set and valid, else kDefaultOrderCap.
int order_cap();

enum class Execution { serial, parallel };

/// A non-crossing partition of {1, ..., n}.
///
/// Stored as a restricted growth string: label(i) is the index of the block
/// containing element i, blocks numbered by increasing minimum. That numbering
/// is the canonical form, so equality is plain label comparison.
class NcPartition {
 public:
  NcPartition() = default;

  /// Blocks use 1-based elements. Throws StructuralError if the blocks do not
  /// form a set partition of [n] or if two blocks cross.
  static NcPartition from_blocks(int n, const std::vector<std::vector<int>>& blocks);

  /// Builds from arbitrary block labels (0-based positions, any label values).
  /// Throws StructuralError on crossing.
  static NcPartition from_labels(std::span<const int> labels);

  static NcPartition zero(int n);  ///< all singletons (lattice minimum)
  static NcPartition one(int n);   ///< single block (lattice maximum)

  int size() const { return n_; }
  int num_blocks() const { return num_blocks_; }

  /// Block index of a 0-based position.
  int label(int position) const { return label_[static_cast<std::size_t>(position)]; }

  /// Canonical blocks, 1-based, sorted by minimum, elements ascending.
  std::vector<std::vector<int>> blocks() const;

  /// Same as blocks() but 0-based positions.
  std::vector<std::vector<int>> positions() const;

  /// Restriction to a subset of positions (0-based, ascending), relabelled to [|subset|].
  NcPartition restrict_to(std::span<const int> subset) const;

  std::string to_string() const;

  friend bool operator==(const NcPartition& a, const NcPartition& b) {
    return a.n_ == b.n_ && a.label_ == b.label_;
  }

  /// Lexicographic order on the canonical block serialization.
  friend bool operator<(const NcPartition& a, const NcPartition& b);

  std::size_t hash() const;

 private:
  std::uint8_t n_ = 0;
  std::uint8_t num_blocks_ = 0;
  std::array<std::uint8_t, kMaxGroundSize> label_{};

  friend class NcBuilder;
};

struct NcPartitionHash {
  std::size_t operator()(const NcPartition& p) const { return p.hash(); }
};

/// Catalan number (2n)!/(n!(n+1)!).
std::uint64_t catalan(int n);

/// Blocks are 1-based. Throws StructuralError if they are not a set partition of [n].
bool is_noncrossing(int n, const std::vector<std::vector<int>>& blocks);

/// Every element of NC(n) in canonical order. Throws CapacityError if n > order_cap().
std::vector<NcPartition> enumerate_nc(int n, Execution exec = Execution::parallel);

/// Refinement order. Throws StructuralError on size mismatch.
bool leq(const NcPartition& pi, const NcPartition& sigma);

/// Least upper bound inside the NC lattice.
NcPartition join(const NcPartition& pi, const NcPartition& sigma);

/// Every rho in NC(n) with pi <= rho, in canonical order.
std::vector<NcPartition> upper_set(const NcPartition& pi);

/// Mobius function mu(pi, sigma) of NC(n). Throws DomainError unless pi <= sigma.
std::int64_t mobius(const NcPartition& pi, const NcPartition& sigma);

/// Precomputed per-order data used by the transform kernels.
struct PartitionTable {
  int n = 0;
  std::vector<NcPartition> partitions;
  std::vector<std::int64_t> mobius_to_one;  ///< mu(pi, 1_n)
  /// Flattened 0-based block positions; block b of partition p spans
  /// positions[block_start[block_offset[p] + b] .. block_start[block_offset[p] + b + 1]).
  std::vector<std::uint8_t> positions;
  std::vector<std::uint32_t> block_start;
  std::vector<std::uint32_t> block_offset;

  std::size_t size() const { return partitions.size(); }
  int num_blocks(std::size_t p) const {
    return static_cast<int>(block_offset[p + 1] - block_offset[p]);
  }
  std::span<const std::uint8_t> block(std::size_t p, int b) const {
    const auto k = block_offset[p] + static_cast<std::uint32_t>(b);
    return {positions.data() + block_start[k], block_start[k + 1] - block_start[k]};
  }
};

/// Shared, lazily built table for NC(n). Safe to call concurrently. Without
/// `with_mobius` the mobius_to_one column is left empty, which avoids the
/// interval sums at large n when only block structure is needed.
const PartitionTable& partition_table(int n, bool with_mobius = true);

}  // namespace fpt

template <>
struct std::hash<fpt::NcPartition> {
  std::size_t operator()(const fpt::NcPartition& p) const { return p.hash(); }
};
