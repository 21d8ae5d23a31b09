#include "fpt/nc_partition.hpp"

#include "fpt/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <sstream>
#include <unordered_map>

namespace fpt {

class NcBuilder {
 public:
  // labels must already be a restricted growth string of a non-crossing partition
  static NcPartition make(int n, const std::uint8_t* labels) {
    NcPartition p;
    p.n_ = static_cast<std::uint8_t>(n);
    int blocks = 0;
    for (int i = 0; i < n; ++i) {
      p.label_[static_cast<std::size_t>(i)] = labels[i];
      blocks = std::max(blocks, labels[i] + 1);
    }
    p.num_blocks_ = static_cast<std::uint8_t>(blocks);
    return p;
  }
};

namespace {

void check_size(int n) {
  if (n < 0 || n > kMaxGroundSize) {
    throw CapacityError("ground set size " + std::to_string(n) + " outside [0, " +
                        std::to_string(kMaxGroundSize) + "]");
  }
}

// Renumbers labels so blocks are numbered by first occurrence.
std::array<std::uint8_t, kMaxGroundSize> normalize(std::span<const int> labels, int& blocks) {
  std::array<std::uint8_t, kMaxGroundSize> out{};
  std::map<int, int> renumber;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto [it, inserted] = renumber.try_emplace(labels[i], static_cast<int>(renumber.size()));
    out[i] = static_cast<std::uint8_t>(it->second);
  }
  blocks = static_cast<int>(renumber.size());
  return out;
}

// Stack scan: a block seen again must be the innermost open block.
bool labels_noncrossing(int n, const std::uint8_t* labels) {
  std::array<int, kMaxGroundSize> last{};
  last.fill(-1);
  for (int i = 0; i < n; ++i) last[labels[i]] = i;
  std::array<bool, kMaxGroundSize> seen{};
  std::array<int, kMaxGroundSize> stack{};
  int top = 0;
  for (int i = 0; i < n; ++i) {
    const int b = labels[i];
    if (!seen[static_cast<std::size_t>(b)]) {
      seen[static_cast<std::size_t>(b)] = true;
      stack[static_cast<std::size_t>(top++)] = b;
    } else if (top == 0 || stack[static_cast<std::size_t>(top - 1)] != b) {
      return false;
    }
    if (last[static_cast<std::size_t>(b)] == i) --top;
  }
  return true;
}

std::vector<int> validated_labels(int n, const std::vector<std::vector<int>>& blocks) {
  if (n < 1) throw StructuralError("ground set must be non-empty");
  check_size(n);
  std::vector<int> labels(static_cast<std::size_t>(n), -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw StructuralError("empty block");
    for (int e : blocks[b]) {
      if (e < 1 || e > n) {
        throw StructuralError("element " + std::to_string(e) + " outside [1, " + std::to_string(n) + "]");
      }
      auto& slot = labels[static_cast<std::size_t>(e - 1)];
      if (slot != -1) throw StructuralError("element " + std::to_string(e) + " appears in two blocks");
      slot = static_cast<int>(b);
    }
  }
  for (int i = 0; i < n; ++i) {
    if (labels[static_cast<std::size_t>(i)] == -1) {
      throw StructuralError("element " + std::to_string(i + 1) + " is not covered");
    }
  }
  return labels;
}

// Interleaving test for two disjoint element sets given as bitmasks.
bool masks_cross(std::uint32_t a, std::uint32_t b) {
  int runs = 0;
  int owner = -1;
  for (std::uint32_t rest = a | b; rest != 0; rest &= rest - 1) {
    const std::uint32_t bit = rest & (~rest + 1);
    const int o = (a & bit) ? 0 : 1;
    if (o != owner) {
      owner = o;
      if (++runs >= 4) return true;
    }
  }
  return false;
}

std::uint32_t block_mask(const NcPartition& p, int block) {
  std::uint32_t mask = 0;
  for (int i = 0; i < p.size(); ++i) {
    if (p.label(i) == block) mask |= 1U << static_cast<unsigned>(i);
  }
  return mask;
}

NcPartition from_masks(int n, const std::vector<std::uint32_t>& groups) {
  std::vector<int> labels(static_cast<std::size_t>(n));
  for (std::size_t g = 0; g < groups.size(); ++g) {
    for (int i = 0; i < n; ++i) {
      if (groups[g] & (1U << static_cast<unsigned>(i))) labels[static_cast<std::size_t>(i)] = static_cast<int>(g);
    }
  }
  return NcPartition::from_labels(labels);
}

// ---- enumeration -----------------------------------------------------------

using Labels = std::array<std::uint8_t, kMaxGroundSize>;

struct FirstBlock {
  std::vector<int> members;            // 0-based, ascending, starts with 0
  std::vector<std::pair<int, int>> gaps;  // [start, length]
  std::uint64_t count = 1;
};

void collect_first_blocks(int n, std::vector<int>& current, std::vector<FirstBlock>& out) {
  FirstBlock fb;
  fb.members = current;
  for (std::size_t j = 0; j < current.size(); ++j) {
    const int start = current[j] + 1;
    const int stop = j + 1 < current.size() ? current[j + 1] : n;
    fb.gaps.emplace_back(start, stop - start);
    fb.count *= catalan(stop - start);
  }
  out.push_back(std::move(fb));
  for (int next = current.back() + 1; next < n; ++next) {
    current.push_back(next);
    collect_first_blocks(n, current, out);
    current.pop_back();
  }
}

// Writes every partition with the given first block, in canonical order.
void fill_first_block(int n, const FirstBlock& fb, const std::vector<std::vector<NcPartition>>& smaller,
                      NcPartition* out) {
  const std::size_t g = fb.gaps.size();
  std::vector<std::size_t> digit(g, 0);
  std::uint8_t labels[kMaxGroundSize];
  for (std::uint64_t produced = 0; produced < fb.count; ++produced) {
    for (int m : fb.members) labels[m] = 0;
    int next_label = 1;
    for (std::size_t j = 0; j < g; ++j) {
      const auto [start, len] = fb.gaps[j];
      if (len == 0) continue;
      const NcPartition& sub = smaller[static_cast<std::size_t>(len)][digit[j]];
      for (int i = 0; i < len; ++i) labels[start + i] = static_cast<std::uint8_t>(next_label + sub.label(i));
      next_label += sub.num_blocks();
    }
    out[produced] = NcBuilder::make(n, labels);
    // odometer, last gap fastest
    for (std::size_t j = g; j-- > 0;) {
      const int len = fb.gaps[j].second;
      if (len == 0) continue;
      if (++digit[j] < smaller[static_cast<std::size_t>(len)].size()) break;
      digit[j] = 0;
    }
  }
}

std::vector<NcPartition> build_level(int n, const std::vector<std::vector<NcPartition>>& smaller, Execution exec) {
  std::vector<FirstBlock> firsts;
  std::vector<int> current{0};
  collect_first_blocks(n, current, firsts);
  std::vector<std::uint64_t> offset(firsts.size() + 1, 0);
  for (std::size_t i = 0; i < firsts.size(); ++i) offset[i + 1] = offset[i] + firsts[i].count;
  std::vector<NcPartition> result(offset.back());
  const auto count = static_cast<std::int64_t>(firsts.size());
  const bool parallel = exec == Execution::parallel;
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (std::int64_t i = 0; i < count; ++i) {
    const auto k = static_cast<std::size_t>(i);
    fill_first_block(n, firsts[k], smaller, result.data() + offset[k]);
  }
  return result;
}

// ---- Mobius cache ----------------------------------------------------------

class MobiusCache {
 public:
  std::int64_t to_one(const NcPartition& pi) {
    if (pi.num_blocks() == 1) return 1;
    {
      std::shared_lock lock(mutex_);
      if (auto it = values_.find(pi); it != values_.end()) return it->second;
    }
    // mu(pi, 1) = -sum_{pi <= rho < 1} mu(pi, rho), each interval [pi, rho]
    // factored over the blocks of rho.
    std::int64_t total = 0;
    for (const NcPartition& rho : upper_set(pi)) {
      if (rho.num_blocks() == 1) continue;
      total += interval(pi, rho);
    }
    const std::int64_t value = -total;
    std::unique_lock lock(mutex_);
    values_.emplace(pi, value);
    return value;
  }

  std::int64_t interval(const NcPartition& pi, const NcPartition& sigma) {
    std::int64_t product = 1;
    for (const auto& block : sigma.positions()) {
      product *= to_one(pi.restrict_to(block));
      if (product == 0) break;
    }
    return product;
  }

 private:
  std::shared_mutex mutex_;
  std::unordered_map<NcPartition, std::int64_t, NcPartitionHash> values_;
};

MobiusCache& mobius_cache() {
  static MobiusCache cache;
  return cache;
}

}  // namespace

int order_cap() {
  if (const char* env = std::getenv("FPT_ORDER_CAP")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= kMaxGroundSize) return static_cast<int>(v);
  }
  return kDefaultOrderCap;
}

NcPartition NcPartition::from_blocks(int n, const std::vector<std::vector<int>>& blocks) {
  return from_labels(validated_labels(n, blocks));
}

NcPartition NcPartition::from_labels(std::span<const int> labels) {
  const int n = static_cast<int>(labels.size());
  check_size(n);
  int blocks = 0;
  const auto normalized = normalize(labels, blocks);
  if (!labels_noncrossing(n, normalized.data())) throw StructuralError("partition is crossing");
  return NcBuilder::make(n, normalized.data());
}

NcPartition NcPartition::zero(int n) {
  check_size(n);
  std::uint8_t labels[kMaxGroundSize];
  for (int i = 0; i < n; ++i) labels[i] = static_cast<std::uint8_t>(i);
  return NcBuilder::make(n, labels);
}

NcPartition NcPartition::one(int n) {
  check_size(n);
  std::uint8_t labels[kMaxGroundSize] = {};
  return NcBuilder::make(n, labels);
}

std::vector<std::vector<int>> NcPartition::positions() const {
  std::vector<std::vector<int>> out(num_blocks_);
  for (int i = 0; i < n_; ++i) out[label_[static_cast<std::size_t>(i)]].push_back(i);
  return out;
}

std::vector<std::vector<int>> NcPartition::blocks() const {
  auto out = positions();
  for (auto& b : out) {
    for (int& e : b) ++e;
  }
  return out;
}

NcPartition NcPartition::restrict_to(std::span<const int> subset) const {
  std::uint8_t labels[kMaxGroundSize];
  std::array<int, kMaxGroundSize> renumber;
  renumber.fill(-1);
  int next = 0;
  for (std::size_t i = 0; i < subset.size(); ++i) {
    auto& r = renumber[label_[static_cast<std::size_t>(subset[i])]];
    if (r == -1) r = next++;
    labels[i] = static_cast<std::uint8_t>(r);
  }
  return NcBuilder::make(static_cast<int>(subset.size()), labels);
}

std::string NcPartition::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first_block = true;
  for (const auto& b : blocks()) {
    if (!first_block) os << ',';
    first_block = false;
    os << '{';
    for (std::size_t i = 0; i < b.size(); ++i) os << (i ? "," : "") << b[i];
    os << '}';
  }
  os << '}';
  return os.str();
}

bool operator<(const NcPartition& a, const NcPartition& b) {
  // Flattened serialization with 0 as the block terminator; 0 sorts below any element.
  auto key = [](const NcPartition& p) {
    std::array<std::uint8_t, 2 * kMaxGroundSize + 1> k{};
    std::size_t pos = 0;
    for (const auto& block : p.blocks()) {
      for (int e : block) k[pos++] = static_cast<std::uint8_t>(e);
      k[pos++] = 0;
    }
    return std::make_pair(k, pos);
  };
  const auto [ka, la] = key(a);
  const auto [kb, lb] = key(b);
  return std::lexicographical_compare(ka.begin(), ka.begin() + static_cast<std::ptrdiff_t>(la), kb.begin(),
                                      kb.begin() + static_cast<std::ptrdiff_t>(lb));
}

std::size_t NcPartition::hash() const {
  std::uint64_t h = 1469598103934665603ULL ^ n_;
  for (int i = 0; i < n_; ++i) {
    h ^= label_[static_cast<std::size_t>(i)];
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

std::uint64_t catalan(int n) {
  if (n < 0) return 0;
  std::uint64_t c = 1;
  for (int i = 0; i < n; ++i) c = c * 2 * static_cast<std::uint64_t>(2 * i + 1) / static_cast<std::uint64_t>(i + 2);
  return c;
}

bool is_noncrossing(int n, const std::vector<std::vector<int>>& blocks) {
  const auto labels = validated_labels(n, blocks);
  int count = 0;
  const auto normalized = normalize(labels, count);
  return labels_noncrossing(n, normalized.data());
}

std::vector<NcPartition> enumerate_nc(int n, Execution exec) {
  if (n < 1) throw ValidationError("enumerate_nc requires n >= 1");
  if (n > order_cap()) {
    throw CapacityError("n = " + std::to_string(n) + " exceeds the order cap " + std::to_string(order_cap()));
  }
  std::vector<std::vector<NcPartition>> levels(static_cast<std::size_t>(n) + 1);
  levels[0].emplace_back();
  for (int m = 1; m <= n; ++m) levels[static_cast<std::size_t>(m)] = build_level(m, levels, exec);
  return std::move(levels[static_cast<std::size_t>(n)]);
}

bool leq(const NcPartition& pi, const NcPartition& sigma) {
  if (pi.size() != sigma.size()) throw StructuralError("leq: partitions of different ground sets");
  std::array<int, kMaxGroundSize> image;
  image.fill(-1);
  for (int i = 0; i < pi.size(); ++i) {
    auto& target = image[static_cast<std::size_t>(pi.label(i))];
    if (target == -1) {
      target = sigma.label(i);
    } else if (target != sigma.label(i)) {
      return false;
    }
  }
  return true;
}

NcPartition join(const NcPartition& pi, const NcPartition& sigma) {
  if (pi.size() != sigma.size()) throw StructuralError("join: partitions of different ground sets");
  const int n = pi.size();
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  auto unite = [&](int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); };
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (pi.label(i) == pi.label(j) || sigma.label(i) == sigma.label(j)) unite(i, j);
    }
  }
  // Close under merging of crossing blocks.
  std::vector<std::uint32_t> groups;
  {
    std::map<int, std::uint32_t> by_root;
    for (int i = 0; i < n; ++i) by_root[find(i)] |= 1U << static_cast<unsigned>(i);
    for (const auto& [root, mask] : by_root) groups.push_back(mask);
  }
  for (bool merged = true; merged;) {
    merged = false;
    for (std::size_t a = 0; a < groups.size() && !merged; ++a) {
      for (std::size_t b = a + 1; b < groups.size() && !merged; ++b) {
        if (masks_cross(groups[a], groups[b])) {
          groups[a] |= groups[b];
          groups.erase(groups.begin() + static_cast<std::ptrdiff_t>(b));
          merged = true;
        }
      }
    }
  }
  return from_masks(n, groups);
}

std::vector<NcPartition> upper_set(const NcPartition& pi) {
  const int n = pi.size();
  const int r = pi.num_blocks();
  std::vector<std::uint32_t> block(static_cast<std::size_t>(r));
  for (int b = 0; b < r; ++b) block[static_cast<std::size_t>(b)] = block_mask(pi, b);

  std::vector<NcPartition> out;
  std::vector<std::uint32_t> groups;
  // Blocks are assigned to groups in order of their minimum; a crossing in a
  // partial assignment survives every extension, so it prunes the branch.
  auto recurse = [&](auto&& self, int j) -> void {
    if (j == r) {
      out.push_back(from_masks(n, groups));
      return;
    }
    const std::uint32_t bm = block[static_cast<std::size_t>(j)];
    for (std::size_t g = 0; g <= groups.size(); ++g) {
      const bool fresh = g == groups.size();
      const std::uint32_t merged = fresh ? bm : (groups[g] | bm);
      bool ok = true;
      for (std::size_t h = 0; h < groups.size() && ok; ++h) {
        if (h != g && masks_cross(merged, groups[h])) ok = false;
      }
      if (!ok) continue;
      if (fresh) {
        groups.push_back(merged);
        self(self, j + 1);
        groups.pop_back();
      } else {
        const std::uint32_t saved = groups[g];
        groups[g] = merged;
        self(self, j + 1);
        groups[g] = saved;
      }
    }
  };
  recurse(recurse, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t mobius(const NcPartition& pi, const NcPartition& sigma) {
  if (!leq(pi, sigma)) {
    throw DomainError("mobius: " + pi.to_string() + " is not below " + sigma.to_string());
  }
  return mobius_cache().interval(pi, sigma);
}

const PartitionTable& partition_table(int n, bool with_mobius) {
  static std::mutex mutex;
  static std::map<std::pair<int, bool>, std::unique_ptr<PartitionTable>> tables;
  const auto key = std::make_pair(n, with_mobius);
  {
    std::lock_guard lock(mutex);
    if (auto it = tables.find(key); it != tables.end()) return *it->second;
  }
  auto table = std::make_unique<PartitionTable>();
  table->n = n;
  if (n == 0) {
    table->partitions.emplace_back();
    table->mobius_to_one.push_back(1);
    table->block_offset = {0, 0};
    table->block_start = {0};
  } else {
    table->partitions = enumerate_nc(n);
    if (with_mobius) {
      const auto count = static_cast<std::int64_t>(table->partitions.size());
      table->mobius_to_one.resize(table->partitions.size());
#pragma omp parallel for schedule(dynamic)
      for (std::int64_t p = 0; p < count; ++p) {
        const auto& pi = table->partitions[static_cast<std::size_t>(p)];
        table->mobius_to_one[static_cast<std::size_t>(p)] = mobius(pi, NcPartition::one(n));
      }
    }
    table->block_offset.push_back(0);
    table->block_start.push_back(0);
    for (const auto& pi : table->partitions) {
      for (const auto& block : pi.positions()) {
        for (int e : block) table->positions.push_back(static_cast<std::uint8_t>(e));
        table->block_start.push_back(static_cast<std::uint32_t>(table->positions.size()));
      }
      table->block_offset.push_back(static_cast<std::uint32_t>(table->block_start.size() - 1));
    }
  }
  std::lock_guard lock(mutex);
  auto [it, inserted] = tables.emplace(key, std::move(table));
  return *it->second;
}

}  // namespace fpt
