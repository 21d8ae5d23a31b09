#include "fpt/reference.hpp"

#include <algorithm>
#include <functional>

namespace fpt::reference {

namespace {

bool crossing(const Blocks& blocks) {
  for (std::size_t a = 0; a < blocks.size(); ++a) {
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (a == b) continue;
      for (int p1 : blocks[a]) {
        for (int p2 : blocks[a]) {
          for (int q1 : blocks[b]) {
            for (int q2 : blocks[b]) {
              if (p1 < q1 && q1 < p2 && p2 < q2) return true;
            }
          }
        }
      }
    }
  }
  return false;
}

Word pick(const Word& w, const std::vector<int>& positions) {
  Word out;
  for (int p : positions) out.push_back(w[static_cast<std::size_t>(p)]);
  return out;
}

}  // namespace

std::vector<Blocks> noncrossing_partitions(int n) {
  std::vector<Blocks> out;
  std::vector<int> labels(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int i, int used) {
    if (i == n) {
      Blocks blocks(static_cast<std::size_t>(used));
      for (int j = 0; j < n; ++j) blocks[static_cast<std::size_t>(labels[static_cast<std::size_t>(j)])].push_back(j);
      if (!crossing(blocks)) out.push_back(std::move(blocks));
      return;
    }
    for (int l = 0; l <= used; ++l) {
      labels[static_cast<std::size_t>(i)] = l;
      rec(i + 1, std::max(used, l + 1));
    }
  };
  rec(0, 0);
  // 1-based lexicographic order equals 0-based lexicographic order here.
  std::sort(out.begin(), out.end());
  return out;
}

bool refines(const Blocks& pi, const Blocks& sigma) {
  for (const auto& b : pi) {
    bool contained = false;
    for (const auto& c : sigma) {
      if (std::includes(c.begin(), c.end(), b.begin(), b.end())) {
        contained = true;
        break;
      }
    }
    if (!contained) return false;
  }
  return true;
}

std::map<std::pair<Blocks, Blocks>, std::int64_t> mobius_table(int n) {
  auto all = noncrossing_partitions(n);
  // Linear extension: more blocks first (finer partitions come earlier).
  std::stable_sort(all.begin(), all.end(), [](const Blocks& a, const Blocks& b) { return a.size() > b.size(); });
  std::map<std::pair<Blocks, Blocks>, std::int64_t> mu;
  for (const auto& pi : all) {
    for (const auto& sigma : all) {
      if (!refines(pi, sigma)) continue;
      if (pi == sigma) {
        mu[{pi, sigma}] = 1;
        continue;
      }
      std::int64_t sum = 0;
      for (const auto& rho : all) {
        if (rho != sigma && refines(pi, rho) && refines(rho, sigma)) sum += mu.at({pi, rho});
      }
      mu[{pi, sigma}] = -sum;
    }
  }
  return mu;
}

MomentFunctional cumulants_to_moments(const CumulantFunctional& cf) {
  MomentFunctional mf(cf.alphabet(), cf.order());
  for (int n = 1; n <= cf.order(); ++n) {
    const auto parts = noncrossing_partitions(n);
    for (const Word& w : all_words(cf.letters(), n)) {
      Rational sum = 0;
      for (const auto& pi : parts) {
        Rational prod = 1;
        for (const auto& block : pi) prod *= cf.at(pick(w, block));
        sum += prod;
      }
      mf.at(w) = sum;
    }
  }
  return mf;
}

CumulantFunctional moments_to_cumulants(const MomentFunctional& mf) {
  CumulantFunctional cf(mf.alphabet(), mf.order());
  for (int n = 1; n <= mf.order(); ++n) {
    const auto parts = noncrossing_partitions(n);
    const auto mu = mobius_table(n);
    const Blocks one{[n] {
      std::vector<int> all(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
      return all;
    }()};
    for (const Word& w : all_words(mf.letters(), n)) {
      Rational sum = 0;
      for (const auto& pi : parts) {
        Rational prod = 1;
        for (const auto& block : pi) prod *= mf.at(pick(w, block));
        sum += prod * static_cast<long>(mu.at({pi, one}));
      }
      cf.at(w) = sum;
    }
  }
  return cf;
}

Rational moment_by_first_block(const CumulantFunctional& cf, const Word& word) {
  if (word.empty()) return 1;
  const int n = static_cast<int>(word.size());
  Rational total = 0;
  // V = {0} union S, S a subset of {1..n-1}
  for (std::uint32_t s = 0; s < (1U << static_cast<unsigned>(n - 1)); ++s) {
    std::vector<int> v{0};
    for (int i = 1; i < n; ++i) {
      if (s & (1U << static_cast<unsigned>(i - 1))) v.push_back(i);
    }
    Rational term = cf.at(pick(word, v));
    for (std::size_t j = 0; j < v.size() && sgn(term) != 0; ++j) {
      const int start = v[j] + 1;
      const int stop = j + 1 < v.size() ? v[j + 1] : n;
      if (stop > start) term *= moment_by_first_block(cf, Word(word.begin() + start, word.begin() + stop));
    }
    total += term;
  }
  return total;
}

}  // namespace fpt::reference
