#include "ncprob/partitions.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <string>

namespace ncprob {

SetPartition::SetPartition(int n, std::vector<std::vector<int>> blocks)
    : n_(n), blocks_(std::move(blocks)) {
  if (n_ < 1) throw std::invalid_argument("partition ground set must be nonempty");
  std::vector<char> seen(static_cast<std::size_t>(n_), 0);
  std::size_t total = 0;
  for (auto& b : blocks_) {
    if (b.empty()) throw std::invalid_argument("partition block must be nonempty");
    std::sort(b.begin(), b.end());
    for (int x : b) {
      if (x < 1 || x > n_) throw std::invalid_argument("partition element out of range");
      if (seen[static_cast<std::size_t>(x - 1)])
        throw std::invalid_argument("partition blocks must be disjoint");
      seen[static_cast<std::size_t>(x - 1)] = 1;
    }
    total += b.size();
  }
  if (total != static_cast<std::size_t>(n_))
    throw std::invalid_argument("partition blocks must cover the ground set");
  std::sort(blocks_.begin(), blocks_.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

SetPartition SetPartition::singletons(int n) {
  std::vector<std::vector<int>> bs;
  bs.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) bs.push_back({i});
  return SetPartition(n, std::move(bs));
}

SetPartition SetPartition::full(int n) {
  std::vector<int> b(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) b[static_cast<std::size_t>(i)] = i + 1;
  return SetPartition(n, {std::move(b)});
}

std::vector<int> SetPartition::block_index() const {
  std::vector<int> idx(static_cast<std::size_t>(n_), -1);
  for (std::size_t bi = 0; bi < blocks_.size(); ++bi) {
    for (int x : blocks_[bi]) idx[static_cast<std::size_t>(x - 1)] = static_cast<int>(bi);
  }
  return idx;
}

bool operator<(const SetPartition& a, const SetPartition& b) {
  return a.blocks_ < b.blocks_;
}

void for_each_interval_partition(int n, const PartitionVisitor& visit) {
  if (n < 1) throw std::invalid_argument("interval partition enumeration needs n >= 1");
  std::vector<std::vector<int>> acc;
  // DFS over compositions of n, first part smallest: lexicographic order.
  std::function<void(int)> rec = [&](int start) {
    if (start > n) {
      visit(SetPartition(n, acc));
      return;
    }
    for (int len = 1; start + len - 1 <= n; ++len) {
      std::vector<int> block;
      block.reserve(static_cast<std::size_t>(len));
      for (int i = 0; i < len; ++i) block.push_back(start + i);
      acc.push_back(std::move(block));
      rec(start + len);
      acc.pop_back();
    }
  };
  rec(1);
}

std::vector<SetPartition> interval_partitions(int n) {
  std::vector<SetPartition> out;
  for_each_interval_partition(n, [&](const SetPartition& p) { out.push_back(p); });
  return out;
}

namespace {

// Non-crossing partitions of a sorted index sequence. The block of the
// minimum is chosen as an increasing subsequence; the remaining elements
// split into the gaps between consecutive chosen elements, and blocks of
// later elements cannot straddle a gap boundary without crossing the chosen
// block. Visiting "use block, then extend it" yields exactly the canonical
// (lexicographic block sequence) order.
struct NcEnumerator {
  std::vector<std::vector<int>> acc;

  void partitions_of(const std::vector<int>& seq, const std::function<void()>& done) {
    if (seq.empty()) {
      done();
      return;
    }
    std::vector<int> block{seq[0]};
    choose(seq, block, 1, done);
  }

  void choose(const std::vector<int>& seq, std::vector<int>& block, std::size_t next,
              const std::function<void()>& done) {
    // use the current block
    std::vector<std::vector<int>> gaps;
    {
      std::size_t bi = 1;  // block[0] == seq[0]
      std::vector<int> gap;
      for (std::size_t i = 1; i < seq.size(); ++i) {
        if (bi < block.size() && seq[i] == block[bi]) {
          gaps.push_back(std::move(gap));
          gap.clear();
          ++bi;
        } else {
          gap.push_back(seq[i]);
        }
      }
      gaps.push_back(std::move(gap));
    }
    acc.push_back(block);
    gap_product(gaps, 0, done);
    acc.pop_back();
    // extend the block with each later element
    for (std::size_t j = next; j < seq.size(); ++j) {
      block.push_back(seq[j]);
      choose(seq, block, j + 1, done);
      block.pop_back();
    }
  }

  void gap_product(const std::vector<std::vector<int>>& gaps, std::size_t idx,
                   const std::function<void()>& done) {
    if (idx == gaps.size()) {
      done();
      return;
    }
    partitions_of(gaps[idx], [&] { gap_product(gaps, idx + 1, done); });
  }
};

}  // namespace

void for_each_noncrossing_partition(int n, const PartitionVisitor& visit, int cap) {
  if (n < 1) throw std::invalid_argument("non-crossing enumeration needs n >= 1");
  if (n > cap) {
    throw OracleCapExceeded("oracle size exceeded: n=" + std::to_string(n) +
                            " > cap " + std::to_string(cap));
  }
  NcEnumerator e;
  std::vector<int> seq(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) seq[static_cast<std::size_t>(i)] = i + 1;
  e.partitions_of(seq, [&] { visit(SetPartition(n, e.acc)); });
}

const std::vector<SetPartition>& noncrossing_partitions(int n, int cap) {
  if (n > cap) {
    throw OracleCapExceeded("oracle size exceeded: n=" + std::to_string(n) + " > cap " +
                            std::to_string(cap));
  }
  static std::mutex mu;
  static std::map<int, std::vector<SetPartition>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<SetPartition> out;
  for_each_noncrossing_partition(n, [&](const SetPartition& p) { out.push_back(p); }, cap);
  return cache.emplace(n, std::move(out)).first->second;
}

std::vector<SetPartition> noncrossing_even_partitions(int n, int cap) {
  std::vector<SetPartition> out;
  for_each_noncrossing_partition(
      n,
      [&](const SetPartition& p) {
        if (has_even_blocks(p)) out.push_back(p);
      },
      cap);
  return out;
}

bool is_noncrossing(const SetPartition& p) {
  const int n = p.ground_size();
  const std::vector<int> id = p.block_index();
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c)
        for (int d = c + 1; d <= n; ++d) {
          if (id[a - 1] == id[c - 1] && id[b - 1] == id[d - 1] && id[a - 1] != id[b - 1])
            return false;
        }
  return true;
}

bool is_interval_partition(const SetPartition& p) {
  for (const auto& b : p.blocks()) {
    if (b.back() - b.front() + 1 != static_cast<int>(b.size())) return false;
  }
  return true;
}

bool has_even_blocks(const SetPartition& p) {
  for (const auto& b : p.blocks()) {
    if (b.size() % 2 != 0) return false;
  }
  return true;
}

SetPartition rotate_inverse(const SetPartition& p) {
  const int n = p.ground_size();
  std::vector<std::vector<int>> bs;
  bs.reserve(p.block_count());
  for (const auto& b : p.blocks()) {
    std::vector<int> nb;
    nb.reserve(b.size());
    for (int x : b) nb.push_back(x == 1 ? n : x - 1);
    bs.push_back(std::move(nb));
  }
  return SetPartition(n, std::move(bs));
}

SetPartition double_partition(const SetPartition& p) {
  if (!is_interval_partition(p)) {
    throw std::invalid_argument("double_partition requires an interval partition");
  }
  std::vector<std::vector<int>> bs;
  int start = 1;
  for (const auto& b : p.blocks()) {  // already ordered by minima = increasing runs
    int len = 2 * static_cast<int>(b.size());
    std::vector<int> nb;
    nb.reserve(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i) nb.push_back(start + i);
    start += len;
    bs.push_back(std::move(nb));
  }
  return SetPartition(2 * p.ground_size(), std::move(bs));
}

bool coarser_than(const SetPartition& p, const SetPartition& q) {
  if (p.ground_size() != q.ground_size()) {
    throw std::invalid_argument("partitions compare only over the same ground set");
  }
  const std::vector<int> qid = q.block_index();
  for (const auto& b : p.blocks()) {
    const int want = qid[static_cast<std::size_t>(b.front() - 1)];
    for (int x : b) {
      if (qid[static_cast<std::size_t>(x - 1)] != want) return false;
    }
  }
  return true;
}

long long catalan_number(int n) {
  if (n < 0) throw std::invalid_argument("catalan_number needs n >= 0");
  long long c = 1;
  for (int k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

}  // namespace ncprob
