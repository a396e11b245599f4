#ifndef NCPROB_PARTITIONS_HPP
#define NCPROB_PARTITIONS_HPP

#include <functional>
#include <stdexcept>
#include <vector>

namespace ncprob {

/// Ground-set size above which the enumeration oracles refuse to run.
/// Catalan(14) is about 2.7M partitions; anything larger is not desk scale.
inline constexpr int kDefaultOracleCap = 14;

struct OracleCapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A partition of {1..n} into disjoint nonempty blocks. Canonical form:
/// every block sorted ascending, blocks ordered by their minima. Immutable
/// after construction.
class SetPartition {
 public:
  SetPartition(int n, std::vector<std::vector<int>> blocks);

  static SetPartition singletons(int n);  // 0_n
  static SetPartition full(int n);        // 1_n

  int ground_size() const { return n_; }
  std::size_t block_count() const { return blocks_.size(); }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }

  /// block_index()[i-1] identifies the block containing element i.
  std::vector<int> block_index() const;

  friend bool operator==(const SetPartition& a, const SetPartition& b) {
    return a.n_ == b.n_ && a.blocks_ == b.blocks_;
  }
  friend bool operator!=(const SetPartition& a, const SetPartition& b) { return !(a == b); }
  /// Order induced by comparing the canonical block sequences
  /// lexicographically; this is the enumeration order below.
  friend bool operator<(const SetPartition& a, const SetPartition& b);

 private:
  int n_;
  std::vector<std::vector<int>> blocks_;
};

using PartitionVisitor = std::function<void(const SetPartition&)>;

/// Interval partitions of {1..n}: every block is a run {a,...,b}. Emitted in
/// lexicographic order of the composition of block lengths, e.g. for n=3:
/// 1+1+1, 1+2, 2+1, 3. Count is 2^(n-1).
void for_each_interval_partition(int n, const PartitionVisitor& visit);
std::vector<SetPartition> interval_partitions(int n);

/// Non-crossing partitions of {1..n}, emitted in the canonical order of
/// SetPartition::operator< (lexicographic on block sequences). Count is
/// Catalan(n). Throws OracleCapExceeded for n > cap.
void for_each_noncrossing_partition(int n, const PartitionVisitor& visit,
                                    int cap = kDefaultOracleCap);
/// Cached enumeration; the reference stays valid for the program lifetime.
const std::vector<SetPartition>& noncrossing_partitions(int n, int cap = kDefaultOracleCap);

/// NCE(n): non-crossing partitions all of whose blocks have even size.
std::vector<SetPartition> noncrossing_even_partitions(int n, int cap = kDefaultOracleCap);

/// Crossing test straight from the definition: a<b<c<d with {a,c} and {b,d}
/// in two different blocks.
bool is_noncrossing(const SetPartition& p);

bool is_interval_partition(const SetPartition& p);
bool has_even_blocks(const SetPartition& p);

/// Image of p under the inverse of the cycle 1 -> 2 -> ... -> n -> 1.
SetPartition rotate_inverse(const SetPartition& p);

/// Doubling Int(n) -> Int(2n): intervals in order, each length doubled.
SetPartition double_partition(const SetPartition& p);

/// Reverse-refinement comparison: true iff every block of p is contained in
/// a block of q (p <= q).
bool coarser_than(const SetPartition& p, const SetPartition& q);

long long catalan_number(int n);

}  // namespace ncprob

#endif
