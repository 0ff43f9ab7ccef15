#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "yf/bitset.hpp"
#include "yf/errors.hpp"
#include "yf/word.hpp"

namespace yf {

using Id = std::int32_t;

inline constexpr std::size_t kDefaultRankCeiling = 18;

/// How the order matrix is filled.
enum class OrderKernel {
  kParallelLeq,     // OpenMP over rows, one leq() per pair
  kSerialClosure,   // reference: rank-by-rank union of parents' down-sets
};

/// The induced substructure U_N on all words of rank <= N.
///
/// Ids follow rank order, shortlex within a rank. Immutable after build().
class Universe {
 public:
  static Universe build(std::size_t max_rank, std::size_t ceiling = kDefaultRankCeiling,
                        OrderKernel kernel = OrderKernel::kParallelLeq);

  std::size_t max_rank() const noexcept { return max_rank_; }
  std::size_t size() const noexcept { return words_.size(); }
  const std::vector<Word>& words() const noexcept { return words_; }
  const Word& word(Id id) const { return words_[static_cast<std::size_t>(id)]; }
  std::size_t rank_of(Id id) const { return ranks_[static_cast<std::size_t>(id)]; }

  std::optional<Id> find(const Word& w) const;
  /// Throws std::out_of_range naming the word if it is not in U_N.
  Id id(const Word& w) const;

  /// Ids of rank n occupy [rank_begin(n), rank_begin(n+1)).
  Id rank_begin(std::size_t n) const { return rank_offsets_[n]; }
  Id rank_end(std::size_t n) const { return rank_offsets_[n + 1]; }

  bool leq(Id x, Id y) const { return down_[static_cast<std::size_t>(y)].test(static_cast<std::size_t>(x)); }
  /// {x : x <= id}
  const Bitset& down_set(Id id) const { return down_[static_cast<std::size_t>(id)]; }
  /// {y : id <= y}
  const Bitset& up_set(Id id) const { return up_[static_cast<std::size_t>(id)]; }

  std::span<const Id> up_covers(Id id) const { return up_covers_[static_cast<std::size_t>(id)]; }
  std::span<const Id> down_covers(Id id) const { return down_covers_[static_cast<std::size_t>(id)]; }

  /// Cover pairs as "child parent" lines, child first, ordered by child id.
  std::string edge_list() const;

 private:
  std::size_t max_rank_ = 0;
  std::vector<Word> words_;
  std::vector<std::size_t> ranks_;
  std::vector<Id> rank_offsets_;
  std::unordered_map<Word, Id> index_;
  std::vector<Bitset> down_;
  std::vector<Bitset> up_;
  std::vector<std::vector<Id>> up_covers_;
  std::vector<std::vector<Id>> down_covers_;
};

/// |U_N| = F_{N+3} - 1.
std::uint64_t universe_size(std::size_t max_rank);

/// Order kernels. Both return down-set rows: row y holds {x : x <= y}.
namespace kernels {
std::vector<Bitset> down_sets_by_leq(const std::vector<Word>& words);
std::vector<Bitset> down_sets_by_leq_serial(const std::vector<Word>& words);
std::vector<Bitset> down_sets_by_closure(const std::vector<std::vector<Id>>& down_covers);
}  // namespace kernels

/// A rank- and order-preserving permutation of universe ids.
using AutoMap = std::vector<Id>;

/// Every order automorphism of U, identity first, the rest in lexicographic
/// order of the image vector.
std::vector<AutoMap> automorphisms(const Universe& u);

}  // namespace yf
