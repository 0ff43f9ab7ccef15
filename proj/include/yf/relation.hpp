#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "yf/bitset.hpp"
#include "yf/eval.hpp"
#include "yf/universe.hpp"

namespace yf::fol {

inline constexpr std::uint64_t kDefaultMemoryBudget = std::uint64_t{256} << 20;  // bytes

struct MaterializeOptions {
  std::uint64_t memory_budget = kDefaultMemoryBudget;
  /// Words allowed at positions 0 .. arity-2; empty means all of U. The
  /// last position is always stored over all of U.
  std::vector<std::vector<Word>> domain;
  Strategy strategy = Strategy::kOptimized;
  Budget budget;
};

/// The extension of a definition as bit rows, one row per prefix tuple.
class Relation {
 public:
  const std::string& name() const noexcept { return name_; }
  std::size_t arity() const noexcept { return arity_; }
  const Universe& universe() const noexcept { return *universe_; }

  /// True when every prefix position lies in the stored sub-domain.
  bool covers(std::span<const Id> ids) const;

  /// Throws std::out_of_range outside the stored sub-domain.
  bool contains(std::span<const Id> ids) const;
  bool contains(std::span<const Word> args) const;

  std::uint64_t count() const;
  /// Members in prefix-major id order.
  std::vector<std::vector<Word>> tuples() const;
  std::uint64_t bytes() const;

 private:
  friend Relation materialize(const Universe&, const DefinitionSet&, std::string_view, const MaterializeOptions&);

  std::size_t row_index(std::span<const Id> ids) const;

  const Universe* universe_ = nullptr;
  std::string name_;
  std::size_t arity_ = 0;
  std::vector<std::vector<Id>> prefix_ids_;         // per prefix position
  std::vector<std::vector<std::int64_t>> slot_of_;  // id -> index in prefix_ids_, or -1
  std::vector<Bitset> rows_;
};

/// Bytes needed for `rows` bit rows over U.
std::uint64_t relation_bytes(const Universe& U, std::uint64_t rows);

/// Throws CapacityError when the rows would exceed options.memory_budget,
/// RankOverflow for a domain word outside U.
Relation materialize(const Universe& U, const DefinitionSet& defs, std::string_view name,
                     const MaterializeOptions& options = {});

}  // namespace yf::fol
