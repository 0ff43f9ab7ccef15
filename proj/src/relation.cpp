#include "yf/relation.hpp"

#include <stdexcept>

#include "yf/errors.hpp"

namespace yf::fol {

std::uint64_t relation_bytes(const Universe& U, std::uint64_t rows) {
  return rows * ((U.size() + 63) / 64) * 8;
}

bool Relation::covers(std::span<const Id> ids) const {
  for (std::size_t i = 0; i + 1 < arity_; ++i) {
    const auto x = static_cast<std::size_t>(ids[i]);
    if (x >= slot_of_[i].size() || slot_of_[i][x] < 0) return false;
  }
  return true;
}

std::size_t Relation::row_index(std::span<const Id> ids) const {
  if (ids.size() != arity_) throw std::invalid_argument(name_ + ": wrong number of arguments");
  if (!covers(ids)) throw std::out_of_range(name_ + ": tuple outside the materialized domain");
  std::size_t r = 0;
  for (std::size_t i = 0; i + 1 < arity_; ++i) {
    r = r * prefix_ids_[i].size() + static_cast<std::size_t>(slot_of_[i][static_cast<std::size_t>(ids[i])]);
  }
  return r;
}

bool Relation::contains(std::span<const Id> ids) const {
  const std::size_t r = row_index(ids);
  return rows_[r].test(static_cast<std::size_t>(ids[arity_ - 1]));
}

bool Relation::contains(std::span<const Word> args) const {
  std::vector<Id> ids;
  for (const Word& w : args) {
    auto id = universe_->find(w);
    if (!id) throw RankOverflow("word " + w.display() + " is outside U_" + std::to_string(universe_->max_rank()));
    ids.push_back(*id);
  }
  return contains(ids);
}

std::uint64_t Relation::count() const {
  std::uint64_t c = 0;
  for (const auto& r : rows_) c += r.count();
  return c;
}

std::vector<std::vector<Word>> Relation::tuples() const {
  std::vector<std::vector<Word>> out;
  std::vector<std::size_t> idx(arity_ - 1, 0);
  for (const Bitset& row : rows_) {
    for (std::size_t x = 0; x < row.size(); ++x) {
      if (!row.test(x)) continue;
      std::vector<Word> t;
      for (std::size_t i = 0; i + 1 < arity_; ++i) t.push_back(universe_->word(prefix_ids_[i][idx[i]]));
      t.push_back(universe_->word(static_cast<Id>(x)));
      out.push_back(std::move(t));
    }
    // odometer over the prefix
    for (std::size_t i = arity_ - 1; i-- > 0;) {
      if (++idx[i] < prefix_ids_[i].size()) break;
      idx[i] = 0;
    }
  }
  return out;
}

std::uint64_t Relation::bytes() const { return relation_bytes(*universe_, rows_.size()); }

Relation materialize(const Universe& U, const DefinitionSet& defs, std::string_view name,
                     const MaterializeOptions& options) {
  const Definition* d = defs.find(name);
  if (!d) throw DefinitionError("unknown definition '" + std::string(name) + "'");
  const std::size_t k = d->params.size();
  if (k == 0) throw std::invalid_argument("cannot materialize a nullary definition");
  if (!options.domain.empty() && options.domain.size() != k - 1) {
    throw std::invalid_argument("domain must list words for the first " + std::to_string(k - 1) + " positions");
  }

  Relation rel;
  rel.universe_ = &U;
  rel.name_ = d->name;
  rel.arity_ = k;
  std::uint64_t rows = 1;
  for (std::size_t i = 0; i + 1 < k; ++i) {
    std::vector<Id> ids;
    if (options.domain.empty()) {
      for (std::size_t x = 0; x < U.size(); ++x) ids.push_back(static_cast<Id>(x));
    } else {
      for (const Word& w : options.domain[i]) {
        auto id = U.find(w);
        if (!id) throw RankOverflow("domain word " + w.display() + " is outside U_" + std::to_string(U.max_rank()));
        ids.push_back(*id);
      }
    }
    rows *= ids.size();
    rel.prefix_ids_.push_back(std::move(ids));
  }
  const std::uint64_t need = relation_bytes(U, rows);
  if (need > options.memory_budget) {
    throw CapacityError("materializing " + rel.name_ + " over U_" + std::to_string(U.max_rank()) + " needs " +
                        std::to_string(need) + " bytes, budget is " + std::to_string(options.memory_budget));
  }
  for (const auto& ids : rel.prefix_ids_) {
    std::vector<std::int64_t> slot(U.size(), -1);
    for (std::size_t j = 0; j < ids.size(); ++j) slot[static_cast<std::size_t>(ids[j])] = static_cast<std::int64_t>(j);
    rel.slot_of_.push_back(std::move(slot));
  }

  const std::size_t def = defs.index_of(name);
  Evaluator ev(U, defs, options.strategy, options.budget);
  rel.rows_.reserve(rows);
  std::vector<std::size_t> idx(k - 1, 0);
  std::vector<Id> args(k, 0);
  for (std::uint64_t r = 0; r < rows; ++r) {
    for (std::size_t i = 0; i + 1 < k; ++i) args[i] = rel.prefix_ids_[i][idx[i]];
    rel.rows_.push_back(ev.extension(def, k - 1, args));
    for (std::size_t i = k - 1; i-- > 0;) {
      if (++idx[i] < rel.prefix_ids_[i].size()) break;
      idx[i] = 0;
    }
  }
  return rel;
}

}  // namespace yf::fol
