#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string_view>

#include "yf/bitset.hpp"
#include "yf/formula.hpp"
#include "yf/universe.hpp"

namespace yf::fol {

/// How quantifiers and calls are evaluated. All three compute the same
/// Tarski truth value over the truncated universe.
enum class Strategy {
  kNaive,      // pointwise loops over the raw formula, no caching
  kMemoized,   // as kNaive, with a per-session (definition, argument ids) cache
  kOptimized,  // miniscoped NNF, guarded quantifier blocks, cached bit rows
};

std::string_view to_string(Strategy s);

struct Budget {
  std::uint64_t max_steps = 0;           // 0: unlimited
  std::chrono::milliseconds max_time{0};  // 0: unlimited
};

struct EvalStats {
  std::uint64_t calls = 0;      // definition bodies entered
  std::uint64_t memo_hits = 0;
  std::uint64_t steps = 0;      // formula nodes visited
  std::uint64_t rows = 0;       // bit rows materialized

  EvalStats& operator+=(const EvalStats& o) {
    calls += o.calls;
    memo_hits += o.memo_hits;
    steps += o.steps;
    rows += o.rows;
    return *this;
  }
};

/// Thrown when a Budget runs out; never confused with a false result.
class BudgetExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument or literal lies outside the universe.
class RankOverflow : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// One evaluation session over a shared universe and definition set.
///
/// Single-owner: the caches live inside the session. Run one session per
/// worker for concurrent use.
class Evaluator {
 public:
  Evaluator(const Universe& universe, const DefinitionSet& defs, Strategy strategy = Strategy::kOptimized,
            Budget budget = {});
  ~Evaluator();
  Evaluator(Evaluator&&) noexcept;
  Evaluator& operator=(Evaluator&&) noexcept;

  bool holds(std::string_view name, std::span<const Word> args);
  bool holds(std::size_t def, std::span<const Id> args);

  /// {x : def(args[0..pos) , x, args(pos..))}; args[pos] is ignored.
  Bitset extension(std::size_t def, std::size_t pos, std::span<const Id> args);

  const EvalStats& stats() const noexcept;
  const Universe& universe() const noexcept;
  const DefinitionSet& definitions() const noexcept;
  Strategy strategy() const noexcept;

 private:
  class Impl;
  std::unique_ptr<Impl> impl_;
};

struct EvalOutcome {
  bool value = false;
  EvalStats stats;
  std::size_t universe_rank = 0;
};

/// One-shot evaluation of `name` on `args` with quantifiers over all of U.
EvalOutcome evaluate(const Universe& universe, const DefinitionSet& defs, std::string_view name,
                     std::span<const Word> args, Budget budget = {}, Strategy strategy = Strategy::kOptimized);

}  // namespace yf::fol
