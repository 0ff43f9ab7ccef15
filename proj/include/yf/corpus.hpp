#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "yf/eval.hpp"
#include "yf/formula.hpp"
#include "yf/universe.hpp"
#include "yf/word.hpp"

namespace yf::corpus {

/// The bundled definition file (data/corpus.yfl).
std::string_view corpus_text();

/// Parsed corpus definitions, with the default builtins. Parsed once.
const fol::DefinitionSet& corpus_definitions();

/// FNV-1a 64 of the corpus text, as 16 hex digits.
std::string corpus_digest();

using Oracle = std::function<bool(std::span<const Word>)>;

enum class Status { kExpectPass, kFlagged };

std::string_view to_string(Status s);

/// Candidate words for one argument position.
struct Domain {
  enum class Kind { kAll, kOnes };
  Kind kind = Kind::kAll;
  std::size_t rank = 0;  // words of rank <= rank (1^k with k <= rank for kOnes)
  std::function<bool(const Word&)> filter;  // optional extra restriction
  std::string note;                         // shown in reports when filter is set

  static Domain all(std::size_t r) { return Domain{Kind::kAll, r, {}, {}}; }
  static Domain ones(std::size_t r) { return Domain{Kind::kOnes, r, {}, {}}; }

  std::vector<Word> words() const;
  std::string describe() const;
};

struct CorpusEntry {
  int number = 0;
  std::string name;        // registry name (frozen)
  std::string definition;  // name in corpus.yfl
  std::size_t arity = 0;
  std::vector<Domain> domains;
  std::size_t universe_rank = 0;
  std::string margin;  // why universe_rank suffices
  Status status = Status::kExpectPass;
  std::string claim;
  Oracle oracle;    // the set as described
  Oracle semantic;  // flagged entries: what the formula actually says

  /// Largest rank over all argument domains.
  std::size_t tuple_rank() const;
};

const std::vector<CorpusEntry>& registry();

/// Throws std::out_of_range for an unknown name.
const CorpusEntry& find_entry(std::string_view name);

bool oracle_eval(const CorpusEntry& entry, std::span<const Word> tuple);

// ---- combinatorial oracles shared with tests ----
namespace oracles {
bool is_ones(const Word& w);
bool in_S(std::size_t n, const Word& v);
bool in_T(std::size_t n, std::size_t m, const Word& w);
bool in_T_prime(std::size_t n, std::size_t m, const Word& w);
bool in_R(std::size_t n, std::size_t m, const Word& w);
Word R_max(std::size_t n, std::size_t m);
/// All words x <= w, by walking parents.
std::vector<Word> down_closure(const Word& w);
/// Remove the maximal leading run of 1s.
Word strip_ones_prefix(const Word& w);
}  // namespace oracles

// ---- verification ----

struct Mismatch {
  std::vector<Word> tuple;
  bool formula = false;
  bool oracle = false;
};

struct EntryReport {
  int number = 0;
  std::string entry;
  std::string definition;
  Status status = Status::kExpectPass;
  std::size_t universe_rank = 0;
  std::size_t tuple_rank = 0;
  std::vector<std::string> domains;
  std::uint64_t checked = 0;
  std::vector<Mismatch> mismatches;           // against the described set
  std::vector<Mismatch> semantic_mismatches;  // flagged entries only
  std::uint64_t exhausted = 0;                // tuples lost to the budget
  fol::EvalStats eval;
  std::optional<std::size_t> margin_rank;     // set when the N+1 re-run happened
  std::uint64_t margin_changed = 0;           // tuples whose value moved at N+1
  double duration_ms = 0;

  /// "pass", "fail", "flagged", "budget-exhausted" or "unstable".
  std::string outcome() const;
  bool ok() const;
};

struct VerifyOptions {
  std::optional<std::size_t> universe_rank;  // override N
  std::optional<std::size_t> tuple_rank;     // override every domain's rank
  std::size_t workers = 1;
  std::size_t chunks = 4;  // work split; fixed so stats do not depend on workers
  bool margin = false;     // re-run at N+1
  fol::Strategy strategy = fol::Strategy::kOptimized;
  fol::Budget budget;      // per chunk
  std::size_t rank_ceiling = kDefaultRankCeiling;
};

/// Shared, lazily built universes.
class UniverseCache {
 public:
  explicit UniverseCache(std::size_t ceiling = kDefaultRankCeiling) : ceiling_(ceiling) {}
  const Universe& get(std::size_t rank);

 private:
  std::size_t ceiling_;
  std::map<std::size_t, std::unique_ptr<Universe>> cache_;
};

EntryReport verify_entry(const CorpusEntry& entry, const VerifyOptions& options, UniverseCache& cache);
EntryReport verify_entry(const CorpusEntry& entry, const VerifyOptions& options = {});

struct VerificationReport {
  std::string digest;
  std::vector<EntryReport> entries;
  std::map<std::size_t, std::size_t> universe_sizes;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t flagged = 0;

  /// True when no expect-pass entry failed.
  bool ok() const { return failed == 0; }
};

/// Entries whose registry or definition name contains `filter` (all if empty).
std::vector<const CorpusEntry*> select(std::string_view filter);

VerificationReport verify_all(std::string_view filter, const VerifyOptions& options = {});

/// Report JSON, schema 1. duration_ms is included only when asked, so that
/// repeated runs stay byte-identical.
nlohmann::json to_json(const EntryReport& r, bool timings = false);
nlohmann::json to_json(const VerificationReport& r, bool timings = false);

}  // namespace yf::corpus
