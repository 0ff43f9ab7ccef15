#include "yf/corpus.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <stdexcept>

#include "yf/corpus_data.hpp"
#include "yf/dsl.hpp"

namespace yf::corpus {

std::string_view corpus_text() { return data::kCorpus; }

const fol::DefinitionSet& corpus_definitions() {
  static const fol::DefinitionSet defs = fol::parse_defs(corpus_text());
  return defs;
}

std::string corpus_digest() {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : corpus_text()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string EntryReport::outcome() const {
  if (exhausted > 0) return "budget-exhausted";
  if (status == Status::kFlagged) return "flagged";
  if (!mismatches.empty()) return "fail";
  if (margin_changed > 0) return "unstable";
  return "pass";
}

bool EntryReport::ok() const {
  const std::string o = outcome();
  return o == "pass" || o == "flagged";
}

const Universe& UniverseCache::get(std::size_t rank) {
  auto it = cache_.find(rank);
  if (it == cache_.end()) {
    it = cache_.emplace(rank, std::make_unique<Universe>(Universe::build(rank, ceiling_))).first;
  }
  return *it->second;
}

namespace {

using Tuple = std::vector<Word>;

struct Plan {
  std::vector<Tuple> prefixes;    // all positions but the last
  std::vector<Word> last;         // candidates for the last position
  std::vector<std::string> domains;
  std::size_t tuple_rank = 0;
};

Plan plan_for(const CorpusEntry& entry, const VerifyOptions& options) {
  Plan p;
  std::vector<std::vector<Word>> lists;
  for (Domain d : entry.domains) {
    if (options.tuple_rank) d.rank = *options.tuple_rank;
    p.tuple_rank = std::max(p.tuple_rank, d.rank);
    p.domains.push_back(d.describe());
    lists.push_back(d.words());
  }
  p.last = lists.back();
  p.prefixes.push_back({});
  for (std::size_t i = 0; i + 1 < lists.size(); ++i) {
    std::vector<Tuple> next;
    for (const Tuple& t : p.prefixes) {
      for (const Word& w : lists[i]) {
        Tuple u = t;
        u.push_back(w);
        next.push_back(std::move(u));
      }
    }
    p.prefixes = std::move(next);
  }
  return p;
}

// Formula values for every tuple, in prefix-major order. -1 marks a tuple
// lost to the budget.
struct ChunkResult {
  std::vector<signed char> values;
  fol::EvalStats stats;
  std::uint64_t exhausted = 0;
};

ChunkResult run_chunk(const Universe& U, std::size_t def, const Plan& plan, std::size_t begin, std::size_t end,
                      const VerifyOptions& options) {
  ChunkResult out;
  fol::Evaluator ev(U, corpus_definitions(), options.strategy, options.budget);
  std::vector<Id> last_ids;
  for (const Word& w : plan.last) last_ids.push_back(U.id(w));
  const std::size_t pos = plan.prefixes.front().size();
  bool dead = false;
  for (std::size_t i = begin; i < end; ++i) {
    std::vector<Id> ids;
    for (const Word& w : plan.prefixes[i]) ids.push_back(U.id(w));
    ids.push_back(0);
    if (!dead) {
      try {
        if (options.strategy == fol::Strategy::kOptimized) {
          const Bitset row = ev.extension(def, pos, ids);
          for (Id x : last_ids) out.values.push_back(row.test(static_cast<std::size_t>(x)) ? 1 : 0);
        } else {
          std::vector<signed char> vals;
          for (Id x : last_ids) {
            ids.back() = x;
            vals.push_back(ev.holds(def, ids) ? 1 : 0);
          }
          out.values.insert(out.values.end(), vals.begin(), vals.end());
        }
        continue;
      } catch (const fol::BudgetExhausted&) {
        dead = true;
      }
    }
    out.values.insert(out.values.end(), last_ids.size(), -1);
    out.exhausted += last_ids.size();
  }
  out.stats = ev.stats();
  return out;
}

struct RunResult {
  std::vector<signed char> values;
  fol::EvalStats stats;
  std::uint64_t exhausted = 0;
};

RunResult run(const Universe& U, std::size_t def, const Plan& plan, const VerifyOptions& options) {
  const std::size_t n = plan.prefixes.size();
  const std::size_t chunks = std::max<std::size_t>(1, std::min(options.chunks, n));
  std::vector<ChunkResult> parts(chunks);
  const int workers = static_cast<int>(std::max<std::size_t>(1, options.workers));
  std::exception_ptr error;
#pragma omp parallel for num_threads(workers) schedule(dynamic, 1)
  for (std::size_t c = 0; c < chunks; ++c) {
    try {
      parts[c] = run_chunk(U, def, plan, c * n / chunks, (c + 1) * n / chunks, options);
    } catch (...) {
#pragma omp critical
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  RunResult r;
  for (auto& p : parts) {
    r.values.insert(r.values.end(), p.values.begin(), p.values.end());
    r.stats += p.stats;
    r.exhausted += p.exhausted;
  }
  return r;
}

void sort_shortlex(std::vector<Mismatch>& v) {
  std::sort(v.begin(), v.end(), [](const Mismatch& a, const Mismatch& b) { return a.tuple < b.tuple; });
}

}  // namespace

EntryReport verify_entry(const CorpusEntry& entry, const VerifyOptions& options, UniverseCache& cache) {
  const auto start = std::chrono::steady_clock::now();
  EntryReport rep;
  rep.number = entry.number;
  rep.entry = entry.name;
  rep.definition = entry.definition;
  rep.status = entry.status;
  rep.universe_rank = options.universe_rank.value_or(entry.universe_rank);

  const Plan plan = plan_for(entry, options);
  rep.tuple_rank = plan.tuple_rank;
  rep.domains = plan.domains;
  if (rep.tuple_rank > rep.universe_rank) {
    throw std::invalid_argument("entry '" + entry.name + "': tuple rank " + std::to_string(rep.tuple_rank) +
                                " exceeds universe rank " + std::to_string(rep.universe_rank));
  }
  const std::size_t def = corpus_definitions().index_of(entry.definition);

  const RunResult main = run(cache.get(rep.universe_rank), def, plan, options);
  rep.eval = main.stats;
  rep.exhausted = main.exhausted;

  std::size_t k = 0;
  Tuple t;
  for (const Tuple& prefix : plan.prefixes) {
    for (const Word& w : plan.last) {
      const signed char v = main.values[k++];
      if (v < 0) continue;
      t = prefix;
      t.push_back(w);
      ++rep.checked;
      const bool f = v == 1;
      const bool o = entry.oracle(t);
      if (f != o) rep.mismatches.push_back({t, f, o});
      if (entry.semantic) {
        const bool s = entry.semantic(t);
        if (f != s) rep.semantic_mismatches.push_back({t, f, s});
      }
    }
  }
  sort_shortlex(rep.mismatches);
  sort_shortlex(rep.semantic_mismatches);

  if (options.margin) {
    rep.margin_rank = rep.universe_rank + 1;
    const RunResult next = run(cache.get(*rep.margin_rank), def, plan, options);
    for (std::size_t i = 0; i < main.values.size(); ++i) {
      if (main.values[i] >= 0 && next.values[i] >= 0 && main.values[i] != next.values[i]) ++rep.margin_changed;
    }
    rep.exhausted += next.exhausted;
  }

  rep.duration_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

EntryReport verify_entry(const CorpusEntry& entry, const VerifyOptions& options) {
  UniverseCache cache(options.rank_ceiling);
  return verify_entry(entry, options, cache);
}

std::vector<const CorpusEntry*> select(std::string_view filter) {
  std::vector<const CorpusEntry*> out;
  for (const auto& e : registry()) {
    if (filter.empty() || e.name.find(filter) != std::string::npos ||
        e.definition.find(filter) != std::string::npos) {
      out.push_back(&e);
    }
  }
  return out;
}

VerificationReport verify_all(std::string_view filter, const VerifyOptions& options) {
  VerificationReport rep;
  rep.digest = corpus_digest();
  UniverseCache cache(options.rank_ceiling);
  for (const CorpusEntry* e : select(filter)) {
    EntryReport r = verify_entry(*e, options, cache);
    const std::string o = r.outcome();
    if (o == "pass") {
      ++rep.passed;
    } else if (o == "flagged") {
      ++rep.flagged;
    } else {
      ++rep.failed;
    }
    rep.universe_sizes[r.universe_rank] = cache.get(r.universe_rank).size();
    if (r.margin_rank) rep.universe_sizes[*r.margin_rank] = cache.get(*r.margin_rank).size();
    rep.entries.push_back(std::move(r));
  }
  return rep;
}

namespace {

nlohmann::json mismatches_json(const std::vector<Mismatch>& ms) {
  auto arr = nlohmann::json::array();
  for (const auto& m : ms) {
    auto tuple = nlohmann::json::array();
    for (const Word& w : m.tuple) tuple.push_back(w.str());
    arr.push_back({{"tuple", tuple}, {"formula", m.formula}, {"oracle", m.oracle}});
  }
  return arr;
}

}  // namespace

nlohmann::json to_json(const EntryReport& r, bool timings) {
  nlohmann::json j;
  j["number"] = r.number;
  j["entry"] = r.entry;
  j["definition"] = r.definition;
  j["registry_status"] = std::string(to_string(r.status));
  j["status"] = r.outcome();
  j["universe_rank"] = r.universe_rank;
  j["tuple_rank"] = r.tuple_rank;
  j["domains"] = r.domains;
  j["checked"] = r.checked;
  j["exhausted"] = r.exhausted;
  j["mismatches"] = mismatches_json(r.mismatches);
  if (r.status == Status::kFlagged) j["semantic_mismatches"] = mismatches_json(r.semantic_mismatches);
  j["eval"] = {{"calls", r.eval.calls}, {"memo_hits", r.eval.memo_hits}, {"steps", r.eval.steps},
               {"rows", r.eval.rows}};
  if (r.margin_rank) j["margin"] = {{"universe_rank", *r.margin_rank}, {"changed", r.margin_changed}};
  if (timings) j["duration_ms"] = r.duration_ms;
  return j;
}

nlohmann::json to_json(const VerificationReport& r, bool timings) {
  nlohmann::json j;
  j["schema"] = 1;
  j["digest"] = r.digest;
  nlohmann::json sizes = nlohmann::json::object();
  for (const auto& [rank, size] : r.universe_sizes) sizes[std::to_string(rank)] = size;
  j["universe_sizes"] = sizes;
  j["summary"] = {{"passed", r.passed}, {"failed", r.failed}, {"flagged", r.flagged}};
  auto entries = nlohmann::json::array();
  for (const auto& e : r.entries) entries.push_back(to_json(e, timings));
  j["entries"] = entries;
  return j;
}

}  // namespace yf::corpus
