// yfl: command-line front end for the Young-Fibonacci lattice tools.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "yf/bijection.hpp"
#include "yf/classify.hpp"
#include "yf/corpus.hpp"
#include "yf/dsl.hpp"
#include "yf/errors.hpp"
#include "yf/eval.hpp"
#include "yf/lattice.hpp"
#include "yf/relation.hpp"
#include "yf/synth.hpp"
#include "yf/universe.hpp"

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct Config {
  std::size_t default_rank = 12;
  std::uint64_t memory_budget = yf::fol::kDefaultMemoryBudget;
  std::size_t workers = 1;
  std::string report;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::uint64_t parse_env_u64(const char* var, std::uint64_t fallback) {
  const char* v = std::getenv(var);
  if (!v || !*v) return fallback;
  try {
    std::size_t used = 0;
    const unsigned long long x = std::stoull(v, &used);
    if (used != std::string(v).size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw UsageError(std::string(var) + ": not a nonnegative integer: '" + v + "'");
  }
}

Config config_from_env() {
  Config c;
  c.default_rank = parse_env_u64("YF_DEFAULT_RANK", c.default_rank);
  c.memory_budget = parse_env_u64("YF_MEMORY_BUDGET", c.memory_budget);
  if (c.default_rank > yf::kDefaultRankCeiling) {
    throw UsageError("YF_DEFAULT_RANK exceeds the rank ceiling " + std::to_string(yf::kDefaultRankCeiling));
  }
  return c;
}

std::vector<yf::Word> parse_word_list(const std::string& text) {
  std::vector<yf::Word> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(yf::parse_word_arg(item));
  if (text.back() == ',') out.push_back(yf::Word());
  return out;
}

yf::fol::Strategy parse_strategy(const std::string& s) {
  if (s == "naive") return yf::fol::Strategy::kNaive;
  if (s == "memoized") return yf::fol::Strategy::kMemoized;
  if (s == "optimized") return yf::fol::Strategy::kOptimized;
  throw UsageError("unknown strategy '" + s + "'");
}

yf::fol::DefinitionSet load_defs(const std::string& path) {
  if (path.empty()) return yf::corpus::corpus_definitions();
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return yf::fol::parse_defs(ss.str());
}

std::string join_words(const std::vector<yf::Word>& ws) {
  std::string s;
  for (std::size_t i = 0; i < ws.size(); ++i) s += (i ? " " : "") + ws[i].display();
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  Config cfg;
  try {
    cfg = config_from_env();
  } catch (const UsageError& e) {
    std::cerr << "yfl: " << e.what() << "\n";
    return kExitUsage;
  }

  CLI::App app{"Young-Fibonacci lattice: order, join, automorphisms, first-order definability checks"};
  app.require_subcommand(1);
  int exit_code = 0;

  // enum
  auto* enum_cmd = app.add_subcommand("enum", "List the words of U_N (the Young-Fibonacci lattice up to rank N)");
  std::size_t enum_max = cfg.default_rank;
  std::optional<std::size_t> enum_rank;
  enum_cmd->add_option("--max-rank", enum_max, "Largest rank N");
  enum_cmd->add_option("--rank", enum_rank, "Only this rank (a level of the graded poset)");
  enum_cmd->callback([&] {
    const auto U = yf::Universe::build(enum_max);
    std::size_t lo = enum_rank.value_or(0), hi = enum_rank.value_or(enum_max);
    if (hi > enum_max) throw UsageError("--rank exceeds --max-rank");
    for (std::size_t n = lo; n <= hi; ++n) {
      for (auto id = U.rank_begin(n); id < U.rank_end(n); ++id) std::cout << U.word(id).display() << "\n";
    }
  });

  // order
  auto* order_cmd = app.add_subcommand("order", "Compare two words in the lattice order (u <= v by suffix removal)");
  std::string ou, ov;
  order_cmd->add_option("U", ou, "First word (digits 1/2, eps or \"\")")->required();
  order_cmd->add_option("V", ov, "Second word")->required();
  order_cmd->callback([&] {
    const auto u = yf::parse_word_arg(ou), v = yf::parse_word_arg(ov);
    const bool le = yf::leq(u, v), ge = yf::leq(v, u);
    const char* rel = le && ge ? "=" : le ? "<" : ge ? ">" : "||";
    std::cout << u.display() << " " << rel << " " << v.display() << "\n";
  });

  // join
  auto* join_cmd = app.add_subcommand("join", "Least upper bound o(u, v)");
  std::string ju, jv;
  join_cmd->add_option("U", ju)->required();
  join_cmd->add_option("V", jv)->required();
  join_cmd->callback(
      [&] { std::cout << yf::join(yf::parse_word_arg(ju), yf::parse_word_arg(jv)).display() << "\n"; });

  // meet
  auto* meet_cmd = app.add_subcommand("meet", "Greatest lower bound, by scanning U_N");
  std::string mu, mv;
  std::size_t meet_max = cfg.default_rank;
  meet_cmd->add_option("U", mu)->required();
  meet_cmd->add_option("V", mv)->required();
  meet_cmd->add_option("--max-rank", meet_max, "Both words must lie in U_N");
  meet_cmd->callback([&] {
    const auto u = yf::parse_word_arg(mu), v = yf::parse_word_arg(mv);
    if (yf::rank(u) > meet_max || yf::rank(v) > meet_max) throw UsageError("word outside U_" + std::to_string(meet_max));
    std::cout << yf::meet_bounded(u, v).display() << "\n";
  });

  // auto
  auto* auto_cmd = app.add_subcommand("auto", "Automorphism census of U_N (identity and the swap v11 <-> v2)");
  std::size_t auto_max = cfg.default_rank;
  auto_cmd->add_option("--max-rank", auto_max, "Largest rank N");
  auto_cmd->callback([&] {
    const auto U = yf::Universe::build(auto_max);
    const auto maps = yf::automorphisms(U);
    std::cout << "U_" << auto_max << ": " << maps.size() << " automorphism(s)\n";
    for (const auto& m : maps) {
      std::size_t moved = 0;
      bool is_a = true;
      for (std::size_t i = 0; i < m.size(); ++i) {
        const auto& w = U.word(static_cast<yf::Id>(i));
        const auto& img = U.word(m[i]);
        if (img != w) ++moved;
        if (img != yf::automorphism(w)) is_a = false;
      }
      std::cout << (moved == 0 ? "identity" : is_a ? "a" : "other") << " moves " << moved << "\n";
    }
  });

  // eval
  auto* eval_cmd = app.add_subcommand("eval", "Tarski evaluation of a named first-order definition over U_N");
  std::size_t eval_n = cfg.default_rank;
  std::string eval_defs, eval_name, eval_strategy = "optimized";
  std::optional<std::string> eval_args;
  eval_cmd->add_option("--universe", eval_n, "Quantifiers range over U_N");
  eval_cmd->add_option("--defs", eval_defs, "Definition file (default: the bundled corpus)");
  eval_cmd->add_option("--name", eval_name, "Definition name")->required();
  eval_cmd->add_option("--args", eval_args, "Comma-separated words; omit to materialize the whole relation");
  eval_cmd->add_option("--strategy", eval_strategy, "naive, memoized or optimized");
  eval_cmd->callback([&] {
    const auto defs = load_defs(eval_defs);
    const auto U = yf::Universe::build(eval_n);
    const auto strategy = parse_strategy(eval_strategy);
    if (!eval_args) {
      yf::fol::MaterializeOptions opts;
      opts.memory_budget = cfg.memory_budget;
      opts.strategy = strategy;
      const auto rel = yf::fol::materialize(U, defs, eval_name, opts);
      for (const auto& t : rel.tuples()) std::cout << join_words(t) << "\n";
      return;
    }
    const auto args = parse_word_list(*eval_args);
    const auto out = yf::fol::evaluate(U, defs, eval_name, args, {}, strategy);
    std::cout << (out.value ? "true" : "false") << "\n";
    std::cerr << "calls " << out.stats.calls << ", memo hits " << out.stats.memo_hits << ", U_" << out.universe_rank
              << "\n";
  });

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Check corpus formulas against their combinatorial oracles");
  std::string v_entry, v_strategy = "optimized";
  std::optional<std::size_t> v_universe, v_tuple;
  bool v_margin = false, v_timings = false;
  verify_cmd->add_option("--entry", v_entry, "Registry name filter (substring)");
  verify_cmd->add_option("--universe", v_universe, "Override the universe rank N");
  verify_cmd->add_option("--tuple-rank", v_tuple, "Override every argument domain rank r");
  verify_cmd->add_option("--workers", cfg.workers, "Worker threads");
  verify_cmd->add_option("--report", cfg.report, "JSON report path")->required();
  verify_cmd->add_option("--strategy", v_strategy, "naive, memoized or optimized");
  verify_cmd->add_flag("--margin", v_margin, "Re-run at N+1 and report changed values");
  verify_cmd->add_flag("--timings", v_timings, "Include duration_ms in the report");
  verify_cmd->callback([&] {
    if (cfg.workers == 0) throw UsageError("--workers must be positive");
    yf::corpus::VerifyOptions opts;
    opts.universe_rank = v_universe;
    opts.tuple_rank = v_tuple;
    opts.workers = cfg.workers;
    opts.margin = v_margin;
    opts.strategy = parse_strategy(v_strategy);
    if (yf::corpus::select(v_entry).empty()) throw UsageError("no corpus entry matches '" + v_entry + "'");
    const auto rep = yf::corpus::verify_all(v_entry, opts);
    std::ofstream out(cfg.report);
    if (!out) throw UsageError("cannot write " + cfg.report);
    out << yf::corpus::to_json(rep, v_timings).dump(2) << "\n";
    for (const auto& e : rep.entries) {
      std::cout << e.number << " " << e.entry << ": " << e.outcome() << " (" << e.checked << " tuples, "
                << e.mismatches.size() << " mismatches)\n";
    }
    std::cout << rep.passed << " passed, " << rep.failed << " failed, " << rep.flagged << " flagged\n";
    if (!rep.ok()) exit_code = kExitMismatch;
  });

  // bij
  auto* bij_cmd = app.add_subcommand("bij", "The prime-exponent coding b between words and N_0");
  std::optional<std::string> bij_to;
  std::optional<std::uint64_t> bij_from;
  auto* to_opt = bij_cmd->add_option("--to", bij_to, "Word to encode, prints b(word)");
  auto* from_opt = bij_cmd->add_option("--from", bij_from, "Integer to decode, prints b^-1(n)");
  to_opt->excludes(from_opt);
  bij_cmd->callback([&] {
    if (bij_to) {
      std::cout << yf::b_forward(yf::parse_word_arg(*bij_to)) << "\n";
    } else if (bij_from) {
      std::cout << yf::b_inverse(*bij_from).display() << "\n";
    } else {
      throw UsageError("bij needs --to WORD or --from INT");
    }
  });

  // synth-id
  auto* synth_cmd =
      app.add_subcommand("synth-id", "Build the defining formula id_u of a single word from its parents");
  std::string s_word;
  std::optional<std::size_t> s_check;
  synth_cmd->add_option("WORD", s_word)->required();
  synth_cmd->add_option("--check", s_check, "Verify over U_N that the formula holds exactly at WORD");
  synth_cmd->callback([&] {
    const auto u = yf::parse_word_arg(s_word);
    const auto res = yf::synth::synth_id(u);
    std::cout << "; root " << res.root << "\n" << res.text();
    if (s_check) {
      const bool ok = yf::synth::verify_id(yf::Universe::build(*s_check), u);
      std::cout << "; defines {" << u.display() << "} in U_" << *s_check << ": " << (ok ? "yes" : "no") << "\n";
      if (!ok) exit_code = kExitMismatch;
    }
  });

  // classify
  auto* classify_cmd = app.add_subcommand("classify", "Sigma_n / Pi_n class of a definition after left-to-right prenexing");
  std::string c_defs, c_name;
  classify_cmd->add_option("--defs", c_defs, "Definition file (default: the bundled corpus)");
  classify_cmd->add_option("--name", c_name, "Definition name")->required();
  classify_cmd->callback([&] {
    const auto defs = load_defs(c_defs);
    const auto q = yf::fol::classify(defs, c_name);
    std::cout << c_name << ": " << q.to_string() << " (within Pi_" << q.pi_bound() << ")\n";
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "yfl: " << e.what() << "\n";
    return kExitUsage;
  }
  return exit_code;
}
