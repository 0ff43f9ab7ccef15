#include "yf/synth.hpp"

#include <set>
#include <stdexcept>

#include "yf/dsl.hpp"
#include "yf/eval.hpp"
#include "yf/lattice.hpp"

namespace yf::synth {

namespace {

constexpr std::string_view kBase = R"(
(def r (u v)
  (and (geq u v) (not (geq v u))
       (forall w (implies (and (geq u w) (geq w v)) (or (geq w u) (geq v w))))))
(def id_eps (u) (forall v (geq v u)))
(def id_1 (u) (call r u w""))
(def id_2 (u) (eq u w"2"))
(def id_11 (u) (and (call r u w"1") (not (geq u w"2"))))
)";

bool is_base(const Word& w) { return rank(w) <= 2; }

void emit(const Word& u, fol::DefinitionSet& defs, std::set<Word>& done) {
  if (is_base(u) || done.count(u)) return;
  const auto ps = parents(u);
  std::vector<fol::FormulaPtr> alts;
  for (const Word& p : ps) {
    emit(p, defs, done);
    alts.push_back(fol::call(id_name(p), {fol::Term::variable("w")}));
  }
  auto body = fol::forall("w", fol::iff(fol::call("r", {fol::Term::variable("v"), fol::Term::variable("w")}),
                                         alts.size() == 1 ? alts.front() : fol::disj(std::move(alts))));
  defs.add(fol::Definition{id_name(u), {"v"}, std::move(body)});
  done.insert(u);
}

}  // namespace

const fol::DefinitionSet& base_definitions() {
  static const fol::DefinitionSet base = fol::parse_defs(kBase);
  return base;
}

std::string id_name(const Word& w) {
  if (w.empty()) return "id_eps";
  if (is_base(w)) return "id_" + w.str();
  return "id_w" + w.str();
}

std::string SynthResult::text() const {
  std::string out;
  const std::size_t skip = base_definitions().size();
  for (std::size_t i = skip; i < defs.size(); ++i) out += fol::pretty(defs.at(i)) + "\n";
  return out;
}

SynthResult synth_id(const Word& u) {
  SynthResult res{u, base_definitions(), id_name(u)};
  std::set<Word> done;
  emit(u, res.defs, done);
  res.defs.validate();
  return res;
}

bool verify_id(const Universe& U, const Word& u) {
  if (U.max_rank() < rank(u) + 1) {
    throw std::invalid_argument("verify_id(" + u.display() + ") needs a universe of rank >= " +
                                std::to_string(rank(u) + 1));
  }
  const SynthResult s = synth_id(u);
  fol::Evaluator ev(U, s.defs);
  const Id args[] = {0};
  const Bitset ext = ev.extension(s.defs.index_of(s.root), 0, args);
  return ext.count() == 1 && ext.test(static_cast<std::size_t>(U.id(u)));
}

bool verify_id(const Word& u, std::size_t N) { return verify_id(Universe::build(N), u); }

}  // namespace yf::synth
