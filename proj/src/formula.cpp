#include "yf/formula.hpp"

#include <algorithm>

#include "yf/bijection.hpp"

namespace yf::fol {

namespace {

FormulaPtr make(Op op, std::string name, std::vector<Term> terms, std::vector<FormulaPtr> kids) {
  auto f = std::make_shared<Formula>();
  f->op = op;
  f->name = std::move(name);
  f->terms = std::move(terms);
  f->kids = std::move(kids);
  return f;
}

void collect_free(const Formula& f, std::set<std::string>& bound, std::set<std::string>& out) {
  for (const Term& t : f.terms) {
    if (t.is_var() && !bound.contains(t.var)) out.insert(t.var);
  }
  if (f.op == Op::kForall || f.op == Op::kExists) {
    const bool was_bound = bound.contains(f.name);
    bound.insert(f.name);
    collect_free(*f.kids[0], bound, out);
    if (!was_bound) bound.erase(f.name);
    return;
  }
  for (const auto& k : f.kids) collect_free(*k, bound, out);
}

}  // namespace

FormulaPtr truth(bool value) { return make(value ? Op::kTrue : Op::kFalse, {}, {}, {}); }
FormulaPtr geq(Term lhs, Term rhs) { return make(Op::kGeq, {}, {std::move(lhs), std::move(rhs)}, {}); }
FormulaPtr eq(Term lhs, Term rhs) { return make(Op::kEq, {}, {std::move(lhs), std::move(rhs)}, {}); }
FormulaPtr negation(FormulaPtr f) { return make(Op::kNot, {}, {}, {std::move(f)}); }
FormulaPtr conj(std::vector<FormulaPtr> kids) { return make(Op::kAnd, {}, {}, std::move(kids)); }
FormulaPtr disj(std::vector<FormulaPtr> kids) { return make(Op::kOr, {}, {}, std::move(kids)); }
FormulaPtr implies(FormulaPtr lhs, FormulaPtr rhs) {
  return make(Op::kImplies, {}, {}, {std::move(lhs), std::move(rhs)});
}
FormulaPtr iff(FormulaPtr lhs, FormulaPtr rhs) {
  return make(Op::kIff, {}, {}, {std::move(lhs), std::move(rhs)});
}
FormulaPtr forall(std::string var, FormulaPtr body) {
  return make(Op::kForall, std::move(var), {}, {std::move(body)});
}
FormulaPtr exists(std::string var, FormulaPtr body) {
  return make(Op::kExists, std::move(var), {}, {std::move(body)});
}
FormulaPtr call(std::string def, std::vector<Term> args) {
  return make(Op::kCall, std::move(def), std::move(args), {});
}
FormulaPtr builtin(std::string name, std::vector<Term> args) {
  return make(Op::kBuiltin, std::move(name), std::move(args), {});
}

std::set<std::string> free_vars(const Formula& f) {
  std::set<std::string> bound, out;
  collect_free(f, bound, out);
  return out;
}

bool is_quantifier_free(const Formula& f) {
  if (f.op == Op::kForall || f.op == Op::kExists) return false;
  return std::all_of(f.kids.begin(), f.kids.end(), [](const auto& k) { return is_quantifier_free(*k); });
}

bool same(const Formula& a, const Formula& b) {
  if (a.op != b.op || a.name != b.name || a.terms != b.terms || a.kids.size() != b.kids.size()) return false;
  for (std::size_t i = 0; i < a.kids.size(); ++i) {
    if (!same(*a.kids[i], *b.kids[i])) return false;
  }
  return true;
}

void DefinitionSet::add(Definition def) {
  if (def.name.empty()) throw DefinitionError("definition with empty name");
  if (index_.contains(def.name)) throw DefinitionError("duplicate definition '" + def.name + "'");
  if (builtins_.contains(def.name)) throw DefinitionError("'" + def.name + "' is already a builtin");
  if (def.params.size() > kMaxArity) {
    throw DefinitionError("definition '" + def.name + "' has arity " + std::to_string(def.params.size()) +
                          ", above the cap of " + std::to_string(kMaxArity));
  }
  std::set<std::string> params(def.params.begin(), def.params.end());
  if (params.size() != def.params.size()) throw DefinitionError("repeated parameter in '" + def.name + "'");
  if (!def.body) throw DefinitionError("definition '" + def.name + "' has no body");
  for (const auto& v : free_vars(*def.body)) {
    if (!params.contains(v)) {
      throw DefinitionError("unbound variable '" + v + "' in definition '" + def.name + "'");
    }
  }
  index_.emplace(def.name, defs_.size());
  defs_.push_back(std::move(def));
}

void DefinitionSet::register_builtin(std::string name, std::size_t arity, BuiltinPredicate predicate,
                                     BuiltinDomain domain) {
  if (builtins_.contains(name) || index_.contains(name)) {
    throw DefinitionError("builtin '" + name + "' is already registered");
  }
  Builtin b{name, arity, std::move(predicate), std::move(domain)};
  builtins_.emplace(std::move(name), std::move(b));
}

const Definition* DefinitionSet::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  return it == index_.end() ? nullptr : &defs_[it->second];
}

std::size_t DefinitionSet::index_of(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) throw DefinitionError("unknown definition '" + std::string(name) + "'");
  return it->second;
}

const Builtin* DefinitionSet::find_builtin(std::string_view name) const {
  auto it = builtins_.find(name);
  return it == builtins_.end() ? nullptr : &it->second;
}

namespace {

void check_refs(const DefinitionSet& set, const Definition& owner, const Formula& f,
                std::vector<std::size_t>& callees) {
  if (f.op == Op::kCall) {
    const Definition* target = set.find(f.name);
    if (!target) throw DefinitionError("unknown definition '" + f.name + "' called from '" + owner.name + "'");
    if (target->params.size() != f.terms.size()) {
      throw DefinitionError("arity mismatch calling '" + f.name + "' from '" + owner.name + "': expected " +
                            std::to_string(target->params.size()) + ", got " + std::to_string(f.terms.size()));
    }
    callees.push_back(set.index_of(f.name));
  } else if (f.op == Op::kBuiltin) {
    const Builtin* b = set.find_builtin(f.name);
    if (!b) throw DefinitionError("unknown builtin '" + f.name + "' used in '" + owner.name + "'");
    if (b->arity != f.terms.size()) {
      throw DefinitionError("arity mismatch for builtin '" + f.name + "' in '" + owner.name + "': expected " +
                            std::to_string(b->arity) + ", got " + std::to_string(f.terms.size()));
    }
  }
  for (const auto& k : f.kids) check_refs(set, owner, *k, callees);
}

}  // namespace

void DefinitionSet::validate() const {
  std::vector<std::vector<std::size_t>> graph(defs_.size());
  for (std::size_t i = 0; i < defs_.size(); ++i) check_refs(*this, defs_[i], *defs_[i].body, graph[i]);

  enum class Mark { kNew, kActive, kDone };
  std::vector<Mark> mark(defs_.size(), Mark::kNew);
  std::function<void(std::size_t)> visit = [&](std::size_t i) {
    mark[i] = Mark::kActive;
    for (std::size_t j : graph[i]) {
      if (mark[j] == Mark::kActive) {
        throw DefinitionError("recursion cycle through '" + defs_[j].name + "' and '" + defs_[i].name + "'");
      }
      if (mark[j] == Mark::kNew) visit(j);
    }
    mark[i] = Mark::kDone;
  };
  for (std::size_t i = 0; i < defs_.size(); ++i) {
    if (mark[i] == Mark::kNew) visit(i);
  }
}

bool primexp_oracle(std::span<const Word> args) {
  if (args.size() != 3) return false;
  for (const Word& w : args) {
    if (stats(w).twos != 0) return false;
  }
  const std::size_t n = args[0].size();
  const std::size_t m = args[1].size();
  const std::size_t l = args[2].size();
  if (m < 1 || l < 1) return false;
  // p_n > l whenever n is past the table, so the exponent is 0 there.
  if (n >= kPrimeTableSize) return false;
  return prime_exponent(l, n) == m;
}

DefinitionSet with_default_builtins() {
  DefinitionSet set;
  set.register_builtin("psi_primexp", 3, primexp_oracle, [](std::size_t pos, const Word& w) {
    return stats(w).twos == 0 && (pos == 0 || !w.empty());
  });
  return set;
}

}  // namespace yf::fol
