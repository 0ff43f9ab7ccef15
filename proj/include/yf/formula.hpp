#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "yf/word.hpp"

namespace yf::fol {

/// A variable or a ground word literal.
struct Term {
  enum class Kind { kVar, kLit };

  Kind kind = Kind::kVar;
  std::string var;
  Word lit;

  static Term variable(std::string name) { return Term{Kind::kVar, std::move(name), Word()}; }
  static Term literal(Word w) { return Term{Kind::kLit, std::string(), std::move(w)}; }

  bool is_var() const noexcept { return kind == Kind::kVar; }
  friend bool operator==(const Term&, const Term&) = default;
};

enum class Op {
  kTrue,
  kFalse,
  kGeq,      // terms[0] >= terms[1]
  kEq,
  kNot,
  kAnd,
  kOr,
  kImplies,
  kIff,
  kForall,   // name = bound variable, kids[0] = body
  kExists,
  kCall,     // name = definition, terms = arguments
  kBuiltin,  // name = builtin, terms = arguments
};

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
  Op op = Op::kTrue;
  std::string name;
  std::vector<Term> terms;
  std::vector<FormulaPtr> kids;
};

FormulaPtr truth(bool value);
FormulaPtr geq(Term lhs, Term rhs);
FormulaPtr eq(Term lhs, Term rhs);
FormulaPtr negation(FormulaPtr f);
FormulaPtr conj(std::vector<FormulaPtr> kids);
FormulaPtr disj(std::vector<FormulaPtr> kids);
FormulaPtr implies(FormulaPtr lhs, FormulaPtr rhs);
FormulaPtr iff(FormulaPtr lhs, FormulaPtr rhs);
FormulaPtr forall(std::string var, FormulaPtr body);
FormulaPtr exists(std::string var, FormulaPtr body);
FormulaPtr call(std::string def, std::vector<Term> args);
FormulaPtr builtin(std::string name, std::vector<Term> args);

std::set<std::string> free_vars(const Formula& f);
bool is_quantifier_free(const Formula& f);

/// Structural equality.
bool same(const Formula& a, const Formula& b);

struct Definition {
  std::string name;
  std::vector<std::string> params;
  FormulaPtr body;
};

using BuiltinPredicate = std::function<bool(std::span<const Word>)>;

/// Optional hint: false means no tuple with `w` at position `pos` satisfies
/// the predicate. Lets the evaluator skip most of the universe.
using BuiltinDomain = std::function<bool(std::size_t pos, const Word& w)>;

struct Builtin {
  std::string name;
  std::size_t arity = 0;
  BuiltinPredicate predicate;
  BuiltinDomain domain;  // may be empty
};

inline constexpr std::size_t kMaxArity = 4;

/// Problems in a definition set: unbound variables, unknown names, arity
/// mismatches, recursion, duplicates.
class DefinitionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Named, non-recursive definitions plus the builtin predicates they may use.
/// Immutable once shared with an evaluator.
class DefinitionSet {
 public:
  /// Appends a definition after checking its name, arity and free variables.
  /// Call targets are resolved by validate().
  void add(Definition def);

  /// Throws DefinitionError on a duplicate name.
  void register_builtin(std::string name, std::size_t arity, BuiltinPredicate predicate,
                        BuiltinDomain domain = {});

  /// Resolves every call and builtin, checks arities, rejects cycles.
  void validate() const;

  std::size_t size() const noexcept { return defs_.size(); }
  const Definition& at(std::size_t i) const { return defs_.at(i); }
  const std::vector<Definition>& definitions() const noexcept { return defs_; }

  const Definition* find(std::string_view name) const;
  std::size_t index_of(std::string_view name) const;

  const Builtin* find_builtin(std::string_view name) const;
  const std::map<std::string, Builtin, std::less<>>& builtins() const noexcept { return builtins_; }

 private:
  std::vector<Definition> defs_;
  std::unordered_map<std::string, std::size_t> index_;
  std::map<std::string, Builtin, std::less<>> builtins_;
};

/// psi_primexp(1^n, 1^m, 1^l): m, l >= 1 and p_n occurs in l with exponent
/// exactly m. Registered by default under the name "psi_primexp".
bool primexp_oracle(std::span<const Word> args);

/// A set containing only the default builtins.
DefinitionSet with_default_builtins();

}  // namespace yf::fol
