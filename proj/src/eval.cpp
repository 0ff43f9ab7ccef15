#include "yf/eval.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <unordered_map>
#include <vector>

#include "yf/normal_form.hpp"

namespace yf::fol {

std::string_view to_string(Strategy s) {
  switch (s) {
    case Strategy::kNaive: return "naive";
    case Strategy::kMemoized: return "memoized";
    case Strategy::kOptimized: return "optimized";
  }
  return "?";
}

namespace {

using Slot = std::int32_t;
using Frame = std::vector<Id>;

/// A term after resolution: a frame slot, or a literal universe id.
struct Arg {
  Slot slot = -1;
  Id lit = -1;
};

constexpr std::uint64_t bit(Slot s) { return std::uint64_t{1} << s; }

// Pointwise form: the parsed formula with variables resolved to slots.
struct PlainNode {
  Op op = Op::kTrue;
  Slot bound = -1;          // quantifier variable
  std::uint32_t target = 0;  // definition or builtin index
  std::vector<Arg> args;
  std::vector<PlainNode> kids;
};

// Optimized form. A block is (exists vars . and(kids)); with neg set it is
// the complement, which is how forall is represented.
struct Node {
  enum class Kind : std::uint8_t { kConst, kGeq, kEq, kCall, kBuiltin, kAnd, kOr, kBlock };
  Kind kind = Kind::kConst;
  bool neg = false;
  bool value = true;
  std::uint32_t target = 0;
  std::vector<Arg> args;
  std::vector<Node> kids;
  std::uint64_t vars = 0;
  std::uint64_t free = 0;
};

struct Compiled {
  Slot slots = 0;
  PlainNode plain;
  Node opt;
};

struct Key {
  std::uint32_t def = 0;
  std::uint32_t pos = 0;  // kMaxArity for scalar entries
  std::array<Id, kMaxArity> ids{-1, -1, -1, -1};
  friend bool operator==(const Key&, const Key&) = default;
};

struct KeyHash {
  std::size_t operator()(const Key& k) const noexcept {
    std::uint64_t h = (std::uint64_t{k.def} << 8) ^ k.pos;
    for (Id id : k.ids) h = (h ^ static_cast<std::uint32_t>(id)) * 0x100000001b3ULL;
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

Node negated(Node n) {
  switch (n.kind) {
    case Node::Kind::kConst: n.value = !n.value; break;
    case Node::Kind::kAnd:
    case Node::Kind::kOr:
      n.kind = n.kind == Node::Kind::kAnd ? Node::Kind::kOr : Node::Kind::kAnd;
      for (auto& k : n.kids) k = negated(std::move(k));
      break;
    default: n.neg = !n.neg; break;
  }
  return n;
}

class Compiler {
 public:
  Compiler(const Universe& u, const DefinitionSet& defs, const Definition& def)
      : u_(u), defs_(defs), def_(def) {
    for (const auto& p : def.params) scope_.emplace_back(p, next_++);
  }

  Compiled run() {
    Compiled c;
    c.plain = plain(*def_.body);
    const Slot params = next_;
    next_ = params;
    scope_.resize(static_cast<std::size_t>(params));
    c.opt = opt(*miniscope(def_.body));
    c.slots = std::max(next_, max_plain_);
    if (c.slots > 64) throw DefinitionError("definition '" + def_.name + "' binds more than 64 variables");
    return c;
  }

 private:
  Slot lookup(const std::string& var) const {
    for (auto it = scope_.rbegin(); it != scope_.rend(); ++it) {
      if (it->first == var) return it->second;
    }
    throw DefinitionError("unbound variable '" + var + "' in '" + def_.name + "'");
  }

  Arg arg(const Term& t) const {
    if (t.is_var()) return Arg{lookup(t.var), -1};
    auto id = u_.find(t.lit);
    if (!id) {
      throw RankOverflow("literal w\"" + t.lit.str() + "\" in '" + def_.name + "' lies outside U_" +
                         std::to_string(u_.max_rank()));
    }
    return Arg{-1, *id};
  }

  std::uint32_t target_of(const Formula& f) const {
    if (f.op == Op::kCall) return static_cast<std::uint32_t>(defs_.index_of(f.name));
    const auto& table = defs_.builtins();
    auto it = table.find(f.name);
    if (it == table.end()) throw DefinitionError("unknown builtin '" + f.name + "'");
    return static_cast<std::uint32_t>(std::distance(table.begin(), it));
  }

  PlainNode plain(const Formula& f) {
    PlainNode n;
    n.op = f.op;
    for (const Term& t : f.terms) n.args.push_back(arg(t));
    if (f.op == Op::kCall || f.op == Op::kBuiltin) n.target = target_of(f);
    if (f.op == Op::kForall || f.op == Op::kExists) {
      n.bound = next_++;
      max_plain_ = std::max(max_plain_, next_);
      scope_.emplace_back(f.name, n.bound);
      n.kids.push_back(plain(*f.kids[0]));
      scope_.pop_back();
      return n;
    }
    for (const auto& k : f.kids) n.kids.push_back(plain(*k));
    return n;
  }

  static std::uint64_t free_of(const std::vector<Arg>& args) {
    std::uint64_t m = 0;
    for (const Arg& a : args)
      if (a.slot >= 0) m |= bit(a.slot);
    return m;
  }

  // Splits a compiled body into block conjuncts, absorbing nested
  // existential blocks (slots are unique per binder, so this is safe).
  static void absorb(Node body, Node& block) {
    if (body.kind == Node::Kind::kAnd) {
      for (auto& k : body.kids) absorb(std::move(k), block);
    } else if (body.kind == Node::Kind::kBlock && !body.neg) {
      block.vars |= body.vars;
      for (auto& k : body.kids) absorb(std::move(k), block);
    } else {
      block.kids.push_back(std::move(body));
    }
  }

  Node opt(const Formula& f) {
    Node n;
    switch (f.op) {
      case Op::kTrue:
      case Op::kFalse:
        n.kind = Node::Kind::kConst;
        n.value = f.op == Op::kTrue;
        return n;
      case Op::kGeq:
      case Op::kEq:
      case Op::kCall:
      case Op::kBuiltin:
        n.kind = f.op == Op::kGeq ? Node::Kind::kGeq
                 : f.op == Op::kEq ? Node::Kind::kEq
                 : f.op == Op::kCall ? Node::Kind::kCall
                                     : Node::Kind::kBuiltin;
        for (const Term& t : f.terms) n.args.push_back(arg(t));
        if (f.op == Op::kCall || f.op == Op::kBuiltin) n.target = target_of(f);
        n.free = free_of(n.args);
        return n;
      case Op::kNot:
        // NNF: negation sits directly on an atom.
        return negated(opt(*f.kids[0]));
      case Op::kAnd:
      case Op::kOr: {
        n.kind = f.op == Op::kAnd ? Node::Kind::kAnd : Node::Kind::kOr;
        for (const auto& k : f.kids) {
          Node c = opt(*k);
          n.free |= c.free;
          if (c.kind == n.kind) {
            for (auto& g : c.kids) n.kids.push_back(std::move(g));
          } else {
            n.kids.push_back(std::move(c));
          }
        }
        return n;
      }
      case Op::kForall:
      case Op::kExists: {
        const Op q = f.op;
        const Formula* body = &f;
        std::size_t pushed = 0;
        n.kind = Node::Kind::kBlock;
        while (body->op == q) {
          const Slot s = next_++;
          n.vars |= bit(s);
          scope_.emplace_back(body->name, s);
          ++pushed;
          body = body->kids[0].get();
        }
        Node inner = opt(*body);
        scope_.resize(scope_.size() - pushed);
        if (q == Op::kForall) inner = negated(std::move(inner));
        absorb(std::move(inner), n);
        for (const auto& k : n.kids) n.free |= k.free;
        n.free &= ~n.vars;
        n.neg = q == Op::kForall;
        return n;
      }
      default:
        break;
    }
    throw DefinitionError("unexpected connective after normalization in '" + def_.name + "'");
  }

  const Universe& u_;
  const DefinitionSet& defs_;
  const Definition& def_;
  std::vector<std::pair<std::string, Slot>> scope_;
  Slot next_ = 0;
  Slot max_plain_ = 0;
};

}  // namespace

class Evaluator::Impl {
 public:
  Impl(const Universe& u, const DefinitionSet& defs, Strategy strategy, Budget budget)
      : u_(u),
        defs_(defs),
        strategy_(strategy),
        budget_(budget),
        n_(u.size()),
        full_(u.size(), true),
        empty_(u.size()),
        compiled_(defs.size()),
        start_(std::chrono::steady_clock::now()) {
    for (const auto& [name, b] : defs.builtins()) {
      builtins_.push_back(&b);
      std::vector<Bitset> dom(b.arity, full_);
      if (b.domain) {
        for (std::size_t pos = 0; pos < b.arity; ++pos) {
          for (std::size_t x = 0; x < n_; ++x)
            if (!b.domain(pos, u.word(static_cast<Id>(x)))) dom[pos].reset(x);
        }
      }
      domains_.push_back(std::move(dom));
    }
  }

  bool holds(std::size_t def, std::span<const Id> ids) {
    check_args(def, ids.size());
    return call_holds(static_cast<std::uint32_t>(def), ids);
  }

  Bitset extension(std::size_t def, std::size_t pos, std::span<const Id> ids) {
    check_args(def, ids.size());
    if (pos >= ids.size()) throw std::out_of_range("extension position past arity");
    if (strategy_ == Strategy::kOptimized) return row(static_cast<std::uint32_t>(def), pos, ids);
    std::vector<Id> probe(ids.begin(), ids.end());
    Bitset out(n_);
    for (std::size_t x = 0; x < n_; ++x) {
      probe[pos] = static_cast<Id>(x);
      if (call_holds(static_cast<std::uint32_t>(def), probe)) out.set(x);
    }
    return out;
  }

  const Universe& u_;
  const DefinitionSet& defs_;
  Strategy strategy_;
  Budget budget_;
  EvalStats stats_;

 private:
  void check_args(std::size_t def, std::size_t n) const {
    if (def >= defs_.size()) throw std::out_of_range("definition index out of range");
    if (defs_.at(def).params.size() != n) {
      throw DefinitionError("arity mismatch for '" + defs_.at(def).name + "': expected " +
                            std::to_string(defs_.at(def).params.size()) + ", got " + std::to_string(n));
    }
  }

  void step() {
    ++stats_.steps;
    if (budget_.max_steps != 0 && stats_.steps > budget_.max_steps) {
      throw BudgetExhausted("step budget of " + std::to_string(budget_.max_steps) + " exhausted");
    }
    if (budget_.max_time.count() != 0 && (stats_.steps & 0xFFF) == 0 &&
        std::chrono::steady_clock::now() - start_ > budget_.max_time) {
      throw BudgetExhausted("time budget of " + std::to_string(budget_.max_time.count()) + " ms exhausted");
    }
  }

  const Compiled& compiled(std::uint32_t def) {
    auto& slot = compiled_[def];
    if (!slot) slot = Compiler(u_, defs_, defs_.at(def)).run();
    return *slot;
  }

  static Id value(const Arg& a, const Frame& f) { return a.slot >= 0 ? f[static_cast<std::size_t>(a.slot)] : a.lit; }

  Frame frame_for(std::uint32_t def, std::span<const Id> ids, std::size_t skip = kMaxArity) {
    Frame f(static_cast<std::size_t>(compiled(def).slots), -1);
    for (std::size_t i = 0; i < ids.size(); ++i)
      if (i != skip) f[i] = ids[i];
    return f;
  }

  static Key key_of(std::uint32_t def, std::size_t pos, std::span<const Id> ids) {
    Key k;
    k.def = def;
    k.pos = static_cast<std::uint32_t>(pos);
    for (std::size_t i = 0; i < ids.size(); ++i) k.ids[i] = i == pos ? -1 : ids[i];
    return k;
  }

  bool builtin_holds(std::uint32_t b, std::span<const Id> ids) {
    for (std::size_t i = 0; i < ids.size(); ++i)
      if (!domains_[b][i].test(static_cast<std::size_t>(ids[i]))) return false;
    std::array<Word, kMaxArity> words;
    for (std::size_t i = 0; i < ids.size(); ++i) words[i] = u_.word(ids[i]);
    return builtins_[b]->predicate(std::span<const Word>(words.data(), ids.size()));
  }

  // ---- shared entry point for calls ----

  bool call_holds(std::uint32_t def, std::span<const Id> ids) {
    if (strategy_ == Strategy::kNaive) {
      ++stats_.calls;
      Frame f = frame_for(def, ids);
      return plain_holds(compiled(def).plain, f);
    }
    const Key key = key_of(def, kMaxArity, ids);
    if (auto it = scalar_memo_.find(key); it != scalar_memo_.end()) {
      ++stats_.memo_hits;
      return it->second;
    }
    bool result;
    if (strategy_ == Strategy::kOptimized) {
      for (std::size_t pos = 0; pos < ids.size(); ++pos) {
        if (auto it = row_memo_.find(key_of(def, pos, ids)); it != row_memo_.end()) {
          ++stats_.memo_hits;
          return it->second.test(static_cast<std::size_t>(ids[pos]));
        }
      }
      ++stats_.calls;
      Frame f = frame_for(def, ids);
      result = holds(compiled(def).opt, f);
    } else {
      ++stats_.calls;
      Frame f = frame_for(def, ids);
      result = plain_holds(compiled(def).plain, f);
    }
    scalar_memo_.emplace(key, result);
    return result;
  }

  // ---- pointwise evaluation ----

  bool plain_holds(const PlainNode& n, Frame& f) {
    step();
    switch (n.op) {
      case Op::kTrue: return true;
      case Op::kFalse: return false;
      case Op::kGeq: return u_.leq(value(n.args[1], f), value(n.args[0], f));
      case Op::kEq: return value(n.args[0], f) == value(n.args[1], f);
      case Op::kNot: return !plain_holds(n.kids[0], f);
      case Op::kAnd:
        for (const auto& k : n.kids)
          if (!plain_holds(k, f)) return false;
        return true;
      case Op::kOr:
        for (const auto& k : n.kids)
          if (plain_holds(k, f)) return true;
        return false;
      case Op::kImplies: return !plain_holds(n.kids[0], f) || plain_holds(n.kids[1], f);
      case Op::kIff: return plain_holds(n.kids[0], f) == plain_holds(n.kids[1], f);
      case Op::kForall:
      case Op::kExists: {
        const bool want = n.op == Op::kExists;
        const auto slot = static_cast<std::size_t>(n.bound);
        const Id saved = f[slot];
        bool result = !want;
        for (std::size_t y = 0; y < n_; ++y) {
          f[slot] = static_cast<Id>(y);
          if (plain_holds(n.kids[0], f) == want) {
            result = want;
            break;
          }
        }
        f[slot] = saved;
        return result;
      }
      case Op::kCall:
      case Op::kBuiltin: {
        std::array<Id, kMaxArity> ids{};
        for (std::size_t i = 0; i < n.args.size(); ++i) ids[i] = value(n.args[i], f);
        std::span<const Id> view(ids.data(), n.args.size());
        return n.op == Op::kCall ? call_holds(n.target, view) : builtin_holds(n.target, view);
      }
    }
    return false;
  }

  // ---- optimized evaluation ----

  Bitset row(std::uint32_t def, std::size_t pos, std::span<const Id> ids) {
    const Key key = key_of(def, pos, ids);
    if (auto it = row_memo_.find(key); it != row_memo_.end()) {
      ++stats_.memo_hits;
      return it->second;
    }
    ++stats_.calls;
    ++stats_.rows;
    Frame f = frame_for(def, ids, pos);
    Bitset r = collect(compiled(def).opt, f, static_cast<Slot>(pos));
    row_memo_.emplace(key, r);
    return r;
  }

  Bitset builtin_row(std::uint32_t b, std::size_t pos, std::span<Id> ids) {
    Key key = key_of(b, pos, ids);
    if (auto it = builtin_rows_.find(key); it != builtin_rows_.end()) return it->second;
    Bitset r(n_);
    const Id saved = ids[pos];
    domains_[b][pos].for_each([&](std::size_t x) {
      ids[pos] = static_cast<Id>(x);
      if (builtin_holds(b, ids)) r.set(x);
    });
    ids[pos] = saved;
    builtin_rows_.emplace(key, r);
    return r;
  }

  bool holds(const Node& n, Frame& f) {
    step();
    switch (n.kind) {
      case Node::Kind::kConst: return n.value;
      case Node::Kind::kGeq: return u_.leq(value(n.args[1], f), value(n.args[0], f)) != n.neg;
      case Node::Kind::kEq: return (value(n.args[0], f) == value(n.args[1], f)) != n.neg;
      case Node::Kind::kCall:
      case Node::Kind::kBuiltin: {
        std::array<Id, kMaxArity> ids{};
        for (std::size_t i = 0; i < n.args.size(); ++i) ids[i] = value(n.args[i], f);
        std::span<const Id> view(ids.data(), n.args.size());
        const bool r = n.kind == Node::Kind::kCall ? call_holds(n.target, view) : builtin_holds(n.target, view);
        return r != n.neg;
      }
      case Node::Kind::kAnd:
        for (const auto& k : n.kids)
          if (!holds(k, f)) return false;
        return true;
      case Node::Kind::kOr:
        for (const auto& k : n.kids)
          if (holds(k, f)) return true;
        return false;
      case Node::Kind::kBlock: {
        std::vector<const Node*> conj;
        for (const auto& k : n.kids) conj.push_back(&k);
        return block_any(n.vars, conj, f) != n.neg;
      }
    }
    return false;
  }

  // {x : n holds with slot t = x}; every other free slot of n is bound.
  Bitset collect(const Node& n, Frame& f, Slot t) {
    if (!(n.free & bit(t))) return holds(n, f) ? full_ : empty_;
    step();
    switch (n.kind) {
      case Node::Kind::kConst: return n.value ? full_ : empty_;
      case Node::Kind::kGeq:
      case Node::Kind::kEq: {
        const Arg& a = n.args[0];
        const Arg& b = n.args[1];
        Bitset r;
        if (a.slot == t && b.slot == t) {
          r = full_;
        } else if (n.kind == Node::Kind::kEq) {
          r = Bitset::singleton(n_, static_cast<std::size_t>(value(a.slot == t ? b : a, f)));
        } else if (a.slot == t) {
          r = u_.up_set(value(b, f));  // x >= b
        } else {
          r = u_.down_set(value(a, f));  // a >= x
        }
        if (n.neg) r.flip();
        return r;
      }
      case Node::Kind::kCall:
      case Node::Kind::kBuiltin: {
        std::array<Id, kMaxArity> ids{};
        std::size_t hits = 0, pos = 0;
        for (std::size_t i = 0; i < n.args.size(); ++i) {
          if (n.args[i].slot == t) {
            ++hits;
            pos = i;
          } else {
            ids[i] = value(n.args[i], f);
          }
        }
        std::span<Id> view(ids.data(), n.args.size());
        Bitset r;
        if (n.kind == Node::Kind::kCall && hits == 1) {
          r = row(n.target, pos, view);
        } else if (n.kind == Node::Kind::kBuiltin && hits == 1) {
          r = builtin_row(n.target, pos, view);
        } else {
          Bitset candidates = full_;
          if (n.kind == Node::Kind::kBuiltin) {
            for (std::size_t i = 0; i < n.args.size(); ++i)
              if (n.args[i].slot == t) candidates &= domains_[n.target][i];
          }
          r = Bitset(n_);
          candidates.for_each([&](std::size_t x) {
            for (std::size_t i = 0; i < n.args.size(); ++i)
              if (n.args[i].slot == t) ids[i] = static_cast<Id>(x);
            const bool v = n.kind == Node::Kind::kCall ? call_holds(n.target, view) : builtin_holds(n.target, view);
            if (v) r.set(x);
          });
        }
        if (n.neg) r.flip();
        return r;
      }
      case Node::Kind::kAnd: {
        for (const auto& k : n.kids)
          if (!(k.free & bit(t)) && !holds(k, f)) return empty_;
        Bitset r = full_;
        for (const auto& k : n.kids) {
          if (!(k.free & bit(t))) continue;
          r &= collect(k, f, t);
          if (r.none()) break;
        }
        return r;
      }
      case Node::Kind::kOr: {
        for (const auto& k : n.kids)
          if (!(k.free & bit(t)) && holds(k, f)) return full_;
        Bitset r = empty_;
        for (const auto& k : n.kids) {
          if (!(k.free & bit(t))) continue;
          r |= collect(k, f, t);
          if (r.all()) break;
        }
        return r;
      }
      case Node::Kind::kBlock: {
        std::vector<const Node*> conj;
        for (const auto& k : n.kids) conj.push_back(&k);
        Bitset r = block_collect(n.vars, conj, f, t);
        if (n.neg) r.flip();
        return r;
      }
    }
    return empty_;
  }

  struct Choice {
    Slot var = -1;
    Bitset guard;
    std::vector<const Node*> rest;
  };

  // Picks the quantified variable with the smallest guard: the conjunction
  // of conjuncts whose only unbound variable it is.
  Choice choose(std::uint64_t vars, std::uint64_t unbound, const std::vector<const Node*>& conj, Frame& f) {
    Choice best;
    std::size_t best_count = 0;
    for (Slot v = 0; v < 64; ++v) {
      if (!(vars & bit(v))) continue;
      Bitset g = full_;
      for (const Node* c : conj) {
        if ((c->free & unbound) == bit(v)) {
          g &= collect(*c, f, v);
          if (g.none()) break;
        } else if (c->kind == Node::Kind::kBuiltin && !c->neg && (c->free & bit(v))) {
          for (std::size_t i = 0; i < c->args.size(); ++i)
            if (c->args[i].slot == v) g &= domains_[c->target][i];
        }
      }
      const std::size_t count = g.count();
      if (best.var < 0 || count < best_count) {
        best.var = v;
        best.guard = std::move(g);
        best_count = count;
        if (count == 0) break;
      }
    }
    for (const Node* c : conj)
      if ((c->free & unbound) != bit(best.var)) best.rest.push_back(c);
    return best;
  }

  bool block_any(std::uint64_t vars, const std::vector<const Node*>& conj, Frame& f) {
    std::vector<const Node*> rest;
    for (const Node* c : conj) {
      if (!(c->free & vars)) {
        if (!holds(*c, f)) return false;
      } else {
        rest.push_back(c);
      }
    }
    if (vars == 0) return true;
    Choice ch = choose(vars, vars, rest, f);
    const auto slot = static_cast<std::size_t>(ch.var);
    bool found = false;
    ch.guard.for_each([&](std::size_t y) {
      if (found) return;
      f[slot] = static_cast<Id>(y);
      found = block_any(vars & ~bit(ch.var), ch.rest, f);
    });
    f[slot] = -1;
    return found;
  }

  Bitset block_collect(std::uint64_t vars, const std::vector<const Node*>& conj, Frame& f, Slot t) {
    const std::uint64_t unbound = vars | bit(t);
    std::vector<const Node*> rest;
    for (const Node* c : conj) {
      if (!(c->free & unbound)) {
        if (!holds(*c, f)) return empty_;
      } else {
        rest.push_back(c);
      }
    }
    Bitset tset = full_;
    std::vector<const Node*> open;
    for (const Node* c : rest) {
      if ((c->free & unbound) == bit(t)) {
        tset &= collect(*c, f, t);
        if (tset.none()) return tset;
      } else {
        open.push_back(c);
      }
    }
    if (vars == 0) return tset;
    Choice ch = choose(vars, unbound, open, f);
    const auto slot = static_cast<std::size_t>(ch.var);
    Bitset result = empty_;
    bool saturated = false;
    ch.guard.for_each([&](std::size_t y) {
      if (saturated) return;
      f[slot] = static_cast<Id>(y);
      result |= block_collect(vars & ~bit(ch.var), ch.rest, f, t);
      saturated = tset.is_subset_of(result);
    });
    f[slot] = -1;
    return result &= tset;
  }

  std::size_t n_;
  Bitset full_;
  Bitset empty_;
  std::vector<std::optional<Compiled>> compiled_;
  std::vector<const Builtin*> builtins_;
  std::vector<std::vector<Bitset>> domains_;  // per builtin, per position
  std::unordered_map<Key, Bitset, KeyHash> builtin_rows_;
  std::unordered_map<Key, bool, KeyHash> scalar_memo_;
  std::unordered_map<Key, Bitset, KeyHash> row_memo_;
  std::chrono::steady_clock::time_point start_;
};

Evaluator::Evaluator(const Universe& universe, const DefinitionSet& defs, Strategy strategy, Budget budget)
    : impl_(std::make_unique<Impl>(universe, defs, strategy, budget)) {}
Evaluator::~Evaluator() = default;
Evaluator::Evaluator(Evaluator&&) noexcept = default;
Evaluator& Evaluator::operator=(Evaluator&&) noexcept = default;

bool Evaluator::holds(std::string_view name, std::span<const Word> args) {
  const std::size_t def = impl_->defs_.index_of(name);
  std::vector<Id> ids;
  for (const Word& w : args) {
    auto id = impl_->u_.find(w);
    if (!id) {
      throw RankOverflow("argument " + w.display() + " has rank " + std::to_string(rank(w)) + ", above U_" +
                         std::to_string(impl_->u_.max_rank()));
    }
    ids.push_back(*id);
  }
  return impl_->holds(def, ids);
}

bool Evaluator::holds(std::size_t def, std::span<const Id> args) { return impl_->holds(def, args); }

Bitset Evaluator::extension(std::size_t def, std::size_t pos, std::span<const Id> args) {
  return impl_->extension(def, pos, args);
}

const EvalStats& Evaluator::stats() const noexcept { return impl_->stats_; }
const Universe& Evaluator::universe() const noexcept { return impl_->u_; }
const DefinitionSet& Evaluator::definitions() const noexcept { return impl_->defs_; }
Strategy Evaluator::strategy() const noexcept { return impl_->strategy_; }

EvalOutcome evaluate(const Universe& universe, const DefinitionSet& defs, std::string_view name,
                     std::span<const Word> args, Budget budget, Strategy strategy) {
  Evaluator ev(universe, defs, strategy, budget);
  EvalOutcome out;
  out.value = ev.holds(name, args);
  out.stats = ev.stats();
  out.universe_rank = universe.max_rank();
  return out;
}

}  // namespace yf::fol
