#include "yf/classify.hpp"

#include <algorithm>
#include <map>

namespace yf::fol {

namespace {

// A quantifier prefix up to block structure: its first kind and number of
// alternating blocks. Concatenation merges equal neighbouring blocks.
struct Shape {
  bool exists_first = true;
  std::size_t blocks = 0;

  bool last_exists() const { return blocks % 2 == 1 ? exists_first : !exists_first; }

  Shape dual() const { return blocks == 0 ? *this : Shape{!exists_first, blocks}; }

  Shape then(const Shape& o) const {
    if (blocks == 0) return o;
    if (o.blocks == 0) return *this;
    const bool merge = last_exists() == o.exists_first;
    return Shape{exists_first, blocks + o.blocks - (merge ? 1 : 0)};
  }
};

class Classifier {
 public:
  explicit Classifier(const DefinitionSet& defs) : defs_(defs) {}

  // Shape of the NNF of f (negated when `neg`), prenexed left to right.
  Shape shape(const Formula& f, bool neg) {
    switch (f.op) {
      case Op::kTrue:
      case Op::kFalse:
      case Op::kGeq:
      case Op::kEq:
      case Op::kBuiltin:
        return {};
      case Op::kNot:
        return shape(*f.kids[0], !neg);
      case Op::kAnd:
      case Op::kOr: {
        Shape s;
        for (const auto& k : f.kids) s = s.then(shape(*k, neg));
        return s;
      }
      case Op::kImplies:
        // !a | b, or a & !b
        return shape(*f.kids[0], !neg).then(shape(*f.kids[1], neg));
      case Op::kIff: {
        const Formula& a = *f.kids[0];
        const Formula& b = *f.kids[1];
        if (neg) return shape(a, false).then(shape(b, true)).then(shape(a, true)).then(shape(b, false));
        return shape(a, true).then(shape(b, false)).then(shape(a, false)).then(shape(b, true));
      }
      case Op::kForall:
      case Op::kExists: {
        const bool ex = (f.op == Op::kExists) != neg;
        return Shape{ex, 1}.then(shape(*f.kids[0], neg));
      }
      case Op::kCall: {
        const Shape s = definition(f.name);
        return neg ? s.dual() : s;
      }
    }
    return {};
  }

  Shape definition(const std::string& name) {
    auto it = memo_.find(name);
    if (it != memo_.end()) return it->second;
    const Definition* d = defs_.find(name);
    if (!d) throw DefinitionError("unknown definition '" + name + "'");
    const Shape s = shape(*d->body, false);
    memo_.emplace(name, s);
    return s;
  }

 private:
  const DefinitionSet& defs_;
  std::map<std::string, Shape> memo_;
};

QuantClass to_class(const Shape& s) {
  if (s.blocks == 0) return {};
  return QuantClass{s.exists_first ? QuantClass::Kind::kSigma : QuantClass::Kind::kPi, s.blocks};
}

}  // namespace

std::size_t QuantClass::pi_bound() const noexcept {
  if (level == 0) return 0;
  return kind == Kind::kSigma ? level + 1 : level;
}

std::string QuantClass::to_string() const {
  if (level == 0) return "quantifier-free";
  return (kind == Kind::kSigma ? "Sigma_" : "Pi_") + std::to_string(level);
}

QuantClass classify(const DefinitionSet& defs, std::string_view name) {
  Classifier c(defs);
  return to_class(c.definition(std::string(name)));
}

QuantClass classify(const DefinitionSet& defs, const FormulaPtr& f) {
  Classifier c(defs);
  return to_class(c.shape(*f, false));
}

std::size_t common_pi_bound(const DefinitionSet& defs, const std::vector<std::string>& names) {
  std::size_t m = 0;
  for (const auto& n : names) m = std::max(m, classify(defs, n).pi_bound());
  return m;
}

}  // namespace yf::fol
