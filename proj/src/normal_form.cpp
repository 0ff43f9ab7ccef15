#include "yf/normal_form.hpp"

namespace yf::fol {

namespace {

FormulaPtr nnf_of(const FormulaPtr& f, bool negate) {
  switch (f->op) {
    case Op::kTrue:
    case Op::kFalse:
      return negate ? truth(f->op == Op::kFalse) : f;
    case Op::kGeq:
    case Op::kEq:
    case Op::kCall:
    case Op::kBuiltin:
      return negate ? negation(f) : f;
    case Op::kNot:
      return nnf_of(f->kids[0], !negate);
    case Op::kAnd:
    case Op::kOr: {
      std::vector<FormulaPtr> kids;
      for (const auto& k : f->kids) kids.push_back(nnf_of(k, negate));
      return ((f->op == Op::kAnd) != negate) ? conj(std::move(kids)) : disj(std::move(kids));
    }
    case Op::kImplies: {
      // a -> b == !a | b ; negated: a & !b
      if (negate) return conj({nnf_of(f->kids[0], false), nnf_of(f->kids[1], true)});
      return disj({nnf_of(f->kids[0], true), nnf_of(f->kids[1], false)});
    }
    case Op::kIff: {
      const auto& a = f->kids[0];
      const auto& b = f->kids[1];
      if (negate) {
        return disj({conj({nnf_of(a, false), nnf_of(b, true)}), conj({nnf_of(a, true), nnf_of(b, false)})});
      }
      return conj({disj({nnf_of(a, true), nnf_of(b, false)}), disj({nnf_of(a, false), nnf_of(b, true)})});
    }
    case Op::kForall:
    case Op::kExists: {
      auto body = nnf_of(f->kids[0], negate);
      return ((f->op == Op::kForall) != negate) ? forall(f->name, std::move(body))
                                                : exists(f->name, std::move(body));
    }
  }
  return f;
}

FormulaPtr flattened(Op op, std::vector<FormulaPtr> kids) {
  std::vector<FormulaPtr> flat;
  for (auto& k : kids) {
    if (k->op == op) {
      flat.insert(flat.end(), k->kids.begin(), k->kids.end());
    } else {
      flat.push_back(std::move(k));
    }
  }
  if (flat.size() == 1) return flat.front();
  return op == Op::kAnd ? conj(std::move(flat)) : disj(std::move(flat));
}

FormulaPtr quantify(Op q, const std::string& var, FormulaPtr body) {
  return q == Op::kForall ? forall(var, std::move(body)) : exists(var, std::move(body));
}

FormulaPtr push(Op q, const std::string& var, const FormulaPtr& body) {
  if (!free_vars(*body).contains(var)) return body;
  const Op distributes = q == Op::kForall ? Op::kAnd : Op::kOr;
  const Op splits = q == Op::kForall ? Op::kOr : Op::kAnd;
  if (body->op == distributes) {
    std::vector<FormulaPtr> kids;
    for (const auto& k : body->kids) kids.push_back(push(q, var, k));
    return flattened(distributes, std::move(kids));
  }
  if (body->op == splits) {
    std::vector<FormulaPtr> with, without;
    for (const auto& k : body->kids) (free_vars(*k).contains(var) ? with : without).push_back(k);
    if (!without.empty()) {
      FormulaPtr inner = with.size() == 1 ? push(q, var, with.front()) : quantify(q, var, flattened(splits, with));
      without.push_back(std::move(inner));
      return flattened(splits, std::move(without));
    }
  }
  return quantify(q, var, body);
}

FormulaPtr scope(const FormulaPtr& f) {
  switch (f->op) {
    case Op::kAnd:
    case Op::kOr: {
      std::vector<FormulaPtr> kids;
      for (const auto& k : f->kids) kids.push_back(scope(k));
      return flattened(f->op, std::move(kids));
    }
    case Op::kNot:
      return negation(scope(f->kids[0]));
    case Op::kForall:
    case Op::kExists:
      return push(f->op, f->name, scope(f->kids[0]));
    default:
      return f;
  }
}

}  // namespace

FormulaPtr nnf(const FormulaPtr& f) { return nnf_of(f, false); }

FormulaPtr miniscope(const FormulaPtr& f) { return scope(nnf(f)); }

}  // namespace yf::fol
