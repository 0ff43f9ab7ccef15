#include "yf/dsl.hpp"

#include <cctype>
#include <sstream>
#include <variant>
#include <vector>

namespace yf::fol {

DslSyntaxError::DslSyntaxError(std::size_t line, std::size_t column, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

namespace {

struct Pos {
  std::size_t line = 1;
  std::size_t column = 1;
};

struct Sexp {
  enum class Kind { kSymbol, kWord, kList };
  Kind kind = Kind::kSymbol;
  std::string text;  // symbol name or word digits
  std::vector<Sexp> items;
  Pos pos;
};

class Reader {
 public:
  explicit Reader(std::string_view src) : src_(src) {}

  bool at_end() {
    skip_space();
    return i_ >= src_.size();
  }

  Sexp read() {
    skip_space();
    if (i_ >= src_.size()) fail("unexpected end of input");
    const Pos start = pos_;
    const char c = src_[i_];
    if (c == '(') {
      advance();
      Sexp list{Sexp::Kind::kList, {}, {}, start};
      while (true) {
        skip_space();
        if (i_ >= src_.size()) throw DslSyntaxError(start.line, start.column, "unclosed '('");
        if (src_[i_] == ')') {
          advance();
          return list;
        }
        list.items.push_back(read());
      }
    }
    if (c == ')') fail("unexpected ')'");
    if (c == 'w' && i_ + 1 < src_.size() && src_[i_ + 1] == '"') {
      advance();
      advance();
      std::string digits;
      while (i_ < src_.size() && src_[i_] != '"') {
        if (src_[i_] != '1' && src_[i_] != '2') fail("word literals may contain only 1 and 2");
        digits.push_back(src_[i_]);
        advance();
      }
      if (i_ >= src_.size()) throw DslSyntaxError(start.line, start.column, "unterminated word literal");
      advance();
      return Sexp{Sexp::Kind::kWord, digits, {}, start};
    }
    if (!symbol_char(c)) fail(std::string("unexpected character '") + c + "'");
    std::string name;
    while (i_ < src_.size() && symbol_char(src_[i_])) {
      name.push_back(src_[i_]);
      advance();
    }
    return Sexp{Sexp::Kind::kSymbol, name, {}, start};
  }

 private:
  static bool symbol_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '-';
  }

  void advance() {
    if (src_[i_] == '\n') {
      ++pos_.line;
      pos_.column = 1;
    } else {
      ++pos_.column;
    }
    ++i_;
  }

  void skip_space() {
    while (i_ < src_.size()) {
      if (std::isspace(static_cast<unsigned char>(src_[i_]))) {
        advance();
      } else if (src_[i_] == ';') {
        while (i_ < src_.size() && src_[i_] != '\n') advance();
      } else {
        break;
      }
    }
  }

  [[noreturn]] void fail(const std::string& what) const { throw DslSyntaxError(pos_.line, pos_.column, what); }

  std::string_view src_;
  std::size_t i_ = 0;
  Pos pos_;
};

[[noreturn]] void fail_at(const Sexp& s, const std::string& what) {
  throw DslSyntaxError(s.pos.line, s.pos.column, what);
}

const std::string& symbol(const Sexp& s, const char* role) {
  if (s.kind != Sexp::Kind::kSymbol) fail_at(s, std::string("expected ") + role);
  return s.text;
}

Term to_term(const Sexp& s) {
  if (s.kind == Sexp::Kind::kWord) return Term::literal(Word(s.text));
  if (s.kind == Sexp::Kind::kSymbol) return Term::variable(s.text);
  fail_at(s, "expected a variable or word literal");
}

std::vector<Term> terms_from(const Sexp& s, std::size_t first) {
  std::vector<Term> out;
  for (std::size_t i = first; i < s.items.size(); ++i) out.push_back(to_term(s.items[i]));
  return out;
}

FormulaPtr to_formula(const Sexp& s) {
  if (s.kind == Sexp::Kind::kSymbol) {
    if (s.text == "true") return truth(true);
    if (s.text == "false") return truth(false);
  }
  if (s.kind != Sexp::Kind::kList || s.items.empty()) fail_at(s, "expected a formula");
  const std::string& head = symbol(s.items[0], "a connective");
  const std::size_t argc = s.items.size() - 1;
  auto need = [&](std::size_t n) {
    if (argc != n) fail_at(s, "'" + head + "' takes " + std::to_string(n) + " arguments, got " + std::to_string(argc));
  };
  auto kids = [&] {
    std::vector<FormulaPtr> out;
    for (std::size_t i = 1; i < s.items.size(); ++i) out.push_back(to_formula(s.items[i]));
    return out;
  };
  if (head == "geq" || head == "eq") {
    need(2);
    Term a = to_term(s.items[1]);
    Term b = to_term(s.items[2]);
    return head == "geq" ? geq(std::move(a), std::move(b)) : eq(std::move(a), std::move(b));
  }
  if (head == "not") {
    need(1);
    return negation(to_formula(s.items[1]));
  }
  if (head == "and") return conj(kids());
  if (head == "or") return disj(kids());
  if (head == "implies" || head == "iff") {
    need(2);
    auto a = to_formula(s.items[1]);
    auto b = to_formula(s.items[2]);
    return head == "implies" ? implies(std::move(a), std::move(b)) : iff(std::move(a), std::move(b));
  }
  if (head == "forall" || head == "exists") {
    need(2);
    std::string var = symbol(s.items[1], "a variable");
    auto body = to_formula(s.items[2]);
    return head == "forall" ? forall(std::move(var), std::move(body)) : exists(std::move(var), std::move(body));
  }
  if (head == "call" || head == "builtin") {
    if (argc < 1) fail_at(s, "'" + head + "' needs a name");
    std::string name = symbol(s.items[1], "a name");
    auto args = terms_from(s, 2);
    return head == "call" ? call(std::move(name), std::move(args)) : builtin(std::move(name), std::move(args));
  }
  fail_at(s.items[0], "unknown form '" + head + "'");
}

}  // namespace

DefinitionSet parse_defs(std::string_view text, DefinitionSet base) {
  Reader reader(text);
  while (!reader.at_end()) {
    Sexp form = reader.read();
    if (form.kind != Sexp::Kind::kList || form.items.size() != 4 || form.items[0].kind != Sexp::Kind::kSymbol ||
        form.items[0].text != "def") {
      fail_at(form, "expected (def name (params...) body)");
    }
    Definition def;
    def.name = symbol(form.items[1], "a definition name");
    const Sexp& params = form.items[2];
    if (params.kind != Sexp::Kind::kList) fail_at(params, "expected a parameter list");
    for (const Sexp& p : params.items) def.params.push_back(symbol(p, "a parameter name"));
    def.body = to_formula(form.items[3]);
    try {
      base.add(std::move(def));
    } catch (const DefinitionError& e) {
      throw DefinitionError("line " + std::to_string(form.pos.line) + ": " + e.what());
    }
  }
  base.validate();
  return base;
}

FormulaPtr parse_formula(std::string_view text) {
  Reader reader(text);
  FormulaPtr f = to_formula(reader.read());
  if (!reader.at_end()) throw DslSyntaxError(1, 1, "trailing input after formula");
  return f;
}

std::string to_string(const Term& t) { return t.is_var() ? t.var : "w\"" + t.lit.str() + "\""; }

namespace {

const char* head_of(Op op) {
  switch (op) {
    case Op::kTrue: return "true";
    case Op::kFalse: return "false";
    case Op::kGeq: return "geq";
    case Op::kEq: return "eq";
    case Op::kNot: return "not";
    case Op::kAnd: return "and";
    case Op::kOr: return "or";
    case Op::kImplies: return "implies";
    case Op::kIff: return "iff";
    case Op::kForall: return "forall";
    case Op::kExists: return "exists";
    case Op::kCall: return "call";
    case Op::kBuiltin: return "builtin";
  }
  return "?";
}

constexpr std::size_t kWidth = 96;

void render(const Formula& f, std::size_t indent, std::ostringstream& out) {
  const std::string flat = to_string(f);
  const bool breakable = !f.kids.empty();
  if (!breakable || indent + flat.size() <= kWidth) {
    out << flat;
    return;
  }
  const std::string pad(indent + 2, ' ');
  out << '(' << head_of(f.op);
  if (f.op == Op::kForall || f.op == Op::kExists) out << ' ' << f.name;
  for (const auto& k : f.kids) {
    out << '\n' << pad;
    render(*k, indent + 2, out);
  }
  out << ')';
}

}  // namespace

std::string to_string(const Formula& f) {
  if (f.op == Op::kTrue || f.op == Op::kFalse) return head_of(f.op);
  std::string out = "(";
  out += head_of(f.op);
  if (f.op == Op::kForall || f.op == Op::kExists || f.op == Op::kCall || f.op == Op::kBuiltin) {
    out += ' ';
    out += f.name;
  }
  for (const Term& t : f.terms) {
    out += ' ';
    out += to_string(t);
  }
  for (const auto& k : f.kids) {
    out += ' ';
    out += to_string(*k);
  }
  out += ')';
  return out;
}

std::string pretty(const Definition& def) {
  std::ostringstream head;
  head << "(def " << def.name << " (";
  for (std::size_t i = 0; i < def.params.size(); ++i) head << (i ? " " : "") << def.params[i];
  head << ")";
  const std::string flat = head.str() + " " + to_string(*def.body) + ")";
  if (flat.size() <= kWidth) return flat;
  std::ostringstream out;
  out << head.str() << "\n  ";
  render(*def.body, 2, out);
  out << ')';
  return out.str();
}

std::string pretty(const DefinitionSet& set) {
  std::string out;
  for (const auto& d : set.definitions()) {
    out += pretty(d);
    out += '\n';
  }
  return out;
}

}  // namespace yf::fol
