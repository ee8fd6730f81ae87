#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "cec/proof/script.hpp"

namespace cec::proof {

namespace {

enum class Tok { Ident, Punct, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t offset;  // byte offset in the logical line
};

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

const std::vector<std::pair<std::string, std::string>>& unicode_aliases() {
  static const std::vector<std::pair<std::string, std::string>> a = {
      {"≡", "=="}, {"≲", "<="},     {"∘", "."},      {"×", "*"},
      {"⋉", "ltimes"}, {"⋊", "rtimes"}, {"⟨", "<"},  {"⟩", ">"},
      {"→", "->"}, {"⇝", "~>"}};
  return a;
}

std::vector<Token> lex(const std::string& s, std::size_t line, std::size_t base_column) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      continue;
    }
    if (c == '#') break;
    if (std::isalnum(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && ident_char(s[j])) ++j;
      out.push_back({Tok::Ident, s.substr(i, j - i), i});
      i = j;
      continue;
    }
    bool matched = false;
    for (const auto& [u, ascii] : unicode_aliases()) {
      if (s.compare(i, u.size(), u) == 0) {
        out.push_back({ascii == "ltimes" || ascii == "rtimes" ? Tok::Ident : Tok::Punct, ascii, i});
        i += u.size();
        matched = true;
        break;
      }
    }
    if (matched) continue;
    static const char* two[] = {"==", "<=", "->", "~>", ":=", "_l", "_r"};
    for (const char* p : two) {
      if (s.compare(i, 2, p) == 0) {
        out.push_back({Tok::Punct, p, i});
        i += 2;
        matched = true;
        break;
      }
    }
    if (matched) continue;
    if (std::string(":;,.*<>[](){}=").find(c) != std::string::npos) {
      out.push_back({Tok::Punct, std::string(1, c), i});
      ++i;
      continue;
    }
    throw ParseError(line, base_column + i, std::string("unexpected character '") + c + "'");
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

const std::set<std::string>& reserved() {
  static const std::set<std::string> r = {
      "id",     "bang",   "p1",     "p2",     "swap",   "assoc", "assoc_inv", "rho",
      "diag",   "ltimes", "rtimes", "U",      "object", "objects", "symbol",  "pure",
      "define", "assume", "goal",   "by",     "lemma"};
  return r;
}

class Parser {
 public:
  Parser(const std::string& text, std::size_t line, const Scope& scope, std::size_t column = 1)
      : text_(text), line_(line), column_(column), scope_(scope), toks_(lex(text, line, column)) {}

  const Token& peek() const { return toks_[pos_]; }
  bool at(const char* p) const { return peek().kind != Tok::End && peek().text == p; }
  bool at_end() const { return peek().kind == Tok::End; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(line_, column_ + peek().offset, msg);
  }

  Token next() {
    Token t = peek();
    if (t.kind != Tok::End) ++pos_;
    return t;
  }

  void expect(const char* p) {
    if (!at(p)) fail(std::string("expected '") + p + "'" + found());
    next();
  }

  std::string found() const {
    return at_end() ? ", found end of line" : ", found '" + peek().text + "'";
  }

  std::string ident(const char* what) {
    if (peek().kind != Tok::Ident) fail(std::string("expected ") + what + found());
    return next().text;
  }

  void expect_end() {
    if (!at_end()) fail("unexpected '" + peek().text + "'");
  }

  std::size_t offset() const { return peek().offset; }
  std::string slice(std::size_t from, std::size_t to) const { return text_.substr(from, to - from); }

  Obj object() {
    Obj o = object_atom();
    while (at("*")) {
      next();
      o = Obj::product(o, object_atom());
    }
    return o;
  }

  Obj object_atom() {
    if (at("(")) {
      next();
      Obj o = object();
      expect(")");
      return o;
    }
    std::string n = ident("an object");
    if (n == "U") return Obj::unit();
    if (!scope_.has_object(n)) fail("unknown object '" + n + "'");
    return Obj::base(n);
  }

  std::vector<Obj> object_args(const std::string& who, std::size_t arity) {
    if (!at("[")) fail(who + " needs object arguments in brackets");
    next();
    std::vector<Obj> objs{object()};
    while (at(",")) {
      next();
      objs.push_back(object());
    }
    expect("]");
    if (objs.size() != arity)
      fail(who + " takes " + std::to_string(arity) + " object argument" + (arity > 1 ? "s" : ""));
    return objs;
  }

  TermPtr term() {
    TermPtr t = product();
    while (at(".")) {
      next();
      TermPtr f = product();
      t = typed([&] { return make_comp(t, f); });
    }
    return t;
  }

  TermPtr product() {
    TermPtr t = atom();
    while (at("*") || at("ltimes") || at("rtimes")) {
      std::string op = next().text;
      TermPtr b = atom();
      if (op == "*") t = typed([&] { return make_prod(t, b); });
      else if (op == "ltimes") t = typed([&] { return make_ltimes(t, b); });
      else t = typed([&] { return make_rtimes(t, b); });
    }
    return t;
  }

  TermPtr atom() {
    if (at("(")) {
      next();
      TermPtr t = term();
      expect(")");
      return t;
    }
    if (at("<")) {
      next();
      TermPtr a = term();
      expect(",");
      TermPtr b = term();
      expect(">");
      if (at("_l")) {
        next();
        return typed([&] { return make_lpair(a, b); });
      }
      if (at("_r")) {
        next();
        return typed([&] { return make_rpair(a, b); });
      }
      return typed([&] { return make_pairing(a, b); });
    }
    std::string n = ident("a term");
    if (n == "id") return make_id(object_args(n, 1)[0]);
    if (n == "bang") return make_bang(object_args(n, 1)[0]);
    if (n == "rho") return make_rho(object_args(n, 1)[0]);
    if (n == "diag") return make_diag(object_args(n, 1)[0]);
    if (n == "p1" || n == "p2" || n == "swap") {
      auto o = object_args(n, 2);
      if (n == "p1") return make_proj1(o[0], o[1]);
      if (n == "p2") return make_proj2(o[0], o[1]);
      return make_swap(o[0], o[1]);
    }
    if (n == "assoc" || n == "assoc_inv") {
      auto o = object_args(n, 3);
      return n == "assoc" ? make_assoc(o[0], o[1], o[2]) : make_assoc_inv(o[0], o[1], o[2]);
    }
    if (auto it = scope_.defines.find(n); it != scope_.defines.end()) return it->second;
    if (const SymbolDecl* d = scope_.symbol(n)) return make_sym(d->name, d->dom, d->cod, d->pure);
    fail("unknown symbol '" + n + "'");
  }

  Judgment judgment() {
    TermPtr lhs = term();
    Rel rel;
    if (at("==")) rel = Rel::Strong;
    else if (at("<=")) rel = Rel::Semi;
    else fail("expected '==' or '<='" + found());
    next();
    TermPtr rhs = term();
    if (!(lhs->dom == rhs->dom) || !(lhs->cod == rhs->cod))
      throw TypeError("line " + std::to_string(line_) + ": sides have different types: " +
                      lhs->dom.text() + " -> " + lhs->cod.text() + " and " + rhs->dom.text() +
                      " -> " + rhs->cod.text());
    return {rel, lhs, rhs};
  }

 private:
  template <class F>
  TermPtr typed(F&& build) {
    try {
      return build();
    } catch (const TypeError& e) {
      throw TypeError("line " + std::to_string(line_) + ": " + e.what());
    }
  }

  std::string text_;
  std::size_t line_, column_;
  const Scope& scope_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

void check_fresh(const Parser& p, const Scope& scope, const std::string& n) {
  if (reserved().count(n)) p.fail("'" + n + "' is reserved");
  if (scope.has_object(n) || scope.symbol(n) || scope.defines.count(n))
    p.fail("'" + n + "' is already declared");
}

}  // namespace

bool Scope::has_object(const std::string& name) const {
  return std::find(objects.begin(), objects.end(), name) != objects.end();
}

const SymbolDecl* Scope::symbol(const std::string& name) const {
  for (const auto& s : symbols)
    if (s.name == name) return &s;
  return nullptr;
}

std::string render(const Judgment& j) {
  return j.lhs->key + (j.rel == Rel::Strong ? " == " : " <= ") + j.rhs->key;
}

bool same(const Judgment& a, const Judgment& b) {
  return a.rel == b.rel && same(a.lhs, b.lhs) && same(a.rhs, b.rhs);
}

TermPtr parse_term(const std::string& text, const Scope& scope) {
  Parser p(text, 1, scope);
  TermPtr t = p.term();
  p.expect_end();
  return t;
}

Obj parse_object(const std::string& text, const Scope& scope) {
  Parser p(text, 1, scope);
  Obj o = p.object();
  p.expect_end();
  return o;
}

ProofScript parse_script(const std::string& text, const std::string& name) {
  ProofScript script;
  script.name = name;
  std::set<std::string> labels;

  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::size_t start = lineno;
    // A trailing backslash continues the logical line.
    while (!raw.empty() && raw.back() == '\\') {
      raw.pop_back();
      std::string more;
      if (!std::getline(in, more)) break;
      ++lineno;
      raw += " " + more;
    }
    Parser p(raw, start, script.scope);
    if (p.at_end()) continue;
    Scope& scope = script.scope;

    auto new_label = [&](const std::string& l) {
      if (!labels.insert(l).second) p.fail("duplicate label '" + l + "'");
    };

    if (p.at("object") || p.at("objects")) {
      p.next();
      if (p.at_end()) p.fail("expected object names");
      while (!p.at_end()) {
        std::string n = p.ident("an object name");
        check_fresh(p, scope, n);
        scope.objects.push_back(n);
      }
    } else if (p.at("symbol") || p.at("pure")) {
      bool pure = p.next().text == "pure";
      std::vector<std::string> names{p.ident("a symbol name")};
      while (p.at(",")) {
        p.next();
        names.push_back(p.ident("a symbol name"));
      }
      p.expect(":");
      Obj dom = p.object();
      if (p.at("~>")) pure = true;
      else if (!p.at("->")) p.fail("expected '->' or '~>'" + p.found());
      p.next();
      Obj cod = p.object();
      p.expect_end();
      for (const auto& n : names) {
        check_fresh(p, scope, n);
        scope.symbols.push_back({n, dom, cod, pure});
      }
    } else if (p.at("define")) {
      p.next();
      std::string n = p.ident("a name");
      check_fresh(p, scope, n);
      p.expect("=");
      TermPtr t = p.term();
      p.expect_end();
      scope.defines.emplace(n, t);
    } else if (p.at("assume")) {
      p.next();
      std::string l = p.ident("a label");
      new_label(l);
      p.expect(":");
      Judgment j = p.judgment();
      p.expect_end();
      if (!script.steps.empty()) p.fail("assumptions must precede the steps");
      script.assumptions.push_back({l, j});
    } else if (p.at("goal")) {
      p.next();
      p.expect(":");
      Judgment j = p.judgment();
      p.expect_end();
      if (script.goal) p.fail("second goal");
      script.goal = j;
    } else {
      Step s;
      s.line = start;
      s.label = p.ident("a step label");
      new_label(s.label);
      p.expect(":");
      try {
        s.judgment = p.judgment();
      } catch (const TypeError& e) {
        throw TypeError(e.what(), s.label);
      }
      p.expect(";");
      p.expect("by");
      s.by.rule = p.ident("a rule name");
      if (s.by.rule == "lemma") s.by.lemma = p.ident("a lemma name");
      if (p.at("[")) {
        p.next();
        if (!p.at("]")) {
          s.by.premises.push_back(p.ident("a premise label"));
          while (p.at(",")) {
            p.next();
            s.by.premises.push_back(p.ident("a premise label"));
          }
        }
        p.expect("]");
      }
      if (p.at("{")) {
        p.next();
        while (!p.at("}")) {
          std::string n = p.ident("a lemma variable");
          p.expect(":=");
          std::size_t from = p.offset();
          int depth = 0;
          while (!p.at_end() && !(depth == 0 && (p.at(",") || p.at("}")))) {
            if (p.at("(") || p.at("[") || p.at("<")) ++depth;
            if (p.at(")") || p.at("]") || p.at(">")) --depth;
            p.next();
          }
          if (p.at_end()) p.fail("unterminated instantiation");
          if (p.offset() == from) p.fail("empty instantiation for '" + n + "'");
          s.by.instantiation.emplace_back(n, p.slice(from, p.offset()));
          if (p.at(",")) p.next();
        }
        p.expect("}");
      }
      p.expect_end();
      script.steps.push_back(std::move(s));
    }
  }
  return script;
}

ProofScript parse_script_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  std::string name = path;
  if (auto slash = name.find_last_of('/'); slash != std::string::npos) name = name.substr(slash + 1);
  if (name.size() > 4 && name.compare(name.size() - 4, 4, ".eqp") == 0)
    name = name.substr(0, name.size() - 4);
  return parse_script(ss.str(), name);
}

}  // namespace cec::proof
