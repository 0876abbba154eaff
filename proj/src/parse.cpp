#include "mqc/parse.hpp"

#include <cctype>
#include <map>
#include <sstream>

#include "mqc/print.hpp"

namespace mqc {

ParseError::ParseError(int line, int column, std::string what,
                       std::vector<std::string> expected)
    : std::runtime_error("parse error at " + std::to_string(line) + ":" +
                         std::to_string(column) + ": " + what),
      line(line),
      column(column),
      expected(std::move(expected)) {}

namespace {

enum class Tok {
  Ident,    // lowercase-initial
  UIdent,   // uppercase-initial (atom names)
  KwFun, KwGen, KwCase, KwOf, KwInl, KwInr, KwFst, KwSnd,
  KwDest, KwAs, KwIn, KwForall, KwExists, KwConst, KwVar,
  LParen, RParen, LBrack, RBrack,
  Comma, Dot, Pipe, Colon,
  FatArrow,  // =>
  Arrow,     // ->
  AndOp,     // conjunction symbol
  OrOp,      // disjunction symbol
  End,
};

const char* tok_name(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::UIdent: return "atom name";
    case Tok::KwFun: return "'fun'";
    case Tok::KwGen: return "'gen'";
    case Tok::KwCase: return "'case'";
    case Tok::KwOf: return "'of'";
    case Tok::KwInl: return "'inl'";
    case Tok::KwInr: return "'inr'";
    case Tok::KwFst: return "'fst'";
    case Tok::KwSnd: return "'snd'";
    case Tok::KwDest: return "'dest'";
    case Tok::KwAs: return "'as'";
    case Tok::KwIn: return "'in'";
    case Tok::KwForall: return "'forall'";
    case Tok::KwExists: return "'exists'";
    case Tok::KwConst: return "'const'";
    case Tok::KwVar: return "'var'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBrack: return "'['";
    case Tok::RBrack: return "']'";
    case Tok::Comma: return "','";
    case Tok::Dot: return "'.'";
    case Tok::Pipe: return "'|'";
    case Tok::Colon: return "':'";
    case Tok::FatArrow: return "'=>'";
    case Tok::Arrow: return "'->'";
    case Tok::AndOp: return "'/\\'";
    case Tok::OrOp: return "'\\/'";
    case Tok::End: return "end of input";
  }
  return "?";
}

struct Token {
  Tok kind;
  std::string text;
  int line, column;
};

const std::map<std::string, Tok> kKeywords = {
    {"fun", Tok::KwFun},       {"gen", Tok::KwGen},
    {"case", Tok::KwCase},     {"of", Tok::KwOf},
    {"inl", Tok::KwInl},       {"inr", Tok::KwInr},
    {"fst", Tok::KwFst},       {"snd", Tok::KwSnd},
    {"dest", Tok::KwDest},     {"as", Tok::KwAs},
    {"in", Tok::KwIn},         {"forall", Tok::KwForall},
    {"exists", Tok::KwExists}, {"const", Tok::KwConst},
    {"var", Tok::KwVar},
};

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto push = [&](Tok k, std::string s, int l, int c) {
    out.push_back(Token{k, std::move(s), l, c});
  };
  while (i < text.size()) {
    char c = text[i];
    int l = line, co = col;
    auto advance = [&](std::size_t n) {
      for (std::size_t k = 0; k < n; ++k) {
        if (text[i + k] == '\n') {
          ++line;
          col = 1;
        } else {
          ++col;
        }
      }
      i += n;
    };
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) ||
              text[j] == '_'))
        ++j;
      std::string word = text.substr(i, j - i);
      advance(j - i);
      auto kw = kKeywords.find(word);
      if (kw != kKeywords.end())
        push(kw->second, word, l, co);
      else if (std::isupper(static_cast<unsigned char>(word[0])))
        push(Tok::UIdent, word, l, co);
      else
        push(Tok::Ident, word, l, co);
      continue;
    }
    auto two = text.substr(i, 2);
    if (two == "=>") { push(Tok::FatArrow, two, l, co); advance(2); continue; }
    if (two == "->") { push(Tok::Arrow, two, l, co); advance(2); continue; }
    if (two == "/\\") { push(Tok::AndOp, two, l, co); advance(2); continue; }
    if (two == "\\/") { push(Tok::OrOp, two, l, co); advance(2); continue; }
    switch (c) {
      case '(': push(Tok::LParen, "(", l, co); advance(1); continue;
      case ')': push(Tok::RParen, ")", l, co); advance(1); continue;
      case '[': push(Tok::LBrack, "[", l, co); advance(1); continue;
      case ']': push(Tok::RBrack, "]", l, co); advance(1); continue;
      case ',': push(Tok::Comma, ",", l, co); advance(1); continue;
      case '.': push(Tok::Dot, ".", l, co); advance(1); continue;
      case '|': push(Tok::Pipe, "|", l, co); advance(1); continue;
      case ':': push(Tok::Colon, ":", l, co); advance(1); continue;
      default:
        throw ParseError(l, co, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back(Token{Tok::End, "", line, col});
  return out;
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, std::set<std::string> constants)
      : tokens_(std::move(tokens)), constants_(std::move(constants)) {}

  const Token& peek() const { return tokens_[pos_]; }
  bool at(Tok k) const { return peek().kind == k; }

  Token eat(Tok k) {
    if (!at(k))
      throw ParseError(peek().line, peek().column,
                       std::string("unexpected ") + tok_name(peek().kind),
                       {tok_name(k)});
    return tokens_[pos_++];
  }

  bool accept(Tok k) {
    if (!at(k)) return false;
    ++pos_;
    return true;
  }

  // --- individuals -------------------------------------------------------

  Individual individual() {
    Token t = eat(Tok::Ident);
    return classify(t.text);
  }

  Individual classify(const std::string& name) const {
    for (auto it = ind_scope_.rbegin(); it != ind_scope_.rend(); ++it)
      if (it->first == name) return ivar(it->second);
    if (constants_.count(name)) return iconst(name);
    return ivar(name);
  }

  // --- formulas ----------------------------------------------------------

  FormulaPtr formula() {
    if (at(Tok::KwForall) || at(Tok::KwExists)) {
      bool is_forall = accept(Tok::KwForall);
      if (!is_forall) eat(Tok::KwExists);
      Token v = eat(Tok::Ident);
      eat(Tok::Dot);
      std::string actual = fresh_binder(v.text);
      ind_scope_.emplace_back(v.text, actual);
      FormulaPtr body = formula();
      ind_scope_.pop_back();
      return is_forall ? forall(actual, body) : exists(actual, body);
    }
    return implication();
  }

  FormulaPtr implication() {
    FormulaPtr left = disjunction();
    if (accept(Tok::Arrow)) return imp(left, formula());
    return left;
  }

  FormulaPtr disjunction() {
    FormulaPtr left = conjunction();
    if (accept(Tok::OrOp)) {
      FormulaPtr right = (at(Tok::KwForall) || at(Tok::KwExists))
                             ? formula()
                             : disjunction();
      return disj(left, right);
    }
    return left;
  }

  FormulaPtr conjunction() {
    FormulaPtr left = formula_atom();
    if (accept(Tok::AndOp)) {
      FormulaPtr right = (at(Tok::KwForall) || at(Tok::KwExists))
                             ? formula()
                             : conjunction();
      return conj(left, right);
    }
    return left;
  }

  FormulaPtr formula_atom() {
    if (accept(Tok::LParen)) {
      FormulaPtr f = formula();
      eat(Tok::RParen);
      return f;
    }
    Token t = eat(Tok::UIdent);
    std::vector<Individual> args;
    if (accept(Tok::LParen)) {
      args.push_back(individual());
      while (accept(Tok::Comma)) args.push_back(individual());
      eat(Tok::RParen);
    }
    return atom(t.text, std::move(args));
  }

  // --- proof terms -------------------------------------------------------

  TermPtr term() {
    switch (peek().kind) {
      case Tok::KwFun: {
        eat(Tok::KwFun);
        Token v = eat(Tok::Ident);
        eat(Tok::FatArrow);
        return lam(v.text, term());
      }
      case Tok::KwGen: {
        eat(Tok::KwGen);
        Token v = eat(Tok::Ident);
        eat(Tok::FatArrow);
        ind_scope_.emplace_back(v.text, v.text);
        TermPtr body = term();
        ind_scope_.pop_back();
        return gen(v.text, body);
      }
      case Tok::KwCase: {
        eat(Tok::KwCase);
        TermPtr scrut = term();
        eat(Tok::KwOf);
        eat(Tok::KwInl);
        Token lv = eat(Tok::Ident);
        eat(Tok::FatArrow);
        TermPtr lb = term();
        eat(Tok::Pipe);
        eat(Tok::KwInr);
        Token rv = eat(Tok::Ident);
        eat(Tok::FatArrow);
        TermPtr rb = term();
        return kase(scrut, lv.text, lb, rv.text, rb);
      }
      case Tok::KwDest: {
        eat(Tok::KwDest);
        TermPtr scrut = term();
        eat(Tok::KwAs);
        eat(Tok::LBrack);
        Token iv = eat(Tok::Ident);
        eat(Tok::Comma);
        Token pv = eat(Tok::Ident);
        eat(Tok::RBrack);
        eat(Tok::KwIn);
        ind_scope_.emplace_back(iv.text, iv.text);
        TermPtr body = term();
        ind_scope_.pop_back();
        return dest(scrut, iv.text, pv.text, body);
      }
      default:
        return application();
    }
  }

  TermPtr application() {
    TermPtr head = prefix_term();
    for (;;) {
      if (at(Tok::Ident) || at(Tok::LParen) || at(Tok::KwFst) ||
          at(Tok::KwSnd) || at(Tok::KwInl) || at(Tok::KwInr)) {
        head = app(head, prefix_term());
      } else if (at(Tok::LBrack)) {
        // `p [t]` is individual application; `p [t, q]` applies p to an
        // existence witness.
        eat(Tok::LBrack);
        Individual t = individual();
        if (accept(Tok::Comma)) {
          TermPtr body = term();
          eat(Tok::RBrack);
          head = app(head, wit(t, body));
        } else {
          eat(Tok::RBrack);
          head = iapp(head, t);
        }
      } else {
        return head;
      }
    }
  }

  TermPtr prefix_term() {
    if (accept(Tok::KwFst)) return proj(1, prefix_term());
    if (accept(Tok::KwSnd)) return proj(2, prefix_term());
    if (accept(Tok::KwInl)) return inj(1, prefix_term());
    if (accept(Tok::KwInr)) return inj(2, prefix_term());
    return term_atom();
  }

  TermPtr term_atom() {
    if (at(Tok::Ident)) return var(eat(Tok::Ident).text);
    if (accept(Tok::LParen)) {
      TermPtr first = term();
      if (accept(Tok::Comma)) {
        TermPtr second = term();
        eat(Tok::RParen);
        return pair(first, second);
      }
      eat(Tok::RParen);
      return first;
    }
    if (accept(Tok::LBrack)) {
      Individual t = individual();
      eat(Tok::Comma);
      TermPtr body = term();
      eat(Tok::RBrack);
      return wit(t, body);
    }
    throw ParseError(peek().line, peek().column,
                     std::string("unexpected ") + tok_name(peek().kind),
                     {"identifier", "'('", "'['", "'fun'", "'case'"});
  }

  void expect_end() { eat(Tok::End); }

  void add_constant(const std::string& name) { constants_.insert(name); }

 private:
  std::string fresh_binder(const std::string& name) {
    bool shadowed = constants_.count(name) > 0;
    for (const auto& [src, actual] : ind_scope_)
      if (src == name || actual == name) shadowed = true;
    if (!shadowed) return name;
    std::set<std::string> avoid = constants_;
    for (const auto& [src, actual] : ind_scope_) {
      avoid.insert(src);
      avoid.insert(actual);
    }
    return avoid_name(name, avoid);
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::set<std::string> constants_;
  // Source name -> actual (possibly freshened) name, innermost last.
  std::vector<std::pair<std::string, std::string>> ind_scope_;
};

}  // namespace

FormulaPtr parse_formula(const std::string& text,
                         const std::set<std::string>& constants) {
  Parser p(lex(text), constants);
  FormulaPtr f = p.formula();
  p.expect_end();
  return f;
}

TermPtr parse_term(const std::string& text,
                   const std::set<std::string>& constants) {
  Parser p(lex(text), constants);
  TermPtr t = p.term();
  p.expect_end();
  return t;
}

Context parse_context(const std::string& text) {
  Parser p(lex(text), {});
  Context ctx;
  for (;;) {
    const Token& t = p.peek();
    if (t.kind == Tok::End) break;
    if (p.accept(Tok::KwConst)) {
      Token name = p.eat(Tok::Ident);
      p.eat(Tok::Dot);
      ctx.constants.insert(name.text);
      p.add_constant(name.text);
      continue;
    }
    if (p.accept(Tok::KwVar)) {
      Token name = p.eat(Tok::Ident);
      p.eat(Tok::Dot);
      ctx.ind_vars.insert(name.text);
      continue;
    }
    Token name = p.eat(Tok::Ident);
    p.eat(Tok::Colon);
    FormulaPtr f = p.formula();
    p.eat(Tok::Dot);
    if (ctx.has_hypothesis(name.text))
      throw ParseError(name.line, name.column,
                       "duplicate hypothesis '" + name.text + "'");
    for (const auto& v : free_ind_vars(f))
      if (!ctx.ind_vars.count(v) && !ctx.constants.count(v))
        throw ParseError(name.line, name.column,
                         "hypothesis '" + name.text +
                             "' mentions undeclared individual '" + v + "'");
    ctx.hypotheses.emplace_back(name.text, f);
  }
  return ctx;
}

namespace {

void collect_arities(const FormulaPtr& f,
                     std::map<std::string, std::size_t>& arities) {
  std::visit(overloaded{
                 [&](const Formula::Atom& a) {
                   auto [it, fresh] = arities.emplace(a.name, a.args.size());
                   if (!fresh && it->second != a.args.size())
                     throw ParseError(
                         0, 0, "atom '" + a.name + "' used with arity " +
                                   std::to_string(a.args.size()) + " and " +
                                   std::to_string(it->second));
                 },
                 [&](const Formula::And& n) {
                   collect_arities(n.left, arities);
                   collect_arities(n.right, arities);
                 },
                 [&](const Formula::Or& n) {
                   collect_arities(n.left, arities);
                   collect_arities(n.right, arities);
                 },
                 [&](const Formula::Imp& n) {
                   collect_arities(n.hyp, arities);
                   collect_arities(n.concl, arities);
                 },
                 [&](const Formula::Forall& n) { collect_arities(n.body, arities); },
                 [&](const Formula::Exists& n) { collect_arities(n.body, arities); },
             },
             f->node);
}

}  // namespace

void check_atom_arities(const Context& ctx,
                        const std::vector<FormulaPtr>& extra) {
  std::map<std::string, std::size_t> arities;
  for (const auto& [n, f] : ctx.hypotheses) collect_arities(f, arities);
  for (const auto& f : extra) collect_arities(f, arities);
}

}  // namespace mqc
