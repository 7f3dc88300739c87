#include "craigtab/parse.hpp"

#include <cctype>
#include <optional>

#include "craigtab/errors.hpp"
#include "craigtab/normalize.hpp"
#include "craigtab/vocabulary.hpp"

namespace craigtab {

namespace {

enum class Tok {
  lower,
  upper,
  dollar,
  lparen,
  rparen,
  lbracket,
  rbracket,
  comma,
  dot,
  colon,
  tilde,
  amp,
  bar,
  implies,
  implied,
  iff,
  xor_,
  nor,
  nand,
  eq,
  neq,
  bang,
  question,
  end,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      std::size_t line = line_, column = column_;
      if (pos_ >= text_.size()) {
        out.push_back({Tok::end, "", line, column});
        return out;
      }
      char c = text_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$') {
        std::size_t start = pos_;
        advance();
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                text_[pos_] == '_')) {
          advance();
        }
        std::string word(text_.substr(start, pos_ - start));
        Tok kind = c == '$' ? Tok::dollar
                   : (std::isupper(static_cast<unsigned char>(c)) || c == '_')
                       ? Tok::upper
                       : Tok::lower;
        out.push_back({kind, std::move(word), line, column});
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) {
          advance();
        }
        out.push_back({Tok::lower, std::string(text_.substr(start, pos_ - start)), line, column});
        continue;
      }
      if (c == '\'') {
        advance();
        std::string word;
        while (pos_ < text_.size() && text_[pos_] != '\'') {
          if (text_[pos_] == '\\' && pos_ + 1 < text_.size()) advance();
          word += text_[pos_];
          advance();
        }
        if (pos_ >= text_.size()) throw ParseError("unterminated quoted atom", line, column);
        advance();
        out.push_back({Tok::lower, std::move(word), line, column});
        continue;
      }
      static const std::pair<std::string_view, Tok> ops[] = {
          {"<=>", Tok::iff}, {"<~>", Tok::xor_}, {"=>", Tok::implies},
          {"<=", Tok::implied}, {"~|", Tok::nor}, {"~&", Tok::nand},
          {"!=", Tok::neq}, {"(", Tok::lparen}, {")", Tok::rparen},
          {"[", Tok::lbracket}, {"]", Tok::rbracket}, {",", Tok::comma},
          {".", Tok::dot}, {":", Tok::colon}, {"~", Tok::tilde},
          {"&", Tok::amp}, {"|", Tok::bar}, {"=", Tok::eq},
          {"!", Tok::bang}, {"?", Tok::question},
      };
      bool matched = false;
      for (const auto& [spelling, kind] : ops) {
        if (text_.substr(pos_, spelling.size()) == spelling) {
          for (std::size_t i = 0; i < spelling.size(); ++i) advance();
          out.push_back({kind, std::string(spelling), line, column});
          matched = true;
          break;
        }
      }
      if (!matched) {
        throw ParseError(std::string("unexpected character '") + c + "'", line, column);
      }
    }
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_space() {
    for (;;) {
      while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
        advance();
      }
      if (pos_ < text_.size() && (text_[pos_] == '%' || text_[pos_] == '#')) {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
        continue;
      }
      if (text_.substr(pos_, 2) == "/*") {
        std::size_t line = line_, column = column_;
        advance();
        advance();
        while (pos_ < text_.size() && text_.substr(pos_, 2) != "*/") advance();
        if (pos_ >= text_.size()) throw ParseError("unterminated comment", line, column);
        advance();
        advance();
        continue;
      }
      return;
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

const char* describe(Tok t) {
  switch (t) {
    case Tok::lower: return "lower-case word";
    case Tok::upper: return "variable";
    case Tok::dollar: return "$word";
    case Tok::lparen: return "'('";
    case Tok::rparen: return "')'";
    case Tok::lbracket: return "'['";
    case Tok::rbracket: return "']'";
    case Tok::comma: return "','";
    case Tok::dot: return "'.'";
    case Tok::colon: return "':'";
    case Tok::tilde: return "'~'";
    case Tok::amp: return "'&'";
    case Tok::bar: return "'|'";
    case Tok::implies: return "'=>'";
    case Tok::implied: return "'<='";
    case Tok::iff: return "'<=>'";
    case Tok::xor_: return "'<~>'";
    case Tok::nor: return "'~|'";
    case Tok::nand: return "'~&'";
    case Tok::eq: return "'='";
    case Tok::neq: return "'!='";
    case Tok::bang: return "'!'";
    case Tok::question: return "'?'";
    case Tok::end: return "end of input";
  }
  return "token";
}

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(Lexer(text).run()) {}

  std::vector<AnnotatedFormula> file() {
    std::vector<AnnotatedFormula> out;
    while (peek().kind != Tok::end) {
      const Token& head = expect(Tok::lower);
      if (head.text == "include") {
        throw ParseError("include directives are not supported", head.line, head.column);
      }
      if (head.text != "fof" && head.text != "cnf") {
        throw ParseError("expected fof or cnf, found '" + head.text + "'", head.line,
                         head.column);
      }
      expect(Tok::lparen);
      AnnotatedFormula entry;
      entry.language = head.text;
      entry.name = name();
      expect(Tok::comma);
      entry.role = expect(Tok::lower).text;
      expect(Tok::comma);
      if (entry.language == "cnf") {
        bool paren = accept(Tok::lparen);
        Clause c = clause();
        if (paren) expect(Tok::rparen);
        std::vector<Formula> lits;
        for (const Literal& l : c) lits.push_back(Formula::literal(l));
        entry.formula = lits.empty() ? Formula::bottom() : disjoin(std::move(lits));
      } else {
        entry.formula = formula();
      }
      if (peek().kind == Tok::comma) {
        // Source annotations are accepted and dropped.
        next();
        skip_balanced();
      }
      expect(Tok::rparen);
      expect(Tok::dot);
      out.push_back(std::move(entry));
    }
    return out;
  }

  Formula whole_formula() {
    Formula f = formula();
    expect(Tok::end);
    return f;
  }

  Clause whole_clause() {
    Clause c = clause();
    expect(Tok::end);
    return c;
  }

  Literal whole_literal() {
    Literal l = literal();
    expect(Tok::end);
    return l;
  }

  Term whole_term() {
    Term t = term();
    expect(Tok::end);
    return t;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = std::min(pos_ + ahead, tokens_.size() - 1);
    return tokens_[i];
  }
  const Token& next() {
    const Token& t = tokens_[pos_];
    if (pos_ + 1 < tokens_.size()) ++pos_;
    return t;
  }
  bool accept(Tok kind) {
    if (peek().kind != kind) return false;
    next();
    return true;
  }
  [[noreturn]] void fail(const std::string& what) const {
    const Token& t = peek();
    std::string found = t.kind == Tok::end ? "end of input" : "'" + t.text + "'";
    throw ParseError("expected " + what + ", found " + found, t.line, t.column);
  }
  const Token& expect(Tok kind) {
    if (peek().kind != kind) fail(describe(kind));
    return next();
  }

  std::string name() {
    const Token& t = peek();
    if (t.kind == Tok::lower || t.kind == Tok::upper) return next().text;
    fail("formula name");
  }

  void skip_balanced() {
    int depth = 0;
    for (;;) {
      Tok k = peek().kind;
      if (k == Tok::end) fail("')'");
      if (depth == 0 && k == Tok::rparen) return;
      if (k == Tok::lparen || k == Tok::lbracket) ++depth;
      if (k == Tok::rparen || k == Tok::rbracket) --depth;
      next();
    }
  }

  Formula formula() {
    Formula first = unit();
    switch (peek().kind) {
      case Tok::amp:
      case Tok::bar: {
        Tok op = peek().kind;
        std::vector<Formula> ops{first};
        while (accept(op)) ops.push_back(unit());
        if (peek().kind == Tok::amp || peek().kind == Tok::bar) {
          fail("parentheses around mixed '&' and '|'");
        }
        return op == Tok::amp ? Formula::conjunction(std::move(ops))
                              : Formula::disjunction(std::move(ops));
      }
      case Tok::implies:
        next();
        return Formula::implication(first, unit());
      case Tok::implied:
        next();
        return Formula::implication(unit(), first);
      case Tok::iff:
        next();
        return Formula::equivalence(first, unit());
      case Tok::xor_:
        next();
        return Formula::negation(Formula::equivalence(first, unit()));
      case Tok::nor:
        next();
        return Formula::negation(Formula::disjunction({first, unit()}));
      case Tok::nand:
        next();
        return Formula::negation(Formula::conjunction({first, unit()}));
      default:
        return first;
    }
  }

  Formula unit() {
    switch (peek().kind) {
      case Tok::lparen: {
        next();
        Formula f = formula();
        expect(Tok::rparen);
        return f;
      }
      case Tok::bang:
      case Tok::question: {
        bool universal = next().kind == Tok::bang;
        expect(Tok::lbracket);
        std::vector<Symbol> vars;
        do {
          vars.emplace_back(expect(Tok::upper).text);
        } while (accept(Tok::comma));
        expect(Tok::rbracket);
        expect(Tok::colon);
        Formula body = unit();
        for (auto it = vars.rbegin(); it != vars.rend(); ++it) {
          body = Formula::quantifier(universal, *it, std::move(body));
        }
        return body;
      }
      case Tok::tilde: {
        next();
        if (starts_atom()) {
          std::optional<Formula> constant = truth_constant();
          if (constant) return Formula::negation(*constant);
          return Formula::literal(atom().complement());
        }
        return Formula::negation(unit());
      }
      default: {
        std::optional<Formula> constant = truth_constant();
        if (constant) return *constant;
        return Formula::literal(atom());
      }
    }
  }

  bool starts_atom() const {
    Tok k = peek().kind;
    return k == Tok::lower || k == Tok::upper || k == Tok::dollar;
  }

  std::optional<Formula> truth_constant() {
    if (peek().kind != Tok::dollar) return std::nullopt;
    const Token& t = next();
    if (t.text == "$true") return Formula::top();
    if (t.text == "$false") return Formula::bottom();
    throw ParseError("unsupported defined word '" + t.text + "'", t.line, t.column);
  }

  // Plain atom or infix equality.
  Literal atom() {
    const Token& start = peek();
    if (start.kind == Tok::upper) {
      Term lhs = term();
      return equality(lhs, start);
    }
    if (start.kind != Tok::lower) fail("atom");
    std::string head = next().text;
    std::vector<Term> args;
    if (accept(Tok::lparen)) args = arguments();
    if (peek().kind == Tok::eq || peek().kind == Tok::neq) {
      return equality(Term::function(Symbol(head), std::move(args)), start);
    }
    return Literal(true, Symbol(head), std::move(args));
  }

  Literal equality(Term lhs, const Token& start) {
    bool positive;
    if (accept(Tok::eq)) {
      positive = true;
    } else if (accept(Tok::neq)) {
      positive = false;
    } else {
      throw ParseError("a variable cannot stand as an atom", start.line, start.column);
    }
    Term rhs = term();
    return Literal(positive, equality_symbol(), {std::move(lhs), std::move(rhs)});
  }

  std::vector<Term> arguments() {
    std::vector<Term> args;
    do {
      args.push_back(term());
    } while (accept(Tok::comma));
    expect(Tok::rparen);
    return args;
  }

  Term term() {
    const Token& t = peek();
    if (t.kind == Tok::upper) return Term::variable(Symbol(next().text));
    if (t.kind != Tok::lower) fail("term");
    std::string head = next().text;
    std::vector<Term> args;
    if (accept(Tok::lparen)) args = arguments();
    return Term::function(Symbol(head), std::move(args));
  }

  Literal literal() {
    bool positive = !accept(Tok::tilde);
    Literal a = atom();
    return positive ? a : a.complement();
  }

  Clause clause() {
    if (peek().kind == Tok::dollar && peek().text == "$false") {
      next();
      return {};
    }
    Clause c;
    do {
      bool paren = accept(Tok::lparen);
      c.push_back(literal());
      if (paren) expect(Tok::rparen);
    } while (accept(Tok::bar));
    return c;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<AnnotatedFormula> parse_tptp(std::string_view text) {
  return Parser(text).file();
}

Formula parse_formula(std::string_view text) { return Parser(text).whole_formula(); }

Clause parse_clause(std::string_view text) { return Parser(text).whole_clause(); }

Literal parse_literal(std::string_view text) { return Parser(text).whole_literal(); }

Term parse_term(std::string_view text) { return Parser(text).whole_term(); }

SplitProblem split_roles(const std::vector<AnnotatedFormula>& entries) {
  SplitProblem out;
  for (const AnnotatedFormula& e : entries) {
    Formula f = e.language == "cnf" ? universal_closure(e.formula) : e.formula;
    if (e.role == "conjecture") {
      out.conclusions.push_back(f);
    } else if (e.role == "negated_conjecture") {
      out.negated_conclusions.push_back(f);
    } else {
      out.premises.push_back(f);
    }
  }
  return out;
}

Formula universal_closure(const Formula& f) {
  std::set<Symbol> vs = free_vars(f);
  Formula out = f;
  for (auto it = vs.rbegin(); it != vs.rend(); ++it) out = Formula::forall(*it, out);
  return out;
}

Clause formula_to_clause(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::literal:
      return {f.lit()};
    case FormulaKind::bottom:
      return {};
    case FormulaKind::disjunction: {
      Clause c;
      for (const Formula& g : f.operands()) {
        Clause part = formula_to_clause(g);
        c.insert(c.end(), part.begin(), part.end());
      }
      return c;
    }
    default:
      throw ContractError("not a clause");
  }
}

}  // namespace craigtab
