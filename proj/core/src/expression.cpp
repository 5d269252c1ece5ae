#include "mgeo/expression.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <type_traits>

#include "mgeo/errors.hpp"

namespace mgeo {

namespace {

enum class Tok { number, ident, plus, minus, star, slash, caret, lparen, rparen, comma, end };

struct Token {
  Tok kind = Tok::end;
  std::string text;
  double number = 0.0;
  int pos = 0;  // 0-based offset into the source
};

const char* describe(Tok t) {
  switch (t) {
    case Tok::number: return "number";
    case Tok::ident: return "identifier";
    case Tok::plus: return "'+'";
    case Tok::minus: return "'-'";
    case Tok::star: return "'*'";
    case Tok::slash: return "'/'";
    case Tok::caret: return "'^'";
    case Tok::lparen: return "'('";
    case Tok::rparen: return "')'";
    case Tok::comma: return "','";
    case Tok::end: return "end of input";
  }
  return "?";
}

bool is_function(const std::string& s) {
  return s == "sin" || s == "cos" || s == "exp" || s == "sqrt";
}

class Parser {
 public:
  Parser(const std::string& src, const SymbolTable& sym, int line)
      : src_(src), sym_(sym), line_(line) {
    tokenize();
  }

  std::vector<ExprNode> run(int& root) {
    root = expr();
    if (peek().kind != Tok::end) {
      fail("unexpected " + std::string(describe(peek().kind)), peek().pos);
    }
    return std::move(nodes_);
  }

 private:
  [[noreturn]] void fail(const std::string& msg, int pos) const {
    throw ParseError(msg, line_, pos + 1);
  }

  void tokenize() {
    std::size_t i = 0;
    while (i < src_.size()) {
      const char c = src_[i];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
        continue;
      }
      Token t;
      t.pos = static_cast<int>(i);
      if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
        std::size_t j = i;
        while (j < src_.size() && std::isdigit(static_cast<unsigned char>(src_[j]))) ++j;
        if (j < src_.size() && src_[j] == '.') {
          ++j;
          while (j < src_.size() && std::isdigit(static_cast<unsigned char>(src_[j]))) ++j;
        }
        if (j < src_.size() && (src_[j] == 'e' || src_[j] == 'E')) {
          std::size_t k = j + 1;
          if (k < src_.size() && (src_[k] == '+' || src_[k] == '-')) ++k;
          if (k < src_.size() && std::isdigit(static_cast<unsigned char>(src_[k]))) {
            while (k < src_.size() && std::isdigit(static_cast<unsigned char>(src_[k]))) ++k;
            j = k;
          }
        }
        t.text = src_.substr(i, j - i);
        if (t.text == ".") fail("malformed number", t.pos);
        t.kind = Tok::number;
        t.number = std::strtod(t.text.c_str(), nullptr);
        i = j;
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t j = i;
        while (j < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[j])) || src_[j] == '_')) {
          ++j;
        }
        t.kind = Tok::ident;
        t.text = src_.substr(i, j - i);
        i = j;
      } else {
        switch (c) {
          case '+': t.kind = Tok::plus; break;
          case '-': t.kind = Tok::minus; break;
          case '*': t.kind = Tok::star; break;
          case '/': t.kind = Tok::slash; break;
          case '^': t.kind = Tok::caret; break;
          case '(': t.kind = Tok::lparen; break;
          case ')': t.kind = Tok::rparen; break;
          case ',': t.kind = Tok::comma; break;
          default: fail(std::string("unexpected character '") + c + "'", t.pos);
        }
        t.text = std::string(1, c);
        ++i;
      }
      toks_.push_back(t);
    }
    Token e;
    e.pos = static_cast<int>(src_.size());
    toks_.push_back(e);
  }

  const Token& peek() const { return toks_[cur_]; }
  const Token& next() { return toks_[cur_++]; }
  int end_of_prev() const {
    const Token& t = toks_[cur_ - 1];
    return t.pos + static_cast<int>(t.text.size());
  }

  int add(ExprNode node, int begin) {
    node.text = src_.substr(begin, end_of_prev() - begin);
    nodes_.push_back(std::move(node));
    starts_.push_back(begin);
    return static_cast<int>(nodes_.size()) - 1;
  }

  int binary(NodeKind k, int lhs, int rhs) {
    ExprNode n;
    n.kind = k;
    n.lhs = lhs;
    n.rhs = rhs;
    return add(n, starts_[lhs]);
  }

  int expr() {
    int lhs = term();
    while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      const NodeKind k = next().kind == Tok::plus ? NodeKind::add : NodeKind::sub;
      lhs = binary(k, lhs, term());
    }
    return lhs;
  }

  int term() {
    int lhs = factor();
    while (peek().kind == Tok::star || peek().kind == Tok::slash) {
      const NodeKind k = next().kind == Tok::star ? NodeKind::mul : NodeKind::div;
      lhs = binary(k, lhs, factor());
    }
    return lhs;
  }

  int factor() {
    const int base = atom();
    if (peek().kind != Tok::caret) return base;
    next();
    const Token& t = peek();
    if (t.kind != Tok::number || t.text.find_first_not_of("0123456789") != std::string::npos) {
      fail("exponent must be a non-negative integer literal", t.pos);
    }
    next();
    ExprNode n;
    n.kind = NodeKind::pow;
    n.lhs = base;
    n.exponent = std::atoi(t.text.c_str());
    return add(n, starts_[base]);
  }

  int atom() {
    const Token t = next();
    ExprNode n;
    switch (t.kind) {
      case Tok::number:
        n.kind = NodeKind::constant;
        n.value = t.number;
        return add(n, t.pos);
      case Tok::minus:
        n.kind = NodeKind::neg;
        n.lhs = atom();
        return add(n, t.pos);
      case Tok::lparen: {
        const int inner = expr();
        if (peek().kind != Tok::rparen) {
          fail("expected ')' but found " + std::string(describe(peek().kind)), peek().pos);
        }
        next();
        // Parentheses do not create a node; widen the source span instead.
        nodes_[inner].text = src_.substr(t.pos, end_of_prev() - t.pos);
        starts_[inner] = t.pos;
        return inner;
      }
      case Tok::ident:
        return identifier(t);
      default:
        fail("unexpected " + std::string(describe(t.kind)), t.pos);
    }
  }

  int identifier(const Token& t) {
    ExprNode n;
    if (is_function(t.text)) {
      if (peek().kind != Tok::lparen) {
        fail("function '" + t.text + "' expects one parenthesized argument", peek().pos);
      }
      next();
      n.lhs = expr();
      if (peek().kind == Tok::comma) {
        fail("function '" + t.text + "' takes exactly one argument", peek().pos);
      }
      if (peek().kind != Tok::rparen) {
        fail("expected ')' but found " + std::string(describe(peek().kind)), peek().pos);
      }
      next();
      n.kind = t.text == "sin"   ? NodeKind::sin
               : t.text == "cos" ? NodeKind::cos
               : t.text == "exp" ? NodeKind::exp
                                 : NodeKind::sqrt;
      return add(n, t.pos);
    }
    bool known = false;
    if (t.text.size() > 1 && t.text[0] == 'u' &&
        t.text.find_first_not_of("0123456789", 1) == std::string::npos && t.text[1] != '0') {
      const int i = std::atoi(t.text.c_str() + 1);
      if (i >= 1 && i <= sym_.n_vars) {
        n.kind = NodeKind::var;
        n.index = i - 1;
        known = true;
      }
    }
    if (!known) {
      for (std::size_t k = 0; k < sym_.constants.size(); ++k) {
        if (sym_.constants[k] == t.text) {
          n.kind = NodeKind::param;
          n.index = static_cast<int>(k);
          known = true;
          break;
        }
      }
    }
    if (!known) fail("unknown identifier '" + t.text + "'", t.pos);
    if (peek().kind == Tok::lparen) fail("'" + t.text + "' is not a function", peek().pos);
    return add(n, t.pos);
  }

  const std::string& src_;
  const SymbolTable& sym_;
  int line_;
  std::vector<Token> toks_;
  std::size_t cur_ = 0;
  std::vector<ExprNode> nodes_;
  std::vector<int> starts_;
};

double value_of(double x) { return x; }
double value_of(const Jet2& x) { return x.v; }

template <class T>
T make_const(double v, int n) {
  if constexpr (std::is_same_v<T, double>) {
    (void)n;
    return v;
  } else {
    return Jet2::constant(n, v);
  }
}

template <class T>
T evaluate(const std::vector<ExprNode>& nodes, int root, const std::vector<T>& vars,
           const std::vector<double>& consts, int n) {
  using std::cos;
  using std::exp;
  using std::sin;
  using std::sqrt;
  std::vector<T> val(static_cast<std::size_t>(root) + 1);
  for (int id = 0; id <= root; ++id) {
    const ExprNode& e = nodes[id];
    T r{};
    switch (e.kind) {
      case NodeKind::constant: r = make_const<T>(e.value, n); break;
      case NodeKind::param: r = make_const<T>(consts.at(e.index), n); break;
      case NodeKind::var: r = vars.at(e.index); break;
      case NodeKind::neg: r = -val[e.lhs]; break;
      case NodeKind::sin: r = sin(val[e.lhs]); break;
      case NodeKind::cos: r = cos(val[e.lhs]); break;
      case NodeKind::exp: r = exp(val[e.lhs]); break;
      case NodeKind::sqrt: {
        const double a = value_of(val[e.lhs]);
        if (a < 0.0) throw EvaluationError("square root of a negative number", e.text);
        if constexpr (!std::is_same_v<T, double>) {
          if (a == 0.0) throw EvaluationError("square root is not differentiable at 0", e.text);
        }
        r = sqrt(val[e.lhs]);
        break;
      }
      case NodeKind::add: r = val[e.lhs] + val[e.rhs]; break;
      case NodeKind::sub: r = val[e.lhs] - val[e.rhs]; break;
      case NodeKind::mul: r = val[e.lhs] * val[e.rhs]; break;
      case NodeKind::div: {
        const double d = value_of(val[e.rhs]);
        if (std::abs(d) < 1e-14) throw EvaluationError("division by (nearly) zero", e.text);
        r = val[e.lhs] / val[e.rhs];
        break;
      }
      case NodeKind::pow:
        if constexpr (std::is_same_v<T, double>) {
          r = std::pow(val[e.lhs], e.exponent);
        } else {
          r = ipow(val[e.lhs], e.exponent);
        }
        break;
    }
    if (!std::isfinite(value_of(r))) throw EvaluationError("non-finite value", e.text);
    val[id] = r;
  }
  return val[root];
}

void render(const std::vector<ExprNode>& nodes, int id, const SymbolTable& sym,
            std::ostringstream& os) {
  const ExprNode& e = nodes[id];
  auto bin = [&](const char* name) {
    os << name << '(';
    render(nodes, e.lhs, sym, os);
    os << ", ";
    render(nodes, e.rhs, sym, os);
    os << ')';
  };
  auto un = [&](const char* name) {
    os << "Unary(" << name << ", ";
    render(nodes, e.lhs, sym, os);
    os << ')';
  };
  switch (e.kind) {
    case NodeKind::constant: os << "Const(" << e.value << ')'; break;
    case NodeKind::param: os << "Param(" << sym.constants[e.index] << ')'; break;
    case NodeKind::var: os << "Var(u" << e.index + 1 << ')'; break;
    case NodeKind::neg: un("neg"); break;
    case NodeKind::sin: un("sin"); break;
    case NodeKind::cos: un("cos"); break;
    case NodeKind::exp: un("exp"); break;
    case NodeKind::sqrt: un("sqrt"); break;
    case NodeKind::add: bin("Add"); break;
    case NodeKind::sub: bin("Sub"); break;
    case NodeKind::mul: bin("Mul"); break;
    case NodeKind::div: bin("Div"); break;
    case NodeKind::pow:
      os << "Pow(";
      render(nodes, e.lhs, sym, os);
      os << ", " << e.exponent << ')';
      break;
  }
}

}  // namespace

Expr parse_expression(const std::string& text, const SymbolTable& symbols, int line) {
  if (symbols.n_vars < 0 || symbols.n_vars > kMaxParams) {
    throw ArgumentError("expressions support at most " + std::to_string(kMaxParams) +
                        " variables");
  }
  Parser parser(text, symbols, line);
  Expr e;
  auto nodes = parser.run(e.root_);
  e.nodes_ = std::make_shared<const std::vector<ExprNode>>(std::move(nodes));
  e.symbols_ = std::make_shared<const SymbolTable>(symbols);
  e.source_ = text;
  return e;
}

std::vector<Expr> parse_immersion(const std::string& text, const SymbolTable& symbols) {
  std::vector<Expr> out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(parse_expression(line, symbols, lineno));
  }
  return out;
}

std::string Expr::structure() const {
  std::ostringstream os;
  if (root_ >= 0) render(*nodes_, root_, *symbols_, os);
  return os.str();
}

double Expr::eval(const std::vector<double>& u, const std::vector<double>& constants) const {
  if (static_cast<int>(u.size()) < symbols_->n_vars) {
    throw ArgumentError("expression needs " + std::to_string(symbols_->n_vars) + " variables");
  }
  return evaluate<double>(*nodes_, root_, u, constants, symbols_->n_vars);
}

Jet2 Expr::eval_jet(const std::vector<double>& u, const std::vector<double>& constants) const {
  const int n = symbols_->n_vars;
  if (static_cast<int>(u.size()) < n) {
    throw ArgumentError("expression needs " + std::to_string(n) + " variables");
  }
  std::vector<Jet2> vars;
  vars.reserve(n);
  for (int i = 0; i < n; ++i) vars.push_back(Jet2::variable(n, i, u[i]));
  return evaluate<Jet2>(*nodes_, root_, vars, constants, n);
}

}  // namespace mgeo
