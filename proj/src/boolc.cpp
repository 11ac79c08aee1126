#include "qgate/boolc.hpp"

#include <algorithm>
#include <cctype>

#include "qgate/sweep.hpp"

namespace qgate::boolc {

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error("position " + std::to_string(position) + ": " + message), position_(position) {}

ExprPtr Expr::var(std::string name) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Var;
  e->name = std::move(name);
  return e;
}

ExprPtr Expr::constant(int value) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Const;
  e->value = value ? 1 : 0;
  return e;
}

ExprPtr Expr::negate(ExprPtr a) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Not;
  e->lhs = std::move(a);
  return e;
}

namespace {

ExprPtr binary(Expr::Kind kind, ExprPtr a, ExprPtr b) {
  auto e = std::make_shared<Expr>();
  e->kind = kind;
  e->lhs = std::move(a);
  e->rhs = std::move(b);
  return e;
}

}  // namespace

ExprPtr Expr::conj(ExprPtr a, ExprPtr b) { return binary(Kind::And, std::move(a), std::move(b)); }
ExprPtr Expr::disj(ExprPtr a, ExprPtr b) { return binary(Kind::Or, std::move(a), std::move(b)); }
ExprPtr Expr::nand(ExprPtr a, ExprPtr b) { return binary(Kind::Nand, std::move(a), std::move(b)); }

bool structurally_equal(const Expr& a, const Expr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Expr::Kind::Var: return a.name == b.name;
    case Expr::Kind::Const: return a.value == b.value;
    case Expr::Kind::Not: return structurally_equal(*a.lhs, *b.lhs);
    default: return structurally_equal(*a.lhs, *b.lhs) && structurally_equal(*a.rhs, *b.rhs);
  }
}

// ---------------------------------------------------------------------------
// Lexer / parser

namespace {

struct Token {
  enum class Type { Not, And, Or, Nand, LParen, RParen, Ident, Zero, One, End };
  Type type;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    switch (c) {
      case '!': out.push_back({Token::Type::Not, "!", i++}); continue;
      case '&': out.push_back({Token::Type::And, "&", i++}); continue;
      case '|': out.push_back({Token::Type::Or, "|", i++}); continue;
      case '(': out.push_back({Token::Type::LParen, "(", i++}); continue;
      case ')': out.push_back({Token::Type::RParen, ")", i++}); continue;
      default: break;
    }
    if (c == '0' || c == '1') {
      const std::size_t start = i++;
      if (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) {
        throw ParseError("malformed constant", start);
      }
      out.push_back({c == '0' ? Token::Type::Zero : Token::Type::One, std::string(1, c), start});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = i;
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
      std::string word(s.substr(start, i - start));
      out.push_back({word == "NAND" ? Token::Type::Nand : Token::Type::Ident, word, start});
      continue;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", i);
  }
  out.push_back({Token::Type::End, "", s.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  ExprPtr parse_all() {
    ExprPtr e = expr();
    if (peek().type == Token::Type::RParen) {
      throw ParseError("unbalanced ')'", peek().pos);
    }
    if (peek().type != Token::Type::End) {
      throw ParseError("unexpected trailing '" + peek().text + "'", peek().pos);
    }
    return e;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }

  ExprPtr expr() {
    ExprPtr lhs = term();
    while (peek().type == Token::Type::Or) {
      next();
      lhs = Expr::disj(lhs, term());
    }
    return lhs;
  }

  ExprPtr term() {
    ExprPtr lhs = factor();
    while (peek().type == Token::Type::And || peek().type == Token::Type::Nand) {
      const bool is_nand = next().type == Token::Type::Nand;
      ExprPtr rhs = factor();
      lhs = is_nand ? Expr::nand(lhs, rhs) : Expr::conj(lhs, rhs);
    }
    return lhs;
  }

  ExprPtr factor() {
    const Token& t = next();
    switch (t.type) {
      case Token::Type::Not: return Expr::negate(factor());
      case Token::Type::Zero: return Expr::constant(0);
      case Token::Type::One: return Expr::constant(1);
      case Token::Type::Ident: return Expr::var(t.text);
      case Token::Type::LParen: {
        ExprPtr e = expr();
        if (peek().type != Token::Type::RParen) {
          throw ParseError("unbalanced '(' opened here", t.pos);
        }
        next();
        return e;
      }
      case Token::Type::End: throw ParseError("unexpected end of input", t.pos);
      default: throw ParseError("unexpected '" + t.text + "'", t.pos);
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

int precedence(Expr::Kind k) {
  switch (k) {
    case Expr::Kind::Or: return 1;
    case Expr::Kind::And:
    case Expr::Kind::Nand: return 2;
    case Expr::Kind::Not: return 3;
    default: return 4;
  }
}

void render(const Expr& e, std::string& out) {
  auto child = [&](const Expr& c, bool parens) {
    if (parens) out += '(';
    render(c, out);
    if (parens) out += ')';
  };
  const int p = precedence(e.kind);
  switch (e.kind) {
    case Expr::Kind::Var: out += e.name; return;
    case Expr::Kind::Const: out += e.value ? '1' : '0'; return;
    case Expr::Kind::Not:
      out += '!';
      child(*e.lhs, precedence(e.lhs->kind) < p);
      return;
    default: {
      const char* op = e.kind == Expr::Kind::Or ? " | " : e.kind == Expr::Kind::And ? " & " : " NAND ";
      child(*e.lhs, precedence(e.lhs->kind) < p);
      out += op;
      child(*e.rhs, precedence(e.rhs->kind) <= p);
    }
  }
}

void collect_variables(const Expr& e, std::vector<std::string>& out) {
  if (e.kind == Expr::Kind::Var) {
    if (std::find(out.begin(), out.end(), e.name) == out.end()) out.push_back(e.name);
    return;
  }
  if (e.lhs) collect_variables(*e.lhs, out);
  if (e.rhs) collect_variables(*e.rhs, out);
}

}  // namespace

ExprPtr parse(std::string_view text) { return Parser(tokenize(text)).parse_all(); }

std::string pretty(const Expr& e) {
  std::string out;
  render(e, out);
  return out;
}

std::vector<std::string> variables(const Expr& e) {
  std::vector<std::string> out;
  collect_variables(e, out);
  return out;
}

int evaluate(const Expr& e, const std::map<std::string, int>& assignment) {
  switch (e.kind) {
    case Expr::Kind::Var: return assignment.at(e.name) ? 1 : 0;
    case Expr::Kind::Const: return e.value;
    case Expr::Kind::Not: return 1 - evaluate(*e.lhs, assignment);
    case Expr::Kind::And: return evaluate(*e.lhs, assignment) & evaluate(*e.rhs, assignment);
    case Expr::Kind::Or: return evaluate(*e.lhs, assignment) | evaluate(*e.rhs, assignment);
    case Expr::Kind::Nand: return 1 - (evaluate(*e.lhs, assignment) & evaluate(*e.rhs, assignment));
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Lowering

namespace {

class Lowering {
 public:
  LoweredCircuit run(const Expr& e) {
    circuit_.layout.root = visit(e);
    circuit_.layout.slot_count = circuit_.slot_variable.size();
    circuit_.variables = variables(e);
    return std::move(circuit_);
  }

 private:
  GateInput gate(std::vector<GateInput> inputs) {
    circuit_.layout.gates.push_back(std::move(inputs));
    return GateInput::gate(circuit_.layout.gates.size() - 1);
  }

  GateInput slot(std::optional<std::string> var, int constant) {
    circuit_.slot_variable.push_back(std::move(var));
    circuit_.slot_constant.push_back(constant);
    return GateInput::slot(circuit_.slot_variable.size() - 1);
  }

  GateInput visit(const Expr& e) {
    switch (e.kind) {
      case Expr::Kind::Var: return slot(e.name, 0);
      case Expr::Kind::Const: return slot(std::nullopt, e.value);
      case Expr::Kind::Not: return gate({visit(*e.lhs)});
      case Expr::Kind::Nand: {
        GateInput a = visit(*e.lhs);
        GateInput b = visit(*e.rhs);
        return gate({a, b});
      }
      case Expr::Kind::And: {
        GateInput a = visit(*e.lhs);
        GateInput b = visit(*e.rhs);
        return gate({gate({a, b})});
      }
      case Expr::Kind::Or: {
        GateInput a = gate({visit(*e.lhs)});
        GateInput b = gate({visit(*e.rhs)});
        return gate({a, b});
      }
    }
    throw std::logic_error("unreachable");
  }

  LoweredCircuit circuit_;
};

}  // namespace

LoweredCircuit lower(const Expr& e) { return Lowering{}.run(e); }

std::vector<int> LoweredCircuit::slot_bits(const std::vector<int>& assignment) const {
  if (assignment.size() != variables.size()) {
    throw std::invalid_argument("assignment has " + std::to_string(assignment.size()) + " values for " +
                                std::to_string(variables.size()) + " variables");
  }
  std::map<std::string, int> value;
  for (std::size_t k = 0; k < variables.size(); ++k) value[variables[k]] = assignment[k];
  std::vector<int> bits(slot_variable.size());
  for (std::size_t s = 0; s < slot_variable.size(); ++s) {
    bits[s] = slot_variable[s] ? value.at(*slot_variable[s]) : slot_constant[s];
  }
  return bits;
}

TightBindingGraph LoweredCircuit::instantiate(const std::vector<int>& assignment, const ParameterPreset& preset,
                                              const BuildOptions& options) const {
  return realize(layout, slot_bits(assignment), preset, options);
}

Engine engine_from_string(const std::string& s) {
  if (s == "qst") return Engine::Qst;
  if (s == "negf") return Engine::Negf;
  throw std::invalid_argument("unknown engine '" + s + "' (expected qst or negf)");
}

std::string to_string(Engine e) { return e == Engine::Qst ? "qst" : "negf"; }

TruthTable truth_table(const Expr& e, const TruthTableOptions& options) {
  return truth_table(lower(e), e, options);
}

TruthTable truth_table(const LoweredCircuit& circuit, const Expr& e, const TruthTableOptions& options) {
  const std::size_t nvars = circuit.variables.size();
  if (nvars > options.max_variables) {
    throw std::invalid_argument("expression has " + std::to_string(nvars) + " variables; the budget is " +
                                std::to_string(options.max_variables));
  }
  TruthTable table;
  table.variables = circuit.variables;
  table.engine = options.engine;
  const std::size_t count = std::size_t{1} << nvars;

  table.rows = parallel_map(count, options.threads, [&](std::size_t index) {
    TruthRow row;
    row.assignment.resize(nvars);
    std::map<std::string, int> named;
    for (std::size_t k = 0; k < nvars; ++k) {
      row.assignment[k] = static_cast<int>((index >> (nvars - 1 - k)) & 1U);
      named[circuit.variables[k]] = row.assignment[k];
    }
    row.oracle = evaluate(e, named);
    const TightBindingGraph g = circuit.instantiate(row.assignment, options.preset, options.build);
    if (options.engine == Engine::Qst) {
      row.output = classify_bit(g, options.mode).value;
    } else {
      const double t = transmission_negf(make_device(g, options.lead, options.device), options.lead, 0.0).T;
      row.transmission = t;
      row.output = t >= options.thresholds.on    ? BitValue::One
                   : t <= options.thresholds.off ? BitValue::Zero
                                                 : BitValue::Indeterminate;
    }
    return row;
  });

  table.matches_oracle = std::all_of(table.rows.begin(), table.rows.end(), [](const TruthRow& r) {
    return r.output == (r.oracle ? BitValue::One : BitValue::Zero);
  });
  return table;
}

}  // namespace qgate::boolc
