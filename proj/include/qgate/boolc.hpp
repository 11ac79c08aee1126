#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qgate/builders.hpp"
#include "qgate/negf.hpp"
#include "qgate/scatter.hpp"

namespace qgate::boolc {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Boolean expression tree. Nodes are immutable and may be shared.
struct Expr {
  enum class Kind { Var, Const, Not, And, Or, Nand };

  Kind kind = Kind::Const;
  std::string name;  // Var
  int value = 0;     // Const
  ExprPtr lhs;       // Not uses lhs only
  ExprPtr rhs;

  static ExprPtr var(std::string name);
  static ExprPtr constant(int value);
  static ExprPtr negate(ExprPtr e);
  static ExprPtr conj(ExprPtr a, ExprPtr b);
  static ExprPtr disj(ExprPtr a, ExprPtr b);
  static ExprPtr nand(ExprPtr a, ExprPtr b);
};

bool structurally_equal(const Expr& a, const Expr& b);

/// Grammar (lowest to highest precedence, binary operators left-associative):
///   expr   := term ('|' term)*
///   term   := factor (('&' | 'NAND') factor)*
///   factor := '!' factor | '(' expr ')' | ident | '0' | '1'
ExprPtr parse(std::string_view text);

/// Minimal-parenthesis rendering; parse(pretty(e)) is structurally equal to e.
std::string pretty(const Expr& e);

/// Distinct variable names in first-occurrence order.
std::vector<std::string> variables(const Expr& e);

/// Classical evaluation; throws std::out_of_range for unbound variables.
int evaluate(const Expr& e, const std::map<std::string, int>& assignment);

/// Gate layout plus the meaning of each pendant slot. Every occurrence of a
/// variable gets its own slot; constants become fixed slots.
struct LoweredCircuit {
  GateLayout layout;
  std::vector<std::optional<std::string>> slot_variable;  // nullopt for constants
  std::vector<int> slot_constant;                         // used when slot_variable is empty
  std::vector<std::string> variables;

  /// Slot bits for an assignment of the circuit variables (in `variables` order).
  std::vector<int> slot_bits(const std::vector<int>& assignment) const;
  TightBindingGraph instantiate(const std::vector<int>& assignment, const ParameterPreset& preset,
                                const BuildOptions& options = {}) const;
};

/// Nand -> two-input gate node; Not -> one-input gate node; And -> Not(Nand);
/// Or(x, y) -> Nand(Not x, Not y); Var/Const -> pendant slots.
LoweredCircuit lower(const Expr& e);

enum class Engine { Qst, Negf };
Engine engine_from_string(const std::string& s);
std::string to_string(Engine e);

/// Transmission thresholds used to read a bit from T(E=0) with the
/// Green's-function engine: T >= on is 1, T <= off is 0, else indeterminate.
struct NegfThresholds {
  double on = 0.1;
  double off = 0.01;
};

struct TruthTableOptions {
  Engine engine = Engine::Qst;
  ParameterPreset preset = ParameterPreset::uniform();
  BuildOptions build;
  LeadModel lead;
  DeviceOptions device;
  NegfThresholds thresholds;
  ClassifyMode mode = ClassifyMode::Numeric;
  int threads = 1;
  /// Enumeration budget on the number of distinct variables.
  std::size_t max_variables = 12;
};

struct TruthRow {
  std::vector<int> assignment;
  BitValue output = BitValue::Indeterminate;
  int oracle = 0;
  std::optional<double> transmission;  // T(E=0) for the NEGF engine
};

struct TruthTable {
  std::vector<std::string> variables;
  Engine engine = Engine::Qst;
  std::vector<TruthRow> rows;
  bool matches_oracle = false;
};

/// Enumerates all assignments in binary counting order (first variable is
/// the most significant bit). Throws std::invalid_argument when the circuit
/// has more than options.max_variables variables.
TruthTable truth_table(const Expr& e, const TruthTableOptions& options = {});
TruthTable truth_table(const LoweredCircuit& circuit, const Expr& e, const TruthTableOptions& options);

}  // namespace qgate::boolc
