#include "doctest.h"

#include <random>

#include "qgate/boolc.hpp"

using namespace qgate;
using namespace qgate::boolc;

namespace {

// Random expression with exactly `leaves` variable/constant occurrences.
ExprPtr random_expr(std::mt19937_64& rng, int leaves) {
  if (leaves == 1) {
    const auto pick = rng() % 8;
    if (pick == 0) return Expr::constant(static_cast<int>(rng() & 1U));
    const char names[] = {'a', 'b', 'c', 'd'};
    ExprPtr v = Expr::var(std::string(1, names[rng() % 4]));
    return rng() % 4 == 0 ? Expr::negate(v) : v;
  }
  const int left = 1 + static_cast<int>(rng() % static_cast<unsigned>(leaves - 1));
  ExprPtr a = random_expr(rng, left);
  ExprPtr b = random_expr(rng, leaves - left);
  ExprPtr e;
  switch (rng() % 3) {
    case 0: e = Expr::conj(a, b); break;
    case 1: e = Expr::disj(a, b); break;
    default: e = Expr::nand(a, b); break;
  }
  return rng() % 5 == 0 ? Expr::negate(e) : e;
}

}  // namespace

TEST_CASE("parse examples") {
  CHECK(structurally_equal(*parse("!(a&b)"), *Expr::negate(Expr::conj(Expr::var("a"), Expr::var("b")))));
  CHECK(structurally_equal(*parse("a NAND b"), *Expr::nand(Expr::var("a"), Expr::var("b"))));
  CHECK(structurally_equal(*parse("a & b | c"),
                           *Expr::disj(Expr::conj(Expr::var("a"), Expr::var("b")), Expr::var("c"))));
  CHECK(structurally_equal(*parse("a | b & c"),
                           *Expr::disj(Expr::var("a"), Expr::conj(Expr::var("b"), Expr::var("c")))));
  CHECK(structurally_equal(*parse("a & b & c"),
                           *Expr::conj(Expr::conj(Expr::var("a"), Expr::var("b")), Expr::var("c"))));
  CHECK(structurally_equal(*parse("!!x_1"), *Expr::negate(Expr::negate(Expr::var("x_1")))));
  CHECK(parse(" 1 ")->kind == Expr::Kind::Const);
}

TEST_CASE("parse errors carry positions") {
  auto position_of = [](const char* text) -> std::size_t {
    try {
      parse(text);
    } catch (const ParseError& e) {
      return e.position();
    }
    FAIL("expected a parse error for " << text);
    return 0;
  };
  CHECK(position_of("a $ b") == 2);
  CHECK(position_of("((") == 2);
  CHECK(position_of("(a & b") == 0);
  CHECK(position_of("a b") == 2);
  CHECK(position_of("a & b)") == 5);
  CHECK(position_of("") == 0);
  CHECK(position_of("a &") == 3);
  CHECK(position_of("12") == 0);
}

TEST_CASE("pretty printing uses minimal parentheses") {
  CHECK(pretty(*parse("((a & b)) | (c)")) == "a & b | c");
  CHECK(pretty(*parse("a & (b | c)")) == "a & (b | c)");
  CHECK(pretty(*parse("a & (b & c)")) == "a & (b & c)");
  CHECK(pretty(*parse("!(a NAND b)")) == "!(a NAND b)");
  CHECK(pretty(*parse("(a NAND b) NAND c")) == "a NAND b NAND c");
}

TEST_CASE("round trip on random expressions") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 500; ++trial) {
    const auto e = random_expr(rng, 1 + trial % 8);
    const std::string text = pretty(*e);
    const auto back = parse(text);
    CHECK_MESSAGE(structurally_equal(*back, *e), text);
    CHECK(pretty(*back) == text);
  }
}

TEST_CASE("variables and evaluation") {
  const auto e = parse("b & a | !b");
  CHECK(variables(*e) == std::vector<std::string>{"b", "a"});
  CHECK(evaluate(*e, {{"a", 0}, {"b", 1}}) == 0);
  CHECK(evaluate(*e, {{"a", 0}, {"b", 0}}) == 1);
  CHECK_THROWS_AS(evaluate(*e, {{"a", 0}}), std::out_of_range);
}

TEST_CASE("lowering sizes") {
  const auto nand = lower(*parse("a NAND b"));
  CHECK(nand.layout.gate_count() == 1);
  CHECK(nand.layout.slot_count == 2);
  CHECK(lower(*parse("a | b")).layout.gate_count() == 3);
  CHECK(lower(*parse("a & b")).layout.gate_count() == 2);
  CHECK(lower(*parse("!a")).layout.gate_count() == 1);
  // Constants and bare variables become root slots.
  const auto bare = lower(*parse("a"));
  CHECK(bare.layout.gate_count() == 0);
  CHECK(bare.layout.root.kind == GateInput::Kind::Slot);
  // Repeated variables get one slot per occurrence.
  const auto rep = lower(*parse("a NAND a"));
  CHECK(rep.layout.slot_count == 2);
  CHECK(rep.variables.size() == 1);
  CHECK(rep.slot_bits({1}) == std::vector<int>{1, 1});
  CHECK_THROWS(rep.slot_bits({1, 0}));
}

TEST_CASE("NOT of input 0 classifies as 1") {
  const auto circuit = lower(*parse("!a"));
  const auto g = circuit.instantiate({0}, ParameterPreset::uniform());
  CHECK(classify_bit(g).value == BitValue::One);
}

TEST_CASE("gate truth tables") {
  const auto nand = truth_table(*parse("a NAND b"));
  REQUIRE(nand.rows.size() == 4);
  const BitValue expected[] = {BitValue::One, BitValue::One, BitValue::One, BitValue::Zero};
  for (std::size_t k = 0; k < 4; ++k) CHECK(nand.rows[k].output == expected[k]);
  CHECK(nand.rows[1].assignment == std::vector<int>{0, 1});
  CHECK(nand.matches_oracle);
  for (const char* text : {"!a", "a & b", "a | b", "!a | !b", "0", "1 & a", "a"}) {
    CHECK_MESSAGE(truth_table(*parse(text)).matches_oracle, text);
  }
}

TEST_CASE("NOT parity") {
  std::string text = "a & b";
  for (int k = 1; k <= 6; ++k) {
    text = "!(" + text + ")";
    const auto table = truth_table(*parse(text));
    CHECK(table.matches_oracle);
    for (const auto& row : table.rows) {
      const int base = row.assignment[0] & row.assignment[1];
      CHECK(row.output == (((k % 2) ? 1 - base : base) ? BitValue::One : BitValue::Zero));
    }
  }
}

TEST_CASE("depth-3 NAND tree expression over all 256 inputs") {
  const auto e = parse("((x1 NAND x2) NAND (x3 NAND x4)) NAND ((x5 NAND x6) NAND (x7 NAND x8))");
  TruthTableOptions options;
  options.threads = 2;
  const auto table = truth_table(*e, options);
  CHECK(table.rows.size() == 256);
  CHECK(table.matches_oracle);
}

TEST_CASE("lowering soundness for up to 8 occurrences") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 150; ++trial) {
    const auto e = random_expr(rng, 1 + trial % 8);
    const auto table = truth_table(*e);
    CHECK_MESSAGE(table.matches_oracle, pretty(*e));
  }
}

TEST_CASE("both engines and the variable budget") {
  TruthTableOptions options;
  options.engine = Engine::Negf;
  const auto table = truth_table(*parse("a NAND b"), options);
  CHECK(table.matches_oracle);
  for (const auto& row : table.rows) CHECK(row.transmission.has_value());

  options.max_variables = 2;
  CHECK_THROWS_AS(truth_table(*parse("a & b & c"), options), std::invalid_argument);
  CHECK(engine_from_string(to_string(Engine::Qst)) == Engine::Qst);
  CHECK_THROWS(engine_from_string("dft"));
}
