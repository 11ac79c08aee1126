#include "qgate/scatter.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <queue>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace qgate {

std::string AmplitudeRatio::to_string() const {
  std::ostringstream os;
  if (is_infinite()) {
    os << (num_ < 0 ? "-inf" : "+inf");
  } else {
    os << value();
  }
  return os.str();
}

void LeadModel::validate() const {
  if (beta_lead == 0.0) {
    throw ScatterError("lead coupling beta_lead must be nonzero");
  }
  if (!(eta > 0.0)) {
    throw ScatterError("broadening eta must be positive");
  }
}

Momentum Momentum::from_energy(double energy, const LeadModel& lead) {
  const double c = (energy - lead.alpha_lead) / (2.0 * lead.beta_lead);
  if (!(std::abs(c) < 1.0)) {
    throw ScatterError("energy " + std::to_string(energy) + " eV lies outside the lead band");
  }
  return Momentum{std::acos(c)};
}

double Momentum::energy(const LeadModel& lead) const {
  return lead.alpha_lead + 2.0 * lead.beta_lead * std::cos(theta);
}

std::string to_string(BitValue b) {
  switch (b) {
    case BitValue::Zero: return "0";
    case BitValue::One: return "1";
    case BitValue::Indeterminate: return "indeterminate";
  }
  return "?";
}

namespace {

struct Orientation {
  std::unordered_map<SiteId, SiteId> parent;  // root maps to itself
};

Orientation orient(const TightBindingGraph& g) {
  Orientation o;
  const SiteId root = g.root();
  o.parent[root] = root;
  std::queue<SiteId> frontier;
  frontier.push(root);
  while (!frontier.empty()) {
    const SiteId u = frontier.front();
    frontier.pop();
    for (const auto& [w, beta] : g.neighbors(u)) {
      if (!o.parent.contains(w)) {
        o.parent[w] = u;
        frontier.push(w);
      }
    }
  }
  return o;
}

/// Post-order list of the subtree of v (children before parents), with the
/// coupling of each node to its parent. Throws on cycles.
struct SubtreeNode {
  SiteId id;
  SiteId parent;
  double beta_to_parent;
};

std::vector<SubtreeNode> subtree_postorder(const TightBindingGraph& g, SiteId v) {
  if (!g.contains(v)) {
    throw ScatterError("site " + std::to_string(v) + " is not in the graph");
  }
  const Orientation o = orient(g);
  if (!o.parent.contains(v)) {
    throw ScatterError("site " + std::to_string(v) + " is not connected to the root");
  }
  const SiteId root = g.root();
  const SiteId vp = o.parent.at(v);
  double v_beta = g.root_coupling();
  if (v != root) {
    v_beta = *g.beta(v, vp);
  }

  std::vector<SubtreeNode> pre;
  std::unordered_set<SiteId> seen;
  std::vector<SubtreeNode> stack{{v, v == root ? SiteId{-1} : vp, v_beta}};
  seen.insert(v);
  while (!stack.empty()) {
    const SubtreeNode n = stack.back();
    stack.pop_back();
    pre.push_back(n);
    for (const auto& [w, beta] : g.neighbors(n.id)) {
      if (w == n.parent) {
        continue;
      }
      if (!seen.insert(w).second) {
        throw ScatterError("subtree of site " + std::to_string(v) + " contains a cycle");
      }
      stack.push_back({w, n.id, beta});
    }
  }
  std::reverse(pre.begin(), pre.end());
  return pre;
}

}  // namespace

AmplitudeRatio node_ratio(const TightBindingGraph& g, SiteId v, double energy) {
  const auto order = subtree_postorder(g, v);
  // Per node: running denominator E - alpha - sum beta_c R_c, and whether an
  // infinite child ratio has been seen.
  std::unordered_map<SiteId, double> denom;
  std::unordered_map<SiteId, bool> saturated;
  for (const auto& n : order) {
    denom.try_emplace(n.id, energy - g.site(n.id).alpha);
  }
  AmplitudeRatio result = AmplitudeRatio::zero();
  for (const auto& n : order) {
    AmplitudeRatio r = AmplitudeRatio::zero();
    if (saturated[n.id]) {
      r = AmplitudeRatio::zero();
    } else if (denom[n.id] == 0.0) {
      r = AmplitudeRatio(n.beta_to_parent, 0.0);
    } else {
      r = AmplitudeRatio(n.beta_to_parent, denom[n.id]);
    }
    if (n.id == v) {
      result = r;
      break;
    }
    if (r.is_infinite()) {
      saturated[n.parent] = true;
    } else {
      denom[n.parent] -= n.beta_to_parent * r.value();
    }
  }
  return result;
}

AmplitudeRatio tree_output_y(const TightBindingGraph& g, double energy, const LeadModel& lead) {
  lead.validate();
  if (g.root_coupling() != lead.beta_lead) {
    throw ScatterError(
        "closed-form scattering needs the root-chain coupling to equal beta_lead; "
        "use the Green's-function engine for this graph");
  }
  return node_ratio(g, g.root(), energy);
}

ScatteringSolution transmission_from_y(const AmplitudeRatio& y, double energy, const LeadModel& lead) {
  lead.validate();
  ScatteringSolution s;
  s.momentum = Momentum::from_energy(energy, lead);
  const std::complex<double> two_i_sin{0.0, 2.0 * std::sin(s.momentum.theta)};
  if (y.is_infinite()) {
    s.F = 0.0;
  } else {
    s.F = s.A * two_i_sin / (two_i_sin + y.value());
  }
  s.B = s.F - s.A;
  s.T = std::norm(s.F) / std::norm(s.A);
  return s;
}

ScatteringSolution transmission_qst(const TightBindingGraph& g, double energy, const LeadModel& lead) {
  Momentum::from_energy(energy, lead);
  return transmission_from_y(tree_output_y(g, energy, lead), energy, lead);
}

RationalFunction exact_node_ratio(const TightBindingGraph& g, SiteId v) {
  const auto order = subtree_postorder(g, v);
  // Denominator D_n = E - alpha_n - sum_c beta_c p_c / q_c, held as P_n / Q_n.
  struct Acc {
    Polynomial p;
    Polynomial q;
    bool saturated = false;
  };
  std::unordered_map<SiteId, Acc> acc;
  for (const auto& n : order) {
    acc.try_emplace(n.id, Acc{Polynomial::linear(-to_rational(g.site(n.id).alpha), 1),
                              Polynomial::constant(1), false});
  }
  RationalFunction result;
  for (const auto& n : order) {
    Acc& a = acc.at(n.id);
    RationalFunction r;
    const Rational beta = to_rational(n.beta_to_parent);
    if (a.saturated) {
      r.num = Polynomial{};
      r.den = Polynomial::constant(1);
    } else {
      // R = beta / (P / Q) = beta Q / P; P == 0 leaves an infinite ratio.
      r.num = beta * a.q;
      r.den = a.p;
      r.reduce();
    }
    if (n.id == v) {
      result = std::move(r);
      break;
    }
    Acc& parent = acc.at(n.parent);
    if (parent.saturated) {
      continue;
    }
    if (r.is_identically_infinite()) {
      parent.saturated = true;
      continue;
    }
    // P/Q - beta num/den = (P den - beta num Q) / (Q den)
    parent.p = parent.p * r.den - beta * (r.num * parent.q);
    parent.q = parent.q * r.den;
    RationalFunction tmp{parent.p, parent.q};
    tmp.reduce();
    parent.p = std::move(tmp.num);
    parent.q = std::move(tmp.den);
  }
  return result;
}

RationalFunction exact_tree_output_y(const TightBindingGraph& g) {
  return exact_node_ratio(g, g.root());
}

GateBit classify_exact(const RationalFunction& y) {
  GateBit bit;
  if (y.is_identically_zero()) {
    bit.value = BitValue::One;
    bit.value_from_below = BitValue::One;
    bit.y_limit = AmplitudeRatio::zero();
    return bit;
  }
  if (y.is_identically_infinite()) {
    const double sign = y.num.leading_coeff() > 0 ? 1.0 : -1.0;
    bit.value = BitValue::Zero;
    bit.value_from_below = BitValue::Zero;
    bit.y_limit = AmplitudeRatio::infinity(sign);
    return bit;
  }
  const int k = y.num.order() - y.den.order();
  const Rational c = y.num.lowest_coeff() / y.den.lowest_coeff();
  if (k > 0) {
    bit.value = BitValue::One;
    bit.value_from_below = BitValue::One;
    bit.y_limit = AmplitudeRatio::zero();
  } else if (k < 0) {
    bit.value = BitValue::Zero;
    bit.value_from_below = BitValue::Zero;
    bit.y_limit = AmplitudeRatio::infinity(c > 0 ? 1.0 : -1.0);
  } else {
    bit.value = BitValue::Indeterminate;
    bit.value_from_below = BitValue::Indeterminate;
    bit.y_limit = AmplitudeRatio::finite(static_cast<double>(c));
  }
  return bit;
}

namespace {

bool within_factor_two(const std::array<double, 3>& v) {
  const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  return std::isfinite(*hi) && *lo > 0.0 && *hi <= 2.0 * *lo;
}

struct LadderReading {
  BitValue value;
  AmplitudeRatio last;
};

LadderReading read_ladder(const TightBindingGraph& g, double direction) {
  std::array<AmplitudeRatio, 3> ys{AmplitudeRatio::zero(), AmplitudeRatio::zero(), AmplitudeRatio::zero()};
  for (std::size_t k = 0; k < kClassifierLadder.size(); ++k) {
    ys[k] = node_ratio(g, g.root(), direction * kClassifierLadder[k]);
  }
  const auto all = [&](auto pred) { return std::all_of(ys.begin(), ys.end(), pred); };
  if (all([](const AmplitudeRatio& r) { return r.is_infinite(); })) {
    return {BitValue::Zero, ys.back()};
  }
  if (all([](const AmplitudeRatio& r) { return r.is_zero(); })) {
    return {BitValue::One, ys.back()};
  }
  std::array<double, 3> grow{}, shrink{};
  for (std::size_t k = 0; k < ys.size(); ++k) {
    const double mag = std::abs(ys[k].value());
    grow[k] = mag * kClassifierLadder[k];
    shrink[k] = mag / kClassifierLadder[k];
  }
  if (within_factor_two(grow)) {
    return {BitValue::Zero, ys.back()};
  }
  if (within_factor_two(shrink)) {
    return {BitValue::One, ys.back()};
  }
  return {BitValue::Indeterminate, ys.back()};
}

}  // namespace

GateBit classify_bit(const TightBindingGraph& g, ClassifyMode mode) {
  g.validate();
  if (mode == ClassifyMode::Exact) {
    return classify_exact(exact_tree_output_y(g));
  }
  const LadderReading above = read_ladder(g, 1.0);
  const LadderReading below = read_ladder(g, -1.0);
  GateBit bit;
  bit.value = above.value;
  bit.value_from_below = below.value;
  switch (above.value) {
    case BitValue::Zero:
      bit.y_limit = AmplitudeRatio::infinity(above.last.num() * above.last.den() < 0 ? -1.0 : 1.0);
      if (above.last.is_infinite()) {
        bit.y_limit = AmplitudeRatio::infinity(above.last.num());
      }
      break;
    case BitValue::One:
      bit.y_limit = AmplitudeRatio::zero();
      break;
    case BitValue::Indeterminate:
      bit.y_limit = above.last;
      break;
  }
  return bit;
}

}  // namespace qgate
