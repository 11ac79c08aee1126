#include "qgate/graph.hpp"

#include <algorithm>
#include <queue>

#include <json.hpp>

namespace qgate {

SiteId TightBindingGraph::add_site(double alpha, std::string label) {
  const SiteId id = next_id_;
  add_site_with_id(id, alpha, std::move(label));
  return id;
}

void TightBindingGraph::add_site_with_id(SiteId id, double alpha, std::string label) {
  if (index_.contains(id)) {
    throw GraphError("duplicate site id " + std::to_string(id));
  }
  index_.emplace(id, sites_.size());
  sites_.push_back(Site{id, alpha, std::move(label)});
  adjacency_.emplace_back();
  next_id_ = std::max(next_id_, id + 1);
}

void TightBindingGraph::add_bond(SiteId i, SiteId j, double beta) {
  if (i == j) {
    throw GraphError("self bond on site " + std::to_string(i));
  }
  if (!contains(i) || !contains(j)) {
    throw GraphError("bond " + std::to_string(i) + "-" + std::to_string(j) +
                     " references a missing site");
  }
  if (beta == 0.0) {
    throw GraphError("bond " + std::to_string(i) + "-" + std::to_string(j) + " has zero coupling");
  }
  if (this->beta(i, j).has_value()) {
    throw GraphError("duplicate bond " + std::to_string(i) + "-" + std::to_string(j));
  }
  const std::size_t b = bonds_.size();
  bonds_.push_back(Bond{i, j, beta});
  adjacency_[index_.at(i)].push_back(b);
  adjacency_[index_.at(j)].push_back(b);
}

void TightBindingGraph::set_root(SiteId id) {
  if (!contains(id)) {
    throw GraphError("root " + std::to_string(id) + " is not a site");
  }
  root_ = id;
}

SiteId TightBindingGraph::root() const {
  if (!root_) {
    throw GraphError("graph has no root");
  }
  return *root_;
}

std::size_t TightBindingGraph::index_of(SiteId id) const {
  auto it = index_.find(id);
  if (it == index_.end()) {
    throw GraphError("unknown site id " + std::to_string(id));
  }
  return it->second;
}

std::vector<std::pair<SiteId, double>> TightBindingGraph::neighbors(SiteId id) const {
  std::vector<std::pair<SiteId, double>> out;
  for (std::size_t b : adjacency_[index_of(id)]) {
    const Bond& bond = bonds_[b];
    out.emplace_back(bond.i == id ? bond.j : bond.i, bond.beta);
  }
  return out;
}

void TightBindingGraph::set_alpha(SiteId id, double alpha) { sites_[index_of(id)].alpha = alpha; }

void TightBindingGraph::set_beta(SiteId i, SiteId j, double beta) {
  if (beta == 0.0) {
    throw GraphError("zero coupling");
  }
  for (std::size_t b : adjacency_[index_of(i)]) {
    Bond& bond = bonds_[b];
    if ((bond.i == i && bond.j == j) || (bond.i == j && bond.j == i)) {
      bond.beta = beta;
      return;
    }
  }
  throw GraphError("no bond " + std::to_string(i) + "-" + std::to_string(j));
}

std::optional<double> TightBindingGraph::beta(SiteId i, SiteId j) const {
  for (std::size_t b : adjacency_[index_of(i)]) {
    const Bond& bond = bonds_[b];
    if ((bond.i == i && bond.j == j) || (bond.i == j && bond.j == i)) {
      return bond.beta;
    }
  }
  return std::nullopt;
}

bool TightBindingGraph::is_connected() const {
  if (sites_.empty()) {
    return false;
  }
  std::vector<bool> seen(sites_.size(), false);
  std::queue<std::size_t> frontier;
  frontier.push(0);
  seen[0] = true;
  std::size_t count = 1;
  while (!frontier.empty()) {
    const std::size_t u = frontier.front();
    frontier.pop();
    for (std::size_t b : adjacency_[u]) {
      const std::size_t v = index_.at(bonds_[b].i) == u ? index_.at(bonds_[b].j) : index_.at(bonds_[b].i);
      if (!seen[v]) {
        seen[v] = true;
        ++count;
        frontier.push(v);
      }
    }
  }
  return count == sites_.size();
}

void TightBindingGraph::validate() const {
  if (sites_.empty()) {
    throw GraphError("graph has no sites");
  }
  if (!root_) {
    throw GraphError("graph has no root");
  }
  if (!is_connected()) {
    throw GraphError("graph is not connected");
  }
  if (root_coupling_ == 0.0) {
    throw GraphError("root coupling is zero");
  }
}

Eigen::MatrixXd assemble_hamiltonian(const TightBindingGraph& g) {
  const auto n = static_cast<Eigen::Index>(g.size());
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    h(k, k) = g.sites()[static_cast<std::size_t>(k)].alpha;
  }
  for (const Bond& b : g.bonds()) {
    const auto i = static_cast<Eigen::Index>(g.index_of(b.i));
    const auto j = static_cast<Eigen::Index>(g.index_of(b.j));
    h(i, j) = b.beta;
    h(j, i) = b.beta;
  }
  return h;
}

std::string serialize(const TightBindingGraph& g, int indent) {
  using nlohmann::json;
  json doc;
  doc["sites"] = json::array();
  for (const Site& s : g.sites()) {
    doc["sites"].push_back({{"id", s.id}, {"alpha", s.alpha}, {"label", s.label}});
  }
  doc["bonds"] = json::array();
  for (const Bond& b : g.bonds()) {
    doc["bonds"].push_back({{"i", b.i}, {"j", b.j}, {"beta", b.beta}});
  }
  doc["root"] = g.has_root() ? json(g.root()) : json(nullptr);
  json meta = json::object();
  for (const auto& [k, v] : g.meta()) {
    meta[k] = v;
  }
  meta["root_coupling"] = g.root_coupling();
  doc["meta"] = std::move(meta);
  return doc.dump(indent);
}

TightBindingGraph deserialize(const std::string& document) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& e) {
    throw GraphError(std::string("malformed graph document: ") + e.what());
  }
  TightBindingGraph g;
  try {
    if (!doc.is_object() || !doc.contains("sites") || !doc.contains("bonds") ||
        !doc.contains("root")) {
      throw GraphError("graph document needs `sites`, `bonds` and `root`");
    }
    for (const json& s : doc.at("sites")) {
      g.add_site_with_id(s.at("id").get<SiteId>(), s.at("alpha").get<double>(),
                         s.value("label", std::string{}));
    }
    for (const json& b : doc.at("bonds")) {
      g.add_bond(b.at("i").get<SiteId>(), b.at("j").get<SiteId>(), b.at("beta").get<double>());
    }
    g.set_root(doc.at("root").get<SiteId>());
    if (doc.contains("meta")) {
      for (const auto& [k, v] : doc.at("meta").items()) {
        if (k == "root_coupling") {
          g.set_root_coupling(v.get<double>());
        } else {
          g.meta()[k] = v.is_string() ? v.get<std::string>() : v.dump();
        }
      }
    }
  } catch (const json::exception& e) {
    throw GraphError(std::string("malformed graph document: ") + e.what());
  }
  g.validate();
  return g;
}

}  // namespace qgate
