#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include <Eigen/Dense>

namespace qgate {

/// Thrown when a graph or graph document violates a structural invariant.
class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using SiteId = std::int64_t;

struct Site {
  SiteId id = 0;
  double alpha = 0.0;  // on-site energy, eV
  std::string label;

  friend bool operator==(const Site&, const Site&) = default;
};

struct Bond {
  SiteId i = 0;
  SiteId j = 0;
  double beta = 0.0;  // coupling, eV

  friend bool operator==(const Bond&, const Bond&) = default;
};

/// Tight-binding graph: sites, nearest-neighbour bonds, and a root site that
/// couples to chain site r=0 with `root_coupling`.
///
/// Site ids are opaque; dense indices (0..size-1, insertion order) are used
/// for matrix assembly. Graphs are value types and immutable in practice once
/// a builder hands them out.
class TightBindingGraph {
 public:
  TightBindingGraph() = default;

  /// Adds a site with the next free id.
  SiteId add_site(double alpha, std::string label = {});
  /// Adds a site with an explicit id. Throws on duplicate ids.
  void add_site_with_id(SiteId id, double alpha, std::string label = {});
  /// Throws on self loops, missing endpoints, duplicate pairs or beta == 0.
  void add_bond(SiteId i, SiteId j, double beta);

  void set_root(SiteId id);
  void set_root_coupling(double beta) { root_coupling_ = beta; }

  const std::vector<Site>& sites() const { return sites_; }
  const std::vector<Bond>& bonds() const { return bonds_; }
  std::size_t size() const { return sites_.size(); }
  bool empty() const { return sites_.empty(); }

  bool has_root() const { return root_.has_value(); }
  SiteId root() const;
  double root_coupling() const { return root_coupling_; }

  bool contains(SiteId id) const { return index_.contains(id); }
  std::size_t index_of(SiteId id) const;
  const Site& site(SiteId id) const { return sites_[index_of(id)]; }

  /// Neighbour list as (site id, coupling) pairs, in bond insertion order.
  std::vector<std::pair<SiteId, double>> neighbors(SiteId id) const;

  void set_alpha(SiteId id, double alpha);
  void set_beta(SiteId i, SiteId j, double beta);
  std::optional<double> beta(SiteId i, SiteId j) const;

  std::map<std::string, std::string>& meta() { return meta_; }
  const std::map<std::string, std::string>& meta() const { return meta_; }

  bool is_connected() const;
  bool is_tree() const { return is_connected() && bonds_.size() + 1 == sites_.size(); }

  /// Full structural validation: non-empty, root set, connected.
  void validate() const;

  friend bool operator==(const TightBindingGraph& a, const TightBindingGraph& b) {
    return a.sites_ == b.sites_ && a.bonds_ == b.bonds_ && a.root_ == b.root_ &&
           a.root_coupling_ == b.root_coupling_ && a.meta_ == b.meta_;
  }

 private:
  std::vector<Site> sites_;
  std::vector<Bond> bonds_;
  std::unordered_map<SiteId, std::size_t> index_;
  std::vector<std::vector<std::size_t>> adjacency_;  // site index -> bond indices
  std::optional<SiteId> root_;
  double root_coupling_ = -1.0;
  SiteId next_id_ = 0;
  std::map<std::string, std::string> meta_;
};

/// H[i][i] = alpha_i, H[i][j] = H[j][i] = beta_ij, zero elsewhere. Indices
/// follow site insertion order.
Eigen::MatrixXd assemble_hamiltonian(const TightBindingGraph& g);

/// JSON graph document with fields `sites`, `bonds`, `root`, `meta`.
std::string serialize(const TightBindingGraph& g, int indent = 2);
TightBindingGraph deserialize(const std::string& document);

}  // namespace qgate
