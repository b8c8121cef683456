#pragma once

#include <map>
#include <string>
#include <vector>

namespace tflm {

/// Univariate leaf. Discrete values are 0-based integers carried in doubles.
struct LeafDistribution {
  enum class Kind { Bernoulli, Categorical, Gaussian };
  int variable = -1;
  Kind kind = Kind::Bernoulli;
  double p = 0.5;                  // Bernoulli: P(x = 1)
  std::vector<double> weights;     // Categorical: P(x = i)
  double mean = 0.0;               // Gaussian
  double stddev = 1.0;

  static LeafDistribution make_bernoulli(int var, double p);
  static LeafDistribution make_categorical(int var, std::vector<double> w);
  static LeafDistribution make_gaussian(int var, double mean, double stddev);
};

/// Node of a sum-product network. Sum nodes may carry a `selector` variable:
/// the latent choice the sum marginalizes. Evidence on a selector pins the
/// branch whose label matches; without evidence the sum behaves normally.
/// Labels default to child positions and stay meaningful when zero-weight
/// branches are pruned at construction time.
struct SpnNode {
  enum class Kind { Sum, Product, Leaf };
  Kind kind = Kind::Leaf;
  std::vector<int> children;    // sum / product
  std::vector<double> weights;  // sum only; positive, normalized
  int selector = -1;            // sum only; -1 = anonymous mixture
  std::vector<int> labels;      // sum only; selector value per child
  LeafDistribution leaf;        // leaf only
};

/// Rooted DAG of sum/product/leaf nodes. Immutable once built; all queries
/// are read-only and safe to run concurrently.
struct SpnGraph {
  std::vector<SpnNode> nodes;
  int root = -1;

  int add_sum(std::vector<int> children, std::vector<double> weights,
              int selector = -1, std::vector<int> labels = {});
  int add_product(std::vector<int> children);
  int add_leaf(LeafDistribution leaf);
  int node_count() const { return static_cast<int>(nodes.size()); }
};

/// variable id -> observed value; unassigned variables are marginalized.
using Evidence = std::map<int, double>;

/// Checks structural invariants (rooted DAG, positive normalized sum weights,
/// completeness, decomposability, leaf parameter validity) and returns each
/// node's scope as a sorted variable list. Unreachable nodes get empty scope.
std::vector<std::vector<int>> validate_spn(const SpnGraph& spn);

/// log Z via one bottom-up pass; 0 for fully normalized networks.
double log_partition(const SpnGraph& spn);

/// log of the (unnormalized) evidence value. Normalized log-probability is
/// log_evidence - log_partition.
double log_evidence(const SpnGraph& spn, const Evidence& evidence);

/// P(query = v | evidence) for each value v of a discrete variable,
/// computed by one evidence query per value.
std::vector<double> marginal_posterior(const SpnGraph& spn,
                                       const Evidence& evidence, int query);

struct MapResult {
  double log_score = 0.0;
  std::vector<int> sum_choice;       // argmax child position per node; -1 otherwise
  std::vector<char> reached;         // visited during top-down backtracking
  std::map<int, double> assignment;  // selector vars and unobserved leaves on
                                     // the selected path
};

/// Max-product upward pass (ties broken toward the lowest child index)
/// followed by top-down backtracking.
MapResult map_state(const SpnGraph& spn, const Evidence& evidence);

/// Cardinality of a discrete variable, inferred from leaves and selector
/// labels. Throws DomainMismatch for continuous or unknown variables.
int variable_cardinality(const SpnGraph& spn, int var);

/// Debug dump (node list with kinds, children, weights). Not a stable format.
std::string spn_to_json(const SpnGraph& spn);

}  // namespace tflm
