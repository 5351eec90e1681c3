#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "rif/matrix.hpp"
#include "rif/rng.hpp"

namespace rif {

struct AxisSplit {
    uint32_t dim = 0;
    double value = 0.0;
};

// Partitions by the sign of (x - intercept) . normal; normal has unit norm.
struct HyperplaneSplit {
    std::vector<double> normal;
    std::vector<double> intercept;
};

struct Leaf {
    uint32_t size = 0;   // training points that reached this leaf
    uint32_t level = 0;  // depth from the root
};

using SplitRule = std::variant<AxisSplit, HyperplaneSplit>;

// Nodes stored flat in preorder; children referenced by index.
struct TreeNode {
    std::variant<Leaf, SplitRule> payload;
    int32_t left = -1;
    int32_t right = -1;

    bool is_leaf() const noexcept { return payload.index() == 0; }
    const Leaf& leaf() const { return std::get<Leaf>(payload); }
    const SplitRule& rule() const { return std::get<SplitRule>(payload); }
};

struct ITree {
    std::vector<TreeNode> nodes;  // nodes[0] is the root
    uint32_t depth_limit = 0;
    uint32_t psi = 0;  // training sample size
};

// Average path length of an unsuccessful BST search over n points, using the
// approximation H(i) = ln(i) + gamma. Zero for n <= 1.
double c_factor(uint64_t n);

// A splitter draws a rule for the points currently at a node (given by row
// indices into the training matrix), or declines, in which case the node
// becomes a leaf. Retry policies live inside the splitter.
using Splitter = std::function<std::optional<SplitRule>(
    const Matrix& points, std::span<const size_t> rows, Rng& rng)>;

// True when x goes to the left child.
bool rule_sends_left(const SplitRule& rule, std::span<const double> x);

ITree build_tree(const Matrix& points, uint32_t depth_limit, const Splitter& splitter,
                 Rng rng);

// Leaf level plus c_factor(leaf size) for the leaf x descends to.
double path_length(const ITree& tree, std::span<const double> x);

// Splitter for axis-aligned trees: uniform dimension, uniform value in the
// node's range along it; redraws the dimension up to d times on a flat range.
std::optional<SplitRule> draw_axis_split(const Matrix& points,
                                         std::span<const size_t> rows, Rng& rng);

}  // namespace rif
