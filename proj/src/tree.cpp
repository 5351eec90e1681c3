#include "rif/tree.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace rif {

namespace {
constexpr double EULER_GAMMA = 0.5772156649;

bool all_rows_identical(const Matrix& points, std::span<const size_t> rows) {
    const auto first = points.row(rows.front());
    for (size_t idx = 1; idx < rows.size(); ++idx) {
        const auto r = points.row(rows[idx]);
        for (size_t j = 0; j < r.size(); ++j)
            if (r[j] != first[j]) return false;
    }
    return true;
}
}  // namespace

double c_factor(uint64_t n) {
    if (n <= 1) return 0.0;
    const double nn = static_cast<double>(n);
    return 2.0 * (std::log(nn - 1.0) + EULER_GAMMA) - 2.0 * (nn - 1.0) / nn;
}

bool rule_sends_left(const SplitRule& rule, std::span<const double> x) {
    if (const auto* axis = std::get_if<AxisSplit>(&rule)) {
        return x[axis->dim] < axis->value;
    }
    const auto& hp = std::get<HyperplaneSplit>(rule);
    double dot = 0.0;
    for (size_t j = 0; j < hp.normal.size(); ++j)
        dot += (x[j] - hp.intercept[j]) * hp.normal[j];
    return dot < 0.0;
}

namespace {

int32_t build_node(ITree& tree, const Matrix& points, std::vector<size_t>& rows,
                   size_t begin, size_t end, uint32_t level, const Splitter& splitter,
                   Rng& rng) {
    const size_t n = end - begin;
    const int32_t self = static_cast<int32_t>(tree.nodes.size());
    tree.nodes.emplace_back();

    const std::span<const size_t> here(rows.data() + begin, n);
    std::optional<SplitRule> rule;
    if (n > 1 && level < tree.depth_limit && !all_rows_identical(points, here)) {
        rule = splitter(points, here, rng);
    }
    if (!rule) {
        tree.nodes[self].payload = Leaf{static_cast<uint32_t>(n), level};
        return self;
    }

    // Partition rows in place: left block first.
    size_t mid = begin;
    for (size_t i = begin; i < end; ++i) {
        if (rule_sends_left(*rule, points.row(rows[i]))) {
            std::swap(rows[i], rows[mid]);
            ++mid;
        }
    }
    // An empty side stays in the tree as a size-0 leaf: probes falling there
    // stop at depth level+1 with no size penalty (c(0) = 0). The non-empty
    // side recurses; the depth limit bounds repeated non-separating cuts.
    const auto child = [&](size_t lo_i, size_t hi_i) -> int32_t {
        if (lo_i == hi_i) {
            const int32_t leaf = static_cast<int32_t>(tree.nodes.size());
            tree.nodes.emplace_back();
            tree.nodes[leaf].payload = Leaf{0, level + 1};
            return leaf;
        }
        return build_node(tree, points, rows, lo_i, hi_i, level + 1, splitter, rng);
    };

    tree.nodes[self].payload = SplitRule{std::move(*rule)};
    const int32_t left = child(begin, mid);
    const int32_t right = child(mid, end);
    tree.nodes[self].left = left;
    tree.nodes[self].right = right;
    return self;
}

}  // namespace

ITree build_tree(const Matrix& points, uint32_t depth_limit, const Splitter& splitter,
                 Rng rng) {
    if (points.rows() < 1) throw std::invalid_argument("build_tree needs at least one point");
    ITree tree;
    tree.depth_limit = depth_limit;
    tree.psi = static_cast<uint32_t>(points.rows());
    std::vector<size_t> rows(points.rows());
    std::iota(rows.begin(), rows.end(), size_t{0});
    build_node(tree, points, rows, 0, rows.size(), 0, splitter, rng);
    return tree;
}

double path_length(const ITree& tree, std::span<const double> x) {
    int32_t idx = 0;
    for (;;) {
        const TreeNode& node = tree.nodes[static_cast<size_t>(idx)];
        if (node.is_leaf()) {
            const Leaf& leaf = node.leaf();
            return static_cast<double>(leaf.level) + c_factor(leaf.size);
        }
        idx = rule_sends_left(node.rule(), x) ? node.left : node.right;
    }
}

std::optional<SplitRule> draw_axis_split(const Matrix& points,
                                         std::span<const size_t> rows, Rng& rng) {
    const size_t d = points.cols();
    for (size_t attempt = 0; attempt < d; ++attempt) {
        const uint32_t dim = static_cast<uint32_t>(rng.next_below(d));
        double lo = std::numeric_limits<double>::infinity();
        double hi = -std::numeric_limits<double>::infinity();
        for (const size_t r : rows) {
            const double v = points(r, dim);
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        if (lo < hi) return SplitRule{AxisSplit{dim, rng.uniform(lo, hi)}};
    }
    return std::nullopt;
}

}  // namespace rif
