#pragma once

#include "pagamma/random.hpp"

#include <cstdint>
#include <map>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

namespace pagamma {

/// Parameters of one preferential-attachment realization.
struct GrowthParams {
    std::int64_t n_nodes = 0;  ///< final node count N
    std::int64_t m = 0;        ///< links brought by each new node
    std::uint64_t seed = 0;

    /// Throws InvalidParams unless m >= 1 and n_nodes >= m + 2.
    void validate() const;

    /// Degree total of a finished network: m(m+1) from the seed clique
    /// plus 2m per grown node.
    std::int64_t expected_degree_sum() const;
};

/// Final degrees of a generated network, indexed by creation order.
struct DegreeSequence {
    std::vector<std::int64_t> degrees;
    GrowthParams params;
};

using Edge = std::pair<std::int64_t, std::int64_t>;

struct Network {
    DegreeSequence sequence;
    /// Only filled when requested; (new node, target) in creation order.
    std::vector<Edge> edges;
};

/// Degree-proportional node sampler backed by a flat list in which each
/// node appears once per unit of degree. Draws are O(1).
class AttachmentSampler {
public:
    AttachmentSampler() = default;

    /// Builds the list from explicit degrees (node i appears degrees[i] times).
    explicit AttachmentSampler(std::span<const std::int64_t> degrees);

    void reserve(std::size_t stubs) { stubs_.reserve(stubs); }
    void add_stubs(std::int64_t node, std::int64_t count);
    std::size_t size() const { return stubs_.size(); }

    std::int64_t draw(Rng& rng) const;

    /// Fills `out` with `count` distinct nodes, each drawn proportionally to
    /// degree; repeats are rejected and redrawn. The sampler is not modified,
    /// so all draws of one round see the same degrees.
    void draw_distinct(std::int64_t count, Rng& rng, std::vector<std::int64_t>& out) const;

private:
    std::vector<std::int64_t> stubs_;
};

/// Grows a Barabasi-Albert network: complete graph on m+1 nodes, then each
/// new node links to m distinct existing nodes chosen with probability
/// proportional to current degree. Simple graph: no self-loops or
/// multi-edges. Deterministic in params.seed (see Rng).
DegreeSequence generate(const GrowthParams& params);
Network generate_network(const GrowthParams& params, bool keep_edges);

std::map<std::int64_t, std::int64_t> degree_histogram(std::span<const std::int64_t> degrees);
std::map<std::int64_t, std::int64_t> degree_histogram(const DegreeSequence& seq);

/// One "u v" pair per line, nodes 0-indexed in creation order.
void write_edge_list(std::ostream& os, std::span<const Edge> edges);

} // namespace pagamma
