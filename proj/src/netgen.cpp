#include "pagamma/netgen.hpp"

#include "pagamma/errors.hpp"

#include <algorithm>
#include <string>

namespace pagamma {

void GrowthParams::validate() const {
    if (m < 1) {
        throw InvalidParams("m must be >= 1, got " + std::to_string(m));
    }
    if (n_nodes < m + 2) {
        throw InvalidParams("n_nodes must be >= m + 2, got n_nodes=" + std::to_string(n_nodes) +
                            " m=" + std::to_string(m));
    }
}

std::int64_t GrowthParams::expected_degree_sum() const {
    return m * (m + 1) + 2 * m * (n_nodes - m - 1);
}

AttachmentSampler::AttachmentSampler(std::span<const std::int64_t> degrees) {
    std::int64_t total = 0;
    for (const auto d : degrees) total += d;
    stubs_.reserve(static_cast<std::size_t>(total));
    for (std::size_t i = 0; i < degrees.size(); ++i) {
        add_stubs(static_cast<std::int64_t>(i), degrees[i]);
    }
}

void AttachmentSampler::add_stubs(std::int64_t node, std::int64_t count) {
    stubs_.insert(stubs_.end(), static_cast<std::size_t>(count), node);
}

std::int64_t AttachmentSampler::draw(Rng& rng) const {
    return stubs_[rng.uniform_index(stubs_.size())];
}

void AttachmentSampler::draw_distinct(std::int64_t count, Rng& rng,
                                      std::vector<std::int64_t>& out) const {
    out.clear();
    while (static_cast<std::int64_t>(out.size()) < count) {
        const std::int64_t node = draw(rng);
        if (std::find(out.begin(), out.end(), node) == out.end()) {
            out.push_back(node);
        }
    }
}

Network generate_network(const GrowthParams& params, bool keep_edges) {
    params.validate();
    const std::int64_t n = params.n_nodes;
    const std::int64_t m = params.m;

    Network net;
    net.sequence.params = params;
    auto& degrees = net.sequence.degrees;
    degrees.assign(static_cast<std::size_t>(n), 0);
    if (keep_edges) {
        net.edges.reserve(static_cast<std::size_t>(m * (m + 1) / 2 + m * (n - m - 1)));
    }

    AttachmentSampler sampler;
    sampler.reserve(static_cast<std::size_t>(params.expected_degree_sum()));

    // seed clique on nodes 0..m
    for (std::int64_t u = 0; u <= m; ++u) {
        degrees[u] = m;
        sampler.add_stubs(u, m);
        if (keep_edges) {
            for (std::int64_t v = 0; v < u; ++v) net.edges.emplace_back(u, v);
        }
    }

    Rng rng(params.seed);
    std::vector<std::int64_t> targets;
    targets.reserve(static_cast<std::size_t>(m));
    for (std::int64_t v = m + 1; v < n; ++v) {
        sampler.draw_distinct(m, rng, targets);
        for (const std::int64_t t : targets) {
            ++degrees[t];
            sampler.add_stubs(t, 1);
            if (keep_edges) net.edges.emplace_back(v, t);
        }
        degrees[v] = m;
        sampler.add_stubs(v, m);
    }
    return net;
}

DegreeSequence generate(const GrowthParams& params) {
    return std::move(generate_network(params, false).sequence);
}

std::map<std::int64_t, std::int64_t> degree_histogram(std::span<const std::int64_t> degrees) {
    std::map<std::int64_t, std::int64_t> hist;
    for (const auto d : degrees) ++hist[d];
    return hist;
}

std::map<std::int64_t, std::int64_t> degree_histogram(const DegreeSequence& seq) {
    return degree_histogram(seq.degrees);
}

void write_edge_list(std::ostream& os, std::span<const Edge> edges) {
    for (const auto& [u, v] : edges) os << u << ' ' << v << '\n';
}

} // namespace pagamma
