#include "reccs/sbm.hpp"

#include <memory>
#include <stdexcept>

namespace reccs {

namespace {

struct BlockSampler {
    std::vector<Vertex> members;        // members with positive target degree
    std::vector<std::uint64_t> weights;
    std::unique_ptr<AliasTable> table;

    NodeId pick(const NetworkParams& p, RngStream& rng) const {
        return p.node_ids[members[table->sample(rng)]];
    }
};

}  // namespace

MultiGraph sample_sbm(const NetworkParams& p, const RngStream& rng) {
    if (!p.consistent()) {
        throw std::invalid_argument("sample_sbm: degree sum != 2 * block edge total");
    }
    const std::uint32_t nblocks = static_cast<std::uint32_t>(p.num_blocks());

    std::vector<BlockSampler> samplers(nblocks);
    for (Vertex v = 0; v < p.num_nodes(); ++v) {
        if (p.degrees[v] == 0) continue;  // degree-0 nodes are never endpoints
        auto& s = samplers[p.membership[v]];
        s.members.push_back(v);
        s.weights.push_back(p.degrees[v]);
    }

    MultiGraph mg(p.node_ids);
    for (const auto& [r, s, count] : p.block_edges.entries()) {
        for (std::uint32_t b : {r, s}) {
            auto& bs = samplers[b];
            if (bs.members.empty()) {
                throw std::invalid_argument(
                    "sample_sbm: block '" + p.cluster_labels[b] +
                    "' has edges requested but zero total degree");
            }
            if (!bs.table) bs.table = std::make_unique<AliasTable>(bs.weights);
        }
        RngStream sub = rng.substream(r, s);
        for (std::uint64_t e = 0; e < count; ++e) {
            const NodeId u = samplers[r].pick(p, sub);
            const NodeId v = samplers[s].pick(p, sub);
            mg.add_edge(u, v);
        }
    }
    return mg;
}

Graph generate_simple_sbm(const NetworkParams& p, const RngStream& rng) {
    return simplify(sample_sbm(p, rng));
}

}  // namespace reccs
