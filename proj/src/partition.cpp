#include "semireg/partition.hpp"

#include <algorithm>

#include "semireg/errors.hpp"
#include "semireg/group.hpp"

namespace semireg {

Partition Partition::from_blocks(int degree, std::vector<std::vector<int>> blocks) {
    Partition p;
    p.degree = degree;
    for (auto& b : blocks) {
        require(!b.empty(), ErrorKind::Precondition, "partition block is empty");
        std::sort(b.begin(), b.end());
    }
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    p.blocks = std::move(blocks);
    p.block_of.assign(degree, -1);
    for (int bi = 0; bi < p.size(); ++bi) {
        for (int x : p.blocks[bi]) {
            require(x >= 0 && x < degree && p.block_of[x] == -1, ErrorKind::Precondition,
                    "partition blocks are not disjoint subsets of the domain");
            p.block_of[x] = bi;
        }
    }
    for (int x = 0; x < degree; ++x)
        require(p.block_of[x] != -1, ErrorKind::Precondition, "partition does not cover the domain");
    return p;
}

Partition Partition::singletons(int degree) {
    std::vector<std::vector<int>> blocks(degree);
    for (int i = 0; i < degree; ++i) blocks[i] = {i};
    return from_blocks(degree, std::move(blocks));
}

Partition Partition::one_block(int degree) {
    std::vector<int> all(degree);
    for (int i = 0; i < degree; ++i) all[i] = i;
    return from_blocks(degree, {all});
}

bool is_invariant_partition(const Partition& partition, const PermGroup& group) {
    if (partition.degree != group.degree()) return false;
    for (const auto& g : group.generators()) {
        for (const auto& block : partition.blocks) {
            int target = partition.block_of[g[block.front()]];
            for (int x : block)
                if (partition.block_of[g[x]] != target) return false;
            if (static_cast<int>(partition.blocks[target].size()) != static_cast<int>(block.size()))
                return false;
        }
    }
    return true;
}

} // namespace semireg
