#pragma once

#include <vector>

namespace semireg {

// A partition of {0,...,degree-1} into disjoint non-empty blocks. Blocks are
// sorted internally and ordered by their minimum element, so block indices
// are deterministic.
struct Partition {
    int degree = 0;
    std::vector<std::vector<int>> blocks;
    std::vector<int> block_of;

    static Partition from_blocks(int degree, std::vector<std::vector<int>> blocks);
    static Partition singletons(int degree);
    static Partition one_block(int degree);

    int size() const { return static_cast<int>(blocks.size()); }
    bool is_trivial() const { return size() == 1 || size() == degree; }
};

class Permutation;
class PermGroup;

// Every generator maps blocks onto blocks.
bool is_invariant_partition(const Partition& partition, const PermGroup& group);

} // namespace semireg
