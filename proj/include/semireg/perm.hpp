#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace semireg {

// A permutation of {0,...,degree-1} stored as an image table.
// Composition is left-to-right: compose(a, b) applies a first, then b.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(int degree); // identity

    // Validates that `images` is a bijection on {0,...,n-1}.
    static Permutation from_images(std::vector<int> images);

    int degree() const { return static_cast<int>(images_.size()); }
    int operator[](int point) const { return images_[point]; }
    const std::vector<int>& images() const { return images_; }

    bool is_identity() const;
    Permutation inverse() const;
    Permutation power(long long exponent) const;
    std::uint64_t order() const;

    // Cycle lengths in the order cycles are first met from point 0 upward,
    // fixed points included.
    std::vector<int> cycle_lengths() const;

    // All cycles equal length (fixed points count as length-1 cycles).
    bool is_semiregular() const;
    // The common cycle length when semiregular, otherwise nullopt.
    std::optional<int> uniform_cycle_length() const;

    bool operator==(const Permutation& other) const { return images_ == other.images_; }
    bool operator!=(const Permutation& other) const { return images_ != other.images_; }
    bool operator<(const Permutation& other) const { return images_ < other.images_; }

    // Disjoint-cycle notation with 1-indexed points, e.g. "(1,2,3)(4,5)".
    // The identity renders as "()".
    std::string to_cycle_string() const;
    static Permutation parse_cycles(const std::string& text, int degree);

private:
    std::vector<int> images_;
};

// result(i) = b(a(i)); a is applied first.
Permutation compose(const Permutation& a, const Permutation& b);

// g^-1 * p * g, i.e. p with points relabeled through g.
Permutation conjugate(const Permutation& p, const Permutation& g);

// [a, b] = a^-1 b^-1 a b.
Permutation commutator(const Permutation& a, const Permutation& b);

struct PermutationHash {
    std::size_t operator()(const Permutation& p) const;
};

} // namespace semireg
