#include "semireg/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "semireg/errors.hpp"

namespace semireg {

Permutation::Permutation(int degree) : images_(degree) {
    std::iota(images_.begin(), images_.end(), 0);
}

Permutation Permutation::from_images(std::vector<int> images) {
    const int n = static_cast<int>(images.size());
    std::vector<char> seen(n, 0);
    for (int x : images) {
        require(x >= 0 && x < n && !seen[x], ErrorKind::Parse,
                "image table is not a bijection on {0,...," + std::to_string(n - 1) + "}");
        seen[x] = 1;
    }
    Permutation p;
    p.images_ = std::move(images);
    return p;
}

bool Permutation::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if (images_[i] != i) return false;
    return true;
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(images_.size());
    for (int i = 0; i < degree(); ++i) inv[images_[i]] = i;
    Permutation p;
    p.images_ = std::move(inv);
    return p;
}

Permutation compose(const Permutation& a, const Permutation& b) {
    require(a.degree() == b.degree(), ErrorKind::DegreeMismatch,
            "compose: degrees " + std::to_string(a.degree()) + " and " + std::to_string(b.degree()));
    std::vector<int> img(a.degree());
    for (int i = 0; i < a.degree(); ++i) img[i] = b[a[i]];
    return Permutation::from_images(std::move(img));
}

Permutation conjugate(const Permutation& p, const Permutation& g) {
    // (g^-1 p g)(x) = g(p(g^-1(x))) under left-to-right composition.
    return compose(compose(g.inverse(), p), g);
}

Permutation commutator(const Permutation& a, const Permutation& b) {
    return compose(compose(a.inverse(), b.inverse()), compose(a, b));
}

Permutation Permutation::power(long long exponent) const {
    Permutation base = exponent >= 0 ? *this : inverse();
    unsigned long long e = exponent >= 0 ? static_cast<unsigned long long>(exponent)
                                         : static_cast<unsigned long long>(-exponent);
    Permutation acc(degree());
    while (e > 0) {
        if (e & 1) acc = compose(acc, base);
        base = compose(base, base);
        e >>= 1;
    }
    return acc;
}

std::vector<int> Permutation::cycle_lengths() const {
    std::vector<int> lengths;
    std::vector<char> seen(images_.size(), 0);
    for (int i = 0; i < degree(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (int j = i; !seen[j]; j = images_[j]) {
            seen[j] = 1;
            ++len;
        }
        lengths.push_back(len);
    }
    return lengths;
}

std::uint64_t Permutation::order() const {
    std::uint64_t ord = 1;
    for (int len : cycle_lengths())
        ord = std::lcm(ord, static_cast<std::uint64_t>(len));
    return ord;
}

std::optional<int> Permutation::uniform_cycle_length() const {
    if (degree() == 0) return 1;
    std::optional<int> common;
    std::vector<char> seen(images_.size(), 0);
    for (int i = 0; i < degree(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (int j = i; !seen[j]; j = images_[j]) {
            seen[j] = 1;
            ++len;
        }
        if (common && *common != len) return std::nullopt;
        common = len;
    }
    return common;
}

bool Permutation::is_semiregular() const {
    return uniform_cycle_length().has_value();
}

std::string Permutation::to_cycle_string() const {
    std::ostringstream out;
    std::vector<char> seen(images_.size(), 0);
    bool any = false;
    for (int i = 0; i < degree(); ++i) {
        if (seen[i] || images_[i] == i) {
            seen[i] = 1;
            continue;
        }
        any = true;
        out << '(';
        bool first = true;
        for (int j = i; !seen[j]; j = images_[j]) {
            seen[j] = 1;
            if (!first) out << ',';
            out << (j + 1);
            first = false;
        }
        out << ')';
    }
    if (!any) return "()";
    return out.str();
}

Permutation Permutation::parse_cycles(const std::string& text, int degree) {
    std::vector<int> img(degree);
    std::iota(img.begin(), img.end(), 0);
    std::vector<char> moved(degree, 0);

    std::size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip_ws();
    bool saw_cycle = false;
    while (i < text.size()) {
        require(text[i] == '(', ErrorKind::Parse, "expected '(' in cycle notation: " + text);
        ++i;
        std::vector<int> cycle;
        skip_ws();
        while (i < text.size() && text[i] != ')') {
            std::size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            require(i > start, ErrorKind::Parse, "expected point number in cycle notation: " + text);
            long value = std::stol(text.substr(start, i - start));
            require(value >= 1 && value <= degree, ErrorKind::Parse,
                    "point " + std::to_string(value) + " out of range 1.." + std::to_string(degree));
            int point = static_cast<int>(value - 1);
            require(!moved[point], ErrorKind::Parse,
                    "point " + std::to_string(value) + " repeated in cycle notation");
            moved[point] = 1;
            cycle.push_back(point);
            skip_ws();
            if (i < text.size() && (text[i] == ',' || text[i] == ' ')) {
                ++i;
                skip_ws();
            }
        }
        require(i < text.size() && text[i] == ')', ErrorKind::Parse, "unterminated cycle: " + text);
        ++i;
        skip_ws();
        saw_cycle = true;
        for (std::size_t k = 0; k < cycle.size(); ++k)
            img[cycle[k]] = cycle[(k + 1) % cycle.size()];
    }
    require(saw_cycle, ErrorKind::Parse, "empty permutation string (use \"()\" for the identity)");
    return from_images(std::move(img));
}

std::size_t PermutationHash::operator()(const Permutation& p) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : p.images()) {
        h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
        h *= 1099511628211ull;
    }
    return h;
}

} // namespace semireg
