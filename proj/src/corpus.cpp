#include "semireg/corpus.hpp"

#include <numeric>
#include <set>

#include "semireg/errors.hpp"
#include "semireg/structure.hpp"

namespace semireg {

PermGroup symmetric_group(int n) {
    require(n >= 1, ErrorKind::Precondition, "symmetric group needs n >= 1");
    if (n == 1) return PermGroup(1);
    std::vector<int> swap01(n), cycle(n);
    std::iota(swap01.begin(), swap01.end(), 0);
    std::swap(swap01[0], swap01[1]);
    for (int i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
    std::vector<Permutation> gens{Permutation::from_images(swap01)};
    if (n > 2) gens.push_back(Permutation::from_images(cycle));
    return PermGroup(n, std::move(gens));
}

PermGroup paley_affine_group(int q) {
    require(is_prime(static_cast<std::uint64_t>(q)) && q % 4 == 1, ErrorKind::Precondition,
            "paley group requires a prime q with q = 1 (mod 4)");
    // smallest primitive root; its square generates the squares
    int root = -1;
    for (int cand = 2; cand < q && root == -1; ++cand) {
        int x = 1;
        bool primitive = true;
        for (int e = 1; e < q - 1 && primitive; ++e) {
            x = static_cast<int>(1LL * x * cand % q);
            if (x == 1) primitive = false;
        }
        x = static_cast<int>(1LL * x * cand % q);
        if (primitive && x == 1) root = cand;
    }
    require(root != -1, ErrorKind::InvariantViolation, "no primitive root found");
    int s2 = static_cast<int>(1LL * root * root % q);

    std::vector<int> add1(q), mul(q);
    for (int x = 0; x < q; ++x) {
        add1[x] = (x + 1) % q;
        mul[x] = static_cast<int>(1LL * s2 * x % q);
    }
    return PermGroup(q, {Permutation::from_images(add1), Permutation::from_images(mul)});
}

namespace {

Permutation blowup_rotation(int k, int m) {
    std::vector<int> img(k * m);
    for (int i = 0; i < k; ++i)
        for (int x = 0; x < m; ++x) img[i * m + x] = ((i + 1) % k) * m + x;
    return Permutation::from_images(std::move(img));
}

Permutation blowup_reflection(int k, int m) {
    std::vector<int> img(k * m);
    for (int i = 0; i < k; ++i)
        for (int x = 0; x < m; ++x) img[i * m + x] = ((k - i) % k) * m + x;
    return Permutation::from_images(std::move(img));
}

std::vector<Permutation> fiber0_symmetric_gens(int k, int m) {
    std::vector<Permutation> gens;
    const int n = k * m;
    if (m >= 2) {
        std::vector<int> swap01(n);
        std::iota(swap01.begin(), swap01.end(), 0);
        std::swap(swap01[0], swap01[1]);
        gens.push_back(Permutation::from_images(std::move(swap01)));
    }
    if (m >= 3) {
        std::vector<int> cyc(n);
        std::iota(cyc.begin(), cyc.end(), 0);
        for (int x = 0; x < m; ++x) cyc[x] = (x + 1) % m;
        gens.push_back(Permutation::from_images(std::move(cyc)));
    }
    return gens;
}

} // namespace

PermGroup blowup_wreath_group(int k, int m) {
    require(k >= 3 && m >= 1, ErrorKind::Precondition, "blowup group needs k >= 3, m >= 1");
    auto gens = fiber0_symmetric_gens(k, m);
    gens.push_back(blowup_rotation(k, m));
    gens.push_back(blowup_reflection(k, m));
    return PermGroup(k * m, std::move(gens));
}

PermGroup blowup_rotation_group(int k, int m) {
    require(k >= 3 && m >= 1, ErrorKind::Precondition, "blowup group needs k >= 3, m >= 1");
    auto gens = fiber0_symmetric_gens(k, m);
    gens.push_back(blowup_rotation(k, m));
    return PermGroup(k * m, std::move(gens));
}

CorpusPair build_family(const std::string& spec) {
    auto colon = spec.find(':');
    require(colon != std::string::npos, ErrorKind::UnknownFamily,
            "family spec must look like name:params, got '" + spec + "'");
    std::string family = spec.substr(0, colon);
    std::string params = spec.substr(colon + 1);

    auto parse_int = [&](const std::string& text) {
        try {
            std::size_t used = 0;
            int value = std::stoi(text, &used);
            require(used == text.size() && value > 0, ErrorKind::UnknownFamily,
                    "bad numeric parameter '" + text + "'");
            return value;
        } catch (const Error&) {
            throw;
        } catch (...) {
            fail(ErrorKind::UnknownFamily, "bad numeric parameter '" + text + "'");
        }
    };

    if (family == "complete") {
        int n = parse_int(params);
        return {spec, complete_graph(n), symmetric_group(n)};
    }
    if (family == "paley") {
        int q = parse_int(params);
        return {spec, paley(q), paley_affine_group(q)};
    }
    if (family == "blowup") {
        require(!params.empty() && params.front() == 'c', ErrorKind::UnknownFamily,
                "blowup parameters look like c<k>,<m> or c<k>x<m>");
        auto sep = params.find_first_of(",x", 1);
        require(sep != std::string::npos, ErrorKind::UnknownFamily,
                "blowup parameters look like c<k>,<m> or c<k>x<m>");
        int k = parse_int(params.substr(1, sep - 1));
        int m = parse_int(params.substr(sep + 1));
        require(k >= 3, ErrorKind::UnknownFamily, "blowup base cycle needs k >= 3");
        Graph base = circulant(k, {1, k - 1});
        return {spec, lexicographic_blowup(base, m), blowup_wreath_group(k, m)};
    }
    if (family == "circulant") {
        std::vector<int> numbers;
        std::size_t pos = 0;
        while (pos <= params.size()) {
            auto comma = params.find(',', pos);
            if (comma == std::string::npos) comma = params.size();
            numbers.push_back(parse_int(params.substr(pos, comma - pos)));
            pos = comma + 1;
        }
        require(numbers.size() >= 2, ErrorKind::UnknownFamily,
                "circulant needs a vertex count and at least one offset");
        int n = numbers.front();
        std::set<int> offsets;
        for (std::size_t i = 1; i < numbers.size(); ++i) {
            offsets.insert(numbers[i]);
            offsets.insert((n - numbers[i]) % n);
        }
        Graph graph = circulant(n, offsets);
        // A generic circulant's rotation group is rarely arc-transitive; use
        // the full automorphism group, which caps the vertex count.
        PermGroup aut = tiny_automorphism_group(graph);
        return {spec, std::move(graph), std::move(aut)};
    }
    fail(ErrorKind::UnknownFamily, "unknown family '" + family + "'");
}

std::vector<CorpusPair> corpus_8valent() {
    return {
        build_family("complete:9"),   build_family("paley:17"),
        build_family("blowup:c3,4"),  build_family("blowup:c4,4"),
        build_family("blowup:c5,4"),  build_family("blowup:c6,4"),
    };
}

} // namespace semireg
