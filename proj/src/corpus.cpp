#include "l1k/corpus.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "l1k/modal_k.hpp"
#include "l1k/tableau.hpp"
#include "l1k/translate.hpp"

namespace l1k {

std::vector<NameVar> default_name_vars(int count) {
    if (count < 1 || count > 26)
        throw Error("name variable count must be in 1..26");
    std::vector<NameVar> out;
    for (int i = 0; i < count; ++i)
        out.push_back(NameVar{std::string(1, static_cast<char>('a' + i))});
    return out;
}

std::vector<L1Formula> enumerate_l1(const std::vector<NameVar>& vars,
                                    int max_size) {
    if (max_size < 1) return {};
    // by_size[s] holds every formula of exact AST size s+1.
    std::vector<std::vector<L1Formula>> by_size(max_size);
    for (const auto& a : vars)
        for (const auto& b : vars)
            by_size[0].push_back(L1Formula::eps(a, b));
    for (int size = 2; size <= max_size; ++size) {
        auto& layer = by_size[size - 1];
        for (const auto& f : by_size[size - 2])
            layer.push_back(L1Formula::neg(f));
        for (int left = 1; left + 1 < size; ++left) {
            int right = size - 1 - left;
            for (const auto& l : by_size[left - 1])
                for (const auto& r : by_size[right - 1])
                    layer.push_back(L1Formula::disj(l, r));
        }
    }
    std::vector<L1Formula> out;
    for (auto& layer : by_size) {
        std::sort(layer.begin(), layer.end());
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

namespace {

// Bounded draw that does not depend on std::uniform_int_distribution, whose
// output differs across standard libraries.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
    return rng() % bound;
}

L1Formula random_l1(std::mt19937_64& rng, const std::vector<NameVar>& vars,
                    int budget) {
    if (budget >= 3 && draw(rng, 3) == 0) {
        int left = 1 + static_cast<int>(draw(rng, budget - 2));
        return L1Formula::disj(random_l1(rng, vars, left),
                               random_l1(rng, vars, budget - 1 - left));
    }
    if (budget >= 2 && draw(rng, 2) == 0)
        return L1Formula::neg(random_l1(rng, vars, budget - 1));
    const NameVar& a = vars[draw(rng, vars.size())];
    const NameVar& b = vars[draw(rng, vars.size())];
    return L1Formula::eps(a, b);
}

ModalFormula random_prop(std::mt19937_64& rng,
                         const std::vector<std::string>& vars, int budget) {
    if (budget >= 3 && draw(rng, 3) == 0) {
        int left = 1 + static_cast<int>(draw(rng, budget - 2));
        return ModalFormula::disj(random_prop(rng, vars, left),
                                  random_prop(rng, vars, budget - 1 - left));
    }
    if (budget >= 2 && draw(rng, 2) == 0)
        return ModalFormula::neg(random_prop(rng, vars, budget - 1));
    return ModalFormula::var(vars[draw(rng, vars.size())]);
}

ModalFormula random_depth1(std::mt19937_64& rng,
                           const std::vector<std::string>& vars, int budget) {
    if (budget >= 3 && draw(rng, 3) == 0) {
        int left = 1 + static_cast<int>(draw(rng, budget - 2));
        return ModalFormula::disj(random_depth1(rng, vars, left),
                                  random_depth1(rng, vars, budget - 1 - left));
    }
    if (budget >= 2) {
        switch (draw(rng, 3)) {
            case 0:
                return ModalFormula::neg(random_depth1(rng, vars, budget - 1));
            case 1:
                return ModalFormula::box(random_prop(rng, vars, budget - 1));
            default:
                break;
        }
    }
    return ModalFormula::var(vars[draw(rng, vars.size())]);
}

}  // namespace

std::vector<L1Formula> sample_l1(const std::vector<NameVar>& vars, int max_size,
                                 std::uint64_t seed, int count) {
    std::mt19937_64 rng(seed);
    std::vector<L1Formula> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) {
        int budget = 1 + static_cast<int>(draw(rng, max_size));
        out.push_back(random_l1(rng, vars, budget));
    }
    return out;
}

std::vector<ModalFormula> sample_modal_depth1(int var_count, int max_size,
                                              std::uint64_t seed, int count) {
    std::vector<std::string> vars;
    for (int i = 0; i < var_count; ++i)
        vars.push_back(std::string(1, static_cast<char>('p' + i)));
    std::mt19937_64 rng(seed);
    std::vector<ModalFormula> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) {
        int budget = 1 + static_cast<int>(draw(rng, max_size));
        out.push_back(random_depth1(rng, vars, budget));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Round trip
// ---------------------------------------------------------------------------

namespace {

// One formula's check; shared by both scan paths.
void check_one(const std::vector<L1Formula>& corpus, std::size_t i,
               std::vector<std::uint8_t>& provable,
               std::vector<std::uint8_t>& valid) {
    const L1Formula& f = corpus[i];
    provable[i] = is_provable_l1(f) ? 1 : 0;
    valid[i] = is_valid_k(blass(f)).valid ? 1 : 0;
}

RoundtripReport assemble(const std::vector<L1Formula>& corpus,
                         const std::vector<std::uint8_t>& provable,
                         const std::vector<std::uint8_t>& valid) {
    RoundtripReport report;
    report.checked = corpus.size();
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        if (provable[i]) ++report.provable;
        if (provable[i] != valid[i])
            report.mismatches.push_back(
                {i, corpus[i], provable[i] != 0, valid[i] != 0});
    }
    return report;
}

}  // namespace

RoundtripReport roundtrip_serial(const std::vector<L1Formula>& corpus) {
    std::vector<std::uint8_t> provable(corpus.size()), valid(corpus.size());
    for (std::size_t i = 0; i < corpus.size(); ++i)
        check_one(corpus, i, provable, valid);
    return assemble(corpus, provable, valid);
}

RoundtripReport roundtrip_parallel(const std::vector<L1Formula>& corpus,
                                   int threads) {
    std::vector<std::uint8_t> provable(corpus.size()), valid(corpus.size());
#ifdef _OPENMP
    if (threads > 0) {
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads)
        for (long i = 0; i < static_cast<long>(corpus.size()); ++i)
            check_one(corpus, static_cast<std::size_t>(i), provable, valid);
    } else {
#pragma omp parallel for schedule(dynamic, 16)
        for (long i = 0; i < static_cast<long>(corpus.size()); ++i)
            check_one(corpus, static_cast<std::size_t>(i), provable, valid);
    }
#else
    (void)threads;
    for (std::size_t i = 0; i < corpus.size(); ++i)
        check_one(corpus, i, provable, valid);
#endif
    return assemble(corpus, provable, valid);
}

}  // namespace l1k
