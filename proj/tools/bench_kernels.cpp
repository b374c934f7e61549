// Compares the memoized OpenMP all-pairs coefficient extraction against the
// serial per-pair reference on a mid-size instance. Not part of the test
// suite; run manually.

#include <chrono>
#include <iostream>

#include "schub/diagonal.hpp"

using namespace schub;
using Clock = std::chrono::steady_clock;

static double secs(Clock::time_point a, Clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

int main(int argc, char** argv) {
    std::string system = argc > 1 ? argv[1] : "C3";
    std::string formula = argc > 2 ? argv[2] : "deconciniC";

    RootSystem parsed = RootSystem::parse(system);
    WeylGroup W(parsed);
    DiagonalCandidate cand = build_candidate(system, formula, &W);
    const RootSystem& rs = parsed;
    std::cout << system << " " << formula << ": |W| = " << W.size() << ", "
              << cand.poly.term_count() << " terms, degree " << cand.poly.degree()
              << "\n";

    auto t0 = Clock::now();
    auto parallel = extract_all_pair_coefficients(rs, W, cand.poly, true);
    auto t1 = Clock::now();
    auto memo_serial = extract_all_pair_coefficients(rs, W, cand.poly, false);
    auto t2 = Clock::now();

    // Direct word-by-word reference on a sample of pairs (the full table is
    // quadratic in |W| and too slow to be a useful baseline beyond a sample).
    size_t sample = 0;
    auto t3 = Clock::now();
    for (size_t u = 0; u < W.size(); u += 7)
        for (size_t v = 0; v < W.size(); v += 11) {
            if (W[u].length + W[v].length != cand.poly.degree()) continue;
            Rat ref = extract_pair_coefficient(rs, W, cand.poly,
                                               static_cast<int>(u),
                                               static_cast<int>(v));
            auto it = parallel.find({static_cast<int>(u), static_cast<int>(v)});
            Rat got = it == parallel.end() ? Rat(0) : it->second;
            if (ref != got) {
                std::cout << "MISMATCH at (" << u << ", " << v << ")\n";
                return 1;
            }
            ++sample;
        }
    auto t4 = Clock::now();

    if (parallel != memo_serial) {
        std::cout << "MISMATCH between parallel and serial memoized tables\n";
        return 1;
    }

    std::cout << "memoized parallel : " << secs(t0, t1) << " s\n"
              << "memoized serial   : " << secs(t1, t2) << " s\n"
              << "direct reference  : " << secs(t3, t4) << " s (" << sample
              << " sampled pairs)\n"
              << "tables agree on all " << parallel.size() << " pairs\n";
    return 0;
}
