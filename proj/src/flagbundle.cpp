#include "schub/flagbundle.hpp"

#include <algorithm>
#include <stdexcept>

namespace schub {

FlagType FlagType::make(int n, std::vector<int> d) {
    if (n <= 0) throw std::invalid_argument("flag: n must be positive");
    if (d.empty() || d.back() != n) {
        if (!d.empty() && d.back() > n) throw std::invalid_argument("flag: d exceeds n");
        d.push_back(n);  // d_k = n implied if omitted
    }
    int prev = 0;
    for (int di : d) {
        if (di <= prev) throw std::invalid_argument("flag: ranks must strictly increase");
        prev = di;
    }
    return {n, std::move(d)};
}

FlagType FlagType::complete(int n) {
    std::vector<int> d(n);
    for (int i = 0; i < n; ++i) d[i] = i + 1;
    return {n, std::move(d)};
}

long dim_grassmann(long dim_x, int d, int n) {
    if (d <= 0 || d >= n) throw std::invalid_argument("dim_grassmann: need 0 < d < n");
    return dim_x + static_cast<long>(d) * (n - d);
}

long dim_flag(long dim_x, const FlagType& flag) {
    long s = dim_x;
    int prev = 0;
    for (int di : flag.d) {
        s += static_cast<long>(di - prev) * (flag.n - di);
        prev = di;
    }
    return s;
}

long dim_flag_tower(long dim_x, const FlagType& flag) {
    // Fl = G_{n-d_{k-1}}(Q_{k-1}) -> ... -> G_{d_1}(E) -> X: each step is a
    // Grassmann bundle of (d_i - d_{i-1})-planes in an (n - d_{i-1})-bundle.
    long s = dim_x;
    int prev = 0;
    for (int di : flag.d) {
        int step = di - prev, ambient = flag.n - prev;
        if (step < ambient) s = dim_grassmann(s, step, ambient);
        prev = di;
    }
    return s;
}

long rank_h(const FlagType& flag) {
    const auto& d = flag.d;
    int k = flag.steps(), n = flag.n;
    long lhs = 0;
    for (int i = 0; i < k - 1; ++i) lhs += static_cast<long>(d[i]) * (n - d[i]);
    for (int i = 0; i < k - 2; ++i) lhs -= static_cast<long>(d[i]) * (n - d[i + 1]);
    long rhs = dim_flag(0, flag);
    if (lhs != rhs) throw std::logic_error("rank identity violated");
    return rhs;
}

long point_bundle_rank_check(long dim_x, int d, int n) {
    long via_bundle = dim_x + static_cast<long>(d) * (n - d);  // rank pi*G + d rank Q
    if (via_bundle != dim_grassmann(dim_x, d, n))
        throw std::logic_error("point bundle rank mismatch");
    return via_bundle;
}

std::vector<Poly> hom_sum_roots(const FlagType& flag, int upper) {
    int n = flag.n, k = flag.steps();
    int nv = 2 * n;
    std::vector<Poly> roots;
    for (int i = 0; i + 1 + upper < k; ++i) {
        int di = flag.d[i];
        int dj = flag.d[i + upper];  // target quotient Q_{i+upper}
        for (int a = 1; a <= di; ++a)
            for (int b = dj + 1; b <= n; ++b)
                roots.push_back(Poly::variable(nv, a - 1) -
                                Poly::variable(nv, n + b - 1));
    }
    return roots;
}

std::vector<Poly> total_chern(const std::vector<Poly>& roots, int nvars, int trunc) {
    std::vector<Poly> c(trunc + 1, Poly::zero(nvars));
    c[0] = Poly::one(nvars);
    for (const auto& r : roots)
        for (int d = trunc; d >= 1; --d)
            c[d] = c[d] + c[d - 1] * r;
    return c;
}

std::vector<Poly> series_inverse(const std::vector<Poly>& series) {
    int trunc = static_cast<int>(series.size()) - 1;
    int nv = series[0].nvars();
    if (series[0] != Poly::one(nv))
        throw std::invalid_argument("series_inverse: constant term must be 1");
    std::vector<Poly> inv(trunc + 1, Poly::zero(nv));
    inv[0] = Poly::one(nv);
    for (int d = 1; d <= trunc; ++d)
        for (int j = 1; j <= d; ++j)
            inv[d] = inv[d] - series[j] * inv[d - j];
    return inv;
}

std::vector<Poly> chern_h(const ChernModel& model) {
    int rank = static_cast<int>(rank_h(model.flag));
    int trunc = std::max(model.truncation, rank);
    int nv = 2 * model.flag.n;
    auto num = total_chern(hom_sum_roots(model.flag, 0), nv, trunc);
    auto den = total_chern(hom_sum_roots(model.flag, 1), nv, trunc);
    auto inv = series_inverse(den);
    std::vector<Poly> out(trunc + 1, Poly::zero(nv));
    for (int d = 0; d <= trunc; ++d)
        for (int j = 0; j <= d; ++j)
            out[d] = out[d] + num[j] * inv[d - j];
    return out;
}

Poly typec_point_bundle_top_chern(int n) {
    if (n < 2 || n > 3)
        throw std::invalid_argument("typec_point_bundle_top_chern: n out of range");
    // The subquotient line bundles are labeled opposite to the coordinate
    // characters: L_i carries x_{n+1-i}, so L_i^{2i-1} contributes
    // x_{n+1-i}^{2i-1} and the product is x1^{2n-1} x2^{2n-3} ... x_n.
    // Only this orientation extracts to +1 against d_{w0} in the realization
    // alpha_i = x_i - x_{i+1}, alpha_n = 2 x_n.
    Poly p = Poly::one(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < 2 * (n - i) - 1; ++k) p = p * Poly::variable(n, i);
    return p;
}

std::vector<FlagType> all_flags(int n) {
    std::vector<FlagType> out;
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
        std::vector<int> d;
        for (int i = 1; i < n; ++i)
            if (mask & (1u << (i - 1))) d.push_back(i);
        d.push_back(n);
        out.push_back(FlagType{n, std::move(d)});
    }
    return out;
}

}  // namespace schub
