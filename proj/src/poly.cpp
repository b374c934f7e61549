#include "schub/poly.hpp"

#include <algorithm>

namespace schub {

Poly Poly::operator*(const Poly& q) const {
    check_vars(q);
    Poly r(nvars_);
    if (terms_.empty() || q.terms_.empty()) return r;
    // Iterate over the smaller factor.
    const Poly& a = term_count() <= q.term_count() ? *this : q;
    const Poly& b = term_count() <= q.term_count() ? q : *this;
    Exp e(nvars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

namespace {

// A substitution is a signed permutation when every image is +-1 times a
// single variable; Weyl actions in types A-D are of this shape and get a
// fast exponent-remap path.
bool signed_permutation(const std::vector<RatVec>& images,
                        std::vector<int>& target, std::vector<int>& sign) {
    const size_t n = images.size();
    target.assign(n, -1);
    sign.assign(n, 1);
    for (size_t i = 0; i < n; ++i) {
        int nz = -1;
        for (size_t j = 0; j < images[i].size(); ++j) {
            if (images[i][j] == 0) continue;
            if (nz >= 0 || (images[i][j] != 1 && images[i][j] != -1)) return false;
            nz = static_cast<int>(j);
            sign[i] = images[i][j] == 1 ? 1 : -1;
        }
        if (nz < 0) return false;
        target[i] = nz;
    }
    return true;
}

}  // namespace

Poly Poly::substitute_linear(const std::vector<RatVec>& images) const {
    if (static_cast<int>(images.size()) != nvars_)
        throw std::invalid_argument("substitute_linear: one image per variable required");
    int out = nvars_ == 0 ? 0 : static_cast<int>(images[0].size());
    for (const auto& im : images)
        if (static_cast<int>(im.size()) != out)
            throw std::invalid_argument("substitute_linear: ragged image dimensions");

    std::vector<int> target, sign;
    if (out >= nvars_ && signed_permutation(images, target, sign)) {
        Poly r(out);
        Exp e(out);
        for (const auto& [ea, c] : terms_) {
            std::fill(e.begin(), e.end(), 0);
            int s = 1;
            for (int i = 0; i < nvars_; ++i) {
                e[target[i]] += ea[i];
                if (sign[i] < 0 && (ea[i] & 1)) s = -s;
            }
            r.add_term(e, s > 0 ? c : -c);
        }
        return r;
    }

    std::vector<Poly> lin;
    lin.reserve(nvars_);
    for (const auto& im : images) lin.push_back(Poly::linear(im));

    Poly r(out);
    for (const auto& [ea, c] : terms_) {
        Poly t = Poly::constant(out, c);
        for (int i = 0; i < nvars_; ++i)
            for (int k = 0; k < ea[i]; ++k) t = t * lin[i];
        r = r + t;
    }
    return r;
}

Poly Poly::exact_divide(const Poly& q) const {
    check_vars(q);
    if (q.is_zero()) throw std::domain_error("division by zero polynomial");
    Poly rem = *this;
    Poly quot(nvars_);
    const auto& [qe, qc] = *q.terms_.rbegin();
    Exp de(nvars_);
    while (!rem.is_zero()) {
        const auto& [re, rc] = *rem.terms_.rbegin();
        for (int i = 0; i < nvars_; ++i) {
            de[i] = re[i] - qe[i];
            if (de[i] < 0) throw std::domain_error("inexact division");
        }
        Rat dc = rc / qc;
        quot.add_term(de, dc);
        Poly t(nvars_);
        t.add_term(de, dc);
        rem = rem - t * q;
    }
    return quot;
}

Rat Poly::evaluate(const RatVec& point) const {
    if (static_cast<int>(point.size()) != nvars_)
        throw std::invalid_argument("evaluate: dimension mismatch");
    Rat acc(0);
    for (const auto& [e, c] : terms_) {
        Rat t = c;
        for (int i = 0; i < nvars_; ++i)
            for (int k = 0; k < e[i]; ++k) t *= point[i];
        acc += t;
    }
    return acc;
}

Poly elementary_symmetric(int nvars, int k, const std::vector<int>& vars) {
    if (k < 0) throw std::invalid_argument("elementary_symmetric: negative k");
    if (k == 0) return Poly::one(nvars);
    if (k > static_cast<int>(vars.size())) return Poly::zero(nvars);
    // dp[j] = e_j of the prefix processed so far.
    std::vector<Poly> dp(k + 1, Poly::zero(nvars));
    dp[0] = Poly::one(nvars);
    for (size_t idx = 0; idx < vars.size(); ++idx) {
        Poly xv = Poly::variable(nvars, vars[idx]);
        for (int j = std::min<int>(k, static_cast<int>(idx) + 1); j >= 1; --j)
            dp[j] = dp[j] + dp[j - 1] * xv;
    }
    return dp[k];
}

Poly diagonal_substitute(const Poly& p) {
    if (p.nvars() % 2 != 0)
        throw std::invalid_argument("diagonal_substitute: odd variable count");
    int m = p.nvars() / 2;
    Poly r(m);
    Exp e(m);
    for (const auto& [ea, c] : p.terms()) {
        for (int i = 0; i < m; ++i) e[i] = ea[i] + ea[m + i];
        r.add_term(e, c);
    }
    return r;
}

Poly embed_block(const Poly& p, int block) {
    int m = p.nvars();
    Poly r(2 * m);
    Exp e(2 * m, 0);
    int off = block == 0 ? 0 : m;
    for (const auto& [ea, c] : p.terms()) {
        std::fill(e.begin(), e.end(), 0);
        for (int i = 0; i < m; ++i) e[off + i] = ea[i];
        r.add_term(e, c);
    }
    return r;
}

Poly pow(const Poly& p, int k) {
    Poly r = Poly::one(p.nvars());
    for (int i = 0; i < k; ++i) r = r * p;
    return r;
}

}  // namespace schub
