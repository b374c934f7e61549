#pragma once

#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "schub/rational.hpp"

namespace schub {

using Exp = std::vector<int>;

inline int total_degree(const Exp& e) {
    return std::accumulate(e.begin(), e.end(), 0);
}

// Graded-lexicographic order: lower total degree first, then lex.
// Fixes the iteration order used for serialization and leading terms.
struct GradedLexLess {
    bool operator()(const Exp& a, const Exp& b) const {
        int da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }
};

// Sparse multivariate polynomial with exact rational coefficients.
// Invariant: no stored coefficient is zero; every exponent vector has
// length nvars(). Immutable in practice: all operations return new values.
class Poly {
public:
    using TermMap = std::map<Exp, Rat, GradedLexLess>;

    explicit Poly(int nvars) : nvars_(nvars) {}

    static Poly zero(int nvars) { return Poly(nvars); }

    static Poly constant(int nvars, const Rat& c) {
        Poly p(nvars);
        if (c != 0) p.terms_[Exp(nvars, 0)] = c;
        return p;
    }

    static Poly one(int nvars) { return constant(nvars, 1); }

    static Poly variable(int nvars, int i) {
        Poly p(nvars);
        Exp e(nvars, 0);
        e[i] = 1;
        p.terms_[e] = 1;
        return p;
    }

    // Linear form sum_i coeffs[i] * x_i.
    static Poly linear(const RatVec& coeffs) {
        Poly p(static_cast<int>(coeffs.size()));
        for (int i = 0; i < p.nvars_; ++i) {
            if (coeffs[i] != 0) {
                Exp e(p.nvars_, 0);
                e[i] = 1;
                p.terms_[e] = coeffs[i];
            }
        }
        return p;
    }

    int nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    // Total degree; -1 for the zero polynomial.
    int degree() const {
        return terms_.empty() ? -1 : total_degree(terms_.rbegin()->first);
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        int d = total_degree(terms_.begin()->first);
        return total_degree(terms_.rbegin()->first) == d;
    }

    // Constant coefficient (the degree-0 term).
    Rat constant_term() const {
        auto it = terms_.find(Exp(nvars_, 0));
        return it == terms_.end() ? Rat(0) : it->second;
    }

    void add_term(const Exp& e, const Rat& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Poly operator-() const {
        Poly r(nvars_);
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }

    Poly operator+(const Poly& q) const {
        check_vars(q);
        Poly r = *this;
        for (const auto& [e, c] : q.terms_) r.add_term(e, c);
        return r;
    }

    Poly operator-(const Poly& q) const {
        check_vars(q);
        Poly r = *this;
        for (const auto& [e, c] : q.terms_) r.add_term(e, -c);
        return r;
    }

    Poly operator*(const Poly& q) const;

    Poly scale(const Rat& c) const {
        Poly r(nvars_);
        if (c == 0) return r;
        for (const auto& [e, co] : terms_) r.terms_[e] = co * c;
        return r;
    }

    bool operator==(const Poly& q) const {
        return nvars_ == q.nvars_ && terms_ == q.terms_;
    }
    bool operator!=(const Poly& q) const { return !(*this == q); }

    // Replaces variable i by the linear form images[i] (a coefficient vector
    // over the output variable set). All images must share one output length.
    Poly substitute_linear(const std::vector<RatVec>& images) const;

    // Exact quotient *this / q; throws std::domain_error on nonzero remainder.
    Poly exact_divide(const Poly& q) const;

    Rat evaluate(const RatVec& point) const;

    Poly homogeneous_part(int d) const {
        Poly r(nvars_);
        for (const auto& [e, c] : terms_)
            if (total_degree(e) == d) r.terms_[e] = c;
        return r;
    }

    // Drops every term whose total degree in the variable range [lo, hi)
    // exceeds maxdeg.
    Poly truncate_block_degree(int lo, int hi, int maxdeg) const {
        Poly r(nvars_);
        for (const auto& [e, c] : terms_) {
            int d = std::accumulate(e.begin() + lo, e.begin() + hi, 0);
            if (d <= maxdeg) r.terms_[e] = c;
        }
        return r;
    }

    int block_degree(int lo, int hi) const {
        int d = -1;
        for (const auto& [e, c] : terms_) {
            (void)c;
            d = std::max(d, std::accumulate(e.begin() + lo, e.begin() + hi, 0));
        }
        return d;
    }

private:
    void check_vars(const Poly& q) const {
        if (nvars_ != q.nvars_)
            throw std::invalid_argument("variable-count mismatch");
    }

    int nvars_;
    TermMap terms_;
};

// e_k over the given variable indices; e_0 = 1, 0 when k > #vars.
Poly elementary_symmetric(int nvars, int k, const std::vector<int>& vars);

// For a two-block ring with nvars = 2*m, substitutes y_i := x_i and returns
// an m-variable polynomial.
Poly diagonal_substitute(const Poly& p);

// Embeds an m-variable polynomial into a 2m-variable ring at the given block
// (0 = first block, 1 = second).
Poly embed_block(const Poly& p, int block);

Poly pow(const Poly& p, int k);

}  // namespace schub
