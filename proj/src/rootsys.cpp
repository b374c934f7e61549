#include "schub/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace schub {

std::string family_name(Family f) {
    switch (f) {
        case Family::A: return "A";
        case Family::B: return "B";
        case Family::C: return "C";
        case Family::D: return "D";
        case Family::G2: return "G";
    }
    return "?";
}

IMat identity_matrix(int n) {
    IMat m(n, std::vector<long>(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IMat mat_mul(const IMat& a, const IMat& b) {
    int n = static_cast<int>(a.size());
    IMat r(n, std::vector<long>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            long aik = a[i][k];
            if (aik == 0) continue;
            for (int j = 0; j < n; ++j) r[i][j] += aik * b[k][j];
        }
    return r;
}

RatVec mat_apply(const IMat& m, const RatVec& v) {
    int n = static_cast<int>(m.size());
    RatVec r(n, Rat(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (m[i][j] != 0) r[i] += Rat(m[i][j]) * v[j];
    return r;
}

IVec mat_apply(const IMat& m, const IVec& v) {
    int n = static_cast<int>(m.size());
    IVec r(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r[i] += m[i][j] * v[j];
    return r;
}

namespace {

IVec unit(int n, int i) {
    IVec v(n, 0);
    v[i] = 1;
    return v;
}

RatVec to_rat(const IVec& v) {
    RatVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
    return r;
}

}  // namespace

RootSystem RootSystem::build(Family family, int rank) {
    auto unsupported = [&]() -> void {
        throw std::invalid_argument("unsupported root system: " +
                                    family_name(family) + std::to_string(rank));
    };
    RootSystem rs;
    rs.family_ = family;
    rs.rank_ = rank;

    switch (family) {
        case Family::A: {
            if (rank < 1 || rank > 6) unsupported();
            int n = rank + 1;
            rs.dim_ = n;
            for (int i = 0; i < rank; ++i) {
                IVec a(n, 0);
                a[i] = 1;
                a[i + 1] = -1;
                rs.simple_roots_.push_back(a);
            }
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    IVec a(n, 0);
                    a[i] = 1;
                    a[j] = -1;
                    rs.positive_roots_.push_back(a);
                }
            // Partial sums; the true fundamental weights differ by multiples
            // of the invariant e_1(x), which dies under coefficient extraction.
            for (int i = 1; i <= rank; ++i) {
                RatVec w(n, Rat(0));
                for (int j = 0; j < i; ++j) w[j] = 1;
                rs.fundamental_weights_.push_back(w);
            }
            break;
        }
        case Family::B:
        case Family::C: {
            if (rank < 2 || rank > 5) unsupported();
            int n = rank;
            rs.dim_ = n;
            for (int i = 0; i + 1 < n; ++i) {
                IVec a(n, 0);
                a[i] = 1;
                a[i + 1] = -1;
                rs.simple_roots_.push_back(a);
            }
            {
                IVec a(n, 0);
                a[n - 1] = family == Family::B ? 1 : 2;
                rs.simple_roots_.push_back(a);
            }
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    IVec a(n, 0), b(n, 0);
                    a[i] = 1;
                    a[j] = -1;
                    b[i] = 1;
                    b[j] = 1;
                    rs.positive_roots_.push_back(a);
                    rs.positive_roots_.push_back(b);
                }
            for (int i = 0; i < n; ++i) {
                IVec a(n, 0);
                a[i] = family == Family::B ? 1 : 2;
                rs.positive_roots_.push_back(a);
            }
            for (int i = 1; i <= n; ++i) {
                RatVec w(n, Rat(0));
                for (int j = 0; j < i; ++j) w[j] = 1;
                if (family == Family::B && i == n)
                    for (auto& c : w) c /= 2;  // spin weight
                rs.fundamental_weights_.push_back(w);
            }
            break;
        }
        case Family::D: {
            if (rank < 4 || rank > 5) unsupported();
            int n = rank;
            rs.dim_ = n;
            for (int i = 0; i + 1 < n; ++i) {
                IVec a(n, 0);
                a[i] = 1;
                a[i + 1] = -1;
                rs.simple_roots_.push_back(a);
            }
            {
                IVec a(n, 0);
                a[n - 2] = 1;
                a[n - 1] = 1;
                rs.simple_roots_.push_back(a);
            }
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    IVec a(n, 0), b(n, 0);
                    a[i] = 1;
                    a[j] = -1;
                    b[i] = 1;
                    b[j] = 1;
                    rs.positive_roots_.push_back(a);
                    rs.positive_roots_.push_back(b);
                }
            for (int i = 1; i <= n - 2; ++i) {
                RatVec w(n, Rat(0));
                for (int j = 0; j < i; ++j) w[j] = 1;
                rs.fundamental_weights_.push_back(w);
            }
            {
                // Two half-integral spin weights.
                RatVec w1(n, Rat(1, 2)), w2(n, Rat(1, 2));
                w1[n - 1] = Rat(-1, 2);
                rs.fundamental_weights_.push_back(w1);
                rs.fundamental_weights_.push_back(w2);
            }
            break;
        }
        case Family::G2: {
            if (rank != 2) unsupported();
            rs.dim_ = 2;
            rs.simple_roots_ = {{1, 0}, {0, 1}};  // a1 short, a2 long
            rs.positive_roots_ = {{1, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {3, 2}};
            rs.fundamental_weights_ = {{Rat(2), Rat(1)}, {Rat(3), Rat(2)}};
            break;
        }
    }

    // Invariant form: Euclidean for A-D; G2 Gram fixed by (a1,a1)=2,
    // (a2,a2)=6, (a1,a2)=-3.
    if (family == Family::G2) {
        rs.gram_ = {{Rat(2), Rat(-3)}, {Rat(-3), Rat(6)}};
    } else {
        rs.gram_.assign(rs.dim_, RatVec(rs.dim_, Rat(0)));
        for (int i = 0; i < rs.dim_; ++i) rs.gram_[i][i] = 1;
    }

    for (int i = 0; i < rs.rank_; ++i)
        rs.simple_refl_.push_back(rs.reflection_matrix(rs.simple_roots_[i]));
    return rs;
}

RootSystem RootSystem::parse(const std::string& id) {
    if (id.size() < 2) throw std::invalid_argument("unsupported root system: " + id);
    char f = id[0];
    int rank = 0;
    try {
        rank = std::stoi(id.substr(1));
    } catch (...) {
        throw std::invalid_argument("unsupported root system: " + id);
    }
    switch (f) {
        case 'A': case 'a': return build(Family::A, rank);
        case 'B': case 'b': return build(Family::B, rank);
        case 'C': case 'c': return build(Family::C, rank);
        case 'D': case 'd': return build(Family::D, rank);
        case 'G': case 'g':
            if (rank == 2) return build(Family::G2, 2);
            break;
    }
    throw std::invalid_argument("unsupported root system: " + id);
}

std::string RootSystem::name() const {
    return family_name(family_) + std::to_string(rank_);
}

std::optional<RatVec> RootSystem::linear_relation() const {
    if (family_ == Family::A) return RatVec(dim_, Rat(1));  // e_1(x)
    return std::nullopt;
}

Rat RootSystem::coroot_pairing(const RatVec& v, const IVec& root) const {
    Rat num(0), den(0);
    RatVec rr = to_rat(root);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) {
            if (gram_[i][j] == 0) continue;
            num += v[i] * gram_[i][j] * rr[j];
            den += rr[i] * gram_[i][j] * rr[j];
        }
    return 2 * num / den;
}

IMat RootSystem::reflection_matrix(const IVec& root) const {
    IMat m(dim_, std::vector<long>(dim_, 0));
    for (int i = 0; i < dim_; ++i) {
        Rat c = coroot_pairing(to_rat(unit(dim_, i)), root);
        for (int j = 0; j < dim_; ++j) {
            Rat entry = Rat(i == j ? 1 : 0) - c * root[j];
            if (!is_integer(entry))
                throw std::logic_error("non-integral reflection matrix");
            m[j][i] = entry.get_num().get_si();  // column i = image of e_i
        }
    }
    return m;
}

bool RootSystem::is_root(const IVec& v) const {
    for (const auto& r : positive_roots_) {
        if (r == v) return true;
        IVec neg(r.size());
        for (size_t i = 0; i < r.size(); ++i) neg[i] = -r[i];
        if (neg == v) return true;
    }
    return false;
}

long RootSystem::cartan(int i, int j) const {
    Rat c = coroot_pairing(to_rat(simple_roots_[i]), simple_roots_[j]);
    return c.get_num().get_si();
}

Poly RootSystem::simple_root_poly(int i) const {
    return root_poly(simple_roots_[i]);
}

Poly RootSystem::root_poly(const IVec& root) const {
    return Poly::linear(to_rat(root));
}

std::optional<RatVec> RootSystem::in_simple_root_basis(const RatVec& v) const {
    // Solve sum_k c_k alpha_k = v by Gaussian elimination on the dim x rank
    // system; inconsistent -> nullopt.
    int rows = dim_, cols = rank_;
    std::vector<RatVec> aug(rows, RatVec(cols + 1, Rat(0)));
    for (int i = 0; i < rows; ++i) {
        for (int k = 0; k < cols; ++k) aug[i][k] = Rat(simple_roots_[k][i]);
        aug[i][cols] = v[i];
    }
    std::vector<int> pivot_col(rows, -1);
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (aug[i][c] != 0) { p = i; break; }
        if (p < 0) continue;
        std::swap(aug[p], aug[r]);
        Rat inv = 1 / aug[r][c];
        for (auto& x : aug[r]) x *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || aug[i][c] == 0) continue;
            Rat f = aug[i][c];
            for (int k = 0; k <= cols; ++k) aug[i][k] -= f * aug[r][k];
        }
        pivot_col[r] = c;
        ++r;
    }
    for (int i = r; i < rows; ++i)
        if (aug[i][cols] != 0) return std::nullopt;
    RatVec sol(cols, Rat(0));
    for (int i = 0; i < r; ++i) sol[pivot_col[i]] = aug[i][cols];
    return sol;
}

unsigned long RootSystem::weyl_order() const {
    auto fact = [](int n) {
        unsigned long f = 1;
        for (int i = 2; i <= n; ++i) f *= i;
        return f;
    };
    switch (family_) {
        case Family::A: return fact(rank_ + 1);
        case Family::B:
        case Family::C: return (1ul << rank_) * fact(rank_);
        case Family::D: return (1ul << (rank_ - 1)) * fact(rank_);
        case Family::G2: return 12;
    }
    return 0;
}

std::set<RatVec> RootSystem::orbit(const RatVec& v) const {
    std::set<RatVec> seen{v};
    std::deque<RatVec> queue{v};
    while (!queue.empty()) {
        RatVec cur = queue.front();
        queue.pop_front();
        for (const auto& s : simple_refl_) {
            RatVec img = mat_apply(s, cur);
            if (seen.insert(img).second) queue.push_back(img);
        }
    }
    return seen;
}

WeylGroup::WeylGroup(const RootSystem& rs, size_t cap) : rs_(&rs) {
    WeylElement id{identity_matrix(rs.coord_dim()), {}, 0};
    std::vector<WeylElement> out{id};
    std::map<IMat, int> seen{{id.matrix, 0}};
    std::deque<int> queue{0};
    while (!queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        for (int j = 0; j < rs.rank(); ++j) {
            IMat m = mat_mul(out[cur].matrix, rs.simple_reflection(j));
            if (seen.count(m)) continue;
            if (out.size() >= cap) throw std::runtime_error("Weyl group too large");
            WeylElement w;
            w.matrix = std::move(m);
            w.word = out[cur].word;
            w.word.push_back(j);
            w.length = out[cur].length + 1;
            seen.emplace(w.matrix, static_cast<int>(out.size()));
            out.push_back(std::move(w));
            queue.push_back(static_cast<int>(out.size()) - 1);
        }
    }
    std::sort(out.begin(), out.end(), [](const WeylElement& a, const WeylElement& b) {
        if (a.length != b.length) return a.length < b.length;
        return a.word < b.word;
    });
    elements_ = std::move(out);
    for (size_t i = 0; i < elements_.size(); ++i)
        index_[elements_[i].matrix] = static_cast<int>(i);
    longest_ = static_cast<int>(elements_.size()) - 1;
}

WeylGroup WeylGroup::from_elements(const RootSystem& rs,
                                   std::vector<WeylElement> elems) {
    WeylGroup g(&rs);
    g.elements_ = std::move(elems);
    std::sort(g.elements_.begin(), g.elements_.end(),
              [](const WeylElement& a, const WeylElement& b) {
                  if (a.length != b.length) return a.length < b.length;
                  return a.word < b.word;
              });
    for (size_t i = 0; i < g.elements_.size(); ++i)
        g.index_[g.elements_[i].matrix] = static_cast<int>(i);
    g.longest_ = static_cast<int>(g.elements_.size()) - 1;
    return g;
}

int WeylGroup::index_of(const IMat& m) const {
    auto it = index_.find(m);
    return it == index_.end() ? -1 : it->second;
}

int WeylGroup::left_mult(int j, int u) const {
    return index_of(mat_mul(rs_->simple_reflection(j), elements_[u].matrix));
}

int WeylGroup::right_mult(int u, int j) const {
    return index_of(mat_mul(elements_[u].matrix, rs_->simple_reflection(j)));
}

int WeylGroup::product(int u, int v) const {
    return index_of(mat_mul(elements_[u].matrix, elements_[v].matrix));
}

int WeylGroup::inverse(int u) const {
    const IMat& m = elements_[u].matrix;
    int n = static_cast<int>(m.size());
    IMat t(n, std::vector<long>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t[i][j] = m[j][i];
    int idx = index_of(t);
    if (idx >= 0) return idx;
    // Non-orthogonal coordinates (G2): fall back to a search.
    IMat id = identity_matrix(n);
    for (size_t k = 0; k < elements_.size(); ++k)
        if (mat_mul(elements_[k].matrix, m) == id) return static_cast<int>(k);
    return -1;
}

int WeylGroup::left_descent(int u) const {
    for (int j = 0; j < rs_->rank(); ++j) {
        int v = left_mult(j, u);
        if (v >= 0 && elements_[v].length < elements_[u].length) return j;
    }
    return -1;
}

int WeylGroup::inversion_count(int u) const {
    int count = 0;
    for (const auto& r : rs_->positive_roots()) {
        IVec img = mat_apply(elements_[u].matrix, r);
        IVec neg(img.size());
        for (size_t i = 0; i < img.size(); ++i) neg[i] = -img[i];
        bool positive = false;
        for (const auto& p : rs_->positive_roots())
            if (p == img) { positive = true; break; }
        if (!positive) {
            bool negative = false;
            for (const auto& p : rs_->positive_roots())
                if (p == neg) { negative = true; break; }
            if (!negative) throw std::logic_error("root image is not a root");
            ++count;
        }
    }
    return count;
}

WeylElement reflection(const RootSystem& rs, const WeylGroup& W, const IVec& root) {
    if (!rs.is_root(root))
        throw std::invalid_argument("reflection: input is not a root");
    int idx = W.index_of(rs.reflection_matrix(root));
    if (idx < 0) throw std::logic_error("reflection not found in enumeration");
    return W[idx];
}

std::vector<int> stabilizer(const WeylGroup& W, const RatVec& v) {
    std::vector<int> out;
    for (size_t i = 0; i < W.size(); ++i)
        if (mat_apply(W[i].matrix, v) == v) out.push_back(static_cast<int>(i));
    return out;
}

}  // namespace schub
