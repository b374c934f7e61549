#include "schub/schubert.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace schub {

namespace {

// Identity images, with the chosen block acted on by m: basis character i is
// replaced by its image, column i of the matrix.
std::vector<RatVec> block_images(int nvars, int dim, int block, const IMat& m) {
    std::vector<RatVec> images(nvars, RatVec(nvars, Rat(0)));
    for (int i = 0; i < nvars; ++i) images[i][i] = 1;
    int off = block * dim;
    for (int i = 0; i < dim; ++i) {
        std::fill(images[off + i].begin(), images[off + i].end(), Rat(0));
        for (int j = 0; j < dim; ++j) images[off + i][off + j] = Rat(m[j][i]);
    }
    return images;
}

Poly root_in_block(const RootSystem& rs, const IVec& root, int nvars, int block) {
    RatVec c(nvars, Rat(0));
    int off = block * rs.coord_dim();
    for (int j = 0; j < rs.coord_dim(); ++j) c[off + j] = Rat(root[j]);
    return Poly::linear(c);
}

void check_block(const RootSystem& rs, const Poly& p, int block) {
    int dim = rs.coord_dim();
    if (p.nvars() != dim && p.nvars() != 2 * dim)
        throw std::invalid_argument("polynomial does not match system coordinates");
    if (block != 0 && block != 1)
        throw std::invalid_argument("bad block");
    if (block == 1 && p.nvars() != 2 * dim)
        throw std::invalid_argument("y-block operator needs a two-block polynomial");
}

}  // namespace

Poly divided_difference(const RootSystem& rs, int i, const Poly& p, int block) {
    check_block(rs, p, block);
    if (i < 0 || i >= rs.rank()) throw std::invalid_argument("bad simple root index");
    int dim = rs.coord_dim();
    auto images = block_images(p.nvars(), dim, block, rs.simple_reflection(i));
    Poly num = p - p.substitute_linear(images);
    if (num.is_zero()) return Poly::zero(p.nvars());
    return num.exact_divide(root_in_block(rs, rs.simple_roots()[i], p.nvars(), block));
}

Poly divided_difference_word(const RootSystem& rs, const WeylGroup& W,
                             const std::vector<int>& word, const Poly& p, int block) {
    IMat m = identity_matrix(rs.coord_dim());
    for (int j : word) m = mat_mul(m, rs.simple_reflection(j));
    int idx = W.index_of(m);
    if (idx < 0 || W[idx].length != static_cast<int>(word.size()))
        throw std::invalid_argument("word not reduced");
    Poly r = p;
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        r = divided_difference(rs, *it, r, block);
    return r;
}

Poly point_class_rep(const RootSystem& rs) {
    Poly prod = Poly::one(rs.coord_dim());
    for (const auto& root : rs.positive_roots())
        prod = prod * rs.root_poly(root);
    return prod.scale(Rat(1, static_cast<long>(rs.weyl_order())));
}

Poly schubert_class_rep(const RootSystem& rs, const WeylGroup& W, int w) {
    int u = W.product(W.inverse(w), W.longest());
    return divided_difference_word(rs, W, W[u].word, point_class_rep(rs));
}

Rat extract_coefficient(const RootSystem& rs, const WeylGroup& W, const Poly& p, int u) {
    if (!p.is_homogeneous()) throw std::invalid_argument("inhomogeneous polynomial");
    if (!p.is_zero() && p.degree() != W[u].length)
        throw std::invalid_argument("degree mismatch");
    return divided_difference_word(rs, W, W[u].word, p).constant_term();
}

Rat extract_pair_coefficient(const RootSystem& rs, const WeylGroup& W,
                             const Poly& p, int u, int v) {
    if (p.nvars() != 2 * rs.coord_dim())
        throw std::invalid_argument("pair extraction needs a two-block polynomial");
    if (!p.is_homogeneous()) throw std::invalid_argument("inhomogeneous polynomial");
    if (!p.is_zero() && p.degree() != W[u].length + W[v].length)
        throw std::invalid_argument("degree mismatch");
    Poly r = divided_difference_word(rs, W, W[v].word, p, 1);
    r = divided_difference_word(rs, W, W[u].word, r, 0);
    return r.constant_term();
}

namespace {

struct DescentTable {
    std::vector<int> descent;  // left descent generator per element
    std::vector<int> parent;   // index of s_j * u
};

DescentTable descent_table(const WeylGroup& W) {
    DescentTable t;
    t.descent.resize(W.size(), -1);
    t.parent.resize(W.size(), -1);
    for (size_t u = 1; u < W.size(); ++u) {
        int j = W.left_descent(static_cast<int>(u));
        t.descent[u] = j;
        t.parent[u] = W.left_mult(j, static_cast<int>(u));
    }
    return t;
}

// Memoized d_w chain over one block: results[w] = d_w(p) for all w with
// l(w) <= maxlen, pruned to the terms that can still reach block-degree 0.
// Elements are sorted by length, so parents always precede children.
std::vector<std::optional<Poly>> descent_chain(const RootSystem& rs, const WeylGroup& W,
                                               const DescentTable& t, const Poly& p,
                                               int block, int maxlen, bool parallel) {
    int dim = rs.coord_dim();
    int lo = block * dim, hi = lo + dim;
    std::vector<std::optional<Poly>> results(W.size());
    results[0] = p.truncate_block_degree(lo, hi, maxlen);

    size_t level_begin = 1;
    for (int len = 1; len <= maxlen; ++len) {
        size_t level_end = level_begin;
        while (level_end < W.size() && W[level_end].length == len) ++level_end;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
        for (size_t u = level_begin; u < level_end; ++u) {
            const Poly& src = *results[t.parent[u]];
            results[u] = divided_difference(rs, t.descent[u], src, block)
                             .truncate_block_degree(lo, hi, maxlen - len);
        }
        level_begin = level_end;
        if (level_begin >= W.size()) break;
    }
    (void)parallel;
    return results;
}

}  // namespace

std::map<PairKey, Rat> extract_all_pair_coefficients(const RootSystem& rs,
                                                     const WeylGroup& W,
                                                     const Poly& p, bool parallel) {
    if (p.nvars() != 2 * rs.coord_dim())
        throw std::invalid_argument("pair extraction needs a two-block polynomial");
    if (!p.is_homogeneous()) throw std::invalid_argument("inhomogeneous polynomial");
    std::map<PairKey, Rat> out;
    if (p.is_zero()) return out;
    int N = p.degree();
    int dim = rs.coord_dim();
    int maxlen = std::min(N, W.max_length());

    DescentTable t = descent_table(W);
    auto qx = descent_chain(rs, W, t, p, 0, maxlen, parallel);

    // Per u: keep the x-degree-0 part as a y-only polynomial, then run the
    // same memoized chain over the y block.
    std::vector<std::vector<std::pair<int, Rat>>> rows(W.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
    for (size_t u = 0; u < W.size(); ++u) {
        if (W[u].length > maxlen || !qx[u]) continue;
        Poly py(dim);
        for (const auto& [e, c] : qx[u]->terms()) {
            bool xfree = true;
            for (int i = 0; i < dim && xfree; ++i) xfree = e[i] == 0;
            if (xfree) py.add_term(Exp(e.begin() + dim, e.end()), c);
        }
        if (py.is_zero()) continue;
        int target = N - W[u].length;

        std::vector<std::optional<Poly>> qy(W.size());
        qy[0] = py.truncate_block_degree(0, dim, target);
        for (size_t v = 0; v < W.size() && W[v].length <= target; ++v) {
            if (v > 0) {
                const auto& src = qy[t.parent[v]];
                if (!src || src->is_zero()) {
                    qy[v] = Poly::zero(dim);
                } else {
                    qy[v] = divided_difference(rs, t.descent[v], *src)
                                .truncate_block_degree(0, dim, target - W[v].length);
                }
            }
            if (W[v].length == target) {
                Rat c = qy[v]->constant_term();
                if (c != 0)
                    rows[u].emplace_back(static_cast<int>(v), c);
            }
        }
    }
    for (size_t u = 0; u < W.size(); ++u)
        for (const auto& [v, c] : rows[u])
            out[{static_cast<int>(u), v}] = c;
    return out;
}

std::map<int, Rat> extract_all_coefficients(const RootSystem& rs, const WeylGroup& W,
                                            const Poly& p, bool parallel) {
    if (p.nvars() != rs.coord_dim())
        throw std::invalid_argument("single-factor extraction needs plain coordinates");
    if (!p.is_homogeneous()) throw std::invalid_argument("inhomogeneous polynomial");
    std::map<int, Rat> out;
    if (p.is_zero()) return out;
    int d = p.degree();
    if (d > W.max_length()) throw std::invalid_argument("degree exceeds top degree");
    DescentTable t = descent_table(W);
    auto q = descent_chain(rs, W, t, p, 0, d, parallel);
    for (size_t u = 0; u < W.size(); ++u) {
        if (W[u].length != d || !q[u]) continue;
        Rat c = q[u]->constant_term();
        if (c != 0) out[static_cast<int>(u)] = c;
    }
    return out;
}

bool class_equal(const RootSystem& rs, const WeylGroup& W, const Poly& p,
                 const Poly& q, std::vector<ClassMismatch>* certificate) {
    if (!p.is_homogeneous() || !q.is_homogeneous() || p.degree() != q.degree())
        throw std::invalid_argument("degree mismatch");
    auto cp = extract_all_pair_coefficients(rs, W, p);
    auto cq = extract_all_pair_coefficients(rs, W, q);
    bool equal = true;
    auto report = [&](const PairKey& k, const Rat& a, const Rat& b) {
        equal = false;
        if (certificate) certificate->push_back({k.first, k.second, a, b});
    };
    for (const auto& [k, a] : cp) {
        auto it = cq.find(k);
        Rat b = it == cq.end() ? Rat(0) : it->second;
        if (a != b) report(k, a, b);
    }
    for (const auto& [k, b] : cq)
        if (!cp.count(k)) report(k, Rat(0), b);
    return equal;
}

ClassExpansion expand_class(const RootSystem& rs, const WeylGroup& W, const Poly& p) {
    ClassExpansion ce;
    ce.system = rs.name();
    ce.degree = p.is_zero() ? 0 : p.degree();
    if (p.nvars() == rs.coord_dim()) {
        for (const auto& [u, c] : extract_all_coefficients(rs, W, p)) {
            ClassExpansion::Entry e;
            e.u_word = W[u].word;
            e.has_v = false;
            e.coeff = c;
            ce.entries.push_back(std::move(e));
        }
    } else {
        for (const auto& [k, c] : extract_all_pair_coefficients(rs, W, p)) {
            ClassExpansion::Entry e;
            e.u_word = W[k.first].word;
            e.v_word = W[k.second].word;
            e.has_v = true;
            e.coeff = c;
            ce.entries.push_back(std::move(e));
        }
    }
    std::sort(ce.entries.begin(), ce.entries.end(),
              [](const ClassExpansion::Entry& a, const ClassExpansion::Entry& b) {
                  if (a.u_word.size() != b.u_word.size())
                      return a.u_word.size() < b.u_word.size();
                  if (a.u_word != b.u_word) return a.u_word < b.u_word;
                  return a.v_word < b.v_word;
              });
    return ce;
}

}  // namespace schub
