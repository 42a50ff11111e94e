#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "chevalg/matrix.hpp"
#include "chevalg/rootdatum.hpp"

namespace chevalg {

struct NotDominant : std::runtime_error {
    explicit NotDominant(const std::string& what) : std::runtime_error(what) {}
};

/// A weight module at v = 1 with a fixed integral basis: weights per basis
/// vector and integer matrices for all divided powers e_i^(n), f_i^(n).
///
/// Invariants kept by construction (and re-checked in the test suite):
///  - matrices are weight-graded: e_i^(n) maps the mu block into mu + n i',
///  - divided powers compose: e_i^(n) e_i^(m) = binom(n+m, n) e_i^(n+m),
///  - all entries are integers (the lattice is the divided-power lattice).
class WeightModule {
  public:
    RootDatum datum;
    Weight top;                    // unique highest weight, 1-dimensional
    std::vector<Weight> weights;   // weight of each basis vector
    std::string label;

    int dim() const { return static_cast<int>(weights.size()); }

    /// e_i^(n); n past the nilpotency bound gives the zero matrix.
    const Matrix<Int>& e_pow(int i, int n) const { return pow_matrix(e_pows_, i, n); }
    const Matrix<Int>& f_pow(int i, int n) const { return pow_matrix(f_pows_, i, n); }
    int e_bound(int i) const { return static_cast<int>(e_pows_[i].size()); }
    int f_bound(int i) const { return static_cast<int>(f_pows_[i].size()); }

    /// Projection onto the mu weight space (a 0/1 diagonal matrix).
    Matrix<Int> proj(const Weight& mu) const {
        Matrix<Int> p(weights.size(), weights.size(), Int(0));
        for (std::size_t k = 0; k < weights.size(); ++k)
            if (weights[k] == mu) p.at(k, k) = 1;
        return p;
    }

    /// Diagonal action of binom(y-bar, k): value binom(<y, mu>, k) on the mu block.
    Matrix<Int> binom_diag(const Weight& y, long k) const {
        Matrix<Int> p(weights.size(), weights.size(), Int(0));
        for (std::size_t b = 0; b < weights.size(); ++b)
            p.at(b, b) = int_binom(Int(datum.pair(y, weights[b])), k);
        return p;
    }

    int highest_index() const { return index_of_weight(top); }
    int lowest_index() const {
        WeylGroup w(datum);
        return index_of_weight(w.longest().apply(top));
    }

    int index_of_weight(const Weight& mu) const {
        int found = -1;
        for (std::size_t k = 0; k < weights.size(); ++k)
            if (weights[k] == mu) {
                if (found >= 0) throw std::logic_error("weight space is not one-dimensional");
                found = static_cast<int>(k);
            }
        if (found < 0) throw std::logic_error("weight not present");
        return found;
    }

    std::map<Weight, int> weight_multiplicities() const {
        std::map<Weight, int> m;
        for (const auto& w : weights) m[w]++;
        return m;
    }

    bool same_matrices(const WeightModule& o) const {
        return weights == o.weights && e_pows_ == o.e_pows_ && f_pows_ == o.f_pows_;
    }

    // internal: filled by the builders below
    std::vector<std::vector<Matrix<Int>>> e_pows_;  // [i][n], n >= 1
    std::vector<std::vector<Matrix<Int>>> f_pows_;

    void seal() {
        trim(e_pows_);
        trim(f_pows_);
        zero_ = Matrix<Int>(weights.size(), weights.size(), Int(0));
        ident_ = Matrix<Int>(weights.size(), weights.size(), Int(0));
        for (std::size_t k = 0; k < weights.size(); ++k) ident_.at(k, k) = 1;
    }

  private:
    Matrix<Int> zero_, ident_;

    const Matrix<Int>& pow_matrix(const std::vector<std::vector<Matrix<Int>>>& pows, int i,
                                  int n) const {
        if (n == 0) return ident_;
        if (n < 0 || i < 0 || i >= static_cast<int>(pows.size())) return zero_;
        if (n >= static_cast<int>(pows[i].size()) + 1) return zero_;
        return pows[i][n - 1];
    }

    static void trim(std::vector<std::vector<Matrix<Int>>>& pows) {
        for (auto& per_i : pows) {
            while (!per_i.empty()) {
                bool zero = true;
                for (std::size_t r = 0; r < per_i.back().rows() && zero; ++r)
                    for (std::size_t c = 0; c < per_i.back().cols() && zero; ++c)
                        if (per_i.back().at(r, c) != 0) zero = false;
                if (zero) per_i.pop_back();
                else break;
            }
        }
    }
};

/// One token of an evaluable word in the divided-power presentation:
/// raising/lowering divided powers, a weight projector, or a diagonal
/// binomial in a coweight.
struct UToken {
    enum Kind { ThetaPlus, ThetaMinus, UnitProj, BinomY } kind;
    int i = 0;        // ThetaPlus/ThetaMinus: simple index
    int n = 0;        // ThetaPlus/ThetaMinus: divided power
    Weight lam;       // UnitProj: target weight
    Weight y;         // BinomY: coweight (Y coordinates)
    long k = 0;       // BinomY: binomial depth

    static UToken theta_plus(int i, int n) { return UToken{ThetaPlus, i, n, {}, {}, 0}; }
    static UToken theta_minus(int i, int n) { return UToken{ThetaMinus, i, n, {}, {}, 0}; }
    static UToken unit_proj(Weight lam) { return UToken{UnitProj, 0, 0, std::move(lam), {}, 0}; }
    static UToken binom_y(Weight y, long k) { return UToken{BinomY, 0, 0, {}, std::move(y), k}; }
};

using UWord = std::vector<UToken>;

inline Matrix<Int> token_matrix(const WeightModule& m, const UToken& t) {
    switch (t.kind) {
        case UToken::ThetaPlus: return m.e_pow(t.i, t.n);
        case UToken::ThetaMinus: return m.f_pow(t.i, t.n);
        case UToken::UnitProj: return m.proj(t.lam);
        case UToken::BinomY: return m.binom_diag(t.y, t.k);
    }
    throw std::logic_error("bad token");
}

/// Matrix of the word t_1 t_2 ... t_k as an operator (t_k applied first).
inline Matrix<Int> word_matrix(const WeightModule& m, const UWord& w) {
    IntRing Z;
    auto acc = mat_identity(Z, m.dim());
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        acc = mat_mul(Z, token_matrix(m, *it), acc);
    return acc;
}

/// act(word, m, vec): linear action on column coordinate vectors.
inline std::vector<Int> act(const UWord& w, const WeightModule& m, const std::vector<Int>& vec) {
    auto mat = word_matrix(m, w);
    std::vector<Int> out(m.dim(), Int(0));
    for (int r = 0; r < m.dim(); ++r)
        for (int c = 0; c < m.dim(); ++c) out[r] += mat.at(r, c) * vec[c];
    return out;
}

namespace detail {

/// Free lowering word f_{w0} f_{w1} ... f_{wk-1} eta; entries are simple indices.
using FWord = std::vector<int>;

struct WeylBuilder {
    const RootDatum& rd;
    Weight lambda;
    std::map<std::pair<FWord, FWord>, Int> pair_cache;

    explicit WeylBuilder(const RootDatum& d, Weight lam) : rd(d), lambda(std::move(lam)) {}

    Weight word_weight(const FWord& w) const {
        Weight mu = lambda;
        for (int i : w) mu = weight_sub(mu, rd.simple_X[i]);
        return mu;
    }

    /// e_i applied to a word vector: sum of shorter words with integer
    /// coefficients ([e_i, f_j] = delta_ij h_i at v = 1).
    std::vector<std::pair<Int, FWord>> e_apply(int i, const FWord& w) const {
        std::vector<std::pair<Int, FWord>> out;
        // weight to the right of position p: lambda - sum_{q > p} alpha_{w_q}
        for (std::size_t p = 0; p < w.size(); ++p) {
            if (w[p] != i) continue;
            Weight mu = lambda;
            for (std::size_t q = p + 1; q < w.size(); ++q)
                mu = weight_sub(mu, rd.simple_X[w[q]]);
            long c = rd.pair_i(i, mu);
            if (c == 0) continue;
            FWord rest;
            rest.reserve(w.size() - 1);
            for (std::size_t q = 0; q < w.size(); ++q)
                if (q != p) rest.push_back(w[q]);
            out.emplace_back(Int(c), std::move(rest));
        }
        return out;
    }

    /// Contravariant (Shapovalov-type) pairing <a eta, b eta>, normalized
    /// <eta, eta> = 1. Integer-valued at v = 1.
    Int pairing(const FWord& a, const FWord& b) {
        if (a.size() != b.size()) return 0;
        if (a.empty()) return 1;
        if (word_weight(a) != word_weight(b)) return 0;
        auto key = std::make_pair(a, b);
        auto it = pair_cache.find(key);
        if (it != pair_cache.end()) return it->second;
        // <f_{a0} a' , b> = <a', e_{a0} b>
        FWord arest(a.begin() + 1, a.end());
        Int total = 0;
        for (const auto& [c, w] : e_apply(a[0], b)) total += c * pairing(arest, w);
        pair_cache.emplace(std::move(key), total);
        return total;
    }
};

inline long height_from_top(const RootDatum& rd, const Weight& top, const Weight& mu) {
    auto c = rd.root_coords_nonneg(weight_sub(top, mu));
    if (!c) throw std::logic_error("weight not below the top weight");
    return std::accumulate(c->begin(), c->end(), 0L);
}

/// Deterministic basis order: dominance-descending weight (height from the
/// top ascending, lex-descending tiebreak), then construction order.
inline std::vector<std::size_t> weight_sort_permutation(const RootDatum& rd, const Weight& top,
                                                        const std::vector<Weight>& ws) {
    std::vector<std::size_t> idx(ws.size());
    std::iota(idx.begin(), idx.end(), 0u);
    std::vector<long> ht(ws.size());
    for (std::size_t k = 0; k < ws.size(); ++k) ht[k] = height_from_top(rd, top, ws[k]);
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        if (ht[a] != ht[b]) return ht[a] < ht[b];
        if (ws[a] != ws[b]) return ws[a] > ws[b];
        return a < b;
    });
    return idx;
}

}  // namespace detail

/// Build the Weyl module Lambda_lambda over Q as the quotient of the free
/// lowering space by the radical of the contravariant form, then switch to
/// the divided-power Z-lattice basis (Hermite normal form per weight space).
inline WeightModule build_weyl_module(const RootDatum& rd, const Weight& lambda,
                                      int dim_budget = 4000) {
    if (!rd.is_dominant(lambda)) throw NotDominant("highest weight must be dominant");
    Int want_dim = rd.weyl_dim(lambda);
    if (want_dim > dim_budget) throw BudgetExceeded("module dimension over budget");

    detail::WeylBuilder wb(rd, lambda);
    const int nI = rd.nI();

    // --- layer-by-layer basis of the quotient, one weight at a time -------
    // per weight: selected words, Gram matrix (positive definite)
    std::map<Weight, std::vector<detail::FWord>> basis_words;
    std::map<Weight, Matrix<Int>> gram;
    basis_words[lambda] = {detail::FWord{}};
    {
        Matrix<Int> g(1, 1, Int(1));
        gram[lambda] = g;
    }
    RatRing QQ;

    std::vector<Weight> frontier{lambda};
    long total_dim = 1;
    while (!frontier.empty()) {
        // collect candidate weights one level down
        std::map<Weight, std::vector<detail::FWord>> candidates;
        for (const auto& mu : frontier)
            for (int i = 0; i < nI; ++i) {
                Weight lower = weight_sub(mu, rd.simple_X[i]);
                for (const auto& w : basis_words[mu]) {
                    detail::FWord c;
                    c.reserve(w.size() + 1);
                    c.push_back(i);
                    c.insert(c.end(), w.begin(), w.end());
                    candidates[lower].push_back(std::move(c));
                }
            }
        std::vector<Weight> next;
        for (auto& [mu, cands] : candidates) {
            std::vector<detail::FWord> chosen;
            std::vector<std::vector<Int>> gram_rows;  // growing Gram
            for (const auto& c : cands) {
                // Schur complement d - r^T G^-1 r decides independence
                std::vector<Rat> r(chosen.size());
                for (std::size_t j = 0; j < chosen.size(); ++j)
                    r[j] = Rat(wb.pairing(c, chosen[j]));
                Int d = wb.pairing(c, c);
                Rat sc(d);
                if (!chosen.empty()) {
                    Matrix<Rat> g(chosen.size(), chosen.size(), Rat(0));
                    for (std::size_t a = 0; a < chosen.size(); ++a)
                        for (std::size_t b = 0; b < chosen.size(); ++b)
                            g.at(a, b) = Rat(gram_rows[a][b]);
                    auto x = mat_solve(QQ, g, r);
                    if (!x) throw std::logic_error("Gram matrix unexpectedly singular");
                    for (std::size_t j = 0; j < chosen.size(); ++j) sc -= r[j] * (*x)[j];
                }
                if (sc < 0) throw std::logic_error("contravariant form not positive");
                if (sc > 0) {
                    // extend the Gram matrix
                    for (std::size_t j = 0; j < chosen.size(); ++j)
                        gram_rows[j].push_back(r[j].get_num());
                    std::vector<Int> row;
                    for (std::size_t j = 0; j < chosen.size(); ++j) row.push_back(r[j].get_num());
                    row.push_back(d);
                    gram_rows.push_back(std::move(row));
                    chosen.push_back(c);
                    if (++total_dim > dim_budget) throw BudgetExceeded("module dimension over budget");
                }
            }
            if (chosen.empty()) continue;
            Matrix<Int> g(chosen.size(), chosen.size(), Int(0));
            for (std::size_t a = 0; a < chosen.size(); ++a)
                for (std::size_t b = 0; b < chosen.size(); ++b) g.at(a, b) = gram_rows[a][b];
            gram[mu] = g;
            basis_words[mu] = std::move(chosen);
            next.push_back(mu);
        }
        frontier = std::move(next);
    }
    if (Int(total_dim) != want_dim)
        throw std::logic_error("constructed dimension disagrees with the Weyl formula: got " +
                               std::to_string(total_dim) + " want " + want_dim.get_str());

    // --- rational action matrices on the word basis, blocked by weight ----
    std::vector<Weight> weight_list;
    for (const auto& [mu, ws] : basis_words) weight_list.push_back(mu);

    auto coords_in_basis = [&](const Weight& mu, const std::vector<std::pair<Int, detail::FWord>>&
                                                      combo) -> std::vector<Rat> {
        // solve G x = (<combo, b_j>)_j at weight mu
        auto itb = basis_words.find(mu);
        if (itb == basis_words.end()) {
            for (const auto& [c, w] : combo)
                if (c != 0) throw std::logic_error("nonzero vector at absent weight");
            return {};
        }
        const auto& bw = itb->second;
        std::vector<Rat> rhs(bw.size(), Rat(0));
        for (std::size_t j = 0; j < bw.size(); ++j)
            for (const auto& [c, w] : combo) rhs[j] += Rat(c * wb.pairing(w, bw[j]));
        const auto& g = gram.at(mu);
        Matrix<Rat> gq(bw.size(), bw.size(), Rat(0));
        for (std::size_t a = 0; a < bw.size(); ++a)
            for (std::size_t b = 0; b < bw.size(); ++b) gq.at(a, b) = Rat(g.at(a, b));
        auto x = mat_solve(QQ, gq, rhs);
        if (!x) throw std::logic_error("coordinate solve failed");
        return *x;
    };

    // global index
    std::map<Weight, int> offset;
    {
        int off = 0;
        for (const auto& mu : weight_list) {
            offset[mu] = off;
            off += static_cast<int>(basis_words[mu].size());
        }
    }
    const int N = total_dim;
    std::vector<Weight> flat_weights(N);
    for (const auto& mu : weight_list)
        for (std::size_t k = 0; k < basis_words[mu].size(); ++k)
            flat_weights[offset[mu] + static_cast<int>(k)] = mu;

    Matrix<Rat> F1(N, N, Rat(0)), E1(N, N, Rat(0));
    std::vector<Matrix<Rat>> f1(nI, Matrix<Rat>(N, N, Rat(0))), e1(nI, Matrix<Rat>(N, N, Rat(0)));
    for (const auto& mu : weight_list) {
        const auto& bw = basis_words[mu];
        for (std::size_t k = 0; k < bw.size(); ++k) {
            int col = offset[mu] + static_cast<int>(k);
            for (int i = 0; i < nI; ++i) {
                // f_i column
                Weight lower = weight_sub(mu, rd.simple_X[i]);
                detail::FWord fw;
                fw.push_back(i);
                fw.insert(fw.end(), bw[k].begin(), bw[k].end());
                if (basis_words.count(lower)) {
                    auto x = coords_in_basis(lower, {{Int(1), fw}});
                    for (std::size_t j = 0; j < x.size(); ++j)
                        f1[i].at(offset[lower] + j, col) = x[j];
                }
                // e_i column
                Weight upper = weight_add(mu, rd.simple_X[i]);
                if (basis_words.count(upper)) {
                    auto combo = wb.e_apply(i, bw[k]);
                    std::vector<std::pair<Int, detail::FWord>> cv(combo.begin(), combo.end());
                    auto x = coords_in_basis(upper, cv);
                    for (std::size_t j = 0; j < x.size(); ++j)
                        e1[i].at(offset[upper] + j, col) = x[j];
                }
            }
        }
    }

    // --- divided-power lattice: top-down closure, HNF per weight ----------
    // nilpotency bound: max height jump
    long max_ht = detail::height_from_top(rd, lambda, weight_list.back());
    for (const auto& mu : weight_list)
        max_ht = std::max(max_ht, detail::height_from_top(rd, lambda, mu));

    // divided powers over Q on the word basis
    std::vector<std::vector<Matrix<Rat>>> fdiv(nI), ediv(nI);
    for (int i = 0; i < nI; ++i) {
        fdiv[i].push_back(f1[i]);
        ediv[i].push_back(e1[i]);
        for (long n = 2; n <= max_ht; ++n) {
            Rat inv_n(1, n);
            fdiv[i].push_back(mat_scale(QQ, inv_n, mat_mul(QQ, f1[i], fdiv[i].back())));
            ediv[i].push_back(mat_scale(QQ, inv_n, mat_mul(QQ, e1[i], ediv[i].back())));
        }
    }

    // lattice rows per weight (rational coordinates in the word basis)
    std::map<Weight, std::vector<std::vector<Rat>>> lattice;
    lattice[lambda] = {{Rat(1)}};
    // weights sorted by descending dominance height
    std::vector<Weight> by_height = weight_list;
    std::sort(by_height.begin(), by_height.end(), [&](const Weight& a, const Weight& b) {
        long ha = detail::height_from_top(rd, lambda, a), hb = detail::height_from_top(rd, lambda, b);
        return ha != hb ? ha < hb : a > b;
    });
    for (const auto& mu : by_height) {
        if (mu == lambda) continue;
        std::vector<std::vector<Rat>> rows;
        for (int i = 0; i < nI; ++i)
            for (long n = 1; n <= max_ht; ++n) {
                Weight src = weight_add(mu, rd.simple_X[i]);
                for (long s = 1; s < n; ++s) src = weight_add(src, rd.simple_X[i]);
                auto it = lattice.find(src);
                if (it == lattice.end()) continue;
                const auto& fd = fdiv[i][n - 1];
                for (const auto& vec : it->second) {
                    // vec lives at weight src; apply f_i^(n)
                    std::vector<Rat> out(basis_words[mu].size(), Rat(0));
                    int so = offset[src], mo = offset[mu];
                    for (std::size_t c = 0; c < vec.size(); ++c) {
                        if (vec[c] == 0) continue;
                        for (std::size_t r = 0; r < out.size(); ++r)
                            out[r] += fd.at(mo + r, so + c) * vec[c];
                    }
                    rows.push_back(std::move(out));
                }
            }
        // HNF with denominators cleared
        Int den = 1;
        for (const auto& row : rows)
            for (const auto& x : row) den = lcm(den, Rat(x).get_den());
        Matrix<Int> m(rows.size(), basis_words[mu].size(), Int(0));
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (std::size_t c = 0; c < rows[r].size(); ++c) {
                Rat scaled = rows[r][c] * Rat(den);
                m.at(r, c) = scaled.get_num();
            }
        auto h = hnf_rows(m);
        if (h.rows() != basis_words[mu].size())
            throw std::logic_error("divided-power lattice has unexpected rank");
        std::vector<std::vector<Rat>> basis_rows;
        for (std::size_t r = 0; r < h.rows(); ++r) {
            std::vector<Rat> row(h.cols());
            for (std::size_t c = 0; c < h.cols(); ++c) {
                row[c] = Rat(h.at(r, c), den);
                row[c].canonicalize();
            }
            basis_rows.push_back(std::move(row));
        }
        lattice[mu] = std::move(basis_rows);
    }

    // --- change of basis and integer matrices ------------------------------
    // T: block diagonal, rows of T are lattice basis vectors in word coords
    Matrix<Rat> T(N, N, Rat(0));
    for (const auto& mu : weight_list) {
        const auto& rows = lattice.at(mu);
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (std::size_t c = 0; c < rows[r].size(); ++c)
                T.at(offset[mu] + r, offset[mu] + c) = rows[r][c];
    }
    Matrix<Rat> Tt = T.transposed();
    auto Tt_inv = mat_inverse(QQ, Tt);
    if (!Tt_inv) throw std::logic_error("lattice basis not invertible");

    auto to_int = [&](const Matrix<Rat>& m) {
        Matrix<Int> out(m.rows(), m.cols(), Int(0));
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c) {
                Rat x = m.at(r, c);
                x.canonicalize();
                if (x.get_den() != 1)
                    throw std::logic_error("lattice action matrix is not integral");
                out.at(r, c) = x.get_num();
            }
        return out;
    };

    WeightModule mod;
    mod.datum = rd;
    mod.top = lambda;
    mod.label = "L";
    mod.e_pows_.resize(nI);
    mod.f_pows_.resize(nI);

    // basis order: weight-sorted (weight_list is already sorted by map order;
    // re-sort deterministically by dominance height)
    auto perm = detail::weight_sort_permutation(rd, lambda, flat_weights);
    Matrix<Rat> P(N, N, Rat(0));  // new = P * old coordinates
    for (int k = 0; k < N; ++k) P.at(k, perm[k]) = 1;
    auto Pinv = *mat_inverse(QQ, P);
    mod.weights.resize(N);
    for (int k = 0; k < N; ++k) mod.weights[k] = flat_weights[perm[k]];

    auto convert = [&](const Matrix<Rat>& word_mat) {
        // lattice coords: (T^t)^-1 M T^t, then permute
        auto m = mat_mul(QQ, *Tt_inv, mat_mul(QQ, word_mat, Tt));
        m = mat_mul(QQ, P, mat_mul(QQ, m, Pinv));
        return to_int(m);
    };
    for (int i = 0; i < nI; ++i) {
        for (long n = 1; n <= max_ht; ++n) {
            mod.e_pows_[i].push_back(convert(ediv[i][n - 1]));
            mod.f_pows_[i].push_back(convert(fdiv[i][n - 1]));
        }
    }
    mod.seal();
    return mod;
}

/// The omega twist: same lattice, e and f actions swapped, weights negated.
inline WeightModule omega_twist(const WeightModule& m) {
    WeightModule out;
    out.datum = m.datum;
    out.label = m.label + "~w";
    std::vector<Weight> negw(m.weights.size());
    for (std::size_t k = 0; k < m.weights.size(); ++k) negw[k] = weight_neg(m.weights[k]);
    // locate the new top (the unique weight dominating all others)
    Weight top = negw[0];
    for (const auto& w : negw) {
        bool dominates = true;
        for (const auto& o : negw)
            if (!m.datum.dominance_leq(o, w)) { dominates = false; break; }
        if (dominates) { top = w; break; }
    }
    out.top = top;
    // the underlying lattice (and its basis order) is untouched; only the
    // operator roles swap and the weight tags flip sign
    out.weights = std::move(negw);
    out.e_pows_.resize(m.datum.nI());
    out.f_pows_.resize(m.datum.nI());
    for (int i = 0; i < m.datum.nI(); ++i) {
        for (int n = 1; n <= m.f_bound(i); ++n) out.e_pows_[i].push_back(m.f_pow(i, n));
        for (int n = 1; n <= m.e_bound(i); ++n) out.f_pows_[i].push_back(m.e_pow(i, n));
    }
    out.seal();
    return out;
}

/// Tensor product at v = 1: e_i^(c) acts as sum over c' + c'' = c of
/// e_i^(c') (x) e_i^(c'') (and likewise for f).
inline WeightModule tensor(const WeightModule& a, const WeightModule& b, int dim_budget = 4000) {
    if (a.datum.name != b.datum.name) throw std::invalid_argument("tensor: datum mismatch");
    const int N = a.dim() * b.dim();
    if (N > dim_budget) throw BudgetExceeded("tensor dimension over budget");
    WeightModule out;
    out.datum = a.datum;
    out.label = a.label + "(x)" + b.label;
    out.top = weight_add(a.top, b.top);
    std::vector<Weight> ws(N);
    auto pair_index = [&](int p, int q) { return p * b.dim() + q; };
    for (int p = 0; p < a.dim(); ++p)
        for (int q = 0; q < b.dim(); ++q)
            ws[pair_index(p, q)] = weight_add(a.weights[p], b.weights[q]);
    auto perm = detail::weight_sort_permutation(a.datum, out.top, ws);
    std::vector<int> inv_perm(N);
    for (int k = 0; k < N; ++k) inv_perm[perm[k]] = k;
    out.weights.resize(N);
    for (int k = 0; k < N; ++k) out.weights[k] = ws[perm[k]];

    const int nI = a.datum.nI();
    out.e_pows_.resize(nI);
    out.f_pows_.resize(nI);
    for (int i = 0; i < nI; ++i) {
        int bound = a.e_bound(i) + b.e_bound(i);
        bound = std::max(bound, a.f_bound(i) + b.f_bound(i));
        for (int n = 1; n <= bound; ++n) {
            Matrix<Int> em(N, N, Int(0)), fm(N, N, Int(0));
            for (int c1 = 0; c1 <= n; ++c1) {
                int c2 = n - c1;
                const auto &ea = a.e_pow(i, c1), &eb = b.e_pow(i, c2);
                const auto &fa = a.f_pow(i, c1), &fb = b.f_pow(i, c2);
                for (int p = 0; p < a.dim(); ++p)
                    for (int pp = 0; pp < a.dim(); ++pp) {
                        if (ea.at(p, pp) == 0 && fa.at(p, pp) == 0) continue;
                        for (int q = 0; q < b.dim(); ++q)
                            for (int qq = 0; qq < b.dim(); ++qq) {
                                int row = inv_perm[pair_index(p, q)];
                                int col = inv_perm[pair_index(pp, qq)];
                                if (ea.at(p, pp) != 0 && eb.at(q, qq) != 0)
                                    em.at(row, col) += ea.at(p, pp) * eb.at(q, qq);
                                if (fa.at(p, pp) != 0 && fb.at(q, qq) != 0)
                                    fm.at(row, col) += fa.at(p, pp) * fb.at(q, qq);
                            }
                    }
            }
            out.e_pows_[i].push_back(std::move(em));
            out.f_pows_[i].push_back(std::move(fm));
        }
    }
    out.seal();
    return out;
}

/// Closed-form rank-one module (independent oracle for the generic builder):
/// basis F^(k) eta, 0 <= k <= m, with E^(n) F^(k) eta = binom(m-k+n, n) F^(k-n) eta.
inline WeightModule a1_closed_form_module(const RootDatum& rd, long m) {
    if (rd.nI() != 1) throw std::invalid_argument("rank-one datum required");
    // X-coordinates of the highest weight: m/<i,varpi-basis>; express via
    // solving <i, lambda> = m with lambda = t * generator of X
    // (works for both the sc and ad rank-one presets).
    WeightModule out;
    out.datum = rd;
    out.label = "L(a1:" + std::to_string(m) + ")";
    // find lambda with <i,lambda> = m
    Weight lambda(rd.rank, 0);
    {
        Weight e(rd.rank, 0);
        e[0] = 1;
        long unit = rd.pair_i(0, e);
        if (unit == 0 || m % unit != 0) throw NotDominant("weight not in this lattice");
        lambda[0] = m / unit;
    }
    out.top = lambda;
    out.weights.resize(m + 1);
    for (long k = 0; k <= m; ++k) {
        Weight w = lambda;
        for (long s = 0; s < k; ++s) w = weight_sub(w, rd.simple_X[0]);
        out.weights[k] = w;
    }
    out.e_pows_.resize(1);
    out.f_pows_.resize(1);
    for (long n = 1; n <= m; ++n) {
        Matrix<Int> em(m + 1, m + 1, Int(0)), fm(m + 1, m + 1, Int(0));
        for (long k = 0; k <= m; ++k) {
            if (k - n >= 0) em.at(k - n, k) = int_binom(Int(m - k + n), n);
            if (k + n <= m) fm.at(k + n, k) = int_binom(Int(k + n), n);
        }
        out.e_pows_[0].push_back(std::move(em));
        out.f_pows_[0].push_back(std::move(fm));
    }
    out.seal();
    return out;
}

}  // namespace chevalg
