#pragma once

#include <functional>
#include <numeric>
#include <set>

#include "chevalg/groupeng.hpp"

namespace chevalg {

/// Triangular coordinates on the big cell: the one-parameter subgroups
/// f_k (upper) and their omega mirrors (lower) attached to a fixed reduced
/// word for the longest Weyl element, coordinate recovery through the
/// weight grading of a probe module, and the unique factorization
/// g = y_(h-) t x_(h+).
template <CoeffRing R>
class BigCell {
  public:
    using Elem = typename R::Elem;
    using Elt = typename GroupEngine<R>::Elt;

    explicit BigCell(const GroupEngine<R>& eng) : eng_(&eng) {
        word_ = eng.weyl().longest().word;
        lambda_ = eng.weyl().root_sequence(word_);
        n_ = static_cast<int>(lambda_.size());
        // probe: the registered module of least dimension whose highest
        // weight is strictly dominant (every <i,lambda> > 0)
        probe_ = -1;
        for (std::size_t k = 0; k < eng.size(); ++k) {
            const auto& m = eng.module(k);
            bool strict = true;
            for (int i = 0; i < eng.datum().nI(); ++i)
                if (eng.datum().pair_i(i, m.top) <= 0) strict = false;
            if (strict && (probe_ < 0 || m.dim() < eng.module(probe_).dim()))
                probe_ = static_cast<int>(k);
        }
        if (probe_ < 0) throw BudgetExceeded("registry has no strictly dominant module");
        // heights of the lambda_k (positive roots)
        for (const auto& lam : lambda_) {
            auto c = eng.datum().root_coords_nonneg(lam);
            ht_.push_back(std::accumulate(c->begin(), c->end(), 0L));
        }
        // the matrices of f_k(1) and g_k(1) on every module, for component extraction
        std::vector<Elt> fe, ge;
        for (int j = 1; j <= n_; ++j) {
            fe.push_back(f_k(j, eng.ring().one()));
            ge.push_back(g_k(j, eng.ring().one()));
        }
        for (std::size_t k = 0; k < eng.size(); ++k) {
            fk1_.push_back({});
            gk1_.push_back({});
            for (int j = 1; j <= n_; ++j) {
                fk1_[k].push_back(fe[j - 1].mats[k]);
                gk1_[k].push_back(ge[j - 1].mats[k]);
            }
        }
    }

    int n() const { return n_; }
    int probe_index() const { return probe_; }
    const std::vector<Weight>& lambda_seq() const { return lambda_; }
    const std::vector<int>& w0_word() const { return word_; }

    /// f_k(h) = s''_{i_1} ... s''_{i_{k-1}} x_{i_k}(h) s''^-1_{i_{k-1}} ... ;
    /// k is 1-based.
    Elt f_k(int k, const Elem& h) const {
        const auto& eng = *eng_;
        Elt acc = eng.gen_x(word_[k - 1], h);
        for (int j = k - 2; j >= 0; --j) {
            acc = eng.compose(eng.s_dblprime(word_[j]),
                              eng.compose(acc, eng.s_prime(word_[j])));
        }
        return acc;
    }
    /// The omega mirror of f_k (lower triangular side).
    Elt g_k(int k, const Elem& h) const {
        const auto& eng = *eng_;
        Elt acc = eng.gen_y(word_[k - 1], h);
        for (int j = k - 2; j >= 0; --j) {
            acc = eng.compose(eng.s_prime(word_[j]),
                              eng.compose(acc, eng.s_dblprime(word_[j])));
        }
        return acc;
    }

    Elt x_h(const std::vector<Elem>& h) const {
        Elt acc = eng_->identity();
        for (int k = 1; k <= n_; ++k) acc = eng_->compose(acc, f_k(k, h[k - 1]));
        return acc;
    }
    Elt y_h(const std::vector<Elem>& h) const {
        Elt acc = eng_->identity();
        for (int k = 1; k <= n_; ++k) acc = eng_->compose(acc, g_k(k, h[k - 1]));
        return acc;
    }

    /// Weight-graded component of a matrix on module `mod`: keep entries with
    /// row weight = column weight + shift.
    Matrix<Elem> graded_component(std::size_t mod, const Matrix<Elem>& m, const Weight& shift) const {
        const auto& wm = eng_->module(mod);
        Matrix<Elem> out(m.rows(), m.cols(), eng_->ring().zero());
        for (int r = 0; r < wm.dim(); ++r)
            for (int c = 0; c < wm.dim(); ++c)
                if (weight_sub(wm.weights[r], wm.weights[c]) == shift) out.at(r, c) = m.at(r, c);
        return out;
    }

    /// Matrix of x_{c,k}^+ on module `mod` (the c lambda_k graded piece of f_k(1)).
    Matrix<Elem> xck_matrix(std::size_t mod, int k, int c) const {
        Weight shift(eng_->datum().rank, 0);
        for (int s = 0; s < c; ++s) shift = weight_add(shift, lambda_[k - 1]);
        return graded_component(mod, fk1_[mod][k - 1], shift);
    }
    Matrix<Elem> yck_matrix(std::size_t mod, int k, int c) const {
        Weight shift(eng_->datum().rank, 0);
        for (int s = 0; s < c; ++s) shift = weight_sub(shift, lambda_[k - 1]);
        return graded_component(mod, gk1_[mod][k - 1], shift);
    }

    /// Matrix of x_c^+ = x_{c_1,1} x_{c_2,2} ... x_{c_n,n} on module `mod`.
    Matrix<Elem> xc_matrix(std::size_t mod, const std::vector<int>& c) const {
        auto acc = mat_identity(eng_->ring(), eng_->module(mod).dim());
        for (int k = 1; k <= n_; ++k)
            if (c[k - 1] != 0) acc = mat_mul(eng_->ring(), acc, xck_matrix(mod, k, c[k - 1]));
        return acc;
    }
    Matrix<Elem> yc_matrix(std::size_t mod, const std::vector<int>& c) const {
        auto acc = mat_identity(eng_->ring(), eng_->module(mod).dim());
        for (int k = 1; k <= n_; ++k)
            if (c[k - 1] != 0) acc = mat_mul(eng_->ring(), acc, yck_matrix(mod, k, c[k - 1]));
        return acc;
    }

    /// All exponent vectors c with sum_k c_k lambda_k = target.
    std::vector<std::vector<int>> exponents_with_weight(const Weight& target) const {
        std::vector<std::vector<int>> out;
        auto tc = eng_->datum().root_coords_nonneg(target);
        if (!tc) return out;
        long total = std::accumulate(tc->begin(), tc->end(), 0L);
        std::vector<int> c(n_, 0);
        std::function<void(int, const Weight&, long)> rec = [&](int k, const Weight& rest,
                                                                long ht_left) {
            if (k == n_) {
                if (weight_is_zero(rest)) out.push_back(c);
                return;
            }
            Weight r = rest;
            for (int v = 0; v * ht_[k] <= ht_left; ++v) {
                c[k] = v;
                rec(k + 1, r, ht_left - v * ht_[k]);
                r = weight_sub(r, lambda_[k]);
            }
            c[k] = 0;
        };
        rec(0, target, total);
        std::sort(out.begin(), out.end());
        return out;
    }

    struct Factorization {
        std::vector<Elem> lower;
        TorusChar<Elem> chi;
        std::vector<Elem> upper;
    };

    /// Unique triangular factorization g = y_(lower) torus(chi) x_(upper);
    /// throws NotInBigCell when it does not exist.
    Factorization factorize(const Elt& g) const {
        const auto& eng = *eng_;
        const auto& ring = eng.ring();
        // 1. chi on the dominant generators from the highest-weight entries
        std::vector<Elem> gen_vals;
        const auto& gens = eng.datum().cone_gens;
        for (const auto& lam : gens) {
            int mi = eng.module_index(lam);
            if (mi < 0) throw BudgetExceeded("registry window lacks a cone generator module");
            int hi = eng.module(mi).highest_index();
            Elem v = g.mats[mi].at(hi, hi);
            if (!ring.inv(v)) throw NotInBigCell("highest-weight entry not invertible");
            gen_vals.push_back(v);
        }
        // 2. express the X basis in the generators (integer solve) and
        //    assemble chi
        Matrix<Int> gmat(gens.size(), eng.datum().rank, Int(0));
        for (std::size_t r = 0; r < gens.size(); ++r)
            for (int c = 0; c < eng.datum().rank; ++c) gmat.at(r, c) = gens[r][c];
        std::vector<Elem> chi_vals;
        for (int b = 0; b < eng.datum().rank; ++b) {
            std::vector<Int> e(eng.datum().rank, Int(0));
            e[b] = 1;
            auto sol = lattice_row_solve(gmat, e);
            if (!sol) throw std::logic_error("cone generators do not generate X");
            Elem acc = ring.one();
            for (std::size_t j = 0; j < gens.size(); ++j) {
                long c = (*sol)[j].get_si();
                const Elem& base = gen_vals[j];
                Elem b_inv = *ring.inv(base);
                for (long s = 0; s < (c >= 0 ? c : -c); ++s)
                    acc = ring.mul(acc, c >= 0 ? base : b_inv);
            }
            chi_vals.push_back(acc);
        }
        TorusChar<Elem> chi{chi_vals};
        Elem chi_top = eng.chi_value(chi, eng.module(probe_).top);
        Elem chi_top_inv = *ring.inv(chi_top);

        // 3. upper coordinates from the highest-weight row of the probe
        auto upper = recover_coords(g, chi_top_inv, /*upper=*/true);
        // 4. lower coordinates from the highest-weight column
        auto lower = recover_coords(g, chi_top_inv, /*upper=*/false);

        // 5. verify on the whole registry
        auto rebuilt = eng.compose(y_h(lower), eng.compose(eng.gen_torus(chi), x_h(upper)));
        if (!eng.equals(rebuilt, g)) throw NotInBigCell("element is not in the big cell");
        return Factorization{std::move(lower), std::move(chi), std::move(upper)};
    }

    /// Coordinate functional on the upper unipotent part: xi_c evaluated on
    /// u in G^{>0} equals prod h_k^{c_k} for u = x_h.
    Elem xi_eval(const Elt& u, const std::vector<int>& c) const {
        auto h = recover_coords(u, eng_->ring().one(), /*upper=*/true);
        // verify u really is x_h on the registry
        if (!eng_->equals(x_h(h), u)) throw NotInBigCell("element is not upper unipotent");
        Elem acc = eng_->ring().one();
        for (int k = 0; k < n_; ++k)
            for (int s = 0; s < c[k]; ++s) acc = eng_->ring().mul(acc, h[k]);
        return acc;
    }

  private:
    /// Solve for the coordinates h_k: the highest-weight row (resp. column)
    /// of g on the probe module decomposes over the x_c (resp. y_c) images,
    /// graded weight by weight; the coefficient at the unit exponent e_k is
    /// h_k. `scale` multiplies the row/column first (chi(top)^-1).
    std::vector<Elem> recover_coords(const Elt& g, const Elem& scale, bool upper) const {
        const auto& eng = *eng_;
        const auto& ring = eng.ring();
        const auto& m = eng.module(probe_);
        const auto& mat = g.mats[probe_];
        int hi = m.highest_index();
        std::vector<Elem> h(n_, ring.zero());
        for (int k = 1; k <= n_; ++k) {
            auto cs = exponents_with_weight(lambda_[k - 1]);
            // columns (for the upper side) resp. rows (lower side) of weight
            // top - lambda_k interact with the highest-weight line
            Weight target = weight_sub(m.top, lambda_[k - 1]);
            std::vector<int> idx;
            for (int b = 0; b < m.dim(); ++b)
                if (m.weights[b] == target) idx.push_back(b);
            if (idx.empty()) throw BudgetExceeded("probe module misses a root weight");
            // build the linear system: rows indexed by idx, columns by cs
            Matrix<Elem> a(idx.size(), cs.size(), ring.zero());
            std::vector<Elem> rhs(idx.size(), ring.zero());
            int ek_col = -1;
            for (std::size_t j = 0; j < cs.size(); ++j) {
                bool is_ek = true;
                for (int t = 0; t < n_; ++t)
                    if (cs[j][t] != (t == k - 1 ? 1 : 0)) is_ek = false;
                if (is_ek) ek_col = static_cast<int>(j);
                auto xc = upper ? xc_matrix(probe_, cs[j]) : yc_matrix(probe_, cs[j]);
                for (std::size_t r = 0; r < idx.size(); ++r)
                    a.at(r, j) = upper ? xc.at(hi, idx[r]) : xc.at(idx[r], hi);
            }
            if (ek_col < 0) throw std::logic_error("unit exponent missing");
            if (cs.size() > 1 && mat_rank(ring, a) < cs.size())
                throw BudgetExceeded("probe module cannot separate triangular coordinates");
            for (std::size_t r = 0; r < idx.size(); ++r) {
                Elem v = upper ? mat.at(hi, idx[r]) : mat.at(idx[r], hi);
                rhs[r] = ring.mul(scale, v);
            }
            auto sol = mat_solve(ring, a, rhs);
            if (!sol) throw NotInBigCell("coordinate system inconsistent");
            h[k - 1] = (*sol)[ek_col];
        }
        return h;
    }

    const GroupEngine<R>* eng_;
    std::vector<int> word_;
    std::vector<Weight> lambda_;
    std::vector<long> ht_;
    int n_ = 0;
    int probe_ = -1;
    // fk1_[module][k-1] = matrix of f_k(1); same for the lower side
    std::vector<std::vector<Matrix<Elem>>> fk1_, gk1_;
};

/// Breadth-first closure of the subgroup generated by the given elements'
/// matrices on one registry module; returns the group order.
template <CoeffRing R>
std::size_t enumerate_group(const GroupEngine<R>& eng, std::size_t module_index,
                            const std::vector<typename GroupEngine<R>::Elt>& gens,
                            std::size_t budget = 2000000) {
    const auto& ring = eng.ring();
    auto key_of = [&](const Matrix<typename R::Elem>& m) {
        std::string s;
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c) {
                s += ring.str(m.at(r, c));
                s += ',';
            }
        return s;
    };
    std::vector<Matrix<typename R::Elem>> gen_mats;
    for (const auto& g : gens) gen_mats.push_back(g.mats[module_index]);
    std::set<std::string> seen;
    std::vector<Matrix<typename R::Elem>> frontier{
        mat_identity(ring, eng.module(module_index).dim())};
    seen.insert(key_of(frontier[0]));
    while (!frontier.empty()) {
        std::vector<Matrix<typename R::Elem>> next;
        for (const auto& m : frontier)
            for (const auto& g : gen_mats) {
                auto p = mat_mul(ring, m, g);
                if (seen.insert(key_of(p)).second) {
                    next.push_back(std::move(p));
                    if (seen.size() > budget) throw BudgetExceeded("group closure over budget");
                }
            }
        frontier = std::move(next);
    }
    return seen.size();
}

}  // namespace chevalg
