#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "chevalg/weylmod.hpp"

namespace chevalg {

struct RingNotVEqualsOne : std::runtime_error {
    RingNotVEqualsOne() : std::runtime_error("ring must have v = 1") {}
};
struct NotInvertible : std::runtime_error {
    explicit NotInvertible(const std::string& what) : std::runtime_error(what) {}
};
struct NotInBigCell : std::runtime_error {
    explicit NotInBigCell(const std::string& what) : std::runtime_error(what) {}
};

/// A character X -> A^o given by its (invertible) values on the basis of X.
template <typename Elem>
struct TorusChar {
    std::vector<Elem> on_basis;
    bool operator==(const TorusChar&) const = default;
};

/// The group over a commutative ring with v = 1, realized through its
/// action on a registry of weight modules. Group elements are generator
/// words with matrices cached per registered module; equality is matrix
/// equality across the registry (a finite-window approximation of equality
/// in the full group, exact for every identity the suites check).
template <CoeffRing R>
class GroupEngine {
  public:
    using Elem = typename R::Elem;

    struct Token {
        enum Kind { X, Y, Torus, SPrime, SDblPrime } kind;
        int i = 0;
        Elem h{};                    // X / Y parameter
        std::vector<Elem> chi;       // Torus values on the X basis
    };

    struct Elt {
        std::vector<Token> word;
        std::vector<Matrix<Elem>> mats;  // one per registry module
    };

    GroupEngine(const RootDatum& rd, R ring, int window = 2, int dim_budget = 4000,
                std::vector<Weight> extra_modules = {})
        : rd_(rd), ring_(std::move(ring)), weyl_(rd_) {
        if (!ring_.v_is_one()) throw RingNotVEqualsOne();
        // dominant window: all N-combinations of the cone generators with
        // coefficient sum <= window (always includes 0)
        std::set<Weight> lams;
        std::vector<Weight> frontier{Weight(rd_.rank, 0)};
        lams.insert(frontier[0]);
        for (int step = 0; step < window; ++step) {
            std::vector<Weight> next;
            for (const auto& lam : frontier)
                for (const auto& g : rd_.cone_gens) {
                    Weight s = weight_add(lam, g);
                    if (lams.insert(s).second) next.push_back(s);
                }
            frontier = std::move(next);
        }
        for (const auto& lam : extra_modules) lams.insert(lam);
        for (const auto& lam : lams) {
            modules_.push_back(build_weyl_module(rd_, lam, dim_budget));
            modules_.back().label = "L(" + weight_str(lam) + ")";
        }
        spec_.resize(modules_.size());
        for (std::size_t k = 0; k < modules_.size(); ++k) {
            const auto& m = modules_[k];
            auto& sp = spec_[k];
            sp.e.resize(rd_.nI());
            sp.f.resize(rd_.nI());
            for (int i = 0; i < rd_.nI(); ++i) {
                for (int n = 1; n <= m.e_bound(i); ++n) sp.e[i].push_back(to_ring(m.e_pow(i, n)));
                for (int n = 1; n <= m.f_bound(i); ++n) sp.f[i].push_back(to_ring(m.f_pow(i, n)));
            }
        }
    }

    const RootDatum& datum() const { return rd_; }
    const R& ring() const { return ring_; }
    const WeylGroup& weyl() const { return weyl_; }
    std::size_t size() const { return modules_.size(); }
    const WeightModule& module(std::size_t k) const { return modules_[k]; }

    /// Index of a module by highest weight; -1 when absent.
    int module_index(const Weight& lam) const {
        for (std::size_t k = 0; k < modules_.size(); ++k)
            if (modules_[k].top == lam) return static_cast<int>(k);
        return -1;
    }

    Matrix<Elem> to_ring(const Matrix<Int>& m) const {
        Matrix<Elem> out(m.rows(), m.cols(), ring_.zero());
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c)
                if (m.at(r, c) != 0) out.at(r, c) = ring_.from_int(m.at(r, c));
        return out;
    }

    // --- generators --------------------------------------------------------

    Elt identity() const {
        Elt e;
        for (const auto& m : modules_) e.mats.push_back(mat_identity(ring_, m.dim()));
        return e;
    }

    Elt gen_x(int i, const Elem& h) const { return from_word({Token{Token::X, i, h, {}}}); }
    Elt gen_y(int i, const Elem& h) const { return from_word({Token{Token::Y, i, h, {}}}); }

    TorusChar<Elem> torus_char(std::vector<Elem> on_basis) const {
        for (const auto& v : on_basis)
            if (!ring_.inv(v)) throw NotInvertible("torus character value not invertible");
        return TorusChar<Elem>{std::move(on_basis)};
    }

    /// t_i(u): the character lambda -> u^(<i,lambda>).
    TorusChar<Elem> t_i_char(int i, const Elem& u) const {
        auto ui = ring_.inv(u);
        if (!ui) throw NotInvertible("t_i parameter not invertible");
        std::vector<Elem> vals;
        for (int b = 0; b < rd_.rank; ++b) {
            Weight e(rd_.rank, 0);
            e[b] = 1;
            vals.push_back(elem_pow(u, *ui, rd_.pair_i(i, e)));
        }
        return TorusChar<Elem>{std::move(vals)};
    }

    Elt gen_torus(const TorusChar<Elem>& chi) const {
        for (const auto& v : chi.on_basis)
            if (!ring_.inv(v)) throw NotInvertible("torus character value not invertible");
        return from_word({Token{Token::Torus, 0, ring_.zero(), chi.on_basis}});
    }

    Elt gen_t_i(int i, const Elem& u) const { return gen_torus(t_i_char(i, u)); }

    Elt s_prime(int i) const { return from_word({Token{Token::SPrime, i, ring_.zero(), {}}}); }
    Elt s_dblprime(int i) const {
        return from_word({Token{Token::SDblPrime, i, ring_.zero(), {}}});
    }

    /// w' and w'' lifted along a reduced word (well defined by the braid
    /// relations; the suites check independence of the word).
    Elt weyl_lift_prime(const std::vector<int>& word) const {
        Elt acc = identity();
        for (int i : word) acc = compose(acc, s_prime(i));
        return acc;
    }
    Elt weyl_lift_dblprime(const std::vector<int>& word) const {
        Elt acc = identity();
        for (int i : word) acc = compose(acc, s_dblprime(i));
        return acc;
    }

    // --- group operations ---------------------------------------------------

    Elt compose(const Elt& a, const Elt& b) const {
        Elt c;
        c.word = a.word;
        c.word.insert(c.word.end(), b.word.begin(), b.word.end());
        for (std::size_t k = 0; k < modules_.size(); ++k)
            c.mats.push_back(mat_mul(ring_, a.mats[k], b.mats[k]));
        return c;
    }

    Elt invert(const Elt& a) const {
        std::vector<Token> inv;
        for (auto it = a.word.rbegin(); it != a.word.rend(); ++it) inv.push_back(token_inverse(*it));
        return from_word(inv);
    }

    /// The involution omega on words: x <-> y, s' <-> s'', torus inverted.
    Elt omega(const Elt& a) const {
        std::vector<Token> w;
        for (const auto& t : a.word) {
            Token o = t;
            switch (t.kind) {
                case Token::X: o.kind = Token::Y; break;
                case Token::Y: o.kind = Token::X; break;
                case Token::SPrime: o.kind = Token::SDblPrime; break;
                case Token::SDblPrime: o.kind = Token::SPrime; break;
                case Token::Torus:
                    for (auto& v : o.chi) v = *ring_.inv(v);
                    break;
            }
            w.push_back(std::move(o));
        }
        return from_word(w);
    }

    bool equals(const Elt& a, const Elt& b) const {
        for (std::size_t k = 0; k < modules_.size(); ++k)
            if (!mat_equal(ring_, a.mats[k], b.mats[k])) return false;
        return true;
    }
    bool is_identity(const Elt& a) const {
        for (std::size_t k = 0; k < modules_.size(); ++k)
            if (!mat_is_identity(ring_, a.mats[k])) return false;
        return true;
    }

    // --- torus helpers ------------------------------------------------------

    Elem chi_value(const TorusChar<Elem>& chi, const Weight& lam) const {
        Elem acc = ring_.one();
        for (int b = 0; b < rd_.rank; ++b) {
            auto inv = ring_.inv(chi.on_basis[b]);
            acc = ring_.mul(acc, elem_pow(chi.on_basis[b], *inv, lam[b]));
        }
        return acc;
    }

    TorusChar<Elem> torus_mul(const TorusChar<Elem>& a, const TorusChar<Elem>& b) const {
        std::vector<Elem> v;
        for (int k = 0; k < rd_.rank; ++k) v.push_back(ring_.mul(a.on_basis[k], b.on_basis[k]));
        return TorusChar<Elem>{std::move(v)};
    }
    TorusChar<Elem> torus_inverse(const TorusChar<Elem>& a) const {
        std::vector<Elem> v;
        for (int k = 0; k < rd_.rank; ++k) v.push_back(*ring_.inv(a.on_basis[k]));
        return TorusChar<Elem>{std::move(v)};
    }

    /// w(chi): lambda -> chi(w^-1 lambda).
    TorusChar<Elem> conj_torus(const WeylElt& w, const TorusChar<Elem>& chi) const {
        std::vector<int> rev(w.word.rbegin(), w.word.rend());
        WeylElt winv = weyl_.evaluate(rev);
        std::vector<Elem> vals;
        for (int b = 0; b < rd_.rank; ++b) {
            Weight e(rd_.rank, 0);
            e[b] = 1;
            vals.push_back(chi_value(chi, winv.apply(e)));
        }
        return TorusChar<Elem>{std::move(vals)};
    }

    /// 4.9(a): conjugation of x_i(h) by a torus element, computed on the
    /// character side.
    Elt torus_conj_x(const TorusChar<Elem>& chi, int i, const Elem& h) const {
        return gen_x(i, ring_.mul(chi_value(chi, rd_.simple_X[i]), h));
    }

    /// Recognize a torus element: read chi off the highest-weight diagonal
    /// entries of the cone-generator modules and verify. Empty when g is not
    /// a torus element on this registry.
    std::optional<TorusChar<Elem>> to_torus_char(const Elt& g) const {
        const auto& gens = rd_.cone_gens;
        Matrix<Int> gmat(gens.size(), rd_.rank, Int(0));
        for (std::size_t r = 0; r < gens.size(); ++r)
            for (int c = 0; c < rd_.rank; ++c) gmat.at(r, c) = gens[r][c];
        std::vector<Elem> gen_vals;
        for (const auto& lam : gens) {
            int mi = module_index(lam);
            if (mi < 0) return std::nullopt;
            Elem v = g.mats[mi].at(modules_[mi].highest_index(), modules_[mi].highest_index());
            if (!ring_.inv(v)) return std::nullopt;
            gen_vals.push_back(v);
        }
        std::vector<Elem> chi_vals;
        for (int b = 0; b < rd_.rank; ++b) {
            std::vector<Int> e(rd_.rank, Int(0));
            e[b] = 1;
            auto sol = lattice_row_solve(gmat, e);
            if (!sol) return std::nullopt;
            Elem acc = ring_.one();
            for (std::size_t j = 0; j < gens.size(); ++j) {
                long c = (*sol)[j].get_si();
                Elem base = c >= 0 ? gen_vals[j] : *ring_.inv(gen_vals[j]);
                for (long s = 0; s < (c >= 0 ? c : -c); ++s) acc = ring_.mul(acc, base);
            }
            chi_vals.push_back(acc);
        }
        TorusChar<Elem> chi{chi_vals};
        if (!equals(gen_torus(chi), g)) return std::nullopt;
        return chi;
    }

    // --- matrices -----------------------------------------------------------

    Elt from_word(const std::vector<Token>& word) const {
        Elt e;
        e.word = word;
        for (std::size_t k = 0; k < modules_.size(); ++k) {
            auto acc = mat_identity(ring_, modules_[k].dim());
            for (const auto& t : word) acc = mat_mul(ring_, acc, token_matrix(k, t));
            e.mats.push_back(std::move(acc));
        }
        return e;
    }

    Matrix<Elem> token_matrix(std::size_t k, const Token& t) const {
        const auto& m = modules_[k];
        switch (t.kind) {
            case Token::X: {
                auto acc = mat_identity(ring_, m.dim());
                Elem hp = ring_.one();
                for (int n = 1; n <= m.e_bound(t.i); ++n) {
                    hp = ring_.mul(hp, t.h);
                    if (ring_.is_zero(hp)) break;
                    acc = mat_add(ring_, acc, mat_scale(ring_, hp, spec_[k].e[t.i][n - 1]));
                }
                return acc;
            }
            case Token::Y: {
                auto acc = mat_identity(ring_, m.dim());
                Elem hp = ring_.one();
                for (int n = 1; n <= m.f_bound(t.i); ++n) {
                    hp = ring_.mul(hp, t.h);
                    if (ring_.is_zero(hp)) break;
                    acc = mat_add(ring_, acc, mat_scale(ring_, hp, spec_[k].f[t.i][n - 1]));
                }
                return acc;
            }
            case Token::Torus: {
                Matrix<Elem> d(m.dim(), m.dim(), ring_.zero());
                TorusChar<Elem> chi{t.chi};
                for (int b = 0; b < m.dim(); ++b) d.at(b, b) = chi_value(chi, m.weights[b]);
                return d;
            }
            case Token::SPrime: {
                // y_i(1) x_i(-1) y_i(1)
                auto y1 = token_matrix(k, Token{Token::Y, t.i, ring_.one(), {}});
                auto xm = token_matrix(k, Token{Token::X, t.i, ring_.neg(ring_.one()), {}});
                return mat_mul(ring_, y1, mat_mul(ring_, xm, y1));
            }
            case Token::SDblPrime: {
                auto x1 = token_matrix(k, Token{Token::X, t.i, ring_.one(), {}});
                auto ym = token_matrix(k, Token{Token::Y, t.i, ring_.neg(ring_.one()), {}});
                return mat_mul(ring_, x1, mat_mul(ring_, ym, x1));
            }
        }
        throw std::logic_error("bad token");
    }

    Token token_inverse(const Token& t) const {
        Token o = t;
        switch (t.kind) {
            case Token::X:
            case Token::Y: o.h = ring_.neg(t.h); break;
            case Token::Torus:
                for (auto& v : o.chi) v = *ring_.inv(v);
                break;
            case Token::SPrime: o.kind = Token::SDblPrime; break;
            case Token::SDblPrime: o.kind = Token::SPrime; break;
        }
        return o;
    }

    /// Projection matrix (over the ring) onto the mu weight block of module k.
    Matrix<Elem> proj_matrix(std::size_t k, const Weight& mu) const {
        return to_ring(modules_[k].proj(mu));
    }

    /// True iff the matrix on module k is block-unipotent raising: identity
    /// on each weight block, and entries only where row-weight minus
    /// column-weight is a nonzero N-combination of simple roots.
    bool is_block_unipotent_raising(std::size_t k, const Matrix<Elem>& m) const {
        const auto& mod = modules_[k];
        for (int r = 0; r < mod.dim(); ++r)
            for (int c = 0; c < mod.dim(); ++c) {
                const Elem& x = m.at(r, c);
                if (mod.weights[r] == mod.weights[c]) {
                    const Elem want = (r == c) ? ring_.one() : ring_.zero();
                    if (!ring_.equal(x, want)) return false;
                } else if (!ring_.is_zero(x)) {
                    auto diff = weight_sub(mod.weights[r], mod.weights[c]);
                    auto coords = rd_.root_coords_nonneg(diff);
                    if (!coords || weight_is_zero(diff)) return false;
                }
            }
        return true;
    }
    bool is_block_unipotent_lowering(std::size_t k, const Matrix<Elem>& m) const {
        const auto& mod = modules_[k];
        for (int r = 0; r < mod.dim(); ++r)
            for (int c = 0; c < mod.dim(); ++c) {
                const Elem& x = m.at(r, c);
                if (mod.weights[r] == mod.weights[c]) {
                    const Elem want = (r == c) ? ring_.one() : ring_.zero();
                    if (!ring_.equal(x, want)) return false;
                } else if (!ring_.is_zero(x)) {
                    auto diff = weight_sub(mod.weights[c], mod.weights[r]);
                    auto coords = rd_.root_coords_nonneg(diff);
                    if (!coords || weight_is_zero(diff)) return false;
                }
            }
        return true;
    }

    static std::string weight_str(const Weight& w) {
        std::string s;
        for (std::size_t k = 0; k < w.size(); ++k) {
            if (k) s += ",";
            s += std::to_string(w[k]);
        }
        return s;
    }

  private:
    Elem elem_pow(const Elem& base, const Elem& base_inv, long e) const {
        Elem acc = ring_.one();
        const Elem& b = e >= 0 ? base : base_inv;
        long n = e >= 0 ? e : -e;
        for (long s = 0; s < n; ++s) acc = ring_.mul(acc, b);
        return acc;
    }

    struct SpecMats {
        std::vector<std::vector<Matrix<Elem>>> e, f;  // [i][n-1]
    };

    RootDatum rd_;
    R ring_;
    WeylGroup weyl_;
    std::vector<WeightModule> modules_;
    std::vector<SpecMats> spec_;
};

}  // namespace chevalg
