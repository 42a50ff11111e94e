#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "chevalg/common.hpp"
#include "chevalg/matrix.hpp"

namespace chevalg {

struct NotReduced : std::runtime_error {
    explicit NotReduced(const std::string& what) : std::runtime_error(what) {}
};

/// Coordinates of a weight in the chosen basis of X (or of Y).
using Weight = std::vector<long>;

inline Weight weight_add(const Weight& a, const Weight& b) {
    Weight r(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) r[k] = a[k] + b[k];
    return r;
}
inline Weight weight_sub(const Weight& a, const Weight& b) {
    Weight r(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) r[k] = a[k] - b[k];
    return r;
}
inline Weight weight_neg(const Weight& a) {
    Weight r(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) r[k] = -a[k];
    return r;
}
inline bool weight_is_zero(const Weight& a) {
    return std::all_of(a.begin(), a.end(), [](long x) { return x == 0; });
}

/// A root datum: free abelian groups Y, X with a perfect pairing, a set I
/// of simple (co)roots embedded on both sides, and a symmetric positive
/// definite form on Z[I]. All data is given by integer matrices in fixed
/// bases and validated on load.
class RootDatum {
  public:
    int rank = 0;                           // rank of X and Y
    std::vector<std::vector<long>> pairing; // pairing[a][b] = <e_a, f_b>, e in Y, f in X
    std::vector<Weight> simple_Y;           // i  |-> coordinates in Y
    std::vector<Weight> simple_X;           // i' |-> coordinates in X
    std::vector<std::vector<long>> dot;     // i . j
    std::vector<Weight> cone_gens;          // monoid generators of X^+
    std::string name;

    int nI() const { return static_cast<int>(simple_Y.size()); }

    long pair(const Weight& y, const Weight& x) const {
        long s = 0;
        for (int a = 0; a < rank; ++a)
            for (int b = 0; b < rank; ++b) s += y[a] * pairing[a][b] * x[b];
        return s;
    }

    /// <i, lambda> for i in I.
    long pair_i(int i, const Weight& lam) const { return pair(simple_Y[i], lam); }

    /// s_i on X: lambda - <i,lambda> i'.
    Weight reflect(int i, const Weight& lam) const {
        long c = pair_i(i, lam);
        Weight r = lam;
        for (int k = 0; k < rank; ++k) r[k] -= c * simple_X[i][k];
        return r;
    }

    bool is_dominant(const Weight& lam) const {
        for (int i = 0; i < nI(); ++i)
            if (pair_i(i, lam) < 0) return false;
        return true;
    }

    /// d_i = i.i/2 (the symmetrizing factors, v_i = v^{d_i}).
    long d(int i) const { return dot[i][i] / 2; }

    /// Express lambda as a rational N-combination of the i'; empty when
    /// lambda is not a nonnegative integral combination.
    std::optional<std::vector<long>> root_coords_nonneg(const Weight& lam) const;

    /// lambda' <= lambda in the dominance order.
    bool dominance_leq(const Weight& lo, const Weight& hi) const {
        return root_coords_nonneg(weight_sub(hi, lo)).has_value();
    }

    /// Positive coroots as N[I]-coefficient vectors, closed under the Weyl
    /// group action; simple coroots come first.
    std::vector<std::vector<long>> positive_coroots() const;

    /// Weyl dimension formula for a dominant weight.
    Int weyl_dim(const Weight& lam) const;

    void validate() const;

    static RootDatum preset(const std::string& name);
    static const std::vector<std::string>& preset_names();
    /// Load from a preset name or a JSON config string (see from_json).
    static RootDatum load(const std::string& preset_or_json);
    static RootDatum from_json_text(const std::string& text);
};

/// An element of the Weyl group: the matrix of its action on X plus the
/// lexicographically least reduced word (found by breadth-first search).
struct WeylElt {
    std::vector<int> word;            // reduced
    std::vector<std::vector<long>> mat;  // action on X, column convention: (w x)_a = sum_b mat[a][b] x_b

    int length() const { return static_cast<int>(word.size()); }

    Weight apply(const Weight& x) const {
        int r = static_cast<int>(mat.size());
        Weight out(r, 0);
        for (int a = 0; a < r; ++a)
            for (int b = 0; b < r; ++b) out[a] += mat[a][b] * x[b];
        return out;
    }

    bool operator==(const WeylElt& o) const { return mat == o.mat; }
};

/// The (finite) Weyl group, fully enumerated at construction.
class WeylGroup {
  public:
    explicit WeylGroup(const RootDatum& rd);

    const RootDatum& datum() const { return rd_; }
    std::size_t order() const { return elts_.size(); }
    const WeylElt& identity() const { return elts_[id_index_]; }
    const WeylElt& longest() const { return elts_[w0_index_]; }
    const std::vector<WeylElt>& elements() const { return elts_; }

    /// Evaluate a word (not necessarily reduced).
    WeylElt evaluate(const std::vector<int>& word) const;
    bool is_reduced(const std::vector<int>& word) const {
        return evaluate(word).length() == static_cast<int>(word.size());
    }
    /// true iff both words evaluate to the same element.
    bool braid_equal(const std::vector<int>& w1, const std::vector<int>& w2) const {
        return evaluate(w1) == evaluate(w2);
    }

    /// Order n_ij of s_i s_j.
    int nij(int i, int j) const;

    /// All reduced words for w (exponential; meant for small groups).
    std::vector<std::vector<int>> reduced_words(const WeylElt& w) const;

    /// lambda_k = s_{i_1} ... s_{i_{k-1}} (i'_k) for a reduced word for w0.
    std::vector<Weight> root_sequence(const std::vector<int>& word) const;

  private:
    RootDatum rd_;
    std::vector<WeylElt> elts_;
    std::map<std::vector<long>, std::size_t> index_;  // flattened matrix -> index
    std::size_t id_index_ = 0, w0_index_ = 0;

    static std::vector<long> key_of(const std::vector<std::vector<long>>& m);
};

// ---------------------------------------------------------------------------

inline std::optional<std::vector<long>> RootDatum::root_coords_nonneg(const Weight& lam) const {
    // Solve sum_i c_i <j, i'> = <j, lam> over Q, then verify integrality,
    // nonnegativity, and that the combination reproduces lam exactly.
    RatRing q;
    int n = nI();
    Matrix<Rat> a(n, n, Rat(0));
    std::vector<Rat> b(n, Rat(0));
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) a.at(j, i) = Rat(pair_i(j, simple_X[i]));
        b[j] = Rat(pair_i(j, lam));
    }
    auto x = mat_solve(q, a, b);
    if (!x) return std::nullopt;
    std::vector<long> c(n);
    for (int i = 0; i < n; ++i) {
        Rat v = (*x)[i];
        if (v.get_den() != 1 || v < 0) return std::nullopt;
        if (!v.get_num().fits_slong_p()) return std::nullopt;
        c[i] = v.get_num().get_si();
    }
    Weight sum(rank, 0);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < rank; ++k) sum[k] += c[i] * simple_X[i][k];
    if (sum != lam) return std::nullopt;
    return c;
}

inline std::vector<std::vector<long>> RootDatum::positive_coroots() const {
    int n = nI();
    std::set<std::vector<long>> all;
    std::vector<std::vector<long>> queue;
    for (int i = 0; i < n; ++i) {
        std::vector<long> e(n, 0);
        e[i] = 1;
        all.insert(e);
        queue.push_back(e);
    }
    // close the set of coroot coefficient vectors under all reflections
    while (!queue.empty()) {
        auto c = queue.back();
        queue.pop_back();
        for (int j = 0; j < n; ++j) {
            long v = 0;
            for (int i = 0; i < n; ++i) v += c[i] * pair_i(i, simple_X[j]);
            auto c2 = c;
            c2[j] -= v;
            if (all.insert(c2).second) queue.push_back(c2);
        }
    }
    std::vector<std::vector<long>> pos;
    for (int i = 0; i < n; ++i) {
        std::vector<long> e(n, 0);
        e[i] = 1;
        pos.push_back(e);
    }
    for (const auto& c : all) {
        if (std::all_of(c.begin(), c.end(), [](long x) { return x >= 0; })) {
            long h = 0;
            for (long x : c) h += x;
            if (h > 1) pos.push_back(c);
        }
    }
    return pos;
}

inline Int RootDatum::weyl_dim(const Weight& lam) const {
    Rat dim(1);
    for (const auto& c : positive_coroots()) {
        long val = 0, ht = 0;
        for (int i = 0; i < nI(); ++i) {
            val += c[i] * pair_i(i, lam);
            ht += c[i];
        }
        dim *= Rat(val + ht, ht);
    }
    dim.canonicalize();
    if (dim.get_den() != 1) throw std::logic_error("weyl_dim: non-integral result");
    return dim.get_num();
}

inline void RootDatum::validate() const {
    int n = nI();
    if (rank <= 0) throw InvalidDatum("rank must be positive");
    if (static_cast<int>(pairing.size()) != rank) throw InvalidDatum("pairing must be rank x rank");
    for (const auto& row : pairing)
        if (static_cast<int>(row.size()) != rank) throw InvalidDatum("pairing must be rank x rank");
    if (simple_X.size() != simple_Y.size() || static_cast<int>(dot.size()) != n)
        throw InvalidDatum("inconsistent |I|");
    // perfect pairing: unimodular matrix
    {
        RatRing q;
        Matrix<Rat> p(rank, rank, Rat(0));
        Int det = 1;
        Matrix<Int> m(rank, rank, Int(0));
        for (int a = 0; a < rank; ++a)
            for (int b = 0; b < rank; ++b) m.at(a, b) = pairing[a][b];
        // integer determinant by fraction-free expansion through Q
        for (int a = 0; a < rank; ++a)
            for (int b = 0; b < rank; ++b) p.at(a, b) = Rat(pairing[a][b]);
        // compute det via elimination
        Rat dq(1);
        for (int col = 0; col < rank; ++col) {
            int piv = -1;
            for (int i = col; i < rank; ++i)
                if (p.at(i, col) != 0) { piv = i; break; }
            if (piv < 0) { dq = 0; break; }
            if (piv != col) {
                for (int j = 0; j < rank; ++j) std::swap(p.at(piv, j), p.at(col, j));
                dq = -dq;
            }
            dq *= p.at(col, col);
            for (int i = col + 1; i < rank; ++i) {
                Rat f = p.at(i, col) / p.at(col, col);
                for (int j = col; j < rank; ++j) p.at(i, j) -= f * p.at(col, j);
            }
        }
        if (dq != 1 && dq != -1) throw InvalidDatum("pairing is not unimodular");
        (void)det;
    }
    for (int i = 0; i < n; ++i) {
        if (dot[i][i] <= 0 || dot[i][i] % 2 != 0) throw InvalidDatum("i.i must be in 2Z_{>0}");
        if (pair_i(i, simple_X[i]) != 2) throw InvalidDatum("<i,i'> must equal 2");
        for (int j = 0; j < n; ++j) {
            if (dot[i][j] != dot[j][i]) throw InvalidDatum("dot form must be symmetric");
            if (i != j) {
                long aij = pair_i(i, simple_X[j]);
                if (aij > 0) throw InvalidDatum("<i,j'> must be in -N for i != j");
                if (2 * dot[i][j] != aij * dot[i][i])
                    throw InvalidDatum("<i,j'> must equal 2 i.j / i.i");
            }
        }
    }
    // positive definiteness: all leading principal minors positive
    for (int k = 1; k <= n; ++k) {
        Matrix<Rat> m(k, k, Rat(0));
        for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b) m.at(a, b) = Rat(dot[a][b]);
        Rat det(1);
        for (int col = 0; col < k; ++col) {
            int piv = -1;
            for (int i = col; i < k; ++i)
                if (m.at(i, col) != 0) { piv = i; break; }
            if (piv < 0) { det = 0; break; }
            if (piv != col) {
                for (int j = 0; j < k; ++j) std::swap(m.at(piv, j), m.at(col, j));
                det = -det;
            }
            det *= m.at(col, col);
            for (int i = col + 1; i < k; ++i) {
                Rat f = m.at(i, col) / m.at(col, col);
                for (int j = col; j < k; ++j) m.at(i, j) -= f * m.at(col, j);
            }
        }
        if (det <= 0) throw InvalidDatum("(i.j) is not positive definite");
    }
    for (const auto& g : cone_gens) {
        if (static_cast<int>(g.size()) != rank) throw InvalidDatum("bad cone generator");
        if (!is_dominant(g)) throw InvalidDatum("cone generator is not dominant");
    }
}

// ---------------------------------------------------------------------------

inline std::vector<long> WeylGroup::key_of(const std::vector<std::vector<long>>& m) {
    std::vector<long> k;
    for (const auto& row : m) k.insert(k.end(), row.begin(), row.end());
    return k;
}

inline WeylGroup::WeylGroup(const RootDatum& rd) : rd_(rd) {
    int r = rd.rank, n = rd.nI();
    std::vector<std::vector<std::vector<long>>> gens(n);
    for (int i = 0; i < n; ++i) {
        // matrix of s_i on X
        std::vector<std::vector<long>> m(r, std::vector<long>(r, 0));
        for (int a = 0; a < r; ++a) m[a][a] = 1;
        for (int b = 0; b < r; ++b) {
            Weight e(r, 0);
            e[b] = 1;
            long c = rd.pair_i(i, e);
            for (int a = 0; a < r; ++a) m[a][b] -= c * rd.simple_X[i][a];
        }
        gens[i] = m;
    }
    std::vector<std::vector<long>> id(r, std::vector<long>(r, 0));
    for (int a = 0; a < r; ++a) id[a][a] = 1;

    elts_.push_back(WeylElt{{}, id});
    index_[key_of(id)] = 0;
    std::vector<std::size_t> frontier{0};
    const std::size_t budget = 2000000;
    while (!frontier.empty()) {
        // visiting frontier elements in order of their (lex-sorted) words and
        // generators in ascending order yields the lex-least reduced word on
        // first discovery
        std::sort(frontier.begin(), frontier.end(), [&](std::size_t a, std::size_t b) {
            return elts_[a].word < elts_[b].word;
        });
        std::vector<std::size_t> next;
        for (std::size_t idx : frontier) {
            for (int i = 0; i < n; ++i) {
                auto w = elts_[idx];
                // left multiply? use right multiplication w * s_i: matrix product mat(w)*mat(s_i)
                std::vector<std::vector<long>> m(r, std::vector<long>(r, 0));
                for (int a = 0; a < r; ++a)
                    for (int b = 0; b < r; ++b)
                        for (int c = 0; c < r; ++c) m[a][b] += w.mat[a][c] * gens[i][c][b];
                auto k = key_of(m);
                if (index_.count(k)) continue;
                WeylElt e;
                e.word = w.word;
                e.word.push_back(i);
                e.mat = m;
                index_[k] = elts_.size();
                next.push_back(elts_.size());
                elts_.push_back(std::move(e));
                if (elts_.size() > budget) throw BudgetExceeded("Weyl group too large");
            }
        }
        frontier = std::move(next);
    }
    w0_index_ = 0;
    for (std::size_t k = 0; k < elts_.size(); ++k)
        if (elts_[k].length() > elts_[w0_index_].length()) w0_index_ = k;
}

inline WeylElt WeylGroup::evaluate(const std::vector<int>& word) const {
    int r = rd_.rank;
    auto cur = identity().mat;
    for (int i : word) {
        // multiply on the right by s_i
        std::vector<std::vector<long>> m(r, std::vector<long>(r, 0));
        // s_i matrix on X applied to columns of cur: compute cur * S_i
        for (int b = 0; b < r; ++b) {
            Weight e(r, 0);
            e[b] = 1;
            Weight col = rd_.reflect(i, e);  // S_i e_b
            for (int a = 0; a < r; ++a)
                for (int c = 0; c < r; ++c) m[a][b] += cur[a][c] * col[c];
        }
        cur = m;
    }
    auto it = index_.find(key_of(cur));
    if (it == index_.end()) throw std::logic_error("word evaluates outside the group");
    return elts_[it->second];
}

inline int WeylGroup::nij(int i, int j) const {
    std::vector<int> word;
    for (int n = 1; n <= 64; ++n) {
        word.push_back(i);
        word.push_back(j);
        if (evaluate(word).length() == 0) return n;
    }
    throw std::logic_error("n_ij not found");
}

inline std::vector<std::vector<int>> WeylGroup::reduced_words(const WeylElt& w) const {
    if (w.length() == 0) return {{}};
    std::vector<std::vector<int>> out;
    for (int i = 0; i < rd_.nI(); ++i) {
        // right descent: l(w s_i) < l(w)
        auto word = w.word;
        word.push_back(i);
        auto ws = evaluate(word);
        if (ws.length() < w.length()) {
            for (auto& sub : reduced_words(ws)) {
                sub.push_back(i);
                out.push_back(std::move(sub));
            }
        }
    }
    return out;
}

inline std::vector<Weight> WeylGroup::root_sequence(const std::vector<int>& word) const {
    if (!is_reduced(word)) throw NotReduced("word is not reduced");
    if (evaluate(word).length() != longest().length())
        throw NotReduced("word does not evaluate to the longest element");
    std::vector<Weight> seq;
    for (std::size_t k = 0; k < word.size(); ++k) {
        Weight lam = rd_.simple_X[word[k]];
        for (std::size_t j = k; j-- > 0;) lam = rd_.reflect(word[j], lam);
        seq.push_back(lam);
    }
    return seq;
}

// ---------------------------------------------------------------------------
// Presets.

namespace detail {
inline RootDatum make_datum(std::string name, int rank,
                            std::vector<std::vector<long>> pairing,
                            std::vector<Weight> simple_Y, std::vector<Weight> simple_X,
                            std::vector<std::vector<long>> dot, std::vector<Weight> cone) {
    RootDatum rd;
    rd.name = std::move(name);
    rd.rank = rank;
    rd.pairing = std::move(pairing);
    rd.simple_Y = std::move(simple_Y);
    rd.simple_X = std::move(simple_X);
    rd.dot = std::move(dot);
    rd.cone_gens = std::move(cone);
    rd.validate();
    return rd;
}
}  // namespace detail

inline const std::vector<std::string>& RootDatum::preset_names() {
    static const std::vector<std::string> names{"A1-sc", "A1-ad", "A1xA1-sc",
                                                "A2-sc", "A2-ad", "B2-sc"};
    return names;
}

inline RootDatum RootDatum::preset(const std::string& name) {
    using detail::make_datum;
    if (name == "A1-sc")
        return make_datum(name, 1, {{1}}, {{1}}, {{2}}, {{2}}, {{1}});
    if (name == "A1-ad")
        return make_datum(name, 1, {{1}}, {{2}}, {{1}}, {{2}}, {{1}});
    if (name == "A1xA1-sc")
        return make_datum(name, 2, {{1, 0}, {0, 1}}, {{1, 0}, {0, 1}},
                          {{2, 0}, {0, 2}}, {{2, 0}, {0, 2}}, {{1, 0}, {0, 1}});
    if (name == "A2-sc")
        return make_datum(name, 2, {{1, 0}, {0, 1}}, {{1, 0}, {0, 1}},
                          {{2, -1}, {-1, 2}}, {{2, -1}, {-1, 2}}, {{1, 0}, {0, 1}});
    if (name == "A2-ad")
        return make_datum(name, 2, {{1, 0}, {0, 1}}, {{2, -1}, {-1, 2}},
                          {{1, 0}, {0, 1}}, {{2, -1}, {-1, 2}},
                          {{1, 1}, {2, 1}, {1, 2}});
    if (name == "B2-sc")
        return make_datum(name, 2, {{1, 0}, {0, 1}}, {{1, 0}, {0, 1}},
                          {{2, -2}, {-1, 2}}, {{4, -2}, {-2, 2}}, {{1, 0}, {0, 1}});
    throw InvalidDatum("unknown preset: " + name);
}

}  // namespace chevalg
