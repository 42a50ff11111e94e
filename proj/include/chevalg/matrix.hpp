#pragma once

#include <cassert>
#include <optional>
#include <vector>

#include "chevalg/rings.hpp"

namespace chevalg {

/// Dense matrix over an arbitrary coefficient type. All arithmetic is done
/// through a ring object (see rings.hpp); Matrix itself is storage only.
template <typename T>
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T())
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix transposed() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

  private:
    std::size_t rows_, cols_;
    std::vector<T> data_;
};

template <CoeffRing R>
Matrix<typename R::Elem> mat_identity(const R& ring, std::size_t n) {
    Matrix<typename R::Elem> m(n, n, ring.zero());
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = ring.one();
    return m;
}

template <CoeffRing R>
Matrix<typename R::Elem> mat_mul(const R& ring, const Matrix<typename R::Elem>& a,
                                 const Matrix<typename R::Elem>& b) {
    assert(a.cols() == b.rows());
    Matrix<typename R::Elem> c(a.rows(), b.cols(), ring.zero());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (ring.is_zero(a.at(i, k))) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c.at(i, j) = ring.add(c.at(i, j), ring.mul(a.at(i, k), b.at(k, j)));
        }
    return c;
}

template <CoeffRing R>
Matrix<typename R::Elem> mat_add(const R& ring, const Matrix<typename R::Elem>& a,
                                 const Matrix<typename R::Elem>& b) {
    assert(a.rows() == b.rows() && a.cols() == b.cols());
    Matrix<typename R::Elem> c(a.rows(), a.cols(), ring.zero());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = ring.add(a.at(i, j), b.at(i, j));
    return c;
}

template <CoeffRing R>
Matrix<typename R::Elem> mat_scale(const R& ring, const typename R::Elem& s,
                                   const Matrix<typename R::Elem>& a) {
    Matrix<typename R::Elem> c(a.rows(), a.cols(), ring.zero());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = ring.mul(s, a.at(i, j));
    return c;
}

template <CoeffRing R>
bool mat_equal(const R& ring, const Matrix<typename R::Elem>& a,
               const Matrix<typename R::Elem>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!ring.equal(a.at(i, j), b.at(i, j))) return false;
    return true;
}

template <CoeffRing R>
bool mat_is_identity(const R& ring, const Matrix<typename R::Elem>& a) {
    if (a.rows() != a.cols()) return false;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const auto& want = (i == j) ? ring.one() : ring.zero();
            if (!ring.equal(a.at(i, j), want)) return false;
        }
    return true;
}

/// Gauss-Jordan inverse over a field (or any ring where every nonzero pivot
/// encountered happens to be invertible; returns nullopt otherwise).
template <CoeffRing R>
std::optional<Matrix<typename R::Elem>> mat_inverse(const R& ring,
                                                    Matrix<typename R::Elem> a) {
    assert(a.rows() == a.cols());
    const std::size_t n = a.rows();
    auto inv = mat_identity(ring, n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && ring.is_zero(a.at(piv, col))) ++piv;
        if (piv == n) return std::nullopt;
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a.at(piv, j), a.at(col, j));
                std::swap(inv.at(piv, j), inv.at(col, j));
            }
        }
        auto pinv = ring.inv(a.at(col, col));
        if (!pinv) return std::nullopt;
        for (std::size_t j = 0; j < n; ++j) {
            a.at(col, j) = ring.mul(*pinv, a.at(col, j));
            inv.at(col, j) = ring.mul(*pinv, inv.at(col, j));
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || ring.is_zero(a.at(i, col))) continue;
            auto f = a.at(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                a.at(i, j) = ring.sub(a.at(i, j), ring.mul(f, a.at(col, j)));
                inv.at(i, j) = ring.sub(inv.at(i, j), ring.mul(f, inv.at(col, j)));
            }
        }
    }
    return inv;
}

/// Row-echelon rank over a field.
template <CoeffRing R>
std::size_t mat_rank(const R& ring, Matrix<typename R::Elem> a) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < a.cols() && rank < a.rows(); ++col) {
        std::size_t piv = rank;
        while (piv < a.rows() && ring.is_zero(a.at(piv, col))) ++piv;
        if (piv == a.rows()) continue;
        if (piv != rank)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(piv, j), a.at(rank, j));
        auto pinv = ring.inv(a.at(rank, col));
        assert(pinv);
        for (std::size_t i = rank + 1; i < a.rows(); ++i) {
            if (ring.is_zero(a.at(i, col))) continue;
            auto f = ring.mul(a.at(i, col), *pinv);
            for (std::size_t j = col; j < a.cols(); ++j)
                a.at(i, j) = ring.sub(a.at(i, j), ring.mul(f, a.at(rank, j)));
        }
        ++rank;
    }
    return rank;
}

/// Solve A x = b over a field. Returns nullopt when inconsistent; when the
/// system is underdetermined an arbitrary solution is produced.
template <CoeffRing R>
std::optional<std::vector<typename R::Elem>> mat_solve(const R& ring,
                                                       Matrix<typename R::Elem> a,
                                                       std::vector<typename R::Elem> b) {
    assert(a.rows() == b.size());
    const std::size_t n = a.rows(), m = a.cols();
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m && rank < n; ++col) {
        std::size_t piv = rank;
        while (piv < n && ring.is_zero(a.at(piv, col))) ++piv;
        if (piv == n) continue;
        if (piv != rank) {
            for (std::size_t j = 0; j < m; ++j) std::swap(a.at(piv, j), a.at(rank, j));
            std::swap(b[piv], b[rank]);
        }
        auto pinv = ring.inv(a.at(rank, col));
        if (!pinv) return std::nullopt;
        for (std::size_t j = 0; j < m; ++j) a.at(rank, j) = ring.mul(*pinv, a.at(rank, j));
        b[rank] = ring.mul(*pinv, b[rank]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == rank || ring.is_zero(a.at(i, col))) continue;
            auto f = a.at(i, col);
            for (std::size_t j = 0; j < m; ++j)
                a.at(i, j) = ring.sub(a.at(i, j), ring.mul(f, a.at(rank, j)));
            b[i] = ring.sub(b[i], ring.mul(f, b[rank]));
        }
        pivot_col.push_back(col);
        ++rank;
    }
    for (std::size_t i = rank; i < n; ++i)
        if (!ring.is_zero(b[i])) return std::nullopt;
    std::vector<typename R::Elem> x(m, ring.zero());
    for (std::size_t i = 0; i < rank; ++i) x[pivot_col[i]] = b[i];
    return x;
}

// ---------------------------------------------------------------------------
// Integer lattice utilities (Hermite normal form on rows).

/// In-place row HNF: rows span the same lattice afterwards; zero rows are
/// dropped, pivots are positive and entries above a pivot are reduced into
/// [0, pivot). The result is the canonical basis of the row lattice.
inline Matrix<Int> hnf_rows(Matrix<Int> a) {
    const std::size_t n = a.rows(), m = a.cols();
    std::size_t r = 0;
    for (std::size_t col = 0; col < m && r < n; ++col) {
        // Euclid out column `col` below row r
        while (true) {
            std::size_t best = n;
            for (std::size_t i = r; i < n; ++i)
                if (a.at(i, col) != 0 &&
                    (best == n || abs(a.at(i, col)) < abs(a.at(best, col))))
                    best = i;
            if (best == n) break;
            if (best != r)
                for (std::size_t j = 0; j < m; ++j) std::swap(a.at(best, j), a.at(r, j));
            if (a.at(r, col) < 0)
                for (std::size_t j = 0; j < m; ++j) a.at(r, j) = -a.at(r, j);
            bool again = false;
            for (std::size_t i = r + 1; i < n; ++i) {
                if (a.at(i, col) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), a.at(i, col).get_mpz_t(), a.at(r, col).get_mpz_t());
                for (std::size_t j = 0; j < m; ++j) a.at(i, j) -= q * a.at(r, j);
                if (a.at(i, col) != 0) again = true;
            }
            if (!again) break;
        }
        if (a.at(r, col) == 0) continue;
        // reduce entries above the pivot
        for (std::size_t i = 0; i < r; ++i) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), a.at(i, col).get_mpz_t(), a.at(r, col).get_mpz_t());
            if (q != 0)
                for (std::size_t j = 0; j < m; ++j) a.at(i, j) -= q * a.at(r, j);
        }
        ++r;
    }
    Matrix<Int> out(r, m, Int(0));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < m; ++j) out.at(i, j) = a.at(i, j);
    return out;
}

/// Reduce v against an HNF basis; returns the residue (zero iff v lies in
/// the row lattice of h).
inline std::vector<Int> hnf_reduce(const Matrix<Int>& h, std::vector<Int> v) {
    std::size_t row = 0;
    for (std::size_t col = 0; col < h.cols() && row < h.rows(); ++col) {
        if (h.at(row, col) == 0) continue;  // not a pivot column for this row
        // find the pivot row whose first nonzero is at `col`
        // (rows are in order, pivots strictly to the right as row increases)
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), v[col].get_mpz_t(), h.at(row, col).get_mpz_t());
        if (q != 0)
            for (std::size_t j = 0; j < h.cols(); ++j) v[j] -= q * h.at(row, j);
        ++row;
    }
    return v;
}

inline bool hnf_contains(const Matrix<Int>& h, const std::vector<Int>& v) {
    auto r = hnf_reduce(h, v);
    for (const auto& x : r)
        if (x != 0) return false;
    return true;
}

/// Row HNF with a unimodular transform: returns (H, U) with H = U A; zero
/// rows are kept so U stays square.
inline std::pair<Matrix<Int>, Matrix<Int>> hnf_rows_transform(Matrix<Int> a) {
    const std::size_t n = a.rows(), m = a.cols();
    Matrix<Int> u(n, n, Int(0));
    for (std::size_t i = 0; i < n; ++i) u.at(i, i) = 1;
    std::size_t r = 0;
    for (std::size_t col = 0; col < m && r < n; ++col) {
        while (true) {
            std::size_t best = n;
            for (std::size_t i = r; i < n; ++i)
                if (a.at(i, col) != 0 && (best == n || abs(a.at(i, col)) < abs(a.at(best, col))))
                    best = i;
            if (best == n) break;
            if (best != r)
                for (std::size_t j = 0; j < m || j < n; ++j) {
                    if (j < m) std::swap(a.at(best, j), a.at(r, j));
                    if (j < n) std::swap(u.at(best, j), u.at(r, j));
                }
            if (a.at(r, col) < 0)
                for (std::size_t j = 0; j < m || j < n; ++j) {
                    if (j < m) a.at(r, j) = -a.at(r, j);
                    if (j < n) u.at(r, j) = -u.at(r, j);
                }
            bool again = false;
            for (std::size_t i = r + 1; i < n; ++i) {
                if (a.at(i, col) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), a.at(i, col).get_mpz_t(), a.at(r, col).get_mpz_t());
                for (std::size_t j = 0; j < m; ++j) a.at(i, j) -= q * a.at(r, j);
                for (std::size_t j = 0; j < n; ++j) u.at(i, j) -= q * u.at(r, j);
                if (a.at(i, col) != 0) again = true;
            }
            if (!again) break;
        }
        if (a.at(r, col) == 0) continue;
        for (std::size_t i = 0; i < r; ++i) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), a.at(i, col).get_mpz_t(), a.at(r, col).get_mpz_t());
            if (q != 0) {
                for (std::size_t j = 0; j < m; ++j) a.at(i, j) -= q * a.at(r, j);
                for (std::size_t j = 0; j < n; ++j) u.at(i, j) -= q * u.at(r, j);
            }
        }
        ++r;
    }
    return {a, u};
}

/// Integer solve x A = target (x a row vector) when target lies in the row
/// lattice of A; nullopt otherwise.
inline std::optional<std::vector<Int>> lattice_row_solve(const Matrix<Int>& a,
                                                         const std::vector<Int>& target) {
    auto [h, u] = hnf_rows_transform(a);
    std::vector<Int> t = target;
    std::vector<Int> y(a.rows(), Int(0));
    std::size_t row = 0;
    for (std::size_t col = 0; col < h.cols() && row < h.rows(); ++col) {
        if (h.at(row, col) == 0) continue;
        Int q = t[col] / h.at(row, col);
        if (q * h.at(row, col) != t[col]) return std::nullopt;
        y[row] = q;
        for (std::size_t j = 0; j < h.cols(); ++j) t[j] -= q * h.at(row, j);
        ++row;
    }
    for (const auto& x : t)
        if (x != 0) return std::nullopt;
    std::vector<Int> out(a.rows(), Int(0));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.rows(); ++k) out[i] += y[k] * u.at(k, i);
    return out;
}

}  // namespace chevalg
