#ifndef NLF_HOMOLOGY_HPP
#define NLF_HOMOLOGY_HPP

// Exact integer symplectic linear algebra on H_1 of a closed orientable
// surface of genus k, in the ordered basis a_1, b_1, ..., a_k, b_k with
// <a_i, b_i> = +1.
//
// Conventions used throughout the library:
//   * a right-handed twist about gamma acts as x -> x + <x, gamma> gamma;
//   * a word l_1 ... l_n acts by the matrix M(l_n) ... M(l_1), i.e. the
//     leftmost letter is applied first.

#include <nlf/error.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace nlf {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Rank-2k lattice H_1(Sigma_k; Z) with its standard symplectic basis.
struct Lattice {
    int genus = 0;

    constexpr std::size_t rank() const noexcept { return 2 * static_cast<std::size_t>(genus); }

    /// Basis label for coordinate `index` ("a1", "b1", "a2", ...).
    std::string label(std::size_t index) const {
        return (index % 2 == 0 ? "a" : "b") + std::to_string(index / 2 + 1);
    }

    friend bool operator==(const Lattice&, const Lattice&) = default;
};

/// A homology class, stored as its coordinate vector.
class HClass {
public:
    HClass() = default;
    explicit HClass(std::size_t rank) : coeffs_(rank) {}
    explicit HClass(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {}
    HClass(std::initializer_list<long long> coeffs) {
        coeffs_.reserve(coeffs.size());
        for (long long c : coeffs) coeffs_.emplace_back(c);
    }

    /// The basis vector a_i (1-based) of the genus-k lattice.
    static HClass a(int k, int i) { return unit(k, 2 * static_cast<std::size_t>(i - 1)); }
    /// The basis vector b_i (1-based) of the genus-k lattice.
    static HClass b(int k, int i) { return unit(k, 2 * static_cast<std::size_t>(i - 1) + 1); }
    static HClass unit(int k, std::size_t index) {
        HClass v(2 * static_cast<std::size_t>(k));
        v.coeffs_.at(index) = 1;
        return v;
    }

    std::size_t size() const noexcept { return coeffs_.size(); }
    const Integer& operator[](std::size_t i) const { return coeffs_[i]; }
    Integer& operator[](std::size_t i) { return coeffs_[i]; }
    const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }

    bool is_zero() const {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c == 0; });
    }

    /// gcd of the coefficients (0 for the zero class).
    Integer content() const {
        Integer g = 0;
        for (const auto& c : coeffs_) g = boost::multiprecision::gcd(g, abs(c));
        return g;
    }

    bool is_primitive() const { return content() == 1; }

    /// Representative of {v, -v} whose first nonzero coefficient is positive.
    HClass canonical() const {
        for (const auto& c : coeffs_) {
            if (c != 0) return c > 0 ? *this : -*this;
        }
        return *this;
    }

    HClass operator-() const {
        HClass r(*this);
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    HClass& operator+=(const HClass& o) {
        require_same_size(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        return *this;
    }
    HClass& operator-=(const HClass& o) {
        require_same_size(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        return *this;
    }
    friend HClass operator+(HClass x, const HClass& y) { return x += y; }
    friend HClass operator-(HClass x, const HClass& y) { return x -= y; }
    friend HClass operator*(const Integer& s, HClass x) {
        for (auto& c : x.coeffs_) c *= s;
        return x;
    }

    friend bool operator==(const HClass&, const HClass&) = default;
    friend bool operator<(const HClass& x, const HClass& y) { return x.coeffs_ < y.coeffs_; }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (i) s += ' ';
            s += coeffs_[i].str();
        }
        return s;
    }

private:
    void require_same_size(const HClass& o) const {
        if (o.size() != size())
            throw DimensionError("homology classes of rank " + std::to_string(size()) + " and " +
                                 std::to_string(o.size()) + " cannot be combined");
    }

    std::vector<Integer> coeffs_;
};

/// Dense square integer matrix acting on column vectors.
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(std::size_t n) : n_(n), data_(n * n) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    /// Builds a matrix from row-major entries; the count must be a perfect square.
    static Matrix from_rows(std::span<const Integer> entries) {
        std::size_t n = 0;
        while (n * n < entries.size()) ++n;
        if (n * n != entries.size())
            throw DimensionError(std::to_string(entries.size()) + " entries do not form a square matrix");
        Matrix m(n);
        std::copy(entries.begin(), entries.end(), m.data_.begin());
        return m;
    }
    static Matrix from_rows(std::initializer_list<long long> entries) {
        std::vector<Integer> v(entries.begin(), entries.end());
        return from_rows(std::span<const Integer>(v));
    }

    /// Matrix whose j-th column is `columns[j]`.
    static Matrix from_columns(std::span<const HClass> columns) {
        Matrix m(columns.size());
        for (std::size_t j = 0; j < columns.size(); ++j) {
            if (columns[j].size() != columns.size()) throw DimensionError("column length does not match matrix size");
            for (std::size_t i = 0; i < columns.size(); ++i) m(i, j) = columns[j][i];
        }
        return m;
    }

    std::size_t size() const noexcept { return n_; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }
    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
    const std::vector<Integer>& entries() const noexcept { return data_; }

    HClass column(std::size_t c) const {
        HClass v(n_);
        for (std::size_t r = 0; r < n_; ++r) v[r] = (*this)(r, c);
        return v;
    }

    bool is_identity() const { return *this == identity(n_); }

    Integer trace() const {
        Integer t = 0;
        for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
        return t;
    }

    Matrix transpose() const {
        Matrix t(n_);
        for (std::size_t r = 0; r < n_; ++r)
            for (std::size_t c = 0; c < n_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        if (x.n_ != y.n_)
            throw DimensionError("cannot multiply matrices of size " + std::to_string(x.n_) + " and " +
                                 std::to_string(y.n_));
        Matrix p(x.n_);
        for (std::size_t r = 0; r < x.n_; ++r) {
            for (std::size_t k = 0; k < x.n_; ++k) {
                const Integer& xrk = x(r, k);
                if (xrk == 0) continue;
                for (std::size_t c = 0; c < x.n_; ++c) p(r, c) += xrk * y(k, c);
            }
        }
        return p;
    }

    friend HClass operator*(const Matrix& m, const HClass& v) {
        if (m.n_ != v.size())
            throw DimensionError("matrix of size " + std::to_string(m.n_) + " cannot act on a class of rank " +
                                 std::to_string(v.size()));
        HClass out(m.n_);
        for (std::size_t r = 0; r < m.n_; ++r)
            for (std::size_t c = 0; c < m.n_; ++c) out[r] += m(r, c) * v[c];
        return out;
    }

    friend Matrix operator-(const Matrix& x, const Matrix& y) {
        if (x.n_ != y.n_) throw DimensionError("matrix size mismatch");
        Matrix d(x.n_);
        for (std::size_t i = 0; i < d.data_.size(); ++i) d.data_[i] = x.data_[i] - y.data_[i];
        return d;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<Integer> data_;
};

/// Genus of the lattice a class or matrix of the given rank lives in.
inline int genus_of_rank(std::size_t rank) {
    if (rank % 2 != 0) throw DimensionError("odd rank " + std::to_string(rank) + " is not a symplectic lattice");
    return static_cast<int>(rank / 2);
}

/// The pairing matrix Q with <x, y> = x^T Q y.
inline Matrix pairing_matrix(int k) {
    Matrix q(2 * static_cast<std::size_t>(k));
    for (std::size_t i = 0; i < q.size(); i += 2) {
        q(i, i + 1) = 1;
        q(i + 1, i) = -1;
    }
    return q;
}

/// Algebraic intersection number <x, y>.
inline Integer pairing(const HClass& x, const HClass& y) {
    if (x.size() != y.size())
        throw DimensionError("pairing of classes with ranks " + std::to_string(x.size()) + " and " +
                             std::to_string(y.size()));
    genus_of_rank(x.size());
    Integer s = 0;
    for (std::size_t i = 0; i < x.size(); i += 2) s += x[i] * y[i + 1] - x[i + 1] * y[i];
    return s;
}

namespace detail {
// Matrix of x -> x + sign <x, gamma> gamma.
inline Matrix signed_transvection(const HClass& gamma, int sign) {
    genus_of_rank(gamma.size());
    if (gamma.is_zero()) throw InvariantError("transvection about the zero class is undefined");
    const std::size_t n = gamma.size();
    Matrix m = Matrix::identity(n);
    for (std::size_t j = 0; j < n; ++j) {
        // <e_j, gamma>
        const Integer p = (j % 2 == 0) ? gamma[j + 1] : -gamma[j - 1];
        if (p == 0) continue;
        for (std::size_t i = 0; i < n; ++i) m(i, j) += sign * p * gamma[i];
    }
    return m;
}
} // namespace detail

/// Homology action of the right-handed Dehn twist about gamma: x -> x + <x, gamma> gamma.
inline Matrix transvection(const HClass& gamma) { return detail::signed_transvection(gamma, +1); }

/// Inverse twist: x -> x - <x, gamma> gamma.
inline Matrix inverse_transvection(const HClass& gamma) { return detail::signed_transvection(gamma, -1); }

/// Product of the matrices of letters l_1 ... l_n, returned as M(l_n) ... M(l_1).
/// An empty sequence of rank `rank` yields the identity.
inline Matrix compose_word_matrices(std::span<const Matrix> ms, std::size_t rank) {
    Matrix acc = Matrix::identity(rank);
    for (const auto& m : ms) {
        if (m.size() != rank)
            throw DimensionError("word letter of rank " + std::to_string(m.size()) + " in a word of rank " +
                                 std::to_string(rank));
        acc = m * acc;
    }
    return acc;
}

inline Matrix compose_word_matrices(std::span<const Matrix> ms) {
    return compose_word_matrices(ms, ms.empty() ? 0 : ms.front().size());
}

/// <Mx, My> = sign * <x, y> on every basis pair.
inline bool scales_pairing(const Matrix& m, int sign) {
    const Matrix q = pairing_matrix(genus_of_rank(m.size()));
    Matrix expected = q;
    if (sign < 0) expected = Matrix(q.size()) - q;
    return m.transpose() * q * m == expected;
}

inline bool is_symplectic(const Matrix& m) { return scales_pairing(m, +1); }
inline bool is_anti_symplectic(const Matrix& m) { return scales_pairing(m, -1); }

/// Exact inverse over the integers. Throws InvariantError unless |det| = 1.
inline Matrix inverse(const Matrix& m) {
    const std::size_t n = m.size();
    std::vector<Rational> a(n * 2 * n);
    auto at = [&](std::size_t r, std::size_t c) -> Rational& { return a[r * 2 * n + c]; };
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) at(r, c) = Rational(m(r, c));
        at(r, n + r) = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && at(piv, col) == 0) ++piv;
        if (piv == n) throw InvariantError("matrix is singular, so it is not unimodular");
        if (piv != col)
            for (std::size_t c = 0; c < 2 * n; ++c) std::swap(at(piv, c), at(col, c));
        const Rational p = at(col, col);
        for (std::size_t c = 0; c < 2 * n; ++c) at(col, c) /= p;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || at(r, col) == 0) continue;
            const Rational f = at(r, col);
            for (std::size_t c = 0; c < 2 * n; ++c) at(r, c) -= f * at(col, c);
        }
    }
    Matrix inv(n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            const Rational& v = at(r, n + c);
            if (denominator(v) != 1) throw InvariantError("matrix is not unimodular (inverse is not integral)");
            inv(r, c) = numerator(v);
        }
    }
    return inv;
}

/// N M N^{-1}. For symplectic N and M = transvection(gamma) this is transvection(N gamma).
inline Matrix conjugate(const Matrix& m, const Matrix& n) {
    if (m.size() != n.size()) throw DimensionError("conjugation of matrices of different size");
    return n * m * inverse(n);
}

/// Coefficients of det(xI - M), leading coefficient first (always 1).
/// Faddeev-LeVerrier; every division is exact over the integers.
inline std::vector<Integer> characteristic_polynomial(const Matrix& m) {
    const std::size_t n = m.size();
    std::vector<Integer> coeffs(n + 1);
    coeffs[0] = 1;
    Matrix aux(n);
    for (std::size_t k = 1; k <= n; ++k) {
        Matrix next = m * aux;
        for (std::size_t i = 0; i < n; ++i) next(i, i) += coeffs[k - 1];
        aux = std::move(next);
        const Integer t = (m * aux).trace();
        coeffs[k] = -t / static_cast<long long>(k);
    }
    return coeffs;
}

/// Homology action of the deck transformation of the orientation double cover.
/// Holds only matrices that are involutions, anti-symplectic and traceless.
class DeckInvolution {
public:
    explicit DeckInvolution(Matrix j) : j_(std::move(j)) {
        genus_of_rank(j_.size());
        if (!(j_ * j_).is_identity()) throw InvariantError("deck matrix is not an involution");
        if (!is_anti_symplectic(j_)) throw InvariantError("deck matrix is not anti-symplectic");
        if (j_.trace() != 0) throw InvariantError("deck matrix has nonzero trace");
    }

    const Matrix& matrix() const noexcept { return j_; }
    int genus() const { return static_cast<int>(j_.size() / 2); }
    HClass operator()(const HClass& x) const { return j_ * x; }

    /// J M = M J.
    bool commutes_with(const Matrix& m) const { return j_ * m == m * j_; }

private:
    Matrix j_;
};

/// The handle-swapping involution a_i -> a_{k+1-i}, b_i -> -b_{k+1-i}.
inline DeckInvolution deck_involution(int k) {
    if (k < 0) throw InvariantError("cover genus must be non-negative");
    const std::size_t n = 2 * static_cast<std::size_t>(k);
    Matrix j(n);
    for (int i = 1; i <= k; ++i) {
        const auto src = static_cast<std::size_t>(i - 1);
        const auto dst = static_cast<std::size_t>(k - i);
        j(2 * dst, 2 * src) = 1;
        j(2 * dst + 1, 2 * src + 1) = -1;
    }
    return DeckInvolution(std::move(j));
}

struct HClassHash {
    std::size_t operator()(const HClass& v) const {
        std::size_t h = v.size();
        for (const auto& c : v.coeffs()) h = h * 1000003u ^ std::hash<std::string>{}(c.str());
        return h;
    }
};

} // namespace nlf

#endif // NLF_HOMOLOGY_HPP
