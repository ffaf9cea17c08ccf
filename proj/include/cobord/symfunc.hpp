#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <string>
#include <vector>

#include "cobord/integer.hpp"
#include "cobord/linalg.hpp"
#include "cobord/partition.hpp"

namespace cobord {

/* Exact symmetric-function kernel in degree n: conversions between the
 * elementary basis e_l (= Chern-class monomials c_{l1}...c_{lk}) and the
 * monomial basis m_mu, plus Newton power sums.
 *
 * The workhorse is multiplication of an m-expanded symmetric function by
 * e_k. Writing everything in >= deg variables, the coefficient of m_nu in
 * m_mu * e_k counts the 0-1 vectors eps with |eps| = k, nu - eps >= 0 and
 * sort(nu - eps) = mu. Positions of nu holding equal values are
 * interchangeable, so the count factors into binomials over the blocks of
 * equal parts. The result does not depend on the number of variables once
 * it is at least the degree.
 */

namespace detail {

// f is homogeneous of degree d in the m-basis (keys are partitions of d,
// zero values absent); returns f * e_k of degree d + k.
inline std::map<Partition, Integer> multiply_by_elementary(
    const std::map<Partition, Integer>& f, int d, int k) {
    std::map<Partition, Integer> out;
    if (k == 0) return f;
    for (const Partition& nu : partitions_of(d + k)) {
        // blocks of equal parts: value -> multiplicity
        std::vector<std::pair<int, int>> blocks;
        for (int p : nu.parts()) {
            if (!blocks.empty() && blocks.back().first == p) {
                ++blocks.back().second;
            } else {
                blocks.emplace_back(p, 1);
            }
        }
        Integer acc = 0;
        std::vector<int> taken(blocks.size(), 0);
        // choose how many parts of each block are decremented by one
        std::function<void(size_t, int, Integer)> walk =
            [&](size_t b, int left, Integer ways) {
                if (b == blocks.size()) {
                    if (left != 0) return;
                    std::vector<int> mu_parts;
                    for (size_t i = 0; i < blocks.size(); ++i) {
                        const auto [v, m] = blocks[i];
                        for (int c = 0; c < taken[i]; ++c)
                            if (v - 1 > 0) mu_parts.push_back(v - 1);
                        for (int c = 0; c < m - taken[i]; ++c) mu_parts.push_back(v);
                    }
                    auto it = f.find(Partition(std::move(mu_parts)));
                    if (it != f.end()) acc += ways * it->second;
                    return;
                }
                const auto [v, m] = blocks[b];
                (void)v;
                for (int j = 0; j <= std::min(m, left); ++j) {
                    taken[b] = j;
                    walk(b + 1, left - j, ways * binomial(m, j));
                }
                taken[b] = 0;
            };
        walk(0, k, 1);
        if (acc != 0) out[nu] = acc;
    }
    return out;
}

} // namespace detail

// Square integer matrix of a basis change in degree n, rows and columns
// indexed by the partitions of n in canonical order.
class BasisMatrix {
public:
    BasisMatrix(int degree, std::vector<std::vector<Integer>> rows)
        : degree_(degree), index_(partitions_of(degree)), rows_(std::move(rows)) {
        if (rows_.size() != index_.size())
            throw InternalError("basis matrix size mismatch");
        for (size_t i = 0; i < index_.size(); ++i) pos_[index_[i]] = i;
    }

    int degree() const noexcept { return degree_; }
    const std::vector<Partition>& index() const noexcept { return index_; }
    const std::vector<std::vector<Integer>>& rows() const noexcept { return rows_; }

    const Integer& at(const Partition& row, const Partition& col) const {
        return rows_[position(row)][position(col)];
    }

    size_t position(const Partition& p) const {
        auto it = pos_.find(p);
        if (it == pos_.end()) throw InternalError("partition outside matrix degree");
        return it->second;
    }

    // y[row] = sum_col M[row][col] * x[col]; missing x entries are zero.
    std::map<Partition, Integer> apply(const std::map<Partition, Integer>& x) const {
        std::vector<Integer> xv(index_.size(), 0);
        for (const auto& [p, v] : x) xv[position(p)] = v;
        std::map<Partition, Integer> y;
        for (size_t r = 0; r < index_.size(); ++r) {
            Integer s = 0;
            for (size_t c = 0; c < index_.size(); ++c)
                if (xv[c] != 0 && rows_[r][c] != 0) s += rows_[r][c] * xv[c];
            if (s != 0) y[index_[r]] = s;
        }
        return y;
    }

private:
    int degree_;
    std::vector<Partition> index_;
    std::vector<std::vector<Integer>> rows_;
    std::map<Partition, size_t> pos_;
};

// Row lambda = expansion of e_lambda = e_{l1}...e_{lk} in the m_mu basis.
inline const BasisMatrix& e_to_m_matrix(int n) {
    if (n < 0) throw ValidationError("e_to_m_matrix: degree must be >= 0");
    static std::map<int, BasisMatrix> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    const auto idx = partitions_of(n);
    std::map<Partition, size_t> pos;
    for (size_t i = 0; i < idx.size(); ++i) pos[idx[i]] = i;

    std::vector<std::vector<Integer>> rows(idx.size(), std::vector<Integer>(idx.size(), 0));
    for (size_t r = 0; r < idx.size(); ++r) {
        std::map<Partition, Integer> f{{Partition(), 1}};
        int d = 0;
        for (int part : idx[r].parts()) {
            f = detail::multiply_by_elementary(f, d, part);
            d += part;
        }
        for (const auto& [mu, c] : f) rows[r][pos.at(mu)] = c;
    }
    return cache.emplace(n, BasisMatrix(n, std::move(rows))).first->second;
}

// Exact integer inverse of e_to_m_matrix(n); exists since both families
// are integral bases (the determinant is +-1).
inline const BasisMatrix& m_to_e_matrix(int n) {
    static std::map<int, BasisMatrix> cache;
    static std::mutex mutex;
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    const BasisMatrix& fwd = e_to_m_matrix(n);
    const size_t sz = fwd.index().size();
    RationalMatrix a(sz, RationalVector(sz, 0));
    for (size_t r = 0; r < sz; ++r)
        for (size_t c = 0; c < sz; ++c) a[r][c] = Rational(fwd.rows()[r][c]);
    auto inv = invert(std::move(a));
    if (!inv) throw InternalError("e/m basis matrix is singular");
    std::vector<std::vector<Integer>> rows(sz, std::vector<Integer>(sz, 0));
    for (size_t r = 0; r < sz; ++r) {
        for (size_t c = 0; c < sz; ++c) {
            if (denominator((*inv)[r][c]) != 1)
                throw InternalError("e/m basis inverse is not integral");
            rows[r][c] = numerator((*inv)[r][c]);
        }
    }
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    return cache.emplace(n, BasisMatrix(n, std::move(rows))).first->second;
}

/* Homogeneous integer polynomial in c_1..c_n, keyed by partitions: the
 * partition (l1,...,lk) stands for the monomial c_{l1}...c_{lk}. Zero
 * coefficients are never stored.
 */
class SymPolynomial {
public:
    explicit SymPolynomial(int degree) : degree_(degree) {}

    static SymPolynomial monomial(const Partition& p, Integer coeff) {
        SymPolynomial s(p.weight());
        if (coeff != 0) s.coeffs_[p] = std::move(coeff);
        return s;
    }

    int degree() const noexcept { return degree_; }
    const std::map<Partition, Integer>& coeffs() const noexcept { return coeffs_; }

    Integer coeff(const Partition& p) const {
        auto it = coeffs_.find(p);
        return it == coeffs_.end() ? Integer(0) : it->second;
    }

    void add_term(const Partition& p, const Integer& c) {
        if (p.weight() != degree_)
            throw DimensionMismatchError("term degree does not match polynomial degree");
        Integer& slot = coeffs_[p];
        slot += c;
        if (slot == 0) coeffs_.erase(p);
    }

    SymPolynomial& operator+=(const SymPolynomial& o) {
        if (o.degree_ != degree_)
            throw DimensionMismatchError("cannot add polynomials of different degree");
        for (const auto& [p, c] : o.coeffs_) add_term(p, c);
        return *this;
    }

    SymPolynomial scaled(const Integer& k) const {
        SymPolynomial s(degree_);
        if (k != 0)
            for (const auto& [p, c] : coeffs_) s.coeffs_[p] = c * k;
        return s;
    }

    // Multiply by the single class c_i (append a part to every monomial).
    SymPolynomial times_c(int i) const {
        SymPolynomial s(degree_ + i);
        for (const auto& [p, c] : coeffs_) s.coeffs_[p.merged(Partition::single(i))] = c;
        return s;
    }

    // Evaluate on a table of Chern numbers: sum of coeff * value(lambda).
    Integer evaluate(const std::map<Partition, Integer>& values) const {
        Integer s = 0;
        for (const auto& [p, c] : coeffs_) {
            auto it = values.find(p);
            if (it != values.end()) s += c * it->second;
        }
        return s;
    }

    // Lines "lambda: coefficient" in canonical order.
    std::string to_string() const {
        std::ostringstream out;
        for (const auto& [p, c] : coeffs_) out << p.to_string() << ": " << c << "\n";
        return out.str();
    }

private:
    int degree_;
    std::map<Partition, Integer> coeffs_;
};

// The power sum p_n written in c_1..c_n via Newton's identities; this is
// the Milnor-number polynomial s_n (s_1 = c_1, s_2 = c_1^2 - 2 c_2, ...).
inline SymPolynomial newton_polynomial(int n) {
    if (n < 1) throw ValidationError("newton_polynomial: n must be >= 1");
    std::vector<SymPolynomial> p;
    p.reserve(n + 1);
    p.emplace_back(0); // unused degree-0 slot
    for (int k = 1; k <= n; ++k) {
        SymPolynomial pk = SymPolynomial::monomial(
            Partition::single(k), (k % 2 == 1) ? Integer(k) : Integer(-k));
        for (int i = 1; i <= k - 1; ++i) {
            const SymPolynomial term = p[k - i].times_c(i);
            pk += (i % 2 == 1) ? term : term.scaled(-1);
        }
        p.push_back(std::move(pk));
    }
    return p[n];
}

} // namespace cobord
