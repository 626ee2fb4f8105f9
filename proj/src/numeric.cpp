#include "lefib/numeric.hpp"

#include <algorithm>
#include <utility>

namespace lefib {

IntMat IntMat::identity(std::size_t n) {
    IntMat m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

IntMat IntMat::operator*(const IntMat& other) const {
    if (cols_ != other.rows_)
        throw DimensionError("matrix product: inner dimensions disagree");
    IntMat out(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& a = at(i, k);
            if (a == 0)
                continue;
            for (std::size_t j = 0; j < other.cols_; ++j)
                out.at(i, j) += a * other.at(k, j);
        }
    return out;
}

IntMat IntMat::transpose() const {
    IntMat out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            out.at(j, i) = at(i, j);
    return out;
}

IntVec IntMat::apply(const IntVec& v) const {
    if (v.size() != cols_)
        throw DimensionError("matrix-vector product: dimension mismatch");
    IntVec out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            out[i] += at(i, j) * v[j];
    return out;
}

IntMat standard_symplectic_form(std::size_t genus) {
    IntMat j(2 * genus, 2 * genus);
    for (std::size_t i = 0; i < genus; ++i) {
        j.at(2 * i, 2 * i + 1) = 1;
        j.at(2 * i + 1, 2 * i) = -1;
    }
    return j;
}

bool is_symplectic(const IntMat& m) {
    if (m.rows() != m.cols() || m.rows() % 2 != 0)
        return false;
    IntMat j = standard_symplectic_form(m.rows() / 2);
    return m.transpose() * j * m == j;
}

IntMat symplectic_inverse(const IntMat& m) {
    std::size_t g = m.rows() / 2;
    IntMat j = standard_symplectic_form(g);
    IntMat jinv(2 * g, 2 * g);  // J^{-1} = -J
    for (std::size_t i = 0; i < 2 * g; ++i)
        for (std::size_t k = 0; k < 2 * g; ++k)
            jinv.at(i, k) = -j.at(i, k);
    return jinv * m.transpose() * j;
}

Int gcd(Int a, Int b) {
    if (a < 0)
        a = -a;
    if (b < 0)
        b = -b;
    while (b != 0) {
        Int r = a % b;
        a = b;
        b = std::move(r);
    }
    return a;
}

std::vector<IntVec> integer_kernel_basis(const IntMat& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::vector<Rat>> a(rows, std::vector<Rat>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            a[i][j] = Rat(m.at(i, j));

    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pr = r;
        while (pr < rows && a[pr][c] == 0)
            ++pr;
        if (pr == rows)
            continue;
        std::swap(a[r], a[pr]);
        Rat pv = a[r][c];
        for (std::size_t j = 0; j < cols; ++j)
            a[r][j] /= pv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0)
                continue;
            Rat f = a[i][c];
            for (std::size_t j = 0; j < cols; ++j)
                a[i][j] -= f * a[r][j];
        }
        pivots.push_back(c);
        ++r;
    }

    std::vector<IntVec> basis;
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivots)
        is_pivot[c] = true;
    for (std::size_t fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc])
            continue;
        std::vector<Rat> v(cols);
        v[fc] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -a[i][fc];
        // clear denominators
        Int den = 1;
        for (const Rat& x : v)
            den = den / gcd(den, denominator(x)) * denominator(x);
        IntVec iv(cols);
        for (std::size_t j = 0; j < cols; ++j)
            iv[j] = numerator(v[j]) * (den / denominator(v[j]));
        basis.push_back(std::move(iv));
    }
    return basis;
}

int signature_of_symmetric(const std::vector<std::vector<Rat>>& q) {
    const std::size_t n = q.size();
    for (const auto& row : q)
        if (row.size() != n)
            throw DimensionError("signature: matrix not square");
    std::vector<std::vector<Rat>> m = q;

    auto add_row_col = [&](std::size_t dst, std::size_t src, const Rat& f) {
        for (std::size_t c = 0; c < n; ++c)
            m[dst][c] += f * m[src][c];
        for (std::size_t r = 0; r < n; ++r)
            m[r][dst] += f * m[r][src];
    };
    auto swap_row_col = [&](std::size_t a, std::size_t b) {
        std::swap(m[a], m[b]);
        for (std::size_t r = 0; r < n; ++r)
            std::swap(m[r][a], m[r][b]);
    };

    int pos = 0, neg = 0;
    for (std::size_t k = 0; k < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t j = k + 1;
            while (j < n && m[j][j] == 0)
                ++j;
            if (j < n) {
                swap_row_col(k, j);
            } else {
                j = k + 1;
                while (j < n && m[k][j] == 0)
                    ++j;
                if (j == n)
                    continue;  // row is zero in the remaining block
                add_row_col(k, j, 1);
            }
        }
        Rat p = m[k][k];
        if (p > 0)
            ++pos;
        else
            ++neg;
        for (std::size_t r = k + 1; r < n; ++r) {
            if (m[r][k] != 0)
                add_row_col(r, k, -m[r][k] / p);
        }
    }
    return pos - neg;
}

}  // namespace lefib
