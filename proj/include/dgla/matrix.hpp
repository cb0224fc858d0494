#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "dgla/rational.hpp"

namespace dgla {

using Vec = std::vector<Rat>;

inline bool is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}

// Exact rational matrix. Storage is a sorted triple list (row-major);
// structure constants are sparse, while elimination converts to dense because
// the blocks it meets are small. The density threshold picking the product
// algorithm is configurable per call.
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols) : rows_(rows), cols_(cols) {
        if (rows < 0 || cols < 0) throw StructuralError("negative matrix dimension");
    }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m.set(i, i, 1);
        return m;
    }

    static Mat from_rows(const std::vector<Vec>& rows) {
        int r = static_cast<int>(rows.size());
        int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
        Mat m(r, c);
        for (int i = 0; i < r; ++i) {
            if (static_cast<int>(rows[i].size()) != c)
                throw StructuralError("ragged rows in matrix literal");
            for (int j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
        }
        return m;
    }

    static Mat column(const Vec& v) {
        Mat m(static_cast<int>(v.size()), 1);
        for (int i = 0; i < static_cast<int>(v.size()); ++i) m.set(i, 0, v[i]);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::size_t nnz() const { return entries_.size(); }

    const Rat& at(int i, int j) const {
        check_index(i, j);
        auto it = entries_.find({i, j});
        static const Rat zero = 0;
        return it == entries_.end() ? zero : it->second;
    }

    void set(int i, int j, const Rat& v) {
        check_index(i, j);
        if (v == 0)
            entries_.erase({i, j});
        else
            entries_[{i, j}] = v;
    }

    void add_to(int i, int j, const Rat& v) { set(i, j, at(i, j) + v); }

    bool is_zero() const { return entries_.empty(); }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
    }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    Mat operator+(const Mat& o) const {
        require_same_shape(o, "+");
        Mat r = *this;
        for (const auto& [ij, v] : o.entries_) r.add_to(ij.first, ij.second, v);
        return r;
    }
    Mat operator-(const Mat& o) const {
        require_same_shape(o, "-");
        Mat r = *this;
        for (const auto& [ij, v] : o.entries_) r.add_to(ij.first, ij.second, -v);
        return r;
    }
    Mat operator*(const Rat& c) const {
        Mat r(rows_, cols_);
        if (c == 0) return r;
        for (const auto& [ij, v] : entries_) r.entries_[ij] = v * c;
        return r;
    }
    Mat operator-() const { return *this * Rat(-1); }

    // Product; sparse accumulation below the density threshold, dense above.
    Mat operator*(const Mat& o) const {
        if (cols_ != o.rows_)
            throw StructuralError("matrix product shape mismatch: " + shape() + " * " + o.shape());
        if (density() < kDenseThreshold && o.density() < kDenseThreshold) return sparse_mul(o);
        return dense_mul(o);
    }

    Vec apply(const Vec& v) const {
        if (static_cast<int>(v.size()) != cols_)
            throw StructuralError("matrix-vector shape mismatch");
        Vec out(rows_, Rat(0));
        for (const auto& [ij, c] : entries_) out[ij.first] += c * v[ij.second];
        return out;
    }

    Mat transpose() const {
        Mat r(cols_, rows_);
        for (const auto& [ij, v] : entries_) r.entries_[{ij.second, ij.first}] = v;
        return r;
    }

    Mat hcat(const Mat& o) const {
        if (rows_ != o.rows_) throw StructuralError("hcat row mismatch");
        Mat r(rows_, cols_ + o.cols_);
        r.entries_ = entries_;
        for (const auto& [ij, v] : o.entries_) r.entries_[{ij.first, ij.second + cols_}] = v;
        return r;
    }

    Mat vcat(const Mat& o) const {
        if (cols_ != o.cols_) throw StructuralError("vcat column mismatch");
        Mat r(rows_ + o.rows_, cols_);
        r.entries_ = entries_;
        for (const auto& [ij, v] : o.entries_) r.entries_[{ij.first + rows_, ij.second}] = v;
        return r;
    }

    Mat columns(const std::vector<int>& idx) const {
        Mat r(rows_, static_cast<int>(idx.size()));
        for (int j = 0; j < static_cast<int>(idx.size()); ++j)
            for (int i = 0; i < rows_; ++i) {
                const Rat& v = at(i, idx[j]);
                if (v != 0) r.set(i, j, v);
            }
        return r;
    }

    Vec col(int j) const {
        Vec v(rows_, Rat(0));
        for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
        return v;
    }

    std::vector<Vec> dense() const {
        std::vector<Vec> d(rows_, Vec(cols_, Rat(0)));
        for (const auto& [ij, v] : entries_) d[ij.first][ij.second] = v;
        return d;
    }

    // Reduced row echelon form; pivoting picks the first nonzero entry in
    // column order so all downstream basis choices are deterministic.
    struct Echelon {
        std::vector<Vec> mat;      // RREF, dense
        std::vector<int> pivots;   // pivot column per pivot row, increasing
    };

    Echelon rref() const {
        Echelon e;
        e.mat = dense();
        int lead = 0;
        for (int col = 0; col < cols_ && lead < rows_; ++col) {
            int piv = -1;
            for (int i = lead; i < rows_; ++i)
                if (e.mat[i][col] != 0) { piv = i; break; }
            if (piv < 0) continue;
            std::swap(e.mat[lead], e.mat[piv]);
            Rat inv = Rat(1) / e.mat[lead][col];
            for (int j = col; j < cols_; ++j) e.mat[lead][j] *= inv;
            for (int i = 0; i < rows_; ++i) {
                if (i == lead || e.mat[i][col] == 0) continue;
                Rat f = e.mat[i][col];
                for (int j = col; j < cols_; ++j) e.mat[i][j] -= f * e.mat[lead][j];
            }
            e.pivots.push_back(col);
            ++lead;
        }
        return e;
    }

    int rank() const { return static_cast<int>(rref().pivots.size()); }

    // Columns span ker; free variable j of the RREF yields the basis vector
    // with a 1 in position j. Deterministic.
    Mat kernel_basis() const {
        Echelon e = rref();
        std::vector<bool> is_pivot(cols_, false);
        for (int p : e.pivots) is_pivot[p] = true;
        std::vector<int> free_cols;
        for (int j = 0; j < cols_; ++j)
            if (!is_pivot[j]) free_cols.push_back(j);
        Mat k(cols_, static_cast<int>(free_cols.size()));
        for (int jj = 0; jj < static_cast<int>(free_cols.size()); ++jj) {
            int f = free_cols[jj];
            k.set(f, jj, 1);
            for (int prow = 0; prow < static_cast<int>(e.pivots.size()); ++prow)
                if (e.mat[prow][f] != 0) k.set(e.pivots[prow], jj, -e.mat[prow][f]);
        }
        return k;
    }

    // Particular solution of Ax = b with free variables set to zero, or
    // nullopt when inconsistent.
    std::optional<Vec> solve(const Vec& b) const {
        if (static_cast<int>(b.size()) != rows_) throw StructuralError("solve shape mismatch");
        Mat aug = hcat(Mat::column(b));
        Echelon e = aug.rref();
        for (int p : e.pivots)
            if (p == cols_) return std::nullopt;
        Vec x(cols_, Rat(0));
        for (int prow = 0; prow < static_cast<int>(e.pivots.size()); ++prow)
            x[e.pivots[prow]] = e.mat[prow][cols_];
        return x;
    }

    // Columnwise solve AX = B.
    std::optional<Mat> solve_matrix(const Mat& B) const {
        if (B.rows() != rows_) throw StructuralError("solve_matrix shape mismatch");
        Mat X(cols_, B.cols());
        for (int j = 0; j < B.cols(); ++j) {
            auto x = solve(B.col(j));
            if (!x) return std::nullopt;
            for (int i = 0; i < cols_; ++i) X.set(i, j, (*x)[i]);
        }
        return X;
    }

    std::optional<Mat> inverse() const {
        if (rows_ != cols_) return std::nullopt;
        Mat aug = hcat(identity(rows_));
        Echelon e = aug.rref();
        if (static_cast<int>(e.pivots.size()) != rows_) return std::nullopt;
        for (int i = 0; i < rows_; ++i)
            if (e.pivots[i] != i) return std::nullopt;
        Mat inv(rows_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < rows_; ++j)
                if (e.mat[i][rows_ + j] != 0) inv.set(i, j, e.mat[i][rows_ + j]);
        return inv;
    }

    // Indices of the lexicographically-first maximal independent column set
    // (the RREF pivot columns).
    std::vector<int> independent_columns() const { return rref().pivots; }

    double density() const {
        if (rows_ == 0 || cols_ == 0) return 0.0;
        return static_cast<double>(entries_.size()) / (static_cast<double>(rows_) * cols_);
    }

    std::string shape() const {
        return std::to_string(rows_) + "x" + std::to_string(cols_);
    }

    const std::map<std::pair<int, int>, Rat>& entries() const { return entries_; }

    static constexpr double kDenseThreshold = 0.25;

private:
    void check_index(int i, int j) const {
        if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
            throw StructuralError("matrix index out of range");
    }
    void require_same_shape(const Mat& o, const char* op) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw StructuralError(std::string("matrix shape mismatch in ") + op + ": " +
                                  shape() + " vs " + o.shape());
    }

    Mat sparse_mul(const Mat& o) const {
        Mat r(rows_, o.cols_);
        // group o's entries by row for the accumulation pass
        std::map<int, std::vector<std::pair<int, Rat>>> by_row;
        for (const auto& [ij, v] : o.entries_) by_row[ij.first].push_back({ij.second, v});
        for (const auto& [ij, v] : entries_) {
            auto it = by_row.find(ij.second);
            if (it == by_row.end()) continue;
            for (const auto& [k, w] : it->second) r.add_to(ij.first, k, v * w);
        }
        return r;
    }

    Mat dense_mul(const Mat& o) const {
        auto a = dense();
        auto b = o.dense();
        Mat r(rows_, o.cols());
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                if (a[i][k] == 0) continue;
                for (int j = 0; j < o.cols(); ++j)
                    if (b[k][j] != 0) r.add_to(i, j, a[i][k] * b[k][j]);
            }
        return r;
    }

    int rows_, cols_;
    std::map<std::pair<int, int>, Rat> entries_;
};

}  // namespace dgla
