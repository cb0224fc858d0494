#pragma once

// Test-only oracles, deliberately independent of the library's matrix code:
// plain dense Gaussian elimination and triple-loop products on
// vector<vector<Rat>>. Expected values in the suites are frozen against these.

#include <random>
#include <vector>

#include "dgla/rational.hpp"

namespace oracle {

using dgla::Rat;
using Dense = std::vector<std::vector<Rat>>;

inline Dense naive_mul(const Dense& a, const Dense& b) {
    size_t n = a.size(), m = a.empty() ? 0 : a[0].size(), p = b.empty() ? 0 : b[0].size();
    Dense c(n, std::vector<Rat>(p, Rat(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < p; ++j)
            for (size_t k = 0; k < m; ++k) c[i][j] += a[i][k] * b[k][j];
    return c;
}

inline int naive_rank(Dense m) {
    if (m.empty() || m[0].empty()) return 0;
    size_t rows = m.size(), cols = m[0].size();
    int rank = 0;
    size_t lead = 0;
    for (size_t col = 0; col < cols && lead < rows; ++col) {
        size_t piv = lead;
        while (piv < rows && m[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[lead]);
        for (size_t i = 0; i < rows; ++i) {
            if (i == lead || m[i][col] == 0) continue;
            Rat f = m[i][col] / m[lead][col];
            for (size_t j = col; j < cols; ++j) m[i][j] -= f * m[lead][j];
        }
        ++lead;
        ++rank;
    }
    return rank;
}

// Deterministic small-rational generator for property-style tests.
class Rng {
public:
    explicit Rng(unsigned seed) : gen_(seed) {}

    int uniform(int lo, int hi) {
        std::uniform_int_distribution<int> d(lo, hi);
        return d(gen_);
    }

    Rat rational(int num_range = 5, int den_range = 3) {
        int num = uniform(-num_range, num_range);
        int den = uniform(1, den_range);
        return Rat(num, den);
    }

    Dense matrix(int rows, int cols, int num_range = 5) {
        Dense m(rows, std::vector<Rat>(cols, Rat(0)));
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) m[i][j] = rational(num_range);
        return m;
    }

private:
    std::mt19937 gen_;
};

}  // namespace oracle
