#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "dgla/matrix.hpp"

namespace dgla {

// Sign and grading conventions, fixed here once and used everywhere:
//
//   * grading is cohomological: differentials raise degree by 1;
//   * shift:  C[r]^n = C^{n+r}  with differential  (-1)^r d;
//   * Hom complex:  D(f) = d_W . f - (-1)^{|f|} f . d_V  on Hom^*(V, W);
//   * tensor with a graded algebra:  d(a (x) g) = da (x) g + (-1)^{|a|} a (x) dg,
//     products pick up the Koszul sign  (a (x) g)(b (x) h) = (-1)^{|g||b|} ab (x) gh;
//   * the simplex integral uses coordinates (t_1..t_n), measure dt_1...dt_n,
//     forms reordered to that basis with the Koszul sign, so that on the
//     1-simplex  \int dt_1 = 1.

// Finite-dimensional Z-graded vector space over the rationals, given by its
// per-degree dimensions. Degrees with dimension zero are not stored. Basis
// labels are optional and purely cosmetic.
class GradedVectorSpace {
public:
    GradedVectorSpace() = default;

    void set_dim(int degree, int dim) {
        if (dim < 0) throw StructuralError("negative dimension");
        if (dim == 0) {
            dims_.erase(degree);
            labels_.erase(degree);
        } else {
            dims_[degree] = dim;
        }
    }

    void set_labels(int degree, std::vector<std::string> names) {
        if (static_cast<int>(names.size()) != dim(degree))
            throw StructuralError("label count does not match dimension in degree " +
                                  std::to_string(degree));
        labels_[degree] = std::move(names);
    }

    int dim(int degree) const {
        auto it = dims_.find(degree);
        return it == dims_.end() ? 0 : it->second;
    }

    const std::map<int, int>& dims() const { return dims_; }

    std::vector<int> support() const {
        std::vector<int> s;
        for (const auto& [deg, d] : dims_) s.push_back(deg);
        return s;
    }

    int total_dim() const {
        int t = 0;
        for (const auto& [deg, d] : dims_) t += d;
        return t;
    }

    std::string label(int degree, int index) const {
        auto it = labels_.find(degree);
        if (it != labels_.end() && index < static_cast<int>(it->second.size()))
            return it->second[index];
        return "e" + std::to_string(index) + "^" + std::to_string(degree);
    }

    const std::map<int, std::vector<std::string>>& labels() const { return labels_; }

    GradedVectorSpace shifted(int r) const {
        GradedVectorSpace s;
        for (const auto& [deg, d] : dims_) s.set_dim(deg - r, d);
        for (const auto& [deg, names] : labels_) s.labels_[deg - r] = names;
        return s;
    }

    bool operator==(const GradedVectorSpace& o) const { return dims_ == o.dims_; }
    bool operator!=(const GradedVectorSpace& o) const { return !(*this == o); }

private:
    std::map<int, int> dims_;
    std::map<int, std::vector<std::string>> labels_;
};

// Degree-r linear map between graded spaces, stored blockwise: block(n) is
// the dim(target, n+r) x dim(source, n) matrix of the component C^n -> D^{n+r}.
// Blocks where either side is zero-dimensional are implicit zeros.
class GradedLinearMap {
public:
    GradedLinearMap() : degree_(0) {}
    GradedLinearMap(GradedVectorSpace source, GradedVectorSpace target, int degree)
        : source_(std::move(source)), target_(std::move(target)), degree_(degree) {}

    static GradedLinearMap zero(const GradedVectorSpace& src, const GradedVectorSpace& tgt,
                                int degree) {
        return GradedLinearMap(src, tgt, degree);
    }

    static GradedLinearMap identity(const GradedVectorSpace& s) {
        GradedLinearMap f(s, s, 0);
        for (const auto& [deg, d] : s.dims()) f.set_block(deg, Mat::identity(d));
        return f;
    }

    const GradedVectorSpace& source() const { return source_; }
    const GradedVectorSpace& target() const { return target_; }
    int degree() const { return degree_; }

    Mat block(int n) const {
        auto it = blocks_.find(n);
        if (it != blocks_.end()) return it->second;
        return Mat(target_.dim(n + degree_), source_.dim(n));
    }

    void set_block(int n, const Mat& m) {
        if (m.rows() != target_.dim(n + degree_) || m.cols() != source_.dim(n))
            throw StructuralError("block shape mismatch in degree " + std::to_string(n) +
                                  ": got " + m.shape() + ", want " +
                                  std::to_string(target_.dim(n + degree_)) + "x" +
                                  std::to_string(source_.dim(n)));
        if (m.is_zero())
            blocks_.erase(n);
        else
            blocks_[n] = m;
    }

    Vec apply(int n, const Vec& v) const { return block(n).apply(v); }

    bool is_zero() const {
        for (const auto& [n, b] : blocks_)
            if (!b.is_zero()) return false;
        return true;
    }

    GradedLinearMap operator+(const GradedLinearMap& o) const {
        require_parallel(o, "+");
        GradedLinearMap r(source_, target_, degree_);
        std::set<int> degs;
        for (const auto& [n, b] : blocks_) degs.insert(n);
        for (const auto& [n, b] : o.blocks_) degs.insert(n);
        for (int n : degs) r.set_block(n, block(n) + o.block(n));
        return r;
    }
    GradedLinearMap operator-(const GradedLinearMap& o) const {
        require_parallel(o, "-");
        GradedLinearMap r(source_, target_, degree_);
        std::set<int> degs;
        for (const auto& [n, b] : blocks_) degs.insert(n);
        for (const auto& [n, b] : o.blocks_) degs.insert(n);
        for (int n : degs) r.set_block(n, block(n) - o.block(n));
        return r;
    }
    GradedLinearMap operator*(const Rat& c) const {
        GradedLinearMap r(source_, target_, degree_);
        for (const auto& [n, b] : blocks_) r.set_block(n, b * c);
        return r;
    }

    bool operator==(const GradedLinearMap& o) const {
        if (source_ != o.source_ || target_ != o.target_ || degree_ != o.degree_) return false;
        return (*this - o).is_zero();
    }

    const std::map<int, Mat>& blocks() const { return blocks_; }

private:
    void require_parallel(const GradedLinearMap& o, const char* op) const {
        if (source_ != o.source_ || target_ != o.target_ || degree_ != o.degree_)
            throw StructuralError(std::string("graded map mismatch in ") + op);
    }

    GradedVectorSpace source_, target_;
    int degree_;
    std::map<int, Mat> blocks_;
};

// f . g, degrees add; blockwise exact product.
inline GradedLinearMap compose(const GradedLinearMap& f, const GradedLinearMap& g) {
    if (f.source() != g.target())
        throw StructuralError("compose: source/target mismatch");
    GradedLinearMap r(g.source(), f.target(), f.degree() + g.degree());
    for (const auto& [n, d] : g.source().dims()) {
        Mat gb = g.block(n);
        Mat fb = f.block(n + g.degree());
        if (fb.rows() == 0 || fb.cols() == 0 || gb.rows() == 0) continue;
        r.set_block(n, fb * gb);
    }
    return r;
}

}  // namespace dgla
