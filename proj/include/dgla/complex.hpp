#pragma once

#include <optional>

#include "dgla/graded.hpp"

namespace dgla {

// Cochain complex: graded space with a degree +1 differential squaring to
// zero. d.d = 0 is asserted block-by-block at construction.
class CochainComplex {
public:
    CochainComplex() = default;
    CochainComplex(GradedVectorSpace space, GradedLinearMap d)
        : space_(std::move(space)), d_(std::move(d)) {
        if (d_.degree() != 1) throw StructuralError("differential must have degree +1");
        if (d_.source() != space_ || d_.target() != space_)
            throw StructuralError("differential endpoints must be the underlying space");
        GradedLinearMap dd = compose(d_, d_);
        for (const auto& [n, b] : dd.blocks())
            if (!b.is_zero())
                throw StructuralError("d.d != 0 starting in degree " + std::to_string(n));
    }

    static CochainComplex zero() { return CochainComplex(GradedVectorSpace(), zero_d(GradedVectorSpace())); }

    static CochainComplex with_zero_differential(const GradedVectorSpace& s) {
        return CochainComplex(s, zero_d(s));
    }

    const GradedVectorSpace& space() const { return space_; }
    const GradedLinearMap& d() const { return d_; }
    int dim(int n) const { return space_.dim(n); }

    // C[r]^n = C^{n+r}, differential (-1)^r d.
    CochainComplex shifted(int r) const {
        GradedVectorSpace s = space_.shifted(r);
        GradedLinearMap d(s, s, 1);
        Rat sign = (r % 2 == 0) ? 1 : -1;
        for (const auto& [n, b] : d_.blocks()) d.set_block(n - r, b * sign);
        return CochainComplex(s, d);
    }

private:
    static GradedLinearMap zero_d(const GradedVectorSpace& s) {
        return GradedLinearMap::zero(s, s, 1);
    }

    GradedVectorSpace space_;
    GradedLinearMap d_;
};

// Cohomology with chosen representative cocycles and a class-coordinate
// projection. Per degree n:
//   reps(n):  dim(C,n) x h_n   columns are representative cocycles;
//   proj(n):  h_n x dim(C,n)   vanishes exactly on im(d) and on the chosen
//                              complement of ker(d), sends reps to the
//                              standard basis.
class Cohomology {
public:
    GradedVectorSpace classes;
    std::map<int, Mat> reps;
    std::map<int, Mat> proj;

    int dim(int n) const { return classes.dim(n); }

    Mat rep_block(int n) const {
        auto it = reps.find(n);
        return it == reps.end() ? Mat(0, 0) : it->second;
    }
    Mat proj_block(int n) const {
        auto it = proj.find(n);
        return it == proj.end() ? Mat(0, 0) : it->second;
    }

    // Coordinates of a cocycle's class.
    Vec coords(int n, const Vec& cocycle) const {
        auto it = proj.find(n);
        if (it == proj.end()) return Vec();
        return it->second.apply(cocycle);
    }
};

// dim H^n = dim ker(d_n) - dim im(d_{n-1}); representatives are kernel basis
// vectors that extend the boundary space, the projection is read off from the
// inverse of the assembled basis [boundaries | reps | complement].
inline Cohomology cohomology(const CochainComplex& C) {
    Cohomology H;
    for (const auto& [n, dn] : C.space().dims()) {
        int dimn = C.dim(n);
        Mat d_out = C.d().block(n);                       // C^n -> C^{n+1}
        Mat d_in = C.d().block(n - 1);                    // C^{n-1} -> C^n
        Mat kernel = d_out.kernel_basis();                // dimn x z
        Mat cand = d_in.cols() > 0 ? d_in.hcat(kernel) : kernel;
        std::vector<int> piv = cand.independent_columns();
        std::vector<int> bnd_cols, rep_cols;
        for (int p : piv) {
            if (p < d_in.cols())
                bnd_cols.push_back(p);
            else
                rep_cols.push_back(p - d_in.cols());
        }
        Mat bnd = d_in.columns(bnd_cols);                 // dimn x r
        Mat reps = kernel.columns(rep_cols);              // dimn x h
        int h = reps.cols();
        if (h > 0) H.classes.set_dim(n, h);

        // Extend [bnd | reps] to a basis of C^n by standard basis vectors,
        // then the projection is the middle band of the inverse.
        Mat assembled = bnd.hcat(reps).hcat(Mat::identity(dimn));
        std::vector<int> full = assembled.independent_columns();
        Mat basis = assembled.columns(full);
        auto inv = basis.inverse();
        if (!inv) throw StructuralError("cohomology: basis assembly failed");
        Mat pr(h, dimn);
        for (int k = 0; k < h; ++k) {
            // row of the inverse matching column position of rep k
            int pos = -1;
            for (int q = 0; q < static_cast<int>(full.size()); ++q)
                if (full[q] == bnd.cols() + k) pos = q;
            if (pos < 0) throw StructuralError("cohomology: lost representative column");
            for (int j = 0; j < dimn; ++j) {
                const Rat& v = inv->at(pos, j);
                if (v != 0) pr.set(k, j, v);
            }
        }
        if (h > 0) {
            H.reps[n] = reps;
            H.proj[n] = pr;
        }
    }
    return H;
}

inline bool is_chain_map(const GradedLinearMap& f, const CochainComplex& C,
                         const CochainComplex& D) {
    if (f.source() != C.space() || f.target() != D.space()) return false;
    // sign convention: chain map condition is f d_C = (-1)^{deg f} ... for the
    // maps used here (degree 0 morphisms) it is the plain commutation; callers
    // with shifted targets pre-cook the sign into the target differential.
    GradedLinearMap lhs = compose(f, C.d());
    GradedLinearMap rhs = compose(D.d(), f);
    return (lhs - rhs).is_zero();
}

// Induced map on cohomology classes. Well-defined because proj kills
// boundaries by construction; f must commute with the differentials.
inline GradedLinearMap induced_map_on_cohomology(const GradedLinearMap& f,
                                                 const CochainComplex& C,
                                                 const CochainComplex& D,
                                                 const Cohomology& HC, const Cohomology& HD) {
    if (!is_chain_map(f, C, D))
        throw NotChainMap("induced_map_on_cohomology: f does not commute with differentials");
    GradedLinearMap g(HC.classes, HD.classes, f.degree());
    for (const auto& [n, h] : HC.classes.dims()) {
        Mat reps = HC.rep_block(n);
        Mat pr = HD.proj_block(n + f.degree());
        if (pr.rows() == 0) continue;
        g.set_block(n, pr * (f.block(n) * reps));
    }
    return g;
}

inline GradedLinearMap induced_map_on_cohomology(const GradedLinearMap& f,
                                                 const CochainComplex& C,
                                                 const CochainComplex& D) {
    Cohomology HC = cohomology(C), HD = cohomology(D);
    return induced_map_on_cohomology(f, C, D, HC, HD);
}

inline bool is_injective_on_cohomology(const GradedLinearMap& f, const CochainComplex& C,
                                       const CochainComplex& D) {
    Cohomology HC = cohomology(C), HD = cohomology(D);
    GradedLinearMap g = induced_map_on_cohomology(f, C, D, HC, HD);
    for (const auto& [n, h] : HC.classes.dims())
        if (g.block(n).rank() < h) return false;
    return true;
}

inline bool is_quasi_isomorphism(const GradedLinearMap& f, const CochainComplex& C,
                                 const CochainComplex& D) {
    if (f.degree() != 0) return false;
    Cohomology HC = cohomology(C), HD = cohomology(D);
    GradedLinearMap g = induced_map_on_cohomology(f, C, D, HC, HD);
    if (HC.classes != HD.classes) return false;
    for (const auto& [n, h] : HC.classes.dims())
        if (g.block(n).rank() < h) return false;
    return true;
}

// Subcomplex spanned by given per-degree columns. Verifies d-stability and
// returns the induced complex together with the inclusion.
struct SubcomplexResult {
    CochainComplex complex;
    GradedLinearMap inclusion;  // degree 0 chain map into the ambient complex
};

inline SubcomplexResult subcomplex_from_columns(const CochainComplex& C,
                                                const std::map<int, Mat>& cols) {
    GradedVectorSpace s;
    for (const auto& [n, m] : cols) {
        if (m.rows() != C.dim(n))
            throw StructuralError("subcomplex columns: wrong ambient dimension in degree " +
                                  std::to_string(n));
        if (m.cols() > 0 && m.rank() != m.cols())
            throw StructuralError("subcomplex columns dependent in degree " + std::to_string(n));
        if (m.cols() > 0) s.set_dim(n, m.cols());
    }
    auto incl_block = [&](int n) -> Mat {
        auto it = cols.find(n);
        return it == cols.end() ? Mat(C.dim(n), 0) : it->second;
    };
    GradedLinearMap d(s, s, 1);
    for (const auto& [n, dim] : s.dims()) {
        Mat img = C.d().block(n) * incl_block(n);          // ambient image
        Mat target = incl_block(n + 1);
        if (target.cols() == 0) {
            if (!img.is_zero())
                throw StructuralError("columns not d-stable in degree " + std::to_string(n));
            continue;
        }
        auto sol = target.solve_matrix(img);
        if (!sol) throw StructuralError("columns not d-stable in degree " + std::to_string(n));
        d.set_block(n, *sol);
    }
    SubcomplexResult r;
    r.complex = CochainComplex(s, d);
    GradedLinearMap incl(s, C.space(), 0);
    for (const auto& [n, dim] : s.dims()) incl.set_block(n, incl_block(n));
    r.inclusion = incl;
    return r;
}

// Quotient of C by the image of an injective chain map. Quotient coordinates
// come from extending the image basis to a full basis by standard vectors.
struct QuotientResult {
    CochainComplex complex;
    GradedLinearMap projection;  // degree 0 chain map from the ambient complex
};

inline QuotientResult quotient_complex(const CochainComplex& C, const GradedLinearMap& incl) {
    if (incl.target() != C.space())
        throw StructuralError("quotient_complex: inclusion target mismatch");
    GradedVectorSpace q;
    std::map<int, Mat> proj_blocks;
    for (const auto& [n, dimn] : C.space().dims()) {
        Mat sub = incl.block(n);
        if (sub.cols() > 0 && sub.rank() != sub.cols())
            throw NotInjective("quotient_complex: inclusion not injective in degree " +
                               std::to_string(n));
        Mat assembled = sub.hcat(Mat::identity(dimn));
        std::vector<int> piv = assembled.independent_columns();
        std::vector<int> comp;  // positions of identity columns chosen
        for (int p : piv)
            if (p >= sub.cols()) comp.push_back(p - sub.cols());
        int h = static_cast<int>(comp.size());
        if (h > 0) q.set_dim(n, h);
        Mat basis = assembled.columns(piv);
        auto inv = basis.inverse();
        if (!inv) throw StructuralError("quotient_complex: basis assembly failed");
        Mat pr(h, dimn);
        int row = 0;
        for (int qpos = 0; qpos < static_cast<int>(piv.size()); ++qpos) {
            if (piv[qpos] < sub.cols()) continue;
            for (int j = 0; j < dimn; ++j) {
                const Rat& v = inv->at(qpos, j);
                if (v != 0) pr.set(row, j, v);
            }
            ++row;
        }
        proj_blocks[n] = pr;
    }
    GradedLinearMap proj(C.space(), q, 0);
    for (const auto& [n, pr] : proj_blocks)
        if (pr.rows() > 0) proj.set_block(n, pr);
    // the quotient differential is defined only when the image is d-stable
    if (!compose(proj, compose(C.d(), incl)).is_zero())
        throw StructuralError("quotient_complex: image of inclusion is not d-stable");
    // induced differential: d_q(proj x) = proj(d x); solve on representatives
    GradedLinearMap dq(q, q, 1);
    for (const auto& [n, h] : q.dims()) {
        // representatives of quotient basis: the chosen standard vectors
        Mat sub = incl.block(n);
        Mat assembled = sub.hcat(Mat::identity(C.dim(n)));
        std::vector<int> piv = assembled.independent_columns();
        Mat reps(C.dim(n), h);
        int col = 0;
        for (int p : piv) {
            if (p < sub.cols()) continue;
            reps.set(p - sub.cols(), col, 1);
            ++col;
        }
        Mat img = C.d().block(n) * reps;
        auto it = proj_blocks.find(n + 1);
        if (it == proj_blocks.end() || it->second.rows() == 0) {
            continue;  // quotient zero in next degree; nothing to record
        }
        dq.set_block(n, it->second * img);
    }
    QuotientResult r;
    r.complex = CochainComplex(q, dq);
    r.projection = proj;
    return r;
}

}  // namespace dgla
