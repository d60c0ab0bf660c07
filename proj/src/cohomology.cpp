#include "rep/cohomology.hpp"

#include <cassert>

namespace rep {
namespace {

void require_valid(const Presentation& pres, const RepPoint& p) {
    const CheckVerdict v = check_point(pres, p);
    if (!v.valid) {
        const Violation& w = v.violations.front();
        throw DomainError("invalid point: relation " + std::to_string(w.relation) +
                          " has nonzero entry (" + std::to_string(w.row) + "," +
                          std::to_string(w.col) + ") = " + rat_to_string(w.value));
    }
}

std::vector<Rat> flatten_direction(const std::vector<RationalMatrix>& dir, int n) {
    std::vector<Rat> out;
    out.reserve(dir.size() * n * n);
    for (const auto& phi : dir) {
        if (phi.rows() != n || phi.cols() != n)
            throw std::invalid_argument("direction matrices must be n x n");
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) out.push_back(phi(i, j));
    }
    return out;
}

}  // namespace

RationalMatrix left_mult_operator(const RationalMatrix& a) {
    const int n = a.rows();
    RationalMatrix op(n * n, n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) op(i * n + j, k * n + j) += a(i, k);
    return op;
}

RationalMatrix right_mult_operator(const RationalMatrix& a) {
    const int n = a.rows();
    RationalMatrix op(n * n, n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) op(i * n + j, i * n + k) += a(k, j);
    return op;
}

RationalMatrix bimodule_operator(const BimoduleElement& e, const RepPoint& p) {
    const int n = p.n;
    RationalMatrix op(n * n, n * n);
    for (const auto& s : e.summands()) {
        const RationalMatrix left = substitute_word(s.left, p.matrices);
        const RationalMatrix right = substitute_word(s.right, p.matrices);
        op += left_mult_operator(left) * right_mult_operator(right) * s.coeff;
    }
    return op;
}

CochainData build_complex(const Presentation& pres, const RepPoint& p, const ResolutionStep* res2) {
    require_valid(pres, p);
    const int n = p.n;
    const int m = pres.num_generators();
    const int r = pres.num_relations();
    CochainData data;
    data.n = n;
    data.m = m;
    data.r = r;

    // d0: B |-> (rho_l B - B rho_l)_l
    data.d0 = RationalMatrix(m * n * n, n * n);
    for (int l = 0; l < m; ++l) {
        const RationalMatrix block =
            left_mult_operator(p.matrices[l]) - right_mult_operator(p.matrices[l]);
        for (int i = 0; i < n * n; ++i)
            for (int j = 0; j < n * n; ++j) data.d0(l * n * n + i, j) = block(i, j);
    }

    // d1: (Phi_l)_l |-> per relation, the Fox-derivative directional term
    data.d1 = RationalMatrix(r * n * n, m * n * n);
    for (int rel = 0; rel < r; ++rel)
        for (int l = 0; l < m; ++l) {
            const BimoduleElement fox = fox_derivative(pres.relations[rel], l);
            if (fox.is_zero()) continue;
            const RationalMatrix block = bimodule_operator(fox, p);
            for (int i = 0; i < n * n; ++i)
                for (int j = 0; j < n * n; ++j) data.d1(rel * n * n + i, l * n * n + j) = block(i, j);
        }

    // Complex identity at a valid point.
    assert((data.d1 * data.d0).is_zero());

    if (res2) {
        if (res2->cols != r)
            throw std::invalid_argument("resolution step: column count != number of relations");
        const int r2 = res2->rows;
        RationalMatrix d2(r2 * n * n, r * n * n);
        for (int row = 0; row < r2; ++row)
            for (int col = 0; col < r; ++col) {
                const BimoduleElement& e = res2->at(row, col);
                if (e.is_zero()) continue;
                const RationalMatrix block = bimodule_operator(e, p);
                for (int i = 0; i < n * n; ++i)
                    for (int j = 0; j < n * n; ++j) d2(row * n * n + i, col * n * n + j) = block(i, j);
            }
        const RationalMatrix comp = d2 * data.d1;
        for (int i = 0; i < comp.rows(); ++i)
            for (int j = 0; j < comp.cols(); ++j)
                if (comp(i, j) != 0) throw ResolutionDataError(i / (n * n), j / (n * n));
        data.d2 = std::move(d2);
    }
    return data;
}

KernelBasis tangent_space(const Presentation& pres, const RepPoint& p) {
    const CochainData data = build_complex(pres, p);
    return kernel(data.d1);
}

namespace {

ExtReport ext_from_complex(const CochainData& data) {
    const int n = data.n, m = data.m, r = data.r;
    ExtReport rep;
    const int rank_d0 = rank(data.d0);
    const int rank_d1 = rank(data.d1);
    rep.ext0 = n * n - rank_d0;
    rep.tangent_dim = m * n * n - rank_d1;
    rep.inner_dim = rank_d0;
    rep.ext1 = rep.tangent_dim - rep.inner_dim;
    if (data.d2) {
        const int rank_d2 = rank(*data.d2);
        rep.ext2 = {r * n * n - rank_d2 - rank_d1, true};
    } else if (r == 0) {
        rep.ext2 = {0, true};  // no relations, no obstruction space
    } else {
        rep.ext2 = {r * n * n - rank_d1, false};
    }
    return rep;
}

}  // namespace

ExtReport ext_dimensions(const Presentation& pres, const RepPoint& p, const ResolutionStep* res2) {
    return ext_from_complex(build_complex(pres, p, res2));
}

SmoothCertificate smooth_certificate(const Presentation& pres, const RepPoint& p,
                                     bool assume_coherent, const ResolutionStep* res2) {
    SmoothCertificate cert;
    if (!assume_coherent) {
        cert.reason = CertificateReason::CoherenceNotAsserted;
        return cert;
    }
    const ExtReport ext = ext_dimensions(pres, p, res2);
    cert.ext2_bound = ext.ext2.value;
    if (ext.ext2.value == 0) {
        cert.certified = true;
        return cert;
    }
    cert.reason = ext.ext2.exact ? CertificateReason::Ext2Nonzero
                                 : CertificateReason::Ext2PossiblyNonzero;
    return cert;
}

bool deformation_check(const Presentation& pres, const RepPoint& p,
                       const std::vector<RationalMatrix>& direction) {
    require_valid(pres, p);
    if (direction.size() != p.matrices.size())
        throw std::invalid_argument("deformation_check: direction arity mismatch");
    std::vector<DualMatrix> dual_point;
    dual_point.reserve(p.matrices.size());
    for (size_t l = 0; l < p.matrices.size(); ++l)
        dual_point.push_back(to_dual(p.matrices[l], direction[l]));
    for (const auto& rel : pres.relations) {
        const DualMatrix value = substitute(rel, dual_point);
        for (int i = 0; i < p.n; ++i)
            for (int j = 0; j < p.n; ++j)
                if (value(i, j).b != 0) return false;
    }
    return true;
}

namespace {

using MatrixSeries = std::vector<RationalMatrix>;  // coefficient of t^j at index j

MatrixSeries series_mul(const MatrixSeries& a, const MatrixSeries& b, int maxdeg, int n) {
    MatrixSeries out(maxdeg + 1, RationalMatrix(n, n));
    for (int i = 0; i < static_cast<int>(a.size()) && i <= maxdeg; ++i)
        for (int j = 0; j < static_cast<int>(b.size()) && i + j <= maxdeg; ++j)
            out[i + j] += a[i] * b[j];
    return out;
}

// Evaluate a relation at matrix power series, truncated at degree maxdeg.
MatrixSeries series_evaluate(const NCPolynomial& f, const std::vector<MatrixSeries>& point,
                             int maxdeg, int n) {
    MatrixSeries acc(maxdeg + 1, RationalMatrix(n, n));
    for (const auto& [w, c] : f.terms()) {
        MatrixSeries term(maxdeg + 1, RationalMatrix(n, n));
        term[0] = RationalMatrix::identity(n);
        for (int l : w.letters) term = series_mul(term, point[l], maxdeg, n);
        for (int d = 0; d <= maxdeg; ++d) acc[d] += term[d] * c;
    }
    return acc;
}

}  // namespace

LiftResult lift_deformation(const Presentation& pres, const RepPoint& p,
                            const std::vector<RationalMatrix>& direction, int order) {
    if (order < 2) throw std::invalid_argument("lift_deformation: order must be >= 2");
    const CochainData data = build_complex(pres, p);
    const int n = p.n, m = data.m, r = data.r;
    const std::vector<Rat> dir_flat = flatten_direction(direction, n);
    if (static_cast<int>(dir_flat.size()) != m * n * n)
        throw std::invalid_argument("lift_deformation: direction arity mismatch");
    for (const Rat& e : data.d1 * dir_flat)
        if (e != 0) throw DomainError("lift_deformation: direction is not tangent");

    std::vector<MatrixSeries> series(m);
    for (int l = 0; l < m; ++l) {
        series[l].resize(order, RationalMatrix(n, n));
        series[l][0] = p.matrices[l];
        series[l][1] = direction[l];
    }
    LiftResult result;
    for (int j = 2; j < order; ++j) {
        // Order-j error with the j-th correction still zero.
        std::vector<Rat> error;
        error.reserve(r * n * n);
        for (const auto& rel : pres.relations) {
            const MatrixSeries value = series_evaluate(rel, series, j, n);
            for (int i = 0; i < n; ++i)
                for (int k = 0; k < n; ++k) error.push_back(value[j](i, k));
        }
        for (auto& e : error) e = -e;
        const SolveResult sol = solve(data.d1, error);
        if (!sol.consistent) {
            result.obstructed = true;
            result.obstructed_order = j;
            for (auto& e : error) e = -e;
            result.obstruction = std::move(error);
            return result;
        }
        for (int l = 0; l < m; ++l)
            for (int i = 0; i < n; ++i)
                for (int k = 0; k < n; ++k) series[l][j](i, k) = sol.solution[l * n * n + i * n + k];
    }
    result.lift.resize(m);
    for (int l = 0; l < m; ++l) result.lift[l] = std::move(series[l]);
    return result;
}

std::vector<ScanRow> semicontinuity_scan(const Presentation& pres,
                                         const std::vector<std::pair<std::string, RepPoint>>& family,
                                         const ResolutionStep* res2) {
    std::vector<ScanRow> out;
    out.reserve(family.size());
    for (const auto& [label, point] : family) {
        try {
            const CochainData data = build_complex(pres, point, res2);
            const ExtReport ext = ext_from_complex(data);
            ScanRow row;
            row.label = label;
            row.z0 = ext.ext0;
            row.z1 = ext.tangent_dim;
            row.ext2 = ext.ext2;
            row.tangent_dim = ext.tangent_dim;
            out.push_back(std::move(row));
        } catch (const DomainError& e) {
            throw DomainError("scan aborted at '" + label + "': " + e.what());
        }
    }
    return out;
}

}  // namespace rep
