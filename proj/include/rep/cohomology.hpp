#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rep/errors.hpp"
#include "rep/exactla.hpp"
#include "rep/ncalg.hpp"
#include "rep/repscheme.hpp"

namespace rep {

// A user-supplied continuation F_2 -> F_1 of the presentation-induced free
// bimodule resolution: rows x r matrix of bimodule elements. Symbolic
// exactness is the caller's assertion; the complex property d2*d1 = 0 is
// checked at every point of use.
struct ResolutionStep {
    int rows = 0;
    int cols = 0;  // must equal the number of relations
    std::vector<BimoduleElement> entries;  // row-major, rows*cols

    const BimoduleElement& at(int row, int col) const {
        return entries[static_cast<size_t>(row) * cols + col];
    }
};

// Matrices of the cochain complex Hom_{A^e}(F_*, End_k(M)) at a point.
// Cochains are flattened row-major per free-rank slot.
struct CochainData {
    int n = 0, m = 0, r = 0;
    RationalMatrix d0;  // (m n^2) x n^2
    RationalMatrix d1;  // (r n^2) x (m n^2)
    std::optional<RationalMatrix> d2;  // (r2 n^2) x (r n^2)
};

struct Ext2Evidence {
    int value = 0;
    bool exact = false;  // false: presentation-dependent upper bound
};

struct ExtReport {
    int ext0 = 0;
    int ext1 = 0;
    Ext2Evidence ext2;
    int tangent_dim = 0;
    int inner_dim = 0;  // n^2 - ext0, the inner derivations
};

enum class CertificateReason { None, CoherenceNotAsserted, Ext2PossiblyNonzero, Ext2Nonzero };

struct SmoothCertificate {
    bool certified = false;
    CertificateReason reason = CertificateReason::None;
    int ext2_bound = 0;
};

struct LiftResult {
    bool obstructed = false;
    int obstructed_order = 0;
    std::vector<Rat> obstruction;  // stacked r n^2 inconsistency witness
    // lift[l][j] is the t^j coefficient of X_l(t); degree < order.
    std::vector<std::vector<RationalMatrix>> lift;
};

struct ScanRow {
    std::string label;
    int z0 = 0;
    int z1 = 0;
    Ext2Evidence ext2;
    int tangent_dim = 0;
};

// Raised when a supplied ResolutionStep fails d2*d1 = 0 at the point; the
// witness names the F_2 row and the generator block where it fails.
struct ResolutionDataError : DomainError {
    int witness_row, witness_col;
    ResolutionDataError(int row, int col)
        : DomainError("resolution step fails d2*d1 = 0 at F2 row " + std::to_string(row) +
                      ", generator block " + std::to_string(col)),
          witness_row(row), witness_col(col) {}
};

// Operator on flattened matrices: B |-> A*B.
RationalMatrix left_mult_operator(const RationalMatrix& a);
// Operator on flattened matrices: B |-> B*A.
RationalMatrix right_mult_operator(const RationalMatrix& a);
// Evaluate a bimodule element as the operator B |-> sum c * rho(left) B rho(right).
RationalMatrix bimodule_operator(const BimoduleElement& e, const RepPoint& p);

CochainData build_complex(const Presentation& pres, const RepPoint& p,
                          const ResolutionStep* res2 = nullptr);

// Basis of ker d1 = the rho-derivations = T_p Rep_A^n.
KernelBasis tangent_space(const Presentation& pres, const RepPoint& p);

ExtReport ext_dimensions(const Presentation& pres, const RepPoint& p,
                         const ResolutionStep* res2 = nullptr);

SmoothCertificate smooth_certificate(const Presentation& pres, const RepPoint& p,
                                     bool assume_coherent, const ResolutionStep* res2 = nullptr);

// Dual-number evaluation of every relation at rho + eps*direction; true iff
// all eps-parts vanish. Agrees with membership of direction in ker d1.
bool deformation_check(const Presentation& pres, const RepPoint& p,
                       const std::vector<RationalMatrix>& direction);

LiftResult lift_deformation(const Presentation& pres, const RepPoint& p,
                            const std::vector<RationalMatrix>& direction, int order);

std::vector<ScanRow> semicontinuity_scan(const Presentation& pres,
                                         const std::vector<std::pair<std::string, RepPoint>>& family,
                                         const ResolutionStep* res2 = nullptr);

}  // namespace rep
