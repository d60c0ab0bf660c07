#include "rep/exactla.hpp"

namespace rep {
namespace {

// Scale a row to coprime integer entries, preserving sign of the leading
// nonzero entry's role in elimination (the overall sign is kept as-is).
void normalize_row_integer(RationalMatrix& m, int row) {
    mpz_class den_lcm = 1;
    for (int j = 0; j < m.cols(); ++j)
        if (m(row, j) != 0) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), m(row, j).get_den().get_mpz_t());
    mpz_class num_gcd = 0;
    for (int j = 0; j < m.cols(); ++j) {
        if (m(row, j) == 0) continue;
        mpz_class scaled_num = m(row, j).get_num() * (den_lcm / m(row, j).get_den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled_num.get_mpz_t());
    }
    if (num_gcd == 0) return;  // zero row
    Rat scale(den_lcm, num_gcd);
    scale.canonicalize();
    for (int j = 0; j < m.cols(); ++j) m(row, j) *= scale;
}

void swap_rows(RationalMatrix& m, int a, int b) {
    if (a == b) return;
    for (int j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

}  // namespace

RrefResult rref(const RationalMatrix& m) {
    RrefResult out;
    out.reduced = m;
    RationalMatrix& r = out.reduced;
    int next_row = 0;
    for (int col = 0; col < r.cols() && next_row < r.rows(); ++col) {
        int pivot_row = -1;
        for (int i = next_row; i < r.rows(); ++i)
            if (r(i, col) != 0) {
                pivot_row = i;
                break;
            }
        if (pivot_row < 0) continue;
        swap_rows(r, next_row, pivot_row);
        const Rat pivot = r(next_row, col);
        for (int i = next_row + 1; i < r.rows(); ++i) {
            if (r(i, col) == 0) continue;
            const Rat factor = r(i, col) / pivot;
            for (int j = col; j < r.cols(); ++j) r(i, j) -= factor * r(next_row, j);
            normalize_row_integer(r, i);
        }
        out.pivot_columns.push_back(col);
        ++next_row;
    }
    out.rank = next_row;
    // back substitution to reduced form with unit pivots
    for (int p = out.rank - 1; p >= 0; --p) {
        const int col = out.pivot_columns[p];
        const Rat pivot = r(p, col);
        for (int j = col; j < r.cols(); ++j) r(p, j) /= pivot;
        for (int i = 0; i < p; ++i) {
            if (r(i, col) == 0) continue;
            const Rat factor = r(i, col);
            for (int j = col; j < r.cols(); ++j) r(i, j) -= factor * r(p, j);
        }
    }
    return out;
}

KernelBasis kernel(const RationalMatrix& m) {
    const RrefResult rr = rref(m);
    KernelBasis out;
    out.dimension = m.cols() - rr.rank;
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : rr.pivot_columns) is_pivot[c] = true;
    for (int free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Rat> v(m.cols(), Rat(0));
        v[free_col] = 1;
        for (int p = 0; p < rr.rank; ++p) v[rr.pivot_columns[p]] = -rr.reduced(p, free_col);
        out.basis_vectors.push_back(std::move(v));
    }
    return out;
}

SolveResult solve(const RationalMatrix& m, const std::vector<Rat>& target) {
    if (static_cast<int>(target.size()) != m.rows())
        throw std::invalid_argument("solve: target length != rows");
    // Augment with the target and an identity block to track row operations.
    const int n = m.rows(), c = m.cols();
    RationalMatrix aug(n, c + 1 + n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < c; ++j) aug(i, j) = m(i, j);
        aug(i, c) = target[i];
        aug(i, c + 1 + i) = 1;
    }
    // A plain rref of aug would pivot inside the identity block; run the
    // elimination only over the first c+1 columns.
    int next_row = 0;
    std::vector<int> pivots;
    for (int col = 0; col < c + 1 && next_row < n; ++col) {
        int pivot_row = -1;
        for (int i = next_row; i < n; ++i)
            if (aug(i, col) != 0) {
                pivot_row = i;
                break;
            }
        if (pivot_row < 0) continue;
        for (int j = 0; j < aug.cols(); ++j) std::swap(aug(next_row, j), aug(pivot_row, j));
        const Rat pivot = aug(next_row, col);
        for (int i = 0; i < n; ++i) {
            if (i == next_row || aug(i, col) == 0) continue;
            const Rat factor = aug(i, col) / pivot;
            for (int j = 0; j < aug.cols(); ++j) aug(i, j) -= factor * aug(next_row, j);
        }
        for (int j = 0; j < aug.cols(); ++j) aug(next_row, j) /= pivot;
        pivots.push_back(col);
        ++next_row;
    }
    SolveResult out;
    for (int p = 0; p < static_cast<int>(pivots.size()); ++p) {
        if (pivots[p] == c) {  // pivot in the target column: inconsistent
            out.consistent = false;
            out.certificate.assign(n, Rat(0));
            for (int j = 0; j < n; ++j) out.certificate[j] = aug(p, c + 1 + j);
            return out;
        }
    }
    out.consistent = true;
    out.solution.assign(c, Rat(0));  // free variables set to zero: echelon solution
    for (int p = 0; p < static_cast<int>(pivots.size()); ++p) out.solution[pivots[p]] = aug(p, c);
    return out;
}

std::optional<RationalMatrix> inverse(const RationalMatrix& m) {
    if (!m.is_square()) return std::nullopt;
    const int n = m.rows();
    RationalMatrix aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    const RrefResult rr = rref(aug);
    for (int i = 0; i < n; ++i)
        if (i >= rr.rank || rr.pivot_columns[i] != i) return std::nullopt;
    RationalMatrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv(i, j) = rr.reduced(i, n + j);
    return inv;
}

int rank(const RationalMatrix& m) { return rref(m).rank; }

}  // namespace rep
