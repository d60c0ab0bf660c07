#include "rep/hilbert.hpp"

#include <algorithm>
#include <cassert>

namespace rep {
namespace {

void require_valid(const Presentation& pres, const RepPoint& p) {
    const CheckVerdict v = check_point(pres, p);
    if (!v.valid) throw DomainError("invalid representation point");
}

// Incremental independence test over an echelonized span.
class SpanTracker {
  public:
    explicit SpanTracker(int n) : n_(n) {}

    // Returns true (and absorbs the vector) if v is independent of the span.
    bool try_add(std::vector<Rat> v) {
        for (size_t k = 0; k < reduced_.size(); ++k) {
            const Rat& lead = v[pivots_[k]];
            if (lead == 0) continue;
            const Rat factor = lead / reduced_[k][pivots_[k]];
            for (int j = 0; j < n_; ++j) v[j] -= factor * reduced_[k][j];
        }
        int pivot = -1;
        for (int j = 0; j < n_; ++j)
            if (v[j] != 0) {
                pivot = j;
                break;
            }
        if (pivot < 0) return false;
        pivots_.push_back(pivot);
        reduced_.push_back(std::move(v));
        return true;
    }

    int dimension() const { return static_cast<int>(reduced_.size()); }

  private:
    int n_;
    std::vector<std::vector<Rat>> reduced_;
    std::vector<int> pivots_;
};

std::vector<Rat> apply_matrix(const RationalMatrix& a, const std::vector<Rat>& v) {
    return a * v;
}

}  // namespace

KrylovSpan krylov_span(const Presentation& pres, const PointedRep& pr) {
    require_valid(pres, pr.point);
    const int n = pr.point.n;
    const int m = pres.num_generators();
    if (static_cast<int>(pr.v.size()) != n)
        throw std::invalid_argument("krylov_span: vector length != n");
    KrylovSpan out;
    SpanTracker span(n);
    if (!span.try_add(pr.v)) return out;  // v = 0
    out.word_basis.push_back(Word::one());
    std::vector<std::pair<Word, std::vector<Rat>>> frontier = {{Word::one(), pr.v}};
    while (span.dimension() < n && !frontier.empty()) {
        // Candidates of the next degree, in graded-lex order: the frontier is
        // already graded-lex sorted, so prepending generators in index order
        // and iterating l-major keeps the order.
        std::vector<std::pair<Word, std::vector<Rat>>> next;
        for (int l = 0; l < m; ++l)
            for (const auto& [w, vec] : frontier) {
                Word candidate = Word::generator(l).concat(w);
                std::vector<Rat> value = apply_matrix(pr.point.matrices[l], vec);
                if (span.try_add(value)) {
                    out.word_basis.push_back(candidate);
                    next.emplace_back(std::move(candidate), std::move(value));
                    if (span.dimension() == n) break;
                }
            }
        frontier = std::move(next);
    }
    out.dimension = span.dimension();
    std::sort(out.word_basis.begin(), out.word_basis.end(),
              [](const Word& a, const Word& b) { return GradedLexLess{}(a, b); });
    return out;
}

bool is_cyclic(const Presentation& pres, const PointedRep& pr) {
    return krylov_span(pres, pr).dimension == pr.point.n;
}

CanonicalForm hilb_canonical_form(const Presentation& pres, const PointedRep& pr) {
    const KrylovSpan span = krylov_span(pres, pr);
    const int n = pr.point.n;
    if (span.dimension != n) throw DomainError("hilb_canonical_form: pair is not cyclic");
    // Basis change: columns are the images of the basis words applied to v.
    RationalMatrix basis(n, n);
    for (int col = 0; col < n; ++col) {
        const RationalMatrix image = substitute_word(span.word_basis[col], pr.point.matrices);
        const std::vector<Rat> column = image * pr.v;
        for (int i = 0; i < n; ++i) basis(i, col) = column[i];
    }
    const auto basis_inv = inverse(basis);
    assert(basis_inv);
    CanonicalForm form;
    form.word_basis = span.word_basis;
    form.point.n = n;
    form.point.matrices.reserve(pr.point.matrices.size());
    for (const auto& x : pr.point.matrices) form.point.matrices.push_back(*basis_inv * x * basis);
    return form;
}

HilbDimension hilb_dimension_at(const Presentation& pres, const PointedRep& pr) {
    if (!is_cyclic(pres, pr))
        throw DomainError("hilb_dimension_at: pair is not cyclic (stabilizer may be nontrivial)");
    const int n = pr.point.n;
    const KernelBasis tangent = tangent_space(pres, pr.point);
    HilbDimension out;
    out.dimension = tangent.dimension + n - n * n;
    out.caveats =
        "equals the local Hilb dimension only where the underlying representation point is "
        "smooth (for instance under a smoothness certificate)";
    return out;
}

Presentation abelianization(const Presentation& pres) {
    pres.validate();
    Presentation ab = pres;
    const int m = pres.num_generators();
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            const NCPolynomial xi = NCPolynomial::generator(i);
            const NCPolynomial xj = NCPolynomial::generator(j);
            ab.relations.push_back(xi * xj - xj * xi);
        }
    return ab;
}

bool hilb1_points_check(const Presentation& pres, const RepPoint& p) {
    if (p.n != 1) throw std::invalid_argument("hilb1_points_check: point dimension must be 1");
    const bool valid_here = check_point(pres, p).valid;
    const bool valid_ab = check_point(abelianization(pres), p).valid;
    // Scalars commute, so the two verdicts can never differ.
    assert(valid_here == valid_ab);
    return valid_here && valid_ab;
}

}  // namespace rep
