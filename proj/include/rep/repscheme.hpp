#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rep/exactla.hpp"
#include "rep/ncalg.hpp"

namespace rep {

// One coordinate xi_{l,i,j} of the generic matrix xi_l; i, j are 1-based.
struct GenericVariable {
    int l, i, j;
    friend bool operator<(const GenericVariable& a, const GenericVariable& b) {
        if (a.l != b.l) return a.l < b.l;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
    friend bool operator==(const GenericVariable& a, const GenericVariable& b) {
        return a.l == b.l && a.i == b.i && a.j == b.j;
    }
    // Row-major flat index into a coordinate vector of length m*n^2.
    int flat_index(int n) const { return l * n * n + (i - 1) * n + (j - 1); }
};

// Commutative polynomial in the generic-matrix variables, exponent-vector
// representation.
class CommPolynomial {
  public:
    using Monomial = std::map<GenericVariable, int>;
    using TermMap = std::map<Monomial, Rat>;

    CommPolynomial() = default;
    CommPolynomial(int c) : CommPolynomial(constant(Rat(c))) {}
    static CommPolynomial constant(const Rat& c) {
        CommPolynomial p;
        if (c != 0) p.terms_.emplace(Monomial{}, c);
        return p;
    }
    static CommPolynomial variable(GenericVariable v) {
        CommPolynomial p;
        p.terms_.emplace(Monomial{{v, 1}}, Rat(1));
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Monomial& mono, const Rat& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(mono, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    CommPolynomial& operator+=(const CommPolynomial& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    CommPolynomial& operator-=(const CommPolynomial& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend CommPolynomial operator+(CommPolynomial a, const CommPolynomial& b) { return a += b; }
    friend CommPolynomial operator-(CommPolynomial a, const CommPolynomial& b) { return a -= b; }
    friend CommPolynomial operator*(const CommPolynomial& a, const CommPolynomial& b) {
        CommPolynomial r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m = ma;
                for (const auto& [v, e] : mb) m[v] += e;
                r.add_term(m, ca * cb);
            }
        return r;
    }
    friend CommPolynomial operator*(const Rat& s, const CommPolynomial& a) {
        CommPolynomial r;
        if (s == 0) return r;
        for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, s * c);
        return r;
    }
    friend bool operator==(const CommPolynomial& a, const CommPolynomial& b) {
        return a.terms_ == b.terms_;
    }

    // coords is the flat coordinate vector (length m*n^2, row-major per l).
    Rat evaluate(const std::vector<Rat>& coords, int n) const;

  private:
    TermMap terms_;
};

// A candidate k-point of Rep_A^n: the m-tuple of images of the generators.
struct RepPoint {
    int n = 0;
    std::vector<RationalMatrix> matrices;

    void validate_shape() const {
        for (const auto& x : matrices)
            if (x.rows() != n || x.cols() != n)
                throw std::invalid_argument("RepPoint: matrix is not n x n");
    }
    std::vector<Rat> coordinates() const;
};

// Invertible change of basis; singular input is rejected at construction.
class GroupElement {
  public:
    explicit GroupElement(RationalMatrix g);
    const RationalMatrix& matrix() const { return g_; }
    const RationalMatrix& inverse_matrix() const { return g_inv_; }
    GroupElement inverted() const { return GroupElement(g_inv_); }

  private:
    RationalMatrix g_, g_inv_;
};

// One emitted generator of the ideal I, with its provenance: the (row, col)
// entry of relation `relation` evaluated at the generic matrices.
struct IdealGenerator {
    int relation;
    int row, col;  // 1-based
    CommPolynomial poly;
};

struct Violation {
    int relation;
    int row, col;  // 1-based witness entry
    Rat value;
};

struct CheckVerdict {
    bool valid = false;
    std::vector<Violation> violations;
};

enum class IsoKind { Isomorphic, NotIsomorphic, Inconclusive };

struct IsoVerdict {
    IsoKind kind = IsoKind::Inconclusive;
    std::optional<RationalMatrix> witness;
    int intertwiner_dimension = 0;
};

// The r*n^2 entry polynomials of the relations at the generic matrices,
// ordered by relation index then row-major entry. Empty for a free algebra.
std::vector<IdealGenerator> emit_ideal_generators(const Presentation& p, int n);

RationalMatrix evaluate(const NCPolynomial& f, const RepPoint& p);

CheckVerdict check_point(const Presentation& pres, const RepPoint& p);

RepPoint conjugate(const RepPoint& p, const GroupElement& g);

// Intertwiner-space search; bounded randomized invertibility testing, so
// "inconclusive" is a possible answer.
IsoVerdict module_isomorphic(const Presentation& pres, const RepPoint& p, const RepPoint& q,
                             unsigned long seed = 0, int tries = 32);

}  // namespace rep
