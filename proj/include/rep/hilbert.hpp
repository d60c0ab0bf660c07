#pragma once

#include <string>
#include <vector>

#include "rep/cohomology.hpp"
#include "rep/errors.hpp"
#include "rep/ncalg.hpp"
#include "rep/repscheme.hpp"

namespace rep {

// A point of Rep_A^n x A^n: a representation plus a distinguished vector.
struct PointedRep {
    RepPoint point;
    std::vector<Rat> v;
};

// Orbit representative of a cyclic pair: the representation rewritten in its
// Krylov word basis, with the distinguished vector moved to e_1. Two pairs
// get equal canonical forms iff they define the same left ideal.
struct CanonicalForm {
    RepPoint point;
    std::vector<Word> word_basis;  // graded-lex-least independent words

    friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
        if (a.point.n != b.point.n || a.point.matrices != b.point.matrices) return false;
        return a.word_basis == b.word_basis;
    }
};

struct KrylovSpan {
    int dimension = 0;
    std::vector<Word> word_basis;
};

struct HilbDimension {
    int dimension = 0;
    std::string caveats;
};

// Closes span{v} under the generator images; greedy graded-lex word basis.
KrylovSpan krylov_span(const Presentation& pres, const PointedRep& pr);

bool is_cyclic(const Presentation& pres, const PointedRep& pr);

// Rejects non-cyclic input.
CanonicalForm hilb_canonical_form(const Presentation& pres, const PointedRep& pr);

// dim T_(rho,v) U_A^n - dim GL_n; equals the local Hilb dimension where the
// underlying point is smooth.
HilbDimension hilb_dimension_at(const Presentation& pres, const PointedRep& pr);

// Appends the C(m,2) commutators to the relations; presents A^ab.
Presentation abelianization(const Presentation& pres);

// For n = 1: validity for P and for abelianization(P) coincide; asserts the
// equivalence and returns validity.
bool hilb1_points_check(const Presentation& pres, const RepPoint& p);

}  // namespace rep
