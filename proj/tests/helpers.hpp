#pragma once

#include <initializer_list>
#include <random>
#include <vector>

#include "rep/exactla.hpp"
#include "rep/ncalg.hpp"
#include "rep/repscheme.hpp"

namespace rep::testutil {

inline RationalMatrix mat(std::initializer_list<std::initializer_list<int>> rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r ? static_cast<int>(rows.begin()->size()) : 0;
    RationalMatrix m(r, c);
    int i = 0;
    for (const auto& row : rows) {
        int j = 0;
        for (int v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

inline std::vector<Rat> vec(std::initializer_list<int> values) {
    std::vector<Rat> v;
    for (int x : values) v.emplace_back(x);
    return v;
}

inline RationalMatrix random_matrix(std::mt19937_64& rng, int n, int lo = -9, int hi = 9) {
    std::uniform_int_distribution<int> d(lo, hi);
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = d(rng);
    return m;
}

inline RepPoint random_point(std::mt19937_64& rng, int m, int n) {
    RepPoint p;
    p.n = n;
    for (int l = 0; l < m; ++l) p.matrices.push_back(random_matrix(rng, n));
    return p;
}

// Random invertible matrix with small integer entries.
inline RationalMatrix random_invertible(std::mt19937_64& rng, int n) {
    while (true) {
        RationalMatrix g = random_matrix(rng, n, -4, 4);
        if (rank(g) == n) return g;
    }
}

inline NCPolynomial random_nc_polynomial(std::mt19937_64& rng, int m, int max_degree,
                                         int max_terms = 4) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<int> letter(0, m - 1);
    std::uniform_int_distribution<int> coeff(-5, 5);
    std::uniform_int_distribution<int> terms(1, max_terms);
    NCPolynomial p;
    const int t = terms(rng);
    for (int k = 0; k < t; ++k) {
        std::vector<int> letters(deg(rng));
        for (int& l : letters) l = letter(rng);
        p.add_term(Word(std::move(letters)), Rat(coeff(rng)));
    }
    return p;
}

inline Presentation free_algebra(int m) {
    Presentation p;
    for (int l = 0; l < m; ++l) p.generator_names.push_back(std::string(1, char('x' + l)));
    return p;
}

// <x, y | xy - yx>
inline Presentation commuting_pair() {
    Presentation p = free_algebra(2);
    const NCPolynomial x = NCPolynomial::generator(0), y = NCPolynomial::generator(1);
    p.relations.push_back(x * y - y * x);
    return p;
}

// <x | x^2>
inline Presentation dual_numbers() {
    Presentation p;
    p.generator_names = {"x"};
    const NCPolynomial x = NCPolynomial::generator(0);
    p.relations.push_back(x * x);
    return p;
}

// <x, y | xy - yx - 1>
inline Presentation weyl() {
    Presentation p = free_algebra(2);
    const NCPolynomial x = NCPolynomial::generator(0), y = NCPolynomial::generator(1);
    p.relations.push_back(x * y - y * x - NCPolynomial::unit());
    return p;
}

}  // namespace rep::testutil
