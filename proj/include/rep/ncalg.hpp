#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rep/exactla.hpp"
#include "rep/rational.hpp"

namespace rep {

// A monomial of the free algebra: a sequence of generator indices.
// The empty word is the unit 1.
struct Word {
    std::vector<int> letters;

    Word() = default;
    explicit Word(std::vector<int> ls) : letters(std::move(ls)) {}
    static Word one() { return Word{}; }
    static Word generator(int l) { return Word{{l}}; }

    int degree() const { return static_cast<int>(letters.size()); }
    bool is_one() const { return letters.empty(); }

    Word concat(const Word& o) const {
        Word w = *this;
        w.letters.insert(w.letters.end(), o.letters.begin(), o.letters.end());
        return w;
    }
    int max_index() const {
        int m = -1;
        for (int l : letters) m = std::max(m, l);
        return m;
    }

    friend bool operator==(const Word& a, const Word& b) { return a.letters == b.letters; }
};

// Graded lexicographic: shorter words first, then lex by generator index.
// The canonical order for every deterministic iteration in the toolkit.
struct GradedLexLess {
    bool operator()(const Word& a, const Word& b) const {
        if (a.letters.size() != b.letters.size()) return a.letters.size() < b.letters.size();
        return a.letters < b.letters;
    }
};

// Element of the free algebra: finite Word -> nonzero coefficient map.
class NCPolynomial {
  public:
    using TermMap = std::map<Word, Rat, GradedLexLess>;

    NCPolynomial() = default;

    static NCPolynomial zero() { return NCPolynomial{}; }
    static NCPolynomial unit() { return monomial(Word::one(), Rat(1)); }
    static NCPolynomial generator(int l) { return monomial(Word::generator(l), Rat(1)); }
    static NCPolynomial constant(const Rat& c) { return monomial(Word::one(), c); }
    static NCPolynomial monomial(Word w, const Rat& c) {
        NCPolynomial p;
        if (c != 0) p.terms_.emplace(std::move(w), c);
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int max_generator_index() const {
        int m = -1;
        for (const auto& [w, c] : terms_) m = std::max(m, w.max_index());
        return m;
    }

    void add_term(const Word& w, const Rat& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    NCPolynomial& operator+=(const NCPolynomial& o) {
        for (const auto& [w, c] : o.terms_) add_term(w, c);
        return *this;
    }
    NCPolynomial& operator-=(const NCPolynomial& o) {
        for (const auto& [w, c] : o.terms_) add_term(w, -c);
        return *this;
    }
    friend NCPolynomial operator+(NCPolynomial a, const NCPolynomial& b) { return a += b; }
    friend NCPolynomial operator-(NCPolynomial a, const NCPolynomial& b) { return a -= b; }
    friend NCPolynomial operator-(const NCPolynomial& a) {
        NCPolynomial r;
        for (const auto& [w, c] : a.terms_) r.terms_.emplace(w, -c);
        return r;
    }
    friend NCPolynomial operator*(const NCPolynomial& a, const NCPolynomial& b) {
        NCPolynomial r;
        for (const auto& [wa, ca] : a.terms_)
            for (const auto& [wb, cb] : b.terms_) r.add_term(wa.concat(wb), ca * cb);
        return r;
    }
    friend NCPolynomial operator*(const Rat& s, const NCPolynomial& a) {
        NCPolynomial r;
        if (s == 0) return r;
        for (const auto& [w, c] : a.terms_) r.terms_.emplace(w, s * c);
        return r;
    }
    friend bool operator==(const NCPolynomial& a, const NCPolynomial& b) {
        return a.terms_ == b.terms_;
    }

  private:
    TermMap terms_;
};

// Finitely presented associative algebra A = F/J: generator names plus
// relations. r = 0 encodes the free algebra.
struct Presentation {
    std::vector<std::string> generator_names;
    std::vector<NCPolynomial> relations;

    int num_generators() const { return static_cast<int>(generator_names.size()); }
    int num_relations() const { return static_cast<int>(relations.size()); }
    bool is_free() const { return relations.empty(); }

    // Throws if names collide or a relation references an out-of-range index.
    void validate() const;
};

// Element of the enveloping algebra F (x) F^op, stored as a canonical sum of
// (left word, right word, coefficient) summands.
class BimoduleElement {
  public:
    struct Summand {
        Word left, right;
        Rat coeff;
    };
    using Key = std::pair<Word, Word>;
    struct KeyLess {
        bool operator()(const Key& a, const Key& b) const {
            GradedLexLess lt;
            if (lt(a.first, b.first)) return true;
            if (lt(b.first, a.first)) return false;
            return lt(a.second, b.second);
        }
    };

    BimoduleElement() = default;

    bool is_zero() const { return terms_.empty(); }

    void add(const Word& left, const Word& right, const Rat& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(Key{left, right}, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    BimoduleElement& operator+=(const BimoduleElement& o) {
        for (const auto& [k, c] : o.terms_) add(k.first, k.second, c);
        return *this;
    }
    friend BimoduleElement operator+(BimoduleElement a, const BimoduleElement& b) { return a += b; }
    friend bool operator==(const BimoduleElement& a, const BimoduleElement& b) {
        return a.terms_ == b.terms_;
    }

    // Append a word on the right of every suffix slot (phi |> g direction).
    BimoduleElement right_concat(const Word& w) const {
        BimoduleElement r;
        for (const auto& [k, c] : terms_) r.add(k.first, k.second.concat(w), c);
        return r;
    }
    // Prepend a word on the left of every prefix slot.
    BimoduleElement left_concat(const Word& w) const {
        BimoduleElement r;
        for (const auto& [k, c] : terms_) r.add(w.concat(k.first), k.second, c);
        return r;
    }

    std::vector<Summand> summands() const {
        std::vector<Summand> out;
        out.reserve(terms_.size());
        for (const auto& [k, c] : terms_) out.push_back({k.first, k.second, c});
        return out;
    }

  private:
    std::map<Key, Rat, KeyLess> terms_;
};

NCPolynomial nc_multiply(const NCPolynomial& f, const NCPolynomial& g);

// Noncommutative partial derivative: every occurrence of generator l in a
// word contributes its (prefix, suffix) pair. Linear in f.
BimoduleElement fox_derivative(const NCPolynomial& f, int l);

// Ordered product of the letter images; the empty word maps to the identity.
template <typename T>
Matrix<T> substitute_word(const Word& w, const std::vector<Matrix<T>>& point) {
    if (point.empty()) throw std::invalid_argument("substitute_word: empty point");
    const int n = point[0].rows();
    for (const auto& x : point)
        if (x.rows() != n || x.cols() != n)
            throw std::invalid_argument("substitute_word: matrices must be square of equal size");
    Matrix<T> acc = Matrix<T>::identity(n);
    for (int l : w.letters) {
        if (l < 0 || l >= static_cast<int>(point.size()))
            throw std::invalid_argument("substitute_word: generator index out of range");
        acc = acc * point[l];
    }
    return acc;
}

// Linear extension of substitute_word; a ring homomorphism in f.
template <typename T>
Matrix<T> substitute(const NCPolynomial& f, const std::vector<Matrix<T>>& point) {
    if (point.empty()) throw std::invalid_argument("substitute: empty point");
    const int n = point[0].rows();
    Matrix<T> acc(n, n);
    for (const auto& [w, c] : f.terms()) {
        Matrix<T> term = substitute_word(w, point);
        acc += term * T(c);
    }
    return acc;
}

}  // namespace rep
