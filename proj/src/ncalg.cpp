#include "rep/ncalg.hpp"

#include <set>

namespace rep {

void Presentation::validate() const {
    std::set<std::string> seen;
    for (const auto& name : generator_names) {
        if (name.empty()) throw std::invalid_argument("empty generator name");
        if (!seen.insert(name).second)
            throw std::invalid_argument("duplicate generator name: " + name);
    }
    const int m = num_generators();
    for (size_t i = 0; i < relations.size(); ++i)
        if (relations[i].max_generator_index() >= m)
            throw std::invalid_argument("relation " + std::to_string(i) +
                                        " references a generator index >= m");
}

NCPolynomial nc_multiply(const NCPolynomial& f, const NCPolynomial& g) { return f * g; }

BimoduleElement fox_derivative(const NCPolynomial& f, int l) {
    if (l < 0) throw std::invalid_argument("fox_derivative: negative generator index");
    BimoduleElement out;
    for (const auto& [w, c] : f.terms()) {
        for (size_t pos = 0; pos < w.letters.size(); ++pos) {
            if (w.letters[pos] != l) continue;
            Word prefix(std::vector<int>(w.letters.begin(), w.letters.begin() + pos));
            Word suffix(std::vector<int>(w.letters.begin() + pos + 1, w.letters.end()));
            out.add(prefix, suffix, c);
        }
    }
    return out;
}

}  // namespace rep
