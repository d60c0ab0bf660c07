#include "rep/repscheme.hpp"

#include <random>

namespace rep {

Rat CommPolynomial::evaluate(const std::vector<Rat>& coords, int n) const {
    Rat acc(0);
    for (const auto& [mono, c] : terms_) {
        Rat term = c;
        for (const auto& [v, e] : mono) {
            const int idx = v.flat_index(n);
            if (idx < 0 || idx >= static_cast<int>(coords.size()))
                throw std::invalid_argument("CommPolynomial::evaluate: coordinate out of range");
            for (int k = 0; k < e; ++k) term *= coords[idx];
        }
        acc += term;
    }
    return acc;
}

std::vector<Rat> RepPoint::coordinates() const {
    std::vector<Rat> out;
    out.reserve(matrices.size() * n * n);
    for (const auto& x : matrices)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) out.push_back(x(i, j));
    return out;
}

GroupElement::GroupElement(RationalMatrix g) : g_(std::move(g)) {
    auto inv = inverse(g_);
    if (!inv) throw std::invalid_argument("GroupElement: matrix is singular");
    g_inv_ = std::move(*inv);
}

namespace {

// n x n matrices whose entries are single generic variables.
std::vector<Matrix<CommPolynomial>> generic_matrices(int m, int n) {
    std::vector<Matrix<CommPolynomial>> xs;
    xs.reserve(m);
    for (int l = 0; l < m; ++l) {
        Matrix<CommPolynomial> x(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                x(i, j) = CommPolynomial::variable({l, i + 1, j + 1});
        xs.push_back(std::move(x));
    }
    return xs;
}

}  // namespace

std::vector<IdealGenerator> emit_ideal_generators(const Presentation& p, int n) {
    if (n < 1) throw std::invalid_argument("emit_ideal_generators: n must be >= 1");
    p.validate();
    std::vector<IdealGenerator> out;
    if (p.is_free()) return out;
    const auto xs = generic_matrices(p.num_generators(), n);
    for (int rel = 0; rel < p.num_relations(); ++rel) {
        Matrix<CommPolynomial> value(n, n);
        for (const auto& [w, c] : p.relations[rel].terms()) {
            Matrix<CommPolynomial> term = Matrix<CommPolynomial>::identity(n);
            for (int l : w.letters) term = term * xs[l];
            value += term * CommPolynomial::constant(c);
        }
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                out.push_back({rel, i + 1, j + 1, value(i, j)});
    }
    return out;
}

RationalMatrix evaluate(const NCPolynomial& f, const RepPoint& p) {
    p.validate_shape();
    if (f.max_generator_index() >= static_cast<int>(p.matrices.size()))
        throw std::invalid_argument("evaluate: polynomial references a missing generator");
    if (p.matrices.empty()) {
        // constant polynomial over the empty generator tuple
        RationalMatrix r(p.n, p.n);
        for (const auto& [w, c] : f.terms())
            for (int i = 0; i < p.n; ++i) r(i, i) += c;
        return r;
    }
    return substitute(f, p.matrices);
}

CheckVerdict check_point(const Presentation& pres, const RepPoint& p) {
    pres.validate();
    p.validate_shape();
    if (static_cast<int>(p.matrices.size()) != pres.num_generators())
        throw std::invalid_argument("check_point: point arity != presentation arity");
    CheckVerdict verdict;
    for (int rel = 0; rel < pres.num_relations(); ++rel) {
        const RationalMatrix value = evaluate(pres.relations[rel], p);
        bool hit = false;
        for (int i = 0; i < p.n && !hit; ++i)
            for (int j = 0; j < p.n && !hit; ++j)
                if (value(i, j) != 0) {
                    verdict.violations.push_back({rel, i + 1, j + 1, value(i, j)});
                    hit = true;
                }
    }
    verdict.valid = verdict.violations.empty();
    return verdict;
}

RepPoint conjugate(const RepPoint& p, const GroupElement& g) {
    p.validate_shape();
    if (g.matrix().rows() != p.n) throw std::invalid_argument("conjugate: size mismatch");
    RepPoint out;
    out.n = p.n;
    out.matrices.reserve(p.matrices.size());
    for (const auto& x : p.matrices) out.matrices.push_back(g.matrix() * x * g.inverse_matrix());
    return out;
}

IsoVerdict module_isomorphic(const Presentation& pres, const RepPoint& p, const RepPoint& q,
                             unsigned long seed, int tries) {
    if (p.n != q.n) throw std::invalid_argument("module_isomorphic: dimension mismatch");
    const int n = p.n;
    const int m = pres.num_generators();
    if (static_cast<int>(p.matrices.size()) != m || static_cast<int>(q.matrices.size()) != m)
        throw std::invalid_argument("module_isomorphic: arity mismatch");
    // Intertwiners: T with T*p_l = q_l*T for all l, as a kernel in n^2 unknowns.
    RationalMatrix system(m * n * n, n * n);
    for (int l = 0; l < m; ++l)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const int row = l * n * n + i * n + j;
                // (T*P - Q*T)(i,j) = sum_k T(i,k)P(k,j) - Q(i,k)T(k,j)
                for (int k = 0; k < n; ++k) {
                    system(row, i * n + k) += p.matrices[l](k, j);
                    system(row, k * n + j) -= q.matrices[l](i, k);
                }
            }
    const KernelBasis space = kernel(system);
    IsoVerdict verdict;
    verdict.intertwiner_dimension = space.dimension;
    if (space.dimension == 0) {
        verdict.kind = IsoKind::NotIsomorphic;
        return verdict;
    }
    auto unflatten = [n](const std::vector<Rat>& v) {
        RationalMatrix t(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) t(i, j) = v[i * n + j];
        return t;
    };
    for (const auto& v : space.basis_vectors) {
        RationalMatrix t = unflatten(v);
        if (rank(t) == n) {
            verdict.kind = IsoKind::Isomorphic;
            verdict.witness = std::move(t);
            return verdict;
        }
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coeff(-9, 9);
    for (int attempt = 0; attempt < tries; ++attempt) {
        std::vector<Rat> v(n * n, Rat(0));
        for (const auto& b : space.basis_vectors) {
            const Rat c(coeff(rng));
            for (int k = 0; k < n * n; ++k) v[k] += c * b[k];
        }
        RationalMatrix t = unflatten(v);
        if (rank(t) == n) {
            verdict.kind = IsoKind::Isomorphic;
            verdict.witness = std::move(t);
            return verdict;
        }
    }
    verdict.kind = IsoKind::Inconclusive;
    return verdict;
}

}  // namespace rep
