#ifndef SFANO_TESTS_SUPPORT_HPP
#define SFANO_TESTS_SUPPORT_HPP

#include "sfano/polynomial.hpp"
#include "sfano/residual.hpp"

#include <random>

namespace sfano::testing {

inline Polynomial P(const std::string& text, const RingPtr& ring) {
    return parse(text, ring);
}

inline RingPtr xs(std::size_t n, const Field& field = Field::rationals()) {
    return indexed_ring("x", n, field);
}

// Random polynomial with small integer coefficients.
inline Polynomial random_poly(std::mt19937_64& rng, const RingPtr& ring, unsigned max_degree, unsigned terms,
                              bool homogeneous = false) {
    std::uniform_int_distribution<int> coeff(-5, 5);
    std::uniform_int_distribution<std::size_t> var(0, ring->size() - 1);
    std::uniform_int_distribution<unsigned> deg(homogeneous ? max_degree : 0, max_degree);
    std::vector<Term> out;
    for (unsigned t = 0; t < terms; ++t) {
        Monomial m(ring->size());
        const unsigned d = deg(rng);
        for (unsigned k = 0; k < d; ++k) {
            const auto v = var(rng);
            m.set(v, m[v] + 1);
        }
        out.push_back(Term{std::move(m), Scalar(coeff(rng))});
    }
    return Polynomial(ring, std::move(out));
}

inline Polynomial random_linear_form(std::mt19937_64& rng, const RingPtr& ring) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    Polynomial out(ring);
    for (std::size_t i = 0; i < ring->size(); ++i)
        out += Polynomial::variable(ring, i).scaled(Scalar(coeff(rng)));
    return out;
}

// Full-rank (k+1) x (n+1) matrix with small integer entries.
inline PlaneChart random_plane(std::mt19937_64& rng, std::size_t k, std::size_t n, const Field& field) {
    std::uniform_int_distribution<int> d(-2, 2);
    while (true) {
        std::vector<std::vector<Scalar>> rows(k + 1, std::vector<Scalar>(n + 1));
        for (auto& row : rows)
            for (auto& v : row) v = field.from_int(d(rng));
        Matrix m(rows, field);
        if (m.rank() == k + 1) return PlaneChart(m);
    }
}

// Random form of degree d vanishing on the plane: sum of (linear form
// vanishing on the plane) * (random form of degree d - 1).
inline Polynomial random_form_containing(std::mt19937_64& rng, const PlaneChart& plane, const RingPtr& ring,
                                         unsigned d, unsigned terms = 3) {
    Polynomial f(ring);
    for (const auto& w : plane.matrix().kernel()) {
        Polynomial l(ring);
        for (std::size_t j = 0; j < w.size(); ++j) l += Polynomial::variable(ring, j).scaled(w[j]);
        Polynomial h = d == 1 ? Polynomial::constant(ring, Scalar(static_cast<long>(rng() % 5) - 2))
                              : random_poly(rng, ring, d - 1, terms, true);
        f += l * h;
    }
    return f;
}

}  // namespace sfano::testing

#endif
