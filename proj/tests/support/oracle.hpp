#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "derham/linear_change.hpp"
#include "derham/polynomial.hpp"
#include "derham/ruppert.hpp"

namespace oracle {

using derham::Polynomial;
using derham::Rational;

/// A product of known, pairwise non-associate, absolutely irreducible factors.
struct Instance {
    std::size_t arity = 0;
    std::vector<Polynomial> factors;
    Polynomial product;
    std::uint64_t seed = 0;
};

struct CorpusLimits {
    std::size_t min_factors = 2;
    std::size_t max_factors = 5;
    /// Total-degree cap of the product, indexed by arity (2, 3, 4).
    unsigned degree_cap[5] = {0, 0, 8, 5, 4};
};

/// Seeded corpus; arity cycles through 2, 3, 4.
std::vector<Instance> corpus(std::size_t count, std::uint64_t seed, const CorpusLimits& limits = {});

/// Instance with a fixed arity.
Instance make_instance(std::size_t arity, std::mt19937_64& rng, const CorpusLimits& limits = {});

/// Random nonconstant linear form with small integer coefficients.
Polynomial random_linear(std::size_t arity, std::mt19937_64& rng);

/// Random total-degree-2 polynomial certified to have a single absolute factor.
Polynomial random_irreducible_quadric(std::size_t arity, std::mt19937_64& rng);

/// Random polynomial with `terms` terms of total degree <= max_degree and
/// coefficients num/den with |num| <= 9, den in 1..4.
Polynomial random_polynomial(std::size_t arity, unsigned max_degree, std::size_t terms, std::mt19937_64& rng);

/// Invertible integer matrix with entries in [-bound, bound]; zero translation.
derham::LinearChange random_change(std::size_t arity, int bound, std::mt19937_64& rng);

/// Tuples B^j with B^j_i = (prod_{k != j} P_k) * d_i P_j.
std::vector<derham::FormTuple> basis_tuples(const std::vector<Polynomial>& factors);

/// Same as a set, ignoring order and scalar multiples.
bool same_up_to_associates(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b);

Polynomial product_of(const std::vector<Polynomial>& factors, std::size_t arity);

}  // namespace oracle
