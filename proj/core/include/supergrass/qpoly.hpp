#pragma once

#include <vector>

#include "supergrass/rational.hpp"

namespace sgr {

/// Dense univariate polynomial over Q, ascending coefficients.
/// The zero polynomial is the empty vector; degree(zero) = -1.
using QPoly = std::vector<Rat>;

int qp_degree(const QPoly& f);
void qp_trim(QPoly& f);
QPoly qp_add(const QPoly& a, const QPoly& b);
QPoly qp_sub(const QPoly& a, const QPoly& b);
QPoly qp_mul(const QPoly& a, const QPoly& b);
/// Quotient and remainder; b must be nonzero.
std::pair<QPoly, QPoly> qp_divmod(const QPoly& a, const QPoly& b);
bool qp_divides(const QPoly& d, const QPoly& f);
QPoly qp_derivative(const QPoly& f);
QPoly qp_monic(const QPoly& f);
/// Monic gcd; gcd(0, 0) = 0.
QPoly qp_gcd(const QPoly& a, const QPoly& b);
Rat qp_eval(const QPoly& f, const Rat& x);
/// u^deg * f(1/u), trimmed (roots inverted). Requires f(0) != 0.
QPoly qp_reverse(const QPoly& f);
std::string qp_str(const QPoly& f, const std::string& var = "u");

struct QFactor {
    QPoly poly;  // monic irreducible
    int mult = 0;
};

/// Complete factorization over Q of a nonzero polynomial; the constant content
/// is dropped. Factors are monic irreducible, sorted by (degree, coeffs).
std::vector<QFactor> qp_factor(const QPoly& f);

/// Squarefree decomposition (Yun): monic pairwise-coprime squarefree parts.
std::vector<QFactor> qp_squarefree_decomposition(const QPoly& f);

bool qp_is_irreducible(const QPoly& f);

} // namespace sgr
