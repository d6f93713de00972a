#ifndef FREL_ALGEBRA_HPP
#define FREL_ALGEBRA_HPP

#include <string>

namespace frel {

/// Left-continuous t-norms the solver supports.
enum class TNorm {
  Min,          // T(x,y) = min(x,y)
  Product,      // T(x,y) = x*y
  Lukasiewicz,  // T(x,y) = max(x+y-1, 0)
};

/// Default comparison tolerance for decisions such as "is this defect zero".
inline constexpr double kDefaultEpsilon = 1e-9;

/// T(x, y) for x, y in [0,1].
double t_norm(TNorm kind, double x, double y);

/// Residual implicator of the t-norm: I(x, y) = sup{ z : T(x,z) <= y }.
/// Goedel for min, Goguen for product, bounded difference for Lukasiewicz.
double residuum(TNorm kind, double x, double y);

const char* tnorm_name(TNorm kind);

/// Parses "min" / "product" / "lukasiewicz" (exact, lowercase).
/// Throws InvalidInput on anything else.
TNorm tnorm_from_name(const std::string& name);

}  // namespace frel

#endif  // FREL_ALGEBRA_HPP
