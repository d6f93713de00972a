#include "frel/algebra.hpp"

#include <algorithm>

#include "frel/errors.hpp"

namespace frel {

double t_norm(TNorm kind, double x, double y) {
  switch (kind) {
    case TNorm::Min:
      return std::min(x, y);
    case TNorm::Product:
      return x * y;
    case TNorm::Lukasiewicz:
      return std::max(x + y - 1.0, 0.0);
  }
  throw InvalidInput("unknown t-norm kind");
}

double residuum(TNorm kind, double x, double y) {
  if (x <= y) return 1.0;
  switch (kind) {
    case TNorm::Min:
      return y;
    case TNorm::Product:
      // x > y >= 0 here, so x > 0 and the quotient is well defined.
      return y / x;
    case TNorm::Lukasiewicz:
      return 1.0 - x + y;
  }
  throw InvalidInput("unknown t-norm kind");
}

const char* tnorm_name(TNorm kind) {
  switch (kind) {
    case TNorm::Min:
      return "min";
    case TNorm::Product:
      return "product";
    case TNorm::Lukasiewicz:
      return "lukasiewicz";
  }
  return "?";
}

TNorm tnorm_from_name(const std::string& name) {
  if (name == "min") return TNorm::Min;
  if (name == "product") return TNorm::Product;
  if (name == "lukasiewicz") return TNorm::Lukasiewicz;
  throw InvalidInput("unknown t-norm \"" + name + "\" (expected min, product or lukasiewicz)");
}

}  // namespace frel
