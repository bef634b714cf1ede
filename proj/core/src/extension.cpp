#include "nlie/extension.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace nlie {

namespace {

void check_form_shape(const NLieAlgebra& a, const ScalCochain2& omega,
                      const char* where) {
  for (const auto& [key, value] : omega) {
    (void)value;
    if (key.size() != a.arity() ||
        (key.size() > 0 && key[key.size() - 1] >= a.dim()))
      throw std::invalid_argument(std::string(where) +
                                  ": form key shape mismatch");
  }
}

std::string format_grid_point(const CoboundaryGridKey& k) {
  const auto& [xt, yt, z] = k;
  std::ostringstream out;
  out << "(";
  for (int i = 0; i < xt.size(); ++i) out << (i ? "," : "") << xt[i];
  out << " | ";
  for (int i = 0; i < yt.size(); ++i) out << (i ? "," : "") << yt[i];
  out << " | " << z << ")";
  return out.str();
}

}  // namespace

NLieAlgebra build_extension_total(const NLieAlgebra& a,
                                  const ScalCochain2& omega) {
  check_form_shape(a, omega, "build_extension_total");
  const int d = a.dim();
  NLieAlgebra total(a.arity(), d + 1);
  for (const MultiIndex& key : cochain2_keys(a)) {
    Element v(static_cast<std::size_t>(d + 1));
    if (auto it = a.sc().find(key); it != a.sc().end())
      for (std::size_t i = 0; i < it->second.size(); ++i) v[i] = it->second[i];
    if (auto it = omega.find(key); it != omega.end())
      v[static_cast<std::size_t>(d)] = it->second;
    total.set_bracket(key.indices(), std::move(v));
  }
  return total;
}

CentralExtension central_extend(const NLieAlgebra& a,
                                const ScalCochain2& omega) {
  check_form_shape(a, omega, "central_extend");
  ScalCochain3 defect = d2_scalar(a, omega);
  for (const auto& [grid, value] : defect)
    if (!value.is_zero())
      throw std::invalid_argument(
          "central_extend: form is not a 2-cocycle, defect at grid point " +
          format_grid_point(grid));
  return CentralExtension{a, omega, build_extension_total(a, omega), a.dim()};
}

TraceMap extend_trace(const NLieAlgebra& a, const TraceMap& tau) {
  if (static_cast<int>(tau.coeffs.size()) != a.dim())
    throw std::invalid_argument("extend_trace: trace length mismatch");
  Vec coeffs = tau.coeffs;
  coeffs.emplace_back(0);
  return TraceMap{std::move(coeffs)};
}

bool is_trivial_extension(const NLieAlgebra& a, const ScalCochain2& omega) {
  check_form_shape(a, omega, "is_trivial_extension");
  if (!all_zero(d2_scalar(a, omega)))
    throw std::invalid_argument("is_trivial_extension: not a 2-cocycle");
  return coboundary_space(a, 2, Coefficients::scalar)
      .contains(scal2_to_vec(a, omega));
}

bool extensions_equivalent(const NLieAlgebra& a, const ScalCochain2& omega1,
                           const ScalCochain2& omega2) {
  return same_cohomology_class(a, omega1, omega2);
}

CentralExtension induce_extension(const NLieAlgebra& a, const TraceMap& tau,
                                  const ScalCochain2& omega) {
  // induce_cochain2_scalar validates the trace, the cocycle law and the
  // transfer conditions, and certifies its output as a cocycle again
  ScalCochain2 omega_tau = induce_cochain2_scalar(a, tau, omega);
  CentralExtension result = central_extend(induce(a, tau), omega_tau);

  NLieAlgebra other =
      induce(central_extend(a, omega).total, extend_trace(a, tau));
  if (!(other == result.total))
    throw std::logic_error(
        "induce_extension: extending the induced algebra and inducing the "
        "extended algebra disagreed");
  return result;
}

}  // namespace nlie
