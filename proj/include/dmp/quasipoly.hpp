#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "dmp/factored_rational.hpp"
#include "dmp/numeric.hpp"

namespace dmp {

/// One periodic piece of a quasi-polynomial: contributes values[n mod modulus] * n^power.
struct QuasiComponent {
  std::uint64_t modulus = 1;
  unsigned power = 0;
  std::vector<Rational> values;

  friend bool operator==(const QuasiComponent&, const QuasiComponent&) = default;
};

enum class ExtractionRoute {
  automatic,    // per_residue when the period fits residue_limit, else structured
  per_residue,  // one interpolating polynomial per residue class mod the period
  structured,   // one component per (root order d, power), fitted jointly
};

/// A function of n given by one polynomial per residue class mod period().
///
/// Stored as a sum of periodic components rather than a period x (degree+1)
/// table: the per_residue route produces one component of modulus period()
/// per power, while the structured route produces components whose moduli
/// are root orders d and whose value tables lie in the span of the primitive
/// d-th roots of unity. coefficients(r) materializes the table row for any r.
class QuasiPolynomial {
 public:
  QuasiPolynomial(Integer period, unsigned degree, std::vector<QuasiComponent> components, ExtractionRoute route);

  const Integer& period() const noexcept { return period_; }
  unsigned degree() const noexcept { return degree_; }
  const std::vector<QuasiComponent>& components() const noexcept { return components_; }
  ExtractionRoute route() const noexcept { return route_; }

  // From this n on the quasi-polynomial equals the series coefficients.
  std::uint64_t validity_threshold() const noexcept { return threshold_; }
  // Indices below the threshold where the two disagree.
  const std::vector<std::uint64_t>& exceptional_indices() const noexcept { return exceptional_; }
  void set_validity(std::uint64_t threshold, std::vector<std::uint64_t> exceptional);

  // Coefficients of n^0..n^degree for n = residue mod period.
  std::vector<Rational> coefficients(const Integer& residue) const;

  // Highest power carrying a nonzero coefficient at some residue (0 for the zero function).
  unsigned observed_degree() const;

  // Smallest period of the coefficient of n^power as a function of n.
  Integer coefficient_period(unsigned power) const;

 private:
  Integer period_;
  unsigned degree_;
  std::vector<QuasiComponent> components_;
  ExtractionRoute route_;
  std::uint64_t threshold_ = 0;
  std::vector<std::uint64_t> exceptional_;
};

/// Whether two quasi-polynomials define the same function. Compares residue
/// tables directly when the joint period is at most `residue_limit`, or
/// components when both came from the structured route.
bool equivalent(const QuasiPolynomial& a, const QuasiPolynomial& b, std::uint64_t residue_limit = 1'000'000);

struct ExtractOptions {
  ExtractionRoute route = ExtractionRoute::automatic;
  // First sample index; defaults to (and must not be below) the validity threshold.
  std::optional<std::uint64_t> offset;
  // Largest period handled residue by residue.
  std::uint64_t residue_limit = 5040;
};

/// Recovers the quasi-polynomial whose values are the series coefficients of
/// the reduced function `g` from numerator degree + 1 onward.
///
/// Samples are exact series coefficients and every fit is solved exactly.
/// per_residue fits degree_bound+1 points n = b_r, b_r + L, ... in each residue
/// class r and checks 3 more points per class. structured fits all components
/// at once on consecutive samples and checks 3 held-out samples per residue
/// when the period is at most residue_limit, otherwise 3 per unknown.
/// Throws FitValidationError when a held-out sample disagrees.
QuasiPolynomial extract_quasipoly(const FactoredRational& g, unsigned degree_bound, const ExtractOptions& options = {});

Rational eval_quasipoly(const QuasiPolynomial& qp, const Integer& n);

struct LeadingTermReport {
  unsigned degree = 0;           // the slot examined: qp.degree()
  unsigned observed_degree = 0;  // highest nonzero slot
  bool shared = false;           // same leading coefficient at every residue
  std::optional<Rational> shared_value;
  // Leading coefficient at each residue, listed when the period is small
  // enough to enumerate; otherwise empty and `shared` follows from the
  // coefficient's period.
  std::vector<Rational> per_residue;
};

LeadingTermReport leading_term_report(const QuasiPolynomial& qp, std::uint64_t residue_limit = 5040);

/// Coefficient of n^(o-1) contributed by the pole of order o at q = 1:
/// lim_{q->1} (1-q)^o g(q) / (o-1)!. nullopt when g has no pole at 1.
std::optional<Rational> pole_at_one_leading_coefficient(const FactoredRational& g);

/// Ramanujan's sum c_d(x) = sum of the x-th powers of the primitive d-th roots of unity.
Integer ramanujan_sum(unsigned d, std::uint64_t x);

}  // namespace dmp
