#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mlw/param_deriv.hpp"
#include "mlw/series.hpp"

namespace mlw {

// Exact rational, always normalized (den > 0, gcd 1). Used for registry keys
// so that alpha = 1/2 never misses because of a floating comparison.
struct Rational {
  long long num = 0;
  long long den = 1;

  static Rational make(long long num, long long den);
  /// "3", "-1", "1/2", or a decimal that is exactly a small-denominator rational ("0.5").
  static std::optional<Rational> parse(std::string_view text);
  /// Succeeds only if v is bit-identical to num/den for some den <= max_den.
  static std::optional<Rational> from_double(double v, int max_den = 64);

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  bool is_integer() const { return den == 1; }
  std::string str() const;
  bool operator==(const Rational&) const = default;
};

struct RegistryKey {
  Family family = Family::IntegralML;
  Wrt wrt = Wrt::Alpha;
  Rational alpha;
  std::optional<Rational> beta;  // empty: any admissible beta
};

std::string to_string(const RegistryKey& key);

struct ClosedFormEntry {
  RegistryKey key;
  std::function<double(double x, double beta)> evaluator;
  std::string citation;
  std::string x_domain;
  std::function<bool(double x)> accepts_x;
  std::function<bool(double beta)> accepts_beta;  // only consulted for any-beta keys
  std::vector<double> sample_x;                   // in-domain points for cross-checks
  std::vector<double> sample_beta;                // any-beta keys only
};

class ClosedFormRegistry {
 public:
  static const ClosedFormRegistry& instance();

  const std::vector<ClosedFormEntry>& entries() const { return entries_; }

  /// Exact-beta entry first, then an any-beta entry that admits beta.
  const ClosedFormEntry* find(Family family, Wrt wrt, double alpha, double beta) const;
  /// Entry with exactly this key; throws an unknown-key error.
  const ClosedFormEntry& at(const RegistryKey& key) const;

 private:
  ClosedFormRegistry();
  std::vector<ClosedFormEntry> entries_;
};

/// beta is only read for any-beta keys.
Evaluation closed_form_registry_eval(const RegistryKey& key, double x, double beta = 0.0);

/// A registry entry or, failing that, one of the general reductions
/// applicable at these parameters. Empty when nothing applies.
std::optional<Evaluation> closed_form(const DerivTarget& target, double alpha, double beta, double x);

// Front door used by the CLI: base function (no wrt) or parameter derivative,
// with method selection.
//   auto    registry entry when one matches and x is in its domain, else series
//   series  direct summation
//   closed  registry entry, else a general reduction, else unknown-key error
//   quadrature  integral families, base functions only
struct Query {
  Family family = Family::MittagLeffler;
  std::optional<Wrt> wrt;
  double alpha = 1.0;
  double beta = 1.0;
};

Evaluation evaluate(const Query& q, double x, const EvalOptions& opts = {});

}  // namespace mlw
