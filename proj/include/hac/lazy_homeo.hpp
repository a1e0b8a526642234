#ifndef HAC_LAZY_HOMEO_HPP
#define HAC_LAZY_HOMEO_HPP

#include <memory>
#include <optional>
#include <vector>

#include "hac/metric.hpp"
#include "hac/pl_map.hpp"

namespace hac {

inline constexpr std::size_t kDefaultIterationCap = 65536;  // 2^16

struct EvalStats {
  std::size_t pl_applications = 0;
};

/// Exactly-evaluable homeomorphism oracle: an immutable expression tree over
/// PL atoms. Carries the maps with infinitely many breakpoints (tiled
/// generators, orbit-extension conjugators) that no PLHomeo can hold.
class LazyHomeo {
 public:
  enum class Kind { Atom, Compose, Inverse, Power, Piecewise, Tiled, OrbitExt };

  struct Node {
    Kind kind;
    Interval domain;
    Interval codomain;
    std::optional<PLHomeo> atom;                    // Atom
    std::vector<std::shared_ptr<const Node>> children;  // Compose/Inverse/Power/Piecewise
    long exponent = 0;                              // Power
    std::vector<PLHomeo> pl;                        // Tiled: [scaler, phi_0..]; OrbitExt: [f, g, h0]
    std::optional<Rational> x0;                     // Tiled / OrbitExt
    std::optional<Rational> y0;                     // OrbitExt
    int parity = 0;                                 // OrbitExt

    Node(Kind k, Interval dom, Interval cod)
        : kind(k), domain(std::move(dom)), codomain(std::move(cod)) {}
  };
  using NodePtr = std::shared_ptr<const Node>;

  static LazyHomeo atom(PLHomeo f);
  static LazyHomeo identity(const Interval& iv) { return atom(PLHomeo::identity(iv)); }

  /// f o g; requires g.codomain == f.domain.
  static LazyHomeo compose(const LazyHomeo& f, const LazyHomeo& g);

  static LazyHomeo inverse(const LazyHomeo& h);

  /// n-fold composition, inverse iterates for n < 0; requires an endomorphism.
  static LazyHomeo power(const LazyHomeo& h, long n);

  /// Finite ordered pieces with contiguous domains and codomains.
  static LazyHomeo piecewise(std::vector<LazyHomeo> pieces);

  /// Self-map of [0, x0] equal, on each tile [x_{m+1}, x_m] with
  /// x_m = scaler^{-m}(x0), to scaler^{-m} o phi_{m mod N} o scaler^m.
  /// Requires scaler(x) > x on (0, x0] and phis on [scaler^{-1}(x0), x0].
  static LazyHomeo tiled(PLHomeo scaler, std::vector<PLHomeo> phis, const Rational& x0);

  /// Orbit extension of h0 across the single orbital of f, mapping it to the
  /// single orbital of g: h(x) = g^n(h0(f^{-n}(x))) with f^{-n}(x) in the
  /// fundamental domain bounded by x0 and f(x0).
  static LazyHomeo orbit_extension(PLHomeo f, PLHomeo g, PLHomeo h0, const Rational& x0,
                                   const Rational& y0);

  static LazyHomeo from_node(NodePtr node) { return LazyHomeo(std::move(node)); }

  const Interval& domain() const { return root_->domain; }
  const Interval& codomain() const { return root_->codomain; }
  const NodePtr& root() const { return root_; }

  bool is_endomorphism() const { return domain() == codomain(); }

 private:
  explicit LazyHomeo(NodePtr root) : root_(std::move(root)) {}
  NodePtr root_;
};

/// Exact value at x. Counts PL-atom applications; exceeding the cap throws
/// Error{IterationCapExceeded} (never a silent approximation).
Rational lazy_eval(const LazyHomeo& h, const Rational& x,
                   std::size_t iteration_cap = kDefaultIterationCap,
                   EvalStats* stats = nullptr);

/// Exact preimage under h (structural: every node kind inverts exactly).
Rational lazy_eval_inverse(const LazyHomeo& h, const Rational& y,
                           std::size_t iteration_cap = kDefaultIterationCap,
                           EvalStats* stats = nullptr);

/// Evaluation oracle adapter for the metric functions.
EvalOracle lazy_oracle(const LazyHomeo& h, std::size_t iteration_cap = kDefaultIterationCap);

}  // namespace hac

#endif
