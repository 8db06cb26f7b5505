#pragma once

// (sigma,tau)-derivations on a quadratic O_K. A Z-linear map with D(1) = 0
// is determined by the image of the generator: D(a + b*gen) = b * D(gen).
// For the two distinct classified endomorphisms every such map satisfies
// the twisted Leibniz law, innerness is decided by exact division in
// Q(sqrt(d)) followed by a lattice membership test, and the module of all
// derivations is free of rank one over O_K.

#include <optional>

#include "sigmatau/endos.hpp"
#include "sigmatau/quadring.hpp"

namespace sigmatau {

class TwistedDerivation {
 public:
  /// Throws Error{SigmaEqualsTau} when sigma and tau coincide.
  TwistedDerivation(QuadRing ring, QuadEndo sigma, QuadEndo tau, QuadInt image_of_gen);

  const QuadRing& ring() const { return ring_; }
  const QuadEndo& sigma() const { return sigma_; }
  const QuadEndo& tau() const { return tau_; }
  const QuadInt& image_of_gen() const { return image_; }

  /// D(a + b*gen) = b * D(gen).
  QuadInt apply(const QuadInt& x) const;

  bool operator==(const TwistedDerivation& o) const {
    return ring_ == o.ring_ && sigma_.kind == o.sigma_.kind &&
           tau_.kind == o.tau_.kind && image_ == o.image_;
  }

 private:
  QuadRing ring_;
  QuadEndo sigma_;
  QuadEndo tau_;
  QuadInt image_;
};

/// Exact test of D(xy) == D(x) tau(y) + sigma(x) D(y) for the Z-linear map
/// with D(gen) = gen_image and D(1) = 0. sigma == tau is allowed here; the
/// law then fails for every nonzero map (ordinary derivations vanish).
bool leibniz_holds(const QuadRing& R, const QuadEndo& sigma, const QuadEndo& tau,
                   const QuadInt& gen_image, const QuadInt& x, const QuadInt& y);

bool leibniz_holds(const TwistedDerivation& D, const QuadInt& x, const QuadInt& y);

/// The inner derivation a -> w * (tau - sigma)(a).
TwistedDerivation inner_of(const QuadRing& R, const QuadEndo& sigma,
                           const QuadEndo& tau, const QuadInt& w);

struct InnerDecision {
  QuadRat candidate;                // D(gen) / ((tau - sigma)(gen)) in Q(sqrt(d))
  std::optional<QuadInt> witness;   // lattice member, when the candidate is one
};

/// Decides innerness: the candidate is the unique possible witness (O_K is a
/// domain and (tau - sigma)(gen) != 0), so D is inner iff it lies in O_K.
InnerDecision inner_witness(const TwistedDerivation& D);

/// Module action c . D.
TwistedDerivation scale(const QuadInt& c, const TwistedDerivation& D);

/// Bimodule action x -> sigma(a1) * D(x) * tau(a2).
TwistedDerivation bimodule_act(const QuadInt& a1, const QuadInt& a2,
                               const TwistedDerivation& D);

/// The rank-one generator E with E(gen) = 1; every derivation D for the same
/// (sigma, tau) equals scale(D(gen), E).
TwistedDerivation free_generator(const QuadRing& R, const QuadEndo& sigma,
                                 const QuadEndo& tau);

}  // namespace sigmatau
