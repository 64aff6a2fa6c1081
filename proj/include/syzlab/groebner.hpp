#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "syzlab/poly.hpp"

namespace syz {

/// Homogeneous ideal given by generators (possibly none: the zero ideal).
class Ideal {
 public:
  Ideal(RingPtr ring, Field field, std::vector<Polynomial> generators = {});

  const RingPtr& ring() const { return ring_; }
  const Field& field() const { return field_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }

  /// Generators printed one per line in order; used for hashing and caching.
  std::string to_text() const;

 private:
  RingPtr ring_;
  Field field_;
  std::vector<Polynomial> gens_;
};

struct GroebnerOptions {
  int degree_cap = 30;                   // on the weighted degree of S-pair lcms
  std::uint64_t pair_cap = 1'000'000;    // S-pairs reduced
};

struct GroebnerBasis {
  RingPtr ring;
  Field field;
  std::string order;  // e.g. "grevlex" or "block(3,5)"
  std::vector<Polynomial> basis;
  bool reduced = true;
};

/// Reduced Groebner basis in the ring's monomial order (monic, sorted by
/// increasing leading monomial). Gebauer-Moeller pair criteria, pairs
/// processed by increasing weighted degree.
GroebnerBasis buchberger(const Ideal& ideal, const GroebnerOptions& opts = {});

/// Fully reduced remainder of p modulo g.
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& g);

/// Order tag of a ring: "grevlex" for one block, otherwise the block starts.
std::string order_tag(const Ring& ring);

/// Homogeneous kernel of S -> T/J where f: S -> T and J = source_relations is
/// an ideal of T. Computed by eliminating T's variables from the graph ideal
/// (z_i - f_i) + J in a block order. Returns the reduced Groebner basis of the
/// kernel, which generates it.
Ideal kernel_of_map(const RingMap& f, const Ideal& source_relations, const GroebnerOptions& opts = {});

/// Minimal homogeneous generators of a standard graded ideal, chosen degree by
/// degree from the given generators by linear algebra.
Ideal minimal_generators(const Ideal& ideal);

/// Number of minimal generators in each degree (index = degree).
std::vector<std::size_t> generator_degrees(const Ideal& ideal);

/// dim (S/I)_d counted as standard monomials of degree d.
std::size_t hilbert_function(const GroebnerBasis& g, int d);
std::size_t hilbert_function(const Ideal& ideal, int d, const GroebnerOptions& opts = {});

/// Numerator Q of the Hilbert series Q(z)/(1-z)^n of S/I for a standard graded
/// ring with n variables, computed from the leading-term ideal.
std::vector<long> hilbert_numerator(const GroebnerBasis& g);

/// Smallest d0 >= 0 such that the Hilbert function agrees with the Hilbert
/// polynomial for every d >= d0.
int hilbert_polynomial_start(const GroebnerBasis& g);

/// Linear-algebra route to one graded piece: a basis of ker(S_d -> (T/J)_{d e})
/// where e is the image degree of f. Each column is a coefficient vector over
/// monomials_of_degree(S, d).
std::vector<Polynomial> ideal_in_degree(const RingMap& f, const Ideal& source_relations, int d);

/// Compares the Hilbert polynomial of S/image with the source Hilbert
/// polynomial. `source_h0(d)` must equal the source Hilbert polynomial for
/// every d >= source_stable_from. Both are polynomials of degree <= dim, so
/// dim + 1 agreeing values beyond both stability thresholds decide equality.
bool is_isomorphic_embedding(const GroebnerBasis& image, const std::function<long(int)>& source_h0, int dim,
                             int source_stable_from);

/// 64-bit FNV-1a.
std::uint64_t fnv1a64(std::string_view text);

/// Directory cache of Groebner bases in the textual polynomial syntax. An
/// empty directory disables it.
class GroebnerCache {
 public:
  explicit GroebnerCache(std::string dir) : dir_(std::move(dir)) {}
  /// Honours the SYZLAB_CACHE_DIR environment variable, else `fallback`.
  static GroebnerCache from_environment(const std::string& fallback);

  bool enabled() const { return !dir_.empty(); }
  const std::string& dir() const { return dir_; }

  std::string key(const Ideal& ideal, std::string_view tag) const;
  std::optional<std::vector<Polynomial>> load(const std::string& key, const RingPtr& ring, const Field& field) const;
  void store(const std::string& key, const std::vector<Polynomial>& polys) const;

 private:
  std::string dir_;
};

/// kernel_of_map with an optional cache lookup (keyed by the map, relations,
/// field and order).
Ideal kernel_of_map_cached(const RingMap& f, const Ideal& source_relations, const GroebnerCache& cache,
                           const GroebnerOptions& opts = {});

}  // namespace syz
