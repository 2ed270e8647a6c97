#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

namespace masseylink::chains {

/// Strictly increasing vertex ids; orientation is the vertex order.
using Simplex = std::vector<int>;
/// Finitely supported integer coefficients on simplexes of one dimension.
using Chain = std::map<Simplex, long long>;
/// Integer values on simplexes, zero off the support.
using Cochain = std::map<Simplex, long long>;

/// Adds coeff * [vertices], sorting the vertices and applying the sign of
/// the sorting permutation. Repeated vertices give zero.
void add_term(Chain& c, Simplex vertices, long long coeff);
Chain add(const Chain& a, const Chain& b, long long scale = 1);
Chain scaled(const Chain& c, long long s);
Chain boundary(const Chain& c);
long long evaluate(const Cochain& a, const Chain& c);
/// Coefficient sum of a 0-chain.
long long augmentation(const Chain& c);
int dimension_of(const Chain& c);  // -1 for the zero chain

class OrderedComplex {
 public:
  OrderedComplex() = default;
  /// Closure of the given simplexes under taking faces.
  static OrderedComplex from_facets(const std::vector<Simplex>& facets);

  int dimension() const { return static_cast<int>(by_dim_.size()) - 1; }
  const std::vector<Simplex>& simplices(int dim) const;
  bool contains(const Simplex& s) const { return all_.count(s) > 0; }
  std::size_t size() const { return all_.size(); }

 private:
  std::vector<std::vector<Simplex>> by_dim_;
  std::set<Simplex> all_;
};

Cochain coboundary(const OrderedComplex& k, const Cochain& a, int p);
Cochain cup(const OrderedComplex& k, const Cochain& a, int p, const Cochain& b, int q);
/// [v0..vm] ∩ a = a([v0..vp]) [vp..vm]
Chain cap(const Chain& c, const Cochain& a, int p);
/// Dual basis cochain u_s.
Cochain basis_cochain(const Simplex& s);
Chain basis_chain(const Simplex& s);

/// Barycentric subdivision K' with the chain maps sd_# and theta_#. Vertex
/// ids of K' index the simplexes of K ordered by (dimension, vertices), so
/// every simplex of K' lists barycenters in increasing dimension.
class Subdivision {
 public:
  explicit Subdivision(const OrderedComplex& k);

  const OrderedComplex& complex() const { return kprime_; }
  const Simplex& carrier(int vertex) const { return carrier_[vertex]; }
  int barycenter(const Simplex& s) const;
  /// theta sends the barycenter of s to the last vertex of s.
  int theta_vertex(int vertex) const { return carrier_[vertex].back(); }

  Chain sd(const Chain& c) const;
  Chain theta(const Chain& c) const;
  Cochain theta_pullback(const Cochain& a, int p) const;
  Cochain sd_pullback(const Cochain& a, int p, const OrderedComplex& k) const;

 private:
  OrderedComplex kprime_;
  std::vector<Simplex> carrier_;
  std::map<Simplex, int> index_;
  mutable std::map<Simplex, Chain> sd_cache_;
  const Chain& sd_simplex(const Simplex& s) const;
};

/// Duality data of a closed oriented triangulated n-manifold.
class ManifoldDuality {
 public:
  explicit ManifoldDuality(OrderedComplex k);

  int dimension() const { return n_; }
  const OrderedComplex& complex() const { return k_; }
  const Subdivision& subdivision() const { return sub_; }
  const Chain& fundamental_cycle() const { return xi_; }

  /// D(s) = sd_#(xi) ∩ theta^#(u_s), an (n-p)-chain of K'.
  const Chain& dual_cell(const Simplex& s) const;
  Chain phi(const Cochain& a, int p) const;
  /// Inverse of phi on C_q(K*); throws InvalidArgument off the image.
  Cochain phi_inverse(const Chain& b, int q) const;
  /// a . b = sd_#(a) ∩ theta^#(phi^{-1}(b)) for a in C_p(K), b in C_q(K*).
  Chain intersection(const Chain& a, int p, const Chain& b, int q) const;

 private:
  OrderedComplex k_;
  Subdivision sub_;
  int n_ = 0;
  Chain xi_;
  Chain sd_xi_;
  mutable std::map<Simplex, Chain> dual_cache_;
};

/// Relative duality for a subcomplex L: C^p(K - N(L)) is spanned by simplexes
/// with no vertex in L, L* consists of the dual cells of simplexes meeting L.
class RelativeDuality {
 public:
  RelativeDuality(const ManifoldDuality& m, const std::vector<Simplex>& l_facets);

  const OrderedComplex& subcomplex() const { return l_; }
  bool in_l(const Simplex& s) const { return l_.contains(s); }
  bool in_l_prime(const Simplex& s) const;
  bool meets_l(const Simplex& s) const;

  Chain reduce(const Chain& c) const;        // mod L
  Chain reduce_prime(const Chain& c) const;  // mod L'
  Chain reduce_dual(const Chain& c) const;   // mod L*, in C_q(K*)
  /// mod the closed star N(L') of L' in K', which carries L*
  Chain reduce_star(const Chain& c) const;
  bool in_star(const Simplex& s) const;
  Cochain phi_bar_inverse(const Chain& b, int q) const;
  Chain intersection(const Chain& a, int p, const Chain& b, int q) const;

 private:
  const ManifoldDuality& m_;
  OrderedComplex l_;
  std::set<int> l_vertices_;
};

/// Both sides of (a ∪ b)(T) = ∂_#(θ_#(θ_#(T · φ(a)) · φ(b))).
struct Prop305Sides {
  long long left = 0;
  long long right = 0;
};
Prop305Sides verify_prop_305(const ManifoldDuality& m, const Chain& t, const Cochain& a, int p,
                             const Cochain& b, int q);

/// Named test manifolds: "s2" (boundary of the 3-simplex), "s3" (boundary of
/// the 4-simplex), "torus" (9-vertex torus), "s2xs1" (staircase product),
/// "circle" (3-vertex circle).
OrderedComplex named_complex(const std::string& name);
std::vector<std::string> complex_names();

OrderedComplex product(const OrderedComplex& a, const OrderedComplex& b);

struct IdentityResult {
  std::string name;
  int cases = 0;
  int failures = 0;
};

/// Runs the identity suite on a named complex with randomized cases drawn
/// from the seed.
std::vector<IdentityResult> run_identity_suite(const std::string& complex_name, unsigned long long seed,
                                               int cases);

}  // namespace masseylink::chains
