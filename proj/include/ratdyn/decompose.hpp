#ifndef RATDYN_DECOMPOSE_HPP
#define RATDYN_DECOMPOSE_HPP

#include <optional>
#include <string>
#include <vector>

#include "ratdyn/bipoly.hpp"
#include "ratdyn/poly.hpp"
#include "ratdyn/ratmap.hpp"

namespace ratdyn {

/// Largest degree accepted by all_decompositions.
inline constexpr int kDecompositionBudget = 36;
/// Largest node count of an equivalence graph.
inline constexpr int kExploreNodeBudget = 512;

/// A = outer o inner.
struct Decomposition {
  RationalMap outer;  // U
  RationalMap inner;  // V
  bool proper() const { return outer.degree() >= 2 && inner.degree() >= 2; }
};

/// X o B = A o X.
struct SemiconjugacyTriple {
  RationalMap a, x, b;
};

/// num(V(x) - V(y)) normalized; two maps agree on it exactly when they
/// differ by a Mobius map on the left.
BiPoly pencil(const RationalMap& v);
/// V1 = mu o V2 for some Mobius mu.
bool same_up_to_left_mobius(const RationalMap& v1, const RationalMap& v2);

/// A member of the pencil {G(x, y0) / G(x, y1)} of a bivariate polynomial
/// that divides num(V(x) - V(y)) with equal degrees, normalized so that
/// infinity is a pole, the numerator is monic and 0 maps to 0 when finite.
std::optional<RationalMap> pencil_map(const BiPoly& g);

/// Every proper decomposition of A, one per class under
/// (U, V) ~ (U o mu^{-1}, mu o V), ordered by deg V. Candidate inner factors
/// come from the factors of num(A(x) - A(y)) that contain x - y. Throws
/// BudgetExceeded when deg A > kDecompositionBudget.
std::vector<Decomposition> all_decompositions(const RationalMap& a);

/// V o U for A = U o V, with both semiconjugacy identities checked.
RationalMap elementary_transform(const RationalMap& a, const Decomposition& d);

struct ConjugacySearch {
  std::optional<Mobius> mu;  // mu^{-1} o A o mu = B
  bool conclusive = false;   // an absent result is a proof
};

/// Matches rational fixed points (by multiplier), critical points (by local
/// degree) and critical values of B against those of A, three at a time. A
/// missing answer is conclusive when B has three rational marked points or
/// the first multiplier spectra differ.
ConjugacySearch mobius_conjugacy_search(const RationalMap& a, const RationalMap& b);

struct EquivalenceNode {
  RationalMap map;
  Poly m1, m2;                 // multiplier polynomials, s = 1, 2
  int parent = -1;             // BFS tree
  std::optional<Decomposition> via;  // decomposition of the parent that produced this node
  int depth = 0;
  bool unresolved = false;     // a spectrally equal node exists but conjugacy was inconclusive
};

struct EquivalenceEdge {
  int from, to;
  Decomposition witness;  // of nodes[from].map
  RationalMap target;     // V o U, conjugate to nodes[to].map
  bool spectra_preserved;
  bool identities_hold;
};

struct EquivalenceGraph {
  std::vector<EquivalenceNode> nodes;
  std::vector<EquivalenceEdge> edges;
  bool complete = false;  // no new node appeared at the last explored level
  /// Sequence of witnesses from the root to node i.
  std::vector<Decomposition> chain(int i) const;
};

/// Breadth-first search over elementary transformations up to the given
/// depth, merging nodes that are Mobius conjugate.
EquivalenceGraph explore_equivalence(const RationalMap& a, int depth);

/// X o B = A o X.
bool verify_semiconjugacy(const SemiconjugacyTriple& t);

/// Y o A = B o Y and X o B = A o X; then X o Y commutes with A.
bool verify_mutual(const RationalMap& a, const RationalMap& x, const RationalMap& y, const RationalMap& b);

/// W with C(X, B) = C(W): from gcd(num(X(x) - X(y)), num(B(x) - B(y))).
/// The identity when the pair is already primitive.
RationalMap luroth_generator(const RationalMap& x, const RationalMap& b);

/// The curve num(A(x) - X(y)) is irreducible.
bool is_primitive(const SemiconjugacyTriple& t);

struct PrimitiveReduction {
  RationalMap w;   // X = X0 o W
  RationalMap x0;
  RationalMap b0;  // reached from B by the chain below
  std::vector<Decomposition> chain;  // B_k = U o V becomes V o U
};

/// Replaces (X, B) = (X' o W, B' o W) by (X', W o B') until (A, X0, B0) is
/// primitive. Throws std::invalid_argument unless X o B = A o X.
PrimitiveReduction reduce_to_primitive(const SemiconjugacyTriple& t);

}  // namespace ratdyn

#endif  // RATDYN_DECOMPOSE_HPP
