#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cgrad/groups.hpp"
#include "cgrad/linalg.hpp"
#include "cgrad/scalars.hpp"

namespace cgrad {

/// Sparse coordinates over basis indices, sorted by index, no zero entries.
using Coeffs = std::vector<std::pair<std::size_t, Scalar>>;

struct BasisMorphism {
  std::string name;
  std::size_t source = 0;
  std::size_t target = 0;
};

/// Finite k-linear category given by basis morphisms and structure
/// constants. A one-object category is an algebra.
class LinearCategory {
 public:
  class Builder;

  LinearCategory();

  const Field& field() const;
  std::size_t object_count() const;
  const std::vector<std::string>& object_names() const;
  std::size_t dimension() const;
  const std::vector<BasisMorphism>& basis() const;
  const BasisMorphism& basis(std::size_t i) const;
  std::optional<std::size_t> find(const std::string& name) const;
  /// Index of a basis morphism by name; throws invalid_argument.
  std::size_t index(const std::string& name) const;

  /// Basis morphisms x -> y.
  const std::vector<std::size_t>& hom(std::size_t x, std::size_t y) const;
  /// Basis morphisms with the given source.
  const std::vector<std::size_t>& out_of(std::size_t x) const;

  /// Structure constants of g o f (empty when zero or not composable).
  const Coeffs& compose(std::size_t g, std::size_t f) const;
  const Coeffs& identity(std::size_t object) const;

  /// Free-form label of the construction ("matrix:2", "diagonal:4", ...).
  const std::string& tag() const;
  /// For total algebras: (source, target) of the original morphism behind
  /// each basis vector.
  const std::vector<std::pair<std::size_t, std::size_t>>& block_origin() const;

  bool operator==(const LinearCategory& other) const { return data_ == other.data_; }

 private:
  struct Data;
  friend class Builder;
  explicit LinearCategory(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  std::shared_ptr<const Data> data_;
};

class LinearCategory::Builder {
 public:
  Builder(Field field, std::size_t objects);
  Builder(Field field, std::vector<std::string> object_names);

  std::size_t add(std::string name, std::size_t source, std::size_t target);
  /// Sets g o f. Entries must lie in hom(source f, target g).
  void set_compose(std::size_t g, std::size_t f, Coeffs value);
  void set_identity(std::size_t object, Coeffs value);
  void set_tag(std::string tag);
  void set_block_origin(std::vector<std::pair<std::size_t, std::size_t>> origin);

  std::size_t dimension() const;

  /// Verifies associativity on every composable basis triple and the
  /// identity laws; throws not_associative with a witness.
  LinearCategory build();

 private:
  std::shared_ptr<Data> data_;
};

/// Element of the direct sum of all hom spaces (dense coordinates).
class AlgebraElement {
 public:
  AlgebraElement() = default;
  explicit AlgebraElement(LinearCategory c);

  static AlgebraElement basis(const LinearCategory& c, std::size_t i);
  static AlgebraElement basis(const LinearCategory& c, const std::string& name);
  static AlgebraElement from_coeffs(const LinearCategory& c, const Coeffs& coeffs);
  /// Sum of all identity morphisms.
  static AlgebraElement unit(const LinearCategory& c);

  const LinearCategory& category() const { return cat_; }
  const std::vector<Scalar>& coordinates() const { return coords_; }
  const Scalar& operator[](std::size_t i) const { return coords_[i]; }
  Coeffs coeffs() const;

  bool is_zero() const;
  AlgebraElement operator+(const AlgebraElement& b) const;
  AlgebraElement operator-(const AlgebraElement& b) const;
  AlgebraElement operator-() const;
  AlgebraElement operator*(const Scalar& s) const;
  /// Composition a o b, extended bilinearly (non-composable pairs give 0).
  AlgebraElement operator*(const AlgebraElement& b) const;
  AlgebraElement pow(unsigned exponent) const;
  bool operator==(const AlgebraElement& b) const;
  bool operator!=(const AlgebraElement& b) const { return !(*this == b); }

  /// "E11 + -1*E22", "(1/2*z + 1)*x"; "0" for zero.
  std::string to_string() const;

 private:
  LinearCategory cat_;
  std::vector<Scalar> coords_;
};

/// Sparse product of two coordinate vectors in c.
Coeffs compose_coeffs(const LinearCategory& c, const Coeffs& a, const Coeffs& b);
Coeffs add_coeffs(const Coeffs& a, const Coeffs& b, const Scalar& factor);
Coeffs scale_coeffs(const Coeffs& a, const Scalar& s);

/// Unital algebra map between one-object categories, by images of the
/// source basis.
class AlgebraMorphism {
 public:
  AlgebraMorphism() = default;
  /// Checks unitality and multiplicativity on all basis pairs.
  AlgebraMorphism(LinearCategory source, LinearCategory target, std::vector<Coeffs> images);

  const LinearCategory& source() const { return source_; }
  const LinearCategory& target() const { return target_; }
  const std::vector<Coeffs>& images() const { return images_; }
  AlgebraElement apply(const AlgebraElement& a) const;
  /// Whether the images are linearly independent.
  bool is_injective() const;

 private:
  LinearCategory source_;
  LinearCategory target_;
  std::vector<Coeffs> images_;
};

// ---------------------------------------------------------------------------
// Constructions

/// Matrix units E_rc (row r, column c), E_rc E_kl = delta_ck E_rl.
LinearCategory make_matrix_algebra(std::size_t n, const Field& field);
/// Name of the matrix unit with 1-based row and column.
std::string matrix_unit_name(std::size_t n, std::size_t row, std::size_t col);

/// Basis x^i y^j with (x^i y^j)(x^k y^l) = q^(jk) x^(i+k) y^(j+l), q the
/// field's primitive n-th root.
LinearCategory make_matrix_xy(std::size_t n, const Field& field);
std::string xy_name(std::size_t i, std::size_t j);
/// Images of x^i y^j under x -> sum_k E_{k+1,k} (cyclic), y -> diag(q, ..., q^n);
/// index i*n + j, coordinates over make_matrix_algebra(n).
std::vector<Coeffs> matrix_xy_images(std::size_t n, const Field& field);

/// Lower-triangular matrix units E_rc with r >= c.
LinearCategory make_triangular(std::size_t n, const Field& field);
/// Dirac masses d1..dn with pointwise multiplication.
LinearCategory make_diagonal(std::size_t n, const Field& field);
LinearCategory make_group_algebra(const Group& group, const Field& field);
/// 1, x, ..., x^(p-1) with x^p = 0.
LinearCategory make_truncated_poly(std::size_t p, const Field& field);
/// Direct product of two one-object algebras. Two diagonal algebras give
/// the diagonal algebra of the summed size.
LinearCategory product_algebra(const LinearCategory& a, const LinearCategory& b);
/// One-object algebra on the direct sum of all hom spaces.
LinearCategory total_algebra(const LinearCategory& c);

/// Smallest exponent with nonzero coordinate in a truncated polynomial
/// algebra; throws zero_element.
std::size_t valuation(const AlgebraElement& a);
/// Matrix of b -> a*b over the basis.
Matrix left_multiplication(const AlgebraElement& a);
bool is_invertible(const AlgebraElement& a);

/// Explicit isomorphism from a total algebra of a category with
/// one-dimensional homs and nonzero compositions onto M_n, by rescaling
/// along the star spanning tree at object 0. Throws shape_mismatch.
AlgebraMorphism match_matrix_structure(const LinearCategory& a, std::size_t n);

/// kG -> k^|G| for a finite abelian G, sending the idempotent e_chi to the
/// Dirac mass of chi. Characters are ordered by exponent tuple.
AlgebraMorphism group_algebra_to_diagonal(const Group& group, const Field& field);
/// Coordinates in kG of the idempotents e_chi, in character order.
std::vector<Coeffs> character_idempotents(const Group& group, const Field& field);

/// The path presentation of M_n: arrows x_i: i -> i+1 and y_i: i+1 -> i
/// with phi(x_i) = E_{i+1,i}, phi(y_i) = E_{i,i+1}.
struct QuiverPresentation {
  std::size_t n = 0;
  LinearCategory matrices;
  std::vector<std::string> arrows;  // x1..x_{n-1}, y1..y_{n-1}

  /// Image of a path written composition-style, leftmost applied last
  /// ("x2*x1", "e1"). Throws broken_chain for non-composable paths.
  AlgebraElement evaluate(const std::string& path) const;
  /// Relation values y_i x_i - e_i and x_i y_i - e_{i+1} under phi.
  std::vector<std::pair<std::string, AlgebraElement>> relations() const;
  /// Rank of the span of phi over paths of length < n.
  std::size_t image_rank() const;
};

QuiverPresentation quiver_presentation_matrix(std::size_t n, const Field& field);

}  // namespace cgrad
