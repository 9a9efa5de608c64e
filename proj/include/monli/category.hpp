#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace monli {

enum class Slash { forward, backward };

class Category;
using CategoryPtr = std::shared_ptr<const Category>;

/// Immutable CCG category: either an atom (S, NP, N, PP with an optional
/// bracketed feature) or a functional category result/argument, result\argument.
class Category {
 public:
  static CategoryPtr atomic(std::string name, std::string feature = "");
  static CategoryPtr functional(CategoryPtr result, Slash slash, CategoryPtr argument);

  /// Parses the bracketed notation, e.g. "(S[dcl]\NP)/NP". Unknown atom
  /// names and malformed input raise Error with the character offset.
  static CategoryPtr parse(std::string_view text);

  /// Closed set of atomic names accepted by parse.
  static const std::vector<std::string>& atom_names();

  bool is_atomic() const { return atomic_; }
  bool is_functional() const { return !atomic_; }

  const std::string& atom() const { return name_; }
  const std::string& feature() const { return feature_; }

  const CategoryPtr& result() const { return result_; }
  Slash slash() const { return slash_; }
  const CategoryPtr& argument() const { return argument_; }

  /// True for X/X and X\X (adjunct shape), feature-exact.
  bool is_modifier_shape() const;

  std::string to_string() const;

  bool equals(const Category& other) const;

 private:
  Category() = default;

  bool atomic_ = true;
  std::string name_;
  std::string feature_;
  CategoryPtr result_;
  Slash slash_ = Slash::forward;
  CategoryPtr argument_;
};

inline bool operator==(const Category& a, const Category& b) { return a.equals(b); }
inline bool operator!=(const Category& a, const Category& b) { return !a.equals(b); }

}  // namespace monli
