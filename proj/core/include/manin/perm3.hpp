#pragma once

#include <array>
#include <string>

namespace manin {

/// A permutation of {1,2,3}, stored as its image sequence.
/// Composition is right-to-left: (s * t)(i) = s(t(i)).
class Perm3 {
 public:
  constexpr Perm3() = default;
  explicit Perm3(std::array<int, 3> image);

  static Perm3 identity() { return Perm3(); }
  static Perm3 t12() { return Perm3({2, 1, 3}); }
  static Perm3 t13() { return Perm3({3, 2, 1}); }
  static Perm3 t23() { return Perm3({1, 3, 2}); }
  static Perm3 c123() { return Perm3({2, 3, 1}); }
  static Perm3 c132() { return Perm3({3, 1, 2}); }

  /// All six elements: id, (12), (13), (23), (123), (132).
  static std::array<Perm3, 6> all();

  int operator()(int i) const { return image_[static_cast<std::size_t>(i - 1)]; }
  const std::array<int, 3>& image() const { return image_; }

  Perm3 inverse() const;
  std::string name() const;

  friend Perm3 operator*(const Perm3& s, const Perm3& t);
  friend bool operator==(const Perm3&, const Perm3&) = default;

 private:
  std::array<int, 3> image_{1, 2, 3};
};

/// Left coset representatives of S2 = <(12)> in S3, in block order.
enum class Coset { id = 0, t13 = 1, t23 = 2 };

inline constexpr std::array<Coset, 3> kCosets{Coset::id, Coset::t13, Coset::t23};

Perm3 representative(Coset c);
std::string coset_name(Coset c);

/// sigma = rep * (swapped ? (12) : id).
struct CosetDecomposition {
  Coset rep = Coset::id;
  bool swapped = false;

  friend bool operator==(const CosetDecomposition&, const CosetDecomposition&) = default;
};

CosetDecomposition coset_decompose(const Perm3& sigma);

}  // namespace manin
