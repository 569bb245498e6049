#include "manin/perm3.hpp"

#include "manin/exactlin.hpp"

namespace manin {

Perm3::Perm3(std::array<int, 3> image) : image_(image) {
  std::array<bool, 3> seen{};
  for (int v : image_) {
    if (v < 1 || v > 3 || seen[static_cast<std::size_t>(v - 1)]) throw Error("Perm3: not a permutation of {1,2,3}");
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
}

std::array<Perm3, 6> Perm3::all() {
  return {identity(), t12(), t13(), t23(), c123(), c132()};
}

Perm3 Perm3::inverse() const {
  std::array<int, 3> inv{};
  for (int i = 1; i <= 3; ++i) inv[static_cast<std::size_t>((*this)(i) - 1)] = i;
  return Perm3(inv);
}

std::string Perm3::name() const {
  if (*this == identity()) return "id";
  if (*this == t12()) return "(12)";
  if (*this == t13()) return "(13)";
  if (*this == t23()) return "(23)";
  if (*this == c123()) return "(123)";
  return "(132)";
}

Perm3 operator*(const Perm3& s, const Perm3& t) {
  return Perm3({s(t(1)), s(t(2)), s(t(3))});
}

Perm3 representative(Coset c) {
  switch (c) {
    case Coset::id: return Perm3::identity();
    case Coset::t13: return Perm3::t13();
    case Coset::t23: return Perm3::t23();
  }
  return Perm3::identity();
}

std::string coset_name(Coset c) {
  switch (c) {
    case Coset::id: return "id";
    case Coset::t13: return "13";
    case Coset::t23: return "23";
  }
  return "id";
}

CosetDecomposition coset_decompose(const Perm3& sigma) {
  // sigma(3) fixes the coset: id and (12) keep 3, (13)/(123) send it to 1,
  // (23)/(132) send it to 2.
  const Coset rep = sigma(3) == 3 ? Coset::id : sigma(3) == 1 ? Coset::t13 : Coset::t23;
  return {rep, !(representative(rep) == sigma)};
}

}  // namespace manin
