#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace malcev {

using Point = std::uint8_t;

// A transformation of {θ, 1, ..., degree} fixing θ, stored as the image
// array indexed from 0 (θ) to degree. Composition applies the left
// operand first.
class Transformation {
 public:
  static constexpr Point kTheta = 0;
  static constexpr std::size_t kMaxDegree = 255;

  Transformation() = default;

  // The constant map onto θ.
  explicit Transformation(std::size_t degree);

  // images[j - 1] is the image of point j; 0 means θ.
  static Transformation from_images(std::span<int const> images);
  static Transformation from_images(std::initializer_list<int> images);
  static Transformation identity(std::size_t degree);

  std::size_t degree() const noexcept { return img_.empty() ? 0 : img_.size() - 1; }

  Point operator[](std::size_t point) const { return img_[point]; }
  void set(std::size_t point, Point image);

  // First this, then t.
  Transformation then(Transformation const& t) const;
  Transformation operator*(Transformation const& t) const { return then(t); }

  bool is_partial_injective() const;
  std::size_t rank() const;

  std::uint8_t const* data() const noexcept { return img_.data(); }
  std::uint8_t* data() noexcept { return img_.data(); }

  bool operator==(Transformation const&) const = default;
  auto operator<=>(Transformation const&) const = default;

 private:
  std::vector<Point> img_;
};

struct TransformationHash {
  std::size_t operator()(Transformation const& t) const noexcept;
};

}  // namespace malcev
