#include "malcev/transformation.hpp"

#include <string>

#include "malcev/error.hpp"
#include "malcev/kernels.hpp"

namespace malcev {

Transformation::Transformation(std::size_t degree) : img_(degree + 1, kTheta) {
  if (degree > kMaxDegree) {
    throw Error(ErrorKind::InvalidArgument,
                "degree " + std::to_string(degree) + " exceeds " +
                    std::to_string(kMaxDegree));
  }
}

Transformation Transformation::from_images(std::span<int const> images) {
  Transformation t(images.size());
  for (std::size_t j = 0; j < images.size(); ++j) {
    int image = images[j];
    if (image < 0 || static_cast<std::size_t>(image) > images.size()) {
      throw Error(ErrorKind::DegreeMismatch,
                  "image " + std::to_string(image) + " of point " +
                      std::to_string(j + 1) + " is outside 0.." +
                      std::to_string(images.size()));
    }
    t.img_[j + 1] = static_cast<Point>(image);
  }
  return t;
}

Transformation Transformation::from_images(std::initializer_list<int> images) {
  return from_images(std::span<int const>(images.begin(), images.size()));
}

Transformation Transformation::identity(std::size_t degree) {
  Transformation t(degree);
  for (std::size_t j = 1; j <= degree; ++j) {
    t.img_[j] = static_cast<Point>(j);
  }
  return t;
}

void Transformation::set(std::size_t point, Point image) {
  if (point == 0 || point > degree() || image > degree()) {
    throw Error(ErrorKind::DegreeMismatch, "point out of range");
  }
  img_[point] = image;
}

Transformation Transformation::then(Transformation const& t) const {
  if (t.degree() != degree()) {
    throw Error(ErrorKind::DegreeMismatch,
                "cannot compose degree " + std::to_string(degree()) +
                    " with degree " + std::to_string(t.degree()));
  }
  Transformation out;
  out.img_.resize(img_.size());
  kernels::active().compose(img_.data(), t.img_.data(), out.img_.data(),
                            img_.size());
  return out;
}

bool Transformation::is_partial_injective() const {
  std::vector<bool> seen(img_.size(), false);
  for (std::size_t j = 1; j < img_.size(); ++j) {
    Point p = img_[j];
    if (p == kTheta) {
      continue;
    }
    if (seen[p]) {
      return false;
    }
    seen[p] = true;
  }
  return true;
}

std::size_t Transformation::rank() const {
  std::vector<bool> seen(img_.size(), false);
  std::size_t count = 0;
  for (std::size_t j = 1; j < img_.size(); ++j) {
    Point p = img_[j];
    if (p != kTheta && !seen[p]) {
      seen[p] = true;
      ++count;
    }
  }
  return count;
}

std::size_t TransformationHash::operator()(Transformation const& t) const noexcept {
  std::size_t h = 1469598103934665603ull;
  std::uint8_t const* d = t.data();
  for (std::size_t j = 0; j <= t.degree(); ++j) {
    h = (h ^ d[j]) * 1099511628211ull;
  }
  return h;
}

}  // namespace malcev
