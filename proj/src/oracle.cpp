#include "ect/errors.hpp"
#include "ect/reconstruction.hpp"
#include "ect/sphere.hpp"

namespace ect {

EulerCurve EctOracle::query(const Direction& v) {
  EulerCurve curve = answer(v);
  count_.fetch_add(1);
  std::lock_guard lock(mutex_);
  transcript_.push_back({v, curve});
  return curve;
}

std::vector<EctOracle::Record> EctOracle::transcript() const {
  std::lock_guard lock(mutex_);
  return transcript_;
}

EulerCurve ComplexOracle::answer(const Direction& v) { return sublevel_curve(complex_, v); }

EulerCurve ReplayOracle::answer(const Direction& v) {
  for (const auto& r : records_) {
    if (r.direction.dim() == v.dim() && euclidean_distance(r.direction, v) <= tolerance_) {
      return r.curve;
    }
  }
  throw Error(ErrorKind::UnknownDirection, "direction not present in the recorded transcript");
}

}  // namespace ect
